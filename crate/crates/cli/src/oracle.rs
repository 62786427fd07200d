use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::json;
use wsapprox::oracles::{support_analysis, support_analysis_biobjective};
use wsapprox::{pareto_front, supported_set, verify_max_impossibility, Error, Instance};

use crate::error::{CliError, CliResult, OK};
use crate::io::{emit, feasible_set, read_instance, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Query {
    Pareto,
    Supported,
    MaxImpossibility,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, value_enum)]
    what: Query,
    #[arg(long, default_value_t = 100_000)]
    enumeration_limit: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: OracleArgs) -> CliResult<u8> {
    let inst = read_instance(&args.instance)?;
    let mut body = match args.what {
        Query::Pareto => {
            let all = feasible_set(inst, args.enumeration_limit)?;
            json!({ "what": "pareto", "ids": pareto_front(&all) })
        }
        Query::Supported => {
            let all = feasible_set(inst, args.enumeration_limit)?;
            let analysis = if all.p() == 2 { support_analysis_biobjective(&all)? } else { support_analysis(&all) };
            json!({ "what": "supported", "ids": supported_set(&all), "analysis": analysis })
        }
        Query::MaxImpossibility => {
            let Instance::Explicit(e) = inst else {
                return Err(CliError::input("max-impossibility needs an explicit instance"));
            };
            let holds = verify_max_impossibility(&e).map_err(|err| match err {
                Error::ContractViolation(m) => CliError::input(format!("not a max construction: {m}")),
                other => other.into(),
            })?;
            json!({ "what": "max-impossibility", "holds": holds })
        }
    };
    let obj = body.as_object_mut().expect("output is an object");
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("command".into(), json!("oracle"));
    emit(&body, args.out.as_ref())?;
    Ok(OK)
}
