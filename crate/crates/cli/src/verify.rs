use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{ArgGroup, Args, ValueEnum};
use serde_json::{json, Value};
use wsapprox::{verify_approximation, GuaranteeFamily, Rational};

use crate::error::{CliError, CliResult, NOT_COVERED, OK};
use crate::io::{emit, feasible_set, parse_rational, read_instance, read_json, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Multifactor,
    Uniform,
    Disjunctive,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("candidates").required(true).args(["solutions", "from_report"])))]
pub struct VerifyArgs {
    #[arg(long)]
    instance: PathBuf,
    /// JSON list of solution ids, or an object with an "ids" list
    #[arg(long)]
    solutions: Option<PathBuf>,
    /// Use the result set of an `approximate` report
    #[arg(long)]
    from_report: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, value_parser = parse_rational)]
    epsilon: Option<Rational>,
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    sigma: Rational,
    /// Raw sum bound (multifactor) or per-objective bound (uniform)
    #[arg(long, value_parser = parse_rational, conflicts_with = "epsilon")]
    sum_bound: Option<Rational>,
    #[arg(long, default_value_t = 100_000)]
    enumeration_limit: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn string_list(v: &Value) -> Option<Vec<String>> {
    v.as_array()?.iter().map(|x| x.as_str().map(str::to_owned)).collect()
}

fn candidate_ids(args: &VerifyArgs) -> CliResult<BTreeSet<String>> {
    let (path, ids) = if let Some(path) = &args.solutions {
        let doc = read_json(path)?;
        let ids = string_list(&doc).or_else(|| doc.get("ids").and_then(string_list));
        (path, ids)
    } else {
        let path = args.from_report.as_ref().expect("clap requires one source");
        let doc = read_json(path)?;
        let ids = doc.get("result").and_then(Value::as_array).and_then(|r| {
            r.iter().map(|s| s.get("id").and_then(Value::as_str).map(str::to_owned)).collect()
        });
        (path, ids)
    };
    ids.map(|v| v.into_iter().collect())
        .ok_or_else(|| CliError::input(format!("{} holds no list of solution ids", path.display())))
}

fn family(args: &VerifyArgs, p: usize) -> CliResult<GuaranteeFamily> {
    let need_eps = || args.epsilon.clone().ok_or_else(|| CliError::usage("--epsilon or --sum-bound is required"));
    let fam = match (args.family, &args.sum_bound) {
        (Family::Multifactor, Some(s)) => GuaranteeFamily::multi_factor_with_sum_bound(args.sigma.clone(), s.clone(), p)?,
        (Family::Multifactor, None) => GuaranteeFamily::multi_factor(args.sigma.clone(), need_eps()?, p)?,
        (Family::Uniform, Some(b)) => GuaranteeFamily::uniform_with_bound(b.clone(), p)?,
        (Family::Uniform, None) => GuaranteeFamily::uniform(args.sigma.clone(), need_eps()?, p)?,
        (Family::Disjunctive, Some(_)) => {
            return Err(CliError::usage("--sum-bound does not apply to the disjunctive family"))
        }
        (Family::Disjunctive, None) => {
            if p != 2 {
                return Err(CliError::usage(format!("the disjunctive family needs p = 2, got {p}")));
            }
            GuaranteeFamily::disjunctive(need_eps()?)?
        }
    };
    Ok(fam)
}

pub fn run(args: VerifyArgs) -> CliResult<u8> {
    let inst = read_instance(&args.instance)?;
    let fam = family(&args, inst.p())?;
    let ids = candidate_ids(&args)?;
    let all = feasible_set(inst, args.enumeration_limit)?;
    if let Some(missing) = ids.iter().find(|id| all.get(id).is_none()) {
        return Err(CliError::input(format!("solution {missing:?} is not in the instance")));
    }
    let report = verify_approximation(&ids, &all, &fam)?;
    let ok = report.ok;
    let mut body = json!(report);
    let obj = body.as_object_mut().expect("report is an object");
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("command".into(), json!("verify"));
    obj.insert("candidates".into(), json!(ids));
    obj.insert("description".into(), json!(fam.to_string()));
    emit(&body, args.out.as_ref())?;
    Ok(if ok { OK } else { NOT_COVERED })
}
