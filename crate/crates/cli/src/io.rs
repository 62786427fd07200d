use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use wsapprox::instances::json::{instance_to_json, parse_instance};
use wsapprox::{enumerate_graph, ExplicitInstance, Instance, Rational};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

pub fn read_json(path: &Path) -> CliResult<Value> {
    serde_json::from_str(&read_text(path)?)
        .map_err(|e| CliError::input(format!("{} is not valid JSON: {e}", path.display())))
}

pub fn read_instance(path: &Path) -> CliResult<Instance> {
    Ok(parse_instance(&read_text(path)?)?)
}

pub fn instance_value(inst: &Instance) -> Value {
    serde_json::from_str(&instance_to_json(inst)).expect("instance JSON is valid")
}

pub fn instance_from_value(v: &Value) -> CliResult<Instance> {
    Ok(parse_instance(&v.to_string())?)
}

/// All feasible solutions as an explicit instance; graphs are enumerated.
pub fn feasible_set(inst: Instance, limit: usize) -> CliResult<ExplicitInstance> {
    match inst {
        Instance::Explicit(e) => Ok(e),
        Instance::Graph(g) => Ok(enumerate_graph(&g, limit)?),
    }
}

/// Pretty JSON with a trailing newline, to `out` or stdout.
pub fn emit(value: &Value, out: Option<&PathBuf>) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    emit_text(&text, out)
}

pub fn emit_text(text: &str, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
