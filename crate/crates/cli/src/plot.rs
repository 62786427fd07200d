use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use serde_json::Value;
use wsapprox::algorithms::grid_cells;
use wsapprox::{pareto_front, supported_set, Bounds, GridCell, Rational};

use crate::error::{CliError, CliResult, OK};
use crate::io::{feasible_set, instance_from_value, read_json};

#[derive(Debug, Args)]
pub struct ExportPlotArgs {
    #[arg(long)]
    from_report: PathBuf,
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long, default_value_t = 100_000)]
    enumeration_limit: usize,
}

const POINT_HEADER: [&str; 4] = ["id", "f1", "f2", "role"];
const WEIGHT_HEADER: [&str; 6] = ["index", "w1", "w2", "i1", "i2", "answer"];
const CELL_HEADER: [&str; 7] = ["weight_index", "level", "lower1", "lower2", "upper1", "upper2", "representative"];

struct Tables {
    points: Vec<Vec<String>>,
    weights: Vec<Vec<String>>,
    cells: Vec<Vec<String>>,
}

fn malformed(what: &str) -> CliError {
    CliError::input(format!("report field {what} is missing or malformed"))
}

fn field<T: serde::de::DeserializeOwned>(report: &Value, key: &str) -> CliResult<T> {
    report.get(key).cloned().and_then(|v| serde_json::from_value(v).ok()).ok_or_else(|| malformed(key))
}

struct IssuedWeight {
    weight: Vec<Rational>,
    exponents: Vec<u32>,
    answer: String,
}

fn issued(report: &Value) -> CliResult<Vec<IssuedWeight>> {
    let list = report.get("weights_issued").and_then(Value::as_array).ok_or_else(|| malformed("weights_issued"))?;
    list.iter()
        .map(|w| {
            Ok(IssuedWeight {
                weight: field(w, "weight")?,
                exponents: field(w, "exponents")?,
                answer: w.pointer("/answer/id").and_then(Value::as_str).ok_or_else(|| malformed("answer"))?.to_owned(),
            })
        })
        .collect()
}

fn tables(report: &Value, limit: usize) -> CliResult<Tables> {
    let p: usize = field(report, "p")?;
    if p != 2 {
        return Err(CliError::usage(format!("plot export needs p = 2, report has p = {p}")));
    }
    let inst = instance_from_value(report.get("instance").ok_or_else(|| malformed("instance"))?)?;
    let all = feasible_set(inst, limit)?;
    let output: BTreeSet<String> = report
        .get("result")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("result"))?
        .iter()
        .map(|s| s.get("id").and_then(Value::as_str).map(str::to_owned).ok_or_else(|| malformed("result")))
        .collect::<CliResult<_>>()?;
    let pareto = pareto_front(&all);
    let supported = supported_set(&all);

    let points = all
        .solutions()
        .iter()
        .map(|s| {
            let roles: Vec<&str> = [("pareto", &pareto), ("supported", &supported), ("output", &output)]
                .into_iter()
                .filter(|(_, set)| set.contains(&s.id))
                .map(|(name, _)| name)
                .collect();
            let role = if roles.is_empty() { "other".to_owned() } else { roles.join("+") };
            vec![s.id.clone(), s.f[0].to_string(), s.f[1].to_string(), role]
        })
        .collect();

    let issued = issued(report)?;
    let weights = issued
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut row = vec![i.to_string()];
            row.extend(w.weight.iter().map(Rational::to_string));
            row.extend(w.exponents.iter().map(u32::to_string));
            row.push(w.answer.clone());
            row
        })
        .collect();

    let cells: Vec<GridCell> = match report.get("cells") {
        Some(v) => serde_json::from_value(v.clone()).map_err(|_| malformed("cells"))?,
        None => {
            let bounds: Bounds = field(report, "bounds")?;
            let eps_prime: Rational = field(report, "eps_prime")?;
            let entries: Vec<(&[u32], &str)> =
                issued.iter().map(|w| (w.exponents.as_slice(), w.answer.as_str())).collect();
            grid_cells(&bounds, &eps_prime, &entries)
        }
    };
    let cells = cells
        .into_iter()
        .map(|c| {
            let mut row = vec![c.weight_index.to_string(), c.level.to_string()];
            row.extend(c.lower.iter().chain(&c.upper).map(Rational::to_string));
            row.push(c.representative);
            row
        })
        .collect();
    Ok(Tables { points, weights, cells })
}

fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let fail = |e: csv::Error| CliError::input(format!("cannot write {}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(fail)?;
    w.write_record(header).map_err(fail)?;
    for row in rows {
        w.write_record(row).map_err(fail)?;
    }
    w.flush().map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}

pub fn run(args: ExportPlotArgs) -> CliResult<u8> {
    let report = read_json(&args.from_report)?;
    let empty = report.as_object().is_some_and(|o| o.is_empty());
    let t = if empty {
        Tables { points: Vec::new(), weights: Vec::new(), cells: Vec::new() }
    } else {
        tables(&report, args.enumeration_limit)?
    };
    fs::create_dir_all(&args.out_dir)
        .map_err(|e| CliError::input(format!("cannot create {}: {e}", args.out_dir.display())))?;
    write_csv(&args.out_dir.join("points.csv"), &POINT_HEADER, &t.points)?;
    write_csv(&args.out_dir.join("weights.csv"), &WEIGHT_HEADER, &t.weights)?;
    write_csv(&args.out_dir.join("cells.csv"), &CELL_HEADER, &t.cells)?;
    Ok(OK)
}
