use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use wsapprox::algorithms::gamma_exponents;
use wsapprox::{
    approximate_biobjective, approximate_grid, approximate_with_ptas, compute_bounds,
    expected_grid_calls, ptas_guarantee, BiobjectiveRun, Direction, Error, GridRun,
    GuaranteeFamily, Instance, Rational, Solution, SolverHandle,
};

use crate::error::{CliError, CliResult};
use crate::io::{emit, instance_value, parse_rational, read_instance, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Grid,
    Bisect,
    Ptas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverKind {
    Exact,
    Adversarial,
}

#[derive(Debug, Args)]
pub struct ApproximateArgs {
    #[arg(long, value_enum)]
    algorithm: Algorithm,
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, value_parser = parse_rational)]
    epsilon: Rational,
    /// Solver contract; ignored by ptas, which uses 1 + tau
    #[arg(long, value_parser = parse_rational)]
    sigma: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    tau: Option<Rational>,
    #[arg(long, value_enum, default_value = "exact")]
    solver: SolverKind,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include the grid-cell to representative map
    #[arg(long)]
    cells: bool,
}

fn solution_value(s: &Solution) -> Value {
    json!({ "id": s.id, "f": s.image })
}

fn build_solver<'a>(inst: &'a Instance, kind: SolverKind, sigma: Rational) -> CliResult<SolverHandle<'a>> {
    match (inst, kind) {
        (Instance::Explicit(e), SolverKind::Exact) => Ok(SolverHandle::exact(e).relaxed(sigma)?),
        (Instance::Explicit(e), SolverKind::Adversarial) => Ok(SolverHandle::adversarial(e, sigma)?),
        (Instance::Graph(g), SolverKind::Exact) => Ok(SolverHandle::graph(g).relaxed(sigma)?),
        (Instance::Graph(_), SolverKind::Adversarial) => {
            Err(CliError::usage("--solver adversarial needs an explicit instance"))
        }
    }
}

fn grid_report(run: &GridRun, fam: &GuaranteeFamily, cells: Option<Value>) -> Value {
    let weights: Vec<Value> = run
        .points
        .iter()
        .zip(&run.answers)
        .enumerate()
        .map(|(i, (g, a))| {
            json!({ "index": i, "weight": g.weight, "exponents": g.exponents, "answer": solution_value(a) })
        })
        .collect();
    json!({
        "eps_prime": run.eps_prime,
        "u": run.u,
        "guarantee": fam,
        "ws_calls": run.ws_calls,
        "weights_issued": weights,
        "result": run.result.iter().map(solution_value).collect::<Vec<_>>(),
        "instrumentation": { "expected_ws_calls": expected_grid_calls(&run.u) },
        "cells": cells,
    })
}

fn bisect_report(run: &BiobjectiveRun, fam: &GuaranteeFamily, cells: Option<Value>) -> Value {
    let weights: Vec<Value> = run
        .issued
        .iter()
        .zip(&run.answers)
        .enumerate()
        .map(|(i, ((t, w), a))| {
            json!({
                "index": i,
                "t": t,
                "weight": w,
                "exponents": gamma_exponents(run.u2, *t),
                "answer": solution_value(a),
            })
        })
        .collect();
    json!({
        "eps_prime": run.eps_prime,
        "u": [run.u1, run.u2],
        "guarantee": fam,
        "ws_calls": run.ws_calls,
        "weights_issued": weights,
        "result": run.result.iter().map(solution_value).collect::<Vec<_>>(),
        "instrumentation": {
            "gamma_count": run.gamma_count,
            "tree_nodes": run.tree_nodes,
            "two_child_nodes": run.two_child_nodes,
            "tree_height": run.tree_height,
            "tree_size_bound": run.tree_size_bound(),
        },
        "cells": cells,
    })
}

pub fn run(args: ApproximateArgs) -> CliResult<u8> {
    let inst = read_instance(&args.instance)?;
    if inst.direction() == Direction::Max {
        return Err(Error::MaximizationUnsupported.into());
    }
    if args.tau.is_some() && args.algorithm != Algorithm::Ptas {
        return Err(CliError::usage("--tau only applies to --algorithm ptas"));
    }
    let bounds = compute_bounds(&inst);
    let p = inst.p();
    let sigma = match args.algorithm {
        Algorithm::Ptas => {
            if args.sigma.is_some() {
                return Err(CliError::usage("ptas derives sigma from --tau; drop --sigma"));
            }
            let tau = args.tau.clone().ok_or_else(|| CliError::usage("ptas needs --tau"))?;
            Rational::one() + tau
        }
        _ => args.sigma.clone().unwrap_or_else(Rational::one),
    };
    let solver = build_solver(&inst, args.solver, sigma.clone())?;

    let mut body = match args.algorithm {
        Algorithm::Grid | Algorithm::Ptas => {
            let (run, fam) = if args.algorithm == Algorithm::Grid {
                let run = approximate_grid(&solver, &bounds, &args.epsilon)?;
                let fam = run.guarantee();
                (run, fam)
            } else {
                let tau = args.tau.as_ref().expect("checked above");
                let run = approximate_with_ptas(&solver, &bounds, &args.epsilon, tau)?;
                (run, ptas_guarantee(&args.epsilon, tau, p)?)
            };
            let cells = args.cells.then(|| json!(run.cells(&bounds)));
            grid_report(&run, &fam, cells)
        }
        Algorithm::Bisect => {
            let run = approximate_biobjective(&solver, &bounds, &args.epsilon)?;
            let fam = GuaranteeFamily::disjunctive(args.epsilon.clone())?;
            let cells = args.cells.then(|| json!(run.cells(&bounds)));
            bisect_report(&run, &fam, cells)
        }
    };

    let obj = body.as_object_mut().expect("report is an object");
    if !args.cells {
        obj.remove("cells");
    }
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("command".into(), json!("approximate"));
    obj.insert(
        "inputs".into(),
        json!({
            "algorithm": args.algorithm.to_possible_value().map(|v| v.get_name().to_string()),
            "instance": args.instance.display().to_string(),
            "epsilon": args.epsilon,
            "sigma": sigma,
            "tau": args.tau,
            "solver": args.solver.to_possible_value().map(|v| v.get_name().to_string()),
        }),
    );
    obj.insert("instance".into(), instance_value(&inst));
    obj.insert("p".into(), json!(p));
    obj.insert("bounds".into(), json!(bounds));
    emit(&body, args.out.as_ref())?;
    Ok(crate::error::OK)
}
