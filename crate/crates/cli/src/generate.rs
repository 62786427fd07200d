use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use wsapprox::instances::json::instance_to_json;
use wsapprox::{
    gen_max_counterexample, gen_random_explicit, gen_random_graph, gen_tightness_min, GraphKind,
    Instance, Rational,
};

use crate::error::{CliResult, OK};
use crate::io::{emit_text, parse_rational};

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    family: Generator,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    ShortestPath,
    SpanningTree,
}

#[derive(Debug, Subcommand)]
pub enum Generator {
    /// Unit points y1..yp plus the unsupported point ytilde
    Tightness {
        #[arg(long)]
        p: usize,
        #[arg(long, value_parser = parse_rational)]
        m: Rational,
    },
    /// Maximization instance x1..xp plus the unsupported point xtilde
    MaxCounterexample {
        #[arg(long)]
        p: usize,
        #[arg(long, value_parser = parse_rational)]
        m: Rational,
    },
    RandomExplicit {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        low: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "100")]
        high: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    RandomGraph {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        arcs: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        low: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "10")]
        high: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

pub fn run(args: GenerateArgs) -> CliResult<u8> {
    let inst: Instance = match args.family {
        Generator::Tightness { p, m } => gen_tightness_min(p, &m)?.into(),
        Generator::MaxCounterexample { p, m } => gen_max_counterexample(p, &m)?.into(),
        Generator::RandomExplicit { p, n, low, high, seed } => gen_random_explicit(p, n, &low, &high, seed)?.into(),
        Generator::RandomGraph { kind, nodes, arcs, p, low, high, seed } => {
            let kind = match kind {
                Kind::ShortestPath => GraphKind::ShortestPath,
                Kind::SpanningTree => GraphKind::SpanningTree,
            };
            gen_random_graph(nodes, arcs, p, &low, &high, seed, kind)?.into()
        }
    };
    emit_text(&instance_to_json(&inst), args.out.as_ref())?;
    Ok(OK)
}
