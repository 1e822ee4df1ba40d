use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diamlab::bounds::{solve_threshold_p, ThresholdForm};
use diamlab::graph::{FamilyKind, GraphFamily, PartitionShape};
use diamlab::rational::{format_rational, parse_rational, to_f64, Rational};
use num_rational::BigRational;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "diamlab", version, about = "Diameter bounds and experiments for random graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form bounds, one row per applicable result.
    Bounds(PointArgs),
    /// Exact simple and Turán sieve bounds.
    Sieve(ExactArgs),
    /// Exact probability by enumerating every graph.
    Exact(ExactArgs),
    /// Monte Carlo estimate.
    Simulate(SimulateArgs),
    /// Grid over n and p, one row per cell.
    Sweep(SweepArgs),
    /// Edge probability for a threshold constant across an n-grid.
    Threshold(ThresholdArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// simple, directed, kpartite, directed-kpartite, bipartite, directed-bipartite
    #[arg(long)]
    pub family: FamilyKind,
    /// Part sizes, e.g. 2,2,3.
    #[arg(long, conflicts_with_all = ["n", "k"])]
    pub shape: Option<PartitionShape>,
    /// Vertex count.
    #[arg(short)]
    pub n: Option<usize>,
    /// Part count for a Turán k-partite shape.
    #[arg(short)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SamplingArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, env = "DIAMLAB_WORKERS", default_value_t = 0)]
    pub workers: usize,
    #[arg(long, default_value_t = 0.95)]
    pub confidence: f64,
    /// Re-check every hundredth trial with BFS.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Edge probability: a float, "r/s", or "c=<real>".
    #[arg(short, allow_hyphen_values = true)]
    pub p: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Edge probability as "r/s" or a decimal.
    #[arg(short)]
    pub p: String,
    /// Largest candidate-edge count to enumerate (exact only).
    #[arg(long, default_value_t = 22)]
    pub max_edges: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(short, allow_hyphen_values = true)]
    pub p: String,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub family: FamilyKind,
    /// Vertex counts: a list "10,20,40" or a range "start:end:step".
    #[arg(short)]
    pub n: String,
    /// Part count for Turán k-partite shapes.
    #[arg(short)]
    pub k: Option<usize>,
    /// Comma-separated edge probabilities (float, "r/s", or "c=<real>").
    #[arg(short, allow_hyphen_values = true)]
    pub p: String,
    /// Also run a Monte Carlo estimate in every cell.
    #[arg(long)]
    pub simulate: bool,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub family: FamilyKind,
    /// Vertex counts: a list or "start:end:step".
    #[arg(short)]
    pub n: Option<String>,
    #[arg(short)]
    pub k: Option<usize>,
    #[arg(long, conflicts_with_all = ["n", "k"])]
    pub shape: Option<PartitionShape>,
    /// Threshold constant.
    #[arg(long, allow_hyphen_values = true)]
    pub c: f64,
    /// Monte Carlo trials per n (0 skips simulation).
    #[arg(long, default_value_t = 0)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, env = "DIAMLAB_WORKERS", default_value_t = 0)]
    pub workers: usize,
    #[arg(long, default_value_t = 0.95)]
    pub confidence: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Shape for a family given either explicit sizes or `n` (and `k`).
pub fn build_family(
    kind: FamilyKind,
    shape: Option<&PartitionShape>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<GraphFamily, CliError> {
    let shape = match (shape, n) {
        (Some(shape), _) => shape.clone(),
        (None, Some(n)) => {
            if kind.is_bipartite() {
                if k.is_some_and(|k| k != 2) {
                    return Err(CliError::Usage("bipartite families take k = 2".into()));
                }
                PartitionShape::turan(n, 2)?
            } else if kind.is_partite() {
                let k = k.ok_or_else(|| CliError::Usage(format!("{kind} with -n also needs -k")))?;
                PartitionShape::turan(n, k)?
            } else {
                if k.is_some() {
                    return Err(CliError::Usage(format!("{kind} takes no -k")));
                }
                PartitionShape::new(vec![n])?
            }
        }
        (None, None) => return Err(CliError::Usage("give --shape or -n".into())),
    };
    Ok(GraphFamily::new(kind, shape)?)
}

impl FamilyArgs {
    pub fn build(&self) -> Result<GraphFamily, CliError> {
        build_family(self.family, self.shape.as_ref(), self.n, self.k)
    }
}

/// The threshold expression used for `family`: the Turán form when the
/// shape is a Turán partition, the general form otherwise.
pub fn threshold_form(family: &GraphFamily) -> ThresholdForm {
    let shape = family.shape();
    match family.kind().undirected() {
        FamilyKind::KPartite if shape.is_turan() => ThresholdForm::TuranKPartite {
            n: shape.total(),
            k: shape.parts(),
        },
        FamilyKind::Bipartite if shape.is_turan() => ThresholdForm::TuranBipartite { n: shape.total() },
        _ => ThresholdForm::for_family(family),
    }
}

/// A resolved edge probability together with its exact text form.
#[derive(Debug, Clone)]
pub struct ProbSpec {
    pub text: String,
    pub value: f64,
}

/// Parses `0.5`, `1/2` or `c=-2` (solved for `family`).
pub fn parse_prob(text: &str, family: &GraphFamily) -> Result<ProbSpec, CliError> {
    let text = text.trim();
    if let Some(c) = text.strip_prefix("c=") {
        let c: f64 = c
            .parse()
            .map_err(|_| CliError::Usage(format!("bad threshold constant in {text:?}")))?;
        let spec = solve_threshold_p(&threshold_form(family), family.is_directed(), c)?;
        return Ok(ProbSpec { text: format!("{}", spec.p), value: spec.p });
    }
    let exact = parse_exact(text)?;
    let value = to_f64(&exact);
    diamlab::rational::check_open_probability(&exact)?;
    Ok(ProbSpec { text: text.to_string(), value })
}

/// Exact value of `"r/s"`, an integer, or a decimal literal.
pub fn parse_exact(text: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("not a probability: {text:?}"));
    if text.contains('/') || !text.contains(['.', 'e', 'E']) {
        return parse_rational(text).map_err(|_| bad());
    }
    if text.contains(['e', 'E']) {
        let v: f64 = text.parse().map_err(|_| bad())?;
        return BigRational::from_float(v).ok_or_else(bad);
    }
    let (int, frac) = text.split_once('.').ok_or_else(bad)?;
    if !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let scale = format!("1{}", "0".repeat(frac.len()));
    parse_rational(&format!("{digits}/{scale}")).map_err(|_| bad())
}

/// Requires an exact rational (no threshold form).
pub fn parse_rational_prob(text: &str) -> Result<(String, Rational), CliError> {
    if text.trim().starts_with("c=") {
        return Err(CliError::Usage("this subcommand needs a rational p, not c=".into()));
    }
    let exact = parse_exact(text.trim())?;
    diamlab::rational::check_open_probability(&exact)?;
    Ok((format_rational(&exact), exact))
}

/// Parses `"10,20,40"` or `"start:end:step"` (inclusive).
pub fn parse_n_list(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad vertex-count list {text:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let values = if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        let (start, end, step) = match parts.as_slice() {
            [a, b] => (num(a)?, num(b)?, 1),
            [a, b, c] => (num(a)?, num(b)?, num(c)?),
            _ => return Err(bad()),
        };
        if step == 0 || start > end {
            return Err(bad());
        }
        (start..=end).step_by(step).collect()
    } else {
        text.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(bad());
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_probabilities_are_exact() {
        assert_eq!(parse_exact("0.25").unwrap(), parse_rational("1/4").unwrap());
        assert_eq!(parse_exact("1/3").unwrap(), parse_rational("1/3").unwrap());
        assert!(parse_exact("0.x").is_err());
    }

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("3,5,8").unwrap(), vec![3, 5, 8]);
        assert_eq!(parse_n_list("10:30:10").unwrap(), vec![10, 20, 30]);
        assert_eq!(parse_n_list("4:6").unwrap(), vec![4, 5, 6]);
        assert!(parse_n_list("5:1").is_err());
        assert!(parse_n_list("a").is_err());
    }

    #[test]
    fn threshold_p_spec() {
        let f = GraphFamily::simple(2000).unwrap();
        let spec = parse_prob("c=-2", &f).unwrap();
        assert!((spec.value - 0.0908533).abs() < 1e-6);
        assert_eq!(spec.text.parse::<f64>().unwrap(), spec.value);
    }
}
