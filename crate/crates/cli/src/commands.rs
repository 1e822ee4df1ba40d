use diamlab::bounds::{applicable_bounds, limit_bounds, solve_threshold_p, BoundPair};
use diamlab::graph::GraphFamily;
use diamlab::montecarlo::{estimate_with, EstimateOptions, TrialEstimate};
use diamlab::oracle::{diameter_census, EnumerationBudget};
use diamlab::rational::{format_rational, to_f64};
use diamlab::sieve::sieve_bounds;
use serde_json::Value;

use crate::args::{
    build_family, parse_n_list, threshold_form, parse_prob, parse_rational_prob, ExactArgs, PointArgs,
    SamplingArgs, SimulateArgs, SweepArgs, ThresholdArgs,
};
use crate::output::Row;
use crate::CliError;

/// Columns shared by every subcommand.
fn prefix(family: &GraphFamily, p: &str, seed: Option<u64>, trials: Option<u64>) -> Row {
    Row::new()
        .set("family", family.kind().name())
        .set("n", family.n())
        .set("shape", family.shape().to_string())
        .set("p", p)
        .set("seed", seed.map_or(Value::Null, Value::from))
        .set("trials", trials.map_or(Value::Null, Value::from))
}

fn bound_columns(row: Row, b: &BoundPair) -> Row {
    row.set("source", b.source().name())
        .set("directed", b.is_directed())
        .set("asymptotic_only", b.asymptotic_only())
        .set_f64("lower_raw", b.lower_raw())
        .set_f64("lower", b.lower())
        .set_f64("upper_raw", b.upper_raw())
        .set_f64("upper", b.upper())
        .set("trivial_lower", b.trivial_lower())
        .set("trivial_upper", b.trivial_upper())
}

fn estimate_columns(row: Row, est: Option<&TrialEstimate>) -> Row {
    match est {
        Some(e) => row
            .set("successes", e.successes)
            .set_f64("p_hat", e.p_hat)
            .set_f64("wilson_lo", e.wilson_lo)
            .set_f64("wilson_hi", e.wilson_hi),
        None => row
            .set("successes", Value::Null)
            .set("p_hat", Value::Null)
            .set("wilson_lo", Value::Null)
            .set("wilson_hi", Value::Null),
    }
}

fn options(s: &SamplingArgs) -> EstimateOptions {
    EstimateOptions { workers: s.workers, verify: s.verify, ..Default::default() }
}

pub fn bounds(args: &PointArgs) -> Result<Vec<Row>, CliError> {
    let family = args.family.build()?;
    let p = parse_prob(&args.p, &family)?;
    let rows = applicable_bounds(&family, p.value)?
        .iter()
        .map(|b| bound_columns(prefix(&family, &p.text, None, None).set_f64("p_float", p.value), b))
        .collect();
    Ok(rows)
}

pub fn sieve(args: &ExactArgs) -> Result<Vec<Row>, CliError> {
    let family = args.family.build()?;
    let (text, p) = parse_rational_prob(&args.p)?;
    let sb = sieve_bounds(&family, &p)?;
    let pair = sb.bound_pair();
    let row = prefix(&family, &text, None, None)
        .set("b_count", sb.stats.b_count)
        .set("sum_deg", format_rational(&sb.stats.sum_deg))
        .set("sum_joint", format_rational(&sb.stats.sum_joint))
        .set("lower_raw", format_rational(&sb.lower_raw))
        .set("lower", format_rational(&sb.lower()))
        .set("upper_raw", format_rational(&sb.upper_raw))
        .set("upper", format_rational(&sb.upper()))
        .set_f64("lower_float", pair.lower())
        .set_f64("upper_float", pair.upper())
        .set("trivial_lower", pair.trivial_lower())
        .set("trivial_upper", pair.trivial_upper());
    Ok(vec![row])
}

pub fn exact(args: &ExactArgs) -> Result<Vec<Row>, CliError> {
    let family = args.family.build()?;
    let (text, p) = parse_rational_prob(&args.p)?;
    let budget = EnumerationBudget { max_edges: args.max_edges };
    let d = family.target_diameter();
    let prob = diameter_census(&family, d, &budget)?.probability(&p)?;
    let row = prefix(&family, &text, None, None)
        .set("target_diameter", d)
        .set("probability", format_rational(&prob))
        .set_f64("float", to_f64(&prob));
    Ok(vec![row])
}

pub fn simulate(args: &SimulateArgs) -> Result<Vec<Row>, CliError> {
    let family = args.family.build()?;
    let p = parse_prob(&args.p, &family)?;
    let s = &args.sampling;
    let est = estimate_with(&family, p.value, s.trials, s.seed, s.confidence, &options(s))?;
    let row = prefix(&family, &p.text, Some(s.seed), Some(s.trials))
        .set_f64("p_float", p.value)
        .set("target_diameter", family.target_diameter());
    let row = estimate_columns(row, Some(&est))
        .set_f64("confidence", est.confidence)
        .set_f64("elapsed_s", est.elapsed);
    Ok(vec![row])
}

pub fn sweep(args: &SweepArgs) -> Result<Vec<Row>, CliError> {
    let ns = parse_n_list(&args.n)?;
    let specs: Vec<&str> = args.p.split(',').map(str::trim).collect();
    let s = &args.sampling;
    let mut rows = Vec::new();
    for &n in &ns {
        let family = build_family(args.family, None, Some(n), args.k)?;
        for spec in &specs {
            let p = parse_prob(spec, &family)?;
            let (seed, trials) = if args.simulate { (Some(s.seed), Some(s.trials)) } else { (None, None) };
            let row = prefix(&family, &p.text, seed, trials).set_f64("p_float", p.value);
            let row = match applicable_bounds(&family, p.value)?.first() {
                Some(b) => bound_columns(row, b),
                None => row,
            };
            let est = if args.simulate {
                Some(estimate_with(&family, p.value, s.trials, s.seed, s.confidence, &options(s))?)
            } else {
                None
            };
            rows.push(estimate_columns(row, est.as_ref()));
        }
    }
    Ok(rows)
}

pub fn threshold(args: &ThresholdArgs) -> Result<Vec<Row>, CliError> {
    let families: Vec<GraphFamily> = match (&args.shape, &args.n) {
        (Some(shape), _) => vec![build_family(args.family, Some(shape), None, None)?],
        (None, Some(list)) => parse_n_list(list)?
            .into_iter()
            .map(|n| build_family(args.family, None, Some(n), args.k))
            .collect::<Result<_, _>>()?,
        (None, None) => return Err(CliError::Usage("give --shape or -n".into())),
    };
    let (limit_lower, limit_upper) = limit_bounds(args.c);
    let mut rows = Vec::new();
    for family in &families {
        let form = threshold_form(family);
        let spec = solve_threshold_p(&form, family.is_directed(), args.c)?;
        let sampled = args.trials > 0;
        let row = prefix(family, &format!("{}", spec.p), sampled.then_some(args.seed), sampled.then_some(args.trials))
            .set_f64("c", spec.c)
            .set_f64("c_observed", spec.c_observed)
            .set_f64("asymptotic_lower", limit_lower)
            .set_f64("asymptotic_upper", limit_upper);
        let row = match applicable_bounds(family, spec.p)?.first() {
            Some(b) => row
                .set("theorem_source", b.source().name())
                .set_f64("theorem_lower", b.lower())
                .set_f64("theorem_upper", b.upper()),
            None => row,
        };
        let est = if sampled {
            let opts = EstimateOptions { workers: args.workers, ..Default::default() };
            Some(estimate_with(family, spec.p, args.trials, args.seed, args.confidence, &opts)?)
        } else {
            None
        };
        rows.push(estimate_columns(row, est.as_ref()));
    }
    Ok(rows)
}
