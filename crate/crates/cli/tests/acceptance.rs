//! Acceptance checks: one PASS/FAIL line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use diamlab::bounds::{
    applicable_bounds, bipartite_bounds, gnp_asymptotic_bounds, gnp_bounds, kpartite_bounds,
    solve_threshold_p, threshold_c, BoundPair, ThresholdForm,
};
use diamlab::graph::{
    bipartite_has_diameter_le3, graph_diameter, meets_target_diameter, sample_graph,
    AdjacencyMatrix, FamilyKind, GraphFamily, PartitionShape,
};
use diamlab::montecarlo::estimate;
use diamlab::oracle::{brute_incidence_stats, diameter_census, EnumerationBudget};
use diamlab::rational::{parse_rational, to_f64, Rational};
use diamlab::sieve::{incidence_stats, sieve_bounds};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

const SIMPLE_PS: [&str; 5] = ["1/4", "1/3", "1/2", "2/3", "3/4"];
const PARTITE_PS: [&str; 2] = ["1/3", "1/2"];

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn shape(sizes: &[usize]) -> PartitionShape {
    PartitionShape::new(sizes.to_vec()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn simple_grid() -> Vec<GraphFamily> {
    (3..=7).map(|n| GraphFamily::simple(n).unwrap()).collect()
}

fn bipartite_grid() -> Vec<GraphFamily> {
    [[2, 2], [2, 3], [3, 3], [3, 4]]
        .iter()
        .map(|s| GraphFamily::bipartite(shape(s)).unwrap())
        .collect()
}

fn kpartite_grid() -> Vec<GraphFamily> {
    [vec![1, 2, 2], vec![2, 2, 2]]
        .iter()
        .map(|s| GraphFamily::kpartite(shape(s)).unwrap())
        .collect()
}

fn closed_form(family: &GraphFamily, p: f64) -> BoundPair {
    match family.kind() {
        FamilyKind::Simple => gnp_bounds(family.n(), p).unwrap(),
        FamilyKind::Bipartite => bipartite_bounds(family.shape(), p).unwrap(),
        _ => kpartite_bounds(family.shape(), p).unwrap(),
    }
}

/// Exact sandwich for every family and p; returns the number of cells.
fn sandwich(families: &[GraphFamily], ps: &[&str]) -> Result<usize, String> {
    let mut cells = 0;
    for f in families {
        let census = diameter_census(f, f.target_diameter(), &EnumerationBudget::default())
            .map_err(|e| e.to_string())?;
        for p in ps {
            let p = r(p);
            let exact = census.probability(&p).map_err(|e| e.to_string())?;
            let sb = sieve_bounds(f, &p).map_err(|e| e.to_string())?;
            ensure(sb.lower() <= exact && exact <= sb.upper(), || {
                format!("{} {} p={p}: {} <= {exact} <= {} fails", f.kind(), f.shape(), sb.lower(), sb.upper())
            })?;
            cells += 1;
        }
    }
    Ok(cells)
}

fn dominance(families: &[GraphFamily], ps: &[&str]) -> Result<usize, String> {
    let mut cells = 0;
    for f in families {
        for p in ps {
            let p = r(p);
            let sieve = sieve_bounds(f, &p).map_err(|e| e.to_string())?.bound_pair();
            let cf = closed_form(f, to_f64(&p));
            ensure(cf.lower() <= sieve.lower() + 1e-12, || {
                format!("{} {} p={p}: closed lower {} > sieve lower {}", f.kind(), f.shape(), cf.lower(), sieve.lower())
            })?;
            ensure(sieve.upper() <= cf.upper() + 1e-12, || {
                format!("{} {} p={p}: sieve upper {} > closed upper {}", f.kind(), f.shape(), sieve.upper(), cf.upper())
            })?;
            cells += 1;
        }
    }
    Ok(cells)
}

fn criterion_1() -> Check {
    let cells = sandwich(&simple_grid(), &SIMPLE_PS)?;
    Ok(format!("{cells} (n, p) cells, exact rational comparisons"))
}

fn criterion_2() -> Check {
    let cells = dominance(&simple_grid(), &SIMPLE_PS)?;
    Ok(format!("{cells} cells"))
}

fn criterion_3() -> Check {
    let mut families = bipartite_grid();
    families.extend(kpartite_grid());
    let cells = sandwich(&families, &PARTITE_PS)?;
    dominance(&families, &PARTITE_PS)?;
    Ok(format!("{cells} cells sandwiched and dominated"))
}

fn criterion_4() -> Check {
    let mut families = simple_grid();
    families.extend(bipartite_grid());
    families.extend(kpartite_grid());
    let mut compared = 0;
    for f in families.iter().filter(|f| f.edge_count() <= 16) {
        let ps: &[&str] = if f.kind() == FamilyKind::Simple { &SIMPLE_PS } else { &PARTITE_PS };
        for p in ps {
            let p = r(p);
            let brute = brute_incidence_stats(f, &p, &EnumerationBudget::default()).map_err(|e| e.to_string())?;
            let orbit = incidence_stats(f, &p).map_err(|e| e.to_string())?;
            ensure(brute == orbit, || format!("{} {} p={p}: {brute:?} != {orbit:?}", f.kind(), f.shape()))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} configurations equal"))
}

fn criterion_5() -> Check {
    let f = GraphFamily::simple(60).unwrap();
    let est = estimate(&f, 0.5, 10_000, 20_240_601, 0.95).map_err(|e| e.to_string())?;
    let failures = est.failures();
    ensure(failures <= 5, || format!("{failures} failures in 10^4 trials"))?;
    Ok(format!("{failures} failures in 10^4 trials"))
}

fn criterion_6() -> Check {
    let n = 2000;
    let f = GraphFamily::simple(n).unwrap();
    let form = ThresholdForm::Gnp { n };
    let below = solve_threshold_p(&form, false, -2.0).map_err(|e| e.to_string())?;
    let above = solve_threshold_p(&form, false, 2.0).map_err(|e| e.to_string())?;
    let lo = estimate(&f, below.p, 1000, 1, 0.95).map_err(|e| e.to_string())?;
    let hi = estimate(&f, above.p, 1000, 1, 0.95).map_err(|e| e.to_string())?;
    ensure(lo.p_hat >= 0.75, || format!("c=-2: p_hat {} < 0.75", lo.p_hat))?;
    ensure(hi.p_hat <= 0.25, || format!("c=+2: p_hat {} > 0.25", hi.p_hat))?;
    Ok(format!(
        "c=-2: p={:.6} p_hat={:.3}; c=+2: p={:.6} p_hat={:.3}",
        below.p, lo.p_hat, above.p, hi.p_hat
    ))
}

fn criterion_7() -> Check {
    let mut checked = 0;
    let pairs = [
        (FamilyKind::Simple, FamilyKind::Directed, vec![30usize]),
        (FamilyKind::Simple, FamilyKind::Directed, vec![300]),
        (FamilyKind::KPartite, FamilyKind::DirectedKPartite, vec![10, 10, 10]),
        (FamilyKind::KPartite, FamilyKind::DirectedKPartite, vec![5, 20, 40]),
        (FamilyKind::Bipartite, FamilyKind::DirectedBipartite, vec![25, 25]),
        (FamilyKind::Bipartite, FamilyKind::DirectedBipartite, vec![10, 40]),
    ];
    for (uk, dk, sizes) in pairs {
        let u = GraphFamily::new(uk, shape(&sizes)).unwrap();
        let d = GraphFamily::new(dk, shape(&sizes)).unwrap();
        for p in [0.02, 0.1, 0.3, 0.5, 0.7] {
            let ub = applicable_bounds(&u, p).map_err(|e| e.to_string())?;
            let db = applicable_bounds(&d, p).map_err(|e| e.to_string())?;
            for (a, b) in ub.iter().zip(&db) {
                ensure(b.lower_term() == 2.0 * a.lower_term(), || format!("{} lower term", a.source()))?;
                let via_raw = 1.0 - 2.0 * (1.0 - a.lower_raw());
                ensure((b.lower_raw() - via_raw).abs() <= 4.0 * f64::EPSILON * (1.0 + via_raw.abs()), || {
                    format!("{} lower {} vs {via_raw}", a.source(), b.lower_raw())
                })?;
                ensure(b.upper_raw() == a.upper_raw() / 2.0, || format!("{} upper", a.source()))?;
                checked += 1;
            }
            let form = diamlab::bounds::ThresholdForm::for_family(&u);
            let cu = threshold_c(&form, false, p).map_err(|e| e.to_string())?.c_observed;
            let cd = threshold_c(&form, true, p).map_err(|e| e.to_string())?.c_observed;
            ensure(cd == cu + std::f64::consts::LN_2, || format!("threshold shift at p={p}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} identities"))
}

fn random_family(i: u64) -> GraphFamily {
    let kind = FamilyKind::ALL[(i % 6) as usize];
    let n = 5 + (i / 6 % 28) as usize;
    let s = match kind {
        FamilyKind::Simple | FamilyKind::Directed => shape(&[n]),
        FamilyKind::KPartite | FamilyKind::DirectedKPartite => {
            PartitionShape::turan(n, 3 + (i as usize / 7) % (n - 4).min(5)).unwrap()
        }
        _ => {
            let a = 2 + (i as usize / 5) % (n / 2 - 1);
            shape(&[a, n - a])
        }
    };
    GraphFamily::new(kind, s).unwrap()
}

fn all_subgraphs(family: &GraphFamily) -> impl Iterator<Item = AdjacencyMatrix> + '_ {
    let edges = family.candidate_edges();
    (0u64..1 << edges.len()).map(move |mask| {
        let chosen: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        AdjacencyMatrix::from_edges(family.n(), family.is_directed(), &chosen).unwrap()
    })
}

fn criterion_8() -> Check {
    let mut disagreements = 0;
    for i in 0..10_000u64 {
        let f = random_family(i);
        let p = 0.05 + 0.9 * ((i * 7919) % 1000) as f64 / 1000.0;
        let g = sample_graph(&f, p, 8, i).map_err(|e| e.to_string())?;
        if meets_target_diameter(&f, &g) != graph_diameter(&g).at_most(f.target_diameter()) {
            disagreements += 1;
        }
    }
    let mut exhaustive = 0;
    for sizes in [[2, 2], [2, 3], [3, 3]] {
        let f = GraphFamily::bipartite(shape(&sizes)).unwrap();
        for g in all_subgraphs(&f) {
            if bipartite_has_diameter_le3(&g, f.shape()).unwrap() != graph_diameter(&g).at_most(3) {
                disagreements += 1;
            }
            exhaustive += 1;
        }
    }
    ensure(disagreements == 0, || format!("{disagreements} disagreements"))?;
    Ok(format!("10000 sampled + {exhaustive} exhaustive bipartite graphs agree"))
}

fn criterion_9() -> Check {
    let runs = [
        ["--family", "simple", "-n", "40", "-p", "0.3"],
        ["--family", "directed-kpartite", "--shape", "4,5,6", "-p", "0.45"],
        ["--family", "bipartite", "--shape", "10,14", "-p", "c=0"],
    ];
    for run in runs {
        let mut counts = Vec::new();
        for workers in ["1", "4", "8"] {
            let out = Command::new(env!("CARGO_BIN_EXE_diamlab"))
                .arg("simulate")
                .args(run)
                .args(["--trials", "2000", "--seed", "77", "--workers", workers])
                .output()
                .map_err(|e| e.to_string())?;
            ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
            let text = String::from_utf8_lossy(&out.stdout).into_owned();
            let mut reader = csv::Reader::from_reader(text.as_bytes());
            let col = reader.headers().unwrap().iter().position(|h| h == "successes").unwrap();
            let row = reader.records().next().unwrap().unwrap();
            counts.push(row[col].to_string());
        }
        ensure(counts.windows(2).all(|w| w[0] == w[1]), || format!("{run:?}: {counts:?}"))?;
    }
    Ok("3 configurations x workers {1,4,8} identical".into())
}

fn criterion_10() -> Check {
    let mut spot = 0;
    for n in [200, 500, 1000] {
        for p in [0.05, 0.1] {
            let asym = gnp_asymptotic_bounds(n, p).map_err(|e| e.to_string())?;
            let theorem = gnp_bounds(n, p).map_err(|e| e.to_string())?;
            ensure(asym.lower() <= theorem.lower() + 1e-12, || {
                format!("n={n} p={p}: asymptotic lower {} > theorem lower {}", asym.lower(), theorem.lower())
            })?;
            let f = GraphFamily::simple(n).unwrap();
            let est = estimate(&f, p, 300, 10 + n as u64, 0.95).map_err(|e| e.to_string())?;
            let slack = 3.0 * est.std_error();
            ensure(asym.lower() <= est.p_hat + slack, || {
                format!("n={n} p={p}: asymptotic lower {} > p_hat {} + 3se", asym.lower(), est.p_hat)
            })?;
            ensure(asym.upper() >= est.p_hat - slack, || {
                format!("n={n} p={p}: asymptotic upper {} < p_hat {} - 3se", asym.upper(), est.p_hat)
            })?;
            spot += 1;
        }
    }
    Ok(format!("{spot} spot checks consistent"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("exact sandwich, simple n=3..7", criterion_1, Duration::from_secs(120)),
        ("closed-form dominance, simple", criterion_2, Duration::from_secs(120)),
        ("partite sandwiches and dominance", criterion_3, Duration::from_secs(120)),
        ("incidence equality, m <= 16", criterion_4, Duration::from_secs(120)),
        ("corollary regression n=60", criterion_5, Duration::from_secs(30)),
        ("threshold complementarity n=2000", criterion_6, Duration::from_secs(600)),
        ("directed adjustment identities", criterion_7, Duration::from_secs(60)),
        ("predicate equivalences", criterion_8, Duration::from_secs(120)),
        ("simulate determinism across workers", criterion_9, Duration::from_secs(120)),
        ("explicit o(1) window", criterion_10, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) if elapsed <= *limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{elapsed:.1?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{elapsed:.1?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
