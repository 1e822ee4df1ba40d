//! Exact agreement between the sieve, the oracle and the closed-form bounds
//! on families small enough to enumerate.

use diamlab::bounds::{bipartite_bounds, gnp_bounds, kpartite_bounds, BoundPair};
use diamlab::graph::{GraphFamily, PartitionShape};
use diamlab::oracle::{brute_incidence_stats, diameter_census, EnumerationBudget};
use diamlab::rational::{parse_rational, to_f64, Rational};
use diamlab::sieve::{incidence_stats, sieve_bounds};

const PS: [&str; 5] = ["1/4", "1/3", "1/2", "2/3", "3/4"];

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn check_family(family: &GraphFamily, ps: &[&str], closed: impl Fn(f64) -> BoundPair) {
    let budget = EnumerationBudget::default();
    let census = diameter_census(family, family.target_diameter(), &budget).unwrap();
    for p in ps {
        let p = r(p);
        let exact = census.probability(&p).unwrap();
        let sieve = sieve_bounds(family, &p).unwrap();
        let tag = format!("{} {} p={p}", family.kind(), family.shape());
        assert!(sieve.lower() <= exact, "lower {tag}");
        assert!(exact <= sieve.upper(), "upper {tag}");

        let cf = closed(to_f64(&p));
        let sb = sieve.bound_pair();
        assert!(cf.lower() <= sb.lower() + 1e-12, "closed lower {tag}");
        assert!(sb.upper() <= cf.upper() + 1e-12, "closed upper {tag}");

        if family.edge_count() <= 16 {
            let brute = brute_incidence_stats(family, &p, &budget).unwrap();
            assert_eq!(brute, incidence_stats(family, &p).unwrap(), "stats {tag}");
        }
    }
}

#[test]
fn simple_families() {
    for n in 3..=6 {
        let f = GraphFamily::simple(n).unwrap();
        check_family(&f, &PS, |p| gnp_bounds(n, p).unwrap());
    }
}

#[test]
fn bipartite_families() {
    for sizes in [[2, 2], [2, 3], [3, 3], [3, 4]] {
        let shape = PartitionShape::new(sizes.to_vec()).unwrap();
        let f = GraphFamily::bipartite(shape.clone()).unwrap();
        check_family(&f, &["1/3", "1/2"], |p| bipartite_bounds(&shape, p).unwrap());
    }
}

#[test]
fn kpartite_families() {
    for sizes in [vec![1, 2, 2], vec![2, 2, 2]] {
        let shape = PartitionShape::new(sizes).unwrap();
        let f = GraphFamily::kpartite(shape.clone()).unwrap();
        check_family(&f, &["1/3", "1/2"], |p| kpartite_bounds(&shape, p).unwrap());
    }
}

#[test]
fn directed_families_sandwich() {
    let budget = EnumerationBudget::default();
    for f in [
        GraphFamily::directed(3).unwrap(),
        GraphFamily::directed(4).unwrap(),
        GraphFamily::directed_bipartite(PartitionShape::new(vec![2, 3]).unwrap()).unwrap(),
        GraphFamily::directed_kpartite(PartitionShape::new(vec![1, 2, 2]).unwrap()).unwrap(),
    ] {
        let census = diameter_census(&f, f.target_diameter(), &budget).unwrap();
        for p in ["1/3", "1/2", "3/4"] {
            let p = r(p);
            let exact = census.probability(&p).unwrap();
            let sieve = sieve_bounds(&f, &p).unwrap();
            assert!(sieve.lower() <= exact && exact <= sieve.upper());
            if f.edge_count() <= 16 {
                assert_eq!(
                    brute_incidence_stats(&f, &p, &budget).unwrap(),
                    incidence_stats(&f, &p).unwrap()
                );
            }
        }
    }
}

#[test]
fn exact_probability_is_monotone_in_p() {
    let budget = EnumerationBudget::default();
    for f in [
        GraphFamily::simple(5).unwrap(),
        GraphFamily::bipartite(PartitionShape::new(vec![2, 3]).unwrap()).unwrap(),
        GraphFamily::directed(3).unwrap(),
    ] {
        let census = diameter_census(&f, f.target_diameter(), &budget).unwrap();
        let grid: Vec<Rational> = (1..20).map(|i| Rational::new(i.into(), 20.into())).collect();
        let values: Vec<Rational> = grid.iter().map(|p| census.probability(p).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{}", f.kind());
    }
}
