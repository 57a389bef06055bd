//! Self-checks tying the construction together: per-degree counting
//! against the rank oracle, expansion consistency of every basis element,
//! and seeded random round-trip and homomorphism trials.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commutators::MaltsevBasis;
use crate::error::Result;
use crate::graph::{CommutationGraph, Vertex};
use crate::group::{commutator_word, magnus, Collector, GroupWord};
use crate::lie::{lie_expand, rank_of_degree};
use crate::trace::TruncatedSeries;
use crate::words::generate_als;

/// Counting results for one weight: the basis cardinality must equal the
/// independent rank of the unfiltered commutator images.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeRecord {
    pub degree: usize,
    pub als_count: usize,
    pub standard_count: usize,
    pub basis_count: usize,
    pub oracle_rank: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub class: usize,
    pub degrees: Vec<DegreeRecord>,
    pub round_trips_run: usize,
    pub failures: usize,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.failures == 0 && self.degrees.iter().all(|d| d.pass)
    }
}

/// A random word with at most `max_syllables` syllables and exponents in
/// `[-3, 3] \ {0}`.
pub fn random_word(rng: &mut impl Rng, g: &CommutationGraph, max_syllables: usize) -> GroupWord {
    let len = rng.random_range(0..=max_syllables);
    let syllables = (0..len)
        .map(|_| {
            let v = rng.random_range(0..g.vertex_count() as Vertex);
            let e = loop {
                let e = rng.random_range(-3i64..=3);
                if e != 0 {
                    break e;
                }
            };
            (v, BigInt::from(e))
        })
        .collect();
    GroupWord::new(syllables).expect("nonzero exponents")
}

/// Runs the whole suite for one graph and class. Counting disagreements
/// mark their degree record; expansion-consistency and trial violations
/// increment `failures`.
pub fn run_verification(
    g: &CommutationGraph,
    class: usize,
    trials: usize,
    seed: u64,
) -> Result<VerifyReport> {
    let basis = MaltsevBasis::construct(g, class)?;
    let collector = Collector::new(basis)?;
    let basis = collector.basis();
    let als = generate_als(g, class);

    let mut degrees = Vec::with_capacity(class);
    for k in 1..=class {
        let als_count = als[k - 1].len();
        let standard_count = als_count; // one standard bracketing per word
        let basis_count = basis.segment(k).len();
        let oracle_rank = rank_of_degree(g, k)?;
        degrees.push(DegreeRecord {
            degree: k,
            als_count,
            standard_count,
            basis_count,
            oracle_rank,
            pass: basis_count == oracle_rank,
        });
    }

    let mut failures = 0usize;
    for elem in basis.elements() {
        let s = magnus(g, &commutator_word(&elem.tree), class)?;
        let delta = s.sub(&TruncatedSeries::one(class))?;
        let low = delta.min_support_degree().unwrap_or(usize::MAX);
        if low < elem.weight {
            failures += 1;
            continue;
        }
        let expected = lie_expand(g, &elem.tree, class)?;
        if delta.homogeneous(elem.weight) != expected.homogeneous(elem.weight) {
            failures += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let u = random_word(&mut rng, g, 12);
        let v = random_word(&mut rng, g, 12);
        let nf_u = collector.collect(&u)?;
        let nf_v = collector.collect(&v)?;
        let back = collector.reconstruct(&nf_u)?;
        if magnus(g, &back, class)? != magnus(g, &u, class)? {
            failures += 1;
        }
        if collector.collect(&u.concat(&v))? != collector.nf_mul(&nf_u, &nf_v)? {
            failures += 1;
        }
        if !collector
            .nf_mul(&nf_u, &collector.nf_inv(&nf_u)?)?
            .is_identity()
        {
            failures += 1;
        }
        let exponents: Vec<BigInt> = (0..basis.len())
            .map(|_| BigInt::from(rng.random_range(-3i64..=3)))
            .collect();
        let nf = collector.from_exponents(exponents.clone())?;
        if collector.collect(&collector.reconstruct(&nf)?)?.exponents() != exponents {
            failures += 1;
        }
    }

    Ok(VerifyReport {
        class,
        degrees,
        round_trips_run: trials,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{complete, edgeless, example_graph};

    #[test]
    fn example_graph_report_passes() {
        let g = example_graph();
        let report = run_verification(&g, 3, 25, 0).unwrap();
        assert!(report.pass());
        let ranks: Vec<usize> = report.degrees.iter().map(|d| d.oracle_rank).collect();
        assert_eq!(ranks, vec![3, 2, 5]);
        assert_eq!(report.round_trips_run, 25);
        assert_eq!(report.failures, 0);
    }

    #[test]
    fn complete_graph_ranks_vanish_above_weight_one() {
        let g = complete(&["a", "b", "c", "d"]);
        let report = run_verification(&g, 4, 10, 0).unwrap();
        assert!(report.pass());
        let ranks: Vec<usize> = report.degrees.iter().map(|d| d.oracle_rank).collect();
        assert_eq!(ranks, vec![4, 0, 0, 0]);
    }

    #[test]
    fn edgeless_pair_ranks_are_the_free_lie_ranks() {
        let g = edgeless(&["a", "b"]);
        let report = run_verification(&g, 5, 10, 0).unwrap();
        assert!(report.pass());
        let ranks: Vec<usize> = report.degrees.iter().map(|d| d.oracle_rank).collect();
        assert_eq!(ranks, vec![2, 1, 2, 3, 6]);
    }

    #[test]
    fn seeded_reports_are_reproducible() {
        let g = example_graph();
        let a = run_verification(&g, 2, 5, 42).unwrap();
        let b = run_verification(&g, 2, 5, 42).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
