//! Search for voltage assignments on a fixed skeleton that certify a
//! target girth over a set of moduli.
//!
//! The closed-walk shapes of a skeleton do not depend on the voltages,
//! so they are enumerated once and each walk is reduced to a vector of
//! signed arc multiplicities. A candidate assignment is then a handful
//! of dot products per modulus, which makes even millions of candidates
//! cheap. Every assignment that survives is re-certified from scratch
//! and its lift girth is brute-force checked at the smallest modulus.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{girth, Length};
use crate::cycles::{
    certify, enumerate_closed_walks, enumerate_cycles, enumerate_lollipops, enumerate_pinned_paths,
};
use crate::voltage::{Dir, VoltageGraph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// Every assignment in the value range, in lexicographic order.
    Exhaustive,
    /// Independent uniform draws per free arc, `budget` candidates.
    RandomRestart,
}

/// A skeleton with designated free arcs and the girth target to hit.
#[derive(Clone, Debug)]
pub struct SearchProblem {
    pub skeleton: VoltageGraph,
    /// Arc indices whose voltages the search chooses; all other arcs
    /// keep the skeleton's voltages.
    pub free_arcs: Vec<usize>,
    pub target_girth: usize,
    /// Moduli that must all certify.
    pub m_set: Vec<usize>,
    pub value_range: RangeInclusive<i64>,
    pub strategy: Strategy,
    pub seed: u64,
    /// Maximum number of candidates to evaluate.
    pub budget: u64,
}

/// One solution: the voltages for the free arcs, in order, plus the
/// moduli it was re-certified for.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Assignment {
    pub voltages: Vec<i64>,
    pub certified: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub assignments: Vec<Assignment>,
    pub candidates_tried: u64,
    pub elapsed: Duration,
    /// True when a random search consumed its whole budget; the solution
    /// list may then be incomplete.
    pub budget_exhausted: bool,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum SearchError {
    #[error("exhaustive search needs {required} candidates but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("free arc index {index} out of range ({arcs} arcs)")]
    UnknownArc { index: usize, arcs: usize },
    #[error("free arc {index} touches a pinned vertex; its voltage must stay 0")]
    PinnedFreeArc { index: usize },
    #[error("the modulus set is empty")]
    EmptyModuli,
    #[error("empty voltage value range")]
    EmptyRange,
}

/// Signed arc multiplicities of one closed walk: enough to evaluate its
/// voltage sum under any assignment.
struct WalkShape {
    coeffs: Vec<(usize, i64)>,
}

impl WalkShape {
    fn sum(&self, voltages: &[i64]) -> i64 {
        self.coeffs.iter().map(|(arc, c)| c * voltages[*arc]).sum()
    }
}

pub fn search(problem: &SearchProblem) -> Result<SearchResult, SearchError> {
    let start = Instant::now();
    let g = &problem.skeleton;
    let target = problem.target_girth;
    for &index in &problem.free_arcs {
        if index >= g.arcs().len() {
            return Err(SearchError::UnknownArc {
                index,
                arcs: g.arcs().len(),
            });
        }
        let arc = g.arc(index);
        if g.is_pinned(arc.tail) || g.is_pinned(arc.head) {
            return Err(SearchError::PinnedFreeArc { index });
        }
    }
    let mut m_set: Vec<usize> = problem.m_set.clone();
    m_set.sort_unstable();
    m_set.dedup();
    if m_set.is_empty() {
        return Err(SearchError::EmptyModuli);
    }
    let values: Vec<i64> = problem.value_range.clone().collect();
    if values.is_empty() {
        return Err(SearchError::EmptyRange);
    }

    let total: u64 = match problem.strategy {
        Strategy::Exhaustive => {
            let required = (values.len() as u128)
                .checked_pow(problem.free_arcs.len() as u32)
                .unwrap_or(u128::MAX);
            if required > problem.budget as u128 {
                return Err(SearchError::BudgetExceeded {
                    required,
                    budget: problem.budget,
                });
            }
            required as u64
        }
        Strategy::RandomRestart => problem.budget,
    };

    // Voltage-independent dead ends: a pinned path shorter than g/2 or a
    // cycle through a pinned vertex dooms every assignment outright. So
    // does any lollipop scoring below the target: either its cycle sum
    // vanishes mod m (the cycle itself is a short zero-sum walk) or it
    // does not (the lollipop lifts short).
    let structurally_dead = enumerate_pinned_paths(g, target / 2)
        .iter()
        .any(|p| p.lift_cycle_len() < target)
        || enumerate_cycles(g, target - 1)
            .iter()
            .any(|c| c.vertices(g).iter().any(|v| g.is_pinned(*v)))
        || !enumerate_lollipops(g, target - 1).is_empty();
    if structurally_dead {
        return Ok(SearchResult {
            assignments: Vec::new(),
            candidates_tried: 0,
            elapsed: start.elapsed(),
            budget_exhausted: false,
        });
    }

    let shapes: Vec<WalkShape> = enumerate_closed_walks(g, target - 1)
        .iter()
        .map(|w| {
            let mut coeffs: Vec<(usize, i64)> = Vec::new();
            for s in w.steps() {
                let delta = match s.dir {
                    Dir::Forward => 1,
                    Dir::Backward => -1,
                };
                match coeffs.iter_mut().find(|(a, _)| *a == s.arc) {
                    Some((_, c)) => *c += delta,
                    None => coeffs.push((s.arc, delta)),
                }
            }
            coeffs.retain(|(_, c)| *c != 0);
            WalkShape { coeffs }
        })
        .collect();

    let base_voltages: Vec<i64> = g.arcs().iter().map(|a| a.voltage).collect();
    let free = &problem.free_arcs;
    let seed = problem.seed;
    let strategy = problem.strategy;
    let nvalues = values.len() as u64;

    let candidate_voltages = |i: u64| -> Vec<i64> {
        let mut voltages = base_voltages.clone();
        match strategy {
            Strategy::Exhaustive => {
                let mut rest = i;
                for &arc in free.iter().rev() {
                    voltages[arc] = values[(rest % nvalues) as usize];
                    rest /= nvalues;
                }
            }
            Strategy::RandomRestart => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i);
                for &arc in free {
                    voltages[arc] = values[rng.gen_range(0..values.len())];
                }
            }
        }
        voltages
    };

    let passes = |voltages: &[i64]| -> bool {
        m_set.iter().all(|&m| {
            shapes
                .iter()
                .all(|shape| shape.sum(voltages).rem_euclid(m as i64) != 0)
        })
    };

    let raw: BTreeSet<Vec<i64>> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let voltages = candidate_voltages(i);
            passes(&voltages).then(|| free.iter().map(|&a| voltages[a]).collect())
        })
        .collect();

    // Re-validate every hit independently of the shape machinery: a full
    // certificate over m_set plus a brute-force lift girth check at the
    // smallest modulus.
    let mut assignments = Vec::new();
    for free_voltages in raw {
        let candidate = apply_assignment(g, free, &free_voltages);
        let max_m = *m_set.last().unwrap();
        let cert = certify(&candidate, target, 2..=max_m).expect("validated range");
        if !m_set.iter().all(|&m| cert.certified(m)) {
            continue;
        }
        let spot_m = m_set[0];
        let lifted = match candidate.lift(spot_m) {
            Ok(l) => l,
            Err(_) => continue,
        };
        if girth(&lifted) != Length::Finite(target) {
            continue;
        }
        assignments.push(Assignment {
            voltages: free_voltages,
            certified: m_set.clone(),
        });
    }

    Ok(SearchResult {
        assignments,
        candidates_tried: total,
        elapsed: start.elapsed(),
        budget_exhausted: matches!(strategy, Strategy::RandomRestart),
    })
}

/// The skeleton with the free arcs' voltages replaced by `voltages`.
pub fn apply_assignment(
    skeleton: &VoltageGraph,
    free_arcs: &[usize],
    voltages: &[i64],
) -> VoltageGraph {
    assert_eq!(free_arcs.len(), voltages.len());
    let vertices: Vec<(String, bool)> = skeleton
        .vertices()
        .map(|v| (skeleton.name(v).to_owned(), skeleton.is_pinned(v)))
        .collect();
    let mut arcs: Vec<(String, String, i64)> = skeleton
        .arcs()
        .iter()
        .map(|a| {
            (
                skeleton.name(a.tail).to_owned(),
                skeleton.name(a.head).to_owned(),
                a.voltage,
            )
        })
        .collect();
    for (&index, &v) in free_arcs.iter().zip(voltages) {
        arcs[index].2 = v;
    }
    VoltageGraph::new(&vertices, &arcs)
        .expect("assignment reuses a valid skeleton")
        .with_description(skeleton.description().to_owned())
}
