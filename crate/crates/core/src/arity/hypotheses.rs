//! Finite-shadow check of the two hypotheses that block aritization of a
//! relation `R ⊆ M^m`:
//!
//! 1. fixing any `m-1` coordinates leaves between `1` and `F` completions;
//! 2. every coordinate-deleted projection of `R` misses at most `C` tuples of `M^{m-1}`.
//!
//! Only the hypotheses are checked. The conclusion concerns infinite
//! structures and is reported as not testable here.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::orbits::{tuple_unrank, TupleSet};

pub const CONCLUSION_NOTE: &str =
    "hypotheses only: the non-aritizability conclusion concerns infinite structures and is not desk-testable";

/// A partial assignment with one free coordinate (`None`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubstitutionWitness {
    pub assignment: Vec<Option<usize>>,
    pub completions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionCondition {
    pub holds: bool,
    pub min: SubstitutionWitness,
    pub max: SubstitutionWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionCondition {
    pub holds: bool,
    /// Number of tuples of `M^{m-1}` missed by the projection deleting each coordinate.
    pub missing_per_coordinate: Vec<usize>,
    /// A missed tuple of the worst projection, the deleted coordinate shown as `None`.
    pub worst_missing: Option<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub arity: usize,
    pub sol_bound: usize,
    pub cofinite_slack: usize,
    pub bounded_solutions: SolutionCondition,
    pub cofinite_projections: ProjectionCondition,
    pub conclusion: &'static str,
}

fn with_hole(rest: &[usize], hole: usize) -> Vec<Option<usize>> {
    let mut out: Vec<Option<usize>> = rest.iter().copied().map(Some).collect();
    out.insert(hole, None);
    out
}

/// Checks both hypotheses for `relation` with solution bound `sol_bound` (F)
/// and slack `cofinite_slack` (C); the sharp form is `F = 1, C = 0`.
pub fn check_arit_hypotheses(
    relation: &TupleSet,
    sol_bound: usize,
    cofinite_slack: usize,
    limits: &Limits,
) -> Result<HypothesisReport> {
    if relation.is_empty() {
        return Err(Error::InvalidParameter("relation must be non-empty".into()));
    }
    let (s, m) = (relation.size(), relation.arity());
    if m == 0 {
        return Err(Error::InvalidParameter("relation must have arity at least 1".into()));
    }
    let cells = limits.tuple_space(s, m - 1)?;
    // counts[i][rank of tuple with coordinate i deleted]
    let mut counts = vec![vec![0usize; cells]; m];
    for t in relation.tuples() {
        for (i, row) in counts.iter_mut().enumerate() {
            let rank = t
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(0, |r, (_, &a)| r * s + a);
            row[rank] += 1;
        }
    }

    let mut min: Option<(usize, usize, usize)> = None;
    let mut max: Option<(usize, usize, usize)> = None;
    for (i, row) in counts.iter().enumerate() {
        for (rank, &c) in row.iter().enumerate() {
            if min.is_none_or(|(best, _, _)| c < best) {
                min = Some((c, i, rank));
            }
            if max.is_none_or(|(best, _, _)| c > best) {
                max = Some((c, i, rank));
            }
        }
    }
    let witness = |(c, i, rank): (usize, usize, usize)| -> Result<SubstitutionWitness> {
        Ok(SubstitutionWitness {
            assignment: with_hole(&tuple_unrank(rank, m - 1, s)?, i),
            completions: c,
        })
    };
    let (min, max) = (min.expect("at least one cell"), max.expect("at least one cell"));
    let bounded_solutions = SolutionCondition {
        holds: min.0 >= 1 && max.0 <= sol_bound,
        min: witness(min)?,
        max: witness(max)?,
    };

    let missing_per_coordinate: Vec<usize> = counts
        .iter()
        .map(|row| row.iter().filter(|&&c| c == 0).count())
        .collect();
    let worst = (0..m)
        .max_by_key(|&i| (missing_per_coordinate[i], std::cmp::Reverse(i)))
        .expect("m >= 1");
    let worst_missing = match counts[worst].iter().position(|&c| c == 0) {
        Some(rank) => Some(with_hole(&tuple_unrank(rank, m - 1, s)?, worst)),
        None => None,
    };
    let cofinite_projections = ProjectionCondition {
        holds: missing_per_coordinate.iter().all(|&k| k <= cofinite_slack),
        missing_per_coordinate,
        worst_missing,
    };

    Ok(HypothesisReport {
        arity: m,
        sol_bound,
        cofinite_slack,
        bounded_solutions,
        cofinite_projections,
        conclusion: CONCLUSION_NOTE,
    })
}
