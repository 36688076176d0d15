//! Arity-reducing expansions by new predicates.
//!
//! * [`expand_singletons`] names every element (`P_a = {a}`), which kills
//!   every non-trivial automorphism and so yields a unary theory.
//! * [`expand_finite_range`] adds, for each product value `c_i` of the
//!   designated operation, the binary predicate `D_i` of argument pairs
//!   producing `c_i` and the unary predicate `R_i = {c_i}`.
//! * [`expand_general_algebra`] does the same for every function symbol of
//!   any arity (`D_i_j = f_j⁻¹(c_i)`).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbits::TupleSet;
use crate::structures::{classify, parse_structure, serialize_structure, FiniteStructure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AddedPredicate {
    pub name: String,
    pub arity: usize,
    pub tuples: TupleSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    #[serde(skip)]
    pub base: FiniteStructure,
    pub added: Vec<AddedPredicate>,
    #[serde(skip)]
    pub combined: FiniteStructure,
    pub notes: Vec<String>,
}

pub const SINGLETON_NOTE: &str =
    "singleton unary predicates P_a = {a} are used in place of a construction with binary symbols; they trivialize the automorphism group";
pub const GROUP_NOTE: &str =
    "input is a group: the binarity guarantee covers monoids and groupoids with a finite range relative to an infinite universe, so no claim is made here";

/// Whether identity rows take part in the `D_i` predicates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityRows {
    /// `D_i = {(a, b) : a ≠ e, b ≠ e, a·b = c_i}`.
    #[default]
    Exclude,
    /// `D_i = {(a, b) : a·b = c_i}` over all of `M²`.
    Include,
}

impl Expansion {
    fn build(base: &FiniteStructure, suffix: &str, added: Vec<AddedPredicate>, notes: Vec<String>) -> Result<Self> {
        let mut combined = base.clone().renamed(format!("{}_{suffix}", base.name()))?;
        for p in &added {
            combined.add_relation(p.name.clone(), p.tuples.clone())?;
        }
        let reparsed = parse_structure(&serialize_structure(&combined))?;
        if reparsed != combined {
            return Err(Error::InvariantViolation(
                "expanded structure does not round-trip".into(),
            ));
        }
        Ok(Expansion {
            base: base.clone(),
            added,
            combined,
            notes,
        })
    }

    pub fn predicate(&self, name: &str) -> Option<&AddedPredicate> {
        self.added.iter().find(|p| p.name == name)
    }
}

fn singleton(size: usize, c: usize) -> Result<TupleSet> {
    TupleSet::from_tuples(size, 1, [&[c][..]])
}

/// Adds `P_a = {a}` for every element `a`.
pub fn expand_singletons(structure: &FiniteStructure) -> Result<Expansion> {
    let s = structure.size();
    let added = (0..s)
        .map(|a| {
            Ok(AddedPredicate {
                name: format!("P_{a}"),
                arity: 1,
                tuples: singleton(s, a)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Expansion::build(structure, "singletons", added, vec![SINGLETON_NOTE.to_string()])
}

/// Adds `D_i` and `R_i = {c_i}` for each `c_i` in the range of the designated
/// operation. With an identity `e` the range is taken over non-identity
/// arguments; without one it is `M·M` and `D_i` ranges over all of `M²`.
pub fn expand_finite_range(structure: &FiniteStructure, rows: IdentityRows) -> Result<Expansion> {
    let class = classify(structure)?;
    let op = structure.operation().ok_or(Error::NoBinaryOperation)?;
    let s = structure.size();
    let excluded = match rows {
        IdentityRows::Exclude => class.identity,
        IdentityRows::Include => None,
    };
    let range: Vec<usize> = match excluded {
        Some(_) => class.range.clone(),
        None => op.range(),
    };
    let domain = |a: usize, b: usize| excluded.is_none_or(|e| a != e && b != e);

    let mut d_sets = Vec::with_capacity(range.len());
    for &c in &range {
        d_sets.push(TupleSet::from_predicate(s, 2, |t| {
            domain(t[0], t[1]) && op.table[t[0] * s + t[1]] == c
        })?);
    }
    let expected = TupleSet::from_predicate(s, 2, |t| domain(t[0], t[1]))?;
    check_partition(&d_sets, &expected)?;

    let mut added = Vec::new();
    for (i, (d, &c)) in d_sets.into_iter().zip(&range).enumerate() {
        added.push(AddedPredicate {
            name: format!("D_{}", i + 1),
            arity: 2,
            tuples: d,
        });
        added.push(AddedPredicate {
            name: format!("R_{}", i + 1),
            arity: 1,
            tuples: singleton(s, c)?,
        });
    }
    let mut notes = vec![format!(
        "operation `{}`; range {:?}; identity {}; D predicates {} identity rows",
        op.name,
        range,
        class.identity.map_or("absent".to_string(), |e| e.to_string()),
        if excluded.is_some() { "exclude" } else { "include" },
    )];
    if class.is_group {
        notes.push(GROUP_NOTE.to_string());
    }
    Expansion::build(structure, "finite_range", added, notes)
}

/// The sets must be pairwise disjoint with union exactly `whole`.
fn check_partition(parts: &[TupleSet], whole: &TupleSet) -> Result<()> {
    let mut union = TupleSet::empty(whole.size(), whole.arity())?;
    for p in parts {
        if !union.is_disjoint(p) {
            return Err(Error::InvariantViolation("D predicates overlap".into()));
        }
        union.union_with(p);
    }
    if &union != whole {
        return Err(Error::InvariantViolation(
            "D predicates do not cover their domain".into(),
        ));
    }
    Ok(())
}

/// For every function `f_j` (arity `n_j`) and every `c_i` in the union of all
/// ranges, adds `D_i_j = f_j⁻¹(c_i)`; also adds `R_i = {c_i}`.
pub fn expand_general_algebra(structure: &FiniteStructure) -> Result<Expansion> {
    let functions = structure.functions();
    if functions.is_empty() {
        return Err(Error::NoFunctionSymbols);
    }
    let s = structure.size();
    let mut range: Vec<usize> = functions.iter().flat_map(|f| f.table.iter().copied()).collect();
    range.sort_unstable();
    range.dedup();

    let mut added = Vec::new();
    for (i, &c) in range.iter().enumerate() {
        for (j, f) in functions.iter().enumerate() {
            let mut preimage = TupleSet::empty(s, f.arity)?;
            for (rank, &v) in f.table.iter().enumerate() {
                if v == c {
                    preimage.insert_rank(rank);
                }
            }
            added.push(AddedPredicate {
                name: format!("D_{}_{}", i + 1, j + 1),
                arity: f.arity,
                tuples: preimage,
            });
        }
    }
    for (i, &c) in range.iter().enumerate() {
        added.push(AddedPredicate {
            name: format!("R_{}", i + 1),
            arity: 1,
            tuples: singleton(s, c)?,
        });
    }
    let symbols: Vec<String> = functions
        .iter()
        .enumerate()
        .map(|(j, f)| format!("j={} -> `{}`", j + 1, f.name))
        .collect();
    let notes = vec![format!("range {:?}; functions {}", range, symbols.join(", "))];
    Expansion::build(structure, "general", added, notes)
}
