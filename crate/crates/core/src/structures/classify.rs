use serde::Serialize;

use super::FiniteStructure;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MagmaFlag {
    pub operation: String,
    /// Every total binary function is a magma operation; recorded per symbol.
    pub is_magma: bool,
}

/// Algebraic classification of the designated binary operation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub operation: String,
    pub binary_functions: Vec<MagmaFlag>,
    pub is_associative: bool,
    /// Least triple `(a, b, c)` with `(a·b)·c ≠ a·(b·c)`.
    pub non_associative_witness: Option<[usize; 3]>,
    pub identity: Option<usize>,
    pub is_monoid: bool,
    pub is_group: bool,
    /// Products of non-identity elements when an identity exists, otherwise `M·M`.
    pub range: Vec<usize>,
}

pub fn classify(structure: &FiniteStructure) -> Result<ClassReport> {
    let op = structure.operation().ok_or(Error::NoBinaryOperation)?;
    let s = structure.size();
    let mul = |a: usize, b: usize| op.table[a * s + b];

    let mut witness = None;
    'outer: for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    witness = Some([a, b, c]);
                    break 'outer;
                }
            }
        }
    }
    let is_associative = witness.is_none();

    let identity = (0..s).find(|&e| (0..s).all(|x| mul(e, x) == x && mul(x, e) == x));
    let is_monoid = is_associative && identity.is_some();
    let is_group = match identity {
        Some(e) if is_monoid => (0..s).all(|a| (0..s).any(|b| mul(a, b) == e && mul(b, a) == e)),
        _ => false,
    };

    let mut range: Vec<usize> = match identity {
        Some(e) => (0..s)
            .filter(|&a| a != e)
            .flat_map(|a| (0..s).filter(move |&b| b != e).map(move |b| (a, b)))
            .map(|(a, b)| mul(a, b))
            .collect(),
        None => op.table.clone(),
    };
    range.sort_unstable();
    range.dedup();

    Ok(ClassReport {
        operation: op.name.clone(),
        binary_functions: structure
            .functions()
            .iter()
            .filter(|f| f.arity == 2)
            .map(|f| MagmaFlag {
                operation: f.name.clone(),
                is_magma: true,
            })
            .collect(),
        is_associative,
        non_associative_witness: witness,
        identity,
        is_monoid,
        is_group,
        range,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::structures::{gen_family, Family};

    fn family(f: Family) -> FiniteStructure {
        gen_family(f, &Limits::default()).unwrap()
    }

    #[test]
    fn cyclic_three_is_a_group() {
        let report = classify(&family(Family::Cyclic(3))).unwrap();
        assert!(report.is_group && report.is_monoid && report.is_associative);
        assert_eq!(report.identity, Some(0));
        assert_eq!(report.range, vec![0, 1, 2]);
    }

    #[test]
    fn flat_monoid_is_not_associative() {
        let report = classify(&family(Family::FlatMonoid(2))).unwrap();
        assert!(!report.is_associative);
        assert!(!report.is_monoid);
        assert_eq!(report.identity, Some(0));
        assert_eq!(report.range, vec![0]);
        // (1·1)·2 = 0·2 = 2 but 1·(1·2) = 1·0 = 1
        assert_eq!(report.non_associative_witness, Some([1, 1, 2]));
    }

    #[test]
    fn no_identity_uses_full_square() {
        // left projection x·y = x: associative, no identity on 2 elements
        let s = FiniteStructure::new("L", 2)
            .unwrap()
            .with_function("mul", 2, vec![0, 0, 1, 1])
            .unwrap();
        let report = classify(&s).unwrap();
        assert_eq!(report.identity, None);
        assert!(report.is_associative && !report.is_monoid);
        assert_eq!(report.range, vec![0, 1]);
    }

    #[test]
    fn needs_binary_operation() {
        let s = FiniteStructure::new("U", 2)
            .unwrap()
            .with_function("f", 1, vec![1, 0])
            .unwrap();
        assert!(matches!(classify(&s), Err(Error::NoBinaryOperation)));
    }

    #[test]
    fn flat_monoid_with_one_non_unit_is_z2() {
        assert!(classify(&family(Family::FlatMonoid(1))).unwrap().is_group);
    }
}
