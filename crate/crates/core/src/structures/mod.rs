//! Finite structures: a universe `{0..s-1}` with total function tables,
//! relations and constants over a declared signature.

mod classify;
mod families;
mod format;

use serde::Serialize;

pub use classify::{classify, ClassReport, MagmaFlag};
pub use families::{gen_family, Family};
pub use format::{parse_structure, serialize_structure};

use crate::automorph::Permutation;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::orbits::{tuple_rank, TupleSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolKind {
    Constant,
    Function,
    Relation,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Symbol {
    pub name: String,
    pub kind: SymbolKind,
    pub arity: usize,
}

/// Ordered symbol list: constants, then functions, then relations, each sorted by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub symbols: Vec<Symbol>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constant {
    pub name: String,
    pub value: usize,
}

/// A total `k`-ary operation stored in lexicographic argument order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Function {
    pub name: String,
    pub arity: usize,
    pub table: Vec<usize>,
}

impl Function {
    /// `f(args)`; panics if `args` is out of range.
    #[inline]
    pub fn apply(&self, args: &[usize], size: usize) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        self.table[args.iter().fold(0, |r, &a| r * size + a)]
    }

    /// Range of the function as a sorted, deduplicated list.
    pub fn range(&self) -> Vec<usize> {
        let mut values = self.table.clone();
        values.sort_unstable();
        values.dedup();
        values
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub tuples: TupleSet,
}

impl Relation {
    pub fn arity(&self) -> usize {
        self.tuples.arity()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteStructure {
    name: String,
    size: usize,
    constants: Vec<Constant>,
    functions: Vec<Function>,
    relations: Vec<Relation>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn check_identifier(name: &str) -> Result<()> {
    if is_identifier(name) {
        Ok(())
    } else {
        Err(Error::InvalidStructure(format!("`{name}` is not an identifier")))
    }
}

impl FiniteStructure {
    /// An empty-signature structure on `{0..size-1}`.
    pub fn new(name: impl Into<String>, size: usize) -> Result<Self> {
        let name = name.into();
        check_identifier(&name)?;
        if size == 0 {
            return Err(Error::InvalidStructure(
                "universe must have at least one element".into(),
            ));
        }
        Ok(FiniteStructure {
            name,
            size,
            constants: Vec::new(),
            functions: Vec::new(),
            relations: Vec::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn constants(&self) -> &[Constant] {
        &self.constants
    }

    pub fn functions(&self) -> &[Function] {
        &self.functions
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        check_identifier(&name)?;
        self.name = name;
        Ok(self)
    }

    fn has_symbol(&self, name: &str) -> bool {
        self.constants.iter().any(|c| c.name == name)
            || self.functions.iter().any(|f| f.name == name)
            || self.relations.iter().any(|r| r.name == name)
    }

    fn check_new_symbol(&self, name: &str) -> Result<()> {
        check_identifier(name)?;
        if self.has_symbol(name) {
            return Err(Error::DuplicateSymbol(name.to_string()));
        }
        Ok(())
    }

    pub fn add_constant(&mut self, name: impl Into<String>, value: usize) -> Result<()> {
        let name = name.into();
        self.check_new_symbol(&name)?;
        if value >= self.size {
            return Err(Error::IndexOutOfRange {
                value,
                bound: self.size,
            });
        }
        let at = self.constants.partition_point(|c| c.name < name);
        self.constants.insert(at, Constant { name, value });
        Ok(())
    }

    pub fn add_function(&mut self, name: impl Into<String>, arity: usize, table: Vec<usize>) -> Result<()> {
        let name = name.into();
        self.check_new_symbol(&name)?;
        if arity == 0 {
            return Err(Error::InvalidStructure(format!(
                "function `{name}` must have arity at least 1 (use a constant)"
            )));
        }
        let expected = Limits::default().tuple_space(self.size, arity)?;
        if table.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= self.size) {
            return Err(Error::IndexOutOfRange {
                value: bad,
                bound: self.size,
            });
        }
        let at = self.functions.partition_point(|f| f.name < name);
        self.functions.insert(at, Function { name, arity, table });
        Ok(())
    }

    pub fn add_relation(&mut self, name: impl Into<String>, tuples: TupleSet) -> Result<()> {
        let name = name.into();
        self.check_new_symbol(&name)?;
        if tuples.arity() == 0 {
            return Err(Error::InvalidStructure(format!(
                "relation `{name}` must have arity at least 1"
            )));
        }
        if tuples.size() != self.size {
            return Err(Error::LengthMismatch {
                expected: self.size,
                found: tuples.size(),
            });
        }
        let at = self.relations.partition_point(|r| r.name < name);
        self.relations.insert(at, Relation { name, tuples });
        Ok(())
    }

    pub fn with_function(mut self, name: impl Into<String>, arity: usize, table: Vec<usize>) -> Result<Self> {
        self.add_function(name, arity, table)?;
        Ok(self)
    }

    pub fn with_relation(mut self, name: impl Into<String>, tuples: TupleSet) -> Result<Self> {
        self.add_relation(name, tuples)?;
        Ok(self)
    }

    pub fn with_constant(mut self, name: impl Into<String>, value: usize) -> Result<Self> {
        self.add_constant(name, value)?;
        Ok(self)
    }

    pub fn signature(&self) -> Signature {
        let constants = self.constants.iter().map(|c| Symbol {
            name: c.name.clone(),
            kind: SymbolKind::Constant,
            arity: 0,
        });
        let functions = self.functions.iter().map(|f| Symbol {
            name: f.name.clone(),
            kind: SymbolKind::Function,
            arity: f.arity,
        });
        let relations = self.relations.iter().map(|r| Symbol {
            name: r.name.clone(),
            kind: SymbolKind::Relation,
            arity: r.arity(),
        });
        Signature {
            symbols: constants.chain(functions).chain(relations).collect(),
        }
    }

    pub fn function(&self, name: &str) -> Option<&Function> {
        self.functions.iter().find(|f| f.name == name)
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    /// The designated operation: the first binary function in signature order.
    pub fn operation(&self) -> Option<&Function> {
        self.functions.iter().find(|f| f.arity == 2)
    }

    /// Graph `{(a_1..a_k, f(a))}` of a `k`-ary function, as a `(k+1)`-ary relation.
    pub fn graph_of(&self, name: &str) -> Result<TupleSet> {
        let f = self
            .function(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        TupleSet::from_predicate(self.size, f.arity + 1, |t| {
            f.apply(&t[..f.arity], self.size) == t[f.arity]
        })
    }

    /// Graph of `y = x_1 · x_2 · … · x_n` (left-associated) for a binary function.
    pub fn power_graph_of(&self, name: &str, n: usize) -> Result<TupleSet> {
        let f = self
            .function(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        if f.arity != 2 {
            return Err(Error::InvalidParameter(format!(
                "iterated products need a binary function; `{name}` has arity {}",
                f.arity
            )));
        }
        if n < 2 {
            return Err(Error::InvalidParameter("product length must be at least 2".into()));
        }
        let s = self.size;
        TupleSet::from_predicate(s, n + 1, |t| {
            let product = t[1..n].iter().fold(t[0], |acc, &x| f.apply(&[acc, x], s));
            product == t[n]
        })
    }

    /// The isomorphic copy obtained by renaming every element `a` to `q(a)`.
    pub fn relabel(&self, q: &Permutation) -> Result<FiniteStructure> {
        if q.len() != self.size {
            return Err(Error::LengthMismatch {
                expected: self.size,
                found: q.len(),
            });
        }
        let s = self.size;
        let inv = q.inverse();
        let mut out = FiniteStructure::new(self.name.clone(), s)?;
        for c in &self.constants {
            out.add_constant(c.name.clone(), q.apply(c.value))?;
        }
        for f in &self.functions {
            // f'(b) = q(f(q^-1(b)))
            let mut table = vec![0; f.table.len()];
            let mut pre = vec![0; f.arity];
            crate::orbits::for_each_tuple(s, f.arity, |rank, b| {
                for (slot, &x) in pre.iter_mut().zip(b) {
                    *slot = inv.apply(x);
                }
                table[rank] = q.apply(f.apply(&pre, s));
            });
            out.add_function(f.name.clone(), f.arity, table)?;
        }
        for r in &self.relations {
            let mut image = TupleSet::empty(s, r.arity())?;
            for t in r.tuples.tuples() {
                let mapped: Vec<usize> = t.iter().map(|&a| q.apply(a)).collect();
                image.insert_rank(tuple_rank(&mapped, s)?);
            }
            out.add_relation(r.name.clone(), image)?;
        }
        Ok(out)
    }
}

impl std::str::FromStr for FiniteStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_structure(s)
    }
}

impl std::fmt::Display for FiniteStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_structure(self))
    }
}
