//! Bundled structure files.

use crate::error::Result;
use crate::structures::{parse_structure, FiniteStructure};

/// `(file name, contents)` of every bundled structure.
pub const FILES: &[(&str, &str)] = &[
    ("z2.struct", include_str!("../corpus/z2.struct")),
    ("z3.struct", include_str!("../corpus/z3.struct")),
    ("z4.struct", include_str!("../corpus/z4.struct")),
    ("z5.struct", include_str!("../corpus/z5.struct")),
    ("z6.struct", include_str!("../corpus/z6.struct")),
    ("klein.struct", include_str!("../corpus/klein.struct")),
    ("s3.struct", include_str!("../corpus/s3.struct")),
    ("flat_monoid_2.struct", include_str!("../corpus/flat_monoid_2.struct")),
    ("flat_monoid_3.struct", include_str!("../corpus/flat_monoid_3.struct")),
    ("flat_monoid_4.struct", include_str!("../corpus/flat_monoid_4.struct")),
    (
        "finite_range_3_2.struct",
        include_str!("../corpus/finite_range_3_2.struct"),
    ),
    (
        "finite_range_4_2.struct",
        include_str!("../corpus/finite_range_4_2.struct"),
    ),
    (
        "finite_range_5_2.struct",
        include_str!("../corpus/finite_range_5_2.struct"),
    ),
    ("path4.struct", include_str!("../corpus/path4.struct")),
    ("const_map.struct", include_str!("../corpus/const_map.struct")),
];

/// Parses every bundled structure, in listing order.
pub fn load() -> Result<Vec<FiniteStructure>> {
    FILES.iter().map(|(_, text)| parse_structure(text)).collect()
}

/// Parses the bundled structure with the given file name.
pub fn get(file: &str) -> Option<Result<FiniteStructure>> {
    FILES
        .iter()
        .find(|(name, _)| *name == file)
        .map(|(_, text)| parse_structure(text))
}
