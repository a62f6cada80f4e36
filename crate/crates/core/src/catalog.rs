//! Catalog ids for structure classes and the fixed row order of the printed
//! D[P] sweep.
//!
//! Ids read `D[P]-k`, `k` being the 1-based position of the class in
//! [`enumerate_classes`]. The 3[4] block also accepts the SHJ names `I`..`VI`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structures::{enumerate_classes, CategoryStructure};

const TABLE_ROWS: &str = include_str!("../data/table_rows.tsv");

pub const SHJ_NAMES: [&str; 6] = ["I", "II", "III", "IV", "V", "VI"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureClassId {
    pub dims: usize,
    pub p: usize,
    pub index: usize,
}

impl fmt::Display for StructureClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]-{}", self.dims, self.p, self.index)
    }
}

impl Serialize for StructureClassId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Splits `D[P]` or `D[P]-suffix`.
fn split_block(text: &str) -> Option<(usize, usize, Option<&str>)> {
    let (dims, rest) = text.trim().split_once('[')?;
    let (p, rest) = rest.split_once(']')?;
    let suffix = match rest {
        "" => None,
        _ => Some(rest.strip_prefix('-')?),
    };
    Some((dims.trim().parse().ok()?, p.trim().parse().ok()?, suffix))
}

impl FromStr for StructureClassId {
    type Err = Error;

    /// Numeric ids only; aliases need [`resolve`].
    fn from_str(text: &str) -> Result<Self> {
        let invalid = || Error::InvalidClassId(text.to_string());
        let (dims, p, suffix) = split_block(text).ok_or_else(invalid)?;
        let index = suffix.and_then(|s| s.parse().ok()).ok_or_else(invalid)?;
        if index == 0 {
            return Err(invalid());
        }
        Ok(Self { dims, p, index })
    }
}

/// One row of the printed sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogRow {
    pub dims: usize,
    pub p: usize,
    /// 1-based position within its block as printed
    pub row: usize,
    pub alias: Option<String>,
    pub structure: CategoryStructure,
}

impl CatalogRow {
    pub fn block(&self) -> String {
        format!("{}[{}]", self.dims, self.p)
    }
}

/// Rows of the sweep in printed order.
pub fn table_rows() -> &'static [CatalogRow] {
    static ROWS: OnceLock<Vec<CatalogRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        TABLE_ROWS
            .lines()
            .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
            .map(|line| {
                let fields: Vec<&str> = line.split('\t').collect();
                let (dims, p, _) = split_block(fields[0]).expect("block column");
                CatalogRow {
                    dims,
                    p,
                    row: fields[1].parse().expect("row column"),
                    alias: (fields[2] != "-").then(|| fields[2].to_string()),
                    structure: CategoryStructure::parse(fields[3], dims).expect("structure column"),
                }
            })
            .collect()
    })
}

/// Blocks of the sweep in printed order.
pub fn table_blocks() -> Vec<(usize, usize)> {
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    for row in table_rows() {
        if blocks.last() != Some(&(row.dims, row.p)) {
            blocks.push((row.dims, row.p));
        }
    }
    blocks
}

/// Catalog id of the class containing `s` (in up parity).
pub fn class_id(s: &CategoryStructure) -> Result<StructureClassId> {
    let canonical = s.canonical_form();
    let (dims, p) = (canonical.dims(), canonical.size());
    let index = enumerate_classes(dims, p)?
        .iter()
        .position(|c| *c == canonical)
        .expect("canonical form is always enumerated");
    Ok(StructureClassId {
        dims,
        p,
        index: index + 1,
    })
}

/// Looks up `D[P]-k` or `3[4]-<SHJ name>`, returning the id and the class
/// representative.
pub fn resolve(text: &str) -> Result<(StructureClassId, CategoryStructure)> {
    let invalid = || Error::InvalidClassId(text.to_string());
    let (dims, p, suffix) = split_block(text).ok_or_else(invalid)?;
    let suffix = suffix.ok_or_else(invalid)?;
    if let Ok(index) = suffix.parse::<usize>() {
        let classes = enumerate_classes(dims, p)?;
        if index == 0 || index > classes.len() {
            return Err(Error::ClassIndexOutOfRange {
                dims,
                p,
                index,
                count: classes.len(),
            });
        }
        let structure = classes[index - 1].clone();
        return Ok((StructureClassId { dims, p, index }, structure));
    }
    let row = table_rows()
        .iter()
        .find(|r| r.dims == dims && r.p == p && r.alias.as_deref() == Some(suffix))
        .ok_or_else(invalid)?;
    Ok((class_id(&row.structure)?, row.structure.clone()))
}

/// SHJ types I..VI in order.
pub fn shj_types() -> Vec<CategoryStructure> {
    SHJ_NAMES
        .iter()
        .map(|name| resolve(&format!("3[4]-{name}")).expect("pinned alias").1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mapping_file_shape() {
        let rows = table_rows();
        assert_eq!(rows.len(), 46);
        let sizes: Vec<usize> = table_blocks()
            .iter()
            .map(|b| rows.iter().filter(|r| (r.dims, r.p) == *b).count())
            .collect();
        assert_eq!(sizes, [1, 2, 1, 3, 3, 6, 1, 4, 6, 19]);
        for r in rows {
            assert!(r.structure.is_canonical(), "{}", r.structure);
            assert_eq!((r.structure.dims(), r.structure.size()), (r.dims, r.p));
        }
    }

    #[test]
    fn every_class_printed_once() {
        for (dims, p) in table_blocks() {
            let mut printed: Vec<_> = table_rows()
                .iter()
                .filter(|r| (r.dims, r.p) == (dims, p))
                .map(|r| r.structure.clone())
                .collect();
            printed.sort();
            assert_eq!(printed, enumerate_classes(dims, p).unwrap());
        }
    }

    #[test]
    fn ids_and_aliases() {
        let (id, ii) = resolve("3[4]-II").unwrap();
        assert_eq!(ii.to_string(), "{000,001,110,111}");
        // enumeration order is I, IV, III, V, II, VI
        assert_eq!(id.to_string(), "3[4]-5");
        assert_eq!(resolve("3[4]-5").unwrap().1, ii);
        assert_eq!("3[4]-5".parse::<StructureClassId>().unwrap(), id);
        assert_eq!(class_id(&ii.complement()).unwrap(), id);
        assert!(matches!(
            resolve("3[4]-7"),
            Err(Error::ClassIndexOutOfRange { count: 6, .. })
        ));
        assert!(resolve("3[4]-VII").is_err());
        assert!(resolve("3[4]").is_err());
        assert!(resolve("3[9]-1").is_err());
        assert!("3[4]-0".parse::<StructureClassId>().is_err());
        assert!("x".parse::<StructureClassId>().is_err());
    }

    #[test]
    fn shj_list() {
        let names: Vec<String> = shj_types().iter().map(ToString::to_string).collect();
        assert_eq!(names[0], "{000,001,010,011}");
        assert_eq!(names[5], "{000,011,101,110}");
    }
}
