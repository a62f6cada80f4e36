//! Boolean category structures over `dims` binary dimensions.
//!
//! A stimulus is a `dims`-digit bitstring stored as an integer, first digit
//! most significant, so dimension `i` lives at bit `dims - 1 - i`. Category
//! A is kept as a sorted list of stimuli; category B is its complement.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_DIMS: usize = 8;

pub type Stimulus = u16;

/// Renders a stimulus as a `dims`-digit bitstring.
pub fn bitstring(stimulus: Stimulus, dims: usize) -> String {
    (0..dims)
        .map(|i| if stimulus >> (dims - 1 - i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Value (0 or 1) of dimension `dim` in `stimulus`.
#[inline]
pub fn dimension_value(stimulus: Stimulus, dims: usize, dim: usize) -> u16 {
    stimulus >> (dims - 1 - dim) & 1
}

fn check_dims(dims: usize) -> Result<()> {
    if (1..=MAX_DIMS).contains(&dims) {
        Ok(())
    } else {
        Err(Error::DimsOutOfRange(dims))
    }
}

/// Category A over a `dims`-dimensional binary stimulus space.
///
/// Ordering is by `dims`, then lexicographically by the sorted stimulus list.
/// Within one (dims, |A|) block this is the order used for canonical
/// representatives and catalog listings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CategoryStructure {
    dims: u8,
    members: Vec<Stimulus>,
}

impl CategoryStructure {
    pub fn new(dims: usize, members: impl IntoIterator<Item = Stimulus>) -> Result<Self> {
        check_dims(dims)?;
        let space = 1usize << dims;
        let mut seen = vec![false; space];
        let mut out = Vec::new();
        for (i, stimulus) in members.into_iter().enumerate() {
            if usize::from(stimulus) >= space {
                return Err(Error::StimulusOutOfRange { stimulus, dims });
            }
            if std::mem::replace(&mut seen[usize::from(stimulus)], true) {
                return Err(Error::DuplicateStimulus {
                    position: i + 1,
                    token: bitstring(stimulus, dims),
                });
            }
            out.push(stimulus);
        }
        Self::finish(dims, out)
    }

    fn finish(dims: usize, mut members: Vec<Stimulus>) -> Result<Self> {
        members.sort_unstable();
        if members.is_empty() {
            return Err(Error::EmptyCategory);
        }
        if members.len() == 1 << dims {
            return Err(Error::FullCategory);
        }
        Ok(Self {
            dims: dims as u8,
            members,
        })
    }

    /// Parses bitstrings separated by `,` or `|`. Surrounding braces and
    /// whitespace are ignored.
    pub fn parse(text: &str, dims: usize) -> Result<Self> {
        check_dims(dims)?;
        Self::parse_tokens(text, Some(dims))
    }

    /// Like [`parse`](Self::parse) but takes the dimension count from the
    /// first token.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        Self::parse_tokens(text, None)
    }

    fn parse_tokens(text: &str, dims: Option<usize>) -> Result<Self> {
        let body = text.trim();
        let body = body.strip_prefix('{').unwrap_or(body);
        let body = body.strip_suffix('}').unwrap_or(body);
        let mut dims = dims;
        let mut stimuli = Vec::new();
        if body.trim().is_empty() {
            return Err(Error::EmptyCategory);
        }
        for (i, raw) in body.split([',', '|']).enumerate() {
            let position = i + 1;
            let token = raw.trim();
            let expected = *dims.get_or_insert(token.len());
            if let Some(ch) = token.chars().find(|c| *c != '0' && *c != '1') {
                return Err(Error::InvalidDigit {
                    position,
                    token: token.to_string(),
                    ch,
                });
            }
            if token.len() != expected || expected == 0 {
                return Err(Error::WrongLength {
                    position,
                    token: token.to_string(),
                    expected,
                    found: token.len(),
                });
            }
            check_dims(expected)?;
            let value = token
                .bytes()
                .fold(0u16, |acc, b| (acc << 1) | u16::from(b - b'0'));
            stimuli.push(value);
        }
        Self::new(dims.unwrap_or(0), stimuli)
    }

    pub fn dims(&self) -> usize {
        usize::from(self.dims)
    }

    /// Category A, ascending.
    pub fn members(&self) -> &[Stimulus] {
        &self.members
    }

    /// |A|
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Number of stimuli in the space, `2^dims`.
    pub fn space_size(&self) -> usize {
        1 << self.dims
    }

    pub fn contains(&self, stimulus: Stimulus) -> bool {
        self.members.binary_search(&stimulus).is_ok()
    }

    /// Membership indexed by stimulus.
    pub fn membership(&self) -> Vec<bool> {
        let mut table = vec![false; self.space_size()];
        for &s in &self.members {
            table[usize::from(s)] = true;
        }
        table
    }

    /// True when |A| = |B|.
    pub fn is_balanced(&self) -> bool {
        2 * self.size() == self.space_size()
    }

    /// Category B as a structure of its own.
    pub fn complement(&self) -> Self {
        let members = (0..self.space_size() as Stimulus)
            .filter(|s| !self.contains(*s))
            .collect();
        Self {
            dims: self.dims,
            members,
        }
    }

    /// Image of category A under a relabeling, ascending.
    fn image(&self, relabeling: &Relabeling) -> Vec<Stimulus> {
        let mut image: Vec<Stimulus> = self
            .members
            .iter()
            .map(|&s| relabeling.apply(s))
            .collect();
        image.sort_unstable();
        image
    }

    /// All distinct images under dimension permutations and value flips,
    /// plus their complements when |A| = |B|.
    pub fn symmetry_orbit(&self) -> BTreeSet<CategoryStructure> {
        let dims = self.dims();
        let mut orbit = BTreeSet::new();
        for g in relabelings(dims) {
            let image = Self {
                dims: self.dims,
                members: self.image(&g),
            };
            if self.is_balanced() {
                orbit.insert(image.complement());
            }
            orbit.insert(image);
        }
        orbit
    }

    /// Orbit representative in up parity (|A| ≤ |B|) with the smallest
    /// stimulus list. Structures with |A| > |B| are canonicalized through
    /// their complement.
    pub fn canonical_form(&self) -> Self {
        if 2 * self.size() > self.space_size() {
            return self.complement().canonical_form();
        }
        let best = relabelings(self.dims())
            .flat_map(|g| {
                let image = self.image(&g);
                let flipped = self.is_balanced().then(|| {
                    Self {
                        dims: self.dims,
                        members: image.clone(),
                    }
                    .complement()
                    .members
                });
                std::iter::once(image).chain(flipped)
            })
            .min()
            .expect("group is never empty");
        Self {
            dims: self.dims,
            members: best,
        }
    }

    /// Cheaper test for `self == self.canonical_form()` that stops at the
    /// first smaller image.
    pub fn is_canonical(&self) -> bool {
        if 2 * self.size() > self.space_size() {
            return false;
        }
        for g in relabelings(self.dims()) {
            let image = self.image(&g);
            if image < self.members {
                return false;
            }
            if self.is_balanced() {
                let comp = Self {
                    dims: self.dims,
                    members: image,
                }
                .complement();
                if comp.members < self.members {
                    return false;
                }
            }
        }
        true
    }

    /// Members joined with `|`, the form used in data files.
    pub fn to_pipe_string(&self) -> String {
        self.members
            .iter()
            .map(|&s| bitstring(s, self.dims()))
            .join("|")
    }
}

impl fmt::Display for CategoryStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.members
                .iter()
                .map(|&s| bitstring(s, self.dims()))
                .join(",")
        )
    }
}

impl Serialize for CategoryStructure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One element of the hyperoctahedral group: dimension `i` of the input is
/// flipped when bit `i` of `flips` is set, then moved to position `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    dims: usize,
    perm: Vec<usize>,
    flips: u16,
}

impl Relabeling {
    pub fn new(perm: Vec<usize>, flips: u16) -> Self {
        Self {
            dims: perm.len(),
            perm,
            flips,
        }
    }

    pub fn apply(&self, stimulus: Stimulus) -> Stimulus {
        let d = self.dims;
        let mut out = 0;
        for (i, &target) in self.perm.iter().enumerate() {
            let bit = dimension_value(stimulus, d, i) ^ (self.flips >> i & 1);
            out |= bit << (d - 1 - target);
        }
        out
    }
}

/// Every dimension permutation combined with every flip pattern:
/// `dims! * 2^dims` elements.
pub fn relabelings(dims: usize) -> impl Iterator<Item = Relabeling> {
    (0..dims).permutations(dims).flat_map(move |perm| {
        (0..1u16 << dims).map(move |flips| Relabeling::new(perm.clone(), flips))
    })
}

/// Order of the relabeling group, `dims! * 2^dims`.
pub fn group_order(dims: usize) -> usize {
    (1..=dims).product::<usize>() << dims
}

/// One canonical representative per equivalence class of structures with
/// |A| = `p`, ascending.
pub fn enumerate_classes(dims: usize, p: usize) -> Result<Vec<CategoryStructure>> {
    check_dims(dims)?;
    let space = 1usize << dims;
    if p == 0 || 2 * p > space {
        return Err(Error::ClassSizeOutOfRange {
            dims,
            p,
            max: space / 2,
        });
    }
    Ok((0..space as Stimulus)
        .combinations(p)
        .map(|members| CategoryStructure {
            dims: dims as u8,
            members,
        })
        .filter(CategoryStructure::is_canonical)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> CategoryStructure {
        CategoryStructure::parse_inferred(text).unwrap()
    }

    #[test]
    fn parses_both_separators_and_braces() {
        let a = s("{000,001,010,011}");
        let b = s("000|001|010|011");
        assert_eq!(a, b);
        assert_eq!(a.members(), &[0, 1, 2, 3]);
        assert_eq!(a.to_string(), "{000,001,010,011}");
        assert_eq!(CategoryStructure::parse("00", 2).unwrap().size(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            CategoryStructure::parse("000,000", 3),
            Err(Error::DuplicateStimulus { position: 2, .. })
        ));
        assert!(matches!(
            CategoryStructure::parse("000,01", 3),
            Err(Error::WrongLength {
                position: 2,
                expected: 3,
                found: 2,
                ..
            })
        ));
        assert!(matches!(
            CategoryStructure::parse("0a0", 3),
            Err(Error::InvalidDigit { ch: 'a', .. })
        ));
        assert_eq!(CategoryStructure::parse("{}", 2), Err(Error::EmptyCategory));
        assert_eq!(
            CategoryStructure::parse("00,01,10,11", 2),
            Err(Error::FullCategory)
        );
        assert_eq!(
            CategoryStructure::parse("0", 9),
            Err(Error::DimsOutOfRange(9))
        );
        assert!(CategoryStructure::parse_inferred("000000000").is_err());
    }

    #[test]
    fn relabeling_moves_and_flips() {
        // swap dims 0 and 1, flip dim 2
        let g = Relabeling::new(vec![1, 0, 2], 0b100);
        assert_eq!(g.apply(0b100), 0b011);
        assert_eq!(g.apply(0b000), 0b001);
        assert_eq!(relabelings(3).count(), group_order(3));
        assert_eq!(group_order(4), 384);
    }

    #[test]
    fn complement_examples() {
        let c = s("00").complement();
        assert_eq!(c.to_string(), "{01,10,11}");
        let vi = s("000,011,101,110");
        assert_eq!(vi.complement().to_string(), "{001,010,100,111}");
        assert_eq!(vi.complement().complement(), vi);
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(s("111").canonical_form(), s("000"));
        let i = s("000,001,010,011");
        assert_eq!(i.canonical_form(), i);
        assert!(i.is_canonical());
        // up parity goes through the complement
        assert_eq!(s("01,10,11").canonical_form(), s("00"));
        assert!(!s("01,10,11").is_canonical());
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(s("000,001,010,011").symmetry_orbit().len(), 6);
        let two_one: Vec<String> = s("00")
            .symmetry_orbit()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(two_one, ["{00}", "{01}", "{10}", "{11}"]);
        let vi = s("000,011,101,110");
        let orbit = vi.symmetry_orbit();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&vi.complement()));
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (3, 4)]
            .iter()
            .map(|&(d, p)| enumerate_classes(d, p).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 1, 3, 3, 6]);
        assert_eq!(enumerate_classes(4, 2).unwrap().len(), 4);
    }

    #[test]
    fn enumerate_range_errors() {
        assert!(matches!(
            enumerate_classes(3, 5),
            Err(Error::ClassSizeOutOfRange { max: 4, .. })
        ));
        assert!(enumerate_classes(3, 0).is_err());
        assert!(enumerate_classes(0, 1).is_err());
    }
}
