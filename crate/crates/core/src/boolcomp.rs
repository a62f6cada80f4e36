//! Boolean complexity: literal count of a minimal disjunctive normal form
//! for category A.
//!
//! Prime implicants come from Quine-McCluskey merging. The cover is chosen by
//! exact branch and bound over the primes, so the count is the true two-level
//! minimum rather than a heuristic estimate.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::structures::{CategoryStructure, Stimulus};

/// A product term. Bit positions follow the stimulus encoding: dimension `i`
/// is bit `dims - 1 - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Implicant {
    dims: u8,
    care: u16,
    values: u16,
}

/// State of one dimension inside an implicant, ordered as rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Literal {
    Positive,
    Negated,
    Absent,
}

impl Implicant {
    pub fn new(dims: usize, care: u16, values: u16) -> Self {
        debug_assert_eq!(values & !care, 0);
        Self {
            dims: dims as u8,
            care,
            values: values & care,
        }
    }

    pub fn minterm(dims: usize, stimulus: Stimulus) -> Self {
        Self::new(dims, (1 << dims) - 1, stimulus)
    }

    pub fn dims(&self) -> usize {
        usize::from(self.dims)
    }

    pub fn care_mask(&self) -> u16 {
        self.care
    }

    pub fn values(&self) -> u16 {
        self.values
    }

    pub fn literal_count(&self) -> usize {
        self.care.count_ones() as usize
    }

    pub fn covers(&self, stimulus: Stimulus) -> bool {
        stimulus & self.care == self.values
    }

    /// Stimuli matched by this term, ascending.
    pub fn stimuli(&self) -> impl Iterator<Item = Stimulus> + '_ {
        (0..1u16 << self.dims).filter(|&s| self.covers(s))
    }

    pub fn literal(&self, dim: usize) -> Literal {
        let bit = 1 << (self.dims() - 1 - dim);
        if self.care & bit == 0 {
            Literal::Absent
        } else if self.values & bit != 0 {
            Literal::Positive
        } else {
            Literal::Negated
        }
    }

    fn sort_key(&self) -> impl Iterator<Item = Literal> + '_ {
        (0..self.dims()).map(|d| self.literal(d))
    }
}

impl Ord for Implicant {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dims
            .cmp(&other.dims)
            .then_with(|| self.sort_key().cmp(other.sort_key()))
    }
}

impl PartialOrd for Implicant {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dimension letters `a, b, c, ...`; negation is a trailing `'`.
impl fmt::Display for Implicant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.care == 0 {
            return f.write_str("1");
        }
        for d in 0..self.dims() {
            let letter = char::from(b'a' + d as u8);
            match self.literal(d) {
                Literal::Positive => write!(f, "{letter}")?,
                Literal::Negated => write!(f, "{letter}'")?,
                Literal::Absent => {}
            }
        }
        Ok(())
    }
}

impl Serialize for Implicant {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All prime implicants of category A, sorted.
pub fn prime_implicants(s: &CategoryStructure) -> Vec<Implicant> {
    let dims = s.dims();
    let mut current: BTreeSet<Implicant> = s
        .members()
        .iter()
        .map(|&m| Implicant::minterm(dims, m))
        .collect();
    let mut primes = Vec::new();
    while !current.is_empty() {
        let mut next = BTreeSet::new();
        let mut merged = BTreeSet::new();
        for cube in &current {
            for bit in (0..dims).map(|i| 1u16 << i).filter(|b| cube.care & b != 0) {
                let sibling = Implicant::new(dims, cube.care, cube.values ^ bit);
                if current.contains(&sibling) {
                    merged.insert(*cube);
                    next.insert(Implicant::new(dims, cube.care & !bit, cube.values & !bit));
                }
            }
        }
        primes.extend(current.difference(&merged).copied());
        current = next;
    }
    primes.sort();
    primes
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoolComplexityResult {
    pub literal_count: usize,
    pub minimal_cover: Vec<Implicant>,
    pub formula_text: String,
}

/// Renders a cover as `ab + a'b'`.
pub fn formula_text(cover: &[Implicant]) -> String {
    cover
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Minimal-literal DNF for category A. Ties go to fewer terms, then to the
/// lexicographically smaller sorted term list.
pub fn boolean_complexity(s: &CategoryStructure) -> BoolComplexityResult {
    let primes = prime_implicants(s);
    let covering: Vec<Vec<usize>> = s
        .members()
        .iter()
        .map(|&m| (0..primes.len()).filter(|&p| primes[p].covers(m)).collect())
        .collect();
    let mut search = CoverSearch {
        primes: &primes,
        covering: &covering,
        best: None,
    };
    let mut hits = vec![0u32; s.size()];
    search.descend(&mut Vec::new(), &mut hits, 0);
    let (literal_count, cover) = search.best.map(|b| (b.0, b.2)).expect("A is nonempty");
    BoolComplexityResult {
        literal_count,
        formula_text: formula_text(&cover),
        minimal_cover: cover,
    }
}

struct CoverSearch<'a> {
    primes: &'a [Implicant],
    /// primes covering each member of A
    covering: &'a [Vec<usize>],
    best: Option<(usize, usize, Vec<Implicant>)>,
}

impl CoverSearch<'_> {
    fn descend(&mut self, chosen: &mut Vec<usize>, hits: &mut [u32], literals: usize) {
        let cost = (literals, chosen.len());
        let branch = (0..hits.len())
            .filter(|&m| hits[m] == 0)
            .min_by_key(|&m| self.covering[m].len());
        if let Some((best_lits, best_len, _)) = &self.best {
            let best = (*best_lits, *best_len);
            // any completion adds at least one term with at least one literal
            if cost > best || (branch.is_some() && cost >= best) {
                return;
            }
        }
        let Some(m) = branch else {
            let mut cover: Vec<Implicant> = chosen.iter().map(|&p| self.primes[p]).collect();
            cover.sort();
            let better = match &self.best {
                None => true,
                Some((l, n, c)) => (literals, cover.len(), &cover) < (*l, *n, c),
            };
            if better {
                self.best = Some((literals, cover.len(), cover));
            }
            return;
        };
        for &p in self.covering[m].iter() {
            chosen.push(p);
            for (member, primes) in self.covering.iter().enumerate() {
                if primes.contains(&p) {
                    hits[member] += 1;
                }
            }
            self.descend(chosen, hits, literals + self.primes[p].literal_count());
            for (member, primes) in self.covering.iter().enumerate() {
                if primes.contains(&p) {
                    hits[member] -= 1;
                }
            }
            chosen.pop();
        }
    }
}
