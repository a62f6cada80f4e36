//! Brute-force oracles shared by the integration suites. They work on
//! bitstrings and plain counting so that they stay independent of the
//! library's bitmask code paths.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use catcomplex::CategoryStructure;

pub fn all_bitstrings(dims: usize) -> Vec<String> {
    (0..1usize << dims)
        .map(|i| format!("{i:0dims$b}"))
        .collect()
}

/// Every structure with both categories nonempty.
pub fn all_structures(dims: usize) -> Vec<CategoryStructure> {
    let space = 1u32 << dims;
    (1..(1u64 << space) - 1)
        .map(|mask| {
            let members = (0..space as u16).filter(|s| mask >> s & 1 == 1);
            CategoryStructure::new(dims, members).unwrap()
        })
        .collect()
}

pub fn member_strings(s: &CategoryStructure) -> BTreeSet<String> {
    s.to_string()
        .trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .map(str::to_string)
        .collect()
}

fn from_strings(dims: usize, set: &BTreeSet<String>) -> CategoryStructure {
    let text: Vec<&str> = set.iter().map(String::as_str).collect();
    CategoryStructure::parse(&text.join(","), dims).unwrap()
}

fn binary_entropy(p: f64) -> f64 {
    [p, 1.0 - p]
        .iter()
        .filter(|&&q| q > 0.0)
        .map(|&q| -q * q.log2())
        .sum()
}

/// H(category | dimensions in `fixed`) under a uniform distribution over
/// stimuli, from the joint distribution.
pub fn conditional_entropy(s: &CategoryStructure, fixed: &[usize]) -> f64 {
    let members = member_strings(s);
    let stimuli = all_bitstrings(s.dims());
    let total = stimuli.len() as f64;
    let mut joint: HashMap<String, (f64, f64)> = HashMap::new();
    for x in &stimuli {
        let key: String = fixed.iter().map(|&d| x.as_bytes()[d] as char).collect();
        let entry = joint.entry(key).or_default();
        entry.0 += 1.0;
        if members.contains(x) {
            entry.1 += 1.0;
        }
    }
    joint
        .values()
        .map(|(n, a)| (n / total) * binary_entropy(a / n))
        .sum()
}

/// Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            items.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

/// Orbit by rewriting bitstrings: every permutation of digit positions,
/// every flip pattern, and complements when |A| = |B|.
pub fn orbit_oracle(s: &CategoryStructure) -> BTreeSet<BTreeSet<String>> {
    let dims = s.dims();
    let members = member_strings(s);
    let everything: BTreeSet<String> = all_bitstrings(dims).into_iter().collect();
    let balanced = 2 * members.len() == everything.len();
    let mut orbit = BTreeSet::new();
    for perm in permutations(dims) {
        for flips in 0..1usize << dims {
            let image: BTreeSet<String> = members
                .iter()
                .map(|x| {
                    let mut out = vec!['0'; dims];
                    for (i, c) in x.chars().enumerate() {
                        let flip = flips >> i & 1 == 1;
                        out[perm[i]] = if (c == '1') != flip { '1' } else { '0' };
                    }
                    out.into_iter().collect()
                })
                .collect();
            if balanced {
                orbit.insert(everything.difference(&image).cloned().collect());
            }
            orbit.insert(image);
        }
    }
    orbit
}

pub fn orbit_oracle_structures(s: &CategoryStructure) -> BTreeSet<CategoryStructure> {
    orbit_oracle(s)
        .iter()
        .map(|set| from_strings(s.dims(), set))
        .collect()
}

/// Minimum literal count over every DNF whose terms are sub-cubes of A and
/// whose union is A. Dynamic programming over subsets of A, with terms
/// drawn from all `3^dims` cubes rather than from prime implicants.
pub fn min_dnf_literals(s: &CategoryStructure) -> usize {
    let dims = s.dims();
    let members: Vec<String> = member_strings(s).into_iter().collect();
    let index: HashMap<&str, usize> = members
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_str(), i))
        .collect();
    let stimuli = all_bitstrings(dims);
    let mut terms: Vec<(u32, usize)> = Vec::new();
    for code in 0..3usize.pow(dims as u32) {
        // digit per dimension: 0, 1, or 2 = free
        let pattern: Vec<usize> = (0..dims).map(|i| code / 3usize.pow(i as u32) % 3).collect();
        let matches = |x: &String| {
            x.bytes()
                .zip(&pattern)
                .all(|(b, &p)| p == 2 || usize::from(b - b'0') == p)
        };
        let covered: Vec<&String> = stimuli.iter().filter(|x| matches(x)).collect();
        if covered.iter().all(|x| index.contains_key(x.as_str())) {
            let mask = covered.iter().fold(0u32, |m, x| m | 1 << index[x.as_str()]);
            let literals = pattern.iter().filter(|&&p| p != 2).count();
            terms.push((mask, literals));
        }
    }
    let full = (1u32 << members.len()) - 1;
    let mut best = vec![usize::MAX; full as usize + 1];
    best[0] = 0;
    for mask in 0..=full {
        if best[mask as usize] == usize::MAX {
            continue;
        }
        for &(term, literals) in &terms {
            let next = (mask | term) as usize;
            best[next] = best[next].min(best[mask as usize] + literals);
        }
    }
    best[full as usize]
}

/// Manifold by literal definition: delete digit `i` from each member and
/// count members whose shortened string occurs more than once.
pub fn manifold_oracle(s: &CategoryStructure) -> Vec<f64> {
    let members: Vec<String> = member_strings(s).into_iter().collect();
    (0..s.dims())
        .map(|i| {
            let shortened: Vec<String> = members
                .iter()
                .map(|m| {
                    let mut x = m.clone();
                    x.remove(i);
                    x
                })
                .collect();
            let invariant = shortened
                .iter()
                .filter(|x| shortened.iter().filter(|y| y == x).count() > 1)
                .count();
            invariant as f64 / members.len() as f64
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every size-`n` subset of `0..dims`, lexicographic.
pub fn subsets(dims: usize, n: usize) -> Vec<Vec<usize>> {
    (0..1usize << dims)
        .filter(|m| m.count_ones() as usize == n)
        .map(|m| (0..dims).filter(|i| m >> (dims - 1 - i) & 1 == 1).collect::<Vec<_>>())
        .rev()
        .collect()
}
