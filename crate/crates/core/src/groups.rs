//! The five groups of order 8, built from their presentations.
//!
//! Elements are normal-form words `a^i b^j c^k`. Multiplication concatenates
//! two normal forms and rewrites the result with rules read off the defining
//! relations until no rule applies. The resulting table is checked
//! exhaustively (Latin square, identity, inverses, all 512 associativity
//! triples, defining relations) by [`GroupTable::check`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    D4,
    Q8,
    Z8,
    Z4xZ2,
    Z2xZ2xZ2,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown group {0:?}; expected one of d4, q8, z8, z4xz2, z2xz2xz2")]
pub struct UnknownGroup(pub String);

impl GroupId {
    pub const ALL: [GroupId; 5] = [GroupId::D4, GroupId::Q8, GroupId::Z8, GroupId::Z4xZ2, GroupId::Z2xZ2xZ2];

    pub fn is_abelian(self) -> bool {
        !matches!(self, GroupId::D4 | GroupId::Q8)
    }

    /// Number of irreducible representations (and of conjugacy classes).
    pub fn irrep_count(self) -> usize {
        if self.is_abelian() {
            8
        } else {
            5
        }
    }

    /// Irrep degrees in table order.
    pub fn degrees(self) -> &'static [usize] {
        if self.is_abelian() {
            &[1; 8]
        } else {
            &[1, 1, 1, 1, 2]
        }
    }

    pub fn generator_count(self) -> usize {
        self.exponent_bounds().len()
    }

    /// Exponent ranges of the normal form `a^i b^j c^k`.
    pub fn exponent_bounds(self) -> &'static [u8] {
        match self {
            GroupId::D4 | GroupId::Q8 | GroupId::Z4xZ2 => &[4, 2],
            GroupId::Z8 => &[8],
            GroupId::Z2xZ2xZ2 => &[2, 2, 2],
        }
    }

    /// Defining relations as pairs of words over generator letters 0, 1, 2
    /// (for a, b, c). Each pair `(lhs, rhs)` reads `lhs = rhs`.
    pub fn relations(self) -> Vec<(Vec<u8>, Vec<u8>)> {
        let w = |s: &str| s.bytes().map(|b| b - b'a').collect::<Vec<u8>>();
        let pairs: &[(&str, &str)] = match self {
            GroupId::D4 => &[("aaaa", ""), ("bb", ""), ("ba", "aaab")],
            GroupId::Q8 => &[("aaaa", ""), ("bb", "aa"), ("ba", "aaab")],
            GroupId::Z8 => &[("aaaaaaaa", "")],
            GroupId::Z4xZ2 => &[("aaaa", ""), ("bb", ""), ("ba", "ab")],
            GroupId::Z2xZ2xZ2 => &[("aa", ""), ("bb", ""), ("cc", ""), ("ba", "ab"), ("ca", "ac"), ("cb", "bc")],
        };
        pairs.iter().map(|(l, r)| (w(l), w(r))).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupId::D4 => "D4",
            GroupId::Q8 => "Q8",
            GroupId::Z8 => "Z8",
            GroupId::Z4xZ2 => "Z4xZ2",
            GroupId::Z2xZ2xZ2 => "Z2xZ2xZ2",
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupId {
    type Err = UnknownGroup;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.trim().to_ascii_lowercase().chars().filter(|c| !matches!(c, ' ' | '_')).collect();
        match t.as_str() {
            "d4" => Ok(GroupId::D4),
            "q8" => Ok(GroupId::Q8),
            "z8" => Ok(GroupId::Z8),
            "z4xz2" => Ok(GroupId::Z4xZ2),
            "z2xz2xz2" => Ok(GroupId::Z2xZ2xZ2),
            _ => Err(UnknownGroup(s.to_string())),
        }
    }
}

/// Word rewriting with the relations oriented left to right.
fn rewrite(rules: &[(Vec<u8>, Vec<u8>)], mut word: Vec<u8>) -> Vec<u8> {
    'outer: loop {
        for (lhs, rhs) in rules {
            if let Some(pos) = word.windows(lhs.len()).position(|w| w == lhs.as_slice()) {
                word.splice(pos..pos + lhs.len(), rhs.iter().copied());
                continue 'outer;
            }
        }
        return word;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub id: GroupId,
    /// Normal-form exponent vectors in lexicographic order.
    pub elements: Vec<Vec<u8>>,
    /// `mult[x][y]` is the index of `x·y`.
    pub mult: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    /// Indices of a, b, c (as many as the presentation has).
    pub generators: Vec<usize>,
    pub identity: usize,
}

impl GroupTable {
    pub fn build(id: GroupId) -> Self {
        let bounds = id.exponent_bounds();
        let mut elements = vec![vec![]];
        for &b in bounds {
            elements = elements
                .into_iter()
                .flat_map(|prefix: Vec<u8>| {
                    (0..b).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        let rules = id.relations();
        let word_of = |exps: &[u8]| -> Vec<u8> {
            exps.iter().enumerate().flat_map(|(g, &e)| std::iter::repeat_n(g as u8, e as usize)).collect()
        };
        let index_of = |word: &[u8]| -> usize {
            let mut exps = vec![0u8; bounds.len()];
            let mut last = 0;
            for &letter in word {
                assert!(letter >= last, "rewriting left a non-normal word {word:?}");
                last = letter;
                exps[letter as usize] += 1;
            }
            elements.iter().position(|e| *e == exps).unwrap_or_else(|| panic!("exponents {exps:?} out of range"))
        };
        let words: Vec<Vec<u8>> = elements.iter().map(|e| word_of(e)).collect();
        let mult: Vec<Vec<usize>> = words
            .iter()
            .map(|x| {
                words
                    .iter()
                    .map(|y| {
                        let w = rewrite(&rules, x.iter().chain(y).copied().collect());
                        index_of(&w)
                    })
                    .collect()
            })
            .collect();
        let identity = 0;
        let inv =
            (0..8).map(|x| (0..8).find(|&y| mult[x][y] == identity).expect("every element has an inverse")).collect();
        let generators = (0..bounds.len())
            .map(|g| {
                let mut e = vec![0u8; bounds.len()];
                e[g] = 1;
                elements.iter().position(|x| *x == e).unwrap()
            })
            .collect();
        GroupTable { id, elements, mult, inv, generators, identity }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x][y]
    }

    /// Normal-form word of an element as a sequence of generator positions.
    pub fn word(&self, x: usize) -> Vec<usize> {
        self.elements[x].iter().enumerate().flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize)).collect()
    }

    /// Evaluates a word over generator letters.
    pub fn eval(&self, word: &[u8]) -> usize {
        word.iter().fold(self.identity, |acc, &g| self.mul(acc, self.generators[g as usize]))
    }

    /// Finds the element with the given exponent vector.
    pub fn element(&self, exps: &[u8]) -> Option<usize> {
        self.elements.iter().position(|e| e == exps)
    }

    pub fn element_name(&self, x: usize) -> String {
        let parts: Vec<String> = self.elements[x]
            .iter()
            .zip(["a", "b", "c"])
            .filter(|(e, _)| **e > 0)
            .map(|(e, g)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 8];
        let mut classes = Vec::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order()).map(|g| self.mul(self.mul(g, x), self.inv[g])).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Exhaustive consistency check of the table; returns the violations.
    pub fn check(&self) -> Vec<String> {
        let n = self.order();
        let mut bad = Vec::new();
        if n != 8 {
            bad.push(format!("order {n} ≠ 8"));
        }
        for x in 0..n {
            let mut row: Vec<usize> = self.mult[x].clone();
            let mut col: Vec<usize> = (0..n).map(|y| self.mult[y][x]).collect();
            row.sort_unstable();
            col.sort_unstable();
            if row != (0..n).collect::<Vec<_>>() || col != (0..n).collect::<Vec<_>>() {
                bad.push(format!("row/column {x} is not a permutation"));
            }
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                bad.push(format!("identity law fails at {x}"));
            }
            if self.mul(x, self.inv[x]) != self.identity || self.mul(self.inv[x], x) != self.identity {
                bad.push(format!("inverse law fails at {x}"));
            }
            if self.inv[self.inv[x]] != x {
                bad.push(format!("inverse is not an involution at {x}"));
            }
            for y in 0..n {
                for z in 0..n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        bad.push(format!("associativity fails at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        for (lhs, rhs) in self.id.relations() {
            if self.eval(&lhs) != self.eval(&rhs) {
                bad.push(format!("relation {lhs:?} = {rhs:?} fails"));
            }
        }
        bad
    }
}
