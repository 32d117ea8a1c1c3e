//! Braid words and the link data of their closures.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the Artin generators of `B_n`; letter `±k` is `σ_k^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates letters against the strand count.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraid(format!("letter {g} is not a generator of B_{strands}")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated signed generators. Without an explicit
    /// strand count the smallest braid group containing the word is used.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        let needed = letters.iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(strands.unwrap_or(needed), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    /// The inverse braid.
    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|g| -g).collect() }
    }

    /// The mirror image: every crossing changes sign.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|g| -g).collect() }
    }

    /// Concatenation `self · other`.
    pub fn compose(&self, other: &BraidWord) -> Self {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }.free_reduce()
    }

    /// Cancels adjacent `σ σ^{-1}` pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// `ends[s]` is the bottom position reached by the strand that starts at
    /// position `s` (0-based).
    pub fn strand_ends(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let k = g.unsigned_abs() as usize - 1;
            at.swap(k, k + 1);
        }
        let mut ends = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            ends[s] = pos;
        }
        ends
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "B{}[{}]", self.strands, w.join(" "))
    }
}

/// Closure data consumed by the invariant formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkData {
    /// Number of components `l`.
    pub components: usize,
    /// Component (1-based) of the strand starting at each position.
    pub strand_to_component: Vec<u16>,
    /// Symmetric linking matrix with zero diagonal, indexed from 0.
    pub lk: Vec<Vec<i64>>,
    /// Framing of each component.
    pub framings: Vec<i64>,
}

impl LinkData {
    /// Components, linking numbers and blackboard framings of the closure.
    pub fn from_braid(b: &BraidWord) -> Self {
        let mut link = closure_components(b);
        link.lk = linking_matrix(b);
        link.framings = blackboard_framings(b);
        link
    }

    /// Replaces the framings.
    pub fn with_framings(mut self, framings: Vec<i64>) -> Result<Self> {
        if framings.len() != self.components {
            return Err(Error::ColourMismatch { expected: self.components, got: framings.len() });
        }
        self.framings = framings;
        Ok(self)
    }

    /// Component of the strand starting at 0-based position `pos`.
    pub fn component_of(&self, pos: usize) -> u16 {
        self.strand_to_component[pos]
    }
}

/// Components of the closure: cycles of the strand permutation, numbered by
/// their smallest strand. Linking data and framings are left at zero.
pub fn closure_components(b: &BraidWord) -> LinkData {
    let n = b.strands();
    let ends = b.strand_ends();
    let mut comp = vec![0u16; n];
    let mut count = 0u16;
    for start in 0..n {
        if comp[start] != 0 {
            continue;
        }
        count += 1;
        let mut s = start;
        while comp[s] == 0 {
            comp[s] = count;
            s = ends[s];
        }
    }
    let l = count as usize;
    LinkData { components: l, strand_to_component: comp, lk: vec![vec![0; l]; l], framings: vec![0; l] }
}

/// Calls `f(sign, component_left, component_right)` for every crossing,
/// with components 0-based.
fn for_each_crossing(b: &BraidWord, mut f: impl FnMut(i64, usize, usize)) {
    let link = closure_components(b);
    let mut cols: Vec<usize> = link.strand_to_component.iter().map(|&c| c as usize - 1).collect();
    for &g in b.letters() {
        let k = g.unsigned_abs() as usize - 1;
        f(g.signum() as i64, cols[k], cols[k + 1]);
        cols.swap(k, k + 1);
    }
}

/// Linking numbers: half the signed count of crossings between two components.
pub fn linking_matrix(b: &BraidWord) -> Vec<Vec<i64>> {
    let l = closure_components(b).components;
    let mut lk = vec![vec![0i64; l]; l];
    for_each_crossing(b, |s, a, c| {
        if a != c {
            lk[a][c] += s;
            lk[c][a] += s;
        }
    });
    for row in &mut lk {
        for v in row.iter_mut() {
            debug_assert!(*v % 2 == 0, "inter-component crossing signs must pair up");
            *v /= 2;
        }
    }
    lk
}

/// Blackboard framing: signed count of self-crossings of each component.
pub fn blackboard_framings(b: &BraidWord) -> Vec<i64> {
    let l = closure_components(b).components;
    let mut f = vec![0i64; l];
    for_each_crossing(b, |s, a, c| {
        if a == c {
            f[a] += s;
        }
    });
    f
}

/// A braid obtained by one Markov move, with the component correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovMove {
    pub description: String,
    pub braid: BraidWord,
    /// `relabel[i-1]` is the component of the original closure matching component `i` here.
    pub relabel: Vec<u16>,
}

/// All conjugates by a single generator and both stabilizations.
pub fn markov_moves(b: &BraidWord) -> Vec<MarkovMove> {
    let n = b.strands();
    let orig = closure_components(b);
    let mut out = Vec::new();
    for k in 1..n as i32 {
        for g in [k, -k] {
            let mut letters = vec![g];
            letters.extend_from_slice(b.letters());
            letters.push(-g);
            let braid = BraidWord { strands: n, letters }.free_reduce();
            let new = closure_components(&braid);
            let mut relabel = vec![0u16; new.components];
            for p in 0..n {
                let k0 = k as usize - 1;
                let q = if p == k0 {
                    k0 + 1
                } else if p == k0 + 1 {
                    k0
                } else {
                    p
                };
                relabel[new.strand_to_component[p] as usize - 1] = orig.strand_to_component[q];
            }
            out.push(MarkovMove { description: format!("conjugate by {g}"), braid, relabel });
        }
    }
    for sign in [1, -1] {
        let mut letters = b.letters().to_vec();
        letters.push(sign * n as i32);
        let braid = BraidWord { strands: n + 1, letters };
        let relabel = (1..=orig.components as u16).collect();
        let what = if sign > 0 { "positive" } else { "negative" };
        out.push(MarkovMove { description: format!("{what} stabilization"), braid, relabel });
    }
    out
}

/// A named braid of the built-in corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub braid: BraidWord,
}

/// Built-in test corpus: unknots, Hopf links, trefoils, figure-eight, a
/// connected sum, a torus link and the Borromean rings.
pub fn corpus() -> Vec<CorpusEntry> {
    let e = |name, n, w: &[i32]| CorpusEntry { name, braid: BraidWord::new(n, w.to_vec()).unwrap() };
    vec![
        e("unknot", 1, &[]),
        e("unknot-b2", 2, &[1]),
        e("hopf", 2, &[1, 1]),
        e("hopf-negative", 2, &[-1, -1]),
        e("trefoil", 2, &[1, 1, 1]),
        e("trefoil-mirror", 2, &[-1, -1, -1]),
        e("figure-eight", 3, &[1, -2, 1, -2]),
        e("torus-link-2-4", 2, &[1, 1, 1, 1]),
        e("granny", 3, &[1, 1, 1, 2, 2, 2]),
        e("square", 3, &[1, 1, 1, -2, -2, -2]),
        e("borromean", 3, &[1, -2, 1, -2, 1, -2]),
    ]
}

/// Looks up a corpus braid by name.
pub fn corpus_braid(name: &str) -> Option<BraidWord> {
    corpus().into_iter().find(|c| c.name == name).map(|c| c.braid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, w: &[i32]) -> BraidWord {
        BraidWord::new(n, w.to_vec()).unwrap()
    }

    #[test]
    fn component_examples() {
        assert_eq!(closure_components(&bw(2, &[1, 1, 1])).components, 1);
        assert_eq!(closure_components(&bw(3, &[])).components, 3);
        assert_eq!(closure_components(&bw(2, &[1, 1])).components, 2);
        assert_eq!(closure_components(&bw(3, &[1, -2, 1, -2, 1, -2])).components, 3);
    }

    #[test]
    fn linking_and_framing_examples() {
        assert_eq!(linking_matrix(&bw(2, &[1, 1])), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(linking_matrix(&bw(2, &[-1, -1])), vec![vec![0, -1], vec![-1, 0]]);
        assert_eq!(linking_matrix(&bw(2, &[1, 1, 1])), vec![vec![0]]);
        assert_eq!(blackboard_framings(&bw(2, &[1, 1, 1])), vec![3]);
        assert_eq!(blackboard_framings(&bw(2, &[1, 1])), vec![0, 0]);
        assert_eq!(blackboard_framings(&bw(3, &[])), vec![0, 0, 0]);
    }

    #[test]
    fn writhe_splits_into_framings_and_linking() {
        for c in corpus() {
            let link = LinkData::from_braid(&c.braid);
            let mut total: i64 = link.framings.iter().sum();
            for i in 0..link.components {
                for j in i + 1..link.components {
                    total += 2 * link.lk[i][j];
                }
            }
            assert_eq!(total, c.braid.writhe(), "{}", c.name);
        }
    }

    #[test]
    fn markov_move_examples() {
        let moves = markov_moves(&bw(2, &[1]));
        assert!(moves.iter().any(|m| m.braid == bw(3, &[1, 2])));
        let conj = markov_moves(&bw(2, &[1, 1, 1]));
        assert_eq!(conj[0].braid, bw(2, &[1, 1, 1]));
        assert!(markov_moves(&bw(1, &[])).iter().any(|m| m.braid == bw(2, &[1])));
    }

    #[test]
    fn markov_moves_preserve_link_data_up_to_relabeling() {
        for c in corpus() {
            let orig = LinkData::from_braid(&c.braid);
            for mv in markov_moves(&c.braid) {
                let new = LinkData::from_braid(&mv.braid);
                assert_eq!(new.components, orig.components, "{} {}", c.name, mv.description);
                let mut seen = mv.relabel.clone();
                seen.sort();
                assert_eq!(seen, (1..=orig.components as u16).collect::<Vec<_>>());
                for i in 0..new.components {
                    for j in 0..new.components {
                        let (a, b) = (mv.relabel[i] as usize - 1, mv.relabel[j] as usize - 1);
                        assert_eq!(new.lk[i][j], orig.lk[a][b], "{} {}", c.name, mv.description);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_infers_strands() {
        assert_eq!(BraidWord::parse("1 -2 1 -2", None).unwrap(), bw(3, &[1, -2, 1, -2]));
        assert_eq!(BraidWord::parse("", Some(1)).unwrap().strands(), 1);
        assert!(BraidWord::parse("3", Some(3)).is_err());
        assert!(BraidWord::parse("1 x", None).is_err());
    }
}
