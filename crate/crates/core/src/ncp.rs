//! Single-colored non-crossing partitions of a `(σ, τ)` rectangle: the
//! spanning set for morphisms in the free product.
//!
//! Positions are walked around the rectangle boundary: bottom letters left to
//! right, then top letters right to left.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::free_product::FreeProduct;
use crate::word::{Letter, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pos {
    /// Zero-based index into the bottom word.
    B(usize),
    /// Zero-based index into the top word.
    T(usize),
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pos::B(i) => write!(f, "B{}", i + 1),
            Pos::T(i) => write!(f, "T{}", i + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcpBlock {
    pub side: Side,
    /// Bottom positions first, each part in increasing index order.
    pub positions: Vec<Pos>,
}

impl NcpBlock {
    pub fn new(side: Side, mut positions: Vec<Pos>) -> Self {
        positions.sort();
        Self { side, positions }
    }

    fn bottom(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.iter().filter_map(|p| if let Pos::B(i) = p { Some(*i) } else { None })
    }

    fn top(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.iter().filter_map(|p| if let Pos::T(i) = p { Some(*i) } else { None })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredNcp {
    pub bottom: Vec<Letter>,
    pub top: Vec<Letter>,
    /// Ordered by least boundary index.
    pub blocks: Vec<NcpBlock>,
    /// Per-block hom dimension, parallel to `blocks`; empty when not computed.
    pub weights: Vec<u64>,
}

/// Closed-loop factor produced by [`compose_ncp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Exact(u64),
    /// Non-pointed loops; the closed blocks are kept for later evaluation.
    Symbolic(Vec<NcpBlock>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub ncp: ColoredNcp,
    /// Blocks that closed up entirely inside the middle word, positions given
    /// on that word as `B` indices.
    pub cancelled: Vec<NcpBlock>,
    pub scalar: Scalar,
}

impl ColoredNcp {
    /// Partition with blocks in canonical order and no weights.
    pub fn new(bottom: Vec<Letter>, top: Vec<Letter>, blocks: Vec<NcpBlock>) -> Self {
        let mut ncp = Self { bottom, top, blocks, weights: Vec::new() };
        ncp.canonicalize();
        ncp
    }

    fn boundary(&self, p: Pos) -> usize {
        match p {
            Pos::B(i) => i,
            Pos::T(j) => self.bottom.len() + self.top.len() - 1 - j,
        }
    }

    fn letter(&self, p: Pos) -> Option<&Letter> {
        match p {
            Pos::B(i) => self.bottom.get(i),
            Pos::T(j) => self.top.get(j),
        }
    }

    fn canonicalize(&mut self) {
        let mut keyed: Vec<(usize, NcpBlock, Option<u64>)> = self
            .blocks
            .drain(..)
            .enumerate()
            .map(|(k, b)| {
                let key = b.positions.iter().map(|&p| match p {
                    Pos::B(i) => i,
                    Pos::T(j) => self.bottom.len() + self.top.len() - 1 - j,
                });
                (key.min().unwrap_or(usize::MAX), b, self.weights.get(k).copied())
            })
            .collect();
        keyed.sort_by_key(|k| k.0);
        let has_weights = !self.weights.is_empty();
        self.weights = if has_weights { keyed.iter().map(|k| k.2.unwrap_or(0)).collect() } else { Vec::new() };
        self.blocks = keyed.into_iter().map(|k| k.1).collect();
    }

    /// Every position in exactly one nonempty block, blocks single-colored and
    /// matching their letters, and no two blocks crossing.
    pub fn is_valid(&self) -> bool {
        let total = self.bottom.len() + self.top.len();
        let mut owner = vec![usize::MAX; total];
        for (k, b) in self.blocks.iter().enumerate() {
            if b.positions.is_empty() {
                return false;
            }
            for &p in &b.positions {
                match self.letter(p) {
                    Some(l) if l.side == b.side => {}
                    _ => return false,
                }
                let i = self.boundary(p);
                if owner[i] != usize::MAX {
                    return false;
                }
                owner[i] = k;
            }
        }
        if owner.contains(&usize::MAX) {
            return false;
        }
        // Crossing: a < b < c < d with a, c in one block and b, d in another.
        // Equivalent to the boundary sequence of owners not being nested.
        let mut stack: Vec<usize> = Vec::new();
        let mut remaining: BTreeMap<usize, usize> = BTreeMap::new();
        for &o in &owner {
            *remaining.entry(o).or_default() += 1;
        }
        let mut opened = vec![false; self.blocks.len()];
        for &o in &owner {
            if opened[o] {
                if stack.last() != Some(&o) {
                    return false;
                }
            } else {
                opened[o] = true;
                stack.push(o);
            }
            let r = remaining.get_mut(&o).unwrap();
            *r -= 1;
            if *r == 0 {
                stack.pop();
            }
        }
        true
    }

    /// Hom dimension of one block: from the product of its bottom letters to
    /// the product of its top letters, both left to right.
    pub fn block_weight(&self, fp: &FreeProduct, block: &NcpBlock) -> Result<u64> {
        let ring = fp.ring(block.side);
        let bottom: Vec<_> = block.bottom().map(|i| self.bottom[i].label).collect();
        let top: Vec<_> = block.top().map(|j| self.top[j].label).collect();
        Ok(ring.fuse_seq(&bottom)?.hom_dim(&ring.fuse_seq(&top)?))
    }

    pub fn with_weights(mut self, fp: &FreeProduct) -> Result<Self> {
        self.weights = self.blocks.iter().map(|b| self.block_weight(fp, b)).collect::<Result<_>>()?;
        Ok(self)
    }

    /// Product of block weights.
    pub fn weight(&self) -> u64 {
        self.weights.iter().product()
    }

    /// Mirror image: bottom and top exchanged.
    pub fn reflect(&self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                NcpBlock::new(
                    b.side,
                    b.positions.iter().map(|p| match *p {
                        Pos::B(i) => Pos::T(i),
                        Pos::T(j) => Pos::B(j),
                    })
                    .collect(),
                )
            })
            .collect();
        let mut out = Self { bottom: self.top.clone(), top: self.bottom.clone(), blocks, weights: self.weights.clone() };
        out.canonicalize();
        out
    }

    /// Text form such as `C{B1,B2,T1} D{T2,T3}`.
    pub fn serialize(&self) -> String {
        self.blocks
            .iter()
            .map(|b| format!("{}{{{}}}", b.side.tag(), b.positions.iter().map(Pos::to_string).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the text form against given boundary words.
    pub fn parse(bottom: Vec<Letter>, top: Vec<Letter>, text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for tok in text.split_whitespace() {
            let bad = || Error::Parse(format!("bad block `{tok}`"));
            let side = match tok.chars().next() {
                Some('C') => Side::C,
                Some('D') => Side::D,
                _ => return Err(bad()),
            };
            let inner = tok[1..].strip_prefix('{').and_then(|s| s.strip_suffix('}')).ok_or_else(bad)?;
            let mut positions = Vec::new();
            for p in inner.split(',') {
                let (kind, num) = p.split_at(1);
                let i: usize = num.parse().map_err(|_| bad())?;
                if i == 0 {
                    return Err(bad());
                }
                positions.push(match kind {
                    "B" => Pos::B(i - 1),
                    "T" => Pos::T(i - 1),
                    _ => return Err(bad()),
                });
            }
            blocks.push(NcpBlock::new(side, positions));
        }
        Ok(Self::new(bottom, top, blocks))
    }
}

impl fmt::Display for ColoredNcp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Non-crossing set partitions of `points` (in boundary order) into blocks
/// whose members share a color.
fn nc_partitions(points: &[usize], color: &dyn Fn(usize) -> Side) -> Vec<Vec<Vec<usize>>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    extend_block(vec![points[0]], &points[1..], Vec::new(), color, &mut out);
    out
}

/// Grows the block holding the first point. Points skipped between two
/// members of the block must be partitioned among themselves.
fn extend_block(
    block: Vec<usize>,
    tail: &[usize],
    inner: Vec<Vec<usize>>,
    color: &dyn Fn(usize) -> Side,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    for rest in nc_partitions(tail, color) {
        let mut p = inner.clone();
        p.push(block.clone());
        p.extend(rest);
        out.push(p);
    }
    let side = color(block[0]);
    for j in 0..tail.len() {
        if color(tail[j]) != side {
            continue;
        }
        for gap in nc_partitions(&tail[..j], color) {
            let mut b = block.clone();
            b.push(tail[j]);
            let mut inn = inner.clone();
            inn.extend(gap);
            extend_block(b, &tail[j + 1..], inn, color, out);
        }
    }
}

/// All single-colored non-crossing partitions of the `(σ, τ)` rectangle with
/// their block weights, in a deterministic order.
pub fn enumerate_ncps(fp: &FreeProduct, sigma: &[Letter], tau: &[Letter]) -> Result<Vec<ColoredNcp>> {
    let shell = ColoredNcp::new(sigma.to_vec(), tau.to_vec(), Vec::new());
    let total = sigma.len() + tau.len();
    let pos_of = |i: usize| if i < sigma.len() { Pos::B(i) } else { Pos::T(total - 1 - i) };
    let color = |i: usize| shell.letter(pos_of(i)).expect("in range").side;
    let points: Vec<usize> = (0..total).collect();
    nc_partitions(&points, &color)
        .into_iter()
        .map(|p| {
            let blocks = p.into_iter().map(|b| NcpBlock::new(color(b[0]), b.into_iter().map(pos_of).collect())).collect();
            ColoredNcp::new(sigma.to_vec(), tau.to_vec(), blocks).with_weights(fp)
        })
        .collect()
}

/// Number of uncolored non-crossing partitions of `n` points.
pub fn count_single_side(n: usize) -> usize {
    let points: Vec<usize> = (0..n).collect();
    nc_partitions(&points, &|_| Side::C).len()
}

/// Glues `s` over `(σ, τ)` under `t` over `(τ, κ)`. Blocks meeting along τ
/// merge; blocks that never reach σ or κ close up and are returned as
/// cancelled. The loop scalar is exact in the pointed case or when some glued
/// block has zero weight, and symbolic otherwise.
pub fn compose_ncp(fp: &FreeProduct, t: &ColoredNcp, s: &ColoredNcp) -> Result<Composition> {
    if t.bottom != s.top {
        return Err(Error::BoundaryMismatch(format!(
            "upper partition starts on {} letters, lower ends on {}",
            t.bottom.len(),
            s.top.len()
        )));
    }
    let (m, k, n) = (s.bottom.len(), s.top.len(), t.top.len());
    // Nodes: σ 0..m, τ m..m+k, κ m+k..m+k+n.
    let mut parent: Vec<usize> = (0..m + k + n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    let mut side_of = vec![Side::C; m + k + n];
    let mut union = |nodes: Vec<usize>, side: Side, parent: &mut Vec<usize>| {
        for &x in &nodes {
            side_of[x] = side;
        }
        for w in nodes.windows(2) {
            let (a, b) = (find(parent, w[0]), find(parent, w[1]));
            parent[a] = b;
        }
    };
    for b in &s.blocks {
        let nodes = b.positions.iter().map(|p| match *p {
            Pos::B(i) => i,
            Pos::T(j) => m + j,
        });
        union(nodes.collect(), b.side, &mut parent);
    }
    for b in &t.blocks {
        let nodes = b.positions.iter().map(|p| match *p {
            Pos::B(i) => m + i,
            Pos::T(j) => m + k + j,
        });
        union(nodes.collect(), b.side, &mut parent);
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..m + k + n {
        let r = find(&mut parent, x);
        comps.entry(r).or_default().push(x);
    }
    let mut blocks = Vec::new();
    let mut cancelled = Vec::new();
    for nodes in comps.into_values() {
        let side = side_of[nodes[0]];
        let outer: Vec<Pos> = nodes
            .iter()
            .filter_map(|&x| match x {
                x if x < m => Some(Pos::B(x)),
                x if x >= m + k => Some(Pos::T(x - m - k)),
                _ => None,
            })
            .collect();
        if outer.is_empty() {
            cancelled.push(NcpBlock::new(side, nodes.iter().map(|&x| Pos::B(x - m)).collect()));
        } else {
            blocks.push(NcpBlock::new(side, outer));
        }
    }
    let ncp = ColoredNcp::new(s.bottom.clone(), t.top.clone(), blocks).with_weights(fp)?;
    let input_weights = |x: &ColoredNcp| -> Result<Vec<u64>> {
        if x.weights.len() == x.blocks.len() {
            Ok(x.weights.clone())
        } else {
            x.blocks.iter().map(|b| x.block_weight(fp, b)).collect()
        }
    };
    let zero = input_weights(s)?.contains(&0) || input_weights(t)?.contains(&0);
    let pointed = fp.c().is_pointed() && fp.d().is_pointed();
    let scalar = if zero {
        Scalar::Exact(0)
    } else if cancelled.is_empty() || pointed {
        Scalar::Exact(1)
    } else {
        Scalar::Symbolic(cancelled.clone())
    };
    Ok(Composition { ncp, cancelled, scalar })
}

/// Sum over all colored non-crossing partitions of the product of block
/// weights: an upper bound for the hom dimension between the two words.
pub fn spanning_bound(fp: &FreeProduct, sigma: &[Letter], tau: &[Letter]) -> Result<u64> {
    Ok(enumerate_ncps(fp, sigma, tau)?.iter().map(ColoredNcp::weight).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::word::{Word, WordFilter};

    fn fib() -> FreeProduct {
        FreeProduct::new(gallery::fib_ring(), gallery::fib_ring()).unwrap()
    }

    fn letters(fp: &FreeProduct, s: &str) -> Vec<Letter> {
        fp.parse_letters(s).unwrap()
    }

    #[test]
    fn single_letter_identity() {
        let f = fib();
        let c = letters(&f, "C:tau");
        let all = enumerate_ncps(&f, &c, &c).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all.iter().filter(|x| x.weight() > 0).count(), 1);
        let vertical = all.iter().find(|x| x.weight() > 0).unwrap();
        assert_eq!(vertical.serialize(), "C{B1,T1}");
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(count_single_side(n), c);
        }
    }

    fn five_block_example(f: &FreeProduct) -> ColoredNcp {
        let sigma = letters(f, "C:tau C:tau C:tau D:tau C:tau C:tau D:tau C:tau");
        let tau = letters(f, "C:tau D:tau D:tau C:tau C:tau");
        ColoredNcp::parse(sigma, tau, "C{B1,B2,T1,T4} D{T2,T3} C{B3,B8,T5} D{B4,B7} C{B5,B6}").unwrap()
    }

    #[test]
    fn five_block_example_is_enumerated() {
        let f = fib();
        let ex = five_block_example(&f);
        assert!(ex.is_valid());
        let all = enumerate_ncps(&f, &ex.bottom, &ex.top).unwrap();
        assert!(all.iter().any(|x| x.blocks == ex.blocks));
    }

    #[test]
    fn validity_examples() {
        let f = fib();
        let cd = letters(&f, "C:tau D:tau");
        let id = ColoredNcp::parse(cd.clone(), cd.clone(), "C{B1,T1} D{B2,T2}").unwrap();
        assert!(id.is_valid());
        let cdcd = letters(&f, "C:tau D:tau C:tau D:tau");
        let crossing = ColoredNcp::parse(cdcd.clone(), vec![], "C{B1,B3} D{B2,B4}").unwrap();
        assert!(!crossing.is_valid());
        let mixed = ColoredNcp::parse(cd.clone(), vec![], "C{B1,B2}").unwrap();
        assert!(!mixed.is_valid());
        let missing = ColoredNcp::parse(cd.clone(), cd, "C{B1,T1}").unwrap();
        assert!(!missing.is_valid());
    }

    #[test]
    fn compose_identity() {
        let f = fib();
        let cd = letters(&f, "C:tau D:tau");
        let id = ColoredNcp::parse(cd.clone(), cd.clone(), "C{B1,T1} D{B2,T2}").unwrap().with_weights(&f).unwrap();
        let out = compose_ncp(&f, &id, &id).unwrap();
        assert_eq!(out.ncp, id);
        assert!(out.cancelled.is_empty());
        assert_eq!(out.scalar, Scalar::Exact(1));
    }

    #[test]
    fn cap_over_cup_in_z2() {
        let f = FreeProduct::new(gallery::z2_ring(), gallery::z2_ring()).unwrap();
        let gg = letters(&f, "C:g C:g");
        let cup = ColoredNcp::parse(vec![], gg.clone(), "C{T1,T2}").unwrap();
        let cap = ColoredNcp::parse(gg, vec![], "C{B1,B2}").unwrap();
        let out = compose_ncp(&f, &cap, &cup).unwrap();
        assert!(out.ncp.blocks.is_empty());
        assert_eq!(out.cancelled.len(), 1);
        assert_eq!(out.scalar, Scalar::Exact(1));
    }

    #[test]
    fn reflection_of_five_block_example_composed_with_it() {
        let f = fib();
        let ex = five_block_example(&f).with_weights(&f).unwrap();
        let out = compose_ncp(&f, &ex.reflect(), &ex).unwrap();
        assert!(out.ncp.is_valid());
        assert_eq!(out.ncp.serialize(), "C{B1,B2,T1,T2} C{B3,B8,T3,T8} D{B4,B7} C{B5,B6} D{T4,T7} C{T5,T6}");
        assert_eq!(out.cancelled, vec![NcpBlock::new(Side::D, vec![Pos::B(1), Pos::B(2)])]);
        assert!(matches!(out.scalar, Scalar::Symbolic(_)));
        let bad = compose_ncp(&f, &ex, &ex);
        assert!(matches!(bad, Err(Error::BoundaryMismatch(_))));
    }

    #[test]
    fn spanning_bounds() {
        let f = fib();
        let cd = letters(&f, "C:tau D:tau");
        assert_eq!(spanning_bound(&f, &cd, &cd).unwrap(), 1);
        assert_eq!(spanning_bound(&f, &cd, &letters(&f, "C:tau D:tau C:tau D:tau")).unwrap(), 0);
        assert_eq!(spanning_bound(&f, &letters(&f, "C:tau C:tau"), &[]).unwrap(), 1);
    }

    #[test]
    fn reflection_preserves_counts() {
        let f = FreeProduct::new(gallery::rep_s3_ring(), gallery::fib_ring()).unwrap();
        let words: Vec<Word> = f.enumerate_words(3, WordFilter::All).collect();
        for a in &words {
            for b in &words {
                let x = enumerate_ncps(&f, a.letters(), b.letters()).unwrap();
                let y = enumerate_ncps(&f, b.letters(), a.letters()).unwrap();
                assert_eq!(x.len(), y.len());
                assert!(x.iter().all(ColoredNcp::is_valid));
                let bound: u64 = x.iter().map(ColoredNcp::weight).sum();
                let hom = f.fuse_letters(a.letters()).unwrap().hom_dim(&f.fuse_letters(b.letters()).unwrap());
                assert!(bound >= hom);
            }
        }
    }
}
