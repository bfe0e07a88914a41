//! Exhaustive bounded checks of the annular vanishing and factorization
//! statements. Every check is a dimension identity evaluated on all weights
//! up to `wmax` and all `v` up to `vmax`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use super::tube_dim;
use crate::cyclic;
use crate::error::{Error, Result};
use crate::free_product::FreeProduct;
use crate::fusion::Label;
use crate::report::{Counterexample, Tally, Verdict, BOUNDED_NOTE};
use crate::word::{Side, Word, WordFilter, WordType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    Equiv,
    UnequalLength,
    Wt1Centralizer,
    AdjW0,
    AdjCd,
    AdjCc,
    QuotientSum,
}

impl Lemma {
    pub const ALL: [Lemma; 7] =
        [Lemma::Equiv, Lemma::UnequalLength, Lemma::Wt1Centralizer, Lemma::AdjW0, Lemma::AdjCd, Lemma::AdjCc, Lemma::QuotientSum];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::Equiv => "EQUIV",
            Lemma::UnequalLength => "UNEQ_LEN",
            Lemma::Wt1Centralizer => "WT1_CENTRALIZER",
            Lemma::AdjW0 => "ADJ_W0",
            Lemma::AdjCd => "ADJ_CD",
            Lemma::AdjCc => "ADJ_CC",
            Lemma::QuotientSum => "QUOTIENT_SUM",
        }
    }

    /// Short command-line name.
    pub fn cli_name(self) -> &'static str {
        match self {
            Lemma::Equiv => "equiv",
            Lemma::UnequalLength => "uneq-len",
            Lemma::Wt1Centralizer => "wt1",
            Lemma::AdjW0 => "adj-w0",
            Lemma::AdjCd => "adj-cd",
            Lemma::AdjCc => "adj-cc",
            Lemma::QuotientSum => "quotient",
        }
    }

    fn needs_s_set(self) -> bool {
        matches!(self, Lemma::AdjW0 | Lemma::AdjCd | Lemma::AdjCc | Lemma::QuotientSum)
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.cli_name() == s || l.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown lemma `{s}`")))
    }
}

/// Runs one lemma check. Overflow in a truncated factor yields an aborted
/// partial verdict; lemmas that need the adjoint support set are refused on
/// truncated factors.
pub fn verify_lemma(fp: &FreeProduct, lemma: Lemma, wmax: usize, vmax: usize) -> Verdict {
    let start = Instant::now();
    let mut verdict = Verdict::new(lemma.id(), &fp.name(), &[("wmax", wmax), ("vmax", vmax)]);
    if lemma.needs_s_set() && fp.is_truncated() {
        verdict = verdict.refused("a truncated factor has no finite adjoint support certificate");
    } else {
        let scan = Scan::new(fp, wmax, vmax);
        let res = match lemma {
            Lemma::Equiv => scan.equiv(&mut verdict),
            Lemma::UnequalLength => scan.unequal_length(&mut verdict),
            Lemma::Wt1Centralizer => scan.wt1(&mut verdict),
            Lemma::AdjW0 => scan.adj_w0(&mut verdict),
            Lemma::AdjCd => scan.adj_cd(&mut verdict),
            Lemma::AdjCc => scan.adj_cc(&mut verdict),
            Lemma::QuotientSum => scan.quotient(&mut verdict),
        };
        if let Err(e) = res {
            verdict = verdict.aborted(&e);
        }
        verdict.note(BOUNDED_NOTE);
    }
    verdict.elapsed = Some(start.elapsed());
    verdict
}

const WITNESS_LIMIT: usize = 12;

struct Scan<'a> {
    fp: &'a FreeProduct,
    ws: Vec<Word>,
    vs: Vec<Word>,
    wmax: usize,
    vmax: usize,
}

impl<'a> Scan<'a> {
    fn new(fp: &'a FreeProduct, wmax: usize, vmax: usize) -> Self {
        Self {
            fp,
            ws: fp.enumerate_words(wmax, WordFilter::W).collect(),
            vs: fp.enumerate_words(vmax, WordFilter::All).collect(),
            wmax,
            vmax,
        }
    }

    fn cx(&self, check: &str, v: &Word, b: &Word, c: &Word, expected: impl ToString, found: impl ToString) -> Counterexample {
        Counterexample {
            check: check.to_string(),
            v: self.fp.show(v),
            b: self.fp.show(b),
            c: self.fp.show(c),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    fn s_set(&self, side: Side) -> Result<BTreeSet<Label>> {
        self.fp.ring(side).s_set()
    }

    fn letters(&self, side: Side) -> Vec<Word> {
        self.fp.alphabet(side).iter().map(|&l| Word::letter(side, l)).collect()
    }

    fn n(&self, side: Side, a: Label, b: Label, c: Label) -> Result<u64> {
        self.fp.ring(side).n(a, b, c)
    }

    /// Support of `A_{w1,w2}` forces `w1 ~ w2`; equivalent words are joined
    /// by the dual of the rotating prefix; odd `v` vanish; for C-D type `v`
    /// the dimension is `[v w1 = w2 v]`.
    fn equiv(&self, out: &mut Verdict) -> Result<()> {
        let canon: Vec<Word> = self.ws.iter().map(|w| cyclic::class_of(w).canonical).collect();
        let pairs: Vec<(usize, usize)> =
            (0..self.ws.len()).flat_map(|i| (0..self.ws.len()).map(move |j| (i, j))).collect();
        let parts = pairs
            .par_iter()
            .map(|&(i, j)| -> Result<(Tally, Option<String>)> {
                let (w1, w2) = (&self.ws[i], &self.ws[j]);
                let mut t = Tally::default();
                let mut total = 0;
                for v in &self.vs {
                    let d = tube_dim(self.fp, v, w1, w2)?;
                    total += d;
                    if v.len() % 2 == 1 {
                        t.check(d == 0, || self.cx("odd-v-vanishes", v, w1, w2, 0, d));
                    } else if v.is_in_w() {
                        let e = u64::from(v.concat(w1) == w2.concat(v));
                        t.check(d == e, || self.cx("cd-intertwiner", v, w1, w2, e, d));
                    }
                }
                let equivalent = canon[i] == canon[j];
                t.check(total == 0 || equivalent, || self.cx("support-implies-equivalent", &Word::empty(), w1, w2, 0, total));
                let mut witness = None;
                if equivalent {
                    let k = (0..w1.len()).step_by(2).find(|&k| w1.rotate(k) == *w2).expect("equivalent words rotate");
                    let v = self.fp.word_dual(&w1.slice(0..k));
                    let d = tube_dim(self.fp, &v, w1, w2)?;
                    t.check(d >= 1, || self.cx("rotation-witness", &v, w1, w2, ">=1", d));
                    if k > 0 {
                        witness = Some(format!(
                            "{} ~ {} via v = {} (dim {d})",
                            self.fp.show(w1),
                            self.fp.show(w2),
                            self.fp.show(&v)
                        ));
                    }
                }
                Ok((t, witness))
            })
            .collect::<Result<Vec<_>>>()?;
        self.finish(out, parts);
        Ok(())
    }

    /// `tube_dim(v, b, w) = tube_dim(v, w, b) = 0` for `b` outside `W`.
    fn unequal_length(&self, out: &mut Verdict) -> Result<()> {
        let bs: Vec<Word> = self.fp.enumerate_words(1, WordFilter::All).collect();
        let pairs: Vec<(&Word, &Word)> = bs.iter().flat_map(|b| self.ws.iter().map(move |w| (b, w))).collect();
        let parts = pairs
            .par_iter()
            .map(|&(b, w)| -> Result<(Tally, Option<String>)> {
                let mut t = Tally::default();
                for v in &self.vs {
                    let d = tube_dim(self.fp, v, b, w)?;
                    t.check(d == 0, || self.cx("non-w-to-w", v, b, w, 0, d));
                    let d = tube_dim(self.fp, v, w, b)?;
                    t.check(d == 0, || self.cx("w-to-non-w", v, w, b, 0, d));
                }
                Ok((t, None))
            })
            .collect::<Result<Vec<_>>>()?;
        self.finish(out, parts);
        Ok(())
    }

    /// The centralizer of `w = p^k` is supported exactly on powers of the
    /// primitive root `p` and of its dual, each with dimension one.
    fn wt1(&self, out: &mut Verdict) -> Result<()> {
        let parts = self
            .ws
            .par_iter()
            .map(|w| -> Result<(Tally, Option<String>)> {
                let p = w.slice(0..2 * cyclic::primitive_blocks(w.letters()));
                let pd = self.fp.word_dual(&p);
                let mut powers = BTreeSet::new();
                for n in 0..=self.vmax / p.len() {
                    powers.insert(p.pow(n));
                    powers.insert(pd.pow(n));
                }
                let mut t = Tally::default();
                for v in &self.vs {
                    let d = tube_dim(self.fp, v, w, w)?;
                    let e = u64::from(powers.contains(v));
                    t.check(d == e, || self.cx("centralizer-support", v, w, w, e, d));
                }
                let witness = format!("{}: root {}, {} supporting v", self.fp.show(w), self.fp.show(&p), powers.len());
                Ok((t, Some(witness)))
            })
            .collect::<Result<Vec<_>>>()?;
        self.finish(out, parts);
        Ok(())
    }

    /// `tube_dim(v, ∅, x) = N^x_{c, dual c}` when `v` starts with a letter `c`
    /// on the side of `x`, and zero otherwise; so `(∅, x)` is supported iff
    /// `x` lies in the adjoint support set.
    fn adj_w0(&self, out: &mut Verdict) -> Result<()> {
        let empty = Word::empty();
        for side in [Side::C, Side::D] {
            let s = self.s_set(side)?;
            let ring = self.fp.ring(side);
            let xs = self.letters(side);
            let parts = xs
                .par_iter()
                .map(|x| -> Result<(Tally, Option<String>)> {
                    let xl = x.letters()[0].label;
                    let mut t = Tally::default();
                    let mut first = None;
                    for v in &self.vs {
                        let d = tube_dim(self.fp, v, &empty, x)?;
                        let e = match v.first() {
                            Some(c) if c.side == side => self.n(side, c.label, ring.dual_of(c.label), xl)?,
                            _ => 0,
                        };
                        t.check(d == e, || self.cx("unit-weight-factorization", v, &empty, x, e, d));
                        if d > 0 && first.is_none() {
                            first = Some(v.clone());
                        }
                    }
                    if self.vmax >= 1 {
                        let expect = s.contains(&xl);
                        t.check(first.is_some() == expect, || self.cx("support-iff-in-S", &Word::empty(), &empty, x, expect, first.is_some()));
                    }
                    let witness = first.map(|v| format!("(∅, {}) supported by v = {}", self.fp.show(x), self.fp.show(&v)));
                    Ok((t, witness))
                })
                .collect::<Result<Vec<_>>>()?;
            self.finish(out, parts);
        }
        Ok(())
    }

    /// Mixed-side letter weights: `tube_dim(v, c, d) = N^{d'}_{d d'} N^{c'}_{c' c}`
    /// for `v = d' .. c'` of D-C type and zero for every other `v`; mirrored for
    /// `(d, c)`. Support is nonempty iff both letters lie in the adjoint sets.
    fn adj_cd(&self, out: &mut Verdict) -> Result<()> {
        let (s_c, s_d) = (self.s_set(Side::C)?, self.s_set(Side::D)?);
        let pairs: Vec<(Word, Word)> = self
            .letters(Side::C)
            .into_iter()
            .flat_map(|c| self.letters(Side::D).into_iter().map(move |d| (c.clone(), d)))
            .collect();
        let parts = pairs
            .par_iter()
            .map(|(cw, dw)| -> Result<(Tally, Option<String>)> {
                let (c, d) = (cw.letters()[0].label, dw.letters()[0].label);
                let mut t = Tally::default();
                let mut first = None;
                for v in &self.vs {
                    let got = tube_dim(self.fp, v, cw, dw)?;
                    let e = match v.word_type() {
                        WordType::DC => {
                            let (d1, c1) = (v.first().unwrap().label, v.last().unwrap().label);
                            self.n(Side::D, d, d1, d1)? * self.n(Side::C, c1, c, c1)?
                        }
                        _ => 0,
                    };
                    t.check(got == e, || self.cx("cd-factorization", v, cw, dw, e, got));
                    if got > 0 && first.is_none() {
                        first = Some(v.clone());
                    }
                    let got = tube_dim(self.fp, v, dw, cw)?;
                    let e = match v.word_type() {
                        WordType::CD => {
                            let (c1, d1) = (v.first().unwrap().label, v.last().unwrap().label);
                            self.n(Side::C, c, c1, c1)? * self.n(Side::D, d1, d, d1)?
                        }
                        _ => 0,
                    };
                    t.check(got == e, || self.cx("dc-factorization", v, dw, cw, e, got));
                }
                if self.vmax >= 2 {
                    let expect = s_c.contains(&c) && s_d.contains(&d);
                    t.check(first.is_some() == expect, || self.cx("support-iff-in-S", &Word::empty(), cw, dw, expect, first.is_some()));
                }
                let witness = first.map(|v| format!("({}, {}) supported by D-C type v = {}", self.fp.show(cw), self.fp.show(dw), self.fp.show(&v)));
                Ok((t, witness))
            })
            .collect::<Result<Vec<_>>>()?;
        self.finish(out, parts);
        Ok(())
    }

    /// Same-side letter weights: only same-side-type `v` contribute; a single
    /// letter gives the tube dimension inside that factor, and
    /// `v = c1' .. c2'` gives `N^{c1'}_{x2 c1'} N^{c2'}_{c2' x1}`, which forces
    /// both weights into the adjoint set.
    fn adj_cc(&self, out: &mut Verdict) -> Result<()> {
        for side in [Side::C, Side::D] {
            let s = self.s_set(side)?;
            let ring = self.fp.ring(side);
            let same_type = if side == Side::C { WordType::CC } else { WordType::DD };
            let xs = self.letters(side);
            let pairs: Vec<(&Word, &Word)> = xs.iter().flat_map(|a| xs.iter().map(move |b| (a, b))).collect();
            let parts = pairs
                .par_iter()
                .map(|&(w1, w2)| -> Result<(Tally, Option<String>)> {
                    let (x1, x2) = (w1.letters()[0].label, w2.letters()[0].label);
                    let mut t = Tally::default();
                    let mut long_support = None;
                    for v in &self.vs {
                        let got = tube_dim(self.fp, v, w1, w2)?;
                        let e = if v.is_empty() {
                            u64::from(x1 == x2)
                        } else if v.word_type() != same_type {
                            0
                        } else if v.len() == 1 {
                            let y = v.letters()[0].label;
                            ring.fuse(y, x1)?.hom_dim(ring.fuse(x2, y)?)
                        } else {
                            let (a, b) = (v.first().unwrap().label, v.last().unwrap().label);
                            self.n(side, x2, a, a)? * self.n(side, b, x1, b)?
                        };
                        t.check(got == e, || self.cx("same-side-factorization", v, w1, w2, e, got));
                        if got > 0 && v.len() >= 2 {
                            let ok = s.contains(&x1) && s.contains(&x2);
                            t.check(ok, || self.cx("long-support-in-S", v, w1, w2, "both weights in S", got));
                            long_support.get_or_insert_with(|| v.clone());
                        }
                    }
                    let witness = long_support.map(|v| format!("({}, {}) supported by v = {}", self.fp.show(w1), self.fp.show(w2), self.fp.show(&v)));
                    Ok((t, witness))
                })
                .collect::<Result<Vec<_>>>()?;
            self.finish(out, parts);
        }
        Ok(())
    }

    /// Splits the support table over weight pairs into the pieces that survive
    /// the quotient by the ideal through the empty weight (one-sided C and D
    /// blocks with `|v| <= 1`, and the `W` diagonal by cyclic class) and checks
    /// that everything else either vanishes or factors through the empty weight.
    fn quotient(&self, out: &mut Verdict) -> Result<()> {
        let s = [self.s_set(Side::C)?, self.s_set(Side::D)?];
        let bs: Vec<Word> = self.fp.enumerate_words(self.wmax.max(1), WordFilter::Lambda).collect();
        let canon: Vec<Option<Word>> = bs.iter().map(|b| b.is_in_w().then(|| cyclic::class_of(b).canonical)).collect();
        let in_s = |w: &Word| {
            let l = w.letters()[0];
            s[l.side.index()].contains(&l.label)
        };
        let pairs: Vec<(usize, usize)> = (0..bs.len()).flat_map(|i| (0..bs.len()).map(move |j| (i, j))).collect();
        let parts = pairs
            .par_iter()
            .map(|&(i, j)| -> Result<(Tally, [u64; 3])> {
                let (b, c) = (&bs[i], &bs[j]);
                let mut t = Tally::default();
                let mut survivors = [0u64; 3];
                let mut total = 0;
                for v in &self.vs {
                    let d = tube_dim(self.fp, v, b, c)?;
                    total += d;
                    match (b.len(), c.len()) {
                        (0, 0) => t.check(d == 1, || self.cx("unit-weight-fusion-algebra", v, b, c, 1, d)),
                        (0, 1) | (1, 0) => {
                            let x = if b.is_empty() { c } else { b };
                            t.check(d == 0 || (in_s(x) && !v.is_empty()), || self.cx("unit-weight-through-S", v, b, c, 0, d));
                        }
                        (lb, lc) if (lb >= 2) != (lc >= 2) || lb == 0 || lc == 0 => {
                            t.check(d == 0, || self.cx("no-cross-terms", v, b, c, 0, d));
                        }
                        (1, 1) => {
                            let (x, y) = (b.letters()[0], c.letters()[0]);
                            if x.side == y.side && v.len() <= 1 {
                                let ring = self.fp.ring(x.side);
                                let e = match v.first() {
                                    None => u64::from(x == y),
                                    Some(z) if z.side == x.side => ring.fuse(z.label, x.label)?.hom_dim(ring.fuse(y.label, z.label)?),
                                    Some(_) => 0,
                                };
                                t.check(d == e, || self.cx("one-sided-block", v, b, c, e, d));
                                if d > 0 {
                                    survivors[x.side.index()] += 1;
                                }
                            } else if d > 0 {
                                let ok = v.len() >= 2 && in_s(b) && in_s(c);
                                t.check(ok, || self.cx("through-unit-in-S", v, b, c, "|v|>=2 and weights in S", d));
                            }
                        }
                        _ => {
                            if d > 0 {
                                survivors[2] += 1;
                            }
                        }
                    }
                }
                if let (Some(x), Some(y)) = (&canon[i], &canon[j]) {
                    t.check(total == 0 || x == y, || self.cx("w-part-diagonal", &Word::empty(), b, c, 0, total));
                }
                Ok((t, survivors))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut counts = [0u64; 3];
        for (t, c) in parts {
            out.absorb(t);
            for k in 0..3 {
                counts[k] += c[k];
            }
        }
        out.note(format!(
            "quotient support entries: C-part {}, D-part {}, W-part {}, cross terms 0",
            counts[0], counts[1], counts[2]
        ));
        Ok(())
    }

    fn finish(&self, out: &mut Verdict, parts: Vec<(Tally, Option<String>)>) {
        for (t, w) in parts {
            out.absorb(t);
            if let Some(w) = w {
                if out.witnesses.len() < WITNESS_LIMIT {
                    out.witnesses.push(w);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::report::Status;

    fn fp(c: crate::FusionRing, d: crate::FusionRing) -> FreeProduct {
        FreeProduct::new(c, d).unwrap()
    }

    #[test]
    fn small_bounds_pass_everywhere() {
        let pairs = [
            fp(gallery::fib_ring(), gallery::fib_ring()),
            fp(gallery::z2_ring(), gallery::z3_ring()),
            fp(gallery::rep_s3_ring(), gallery::fib_ring()),
            fp(gallery::tlj_ring(5).unwrap(), gallery::tlj_ring(4).unwrap()),
            fp(gallery::trivial_ring(), gallery::z2_ring()),
        ];
        for f in &pairs {
            for lemma in Lemma::ALL {
                let v = verify_lemma(f, lemma, 4, 4);
                assert_eq!(v.status, Status::Pass, "{}", v.to_text(false));
                assert!(v.notes.iter().any(|n| n == BOUNDED_NOTE));
            }
        }
    }

    #[test]
    fn adj_cd_witnesses_are_dc_type() {
        let f = fp(gallery::rep_s3_ring(), gallery::fib_ring());
        let v = verify_lemma(&f, Lemma::AdjCd, 1, 4);
        assert!(v.passed());
        assert_eq!(v.witnesses.len(), 2);
        assert!(v.witnesses.iter().all(|w| w.contains("v = D:")));
    }

    #[test]
    fn truncated_factors_abort_or_refuse() {
        let f = fp(gallery::tlj_generic(2).unwrap(), gallery::tlj_generic(2).unwrap());
        assert_eq!(verify_lemma(&f, Lemma::Equiv, 6, 8).status, Status::Aborted);
        assert_eq!(verify_lemma(&f, Lemma::AdjCd, 2, 2).status, Status::Refused);
    }

    #[test]
    fn names_round_trip() {
        for l in Lemma::ALL {
            assert_eq!(l.cli_name().parse::<Lemma>().unwrap(), l);
            assert_eq!(l.id().parse::<Lemma>().unwrap(), l);
        }
        assert!("nope".parse::<Lemma>().is_err());
    }
}
