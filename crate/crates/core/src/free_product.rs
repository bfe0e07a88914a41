//! The free product `C * D` at the level of fusion rings. Simple objects are
//! reduced alternating words; the basis is never materialized.

use crate::cyclic::{self, CyclicClass};
use crate::error::{Error, Result};
use crate::fusion::{FusionRing, Label};
use crate::sum::SimpleSum;
use crate::word::{Letter, Side, Word, WordFilter};

pub type WordSum = SimpleSum<Word>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeProduct {
    rings: [FusionRing; 2],
    alphabet: [Vec<Label>; 2],
}

impl FreeProduct {
    /// Both factors must satisfy every fusion-ring axiom.
    pub fn new(c: FusionRing, d: FusionRing) -> Result<Self> {
        for ring in [&c, &d] {
            let report = ring.validate();
            if !report.is_valid() {
                let v = &report.violations[0];
                return Err(Error::InvalidRing {
                    ring: ring.name().to_string(),
                    summary: format!("{} violation(s), first: {} at ({})", report.violations.len(), v.axiom, v.witness.join(", ")),
                });
            }
        }
        let alphabet = [c.non_unit_labels(), d.non_unit_labels()];
        Ok(Self { rings: [c, d], alphabet })
    }

    pub fn ring(&self, side: Side) -> &FusionRing {
        &self.rings[side.index()]
    }

    pub fn c(&self) -> &FusionRing {
        &self.rings[0]
    }

    pub fn d(&self) -> &FusionRing {
        &self.rings[1]
    }

    pub fn name(&self) -> String {
        format!("{}*{}", self.c().name(), self.d().name())
    }

    /// Non-unit simples of one factor: the letters `I_C` or `I_D`.
    pub fn alphabet(&self, side: Side) -> &[Label] {
        &self.alphabet[side.index()]
    }

    pub fn is_truncated(&self) -> bool {
        self.rings.iter().any(FusionRing::is_truncated)
    }

    pub fn letter(&self, side: Side, name: &str) -> Result<Letter> {
        Ok(Letter::new(side, self.ring(side).label(name)?))
    }

    /// Checks that `w` is alternating, reduced, and uses known labels.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for l in w.letters() {
            let ring = self.ring(l.side);
            if !ring.contains(l.label) {
                return Err(Error::InvalidWord(format!("label #{} is not in {}", l.label.0, ring.name())));
            }
            if l.label == ring.unit() {
                return Err(Error::InvalidWord(format!("{} contains the unit letter", self.show(w))));
            }
        }
        if !w.is_alternating() {
            return Err(Error::InvalidWord(format!("{} is not alternating", self.show(w))));
        }
        Ok(())
    }

    /// Parses space-separated letters. A token is `C:label`, `D:label`, or a
    /// bare label; a bare label found in both rings takes the side opposite to
    /// the previous letter (C if it comes first). `∅` or an empty string is
    /// the empty sequence. Unit letters and repeated sides are allowed here.
    pub fn parse_letters(&self, text: &str) -> Result<Vec<Letter>> {
        let mut out: Vec<Letter> = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "∅" {
                continue;
            }
            let letter = match tok.split_once(':') {
                Some(("C", name)) => self.letter(Side::C, name)?,
                Some(("D", name)) => self.letter(Side::D, name)?,
                _ => {
                    let in_c = self.c().label(tok).ok();
                    let in_d = self.d().label(tok).ok();
                    match (in_c, in_d) {
                        (Some(l), None) => Letter::new(Side::C, l),
                        (None, Some(l)) => Letter::new(Side::D, l),
                        (Some(lc), Some(ld)) => match out.last() {
                            Some(prev) if prev.side == Side::C => Letter::new(Side::D, ld),
                            _ => Letter::new(Side::C, lc),
                        },
                        (None, None) => return Err(Error::UnknownLabel(tok.to_string())),
                    }
                }
            };
            out.push(letter);
        }
        Ok(out)
    }

    /// Parses a reduced alternating word.
    pub fn word(&self, text: &str) -> Result<Word> {
        let w = Word::from_letters(self.parse_letters(text)?);
        self.check_word(&w)?;
        Ok(w)
    }

    pub fn show(&self, w: &Word) -> String {
        if w.is_empty() {
            return "∅".to_string();
        }
        w.letters()
            .iter()
            .map(|l| format!("{}:{}", l.side.tag(), self.ring(l.side).name_of(l.label)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn show_sum(&self, s: &WordSum) -> String {
        let parts: Vec<String> = s.iter().map(|(w, m)| format!("{}:{}", self.show(w), m)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Fusion of two reduced words.
    ///
    /// Where the words meet on opposite sides the product is the concatenation.
    /// Where they meet on the same side with boundary letters `x`, `y`, each
    /// non-unit channel `c` of `x ⊗ y` gives `prefix c suffix` with multiplicity
    /// `N^c_{xy}`, and the unit channel continues with the shortened words.
    pub fn fuse_words(&self, w1: &Word, w2: &Word) -> Result<WordSum> {
        self.check_word(w1)?;
        self.check_word(w2)?;
        self.fuse_checked(w1.letters(), w2.letters())
    }

    fn fuse_checked(&self, a: &[Letter], b: &[Letter]) -> Result<WordSum> {
        let mut out = WordSum::zero();
        let (mut i, mut j) = (a.len(), 0usize);
        let mut mult = 1u64;
        loop {
            let (left, right) = (&a[..i], &b[j..]);
            match (left.last(), right.first()) {
                (Some(x), Some(y)) if x.side == y.side => {
                    let ring = self.ring(x.side);
                    let mut unit_mult = 0;
                    for (c, n) in ring.fuse(x.label, y.label)? {
                        if *c == ring.unit() {
                            unit_mult = *n;
                        } else {
                            let mut letters = Vec::with_capacity(i + b.len() - j - 1);
                            letters.extend_from_slice(&left[..i - 1]);
                            letters.push(Letter::new(x.side, *c));
                            letters.extend_from_slice(&right[1..]);
                            out.add_term(Word::from_letters(letters), mult * n);
                        }
                    }
                    if unit_mult == 0 {
                        break;
                    }
                    mult *= unit_mult;
                    i -= 1;
                    j += 1;
                }
                _ => {
                    let mut letters = left.to_vec();
                    letters.extend_from_slice(right);
                    out.add_term(Word::from_letters(letters), mult);
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Product of an arbitrary letter sequence, unit letters and repeated
    /// sides allowed, decomposed into reduced words.
    pub fn fuse_letters(&self, letters: &[Letter]) -> Result<WordSum> {
        let mut acc = WordSum::single(Word::empty());
        for l in letters {
            let ring = self.ring(l.side);
            if !ring.contains(l.label) {
                return Err(Error::InvalidWord(format!("label #{} is not in {}", l.label.0, ring.name())));
            }
            if l.label == ring.unit() {
                continue;
            }
            let single = [*l];
            let mut next = WordSum::zero();
            for (w, m) in &acc {
                next.add_sum(&self.fuse_checked(w.letters(), &single)?, *m);
            }
            acc = next;
        }
        Ok(acc)
    }

    pub fn fuse_word_sums(&self, x: &WordSum, y: &WordSum) -> Result<WordSum> {
        let mut out = WordSum::zero();
        for (a, m) in x {
            for (b, n) in y {
                out.add_sum(&self.fuse_words(a, b)?, m * n);
            }
        }
        Ok(out)
    }

    /// Reverses the word and dualizes each letter in its own ring.
    pub fn word_dual(&self, w: &Word) -> Word {
        Word::from_letters(
            w.letters()
                .iter()
                .rev()
                .map(|l| Letter::new(l.side, self.ring(l.side).dual_of(l.label)))
                .collect(),
        )
    }

    /// Every word of length at most `max_len` admitted by `filter`, in
    /// length-then-lexicographic order.
    pub fn enumerate_words(&self, max_len: usize, filter: WordFilter) -> impl Iterator<Item = Word> + '_ {
        (0..=max_len).flat_map(move |len| {
            let starts: &[Side] = if len == 0 { &[Side::C] } else { &[Side::C, Side::D] };
            starts
                .iter()
                .filter(move |&&s| filter.admits(len, s))
                .flat_map(move |&s| self.words_of_length(len, s))
        })
    }

    /// Words of exactly `len` letters starting on `start`, in lex order.
    pub fn words_of_length(&self, len: usize, start: Side) -> impl Iterator<Item = Word> + '_ {
        let sides: Vec<Side> = (0..len).map(|i| if i % 2 == 0 { start } else { start.other() }).collect();
        let empty_alphabet = sides.iter().any(|s| self.alphabet(*s).is_empty());
        let mut digits = vec![0usize; len];
        let mut done = empty_alphabet;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let w = Word::from_letters(
                sides.iter().zip(&digits).map(|(s, &d)| Letter::new(*s, self.alphabet(*s)[d])).collect(),
            );
            done = true;
            for pos in (0..len).rev() {
                digits[pos] += 1;
                if digits[pos] < self.alphabet(sides[pos]).len() {
                    done = false;
                    break;
                }
                digits[pos] = 0;
            }
            Some(w)
        })
    }

    /// Class of `w` under rotation by whole C-D blocks.
    pub fn cyclic_class(&self, w: &Word) -> Result<CyclicClass> {
        self.check_word(w)?;
        if !w.is_in_w() {
            return Err(Error::NotInW(self.show(w)));
        }
        Ok(cyclic::class_of(w))
    }

    /// Frobenius-Perron dimensions of both alphabets, for word dimensions.
    pub fn fp_dims(&self, tol: f64) -> Result<WordDims> {
        Ok(WordDims { dims: [self.c().fp_dims(tol)?, self.d().fp_dims(tol)?] })
    }
}

/// Letter dimensions of both factors; a word's dimension is their product.
#[derive(Clone, Debug)]
pub struct WordDims {
    dims: [Vec<f64>; 2],
}

impl WordDims {
    pub fn of(&self, w: &Word) -> f64 {
        w.letters().iter().map(|l| self.dims[l.side.index()][l.label.index()]).product()
    }

    pub fn of_sum(&self, s: &WordSum) -> f64 {
        s.iter().map(|(w, m)| *m as f64 * self.of(w)).sum()
    }
}
