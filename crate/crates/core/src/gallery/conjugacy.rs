//! Conjugacy classes of a free product of finite groups `G * H`, and the
//! cross-check of the annular decomposition of the pointed free product
//! against them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use super::group::{group_ring, GroupTable};
use crate::annular::{decomposition_report, tube_dim};
use crate::error::{Error, Result};
use crate::free_product::FreeProduct;
use crate::fusion::Label;
use crate::report::{Counterexample, Tally, Verdict, BOUNDED_NOTE};
use crate::word::{Letter, Side, Word, WordFilter};

/// Candidate-times-class budget for the bounded centralizer check of mixed
/// classes; above it the check is skipped and reported as such.
pub const CENTRALIZER_CHECK_BUDGET: usize = 20_000_000;

/// Reduced word in `G * H`: non-identity letters, adjacent letters from
/// different factors. `Side::C` letters are elements of `G`, `Side::D` of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeGroupWord(Vec<(Side, usize)>);

impl FreeGroupWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<(Side, usize)>, g: &GroupTable, h: &GroupTable) -> Result<Self> {
        for (i, &(s, x)) in letters.iter().enumerate() {
            let t = pick(s, g, h);
            if x >= t.order() {
                return Err(Error::InvalidWord(format!("element index {x} out of range for {}", t.name())));
            }
            if x == t.identity() {
                return Err(Error::InvalidWord("identity letter in a reduced word".into()));
            }
            if i > 0 && letters[i - 1].0 == s {
                return Err(Error::InvalidWord("adjacent letters from the same factor".into()));
            }
        }
        Ok(Self(letters))
    }

    pub fn letter(side: Side, x: usize) -> Self {
        Self(vec![(side, x)])
    }

    /// Reads the letters of a word over the pointed rings of `G` and `H`.
    pub fn from_word(w: &Word) -> Self {
        Self(w.letters().iter().map(|l| (l.side, l.label.index())).collect())
    }

    pub fn to_word(&self) -> Word {
        Word::from_letters(self.0.iter().map(|&(s, x)| Letter::new(s, Label(x as u16))).collect())
    }

    pub fn letters(&self) -> &[(Side, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Self, g: &GroupTable, h: &GroupTable) -> Self {
        let mut out = self.0.clone();
        for &(s, x) in &other.0 {
            match out.last() {
                Some(&(t, y)) if t == s => {
                    let tab = pick(s, g, h);
                    let z = tab.mul(y, x);
                    out.pop();
                    if z != tab.identity() {
                        out.push((s, z));
                    }
                }
                _ => out.push((s, x)),
            }
        }
        Self(out)
    }

    pub fn inverse(&self, g: &GroupTable, h: &GroupTable) -> Self {
        Self(self.0.iter().rev().map(|&(s, x)| (s, pick(s, g, h).inv(x))).collect())
    }

    pub fn pow(&self, n: usize, g: &GroupTable, h: &GroupTable) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.mul(self, g, h))
    }

    pub fn show(&self, g: &GroupTable, h: &GroupTable) -> String {
        if self.0.is_empty() {
            return "e".into();
        }
        self.0.iter().map(|&(s, x)| pick(s, g, h).name_of(x)).collect::<Vec<_>>().join(" ")
    }
}

fn pick<'a>(s: Side, g: &'a GroupTable, h: &'a GroupTable) -> &'a GroupTable {
    match s {
        Side::C => g,
        Side::D => h,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Unit,
    GType,
    HType,
    Mixed,
}

impl ClassKind {
    pub fn label(self) -> &'static str {
        match self {
            ClassKind::Unit => "UNIT",
            ClassKind::GType => "G_TYPE",
            ClassKind::HType => "H_TYPE",
            ClassKind::Mixed => "MIXED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Centralizer {
    /// The whole free product.
    Whole,
    /// Centralizer of a single letter inside its own factor.
    Finite { side: Side, elements: Vec<usize> },
    /// Infinite cyclic, generated by the primitive root.
    Cyclic { generator: FreeGroupWord },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub kind: ClassKind,
    /// Least member in word order; for mixed classes, the least member
    /// starting in `G`.
    pub representative: FreeGroupWord,
    /// Members reachable by length-preserving moves, sorted in word order.
    pub members: Vec<FreeGroupWord>,
    pub centralizer: Centralizer,
    /// For mixed classes: whether the words up to the length bound commuting
    /// with the representative are exactly the powers of the generator.
    /// `None` when not checked.
    pub centralizer_checked: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyReport {
    pub g: String,
    pub h: String,
    pub len_bound: usize,
    pub classes: Vec<ConjugacyClass>,
    pub notes: Vec<String>,
}

impl ConjugacyReport {
    pub fn of_kind(&self, kind: ClassKind) -> impl Iterator<Item = &ConjugacyClass> {
        self.classes.iter().filter(move |c| c.kind == kind)
    }

    pub fn to_text(&self, g: &GroupTable, h: &GroupTable) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "conjugacy classes of {}*{} [len_bound={}]", self.g, self.h, self.len_bound);
        for c in &self.classes {
            let cent = match &c.centralizer {
                Centralizer::Whole => "whole group".to_string(),
                Centralizer::Finite { side, elements } => format!(
                    "order {} {{{}}}",
                    elements.len(),
                    elements.iter().map(|&x| pick(*side, g, h).name_of(x)).collect::<Vec<_>>().join(", ")
                ),
                Centralizer::Cyclic { generator } => format!("infinite cyclic on {}", generator.show(g, h)),
            };
            let _ = writeln!(s, "  {} {} members={} centralizer: {}", c.kind.label(), c.representative.show(g, h), c.members.len(), cent);
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        s
    }
}

fn word_order(a: &FreeGroupWord, b: &FreeGroupWord) -> std::cmp::Ordering {
    a.to_word().cmp(&b.to_word())
}

/// Conjugacy classes of `G * H` among reduced words of length at most
/// `len_bound`. Single letters are conjugated inside their factor; cyclically
/// reduced words of length `>= 2` by cyclic permutation.
pub fn classify_conjugacy(g: &GroupTable, h: &GroupTable, len_bound: usize) -> ConjugacyReport {
    let mut classes = vec![ConjugacyClass {
        kind: ClassKind::Unit,
        representative: FreeGroupWord::identity(),
        members: vec![FreeGroupWord::identity()],
        centralizer: Centralizer::Whole,
        centralizer_checked: None,
    }];
    if len_bound >= 1 {
        for (side, tab, kind) in [(Side::C, g, ClassKind::GType), (Side::D, h, ClassKind::HType)] {
            for class in tab.conjugacy_classes() {
                if class.contains(&tab.identity()) {
                    continue;
                }
                classes.push(ConjugacyClass {
                    kind,
                    representative: FreeGroupWord::letter(side, class[0]),
                    members: class.iter().map(|&x| FreeGroupWord::letter(side, x)).collect(),
                    centralizer: Centralizer::Finite { side, elements: tab.centralizer(class[0]) },
                    centralizer_checked: None,
                });
            }
        }
    }

    let fp = FreeProduct::new(group_ring(g), group_ring(h)).expect("group rings are valid");
    let mut seen = BTreeSet::new();
    let mut mixed = Vec::new();
    for w in fp.enumerate_words(len_bound, WordFilter::W) {
        let rot = crate::cyclic::least_block_rotation(w.letters());
        if rot != 0 || !seen.insert(w.clone()) {
            continue;
        }
        let rep = FreeGroupWord::from_word(&w);
        let n = rep.len();
        let mut members: Vec<FreeGroupWord> =
            (0..n).map(|k| FreeGroupWord(rep.0[k..].iter().chain(&rep.0[..k]).copied().collect())).collect();
        members.sort_by(word_order);
        members.dedup();
        let p = crate::cyclic::primitive_blocks(w.letters());
        let generator = FreeGroupWord(rep.0[..2 * p].to_vec());
        mixed.push((rep, members, generator));
    }

    let candidates: Vec<FreeGroupWord> = fp.enumerate_words(len_bound, WordFilter::All).map(|w| FreeGroupWord::from_word(&w)).collect();
    let check = mixed.len().saturating_mul(candidates.len()) <= CENTRALIZER_CHECK_BUDGET;
    let checked: Vec<Option<bool>> = mixed
        .par_iter()
        .map(|(rep, _, generator)| {
            check.then(|| {
                let inv = generator.inverse(g, h);
                let mut powers = BTreeSet::new();
                for base in [generator, &inv] {
                    let mut x = FreeGroupWord::identity();
                    while x.len() <= len_bound {
                        powers.insert(x.clone());
                        x = x.mul(base, g, h);
                    }
                }
                let commuting: BTreeSet<FreeGroupWord> =
                    candidates.iter().filter(|x| x.mul(rep, g, h) == rep.mul(x, g, h)).cloned().collect();
                commuting == powers
            })
        })
        .collect();
    for ((rep, members, generator), ok) in mixed.into_iter().zip(checked) {
        classes.push(ConjugacyClass {
            kind: ClassKind::Mixed,
            representative: rep,
            members,
            centralizer: Centralizer::Cyclic { generator },
            centralizer_checked: ok,
        });
    }

    let mut notes = vec![BOUNDED_NOTE.to_string()];
    notes.push("the centralizer of a single letter is its centralizer inside its own factor, not the whole factor".into());
    if !check {
        notes.push("mixed-class centralizer check skipped: candidate set exceeds budget".into());
    }
    ConjugacyReport { g: g.name().to_string(), h: h.name().to_string(), len_bound, classes, notes }
}

fn cx(check: &str, v: &str, b: &str, c: &str, expected: impl ToString, found: impl ToString) -> Counterexample {
    Counterexample {
        check: check.into(),
        v: v.into(),
        b: b.into(),
        c: c.into(),
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// Compares the annular decomposition of `Hilb(G) * Hilb(H)` with the
/// conjugacy classes of `G * H`.
pub fn pointed_cross_check(g: &GroupTable, h: &GroupTable, wmax: usize, vmax: usize) -> Result<Verdict> {
    let start = Instant::now();
    let fp = FreeProduct::new(group_ring(g), group_ring(h))?;
    let mut verdict = Verdict::new("POINTED_CROSS_CHECK", &fp.name(), &[("wmax", wmax), ("vmax", vmax)]);
    let report = decomposition_report(&fp, wmax, vmax)?;
    let conj = classify_conjugacy(g, h, wmax);
    let mut t = Tally::default();

    // Mixed classes against the cyclic classes of W.
    let mixed: BTreeMap<Word, &ConjugacyClass> =
        conj.of_kind(ClassKind::Mixed).map(|c| (c.representative.to_word(), c)).collect();
    let wclasses: BTreeMap<Word, _> = report.wclasses.iter().map(|e| (e.class.canonical.clone(), e)).collect();
    let keys: BTreeSet<&Word> = mixed.keys().chain(wclasses.keys()).collect();
    for k in keys {
        let name = fp.show(k);
        match (mixed.get(k), wclasses.get(k)) {
            (Some(c), Some(e)) => {
                let starting_g: Vec<Word> =
                    c.members.iter().filter(|m| m.letters()[0].0 == Side::C).map(FreeGroupWord::to_word).collect();
                t.check(starting_g == e.class.members, || {
                    cx("class members", "", &name, "", e.class.members.len(), starting_g.len())
                });
                let Centralizer::Cyclic { generator } = &c.centralizer else { unreachable!() };
                t.check(generator.to_word() == e.period, || {
                    cx("period is generator", "", &name, "", fp.show(&e.period), generator.show(g, h))
                });
                if let Some(ok) = c.centralizer_checked {
                    t.check(ok, || cx("mixed centralizer is cyclic", "", &name, "", "true", "false"));
                }
            }
            (Some(_), None) => t.check(false, || cx("mixed class has a W class", "", &name, "", "present", "missing")),
            (None, _) => t.check(false, || cx("W class has a mixed class", "", &name, "", "present", "missing")),
        }
    }
    verdict.witnesses.push(format!("{} mixed classes = {} W classes", mixed.len(), wclasses.len()));

    // Adjoint parts of pointed factors are trivial.
    for part in [&report.plus_c, &report.plus_d] {
        let tag = part.side.tag();
        t.check(part.s_set.is_empty(), || cx("adjoint support is the unit", "", tag, "", 0, part.s_set.len()));
        t.check(part.through_unit.is_empty(), || {
            cx("no letter blocks through the unit weight", "", tag, "", 0, part.through_unit.len())
        });
    }

    // One-sided tube algebra of a factor against its conjugacy classes.
    for (side, tab, kind) in [(Side::C, g, ClassKind::GType), (Side::D, h, ClassKind::HType)] {
        let classes: Vec<&ConjugacyClass> = conj.of_kind(kind).collect();
        let class_of: BTreeMap<usize, usize> = classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.members.iter().map(move |m| (m.letters()[0].1, i)))
            .collect();
        let letters: Vec<usize> = (0..tab.order()).filter(|&x| x != tab.identity()).collect();
        if wmax >= 1 {
            t.check(class_of.len() == letters.len(), || {
                cx("letters covered by classes", "", side.tag(), "", letters.len(), class_of.len())
            });
        }
        let vs: Vec<Word> =
            std::iter::once(Word::empty()).chain(letters.iter().map(|&x| Word::letter(side, Label(x as u16)))).collect();
        for &b in &letters {
            for &c in &letters {
                let (wb, wc) = (Word::letter(side, Label(b as u16)), Word::letter(side, Label(c as u16)));
                let mut total = 0;
                for v in &vs {
                    total += tube_dim(&fp, v, &wb, &wc)?;
                }
                let expected = match (class_of.get(&b), class_of.get(&c)) {
                    (Some(x), Some(y)) if x == y => match &classes[*x].centralizer {
                        Centralizer::Finite { elements, .. } => elements.len() as u64,
                        _ => unreachable!(),
                    },
                    _ => 0,
                };
                t.check(total == expected, || {
                    cx("one-sided corner dimension", "", tab.name_of(b), tab.name_of(c), expected, total)
                });
            }
        }
    }

    // Empty weight: every word is invertible, so each corner is one-dimensional.
    let words = fp.enumerate_words(vmax, WordFilter::All).count();
    t.check(report.weight0.len() == words, || cx("empty-weight support", "", "∅", "∅", words, report.weight0.len()));
    for e in &report.weight0 {
        t.check(e.dim == 1, || cx("empty-weight dimension", &fp.show(&e.v), "∅", "∅", 1, e.dim));
    }

    verdict.absorb(t);
    verdict.notes.extend(conj.notes);
    verdict.elapsed = Some(start.elapsed());
    Ok(verdict)
}
