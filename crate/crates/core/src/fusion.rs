//! Finite fusion rings: storage, axiom validation, fusion arithmetic,
//! Frobenius-Perron dimensions and the adjoint support set.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::SimpleSum;

/// Index of a simple object inside one [`FusionRing`], in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label(pub u16);

impl Label {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// On-disk ring description: `labels`, `unit`, `dual` and the sparse
/// multiplicity list `N` of `[a, b, c, n]` entries (omitted triples are zero).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub labels: Vec<String>,
    pub unit: String,
    pub dual: BTreeMap<String, String>,
    #[serde(rename = "N")]
    pub mult: Vec<(String, String, String, i64)>,
}

impl RingSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring spec serializes")
    }
}

/// A fusion ring with opaque string labels.
///
/// Products are stored as one sparse [`SimpleSum`] per ordered pair. Rings
/// built by level truncation mark some pairs as overflowing; asking for those
/// products yields [`Error::Overflow`] instead of a silently clipped answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, Label>,
    unit: Label,
    dual: Vec<Label>,
    products: Vec<SimpleSum<Label>>,
    overflow: BTreeSet<(Label, Label)>,
}

/// Axioms checked by [`FusionRing::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    UnitSelfDual,
    DualInvolution,
    UnitLaw,
    Associativity,
    DualityUnit,
    DualityConjugation,
    FrobeniusReciprocity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::UnitSelfDual => "unit-self-dual",
            Axiom::DualInvolution => "dual-involution",
            Axiom::UnitLaw => "unit-law",
            Axiom::Associativity => "associativity",
            Axiom::DualityUnit => "duality-unit",
            Axiom::DualityConjugation => "duality-conjugation",
            Axiom::FrobeniusReciprocity => "frobenius-reciprocity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ring: String,
    pub violations: Vec<Violation>,
    /// Number of checks skipped because they touch a truncated product.
    pub skipped_truncated: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            writeln!(f, "ring {}: all axioms hold", self.ring)?;
        } else {
            writeln!(f, "ring {}: {} violation(s)", self.ring, self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {} at ({}): {}", v.axiom, v.witness.join(", "), v.detail)?;
            }
        }
        if self.skipped_truncated > 0 {
            writeln!(f, "  {} check(s) skipped on truncated products", self.skipped_truncated)?;
        }
        Ok(())
    }
}

pub const DEFAULT_FP_TOL: f64 = 1e-9;
pub const FP_MAX_ITERATIONS: usize = 100_000;

impl FusionRing {
    /// Builds a ring from a parsed spec. Rejects structural problems (unknown
    /// or duplicate labels, duplicate entries, non-positive multiplicities);
    /// axiom violations are left for [`FusionRing::validate`].
    pub fn from_spec(name: &str, spec: &RingSpec) -> Result<Self> {
        if spec.labels.is_empty() {
            return Err(Error::EmptyRing);
        }
        let mut index = HashMap::new();
        for (i, l) in spec.labels.iter().enumerate() {
            if index.insert(l.clone(), Label(i as u16)).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownLabel(s.to_string()));
        let unit = lookup(&spec.unit)?;
        let mut dual = vec![None; spec.labels.len()];
        for (a, b) in &spec.dual {
            dual[lookup(a)?.index()] = Some(lookup(b)?);
        }
        let dual = dual
            .into_iter()
            .enumerate()
            .map(|(i, d)| d.ok_or_else(|| Error::MissingDual(spec.labels[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        let n = spec.labels.len();
        let mut products = vec![SimpleSum::zero(); n * n];
        let mut seen = BTreeSet::new();
        for (a, b, c, m) in &spec.mult {
            let (la, lb, lc) = (lookup(a)?, lookup(b)?, lookup(c)?);
            if *m <= 0 {
                return Err(Error::NonPositiveMultiplicity(a.clone(), b.clone(), c.clone(), *m));
            }
            if !seen.insert((la, lb, lc)) {
                return Err(Error::DuplicateEntry(a.clone(), b.clone(), c.clone()));
            }
            products[la.index() * n + lb.index()].add_term(lc, *m as u64);
        }
        Ok(Self {
            name: name.to_string(),
            labels: spec.labels.clone(),
            index,
            unit,
            dual,
            products,
            overflow: BTreeSet::new(),
        })
    }

    pub fn from_json(name: &str, text: &str) -> Result<Self> {
        Self::from_spec(name, &RingSpec::from_json(text)?)
    }

    /// Builds a ring from a product rule on label indices. `rule(a, b)` returns
    /// `None` when the product exceeds a truncation level.
    pub fn from_rule<F>(name: &str, labels: Vec<String>, unit: usize, dual: Vec<usize>, mut rule: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Option<Vec<(usize, u64)>>,
    {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyRing);
        }
        let mut spec = RingSpec { labels: labels.clone(), unit: labels[unit].clone(), dual: BTreeMap::new(), mult: vec![] };
        for (i, d) in dual.iter().enumerate() {
            spec.dual.insert(labels[i].clone(), labels[*d].clone());
        }
        let mut overflow = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                match rule(a, b) {
                    Some(terms) => {
                        let sum: SimpleSum<usize> = terms.into_iter().collect();
                        for (c, m) in &sum {
                            spec.mult.push((labels[a].clone(), labels[b].clone(), labels[*c].clone(), *m as i64));
                        }
                    }
                    None => {
                        overflow.insert((Label(a as u16), Label(b as u16)));
                    }
                }
            }
        }
        let mut ring = Self::from_spec(name, &spec)?;
        ring.overflow = overflow;
        Ok(ring)
    }

    /// Spec form of the ring. Truncated products are omitted.
    pub fn to_spec(&self) -> RingSpec {
        let mut spec = RingSpec {
            labels: self.labels.clone(),
            unit: self.labels[self.unit.index()].clone(),
            dual: BTreeMap::new(),
            mult: vec![],
        };
        for a in self.all_labels() {
            spec.dual.insert(self.name_of(a).to_string(), self.name_of(self.dual_of(a)).to_string());
            for b in self.all_labels() {
                for (c, m) in &self.products[self.slot(a, b)] {
                    spec.mult.push((self.name_of(a).into(), self.name_of(b).into(), self.name_of(*c).into(), *m as i64));
                }
            }
        }
        spec
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn all_labels(&self) -> impl Iterator<Item = Label> + Clone {
        (0..self.labels.len()).map(|i| Label(i as u16))
    }

    /// Non-unit simples in declaration order.
    pub fn non_unit_labels(&self) -> Vec<Label> {
        self.all_labels().filter(|&l| l != self.unit).collect()
    }

    pub fn label(&self, name: &str) -> Result<Label> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn contains(&self, l: Label) -> bool {
        l.index() < self.labels.len()
    }

    pub fn name_of(&self, l: Label) -> &str {
        &self.labels[l.index()]
    }

    pub fn unit(&self) -> Label {
        self.unit
    }

    pub fn dual_of(&self, a: Label) -> Label {
        self.dual[a.index()]
    }

    pub fn is_truncated(&self) -> bool {
        !self.overflow.is_empty()
    }

    fn slot(&self, a: Label, b: Label) -> usize {
        a.index() * self.labels.len() + b.index()
    }

    fn check(&self, l: Label) -> Result<()> {
        if self.contains(l) {
            Ok(())
        } else {
            Err(Error::UnknownLabel(format!("#{} in {}", l.0, self.name)))
        }
    }

    /// `a ⊗ b` as a sum of simples.
    pub fn fuse(&self, a: Label, b: Label) -> Result<&SimpleSum<Label>> {
        self.check(a)?;
        self.check(b)?;
        if self.overflow.contains(&(a, b)) {
            return Err(Error::Overflow {
                ring: self.name.clone(),
                a: self.name_of(a).to_string(),
                b: self.name_of(b).to_string(),
            });
        }
        Ok(&self.products[self.slot(a, b)])
    }

    pub fn fuse_named(&self, a: &str, b: &str) -> Result<SimpleSum<Label>> {
        Ok(self.fuse(self.label(a)?, self.label(b)?)?.clone())
    }

    /// Multiplicity `N^c_{ab}`.
    pub fn n(&self, a: Label, b: Label, c: Label) -> Result<u64> {
        Ok(self.fuse(a, b)?.get(&c))
    }

    /// Bilinear extension of [`FusionRing::fuse`].
    pub fn fuse_sum(&self, x: &SimpleSum<Label>, y: &SimpleSum<Label>) -> Result<SimpleSum<Label>> {
        let mut out = SimpleSum::zero();
        for (a, m) in x {
            for (b, n) in y {
                out.add_sum(self.fuse(*a, *b)?, m * n);
            }
        }
        Ok(out)
    }

    /// Left-to-right tensor product of a sequence of simples; the empty
    /// sequence is the unit.
    pub fn fuse_seq(&self, letters: &[Label]) -> Result<SimpleSum<Label>> {
        let mut acc = SimpleSum::single(self.unit);
        for &l in letters {
            self.check(l)?;
            acc = self.fuse_sum(&acc, &SimpleSum::single(l))?;
        }
        Ok(acc)
    }

    /// Every product is a single simple with multiplicity one.
    pub fn is_pointed(&self) -> bool {
        !self.is_truncated() && self.products.iter().all(|s| s.len() == 1 && s.total() == 1)
    }

    pub fn sum_from_names(&self, terms: &[(&str, u64)]) -> Result<SimpleSum<Label>> {
        let mut s = SimpleSum::zero();
        for (name, m) in terms {
            s.add_term(self.label(name)?, *m);
        }
        Ok(s)
    }

    pub fn format_sum(&self, s: &SimpleSum<Label>) -> String {
        let parts: Vec<String> = s.iter().map(|(l, m)| format!("{}:{}", self.name_of(*l), m)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Checks every fusion-ring axiom and reports each violation with a
    /// witnessing tuple of labels.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut skipped = 0usize;
        let names = |ls: &[Label]| ls.iter().map(|l| self.name_of(*l).to_string()).collect::<Vec<_>>();
        let u = self.unit;

        if self.dual_of(u) != u {
            violations.push(Violation {
                axiom: Axiom::UnitSelfDual,
                witness: names(&[u]),
                detail: format!("dual(unit) = {}", self.name_of(self.dual_of(u))),
            });
        }
        for a in self.all_labels() {
            if self.dual_of(self.dual_of(a)) != a {
                violations.push(Violation {
                    axiom: Axiom::DualInvolution,
                    witness: names(&[a]),
                    detail: format!("dual(dual(a)) = {}", self.name_of(self.dual_of(self.dual_of(a)))),
                });
            }
        }
        for b in self.all_labels() {
            for (lhs, rhs, side) in [(u, b, "left"), (b, u, "right")] {
                match self.fuse(lhs, rhs) {
                    Ok(s) if *s == SimpleSum::single(b) => {}
                    Ok(s) => violations.push(Violation {
                        axiom: Axiom::UnitLaw,
                        witness: names(&[lhs, rhs]),
                        detail: format!("{side} unit product is {}", self.format_sum(s)),
                    }),
                    Err(_) => skipped += 1,
                }
            }
        }
        for a in self.all_labels() {
            for b in self.all_labels() {
                for c in self.all_labels() {
                    let ab = self.fuse(a, b).and_then(|ab| self.fuse_sum(ab, &SimpleSum::single(c)));
                    let bc = self.fuse(b, c).and_then(|bc| self.fuse_sum(&SimpleSum::single(a), bc));
                    let (Ok(left), Ok(right)) = (ab, bc) else {
                        skipped += 1;
                        continue;
                    };
                    if left != right {
                        let d = self
                            .all_labels()
                            .find(|d| left.get(d) != right.get(d))
                            .expect("unequal sums differ somewhere");
                        violations.push(Violation {
                            axiom: Axiom::Associativity,
                            witness: names(&[a, b, c, d]),
                            detail: format!("(ab)c has {} copies of d, a(bc) has {}", left.get(&d), right.get(&d)),
                        });
                    }
                }
            }
        }
        for a in self.all_labels() {
            for b in self.all_labels() {
                let Ok(s) = self.fuse(a, b) else {
                    skipped += 1;
                    continue;
                };
                let expected = u64::from(b == self.dual_of(a));
                if s.get(&u) != expected {
                    violations.push(Violation {
                        axiom: Axiom::DualityUnit,
                        witness: names(&[a, b]),
                        detail: format!("N^unit_ab = {}, expected {}", s.get(&u), expected),
                    });
                }
                for (c, m) in s {
                    let c = *c;
                    match self.n(self.dual_of(b), self.dual_of(a), self.dual_of(c)) {
                        Ok(m2) if m2 == *m => {}
                        Ok(m2) => violations.push(Violation {
                            axiom: Axiom::DualityConjugation,
                            witness: names(&[a, b, c]),
                            detail: format!("N^c_ab = {m} but N^dual(c)_(dual b)(dual a) = {m2}"),
                        }),
                        Err(_) => skipped += 1,
                    }
                    match self.n(self.dual_of(a), c, b) {
                        Ok(m2) if m2 == *m => {}
                        Ok(m2) => violations.push(Violation {
                            axiom: Axiom::FrobeniusReciprocity,
                            witness: names(&[a, b, c]),
                            detail: format!("N^c_ab = {m} but N^b_(dual a)c = {m2}"),
                        }),
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
        ValidationReport { ring: self.name.clone(), violations, skipped_truncated: skipped }
    }

    /// Frobenius-Perron dimension of `a`: the Perron eigenvalue of its left
    /// fusion matrix, by power iteration from the all-ones vector.
    ///
    /// The iteration runs on `L_a + I`, which has the same Perron vector but no
    /// other eigenvalue of equal modulus, so bipartite fusion graphs converge.
    /// It stops when the Collatz-Wielandt bounds are within `tol`.
    pub fn fp_dim(&self, a: Label, tol: f64) -> Result<f64> {
        self.check(a)?;
        let n = self.rank();
        let rows: Vec<&SimpleSum<Label>> = self.all_labels().map(|b| self.fuse(a, b)).collect::<Result<_>>()?;
        let mut x = vec![1.0 / n as f64; n];
        for _ in 0..FP_MAX_ITERATIONS {
            let y: Vec<f64> = rows
                .iter()
                .enumerate()
                .map(|(b, row)| x[b] + row.iter().map(|(c, m)| *m as f64 * x[c.index()]).sum::<f64>())
                .collect();
            let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
            for (yi, xi) in y.iter().zip(&x) {
                let r = yi / xi;
                lo = lo.min(r);
                hi = hi.max(r);
            }
            if hi - lo < tol {
                return Ok(0.5 * (lo + hi) - 1.0);
            }
            let total: f64 = y.iter().sum();
            x = y.into_iter().map(|v| v / total).collect();
        }
        Err(Error::NoConvergence(FP_MAX_ITERATIONS))
    }

    pub fn fp_dims(&self, tol: f64) -> Result<Vec<f64>> {
        self.all_labels().map(|a| self.fp_dim(a, tol)).collect()
    }

    /// `S = { a : N^a_{b, dual b} != 0 for some b }`. Always contains the unit.
    pub fn s_set(&self) -> Result<BTreeSet<Label>> {
        let mut out = BTreeSet::new();
        for b in self.all_labels() {
            out.extend(self.fuse(b, self.dual_of(b))?.support().copied());
        }
        Ok(out)
    }
}
