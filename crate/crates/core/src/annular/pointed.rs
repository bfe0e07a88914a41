//! Exact tube algebra of a finite group. The basis element `T_{g,b}` spans
//! `C(g ⊗ b, gbg⁻¹ ⊗ g)`; products, the involution and the trace reduce to
//! group arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fusion::FusionRing;
use crate::gallery::GroupTable;
use crate::report::{Counterexample, Tally, Verdict};
use crate::sum::SimpleSum;

#[derive(Clone, Debug)]
pub struct PointedTubeElement {
    ctx: Arc<GroupTable>,
    terms: BTreeMap<(usize, usize), Complex64>,
}

impl PartialEq for PointedTubeElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.terms == other.terms
    }
}

impl PointedTubeElement {
    pub fn zero(ctx: &Arc<GroupTable>) -> Self {
        Self { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(ctx: &Arc<GroupTable>, g: usize, b: usize) -> Self {
        Self::from_terms(ctx, [((g, b), Complex64::new(1.0, 0.0))])
    }

    /// Sum of `T_{e,b}` over all `b`.
    pub fn unit(ctx: &Arc<GroupTable>) -> Self {
        Self::from_terms(ctx, (0..ctx.order()).map(|b| ((ctx.identity(), b), Complex64::new(1.0, 0.0))))
    }

    pub fn from_terms(ctx: &Arc<GroupTable>, terms: impl IntoIterator<Item = ((usize, usize), Complex64)>) -> Self {
        let mut x = Self::zero(ctx);
        for (k, z) in terms {
            x.add_term(k, z);
        }
        x
    }

    fn add_term(&mut self, k: (usize, usize), z: Complex64) {
        let e = self.terms.entry(k).or_insert(Complex64::new(0.0, 0.0));
        *e += z;
        if *e == Complex64::new(0.0, 0.0) {
            self.terms.remove(&k);
        }
    }

    pub fn context(&self) -> &Arc<GroupTable> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Complex64> {
        &self.terms
    }

    pub fn coeff(&self, g: usize, b: usize) -> Complex64 {
        self.terms.get(&(g, b)).copied().unwrap_or_default()
    }

    fn same_context(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.same_context(other) {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (k, z) in &other.terms {
            out.add_term(*k, *z);
        }
        Ok(out)
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self::from_terms(&self.ctx, self.terms.iter().map(|(k, c)| (*k, c * z)))
    }

    /// `T_{g1,b1} · T_{g2,b2} = δ_{b1, g2 b2 g2⁻¹} T_{g1 g2, b2}`, extended bilinearly.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if !self.same_context(other) {
            return Err(Error::ContextMismatch);
        }
        let g = &self.ctx;
        let mut out = Self::zero(g);
        for (&(g1, b1), z1) in &self.terms {
            for (&(g2, b2), z2) in &other.terms {
                if b1 == g.conj(g2, b2) {
                    out.add_term((g.mul(g1, g2), b2), z1 * z2);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate-linear involution `T_{g,b}^♯ = T_{g⁻¹, gbg⁻¹}`.
    pub fn sharp(&self) -> Self {
        let g = &self.ctx;
        Self::from_terms(g, self.terms.iter().map(|(&(x, b), z)| ((g.inv(x), g.conj(x, b)), z.conj())))
    }

    /// `Ω(T_{g,b}) = δ_{g,e}`.
    pub fn trace(&self) -> Complex64 {
        self.terms.iter().filter(|((g, _), _)| *g == self.ctx.identity()).map(|(_, z)| z).sum()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let keys: BTreeSet<_> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|&(g, b)| (self.coeff(g, b) - other.coeff(g, b)).norm() <= tol)
    }
}

pub fn pointed_tube_product(x: &PointedTubeElement, y: &PointedTubeElement) -> Result<PointedTubeElement> {
    x.product(y)
}

pub fn pointed_tube_sharp(x: &PointedTubeElement) -> PointedTubeElement {
    x.sharp()
}

pub fn pointed_tube_trace(x: &PointedTubeElement) -> Complex64 {
    x.trace()
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

/// Builds the full tube algebra of the group underlying a pointed ring and
/// checks its block structure: dimension `|G|²`, the class bookkeeping
/// `Σ_λ |λ|²|C_λ| = |G|²`, associativity and the involution on basis
/// elements (exhaustive when `|G| <= bound`), agreement of the exact product
/// support with hom dimensions, and for each conjugacy class an explicit
/// ♯-preserving isomorphism of its corner onto matrix units tensor the group
/// algebra of the centralizer.
pub fn pointed_summand_check(ring: &FusionRing, bound: usize) -> Result<Verdict> {
    let start = Instant::now();
    let g = Arc::new(GroupTable::from_pointed_ring(ring)?);
    let n = g.order();
    let mut verdict = Verdict::new("POINTED_SUMMANDS", ring.name(), &[("bound", bound)]);
    let name = |x: usize| g.name_of(x).to_string();
    let basis: Vec<PointedTubeElement> =
        (0..n).flat_map(|x| (0..n).map(move |b| (x, b))).map(|(x, b)| PointedTubeElement::basis(&g, x, b)).collect();
    let tname = |k: usize| format!("T({},{})", name(k / n), name(k % n));

    let mut t = Tally::default();
    t.check(basis.len() == n * n, || cx("dimension", "", "", "", n * n, basis.len()));
    verdict.witnesses.push(format!("total dimension {}", basis.len()));

    let classes = g.conjugacy_classes();
    let bookkeeping: usize = classes.iter().map(|c| c.len() * c.len() * g.centralizer(c[0]).len()).sum();
    t.check(bookkeeping == n * n, || cx("class-bookkeeping", "", "", "", n * n, bookkeeping));
    let terms: Vec<String> =
        classes.iter().map(|c| format!("{}·{}", c.len() * c.len(), g.centralizer(c[0]).len())).collect();
    verdict.witnesses.push(format!("sum over classes |λ|²|C_λ| = {} = {bookkeeping}", terms.join(" + ")));

    // Exact support agrees with hom dimensions in the ring.
    let labels: Vec<_> = ring.all_labels().collect();
    for x in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = ring.fuse(labels[x], labels[b])?;
                let rhs = ring.fuse(labels[c], labels[x])?;
                let d = lhs.hom_dim(rhs);
                let e = u64::from(c == g.conj(x, b));
                t.check(d == e, || cx("dimension-support", &name(x), &name(b), &name(c), e, d));
            }
        }
    }

    let one = PointedTubeElement::unit(&g);
    for (k, x) in basis.iter().enumerate() {
        t.check(one.product(x)? == *x && x.product(&one)? == *x, || cx("unit", &tname(k), "", "", "x", "changed"));
        t.check(x.sharp().sharp() == *x, || cx("sharp-involutive", &tname(k), "", "", "x", "changed"));
        let tr = x.trace();
        let e = if k / n == g.identity() { 1.0 } else { 0.0 };
        t.check(tr == Complex64::new(e, 0.0), || cx("trace", &tname(k), "", "", e, tr));
    }
    if n <= bound {
        let products: Vec<Vec<PointedTubeElement>> =
            basis.iter().map(|x| basis.iter().map(|y| x.product(y)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        let mut composable = 0u64;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let xy = &products[i][j];
                let sharp_ok = xy.sharp() == basis[j].sharp().product(&basis[i].sharp())?;
                t.check(sharp_ok, || cx("sharp-anti-multiplicative", &tname(i), &tname(j), "", "equal", "different"));
                for k in 0..basis.len() {
                    let left = xy.product(&basis[k])?;
                    let right = basis[i].product(&products[j][k])?;
                    if !left.terms.is_empty() {
                        composable += 1;
                    }
                    t.check(left == right, || cx("associativity", &tname(i), &tname(j), &tname(k), "equal", "different"));
                }
            }
        }
        verdict.witnesses.push(format!("associativity on all {} basis triples, {composable} composable", basis.len().pow(3)));
    } else {
        verdict.note(format!("associativity sampled only: |G| = {n} exceeds bound {bound}"));
    }

    for class in &classes {
        corner_isomorphism(&g, class, &mut t);
    }
    verdict.absorb(t);
    verdict.elapsed = Some(start.elapsed());
    Ok(verdict)
}

/// Checks `T_{g,b} ↦ E_{gbg⁻¹, b} ⊗ s_{gbg⁻¹}⁻¹ g s_b` on the corner of one
/// class, where `s_b b0 s_b⁻¹ = b` for the least class member `b0`.
fn corner_isomorphism(g: &GroupTable, class: &[usize], t: &mut Tally) {
    let b0 = class[0];
    let pos = |b: usize| class.iter().position(|&x| x == b).expect("class is conjugation closed");
    let s: Vec<usize> = class.iter().map(|&b| (0..g.order()).find(|&x| g.conj(x, b0) == b).unwrap()).collect();
    let cent = g.centralizer(b0);
    let phi = |x: usize, b: usize| {
        let c = g.conj(x, b);
        let (i, j) = (pos(c), pos(b));
        (i, j, g.mul(g.mul(g.inv(s[i]), x), s[j]))
    };
    let name = |x: usize, b: usize| format!("T({},{})", g.name_of(x), g.name_of(b));
    let basis: Vec<(usize, usize)> = (0..g.order()).flat_map(|x| class.iter().map(move |&b| (x, b))).collect();
    let images: BTreeSet<(usize, usize, usize)> = basis.iter().map(|&(x, b)| phi(x, b)).collect();
    let expected = class.len() * class.len() * cent.len();
    t.check(images.len() == expected && images.len() == basis.len(), || {
        cx("corner-bijective", g.name_of(b0), "", "", expected, images.len())
    });
    for &(x, b) in &basis {
        let (_, _, h) = phi(x, b);
        t.check(cent.contains(&h), || cx("corner-centralizer", &name(x, b), "", "", "in centralizer", g.name_of(h)));
        // ♯ goes to (E_{ij} ⊗ h)* = E_{ji} ⊗ h⁻¹.
        let (i, j, h) = phi(x, b);
        let sharp = phi(g.inv(x), g.conj(x, b));
        t.check(sharp == (j, i, g.inv(h)), || cx("corner-sharp", &name(x, b), "", "", "adjoint", "different"));
    }
    for &(x1, b1) in &basis {
        for &(x2, b2) in &basis {
            let (i1, j1, h1) = phi(x1, b1);
            let (i2, j2, h2) = phi(x2, b2);
            let matrix = (j1 == i2).then(|| (i1, j2, g.mul(h1, h2)));
            let algebra = (b1 == g.conj(x2, b2)).then(|| phi(g.mul(x1, x2), b2));
            t.check(matrix == algebra, || cx("corner-multiplicative", &name(x1, b1), &name(x2, b2), "", "equal", "different"));
        }
    }
}

/// `Ω(x^♯ x) >= 0` and the involution identities on seeded random elements.
pub fn pointed_positivity_check(ring: &FusionRing, samples: usize, seed: u64) -> Result<Verdict> {
    let start = Instant::now();
    let g = Arc::new(GroupTable::from_pointed_ring(ring)?);
    let n = g.order();
    let mut verdict = Verdict::new("POINTED_POSITIVITY", ring.name(), &[("samples", samples), ("seed", seed as usize)]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = |rng: &mut ChaCha8Rng| {
        let size = rng.gen_range(1..=n * n);
        PointedTubeElement::from_terms(
            &g,
            (0..size).map(|_| {
                ((rng.gen_range(0..n), rng.gen_range(0..n)), Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            }),
        )
    };
    let mut t = Tally::default();
    let tol = 1e-9;
    let mut min = f64::INFINITY;
    for k in 0..samples {
        let x = random(&mut rng);
        let y = random(&mut rng);
        let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let omega = x.sharp().product(&x)?.trace();
        let norm: f64 = x.terms().values().map(|c| c.norm_sqr()).sum();
        min = min.min(omega.re);
        let label = format!("sample {k}");
        t.check(omega.re >= -tol && omega.im.abs() <= tol, || cx("trace-positive", &label, "", "", ">= 0", omega));
        t.check((omega.re - norm).abs() <= tol * (1.0 + norm), || cx("trace-norm", &label, "", "", norm, omega.re));
        let lhs = x.product(&y)?.sharp();
        let rhs = y.sharp().product(&x.sharp())?;
        t.check(lhs.approx_eq(&rhs, tol), || cx("sharp-anti-multiplicative", &label, "", "", "equal", "different"));
        t.check(x.sharp().sharp().approx_eq(&x, tol), || cx("sharp-involutive", &label, "", "", "equal", "different"));
        t.check(x.scale(z).sharp().approx_eq(&x.sharp().scale(z.conj()), tol), || {
            cx("sharp-conjugate-linear", &label, "", "", "equal", "different")
        });
    }
    verdict.absorb(t);
    if samples > 0 {
        verdict.witnesses.push(format!("minimum Ω(x♯x) = {min:.6}"));
    }
    verdict.elapsed = Some(start.elapsed());
    Ok(verdict)
}

/// Hom-dimension support of a pointed ring, used as an oracle: the set of
/// `(g, b, c)` with `dim C(g ⊗ b, c ⊗ g) > 0`.
pub fn pointed_dimension_support(ring: &FusionRing) -> Result<Vec<(usize, usize, usize)>> {
    let labels: Vec<_> = ring.all_labels().collect();
    let mut out = Vec::new();
    for &x in &labels {
        for &b in &labels {
            for &c in &labels {
                let lhs: &SimpleSum<_> = ring.fuse(x, b)?;
                if lhs.hom_dim(ring.fuse(c, x)?) > 0 {
                    out.push((x.index(), b.index(), c.index()));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn weight_idempotents_and_s3_product() {
        let g = Arc::new(gallery::s3());
        let idx = |s: &str| g.index(s).unwrap();
        let e = g.identity();
        let t = PointedTubeElement::basis(&g, e, idx("(123)"));
        assert_eq!(t.product(&t).unwrap(), t);
        let x = PointedTubeElement::basis(&g, idx("(12)"), idx("(123)"));
        let y = PointedTubeElement::basis(&g, idx("(12)"), idx("(132)"));
        assert_eq!(x.product(&y).unwrap(), PointedTubeElement::basis(&g, e, idx("(132)")));
        assert_eq!(t.sharp(), t);
        assert_eq!(x.trace(), Complex64::new(0.0, 0.0));
        assert_eq!(t.trace(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn inverse_pairs_compose_to_weight_idempotents() {
        for table in [gallery::z2(), gallery::z3(), gallery::s3()] {
            let g = Arc::new(table);
            for x in 0..g.order() {
                for b in 0..g.order() {
                    let t = PointedTubeElement::basis(&g, x, b);
                    let back = PointedTubeElement::basis(&g, g.inv(x), g.conj(x, b));
                    assert_eq!(back.product(&t).unwrap(), PointedTubeElement::basis(&g, g.identity(), b));
                    assert_eq!(t.product(&back).unwrap(), PointedTubeElement::basis(&g, g.identity(), g.conj(x, b)));
                }
            }
        }
    }

    #[test]
    fn mismatched_contexts() {
        let a = Arc::new(gallery::z2());
        let b = Arc::new(gallery::z3());
        let x = PointedTubeElement::basis(&a, 0, 0);
        let y = PointedTubeElement::basis(&b, 0, 0);
        assert_eq!(x.product(&y), Err(Error::ContextMismatch));
        assert_eq!(x.add(&y), Err(Error::ContextMismatch));
    }

    #[test]
    fn summand_checks() {
        for (ring, total) in [(gallery::z2_ring(), 4), (gallery::z3_ring(), 9), (gallery::s3_ring(), 36)] {
            let v = pointed_summand_check(&ring, 6).unwrap();
            assert!(v.passed(), "{}", v.to_text(false));
            assert!(v.witnesses[0].ends_with(&total.to_string()));
        }
        let v = pointed_summand_check(&gallery::s3_ring(), 6).unwrap();
        assert!(v.witnesses[1].contains("6·1 + 9·2 + 4·3") || v.witnesses[1].contains("1·6 + 9·2 + 4·3"), "{}", v.witnesses[1]);
        assert!(matches!(pointed_summand_check(&gallery::fib_ring(), 6), Err(Error::NotPointed(_))));
    }

    #[test]
    fn positivity_is_seeded() {
        let a = pointed_positivity_check(&gallery::s3_ring(), 50, 7).unwrap();
        let b = pointed_positivity_check(&gallery::s3_ring(), 50, 7).unwrap();
        assert!(a.passed());
        assert_eq!(a.witnesses, b.witnesses);
    }

    #[test]
    fn dimension_support_is_conjugation() {
        let ring = gallery::s3_ring();
        let g = gallery::s3();
        let support = pointed_dimension_support(&ring).unwrap();
        assert_eq!(support.len(), 36);
        assert!(support.iter().all(|&(x, b, c)| g.conj(x, b) == c));
    }
}
