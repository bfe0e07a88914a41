//! Acceptance suite: one PASS/FAIL line per criterion. Every expected value
//! is computed here from scratch (group arithmetic on permutations, closed
//! form dimensions, Burnside counts, brute-force set partitions) and compared
//! with the library.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use freefusion::annular::{self, pointed, tube_dim, verify_lemma, Lemma};
use freefusion::gallery::{self, pointed_cross_check, verify_morita_generation};
use freefusion::ncp::{count_single_side, spanning_bound};
use freefusion::report::Status;
use freefusion::{FreeProduct, FusionRing, Letter, Side, Word, WordFilter};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fp(c: FusionRing, d: FusionRing) -> FreeProduct {
    FreeProduct::new(c, d).expect("valid factors")
}

fn tlj_pair(n: usize) -> (FusionRing, FusionRing) {
    (gallery::tlj_ring(n).unwrap(), gallery::tlj_ring_with_prefix(n, "g").unwrap())
}

// ---------------------------------------------------------------------------
// 1. fusion axioms

fn dense(r: &FusionRing) -> Vec<Vec<Vec<u64>>> {
    let ls: Vec<_> = r.all_labels().collect();
    ls.iter().map(|&a| ls.iter().map(|&b| ls.iter().map(|&c| r.n(a, b, c).unwrap()).collect()).collect()).collect()
}

fn axioms_oracle(r: &FusionRing) -> Result<(), String> {
    let n = dense(r);
    let k = n.len();
    let u = r.unit().index();
    let d: Vec<usize> = r.all_labels().map(|l| r.dual_of(l).index()).collect();
    for a in 0..k {
        ensure(d[d[a]] == a, || format!("{}: dual not involutive at {a}", r.name()))?;
        for b in 0..k {
            ensure(n[u][a][b] == (a == b) as u64 && n[a][u][b] == (a == b) as u64, || format!("{}: unit law", r.name()))?;
            ensure(n[a][b][u] == (b == d[a]) as u64, || format!("{}: duality at ({a},{b})", r.name()))?;
            for c in 0..k {
                ensure(n[a][b][c] == n[d[b]][d[a]][d[c]], || format!("{}: conjugation at ({a},{b},{c})", r.name()))?;
                ensure(n[a][b][c] == n[d[a]][c][b], || format!("{}: Frobenius at ({a},{b},{c})", r.name()))?;
                for e in 0..k {
                    let l: u64 = (0..k).map(|x| n[a][b][x] * n[x][c][e]).sum();
                    let rr: u64 = (0..k).map(|x| n[b][c][x] * n[a][x][e]).sum();
                    ensure(l == rr, || format!("{}: associativity at ({a},{b},{c};{e})", r.name()))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let rings = gallery::gallery_rings();
    for r in &rings {
        let report = r.validate();
        ensure(report.is_valid(), || format!("library rejects {}: {report}", r.name()))?;
        axioms_oracle(r)?;
    }
    let broken = FusionRing::from_json("broken", include_str!("../../../rings/broken-assoc")).unwrap();
    ensure(axioms_oracle(&broken).is_err() && !broken.validate().is_valid(), || "corrupted fixture accepted".into())?;
    Ok(format!("{} gallery rings valid, corrupted fixture rejected", rings.len()))
}

// ---------------------------------------------------------------------------
// 2. free fusion of pointed factors is group-word multiplication

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Elem {
    Perm([u8; 3]),
    Mod(u8, u8),
}

impl Elem {
    fn mul(self, o: Elem) -> Elem {
        match (self, o) {
            (Elem::Perm(p), Elem::Perm(q)) => Elem::Perm([p[q[0] as usize], p[q[1] as usize], p[q[2] as usize]]),
            (Elem::Mod(a, n), Elem::Mod(b, _)) => Elem::Mod((a + b) % n, n),
            _ => unreachable!(),
        }
    }

    fn is_identity(self) -> bool {
        match self {
            Elem::Perm(p) => p == [0, 1, 2],
            Elem::Mod(a, _) => a == 0,
        }
    }
}

/// Element named in cycle notation (`e`, `(12)`, `(123)`) or as a power of a
/// cyclic generator (`1`, `g`, `g^2`).
fn parse_elem(name: &str, order: u8) -> Elem {
    if name == "e" || name.starts_with('(') {
        let mut p = [0u8, 1, 2];
        let digits: Vec<u8> = name.chars().filter_map(|c| c.to_digit(10)).map(|d| d as u8 - 1).collect();
        for i in 0..digits.len() {
            p[digits[i] as usize] = digits[(i + 1) % digits.len()];
        }
        Elem::Perm(p)
    } else if name == "1" {
        Elem::Mod(0, order)
    } else {
        let k = name.split('^').nth(1).map_or(1, |k| k.parse().unwrap());
        Elem::Mod(k % order, order)
    }
}

fn reduce(mut letters: Vec<(Side, Elem)>) -> Vec<(Side, Elem)> {
    let mut out: Vec<(Side, Elem)> = Vec::new();
    for (s, x) in letters.drain(..) {
        match out.last_mut() {
            Some((t, y)) if *t == s => {
                let z = y.mul(x);
                if z.is_identity() {
                    out.pop();
                } else {
                    *y = z;
                }
            }
            _ => out.push((s, x)),
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut total = 0usize;
    for (c, d, oc, od) in [(gallery::z2_ring(), gallery::z3_ring(), 2, 3), (gallery::s3_ring(), gallery::z2_ring(), 6, 2)] {
        let f = fp(c, d);
        let elem = |l: &Letter| (l.side, parse_elem(f.ring(l.side).name_of(l.label), if l.side == Side::C { oc } else { od }));
        let words: Vec<Word> = f.enumerate_words(6, WordFilter::All).collect();
        let enc: Vec<Vec<(Side, Elem)>> = words.iter().map(|w| w.letters().iter().map(elem).collect()).collect();
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate() {
                let got = f.fuse_words(a, b).map_err(|e| e.to_string())?;
                let expected = reduce(enc[i].iter().chain(&enc[j]).copied().collect());
                let mut it = got.iter();
                let ok = match (it.next(), it.next()) {
                    (Some((w, 1)), None) => w.letters().iter().map(elem).collect::<Vec<_>>() == expected,
                    _ => false,
                };
                ensure(ok, || format!("{} ⊗ {} = {} in {}", f.show(a), f.show(b), f.show_sum(&got), f.name()))?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} word products agree with reduced group words"))
}

// ---------------------------------------------------------------------------
// 3. FP dimensions are multiplicative

fn criterion_3() -> Outcome {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let tlj_dims = |n: usize| -> Vec<f64> { (0..n - 1).map(|k| ((k + 1) as f64 * PI / n as f64).sin() / (PI / n as f64).sin()).collect() };
    let cases = [
        (fp(gallery::fib_ring(), gallery::fib_ring()), [vec![1.0, phi], vec![1.0, phi]]),
        (fp(gallery::tlj_ring(5).unwrap(), gallery::tlj_ring_with_prefix(7, "g").unwrap()), [tlj_dims(5), tlj_dims(7)]),
    ];
    let mut worst = 0f64;
    let mut pairs = 0usize;
    for (f, oracle) in &cases {
        let dims = f.fp_dims(1e-12).map_err(|e| e.to_string())?;
        let odim = |w: &Word| -> f64 { w.letters().iter().map(|l| oracle[l.side.index()][l.label.index()]).product() };
        let words: Vec<Word> = f.enumerate_words(4, WordFilter::All).collect();
        for w in &words {
            ensure((dims.of(w) - odim(w)).abs() < 1e-9, || format!("dim {} = {} vs closed form {}", f.show(w), dims.of(w), odim(w)))?;
        }
        for a in &words {
            for b in &words {
                let s = f.fuse_words(a, b).map_err(|e| e.to_string())?;
                let gap = (dims.of(a) * dims.of(b) - dims.of_sum(&s)).abs();
                worst = worst.max(gap);
                ensure(gap < 1e-8, || format!("{} ⊗ {}: gap {gap:e}", f.show(a), f.show(b)))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, worst gap {worst:.1e}"))
}

// ---------------------------------------------------------------------------
// 4-6. lemma scans

fn block_rotations(w: &Word) -> BTreeSet<Word> {
    (0..w.len().max(1)).step_by(2).map(|k| w.rotate(k)).collect()
}

fn lemma_run(f: &FreeProduct, lemmas: &[Lemma], wmax: usize, vmax: usize) -> Result<u64, String> {
    let mut checks = 0;
    for &l in lemmas {
        let v = verify_lemma(f, l, wmax, vmax);
        ensure(v.status == Status::Pass && v.counterexamples.is_empty(), || v.to_text(false))?;
        checks += v.checks;
    }
    Ok(checks)
}

fn criterion_4() -> Outcome {
    let pairs = [
        fp(gallery::fib_ring(), gallery::fib_ring()),
        fp(gallery::z2_ring(), gallery::z3_ring()),
        fp(gallery::rep_s3_ring(), gallery::fib_ring()),
    ];
    let mut checks = 0;
    for f in &pairs {
        checks += lemma_run(f, &[Lemma::Equiv, Lemma::UnequalLength], 6, 8)?;
        // Block-rotation oracle for the support of the W x W blocks.
        let ws: Vec<Word> = f.enumerate_words(6, WordFilter::W).collect();
        let vs: Vec<Word> = f.enumerate_words(8, WordFilter::All).collect();
        for a in &ws {
            let rots = block_rotations(a);
            for b in &ws {
                let mut supported = false;
                for v in &vs {
                    if tube_dim(f, v, a, b).map_err(|e| e.to_string())? > 0 {
                        supported = true;
                        break;
                    }
                }
                ensure(supported == rots.contains(b), || format!("{}: support of ({}, {})", f.name(), f.show(a), f.show(b)))?;
            }
        }
    }
    Ok(format!("{checks} lemma checks on 3 free products, W-block supports match rotations"))
}

fn primitive_root(w: &Word) -> Word {
    let n = w.len();
    (2..=n).step_by(2).filter(|p| n.is_multiple_of(*p)).map(|p| w.slice(0..p)).find(|p| p.pow(n / p.len()) == *w).unwrap()
}

fn criterion_5() -> Outcome {
    let pairs = [
        fp(gallery::fib_ring(), gallery::fib_ring()),
        fp(gallery::z2_ring(), gallery::z3_ring()),
        fp(gallery::rep_s3_ring(), gallery::fib_ring()),
        fp(gallery::s3_ring(), gallery::z2_ring()),
    ];
    let mut checks = 0usize;
    for f in &pairs {
        lemma_run(f, &[Lemma::Wt1Centralizer], 6, 8)?;
        let vs: Vec<Word> = f.enumerate_words(8, WordFilter::All).collect();
        for w in f.enumerate_words(6, WordFilter::W) {
            let p = primitive_root(&w);
            let pbar = Word::from_letters(
                p.letters().iter().rev().map(|l| Letter::new(l.side, f.ring(l.side).dual_of(l.label))).collect(),
            );
            let mut allowed = BTreeSet::from([Word::empty()]);
            for k in 1..=8 / p.len() {
                allowed.insert(p.pow(k));
                allowed.insert(pbar.pow(k));
            }
            for v in &vs {
                let d = tube_dim(f, v, &w, &w).map_err(|e| e.to_string())?;
                let e = allowed.contains(v) as u64;
                ensure(d == e, || format!("{}: tube_dim({}, {w2}, {w2}) = {d}, expected {e}", f.name(), f.show(v), w2 = f.show(&w)))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} weight-w corner entries equal the powers of the primitive root and its dual"))
}

fn s_oracle(r: &FusionRing) -> BTreeSet<usize> {
    let n = dense(r);
    let d: Vec<usize> = r.all_labels().map(|l| r.dual_of(l).index()).collect();
    (0..n.len()).filter(|&a| (0..n.len()).any(|b| n[b][d[b]][a] > 0)).collect()
}

fn criterion_6() -> Outcome {
    let mut checks = 0;
    for f in [fp(gallery::rep_s3_ring(), gallery::fib_ring()), fp(gallery::fib_ring(), gallery::fib_ring())] {
        checks += lemma_run(&f, &[Lemma::AdjW0, Lemma::AdjCd, Lemma::AdjCc], 6, 8)?;
        let s = [s_oracle(f.c()), s_oracle(f.d())];
        for side in [Side::C, Side::D] {
            let lib: BTreeSet<usize> = f.ring(side).s_set().unwrap().iter().map(|l| l.index()).collect();
            ensure(lib == s[side.index()], || format!("{}: adjoint support set of {}", f.name(), side.tag()))?;
        }
        let vs: Vec<Word> = f.enumerate_words(8, WordFilter::All).collect();
        let supported = |b: &Word, c: &Word| vs.iter().any(|v| tube_dim(&f, v, b, c).unwrap() > 0);
        let letters = |side: Side| -> Vec<Word> { f.alphabet(side).iter().map(|&l| Word::letter(side, l)).collect() };
        for side in [Side::C, Side::D] {
            for x in letters(side) {
                let in_s = s[side.index()].contains(&x.letters()[0].label.index());
                ensure(supported(&Word::empty(), &x) == in_s, || format!("{}: empty-weight block at {}", f.name(), f.show(&x)))?;
            }
        }
        for c in letters(Side::C) {
            for d in letters(Side::D) {
                let expect = s[0].contains(&c.letters()[0].label.index()) && s[1].contains(&d.letters()[0].label.index());
                ensure(supported(&c, &d) == expect, || format!("{}: block ({}, {})", f.name(), f.show(&c), f.show(&d)))?;
            }
        }
    }
    Ok(format!("{checks} factorization checks with equality, adjoint supports match"))
}

// ---------------------------------------------------------------------------
// 7. necklace census of W classes

fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn necklaces(q: u64, k: u64) -> u64 {
    (1..=k).filter(|d| k.is_multiple_of(*d)).map(|d| totient(d) * q.pow((k / d) as u32)).sum::<u64>() / k
}

fn criterion_7() -> Outcome {
    let rings = gallery::gallery_rings();
    let mut pairs = 0;
    for c in &rings {
        for d in &rings {
            let f = fp(c.clone(), d.clone());
            let q = (f.alphabet(Side::C).len() * f.alphabet(Side::D).len()) as u64;
            for k in 1..=4 {
                let census = annular::wclass_census(&f, k);
                ensure(census.classes == necklaces(q, k as u64), || {
                    format!("{} k={k}: {} classes, necklace count {}", f.name(), census.classes, necklaces(q, k as u64))
                })?;
                ensure(census.matrix_total == q.pow(k as u32), || format!("{} k={k}: matrix total {}", f.name(), census.matrix_total))?;
            }
            pairs += 1;
        }
    }
    // The materialized report agrees with the census on a small pair.
    let f = fp(gallery::s3_ring(), gallery::z3_ring());
    let r = annular::decomposition_report(&f, 6, 0).map_err(|e| e.to_string())?;
    for k in 1..=3u64 {
        let n = r.wclasses.iter().filter(|e| e.class.canonical.len() as u64 == 2 * k).count() as u64;
        ensure(n == necklaces(10, k) && r.matrix_total(k as usize) as u64 == 10u64.pow(k as u32), || "report census".into())?;
    }
    Ok(format!("{pairs} ordered pairs, k <= 4"))
}

// ---------------------------------------------------------------------------
// 8. pointed tube algebra of S3

fn criterion_8() -> Outcome {
    let ring = gallery::s3_ring();
    let v = pointed::pointed_summand_check(&ring, 6).map_err(|e| e.to_string())?;
    ensure(v.passed(), || v.to_text(false))?;

    // Classes and centralizers from permutations.
    let names: Vec<&str> = ring.labels().iter().map(String::as_str).collect();
    let perm: Vec<Elem> = names.iter().map(|n| parse_elem(n, 6)).collect();
    let idx = |x: Elem| perm.iter().position(|&p| p == x).unwrap();
    let inv = |g: usize| (0..6).find(|&h| perm[g].mul(perm[h]).is_identity()).unwrap();
    let conj = |g: usize, b: usize| idx(perm[g].mul(perm[b]).mul(perm[inv(g)]));
    let mut seen = BTreeSet::new();
    let mut terms = Vec::new();
    for b in 0..6 {
        if seen.contains(&b) {
            continue;
        }
        let class: BTreeSet<usize> = (0..6).map(|g| conj(g, b)).collect();
        let cent = (0..6).filter(|&g| conj(g, b) == b).count();
        terms.push(class.len() * class.len() * cent);
        seen.extend(class);
    }
    terms.sort_unstable();
    ensure(terms == [6, 12, 18] && terms.iter().sum::<usize>() == 36, || format!("oracle terms {terms:?}"))?;
    ensure(v.witnesses[0] == "total dimension 36", || v.witnesses[0].clone())?;
    let mut lib_terms: Vec<usize> = v.witnesses[1]
        .split('=')
        .nth(1)
        .unwrap()
        .split('+')
        .map(|t| t.trim().split('·').map(|x| x.trim().parse::<usize>().unwrap()).product())
        .collect();
    lib_terms.sort_unstable();
    ensure(lib_terms == terms, || format!("library terms {lib_terms:?}"))?;

    // Basis products against the defining rule, then associativity.
    let ctx = std::sync::Arc::new(gallery::GroupTable::from_pointed_ring(&ring).unwrap());
    let basis: Vec<(usize, usize)> = (0..6).flat_map(|g| (0..6).map(move |b| (g, b))).collect();
    let el = |(g, b): (usize, usize)| pointed::PointedTubeElement::basis(&ctx, g, b);
    for &(g1, b1) in &basis {
        for &(g2, b2) in &basis {
            let got = el((g1, b1)).product(&el((g2, b2))).unwrap();
            let expected = if b1 == conj(g2, b2) { el((idx(perm[g1].mul(perm[g2])), b2)) } else { pointed::PointedTubeElement::zero(&ctx) };
            ensure(got.approx_eq(&expected, 1e-12), || format!("T({g1},{b1}) T({g2},{b2})"))?;
        }
    }
    let mut composable = 0;
    for &x in &basis {
        for &y in &basis {
            let xy = el(x).product(&el(y)).unwrap();
            for &z in &basis {
                let l = xy.product(&el(z)).unwrap();
                let r = el(x).product(&el(y).product(&el(z)).unwrap()).unwrap();
                ensure(l.approx_eq(&r, 1e-12), || format!("associativity at {x:?} {y:?} {z:?}"))?;
                composable += (!l.terms().is_empty()) as usize;
            }
        }
    }
    let pos = pointed::pointed_positivity_check(&ring, 200, 7).map_err(|e| e.to_string())?;
    ensure(pos.passed(), || pos.to_text(false))?;
    Ok(format!("dimension 36 = 6 + 12 + 18, 46656 triples ({composable} composable) associative, 200 seeded samples positive"))
}

// ---------------------------------------------------------------------------
// 9. free products of groups

fn criterion_9() -> Outcome {
    let mut out = Vec::new();
    for (g, h) in [(gallery::z2(), gallery::z2()), (gallery::z2(), gallery::z3()), (gallery::s3(), gallery::z2())] {
        let v = pointed_cross_check(&g, &h, 6, 8).map_err(|e| e.to_string())?;
        ensure(v.passed(), || v.to_text(false))?;
        let q = ((g.order() - 1) * (h.order() - 1)) as u64;
        let expected: u64 = (1..=3).map(|k| necklaces(q, k)).sum();
        let conj = gallery::classify_conjugacy(&g, &h, 6);
        let mixed = conj.of_kind(gallery::ClassKind::Mixed).count() as u64;
        ensure(mixed == expected, || format!("{}*{}: {mixed} mixed classes, necklace count {expected}", g.name(), h.name()))?;
        out.push(format!("{}*{} {mixed}", g.name(), h.name()));
    }
    Ok(format!("cross-checks pass; mixed classes {}", out.join(", ")))
}

// ---------------------------------------------------------------------------
// 10. Fuss-Catalan generation

fn criterion_10() -> Outcome {
    let generic = (gallery::tlj_generic(6).unwrap(), gallery::tlj_generic_with_prefix(6, "g").unwrap());
    let mut out = Vec::new();
    for (a, b) in [tlj_pair(5), generic] {
        let v = verify_morita_generation(&a, &b, 6).map_err(|e| e.to_string())?;
        let outcomes: Vec<bool> = v.outcomes.iter().map(|o| o.1).collect();
        ensure(outcomes == [true, true], || v.to_text(false))?;
        out.push(format!("{} {:?}", v.subject, outcomes));
    }
    Ok(out.join(", "))
}

// ---------------------------------------------------------------------------
// 11. non-crossing partitions

/// Set partitions of `0..n` as restricted growth strings, kept when no two
/// blocks interleave.
fn noncrossing_oracle(n: usize) -> usize {
    fn go(a: &mut Vec<usize>, n: usize, count: &mut usize) {
        if a.len() == n {
            let crossing = (0..n).any(|i| {
                (i + 1..n).any(|j| (j + 1..n).any(|k| (k + 1..n).any(|l| a[i] == a[k] && a[j] == a[l] && a[i] != a[j])))
            });
            *count += !crossing as usize;
            return;
        }
        let next = a.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            a.push(b);
            go(a, n, count);
            a.pop();
        }
    }
    let mut count = 0;
    go(&mut Vec::new(), n, &mut count);
    count
}

fn criterion_11() -> Outcome {
    for n in 0..=8usize {
        let catalan = (1..=n as u64).fold(1u64, |c, k| c * (n as u64 + k) / k) / (n as u64 + 1);
        let got = count_single_side(n);
        let oracle = noncrossing_oracle(n);
        ensure(got == oracle && oracle as u64 == catalan, || format!("n={n}: {got} vs oracle {oracle} vs Catalan {catalan}"))?;
    }
    let f = fp(gallery::fib_ring(), gallery::fib_ring());
    let t = [f.letter(Side::C, "tau").unwrap(), f.letter(Side::D, "tau").unwrap()];
    let mut sigma0: Vec<Vec<Letter>> = vec![Vec::new()];
    for len in 1..=4 {
        for start in 0..2 {
            sigma0.push((0..len).map(|i| t[(start + i) % 2]).collect());
        }
    }
    for a in &sigma0 {
        for b in &sigma0 {
            let got = spanning_bound(&f, a, b).map_err(|e| e.to_string())?;
            ensure(got == (a == b) as u64, || format!("spanning bound {got} for words of length {} and {}", a.len(), b.len()))?;
        }
    }
    Ok(format!("Catalan counts through n = 8, {} spanning bounds over Fib*Fib", sigma0.len().pow(2)))
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() -> ExitCode {
    let secs = |s: u64| Some(Duration::from_secs(s));
    let criteria: [Criterion; 11] = [
        ("fusion axioms on the gallery", criterion_1, secs(1)),
        ("free fusion equals group-word multiplication", criterion_2, secs(10)),
        ("FP dimension multiplicativity", criterion_3, secs(30)),
        ("equivalence and unequal-length lemmas", criterion_4, secs(120)),
        ("weight-w centralizer is the group algebra of Z", criterion_5, None),
        ("adjoint lemmas", criterion_6, None),
        ("W class bookkeeping against necklace counts", criterion_7, None),
        ("pointed tube algebra of S3", criterion_8, secs(60)),
        ("free products of groups", criterion_9, None),
        ("Fuss-Catalan generation equalities", criterion_10, None),
        ("non-crossing partition combinatorics", criterion_11, None),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let dt = start.elapsed();
        let res = match (res, budget) {
            (Ok(_), Some(b)) if dt > *b => Err(format!("took {dt:.2?}, budget {b:?}")),
            (r, _) => r,
        };
        match res {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{dt:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{dt:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
