//! Generated fusion subsets of a free product, and the generation equalities
//! behind the Morita equivalence of Fuss-Catalan and free-product categories.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::free_product::FreeProduct;
use crate::fusion::FusionRing;
use crate::report::{Verdict, BOUNDED_NOTE};
use crate::word::{Letter, Side, Word};

/// Simples generated inside a length bound.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Closure {
    pub words: BTreeSet<Word>,
    /// Some product had a constituent longer than the bound.
    pub truncated: bool,
    /// Some product exceeded the level of a truncated factor and was skipped.
    pub overflow: bool,
}

/// Closure of `generators` and their duals under fusion, keeping only words
/// of length at most `len_bound`.
pub fn generated_simples(fp: &FreeProduct, generators: &[Word], len_bound: usize) -> Result<Closure> {
    let mut out = Closure::default();
    let mut frontier = Vec::new();
    for g in generators {
        fp.check_word(g)?;
        for w in [g.clone(), fp.word_dual(g)] {
            if w.len() > len_bound {
                out.truncated = true;
            } else if out.words.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    while !frontier.is_empty() {
        let known: Vec<Word> = out.words.iter().cloned().collect();
        let found: Vec<(BTreeSet<Word>, bool, bool)> = frontier
            .par_iter()
            .map(|x| {
                let (mut words, mut truncated, mut overflow) = (BTreeSet::new(), false, false);
                for y in &known {
                    for (l, r) in [(x, y), (y, x)] {
                        match fp.fuse_words(l, r) {
                            Ok(s) => {
                                for w in s.support() {
                                    if w.len() > len_bound {
                                        truncated = true;
                                    } else {
                                        words.insert(w.clone());
                                    }
                                }
                            }
                            Err(e) if e.is_overflow() => overflow = true,
                            Err(e) => return Err(e),
                        }
                    }
                }
                Ok((words, truncated, overflow))
            })
            .collect::<Result<_>>()?;
        frontier = Vec::new();
        for (words, truncated, overflow) in found {
            out.truncated |= truncated;
            out.overflow |= overflow;
            for w in words {
                if out.words.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
    }
    Ok(out)
}

fn support(fp: &FreeProduct, letters: &[Letter]) -> Result<Vec<Word>> {
    Ok(fp.fuse_letters(letters)?.support().cloned().collect())
}

/// With `a` the first non-unit simple of `C` and `b` that of `D`, and
/// `x = a b b`, compares the simples generated by `x x̄` with those of
/// `a b b̄ ā`, and those of `x̄ x` with those of `a ā` and `b b̄`.
pub fn verify_morita_generation(alpha: &FusionRing, beta: &FusionRing, len_bound: usize) -> Result<Verdict> {
    let start = Instant::now();
    let fp = &FreeProduct::new(alpha.clone(), beta.clone())?;
    let mut verdict = Verdict::new("MORITA_GENERATION", &fp.name(), &[("len_bound", len_bound)]);
    let pick = |side: Side| {
        let ring = fp.ring(side);
        ring.all_labels()
            .nth(1)
            .map(|l| (Letter::new(side, l), Letter::new(side, ring.dual_of(l))))
            .ok_or_else(|| Error::NotTljShaped(ring.name().to_string()))
    };
    let (a, ab) = pick(Side::C)?;
    let (b, bb) = pick(Side::D)?;

    let run = |lhs: &[&[Letter]], rhs: &[&[Letter]]| -> Result<(Closure, Closure)> {
        let gens = |parts: &[&[Letter]]| -> Result<Vec<Word>> {
            let mut out = BTreeSet::new();
            for p in parts {
                out.extend(support(fp, p)?);
            }
            Ok(out.into_iter().collect())
        };
        Ok((generated_simples(fp, &gens(lhs)?, len_bound)?, generated_simples(fp, &gens(rhs)?, len_bound)?))
    };
    let first = run(&[&[a, b, b, bb, bb, ab]], &[&[a, b, bb, ab]]);
    let second = run(&[&[bb, bb, ab, a, b, b]], &[&[a, ab], &[b, bb]]);
    let (first, second) = match (first, second) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) if e.is_overflow() => return Ok(verdict.aborted(&e)),
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };

    verdict.checks = 2;
    for (name, (l, r)) in [("<x x*> = <a b b* a*>", &first), ("<x* x> = <a a*, b b*>", &second)] {
        verdict.outcome(name, l.words == r.words);
        verdict.witnesses.push(format!("{name}: {} vs {} simples", l.words.len(), r.words.len()));
        if l.words != r.words {
            verdict.failures += 1;
        }
    }
    let all = [&first.0, &first.1, &second.0, &second.1];
    if all.iter().any(|c| c.truncated) {
        verdict.note("closure truncated at the length bound");
    }
    if all.iter().any(|c| c.overflow) {
        verdict.note("some products exceeded the level of a truncated factor and were skipped");
    }
    verdict.note(BOUNDED_NOTE);
    verdict.elapsed = Some(start.elapsed());
    Ok(verdict)
}
