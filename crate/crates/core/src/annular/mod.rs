//! Annular algebra dimensions over `C * D`, the lemma verifiers, the
//! quotient decomposition report, and exact tube algebras of finite groups.

pub mod decomposition;
pub mod lemmas;
pub mod pointed;

pub use decomposition::{decomposition_report, wclass_census, DecompositionReport, PlusPart, WClassCensus, WClassEntry};
pub use lemmas::{verify_lemma, Lemma};
pub use pointed::{pointed_positivity_check, pointed_summand_check, PointedTubeElement};

use crate::error::Result;
use crate::free_product::FreeProduct;
use crate::word::{Word, WordFilter};

/// One supported piece `C(v ⊗ b, c ⊗ v)` of the annular algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TubeBlockEntry {
    pub v: Word,
    pub b: Word,
    pub c: Word,
    pub dim: u64,
}

/// `dim C(v ⊗ b, c ⊗ v)`.
pub fn tube_dim(fp: &FreeProduct, v: &Word, b: &Word, c: &Word) -> Result<u64> {
    let left = fp.fuse_words(v, b)?;
    let right = fp.fuse_words(c, v)?;
    Ok(left.hom_dim(&right))
}

/// Every `v` with `|v| <= vmax` and nonzero `tube_dim(v, b, c)`, in
/// enumeration order.
pub fn block_support(fp: &FreeProduct, b: &Word, c: &Word, vmax: usize) -> Result<Vec<TubeBlockEntry>> {
    let mut out = Vec::new();
    for v in fp.enumerate_words(vmax, WordFilter::All) {
        let dim = tube_dim(fp, &v, b, c)?;
        if dim > 0 {
            out.push(TubeBlockEntry { v, b: b.clone(), c: c.clone(), dim });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use proptest::prelude::*;

    fn fp(c: crate::FusionRing, d: crate::FusionRing) -> FreeProduct {
        FreeProduct::new(c, d).unwrap()
    }

    #[test]
    fn tube_dim_examples() {
        let f = fp(gallery::fib_ring(), gallery::fib_ring());
        let e = Word::empty();
        assert_eq!(tube_dim(&f, &e, &e, &e).unwrap(), 1);
        let t = fp(gallery::tlj_ring(5).unwrap(), gallery::tlj_ring_with_prefix(5, "g").unwrap());
        let w = t.word("f1 g1").unwrap();
        assert_eq!(tube_dim(&t, &w, &w, &w).unwrap(), 1);
        let z = fp(gallery::z2_ring(), gallery::z3_ring());
        assert_eq!(tube_dim(&z, &z.word("C:g").unwrap(), &z.word("D:h").unwrap(), &z.word("D:h").unwrap()).unwrap(), 0);
    }

    #[test]
    fn block_support_examples() {
        let z = fp(gallery::z2_ring(), gallery::z3_ring());
        let e = Word::empty();
        let all: Vec<Word> = z.enumerate_words(2, WordFilter::All).collect();
        let support = block_support(&z, &e, &e, 2).unwrap();
        assert_eq!(support.iter().map(|x| x.v.clone()).collect::<Vec<_>>(), all);
        assert!(support.iter().all(|x| x.dim == 1));

        let b = z.word("g h").unwrap();
        let c = z.word("h^2 g").unwrap();
        assert!(block_support(&z, &b, &c, 6).unwrap().is_empty());

        let t = fp(gallery::tlj_ring(12).unwrap(), gallery::tlj_ring_with_prefix(12, "g").unwrap());
        let w = t.word("f1 g1").unwrap();
        let got: Vec<String> = block_support(&t, &w, &w, 4).unwrap().iter().map(|x| t.show(&x.v)).collect();
        assert_eq!(got, ["∅", "C:f1 D:g1", "D:g1 C:f1", "C:f1 D:g1 C:f1 D:g1", "D:g1 C:f1 D:g1 C:f1"]);
        assert!(block_support(&t, &w, &w, 4).unwrap().iter().all(|x| x.dim == 1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn sharp_symmetry(pair in 0usize..3, i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
            let (c, d) = [
                (gallery::fib_ring(), gallery::fib_ring()),
                (gallery::rep_s3_ring(), gallery::fib_ring()),
                (gallery::s3_ring(), gallery::z2_ring()),
            ][pair].clone();
            let f = fp(c, d);
            let words: Vec<Word> = f.enumerate_words(4, WordFilter::All).collect();
            let (v, b, c) = (&words[i % words.len()], &words[j % words.len()], &words[k % words.len()]);
            prop_assert_eq!(tube_dim(&f, v, b, c).unwrap(), tube_dim(&f, &f.word_dual(v), c, b).unwrap());
        }
    }
}
