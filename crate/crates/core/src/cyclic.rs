//! Cyclic classes of `W` under rotation by whole C-D blocks.

use crate::word::Word;

/// Equivalence class of a word of `W` under block rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicClass {
    /// Least member in word order.
    pub canonical: Word,
    /// Distinct members, sorted.
    pub members: Vec<Word>,
    /// Primitive root of `canonical`.
    pub period: Word,
    pub exponent: usize,
}

/// Number of blocks of the shortest block-prefix whose power is `letters`.
/// `letters` must have even length.
pub(crate) fn primitive_blocks<T: PartialEq>(letters: &[T]) -> usize {
    let blocks = letters.len() / 2;
    (1..=blocks)
        .find(|p| blocks.is_multiple_of(*p) && (2 * p..letters.len()).all(|i| letters[i] == letters[i - 2 * p]))
        .unwrap_or(0)
}

/// Builds the class of `w`; the caller guarantees `w` lies in `W`.
pub(crate) fn class_of(w: &Word) -> CyclicClass {
    let p = primitive_blocks(w.letters());
    let mut members: Vec<Word> = (0..p).map(|i| w.rotate(2 * i)).collect();
    members.sort();
    let canonical = members[0].clone();
    let period = canonical.slice(0..2 * p);
    CyclicClass { exponent: w.len() / (2 * p), canonical, members, period }
}

/// Canonical (least) block rotation of `letters`, as an index offset.
pub(crate) fn least_block_rotation<T: Ord>(letters: &[T]) -> usize {
    let n = letters.len();
    let mut best = 0;
    for s in (2..n).step_by(2) {
        let cand = (0..n).map(|i| &letters[(s + i) % n]);
        let cur = (0..n).map(|i| &letters[(best + i) % n]);
        if cand.lt(cur) {
            best = s;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::Label;
    use crate::word::{Letter, Side};

    fn w(spec: &[(Side, u16)]) -> Word {
        Word::from_letters(spec.iter().map(|&(s, l)| Letter::new(s, Label(l))).collect())
    }

    #[test]
    fn periodic_word_has_one_member() {
        let c = class_of(&w(&[(Side::C, 1), (Side::D, 1), (Side::C, 1), (Side::D, 1)]));
        assert_eq!(c.exponent, 2);
        assert_eq!(c.members.len(), 1);
        assert_eq!(c.period, w(&[(Side::C, 1), (Side::D, 1)]));
    }

    #[test]
    fn aperiodic_word_has_two_members() {
        let x = w(&[(Side::C, 2), (Side::D, 1), (Side::C, 1), (Side::D, 1)]);
        let c = class_of(&x);
        assert_eq!(c.exponent, 1);
        assert_eq!(c.members.len(), 2);
        assert_eq!(c.canonical, w(&[(Side::C, 1), (Side::D, 1), (Side::C, 2), (Side::D, 1)]));
        assert_eq!(c.period, c.canonical);
        assert_eq!(least_block_rotation(x.letters()), 2);
    }
}
