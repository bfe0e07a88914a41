use std::cmp::Ordering;
use std::ops::Neg;

use serde::Serialize;

use crate::fusion::Label;

/// Which factor of a free product a letter comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    C,
    D,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::C => Side::D,
            Side::D => Side::C,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Side::C => "C",
            Side::D => "D",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl Neg for Side {
    type Output = Side;

    fn neg(self) -> Side {
        self.other()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub side: Side,
    pub label: Label,
}

impl Letter {
    pub fn new(side: Side, label: Label) -> Self {
        Self { side, label }
    }
}

/// Shape of a word by the sides of its first and last letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WordType {
    Empty,
    CC,
    CD,
    DC,
    DD,
}

/// A sequence of letters. Words produced by [`crate::FreeProduct`] are
/// alternating and reduced; the empty word is the tensor unit.
///
/// Ordered by length, then lexicographically by (side, label).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(side: Side, label: Label) -> Self {
        Word(vec![Letter::new(side, label)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn word_type(&self) -> WordType {
        match (self.first(), self.last()) {
            (None, _) | (_, None) => WordType::Empty,
            (Some(a), Some(b)) => match (a.side, b.side) {
                (Side::C, Side::C) => WordType::CC,
                (Side::C, Side::D) => WordType::CD,
                (Side::D, Side::C) => WordType::DC,
                (Side::D, Side::D) => WordType::DD,
            },
        }
    }

    /// Even positive length and first letter on the C side.
    pub fn is_in_w(&self) -> bool {
        self.word_type() == WordType::CD
    }

    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).all(|p| p[0].side != p[1].side)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let n = v.len();
            v.rotate_left(k % n);
        }
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which words [`crate::FreeProduct::enumerate_words`] yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WordFilter {
    /// Every reduced alternating word.
    All,
    /// The weight set: the empty word, single letters, and `W`.
    Lambda,
    /// Even positive length starting on the C side.
    W,
    IC,
    ID,
}

impl WordFilter {
    pub(crate) fn admits(self, len: usize, start: Side) -> bool {
        match self {
            WordFilter::All => true,
            WordFilter::Lambda => len <= 1 || (len.is_multiple_of(2) && start == Side::C),
            WordFilter::W => len > 0 && len.is_multiple_of(2) && start == Side::C,
            WordFilter::IC => len == 1 && start == Side::C,
            WordFilter::ID => len == 1 && start == Side::D,
        }
    }
}
