use std::collections::btree_map;
use std::collections::BTreeMap;
use std::ops::Add;

/// Finitely supported multiset of simples with nonnegative multiplicities.
///
/// Zero multiplicities are never stored, so two sums are equal exactly when
/// they have the same support and multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSum<K: Ord> {
    terms: BTreeMap<K, u64>,
}

impl<K: Ord> Default for SimpleSum<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SimpleSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K) -> Self {
        let mut s = Self::zero();
        s.add_term(k, 1);
        s
    }

    pub fn add_term(&mut self, k: K, n: u64) {
        if n == 0 {
            return;
        }
        *self.terms.entry(k).or_insert(0) += n;
    }

    pub fn add_sum(&mut self, other: &Self, scale: u64) {
        for (k, n) in &other.terms {
            self.add_term(k.clone(), n * scale);
        }
    }

    pub fn get(&self, k: &K) -> u64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn contains(&self, k: &K) -> bool {
        self.terms.contains_key(k)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct simples in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Total multiplicity, i.e. the number of simple summands with repetition.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, u64> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Semisimple pairing: `dim Hom(x, y) = sum_c x(c) y(c)`.
    pub fn hom_dim(&self, other: &Self) -> u64 {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.terms.iter().map(|(k, n)| n * large.get(k)).sum()
    }

    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> SimpleSum<L> {
        let mut out = SimpleSum::zero();
        for (k, n) in &self.terms {
            out.add_term(f(k), *n);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, u64)> for SimpleSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (k, n) in iter {
            s.add_term(k, n);
        }
        s
    }
}

impl<'a, K: Ord> IntoIterator for &'a SimpleSum<K> {
    type Item = (&'a K, &'a u64);
    type IntoIter = btree_map::Iter<'a, K, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &SimpleSum<K> {
    type Output = SimpleSum<K>;

    fn add(self, rhs: &SimpleSum<K>) -> SimpleSum<K> {
        let mut out = self.clone();
        out.add_sum(rhs, 1);
        out
    }
}

/// Dimension of the hom space between two sums of simples.
pub fn hom_dim<K: Ord + Clone>(x: &SimpleSum<K>, y: &SimpleSum<K>) -> u64 {
    x.hom_dim(y)
}
