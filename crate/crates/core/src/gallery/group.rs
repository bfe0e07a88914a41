use std::collections::HashMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fusion::FusionRing;

#[derive(Deserialize)]
struct GroupSpec {
    elements: Vec<String>,
    identity: String,
    mult: Vec<(String, String, String)>,
}

/// Finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    elements: Vec<String>,
    identity: usize,
    mult: Vec<usize>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Builds a table from `mul` on element indices and checks the group axioms
    /// exhaustively.
    pub fn from_fn(name: &str, elements: Vec<String>, identity: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidGroup("no elements".into()));
        }
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = mul(a, b);
                if c >= n {
                    return Err(Error::InvalidGroup(format!("{} * {} is out of range", elements[a], elements[b])));
                }
                mult.push(c);
            }
        }
        Self::from_table(name, elements, identity, mult)
    }

    fn from_table(name: &str, elements: Vec<String>, identity: usize, mult: Vec<usize>) -> Result<Self> {
        let n = elements.len();
        let at = |a: usize, b: usize| mult[a * n + b];
        for a in 0..n {
            if at(identity, a) != a || at(a, identity) != a {
                return Err(Error::InvalidGroup(format!("{} is not an identity for {}", elements[identity], elements[a])));
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", elements[a])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        Ok(Self { name: name.to_string(), elements, identity, mult, inverse })
    }

    /// Parses `{"elements": [...], "identity": e, "mult": [[a, b, ab], ...]}`.
    /// Every ordered pair must appear exactly once.
    pub fn from_json(name: &str, text: &str) -> Result<Self> {
        let spec: GroupSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let index: HashMap<&str, usize> = spec.elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        if index.len() != spec.elements.len() {
            return Err(Error::InvalidGroup("duplicate element".into()));
        }
        let look = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownLabel(s.to_string()));
        let n = spec.elements.len();
        let mut mult = vec![usize::MAX; n * n];
        for (a, b, c) in &spec.mult {
            let slot = look(a)? * n + look(b)?;
            if mult[slot] != usize::MAX {
                return Err(Error::InvalidGroup(format!("duplicate product {a} * {b}")));
            }
            mult[slot] = look(c)?;
        }
        if let Some(slot) = mult.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidGroup(format!(
                "product {} * {} missing",
                spec.elements[slot / n],
                spec.elements[slot % n]
            )));
        }
        let identity = look(&spec.identity)?;
        Self::from_table(name, spec.elements, identity, mult)
    }

    /// Recovers the group from a pointed fusion ring.
    pub fn from_pointed_ring(ring: &FusionRing) -> Result<Self> {
        if !ring.is_pointed() {
            return Err(Error::NotPointed(ring.name().to_string()));
        }
        let labels: Vec<_> = ring.all_labels().collect();
        Self::from_fn(ring.name(), ring.labels().to_vec(), ring.unit().index(), |a, b| {
            ring.fuse(labels[a], labels[b]).expect("pointed ring has no overflow").support().next().unwrap().index()
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name_of(&self, g: usize) -> &str {
        &self.elements[g]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.elements.iter().position(|e| e == name).ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g b g⁻¹`.
    pub fn conj(&self, g: usize, b: usize) -> usize {
        self.mul(self.mul(g, b), self.inv(g))
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.mul(x, g) == self.mul(g, x)).collect()
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for b in 0..self.order() {
            if seen[b] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order()).map(|g| self.conj(g, b)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            out.push(class);
        }
        out
    }
}

/// Pointed fusion ring of a group: `N^c_{ab} = δ_{c, ab}`, dual = inverse.
pub fn group_ring(g: &GroupTable) -> FusionRing {
    let n = g.order();
    FusionRing::from_rule(g.name(), g.elements.clone(), g.identity, (0..n).map(|a| g.inv(a)).collect(), |a, b| {
        Some(vec![(g.mul(a, b), 1)])
    })
    .expect("group tables give well-formed rings")
}

/// `Z_n` with elements `1, x, x^2, ...`.
pub fn cyclic(n: usize, generator: &str) -> GroupTable {
    let elements = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => generator.to_string(),
            _ => format!("{generator}^{k}"),
        })
        .collect();
    GroupTable::from_fn(&format!("z{n}"), elements, 0, |a, b| (a + b) % n).expect("cyclic group")
}

pub fn z2() -> GroupTable {
    cyclic(2, "g")
}

pub fn z3() -> GroupTable {
    cyclic(3, "h")
}

pub fn z4() -> GroupTable {
    cyclic(4, "g")
}

/// Symmetric group on three points; products compose right to left.
pub fn s3() -> GroupTable {
    const PERMS: [(&str, [usize; 3]); 6] = [
        ("e", [0, 1, 2]),
        ("(12)", [1, 0, 2]),
        ("(13)", [2, 1, 0]),
        ("(23)", [0, 2, 1]),
        ("(123)", [1, 2, 0]),
        ("(132)", [2, 0, 1]),
    ];
    let elements = PERMS.iter().map(|p| p.0.to_string()).collect();
    GroupTable::from_fn("s3", elements, 0, |a, b| {
        let (p, q) = (PERMS[a].1, PERMS[b].1);
        let comp = [p[q[0]], p[q[1]], p[q[2]]];
        PERMS.iter().position(|x| x.1 == comp).unwrap()
    })
    .expect("S3")
}

/// Dihedral group of order 8 as `r^a s^i` with `s r s = r⁻¹`.
pub fn d4() -> GroupTable {
    let names = ["e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"];
    let decode = |x: usize| (x % 4, x / 4);
    GroupTable::from_fn("d4", names.iter().map(|s| s.to_string()).collect(), 0, |x, y| {
        let ((a, i), (b, j)) = (decode(x), decode(y));
        let rot = if i == 0 { (a + b) % 4 } else { (a + 4 - b) % 4 };
        rot + 4 * ((i + j) % 2)
    })
    .expect("D4")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders_and_classes() {
        assert_eq!(z2().order(), 2);
        assert_eq!(s3().conjugacy_classes().len(), 3);
        assert_eq!(d4().conjugacy_classes().len(), 5);
        let s = s3();
        let t = s.index("(12)").unwrap();
        assert_eq!(s.centralizer(t).len(), 2);
        let g = s.index("(12)").unwrap();
        let b = s.index("(132)").unwrap();
        assert_eq!(s.name_of(s.conj(g, b)), "(123)");
    }

    #[test]
    fn group_rings_are_valid_and_reproduce_tables() {
        for g in [z2(), z3(), z4(), s3(), d4()] {
            let ring = group_ring(&g);
            assert!(ring.validate().is_valid(), "{}", g.name());
            assert!(ring.is_pointed());
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let s = ring.fuse_named(g.name_of(a), g.name_of(b)).unwrap();
                    assert_eq!(s, ring.sum_from_names(&[(g.name_of(g.mul(a, b)), 1)]).unwrap());
                }
            }
            assert_eq!(GroupTable::from_pointed_ring(&ring).unwrap(), g);
        }
    }

    #[test]
    fn rejects_non_groups() {
        let bad = r#"{"elements":["1","a"],"identity":"1","mult":[["1","1","1"],["1","a","a"],["a","1","a"],["a","a","a"]]}"#;
        assert!(matches!(GroupTable::from_json("bad", bad), Err(Error::InvalidGroup(_))));
        let missing = r#"{"elements":["1","a"],"identity":"1","mult":[["1","1","1"]]}"#;
        assert!(matches!(GroupTable::from_json("bad", missing), Err(Error::InvalidGroup(_))));
        let ok = r#"{"elements":["1","a"],"identity":"1","mult":[["1","1","1"],["1","a","a"],["a","1","a"],["a","a","1"]]}"#;
        assert_eq!(GroupTable::from_json("z2", ok).unwrap().order(), 2);
    }
}
