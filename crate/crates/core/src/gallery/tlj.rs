use crate::error::{Error, Result};
use crate::fusion::FusionRing;

fn labels(prefix: &str, count: usize) -> Vec<String> {
    (0..count).map(|i| format!("{prefix}{i}")).collect()
}

/// Temperley-Lieb-Jones ring at `δ = 2cos(π/n)`: simples `f0 .. f_{n-2}` with
/// truncated SU(2) fusion.
pub fn tlj_ring(n: usize) -> Result<FusionRing> {
    tlj_ring_with_prefix(n, "f")
}

pub fn tlj_ring_with_prefix(n: usize, prefix: &str) -> Result<FusionRing> {
    if n < 3 {
        return Err(Error::NotTljShaped(format!("tlj:{n} needs n >= 3")));
    }
    let top = n - 2;
    FusionRing::from_rule(&format!("tlj:{n}"), labels(prefix, top + 1), 0, (0..=top).collect(), |i, j| {
        let hi = (i + j).min(2 * top - i - j);
        Some((i.abs_diff(j)..=hi).step_by(2).map(|k| (k, 1)).collect())
    })
}

/// Untruncated TLJ fusion on `f0 .. f_L`; products reaching past `f_L`
/// raise an overflow error instead of being clipped.
pub fn tlj_generic(level: usize) -> Result<FusionRing> {
    tlj_generic_with_prefix(level, "f")
}

pub fn tlj_generic_with_prefix(level: usize, prefix: &str) -> Result<FusionRing> {
    FusionRing::from_rule(&format!("tlj-generic:{level}"), labels(prefix, level + 1), 0, (0..=level).collect(), |i, j| {
        (i + j <= level).then(|| (i.abs_diff(j)..=i + j).step_by(2).map(|k| (k, 1)).collect())
    })
}

/// Sub-ring on the even-index simples of a TLJ-shaped ring.
pub fn even_part(ring: &FusionRing) -> Result<FusionRing> {
    let prefix = ring.name_of(ring.unit()).trim_end_matches('0').to_string();
    let shaped = ring.unit().index() == 0
        && ring.labels().iter().enumerate().all(|(i, l)| *l == format!("{prefix}{i}"))
        && ring.all_labels().all(|l| ring.dual_of(l) == l);
    if !shaped {
        return Err(Error::NotTljShaped(ring.name().to_string()));
    }
    let evens: Vec<usize> = (0..ring.rank()).step_by(2).collect();
    let labels: Vec<String> = evens.iter().map(|&i| ring.labels()[i].clone()).collect();
    let all: Vec<_> = ring.all_labels().collect();
    let mut odd_seen = false;
    let even = FusionRing::from_rule(&format!("even:{}", ring.name()), labels, 0, (0..evens.len()).collect(), |a, b| {
        let s = ring.fuse(all[evens[a]], all[evens[b]]).ok()?;
        Some(
            s.iter()
                .filter_map(|(c, m)| {
                    if c.index() % 2 == 1 {
                        odd_seen = true;
                    }
                    (c.index() % 2 == 0).then_some((c.index() / 2, *m))
                })
                .collect(),
        )
    })?;
    if odd_seen {
        return Err(Error::NotClosed(ring.name().to_string()));
    }
    Ok(even)
}
