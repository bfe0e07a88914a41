//! Concrete rings and groups, and the example checks built on them.

pub mod conjugacy;
pub mod group;
pub mod morita;
pub mod tlj;

pub use conjugacy::{classify_conjugacy, pointed_cross_check, Centralizer, ClassKind, ConjugacyClass, ConjugacyReport, FreeGroupWord};
pub use group::{cyclic, d4, group_ring, s3, z2, z3, z4, GroupTable};
pub use morita::{generated_simples, verify_morita_generation, Closure};
pub use tlj::{even_part, tlj_generic, tlj_generic_with_prefix, tlj_ring, tlj_ring_with_prefix};

use crate::error::{Error, Result};
use crate::fusion::FusionRing;

pub fn z2_ring() -> FusionRing {
    group_ring(&z2())
}

pub fn z3_ring() -> FusionRing {
    group_ring(&z3())
}

pub fn z4_ring() -> FusionRing {
    group_ring(&z4())
}

pub fn s3_ring() -> FusionRing {
    group_ring(&s3())
}

pub fn d4_ring() -> FusionRing {
    group_ring(&d4())
}

/// Fibonacci ring: `tau ⊗ tau = 1 ⊕ tau`.
pub fn fib_ring() -> FusionRing {
    FusionRing::from_rule("fib", vec!["1".into(), "tau".into()], 0, vec![0, 1], |a, b| {
        Some(match (a, b) {
            (0, x) | (x, 0) => vec![(x, 1)],
            _ => vec![(0, 1), (1, 1)],
        })
    })
    .expect("fibonacci ring")
}

/// Representation ring of S3: trivial `1`, sign `s`, standard `t`.
pub fn rep_s3_ring() -> FusionRing {
    FusionRing::from_rule("rep-s3", vec!["1".into(), "s".into(), "t".into()], 0, vec![0, 1, 2], |a, b| {
        Some(match (a, b) {
            (0, x) | (x, 0) => vec![(x, 1)],
            (1, 1) => vec![(0, 1)],
            (1, 2) | (2, 1) => vec![(2, 1)],
            _ => vec![(0, 1), (1, 1), (2, 1)],
        })
    })
    .expect("rep(S3) ring")
}

/// The one-object ring.
pub fn trivial_ring() -> FusionRing {
    FusionRing::from_rule("trivial", vec!["1".into()], 0, vec![0], |_, _| Some(vec![(0, 1)])).expect("trivial ring")
}

/// Every named ring used by the acceptance checks.
pub fn gallery_rings() -> Vec<FusionRing> {
    let mut out = vec![z2_ring(), z3_ring(), z4_ring(), s3_ring(), d4_ring(), fib_ring(), rep_s3_ring(), trivial_ring()];
    for n in 3..=8 {
        let r = tlj_ring(n).expect("n >= 3");
        out.push(even_part(&r).expect("tlj even part"));
        out.push(r);
    }
    out
}

pub const BUILTIN_HELP: &str = "z2, z3, z4, s3, d4, fib, rep-s3, trivial, tlj:N, tlj-generic:L, even:<builtin>";

/// Resolves a built-in ring name such as `fib`, `tlj:5` or `even:tlj:6`.
pub fn builtin_ring(name: &str) -> Result<FusionRing> {
    let unknown = || Error::UnknownLabel(format!("no built-in ring `{name}` (known: {BUILTIN_HELP})"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let ring = match name {
        "z2" => z2_ring(),
        "z3" => z3_ring(),
        "z4" => z4_ring(),
        "s3" => s3_ring(),
        "d4" => d4_ring(),
        "fib" => fib_ring(),
        "rep-s3" | "rep_s3" => rep_s3_ring(),
        "trivial" => trivial_ring(),
        _ => {
            if let Some(rest) = name.strip_prefix("even:") {
                return even_part(&builtin_ring(rest)?);
            } else if let Some(n) = name.strip_prefix("tlj-generic:") {
                return tlj_generic(num(n)?);
            } else if let Some(n) = name.strip_prefix("tlj:") {
                return tlj_ring(num(n)?);
            }
            return Err(unknown());
        }
    };
    Ok(ring)
}

pub fn builtin_group(name: &str) -> Result<GroupTable> {
    match name {
        "z2" => Ok(z2()),
        "z3" => Ok(z3()),
        "z4" => Ok(z4()),
        "s3" => Ok(s3()),
        "d4" => Ok(d4()),
        "trivial" => Ok(cyclic(1, "g")),
        _ => Err(Error::UnknownLabel(format!("no built-in group `{name}` (known: z2, z3, z4, s3, d4, trivial)"))),
    }
}
