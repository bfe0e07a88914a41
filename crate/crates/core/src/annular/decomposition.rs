use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{tube_dim, TubeBlockEntry};
use crate::cyclic::{self, CyclicClass};
use crate::error::Result;
use crate::free_product::FreeProduct;
use crate::fusion::Label;
use crate::report::{BOUNDED_NOTE, SCHEMA_VERSION};
use crate::word::{Side, Word, WordFilter};

/// Letter-weight blocks of one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlusPart {
    pub side: Side,
    /// Supported entries with `v` empty or a single letter of this side:
    /// the part that survives the quotient by the empty-weight ideal.
    pub one_sided: Vec<TubeBlockEntry>,
    /// Supported entries with `|v| >= 2`; these factor through the empty
    /// weight and vanish in the quotient.
    pub through_unit: Vec<TubeBlockEntry>,
    /// Non-unit members of the adjoint support set.
    pub s_set: Vec<Label>,
    /// Every `through_unit` entry has both weights in `s_set`.
    pub through_unit_in_s: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WClassEntry {
    pub class: CyclicClass,
    /// Number of class members; the matrix units are indexed by member pairs.
    pub matrix_size: usize,
    /// Generator of the group-algebra factor.
    pub period: Word,
}

/// Support of the annular algebra over the weight set, split into the
/// empty-weight fusion algebra, the two one-sided letter parts, and the
/// cyclic classes of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub subject: String,
    pub wmax: usize,
    pub vmax: usize,
    pub weight0: Vec<TubeBlockEntry>,
    pub plus_c: PlusPart,
    pub plus_d: PlusPart,
    pub wclasses: Vec<WClassEntry>,
    pub notes: Vec<String>,
}

pub fn decomposition_report(fp: &FreeProduct, wmax: usize, vmax: usize) -> Result<DecompositionReport> {
    let vs: Vec<Word> = fp.enumerate_words(vmax, WordFilter::All).collect();
    let empty = Word::empty();
    let weight0 = vs
        .par_iter()
        .map(|v| Ok(TubeBlockEntry { v: v.clone(), b: empty.clone(), c: empty.clone(), dim: tube_dim(fp, v, &empty, &empty)? }))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|e| e.dim > 0)
        .collect();

    let plus_c = plus_part(fp, Side::C, &vs)?;
    let plus_d = plus_part(fp, Side::D, &vs)?;

    let mut seen = BTreeSet::new();
    let mut wclasses = Vec::new();
    for w in fp.enumerate_words(wmax, WordFilter::W) {
        let class = cyclic::class_of(&w);
        if seen.insert(class.canonical.clone()) {
            wclasses.push(WClassEntry { matrix_size: class.members.len(), period: class.period.clone(), class });
        }
    }

    let mut notes = vec![BOUNDED_NOTE.to_string()];
    if !plus_c.through_unit_in_s || !plus_d.through_unit_in_s {
        notes.push("some long-v letter blocks have a weight outside the adjoint support set".into());
    }
    Ok(DecompositionReport { subject: fp.name(), wmax, vmax, weight0, plus_c, plus_d, wclasses, notes })
}

/// Class count and summed matrix sizes of the cyclic classes of `W` at one
/// word length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WClassCensus {
    pub k: usize,
    pub classes: u64,
    pub matrix_total: u64,
}

/// Counts the cyclic classes of words `c1 d1 ... ck dk` without building
/// them: a word is counted once, at its least rotation, with its number of
/// distinct rotations as matrix size.
pub fn wclass_census(fp: &FreeProduct, k: usize) -> WClassCensus {
    let (m, n) = (fp.alphabet(Side::C).len(), fp.alphabet(Side::D).len());
    let mut out = WClassCensus { k, classes: 0, matrix_total: 0 };
    if k == 0 || m == 0 || n == 0 {
        return out;
    }
    let radix: Vec<usize> = (0..2 * k).map(|i| if i % 2 == 0 { m } else { n }).collect();
    let mut digits = vec![0u16; 2 * k];
    loop {
        if cyclic::least_block_rotation(&digits) == 0 {
            out.classes += 1;
            out.matrix_total += cyclic::primitive_blocks(&digits) as u64;
        }
        let mut pos = 2 * k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if (digits[pos] as usize) < radix[pos] {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn plus_part(fp: &FreeProduct, side: Side, vs: &[Word]) -> Result<PlusPart> {
    let s = fp.ring(side).s_set()?;
    let letters: Vec<Word> = fp.alphabet(side).iter().map(|&l| Word::letter(side, l)).collect();
    let pairs: Vec<(&Word, &Word)> = letters.iter().flat_map(|b| letters.iter().map(move |c| (b, c))).collect();
    let entries: Vec<Vec<TubeBlockEntry>> = pairs
        .par_iter()
        .map(|&(b, c)| {
            let mut out = Vec::new();
            for v in vs {
                let dim = tube_dim(fp, v, b, c)?;
                if dim > 0 {
                    out.push(TubeBlockEntry { v: v.clone(), b: b.clone(), c: c.clone(), dim });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let (mut one_sided, mut through_unit) = (Vec::new(), Vec::new());
    for e in entries.into_iter().flatten() {
        if e.v.len() <= 1 {
            one_sided.push(e);
        } else {
            through_unit.push(e);
        }
    }
    let in_s = |w: &Word| s.contains(&w.letters()[0].label);
    let through_unit_in_s = through_unit.iter().all(|e| in_s(&e.b) && in_s(&e.c));
    let unit = fp.ring(side).unit();
    Ok(PlusPart { side, one_sided, through_unit, s_set: s.into_iter().filter(|&l| l != unit).collect(), through_unit_in_s })
}

impl DecompositionReport {
    /// Sum of matrix sizes over the classes of word length `2k`.
    pub fn matrix_total(&self, k: usize) -> usize {
        self.wclasses.iter().filter(|e| e.class.canonical.len() == 2 * k).map(|e| e.matrix_size).sum()
    }

    pub fn to_text(&self, fp: &FreeProduct) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "decomposition of {} [wmax={} vmax={}]", self.subject, self.wmax, self.vmax);
        let _ = writeln!(s, "  weight0: {} supported v, dims {:?}", self.weight0.len(), self.weight0.iter().map(|e| e.dim).collect::<BTreeSet<_>>());
        for part in [&self.plus_c, &self.plus_d] {
            let ring = fp.ring(part.side);
            let names: Vec<&str> = part.s_set.iter().map(|l| ring.name_of(*l)).collect();
            let _ = writeln!(
                s,
                "  plus{}: S\\{{1}} = {{{}}}, {} one-sided entries, {} entries through the unit weight",
                part.side.tag(),
                names.join(", "),
                part.one_sided.len(),
                part.through_unit.len()
            );
            for e in &part.one_sided {
                let _ = writeln!(s, "    v={} b={} c={} dim={}", fp.show(&e.v), fp.show(&e.b), fp.show(&e.c), e.dim);
            }
        }
        let _ = writeln!(s, "  W classes: {}", self.wclasses.len());
        for e in &self.wclasses {
            let _ = writeln!(
                s,
                "    {} size={} period={} exponent={}",
                fp.show(&e.class.canonical),
                e.matrix_size,
                fp.show(&e.period),
                e.class.exponent
            );
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        s
    }

    pub fn to_json(&self, fp: &FreeProduct) -> Value {
        let entry = |e: &TubeBlockEntry| json!({"v": fp.show(&e.v), "b": fp.show(&e.b), "c": fp.show(&e.c), "dim": e.dim});
        let part = |p: &PlusPart| {
            json!({
                "s_set": p.s_set.iter().map(|l| fp.ring(p.side).name_of(*l)).collect::<Vec<_>>(),
                "one_sided": p.one_sided.iter().map(entry).collect::<Vec<_>>(),
                "through_unit": p.through_unit.iter().map(entry).collect::<Vec<_>>(),
                "through_unit_in_s": p.through_unit_in_s,
            })
        };
        json!({
            "schema": SCHEMA_VERSION,
            "subject": self.subject,
            "bounds": {"wmax": self.wmax, "vmax": self.vmax},
            "weight0": self.weight0.iter().map(entry).collect::<Vec<_>>(),
            "plusC": part(&self.plus_c),
            "plusD": part(&self.plus_d),
            "wclasses": self.wclasses.iter().map(|e| json!({
                "canonical": fp.show(&e.class.canonical),
                "members": e.class.members.iter().map(|m| fp.show(m)).collect::<Vec<_>>(),
                "matrix_size": e.matrix_size,
                "period": fp.show(&e.period),
                "exponent": e.class.exponent,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }

    pub fn to_tsv(&self, fp: &FreeProduct) -> String {
        let mut s = String::from("part\tv\tb\tc\tdim\n");
        let mut row = |part: &str, e: &TubeBlockEntry| {
            let _ = writeln!(s, "{part}\t{}\t{}\t{}\t{}", fp.show(&e.v), fp.show(&e.b), fp.show(&e.c), e.dim);
        };
        self.weight0.iter().for_each(|e| row("weight0", e));
        self.plus_c.one_sided.iter().for_each(|e| row("plusC", e));
        self.plus_d.one_sided.iter().for_each(|e| row("plusD", e));
        for e in &self.wclasses {
            let _ = writeln!(s, "wclass\t{}\t{}\t{}\t{}", fp.show(&e.period), fp.show(&e.class.canonical), e.class.exponent, e.matrix_size);
        }
        s
    }
}
