//! Exact charges on vertices, faces and blocks, and the two transfer rules.
//!
//! A vertex starts with `1 - (blue neighbours)`, a 4-face with
//! `4/3 - (blue vertices on it)`, the two cycle faces with 0. Summed over
//! the prism this is `10n/3 - 5|Blue|`. All values are whole thirds.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::lists::Color;
use crate::prism::{vertex_id, Face, FaceKind, Layer, Prism};
use crate::reductions::blocks::{block_decompose, BlockSequence};
use crate::solver::coloring::Coloring;

/// A multiple of 1/3, stored as its numerator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(pub i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);

    pub fn thirds(t: i64) -> Charge {
        Charge(t)
    }

    pub fn whole(w: i64) -> Charge {
        Charge(3 * w)
    }

    pub fn numerator(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/3", self.0)
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, o: Charge) -> Charge {
        Charge(self.0 + o.0)
    }
}

impl Sub for Charge {
    type Output = Charge;
    fn sub(self, o: Charge) -> Charge {
        Charge(self.0 - o.0)
    }
}

impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}

impl AddAssign for Charge {
    fn add_assign(&mut self, o: Charge) {
        self.0 += o.0;
    }
}

impl SubAssign for Charge {
    fn sub_assign(&mut self, o: Charge) {
        self.0 -= o.0;
    }
}

impl std::iter::Sum for Charge {
    fn sum<I: Iterator<Item = Charge>>(it: I) -> Charge {
        it.fold(Charge::ZERO, Add::add)
    }
}

pub fn vertex_charge(p: &Prism, c: &Coloring, blue: Color, v: usize) -> Charge {
    let blue_nbrs = p.neighbors(v).iter().filter(|&&u| c.color(u) == blue).count() as i64;
    Charge::whole(1 - blue_nbrs)
}

pub fn face_charge(c: &Coloring, blue: Color, f: &Face) -> Charge {
    match f.kind {
        FaceKind::Square(_) => {
            let on = f.vertices.iter().filter(|&&v| c.color(v) == blue).count() as i64;
            Charge::thirds(4) - Charge::whole(on)
        }
        FaceKind::Cycle(_) => Charge::ZERO,
    }
}

/// `10n/3 - 5|Blue|`.
pub fn charge_formula(n: usize, blue_count: usize) -> Charge {
    Charge::thirds(10 * n as i64) - Charge::whole(5 * blue_count as i64)
}

/// Sum over vertices and faces, checked against the closed form.
pub fn total_charge(p: &Prism, c: &Coloring, blue: Color) -> Result<Charge> {
    let vertices: Charge = (0..p.vertex_count()).map(|v| vertex_charge(p, c, blue, v)).sum();
    let faces: Charge = p.faces().iter().map(|f| face_charge(c, blue, f)).sum();
    let total = vertices + faces;
    let expected = charge_formula(p.n(), c.class_size(blue));
    if total != expected {
        return Err(Error::Internal(format!("charge sum {total} differs from closed form {expected}")));
    }
    Ok(total)
}

/// Each block's vertices plus the 4-faces it owns.
pub fn block_charges(p: &Prism, c: &Coloring, blue: Color, blocks: &BlockSequence) -> Vec<Charge> {
    blocks
        .blocks
        .iter()
        .map(|b| {
            let v: Charge = b.vertices().into_iter().map(|v| vertex_charge(p, c, blue, v)).sum();
            let f: Charge = b
                .faces()
                .iter()
                .map(|&i| {
                    let face = Face { kind: FaceKind::Square(i), vertices: p.square_face(i).to_vec() };
                    face_charge(c, blue, &face)
                })
                .sum();
            v + f
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// A `B0` takes 1 from its right neighbour.
    One,
    /// A `B3` takes 5/3 from its right neighbour.
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub from: usize,
    pub to: usize,
    pub amount: Charge,
}

/// Applies both rules once, simultaneously, to the initial charges.
pub fn apply_rules(blocks: &BlockSequence, initial: &[Charge]) -> (Vec<Charge>, Vec<Transfer>) {
    let mut fin = initial.to_vec();
    let mut log = Vec::new();
    for (i, b) in blocks.blocks.iter().enumerate() {
        let (rule, amount) = match b.kind {
            0 => (Rule::One, Charge::whole(1)),
            3 => (Rule::Two, Charge::thirds(5)),
            _ => continue,
        };
        let from = blocks.right_of(i);
        fin[i] += amount;
        fin[from] -= amount;
        log.push(Transfer { rule, from, to: i, amount });
    }
    (fin, log)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAudit {
    pub label: String,
    pub initial: Charge,
    pub fin: Charge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub n: usize,
    pub blue: Color,
    pub blue_count: usize,
    pub total: Charge,
    /// `None` when a blue run is too long to decompose.
    pub blocks: Option<Vec<BlockAudit>>,
    pub error: Option<String>,
    pub conserved: bool,
}

impl AuditReport {
    pub fn decomposable(&self) -> bool {
        self.blocks.is_some()
    }

    pub fn min_final(&self) -> Option<Charge> {
        self.blocks.as_ref()?.iter().map(|b| b.fin).min()
    }

    /// Flat `key=value` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n={}\nblue={}\nblue_count={}\ntotal={}\ndecomposable={}\n",
            self.n,
            self.blue,
            self.blue_count,
            self.total,
            self.decomposable()
        );
        if let Some(e) = &self.error {
            out += &format!("error={e}\n");
        }
        if let Some(blocks) = &self.blocks {
            for (i, b) in blocks.iter().enumerate() {
                out += &format!("block {i} {} initial={} final={}\n", b.label, b.initial, b.fin);
            }
            if let Some(m) = self.min_final() {
                out += &format!("min_final={m}\n");
            }
        }
        out += &format!("conserved={}\n", self.conserved);
        out
    }
}

/// Full charge bookkeeping for `c` with `blue` as the designated class.
pub fn audit(p: &Prism, c: &Coloring, blue: Color) -> Result<AuditReport> {
    let total = total_charge(p, c, blue)?;
    let mut report = AuditReport {
        n: p.n(),
        blue,
        blue_count: c.class_size(blue),
        total,
        blocks: None,
        error: None,
        conserved: true,
    };
    match block_decompose(p, c, blue) {
        Ok(seq) => {
            let initial = block_charges(p, c, blue, &seq);
            let (fin, _) = apply_rules(&seq, &initial);
            let s0: Charge = initial.iter().copied().sum();
            let s1: Charge = fin.iter().copied().sum();
            report.conserved = s0 == total && s1 == total;
            report.blocks = Some(
                seq.blocks
                    .iter()
                    .zip(initial.iter().zip(&fin))
                    .map(|(b, (&initial, &fin))| BlockAudit { label: b.to_string(), initial, fin })
                    .collect(),
            );
        }
        Err(e @ Error::BlueRunTooLong { .. }) => report.error = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// A coloring whose blocks have the given kinds, left to right from rung
/// 0. Blue alternates layers along each run; the rest is properly colored
/// from 1 to 6.
pub fn blue_pattern(kinds: &[usize]) -> Result<(Prism, Coloring)> {
    let seq = BlockSequence::from_kinds(kinds)?;
    let p = Prism::new(seq.n)?;
    let n = p.n();
    let mut colors: Vec<Color> = (0..p.vertex_count())
        .map(|v| {
            let (i, layer) = (v / 2, (v % 2) as Color);
            if n % 2 == 1 && i == n - 1 {
                5 + layer
            } else {
                1 + 2 * layer + (i % 2) as Color
            }
        })
        .collect();
    for b in &seq.blocks {
        for (k, &r) in b.rungs.iter().skip(1).enumerate() {
            let layer = if k % 2 == 0 { Layer::U } else { Layer::V };
            colors[vertex_id(layer, r)] = 0;
        }
    }
    Ok((p, Coloring::new(colors)))
}

/// A block whose charge before (and, where given, after) the rules is
/// fixed by its kind and its left neighbour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFixture {
    pub kinds: Vec<usize>,
    pub index: usize,
    pub initial: Charge,
    pub fin: Option<Charge>,
}

/// The block charge table: eight initial values (each kind, with a `B0`
/// or another block on its left) and the four values after the rules.
pub fn table_fixtures() -> Vec<TableFixture> {
    let t = Charge::thirds;
    let row = |kinds: &[usize], initial: i64, fin: Option<i64>| TableFixture {
        kinds: kinds.to_vec(),
        index: 1,
        initial: t(initial),
        fin: fin.map(t),
    };
    vec![
        row(&[0, 0, 0], 10, Some(10)),
        row(&[1, 0, 0], 7, Some(10)),
        row(&[3, 0, 0], 7, Some(5)),
        row(&[0, 1, 0], 8, Some(5)),
        row(&[1, 1, 0], 5, Some(5)),
        row(&[3, 1, 0], 5, Some(0)),
        row(&[0, 2, 0], 3, Some(0)),
        row(&[1, 2, 0], 0, Some(0)),
        row(&[0, 3, 0], -2, Some(0)),
        row(&[1, 3, 0], -5, Some(0)),
    ]
}
