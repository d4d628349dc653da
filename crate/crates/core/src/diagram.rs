//! PD-coded knot/link diagrams with derived orientation and crossing signs.
//!
//! A crossing `X[a,b,c,d]` lists its four incident edge labels
//! counterclockwise starting from the incoming under-strand, the convention
//! of the standard knot tables. Edge labels run `1..=n_edges`, each label
//! occurs exactly twice, and labels are consecutive (cyclically) within each
//! link component, so orientation is recovered by label arithmetic.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const SLOT_A: usize = 0;
pub const SLOT_B: usize = 1;
pub const SLOT_C: usize = 2;
pub const SLOT_D: usize = 3;

/// One crossing: edge labels counterclockwise from the incoming under-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub slots: [usize; 4],
}

impl Crossing {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        Self { slots: [a, b, c, d] }
    }
}

/// Invariant bundle of a diagram; feeds every closed-form degree law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramStats {
    pub c: usize,
    pub c_plus: usize,
    pub c_minus: usize,
    pub wr: i64,
    pub v_a: usize,
    pub v_b: usize,
    pub a_adequate: bool,
    pub b_adequate: bool,
}

/// A validated PD diagram. Immutable after construction; signs and
/// per-slot strand directions are derived at build time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    n_edges: usize,
    /// (first label, length) of each component's contiguous label range.
    components: Vec<(usize, usize)>,
    signs: Vec<i8>,
    /// incoming[i][j]: the strand at slot j of crossing i points into the crossing.
    incoming: Vec<[bool; 4]>,
}

impl Diagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            n_edges: 0,
            components: Vec::new(),
            signs: Vec::new(),
            incoming: Vec::new(),
        }
    }

    /// Build and validate a diagram from raw PD crossings.
    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self> {
        if crossings.is_empty() {
            return Ok(Self::unknot());
        }
        let n_edges = 2 * crossings.len();

        // Every label in 1..=n_edges must occur exactly twice.
        let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_edges + 1];
        for (i, x) in crossings.iter().enumerate() {
            for (j, &e) in x.slots.iter().enumerate() {
                if e == 0 || e > n_edges {
                    return Err(Error::InvalidDiagram(format!(
                        "edge label {e} out of range 1..={n_edges}"
                    )));
                }
                occurrences[e].push((i, j));
            }
        }
        for (e, occ) in occurrences.iter().enumerate().skip(1) {
            if occ.len() != 2 {
                return Err(Error::InvalidDiagram(format!(
                    "edge label {e} occurs {} times, expected 2",
                    occ.len()
                )));
            }
        }

        let components = find_components(&crossings, n_edges)?;
        let (signs, incoming) = orient(&crossings, &occurrences, &components)?;

        Ok(Self { crossings, n_edges, components, signs, incoming })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    /// Number of link components; a 0-crossing diagram is the unknot.
    pub fn n_components(&self) -> usize {
        if self.crossings.is_empty() {
            1
        } else {
            self.components.len()
        }
    }

    pub fn crossing_sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_incoming(&self, crossing: usize, slot: usize) -> bool {
        self.incoming[crossing][slot]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn signed_crossing_counts(&self) -> (usize, usize) {
        let plus = self.signs.iter().filter(|&&s| s > 0).count();
        (plus, self.signs.len() - plus)
    }

    /// Mirror image: reflect the plane, which swaps over/under strands and
    /// reverses the counterclockwise slot order, so `X[a,b,c,d] -> X[a,d,c,b]`.
    /// All signs negate and the A/B state graphs swap.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing::new(x.slots[0], x.slots[3], x.slots[2], x.slots[1]))
            .collect();
        Self::from_crossings(crossings).expect("mirror of a valid diagram is valid")
    }

    /// Connected sum of two knot diagrams, spliced at the lowest-numbered
    /// edge of each.
    pub fn connected_sum(&self, other: &Diagram) -> Result<Diagram> {
        self.connected_sum_at(1, other, 1)
    }

    /// Connected sum spliced at edge `s1` of `self` and `s2` of `other`.
    pub fn connected_sum_at(&self, s1: usize, other: &Diagram, s2: usize) -> Result<Diagram> {
        if self.n_components() != 1 {
            return Err(Error::Precondition(format!(
                "connected sum requires knots; left input has {} components",
                self.n_components()
            )));
        }
        if other.n_components() != 1 {
            return Err(Error::Precondition(format!(
                "connected sum requires knots; right input has {} components",
                other.n_components()
            )));
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        let (m, n) = (self.n_edges, other.n_edges);

        // Cut edge s1 of D1 and s2 of D2, reconnect so the traversal runs
        // through all of D2 and back. New label 1 is the merged edge formed
        // by the tail half of s1 and the head half of s2; label n+1 is the
        // other merged edge.
        let relabel_left = |e: usize, inc: bool| -> usize {
            if e == s1 {
                if inc { n + 1 } else { 1 }
            } else {
                n + 1 + (e + m - s1) % m
            }
        };
        let relabel_right = |e: usize, inc: bool| -> usize {
            if e == s2 {
                if inc { 1 } else { n + 1 }
            } else {
                1 + (e + n - s2) % n
            }
        };

        let mut crossings = Vec::with_capacity(self.crossings.len() + other.crossings.len());
        for (i, x) in self.crossings.iter().enumerate() {
            let mut slots = [0; 4];
            for j in 0..4 {
                slots[j] = relabel_left(x.slots[j], self.incoming[i][j]);
            }
            crossings.push(Crossing { slots });
        }
        for (i, x) in other.crossings.iter().enumerate() {
            let mut slots = [0; 4];
            for j in 0..4 {
                slots[j] = relabel_right(x.slots[j], other.incoming[i][j]);
            }
            crossings.push(Crossing { slots });
        }
        Diagram::from_crossings(crossings)
    }

    /// PD text: `X[a,b,c,d]` tokens, whitespace separated. The unknot emits
    /// the empty string.
    pub fn to_pd_text(&self) -> String {
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|x| format!("X[{},{},{},{}]", x.slots[0], x.slots[1], x.slots[2], x.slots[3]))
            .collect();
        parts.join(" ")
    }
}

fn find_components(crossings: &[Crossing], n_edges: usize) -> Result<Vec<(usize, usize)>> {
    // The strand passes a c and b d; union those pairs and every class
    // is one link component.
    let mut uf = UnionFind::new(n_edges + 1);
    for x in crossings {
        uf.union(x.slots[SLOT_A], x.slots[SLOT_C]);
        uf.union(x.slots[SLOT_B], x.slots[SLOT_D]);
    }
    let mut roots: Vec<usize> = (1..=n_edges).map(|e| uf.find(e)).collect();
    let mut ranges: Vec<(usize, usize)> = Vec::new();
    let mut e = 1;
    while e <= n_edges {
        let root = roots[e - 1];
        let mut len = 1;
        while e + len <= n_edges && roots[e + len - 1] == root {
            len += 1;
        }
        ranges.push((e, len));
        e += len;
    }
    // Contiguity: no later label may share a root with an earlier range.
    roots.dedup();
    let mut seen = roots.clone();
    seen.sort_unstable();
    let before = seen.len();
    seen.dedup();
    if seen.len() != before || seen.len() != ranges.len() {
        return Err(Error::InvalidDiagram(String::from(
            "edge labels are not consecutive within components",
        )));
    }
    Ok(ranges)
}

fn component_of(components: &[(usize, usize)], e: usize) -> (usize, usize) {
    for &(start, len) in components {
        if e >= start && e < start + len {
            return (start, len);
        }
    }
    unreachable!("edge label outside component ranges")
}

fn succ(components: &[(usize, usize)], e: usize) -> usize {
    let (start, len) = component_of(components, e);
    if e + 1 < start + len {
        e + 1
    } else {
        start
    }
}

/// Derive crossing signs and per-slot strand directions. The under-strand
/// enters at slot a and leaves at slot c; the over-strand direction follows
/// from label succession, with occurrence analysis breaking the tie for
/// 2-edge components where both successions wrap.
fn orient(
    crossings: &[Crossing],
    occurrences: &[Vec<(usize, usize)>],
    components: &[(usize, usize)],
) -> Result<(Vec<i8>, Vec<[bool; 4]>)> {
    let mut signs = Vec::with_capacity(crossings.len());
    let mut incoming = Vec::with_capacity(crossings.len());

    for (i, x) in crossings.iter().enumerate() {
        let b = x.slots[SLOT_B];
        let d = x.slots[SLOT_D];
        let d_to_b = succ(components, d) == b;
        let b_to_d = succ(components, b) == d;
        let positive = match (d_to_b, b_to_d) {
            (true, false) => true,
            (false, true) => false,
            (true, true) => over_tiebreak(crossings, occurrences, i, b, d)?,
            (false, false) => {
                return Err(Error::InvalidDiagram(format!(
                    "over-strand labels {b},{d} at crossing {i} are not consecutive"
                )))
            }
        };
        signs.push(if positive { 1 } else { -1 });
        // Positive: over runs d -> b. Negative: b -> d.
        incoming.push([true, !positive, false, positive]);
    }

    // Every edge must have exactly one head and one tail.
    for (e, occ) in occurrences.iter().enumerate().skip(1) {
        let heads = occ
            .iter()
            .filter(|&&(i, j)| incoming[i][j])
            .count();
        if heads != 1 {
            return Err(Error::InvalidDiagram(format!(
                "edge label {e} has {heads} incoming endpoints, expected 1"
            )));
        }
    }

    Ok((signs, incoming))
}

/// Both succession tests wrapped (a 2-edge component covers both over
/// slots). Decide from where the over edges' other endpoints sit.
fn over_tiebreak(
    crossings: &[Crossing],
    occurrences: &[Vec<(usize, usize)>],
    i: usize,
    b: usize,
    d: usize,
) -> Result<bool> {
    let other = |e: usize, slot: usize| -> Option<usize> {
        occurrences[e]
            .iter()
            .find(|&&(ci, cj)| !(ci == i && cj == slot))
            .map(|&(ci, cj)| {
                let _ = &crossings[ci];
                cj
            })
    };
    if let Some(slot) = other(b, SLOT_B) {
        if slot == SLOT_A {
            // b's other endpoint is a head, so here b is outgoing: over d -> b.
            return Ok(true);
        }
        if slot == SLOT_C {
            return Ok(false);
        }
    }
    if let Some(slot) = other(d, SLOT_D) {
        if slot == SLOT_A {
            return Ok(false);
        }
        if slot == SLOT_C {
            return Ok(true);
        }
    }
    Err(Error::InvalidDiagram(format!(
        "cannot orient over-strand {b},{d} at crossing {i}"
    )))
}

/// Parse PD text: whitespace-separated `X[a,b,c,d]` tokens, or a catalog
/// name. Empty input is the unknot.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Diagram::unknot());
    }
    if let Ok(d) = catalog(trimmed) {
        return Ok(d);
    }
    let mut crossings = Vec::new();
    for token in trimmed.split_whitespace() {
        let inner = token
            .strip_prefix("X[")
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("malformed token `{token}`")))?;
        let labels: Vec<usize> = inner
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad edge label in `{token}`")))
            })
            .collect::<Result<_>>()?;
        if labels.len() != 4 {
            return Err(Error::Parse(format!(
                "token `{token}` has {} labels, expected 4",
                labels.len()
            )));
        }
        crossings.push(Crossing::new(labels[0], labels[1], labels[2], labels[3]));
    }
    Diagram::from_crossings(crossings)
}

pub const CATALOG_NAMES: [&str; 8] =
    ["unknot", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"];

/// Reduced alternating (hence adequate) table diagrams.
pub fn catalog(name: &str) -> Result<Diagram> {
    let pd = match name {
        "unknot" => return Ok(Diagram::unknot()),
        "3_1" => "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
        "4_1" => "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
        "5_1" => "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]",
        "5_2" => "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",
        "6_1" => "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]",
        "6_2" => "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]",
        "6_3" => "X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]",
        _ => return Err(Error::Parse(format!("unknown catalog name `{name}`"))),
    };
    parse_pd(pd)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n);
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
