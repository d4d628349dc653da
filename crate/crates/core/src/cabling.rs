//! Construction of the blackboard q-cable D^q and the cable diagram D_{p,q}
//! with a t-twist region, t = p - q*wr(D).
//!
//! Each crossing of D becomes a q x q grid of crossings of the same sign;
//! each edge becomes q parallel strands. Twists slide one string of the band
//! over the other q-1, once per unit of |t|; twist crossings all carry
//! sign(t), so for t < 0 a B-adequate companion yields a B-adequate cable
//! with c_+ unchanged beyond the grid (and mirror-wise for t > 0).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::diagram::{Crossing, Diagram};
use crate::error::{Error, Result};

/// Cabling parameters; `t = p - q*wr(D)` is derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CableSpec {
    pub p: i64,
    pub q: usize,
    pub t: i64,
}

/// Crossings with explicit per-slot directions, on arbitrary edge ids.
/// Construction space for cables; canonical relabeling turns it into a
/// validated `Diagram`.
struct Raw {
    crossings: Vec<[usize; 4]>,
    incoming: Vec<[bool; 4]>,
}

impl Raw {
    fn from_diagram(d: &Diagram) -> Self {
        let crossings = d.crossings().iter().map(|x| x.slots).collect();
        let incoming = (0..d.n_crossings())
            .map(|i| [0, 1, 2, 3].map(|j| d.is_incoming(i, j)))
            .collect();
        Self { crossings, incoming }
    }

    fn push(&mut self, slots: [usize; 4], incoming: [bool; 4]) {
        self.crossings.push(slots);
        self.incoming.push(incoming);
    }
}

/// Relabel edges consecutively along each component's traversal, smallest
/// raw id first, and validate the result. Returns the id -> label map.
fn canonicalize(raw: &Raw) -> Result<(Diagram, BTreeMap<usize, usize>)> {
    let mut occ: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, slots) in raw.crossings.iter().enumerate() {
        for (j, &e) in slots.iter().enumerate() {
            occ.entry(e).or_default().push((i, j));
        }
    }
    let mut heads: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (&e, places) in occ.iter() {
        if places.len() != 2 {
            return Err(Error::InvalidDiagram(format!(
                "constructed edge {e} has {} endpoints",
                places.len()
            )));
        }
        let head: Vec<_> = places.iter().filter(|&&(i, j)| raw.incoming[i][j]).collect();
        if head.len() != 1 {
            return Err(Error::InvalidDiagram(format!(
                "constructed edge {e} has {} heads",
                head.len()
            )));
        }
        heads.insert(e, *head[0]);
    }

    let partner = |j: usize| (j + 2) % 4;
    let mut label_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut next = 1;
    let ids: Vec<usize> = occ.keys().copied().collect();
    for &start in &ids {
        if label_of.contains_key(&start) {
            continue;
        }
        let mut e = start;
        loop {
            label_of.insert(e, next);
            next += 1;
            let (i, j) = heads[&e];
            let out = raw.crossings[i][partner(j)];
            debug_assert!(!raw.incoming[i][partner(j)]);
            if out == start {
                break;
            }
            e = out;
        }
    }

    let crossings = raw
        .crossings
        .iter()
        .map(|slots| Crossing { slots: slots.map(|e| label_of[&e]) })
        .collect();
    Ok((Diagram::from_crossings(crossings)?, label_of))
}

/// Replace every crossing by a q x q grid and every edge by q parallel
/// strands; returns the raw diagram and the band (tail-half edge ids of the
/// q copies of `site_edge`, in strand order) plus the next free id.
fn raw_cable(d: &Diagram, q: usize) -> (Raw, usize) {
    let m = d.n_edges();
    // Strand k of original edge e.
    let strand = |e: usize, k: usize| (e - 1) * q + k;
    let mut next_id = m * q + 1;
    let mut raw = Raw { crossings: Vec::new(), incoming: Vec::new() };

    for (idx, x) in d.crossings().iter().enumerate() {
        let [a, b, c, dd] = x.slots;
        let positive = d.crossing_sign(idx) > 0;
        // Internal grid edges: v[i][j] along under strand i, h[i][j] along
        // over strand j.
        let mut v = vec![vec![0usize; q]; q + 1];
        let mut h = vec![vec![0usize; q + 1]; q];
        for i in 1..=q {
            for j in 1..q {
                v[i][j] = next_id;
                next_id += 1;
            }
        }
        for i in 1..q {
            for j in 1..=q {
                h[i][j] = next_id;
                next_id += 1;
            }
        }
        for i in 1..=q {
            for j in 1..=q {
                // Under strand runs south -> north; slots are
                // [S, E, N, W] counterclockwise from the incoming under.
                let (south, north, east, west);
                if positive {
                    // Over runs west -> east; over strand j=1 is northmost.
                    south = if j == q { strand(a, i) } else { v[i][j] };
                    north = if j == 1 { strand(c, i) } else { v[i][j - 1] };
                    west = if i == 1 { strand(dd, j) } else { h[i - 1][j] };
                    east = if i == q { strand(b, j) } else { h[i][j] };
                    raw.push([south, east, north, west], [true, false, false, true]);
                } else {
                    // Over runs east -> west; over strand j=1 is southmost.
                    south = if j == 1 { strand(a, i) } else { v[i][j - 1] };
                    north = if j == q { strand(c, i) } else { v[i][j] };
                    east = if i == q { strand(b, j) } else { h[i][j] };
                    west = if i == 1 { strand(dd, j) } else { h[i - 1][j] };
                    raw.push([south, east, north, west], [true, true, false, false]);
                }
            }
        }
    }
    (raw, next_id)
}

/// Insert |t| twist units into the band whose tail-half ids are `band`
/// (strand order). Twist crossings all carry sign(t).
fn raw_twists(raw: &mut Raw, t: i64, band: &[usize], next_id: &mut usize) {
    if t == 0 || band.len() < 2 {
        return;
    }
    let q = band.len();
    // Head stubs: where each band edge enters its downstream crossing.
    let stubs: Vec<(usize, usize)> = band
        .iter()
        .map(|&e| {
            raw.crossings
                .iter()
                .enumerate()
                .find_map(|(i, slots)| {
                    slots
                        .iter()
                        .position(|&s| s == e)
                        .filter(|&j| raw.incoming[i][j])
                        .map(|j| (i, j))
                })
                .expect("band edge has a head occurrence")
        })
        .collect();

    let mut cur: Vec<usize> = band.to_vec();
    let mut fresh = || {
        let id = *next_id;
        *next_id += 1;
        id
    };

    for _ in 0..t.unsigned_abs() {
        if t > 0 {
            // Slider from position 1 passes over positions 2..q; each
            // crossing: X[u_in, o_out, u_out, o_in], all positive.
            let mut s = cur[0];
            for j in 1..q {
                let u_out = fresh();
                let o_out = fresh();
                raw.push([cur[j], o_out, u_out, s], [true, false, false, true]);
                cur[j - 1] = u_out;
                s = o_out;
            }
            cur[q - 1] = s;
        } else {
            // Slider from position q passes over positions q-1..1; each
            // crossing: X[u_in, o_in, u_out, o_out], all negative.
            let mut s = cur[q - 1];
            for j in (0..q - 1).rev() {
                let u_out = fresh();
                let o_out = fresh();
                raw.push([cur[j], s, u_out, o_out], [true, true, false, false]);
                cur[j + 1] = u_out;
                s = o_out;
            }
            cur[0] = s;
        }
    }

    for (k, &(i, j)) in stubs.iter().enumerate() {
        raw.crossings[i][j] = cur[k];
    }
}

fn check_knot(d: &Diagram) -> Result<()> {
    if d.n_components() != 1 {
        return Err(Error::Precondition(format!(
            "cabling requires a knot diagram, got {} components",
            d.n_components()
        )));
    }
    Ok(())
}

/// The blackboard q-cable D^q: q parallel copies following the planar
/// framing. For a knot companion this is a q-component link.
pub fn blackboard_cable(d: &Diagram, q: usize) -> Result<Diagram> {
    Ok(blackboard_cable_with_band(d, q)?.0)
}

/// As `blackboard_cable`, also returning the labels (strand order) of the
/// q parallel copies of the companion's edge 1, usable as a twist site.
pub fn blackboard_cable_with_band(d: &Diagram, q: usize) -> Result<(Diagram, Vec<usize>)> {
    if q < 1 {
        return Err(Error::Precondition(format!("cable winding q={q} must be >= 1")));
    }
    check_knot(d)?;
    if q == 1 {
        return Ok((d.clone(), vec![1]));
    }
    if d.n_crossings() == 0 {
        return Err(Error::Precondition(
            "cable of the 0-crossing unknot has no PD representation".into(),
        ));
    }
    let (raw, _) = raw_cable(d, q);
    let (diagram, labels) = canonicalize(&raw)?;
    let band = (1..=q).map(|k| labels[&k]).collect();
    Ok((diagram, band))
}

/// Insert |t| twist units into a q-strand cable at the given band (edge
/// labels in strand order). `t = 0` is a no-op.
pub fn add_twists(cable: &Diagram, t: i64, band: &[usize]) -> Result<Diagram> {
    if t == 0 {
        return Ok(cable.clone());
    }
    let mut raw = Raw::from_diagram(cable);
    let mut next_id = cable.n_edges() + 1;
    raw_twists(&mut raw, t, band, &mut next_id);
    Ok(canonicalize(&raw)?.0)
}

/// The diagram D_{p,q}: q-cable of D with t = p - q*wr(D) twists at the
/// band of D's lowest-numbered edge. Crossing count is
/// q^2 c(D) + |t| (q - 1); the result is a knot when gcd(p, q) = 1.
pub fn cable_diagram(d: &Diagram, p: i64, q: usize) -> Result<(Diagram, CableSpec)> {
    cable_diagram_at(d, p, q, 1)
}

/// As `cable_diagram` with the twist region placed at the copies of
/// `site_edge` instead of edge 1.
pub fn cable_diagram_at(
    d: &Diagram,
    p: i64,
    q: usize,
    site_edge: usize,
) -> Result<(Diagram, CableSpec)> {
    if q < 1 {
        return Err(Error::Precondition(format!("cable winding q={q} must be >= 1")));
    }
    if p.unsigned_abs().gcd(&(q as u64)) != 1 {
        return Err(Error::Precondition(format!("p={p} and q={q} are not coprime")));
    }
    check_knot(d)?;
    let t = p - (q as i64) * d.writhe();
    let spec = CableSpec { p, q, t };
    if q == 1 {
        return Ok((d.clone(), spec));
    }
    if d.n_crossings() == 0 {
        return Err(Error::Precondition(
            "cable of the 0-crossing unknot has no PD representation".into(),
        ));
    }
    if site_edge < 1 || site_edge > d.n_edges() {
        return Err(Error::Precondition(format!("twist site edge {site_edge} out of range")));
    }
    let (mut raw, mut next_id) = raw_cable(d, q);
    let band: Vec<usize> = (1..=q).map(|k| (site_edge - 1) * q + k).collect();
    raw_twists(&mut raw, t, &band, &mut next_id);
    Ok((canonicalize(&raw)?.0, spec))
}
