//! Kauffman states, state circles, the all-A/all-B state graphs and
//! adequacy of diagrams.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{Diagram, DiagramStats, UnionFind, SLOT_A, SLOT_B, SLOT_C, SLOT_D};

/// Smoothing choice at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    A,
    B,
}

/// One smoothing choice per crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KauffmanState(pub Vec<Resolution>);

impl KauffmanState {
    pub fn all(which: Resolution, n: usize) -> Self {
        Self(vec![which; n])
    }

    /// State from the low `n` bits of an index; bit set means B.
    pub fn from_index(bits: u64, n: usize) -> Self {
        Self(
            (0..n)
                .map(|i| if bits >> i & 1 == 1 { Resolution::B } else { Resolution::A })
                .collect(),
        )
    }
}

/// Circles of the all-A or all-B state with one edge per crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateGraph {
    pub n_circles: usize,
    pub edges: Vec<(usize, usize)>,
    pub one_edged_loop: bool,
}

/// Number of state circles after smoothing every crossing as `state` says.
///
/// The A-resolution joins PD slots (a,b) and (c,d); the B-resolution joins
/// (a,d) and (b,c). Circles are classes of edge labels under those
/// identifications.
pub fn resolve(d: &Diagram, state: &KauffmanState) -> usize {
    assert_eq!(state.0.len(), d.n_crossings(), "state length must equal crossing count");
    if d.n_crossings() == 0 {
        return 1;
    }
    let mut uf = UnionFind::new(d.n_edges() + 1);
    resolve_into(d, &state.0, &mut uf)
}

pub(crate) fn resolve_into(d: &Diagram, choices: &[Resolution], uf: &mut UnionFind) -> usize {
    uf.reset(d.n_edges() + 1);
    for (x, &r) in d.crossings().iter().zip(choices) {
        let s = &x.slots;
        match r {
            Resolution::A => {
                uf.union(s[SLOT_A], s[SLOT_B]);
                uf.union(s[SLOT_C], s[SLOT_D]);
            }
            Resolution::B => {
                uf.union(s[SLOT_A], s[SLOT_D]);
                uf.union(s[SLOT_B], s[SLOT_C]);
            }
        }
    }
    let mut count = 0;
    for e in 1..=d.n_edges() {
        if uf.find(e) == e {
            count += 1;
        }
    }
    count
}

/// The state graph of the all-A (or all-B) state: vertices are state
/// circles, each crossing contributes the edge joining the two circles its
/// smoothing arcs lie on.
pub fn state_graph(d: &Diagram, which: Resolution) -> StateGraph {
    if d.n_crossings() == 0 {
        return StateGraph { n_circles: 1, edges: Vec::new(), one_edged_loop: false };
    }
    let choices = vec![which; d.n_crossings()];
    let mut uf = UnionFind::new(d.n_edges() + 1);
    let n_circles = resolve_into(d, &choices, &mut uf);

    // Number circles by first appearance along the edge labels.
    let mut circle_id = vec![usize::MAX; d.n_edges() + 1];
    let mut next = 0;
    for e in 1..=d.n_edges() {
        let root = uf.find(e);
        if circle_id[root] == usize::MAX {
            circle_id[root] = next;
            next += 1;
        }
        circle_id[e] = circle_id[root];
    }

    let mut edges = Vec::with_capacity(d.n_crossings());
    let mut one_edged_loop = false;
    for x in d.crossings() {
        let s = &x.slots;
        let (u, v) = match which {
            // Arcs (a,b) and (c,d): the edge joins their circles.
            Resolution::A => (circle_id[s[SLOT_A]], circle_id[s[SLOT_C]]),
            // Arcs (a,d) and (b,c).
            Resolution::B => (circle_id[s[SLOT_A]], circle_id[s[SLOT_B]]),
        };
        if u == v {
            one_edged_loop = true;
        }
        edges.push((u, v));
    }
    StateGraph { n_circles, edges, one_edged_loop }
}

/// `(a_adequate, b_adequate)`: no one-edged loop in the corresponding graph.
pub fn is_adequate(d: &Diagram) -> (bool, bool) {
    (
        !state_graph(d, Resolution::A).one_edged_loop,
        !state_graph(d, Resolution::B).one_edged_loop,
    )
}

pub fn stats(d: &Diagram) -> DiagramStats {
    let (c_plus, c_minus) = d.signed_crossing_counts();
    let ga = state_graph(d, Resolution::A);
    let gb = state_graph(d, Resolution::B);
    DiagramStats {
        c: d.n_crossings(),
        c_plus,
        c_minus,
        wr: d.writhe(),
        v_a: ga.n_circles,
        v_b: gb.n_circles,
        a_adequate: !ga.one_edged_loop,
        b_adequate: !gb.one_edged_loop,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{catalog, parse_pd, CATALOG_NAMES};

    #[test]
    fn unknot_resolves_to_one_circle() {
        let u = Diagram::unknot();
        assert_eq!(resolve(&u, &KauffmanState(Vec::new())), 1);
    }

    #[test]
    fn trefoil_circle_counts() {
        let d = catalog("3_1").unwrap();
        let va = resolve(&d, &KauffmanState::all(Resolution::A, 3));
        let vb = resolve(&d, &KauffmanState::all(Resolution::B, 3));
        assert_eq!((va, vb), (3, 2));
        assert_eq!(va + vb, d.n_crossings() + 2);
    }

    #[test]
    fn figure_eight_circle_counts() {
        let d = catalog("4_1").unwrap();
        let va = resolve(&d, &KauffmanState::all(Resolution::A, 4));
        let vb = resolve(&d, &KauffmanState::all(Resolution::B, 4));
        assert_eq!((va, vb), (3, 3));
    }

    #[test]
    fn figure_eight_state_graph() {
        let g = state_graph(&catalog("4_1").unwrap(), Resolution::A);
        assert_eq!(g.n_circles, 3);
        assert_eq!(g.edges.len(), 4);
        assert!(!g.one_edged_loop);
    }

    #[test]
    fn curl_has_one_edged_loop() {
        let pos = parse_pd("X[1,1,2,2]").unwrap();
        let (a, b) = is_adequate(&pos);
        assert!(!a || !b);
        let neg = parse_pd("X[1,2,2,1]").unwrap();
        let (a, b) = is_adequate(&neg);
        assert!(!a || !b);
    }

    #[test]
    fn catalog_is_adequate() {
        for name in CATALOG_NAMES {
            let d = catalog(name).unwrap();
            let (a, b) = is_adequate(&d);
            assert!(a && b, "{name} should be adequate");
        }
    }

    #[test]
    fn catalog_alternating_face_count() {
        for name in CATALOG_NAMES {
            if name == "unknot" {
                continue;
            }
            let st = stats(&catalog(name).unwrap());
            assert_eq!(st.v_a + st.v_b, st.c + 2, "{name}");
        }
    }

    #[test]
    fn parity_invariant() {
        for name in CATALOG_NAMES {
            let st = stats(&catalog(name).unwrap());
            assert_eq!((st.v_a + st.c) % 2, st.v_b % 2, "{name}");
        }
    }

    #[test]
    fn mirror_swaps_state_graphs() {
        for name in CATALOG_NAMES {
            let d = catalog(name).unwrap();
            let m = d.mirror();
            let ga = state_graph(&d, Resolution::A);
            let gb_m = state_graph(&m, Resolution::B);
            assert_eq!(ga.n_circles, gb_m.n_circles, "{name}");
            assert_eq!(ga.one_edged_loop, gb_m.one_edged_loop, "{name}");
        }
    }

    #[test]
    fn trefoil_stats_bundle() {
        let st = stats(&catalog("3_1").unwrap());
        assert_eq!(
            st,
            DiagramStats {
                c: 3,
                c_plus: 0,
                c_minus: 3,
                wr: -3,
                v_a: 3,
                v_b: 2,
                a_adequate: true,
                b_adequate: true,
            }
        );
    }

    #[test]
    fn figure_eight_stats_bundle() {
        let st = stats(&catalog("4_1").unwrap());
        assert_eq!(
            st,
            DiagramStats {
                c: 4,
                c_plus: 2,
                c_minus: 2,
                wr: 0,
                v_a: 3,
                v_b: 3,
                a_adequate: true,
                b_adequate: true,
            }
        );
    }

    #[test]
    fn unknot_stats_bundle() {
        let st = stats(&Diagram::unknot());
        assert_eq!((st.c, st.wr, st.v_a, st.v_b), (0, 0, 1, 1));
        assert!(st.a_adequate && st.b_adequate);
    }

    #[test]
    fn connect_sum_vb_additivity() {
        let t = catalog("3_1").unwrap();
        let sum = t.connected_sum(&t).unwrap();
        let st = stats(&sum);
        let st1 = stats(&t);
        assert_eq!(st.v_b, 2 * st1.v_b - 1);
        assert_eq!(st.v_a, 2 * st1.v_a - 1);
        assert_eq!(st.v_b, 3);
        assert_eq!(2 * st1.v_b - 1, 3);
    }
}
