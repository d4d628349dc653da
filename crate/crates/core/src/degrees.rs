//! Closed-form degree laws for adequate diagrams and their cables, the
//! slope trichotomy, Jones diameter, and admissibility.
//!
//! All degree bookkeeping is in integer `4d` units (4 times the degree in
//! `t`), which keeps every quantity integral.

use alloc::format;

use crate::diagram::DiagramStats;
use crate::error::{Error, Result};

/// A quadratic `q2 n^2 + q1 n + q0` in 4d units. The constant term has no
/// closed form and is reported as unknown unless the input is the companion
/// itself (q = 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeQuadratic {
    pub q2: i64,
    pub q1: i64,
    pub q0: Option<i64>,
}

/// Position of the cabling slope p/q relative to the degree cone
/// [-2 c_-(K), 2 c_+(K)].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// p/q < 2 c_+ and -p/q < 2 c_-.
    Case1,
    /// p/q > 2 c_+.
    Case2,
    /// -p/q > 2 c_-.
    Case3,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Case1 => "CASE1",
            CaseTag::Case2 => "CASE2",
            CaseTag::Case3 => "CASE3",
        }
    }
}

/// Extreme degrees `(4 d_-, 4 d_+)` of J_K(n) for an adequate diagram:
///   4 d_- = -2 c_- n^2 + 2 (c - v_A) n + 2 v_A - 2 c_+   (A-adequate side)
///   4 d_+ =  2 c_+ n^2 + 2 (v_B - c) n + 2 c_- - 2 v_B   (B-adequate side)
pub fn adequate_degrees(st: &DiagramStats, n: i64) -> Result<(i64, i64)> {
    if !st.a_adequate {
        return Err(Error::Precondition(
            "lower degree law needs an A-adequate diagram".into(),
        ));
    }
    if !st.b_adequate {
        return Err(Error::Precondition(
            "upper degree law needs a B-adequate diagram".into(),
        ));
    }
    Ok((fourd_minus(st, n), fourd_plus(st, n)))
}

pub(crate) fn fourd_minus(st: &DiagramStats, n: i64) -> i64 {
    let (c, cm, cp, va) = (st.c as i64, st.c_minus as i64, st.c_plus as i64, st.v_a as i64);
    -2 * cm * n * n + 2 * (c - va) * n + 2 * va - 2 * cp
}

pub(crate) fn fourd_plus(st: &DiagramStats, n: i64) -> i64 {
    let (c, cm, cp, vb) = (st.c as i64, st.c_minus as i64, st.c_plus as i64, st.v_b as i64);
    2 * cp * n * n + 2 * (vb - c) * n + 2 * cm - 2 * vb
}

/// Classify the slope p/q against the degree cone. Boundary slopes cannot
/// occur for coprime p, q with q >= 2; they are rejected defensively.
pub fn classify(st: &DiagramStats, p: i64, q: usize) -> Result<CaseTag> {
    let q = q as i64;
    let two_cp = 2 * st.c_plus as i64;
    let two_cm = 2 * st.c_minus as i64;
    if p == two_cp * q || -p == two_cm * q {
        return Err(Error::Precondition(format!(
            "boundary slope p/q = {p}/{q} coincides with a degree-cone wall"
        )));
    }
    if p > two_cp * q {
        Ok(CaseTag::Case2)
    } else if -p > two_cm * q {
        Ok(CaseTag::Case3)
    } else {
        Ok(CaseTag::Case1)
    }
}

fn require_adequate(st: &DiagramStats) -> Result<()> {
    if !(st.a_adequate && st.b_adequate) {
        return Err(Error::Precondition(
            "cable degree laws need a diagram that is both A- and B-adequate".into(),
        ));
    }
    // The linear coefficients of the degrees are signed Euler
    // characteristics; a violation means the stats are bad.
    if st.v_b as i64 > st.c as i64 || st.v_a as i64 > st.c as i64 {
        return Err(Error::Precondition(format!(
            "degree linear-term sign check failed (c={}, v_A={}, v_B={})",
            st.c, st.v_a, st.v_b
        )));
    }
    Ok(())
}

/// Degree quadratics `(4 d_+, 4 d_-)` of the (p,q)-cable, valid for large n.
/// For q = 1 the cable is K itself and the constant terms are known.
pub fn cable_quadratics(
    st: &DiagramStats,
    p: i64,
    q: usize,
) -> Result<(DegreeQuadratic, DegreeQuadratic, CaseTag)> {
    let (c, cm, cp) = (st.c as i64, st.c_minus as i64, st.c_plus as i64);
    let (va, vb) = (st.v_a as i64, st.v_b as i64);
    if q == 1 {
        if !(st.a_adequate && st.b_adequate) {
            return Err(Error::Precondition(
                "cable degree laws need a diagram that is both A- and B-adequate".into(),
            ));
        }
        let plus = DegreeQuadratic { q2: 2 * cp, q1: 2 * (vb - c), q0: Some(2 * cm - 2 * vb) };
        let minus = DegreeQuadratic { q2: -2 * cm, q1: 2 * (c - va), q0: Some(2 * va - 2 * cp) };
        return Ok((plus, minus, CaseTag::Case1));
    }
    require_adequate(st)?;
    let tag = classify(st, p, q)?;
    let qi = q as i64;

    // The in-cone quadratics: quadratic coefficient q^2 times the
    // companion's, linear term shifted by the framing mismatch.
    let plus_cone = DegreeQuadratic {
        q2: 2 * qi * qi * cp,
        q1: 2 * qi * (vb - c) + 2 * (qi - 1) * (p - 2 * qi * cp),
        q0: None,
    };
    let minus_cone = DegreeQuadratic {
        q2: -2 * qi * qi * cm,
        q1: 2 * qi * (c - va) + 2 * (qi - 1) * (p + 2 * qi * cm),
        q0: None,
    };
    let out_of_cone = DegreeQuadratic { q2: p * qi, q1: 0, q0: None };

    Ok(match tag {
        CaseTag::Case1 => (plus_cone, minus_cone, tag),
        CaseTag::Case2 => (out_of_cone, minus_cone, tag),
        CaseTag::Case3 => (plus_cone, out_of_cone, tag),
    })
}

/// Jones diameter of the (p,q)-cable of an adequate knot:
/// 2 q^2 c in Case 1, pq + 2 q^2 c_- in Case 2, 2 q^2 c_+ - pq in Case 3.
pub fn jones_diameter_cable(st: &DiagramStats, p: i64, q: usize) -> Result<(i64, CaseTag)> {
    let (c, cm, cp) = (st.c as i64, st.c_minus as i64, st.c_plus as i64);
    if q == 1 {
        if !(st.a_adequate && st.b_adequate) {
            return Err(Error::Precondition(
                "Jones diameter law needs a diagram that is both A- and B-adequate".into(),
            ));
        }
        return Ok((2 * c, CaseTag::Case1));
    }
    require_adequate(st)?;
    let tag = classify(st, p, q)?;
    let qi = q as i64;
    let dj = match tag {
        CaseTag::Case1 => 2 * qi * qi * c,
        CaseTag::Case2 => p * qi + 2 * qi * qi * cm,
        CaseTag::Case3 => 2 * qi * qi * cp - p * qi,
    };
    Ok((dj, tag))
}

/// A cable of an adequate knot is admissible iff q = 2 and
/// p = 2 wr(K) +- 1, i.e. |p - q wr| (q - 1) = 1.
pub fn is_admissible_cable(st: &DiagramStats, p: i64, q: usize) -> bool {
    q == 2 && (p - 2 * st.wr).abs() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::catalog;
    use crate::states::stats;

    fn st(name: &str) -> DiagramStats {
        stats(&catalog(name).unwrap())
    }

    #[test]
    fn figure_eight_degree_law() {
        let s = st("4_1");
        assert_eq!(adequate_degrees(&s, 2).unwrap(), (-10, 10));
        assert_eq!(adequate_degrees(&s, 1).unwrap(), (0, 0));
    }

    #[test]
    fn unknot_degree_law() {
        let s = stats(&crate::Diagram::unknot());
        for n in 1..=8 {
            assert_eq!(adequate_degrees(&s, n).unwrap(), (-(2 * n - 2), 2 * n - 2));
        }
    }

    #[test]
    fn one_sided_gating() {
        // Positive curl: A-graph has a loop, so the laws are refused.
        let curl = crate::diagram::parse_pd("X[1,1,2,2]").unwrap();
        let s = stats(&curl);
        assert!(adequate_degrees(&s, 2).is_err());
    }

    #[test]
    fn figure_eight_case1_quadratics() {
        let s = st("4_1");
        let (plus, minus, tag) = cable_quadratics(&s, 1, 2).unwrap();
        assert_eq!(tag, CaseTag::Case1);
        assert_eq!(plus.q2, 16);
        assert_eq!(minus.q2, -16);
        assert_eq!(plus.q0, None);
    }

    #[test]
    fn mirror_trefoil_case2() {
        let s = stats(&catalog("3_1").unwrap().mirror());
        assert_eq!((s.c_plus, s.c_minus), (3, 0));
        let (plus, _, tag) = cable_quadratics(&s, 13, 2).unwrap();
        assert_eq!(tag, CaseTag::Case2);
        assert_eq!(plus.q2, 26);
        assert_eq!(plus.q1, 0);
    }

    #[test]
    fn q1_returns_companion_data() {
        let s = st("4_1");
        let (plus, minus, _) = cable_quadratics(&s, 7, 1).unwrap();
        assert_eq!(plus.q2, 2 * s.c_plus as i64);
        assert_eq!(minus.q2, -2 * (s.c_minus as i64));
        assert!(plus.q0.is_some());
    }

    #[test]
    fn jones_diameter_cases() {
        let s = st("4_1");
        assert_eq!(jones_diameter_cable(&s, 1, 2).unwrap(), (32, CaseTag::Case1));

        let m = stats(&catalog("3_1").unwrap().mirror());
        let (dj, tag) = jones_diameter_cable(&m, 13, 2).unwrap();
        assert_eq!((dj, tag), (26, CaseTag::Case2));
        assert!(dj > 2 * 4 * 3);

        let (dj3, tag3) = jones_diameter_cable(&st("3_1"), -13, 2).unwrap();
        assert_eq!(tag3, CaseTag::Case3);
        assert_eq!(dj3, 2 * 4 * 0 + 26);
        assert!(dj3 > 2 * 4 * 3);

        assert_eq!(jones_diameter_cable(&s, 9, 1).unwrap().0, 8);
    }

    #[test]
    fn case1_diameter_matches_quadratics() {
        let s = st("5_2");
        for p in [-3, -1, 1, 3, 5] {
            let (plus, minus, tag) = cable_quadratics(&s, p, 2).unwrap();
            if tag != CaseTag::Case1 {
                continue;
            }
            let (dj, _) = jones_diameter_cable(&s, p, 2).unwrap();
            assert_eq!(plus.q2 - minus.q2, dj);
        }
    }

    #[test]
    fn admissibility() {
        let s = st("4_1");
        assert!(is_admissible_cable(&s, 1, 2));
        assert!(is_admissible_cable(&s, -1, 2));
        assert!(!is_admissible_cable(&s, 3, 2));
        assert!(!is_admissible_cable(&s, 1, 3));

        let t = st("3_1"); // wr = -3
        assert!(is_admissible_cable(&t, -7, 2));
        assert!(is_admissible_cable(&t, -5, 2));
        assert!(!is_admissible_cable(&t, -3, 2));
    }

    #[test]
    fn unknot_stats_rejected_by_cable_laws() {
        let s = stats(&crate::Diagram::unknot());
        assert!(cable_quadratics(&s, 1, 2).is_err());
    }
}
