//! Theorem application: certified crossing-number reports for cables of
//! adequate knots and for connect sums, each carrying citation labels and a
//! witness diagram.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cabling::cable_diagram;
use crate::degrees::{cable_quadratics, is_admissible_cable, jones_diameter_cable, CaseTag};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::states::stats;

/// Result statements backing each report field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Citation {
    /// Lower bound c(K_{p,q}) >= q^2 c(K) + 1 for adequate nontrivial K.
    Thm1_1,
    /// Admissible 2-cables: non-adequate and c(K_{p,2}) = 4 c(K) + 1.
    Cor1_2,
    /// c(K^2_{+-1,2}) = 8 c(K) + 1 for K^2 = K # K*.
    Cor1_3,
    /// c(K1 # K2) = c(K1) + c(K2) for an admissible-cable summand.
    Thm1_4,
    /// dj_K <= 2 c(K), with equality iff K is adequate.
    Thm2_2,
    /// The cable diagram construction realizing the degree quadratics.
    Thm2_5,
    /// In-cone cables of adequate knots are non-adequate.
    Thm3_1,
}

impl Citation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Citation::Thm1_1 => "Thm1.1",
            Citation::Cor1_2 => "Cor1.2",
            Citation::Cor1_3 => "Cor1.3",
            Citation::Thm1_4 => "Thm1.4",
            Citation::Thm2_2 => "Thm2.2",
            Citation::Thm2_5 => "Thm2.5",
            Citation::Thm3_1 => "Thm3.1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdequacyVerdict {
    Adequate,
    NonAdequate,
    Unknown,
}

impl AdequacyVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            AdequacyVerdict::Adequate => "adequate",
            AdequacyVerdict::NonAdequate => "non_adequate",
            AdequacyVerdict::Unknown => "unknown",
        }
    }
}

/// Certified crossing-number statement. `exact` is set only when a theorem
/// pins the value, in which case it equals the crossing count of the
/// explicitly constructed witness diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingReport {
    pub p: i64,
    pub q: usize,
    pub case: CaseTag,
    pub lower_bound: i64,
    pub exact: Option<i64>,
    pub constructed_diagram_crossings: usize,
    pub adequacy_verdict: AdequacyVerdict,
    pub admissible: bool,
    pub citations: Vec<Citation>,
    /// The diagram whose crossing count `constructed_diagram_crossings`
    /// reports: D_{p,q}, or D_{p,2} # D2 for connect sums.
    pub witness: Diagram,
}

fn require_adequate_companion(d: &Diagram) -> Result<()> {
    let st = stats(d);
    if st.c == 0 {
        return Err(Error::Precondition("trivial companion".into()));
    }
    if !(st.a_adequate && st.b_adequate) {
        return Err(Error::Precondition(
            "companion diagram must be A- and B-adequate".into(),
        ));
    }
    Ok(())
}

/// Crossing-number report for the (p,q)-cable of the knot presented by the
/// adequate diagram `d`. An adequate diagram realizes the crossing number,
/// so c(K) = c(d) throughout.
pub fn cable_report(d: &Diagram, p: i64, q: usize) -> Result<CrossingReport> {
    require_adequate_companion(d)?;
    let st = stats(d);
    let c = st.c as i64;

    if q == 1 {
        return Ok(CrossingReport {
            p,
            q,
            case: CaseTag::Case1,
            lower_bound: c,
            exact: Some(c),
            constructed_diagram_crossings: st.c,
            adequacy_verdict: AdequacyVerdict::Adequate,
            admissible: false,
            citations: Vec::new(),
            witness: d.clone(),
        });
    }

    let (witness, _spec) = cable_diagram(d, p, q)?;
    let qi = q as i64;
    let (_, _, case) = cable_quadratics(&st, p, q)?;
    let admissible = is_admissible_cable(&st, p, q);

    let mut lower_bound = qi * qi * c + 1;
    let mut exact = None;
    let mut adequacy = AdequacyVerdict::Unknown;
    let mut citations = vec![Citation::Thm1_1];

    match case {
        CaseTag::Case1 => {
            adequacy = AdequacyVerdict::NonAdequate;
            citations.push(Citation::Thm3_1);
            if admissible {
                // c(K_{p,2}) = 4 c(K) + 1, witnessed by D_{p,2}. Check the
                // admissibility identity dj = 2 (c(witness) - 1) first.
                let (dj, _) = jones_diameter_cable(&st, p, q)?;
                let value = 4 * c + 1;
                if witness.n_crossings() as i64 != value || dj != 2 * (value - 1) {
                    return Err(Error::Precondition(format!(
                        "admissible-cable certificate check failed: witness {} vs 4c+1 = {value}, dj = {dj}",
                        witness.n_crossings()
                    )));
                }
                exact = Some(value);
                lower_bound = value;
                citations = vec![Citation::Cor1_2];
            }
        }
        CaseTag::Case2 | CaseTag::Case3 => {
            let (dj, _) = jones_diameter_cable(&st, p, q)?;
            let dj_bound = (dj + 1) / 2;
            if dj_bound > lower_bound {
                lower_bound = dj_bound;
            }
            citations.push(Citation::Thm2_2);
        }
    }

    Ok(CrossingReport {
        p,
        q,
        case,
        lower_bound,
        exact,
        constructed_diagram_crossings: witness.n_crossings(),
        adequacy_verdict: adequacy,
        admissible,
        citations,
        witness,
    })
}

/// Report for the (sign, 2)-cable of K # K*. The composite has writhe 0, so
/// p = sign is admissible and the cable crossing number is 8 c(K) + 1.
pub fn mirror_composite_report(d: &Diagram, sign: i64) -> Result<CrossingReport> {
    if sign != 1 && sign != -1 {
        return Err(Error::Precondition("sign must be +1 or -1".into()));
    }
    require_adequate_companion(d)?;
    let composite = d.connected_sum(&d.mirror())?;
    if composite.writhe() != 0 {
        return Err(Error::Precondition(format!(
            "K # K* writhe is {} (expected 0)",
            composite.writhe()
        )));
    }
    let mut report = cable_report(&composite, sign, 2)?;
    let expected = 8 * d.n_crossings() as i64 + 1;
    if report.exact != Some(expected) {
        return Err(Error::Precondition(format!(
            "composite cable certificate check failed: exact {:?} vs 8c+1 = {expected}",
            report.exact
        )));
    }
    report.citations.push(Citation::Cor1_3);
    Ok(report)
}

/// Report for K_{p,2} # K2 where K is presented by the adequate diagram `d`
/// and K2 by the adequate diagram `d2`. Requires p = 2 wr(d) +- 1 so the
/// cable summand is admissible; the crossing numbers then add, giving the
/// exact value (4 c(K) + 1) + c(K2).
pub fn connect_sum_report(d: &Diagram, p: i64, d2: &Diagram) -> Result<CrossingReport> {
    require_adequate_companion(d2)?;
    let c2 = d2.n_crossings() as i64;

    let st = stats(d);
    if st.c == 0 {
        // The unknot companion makes K_{p,2} trivial; the sum is K2 itself.
        return Ok(CrossingReport {
            p,
            q: 2,
            case: CaseTag::Case1,
            lower_bound: c2,
            exact: Some(c2),
            constructed_diagram_crossings: d2.n_crossings(),
            adequacy_verdict: AdequacyVerdict::Adequate,
            admissible: false,
            citations: vec![Citation::Thm1_4],
            witness: d2.clone(),
        });
    }
    if !is_admissible_cable(&st, p, 2) {
        return Err(Error::Precondition(format!(
            "p = {p} is not admissible for this companion (need p = 2 wr +- 1 = {} or {})",
            2 * st.wr - 1,
            2 * st.wr + 1
        )));
    }

    let cable = cable_report(d, p, 2)?;
    let witness = cable.witness.connected_sum(d2)?;
    let value = cable.exact.expect("admissible cable reports are exact") + c2;
    if witness.n_crossings() as i64 != value {
        return Err(Error::Precondition(format!(
            "connect-sum certificate check failed: witness {} vs {value}",
            witness.n_crossings()
        )));
    }
    Ok(CrossingReport {
        p,
        q: 2,
        case: cable.case,
        lower_bound: value,
        exact: Some(value),
        constructed_diagram_crossings: witness.n_crossings(),
        adequacy_verdict: AdequacyVerdict::NonAdequate,
        admissible: true,
        citations: vec![Citation::Thm1_4, Citation::Cor1_2],
        witness,
    })
}
