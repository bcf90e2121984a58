//! Waterhouse classification of admissible Frobenius traces.
//!
//! An integer a is the trace of Frobenius for some elliptic curve over F_q,
//! q = p^m, exactly when one of ten mutually exclusive conditions holds. Each
//! condition pins the Frobenius angle theta = arccos(a / (2*sqrt(q))): the
//! ordinary case gives an irrational multiple of pi, the nine special cases
//! give fixed rational multiples.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimePower;

/// The ten Waterhouse sub-cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaterhouseCase {
    /// a not divisible by p, a^2 < 4q; theta/pi irrational.
    C1,
    /// a = 2*sqrt(q), m even; theta = 0.
    C2i,
    /// a = -2*sqrt(q), m even; theta = pi.
    C2ii,
    /// a = sqrt(q), m even, p != 1 mod 3; theta = pi/3.
    C3i,
    /// a = -sqrt(q), m even, p != 1 mod 3; theta = 2pi/3.
    C3ii,
    /// a = sqrt(2q), p = 2, m odd; theta = pi/4.
    C4i,
    /// a = -sqrt(2q), p = 2, m odd; theta = 3pi/4.
    C4ii,
    /// a = sqrt(3q), p = 3, m odd; theta = pi/6.
    C4iii,
    /// a = -sqrt(3q), p = 3, m odd; theta = 5pi/6.
    C4iv,
    /// a = 0, m odd or (m even and p != 1 mod 4); theta = pi/2.
    C5,
}

/// Rational-vs-irrational shape of the Frobenius angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    Irrational,
    /// theta = k*pi/n in lowest terms.
    Rational { k: u32, n: u32 },
}

impl WaterhouseCase {
    pub const ALL: [WaterhouseCase; 10] = [
        WaterhouseCase::C1,
        WaterhouseCase::C2i,
        WaterhouseCase::C2ii,
        WaterhouseCase::C3i,
        WaterhouseCase::C3ii,
        WaterhouseCase::C4i,
        WaterhouseCase::C4ii,
        WaterhouseCase::C4iii,
        WaterhouseCase::C4iv,
        WaterhouseCase::C5,
    ];

    /// Short tag used in machine output.
    pub fn tag(&self) -> &'static str {
        match self {
            WaterhouseCase::C1 => "1",
            WaterhouseCase::C2i => "2i",
            WaterhouseCase::C2ii => "2ii",
            WaterhouseCase::C3i => "3i",
            WaterhouseCase::C3ii => "3ii",
            WaterhouseCase::C4i => "4i",
            WaterhouseCase::C4ii => "4ii",
            WaterhouseCase::C4iii => "4iii",
            WaterhouseCase::C4iv => "4iv",
            WaterhouseCase::C5 => "5",
        }
    }

    pub fn theta_kind(&self) -> ThetaKind {
        match self {
            WaterhouseCase::C1 => ThetaKind::Irrational,
            WaterhouseCase::C2i => ThetaKind::Rational { k: 0, n: 1 },
            WaterhouseCase::C2ii => ThetaKind::Rational { k: 1, n: 1 },
            WaterhouseCase::C3i => ThetaKind::Rational { k: 1, n: 3 },
            WaterhouseCase::C3ii => ThetaKind::Rational { k: 2, n: 3 },
            WaterhouseCase::C4i => ThetaKind::Rational { k: 1, n: 4 },
            WaterhouseCase::C4ii => ThetaKind::Rational { k: 3, n: 4 },
            WaterhouseCase::C4iii => ThetaKind::Rational { k: 1, n: 6 },
            WaterhouseCase::C4iv => ThetaKind::Rational { k: 5, n: 6 },
            WaterhouseCase::C5 => ThetaKind::Rational { k: 1, n: 2 },
        }
    }

    /// The zeta function has a double zero exactly for a = ±2*sqrt(q).
    pub fn is_double_zero(&self) -> bool {
        matches!(self, WaterhouseCase::C2i | WaterhouseCase::C2ii)
    }

    /// Period of X mod which the normalized ratio repeats: 2n for
    /// theta = k*pi/n. None for the irrational case.
    pub fn period(&self) -> Option<u64> {
        match self.theta_kind() {
            ThetaKind::Irrational => None,
            ThetaKind::Rational { n, .. } => Some(2 * n as u64),
        }
    }

    /// Exact angle label ("pi/4", "2pi/3", ...); None for the irrational case.
    pub fn theta_label(&self) -> Option<&'static str> {
        match self {
            WaterhouseCase::C1 => None,
            WaterhouseCase::C2i => Some("0"),
            WaterhouseCase::C2ii => Some("pi"),
            WaterhouseCase::C3i => Some("pi/3"),
            WaterhouseCase::C3ii => Some("2pi/3"),
            WaterhouseCase::C4i => Some("pi/4"),
            WaterhouseCase::C4ii => Some("3pi/4"),
            WaterhouseCase::C4iii => Some("pi/6"),
            WaterhouseCase::C4iv => Some("5pi/6"),
            WaterhouseCase::C5 => Some("pi/2"),
        }
    }
}

impl fmt::Display for WaterhouseCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// An admissible (q, a) pair: the isogeny class of curves over F_q with
/// Frobenius trace a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsogenyClass {
    q: PrimePower,
    trace: i64,
    case: WaterhouseCase,
    theta: f64,
}

impl IsogenyClass {
    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn trace(&self) -> i64 {
        self.trace
    }

    pub fn case(&self) -> WaterhouseCase {
        self.case
    }

    /// Frobenius angle in [0, pi]; exact k*pi/n for the rational cases.
    pub fn theta(&self) -> f64 {
        self.theta
    }
}

impl fmt::Display for IsogenyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(q = {}, a = {})", self.q.q(), self.trace)
    }
}

fn hasse_ok(q: &PrimePower, a: i64) -> bool {
    (a as i128) * (a as i128) <= 4 * q.q() as i128
}

fn cond_c2(q: &PrimePower, a: i64) -> Option<WaterhouseCase> {
    let aa = (a as i128) * (a as i128);
    if aa == 4 * q.q() as i128 && q.is_square() {
        Some(if a > 0 {
            WaterhouseCase::C2i
        } else {
            WaterhouseCase::C2ii
        })
    } else {
        None
    }
}

fn cond_c3(q: &PrimePower, a: i64) -> Option<WaterhouseCase> {
    let aa = (a as i128) * (a as i128);
    if aa == q.q() as i128 && q.is_square() && q.p() % 3 != 1 {
        Some(if a > 0 {
            WaterhouseCase::C3i
        } else {
            WaterhouseCase::C3ii
        })
    } else {
        None
    }
}

fn cond_c4(q: &PrimePower, a: i64) -> Option<WaterhouseCase> {
    let aa = (a as i128) * (a as i128);
    let odd_m = q.m() % 2 == 1;
    if aa == 2 * q.q() as i128 && q.p() == 2 && odd_m {
        Some(if a > 0 {
            WaterhouseCase::C4i
        } else {
            WaterhouseCase::C4ii
        })
    } else if aa == 3 * q.q() as i128 && q.p() == 3 && odd_m {
        Some(if a > 0 {
            WaterhouseCase::C4iii
        } else {
            WaterhouseCase::C4iv
        })
    } else {
        None
    }
}

fn cond_c5(q: &PrimePower, a: i64) -> Option<WaterhouseCase> {
    if a == 0 && (q.m() % 2 == 1 || q.p() % 4 != 1) {
        Some(WaterhouseCase::C5)
    } else {
        None
    }
}

fn cond_c1(q: &PrimePower, a: i64) -> Option<WaterhouseCase> {
    let aa = (a as i128) * (a as i128);
    if a.rem_euclid(q.p() as i64) != 0 && aa < 4 * q.q() as i128 {
        Some(WaterhouseCase::C1)
    } else {
        None
    }
}

/// Every condition matching (q, a). The conditions are mutually exclusive,
/// so this has at most one entry; the exclusivity test relies on seeing them
/// all independently.
#[cfg(test)]
fn matching_conditions(q: &PrimePower, a: i64) -> Vec<WaterhouseCase> {
    [cond_c2(q, a), cond_c3(q, a), cond_c4(q, a), cond_c5(q, a), cond_c1(q, a)]
        .into_iter()
        .flatten()
        .collect()
}

fn inadmissible_reason(q: &PrimePower, a: i64) -> String {
    if a == 0 {
        "a = 0 requires m odd or p != 1 (mod 4); here p ≡ 1 (mod 4) with m even".to_string()
    } else if (a as i128) * (a as i128) == q.q() as i128 {
        "a = ±sqrt(q) requires p != 1 (mod 3); here p ≡ 1 (mod 3)".to_string()
    } else {
        format!("a ≡ 0 (mod {}) and a matches no supersingular form", q.p())
    }
}

/// Classifies (q, a) into its Waterhouse case.
///
/// Conditions are tested in the order C2, C3, C4, C5, C1; they are mutually
/// exclusive so the order is immaterial (the test suite checks exclusivity
/// exhaustively for q <= 2^12).
pub fn classify(q: PrimePower, a: i64) -> Result<IsogenyClass> {
    if !hasse_ok(&q, a) {
        return Err(Error::HasseViolation { q: q.q(), a });
    }
    let case = cond_c2(&q, a)
        .or_else(|| cond_c3(&q, a))
        .or_else(|| cond_c4(&q, a))
        .or_else(|| cond_c5(&q, a))
        .or_else(|| cond_c1(&q, a))
        .ok_or_else(|| Error::Inadmissible {
            q: q.q(),
            a,
            reason: inadmissible_reason(&q, a),
        })?;
    let theta = match case.theta_kind() {
        ThetaKind::Irrational => angle_from_trace(&q, a),
        ThetaKind::Rational { k, n } => k as f64 * std::f64::consts::PI / n as f64,
    };
    Ok(IsogenyClass {
        q,
        trace: a,
        case,
        theta,
    })
}

/// Convenience wrapper taking the field order directly.
pub fn classify_order(q: u64, a: i64) -> Result<IsogenyClass> {
    classify(PrimePower::from_order(q)?, a)
}

/// All traces a admissible over F_q, ascending.
pub fn admissible_traces(q: PrimePower) -> Vec<i64> {
    let bound = q.hasse_limit();
    (-bound..=bound)
        .filter(|&a| classify(q, a).is_ok())
        .collect()
}

fn angle_from_trace(q: &PrimePower, a: i64) -> f64 {
    (a as f64 / (4.0 * q.q() as f64).sqrt()).acos()
}

/// theta = arccos(a / (2*sqrt(q))) in [0, pi]; only the Hasse bound is
/// required, not admissibility.
pub fn frobenius_angle(q: PrimePower, a: i64) -> Result<f64> {
    if !hasse_ok(&q, a) {
        return Err(Error::HasseViolation { q: q.q(), a });
    }
    Ok(angle_from_trace(&q, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::prime_powers_up_to;
    use std::f64::consts::PI;

    fn pp(q: u64) -> PrimePower {
        PrimePower::from_order(q).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = classify(pp(2), 2).unwrap();
        assert_eq!(c.case(), WaterhouseCase::C4i);
        assert!((c.theta() - PI / 4.0).abs() < 1e-12);

        assert!(matches!(
            classify(pp(25), 0),
            Err(Error::Inadmissible { .. })
        ));
        assert_eq!(
            classify(pp(5), 5),
            Err(Error::HasseViolation { q: 5, a: 5 })
        );

        let c = classify(pp(7), 3).unwrap();
        assert_eq!(c.case(), WaterhouseCase::C1);
        assert!((c.theta() - (3.0 / (2.0 * 7f64.sqrt())).acos()).abs() < 1e-12);
    }

    #[test]
    fn inadmissible_reasons_are_specific() {
        let err = classify(pp(25), 0).unwrap_err();
        assert!(err.to_string().contains("p ≡ 1 (mod 4)"), "{err}");
        let err = classify(pp(49), 7).unwrap_err();
        assert!(err.to_string().contains("p ≡ 1 (mod 3)"), "{err}");
        let err = classify(pp(8), 2).unwrap_err();
        assert!(err.to_string().contains("mod 2"), "{err}");
    }

    #[test]
    fn admissible_trace_sets() {
        assert_eq!(admissible_traces(pp(2)), vec![-2, -1, 0, 1, 2]);
        assert_eq!(admissible_traces(pp(3)), vec![-3, -2, -1, 0, 1, 2, 3]);
        assert_eq!(
            admissible_traces(pp(4)),
            vec![-4, -3, -2, -1, 0, 1, 2, 3, 4]
        );
        // over F_8 the traces ±2 are not realized
        assert_eq!(
            admissible_traces(pp(8)),
            vec![-5, -4, -3, -1, 0, 1, 3, 4, 5]
        );
        assert_eq!(
            admissible_traces(pp(16)),
            vec![-8, -7, -5, -4, -3, -1, 0, 1, 3, 4, 5, 7, 8]
        );
    }

    #[test]
    fn angle_examples() {
        let c = classify(pp(4), 2).unwrap();
        assert_eq!(c.case(), WaterhouseCase::C3i);
        assert!((c.theta() - PI / 3.0).abs() < 1e-12);
        let c = classify(pp(9), 0).unwrap();
        assert!((c.theta() - PI / 2.0).abs() < 1e-12);
        let c = classify(pp(2), -2).unwrap();
        assert_eq!(c.case(), WaterhouseCase::C4ii);
        assert!((c.theta() - 3.0 * PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn rational_angles_match_arccos() {
        for q in prime_powers_up_to(64) {
            for a in admissible_traces(q) {
                let cls = classify(q, a).unwrap();
                let acos = frobenius_angle(q, a).unwrap();
                assert!(
                    (cls.theta() - acos).abs() < 1e-12,
                    "theta mismatch at q={} a={}",
                    q.q(),
                    a
                );
            }
        }
    }

    #[test]
    fn exhaustive_exclusivity_up_to_4096() {
        for q in prime_powers_up_to(1 << 12) {
            let bound = q.hasse_limit();
            for a in -bound..=bound {
                let matches = matching_conditions(&q, a);
                assert!(
                    matches.len() <= 1,
                    "conditions overlap at q={} a={}: {:?}",
                    q.q(),
                    a,
                    matches
                );
                match classify(q, a) {
                    Ok(cls) => assert_eq!(vec![cls.case()], matches),
                    Err(Error::Inadmissible { .. }) => assert!(matches.is_empty()),
                    Err(e) => panic!("unexpected error {e} at q={} a={}", q.q(), a),
                }
            }
        }
    }

    #[test]
    fn trace_sets_symmetric_and_contain_zero_for_odd_m() {
        for q in prime_powers_up_to(512) {
            let traces = admissible_traces(q);
            let negated: Vec<i64> = traces.iter().rev().map(|&a| -a).collect();
            assert_eq!(traces, negated, "asymmetry at q={}", q.q());
            if q.m() % 2 == 1 {
                assert!(traces.contains(&0), "0 missing at q={}", q.q());
            }
        }
    }

    #[test]
    fn theta_strictly_decreases_in_trace() {
        for q in prime_powers_up_to(128) {
            let mut last: Option<f64> = None;
            for a in admissible_traces(q) {
                let theta = classify(q, a).unwrap().theta();
                if let Some(prev) = last {
                    assert!(theta < prev, "theta not decreasing at q={} a={}", q.q(), a);
                }
                last = Some(theta);
            }
        }
    }

    #[test]
    fn sqrt_q_overlap_resolves_to_c3() {
        // q = 4, a = 2 satisfies a = sqrt(q); case (1) is ruled out because
        // a ≡ 0 (mod 2)
        let c = classify(pp(4), 2).unwrap();
        assert_eq!(c.case(), WaterhouseCase::C3i);
    }

    #[test]
    fn frobenius_angle_requires_hasse_only() {
        // (8, 2) is inadmissible but satisfies the Hasse bound
        assert!(classify(pp(8), 2).is_err());
        let theta = frobenius_angle(pp(8), 2).unwrap();
        assert!((theta - (2.0 / (2.0 * 8f64.sqrt())).acos()).abs() < 1e-12);
        assert!(frobenius_angle(pp(2), 3).is_err());
    }

    #[test]
    fn case_metadata_is_consistent() {
        for case in WaterhouseCase::ALL {
            match case.theta_kind() {
                ThetaKind::Irrational => {
                    assert_eq!(case, WaterhouseCase::C1);
                    assert_eq!(case.period(), None);
                }
                ThetaKind::Rational { k, n } => {
                    assert!(n > 0 && k < 2 * n);
                    assert_eq!(case.period(), Some(2 * n as u64));
                    assert!(case.theta_label().is_some());
                }
            }
        }
    }
}
