//! Deciding the Mertens bound |M(X)| <= q^(X/2) per isogeny class: the
//! three-condition trace criterion, exact limsup of |M(X)|/q^(X/2), exact
//! per-residue ratio tables for rational-angle classes, and exact violation
//! and witness scans.
//!
//! Rational-angle limsups are obtained by maximizing the closed form over
//! one period in exact quadratic-field arithmetic rather than from
//! hand-transcribed tables; the characteristic-2 and -3 supersingular cases
//! are exactly where hand transcription slips (see the regression tests).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{prime_powers_up_to, PrimePower};
use crate::isogeny::{admissible_traces, classify, IsogenyClass, ThetaKind, WaterhouseCase};
use crate::mobius::amplitude_and_phase;
use crate::par::map_collect;
use crate::quad::QuadExt;

/// Which of the three trace conditions makes the bound hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCondition {
    /// a = 2 with p != 2, or a = 2 with p = 2 and m = 1.
    T1,
    /// a = sqrt(q) with m even and p != 1 (mod 3).
    T2,
    /// a = 0 (admissible).
    T3,
}

impl TheoremCondition {
    pub fn label(&self) -> &'static str {
        match self {
            TheoremCondition::T1 => "T1",
            TheoremCondition::T2 => "T2",
            TheoremCondition::T3 => "T3",
        }
    }
}

impl fmt::Display for TheoremCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// limsup of |M(X)|/q^(X/2); infinite exactly for a = ±2*sqrt(q).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limsup {
    Finite(f64),
    Infinite,
}

impl Limsup {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Limsup::Infinite)
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            Limsup::Finite(v) => Some(*v),
            Limsup::Infinite => None,
        }
    }
}

impl fmt::Display for Limsup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limsup::Finite(v) => write!(f, "{v}"),
            Limsup::Infinite => f.write_str("infinite"),
        }
    }
}

/// Whether the Mertens bound holds for a class, with the matched condition
/// and the limsup.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    cls: IsogenyClass,
    holds: bool,
    condition: Option<TheoremCondition>,
    limsup: Limsup,
}

impl Verdict {
    pub fn class(&self) -> &IsogenyClass {
        &self.cls
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn condition(&self) -> Option<TheoremCondition> {
        self.condition
    }

    pub fn limsup(&self) -> Limsup {
        self.limsup
    }
}

/// Evaluates the three trace conditions directly on (q, a), independently of
/// classification and limsup.
pub fn theorem_condition(q: &PrimePower, a: i64) -> Option<TheoremCondition> {
    if a == 2 && (q.p() != 2 || q.m() == 1) {
        Some(TheoremCondition::T1)
    } else if q.sqrt().map(|r| a >= 0 && a as u64 == r) == Some(true) && q.p() % 3 != 1 {
        Some(TheoremCondition::T2)
    } else if a == 0 && (q.m() % 2 == 1 || q.p() % 4 != 1) {
        Some(TheoremCondition::T3)
    } else {
        None
    }
}

/// Classifies (q, a) and decides the Mertens bound for it. The condition
/// check and the limsup are computed independently and cross-checked.
pub fn verdict(q: PrimePower, a: i64) -> Result<Verdict> {
    let cls = classify(q, a)?;
    let condition = theorem_condition(&q, a);
    let limsup = limsup_ratio(&cls);
    let holds = condition.is_some();
    debug_assert_eq!(
        holds,
        limsup_le_one_exact(&cls),
        "condition/limsup mismatch at {cls}"
    );
    Ok(Verdict {
        cls,
        holds,
        condition,
        limsup,
    })
}

/// limsup |M(X)|/q^(X/2): infinite for double zeroes, the closed-form
/// amplitude for irrational angles, and exact period maximization for
/// rational angles.
pub fn limsup_ratio(cls: &IsogenyClass) -> Limsup {
    if cls.case().is_double_zero() {
        return Limsup::Infinite;
    }
    match cls.case().theta_kind() {
        ThetaKind::Irrational => {
            let (amplitude, _) = amplitude_and_phase(cls).expect("simple zero");
            Limsup::Finite(amplitude)
        }
        ThetaKind::Rational { .. } => {
            let profile = residue_table(cls).expect("rational simple-zero case");
            Limsup::Finite(profile.max_abs().to_f64())
        }
    }
}

/// The exact limsup for rational-angle simple-zero classes; None when the
/// angle is irrational or the zero is double.
pub fn limsup_exact(cls: &IsogenyClass) -> Option<QuadExt> {
    residue_table(cls).ok().map(|p| p.max_abs().clone())
}

/// Exact decision limsup <= 1, used to cross-check the trace conditions.
fn limsup_le_one_exact(cls: &IsogenyClass) -> bool {
    if cls.case().is_double_zero() {
        return false;
    }
    match cls.case().theta_kind() {
        // amplitude = sqrt(1 + (a-2)^2/(4q - a^2)) <= 1 iff a = 2
        ThetaKind::Irrational => cls.trace() == 2,
        ThetaKind::Rational { .. } => {
            let profile = residue_table(cls).expect("rational simple-zero case");
            profile.max_abs().abs_cmp(&QuadExt::from_int(1, profile.radicand()))
                != std::cmp::Ordering::Greater
        }
    }
}

/// The exact periodic values of M(X)/q^(X/2) for a rational-angle class.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioProfile {
    cls: IsogenyClass,
    period: u64,
    values: Vec<QuadExt>,
    max_abs: QuadExt,
}

impl RatioProfile {
    pub fn class(&self) -> &IsogenyClass {
        &self.cls
    }

    /// 2n for theta = k*pi/n in lowest terms.
    pub fn period(&self) -> u64 {
        self.period
    }

    /// Entry r is the exact ratio at every X ≡ r (mod period).
    pub fn values(&self) -> &[QuadExt] {
        &self.values
    }

    pub fn value_at(&self, x: u64) -> &QuadExt {
        &self.values[(x % self.period) as usize]
    }

    /// max |value| over the period — the limsup, attained infinitely often.
    pub fn max_abs(&self) -> &QuadExt {
        &self.max_abs
    }

    /// Residues r where |value| equals the maximum.
    pub fn max_residues(&self) -> Vec<u64> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.abs_cmp(&self.max_abs) == std::cmp::Ordering::Equal)
            .map(|(r, _)| r as u64)
            .collect()
    }

    /// The common quadratic field: all values live in Q(sqrt(d)).
    pub fn radicand(&self) -> u64 {
        self.values
            .iter()
            .find(|v| !v.is_rational())
            .map(|v| v.radicand())
            .unwrap_or(1)
    }
}

/// Per-residue exact ratio values cos(X theta) - kappa sin(X theta) with
/// kappa = (a - 2)/sqrt(4q - a^2), evaluated symbolically in Q(sqrt(d)).
///
/// Errors with [`Error::DoubleZero`] for a = ±2 sqrt(q) (the ratio grows
/// linearly there) and [`Error::NotPeriodic`] for irrational angles.
pub fn residue_table(cls: &IsogenyClass) -> Result<RatioProfile> {
    if cls.case().is_double_zero() {
        return Err(Error::DoubleZero {
            q: cls.q().q(),
            a: cls.trace(),
        });
    }
    let (k, n) = match cls.case().theta_kind() {
        ThetaKind::Irrational => return Err(Error::NotPeriodic),
        ThetaKind::Rational { k, n } => (k as u64, n),
    };
    let d = ambient_radicand(cls);
    let kappa = exact_kappa(cls, d);
    let period = 2 * n as u64;
    let values: Vec<QuadExt> = (0..period)
        .map(|r| {
            let j = r * k % period;
            let (cos, sin) = unit_trig(j, n, d);
            cos.sub(&kappa.mul(&sin))
        })
        .collect();
    let max_abs = values
        .iter()
        .max_by(|x, y| x.abs_cmp(y))
        .expect("period >= 2")
        .abs();
    Ok(RatioProfile {
        cls: *cls,
        period,
        values,
        max_abs,
    })
}

/// The squarefree radicand of the field containing the case's table values.
fn ambient_radicand(cls: &IsogenyClass) -> u64 {
    match cls.case() {
        WaterhouseCase::C3i
        | WaterhouseCase::C3ii
        | WaterhouseCase::C4iii
        | WaterhouseCase::C4iv => 3,
        WaterhouseCase::C4i | WaterhouseCase::C4ii => 2,
        WaterhouseCase::C5 => {
            if cls.q().is_square() {
                1
            } else {
                cls.q().p()
            }
        }
        _ => unreachable!("no residue table for C1/C2"),
    }
}

/// kappa = (a - 2)/sqrt(4q - a^2) as an exact element of Q(sqrt(d)).
fn exact_kappa(cls: &IsogenyClass, d: u64) -> QuadExt {
    let a = cls.trace();
    let q = cls.q();
    let ratio = |num: i64, den: u64| BigRational::new(BigInt::from(num), BigInt::from(den));
    match cls.case() {
        // 4q - a^2 = 3q, sqrt = sqrt(3) * sqrt(q): (a-2)/(sqrt3 r) = (a-2) sqrt3 / (3r)
        WaterhouseCase::C3i | WaterhouseCase::C3ii => {
            let r = q.sqrt().expect("m even");
            QuadExt::new(BigRational::zero(), ratio(a - 2, 3 * r), d)
        }
        // 4q - a^2 = 2q = a^2, sqrt = |a|: rational (a-2)/|a|
        WaterhouseCase::C4i | WaterhouseCase::C4ii => {
            QuadExt::rational(ratio(a - 2, a.unsigned_abs()), d)
        }
        // 4q - a^2 = q = 3^m, sqrt = |a|/sqrt(3): (a-2) sqrt3 / |a|
        WaterhouseCase::C4iii | WaterhouseCase::C4iv => {
            QuadExt::new(BigRational::zero(), ratio(a - 2, a.unsigned_abs()), d)
        }
        // kappa = -1/sqrt(q)
        WaterhouseCase::C5 => {
            if let Some(r) = q.sqrt() {
                QuadExt::rational(ratio(-1, r), d)
            } else {
                // sqrt(q) = p^((m-1)/2) sqrt(p)
                let scale = q.p().pow((q.m() + 1) / 2);
                QuadExt::new(BigRational::zero(), ratio(-1, scale), d)
            }
        }
        _ => unreachable!("no residue table for C1/C2"),
    }
}

/// Exact (cos, sin) of j*pi/n for n in {1, 2, 3, 4, 6}, expressed in
/// Q(sqrt(d)); the irrational entries are sqrt(3)/2 (n = 3, 6) and
/// sqrt(2)/2 (n = 4), matching the ambient d of every rational-angle case.
fn unit_trig(j: u64, n: u32, d: u64) -> (QuadExt, QuadExt) {
    // codes: 0 -> 0, ±1 -> ±1, ±2 -> ±1/2, ±3 -> ±sqrt(d)/2
    let decode = |code: i32| -> QuadExt {
        let half = |s: i64| BigRational::new(BigInt::from(s), BigInt::from(2));
        match code {
            0 => QuadExt::zero(d),
            1 => QuadExt::from_int(1, d),
            -1 => QuadExt::from_int(-1, d),
            2 => QuadExt::rational(half(1), d),
            -2 => QuadExt::rational(half(-1), d),
            3 => QuadExt::new(BigRational::zero(), half(1), d),
            -3 => QuadExt::new(BigRational::zero(), half(-1), d),
            _ => unreachable!(),
        }
    };
    let j = j as usize;
    let (cos, sin): (i32, i32) = match n {
        1 => ([1, -1][j], 0),
        2 => ([1, 0, -1, 0][j], [0, 1, 0, -1][j]),
        3 => ([1, 2, -2, -1, -2, 2][j], [0, 3, 3, 0, -3, -3][j]),
        4 => (
            [1, 3, 0, -3, -1, -3, 0, 3][j],
            [0, 3, 1, 3, 0, -3, -1, -3][j],
        ),
        6 => (
            [1, 3, 2, 0, -2, -3, -1, -3, -2, 0, 2, 3][j],
            [0, 2, 3, 1, 3, 2, 0, -2, -3, -1, -3, -2][j],
        ),
        _ => unreachable!("no rational-angle case has n = {n}"),
    };
    (decode(cos), decode(sin))
}

/// Result of an exact scan for violations M(X)^2 > q^X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub x_max: u64,
    pub first_violation: Option<u64>,
    pub violation_count: u64,
}

/// Smallest X <= x_max with M(X)^2 > q^X (exact integers), or None.
pub fn conjecture_check_exact(cls: &IsogenyClass, x_max: u64) -> Option<u64> {
    scan_violations(cls, x_max, true).first_violation
}

/// Full scan: reports the first violation and how often violations occur in
/// the range, so both the "for all X" and the "sufficiently large X"
/// readings of the bound are observable.
pub fn conjecture_scan(cls: &IsogenyClass, x_max: u64) -> ConjectureReport {
    scan_violations(cls, x_max, false)
}

fn scan_violations(cls: &IsogenyClass, x_max: u64, stop_at_first: bool) -> ConjectureReport {
    assert!(x_max >= 1, "x_max must be positive");
    let a = BigInt::from(cls.trace());
    let q = BigInt::from(cls.q().q());

    // prefix sums of c_N collapse against (1 - u)(1 - qu):
    // M(X) = s_{X-1} - q s_{X-2} with s the inverse L-polynomial sequence
    let mut s_prev = BigInt::zero(); // s_{X-2}
    let mut s_cur = BigInt::one(); // s_{X-1} at X = 1
    let mut q_pow = BigInt::one();
    let mut first = None;
    let mut count = 0u64;
    for x in 1..=x_max {
        let m = &s_cur - &q * &s_prev;
        q_pow *= &q;
        if &m * &m > q_pow {
            count += 1;
            if first.is_none() {
                first = Some(x);
                if stop_at_first {
                    break;
                }
            }
        }
        let s_next = &a * &s_cur - &q * &s_prev;
        s_prev = std::mem::replace(&mut s_cur, s_next);
    }
    ConjectureReport {
        x_max,
        first_violation: first,
        violation_count: count,
    }
}

/// All X <= x_max with M(X)^2 > (1 - epsilon)^2 q^X, by exact rational
/// comparison. epsilon must lie in (0, 1).
pub fn witness_search(cls: &IsogenyClass, epsilon: &BigRational, x_max: u64) -> Vec<u64> {
    assert!(
        epsilon > &BigRational::zero() && epsilon < &BigRational::one(),
        "epsilon must lie in (0, 1)"
    );
    let threshold = {
        let t = BigRational::one() - epsilon;
        &t * &t
    };
    let thr_num = threshold.numer().clone();
    let thr_den = threshold.denom().clone();

    let a = BigInt::from(cls.trace());
    let q = BigInt::from(cls.q().q());
    let mut s_prev = BigInt::zero();
    let mut s_cur = BigInt::one();
    let mut q_pow = BigInt::one();
    let mut witnesses = Vec::new();
    for x in 1..=x_max {
        let m = &s_cur - &q * &s_prev;
        q_pow *= &q;
        if &m * &m * &thr_den > &thr_num * &q_pow {
            witnesses.push(x);
        }
        let s_next = &a * &s_cur - &q * &s_prev;
        s_prev = std::mem::replace(&mut s_cur, s_next);
    }
    witnesses
}

/// Parses a plain decimal string ("0.25") into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    let (whole, frac) = match digits.split_once('.') {
        Some((w, f)) => (w, f),
        None => (digits, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut num: BigInt = if whole.is_empty() {
        BigInt::zero()
    } else {
        whole.parse().ok()?
    };
    let mut den = BigInt::one();
    for c in frac.chars() {
        num = num * 10 + (c as u8 - b'0');
        den *= 10;
    }
    Some(BigRational::new(num * sign, den))
}

/// One row of a classification sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepEntry {
    pub verdict: Verdict,
    /// First X <= the scan bound with M(X)^2 > q^X, if any.
    pub first_violation: Option<u64>,
}

/// Verdicts for every admissible (q, a) with q <= q_max, each with an exact
/// violation scan up to scan_x_max. Rows are ordered by (q, a) regardless of
/// parallelism.
pub fn sweep(q_max: u64, scan_x_max: u64) -> Vec<SweepEntry> {
    sweep_impl(q_max, scan_x_max, true)
}

/// Sequential variant of [`sweep`], kept callable for benchmarking the
/// parallel speedup.
pub fn sweep_serial(q_max: u64, scan_x_max: u64) -> Vec<SweepEntry> {
    sweep_impl(q_max, scan_x_max, false)
}

fn sweep_impl(q_max: u64, scan_x_max: u64, parallel: bool) -> Vec<SweepEntry> {
    let pairs: Vec<(PrimePower, i64)> = prime_powers_up_to(q_max)
        .into_iter()
        .flat_map(|q| admissible_traces(q).into_iter().map(move |a| (q, a)))
        .collect();
    let work = |(q, a): (PrimePower, i64)| {
        let v = verdict(q, a).expect("pair is admissible");
        let first_violation = conjecture_check_exact(v.class(), scan_x_max);
        SweepEntry {
            verdict: v,
            first_violation,
        }
    };
    if parallel {
        map_collect(pairs, work)
    } else {
        pairs.into_iter().map(work).collect()
    }
}
