//! Exact degree-aggregated Möbius coefficients, their summatory function
//! M(X), normalized ratios M(X)/q^(X/2), and the closed forms for those
//! ratios.
//!
//! The coefficient c_N is the sum of mu over effective divisors of degree N.
//! It falls out of 1/Z(u) = (1 - u)(1 - qu)/P(u): with s_N the coefficients
//! of 1/P(u), c_N = s_N - (1 + q) s_{N-1} + q s_{N-2}.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::isogeny::IsogenyClass;
use crate::zeta::lpoly_inverse_coefficients;

/// The exact coefficients c_0..c_N of 1/Z(u).
#[derive(Debug, Clone, PartialEq)]
pub struct MobiusSeries {
    cls: IsogenyClass,
    coeffs: Vec<BigInt>,
}

impl MobiusSeries {
    pub fn class(&self) -> &IsogenyClass {
        &self.cls
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }
}

/// c_0..c_{n_max} by the linear recurrence through s_N.
pub fn mobius_coefficients(cls: &IsogenyClass, n_max: usize) -> MobiusSeries {
    let s = lpoly_inverse_coefficients(cls, n_max);
    let one_plus_q = BigInt::from(cls.q().q() + 1);
    let q = BigInt::from(cls.q().q());
    let coeffs = (0..=n_max)
        .map(|n| {
            let mut c = s[n].clone();
            if n >= 1 {
                c -= &one_plus_q * &s[n - 1];
            }
            if n >= 2 {
                c += &q * &s[n - 2];
            }
            c
        })
        .collect();
    MobiusSeries {
        cls: *cls,
        coeffs,
    }
}

/// Exact values M(1)..M(X_max) together with the normalized ratios
/// M(X)/q^(X/2).
#[derive(Debug, Clone, PartialEq)]
pub struct MertensTrajectory {
    cls: IsogenyClass,
    sums: Vec<BigInt>,
    ratios: Vec<f64>,
}

impl MertensTrajectory {
    pub fn class(&self) -> &IsogenyClass {
        &self.cls
    }

    /// M(1)..M(X_max); index X - 1 holds M(X).
    pub fn sums(&self) -> &[BigInt] {
        &self.sums
    }

    pub fn sum(&self, x: usize) -> &BigInt {
        &self.sums[x - 1]
    }

    /// M(X)/q^(X/2) for X = 1..=X_max, computed from the exact integers.
    pub fn ratios(&self) -> &[f64] {
        &self.ratios
    }

    pub fn ratio(&self, x: usize) -> f64 {
        self.ratios[x - 1]
    }
}

/// Prefix sums M(X) = sum_{N=0}^{X-1} c_N with exact normalized ratios.
pub fn mertens_sums(cls: &IsogenyClass, x_max: usize) -> MertensTrajectory {
    assert!(x_max >= 1, "x_max must be positive");
    let series = mobius_coefficients(cls, x_max - 1);
    let q = cls.q().q();
    let mut sums = Vec::with_capacity(x_max);
    let mut acc = BigInt::zero();
    for c in series.coefficients() {
        acc += c;
        sums.push(acc.clone());
    }
    let ratios = sums
        .iter()
        .enumerate()
        .map(|(i, m)| exact_ratio(m, q, (i + 1) as u64))
        .collect();
    MertensTrajectory {
        cls: *cls,
        sums,
        ratios,
    }
}

/// sign(M) * sqrt(M^2 / q^X), evaluated from the exact rational M^2/q^X so
/// the precision does not degrade with X.
pub fn exact_ratio(m: &BigInt, q: u64, x: u64) -> f64 {
    if m.is_zero() {
        return 0.0;
    }
    let num = m * m;
    let den = BigInt::from(q).pow(x as u32);
    let value = big_ratio_to_f64(&num, &den).sqrt();
    if m.is_negative() {
        -value
    } else {
        value
    }
}

/// num/den for positive big integers, scaling both down so they fit the f64
/// exponent range before dividing.
fn big_ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    let top = num.bits().max(den.bits());
    let shift = top.saturating_sub(900);
    let n = (num >> shift).to_f64().expect("shifted numerator fits");
    let d = (den >> shift).to_f64().expect("shifted denominator fits");
    debug_assert!(d > 0.0, "denominator vanished in scaling");
    n / d
}

/// M(X)/q^(X/2) from the closed forms: the oscillatory form for simple
/// zeroes, the linear-growth form for a = ±2*sqrt(q).
pub fn closed_form_ratio(cls: &IsogenyClass, x: u64) -> f64 {
    assert!(x >= 1, "X must be positive");
    let q = cls.q().q() as f64;
    let a = cls.trace() as f64;
    if cls.case().is_double_zero() {
        // two explicit branches keyed on the sign of a
        let root_q = (cls.q().sqrt().expect("m even when a = ±2 sqrt q")) as f64;
        if cls.trace() > 0 {
            -(1.0 - 1.0 / root_q) * x as f64 + 1.0
        } else {
            let sign = if x % 2 == 0 { 1.0 } else { -1.0 };
            -sign * (1.0 + 1.0 / root_q) * x as f64 + sign
        }
    } else {
        let kappa = (a - 2.0) / (4.0 * q - a * a).sqrt();
        let xt = reduced_angle(cls, x);
        xt.cos() - kappa * xt.sin()
    }
}

/// X * theta, reduced mod 2 pi exactly for rational angles so large X does
/// not lose precision.
fn reduced_angle(cls: &IsogenyClass, x: u64) -> f64 {
    use crate::isogeny::ThetaKind;
    match cls.case().theta_kind() {
        ThetaKind::Rational { k, n } => {
            let j = (x % (2 * n as u64)) * k as u64 % (2 * n as u64);
            j as f64 * std::f64::consts::PI / n as f64
        }
        ThetaKind::Irrational => x as f64 * cls.theta(),
    }
}

/// amplitude^2 = 4(q + 1 - a)/(4q - a^2) as an exact rational; None for
/// double zeroes. The limsup of an irrational-angle class is its square
/// root.
pub fn amplitude_squared_exact(cls: &IsogenyClass) -> Option<num_rational::BigRational> {
    if cls.case().is_double_zero() {
        return None;
    }
    let q = cls.q().q() as i128;
    let a = cls.trace() as i128;
    let num = BigInt::from(4 * (q + 1 - a));
    let den = BigInt::from(4 * q - a * a);
    Some(num_rational::BigRational::new(num, den))
}

/// The amplitude-phase form of the simple-zero closed form:
/// M(X)/q^(X/2) = amplitude * cos(omega + X*theta).
///
/// amplitude = 2*sqrt((q + 1 - a)/(4q - a^2)) = sqrt(1 + (a-2)^2/(4q - a^2)),
/// omega = arctan((a - 2)/sqrt(4q - a^2)) in (-pi/2, pi/2).
pub fn amplitude_and_phase(cls: &IsogenyClass) -> Result<(f64, f64)> {
    if cls.case().is_double_zero() {
        return Err(Error::DoubleZero {
            q: cls.q().q(),
            a: cls.trace(),
        });
    }
    let q = cls.q().q() as f64;
    let a = cls.trace() as f64;
    let denom = 4.0 * q - a * a;
    let amplitude = (1.0 + (a - 2.0) * (a - 2.0) / denom).sqrt();
    let omega = ((a - 2.0) / denom.sqrt()).atan();
    Ok((amplitude, omega))
}
