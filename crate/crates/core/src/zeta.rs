//! The numerator P(u) = 1 - au + qu^2 of the zeta function, exact point and
//! trace counts over extensions, and closed-point counts per degree.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::isogeny::IsogenyClass;

/// P(u) = 1 - au + qu^2, whose inverse zeroes have modulus sqrt(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPolynomial {
    trace: i64,
    q: u64,
}

impl LPolynomial {
    /// Coefficients (1, -a, q) of 1 - au + qu^2.
    pub fn coefficients(&self) -> (i64, i64, i64) {
        (1, -self.trace, self.q as i64)
    }

    /// a^2 - 4q, nonpositive for every admissible class.
    pub fn discriminant(&self) -> i128 {
        (self.trace as i128) * (self.trace as i128) - 4 * self.q as i128
    }

    pub fn trace(&self) -> i64 {
        self.trace
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

pub fn l_polynomial(cls: &IsogenyClass) -> LPolynomial {
    LPolynomial {
        trace: cls.trace(),
        q: cls.q().q(),
    }
}

/// Exact counts over the extension tower F_{q^k}, 1 <= k <= n:
/// traces a_k, rational point counts N_k, and closed points b_k of degree k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionCounts {
    traces: Vec<BigInt>,
    points: Vec<BigInt>,
    closed_points: Vec<BigInt>,
}

impl ExtensionCounts {
    /// a_k = gamma1^k + gamma2^k for k = 1..=n.
    pub fn traces(&self) -> &[BigInt] {
        &self.traces
    }

    /// N_k = q^k + 1 - a_k for k = 1..=n.
    pub fn points(&self) -> &[BigInt] {
        &self.points
    }

    /// b_k = number of closed points of degree k, k = 1..=n.
    pub fn closed_points(&self) -> &[BigInt] {
        &self.closed_points
    }

    pub fn trace(&self, k: usize) -> &BigInt {
        &self.traces[k - 1]
    }

    pub fn point_count(&self, k: usize) -> &BigInt {
        &self.points[k - 1]
    }

    pub fn closed_point_count(&self, k: usize) -> &BigInt {
        &self.closed_points[k - 1]
    }
}

/// Computes a_k by the linear recurrence a_{k+1} = a*a_k - q*a_{k-1}
/// (a_0 = 2), N_k = q^k + 1 - a_k, and b_d by Möbius inversion
/// d*b_d = sum_{e | d} mu(d/e) N_e.
pub fn extension_counts(cls: &IsogenyClass, n_max: usize) -> ExtensionCounts {
    assert!(n_max >= 1, "n_max must be positive");
    let a = BigInt::from(cls.trace());
    let q = BigInt::from(cls.q().q());

    let mut traces = Vec::with_capacity(n_max);
    let mut prev = BigInt::from(2); // a_0
    let mut cur = a.clone(); // a_1
    traces.push(cur.clone());
    for _ in 1..n_max {
        let next = &a * &cur - &q * &prev;
        prev = std::mem::replace(&mut cur, next);
        traces.push(cur.clone());
    }

    let mut points = Vec::with_capacity(n_max);
    let mut qk = BigInt::one();
    for ak in &traces {
        qk *= &q;
        points.push(&qk + 1 - ak);
    }

    let mut closed_points = Vec::with_capacity(n_max);
    for d in 1..=n_max {
        let mut sum = BigInt::zero();
        for e in 1..=d {
            if d % e == 0 {
                sum += BigInt::from(classical_mobius((d / e) as u64)) * &points[e - 1];
            }
        }
        let d_big = BigInt::from(d);
        debug_assert!((&sum % &d_big).is_zero(), "Möbius inversion not integral");
        let bd = sum / d_big;
        debug_assert!(!bd.is_negative(), "negative closed-point count");
        closed_points.push(bd);
    }

    ExtensionCounts {
        traces,
        points,
        closed_points,
    }
}

/// Coefficients s_0..s_n of 1/P(u): s_0 = 1, s_1 = a,
/// s_k = a*s_{k-1} - q*s_{k-2}. Reused by the Möbius series and the tests.
pub fn lpoly_inverse_coefficients(cls: &IsogenyClass, n_max: usize) -> Vec<BigInt> {
    let a = BigInt::from(cls.trace());
    let q = BigInt::from(cls.q().q());
    let mut s = Vec::with_capacity(n_max + 1);
    s.push(BigInt::one());
    if n_max >= 1 {
        s.push(a.clone());
    }
    for k in 2..=n_max {
        let next = &a * &s[k - 1] - &q * &s[k - 2];
        s.push(next);
    }
    s
}

/// Classical Möbius function on small positive integers.
pub(crate) fn classical_mobius(mut n: u64) -> i64 {
    debug_assert!(n >= 1);
    let mut prime_count = 0u32;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            prime_count += 1;
        }
        d += 1;
    }
    if n > 1 {
        prime_count += 1;
    }
    if prime_count % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{prime_powers_up_to, PrimePower};
    use crate::isogeny::{admissible_traces, classify};
    use num_rational::BigRational;

    fn cls(q: u64, a: i64) -> IsogenyClass {
        classify(PrimePower::from_order(q).unwrap(), a).unwrap()
    }

    #[test]
    fn l_polynomial_coefficients() {
        assert_eq!(l_polynomial(&cls(5, 2)).coefficients(), (1, -2, 5));
        let p = l_polynomial(&cls(4, 4));
        assert_eq!(p.coefficients(), (1, -4, 4));
        assert_eq!(p.discriminant(), 0); // (1 - 2u)^2
        assert_eq!(l_polynomial(&cls(3, 0)).coefficients(), (1, 0, 3));
    }

    #[test]
    fn discriminant_nonpositive_for_admissible() {
        for q in prime_powers_up_to(64) {
            for a in admissible_traces(q) {
                assert!(l_polynomial(&cls(q.q(), a)).discriminant() <= 0);
            }
        }
    }

    #[test]
    fn extension_count_examples() {
        let e = extension_counts(&cls(2, 2), 3);
        assert_eq!(e.point_count(1), &BigInt::from(1));
        assert_eq!(e.point_count(2), &BigInt::from(5));
        assert_eq!(e.closed_point_count(1), &BigInt::from(1));
        assert_eq!(e.closed_point_count(2), &BigInt::from(2));

        let e = extension_counts(&cls(3, 0), 2);
        assert_eq!(e.point_count(1), &BigInt::from(4));
        assert_eq!(e.point_count(2), &BigInt::from(16));
        assert_eq!(e.closed_point_count(2), &BigInt::from(6));
    }

    #[test]
    fn degree_one_closed_points_are_rational_points() {
        for q in prime_powers_up_to(16) {
            for a in admissible_traces(q) {
                let e = extension_counts(&cls(q.q(), a), 4);
                assert_eq!(e.closed_point_count(1), e.point_count(1));
            }
        }
    }

    #[test]
    fn closed_point_counts_nonnegative() {
        for q in prime_powers_up_to(16) {
            for a in admissible_traces(q) {
                let e = extension_counts(&cls(q.q(), a), 12);
                for b in e.closed_points() {
                    assert!(!b.is_negative());
                }
            }
        }
    }

    #[test]
    fn hasse_bound_at_every_level() {
        for q in prime_powers_up_to(16) {
            for a in admissible_traces(q) {
                let e = extension_counts(&cls(q.q(), a), 20);
                let mut qk = BigInt::one();
                for ak in e.traces() {
                    qk *= q.q();
                    assert!(ak * ak <= 4 * &qk, "Hasse fails at q={} a={}", q.q(), a);
                }
            }
        }
    }

    #[test]
    fn traces_match_float_closed_form() {
        // the absolute tolerance 0.4 is only meaningful while 2 q^(k/2)
        // stays far below 2^53, so cap k per q at 2 q^(k/2) <= 2^44
        for q in prime_powers_up_to(16) {
            for a in admissible_traces(q) {
                let c = cls(q.q(), a);
                let k_cap = (86.0 / (q.q() as f64).log2()).floor().min(30.0) as usize;
                let e = extension_counts(&c, k_cap);
                for (k, ak) in e.traces().iter().enumerate() {
                    let k = k + 1;
                    let expected = 2.0
                        * (q.q() as f64).powf(k as f64 / 2.0)
                        * (k as f64 * c.theta()).cos();
                    let ak_f = approx_bigint(ak);
                    assert!(
                        (ak_f - expected).abs() < 0.4,
                        "a_{k} drifted at q={} a={}: {ak_f} vs {expected}",
                        q.q(),
                        a
                    );
                    assert_eq!(ak_f.round(), expected.round());
                }
            }
        }
    }

    fn approx_bigint(x: &BigInt) -> f64 {
        use num_traits::ToPrimitive;
        x.to_f64().unwrap()
    }

    /// Power-series identity behind the Euler product:
    /// exp(sum N_k u^k / k) == prod (1 - u^d)^{-b_d}, coefficientwise over
    /// exact rationals, to any truncation.
    #[test]
    fn generating_identity_over_rationals() {
        let n = 10usize;
        for q in prime_powers_up_to(9) {
            for a in admissible_traces(q) {
                let c = cls(q.q(), a);
                let e = extension_counts(&c, n);

                // exp route
                let mut series = vec![BigRational::zero(); n + 1];
                for k in 1..=n {
                    series[k] = BigRational::new(e.point_count(k).clone(), BigInt::from(k));
                }
                let exp_side = rational_exp(&series, n);

                // product route: prod (1 - u^d)^{-b_d} via negative binomials
                let mut prod = vec![BigRational::zero(); n + 1];
                prod[0] = BigRational::one();
                for d in 1..=n {
                    let b = e.closed_point_count(d).clone();
                    let mut factor = vec![BigRational::zero(); n + 1];
                    let mut coeff = BigInt::one();
                    let mut j = 0usize;
                    while d * j <= n {
                        factor[d * j] = BigRational::from_integer(coeff.clone());
                        // C(b + j, j + 1) from C(b + j - 1, j)
                        coeff = coeff * (&b + BigInt::from(j)) / BigInt::from(j + 1);
                        j += 1;
                    }
                    prod = poly_mul_trunc(&prod, &factor, n);
                }

                assert_eq!(exp_side, prod, "identity fails at q={} a={}", q.q(), a);
            }
        }
    }

    fn poly_mul_trunc(
        a: &[BigRational],
        b: &[BigRational],
        n: usize,
    ) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if !b[j].is_zero() {
                    let term = &a[i] * &b[j];
                    out[i + j] += term;
                }
            }
        }
        out
    }

    /// exp of a series with zero constant term: E' = S'E, so
    /// n e_n = sum_{k=1..n} k s_k e_{n-k}.
    fn rational_exp(s: &[BigRational], n: usize) -> Vec<BigRational> {
        assert!(s[0].is_zero());
        let mut e = vec![BigRational::zero(); n + 1];
        e[0] = BigRational::one();
        for i in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=i {
                if !s[k].is_zero() {
                    acc += BigRational::from_integer(BigInt::from(k)) * &s[k] * &e[i - k];
                }
            }
            e[i] = acc / BigRational::from_integer(BigInt::from(i));
        }
        e
    }

    #[test]
    fn classical_mobius_small_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &mu) in expected.iter().enumerate() {
            assert_eq!(classical_mobius(i as u64 + 1), mu);
        }
        assert_eq!(classical_mobius(30), -1);
        assert_eq!(classical_mobius(36), 0);
    }
}
