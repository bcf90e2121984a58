//! Arithmetic in GF(p^m) with elements stored as residue polynomials modulo a
//! deterministically chosen irreducible.
//!
//! Fields here back the curve-enumeration oracle, so the supported orders are
//! deliberately small: construction is capped at 2^20 and the census caps far
//! lower. Elements are immutable values; all operations are pure.

use std::fmt;
use std::sync::Arc;

use num_integer::Roots;

use crate::error::{Error, Result};

/// Largest order accepted by [`PrimePower`].
pub const MAX_PRIME_POWER: u64 = 1 << 40;
/// Largest order for which a concrete field can be constructed.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// A finite-field order q = p^m together with its factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    q: u64,
    p: u64,
    m: u32,
}

impl PrimePower {
    /// Builds p^m, verifying that p is prime and the result stays in range.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::NotPrimePower(1));
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q
                .checked_mul(p)
                .filter(|&q| q <= MAX_PRIME_POWER)
                .ok_or(Error::FieldTooLarge {
                    q: 0,
                    limit: MAX_PRIME_POWER,
                })?;
        }
        Ok(PrimePower { q, p, m })
    }

    /// Factors q, requiring it to be a power of a single prime.
    pub fn from_order(q: u64) -> Result<Self> {
        if q > MAX_PRIME_POWER {
            return Err(Error::FieldTooLarge {
                q,
                limit: MAX_PRIME_POWER,
            });
        }
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = smallest_prime_factor(q);
        let mut m = 0u32;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Ok(PrimePower { q, p, m })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Whether q is a perfect square, i.e. m is even.
    pub fn is_square(&self) -> bool {
        self.m % 2 == 0
    }

    /// p^(m/2) when m is even.
    pub fn sqrt(&self) -> Option<u64> {
        if self.is_square() {
            Some(self.p.pow(self.m / 2))
        } else {
            None
        }
    }

    /// Largest admissible |a|, i.e. floor(2*sqrt(q)).
    pub fn hasse_limit(&self) -> i64 {
        (4 * self.q).sqrt() as i64
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "{}", self.q)
        } else {
            write!(f, "{} = {}^{}", self.q, self.p, self.m)
        }
    }
}

/// Deterministic trial-division primality check; fine for p <= 2^40.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// All prime powers q with 2 <= q <= bound, ascending.
pub fn prime_powers_up_to(bound: u64) -> Vec<PrimePower> {
    (2..=bound).filter_map(|q| PrimePower::from_order(q).ok()).collect()
}

#[derive(Debug, PartialEq, Eq)]
struct FieldRepr {
    order: PrimePower,
    /// Monic irreducible of degree m over F_p, little-endian, length m + 1.
    modulus: Vec<u64>,
}

/// A concrete model of GF(p^m): residues modulo the lexicographically
/// smallest monic irreducible of degree m.
#[derive(Debug, Clone)]
pub struct FiniteField {
    repr: Arc<FieldRepr>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || *self.repr == *other.repr
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// Constructs GF(p^m). The modulus is the lexicographically smallest
    /// monic irreducible of degree m over F_p (coefficients read as base-p
    /// digits, constant term least significant), so construction is
    /// deterministic and test-stable.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        let order = PrimePower::new(p, m)?;
        if order.q() > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge {
                q: order.q(),
                limit: MAX_FIELD_ORDER,
            });
        }
        let modulus = smallest_irreducible(p, m);
        Ok(FiniteField {
            repr: Arc::new(FieldRepr { order, modulus }),
        })
    }

    pub fn order(&self) -> PrimePower {
        self.repr.order
    }

    pub fn q(&self) -> u64 {
        self.repr.order.q()
    }

    pub fn p(&self) -> u64 {
        self.repr.order.p()
    }

    pub fn degree(&self) -> u32 {
        self.repr.order.m()
    }

    /// The defining modulus, little-endian with leading coefficient 1.
    pub fn modulus(&self) -> &[u64] {
        &self.repr.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.element(&[])
    }

    pub fn one(&self) -> FieldElement {
        self.element(&[1])
    }

    /// Builds an element from arbitrary little-endian coefficients, reducing
    /// both modulo p and modulo the field modulus.
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        let p = self.p();
        let mut poly: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
        poly_rem(&mut poly, &self.repr.modulus, p);
        let mut coeffs = poly;
        coeffs.resize(self.degree() as usize, 0);
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// The embedding of an integer through F_p.
    pub fn from_int(&self, k: i64) -> FieldElement {
        let p = self.p() as i64;
        self.element(&[k.rem_euclid(p) as u64])
    }

    /// Element number `idx` in base-p digit order; inverse of
    /// [`FieldElement::index`].
    pub fn from_index(&self, idx: u64) -> FieldElement {
        debug_assert!(idx < self.q());
        let p = self.p();
        let mut digits = Vec::with_capacity(self.degree() as usize);
        let mut v = idx;
        for _ in 0..self.degree() {
            digits.push(v % p);
            v /= p;
        }
        self.element(&digits)
    }

    /// All q elements, in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(move |i| self.from_index(i))
    }
}

/// An element of a [`FiniteField`]: a residue polynomial of degree < m with
/// coefficients reduced into [0, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Little-endian coefficients, always of length m.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Base-p digit value; elements of a field are numbered 0..q.
    pub fn index(&self) -> u64 {
        let p = self.field.p();
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same_field(&self, rhs: &FieldElement) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(rhs)?;
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(rhs)?;
        let p = self.field.p();
        let mut prod = poly_mul(&self.coeffs, &rhs.coeffs, p);
        poly_rem(&mut prod, &self.field.repr.modulus, p);
        prod.resize(self.field.degree() as usize, 0);
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: prod,
        })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// polynomials over F_p.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let p = self.field.p();
        let (g, s) = poly_ext_gcd(&self.coeffs, &self.field.repr.modulus, p);
        // modulus is irreducible and self is nonzero, so the gcd is a unit
        debug_assert_eq!(poly_degree(&g), Some(0));
        let scale = scalar_inv(g[0], p);
        let coeffs: Vec<u64> = s.iter().map(|&c| mulmod(c, scale, p)).collect();
        Ok(self.field.element(&coeffs))
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    // p <= 2^20 so the product fits comfortably in u64
    (a * b) % p
}

fn scalar_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    debug_assert!(a % p != 0);
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        e >>= 1;
        base = mulmod(base, base, p);
    }
    acc
}

fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

/// Reduces `a` in place modulo the monic polynomial `m` over F_p.
fn poly_rem(a: &mut Vec<u64>, m: &[u64], p: u64) {
    poly_trim(a);
    let md = poly_degree(m).expect("modulus is nonzero");
    debug_assert_eq!(m[md], 1, "modulus must be monic");
    while let Some(d) = poly_degree(a) {
        if d < md {
            break;
        }
        let lead = a[d];
        let shift = d - md;
        for (k, &mk) in m.iter().enumerate().take(md + 1) {
            let sub = mulmod(lead, mk, p);
            a[shift + k] = (a[shift + k] + p - sub) % p;
        }
        poly_trim(a);
    }
}

/// Remainder of `a` by an arbitrary (not necessarily monic) divisor.
fn poly_rem_general(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let bd = poly_degree(b).expect("divisor is nonzero");
    let lead_inv = scalar_inv(b[bd], p);
    let mut r = a.to_vec();
    poly_trim(&mut r);
    while let Some(d) = poly_degree(&r) {
        if d < bd {
            break;
        }
        let factor = mulmod(r[d], lead_inv, p);
        let shift = d - bd;
        for (k, &bk) in b.iter().enumerate().take(bd + 1) {
            let sub = mulmod(factor, bk, p);
            r[shift + k] = (r[shift + k] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

/// Extended gcd over F_p[x]: returns (g, s) with s*a ≡ g (mod b).
fn poly_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r0: Vec<u64> = a.to_vec();
    let mut r1: Vec<u64> = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0: Vec<u64> = vec![1];
    let mut s1: Vec<u64> = vec![];
    while !r1.is_empty() {
        let (quot, rem) = poly_div_rem(&r0, &r1, p);
        let qs1 = poly_mul(&quot, &s1, p);
        let mut s2 = poly_sub(&s0, &qs1, p);
        poly_trim(&mut s2);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let ai = a.get(i).copied().unwrap_or(0);
            let bi = b.get(i).copied().unwrap_or(0);
            (ai + p - bi) % p
        })
        .collect()
}

fn poly_div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let bd = poly_degree(b).expect("divisor is nonzero");
    let lead_inv = scalar_inv(b[bd], p);
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut quot = vec![0u64; r.len().saturating_sub(bd) + 1];
    while let Some(d) = poly_degree(&r) {
        if d < bd {
            break;
        }
        let factor = mulmod(r[d], lead_inv, p);
        let shift = d - bd;
        quot[shift] = (quot[shift] + factor) % p;
        for (k, &bk) in b.iter().enumerate().take(bd + 1) {
            let sub = mulmod(factor, bk, p);
            r[shift + k] = (r[shift + k] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    poly_trim(&mut quot);
    (quot, r)
}

/// The lexicographically smallest monic irreducible of degree m over F_p:
/// candidates are scanned by the base-p value of their non-leading
/// coefficients.
fn smallest_irreducible(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        // x itself; any monic linear polynomial works and x is smallest
        return vec![0, 1];
    }
    let count = p.pow(m);
    for value in 0..count {
        let mut candidate = Vec::with_capacity(m as usize + 1);
        let mut v = value;
        for _ in 0..m {
            candidate.push(v % p);
            v /= p;
        }
        candidate.push(1);
        if is_irreducible(&candidate, p) {
            return candidate;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Factor-free check by trial division: a monic polynomial of degree m is
/// irreducible iff no monic polynomial of degree 1..=m/2 divides it.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = poly_degree(f).expect("nonzero");
    if m == 0 {
        return false;
    }
    if f[0] == 0 {
        // divisible by x
        return m == 1;
    }
    for d in 1..=(m / 2) {
        let count = p.pow(d as u32);
        for value in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = value;
            for _ in 0..d {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if poly_rem_general(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_fields() -> Vec<FiniteField> {
        [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4), (3, 3)]
            .iter()
            .map(|&(p, m)| FiniteField::new(p, m).unwrap())
            .collect()
    }

    #[test]
    fn prime_power_construction() {
        let q = PrimePower::new(3, 4).unwrap();
        assert_eq!((q.q(), q.p(), q.m()), (81, 3, 4));
        assert_eq!(PrimePower::new(6, 1), Err(Error::NotPrime(6)));
        assert_eq!(PrimePower::from_order(12), Err(Error::NotPrimePower(12)));
        assert_eq!(PrimePower::from_order(1), Err(Error::NotPrimePower(1)));
        let q = PrimePower::from_order(1024).unwrap();
        assert_eq!((q.p(), q.m()), (2, 10));
    }

    #[test]
    fn prime_power_square_iff_even_exponent() {
        for q in prime_powers_up_to(2000) {
            let isq = (q.q() as f64).sqrt().round() as u64;
            let is_perfect_square = isq * isq == q.q();
            assert_eq!(q.is_square(), is_perfect_square, "q = {}", q.q());
            if let Some(r) = q.sqrt() {
                assert_eq!(r * r, q.q());
            }
        }
    }

    #[test]
    fn hasse_limit_is_exact_floor() {
        for q in prime_powers_up_to(5000) {
            let h = q.hasse_limit() as u64;
            assert!(h * h <= 4 * q.q());
            assert!((h + 1) * (h + 1) > 4 * q.q());
        }
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn gf4_modulus_matches_brute_force() {
        // brute-force oracle: the monic quadratics over F_2 without roots
        let mut irreducible = Vec::new();
        for c0 in 0..2u64 {
            for c1 in 0..2u64 {
                let f = [c0, c1, 1];
                let root_free = (0..2u64).all(|x| (c0 + c1 * x + x * x) % 2 != 0);
                if root_free {
                    irreducible.push(f.to_vec());
                }
            }
        }
        assert_eq!(irreducible, vec![vec![1, 1, 1]]);
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]); // x^2 + x + 1
    }

    #[test]
    fn gf9_modulus_matches_lex_scan() {
        // scan monic quadratics over F_3 in base-3 value order for the first
        // without a root
        let mut first = None;
        'outer: for value in 0..9u64 {
            let (c0, c1) = (value % 3, value / 3);
            for x in 0..3u64 {
                if (c0 + c1 * x + x * x) % 3 == 0 {
                    continue 'outer;
                }
            }
            first = Some(vec![c0, c1, 1]);
            break;
        }
        assert_eq!(first.as_deref(), Some(&[1, 0, 1][..]));
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]); // x^2 + 1
    }

    #[test]
    fn moduli_pass_independent_rabin_check() {
        // Rabin: f of degree m is irreducible over F_p iff x^(p^m) ≡ x mod f
        // and gcd(x^(p^(m/l)) - x mod f, f) = 1 for every prime l | m.
        fn x_pow_q_mod(f: &FiniteField, e_base: u64, e_exp: u32) -> FieldElement {
            let mut acc = f.element(&[0, 1]);
            for _ in 0..e_exp {
                acc = acc.pow(e_base);
            }
            acc
        }
        for (p, m) in [(2, 4), (2, 6), (3, 4), (5, 3), (13, 2), (2, 8)] {
            let f = FiniteField::new(p, m).unwrap();
            let x = f.element(&[0, 1]);
            assert_eq!(x_pow_q_mod(&f, p, m), x, "x^q != x for p={p} m={m}");
            for l in [2u32, 3, 5, 7] {
                if m % l != 0 || l == m {
                    continue;
                }
                let y = x_pow_q_mod(&f, p, m / l).sub(&x).unwrap();
                let (g, _) = poly_ext_gcd(y.coeffs(), f.modulus(), p);
                assert_eq!(poly_degree(&g), Some(0), "p={p} m={m} l={l}");
            }
        }
    }

    #[test]
    fn gf4_examples() {
        let f = FiniteField::new(2, 2).unwrap();
        let x = f.element(&[0, 1]);
        let x_plus_1 = f.element(&[1, 1]);
        assert_eq!(x.mul(&x).unwrap(), x_plus_1);
    }

    #[test]
    fn gf5_inverse_example() {
        let f = FiniteField::new(5, 1).unwrap();
        let two = f.from_int(2);
        let three = f.from_int(3);
        assert_eq!(two.inv().unwrap(), three);
    }

    #[test]
    fn additive_identity() {
        for f in small_fields() {
            for a in f.elements() {
                assert_eq!(a.add(&f.zero()).unwrap(), a);
            }
        }
    }

    #[test]
    fn zero_inverse_and_mixed_fields_rejected() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f4.zero().inv(), Err(Error::ZeroInverse));
        assert_eq!(f4.one().add(&f2.one()), Err(Error::MixedFields));
        assert_eq!(f4.one().mul(&f2.one()), Err(Error::MixedFields));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            FiniteField::new(2, 21).unwrap_err(),
            Error::FieldTooLarge { .. }
        ));
    }

    #[test]
    fn frobenius_fixes_every_element_up_to_81() {
        for q in prime_powers_up_to(81) {
            let f = FiniteField::new(q.p(), q.m()).unwrap();
            for a in f.elements() {
                assert_eq!(a.pow(q.q()), a, "x^q != x in GF({})", q.q());
            }
        }
    }

    #[test]
    fn inverse_is_two_sided_up_to_81() {
        for q in prime_powers_up_to(81) {
            let f = FiniteField::new(q.p(), q.m()).unwrap();
            for a in f.elements() {
                if a.is_zero() {
                    continue;
                }
                let inv = a.inv().unwrap();
                assert_eq!(a.mul(&inv).unwrap(), f.one());
                assert_eq!(inv.mul(&a).unwrap(), f.one());
            }
        }
    }

    #[test]
    fn multiplicative_group_order_sampled() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for f in small_fields() {
            for _ in 0..20 {
                let idx = rng.random_range(1..f.q());
                let a = f.from_index(idx);
                assert_eq!(a.pow(f.q() - 1), f.one());
            }
        }
    }

    #[test]
    fn index_round_trip() {
        for f in small_fields() {
            for i in 0..f.q() {
                assert_eq!(f.from_index(i).index(), i);
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms(field_pick in 0usize..9, xs in proptest::collection::vec(0u64..u64::MAX, 3)) {
            let fields = small_fields();
            let f = &fields[field_pick];
            let a = f.from_index(xs[0] % f.q());
            let b = f.from_index(xs[1] % f.q());
            let c = f.from_index(xs[2] % f.q());
            // commutativity
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            // associativity
            prop_assert_eq!(
                a.add(&b).unwrap().add(&c).unwrap(),
                a.add(&b.add(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            // distributivity
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            // subtraction undoes addition
            prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a);
        }
    }
}
