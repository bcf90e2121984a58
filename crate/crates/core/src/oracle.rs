//! Two independent ground-truth generators.
//!
//! The product oracle expands prod_d (1 - u^d)^{b_d} with exact integer
//! binomials, reproducing the Möbius coefficients without touching the
//! linear recurrence they are normally computed by. The curve census
//! enumerates every long-Weierstrass quintuple over a small field, discards
//! singular curves, and counts points exhaustively, grounding the admissible
//! trace sets in actual curves.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField, PrimePower};
use crate::isogeny::IsogenyClass;
use crate::par::map_collect;
use crate::zeta::extension_counts;

/// Census cost is q^5 curves times q^2 point checks; beyond this order the
/// caller must opt in explicitly.
pub const CENSUS_CAP: u64 = 16;

/// Element-index tables cannot exceed this order.
const CENSUS_HARD_CAP: u64 = 256;

/// Coefficients c_0..c_{n_max} of prod_{d=1}^{n_max} (1 - u^d)^{b_d},
/// truncated at degree n_max. Factors of degree d > n_max cannot contribute,
/// so this equals the Möbius coefficient sequence exactly.
///
/// The expansion uses exact integer binomials term by term; n_max is capped
/// at 64 because the cost grows with the number of partitions.
pub fn product_oracle(cls: &IsogenyClass, n_max: usize) -> Vec<BigInt> {
    assert!(n_max <= 64, "product oracle capped at degree 64");
    let mut acc = vec![BigInt::zero(); n_max + 1];
    acc[0] = BigInt::one();
    if n_max == 0 {
        return acc;
    }
    let counts = extension_counts(cls, n_max);
    for d in 1..=n_max {
        let b = counts.closed_point_count(d);
        let mut factor = vec![BigInt::zero(); n_max + 1];
        let mut binom = BigInt::one(); // C(b, j)
        let mut j = 0usize;
        while j * d <= n_max {
            factor[j * d] = if j % 2 == 0 {
                binom.clone()
            } else {
                -binom.clone()
            };
            binom = binom * (b - BigInt::from(j)) / BigInt::from(j + 1);
            j += 1;
        }
        acc = mul_trunc(&acc, &factor, n_max);
    }
    acc
}

fn mul_trunc(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for i in 0..=n {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..=(n - i) {
            if !b[j].is_zero() {
                out[i + j] += &a[i] * &b[j];
            }
        }
    }
    out
}

/// A long-Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
///
/// The long form is essential here: characteristics 2 and 3 carry the
/// supersingular trace cases, and the short form degenerates there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    field: FiniteField,
    a1: FieldElement,
    a2: FieldElement,
    a3: FieldElement,
    a4: FieldElement,
    a6: FieldElement,
}

impl WeierstrassCurve {
    /// Builds the curve, rejecting mixed parent fields and zero
    /// discriminant.
    pub fn new(
        field: &FiniteField,
        coefficients: [FieldElement; 5],
    ) -> Result<WeierstrassCurve> {
        let [a1, a2, a3, a4, a6] = coefficients;
        for c in [&a1, &a2, &a3, &a4, &a6] {
            if c.field() != field {
                return Err(Error::MixedFields);
            }
        }
        let curve = WeierstrassCurve {
            field: field.clone(),
            a1,
            a2,
            a3,
            a4,
            a6,
        };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coefficients(&self) -> [&FieldElement; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    /// The standard b-invariants (b2, b4, b6, b8).
    pub fn b_invariants(&self) -> (FieldElement, FieldElement, FieldElement, FieldElement) {
        let f = &self.field;
        let mul = |x: &FieldElement, y: &FieldElement| x.mul(y).expect("same field");
        let add = |x: &FieldElement, y: &FieldElement| x.add(y).expect("same field");
        let sub = |x: &FieldElement, y: &FieldElement| x.sub(y).expect("same field");
        let int = |k: i64| f.from_int(k);

        let b2 = add(&mul(&self.a1, &self.a1), &mul(&int(4), &self.a2));
        let b4 = add(&mul(&int(2), &self.a4), &mul(&self.a1, &self.a3));
        let b6 = add(&mul(&self.a3, &self.a3), &mul(&int(4), &self.a6));
        let a1_sq = mul(&self.a1, &self.a1);
        let b8 = sub(
            &add(
                &add(&mul(&a1_sq, &self.a6), &mul(&mul(&int(4), &self.a2), &self.a6)),
                &sub(
                    &mul(&self.a2, &mul(&self.a3, &self.a3)),
                    &mul(&mul(&self.a1, &self.a3), &self.a4),
                ),
            ),
            &mul(&self.a4, &self.a4),
        );
        (b2, b4, b6, b8)
    }

    /// delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
    pub fn discriminant(&self) -> FieldElement {
        let f = &self.field;
        let mul = |x: &FieldElement, y: &FieldElement| x.mul(y).expect("same field");
        let add = |x: &FieldElement, y: &FieldElement| x.add(y).expect("same field");
        let int = |k: i64| f.from_int(k);
        let (b2, b4, b6, b8) = self.b_invariants();

        let t1 = mul(&mul(&b2, &b2), &b8).neg();
        let t2 = mul(&int(8), &mul(&mul(&b4, &b4), &b4)).neg();
        let t3 = mul(&int(27), &mul(&b6, &b6)).neg();
        let t4 = mul(&int(9), &mul(&mul(&b2, &b4), &b6));
        add(&add(&t1, &t2), &add(&t3, &t4))
    }
}

/// Exhaustive affine count plus the point at infinity, and the trace
/// a = q + 1 - N1.
pub fn count_points(curve: &WeierstrassCurve) -> Result<(u64, i64)> {
    if curve.discriminant().is_zero() {
        return Err(Error::SingularCurve);
    }
    let f = curve.field();
    let mul = |x: &FieldElement, y: &FieldElement| x.mul(y).expect("same field");
    let add = |x: &FieldElement, y: &FieldElement| x.add(y).expect("same field");
    let mut affine = 0u64;
    for x in f.elements() {
        let x2 = mul(&x, &x);
        let x3 = mul(&x2, &x);
        let rhs = add(
            &add(&x3, &mul(&curve.a2, &x2)),
            &add(&mul(&curve.a4, &x), &curve.a6),
        );
        let y_coeff = add(&mul(&curve.a1, &x), &curve.a3);
        for y in f.elements() {
            // y^2 + (a1 x + a3) y = y (y + a1 x + a3)
            let lhs = mul(&y, &add(&y, &y_coeff));
            if lhs == rhs {
                affine += 1;
            }
        }
    }
    let n1 = affine + 1;
    let trace = f.q() as i64 + 1 - n1 as i64;
    Ok((n1, trace))
}

/// Which traces are realized by actual curves over F_q, with curve counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceCensus {
    q: PrimePower,
    realized: Vec<i64>,
    counts: BTreeMap<i64, u64>,
}

impl TraceCensus {
    pub fn q(&self) -> PrimePower {
        self.q
    }

    /// Sorted traces realized by at least one nonsingular curve.
    pub fn realized_traces(&self) -> &[i64] {
        &self.realized
    }

    /// Number of nonsingular Weierstrass quintuples per trace.
    pub fn counts(&self) -> &BTreeMap<i64, u64> {
        &self.counts
    }

    pub fn total_curves(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Enumerates all q^5 Weierstrass curves over F_q and counts points on each
/// nonsingular one. Parallel when the `parallel` feature is enabled; orders
/// above [`CENSUS_CAP`] are rejected unless forced.
pub fn trace_census(q: PrimePower) -> Result<TraceCensus> {
    trace_census_opts(q, false, true)
}

/// Sequential variant of [`trace_census`], kept callable for benchmarking.
pub fn trace_census_serial(q: PrimePower) -> Result<TraceCensus> {
    trace_census_opts(q, false, false)
}

/// [`trace_census`] with the soft order cap lifted (`force`) and parallelism
/// made explicit.
pub fn trace_census_opts(q: PrimePower, force: bool, parallel: bool) -> Result<TraceCensus> {
    let cap = if force { CENSUS_HARD_CAP } else { CENSUS_CAP };
    if q.q() > cap {
        return Err(Error::FieldTooLarge { q: q.q(), limit: cap });
    }
    let field = FiniteField::new(q.p(), q.m())?;
    let tables = OpTables::new(&field);
    let total = q.q().pow(5);

    let chunks: Vec<(u64, u64)> = if parallel {
        let n_chunks = 64u64.min(total);
        let step = total.div_ceil(n_chunks);
        (0..n_chunks)
            .map(|i| (i * step, ((i + 1) * step).min(total)))
            .filter(|(s, e)| s < e)
            .collect()
    } else {
        vec![(0, total)]
    };

    let run = |(start, end): (u64, u64)| census_range(&tables, start, end);
    let partials = if parallel {
        map_collect(chunks, run)
    } else {
        chunks.into_iter().map(run).collect()
    };

    let qq = q.q() as i64;
    let mut counts = BTreeMap::new();
    for partial in partials {
        for (offset, &count) in partial.iter().enumerate() {
            if count > 0 {
                let trace = offset as i64 - qq;
                // Hasse bound holds for every enumerated curve
                assert!(
                    (trace as i128) * (trace as i128) <= 4 * q.q() as i128,
                    "census found trace {trace} outside the Hasse bound for q = {}",
                    q.q()
                );
                *counts.entry(trace).or_insert(0u64) += count;
            }
        }
    }
    let realized = counts.keys().copied().collect();
    Ok(TraceCensus {
        q,
        realized,
        counts,
    })
}

/// Flat add/mul/neg tables over element indices; the census hot loop is pure
/// table lookups.
struct OpTables {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    int2: u16,
    int4: u16,
    int8: u16,
    int9: u16,
    int27: u16,
}

impl OpTables {
    fn new(field: &FiniteField) -> OpTables {
        let q = field.q() as usize;
        let elements: Vec<FieldElement> = field.elements().collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        let mut neg = vec![0u16; q];
        for (i, a) in elements.iter().enumerate() {
            neg[i] = a.neg().index() as u16;
            for (j, b) in elements.iter().enumerate() {
                add[i * q + j] = a.add(b).expect("same field").index() as u16;
                mul[i * q + j] = a.mul(b).expect("same field").index() as u16;
            }
        }
        OpTables {
            q,
            add,
            mul,
            neg,
            int2: field.from_int(2).index() as u16,
            int4: field.from_int(4).index() as u16,
            int8: field.from_int(8).index() as u16,
            int9: field.from_int(9).index() as u16,
            int27: field.from_int(27).index() as u16,
        }
    }

    #[inline(always)]
    fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline(always)]
    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline(always)]
    fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg[b as usize])
    }

    fn discriminant(&self, a1: u16, a2: u16, a3: u16, a4: u16, a6: u16) -> u16 {
        let b2 = self.add(self.mul(a1, a1), self.mul(self.int4, a2));
        let b4 = self.add(self.mul(self.int2, a4), self.mul(a1, a3));
        let b6 = self.add(self.mul(a3, a3), self.mul(self.int4, a6));
        let b8 = self.sub(
            self.add(
                self.add(
                    self.mul(self.mul(a1, a1), a6),
                    self.mul(self.mul(self.int4, a2), a6),
                ),
                self.sub(self.mul(a2, self.mul(a3, a3)), self.mul(self.mul(a1, a3), a4)),
            ),
            self.mul(a4, a4),
        );
        let t1 = self.mul(self.mul(b2, b2), b8);
        let t2 = self.mul(self.int8, self.mul(self.mul(b4, b4), b4));
        let t3 = self.mul(self.int27, self.mul(b6, b6));
        let t4 = self.mul(self.int9, self.mul(self.mul(b2, b4), b6));
        self.sub(t4, self.add(self.add(t1, t2), t3))
    }
}

/// Counts per trace offset (trace + q) over the curve-index range
/// [start, end). Curve index digits in base q are (a1, a2, a3, a4, a6).
fn census_range(t: &OpTables, start: u64, end: u64) -> Vec<u64> {
    let q = t.q as u64;
    let mut counts = vec![0u64; 2 * t.q + 1];
    for idx in start..end {
        let mut v = idx;
        let a1 = (v % q) as u16;
        v /= q;
        let a2 = (v % q) as u16;
        v /= q;
        let a3 = (v % q) as u16;
        v /= q;
        let a4 = (v % q) as u16;
        v /= q;
        let a6 = (v % q) as u16;

        if t.discriminant(a1, a2, a3, a4, a6) == 0 {
            continue;
        }

        let mut affine = 0u64;
        for x in 0..t.q as u16 {
            let x2 = t.mul(x, x);
            let x3 = t.mul(x2, x);
            let rhs = t.add(t.add(x3, t.mul(a2, x2)), t.add(t.mul(a4, x), a6));
            let y_coeff = t.add(t.mul(a1, x), a3);
            for y in 0..t.q as u16 {
                let lhs = t.mul(y, t.add(y, y_coeff));
                if lhs == rhs {
                    affine += 1;
                }
            }
        }
        let n1 = affine + 1;
        let trace = q as i64 + 1 - n1 as i64;
        counts[(trace + q as i64) as usize] += 1;
    }
    counts
}
