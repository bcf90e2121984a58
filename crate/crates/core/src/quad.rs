//! Exact numbers of the form r + s*sqrt(d) with rational r, s and a fixed
//! squarefree radicand d.
//!
//! Every per-residue ratio value of a rational-angle class lives in a single
//! real quadratic field (d = 1, 2, 3, or p), so limsup maximization and the
//! table fixtures can be decided exactly instead of at some finite float
//! precision.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    rat: BigRational,
    irr: BigRational,
    d: u64,
}

impl QuadExt {
    /// rat + irr*sqrt(d); d must be squarefree. d = 1 folds into the
    /// rational part.
    pub fn new(rat: BigRational, irr: BigRational, d: u64) -> Self {
        assert!(d >= 1, "radicand must be positive");
        if d == 1 {
            QuadExt {
                rat: rat + irr,
                irr: BigRational::zero(),
                d: 1,
            }
        } else {
            QuadExt { rat, irr, d }
        }
    }

    pub fn rational(r: BigRational, d: u64) -> Self {
        QuadExt::new(r, BigRational::zero(), d)
    }

    pub fn from_int(n: i64, d: u64) -> Self {
        QuadExt::rational(BigRational::from_integer(BigInt::from(n)), d)
    }

    pub fn zero(d: u64) -> Self {
        QuadExt::from_int(0, d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.irr
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// The exact rational value, if there is no radical part.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rat)
    }

    fn check_compatible(&self, rhs: &QuadExt) -> u64 {
        if self.d == rhs.d {
            self.d
        } else if self.is_rational() {
            rhs.d
        } else if rhs.is_rational() {
            self.d
        } else {
            panic!("mixed radicands {} and {}", self.d, rhs.d)
        }
    }

    pub fn add(&self, rhs: &QuadExt) -> QuadExt {
        let d = self.check_compatible(rhs);
        QuadExt::new(&self.rat + &rhs.rat, &self.irr + &rhs.irr, d)
    }

    pub fn sub(&self, rhs: &QuadExt) -> QuadExt {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            rat: -self.rat.clone(),
            irr: -self.irr.clone(),
            d: self.d,
        }
    }

    pub fn mul(&self, rhs: &QuadExt) -> QuadExt {
        let d = self.check_compatible(rhs);
        let dd = BigRational::from_integer(BigInt::from(d));
        QuadExt::new(
            &self.rat * &rhs.rat + &self.irr * &rhs.irr * dd,
            &self.rat * &rhs.irr + &self.irr * &rhs.rat,
            d,
        )
    }

    pub fn square(&self) -> QuadExt {
        self.mul(self)
    }

    /// Exact sign: -1, 0, or 1.
    pub fn sign(&self) -> i32 {
        let rs = rational_sign(&self.rat);
        let is = rational_sign(&self.irr);
        if is == 0 {
            return rs;
        }
        if rs == is || rs == 0 {
            return is;
        }
        // opposite signs: compare rat^2 against irr^2 * d
        let lhs = &self.rat * &self.rat;
        let rhs = &self.irr * &self.irr * BigRational::from_integer(BigInt::from(self.d));
        match lhs.cmp(&rhs) {
            Ordering::Greater => rs,
            Ordering::Less => is,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> QuadExt {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact comparison of absolute values.
    pub fn abs_cmp(&self, rhs: &QuadExt) -> Ordering {
        let diff = self.square().sub(&rhs.square());
        match diff.sign() {
            s if s > 0 => Ordering::Greater,
            0 => Ordering::Equal,
            _ => Ordering::Less,
        }
    }

    pub fn cmp_value(&self, rhs: &QuadExt) -> Ordering {
        match self.sub(rhs).sign() {
            s if s > 0 => Ordering::Greater,
            0 => Ordering::Equal,
            _ => Ordering::Less,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rat.to_f64().expect("rational part fits in f64");
        let s = self.irr.to_f64().expect("irrational part fits in f64");
        r + s * (self.d as f64).sqrt()
    }
}

fn rational_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for QuadExt {
    /// Renders like "-5/3", "5/4*sqrt(2)", or "1/2 + 3/2*sqrt(3)".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let radical = format!("sqrt({})", self.d);
        let irr_term = |r: &BigRational| {
            if *r == BigRational::from_integer(BigInt::from(1)) {
                radical.clone()
            } else {
                format!("{}*{}", r, radical)
            }
        };
        if self.rat.is_zero() {
            if self.irr.is_negative() {
                write!(f, "-{}", irr_term(&-self.irr.clone()))
            } else {
                write!(f, "{}", irr_term(&self.irr))
            }
        } else if self.irr.is_negative() {
            write!(f, "{} - {}", self.rat, irr_term(&-self.irr.clone()))
        } else {
            write!(f, "{} + {}", self.rat, irr_term(&self.irr))
        }
    }
}
