//! Exact rationals that stay on machine words until a value overflows.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Q {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

impl Q {
    pub fn int(n: i64) -> Q {
        Q::Small(Ratio::from_integer(n))
    }

    pub fn zero() -> Q {
        Q::int(0)
    }

    pub fn one() -> Q {
        Q::int(1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Q::Small(r) => r.is_zero(),
            Q::Big(r) => r.is_zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Q::Small(r) => r.is_integer() && r.numer().unsigned_abs() == 1,
            Q::Big(_) => false,
        }
    }

    fn big(&self) -> BigRational {
        match self {
            Q::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Q::Big(r) => (**r).clone(),
        }
    }

    fn demote(r: BigRational) -> Q {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Q::Small(Ratio::new_raw(n, d)),
            _ => Q::Big(Box::new(r)),
        }
    }

    pub fn inv(&self) -> Q {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Q::Small(r) if *r.numer() != i64::MIN => Q::Small(r.recip()),
            _ => Q::demote(self.big().recip()),
        }
    }

    pub fn div(&self, o: &Q) -> Q {
        self * &o.inv()
    }

    /// Rough size used when choosing pivots: smaller is cheaper.
    pub fn weight(&self) -> u64 {
        match self {
            Q::Small(r) => r.numer().unsigned_abs().max(1).saturating_add(r.denom().unsigned_abs() - 1),
            Q::Big(_) => u64::MAX,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Q::Small(r) if r.is_integer() => Some(*r.numer()),
            _ => None,
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(r) => write!(f, "{r}"),
            Q::Big(r) => write!(f, "{r}"),
        }
    }
}

impl<'a> Add<&'a Q> for &'a Q {
    type Output = Q;
    fn add(self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(r) = a.checked_add(b) {
                return Q::Small(r);
            }
        }
        Q::demote(self.big() + o.big())
    }
}

impl<'a> Sub<&'a Q> for &'a Q {
    type Output = Q;
    fn sub(self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(r) = a.checked_sub(b) {
                return Q::Small(r);
            }
        }
        Q::demote(self.big() - o.big())
    }
}

impl<'a> Mul<&'a Q> for &'a Q {
    type Output = Q;
    fn mul(self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(r) = a.checked_mul(b) {
                return Q::Small(r);
            }
        }
        Q::demote(self.big() * o.big())
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        match self {
            Q::Small(r) if *r.numer() != i64::MIN => Q::Small(-r),
            _ => Q::demote(-self.big()),
        }
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        -&self
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::int(n)
    }
}

impl Default for Q {
    fn default() -> Q {
        Q::zero()
    }
}
