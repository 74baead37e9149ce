use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Modulus of the probabilistic fast mode, the Mersenne prime 2^61 - 1.
pub const FAST_PRIME: u64 = (1 << 61) - 1;

/// Coefficient domain for fraction-free elimination.
///
/// Integer domains keep rows primitive with a positive leading entry;
/// the prime field keeps rows monic. Arithmetic that would leave the
/// domain's range reports `None`.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multipliers `(a, b)` with `a * target - b * pivot == 0`.
    fn cancel(target: &Self, pivot: &Self) -> (Self, Self);
    /// `a * x - b * y`.
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    /// Canonical scaling of a nonzero row.
    fn normalize(row: &mut [Self]);
    /// Whether the entry is big enough that the row should be rescaled
    /// before further elimination.
    fn is_large(&self) -> bool {
        false
    }
}

fn leading<S: Scalar>(row: &[S]) -> Option<&S> {
    row.iter().find(|x| !x.is_zero())
}

impl Scalar for i128 {
    fn from_i64(x: i64) -> Self {
        x as i128
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn cancel(target: &Self, pivot: &Self) -> (Self, Self) {
        let g = target.gcd(pivot);
        (pivot / g, target / g)
    }

    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }

    fn normalize(row: &mut [Self]) {
        let content = row.iter().fold(0i128, |acc, x| acc.gcd(x));
        if content == 0 {
            return;
        }
        let sign = if *leading(row).unwrap() < 0 { -1 } else { 1 };
        let div = content * sign;
        if div != 1 {
            row.iter_mut().for_each(|x| *x /= div);
        }
    }

    fn is_large(&self) -> bool {
        self.unsigned_abs() > 1 << 40
    }
}

impl Scalar for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cancel(target: &Self, pivot: &Self) -> (Self, Self) {
        let g = target.gcd(pivot);
        (pivot / &g, target / &g)
    }

    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }

    fn normalize(row: &mut [Self]) {
        let content = row
            .iter()
            .fold(<BigInt as Zero>::zero(), |acc, x| acc.gcd(x));
        if Zero::is_zero(&content) {
            return;
        }
        let div = if leading(row).unwrap().is_negative() {
            -content
        } else {
            content
        };
        if !div.is_one() {
            row.iter_mut().for_each(|x| *x = &*x / &div);
        }
    }

    fn is_large(&self) -> bool {
        self.bits() > 64
    }
}

/// Element of the prime field of order [`FAST_PRIME`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(pub u64);

impl Fp {
    fn mul(self, other: Fp) -> Fp {
        let wide = self.0 as u128 * other.0 as u128;
        let lo = (wide as u64) & FAST_PRIME;
        let hi = (wide >> 61) as u64;
        let mut s = lo + hi;
        if s >= FAST_PRIME {
            s -= FAST_PRIME;
        }
        Fp(s)
    }

    fn sub(self, other: Fp) -> Fp {
        if self.0 >= other.0 {
            Fp(self.0 - other.0)
        } else {
            Fp(self.0 + FAST_PRIME - other.0)
        }
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Fp {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(FAST_PRIME - 2)
    }

    pub fn from_bigint(x: &BigInt) -> Fp {
        let p = BigInt::from(FAST_PRIME);
        let r = x.mod_floor(&p);
        Fp(r.to_u64().expect("residue fits in u64"))
    }
}

impl Scalar for Fp {
    fn from_i64(x: i64) -> Self {
        let r = (x as i128).rem_euclid(FAST_PRIME as i128);
        Fp(r as u64)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn cancel(target: &Self, pivot: &Self) -> (Self, Self) {
        (Fp(1), target.mul(pivot.inverse()))
    }

    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a.mul(*x).sub(b.mul(*y)))
    }

    fn normalize(row: &mut [Self]) {
        let Some(lead) = leading(row).copied() else {
            return;
        };
        if lead.0 != 1 {
            let inv = lead.inverse();
            row.iter_mut().for_each(|x| *x = x.mul(inv));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        for x in [1i64, 2, 3, -7, 1 << 40] {
            let a = Fp::from_i64(x);
            assert_eq!(a.mul(a.inverse()), Fp(1));
        }
    }

    #[test]
    fn modulus_is_above_two_to_the_sixty() {
        assert!(FAST_PRIME > 1 << 60);
    }

    #[test]
    fn integer_normalization_is_primitive_and_positive() {
        let mut row = vec![0i128, -4, 6, -2];
        Scalar::normalize(row.as_mut_slice());
        assert_eq!(row, vec![0, 2, -3, 1]);
    }
}
