//! Power series over `Z/p` known up to a fixed precision.

use super::field::PrimeField;
use super::ApproximationError;

/// Coefficients of `t^0, ..., t^N`. Exact only up to `N`: products whose
/// support would pass `N` are rejected by [`TruncatedSeries::checked_mul`];
/// working modulo `t^(N+1)` has to be asked for with
/// [`TruncatedSeries::mul_mod`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<u64>,
}

impl TruncatedSeries {
    pub fn zero(precision: usize) -> Self {
        Self {
            coeffs: vec![0; precision + 1],
        }
    }

    pub fn monomial(exponent: usize, coeff: u64, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if exponent <= precision {
            s.coeffs[exponent] = coeff;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    pub fn add(&self, other: &Self, field: &PrimeField) -> Self {
        assert_eq!(self.precision(), other.precision());
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64, field: &PrimeField) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }

    pub fn checked_mul(
        &self,
        other: &Self,
        field: &PrimeField,
    ) -> Result<Self, ApproximationError> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a + b > self.precision() {
                return Err(ApproximationError::PrecisionOverflow {
                    needed: a + b,
                    precision: self.precision(),
                });
            }
        }
        Ok(self.mul_mod(other, field))
    }

    /// Product modulo `t^(N+1)`.
    pub fn mul_mod(&self, other: &Self, field: &PrimeField) -> Self {
        assert_eq!(self.precision(), other.precision());
        let n = self.precision();
        let mut out = vec![0; n + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=n - i].iter().enumerate() {
                if b != 0 {
                    out[i + j] = field.add(out[i + j], field.mul(a, b));
                }
            }
        }
        Self { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn overflow_is_rejected() {
        let f = field();
        let a = TruncatedSeries::monomial(3, 1, 5);
        let b = TruncatedSeries::monomial(3, 1, 5);
        assert!(matches!(
            a.checked_mul(&b, &f),
            Err(ApproximationError::PrecisionOverflow {
                needed: 6,
                precision: 5
            })
        ));
        assert!(a.mul_mod(&b, &f).is_zero());
        let c = TruncatedSeries::monomial(2, 1, 5);
        assert_eq!(
            a.checked_mul(&c, &f).unwrap(),
            TruncatedSeries::monomial(5, 1, 5)
        );
    }

    #[test]
    fn order_and_degree() {
        let s = TruncatedSeries::from_coeffs(vec![0, 0, 3, 0, 1, 0]);
        assert_eq!(s.order(), Some(2));
        assert_eq!(s.degree(), Some(4));
        assert_eq!(TruncatedSeries::zero(4).order(), None);
    }

    fn series(n: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(0u64..32003, n + 1).prop_map(TruncatedSeries::from_coeffs)
    }

    proptest! {
        #[test]
        fn truncated_product_is_commutative_and_distributive(
            a in series(8), b in series(8), c in series(8)
        ) {
            let f = field();
            prop_assert_eq!(a.mul_mod(&b, &f), b.mul_mod(&a, &f));
            prop_assert_eq!(
                a.mul_mod(&b.add(&c, &f), &f),
                a.mul_mod(&b, &f).add(&a.mul_mod(&c, &f), &f)
            );
        }
    }
}
