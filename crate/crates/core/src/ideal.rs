//! Relative (fractional monomial) ideals of `k[[H]]`: the canonical ideal,
//! its shifts, and the monomial structure of `A/J` for proper ideals `J`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("a relative ideal needs at least one generator")]
    EmptyGenerators,
    #[error("the semigroup is all of N; the canonical ideal is the ring itself")]
    FullSemigroup,
    #[error("ideal with generators {0:?} is not a proper ideal of the ring")]
    ImproperIdeal(Vec<i64>),
}

/// `I = union of (g + H)` over the generators `g`. Stored with a minimal
/// generating set, so no generator lies in `g' + H` for another `g'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeIdeal<'a> {
    semigroup: &'a NumericalSemigroup,
    generators: Vec<i64>,
}

/// `A/J ≅ k[u]/(u^length)` with `u ↦ t^generator`. `generator` is `None`
/// exactly when `length == 1`, i.e. `A/J` is the residue field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicQuotient {
    pub generator: Option<i64>,
    pub length: usize,
}

/// Monomial data of `A/J` for a proper ideal `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientData {
    /// Members of `H` outside `J`; the monomial basis of `A/J`.
    pub cobasis: Vec<i64>,
    /// Minimal number of generators of the maximal ideal of `A/J`.
    pub mu: usize,
    pub cyclic: Option<CyclicQuotient>,
}

impl QuotientData {
    /// Length of `A/J`.
    pub fn length(&self) -> usize {
        self.cobasis.len()
    }
}

impl<'a> RelativeIdeal<'a> {
    pub fn new(
        semigroup: &'a NumericalSemigroup,
        generators: impl IntoIterator<Item = i64>,
    ) -> Result<Self, IdealError> {
        let mut sorted: Vec<i64> = generators.into_iter().collect();
        if sorted.is_empty() {
            return Err(IdealError::EmptyGenerators);
        }
        sorted.sort_unstable();
        sorted.dedup();
        // ascending order: a candidate can only be absorbed by a smaller one,
        // and absorption is transitive, so comparing with kept ones suffices
        let mut kept: Vec<i64> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !kept.iter().any(|&k| semigroup.contains(g - k)) {
                kept.push(g);
            }
        }
        Ok(Self {
            semigroup,
            generators: kept,
        })
    }

    /// The canonical ideal `ω`, generated by `-a` for every gap `a`.
    pub fn canonical(semigroup: &'a NumericalSemigroup) -> Result<Self, IdealError> {
        if semigroup.is_full() {
            return Err(IdealError::FullSemigroup);
        }
        Self::new(semigroup, semigroup.gaps().iter().map(|a| -a))
    }

    /// The ring `A = H` itself, as the ideal generated by 0.
    pub fn unit(semigroup: &'a NumericalSemigroup) -> Self {
        Self {
            semigroup,
            generators: vec![0],
        }
    }

    /// The maximal ideal, generated by the minimal generators of `H`.
    pub fn maximal(semigroup: &'a NumericalSemigroup) -> Self {
        Self {
            semigroup,
            generators: semigroup.generators().to_vec(),
        }
    }

    pub fn semigroup(&self) -> &'a NumericalSemigroup {
        self.semigroup
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn min_generator(&self) -> i64 {
        self.generators[0]
    }

    /// `t^s · I`.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            semigroup: self.semigroup,
            generators: self.generators.iter().map(|g| g + s).collect(),
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        self.generators
            .iter()
            .any(|&g| self.semigroup.contains(z - g))
    }

    /// Largest integer not in the ideal. Everything from
    /// `min_generator + F(H) + 1` on is a member.
    pub fn frobenius(&self) -> i64 {
        let top = self.min_generator() + self.semigroup.frobenius();
        (self.min_generator() - 1..=top)
            .rev()
            .find(|&z| !self.contains(z))
            .expect("min_generator - 1 is never a member")
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    /// True iff `I ⊆ m`: every generator is a positive member of `H`.
    pub fn is_proper_ideal(&self) -> bool {
        self.generators
            .iter()
            .all(|&g| g > 0 && self.semigroup.contains(g))
    }

    /// Least element of `I` in each residue class modulo `m`.
    pub fn apery_set(&self, m: i64) -> Vec<i64> {
        let mut out = Vec::with_capacity(m as usize);
        let mut z = self.min_generator();
        while out.len() < m as usize {
            if self.contains(z) && !self.contains(z - m) {
                out.push(z);
            }
            z += 1;
        }
        out
    }

    /// `A/J` for a proper ideal `J`. `mu` counts minimal generators of `H`
    /// outside `J`; a minimal generator is never a sum of two nonzero
    /// members, so it lies in `m^2 + J` only if it lies in `J`.
    pub fn quotient_data(&self) -> Result<QuotientData, IdealError> {
        if !self.is_proper_ideal() {
            return Err(IdealError::ImproperIdeal(self.generators.clone()));
        }
        let h = self.semigroup;
        let top = self.min_generator() + h.frobenius();
        let cobasis: Vec<i64> = (0..=top)
            .filter(|&z| h.contains(z) && !self.contains(z))
            .collect();
        let outside: Vec<i64> = h
            .generators()
            .iter()
            .copied()
            .filter(|&n| !self.contains(n))
            .collect();
        let cyclic = match outside.as_slice() {
            [] => Some(CyclicQuotient {
                generator: None,
                length: 1,
            }),
            [g] => {
                let expected = (0..cobasis.len() as i64).map(|i| i * g);
                expected
                    .eq(cobasis.iter().copied())
                    .then_some(CyclicQuotient {
                        generator: Some(*g),
                        length: cobasis.len(),
                    })
            }
            _ => None,
        };
        Ok(QuotientData {
            cobasis,
            mu: outside.len(),
            cyclic,
        })
    }
}
