//! Verdict engine: type bound, monomial witness search, tangent cone and
//! socle test, assembled into a [`TeterReport`].

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded::{self, GradedError};
use crate::ideal::{CyclicQuotient, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TeterError {
    #[error("the ring is Gorenstein; Teter-ness presupposes a non-Gorenstein ring")]
    GorensteinInput,
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TeterOptions {
    /// Shifts are searched in `[F, window_multiplier * (F + max generator)]`.
    /// The default of 1 is already exhaustive for monomial witnesses.
    pub window_multiplier: i64,
}

impl Default for TeterOptions {
    fn default() -> Self {
        Self {
            window_multiplier: 1,
        }
    }
}

/// A shift `s` with `J = t^s ω` a proper ideal and `A/J ≅ k[u]/(u^c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeterWitness {
    pub shift: i64,
    pub ideal_generators: Vec<i64>,
    pub quotient: CyclicQuotient,
}

impl TeterWitness {
    // Preference order: smallest quotient generator, then smallest shift.
    // When the generator is t^e, x = t^e maps onto the generator of the
    // regular ring in the fiber product.
    fn preference_key(&self) -> (i64, i64) {
        (self.quotient.generator.unwrap_or(0), self.shift)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotTeterReason {
    /// `type(A) != mu(m) - 1`.
    TypeBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Gorenstein,
    Teter {
        witness: TeterWitness,
    },
    NotTeter {
        reason: NotTeterReason,
    },
    /// Necessary conditions hold but no monomial witness exists; the search
    /// does not cover non-monomial ideals isomorphic to `ω`.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StrongFailure {
    TangentConeNotCm,
    SocleDim { dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum StronglyTeter {
    /// Certified by the witness `shift`, whose `G_F(J)/x* G_F(J)` has a
    /// one-dimensional socle.
    Yes {
        shift: i64,
        socle_dim: usize,
    },
    No {
        reason: StrongFailure,
    },
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub cm_type: usize,
    pub frobenius: i64,
    pub genus: usize,
}

impl Invariants {
    pub fn of(h: &NumericalSemigroup) -> Self {
        Self {
            multiplicity: h.multiplicity(),
            embedding_dimension: h.embedding_dimension(),
            cm_type: h.cm_type(),
            frobenius: h.frobenius(),
            genus: h.genus(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeterReport {
    pub invariants: Invariants,
    pub verdict: Verdict,
    pub type_condition_holds: bool,
    pub tangent_cone_cm: bool,
    pub strongly_teter: StronglyTeter,
    /// Every witness shift found in the search window, ascending.
    pub witness_shifts: Vec<i64>,
}

/// Necessary condition for Teter rings of dimension one:
/// `type(A) = mu(m) - 1`.
pub fn type_condition(h: &NumericalSemigroup) -> bool {
    h.cm_type() + 1 == h.embedding_dimension()
}

/// `J ⊆ H` forces `s >= F`; `mu(A/J) <= 1` needs a minimal generator `n` in
/// `J`, which forces `s <= n + F`.
pub fn search_window(h: &NumericalSemigroup, options: &TeterOptions) -> RangeInclusive<i64> {
    let f = h.frobenius();
    f..=options.window_multiplier * (f + h.max_generator())
}

/// Checks a single shift against the monomial criterion.
pub fn witness_at(canonical: &RelativeIdeal<'_>, shift: i64) -> Option<TeterWitness> {
    let j = canonical.shift(shift);
    if !j.is_proper_ideal() {
        return None;
    }
    let data = j.quotient_data().ok()?;
    if data.mu > 1 {
        return None;
    }
    Some(TeterWitness {
        shift,
        ideal_generators: j.generators().to_vec(),
        quotient: data.cyclic?,
    })
}

/// All monomial witnesses in the search window, by ascending shift.
pub fn teter_witnesses(
    h: &NumericalSemigroup,
    options: &TeterOptions,
) -> Result<Vec<TeterWitness>, TeterError> {
    if h.is_gorenstein() {
        return Err(TeterError::GorensteinInput);
    }
    let canonical = RelativeIdeal::canonical(h).expect("non-Gorenstein, so not N");
    Ok(search_window(h, options)
        .filter_map(|s| witness_at(&canonical, s))
        .collect())
}

/// The reported witness: smallest quotient generator, ties by least shift.
pub fn monomial_teter_witness(
    h: &NumericalSemigroup,
    options: &TeterOptions,
) -> Result<Option<TeterWitness>, TeterError> {
    Ok(preferred(&teter_witnesses(h, options)?).cloned())
}

fn preferred(witnesses: &[TeterWitness]) -> Option<&TeterWitness> {
    witnesses.iter().min_by_key(|w| w.preference_key())
}

/// Strongly-Teter test over the given witnesses. A Cohen-Macaulay tangent
/// cone is necessary; then a witness certifies the property when the socle
/// of `G_F(J)/x* G_F(J)` is one-dimensional. Witnesses are tried in
/// preference order; a failure reports the socle of the preferred one.
pub fn strongly_teter_check(
    h: &NumericalSemigroup,
    witnesses: &[TeterWitness],
) -> Result<StronglyTeter, TeterError> {
    let Some(first) = preferred(witnesses) else {
        return Ok(StronglyTeter::NotApplicable);
    };
    if !graded::assoc_graded_is_cm(h)? {
        return Ok(StronglyTeter::No {
            reason: StrongFailure::TangentConeNotCm,
        });
    }
    let canonical = RelativeIdeal::canonical(h).map_err(|e| TeterError::Internal(e.to_string()))?;
    let socle_of = |w: &TeterWitness| -> Result<usize, TeterError> {
        Ok(graded::build_gf(&canonical.shift(w.shift))?.socle_dim_mod_xstar())
    };
    let mut ordered: Vec<&TeterWitness> = witnesses.iter().collect();
    ordered.sort_by_key(|w| w.preference_key());
    for w in ordered {
        if socle_of(w)? == 1 {
            return Ok(StronglyTeter::Yes {
                shift: w.shift,
                socle_dim: 1,
            });
        }
    }
    Ok(StronglyTeter::No {
        reason: StrongFailure::SocleDim {
            dim: socle_of(first)?,
        },
    })
}

pub fn teter_check(h: &NumericalSemigroup) -> Result<TeterReport, TeterError> {
    teter_check_with(h, &TeterOptions::default())
}

pub fn teter_check_with(
    h: &NumericalSemigroup,
    options: &TeterOptions,
) -> Result<TeterReport, TeterError> {
    let invariants = Invariants::of(h);
    let type_condition_holds = type_condition(h);
    let tangent_cone_cm = graded::assoc_graded_is_cm(h)?;

    if h.is_gorenstein() {
        return Ok(TeterReport {
            invariants,
            verdict: Verdict::Gorenstein,
            type_condition_holds,
            tangent_cone_cm,
            strongly_teter: StronglyTeter::NotApplicable,
            witness_shifts: Vec::new(),
        });
    }

    // searched even when the type bound fails, so a witness there is caught
    let witnesses = teter_witnesses(h, options)?;
    let witness_shifts: Vec<i64> = witnesses.iter().map(|w| w.shift).collect();
    let verdict = match (type_condition_holds, preferred(&witnesses)) {
        (false, None) => Verdict::NotTeter {
            reason: NotTeterReason::TypeBound,
        },
        (false, Some(w)) => {
            return Err(TeterError::Internal(format!(
                "{h}: witness s = {} found although type {} != mu - 1 = {}",
                w.shift,
                invariants.cm_type,
                invariants.embedding_dimension - 1
            )))
        }
        (true, Some(w)) => Verdict::Teter { witness: w.clone() },
        (true, None) => Verdict::Unknown,
    };
    let strongly_teter = strongly_teter_check(h, &witnesses)?;
    if matches!(strongly_teter, StronglyTeter::Yes { .. }) && !tangent_cone_cm {
        return Err(TeterError::Internal(format!(
            "{h}: strongly Teter reported with a non-CM tangent cone"
        )));
    }
    Ok(TeterReport {
        invariants,
        verdict,
        type_condition_holds,
        tangent_cone_cm,
        strongly_teter,
        witness_shifts,
    })
}
