//! The Teter Gorenstein approximation `B = A ×_{A/J} k[[u]]` as an explicit
//! finite model over a prime field, and its numerical verification.

pub mod field;
pub mod linalg;
pub mod ring;
pub mod series;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::CyclicQuotient;

pub use field::{PrimeField, DEFAULT_PRIMES};
pub use ring::{FiberProductRing, Reduction};
pub use series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproximationError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("product needs exponent {needed} but precision is {precision}")]
    PrecisionOverflow { needed: usize, precision: usize },
    #[error("precision {precision} is too small; at least {required} is needed")]
    PrecisionTooSmall { precision: usize, required: usize },
    #[error("shift {shift} is not a monomial Teter witness")]
    NoWitness { shift: i64 },
    #[error("Hilbert-Samuel differences {differences:?} have not stabilized; raise the precision")]
    NonStabilized { differences: Vec<usize> },
    #[error("no nonzerodivisor parameter found after {attempts} attempts")]
    ParameterNotRegular { attempts: usize },
    #[error("pair is not an element of the fiber product: {0}")]
    NotInRing(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerificationError {
    #[error(transparent)]
    Approximation(#[from] ApproximationError),
    #[error("{quantity} differs between precision {low} and {high}")]
    PrecisionUnstable {
        quantity: &'static str,
        low: usize,
        high: usize,
    },
    #[error("{quantity} differs between characteristics {p} and {q}")]
    PrimeDisagreement {
        quantity: &'static str,
        p: u64,
        q: u64,
    },
    #[error("at least one prime is required")]
    NoPrimes,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationOptions {
    /// `None` means `4(F + e + max generator)`, raised to the minimum the
    /// witness needs.
    pub precision: Option<usize>,
    pub primes: Vec<u64>,
    pub seed: u64,
}

impl Default for ApproximationOptions {
    fn default() -> Self {
        Self {
            precision: None,
            primes: DEFAULT_PRIMES.to_vec(),
            seed: 0,
        }
    }
}

pub fn default_precision(h: &crate::NumericalSemigroup) -> usize {
    4 * (h.frobenius().max(0) + h.multiplicity() + h.max_generator()) as usize
}

/// Invariants of `B` that agreed at both precisions and all primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproximationSummary {
    pub shift: i64,
    pub quotient: CyclicQuotient,
    pub multiplicity: usize,
    pub base_multiplicity: i64,
    pub multiplicity_increase_is_one: bool,
    pub residue_length: usize,
    /// `ℓ(B/n^(k+1))` for `k = 0, 1, ...` up to the reliable degree.
    pub hilbert_samuel: Vec<usize>,
    pub reduction_length: usize,
    pub socle_dim: usize,
    pub is_gorenstein: bool,
    pub graded_reduction_hilbert: Vec<usize>,
    pub graded_socle_dim: usize,
    /// `G(B)` is Cohen–Macaulay: `Δ H_B = H_{G(B/yB)}` in every reliable degree.
    pub tangent_cone_cm: bool,
    /// `G(B)` is Cohen–Macaulay and `G(B/yB)` has a one-dimensional socle.
    pub tangent_cone_gorenstein: bool,
    pub precision: usize,
    pub checked_precisions: Vec<usize>,
    pub primes: Vec<u64>,
    /// Always "numerically verified": stability across precisions and
    /// primes is evidence, not a proof of exactness.
    pub status: String,
}

struct Run {
    hilbert_samuel: Vec<usize>,
    multiplicity: usize,
    reduction_length: usize,
    socle_dim: usize,
    graded_reduction_hilbert: Vec<usize>,
    graded_socle_dim: usize,
    tangent_cone_cm: bool,
}

/// Compares the second difference of `ℓ(B/n^(k+1))` with the Hilbert
/// function of `G(B/yB)`; they agree in all degrees iff `y*` is regular on
/// `G(B)` (given `ℓ(B/yB) = e(B)`).
fn tangent_cone_is_cm(hilbert_samuel: &[usize], reduction: &[usize], multiplicity: usize) -> bool {
    let hilbert: Vec<i64> = (0..hilbert_samuel.len())
        .map(|k| {
            hilbert_samuel[k] as i64
                - if k == 0 {
                    0
                } else {
                    hilbert_samuel[k - 1] as i64
                }
        })
        .collect();
    let reduction_length: usize = reduction.iter().sum();
    reduction_length == multiplicity
        && (0..hilbert.len()).all(|k| {
            let delta = hilbert[k] - if k == 0 { 0 } else { hilbert[k - 1] };
            delta == reduction.get(k).copied().unwrap_or(0) as i64
        })
}

fn run(
    h: &crate::NumericalSemigroup,
    shift: i64,
    precision: usize,
    field: PrimeField,
    seed: u64,
) -> Result<Run, ApproximationError> {
    let b = FiberProductRing::build(h, shift, precision, field)?;
    let multiplicity = b.multiplicity()?;
    let r = b.reduction(seed)?;
    let hilbert_samuel = b.hilbert_samuel();
    let graded_reduction_hilbert = r.graded_hilbert_function();
    Ok(Run {
        tangent_cone_cm: tangent_cone_is_cm(
            &hilbert_samuel,
            &graded_reduction_hilbert,
            multiplicity,
        ),
        hilbert_samuel,
        multiplicity,
        reduction_length: r.length(),
        socle_dim: r.socle_dim(),
        graded_reduction_hilbert,
        graded_socle_dim: r.graded_socle_dim(),
    })
}

/// Every quantity compared between two runs, by name. Hilbert–Samuel values
/// are compared on the common reliable range.
fn first_difference(x: &Run, y: &Run) -> Option<&'static str> {
    let common = x.hilbert_samuel.len().min(y.hilbert_samuel.len());
    if x.hilbert_samuel[..common] != y.hilbert_samuel[..common] {
        return Some("Hilbert-Samuel function");
    }
    [
        (x.multiplicity != y.multiplicity, "multiplicity"),
        (x.reduction_length != y.reduction_length, "length of B/yB"),
        (x.socle_dim != y.socle_dim, "socle dimension"),
        (
            x.graded_reduction_hilbert != y.graded_reduction_hilbert,
            "Hilbert function of G(B/yB)",
        ),
        (
            x.graded_socle_dim != y.graded_socle_dim,
            "graded socle dimension",
        ),
        (
            x.tangent_cone_cm != y.tangent_cone_cm,
            "Cohen-Macaulayness of G(B)",
        ),
    ]
    .into_iter()
    .find_map(|(differs, name)| differs.then_some(name))
}

/// Builds `B` for the witness `s` at precisions `N` and `N + 2·max gen`
/// over each prime, and reports the invariants if all runs agree.
pub fn verify_approximation(
    h: &crate::NumericalSemigroup,
    shift: i64,
    options: &ApproximationOptions,
) -> Result<ApproximationSummary, VerificationError> {
    let fields = options
        .primes
        .iter()
        .map(|&p| PrimeField::new(p))
        .collect::<Result<Vec<_>, _>>()?;
    if fields.is_empty() {
        return Err(VerificationError::NoPrimes);
    }
    let low = options.precision.unwrap_or_else(|| {
        let least = ring::minimum_precision(h, shift).unwrap_or(0);
        default_precision(h).max(least)
    });
    let high = low + 2 * h.max_generator() as usize;

    let mut base: Option<(u64, Run)> = None;
    for field in &fields {
        let p = field.characteristic();
        let at_low = run(h, shift, low, *field, options.seed)?;
        let at_high = run(h, shift, high, *field, options.seed)?;
        if let Some(quantity) = first_difference(&at_low, &at_high) {
            return Err(VerificationError::PrecisionUnstable {
                quantity,
                low,
                high,
            });
        }
        match &base {
            None => base = Some((p, at_low)),
            Some((q, first)) => {
                if let Some(quantity) = first_difference(first, &at_low) {
                    return Err(VerificationError::PrimeDisagreement {
                        quantity,
                        p: *q,
                        q: p,
                    });
                }
            }
        }
    }
    let (_, r) = base.expect("at least one prime");
    let quotient = crate::teter::witness_at(
        &crate::RelativeIdeal::canonical(h).expect("a witness exists"),
        shift,
    )
    .expect("a witness exists")
    .quotient;
    Ok(ApproximationSummary {
        shift,
        quotient,
        multiplicity: r.multiplicity,
        base_multiplicity: h.multiplicity(),
        multiplicity_increase_is_one: r.multiplicity as i64 == h.multiplicity() + 1,
        residue_length: r.hilbert_samuel[0],
        hilbert_samuel: r.hilbert_samuel,
        reduction_length: r.reduction_length,
        socle_dim: r.socle_dim,
        is_gorenstein: r.socle_dim == 1,
        graded_reduction_hilbert: r.graded_reduction_hilbert,
        graded_socle_dim: r.graded_socle_dim,
        tangent_cone_cm: r.tangent_cone_cm,
        tangent_cone_gorenstein: r.tangent_cone_cm && r.graded_socle_dim == 1,
        precision: low,
        checked_precisions: vec![low, high],
        primes: options.primes.clone(),
        status: "numerically verified".to_string(),
    })
}
