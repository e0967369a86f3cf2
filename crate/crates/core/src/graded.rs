//! The tangent cone `G(A)` of `A = k[[H]]` and the associated graded module
//! `G_F(J)` of an ideal `J` under the filtration `J ∩ m^n`.
//!
//! Both are monomial: `t^h` has initial form of degree `ord(h)`, and the
//! product of the degree-one form `t^n*` with `[t^h]` is `[t^(h+n)]` when
//! `ord(h + n) = ord(h) + 1` and zero otherwise. The parameter `x` is fixed
//! to `t^e`, `e` the multiplicity.

use thiserror::Error;

use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("the tangent cone G(A) is not Cohen-Macaulay")]
    TangentConeNotCm,
    #[error("ideal with generators {0:?} is not a proper ideal")]
    ImproperIdeal(Vec<i64>),
    #[error("Apéry criterion says CM = {apery}, window scan says CM = {window}")]
    CmCriteriaDisagree { apery: bool, window: bool },
    #[error("x* is not injective on G_F(J): ord({element} + e) != ord({element}) + 1")]
    XStarNotRegular { element: i64 },
}

/// `ord(w + ke) = ord(w) + k` for every `w` in the Apéry set of `H` w.r.t.
/// `e` and every `k >= 1`. Checking `k = 1` alone is not enough (`<5,6,14>`:
/// `ord(14) = 1`, `ord(19) = 2`, `ord(24) = 4`). Only finitely many `k` matter:
/// with reduction number `r <= e - 1`, `m^(n+1) = t^e m^n` for `n >= r`, so
/// `ord(h + e) > ord(h) + 1` forces `ord(h + e) <= e - 1`, hence
/// `h + e <= (e - 1) * max generator`.
pub fn apery_cm_criterion(h: &NumericalSemigroup) -> bool {
    let e = h.multiplicity();
    let top = cm_relevant_bound(h);
    h.apery_set(e)
        .expect("multiplicity is a member")
        .into_iter()
        .all(|w| {
            let base = h.ord(w).expect("Apéry elements are members");
            (1..)
                .map(|k| (k, w + k * e))
                .take_while(|&(_, n)| n <= top)
                .all(|(k, n)| h.ord(n) == Ok(base + k as u32))
        })
}

/// Members `h` with `h + e` above this bound always satisfy
/// `ord(h + e) = ord(h) + 1`.
pub fn cm_relevant_bound(h: &NumericalSemigroup) -> i64 {
    (h.multiplicity() - 1) * h.max_generator()
}

/// `ord(h + e) = ord(h) + 1` for every member `h <= bound`.
pub fn window_cm_scan(h: &NumericalSemigroup, bound: i64) -> bool {
    let e = h.multiplicity();
    (0..=bound)
        .filter(|&n| h.contains(n))
        .all(|n| raises_order(h, n, e))
}

/// Whether `G(A)` is Cohen-Macaulay, i.e. `(t^e)*` is a nonzerodivisor.
/// Runs the Apéry criterion and a window scan up to the larger of
/// `2(F + e) + max gen` and the bound where failures can still occur; a
/// disagreement is an error, never resolved silently.
pub fn assoc_graded_is_cm(h: &NumericalSemigroup) -> Result<bool, GradedError> {
    let apery = apery_cm_criterion(h);
    let bound = (2 * (h.frobenius().max(0) + h.multiplicity()) + h.max_generator())
        .max(cm_relevant_bound(h));
    let window = window_cm_scan(h, bound);
    if apery != window {
        return Err(GradedError::CmCriteriaDisagree { apery, window });
    }
    Ok(apery)
}

fn raises_order(h: &NumericalSemigroup, base: i64, step: i64) -> bool {
    let lower = h.ord(base).expect("base is a member");
    let upper = h.ord(base + step).expect("sum of members is a member");
    upper == lower + 1
}

/// `G_F(J)` for a proper monomial ideal `J`, under the hypothesis that `G(A)`
/// is Cohen-Macaulay. Basis element `[t^j]` (`j ∈ J`) sits in degree `ord(j)`.
#[derive(Debug, Clone)]
pub struct GradedModel<'a> {
    ideal: RelativeIdeal<'a>,
    xstar: i64,
    quotient_basis: Vec<i64>,
}

pub fn build_gf<'a>(ideal: &RelativeIdeal<'a>) -> Result<GradedModel<'a>, GradedError> {
    if !ideal.is_proper_ideal() {
        return Err(GradedError::ImproperIdeal(ideal.generators().to_vec()));
    }
    let h = ideal.semigroup();
    if !assoc_graded_is_cm(h)? {
        return Err(GradedError::TangentConeNotCm);
    }
    let e = h.multiplicity();
    // x* restricted to G_F(J); beyond F_J + e + max gen the pattern is that
    // of G(A), already checked
    let top = ideal.frobenius() + e + h.max_generator();
    if let Some(bad) = (ideal.min_generator()..=top)
        .filter(|&j| ideal.contains(j))
        .find(|&j| !raises_order(h, j, e))
    {
        return Err(GradedError::XStarNotRegular { element: bad });
    }
    Ok(GradedModel {
        ideal: ideal.clone(),
        xstar: e,
        quotient_basis: ideal.apery_set(e),
    })
}

impl<'a> GradedModel<'a> {
    pub fn ideal(&self) -> &RelativeIdeal<'a> {
        &self.ideal
    }

    /// Degree of `[t^j]`, or `None` when `j ∉ J`.
    pub fn degree(&self, j: i64) -> Option<u32> {
        self.ideal
            .contains(j)
            .then(|| self.ideal.semigroup().ord(j).expect("J ⊆ H"))
    }

    /// Whether `t^n* · [t^j]` is nonzero in `G_F(J)`.
    pub fn edge_alive(&self, j: i64, n: i64) -> bool {
        match (self.degree(j), self.degree(j + n)) {
            (Some(d), Some(d2)) => d2 == d + 1,
            _ => false,
        }
    }

    /// Monomial basis of `W = G_F(J) / x* G_F(J)`: the `j ∈ J` with
    /// `j - e ∉ J`, with their degrees.
    pub fn quotient_basis(&self) -> Vec<(i64, u32)> {
        self.quotient_basis
            .iter()
            .map(|&j| (j, self.degree(j).unwrap()))
            .collect()
    }

    /// Basis elements of `W` annihilated by every degree-one form `t^n*`:
    /// the product is either zero already or lands in `x* G_F(J)`.
    pub fn socle_basis(&self) -> Vec<i64> {
        let h = self.ideal.semigroup();
        self.quotient_basis
            .iter()
            .copied()
            .filter(|&j| {
                h.generators()
                    .iter()
                    .all(|&n| !self.edge_alive(j, n) || self.ideal.contains(j + n - self.xstar))
            })
            .collect()
    }

    pub fn socle_dim_mod_xstar(&self) -> usize {
        self.socle_basis().len()
    }
}
