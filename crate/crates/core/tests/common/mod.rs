#![allow(dead_code)]

use teter_core::graded::assoc_graded_is_cm;
use teter_core::teter::{teter_witnesses, type_condition, TeterOptions};
use teter_core::{NumericalSemigroup, RelativeIdeal};
use teter_oracle as oracle;

/// Number of numerical semigroups of each genus, 0 through 12.
pub const GENUS_COUNTS: [usize; 13] = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592];

pub fn semigroup(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

#[derive(Debug, Default)]
pub struct SweepStats {
    pub semigroups: usize,
    pub witnesses: usize,
    pub gorenstein: usize,
}

/// Checks every fast operation against the brute-force oracle on one
/// semigroup. Returns a description of the first mismatch.
pub fn check_against_oracle(gens: &[i64], stats: &mut SweepStats) -> Result<(), String> {
    let h = semigroup(gens);
    let fail = |what: &str| Err(format!("{h}: {what}"));
    let f = h.frobenius();
    let e = h.multiplicity();
    let top = 2 * (f.max(0) + h.max_generator() + e);

    if h.generators() != oracle::bf_minimal_generators(gens) {
        return fail("minimal generators");
    }
    if (-1..=top).any(|n| h.contains(n) != oracle::bf_membership(gens, n)) {
        return fail("membership");
    }
    if f != oracle::bf_frobenius(gens) || h.gaps() != oracle::bf_gaps(gens) {
        return fail("Frobenius number or gaps");
    }
    let pf = if h.is_full() {
        Vec::new()
    } else {
        h.pseudo_frobenius().unwrap()
    };
    if pf != oracle::bf_pseudo_frobenius(gens) || h.cm_type() != oracle::bf_cm_type(gens) {
        return fail("pseudo-Frobenius numbers or type");
    }
    if h.is_symmetric() != (oracle::bf_cm_type(gens) == 1) {
        return fail("symmetry");
    }
    let canonical = match RelativeIdeal::canonical(&h) {
        Ok(w) => w.generators().to_vec(),
        Err(_) => vec![0],
    };
    if canonical != oracle::bf_canonical(gens) {
        return fail("canonical ideal");
    }
    if h.is_gorenstein() {
        stats.gorenstein += 1;
        if canonical.len() != 1 {
            return fail("Gorenstein but canonical ideal not principal");
        }
    }
    let ord_top = f.max(0) + h.max_generator() + e;
    if (0..=ord_top).any(|n| h.ord(n).ok() != oracle::bf_ord(gens, n)) {
        return fail("order function");
    }
    if assoc_graded_is_cm(&h) != Ok(oracle::bf_tangent_cone_cm(gens)) {
        return fail("tangent cone Cohen-Macaulayness");
    }
    if !h.is_gorenstein() {
        let shifts: Vec<i64> = teter_witnesses(&h, &TeterOptions::default())
            .unwrap()
            .iter()
            .map(|w| w.shift)
            .collect();
        if shifts != oracle::bf_teter_scan(gens, 3) {
            return fail("witness shifts in the standard window vs the 3x window");
        }
        if !shifts.is_empty() && !type_condition(&h) {
            return fail("witness found although type != mu - 1");
        }
        stats.witnesses += shifts.len();
    }
    stats.semigroups += 1;
    Ok(())
}

/// Runs [`check_against_oracle`] over every semigroup of genus up to
/// `max_genus`, after checking the enumeration counts.
pub fn oracle_sweep(max_genus: usize) -> Result<SweepStats, String> {
    let levels = oracle::semigroups_by_genus(max_genus);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    if counts != GENUS_COUNTS[..=max_genus] {
        return Err(format!("genus counts {counts:?}"));
    }
    let mut stats = SweepStats::default();
    for gens in levels.iter().flatten() {
        check_against_oracle(gens, &mut stats)?;
    }
    Ok(stats)
}
