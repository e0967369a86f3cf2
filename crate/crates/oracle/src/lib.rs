//! Brute-force reference computations for numerical semigroups.
//!
//! Everything here works directly from a generator list with no caching and
//! no pruning. These functions exist so the test suites of `teter-core` can
//! check each fast path against a twin that shares none of its code.

/// Coin-problem membership: can `n` be written as a nonnegative integer
/// combination of `gens`?
pub fn bf_membership(gens: &[i64], n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let n = n as usize;
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for total in 1..=n {
        reachable[total] = gens.iter().any(|&g| {
            let g = g as usize;
            g > 0 && g <= total && reachable[total - g]
        });
    }
    reachable[n]
}

/// Frobenius number by scanning until `min(gens)` consecutive members appear.
/// Returns -1 for the full semigroup. Panics if the generators are not coprime
/// (the scan would never terminate).
pub fn bf_frobenius(gens: &[i64]) -> i64 {
    let m = *gens.iter().min().expect("nonempty generators");
    let limit = 4 * (gens.iter().max().unwrap() + 1).pow(2);
    let mut run = 0;
    let mut last_gap = -1;
    let mut n = 0;
    while run < m {
        assert!(n <= limit, "generators are not coprime");
        if bf_membership(gens, n) {
            run += 1;
        } else {
            run = 0;
            last_gap = n;
        }
        n += 1;
    }
    last_gap
}

pub fn bf_gaps(gens: &[i64]) -> Vec<i64> {
    let f = bf_frobenius(gens);
    (1..=f).filter(|&n| !bf_membership(gens, n)).collect()
}

/// Minimal generators: nonzero members that are not a sum of two nonzero
/// members.
pub fn bf_minimal_generators(gens: &[i64]) -> Vec<i64> {
    let f = bf_frobenius(gens);
    let top = 2 * (f + gens.iter().max().unwrap()) + 2;
    (1..=top)
        .filter(|&h| bf_membership(gens, h))
        .filter(|&h| !(1..h).any(|a| bf_membership(gens, a) && bf_membership(gens, h - a)))
        .collect()
}

/// Pseudo-Frobenius numbers: gaps `f` with `f + h` a member for every nonzero
/// member `h` (checked for all `h` up to `2F + 2`; beyond that every sum is
/// automatically a member).
pub fn bf_pseudo_frobenius(gens: &[i64]) -> Vec<i64> {
    let f = bf_frobenius(gens);
    bf_gaps(gens)
        .into_iter()
        .filter(|&gap| {
            (1..=2 * f + 2)
                .filter(|&h| bf_membership(gens, h))
                .all(|h| bf_membership(gens, gap + h))
        })
        .collect()
}

pub fn bf_cm_type(gens: &[i64]) -> usize {
    if bf_frobenius(gens) < 0 {
        1
    } else {
        bf_pseudo_frobenius(gens).len()
    }
}

/// The canonical ideal, generated by `-a` for every gap `a`, reduced by
/// exhaustive pairwise containment. Returns its minimal generators, sorted.
pub fn bf_canonical(gens: &[i64]) -> Vec<i64> {
    let candidates: Vec<i64> = if bf_frobenius(gens) < 0 {
        vec![0]
    } else {
        bf_gaps(gens).iter().map(|a| -a).collect()
    };
    let mut minimal: Vec<i64> = candidates
        .iter()
        .copied()
        .filter(|&z| {
            !candidates
                .iter()
                .any(|&w| w != z && bf_membership(gens, z - w))
        })
        .collect();
    minimal.sort_unstable();
    minimal
}

/// Maximal number of nonzero members summing to `h`, by enumerating every
/// factorization over `gens`. Returns `None` when `h` is not a member.
pub fn bf_ord(gens: &[i64], h: i64) -> Option<u32> {
    fn longest(gens: &[i64], remaining: i64) -> Option<u32> {
        if remaining == 0 {
            return Some(0);
        }
        let (&first, rest) = gens.split_first()?;
        let mut best = longest(rest, remaining);
        let mut copies = 1;
        while copies * first <= remaining {
            if let Some(tail) = longest(rest, remaining - copies * first) {
                best = best.max(Some(tail + copies as u32));
            }
            copies += 1;
        }
        best
    }
    if h < 0 {
        return None;
    }
    let mut sorted = gens.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.dedup();
    longest(&sorted, h)
}

/// Tangent cone Cohen-Macaulayness by a plain window scan: the initial form
/// of `t^e` must raise the order of every member by exactly one.
pub fn bf_tangent_cone_cm(gens: &[i64]) -> bool {
    let f = bf_frobenius(gens);
    let e = bf_minimal_generators(gens)[0];
    let max_gen = *gens.iter().max().unwrap();
    let top = (3 * (f.max(0) + e) + max_gen).max(e * max_gen);
    (0..=top)
        .filter(|&h| bf_membership(gens, h))
        .all(|h| bf_ord(gens, h + e) == bf_ord(gens, h).map(|o| o + 1))
}

/// Every shift `s` in `[F, multiplier * (max generator + F)]` for which
/// `t^s` times the canonical ideal is a proper ideal of the ring whose
/// quotient has a principal maximal ideal. Empty for symmetric semigroups.
pub fn bf_teter_scan(gens: &[i64], multiplier: i64) -> Vec<i64> {
    let f = bf_frobenius(gens);
    if f < 0 || bf_cm_type(gens) == 1 {
        return Vec::new();
    }
    let minimal = bf_minimal_generators(gens);
    let max_gen = *minimal.last().unwrap();
    let gaps = bf_gaps(gens);
    let in_shifted = |s: i64, z: i64| gaps.iter().any(|&a| bf_membership(gens, z - s + a));
    let mut found = Vec::new();
    for s in f..=multiplier * (max_gen + f) {
        // the shifted ideal's smallest element is s - F
        let lo = s - f;
        let hi = s + f + max_gen + 1;
        let inside_ring = (lo..=hi).all(|z| !in_shifted(s, z) || bf_membership(gens, z));
        if !inside_ring || in_shifted(s, 0) {
            continue;
        }
        let mu = minimal.iter().filter(|&&n| !in_shifted(s, n)).count();
        if mu <= 1 {
            found.push(s);
        }
    }
    found
}

/// All numerical semigroups of genus at most `max_genus`, as sorted minimal
/// generating sets, grouped by genus. Built from the tree in which the
/// children of `H` are `H \ {g}` for minimal generators `g > F(H)`.
pub fn semigroups_by_genus(max_genus: usize) -> Vec<Vec<Vec<i64>>> {
    let mut levels: Vec<Vec<Vec<i64>>> = vec![vec![Vec::new()]];
    for _ in 0..max_genus {
        let mut next = Vec::new();
        for gaps in levels.last().unwrap() {
            let frob = gaps.last().copied().unwrap_or(-1);
            for g in gap_set_minimal_generators(gaps) {
                if g > frob {
                    let mut child = gaps.clone();
                    child.push(g);
                    next.push(child);
                }
            }
        }
        levels.push(next);
    }
    levels
        .into_iter()
        .map(|level| {
            level
                .iter()
                .map(|gaps| gap_set_minimal_generators(gaps))
                .collect()
        })
        .collect()
}

fn gap_set_minimal_generators(gaps: &[i64]) -> Vec<i64> {
    let frob = gaps.last().copied().unwrap_or(-1);
    let member = |x: i64| x >= 0 && !gaps.contains(&x);
    (1..=2 * frob + 3)
        .filter(|&h| member(h))
        .filter(|&h| !(1..h).any(|a| member(a) && member(h - a)))
        .collect()
}
