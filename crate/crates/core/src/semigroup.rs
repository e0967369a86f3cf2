//! Numerical semigroups `H = <n_1, ..., n_k>` and the invariants of the
//! monomial curve ring `k[[H]]` that the Teter criteria depend on.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::RwLock;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the complement in N would be infinite")]
    NonCoprime(i64),
    #[error("{0} is not a member of the semigroup")]
    NotAMember(i64),
    #[error("the semigroup is all of N (the ring is regular)")]
    FullSemigroup,
}

/// A numerical semigroup, stored by its minimal generating set together with
/// the Frobenius number, the gaps and a membership table.
///
/// Equality and hashing use the sorted minimal generators only.
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    // membership for 0..=frobenius + max generator
    members: Vec<bool>,
    // ord values for 0..len, None for non-members; extended on demand
    orders: RwLock<Vec<Option<u32>>>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. Input order, duplicates and
    /// redundant generators are all allowed; the stored generating set is the
    /// sorted minimal one.
    pub fn from_generators(gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::NonPositiveGenerator(bad));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NonCoprime(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let modulus = sorted[0];
        let apery = apery_by_shortest_paths(&sorted, modulus);
        let frobenius = apery.iter().max().copied().unwrap_or(0) - modulus;
        let max_gen = *sorted.last().unwrap();

        let table_len = (frobenius + max_gen + 1).max(1) as usize;
        let members: Vec<bool> = (0..table_len as i64)
            .map(|n| n > frobenius || n >= apery[(n % modulus) as usize])
            .collect();
        let member = |n: i64| n >= 0 && (n > frobenius || members[n as usize]);

        // a minimal generator is a nonzero member that is not a sum of two
        // nonzero members, and every such element is among the inputs
        let generators: Vec<i64> = sorted
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|a| member(a) && member(g - a)))
            .collect();
        let gaps = (1..=frobenius).filter(|&n| !member(n)).collect();

        Ok(Self {
            generators,
            frobenius,
            gaps,
            members,
            orders: RwLock::new(vec![Some(0)]),
        })
    }

    /// The full semigroup `N`, i.e. the regular ring `k[[t]]`.
    pub fn natural_numbers() -> Self {
        Self::from_generators(&[1]).expect("<1> is a numerical semigroup")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Largest integer not in `H`; -1 when `H = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Smallest nonzero member; the multiplicity `e(A)`.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Number of minimal generators; `mu` of the maximal ideal.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn max_generator(&self) -> i64 {
        *self.generators.last().unwrap()
    }

    pub fn is_full(&self) -> bool {
        self.frobenius < 0
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.frobenius {
            true
        } else {
            self.members[n as usize]
        }
    }

    /// Least member in each residue class modulo `m`, indexed by residue.
    pub fn apery_set(&self, m: i64) -> Result<Vec<i64>, SemigroupError> {
        if m <= 0 || !self.contains(m) {
            return Err(SemigroupError::NotAMember(m));
        }
        let mut apery = vec![None; m as usize];
        let mut missing = m;
        let mut n = 0;
        while missing > 0 {
            let slot = &mut apery[(n % m) as usize];
            if slot.is_none() && self.contains(n) {
                *slot = Some(n);
                missing -= 1;
            }
            n += 1;
        }
        Ok(apery.into_iter().map(Option::unwrap).collect())
    }

    /// Gaps `f` with `f + h` in `H` for every nonzero member `h`. It suffices
    /// to test the minimal generators.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>, SemigroupError> {
        if self.is_full() {
            return Err(SemigroupError::FullSemigroup);
        }
        Ok(self
            .gaps
            .iter()
            .copied()
            .filter(|&f| self.generators.iter().all(|&n| self.contains(f + n)))
            .collect())
    }

    /// Cohen-Macaulay type of `k[[H]]`; 1 for `H = N`.
    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius().map_or(1, |pf| pf.len())
    }

    pub fn is_gorenstein(&self) -> bool {
        self.cm_type() == 1
    }

    /// Symmetry test: for every integer `z`, exactly one of `z` and `F - z`
    /// lies in `H`. Equivalent to Gorenstein-ness; kept as a separate route.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (-1..=f + 1).all(|z| self.contains(z) != self.contains(f - z))
    }

    /// Order of `t^h` in the `m`-adic filtration: the largest number of
    /// nonzero members summing to `h` (0 for `h = 0`).
    pub fn ord(&self, h: i64) -> Result<u32, SemigroupError> {
        if !self.contains(h) {
            return Err(SemigroupError::NotAMember(h));
        }
        let idx = h as usize;
        {
            let orders = self.orders.read().unwrap();
            if idx < orders.len() {
                return Ok(orders[idx].unwrap());
            }
        }
        let mut orders = self.orders.write().unwrap();
        let target = idx.max(self.default_order_bound());
        for n in orders.len()..=target {
            let n = n as i64;
            let value = if self.contains(n) {
                self.generators
                    .iter()
                    .filter(|&&g| g <= n)
                    .filter_map(|&g| orders[(n - g) as usize])
                    .max()
                    .map(|o| o + 1)
            } else {
                None
            };
            orders.push(value);
        }
        Ok(orders[idx].unwrap())
    }

    fn default_order_bound(&self) -> usize {
        (2 * (self.frobenius.max(0) + self.max_generator() + self.multiplicity())) as usize
    }
}

/// Apéry set of `<gens>` with respect to `modulus` by Dijkstra over residues.
fn apery_by_shortest_paths(gens: &[i64], modulus: i64) -> Vec<i64> {
    let m = modulus as usize;
    let mut dist = vec![i64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let next = (r + g as usize) % m;
            if d + g < dist[next] {
                dist[next] = d + g;
                heap.push(Reverse((d + g, next)));
            }
        }
    }
    dist
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        Self {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            gaps: self.gaps.clone(),
            members: self.members.clone(),
            orders: RwLock::new(self.orders.read().unwrap().clone()),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("generators", &self.generators)
            .field("frobenius", &self.frobenius)
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(i64::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}
