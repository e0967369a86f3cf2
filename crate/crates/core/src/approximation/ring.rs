//! The fiber product `B = A ×_{A/J} k[[u]]` modulo a truncation ideal.
//!
//! With `A/J ≅ k[u]/(u^c)`, `u ↦ t^g`, the ring `B` has the basis
//! `b_h = (t^h, u^(h/g) or 0)` for `h ∈ H` and `z_j = (0, u^j)` for `j >= c`.
//! We keep `b_h` for `h <= N` and `z_j` for `c <= j <= N_q`; the dropped part
//! `T` is an ideal of `B` as soon as `N >= F(J)`, and everything here is
//! computed in `B/T`. Lengths that are only correct when `T ⊆ n^(k+1)` are
//! refused beyond the reliable degree `K`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::linalg::{rank, Echelon};
use super::series::TruncatedSeries;
use super::ApproximationError;
use crate::ideal::{CyclicQuotient, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;
use crate::teter::witness_at;

const PARAMETER_ATTEMPTS: usize = 8;

/// An element of `A × k[[u]]`, both sides truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    pub a: TruncatedSeries,
    pub q: TruncatedSeries,
}

impl Pair {
    fn mul(&self, other: &Pair, field: &PrimeField) -> Pair {
        Pair {
            a: self.a.mul_mod(&other.a, field),
            q: self.q.mul_mod(&other.q, field),
        }
    }
}

type SparseVec = Vec<(usize, u64)>;

#[derive(Debug, Clone)]
pub struct FiberProductRing {
    semigroup: NumericalSemigroup,
    shift: i64,
    ideal_generators: Vec<i64>,
    ideal_frobenius: i64,
    quotient: CyclicQuotient,
    field: PrimeField,
    precision: usize,
    q_precision: usize,
    reliable_degree: usize,
    /// `h` for each `b_h` coordinate, ascending.
    a_positions: Vec<usize>,
    /// Coordinate of `b_h`, indexed by `h`.
    a_index: Vec<Option<usize>>,
    generators: Vec<Vec<u64>>,
    /// Per generator, the image of each basis vector.
    multiplication: Vec<Vec<SparseVec>>,
    /// `n^0, n^1, ..., n^(K+1)` inside `B/T`.
    powers: Vec<Echelon>,
}

/// Smallest precision accepted by [`FiberProductRing::build`].
pub fn minimum_precision(h: &NumericalSemigroup, shift: i64) -> Option<usize> {
    let canonical = RelativeIdeal::canonical(h).ok()?;
    let j = canonical.shift(shift);
    Some((j.frobenius() + h.multiplicity()) as usize)
}

impl FiberProductRing {
    /// Builds `B/T` for the witness `J = t^s ω` at precision `N`.
    pub fn build(
        h: &NumericalSemigroup,
        shift: i64,
        precision: usize,
        field: PrimeField,
    ) -> Result<Self, ApproximationError> {
        let canonical =
            RelativeIdeal::canonical(h).map_err(|_| ApproximationError::NoWitness { shift })?;
        let witness =
            witness_at(&canonical, shift).ok_or(ApproximationError::NoWitness { shift })?;
        let ideal = canonical.shift(shift);
        let ideal_frobenius = ideal.frobenius();
        let e = h.multiplicity();
        let required = (ideal_frobenius + e) as usize;
        if precision < required {
            return Err(ApproximationError::PrecisionTooSmall {
                precision,
                required,
            });
        }
        // (t^j, 0) lies in B for j > F(J), so b_e^(K+1) pushes it past
        // F(J) + (K+1)e; z_(c+K) = z_c b_g^K (or z_1^(c+K)).
        let reliable_degree = (precision - ideal_frobenius as usize) / e as usize - 1;
        let c = witness.quotient.length;
        let q_precision = 2 * c + reliable_degree;

        let a_positions: Vec<usize> = (0..=precision).filter(|&n| h.contains(n as i64)).collect();
        let mut a_index = vec![None; precision + 1];
        for (idx, &n) in a_positions.iter().enumerate() {
            a_index[n] = Some(idx);
        }

        let mut ring = FiberProductRing {
            semigroup: h.clone(),
            shift,
            ideal_generators: witness.ideal_generators.clone(),
            ideal_frobenius,
            quotient: witness.quotient,
            field,
            precision,
            q_precision,
            reliable_degree,
            a_positions,
            a_index,
            generators: Vec::new(),
            multiplication: Vec::new(),
            powers: Vec::new(),
        };

        let mut generators: Vec<Vec<u64>> = h
            .generators()
            .iter()
            .map(|&n| ring.unit_b(n as usize))
            .collect();
        generators.push(ring.unit_z(c));
        ring.multiplication = generators
            .iter()
            .map(|g| ring.multiplication_table(g))
            .collect::<Result<_, _>>()?;
        ring.generators = generators;
        ring.powers = ring.maximal_ideal_powers(reliable_degree + 1);
        Ok(ring)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn ideal_generators(&self) -> &[i64] {
        &self.ideal_generators
    }

    pub fn ideal_frobenius(&self) -> i64 {
        self.ideal_frobenius
    }

    pub fn quotient(&self) -> CyclicQuotient {
        self.quotient
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn q_precision(&self) -> usize {
        self.q_precision
    }

    /// Largest `k` for which [`Self::hilbert_function`] is exact.
    pub fn reliable_degree(&self) -> usize {
        self.reliable_degree
    }

    /// Number of basis vectors of `B/T`.
    pub fn dim(&self) -> usize {
        self.a_positions.len() + self.kernel_dim()
    }

    /// Basis vectors `z_j` of the kernel of `B/T -> A/T_A`.
    pub fn kernel_dim(&self) -> usize {
        self.q_precision + 1 - self.quotient.length
    }

    pub fn a_positions(&self) -> &[usize] {
        &self.a_positions
    }

    /// Coordinate vector of `b_h`, `h ∈ H`, `h <= N`.
    pub fn unit_b(&self, h: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[self.a_index[h].expect("b_h needs h in H")] = 1;
        v
    }

    /// Coordinate vector of `z_j`, `c <= j <= N_q`.
    pub fn unit_z(&self, j: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[self.z_coordinate(j)] = 1;
        v
    }

    fn z_coordinate(&self, j: usize) -> usize {
        assert!(j >= self.quotient.length && j <= self.q_precision);
        self.a_positions.len() + j - self.quotient.length
    }

    /// The Q-exponent that the matching condition ties to `t^h`, if any.
    fn cyclic_position(&self, h: usize) -> Option<usize> {
        let c = self.quotient.length;
        match self.quotient.generator {
            None => (h == 0).then_some(0),
            Some(g) => {
                let g = g as usize;
                (h.is_multiple_of(g) && h / g < c).then(|| h / g)
            }
        }
    }

    pub fn to_pair(&self, v: &[u64]) -> Pair {
        let mut a = TruncatedSeries::zero(self.precision).coeffs().to_vec();
        let mut q = TruncatedSeries::zero(self.q_precision).coeffs().to_vec();
        for (idx, &h) in self.a_positions.iter().enumerate() {
            let coeff = v[idx];
            a[h] = coeff;
            if let Some(i) = self.cyclic_position(h) {
                q[i] = coeff;
            }
        }
        for j in self.quotient.length..=self.q_precision {
            q[j] = v[self.z_coordinate(j)];
        }
        Pair {
            a: TruncatedSeries::from_coeffs(a),
            q: TruncatedSeries::from_coeffs(q),
        }
    }

    /// Coordinates of a pair, which must satisfy the matching condition and
    /// have its `A`-side supported on `H`.
    pub fn from_pair(&self, pair: &Pair) -> Result<Vec<u64>, ApproximationError> {
        let mut v = vec![0; self.dim()];
        for (n, &coeff) in pair.a.coeffs().iter().enumerate() {
            if coeff == 0 {
                continue;
            }
            match self.a_index[n] {
                Some(idx) => v[idx] = coeff,
                None => {
                    return Err(ApproximationError::NotInRing(format!(
                        "t^{n} with {n} not in H"
                    )))
                }
            }
        }
        for i in 0..self.quotient.length {
            let tied = match self.quotient.generator {
                None => pair.a.coeff(0),
                Some(g) => pair.a.coeff(i * g as usize),
            };
            if pair.q.coeff(i) != tied {
                return Err(ApproximationError::NotInRing(format!(
                    "matching condition fails at u^{i}"
                )));
            }
        }
        for j in self.quotient.length..=self.q_precision {
            v[self.z_coordinate(j)] = pair.q.coeff(j);
        }
        Ok(v)
    }

    pub fn mul(&self, v: &[u64], w: &[u64]) -> Result<Vec<u64>, ApproximationError> {
        self.from_pair(&self.to_pair(v).mul(&self.to_pair(w), &self.field))
    }

    fn multiplication_table(&self, g: &[u64]) -> Result<Vec<SparseVec>, ApproximationError> {
        let gp = self.to_pair(g);
        (0..self.dim())
            .map(|i| {
                let mut unit = vec![0; self.dim()];
                unit[i] = 1;
                let image = self.from_pair(&self.to_pair(&unit).mul(&gp, &self.field))?;
                Ok(image
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, c)| c != 0)
                    .collect())
            })
            .collect()
    }

    fn apply(&self, table: &[SparseVec], v: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let mut out = vec![0; self.dim()];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(j, m) in &table[i] {
                out[j] = f.add(out[j], f.mul(c, m));
            }
        }
        out
    }

    /// Images of the rows of `space` under every maximal-ideal generator.
    fn times_maximal_ideal<'s>(
        &'s self,
        space: &'s Echelon,
    ) -> impl Iterator<Item = Vec<u64>> + 's {
        self.multiplication
            .iter()
            .flat_map(move |table| space.rows().iter().map(move |r| self.apply(table, r)))
    }

    fn maximal_ideal_powers(&self, top: usize) -> Vec<Echelon> {
        let d = self.dim();
        let whole = Echelon::spanned_by(self.field, d, &identity_rows(d));
        let mut n = Echelon::new(self.field, d);
        for i in 1..d {
            let mut unit = vec![0; d];
            unit[i] = 1;
            n.insert(unit);
        }
        let mut powers = vec![whole, n];
        while powers.len() <= top {
            let last = powers.last().unwrap();
            let mut next = Echelon::new(self.field, d);
            for v in self.times_maximal_ideal(last) {
                next.insert(v);
            }
            powers.push(next);
        }
        powers
    }

    /// `ℓ(B/n^(k+1))`, exact for `k <= K`.
    pub fn hilbert_function(&self, k: usize) -> Result<usize, ApproximationError> {
        if k > self.reliable_degree {
            return Err(ApproximationError::PrecisionTooSmall {
                precision: self.precision,
                required: self.precision_for_degree(k),
            });
        }
        Ok(self.dim() - self.powers[k + 1].dim())
    }

    fn precision_for_degree(&self, k: usize) -> usize {
        self.ideal_frobenius as usize + (k + 1) * self.semigroup.multiplicity() as usize
    }

    /// `ℓ(B/n^(k+1))` for `k = 0..=K`.
    pub fn hilbert_samuel(&self) -> Vec<usize> {
        (0..=self.reliable_degree)
            .map(|k| self.hilbert_function(k).expect("k <= K"))
            .collect()
    }

    /// The first difference of the Hilbert–Samuel function, required to be
    /// constant over the last three reliable degrees.
    pub fn multiplicity(&self) -> Result<usize, ApproximationError> {
        let values = self.hilbert_samuel();
        let diffs: Vec<usize> = values.windows(2).map(|w| w[1] - w[0]).collect();
        match diffs.as_slice() {
            [.., a, b, c] if a == b && b == c => Ok(*c),
            _ => Err(ApproximationError::NonStabilized { differences: diffs }),
        }
    }

    /// A parameter whose `Q`-side is `u`: `b_e` when `g = e`, else
    /// `b_e + b_g`, or `b_e + z_1` when `c = 1`.
    pub fn default_parameter(&self) -> Vec<u64> {
        let e = self.semigroup.multiplicity() as usize;
        let mut y = self.unit_b(e);
        match self.quotient.generator {
            Some(g) if g as usize == e => {}
            Some(g) => y[self.a_index[g as usize].expect("g in H")] = 1,
            None => y[self.z_coordinate(1)] = 1,
        }
        y
    }

    /// Reduction `B/(y)` for the default parameter, perturbed by random
    /// elements of `n` (seeded) when it does not behave as a nonzerodivisor.
    pub fn reduction(&self, seed: u64) -> Result<Reduction<'_>, ApproximationError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut y = self.default_parameter();
        for _ in 0..PARAMETER_ATTEMPTS {
            if let Some(r) = self.try_reduction(&y) {
                return Ok(r);
            }
            for g in &self.generators {
                let c = rng.gen_range(0..self.field.characteristic());
                for (yi, &gi) in y.iter_mut().zip(g) {
                    *yi = self.field.add(*yi, self.field.mul(c, gi));
                }
            }
        }
        Err(ApproximationError::ParameterNotRegular {
            attempts: PARAMETER_ATTEMPTS,
        })
    }

    /// `y` is a nonzerodivisor of `B` iff both of its sides are nonzero, and
    /// then `ℓ(B/yB) = ord_t + ord_u`. A smaller count in `B/T` means `T` is
    /// not inside `yB` at this precision.
    fn try_reduction(&self, y: &[u64]) -> Option<Reduction<'_>> {
        let pair = self.to_pair(y);
        let expected = pair.a.order()? + pair.q.order()?;
        let table = self.multiplication_table(y).ok()?;
        let d = self.dim();
        let images: Vec<Vec<u64>> = identity_rows(d)
            .iter()
            .map(|r| self.apply(&table, r))
            .collect();
        let principal = Echelon::spanned_by(self.field, d, &images);
        (d - principal.dim() == expected).then(|| Reduction {
            ring: self,
            parameter: y.to_vec(),
            principal,
        })
    }
}

fn identity_rows(d: usize) -> Vec<Vec<u64>> {
    (0..d)
        .map(|i| {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        })
        .collect()
}

/// The Artinian ring `B̄ = B/yB`.
#[derive(Debug, Clone)]
pub struct Reduction<'r> {
    ring: &'r FiberProductRing,
    parameter: Vec<u64>,
    principal: Echelon,
}

impl<'r> Reduction<'r> {
    pub fn parameter(&self) -> &[u64] {
        &self.parameter
    }

    pub fn length(&self) -> usize {
        self.ring.dim() - self.principal.dim()
    }

    /// `dim (yB : n)/yB`.
    pub fn socle_dim(&self) -> usize {
        let ring = self.ring;
        let complement = self.principal.free_columns();
        let images: Vec<Vec<u64>> = complement
            .iter()
            .map(|&i| {
                let mut unit = vec![0; ring.dim()];
                unit[i] = 1;
                ring.multiplication
                    .iter()
                    .flat_map(|t| self.principal.reduce(ring.apply(t, &unit)))
                    .collect()
            })
            .collect();
        complement.len() - rank(ring.field, &images)
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle_dim() == 1
    }

    /// `P_k = n^k + yB` for `k = 0, 1, ...` until it reaches `yB`.
    fn filtration(&self) -> Vec<Echelon> {
        let ring = self.ring;
        let mut chain = vec![ring.powers[0].clone(), ring.powers[1].clone()];
        while chain.last().unwrap().dim() > self.principal.dim() {
            let mut next = self.principal.clone();
            for v in ring.times_maximal_ideal(chain.last().unwrap()) {
                next.insert(v);
            }
            chain.push(next);
        }
        chain
    }

    /// Hilbert function of `G(B̄)`.
    pub fn graded_hilbert_function(&self) -> Vec<usize> {
        self.filtration()
            .windows(2)
            .map(|w| w[0].dim() - w[1].dim())
            .collect()
    }

    /// Socle dimension of `G(B̄) = ⊕ P_k/P_(k+1)`, degree by degree: a
    /// class of degree `k` is in the socle when every generator of `n`
    /// carries it into `P_(k+2)`.
    pub fn graded_socle_dim(&self) -> usize {
        let ring = self.ring;
        let chain = self.filtration();
        let top = chain.len() - 1;
        let mut total = 0;
        for k in 0..top {
            let mut lifted = chain[k + 1].clone();
            let reps: Vec<Vec<u64>> = chain[k]
                .rows()
                .iter()
                .filter(|r| lifted.insert((*r).clone()))
                .cloned()
                .collect();
            let target = &chain[(k + 2).min(top)];
            let images: Vec<Vec<u64>> = reps
                .iter()
                .map(|v| {
                    ring.multiplication
                        .iter()
                        .flat_map(|t| target.reduce(ring.apply(t, v)))
                        .collect()
                })
                .collect();
            total += reps.len() - rank(ring.field, &images);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(gens: &[i64], shift: i64, precision: usize) -> FiberProductRing {
        let h = NumericalSemigroup::from_generators(gens).unwrap();
        FiberProductRing::build(&h, shift, precision, PrimeField::new(32003).unwrap()).unwrap()
    }

    #[test]
    fn quotient_structure() {
        let b = ring(&[3, 4, 5], 6, 40);
        assert_eq!(
            b.quotient(),
            CyclicQuotient {
                generator: Some(3),
                length: 3
            }
        );
        let b = ring(&[4, 5, 11], 11, 80);
        assert_eq!(
            b.quotient(),
            CyclicQuotient {
                generator: Some(11),
                length: 2
            }
        );
    }

    #[test]
    fn identity_and_matching_condition() {
        let b = ring(&[3, 4, 5], 6, 40);
        let one = b.unit_b(0);
        let pair = b.to_pair(&one);
        assert_eq!(pair.a.coeffs()[0], 1);
        assert_eq!(pair.q.coeffs()[0], 1);
        for &h in b.a_positions() {
            assert_eq!(b.mul(&one, &b.unit_b(h)).unwrap(), b.unit_b(h));
        }
        // b_3 = (t^3, u), b_6 = (t^6, u^2), b_9 = (t^9, 0)
        assert_eq!(b.to_pair(&b.unit_b(6)).q.coeff(2), 1);
        assert!(b.to_pair(&b.unit_b(9)).q.is_zero());
        // b_6 b_3 = (t^9, u^3) = b_9 + z_3
        let mut expected = b.unit_b(9);
        expected[b.z_coordinate(3)] = 1;
        assert_eq!(b.mul(&b.unit_b(6), &b.unit_b(3)).unwrap(), expected);
    }

    #[test]
    fn off_semigroup_pairs_are_rejected() {
        let b = ring(&[3, 4, 5], 6, 40);
        let mut pair = b.to_pair(&b.unit_b(3));
        assert!(b.from_pair(&pair).is_ok());
        pair.q = TruncatedSeries::zero(b.q_precision());
        assert!(matches!(
            b.from_pair(&pair),
            Err(ApproximationError::NotInRing(_))
        ));
        let pair = Pair {
            a: TruncatedSeries::monomial(2, 1, b.precision()),
            q: TruncatedSeries::zero(b.q_precision()),
        };
        assert!(matches!(
            b.from_pair(&pair),
            Err(ApproximationError::NotInRing(_))
        ));
    }

    #[test]
    fn multiplicities() {
        let b = ring(&[3, 4, 5], 6, 40);
        assert_eq!(b.hilbert_function(0), Ok(1));
        assert_eq!(b.multiplicity(), Ok(4));
        let b = ring(&[4, 5, 11], 11, 92);
        assert_eq!(b.multiplicity(), Ok(5));
    }

    #[test]
    fn small_precision_errors() {
        let h = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        let f = PrimeField::new(32003).unwrap();
        let least = minimum_precision(&h, 6).unwrap();
        assert!(matches!(
            FiberProductRing::build(&h, 6, least - 1, f),
            Err(ApproximationError::PrecisionTooSmall { .. })
        ));
        let b = FiberProductRing::build(&h, 6, least, f).unwrap();
        assert!(matches!(
            b.multiplicity(),
            Err(ApproximationError::NonStabilized { .. })
        ));
        assert!(matches!(
            b.hilbert_function(b.reliable_degree() + 1),
            Err(ApproximationError::PrecisionTooSmall { .. })
        ));
    }

    #[test]
    fn non_witness_is_rejected() {
        let h = NumericalSemigroup::from_generators(&[5, 6, 7, 9]).unwrap();
        assert!(matches!(
            FiberProductRing::build(&h, 10, 100, PrimeField::new(32003).unwrap()),
            Err(ApproximationError::NoWitness { shift: 10 })
        ));
    }

    #[test]
    fn gorenstein_reductions() {
        for (gens, shift) in [(&[3, 4, 5][..], 6), (&[3, 4, 5], 5), (&[4, 5, 11], 11)] {
            let b = ring(gens, shift, 80);
            let r = b.reduction(0).unwrap();
            assert_eq!(r.socle_dim(), 1, "{gens:?} s={shift}");
        }
    }

    #[test]
    fn graded_reduction_for_three_four_five() {
        let b = ring(&[3, 4, 5], 5, 40);
        let r = b.reduction(0).unwrap();
        assert_eq!(r.length(), 4);
        assert_eq!(r.graded_hilbert_function(), vec![1, 2, 1]);
        assert_eq!(r.graded_socle_dim(), 1);
    }
}
