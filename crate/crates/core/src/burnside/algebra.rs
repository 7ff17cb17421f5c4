use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::Matrix;
use crate::poly::{factor_prime_field, minimal_polynomial_of_sequence, split_over_rationals, Poly};
use crate::scalar::{Field, PrimeField, Rational};

use super::BurnsideError;

/// Seed used when callers do not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Random combinations tried before falling back to certified splitters.
const RANDOM_TRIES: usize = 24;

/// A finite-dimensional unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteAlgebra<F> {
    dim: usize,
    /// `table[i * dim + j]` is `e_i · e_j`
    table: Vec<Vec<F>>,
    unit: Vec<F>,
}

impl<F: Field> FiniteAlgebra<F> {
    /// Checks shapes and the two-sided unit law on basis elements.
    pub fn new(dim: usize, table: Vec<Vec<F>>, unit: Vec<F>) -> Result<Self, BurnsideError> {
        if table.len() != dim * dim || table.iter().any(|v| v.len() != dim) || unit.len() != dim {
            return Err(BurnsideError::InvalidAlgebra(
                "structure constants have the wrong shape".into(),
            ));
        }
        let a = FiniteAlgebra { dim, table, unit };
        for i in 0..dim {
            let e = a.basis_vector(i);
            if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
                return Err(BurnsideError::InvalidAlgebra(format!(
                    "unit fails on basis element {i}"
                )));
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (o, c) in out.iter_mut().zip(&self.table[i * n + j]) {
                    if !c.is_zero() {
                        o.add_mul(&ab, c);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[F], mut e: u64) -> Vec<F> {
        let mut acc = self.unit.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..i).all(|j| self.table[i * n + j] == self.table[j * n + i]))
    }

    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul(&self.table[i * n + j], &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &self.table[j * n + k]);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn is_idempotent(&self, e: &[F]) -> bool {
        self.mul(e, e) == e
    }

    /// Checks `e_i e_j = δ_ij e_i` and `Σ e_i = 1`.
    pub fn is_complete_orthogonal(&self, es: &[Vec<F>]) -> bool {
        let mut sum = vec![F::zero(); self.dim];
        for (i, e) in es.iter().enumerate() {
            for (s, v) in sum.iter_mut().zip(e) {
                *s = s.clone() + v.clone();
            }
            for (j, f) in es.iter().enumerate() {
                let p = self.mul(e, f);
                let ok = if i == j { p == *e } else { p.iter().all(|c| c.is_zero()) };
                if !ok {
                    return false;
                }
            }
        }
        sum == self.unit
    }

    /// Minimal polynomial of `z` in the corner `fAf` (unit `f`).
    fn corner_minimal_polynomial(&self, z: &[F], f: &[F]) -> Poly<F> {
        let zf = self.mul(z, f);
        let mut cur = f.to_vec();
        minimal_polynomial_of_sequence(|k| {
            if k > 0 {
                cur = self.mul(&cur, &zf);
            }
            cur.clone()
        })
    }

    /// Splits the idempotent `f` along coprime factors `m = Π P_i` of the
    /// minimal polynomial of `z f`: returns the CRT idempotents `u_i(z f)`
    /// with `u_i ≡ 1 mod P_i`, `u_i ≡ 0 mod P_j`.
    fn crt_split(&self, z: &[F], f: &[F], parts: &[Poly<F>]) -> Vec<Vec<F>> {
        let m = parts.iter().fold(Poly::one(), |acc, p| acc.mul(p));
        let zf = self.mul(z, f);
        parts
            .iter()
            .map(|p| {
                let q = m.exact_div(p);
                let (g, s, _) = q.ext_gcd(p);
                debug_assert!(g.is_one());
                let u = s.mul(&q).rem(&m);
                u.eval_with(
                    &zf,
                    &f.to_vec(),
                    |a, b| self.mul(a, b),
                    |c, one, acc| {
                        one.iter()
                            .zip(acc)
                            .map(|(o, a)| c.clone() * o.clone() + a.clone())
                            .collect()
                    },
                    &vec![F::zero(); self.dim],
                )
            })
            .collect()
    }
}

impl<F: PrimeField> FiniteAlgebra<F> {
    /// Frobenius `x ↦ x^p` as a matrix; linear because the algebra is
    /// commutative of characteristic `p`.
    fn frobenius_matrix(&self) -> Matrix<F> {
        let p = F::MODULUS as u64;
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.pow(&self.basis_vector(j), p)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Basis of `{x : x^p = x}`, the span of the primitive idempotents.
    fn frobenius_fixed_space(&self) -> Vec<Vec<F>> {
        let phi = self.frobenius_matrix();
        phi.sub(&Matrix::identity(self.dim)).kernel()
    }
}

/// Complete set of primitive idempotents of a commutative algebra over
/// `F_p`, ordered lexicographically by coefficient vector.
///
/// Splitting uses minimal polynomials of basis elements, then seeded random
/// elements, then elements of the Frobenius-fixed subalgebra (which always
/// separate). The result is certified: its size equals
/// `dim ker(Φ - 1)`, the number of primitive idempotents.
pub fn primitive_idempotents<F: PrimeField>(a: &FiniteAlgebra<F>, seed: u64) -> Result<Vec<Vec<F>>, BurnsideError> {
    if !a.is_commutative() {
        return Err(BurnsideError::NotCommutative);
    }
    let fixed = a.frobenius_fixed_space();
    let target = fixed.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids = vec![a.unit.clone()];

    let basis: Vec<Vec<F>> = (0..a.dim).map(|i| a.basis_vector(i)).collect();
    let random: Vec<Vec<F>> = (0..RANDOM_TRIES)
        .map(|_| (0..a.dim).map(|_| F::from_u64(rng.gen::<u64>())).collect())
        .collect();
    for z in basis.iter().chain(&random).chain(&fixed) {
        if ids.len() == target {
            break;
        }
        let mut next = Vec::with_capacity(ids.len());
        for f in &ids {
            let m = a.corner_minimal_polynomial(z, f);
            let factors = factor_prime_field(&m, &mut rng);
            if factors.len() < 2 {
                next.push(f.clone());
                continue;
            }
            let parts: Vec<Poly<F>> = factors
                .iter()
                .map(|(p, k)| (0..*k).fold(Poly::one(), |acc, _| acc.mul(p)))
                .collect();
            next.extend(a.crt_split(z, f, &parts));
        }
        ids = next;
    }
    if ids.len() != target {
        return Err(BurnsideError::SplittingFailed(format!(
            "found {} idempotents, expected {target}",
            ids.len()
        )));
    }
    ids.sort();
    if !a.is_complete_orthogonal(&ids) {
        return Err(BurnsideError::SplittingFailed("idempotents are not orthogonal".into()));
    }
    Ok(ids)
}

/// Primitive idempotents over the rationals, provided every basis element's
/// minimal polynomial on each corner splits into linear factors. The result
/// is certified local: on each corner `eA` every basis element has a single
/// eigenvalue, so `eA` is the line through `e` plus a nilpotent ideal.
pub fn primitive_idempotents_rational(a: &FiniteAlgebra<Rational>) -> Result<Vec<Vec<Rational>>, BurnsideError> {
    if !a.is_commutative() {
        return Err(BurnsideError::NotCommutative);
    }
    let mut ids = vec![a.unit.clone()];
    loop {
        let mut changed = false;
        for i in 0..a.dim {
            let z = a.basis_vector(i);
            let mut next = Vec::with_capacity(ids.len());
            for f in &ids {
                let m = a.corner_minimal_polynomial(&z, f);
                let roots = split_over_rationals(&m).ok_or(BurnsideError::NotSplitOverRationals)?;
                if roots.len() < 2 {
                    next.push(f.clone());
                    continue;
                }
                changed = true;
                let parts: Vec<Poly<Rational>> = roots
                    .iter()
                    .map(|(c, k)| (0..*k).fold(Poly::one(), |acc, _| acc.mul(&Poly::linear(c.clone()))))
                    .collect();
                next.extend(a.crt_split(&z, f, &parts));
            }
            ids = next;
        }
        if !changed {
            break;
        }
    }
    ids.sort();
    if !a.is_complete_orthogonal(&ids) {
        return Err(BurnsideError::SplittingFailed("idempotents are not orthogonal".into()));
    }
    Ok(ids)
}
