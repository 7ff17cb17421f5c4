use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Matrix, SpanBuilder};
use crate::poly::{factor_prime_field, minimal_polynomial, Poly};
use crate::scalar::PrimeField;

use super::{hom_space, Module, ReplibError};

/// Random endomorphisms tried before the locality certificate.
const RANDOM_TRIES: usize = 16;

/// Random endomorphisms tried when the certificate shows the endomorphism
/// ring is not local but gives no splitting element directly.
const EXTENDED_TRIES: usize = 512;

/// An indecomposable summand together with its basis in the ambient module.
#[derive(Clone, Debug)]
pub struct Piece<F> {
    pub module: Module<F>,
    /// columns span the summand inside the decomposed module
    pub basis: Matrix<F>,
    /// index into [`Decomposition::summands`]
    pub class: usize,
}

/// One isomorphism class of indecomposable summands.
#[derive(Clone, Debug)]
pub struct Summand<F> {
    pub module: Module<F>,
    pub multiplicity: usize,
}

/// `M ≅ ⊕ M_i^{a_i}` with `M_i` indecomposable and pairwise
/// non-isomorphic. `certificate` has the piece bases as its column blocks
/// and conjugates the action of `M` into block-diagonal form.
#[derive(Clone, Debug)]
pub struct Decomposition<F> {
    pub pieces: Vec<Piece<F>>,
    pub summands: Vec<Summand<F>>,
    pub certificate: Matrix<F>,
}

impl<F: PrimeField> Decomposition<F> {
    /// Dimensions of the summands, with multiplicity, in decreasing order.
    pub fn dimensions(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.pieces.iter().map(|p| p.module.dim()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_indecomposable(&self) -> bool {
        self.pieces.len() == 1
    }
}

/// Splits `M` along the primary decomposition of `φ ∈ End_G(M)` when the
/// minimal polynomial of `φ` has at least two distinct irreducible factors.
fn primary_split<F: PrimeField>(phi: &Matrix<F>, rng: &mut ChaCha8Rng) -> Option<Vec<Matrix<F>>> {
    let m = minimal_polynomial(phi);
    let factors = factor_prime_field(&m, rng);
    if factors.len() < 2 {
        return None;
    }
    Some(
        factors
            .iter()
            .map(|(p, e)| {
                let pe = (0..*e).fold(Poly::one(), |acc, _| acc.mul(p));
                pe.eval_matrix(phi).kernel_matrix()
            })
            .collect(),
    )
}

fn flatten<F: PrimeField>(m: &Matrix<F>) -> Vec<F> {
    m.as_slice().to_vec()
}

fn unflatten<F: PrimeField>(d: usize, v: &[F]) -> Matrix<F> {
    Matrix::from_vec(d, d, v.to_vec())
}

fn random_combination<F: PrimeField>(basis: &[Matrix<F>], rng: &mut ChaCha8Rng) -> Matrix<F> {
    let d = basis[0].rows();
    let mut out = Matrix::zeros(d, d);
    for b in basis {
        out.add_scaled(&F::from_u64(rng.gen::<u64>()), b);
    }
    out
}

/// Outcome of the locality certificate for `End_G(M)`.
enum Locality<F> {
    Local,
    /// an endomorphism whose minimal polynomial has two coprime factors
    Splitter(Matrix<F>),
    NotLocal,
}

/// Certifies whether the algebra spanned by `basis` (containing the
/// identity) is local.
///
/// Let `I` be the two-sided ideal generated by commutators of basis
/// elements. If `I` is nilpotent it lies in the radical, `A/I` is
/// commutative, and `A` is local exactly when the Frobenius map on `A/I`
/// fixes only a line. A larger fixed space lifts to a splitting element.
/// If `I` is not nilpotent, `A` modulo its radical is not commutative, so
/// `A` is not local.
fn locality<F: PrimeField>(basis: &[Matrix<F>]) -> Locality<F> {
    let d = basis[0].rows();
    let dd = d * d;
    let mut ideal = SpanBuilder::<F>::new(dd);
    let mut queue: Vec<Matrix<F>> = Vec::new();
    for (a, x) in basis.iter().enumerate() {
        for y in &basis[..a] {
            let c = x.mul(y).sub(&y.mul(x));
            if ideal.insert(&flatten(&c)) {
                queue.push(c);
            }
        }
    }
    while let Some(z) = queue.pop() {
        for b in basis {
            for w in [b.mul(&z), z.mul(b)] {
                if ideal.insert(&flatten(&w)) {
                    queue.push(w);
                }
            }
        }
    }
    let ideal_basis: Vec<Matrix<F>> = ideal.basis().iter().map(|v| unflatten(d, v)).collect();

    // nilpotency: I ⊋ I² ⊋ ... must reach zero
    let mut power = ideal_basis.clone();
    while !power.is_empty() {
        let mut next = SpanBuilder::<F>::new(dd);
        for x in &power {
            for y in &ideal_basis {
                next.insert(&flatten(&x.mul(y)));
            }
        }
        if next.rank() == power.len() {
            return Locality::NotLocal;
        }
        power = next.basis().iter().map(|v| unflatten(d, v)).collect();
    }

    // complement of I in A, and coordinates in the basis [I | complement]
    let mut full = ideal.clone();
    let complement: Vec<Matrix<F>> = basis.iter().filter(|b| full.insert(&flatten(b))).cloned().collect();
    let columns: Vec<Vec<F>> = ideal_basis.iter().chain(&complement).map(flatten).collect();
    let coords = Matrix::from_columns(dd, &columns);
    let k = ideal_basis.len();
    let p = F::MODULUS as u64;
    let phi_cols: Vec<Vec<F>> = complement
        .iter()
        .map(|c| {
            let x = coords
                .solve(&flatten(&c.pow(p)))
                .expect("A is closed under multiplication");
            x[k..].to_vec()
        })
        .collect();
    let r = complement.len();
    let phi = Matrix::from_columns(r, &phi_cols);
    let fixed = phi.sub(&Matrix::identity(r)).kernel();
    if fixed.len() == 1 {
        return Locality::Local;
    }
    // a fixed vector that is not a multiple of the identity lifts to an
    // element with at least two eigenvalues
    let one = coords
        .solve(&flatten(&Matrix::<F>::identity(d)))
        .expect("A contains the identity")[k..]
        .to_vec();
    for v in fixed {
        if Matrix::from_columns(r, &[one.clone(), v.clone()]).rank() < 2 {
            continue;
        }
        let mut z = Matrix::zeros(d, d);
        for (c, b) in v.iter().zip(&complement) {
            z.add_scaled(c, b);
        }
        return Locality::Splitter(z);
    }
    Locality::NotLocal
}

/// Bases (in the coordinates of `m`) of a splitting of `m` into at least
/// two nonzero submodules, or `None` if `m` is certified indecomposable.
fn split_once<F: PrimeField>(m: &Module<F>, rng: &mut ChaCha8Rng) -> Result<Option<Vec<Matrix<F>>>, ReplibError> {
    let endo = hom_space(m, m)?;
    if endo.len() <= 1 {
        return Ok(None);
    }
    for phi in endo.iter() {
        if let Some(parts) = primary_split(phi, rng) {
            return Ok(Some(parts));
        }
    }
    for _ in 0..RANDOM_TRIES {
        if let Some(parts) = primary_split(&random_combination(&endo, rng), rng) {
            return Ok(Some(parts));
        }
    }
    match locality(&endo) {
        Locality::Local => Ok(None),
        Locality::Splitter(z) => primary_split(&z, rng)
            .map(Some)
            .ok_or_else(|| ReplibError::DecompositionFailed("lifted idempotent did not split".into())),
        Locality::NotLocal => {
            for _ in 0..EXTENDED_TRIES {
                if let Some(parts) = primary_split(&random_combination(&endo, rng), rng) {
                    return Ok(Some(parts));
                }
            }
            Err(ReplibError::DecompositionFailed(format!(
                "endomorphism ring of a {}-dimensional module is not local but no splitting element was found",
                m.dim()
            )))
        }
    }
}

fn split_recursive<F: PrimeField>(
    m: &Module<F>,
    basis: Matrix<F>,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<(Module<F>, Matrix<F>)>,
) -> Result<(), ReplibError> {
    if m.dim() == 0 {
        return Ok(());
    }
    match split_once(m, rng)? {
        None => out.push((m.clone(), basis)),
        Some(parts) => {
            for q in parts {
                let sub = m.submodule(&q)?;
                split_recursive(&sub, basis.mul(&q), rng, out)?;
            }
        }
    }
    Ok(())
}

/// An isomorphism between indecomposable modules, if one exists. Some
/// basis element of `Hom(M, N)` is invertible whenever `M ≅ N`, because
/// the non-invertible maps form a proper subspace.
pub fn indecomposable_isomorphism<F: PrimeField>(
    m: &Module<F>,
    n: &Module<F>,
) -> Result<Option<Matrix<F>>, ReplibError> {
    if m.dim() != n.dim() || *m.group() != *n.group() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    if m.class_traces() != n.class_traces() {
        return Ok(None);
    }
    Ok(hom_space(m, n)?.into_iter().find(|f| f.is_invertible()))
}

/// Krull-Schmidt decomposition over `F_p`. Randomness (seeded) only picks
/// endomorphisms; the number and isomorphism types of summands do not
/// depend on the seed.
pub fn decompose<F: PrimeField>(m: &Module<F>, seed: u64) -> Result<Decomposition<F>, ReplibError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = Vec::new();
    split_recursive(m, Matrix::identity(m.dim()), &mut rng, &mut raw)?;
    raw.sort_by_key(|(sub, _)| std::cmp::Reverse(sub.dim()));

    let mut summands: Vec<Summand<F>> = Vec::new();
    let mut pieces = Vec::with_capacity(raw.len());
    for (sub, basis) in raw {
        let mut class = None;
        for (c, s) in summands.iter().enumerate() {
            if indecomposable_isomorphism(&sub, &s.module)?.is_some() {
                class = Some(c);
                break;
            }
        }
        let class = match class {
            Some(c) => {
                summands[c].multiplicity += 1;
                c
            }
            None => {
                summands.push(Summand {
                    module: sub.clone(),
                    multiplicity: 1,
                });
                summands.len() - 1
            }
        };
        pieces.push(Piece {
            module: sub,
            basis,
            class,
        });
    }

    let certificate = Matrix::hstack(&pieces.iter().map(|p| p.basis.clone()).collect::<Vec<_>>());
    let certificate = if pieces.is_empty() {
        Matrix::zeros(m.dim(), 0)
    } else {
        certificate
    };
    let inv = certificate
        .inverse()
        .ok_or_else(|| ReplibError::DecompositionFailed("summand bases are not complementary".into()))?;
    for (k, a) in m.generator_matrices().iter().enumerate() {
        let blocks: Vec<Matrix<F>> = pieces
            .iter()
            .map(|p| p.module.generator_matrices()[k].clone())
            .collect();
        if inv.mul(&a.mul(&certificate)) != Matrix::block_diag(&blocks) {
            return Err(ReplibError::DecompositionFailed(
                "certificate does not block-diagonalise the action".into(),
            ));
        }
    }
    Ok(Decomposition {
        pieces,
        summands,
        certificate,
    })
}

/// Matching of the summands of two decompositions: for each summand class
/// of the first, the class of the second it is isomorphic to.
fn match_classes<F: PrimeField>(a: &Decomposition<F>, b: &Decomposition<F>) -> Result<Vec<Option<usize>>, ReplibError> {
    let mut out = Vec::with_capacity(a.summands.len());
    for s in &a.summands {
        let mut found = None;
        for (c, t) in b.summands.iter().enumerate() {
            if indecomposable_isomorphism(&s.module, &t.module)?.is_some() {
                found = Some(c);
                break;
            }
        }
        out.push(found);
    }
    Ok(out)
}

/// Whether `M ≅ N`, by comparing decompositions.
pub fn are_isomorphic_modules<F: PrimeField>(m: &Module<F>, n: &Module<F>, seed: u64) -> Result<bool, ReplibError> {
    if m.dim() != n.dim() || *m.group() != *n.group() {
        return Ok(false);
    }
    let (a, b) = (decompose(m, seed)?, decompose(n, seed)?);
    if a.summands.len() != b.summands.len() {
        return Ok(false);
    }
    let matching = match_classes(&a, &b)?;
    Ok(matching
        .iter()
        .zip(&a.summands)
        .all(|(c, s)| c.is_some_and(|c| b.summands[c].multiplicity == s.multiplicity)))
}

/// Maps exhibiting `M` as a direct summand of `X`: `retraction ∘ inclusion = 1`.
#[derive(Clone, Debug)]
pub struct SummandWitness<F> {
    pub inclusion: Matrix<F>,
    pub retraction: Matrix<F>,
}

/// Decides whether `M | X` by matching indecomposable summands; on success
/// returns a split inclusion and its retraction, both verified `G`-linear.
pub fn is_summand<F: PrimeField>(
    m: &Module<F>,
    x: &Module<F>,
    seed: u64,
) -> Result<Option<SummandWitness<F>>, ReplibError> {
    if *m.group() != *x.group() {
        return Err(ReplibError::GroupMismatch);
    }
    if m.dim() > x.dim() {
        return Ok(None);
    }
    let dm = decompose(m, seed)?;
    let dx = decompose(x, seed)?;
    let x_inv = dx.certificate.inverse().expect("certificate is invertible");
    let mut offsets = Vec::with_capacity(dx.pieces.len());
    let mut off = 0;
    for p in &dx.pieces {
        offsets.push(off);
        off += p.module.dim();
    }
    let mut used = vec![false; dx.pieces.len()];
    let mut incl_blocks = Vec::new();
    let mut retr_blocks = Vec::new();
    for piece in &dm.pieces {
        let mut matched = None;
        for (k, q) in dx.pieces.iter().enumerate() {
            if used[k] {
                continue;
            }
            if let Some(phi) = indecomposable_isomorphism(&piece.module, &q.module)? {
                matched = Some((k, phi));
                break;
            }
        }
        let Some((k, phi)) = matched else {
            return Ok(None);
        };
        used[k] = true;
        let q = &dx.pieces[k];
        let phi_inv = phi.inverse().expect("isomorphism");
        incl_blocks.push(q.basis.mul(&phi));
        let rows = x_inv.block(offsets[k], 0, q.module.dim(), x.dim());
        retr_blocks.push(phi_inv.mul(&rows));
    }
    // inclusion: M → X through M's own decomposition
    let m_inv = dm.certificate.inverse().expect("certificate is invertible");
    let inclusion = if incl_blocks.is_empty() {
        Matrix::zeros(x.dim(), 0)
    } else {
        Matrix::hstack(&incl_blocks).mul(&m_inv)
    };
    let retraction = if retr_blocks.is_empty() {
        Matrix::zeros(0, x.dim())
    } else {
        dm.certificate.mul(&Matrix::vstack(&retr_blocks))
    };
    super::ModuleHom::new(m, x, inclusion.clone())?;
    super::ModuleHom::new(x, m, retraction.clone())?;
    if !retraction.mul(&inclusion).is_identity() {
        return Err(ReplibError::DecompositionFailed(
            "summand witness does not split".into(),
        ));
    }
    Ok(Some(SummandWitness { inclusion, retraction }))
}
