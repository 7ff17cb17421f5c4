//! Univariate polynomials over a field, minimal polynomials of matrices, and
//! factorisation over prime fields (squarefree, distinct-degree and
//! equal-degree splitting) and over the rationals (linear factors only).

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::{first_dependency, Matrix};
use crate::scalar::{Field, PrimeField, Rational};

/// Dense polynomial, coefficients from the constant term upward. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}x"),
                _ => format!("{c}x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![F::one()] }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![F::zero(), F::one()],
        }
    }

    /// `x - c`
    pub fn linear(c: F) -> Self {
        Poly {
            coeffs: vec![-c, F::one()],
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Poly {
                    coeffs: self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect(),
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(F::zero);
        Self::new((0..n).map(|i| get(self, i) + get(o, i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(F::zero);
        Self::new((0..n).map(|i| get(self, i) - get(o, i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[i + j].sub_mul(&c, b);
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "polynomial division was not exact");
        q
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
            let s = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s;
            let t = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv().unwrap();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| F::from_i64(i as i64) * c.clone())
                .collect(),
        )
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// `self^e mod m` for an arbitrary-size exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one().rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &Matrix<F>) -> Matrix<F> {
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a);
            for i in 0..n {
                let v = acc[(i, i)].clone() + c.clone();
                acc[(i, i)] = v;
            }
        }
        acc
    }

    /// Evaluation in an arbitrary associative algebra given by its unit and
    /// multiplication.
    pub fn eval_with<T: Clone>(
        &self,
        x: &T,
        one: &T,
        mul: impl Fn(&T, &T) -> T,
        axpy: impl Fn(&F, &T, &T) -> T,
        zero: &T,
    ) -> T {
        let mut acc = zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = mul(&acc, x);
            acc = axpy(c, one, &acc);
        }
        acc
    }
}

/// Minimal polynomial of a square matrix (monic).
pub fn minimal_polynomial<F: Field>(a: &Matrix<F>) -> Poly<F> {
    assert!(a.is_square());
    let n = a.rows();
    let mut powers = vec![Matrix::<F>::identity(n).into_vec()];
    let mut cur = Matrix::identity(n);
    loop {
        cur = cur.mul(a);
        powers.push(cur.as_slice().to_vec());
        if let Some((k, c)) = first_dependency(&powers) {
            let mut coeffs: Vec<F> = c.into_iter().map(|v| -v).collect();
            coeffs.push(F::one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Poly::new(coeffs);
        }
    }
}

/// Minimal polynomial of an element of an algebra whose powers are produced
/// by `powers` (the zeroth power must be the unit of the relevant subalgebra).
pub fn minimal_polynomial_of_sequence<F: Field>(mut next_power: impl FnMut(usize) -> Vec<F>) -> Poly<F> {
    let mut powers = vec![next_power(0)];
    let mut k = 1;
    loop {
        powers.push(next_power(k));
        if let Some((_, c)) = first_dependency(&powers) {
            let mut coeffs: Vec<F> = c.into_iter().map(|v| -v).collect();
            coeffs.push(F::one());
            return Poly::new(coeffs);
        }
        k += 1;
    }
}

/// Irreducible factorisation over `F_p`: monic factors with multiplicities,
/// sorted by (degree, coefficients).
pub fn factor_prime_field<F: PrimeField>(f: &Poly<F>, rng: &mut ChaCha8Rng) -> Vec<(Poly<F>, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut out = Vec::new();
    for (sq, mult) in squarefree(&f.monic()) {
        for (g, d) in distinct_degree(&sq) {
            for h in equal_degree(&g, d, rng) {
                out.push((h, mult));
            }
        }
    }
    out.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs.iter().map(|c| c.value()).collect::<Vec<_>>())
            .cmp(&(b.0.degree(), b.0.coeffs.iter().map(|c| c.value()).collect::<Vec<_>>()))
    });
    out
}

/// Squarefree decomposition of a monic polynomial over `F_p`.
pub fn squarefree<F: PrimeField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let p = F::MODULUS as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    if fp.is_zero() {
        for (g, m) in squarefree(&pth_root(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&fp);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.exact_div(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = c.exact_div(&y);
    }
    if !c.is_one() {
        for (g, m) in squarefree(&pth_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

fn pth_root<F: PrimeField>(f: &Poly<F>) -> Poly<F> {
    let p = F::MODULUS as usize;
    Poly::new(f.coeffs.iter().step_by(p).copied().collect())
}

/// Splits a squarefree monic polynomial into products of irreducible factors
/// of equal degree: returns `(product, degree)` pairs.
pub fn distinct_degree<F: PrimeField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let p = BigUint::from(F::MODULUS);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = Poly::x().rem(&rest);
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            if deg > 0 {
                out.push((rest.clone(), deg));
            }
            break;
        }
        d += 1;
        h = h.pow_mod(&p, &rest);
        let g = h.sub(&Poly::x()).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d`.
pub fn equal_degree<F: PrimeField>(f: &Poly<F>, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly<F>> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.monic()];
    }
    let p = F::MODULUS;
    loop {
        let a = Poly::new((0..n).map(|_| F::from_u64(rng.gen_range(0..p as u64))).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul_mod(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.pow_mod(&e, f).sub(&Poly::one())
        };
        let g = b.gcd(f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.exact_div(&g), d, rng));
            return out;
        }
    }
}

/// Rational roots of a polynomial over Q with multiplicities. Returns `None`
/// when the polynomial does not split into linear factors over Q.
pub fn split_over_rationals(f: &Poly<Rational>) -> Option<Vec<(Rational, usize)>> {
    let deg = f.degree()?;
    let mut rest = f.monic();
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    // x^k factor
    let mut zero_mult = 0;
    while rest.coeffs.first().is_some_and(Zero::is_zero) {
        rest = rest.exact_div(&Poly::x());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if rest.degree() == Some(0) {
        return Some(roots);
    }
    // integral primitive version
    let lcm = rest.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = rest
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let num_candidates = divisors(&a0)?;
    let den_candidates = divisors(&an)?;
    let mut candidates: Vec<Rational> = Vec::new();
    for n in &num_candidates {
        for d in &den_candidates {
            for s in [1i64, -1] {
                let r = Rational::new(BigInt::from(s) * n.clone(), d.clone());
                if !candidates.contains(&r) {
                    candidates.push(r);
                }
            }
        }
    }
    candidates.sort();
    for r in candidates {
        let lin = Poly::linear(r.clone());
        let mut m = 0;
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        if m > 0 {
            roots.push((r, m));
        }
        if rest.degree() == Some(0) {
            break;
        }
    }
    let total: usize = roots.iter().map(|r| r.1).sum();
    (total == deg).then_some(roots)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n == 0 {
        return Some(vec![BigInt::one()]);
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > 5_000_000 {
            return None;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use rand::SeedableRng;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn p<F: Field>(cs: &[i64]) -> Poly<F> {
        Poly::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    fn expand<F: Field>(factors: &[(Poly<F>, usize)]) -> Poly<F> {
        factors
            .iter()
            .fold(Poly::one(), |acc, (f, m)| (0..*m).fold(acc, |a, _| a.mul(f)))
    }

    /// Brute-force irreducibility: no monic factor of degree <= n/2.
    fn irreducible_brute<const P: u32>(f: &Poly<Fp<P>>) -> bool {
        let n = f.degree().unwrap();
        for d in 1..=n / 2 {
            let count = (P as usize).pow(d as u32);
            for code in 0..count {
                let mut cs = Vec::new();
                let mut c = code;
                for _ in 0..d {
                    cs.push(Fp::<P>::from_u64((c % P as usize) as u64));
                    c /= P as usize;
                }
                cs.push(Fp::<P>::one());
                let g = Poly::new(cs);
                if f.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn factor_x4_minus_1_over_f3() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = p::<F3>(&[-1, 0, 0, 0, 1]);
        let fs = factor_prime_field(&f, &mut rng);
        // (x-1)(x+1)(x^2+1)
        assert_eq!(fs.len(), 3);
        assert_eq!(expand(&fs), f);
        for (g, _) in &fs {
            assert!(irreducible_brute(g));
        }
    }

    #[test]
    fn factor_with_repeated_and_pth_power_parts_over_f2() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // (x^2+x+1)^2 (x+1)^3 x
        let a = p::<F2>(&[1, 1, 1]);
        let b = p::<F2>(&[1, 1]);
        let f = a.mul(&a).mul(&b).mul(&b).mul(&b).mul(&Poly::x());
        let fs = factor_prime_field(&f, &mut rng);
        assert_eq!(expand(&fs), f);
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&(a, 2)));
        assert!(fs.contains(&(b, 3)));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p::<Rational>(&[-1, 0, 1]);
        let b = p::<Rational>(&[1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, b.monic());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn minimal_polynomial_of_projection_and_nilpotent() {
        let e = Matrix::from_rows(vec![vec![F3::one(), F3::zero()], vec![F3::zero(), F3::zero()]]);
        assert_eq!(minimal_polynomial(&e), p::<F3>(&[0, -1, 1]));
        let n = Matrix::from_rows(vec![vec![F3::zero(), F3::one()], vec![F3::zero(), F3::zero()]]);
        assert_eq!(minimal_polynomial(&n), p::<F3>(&[0, 0, 1]));
    }

    #[test]
    fn rational_splitting() {
        // (x-1)(2x+1)^2 x
        let f = p::<Rational>(&[-1, 1])
            .mul(&p(&[1, 2]))
            .mul(&p(&[1, 2]))
            .mul(&Poly::x());
        let roots = split_over_rationals(&f).unwrap();
        let half = Rational::new(BigInt::from(-1), BigInt::from(2));
        assert!(roots.contains(&(half, 2)));
        assert!(roots.contains(&(Rational::one(), 1)));
        assert!(roots.contains(&(Rational::zero(), 1)));
        assert!(split_over_rationals(&p::<Rational>(&[1, 1, 1])).is_none());
    }

    proptest::proptest! {
        #[test]
        fn factorisation_reassembles(cs in proptest::collection::vec(0u64..5, 1..9), seed in 0u64..1000) {
            let mut cs: Vec<Fp<5>> = cs.into_iter().map(Fp::<5>::from_u64).collect();
            cs.push(Fp::<5>::one());
            let f = Poly::new(cs);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let fs = factor_prime_field(&f, &mut rng);
            proptest::prop_assert_eq!(expand(&fs), f);
            for (g, _) in &fs {
                proptest::prop_assert!(irreducible_brute(g));
            }
        }
    }
}
