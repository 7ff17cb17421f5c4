use serde::Serialize;

use crate::matrix::Matrix;
use crate::scalar::Ring;

use super::functor::{double_cosets_in, OrdinaryMackeyFunctor};
use super::green::GreenFunctorData;

/// Families of identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// identities and composites of restrictions and transfers
    Functoriality,
    /// inner conjugations are trivial, `c_g c_h = c_gh`, and conjugation
    /// commutes with restriction and transfer
    Conjugation,
    Mackey,
    /// per-level associativity and unitality
    Ring,
    /// restrictions and conjugations are unital ring maps
    Multiplicative,
    Frobenius,
    Cohomological,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub clause: Clause,
    pub identity: &'static str,
    /// level indices involved, outermost first
    pub levels: Vec<usize>,
    /// group elements or basis indices involved
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseSummary {
    pub clause: Clause,
    pub passed: usize,
    pub total: usize,
}

/// Every checked identity, in a fixed order.
#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<IdentityCheck>,
}

impl AxiomReport {
    fn push(&mut self, clause: Clause, identity: &'static str, levels: Vec<usize>, elements: Vec<usize>, passed: bool) {
        self.checks.push(IdentityCheck {
            clause,
            identity,
            levels,
            elements,
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Clauses with at least one failing identity.
    pub fn failed_clauses(&self) -> Vec<Clause> {
        let mut out: Vec<Clause> = self.failures().map(|c| c.clause).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn summary(&self) -> Vec<ClauseSummary> {
        let mut out: Vec<ClauseSummary> = Vec::new();
        for c in &self.checks {
            let slot = match out.iter().position(|s| s.clause == c.clause) {
                Some(p) => p,
                None => {
                    out.push(ClauseSummary {
                        clause: c.clause,
                        passed: 0,
                        total: 0,
                    });
                    out.len() - 1
                }
            };
            out[slot].total += 1;
            out[slot].passed += usize::from(c.passed);
        }
        out
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }
}

/// Checks functoriality (identities and strict chains `K < L < H`),
/// conjugation (inner conjugations, composition, compatibility with
/// restriction and transfer) and the Mackey formula
/// `res^L_K tr^L_H = Σ_{x ∈ K\L/H} tr^K_{K∩ˣH} c_x res^H_{Kˣ∩H}` for every
/// `L` and every `H, K ≤ L`.
///
/// Additivity is structural here: levels are indexed by transitive
/// `G`-sets `G/H`, and values at other `G`-sets are direct sums.
pub fn verify_mackey_axioms<R: Ring>(m: &OrdinaryMackeyFunctor<R>) -> AxiomReport {
    let g = m.group();
    let levels = m.levels();
    let n = levels.len();
    let mut report = AxiomReport::default();
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (h, k) in m.pairs() {
        below[h].push(k);
    }

    for h in 0..n {
        report.push(
            Clause::Functoriality,
            "res_identity",
            vec![h],
            vec![],
            m.restriction(h, h).is_identity(),
        );
        report.push(
            Clause::Functoriality,
            "tr_identity",
            vec![h],
            vec![],
            m.transfer(h, h).is_identity(),
        );
    }
    for h in 0..n {
        for &l in &below[h] {
            if l == h {
                continue;
            }
            for &k in &below[l] {
                if k == l {
                    continue;
                }
                let res = m.restriction(l, k).mul(m.restriction(h, l)) == *m.restriction(h, k);
                let tr = m.transfer(h, l).mul(m.transfer(l, k)) == *m.transfer(h, k);
                report.push(Clause::Functoriality, "res_chain", vec![h, l, k], vec![], res);
                report.push(Clause::Functoriality, "tr_chain", vec![h, l, k], vec![], tr);
            }
        }
    }

    for (h, lh) in levels.iter().enumerate() {
        for &x in lh.subgroup.elements() {
            report.push(
                Clause::Conjugation,
                "inner_trivial",
                vec![h],
                vec![x],
                m.conjugation(x, h).is_identity(),
            );
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            for h in 0..n {
                let bh = m.conjugate_level(b, h);
                let ok = m.conjugation(a, bh).mul(m.conjugation(b, h)) == *m.conjugation(ab, h);
                report.push(Clause::Conjugation, "conj_compose", vec![h], vec![a, b], ok);
            }
        }
    }
    for a in g.elements() {
        for (h, k) in m.pairs() {
            let (ah, ak) = (m.conjugate_level(a, h), m.conjugate_level(a, k));
            let res = m.conjugation(a, k).mul(m.restriction(h, k)) == m.restriction(ah, ak).mul(m.conjugation(a, h));
            let tr = m.conjugation(a, h).mul(m.transfer(h, k)) == m.transfer(ah, ak).mul(m.conjugation(a, k));
            report.push(Clause::Conjugation, "conj_res", vec![h, k], vec![a], res);
            report.push(Clause::Conjugation, "conj_tr", vec![h, k], vec![a], tr);
        }
    }

    for l in 0..n {
        let ls = &levels[l].subgroup;
        for &h in &below[l] {
            for &k in &below[l] {
                let (hs, ks) = (&levels[h].subgroup, &levels[k].subgroup);
                let lhs = m.restriction(l, k).mul(m.transfer(l, h));
                let mut rhs = Matrix::zeros(levels[k].dim, levels[h].dim);
                for x in double_cosets_in(g, ls, ks, hs) {
                    let a = m.level_of(&g.intersection(ks, &g.conjugate_subgroup(hs, x)));
                    let b = m.level_of(&g.intersection(&g.conjugate_subgroup(ks, g.inv(x)), hs));
                    let term = m.transfer(k, a).mul(m.conjugation(x, b)).mul(m.restriction(h, b));
                    rhs = rhs.add(&term);
                }
                report.push(Clause::Mackey, "mackey_formula", vec![l, h, k], vec![], lhs == rhs);
            }
        }
    }
    report
}

/// `tr^H_K ∘ res^H_K = [H:K]` on `M(H)` for every `K ≤ H`.
pub fn cohomological_check<R: Ring>(m: &OrdinaryMackeyFunctor<R>) -> AxiomReport {
    let levels = m.levels();
    let mut report = AxiomReport::default();
    for (h, k) in m.pairs() {
        let index = levels[h].subgroup.order() / levels[k].subgroup.order();
        let lhs = m.transfer(h, k).mul(m.restriction(h, k));
        let ok = lhs == Matrix::scalar(levels[h].dim, R::from_i64(index as i64));
        report.push(Clause::Cohomological, "tr_res_index", vec![h, k], vec![], ok);
    }
    report
}

/// The Mackey axioms plus per-level ring laws, multiplicativity of
/// restrictions and conjugations, and both Frobenius formulas
/// `tr(res(x)·y) = x·tr(y)` and `tr(y·res(x)) = tr(y)·x`, all checked on
/// basis elements.
pub fn verify_green_axioms<R: Ring>(a: &GreenFunctorData<R>) -> AxiomReport {
    let m = &a.underlying;
    let g = m.group();
    let levels = m.levels();
    let mut report = verify_mackey_axioms(m);

    for (l, lv) in levels.iter().enumerate() {
        for i in 0..lv.dim {
            for j in 0..lv.dim {
                let prod = a.products[l][i].column(j);
                let ok = a.left_multiplication(l, &prod) == a.products[l][i].mul(&a.products[l][j]);
                report.push(Clause::Ring, "associative", vec![l], vec![], ok);
            }
        }
        let one = &a.units[l];
        let ok = a.left_multiplication(l, one).is_identity() && a.right_multiplication(l, one).is_identity();
        report.push(Clause::Ring, "unital", vec![l], vec![], ok);
    }

    for (h, k) in m.pairs() {
        let res = m.restriction(h, k);
        let tr = m.transfer(h, k);
        report.push(
            Clause::Multiplicative,
            "res_unit",
            vec![h, k],
            vec![],
            res.mul_vec(&a.units[h]) == a.units[k],
        );
        for i in 0..levels[h].dim {
            let ri = res.column(i);
            let lk = a.left_multiplication(k, &ri);
            let ok = res.mul(&a.products[h][i]) == lk.mul(res);
            report.push(Clause::Multiplicative, "res_mult", vec![h, k], vec![i], ok);
            let ok = tr.mul(&lk) == a.products[h][i].mul(tr);
            report.push(Clause::Frobenius, "frobenius_left", vec![h, k], vec![i], ok);
            let ei: Vec<R> = (0..levels[h].dim)
                .map(|r| if r == i { R::one() } else { R::zero() })
                .collect();
            let ok = tr.mul(&a.right_multiplication(k, &ri)) == a.right_multiplication(h, &ei).mul(tr);
            report.push(Clause::Frobenius, "frobenius_right", vec![h, k], vec![i], ok);
        }
    }

    for x in g.elements() {
        for h in 0..levels.len() {
            let xh = m.conjugate_level(x, h);
            let c = m.conjugation(x, h);
            let mut ok = c.mul_vec(&a.units[h]) == a.units[xh];
            for i in 0..levels[h].dim {
                ok &= c.mul(&a.products[h][i]) == a.left_multiplication(xh, &c.column(i)).mul(c);
            }
            report.push(Clause::Multiplicative, "conj_mult", vec![h], vec![x], ok);
        }
    }
    report
}
