//! Exact numeric tensors and the bridge between symbolic formulas and
//! concrete coordinates: dense rational arrays, symmetry-operator action on
//! them, formula evaluation, and the duality map from a tensor plus a
//! vector tuple to a group ring element.

use crate::formula::TensorFormula;
use crate::perm::Permutation;
use crate::rational::{PoleError, Q, RationalFunction};
use crate::ring::{antisymmetrizer, symmetrizer, GroupRingElement};
use rand::Rng;

/// A dense order-`order` tensor over Q with all sides of length `dim`,
/// row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    order: usize,
    data: Vec<Q>,
}

impl Tensor {
    pub fn zeros(dim: usize, order: usize) -> Self {
        Tensor {
            dim,
            order,
            data: vec![Q::zero(); dim.pow(order as u32)],
        }
    }

    pub fn random<R: Rng>(rng: &mut R, dim: usize, order: usize) -> Self {
        let mut t = Tensor::zeros(dim, order);
        for entry in &mut t.data {
            *entry = Q::from_int(rng.random_range(-9..=9));
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.order);
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Q {
        &self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Q) {
        let k = self.flat(idx);
        self.data[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    /// Iterates over all multi-indices in row-major order.
    pub fn indices(&self) -> MultiIndexIter {
        MultiIndexIter::new(self.dim, self.order)
    }

    /// The symmetry-operator action with constant coefficients:
    /// `(aT)(m_1..m_r) = Σ_p a(p) T(m_{p(1)},...,m_{p(r)})`.
    pub fn apply_operator(&self, a: &GroupRingElement) -> Tensor {
        assert_eq!(a.degree(), self.order, "operator degree mismatch");
        let mut out = Tensor::zeros(self.dim, self.order);
        let mut permuted = vec![0usize; self.order];
        for idx in self.indices() {
            let mut acc = Q::zero();
            for (p, c) in a.terms() {
                for m in 0..self.order {
                    permuted[m] = idx[p.apply(m + 1) - 1];
                }
                let c = c.as_constant().expect("operator must have constant coefficients");
                acc = &acc + &(&c * self.get(&permuted));
            }
            out.set(&idx, acc);
        }
        out
    }

    /// Full symmetrization `(1/r!) Σ_p pT`.
    pub fn symmetrized(&self) -> Tensor {
        let r = self.order;
        let mut fact = 1i64;
        for k in 1..=r {
            fact *= k as i64;
        }
        self.apply_operator(&symmetrizer(r).scale(&RationalFunction::from_ratio(1, fact)))
    }

    /// Full antisymmetrization `(1/r!) Σ_p sign(p) pT`.
    pub fn antisymmetrized(&self) -> Tensor {
        let r = self.order;
        let mut fact = 1i64;
        for k in 1..=r {
            fact *= k as i64;
        }
        self.apply_operator(&antisymmetrizer(r).scale(&RationalFunction::from_ratio(1, fact)))
    }
}

pub struct MultiIndexIter {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl MultiIndexIter {
    fn new(dim: usize, order: usize) -> Self {
        MultiIndexIter {
            dim,
            current: if dim == 0 { None } else { Some(vec![0; order]) },
        }
    }
}

impl Iterator for MultiIndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.clone()?;
        let mut next = current.clone();
        let mut pos = next.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            next[pos] += 1;
            if next[pos] < self.dim {
                self.current = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(current)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("formula has parametric coefficients; a value for v is required")]
    MissingParameter,
    #[error(transparent)]
    Pole(#[from] PoleError),
    #[error("sample provides no factor labeled `{0}`")]
    UnknownFactor(String),
    #[error("sample dimension must be at least 3, got {0}")]
    DimensionTooSmall(usize),
}

/// Concrete rational coordinates for the factor labels a formula may use:
/// a class-projected `U`, a vector `w`, a symmetric `S`, an alternating `A`
/// and a totally symmetric order-3 `Sh`.
#[derive(Clone)]
pub struct TensorSample {
    pub dim: usize,
    pub u: Tensor,
    pub w: Tensor,
    pub s: Tensor,
    pub a: Tensor,
    pub sh: Tensor,
}

impl TensorSample {
    /// Draws random rational tensors and projects `U` with the given
    /// constant-coefficient idempotent, so `e·U = U` holds exactly.
    pub fn random<R: Rng>(rng: &mut R, dim: usize, projector: &GroupRingElement) -> Result<Self, EvalError> {
        if dim < 3 {
            return Err(EvalError::DimensionTooSmall(dim));
        }
        assert_eq!(projector.degree(), 3, "U is an order-3 tensor");
        let u = Tensor::random(rng, dim, 3).apply_operator(projector);
        let w = Tensor::random(rng, dim, 1);
        let s = Tensor::random(rng, dim, 2).symmetrized();
        let a = Tensor::random(rng, dim, 2).antisymmetrized();
        let sh = Tensor::random(rng, dim, 3).symmetrized();
        Ok(TensorSample { dim, u, w, s, a, sh })
    }

    fn factor(&self, label: &str) -> Result<&Tensor, EvalError> {
        match label {
            "U" | "M" => Ok(&self.u),
            "w" => Ok(&self.w),
            "S" => Ok(&self.s),
            "A" => Ok(&self.a),
            "Sh" => Ok(&self.sh),
            other => Err(EvalError::UnknownFactor(other.to_string())),
        }
    }
}

/// Evaluates a formula on concrete coordinates, specializing parametric
/// coefficients at `nu` when given. The result is the dense order-r array.
pub fn evaluate_formula(
    formula: &TensorFormula,
    sample: &TensorSample,
    nu: Option<&Q>,
) -> Result<Tensor, EvalError> {
    let r = formula.arity();
    let shape = formula.shape();
    let starts = shape.block_starts();
    let mut arrays = Vec::with_capacity(shape.factors().len());
    for f in shape.factors() {
        let t = sample.factor(&f.label)?;
        assert_eq!(t.order(), f.arity, "factor arity mismatch for {}", f.label);
        arrays.push(t);
    }

    let mut terms = Vec::with_capacity(formula.term_count());
    for (q, c) in formula.terms() {
        let value = match c.as_constant() {
            Some(v) => v,
            None => match nu {
                Some(x) => c.eval(x)?,
                None => return Err(EvalError::MissingParameter),
            },
        };
        if !value.is_zero() {
            terms.push((q.clone(), value));
        }
    }

    let mut out = Tensor::zeros(sample.dim, r);
    let mut block_idx: Vec<usize> = Vec::new();
    for idx in out.indices() {
        let mut acc = Q::zero();
        for (q, c) in &terms {
            let mut prod = c.clone();
            for ((f, &start), t) in shape.factors().iter().zip(&starts).zip(&arrays) {
                block_idx.clear();
                for m in 0..f.arity {
                    block_idx.push(idx[q.apply(start + m) - 1]);
                }
                prod = &prod * t.get(&block_idx);
                if prod.is_zero() {
                    break;
                }
            }
            acc = &acc + &prod;
        }
        out.set(&idx, acc);
    }
    Ok(out)
}

/// The duality map: `T_b(p) = T(v_{p(1)},...,v_{p(r)})` as an element of
/// Q[S_r], for a tuple `b` of r vectors.
pub fn build_tb(t: &Tensor, b: &[Vec<Q>]) -> GroupRingElement {
    let r = t.order();
    assert_eq!(b.len(), r, "need one vector per slot");
    for v in b {
        assert_eq!(v.len(), t.dim(), "vector dimension mismatch");
    }
    let mut out = GroupRingElement::zero(r);
    for p in Permutation::all(r) {
        let mut acc = Q::zero();
        for idx in t.indices() {
            let entry = t.get(&idx);
            if entry.is_zero() {
                continue;
            }
            let mut prod = entry.clone();
            for (m, &i) in idx.iter().enumerate() {
                prod = &prod * &b[p.apply(m + 1) - 1][i];
                if prod.is_zero() {
                    break;
                }
            }
            acc = &acc + &prod;
        }
        out.add_term(p, RationalFunction::constant(acc));
    }
    out
}

/// A random rational vector with small entries.
pub fn random_vector<R: Rng>(rng: &mut R, dim: usize) -> Vec<Q> {
    (0..dim).map(|_| Q::from_int(rng.random_range(-9..=9))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{self, FactorSymmetry};
    use crate::ring::{eta_idempotent, f0_idempotent, xi_idempotent};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn xi_at(n: i64, d: i64) -> GroupRingElement {
        xi_idempotent(&RationalFunction::from_ratio(n, d))
    }

    #[test]
    fn projection_is_idempotent_on_samples() {
        let mut rng = StdRng::seed_from_u64(1);
        let e = xi_at(2, 1);
        let sample = TensorSample::random(&mut rng, 3, &e).unwrap();
        assert_eq!(sample.u.apply_operator(&e), sample.u);
        assert!(!sample.u.is_zero());
    }

    #[test]
    fn dimension_below_three_is_rejected() {
        let mut rng = StdRng::seed_from_u64(2);
        let e = eta_idempotent();
        assert_eq!(
            TensorSample::random(&mut rng, 2, &e).err(),
            Some(EvalError::DimensionTooSmall(2))
        );
    }

    #[test]
    fn zero_tensor_evaluates_to_zero() {
        let mut rng = StdRng::seed_from_u64(3);
        let mut sample = TensorSample::random(&mut rng, 3, &eta_idempotent()).unwrap();
        sample.u = Tensor::zeros(3, 3);
        let f = formula::sixteen_term_formula();
        let out = evaluate_formula(&f, &sample, None).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn parametric_formula_requires_nu() {
        let mut rng = StdRng::seed_from_u64(4);
        let sample = TensorSample::random(&mut rng, 3, &eta_idempotent()).unwrap();
        let v = RationalFunction::variable();
        let f = formula::TensorFormula::from_terms(
            formula::shape_u_w(),
            [(Permutation::identity(4), v)],
        );
        assert_eq!(evaluate_formula(&f, &sample, None).err(), Some(EvalError::MissingParameter));
        assert!(evaluate_formula(&f, &sample, Some(&Q::from_int(2))).is_ok());
    }

    #[test]
    fn curvature_output_has_riemann_symmetries() {
        // (1/12) y_t*(U⊗w) evaluated numerically satisfies antisymmetry in
        // both pairs, pair exchange, and the first Bianchi identity
        let mut rng = StdRng::seed_from_u64(5);
        for e in [xi_at(0, 1), xi_at(2, 1), eta_idempotent()] {
            let sample = TensorSample::random(&mut rng, 3, &e).unwrap();
            let f = formula::sixteen_term_formula();
            let t = evaluate_formula(&f, &sample, None).unwrap();
            assert!(!t.is_zero());
            for idx in t.indices() {
                let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
                assert_eq!(t.get(&[i, j, k, l]), &-(t.get(&[j, i, k, l])));
                assert_eq!(t.get(&[i, j, k, l]), &-(t.get(&[i, j, l, k])));
                assert_eq!(t.get(&[i, j, k, l]), t.get(&[k, l, i, j]));
                let bianchi = &(t.get(&[i, j, k, l]) + t.get(&[i, k, l, j])) + t.get(&[i, l, j, k]);
                assert!(bianchi.is_zero());
            }
        }
    }

    #[test]
    fn blocked_class_yields_zero_curvature() {
        // with U in the f0 class the projector output is a curvature tensor
        // as well, but full symmetrization/antisymmetrization of U kills it
        let mut rng = StdRng::seed_from_u64(6);
        let mut sample = TensorSample::random(&mut rng, 3, &f0_idempotent()).unwrap();
        sample.u = Tensor::random(&mut rng, 3, 3).symmetrized();
        let f = formula::sixteen_term_formula();
        let t = evaluate_formula(&f, &sample, None).unwrap();
        assert!(t.is_zero());
        sample.u = Tensor::random(&mut rng, 3, 3).antisymmetrized();
        let t = evaluate_formula(&f, &sample, None).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn duality_map_of_zero_is_zero() {
        let mut rng = StdRng::seed_from_u64(7);
        let t = Tensor::zeros(3, 3);
        let b: Vec<Vec<Q>> = (0..3).map(|_| random_vector(&mut rng, 3)).collect();
        assert!(build_tb(&t, &b).is_zero());
    }

    #[test]
    fn operator_action_commutes_with_duality() {
        // (aT)_b = T_b · a*
        let mut rng = StdRng::seed_from_u64(8);
        let all = Permutation::all(3);
        for _ in 0..10 {
            let t = Tensor::random(&mut rng, 3, 3);
            let b: Vec<Vec<Q>> = (0..3).map(|_| random_vector(&mut rng, 3)).collect();
            let a = GroupRingElement::from_terms(
                3,
                (0..3)
                    .map(|_| {
                        let p = all[rng.random_range(0..all.len())].clone();
                        (p, RationalFunction::from_int(rng.random_range(-3..=3)))
                    })
                    .collect::<Vec<_>>(),
            );
            let lhs = build_tb(&t.apply_operator(&a), &b);
            let rhs = build_tb(&t, &b).checked_mul(&a.star()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn five_index_formula_evaluates() {
        let mut rng = StdRng::seed_from_u64(9);
        let sample = TensorSample::random(&mut rng, 3, &xi_at(1, 3)).unwrap();
        let f = formula::five_index_formula(FactorSymmetry::Symmetric);
        let t = evaluate_formula(&f, &sample, None).unwrap();
        assert_eq!(t.order(), 5);
        assert!(!t.is_zero());
    }
}
