//! Symbolic tensor polynomials: finitely supported sums
//! `Σ_q c_q · F1[i_{q(1)},...] · F2[i_{q(..)},...]` over slot permutations
//! `q ∈ S_r`, together with the symmetry-operator action
//! `(aT)_{i_1...i_r} = Σ_p a(p) T_{i_{p(1)}...i_{p(r)}}`.
//!
//! Terms are kept canonical under the factor symmetries: indices inside a
//! symmetric factor are sorted, alternating factors are sign-normalized,
//! and identical factors are exchanged towards the lexicographically
//! smallest key. Term counts are always counts of canonical terms.

use crate::perm::Permutation;
use crate::rational::{PoleError, Q, RationalFunction};
use crate::ring::{curvature_projector, curvature_symmetrizer_star, GroupRingElement};
use std::collections::BTreeMap;
use std::fmt;

pub const INDEX_NAMES: [&str; 5] = ["i", "j", "k", "l", "s"];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorSymmetry {
    Generic,
    Symmetric,
    Alternating,
}

/// One tensor factor of a product: a label for rendering and sample lookup,
/// an arity, and its internal index symmetry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub label: String,
    pub arity: usize,
    pub symmetry: FactorSymmetry,
}

impl Factor {
    pub fn new(label: &str, arity: usize, symmetry: FactorSymmetry) -> Self {
        Factor {
            label: label.to_string(),
            arity,
            symmetry,
        }
    }
}

/// An ordered list of factors; the product's slots are numbered 1..=r in
/// factor order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductShape {
    factors: Vec<Factor>,
}

impl ProductShape {
    pub fn new(factors: Vec<Factor>) -> Self {
        assert!(!factors.is_empty());
        let shape = ProductShape { factors };
        assert!(shape.arity() <= INDEX_NAMES.len(), "at most five slots supported");
        shape
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.iter().map(|f| f.arity).sum()
    }

    /// 1-based first slot of each factor.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.factors.len());
        let mut next = 1;
        for f in &self.factors {
            starts.push(next);
            next += f.arity;
        }
        starts
    }

    /// All slot permutations that leave the product invariant, with the sign
    /// the rewrite picks up: internal rearrangements of symmetric and
    /// alternating factors plus exchanges of identical factors.
    pub fn merge_ops(&self) -> Vec<(Permutation, i64)> {
        let r = self.arity();
        let starts = self.block_starts();

        let mut within: Vec<(Permutation, i64)> = vec![(Permutation::identity(r), 1)];
        for (f, &start) in self.factors.iter().zip(&starts) {
            let local: Vec<(Permutation, i64)> = match f.symmetry {
                FactorSymmetry::Generic => vec![(Permutation::identity(f.arity), 1)],
                FactorSymmetry::Symmetric => Permutation::all(f.arity)
                    .into_iter()
                    .map(|s| (s, 1))
                    .collect(),
                FactorSymmetry::Alternating => Permutation::all(f.arity)
                    .into_iter()
                    .map(|s| {
                        let sign = s.sign();
                        (s, sign)
                    })
                    .collect(),
            };
            let mut next = Vec::with_capacity(within.len() * local.len());
            for (base, bsign) in &within {
                for (s, ssign) in &local {
                    let mut images = base.one_line().to_vec();
                    for m in 1..=f.arity {
                        images[start + m - 2] = base.apply(start + s.apply(m) - 1);
                    }
                    next.push((Permutation::from_one_line(images).unwrap(), bsign * ssign));
                }
            }
            within = next;
        }

        // exchanges of identical factors (value-preserving, sign +1)
        let mut exchanges: Vec<Permutation> = vec![Permutation::identity(r)];
        let mut grouped: Vec<Vec<usize>> = Vec::new();
        for (k, f) in self.factors.iter().enumerate() {
            match grouped
                .iter_mut()
                .find(|g| self.factors[g[0]] == *f)
            {
                Some(g) => g.push(k),
                None => grouped.push(vec![k]),
            }
        }
        for group in grouped.iter().filter(|g| g.len() > 1) {
            let arrangements = Permutation::all(group.len());
            let mut next = Vec::with_capacity(exchanges.len() * arrangements.len());
            for base in &exchanges {
                for arr in &arrangements {
                    let mut images = base.one_line().to_vec();
                    for (pos, &fidx) in group.iter().enumerate() {
                        let src = group[arr.apply(pos + 1) - 1];
                        for m in 0..self.factors[fidx].arity {
                            images[starts[fidx] + m - 1] = base.apply(starts[src] + m);
                        }
                    }
                    next.push(Permutation::from_one_line(images).unwrap());
                }
            }
            exchanges = next;
        }

        let mut ops = Vec::with_capacity(within.len() * exchanges.len());
        for (w, sign) in &within {
            for x in &exchanges {
                ops.push((w.compose(x).unwrap(), *sign));
            }
        }
        ops.sort_by(|a, b| a.0.cmp(&b.0));
        ops.dedup_by(|a, b| a.0 == b.0);
        ops
    }

    /// Canonical representative of a term key plus the sign acquired on the
    /// way there.
    pub fn canonical_key(&self, q: &Permutation, ops: &[(Permutation, i64)]) -> (Permutation, i64) {
        let mut best = q.clone();
        let mut sign = 1;
        for (tau, s) in ops {
            let cand = q.compose(tau).unwrap();
            if cand < best {
                best = cand;
                sign = *s;
            }
        }
        (best, sign)
    }
}

/// shorthand constructors for the shapes used throughout
pub fn factor_u() -> Factor {
    Factor::new("U", 3, FactorSymmetry::Generic)
}

pub fn factor_w() -> Factor {
    Factor::new("w", 1, FactorSymmetry::Generic)
}

pub fn factor_s() -> Factor {
    Factor::new("S", 2, FactorSymmetry::Symmetric)
}

pub fn factor_a() -> Factor {
    Factor::new("A", 2, FactorSymmetry::Alternating)
}

/// Totally symmetric 3-tensor factor.
pub fn factor_sh() -> Factor {
    Factor::new("Sh", 3, FactorSymmetry::Symmetric)
}

pub fn shape_u_w() -> ProductShape {
    ProductShape::new(vec![factor_u(), factor_w()])
}

pub fn shape_w_u() -> ProductShape {
    ProductShape::new(vec![factor_w(), factor_u()])
}

pub fn shape_u_s() -> ProductShape {
    ProductShape::new(vec![factor_u(), factor_s()])
}

pub fn shape_s_u() -> ProductShape {
    ProductShape::new(vec![factor_s(), factor_u()])
}

pub fn shape_u_a() -> ProductShape {
    ProductShape::new(vec![factor_u(), factor_a()])
}

pub fn shape_a_u() -> ProductShape {
    ProductShape::new(vec![factor_a(), factor_u()])
}

pub fn shape_s_s() -> ProductShape {
    ProductShape::new(vec![factor_s(), factor_s()])
}

pub fn shape_a_a() -> ProductShape {
    ProductShape::new(vec![factor_a(), factor_a()])
}

pub fn shape_s_sh() -> ProductShape {
    ProductShape::new(vec![factor_s(), factor_sh()])
}

/// First factor totally symmetric or alternating of order 3 — the blocked
/// classes of the one-box branching argument.
pub fn shape_m_sym_w() -> ProductShape {
    ProductShape::new(vec![Factor::new("M", 3, FactorSymmetry::Symmetric), factor_w()])
}

pub fn shape_m_alt_w() -> ProductShape {
    ProductShape::new(vec![Factor::new("M", 3, FactorSymmetry::Alternating), factor_w()])
}

/// A symbolic tensor polynomial with canonical terms.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorFormula {
    shape: ProductShape,
    terms: BTreeMap<Permutation, RationalFunction>,
}

impl TensorFormula {
    pub fn zero(shape: ProductShape) -> Self {
        TensorFormula {
            shape,
            terms: BTreeMap::new(),
        }
    }

    /// The bare product: identity arrangement with coefficient one.
    pub fn unit(shape: ProductShape) -> Self {
        let r = shape.arity();
        TensorFormula::from_terms(shape, [(Permutation::identity(r), RationalFunction::one())])
    }

    pub fn from_terms<I>(shape: ProductShape, terms: I) -> Self
    where
        I: IntoIterator<Item = (Permutation, RationalFunction)>,
    {
        let ops = shape.merge_ops();
        let mut out = TensorFormula::zero(shape);
        for (q, c) in terms {
            out.add_term_with_ops(q, c, &ops);
        }
        out
    }

    fn add_term_with_ops(&mut self, q: Permutation, c: RationalFunction, ops: &[(Permutation, i64)]) {
        assert_eq!(q.degree(), self.shape.arity(), "slot arity mismatch");
        if c.is_zero() {
            return;
        }
        let (key, sign) = self.shape.canonical_key(&q, ops);
        let signed = if sign < 0 { -&c } else { c };
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(signed);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &signed;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn shape(&self) -> &ProductShape {
        &self.shape
    }

    pub fn arity(&self) -> usize {
        self.shape.arity()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of canonical terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, q: &Permutation) -> RationalFunction {
        let ops = self.shape.merge_ops();
        let (key, sign) = self.shape.canonical_key(q, &ops);
        let c = self.terms.get(&key).cloned().unwrap_or_else(RationalFunction::zero);
        if sign < 0 {
            -&c
        } else {
            c
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return TensorFormula::zero(self.shape.clone());
        }
        TensorFormula {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(q, a)| (q.clone(), a * c)).collect(),
        }
    }

    pub fn add(&self, rhs: &TensorFormula) -> Self {
        assert_eq!(self.shape, rhs.shape, "shape mismatch");
        let mut out = self.clone();
        let ops = self.shape.merge_ops();
        for (q, c) in &rhs.terms {
            out.add_term_with_ops(q.clone(), c.clone(), &ops);
        }
        out
    }

    pub fn sub(&self, rhs: &TensorFormula) -> Self {
        self.add(&rhs.scale(&RationalFunction::from_int(-1)))
    }

    /// The symmetry-operator action: term keys convolve as `p ∘ q`.
    pub fn apply_operator(&self, a: &GroupRingElement) -> Self {
        assert_eq!(a.degree(), self.shape.arity(), "operator degree mismatch");
        let ops = self.shape.merge_ops();
        let mut out = TensorFormula::zero(self.shape.clone());
        for (p, cp) in a.terms() {
            for (q, cq) in &self.terms {
                out.add_term_with_ops(p.compose(q).unwrap(), cp * cq, &ops);
            }
        }
        out
    }

    /// Rewrites the formula over the reversed factor order; applying it
    /// twice is the identity.
    pub fn swap_factor_order(&self) -> Self {
        let old_starts = self.shape.block_starts();
        let n = self.shape.factors.len();
        let new_factors: Vec<Factor> = self.shape.factors.iter().rev().cloned().collect();
        let new_shape = ProductShape::new(new_factors);
        // new slot m holds what old slot tau(m) held
        let mut tau_images = Vec::with_capacity(self.shape.arity());
        for (rev_pos, f) in new_shape.factors.iter().enumerate() {
            let old_idx = n - 1 - rev_pos;
            let start = old_starts[old_idx];
            for m in 0..f.arity {
                tau_images.push(start + m);
            }
        }
        let tau = Permutation::from_one_line(tau_images).unwrap();
        TensorFormula::from_terms(
            new_shape,
            self.terms
                .iter()
                .map(|(q, c)| (q.compose(&tau).unwrap(), c.clone())),
        )
    }

    /// Specializes every coefficient at `v = x`.
    pub fn specialize(&self, x: &Q) -> Result<Self, PoleError> {
        let mut terms = BTreeMap::new();
        for (q, c) in &self.terms {
            let val = c.eval(x)?;
            if !val.is_zero() {
                terms.insert(q.clone(), RationalFunction::constant(val));
            }
        }
        Ok(TensorFormula {
            shape: self.shape.clone(),
            terms,
        })
    }

    fn term_monomial(&self, q: &Permutation) -> String {
        let starts = self.shape.block_starts();
        let mut parts = Vec::with_capacity(self.shape.factors.len());
        for (f, &start) in self.shape.factors.iter().zip(&starts) {
            let idx: Vec<&str> = (0..f.arity)
                .map(|m| INDEX_NAMES[q.apply(start + m) - 1])
                .collect();
            parts.push(format!("{}[{}]", f.label, idx.join(",")));
        }
        parts.join("*")
    }

    fn term_monomial_latex(&self, q: &Permutation) -> String {
        let starts = self.shape.block_starts();
        let mut parts = Vec::with_capacity(self.shape.factors.len());
        for (f, &start) in self.shape.factors.iter().zip(&starts) {
            let idx: Vec<&str> = (0..f.arity)
                .map(|m| INDEX_NAMES[q.apply(start + m) - 1])
                .collect();
            parts.push(format!("{}_{{{}}}", f.label, idx.join("")));
        }
        parts.join(" ")
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (q, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.signed_factor();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&c.abs_latex());
                out.push_str("\\,");
            }
            out.push_str(&self.term_monomial_latex(q));
        }
        out
    }
}

impl fmt::Display for TensorFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (q, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.signed_factor();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mag == "1" {
                write!(f, "{}", self.term_monomial(q))?;
            } else {
                write!(f, "{}*{}", mag, self.term_monomial(q))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(1/12) y_t*(U ⊗ w)`: the 16-term master polynomial for order-4
/// curvature-type tensors built from a generic 3-tensor and a vector.
pub fn sixteen_term_formula() -> TensorFormula {
    TensorFormula::unit(shape_u_w()).apply_operator(&curvature_projector(4))
}

/// `(1/24) y_{t'}*(U ⊗ S)` or `(1/24) y_{t'}*(U ⊗ A)`: the order-5 master
/// polynomials.
pub fn five_index_formula(second: FactorSymmetry) -> TensorFormula {
    let shape = match second {
        FactorSymmetry::Symmetric => shape_u_s(),
        FactorSymmetry::Alternating => shape_u_a(),
        FactorSymmetry::Generic => panic!("second factor must be symmetric or alternating"),
    };
    TensorFormula::unit(shape).apply_operator(&curvature_projector(5))
}

/// `γ(S) = (1/4) y_t*(S ⊗ S) = S_il S_jk − S_ik S_jl`.
pub fn gamma_generator() -> TensorFormula {
    TensorFormula::unit(shape_s_s())
        .apply_operator(&curvature_symmetrizer_star(4).scale(&RationalFunction::from_ratio(1, 4)))
}

/// `α(A) = (1/4) y_t*(A ⊗ A) = 2 A_ij A_kl + A_ik A_jl − A_il A_jk`.
pub fn alpha_generator() -> TensorFormula {
    TensorFormula::unit(shape_a_a())
        .apply_operator(&curvature_symmetrizer_star(4).scale(&RationalFunction::from_ratio(1, 4)))
}

/// `γ̂(S, Ŝ) = (1/4) y_{t'}*(S ⊗ Ŝ)`, four terms.
pub fn gamma_hat_generator() -> TensorFormula {
    TensorFormula::unit(shape_s_sh())
        .apply_operator(&curvature_symmetrizer_star(5).scale(&RationalFunction::from_ratio(1, 4)))
}

/// `y_t*(M ⊗ w)` with `M` totally symmetric or totally alternating. Both
/// cancel to zero: only the (2 1) class of the first factor survives the
/// curvature symmetrization, which is why one box added to (3) or (1,1,1)
/// never reaches the (2,2) frame.
pub fn blocked_class_formula(symmetry: FactorSymmetry) -> TensorFormula {
    let shape = match symmetry {
        FactorSymmetry::Symmetric => shape_m_sym_w(),
        FactorSymmetry::Alternating => shape_m_alt_w(),
        FactorSymmetry::Generic => panic!("the blocked classes are the symmetric and alternating ones"),
    };
    TensorFormula::unit(shape).apply_operator(&curvature_symmetrizer_star(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_one_line(images.to_vec()).unwrap()
    }

    fn q12() -> RationalFunction {
        RationalFunction::from_ratio(1, 12)
    }

    /// The expected 16-term expansion keyed by slot permutations.
    pub fn expected_sixteen_term() -> TensorFormula {
        let plus: [[usize; 4]; 8] = [
            [1, 2, 3, 4],
            [3, 2, 1, 4],
            [1, 4, 3, 2],
            [3, 4, 1, 2],
            [2, 1, 4, 3],
            [4, 1, 2, 3],
            [2, 3, 4, 1],
            [4, 3, 2, 1],
        ];
        let minus: [[usize; 4]; 8] = [
            [2, 1, 3, 4],
            [3, 1, 2, 4],
            [2, 4, 3, 1],
            [3, 4, 2, 1],
            [1, 2, 4, 3],
            [4, 2, 1, 3],
            [1, 3, 4, 2],
            [4, 3, 1, 2],
        ];
        let mut terms = Vec::new();
        for k in plus {
            terms.push((perm(&k), q12()));
        }
        for k in minus {
            terms.push((perm(&k), -&q12()));
        }
        TensorFormula::from_terms(shape_u_w(), terms)
    }

    #[test]
    fn identity_operator_is_neutral() {
        let f = sixteen_term_formula();
        assert_eq!(f.apply_operator(&GroupRingElement::one(4)), f);
    }

    #[test]
    fn sixteen_term_expansion_is_exact() {
        let f = sixteen_term_formula();
        assert_eq!(f.term_count(), 16);
        assert_eq!(f, expected_sixteen_term());
    }

    #[test]
    fn gamma_is_two_exact_terms() {
        let g = gamma_generator();
        assert_eq!(g.term_count(), 2);
        assert_eq!(g.coeff(&perm(&[1, 4, 2, 3])), RationalFunction::one());
        assert_eq!(g.coeff(&perm(&[1, 3, 2, 4])), RationalFunction::from_int(-1));
    }

    #[test]
    fn alpha_is_three_exact_terms() {
        let a = alpha_generator();
        assert_eq!(a.term_count(), 3);
        assert_eq!(a.coeff(&perm(&[1, 2, 3, 4])), RationalFunction::from_int(2));
        assert_eq!(a.coeff(&perm(&[1, 3, 2, 4])), RationalFunction::one());
        assert_eq!(a.coeff(&perm(&[1, 4, 2, 3])), RationalFunction::from_int(-1));
    }

    #[test]
    fn gamma_hat_is_four_exact_terms() {
        let g = gamma_hat_generator();
        assert_eq!(g.term_count(), 4);
        assert_eq!(g.coeff(&perm(&[1, 4, 2, 3, 5])), RationalFunction::one());
        assert_eq!(g.coeff(&perm(&[2, 4, 1, 3, 5])), RationalFunction::from_int(-1));
        assert_eq!(g.coeff(&perm(&[2, 3, 1, 4, 5])), RationalFunction::one());
        assert_eq!(g.coeff(&perm(&[1, 3, 2, 4, 5])), RationalFunction::from_int(-1));
    }

    #[test]
    fn projector_normalization_relation_for_generators() {
        // the idempotent-normalized projector lands at one third of the
        // unit-coefficient generators
        let third = RationalFunction::from_ratio(1, 3);
        let via_projector = TensorFormula::unit(shape_s_s()).apply_operator(&curvature_projector(4));
        assert_eq!(via_projector, gamma_generator().scale(&third));
        let via_projector_a = TensorFormula::unit(shape_a_a()).apply_operator(&curvature_projector(4));
        assert_eq!(via_projector_a, alpha_generator().scale(&third));
    }

    #[test]
    fn canonicalization_merges_symmetric_slots() {
        // S[j,i]*S[l,k] keyed as [2,1,4,3] folds onto the unit key
        let f = TensorFormula::from_terms(shape_s_s(), [(perm(&[2, 1, 4, 3]), RationalFunction::one())]);
        assert_eq!(f, TensorFormula::unit(shape_s_s()));
        // block swap too
        let g = TensorFormula::from_terms(shape_s_s(), [(perm(&[3, 4, 1, 2]), RationalFunction::one())]);
        assert_eq!(g, TensorFormula::unit(shape_s_s()));
    }

    #[test]
    fn canonicalization_signs_alternating_slots() {
        let f = TensorFormula::from_terms(shape_u_a(), [(perm(&[1, 2, 3, 5, 4]), RationalFunction::one())]);
        assert_eq!(f.coeff(&perm(&[1, 2, 3, 4, 5])), RationalFunction::from_int(-1));
        assert_eq!(f.term_count(), 1);
    }

    #[test]
    fn alternating_pair_cancels_against_itself() {
        let one = RationalFunction::one();
        let f = TensorFormula::from_terms(
            shape_a_a(),
            [
                (perm(&[1, 2, 3, 4]), one.clone()),
                (perm(&[2, 1, 3, 4]), one.clone()),
            ],
        );
        assert!(f.is_zero());
    }

    #[test]
    fn module_action_axiom() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        let all = Permutation::all(4);
        let random_element = |rng: &mut StdRng| {
            GroupRingElement::from_terms(
                4,
                (0..3)
                    .map(|_| {
                        let p = all[rng.random_range(0..all.len())].clone();
                        (p, RationalFunction::from_int(rng.random_range(-2..=2)))
                    })
                    .collect::<Vec<_>>(),
            )
        };
        for _ in 0..20 {
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let f = TensorFormula::unit(shape_u_w());
            let lhs = f.apply_operator(&b).apply_operator(&a);
            let rhs = f.apply_operator(&a.checked_mul(&b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn swap_is_an_involution() {
        let f = sixteen_term_formula();
        let g = f.swap_factor_order();
        assert_eq!(g.shape(), &shape_w_u());
        assert_eq!(g.swap_factor_order(), f);
    }

    #[test]
    fn swap_moves_slots_correctly() {
        // U[i,j,k]*w[l] as a w⊗U formula is w[l]*U[i,j,k]: key [4,1,2,3]
        let f = TensorFormula::unit(shape_u_w());
        let g = f.swap_factor_order();
        assert_eq!(g.coeff(&perm(&[4, 1, 2, 3])), RationalFunction::one());
        assert_eq!(g.term_count(), 1);
    }

    #[test]
    fn rendering_is_deterministic() {
        let g = gamma_generator();
        assert_eq!(g.to_string(), "-S[i,k]*S[j,l] + S[i,l]*S[j,k]");
        let f = sixteen_term_formula();
        let text = f.to_string();
        assert!(text.starts_with("1/12*U[i,j,k]*w[l] - 1/12*U[i,j,l]*w[k]"));
    }

    #[test]
    fn specialization_drops_vanishing_terms() {
        let v = RationalFunction::variable();
        let f = TensorFormula::from_terms(
            shape_u_w(),
            [
                (perm(&[1, 2, 3, 4]), v.clone()),
                (perm(&[2, 1, 3, 4]), RationalFunction::one()),
            ],
        );
        let at_zero = f.specialize(&Q::zero()).unwrap();
        assert_eq!(at_zero.term_count(), 1);
    }
}
