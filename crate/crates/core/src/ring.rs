//! The group algebra K[S_r] over K = Q(v): sparse elements, convolution,
//! the star involution, Young symmetrizers and the named idempotents of the
//! (2 1) block of K[S_3].

use crate::perm::{PermError, Permutation, YoungTableau};
use crate::rational::{PoleError, Q, RationalFunction};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A finitely supported map S_r -> Q(v); absent keys are zero and stored
/// coefficients are nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    degree: usize,
    coeffs: BTreeMap<Permutation, RationalFunction>,
}

impl GroupRingElement {
    pub fn zero(degree: usize) -> Self {
        GroupRingElement {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The multiplicative identity: the identity permutation with
    /// coefficient one.
    pub fn one(degree: usize) -> Self {
        GroupRingElement::from_terms(
            degree,
            [(Permutation::identity(degree), RationalFunction::one())],
        )
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Permutation, RationalFunction)>,
    {
        let mut e = GroupRingElement::zero(degree);
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, p: Permutation, c: RationalFunction) {
        assert_eq!(p.degree(), self.degree, "degree mismatch in term");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, p: &Permutation) -> RationalFunction {
        self.coeffs.get(p).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return GroupRingElement::zero(self.degree);
        }
        GroupRingElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    /// Convolution: `(ab)(s) = Σ_{p∘q = s} a(p) b(q)`.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, PermError> {
        if self.degree != rhs.degree {
            return Err(PermError::DegreeMismatch(self.degree, rhs.degree));
        }
        let mut out = GroupRingElement::zero(self.degree);
        for (p, a) in &self.coeffs {
            for (q, b) in &rhs.coeffs {
                out.add_term(p.compose(q).unwrap(), a * b);
            }
        }
        Ok(out)
    }

    /// The star involution: coefficient of `p` becomes coefficient of
    /// `p^{-1}`.
    pub fn star(&self) -> Self {
        GroupRingElement {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.inverse(), c.clone()))
                .collect(),
        }
    }

    /// Embeds into S_target by extending every permutation with fixed
    /// points; coefficients are unchanged.
    pub fn embed(&self, target: usize) -> Self {
        assert!(target >= self.degree);
        GroupRingElement {
            degree: target,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.embed(target), c.clone()))
                .collect(),
        }
    }

    /// Specializes every coefficient at `v = x`.
    pub fn eval_at(&self, x: &Q) -> Result<Self, PoleError> {
        let mut out = GroupRingElement::zero(self.degree);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), RationalFunction::constant(c.eval(x)?));
        }
        Ok(out)
    }

    /// Coefficients listed against a fixed permutation order.
    pub fn coeff_vector(&self, order: &[Permutation]) -> Vec<RationalFunction> {
        order.iter().map(|p| self.coeff(p)).collect()
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (p, c)) in self.coeffs.iter().enumerate() {
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
            out.push_str(&format!("{p}"));
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.coeffs.iter().enumerate() {
            let (neg, mag) = c.signed_factor();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mag == "1" {
                write!(f, "{p}")?;
            } else {
                write!(f, "{mag}*{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.checked_mul(rhs).expect("degree mismatch in product")
    }
}

/// All permutations fixing each of the given disjoint entry sets setwise.
fn set_family_group(degree: usize, sets: &[Vec<usize>]) -> Vec<Permutation> {
    let mut members = vec![Permutation::identity(degree)];
    for set in sets {
        let arrangements = Permutation::all(set.len());
        let mut next = Vec::with_capacity(members.len() * arrangements.len());
        for base in &members {
            for arr in &arrangements {
                let mut images: Vec<usize> = base.one_line().to_vec();
                for (k, &e) in set.iter().enumerate() {
                    images[e - 1] = set[arr.apply(k + 1) - 1];
                }
                next.push(Permutation::from_one_line(images).unwrap());
            }
        }
        members = next;
    }
    members
}

/// The horizontal group H_t: permutations moving entries only within rows.
pub fn horizontal_group(t: &YoungTableau) -> Vec<Permutation> {
    set_family_group(t.size(), t.rows())
}

/// The vertical group V_t: permutations moving entries only within columns.
pub fn vertical_group(t: &YoungTableau) -> Vec<Permutation> {
    set_family_group(t.size(), &t.columns())
}

/// The Young symmetrizer `y_t = Σ_{p∈H_t} Σ_{q∈V_t} sign(q) p∘q`.
pub fn young_symmetrizer(t: &YoungTableau) -> GroupRingElement {
    let mut out = GroupRingElement::zero(t.size());
    for p in horizontal_group(t) {
        for q in vertical_group(t) {
            out.add_term(p.compose(&q).unwrap(), RationalFunction::from_int(q.sign()));
        }
    }
    out
}

/// `Σ_p sign(p) p`, the full antisymmetrizer of S_r.
pub fn antisymmetrizer(degree: usize) -> GroupRingElement {
    GroupRingElement::from_terms(
        degree,
        Permutation::all(degree)
            .into_iter()
            .map(|p| (p.clone(), RationalFunction::from_int(p.sign()))),
    )
}

/// `Σ_p p`, the full symmetrizer of S_r.
pub fn symmetrizer(degree: usize) -> GroupRingElement {
    GroupRingElement::from_terms(
        degree,
        Permutation::all(degree)
            .into_iter()
            .map(|p| (p, RationalFunction::one())),
    )
}

fn perm3(images: [usize; 3]) -> Permutation {
    Permutation::from_one_line(images.to_vec()).unwrap()
}

/// The one-parameter family of primitive idempotents of the (2 1) block:
/// `ξ_ν = (1/3){[1,2,3] + ν[1,3,2] + (1-ν)[2,1,3] - ν[2,3,1] + (-1+ν)[3,1,2] - [3,2,1]}`.
pub fn xi_idempotent(nu: &RationalFunction) -> GroupRingElement {
    let third = RationalFunction::from_ratio(1, 3);
    let one = RationalFunction::one();
    GroupRingElement::from_terms(
        3,
        [
            (perm3([1, 2, 3]), &one * &third),
            (perm3([1, 3, 2]), &(nu * &one) * &third),
            (perm3([2, 1, 3]), &(&one - nu) * &third),
            (perm3([2, 3, 1]), &(-nu) * &third),
            (perm3([3, 1, 2]), &(nu - &one) * &third),
            (perm3([3, 2, 1]), &(-&one) * &third),
        ],
    )
}

/// The remaining primitive idempotent of the (2 1) block:
/// `η = (1/3){[1,2,3] - [2,1,3] - [2,3,1] + [3,2,1]}`.
pub fn eta_idempotent() -> GroupRingElement {
    let third = RationalFunction::from_ratio(1, 3);
    GroupRingElement::from_terms(
        3,
        [
            (perm3([1, 2, 3]), third.clone()),
            (perm3([2, 1, 3]), -&third),
            (perm3([2, 3, 1]), -&third),
            (perm3([3, 2, 1]), third.clone()),
        ],
    )
}

/// The exceptional idempotent `f0 = (1/2){id - (1 3)} - (1/6) Σ_p sign(p) p`.
/// Its right ideal is the one (2 1) symmetry class that cannot generate
/// curvature-type tensors; it coincides with `ξ_ν` at `ν = 1/2`.
pub fn f0_idempotent() -> GroupRingElement {
    let half = GroupRingElement::from_terms(
        3,
        [
            (perm3([1, 2, 3]), RationalFunction::from_ratio(1, 2)),
            (Permutation::transposition(3, 1, 3), RationalFunction::from_ratio(-1, 2)),
        ],
    );
    let alt = antisymmetrizer(3).scale(&RationalFunction::from_ratio(1, 6));
    &half - &alt
}

/// The tableau `t` with rows (1,3),(2,4); `(1/12) y_t*` projects onto
/// algebraic curvature tensors.
pub fn tableau_t() -> YoungTableau {
    YoungTableau::from_rows(vec![vec![1, 3], vec![2, 4]]).unwrap()
}

/// The tableau `t'` with rows (1,3,5),(2,4); `(1/24) y_{t'}*` projects onto
/// algebraic covariant derivative curvature tensors.
pub fn tableau_t_prime() -> YoungTableau {
    YoungTableau::from_rows(vec![vec![1, 3, 5], vec![2, 4]]).unwrap()
}

/// Rows (1,2),(3): its symmetrizer equals `3 ξ_0`.
pub fn tableau_t1() -> YoungTableau {
    YoungTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap()
}

/// Rows (1,3),(2): its symmetrizer equals `3 η`.
pub fn tableau_t2() -> YoungTableau {
    YoungTableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap()
}

/// `y_t*` for the degree-4 tableau, `y_{t'}*` for the degree-5 one.
pub fn curvature_symmetrizer_star(degree: usize) -> GroupRingElement {
    match degree {
        4 => young_symmetrizer(&tableau_t()).star(),
        5 => young_symmetrizer(&tableau_t_prime()).star(),
        _ => panic!("curvature symmetrizer defined for degrees 4 and 5"),
    }
}

/// The idempotent projector onto the curvature symmetry class:
/// `(1/12) y_t*` in degree 4, `(1/24) y_{t'}*` in degree 5.
pub fn curvature_projector(degree: usize) -> GroupRingElement {
    let scale = match degree {
        4 => RationalFunction::from_ratio(1, 12),
        5 => RationalFunction::from_ratio(1, 24),
        _ => panic!("curvature projector defined for degrees 4 and 5"),
    };
    curvature_symmetrizer_star(degree).scale(&scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_acts_trivially() {
        let e = xi_idempotent(&RationalFunction::variable());
        let one = GroupRingElement::one(3);
        assert_eq!(&e * &one, e);
        assert_eq!(&one * &e, e);
    }

    #[test]
    fn xi_is_idempotent_symbolically_and_at_samples() {
        let v = RationalFunction::variable();
        let xi = xi_idempotent(&v);
        assert_eq!(&xi * &xi, xi);
        for n in [-3i64, -1, 0, 1, 2, 5] {
            let x = xi_idempotent(&RationalFunction::from_int(n));
            assert_eq!(&x * &x, x, "nu = {n}");
        }
    }

    #[test]
    fn eta_is_idempotent_and_matches_its_tableau() {
        let eta = eta_idempotent();
        assert_eq!(&eta * &eta, eta);
        let y2 = young_symmetrizer(&tableau_t2());
        assert_eq!(y2.scale(&RationalFunction::from_ratio(1, 3)), eta);
    }

    #[test]
    fn xi_zero_matches_its_tableau() {
        let y1 = young_symmetrizer(&tableau_t1());
        assert_eq!(
            y1.scale(&RationalFunction::from_ratio(1, 3)),
            xi_idempotent(&RationalFunction::zero())
        );
    }

    #[test]
    fn f0_equals_xi_at_one_half() {
        let f0 = f0_idempotent();
        assert_eq!(f0, xi_idempotent(&RationalFunction::from_ratio(1, 2)));
        assert_eq!(&f0 * &f0, f0);
        // expansion: 1/3, 1/6, 1/6, -1/6, -1/6, -1/3 against lex order
        let order = Permutation::all(3);
        let expected: Vec<RationalFunction> = [(1, 3), (1, 6), (1, 6), (-1, 6), (-1, 6), (-1, 3)]
            .iter()
            .map(|&(n, d)| RationalFunction::from_ratio(n, d))
            .collect();
        assert_eq!(f0.coeff_vector(&order), expected);
        for n in [0i64, 1, 2, -1] {
            assert_ne!(f0, xi_idempotent(&RationalFunction::from_int(n)));
        }
    }

    #[test]
    fn star_is_an_involution_and_fixes_identity() {
        let a = xi_idempotent(&RationalFunction::variable());
        assert_eq!(a.star().star(), a);
        let one = GroupRingElement::one(3);
        assert_eq!(one.star(), one);
    }

    #[test]
    fn star_of_xi_swaps_the_three_cycles() {
        let v = RationalFunction::variable();
        let s = xi_idempotent(&v).star();
        let expected = &(&v - &RationalFunction::one()) * &RationalFunction::from_ratio(1, 3);
        assert_eq!(s.coeff(&perm3([2, 3, 1])), expected);
        let eta_star = eta_idempotent().star();
        assert_eq!(eta_star.coeff(&perm3([3, 1, 2])), RationalFunction::from_ratio(-1, 3));
        assert_eq!(eta_star.coeff(&perm3([2, 3, 1])), RationalFunction::zero());
        assert_ne!(eta_star, eta_idempotent());
    }

    #[test]
    fn young_symmetrizers_are_essentially_idempotent() {
        let yt = curvature_symmetrizer_star(4);
        assert_eq!(yt.support_size(), 16);
        assert_eq!(&yt * &yt, yt.scale(&RationalFunction::from_int(12)));

        let ytp = curvature_symmetrizer_star(5);
        assert_eq!(ytp.support_size(), 48);
        assert_eq!(&ytp * &ytp, ytp.scale(&RationalFunction::from_int(24)));
    }

    #[test]
    fn projectors_are_idempotent() {
        for r in [4, 5] {
            let e = curvature_projector(r);
            assert_eq!(&e * &e, e, "degree {r}");
        }
    }

    #[test]
    fn embedding_preserves_products_and_idempotency() {
        let v = RationalFunction::variable();
        let xi = xi_idempotent(&v);
        let xi4 = xi.embed(4);
        assert_eq!(&xi4 * &xi4, xi4);
        assert_eq!(
            xi4.coeff(&Permutation::from_one_line(vec![2, 3, 1, 4]).unwrap()),
            xi.coeff(&perm3([2, 3, 1]))
        );
        assert_eq!(GroupRingElement::one(3).embed(4), GroupRingElement::one(4));
    }

    #[test]
    fn display_is_deterministic_and_lex_sorted() {
        let v = RationalFunction::variable();
        let xi = xi_idempotent(&v);
        assert_eq!(
            xi.to_string(),
            "1/3*[1,2,3] + v/3*[1,3,2] - (-1 + v)/3*[2,1,3] - v/3*[2,3,1] + (-1 + v)/3*[3,1,2] - 1/3*[3,2,1]"
        );
        assert_eq!(
            eta_idempotent().to_string(),
            "1/3*[1,2,3] - 1/3*[2,1,3] - 1/3*[2,3,1] + 1/3*[3,2,1]"
        );
    }
}
