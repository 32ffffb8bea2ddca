//! Identity systems for the (2 1) symmetry classes and the reduction
//! pipeline: solve the 2×6 coefficient system for a chosen pair of index
//! arrangements, rewrite the master formulas over that pair, then scan the
//! numerator roots of the surviving coefficients for parameter values that
//! shorten the formula further. Running every pair reproduces the
//! minimal-length table.

use crate::formula::{
    self, FactorSymmetry, TensorFormula,
};
use crate::linalg::Mat;
use crate::perm::Permutation;
use crate::rational::{rational_roots, Polynomial, Q, RationalFunction};
use crate::ring::{
    curvature_symmetrizer_star, eta_idempotent, xi_idempotent, GroupRingElement,
};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// The two families of minimal right ideals in the (2 1) block: the
/// one-parameter `ξ_ν` family (kept symbolic in `ν`) and the single `η`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    Xi,
    Eta,
}

impl Family {
    pub fn idempotent(&self) -> GroupRingElement {
        match self {
            Family::Xi => xi_idempotent(&RationalFunction::variable()),
            Family::Eta => eta_idempotent(),
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "xi" => Some(Family::Xi),
            "eta" => Some(Family::Eta),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Xi => write!(f, "xi"),
            Family::Eta => write!(f, "eta"),
        }
    }
}

/// Which second factor the master formula carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SecondFactor {
    Vector,
    Sym2,
    Alt2,
}

impl SecondFactor {
    pub fn base_formula(&self) -> TensorFormula {
        match self {
            SecondFactor::Vector => formula::sixteen_term_formula(),
            SecondFactor::Sym2 => formula::five_index_formula(FactorSymmetry::Symmetric),
            SecondFactor::Alt2 => formula::five_index_formula(FactorSymmetry::Alternating),
        }
    }

    pub fn parse(s: &str) -> Option<SecondFactor> {
        match s {
            "vector" => Some(SecondFactor::Vector),
            "sym2" => Some(SecondFactor::Sym2),
            "alt2" => Some(SecondFactor::Alt2),
            _ => None,
        }
    }
}

impl fmt::Display for SecondFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SecondFactor::Vector => write!(f, "vector"),
            SecondFactor::Sym2 => write!(f, "sym2"),
            SecondFactor::Alt2 => write!(f, "alt2"),
        }
    }
}

/// The fixed column order: S_3 in lexicographic one-line notation.
pub fn column_permutations() -> Vec<Permutation> {
    Permutation::all(3)
}

/// A 2-subset of columns {1..6}, written `ab` with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Pair {
    a: usize,
    b: usize,
}

impl Pair {
    pub fn new(a: usize, b: usize) -> Result<Pair, String> {
        if a >= 1 && b <= 6 && a < b {
            Ok(Pair { a, b })
        } else {
            Err(format!("pair must satisfy 1 <= a < b <= 6, got ({a}, {b})"))
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// All 15 pairs in lexicographic order.
    pub fn all() -> Vec<Pair> {
        let mut out = Vec::with_capacity(15);
        for a in 1..=6 {
            for b in a + 1..=6 {
                out.push(Pair { a, b });
            }
        }
        out
    }

    /// Parses the two-digit form `"12"`.
    pub fn parse(s: &str) -> Result<Pair, String> {
        let digits: Vec<u32> = s.chars().filter_map(|c| c.to_digit(10)).collect();
        if digits.len() != 2 || s.chars().count() != 2 {
            return Err(format!("pair must be two digits like `12`, got `{s}`"));
        }
        Pair::new(digits[0] as usize, digits[1] as usize)
    }

    pub fn permutations(&self) -> (Permutation, Permutation) {
        let cols = column_permutations();
        (cols[self.a - 1].clone(), cols[self.b - 1].clone())
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, self.b)
    }
}

/// The canonical basis of the coefficient system for linear identities
/// satisfied by the class coordinates: a 2×6 matrix whose rows span the
/// coefficient space of the left ideal `K[S_3]·e*`.
#[derive(Clone, PartialEq, Eq)]
pub struct IdentityMatrix {
    pub family: Family,
    mat: Mat,
}

fn poly_entry(c0: i64, c1: i64) -> RationalFunction {
    let ninth = RationalFunction::from_ratio(1, 9);
    &RationalFunction::from_polynomial(Polynomial::from_ints(&[c0, c1])) * &ninth
}

fn canonical_rows(family: Family) -> Mat {
    match family {
        Family::Xi => Mat::from_rows(vec![
            vec![
                poly_entry(4, -2),
                poly_entry(-2, 4),
                poly_entry(4, -2),
                poly_entry(-2, 4),
                poly_entry(-2, -2),
                poly_entry(-2, -2),
            ],
            vec![
                poly_entry(-2, 4),
                poly_entry(4, -2),
                poly_entry(-2, -2),
                poly_entry(-2, -2),
                poly_entry(4, -2),
                poly_entry(-2, 4),
            ],
        ]),
        Family::Eta => Mat::from_rows(vec![
            vec![
                poly_entry(-1, 0),
                poly_entry(2, 0),
                poly_entry(-1, 0),
                poly_entry(2, 0),
                poly_entry(-1, 0),
                poly_entry(-1, 0),
            ],
            vec![
                poly_entry(2, 0),
                poly_entry(-1, 0),
                poly_entry(-1, 0),
                poly_entry(-1, 0),
                poly_entry(-1, 0),
                poly_entry(2, 0),
            ],
        ]),
    }
}

/// Rows spanning the coefficient space of the left ideal `K[S_r]·e*`,
/// computed from the generating idempotent.
pub fn left_ideal_rows(e: &GroupRingElement) -> Mat {
    let order = Permutation::all(e.degree());
    let estar = e.star();
    let rows: Vec<Vec<RationalFunction>> = order
        .iter()
        .map(|p| {
            let g = GroupRingElement::from_terms(e.degree(), [(p.clone(), RationalFunction::one())]);
            g.checked_mul(&estar).unwrap().coeff_vector(&order)
        })
        .collect();
    Mat::from_rows(rows)
}

impl IdentityMatrix {
    /// Computes a basis of `K[S_3]·e*`, checks it is 2-dimensional, and
    /// normalizes it to the canonical 2×6 form (the two row spaces must
    /// agree; the canonical entries are then used verbatim so that the
    /// printed determinants and substitution rules come out on the nose).
    pub fn for_family(family: Family) -> IdentityMatrix {
        let computed = left_ideal_rows(&family.idempotent());
        assert_eq!(computed.rank(), 2, "the (2 1) left ideal is 2-dimensional");
        let canonical = canonical_rows(family);
        assert!(
            computed.same_row_space(&canonical),
            "computed ideal basis must span the canonical identity matrix"
        );
        IdentityMatrix { family, mat: canonical }
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    /// Determinant of the 2×2 submatrix picked by the pair's columns.
    pub fn pair_determinant(&self, pair: Pair) -> RationalFunction {
        let m = Mat::from_rows(vec![
            vec![self.mat.get(0, pair.a - 1).clone(), self.mat.get(0, pair.b - 1).clone()],
            vec![self.mat.get(1, pair.a - 1).clone(), self.mat.get(1, pair.b - 1).clone()],
        ]);
        m.det()
    }
}

/// A solved pair system: for every arrangement outside the pair, the unique
/// coefficients `x` with `0 = x_a U_(p_a) + x_b U_(p_b) + U_(p̄)`.
#[derive(Clone, PartialEq, Eq)]
pub struct PairSystem {
    pub family: Family,
    pub pair: Pair,
    pub determinant: RationalFunction,
    substitutions: BTreeMap<Permutation, [RationalFunction; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("pair {pair} is singular for {family}: its determinant vanishes identically")]
pub struct SingularPair {
    pub family: Family,
    pub pair: Pair,
}

impl PairSystem {
    pub fn substitution(&self, outside: &Permutation) -> Option<&[RationalFunction; 2]> {
        self.substitutions.get(outside)
    }

    pub fn substitutions(&self) -> impl Iterator<Item = (&Permutation, &[RationalFunction; 2])> {
        self.substitutions.iter()
    }
}

/// Procedure step: check the pair determinant and solve the four
/// substitution systems.
pub fn solve_pair(m: &IdentityMatrix, pair: Pair) -> Result<PairSystem, SingularPair> {
    let det = m.pair_determinant(pair);
    if det.is_zero() {
        return Err(SingularPair {
            family: m.family,
            pair,
        });
    }
    let cols = column_permutations();
    let sub_matrix = Mat::from_rows(vec![
        vec![m.matrix().get(0, pair.a - 1).clone(), m.matrix().get(0, pair.b - 1).clone()],
        vec![m.matrix().get(1, pair.a - 1).clone(), m.matrix().get(1, pair.b - 1).clone()],
    ]);
    let mut substitutions = BTreeMap::new();
    for (idx, outside) in cols.iter().enumerate() {
        let col = idx + 1;
        if col == pair.a || col == pair.b {
            continue;
        }
        let rhs = vec![-m.matrix().get(0, idx), -m.matrix().get(1, idx)];
        let x = sub_matrix
            .solve(&rhs)
            .expect("nonzero determinant gives a unique solution");
        substitutions.insert(outside.clone(), [x[0].clone(), x[1].clone()]);
    }
    Ok(PairSystem {
        family: m.family,
        pair,
        determinant: det,
        substitutions,
    })
}

/// Rewrites every first-factor arrangement outside the pair through the
/// solved identities, leaving a formula supported on the two pair
/// arrangements only.
pub fn reduce_formula(f: &TensorFormula, sys: &PairSystem) -> TensorFormula {
    let shape = f.shape().clone();
    let first = &shape.factors()[0];
    assert!(
        first.arity == 3 && first.symmetry == FactorSymmetry::Generic,
        "reduction rewrites a generic order-3 first factor"
    );
    let (pa, pb) = sys.pair.permutations();
    let r = shape.arity();
    let mut terms: Vec<(Permutation, RationalFunction)> = Vec::new();
    for (q, c) in f.terms() {
        let u_vals = [q.apply(1), q.apply(2), q.apply(3)];
        let pattern = Permutation::rank_pattern(&u_vals);
        if pattern == pa || pattern == pb {
            terms.push((q.clone(), c.clone()));
            continue;
        }
        let x = sys
            .substitution(&pattern)
            .expect("every non-pair arrangement has a substitution");
        let mut names = u_vals;
        names.sort_unstable();
        for (p, coeff) in [(&pa, &x[0]), (&pb, &x[1])] {
            let mut images = Vec::with_capacity(r);
            for m in 1..=3 {
                images.push(names[p.apply(m) - 1]);
            }
            for m in 4..=r {
                images.push(q.apply(m));
            }
            terms.push((Permutation::from_one_line(images).unwrap(), &(-coeff) * c));
        }
    }
    TensorFormula::from_terms(shape, terms)
}

/// One root specialization: set `v = nu` in the reduced formula.
#[derive(Clone, PartialEq, Eq)]
pub struct RootSpecialization {
    pub nu: Q,
    pub length: usize,
    pub formula: TensorFormula,
}

/// The outcome of running the procedure on one pair.
#[derive(Clone, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// The pair determinant vanishes identically; nothing to solve.
    Skipped,
    Reduced {
        generic: TensorFormula,
        generic_length: usize,
        roots: Vec<RootSpecialization>,
    },
}

#[derive(Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub family: Family,
    pub second_factor: SecondFactor,
    pub pair: Pair,
    pub determinant: RationalFunction,
    pub outcome: ReductionOutcome,
}

impl ReductionReport {
    pub fn is_skipped(&self) -> bool {
        matches!(self.outcome, ReductionOutcome::Skipped)
    }

    pub fn generic_length(&self) -> Option<usize> {
        match &self.outcome {
            ReductionOutcome::Skipped => None,
            ReductionOutcome::Reduced { generic_length, .. } => Some(*generic_length),
        }
    }

    pub fn roots(&self) -> &[RootSpecialization] {
        match &self.outcome {
            ReductionOutcome::Skipped => &[],
            ReductionOutcome::Reduced { roots, .. } => roots,
        }
    }

    /// Stable JSON form:
    /// `{family, second_factor, pair, determinant, skipped, generic_length,
    ///   roots: [{nu, length, formula}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let roots: Vec<serde_json::Value> = self
            .roots()
            .iter()
            .map(|r| {
                serde_json::json!({
                    "nu": r.nu.to_string(),
                    "length": r.length,
                    "formula": r.formula.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "family": self.family.to_string(),
            "second_factor": self.second_factor.to_string(),
            "pair": [self.pair.a, self.pair.b],
            "determinant": self.determinant.to_string(),
            "skipped": self.is_skipped(),
            "generic_length": self.generic_length(),
            "generic_formula": match &self.outcome {
                ReductionOutcome::Skipped => serde_json::Value::Null,
                ReductionOutcome::Reduced { generic, .. } => generic.to_string().into(),
            },
            "roots": roots,
        })
    }
}

/// Rational ν excluded from specialization for a given pair: the poles of
/// the substitution system (roots of the determinant), the poles of the
/// reduced coefficients, and the blocked value 1/2.
fn excluded_values(det: &RationalFunction, reduced: &TensorFormula) -> BTreeSet<Q> {
    let mut excluded = BTreeSet::new();
    excluded.insert(Q::new(1, 2));
    if det.num().degree() > Some(0) {
        excluded.extend(rational_roots(det.num()).unwrap().rational);
    }
    for (_, c) in reduced.terms() {
        if c.den().degree() > Some(0) {
            excluded.extend(rational_roots(c.den()).unwrap().rational);
        }
    }
    excluded
}

/// Collects the allowed numerator roots of the reduced formula and the
/// specialized formula at each of them.
pub fn scan_roots(reduced: &TensorFormula, sys: &PairSystem) -> ReductionOutcome {
    let excluded = excluded_values(&sys.determinant, reduced);
    let mut candidates: BTreeSet<Q> = BTreeSet::new();
    for (_, c) in reduced.terms() {
        if c.num().degree() > Some(0) {
            candidates.extend(rational_roots(c.num()).unwrap().rational);
        }
    }
    let roots: Vec<RootSpecialization> = candidates
        .into_iter()
        .filter(|nu| !excluded.contains(nu))
        .map(|nu| {
            let formula = reduced.specialize(&nu).expect("poles were excluded");
            RootSpecialization {
                length: formula.term_count(),
                nu,
                formula,
            }
        })
        .collect();
    ReductionOutcome::Reduced {
        generic_length: reduced.term_count(),
        generic: reduced.clone(),
        roots,
    }
}

/// Runs the full procedure for one pair.
pub fn reduce_with_pair(
    kind: SecondFactor,
    family: Family,
    pair: Pair,
) -> ReductionReport {
    let m = IdentityMatrix::for_family(family);
    let det = m.pair_determinant(pair);
    match solve_pair(&m, pair) {
        Err(_) => ReductionReport {
            family,
            second_factor: kind,
            pair,
            determinant: det,
            outcome: ReductionOutcome::Skipped,
        },
        Ok(sys) => {
            let reduced = reduce_formula(&kind.base_formula(), &sys);
            ReductionReport {
                family,
                second_factor: kind,
                pair,
                determinant: det,
                outcome: scan_roots(&reduced, &sys),
            }
        }
    }
}

/// Runs every pair (15 reports, some possibly skipped).
pub fn full_scan(kind: SecondFactor, family: Family) -> Vec<ReductionReport> {
    let m = IdentityMatrix::for_family(family);
    let base = kind.base_formula();
    Pair::all()
        .into_iter()
        .map(|pair| {
            let det = m.pair_determinant(pair);
            match solve_pair(&m, pair) {
                Err(_) => ReductionReport {
                    family,
                    second_factor: kind,
                    pair,
                    determinant: det,
                    outcome: ReductionOutcome::Skipped,
                },
                Ok(sys) => {
                    let reduced = reduce_formula(&base, &sys);
                    ReductionReport {
                        family,
                        second_factor: kind,
                        pair,
                        determinant: det,
                        outcome: scan_roots(&reduced, &sys),
                    }
                }
            }
        })
        .collect()
}

/// The minimal-length table for the parametric family with a plain vector
/// second factor.
pub fn table1() -> Vec<ReductionReport> {
    full_scan(SecondFactor::Vector, Family::Xi)
}

/// The known minimal-length table for the vector case: per pair, the
/// allowed roots with the specialized lengths. Regression fixture for the
/// verification suite.
pub fn reference_table1() -> Vec<(Pair, Vec<(Q, usize)>)> {
    let pair = |a, b| Pair::new(a, b).unwrap();
    let q = Q::from_int;
    vec![
        (pair(1, 2), vec![(q(2), 6)]),
        (pair(1, 3), vec![(q(-1), 6)]),
        (pair(1, 4), vec![(q(-1), 6), (q(2), 4)]),
        (pair(1, 5), vec![(q(-1), 4), (q(2), 6)]),
        (pair(1, 6), vec![(q(-1), 4), (q(2), 4)]),
        (pair(2, 3), vec![(q(-1), 6), (q(2), 6)]),
        (pair(2, 4), vec![(q(-1), 6), (q(2), 6)]),
        (pair(2, 5), vec![(q(-1), 4)]),
        (pair(2, 6), vec![(q(-1), 4), (q(2), 6)]),
        (pair(3, 4), vec![(q(2), 4)]),
        (pair(3, 5), vec![(q(-1), 6), (q(2), 6)]),
        (pair(3, 6), vec![(q(-1), 6), (q(2), 4)]),
        (pair(4, 5), vec![(q(-1), 6), (q(2), 6)]),
        (pair(4, 6), vec![(q(-1), 6)]),
        (pair(5, 6), vec![(q(2), 6)]),
    ]
}

/// Aggregate view of a full scan: the uniform parametric length, the global
/// minimum over all allowed specializations, and which ν reach it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanSummary {
    pub second_factor: SecondFactor,
    pub xi_generic_length: usize,
    pub xi_min_length: usize,
    pub xi_min_nus: Vec<Q>,
    pub eta_lengths: Vec<usize>,
    pub eta_min_length: usize,
}

pub fn scan_summary(kind: SecondFactor) -> ScanSummary {
    let xi_reports = full_scan(kind, Family::Xi);
    let mut generic = BTreeSet::new();
    let mut best_per_nu: BTreeMap<Q, usize> = BTreeMap::new();
    for report in &xi_reports {
        if let Some(g) = report.generic_length() {
            generic.insert(g);
        }
        for root in report.roots() {
            let entry = best_per_nu.entry(root.nu.clone()).or_insert(root.length);
            *entry = (*entry).min(root.length);
        }
    }
    assert_eq!(generic.len(), 1, "parametric reduced length must be uniform across pairs");
    let xi_generic_length = *generic.iter().next().unwrap();
    let xi_min_length = best_per_nu.values().copied().min().unwrap_or(xi_generic_length);
    let xi_min_nus = best_per_nu
        .iter()
        .filter(|(_, &len)| len == xi_min_length)
        .map(|(nu, _)| nu.clone())
        .collect();

    let eta_reports = full_scan(kind, Family::Eta);
    let eta_lengths: Vec<usize> = eta_reports.iter().filter_map(ReductionReport::generic_length).collect();
    let eta_min_length = eta_lengths.iter().copied().min().unwrap();
    ScanSummary {
        second_factor: kind,
        xi_generic_length,
        xi_min_length,
        xi_min_nus,
        eta_lengths,
        eta_min_length,
    }
}

/// `σ_ν = y_t* · ξ_ν'` and `ρ = y_t* · η'` in Q(v)[S_4], together with the
/// exact vanishing locus of σ in the parameter.
#[derive(Clone, PartialEq, Eq)]
pub struct SigmaReport {
    pub sigma: GroupRingElement,
    pub rho: GroupRingElement,
    /// Monic gcd of all σ-coefficient numerators: σ specializes to zero
    /// exactly at its roots.
    pub locus_polynomial: Polynomial,
    pub locus_roots: Vec<Q>,
    pub rho_nonzero: bool,
}

pub fn sigma_rho_analysis() -> SigmaReport {
    let yt = curvature_symmetrizer_star(4);
    let xi4 = xi_idempotent(&RationalFunction::variable()).embed(4);
    let eta4 = eta_idempotent().embed(4);
    let sigma = yt.checked_mul(&xi4).unwrap();
    let rho = yt.checked_mul(&eta4).unwrap();
    let mut locus = Polynomial::zero();
    for (_, c) in sigma.terms() {
        assert!(c.den().is_one(), "sigma coefficients are polynomials");
        locus = locus.gcd(c.num());
    }
    let locus_roots = if locus.degree() > Some(0) {
        rational_roots(&locus).unwrap().rational
    } else {
        Vec::new()
    };
    SigmaReport {
        rho_nonzero: !rho.is_zero(),
        sigma,
        rho,
        locus_polynomial: locus,
        locus_roots,
    }
}

/// Compares a reduced two-factor formula against its factor-swapped twin.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SwapRelation {
    Equal,
    SignFlipped,
    Unrelated,
}

/// Reduces `proj(F1 ⊗ F2)` and `proj(F2 ⊗ F1)` with the same pair system
/// and reports how they compare. The class membership of the first factor
/// is exactly what the pair identities encode, so equality modulo those
/// identities is equality on the whole symmetry class.
pub fn factor_swap_relation(
    kind: SecondFactor,
    family: Family,
    pair: Pair,
) -> Result<SwapRelation, SingularPair> {
    let m = IdentityMatrix::for_family(family);
    let sys = solve_pair(&m, pair)?;
    let (forward_shape, backward_shape, degree) = match kind {
        SecondFactor::Vector => (formula::shape_u_w(), formula::shape_w_u(), 4),
        SecondFactor::Sym2 => (formula::shape_u_s(), formula::shape_s_u(), 5),
        SecondFactor::Alt2 => (formula::shape_u_a(), formula::shape_a_u(), 5),
    };
    let projector = crate::ring::curvature_projector(degree);
    let forward = TensorFormula::unit(forward_shape).apply_operator(&projector);
    let backward = TensorFormula::unit(backward_shape)
        .apply_operator(&projector)
        .swap_factor_order();
    let lhs = reduce_formula(&forward, &sys);
    let rhs = reduce_formula(&backward, &sys);
    if lhs == rhs {
        Ok(SwapRelation::Equal)
    } else if lhs == rhs.scale(&RationalFunction::from_int(-1)) {
        Ok(SwapRelation::SignFlipped)
    } else {
        Ok(SwapRelation::Unrelated)
    }
}

/// Aligned text table of a full scan.
pub fn render_table_text(reports: &[ReductionReport]) -> String {
    let mut out = String::new();
    out.push_str("pair  nu    length\n");
    for report in reports {
        if report.is_skipped() {
            out.push_str(&format!("{:<4}  skipped: singular pair\n", report.pair.to_string()));
            continue;
        }
        let roots = report.roots();
        if roots.is_empty() {
            out.push_str(&format!(
                "{:<4}  -     {} (no allowed roots)\n",
                report.pair.to_string(),
                report.generic_length().unwrap()
            ));
            continue;
        }
        for (k, root) in roots.iter().enumerate() {
            let pair = if k == 0 {
                report.pair.to_string()
            } else {
                String::new()
            };
            out.push_str(&format!("{:<4}  {:<4}  {}\n", pair, root.nu.to_string(), root.length));
        }
    }
    out
}

/// LaTeX tabular of a full scan.
pub fn render_table_latex(reports: &[ReductionReport]) -> String {
    let mut out = String::new();
    out.push_str("\\begin{tabular}{|c|c|c|}\n\\hline\npair & $\\nu$ & length \\\\\n\\hline\n");
    for report in reports {
        if report.is_skipped() {
            out.push_str(&format!("{} & \\multicolumn{{2}}{{c|}}{{singular}} \\\\\n\\hline\n", report.pair));
            continue;
        }
        for (k, root) in report.roots().iter().enumerate() {
            let pair = if k == 0 {
                report.pair.to_string()
            } else {
                String::new()
            };
            out.push_str(&format!("{} & ${}$ & {} \\\\\n", pair, root.nu, root.length));
        }
        out.push_str("\\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf_poly(coeffs: &[i64]) -> RationalFunction {
        RationalFunction::from_polynomial(Polynomial::from_ints(coeffs))
    }

    fn frac(num: &[i64], den: &[i64]) -> RationalFunction {
        &rf_poly(num) / &rf_poly(den)
    }

    #[test]
    fn identity_matrices_match_canonical_row_spaces() {
        for family in [Family::Xi, Family::Eta] {
            let m = IdentityMatrix::for_family(family);
            assert_eq!(m.matrix().nrows(), 2);
            assert_eq!(m.matrix().ncols(), 6);
        }
    }

    #[test]
    fn xi_pair_12_determinant() {
        let m = IdentityMatrix::for_family(Family::Xi);
        let det = m.pair_determinant(Pair::new(1, 2).unwrap());
        // (4/27)(1 - v)(1 + v)
        let expected = &rf_poly(&[4]) / &rf_poly(&[27])
            * (&rf_poly(&[1, -1]) * &rf_poly(&[1, 1]));
        assert_eq!(det, expected);
    }

    #[test]
    fn eta_singular_pairs() {
        let m = IdentityMatrix::for_family(Family::Eta);
        for (a, b) in [(1, 6), (2, 4), (3, 5)] {
            let pair = Pair::new(a, b).unwrap();
            assert!(m.pair_determinant(pair).is_zero(), "pair {pair}");
            assert!(solve_pair(&m, pair).is_err());
        }
        let p12 = Pair::new(1, 2).unwrap();
        assert_eq!(m.pair_determinant(p12), RationalFunction::from_ratio(-1, 27));
        assert!(solve_pair(&m, p12).is_ok());
    }

    #[test]
    fn xi_pair_12_substitutions_match_printed_identities() {
        let m = IdentityMatrix::for_family(Family::Xi);
        let sys = solve_pair(&m, Pair::new(1, 2).unwrap()).unwrap();
        let p = |im: &[usize]| Permutation::from_one_line(im.to_vec()).unwrap();
        // v^2 - 1 denominator throughout
        let den = [-1i64, 0, 1];
        // U_kji row: -(v^2-v+1)/(v^2-1) U_ijk + (2v-1)/(v^2-1) U_ikj + U_kji = 0
        let x = sys.substitution(&p(&[3, 2, 1])).unwrap();
        assert_eq!(x[0], frac(&[-1, 1, -1], &den));
        assert_eq!(x[1], frac(&[-1, 2], &den));
        // U_kij row: (v^2-2v)/(v^2-1) U_ijk + (v^2-v+1)/(v^2-1) U_ikj + U_kij = 0
        let x = sys.substitution(&p(&[3, 1, 2])).unwrap();
        assert_eq!(x[0], frac(&[0, -2, 1], &den));
        assert_eq!(x[1], frac(&[1, -1, 1], &den));
        // U_jki row: (2v-1)/(v^2-1) U_ijk - (v^2-v+1)/(v^2-1) U_ikj + U_jki = 0
        let x = sys.substitution(&p(&[2, 3, 1])).unwrap();
        assert_eq!(x[0], frac(&[-1, 2], &den));
        assert_eq!(x[1], frac(&[-1, 1, -1], &den));
        // U_jik row: (v^2-v+1)/(v^2-1) U_ijk + (v^2-2v)/(v^2-1) U_ikj + U_jik = 0
        let x = sys.substitution(&p(&[2, 1, 3])).unwrap();
        assert_eq!(x[0], frac(&[1, -1, 1], &den));
        assert_eq!(x[1], frac(&[0, -2, 1], &den));
    }

    #[test]
    fn solved_systems_annihilate_the_matrix_rows() {
        for family in [Family::Xi, Family::Eta] {
            let m = IdentityMatrix::for_family(family);
            for pair in Pair::all() {
                let Ok(sys) = solve_pair(&m, pair) else { continue };
                let cols = column_permutations();
                for (outside, x) in sys.substitutions() {
                    let col_of = |perm: &Permutation| cols.iter().position(|c| c == perm).unwrap();
                    for row in 0..2 {
                        let lhs = &(&(m.matrix().get(row, pair.a - 1) * &x[0])
                            + &(m.matrix().get(row, pair.b - 1) * &x[1]))
                            + m.matrix().get(row, col_of(outside));
                        assert!(lhs.is_zero(), "{family} {pair} row {row}");
                    }
                }
            }
        }
    }

    #[test]
    fn reduction_of_pair_12_reproduces_printed_coefficients() {
        let m = IdentityMatrix::for_family(Family::Xi);
        let sys = solve_pair(&m, Pair::new(1, 2).unwrap()).unwrap();
        let reduced = reduce_formula(&SecondFactor::Vector.base_formula(), &sys);
        assert_eq!(reduced.term_count(), 8);
        let p = |im: &[usize]| Permutation::from_one_line(im.to_vec()).unwrap();
        let d1 = [-12i64, 12]; // 12(v - 1)
        let d2 = [-12i64, 0, 12]; // 12(v^2 - 1)
        // U_jkl w_i
        assert_eq!(reduced.coeff(&p(&[2, 3, 4, 1])), frac(&[-1, 2], &d1));
        // U_jlk w_i
        assert_eq!(reduced.coeff(&p(&[2, 4, 3, 1])), -&frac(&[-1, 2], &d1));
        // U_ikl w_j
        assert_eq!(reduced.coeff(&p(&[1, 3, 4, 2])), -&frac(&[-1, 2], &d1));
        // U_ilk w_j
        assert_eq!(reduced.coeff(&p(&[1, 4, 3, 2])), frac(&[-1, 2], &d1));
        // U_ijl w_k
        assert_eq!(reduced.coeff(&p(&[1, 2, 4, 3])), frac(&[-1, 4, -4], &d2));
        // U_ilj w_k
        assert_eq!(reduced.coeff(&p(&[1, 4, 2, 3])), frac(&[-2, 5, -2], &d2));
        // U_ijk w_l
        assert_eq!(reduced.coeff(&p(&[1, 2, 3, 4])), frac(&[1, -4, 4], &d2));
        // U_ikj w_l
        assert_eq!(reduced.coeff(&p(&[1, 3, 2, 4])), frac(&[2, -5, 2], &d2));
    }

    #[test]
    fn pair_12_scan_finds_root_two_and_six_terms() {
        let report = reduce_with_pair(SecondFactor::Vector, Family::Xi, Pair::new(1, 2).unwrap());
        let roots = report.roots();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].nu, Q::from_int(2));
        assert_eq!(roots[0].length, 6);
        let p = |im: &[usize]| Permutation::from_one_line(im.to_vec()).unwrap();
        let quarter = RationalFunction::from_ratio(1, 4);
        let f = &roots[0].formula;
        assert_eq!(f.coeff(&p(&[2, 3, 4, 1])), quarter);
        assert_eq!(f.coeff(&p(&[2, 4, 3, 1])), -&quarter);
        assert_eq!(f.coeff(&p(&[1, 3, 4, 2])), -&quarter);
        assert_eq!(f.coeff(&p(&[1, 4, 3, 2])), quarter);
        assert_eq!(f.coeff(&p(&[1, 2, 4, 3])), -&quarter);
        assert_eq!(f.coeff(&p(&[1, 2, 3, 4])), quarter);
    }

    #[test]
    fn eta_reduction_gives_eight_terms_on_valid_pairs() {
        for report in full_scan(SecondFactor::Vector, Family::Eta) {
            match report.generic_length() {
                None => assert!([(1, 6), (2, 4), (3, 5)]
                    .iter()
                    .any(|&(a, b)| Pair::new(a, b).unwrap() == report.pair)),
                Some(len) => assert_eq!(len, 8, "pair {}", report.pair),
            }
        }
    }

    #[test]
    fn sigma_vanishes_exactly_at_one_half() {
        let report = sigma_rho_analysis();
        assert!(!report.sigma.is_zero());
        assert!(report.rho_nonzero);
        assert_eq!(report.locus_roots, vec![Q::new(1, 2)]);
        // the locus polynomial is exactly (v - 1/2), so 1/2 is the only
        // vanishing point over any field extension as well
        assert_eq!(
            report.locus_polynomial,
            Polynomial::from_coeffs(vec![Q::new(-1, 2), Q::one()])
        );
        let at_half = report.sigma.eval_at(&Q::new(1, 2)).unwrap();
        assert!(at_half.is_zero());
        let at_zero = report.sigma.eval_at(&Q::zero()).unwrap();
        assert!(!at_zero.is_zero());
    }

    #[test]
    fn table_row_for_pair_34() {
        let report = reduce_with_pair(SecondFactor::Vector, Family::Xi, Pair::new(3, 4).unwrap());
        let roots = report.roots();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].nu, Q::from_int(2));
        assert_eq!(roots[0].length, 4);
    }

    #[test]
    fn json_report_shape() {
        let report = reduce_with_pair(SecondFactor::Vector, Family::Xi, Pair::new(1, 2).unwrap());
        let json = report.to_json();
        assert_eq!(json["family"], "xi");
        assert_eq!(json["pair"][0], 1);
        assert_eq!(json["skipped"], false);
        assert_eq!(json["generic_length"], 8);
        assert_eq!(json["roots"][0]["nu"], "2");
        assert_eq!(json["roots"][0]["length"], 6);
    }

    #[test]
    fn pair_parsing() {
        assert_eq!(Pair::parse("12").unwrap(), Pair::new(1, 2).unwrap());
        assert!(Pair::parse("21").is_err());
        assert!(Pair::parse("1").is_err());
        assert!(Pair::parse("17").is_err());
        assert_eq!(Pair::all().len(), 15);
    }
}
