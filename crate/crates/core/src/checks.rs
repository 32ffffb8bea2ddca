//! The composed verification suite: every headline claim bundled as a
//! named check with pass/fail details. The command-line `verify` runs
//! these; the acceptance tests assert the same facts (and more) directly.

use crate::dft::{inverse_dft, x_nu_block, y_block, Dft, FourierImage};
use crate::formula::{self, FactorSymmetry, TensorFormula};
use crate::linalg::Mat;
use crate::perm::{partitions, standard_tableaux, Partition, Permutation};
use crate::rational::{Polynomial, Q, RationalFunction};
use crate::reduction::{
    self, factor_swap_relation, reference_table1, scan_summary, sigma_rho_analysis, Family, Pair,
    SecondFactor, SwapRelation,
};
use crate::ring::{
    self, curvature_symmetrizer_star, eta_idempotent, f0_idempotent, xi_idempotent,
    young_symmetrizer, GroupRingElement,
};
use crate::sample::{build_tb, evaluate_formula, random_vector, TensorSample};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

struct Checker {
    name: &'static str,
    passed: bool,
    details: Vec<String>,
}

impl Checker {
    fn new(name: &'static str) -> Self {
        Checker {
            name,
            passed: true,
            details: Vec::new(),
        }
    }

    fn expect(&mut self, cond: bool, what: &str) {
        if cond {
            self.details.push(format!("ok: {what}"));
        } else {
            self.passed = false;
            self.details.push(format!("FAILED: {what}"));
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.passed,
            details: self.details,
        }
    }
}

fn random_ring_element<R: Rng>(rng: &mut R, degree: usize, terms: usize) -> GroupRingElement {
    let all = Permutation::all(degree);
    GroupRingElement::from_terms(
        degree,
        (0..terms)
            .map(|_| {
                let p = all[rng.random_range(0..all.len())].clone();
                (p, RationalFunction::from_int(rng.random_range(-3..=3)))
            })
            .collect::<Vec<_>>(),
    )
}

/// σ_ν = y_t*·ξ_ν' vanishes exactly at ν = 1/2; ρ = y_t*·η' is nonzero.
pub fn check_sigma() -> CheckResult {
    let mut c = Checker::new("sigma");
    let report = sigma_rho_analysis();
    c.expect(!report.sigma.is_zero(), "sigma is nonzero as a parametric element");
    c.expect(report.rho_nonzero, "rho is nonzero");
    c.expect(
        report.locus_roots == vec![Q::new(1, 2)],
        "rational vanishing locus of sigma is exactly {1/2}",
    );
    c.expect(
        report.locus_polynomial == Polynomial::from_coeffs(vec![Q::new(-1, 2), Q::one()]),
        "coefficient gcd is exactly (v - 1/2): no further vanishing points in any extension",
    );
    c.expect(
        report.sigma.eval_at(&Q::new(1, 2)).unwrap().is_zero(),
        "sigma specializes to zero at v = 1/2",
    );
    let samples = [
        Q::from_int(0),
        Q::from_int(1),
        Q::from_int(-1),
        Q::from_int(2),
        Q::from_int(-2),
        Q::new(1, 3),
        Q::new(-1, 2),
        Q::new(3, 2),
        Q::new(2, 5),
        Q::from_int(7),
    ];
    for nu in &samples {
        c.expect(
            !report.sigma.eval_at(nu).unwrap().is_zero(),
            &format!("sigma nonzero at v = {nu}"),
        );
    }
    c.finish()
}

/// The exceptional idempotent coincides with ξ at ν = 1/2.
pub fn check_f0() -> CheckResult {
    let mut c = Checker::new("f0");
    let f0 = f0_idempotent();
    c.expect(
        f0 == xi_idempotent(&RationalFunction::from_ratio(1, 2)),
        "f0 equals xi(1/2) coefficient for coefficient",
    );
    c.expect(f0.checked_mul(&f0).unwrap() == f0, "f0 is idempotent");
    let order = Permutation::all(3);
    let expected: Vec<RationalFunction> = [(1i64, 3i64), (1, 6), (1, 6), (-1, 6), (-1, 6), (-1, 3)]
        .iter()
        .map(|&(n, d)| RationalFunction::from_ratio(n, d))
        .collect();
    c.expect(f0.coeff_vector(&order) == expected, "f0 expands to the stated six coefficients");
    for n in [0i64, 1, 2, -1, 5] {
        c.expect(
            f0 != xi_idempotent(&RationalFunction::from_int(n)),
            &format!("f0 differs from xi({n})"),
        );
    }
    c.finish()
}

/// Idempotents, Young symmetrizers and the ring structure around them.
pub fn check_idempotents() -> CheckResult {
    let mut c = Checker::new("idempotents");
    let v = RationalFunction::variable();
    let xi = xi_idempotent(&v);
    let eta = eta_idempotent();
    c.expect(xi.checked_mul(&xi).unwrap() == xi, "xi is idempotent over Q(v)");
    c.expect(eta.checked_mul(&eta).unwrap() == eta, "eta is idempotent");

    let yt = curvature_symmetrizer_star(4);
    c.expect(
        yt.checked_mul(&yt).unwrap() == yt.scale(&RationalFunction::from_int(12)),
        "y_t* is essentially idempotent with factor 12",
    );
    let ytp = curvature_symmetrizer_star(5);
    c.expect(
        ytp.checked_mul(&ytp).unwrap() == ytp.scale(&RationalFunction::from_int(24)),
        "y_t'* is essentially idempotent with factor 24",
    );

    let third = RationalFunction::from_ratio(1, 3);
    c.expect(
        young_symmetrizer(&ring::tableau_t1()).scale(&third) == xi_idempotent(&RationalFunction::zero()),
        "xi(0) is one third of the row-(1,2) tableau symmetrizer",
    );
    c.expect(
        young_symmetrizer(&ring::tableau_t2()).scale(&third) == eta,
        "eta is one third of the row-(1,3) tableau symmetrizer",
    );

    let mut rng = StdRng::seed_from_u64(101);
    for _ in 0..10 {
        let a = random_ring_element(&mut rng, 4, 3);
        let b = random_ring_element(&mut rng, 4, 3);
        let d = random_ring_element(&mut rng, 4, 3);
        let ab = a.checked_mul(&b).unwrap();
        let star_ok = ab.star() == b.star().checked_mul(&a.star()).unwrap();
        let assoc_ok =
            ab.checked_mul(&d).unwrap() == a.checked_mul(&b.checked_mul(&d).unwrap()).unwrap();
        if !star_ok || !assoc_ok {
            c.expect(star_ok, "star reverses products");
            c.expect(assoc_ok, "convolution is associative");
        }
    }
    c.expect(true, "star anti-automorphism and associativity on random S4 elements");

    // primitivity: xi K[S3] xi is one-dimensional over Q(v)
    let order = Permutation::all(3);
    let rows: Vec<Vec<RationalFunction>> = order
        .iter()
        .map(|p| {
            let g = GroupRingElement::from_terms(3, [(p.clone(), RationalFunction::one())]);
            xi.checked_mul(&g).unwrap().checked_mul(&xi).unwrap().coeff_vector(&order)
        })
        .collect();
    c.expect(Mat::from_rows(rows).rank() == 1, "xi K[S3] xi has dimension 1");
    let rows: Vec<Vec<RationalFunction>> = order
        .iter()
        .map(|p| {
            let g = GroupRingElement::from_terms(3, [(p.clone(), RationalFunction::one())]);
            eta.checked_mul(&g).unwrap().checked_mul(&eta).unwrap().coeff_vector(&order)
        })
        .collect();
    c.expect(Mat::from_rows(rows).rank() == 1, "eta K[S3] eta has dimension 1");

    // the four standard tableaux of degree 3 decompose the ring into left
    // ideals of total dimension 6 meeting trivially
    let mut stacked: Option<Mat> = None;
    let mut dims = Vec::new();
    for frame in partitions(3) {
        for t in standard_tableaux(&frame) {
            let y = young_symmetrizer(&t);
            let rows: Vec<Vec<RationalFunction>> = order
                .iter()
                .map(|p| {
                    let g = GroupRingElement::from_terms(3, [(p.clone(), RationalFunction::one())]);
                    g.checked_mul(&y).unwrap().coeff_vector(&order)
                })
                .collect();
            let ideal = Mat::from_rows(rows).row_space_basis();
            dims.push(ideal.nrows());
            stacked = Some(match stacked {
                None => ideal,
                Some(prev) => prev.stack(&ideal),
            });
        }
    }
    c.expect(dims.iter().sum::<usize>() == 6, "left ideal dimensions sum to 6");
    c.expect(
        stacked.unwrap().rank() == 6,
        "the four Young-symmetrizer left ideals are independent",
    );
    c.finish()
}

/// The transform pinned by the golden idempotents, plus ring-morphism
/// sampling in degree 4.
pub fn check_dft() -> CheckResult {
    let mut c = Checker::new("dft");
    let v = RationalFunction::variable();
    let block21 = Partition::of(&[2, 1]);
    let image = FourierImage::from_single_block(3, &block21, x_nu_block(&v));
    c.expect(
        inverse_dft(&image) == xi_idempotent(&v),
        "inverse transform of X_nu is xi exactly",
    );
    let image = FourierImage::from_single_block(3, &block21, y_block());
    c.expect(inverse_dft(&image) == eta_idempotent(), "inverse transform of Y is eta exactly");

    let dft3 = Dft::new(3);
    let mut hom_ok = true;
    for p in Permutation::all(3) {
        for q in Permutation::all(3) {
            for l in partitions(3) {
                let lhs = dft3.natural_rep(&l, &p.compose(&q).unwrap());
                let rhs = &dft3.natural_rep(&l, &p) * &dft3.natural_rep(&l, &q);
                hom_ok &= lhs == rhs;
            }
        }
    }
    c.expect(hom_ok, "natural representation is a homomorphism, exhaustively on S3");

    let dft4 = Dft::new(4);
    let all4 = Permutation::all(4);
    let mut rng = StdRng::seed_from_u64(202);
    let mut hom4_ok = true;
    for _ in 0..200 {
        let p = &all4[rng.random_range(0..all4.len())];
        let q = &all4[rng.random_range(0..all4.len())];
        for l in partitions(4) {
            let lhs = dft4.natural_rep(&l, &p.compose(q).unwrap());
            let rhs = &dft4.natural_rep(&l, p) * &dft4.natural_rep(&l, q);
            hom4_ok &= lhs == rhs;
        }
    }
    c.expect(hom4_ok, "natural representation sampled on 200 pairs in S4");

    let mut round_ok = true;
    for _ in 0..50 {
        let a = random_ring_element(&mut rng, 4, 4);
        round_ok &= dft4.inverse(&dft4.forward(&a)) == a;
    }
    c.expect(round_ok, "inverse-forward round trip on 50 random degree-4 elements");
    c.finish()
}

/// Factor-order invariance of the symmetrized products, symbolically
/// (modulo the class identities) and on exact numeric samples.
pub fn check_factor_swap() -> CheckResult {
    let mut c = Checker::new("factor-swap");
    for family in [Family::Xi, Family::Eta] {
        for pair in Pair::all() {
            match factor_swap_relation(SecondFactor::Vector, family, pair) {
                Err(_) => continue,
                Ok(rel) => {
                    if rel != SwapRelation::Equal {
                        c.expect(false, &format!("vector swap for {family} pair {pair}"));
                    }
                }
            }
            match factor_swap_relation(SecondFactor::Sym2, family, pair) {
                Err(_) => continue,
                Ok(rel) => {
                    if rel != SwapRelation::Equal {
                        c.expect(false, &format!("sym2 swap for {family} pair {pair}"));
                    }
                }
            }
            match factor_swap_relation(SecondFactor::Alt2, family, pair) {
                Err(_) => continue,
                Ok(rel) => {
                    if rel != SwapRelation::SignFlipped {
                        c.expect(false, &format!("alt2 sign flip for {family} pair {pair}"));
                    }
                }
            }
        }
    }
    c.expect(true, "swap relations over every nonsingular pair, both families: =, =, sign -1");

    let projector4 = ring::curvature_projector(4);
    let projector5 = ring::curvature_projector(5);
    let forward_v = TensorFormula::unit(formula::shape_u_w()).apply_operator(&projector4);
    let backward_v = TensorFormula::unit(formula::shape_w_u()).apply_operator(&projector4);
    let forward_a = TensorFormula::unit(formula::shape_u_a()).apply_operator(&projector5);
    let backward_a = TensorFormula::unit(formula::shape_a_u()).apply_operator(&projector5);
    let mut rng = StdRng::seed_from_u64(303);
    let mut numeric_ok = true;
    for dim in [3usize, 4] {
        for _ in 0..2 {
            let nu = Q::from_int(rng.random_range(3..=9));
            let sample =
                TensorSample::random(&mut rng, dim, &xi_idempotent(&RationalFunction::constant(nu.clone()))).unwrap();
            let lhs = evaluate_formula(&forward_v, &sample, None).unwrap();
            let rhs = evaluate_formula(&backward_v, &sample, None).unwrap();
            numeric_ok &= lhs == rhs;
            let lhs = evaluate_formula(&forward_a, &sample, None).unwrap();
            let rhs = evaluate_formula(&backward_a, &sample, None).unwrap();
            let mut neg = true;
            for idx in lhs.indices() {
                neg &= lhs.get(&idx) == &-rhs.get(&idx);
            }
            numeric_ok &= neg;
        }
    }
    c.expect(numeric_ok, "numeric samples in dimensions 3 and 4 agree (and flip sign for alt2)");
    c.finish()
}

/// Duality and ideal membership: `(aT)_b = T_b a*`, every `U_b` lies in the
/// left ideal of the class, and the collected `U_b` span it.
pub fn check_membership() -> CheckResult {
    let mut c = Checker::new("membership");
    let mut rng = StdRng::seed_from_u64(404);
    let order = Permutation::all(3);

    let mut duality_ok = true;
    for _ in 0..10 {
        let t = crate::sample::Tensor::random(&mut rng, 3, 3);
        let b: Vec<Vec<Q>> = (0..3).map(|_| random_vector(&mut rng, 3)).collect();
        let a = random_ring_element(&mut rng, 3, 3);
        duality_ok &= build_tb(&t.apply_operator(&a), &b)
            == build_tb(&t, &b).checked_mul(&a.star()).unwrap();
    }
    c.expect(duality_ok, "(aT)_b = T_b a* on random tensors, operators and frames");

    let projectors: Vec<(String, GroupRingElement)> = [0i64, 2, -1, 5]
        .iter()
        .map(|&n| (format!("xi({n})"), xi_idempotent(&RationalFunction::from_int(n))))
        .chain(std::iter::once(("eta".to_string(), eta_idempotent())))
        .collect();
    for (label, e) in &projectors {
        let ideal = reduction::left_ideal_rows(e).row_space_basis();
        if ideal.nrows() != 2 {
            c.expect(false, &format!("left ideal of {label} must be 2-dimensional"));
            continue;
        }
        let sample = TensorSample::random(&mut rng, 3, e).unwrap();
        let mut collected: Option<Mat> = None;
        let mut member_ok = true;
        for _ in 0..6 {
            let b: Vec<Vec<Q>> = (0..3).map(|_| random_vector(&mut rng, 3)).collect();
            let tb = build_tb(&sample.u, &b);
            let row = Mat::from_rows(vec![tb.coeff_vector(&order)]);
            member_ok &= ideal.contains_in_row_space(&row);
            collected = Some(match collected {
                None => row,
                Some(prev) => prev.stack(&row),
            });
        }
        c.expect(member_ok, &format!("every U_b lies in the left ideal of {label}"));
        c.expect(
            collected.unwrap().same_row_space(&ideal),
            &format!("collected U_b span the full left ideal of {label}"),
        );
    }
    c.finish()
}

/// Only the (2 1) first factor survives the curvature symmetrization.
pub fn check_blocked_classes() -> CheckResult {
    let mut c = Checker::new("pieri");
    c.expect(
        formula::blocked_class_formula(FactorSymmetry::Symmetric).is_zero(),
        "y_t*(M⊗w) vanishes identically for totally symmetric M",
    );
    c.expect(
        formula::blocked_class_formula(FactorSymmetry::Alternating).is_zero(),
        "y_t*(M⊗w) vanishes identically for totally alternating M",
    );
    let square = Partition::of(&[2, 2]);
    for l in partitions(3) {
        let has = l.pieri_product().contains(&square);
        c.expect(
            has == (l == Partition::of(&[2, 1])),
            &format!("one-box product of {l} contains (2,2) iff the frame is (2,1)"),
        );
    }
    c.finish()
}

/// The full table and the minimal-length summaries.
pub fn check_table() -> CheckResult {
    let mut c = Checker::new("table");
    let computed = reduction::table1();
    let expected = reference_table1();
    c.expect(computed.len() == 15, "fifteen pairs scanned");
    for ((pair, rows), report) in expected.iter().zip(&computed) {
        let got: Vec<(Q, usize)> = report
            .roots()
            .iter()
            .map(|r| (r.nu.clone(), r.length))
            .collect();
        c.expect(
            report.pair == *pair && got == *rows && report.generic_length() == Some(8),
            &format!("table row {pair}"),
        );
    }

    let vector = scan_summary(SecondFactor::Vector);
    c.expect(
        vector.xi_generic_length == 8 && vector.xi_min_length == 4,
        "vector case: length 8 parametric, minimum 4",
    );
    c.expect(
        vector.xi_min_nus == vec![Q::from_int(-1), Q::from_int(2)],
        "vector minimum reached exactly at v in {-1, 2}",
    );
    c.expect(vector.eta_min_length == 8, "eta never beats 8 in the vector case");

    let sym2 = scan_summary(SecondFactor::Sym2);
    c.expect(
        sym2.xi_generic_length == 16 && sym2.xi_min_length == 12,
        "sym2 case: length 16 parametric, minimum 12",
    );
    c.expect(
        sym2.xi_min_nus
            == vec![Q::from_int(-1), Q::from_int(0), Q::from_int(1), Q::from_int(2)],
        "sym2 minimum reached exactly at v in {-1, 0, 1, 2}",
    );
    c.expect(sym2.eta_min_length == 12, "eta reaches the sym2 minimum 12");

    let alt2 = scan_summary(SecondFactor::Alt2);
    c.expect(
        alt2.xi_generic_length == 20 && alt2.xi_min_length == 10,
        "alt2 case: length 20 parametric, minimum 10",
    );
    c.expect(
        alt2.xi_min_nus == vec![Q::from_int(-1), Q::from_int(2)],
        "alt2 minimum reached exactly at v in {-1, 2}",
    );
    c.expect(alt2.eta_min_length == 20, "eta stays at 20 in the alt2 case");

    c.expect(
        vector.xi_min_nus == alt2.xi_min_nus,
        "exactly two parameter values minimize every column",
    );
    c.finish()
}

/// Everything, in a fixed order.
pub fn all_checks() -> Vec<CheckResult> {
    vec![
        check_sigma(),
        check_f0(),
        check_idempotents(),
        check_dft(),
        check_factor_swap(),
        check_membership(),
        check_blocked_classes(),
        check_table(),
    ]
}

pub fn check_by_name(name: &str) -> Option<CheckResult> {
    match name {
        "sigma" => Some(check_sigma()),
        "f0" => Some(check_f0()),
        "idempotents" => Some(check_idempotents()),
        "dft" => Some(check_dft()),
        "factor-swap" => Some(check_factor_swap()),
        "membership" => Some(check_membership()),
        "pieri" => Some(check_blocked_classes()),
        "table" => Some(check_table()),
        _ => None,
    }
}

pub const CHECK_NAMES: [&str; 8] = [
    "sigma",
    "f0",
    "idempotents",
    "dft",
    "factor-swap",
    "membership",
    "pieri",
    "table",
];
