//! A discrete Fourier transform for S_r built on Young's natural
//! representation: one matrix block per partition of r, with the inverse
//! transform given by the trace formula
//! `a(p) = (1/r!) Σ_λ d_λ trace(D_λ(p^{-1}) A_λ)`.
//!
//! The representation matrices come from the Specht module on standard
//! polytabloids (standard tableaux ordered by row-reading word).
//! `natural_rep` returns the inverse-transpose of the left-action Specht
//! matrix; that orientation is the one under which the inverse transform of
//! the matrix units `X_ν` and `Y` reproduces the idempotents `ξ_ν` and `η`
//! coefficient for coefficient, and the golden tests pin it.

use crate::linalg::Mat;
use crate::perm::{partitions, standard_tableaux, Partition, Permutation, YoungTableau};
use crate::rational::RationalFunction;
use crate::ring::{vertical_group, GroupRingElement};
use std::collections::BTreeMap;
use std::fmt;

/// One irreducible block: a d_λ × d_λ matrix over Q(v).
#[derive(Clone, PartialEq, Eq)]
pub struct IrrepMatrix {
    pub partition: Partition,
    pub mat: Mat,
}

impl IrrepMatrix {
    pub fn dimension(&self) -> usize {
        self.mat.nrows()
    }
}

impl fmt::Display for IrrepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "block {}:", self.partition)?;
        write!(f, "{}", self.mat)
    }
}

/// The full block-diagonal image of a group ring element: one block per
/// partition of r.
#[derive(Clone, PartialEq, Eq)]
pub struct FourierImage {
    degree: usize,
    blocks: BTreeMap<Partition, Mat>,
}

impl FourierImage {
    pub fn zero(degree: usize) -> Self {
        let blocks = partitions(degree)
            .into_iter()
            .map(|l| {
                let d = l.hook_dimension();
                (l, Mat::zeros(d, d))
            })
            .collect();
        FourierImage { degree, blocks }
    }

    pub fn identity(degree: usize) -> Self {
        let blocks = partitions(degree)
            .into_iter()
            .map(|l| {
                let d = l.hook_dimension();
                (l, Mat::identity(d))
            })
            .collect();
        FourierImage { degree, blocks }
    }

    /// Zero everywhere except one block.
    pub fn from_single_block(degree: usize, partition: &Partition, mat: Mat) -> Self {
        assert_eq!(partition.sum(), degree);
        let d = partition.hook_dimension();
        assert_eq!((mat.nrows(), mat.ncols()), (d, d), "block size must be d_λ");
        let mut image = FourierImage::zero(degree);
        image.blocks.insert(partition.clone(), mat);
        image
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn block(&self, partition: &Partition) -> &Mat {
        &self.blocks[partition]
    }

    pub fn set_block(&mut self, partition: &Partition, mat: Mat) {
        let d = partition.hook_dimension();
        assert_eq!((mat.nrows(), mat.ncols()), (d, d));
        self.blocks.insert(partition.clone(), mat);
    }

    /// Partitions in display order: (r) first, (1^r) last.
    pub fn block_order(&self) -> Vec<Partition> {
        partitions(self.degree)
    }

    /// Blockwise product.
    pub fn mul(&self, rhs: &FourierImage) -> FourierImage {
        assert_eq!(self.degree, rhs.degree);
        let blocks = self
            .blocks
            .iter()
            .map(|(l, m)| (l.clone(), m * rhs.block(l)))
            .collect();
        FourierImage {
            degree: self.degree,
            blocks,
        }
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        for l in self.block_order() {
            let m = self.block(&l);
            out.push_str(&format!("A_{{{l}}} = \\begin{{pmatrix}}"));
            for i in 0..m.nrows() {
                if i > 0 {
                    out.push_str(" \\\\ ");
                }
                for j in 0..m.ncols() {
                    if j > 0 {
                        out.push_str(" & ");
                    }
                    out.push_str(&m.get(i, j).to_latex());
                }
            }
            out.push_str("\\end{pmatrix}\n");
        }
        out
    }
}

impl fmt::Display for FourierImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.block_order() {
            writeln!(f, "block {l}:")?;
            write!(f, "{}", self.block(&l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FourierImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical key of a row tabloid: rows with entries sorted.
fn tabloid_key(t: &YoungTableau) -> Vec<Vec<usize>> {
    t.rows()
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.sort_unstable();
            r
        })
        .collect()
}

/// The polytabloid `e_t = Σ_{q ∈ V_t} sign(q) {q·t}` as a sparse tabloid
/// vector.
fn polytabloid(t: &YoungTableau) -> BTreeMap<Vec<Vec<usize>>, i64> {
    let mut vec: BTreeMap<Vec<Vec<usize>>, i64> = BTreeMap::new();
    for q in vertical_group(t) {
        *vec.entry(tabloid_key(&t.relabel(&q))).or_insert(0) += q.sign();
    }
    vec.retain(|_, c| *c != 0);
    vec
}

/// The Specht module of one frame with the left-action matrix of every
/// group element precomputed on the standard polytabloid basis.
struct SpechtModule {
    dimension: usize,
    matrices: BTreeMap<Permutation, Mat>,
}

impl SpechtModule {
    fn new(frame: &Partition) -> Self {
        let r = frame.sum();
        let basis_tableaux = standard_tableaux(frame);
        let d = basis_tableaux.len();
        let basis: Vec<_> = basis_tableaux.iter().map(polytabloid).collect();
        let all = Permutation::all(r);
        let images: Vec<Vec<_>> = all
            .iter()
            .map(|p| basis_tableaux.iter().map(|t| polytabloid(&t.relabel(p))).collect())
            .collect();

        let mut tabloid_index: BTreeMap<Vec<Vec<usize>>, usize> = BTreeMap::new();
        for v in basis.iter().chain(images.iter().flatten()) {
            for key in v.keys() {
                let next = tabloid_index.len();
                tabloid_index.entry(key.clone()).or_insert(next);
            }
        }
        let n = tabloid_index.len();
        let to_column = |v: &BTreeMap<Vec<Vec<usize>>, i64>| -> Vec<RationalFunction> {
            let mut col = vec![RationalFunction::zero(); n];
            for (key, &c) in v {
                col[tabloid_index[key]] = RationalFunction::from_int(c);
            }
            col
        };

        let mut basis_mat = Mat::zeros(n, d);
        for (j, v) in basis.iter().enumerate() {
            for (i, c) in to_column(v).into_iter().enumerate() {
                basis_mat.set(i, j, c);
            }
        }
        // standard polytabloids are independent, so the Gram matrix is
        // invertible and the consistent system has the normal-equation
        // solution
        let basis_t = basis_mat.transpose();
        let gram = &basis_t * &basis_mat;

        let mut matrices = BTreeMap::new();
        for (p, row) in all.iter().zip(&images) {
            let mut m = Mat::zeros(d, d);
            for (j, v) in row.iter().enumerate() {
                let mut rhs_col = Mat::zeros(n, 1);
                for (i, c) in to_column(v).into_iter().enumerate() {
                    rhs_col.set(i, 0, c);
                }
                let rhs = &basis_t * &rhs_col;
                let x = gram
                    .solve(&(0..d).map(|i| rhs.get(i, 0).clone()).collect::<Vec<_>>())
                    .expect("Gram matrix of independent columns is invertible");
                for (i, c) in x.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            matrices.insert(p.clone(), m);
        }
        SpechtModule {
            dimension: d,
            matrices,
        }
    }
}

/// A reusable transform context for one degree.
pub struct Dft {
    degree: usize,
    modules: BTreeMap<Partition, SpechtModule>,
}

impl Dft {
    pub fn new(degree: usize) -> Self {
        let modules = partitions(degree)
            .into_iter()
            .map(|l| {
                let m = SpechtModule::new(&l);
                (l, m)
            })
            .collect();
        Dft { degree, modules }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The natural-representation matrix `D_λ(p)`.
    pub fn natural_rep(&self, partition: &Partition, p: &Permutation) -> Mat {
        assert_eq!(partition.sum(), p.degree(), "partition and permutation degree differ");
        self.modules[partition].matrices[&p.inverse()].transpose()
    }

    /// `D(a) = Σ_p a(p) D(p)` blockwise.
    pub fn forward(&self, a: &GroupRingElement) -> FourierImage {
        assert_eq!(a.degree(), self.degree);
        let mut image = FourierImage::zero(self.degree);
        for (l, module) in &self.modules {
            let mut block = Mat::zeros(module.dimension, module.dimension);
            for (p, c) in a.terms() {
                block = &block + &self.natural_rep(l, p).scale(c);
            }
            image.set_block(l, block);
        }
        image
    }

    /// The trace inversion formula applied blockwise.
    pub fn inverse(&self, image: &FourierImage) -> GroupRingElement {
        assert_eq!(image.degree(), self.degree);
        let mut factorial = 1i64;
        for k in 1..=self.degree {
            factorial *= k as i64;
        }
        let scale = RationalFunction::from_ratio(1, factorial);
        let mut out = GroupRingElement::zero(self.degree);
        for p in Permutation::all(self.degree) {
            let pinv = p.inverse();
            let mut acc = RationalFunction::zero();
            for l in self.modules.keys() {
                let d = RationalFunction::from_int(l.hook_dimension() as i64);
                let tr = (&self.natural_rep(l, &pinv) * image.block(l)).trace();
                acc = &acc + &(&d * &tr);
            }
            out.add_term(p, &acc * &scale);
        }
        out
    }

    /// The centrally primitive idempotent of a block: the inverse transform
    /// of (identity in block λ, zeros elsewhere).
    pub fn central_idempotent(&self, partition: &Partition) -> GroupRingElement {
        let d = partition.hook_dimension();
        self.inverse(&FourierImage::from_single_block(
            self.degree,
            partition,
            Mat::identity(d),
        ))
    }
}

/// One-shot wrappers around a freshly built context.
pub fn natural_rep(partition: &Partition, p: &Permutation) -> Mat {
    Dft::new(p.degree()).natural_rep(partition, p)
}

pub fn forward_dft(a: &GroupRingElement) -> FourierImage {
    Dft::new(a.degree()).forward(a)
}

pub fn inverse_dft(image: &FourierImage) -> GroupRingElement {
    Dft::new(image.degree()).inverse(image)
}

pub fn central_idempotent(partition: &Partition, degree: usize) -> GroupRingElement {
    assert_eq!(partition.sum(), degree);
    Dft::new(degree).central_idempotent(partition)
}

/// The matrix unit family `X_ν = [[1,0],[ν,0]]` generating the minimal
/// right ideals of the 2×2 block.
pub fn x_nu_block(nu: &RationalFunction) -> Mat {
    let mut m = Mat::zeros(2, 2);
    m.set(0, 0, RationalFunction::one());
    m.set(1, 0, nu.clone());
    m
}

/// The remaining matrix unit `Y = [[0,0],[0,1]]`.
pub fn y_block() -> Mat {
    let mut m = Mat::zeros(2, 2);
    m.set(1, 1, RationalFunction::one());
    m
}
