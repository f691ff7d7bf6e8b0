//! The Lie algebra of the determinant-preserving group `G ⊂ GL(V)`.
//!
//! `Lie(G)` is spanned by the multiplication operators `L(b)` for trace-zero
//! `b` together with the inner derivations `[L(x), L(y)]`. Operators are
//! matrices acting on coordinate columns: `(T x)_a = Σ_b T_ab x_b`.

use rayon::prelude::*;
use serde::Serialize;

use crate::comp::CompAlgebra;
use crate::exact::{random_scalar, seeded_rng, Dual, Echelon, ExactMatrix, GaussRational, Scalar, SeedRng};
use crate::jordan::{coord_dim, HermMat};

type G = GaussRational;

/// Where a Lie-algebra generator came from. Indices are coordinate-basis
/// indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Origin {
    /// `L(e1 − e2)`, `L(e2 − e3)`.
    DiagDiff {
        i: usize,
    },
    /// `L(b_k)` for an off-diagonal basis vector.
    Mult {
        k: usize,
    },
    /// `[L(b_i), L(b_j)]`, a derivation.
    Commutator {
        i: usize,
        j: usize,
    },
    Other,
}

impl Origin {
    pub fn is_derivation(self) -> bool {
        matches!(self, Origin::Commutator { .. })
    }

    pub fn label(self) -> String {
        match self {
            Origin::DiagDiff { i } => format!("L(e{}-e{})", i + 1, i + 2),
            Origin::Mult { k } => format!("L(b{k})"),
            Origin::Commutator { i, j } => format!("[L(b{i}),L(b{j})]"),
            Origin::Other => "T".into(),
        }
    }
}

/// A linear operator on the coordinates of `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinOp {
    pub alg: CompAlgebra,
    pub mat: ExactMatrix,
    pub origin: Origin,
}

impl LinOp {
    pub fn new(alg: CompAlgebra, mat: ExactMatrix) -> Self {
        assert_eq!(mat.nrows(), coord_dim(alg));
        assert_eq!(mat.ncols(), coord_dim(alg));
        LinOp {
            alg,
            mat,
            origin: Origin::Other,
        }
    }

    pub fn zero(alg: CompAlgebra) -> Self {
        let n = coord_dim(alg);
        LinOp::new(alg, ExactMatrix::zeros(n, n))
    }

    pub fn identity(alg: CompAlgebra) -> Self {
        LinOp::new(alg, ExactMatrix::identity(coord_dim(alg)))
    }

    pub fn apply<S: Scalar>(&self, x: &HermMat<S>) -> HermMat<S> {
        HermMat::from_coords(self.alg, &self.mat.apply(&x.coords()))
    }

    pub fn compose(&self, rhs: &LinOp) -> LinOp {
        LinOp::new(self.alg, self.mat.mul(&rhs.mat))
    }

    pub fn add(&self, rhs: &LinOp) -> LinOp {
        LinOp::new(self.alg, self.mat.add(&rhs.mat))
    }

    pub fn sub(&self, rhs: &LinOp) -> LinOp {
        LinOp::new(self.alg, self.mat.sub(&rhs.mat))
    }

    pub fn scale(&self, k: &G) -> LinOp {
        LinOp::new(self.alg, self.mat.scale(k))
    }

    /// `[S, T] = ST − TS`.
    pub fn bracket(&self, rhs: &LinOp) -> LinOp {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    /// Adjoint with respect to `<, >`: `T' = Γ⁻¹ Tᵗ Γ` with `Γ` the Gram
    /// matrix.
    pub fn adjoint(&self) -> LinOp {
        let gram = gram_matrix(self.alg);
        let inv = gram.inverse().expect("trace form is nondegenerate");
        LinOp::new(self.alg, inv.mul(&self.mat.transpose()).mul(&gram))
    }

    pub fn label(&self) -> String {
        self.origin.label()
    }
}

/// Matrix of `x ↦ a∙x`.
pub fn lmul_op(a: &HermMat<G>) -> LinOp {
    let alg = a.algebra();
    let n = coord_dim(alg);
    let cols: Vec<Vec<G>> = (0..n).map(|k| a.jmul(&HermMat::basis(alg, k)).coords()).collect();
    let rows = (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect();
    LinOp::new(alg, ExactMatrix::from_dense(rows))
}

/// Gram matrix `Γ_kl = <b_k, b_l>` of the coordinate basis.
pub fn gram_matrix(alg: CompAlgebra) -> ExactMatrix {
    let n = coord_dim(alg);
    let basis: Vec<HermMat<G>> = (0..n).map(|k| HermMat::basis(alg, k)).collect();
    ExactMatrix::from_dense(
        basis
            .iter()
            .map(|x| basis.iter().map(|y| x.inner(y)).collect())
            .collect(),
    )
}

/// Independent generators of `Lie(G)`.
#[derive(Clone, Debug)]
pub struct LieBasis {
    pub alg: CompAlgebra,
    pub ops: Vec<LinOp>,
    span: Echelon,
}

impl LieBasis {
    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    /// Whether `t` lies in the span of the basis.
    pub fn contains(&self, t: &LinOp) -> bool {
        self.span.contains(&t.mat.flatten())
    }

    pub fn derivations(&self) -> impl Iterator<Item = &LinOp> {
        self.ops.iter().filter(|t| t.origin.is_derivation())
    }
}

/// Builds the basis greedily: the `n − 1` operators `L(b)` for a trace-zero
/// basis, then commutators `[L(b_i), L(b_j)]` (`i < j`) in lexicographic
/// order, keeping each one that raises the exact rank.
pub fn lie_basis(alg: CompAlgebra) -> LieBasis {
    let n = coord_dim(alg);
    let l: Vec<LinOp> = (0..n).map(|k| lmul_op(&HermMat::basis(alg, k))).collect();

    let mut candidates: Vec<LinOp> = Vec::new();
    for i in 0..2 {
        let mut op = l[i].sub(&l[i + 1]);
        op.origin = Origin::DiagDiff { i };
        candidates.push(op);
    }
    for (k, op) in l.iter().enumerate().skip(3) {
        candidates.push(LinOp {
            origin: Origin::Mult { k },
            ..op.clone()
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let brackets: Vec<LinOp> = pairs
        .par_iter()
        .map(|&(i, j)| LinOp {
            origin: Origin::Commutator { i, j },
            ..l[i].bracket(&l[j])
        })
        .collect();
    candidates.extend(brackets);

    let mut span = Echelon::new(n * n);
    let mut ops = Vec::new();
    for op in candidates {
        if span.insert(op.mat.flatten()) {
            ops.push(op);
        }
    }
    LieBasis { alg, ops, span }
}

/// `F[a][b][c] = f(b_a, b_b, b_c)` on the coordinate basis.
pub fn trilinear_table(alg: CompAlgebra) -> Vec<Vec<Vec<G>>> {
    let n = coord_dim(alg);
    let basis: Vec<HermMat<G>> = (0..n).map(|k| HermMat::basis(alg, k)).collect();
    let gram_diag: Vec<G> = (0..n).map(|k| basis[k].inner(&basis[k])).collect();
    (0..n)
        .into_par_iter()
        .map(|a| {
            (0..n)
                .map(|b| {
                    // the basis is Γ-orthogonal, so <w, b_c> = Γ_cc w_c
                    let w = basis[a].cross(&basis[b]).coords();
                    (0..n).map(|c| &gram_diag[c] * &w[c]).collect()
                })
                .collect()
        })
        .collect()
}

/// The linear system `f(Tb_i, b_j, b_k) + f(b_i, Tb_j, b_k) + f(b_i, b_j, Tb_k) = 0`
/// for `i ≤ j ≤ k`, in the `n²` unknowns `T_ab` (index `a·n + b`).
pub fn det_annihilator_system(alg: CompAlgebra) -> ExactMatrix {
    let n = coord_dim(alg);
    let f = trilinear_table(alg);
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i..n).flat_map(move |j| (j..n).map(move |k| (i, j, k))))
        .collect();
    let rows: Vec<Vec<(usize, G)>> = triples
        .par_iter()
        .map(|&(i, j, k)| {
            let mut row = Vec::new();
            for a in 0..n {
                for (col, v) in [
                    (a * n + i, &f[a][j][k]),
                    (a * n + j, &f[i][a][k]),
                    (a * n + k, &f[i][j][a]),
                ] {
                    if !v.is_zero() {
                        row.push((col, v.clone()));
                    }
                }
            }
            row
        })
        .collect();
    ExactMatrix::from_sparse_rows(n * n, rows)
}

/// Dimension of `{T : f(Tx, x, x) = 0 for all x}`.
pub fn det_annihilator_dim(alg: CompAlgebra) -> usize {
    det_annihilator_system(alg).kernel_dim()
}

/// Outcome of a randomized exact identity check.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub passed: bool,
    pub points: usize,
    /// A failing input tuple and the index of the offending output.
    pub witness: Option<(Vec<HermMat<G>>, usize)>,
}

impl Verdict {
    fn pass(points: usize) -> Self {
        Verdict {
            passed: true,
            points,
            witness: None,
        }
    }
}

/// A polynomial map `pV → ℂ^m` evaluated over first-order dual numbers.
pub type DualEvaluator<'a> = dyn Fn(&[HermMat<Dual<G>>]) -> Vec<Dual<G>> + Sync + 'a;

/// Random tuple of `arity` points of `V`.
pub fn random_tuple(alg: CompAlgebra, arity: usize, rng: &mut SeedRng, height: u64) -> Vec<HermMat<G>> {
    (0..arity)
        .map(|_| {
            HermMat::from_coords(
                alg,
                &(0..coord_dim(alg))
                    .map(|_| random_scalar(rng, height))
                    .collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// Checks that every output of `eval` has zero derivative along
/// `(Tx_1, …, Tx_p)` at `points` random tuples.
pub fn directional_invariance(
    eval: &DualEvaluator<'_>,
    arity: usize,
    t: &LinOp,
    points: usize,
    seed: u64,
    height: u64,
) -> Verdict {
    let mut rng = seeded_rng(seed);
    for _ in 0..points {
        let xs = random_tuple(t.alg, arity, &mut rng, height);
        if let Some(idx) = derivative_nonzero(eval, t, &xs) {
            return Verdict {
                passed: false,
                points,
                witness: Some((xs, idx)),
            };
        }
    }
    Verdict::pass(points)
}

/// Index of the first output with nonzero derivative along `T`, if any.
pub fn derivative_nonzero(eval: &DualEvaluator<'_>, t: &LinOp, xs: &[HermMat<G>]) -> Option<usize> {
    let lifted: Vec<HermMat<Dual<G>>> = xs
        .iter()
        .map(|x| {
            let tx = t.apply(x).coords();
            let c: Vec<Dual<G>> = x.coords().into_iter().zip(tx).map(|(v, d)| Dual::new(v, d)).collect();
            HermMat::from_coords(t.alg, &c)
        })
        .collect();
    eval(&lifted).iter().position(|v| !v.deriv.is_zero())
}

/// Runs [`directional_invariance`] for every basis element in parallel.
/// Results are in basis order.
pub fn invariance_against_basis(
    eval: &DualEvaluator<'_>,
    arity: usize,
    basis: &LieBasis,
    points: usize,
    seed: u64,
    height: u64,
) -> Vec<Verdict> {
    basis
        .ops
        .par_iter()
        .enumerate()
        .map(|(k, t)| directional_invariance(eval, arity, t, points, seed.wrapping_add(k as u64), height))
        .collect()
}

/// Checks `x × Tx = −T'·n(x)`, the differentiated form of
/// `n(g·x) = (g⁻¹)' n(x)`.
pub fn sharp_equivariance_check(t: &LinOp, points: usize, seed: u64, height: u64) -> Verdict {
    let adj = t.adjoint();
    let mut rng = seeded_rng(seed);
    for _ in 0..points {
        let x = random_tuple(t.alg, 1, &mut rng, height).remove(0);
        let lhs = x.cross(&t.apply(&x));
        let rhs = adj.apply(&x.sharp()).neg();
        if lhs != rhs {
            return Verdict {
                passed: false,
                points,
                witness: Some((vec![x], 0)),
            };
        }
    }
    Verdict::pass(points)
}

#[derive(Serialize)]
struct DumpOp {
    label: String,
    origin: Origin,
    /// `(row, col, value)` triplets.
    entries: Vec<(usize, usize, String)>,
}

#[derive(Serialize)]
struct Dump {
    algebra: CompAlgebra,
    coord_dim: usize,
    dim: usize,
    generators: Vec<DumpOp>,
}

/// JSON dump of a basis: labels plus sparse matrix triplets.
pub fn dump_json(basis: &LieBasis) -> serde_json::Value {
    let generators = basis
        .ops
        .iter()
        .map(|t| DumpOp {
            label: t.label(),
            origin: t.origin,
            entries: (0..t.mat.nrows())
                .flat_map(|r| t.mat.row(r).iter().map(move |(c, v)| (r, *c, v.to_string())))
                .collect(),
        })
        .collect();
    serde_json::to_value(Dump {
        algebra: basis.alg,
        coord_dim: coord_dim(basis.alg),
        dim: basis.dim(),
        generators,
    })
    .expect("dump serializes")
}
