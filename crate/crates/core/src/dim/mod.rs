//! Dimensions of spaces of invariants of `pV`.
//!
//! A degree-`d` polynomial is invariant under the connected group iff every
//! Lie-algebra element `T` kills it as the derivation
//! `Σ_k Σ_a (T x_k)_a ∂/∂x_{k,a}`. These derivations preserve the degree in
//! each copy separately, so the stacked system splits into multidegree
//! blocks whose kernels add up.

mod poly;

pub use poly::{binomial, monomial_count, Mono, MonomialBasis, Poly, PolyVector};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::comp::CompAlgebra;
use crate::error::{Error, Result};
use crate::exact::{random_int_scalar, random_scalar, seeded_rng, Echelon, ExactMatrix, GaussRational};
use crate::jordan::{coord_dim, HermMat};
use crate::lie::{lie_basis, LinOp};

type G = GaussRational;

/// Default cap on the number of monomials of a dimension computation.
pub const DEFAULT_MONOMIAL_CAP: usize = 20_000;

/// Which group the invariants are taken for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    /// The full group; for `V1` this adds the outer transpose.
    G,
    /// The identity component.
    Go,
}

impl std::str::FromStr for Group {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "G" | "g" => Ok(Group::G),
            "Go" | "G_o" | "go" | "g_o" | "G0" => Ok(Group::Go),
            other => Err(format!("unknown group {other:?} (expected G or Go)")),
        }
    }
}

/// Coefficients of `D_T(m)` for a dense monomial `m` in `p` copies of `n`
/// coordinates: `Σ_{k,a} m_{k,a} Σ_b T_ab x^{m − e_{k,a} + e_{k,b}}`.
fn derive_monomial(t: &LinOp, n: usize, m: &[u8]) -> Vec<(Vec<u8>, G)> {
    let mut out: Vec<(Vec<u8>, G)> = Vec::new();
    for (slot, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let (copy, a) = (slot / n, slot % n);
        let mult = G::from_int(e as i64);
        for (b, tab) in t.mat.row(a) {
            let mut target = m.to_vec();
            target[slot] -= 1;
            target[copy * n + b] += 1;
            out.push((target, &mult * tab));
        }
    }
    out
}

/// Matrix of the derivation induced by `T` on a set of monomials closed
/// under it (rows: output monomials, columns: input monomials).
fn action_on(t: &LinOp, n: usize, basis: &MonomialBasis) -> ExactMatrix {
    let cols: Vec<Vec<(usize, G)>> = basis
        .monomials
        .iter()
        .map(|m| {
            derive_monomial(t, n, m)
                .into_iter()
                .map(|(target, c)| (basis.index_of(&target).expect("derivation stays in the block"), c))
                .collect()
        })
        .collect();
    ExactMatrix::from_sparse_rows(basis.len(), cols).transpose()
}

/// Matrix of `Σ_k (T x_k)·∂/∂x_k` on degree-`d` polynomials in `p` copies.
pub fn lie_action_matrix(t: &LinOp, p: usize, degree: usize, cap: usize) -> Result<ExactMatrix> {
    let n = coord_dim(t.alg);
    let size = monomial_count(n * p, degree);
    if size > cap {
        return Err(Error::SizeOverflow { size, cap });
    }
    Ok(action_on(t, n, &MonomialBasis::new(n * p, degree)))
}

/// Compositions of `d` into `p` nonnegative parts.
fn compositions(d: usize, p: usize) -> Vec<Vec<usize>> {
    if p == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|first| {
            compositions(d - first, p - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Monomials of multidegree `degs` (one degree per copy of `n` coordinates).
fn block_basis(n: usize, degs: &[usize]) -> MonomialBasis {
    let mut monos: Vec<Vec<u8>> = vec![Vec::new()];
    for &d in degs {
        let part = MonomialBasis::new(n, d);
        monos = monos
            .iter()
            .flat_map(|prefix| {
                part.monomials.iter().map(move |m| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(m);
                    v
                })
            })
            .collect();
    }
    MonomialBasis::from_monomials(n * degs.len(), degs.iter().sum(), monos)
}

/// Coordinates negated by the outer transpose of `V1`: the `f_1`-components
/// of `p`, `q`, `r`.
fn outer_sign_coords(alg: CompAlgebra) -> Vec<usize> {
    debug_assert_eq!(alg, CompAlgebra::C);
    vec![4, 6, 8]
}

/// Kernel dimension of one multidegree block.
fn block_kernel_dim(ops: &[LinOp], n: usize, degs: &[usize], outer: Option<&[usize]>) -> usize {
    let basis = block_basis(n, degs);
    let blocks: Vec<ExactMatrix> = ops.par_iter().map(|t| action_on(t, n, &basis)).collect();
    let mut ech = Echelon::new(basis.len());
    if let Some(neg) = outer {
        // The transpose is diagonal on monomials: invariance kills every
        // monomial of odd total degree in the negated coordinates.
        for (i, m) in basis.monomials.iter().enumerate() {
            let odd = (0..degs.len())
                .map(|k| neg.iter().map(|&c| m[k * n + c] as usize).sum::<usize>())
                .sum::<usize>()
                % 2
                == 1;
            if odd {
                ech.insert(vec![(i, G::one())]);
            }
        }
    }
    // Sparse rows first, as in ExactMatrix::rank.
    let mut rows: Vec<&Vec<(usize, G)>> = blocks
        .iter()
        .flat_map(|b| b.rows_iter())
        .filter(|r| !r.is_empty())
        .collect();
    rows.sort_by_key(|r| r.len());
    for r in rows {
        if ech.rank() == basis.len() {
            break;
        }
        ech.insert(r.clone());
    }
    basis.len() - ech.rank()
}

/// Dimension of the degree-`d` invariants of `p` copies of `V`.
///
/// For `V1` with [`Group::G`] the outer transpose adds its constraints;
/// every other case is the Lie-algebra kernel.
pub fn invariant_dimension(alg: CompAlgebra, p: usize, degree: usize, group: Group, cap: usize) -> Result<usize> {
    let n = coord_dim(alg);
    let size = monomial_count(n * p, degree);
    if size > cap {
        return Err(Error::SizeOverflow { size, cap });
    }
    let ops = lie_basis(alg).ops;
    let outer = (alg == CompAlgebra::C && group == Group::G).then(|| outer_sign_coords(alg));
    Ok(compositions(degree, p)
        .iter()
        .map(|degs| block_kernel_dim(&ops, n, degs, outer.as_deref()))
        .sum())
}

/// Which generator family [`product_rank`] multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// The four generators on `2V`.
    P2,
    /// `f1 … f11` on `3V`.
    P3,
}

impl Family {
    pub fn arity(self) -> usize {
        match self {
            Family::P2 => 2,
            Family::P3 => 3,
        }
    }

    pub fn degrees(self) -> Vec<usize> {
        match self {
            Family::P2 => vec![3; 4],
            Family::P3 => {
                let mut d = vec![3; 10];
                d.push(6);
                d
            }
        }
    }

    fn values(self, t: &[HermMat<G>]) -> Vec<G> {
        match self {
            Family::P2 => crate::inv::gens_p2(&t[0], &t[1]).to_vec(),
            Family::P3 => crate::inv::gens_p3(&t[0], &t[1], &t[2]).to_vec(),
        }
    }
}

/// Exponent vectors `e` with `Σ e_i · degrees_i = degree`.
pub fn weighted_monomials(degrees: &[usize], degree: usize) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: usize, degrees: &[usize], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in (0..=left / degrees[i]).rev() {
            cur.push(e as u32);
            rec(i + 1, left - e * degrees[i], degrees, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, degree, degrees, &mut Vec::new(), &mut out);
    out
}

/// Exact rank of the matrix of all degree-`d` products of the family's
/// generators evaluated at `n_points` random tuples of the given height.
pub fn product_rank(family: Family, alg: CompAlgebra, degree: usize, n_points: usize, seed: u64, height: u64) -> usize {
    let monos = weighted_monomials(&family.degrees(), degree);
    let mut rng = seeded_rng(seed);
    // Gaussian-integer points keep the evaluation matrix free of denominators
    let n = coord_dim(alg);
    let points: Vec<Vec<HermMat<G>>> = (0..n_points)
        .map(|_| {
            (0..family.arity())
                .map(|_| {
                    HermMat::from_coords(
                        alg,
                        &(0..n).map(|_| random_int_scalar(&mut rng, height)).collect::<Vec<_>>(),
                    )
                })
                .collect()
        })
        .collect();
    let rows: Vec<Vec<G>> = points
        .par_iter()
        .map(|t| {
            let vals = family.values(t);
            monos
                .iter()
                .map(|e| {
                    e.iter()
                        .zip(&vals)
                        .fold(G::one(), |acc, (&k, v)| (0..k).fold(acc, |a, _| &a * v))
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_dense(rows).rank_fraction_free()
}

/// Power-series coefficients of `(1 + t⁹) / ((1 − t³)¹⁰ (1 − t⁶))` up to
/// `t^max_degree`.
pub fn poincare_coeffs(max_degree: usize) -> Vec<u128> {
    let len = max_degree + 1;
    let mut series = vec![0u128; len];
    series[0] = 1;
    if len > 9 {
        series[9] = 1;
    }
    // dividing by (1 − t^k) is a running sum with stride k
    let mut divide = |k: usize| {
        for i in k..len {
            series[i] += series[i - k];
        }
    };
    for _ in 0..10 {
        divide(3);
    }
    divide(6);
    series
}

/// Coefficient vectors of `f1 … f10` (degree 3) on `3V`, symbolically.
pub fn p3_cubic_vectors(alg: CompAlgebra) -> (MonomialBasis, Vec<PolyVector>) {
    let n = coord_dim(alg);
    let vars: Vec<HermMat<Poly>> = (0..3)
        .map(|k| HermMat::from_coords(alg, &(0..n).map(|a| Poly::var(k * n + a)).collect::<Vec<_>>()))
        .collect();
    let f = crate::inv::gens_p3(&vars[0], &vars[1], &vars[2]);
    let basis = MonomialBasis::new(3 * n, 3);
    let vecs = f[..10].iter().map(|p| basis.vector_of(p)).collect();
    (basis, vecs)
}

/// Random-point sanity check that a coefficient vector is killed by `T`.
pub fn annihilates(t: &LinOp, p: usize, basis: &MonomialBasis, v: &PolyVector) -> bool {
    let n = coord_dim(t.alg);
    let m = action_on(t, n, basis);
    let image = m.apply(&v.coeffs);
    let _ = p;
    image.iter().all(G::is_zero)
}

/// Whether a random evaluation separates `v` from zero; helper for tests
/// of the monomial expansion.
pub fn eval_random(basis: &MonomialBasis, v: &PolyVector, seed: u64) -> G {
    let mut rng = seeded_rng(seed);
    let pt: Vec<G> = (0..basis.n_vars).map(|_| random_scalar(&mut rng, 100)).collect();
    v.eval(basis, &pt)
}
