//! Invariant polynomials on `pV` as evaluators over any [`Scalar`].
//!
//! Generator indexing for `p = 3` is frozen:
//!
//! | f1 | f2 | f3 | f4 | f5 | f6 | f7 | f8 | f9 | f10 | f11 |
//! |----|----|----|----|----|----|----|----|----|-----|-----|
//! | f(x,x,x) | f(y,y,y) | f(z,z,z) | f(x,x,y) | f(x,x,z) | f(y,y,x) | f(y,y,z) | f(z,z,x) | f(z,z,y) | f(x,y,z) | f(x×x, y×y, z×z) |

use crate::comp::CompAlgebra;
use crate::exact::{seeded_rng, Dual, ExactMatrix, GaussRational, Scalar};
use crate::jordan::{coord_dim, HermMat};
use crate::lie::random_tuple;
use crate::models::{Mat3, MatEntry};

type G = GaussRational;

/// `(f(x,x,x), f(y,y,y), f(x,x,y), f(y,y,x))`.
pub fn gens_p2<S: Scalar>(x: &HermMat<S>, y: &HermMat<S>) -> [S; 4] {
    let (cxx, cyy) = (x.cross(x), y.cross(y));
    [cxx.inner(x), cyy.inner(y), cxx.inner(y), cyy.inner(x)]
}

/// `f1 … f11`, in the order of the module table.
pub fn gens_p3<S: Scalar>(x: &HermMat<S>, y: &HermMat<S>, z: &HermMat<S>) -> [S; 11] {
    let (cxx, cyy, czz) = (x.cross(x), y.cross(y), z.cross(z));
    [
        cxx.inner(x),
        cyy.inner(y),
        czz.inner(z),
        cxx.inner(y),
        cxx.inner(z),
        cyy.inner(x),
        cyy.inner(z),
        czz.inner(x),
        czz.inner(y),
        x.cross(y).inner(z),
        cxx.cross(&cyy).inner(&czz),
    ]
}

/// `f̃11 = f11 − ⅔(f4 f9 + f5 f7 + f6 f8) + ⅔ f10²`, from precomputed values.
pub fn f11_tilde_from<S: Scalar>(f: &[S; 11]) -> S {
    let two_thirds = S::from_frac(2, 3);
    let mixed = f[3].times(&f[8]).plus(&f[4].times(&f[6])).plus(&f[5].times(&f[7]));
    f[10]
        .minus(&two_thirds.times(&mixed))
        .plus(&two_thirds.times(&f[9].times(&f[9])))
}

pub fn f11_tilde<S: Scalar>(x: &HermMat<S>, y: &HermMat<S>, z: &HermMat<S>) -> S {
    f11_tilde_from(&gens_p3(x, y, z))
}

/// Coefficients of `det(a x + b y)` or `det(a x + b y + c z)`.
///
/// Binary order: `a³, a²b, ab², b³`. Ternary order (lex): `a³, a²b, a²c,
/// ab², abc, ac², b³, b²c, bc², c³`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicFormCoeffs<S> {
    pub coeffs: Vec<S>,
}

/// Exponent vectors matching [`CubicFormCoeffs`] positions.
pub const BINARY_MONOMIALS: [[u32; 2]; 4] = [[3, 0], [2, 1], [1, 2], [0, 3]];
pub const TERNARY_MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

fn pow<S: Scalar>(x: &S, k: u32) -> S {
    (0..k).fold(S::one(), |acc, _| acc.times(x))
}

impl<S: Scalar> CubicFormCoeffs<S> {
    pub fn is_binary(&self) -> bool {
        self.coeffs.len() == 4
    }

    /// Evaluates at `(a, b)` or `(a, b, c)`.
    pub fn eval(&self, vars: &[S]) -> S {
        if self.is_binary() {
            assert_eq!(vars.len(), 2);
            BINARY_MONOMIALS
                .iter()
                .zip(&self.coeffs)
                .fold(S::zero(), |acc, (e, c)| {
                    acc.plus(&c.times(&pow(&vars[0], e[0])).times(&pow(&vars[1], e[1])))
                })
        } else {
            assert_eq!(vars.len(), 3);
            TERNARY_MONOMIALS
                .iter()
                .zip(&self.coeffs)
                .fold(S::zero(), |acc, (e, c)| {
                    acc.plus(
                        &c.times(&pow(&vars[0], e[0]))
                            .times(&pow(&vars[1], e[1]))
                            .times(&pow(&vars[2], e[2])),
                    )
                })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }
}

/// Binary form `det(a x + b y)` from the four `p = 2` generators.
pub fn chi_p2_from<S: Scalar>(f: &[S; 4]) -> CubicFormCoeffs<S> {
    let (sixth, half) = (S::from_frac(1, 6), S::from_frac(1, 2));
    CubicFormCoeffs {
        coeffs: vec![
            f[0].times(&sixth),
            f[2].times(&half),
            f[3].times(&half),
            f[1].times(&sixth),
        ],
    }
}

/// Ternary form `det(a x + b y + c z)` from `f1 … f10`.
pub fn chi_p3_from<S: Scalar>(f: &[S; 11]) -> CubicFormCoeffs<S> {
    let (sixth, half) = (S::from_frac(1, 6), S::from_frac(1, 2));
    CubicFormCoeffs {
        coeffs: vec![
            f[0].times(&sixth),
            f[3].times(&half),
            f[4].times(&half),
            f[5].times(&half),
            f[9].clone(),
            f[7].times(&half),
            f[1].times(&sixth),
            f[6].times(&half),
            f[8].times(&half),
            f[2].times(&sixth),
        ],
    }
}

/// `χ` of a pair or triple.
pub fn chi<S: Scalar>(tuple: &[HermMat<S>]) -> CubicFormCoeffs<S> {
    match tuple {
        [x, y] => chi_p2_from(&gens_p2(x, y)),
        [x, y, z] => chi_p3_from(&gens_p3(x, y, z)),
        _ => panic!("chi needs 2 or 3 elements, got {}", tuple.len()),
    }
}

/// `P(x, y, z) = tr(n(x) z n(y) x n(z) y)` in the `Mat(3)` model, with `n`
/// the classical adjugate.
pub fn p_invariant<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, z: &Mat3<S>) -> S {
    x.adjugate()
        .mul(z)
        .mul(&y.adjugate())
        .mul(x)
        .mul(&z.adjugate())
        .mul(y)
        .trace()
}

/// `Σ_{σ ∈ S5} ε(σ) tr(x_σ(1) ⋯ x_σ(5))` with the reduced trace.
///
/// Products are built left to right over subsets: appending `x_k` after the
/// set `U` adds `#{u ∈ U : u > k}` inversions.
pub fn alt5<E: MatEntry>(xs: &[Mat3<E>; 5]) -> E::Base {
    let mut partial: Vec<Option<Mat3<E>>> = vec![None; 32];
    partial[0] = Some(Mat3::identity());
    for used in 0..32usize {
        let Some(acc) = partial[used].clone() else { continue };
        for (k, xk) in xs.iter().enumerate() {
            if used & (1 << k) != 0 {
                continue;
            }
            let inversions = (used >> (k + 1)).count_ones();
            let mut term = acc.mul(xk);
            if inversions % 2 == 1 {
                term = term.map(E::neg);
            }
            let slot = &mut partial[used | (1 << k)];
            *slot = Some(match slot.take() {
                Some(prev) => prev.add(&term),
                None => term,
            });
        }
    }
    partial[31].as_ref().expect("full subset reached").reduced_trace()
}

/// The 120-term definition of [`alt5`], for cross-checking.
pub fn alt5_naive<E: MatEntry>(xs: &[Mat3<E>; 5]) -> E::Base {
    let mut total = <E::Base as Scalar>::zero();
    let mut perm = [0usize, 1, 2, 3, 4];
    fn permutations(k: usize, perm: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
        if k == 5 {
            out.push(*perm);
            return;
        }
        for i in k..5 {
            perm.swap(k, i);
            permutations(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    let mut all = Vec::new();
    permutations(0, &mut perm, &mut all);
    for p in all {
        let inv = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let prod = p.iter().fold(Mat3::identity(), |acc: Mat3<E>, &k| acc.mul(&xs[k]));
        let tr = prod.reduced_trace();
        total = if inv % 2 == 0 {
            total.plus(&tr)
        } else {
            total.minus(&tr)
        };
    }
    total
}

/// `f1 … f11` over dual numbers, as a [`crate::lie::DualEvaluator`].
pub fn p3_dual(xs: &[HermMat<Dual<G>>]) -> Vec<Dual<G>> {
    gens_p3(&xs[0], &xs[1], &xs[2]).to_vec()
}

pub fn p2_dual(xs: &[HermMat<Dual<G>>]) -> Vec<Dual<G>> {
    gens_p2(&xs[0], &xs[1]).to_vec()
}

/// Exact Jacobian matrix (`m × p·n`) of a generator family at a point.
pub fn jacobian(eval: &crate::lie::DualEvaluator<'_>, point: &[HermMat<G>]) -> ExactMatrix {
    let alg = point[0].algebra();
    let n = coord_dim(alg);
    let mut cols: Vec<Vec<G>> = Vec::with_capacity(point.len() * n);
    for slot in 0..point.len() {
        for k in 0..n {
            let lifted: Vec<HermMat<Dual<G>>> = point
                .iter()
                .enumerate()
                .map(|(s, x)| {
                    let c: Vec<Dual<G>> = x
                        .coords()
                        .into_iter()
                        .enumerate()
                        .map(|(j, v)| Dual::new(v, if s == slot && j == k { G::one() } else { G::zero() }))
                        .collect();
                    HermMat::from_coords(alg, &c)
                })
                .collect();
            cols.push(eval(&lifted).into_iter().map(|d| d.deriv).collect());
        }
    }
    let m = cols[0].len();
    ExactMatrix::from_dense((0..m).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())
}

/// Rank of the Jacobian of the `p = 2` (`copies = 2`) or `p = 3` generators
/// at a random point.
pub fn jacobian_rank(alg: CompAlgebra, copies: usize, seed: u64, height: u64) -> usize {
    let mut rng = seeded_rng(seed);
    let point = random_tuple(alg, copies, &mut rng, height);
    match copies {
        2 => jacobian(&p2_dual, &point).rank(),
        3 => jacobian(&p3_dual, &point).rank(),
        _ => panic!("generators are defined for 2 or 3 copies"),
    }
}
