//! Machine-precision constructions of tuples with prescribed `χ` (and
//! `f̃11`). Nothing here feeds back into the exact checks; every result
//! carries a residual recomputed from scratch.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::comp::{CompAlgebra, CompElem};
use crate::error::{Error, Result};
use crate::inv::{chi, f11_tilde};
use crate::jordan::HermMat;
use crate::models::{split_iso_inv, Mat3};

type C = Complex64;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// `ζ = exp(2πi/3)`.
pub fn zeta() -> C {
    C::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

/// The three complex cube roots of `z`, principal root first.
pub fn cube_roots(z: C) -> [C; 3] {
    let w = if z == C::new(0.0, 0.0) { z } else { z.powf(1.0 / 3.0) };
    let zt = zeta();
    [w, w * zt, w * zt * zt]
}

/// Roots of `a t² + b t + c` (`a ≠ 0`), cancellation-free.
pub fn quadratic_roots(a: C, b: C, c: C) -> [C; 2] {
    let disc = (b * b - 4.0 * a * c).sqrt();
    // pick the sign that avoids cancellation in −b ± √disc
    let s = if (b.conj() * disc).re >= 0.0 { disc } else { -disc };
    let q = -(b + s) / 2.0;
    if q.norm() == 0.0 {
        return [C::new(0.0, 0.0), C::new(0.0, 0.0)];
    }
    [q / a, c / q]
}

fn horner(coeffs: &[C], t: C) -> (C, C) {
    let (mut p, mut dp) = (C::new(0.0, 0.0), C::new(0.0, 0.0));
    for &c in coeffs {
        dp = dp * t + p;
        p = p * t + c;
    }
    (p, dp)
}

/// Newton steps, each kept only if it shrinks `|p(t)|`; near a multiple
/// root the derivative vanishes and a raw step can overshoot.
fn newton_polish(coeffs: &[C], mut t: C) -> C {
    for _ in 0..4 {
        let (p, dp) = horner(coeffs, t);
        let next = t - p / dp;
        if !next.is_finite() || horner(coeffs, next).0.norm() >= p.norm() {
            break;
        }
        t = next;
    }
    t
}

/// Roots of `a t³ + b t² + c t + d` (`a ≠ 0`) by Cardano, Newton-polished.
pub fn cubic_roots(a: C, b: C, c: C, d: C) -> [C; 3] {
    let (b, c, d) = (b / a, c / a, d / a);
    // t = s − b/3 turns the cubic into s³ + p s + q
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let [h1, h2] = quadratic_roots(C::new(1.0, 0.0), q, -p * p * p / 27.0);
    // u³ is the larger root so that u stays away from 0 unless p = q = 0
    let big = if h1.norm() >= h2.norm() { h1 } else { h2 };
    let one = C::new(1.0, 0.0);
    let coeffs = [one, b, c, d];
    cube_roots(big).map(|u| {
        let s = if u.norm() == 0.0 { u } else { u - p / (3.0 * u) };
        newton_polish(&coeffs, s - shift)
    })
}

/// Serializable approximate Jordan element: coordinates as `[re, im]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxHerm {
    pub algebra: CompAlgebra,
    pub diag: Vec<[f64; 2]>,
    pub p: Vec<[f64; 2]>,
    pub q: Vec<[f64; 2]>,
    pub r: Vec<[f64; 2]>,
}

fn pair(z: &C) -> [f64; 2] {
    [z.re, z.im]
}

impl From<&HermMat<C>> for ApproxHerm {
    fn from(x: &HermMat<C>) -> Self {
        let elem = |u: &CompElem<C>| u.coeffs().iter().map(pair).collect();
        ApproxHerm {
            algebra: x.algebra(),
            diag: x.diag.iter().map(pair).collect(),
            p: elem(&x.p),
            q: elem(&x.q),
            r: elem(&x.r),
        }
    }
}

impl ApproxHerm {
    pub fn to_herm(&self) -> Result<HermMat<C>> {
        let dim = self.algebra.dim();
        let elem = |v: &[[f64; 2]], name: &str| -> Result<CompElem<C>> {
            if v.len() != dim {
                return Err(Error::Schema(format!(
                    "{name}: expected {dim} components, got {}",
                    v.len()
                )));
            }
            Ok(CompElem::from_coeffs(
                self.algebra,
                v.iter().map(|&[re, im]| C::new(re, im)).collect(),
            ))
        };
        if self.diag.len() != 3 {
            return Err(Error::Schema(format!(
                "diag: expected 3 entries, got {}",
                self.diag.len()
            )));
        }
        let d: Vec<C> = self.diag.iter().map(|&[re, im]| C::new(re, im)).collect();
        Ok(HermMat::new(
            [d[0], d[1], d[2]],
            elem(&self.p, "p")?,
            elem(&self.q, "q")?,
            elem(&self.r, "r")?,
        ))
    }
}

/// Output of a construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RealizationResult {
    pub construction: String,
    pub tuple: Vec<ApproxHerm>,
    /// Target coefficients of `χ` in the order of `inv::BINARY_MONOMIALS`
    /// or `inv::TERNARY_MONOMIALS`.
    pub target: Vec<[f64; 2]>,
    pub target_f11: Option<[f64; 2]>,
    /// Max absolute coefficient error, recomputed from the tuple.
    pub residual: f64,
    /// Index of the root branch that was accepted.
    pub branch: usize,
}

impl RealizationResult {
    pub fn herm_tuple(&self) -> Result<Vec<HermMat<C>>> {
        self.tuple.iter().map(ApproxHerm::to_herm).collect()
    }
}

/// Max coefficient error of `χ(tuple)` (and `f̃11`) against the target.
pub fn residual(tuple: &[HermMat<C>], target: &[C], target_f11: Option<C>) -> f64 {
    let got = chi(tuple).coeffs;
    let mut err = got.iter().zip(target).map(|(g, t)| (g - t).norm()).fold(0.0, f64::max);
    if let (Some(t), [x, y, z]) = (target_f11, tuple) {
        err = err.max((f11_tilde(x, y, z) - t).norm());
    }
    if err.is_nan() {
        f64::INFINITY
    } else {
        err
    }
}

fn finish(
    construction: &str,
    tuple: Vec<HermMat<C>>,
    target: Vec<C>,
    target_f11: Option<C>,
    branch: usize,
) -> RealizationResult {
    let residual = residual(&tuple, &target, target_f11);
    RealizationResult {
        construction: construction.into(),
        tuple: tuple.iter().map(ApproxHerm::from).collect(),
        target: target.iter().map(pair).collect(),
        target_f11: target_f11.as_ref().map(pair),
        residual,
        branch,
    }
}

/// Tries the candidates in order; the first within tolerance wins.
fn first_within(
    candidates: impl Iterator<Item = (usize, Vec<HermMat<C>>)>,
    construction: &str,
    target: &[C],
    target_f11: Option<C>,
    tol: f64,
) -> Result<RealizationResult> {
    let mut best = f64::INFINITY;
    for (branch, tuple) in candidates {
        let res = finish(construction, tuple, target.to_vec(), target_f11, branch);
        if res.residual <= tol {
            return Ok(res);
        }
        best = best.min(res.residual);
    }
    Err(Error::SolverFailure { tolerance: tol, best })
}

/// Diagonal pair `(x, y)` with `χ(x, y) = P/λ`, where `P(a, b) =
/// λ b^{3−N} Π_{i≤N} (a − α_i b)` and `coeffs` lists the coefficients of
/// `a³, a²b, ab², b³`.
pub fn realize_binary_cubic(coeffs: &[C; 4], alg: CompAlgebra, tol: f64) -> Result<RealizationResult> {
    let j = coeffs
        .iter()
        .position(|c| c.norm() != 0.0)
        .ok_or(Error::DegenerateForm)?;
    let lambda = coeffs[j];
    let n = 3 - j;
    // monic Q(t) = P(t, 1)/λ of degree N
    let q: Vec<C> = coeffs[j..].iter().map(|c| c / lambda).collect();
    let mut alphas: Vec<C> = match n {
        0 => vec![],
        1 => vec![-q[1]],
        2 => quadratic_roots(q[0], q[1], q[2]).to_vec(),
        _ => cubic_roots(q[0], q[1], q[2], q[3]).to_vec(),
    };
    // fixed root order: descending real part, then imaginary part
    alphas.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    let one = C::new(1.0, 0.0);
    let zero = C::new(0.0, 0.0);
    let x = HermMat::diagonal(alg, std::array::from_fn(|i| if i < n { one } else { zero }));
    let y = HermMat::diagonal(alg, std::array::from_fn(|i| if i < n { -alphas[i] } else { one }));
    let target: Vec<C> = coeffs.iter().map(|c| c / lambda).collect();
    first_within(std::iter::once((0, vec![x, y])), "binary", &target, None, tol)
}

fn fermat_target(lambda: f64) -> Vec<C> {
    // a³ + b³ + c³ + λ abc in TERNARY_MONOMIALS order
    let mut t = vec![C::new(0.0, 0.0); 10];
    t[0] = C::new(1.0, 0.0);
    t[4] = C::new(lambda, 0.0);
    t[6] = C::new(1.0, 0.0);
    t[9] = C::new(1.0, 0.0);
    t
}

fn fermat_head(alg: CompAlgebra) -> (HermMat<C>, HermMat<C>) {
    let z = zeta();
    (
        HermMat::identity(alg),
        HermMat::diagonal(alg, [C::new(1.0, 0.0), z, z * z]),
    )
}

/// `(e, e1 + ζe2 + ζ²e3, z)` in `V0` with `χ = a³ + b³ + c³ + λabc`.
///
/// `z` has diagonal `−λ/3 · (1, ζ², ζ)`, `p = sζr`, `q = ζ²r` with
/// `s = ±1`, and `r` a root of `2s r³ + λ r² − (1 + λ³/27)`.
/// Branches run over `s = +1, −1`, then the three roots.
pub fn realize_fermat_v0(lambda: f64, tol: f64) -> Result<RealizationResult> {
    let alg = CompAlgebra::R;
    let zt = zeta();
    let l = C::new(lambda, 0.0);
    let d = -l / 3.0;
    let (x, y) = fermat_head(alg);
    let constant = -(1.0 + l * l * l / 27.0);
    let candidates = [1.0, -1.0].into_iter().enumerate().flat_map(move |(si, s)| {
        let roots = cubic_roots(C::new(2.0 * s, 0.0), l, C::new(0.0, 0.0), constant);
        let (x, y) = (x.clone(), y.clone());
        roots.into_iter().enumerate().map(move |(ri, r)| {
            let e = |v: C| CompElem::scalar(alg, v);
            let z = HermMat::new([d, d * zt * zt, d * zt], e(s * zt * r), e(zt * zt * r), e(r));
            (3 * si + ri, vec![x.clone(), y.clone(), z])
        })
    });
    first_within(candidates, "fermat", &fermat_target(lambda), None, tol)
}

/// Triple in `V1` with `χ = a³ + b³ + c³ + λabc` and `f̃11 = μ`, built in
/// the `Mat(3)` model.
///
/// With `m = (μ + 2λ²)/24`: `z12 z21 = ζ² m`, `z13 z31 = ζ m`,
/// `z23 z32 = m`, and `u = z12 z23 z31`, `v = z13 z32 z21` are the roots of
/// `t² − (1 + λ³/27 − λm) t + m³`. Branches run over the two orderings of
/// `(u, v)`, then the three cube roots of `u`.
pub fn realize_with_mu_v1(lambda: f64, mu: f64, tol: f64) -> Result<RealizationResult> {
    let alg = CompAlgebra::C;
    let zt = zeta();
    let l = C::new(lambda, 0.0);
    let m = C::new((mu + 2.0 * lambda * lambda) / 24.0, 0.0);
    let d = -l / 3.0;
    let (x, y) = fermat_head(alg);
    let s = 1.0 + l * l * l / 27.0 - l * m;
    let [r1, r2] = quadratic_roots(C::new(1.0, 0.0), -s, m * m * m);
    let candidates = [(r1, r2), (r2, r1)]
        .into_iter()
        .enumerate()
        .flat_map(move |(oi, (u, v))| {
            let (x, y) = (x.clone(), y.clone());
            cube_roots(u).into_iter().enumerate().map(move |(k, w)| {
                // second cycle z13, z32, z21; free when m = 0
                let (z13, z32, z21) = if w.norm() > 1e-12 {
                    (zt * m / w, m / w, zt * zt * m / w)
                } else {
                    let w2 = cube_roots(v)[0];
                    (w2, w2, w2)
                };
                let mat = Mat3 {
                    m: [[d, w, z13], [z21, d * zt * zt, w], [w, z32, d * zt]],
                };
                (3 * oi + k, vec![x.clone(), y.clone(), split_iso_inv(&mat)])
            })
        });
    first_within(candidates, "mu", &fermat_target(lambda), Some(C::new(mu, 0.0)), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{split_iso, sym_matrix};

    const GRID: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    /// Independent check: `det(a x + b y + c z)` through the classical
    /// matrix determinant at sample points, against the target form.
    fn classical_error(res: &RealizationResult) -> f64 {
        let t = res.herm_tuple().unwrap();
        let target: Vec<C> = res.target.iter().map(|&[re, im]| C::new(re, im)).collect();
        let to_mat = |x: &HermMat<C>| match x.algebra() {
            CompAlgebra::R => sym_matrix(x),
            CompAlgebra::C => split_iso(x).unwrap(),
            other => panic!("no matrix model for {other}"),
        };
        let mats: Vec<Mat3<C>> = t.iter().map(to_mat).collect();
        let samples = [[1.0, 0.3, -0.7], [-0.4, 1.1, 0.5], [0.9, -1.3, 0.2], [0.25, 0.6, 1.4]];
        let mut worst: f64 = 0.0;
        for s in samples {
            let vars: Vec<C> = s[..mats.len()].iter().map(|&v| c(v)).collect();
            let comb = mats
                .iter()
                .zip(&vars)
                .fold(Mat3::zero(), |acc, (m, v)| acc.add(&m.scale(v)));
            let form = crate::inv::CubicFormCoeffs { coeffs: target.clone() };
            worst = worst.max((comb.det() - form.eval(&vars)).norm());
        }
        worst
    }

    #[test]
    fn solvers() {
        let roots = cubic_roots(c(1.0), c(-6.0), c(11.0), c(-6.0));
        let mut re: Vec<f64> = roots.iter().map(|r| r.re).collect();
        re.sort_by(f64::total_cmp);
        for (r, e) in re.iter().zip([1.0, 2.0, 3.0]) {
            assert!((r - e).abs() < 1e-12);
        }
        for r in cubic_roots(c(2.0), c(0.0), c(0.0), c(0.0)) {
            assert_eq!(r, c(0.0));
        }
        let [a, b] = quadratic_roots(c(1.0), c(1e8), c(1.0));
        assert!((a * b - 1.0).norm() < 1e-9 && (a + b + 1e8).norm() < 1e-6);
        let z = zeta();
        assert!((z * z * z - 1.0).norm() < 1e-15);
    }

    #[test]
    fn binary_with_double_root() {
        // a³ + a²b − ab² − b³ = (a − b)(a + b)²
        let res = realize_binary_cubic(&[c(-1.0), c(-1.0), c(1.0), c(1.0)], CompAlgebra::R, DEFAULT_TOLERANCE).unwrap();
        assert!(res.residual <= DEFAULT_TOLERANCE, "{}", res.residual);
        let triple =
            realize_binary_cubic(&[c(1.0), c(3.0), c(3.0), c(1.0)], CompAlgebra::R, DEFAULT_TOLERANCE).unwrap();
        assert!(triple.residual <= DEFAULT_TOLERANCE, "{}", triple.residual);
    }

    #[test]
    fn binary_examples() {
        let res = realize_binary_cubic(&[c(0.0), c(1.0), c(1.0), c(0.0)], CompAlgebra::R, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(res.residual, 0.0);
        let t = res.herm_tuple().unwrap();
        assert_eq!(t[0], HermMat::diagonal(CompAlgebra::R, [c(1.0), c(1.0), c(0.0)]));
        let y_diag: Vec<f64> = t[1].diag.iter().map(|v| v.re.abs()).collect();
        assert_eq!(y_diag, vec![0.0, 1.0, 1.0]);

        let a3 = realize_binary_cubic(&[c(1.0), c(0.0), c(0.0), c(0.0)], CompAlgebra::H, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(a3.herm_tuple().unwrap()[0], HermMat::identity(CompAlgebra::H));
        assert!(a3.herm_tuple().unwrap()[1].is_zero());
        let b3 = realize_binary_cubic(&[c(0.0), c(0.0), c(0.0), c(1.0)], CompAlgebra::O, DEFAULT_TOLERANCE).unwrap();
        assert!(b3.herm_tuple().unwrap()[0].is_zero());
        assert_eq!(
            realize_binary_cubic(&[c(0.0); 4], CompAlgebra::R, DEFAULT_TOLERANCE).unwrap_err(),
            Error::DegenerateForm
        );
    }

    #[test]
    fn binary_grid_is_diagonal_and_exact() {
        for a in GRID {
            for b in GRID {
                for d in [-1.0, 2.0] {
                    let res =
                        realize_binary_cubic(&[c(d), c(a), c(b), c(a - b)], CompAlgebra::R, DEFAULT_TOLERANCE).unwrap();
                    assert!(res.residual <= DEFAULT_TOLERANCE);
                    assert!(classical_error(&res) <= 1e-8);
                    for x in res.herm_tuple().unwrap() {
                        assert!(x.p.is_zero() && x.q.is_zero() && x.r.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_grid() {
        for l in GRID.into_iter().chain([3.0]) {
            let res = realize_fermat_v0(l, DEFAULT_TOLERANCE).unwrap();
            assert!(res.residual <= DEFAULT_TOLERANCE, "λ={l}: {}", res.residual);
            assert!(classical_error(&res) <= 1e-8);
            let t = res.herm_tuple().unwrap();
            assert_eq!(t[0], HermMat::identity(CompAlgebra::R));
            let z = zeta();
            let eig = [c(1.0), z, z * z];
            assert!(t[1].diag.iter().zip(eig).all(|(a, b)| (a - b).norm() < 1e-15));
        }
        let z = realize_fermat_v0(0.0, DEFAULT_TOLERANCE).unwrap().herm_tuple().unwrap()[2].clone();
        assert!((z.det() - 1.0).norm() < 1e-12);
    }

    #[test]
    fn mu_grid() {
        for l in GRID {
            for mu in GRID {
                let res = realize_with_mu_v1(l, mu, DEFAULT_TOLERANCE).unwrap();
                assert!(res.residual <= DEFAULT_TOLERANCE, "λ={l} μ={mu}: {}", res.residual);
                assert!(classical_error(&res) <= 1e-8);
            }
        }
        let res = realize_with_mu_v1(0.0, 8.0, DEFAULT_TOLERANCE).unwrap();
        assert!(res.residual <= DEFAULT_TOLERANCE);
    }

    #[test]
    fn mu_zero_gives_cyclic_permutation() {
        let res = realize_with_mu_v1(0.0, 0.0, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(res.branch, 0);
        let z = split_iso(&res.herm_tuple().unwrap()[2]).unwrap();
        let perm = [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((z.m[i][j] - perm[i][j]).norm() < 1e-12, "z[{i}][{j}] = {}", z.m[i][j]);
            }
        }
    }

    #[test]
    fn deterministic_and_round_trips_json() {
        let a = realize_with_mu_v1(1.0, -2.0, DEFAULT_TOLERANCE).unwrap();
        let b = realize_with_mu_v1(1.0, -2.0, DEFAULT_TOLERANCE).unwrap();
        let (ja, jb) = (serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(ja, jb);
        let back: RealizationResult = serde_json::from_str(&ja).unwrap();
        assert_eq!(back.herm_tuple().unwrap(), a.herm_tuple().unwrap());
    }

    #[test]
    fn unreachable_tolerance_reports_solver_failure() {
        match realize_fermat_v0(1.0, -1.0) {
            Err(Error::SolverFailure { best, .. }) => assert!(best < 1e-9),
            other => panic!("{other:?}"),
        }
    }
}
