//! The cubic Jordan algebras `V = H3(F_C)`.
//!
//! A point is stored as
//!
//! ```text
//!     | a   p̄   q̄ |
//! x = | p   b   r |
//!     | q   r̄   c |
//! ```
//!
//! with coordinate vector `[a, b, c, p_0.., q_0.., r_0..]` of length
//! `n = 3 + 3·dim F`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::comp::{CompAlgebra, CompElem};
use crate::error::{Error, Result};
use crate::exact::{GaussRational, Scalar};

/// A Hermitian 3×3 matrix over a complexified composition algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct HermMat<S> {
    pub diag: [S; 3],
    pub p: CompElem<S>,
    pub q: CompElem<S>,
    pub r: CompElem<S>,
}

/// Number of scalar coordinates of `H3(F_C)`.
pub fn coord_dim(alg: CompAlgebra) -> usize {
    3 + 3 * alg.dim()
}

fn lin<S: Scalar>(terms: &[(&S, &S)]) -> S {
    terms.iter().fold(S::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
}

impl<S: Scalar> HermMat<S> {
    pub fn new(diag: [S; 3], p: CompElem<S>, q: CompElem<S>, r: CompElem<S>) -> Self {
        let alg = p.algebra().max(q.algebra()).max(r.algebra());
        HermMat {
            diag,
            p: p.embed(alg),
            q: q.embed(alg),
            r: r.embed(alg),
        }
    }

    pub fn zero(alg: CompAlgebra) -> Self {
        Self::diagonal(alg, [S::zero(), S::zero(), S::zero()])
    }

    pub fn diagonal(alg: CompAlgebra, diag: [S; 3]) -> Self {
        HermMat {
            diag,
            p: CompElem::zero(alg),
            q: CompElem::zero(alg),
            r: CompElem::zero(alg),
        }
    }

    /// The unit `e = e1 + e2 + e3`.
    pub fn identity(alg: CompAlgebra) -> Self {
        Self::diagonal(alg, [S::one(), S::one(), S::one()])
    }

    /// Diagonal idempotent `e_i`, `i ∈ {1, 2, 3}`.
    pub fn idempotent(alg: CompAlgebra, i: usize) -> Self {
        assert!((1..=3).contains(&i), "idempotent index must be 1, 2 or 3");
        let mut d = [S::zero(), S::zero(), S::zero()];
        d[i - 1] = S::one();
        Self::diagonal(alg, d)
    }

    pub fn algebra(&self) -> CompAlgebra {
        self.p.algebra()
    }

    pub fn dim(&self) -> usize {
        coord_dim(self.algebra())
    }

    pub fn from_coords(alg: CompAlgebra, coords: &[S]) -> Self {
        let d = alg.dim();
        assert_eq!(
            coords.len(),
            coord_dim(alg),
            "coordinate vector has wrong length for {alg}"
        );
        let part = |k: usize| CompElem::from_coeffs(alg, coords[3 + k * d..3 + (k + 1) * d].to_vec());
        HermMat {
            diag: [coords[0].clone(), coords[1].clone(), coords[2].clone()],
            p: part(0),
            q: part(1),
            r: part(2),
        }
    }

    pub fn coords(&self) -> Vec<S> {
        let mut v = self.diag.to_vec();
        v.extend_from_slice(self.p.coeffs());
        v.extend_from_slice(self.q.coeffs());
        v.extend_from_slice(self.r.coeffs());
        v
    }

    /// The `k`-th coordinate basis vector.
    pub fn basis(alg: CompAlgebra, k: usize) -> Self {
        let mut c = vec![S::zero(); coord_dim(alg)];
        c[k] = S::one();
        Self::from_coords(alg, &c)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> HermMat<T> {
        HermMat {
            diag: [f(&self.diag[0]), f(&self.diag[1]), f(&self.diag[2])],
            p: self.p.map(&f),
            q: self.q.map(&f),
            r: self.r.map(&f),
        }
    }

    /// Zero-pads the off-diagonal entries into a larger algebra.
    pub fn embed(&self, target: CompAlgebra) -> Self {
        HermMat {
            diag: self.diag.clone(),
            p: self.p.embed(target),
            q: self.q.embed(target),
            r: self.r.embed(target),
        }
    }

    /// The 3×3 matrix of entries, row-major.
    pub fn to_full(&self) -> [[CompElem<S>; 3]; 3] {
        let alg = self.algebra();
        let s = |v: &S| CompElem::scalar(alg, v.clone());
        [
            [s(&self.diag[0]), self.p.conj(), self.q.conj()],
            [self.p.clone(), s(&self.diag[1]), self.r.clone()],
            [self.q.clone(), self.r.conj(), s(&self.diag[2])],
        ]
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(self.algebra(), rhs.algebra(), "operands live in different algebras");
        let (a, b) = (self.coords(), rhs.coords());
        let c: Vec<S> = a.iter().zip(&b).map(|(x, y)| f(x, y)).collect();
        Self::from_coords(self.algebra(), &c)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, S::plus)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, S::minus)
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|v| v.times(k))
    }

    pub fn neg(&self) -> Self {
        self.map(S::negated)
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(S::is_zero)
    }

    /// Jordan product `½(xy + yx)`, by closed entry formulas.
    pub fn jmul(&self, y: &Self) -> Self {
        assert_eq!(self.algebra(), y.algebra(), "operands live in different algebras");
        let [a1, a2, a3] = &self.diag;
        let [b1, b2, b3] = &y.diag;
        let (p, q, r) = (&self.p, &self.q, &self.r);
        let (p2, q2, r2) = (&y.p, &y.q, &y.r);

        let d1 = a1.times(b1).plus(&p.dot(p2)).plus(&q.dot(q2));
        let d2 = a2.times(b2).plus(&p.dot(p2)).plus(&r.dot(r2));
        let d3 = a3.times(b3).plus(&q.dot(q2)).plus(&r.dot(r2));

        let half = S::from_frac(1, 2);
        let np = p
            .scale(&b1.plus(b2))
            .add(&p2.scale(&a1.plus(a2)))
            .add(&r.mul(q2))
            .add(&r2.mul(q))
            .scale(&half);
        let nq = q
            .scale(&b1.plus(b3))
            .add(&q2.scale(&a1.plus(a3)))
            .add(&r.conj().mul(p2))
            .add(&r2.conj().mul(p))
            .scale(&half);
        let nr = r2
            .scale(&a2.plus(a3))
            .add(&r.scale(&b2.plus(b3)))
            .add(&p.mul(&q2.conj()))
            .add(&p2.mul(&q.conj()))
            .scale(&half);
        HermMat {
            diag: [d1, d2, d3],
            p: np,
            q: nq,
            r: nr,
        }
    }

    pub fn trace(&self) -> S {
        self.diag[0].plus(&self.diag[1]).plus(&self.diag[2])
    }

    /// `<x, y> = tr(x∙y)`.
    pub fn inner(&self, y: &Self) -> S {
        let two = S::from_int(2);
        let off = self.p.dot(&y.p).plus(&self.q.dot(&y.q)).plus(&self.r.dot(&y.r));
        lin(&[
            (&self.diag[0], &y.diag[0]),
            (&self.diag[1], &y.diag[1]),
            (&self.diag[2], &y.diag[2]),
        ])
        .plus(&two.times(&off))
    }

    pub fn det(&self) -> S {
        let [a, b, c] = &self.diag;
        let abc = a.times(b).times(c);
        let quad = lin(&[(a, &self.r.cnorm()), (b, &self.q.cnorm()), (c, &self.p.cnorm())]);
        let cubic = self.p.mul(&self.q.conj()).mul(&self.r.conj()).re();
        abc.minus(&quad).plus(&S::from_int(2).times(&cubic))
    }

    /// The adjoint `n(x) = x∙x − tr(x)·x + σ(x)·e`, where
    /// `σ(x) = ½(tr(x)² − tr(x∙x))`.
    pub fn sharp(&self) -> Self {
        let x2 = self.jmul(self);
        let t = self.trace();
        let sigma = t.times(&t).minus(&x2.trace()).half();
        let mut out = x2.sub(&self.scale(&t));
        for d in out.diag.iter_mut() {
            *d = d.plus(&sigma);
        }
        out
    }

    /// Polarization `n(x+y) − n(x) − n(y)` of [`HermMat::sharp`].
    pub fn cross(&self, y: &Self) -> Self {
        let (tx, ty) = (self.trace(), y.trace());
        let xy = self.jmul(y);
        let k = tx.times(&ty).minus(&xy.trace());
        let mut out = xy.scale(&S::from_int(2)).sub(&y.scale(&tx)).sub(&self.scale(&ty));
        for d in out.diag.iter_mut() {
            *d = d.plus(&k);
        }
        out
    }

    /// `f(x, y, z) = <x × y, z>`; `f(x, x, x) = 6 det x`.
    pub fn trilinear_f(&self, y: &Self, z: &Self) -> S {
        self.cross(y).inner(z)
    }

    /// `x⁻¹ = n(x) / det x`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self.det().try_inv().ok_or(Error::SingularElement)?;
        Ok(self.sharp().scale(&inv))
    }

    pub fn peirce(&self) -> PeirceParts<S> {
        PeirceParts {
            diag: self.diag.clone(),
            v12: self.p.clone(),
            v13: self.q.clone(),
            v23: self.r.clone(),
        }
    }
}

/// Components of `x = x1 e1 + x2 e2 + x3 e3 + x12 + x13 + x23` relative to
/// the diagonal idempotents; `x12 = (p)_12`, `x13 = (q)_13`, `x23 = (r)_23`.
#[derive(Clone, Debug, PartialEq)]
pub struct PeirceParts<S> {
    pub diag: [S; 3],
    pub v12: CompElem<S>,
    pub v13: CompElem<S>,
    pub v23: CompElem<S>,
}

impl<S: Scalar> PeirceParts<S> {
    pub fn assemble(&self) -> HermMat<S> {
        HermMat::new(self.diag.clone(), self.v12.clone(), self.v13.clone(), self.v23.clone())
    }

    fn algebra(&self) -> CompAlgebra {
        self.v12.algebra()
    }

    /// `(u)_12` as an element of `V`.
    pub fn x12(&self) -> HermMat<S> {
        let alg = self.algebra();
        HermMat::new(zero3(), self.v12.clone(), CompElem::zero(alg), CompElem::zero(alg))
    }

    pub fn x13(&self) -> HermMat<S> {
        let alg = self.algebra();
        HermMat::new(zero3(), CompElem::zero(alg), self.v13.clone(), CompElem::zero(alg))
    }

    pub fn x23(&self) -> HermMat<S> {
        let alg = self.algebra();
        HermMat::new(zero3(), CompElem::zero(alg), CompElem::zero(alg), self.v23.clone())
    }

    /// Diagonal of `n(x)` from the Peirce formulas
    /// `n(x)_1 = x2 x3 − ½||x23||` and its permutations, with `||u|| = <u, u>`.
    pub fn sharp_diag(&self) -> [S; 3] {
        let [x1, x2, x3] = &self.diag;
        let (n12, n13, n23) = (
            self.x12().inner(&self.x12()),
            self.x13().inner(&self.x13()),
            self.x23().inner(&self.x23()),
        );
        [
            x2.times(x3).minus(&n23.half()),
            x1.times(x3).minus(&n13.half()),
            x1.times(x2).minus(&n12.half()),
        ]
    }

    /// `x1x2x3 − ½(x1||x23|| + x2||x13|| + x3||x12||) + 2<x12∙x13, x23>`.
    pub fn det(&self) -> S {
        let [x1, x2, x3] = &self.diag;
        let (a, b, c) = (self.x12(), self.x13(), self.x23());
        let quad = lin(&[(x1, &c.inner(&c)), (x2, &b.inner(&b)), (x3, &a.inner(&a))]).half();
        let cubic = a.jmul(&b).inner(&c);
        x1.times(x2).times(x3).minus(&quad).plus(&S::from_int(2).times(&cubic))
    }
}

fn zero3<S: Scalar>() -> [S; 3] {
    [S::zero(), S::zero(), S::zero()]
}

/// Compact JSON for a Gaussian rational: a bare `"p/q"` string when real.
pub(crate) mod compact_gauss {
    use super::*;

    pub fn to_value(g: &GaussRational) -> serde_json::Value {
        if g.is_real() {
            serde_json::Value::String(crate::exact::rational_to_string(&g.re))
        } else {
            serde_json::to_value(g).expect("Gaussian rational serializes")
        }
    }
}

#[derive(Serialize, Deserialize)]
struct HermRepr {
    algebra: CompAlgebra,
    diag: [serde_json::Value; 3],
    p: Vec<GaussRational>,
    q: Vec<GaussRational>,
    r: Vec<GaussRational>,
}

impl Serialize for HermMat<GaussRational> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        HermRepr {
            algebra: self.algebra(),
            diag: [
                compact_gauss::to_value(&self.diag[0]),
                compact_gauss::to_value(&self.diag[1]),
                compact_gauss::to_value(&self.diag[2]),
            ],
            p: self.p.coeffs().to_vec(),
            q: self.q.coeffs().to_vec(),
            r: self.r.coeffs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HermMat<GaussRational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = HermRepr::deserialize(d)?;
        let alg = repr.algebra;
        let diag: Vec<GaussRational> = repr
            .diag
            .into_iter()
            .map(|v| serde_json::from_value(v).map_err(D::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        let part = |name: &str, v: Vec<GaussRational>| {
            if v.len() != alg.dim() {
                return Err(D::Error::custom(format!(
                    "{name} has {} coefficients but algebra {alg} needs {}",
                    v.len(),
                    alg.dim()
                )));
            }
            Ok(CompElem::from_coeffs(alg, v))
        };
        Ok(HermMat {
            diag: [diag[0].clone(), diag[1].clone(), diag[2].clone()],
            p: part("p", repr.p)?,
            q: part("q", repr.q)?,
            r: part("r", repr.r)?,
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exact::{random_scalar, seeded_rng, SeedRng};

    type H = HermMat<GaussRational>;
    type G = GaussRational;

    pub(crate) fn random_herm(rng: &mut SeedRng, alg: CompAlgebra) -> H {
        let c: Vec<G> = (0..coord_dim(alg)).map(|_| random_scalar(rng, 12)).collect();
        H::from_coords(alg, &c)
    }

    fn full_mul(x: &[[CompElem<G>; 3]; 3], y: &[[CompElem<G>; 3]; 3]) -> Vec<Vec<CompElem<G>>> {
        let alg = x[0][0].algebra();
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| (0..3).fold(CompElem::zero(alg), |acc, k| acc.add(&x[i][k].mul(&y[k][j]))))
                    .collect()
            })
            .collect()
    }

    /// Oracle: `½(XY + YX)` on full matrices, read back after checking it is
    /// Hermitian with scalar diagonal.
    fn jmul_oracle(x: &H, y: &H) -> H {
        let (fx, fy) = (x.to_full(), y.to_full());
        let (xy, yx) = (full_mul(&fx, &fy), full_mul(&fy, &fx));
        let half = G::from_frac(1, 2);
        let m: Vec<Vec<CompElem<G>>> = (0..3)
            .map(|i| (0..3).map(|j| xy[i][j].add(&yx[i][j]).scale(&half)).collect())
            .collect();
        for i in 0..3 {
            assert!(m[i][i].im().is_zero(), "diagonal entry not scalar");
            for j in 0..3 {
                assert_eq!(m[i][j], m[j][i].conj(), "not Hermitian");
            }
        }
        H::new(
            [m[0][0].re(), m[1][1].re(), m[2][2].re()],
            m[1][0].clone(),
            m[2][0].clone(),
            m[1][2].clone(),
        )
    }

    #[test]
    fn jmul_matches_full_matrix_product() {
        let mut rng = seeded_rng(10);
        for alg in CompAlgebra::ALL {
            for _ in 0..20 {
                let x = random_herm(&mut rng, alg);
                let y = random_herm(&mut rng, alg);
                assert_eq!(x.jmul(&y), jmul_oracle(&x, &y), "{alg}");
            }
        }
    }

    #[test]
    fn jmul_examples() {
        let alg = CompAlgebra::O;
        let mut rng = seeded_rng(11);
        let x = random_herm(&mut rng, alg);
        assert_eq!(H::identity(alg).jmul(&x), x);
        assert!(H::idempotent(alg, 1).jmul(&H::idempotent(alg, 2)).is_zero());
        let x12 = HermMat {
            p: x.p.clone(),
            ..H::zero(alg)
        };
        assert_eq!(H::idempotent(alg, 1).jmul(&x12), x12.scale(&G::from_frac(1, 2)));
    }

    #[test]
    fn jordan_identity_and_commutativity() {
        let mut rng = seeded_rng(12);
        for alg in CompAlgebra::ALL {
            for _ in 0..100 {
                let x = random_herm(&mut rng, alg);
                let y = random_herm(&mut rng, alg);
                assert_eq!(x.jmul(&y), y.jmul(&x));
                let xx = x.jmul(&x);
                assert_eq!(x.jmul(&y).jmul(&xx), x.jmul(&y.jmul(&xx)), "{alg}");
            }
        }
    }

    #[test]
    fn inner_product() {
        let alg = CompAlgebra::H;
        assert_eq!(H::identity(alg).inner(&H::identity(alg)), G::from_int(3));
        assert!(H::idempotent(alg, 1).inner(&H::idempotent(alg, 2)).is_zero());
        let mut rng = seeded_rng(13);
        for alg in CompAlgebra::ALL {
            for _ in 0..50 {
                let (x, y, z) = (
                    random_herm(&mut rng, alg),
                    random_herm(&mut rng, alg),
                    random_herm(&mut rng, alg),
                );
                assert_eq!(x.inner(&y), x.jmul(&y).trace());
                assert_eq!(x.inner(&y), y.inner(&x));
                assert_eq!(x.jmul(&z).inner(&y), x.inner(&y.jmul(&z)));
            }
        }
    }

    #[test]
    fn det_examples() {
        let alg = CompAlgebra::R;
        assert_eq!(H::identity(alg).det(), G::one());
        let d = H::diagonal(alg, [G::from_int(2), G::from_int(3), G::from_int(5)]);
        assert_eq!(d.det(), G::from_int(30));
        // [[1,1,0],[1,2,0],[0,0,3]]
        let x = H::from_coords(alg, &[1, 2, 3, 1, 0, 0].map(G::from_int));
        assert_eq!(x.det(), G::from_int(3));
    }

    #[test]
    fn cayley_hamilton_and_det_normalization() {
        let mut rng = seeded_rng(14);
        for alg in CompAlgebra::ALL {
            let e = H::identity(alg);
            for _ in 0..100 {
                let x = random_herm(&mut rng, alg);
                let det = x.det();
                assert_eq!(x.jmul(&x.sharp()), e.scale(&det), "{alg}");
                assert_eq!(x.trilinear_f(&x, &x), G::from_int(6).times(&det));
            }
        }
    }

    #[test]
    fn det_is_cubic() {
        let mut rng = seeded_rng(15);
        for alg in CompAlgebra::ALL {
            let x = random_herm(&mut rng, alg);
            let t = random_scalar(&mut rng, 50);
            assert_eq!(x.scale(&t).det(), &(&(&t * &t) * &t) * &x.det());
        }
    }

    #[test]
    fn sharp_and_cross_examples() {
        let alg = CompAlgebra::O;
        let (e, e1, e2, e3) = (
            H::identity(alg),
            H::idempotent(alg, 1),
            H::idempotent(alg, 2),
            H::idempotent(alg, 3),
        );
        assert!(e1.sharp().is_zero());
        assert_eq!(e.sharp(), e);
        assert_eq!(e1.cross(&e2), e3);
        assert_eq!(e.cross(&e), e.scale(&G::from_int(2)));
        assert_eq!(e1.trilinear_f(&e2, &e3), G::one());
        assert_eq!(e.trilinear_f(&e, &e), G::from_int(6));
    }

    #[test]
    fn cross_is_polarized_sharp() {
        let mut rng = seeded_rng(16);
        for alg in CompAlgebra::ALL {
            for _ in 0..30 {
                let x = random_herm(&mut rng, alg);
                let y = random_herm(&mut rng, alg);
                let polar = x.add(&y).sharp().sub(&x.sharp()).sub(&y.sharp());
                assert_eq!(x.cross(&y), polar);
                assert_eq!(x.cross(&y), y.cross(&x));
                assert_eq!(x.cross(&x), x.sharp().scale(&G::from_int(2)));
            }
        }
    }

    #[test]
    fn trilinear_is_symmetric() {
        let mut rng = seeded_rng(17);
        for alg in CompAlgebra::ALL {
            for _ in 0..50 {
                let (x, y, z) = (
                    random_herm(&mut rng, alg),
                    random_herm(&mut rng, alg),
                    random_herm(&mut rng, alg),
                );
                let v = x.trilinear_f(&y, &z);
                assert_eq!(v, y.trilinear_f(&x, &z));
                assert_eq!(v, x.trilinear_f(&z, &y));
                assert_eq!(v, z.trilinear_f(&y, &x));
            }
        }
    }

    #[test]
    fn inverse() {
        let alg = CompAlgebra::C;
        let e = H::identity(alg);
        assert_eq!(e.inverse().unwrap(), e);
        let d = H::diagonal(alg, [1, 2, 4].map(G::from_int));
        assert_eq!(
            d.inverse().unwrap(),
            H::diagonal(alg, [G::one(), G::from_frac(1, 2), G::from_frac(1, 4)])
        );
        assert_eq!(H::idempotent(alg, 1).inverse(), Err(Error::SingularElement));

        let mut rng = seeded_rng(18);
        for alg in CompAlgebra::ALL {
            let x = random_herm(&mut rng, alg);
            let inv = x.inverse().unwrap();
            assert_eq!(x.jmul(&inv), H::identity(alg));
            assert_eq!(x.jmul(&x).jmul(&inv), x);
        }
    }

    #[test]
    fn peirce_formulas() {
        let mut rng = seeded_rng(19);
        for alg in CompAlgebra::ALL {
            let parts = H::identity(alg).peirce();
            assert_eq!(parts.diag, [G::one(), G::one(), G::one()]);
            assert!(parts.v12.is_zero() && parts.v13.is_zero() && parts.v23.is_zero());
            for _ in 0..50 {
                let x = random_herm(&mut rng, alg);
                let parts = x.peirce();
                assert_eq!(parts.assemble(), x);
                assert_eq!(parts.det(), x.det(), "{alg}");
                assert_eq!(parts.sharp_diag(), x.sharp().diag, "{alg}");
            }
        }
    }

    #[test]
    fn embedding_commutes_with_operations() {
        let mut rng = seeded_rng(20);
        for _ in 0..20 {
            let (x, y, z) = (
                random_herm(&mut rng, CompAlgebra::R),
                random_herm(&mut rng, CompAlgebra::R),
                random_herm(&mut rng, CompAlgebra::R),
            );
            let up = |h: &H| h.embed(CompAlgebra::O);
            assert_eq!(up(&x).det(), x.det());
            assert_eq!(up(&x).sharp(), up(&x.sharp()));
            assert_eq!(up(&x).trilinear_f(&up(&y), &up(&z)), x.trilinear_f(&y, &z));
        }
    }

    #[test]
    fn json_round_trip() {
        let mut rng = seeded_rng(21);
        let x = random_herm(&mut rng, CompAlgebra::H);
        let s = serde_json::to_string(&x).unwrap();
        let back: H = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);

        let text = r#"{"algebra":"R","diag":["1","0","2"],"p":["1/2"],"q":["0"],"r":[{"re":"0","im":"1"}]}"#;
        let y: H = serde_json::from_str(text).unwrap();
        assert_eq!(y.diag[2], G::from_int(2));
        assert_eq!(y.r.coeff(0), &G::i());
        let bad = r#"{"algebra":"C","diag":["1","0","2"],"p":["1"],"q":["0","0"],"r":["0","0"]}"#;
        assert!(serde_json::from_str::<H>(bad).is_err());
    }
}
