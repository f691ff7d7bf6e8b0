//! Complexified composition algebras R ⊂ C ⊂ H ⊂ O over a scalar ring.
//!
//! Elements are coefficient vectors on the basis `f_0 = 1, f_1, …, f_7`.
//! All four algebras share one 8×8 signed multiplication table; the smaller
//! algebras are its upper-left corners, so the inclusion chain is plain
//! zero-padding.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::Scalar;

/// Which composition algebra an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompAlgebra {
    R,
    C,
    H,
    O,
}

impl CompAlgebra {
    pub const ALL: [CompAlgebra; 4] = [CompAlgebra::R, CompAlgebra::C, CompAlgebra::H, CompAlgebra::O];

    pub fn dim(self) -> usize {
        match self {
            CompAlgebra::R => 1,
            CompAlgebra::C => 2,
            CompAlgebra::H => 4,
            CompAlgebra::O => 8,
        }
    }

    pub fn from_dim(dim: usize) -> Option<Self> {
        CompAlgebra::ALL.into_iter().find(|a| a.dim() == dim)
    }

    pub fn tag(self) -> &'static str {
        match self {
            CompAlgebra::R => "R",
            CompAlgebra::C => "C",
            CompAlgebra::H => "H",
            CompAlgebra::O => "O",
        }
    }

    /// Name of the Jordan algebra H3 over this composition algebra.
    pub fn jordan_name(self) -> &'static str {
        match self {
            CompAlgebra::R => "V0",
            CompAlgebra::C => "V1",
            CompAlgebra::H => "V2",
            CompAlgebra::O => "V3",
        }
    }
}

impl fmt::Display for CompAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CompAlgebra {
    type Err = String;

    /// Accepts either the composition-algebra tag (`R`, `C`, `H`, `O`) or the
    /// Jordan-algebra name (`V0` … `V3`).
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "R" | "V0" | "v0" => Ok(CompAlgebra::R),
            "C" | "V1" | "v1" => Ok(CompAlgebra::C),
            "H" | "V2" | "v2" => Ok(CompAlgebra::H),
            "O" | "V3" | "v3" => Ok(CompAlgebra::O),
            other => Err(format!("unknown algebra {other:?} (expected R|C|H|O or V0..V3)")),
        }
    }
}

impl Serialize for CompAlgebra {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for CompAlgebra {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// `f_i · f_j = sign · f_k`, stored as `(sign, k)`.
///
/// Frozen output of [`cayley_dickson_table`]; the test suite regenerates it.
pub const MUL_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// Builds the basis multiplication table by Cayley–Dickson doubling
/// `(a, b)(c, d) = (ac − d̄b, da + bc̄)` from ℝ, which realizes
/// `f_3 = f_1f_2`, `f_5 = f_1f_4`, `f_6 = f_2f_4`, `f_7 = f_3f_4`.
pub fn cayley_dickson_table() -> [[(i8, u8); 8]; 8] {
    fn conj(a: &[i64]) -> Vec<i64> {
        if a.len() == 1 {
            return a.to_vec();
        }
        let h = a.len() / 2;
        let mut out = conj(&a[..h]);
        out.extend(a[h..].iter().map(|t| -t));
        out
    }
    fn mul(x: &[i64], y: &[i64]) -> Vec<i64> {
        if x.len() == 1 {
            return vec![x[0] * y[0]];
        }
        let h = x.len() / 2;
        let (a, b, c, d) = (&x[..h], &x[h..], &y[..h], &y[h..]);
        let ac = mul(a, c);
        let db = mul(&conj(d), b);
        let da = mul(d, a);
        let bc = mul(b, &conj(c));
        let mut out: Vec<i64> = ac.iter().zip(&db).map(|(p, q)| p - q).collect();
        out.extend(da.iter().zip(&bc).map(|(p, q)| p + q));
        out
    }
    let unit = |i: usize| (0..8).map(|k| i64::from(k == i)).collect::<Vec<_>>();
    let mut table = [[(0i8, 0u8); 8]; 8];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let p = mul(&unit(i), &unit(j));
            let k = p.iter().position(|&v| v != 0).expect("basis product is nonzero");
            *slot = (p[k] as i8, k as u8);
        }
    }
    table
}

/// Element of a complexified composition algebra.
#[derive(Clone, PartialEq)]
pub struct CompElem<S> {
    alg: CompAlgebra,
    coeffs: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for CompElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.alg, self.coeffs)
    }
}

impl<S: Scalar> CompElem<S> {
    pub fn zero(alg: CompAlgebra) -> Self {
        CompElem {
            alg,
            coeffs: vec![S::zero(); alg.dim()],
        }
    }

    pub fn one(alg: CompAlgebra) -> Self {
        Self::scalar(alg, S::one())
    }

    pub fn scalar(alg: CompAlgebra, s: S) -> Self {
        let mut e = Self::zero(alg);
        e.coeffs[0] = s;
        e
    }

    /// Basis element `f_k`.
    pub fn basis(alg: CompAlgebra, k: usize) -> Self {
        assert!(k < alg.dim(), "f_{k} is not in {alg}");
        let mut e = Self::zero(alg);
        e.coeffs[k] = S::one();
        e
    }

    pub fn from_coeffs(alg: CompAlgebra, coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), alg.dim(), "coefficient count does not match {alg}");
        CompElem { alg, coeffs }
    }

    pub fn algebra(&self) -> CompAlgebra {
        self.alg
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    /// Zero-pads (or, for a smaller target, requires the dropped
    /// coefficients to vanish) into another algebra of the chain.
    pub fn embed(&self, target: CompAlgebra) -> Self {
        let mut coeffs = self.coeffs.clone();
        if target.dim() >= self.alg.dim() {
            coeffs.resize(target.dim(), S::zero());
        } else {
            assert!(
                coeffs[target.dim()..].iter().all(S::is_zero),
                "element does not lie in {target}"
            );
            coeffs.truncate(target.dim());
        }
        CompElem { alg: target, coeffs }
    }

    fn promote(&self, other: &Self) -> (CompAlgebra, Option<Self>, Option<Self>) {
        use std::cmp::Ordering::*;
        match self.alg.cmp(&other.alg) {
            Equal => (self.alg, None, None),
            Less => (other.alg, Some(self.embed(other.alg)), None),
            Greater => (self.alg, None, Some(other.embed(self.alg))),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (alg, a, b) = self.promote(rhs);
        let (a, b) = (a.as_ref().unwrap_or(self), b.as_ref().unwrap_or(rhs));
        CompElem {
            alg,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.plus(y)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let (alg, a, b) = self.promote(rhs);
        let (a, b) = (a.as_ref().unwrap_or(self), b.as_ref().unwrap_or(rhs));
        CompElem {
            alg,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.minus(y)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CompElem {
            alg: self.alg,
            coeffs: self.coeffs.iter().map(S::negated).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        CompElem {
            alg: self.alg,
            coeffs: self.coeffs.iter().map(|c| c.times(s)).collect(),
        }
    }

    /// Cayley product, bilinear on the frozen table. Operands from different
    /// algebras are promoted along the inclusion chain.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (alg, a, b) = self.promote(rhs);
        let (a, b) = (a.as_ref().unwrap_or(self), b.as_ref().unwrap_or(rhs));
        let d = alg.dim();
        let mut out = vec![S::zero(); d];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (sign, k) = MUL_TABLE[i][j];
                let t = x.times(y);
                let k = k as usize;
                out[k] = if sign > 0 { out[k].plus(&t) } else { out[k].minus(&t) };
            }
        }
        CompElem { alg, coeffs: out }
    }

    /// `a_0 − Σ a_i f_i`.
    pub fn conj(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k == 0 { c.clone() } else { c.negated() })
            .collect();
        CompElem { alg: self.alg, coeffs }
    }

    /// Real part `½(u + ū)`, i.e. the `f_0` coefficient.
    pub fn re(&self) -> S {
        self.coeffs[0].clone()
    }

    /// Imaginary part `½(u − ū)`.
    pub fn im(&self) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = S::zero();
        out
    }

    /// `u·ū` as a scalar; equals `Σ a_i²` (not positive-definite over ℂ).
    pub fn cnorm(&self) -> S {
        self.coeffs.iter().fold(
            S::zero(),
            |acc, c| if c.is_zero() { acc } else { acc.plus(&c.times(c)) },
        )
    }

    /// Symmetric bilinear form `Re(u v̄) = Σ a_i b_i`, the polarization of
    /// [`CompElem::cnorm`] halved.
    pub fn dot(&self, rhs: &Self) -> S {
        self.coeffs.iter().zip(&rhs.coeffs).fold(S::zero(), |acc, (x, y)| {
            if x.is_zero() || y.is_zero() {
                acc
            } else {
                acc.plus(&x.times(y))
            }
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CompElem<T> {
        CompElem {
            alg: self.alg,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<S: Serialize> Serialize for CompElem<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de, S: Scalar + Deserialize<'de>> Deserialize<'de> for CompElem<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<S>::deserialize(d)?;
        let alg = CompAlgebra::from_dim(coeffs.len()).ok_or_else(|| {
            D::Error::custom(format!(
                "composition element must have 1, 2, 4 or 8 coefficients, got {}",
                coeffs.len()
            ))
        })?;
        Ok(CompElem { alg, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{random_scalar, seeded_rng, GaussRational, SeedRng};

    type E = CompElem<GaussRational>;

    fn f(alg: CompAlgebra, k: usize) -> E {
        E::basis(alg, k)
    }

    fn random(rng: &mut SeedRng, alg: CompAlgebra) -> E {
        E::from_coeffs(alg, (0..alg.dim()).map(|_| random_scalar(rng, 20)).collect())
    }

    #[test]
    fn frozen_table_matches_generator() {
        assert_eq!(cayley_dickson_table(), MUL_TABLE);
    }

    #[test]
    fn hand_checked_products() {
        use CompAlgebra::O;
        let cases: [(usize, usize, i64, usize); 10] = [
            (1, 2, 1, 3),
            (1, 4, 1, 5),
            (2, 4, 1, 6),
            (3, 4, 1, 7),
            (4, 1, -1, 5),
            (2, 1, -1, 3),
            (5, 5, -1, 0),
            (2, 3, 1, 1),
            (6, 4, -1, 2),
            (7, 7, -1, 0),
        ];
        for (i, j, sign, k) in cases {
            let expected = f(O, k).scale(&GaussRational::from_int(sign));
            assert_eq!(f(O, i).mul(&f(O, j)), expected, "f{i} f{j}");
        }
    }

    #[test]
    fn unit_and_anticommutation() {
        let mut rng = seeded_rng(1);
        let u = random(&mut rng, CompAlgebra::O);
        assert_eq!(E::one(CompAlgebra::O).mul(&u), u);
        for i in 1..8 {
            for j in 1..8 {
                if i != j {
                    let a = f(CompAlgebra::O, i).mul(&f(CompAlgebra::O, j));
                    let b = f(CompAlgebra::O, j).mul(&f(CompAlgebra::O, i));
                    assert_eq!(a, b.neg());
                }
            }
        }
    }

    #[test]
    fn conjugation() {
        let one_plus_f2 = E::one(CompAlgebra::H).add(&f(CompAlgebra::H, 2));
        assert_eq!(one_plus_f2.conj(), E::one(CompAlgebra::H).sub(&f(CompAlgebra::H, 2)));
        assert!(f(CompAlgebra::O, 7).re().is_zero());
        let lhs = f(CompAlgebra::O, 1).mul(&f(CompAlgebra::O, 4)).conj();
        let rhs = f(CompAlgebra::O, 4).conj().mul(&f(CompAlgebra::O, 1).conj());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, f(CompAlgebra::O, 5).neg());

        let mut rng = seeded_rng(2);
        for alg in CompAlgebra::ALL {
            for _ in 0..50 {
                let u = random(&mut rng, alg);
                let v = random(&mut rng, alg);
                assert_eq!(u.conj().conj(), u);
                assert_eq!(E::scalar(alg, u.re()).add(&u.im()), u);
                assert_eq!(u.mul(&v).conj(), v.conj().mul(&u.conj()));
                assert_eq!(u.mul(&v).re(), v.mul(&u).re());
            }
        }
    }

    #[test]
    fn norm_examples() {
        assert_eq!(f(CompAlgebra::O, 3).cnorm(), GaussRational::one());
        assert!(E::zero(CompAlgebra::O).cnorm().is_zero());
        let mut rng = seeded_rng(3);
        let u = random(&mut rng, CompAlgebra::O);
        assert_eq!(u.mul(&u.conj()), E::scalar(CompAlgebra::O, u.cnorm()));
    }

    #[test]
    fn composition_law_all_algebras() {
        let mut rng = seeded_rng(4);
        for alg in CompAlgebra::ALL {
            for _ in 0..40 {
                let u = random(&mut rng, alg);
                let v = random(&mut rng, alg);
                assert_eq!(u.mul(&v).cnorm(), &u.cnorm() * &v.cnorm());
            }
        }
    }

    #[test]
    fn associativity_breaks_only_for_octonions() {
        for alg in [CompAlgebra::R, CompAlgebra::C, CompAlgebra::H] {
            let d = alg.dim();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let (a, b, c) = (f(alg, i), f(alg, j), f(alg, k));
                        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                    }
                }
            }
        }
        let o = CompAlgebra::O;
        let lhs = f(o, 1).mul(&f(o, 2)).mul(&f(o, 4));
        let rhs = f(o, 1).mul(&f(o, 2).mul(&f(o, 4)));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn inclusion_is_zero_padding() {
        let q = f(CompAlgebra::H, 3);
        assert_eq!(q.embed(CompAlgebra::O), f(CompAlgebra::O, 3));
        // mixed product promotes
        let p = f(CompAlgebra::C, 1).mul(&f(CompAlgebra::O, 4));
        assert_eq!(p, f(CompAlgebra::O, 5));
    }

    #[test]
    fn json_is_coefficient_array() {
        let u = E::from_coeffs(
            CompAlgebra::C,
            vec![GaussRational::from_int(1), GaussRational::from_frac(-1, 2)],
        );
        let v = serde_json::to_value(&u).unwrap();
        assert_eq!(
            v,
            serde_json::json!([{"re": "1", "im": "0"}, {"re": "-1/2", "im": "0"}])
        );
        let back: E = serde_json::from_value(v).unwrap();
        assert_eq!(back, u);
        assert!(serde_json::from_str::<E>("[\"1\", \"2\", \"3\"]").is_err());
    }
}
