//! Concrete matrix models of `V0`, `V1`, `V2` and exact finite group
//! actions built from elementary matrices.
//!
//! * `V0`: symmetric 3×3 matrices, `g·X = g X gᵗ`.
//! * `V1`: all 3×3 matrices (through [`split_iso`]),
//!   `(g1, g2)·X = g1 X g2⁻¹`, plus the outer involution `X ↦ Xᵗ`.
//! * `V2`: Hermitian quaternionic matrices, `g·X = g X ḡᵗ`.

use std::fmt::Debug;

use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::comp::{CompAlgebra, CompElem};
use crate::error::{Error, Result};
use crate::exact::{random_scalar, GaussRational, Scalar, SeedRng};
use crate::jordan::HermMat;

/// Entry type of a [`Mat3`]: a scalar ring, or complexified quaternions.
pub trait MatEntry: Clone + PartialEq + Debug + Send + Sync {
    type Base: Scalar;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_base(s: Self::Base) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Entry involution used by `ḡᵗ`; identity on scalars.
    fn conj(&self) -> Self;
    /// Scalar part; the summand of the reduced trace.
    fn re_part(&self) -> Self::Base;
    fn is_zero(&self) -> bool;
}

impl<S: Scalar> MatEntry for S {
    type Base = S;
    fn zero() -> Self {
        S::zero()
    }
    fn one() -> Self {
        S::one()
    }
    fn from_base(s: S) -> Self {
        s
    }
    fn add(&self, rhs: &Self) -> Self {
        self.plus(rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.minus(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.times(rhs)
    }
    fn neg(&self) -> Self {
        self.negated()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn re_part(&self) -> S {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

/// Quaternion entries; zero and one are created in `H_C`.
impl<S: Scalar> MatEntry for CompElem<S> {
    type Base = S;
    fn zero() -> Self {
        CompElem::zero(CompAlgebra::H)
    }
    fn one() -> Self {
        CompElem::one(CompAlgebra::H)
    }
    fn from_base(s: S) -> Self {
        CompElem::scalar(CompAlgebra::H, s)
    }
    fn add(&self, rhs: &Self) -> Self {
        CompElem::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        CompElem::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        CompElem::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        CompElem::neg(self)
    }
    fn conj(&self) -> Self {
        CompElem::conj(self)
    }
    fn re_part(&self) -> S {
        self.re()
    }
    fn is_zero(&self) -> bool {
        CompElem::is_zero(self)
    }
}

/// A 3×3 matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3<E> {
    pub m: [[E; 3]; 3],
}

impl<E: MatEntry> Mat3<E> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut rows: Vec<[E; 3]> = Vec::with_capacity(3);
        for i in 0..3 {
            rows.push([f(i, 0), f(i, 1), f(i, 2)]);
        }
        let [r0, r1, r2]: [[E; 3]; 3] = rows.try_into().expect("three rows");
        Mat3 { m: [r0, r1, r2] }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| E::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { E::one() } else { E::zero() })
    }

    pub fn diagonal(d: [E; 3]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { E::zero() })
    }

    /// `I + λ E_ij` with 1-based indices.
    pub fn elementary(i: usize, j: usize, lambda: E) -> Result<Self> {
        if !(1..=3).contains(&i) || !(1..=3).contains(&j) || i == j {
            return Err(Error::BadIndex { i, j });
        }
        let mut g = Self::identity();
        g.m[i - 1][j - 1] = lambda;
        Ok(g)
    }

    /// Entry `(i, j)`, 1-based.
    pub fn at(&self, i: usize, j: usize) -> &E {
        &self.m[i - 1][j - 1]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| (0..3).fold(E::zero(), |acc, k| acc.add(&self.m[i][k].mul(&rhs.m[k][j]))))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j].add(&rhs.m[i][j]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j].sub(&rhs.m[i][j]))
    }

    pub fn scale(&self, k: &E::Base) -> Self {
        let k = E::from_base(k.clone());
        Self::from_fn(|i, j| k.mul(&self.m[i][j]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].clone())
    }

    /// `ḡᵗ`.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].conj())
    }

    pub fn trace(&self) -> E {
        self.m[0][0].add(&self.m[1][1]).add(&self.m[2][2])
    }

    /// `Σ re(m_ii)`.
    pub fn reduced_trace(&self) -> E::Base {
        self.m[0][0]
            .re_part()
            .plus(&self.m[1][1].re_part())
            .plus(&self.m[2][2].re_part())
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(E::is_zero)
    }

    pub fn map<F: MatEntry>(&self, f: impl Fn(&E) -> F) -> Mat3<F> {
        Mat3::from_fn(|i, j| f(&self.m[i][j]))
    }
}

impl<S: Scalar> Mat3<S> {
    pub fn det(&self) -> S {
        let m = &self.m;
        let minor = |a: usize, b: usize| m[1][a].times(&m[2][b]).minus(&m[1][b].times(&m[2][a]));
        m[0][0]
            .times(&minor(1, 2))
            .minus(&m[0][1].times(&minor(0, 2)))
            .plus(&m[0][2].times(&minor(0, 1)))
    }

    /// Classical adjugate: `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Self {
        let m = &self.m;
        Self::from_fn(|i, j| {
            // cofactor (j, i)
            let r: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let c: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let minor = m[r[0]][c[0]]
                .times(&m[r[1]][c[1]])
                .minus(&m[r[0]][c[1]].times(&m[r[1]][c[0]]));
            if (i + j) % 2 == 0 {
                minor
            } else {
                minor.negated()
            }
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.det().try_inv().ok_or(Error::SingularMatrix)?;
        Ok(self.adjugate().scale(&inv))
    }
}

/// The isomorphism `H3(C_C) → Mat(3)` induced by `u0 + u1 f1 ↦ u0 + i u1`
/// on entries.
///
/// Transposition in `Mat(3)` corresponds to negating every `f1`-coordinate.
pub fn split_iso<S: Scalar>(x: &HermMat<S>) -> Result<Mat3<S>> {
    if x.algebra() != CompAlgebra::C {
        return Err(Error::WrongAlgebra {
            expected: "C".into(),
            got: x.algebra().tag().into(),
        });
    }
    let i = S::imag_unit();
    let phi = |u: &CompElem<S>| u.coeff(0).plus(&i.times(u.coeff(1)));
    let full = x.to_full();
    Ok(Mat3::from_fn(|r, c| phi(&full[r][c])))
}

/// Inverse of [`split_iso`].
pub fn split_iso_inv<S: Scalar>(a: &Mat3<S>) -> HermMat<S> {
    let half = S::from_frac(1, 2);
    // i⁻¹ = −i
    let minus_half_i = S::imag_unit().times(&half).negated();
    let part = |lower: &S, upper: &S| {
        let u0 = lower.plus(upper).times(&half);
        let u1 = lower.minus(upper).times(&minus_half_i);
        CompElem::from_coeffs(CompAlgebra::C, vec![u0, u1])
    };
    HermMat::new(
        [a.m[0][0].clone(), a.m[1][1].clone(), a.m[2][2].clone()],
        part(&a.m[1][0], &a.m[0][1]),
        part(&a.m[2][0], &a.m[0][2]),
        part(&a.m[1][2], &a.m[2][1]),
    )
}

/// Reads a symmetric matrix of scalars from a `V0` point.
pub fn sym_matrix<S: Scalar>(x: &HermMat<S>) -> Mat3<S> {
    let full = x.to_full();
    Mat3::from_fn(|i, j| full[i][j].coeff(0).clone())
}

pub fn from_sym_matrix<S: Scalar>(a: &Mat3<S>) -> HermMat<S> {
    let e = |s: &S| CompElem::scalar(CompAlgebra::R, s.clone());
    HermMat::new(
        [a.m[0][0].clone(), a.m[1][1].clone(), a.m[2][2].clone()],
        e(&a.m[1][0]),
        e(&a.m[2][0]),
        e(&a.m[1][2]),
    )
}

/// The quaternionic Hermitian matrix of a `V2` point.
pub fn quat_matrix<S: Scalar>(x: &HermMat<S>) -> Mat3<CompElem<S>> {
    let full = x.to_full();
    Mat3::from_fn(|i, j| full[i][j].embed(CompAlgebra::H))
}

pub fn from_quat_matrix<S: Scalar>(a: &Mat3<CompElem<S>>) -> HermMat<S> {
    HermMat::new(
        [a.m[0][0].re(), a.m[1][1].re(), a.m[2][2].re()],
        a.m[1][0].clone(),
        a.m[2][0].clone(),
        a.m[1][2].clone(),
    )
}

/// Which concrete model a group word acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Model {
    V0,
    V1,
    V2,
}

impl Model {
    pub fn algebra(self) -> CompAlgebra {
        match self {
            Model::V0 => CompAlgebra::R,
            Model::V1 => CompAlgebra::C,
            Model::V2 => CompAlgebra::H,
        }
    }

    pub fn for_algebra(alg: CompAlgebra) -> Result<Model> {
        match alg {
            CompAlgebra::R => Ok(Model::V0),
            CompAlgebra::C => Ok(Model::V1),
            CompAlgebra::H => Ok(Model::V2),
            CompAlgebra::O => Err(Error::ModelMismatch("V3 has no finite matrix model here".into())),
        }
    }
}

/// Which factor of `SL3 × SL3` an elementary token belongs to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    #[default]
    Left,
    Right,
}

/// One letter of a group word.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Token {
    /// `I + λ E_ij`; `λ` is quaternionic for `V2`, scalar otherwise.
    Elem {
        i: usize,
        j: usize,
        #[serde(with = "lambda_json")]
        lambda: CompElem<GaussRational>,
        #[serde(default, skip_serializing_if = "is_left")]
        side: Side,
    },
    /// The outer component `X ↦ Xᵗ` of the `V1` group.
    Transpose,
}

fn is_left(s: &Side) -> bool {
    *s == Side::Left
}

mod lambda_json {
    use super::*;

    pub fn serialize<Se: Serializer>(l: &CompElem<GaussRational>, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        if l.algebra() == CompAlgebra::R {
            l.coeff(0).serialize(s)
        } else {
            l.serialize(s)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<CompElem<GaussRational>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Either {
            Quat(Vec<GaussRational>),
            Scalar(GaussRational),
        }
        match Either::deserialize(d)? {
            Either::Scalar(g) => Ok(CompElem::scalar(CompAlgebra::R, g)),
            Either::Quat(v) => {
                let alg = CompAlgebra::from_dim(v.len())
                    .ok_or_else(|| D::Error::custom("lambda must have 1, 2, 4 or 8 coefficients"))?;
                Ok(CompElem::from_coeffs(alg, v))
            }
        }
    }
}

impl Token {
    pub fn elem(i: usize, j: usize, lambda: GaussRational) -> Result<Token> {
        Self::check_index(i, j)?;
        Ok(Token::Elem {
            i,
            j,
            lambda: CompElem::scalar(CompAlgebra::R, lambda),
            side: Side::Left,
        })
    }

    pub fn elem_right(i: usize, j: usize, lambda: GaussRational) -> Result<Token> {
        Self::check_index(i, j)?;
        Ok(Token::Elem {
            i,
            j,
            lambda: CompElem::scalar(CompAlgebra::R, lambda),
            side: Side::Right,
        })
    }

    pub fn elem_quat(i: usize, j: usize, lambda: CompElem<GaussRational>) -> Result<Token> {
        Self::check_index(i, j)?;
        Ok(Token::Elem {
            i,
            j,
            lambda,
            side: Side::Left,
        })
    }

    fn check_index(i: usize, j: usize) -> Result<()> {
        if !(1..=3).contains(&i) || !(1..=3).contains(&j) || i == j {
            return Err(Error::BadIndex { i, j });
        }
        Ok(())
    }

    pub fn inverse(&self) -> Token {
        match self {
            Token::Elem { i, j, lambda, side } => Token::Elem {
                i: *i,
                j: *j,
                lambda: lambda.neg(),
                side: *side,
            },
            Token::Transpose => Token::Transpose,
        }
    }
}

/// A group element as a word `t_1 t_2 … t_k`, acting right-to-left.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupElem {
    pub model: Model,
    pub word: Vec<Token>,
}

impl GroupElem {
    pub fn identity(model: Model) -> Self {
        GroupElem {
            model,
            word: Vec::new(),
        }
    }

    pub fn new(model: Model, word: Vec<Token>) -> Result<Self> {
        let g = GroupElem { model, word };
        g.validate()?;
        Ok(g)
    }

    /// The single elementary matrix `I + λ E_ij`.
    pub fn elementary(model: Model, i: usize, j: usize, lambda: GaussRational) -> Result<Self> {
        Self::new(model, vec![Token::elem(i, j, lambda)?])
    }

    pub fn transpose() -> Self {
        GroupElem {
            model: Model::V1,
            word: vec![Token::Transpose],
        }
    }

    pub fn validate(&self) -> Result<()> {
        for t in &self.word {
            match t {
                Token::Elem { i, j, lambda, side } => {
                    Token::check_index(*i, *j)?;
                    let ok = match self.model {
                        Model::V0 => lambda.algebra() == CompAlgebra::R && *side == Side::Left,
                        Model::V1 => lambda.algebra() == CompAlgebra::R,
                        Model::V2 => lambda.algebra() <= CompAlgebra::H && *side == Side::Left,
                    };
                    if !ok {
                        return Err(Error::ModelMismatch(format!(
                            "token {t:?} is not an element of the {:?} group",
                            self.model
                        )));
                    }
                }
                Token::Transpose if self.model != Model::V1 => {
                    return Err(Error::ModelMismatch("transpose token only exists for V1".into()));
                }
                Token::Transpose => {}
            }
        }
        Ok(())
    }

    /// `self · other`.
    pub fn compose(&self, other: &GroupElem) -> Result<GroupElem> {
        if self.model != other.model {
            return Err(Error::ModelMismatch(format!(
                "cannot compose {:?} with {:?}",
                self.model, other.model
            )));
        }
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        Ok(GroupElem {
            model: self.model,
            word,
        })
    }

    pub fn inverse(&self) -> GroupElem {
        GroupElem {
            model: self.model,
            word: self.word.iter().rev().map(Token::inverse).collect(),
        }
    }

    /// Whether the word lies in the identity component (even number of
    /// transposes).
    pub fn is_inner(&self) -> bool {
        self.word.iter().filter(|t| matches!(t, Token::Transpose)).count() % 2 == 0
    }

    /// The matrices `(g1, g2)` of an inner `V0`/`V1` word, so that the
    /// action is `g1 X g2⁻¹` (`V1`) or `g1 X g1ᵗ` (`V0`).
    pub fn matrices(&self) -> Result<(Mat3<GaussRational>, Mat3<GaussRational>)> {
        if self.model == Model::V2 || !self.is_inner() {
            return Err(Error::ModelMismatch("matrices() needs an inner V0 or V1 word".into()));
        }
        let (mut g1, mut g2) = (Mat3::identity(), Mat3::identity());
        let mut flipped = false;
        for t in &self.word {
            match t {
                Token::Transpose => flipped = !flipped,
                Token::Elem { i, j, lambda, side } => {
                    let e = Mat3::elementary(*i, *j, lambda.coeff(0).clone())?;
                    // Past an odd number of transposes, X ↦ g1 X g2⁻¹ conjugates
                    // to X ↦ g2⁻ᵗ X g1ᵗ, so the roles swap.
                    match (side, flipped) {
                        (Side::Left, false) => g1 = g1.mul(&e),
                        (Side::Right, false) => g2 = g2.mul(&e),
                        (Side::Left, true) => g2 = g2.mul(&e.inverse()?.transpose()),
                        (Side::Right, true) => g1 = g1.mul(&e.inverse()?.transpose()),
                    }
                }
            }
        }
        Ok((g1, g2))
    }

    /// Acts on a `V1` point in the `Mat(3)` model.
    pub fn act_mat<S: Scalar>(&self, x: &Mat3<S>) -> Result<Mat3<S>> {
        if self.model != Model::V1 {
            return Err(Error::ModelMismatch(format!(
                "{:?} words do not act on Mat(3)",
                self.model
            )));
        }
        let mut out = x.clone();
        for t in self.word.iter().rev() {
            out = match t {
                Token::Transpose => out.transpose(),
                Token::Elem { i, j, lambda, side } => {
                    let l = S::from_gauss(lambda.coeff(0));
                    match side {
                        Side::Left => Mat3::elementary(*i, *j, l)?.mul(&out),
                        Side::Right => out.mul(&Mat3::elementary(*i, *j, l.negated())?),
                    }
                }
            };
        }
        Ok(out)
    }

    /// Acts on a point of `H3(F_C)` whose algebra matches the model.
    pub fn act<S: Scalar>(&self, x: &HermMat<S>) -> Result<HermMat<S>> {
        if x.algebra() != self.model.algebra() {
            return Err(Error::ModelMismatch(format!(
                "{:?} words act on {}, got a point of {}",
                self.model,
                self.model.algebra().jordan_name(),
                x.algebra().jordan_name()
            )));
        }
        match self.model {
            Model::V0 => {
                let mut a = sym_matrix(x);
                for t in self.word.iter().rev() {
                    if let Token::Elem { i, j, lambda, .. } = t {
                        let g = Mat3::elementary(*i, *j, S::from_gauss(lambda.coeff(0)))?;
                        a = g.mul(&a).mul(&g.transpose());
                    }
                }
                Ok(from_sym_matrix(&a))
            }
            Model::V1 => Ok(split_iso_inv(&self.act_mat(&split_iso(x)?)?)),
            Model::V2 => {
                let mut a = quat_matrix(x);
                for t in self.word.iter().rev() {
                    if let Token::Elem { i, j, lambda, .. } = t {
                        let l = lambda.map(S::from_gauss).embed(CompAlgebra::H);
                        let g = Mat3::elementary(*i, *j, l)?;
                        a = g.mul(&a).mul(&g.conj_transpose());
                    }
                }
                Ok(from_quat_matrix(&a))
            }
        }
    }

    pub fn act_tuple<S: Scalar>(&self, xs: &[HermMat<S>]) -> Result<Vec<HermMat<S>>> {
        xs.iter().map(|x| self.act(x)).collect()
    }

    /// A random word of `len` elementary tokens with parameters of the
    /// given height. `V1` words mix both sides; `V2` parameters are
    /// quaternions.
    pub fn random(model: Model, rng: &mut SeedRng, len: usize, height: u64) -> GroupElem {
        let word = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..=3);
                let j = (i + rng.gen_range(0..2)) % 3 + 1;
                let lambda = match model {
                    Model::V2 => {
                        CompElem::from_coeffs(CompAlgebra::H, (0..4).map(|_| random_scalar(rng, height)).collect())
                    }
                    _ => CompElem::scalar(CompAlgebra::R, random_scalar(rng, height)),
                };
                let side = if model == Model::V1 && rng.gen_bool(0.5) {
                    Side::Right
                } else {
                    Side::Left
                };
                Token::Elem { i, j, lambda, side }
            })
            .collect();
        GroupElem { model, word }
    }
}

/// `(x, y, z) ↦ (g11 x + g12 y + g13 z, g21 x + …, g31 x + …)`.
pub fn gl3_mix<S: Scalar>(g: &Mat3<GaussRational>, t: &[HermMat<S>; 3]) -> Result<[HermMat<S>; 3]> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(std::array::from_fn(|row| {
        (0..3).fold(HermMat::zero(t[0].algebra()), |acc, k| {
            acc.add(&t[k].scale(&S::from_gauss(&g.m[row][k])))
        })
    }))
}
