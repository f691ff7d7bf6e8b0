use std::collections::{BTreeMap, HashMap};

use crate::exact::{GaussRational, Scalar};

type G = GaussRational;

/// Sparse monomial: `(variable, exponent)` pairs sorted by variable.
pub type Mono = Vec<(u16, u8)>;

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push(b[j]);
            j += 1;
        } else {
            out.push((a[i].0, a[i].1 + b[j].1));
            i += 1;
            j += 1;
        }
    }
    out
}

/// Multivariate polynomial over ℚ(i), usable as a [`Scalar`] so the
/// Jordan-algebra code can be run symbolically.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, G>,
}

impl Poly {
    pub fn constant(c: G) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Poly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(i as u16, 1)], G::one());
        Poly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &G)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.iter().map(|&(_, e)| e as usize).sum::<usize>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn eval<S: Scalar>(&self, point: &[S]) -> S {
        self.terms.iter().fold(S::zero(), |acc, (m, c)| {
            let v = m.iter().fold(S::from_gauss(c), |t, &(var, e)| {
                (0..e).fold(t, |t, _| t.times(&point[var as usize]))
            });
            acc.plus(&v)
        })
    }

    fn add_term(terms: &mut BTreeMap<Mono, G>, m: Mono, c: G) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }
}

impl Scalar for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(G::one())
    }
    fn from_frac(num: i64, den: i64) -> Self {
        Poly::constant(G::from_frac(num, den))
    }
    fn from_gauss(g: &G) -> Self {
        Poly::constant(g.clone())
    }
    fn imag_unit() -> Self {
        Poly::constant(G::i())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Poly::add_term(&mut terms, m.clone(), c.clone());
        }
        Poly { terms }
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Poly::add_term(&mut terms, mono_mul(ma, mb), ca * cb);
            }
        }
        Poly { terms }
    }
    fn negated(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && m.is_empty() => Some(Poly::constant(c.inv()?)),
            _ => None,
        }
    }
}

/// All monomials of one degree in `n_vars` variables, dense exponent
/// vectors in graded lex order (`x_0^d` first).
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub n_vars: usize,
    pub degree: usize,
    pub monomials: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

/// `C(n, k)`, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Number of degree-`d` monomials in `n` variables.
pub fn monomial_count(n_vars: usize, degree: usize) -> usize {
    if n_vars == 0 {
        return usize::from(degree == 0);
    }
    binomial(n_vars + degree - 1, degree)
}

impl MonomialBasis {
    pub fn new(n_vars: usize, degree: usize) -> Self {
        fn rec(pos: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if pos + 1 == cur.len() {
                cur[pos] = left as u8;
                out.push(cur.clone());
                cur[pos] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e as u8;
                rec(pos + 1, left - e, cur, out);
            }
            cur[pos] = 0;
        }
        let mut monomials = Vec::with_capacity(monomial_count(n_vars, degree));
        if n_vars == 0 {
            if degree == 0 {
                monomials.push(Vec::new());
            }
        } else {
            rec(0, degree, &mut vec![0u8; n_vars], &mut monomials);
        }
        Self::from_monomials(n_vars, degree, monomials)
    }

    pub fn from_monomials(n_vars: usize, degree: usize, monomials: Vec<Vec<u8>>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis {
            n_vars,
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, exps: &[u8]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    /// Coefficient vector of a homogeneous polynomial of this degree.
    pub fn vector_of(&self, p: &Poly) -> PolyVector {
        let mut coeffs = vec![G::zero(); self.len()];
        for (m, c) in p.terms() {
            let mut dense = vec![0u8; self.n_vars];
            for &(v, e) in m {
                dense[v as usize] = e;
            }
            let k = self
                .index_of(&dense)
                .expect("polynomial is homogeneous of the basis degree");
            coeffs[k] = c.clone();
        }
        PolyVector { coeffs }
    }
}

/// A polynomial as coefficients on a [`MonomialBasis`].
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVector {
    pub coeffs: Vec<G>,
}

impl PolyVector {
    pub fn eval<S: Scalar>(&self, basis: &MonomialBasis, point: &[S]) -> S {
        basis.monomials.iter().zip(&self.coeffs).fold(S::zero(), |acc, (m, c)| {
            if c.is_zero() {
                return acc;
            }
            let v = m.iter().enumerate().fold(S::from_gauss(c), |t, (var, &e)| {
                (0..e).fold(t, |t, _| t.times(&point[var]))
            });
            acc.plus(&v)
        })
    }

    pub fn to_sparse(&self) -> Vec<(usize, G)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{random_scalar, seeded_rng};

    #[test]
    fn basis_size_and_order() {
        let b = MonomialBasis::new(4, 3);
        assert_eq!(b.len(), binomial(6, 3));
        assert_eq!(b.monomials[0], vec![3, 0, 0, 0]);
        assert_eq!(b.monomials.last().unwrap(), &vec![0, 0, 0, 3]);
        assert_eq!(MonomialBasis::new(18, 3).len(), 1140);
        assert_eq!(monomial_count(18, 6), 100_947);
        assert_eq!(MonomialBasis::new(3, 0).len(), 1);
    }

    #[test]
    fn poly_ring_laws() {
        let (x, y) = (Poly::var(0), Poly::var(1));
        let s = x.plus(&y);
        let sq = s.times(&s);
        let expect = x
            .times(&x)
            .plus(&x.times(&y).times(&Poly::from_int(2)))
            .plus(&y.times(&y));
        assert_eq!(sq, expect);
        assert!(s.minus(&s).is_zero());
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert!(x.try_inv().is_none());
    }

    #[test]
    fn vector_eval_matches_poly_eval() {
        let mut rng = seeded_rng(1);
        let vars: Vec<Poly> = (0..4).map(Poly::var).collect();
        let p = vars[0]
            .times(&vars[1])
            .times(&vars[3])
            .plus(&vars[2].times(&vars[2]).times(&vars[2]).times(&Poly::from_frac(-3, 2)));
        let basis = MonomialBasis::new(4, 3);
        let v = basis.vector_of(&p);
        let pt: Vec<G> = (0..4).map(|_| random_scalar(&mut rng, 50)).collect();
        assert_eq!(v.eval(&basis, &pt), p.eval(&pt));
    }
}
