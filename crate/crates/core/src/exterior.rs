//! The complexified exterior algebra of a real vector space with a fixed
//! basis, with basis monomials indexed by bitmasks: bit `i` set means the
//! covector `e^(i+1)` is present. Signs are computed by counting bit
//! transpositions, and canonical monomials are ascending-index.
//!
//! The same representation doubles as the exterior algebra of the vector
//! side (bivectors live there); which side a form lives on is determined by
//! how it is used.

use std::collections::BTreeMap;

use num::BigInt;
use num::traits::One;

use crate::error::Error;
use crate::scalar::{Rational, Scalar};

/// Sign incurred by merging two disjoint ascending monomials.
fn merge_sign(m1: u32, m2: u32) -> bool {
    // number of (i, j) with i in m1, j in m2, i > j
    let mut transpositions = 0u32;
    let mut rest = m2;
    while rest != 0 {
        let j = rest.trailing_zeros();
        transpositions += (m1 >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    transpositions % 2 == 1
}

/// Sparse element of the (complexified) exterior algebra. No zero
/// coefficients are stored, so derived equality is exact equality.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Form {
    terms: BTreeMap<u32, Scalar>,
}

impl Form {
    pub fn zero() -> Self {
        Form::default()
    }

    pub fn one() -> Self {
        Form::monomial(0, Scalar::one())
    }

    pub fn monomial(mask: u32, coeff: Scalar) -> Self {
        let mut f = Form::zero();
        f.add_term(mask, coeff);
        f
    }

    /// Degree-1 form from covector coordinates.
    pub fn from_covector(coords: &[Scalar]) -> Self {
        let mut f = Form::zero();
        for (i, c) in coords.iter().enumerate() {
            f.add_term(1 << i, c.clone());
        }
        f
    }

    pub fn add_term(&mut self, mask: u32, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coefficient(&self, mask: u32) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.terms
            .keys()
            .filter(|&&m| m != 0)
            .map(|m| 32 - m.leading_zeros())
            .max()
    }

    pub fn neg(&self) -> Form {
        self.scale(&-Scalar::one())
    }

    pub fn add(&self, other: &Form) -> Form {
        let mut f = self.clone();
        for (m, c) in other.terms() {
            f.add_term(m, c.clone());
        }
        f
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Scalar) -> Form {
        if k.is_zero() {
            return Form::zero();
        }
        let mut f = Form::zero();
        for (m, c) in self.terms() {
            f.add_term(m, c * k);
        }
        f
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                if m1 & m2 != 0 {
                    continue;
                }
                let mut c = c1 * c2;
                if merge_sign(m1, m2) {
                    c = -c;
                }
                out.add_term(m1 | m2, c);
            }
        }
        out
    }

    pub fn conj(&self) -> Form {
        let mut f = Form::zero();
        for (m, c) in self.terms() {
            f.add_term(m, c.conj());
        }
        f
    }

    /// Component of homogeneous degree `k`.
    pub fn degree_component(&self, k: u32) -> Form {
        let mut f = Form::zero();
        for (m, c) in self.terms() {
            if m.count_ones() == k {
                f.add_term(m, c.clone());
            }
        }
        f
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|m| m.count_ones()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// `Some(k)` when the form is nonzero and concentrated in one degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.degrees()[..] {
            [d] => Some(d),
            _ => None,
        }
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.degrees().first().copied()
    }

    /// Interior product with the basis vector `e_(k+1)` (0-based `k`), as a
    /// left antiderivation.
    pub fn contract_basis(&self, k: usize) -> Form {
        let bit = 1u32 << k;
        let mut out = Form::zero();
        for (m, c) in self.terms() {
            if m & bit == 0 {
                continue;
            }
            let below = (m & (bit - 1)).count_ones();
            let mut v = c.clone();
            if below % 2 == 1 {
                v = -v;
            }
            out.add_term(m & !bit, v);
        }
        out
    }

    /// Interior product with a (complex) vector given by coordinates.
    pub fn contract_vector(&self, x: &[Scalar]) -> Form {
        let mut out = Form::zero();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.contract_basis(i).scale(c));
        }
        out
    }

    /// Finite exponential of a form all of whose components have positive
    /// even degree.
    pub fn exp_wedge(&self) -> Result<Form, Error> {
        for d in self.degrees() {
            if d == 0 || d % 2 != 0 {
                return Err(Error::ExpArgument {
                    msg: format!("argument contains a degree-{d} component"),
                });
            }
        }
        let mut out = Form::one();
        let mut power = Form::one();
        let mut factorial = BigInt::one();
        let mut k = BigInt::one();
        loop {
            power = power.wedge(self);
            if power.is_zero() {
                break;
            }
            factorial *= &k;
            let inv = Scalar::from_rational(Rational::new(BigInt::one(), factorial.clone()));
            out = out.add(&power.scale(&inv));
            k += BigInt::one();
        }
        Ok(out)
    }

    /// Reversal sign: `(-1)^(l(l-1)/2)` on the degree-`l` component.
    pub fn reversal(&self) -> Form {
        let mut out = Form::zero();
        for (m, c) in self.terms() {
            let l = m.count_ones();
            let mut v = c.clone();
            if (l * (l.saturating_sub(1)) / 2) % 2 == 1 {
                v = -v;
            }
            out.add_term(m, v);
        }
        out
    }

    /// Dense coordinates in the full `2^dim2n`-dimensional ambient space.
    pub fn to_dense(&self, dim2n: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 1 << dim2n];
        for (m, c) in self.terms() {
            v[m as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[Scalar]) -> Form {
        let mut f = Form::zero();
        for (m, c) in v.iter().enumerate() {
            f.add_term(m as u32, c.clone());
        }
        f
    }
}

/// Ascending list of degree-`k` basis masks at the given dimension.
pub fn masks_of_degree(dim2n: usize, k: u32) -> Vec<u32> {
    (0u32..(1 << dim2n)).filter(|m| m.count_ones() == k).collect()
}

/// An invariant section of `(T + T*) (x) C`: a vector part and a covector
/// part over the scalar field.
#[derive(Clone, Debug, PartialEq)]
pub struct GVector {
    pub vec: Vec<Scalar>,
    pub covec: Vec<Scalar>,
}

impl GVector {
    pub fn new(vec: Vec<Scalar>, covec: Vec<Scalar>) -> Self {
        assert_eq!(vec.len(), covec.len());
        GVector { vec, covec }
    }

    pub fn zero(dim: usize) -> Self {
        GVector { vec: vec![Scalar::zero(); dim], covec: vec![Scalar::zero(); dim] }
    }

    pub fn basis_vector(dim: usize, i: usize) -> Self {
        let mut g = GVector::zero(dim);
        g.vec[i] = Scalar::one();
        g
    }

    pub fn basis_covector(dim: usize, i: usize) -> Self {
        let mut g = GVector::zero(dim);
        g.covec[i] = Scalar::one();
        g
    }

    pub fn dim(&self) -> usize {
        self.vec.len()
    }

    pub fn conj(&self) -> GVector {
        GVector {
            vec: self.vec.iter().map(Scalar::conj).collect(),
            covec: self.covec.iter().map(Scalar::conj).collect(),
        }
    }

    pub fn add(&self, other: &GVector) -> GVector {
        GVector {
            vec: self.vec.iter().zip(&other.vec).map(|(a, b)| a.clone() + b).collect(),
            covec: self.covec.iter().zip(&other.covec).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> GVector {
        GVector {
            vec: self.vec.iter().map(|a| a * k).collect(),
            covec: self.covec.iter().map(|a| a * k).collect(),
        }
    }

    /// Coordinates in `(T + T*)`, vectors first.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = self.vec.clone();
        v.extend(self.covec.iter().cloned());
        v
    }

    pub fn from_dense(coords: &[Scalar]) -> GVector {
        let n = coords.len() / 2;
        GVector { vec: coords[..n].to_vec(), covec: coords[n..].to_vec() }
    }

    /// Clifford action `(X + xi) . phi = i_X phi + xi ^ phi`.
    pub fn clifford(&self, phi: &Form) -> Form {
        let contracted = phi.contract_vector(&self.vec);
        let wedged = Form::from_covector(&self.covec).wedge(phi);
        contracted.add(&wedged)
    }

    /// The natural symmetric pairing `<X+xi, Y+eta> = (xi(Y) + eta(X))/2`.
    pub fn pairing(&self, other: &GVector) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.dim() {
            acc += &self.covec[i] * &other.vec[i];
            acc += &other.covec[i] * &self.vec[i];
        }
        acc * Scalar::from_ratio(1, 2)
    }
}

/// Sparse bivector, coefficients over pairs `i < j` of vector indices
/// (0-based).
///
/// Contraction convention: the pair `(i, j)` acts as `i_(e_j) o i_(e_i)`,
/// i.e. the first factor of `e_i ^ e_j` is contracted first. The opposite
/// order differs by a global sign; this one is the order under which the
/// displayed beta-transform identities of the reproduced computations come
/// out exactly.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Bivector {
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl Bivector {
    pub fn zero() -> Self {
        Bivector::default()
    }

    pub fn add_term(&mut self, i: usize, j: usize, coeff: Scalar) {
        if coeff.is_zero() || i == j {
            return;
        }
        let (i, j, coeff) = if i < j { (i, j, coeff) } else { (j, i, -coeff) };
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pair(i: usize, j: usize) -> Self {
        let mut b = Bivector::zero();
        b.add_term(i, j, Scalar::one());
        b
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    pub fn neg(&self) -> Bivector {
        let mut b = Bivector::zero();
        for ((i, j), c) in self.terms() {
            b.add_term(i, j, -c.clone());
        }
        b
    }

    /// Reinterpret a homogeneous degree-2 element of the vector-side
    /// exterior algebra.
    pub fn from_vector_form(f: &Form) -> Result<Self, Error> {
        let mut b = Bivector::zero();
        for (m, c) in f.terms() {
            if m.count_ones() != 2 {
                return Err(Error::DimensionMismatch {
                    msg: "bivector expression must be homogeneous of degree 2".into(),
                });
            }
            let i = m.trailing_zeros() as usize;
            let j = (31 - m.leading_zeros()) as usize;
            b.add_term(i, j, c.clone());
        }
        Ok(b)
    }

    pub fn contract(&self, phi: &Form) -> Form {
        let mut out = Form::zero();
        for ((i, j), c) in self.terms() {
            out = out.add(&phi.contract_basis(i).contract_basis(j).scale(c));
        }
        out
    }

    /// `exp(i_beta)` applied to a form; terminates because contraction
    /// strictly lowers degree.
    pub fn exp_contract(&self, phi: &Form) -> Form {
        let mut out = phi.clone();
        let mut power = phi.clone();
        let mut factorial = BigInt::one();
        let mut k = BigInt::one();
        loop {
            power = self.contract(&power);
            if power.is_zero() {
                break;
            }
            factorial *= &k;
            let inv = Scalar::from_rational(Rational::new(BigInt::one(), factorial.clone()));
            out = out.add(&power.scale(&inv));
            k += BigInt::one();
        }
        out
    }
}

/// Mukai pairing `(a, b) = (sigma(a) ^ b)_top` at the given dimension.
pub fn mukai(a: &Form, b: &Form, dim2n: usize) -> Scalar {
    let top = (1u32 << dim2n) - 1;
    a.reversal().wedge(b).coefficient(top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_form;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn f(text: &str) -> Form {
        parse_form(text, 6, None).unwrap()
    }

    fn rand_form(rng: &mut StdRng, dim: usize, max_terms: usize) -> Form {
        let mut form = Form::zero();
        for _ in 0..rng.gen_range(0..=max_terms) {
            let mask = rng.gen_range(0..(1u32 << dim));
            let c = Scalar::new(
                crate::scalar::rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
                crate::scalar::rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
            );
            form.add_term(mask, c);
        }
        form
    }

    #[test]
    fn wedge_basics() {
        assert_eq!(f("e1 ^ e2"), f("e12"));
        assert_eq!(f("e2 ^ e1"), f("-e12"));
        assert_eq!(f("(e36 + e45) ^ (e36 + e45)"), f("2*e3456"));
    }

    #[test]
    fn wedge_assoc_and_graded_comm() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..40 {
            let a = rand_form(&mut rng, 6, 3);
            let b = rand_form(&mut rng, 6, 3);
            let c = rand_form(&mut rng, 6, 3);
            assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        }
        // graded commutativity on homogeneous monomials
        for _ in 0..60 {
            let m1 = rng.gen_range(0..64u32);
            let m2 = rng.gen_range(0..64u32);
            let a = Form::monomial(m1, Scalar::one());
            let b = Form::monomial(m2, Scalar::one());
            let sign = if (m1.count_ones() * m2.count_ones()) % 2 == 1 {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            assert_eq!(a.wedge(&b), b.wedge(&a).scale(&sign));
        }
    }

    #[test]
    fn contraction_is_an_antiderivation() {
        assert_eq!(f("e12").contract_basis(0), f("e2"));
        assert_eq!(f("e12").contract_basis(2), Form::zero());
        // two-step sign
        assert_eq!(f("e12").contract_basis(1).contract_basis(0), f("-1"));
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..40 {
            let a = rand_form(&mut rng, 6, 3);
            let b = rand_form(&mut rng, 6, 3);
            let k = rng.gen_range(0..6);
            // check on homogeneous components of a
            for d in a.degrees() {
                let ad = a.degree_component(d);
                let lhs = ad.wedge(&b).contract_basis(k);
                let mut rhs = ad.contract_basis(k).wedge(&b);
                let term = ad.wedge(&b.contract_basis(k));
                rhs = if d % 2 == 1 { rhs.sub(&term) } else { rhs.add(&term) };
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bivector_contraction_convention() {
        // The pair (3,5) contracts e_3 first: i_(e5) i_(e3) e^35 = +1.
        // (The opposite composition order would give -1; this order is the
        // one under which the beta-transform reproductions hold exactly.)
        let beta = Bivector::pair(2, 4);
        assert_eq!(beta.contract(&f("e35")), f("1"));
        assert_eq!(beta.contract(&f("e1")), Form::zero());
    }

    #[test]
    fn bivector_exp_is_invertible() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..20 {
            let mut beta = Bivector::zero();
            for _ in 0..rng.gen_range(1..=3) {
                beta.add_term(
                    rng.gen_range(0..6),
                    rng.gen_range(0..6),
                    Scalar::from_int(rng.gen_range(-2..=2)),
                );
            }
            let phi = rand_form(&mut rng, 6, 4);
            assert_eq!(beta.exp_contract(&beta.neg().exp_contract(&phi)), phi);
            // degree-1 forms are untouched
            let one_form = f("e1 - 2*e4");
            assert_eq!(beta.exp_contract(&one_form), one_form);
        }
    }

    #[test]
    fn clifford_action_examples() {
        let e1 = GVector::basis_vector(6, 0);
        assert_eq!(e1.clifford(&f("e12")), f("e2"));
        let up1 = GVector::basis_covector(6, 0);
        assert_eq!(up1.clifford(&f("1")), f("e1"));
        let mut v = GVector::basis_vector(6, 0);
        v.covec[1] = Scalar::one(); // e_1 + e^2
        assert_eq!(v.clifford(&f("e1")), f("1 - e12"));
    }

    #[test]
    fn clifford_square_is_the_pairing() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..40 {
            let mut v = GVector::zero(6);
            for i in 0..6 {
                v.vec[i] = Scalar::new(
                    crate::scalar::rat(rng.gen_range(-2..=2), 1),
                    crate::scalar::rat(rng.gen_range(-2..=2), 1),
                );
                v.covec[i] = Scalar::new(
                    crate::scalar::rat(rng.gen_range(-2..=2), 1),
                    crate::scalar::rat(rng.gen_range(-2..=2), 1),
                );
            }
            let phi = rand_form(&mut rng, 6, 4);
            let vv = v.clifford(&v.clifford(&phi));
            assert_eq!(vv, phi.scale(&v.pairing(&v)));
        }
    }

    #[test]
    fn pairing_examples() {
        let e1 = GVector::basis_vector(6, 0);
        let up1 = GVector::basis_covector(6, 0);
        let both = e1.add(&up1);
        assert_eq!(both.pairing(&both), Scalar::one());
        assert_eq!(e1.pairing(&GVector::basis_vector(6, 1)), Scalar::zero());
        assert_eq!(e1.pairing(&up1), Scalar::from_ratio(1, 2));
    }

    #[test]
    fn mukai_examples_and_antisymmetry() {
        assert_eq!(mukai(&f("1"), &f("e123456"), 6), Scalar::one());
        assert_eq!(mukai(&f("e12"), &f("e3456"), 6), -Scalar::one());
        let mut rng = StdRng::seed_from_u64(53);
        for _ in 0..40 {
            let a = rand_form(&mut rng, 6, 4);
            let b = rand_form(&mut rng, 6, 4);
            assert_eq!(mukai(&a, &b, 6), -mukai(&b, &a, 6));
        }
    }

    #[test]
    fn exp_wedge_rejects_bad_arguments() {
        assert!(f("e1").exp_wedge().is_err());
        assert!(f("1 + e12").exp_wedge().is_err());
        assert!(f("e123").exp_wedge().is_err());
        assert!(f("e12 + e3456").exp_wedge().is_ok());
    }
}
