use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;
use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per flat input coordinate.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// `x1`, then `x2`, and so on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { degree, exponents }
    }

    pub fn one(dim: usize) -> Self {
        Monomial {
            degree: 0,
            exponents: vec![0; dim],
        }
    }

    pub fn var(dim: usize, index: usize) -> Self {
        let mut exponents = vec![0; dim];
        exponents[index] = 1;
        Monomial {
            degree: 1,
            exponents,
        }
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exponents[index]
    }

    fn product(&self, other: &Monomial) -> Monomial {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exponents,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

/// A polynomial in `dim` variables with exact rational coefficients.
///
/// The term map never stores a zero coefficient, so derived equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, value: Scalar) -> Self {
        let mut p = Polynomial::zero(dim);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(dim), value);
        }
        p
    }

    /// The coordinate function `x_{index+1}`.
    pub fn var(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let mut p = Polynomial::zero(dim);
        p.terms.insert(Monomial::var(dim, index), Scalar::one());
        Ok(p)
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Scalar, Vec<u32>)>,
    {
        let mut p = Polynomial::zero(dim);
        for (coeff, exponents) in terms {
            if exponents.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: exponents.len(),
                });
            }
            p.add_term(Monomial::new(exponents), coeff);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Scalar {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn uses_var(&self, index: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(index) > 0)
    }

    fn add_term(&mut self, monomial: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let coeff = ca * cb;
                acc.entry(ma.product(mb))
                    .and_modify(|c| *c += &coeff)
                    .or_insert(coeff);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Polynomial {
            dim: self.dim,
            terms,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.dim);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect();
        Polynomial {
            dim: self.dim,
            terms,
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.dim, Scalar::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Symbolic partial derivative with respect to `x_{index+1}`.
    pub fn partial(&self, index: usize) -> Result<Polynomial> {
        if index >= self.dim {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.dim,
            });
        }
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e == 0 {
                continue;
            }
            let mut exponents = m.exponents.clone();
            exponents[index] -= 1;
            out.add_term(Monomial::new(exponents), c * &Scalar::from(e));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: point.len(),
            });
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.exponents) {
                if e > 0 {
                    term *= &x.pow(e);
                }
            }
            total += &term;
        }
        Ok(total)
    }

    /// Substitutes `values[i]` for `x_{i+1}`. All values share one dimension,
    /// which becomes the dimension of the result.
    pub fn substitute(&self, values: &[Polynomial], target_dim: usize) -> Result<Polynomial> {
        if values.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| v.dim != target_dim) {
            return Err(Error::DimensionMismatch {
                expected: target_dim,
                found: v.dim,
            });
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target_dim);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target_dim, c.clone());
            for (i, &e) in m.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = powers.entry((i, e)).or_insert_with(|| values[i].pow(e));
                term = &term * power;
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Renames variables: `x_{i+1}` becomes `x_{mapping[i]+1}` in a space of
    /// `target_dim` variables, or zero when `mapping[i]` is `None`.
    pub fn remap(&self, mapping: &[Option<usize>], target_dim: usize) -> Result<Polynomial> {
        if mapping.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: mapping.len(),
            });
        }
        if let Some(&bad) = mapping.iter().flatten().find(|&&j| j >= target_dim) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                dim: target_dim,
            });
        }
        let mut out = Polynomial::zero(target_dim);
        'terms: for (m, c) in &self.terms {
            let mut exponents = vec![0; target_dim];
            for (i, &e) in m.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match mapping[i] {
                    Some(j) => exponents[j] += e,
                    None => continue 'terms,
                }
            }
            out.add_term(Monomial::new(exponents), c.clone());
        }
        Ok(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on a dimension mismatch; see [`Polynomial::checked_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial dimensions agree")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial dimensions agree")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial dimensions agree")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

/// Canonical text: terms in descending graded-lex order, e.g.
/// `x1^2 - 1/2*x1*x2 + 3`. Variables are numbered from `x1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let mut first = true;
            if m.degree() == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.dim, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d).unwrap()
    }

    fn x(dim: usize, i: usize) -> Polynomial {
        Polynomial::var(dim, i).unwrap()
    }

    // Independent oracle: collect raw (coeff, exponents) pairs and merge them
    // by linear scan, with no map or canonicalisation involved.
    fn merge_oracle(raw: &[(Scalar, Vec<u32>)]) -> Vec<(Scalar, Vec<u32>)> {
        let mut merged: Vec<(Scalar, Vec<u32>)> = Vec::new();
        for (c, e) in raw {
            match merged.iter_mut().find(|(_, me)| me == e) {
                Some(slot) => slot.0 = &slot.0 + c,
                None => merged.push((c.clone(), e.clone())),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        merged
    }

    #[test]
    fn add_cancels_to_constant() {
        let p = Polynomial::from_terms(2, [(q(1, 1), vec![1, 1]), (q(1, 1), vec![0, 0])]).unwrap();
        let r = Polynomial::from_terms(2, [(q(-1, 1), vec![1, 1])]).unwrap();
        let sum = p.checked_add(&r).unwrap();
        let oracle = merge_oracle(&[
            (q(1, 1), vec![1, 1]),
            (q(1, 1), vec![0, 0]),
            (q(-1, 1), vec![1, 1]),
        ]);
        assert_eq!(oracle, vec![(q(1, 1), vec![0, 0])]);
        assert_eq!(sum, Polynomial::constant(2, q(1, 1)));
        assert_eq!(sum.to_string(), "1");
    }

    #[test]
    fn add_identity_and_doubling() {
        let sq = x(1, 0).pow(2);
        assert_eq!(&sq + &Polynomial::zero(1), sq);
        assert_eq!((&x(1, 0) + &x(1, 0)).to_string(), "2*x1");
        assert!(matches!(
            x(1, 0).checked_add(&x(2, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn scale_examples() {
        let p = Polynomial::from_terms(1, [(q(1, 1), vec![3]), (q(2, 1), vec![0])]).unwrap();
        assert!(p.scale(&Scalar::zero()).is_zero());
        assert_eq!(p.scale(&Scalar::one()), p);
        let r = Polynomial::from_terms(1, [(q(2, 1), vec![1]), (q(4, 1), vec![0])]).unwrap();
        // coefficient-wise: 1/2 * 2 = 1, 1/2 * 4 = 2
        let expected = Polynomial::from_terms(1, [(q(1, 1), vec![1]), (q(2, 1), vec![0])]).unwrap();
        assert_eq!(r.scale(&q(1, 2)), expected);
        assert_eq!(expected.to_string(), "x1 + 2");
    }

    #[test]
    fn mul_examples() {
        assert_eq!((&x(2, 0) * &x(2, 1)).to_string(), "x1*x2");
        let one = Polynomial::constant(1, Scalar::one());
        let lhs = &(&x(1, 0) + &one) * &(&x(1, 0) - &one);
        // expand-and-merge: x*x + x*(-1) + 1*x + 1*(-1)
        let oracle = merge_oracle(&[
            (q(1, 1), vec![2]),
            (q(-1, 1), vec![1]),
            (q(1, 1), vec![1]),
            (q(-1, 1), vec![0]),
        ]);
        assert_eq!(lhs, Polynomial::from_terms(1, oracle).unwrap());
        assert_eq!(lhs.to_string(), "x1^2 - 1");
        assert!((&lhs * &Polynomial::zero(1)).is_zero());
    }

    #[test]
    fn partial_examples() {
        let p = Polynomial::from_terms(2, [(q(1, 1), vec![2, 1])]).unwrap();
        // power rule on the single monomial: 2 * x1^1 * x2
        let expected = Polynomial::from_terms(2, [(q(2, 1), vec![1, 1])]).unwrap();
        assert_eq!(p.partial(0).unwrap(), expected);
        assert!(Polynomial::constant(2, q(5, 1))
            .partial(1)
            .unwrap()
            .is_zero());
        assert!(x(2, 1).partial(0).unwrap().is_zero());
        assert!(matches!(p.partial(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn eval_and_substitute() {
        let sq = x(1, 0).pow(2);
        assert_eq!(sq.eval(&[Scalar::integer(3)]).unwrap(), Scalar::integer(9));
        assert!(sq.eval(&[]).is_err());
        let shifted = &x(1, 0) + &Polynomial::constant(1, Scalar::one());
        let composed = sq.substitute(&[shifted], 1).unwrap();
        assert_eq!(composed.to_string(), "x1^2 + 2*x1 + 1");
    }

    #[test]
    fn remap_drops_zeroed_variables() {
        let p = Polynomial::from_terms(2, [(q(1, 1), vec![1, 1]), (q(3, 1), vec![2, 0])]).unwrap();
        let r = p.remap(&[Some(2), None], 3).unwrap();
        assert_eq!(r.to_string(), "3*x3^2");
        let merged = p.remap(&[Some(0), Some(0)], 1).unwrap();
        assert_eq!(merged.to_string(), "4*x1^2");
    }

    #[test]
    fn display_is_graded_lex_descending() {
        let p = Polynomial::from_terms(
            2,
            [
                (q(1, 1), vec![0, 0]),
                (q(-1, 2), vec![0, 1]),
                (q(1, 1), vec![1, 1]),
                (q(1, 1), vec![0, 2]),
                (q(-2, 1), vec![2, 0]),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "-2*x1^2 + x1*x2 + x2^2 - 1/2*x2 + 1");
    }
}
