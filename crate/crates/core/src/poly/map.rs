use std::fmt;
use std::ops::Range;

use super::{ArityProfile, Polynomial, Scalar};
use crate::error::{Error, Result};

/// One block of a wiring produced by [`PolyMap::rewire`]: either a copy of a
/// block of the new domain, or a run of zeros of the given dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Block(usize),
    Zero(usize),
}

/// A polynomial map `A₁ × ⋯ × Aₙ → B`: a block profile on the domain and one
/// polynomial per output coordinate.
///
/// Equality compares the domain profile and every coordinate polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    domain: ArityProfile,
    coords: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(domain: ArityProfile, coords: Vec<Polynomial>) -> Result<Self> {
        let total = domain.total();
        if let Some(bad) = coords.iter().find(|p| p.dim() != total) {
            return Err(Error::DimensionMismatch {
                expected: total,
                found: bad.dim(),
            });
        }
        Ok(PolyMap { domain, coords })
    }

    pub fn identity(domain: ArityProfile) -> Self {
        let total = domain.total();
        let coords = (0..total)
            .map(|i| Polynomial::var(total, i).expect("index below total"))
            .collect();
        PolyMap { domain, coords }
    }

    pub fn zero(domain: ArityProfile, codomain_dim: usize) -> Self {
        let coords = vec![Polynomial::zero(domain.total()); codomain_dim];
        PolyMap { domain, coords }
    }

    /// Projection onto one block of `domain` (0-based).
    pub fn proj(domain: &ArityProfile, block: usize) -> Result<Self> {
        let range = domain.range(block)?;
        let total = domain.total();
        let coords = range
            .map(|i| Polynomial::var(total, i).expect("index below total"))
            .collect();
        Ok(PolyMap {
            domain: domain.clone(),
            coords,
        })
    }

    /// Tuple `⟨f₁, …, fₙ⟩` of maps sharing one domain.
    pub fn pair(maps: &[PolyMap]) -> Result<Self> {
        let first = maps
            .first()
            .ok_or_else(|| Error::BlockMismatch("cannot pair an empty list of maps".into()))?;
        let mut coords = Vec::new();
        for m in maps {
            if m.domain != first.domain {
                return Err(Error::BlockMismatch(format!(
                    "pairing maps with domains {} and {}",
                    first.domain, m.domain
                )));
            }
            coords.extend(m.coords.iter().cloned());
        }
        Ok(PolyMap {
            domain: first.domain.clone(),
            coords,
        })
    }

    pub fn domain(&self) -> &ArityProfile {
        &self.domain
    }

    pub fn codomain_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    /// Largest total degree over all coordinates, `None` for a zero map.
    pub fn degree(&self) -> Option<u32> {
        self.coords.iter().filter_map(Polynomial::degree).max()
    }

    fn check_same_shape(&self, other: &PolyMap) -> Result<()> {
        if self.domain != other.domain || self.coords.len() != other.coords.len() {
            return Err(Error::BlockMismatch(format!(
                "maps {} -> {} and {} -> {} are not parallel",
                self.domain,
                self.coords.len(),
                other.domain,
                other.coords.len()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &PolyMap) -> Result<PolyMap> {
        self.check_same_shape(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(p, q)| p + q)
            .collect();
        Ok(PolyMap {
            domain: self.domain.clone(),
            coords,
        })
    }

    pub fn checked_sub(&self, other: &PolyMap) -> Result<PolyMap> {
        self.check_same_shape(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(p, q)| p - q)
            .collect();
        Ok(PolyMap {
            domain: self.domain.clone(),
            coords,
        })
    }

    pub fn scale(&self, s: &Scalar) -> PolyMap {
        PolyMap {
            domain: self.domain.clone(),
            coords: self.coords.iter().map(|p| p.scale(s)).collect(),
        }
    }

    /// Sum of parallel maps; `None` for an empty iterator.
    pub fn sum<'a, I>(maps: I) -> Result<Option<PolyMap>>
    where
        I: IntoIterator<Item = &'a PolyMap>,
    {
        let mut acc: Option<PolyMap> = None;
        for m in maps {
            acc = Some(match acc {
                None => m.clone(),
                Some(a) => a.checked_add(m)?,
            });
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Vec<Scalar>> {
        if point.len() != self.domain.total() {
            return Err(Error::DimensionMismatch {
                expected: self.domain.total(),
                found: point.len(),
            });
        }
        self.coords.iter().map(|p| p.eval(point)).collect()
    }

    /// `self ∘ inner`: substitutes the coordinates of `inner` for the inputs
    /// of `self`. The result has `inner`'s domain.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        if inner.codomain_dim() != self.domain.total() {
            return Err(Error::InterfaceMismatch {
                inner_codomain: inner.codomain_dim(),
                outer_domain: self.domain.total(),
            });
        }
        let target = inner.domain.total();
        let coords = match inner.as_selection() {
            Some(mapping) => self
                .coords
                .iter()
                .map(|p| p.remap(&mapping, target))
                .collect::<Result<_>>()?,
            None => self
                .coords
                .iter()
                .map(|p| p.substitute(&inner.coords, target))
                .collect::<Result<_>>()?,
        };
        Ok(PolyMap {
            domain: inner.domain.clone(),
            coords,
        })
    }

    /// When every coordinate is zero or a bare variable, the variable each
    /// coordinate selects.
    fn as_selection(&self) -> Option<Vec<Option<usize>>> {
        self.coords
            .iter()
            .map(|p| {
                if p.is_zero() {
                    return Some(None);
                }
                if p.len() != 1 {
                    return None;
                }
                let (m, c) = p.terms().next()?;
                if !c.is_one() || m.degree() != 1 {
                    return None;
                }
                m.exponents().iter().position(|&e| e == 1).map(Some)
            })
            .collect()
    }

    /// Same coordinates over a new block structure with the same total.
    pub fn reblock(&self, profile: ArityProfile) -> Result<PolyMap> {
        if profile.total() != self.domain.total() {
            return Err(Error::DimensionMismatch {
                expected: self.domain.total(),
                found: profile.total(),
            });
        }
        Ok(PolyMap {
            domain: profile,
            coords: self.coords.clone(),
        })
    }

    /// Regroups the domain into a single block.
    pub fn flatten(&self) -> PolyMap {
        PolyMap {
            domain: ArityProfile::single(self.domain.total()),
            coords: self.coords.clone(),
        }
    }

    /// Precomposes with a wiring map `domain → ∏ slots`: each slot either
    /// copies a block of `domain` or feeds zeros. The slots must line up with
    /// the current domain (same total dimension).
    pub fn rewire(&self, domain: ArityProfile, slots: &[Slot]) -> Result<PolyMap> {
        let mut mapping = Vec::with_capacity(self.domain.total());
        for slot in slots {
            match *slot {
                Slot::Block(b) => mapping.extend(domain.range(b)?.map(Some)),
                Slot::Zero(d) => mapping.extend(std::iter::repeat_n(None, d)),
            }
        }
        if mapping.len() != self.domain.total() {
            return Err(Error::DimensionMismatch {
                expected: self.domain.total(),
                found: mapping.len(),
            });
        }
        let target = domain.total();
        let coords = self
            .coords
            .iter()
            .map(|p| p.remap(&mapping, target))
            .collect::<Result<_>>()?;
        Ok(PolyMap { domain, coords })
    }

    /// Reorders domain blocks: block `k` of the result is block `order[k]`
    /// of `self`. `order` must be a permutation.
    pub fn permute_blocks(&self, order: &[usize]) -> Result<PolyMap> {
        let n = self.domain.len();
        let mut seen = vec![false; n];
        for &b in order {
            self.domain.check_block(b)?;
            if seen[b] {
                return Err(Error::BlockMismatch(format!(
                    "{order:?} is not a permutation"
                )));
            }
            seen[b] = true;
        }
        if order.len() != n {
            return Err(Error::BlockMismatch(format!(
                "{order:?} is not a permutation"
            )));
        }
        let blocks = order.iter().map(|&b| self.domain.blocks()[b]).collect();
        let domain = ArityProfile::new(blocks)?;
        // self's block b lives at position inverse[b] in the new domain
        let mut inverse = vec![0; n];
        for (k, &b) in order.iter().enumerate() {
            inverse[b] = k;
        }
        let slots: Vec<Slot> = inverse.into_iter().map(Slot::Block).collect();
        self.rewire(domain, &slots)
    }

    /// Output coordinates in `range`, i.e. post-composition with a projection.
    pub fn outputs(&self, range: Range<usize>) -> Result<PolyMap> {
        if range.end > self.coords.len() || range.start > range.end {
            return Err(Error::IndexOutOfRange {
                index: range.end,
                dim: self.coords.len(),
            });
        }
        Ok(PolyMap {
            domain: self.domain.clone(),
            coords: self.coords[range].to_vec(),
        })
    }

    /// Whether any coordinate mentions a variable of `block`.
    pub fn depends_on_block(&self, block: usize) -> Result<bool> {
        let range = self.domain.range(block)?;
        Ok(self
            .coords
            .iter()
            .any(|p| range.clone().any(|i| p.uses_var(i))))
    }
}

/// `(p₁, p₂, …)` in canonical polynomial text; `()` for an empty codomain.
impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PolyMap{} -> {} {}",
            self.domain,
            self.coords.len(),
            self
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(blocks: &[usize]) -> ArityProfile {
        ArityProfile::new(blocks.to_vec()).unwrap()
    }

    fn square() -> PolyMap {
        PolyMap::new(profile(&[1]), vec![Polynomial::var(1, 0).unwrap().pow(2)]).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            square().eval(&[Scalar::integer(3)]).unwrap(),
            vec![Scalar::integer(9)]
        );
        let v = vec![Scalar::integer(2), Scalar::ratio(-1, 3).unwrap()];
        assert_eq!(PolyMap::identity(profile(&[2])).eval(&v).unwrap(), v);
        assert_eq!(
            PolyMap::zero(profile(&[2]), 3).eval(&v).unwrap(),
            vec![Scalar::zero(); 3]
        );
        assert!(square().eval(&v).is_err());
    }

    #[test]
    fn compose_examples() {
        let g = square();
        assert_eq!(g.compose(&PolyMap::identity(profile(&[1]))).unwrap(), g);
        let shift = PolyMap::new(
            profile(&[1]),
            vec![&Polynomial::var(1, 0).unwrap() + &Polynomial::constant(1, Scalar::one())],
        )
        .unwrap();
        assert_eq!(g.compose(&shift).unwrap().to_string(), "(x1^2 + 2*x1 + 1)");
        assert!(matches!(
            g.compose(&PolyMap::identity(profile(&[2]))),
            Err(Error::InterfaceMismatch { .. })
        ));
    }

    #[test]
    fn projections_select_block_coordinates() {
        let p = profile(&[2, 3]);
        let pi = PolyMap::proj(&p, 1).unwrap();
        assert_eq!(pi.to_string(), "(x3, x4, x5)");
        let f = PolyMap::new(p.clone(), vec![Polynomial::var(5, 0).unwrap()]).unwrap();
        let g = PolyMap::identity(p.clone()).outputs(1..3).unwrap();
        let paired = PolyMap::pair(&[f.clone(), g.clone()]).unwrap();
        assert_eq!(paired.outputs(0..1).unwrap(), f);
        assert_eq!(paired.outputs(1..3).unwrap(), g);
        assert_eq!(f.checked_add(&PolyMap::zero(p, 1)).unwrap(), f);
    }

    #[test]
    fn reblock_keeps_coordinates() {
        let f = PolyMap::identity(profile(&[2, 3]));
        let flat = f.reblock(profile(&[5])).unwrap();
        assert_eq!(flat.coords(), f.coords());
        assert_eq!(flat.reblock(profile(&[2, 3])).unwrap(), f);
        let with_empty = f.reblock(profile(&[2, 0, 3])).unwrap();
        let v: Vec<Scalar> = (1..=5).map(Scalar::integer).collect();
        assert_eq!(with_empty.eval(&v).unwrap(), f.eval(&v).unwrap());
        assert!(f.reblock(profile(&[4])).is_err());
    }

    #[test]
    fn permute_blocks_swaps_arguments() {
        let p = profile(&[1, 2]);
        let f = PolyMap::new(
            p,
            vec![&Polynomial::var(3, 0).unwrap() * &Polynomial::var(3, 2).unwrap()],
        )
        .unwrap();
        let swapped = f.permute_blocks(&[1, 0]).unwrap();
        assert_eq!(swapped.domain(), &profile(&[2, 1]));
        assert_eq!(swapped.to_string(), "(x2*x3)");
        assert_eq!(swapped.permute_blocks(&[1, 0]).unwrap(), f);
        assert!(f.permute_blocks(&[0, 0]).is_err());
    }

    #[test]
    fn zero_codomain_map() {
        let f = PolyMap::zero(profile(&[2]), 0);
        assert_eq!(f.to_string(), "()");
        assert!(f.is_zero());
        assert_eq!(f.eval(&[Scalar::one(), Scalar::one()]).unwrap(), vec![]);
    }
}
