//! Seeded random polynomial maps for the law suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{ArityProfile, PolyMap, Polynomial, Scalar};

/// Size limits for generated maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    /// Largest block (and codomain) dimension; at least 1.
    pub max_dim: usize,
    /// Largest total degree of a monomial.
    pub max_deg: u32,
    /// Most terms per coordinate polynomial.
    pub max_terms: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_dim: 3,
            max_deg: 3,
            max_terms: 3,
        }
    }
}

pub struct Corpus {
    rng: ChaCha8Rng,
    config: CorpusConfig,
}

impl Corpus {
    pub fn new(seed: u64, config: CorpusConfig) -> Self {
        Corpus {
            rng: ChaCha8Rng::seed_from_u64(seed),
            config,
        }
    }

    pub fn config(&self) -> &CorpusConfig {
        &self.config
    }

    /// A coefficient from `{-3, …, 3} ∪ {1/2}`.
    pub fn scalar(&mut self) -> Scalar {
        let k = self.rng.gen_range(0..8);
        if k == 7 {
            Scalar::ratio(1, 2).expect("nonzero denominator")
        } else {
            Scalar::integer(k - 3)
        }
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn dim(&mut self) -> usize {
        self.rng.gen_range(1..=self.config.max_dim.max(1))
    }

    pub fn index(&mut self, below: usize) -> usize {
        self.rng.gen_range(0..below)
    }

    /// Exponents of total degree at most `max_deg`, spread over `vars`.
    fn exponents(&mut self, dim: usize, vars: &[usize], max_deg: u32) -> Vec<u32> {
        let mut e = vec![0; dim];
        if vars.is_empty() {
            return e;
        }
        let degree = self.rng.gen_range(0..=max_deg);
        for _ in 0..degree {
            let v = *vars.choose(&mut self.rng).expect("nonempty");
            e[v] += 1;
        }
        e
    }

    /// A polynomial in `dim` variables using only the variables in `vars`.
    pub fn polynomial_in(&mut self, dim: usize, vars: &[usize], max_deg: u32) -> Polynomial {
        let count = self.rng.gen_range(1..=self.config.max_terms.max(1));
        let terms: Vec<(Scalar, Vec<u32>)> = (0..count)
            .map(|_| {
                let c = self.nonzero_scalar();
                (c, self.exponents(dim, vars, max_deg))
            })
            .collect();
        Polynomial::from_terms(dim, terms).expect("exponent vectors have length dim")
    }

    pub fn polynomial(&mut self, dim: usize) -> Polynomial {
        let vars: Vec<usize> = (0..dim).collect();
        self.polynomial_in(dim, &vars, self.config.max_deg)
    }

    pub fn map(&mut self, domain: ArityProfile, codomain_dim: usize) -> PolyMap {
        let total = domain.total();
        let coords = (0..codomain_dim).map(|_| self.polynomial(total)).collect();
        PolyMap::new(domain, coords).expect("coordinates built over the domain")
    }

    /// A map `A → B` with random dimensions.
    pub fn single_map(&mut self) -> PolyMap {
        let n = self.dim();
        let m = self.dim();
        self.map(ArityProfile::single(n), m)
    }

    pub fn profile(&mut self, blocks: usize) -> ArityProfile {
        let dims = (0..blocks).map(|_| self.dim()).collect();
        ArityProfile::new(dims).expect("at least one block")
    }

    /// A profile with between one and three blocks.
    pub fn any_profile(&mut self) -> ArityProfile {
        let blocks = self.rng.gen_range(1..=3);
        self.profile(blocks)
    }

    /// A map that is linear in the variables of `block`, with polynomial
    /// coefficients in the remaining blocks.
    pub fn dlinear_map(
        &mut self,
        domain: ArityProfile,
        block: usize,
        codomain_dim: usize,
    ) -> PolyMap {
        let total = domain.total();
        let linear = domain.range(block).expect("block inside profile");
        let others: Vec<usize> = (0..total).filter(|i| !linear.contains(i)).collect();
        let coeff_deg = self.config.max_deg.saturating_sub(1);
        let coords = (0..codomain_dim)
            .map(|_| {
                let mut p = Polynomial::zero(total);
                for i in linear.clone() {
                    if self.rng.gen_bool(0.25) {
                        continue;
                    }
                    let c = self.polynomial_in(total, &others, coeff_deg);
                    let x = Polynomial::var(total, i).expect("index inside domain");
                    p = &p + &(&c * &x);
                }
                p
            })
            .collect();
        PolyMap::new(domain, coords).expect("coordinates built over the domain")
    }

    /// `f : A → B` and `g : B → C`.
    pub fn composable_pair(&mut self) -> (PolyMap, PolyMap) {
        let f = self.single_map();
        let p = self.dim();
        let g = self.map(ArityProfile::single(f.codomain_dim()), p);
        (f, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crdc::is_dlinear;

    #[test]
    fn same_seed_same_maps() {
        let mut a = Corpus::new(7, CorpusConfig::default());
        let mut b = Corpus::new(7, CorpusConfig::default());
        for _ in 0..20 {
            assert_eq!(a.single_map(), b.single_map());
        }
    }

    #[test]
    fn respects_limits() {
        let config = CorpusConfig::default();
        let mut c = Corpus::new(1, config);
        for _ in 0..200 {
            let f = c.single_map();
            assert!(f.domain().total() <= config.max_dim);
            assert!(f.codomain_dim() <= config.max_dim);
            assert!(f.degree().unwrap_or(0) <= config.max_deg);
            for p in f.coords() {
                assert!(p.len() <= config.max_terms);
            }
        }
    }

    #[test]
    fn dlinear_maps_are_dlinear() {
        let mut c = Corpus::new(3, CorpusConfig::default());
        for _ in 0..50 {
            let profile = c.profile(3);
            let f = c.dlinear_map(profile, 1, 2);
            assert!(is_dlinear(&f, 1).unwrap(), "{f:?}");
            assert!(f.degree().unwrap_or(0) <= 3);
        }
    }
}
