use std::fmt;

use crate::poly::{Monomial, PolyMap, Scalar};

/// Both sides of an identity between polynomial maps, kept so a failure can
/// be reported with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: PolyMap,
    pub rhs: PolyMap,
}

/// First place two maps disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Difference {
    Domain,
    Codomain,
    Coefficient {
        coord: usize,
        monomial: Monomial,
        lhs: Scalar,
        rhs: Scalar,
    },
}

impl Comparison {
    pub fn new(lhs: PolyMap, rhs: PolyMap) -> Self {
        Comparison { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// The first differing coefficient in coordinate order, then graded-lex
    /// descending order; `None` when the sides agree.
    pub fn first_difference(&self) -> Option<Difference> {
        if self.lhs.domain() != self.rhs.domain() {
            return Some(Difference::Domain);
        }
        if self.lhs.codomain_dim() != self.rhs.codomain_dim() {
            return Some(Difference::Codomain);
        }
        for (coord, (p, q)) in self.lhs.coords().iter().zip(self.rhs.coords()).enumerate() {
            if p == q {
                continue;
            }
            let diff = p - q;
            let (monomial, _) = diff.terms().next_back()?;
            return Some(Difference::Coefficient {
                coord,
                monomial: monomial.clone(),
                lhs: p.coefficient(monomial),
                rhs: q.coefficient(monomial),
            });
        }
        None
    }
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Difference::Domain => f.write_str("domain profiles differ"),
            Difference::Codomain => f.write_str("codomain dimensions differ"),
            Difference::Coefficient {
                coord,
                monomial,
                lhs,
                rhs,
            } => write!(
                f,
                "coordinate {}, monomial {:?}: {} vs {}",
                coord + 1,
                monomial.exponents(),
                lhs,
                rhs
            ),
        }
    }
}
