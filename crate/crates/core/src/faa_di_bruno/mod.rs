//! The forward and reverse Faà di Bruno formulas as explicit sums of
//! polynomial maps, one summand per set partition.
//!
//! For `f : A → B` and `g : B → C`, the forward formula expresses
//! `∂⁽ⁿ⁺¹⁾[g ∘ f]` and the reverse formula expresses `ρ⁽ⁿ⁺¹⁾[g ∘ f]`. The
//! reverse formula mixes both kinds of derivative: reverse derivatives of `f`
//! and `g` on the outside, forward derivatives of `f` feeding the inner slots.

mod partition;

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

pub use partition::{enumerate_partitions, index_select, SetPartition};

use crate::comparison::{Comparison, Difference};
use crate::error::{Error, Result};
use crate::higher_order::{del, rho, DerivativeKind};
use crate::poly::{ArityProfile, PolyMap, Slot};

/// Default cap on `n` for callers that expose it; summand count and size
/// grow like the Bell numbers.
pub const DEFAULT_MAX_N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Forward,
    Reverse,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Forward => "forward",
            Mode::Reverse => "reverse",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operand {
    F,
    G,
}

/// One higher derivative used inside a summand, e.g. `ρ⁽²⁾[g]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub kind: DerivativeKind,
    pub order: usize,
    pub operand: Operand,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            DerivativeKind::Reverse => "rho",
            DerivativeKind::Forward => "del",
        };
        let on = match self.operand {
            Operand::F => "f",
            Operand::G => "g",
        };
        write!(f, "{op}^({})[{on}]", self.order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdbSummand {
    pub partition: SetPartition,
    /// Outermost first.
    pub factors: Vec<Factor>,
    pub map: PolyMap,
}

impl FdbSummand {
    pub fn sizes(&self) -> Vec<usize> {
        self.partition.sizes()
    }
}

/// Memoised higher derivatives of one map.
struct Derivatives {
    map: PolyMap,
    cache: HashMap<usize, PolyMap>,
}

impl Derivatives {
    fn new(map: &PolyMap, kind: DerivativeKind, max_order: usize) -> Result<Self> {
        let mut cache = HashMap::new();
        for order in 1..=max_order {
            let d = match kind {
                DerivativeKind::Reverse => rho(map, order)?,
                DerivativeKind::Forward => del(map, order)?,
            };
            cache.insert(order, d.result);
        }
        Ok(Derivatives {
            map: map.clone(),
            cache,
        })
    }

    fn get(&self, order: usize) -> &PolyMap {
        if order == 0 {
            return &self.map;
        }
        &self.cache[&order]
    }
}

fn check_composable(f: &PolyMap, g: &PolyMap) -> Result<()> {
    for m in [f, g] {
        if m.domain().len() != 1 {
            return Err(Error::MultiBlockDomain(m.domain().len()));
        }
    }
    if f.codomain_dim() != g.domain().total() {
        return Err(Error::InterfaceMismatch {
            inner_codomain: f.codomain_dim(),
            outer_domain: g.domain().total(),
        });
    }
    Ok(())
}

/// `∂⁽ˢ⁾[f](a₀) · a_S`, over the summand domain: block 0 of `domain` is the
/// base point and `blocks` name the tangent blocks in `S`.
fn inner_forward(dels: &Derivatives, domain: &ArityProfile, blocks: &[usize]) -> Result<PolyMap> {
    let mut slots = vec![Slot::Block(0)];
    slots.extend(blocks.iter().map(|&b| Slot::Block(b)));
    dels.get(blocks.len()).rewire(domain.clone(), &slots)
}

fn pair(parts: Vec<PolyMap>) -> Result<PolyMap> {
    PolyMap::pair(&parts)
}

fn sum_summands(summands: &[FdbSummand], domain: &ArityProfile, codim: usize) -> Result<PolyMap> {
    Ok(PolyMap::sum(summands.iter().map(|s| &s.map))?
        .unwrap_or_else(|| PolyMap::zero(domain.clone(), codim)))
}

/// Summands of the forward formula over the domain `A × Aⁿ⁺¹`, in
/// partition enumeration order.
pub fn forward_summands(f: &PolyMap, g: &PolyMap, n: usize) -> Result<Vec<FdbSummand>> {
    check_composable(f, g)?;
    let da = f.domain().total();
    let domain = ArityProfile::new(vec![da; n + 2])?;
    let f_dels = Derivatives::new(f, DerivativeKind::Forward, n + 1)?;
    let g_dels = Derivatives::new(g, DerivativeKind::Forward, n + 1)?;
    let base = f.rewire(domain.clone(), &[Slot::Block(0)])?;

    enumerate_partitions(n + 1)
        .into_par_iter()
        .map(|partition| {
            let k = partition.len();
            let mut factors = vec![Factor {
                kind: DerivativeKind::Forward,
                order: k,
                operand: Operand::G,
            }];
            let mut args = vec![base.clone()];
            for block in partition.blocks() {
                factors.push(Factor {
                    kind: DerivativeKind::Forward,
                    order: block.len(),
                    operand: Operand::F,
                });
                // element i of [n+1] is the tangent in domain block i
                args.push(inner_forward(&f_dels, &domain, block)?);
            }
            let map = g_dels.get(k).compose(&pair(args)?)?;
            Ok(FdbSummand {
                partition,
                factors,
                map,
            })
        })
        .collect()
}

/// Right-hand side of the forward formula, a map `A × Aⁿ⁺¹ → C` equal to
/// `∂⁽ⁿ⁺¹⁾[g ∘ f]`.
pub fn forward_fdb(f: &PolyMap, g: &PolyMap, n: usize) -> Result<PolyMap> {
    let summands = forward_summands(f, g, n)?;
    let domain = ArityProfile::new(vec![f.domain().total(); n + 2])?;
    sum_summands(&summands, &domain, g.codomain_dim())
}

/// Summands of the reverse formula over the domain `A × C × Aⁿ`.
///
/// Element 1 of `[n+1]` stands for the cotangent `b` (domain block 1);
/// element `i ≥ 2` stands for `a_i` (domain block `i`). For a partition
/// `S₁ | ⋯ | S_k` with `1 ∈ S₁` the summand is
/// `ρ^{|S₁|}[f](a₀) · (ρ⁽ᵏ⁾[g](f(a₀)) · b · u₂ ⋯ u_k) · a_{S₁∖{1}}` where
/// `u_j = ∂^{|S_j|}[f](a₀) · a_{S_j}`.
pub fn reverse_summands(f: &PolyMap, g: &PolyMap, n: usize) -> Result<Vec<FdbSummand>> {
    check_composable(f, g)?;
    let da = f.domain().total();
    let dc = g.codomain_dim();
    let mut blocks = vec![da, dc];
    blocks.extend(std::iter::repeat_n(da, n));
    let domain = ArityProfile::new(blocks)?;

    let f_rhos = Derivatives::new(f, DerivativeKind::Reverse, n + 1)?;
    let g_rhos = Derivatives::new(g, DerivativeKind::Reverse, n + 1)?;
    let f_dels = Derivatives::new(f, DerivativeKind::Forward, n)?;
    let base_point = PolyMap::proj(&domain, 0)?;
    let cotangent = PolyMap::proj(&domain, 1)?;
    let image = f.rewire(domain.clone(), &[Slot::Block(0)])?;

    enumerate_partitions(n + 1)
        .into_par_iter()
        .map(|partition| {
            let blocks = partition.blocks();
            let (first, rest) = blocks.split_first().expect("partitions are nonempty");
            debug_assert_eq!(first[0], 1);
            let k = blocks.len();

            let mut factors = vec![
                Factor {
                    kind: DerivativeKind::Reverse,
                    order: first.len(),
                    operand: Operand::F,
                },
                Factor {
                    kind: DerivativeKind::Reverse,
                    order: k,
                    operand: Operand::G,
                },
            ];
            let mut g_args = vec![image.clone(), cotangent.clone()];
            for block in rest {
                factors.push(Factor {
                    kind: DerivativeKind::Forward,
                    order: block.len(),
                    operand: Operand::F,
                });
                g_args.push(inner_forward(&f_dels, &domain, block)?);
            }
            let pulled = g_rhos.get(k).compose(&pair(g_args)?)?;

            let mut f_args = vec![base_point.clone(), pulled];
            for &i in &first[1..] {
                f_args.push(PolyMap::proj(&domain, i)?);
            }
            let map = f_rhos.get(first.len()).compose(&pair(f_args)?)?;
            Ok(FdbSummand {
                partition,
                factors,
                map,
            })
        })
        .collect()
}

/// Right-hand side of the reverse formula, a map `A × C × Aⁿ → A` equal to
/// `ρ⁽ⁿ⁺¹⁾[g ∘ f]`.
pub fn reverse_fdb(f: &PolyMap, g: &PolyMap, n: usize) -> Result<PolyMap> {
    let summands = reverse_summands(f, g, n)?;
    let mut blocks = vec![f.domain().total(), g.codomain_dim()];
    blocks.extend(std::iter::repeat_n(f.domain().total(), n));
    sum_summands(&summands, &ArityProfile::new(blocks)?, f.domain().total())
}

/// Summand dump, total and oracle comparison for one formula instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdbReport {
    pub mode: Mode,
    pub n: usize,
    pub summands: Vec<FdbSummand>,
    /// Sum of the summands against the iterated derivative of `g ∘ f`.
    pub comparison: Comparison,
}

impl FdbReport {
    pub fn equal(&self) -> bool {
        self.comparison.holds()
    }

    pub fn first_difference(&self) -> Option<Difference> {
        self.comparison.first_difference()
    }
}

/// Builds the formula for `mode` and compares it with the derivative of the
/// composite computed by plain iteration.
pub fn fdb_report(f: &PolyMap, g: &PolyMap, n: usize, mode: Mode) -> Result<FdbReport> {
    let (summands, domain, codim) = match mode {
        Mode::Forward => {
            let s = forward_summands(f, g, n)?;
            let d = ArityProfile::new(vec![f.domain().total(); n + 2])?;
            (s, d, g.codomain_dim())
        }
        Mode::Reverse => {
            let s = reverse_summands(f, g, n)?;
            let mut blocks = vec![f.domain().total(), g.codomain_dim()];
            blocks.extend(std::iter::repeat_n(f.domain().total(), n));
            (s, ArityProfile::new(blocks)?, f.domain().total())
        }
    };
    let total = sum_summands(&summands, &domain, codim)?;
    let composite = g.compose(f)?;
    let oracle = match mode {
        Mode::Forward => del(&composite, n + 1)?.result,
        Mode::Reverse => rho(&composite, n + 1)?.result,
    };
    Ok(FdbReport {
        mode,
        n,
        summands,
        comparison: Comparison::new(total, oracle),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crdc::{forward_derivative, reverse_derivative};
    use crate::poly::Polynomial;

    fn single(coords: Vec<Polynomial>) -> PolyMap {
        let dim = coords.first().map_or(0, Polynomial::dim);
        PolyMap::new(ArityProfile::single(dim), coords).unwrap()
    }

    fn x(dim: usize, i: usize) -> Polynomial {
        Polynomial::var(dim, i).unwrap()
    }

    fn square() -> PolyMap {
        single(vec![x(1, 0).pow(2)])
    }

    #[test]
    fn forward_n0_is_the_chain_rule() {
        let f = single(vec![&x(2, 0) * &x(2, 1), x(2, 0).pow(2)]);
        let g = single(vec![&x(2, 0).pow(2) - &x(2, 1)]);
        let lhs = forward_fdb(&f, &g, 0).unwrap();
        // D[g](f(a), D[f](a, b))
        let df = forward_derivative(&f).unwrap();
        let fa = f.rewire(df.domain().clone(), &[Slot::Block(0)]).unwrap();
        let rhs = forward_derivative(&g)
            .unwrap()
            .compose(&PolyMap::pair(&[fa, df]).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn forward_second_derivative_of_x4() {
        let total = forward_fdb(&square(), &square(), 1).unwrap();
        assert_eq!(total.to_string(), "(12*x1^2*x2*x3)");
        let oracle = del(&square().compose(&square()).unwrap(), 2)
            .unwrap()
            .result;
        assert_eq!(total, oracle);
    }

    #[test]
    fn reverse_second_derivative_of_x4() {
        // ρ⁽²⁾[x⁴] by iteration: R = 4a³b, then ∂/∂a · a₂ = 12a²·b·a₂
        let total = reverse_fdb(&square(), &square(), 1).unwrap();
        assert_eq!(total.to_string(), "(12*x1^2*x2*x3)");
        let oracle = rho(&square().compose(&square()).unwrap(), 2)
            .unwrap()
            .result;
        assert_eq!(total, oracle);
    }

    #[test]
    fn reverse_n0_is_the_reverse_chain_rule() {
        let f = single(vec![&x(2, 0) * &x(2, 1), x(2, 1).pow(3)]);
        let g = single(vec![&x(2, 0) * &x(2, 0), &x(2, 0) + &x(2, 1), x(2, 1)]);
        let lhs = reverse_fdb(&f, &g, 0).unwrap();
        // R[f](a, R[g](f(a), b)) over (A, C)
        let domain = ArityProfile::new(vec![2, 3]).unwrap();
        let a = PolyMap::proj(&domain, 0).unwrap();
        let b = PolyMap::proj(&domain, 1).unwrap();
        let fa = f.compose(&a).unwrap();
        let inner = reverse_derivative(&g)
            .unwrap()
            .compose(&PolyMap::pair(&[fa, b]).unwrap())
            .unwrap();
        let rhs = reverse_derivative(&f)
            .unwrap()
            .compose(&PolyMap::pair(&[a, inner]).unwrap())
            .unwrap();
        assert_eq!(lhs.to_string(), rhs.to_string());
    }

    #[test]
    fn summand_counts() {
        for (n, expected) in [(0, 1), (1, 2), (2, 5), (3, 15)] {
            let s = reverse_summands(&square(), &square(), n).unwrap();
            assert_eq!(s.len(), expected);
            let s = forward_summands(&square(), &square(), n).unwrap();
            assert_eq!(s.len(), expected);
        }
    }

    #[test]
    fn reverse_never_takes_forward_derivatives_of_g() {
        let s = reverse_summands(&square(), &square(), 3).unwrap();
        for summand in &s {
            assert!(summand
                .factors
                .iter()
                .all(|f| !(f.kind == DerivativeKind::Forward && f.operand == Operand::G)));
        }
    }

    #[test]
    fn report_verdicts() {
        let cube = single(vec![x(1, 0).pow(3)]);
        let r = fdb_report(&square(), &cube, 2, Mode::Reverse).unwrap();
        assert_eq!(r.summands.len(), 5);
        assert!(r.equal());
        assert_eq!(r.first_difference(), None);
        let r = fdb_report(&square(), &cube, 3, Mode::Forward).unwrap();
        assert_eq!(r.summands.len(), 15);
        assert!(r.equal());
    }

    #[test]
    fn zero_dimensional_middle() {
        let f = PolyMap::zero(ArityProfile::single(2), 0);
        let g = PolyMap::new(
            ArityProfile::single(0),
            vec![Polynomial::constant(0, crate::poly::Scalar::integer(5))],
        )
        .unwrap();
        for n in 0..=2 {
            let fwd = fdb_report(&f, &g, n, Mode::Forward).unwrap();
            assert!(fwd.equal() && fwd.comparison.lhs.is_zero());
            let rev = fdb_report(&f, &g, n, Mode::Reverse).unwrap();
            assert!(rev.equal() && rev.comparison.lhs.is_zero());
        }
    }

    #[test]
    fn interface_mismatch() {
        let f = single(vec![x(1, 0)]);
        let g = single(vec![&x(2, 0) + &x(2, 1)]);
        assert!(matches!(
            forward_fdb(&f, &g, 1),
            Err(Error::InterfaceMismatch { .. })
        ));
    }
}
