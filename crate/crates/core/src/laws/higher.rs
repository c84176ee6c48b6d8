//! Laws of the higher-order derivatives.

use super::{klinear_case, law, Case, Law};
use crate::crdc::dlinear_comparison;
use crate::error::Result;
use crate::higher_order::{check_dagger_bridge, del, rho};
use crate::poly::PolyMap;

/// Largest `n` for the symmetry laws; `∂⁽ⁿ⁺¹⁾` grows quickly with `n`.
const SYMMETRY_MAX_N: usize = 2;

pub(super) fn bridge_laws(max_order: usize) -> Vec<Law> {
    let mut laws = Vec::new();
    for n in 0..=max_order {
        laws.push(law(format!("dagger-bridge.n{n}"), move |c| {
            let f = c.single_map();
            let cmp = check_dagger_bridge(&f, n + 1)?;
            Ok(Case::new(vec![f], cmp.lhs, cmp.rhs))
        }));
    }
    for n in 0..=max_order {
        laws.push(law(format!("rho-cotangent-linear.n{n}"), move |c| {
            let f = c.single_map();
            let (s, t) = (c.scalar(), c.scalar());
            let (lhs, rhs) = klinear_case(&rho(&f, n + 1)?.result, 1, &s, &t)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }));
    }
    laws.push(law("rho-degree-bound", |c| {
        let f = c.single_map();
        let d = f.degree().unwrap_or(0) as usize;
        let r = rho(&f, d + 1)?.result;
        let zero = PolyMap::zero(r.domain().clone(), r.codomain_dim());
        Ok(Case::new(vec![f], r, zero))
    }));
    laws
}

/// Pairs several comparisons over one domain into a single one.
fn paired(sides: Vec<(PolyMap, PolyMap)>) -> Result<(PolyMap, PolyMap)> {
    let (lhs, rhs): (Vec<_>, Vec<_>) = sides.into_iter().unzip();
    Ok((PolyMap::pair(&lhs)?, PolyMap::pair(&rhs)?))
}

pub(super) fn symmetry_laws(max_order: usize) -> Vec<Law> {
    let top = max_order.min(SYMMETRY_MAX_N);
    let mut laws = Vec::new();
    for n in 0..=top {
        laws.push(law(format!("del-dlinear.n{n}"), move |c| {
            let f = c.single_map();
            let d = del(&f, n + 1)?.result;
            let sides = (1..=n + 1)
                .map(|b| dlinear_comparison(&d, b).map(|cmp| (cmp.lhs, cmp.rhs)))
                .collect::<Result<_>>()?;
            let (lhs, rhs) = paired(sides)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }));
    }
    for n in 1..=top {
        laws.push(law(format!("del-symmetric.n{n}"), move |c| {
            let f = c.single_map();
            let d = del(&f, n + 1)?.result;
            let blocks = d.domain().len();
            let mut sides = Vec::new();
            for i in 1..blocks {
                for j in i + 1..blocks {
                    let mut order: Vec<usize> = (0..blocks).collect();
                    order.swap(i, j);
                    sides.push((d.permute_blocks(&order)?, d.clone()));
                }
            }
            let (lhs, rhs) = paired(sides)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }));
    }
    laws
}
