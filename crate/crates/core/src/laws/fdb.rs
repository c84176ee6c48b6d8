//! The forward and reverse Faà di Bruno formulas against plain iteration.

use super::axioms::{forward_chain, reverse_chain};
use super::{apply, law, projections, Case, Law};
use crate::crdc::{forward_derivative, reverse_derivative};
use crate::error::Result;
use crate::faa_di_bruno::{forward_fdb, reverse_fdb};
use crate::higher_order::{del, rho};
use crate::poly::{PolyMap, Slot};

pub(super) fn forward_laws(max_order: usize) -> Vec<Law> {
    let mut laws = vec![law("fdb-forward-chain", |c| {
        let (f, g) = c.composable_pair();
        let (_, chain) = forward_chain(&f, &g)?;
        let formula = forward_fdb(&f, &g, 0)?;
        Ok(Case::new(vec![f, g], formula, chain))
    })];
    for n in 0..=max_order {
        laws.push(law(format!("fdb-forward.n{n}"), move |c| {
            let (f, g) = c.composable_pair();
            let formula = forward_fdb(&f, &g, n)?;
            let oracle = del(&g.compose(&f)?, n + 1)?.result;
            Ok(Case::new(vec![f, g], formula, oracle))
        }));
    }
    laws
}

pub(super) fn reverse_laws(max_order: usize) -> Vec<Law> {
    let mut laws = vec![law("fdb-reverse-chain", |c| {
        let (f, g) = c.composable_pair();
        let (_, chain) = reverse_chain(&f, &g)?;
        let formula = reverse_fdb(&f, &g, 0)?;
        Ok(Case::new(vec![f, g], formula, chain))
    })];
    if max_order >= 1 {
        laws.push(law("fdb-reverse-two-summand", |c| {
            let (f, g) = c.composable_pair();
            let formula = reverse_fdb(&f, &g, 1)?;
            let display = second_reverse(&f, &g)?;
            Ok(Case::new(vec![f, g], formula, display))
        }));
    }
    for n in 0..=max_order {
        laws.push(law(format!("fdb-reverse.n{n}"), move |c| {
            let (f, g) = c.composable_pair();
            let formula = reverse_fdb(&f, &g, n)?;
            let oracle = rho(&g.compose(&f)?, n + 1)?.result;
            Ok(Case::new(vec![f, g], formula, oracle))
        }));
    }
    laws
}

/// `ρ⁽¹⁾[f](a₀, ρ⁽²⁾[g](f(a₀), b, D[f](a₀, a₂))) + ρ⁽²⁾[f](a₀, ρ⁽¹⁾[g](f(a₀), b), a₂)`,
/// written out directly over `A × C × A`.
pub(crate) fn second_reverse(f: &PolyMap, g: &PolyMap) -> Result<PolyMap> {
    let domain = super::profile(vec![
        f.domain().total(),
        g.codomain_dim(),
        f.domain().total(),
    ])?;
    let ps = projections(&domain)?;
    let (a0, b, a2) = (&ps[0], &ps[1], &ps[2]);
    let image = f.rewire(domain.clone(), &[Slot::Block(0)])?;
    let push = forward_derivative(f)?.rewire(domain.clone(), &[Slot::Block(0), Slot::Block(2)])?;

    let inner = apply(&rho(g, 2)?.result, &[image.clone(), b.clone(), push])?;
    let first = apply(&reverse_derivative(f)?, &[a0.clone(), inner])?;

    let pulled = apply(&reverse_derivative(g)?, &[image, b.clone()])?;
    let second = apply(&rho(f, 2)?.result, &[a0.clone(), pulled, a2.clone()])?;
    first.checked_add(&second)
}
