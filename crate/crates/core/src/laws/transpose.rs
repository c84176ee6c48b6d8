//! D-linear transposes.

use super::{apply, klinear_case, law, projections, Case, Law};
use crate::corpus::Corpus;
use crate::crdc::{
    dagger, dlinear_comparison, forward_derivative, partial_forward, partial_reverse,
    reverse_derivative,
};
use crate::poly::{PolyMap, Slot};

const MIDDLE: usize = 1;

/// `f : C₁ × A × C₂ → B`, D-linear in `A`.
fn linear_in_middle(c: &mut Corpus) -> PolyMap {
    let domain = c.profile(3);
    let m = c.dim();
    c.dlinear_map(domain, MIDDLE, m)
}

pub(super) fn laws() -> Vec<Law> {
    vec![
        law("dagger-of-forward", |c| {
            let f = c.single_map();
            let lhs = dagger(&forward_derivative(&f)?, 1)?;
            let rhs = reverse_derivative(&f)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
        law("dagger-of-reverse", |c| {
            let f = c.single_map();
            let lhs = dagger(&reverse_derivative(&f)?, 1)?;
            let rhs = forward_derivative(&f)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
        law("dagger-contravariant", |c| {
            let f = linear_in_middle(c);
            let e = c.dim();
            let g = c.dlinear_map(f.domain().replace(MIDDLE, f.codomain_dim())?, MIDDLE, e);
            let ps = projections(f.domain())?;
            let composite =
                g.compose(&PolyMap::pair(&[ps[0].clone(), f.clone(), ps[2].clone()])?)?;
            let lhs = dagger(&composite, MIDDLE)?;
            let g_t = dagger(&g, MIDDLE)?;
            let qs = projections(g_t.domain())?;
            let rhs = apply(&dagger(&f, MIDDLE)?, &[qs[0].clone(), g_t, qs[2].clone()])?;
            Ok(Case::new(vec![f, g], lhs, rhs))
        }),
        law("base-free", |c| {
            // the partial reverse derivative of R[f] in its cotangent never sees the cotangent
            let f = c.single_map();
            let lhs = partial_reverse(&reverse_derivative(&f)?, 1)?;
            let rhs = forward_derivative(&f)?
                .rewire(lhs.domain().clone(), &[Slot::Block(0), Slot::Block(2)])?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
        law("dagger-of-partial-forward", |c| {
            let domain = c.any_profile();
            let m = c.dim();
            let f = c.map(domain.clone(), m);
            let j = c.index(domain.len());
            let lhs = dagger(&partial_forward(&f, j)?, domain.len())?;
            let rhs = partial_reverse(&f, j)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
        law("dagger-involution", |c| {
            let f = linear_in_middle(c);
            let twice = dagger(&dagger(&f, MIDDLE)?, MIDDLE)?;
            Ok(Case::new(vec![f.clone()], twice, f))
        }),
        law("dagger-is-dlinear", |c| {
            let f = linear_in_middle(c);
            let cmp = dlinear_comparison(&dagger(&f, MIDDLE)?, MIDDLE)?;
            Ok(Case::new(vec![f], cmp.lhs, cmp.rhs))
        }),
        law("reverse-is-dlinear", |c| {
            let f = c.single_map();
            let cmp = dlinear_comparison(&reverse_derivative(&f)?, 1)?;
            Ok(Case::new(vec![f], cmp.lhs, cmp.rhs))
        }),
        law("forward-is-dlinear", |c| {
            let f = c.single_map();
            let cmp = dlinear_comparison(&forward_derivative(&f)?, 1)?;
            Ok(Case::new(vec![f], cmp.lhs, cmp.rhs))
        }),
        law("dlinear-implies-klinear", |c| {
            let f = linear_in_middle(c);
            let (s, t) = (c.scalar(), c.scalar());
            let (lhs, rhs) = klinear_case(&f, MIDDLE, &s, &t)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
    ]
}
