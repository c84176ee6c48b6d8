//! The seven reverse derivative axioms on single-block maps, plus the
//! first-order facts derived from them.

use super::{apply, combo, klinear_case, law, profile, projections, Case, Law};
use crate::crdc::{
    forward_derivative, forward_from_reverse, partial_forward, partial_reverse, reverse_derivative,
};
use crate::error::Result;
use crate::poly::{ArityProfile, PolyMap, Polynomial, Slot};

pub(super) fn laws() -> Vec<Law> {
    vec![
        law("rd1-linearity", |c| {
            let f = c.single_map();
            let g = c.map(f.domain().clone(), f.codomain_dim());
            let (s, t) = (c.scalar(), c.scalar());
            let lhs = reverse_derivative(&combo(&s, &f, &t, &g)?)?;
            let rhs = combo(&s, &reverse_derivative(&f)?, &t, &reverse_derivative(&g)?)?;
            Ok(Case::new(vec![f, g], lhs, rhs))
        }),
        law("rd2-cotangent-linear", |c| {
            let f = c.single_map();
            let (s, t) = (c.scalar(), c.scalar());
            let (lhs, rhs) = klinear_case(&reverse_derivative(&f)?, 1, &s, &t)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
        law("rd3-identity", |c| {
            let n = c.dim();
            let id = PolyMap::identity(ArityProfile::single(n));
            let lhs = reverse_derivative(&id)?;
            let rhs = PolyMap::proj(&profile(vec![n, n])?, 1)?;
            Ok(Case::new(vec![id], lhs, rhs))
        }),
        law("rd3-projection", |c| {
            let blocks = c.any_profile();
            let j = c.index(blocks.len());
            let pi = PolyMap::proj(&blocks, j)?.flatten();
            let lhs = reverse_derivative(&pi)?;
            // (0, …, 0, b, 0, …, 0) with b in slot j
            let domain = lhs.domain().clone();
            let slots: Vec<PolyMap> = blocks
                .blocks()
                .iter()
                .enumerate()
                .map(|(k, &d)| {
                    if k == j {
                        PolyMap::proj(&domain, 1)
                    } else {
                        Ok(PolyMap::zero(domain.clone(), d))
                    }
                })
                .collect::<Result<_>>()?;
            Ok(Case::new(vec![pi], lhs, PolyMap::pair(&slots)?))
        }),
        law("rd4-tuple", |c| {
            let n = c.dim();
            let count = 1 + c.index(3);
            let fs: Vec<PolyMap> = (0..count)
                .map(|_| {
                    let m = c.dim();
                    c.map(ArityProfile::single(n), m)
                })
                .collect();
            let mut blocks = vec![n];
            blocks.extend(fs.iter().map(PolyMap::codomain_dim));
            let domain = profile(blocks)?;
            let lhs = reverse_derivative(&PolyMap::pair(&fs)?)?.reblock(domain.clone())?;
            let parts: Vec<PolyMap> = fs
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    reverse_derivative(f)?
                        .rewire(domain.clone(), &[Slot::Block(0), Slot::Block(1 + i)])
                })
                .collect::<Result<_>>()?;
            let rhs = PolyMap::sum(&parts)?.expect("at least one component");
            Ok(Case::new(fs, lhs, rhs))
        }),
        law("rd5-chain", |c| {
            let (f, g) = c.composable_pair();
            let (lhs, rhs) = reverse_chain(&f, &g)?;
            Ok(Case::new(vec![f, g], lhs, rhs))
        }),
        law("rd6-transpose-involution", |c| {
            let f = c.single_map();
            let (n, m) = (f.domain().total(), f.codomain_dim());
            let r = reverse_derivative(&f)?;
            // u ↦ R[f](a, u), reversed at u = 0: (a, v) ↦ B
            let once = partial_reverse(&r, 1)?.rewire(
                profile(vec![n, n])?,
                &[Slot::Block(0), Slot::Zero(m), Slot::Block(1)],
            )?;
            // and again in v at v = 0: (a, b) ↦ A
            let twice = partial_reverse(&once, 1)?.rewire(
                profile(vec![n, m])?,
                &[Slot::Block(0), Slot::Zero(n), Slot::Block(1)],
            )?;
            Ok(Case::new(vec![f], twice, r))
        }),
        law("rd7-mixed-symmetry", |c| {
            let f = c.single_map();
            let u = mixed_second(&f)?;
            let swapped = u.permute_blocks(&[0, 2, 1])?;
            Ok(Case::new(vec![f], u, swapped))
        }),
        law("schwarz", |c| {
            let n = c.dim();
            let p = c.polynomial(n);
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    lhs.push(p.partial(i)?.partial(j)?);
                    rhs.push(p.partial(j)?.partial(i)?);
                }
            }
            let single = |coords: Vec<Polynomial>| PolyMap::new(ArityProfile::single(n), coords);
            let input = single(vec![p.clone()])?;
            Ok(Case::new(vec![input], single(lhs)?, single(rhs)?))
        }),
        law("partials-tuple", |c| {
            let domain = c.any_profile();
            let m = c.dim();
            let f = c.map(domain.clone(), m);
            let lhs = reverse_derivative(&f.flatten())?.reblock(domain.extend(&[m]))?;
            let parts: Vec<PolyMap> = (0..domain.len())
                .map(|j| partial_reverse(&f, j))
                .collect::<Result<_>>()?;
            Ok(Case::new(vec![f], lhs, PolyMap::pair(&parts)?))
        }),
        law("forward-from-reverse", |c| {
            let f = c.single_map();
            let lhs = forward_from_reverse(&f)?;
            let rhs = forward_derivative(&f)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
        law("forward-chain", |c| {
            let (f, g) = c.composable_pair();
            let (lhs, rhs) = forward_chain(&f, &g)?;
            Ok(Case::new(vec![f, g], lhs, rhs))
        }),
        law("forward-partials-sum", |c| {
            let domain = c.any_profile();
            let m = c.dim();
            let f = c.map(domain.clone(), m);
            let k = domain.len();
            let doubled = domain.extend(domain.blocks());
            let lhs = forward_derivative(&f.flatten())?.reblock(doubled.clone())?;
            let parts: Vec<PolyMap> = (0..k)
                .map(|j| {
                    let mut slots: Vec<Slot> = (0..k).map(Slot::Block).collect();
                    slots.push(Slot::Block(k + j));
                    partial_forward(&f, j)?.rewire(doubled.clone(), &slots)
                })
                .collect::<Result<_>>()?;
            let rhs = PolyMap::sum(&parts)?.expect("at least one block");
            Ok(Case::new(vec![f], lhs, rhs))
        }),
    ]
}

/// `R[g∘f]` against `R[f](a, R[g](f(a), b))`, over `A × C`.
pub(super) fn reverse_chain(f: &PolyMap, g: &PolyMap) -> Result<(PolyMap, PolyMap)> {
    let lhs = reverse_derivative(&g.compose(f)?)?;
    let domain = lhs.domain().clone();
    let ps = projections(&domain)?;
    let image = f.rewire(domain.clone(), &[Slot::Block(0)])?;
    let pulled = apply(&reverse_derivative(g)?, &[image, ps[1].clone()])?;
    let rhs = apply(&reverse_derivative(f)?, &[ps[0].clone(), pulled])?;
    Ok((lhs, rhs))
}

/// `D[g∘f]` against `D[g](f(a), D[f](a, v))`, over `A × A`.
pub(super) fn forward_chain(f: &PolyMap, g: &PolyMap) -> Result<(PolyMap, PolyMap)> {
    let lhs = forward_derivative(&g.compose(f)?)?;
    let domain = lhs.domain().clone();
    let image = f.rewire(domain.clone(), &[Slot::Block(0)])?;
    let rhs = apply(&forward_derivative(g)?, &[image, forward_derivative(f)?])?;
    Ok((lhs, rhs))
}

/// The mixed second derivative `(a, b, c) ↦ B` built from reverse
/// derivatives alone, as in the seventh axiom.
fn mixed_second(f: &PolyMap) -> Result<PolyMap> {
    let (n, m) = (f.domain().total(), f.codomain_dim());
    let tangent = partial_reverse(&reverse_derivative(f)?, 1)?.rewire(
        profile(vec![n, n])?,
        &[Slot::Block(0), Slot::Zero(m), Slot::Block(1)],
    )?;
    let s = partial_reverse(&tangent, 0)?;
    partial_reverse(&s, 2)?.rewire(
        profile(vec![n, n, n])?,
        &[
            Slot::Block(0),
            Slot::Block(1),
            Slot::Zero(m),
            Slot::Block(2),
        ],
    )
}
