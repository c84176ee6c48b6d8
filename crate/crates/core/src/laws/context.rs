//! The axioms again as identities of the partial reverse derivative in the
//! middle block of `C₁ × A × C₂`, with both context blocks present.

use super::{apply, combo, klinear_case, law, profile, projections, Case, Law};
use crate::corpus::Corpus;
use crate::crdc::{partial_reverse, slice_compose, slice_reverse};
use crate::error::Result;
use crate::poly::{ArityProfile, PolyMap, Slot};

const MIDDLE: usize = 1;

fn context_profile(c: &mut Corpus) -> ArityProfile {
    c.profile(3)
}

/// `⟨c₁, f(c₁, x, c₂), c₂⟩`.
fn carry(f: &PolyMap) -> Result<PolyMap> {
    let ps = projections(f.domain())?;
    PolyMap::pair(&[ps[0].clone(), f.clone(), ps[2].clone()])
}

pub(super) fn laws() -> Vec<Law> {
    vec![
        law("ctx-rd1-linearity", |c| {
            let domain = context_profile(c);
            let m = c.dim();
            let f = c.map(domain.clone(), m);
            let g = c.map(domain, m);
            let (s, t) = (c.scalar(), c.scalar());
            let lhs = partial_reverse(&combo(&s, &f, &t, &g)?, MIDDLE)?;
            let rhs = combo(
                &s,
                &partial_reverse(&f, MIDDLE)?,
                &t,
                &partial_reverse(&g, MIDDLE)?,
            )?;
            Ok(Case::new(vec![f, g], lhs, rhs))
        }),
        law("ctx-rd2-cotangent-linear", |c| {
            let domain = context_profile(c);
            let m = c.dim();
            let f = c.map(domain, m);
            let (s, t) = (c.scalar(), c.scalar());
            let (lhs, rhs) = klinear_case(&partial_reverse(&f, MIDDLE)?, 3, &s, &t)?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
        law("ctx-rd3-projection", |c| {
            let domain = context_profile(c);
            let x = PolyMap::proj(&domain, MIDDLE)?;
            // in block j the derivative of x is zero unless j is x's own block
            let lhs: Vec<PolyMap> = (0..3)
                .map(|j| partial_reverse(&x, j))
                .collect::<Result<_>>()?;
            let extended = domain.extend(&[x.codomain_dim()]);
            let rhs: Vec<PolyMap> = (0..3)
                .map(|j| {
                    if j == MIDDLE {
                        PolyMap::proj(&extended, 3)
                    } else {
                        Ok(PolyMap::zero(extended.clone(), domain.dim(j)?))
                    }
                })
                .collect::<Result<_>>()?;
            Ok(Case::new(
                vec![x],
                PolyMap::pair(&lhs)?,
                PolyMap::pair(&rhs)?,
            ))
        }),
        law("ctx-rd4-tuple", |c| {
            let domain = context_profile(c);
            let count = 1 + c.index(3);
            let fs: Vec<PolyMap> = (0..count)
                .map(|_| {
                    let m = c.dim();
                    c.map(domain.clone(), m)
                })
                .collect();
            let codims: Vec<usize> = fs.iter().map(PolyMap::codomain_dim).collect();
            let split = domain.extend(&codims);
            let lhs = partial_reverse(&PolyMap::pair(&fs)?, MIDDLE)?.reblock(split.clone())?;
            let parts: Vec<PolyMap> = fs
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let slots = [
                        Slot::Block(0),
                        Slot::Block(1),
                        Slot::Block(2),
                        Slot::Block(3 + i),
                    ];
                    partial_reverse(f, MIDDLE)?.rewire(split.clone(), &slots)
                })
                .collect::<Result<_>>()?;
            let rhs = PolyMap::sum(&parts)?.expect("at least one component");
            Ok(Case::new(fs, lhs, rhs))
        }),
        law("ctx-rd5-chain", |c| {
            let domain = context_profile(c);
            let m = c.dim();
            let e = c.dim();
            let f = c.map(domain.clone(), m);
            let g = c.map(domain.replace(MIDDLE, m)?, e);
            let lhs = partial_reverse(&g.compose(&carry(&f)?)?, MIDDLE)?;
            let ext = lhs.domain().clone();
            let ps = projections(&ext)?;
            let image = f.rewire(
                ext.clone(),
                &[Slot::Block(0), Slot::Block(1), Slot::Block(2)],
            )?;
            let pulled = apply(
                &partial_reverse(&g, MIDDLE)?,
                &[ps[0].clone(), image, ps[2].clone(), ps[3].clone()],
            )?;
            let rhs = apply(
                &partial_reverse(&f, MIDDLE)?,
                &[ps[0].clone(), ps[1].clone(), ps[2].clone(), pulled],
            )?;
            Ok(Case::new(vec![f, g], lhs, rhs))
        }),
        law("ctx-rd6-transpose-involution", |c| {
            let domain = context_profile(c);
            let m = c.dim();
            let f = c.map(domain.clone(), m);
            let a = domain.dim(MIDDLE)?;
            let h = partial_reverse(&f, MIDDLE)?;
            let keep = [Slot::Block(0), Slot::Block(1), Slot::Block(2)];
            let once = partial_reverse(&h, 3)?.rewire(
                domain.extend(&[a]),
                &[keep[0], keep[1], keep[2], Slot::Zero(m), Slot::Block(3)],
            )?;
            let twice = partial_reverse(&once, 3)?.rewire(
                domain.extend(&[m]),
                &[keep[0], keep[1], keep[2], Slot::Zero(a), Slot::Block(3)],
            )?;
            Ok(Case::new(vec![f], twice, h))
        }),
        law("ctx-rd7-mixed-symmetry", |c| {
            let domain = context_profile(c);
            let m = c.dim();
            let f = c.map(domain.clone(), m);
            let a = domain.dim(MIDDLE)?;
            let keep = [Slot::Block(0), Slot::Block(1), Slot::Block(2)];
            let tangent = partial_reverse(&partial_reverse(&f, MIDDLE)?, 3)?.rewire(
                domain.extend(&[a]),
                &[keep[0], keep[1], keep[2], Slot::Zero(m), Slot::Block(3)],
            )?;
            let s = partial_reverse(&tangent, MIDDLE)?;
            let u = partial_reverse(&s, 4)?.rewire(
                domain.extend(&[a, a]),
                &[
                    keep[0],
                    keep[1],
                    keep[2],
                    Slot::Block(3),
                    Slot::Zero(m),
                    Slot::Block(4),
                ],
            )?;
            let swapped = u.permute_blocks(&[0, 1, 2, 4, 3])?;
            Ok(Case::new(vec![f], u, swapped))
        }),
        law("ctx-pairing-helper", |c| {
            let domain = context_profile(c);
            let m = c.dim();
            let f = c.map(domain.clone(), m);
            let carried = carry(&f)?;
            let split = domain.extend(&[domain.dim(0)?, m, domain.dim(2)?]);
            let lhs = partial_reverse(&carried, MIDDLE)?.reblock(split.clone())?;
            let rhs = partial_reverse(&f, MIDDLE)?.rewire(
                split,
                &[
                    Slot::Block(0),
                    Slot::Block(1),
                    Slot::Block(2),
                    Slot::Block(4),
                ],
            )?;
            Ok(Case::new(vec![f], lhs, rhs))
        }),
        law("ctx-slice-chain", |c| {
            // composition in the simple slice over C, context on the left only
            let ctx = c.dim();
            let (a, m, e) = (c.dim(), c.dim(), c.dim());
            let f = c.map(profile(vec![ctx, a])?, m);
            let g = c.map(profile(vec![ctx, m])?, e);
            let lhs = slice_reverse(&slice_compose(&g, &f, ctx)?, ctx)?;
            let ext = lhs.domain().clone();
            let ps = projections(&ext)?;
            let image = f.rewire(ext.clone(), &[Slot::Block(0), Slot::Block(1)])?;
            let pulled = apply(
                &slice_reverse(&g, ctx)?,
                &[ps[0].clone(), image, ps[2].clone()],
            )?;
            let rhs = apply(
                &slice_reverse(&f, ctx)?,
                &[ps[0].clone(), ps[1].clone(), pulled],
            )?;
            Ok(Case::new(vec![f, g], lhs, rhs))
        }),
    ]
}
