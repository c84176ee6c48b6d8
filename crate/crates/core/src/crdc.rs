//! First-order combinators on polynomial maps.
//!
//! Block indices are 0-based throughout: block `j` here is the `(j+1)`-th
//! factor `A_{j+1}` of the domain `A₁ × ⋯ × Aₙ`.
//!
//! Every derived map appends its fresh argument blocks after the existing
//! ones, so a derivative's variables continue the numbering of its input.

use crate::comparison::Comparison;
use crate::error::{Error, Result};
use crate::poly::{ArityProfile, PolyMap, Polynomial, Slot};

fn single_block_dim(f: &PolyMap) -> Result<usize> {
    match f.domain().blocks() {
        [n] => Ok(*n),
        blocks => Err(Error::MultiBlockDomain(blocks.len())),
    }
}

/// Lifts a polynomial in `dim` variables into `target` variables, keeping
/// the existing ones in place.
fn lift(p: &Polynomial, target: usize) -> Polynomial {
    let mapping: Vec<Option<usize>> = (0..p.dim()).map(Some).collect();
    p.remap(&mapping, target).expect("lift into a larger space")
}

/// Reverse derivative `R[f] : A × B → A`, the transposed Jacobian applied to
/// a cotangent: `R[f](x, y)_i = Σ_j ∂f_j/∂x_i(x) · y_j`.
pub fn reverse_derivative(f: &PolyMap) -> Result<PolyMap> {
    let n = single_block_dim(f)?;
    let m = f.codomain_dim();
    let total = n + m;
    let cotangent: Vec<Polynomial> = (0..m)
        .map(|j| Polynomial::var(total, n + j))
        .collect::<Result<_>>()?;
    let mut coords = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = Polynomial::zero(total);
        for (fj, yj) in f.coords().iter().zip(&cotangent) {
            let d = fj.partial(i)?;
            if !d.is_zero() {
                acc = &acc + &(&lift(&d, total) * yj);
            }
        }
        coords.push(acc);
    }
    PolyMap::new(ArityProfile::new(vec![n, m])?, coords)
}

/// Forward derivative `D[f] : A × A → B`, the Jacobian applied to a tangent:
/// `D[f](x, v)_j = Σ_i ∂f_j/∂x_i(x) · v_i`.
pub fn forward_derivative(f: &PolyMap) -> Result<PolyMap> {
    let n = single_block_dim(f)?;
    let total = 2 * n;
    let tangent: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::var(total, n + i))
        .collect::<Result<_>>()?;
    let mut coords = Vec::with_capacity(f.codomain_dim());
    for fj in f.coords() {
        let mut acc = Polynomial::zero(total);
        for (i, vi) in tangent.iter().enumerate() {
            let d = fj.partial(i)?;
            if !d.is_zero() {
                acc = &acc + &(&lift(&d, total) * vi);
            }
        }
        coords.push(acc);
    }
    PolyMap::new(ArityProfile::new(vec![n, n])?, coords)
}

/// Partial reverse derivative `R_j[f] : A₁ × ⋯ × Aₙ × B → A_j`, the `j`-th
/// block of the reverse derivative of the flattened map.
pub fn partial_reverse(f: &PolyMap, block: usize) -> Result<PolyMap> {
    let range = f.domain().range(block)?;
    let total = reverse_derivative(&f.flatten())?;
    total
        .outputs(range)?
        .reblock(f.domain().extend(&[f.codomain_dim()]))
}

/// Partial forward derivative `D_j[f] : A₁ × ⋯ × Aₙ × A_j → B`: the forward
/// derivative of the flattened map with zero tangent in every block but `j`.
pub fn partial_forward(f: &PolyMap, block: usize) -> Result<PolyMap> {
    let domain = f.domain();
    let dj = domain.dim(block)?;
    let n = domain.len();
    let total = forward_derivative(&f.flatten())?;
    let mut slots: Vec<Slot> = (0..n).map(Slot::Block).collect();
    for (k, &d) in domain.blocks().iter().enumerate() {
        slots.push(if k == block {
            Slot::Block(n)
        } else {
            Slot::Zero(d)
        });
    }
    total.rewire(domain.extend(&[dj]), &slots)
}

/// `R₂[R[f]]` with the cotangent argument set to zero. In this model it
/// coincides with [`forward_derivative`].
pub fn forward_from_reverse(f: &PolyMap) -> Result<PolyMap> {
    let n = single_block_dim(f)?;
    let m = f.codomain_dim();
    let r = reverse_derivative(f)?;
    let rr = partial_reverse(&r, 1)?;
    rr.rewire(
        ArityProfile::new(vec![n, n])?,
        &[Slot::Block(0), Slot::Zero(m), Slot::Block(1)],
    )
}

/// Both sides of the D-linearity equation in `block`: `D_j[f]` against `f`
/// with block `j` replaced by the tangent argument.
pub fn dlinear_comparison(f: &PolyMap, block: usize) -> Result<Comparison> {
    let dj = partial_forward(f, block)?;
    let n = f.domain().len();
    let slots: Vec<Slot> = (0..n)
        .map(|k| Slot::Block(if k == block { n } else { k }))
        .collect();
    let substituted = f.rewire(dj.domain().clone(), &slots)?;
    Ok(Comparison::new(dj, substituted))
}

/// Whether `f` is D-linear in `block`, decided by exact comparison.
pub fn is_dlinear(f: &PolyMap, block: usize) -> Result<bool> {
    Ok(dlinear_comparison(f, block)?.holds())
}

/// A map together with the block it is D-linear in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaggerSpec {
    map: PolyMap,
    linear_block: usize,
}

impl DaggerSpec {
    /// Fails with [`Error::NotDLinear`] unless `map` is D-linear in `linear_block`.
    pub fn new(map: PolyMap, linear_block: usize) -> Result<Self> {
        if !is_dlinear(&map, linear_block)? {
            return Err(Error::NotDLinear(linear_block));
        }
        Ok(DaggerSpec { map, linear_block })
    }

    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn linear_block(&self) -> usize {
        self.linear_block
    }

    /// The D-linear transpose: for `f : C₁ × A × C₂ → B` linear in `A`,
    /// `f† : C₁ × B × C₂ → A` is `R_A[f]` taken at zero in `A`.
    pub fn transpose(&self) -> Result<PolyMap> {
        let f = &self.map;
        let block = self.linear_block;
        let domain = f.domain();
        let m = f.codomain_dim();
        let rj = partial_reverse(f, block)?;
        let mut slots: Vec<Slot> = domain
            .blocks()
            .iter()
            .enumerate()
            .map(|(k, &d)| {
                if k == block {
                    Slot::Zero(d)
                } else {
                    Slot::Block(k)
                }
            })
            .collect();
        slots.push(Slot::Block(block));
        rj.rewire(domain.replace(block, m)?, &slots)
    }
}

/// Shorthand for `DaggerSpec::new(f.clone(), block)?.transpose()`.
pub fn dagger(f: &PolyMap, block: usize) -> Result<PolyMap> {
    DaggerSpec::new(f.clone(), block)?.transpose()
}

fn context_split(f: &PolyMap, context_dim: usize) -> Result<usize> {
    let total = f.domain().total();
    total.checked_sub(context_dim).ok_or_else(|| {
        Error::BlockMismatch(format!(
            "context of dimension {context_dim} exceeds domain {}",
            f.domain()
        ))
    })
}

/// Composition in the simple slice over a context `C`: for `f : C × A → B`
/// and `g : C × B → D`, returns `g ∘ ⟨π₁, f⟩ : C × A → D`.
///
/// The first `context_dim` flat coordinates of `f`'s domain are the
/// context; the result keeps `f`'s domain profile.
pub fn slice_compose(g: &PolyMap, f: &PolyMap, context_dim: usize) -> Result<PolyMap> {
    context_split(f, context_dim)?;
    if g.domain().total() != context_dim + f.codomain_dim() {
        return Err(Error::BlockMismatch(format!(
            "outer map has domain {}, expected context {context_dim} plus {}",
            g.domain(),
            f.codomain_dim()
        )));
    }
    let total = f.domain().total();
    let mut coords: Vec<Polynomial> = (0..context_dim)
        .map(|i| Polynomial::var(total, i))
        .collect::<Result<_>>()?;
    coords.extend(f.coords().iter().cloned());
    let inner = PolyMap::new(f.domain().clone(), coords)?;
    g.compose(&inner)
}

/// Identity of the slice over `C`: the projection `π₂ : C × A → A`.
pub fn slice_identity(context_dim: usize, dim: usize) -> PolyMap {
    let profile = ArityProfile::new(vec![context_dim, dim]).expect("two blocks");
    PolyMap::proj(&profile, 1).expect("block 1 exists")
}

/// Reverse derivative in the slice over `C`: `R^C[f] : C × A × B → A`.
/// This is the partial reverse derivative in the second block of `f`
/// regrouped as `(C, A)`.
pub fn slice_reverse(f: &PolyMap, context_dim: usize) -> Result<PolyMap> {
    let rest = context_split(f, context_dim)?;
    let regrouped = f.reblock(ArityProfile::new(vec![context_dim, rest])?)?;
    partial_reverse(&regrouped, 1)
}
