//! Higher-order reverse and forward derivatives.
//!
//! For `f : A → B`:
//!
//! * `ρ⁽ⁿ⁺¹⁾[f] : A × B × Aⁿ → A` iterates the partial reverse derivative in
//!   the first block, starting from `R[f]`. Its arguments are conventionally
//!   named `(a₀, b, a₂, …, aₙ₊₁)`; position `k ≥ 2` of that naming is block
//!   `k` of the domain (0-based).
//! * `∂⁽ⁿ⁺¹⁾[f] : A × Aⁿ⁺¹ → B` iterates the partial forward derivative in the
//!   first block, starting from `D[f]`, with arguments `(a₀, a₁, …, aₙ₊₁)`.
//!
//! Order zero returns `f` itself for both.

use crate::comparison::Comparison;
use crate::crdc::{
    dagger, forward_derivative, partial_forward, partial_reverse, reverse_derivative,
};
use crate::error::{Error, Result};
use crate::poly::PolyMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivativeKind {
    Reverse,
    Forward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherDerivative {
    pub base: PolyMap,
    pub order: usize,
    pub kind: DerivativeKind,
    pub result: PolyMap,
}

impl HigherDerivative {
    pub fn into_map(self) -> PolyMap {
        self.result
    }
}

fn require_single_block(f: &PolyMap) -> Result<()> {
    if f.domain().len() != 1 {
        return Err(Error::MultiBlockDomain(f.domain().len()));
    }
    Ok(())
}

fn iterate(
    f: &PolyMap,
    order: usize,
    kind: DerivativeKind,
    first: fn(&PolyMap) -> Result<PolyMap>,
    step: fn(&PolyMap, usize) -> Result<PolyMap>,
) -> Result<HigherDerivative> {
    require_single_block(f)?;
    let mut result = f.clone();
    if order > 0 {
        result = first(f)?;
        for _ in 1..order {
            result = step(&result, 0)?;
        }
    }
    Ok(HigherDerivative {
        base: f.clone(),
        order,
        kind,
        result,
    })
}

/// `ρ⁽ᵒʳᵈᵉʳ⁾[f]`.
pub fn rho(f: &PolyMap, order: usize) -> Result<HigherDerivative> {
    iterate(
        f,
        order,
        DerivativeKind::Reverse,
        reverse_derivative,
        partial_reverse,
    )
}

/// `∂⁽ᵒʳᵈᵉʳ⁾[f]`.
pub fn del(f: &PolyMap, order: usize) -> Result<HigherDerivative> {
    iterate(
        f,
        order,
        DerivativeKind::Forward,
        forward_derivative,
        partial_forward,
    )
}

/// Block order that moves the last block of an `(n+2)`-block domain into
/// position 1: `(x₀, x₁, …, xₙ, y) ↦ (x₀, y, x₁, …, xₙ)`.
fn last_to_second(blocks: usize) -> Vec<usize> {
    let mut order = vec![0, blocks - 1];
    order.extend(1..blocks - 1);
    order
}

/// Block order that swaps the last two blocks.
fn swap_last_two(blocks: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..blocks).collect();
    order.swap(blocks - 2, blocks - 1);
    order
}

/// Stable rule: `R₁[D[f]]` with its last two blocks swapped against
/// `R₁[R[f]]`, both as maps `A × B × A → A`.
pub fn check_stable_rule(f: &PolyMap) -> Result<Comparison> {
    require_single_block(f)?;
    let lhs = partial_reverse(&forward_derivative(f)?, 0)?;
    let rhs = partial_reverse(&reverse_derivative(f)?, 0)?;
    Ok(Comparison::new(lhs.permute_blocks(&swap_last_two(3))?, rhs))
}

/// The stable rule with context: for `g` with any block profile, derivatives
/// are taken in `block` while the other blocks are carried along.
///
/// Compares `R_j[D_j[g]]` (last two blocks swapped) with `R_j[R_j[g]]`.
pub fn check_stable_rule_in_context(g: &PolyMap, block: usize) -> Result<Comparison> {
    let lhs = partial_reverse(&partial_forward(g, block)?, block)?;
    let rhs = partial_reverse(&partial_reverse(g, block)?, block)?;
    let n = lhs.domain().len();
    Ok(Comparison::new(lhs.permute_blocks(&swap_last_two(n))?, rhs))
}

/// Stable rule written against the second reverse derivative: `R₁[D[f]]`
/// (swapped) against `ρ⁽²⁾[f]`.
pub fn check_stable_rule_rho(f: &PolyMap) -> Result<Comparison> {
    require_single_block(f)?;
    let lhs = partial_reverse(&forward_derivative(f)?, 0)?;
    let rhs = rho(f, 2)?.result;
    Ok(Comparison::new(lhs.permute_blocks(&swap_last_two(3))?, rhs))
}

/// Reverse derivative in the base point of `∂⁽ⁿ⁾[f]` compared with
/// `ρ⁽ⁿ⁺¹⁾[f]`. The cotangent, which arrives last, is moved to position 1.
pub fn check_base_reverse_of_del(f: &PolyMap, n: usize) -> Result<Comparison> {
    let d = del(f, n)?.result;
    let lhs = partial_reverse(&d, 0)?;
    let blocks = lhs.domain().len();
    let rhs = rho(f, n + 1)?.result;
    Ok(Comparison::new(
        lhs.permute_blocks(&last_to_second(blocks))?,
        rhs,
    ))
}

/// The transpose of `∂⁽ᵒʳᵈᵉʳ⁾[f]` in its second block against `ρ⁽ᵒʳᵈᵉʳ⁾[f]`.
pub fn check_dagger_bridge(f: &PolyMap, order: usize) -> Result<Comparison> {
    if order == 0 {
        return Err(Error::Usage("the dagger bridge needs order >= 1".into()));
    }
    let d = del(f, order)?.result;
    let lhs = dagger(&d, 1)?;
    let rhs = rho(f, order)?.result;
    Ok(Comparison::new(lhs, rhs))
}
