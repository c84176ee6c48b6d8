//! The stable rule and its consequences.

use super::{law, Case, Law};
use crate::comparison::Comparison;
use crate::higher_order::{
    check_base_reverse_of_del, check_stable_rule, check_stable_rule_in_context,
    check_stable_rule_rho,
};
use crate::poly::PolyMap;

fn case(maps: Vec<PolyMap>, cmp: Comparison) -> Case {
    Case::new(maps, cmp.lhs, cmp.rhs)
}

pub(super) fn laws(max_order: usize) -> Vec<Law> {
    let mut laws = vec![
        law("stable-rule", |c| {
            let f = c.single_map();
            let cmp = check_stable_rule(&f)?;
            Ok(case(vec![f], cmp))
        }),
        law("stable-rule-context", |c| {
            let domain = c.any_profile();
            let m = c.dim();
            let g = c.map(domain.clone(), m);
            let j = c.index(domain.len());
            let cmp = check_stable_rule_in_context(&g, j)?;
            Ok(case(vec![g], cmp))
        }),
        law("stable-rule-rho", |c| {
            let f = c.single_map();
            let cmp = check_stable_rule_rho(&f)?;
            Ok(case(vec![f], cmp))
        }),
    ];
    for n in 0..=max_order {
        laws.push(law(format!("base-reverse-of-del.n{n}"), move |c| {
            let f = c.single_map();
            let cmp = check_base_reverse_of_del(&f, n)?;
            Ok(case(vec![f], cmp))
        }));
    }
    laws
}
