//! The normal-subgroup lattice, chief series, solvability tests, and cores.
//!
//! Normal subgroups are enumerated as intersections of kernels of the
//! irreducible characters (every normal subgroup arises this way), closed
//! under pairwise intersection to a fixed point.

use crate::error::Result;
use crate::group::{derived_length, quotient, ElemSet, Group, Subgroup};
use crate::table::CharacterTable;

/// All normal subgroups of the table's group, sorted by (order, member set).
pub fn normal_subgroups(table: &CharacterTable) -> Vec<Subgroup> {
    let n = table.order();
    let kernels: Vec<ElemSet> = (0..table.rows.len())
        .map(|r| table.kernel(r).members)
        .collect();
    let mut found: Vec<ElemSet> = vec![ElemSet::full(n)];
    for ker in &kernels {
        let mut new_items = Vec::new();
        for existing in &found {
            let meet = existing.intersect(ker);
            if !found.contains(&meet) && !new_items.contains(&meet) {
                new_items.push(meet);
            }
        }
        found.extend(new_items);
    }
    // close under pairwise intersection to a fixed point
    loop {
        let mut new_items: Vec<ElemSet> = Vec::new();
        for i in 0..found.len() {
            for j in i + 1..found.len() {
                let meet = found[i].intersect(&found[j]);
                if !found.contains(&meet) && !new_items.contains(&meet) {
                    new_items.push(meet);
                }
            }
        }
        if new_items.is_empty() {
            break;
        }
        found.extend(new_items);
    }
    found.sort_by(|a, b| a.cmp_size_then_members(b));
    found
        .into_iter()
        .map(|members| Subgroup { members })
        .collect()
}

/// Members of the lattice minimal over n: all L with n < L and nothing of
/// the lattice strictly between.
pub fn minimal_normal_over(n: &Subgroup, lattice: &[Subgroup]) -> Vec<Subgroup> {
    let over: Vec<&Subgroup> = lattice
        .iter()
        .filter(|l| n.members.is_subset_of(&l.members) && l.order() > n.order())
        .collect();
    over.iter()
        .filter(|l| {
            !over.iter().any(|m| {
                m.order() > n.order() && m.order() < l.order() && m.members.is_subset_of(&l.members)
            })
        })
        .map(|l| (*l).clone())
        .collect()
}

/// One chief series of G, stored descending G = K_0 > … > K_m = 1.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub terms: Vec<Subgroup>,
    pub factor_orders: Vec<usize>,
    pub factor_is_prime: Vec<bool>,
}

/// Built bottom-up by repeatedly taking the first minimal normal subgroup
/// over the current term (ties: smallest order, then smallest member set,
/// which is the lattice sort order).
pub fn chief_series(g: &Group, lattice: &[Subgroup]) -> ChiefSeries {
    let mut ascending = vec![Subgroup {
        members: g.trivial_set(),
    }];
    loop {
        let cur = ascending.last().unwrap();
        if cur.order() == g.order() {
            break;
        }
        let next = minimal_normal_over(cur, lattice)
            .into_iter()
            .next()
            .expect("lattice always contains G above any proper member");
        ascending.push(next);
    }
    ascending.reverse();
    let terms = ascending;
    let factor_orders: Vec<usize> = terms
        .windows(2)
        .map(|w| w[0].order() / w[1].order())
        .collect();
    let factor_is_prime = factor_orders
        .iter()
        .map(|&o| crate::modp::is_prime(o as u64))
        .collect();
    ChiefSeries {
        terms,
        factor_orders,
        factor_is_prime,
    }
}

pub fn is_solvable(g: &Group) -> bool {
    derived_length(g).is_some()
}

/// Supersolvable iff every chief factor of the computed series has prime
/// order (chief-factor orders are series-independent by Jordan–Hölder).
pub fn is_supersolvable(series: &ChiefSeries) -> bool {
    series.factor_is_prime.iter().all(|&b| b)
}

/// core_G(M) = ⋂ over g of M^g: the largest normal subgroup inside M.
pub fn core(g: &Group, m: &Subgroup) -> Subgroup {
    let n = g.order();
    let mut acc = m.members.clone();
    for t in 0..n {
        let mut conj = ElemSet::empty(n);
        for x in m.members.iter() {
            conj.insert(g.conj(x, t));
        }
        acc = acc.intersect(&conj);
    }
    Subgroup { members: acc }
}

/// dl(G/N) for normal N.
pub fn derived_length_of_quotient(g: &Group, n: &Subgroup) -> Result<Option<usize>> {
    let (q, _) = quotient(g, n)?;
    Ok(derived_length(&q))
}
