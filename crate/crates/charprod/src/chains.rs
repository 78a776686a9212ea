//! The Ω lattice of kernel intersections, maximal (Ω,χ)-reducing chains,
//! and the composition-product bound p(n).
//!
//! A chain starts at (G, χ) and repeatedly descends to a maximal member of
//! Ω on which the current character restricts reducibly, tracking a
//! constituent of each restriction. Everything is deterministic: ties are
//! broken by largest order, then smallest member set, and constituents are
//! taken in table order.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{decompose, eta_of_row, restriction_norm, Decomposition};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::{materialize, ElemSet, Group, Materialized, Subgroup};
use crate::lattice::normal_subgroups;
use crate::table::{character_table, CharacterTable};

/// All intersections of kernels of the non-principal constituents of
/// χ·conj(χ), with G itself for the empty intersection.
#[derive(Clone, Debug)]
pub struct OmegaLattice {
    pub members: Vec<Subgroup>,
    pub bottom: Subgroup,
}

/// Distinct-intersection cap. The subset count 2^n never materializes since
/// duplicates are folded after every kernel; the lattice stays small even
/// when η is large (the order-125 extraspecial group has η = 24 but only 8
/// distinct intersections), so the guard is on the realized size.
const OMEGA_MEMBER_CAP: usize = 4096;

pub fn omega(group: &Group, kernels: &[Subgroup]) -> Result<OmegaLattice> {
    let mut members: Vec<ElemSet> = vec![ElemSet::full(group.order())];
    for ker in kernels {
        let mut fresh = Vec::new();
        for m in &members {
            let meet = m.intersect(&ker.members);
            if !members.contains(&meet) && !fresh.contains(&meet) {
                fresh.push(meet);
            }
        }
        members.extend(fresh);
        if members.len() > OMEGA_MEMBER_CAP {
            return Err(Error::Capacity {
                order: members.len(),
                cap: OMEGA_MEMBER_CAP,
            });
        }
    }
    let mut bottom = ElemSet::full(group.order());
    for ker in kernels {
        bottom = bottom.intersect(&ker.members);
    }
    members.sort_by(|a, b| a.cmp_size_then_members(b));
    Ok(OmegaLattice {
        members: members
            .into_iter()
            .map(|m| Subgroup { members: m })
            .collect(),
        bottom: Subgroup { members: bottom },
    })
}

/// A subgroup together with its own character table.
pub struct SubCtx {
    pub mat: Materialized,
    pub table: CharacterTable,
}

impl SubCtx {
    /// Map a subgroup of the parent into this subgroup's index space.
    pub fn pull_set(&self, s: &Subgroup) -> Vec<usize> {
        s.members
            .iter()
            .map(|x| self.mat.from_parent[x].expect("set not inside subgroup"))
            .collect()
    }

    /// Values of a parent-indexed character on this subgroup's classes.
    pub fn pull_values(&self, parent_classes: &crate::group::Classes, values: &[Cyc]) -> Vec<Cyc> {
        (0..self.table.classes.count)
            .map(|c| {
                let local = self.table.classes.rep[c];
                values[parent_classes.class_of[self.mat.to_parent[local]]].clone()
            })
            .collect()
    }
}

/// Shared state for chain building and verification on one faithful (G, χ).
pub struct ChainContext {
    pub group: Arc<Group>,
    pub table: Arc<CharacterTable>,
    pub chi_row: usize,
    pub decomposition: Decomposition,
    /// kernels of the constituents, parallel to `decomposition.constituents`
    pub kernels: Vec<Subgroup>,
    pub omega: OmegaLattice,
    /// full normal-subgroup lattice of G
    pub lattice: Vec<Subgroup>,
    cache: RefCell<HashMap<Vec<usize>, Arc<SubCtx>>>,
}

impl ChainContext {
    pub fn new(table: Arc<CharacterTable>, chi_row: usize) -> Result<ChainContext> {
        let lattice = normal_subgroups(&table);
        Self::with_lattice(table, chi_row, lattice)
    }

    /// Like `new`, but reuses an already-computed normal-subgroup lattice.
    pub fn with_lattice(
        table: Arc<CharacterTable>,
        chi_row: usize,
        lattice: Vec<Subgroup>,
    ) -> Result<ChainContext> {
        let group = table.group.clone();
        let decomposition = eta_of_row(&table, chi_row)?;
        let kernels: Vec<Subgroup> = decomposition
            .constituents
            .iter()
            .map(|&(row, _)| table.kernel(row))
            .collect();
        let omega = omega(&group, &kernels)?;
        let ctx = ChainContext {
            group,
            table,
            chi_row,
            decomposition,
            kernels,
            omega,
            lattice,
            cache: RefCell::new(HashMap::new()),
        };
        Ok(ctx)
    }

    pub fn eta(&self) -> usize {
        self.decomposition.eta
    }

    /// Materialized subgroup with its character table, cached by member set.
    pub fn sub_ctx(&self, s: &Subgroup) -> Result<Arc<SubCtx>> {
        let key = s.members.members();
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let mat = materialize(&self.group, s);
        let table = character_table(Arc::new(mat.group.clone()))?;
        let ctx = Arc::new(SubCtx { mat, table });
        self.cache.borrow_mut().insert(key, ctx.clone());
        Ok(ctx)
    }

    /// Normal subgroups of G lying strictly between lo and hi (exclusive of
    /// lo, inclusive of hi when hi itself is normal).
    pub fn normals_in_interval(&self, lo: &Subgroup, hi: &Subgroup) -> Vec<Subgroup> {
        self.lattice
            .iter()
            .filter(|m| {
                m.order() > lo.order()
                    && lo.members.is_subset_of(&m.members)
                    && m.members.is_subset_of(&hi.members)
            })
            .cloned()
            .collect()
    }

    /// Chief factors of G over n inside hi: minimal members of the lattice
    /// interval (n, hi].
    pub fn chief_factors_over(&self, n: &Subgroup, hi: &Subgroup) -> Vec<Subgroup> {
        let candidates: Vec<Subgroup> = self.normals_in_interval(n, hi);
        candidates
            .iter()
            .filter(|l| {
                !candidates
                    .iter()
                    .any(|m| m.order() < l.order() && m.members.is_subset_of(&l.members))
            })
            .cloned()
            .collect()
    }
}

/// One link of a reducing chain: (N_i, θ_i) with θ_i a row of the character
/// table of N_i-as-group.
pub struct ChainStep {
    pub subgroup: Subgroup,
    pub ctx: Arc<SubCtx>,
    pub theta_row: usize,
}

impl ChainStep {
    pub fn theta_values(&self) -> &[Cyc] {
        &self.ctx.table.rows[self.theta_row].values
    }

    pub fn theta_degree(&self) -> usize {
        self.ctx.table.rows[self.theta_row].degree
    }
}

/// A maximal (Ω,χ)-reducing chain with its per-step data.
pub struct Chain {
    /// steps[0] = (G, χ)
    pub steps: Vec<ChainStep>,
    /// r_i = #{α_j : N_i ≤ Ker α_j and N_{i-1} not ≤ Ker α_j}, i = 1..k
    pub r: Vec<usize>,
    /// chosen L_i with L_i/N_i a chief factor of G and L_i ≤ N_{i-1}
    pub chief: Vec<Subgroup>,
}

impl Chain {
    pub fn k(&self) -> usize {
        self.steps.len() - 1
    }
}

/// Values of θ (a character of the step's group) on a member list given in
/// step-local indices; used for reducibility tests.
fn theta_norm_on(step: &ChainStep, local_members: &[usize]) -> Result<i64> {
    restriction_norm(step.theta_values(), &step.ctx.table.classes, local_members)
}

/// The set the Remark's induction works over: members of Ω inside the
/// current subgroup whose restriction of the current θ is reducible.
fn reducing_candidates(context: &ChainContext, step: &ChainStep) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    for m in &context.omega.members {
        if !m.members.is_subset_of(&step.subgroup.members) {
            continue;
        }
        let local: Vec<usize> = m
            .members
            .iter()
            .map(|x| step.ctx.mat.from_parent[x].expect("Ω member inside step subgroup"))
            .collect();
        if theta_norm_on(step, &local)? > 1 {
            out.push(m.clone());
        }
    }
    Ok(out)
}

fn maximal_members(candidates: &[Subgroup]) -> Vec<Subgroup> {
    candidates
        .iter()
        .filter(|m| {
            !candidates
                .iter()
                .any(|bigger| bigger.order() > m.order() && m.members.is_subset_of(&bigger.members))
        })
        .cloned()
        .collect()
}

/// First constituent, in table order, of θ restricted to the sub-context.
fn first_constituent(step: &ChainStep, next: &Arc<SubCtx>) -> Result<usize> {
    let vals = restricted_values(step, next);
    let dec = decompose(&next.table, &vals)?;
    dec.coeffs
        .iter()
        .position(|&c| c > 0)
        .ok_or_else(|| Error::Diagnostic("restriction has no constituents".into()))
}

/// Values of the step's θ on the classes of a smaller sub-context.
pub fn restricted_values(step: &ChainStep, next: &Arc<SubCtx>) -> Vec<Cyc> {
    (0..next.table.classes.count)
        .map(|c| {
            let local = next.table.classes.rep[c];
            let parent = next.mat.to_parent[local];
            let in_step = step.ctx.mat.from_parent[parent].expect("nested subgroup");
            step.theta_values()[step.ctx.table.classes.class_of[in_step]].clone()
        })
        .collect()
}

/// Build the maximal (Ω,χ)-reducing chain for a faithful irreducible χ,
/// following the Remark: pick any maximal element of the reducing set
/// (largest order, then smallest member set) and the first constituent of
/// the restriction, until no member of Ω reduces the current character.
pub fn build_maximal_chain(context: &ChainContext) -> Result<Chain> {
    let full = Subgroup {
        members: context.group.full_set(),
    };
    let root_ctx = context.sub_ctx(&full)?;
    // χ as a row of the materialized full group's table
    let chi_values = &context.table.rows[context.chi_row].values;
    let root_row = root_ctx
        .table
        .find_row_by_values(chi_values)
        .ok_or_else(|| Error::Diagnostic("χ not found in re-materialized table".into()))?;
    let mut steps = vec![ChainStep {
        subgroup: full,
        ctx: root_ctx,
        theta_row: root_row,
    }];
    loop {
        let cur = steps.last().unwrap();
        let candidates = reducing_candidates(context, cur)?;
        if candidates.is_empty() {
            break;
        }
        let mut maximal = maximal_members(&candidates);
        maximal.sort_by(|a, b| {
            b.order()
                .cmp(&a.order())
                .then_with(|| a.members.members().cmp(&b.members.members()))
        });
        let next_sub = maximal[0].clone();
        let next_ctx = context.sub_ctx(&next_sub)?;
        let theta_row = first_constituent(cur, &next_ctx)?;
        steps.push(ChainStep {
            subgroup: next_sub,
            ctx: next_ctx,
            theta_row,
        });
    }
    let (r, chief) = chain_bookkeeping(context, &steps)?;
    Ok(Chain { steps, r, chief })
}

fn chain_bookkeeping(
    context: &ChainContext,
    steps: &[ChainStep],
) -> Result<(Vec<usize>, Vec<Subgroup>)> {
    let mut r = Vec::new();
    let mut chief = Vec::new();
    for i in 1..steps.len() {
        let prev = &steps[i - 1].subgroup;
        let cur = &steps[i].subgroup;
        let ri = context
            .kernels
            .iter()
            .filter(|ker| {
                cur.members.is_subset_of(&ker.members) && !prev.members.is_subset_of(&ker.members)
            })
            .count();
        r.push(ri);
        let l = context
            .chief_factors_over(cur, prev)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Diagnostic("no chief factor over a chain step".into()))?;
        chief.push(l);
    }
    Ok((r, chief))
}

/// Post-hoc validity scan of the Definition's conditions (i) and (ii),
/// by exhaustive search over Ω.
pub fn chain_is_valid(context: &ChainContext, chain: &Chain) -> Result<bool> {
    for i in 1..chain.steps.len() {
        let prev = &chain.steps[i - 1];
        let cur = &chain.steps[i];
        // θ_{i-1} restricted to N_i is reducible and contains θ_i
        let candidates = reducing_candidates(context, prev)?;
        if !candidates.iter().any(|m| m.members == cur.subgroup.members) {
            return Ok(false);
        }
        // maximality (i): nothing in the reducing set strictly contains N_i
        if candidates.iter().any(|m| {
            m.order() > cur.subgroup.order() && cur.subgroup.members.is_subset_of(&m.members)
        }) {
            return Ok(false);
        }
        // θ_i really is a constituent
        let vals = restricted_values(prev, &cur.ctx);
        let dec = decompose(&cur.ctx.table, &vals)?;
        if dec.coeffs[cur.theta_row] == 0 {
            return Ok(false);
        }
    }
    // (ii): any member of Ω strictly below N_k restricts irreducibly
    let last = chain.steps.last().unwrap();
    let final_candidates = reducing_candidates(context, last)?;
    Ok(final_candidates.is_empty())
}

/// Validity of the conjugate-shifted chain (N_i, (θ_i)^g): conjugating every
/// θ_i by a fixed g preserves conditions (i) and (ii).
pub fn conjugate_chain_is_valid(
    context: &ChainContext,
    chain: &Chain,
    g_elem: usize,
) -> Result<bool> {
    // (θ_i)^g(x) = θ_i(g x g^{-1}) is again an irreducible of N_i (the N_i
    // are normal); its restriction behavior is that of θ_i conjugated, so
    // recheck both conditions with conjugated values.
    let g = &context.group;
    let mut conj_rows: Vec<usize> = Vec::new();
    for step in &chain.steps {
        let vals: Vec<Cyc> = (0..step.ctx.table.classes.count)
            .map(|c| {
                let local = step.ctx.table.classes.rep[c];
                let parent = step.ctx.mat.to_parent[local];
                let conj = g.mul(g.mul(g_elem, parent), g.inv(g_elem));
                let local_conj = step.ctx.mat.from_parent[conj].expect("N_i is normal");
                step.theta_values()[step.ctx.table.classes.class_of[local_conj]].clone()
            })
            .collect();
        let row =
            step.ctx.table.find_row_by_values(&vals).ok_or_else(|| {
                Error::Diagnostic("conjugated character missing from table".into())
            })?;
        conj_rows.push(row);
    }
    let steps: Vec<ChainStep> = chain
        .steps
        .iter()
        .zip(&conj_rows)
        .map(|(s, &row)| ChainStep {
            subgroup: s.subgroup.clone(),
            ctx: s.ctx.clone(),
            theta_row: row,
        })
        .collect();
    let shifted = Chain {
        steps,
        r: chain.r.clone(),
        chief: chain.chief.clone(),
    };
    chain_is_valid(context, &shifted)
}

/// Enumerate every maximal (Ω,χ)-reducing chain (all maximal-element and
/// constituent choices); used by the exhaustive mode to confirm that lemma
/// conclusions are choice-independent.
pub fn enumerate_maximal_chains(context: &ChainContext, limit: usize) -> Result<Vec<Chain>> {
    let full = Subgroup {
        members: context.group.full_set(),
    };
    let root_ctx = context.sub_ctx(&full)?;
    let chi_values = &context.table.rows[context.chi_row].values;
    let root_row = root_ctx
        .table
        .find_row_by_values(chi_values)
        .ok_or_else(|| Error::Diagnostic("χ not found in re-materialized table".into()))?;
    let mut done = Vec::new();
    let mut stack: Vec<Vec<ChainStep>> = vec![vec![ChainStep {
        subgroup: full,
        ctx: root_ctx,
        theta_row: root_row,
    }]];
    while let Some(steps) = stack.pop() {
        if done.len() + stack.len() > limit {
            return Err(Error::Capacity {
                order: done.len() + stack.len(),
                cap: limit,
            });
        }
        let cur = steps.last().unwrap();
        let candidates = reducing_candidates(context, cur)?;
        if candidates.is_empty() {
            let (r, chief) = chain_bookkeeping(context, &steps)?;
            done.push(Chain { steps, r, chief });
            continue;
        }
        for next_sub in maximal_members(&candidates) {
            let next_ctx = context.sub_ctx(&next_sub)?;
            let vals = restricted_values(cur, &next_ctx);
            let dec = decompose(&next_ctx.table, &vals)?;
            for (row, &c) in dec.coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let mut branch: Vec<ChainStep> = steps
                    .iter()
                    .map(|s| ChainStep {
                        subgroup: s.subgroup.clone(),
                        ctx: s.ctx.clone(),
                        theta_row: s.theta_row,
                    })
                    .collect();
                branch.push(ChainStep {
                    subgroup: next_sub.clone(),
                    ctx: next_ctx.clone(),
                    theta_row: row,
                });
                stack.push(branch);
            }
        }
    }
    Ok(done)
}

/// p(n): the largest product of positive integers summing to n, by dynamic
/// programming p(n) = max(n, max over j of j·p(n−j)).
pub fn p_max(n: usize) -> u64 {
    assert!((1..=64).contains(&n), "p_max defined for 1 ≤ n ≤ 64");
    let mut p = vec![0u64; n + 1];
    p[1] = 1;
    for m in 2..=n {
        let mut best = m as u64;
        for j in 1..m {
            best = best.max(j as u64 * p[m - j]);
        }
        p[m] = best;
    }
    p[n]
}
