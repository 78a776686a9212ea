//! Machine verification of the structural statements about χ·conj(χ):
//! multiplicity-one at inclusion-maximal kernels, the prime-divisor and
//! derived-length bounds, the center identity, and the per-step facts about
//! maximal reducing chains. Every verifier returns a report rather than
//! panicking; unmet hypotheses are recorded as such, not as failures.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{decompose, product, restriction_norm};
use crate::chains::{
    build_maximal_chain, chain_is_valid, conjugate_chain_is_valid, enumerate_maximal_chains,
    restricted_values, Chain, ChainContext, ChainStep, SubCtx,
};
use crate::cyclotomic::{exact_integer_quotient, Cyc};
use crate::error::{Error, Result};
use crate::group::{
    all_subgroups, center, centralizer_mod, derived_length, lcm, materialize, normalizer, quotient,
    subgroup_generated, ElemSet, Group, Subgroup,
};
use crate::lattice::{chief_series, is_supersolvable, normal_subgroups};
use crate::table::{character_table, CharacterTable};
use crate::zoo::CorpusSpec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    HypothesesNotMet,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesesNotMet => "hypotheses-not-met",
        };
        f.write_str(s)
    }
}

/// Structured pass/fail record for one statement on one (G, χ).
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: &'static str,
    pub group: String,
    /// row index in the group's table, 0-based internally
    pub chi: usize,
    pub status: Status,
    pub detail: String,
}

impl VerificationReport {
    pub fn line(&self) -> String {
        format!(
            "{} group={} chi={} status={} detail={}",
            self.name,
            self.group,
            self.chi + 1,
            self.status,
            self.detail
        )
    }
}

fn report(
    name: &'static str,
    group: &str,
    chi: usize,
    status: Status,
    detail: String,
) -> VerificationReport {
    VerificationReport {
        name,
        group: group.to_string(),
        chi,
        status,
        detail,
    }
}

fn distinct_primes(mut n: usize) -> usize {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += 1;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

fn primes_with_multiplicity(mut n: usize) -> usize {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            count += 1;
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

// ---------------------------------------------------------------------------
// individual verifiers (all on a faithful, normalized context)
// ---------------------------------------------------------------------------

/// Inclusion-maximal kernels among the constituent kernels carry
/// multiplicity 1, and 1 appears among the multiplicities.
pub fn verify_multiplicity_one(
    ctx: &ChainContext,
    solvable: bool,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "multiplicity-one";
    let dec = &ctx.decomposition;
    let maximal: Vec<usize> = (0..ctx.kernels.len())
        .filter(|&j| {
            !ctx.kernels.iter().enumerate().any(|(i, k)| {
                i != j
                    && k.order() > ctx.kernels[j].order()
                    && ctx.kernels[j].members.is_subset_of(&k.members)
            })
        })
        .collect();
    let mut bad = Vec::new();
    for &j in &maximal {
        if dec.constituents[j].1 != 1 {
            bad.push(format!(
                "row {} mult {}",
                dec.constituents[j].0 + 1,
                dec.constituents[j].1
            ));
        }
    }
    let has_one = dec.constituents.iter().any(|&(_, a)| a == 1);
    let conclusion_holds = bad.is_empty() && has_one;
    if !solvable {
        let verdict = if conclusion_holds {
            "conclusion holds anyway"
        } else {
            "conclusion fails"
        };
        let multiset: Vec<i64> = dec.multiplicity_multiset();
        return report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            format!(
                "hypotheses violated: group is not solvable; {verdict}: multiplicities {multiset:?}, 1-in-set={has_one}"
            ),
        );
    }
    if conclusion_holds {
        report(
            NAME,
            group,
            chi,
            Status::Pass,
            format!(
                "{} inclusion-maximal kernels all have multiplicity 1",
                maximal.len()
            ),
        )
    } else {
        report(
            NAME,
            group,
            chi,
            Status::Fail,
            format!("violations: {bad:?}, 1-in-multiset={has_one}"),
        )
    }
}

/// χ_N is irreducible exactly when N lies inside no constituent kernel,
/// for every normal subgroup N.
pub fn verify_restriction_criterion(
    ctx: &ChainContext,
    solvable: bool,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "irreducible-restriction";
    if !solvable {
        return report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            "hypotheses violated: group is not solvable".into(),
        );
    }
    let chi_values = &ctx.table.rows[ctx.chi_row].values;
    for n in &ctx.lattice {
        let members = n.members.members();
        let norm = match restriction_norm(chi_values, &ctx.table.classes, &members) {
            Ok(v) => v,
            Err(e) => return report(NAME, group, chi, Status::Fail, format!("norm error: {e}")),
        };
        let irreducible = norm == 1;
        let outside_all_kernels = ctx
            .kernels
            .iter()
            .all(|k| !n.members.is_subset_of(&k.members));
        if irreducible != outside_all_kernels {
            return report(
                NAME,
                group,
                chi,
                Status::Fail,
                format!(
                    "normal subgroup of order {}: irreducible={irreducible}, kernel-condition={outside_all_kernels}",
                    n.order()
                ),
            );
        }
    }
    report(
        NAME,
        group,
        chi,
        Status::Pass,
        format!("agreement on all {} normal subgroups", ctx.lattice.len()),
    )
}

/// Z(G) equals the meet of the constituent kernels (faithful χ).
pub fn verify_center_meet(ctx: &ChainContext, group: &str, chi: usize) -> VerificationReport {
    const NAME: &str = "center-kernel-meet";
    let z = center(&ctx.group);
    if z.members == ctx.omega.bottom.members {
        report(
            NAME,
            group,
            chi,
            Status::Pass,
            format!("center order {} equals kernel meet", z.order()),
        )
    } else {
        report(
            NAME,
            group,
            chi,
            Status::Fail,
            format!(
                "center order {} but kernel meet order {}",
                z.order(),
                ctx.omega.bottom.order()
            ),
        )
    }
}

/// χ(1) has at most η(χ) distinct prime divisors; in the supersolvable case
/// with χ(1) > 1 it is a product of at most η(χ)−1 primes.
pub fn verify_prime_bound(
    ctx: &ChainContext,
    solvable: bool,
    supersolvable: bool,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "prime-bound";
    let deg = ctx.table.rows[ctx.chi_row].degree;
    let eta = ctx.eta();
    if !solvable {
        return report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            "hypotheses violated: group is not solvable".into(),
        );
    }
    let d = distinct_primes(deg);
    if d > eta {
        return report(
            NAME,
            group,
            chi,
            Status::Fail,
            format!("deg {deg} has {d} distinct primes > eta {eta}"),
        );
    }
    if supersolvable && deg > 1 {
        let m = primes_with_multiplicity(deg);
        if m > eta.saturating_sub(1) {
            return report(
                NAME,
                group,
                chi,
                Status::Fail,
                format!(
                    "supersolvable: deg {deg} is a product of {m} primes > eta-1 = {}",
                    eta - 1
                ),
            );
        }
    }
    report(
        NAME,
        group,
        chi,
        Status::Pass,
        format!("deg {deg}: {d} distinct primes ≤ eta {eta}"),
    )
}

/// dl(G/Ker χ) ≤ 2η(χ) − 1 for supersolvable G and χ(1) > 1; the context is
/// already normalized, so the left side is dl(G).
pub fn verify_supersolvable_derived_bound(
    ctx: &ChainContext,
    supersolvable: bool,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "supersolvable-derived-bound";
    let deg = ctx.table.rows[ctx.chi_row].degree;
    if !supersolvable || deg <= 1 {
        return report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            format!("hypotheses not met: needs a supersolvable group and deg > 1 (deg {deg})"),
        );
    }
    let dl = derived_length(&ctx.group).expect("supersolvable groups are solvable");
    let eta = ctx.eta();
    if dl < 2 * eta {
        report(
            NAME,
            group,
            chi,
            Status::Pass,
            format!("dl {dl} ≤ 2·{eta}−1"),
        )
    } else {
        report(
            NAME,
            group,
            chi,
            Status::Fail,
            format!("dl {dl} > 2·{eta}−1"),
        )
    }
}

/// The four chain invariants: (a) restrictions stay irreducible on normal
/// subgroups strictly between consecutive terms, (b) the last term is
/// abelian, (c) k ≤ η, (d) k ≤ η−1 when supersolvable.
pub fn verify_chain_invariants(
    ctx: &ChainContext,
    chain: &Chain,
    solvable: bool,
    supersolvable: bool,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "chain-invariants";
    if !solvable {
        return report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            "hypotheses violated: group is not solvable".into(),
        );
    }
    let mut problems = Vec::new();
    for i in 1..chain.steps.len() {
        let prev = &chain.steps[i - 1];
        let cur = &chain.steps[i];
        for m in ctx.normals_in_interval(&cur.subgroup, &prev.subgroup) {
            if m.members == cur.subgroup.members {
                continue;
            }
            let local: Vec<usize> = m
                .members
                .iter()
                .map(|x| prev.ctx.mat.from_parent[x].expect("normal subgroup inside step"))
                .collect();
            match restriction_norm(prev.theta_values(), &prev.ctx.table.classes, &local) {
                Ok(1) => {}
                Ok(v) => problems.push(format!(
                    "(a) step {i}: restriction to order-{} normal has norm {v}",
                    m.order()
                )),
                Err(e) => problems.push(format!("(a) step {i}: {e}")),
            }
        }
    }
    let last = chain.steps.last().unwrap();
    if !last.ctx.mat.group.is_abelian() {
        problems.push(format!(
            "(b) final term of order {} is not abelian",
            last.subgroup.order()
        ));
    }
    let k = chain.k();
    let eta = ctx.eta();
    if k > eta {
        problems.push(format!("(c) k = {k} > eta = {eta}"));
    }
    if supersolvable && eta >= 1 && k > eta - 1 {
        problems.push(format!(
            "(d) supersolvable but k = {k} > eta−1 = {}",
            eta - 1
        ));
    }
    if problems.is_empty() {
        report(NAME, group, chi, Status::Pass, format!("k={k} eta={eta}"))
    } else {
        report(NAME, group, chi, Status::Fail, problems.join("; "))
    }
}

/// The vanishing criterion on an abelian chief factor: for a G-invariant
/// irreducible θ of L, the restriction θ_N is reducible iff θ vanishes on
/// L ∖ N; and then θ·conj(θ) − (1_N)^L is zero or a character orthogonal to
/// the N-principal part.
#[allow(clippy::too_many_arguments)]
pub fn verify_chief_vanishing(
    g: &Arc<Group>,
    lattice: &[Subgroup],
    l_sub: &Subgroup,
    l_ctx: &Arc<SubCtx>,
    n_sub: &Subgroup,
    theta_row: usize,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "chief-vanishing";
    // hypotheses
    let mut unmet = Vec::new();
    if !l_sub.is_normal(g) {
        unmet.push("L not normal");
    }
    if !n_sub.is_normal(g) {
        unmet.push("N not normal");
    }
    if !n_sub.members.is_subset_of(&l_sub.members) || n_sub.order() >= l_sub.order() {
        unmet.push("need N < L");
    }
    let abelian_factor = l_sub.members.iter().all(|x| {
        l_sub
            .members
            .iter()
            .all(|y| n_sub.members.contains(g.commutator(x, y)))
    });
    if !abelian_factor {
        unmet.push("L/N not abelian");
    }
    let chief = !lattice.iter().any(|p| {
        p.order() > n_sub.order()
            && p.order() < l_sub.order()
            && n_sub.members.is_subset_of(&p.members)
            && p.members.is_subset_of(&l_sub.members)
    });
    if !chief {
        unmet.push("L/N not a chief factor");
    }
    // G-invariance of θ
    let theta = &l_ctx.table.rows[theta_row].values;
    let invariant = (0..g.order()).all(|t| {
        (0..l_ctx.table.classes.count).all(|c| {
            let x = l_ctx.mat.to_parent[l_ctx.table.classes.rep[c]];
            let y = g.conj(x, t);
            let cy = l_ctx.table.classes.class_of
                [l_ctx.mat.from_parent[y].expect("L is closed under conjugation")];
            cy == c || theta[cy].equals(&theta[c])
        })
    });
    if !invariant {
        unmet.push("θ is not G-invariant");
    }
    if !unmet.is_empty() {
        return report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            format!("hypotheses not met: {}", unmet.join(", ")),
        );
    }

    let n_local: Vec<usize> = n_sub
        .members
        .iter()
        .map(|x| l_ctx.mat.from_parent[x].expect("N inside L"))
        .collect();
    let norm = match restriction_norm(theta, &l_ctx.table.classes, &n_local) {
        Ok(v) => v,
        Err(e) => return report(NAME, group, chi, Status::Fail, format!("{e}")),
    };
    let reducible = norm > 1;
    let vanishing = l_ctx
        .mat
        .to_parent
        .iter()
        .enumerate()
        .all(|(local, &parent)| {
            n_sub.members.contains(parent) || theta[l_ctx.table.classes.class_of[local]].is_zero()
        });
    if reducible != vanishing {
        return report(
            NAME,
            group,
            chi,
            Status::Fail,
            format!("reducible={reducible} but vanishing-off-N={vanishing}"),
        );
    }
    let mut detail = format!("reducible={reducible} vanishing={vanishing}");
    if reducible {
        // Φ = θ·conj(θ) − (1_N)^L must be zero or a character with [Φ_N, 1_N] = 0
        let n_in_l = Subgroup {
            members: {
                let mut s = ElemSet::empty(l_ctx.mat.group.order());
                for &x in &n_local {
                    s.insert(x);
                }
                s
            },
        };
        let n_mat = materialize(&l_ctx.mat.group, &n_in_l);
        let e_n = n_mat.group.exponent();
        let ones = vec![Cyc::integer(e_n, 1); crate::group::conjugacy_classes(&n_mat.group).count];
        let induced = crate::algebra::induce(&ones, &n_mat, &l_ctx.mat.group, &l_ctx.table.classes);
        let theta_sq = product(theta, &l_ctx.table.conjugate_values(theta));
        let e = lcm(theta_sq[0].modulus(), induced[0].modulus());
        let phi: Vec<Cyc> = theta_sq
            .iter()
            .zip(&induced)
            .map(|(a, b)| a.rescale(e).sub(&b.rescale(e)))
            .collect();
        let is_zero = phi.iter().all(|v| v.is_zero());
        if is_zero {
            detail.push_str(" phi=0");
        } else {
            match decompose(&l_ctx.table, &phi) {
                Ok(d) => {
                    detail.push_str(&format!(" phi-constituents={}", d.constituents.len()));
                }
                Err(_) => {
                    return report(
                        NAME,
                        group,
                        chi,
                        Status::Fail,
                        "θθ̄ − (1_N)^L is neither zero nor a character".into(),
                    );
                }
            }
            // [Φ_N, 1_N] = 0
            let mut acc = Cyc::zero(e);
            for &local in &n_local {
                acc = acc.add(&phi[l_ctx.table.classes.class_of[local]]);
            }
            match exact_integer_quotient(&acc, n_local.len() as i64, "[Φ_N, 1_N]") {
                Ok(0) => {}
                Ok(v) => {
                    return report(
                        NAME,
                        group,
                        chi,
                        Status::Fail,
                        format!("[Φ_N, 1_N] = {v} ≠ 0"),
                    )
                }
                Err(e) => return report(NAME, group, chi, Status::Fail, format!("{e}")),
            }
        }
    }
    report(NAME, group, chi, Status::Pass, detail)
}

/// Modular fingerprints of a table's rows, used to identify characters
/// quickly under class permutations.
struct RowIndex {
    fingerprints: HashMap<Vec<u64>, usize>,
    per_row: Vec<Vec<u64>>,
}

impl RowIndex {
    fn new(table: &CharacterTable) -> RowIndex {
        let mut fingerprints = HashMap::new();
        let mut per_row = Vec::new();
        for (i, r) in table.rows.iter().enumerate() {
            let fp: Vec<u64> = r
                .values
                .iter()
                .map(|v| v.eval_mod_p(table.omega_mod_p, table.prime))
                .collect();
            fingerprints.insert(fp.clone(), i);
            per_row.push(fp);
        }
        RowIndex {
            fingerprints,
            per_row,
        }
    }

    /// Row whose values are `row`'s composed with the class permutation σ
    /// (new class c has the value of old class σ(c)).
    fn permuted(&self, row: usize, sigma: &[usize]) -> usize {
        let fp: Vec<u64> = sigma.iter().map(|&c| self.per_row[row][c]).collect();
        *self
            .fingerprints
            .get(&fp)
            .expect("class permutation must permute the rows")
    }
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Per chain step: the orbit bound on the nonprincipal irreducibles of
/// L_i/M, the centralizer derived-length step, and the aggregate counting
/// bounds Σr_i ≤ η and Πr_i ≤ 2^{η−1}.
pub fn verify_chain_step_bounds(
    ctx: &ChainContext,
    chain: &Chain,
    solvable: bool,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "chain-step-bounds";
    if !solvable {
        return report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            "hypotheses violated: group is not solvable".into(),
        );
    }
    if chain.k() == 0 {
        return report(NAME, group, chi, Status::Pass, "k=0, vacuous".into());
    }
    let g = &ctx.group;
    let mut problems = Vec::new();
    let mut unmet = Vec::new();
    for i in 1..chain.steps.len() {
        let prev = &chain.steps[i - 1];
        let cur = &chain.steps[i];
        let l_sub = &chain.chief[i - 1];
        let r_i = chain.r[i - 1];
        let l_ctx = match ctx.sub_ctx(l_sub) {
            Ok(c) => c,
            Err(e) => {
                problems.push(format!("step {i}: {e}"));
                continue;
            }
        };
        // ψ = θ_{i-1} restricted to L_i, irreducible by the chain invariants
        let psi_vals = pull_between(prev, &l_ctx);
        let Some(psi_row) = l_ctx.table.find_row_by_values(&psi_vals) else {
            unmet.push(format!(
                "step {i}: restriction to the chief cover is reducible"
            ));
            continue;
        };
        let psi = &l_ctx.table.rows[psi_row].values;
        // V(ψ): generated by the elements of L_i where ψ does not vanish
        let support: Vec<usize> = (0..l_ctx.mat.group.order())
            .filter(|&local| !psi[l_ctx.table.classes.class_of[local]].is_zero())
            .map(|local| l_ctx.mat.to_parent[local])
            .collect();
        let v_psi = subgroup_generated(g, &support);
        let mut gens = cur.subgroup.members.members();
        gens.extend(v_psi.members.iter());
        let nv = subgroup_generated(g, &gens);
        if nv.order() >= l_sub.order() {
            unmet.push(format!(
                "step {i}: N_i·V(ψ) is not proper in the chief cover"
            ));
            continue;
        }
        // M: maximal subgroup with NV ≤ M < L_i normal in N_{i-1};
        // maximality makes L_i/M a chief factor of N_{i-1}
        let m_sub = match pick_chief_complement(g, &l_ctx, &nv, &prev.subgroup) {
            Some(m) => m,
            None => {
                unmet.push(format!(
                    "step {i}: no normal complement between N_i·V(ψ) and the cover"
                ));
                continue;
            }
        };
        // the G-core of M collapses back to N_i (chief factor over N_i)
        let m_core = crate::lattice::core(g, &m_sub);
        if m_core.members != cur.subgroup.members {
            problems.push(format!(
                "step {i}: core of M has order {} instead of |N_i| = {}",
                m_core.order(),
                cur.subgroup.order()
            ));
        }
        // orbit count of N_G(M) on the nonprincipal irreducibles of L_i/M
        match orbit_count_on_quotient_irreducibles(g, &l_ctx, &m_sub) {
            Ok(orbits) => {
                if orbits > r_i {
                    problems.push(format!("step {i}: {orbits} orbits > r_{i} = {r_i}"));
                }
            }
            Err(e) => problems.push(format!("step {i}: orbit count failed: {e}")),
        }
        // dl(N_{i-1}/N_i) ≤ dl(N_{i-1}/C_{N_{i-1}}(L_i/N_i)) + 1
        let c_sub = centralizer_mod(g, &prev.subgroup, l_sub, &cur.subgroup);
        match (
            quotient_derived_length(&prev.ctx, &cur.subgroup),
            quotient_derived_length(&prev.ctx, &c_sub),
        ) {
            (Ok(Some(dl_n)), Ok(Some(dl_c))) => {
                if dl_n > dl_c + 1 {
                    problems.push(format!("step {i}: dl {dl_n} > dl {dl_c} + 1"));
                }
            }
            _ => problems.push(format!("step {i}: derived lengths unavailable")),
        }
    }
    let eta = ctx.eta();
    let sum: usize = chain.r.iter().sum();
    if sum > eta {
        problems.push(format!("Σr = {sum} > eta = {eta}"));
    }
    let prod: u64 = chain.r.iter().map(|&x| x as u64).product();
    if eta >= 1 && prod > 1u64 << (eta - 1) {
        problems.push(format!("Πr = {prod} > 2^(eta−1)"));
    }
    if !problems.is_empty() {
        report(NAME, group, chi, Status::Fail, problems.join("; "))
    } else if !unmet.is_empty() {
        report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            format!("hypotheses not met: {}", unmet.join("; ")),
        )
    } else {
        report(
            NAME,
            group,
            chi,
            Status::Pass,
            format!("r={:?} Σr={sum} Πr={prod} eta={eta}", chain.r),
        )
    }
}

/// Values of the previous step's θ on the classes of a nested sub-context.
fn pull_between(step: &ChainStep, inner: &Arc<SubCtx>) -> Vec<Cyc> {
    restricted_values(step, inner)
}

/// Subgroups P with lower ≤ P < L normal in `ambient`, returned as the
/// maximal one (largest order, then smallest member set).
fn pick_chief_complement(
    g: &Arc<Group>,
    l_ctx: &Arc<SubCtx>,
    lower: &Subgroup,
    ambient: &Subgroup,
) -> Option<Subgroup> {
    let l_group = &l_ctx.mat.group;
    let lower_local = ElemSet::from_members(
        l_group.order(),
        lower
            .members
            .iter()
            .map(|x| l_ctx.mat.from_parent[x].expect("inside L")),
    );
    let (q, proj) = quotient(
        l_group,
        &Subgroup {
            members: lower_local,
        },
    )
    .ok()?;
    let mut best: Option<Subgroup> = None;
    for s in all_subgroups(&q) {
        if s.len() == q.order() {
            continue; // P must be proper in L
        }
        // pull back to parent element indices
        let mut parent = ElemSet::empty(g.order());
        for (local, &coset) in proj.iter().enumerate() {
            if s.contains(coset) {
                parent.insert(l_ctx.mat.to_parent[local]);
            }
        }
        let p_sub = Subgroup { members: parent };
        // normal in the ambient step subgroup
        let normal_in_ambient = ambient.members.iter().all(|t| {
            p_sub
                .members
                .iter()
                .all(|x| p_sub.members.contains(g.conj(x, t)))
        });
        if !normal_in_ambient {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => {
                p_sub.order() > b.order()
                    || (p_sub.order() == b.order() && p_sub.members.members() < b.members.members())
            }
        };
        if better {
            best = Some(p_sub);
        }
    }
    best
}

/// Number of N_G(M)-orbits on the nonprincipal irreducibles of L/M.
fn orbit_count_on_quotient_irreducibles(
    g: &Arc<Group>,
    l_ctx: &Arc<SubCtx>,
    m_sub: &Subgroup,
) -> Result<usize> {
    let l_group = &l_ctx.mat.group;
    let m_local = ElemSet::from_members(
        l_group.order(),
        m_sub
            .members
            .iter()
            .map(|x| l_ctx.mat.from_parent[x].expect("M inside L")),
    );
    let (q, proj) = quotient(l_group, &Subgroup { members: m_local })?;
    let tq = character_table(Arc::new(q))?;
    let index = RowIndex::new(&tq);
    let norm = normalizer(g, m_sub);
    // representative parent element for each class of the quotient
    let mut lift = vec![usize::MAX; tq.classes.count];
    for (local, &coset) in proj.iter().enumerate() {
        let c = tq.classes.class_of[coset];
        if lift[c] == usize::MAX {
            lift[c] = l_ctx.mat.to_parent[local];
        }
    }
    let mut sets = DisjointSets::new(tq.rows.len());
    for t in norm.members.iter() {
        // class permutation induced by conjugation
        let sigma: Vec<usize> = (0..tq.classes.count)
            .map(|c| {
                let x = lift[c];
                let y = g.conj(x, t);
                let local = l_ctx.mat.from_parent[y].expect("L normal in G");
                tq.classes.class_of[proj[local]]
            })
            .collect();
        for row in 1..tq.rows.len() {
            let image = index.permuted(row, &sigma);
            sets.union(row, image);
        }
    }
    let mut roots = std::collections::HashSet::new();
    for row in 1..tq.rows.len() {
        roots.insert(sets.find(row));
    }
    Ok(roots.len())
}

/// dl of (step group)/(mapped normal subgroup).
fn quotient_derived_length(step_ctx: &Arc<SubCtx>, n_parent: &Subgroup) -> Result<Option<usize>> {
    let grp = &step_ctx.mat.group;
    let local = ElemSet::from_members(
        grp.order(),
        n_parent
            .members
            .iter()
            .map(|x| step_ctx.mat.from_parent[x].expect("nested")),
    );
    let (q, _) = quotient(grp, &Subgroup { members: local })?;
    Ok(derived_length(&q))
}

/// Existence, per step, of a pair (U, φ) with (N_i, θ_i) ≤ (U, φ) < (L_i, ψ)
/// whose stabilizer in L_i is proper.
pub fn verify_proper_stabilizer_pair(
    ctx: &ChainContext,
    chain: &Chain,
    solvable: bool,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "proper-stabilizer-pair";
    if !solvable {
        return report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            "hypotheses violated: group is not solvable".into(),
        );
    }
    if chain.k() == 0 {
        return report(NAME, group, chi, Status::Pass, "k=0, vacuous".into());
    }
    let g = &ctx.group;
    let mut problems = Vec::new();
    let mut unmet = Vec::new();
    for i in 1..chain.steps.len() {
        let prev = &chain.steps[i - 1];
        let cur = &chain.steps[i];
        let l_sub = &chain.chief[i - 1];
        let l_ctx = match ctx.sub_ctx(l_sub) {
            Ok(c) => c,
            Err(e) => {
                problems.push(format!("step {i}: {e}"));
                continue;
            }
        };
        let psi_vals = pull_between(prev, &l_ctx);
        let Some(psi_row) = l_ctx.table.find_row_by_values(&psi_vals) else {
            unmet.push(format!(
                "step {i}: θ restricted to the chief cover is reducible"
            ));
            continue;
        };
        match stabilizer_pair_exists(ctx, g, &l_ctx, psi_row, cur) {
            Ok(true) => {}
            Ok(false) => problems.push(format!("step {i}: no pair with proper stabilizer")),
            Err(e) => problems.push(format!("step {i}: {e}")),
        }
    }
    if !problems.is_empty() {
        report(NAME, group, chi, Status::Fail, problems.join("; "))
    } else if !unmet.is_empty() {
        report(
            NAME,
            group,
            chi,
            Status::HypothesesNotMet,
            format!("hypotheses not met: {}", unmet.join("; ")),
        )
    } else {
        report(
            NAME,
            group,
            chi,
            Status::Pass,
            "pair found at every step".into(),
        )
    }
}

fn stabilizer_pair_exists(
    ctx: &ChainContext,
    g: &Arc<Group>,
    l_ctx: &Arc<SubCtx>,
    psi_row: usize,
    cur: &ChainStep,
) -> Result<bool> {
    let l_group = &l_ctx.mat.group;
    let n_local = ElemSet::from_members(
        l_group.order(),
        cur.subgroup
            .members
            .iter()
            .map(|x| l_ctx.mat.from_parent[x].expect("N inside L")),
    );
    let (q, proj) = quotient(l_group, &Subgroup { members: n_local })?;
    let psi = &l_ctx.table.rows[psi_row].values;
    let mut candidates: Vec<ElemSet> = all_subgroups(&q);
    candidates.retain(|s| s.len() < q.order());
    candidates.sort_by(|a, b| a.cmp_size_then_members(b));
    for s in candidates {
        // U: preimage in parent coordinates
        let mut parent = ElemSet::empty(g.order());
        for (local, &coset) in proj.iter().enumerate() {
            if s.contains(coset) {
                parent.insert(l_ctx.mat.to_parent[local]);
            }
        }
        let u_sub = Subgroup { members: parent };
        let u_ctx = ctx.sub_ctx(&u_sub)?;
        // constituents of ψ on U
        let psi_on_u: Vec<Cyc> = (0..u_ctx.table.classes.count)
            .map(|c| {
                let x = u_ctx.mat.to_parent[u_ctx.table.classes.rep[c]];
                psi[l_ctx.table.classes.class_of[l_ctx.mat.from_parent[x].unwrap()]].clone()
            })
            .collect();
        let dec = decompose(&u_ctx.table, &psi_on_u)?;
        let u_index = RowIndex::new(&u_ctx.table);
        for (phi_row, &c) in dec.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // [φ restricted to N_i, θ_i] ≠ 0
            let phi = &u_ctx.table.rows[phi_row].values;
            let e = lcm(phi[0].modulus(), cur.theta_values()[0].modulus());
            let mut acc = Cyc::zero(e);
            for x in cur.subgroup.members.iter() {
                let pu =
                    phi[u_ctx.table.classes.class_of[u_ctx.mat.from_parent[x].unwrap()]].rescale(e);
                let tn = cur.theta_values()
                    [cur.ctx.table.classes.class_of[cur.ctx.mat.from_parent[x].unwrap()]]
                .rescale(e);
                acc = acc.add(&pu.mul(&tn.conj()));
            }
            let pairing = exact_integer_quotient(&acc, cur.subgroup.order() as i64, "[φ_N, θ]")?;
            if pairing == 0 {
                continue;
            }
            // proper stabilizer of φ in L: some x ∈ L moves φ
            let moved = l_sub_moves_row(g, l_ctx, &u_ctx, &u_index, phi_row)?;
            if moved {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Does some element of L move the given row of U's table under conjugation?
fn l_sub_moves_row(
    g: &Arc<Group>,
    l_ctx: &Arc<SubCtx>,
    u_ctx: &Arc<SubCtx>,
    u_index: &RowIndex,
    row: usize,
) -> Result<bool> {
    for lx in 0..l_ctx.mat.group.order() {
        let t = l_ctx.mat.to_parent[lx];
        let sigma: Vec<usize> = (0..u_ctx.table.classes.count)
            .map(|c| {
                let x = u_ctx.mat.to_parent[u_ctx.table.classes.rep[c]];
                let y = g.conj(x, t);
                u_ctx.table.classes.class_of[u_ctx.mat.from_parent[y].expect("U normal in L")]
            })
            .collect();
        if u_index.permuted(row, &sigma) != row {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Post-hoc validity of the built chain against the definition.
pub fn verify_chain_validity(
    ctx: &ChainContext,
    chain: &Chain,
    group: &str,
    chi: usize,
) -> VerificationReport {
    const NAME: &str = "chain-validity";
    match chain_is_valid(ctx, chain) {
        Ok(true) => report(
            NAME,
            group,
            chi,
            Status::Pass,
            format!("k={} satisfies maximality and terminality", chain.k()),
        ),
        Ok(false) => report(
            NAME,
            group,
            chi,
            Status::Fail,
            "definition conditions violated".into(),
        ),
        Err(e) => report(NAME, group, chi, Status::Fail, format!("{e}")),
    }
}

// ---------------------------------------------------------------------------
// driver: normalization, per-pair verification, corpus sweep
// ---------------------------------------------------------------------------

/// Per-group state: the table plus memoized quotient tables and lattices,
/// keyed by the kernel that produced each normalized group.
pub struct GroupWorkspace {
    pub table: Arc<CharacterTable>,
    quotients: HashMap<Vec<usize>, QuotientEntry>,
    lattices: HashMap<Vec<usize>, Vec<Subgroup>>,
}

/// (quotient table, projection, quotient-row -> parent-row lift map)
type QuotientEntry = (Arc<CharacterTable>, Vec<usize>, Vec<usize>);

impl GroupWorkspace {
    pub fn new(group: Arc<Group>) -> Result<GroupWorkspace> {
        let table = Arc::new(character_table(group)?);
        Ok(GroupWorkspace {
            table,
            quotients: HashMap::new(),
            lattices: HashMap::new(),
        })
    }

    pub fn from_table(table: Arc<CharacterTable>) -> GroupWorkspace {
        GroupWorkspace {
            table,
            quotients: HashMap::new(),
            lattices: HashMap::new(),
        }
    }

    /// Replace (G, χ) by (G/Ker χ, deflated χ); identity when χ is faithful.
    pub fn normalized(&mut self, chi_row: usize) -> Result<(Arc<CharacterTable>, usize)> {
        let kernel = self.table.kernel(chi_row);
        if kernel.order() == 1 {
            return Ok((self.table.clone(), chi_row));
        }
        let key = kernel.members.members();
        if !self.quotients.contains_key(&key) {
            let (q, proj) = quotient(&self.table.group, &kernel)?;
            let tq = Arc::new(character_table(Arc::new(q))?);
            let lift = self.table.lift_from_quotient(&tq, &proj)?;
            self.quotients.insert(key.clone(), (tq, proj, lift));
        }
        let (tq, _, lift) = self.quotients.get(&key).unwrap();
        let deflated = lift
            .iter()
            .position(|&r| r == chi_row)
            .ok_or_else(|| Error::Diagnostic("deflated character not found".into()))?;
        Ok((tq.clone(), deflated))
    }
}

/// Run every verifier for one (G, χ): the reports carry the original group
/// label and row even when the computation happens on G/Ker χ.
pub fn verify_pair(
    ws: &mut GroupWorkspace,
    chi_row: usize,
    exhaustive: bool,
) -> Result<Vec<VerificationReport>> {
    let label = ws.table.group.label.clone();
    let kernel_key = ws.table.kernel(chi_row).members.members();
    let (table, row) = ws.normalized(chi_row)?;
    let lattice = ws
        .lattices
        .entry(kernel_key)
        .or_insert_with(|| normal_subgroups(&table))
        .clone();
    let ctx = ChainContext::with_lattice(table.clone(), row, lattice)?;
    let solvable = derived_length(&ctx.group).is_some();
    let series = chief_series(&ctx.group, &ctx.lattice);
    let supersolvable = solvable && is_supersolvable(&series);
    let mut reports = vec![
        verify_multiplicity_one(&ctx, solvable, &label, chi_row),
        verify_restriction_criterion(&ctx, solvable, &label, chi_row),
        verify_center_meet(&ctx, &label, chi_row),
        verify_prime_bound(&ctx, solvable, supersolvable, &label, chi_row),
        verify_supersolvable_derived_bound(&ctx, supersolvable, &label, chi_row),
    ];

    let chain = build_maximal_chain(&ctx)?;
    reports.push(verify_chain_validity(&ctx, &chain, &label, chi_row));
    reports.push(verify_chain_invariants(
        &ctx,
        &chain,
        solvable,
        supersolvable,
        &label,
        chi_row,
    ));
    reports.push(verify_chain_step_bounds(
        &ctx, &chain, solvable, &label, chi_row,
    ));
    reports.push(verify_proper_stabilizer_pair(
        &ctx, &chain, solvable, &label, chi_row,
    ));

    // vanishing criterion at the sites the multiplicity-one argument uses:
    // N an inclusion-maximal kernel, L a chief factor over it, θ = χ_L
    if solvable {
        for (j, ker) in ctx.kernels.iter().enumerate() {
            let maximal = !ctx
                .kernels
                .iter()
                .any(|k| k.order() > ker.order() && ker.members.is_subset_of(&k.members));
            if !maximal {
                continue;
            }
            let full = Subgroup {
                members: ctx.group.full_set(),
            };
            for l_sub in ctx.chief_factors_over(ker, &full) {
                let l_ctx = ctx.sub_ctx(&l_sub)?;
                let chi_on_l =
                    l_ctx.pull_values(&ctx.table.classes, &ctx.table.rows[ctx.chi_row].values);
                let Some(theta_row) = l_ctx.table.find_row_by_values(&chi_on_l) else {
                    reports.push(report(
                        "chief-vanishing",
                        &label,
                        chi_row,
                        Status::HypothesesNotMet,
                        format!(
                            "hypotheses not met: χ restricted to the chief cover of kernel {j} is reducible"
                        ),
                    ));
                    continue;
                };
                reports.push(verify_chief_vanishing(
                    &ctx.group,
                    &ctx.lattice,
                    &l_sub,
                    &l_ctx,
                    ker,
                    theta_row,
                    &label,
                    chi_row,
                ));
            }
        }
    }

    // conjugate-shifted chains stay valid (sampled g)
    let sample: Vec<usize> = (0..ctx.group.order())
        .step_by((ctx.group.order() / 8).max(1))
        .collect();
    let mut shifted_ok = true;
    for t in sample {
        if !conjugate_chain_is_valid(&ctx, &chain, t)? {
            shifted_ok = false;
            break;
        }
    }
    reports.push(report(
        "chain-conjugation",
        &label,
        chi_row,
        if shifted_ok {
            Status::Pass
        } else {
            Status::Fail
        },
        "conjugate-shifted chains re-validated on sampled elements".into(),
    ));

    if exhaustive && ctx.group.order() <= 96 {
        let all = enumerate_maximal_chains(&ctx, 5000)?;
        let mut all_ok = true;
        for c in &all {
            let inv = verify_chain_invariants(&ctx, c, solvable, supersolvable, &label, chi_row);
            let bounds = verify_chain_step_bounds(&ctx, c, solvable, &label, chi_row);
            if inv.status == Status::Fail || bounds.status == Status::Fail {
                all_ok = false;
            }
        }
        reports.push(report(
            "exhaustive-chains",
            &label,
            chi_row,
            if all_ok { Status::Pass } else { Status::Fail },
            format!("{} maximal chains enumerated", all.len()),
        ));
    }
    Ok(reports)
}

/// Verify every (G, χ(1) > 1) pair over the corpus; groups above max_order
/// are skipped.
pub fn verify_corpus(
    spec: &CorpusSpec,
    max_order: usize,
    exhaustive: bool,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for group in crate::zoo::corpus(spec) {
        if group.order() > max_order {
            continue;
        }
        let mut ws = GroupWorkspace::new(Arc::new(group))?;
        let nonlinear: Vec<usize> = ws
            .table
            .rows
            .iter()
            .filter(|r| r.degree > 1)
            .map(|r| r.index)
            .collect();
        for row in nonlinear {
            out.extend(verify_pair(&mut ws, row, exhaustive)?);
        }
    }
    Ok(out)
}

pub fn summarize(reports: &[VerificationReport]) -> String {
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    let fail = reports.iter().filter(|r| r.status == Status::Fail).count();
    let hnm = reports
        .iter()
        .filter(|r| r.status == Status::HypothesesNotMet)
        .count();
    format!("summary pass={pass} fail={fail} hypotheses-not-met={hnm}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn workspace(label: &str) -> GroupWorkspace {
        GroupWorkspace::new(Arc::new(zoo::by_label(label).unwrap())).unwrap()
    }

    fn find<'a>(reports: &'a [VerificationReport], name: &str) -> &'a VerificationReport {
        reports.iter().find(|r| r.name == name).unwrap()
    }

    #[test]
    fn q8_all_statements_pass() {
        let mut ws = workspace("Q8");
        let two = ws.table.rows.iter().position(|r| r.degree == 2).unwrap();
        let reports = verify_pair(&mut ws, two, false).unwrap();
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{}", r.line());
        }
        assert_eq!(find(&reports, "multiplicity-one").group, "Q8");
    }

    #[test]
    fn s4_degree_two_normalizes_to_s3() {
        // Ker χ = V4; checks run on the order-6 quotient but report as S4
        let mut ws = workspace("S4");
        let two = ws.table.rows.iter().position(|r| r.degree == 2).unwrap();
        let reports = verify_pair(&mut ws, two, false).unwrap();
        for r in &reports {
            assert_eq!(r.group, "S4");
            assert_eq!(r.chi, two);
            assert_ne!(r.status, Status::Fail, "{}", r.line());
        }
        // the quotient S3 is supersolvable, so the derived bound applies
        assert_eq!(
            find(&reports, "supersolvable-derived-bound").status,
            Status::Pass
        );
    }

    #[test]
    fn d4_supersolvable_bound_detail() {
        let mut ws = workspace("D4");
        let two = ws.table.rows.iter().position(|r| r.degree == 2).unwrap();
        let reports = verify_pair(&mut ws, two, false).unwrap();
        let r = find(&reports, "supersolvable-derived-bound");
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.detail, "dl 2 ≤ 2·3−1");
    }

    #[test]
    fn chief_vanishing_rejects_non_invariant_theta() {
        // the nontrivial linears of A3 are swapped by the reflections of S3
        let g = Arc::new(zoo::symmetric(3).unwrap());
        let table = Arc::new(character_table(g.clone()).unwrap());
        let ctx = ChainContext::new(table, 2).unwrap();
        let three = (1..6).find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = subgroup_generated(&g, &[three]);
        let l_ctx = ctx.sub_ctx(&a3).unwrap();
        let trivial = Subgroup {
            members: g.trivial_set(),
        };
        let r = verify_chief_vanishing(&g, &ctx.lattice, &a3, &l_ctx, &trivial, 1, "S3", 2);
        assert_eq!(r.status, Status::HypothesesNotMet);
        assert!(r.detail.contains("not G-invariant"), "{}", r.detail);
    }

    #[test]
    fn chief_vanishing_at_extraspecial_sites() {
        let g = Arc::new(zoo::extraspecial_p3_exp_p(3).unwrap());
        let table = Arc::new(character_table(g.clone()).unwrap());
        let theta = table.rows.iter().position(|r| r.degree == 3).unwrap();
        let ctx = ChainContext::new(table.clone(), theta).unwrap();
        let full = Subgroup {
            members: g.full_set(),
        };
        let full_ctx = ctx.sub_ctx(&full).unwrap();
        let theta_row = full_ctx
            .table
            .find_row_by_values(&table.rows[theta].values)
            .unwrap();
        // N = an order-9 kernel plane: E/N is a chief factor, θ is E-invariant
        let plane = ctx.kernels.iter().find(|k| k.order() == 9).unwrap();
        let r = verify_chief_vanishing(
            &g,
            &ctx.lattice,
            &full,
            &full_ctx,
            plane,
            theta_row,
            "extraspecial:3",
            theta,
        );
        assert_eq!(r.status, Status::Pass, "{}", r.line());
        assert!(r.detail.contains("reducible=true"));
        // N = Z(E) is NOT a chief-factor complement: the planes lie between
        let z = center(&g);
        let r = verify_chief_vanishing(
            &g,
            &ctx.lattice,
            &full,
            &full_ctx,
            &z,
            theta_row,
            "extraspecial:3",
            theta,
        );
        assert_eq!(r.status, Status::HypothesesNotMet);
        assert!(r.detail.contains("chief"), "{}", r.detail);
    }

    #[test]
    fn a5_reports_violated_hypotheses_not_failures() {
        let mut ws = workspace("A5");
        let chi = ws.table.rows.iter().position(|r| r.degree > 1).unwrap();
        let reports = verify_pair(&mut ws, chi, false).unwrap();
        assert!(reports.iter().all(|r| r.status != Status::Fail));
        assert!(reports
            .iter()
            .any(|r| r.status == Status::HypothesesNotMet && r.detail.contains("not solvable")));
    }

    #[test]
    fn exhaustive_mode_adds_report() {
        let mut ws = workspace("extraspecial:3");
        let theta = ws.table.rows.iter().position(|r| r.degree == 3).unwrap();
        let reports = verify_pair(&mut ws, theta, true).unwrap();
        let r = find(&reports, "exhaustive-chains");
        assert_eq!(r.status, Status::Pass);
        // four maximal planes, each with reducible restriction, several
        // constituent choices each
        assert!(r.detail.contains("maximal chains enumerated"));
    }

    #[test]
    fn report_line_format() {
        let r = report("prime-bound", "S4", 3, Status::Pass, "deg 2".into());
        assert_eq!(
            r.line(),
            "prime-bound group=S4 chi=4 status=pass detail=deg 2"
        );
    }
}
