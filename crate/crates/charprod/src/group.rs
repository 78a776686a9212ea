//! Finite groups as complete multiplication tables over element indices.
//!
//! Index 0 is always the identity. Subgroups are element sets over the
//! parent's index space; `materialize` turns one into a standalone group
//! with an index map when its own character table is needed. All values are
//! immutable once built.

use std::fmt;

use crate::error::{Error, Result};

/// Default cap on group order; inputs beyond it are rejected.
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// Set of element indices, bitset semantics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    n: usize,
    bits: Vec<u64>,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet {
            n,
            bits: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = ElemSet::empty(n);
        for g in 0..n {
            s.insert(g);
        }
        s
    }

    pub fn singleton(n: usize, g: usize) -> Self {
        let mut s = ElemSet::empty(n);
        s.insert(g);
        s
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ElemSet::empty(n);
        for g in members {
            s.insert(g);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, g: usize) {
        self.bits[g / 64] |= 1 << (g % 64);
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.bits[g / 64] >> (g % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&g| self.contains(g))
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        assert_eq!(self.n, other.n);
        ElemSet {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order by (size, sorted member list); the deterministic tie-break used
    /// for all subgroup orderings.
    pub fn cmp_size_then_members(&self, other: &ElemSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members().cmp(&other.members()))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{:?}}}", self.members())
    }
}

/// A finite group as a full Cayley table.
#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    elem_order: Vec<u32>,
    exponent: usize,
    pub label: String,
    /// generating permutations when the group came from a `.perm` source
    pub perm_presentation: Option<Vec<Perm>>,
}

impl Group {
    /// Build and validate a group from a raw multiplication table.
    pub fn from_table(label: &str, table: Vec<u16>, cap: usize) -> Result<Group> {
        let order = (table.len() as f64).sqrt() as usize;
        if order * order != table.len() || order == 0 {
            return Err(Error::GroupLaw("multiplication table is not square".into()));
        }
        if order > cap {
            return Err(Error::Capacity { order, cap });
        }
        for &v in &table {
            if v as usize >= order {
                return Err(Error::GroupLaw(format!("entry {v} out of range")));
            }
        }
        // identity at index 0
        for g in 0..order {
            if table[g] as usize != g || table[g * order] as usize != g {
                return Err(Error::GroupLaw(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        // inverses
        let mut inv = vec![u16::MAX; order];
        for g in 0..order {
            let mut found = None;
            for h in 0..order {
                if table[g * order + h] == 0 {
                    found = Some(h);
                    break;
                }
            }
            let h = found.ok_or_else(|| Error::GroupLaw(format!("no right inverse for {g}")))?;
            if table[h * order + g] != 0 {
                return Err(Error::GroupLaw(format!("inverse of {g} is one-sided")));
            }
            inv[g] = h as u16;
        }
        // associativity: exhaustive up to 512, strided sample beyond
        let assoc_ok = if order <= 512 {
            let mut ok = true;
            'outer: for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b] as usize;
                    for c in 0..order {
                        let bc = table[b * order + c] as usize;
                        if table[ab * order + c] != table[a * order + bc] {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            ok
        } else {
            let step = order / 97 + 1;
            let sample: Vec<usize> = (0..order).step_by(step).collect();
            sample.iter().all(|&a| {
                sample.iter().all(|&b| {
                    let ab = table[a * order + b] as usize;
                    sample.iter().all(|&c| {
                        let bc = table[b * order + c] as usize;
                        table[ab * order + c] == table[a * order + bc]
                    })
                })
            })
        };
        if !assoc_ok {
            return Err(Error::GroupLaw("multiplication is not associative".into()));
        }
        let mut elem_order = vec![0u32; order];
        for g in 0..order {
            let mut k = 1u32;
            let mut x = g;
            while x != 0 {
                x = table[x * order + g] as usize;
                k += 1;
            }
            elem_order[g] = k;
        }
        let exponent = elem_order
            .iter()
            .fold(1usize, |acc, &o| lcm(acc, o as usize));
        Ok(Group {
            order,
            table,
            inv,
            elem_order,
            exponent,
            label: label.to_string(),
            perm_presentation: None,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g] as usize
    }

    #[inline]
    pub fn conj(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(by, g), self.inv(by))
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.elem_order[g] as usize
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let mut acc = 0usize;
        for _ in 0..k % self.element_order(g) {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn trivial_set(&self) -> ElemSet {
        ElemSet::singleton(self.order, 0)
    }

    /// Emit the `.cayley` text form.
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("cayley {}\n", self.order);
        for g in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|h| self.mul(g, h).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.label, self.order)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

// ---------------------------------------------------------------------------
// permutations and the two text formats
// ---------------------------------------------------------------------------

/// Permutation of {0, …, d−1} in image form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d).collect())
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        // apply other first, then self
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    /// Parse disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
    /// "()" is the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
        let mut image: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let s = s.trim();
        if !s.starts_with('(') || !s.ends_with(')') {
            return Err(Error::Parse(format!("malformed cycle notation: {s:?}")));
        }
        let mut rest = s;
        while !rest.is_empty() {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?;
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("malformed cycle notation: {s:?}")));
            }
            let body = &rest[1..close];
            rest = rest[close + 1..].trim_start();
            let pts: Vec<usize> = body
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in cycle")))
                })
                .collect::<Result<_>>()?;
            if pts.is_empty() {
                continue; // "()" identity cycle
            }
            for &pt in &pts {
                if pt == 0 || pt > degree {
                    return Err(Error::Parse(format!("point {pt} outside 1..={degree}")));
                }
                if seen[pt - 1] {
                    return Err(Error::Parse(format!("point {pt} repeated")));
                }
                seen[pt - 1] = true;
            }
            for i in 0..pts.len() {
                image[pts[i] - 1] = pts[(i + 1) % pts.len()] - 1;
            }
        }
        Ok(Perm(image))
    }

    pub fn to_cycle_string(&self) -> String {
        let d = self.0.len();
        let mut seen = vec![false; d];
        let mut out = String::new();
        for start in 0..d {
            if seen[start] || self.0[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.0[x];
            }
            out.push('(');
            out.push_str(
                &cyc.iter()
                    .map(|p| (p + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Enumerate the group generated by permutations (breadth-first closure) and
/// build its Cayley table. The identity gets index 0; the rest follow in
/// discovery order.
pub fn group_from_perms(label: &str, degree: usize, gens: &[Perm], cap: usize) -> Result<Group> {
    use std::collections::HashMap;
    let id = Perm::identity(degree);
    let mut elems: Vec<Perm> = vec![id.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(id, 0);
    let mut frontier = 0usize;
    while frontier < elems.len() {
        let cur = elems[frontier].clone();
        for g in gens {
            let next = g.compose(&cur);
            if !index.contains_key(&next) {
                if elems.len() >= cap {
                    return Err(Error::Capacity {
                        order: elems.len() + 1,
                        cap,
                    });
                }
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        frontier += 1;
    }
    let n = elems.len();
    let mut table = vec![0u16; n * n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let ab = a.compose(b);
            table[i * n + j] = *index
                .get(&ab)
                .ok_or_else(|| Error::GroupLaw("closure missed a product".into()))?
                as u16;
        }
    }
    let mut g = Group::from_table(label, table, cap)?;
    g.perm_presentation = Some(gens.to_vec());
    Ok(g)
}

/// Parse either group-description text format (`perm` or `cayley` header).
pub fn load_group(text: &str) -> Result<Group> {
    load_group_with_cap(text, DEFAULT_ORDER_CAP)
}

pub fn load_group_with_cap(text: &str, cap: usize) -> Result<Group> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty group description".into()))?;
    let mut it = header.split_whitespace();
    match it.next() {
        Some("perm") => {
            let degree: usize = it
                .next()
                .ok_or_else(|| Error::Parse("perm header missing degree".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad degree in perm header".into()))?;
            let gens: Vec<Perm> = lines
                .map(|l| Perm::parse_cycles(l, degree))
                .collect::<Result<_>>()?;
            group_from_perms("perm-group", degree, &gens, cap)
        }
        Some("cayley") => {
            let n: usize = it
                .next()
                .ok_or_else(|| Error::Parse("cayley header missing order".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad order in cayley header".into()))?;
            if n > cap {
                return Err(Error::Capacity { order: n, cap });
            }
            let mut table = Vec::with_capacity(n * n);
            for _ in 0..n {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse("cayley table has too few rows".into()))?;
                let row: Vec<u16> = line
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<u16>()
                            .map_err(|_| Error::Parse(format!("bad table entry {t:?}")))
                    })
                    .collect::<Result<_>>()?;
                if row.len() != n {
                    return Err(Error::Parse(format!(
                        "cayley row has {} entries, expected {n}",
                        row.len()
                    )));
                }
                table.extend(row);
            }
            Group::from_table("cayley-group", table, cap)
        }
        _ => Err(Error::Parse(format!("unknown header {header:?}"))),
    }
}

// ---------------------------------------------------------------------------
// conjugacy classes
// ---------------------------------------------------------------------------

/// Conjugacy class data. Class 0 is the identity; the rest are ordered by
/// (size, smallest member index).
#[derive(Clone, Debug)]
pub struct Classes {
    pub count: usize,
    pub rep: Vec<usize>,
    pub size: Vec<usize>,
    pub class_of: Vec<usize>,
    pub inverse_class: Vec<usize>,
}

pub fn conjugacy_classes(g: &Group) -> Classes {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let mut orbit = Vec::new();
        let mut stack = vec![x];
        class_of[x] = orbits.len();
        while let Some(y) = stack.pop() {
            orbit.push(y);
            for t in 0..n {
                let z = g.conj(y, t);
                if class_of[z] == usize::MAX {
                    class_of[z] = orbits.len();
                    stack.push(z);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&i| (orbits[i].len(), orbits[i][0]));
    let mut rep = Vec::with_capacity(orbits.len());
    let mut size = Vec::with_capacity(orbits.len());
    let mut renumber = vec![0usize; orbits.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
        rep.push(orbits[old][0]);
        size.push(orbits[old].len());
    }
    for c in class_of.iter_mut() {
        *c = renumber[*c];
    }
    let inverse_class = rep.iter().map(|&r| class_of[g.inv(r)]).collect();
    Classes {
        count: orbits.len(),
        rep,
        size,
        class_of,
        inverse_class,
    }
}

impl Classes {
    pub fn centralizer_order(&self, group_order: usize, class_idx: usize) -> usize {
        group_order / self.size[class_idx]
    }
}

// ---------------------------------------------------------------------------
// subgroups
// ---------------------------------------------------------------------------

/// Subgroup of a parent group, stored as an element set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub members: ElemSet,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn is_normal(&self, g: &Group) -> bool {
        (0..g.order()).all(|t| {
            self.members
                .iter()
                .all(|m| self.members.contains(g.conj(m, t)))
        })
    }

    pub fn is_abelian_in(&self, g: &Group) -> bool {
        let ms = self.members.members();
        ms.iter()
            .all(|&a| ms.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), self.members)
    }
}

/// Smallest subgroup containing the given elements.
pub fn subgroup_generated(g: &Group, gens: &[usize]) -> Subgroup {
    let mut set = ElemSet::singleton(g.order(), 0);
    let mut list = vec![0usize];
    let mut frontier = 0usize;
    let mut pending: Vec<usize> = gens.to_vec();
    for &x in &pending {
        assert!(x < g.order(), "generator index out of range");
    }
    while let Some(x) = pending.pop() {
        if !set.contains(x) {
            set.insert(x);
            list.push(x);
        }
    }
    while frontier < list.len() {
        let a = list[frontier];
        frontier += 1;
        for i in 0..list.len() {
            let b = list[i];
            for prod in [g.mul(a, b), g.mul(b, a)] {
                if !set.contains(prod) {
                    set.insert(prod);
                    list.push(prod);
                }
            }
        }
    }
    // closure under products of elements of finite order is closed under
    // inverses automatically, so this is the generated subgroup
    Subgroup { members: set }
}

/// Normalizer N_G(M) = {g : M^g = M}.
pub fn normalizer(g: &Group, m: &Subgroup) -> Subgroup {
    let mut set = ElemSet::empty(g.order());
    for t in 0..g.order() {
        if m.members.iter().all(|x| m.members.contains(g.conj(x, t))) {
            set.insert(t);
        }
    }
    Subgroup { members: set }
}

/// Every subgroup of a small group, by closure: repeatedly extend known
/// subgroups by one element. Intended for groups of order ≤ ~64.
pub fn all_subgroups(g: &Group) -> Vec<ElemSet> {
    let n = g.order();
    let mut found: Vec<ElemSet> = vec![ElemSet::singleton(n, 0)];
    let mut frontier = vec![ElemSet::singleton(n, 0)];
    while let Some(s) = frontier.pop() {
        for x in 1..n {
            if s.contains(x) {
                continue;
            }
            let mut gens = s.members();
            gens.push(x);
            let bigger = subgroup_generated(g, &gens).members;
            if !found.contains(&bigger) {
                found.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    found.sort_by(|a, b| a.cmp_size_then_members(b));
    found
}

pub fn center(g: &Group) -> Subgroup {
    let mut set = ElemSet::empty(g.order());
    for x in 0..g.order() {
        if (0..g.order()).all(|h| g.mul(x, h) == g.mul(h, x)) {
            set.insert(x);
        }
    }
    Subgroup { members: set }
}

/// Centralizer of the set `of` modulo `modulo`: elements x of `within` with
/// [x, m] ∈ modulo for every m ∈ of.
pub fn centralizer_mod(g: &Group, within: &Subgroup, of: &Subgroup, modulo: &Subgroup) -> Subgroup {
    let mut set = ElemSet::empty(g.order());
    for x in within.members.iter() {
        if of
            .members
            .iter()
            .all(|m| modulo.contains(g.commutator(x, m)))
        {
            set.insert(x);
        }
    }
    Subgroup { members: set }
}

/// Subgroup generated by all commutators [x, y] with x, y in s.
pub fn derived_subgroup(g: &Group, s: &Subgroup) -> Subgroup {
    let ms = s.members.members();
    let mut comms = Vec::new();
    let mut seen = ElemSet::empty(g.order());
    for &x in &ms {
        for &y in &ms {
            let c = g.commutator(x, y);
            if !seen.contains(c) {
                seen.insert(c);
                comms.push(c);
            }
        }
    }
    subgroup_generated(g, &comms)
}

/// Length of the derived series down to the trivial subgroup; None marks a
/// non-solvable group (the series stabilizes above 1).
pub fn derived_length(g: &Group) -> Option<usize> {
    let mut cur = Subgroup {
        members: g.full_set(),
    };
    let mut len = 0usize;
    loop {
        if cur.order() == 1 {
            return Some(len);
        }
        let next = derived_subgroup(g, &cur);
        if next.order() == cur.order() {
            return None;
        }
        cur = next;
        len += 1;
    }
}

pub fn is_solvable(g: &Group) -> bool {
    derived_length(g).is_some()
}

// ---------------------------------------------------------------------------
// quotients and materialized subgroups
// ---------------------------------------------------------------------------

/// Quotient group G/N together with the projection map. The identity coset
/// is index 0; cosets are ordered by smallest member.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<(Group, Vec<usize>)> {
    if !n.is_normal(g) {
        return Err(Error::NotNormal(format!(
            "cannot form quotient of {} by a non-normal subgroup",
            g.label
        )));
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x); // smallest member: x is minimal since we scan ascending
        for m in n.members.iter() {
            coset_of[g.mul(x, m)] = idx;
        }
    }
    let q = reps.len();
    let mut table = vec![0u16; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[g.mul(a, b)] as u16;
        }
    }
    let label = format!("{}/N{}", g.label, n.order());
    let qg = Group::from_table(&label, table, DEFAULT_ORDER_CAP)?;
    Ok((qg, coset_of))
}

/// A subgroup re-materialized as a standalone group, with index maps.
#[derive(Clone, Debug)]
pub struct Materialized {
    pub group: Group,
    pub to_parent: Vec<usize>,
    pub from_parent: Vec<Option<usize>>,
}

pub fn materialize(g: &Group, s: &Subgroup) -> Materialized {
    let to_parent = s.members.members(); // ascending, so identity lands at 0
    assert_eq!(to_parent[0], 0, "subgroup does not contain the identity");
    let mut from_parent = vec![None; g.order()];
    for (i, &x) in to_parent.iter().enumerate() {
        from_parent[x] = Some(i);
    }
    let m = to_parent.len();
    let mut table = vec![0u16; m * m];
    for i in 0..m {
        for j in 0..m {
            let prod = g.mul(to_parent[i], to_parent[j]);
            table[i * m + j] = from_parent[prod].expect("subgroup not closed") as u16;
        }
    }
    let label = format!("{}<{}>", g.label, m);
    let group = Group::from_table(&label, table, DEFAULT_ORDER_CAP)
        .expect("materialized subgroup must satisfy the group laws");
    Materialized {
        group,
        to_parent,
        from_parent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        load_group("perm 3\n(1 2 3)\n(1 2)\n").unwrap()
    }

    #[test]
    fn trivial_cayley_group() {
        let g = load_group("cayley 1\n0\n").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(conjugacy_classes(&g).count, 1);
    }

    #[test]
    fn s3_from_perms() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        let cls = conjugacy_classes(&g);
        assert_eq!(cls.count, 3);
        assert_eq!(cls.size, vec![1, 2, 3]);
    }

    #[test]
    fn s3_classes_match_brute_force_orbits() {
        // independent oracle: conjugation orbits computed directly on the table
        let g = s3();
        let n = g.order();
        let mut orbit_of = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if orbit_of[x] != usize::MAX {
                continue;
            }
            for t in 0..n {
                orbit_of[g.mul(g.mul(t, x), g.inv(t))] = next;
            }
            next += 1;
        }
        let cls = conjugacy_classes(&g);
        assert_eq!(cls.count, next);
        for x in 0..n {
            for y in 0..n {
                assert_eq!(
                    orbit_of[x] == orbit_of[y],
                    cls.class_of[x] == cls.class_of[y]
                );
            }
        }
    }

    #[test]
    fn a6_from_standard_generators() {
        let g = load_group("perm 6\n(1 2 3 4 5)\n(4 5 6)\n").unwrap();
        assert_eq!(g.order(), 360);
        assert_eq!(conjugacy_classes(&g).count, 7);
        assert_eq!(derived_length(&g), None);
    }

    #[test]
    fn class_size_times_centralizer_is_order() {
        let g = s3();
        let cls = conjugacy_classes(&g);
        for (k, &sz) in cls.size.iter().enumerate() {
            let rep = cls.rep[k];
            let centralizer = (0..g.order())
                .filter(|&h| g.mul(rep, h) == g.mul(h, rep))
                .count();
            assert_eq!(sz * centralizer, g.order());
        }
    }

    #[test]
    fn subgroup_generated_examples() {
        let g = s3();
        assert_eq!(subgroup_generated(&g, &[]).order(), 1);
        // a 3-cycle generates A3
        let three_cycle = (1..6).find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = subgroup_generated(&g, &[three_cycle]);
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal(&g));
    }

    #[test]
    fn center_of_s3_is_trivial() {
        assert_eq!(center(&s3()).order(), 1);
    }

    #[test]
    fn s4_derived_series() {
        let g = load_group("perm 4\n(1 2 3 4)\n(1 2)\n").unwrap();
        assert_eq!(g.order(), 24);
        let full = Subgroup {
            members: g.full_set(),
        };
        let d1 = derived_subgroup(&g, &full);
        assert_eq!(d1.order(), 12); // A4
        let d2 = derived_subgroup(&g, &d1);
        assert_eq!(d2.order(), 4); // V4
        assert_eq!(derived_length(&g), Some(3));
        // brute-force oracle: commutator closure element by element
        let mut in_closure = [false; 24];
        in_closure[0] = true;
        let mut changed = true;
        let mut elems = vec![0usize];
        for x in 0..24 {
            for y in 0..24 {
                let c = g.commutator(x, y);
                if !in_closure[c] {
                    in_closure[c] = true;
                    elems.push(c);
                }
            }
        }
        while changed {
            changed = false;
            let snapshot = elems.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    let p = g.mul(a, b);
                    if !in_closure[p] {
                        in_closure[p] = true;
                        elems.push(p);
                        changed = true;
                    }
                }
            }
        }
        assert_eq!(elems.len(), d1.order());
    }

    #[test]
    fn quotient_s3_by_a3() {
        let g = s3();
        let three_cycle = (1..6).find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = subgroup_generated(&g, &[three_cycle]);
        let (q, proj) = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
        // projection is a surjective homomorphism with kernel exactly A3
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
            }
            assert_eq!(proj[a] == 0, a3.contains(a));
        }
        assert!((0..q.order()).all(|c| proj.contains(&c)));
    }

    #[test]
    fn quotient_by_non_normal_rejected() {
        let g = s3();
        let transposition = (1..6).find(|&x| g.element_order(x) == 2).unwrap();
        let h = subgroup_generated(&g, &[transposition]);
        assert!(matches!(quotient(&g, &h), Err(Error::NotNormal(_))));
    }

    #[test]
    fn quotient_by_trivial_is_isomorphic_copy() {
        let g = s3();
        let (q, proj) = quotient(
            &g,
            &Subgroup {
                members: g.trivial_set(),
            },
        )
        .unwrap();
        assert_eq!(q.order(), 6);
        let mut seen = [false; 6];
        for &c in &proj {
            seen[c] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(load_group("perm 3\n(1 2"), Err(Error::Parse(_))));
        assert!(matches!(
            load_group("perm 3\n(1 2 7)"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(load_group("nonsense 3"), Err(Error::Parse(_))));
        // non-closed table: row 1 maps everything to 1
        assert!(load_group("cayley 2\n0 1\n1 1\n").is_err());
        // capacity
        assert!(matches!(
            load_group_with_cap("perm 8\n(1 2 3 4 5 6 7 8)\n(1 2)\n", 100),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn cayley_roundtrip() {
        let g = s3();
        let text = g.to_cayley_text();
        let g2 = load_group(&text).unwrap();
        assert_eq!(g2.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(g.mul(a, b), g2.mul(a, b));
            }
        }
    }

    #[test]
    fn materialize_keeps_structure() {
        let g = s3();
        let three_cycle = (1..6).find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = subgroup_generated(&g, &[three_cycle]);
        let m = materialize(&g, &a3);
        assert_eq!(m.group.order(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let parent = g.mul(m.to_parent[i], m.to_parent[j]);
                assert_eq!(m.from_parent[parent], Some(m.group.mul(i, j)));
            }
        }
    }
}
