//! Constructors for the named groups and the desk-scale corpus.
//!
//! Everything is generated in-process; no external group database. Labels
//! are stable and parseable, so the CLI can resolve `--zoo <label>`.

use crate::error::{Error, Result};
use crate::group::{group_from_perms, Group, Perm, DEFAULT_ORDER_CAP};

pub fn trivial() -> Group {
    cyclic(1)
}

pub fn cyclic(n: usize) -> Group {
    assert!((1..=DEFAULT_ORDER_CAP).contains(&n));
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = ((a + b) % n) as u16;
        }
    }
    Group::from_table(&format!("C{n}"), table, DEFAULT_ORDER_CAP).unwrap()
}

pub fn elementary_abelian(p: usize, k: usize) -> Group {
    let n = p.pow(k as u32);
    assert!(n <= DEFAULT_ORDER_CAP);
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let mut x = a;
            let mut y = b;
            let mut s = 0usize;
            let mut place = 1usize;
            for _ in 0..k {
                s += (x % p + y % p) % p * place;
                x /= p;
                y /= p;
                place *= p;
            }
            table[a * n + b] = s as u16;
        }
    }
    Group::from_table(&format!("elem:{p}:{k}"), table, DEFAULT_ORDER_CAP).unwrap()
}

/// Dihedral group of order 2n, from the rotation/reflection permutation model.
pub fn dihedral(n: usize) -> Group {
    assert!(n >= 1 && 2 * n <= DEFAULT_ORDER_CAP);
    let gens = match n {
        1 => vec![Perm(vec![1, 0])],
        // D2 is the Klein four-group; two commuting swaps on 4 points
        2 => vec![Perm(vec![1, 0, 2, 3]), Perm(vec![0, 1, 3, 2])],
        _ => vec![
            Perm((0..n).map(|i| (i + 1) % n).collect()),
            Perm((0..n).map(|i| (n - i) % n).collect()),
        ],
    };
    let degree = gens[0].0.len();
    let mut g = group_from_perms(&format!("D{n}"), degree, &gens, DEFAULT_ORDER_CAP).unwrap();
    g.label = format!("D{n}");
    assert_eq!(g.order(), 2 * n, "dihedral construction has wrong order");
    g
}

/// Quaternion group of order 8: elements ±1, ±i, ±j, ±k.
pub fn quaternion8() -> Group {
    // 2x2 matrix model over Z/4 coordinates is clumsy; use the regular
    // permutation representation built from the known multiplication.
    // order: 1, -1, i, -i, j, -j, k, -k
    const N: usize = 8;
    // sign (0 = +, 1 = -), axis (0 = 1, 1 = i, 2 = j, 3 = k)
    fn dec(x: usize) -> (usize, usize) {
        (x % 2, x / 2)
    }
    fn enc(sign: usize, axis: usize) -> usize {
        axis * 2 + sign
    }
    // quaternion axis products: table[a][b] = (sign, axis)
    const AXIS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = vec![0u16; N * N];
    for a in 0..N {
        for b in 0..N {
            let (sa, xa) = dec(a);
            let (sb, xb) = dec(b);
            let (sp, xp) = AXIS[xa][xb];
            table[a * N + b] = enc((sa + sb + sp) % 2, xp) as u16;
        }
    }
    Group::from_table("Q8", table, DEFAULT_ORDER_CAP).unwrap()
}

pub fn symmetric(n: usize) -> Result<Group> {
    if n == 0 || n > 6 {
        return Err(Error::Input(format!("symmetric({n}) outside 1..=6")));
    }
    if n == 1 {
        let mut g = trivial();
        g.label = "S1".into();
        return Ok(g);
    }
    let cycle = Perm((0..n).map(|i| (i + 1) % n).collect());
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let mut g = group_from_perms(&format!("S{n}"), n, &[cycle, Perm(swap)], DEFAULT_ORDER_CAP)?;
    g.label = format!("S{n}");
    Ok(g)
}

pub fn alternating(n: usize) -> Result<Group> {
    if n == 0 || n > 6 {
        return Err(Error::Input(format!("alternating({n}) outside 1..=6")));
    }
    if n <= 2 {
        let mut g = trivial();
        g.label = format!("A{n}");
        return Ok(g);
    }
    let gens = if n % 2 == 1 {
        // odd n: (1 2 ... n) and (1 2 3)
        vec![
            Perm((0..n).map(|i| (i + 1) % n).collect()),
            Perm::parse_cycles("(1 2 3)", n)?,
        ]
    } else {
        // even n: (2 3 ... n) and (1 2 3)
        let mut c: Vec<usize> = (0..n).collect();
        for (i, ci) in c.iter_mut().enumerate().skip(1) {
            *ci = if i + 1 < n { i + 1 } else { 1 };
        }
        vec![Perm(c), Perm::parse_cycles("(1 2 3)", n)?]
    };
    let mut g = group_from_perms(&format!("A{n}"), n, &gens, DEFAULT_ORDER_CAP)?;
    let expect: usize = (1..=n).product::<usize>() / 2;
    if g.order() != expect {
        return Err(Error::Construction(format!(
            "alternating({n}) closure produced order {}",
            g.order()
        )));
    }
    g.label = format!("A{n}");
    Ok(g)
}

pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let n = a.order() * b.order();
    if n > DEFAULT_ORDER_CAP {
        return Err(Error::Capacity {
            order: n,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let bo = b.order();
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            let (ax, bx) = (x / bo, x % bo);
            let (ay, by) = (y / bo, y % bo);
            table[x * n + y] = (a.mul(ax, ay) * bo + b.mul(bx, by)) as u16;
        }
    }
    Group::from_table(
        &format!("{}x{}", a.label, b.label),
        table,
        DEFAULT_ORDER_CAP,
    )
}

/// Heisenberg group over GF(p): extraspecial of order p^3 and exponent p.
/// Elements are triples (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
pub fn extraspecial_p3_exp_p(p: usize) -> Result<Group> {
    if !crate::modp::is_prime(p as u64) || p == 2 || p > 7 {
        return Err(Error::Input(format!(
            "extraspecial({p}) needs an odd prime ≤ 7"
        )));
    }
    let n = p * p * p;
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut table = vec![0u16; n * n];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let x = enc(a, b, c);
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let y = enc(a2, b2, c2);
                            let z = enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
                            table[x * n + y] = z as u16;
                        }
                    }
                }
            }
        }
    }
    let g = Group::from_table(&format!("extraspecial:{p}"), table, DEFAULT_ORDER_CAP)?;
    debug_assert_eq!(g.exponent(), p);
    Ok(g)
}

/// Semidirect product E ⋊ ⟨a⟩ for an automorphism a of order q given as an
/// image table. Elements are pairs (t, x) = a^t · x with index t·|E| + x;
/// (a^s x)(a^t y) = a^{s+t} (x^{a^t} y).
#[allow(clippy::needless_range_loop)] // indices are the (a^s x) coordinates
fn semidirect_by_automorphism(e: &Group, aut: &[usize], q: usize, label: &str) -> Result<Group> {
    let eo = e.order();
    // validate the automorphism exhaustively
    let mut seen = vec![false; eo];
    for &img in aut {
        if img >= eo || seen[img] {
            return Err(Error::Construction(
                "automorphism image is not a bijection".into(),
            ));
        }
        seen[img] = true;
    }
    for x in 0..eo {
        for y in 0..eo {
            if aut[e.mul(x, y)] != e.mul(aut[x], aut[y]) {
                return Err(Error::Construction("map is not a homomorphism".into()));
            }
        }
    }
    // order of the automorphism must be exactly q
    let mut pow_tables: Vec<Vec<usize>> = vec![(0..eo).collect()];
    for t in 1..=q {
        let prev = &pow_tables[t - 1];
        pow_tables.push((0..eo).map(|x| aut[prev[x]]).collect());
    }
    if pow_tables[q] != pow_tables[0] || (1..q).any(|t| pow_tables[t] == pow_tables[0]) {
        return Err(Error::Construction(format!(
            "automorphism does not have order {q}"
        )));
    }
    let n = eo * q;
    if n > DEFAULT_ORDER_CAP {
        return Err(Error::Capacity {
            order: n,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let mut table = vec![0u16; n * n];
    for s in 0..q {
        for x in 0..eo {
            let idx = s * eo + x;
            for t in 0..q {
                for y in 0..eo {
                    let jdx = t * eo + y;
                    // (a^s x)(a^t y) = a^{s+t} · x^{a^t} · y
                    let xt = pow_tables[t][x];
                    let v = ((s + t) % q) * eo + e.mul(xt, y);
                    table[idx * n + jdx] = v as u16;
                }
            }
        }
    }
    Group::from_table(label, table, DEFAULT_ORDER_CAP)
}

/// The group ⟨a⟩E of the induced-character example: a of prime order q
/// dividing p−1 acting on the extraspecial E by the scalar λ of order q on
/// both generators (hence λ² on the center). Fixed-point-freeness is
/// verified exhaustively; for q = 2 no fixed-point-free automorphism of a
/// nonabelian group exists (λ² = 1 fixes the center pointwise), so the
/// construction reports an error rather than returning a wrong group.
pub fn frobenius_ae(p: usize, q: usize) -> Result<Group> {
    if !crate::modp::is_prime(q as u64) || !(p - 1).is_multiple_of(q) {
        return Err(Error::Input(format!(
            "need prime q dividing p-1, got ({p},{q})"
        )));
    }
    let e = extraspecial_p3_exp_p(p)?;
    // smallest λ of multiplicative order q mod p
    let lambda = (2..p)
        .find(|&l| {
            let mut acc = 1usize;
            let mut ord = 0usize;
            loop {
                acc = acc * l % p;
                ord += 1;
                if acc == 1 {
                    break;
                }
            }
            ord == q
        })
        .ok_or_else(|| Error::Construction("no element of order q mod p".into()))?;
    // (a, b, c) -> (λa, λb, λ²c) is an automorphism of the Heisenberg group
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut aut = vec![0usize; e.order()];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                aut[enc(a, b, c)] = enc(lambda * a % p, lambda * b % p, lambda * lambda * c % p);
            }
        }
    }
    // exhaustive fixed-point-freeness check
    let fixed: Vec<usize> = (1..e.order()).filter(|&x| aut[x] == x).collect();
    if !fixed.is_empty() {
        return Err(Error::Construction(format!(
            "scalar action λ={lambda} of order {q} on extraspecial:{p} fixes {} nontrivial \
             elements (λ²=1 pins the center whenever q=2); no fixed-point-free choice exists",
            fixed.len()
        )));
    }
    let g = semidirect_by_automorphism(&e, &aut, q, &format!("aE:{p}:{q}"))?;
    Ok(g)
}

/// Order-2 twist of the Heisenberg group by (a, b, c) -> (a, −b, −c): the
/// nearest order-2p³ relative of the ⟨a⟩E example. It moves the center, so
/// nonlinear characters of E induce irreducibly (degree 2p), but the action
/// is not fixed-point-free and the example's character counts do not apply.
pub fn heisenberg_flip(p: usize) -> Result<Group> {
    let e = extraspecial_p3_exp_p(p)?;
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut aut = vec![0usize; e.order()];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                aut[enc(a, b, c)] = enc(a, (p - b) % p, (p - c) % p);
            }
        }
    }
    semidirect_by_automorphism(&e, &aut, 2, &format!("flip:{p}"))
}

// ---------------------------------------------------------------------------
// label resolution and the corpus
// ---------------------------------------------------------------------------

/// Resolve a zoo label like "C12", "D4", "Q8", "S4", "A6", "elem:2:3",
/// "extraspecial:3", "aE:7:3", "flip:3", or a product "C2xS3".
pub fn by_label(label: &str) -> Result<Group> {
    if let Some(res) = by_atomic_label(label) {
        return res;
    }
    // product labels: try every 'x' as the separator
    for (i, ch) in label.char_indices() {
        if ch != 'x' || i == 0 || i + 1 == label.len() {
            continue;
        }
        if let (Ok(a), Ok(b)) = (by_label(&label[..i]), by_label(&label[i + 1..])) {
            return direct_product(&a, &b);
        }
    }
    Err(bad_label(label))
}

/// Resolution for non-product labels; None when the shape is not recognized
/// (so a product split may still apply), an error when the shape is right
/// but construction fails.
fn by_atomic_label(label: &str) -> Option<Result<Group>> {
    if label.is_empty() || !label.is_ascii() {
        return Some(Err(bad_label(label)));
    }
    if let Some(rest) = label.strip_prefix("elem:") {
        return Some(parse_two(rest).and_then(|(p, k)| {
            let in_range = crate::modp::is_prime(p as u64)
                && k >= 1
                && (p as f64).powi(k as i32) <= DEFAULT_ORDER_CAP as f64;
            if in_range {
                Ok(elementary_abelian(p, k))
            } else {
                Err(bad_label(label))
            }
        }));
    }
    if let Some(rest) = label.strip_prefix("extraspecial:") {
        return Some(match rest.parse::<usize>() {
            Ok(p) => extraspecial_p3_exp_p(p),
            Err(_) => Err(bad_label(label)),
        });
    }
    if let Some(rest) = label.strip_prefix("aE:") {
        return Some(parse_two(rest).and_then(|(p, q)| frobenius_ae(p, q)));
    }
    if let Some(rest) = label.strip_prefix("flip:") {
        return Some(match rest.parse::<usize>() {
            Ok(p) => heisenberg_flip(p),
            Err(_) => Err(bad_label(label)),
        });
    }
    if label == "Q8" {
        return Some(Ok(quaternion8()));
    }
    let (head, rest) = label.split_at(1);
    let n: usize = rest.parse().ok()?;
    match head {
        "C" if (1..=DEFAULT_ORDER_CAP).contains(&n) => Some(Ok(cyclic(n))),
        "D" if n >= 1 && 2 * n <= DEFAULT_ORDER_CAP => Some(Ok(dihedral(n))),
        "S" => Some(symmetric(n)),
        "A" => Some(alternating(n)),
        _ => None,
    }
}

fn bad_label(label: &str) -> Error {
    Error::Input(format!("unknown zoo label {label:?}"))
}

fn parse_two(rest: &str) -> Result<(usize, usize)> {
    let mut it = rest.split(':');
    let a = it.next().and_then(|t| t.parse().ok());
    let b = it.next().and_then(|t| t.parse().ok());
    match (a, b, it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(Error::Input(format!("bad parameters {rest:?}"))),
    }
}

/// Group families the corpus can draw from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Cyclic,
    ElementaryAbelian,
    Dihedral,
    Quaternion,
    Symmetric,
    Alternating,
    Extraspecial,
    DirectProduct,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Cyclic,
        Family::ElementaryAbelian,
        Family::Dihedral,
        Family::Quaternion,
        Family::Symmetric,
        Family::Alternating,
        Family::Extraspecial,
        Family::DirectProduct,
    ];
}

/// Which groups to generate for a corpus run.
#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub max_order: usize,
    pub families: Vec<Family>,
    pub include_named: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_order: 128,
            families: Family::ALL.to_vec(),
            include_named: true,
        }
    }
}

/// Labels of the named groups a default corpus carries regardless of
/// max_order (they are the paper's concrete witnesses).
pub const NAMED_LABELS: [&str; 5] = ["A6", "extraspecial:3", "extraspecial:5", "flip:3", "aE:7:3"];

/// Deterministic corpus: family instances within max_order, then the named
/// groups, deduplicated by label.
pub fn corpus(spec: &CorpusSpec) -> Vec<Group> {
    let has = |f: Family| spec.families.contains(&f);
    let mut labels: Vec<String> = Vec::new();
    if has(Family::Cyclic) {
        let cyclic_sizes = [
            1usize, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 21, 24, 27, 30, 32,
            36, 48, 60, 64, 100, 105, 127, 128,
        ];
        for n in cyclic_sizes {
            labels.push(format!("C{n}"));
        }
    }
    if has(Family::ElementaryAbelian) {
        for (p, k) in [
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 2),
            (3, 3),
            (5, 2),
            (7, 2),
        ] {
            labels.push(format!("elem:{p}:{k}"));
        }
    }
    if has(Family::Dihedral) {
        for n in [3usize, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 20, 24, 32, 64] {
            labels.push(format!("D{n}"));
        }
    }
    if has(Family::Quaternion) {
        labels.push("Q8".into());
    }
    if has(Family::Symmetric) {
        for n in [3usize, 4, 5] {
            labels.push(format!("S{n}"));
        }
    }
    if has(Family::Alternating) {
        for n in [4usize, 5] {
            labels.push(format!("A{n}"));
        }
    }
    if has(Family::Extraspecial) {
        for p in [3usize, 5] {
            labels.push(format!("extraspecial:{p}"));
        }
        labels.push("flip:3".into());
    }
    if has(Family::DirectProduct) {
        for prod in [
            "C2xC4", "C4xC4", "C2xC6", "C2xS3", "C2xD4", "C2xQ8", "C3xS3", "S3xS3", "C2xA4",
            "C3xQ8", "C2xC2xS3",
        ] {
            labels.push(prod.to_string());
        }
    }
    let named: Vec<String> = if spec.include_named {
        NAMED_LABELS.iter().map(|s| s.to_string()).collect()
    } else {
        Vec::new()
    };
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for label in labels {
        if !seen.insert(label.clone()) {
            continue;
        }
        match by_label(&label) {
            Ok(g) if g.order() <= spec.max_order => out.push(g),
            Ok(_) => {}
            Err(Error::Capacity { .. }) | Err(Error::Input(_)) => {}
            Err(e) => panic!("corpus constructor for {label} failed: {e}"),
        }
    }
    for label in named {
        if !seen.insert(label.clone()) {
            continue;
        }
        match by_label(&label) {
            Ok(g) => out.push(g),
            Err(e) => panic!("named corpus group {label} failed: {e}"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, conjugacy_classes, derived_length};

    #[test]
    fn cyclic_and_trivial() {
        assert_eq!(trivial().order(), 1);
        let c6 = cyclic(6);
        assert_eq!(c6.order(), 6);
        assert_eq!(derived_length(&c6), Some(1));
        assert_eq!(c6.exponent(), 6);
    }

    #[test]
    fn dihedral_counts() {
        let d4 = dihedral(4);
        assert_eq!(d4.order(), 8);
        assert_eq!(conjugacy_classes(&d4).count, 5);
        assert_eq!(center(&d4).order(), 2);
        let d3 = dihedral(3);
        assert_eq!(d3.order(), 6);
        assert_eq!(conjugacy_classes(&d3).count, 3);
        assert_eq!(dihedral(1).order(), 2);
        assert_eq!(dihedral(2).order(), 4);
        assert!(dihedral(2).is_abelian());
    }

    #[test]
    fn quaternion_structure() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        assert_eq!(center(&q8).order(), 2);
        assert_eq!(conjugacy_classes(&q8).count, 5);
        assert_eq!(q8.exponent(), 4);
        // exactly one element of order 2
        assert_eq!((0..8).filter(|&x| q8.element_order(x) == 2).count(), 1);
        // derived subgroup is the center
        let d = crate::group::derived_subgroup(
            &q8,
            &crate::group::Subgroup {
                members: q8.full_set(),
            },
        );
        assert_eq!(d.order(), 2);
    }

    #[test]
    fn symmetric_alternating_orders() {
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        let a6 = alternating(6).unwrap();
        assert_eq!(a6.order(), 360);
        assert_eq!(conjugacy_classes(&a6).count, 7);
    }

    #[test]
    fn extraspecial_structure() {
        let e = extraspecial_p3_exp_p(3).unwrap();
        assert_eq!(e.order(), 27);
        assert_eq!(e.exponent(), 3);
        assert_eq!(center(&e).order(), 3);
        // p^2 + p - 1 classes: p singletons and p^2 - 1 classes of size p
        let cls = conjugacy_classes(&e);
        assert_eq!(cls.count, 11);
        assert_eq!(cls.size.iter().filter(|&&s| s == 1).count(), 3);
        assert_eq!(cls.size.iter().filter(|&&s| s == 3).count(), 8);
        let e5 = extraspecial_p3_exp_p(5).unwrap();
        assert_eq!(e5.order(), 125);
        assert_eq!(center(&e5).order(), 5);
        assert_eq!(conjugacy_classes(&e5).count, 29);
    }

    #[test]
    fn frobenius_ae_rejects_q2_and_builds_odd_q() {
        // Burnside: a group with a fixed-point-free automorphism of order 2
        // is abelian, so (3,2) and (5,2) must fail the exhaustive check.
        assert!(matches!(frobenius_ae(3, 2), Err(Error::Construction(_))));
        assert!(matches!(frobenius_ae(5, 2), Err(Error::Construction(_))));
        // smallest realizable instance: p = 7, q = 3
        let g = frobenius_ae(7, 3).unwrap();
        assert_eq!(g.order(), 1029);
        // q + (p^2-1)/q + (p-1)/q classes
        assert_eq!(conjugacy_classes(&g).count, 3 + 16 + 2);
    }

    #[test]
    fn heisenberg_flip_builds() {
        let g = heisenberg_flip(3).unwrap();
        assert_eq!(g.order(), 54);
        assert!(derived_length(&g).is_some());
        assert_eq!(conjugacy_classes(&g).count, 10);
    }

    #[test]
    fn direct_products_and_labels() {
        let g = by_label("C2xS3").unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.label, "C2xS3");
        let h = by_label("C2xC2xS3").unwrap();
        assert_eq!(h.order(), 24);
        assert!(by_label("Zork").is_err());
        assert!(by_label("C0").is_err());
    }

    #[test]
    fn corpus_contents() {
        let tiny = corpus(&CorpusSpec {
            max_order: 1,
            include_named: false,
            ..CorpusSpec::default()
        });
        assert_eq!(tiny.len(), 1);
        assert_eq!(tiny[0].label, "C1");
        let eight = corpus(&CorpusSpec {
            max_order: 8,
            include_named: false,
            ..CorpusSpec::default()
        });
        let labels: Vec<&str> = eight.iter().map(|g| g.label.as_str()).collect();
        for want in [
            "C2", "C8", "D3", "D4", "Q8", "S3", "elem:2:2", "elem:2:3", "C2xC4",
        ] {
            assert!(labels.contains(&want), "missing {want} in {labels:?}");
        }
        let full = corpus(&CorpusSpec::default());
        let labels: Vec<&str> = full.iter().map(|g| g.label.as_str()).collect();
        for want in [
            "A6",
            "extraspecial:3",
            "extraspecial:5",
            "aE:7:3",
            "flip:3",
            "D64",
        ] {
            assert!(labels.contains(&want), "missing {want}");
        }
        // deduplicated
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), labels.len());
    }
}
