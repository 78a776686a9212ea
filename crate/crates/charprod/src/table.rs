//! Exact character tables by the Dixon–Schneider method.
//!
//! Class-constant matrices are split into common eigenspaces over GF(p)
//! for the smallest prime p ≡ 1 (mod e) with p > 2|G|; the one-dimensional
//! eigenspaces are normalized to central characters, degrees are recovered
//! from orthogonality, and each value is lifted to an exact eigenvalue-count
//! vector over e-th roots of unity by the discrete Fourier sum over powers
//! of a class representative.

use std::sync::Arc;

use crate::cyclotomic::{exact_integer_quotient, Cyc};
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, lcm, Classes, ElemSet, Group, Subgroup};
use crate::modp::{self, Mat};

/// One irreducible character: exact values per conjugacy class.
#[derive(Clone, Debug)]
pub struct Character {
    pub index: usize,
    pub degree: usize,
    pub values: Vec<Cyc>,
}

/// The complete character table of a group. Row 0 is the principal
/// character; the rest are sorted by (degree, lexicographic counts).
pub struct CharacterTable {
    pub group: Arc<Group>,
    pub classes: Classes,
    pub rows: Vec<Character>,
    pub prime: u64,
    pub omega_mod_p: u64,
}

/// Subspace of GF(p)^k kept in reduced row echelon form, so coordinates of
/// a member vector can be read off at the pivot columns.
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn from_rows(rows: Vec<Vec<u64>>, p: u64) -> Space {
        let cols = rows[0].len();
        let mut m = Mat {
            rows: rows.len(),
            cols,
            a: rows.concat(),
        };
        let pivots = modp::rref(&mut m, p);
        assert_eq!(pivots.len(), rows.len(), "dependent rows passed to Space");
        let basis = (0..m.rows)
            .map(|r| m.a[r * cols..(r + 1) * cols].to_vec())
            .collect();
        Space { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coords(&self, v: &[u64]) -> Vec<u64> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }
}

pub fn character_table(group: Arc<Group>) -> Result<CharacterTable> {
    let classes = conjugacy_classes(&group);
    let k = classes.count;
    let n = group.order();
    let e = group.exponent() as u64;
    let p = modp::dixon_prime(e, 2 * n as u64);
    let omega = modp::root_of_unity(e, p);

    // class constants: cc[i] has entry (row j, col t) = #{(x,y) ∈ C_i × C_j : xy = g_t}
    let mut cc: Vec<Mat> = (0..k).map(|_| Mat::zero(k, k)).collect();
    for t in 0..k {
        let gt = classes.rep[t];
        for x in 0..n {
            let i = classes.class_of[x];
            let j = classes.class_of[group.mul(group.inv(x), gt)];
            let idx = j * k + t;
            cc[i].a[idx] += 1;
        }
    }

    // split common eigenspaces; the central-character vectors are exactly
    // the one-dimensional common eigenspaces
    let ident: Vec<Vec<u64>> = (0..k)
        .map(|r| {
            let mut row = vec![0u64; k];
            row[r] = 1;
            row
        })
        .collect();
    let mut spaces = vec![Space::from_rows(ident, p)];
    for mat in cc.iter().take(k).skip(1) {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.dim() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(space, mat, p)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::Diagnostic(
            "class matrices failed to split all eigenspaces".into(),
        ));
    }

    // normalize to central characters (value 1 at the identity class)
    let mut centrals: Vec<Vec<u64>> = Vec::with_capacity(k);
    for s in &spaces {
        let v = &s.basis[0];
        if v[0] == 0 {
            return Err(Error::Diagnostic(
                "central character vanishes at identity".into(),
            ));
        }
        let f = modp::inv(v[0], p);
        centrals.push(v.iter().map(|&x| modp::mul(x, f, p)).collect());
    }

    // degrees from row orthogonality, then modular character values
    let size_inv: Vec<u64> = classes
        .size
        .iter()
        .map(|&s| modp::inv(s as u64, p))
        .collect();
    // discrete logarithms of the e-th roots of unity mod p, for O(1) lifting
    // of root-of-unity values (every linear-character value is one)
    let mut dlog = vec![u32::MAX; p as usize];
    {
        let mut w = 1u64;
        for i in 0..e {
            dlog[w as usize] = i as u32;
            w = modp::mul(w, omega, p);
        }
    }
    let mut rows = Vec::with_capacity(k);
    for v in &centrals {
        let mut s = 0u64;
        for j in 0..k {
            let term = modp::mul(v[j], v[classes.inverse_class[j]], p);
            s = modp::add(s, modp::mul(term, size_inv[j], p), p);
        }
        let deg_sq = modp::mul(n as u64 % p, modp::inv(s, p), p);
        let degree = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| (d * d) as u64 % p == deg_sq)
            .ok_or_else(|| Error::Diagnostic("no integer degree matches".into()))?;
        if !n.is_multiple_of(degree) {
            return Err(Error::Diagnostic(format!(
                "degree {degree} does not divide group order {n}"
            )));
        }
        let vals_mod_p: Vec<u64> = (0..k)
            .map(|j| modp::mul(degree as u64, modp::mul(v[j], size_inv[j], p), p))
            .collect();
        let values = lift_row(
            &group,
            &classes,
            &vals_mod_p,
            degree,
            e as usize,
            omega,
            p,
            &dlog,
        )?;
        rows.push(Character {
            index: 0,
            degree,
            values,
        });
    }

    // canonical order: principal first, then (degree, lexicographic counts)
    let principal = rows
        .iter()
        .position(|r| r.degree == 1 && r.values.iter().all(|v| v.m0() == 1 && v.count_sum() == 1))
        .ok_or_else(|| Error::Diagnostic("principal character missing".into()))?;
    let first = rows.remove(principal);
    rows.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            for (va, vb) in a.values.iter().zip(&b.values) {
                match va.counts().cmp(vb.counts()) {
                    std::cmp::Ordering::Equal => {}
                    other => return other,
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    rows.insert(0, first);
    for (i, r) in rows.iter_mut().enumerate() {
        r.index = i;
    }

    let sum_sq: usize = rows.iter().map(|r| r.degree * r.degree).sum();
    if sum_sq != n {
        return Err(Error::Diagnostic(format!(
            "degree squares sum to {sum_sq}, group order is {n}"
        )));
    }
    let table = CharacterTable {
        group,
        classes,
        rows,
        prime: p,
        omega_mod_p: omega,
    };
    for i in 0..k {
        let norm = inner_product(
            &table.classes,
            n,
            &table.rows[i].values,
            &table.rows[i].values,
        )?;
        if norm != 1 {
            return Err(Error::Diagnostic(format!("row {i} has norm {norm}")));
        }
    }
    Ok(table)
}

/// Split one invariant subspace into eigenspaces of a class matrix.
fn split_space(space: Space, mat: &Mat, p: u64) -> Result<Vec<Space>> {
    let d = space.dim();
    let k = space.basis[0].len();
    // restriction of the matrix to the subspace, in basis coordinates
    let mut a = Mat::zero(d, d);
    for (s, b) in space.basis.iter().enumerate() {
        let img = mat.apply(b, p);
        let co = space.coords(&img);
        // the image must land back in the subspace
        debug_assert!({
            let mut back = vec![0u64; k];
            for (r, &c) in co.iter().enumerate() {
                for (back_x, &bx) in back.iter_mut().zip(&space.basis[r]) {
                    *back_x = modp::add(*back_x, modp::mul(c, bx, p), p);
                }
            }
            back == img
        });
        for (r, &c) in co.iter().enumerate() {
            a.set(r, s, c);
        }
    }
    let cp = modp::charpoly(&a, p);
    let roots = modp::poly_roots(&cp, p);
    let mut out = Vec::new();
    let mut total = 0usize;
    for lambda in roots {
        let mut shifted = a.clone();
        for r in 0..d {
            let v = modp::sub(shifted.at(r, r), lambda, p);
            shifted.set(r, r, v);
        }
        let null = modp::nullspace(&shifted, p);
        if null.is_empty() {
            continue;
        }
        total += null.len();
        let ambient: Vec<Vec<u64>> = null
            .iter()
            .map(|coeff| {
                let mut v = vec![0u64; k];
                for (r, &c) in coeff.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for (vx, &bx) in v.iter_mut().zip(&space.basis[r]) {
                        *vx = modp::add(*vx, modp::mul(c, bx, p), p);
                    }
                }
                v
            })
            .collect();
        out.push(Space::from_rows(ambient, p));
    }
    if total != d {
        return Err(Error::Diagnostic(
            "class matrix is not diagonalizable on an invariant subspace".into(),
        ));
    }
    Ok(out)
}

/// Lift modular values of one character to exact eigenvalue-count vectors.
#[allow(clippy::too_many_arguments)]
fn lift_row(
    group: &Group,
    classes: &Classes,
    vals_mod_p: &[u64],
    degree: usize,
    e: usize,
    omega: u64,
    p: u64,
    dlog: &[u32],
) -> Result<Vec<Cyc>> {
    let mut out = Vec::with_capacity(classes.count);
    for j in 0..classes.count {
        if degree == 1 {
            // a linear value is a single root of unity; read its exponent off
            // the dlog table instead of running the Fourier sum
            let a = dlog[vals_mod_p[j] as usize];
            if a == u32::MAX {
                return Err(Error::Diagnostic(
                    "linear value is not a root of unity".into(),
                ));
            }
            let mut counts = vec![0i64; e];
            counts[a as usize] = 1;
            out.push(Cyc::from_counts(e, counts));
            continue;
        }
        let g = classes.rep[j];
        let o = group.element_order(g);
        let omega_o = modp::pow(omega, (e / o) as u64, p);
        let o_inv = modp::inv(o as u64, p);
        // twiddles ζ_o^{-m} for m = 0..o
        let omega_o_inv = modp::inv(omega_o, p);
        let mut twiddle = Vec::with_capacity(o);
        let mut w = 1u64;
        for _ in 0..o {
            twiddle.push(w);
            w = modp::mul(w, omega_o_inv, p);
        }
        // values of the character on the powers of g
        let mut pow_vals = Vec::with_capacity(o);
        let mut x = 0usize;
        for _ in 0..o {
            pow_vals.push(vals_mod_p[classes.class_of[x]]);
            x = group.mul(x, g);
        }
        let mut counts = vec![0i64; e];
        let mut total = 0usize;
        for t in 0..o {
            let mut acc = 0u64;
            let mut idx = 0usize;
            for &val in &pow_vals {
                acc = modp::add(acc, modp::mul(val, twiddle[idx], p), p);
                idx += t;
                if idx >= o {
                    idx -= o;
                }
            }
            let m = modp::mul(acc, o_inv, p);
            if m as usize > degree {
                return Err(Error::Diagnostic(format!(
                    "eigenvalue count {m} exceeds degree {degree}"
                )));
            }
            counts[t * (e / o)] = m as i64;
            total += m as usize;
        }
        if total != degree {
            return Err(Error::Diagnostic(format!(
                "eigenvalue counts sum to {total}, degree is {degree}"
            )));
        }
        let cyc = Cyc::from_counts(e, counts);
        debug_assert_eq!(cyc.eval_mod_p(omega, p), vals_mod_p[j]);
        out.push(cyc);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// inner products and derived data
// ---------------------------------------------------------------------------

/// Exact [a, b] = (1/|G|) Σ_k |C_k| a(g_k) conj(b(g_k)); errors when the
/// result is not a rational integer (violated axiom or internal bug).
pub fn inner_product(classes: &Classes, order: usize, a: &[Cyc], b: &[Cyc]) -> Result<i64> {
    let e = lcm(a[0].modulus(), b[0].modulus());
    let mut acc = Cyc::zero(e);
    for t in 0..classes.count {
        let av = rescaled(&a[t], e);
        let bv = rescaled(&b[t], e);
        acc = acc.add(&av.mul(&bv.conj()).scale(classes.size[t] as i64));
    }
    exact_integer_quotient(&acc, order as i64, "inner product")
}

fn rescaled(v: &Cyc, e: usize) -> Cyc {
    if v.modulus() == e {
        v.clone()
    } else {
        v.rescale(e)
    }
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn k(&self) -> usize {
        self.classes.count
    }

    pub fn exponent(&self) -> usize {
        self.group.exponent()
    }

    pub fn inner(&self, a: &[Cyc], b: &[Cyc]) -> Result<i64> {
        inner_product(&self.classes, self.order(), a, b)
    }

    /// Value of a row at a group element.
    pub fn value_at(&self, row: usize, g: usize) -> &Cyc {
        &self.rows[row].values[self.classes.class_of[g]]
    }

    /// Kernel of a class function: elements where the value equals the value
    /// at the identity. For eigenvalue-count vectors this is "m_0 = degree".
    pub fn kernel_of_values(&self, values: &[Cyc]) -> Subgroup {
        let n = self.group.order();
        let mut set = ElemSet::empty(n);
        for g in 0..n {
            let cls = self.classes.class_of[g];
            if values[cls].equals(&values[0]) {
                set.insert(g);
            }
        }
        Subgroup { members: set }
    }

    pub fn kernel(&self, row: usize) -> Subgroup {
        self.kernel_of_values(&self.rows[row].values)
    }

    /// Z(χ) = {g : |χ(g)| = χ(1)}, tested exactly as χ(g)·conj(χ(g)) = χ(1)².
    pub fn z_of(&self, row: usize) -> Subgroup {
        let n = self.group.order();
        let deg = self.rows[row].degree as i64;
        let target = Cyc::integer(self.rows[row].values[0].modulus(), deg * deg);
        let mut set = ElemSet::empty(n);
        for g in 0..n {
            let v = self.value_at(row, g);
            if v.mul(&v.conj()).equals(&target) {
                set.insert(g);
            }
        }
        Subgroup { members: set }
    }

    /// conj(χ): value at class k is the value of χ at the inverse class,
    /// equivalently the counts reversed.
    pub fn conjugate_values(&self, values: &[Cyc]) -> Vec<Cyc> {
        values.iter().map(|v| v.conj()).collect()
    }

    /// Row index of conj(χ_row).
    pub fn conjugate_row(&self, row: usize) -> usize {
        let conj = self.conjugate_values(&self.rows[row].values);
        self.find_row_by_values(&conj)
            .expect("conjugate of an irreducible character is in the table")
    }

    pub fn find_row_by_values(&self, values: &[Cyc]) -> Option<usize> {
        self.rows.iter().position(|r| {
            r.values.iter().zip(values).all(|(a, b)| {
                rescaled(a, lcm(a.modulus(), b.modulus()))
                    .equals(&rescaled(b, lcm(a.modulus(), b.modulus())))
            })
        })
    }

    /// Pull every irreducible of the quotient back along the projection and
    /// locate it among this table's rows. Returns quotient-row -> this-row.
    pub fn lift_from_quotient(
        &self,
        quotient_table: &CharacterTable,
        projection: &[usize],
    ) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(quotient_table.rows.len());
        for qrow in &quotient_table.rows {
            let pulled: Vec<Cyc> = (0..self.classes.count)
                .map(|c| {
                    let x = self.classes.rep[c];
                    let qc = quotient_table.classes.class_of[projection[x]];
                    qrow.values[qc].clone()
                })
                .collect();
            let row = self.find_row_by_values(&pulled).ok_or_else(|| {
                Error::Diagnostic("pulled-back character not found in the table".into())
            })?;
            out.push(row);
        }
        Ok(out)
    }

    /// Table emission format: header line then k rows of k canonical values.
    pub fn emit(&self) -> String {
        let mut out = format!(
            "irr {} classes {} order {} exponent {}\n",
            self.rows.len(),
            self.classes.count,
            self.order(),
            self.exponent()
        );
        for r in &self.rows {
            let vals: Vec<String> = r.values.iter().map(|v| v.canonical_string()).collect();
            out.push_str(&vals.join(" "));
            out.push('\n');
        }
        out
    }
}
