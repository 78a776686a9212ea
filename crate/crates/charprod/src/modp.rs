//! Arithmetic and small dense linear algebra over GF(p).
//!
//! The character-table engine needs a prime p ≡ 1 (mod e) with p > 2|G|,
//! eigenvalue extraction for class-constant matrices, and nullspace/RREF
//! routines. Everything here is exact arithmetic on u64 residues.

/// p must stay below 2^32 so products fit in u64 via u128 widening.
pub const MAX_PRIME: u64 = 1 << 32;

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut b: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, b, p);
        }
        b = mul(b, b, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (p prime).
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime p with p ≡ 1 (mod e) and p > lower.
pub fn dixon_prime(e: u64, lower: u64) -> u64 {
    let mut p = lower / e * e + 1;
    while p <= lower {
        p += e;
    }
    while !is_prime(p) {
        p += e;
    }
    assert!(p < MAX_PRIME, "working prime out of range");
    p
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of multiplicative order exactly e in GF(p); requires e | p−1.
pub fn root_of_unity(e: u64, p: u64) -> u64 {
    assert_eq!((p - 1) % e, 0);
    let factors = distinct_prime_factors(p - 1);
    // find a generator of GF(p)^*, then take the (p-1)/e power
    'outer: for g in 2..p {
        for &q in &factors {
            if pow(g, (p - 1) / q, p) == 1 {
                continue 'outer;
            }
        }
        return pow(g, (p - 1) / e, p);
    }
    unreachable!("no generator found; p not prime?")
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<u64>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.a[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.a[r * self.cols + c] = v;
    }

    /// self * v for a column vector v.
    pub fn apply(&self, v: &[u64], p: u64) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0u64; self.rows];
        for (r, out_r) in out.iter_mut().enumerate() {
            let row = &self.a[r * self.cols..(r + 1) * self.cols];
            let mut acc = 0u128;
            for (x, y) in row.iter().zip(v) {
                acc += *x as u128 * *y as u128;
                // lazily reduce; row length < 2^16 and entries < 2^32 keep this safe
            }
            *out_r = (acc % p as u128) as u64;
        }
        out
    }
}

/// Reduced row echelon form in place; returns pivot column indices.
pub fn rref(m: &mut Mat, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let mut sel = None;
        for r in row..m.rows {
            if m.at(r, col) != 0 {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        for c in 0..m.cols {
            m.a.swap(row * m.cols + c, sel * m.cols + c);
        }
        let piv_inv = inv(m.at(row, col), p);
        for c in col..m.cols {
            let v = mul(m.at(row, c), piv_inv, p);
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r != row && m.at(r, col) != 0 {
                let f = m.at(r, col);
                for c in col..m.cols {
                    let v = sub(m.at(r, c), mul(f, m.at(row, c), p), p);
                    m.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis (as RREF rows) of the right nullspace of m.
pub fn nullspace(m: &Mat, p: u64) -> Vec<Vec<u64>> {
    let mut e = m.clone();
    let pivots = rref(&mut e, p);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u64; m.cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = sub(0, e.at(r, free), p);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial of a square matrix, monic, coefficients low-to-high.
///
/// Hessenberg reduction followed by the leading-minor recurrence; O(n^3).
pub fn charpoly(m: &Mat, p: u64) -> Vec<u64> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return vec![1];
    }
    let mut h = m.clone();
    // reduce to upper Hessenberg by similarity transforms
    for k in 0..n.saturating_sub(2) {
        let mut piv = None;
        for r in k + 1..n {
            if h.at(r, k) != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        if piv != k + 1 {
            for c in 0..n {
                h.a.swap(piv * n + c, (k + 1) * n + c);
            }
            for r in 0..n {
                h.a.swap(r * n + piv, r * n + k + 1);
            }
        }
        let d = inv(h.at(k + 1, k), p);
        for r in k + 2..n {
            let f = mul(h.at(r, k), d, p);
            if f == 0 {
                continue;
            }
            for c in 0..n {
                let v = sub(h.at(r, c), mul(f, h.at(k + 1, c), p), p);
                h.set(r, c, v);
            }
            for rr in 0..n {
                let v = add(h.at(rr, k + 1), mul(f, h.at(rr, r), p), p);
                h.set(rr, k + 1, v);
            }
        }
    }
    // p_i = charpoly of the leading i x i block of the Hessenberg form
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for i in 1..=n {
        let mut cur = poly_shift_scale(&polys[i - 1], h.at(i - 1, i - 1), p);
        let mut prod = 1u64;
        for k in 1..i {
            prod = mul(prod, h.at(i - k, i - k - 1), p);
            let coef = mul(h.at(i - k - 1, i - 1), prod, p);
            if coef != 0 {
                poly_sub_scaled(&mut cur, &polys[i - k - 1], coef, p);
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// (x - a) * q
fn poly_shift_scale(q: &[u64], a: u64, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; q.len() + 1];
    for (i, &c) in q.iter().enumerate() {
        out[i + 1] = add(out[i + 1], c, p);
        out[i] = sub(out[i], mul(a, c, p), p);
    }
    out
}

fn poly_sub_scaled(dst: &mut [u64], src: &[u64], f: u64, p: u64) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = sub(*d, mul(f, s, p), p);
    }
}

/// All roots in GF(p) of a polynomial, by direct scan.
pub fn poly_roots(poly: &[u64], p: u64) -> Vec<u64> {
    let mut roots = Vec::new();
    for x in 0..p {
        let mut acc = 0u64;
        for &c in poly.iter().rev() {
            acc = add(mul(acc, x, p), c, p);
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_prime_examples() {
        // A6: |G| = 360, exponent 60; 721, 781, 841, 901, 961 are all composite
        let p = dixon_prime(60, 720);
        assert!(is_prime(p) && p > 720 && (p - 1).is_multiple_of(60));
        assert_eq!(p, 1021);
        // C128: exponent 128, |G| = 128
        assert_eq!(dixon_prime(128, 256), 257);
    }

    #[test]
    fn root_of_unity_has_exact_order() {
        let p = dixon_prime(12, 100);
        let w = root_of_unity(12, p);
        assert_eq!(pow(w, 12, p), 1);
        for d in [1, 2, 3, 4, 6] {
            assert_ne!(pow(w, d, p), 1);
        }
    }

    #[test]
    fn charpoly_matches_brute_force_3x3() {
        let p = 101;
        // det(xI - A) expanded by hand for a fixed A
        let mut a = Mat::zero(3, 3);
        let vals = [[2u64, 3, 5], [7, 11, 13], [17, 19, 23]];
        for (r, row) in vals.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                a.set(r, c, v);
            }
        }
        let cp = charpoly(&a, p);
        // trace = 36, det = 2*(11*23-13*19) + ... = compute explicitly
        let det_i: i64 = 2 * (11 * 23 - 13 * 19) - 3 * (7 * 23 - 13 * 17) + 5 * (7 * 19 - 11 * 17);
        let det = det_i.rem_euclid(p as i64) as u64;
        // sum of principal 2x2 minors
        let m2: i64 = (11 * 23 - 13 * 19) + (2 * 23 - 5 * 17) + (2 * 11 - 3 * 7);
        let m2 = m2.rem_euclid(p as i64) as u64;
        assert_eq!(cp.len(), 4);
        assert_eq!(cp[3], 1);
        assert_eq!(cp[2], sub(0, 36, p));
        assert_eq!(cp[1], m2);
        assert_eq!(cp[0], sub(0, det, p));
    }

    #[test]
    fn nullspace_of_singular_matrix() {
        let p = 97;
        let mut a = Mat::zero(2, 3);
        a.set(0, 0, 1);
        a.set(0, 1, 2);
        a.set(0, 2, 3);
        a.set(1, 0, 2);
        a.set(1, 1, 4);
        a.set(1, 2, 6);
        let ns = nullspace(&a, p);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(a.apply(v, p), vec![0, 0]);
        }
    }

    #[test]
    fn roots_scan_finds_all() {
        let p = 31;
        // (x-3)(x-5) = x^2 - 8x + 15
        let poly = vec![15, sub(0, 8, p), 1];
        assert_eq!(poly_roots(&poly, p), vec![3, 5]);
    }
}
