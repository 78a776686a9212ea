//! Exact arithmetic with sums of roots of unity.
//!
//! A value is stored as an integer vector c[0..e] meaning Σ c[j]·ζ^j with
//! ζ = exp(2πi/e). The representation is redundant (Z[x]/(x^e−1) rather than
//! Z[ζ]); identities are decided by reducing the difference modulo the e-th
//! cyclotomic polynomial. Character-table rows keep the eigenvalue-count
//! form produced by Dixon lifting, so entries there are non-negative.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;

/// Coefficients of the e-th cyclotomic polynomial, low-to-high, monic.
pub fn cyclotomic_poly(e: usize) -> std::sync::Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, std::sync::Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&e) {
        return hit.clone();
    }
    // x^e - 1 divided by the product of Phi_d over proper divisors d of e
    let mut num = vec![0i64; e + 1];
    num[0] = -1;
    num[e] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    let arc = std::sync::Arc::new(num);
    cache.lock().unwrap().insert(e, arc.clone());
    arc
}

/// Exact division of integer polynomials (remainder must vanish).
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(*den.last().unwrap() == 1, "divisor must be monic");
    let mut rem: Vec<i64> = num.to_vec();
    let mut quo = vec![0i64; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let q = rem[k + dd];
        quo[k] = q;
        if q != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] -= q * dc;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    quo
}

/// Integer combination of e-th roots of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc {
    e: usize,
    c: Vec<i64>,
}

impl Cyc {
    pub fn zero(e: usize) -> Self {
        Cyc { e, c: vec![0; e] }
    }

    pub fn integer(e: usize, m: i64) -> Self {
        let mut v = Cyc::zero(e);
        v.c[0] = m;
        v
    }

    /// m·ζ^j
    pub fn root(e: usize, j: usize, m: i64) -> Self {
        let mut v = Cyc::zero(e);
        v.c[j % e] = m;
        v
    }

    pub fn from_counts(e: usize, counts: Vec<i64>) -> Self {
        assert_eq!(counts.len(), e);
        Cyc { e, c: counts }
    }

    pub fn modulus(&self) -> usize {
        self.e
    }

    pub fn counts(&self) -> &[i64] {
        &self.c
    }

    pub fn count_sum(&self) -> i64 {
        self.c.iter().sum()
    }

    /// Coefficient at ζ^0; for an eigenvalue-count vector this is the
    /// multiplicity of eigenvalue 1.
    pub fn m0(&self) -> i64 {
        self.c[0]
    }

    pub fn has_nonneg_counts(&self) -> bool {
        self.c.iter().all(|&m| m >= 0)
    }

    /// counts palindromic under j → e−j (mod e)
    pub fn is_palindromic(&self) -> bool {
        (1..self.e).all(|j| self.c[j] == self.c[self.e - j])
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        assert_eq!(self.e, other.e);
        let c = self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect();
        Cyc { e: self.e, c }
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        assert_eq!(self.e, other.e);
        let c = self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect();
        Cyc { e: self.e, c }
    }

    pub fn scale(&self, k: i64) -> Cyc {
        Cyc {
            e: self.e,
            c: self.c.iter().map(|&a| a * k).collect(),
        }
    }

    /// Cyclic convolution; iterates only nonzero entries, so products of
    /// character values cost O(deg_a · deg_b) rather than O(e^2).
    pub fn mul(&self, other: &Cyc) -> Cyc {
        assert_eq!(self.e, other.e);
        let mut out = vec![0i64; self.e];
        for (j, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (k, &b) in other.c.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let idx = j + k;
                let idx = if idx >= self.e { idx - self.e } else { idx };
                out[idx] += a * b;
            }
        }
        Cyc { e: self.e, c: out }
    }

    /// Complex conjugate: ζ^j → ζ^{e−j}.
    pub fn conj(&self) -> Cyc {
        let mut out = vec![0i64; self.e];
        out[0] = self.c[0];
        for j in 1..self.e {
            out[self.e - j] = self.c[j];
        }
        Cyc { e: self.e, c: out }
    }

    /// Re-express over a larger modulus E (e | E), ζ_e = ζ_E^{E/e}.
    pub fn rescale(&self, new_e: usize) -> Cyc {
        assert_eq!(new_e % self.e, 0);
        let f = new_e / self.e;
        let mut out = vec![0i64; new_e];
        for (j, &a) in self.c.iter().enumerate() {
            out[j * f] = a;
        }
        Cyc { e: new_e, c: out }
    }

    /// Canonical representative modulo Φ_e, degree < φ(e). Computed in i128
    /// because intermediate coefficients can exceed the inputs.
    fn reduced(&self) -> Vec<i128> {
        if self.e == 1 {
            return vec![self.c[0] as i128];
        }
        let phi = cyclotomic_poly(self.e);
        let deg = phi.len() - 1;
        let mut rem: Vec<i128> = self.c.iter().map(|&x| x as i128).collect();
        for k in (deg..self.e).rev() {
            let q = rem[k];
            if q != 0 {
                rem[k] = 0;
                for (i, &pc) in phi.iter().enumerate().take(deg) {
                    rem[k - deg + i] -= q * pc as i128;
                }
            }
        }
        rem.truncate(deg);
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&x| x == 0)
    }

    pub fn equals(&self, other: &Cyc) -> bool {
        self.sub(other).is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.equals(&self.conj())
    }

    /// The rational integer this value equals, if it is one.
    pub fn to_integer(&self) -> Option<i64> {
        let red = self.reduced();
        if red.iter().skip(1).any(|&x| x != 0) {
            return None;
        }
        i64::try_from(red[0]).ok()
    }

    /// Value as residue mod p, sending ζ to omega (an e-th root of unity mod p).
    pub fn eval_mod_p(&self, omega: u64, p: u64) -> u64 {
        let mut acc: u64 = 0;
        let mut w: u64 = 1;
        for &a in &self.c {
            let am = a.rem_euclid(p as i64) as u64;
            acc = crate::modp::add(acc, crate::modp::mul(am, w, p), p);
            w = crate::modp::mul(w, omega, p);
        }
        acc
    }

    /// "7" when the value is a rational integer, else the count expansion,
    /// e.g. "z^1+2z^3".
    pub fn canonical_string(&self) -> String {
        if let Some(m) = self.to_integer() {
            return m.to_string();
        }
        let mut parts = Vec::new();
        for (j, &m) in self.c.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let body = if m == 1 {
                format!("z^{j}")
            } else if m == -1 {
                format!("-z^{j}")
            } else {
                format!("{m}z^{j}")
            };
            parts.push(body);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+").replace("+-", "-")
        }
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc(e={}, {})", self.e, self.canonical_string())
    }
}

/// Divide a value known to be |G| times a rational integer; errors signal a
/// violated character axiom or an internal bug.
pub fn exact_integer_quotient(v: &Cyc, divisor: i64, what: &str) -> Result<i64, Error> {
    let n = v
        .to_integer()
        .ok_or_else(|| Error::Diagnostic(format!("{what}: value is not a rational integer")))?;
    if n % divisor != 0 {
        return Err(Error::Diagnostic(format!(
            "{what}: {n} not divisible by {divisor}"
        )));
    }
    Ok(n / divisor)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys_small() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // first index with a coefficient of magnitude 2
        assert_eq!(cyclotomic_poly(105).iter().map(|c| c.abs()).max(), Some(2));
    }

    #[test]
    fn sum_of_all_pth_roots_vanishes() {
        for e in [2usize, 3, 5, 7] {
            let v = Cyc::from_counts(e, vec![1; e]);
            assert!(v.is_zero());
        }
    }

    #[test]
    fn zeta6_relation() {
        // ζ_6 = 1 + ζ_3, i.e. ζ_6 − ζ_6^2 − 1 = 0
        let v = Cyc::root(6, 1, 1)
            .sub(&Cyc::root(6, 2, 1))
            .sub(&Cyc::integer(6, 1));
        assert!(v.is_zero());
    }

    #[test]
    fn conj_is_involution_and_detects_reality() {
        let v = Cyc::root(5, 1, 2).add(&Cyc::root(5, 3, 1));
        assert!(v.conj().conj().equals(&v));
        assert!(!v.is_real());
        let w = Cyc::root(5, 2, 1).add(&Cyc::root(5, 3, 1));
        assert!(w.is_real());
        assert!(w.is_palindromic());
    }

    #[test]
    fn rescale_preserves_value() {
        // ζ_3 over e=3 equals ζ_6^2 over e=6
        let v = Cyc::root(3, 1, 1).rescale(6);
        assert!(v.equals(&Cyc::root(6, 2, 1)));
    }

    #[test]
    fn integer_extraction() {
        // 1 + ζ_4 + ζ_4^2 + ζ_4^3 = 0; plus 7 = 7
        let v = Cyc::from_counts(4, vec![8, 1, 1, 1]);
        assert_eq!(v.to_integer(), Some(7));
        assert_eq!(Cyc::root(4, 1, 1).to_integer(), None);
    }

    #[test]
    fn eval_mod_p_consistent_with_reduction() {
        let p = crate::modp::dixon_prime(12, 100);
        let w = crate::modp::root_of_unity(12, p);
        let v = Cyc::root(12, 4, 1).add(&Cyc::root(12, 8, 1)); // ζ_3 + ζ_3^2 = −1
        assert_eq!(v.to_integer(), Some(-1));
        assert_eq!(v.eval_mod_p(w, p), p - 1);
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Cyc::integer(6, 3).canonical_string(), "3");
        assert_eq!(
            Cyc::from_counts(6, vec![5, 1, 1, 1, 1, 1]).canonical_string(),
            "4"
        );
        let v = Cyc::root(5, 1, 1).add(&Cyc::root(5, 4, 2));
        assert_eq!(v.canonical_string(), "z^1+2z^4");
    }
}
