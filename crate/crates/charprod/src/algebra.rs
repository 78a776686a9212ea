//! Products of characters, decomposition into irreducible constituents,
//! η(χ), and restriction/induction between a group and its subgroups.

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, lcm, Classes, Group, Materialized, Subgroup};
use crate::table::{inner_product, CharacterTable};

/// Pointwise product of class functions over the same group.
pub fn product(a: &[Cyc], b: &[Cyc]) -> Vec<Cyc> {
    let e = lcm(a[0].modulus(), b[0].modulus());
    a.iter()
        .zip(b)
        .map(|(x, y)| up(x, e).mul(&up(y, e)))
        .collect()
}

fn up(v: &Cyc, e: usize) -> Cyc {
    if v.modulus() == e {
        v.clone()
    } else {
        v.rescale(e)
    }
}

/// χ · conj(χ) for a table row.
pub fn norm_square(table: &CharacterTable, row: usize) -> Vec<Cyc> {
    let conj = table.conjugate_values(&table.rows[row].values);
    product(&table.rows[row].values, &conj)
}

/// A class function expressed over a table's irreducible rows.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// multiplicity per table row
    pub coeffs: Vec<i64>,
    /// coefficient of the principal character
    pub principal_coeff: i64,
    /// non-principal rows with positive multiplicity, in row order
    pub constituents: Vec<(usize, i64)>,
    /// number of distinct non-principal constituents
    pub eta: usize,
}

impl Decomposition {
    pub fn multiplicity_multiset(&self) -> Vec<i64> {
        let mut m: Vec<i64> = self.constituents.iter().map(|&(_, a)| a).collect();
        m.sort_unstable();
        m
    }

    /// Report line: `chi=<row> deg=<d> eta=<n> decomp= 1*1 + a1*r1 + …`,
    /// rows printed 1-based so the principal term is always `1*1`.
    pub fn report_line(&self, chi_row: usize, degree: usize) -> String {
        let mut terms = vec![format!("{}*1", self.principal_coeff)];
        for &(row, a) in &self.constituents {
            terms.push(format!("{}*{}", a, row + 1));
        }
        format!(
            "chi={} deg={} eta={} decomp= {}",
            chi_row + 1,
            degree,
            self.eta,
            terms.join(" + ")
        )
    }
}

/// Decompose a class function over the table rows; errors unless every
/// coefficient is a non-negative integer and the combination reconstructs
/// the input exactly.
pub fn decompose(table: &CharacterTable, values: &[Cyc]) -> Result<Decomposition> {
    let mut coeffs = Vec::with_capacity(table.rows.len());
    for r in &table.rows {
        let c = inner_product(&table.classes, table.order(), values, &r.values)?;
        if c < 0 {
            return Err(Error::NotCharacter(format!(
                "negative multiplicity {c} at row {}",
                r.index
            )));
        }
        coeffs.push(c);
    }
    // reconstruction identity, value by value
    let e = lcm(values[0].modulus(), table.exponent());
    for (cls, value) in values.iter().enumerate() {
        let mut acc = Cyc::zero(e);
        for (r, &c) in table.rows.iter().zip(&coeffs) {
            if c != 0 {
                acc = acc.add(&up(&r.values[cls], e).scale(c));
            }
        }
        if !acc.equals(&up(value, e)) {
            return Err(Error::NotCharacter(format!(
                "coefficients do not reconstruct the value at class {cls}"
            )));
        }
    }
    let principal_coeff = coeffs[0];
    let constituents: Vec<(usize, i64)> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &c)| c > 0)
        .map(|(i, &c)| (i, c))
        .collect();
    let eta = constituents.len();
    Ok(Decomposition {
        coeffs,
        principal_coeff,
        constituents,
        eta,
    })
}

/// η(χ) and the multiplicity multiset of χ·conj(χ), for an irreducible row.
pub fn eta_of_row(table: &CharacterTable, row: usize) -> Result<Decomposition> {
    let d = decompose(table, &norm_square(table, row))?;
    if d.principal_coeff != 1 {
        return Err(Error::Diagnostic(format!(
            "[χχ̄, 1] = {} for an irreducible χ",
            d.principal_coeff
        )));
    }
    Ok(d)
}

/// η for an arbitrary class function, with the irreducibility precondition
/// enforced.
pub fn eta_of_values(table: &CharacterTable, values: &[Cyc]) -> Result<Decomposition> {
    let norm = inner_product(&table.classes, table.order(), values, values)?;
    if norm != 1 {
        return Err(Error::NotIrreducible(format!("[χ, χ] = {norm}")));
    }
    let conj: Vec<Cyc> = values.iter().map(|v| v.conj()).collect();
    decompose(table, &product(values, &conj))
}

/// A real non-principal constituent of the decomposition, when one exists.
/// χ·conj(χ) is real, so an odd number of constituents forces at least one
/// to be self-conjugate (and then the group has even order).
pub fn real_constituent(table: &CharacterTable, dec: &Decomposition) -> Option<usize> {
    dec.constituents
        .iter()
        .map(|&(row, _)| row)
        .find(|&row| table.conjugate_row(row) == row)
}

/// Restriction of a class function on G to a materialized subgroup, plus the
/// irreducibility flag [χ_H, χ_H] = 1. Works for any subgroup.
pub fn restrict(
    values_g: &[Cyc],
    classes_g: &Classes,
    sub: &Materialized,
    classes_h: &Classes,
) -> (Vec<Cyc>, bool) {
    let values: Vec<Cyc> = (0..classes_h.count)
        .map(|c| {
            let h = classes_h.rep[c];
            let parent = sub.to_parent[h];
            values_g[classes_g.class_of[parent]].clone()
        })
        .collect();
    let norm = inner_product(classes_h, sub.group.order(), &values, &values)
        .expect("restriction of a character has integral norm");
    (values, norm == 1)
}

/// Clifford-side restriction: requires N normal in G.
pub fn restrict_to_normal(
    g: &Group,
    values_g: &[Cyc],
    classes_g: &Classes,
    n: &Subgroup,
    sub: &Materialized,
    classes_n: &Classes,
) -> Result<(Vec<Cyc>, bool)> {
    if !n.is_normal(g) {
        return Err(Error::NotNormal(format!(
            "restriction flag requested for a non-normal subgroup of {}",
            g.label
        )));
    }
    Ok(restrict(values_g, classes_g, sub, classes_n))
}

/// [χ_H, χ_H] computed directly over the subgroup's elements; cheap
/// reducibility test that needs no class data for H.
pub fn restriction_norm(g_values: &[Cyc], classes_g: &Classes, members: &[usize]) -> Result<i64> {
    let e = g_values[0].modulus();
    let mut acc = Cyc::zero(e);
    for &h in members {
        let v = &g_values[classes_g.class_of[h]];
        acc = acc.add(&v.mul(&v.conj()));
    }
    crate::cyclotomic::exact_integer_quotient(&acc, members.len() as i64, "restriction norm")
}

/// Frobenius induction θ^G for a class function θ on a subgroup H:
/// θ^G(g) = Σ over right-coset representatives x of θ°(x g x⁻¹)
/// (θ° is θ extended by zero; conjugating the summand by members of H does
/// not change its θ-value, so one term per coset Hx suffices).
pub fn induce(theta: &[Cyc], sub: &Materialized, g: &Group, classes_g: &Classes) -> Vec<Cyc> {
    let classes_h = conjugacy_classes(&sub.group);
    let e = lcm(theta[0].modulus(), g.exponent());
    // greedy right transversal of H in G
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for h in 0..sub.group.order() {
            covered[g.mul(sub.to_parent[h], x)] = true;
        }
    }
    (0..classes_g.count)
        .map(|c| {
            let gt = classes_g.rep[c];
            let mut acc = Cyc::zero(e);
            for &x in &reps {
                let y = g.mul(g.mul(x, gt), g.inv(x));
                if let Some(hy) = sub.from_parent[y] {
                    acc = acc.add(&up(&theta[classes_h.class_of[hy]], e));
                }
            }
            acc
        })
        .collect()
}
