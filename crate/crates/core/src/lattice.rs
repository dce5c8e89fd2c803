//! Integer lattices given by generating sets, compared through their
//! row-style Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Hermite normal form of the lattice spanned by `generators` (all of length
/// `dim`).
///
/// The result is the unique basis in row echelon form where each pivot is
/// positive and every entry above a pivot lies in `[0, pivot)`. Zero rows are
/// dropped, so the number of rows is the lattice rank.
pub fn hermite_normal_form(dim: usize, generators: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = generators
        .iter()
        .inspect(|g| assert_eq!(g.len(), dim, "generator length mismatch"))
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();

    for c in 0..dim {
        // Euclid on column c among the rows not yet used as pivots.
        loop {
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let best = *nonzero
                .iter()
                .min_by(|&&a, &&b| rows[a][c].abs().cmp(&rows[b][c].abs()))
                .expect("nonempty");
            let pivot_row = rows[best].clone();
            for &i in &nonzero {
                if i == best {
                    continue;
                }
                let q = rows[i][c].div_floor(&pivot_row[c]);
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
            }
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            let mut row = rows.swap_remove(i);
            if row[c].is_negative() {
                row.iter_mut().for_each(|x| *x = -x.clone());
            }
            basis.push(row);
            pivot_cols.push(c);
        }
    }
    debug_assert!(rows.iter().all(|r| r.iter().all(Zero::is_zero)));

    // Reduce entries above each pivot.
    for (j, &c) in pivot_cols.iter().enumerate() {
        let pivot_row = basis[j].clone();
        for row in basis.iter_mut().take(j) {
            let q = row[c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
            }
        }
    }
    basis
}

/// Whether two generating sets span the same sublattice of `Z^dim`.
pub fn same_lattice(dim: usize, a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    hermite_normal_form(dim, a) == hermite_normal_form(dim, b)
}

pub fn lattice_rank(dim: usize, generators: &[Vec<BigInt>]) -> usize {
    hermite_normal_form(dim, generators).len()
}

/// Index `[Z^dim : L]` of a full-rank lattice, `None` when the rank is short.
pub fn lattice_index(dim: usize, generators: &[Vec<BigInt>]) -> Option<BigInt> {
    let h = hermite_normal_form(dim, generators);
    if h.len() < dim {
        return None;
    }
    Some(h.iter().enumerate().map(|(i, r)| r[i].clone()).product())
}

/// Whether `v` lies in the lattice whose Hermite normal form is `hnf`.
pub fn contains(hnf: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for row in hnf {
        let c = row.iter().position(|x| !x.is_zero()).expect("hnf rows are nonzero");
        if v[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, r) = v[c].div_rem(&row[c]);
        if !r.is_zero() {
            return false;
        }
        for (x, p) in v.iter_mut().zip(row) {
            *x -= &q * p;
        }
    }
    v.iter().all(Zero::is_zero)
}
