//! Cycles on the Schubert basis of `CH(Gr(k,n))` and `Ch(Gr(k,n))`.
//!
//! `σ_Λ` is the singleton cycle. `Sq^2` adds white boxes, products are
//! computed untruncated through [`crate::symfunc`] and then truncated.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{span_rank, BitMatrix, BitVector};
use crate::symfunc::{add_term, terms_json, SchurCombo, Terms};
use crate::tableau::{self, Grassmannian, Shape, Tableau, Truncation, Twist};

pub use crate::symfunc::Ring;

/// A finite combination of Schubert classes.
#[derive(Clone, PartialEq, Eq)]
pub struct Cycle {
    pub ring: Ring,
    pub twist: Twist,
    pub truncation: Truncation,
    terms: Terms,
}

impl Cycle {
    pub fn zero(ring: Ring, twist: Twist, truncation: Truncation) -> Self {
        Cycle { ring, twist, truncation, terms: Terms::new() }
    }

    /// `σ_Λ`.
    pub fn sigma(ring: Ring, twist: Twist, truncation: Truncation, shape: Shape) -> Result<Self> {
        Self::from_terms(ring, twist, truncation, [(shape, BigInt::one())])
    }

    pub fn from_terms(
        ring: Ring,
        twist: Twist,
        truncation: Truncation,
        terms: impl IntoIterator<Item = (Shape, BigInt)>,
    ) -> Result<Self> {
        let mut c = Self::zero(ring, twist, truncation);
        for (s, k) in terms {
            truncation.check(&s)?;
            add_term(&mut c.terms, s, k, ring);
        }
        Ok(c)
    }

    /// Shorthand used in tests and fixtures: `(rows, coeff)` pairs.
    pub fn from_rows(ring: Ring, twist: Twist, truncation: Truncation, terms: &[(&[usize], i64)]) -> Result<Self> {
        let mut v = Vec::new();
        for (r, c) in terms {
            v.push((Shape::new(r.to_vec())?, BigInt::from(*c)));
        }
        Self::from_terms(ring, twist, truncation, v)
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, shape: &Shape) -> BigInt {
        self.terms.get(shape).cloned().unwrap_or_default()
    }

    /// The common degree of all terms, `None` for zero or mixed cycles.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Shape::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn same_context(&self, other: &Cycle) -> Result<()> {
        if self.ring != other.ring || self.twist != other.twist || self.truncation != other.truncation {
            return Err(Error::Incompatible(format!(
                "{:?}/{}/{} vs {:?}/{}/{}",
                self.ring, self.twist, self.truncation, other.ring, other.twist, other.truncation
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cycle) -> Result<Cycle> {
        self.same_context(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            add_term(&mut out.terms, s.clone(), c.clone(), self.ring);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Cycle {
        let mut out = Cycle::zero(self.ring, self.twist, self.truncation);
        for (s, c) in &self.terms {
            add_term(&mut out.terms, s.clone(), c * k, self.ring);
        }
        out
    }

    pub fn with_twist(&self, twist: Twist) -> Cycle {
        Cycle { twist, ..self.clone() }
    }

    /// Reduction mod 2.
    pub fn mod2(&self) -> Cycle {
        let mut out = Cycle::zero(Ring::Mod2, self.twist, self.truncation);
        for (s, c) in &self.terms {
            add_term(&mut out.terms, s.clone(), c.clone(), Ring::Mod2);
        }
        out
    }

    /// The same coefficients read as integers (the `0/1` lift of a mod-2 cycle).
    pub fn lift(&self) -> Cycle {
        Cycle { ring: Ring::Integers, ..self.clone() }
    }

    /// Coefficient vector against an ordered list of shapes.
    pub fn coordinates(&self, basis: &[Shape]) -> Vec<BigInt> {
        basis.iter().map(|s| self.coefficient(s)).collect()
    }

    pub fn to_bits(&self, basis: &[Shape]) -> BitVector {
        let index: HashMap<&Shape, usize> = basis.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut v = BitVector::zeros(basis.len());
        for (s, c) in &self.terms {
            if c.bit(0) {
                v.flip(index[s]);
            }
        }
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ring": self.ring,
            "twist": self.twist,
            "truncation": self.truncation,
            "terms": terms_json(&self.terms),
        })
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = if neg { -c } else { c.clone() };
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "σ{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Admissible shapes of one degree in the canonical order.
pub fn shapes_of_degree(tr: Truncation, degree: usize) -> Vec<Shape> {
    match tr {
        Truncation::Box { k, n } => Grassmannian { k, n }.shapes_of_degree(degree),
        Truncation::Untruncated => Grassmannian { k: degree, n: 2 * degree }.shapes_of_degree(degree),
    }
}

/// Linear extension of `Λ ↦ Σ_{T ∈ A(Λ)} T`; all added shapes get `+1`.
pub fn sq2(c: &Cycle) -> Cycle {
    let mut out = Cycle::zero(c.ring, c.twist, c.truncation);
    for (s, k) in &c.terms {
        let t = Tableau::new(s.clone(), c.twist);
        for a in tableau::add_one(&t, c.truncation).expect("stored shapes are admissible") {
            add_term(&mut out.terms, a.shape, k.clone(), c.ring);
        }
    }
    out
}

fn refines(coarse: Truncation, fine: Truncation) -> bool {
    match (coarse, fine) {
        (_, Truncation::Untruncated) => matches!(coarse, Truncation::Untruncated),
        (Truncation::Untruncated, _) => true,
        (Truncation::Box { k: k0, n: n0 }, Truncation::Box { k, n }) => k <= k0 && n - k <= n0 - k0,
    }
}

/// Drops shapes that are not `tr`-admissible.
pub fn truncate(c: &Cycle, tr: Truncation) -> Result<Cycle> {
    if !refines(c.truncation, tr) {
        return Err(Error::Incompatible(format!("cannot truncate from {} to {}", c.truncation, tr)));
    }
    let mut out = Cycle::zero(c.ring, c.twist, tr);
    for (s, k) in &c.terms {
        if tr.admits(s) {
            add_term(&mut out.terms, s.clone(), k.clone(), c.ring);
        }
    }
    Ok(out)
}

/// `Sq^2` from degree `d` to `d + 1` as a GF(2) matrix.
#[derive(Clone, Debug)]
pub struct Sq2Matrix {
    pub source_degree: usize,
    pub source: Vec<Shape>,
    pub target: Vec<Shape>,
    pub matrix: BitMatrix,
}

impl Sq2Matrix {
    pub fn new(tr: Truncation, twist: Twist, degree: usize) -> Self {
        let source = shapes_of_degree(tr, degree);
        let target = shapes_of_degree(tr, degree + 1);
        let index: HashMap<&Shape, usize> = target.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let cols: Vec<BitVector> = source
            .iter()
            .map(|s| {
                let mut v = BitVector::zeros(target.len());
                for a in tableau::add_one(&Tableau::new(s.clone(), twist), tr).expect("admissible") {
                    v.set(index[&a.shape], true);
                }
                v
            })
            .collect();
        let matrix = BitMatrix::from_columns(target.len(), &cols);
        Sq2Matrix { source_degree: degree, source, target, matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    fn image_columns(&self) -> Vec<BitVector> {
        (0..self.matrix.cols()).map(|c| self.matrix.column(c)).collect()
    }
}

fn incoming(tr: Truncation, twist: Twist, degree: usize) -> Option<Sq2Matrix> {
    (degree > 0).then(|| Sq2Matrix::new(tr, twist, degree - 1))
}

/// Dimension of `Ker(Sq^2)_d / Im(Sq^2)_d` over GF(2).
pub fn e_dimension(tr: Truncation, twist: Twist, degree: usize) -> usize {
    let out = Sq2Matrix::new(tr, twist, degree);
    let ker = out.source.len() - out.rank();
    let im = incoming(tr, twist, degree).map_or(0, |m| m.rank());
    ker - im
}

#[derive(Clone, Debug)]
pub struct KerImSplit {
    pub degree: usize,
    pub ker_dim: usize,
    pub im_basis: Vec<Cycle>,
    pub even_basis: Vec<Shape>,
    pub verified: bool,
}

/// Checks `Ker(Sq^2) = Im(Sq^2) ⊕ span(even tableaux)` in one degree.
pub fn ker_im_split(tr: Truncation, twist: Twist, degree: usize) -> Result<KerImSplit> {
    let out = Sq2Matrix::new(tr, twist, degree);
    let basis = &out.source;
    let ker_dim = basis.len() - out.rank();
    let mut im_basis = Vec::new();
    let mut vectors = Vec::new();
    if let Some(m) = incoming(tr, twist, degree) {
        let cols = m.image_columns();
        for j in m.matrix.independent_columns() {
            let v = &cols[j];
            let terms = v.ones().map(|i| (basis[i].clone(), BigInt::one()));
            im_basis.push(Cycle::from_terms(Ring::Mod2, twist, tr, terms)?);
            vectors.push(v.clone());
        }
    }
    let mut even_basis = Vec::new();
    let mut even_in_kernel = true;
    for (i, s) in basis.iter().enumerate() {
        if tableau::classify(&Tableau::new(s.clone(), twist), tr)?.even {
            even_in_kernel &= out.matrix.column(i).is_zero();
            let mut v = BitVector::zeros(basis.len());
            v.set(i, true);
            vectors.push(v);
            even_basis.push(s.clone());
        }
    }
    let joint = span_rank(basis.len(), &vectors);
    let verified = even_in_kernel && joint == im_basis.len() + even_basis.len() && joint == ker_dim;
    Ok(KerImSplit { degree, ker_dim, im_basis, even_basis, verified })
}

fn eta_indices_of_degree(tr: Truncation, twist: Twist, degree: usize) -> Result<Vec<Shape>> {
    Ok(tableau::eta_indices(tr, twist, Some(degree))?
        .into_iter()
        .filter(|e| e.shape.degree() == degree)
        .map(|e| e.shape)
        .collect())
}

fn even_of_degree(tr: Truncation, twist: Twist, degree: usize) -> Result<Vec<Shape>> {
    let mut out = Vec::new();
    for s in shapes_of_degree(tr, degree) {
        if tableau::classify(&Tableau::new(s.clone(), twist), tr)?.even {
            out.push(s);
        }
    }
    Ok(out)
}

/// GF(2) basis of `Ker(Sq^2)` in degree `d`: even tableaux, then `Sq^2` of
/// the eta indices of degree `d - 1`.
pub fn ker_sq2_basis(tr: Truncation, twist: Twist, degree: usize) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    for s in even_of_degree(tr, twist, degree)? {
        out.push(Cycle::sigma(Ring::Mod2, twist, tr, s)?);
    }
    if degree > 0 {
        for s in eta_indices_of_degree(tr, twist, degree - 1)? {
            out.push(sq2(&Cycle::sigma(Ring::Mod2, twist, tr, s)?));
        }
    }
    Ok(out)
}

/// Integral basis of `Ker(Sq^2 ∘ π)` in degree `d`: even tableaux,
/// `Sq^2_Z` of eta indices of degree `d - 1`, and twice the eta indices of
/// degree `d`.
pub fn ker_sq2_pi_basis(tr: Truncation, twist: Twist, degree: usize) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    for s in even_of_degree(tr, twist, degree)? {
        out.push(Cycle::sigma(Ring::Integers, twist, tr, s)?);
    }
    if degree > 0 {
        for s in eta_indices_of_degree(tr, twist, degree - 1)? {
            out.push(sq2(&Cycle::sigma(Ring::Integers, twist, tr, s)?));
        }
    }
    for s in eta_indices_of_degree(tr, twist, degree)? {
        out.push(Cycle::sigma(Ring::Integers, twist, tr, s)?.scale(&BigInt::from(2)));
    }
    Ok(out)
}

/// Source of the doubling map into `Gr(k,n)`.
pub fn doubling_source(target: Grassmannian) -> Grassmannian {
    // (⌊k/2⌋, n/2 - 1) when k(n-k) is odd, (⌊k/2⌋, ⌊n/2⌋) otherwise; both
    // leave ⌊(n-k)/2⌋ columns
    let (k, n) = (target.k, target.n);
    Grassmannian { k: k / 2, n: k / 2 + (n - k) / 2 }
}

/// `(a_1, .., a_l) ↦ (2a_1, 2a_1, .., 2a_l, 2a_l)`.
pub fn double_shape(s: &Shape) -> Shape {
    Shape::from_rows(&s.rows().iter().flat_map(|&a| [2 * a, 2 * a]).collect::<Vec<_>>())
}

/// The doubling map `γ` on an integral untwisted cycle, landing in `target`.
pub fn doubling(c: &Cycle, target: Truncation) -> Result<Cycle> {
    if c.ring != Ring::Integers || c.twist != Twist::Untwisted {
        return Err(Error::InvalidArgument("doubling takes integral untwisted cycles".into()));
    }
    let terms: Vec<(Shape, BigInt)> = c.terms.iter().map(|(s, k)| (double_shape(s), k.clone())).collect();
    Cycle::from_terms(Ring::Integers, Twist::Untwisted, target, terms)
}

fn num_vars_for(tr: Truncation, a: &Cycle, b: &Cycle) -> usize {
    match tr {
        Truncation::Box { k, n } => n - k,
        Truncation::Untruncated => {
            let width = |c: &Cycle| c.terms.keys().map(Shape::degree).max().unwrap_or(0);
            (width(a) + width(b)).max(1)
        }
    }
}

/// Schubert product, computed untruncated and then truncated. Twists add.
pub fn product(a: &Cycle, b: &Cycle) -> Result<Cycle> {
    if a.ring != b.ring || a.truncation != b.truncation {
        return Err(Error::Incompatible(format!(
            "{:?}/{} vs {:?}/{}",
            a.ring, a.truncation, b.ring, b.truncation
        )));
    }
    let n = num_vars_for(a.truncation, a, b);
    let x = SchurCombo::from_terms(a.ring, n, a.terms.clone());
    let y = SchurCombo::from_terms(b.ring, n, b.terms.clone());
    let z = x.product(&y)?;
    let mut out = Cycle::zero(a.ring, a.twist.compose(b.twist), a.truncation);
    for (s, k) in z.terms {
        if a.truncation.admits(&s) {
            add_term(&mut out.terms, s, k, a.ring);
        }
    }
    Ok(out)
}

/// `σ_{2j}^2 = γ(σ_j) + Sq^2(Σ_{m<j} σ_{4j-1-2m, 2m})` mod 2, untruncated.
pub fn giambelli_identity_check(j: usize) -> Result<bool> {
    if j == 0 {
        return Err(Error::InvalidArgument("j must be positive".into()));
    }
    let tr = Truncation::Untruncated;
    let tw = Twist::Untwisted;
    let s2j = Cycle::sigma(Ring::Mod2, tw, tr, Shape::from_rows(&[2 * j]))?;
    let lhs = product(&s2j, &s2j)?;
    let gamma = doubling(&Cycle::sigma(Ring::Integers, tw, tr, Shape::from_rows(&[j]))?, tr)?.mod2();
    let witness = giambelli_witness(j)?;
    let rhs = gamma.add(&sq2(&witness))?;
    Ok(lhs == rhs)
}

/// `σ_{4j-1} + σ_{4j-3,2} + .. + σ_{2j+1,2j-2}` mod 2.
pub fn giambelli_witness(j: usize) -> Result<Cycle> {
    let terms: Vec<(Shape, BigInt)> = (0..j)
        .map(|m| (Shape::from_rows(&[4 * j - 1 - 2 * m, 2 * m]), BigInt::one()))
        .collect();
    Cycle::from_terms(Ring::Mod2, Twist::Untwisted, Truncation::Untruncated, terms)
}

/// Summary of `Sq^2` ranks in one degree, serialisable for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRanks {
    pub degree: usize,
    pub tableaux: usize,
    pub ker_dim: usize,
    pub im_dim: usize,
    pub e_dim: usize,
    pub even: usize,
}

/// `Sq^2` ranks in every degree of `Gr(k,n)`.
pub fn degree_ranks(g: Grassmannian, twist: Twist) -> Result<Vec<DegreeRanks>> {
    let tr = g.truncation();
    let mut out = Vec::new();
    let mut prev_rank = 0;
    for d in 0..=g.dim() {
        let m = Sq2Matrix::new(tr, twist, d);
        let rank = m.rank();
        let ker_dim = m.source.len() - rank;
        let even = even_of_degree(tr, twist, d)?.len();
        out.push(DegreeRanks {
            degree: d,
            tableaux: m.source.len(),
            ker_dim,
            im_dim: prev_rank,
            e_dim: ker_dim - prev_rank,
            even,
        });
        prev_rank = rank;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::same_lattice;

    fn gr(k: usize, n: usize) -> Truncation {
        Truncation::boxed(k, n).unwrap()
    }

    fn cyc(ring: Ring, twist: Twist, tr: Truncation, terms: &[(&[usize], i64)]) -> Cycle {
        Cycle::from_rows(ring, twist, tr, terms).unwrap()
    }

    fn z(tr: Truncation, terms: &[(&[usize], i64)]) -> Cycle {
        cyc(Ring::Integers, Twist::Untwisted, tr, terms)
    }

    #[test]
    fn sq2_examples() {
        assert_eq!(sq2(&z(gr(2, 4), &[(&[1], 1)])), z(gr(2, 4), &[(&[2], 1), (&[1, 1], 1)]));
        assert!(sq2(&z(gr(2, 4), &[(&[], 1)])).is_zero());
        let t = cyc(Ring::Integers, Twist::Twisted, gr(2, 4), &[(&[], 1)]);
        assert_eq!(sq2(&t), cyc(Ring::Integers, Twist::Twisted, gr(2, 4), &[(&[1], 1)]));
    }

    #[test]
    fn truncate_examples() {
        let u = Truncation::Untruncated;
        assert!(truncate(&z(u, &[(&[3], 1)]), gr(2, 4)).unwrap().is_zero());
        assert_eq!(truncate(&z(u, &[(&[2, 1], 1)]), gr(2, 4)).unwrap(), z(gr(2, 4), &[(&[2, 1], 1)]));
        assert_eq!(
            truncate(&z(u, &[(&[3], 1), (&[2, 1], 1)]), gr(2, 4)).unwrap(),
            z(gr(2, 4), &[(&[2, 1], 1)])
        );
        assert!(truncate(&z(gr(2, 4), &[]), Truncation::Untruncated).is_err());
    }

    #[test]
    fn e_dimension_examples() {
        let dims: Vec<usize> = (0..=4).map(|d| e_dimension(gr(2, 4), Twist::Untwisted, d)).collect();
        assert_eq!(dims, vec![1, 0, 0, 0, 1]);
        let support: Vec<usize> =
            (0..=9).filter(|&d| e_dimension(gr(3, 6), Twist::Untwisted, d) > 0).collect();
        assert_eq!(support, vec![0, 4, 5, 9]);
        assert!((0..=9).all(|d| e_dimension(gr(3, 6), Twist::Twisted, d) <= 1));
        assert!((0..=9).all(|d| e_dimension(gr(3, 6), Twist::Twisted, d) == 0));
    }

    #[test]
    fn ker_im_split_examples() {
        let s = ker_im_split(gr(2, 4), Twist::Untwisted, 4).unwrap();
        assert_eq!(s.even_basis, vec![Shape::from_rows(&[2, 2])]);
        assert!(s.im_basis.is_empty() && s.verified);
        let s = ker_im_split(gr(2, 4), Twist::Untwisted, 2).unwrap();
        assert!(s.even_basis.is_empty() && s.verified);
        assert_eq!(s.im_basis, vec![cyc(Ring::Mod2, Twist::Untwisted, gr(2, 4), &[(&[2], 1), (&[1, 1], 1)])]);
    }

    #[test]
    fn kernel_bases() {
        let m2 = |t: &[(&[usize], i64)]| cyc(Ring::Mod2, Twist::Untwisted, gr(2, 4), t);
        assert_eq!(ker_sq2_basis(gr(2, 4), Twist::Untwisted, 2).unwrap(), vec![m2(&[(&[2], 1), (&[1, 1], 1)])]);
        assert_eq!(ker_sq2_basis(gr(2, 4), Twist::Untwisted, 3).unwrap(), vec![m2(&[(&[2, 1], 1)])]);

        let b = ker_sq2_pi_basis(gr(2, 4), Twist::Untwisted, 2).unwrap();
        let dim_basis = shapes_of_degree(gr(2, 4), 2);
        let coords = |v: &[Cycle]| v.iter().map(|c| c.coordinates(&dim_basis)).collect::<Vec<_>>();
        let paper = [z(gr(2, 4), &[(&[2], 2)]), z(gr(2, 4), &[(&[2], 1), (&[1, 1], 1)])];
        assert!(same_lattice(2, &coords(&b), &coords(&paper)));
        assert_eq!(ker_sq2_pi_basis(gr(2, 4), Twist::Untwisted, 1).unwrap(), vec![z(gr(2, 4), &[(&[1], 2)])]);
        assert_eq!(ker_sq2_pi_basis(gr(2, 4), Twist::Untwisted, 0).unwrap(), vec![z(gr(2, 4), &[(&[], 1)])]);
    }

    #[test]
    fn doubling_examples() {
        let u = Truncation::Untruncated;
        assert_eq!(doubling(&z(u, &[(&[1], 1)]), u).unwrap(), z(u, &[(&[2, 2], 1)]));
        assert_eq!(doubling(&z(u, &[(&[], 1)]), u).unwrap(), z(u, &[(&[], 1)]));
        assert_eq!(doubling_source(Grassmannian { k: 2, n: 4 }), Grassmannian { k: 1, n: 2 });
        assert_eq!(doubling_source(Grassmannian { k: 3, n: 6 }), Grassmannian { k: 1, n: 2 });
        assert_eq!(doubling_source(Grassmannian { k: 4, n: 7 }), Grassmannian { k: 2, n: 3 });
    }

    #[test]
    fn product_examples() {
        let u = Truncation::Untruncated;
        let s1 = z(u, &[(&[1], 1)]);
        assert_eq!(product(&s1, &s1).unwrap(), z(u, &[(&[2], 1), (&[1, 1], 1)]));
        let s2 = z(u, &[(&[2], 1)]);
        assert_eq!(product(&s2, &s2).unwrap(), z(u, &[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)]));
        let p = z(gr(1, 3), &[(&[1], 1)]);
        assert_eq!(product(&p, &p).unwrap(), z(gr(1, 3), &[(&[2], 1)]));
    }

    #[test]
    fn giambelli_small() {
        assert_eq!(
            giambelli_witness(2).unwrap(),
            cyc(Ring::Mod2, Twist::Untwisted, Truncation::Untruncated, &[(&[7], 1), (&[5, 2], 1)])
        );
        for j in 1..=3 {
            assert!(giambelli_identity_check(j).unwrap(), "j = {j}");
        }
    }

    #[test]
    fn display() {
        let c = z(gr(2, 4), &[(&[2], 2), (&[1, 1], -1)]);
        assert_eq!(c.to_string(), "-σ(1,1) + 2σ(2)");
        assert_eq!(z(gr(2, 4), &[]).to_string(), "0");
    }
}
