//! Determinantal Schur functions in generators `x_1..x_n`.
//!
//! `x_Λ = det(x_{Λ_i - i + j})` with `x_0 = 1` and `x_i = 0` outside
//! `[0, n]`. Setting `x_i = e_i` turns `x_Λ` into the Schur polynomial
//! `s_{Λ^T}`. Products go through [`det_expand`] and iterated [`pieri`].

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::tableau::{Grassmannian, Shape};

/// Coefficient ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    #[default]
    Integers,
    Mod2,
}

impl Ring {
    pub fn reduce(self, x: BigInt) -> BigInt {
        match self {
            Ring::Integers => x,
            Ring::Mod2 => x.mod_floor(&BigInt::from(2)),
        }
    }
}

pub type Terms = BTreeMap<Shape, BigInt>;

pub(crate) fn add_term(terms: &mut Terms, key: Shape, coeff: BigInt, ring: Ring) {
    if coeff.is_zero() {
        return;
    }
    let entry = terms.entry(key.clone()).or_insert_with(BigInt::zero);
    *entry = ring.reduce(&*entry + coeff);
    if entry.is_zero() {
        terms.remove(&key);
    }
}

/// JSON view of a coefficient table: `[{"shape": [..], "coeff": c}, ..]`.
/// Coefficients that do not fit an `i64` are written as strings.
pub fn terms_json(terms: &Terms) -> serde_json::Value {
    serde_json::Value::Array(
        terms
            .iter()
            .map(|(s, c)| {
                let coeff = match i64::try_from(c) {
                    Ok(v) => serde_json::Value::from(v),
                    Err(_) => serde_json::Value::from(c.to_string()),
                };
                serde_json::json!({ "shape": s, "coeff": coeff })
            })
            .collect(),
    )
}

fn merge_indices(a: &Shape, b: &Shape) -> Shape {
    let mut v: Vec<usize> = a.rows().iter().chain(b.rows()).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Shape::from_rows(&v)
}

/// A polynomial in the generators. Each monomial `x_{i_1}..x_{i_r}` is keyed
/// by the multiset of its indices, written as a weakly decreasing [`Shape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPoly {
    pub ring: Ring,
    pub terms: Terms,
}

impl GeneratorPoly {
    pub fn zero(ring: Ring) -> Self {
        GeneratorPoly { ring, terms: Terms::new() }
    }

    pub fn one(ring: Ring) -> Self {
        Self::monomial(ring, Shape::empty(), BigInt::one())
    }

    pub fn monomial(ring: Ring, indices: Shape, coeff: BigInt) -> Self {
        let mut p = Self::zero(ring);
        add_term(&mut p.terms, indices, coeff, ring);
        p
    }

    /// `x_i`, with `x_0 = 1`.
    pub fn generator(ring: Ring, i: usize) -> Self {
        if i == 0 {
            Self::one(ring)
        } else {
            Self::monomial(ring, Shape::from_rows(&[i]), BigInt::one())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &GeneratorPoly) {
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), c.clone(), self.ring);
        }
    }

    pub fn add_scaled(&mut self, other: &GeneratorPoly, s: &BigInt) {
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), c * s, self.ring);
        }
    }

    pub fn mul(&self, other: &GeneratorPoly) -> GeneratorPoly {
        let mut out = GeneratorPoly::zero(self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut out.terms, merge_indices(m1, m2), c1 * c2, self.ring);
            }
        }
        out
    }

    /// Substitutes `x_i := value(i)`.
    pub fn evaluate(&self, value: impl Fn(usize) -> BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| m.rows().iter().fold(c.clone(), |acc, &i| acc * value(i)))
            .sum()
    }
}

/// Determinant of a `size x size` matrix of polynomials, expanded along the
/// last row with memoised minors indexed by column subsets.
pub(crate) fn determinant(
    ring: Ring,
    size: usize,
    entry: impl Fn(usize, usize) -> GeneratorPoly,
) -> GeneratorPoly {
    assert!(size < 24, "determinant too large");
    let mut minors: Vec<Option<GeneratorPoly>> = vec![None; 1 << size];
    minors[0] = Some(GeneratorPoly::one(ring));
    for mask in 1usize..(1 << size) {
        let r = mask.count_ones() as usize - 1;
        let mut acc = GeneratorPoly::zero(ring);
        for c in (0..size).filter(|c| mask >> c & 1 == 1) {
            let rest = mask & !(1 << c);
            let Some(minor) = &minors[rest] else { continue };
            if minor.is_zero() {
                continue;
            }
            let e = entry(r, c);
            if e.is_zero() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let sign = if above % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            acc.add_scaled(&e.mul(minor), &sign);
        }
        minors[mask] = Some(acc);
    }
    minors.pop().flatten().expect("full minor")
}

/// `x_Λ` as a polynomial in the generators `x_1..x_n`.
pub fn det_expand(shape: &Shape, n: usize, ring: Ring) -> GeneratorPoly {
    let rows = shape.rows();
    determinant(ring, rows.len(), |r, c| {
        let idx = rows[r] as i64 - r as i64 + c as i64;
        if idx < 0 || idx > n as i64 {
            GeneratorPoly::zero(ring)
        } else {
            GeneratorPoly::generator(ring, idx as usize)
        }
    })
}

/// Shapes `b` in `x_t · x_Λ = Σ x_b`: horizontal strips of size `t` added
/// to `Λ`, with parts above `n` dropped.
pub fn pieri_shapes(t: usize, shape: &Shape, n: usize) -> Vec<Shape> {
    let a = shape.rows();
    let l = a.len();
    let mut out = Vec::new();
    let mut b = vec![0usize; l + 1];
    fn go(i: usize, rem: usize, a: &[usize], n: usize, b: &mut Vec<usize>, out: &mut Vec<Shape>) {
        let l = a.len();
        if i == l + 1 {
            if rem == 0 {
                out.push(Shape::from_rows(b));
            }
            return;
        }
        let lo = if i < l { a[i] } else { 0 };
        let hi = if i == 0 { n.max(lo) } else { a[i - 1] };
        // boxes that can still go into later rows
        let later: usize = (i + 1..=l).map(|j| a[j - 1] - if j < l { a[j] } else { 0 }).sum();
        for v in lo..=hi.min(lo + rem) {
            if rem - (v - lo) > later {
                continue;
            }
            b[i] = v;
            go(i + 1, rem - (v - lo), a, n, b, out);
        }
    }
    if a.first().copied().unwrap_or(0) > n {
        return out;
    }
    go(0, t, a, n, &mut b, &mut out);
    out.retain(|s| s.row(1) <= n);
    out.sort();
    out
}

/// A combination of `x_Λ` over a ring, with `n` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurCombo {
    pub ring: Ring,
    pub num_vars: usize,
    pub terms: Terms,
}

impl SchurCombo {
    pub fn zero(ring: Ring, num_vars: usize) -> Self {
        SchurCombo { ring, num_vars, terms: Terms::new() }
    }

    /// `x_Λ`, or zero when a part exceeds `n`.
    pub fn basis(ring: Ring, num_vars: usize, shape: Shape) -> Self {
        let mut c = Self::zero(ring, num_vars);
        if shape.row(1) <= num_vars {
            add_term(&mut c.terms, shape, BigInt::one(), ring);
        }
        c
    }

    pub fn from_terms(ring: Ring, num_vars: usize, terms: impl IntoIterator<Item = (Shape, BigInt)>) -> Self {
        let mut c = Self::zero(ring, num_vars);
        for (s, k) in terms {
            if s.row(1) <= num_vars {
                add_term(&mut c.terms, s, k, ring);
            }
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, shape: &Shape) -> BigInt {
        self.terms.get(shape).cloned().unwrap_or_default()
    }

    fn check_compatible(&self, other: &SchurCombo) -> Result<()> {
        if self.ring != other.ring || self.num_vars != other.num_vars {
            return Err(Error::Incompatible(format!(
                "{:?}/{} vs {:?}/{}",
                self.ring, self.num_vars, other.ring, other.num_vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurCombo) -> Result<SchurCombo> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            add_term(&mut out.terms, s.clone(), c.clone(), self.ring);
        }
        Ok(out)
    }

    /// Multiplication by the generator `x_t`.
    pub fn mul_generator(&self, t: usize) -> SchurCombo {
        let mut out = SchurCombo::zero(self.ring, self.num_vars);
        if t > self.num_vars {
            return out;
        }
        for (s, c) in &self.terms {
            for b in pieri_shapes(t, s, self.num_vars) {
                add_term(&mut out.terms, b, c.clone(), self.ring);
            }
        }
        out
    }

    fn mul_monomial(&self, indices: &Shape) -> SchurCombo {
        indices.rows().iter().fold(self.clone(), |acc, &t| acc.mul_generator(t))
    }

    /// Rewrites a generator polynomial in the `x_Λ` basis.
    pub fn from_generator_poly(poly: &GeneratorPoly, num_vars: usize) -> SchurCombo {
        let unit = SchurCombo::basis(poly.ring, num_vars, Shape::empty());
        let mut out = SchurCombo::zero(poly.ring, num_vars);
        for (m, c) in &poly.terms {
            for (s, k) in unit.mul_monomial(m).terms {
                add_term(&mut out.terms, s, k * c, poly.ring);
            }
        }
        out
    }

    /// The polynomial in `x_1..x_n` this combination stands for.
    pub fn to_generator_poly(&self) -> GeneratorPoly {
        let mut out = GeneratorPoly::zero(self.ring);
        for (s, c) in &self.terms {
            out.add_scaled(&det_expand(s, self.num_vars, self.ring), c);
        }
        out
    }

    pub fn product(&self, other: &SchurCombo) -> Result<SchurCombo> {
        self.check_compatible(other)?;
        let mut out = SchurCombo::zero(self.ring, self.num_vars);
        for (s, c) in &self.terms {
            let poly = det_expand(s, self.num_vars, self.ring);
            for (m, k) in &poly.terms {
                let coeff = c * k;
                for (b, v) in other.mul_monomial(m).terms {
                    add_term(&mut out.terms, b, v * &coeff, self.ring);
                }
            }
        }
        Ok(out)
    }
}

/// `x_t · x_Λ` in the Schur basis.
pub fn pieri(t: usize, shape: &Shape, num_vars: usize, ring: Ring) -> SchurCombo {
    SchurCombo::basis(ring, num_vars, shape.clone()).mul_generator(t)
}

/// Littlewood-Richardson coefficient `c^Λ_{S1,S2}`.
pub fn lr_coefficient(s1: &Shape, s2: &Shape, target: &Shape) -> BigInt {
    if s1.degree() + s2.degree() != target.degree() {
        return BigInt::zero();
    }
    let n = target.row(1).max(1);
    let a = SchurCombo::basis(Ring::Integers, n, s1.clone());
    let b = SchurCombo::basis(Ring::Integers, n, s2.clone());
    a.product(&b).expect("same context").coefficient(target)
}

/// `Sq^2` on one generator: `(i+1) x_{i+1} + x_1 x_i`, with `x_{n+1} = 0`.
fn sq2_generator(i: usize, n: usize) -> GeneratorPoly {
    let ring = Ring::Mod2;
    let mut p = GeneratorPoly::monomial(ring, merge_indices(&Shape::from_rows(&[1]), &Shape::from_rows(&[i])), BigInt::one());
    if i < n {
        p.add_assign(&GeneratorPoly::monomial(ring, Shape::from_rows(&[i + 1]), BigInt::from(i + 1)));
    }
    p
}

/// The `Sq^2` derivation applied to a mod-2 generator polynomial.
pub fn sq2_derivation(poly: &GeneratorPoly, n: usize) -> Result<GeneratorPoly> {
    if poly.ring != Ring::Mod2 {
        return Err(Error::RequiresMod2);
    }
    let mut out = GeneratorPoly::zero(Ring::Mod2);
    for (m, c) in &poly.terms {
        let idx = m.rows();
        for j in 0..idx.len() {
            let rest: Vec<usize> = idx.iter().enumerate().filter(|&(p, _)| p != j).map(|(_, &v)| v).collect();
            let rest = GeneratorPoly::monomial(Ring::Mod2, Shape::from_rows(&rest), c.clone());
            out.add_assign(&rest.mul(&sq2_generator(idx[j], n)));
        }
    }
    Ok(out)
}

/// `Sq^2` on a mod-2 combination: expand, differentiate, re-express.
pub fn sq2_poly(c: &SchurCombo) -> Result<SchurCombo> {
    if c.ring != Ring::Mod2 {
        return Err(Error::RequiresMod2);
    }
    let d = sq2_derivation(&c.to_generator_poly(), c.num_vars)?;
    Ok(SchurCombo::from_generator_poly(&d, c.num_vars))
}

/// `Σ (a_i - i + 1) x_{Λ + e_i} + l · x_{Λ,1}` reduced mod 2.
pub fn sq2_closed_form(shape: &Shape, num_vars: usize) -> SchurCombo {
    let a = shape.rows();
    let l = a.len();
    let mut out = SchurCombo::zero(Ring::Mod2, num_vars);
    for i in 1..=l {
        // a_i - i + 1 ≡ a_i + i + 1 (mod 2)
        if (a[i - 1] + i + 1) % 2 == 1 && (i == 1 || a[i - 2] > a[i - 1]) {
            let mut b = a.to_vec();
            b[i - 1] += 1;
            if b[0] <= num_vars {
                add_term(&mut out.terms, Shape::from_rows(&b), BigInt::one(), Ring::Mod2);
            }
        }
    }
    if l % 2 == 1 && num_vars >= 1 {
        let mut b = a.to_vec();
        b.push(1);
        add_term(&mut out.terms, Shape::from_rows(&b), BigInt::one(), Ring::Mod2);
    }
    out
}

/// Partitions of `degree` with parts at most `n`, in the canonical order.
pub fn partitions_with_parts_at_most(degree: usize, n: usize) -> Vec<Shape> {
    Grassmannian { k: degree, n: degree + n }.shapes_of_degree(degree)
}

fn sq2_matrix_poly(n: usize, degree: usize) -> (Vec<Shape>, Vec<Shape>, BitMatrix) {
    let src = partitions_with_parts_at_most(degree, n);
    let dst = partitions_with_parts_at_most(degree + 1, n);
    let index: HashMap<&Shape, usize> = dst.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let cols: Vec<BitVector> = src
        .iter()
        .map(|s| {
            let mut v = BitVector::zeros(dst.len());
            for t in sq2_closed_form(s, n).terms.keys() {
                v.flip(index[t]);
            }
            v
        })
        .collect();
    let m = BitMatrix::from_columns(dst.len(), &cols);
    (src, dst, m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolySplit {
    pub ker_dim: usize,
    pub im_dim: usize,
    pub completely_even_count: usize,
    pub verified: bool,
}

/// Checks `Ker(Sq^2) = Im(Sq^2) ⊕ N` in one degree of `Z/2[x_1..x_n]`.
pub fn ker_im_split_poly(n: usize, degree: usize) -> PolySplit {
    let (basis, _, out) = sq2_matrix_poly(n, degree);
    let ker_dim = basis.len() - out.rank();
    let incoming: Vec<BitVector> = if degree == 0 {
        Vec::new()
    } else {
        let (_, _, m) = sq2_matrix_poly(n, degree - 1);
        (0..m.cols()).map(|c| m.column(c)).collect()
    };
    let im_dim = crate::gf2::span_rank(basis.len(), &incoming);
    let even: Vec<usize> = (0..basis.len()).filter(|&i| basis[i].is_completely_even()).collect();
    let even_in_kernel = even.iter().all(|&i| out.column(i).is_zero());
    let mut all = incoming;
    for &i in &even {
        let mut v = BitVector::zeros(basis.len());
        v.set(i, true);
        all.push(v);
    }
    let joint = crate::gf2::span_rank(basis.len(), &all);
    let verified = even_in_kernel && joint == im_dim + even.len() && ker_dim == joint;
    PolySplit { ker_dim, im_dim, completely_even_count: even.len(), verified }
}

/// `f(t) = 1 - a_1 t + a_2 t^2 - ...`, stored by its unsigned `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSeries {
    coeffs: Vec<BigInt>,
}

impl CoeffSeries {
    /// From `a_1, .., a_m`; `a_0 = 1` is implicit.
    pub fn new(tail: impl IntoIterator<Item = BigInt>) -> Self {
        let mut coeffs = vec![BigInt::one()];
        coeffs.extend(tail);
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CoeffSeries { coeffs }
    }

    pub fn one() -> Self {
        Self::new([])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `a_i`, zero outside `[0, degree]`.
    pub fn a(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Coefficient of `t^i` in `f(t)`.
    pub fn signed(&self, i: usize) -> BigInt {
        let a = self.a(i);
        if i % 2 == 0 {
            a
        } else {
            -a
        }
    }

    /// `f · g` as another series in the same convention.
    pub fn mul(&self, other: &CoeffSeries) -> CoeffSeries {
        let deg = self.degree() + other.degree();
        // signs cancel: c_m = Σ a_i b_{m-i}
        CoeffSeries::new((1..=deg).map(|m| (0..=m).map(|i| self.a(i) * other.a(m - i)).sum::<BigInt>()))
    }

    /// Coefficients of `1/f(t)` up to `t^m`.
    pub fn inverse_series(&self, m: usize) -> Vec<BigInt> {
        let mut inv = vec![BigInt::one()];
        for j in 1..=m {
            let v: BigInt = (1..=j).map(|i| -self.signed(i) * &inv[j - i]).sum();
            inv.push(v);
        }
        inv
    }

    /// `a_Λ`, the determinant of `a_{Λ_i - i + j}`.
    pub fn schur(&self, shape: &Shape) -> BigInt {
        det_expand(shape, self.degree(), Ring::Integers).evaluate(|i| self.a(i))
    }

    /// `a_{1^i}`.
    pub fn column(&self, i: usize) -> BigInt {
        self.schur(&Shape::from_rows(&vec![1; i]))
    }
}

/// The four inversion identities relating `f`, `g` and `h = f g`, checked
/// in every degree up to `m`.
pub fn inversion_identities(f: &CoeffSeries, g: &CoeffSeries, m: usize) -> bool {
    let h = f.mul(g);
    let alt = |i: usize| if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let fcol: Vec<BigInt> = (0..=m).map(|i| f.column(i)).collect();
    let gcol: Vec<BigInt> = (0..=m).map(|i| g.column(i)).collect();
    let hcol: Vec<BigInt> = (0..=m).map(|i| h.column(i)).collect();
    (0..=m).all(|p| {
        let s1: BigInt = (0..=p).map(|i| alt(i) * &gcol[i] * h.a(p - i)).sum();
        let s2: BigInt = (0..=p).map(|i| alt(i) * &fcol[i] * h.a(p - i)).sum();
        let s3: BigInt = (0..=p).map(|i| alt(i) * g.a(i) * &hcol[p - i]).sum();
        let s4: BigInt = (0..=p).map(|i| alt(i) * f.a(i) * &hcol[p - i]).sum();
        s1 == f.a(p) && s2 == g.a(p) && s3 == fcol[p] && s4 == gcol[p]
    })
}

/// Shapes contained in `outer`.
pub fn subshapes(outer: &Shape) -> Vec<Shape> {
    let mut out = Vec::new();
    fn go(i: usize, outer: &[usize], cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        out.push(Shape::from_rows(cur));
        if i == outer.len() {
            return;
        }
        for v in 1..=outer[i].min(cap) {
            cur.push(v);
            go(i + 1, outer, v, cur, out);
            cur.pop();
        }
    }
    go(0, outer.rows(), usize::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Checks the LR expansion `c_Λ = Σ c^Λ_{S1,S2} a_{S1} b_{S2}` for `h = f g`
/// with `f` of degree `k` and `g` of degree `n - k` in free coefficients.
///
/// Besides the polynomial identity this checks its support: every nonzero
/// term has `S1, S2 ≤ Λ`, and `a_{S1}` vanishes exactly when `(S1)_1 > k`
/// (resp. `b_{S2}` when `(S2)_1 > n - k`).
pub fn lr_support_check(shape: &Shape, k: usize, n: usize) -> Result<bool> {
    let g = Grassmannian::new(k, n)?;
    let m = g.n - g.k;
    let ring = Ring::Integers;
    // a_i is the generator i, b_j the generator k + j
    let a_gen = |i: usize| if i <= k { GeneratorPoly::generator(ring, i) } else { GeneratorPoly::zero(ring) };
    let b_gen = |j: usize| match j {
        0 => GeneratorPoly::one(ring),
        j if j <= m => GeneratorPoly::generator(ring, k + j),
        _ => GeneratorPoly::zero(ring),
    };
    let c_gen = |i: usize| {
        let mut p = GeneratorPoly::zero(ring);
        for j in 0..=i {
            p.add_assign(&a_gen(j).mul(&b_gen(i - j)));
        }
        p
    };
    let det_of = |s: &Shape, gen: &dyn Fn(usize) -> GeneratorPoly| {
        let rows = s.rows();
        determinant(ring, rows.len(), |r, c| {
            let idx = rows[r] as i64 - r as i64 + c as i64;
            if idx < 0 {
                GeneratorPoly::zero(ring)
            } else {
                gen(idx as usize)
            }
        })
    };

    let lhs = det_of(shape, &c_gen);
    let size = shape.degree();
    let mut rhs = GeneratorPoly::zero(ring);
    let mut ok = true;
    for d1 in 0..=size {
        for s1 in partitions_with_parts_at_most(d1, d1) {
            let a_s1 = det_of(&s1, &a_gen);
            ok &= a_s1.is_zero() == (s1.row(1) > k);
            for s2 in partitions_with_parts_at_most(size - d1, size - d1) {
                let lr = lr_coefficient(&s1, &s2, shape);
                if lr.is_zero() {
                    continue;
                }
                ok &= !lr.is_negative() && s1.is_contained_in(shape) && s2.is_contained_in(shape);
                let b_s2 = det_of(&s2, &b_gen);
                ok &= b_s2.is_zero() == (s2.row(1) > m);
                rhs.add_scaled(&a_s1.mul(&b_s2), &lr);
            }
        }
    }
    Ok(ok && lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(r: &[usize]) -> Shape {
        Shape::from_rows(r)
    }

    fn combo(ring: Ring, n: usize, terms: &[(&[usize], i64)]) -> SchurCombo {
        SchurCombo::from_terms(ring, n, terms.iter().map(|(s, c)| (sh(s), BigInt::from(*c))))
    }

    fn poly(terms: &[(&[usize], i64)]) -> GeneratorPoly {
        let mut p = GeneratorPoly::zero(Ring::Integers);
        for (m, c) in terms {
            add_term(&mut p.terms, sh(m), BigInt::from(*c), Ring::Integers);
        }
        p
    }

    #[test]
    fn det_expand_small() {
        assert_eq!(det_expand(&sh(&[1, 1]), 4, Ring::Integers), poly(&[(&[1, 1], 1), (&[2], -1)]));
        assert_eq!(det_expand(&sh(&[3]), 4, Ring::Integers), poly(&[(&[3], 1)]));
        assert_eq!(det_expand(&sh(&[2, 1]), 4, Ring::Integers), poly(&[(&[2, 1], 1), (&[3], -1)]));
        assert_eq!(det_expand(&Shape::empty(), 4, Ring::Integers), poly(&[(&[], 1)]));
    }

    #[test]
    fn pieri_small() {
        assert_eq!(pieri(1, &sh(&[1]), 3, Ring::Integers), combo(Ring::Integers, 3, &[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(pieri(0, &sh(&[2, 1]), 3, Ring::Integers), combo(Ring::Integers, 3, &[(&[2, 1], 1)]));
        assert_eq!(
            pieri(2, &sh(&[2]), 4, Ring::Integers),
            combo(Ring::Integers, 4, &[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)])
        );
        assert_eq!(pieri(2, &sh(&[2]), 2, Ring::Integers), combo(Ring::Integers, 2, &[(&[2, 2], 1)]));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&sh(&[1]), &sh(&[1]), &sh(&[2])), BigInt::from(1));
        assert_eq!(lr_coefficient(&sh(&[2, 1]), &sh(&[2, 1]), &sh(&[3, 2, 1])), BigInt::from(2));
        assert_eq!(lr_coefficient(&Shape::empty(), &sh(&[2, 1]), &sh(&[2, 1])), BigInt::from(1));
        assert_eq!(lr_coefficient(&Shape::empty(), &sh(&[2, 1]), &sh(&[3])), BigInt::from(0));
    }

    #[test]
    fn sq2_examples() {
        let x1 = combo(Ring::Mod2, 4, &[(&[1], 1)]);
        assert_eq!(sq2_poly(&x1).unwrap(), combo(Ring::Mod2, 4, &[(&[2], 1), (&[1, 1], 1)]));
        // top generator: (n+1) x_{n+1} is dropped
        let x3 = combo(Ring::Mod2, 3, &[(&[3], 1)]);
        let expect = SchurCombo::from_generator_poly(
            &GeneratorPoly::monomial(Ring::Mod2, sh(&[3, 1]), BigInt::one()),
            3,
        );
        assert_eq!(sq2_poly(&x3).unwrap(), expect);
        assert!(sq2_poly(&combo(Ring::Mod2, 3, &[(&[], 1)])).unwrap().is_zero());
        assert_eq!(sq2_poly(&combo(Ring::Integers, 3, &[(&[1], 1)])), Err(Error::RequiresMod2));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(sq2_closed_form(&sh(&[3]), 4), combo(Ring::Mod2, 4, &[(&[4], 1), (&[3, 1], 1)]));
        assert_eq!(sq2_closed_form(&sh(&[1, 1]), 4), combo(Ring::Mod2, 4, &[(&[2, 1], 1)]));
        assert!(sq2_closed_form(&Shape::empty(), 4).is_zero());
    }

    #[test]
    fn closed_form_matches_derivation() {
        for n in 1..=4 {
            for d in 0..=7 {
                for s in partitions_with_parts_at_most(d, n) {
                    let x = SchurCombo::basis(Ring::Mod2, n, s.clone());
                    assert_eq!(sq2_closed_form(&s, n), sq2_poly(&x).unwrap(), "{s} n={n}");
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        let s = ker_im_split_poly(2, 4);
        assert_eq!(s.completely_even_count, 1);
        assert!(s.verified);
        let s = ker_im_split_poly(3, 2);
        assert_eq!(s.completely_even_count, 0);
        assert_eq!(s.ker_dim, s.im_dim);
        assert!(s.verified);
    }

    #[test]
    fn series_inverse_matches_columns() {
        let f = CoeffSeries::new([3, -2, 5].map(BigInt::from));
        let inv = f.inverse_series(7);
        for (i, v) in inv.iter().enumerate() {
            assert_eq!(&f.column(i), v, "degree {i}");
        }
    }

    #[test]
    fn inversion_examples() {
        assert!(inversion_identities(&CoeffSeries::one(), &CoeffSeries::one(), 4));
        let f = CoeffSeries::new([BigInt::from(7)]);
        let g = CoeffSeries::new([BigInt::from(-4)]);
        assert!(inversion_identities(&f, &g, 1));
        let h = f.mul(&g);
        assert_eq!(g.column(0) * h.a(1) - g.column(1) * h.a(0), f.a(1));
    }

    #[test]
    fn lr_support_examples() {
        assert!(lr_support_check(&sh(&[1]), 1, 2).unwrap());
        assert!(lr_support_check(&sh(&[1, 1]), 1, 2).unwrap());
        assert!(lr_support_check(&sh(&[2, 1]), 2, 4).unwrap());
        assert!(lr_support_check(&sh(&[1]), 3, 2).is_err());
    }

    #[test]
    fn subshapes_of_21() {
        assert_eq!(subshapes(&sh(&[2, 1])), vec![sh(&[]), sh(&[1]), sh(&[1, 1]), sh(&[2]), sh(&[2, 1])]);
    }
}
