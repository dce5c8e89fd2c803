//! The mod-2 Chow ring of the complete flag variety `Fl(n)` as the
//! coinvariant algebra `Z/2[x_1..x_n] / (symmetric functions)`.
//!
//! Classes are stored on the staircase basis `x^α`, `α_i ≤ n - i`, reached by
//! rewriting with `h_{n-i+1}(x_1..x_i) = 0`.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{span_rank, BitMatrix, BitVector};

pub type Exponent = Vec<u8>;

/// A class in the coinvariant algebra, as a set of staircase monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlagClass {
    pub n: usize,
    terms: BTreeSet<Exponent>,
}

fn xor_insert(set: &mut BTreeSet<Exponent>, m: Exponent) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

impl FlagClass {
    pub fn zero(n: usize) -> Self {
        FlagClass { n, terms: BTreeSet::new() }
    }

    pub fn one(n: usize) -> Self {
        normal_form(n, [vec![0; n]])
    }

    /// `x_i`, 1-based.
    pub fn x(n: usize, i: usize) -> Self {
        let mut e = vec![0u8; n];
        e[i - 1] = 1;
        normal_form(n, [e])
    }

    pub fn monomial(n: usize, alpha: &[u8]) -> Self {
        normal_form(n, [alpha.to_vec()])
    }

    pub fn terms(&self) -> &BTreeSet<Exponent> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of the terms, `None` for zero or mixed classes.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.iter().map(|a| degree_of(a));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &FlagClass) -> FlagClass {
        assert_eq!(self.n, other.n, "flag classes of different n");
        let mut out = self.clone();
        for m in &other.terms {
            xor_insert(&mut out.terms, m.clone());
        }
        out
    }

    pub fn mul(&self, other: &FlagClass) -> FlagClass {
        assert_eq!(self.n, other.n, "flag classes of different n");
        let mut raw = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                xor_insert(&mut raw, a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        normal_form(self.n, raw)
    }

    pub fn to_bits(&self, basis: &[Exponent]) -> BitVector {
        let mut v = BitVector::zeros(basis.len());
        for m in &self.terms {
            let i = basis.binary_search(m).expect("term lies in the basis");
            v.set(i, true);
        }
        v
    }
}

impl fmt::Display for FlagClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mons: Vec<String> = self
            .terms
            .iter()
            .map(|a| {
                let parts: Vec<String> = a
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                    .collect();
                if parts.is_empty() {
                    "1".into()
                } else {
                    parts.join("")
                }
            })
            .collect();
        write!(f, "{}", mons.join(" + "))
    }
}

impl fmt::Debug for FlagClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn degree_of(a: &[u8]) -> usize {
    a.iter().map(|&e| e as usize).sum()
}

/// Top degree `n(n-1)/2`.
pub fn top_degree(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Exponent vectors of total degree `d` in the first `vars` of `n` variables.
fn monomials(n: usize, vars: usize, d: usize, bound: impl Fn(usize) -> usize + Copy) -> Vec<Exponent> {
    fn rec(i: usize, vars: usize, left: usize, cur: &mut Exponent, bound: &dyn Fn(usize) -> usize, out: &mut Vec<Exponent>) {
        if i == vars {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left.min(bound(i)) {
            cur[i] = e as u8;
            rec(i + 1, vars, left - e, cur, bound, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, vars, d, &mut vec![0; n], &bound, &mut out);
    out
}

/// Staircase monomials of degree `d`, sorted.
pub fn staircase_basis(n: usize, d: usize) -> Vec<Exponent> {
    let mut v = monomials(n, n, d, |i| n - 1 - i);
    v.sort();
    v
}

thread_local! {
    static CACHE: RefCell<HashMap<(usize, Exponent), Vec<Exponent>>> = RefCell::new(HashMap::new());
}

fn reduce_monomial(n: usize, alpha: &Exponent) -> Vec<Exponent> {
    if degree_of(alpha) > top_degree(n) {
        return Vec::new();
    }
    // largest i with α_i > n - i (0-based: α_i > n - 1 - i)
    let Some(i) = (0..n).rev().find(|&i| alpha[i] as usize > n - 1 - i) else {
        return vec![alpha.clone()];
    };
    let key = (n, alpha.clone());
    if let Some(v) = CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    // x_i^m = Σ_{j<m} x_i^j h_{m-j}(x_1..x_{i-1}) with m = n - i (0-based i)
    let m = n - i;
    let e = alpha[i] as usize;
    let mut acc = BTreeSet::new();
    for j in 0..m {
        for beta in monomials(n, i, m - j, |_| usize::MAX) {
            let mut next = alpha.clone();
            next[i] = (e - m + j) as u8;
            for (x, b) in next.iter_mut().zip(&beta) {
                *x += b;
            }
            for r in reduce_monomial(n, &next) {
                xor_insert(&mut acc, r);
            }
        }
    }
    let out: Vec<Exponent> = acc.into_iter().collect();
    CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// Reduction of a mod-2 polynomial, given by its monomials (repeats cancel),
/// to the staircase basis.
pub fn normal_form(n: usize, monomials: impl IntoIterator<Item = Exponent>) -> FlagClass {
    let mut out = FlagClass::zero(n);
    for m in monomials {
        assert_eq!(m.len(), n, "exponent vector length");
        for r in reduce_monomial(n, &m) {
            xor_insert(&mut out.terms, r);
        }
    }
    out
}

/// `Sq^2` as the derivation with `Sq^2(x_i) = x_i^2`.
pub fn sq2_flag(c: &FlagClass) -> FlagClass {
    let mut raw = BTreeSet::new();
    for a in &c.terms {
        for i in 0..c.n {
            if a[i] % 2 == 1 {
                let mut b = a.clone();
                b[i] += 1;
                xor_insert(&mut raw, b);
            }
        }
    }
    normal_form(c.n, raw)
}

/// `h_i(x_1..x_j)` in the coinvariant algebra of `Fl(n)`.
pub fn complete_homog(i: usize, j: usize, n: usize) -> Result<FlagClass> {
    if j > n {
        return Err(Error::InvalidArgument(format!("h_{i} in {j} of {n} variables")));
    }
    if i > top_degree(n) {
        return Ok(FlagClass::zero(n));
    }
    Ok(normal_form(n, monomials(n, j, i, |_| usize::MAX)))
}

fn sq2_matrix(n: usize, d: usize) -> (Vec<Exponent>, Vec<Exponent>, BitMatrix) {
    let source = staircase_basis(n, d);
    let target = staircase_basis(n, d + 1);
    let cols: Vec<BitVector> = source
        .iter()
        .map(|a| sq2_flag(&FlagClass { n, terms: [a.clone()].into() }).to_bits(&target))
        .collect();
    let m = BitMatrix::from_columns(target.len(), &cols);
    (source, target, m)
}

/// Some `u` with `Sq^2(u) = target`, if one exists.
pub fn solve_sq2(target: &FlagClass) -> Result<Option<FlagClass>> {
    let n = target.n;
    if target.is_zero() {
        return Ok(Some(FlagClass::zero(n)));
    }
    let d = target.degree().ok_or_else(|| Error::InvalidArgument(format!("{target} is not homogeneous")))?;
    if d == 0 {
        return Ok(None);
    }
    let (source, tgt, m) = sq2_matrix(n, d - 1);
    Ok(m.solve(&target.to_bits(&tgt)).map(|x| FlagClass { n, terms: x.ones().map(|i| source[i].clone()).collect() }))
}

/// Degree of the generator `T_a`.
pub fn t_degree(n: usize, a: usize) -> usize {
    if n % 2 == 0 && 2 * a == n {
        n - 1
    } else {
        4 * a - 1
    }
}

/// `T_a = h_{2a}(x_1..x_{n-2a}) h_{2a-1}(x_1..x_{n-2a+1}) + u` with
/// `Sq^2(u) = h_{2a}(x_1..x_{n-2a})^2`, and `T_{n/2} = x_1^{n-1}`.
pub fn t_class(n: usize, a: usize) -> Result<FlagClass> {
    if a == 0 || 2 * a > n {
        return Err(Error::InvalidArgument(format!("T_{a} needs 1 <= a <= {}", n / 2)));
    }
    let t = if 2 * a == n {
        let mut e = vec![0u8; n];
        e[0] = (n - 1) as u8;
        FlagClass::monomial(n, &e)
    } else {
        let h = complete_homog(2 * a, n - 2 * a, n)?;
        let h1 = complete_homog(2 * a - 1, n - 2 * a + 1, n)?;
        let u = solve_sq2(&h.mul(&h))?.ok_or(Error::NoSolution(4 * a - 1))?;
        h.mul(&h1).add(&u)
    };
    if !sq2_flag(&t).is_zero() {
        return Err(Error::NoSolution(t_degree(n, a)));
    }
    Ok(t)
}

/// Ranks of `Sq^2` leaving each degree `0..=top`.
fn sq2_ranks(n: usize) -> Vec<(usize, usize)> {
    (0..=top_degree(n))
        .map(|d| {
            let (source, _, m) = sq2_matrix(n, d);
            (source.len(), m.rank())
        })
        .collect()
}

/// `dim Ker(Sq^2)_d / Im(Sq^2)_d` for `d = 0..=n(n-1)/2`.
pub fn e_flag_dims(n: usize) -> Vec<usize> {
    let ranks = sq2_ranks(n);
    let mut prev = 0;
    ranks
        .iter()
        .map(|&(size, rank)| {
            let e = size - rank - prev;
            prev = rank;
            e
        })
        .collect()
}

/// Products of distinct `T_a` are cocycles, independent in E, exhaust the
/// dimensions of E, and every `T_a^2` is a coboundary.
pub fn exterior_check(n: usize) -> Result<bool> {
    let dims = e_flag_dims(n);
    let gens: Vec<FlagClass> = (1..=n / 2).map(|a| t_class(n, a)).collect::<Result<_>>()?;
    let images = |d: usize| -> (Vec<Exponent>, Vec<BitVector>) {
        if d == 0 {
            return (staircase_basis(n, 0), Vec::new());
        }
        let (_, target, m) = sq2_matrix(n, d - 1);
        let cols = (0..m.cols()).map(|c| m.column(c)).collect();
        (target, cols)
    };
    let mut by_degree: Vec<Vec<FlagClass>> = vec![Vec::new(); top_degree(n) + 1];
    for mask in 0u32..(1 << gens.len()) {
        let mut p = FlagClass::one(n);
        let mut d = 0;
        for (a, g) in gens.iter().enumerate() {
            if mask >> a & 1 == 1 {
                p = p.mul(g);
                d += t_degree(n, a + 1);
            }
        }
        if d > top_degree(n) || p.is_zero() || !sq2_flag(&p).is_zero() {
            return Ok(false);
        }
        by_degree[d].push(p);
    }
    for (d, classes) in by_degree.iter().enumerate() {
        if classes.len() != dims[d] {
            return Ok(false);
        }
        let (basis, mut vecs) = images(d);
        let im = span_rank(basis.len(), &vecs);
        vecs.extend(classes.iter().map(|c| c.to_bits(&basis)));
        if span_rank(basis.len(), &vecs) != im + classes.len() {
            return Ok(false);
        }
    }
    for g in &gens {
        let sq = g.mul(g);
        if let Some(d) = sq.degree() {
            let (basis, mut vecs) = images(d);
            let im = span_rank(basis.len(), &vecs);
            vecs.push(sq.to_bits(&basis));
            if span_rank(basis.len(), &vecs) != im {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of staircase monomials in each degree.
pub fn coinvariant_dims(n: usize) -> Vec<usize> {
    (0..=top_degree(n)).map(|d| staircase_basis(n, d).len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive;

    fn mono(n: usize, a: &[u8]) -> FlagClass {
        FlagClass::monomial(n, a)
    }

    #[test]
    fn normal_form_examples() {
        let e1 = normal_form(3, [vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(e1.is_zero());
        assert!(mono(3, &[3, 0, 0]).is_zero());
        assert_eq!(mono(3, &[2, 1, 0]).terms().len(), 1);
        // x_2^2 = x_1 x_2 + x_1^2 when n = 3
        assert_eq!(mono(3, &[0, 2, 0]), normal_form(3, [vec![1, 1, 0], vec![2, 0, 0]]));
    }

    #[test]
    fn sq2_examples() {
        assert_eq!(sq2_flag(&FlagClass::x(3, 1)), mono(3, &[2, 0, 0]));
        assert_eq!(sq2_flag(&mono(3, &[1, 1, 0])), normal_form(3, [vec![2, 1, 0], vec![1, 2, 0]]));
        assert!(sq2_flag(&FlagClass::one(3)).is_zero());
    }

    #[test]
    fn complete_homog_examples() {
        assert_eq!(complete_homog(1, 2, 3).unwrap(), normal_form(3, [vec![1, 0, 0], vec![0, 1, 0]]));
        assert_eq!(complete_homog(2, 1, 3).unwrap(), mono(3, &[2, 0, 0]));
        assert!(complete_homog(3, 3, 3).unwrap().is_zero());
        assert!(complete_homog(1, 4, 3).is_err());
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_sq2(&FlagClass::zero(3)).unwrap(), Some(FlagClass::zero(3)));
        assert!(mono(3, &[4, 0, 0]).is_zero());
        let u = solve_sq2(&mono(3, &[2, 0, 0])).unwrap().unwrap();
        assert_eq!(sq2_flag(&u), mono(3, &[2, 0, 0]));
        assert_eq!(solve_sq2(&FlagClass::one(3)).unwrap(), None);
    }

    #[test]
    fn t_class_examples() {
        assert_eq!(t_class(3, 1).unwrap(), mono(3, &[2, 1, 0]));
        assert_eq!(t_class(4, 2).unwrap(), mono(4, &[3, 0, 0, 0]));
        assert_eq!(t_class(2, 1).unwrap(), FlagClass::x(2, 1));
        assert!(t_class(4, 3).is_err());
        for n in 2..=6 {
            for a in 1..=n / 2 {
                let t = t_class(n, a).unwrap();
                assert_eq!(t.degree(), Some(t_degree(n, a)));
            }
        }
    }

    #[test]
    fn e_dims() {
        assert_eq!(e_flag_dims(3), vec![1, 0, 0, 1]);
        assert_eq!(e_flag_dims(4), vec![1, 0, 0, 2, 0, 0, 1]);
        let d5 = e_flag_dims(5);
        let support: Vec<usize> = (0..d5.len()).filter(|&d| d5[d] > 0).collect();
        assert_eq!(support, vec![0, 3, 7, 10]);
        assert!(d5.iter().all(|&x| x <= 1));
    }

    #[test]
    fn exterior_small() {
        for n in 1..=5 {
            assert!(exterior_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn coinvariant_dims_are_q_factorial() {
        for n in 1..=6 {
            let q: Vec<usize> = motive::q_factorial(n).into_iter().map(|x| x as usize).collect();
            assert_eq!(coinvariant_dims(n), q);
        }
    }

    #[test]
    fn sq2_squares_to_zero() {
        for n in 1..=5 {
            for d in 0..=top_degree(n) {
                for a in staircase_basis(n, d) {
                    let c = FlagClass { n, terms: [a].into() };
                    assert!(sq2_flag(&sq2_flag(&c)).is_zero());
                }
            }
        }
    }
}
