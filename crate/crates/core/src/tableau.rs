//! Checkerboard-coloured Young tableaux.
//!
//! A tableau is a partition shape together with a [`Twist`] that fixes the
//! colour of the corner box: black for untwisted, white for twisted, then
//! alternating like a chessboard. Only white boxes may be added or removed,
//! which is what the combinatorial `Sq^2` sees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Row lengths of a Young diagram, top to bottom, weakly decreasing and
/// positive. The empty list is the empty shape.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    /// Builds a shape, dropping trailing zero rows.
    pub fn new(rows: impl Into<Vec<usize>>) -> Result<Self> {
        let mut rows = rows.into();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedShape(rows));
        }
        Ok(Shape(rows))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    /// Shape from rows already known to be valid; panics otherwise.
    pub fn from_rows(rows: &[usize]) -> Self {
        Self::new(rows.to_vec()).expect("valid shape")
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `r` (1-based), zero past the last row.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// Number of boxes `|Λ|`.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths.
    pub fn transpose(&self) -> Shape {
        let cols = self.0.first().copied().unwrap_or(0);
        Shape((1..=cols).map(|c| self.0.iter().filter(|&&r| r >= c).count()).collect())
    }

    /// Rows come in equal adjacent pairs of even length, `(2a,2a,2b,2b,..)`.
    pub fn is_completely_even(&self) -> bool {
        is_completely_even(&self.0)
    }

    /// Containment `self ⊆ other` of Young diagrams.
    pub fn is_contained_in(&self, other: &Shape) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn with_box_in_row(&self, r: usize) -> Shape {
        let mut rows = self.0.clone();
        if r > rows.len() {
            rows.push(1);
        } else {
            rows[r - 1] += 1;
        }
        Shape(rows)
    }

    fn without_box_in_row(&self, r: usize) -> Shape {
        let mut rows = self.0.clone();
        rows[r - 1] -= 1;
        if rows[r - 1] == 0 {
            rows.pop();
        }
        Shape(rows)
    }
}

fn is_completely_even(rows: &[usize]) -> bool {
    rows.len() % 2 == 0 && rows.chunks(2).all(|p| p[0] == p[1] && p[0] % 2 == 0)
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Shape::new(rows)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Colour of the corner box: black (untwisted, `L = O`) or white
/// (twisted, `L = O(1)`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    #[default]
    Untwisted,
    Twisted,
}

impl Twist {
    pub fn is_twisted(self) -> bool {
        self == Twist::Twisted
    }

    /// Twists add mod 2 under products.
    pub fn compose(self, other: Twist) -> Twist {
        if self == other {
            Twist::Untwisted
        } else {
            Twist::Twisted
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::Untwisted => "untwisted",
            Twist::Twisted => "twisted",
        })
    }
}

/// Either no size constraint, or at most `k` rows and `n - k` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truncation {
    Untruncated,
    Box { k: usize, n: usize },
}

impl Truncation {
    pub fn boxed(k: usize, n: usize) -> Result<Self> {
        Grassmannian::new(k, n).map(|g| g.truncation())
    }

    pub fn max_rows(self) -> Option<usize> {
        match self {
            Truncation::Untruncated => None,
            Truncation::Box { k, .. } => Some(k),
        }
    }

    pub fn max_cols(self) -> Option<usize> {
        match self {
            Truncation::Untruncated => None,
            Truncation::Box { k, n } => Some(n - k),
        }
    }

    pub fn admits(self, shape: &Shape) -> bool {
        match self {
            Truncation::Untruncated => true,
            Truncation::Box { k, n } => shape.len() <= k && shape.row(1) <= n - k,
        }
    }

    pub fn check(self, shape: &Shape) -> Result<()> {
        if self.admits(shape) {
            Ok(())
        } else {
            Err(Error::InadmissibleShape { shape: shape.to_string(), truncation: self.to_string() })
        }
    }

    /// Largest degree of an admissible shape, if bounded.
    pub fn max_degree(self) -> Option<usize> {
        match self {
            Truncation::Untruncated => None,
            Truncation::Box { k, n } => Some(k * (n - k)),
        }
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::Untruncated => write!(f, "untruncated"),
            Truncation::Box { k, n } => write!(f, "({k},{n})-truncation"),
        }
    }
}

/// The Grassmannian `Gr(k, n)`, the index for `(k,n)`-truncated tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Grassmannian {
    pub k: usize,
    pub n: usize,
}

impl Grassmannian {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidGrassmannian { k: k as i64, n: n as i64 });
        }
        Ok(Grassmannian { k, n })
    }

    /// Accepts signed indices, `None` when they do not name a Grassmannian.
    pub fn try_signed(k: i64, n: i64) -> Option<Self> {
        if k < 0 || n < 0 || k > n {
            None
        } else {
            Some(Grassmannian { k: k as usize, n: n as usize })
        }
    }

    pub fn truncation(self) -> Truncation {
        Truncation::Box { k: self.k, n: self.n }
    }

    /// Dimension `k(n-k)`, the top degree.
    pub fn dim(self) -> usize {
        self.k * (self.n - self.k)
    }

    /// All admissible tableaux, grouped by degree `0..=dim`.
    pub fn tableaux(self, twist: Twist) -> Vec<Vec<Tableau>> {
        enumerate(self.truncation(), twist, None).expect("bounded truncation")
    }

    /// All admissible shapes of a single degree, in the canonical order.
    pub fn shapes_of_degree(self, degree: usize) -> Vec<Shape> {
        let mut out = Vec::new();
        box_partitions(degree, self.k, self.n - self.k, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

/// A shape with its colouring convention.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Shape,
    pub twist: Twist,
}

impl Tableau {
    pub fn new(shape: Shape, twist: Twist) -> Self {
        Tableau { shape, twist }
    }

    pub fn untwisted(rows: &[usize]) -> Self {
        Tableau::new(Shape::from_rows(rows), Twist::Untwisted)
    }

    pub fn twisted(rows: &[usize]) -> Self {
        Tableau::new(Shape::from_rows(rows), Twist::Twisted)
    }

    pub fn degree(&self) -> usize {
        self.shape.degree()
    }

    fn with_shape(&self, shape: Shape) -> Tableau {
        Tableau { shape, twist: self.twist }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.twist {
            Twist::Untwisted => write!(f, "{}", self.shape),
            Twist::Twisted => write!(f, "{}'", self.shape),
        }
    }
}

/// Colour of the box in row `r`, column `c` (both 1-based).
pub fn box_is_white(twist: Twist, r: usize, c: usize) -> bool {
    let odd = (r + c) % 2 == 1;
    match twist {
        Twist::Untwisted => odd,
        Twist::Twisted => !odd,
    }
}

/// Rows where a white box can be appended, in increasing order. The list
/// realizes `A(Λ)`; its entries are the positions `1..=|A(Λ)|`.
pub fn addable_positions(t: &Tableau, tr: Truncation) -> Result<Vec<usize>> {
    tr.check(&t.shape)?;
    Ok(addable_rows(t, tr))
}

fn addable_rows(t: &Tableau, tr: Truncation) -> Vec<usize> {
    let s = &t.shape;
    let last = match tr.max_rows() {
        Some(k) => (s.len() + 1).min(k),
        None => s.len() + 1,
    };
    (1..=last)
        .filter(|&r| {
            let new_len = s.row(r) + 1;
            new_len <= s.row(r - 1)
                && tr.max_cols().is_none_or(|m| new_len <= m)
                && box_is_white(t.twist, r, new_len)
        })
        .collect()
}

/// Rows whose last box is white and removable, the set `D(Λ)`.
pub fn removable_positions(t: &Tableau, tr: Truncation) -> Result<Vec<usize>> {
    tr.check(&t.shape)?;
    Ok(removable_rows(t))
}

fn removable_rows(t: &Tableau) -> Vec<usize> {
    let s = &t.shape;
    (1..=s.len())
        .filter(|&r| s.row(r + 1) < s.row(r) && box_is_white(t.twist, r, s.row(r)))
        .collect()
}

/// The shapes of `A(Λ)`, in position order.
pub fn add_one(t: &Tableau, tr: Truncation) -> Result<Vec<Tableau>> {
    Ok(addable_positions(t, tr)?.into_iter().map(|r| t.with_shape(t.shape.with_box_in_row(r))).collect())
}

/// The shapes of `D(Λ)`.
pub fn remove_one(t: &Tableau, tr: Truncation) -> Result<Vec<Tableau>> {
    Ok(removable_positions(t, tr)?
        .into_iter()
        .map(|r| t.with_shape(t.shape.without_box_in_row(r)))
        .collect())
}

/// `Λ_{i_1,..,i_l}`: a white box added at each listed position of `A(Λ)`.
pub fn add_boxes(t: &Tableau, tr: Truncation, positions: &[usize]) -> Result<Tableau> {
    let rows = addable_positions(t, tr)?;
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedPositions(positions.to_vec()));
    }
    let mut shape = t.shape.rows().to_vec();
    for &i in positions {
        if i == 0 || i > rows.len() {
            return Err(Error::PositionOutOfRange { index: i, len: rows.len() });
        }
        let r = rows[i - 1];
        if r > shape.len() {
            shape.push(1);
        } else {
            shape[r - 1] += 1;
        }
    }
    Ok(t.with_shape(Shape::new(shape)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub irredundant: bool,
    pub full: bool,
    pub even: bool,
}

pub fn classify(t: &Tableau, tr: Truncation) -> Result<Classification> {
    tr.check(&t.shape)?;
    let irredundant = removable_rows(t).is_empty();
    let full = addable_rows(t, tr).is_empty();
    Ok(Classification { irredundant, full, even: irredundant && full })
}

/// Evenness decided by the shape families alone, without looking at `A`/`D`:
/// completely even shapes, plus the hook-shifted families that appear in the
/// odd-dimensional and twisted cases.
pub fn even_closed_form(t: &Tableau, tr: Truncation) -> bool {
    let rows = t.shape.rows();
    let (k, n) = match tr {
        Truncation::Untruncated => {
            return match t.twist {
                Twist::Untwisted => is_completely_even(rows),
                Twist::Twisted => false,
            }
        }
        Truncation::Box { k, n } => (k, n),
    };
    if !tr.admits(&t.shape) {
        return false;
    }
    let m = n - k;
    match t.twist {
        Twist::Untwisted => {
            if is_completely_even(rows) {
                return true;
            }
            // σ_{n-k,1^{k-1}} times a doubled shape: (n-k, 2a+1, 2a+1, ...)
            // filling all k rows.
            (k * m) % 2 == 1
                && rows.len() == k
                && rows[0] == m
                && rows[1..].chunks(2).all(|p| p[0] == p[1] && p[0] % 2 == 1)
        }
        Twist::Twisted => {
            // σ_{n-k} · T
            let top_row_family = if m == 0 {
                is_completely_even(rows)
            } else {
                rows.first() == Some(&m) && is_completely_even(&rows[1..])
            };
            // σ_{1^k} · T
            let column_family = if k == 0 {
                is_completely_even(rows)
            } else {
                rows.len() == k && {
                    let inner: Vec<usize> = rows.iter().map(|r| r - 1).filter(|&r| r > 0).collect();
                    is_completely_even(&inner)
                }
            };
            match (k % 2 == 0, n % 2 == 0) {
                (true, true) => top_row_family || column_family,
                (false, false) => top_row_family,
                (true, false) => column_family,
                (false, true) => false,
            }
        }
    }
}

/// `Ā(Λ)`: every shape reachable by repeatedly adding white boxes, `Λ`
/// included.
pub fn closure(t: &Tableau, tr: Truncation) -> Result<BTreeSet<Shape>> {
    tr.check(&t.shape)?;
    let mut seen = BTreeSet::from([t.shape.clone()]);
    let mut frontier = vec![t.clone()];
    while let Some(cur) = frontier.pop() {
        for r in addable_rows(&cur, tr) {
            let next = cur.shape.with_box_in_row(r);
            if seen.insert(next.clone()) {
                frontier.push(cur.with_shape(next));
            }
        }
    }
    Ok(seen)
}

fn box_partitions(
    remaining: usize,
    rows_left: usize,
    max_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Shape>,
) {
    if remaining == 0 {
        out.push(Shape(prefix.clone()));
        return;
    }
    if rows_left == 0 {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        if part * rows_left < remaining {
            break;
        }
        prefix.push(part);
        box_partitions(remaining - part, rows_left - 1, part, prefix, out);
        prefix.pop();
    }
}

/// Admissible tableaux grouped by degree `0..=max_degree`, each degree in
/// lexicographic order of row vectors. Untruncated enumeration needs a bound.
pub fn enumerate(tr: Truncation, twist: Twist, max_degree: Option<usize>) -> Result<Vec<Vec<Tableau>>> {
    let top = match (tr.max_degree(), max_degree) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => return Err(Error::MissingDegreeBound),
    };
    let (rows, cols) = match tr {
        Truncation::Untruncated => (usize::MAX, usize::MAX),
        Truncation::Box { k, n } => (k, n - k),
    };
    Ok((0..=top)
        .map(|d| {
            let mut shapes = Vec::new();
            box_partitions(d, rows.min(d), cols.min(d), &mut Vec::new(), &mut shapes);
            shapes.sort();
            shapes.into_iter().map(|s| Tableau::new(s, twist)).collect()
        })
        .collect())
}

/// One block of the decomposition of the tableau set into closures of
/// irredundant tableaux.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub root: Shape,
    pub members: Vec<Shape>,
    pub even: bool,
}

/// Partitions the admissible tableaux (up to `max_degree`) into the closures
/// `Ā(Λ)` of irredundant `Λ`.
pub fn irredundant_components(tr: Truncation, twist: Twist, max_degree: Option<usize>) -> Result<Vec<Component>> {
    let all = enumerate(tr, twist, max_degree)?;
    let top = all.len().saturating_sub(1);
    let mut out = Vec::new();
    for t in all.iter().flatten() {
        let class = classify(t, tr)?;
        if !class.irredundant {
            continue;
        }
        let members = closure(t, tr)?.into_iter().filter(|s| s.degree() <= top).collect();
        out.push(Component { root: t.shape.clone(), members, even: class.even });
    }
    Ok(out)
}

/// A tableau `Λ_{i_1,..,i_l}` with `i_1 > 1` over an irredundant, non-full
/// root `Λ`. These index the eta-cone summands and the `Z`-generators of
/// Chow-Witt groups.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EtaIndex {
    pub root: Shape,
    pub positions: Vec<usize>,
    pub shape: Shape,
}

/// All eta indices of a truncation, sorted by degree then shape.
pub fn eta_indices(tr: Truncation, twist: Twist, max_degree: Option<usize>) -> Result<Vec<EtaIndex>> {
    let mut out = Vec::new();
    for comp in irredundant_components(tr, twist, max_degree)? {
        if comp.even {
            continue;
        }
        let root = Tableau::new(comp.root.clone(), twist);
        let slots = addable_rows(&root, tr).len();
        // subsets of {2, .., slots}, the empty one included
        for mask in 0u64..(1u64 << (slots - 1)) {
            let positions: Vec<usize> = (0..slots - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 2).collect();
            let shape = add_boxes(&root, tr, &positions)?.shape;
            if max_degree.is_none_or(|m| shape.degree() <= m) {
                out.push(EtaIndex { root: comp.root.clone(), positions, shape });
            }
        }
    }
    out.sort_by(|a, b| (a.shape.degree(), &a.shape).cmp(&(b.shape.degree(), &b.shape)));
    Ok(out)
}

/// Even tableaux grouped by degree.
pub fn even_tableaux(tr: Truncation, twist: Twist, max_degree: Option<usize>) -> Result<BTreeMap<usize, Vec<Shape>>> {
    let mut out: BTreeMap<usize, Vec<Shape>> = BTreeMap::new();
    for t in enumerate(tr, twist, max_degree)?.into_iter().flatten() {
        if classify(&t, tr)?.even {
            out.entry(t.degree()).or_default().push(t.shape);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(k: usize, n: usize) -> Truncation {
        Truncation::boxed(k, n).unwrap()
    }

    fn shapes(v: &[&[usize]]) -> BTreeSet<Shape> {
        v.iter().map(|r| Shape::from_rows(r)).collect()
    }

    #[test]
    fn corner_colours() {
        assert!(!box_is_white(Twist::Untwisted, 1, 1));
        assert!(box_is_white(Twist::Twisted, 1, 1));
        assert!(box_is_white(Twist::Untwisted, 2, 3));
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![1, 2]).is_err());
        assert!(Shape::new(vec![2, 0, 1]).is_err());
        assert_eq!(Shape::new(vec![2, 1, 0, 0]).unwrap(), Shape::from_rows(&[2, 1]));
    }

    #[test]
    fn addable_rows_of_worked_example() {
        let t = Tableau::untwisted(&[3, 2, 1]);
        assert_eq!(addable_positions(&t, gr(3, 6)).unwrap(), vec![2, 3]);
        let a: BTreeSet<Shape> = add_one(&t, gr(3, 6)).unwrap().into_iter().map(|t| t.shape).collect();
        assert_eq!(a, shapes(&[&[3, 3, 1], &[3, 2, 2]]));
        assert_eq!(addable_positions(&Tableau::untwisted(&[]), gr(2, 4)).unwrap(), Vec::<usize>::new());
        assert_eq!(addable_positions(&Tableau::twisted(&[]), gr(2, 4)).unwrap(), vec![1]);
    }

    #[test]
    fn removable_rows_of_worked_example() {
        assert!(removable_positions(&Tableau::untwisted(&[3, 2, 1]), gr(3, 6)).unwrap().is_empty());
        let d: BTreeSet<Shape> =
            remove_one(&Tableau::twisted(&[3, 2, 1]), gr(3, 6)).unwrap().into_iter().map(|t| t.shape).collect();
        assert_eq!(d, shapes(&[&[2, 2, 1], &[3, 1, 1], &[3, 2]]));
        for tw in [Twist::Untwisted, Twist::Twisted] {
            assert!(removable_positions(&Tableau::new(Shape::empty(), tw), gr(2, 4)).unwrap().is_empty());
        }
    }

    #[test]
    fn worked_example_closure_and_fullness() {
        let t = Tableau::untwisted(&[3, 2, 1]);
        assert_eq!(
            closure(&t, gr(3, 6)).unwrap(),
            shapes(&[&[3, 2, 1], &[3, 3, 1], &[3, 2, 2], &[3, 3, 2]])
        );
        let tw = Tableau::twisted(&[3, 2, 1]);
        assert!(classify(&tw, gr(3, 6)).unwrap().full);
        assert_eq!(closure(&tw, gr(3, 6)).unwrap(), shapes(&[&[3, 2, 1]]));
    }

    #[test]
    fn add_boxes_by_position() {
        let t = Tableau::untwisted(&[3, 2, 1]);
        assert_eq!(add_boxes(&t, gr(3, 6), &[1]).unwrap().shape, Shape::from_rows(&[3, 3, 1]));
        assert_eq!(add_boxes(&t, gr(3, 6), &[2]).unwrap().shape, Shape::from_rows(&[3, 2, 2]));
        assert_eq!(add_boxes(&t, gr(3, 6), &[1, 2]).unwrap().shape, Shape::from_rows(&[3, 3, 2]));
        assert_eq!(add_boxes(&t, gr(3, 6), &[]).unwrap().shape, t.shape);
        assert_eq!(
            add_boxes(&Tableau::untwisted(&[1]), gr(2, 4), &[2]).unwrap().shape,
            Shape::from_rows(&[1, 1])
        );
        assert!(matches!(add_boxes(&t, gr(3, 6), &[3]), Err(Error::PositionOutOfRange { index: 3, len: 2 })));
        assert!(matches!(add_boxes(&t, gr(3, 6), &[2, 1]), Err(Error::UnsortedPositions(_))));
    }

    #[test]
    fn inadmissible_input_is_rejected() {
        let t = Tableau::untwisted(&[3]);
        assert!(matches!(addable_positions(&t, gr(2, 4)), Err(Error::InadmissibleShape { .. })));
        assert!(classify(&t, gr(2, 4)).is_err());
        assert!(Truncation::boxed(5, 3).is_err());
    }

    #[test]
    fn classification_examples() {
        let c = classify(&Tableau::untwisted(&[2, 2]), gr(2, 4)).unwrap();
        assert!(c.even);
        let c = classify(&Tableau::untwisted(&[1]), gr(2, 4)).unwrap();
        assert!(c.irredundant && !c.full && !c.even);
        assert!(classify(&Tableau::twisted(&[2]), gr(2, 4)).unwrap().even);
        // empty tableau: even untwisted, irredundant but not full twisted
        assert!(classify(&Tableau::untwisted(&[]), gr(2, 4)).unwrap().even);
        let c = classify(&Tableau::twisted(&[]), gr(2, 4)).unwrap();
        assert!(c.irredundant && !c.full);
    }

    #[test]
    fn closed_form_examples() {
        assert!(even_closed_form(&Tableau::untwisted(&[3, 3, 3]), gr(3, 6)));
        assert!(even_closed_form(&Tableau::untwisted(&[]), Truncation::Untruncated));
        for t in enumerate(gr(3, 6), Twist::Twisted, None).unwrap().into_iter().flatten() {
            assert!(!even_closed_form(&t, gr(3, 6)));
        }
    }

    #[test]
    fn closure_examples() {
        assert_eq!(
            closure(&Tableau::untwisted(&[1]), gr(2, 4)).unwrap(),
            shapes(&[&[1], &[2], &[1, 1], &[2, 1]])
        );
        assert_eq!(closure(&Tableau::untwisted(&[2, 2]), gr(2, 4)).unwrap(), shapes(&[&[2, 2]]));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = enumerate(gr(2, 4), Twist::Untwisted, None).unwrap().iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 1, 1]);
        let p = enumerate(gr(1, 5), Twist::Untwisted, None).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.iter().all(|d| d.len() == 1));
        let total: usize = enumerate(gr(3, 6), Twist::Untwisted, None).unwrap().iter().map(Vec::len).sum();
        assert_eq!(total, 20);
        assert_eq!(enumerate(Truncation::Untruncated, Twist::Untwisted, None), Err(Error::MissingDegreeBound));
        // lexicographic order inside a degree
        let d2: Vec<Shape> = enumerate(gr(2, 4), Twist::Untwisted, None).unwrap()[2].iter().map(|t| t.shape.clone()).collect();
        assert_eq!(d2, vec![Shape::from_rows(&[1, 1]), Shape::from_rows(&[2])]);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Shape::from_rows(&[3, 2, 1]).transpose(), Shape::from_rows(&[3, 2, 1]));
        assert_eq!(Shape::from_rows(&[3, 1]).transpose(), Shape::from_rows(&[2, 1, 1]));
        assert_eq!(Shape::from_rows(&[2, 2]).transpose(), Shape::from_rows(&[2, 2]));
        assert_eq!(Shape::empty().transpose(), Shape::empty());
    }

    #[test]
    fn components_of_gr24() {
        let c = irredundant_components(gr(2, 4), Twist::Untwisted, None).unwrap();
        let roots: Vec<(Shape, usize)> = c.iter().map(|c| (c.root.clone(), c.members.len())).collect();
        assert_eq!(
            roots,
            vec![(Shape::empty(), 1), (Shape::from_rows(&[1]), 4), (Shape::from_rows(&[2, 2]), 1)]
        );
        let c = irredundant_components(gr(2, 4), Twist::Twisted, None).unwrap();
        let roots: BTreeSet<Shape> = c.iter().map(|c| c.root.clone()).collect();
        assert_eq!(roots, shapes(&[&[], &[2], &[1, 1], &[2, 1]]));
        assert_eq!(c.iter().map(|c| c.members.len()).sum::<usize>(), 6);
    }

    #[test]
    fn eta_indices_of_gr24() {
        let idx = eta_indices(gr(2, 4), Twist::Untwisted, None).unwrap();
        let got: Vec<(Shape, Vec<usize>)> = idx.iter().map(|e| (e.shape.clone(), e.positions.clone())).collect();
        assert_eq!(got, vec![(Shape::from_rows(&[1]), vec![]), (Shape::from_rows(&[1, 1]), vec![2])]);
    }

    #[test]
    fn serde_shape_round_trip() {
        let s = Shape::from_rows(&[3, 1]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[3,1]");
        assert_eq!(serde_json::from_str::<Shape>(&json).unwrap(), s);
        assert!(serde_json::from_str::<Shape>("[1,3]").is_err());
    }
}
