//! Eta classes and additive Chow-Witt bases of Grassmannians.
//!
//! Every generator is recorded by its image under `γ: CH̃ → CH`. GW, W and
//! I coefficients stay symbolic; the Witt-side meaning of a GW generator is
//! attached as a label computed from its doubling preimage.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice;
use crate::motive::{self, SummandKind};
use crate::schubert::{self, Cycle, Ring, Sq2Matrix};
use crate::symfunc::terms_json;
use crate::tableau::{self, Grassmannian, Shape, Tableau, Truncation, Twist};

/// A pair `(a, b)` of integral cycles in degrees `d` and `d + 1` with
/// `Sq^2(a) = b` mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaClass {
    pub twist: Twist,
    pub truncation: Truncation,
    pub degree: usize,
    a: Cycle,
    b: Cycle,
}

fn check_degree(c: &Cycle, d: usize) -> Result<()> {
    if c.is_zero() || c.degree() == Some(d) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{c} is not homogeneous of degree {d}")))
    }
}

impl EtaClass {
    pub fn new(degree: usize, a: Cycle, b: Cycle) -> Result<Self> {
        if a.ring != Ring::Integers || b.ring != Ring::Integers {
            return Err(Error::InvalidArgument("eta classes have integral components".into()));
        }
        if a.twist != b.twist || a.truncation != b.truncation {
            return Err(Error::Incompatible(format!("{} / {} vs {} / {}", a.twist, a.truncation, b.twist, b.truncation)));
        }
        check_degree(&a, degree)?;
        check_degree(&b, degree + 1)?;
        if schubert::sq2(&a).mod2() != b.mod2() {
            return Err(Error::EtaCondition);
        }
        Ok(EtaClass { twist: a.twist, truncation: a.truncation, degree, a, b })
    }

    /// `(1, 0)`, untwisted.
    pub fn identity(tr: Truncation) -> Self {
        let one = Cycle::sigma(Ring::Integers, Twist::Untwisted, tr, Shape::empty()).expect("empty shape");
        let zero = Cycle::zero(Ring::Integers, Twist::Untwisted, tr);
        EtaClass { twist: Twist::Untwisted, truncation: tr, degree: 0, a: one, b: zero }
    }

    pub fn a(&self) -> &Cycle {
        &self.a
    }

    pub fn b(&self) -> &Cycle {
        &self.b
    }

    pub fn to_json(&self) -> Value {
        json!({
            "twist": self.twist,
            "degree": self.degree,
            "a": terms_json(self.a.terms()),
            "b": terms_json(self.b.terms()),
        })
    }
}

impl fmt::Display for EtaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// `(a, b)·(c, d) = (ac, bc + ad)`.
pub fn eta_mul(u: &EtaClass, v: &EtaClass) -> Result<EtaClass> {
    if u.truncation != v.truncation {
        return Err(Error::Incompatible(format!("{} vs {}", u.truncation, v.truncation)));
    }
    let ac = schubert::product(&u.a, &v.a)?;
    let bc = schubert::product(&u.b, &v.a)?;
    let ad = schubert::product(&u.a, &v.b)?;
    EtaClass::new(u.degree + v.degree, ac, bc.add(&ad)?)
}

/// `(Λ_S, Sq^2_Z(Λ_S))` for an irredundant, non-full `Λ` and positions `S`
/// in `A(Λ)` all larger than 1.
pub fn eta_class_of(t: &Tableau, tr: Truncation, subset: &[usize]) -> Result<EtaClass> {
    let c = tableau::classify(t, tr)?;
    if c.even {
        return Err(Error::EvenTableau(t.shape.to_string()));
    }
    if !c.irredundant {
        return Err(Error::InvalidArgument(format!("{} is not irredundant", t.shape)));
    }
    if subset.first() == Some(&1) {
        return Err(Error::InvalidArgument("positions must start above 1".into()));
    }
    let shape = tableau::add_boxes(t, tr, subset)?.shape;
    let a = Cycle::sigma(Ring::Integers, t.twist, tr, shape.clone())?;
    let b = schubert::sq2(&a);
    EtaClass::new(shape.degree(), a, b)
}

/// Witt-side description of a GW generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittLabel {
    /// `p` (pure doubling), `R`, `e_k` or `e_perp`.
    pub family: String,
    pub preimage: Shape,
    pub symbol: String,
}

fn halve_pairs(rows: &[usize]) -> Option<Shape> {
    if rows.len() % 2 == 1 || rows.chunks(2).any(|p| p[0] != p[1] || p[0] % 2 == 1) {
        return None;
    }
    Shape::new(rows.chunks(2).map(|p| p[0] / 2).collect::<Vec<_>>()).ok()
}

fn minus_one(rows: &[usize]) -> Vec<usize> {
    rows.iter().map(|r| r - 1).filter(|&r| r > 0).collect()
}

/// Label of an even tableau of `Gr(k,n)` through its doubling preimage.
pub fn witt_label(shape: &Shape, g: Grassmannian, twist: Twist) -> Option<WittLabel> {
    let (k, m) = (g.k, g.n - g.k);
    let rows = shape.rows();
    let label = |family: &str, mu: Shape, suffix: &str| WittLabel {
        family: family.into(),
        symbol: format!("λ(σ{mu}){suffix}"),
        preimage: mu,
    };
    match twist {
        Twist::Untwisted => {
            if let Some(mu) = halve_pairs(rows) {
                return Some(label("p", mu, ""));
            }
            if (k * m) % 2 == 1 && rows.len() == k && rows[0] == m {
                return halve_pairs(&minus_one(&rows[1..])).map(|mu| label("R", mu, "·R"));
            }
            None
        }
        Twist::Twisted => {
            if k % 2 == 0 && rows.len() == k {
                if let Some(mu) = halve_pairs(&minus_one(rows)) {
                    return Some(label("e_k", mu, "·e_k"));
                }
            }
            if m % 2 == 0 && !rows.is_empty() && rows[0] == m {
                if let Some(mu) = halve_pairs(&rows[1..]) {
                    return Some(label("e_perp", mu, "·e⊥_{n-k}"));
                }
            }
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TagKind {
    GwEven(Shape),
    ZH(EtaClass),
    ZPartial(EtaClass),
}

/// One generator of a Chow-Witt group with its `γ`-image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTag {
    pub kind: TagKind,
    pub degree: usize,
    pub gamma_image: Cycle,
    pub witt: Option<WittLabel>,
}

impl GeneratorTag {
    pub fn gw_even(shape: Shape, g: Grassmannian, twist: Twist) -> Result<Self> {
        let gamma_image = Cycle::sigma(Ring::Integers, twist, g.truncation(), shape.clone())?;
        let witt = witt_label(&shape, g, twist);
        Ok(GeneratorTag { degree: shape.degree(), kind: TagKind::GwEven(shape), gamma_image, witt })
    }

    /// `h(t)`, with image `2a`.
    pub fn z_h(t: EtaClass) -> Self {
        let gamma_image = t.a.scale(&BigInt::from(2));
        GeneratorTag { degree: t.degree, kind: TagKind::ZH(t), gamma_image, witt: None }
    }

    /// `∂(t)`, with image `b`.
    pub fn z_partial(t: EtaClass) -> Self {
        let gamma_image = t.b.clone();
        GeneratorTag { degree: t.degree + 1, kind: TagKind::ZPartial(t), gamma_image, witt: None }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            TagKind::GwEven(_) => "gw_even",
            TagKind::ZH(_) => "z_h",
            TagKind::ZPartial(_) => "z_partial",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut tag = json!({ "kind": self.kind_name() });
        match &self.kind {
            TagKind::GwEven(s) => {
                tag["shape"] = json!(s);
                if let Some(w) = &self.witt {
                    tag["witt"] = json!(w);
                }
            }
            TagKind::ZH(t) | TagKind::ZPartial(t) => tag["eta"] = t.to_json(),
        }
        json!({ "tag": tag, "degree": self.degree, "gamma_image": terms_json(self.gamma_image.terms()) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisDegree {
    pub d: usize,
    pub gw: Vec<GeneratorTag>,
    pub z: Vec<GeneratorTag>,
}

/// Per-degree GW and Z generators of `CH̃(Gr(k,n), L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTable {
    pub k: usize,
    pub n: usize,
    pub twist: Twist,
    pub degrees: Vec<BasisDegree>,
}

impl BasisTable {
    pub fn gw_shapes(&self, d: usize) -> Vec<Shape> {
        self.degrees[d]
            .gw
            .iter()
            .map(|t| match &t.kind {
                TagKind::GwEven(s) => s.clone(),
                _ => unreachable!("GW column holds even tableaux only"),
            })
            .collect()
    }

    pub fn z_images(&self, d: usize) -> Vec<Cycle> {
        self.degrees[d].z.iter().map(|t| t.gamma_image.clone()).collect()
    }

    pub fn to_json(&self) -> Value {
        let degrees: Vec<Value> = self
            .degrees
            .iter()
            .map(|e| {
                let gw: Vec<&Shape> = e
                    .gw
                    .iter()
                    .map(|t| match &t.kind {
                        TagKind::GwEven(s) => s,
                        _ => unreachable!(),
                    })
                    .collect();
                let witt: Vec<Value> = e.gw.iter().filter_map(|t| t.witt.as_ref().map(|w| json!(w))).collect();
                let z: Vec<Value> = e.z.iter().map(GeneratorTag::to_json).collect();
                json!({ "d": e.d, "gw": gw, "gw_witt": witt, "z": z })
            })
            .collect();
        json!({ "k": self.k, "n": self.n, "twist": self.twist, "degrees": degrees })
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("### CH̃ of Gr({},{}), {}\n\n| d | GW(k) | Z |\n|---|---|---|\n", self.k, self.n, self.twist);
        for e in &self.degrees {
            let gw: Vec<String> = e
                .gw
                .iter()
                .map(|t| {
                    let w = t.witt.as_ref().map(|w| format!(" [{}]", w.symbol)).unwrap_or_default();
                    format!("{}{w}", t.gamma_image)
                })
                .collect();
            let z: Vec<String> = e.z.iter().map(|t| t.gamma_image.to_string()).collect();
            s.push_str(&format!("| {} | {} | {} |\n", e.d, gw.join(", "), z.join(", ")));
        }
        s
    }
}

/// GW generators from the even tableaux, `h` and `∂` of the eta class of
/// every eta index.
pub fn chow_witt_basis(k: usize, n: usize, twist: Twist) -> Result<BasisTable> {
    let g = Grassmannian::new(k, n)?;
    let tr = g.truncation();
    let mut degrees: Vec<BasisDegree> = (0..=g.dim()).map(|d| BasisDegree { d, gw: vec![], z: vec![] }).collect();
    for (d, shapes) in tableau::even_tableaux(tr, twist, None)? {
        for s in shapes {
            degrees[d].gw.push(GeneratorTag::gw_even(s, g, twist)?);
        }
    }
    for e in tableau::eta_indices(tr, twist, None)? {
        let t = eta_class_of(&Tableau::new(e.root.clone(), twist), tr, &e.positions)?;
        let d = t.degree;
        degrees[d].z.push(GeneratorTag::z_h(t.clone()));
        degrees[d + 1].z.push(GeneratorTag::z_partial(t));
    }
    Ok(BasisTable { k, n, twist, degrees })
}

/// Whether two lists of integral cycles span the same lattice. Every cycle
/// must be homogeneous of `degree` (or zero).
pub fn lattice_equal(a: &[Cycle], b: &[Cycle], degree: usize) -> Result<bool> {
    let mut support: BTreeSet<Shape> = BTreeSet::new();
    for c in a.iter().chain(b) {
        if c.ring != Ring::Integers {
            return Err(Error::InvalidArgument("lattices are compared over Z".into()));
        }
        check_degree(c, degree)?;
        support.extend(c.terms().keys().cloned());
    }
    let basis: Vec<Shape> = support.into_iter().collect();
    let coords = |v: &[Cycle]| v.iter().map(|c| c.coordinates(&basis)).collect::<Vec<_>>();
    Ok(lattice::same_lattice(basis.len(), &coords(a), &coords(b)))
}

/// Generators of `{x : Sq^2(x mod 2) = 0}` in degree `d`, read off the mod-2
/// nullspace: lifts of a nullspace basis together with `2σ_Λ` for every Λ.
pub fn ker_sq2_pi_lattice(tr: Truncation, twist: Twist, degree: usize) -> Result<Vec<Cycle>> {
    let m = Sq2Matrix::new(tr, twist, degree);
    let mut out = Vec::new();
    for v in m.matrix.nullspace() {
        let terms = v.ones().map(|i| (m.source[i].clone(), BigInt::one()));
        out.push(Cycle::from_terms(Ring::Integers, twist, tr, terms)?);
    }
    for s in &m.source {
        out.push(Cycle::from_terms(Ring::Integers, twist, tr, [(s.clone(), BigInt::from(2))])?);
    }
    Ok(out)
}

/// Whether the `γ`-images of a basis table span `Ker(Sq^2 ∘ π)` in every
/// degree.
pub fn kernel_lattice_check(k: usize, n: usize, twist: Twist) -> Result<bool> {
    let table = chow_witt_basis(k, n, twist)?;
    let tr = Grassmannian::new(k, n)?.truncation();
    for e in &table.degrees {
        let images: Vec<Cycle> = e.gw.iter().chain(&e.z).map(|t| t.gamma_image.clone()).collect();
        if !lattice_equal(&images, &ker_sq2_pi_lattice(tr, twist, e.d)?, e.d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    pub degree: usize,
    pub gw_rank: usize,
    pub z_rank: usize,
    pub e_dim: usize,
    pub ker_dim: usize,
    pub im_dim: usize,
    pub even: usize,
    /// Eta indices of this degree.
    pub eta: usize,
    pub consistent: bool,
}

/// Ranks per degree, cross-checked against `Sq^2` and the motive.
pub fn rank_report(k: usize, n: usize, twist: Twist) -> Result<Vec<RankRow>> {
    let g = Grassmannian::new(k, n)?;
    let table = chow_witt_basis(k, n, twist)?;
    let ranks = schubert::degree_ranks(g, twist)?;
    let mot = motive::decompose_grassmannian(k, n, twist)?.unshifted();
    let mut eta_count: BTreeMap<usize, usize> = BTreeMap::new();
    for e in tableau::eta_indices(g.truncation(), twist, None)? {
        *eta_count.entry(e.shape.degree()).or_default() += 1;
    }
    let eta = |d: usize| eta_count.get(&d).copied().unwrap_or(0);
    let mut out = Vec::new();
    for (e, r) in table.degrees.iter().zip(&ranks) {
        let d = e.d;
        let below = if d > 0 { eta(d - 1) } else { 0 };
        let consistent = e.gw.len() == r.e_dim
            && r.e_dim == r.even
            && r.im_dim == below
            && r.ker_dim == r.even + below
            && e.z.len() == eta(d) + below
            && mot.count(SummandKind::Unit, d) == r.even
            && mot.count(SummandKind::EtaCone, d) == eta(d);
        out.push(RankRow {
            degree: d,
            gw_rank: e.gw.len(),
            z_rank: e.z.len(),
            e_dim: r.e_dim,
            ker_dim: r.ker_dim,
            im_dim: r.im_dim,
            even: r.even,
            eta: eta(d),
            consistent,
        });
    }
    Ok(out)
}

/// A checked-in table: GW shapes and Z `γ`-images as `(coefficient, rows)`
/// terms.
#[derive(Clone, Debug, Deserialize)]
pub struct ReferenceTable {
    pub k: usize,
    pub n: usize,
    pub twist: Twist,
    pub gw: Vec<Shape>,
    pub z: Vec<Vec<(i64, Vec<usize>)>>,
}

#[derive(Deserialize)]
struct ReferenceFile {
    tables: Vec<ReferenceTable>,
}

const REFERENCE_JSON: &str = include_str!("../fixtures/chow_witt_tables.json");

/// Reference bases of `Gr(2,4)` and `Gr(3,6)` in both twists.
pub fn reference_tables() -> Vec<ReferenceTable> {
    serde_json::from_str::<ReferenceFile>(REFERENCE_JSON).expect("fixture parses").tables
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceComparison {
    pub k: usize,
    pub n: usize,
    pub twist: Twist,
    pub gw_equal: bool,
    /// Degrees whose Z columns span different lattices.
    pub z_mismatches: Vec<usize>,
}

impl ReferenceComparison {
    pub fn matches(&self) -> bool {
        self.gw_equal && self.z_mismatches.is_empty()
    }
}

/// Degreewise comparison of a computed basis table with a reference one.
pub fn compare_with_reference(r: &ReferenceTable) -> Result<ReferenceComparison> {
    let table = chow_witt_basis(r.k, r.n, r.twist)?;
    let tr = Grassmannian::new(r.k, r.n)?.truncation();
    let computed_gw: BTreeSet<Shape> = (0..table.degrees.len()).flat_map(|d| table.gw_shapes(d)).collect();
    let expected_gw: BTreeSet<Shape> = r.gw.iter().cloned().collect();
    let mut by_degree: BTreeMap<usize, Vec<Cycle>> = BTreeMap::new();
    for gen in &r.z {
        let terms: Vec<(&[usize], i64)> = gen.iter().map(|(c, rows)| (rows.as_slice(), *c)).collect();
        let c = Cycle::from_rows(Ring::Integers, r.twist, tr, &terms)?;
        let d = c.degree().ok_or_else(|| Error::InvalidArgument(format!("reference entry {c} is not homogeneous")))?;
        by_degree.entry(d).or_default().push(c);
    }
    let mut z_mismatches = Vec::new();
    for d in 0..table.degrees.len() {
        let expected = by_degree.remove(&d).unwrap_or_default();
        if !lattice_equal(&table.z_images(d), &expected, d)? {
            z_mismatches.push(d);
        }
    }
    z_mismatches.extend(by_degree.into_keys());
    Ok(ReferenceComparison { k: r.k, n: r.n, twist: r.twist, gw_equal: computed_gw == expected_gw, z_mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(tw: Twist, k: usize, n: usize, terms: &[(&[usize], i64)]) -> Cycle {
        Cycle::from_rows(Ring::Integers, tw, Truncation::boxed(k, n).unwrap(), terms).unwrap()
    }

    #[test]
    fn eta_class_examples() {
        let tr = Truncation::boxed(2, 4).unwrap();
        let u = Twist::Untwisted;
        let t = eta_class_of(&Tableau::untwisted(&[1]), tr, &[]).unwrap();
        assert_eq!(t.a(), &cyc(u, 2, 4, &[(&[1], 1)]));
        assert_eq!(t.b(), &cyc(u, 2, 4, &[(&[2], 1), (&[1, 1], 1)]));
        let t = eta_class_of(&Tableau::untwisted(&[1]), tr, &[2]).unwrap();
        assert_eq!(t.a(), &cyc(u, 2, 4, &[(&[1, 1], 1)]));
        assert_eq!(t.b(), &cyc(u, 2, 4, &[(&[2, 1], 1)]));
        let t = eta_class_of(&Tableau::twisted(&[]), tr, &[]).unwrap();
        assert_eq!(t.b(), &cyc(Twist::Twisted, 2, 4, &[(&[1], 1)]));
        assert!(matches!(eta_class_of(&Tableau::untwisted(&[]), tr, &[]), Err(Error::EvenTableau(_))));
        assert!(eta_class_of(&Tableau::untwisted(&[1]), tr, &[1]).is_err());
    }

    #[test]
    fn eta_mul_examples() {
        let tr = Truncation::boxed(2, 4).unwrap();
        let u = Twist::Untwisted;
        let t = eta_class_of(&Tableau::untwisted(&[1]), tr, &[]).unwrap();
        let sq = eta_mul(&t, &t).unwrap();
        assert_eq!(sq.a(), &cyc(u, 2, 4, &[(&[2], 1), (&[1, 1], 1)]));
        // 2σ_1(σ_2 + σ_11) = 4σ_21
        assert_eq!(sq.b(), &cyc(u, 2, 4, &[(&[2, 1], 4)]));
        assert_eq!(eta_mul(&EtaClass::identity(tr), &t).unwrap(), t);

        let zero = Cycle::zero(Ring::Integers, u, tr);
        let x = EtaClass::new(1, zero.clone(), cyc(u, 2, 4, &[(&[2], 2)])).unwrap();
        let y = EtaClass::new(0, zero.clone(), cyc(u, 2, 4, &[(&[1], 2)])).unwrap();
        let p = eta_mul(&x, &y).unwrap();
        assert!(p.a().is_zero() && p.b().is_zero());

        let other = EtaClass::identity(Truncation::boxed(2, 5).unwrap());
        assert!(eta_mul(&t, &other).is_err());
        assert_eq!(
            EtaClass::new(1, cyc(u, 2, 4, &[(&[1], 1)]), zero),
            Err(Error::EtaCondition)
        );
    }

    #[test]
    fn lattice_equal_examples() {
        let u = Twist::Untwisted;
        let a = [cyc(u, 2, 4, &[(&[1, 1], 2)]), cyc(u, 2, 4, &[(&[2], 1), (&[1, 1], 1)])];
        let b = [cyc(u, 2, 4, &[(&[2], 2)]), cyc(u, 2, 4, &[(&[2], 1), (&[1, 1], 1)])];
        assert!(lattice_equal(&a, &b, 2).unwrap());
        assert!(!lattice_equal(&[cyc(u, 2, 4, &[(&[1], 1)])], &[cyc(u, 2, 4, &[(&[1], 2)])], 1).unwrap());
        assert!(lattice_equal(&[], &[], 3).unwrap());
        assert!(lattice_equal(&a, &b, 1).is_err());
    }

    #[test]
    fn basis_gr24() {
        let t = chow_witt_basis(2, 4, Twist::Untwisted).unwrap();
        let gw: Vec<Shape> = (0..=4).flat_map(|d| t.gw_shapes(d)).collect();
        assert_eq!(gw, vec![Shape::empty(), Shape::from_rows(&[2, 2])]);
        let t = chow_witt_basis(2, 4, Twist::Twisted).unwrap();
        assert_eq!(t.gw_shapes(2), vec![Shape::from_rows(&[1, 1]), Shape::from_rows(&[2])]);
        let labels: Vec<String> = t.degrees[2].gw.iter().map(|g| g.witt.clone().unwrap().symbol).collect();
        assert_eq!(labels, vec!["λ(σ∅)·e_k", "λ(σ∅)·e⊥_{n-k}"]);
        assert!(chow_witt_basis(3, 6, Twist::Twisted).unwrap().degrees.iter().all(|e| e.gw.is_empty()));
    }

    #[test]
    fn orientation_label() {
        let g = Grassmannian::new(3, 6).unwrap();
        let w = witt_label(&Shape::from_rows(&[3, 1, 1]), g, Twist::Untwisted).unwrap();
        assert_eq!(w.family, "R");
        assert_eq!(w.preimage, Shape::empty());
        let w = witt_label(&Shape::from_rows(&[3, 3, 3]), g, Twist::Untwisted).unwrap();
        assert_eq!(w.preimage, Shape::from_rows(&[1]));
        let w = witt_label(&Shape::from_rows(&[2, 2]), g, Twist::Untwisted).unwrap();
        assert_eq!((w.family.as_str(), w.preimage), ("p", Shape::from_rows(&[1])));
    }

    #[test]
    fn rank_report_examples() {
        let r = rank_report(2, 4, Twist::Untwisted).unwrap();
        assert_eq!((r[2].gw_rank, r[2].e_dim, r[2].im_dim, r[2].ker_dim), (0, 0, 1, 1));
        let r = rank_report(3, 6, Twist::Untwisted).unwrap();
        assert_eq!(r[5].gw_rank, 1);
        for k in 0..=4 {
            for tw in [Twist::Untwisted, Twist::Twisted] {
                let r = rank_report(k, 4 + k % 2, tw).unwrap();
                assert!(r.iter().all(|x| x.consistent), "{k} {tw}");
            }
        }
    }

    #[test]
    fn reference_tables_match() {
        let tables = reference_tables();
        assert_eq!(tables.len(), 4);
        for r in &tables {
            let c = compare_with_reference(r).unwrap();
            assert!(c.matches(), "{c:?}");
        }
    }

    #[test]
    fn kernel_lattice_small() {
        for (k, n) in [(1, 2), (2, 4), (2, 5), (3, 6)] {
            for tw in [Twist::Untwisted, Twist::Twisted] {
                assert!(kernel_lattice_check(k, n, tw).unwrap(), "{k} {n} {tw}");
            }
        }
    }
}
