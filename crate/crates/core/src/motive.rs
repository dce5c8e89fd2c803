//! Split Milnor-Witt motives at the point: lists of `Z((i))` and
//! `Z/η((i))` summands, their count vectors, Witt weights and the
//! recursions between Grassmannians.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{self, Grassmannian, Tableau, Twist};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SummandKind {
    /// `Z((i)) = Z(i)[2i]`
    Unit,
    /// `Z/η((i))`
    EtaCone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Summand {
    pub kind: SummandKind,
    pub weight: usize,
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SummandKind::Unit => write!(f, "Z(({}))", self.weight),
            SummandKind::EtaCone => write!(f, "Z/η(({}))", self.weight),
        }
    }
}

/// `s`, `w`, `t` indexed by weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountVectors {
    pub s: Vec<i64>,
    pub w: Vec<i64>,
    pub t: Vec<i64>,
}

/// A multiset of summands with a description of what it decomposes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotiveDecomposition {
    pub object: String,
    pub twist: Twist,
    pub label: String,
    /// Weight shift already applied (1 for Thom spaces of `O(1)`).
    pub thom_shift: usize,
    pub notes: Vec<String>,
    summands: BTreeMap<Summand, usize>,
}

impl MotiveDecomposition {
    pub fn new(object: impl Into<String>, twist: Twist, label: impl Into<String>) -> Self {
        MotiveDecomposition {
            object: object.into(),
            twist,
            label: label.into(),
            thom_shift: 0,
            notes: Vec::new(),
            summands: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, kind: SummandKind, weight: usize) {
        self.push_many(kind, weight, 1);
    }

    pub fn push_many(&mut self, kind: SummandKind, weight: usize, count: usize) {
        if count > 0 {
            *self.summands.entry(Summand { kind, weight }).or_default() += count;
        }
    }

    /// Summands with multiplicities, sorted by kind then weight.
    pub fn summands(&self) -> impl Iterator<Item = (Summand, usize)> + '_ {
        self.summands.iter().map(|(s, c)| (*s, *c))
    }

    /// Summands as a flat list, sorted by weight then kind.
    pub fn summand_list(&self) -> Vec<Summand> {
        let mut v: Vec<Summand> = self.summands().flat_map(|(s, c)| std::iter::repeat_n(s, c)).collect();
        v.sort_by_key(|s| (s.weight, s.kind));
        v
    }

    pub fn count(&self, kind: SummandKind, weight: usize) -> usize {
        self.summands.get(&Summand { kind, weight }).copied().unwrap_or(0)
    }

    pub fn total(&self, kind: SummandKind) -> usize {
        self.summands().filter(|(s, _)| s.kind == kind).map(|(_, c)| c).sum()
    }

    /// Rank of the Chow group in weight `j`; a cone at `i` counts at `i`
    /// and `i + 1`.
    pub fn chow_rank(&self, j: usize) -> usize {
        let eta_prev = if j > 0 { self.count(SummandKind::EtaCone, j - 1) } else { 0 };
        self.count(SummandKind::Unit, j) + self.count(SummandKind::EtaCone, j) + eta_prev
    }

    /// One past the highest weight with a nonzero Chow rank.
    pub fn length(&self) -> usize {
        self.summands()
            .map(|(s, _)| match s.kind {
                SummandKind::Unit => s.weight + 1,
                SummandKind::EtaCone => s.weight + 2,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn counts(&self) -> CountVectors {
        let len = self.length();
        CountVectors {
            s: (0..len).map(|j| self.chow_rank(j) as i64).collect(),
            w: (0..len).map(|j| self.count(SummandKind::Unit, j) as i64).collect(),
            t: (0..len).map(|j| self.count(SummandKind::EtaCone, j) as i64).collect(),
        }
    }

    /// Every weight raised by `m`.
    pub fn shifted(&self, m: usize) -> MotiveDecomposition {
        let mut out = MotiveDecomposition { summands: BTreeMap::new(), ..self.clone() };
        for (s, c) in self.summands() {
            out.push_many(s.kind, s.weight + m, c);
        }
        out
    }

    /// The decomposition before the Thom shift, indexed like the Chow groups
    /// of the underlying variety.
    pub fn unshifted(&self) -> MotiveDecomposition {
        let mut out = MotiveDecomposition { summands: BTreeMap::new(), thom_shift: 0, ..self.clone() };
        for (s, c) in self.summands() {
            out.push_many(s.kind, s.weight - self.thom_shift, c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let summands: Vec<serde_json::Value> = self
            .summands()
            .map(|(s, c)| serde_json::json!({ "kind": s.kind, "weight": s.weight, "count": c }))
            .collect();
        serde_json::json!({
            "object": self.object,
            "twist": self.twist,
            "label": self.label,
            "thom_shift": self.thom_shift,
            "summands": summands,
            "witt_weights": witt_weights(self),
            "counts": self.counts(),
            "notes": self.notes,
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("### {} ({})\n\n", self.object, self.twist);
        out.push_str("| weight | Z((i)) | Z/η((i)) | s | w | t |\n|---|---|---|---|---|---|\n");
        let c = self.counts();
        for j in 0..self.length() {
            out.push_str(&format!(
                "| {j} | {} | {} | {} | {} | {} |\n",
                self.count(SummandKind::Unit, j),
                self.count(SummandKind::EtaCone, j),
                c.s[j],
                c.w[j],
                c.t[j]
            ));
        }
        out.push_str(&format!("\nWitt weights: {:?}\n", witt_weights(self)));
        for n in &self.notes {
            out.push_str(&format!("\n_{n}_\n"));
        }
        out
    }
}

impl fmt::Display for MotiveDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = self.summand_list();
        if list.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = list.iter().map(Summand::to_string).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Splitting of `Z(Gr(k,n))` (untwisted) or `Th(O(1))` (twisted, weights
/// shifted by one).
pub fn decompose_grassmannian(k: usize, n: usize, twist: Twist) -> Result<MotiveDecomposition> {
    let g = Grassmannian::new(k, n)?;
    let tr = g.truncation();
    let shift = usize::from(twist.is_twisted());
    let (object, label) = match twist {
        Twist::Untwisted => (format!("Z({g})"), "even tableaux and eta indices".to_string()),
        Twist::Twisted => (format!("Th(O_{g}(1))"), "even tableaux and eta indices, Thom shifted".to_string()),
    };
    let mut d = MotiveDecomposition::new(object, twist, label);
    d.thom_shift = shift;
    for t in tableau::enumerate(tr, twist, None)?.into_iter().flatten() {
        if tableau::classify(&t, tr)?.even {
            d.push(SummandKind::Unit, t.degree() + shift);
        }
    }
    for e in tableau::eta_indices(tr, twist, None)? {
        d.push(SummandKind::EtaCone, e.shape.degree() + shift);
    }
    if twist.is_twisted() {
        d.notes.push("weights include the +1 Thom shift".into());
    }
    Ok(d)
}

pub fn witt_weights(d: &MotiveDecomposition) -> BTreeSet<usize> {
    d.summands().filter(|(s, _)| s.kind == SummandKind::Unit).map(|(s, _)| s.weight).collect()
}

/// `t_j = Σ_{i ≤ j} (-1)^i (s_{j-i} - w_{j-i})`.
///
/// Fails when some `t_j` is negative or a cone would sit above the top
/// weight of `s`, since no split motive has such counts.
pub fn eta_from_counts(s: &[i64], w: &[i64]) -> Result<Vec<i64>> {
    if w.len() > s.len() && w[s.len()..].iter().any(|&x| x != 0) {
        return Err(Error::InconsistentCounts("w is longer than s".into()));
    }
    let diff = |i: usize| s.get(i).copied().unwrap_or(0) - w.get(i).copied().unwrap_or(0);
    let t: Vec<i64> = (0..s.len())
        .map(|j| (0..=j).map(|i| if i % 2 == 0 { diff(j - i) } else { -diff(j - i) }).sum())
        .collect();
    if let Some(j) = t.iter().position(|&x| x < 0) {
        return Err(Error::InconsistentCounts(format!("t_{j} = {} < 0", t[j])));
    }
    if t.last().is_some_and(|&x| x != 0) {
        return Err(Error::InconsistentCounts("cone above the top weight".into()));
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationRow {
    pub degree: usize,
    pub chow_rank: i64,
    pub free_rank: i64,
    pub torsion_rank: i64,
    pub identity_holds: bool,
}

/// Ranks of `H^i(X(R), Z)` (free part `w_i`, 2-torsion `t_{i-1}`) next to
/// `CH^i`, with the check `s_i = w_i + t_i + t_{i-1}`.
pub fn realization_report(k: usize, n: usize) -> Result<Vec<RealizationRow>> {
    let g = Grassmannian::new(k, n)?;
    let d = decompose_grassmannian(k, n, Twist::Untwisted)?;
    let c = d.counts();
    let tableaux = g.tableaux(Twist::Untwisted);
    Ok((0..=g.dim())
        .map(|i| {
            let get = |v: &Vec<i64>, j: usize| v.get(j).copied().unwrap_or(0);
            let s = tableaux[i].len() as i64;
            let w = get(&c.w, i);
            let t = get(&c.t, i);
            let t_prev = if i > 0 { get(&c.t, i - 1) } else { 0 };
            RealizationRow { degree: i, chow_rank: s, free_rank: w, torsion_rank: t_prev, identity_holds: s == w + t + t_prev }
        })
        .collect())
}

type Multiset = BTreeMap<(SummandKind, i64), usize>;

fn to_multiset(d: &MotiveDecomposition, shift: i64) -> Multiset {
    let mut m = Multiset::new();
    for (s, c) in d.summands() {
        *m.entry((s.kind, s.weight as i64 + shift)).or_default() += c;
    }
    m
}

fn grass(k: i64, n: i64, twist: Twist, shift: i64) -> Result<Multiset> {
    match Grassmannian::try_signed(k, n) {
        None => Ok(Multiset::new()),
        Some(g) => Ok(to_multiset(&decompose_grassmannian(g.k, g.n, twist)?, shift)),
    }
}

/// `Z(Gr(k,n))/η((m))`: one cone per Schubert cell.
fn cells_mod_eta(k: i64, n: i64, shift: i64) -> Multiset {
    let mut m = Multiset::new();
    if let Some(g) = Grassmannian::try_signed(k, n) {
        for t in g.tableaux(Twist::Untwisted).into_iter().flatten() {
            *m.entry((SummandKind::EtaCone, t.degree() as i64 + shift)).or_default() += 1;
        }
    }
    m
}

fn union(parts: &[Multiset]) -> Multiset {
    let mut out = Multiset::new();
    for p in parts {
        for (k, c) in p {
            *out.entry(*k).or_default() += c;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionItem {
    pub item: u8,
    pub holds: bool,
}

/// Evaluates every recursion that applies to `(k, n, twist)`, `n > 0`.
/// Grassmannians with indices out of range contribute nothing.
pub fn recursion_items(k: usize, n: usize, twist: Twist) -> Result<Vec<RecursionItem>> {
    let g = Grassmannian::new(k, n)?;
    let lhs = to_multiset(&decompose_grassmannian(g.k, g.n, twist)?, 0);
    let (k, n) = (k as i64, n as i64);
    let mut out = Vec::new();
    if n == 0 {
        // the point is the base case
        return Ok(out);
    }
    let mut check = |item: u8, rhs: Multiset| out.push(RecursionItem { item, holds: rhs == lhs });
    match twist {
        Twist::Twisted => {
            if k % 2 == 1 && n % 2 == 0 {
                check(
                    1,
                    union(&[
                        grass(k - 2, n - 2, Twist::Twisted, 2 * (n - k))?,
                        grass(k, n - 2, Twist::Twisted, 0)?,
                        cells_mod_eta(k - 1, n - 2, n - k),
                    ]),
                );
            }
            if (n - k) % 2 == 0 {
                check(2, union(&[grass(k, n - 1, Twist::Twisted, 0)?, grass(k - 1, n - 1, Twist::Untwisted, n - k + 1)?]));
            }
            if k % 2 == 0 && n % 2 == 1 {
                check(3, union(&[grass(k - 1, n - 1, Twist::Twisted, 0)?, grass(k, n - 1, Twist::Untwisted, k + 1)?]));
            }
        }
        Twist::Untwisted => {
            if (n - k) % 2 == 1 {
                check(4, union(&[grass(k, n - 1, Twist::Untwisted, 0)?, grass(k - 1, n - 1, Twist::Twisted, n - k - 1)?]));
            }
            if (n - k) % 2 == 0 {
                check(5, union(&[grass(k - 1, n - 1, Twist::Untwisted, 0)?, grass(k, n - 1, Twist::Twisted, k - 1)?]));
            }
        }
    }
    Ok(out)
}

/// True iff every applicable recursion holds.
pub fn recursion_check(k: usize, n: usize, twist: Twist) -> Result<bool> {
    Ok(recursion_items(k, n, twist)?.iter().all(|r| r.holds))
}

/// The Witt-weight containments for `Gr(k,n)`, one entry per applicable
/// item.
pub fn witt_weight_constraints(k: usize, n: usize, twist: Twist) -> Result<Vec<RecursionItem>> {
    let d = decompose_grassmannian(k, n, twist)?;
    let ww = witt_weights(&d);
    let within = |residues: &[usize]| ww.iter().all(|w| residues.iter().any(|r| w % 4 == r % 4));
    let mut out = Vec::new();
    match twist {
        Twist::Twisted => {
            if k % 2 == 1 && n % 2 == 0 {
                out.push(RecursionItem { item: 1, holds: ww.is_empty() });
            }
            if (n - k) % 2 == 0 {
                let holds = if k % 2 == 0 { within(&[n - k + 1, k + 1]) } else { within(&[n - k + 1]) };
                out.push(RecursionItem { item: 2, holds });
            }
            if k % 2 == 0 && n % 2 == 1 {
                out.push(RecursionItem { item: 3, holds: within(&[k + 1]) });
            }
        }
        Twist::Untwisted => {
            if (n - k) % 2 == 1 {
                let holds = if k % 2 == 0 { within(&[0]) } else { within(&[0, n - 1]) };
                out.push(RecursionItem { item: 4, holds });
            }
            if (n - k) % 2 == 0 {
                out.push(RecursionItem { item: 5, holds: within(&[0]) });
            }
        }
    }
    Ok(out)
}

/// Coefficients of `[n]_q! = Π_{i ≤ n} (1 + q + .. + q^{i-1})`.
pub fn q_factorial(n: usize) -> Vec<i64> {
    let mut p = vec![1i64];
    for i in 1..=n {
        let mut next = vec![0i64; p.len() + i - 1];
        for (a, &c) in p.iter().enumerate() {
            for b in 0..i {
                next[a + b] += c;
            }
        }
        p = next;
    }
    p
}

/// Degrees of the exterior generators for `Fl(n)`: `4a - 1`, and `n - 1`
/// for `a = n/2` when `n` is even.
pub fn flag_generator_degrees(n: usize) -> Vec<usize> {
    (1..=n / 2).map(|a| if n % 2 == 0 && a == n / 2 { n - 1 } else { 4 * a - 1 }).collect()
}

/// Splitting of the complete flag variety `Fl(n)`. Unit weights are the
/// subset sums of the generator degrees (empty subset included); cones are
/// filled in from the Chow ranks.
pub fn flag_motive(n: usize) -> Result<MotiveDecomposition> {
    if n == 0 {
        return Err(Error::InvalidArgument("flag variety needs n >= 1".into()));
    }
    let degs = flag_generator_degrees(n);
    let s = q_factorial(n);
    let mut w = vec![0i64; s.len()];
    for mask in 0u32..(1 << degs.len()) {
        let weight: usize = degs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, d)| d).sum();
        w[weight] += 1;
    }
    let t = eta_from_counts(&s, &w)?;
    let mut d = MotiveDecomposition::new(format!("Z(Fl({n}))"), Twist::Untwisted, "exterior generators and Chow ranks");
    for (j, (&wj, &tj)) in w.iter().zip(&t).enumerate() {
        d.push_many(SummandKind::Unit, j, wj as usize);
        d.push_many(SummandKind::EtaCone, j, tj as usize);
    }
    d.notes.push("the unit summand of weight 0 (empty set of generators) is included".into());
    Ok(d)
}

/// Tableau count of `Gr(k,n)` in each degree, the classical Chow ranks.
pub fn chow_ranks(g: Grassmannian) -> Vec<usize> {
    g.tableaux(Twist::Untwisted).iter().map(Vec::len).collect()
}

/// Number of cones contributed by the component of an irredundant,
/// non-full root: `2^{|A(Λ)| - 1}`.
pub fn cones_per_root(root: &Tableau, g: Grassmannian) -> Result<usize> {
    let a = tableau::addable_positions(root, g.truncation())?;
    if a.is_empty() {
        return Err(Error::EvenTableau(format!("{root:?}")));
    }
    Ok(1 << (a.len() - 1))
}
