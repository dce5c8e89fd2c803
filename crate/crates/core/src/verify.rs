//! Invariant suites run by `mwsplit verify`.
//!
//! Each check walks a bounded family of cases and records the failing ones.
//! Checks run in parallel; the report is sorted by check name.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chow_witt::{self, EtaClass};
use crate::error::{Error, Result};
use crate::flag;
use crate::gf2::{span_rank, BitVector};
use crate::motive::{self, SummandKind};
use crate::schubert::{self, Cycle, Ring, Sq2Matrix};
use crate::symfunc::{self, CoeffSeries, SchurCombo};
use crate::tableau::{self, Grassmannian, Shape, Tableau, Truncation, Twist};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Tableau,
    Schubert,
    Motive,
    ChowWitt,
    Symfunc,
    Flag,
    All,
}

impl Scope {
    pub const ALL: [Scope; 6] = [Scope::Tableau, Scope::Schubert, Scope::Motive, Scope::ChowWitt, Scope::Symfunc, Scope::Flag];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Tableau => "tableau",
            Scope::Schubert => "schubert",
            Scope::Motive => "motive",
            Scope::ChowWitt => "chow-witt",
            Scope::Symfunc => "symfunc",
            Scope::Flag => "flag",
            Scope::All => "all",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::ALL
            .into_iter()
            .chain([Scope::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scope {s:?}")))
    }
}

/// Size limits for the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest `n` of `Gr(k,n)` (and of `Fl(n)`, capped at 6).
    pub max_n: usize,
    /// Largest degree for the untruncated polynomial checks.
    pub max_degree: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_n: 8, max_degree: 10, seed: 0x5eed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub scope: Scope,
    pub bounds: Bounds,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "### verify --scope {} (max_n {}, max_degree {})\n\n| check | cases | result |\n|---|---|---|\n",
            self.scope, self.bounds.max_n, self.bounds.max_degree
        );
        for c in &self.checks {
            let r = if c.passed() { "pass".to_string() } else { format!("FAIL: {}", c.failures.join("; ")) };
            s.push_str(&format!("| {} | {} | {} |\n", c.name, c.cases, r));
        }
        s
    }
}

type Check = fn(&Bounds) -> CheckResult;

/// Runs a closure over cases in parallel; failures are kept in case order.
fn run_cases<T: Sync>(name: &str, cases: &[T], f: impl Fn(&T) -> std::result::Result<(), String> + Sync) -> CheckResult {
    let failures: Vec<String> = cases.par_iter().filter_map(|c| f(c).err()).collect();
    CheckResult { name: name.into(), cases: cases.len(), failures }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

/// `(k, n, twist)` for `0 <= k <= n <= max_n`.
pub fn grassmannian_cases(max_n: usize) -> Vec<(usize, usize, Twist)> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            for tw in [Twist::Untwisted, Twist::Twisted] {
                out.push((k, n, tw));
            }
        }
    }
    out
}

/// Coefficients of the Gaussian binomial `[n choose k]_q`, by the recursion
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn gaussian_binomial(k: usize, n: usize) -> Vec<usize> {
    if k > n {
        return vec![];
    }
    if k == 0 || k == n {
        return vec![1];
    }
    let a = gaussian_binomial(k - 1, n - 1);
    let b = gaussian_binomial(k, n - 1);
    let mut out = vec![0; k * (n - k) + 1];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i + k] += x;
    }
    out
}

fn label(k: usize, n: usize, tw: Twist) -> String {
    format!("Gr({k},{n}) {tw}")
}

// ---- tableau ----

fn tableau_closed_form(b: &Bounds) -> CheckResult {
    run_cases("tableau.even_closed_form", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        let tr = Truncation::Box { k, n };
        for t in (Grassmannian { k, n }).tableaux(tw).into_iter().flatten() {
            let c = tableau::classify(&t, tr).map_err(err_str)?;
            ensure(c.even == tableau::even_closed_form(&t, tr), || format!("{} {}", label(k, n, tw), t.shape))?;
        }
        Ok(())
    })
}

fn tableau_counts(b: &Bounds) -> CheckResult {
    run_cases("tableau.gaussian_counts", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        let counts: Vec<usize> = Grassmannian { k, n }.tableaux(tw).iter().map(Vec::len).collect();
        ensure(counts == gaussian_binomial(k, n), || label(k, n, tw))
    })
}

fn tableau_eta_identity(b: &Bounds) -> CheckResult {
    run_cases("tableau.even_plus_twice_eta", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        let tr = Truncation::Box { k, n };
        let even: usize = tableau::even_tableaux(tr, tw, None).map_err(err_str)?.values().map(Vec::len).sum();
        let eta = tableau::eta_indices(tr, tw, None).map_err(err_str)?.len();
        let total: usize = Grassmannian { k, n }.tableaux(tw).iter().map(Vec::len).sum();
        ensure(even + 2 * eta == total, || label(k, n, tw))
    })
}

fn shapes(list: &[&[usize]]) -> BTreeSet<Shape> {
    list.iter().map(|r| Shape::from_rows(r)).collect()
}

fn even_set(k: usize, n: usize, tw: Twist) -> Result<BTreeSet<Shape>> {
    Ok(tableau::even_tableaux(Truncation::Box { k, n }, tw, None)?.into_values().flatten().collect())
}

/// The even sets of `Gr(2,4)` and `Gr(3,6)` in both twists.
pub fn small_even_sets_hold() -> Result<bool> {
    Ok(even_set(2, 4, Twist::Untwisted)? == shapes(&[&[], &[2, 2]])
        && even_set(3, 6, Twist::Untwisted)? == shapes(&[&[], &[2, 2], &[3, 1, 1], &[3, 3, 3]])
        && even_set(2, 4, Twist::Twisted)? == shapes(&[&[2], &[1, 1]])
        && even_set(3, 6, Twist::Twisted)?.is_empty())
}

fn tableau_small_sets(_: &Bounds) -> CheckResult {
    run_cases("tableau.small_even_sets", &[()], |_| ensure(small_even_sets_hold().map_err(err_str)?, || "mismatch".into()))
}

// ---- schubert ----

/// `dim Ker = dim Im + #even`, `Im ∩ span(even) = 0` and `E = #even` in
/// every degree.
pub fn sq2_rank_identities(k: usize, n: usize, tw: Twist) -> Result<bool> {
    let g = Grassmannian::new(k, n)?;
    let tr = g.truncation();
    for d in 0..=g.dim() {
        let out = Sq2Matrix::new(tr, tw, d);
        let ker = out.source.len() - out.rank();
        let incoming: Vec<BitVector> = if d == 0 {
            Vec::new()
        } else {
            let m = Sq2Matrix::new(tr, tw, d - 1);
            (0..m.matrix.cols()).map(|c| m.matrix.column(c)).collect()
        };
        let im = span_rank(out.source.len(), &incoming);
        let even: Vec<usize> = (0..out.source.len())
            .filter(|&i| tableau::classify(&Tableau::new(out.source[i].clone(), tw), tr).map(|c| c.even).unwrap_or(false))
            .collect();
        let mut joint = incoming;
        for &i in &even {
            let mut v = BitVector::zeros(out.source.len());
            v.set(i, true);
            joint.push(v);
        }
        let independent = span_rank(out.source.len(), &joint) == im + even.len();
        if ker != im + even.len() || !independent || schubert::e_dimension(tr, tw, d) != even.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn schubert_ranks(b: &Bounds) -> CheckResult {
    run_cases("schubert.sq2_ranks", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        ensure(sq2_rank_identities(k, n, tw).map_err(err_str)?, || label(k, n, tw))
    })
}

fn schubert_square_zero(b: &Bounds) -> CheckResult {
    run_cases("schubert.sq2_squares_to_zero", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        let tr = Truncation::Box { k, n };
        for t in (Grassmannian { k, n }).tableaux(tw).into_iter().flatten() {
            let c = Cycle::sigma(Ring::Mod2, tw, tr, t.shape.clone()).map_err(err_str)?;
            ensure(schubert::sq2(&schubert::sq2(&c)).is_zero(), || format!("{} {}", label(k, n, tw), t.shape))?;
        }
        Ok(())
    })
}

fn schubert_split(b: &Bounds) -> CheckResult {
    run_cases("schubert.ker_im_split", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        let g = Grassmannian { k, n };
        for d in 0..=g.dim() {
            let s = schubert::ker_im_split(g.truncation(), tw, d).map_err(err_str)?;
            ensure(s.verified, || format!("{} degree {d}", label(k, n, tw)))?;
        }
        Ok(())
    })
}

fn schubert_giambelli(_: &Bounds) -> CheckResult {
    run_cases("schubert.square_of_even_row", &[1usize, 2, 3], |&j| {
        ensure(schubert::giambelli_identity_check(j).map_err(err_str)?, || format!("j = {j}"))
    })
}

// ---- motive ----

/// Rank, count and Witt-weight consistency of the decomposition of
/// `Gr(k,n)`. Returns the list of failed sub-checks.
pub fn motive_consistency(k: usize, n: usize, tw: Twist) -> Result<Vec<&'static str>> {
    let g = Grassmannian::new(k, n)?;
    let d = motive::decompose_grassmannian(k, n, tw)?.unshifted();
    let tableaux = g.tableaux(tw);
    let mut bad = Vec::new();
    if (0..=g.dim()).any(|j| d.chow_rank(j) != tableaux[j].len()) {
        bad.push("chow_rank");
    }
    let c = d.counts();
    match motive::eta_from_counts(&c.s, &c.w) {
        Ok(t) if t == c.t => {}
        _ => bad.push("eta_from_counts"),
    }
    let get = |v: &Vec<i64>, j: usize| v.get(j).copied().unwrap_or(0);
    if (0..c.s.len()).any(|j| get(&c.s, j) != get(&c.w, j) + get(&c.t, j) + if j > 0 { get(&c.t, j - 1) } else { 0 }) {
        bad.push("cell_identity");
    }
    if !motive::witt_weight_constraints(k, n, tw)?.iter().all(|r| r.holds) {
        bad.push("witt_weights");
    }
    if !motive::recursion_check(k, n, tw)? {
        bad.push("recursion");
    }
    if tw == Twist::Untwisted && !motive::realization_report(k, n)?.iter().all(|r| r.identity_holds) {
        bad.push("realization");
    }
    Ok(bad)
}

fn motive_suite(b: &Bounds) -> CheckResult {
    run_cases("motive.grassmannian_consistency", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        let bad = motive_consistency(k, n, tw).map_err(err_str)?;
        ensure(bad.is_empty(), || format!("{}: {}", label(k, n, tw), bad.join(",")))
    })
}

// ---- chow-witt ----

fn cw_kernel_lattice(b: &Bounds) -> CheckResult {
    run_cases("chow_witt.kernel_lattice", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        ensure(chow_witt::kernel_lattice_check(k, n, tw).map_err(err_str)?, || label(k, n, tw))
    })
}

fn cw_ranks(b: &Bounds) -> CheckResult {
    run_cases("chow_witt.rank_report", &grassmannian_cases(b.max_n), |&(k, n, tw)| {
        let r = chow_witt::rank_report(k, n, tw).map_err(err_str)?;
        ensure(r.iter().all(|x| x.consistent), || label(k, n, tw))
    })
}

fn cw_reference(_: &Bounds) -> CheckResult {
    run_cases("chow_witt.reference_tables", &chow_witt::reference_tables(), |r| {
        let c = chow_witt::compare_with_reference(r).map_err(err_str)?;
        ensure(c.matches(), || format!("{c:?}"))
    })
}

/// A random eta class of degree `d`: an integral combination of the basic
/// classes of degree `d` plus `(2x, 2y)` noise.
pub fn random_eta_class(g: Grassmannian, tw: Twist, d: usize, rng: &mut impl Rng) -> Result<EtaClass> {
    let tr = g.truncation();
    let mut a = Cycle::zero(Ring::Integers, tw, tr);
    let mut b = a.clone();
    for e in tableau::eta_indices(tr, tw, Some(d))?.into_iter().filter(|e| e.shape.degree() == d) {
        let t = chow_witt::eta_class_of(&Tableau::new(e.root, tw), tr, &e.positions)?;
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        a = a.add(&t.a().scale(&c))?;
        b = b.add(&t.b().scale(&c))?;
    }
    for (target, deg) in [(&mut a, d), (&mut b, d + 1)] {
        for s in schubert::shapes_of_degree(tr, deg) {
            let c = BigInt::from(2 * rng.gen_range(-1i64..=1));
            *target = target.add(&Cycle::from_terms(Ring::Integers, tw, tr, [(s, c)])?)?;
        }
    }
    EtaClass::new(d, a, b)
}

/// Identity, associativity and the product formula on random triples.
pub fn eta_ring_axioms(g: Grassmannian, trials: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tr = g.truncation();
    let one = EtaClass::identity(tr);
    for _ in 0..trials {
        let pick = |rng: &mut ChaCha8Rng| {
            let tw = if rng.gen_bool(0.5) { Twist::Twisted } else { Twist::Untwisted };
            let d = rng.gen_range(0..=g.dim());
            random_eta_class(g, tw, d, rng)
        };
        let (u, v, w) = (pick(&mut rng)?, pick(&mut rng)?, pick(&mut rng)?);
        if chow_witt::eta_mul(&one, &u)? != u || chow_witt::eta_mul(&u, &one)? != u {
            return Ok(false);
        }
        let left = chow_witt::eta_mul(&chow_witt::eta_mul(&u, &v)?, &w)?;
        let right = chow_witt::eta_mul(&u, &chow_witt::eta_mul(&v, &w)?)?;
        if left != right {
            return Ok(false);
        }
        let p = chow_witt::eta_mul(&u, &v)?;
        let b = schubert::product(u.b(), v.a())?.add(&schubert::product(u.a(), v.b())?)?;
        if p.a() != &schubert::product(u.a(), v.a())? || p.b() != &b || p.twist != u.twist.compose(v.twist) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cw_eta_ring(b: &Bounds) -> CheckResult {
    let cases: Vec<(usize, usize)> =
        (1..=b.max_n.min(6)).flat_map(|n| (0..=n).map(move |k| (k, n))).collect();
    run_cases("chow_witt.eta_ring_axioms", &cases, |&(k, n)| {
        let seed = b.seed ^ ((k as u64) << 8 | n as u64);
        ensure(eta_ring_axioms(Grassmannian { k, n }, 8, seed).map_err(err_str)?, || format!("Gr({k},{n})"))
    })
}

// ---- symfunc ----

fn symfunc_cases(b: &Bounds, max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n.min(b.max_n)).flat_map(|n| (0..=b.max_degree).map(move |d| (n, d))).collect()
}

fn symfunc_closed_form(b: &Bounds) -> CheckResult {
    run_cases("symfunc.sq2_closed_form", &symfunc_cases(b, 5), |&(n, d)| {
        for s in symfunc::partitions_with_parts_at_most(d, n) {
            let basis = SchurCombo::basis(Ring::Mod2, n, s.clone());
            let derived = symfunc::sq2_poly(&basis).map_err(err_str)?;
            ensure(derived == symfunc::sq2_closed_form(&s, n), || format!("n {n} {s}"))?;
            ensure(symfunc::sq2_poly(&derived).map_err(err_str)?.is_zero(), || format!("Sq2 Sq2 n {n} {s}"))?;
        }
        Ok(())
    })
}

fn symfunc_split(b: &Bounds) -> CheckResult {
    run_cases("symfunc.ker_im_split", &symfunc_cases(b, 4), |&(n, d)| {
        ensure(symfunc::ker_im_split_poly(n, d).verified, || format!("n {n} degree {d}"))
    })
}

fn symfunc_inversion(b: &Bounds) -> CheckResult {
    let seeds: Vec<u64> = (0..100).map(|i| b.seed.wrapping_add(i)).collect();
    run_cases("symfunc.inversion_identities", &seeds, |&seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(0..=4usize);
        let m = rng.gen_range(0..=4usize);
        let mut series = |len: usize| CoeffSeries::new((0..len).map(|_| BigInt::from(rng.gen_range(-5i64..=5))));
        let (f, g) = (series(k), series(m));
        ensure(symfunc::inversion_identities(&f, &g, 8), || format!("seed {seed}"))
    })
}

fn symfunc_lr_support(_: &Bounds) -> CheckResult {
    let mut cases = Vec::new();
    for d in 0..=5 {
        for s in symfunc::partitions_with_parts_at_most(d, d) {
            for n in 0..=6 {
                for k in 0..=n {
                    cases.push((s.clone(), k, n));
                }
            }
        }
    }
    run_cases("symfunc.lr_support", &cases, |(s, k, n)| {
        ensure(symfunc::lr_support_check(s, *k, *n).map_err(err_str)?, || format!("{s} in ({k},{n})"))
    })
}

// ---- flag ----

/// Coefficients of `Π_a (1 + q^{deg T_a})`.
pub fn exterior_dims(n: usize) -> Vec<usize> {
    let mut p = vec![1usize];
    for a in 1..=n / 2 {
        let deg = flag::t_degree(n, a);
        let mut next = vec![0; p.len() + deg];
        for (i, &c) in p.iter().enumerate() {
            next[i] += c;
            next[i + deg] += c;
        }
        p = next;
    }
    p
}

fn pad(mut v: Vec<usize>, len: usize) -> Vec<usize> {
    v.resize(len.max(v.len()), 0);
    v
}

/// All flag checks for one `n`; returns the failed sub-checks.
pub fn flag_consistency(n: usize) -> Result<Vec<&'static str>> {
    let mut bad = Vec::new();
    let top = flag::top_degree(n) + 1;
    let dims = flag::e_flag_dims(n);
    if pad(dims.clone(), top) != pad(exterior_dims(n), top) {
        bad.push("e_dims");
    }
    let q: Vec<usize> = motive::q_factorial(n).into_iter().map(|x| x as usize).collect();
    if flag::coinvariant_dims(n) != q {
        bad.push("coinvariant_dims");
    }
    for a in 1..=n / 2 {
        if !flag::sq2_flag(&flag::t_class(n, a)?).is_zero() {
            bad.push("t_class");
        }
    }
    if !flag::exterior_check(n)? {
        bad.push("exterior");
    }
    let m = motive::flag_motive(n)?;
    let c = m.counts();
    let get = |v: &Vec<i64>, j: usize| v.get(j).copied().unwrap_or(0);
    if (0..c.s.len()).any(|j| get(&c.s, j) != get(&c.w, j) + get(&c.t, j) + if j > 0 { get(&c.t, j - 1) } else { 0 }) {
        bad.push("cell_identity");
    }
    if (0..top).any(|j| m.count(SummandKind::Unit, j) != dims[j]) {
        bad.push("witt_ranks");
    }
    Ok(bad)
}

fn flag_suite(b: &Bounds) -> CheckResult {
    let cases: Vec<usize> = (1..=b.max_n.min(6)).collect();
    run_cases("flag.consistency", &cases, |&n| {
        let bad = flag_consistency(n).map_err(err_str)?;
        ensure(bad.is_empty(), || format!("n {n}: {}", bad.join(",")))
    })
}

fn flag_square_zero(b: &Bounds) -> CheckResult {
    let cases: Vec<usize> = (1..=b.max_n.min(6)).collect();
    run_cases("flag.sq2_squares_to_zero", &cases, |&n| {
        for d in 0..=flag::top_degree(n) {
            for a in flag::staircase_basis(n, d) {
                let c = flag::FlagClass::monomial(n, &a);
                ensure(flag::sq2_flag(&flag::sq2_flag(&c)).is_zero(), || format!("n {n} {c}"))?;
            }
        }
        Ok(())
    })
}

fn checks(scope: Scope) -> Vec<Check> {
    match scope {
        Scope::Tableau => vec![tableau_closed_form, tableau_counts, tableau_eta_identity, tableau_small_sets],
        Scope::Schubert => vec![schubert_ranks, schubert_square_zero, schubert_split, schubert_giambelli],
        Scope::Motive => vec![motive_suite],
        Scope::ChowWitt => vec![cw_kernel_lattice, cw_ranks, cw_reference, cw_eta_ring],
        Scope::Symfunc => vec![symfunc_closed_form, symfunc_split, symfunc_inversion, symfunc_lr_support],
        Scope::Flag => vec![flag_suite, flag_square_zero],
        Scope::All => Scope::ALL.into_iter().flat_map(checks).collect(),
    }
}

/// Runs every check of `scope` within `bounds`.
pub fn run(scope: Scope, bounds: Bounds) -> VerifyReport {
    let mut results: Vec<CheckResult> = checks(scope).par_iter().map(|c| c(&bounds)).collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    VerifyReport { scope, bounds, checks: results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomial_small() {
        assert_eq!(gaussian_binomial(2, 4), vec![1, 1, 2, 1, 1]);
        assert_eq!(gaussian_binomial(0, 0), vec![1]);
    }

    #[test]
    fn scope_parsing() {
        assert_eq!("chow-witt".parse::<Scope>().unwrap(), Scope::ChowWitt);
        assert!("everything".parse::<Scope>().is_err());
    }

    #[test]
    fn small_run_passes() {
        let b = Bounds { max_n: 4, max_degree: 4, seed: 1 };
        for s in Scope::ALL {
            let r = run(s, b);
            assert!(r.passed(), "{}", r.to_markdown());
        }
    }

    #[test]
    fn exterior_dims_match_examples() {
        assert_eq!(exterior_dims(4), vec![1, 0, 0, 2, 0, 0, 1]);
    }
}
