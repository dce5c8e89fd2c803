//! `mwsplit`: reproducible JSON/markdown reports on Grassmannians and
//! complete flags.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mwsplit::verify::{self, Bounds, Scope};
use mwsplit::{chow_witt, flag, motive, schubert, tableau, Error, Grassmannian, Tableau, Twist};

#[derive(Parser)]
#[command(name = "mwsplit", version, about = "Milnor-Witt motivic decompositions of Grassmannians and complete flags")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args)]
struct GrArgs {
    #[arg(short)]
    k: usize,
    #[arg(short)]
    n: usize,
    /// Use the twist `O(1)`.
    #[arg(long)]
    twist: bool,
}

impl GrArgs {
    fn twist(&self) -> Twist {
        if self.twist {
            Twist::Twisted
        } else {
            Twist::Untwisted
        }
    }

    fn params(&self) -> Value {
        json!({ "k": self.k, "n": self.n, "twist": self.twist() })
    }
}

#[derive(Args)]
struct GrOrFlag {
    #[arg(short, requires = "n", conflicts_with = "flag")]
    k: Option<usize>,
    #[arg(short, requires = "k")]
    n: Option<usize>,
    #[arg(long)]
    twist: bool,
    /// Complete flag variety `Fl(N)` instead of a Grassmannian.
    #[arg(long, value_name = "N", conflicts_with_all = ["n", "twist"])]
    flag: Option<usize>,
}

impl GrOrFlag {
    fn split(&self) -> Result<Target, Error> {
        match (self.flag, self.k, self.n) {
            (Some(n), _, _) => Ok(Target::Flag(n)),
            (None, Some(k), Some(n)) => Ok(Target::Grass(GrArgs { k, n, twist: self.twist })),
            _ => Err(Error::InvalidArgument("give -k and -n, or --flag N".into())),
        }
    }
}

enum Target {
    Grass(GrArgs),
    Flag(usize),
}

#[derive(Subcommand)]
enum Command {
    /// Tableaux by degree with their classification.
    Tableaux {
        #[command(flatten)]
        gr: GrArgs,
        /// Include the Sq2 matrices between consecutive degrees.
        #[arg(long)]
        sq2_matrices: bool,
    },
    /// Motivic decomposition, Witt weights and count vectors.
    Decompose(GrOrFlag),
    /// Additive Chow-Witt basis.
    ChowWitt(GrArgs),
    /// Ranks of Sq2 and dimensions of E-cohomology.
    ECohomology(GrOrFlag),
    /// Coinvariant algebra of the complete flag variety.
    Flag {
        #[arg(short)]
        n: usize,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long, default_value = "all")]
        scope: Scope,
        #[arg(long, default_value_t = Bounds::default().max_n)]
        max_n: usize,
        #[arg(long, default_value_t = Bounds::default().max_degree)]
        max_degree: usize,
        #[arg(long, default_value_t = Bounds::default().seed)]
        seed: u64,
    },
}

struct Outcome {
    command: &'static str,
    params: Value,
    result: Value,
    markdown: String,
    failures: Vec<String>,
}

fn tableaux(gr: &GrArgs, sq2_matrices: bool) -> Result<Outcome, Error> {
    let g = Grassmannian::new(gr.k, gr.n)?;
    let tw = gr.twist();
    let tr = g.truncation();
    let mut degrees = Vec::new();
    let mut md = "| d | shape | irredundant | full | even |\n|---|---|---|---|---|\n".to_string();
    for (d, ts) in g.tableaux(tw).iter().enumerate() {
        let mut rows = Vec::new();
        for t in ts {
            let c = tableau::classify(t, tr)?;
            let shapes = |v: Vec<Tableau>| v.into_iter().map(|t| t.shape).collect::<Vec<_>>();
            rows.push(json!({
                "shape": t.shape,
                "irredundant": c.irredundant,
                "full": c.full,
                "even": c.even,
                "add": shapes(tableau::add_one(t, tr)?),
                "remove": shapes(tableau::remove_one(t, tr)?),
            }));
            md.push_str(&format!("| {d} | {} | {} | {} | {} |\n", t.shape, c.irredundant, c.full, c.even));
        }
        degrees.push(json!({ "d": d, "tableaux": rows }));
    }
    let even: Vec<_> = tableau::even_tableaux(tr, tw, None)?.into_values().flatten().collect();
    let components = tableau::irredundant_components(tr, tw, None)?;
    let eta = tableau::eta_indices(tr, tw, None)?;
    let mut result = json!({
        "count": g.tableaux(tw).iter().map(Vec::len).sum::<usize>(),
        "degrees": degrees,
        "even": even,
        "components": components,
        "eta_indices": eta,
    });
    if sq2_matrices {
        let mats: Vec<Value> = (0..g.dim())
            .map(|d| {
                let m = schubert::Sq2Matrix::new(tr, tw, d);
                let rows: Vec<String> = (0..m.matrix.rows())
                    .map(|r| (0..m.matrix.cols()).map(|c| if m.matrix.get(r, c) { '1' } else { '0' }).collect())
                    .collect();
                json!({ "source_degree": d, "source": m.source, "target": m.target, "rows": rows })
            })
            .collect();
        result["sq2_matrices"] = json!(mats);
    }
    let even_md: Vec<String> = even.iter().map(ToString::to_string).collect();
    md.push_str(&format!("\neven: {{{}}}\n", even_md.join(", ")));
    Ok(Outcome { command: "tableaux", params: gr.params(), result, markdown: md, failures: vec![] })
}

fn decompose(args: &GrOrFlag) -> Result<Outcome, Error> {
    match args.split()? {
        Target::Flag(n) => {
            let m = motive::flag_motive(n)?;
            let result = json!({ "motive": m.to_json(), "e_dims": flag::e_flag_dims(n) });
            Ok(Outcome { command: "decompose", params: json!({ "flag": n }), result, markdown: m.to_markdown(), failures: vec![] })
        }
        Target::Grass(gr) => {
            let tw = gr.twist();
            let m = motive::decompose_grassmannian(gr.k, gr.n, tw)?;
            let mut result = json!({
                "motive": m.to_json(),
                "recursion": motive::recursion_items(gr.k, gr.n, tw)?,
                "witt_weight_constraints": motive::witt_weight_constraints(gr.k, gr.n, tw)?,
            });
            let mut md = m.to_markdown();
            if tw == Twist::Untwisted {
                let rows = motive::realization_report(gr.k, gr.n)?;
                md.push_str("\n| i | CH^i | free | 2-torsion | s = w + t + t' |\n|---|---|---|---|---|\n");
                for r in &rows {
                    md.push_str(&format!(
                        "| {} | {} | {} | {} | {} |\n",
                        r.degree, r.chow_rank, r.free_rank, r.torsion_rank, r.identity_holds
                    ));
                }
                result["realization"] = json!(rows);
            }
            Ok(Outcome { command: "decompose", params: gr.params(), result, markdown: md, failures: vec![] })
        }
    }
}

fn chow_witt_cmd(gr: &GrArgs) -> Result<Outcome, Error> {
    let t = chow_witt::chow_witt_basis(gr.k, gr.n, gr.twist())?;
    let ranks = chow_witt::rank_report(gr.k, gr.n, gr.twist())?;
    let mut result = t.to_json();
    result["ranks"] = json!(ranks);
    Ok(Outcome { command: "chow-witt", params: gr.params(), result, markdown: t.to_markdown(), failures: vec![] })
}

fn e_cohomology(args: &GrOrFlag) -> Result<Outcome, Error> {
    match args.split()? {
        Target::Flag(n) => {
            let dims = flag::e_flag_dims(n);
            let md = format!("E-dimensions of Fl({n}) by degree: {dims:?}\n");
            Ok(Outcome { command: "e-cohomology", params: json!({ "flag": n }), result: json!({ "e_dims": dims }), markdown: md, failures: vec![] })
        }
        Target::Grass(gr) => {
            let ranks = schubert::degree_ranks(Grassmannian::new(gr.k, gr.n)?, gr.twist())?;
            let mut md = "| d | tableaux | ker | im | E | even |\n|---|---|---|---|---|---|\n".to_string();
            for r in &ranks {
                md.push_str(&format!("| {} | {} | {} | {} | {} | {} |\n", r.degree, r.tableaux, r.ker_dim, r.im_dim, r.e_dim, r.even));
            }
            Ok(Outcome { command: "e-cohomology", params: gr.params(), result: json!({ "degrees": ranks }), markdown: md, failures: vec![] })
        }
    }
}

fn flag_cmd(n: usize) -> Result<Outcome, Error> {
    let gens: Vec<Value> = (1..=n / 2)
        .map(|a| {
            let t = flag::t_class(n, a)?;
            Ok(json!({ "a": a, "degree": flag::t_degree(n, a), "class": t.to_string() }))
        })
        .collect::<Result<_, Error>>()?;
    let exterior = flag::exterior_check(n)?;
    let result = json!({
        "coinvariant_dims": flag::coinvariant_dims(n),
        "e_dims": flag::e_flag_dims(n),
        "generators": gens,
        "exterior": exterior,
    });
    let mut md = format!("Fl({n}): coinvariant dims {:?}, E dims {:?}\n\n", flag::coinvariant_dims(n), flag::e_flag_dims(n));
    for g in &gens {
        md.push_str(&format!("- T_{} (degree {}): {}\n", g["a"], g["degree"], g["class"].as_str().unwrap_or("")));
    }
    md.push_str(&format!("\nexterior algebra on the T_a: {exterior}\n"));
    let failures = if exterior { vec![] } else { vec!["exterior check failed".into()] };
    Ok(Outcome { command: "flag", params: json!({ "n": n }), result, markdown: md, failures })
}

fn verify_cmd(scope: Scope, bounds: Bounds) -> Outcome {
    let r = verify::run(scope, bounds);
    let failures = r
        .checks
        .iter()
        .flat_map(|c| c.failures.iter().map(move |f| format!("{}: {f}", c.name)))
        .collect();
    Outcome {
        command: "verify",
        params: json!({ "scope": scope, "bounds": bounds }),
        result: json!({ "passed": r.passed(), "checks": r.checks }),
        markdown: r.to_markdown(),
        failures,
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Tableaux { gr, sq2_matrices } => tableaux(gr, *sq2_matrices),
        Command::Decompose(a) => decompose(a),
        Command::ChowWitt(gr) => chow_witt_cmd(gr),
        Command::ECohomology(a) => e_cohomology(a),
        Command::Flag { n } => flag_cmd(*n),
        Command::Verify { scope, max_n, max_degree, seed } => {
            Ok(verify_cmd(*scope, Bounds { max_n: *max_n, max_degree: *max_degree, seed: *seed }))
        }
    }
}

fn render(o: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let report = json!({
                "command": o.command,
                "params": o.params,
                "result": o.result,
                "version": mwsplit::VERSION,
            });
            serde_json::to_string_pretty(&report).expect("reports serialise") + "\n"
        }
        Format::Markdown => format!("## mwsplit {} {}\n\n{}", o.command, o.params, o.markdown),
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidGrassmannian { .. } | Error::InvalidArgument(_) | Error::MalformedShape(_) | Error::InadmissibleShape { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if is_usage_error(&e) { 2 } else { 1 });
        }
    };
    let text = render(&outcome, cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    for f in &outcome.failures {
        eprintln!("FAIL {f}");
    }
    if outcome.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
