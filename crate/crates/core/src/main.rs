use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use qf_core::adconj::{adconj_abelianization, adconj_inn_image, adconj_presentation, stabilizer_probe};
use qf_core::coset::{build_coset_table_forced, CosetQuandle};
use qf_core::diagram::{parse_gauss, wirtinger_group, wirtinger_quandle, Diagram};
use qf_core::fp::todd_coxeter;
use qf_core::group::{validate_group, FiniteGroup};
use qf_core::invariants::{count_colorings, crosscheck_diagram};
use qf_core::io::{self, CosetSidecar, GroupFile, PresentationFile, QuandleFile};
use qf_core::limits::{DEFAULT_BUDGET, DEFAULT_ORDER_CAP, DEFAULT_TC_CAP};
use qf_core::quandle::{enumerate_quandles, validate_quandle, FiniteQuandle};
use qf_core::report::ValidationReport;
use qf_core::{Error, Result};

const EXIT_MISMATCH: u8 = 5;

#[derive(Parser)]
#[command(name = "qf", version, about = "Quandles, coset quandles and knot diagram invariants")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Node budget for backtracking searches.
    #[arg(long, global = true, env = "QF_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Maximum number of cosets defined during coset enumeration.
    #[arg(long, global = true, env = "QF_TC_CAP", default_value_t = DEFAULT_TC_CAP)]
    tc_cap: usize,

    /// Largest order accepted by `enumerate`.
    #[arg(long, global = true, env = "QF_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,

    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "QF_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a quandle or group file against its axioms.
    Validate { path: PathBuf },

    /// Build the coset quandle of a subgroup and a meridian.
    Coset {
        group: PathBuf,
        /// Subgroup generator: an element index, or an image list such as `1,0,2`.
        #[arg(long = "gen")]
        gens: Vec<String>,
        #[arg(long)]
        meridian: String,
        /// Build the table even if the meridian is not central and report what fails.
        #[arg(long, conflicts_with = "check")]
        force: bool,
        /// Report the action, stabilizer and Adconj image checks instead of the table.
        #[arg(long)]
        check: bool,
        /// Write the quandle here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the coset representatives; defaults to `<out>.cosets.json`.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },

    /// Count colorings of a diagram by a quandle.
    Color { diagram: PathBuf, quandle: PathBuf },

    /// Report on the group Adconj(Q).
    #[command(group(ArgGroup::new("mode").required(true).args(["abelianization", "inn", "present"])))]
    Adconj {
        quandle: PathBuf,
        #[arg(long)]
        abelianization: bool,
        #[arg(long)]
        inn: bool,
        #[arg(long)]
        present: bool,
    },

    /// Compare colorings by a conjugation quandle with meridian-constrained representations.
    Crosscheck {
        diagram: PathBuf,
        group: PathBuf,
        /// An element index, or an image list such as `1,0,2`.
        element: String,
    },

    /// List all quandles of order n up to isomorphism.
    Enumerate { n: usize },

    /// Print the Wirtinger presentations of a diagram.
    Wirtinger {
        diagram: PathBuf,
        /// Print the group presentation and peripheral data instead of the quandle one.
        #[arg(long)]
        group: bool,
    },

    /// Enumerate cosets of a subgroup of a finitely presented group.
    Cosets {
        presentation: PathBuf,
        /// Subgroup generator as space-separated tokens, e.g. `"a b^-1"`.
        #[arg(long = "sub")]
        subgroup: Vec<String>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(Error::from)
}

fn read_diagram(path: &Path) -> Result<Diagram> {
    parse_gauss(&read(path)?)
}

fn read_quandle(path: &Path) -> Result<FiniteQuandle> {
    io::quandle_from_json(&read(path)?)
}

fn read_group(path: &Path) -> Result<FiniteGroup> {
    io::group_from_json(&read(path)?)
}

/// An element index, or a permutation image list for permutation groups.
fn parse_element(g: &FiniteGroup, s: &str) -> Result<usize> {
    let s = s.trim();
    if s.contains(',') || s.starts_with('[') {
        let images = s
            .trim_matches(|c| c == '[' || c == ']')
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::MalformedInput(format!("`{s}` is not an image list")))?;
        return g
            .element_of_images(&images)
            .ok_or_else(|| Error::MalformedInput(format!("{images:?} is not an element of the group")));
    }
    let i: usize = s.parse().map_err(|_| Error::MalformedInput(format!("`{s}` is not an element")))?;
    if i >= g.order() {
        return Err(Error::MalformedInput(format!("element {i} is out of range for order {}", g.order())));
    }
    Ok(i)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("report serializes"));
}

fn print_validation(report: &ValidationReport, json: bool) {
    if json {
        print_json(report);
    } else if report.valid {
        println!("valid");
    } else {
        println!("invalid");
        for v in &report.violations {
            println!("  {:?}: witness {:?}", v.axiom, v.witness);
        }
    }
}

fn validate(path: &Path, json: bool) -> Result<u8> {
    let value: serde_json::Value = serde_json::from_str(&read(path)?)?;
    let report = if value.get("table").is_some() {
        let file: QuandleFile = serde_json::from_value(value)?;
        validate_quandle(file.checked_table()?)?
    } else if value.get("mult").is_some() {
        match serde_json::from_value::<GroupFile>(value)? {
            GroupFile::Table { order, mult } if order == mult.len() => validate_group(&mult)?,
            GroupFile::Table { order, mult } => {
                return Err(Error::MalformedTable(format!("order is {order} but the table has {} rows", mult.len())))
            }
            GroupFile::Permutations { .. } => unreachable!("has a mult key"),
        }
    } else if value.get("perm_gens").is_some() {
        // permutation generators always generate a group once they parse
        serde_json::from_value::<GroupFile>(value)?.into_group()?;
        ValidationReport { valid: true, violations: vec![] }
    } else {
        return Err(Error::MalformedInput("expected a quandle (`table`) or group (`mult`, `perm_gens`) file".into()));
    };
    print_validation(&report, json);
    Ok(if report.valid { 0 } else { 1 })
}

fn sidecar_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.cosets.json"))
}

#[allow(clippy::too_many_arguments)]
fn coset(
    cli: &Cli,
    group: &Path,
    gens: &[String],
    meridian: &str,
    force: bool,
    check: bool,
    out: Option<&Path>,
    sidecar: Option<&Path>,
) -> Result<u8> {
    let g = read_group(group)?;
    let gens = gens.iter().map(|s| parse_element(&g, s)).collect::<Result<Vec<_>>>()?;
    let p = g.subgroup_generated(&gens);
    let m = parse_element(&g, meridian)?;

    if force {
        let forced = build_coset_table_forced(&g, &p, m)?;
        let ok = forced.central && forced.representative_conflicts == 0 && forced.validation.valid;
        if cli.json {
            print_json(&forced);
        } else {
            println!("central: {}", forced.central);
            println!("representative conflicts: {}", forced.representative_conflicts);
            if let Some((a, b)) = forced.first_conflict {
                println!("first conflict: g = {}, h = {}", g.label(a), g.label(b));
            }
            print_validation(&forced.validation, false);
            println!("{}", serde_json::to_string(&forced.table).expect("table serializes"));
        }
        return Ok(if ok { 0 } else { 1 });
    }

    let cq = CosetQuandle::build(&g, &p, m)?;
    if check {
        let selfcheck = cq.theorem1_selfcheck();
        let probe = stabilizer_probe(&cq)?;
        let ok = selfcheck.passed() && probe.passed();
        if cli.json {
            print_json(&json!({ "selfcheck": selfcheck, "stabilizer_probe": probe, "passed": ok }));
        } else {
            for c in selfcheck.checks.iter().chain(&probe.checks) {
                println!("{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
            }
        }
        return Ok(if ok { 0 } else { 1 });
    }

    let quandle_json = io::quandle_to_json(cq.quandle());
    let sidecar_json = serde_json::to_string(&CosetSidecar::from(&cq))?;
    match out {
        Some(out) => {
            fs::write(out, &quandle_json)?;
            fs::write(sidecar.map(Path::to_path_buf).unwrap_or_else(|| sidecar_path(out)), &sidecar_json)?;
        }
        None => {
            println!("{quandle_json}");
            if let Some(s) = sidecar {
                fs::write(s, &sidecar_json)?;
            }
        }
    }
    Ok(0)
}

fn color(cli: &Cli, diagram: &Path, quandle: &Path) -> Result<u8> {
    let d = read_diagram(diagram)?;
    let q = read_quandle(quandle)?;
    let n = count_colorings(&wirtinger_quandle(&d), &q, cli.budget)?;
    if cli.json {
        print_json(&json!({ "colorings": n, "target_order": q.order(), "diagram": d.to_string() }));
    } else {
        println!("{n}");
    }
    Ok(0)
}

fn adconj(cli: &Cli, quandle: &Path, abelianization: bool, inn: bool) -> Result<u8> {
    let q = read_quandle(quandle)?;
    if abelianization {
        let a = adconj_abelianization(&q);
        if cli.json {
            print_json(&a);
        } else {
            let torsion: Vec<String> = a.torsion.iter().map(ToString::to_string).collect();
            println!("rank {}, torsion [{}]", a.rank, torsion.join(", "));
        }
    } else if inn {
        let g = adconj_inn_image(&q);
        let order = g.order()?;
        let orbits = q.orbits();
        if cli.json {
            print_json(&json!({ "order": order, "generators": g.generators(), "orbits": orbits }));
        } else {
            println!("order {order}");
            println!("orbits {orbits:?}");
        }
    } else {
        let ap = adconj_presentation(&q);
        print_json(&PresentationFile::from(&ap.presentation));
    }
    Ok(0)
}

fn crosscheck(cli: &Cli, diagram: &Path, group: &Path, element: &str) -> Result<u8> {
    let d = read_diagram(diagram)?;
    let g = read_group(group)?;
    let m = parse_element(&g, element)?;
    let report = crosscheck_diagram(&d, &g, m, cli.budget)?;
    if cli.json {
        print_json(&report);
    } else {
        let verdict = if report.matched { "match" } else { "MISMATCH" };
        println!("colorings {} reps {}: {verdict}", report.colorings, report.reps);
    }
    Ok(if report.matched { 0 } else { EXIT_MISMATCH })
}

fn enumerate(cli: &Cli, n: usize) -> Result<u8> {
    let qs = enumerate_quandles(n, cli.order_cap)?;
    let files: Vec<QuandleFile> = qs.iter().map(QuandleFile::from).collect();
    if cli.json {
        print_json(&files);
    } else {
        println!("{} quandle(s) of order {n}", files.len());
        for f in &files {
            println!("{}", serde_json::to_string(&f.table)?);
        }
    }
    Ok(0)
}

fn wirtinger(cli: &Cli, diagram: &Path, group: bool) -> Result<u8> {
    let d = read_diagram(diagram)?;
    if group {
        let (p, peripheral) = wirtinger_group(&d);
        let file = PresentationFile::from(&p);
        let longitude = peripheral.longitude.as_ref().map(|w| io::format_word(p.generators(), w));
        if cli.json {
            print_json(&json!({
                "presentation": file,
                "meridian": p.generators()[peripheral.meridian],
                "longitude": longitude,
            }));
        } else {
            for r in &file.relators {
                println!("{}", r.join(" "));
            }
            println!("meridian {}", p.generators()[peripheral.meridian]);
            if let Some(l) = longitude {
                println!("longitude {}", l.join(" "));
            }
        }
    } else {
        let q = wirtinger_quandle(&d);
        if cli.json {
            print_json(&q);
        } else {
            println!("{} generator(s)", q.generators);
            for r in &q.relations {
                let op = if r.sign > 0 { "^" } else { "^-" };
                println!("x{} = x{} {op} x{}", r.output, r.input, r.over);
            }
        }
    }
    Ok(0)
}

fn cosets(cli: &Cli, presentation: &Path, subgroup: &[String]) -> Result<u8> {
    let p = io::presentation_from_json(&read(presentation)?)?;
    let subgens = subgroup
        .iter()
        .map(|s| io::parse_word(p.generators(), &s.split_whitespace().collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let table = todd_coxeter(&p, &subgens, cli.tc_cap)?;
    let gens: Vec<_> = (0..p.generator_count()).map(|g| table.generator_permutation(g)).collect();
    if cli.json {
        print_json(&json!({ "index": table.index(), "generators": gens }));
    } else {
        println!("index {}", table.index());
        for (name, perm) in p.generators().iter().zip(&gens) {
            println!("{name}: {perm:?}");
        }
    }
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Validate { path } => validate(path, cli.json),
        Command::Coset { group, gens, meridian, force, check, out, sidecar } => {
            coset(cli, group, gens, meridian, *force, *check, out.as_deref(), sidecar.as_deref())
        }
        Command::Color { diagram, quandle } => color(cli, diagram, quandle),
        Command::Adconj { quandle, abelianization, inn, .. } => adconj(cli, quandle, *abelianization, *inn),
        Command::Crosscheck { diagram, group, element } => crosscheck(cli, diagram, group, element),
        Command::Enumerate { n } => enumerate(cli, *n),
        Command::Wirtinger { diagram, group } => wirtinger(cli, diagram, *group),
        Command::Cosets { presentation, subgroup } => cosets(cli, presentation, subgroup),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
