//! The `daxcalc` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::disc::{normalize, ManifoldModel, SrData};
use crate::document::{
    from_json, parse_disc, parse_manifold, points_to_list, DiscJson, PointsJson, QueryJson,
    SessionJson, VerdictJson,
};
use crate::error::{Error, Result};
use crate::group::{Factor, GroupSpec};
use crate::invariant::{compare, phi};
use crate::kernel::reduce;
use crate::pairing::dax_value;
use crate::presets::PresetId;
use crate::text::parse_ringexpr;

#[derive(Debug, Parser)]
#[command(
    name = "daxcalc",
    version,
    about = "Dax invariants of discs in 4-manifolds"
)]
struct Cli {
    /// Emit one JSON document per result line.
    #[arg(long, global = true)]
    json: bool,
    /// Describe the manifold and decision rules on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ManifoldArgs {
    /// Built-in manifold id (see `daxcalc presets`).
    #[arg(long, conflicts_with = "manifold")]
    preset: Option<String>,
    /// Manifold JSON file.
    #[arg(long)]
    manifold: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the reduced invariant of each disc.
    Invariant {
        #[command(flatten)]
        m: ManifoldArgs,
        #[arg(long = "disc")]
        disc: Vec<PathBuf>,
        files: Vec<PathBuf>,
    },
    /// Compare two discs.
    Compare {
        #[command(flatten)]
        m: ManifoldArgs,
        #[arg(long = "disc")]
        disc: Vec<PathBuf>,
        files: Vec<PathBuf>,
    },
    /// Reduce ring elements modulo the Dax kernel.
    Reduce {
        #[command(flatten)]
        m: ManifoldArgs,
        #[arg(long = "element", allow_hyphen_values = true)]
        element: Vec<String>,
    },
    /// Normalize disc data.
    Normalize {
        #[command(flatten)]
        m: ManifoldArgs,
        #[arg(long = "disc")]
        disc: Vec<PathBuf>,
        files: Vec<PathBuf>,
    },
    /// Evaluate double-point lists.
    Pairing {
        #[command(flatten)]
        m: ManifoldArgs,
        files: Vec<PathBuf>,
    },
    /// List the built-in manifolds.
    Presets,
    /// Run every query of a session document.
    Run { session: PathBuf },
}

struct Ctx {
    json: bool,
    verbose: bool,
    lines: Vec<String>,
    notes: Vec<String>,
}

impl Ctx {
    fn emit(&mut self, text: String, value: Value) {
        self.lines
            .push(if self.json { value.to_string() } else { text });
    }

    fn note(&mut self, msg: String) {
        if self.verbose {
            self.notes.push(msg);
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::validation(path.display().to_string(), format!("cannot read: {e}")))?;
    String::from_utf8(bytes)
        .map_err(|e| Error::parse(e.utf8_error().valid_up_to(), "input is not UTF-8"))
}

fn load_manifold(args: &ManifoldArgs) -> Result<ManifoldModel> {
    match (&args.preset, &args.manifold) {
        (Some(id), _) => Ok(id.parse::<PresetId>()?.instantiate()),
        (None, Some(path)) => {
            parse_manifold(&read_file(path)?).map_err(|e| e.within(&path.display().to_string()))
        }
        (None, None) => Err(Error::validation(
            "manifold",
            "one of --preset or --manifold is required",
        )),
    }
}

fn load_discs(paths: &[PathBuf], spec: &GroupSpec) -> Result<Vec<SrData>> {
    paths
        .iter()
        .map(|p| parse_disc(&read_file(p)?, spec).map_err(|e| e.within(&p.display().to_string())))
        .collect()
}

pub fn describe_group(spec: &GroupSpec) -> String {
    if spec.is_trivial() {
        return "1".to_string();
    }
    spec.factors
        .iter()
        .map(|f| match f {
            Factor::Infinite { name } => format!("Z<{name}>"),
            Factor::Finite { name, n } => format!("Z/{n}<{name}>"),
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn describe_manifold(m: &ManifoldModel) -> String {
    format!(
        "manifold {}: pi_1 = {}, dax kernel {}",
        m.label,
        describe_group(&m.group),
        m.kernel.describe()
    )
}

fn invariant_line(ctx: &mut Ctx, d: &SrData, m: &ManifoldModel) -> Result<()> {
    let v = phi(d, m)?;
    let text = m.group.display_ring(&v).to_string();
    ctx.emit(text.clone(), json!({ "invariant": text }));
    Ok(())
}

fn compare_line(ctx: &mut Ctx, d1: &SrData, d2: &SrData, m: &ManifoldModel) -> Result<()> {
    let v = compare(d1, d2, m)?;
    ctx.note(format!("decided by rule {}", v.rule));
    let j = serde_json::to_value(VerdictJson::from(&v)).expect("verdict serializes");
    ctx.emit(v.to_string(), j);
    Ok(())
}

fn reduce_line(ctx: &mut Ctx, expr: &str, m: &ManifoldModel) -> Result<()> {
    let x = parse_ringexpr(expr, &m.group).map_err(|e| e.within("element"))?;
    let r = reduce(&x, &m.kernel, &m.group)?;
    let text = m.group.display_ring(&r).to_string();
    ctx.emit(text.clone(), json!({ "reduced": text }));
    Ok(())
}

fn normalize_line(ctx: &mut Ctx, d: &SrData, m: &ManifoldModel) -> Result<()> {
    let n = normalize(d, m)?;
    let j = serde_json::to_value(DiscJson::from_data(&n, &m.group)).expect("disc serializes");
    ctx.emit(m.group.display_disc(&n).to_string(), j);
    Ok(())
}

fn pairing_line(ctx: &mut Ctx, points: &PointsJson, m: &ManifoldModel) -> Result<()> {
    let list = points_to_list(&points.points, &m.group)?;
    let v = dax_value(&list, &m.group)?;
    let text = m.group.display_ring(&v.value).to_string();
    ctx.emit(
        format!("{text}  dropped: {}", v.dropped),
        json!({ "value": text, "dropped": v.dropped }),
    );
    Ok(())
}

fn two_discs(mut discs: Vec<SrData>) -> Result<(SrData, SrData)> {
    if discs.len() != 2 {
        return Err(Error::validation(
            "discs",
            format!("compare takes exactly two discs, got {}", discs.len()),
        ));
    }
    let d2 = discs.pop().expect("two");
    let d1 = discs.pop().expect("two");
    Ok((d1, d2))
}

fn run_session(ctx: &mut Ctx, text: &str) -> Result<()> {
    let session: SessionJson = from_json(text)?;
    let m = session
        .manifold
        .to_model()
        .map_err(|e| e.within("manifold"))?;
    ctx.note(describe_manifold(&m));
    let mut discs = std::collections::BTreeMap::new();
    for (name, dj) in &session.discs {
        let d = dj
            .to_data(&m.group)
            .map_err(|e| e.within(&format!("discs.{name}")))?;
        discs.insert(name.as_str(), d);
    }
    let lookup = |name: &str, i: usize| {
        discs.get(name).ok_or_else(|| {
            Error::validation(format!("queries[{i}]"), format!("undeclared disc {name:?}"))
        })
    };
    for (i, q) in session.queries.iter().enumerate() {
        let at = format!("queries[{i}]");
        match q {
            QueryJson::Invariant { disc } => invariant_line(ctx, lookup(disc, i)?, &m),
            QueryJson::Compare { discs: [a, b] } => {
                compare_line(ctx, lookup(a, i)?, lookup(b, i)?, &m)
            }
            QueryJson::Reduce { element } => reduce_line(ctx, element, &m),
            QueryJson::Normalize { disc } => normalize_line(ctx, lookup(disc, i)?, &m),
            QueryJson::Pairing { points } => pairing_line(
                ctx,
                &PointsJson {
                    points: points.clone(),
                },
                &m,
            ),
        }
        .map_err(|e| e.within(&at))?;
    }
    Ok(())
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Result<()> {
    match command {
        Command::Presets => {
            for p in PresetId::ALL {
                let m = p.instantiate();
                let group = describe_group(&m.group);
                let kernel = m.kernel.describe();
                ctx.emit(
                    format!("{p}  {}  pi_1 = {group}  kernel: {kernel}", p.manifold()),
                    json!({ "id": p.id(), "manifold": p.manifold(), "group": group, "kernel": kernel }),
                );
            }
            Ok(())
        }
        Command::Invariant { m, disc, files } => {
            let model = load_manifold(&m)?;
            ctx.note(describe_manifold(&model));
            let all: Vec<PathBuf> = disc.into_iter().chain(files).collect();
            if all.is_empty() {
                return Err(Error::validation("disc", "no disc given"));
            }
            for d in load_discs(&all, &model.group)? {
                invariant_line(ctx, &d, &model)?;
            }
            Ok(())
        }
        Command::Compare { m, disc, files } => {
            let model = load_manifold(&m)?;
            ctx.note(describe_manifold(&model));
            let all: Vec<PathBuf> = disc.into_iter().chain(files).collect();
            let (d1, d2) = two_discs(load_discs(&all, &model.group)?)?;
            compare_line(ctx, &d1, &d2, &model)
        }
        Command::Reduce { m, element } => {
            let model = load_manifold(&m)?;
            ctx.note(describe_manifold(&model));
            if element.is_empty() {
                return Err(Error::validation("element", "no element given"));
            }
            for e in &element {
                reduce_line(ctx, e, &model)?;
            }
            Ok(())
        }
        Command::Normalize { m, disc, files } => {
            let model = load_manifold(&m)?;
            ctx.note(describe_manifold(&model));
            let all: Vec<PathBuf> = disc.into_iter().chain(files).collect();
            if all.is_empty() {
                return Err(Error::validation("disc", "no disc given"));
            }
            for d in load_discs(&all, &model.group)? {
                normalize_line(ctx, &d, &model)?;
            }
            Ok(())
        }
        Command::Pairing { m, files } => {
            let model = load_manifold(&m)?;
            ctx.note(describe_manifold(&model));
            if files.is_empty() {
                return Err(Error::validation("points", "no double-point list given"));
            }
            for f in &files {
                let points: PointsJson =
                    from_json(&read_file(f)?).map_err(|e| e.within(&f.display().to_string()))?;
                pairing_line(ctx, &points, &model)
                    .map_err(|e| e.within(&f.display().to_string()))?;
            }
            Ok(())
        }
        Command::Run { session } => {
            let text = read_file(&session)?;
            run_session(ctx, &text).map_err(|e| e.within(&session.display().to_string()))
        }
    }
}

/// Run the command line with explicit output streams; returns the exit code.
/// Results go to `out` only when the whole command succeeds.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        verbose: cli.verbose,
        lines: Vec::new(),
        notes: Vec::new(),
    };
    let result = dispatch(&mut ctx, cli.command);
    for n in &ctx.notes {
        let _ = writeln!(err, "{n}");
    }
    match result {
        Ok(()) => {
            for l in &ctx.lines {
                let _ = writeln!(out, "{l}");
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
