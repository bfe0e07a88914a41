//! `freefusion`: fusion, lemma scans, decomposition reports and worked
//! examples for free products of fusion rings.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use freefusion::annular::{decomposition_report, pointed_positivity_check, pointed_summand_check, verify_lemma, Lemma};
use freefusion::gallery::{self, classify_conjugacy, pointed_cross_check, verify_morita_generation, Centralizer};
use freefusion::ncp::enumerate_ncps;
use freefusion::report::{verdicts_json, Status, SCHEMA_VERSION};
use freefusion::{Error, FreeProduct, FusionRing, Verdict};

const DEFAULT_SEED: u64 = 7;

#[derive(Parser, Debug)]
#[command(name = "freefusion", version, about = "Free products of fusion rings and annular algebra certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

/// Options shared by every command.
#[derive(Args, Debug, Clone)]
struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Include wall-clock timings (makes reports run-dependent).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the fusion ring axioms of a ring file or built-in ring.
    Validate { ring: String },
    /// Fuse two simples of one ring, or two words of a free product.
    Fuse {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: Option<String>,
        left: String,
        right: String,
    },
    /// Run lemma scans and the decomposition report on `C * D`.
    Verify {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        /// Lemma name or `all`.
        #[arg(long, default_value = "all")]
        lemma: String,
        #[arg(long, default_value_t = 6)]
        wmax: usize,
        #[arg(long, default_value_t = 8)]
        vmax: usize,
    },
    /// Support of the annular algebra split by weight type.
    Decompose {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 6)]
        wmax: usize,
        #[arg(long, default_value_t = 8)]
        vmax: usize,
    },
    /// Colored non-crossing partitions between two letter sequences.
    Ncp {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long, default_value = "")]
        bottom: String,
        #[arg(long, default_value = "")]
        top: String,
    },
    /// Worked examples.
    #[command(subcommand)]
    Examples(Example),
}

#[derive(Subcommand, Debug)]
enum Example {
    /// Free product of two finite groups against its conjugacy classes.
    Group {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// `WMAX VMAX`.
        #[arg(long, num_args = 2, value_names = ["WMAX", "VMAX"], default_values_t = [6, 8])]
        bounds: Vec<usize>,
    },
    /// Generation equalities for two Temperley-Lieb-Jones factors.
    FussCatalan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 6)]
        len: usize,
        /// Use untruncated rings on levels `n` and `m`.
        #[arg(long)]
        generic: bool,
    },
    /// Tube algebra of a finite group.
    Tube {
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Largest group order checked exhaustively.
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
}

/// A command failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_overflow() { 3 } else { 2 }, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Report text and exit code of a finished command.
struct Output {
    body: String,
    code: u8,
}

fn exit_for(verdicts: &[Verdict]) -> u8 {
    if verdicts.iter().any(|v| matches!(v.status, Status::Aborted | Status::Refused)) {
        3
    } else if verdicts.iter().all(Verdict::passed) {
        0
    } else {
        1
    }
}

fn load_ring(spec: &str, prefix: Option<&str>) -> Result<FusionRing, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{spec}: {e}")))?;
        let name = path.file_name().and_then(|s| s.to_str()).unwrap_or(spec);
        return Ok(FusionRing::from_json(name, &text)?);
    }
    if spec.contains('/') || spec.contains('.') {
        return Err(invalid(format!("{spec}: no such file")));
    }
    match (prefix, spec.strip_prefix("tlj:"), spec.strip_prefix("tlj-generic:")) {
        (Some(p), Some(n), _) => Ok(gallery::tlj_ring_with_prefix(n.parse().map_err(|_| invalid(format!("bad ring `{spec}`")))?, p)?),
        (Some(p), _, Some(n)) => {
            Ok(gallery::tlj_generic_with_prefix(n.parse().map_err(|_| invalid(format!("bad ring `{spec}`")))?, p)?)
        }
        _ => gallery::builtin_ring(spec).map_err(|e| match e {
            Error::UnknownLabel(_) => invalid(format!("`{spec}` is neither a ring file nor a built-in ring ({})", gallery::BUILTIN_HELP)),
            e => e.into(),
        }),
    }
}

fn load_pair(c: &str, d: &str) -> Result<FreeProduct, Failure> {
    let rc = load_ring(c, None)?;
    let rd = load_ring(d, if c == d { Some("g") } else { None })?;
    Ok(FreeProduct::new(rc, rd)?)
}

fn render(verdicts: &[Verdict], cfg: &RunConfig, extra_text: &str, extra_json: Option<(&str, Value)>) -> String {
    match cfg.format {
        Format::Text => {
            let mut s: String = verdicts.iter().map(|v| v.to_text(cfg.timing)).collect();
            s.push_str(extra_text);
            s
        }
        Format::Json => {
            let mut doc = verdicts_json(verdicts, cfg.timing);
            if let Some((k, v)) = extra_json {
                doc[k] = v;
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
        Format::Tsv => {
            let mut s = format!("{}\n", Verdict::tsv_header());
            for v in verdicts {
                let _ = writeln!(s, "{}", v.to_tsv_row());
            }
            s
        }
    }
}

fn validate(ring: &str, cfg: &RunConfig) -> Result<Output, Failure> {
    let r = load_ring(ring, None)?;
    let report = r.validate();
    let body = match cfg.format {
        Format::Text => report.to_string(),
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("json");
            v["schema"] = json!(SCHEMA_VERSION);
            v["valid"] = json!(report.is_valid());
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Tsv => {
            let mut s = String::from("ring\taxiom\twitness\tdetail\n");
            for v in &report.violations {
                let _ = writeln!(s, "{}\t{}\t{}\t{}", report.ring, v.axiom, v.witness.join(","), v.detail);
            }
            s
        }
    };
    Ok(Output { body, code: if report.is_valid() { 0 } else { 1 } })
}

fn fuse(c: &str, d: Option<&str>, left: &str, right: &str, cfg: &RunConfig) -> Result<Output, Failure> {
    let (shown_l, shown_r, shown) = match d {
        None => {
            let r = load_ring(c, None)?;
            let s = r.fuse_named(left, right)?;
            (left.to_string(), right.to_string(), r.format_sum(&s))
        }
        Some(d) => {
            let fp = load_pair(c, d)?;
            let (a, b) = (fp.word(left)?, fp.word(right)?);
            let s = fp.fuse_words(&a, &b)?;
            (fp.show(&a), fp.show(&b), fp.show_sum(&s))
        }
    };
    let body = match cfg.format {
        Format::Text => format!("{shown_l} ⊗ {shown_r} = {shown}\n"),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({"schema": SCHEMA_VERSION, "left": shown_l, "right": shown_r, "product": shown}))
                .expect("json")
        ),
        Format::Tsv => format!("left\tright\tproduct\n{shown_l}\t{shown_r}\t{shown}\n"),
    };
    Ok(Output { body, code: 0 })
}

fn verify(c: &str, d: &str, lemma: &str, wmax: usize, vmax: usize, cfg: &RunConfig) -> Result<Output, Failure> {
    let lemmas: Vec<Lemma> = if lemma == "all" { Lemma::ALL.to_vec() } else { vec![lemma.parse()?] };
    let fp = load_pair(c, d)?;
    let mut verdicts: Vec<Verdict> = lemmas.iter().map(|&l| verify_lemma(&fp, l, wmax, vmax)).collect();
    let mut code = exit_for(&verdicts);
    let (text, json) = if code == 3 || fp.is_truncated() {
        ("decomposition: skipped for truncated factors\n".to_string(), Value::Null)
    } else {
        match decomposition_report(&fp, wmax, vmax) {
            Ok(r) => (r.to_text(&fp), r.to_json(&fp)),
            Err(e) => {
                let mut v = Verdict::new("DECOMPOSITION", &fp.name(), &[("wmax", wmax), ("vmax", vmax)]).aborted(&e);
                v.note("decomposition report incomplete");
                verdicts.push(v);
                code = 3;
                (String::new(), Value::Null)
            }
        }
    };
    Ok(Output { body: render(&verdicts, cfg, &text, Some(("decomposition", json))), code })
}

fn decompose(c: &str, d: &str, wmax: usize, vmax: usize, cfg: &RunConfig) -> Result<Output, Failure> {
    let fp = load_pair(c, d)?;
    let r = decomposition_report(&fp, wmax, vmax)?;
    let body = match cfg.format {
        Format::Text => r.to_text(&fp),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&r.to_json(&fp)).expect("json")),
        Format::Tsv => r.to_tsv(&fp),
    };
    Ok(Output { body, code: 0 })
}

fn ncp(c: &str, d: &str, bottom: &str, top: &str, cfg: &RunConfig) -> Result<Output, Failure> {
    let fp = load_pair(c, d)?;
    let (sigma, tau) = (fp.parse_letters(bottom)?, fp.parse_letters(top)?);
    let all = enumerate_ncps(&fp, &sigma, &tau)?;
    let bound: u64 = all.iter().map(|x| x.weight()).sum();
    let body = match cfg.format {
        Format::Text => {
            let mut s = format!("{} partitions, spanning bound {bound}\n", all.len());
            for x in &all {
                let _ = writeln!(s, "  {x}  weights {:?}", x.weights);
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = all.iter().map(|x| json!({"blocks": x.serialize(), "weights": x.weights})).collect();
            let doc = json!({"schema": SCHEMA_VERSION, "count": all.len(), "spanning_bound": bound, "partitions": rows});
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
        Format::Tsv => {
            let mut s = String::from("blocks\tweight\n");
            for x in &all {
                let _ = writeln!(s, "{x}\t{}", x.weight());
            }
            s
        }
    };
    Ok(Output { body, code: 0 })
}

fn example_group(g: &str, h: &str, bounds: &[usize], cfg: &RunConfig) -> Result<Output, Failure> {
    let (gt, ht) = (gallery::builtin_group(g)?, gallery::builtin_group(h)?);
    let (wmax, vmax) = (bounds[0], bounds[1]);
    let verdict = pointed_cross_check(&gt, &ht, wmax, vmax)?;
    let conj = classify_conjugacy(&gt, &ht, wmax);
    let classes: Vec<Value> = conj
        .classes
        .iter()
        .map(|c| {
            let cent = match &c.centralizer {
                Centralizer::Whole => json!("whole"),
                Centralizer::Finite { elements, .. } => json!({"order": elements.len()}),
                Centralizer::Cyclic { generator } => json!({"generator": generator.show(&gt, &ht)}),
            };
            json!({
                "kind": c.kind.label(),
                "representative": c.representative.show(&gt, &ht),
                "members": c.members.len(),
                "centralizer": cent,
            })
        })
        .collect();
    let verdicts = [verdict];
    let body = render(&verdicts, cfg, &conj.to_text(&gt, &ht), Some(("conjugacy", Value::Array(classes))));
    Ok(Output { body, code: exit_for(&verdicts) })
}

fn example_fuss_catalan(n: usize, m: usize, len: usize, generic: bool, cfg: &RunConfig) -> Result<Output, Failure> {
    let (a, b) = if generic {
        (gallery::tlj_generic(n)?, gallery::tlj_generic_with_prefix(m, "g")?)
    } else {
        (gallery::tlj_ring(n)?, gallery::tlj_ring_with_prefix(m, "g")?)
    };
    let verdicts = [verify_morita_generation(&a, &b, len)?];
    Ok(Output { body: render(&verdicts, cfg, "", None), code: exit_for(&verdicts) })
}

fn example_tube(g: &str, samples: usize, bound: usize, cfg: &RunConfig) -> Result<Output, Failure> {
    let ring = gallery::group_ring(&gallery::builtin_group(g)?);
    let verdicts = [pointed_summand_check(&ring, bound)?, pointed_positivity_check(&ring, samples, cfg.seed)?];
    Ok(Output { body: render(&verdicts, cfg, "", None), code: exit_for(&verdicts) })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Validate { ring } => validate(ring, cfg),
        Command::Fuse { c, d, left, right } => fuse(c, d.as_deref(), left, right, cfg),
        Command::Verify { c, d, lemma, wmax, vmax } => verify(c, d, lemma, *wmax, *vmax, cfg),
        Command::Decompose { c, d, wmax, vmax } => decompose(c, d, *wmax, *vmax, cfg),
        Command::Ncp { c, d, bottom, top } => ncp(c, d, bottom, top, cfg),
        Command::Examples(Example::Group { g, h, bounds }) => example_group(g, h, bounds, cfg),
        Command::Examples(Example::FussCatalan { n, m, len, generic }) => example_fuss_catalan(*n, *m, *len, *generic, cfg),
        Command::Examples(Example::Tube { g, samples, bound }) => example_tube(g, *samples, *bound, cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = std::env::var("FREEFUSION_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.config.out {
                if let Err(e) = std::fs::write(path, &out.body) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", out.body);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
