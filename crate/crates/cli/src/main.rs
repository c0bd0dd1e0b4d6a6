//! `setadf`: solve, translate and query SETAF and ADF instances.
//!
//! Exit status: 0 success, 1 negative verdict, 2 usage, parse,
//! representability or size errors, 3 broken internal invariant.

use std::{fmt::Write as _, fs, io::Write as _, process::ExitCode, str::FromStr};

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use setadf_core::{
    int_to_lab,
    io::{
        format_labellings, parse_instance, write_adf, write_setaf, Instance, InstanceKind,
        LabellingDocument,
    },
    setaf_sem,
    signatures::{check_signature, delta_classify, delta_shape_check, realize},
    translation::{
        normalize, prune_to_sfadf, setadf_to_setaf, setaf_to_setadf, verify_correspondence,
        SetadfView,
    },
    Adf, Error, LabellingSet, Semantics, Setaf,
};

#[derive(Parser)]
#[command(
    name = "setadf",
    version,
    about = "Three-valued semantics for SETAFs and ADFs"
)]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Setaf,
    Adf,
}

impl From<Kind> for InstanceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Setaf => InstanceKind::Setaf,
            Kind::Adf => InstanceKind::Adf,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Setaf2adf,
    Adf2setaf,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the labellings (or interpretations) of an instance.
    Solve {
        #[arg(long, value_parser = Semantics::from_str)]
        sem: Semantics,
        #[arg(long)]
        input: String,
        /// Print a JSON labelling document.
        #[arg(long)]
        json: bool,
        /// Override kind detection.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Translate between the SETAF and the ADF format.
    Translate {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        direction: Option<Direction>,
        /// Rewrite conditions into negative CNF and drop redundant links.
        #[arg(long)]
        normalize: bool,
    },
    /// Classify every link of an ADF.
    Links {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Decide whether a labelling set is a SETAF signature member.
    CheckSignature {
        #[arg(long, value_parser = Semantics::from_str)]
        sem: Semantics,
        #[arg(long)]
        labs: String,
    },
    /// Build a SETAF with exactly the given labellings.
    Realize {
        #[arg(long, value_parser = Semantics::from_str)]
        sem: Semantics,
        #[arg(long)]
        labs: String,
        /// Re-enumerate the result and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Check whether a support-free ADF's interpretations escape SETADFs.
    Delta {
        #[arg(long, value_parser = Semantics::from_str)]
        sem: Semantics,
        #[arg(long)]
        input: String,
        /// Print an equivalent SETADF when there is one.
        #[arg(long)]
        convert: bool,
    },
    /// Compare SETAF labellings with the interpretations of the associated ADF.
    VerifyCorrespondence {
        #[arg(long)]
        input: String,
    },
}

enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(String, ExitCode), Failure>;

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {path}: {e}")))
}

fn load(path: &str, kind: Option<Kind>) -> Result<Instance, Failure> {
    let text = read(path)?;
    Ok(parse_instance(&text, kind.map(Into::into), path)?.body)
}

fn load_labs(path: &str) -> Result<LabellingSet, Failure> {
    Ok(LabellingDocument::from_json(&read(path)?)?.to_set()?)
}

fn as_adf(instance: Instance) -> Adf {
    match instance {
        Instance::Adf(d) => d,
        Instance::Setaf(f) => setaf_to_setadf(&f).into_adf(),
    }
}

fn ok(out: String) -> Outcome {
    Ok((out, ExitCode::SUCCESS))
}

fn verdict_exit(positive: bool) -> ExitCode {
    if positive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn internal(what: &str) -> Failure {
    Failure::Core(Error::Internal(what.to_string()))
}

fn solve(sem: Semantics, input: &str, json: bool, kind: Option<Kind>) -> Outcome {
    let set = match load(input, kind)? {
        Instance::Setaf(f) => setaf_sem::enumerate(&f, sem)?,
        Instance::Adf(d) => {
            let ints = d.enumerate(sem)?;
            LabellingSet::new(ints.arguments().clone(), ints.iter().map(int_to_lab))?
        }
    };
    if json {
        ok(LabellingDocument::from_set(&set, Some(sem)).to_json() + "\n")
    } else {
        ok(format_labellings(&set))
    }
}

fn translate(input: &str, direction: Option<Direction>, normalize_first: bool) -> Outcome {
    let kind = direction.map(|d| match d {
        Direction::Setaf2adf => Kind::Setaf,
        Direction::Adf2setaf => Kind::Adf,
    });
    match load(input, kind)? {
        Instance::Setaf(f) => {
            let mut view = setaf_to_setadf(&f);
            if normalize_first {
                view = prune_to_sfadf(&view).view;
            }
            ok(write_adf(view.adf()))
        }
        Instance::Adf(d) => {
            let view = if normalize_first {
                prune_to_sfadf(&normalize(&d)?).view
            } else {
                SetadfView::from_adf(&d)?
            };
            ok(write_setaf(&setadf_to_setaf(&view)))
        }
    }
}

fn links(input: &str, kind: Option<Kind>) -> Outcome {
    let d = as_adf(load(input, kind)?);
    let mut out = String::new();
    for (b, a, t) in d.links() {
        writeln!(out, "{b} -> {a} : {t}").unwrap();
    }
    ok(out)
}

fn check(sem: Semantics, labs: &str) -> Outcome {
    let l = load_labs(labs)?;
    let verdict = check_signature(&l, sem)?;
    let mut out = String::new();
    if verdict.necessary_only {
        out.push_str(
            "necessary-only: conditions are necessary, acceptance does not imply realizability\n",
        );
    }
    writeln!(out, "{verdict}").unwrap();
    for v in verdict.violations.iter().skip(1) {
        writeln!(out, "also violates {v}").unwrap();
    }
    Ok((out, verdict_exit(verdict.accepted)))
}

fn realize_cmd(sem: Semantics, labs: &str, verify: bool) -> Outcome {
    let l = load_labs(labs)?;
    let f: Setaf = realize(&l, sem, verify)?;
    ok(write_setaf(&f))
}

fn delta(sem: Semantics, input: &str, convert: bool) -> Outcome {
    let d = as_adf(load(input, None)?);
    let verdict = delta_classify(&d, sem)?;
    let mut out = String::new();
    writeln!(out, "in_delta: {}", verdict.in_delta).unwrap();
    if let Some(w) = &verdict.witness {
        writeln!(out, "witness: {w}").unwrap();
    }
    if verdict.in_delta && matches!(sem, Semantics::Stb | Semantics::Mod | Semantics::Prf) {
        if !delta_shape_check(&d, sem)? {
            return Err(internal(
                "an in-Δ set for stb, mod or prf must be a single interpretation",
            ));
        }
        writeln!(out, "single: true").unwrap();
    }
    if convert {
        match &verdict.converted {
            Some(view) => out.push_str(&write_adf(view.adf())),
            None if !verdict.in_delta => {
                writeln!(out, "% no SETADF conversion found for {sem}").unwrap()
            }
            None => {}
        }
    }
    Ok((out, verdict_exit(!verdict.in_delta)))
}

fn correspondence(input: &str) -> Outcome {
    let f = match load(input, None)? {
        Instance::Setaf(f) => f,
        Instance::Adf(d) => setadf_to_setaf(&SetadfView::from_adf(&d)?),
    };
    let mut out = String::new();
    let mut all = true;
    for sem in Semantics::SETAF {
        let same = verify_correspondence(&f, sem)?;
        all &= same;
        writeln!(out, "{sem}: {}", if same { "ok" } else { "MISMATCH" }).unwrap();
    }
    if !all {
        print!("{out}");
        return Err(internal("labellings and interpretations differ"));
    }
    ok(out)
}

fn run(cli: Cli) -> Outcome {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Solve {
            sem,
            input,
            json,
            kind,
        } => solve(sem, &input, json, kind),
        Command::Translate {
            input,
            direction,
            normalize,
        } => translate(&input, direction, normalize),
        Command::Links { input, kind } => links(&input, kind),
        Command::CheckSignature { sem, labs } => check(sem, &labs),
        Command::Realize { sem, labs, verify } => realize_cmd(sem, &labs, verify),
        Command::Delta {
            sem,
            input,
            convert,
        } => delta(sem, &input, convert),
        Command::VerifyCorrespondence { input } => correspondence(&input),
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            eprintln!("error[usage]: {}", one_line(first));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(Failure::Core(e)) => {
            eprintln!("error[{}]: {}", e.code(), one_line(&e.to_string()));
            match e {
                Error::Internal(_) => ExitCode::from(3),
                Error::Rejected(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error[io]: {}", one_line(&msg));
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error[usage]: {}", one_line(&msg));
            ExitCode::from(2)
        }
    }
}
