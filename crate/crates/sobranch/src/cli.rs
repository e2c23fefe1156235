//! Argument parsing and dispatch. Every subcommand calls one library
//! operation and prints JSON (default) or a table.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sobranch_core::oracle::Suite;
use sobranch_core::{
    bilinear_gate, branch_enumerate, classify, distinguished_subgroup, distinguishing_chain,
    enhanced_from_langlands, finite_dim_branch, gp_tempered_check, hasse_sequence, height,
    infchar_finite_dim, infchar_principal_series, is_aq_lambda, langlands_from_enhanced,
    minimal_k_type_trivial_rho, multiplicity, pairing, period_value, sb_diagram, signature,
    standard_sequence, weyl_dim, EnhancedParam, Error, GroupTag, PairingConvention, RepDescriptor,
    Sign, Weight,
};

use crate::config::OracleConfig;
use crate::json::{
    AqJson, ChainJson, DiagramJson, DistinguishedJson, EnhancedJson, FiniteDimJson, InfCharJson,
    KTypeJson, MemberJson, PairingJson, PeriodJson, SelftestJson, SuiteReportJson,
};
use crate::parse::{self, InputError};
use crate::render;
use crate::report::run_timed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONSTRAINT: i32 = 3;
pub const EXIT_SUITE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "sobranch",
    version,
    about = "Branching laws for SO(N,1) ↓ SO(N-1,1)"
)]
pub struct Cli {
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Print aligned tables instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupArg {
    /// Group, written SO(N,1).
    #[arg(long, value_parser = parse::group)]
    group: GroupTag,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RepArg {
    /// Langlands data, e.g. "sigma=2,0;delta=+;lambda=0".
    #[arg(long)]
    langlands: Option<String>,
    /// Enhanced θ-stable parameter, e.g. "1,1,0;h=1;sig=-".
    #[arg(long)]
    enhanced: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All members of the block of a θ-weight.
    Classify {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        weight: String,
    },
    /// Langlands data ↔ enhanced parameter.
    Convert {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        rep: RepArg,
    },
    /// Height, by interval inequalities and by sorted insertion.
    Height {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        rep: RepArg,
    },
    Signature {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        rep: RepArg,
    },
    /// Infinitesimal character of a finite-dimensional weight or of Langlands data.
    Infchar {
        #[command(flatten)]
        g: GroupArg,
        #[arg(
            long,
            conflicts_with = "langlands",
            required_unless_present = "langlands"
        )]
        weight: Option<String>,
        #[arg(long)]
        langlands: Option<String>,
    },
    /// Weyl dimension of the compact SO(N)-module with the given weight.
    Dim {
        #[arg(long = "n")]
        big_n: u32,
        #[arg(long)]
        weight: String,
        /// Sign of the last entry for even N.
        #[arg(long, default_value = "+", value_parser = parse::sign)]
        chirality: Sign,
    },
    /// Hasse sequence (or standard sequence with --standard).
    Hasse {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value = "+", value_parser = parse::sign)]
        sig: Sign,
        #[arg(long)]
        standard: bool,
    },
    /// Targets of a parameter in the subgroup, or the multiplicity for one target.
    Branch {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        enhanced: String,
        #[arg(long, conflicts_with = "pi", required_unless_present = "pi")]
        list: bool,
        /// Enhanced parameter over the subgroup.
        #[arg(long)]
        pi: Option<String>,
    },
    /// Restriction of a finite-dimensional representation.
    BranchFd {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value = "+", value_parser = parse::sign)]
        sig: Sign,
    },
    /// Symmetry breaking diagram between two standard sequences.
    Diagram {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        weight: String,
        /// θ-weight for the subgroup.
        #[arg(long)]
        sub_weight: String,
        #[arg(long, default_value = "+", value_parser = parse::sign)]
        sig: Sign,
    },
    /// Tempered Gross–Prasad check: principal series of SO(2m+1,1) against
    /// a discrete series of SO(2m,1).
    GpCheck {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        langlands: String,
        /// Langlands data over the subgroup.
        #[arg(long)]
        pi_langlands: String,
    },
    /// Exact period value for Π_{i,+} with trivial infinitesimal character.
    Period {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
    },
    /// Minimal K-type Λ^i(C^{n+1}) ⊠ 1.
    Ktype {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
    },
    /// A_q(λ) data and the subgroup it is distinguished by.
    Distinguished {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        enhanced: String,
    },
    /// Chain of multiplicity-one steps down to a character of the target.
    Chain {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        enhanced: String,
        #[arg(long, value_parser = parse::group)]
        target: GroupTag,
        #[arg(long, default_value = "+", value_parser = parse::sign)]
        psi: Sign,
    },
    /// Bilinear forms on (g,K)-cohomology.
    Cohomology {
        #[command(subcommand)]
        mode: CohomologyMode,
    },
    /// Run the oracle suites.
    Selftest {
        /// TOML file with grid bounds.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Worker threads per suite.
        #[arg(long)]
        jobs: Option<usize>,
        /// Run only these suites.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Include elapsed times (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    Complementary,
    SameIndex,
}

#[derive(Subcommand, Debug)]
enum CohomologyMode {
    /// Trivial infinitesimal character, pair (SO(n+1,1), SO(n,1)).
    Pairing {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
        #[arg(long, value_parser = parse::sign)]
        delta: Sign,
        #[arg(long)]
        j: u32,
        #[arg(long, value_enum, default_value = "complementary")]
        convention: Convention,
    },
    /// Gate conditions for principal series with coefficients V, V'.
    Gate {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        enhanced: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        v_prime: String,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Syntax(s) => Failure::Usage(s),
            InputError::Core(e) => Failure::Core(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Malformed input is a usage error; well-formed data outside the
/// classified set, or violating a constraint, is a constraint error.
fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidGroup(_)
        | Error::NotMonotone
        | Error::WrongRank { .. }
        | Error::RankMismatch { .. }
        | Error::GroupMismatch { .. }
        | Error::UnknownSuite => EXIT_USAGE,
        _ => EXIT_CONSTRAINT,
    }
}

struct Output {
    json: Value,
    table: String,
    code: i32,
}

impl Output {
    fn new(json: impl Serialize, table: String) -> Self {
        Output {
            json: serde_json::to_value(json).expect("serializable"),
            table,
            code: EXIT_OK,
        }
    }
}

fn subgroup(g: GroupTag) -> Result<GroupTag, Failure> {
    g.subgroup()
        .ok_or_else(|| Failure::Usage(format!("{g} has no subgroup SO(N-1,1) in range")))
}

fn rep_input(g: GroupTag, rep: &RepArg) -> Result<(RepDescriptor, EnhancedParam), Failure> {
    if let Some(l) = &rep.langlands {
        let d = parse::langlands(g, l)?;
        let e = enhanced_from_langlands(&d)?;
        Ok((d, e))
    } else {
        let e = parse::enhanced(g, rep.enhanced.as_deref().expect("clap requires one"))?;
        let d = langlands_from_enhanced(&e)?;
        Ok((d, e))
    }
}

fn member(d: &RepDescriptor, e: &EnhancedParam) -> MemberJson {
    MemberJson {
        langlands: d.into(),
        enhanced: e.into(),
    }
}

fn enhanced_rows(list: &[EnhancedParam]) -> String {
    let rows: Vec<Vec<String>> = list
        .iter()
        .map(|e| {
            vec![
                e.group().to_string(),
                e.weight().to_string(),
                e.height().to_string(),
                e.signature().to_string(),
                e.to_string(),
            ]
        })
        .collect();
    render::table(
        &["group", "weight", "height", "signature", "parameter"],
        &rows,
    )
}

fn dispatch(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Classify {
            g: GroupArg { group },
            weight,
        } => {
            let s = parse::weight(&weight)?;
            let block = classify(group, &s)?;
            let mut members = Vec::new();
            let mut rows = Vec::new();
            for d in &block {
                let e = enhanced_from_langlands(d)?;
                rows.push(vec![
                    e.height().to_string(),
                    e.signature().to_string(),
                    d.to_string(),
                    e.to_string(),
                ]);
                members.push(member(d, &e));
            }
            Output::new(
                members,
                render::table(&["height", "signature", "langlands", "enhanced"], &rows),
            )
        }
        Command::Convert {
            g: GroupArg { group },
            rep,
        } => {
            let (d, e) = rep_input(group, &rep)?;
            let table =
                render::record(&[("langlands", d.to_string()), ("enhanced", e.to_string())]);
            Output::new(member(&d, &e), table)
        }
        Command::Height {
            g: GroupArg { group },
            rep,
        } => {
            let (d, _) = rep_input(group, &rep)?;
            let h = height(&d)?;
            Output::new(
                json!({ "height": h }),
                render::record(&[("height", h.to_string())]),
            )
        }
        Command::Signature {
            g: GroupArg { group },
            rep,
        } => {
            let (d, _) = rep_input(group, &rep)?;
            let sig = signature(&d)?;
            Output::new(
                json!({ "signature": sig.symbol() }),
                render::record(&[("signature", sig.to_string())]),
            )
        }
        Command::Infchar {
            g: GroupArg { group },
            weight,
            langlands,
        } => {
            let c = match (weight, langlands) {
                (Some(w), _) => infchar_finite_dim(group, &parse::weight(&w)?)?,
                (None, Some(l)) => {
                    let (sigma, _, lambda) = parse::langlands(group, &l)?.langlands_triple();
                    infchar_principal_series(group, &sigma, lambda)?
                }
                (None, None) => unreachable!("clap requires one"),
            };
            Output::new(
                InfCharJson::from(&c),
                render::record(&[("infchar", c.to_string())]),
            )
        }
        Command::Dim {
            big_n,
            weight,
            chirality,
        } => {
            let w = parse::weight(&weight)?;
            let d = weyl_dim(big_n, &w, chirality)?;
            Output::new(
                json!({ "dimension": d.to_string() }),
                render::record(&[("dimension", d.to_string())]),
            )
        }
        Command::Hasse {
            g: GroupArg { group },
            weight,
            sig,
            standard,
        } => {
            let s = parse::weight(&weight)?;
            let seq = if standard {
                standard_sequence(group, &s, sig)?
            } else {
                hasse_sequence(group, &s, sig)?
            };
            let json: Vec<EnhancedJson> = seq.iter().map(Into::into).collect();
            Output::new(json, enhanced_rows(&seq))
        }
        Command::Branch {
            g: GroupArg { group },
            enhanced,
            list: _,
            pi,
        } => {
            let big_pi = parse::enhanced(group, &enhanced)?;
            match pi {
                Some(p) => {
                    let pi = parse::enhanced(subgroup(group)?, &p)?;
                    let m = multiplicity(&big_pi, &pi)?;
                    Output::new(
                        json!({ "multiplicity": m }),
                        render::record(&[("multiplicity", m.to_string())]),
                    )
                }
                None => {
                    let targets = branch_enumerate(&big_pi)?;
                    let json: Vec<EnhancedJson> = targets.iter().map(Into::into).collect();
                    Output::new(json, enhanced_rows(&targets))
                }
            }
        }
        Command::BranchFd {
            g: GroupArg { group },
            weight,
            sig,
        } => {
            let comps = finite_dim_branch(group, &parse::weight(&weight)?, sig)?;
            let rows: Vec<Vec<String>> = comps
                .iter()
                .map(|c| vec![c.weight.to_string(), c.sign.to_string(), c.in_a.to_string()])
                .collect();
            let json: Vec<FiniteDimJson> = comps.iter().map(Into::into).collect();
            Output::new(json, render::table(&["weight", "sign", "self-dual"], &rows))
        }
        Command::Diagram {
            g: GroupArg { group },
            weight,
            sub_weight,
            sig,
        } => {
            let d = sb_diagram(
                group,
                &parse::weight(&weight)?,
                &parse::weight(&sub_weight)?,
                sig,
            )?;
            Output::new(DiagramJson::from(&d), render::diagram(&d))
        }
        Command::GpCheck {
            g: GroupArg { group },
            langlands,
            pi_langlands,
        } => {
            let big_pi = parse::langlands(group, &langlands)?;
            let pi = parse::langlands(subgroup(group)?, &pi_langlands)?;
            let ok = gp_tempered_check(&big_pi, &pi)?;
            Output::new(
                json!({ "nonzero": ok }),
                render::record(&[("nonzero", ok.to_string())]),
            )
        }
        Command::Period { n, i } => {
            let v = period_value(n, i)?;
            let j = PeriodJson::from(&v);
            let table = render::record(&[
                ("value", j.pretty.clone()),
                ("sign", j.sign.to_string()),
                ("rational", format!("{}/{}", j.num, j.den)),
                ("pi_quarters", j.pi_quarters.to_string()),
            ]);
            Output::new(j, table)
        }
        Command::Ktype { n, i } => {
            let k = minimal_k_type_trivial_rho(n, i)?;
            let table = render::record(&[
                ("k-type", k.to_string()),
                ("dimension", k.dimension.to_string()),
            ]);
            Output::new(KTypeJson::from(&k), table)
        }
        Command::Distinguished {
            g: GroupArg { group },
            enhanced,
        } => {
            let e = parse::enhanced(group, &enhanced)?;
            let aq = is_aq_lambda(&e).ok_or(Error::NotAqLambda)?;
            let h = distinguished_subgroup(&e)?;
            let j = DistinguishedJson {
                aq: AqJson::from(&aq),
                subgroup: h.to_string(),
            };
            let table = render::record(&[
                ("subgroup", j.subgroup.clone()),
                ("i", aq.i.to_string()),
                ("lambda", aq.lambda_part.to_string()),
                ("inducing degree", aq.inducing_degree.to_string()),
                ("levi", j.aq.levi.clone()),
            ]);
            Output::new(j, table)
        }
        Command::Chain {
            g: GroupArg { group },
            enhanced,
            target,
            psi,
        } => {
            let e = parse::enhanced(group, &enhanced)?;
            let chain = distinguishing_chain(&e, target, psi)?;
            let table = match &chain {
                Some(c) => enhanced_rows(c),
                None => "no chain\n".to_string(),
            };
            let j = ChainJson {
                target: target.to_string(),
                psi: psi.symbol().to_string(),
                chain: chain.map(|c| c.iter().map(Into::into).collect()),
            };
            Output::new(j, table)
        }
        Command::Cohomology {
            mode:
                CohomologyMode::Pairing {
                    n,
                    i,
                    delta,
                    j,
                    convention,
                },
        } => {
            let convention = match convention {
                Convention::Complementary => PairingConvention::Complementary,
                Convention::SameIndex => PairingConvention::SameIndex,
            };
            let p = pairing(n, i, delta, j, convention)?;
            let table = render::record(&[
                (
                    "left",
                    format!(
                        "H^{}({} Π_{{{},{}}} = {})",
                        p.left.degree, p.left.group, p.left.label.0, p.left.label.1, p.left.param
                    ),
                ),
                (
                    "right",
                    format!(
                        "H^{}({} π_{{{},{}}} = {})",
                        p.right.degree,
                        p.right.group,
                        p.right.label.0,
                        p.right.label.1,
                        p.right.param
                    ),
                ),
                ("nonzero", p.nonzero.to_string()),
            ]);
            Output::new(PairingJson::from(&p), table)
        }
        Command::Cohomology {
            mode:
                CohomologyMode::Gate {
                    g: GroupArg { group },
                    enhanced,
                    pi,
                    v,
                    v_prime,
                },
        } => {
            let big_pi = parse::enhanced(group, &enhanced)?;
            let pi = parse::enhanced(subgroup(group)?, &pi)?;
            let v: Weight = parse::weight(&v)?;
            let v_prime: Weight = parse::weight(&v_prime)?;
            let degree = bilinear_gate(&big_pi, &pi, &v, &v_prime)?;
            let shown = degree.map_or("none".to_string(), |d| d.to_string());
            Output::new(
                json!({ "degree": degree }),
                render::record(&[("degree", shown)]),
            )
        }
        Command::Selftest {
            config,
            jobs,
            suites,
            timing,
        } => {
            let config = match config {
                Some(path) => OracleConfig::load(&path).map_err(Failure::Usage)?,
                None => OracleConfig::default(),
            };
            let suites: Vec<Suite> = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites
                    .iter()
                    .map(|s| {
                        s.parse()
                            .map_err(|_| Failure::Usage(format!("unknown suite `{s}`")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let mut reports = Vec::new();
            let mut rows = Vec::new();
            for suite in suites {
                let t = run_timed(suite, config.bounds(suite), jobs);
                let ms = timing.then_some(t.elapsed.as_millis() as u64);
                let r = SuiteReportJson::new(&t.outcome, ms);
                let mut row = vec![
                    r.suite.clone(),
                    if r.passed { "pass" } else { "FAIL" }.to_string(),
                    r.cases_run.to_string(),
                    r.failures.len().to_string(),
                ];
                if let Some(ms) = ms {
                    row.push(format!("{ms} ms"));
                }
                rows.push(row);
                reports.push(r);
            }
            let passed = reports.iter().all(|r| r.passed);
            let mut headers = vec!["suite", "result", "cases", "failures"];
            if timing {
                headers.push("elapsed");
            }
            let mut table = render::table(&headers, &rows);
            for r in &reports {
                for f in r.failures.iter().take(5) {
                    table.push_str(&format!("{} case {}: {}\n", r.suite, f.case, f.detail));
                }
            }
            let mut out = Output::new(
                SelftestJson {
                    passed,
                    suites: reports,
                },
                table,
            );
            if !passed {
                out.code = EXIT_SUITE;
            }
            out
        }
    })
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    let table = cli.table;
    match dispatch(cli.command) {
        Ok(output) => {
            let text = if table {
                output.table
            } else {
                let mut s = serde_json::to_string_pretty(&output.json).expect("serializable");
                s.push('\n');
                s
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            output.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            core_exit_code(&e)
        }
    }
}
