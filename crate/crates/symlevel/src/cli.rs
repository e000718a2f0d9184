//! Command-line surface.
//!
//! Exit codes: 0 on success, 1 when a verification finds a counterexample,
//! 2 on bad invocations or inputs outside an operation's domain.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symlevel_core::character::{specht_dim, CharacterMemo, TableSet};
use symlevel_core::crystal::{
    e_tilde, epsilon, good_node, i_signature, is_jantzen_seitz, normal_nodes, rank_formula,
    reduced_signature, specht_rank_formula, RankKind,
};
use symlevel_core::growth::{
    an_plancherel, check_dim_bound_char0, check_f_submultiplicative, check_g_formulas,
    check_g_submultiplicative, check_lambda_upper, check_lambda_vs_bar, dim_lower_bound, growth_sweep,
    plancherel,
};
use symlevel_core::rank::{
    e2_profile, e3_profile, verify_sign_eigenspace_recursion, verify_specht_rank,
    verify_tensor_rank_additivity,
};
use symlevel_core::tensor::{
    kronecker_coeff, kronecker_decompose, lr_coeff_characters, lr_coeff_tableaux,
    murnaghan_littlewood_instances, verify_murnaghan_littlewood,
};
use symlevel_core::{CharacterTable, Characteristic, Node, Partition, VerificationReport};

use crate::cache::TableCache;
use crate::config::{Caps, Format, RunConfig};
use crate::formats;
use crate::pool::{default_workers, RayonPool};

#[derive(Debug, Parser)]
#[command(name = "symlevel", version, about = "Exact computations with representations of symmetric groups")]
pub struct Cli {
    /// Size of the symmetric group, or the sweep bound for `verify`.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Characteristic: 0 or an integer >= 2.
    #[arg(long, global = true, default_value_t = 0)]
    pub p: u32,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Omit wall-clock timings from reports.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LrMethod {
    Tableaux,
    Characters,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    MurnaghanLittlewood,
    SpechtRank,
    TensorAdditivity,
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    LambdaVsBar,
    LambdaUpper,
    DimBound,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// n - λ₁.
    Level { lambda: Partition },
    /// λ without its first row.
    Bar { lambda: Partition },
    /// Transposed diagram λ'.
    Conjugate { lambda: Partition },
    /// Whether no part repeats p or more times.
    Regular { lambda: Partition },
    /// Dimension of the Specht module.
    Dim { lambda: Partition },
    /// Full character table of S_n (cached on disk).
    Chartable,
    /// χ^λ on the class of the given cycle type.
    Char { lambda: Partition, cycle_type: Partition },
    /// Multiplicity of S^ν in S^λ ⊗ S^μ.
    Kronecker { lambda: Partition, mu: Partition, nu: Partition },
    /// All constituents of S^λ ⊗ S^μ with multiplicities.
    KroneckerDecompose { lambda: Partition, mu: Partition },
    /// Littlewood-Richardson coefficient c^ν_{λμ}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[arg(long, value_enum, default_value = "tableaux")]
        method: LrMethod,
    },
    /// i-signature, reduced signature, normal and good nodes, ε_i and ẽ_i^k.
    Crystal {
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Jantzen-Seitz test.
    Js { lambda: Partition },
    /// Closed-form rank of the irreducible module D^λ.
    Rank { lambda: Partition },
    /// Closed-form 2- and 3-ranks of the Specht module.
    SpechtRank { lambda: Partition },
    /// 2- and 3-ranks read off the restriction to E₂ and E₃.
    RankOracle { lambda: Partition },
    /// Plancherel measure of S^λ ⊗ S^μ.
    Plancherel {
        lambda: Partition,
        mu: Partition,
        /// Measure after restriction to the alternating group.
        #[arg(long)]
        alternating: bool,
    },
    /// Growth records for all pairs of partitions of n.
    Growth,
    /// Lower bound for dim D^λ at level l.
    Bound {
        #[arg(long)]
        l: usize,
    },
    /// Exhaustive verification sweep.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
    },
}

/// Failure modes that map to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<(String, bool), UsageError>;

struct Context {
    config: RunConfig,
    pool: RayonPool,
    cache: TableCache,
}

impl Context {
    fn p(&self) -> Characteristic {
        self.config.p
    }

    fn require_n(&self, n: Option<usize>, what: &str) -> Result<usize, UsageError> {
        n.ok_or_else(|| UsageError(format!("{what} needs --n")))
    }

    fn table(&self, n: usize) -> Result<CharacterTable, UsageError> {
        self.config.within("character table", n, self.config.caps.table)?;
        Ok(self.cache.table(n, &self.pool)?.0)
    }

    fn table_set(&self, n: usize) -> Result<TableSet, UsageError> {
        self.config.within("character table", n, self.config.caps.table)?;
        Ok(self.cache.table_set(n, &self.pool)?.0)
    }

    fn format(&self, default: Format) -> Format {
        self.config.format.unwrap_or(default)
    }
}

fn same_size(a: &Partition, b: &Partition) -> Result<(), UsageError> {
    if a.size() != b.size() {
        return Err(UsageError(format!("{a} and {b} have different sizes")));
    }
    Ok(())
}

fn line(s: impl std::fmt::Display) -> CmdResult {
    Ok((format!("{s}\n"), true))
}

fn node_value(n: Node) -> Value {
    json!([n.row, n.col])
}

fn timed(
    timing: bool,
    f: impl FnOnce() -> symlevel_core::Result<VerificationReport>,
) -> Result<VerificationReport, UsageError> {
    let start = Instant::now();
    let mut r = f()?;
    if timing {
        r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(r)
}

fn default_sweep_n(t: Theorem) -> usize {
    match t {
        Theorem::MurnaghanLittlewood => 9,
        Theorem::SpechtRank => 12,
        Theorem::TensorAdditivity => 10,
        Theorem::F => 30,
        Theorem::G => 12,
        Theorem::LambdaVsBar => 24,
        Theorem::LambdaUpper | Theorem::DimBound => 20,
        Theorem::All => 8,
    }
}

fn run_verify(ctx: &Context, theorem: Theorem, n: usize) -> Result<Vec<VerificationReport>, UsageError> {
    let caps = &ctx.config.caps;
    let timing = ctx.config.timing;
    let pool = &ctx.pool;
    let cfg = &ctx.config;
    let mut out = Vec::new();
    let all = theorem == Theorem::All;
    if all {
        for (what, cap) in [
            ("murnaghan-littlewood", caps.murnaghan_littlewood),
            ("specht-rank", caps.specht_rank),
            ("tensor-additivity", caps.tensor_additivity),
            ("G", caps.g_sweep),
            ("lambda-vs-bar", caps.dimension_sweep),
            ("dim-bound", caps.dim_bound),
        ] {
            cfg.within(what, n, cap)?;
        }
    }
    let tables = match theorem {
        Theorem::All | Theorem::SpechtRank => {
            cfg.within("specht-rank", n, caps.specht_rank)?;
            Some(ctx.table_set(n)?)
        }
        _ => None,
    };
    let top_table = |tables: &Option<TableSet>| -> Result<CharacterTable, UsageError> {
        match tables {
            Some(set) => Ok(set.get(n).expect("table set reaches n").clone()),
            None => ctx.table(n),
        }
    };
    if all || theorem == Theorem::MurnaghanLittlewood {
        cfg.within("murnaghan-littlewood", n, caps.murnaghan_littlewood)?;
        let t = top_table(&tables)?;
        out.push(timed(timing, || verify_murnaghan_littlewood(&t, pool))?);
    }
    if all || theorem == Theorem::SpechtRank {
        let set = tables.as_ref().expect("loaded above");
        out.push(timed(timing, || verify_specht_rank(set, n, pool))?);
    }
    if all || theorem == Theorem::TensorAdditivity {
        cfg.within("tensor-additivity", n, caps.tensor_additivity)?;
        let t = top_table(&tables)?;
        out.push(timed(timing, || verify_tensor_rank_additivity(&t, pool))?);
    }
    if all {
        let set = tables.as_ref().expect("loaded above");
        out.push(timed(timing, || verify_sign_eigenspace_recursion(set, n))?);
    }
    if all || theorem == Theorem::F {
        cfg.within("F", n, caps.f_sweep)?;
        out.push(timed(timing, || check_f_submultiplicative(n, n, n))?);
    }
    if all || theorem == Theorem::G {
        cfg.within("G", n, caps.g_sweep)?;
        out.push(timed(timing, || check_g_submultiplicative(n))?);
        out.push(timed(timing, || check_g_formulas(n))?);
    }
    if all || theorem == Theorem::LambdaVsBar {
        cfg.within("lambda-vs-bar", n, caps.dimension_sweep)?;
        out.push(timed(timing, || check_lambda_vs_bar(n))?);
    }
    if all || theorem == Theorem::LambdaUpper {
        cfg.within("lambda-upper", n, caps.dimension_sweep)?;
        out.push(timed(timing, || check_lambda_upper(n))?);
    }
    if all || theorem == Theorem::DimBound {
        cfg.within("dim-bound", n, caps.dim_bound)?;
        out.push(timed(timing, || check_dim_bound_char0(n))?);
    }
    Ok(out)
}

fn execute(ctx: &Context, n_flag: Option<usize>, command: Command) -> CmdResult {
    let p = ctx.p();
    match command {
        Command::Level { lambda } => line(lambda.level()),
        Command::Bar { lambda } => line(lambda.bar()),
        Command::Conjugate { lambda } => line(lambda.conjugate()),
        Command::Regular { lambda } => line(lambda.is_p_regular(p)),
        Command::Dim { lambda } => line(specht_dim(&lambda)?),
        Command::Chartable => {
            let n = ctx.require_n(n_flag, "chartable")?;
            let t = ctx.table(n)?;
            match ctx.format(Format::Json) {
                Format::Json => Ok((formats::TableDocument::from_table(&t).to_json(), true)),
                Format::Text => Ok((formats::table_text(&t), true)),
                Format::Csv => Err(UsageError("chartable supports json and text".into())),
            }
        }
        Command::Char { lambda, cycle_type } => line(CharacterMemo::new().value(&lambda, &cycle_type)?),
        Command::Kronecker { lambda, mu, nu } => {
            same_size(&lambda, &mu)?;
            same_size(&lambda, &nu)?;
            let t = ctx.table(lambda.size())?;
            line(kronecker_coeff(&t, &lambda, &mu, &nu)?)
        }
        Command::KroneckerDecompose { lambda, mu } => {
            same_size(&lambda, &mu)?;
            let t = ctx.table(lambda.size())?;
            let dec = kronecker_decompose(&t, &lambda, &mu)?;
            match ctx.format(Format::Json) {
                Format::Json => Ok((formats::to_pretty(&formats::decomposition_value(&dec)), true)),
                _ => Ok((formats::decomposition_text(&dec), true)),
            }
        }
        Command::Lr { lambda, mu, nu, method } => match method {
            LrMethod::Tableaux => line(lr_coeff_tableaux(&lambda, &mu, &nu)?),
            LrMethod::Characters => {
                let set = ctx.table_set(nu.size())?;
                line(lr_coeff_characters(&set, &lambda, &mu, &nu)?)
            }
        },
        Command::Crystal { lambda, i, k } => {
            let sig = i_signature(&lambda, i, p)?;
            let reduced = reduced_signature(&sig);
            let normal = normal_nodes(&lambda, i, p)?;
            let good = good_node(&lambda, i, p)?;
            let eps = epsilon(&lambda, i, p)?;
            let et = e_tilde(&lambda, i, p, k)?;
            match ctx.format(Format::Json) {
                Format::Json => {
                    let v = json!({
                        "lambda": formats::partition_value(&lambda),
                        "i": i,
                        "p": p.get(),
                        "signature": sig.to_string(),
                        "reduced": reduced.to_string(),
                        "normal": normal.iter().map(|&n| node_value(n)).collect::<Vec<_>>(),
                        "good": good.map(node_value),
                        "epsilon": eps,
                        "k": k,
                        "etilde": et.as_ref().map(formats::partition_value),
                    });
                    Ok((formats::to_pretty(&v), true))
                }
                _ => {
                    let nodes: Vec<String> = normal.iter().map(|n| n.to_string()).collect();
                    let mut s = format!("signature: {sig}\nreduced: {reduced}\nnormal: {}\n", nodes.join(" "));
                    s.push_str(&format!(
                        "good: {}\nepsilon: {eps}\netilde^{k}: {}\n",
                        good.map_or("none".into(), |n| n.to_string()),
                        et.map_or("none".into(), |l| l.to_string())
                    ));
                    Ok((s, true))
                }
            }
        }
        Command::Js { lambda } => line(is_jantzen_seitz(&lambda, p)?),
        Command::Rank { lambda } => line(rank_formula(&lambda, p)?),
        Command::SpechtRank { lambda } => {
            let r2 = specht_rank_formula(&lambda, RankKind::Rank2);
            let r3 = specht_rank_formula(&lambda, RankKind::Rank3);
            match ctx.format(Format::Text) {
                Format::Json => Ok((formats::to_pretty(&json!({"rank2": r2, "rank3": r3})), true)),
                _ => Ok((format!("rank2={r2} rank3={r3}\n"), true)),
            }
        }
        Command::RankOracle { lambda } => {
            let t = ctx.table(lambda.size())?;
            let chi = t.class_function(&lambda).expect("table covers its own partitions");
            let e2 = e2_profile(&chi)?;
            let e3 = e3_profile(&chi)?;
            match ctx.format(Format::Json) {
                Format::Json => {
                    let counts = |c: &[num_bigint::BigUint]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>();
                    let v = json!({
                        "lambda": formats::partition_value(&lambda),
                        "rank2": e2.max_type(),
                        "rank3": e3.max_type(),
                        "e2_type_counts": counts(&e2.counts),
                        "e3_type_counts": counts(&e3.counts),
                    });
                    Ok((formats::to_pretty(&v), true))
                }
                _ => Ok((format!("rank2={} rank3={}\n", e2.max_type(), e3.max_type()), true)),
            }
        }
        Command::Plancherel { lambda, mu, alternating } => {
            same_size(&lambda, &mu)?;
            let t = ctx.table(lambda.size())?;
            let dec = kronecker_decompose(&t, &lambda, &mu)?;
            if alternating {
                line(an_plancherel(&dec)?)
            } else {
                line(plancherel(&dec)?)
            }
        }
        Command::Growth => {
            let n = ctx.require_n(n_flag, "growth")?;
            ctx.config.within("growth", n, ctx.config.caps.growth)?;
            let t = ctx.table(n)?;
            let recs = growth_sweep(&t, &ctx.pool)?;
            match ctx.format(Format::Csv) {
                Format::Csv => {
                    let mut buf = Vec::new();
                    formats::write_growth_csv(&recs, &mut buf)?;
                    Ok((String::from_utf8(buf)?, true))
                }
                _ => {
                    let v: Vec<Value> = recs.iter().map(formats::growth_value).collect();
                    Ok((formats::to_pretty(&Value::Array(v)), true))
                }
            }
        }
        Command::Bound { l } => {
            let n = ctx.require_n(n_flag, "bound")?;
            line(dim_lower_bound(n, l, p))
        }
        Command::Verify { theorem } => {
            let n = n_flag.unwrap_or_else(|| default_sweep_n(theorem));
            if !p.is_zero() {
                if theorem != Theorem::MurnaghanLittlewood {
                    return Err(UsageError("verification sweeps are characteristic-zero only".into()));
                }
                // Both sides need decomposition numbers here; export the
                // p-regular instances at maximal level without checking them.
                ctx.config.within("murnaghan-littlewood", n, ctx.config.caps.murnaghan_littlewood)?;
                let triples = murnaghan_littlewood_instances(n, p)?;
                let v = json!({
                    "schema": "symlevel-instances-v1",
                    "theorem": "murnaghan_littlewood",
                    "parameters": {"n": n, "p": p.get()},
                    "verified": false,
                    "instances": triples
                        .iter()
                        .map(|(a, b, c)| json!([formats::partition_value(a), formats::partition_value(b), formats::partition_value(c)]))
                        .collect::<Vec<_>>(),
                });
                return Ok((formats::to_pretty(&v), true));
            }
            let reports = run_verify(ctx, theorem, n)?;
            let passed = reports.iter().all(VerificationReport::passed);
            let timing = ctx.config.timing;
            let text = match ctx.format(Format::Json) {
                Format::Json if reports.len() > 1 => {
                    let name = theorem.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
                    formats::to_pretty(&formats::bundle_value(&name, &reports, &[("n", n as i64), ("p", 0)], timing))
                }
                Format::Json => formats::to_pretty(&formats::report_value(&reports[0], timing)),
                Format::Text => reports.iter().map(formats::report_text).collect(),
                Format::Csv => return Err(UsageError("verify supports json and text".into())),
            };
            Ok((text, passed))
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    match run_parsed(cli) {
        Ok((text, out_path, passed)) => {
            let written = match out_path {
                Some(path) => std::fs::write(&path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            if passed {
                0
            } else {
                1
            }
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn run_parsed(cli: Cli) -> Result<(String, Option<PathBuf>, bool), UsageError> {
    let cache = TableCache::from_env();
    let config = RunConfig {
        caps: Caps::default(),
        p: Characteristic::new(cli.p)?,
        cache_dir: cache.dir().to_path_buf(),
        format: cli.format,
        workers: cli.workers.unwrap_or_else(default_workers),
        timing: !cli.no_timing,
        out: cli.out.clone(),
    };
    config.validate()?;
    let pool = RayonPool::new(config.workers)?;
    let ctx = Context { config, pool, cache };
    let (text, passed) = execute(&ctx, cli.n, cli.command)?;
    Ok((text, ctx.config.out, passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("symlevel").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn scalar_commands() {
        assert_eq!(call(&["level", "[5,2,1]"]), (0, "3\n".into(), String::new()));
        assert_eq!(call(&["level", "5,2,1"]).1, "3\n");
        assert_eq!(call(&["bar", "[5,2,1]"]).1, "[2,1]\n");
        assert_eq!(call(&["conjugate", "[3,1]"]).1, "[2,1,1]\n");
        assert_eq!(call(&["regular", "--p", "2", "[2,2]"]).1, "false\n");
        assert_eq!(call(&["dim", "[3,2]"]).1, "5\n");
        assert_eq!(call(&["char", "[3,1]", "[2,1,1]"]).1, "1\n");
        assert_eq!(call(&["rank", "--p", "2", "[2,1]"]).1, "1\n");
        assert_eq!(call(&["js", "--p", "3", "[2,1]"]).1, "true\n");
        assert_eq!(call(&["bound", "--n", "9", "--l", "2", "--p", "2"]).1, "12\n");
        assert_eq!(call(&["lr", "[2,1]", "[2,1]", "[3,2,1]"]).1, "2\n");
        assert_eq!(call(&["specht-rank", "[3,3]"]).1, "rank2=3 rank3=2\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
        assert_eq!(call(&["level", "[1,2]"]).0, 2);
        assert_eq!(call(&["rank", "--p", "1", "[2,1]"]).0, 2);
        assert_eq!(call(&["rank", "--p", "2", "[1,1]"]).0, 2);
        assert_eq!(call(&["crystal", "[2,1]", "--i", "3", "--p", "3"]).0, 2);
        assert_eq!(call(&["verify", "murnaghan-littlewood", "--n", "11"]).0, 2);
        assert_eq!(call(&["chartable"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn crystal_json() {
        let (code, out, _) = call(&["crystal", "[2,1]", "--i", "1", "--p", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["signature"], "-(2,1) -(1,2)");
        assert_eq!(v["good"], json!([2, 1]));
        assert_eq!(v["epsilon"], 2);
        assert_eq!(v["etilde"], json!([2]));
        let (_, out, _) = call(&["crystal", "[2,1]", "--i=-1"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["signature"], "-(2,1)");
    }
}
