//! `demfusion` command-line front-end. Every command prints one JSON object
//! per line (or a plain table with `--table`).
//!
//! Exit codes: 0 when every report passes (experimental counts as passing),
//! 1 when a verification fails, 2 on bad input.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use demfusion::demazure::{demazure_dim, gamma_membership, kr_dims_at_level};
use demfusion::partitions::{enumerate_s, verify_rearrange_constraint, verify_split_identity, xi_of_level, Partition};
use demfusion::qsystem::{qsystem_solve, verify_dimension_identity, InitialData, QSystemTable};
use demfusion::sl2_fusion::{enumerate_index_set, fusion_dim, graded_character_basis, graded_character_ses};
use demfusion::verify::{run_all, Bounds, DEFAULT_SEED};
use demfusion::{irreducible_character, weyl_dimension, Error, RootSystem, Status, Weight};

use report::{emit, int, multiset, object, terms, uint, Format, Report};

#[derive(Parser)]
#[command(name = "demfusion", version, about = "Exact checks for Demazure modules, Q-systems and sl2 fusion products")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// JSON Lines output (default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,

    /// Human-readable output.
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Lie family, one of A..G.
    #[arg(long = "type", value_name = "LETTER")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Clone)]
struct WeightArg {
    /// Fundamental-weight coordinates c1,…,cn.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    weight: Vec<i64>,
}

#[derive(Args, Clone)]
struct PartitionArg {
    /// Weakly decreasing positive parts p1,…,pk; omit for the empty partition.
    #[arg(long, value_delimiter = ',', default_value = "")]
    partition: Vec<String>,
}

#[derive(Args, Clone)]
struct InitialDataArg {
    /// JSON file `{"1": [[[1,0], 1]], …}` giving Q_1 per node (1-based).
    /// Required outside type A.
    #[arg(long, value_name = "PATH")]
    initial_data: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, symmetrizers and positive roots.
    Roots(TypeArgs),
    /// Character of the irreducible module V(λ).
    Char {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Weyl dimension of V(λ).
    Dim {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// The partition tuple ξ(ℓ, λ) with the shape of every component.
    Xi {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, default_value_t = 1)]
        level: u64,
    },
    /// The set S(r, s); with --k also its splitting and rearrangement checks.
    Sets {
        #[arg(long = "r")]
        r: u64,
        #[arg(long = "s")]
        s: u64,
        #[arg(long = "k")]
        k: Option<u64>,
        /// Lower bound K in s' + r' ≥ kr' + K.
        #[arg(long, default_value_t = 0)]
        bound: u64,
    },
    /// Solve the Q-system up to m = mmax and decompose every entry.
    Qsolve {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 3)]
        mmax: u64,
        #[command(flatten)]
        init: InitialDataArg,
    },
    /// Check dim² = kernel + neighbours for 1 ≤ m < mmax.
    Qverify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 4)]
        mmax: u64,
        #[command(flatten)]
        init: InitialDataArg,
    },
    /// Dimension of the Demazure module D(ℓ, λ) for (ℓ, λ) in Γ.
    Demdim {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, default_value_t = 1)]
        level: u64,
        #[command(flatten)]
        init: InitialDataArg,
    },
    /// Index vectors of the monomial basis for an sl2 partition.
    Sl2Basis(PartitionArg),
    /// Bigraded character of the sl2 fusion product, by basis and by recursion.
    Sl2Char(PartitionArg),
    /// Run every verification sweep.
    VerifyAll {
        /// Largest |ξ| in the sl2 sweep.
        #[arg(long, default_value_t = Bounds::default().max_size)]
        max_size: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Bad input, reported on stderr with exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<Vec<Report>, Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.table { Format::Table } else { Format::Json };
    match dispatch(cli.command) {
        Ok(reports) => {
            if let Err(e) = emit(&reports, format) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if reports.iter().any(|r| r.status.is_failure()) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Roots(ty) => roots(&ty),
        Command::Char { ty, weight } => character(&ty, &weight.weight),
        Command::Dim { ty, weight } => dim(&ty, &weight.weight),
        Command::Xi { ty, weight, level } => xi(&ty, &weight.weight, level),
        Command::Sets { r, s, k, bound } => sets(r, s, k, bound),
        Command::Qsolve { ty, mmax, init } => qsolve(&ty, mmax, &init),
        Command::Qverify { ty, mmax, init } => qverify(&ty, mmax, &init),
        Command::Demdim {
            ty,
            weight,
            level,
            init,
        } => demdim(&ty, &weight.weight, level, &init),
        Command::Sl2Basis(p) => sl2_basis(&p),
        Command::Sl2Char(p) => sl2_char(&p),
        Command::VerifyAll { max_size, seed } => verify_all(max_size, seed),
    }
}

fn root_system(ty: &TypeArgs) -> Result<RootSystem, Usage> {
    let lie_type = format!("{}{}", ty.family.trim(), ty.rank).parse()?;
    Ok(RootSystem::new(lie_type))
}

fn type_inputs(ty: &TypeArgs) -> Value {
    json!({ "type": ty.family.trim().to_ascii_uppercase(), "rank": ty.rank })
}

fn with_inputs(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn checked_weight(rs: &RootSystem, coords: &[i64]) -> Result<Weight, Usage> {
    let w = Weight(coords.to_vec());
    rs.check_dominant(&w)?;
    Ok(w)
}

fn parse_partition(arg: &PartitionArg) -> Result<Partition, Usage> {
    let parts = arg
        .partition
        .iter()
        .map(|p| p.trim())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<u64>().map_err(|_| Usage(format!("malformed partition part `{p}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

fn initial_data(rs: &RootSystem, arg: &InitialDataArg) -> Result<InitialData, Usage> {
    match &arg.initial_data {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Usage(format!("cannot read initial data {}: {e}", path.display())))?;
            Ok(InitialData::from_json(rs, &text)?)
        }
        None => Ok(InitialData::type_a_default(rs)?),
    }
}

fn init_inputs(arg: &InitialDataArg) -> Value {
    match &arg.initial_data {
        Some(p) => Value::String(p.display().to_string()),
        None => Value::String("default".into()),
    }
}

/// Solves up to `m_max`; a failed exact division is a verification failure,
/// not a usage error.
fn solve(rs: &RootSystem, init: &InitialData, m_max: u64) -> Result<Result<QSystemTable, String>, Usage> {
    match qsystem_solve(rs, init, m_max) {
        Ok(t) => Ok(Ok(t)),
        Err(e @ (Error::InexactDivision { .. } | Error::InexactPolynomialDivision)) => Ok(Err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn roots(ty: &TypeArgs) -> Outcome {
    let rs = root_system(ty)?;
    let roots: Vec<Value> = rs
        .positive_roots()
        .iter()
        .map(|a| json!({ "coords": a.coords, "height": a.height, "d_alpha": a.d_alpha }))
        .collect();
    let data = object([
        ("cartan", json!(rs.cartan())),
        ("symmetrizers", json!(rs.symmetrizers())),
        ("positive_roots", Value::Array(roots)),
    ]);
    Ok(vec![Report::new("roots", type_inputs(ty), data)])
}

fn character(ty: &TypeArgs, coords: &[i64]) -> Outcome {
    let rs = root_system(ty)?;
    let lambda = checked_weight(&rs, coords)?;
    let chi = irreducible_character(&rs, &lambda)?;
    let inputs = with_inputs(type_inputs(ty), json!({ "weight": coords }));
    let data = object([("dim", int(&chi.dimension())), ("terms", terms(&chi))]);
    Ok(vec![Report::new("char", inputs, data)])
}

fn dim(ty: &TypeArgs, coords: &[i64]) -> Outcome {
    let rs = root_system(ty)?;
    let lambda = checked_weight(&rs, coords)?;
    let d = weyl_dimension(&rs, &lambda)?;
    let inputs = with_inputs(type_inputs(ty), json!({ "weight": coords }));
    Ok(vec![Report::new("dim", inputs, object([("dim", uint(&d))]))])
}

fn xi(ty: &TypeArgs, coords: &[i64], level: u64) -> Outcome {
    let rs = root_system(ty)?;
    let lambda = checked_weight(&rs, coords)?;
    let tuple = xi_of_level(&rs, level, &lambda)?;
    let components: Vec<Value> = rs
        .positive_roots()
        .iter()
        .zip(&tuple.assignment)
        .map(|(alpha, part)| {
            json!({
                "root": alpha.coords,
                "d_alpha": alpha.d_alpha,
                "partition": part,
                "shape": part.shape(),
            })
        })
        .collect();
    let all_good = tuple
        .assignment
        .iter()
        .all(|p| p.is_empty() || p.shape().is_rectangular_or_special_fat_hook());
    let inputs = with_inputs(type_inputs(ty), json!({ "weight": coords, "level": level }));
    let data = object([
        ("components", Value::Array(components)),
        ("rectangular_or_special_fat_hook", Value::Bool(all_good)),
    ]);
    Ok(vec![Report::new("xi", inputs, data)])
}

fn sets(r: u64, s: u64, k: Option<u64>, bound: u64) -> Outcome {
    let set = enumerate_s(r, s);
    let inputs = json!({ "r": r, "s": s, "k": k, "bound": bound });
    let mut data = object([
        ("count", Value::from(set.len())),
        ("elements", json!(set.elements)),
    ]);
    let mut status = Status::Pass;
    let mut counterexample = None;
    if let Some(k) = k {
        let split = verify_split_identity(r, s, k);
        status = split.status;
        counterexample = split.counterexample.clone();
        let mut extra = object([("split", json!(split))]);
        if s + r >= k * r + bound {
            let rearrange = verify_rearrange_constraint(r, s, k, bound)?;
            if !status.is_failure() {
                status = rearrange.status;
                counterexample = rearrange.counterexample.clone();
            }
            extra = with_inputs(extra, object([("rearrange", json!(rearrange))]));
        }
        data = with_inputs(data, extra);
    }
    Ok(vec![Report::new("sets", inputs, data).with_status(status, counterexample)])
}

fn qsolve(ty: &TypeArgs, mmax: u64, init: &InitialDataArg) -> Outcome {
    let rs = root_system(ty)?;
    let data = initial_data(&rs, init)?;
    let inputs = with_inputs(type_inputs(ty), json!({ "mmax": mmax, "initial_data": init_inputs(init) }));
    let table = match solve(&rs, &data, mmax)? {
        Ok(t) => t,
        Err(msg) => {
            let report = Report::new("qsolve", inputs, Value::Null).with_status(Status::Fail, Some(msg));
            return Ok(vec![report]);
        }
    };
    let mut entries = Vec::new();
    let mut negative = None;
    for i in 0..rs.rank() {
        for m in 1..=mmax {
            let q = table.get(i, m)?;
            let parts = table.decompose(i, m)?;
            if negative.is_none() && parts.iter().any(|(_, c)| c < &BigInt::from(0)) {
                negative = Some(format!("Q_{m} at node {} has a negative multiplicity", i + 1));
            }
            entries.push(json!({
                "node": i + 1,
                "m": m,
                "dim": int(&q.dimension()),
                "decomposition": multiset(&parts),
            }));
        }
    }
    let status = Status::from_bool(negative.is_none());
    let report = Report::new("qsolve", inputs, object([("entries", Value::Array(entries))])).with_status(status, negative);
    Ok(vec![report])
}

fn qverify(ty: &TypeArgs, mmax: u64, init: &InitialDataArg) -> Outcome {
    let rs = root_system(ty)?;
    if mmax < 2 {
        return Err(Usage("qverify needs --mmax >= 2".into()));
    }
    let data = initial_data(&rs, init)?;
    let inputs = with_inputs(type_inputs(ty), json!({ "mmax": mmax, "initial_data": init_inputs(init) }));
    // kernel factors reach KR(⌈m|C_ji|/|C_ij|⌉ ω_j)
    let cartan = rs.cartan();
    let reach = (0..rs.rank())
        .flat_map(|i| (0..rs.rank()).filter(move |&j| j != i).map(move |j| cartan[i][j].unsigned_abs()))
        .max()
        .unwrap_or(1)
        .max(1);
    let table = match solve(&rs, &data, mmax * reach)? {
        Ok(t) => t,
        Err(msg) => {
            let report = Report::new("qverify", inputs, Value::Null).with_status(Status::Fail, Some(msg));
            return Ok(vec![report]);
        }
    };
    let mut identities = Vec::new();
    let mut status = Status::Pass;
    let mut counterexample = None;
    for i in 0..rs.rank() {
        for m in 1..mmax {
            let r = verify_dimension_identity(&table, i, m)?;
            if r.status.is_failure() && counterexample.is_none() {
                counterexample = Some(format!(
                    "node {}, m = {m}: {} != {} + {}",
                    i + 1,
                    r.square,
                    r.kernel,
                    r.neighbors
                ));
            }
            status = match (status, r.status) {
                (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
                (Status::Experimental, _) | (_, Status::Experimental) => Status::Experimental,
                _ => Status::Pass,
            };
            identities.push(json!({
                "node": i + 1,
                "m": m,
                "level": r.level,
                "square": int(&r.square),
                "kernel": int(&r.kernel),
                "neighbors": int(&r.neighbors),
                "balanced": r.balanced,
                "status": r.status,
            }));
        }
    }
    let report =
        Report::new("qverify", inputs, object([("identities", Value::Array(identities))])).with_status(status, counterexample);
    Ok(vec![report])
}

fn demdim(ty: &TypeArgs, coords: &[i64], level: u64, init: &InitialDataArg) -> Outcome {
    let rs = root_system(ty)?;
    let lambda = checked_weight(&rs, coords)?;
    if level == 0 {
        return Err(Usage("--level must be positive".into()));
    }
    let point = gamma_membership(&rs, level, &lambda)?;
    let data = initial_data(&rs, init)?;
    let inputs = with_inputs(
        type_inputs(ty),
        json!({ "weight": coords, "level": level, "initial_data": init_inputs(init) }),
    );
    let m_max = rs.symmetrizers().iter().max().copied().unwrap_or(1) as u64 * level;
    let table = match solve(&rs, &data, m_max)? {
        Ok(t) => t,
        Err(msg) => {
            let report = Report::new("demdim", inputs, Value::Null).with_status(Status::Fail, Some(msg));
            return Ok(vec![report]);
        }
    };
    let kr = kr_dims_at_level(&rs, level, &table)?;
    let d = demazure_dim(&rs, level, &lambda, &kr)?;
    let out = object([
        ("dim", uint(&d)),
        ("s", json!(point.s)),
        ("kr_dims", Value::Array(kr.iter().map(uint).collect())),
    ]);
    Ok(vec![Report::new("demdim", inputs, out)])
}

fn sl2_basis(arg: &PartitionArg) -> Outcome {
    let xi = parse_partition(arg)?;
    let vectors = enumerate_index_set(&xi);
    let expected = fusion_dim(&xi);
    let ok = u64::try_from(&expected).is_ok_and(|e| e == vectors.len() as u64);
    let counterexample = (!ok).then(|| format!("{} vectors, expected {expected}", vectors.len()));
    let data = object([
        ("count", Value::from(vectors.len())),
        ("vectors", json!(vectors)),
    ]);
    let report = Report::new("sl2-basis", json!({ "partition": xi }), data).with_status(Status::from_bool(ok), counterexample);
    Ok(vec![report])
}

fn sl2_char(arg: &PartitionArg) -> Outcome {
    let xi = parse_partition(arg)?;
    let basis = graded_character_basis(&xi);
    let ses = graded_character_ses(&xi);
    let ok = basis == ses;
    let counterexample = (!ok).then(|| "basis and recursive characters differ".to_string());
    let data = object([
        ("dim", Value::from(basis.total_mass())),
        ("terms", json!(basis)),
    ]);
    let report = Report::new("sl2-char", json!({ "partition": xi }), data).with_status(Status::from_bool(ok), counterexample);
    Ok(vec![report])
}

fn verify_all(max_size: u64, seed: u64) -> Outcome {
    let inputs = json!({ "max_size": max_size, "seed": seed });
    let suites = run_all(Bounds { max_size, seed });
    let failed = suites.iter().filter(|s| s.status.is_failure()).count();
    let mut reports: Vec<Report> = suites
        .iter()
        .map(|s| {
            Report::new("verify-all", inputs.clone(), json!({ "suite": s.name, "checked": s.checked }))
                .with_status(s.status, s.counterexample.clone())
        })
        .collect();
    let summary = object([
        ("suites", Value::from(suites.len())),
        ("failed", Value::from(failed)),
    ]);
    let counterexample = (failed > 0).then(|| format!("{failed} suite(s) failed"));
    reports.push(Report::new("verify-all", inputs, summary).with_status(Status::from_bool(failed == 0), counterexample));
    Ok(reports)
}
