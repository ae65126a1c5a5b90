//! Argument model and dispatch for the `moonshine` binary.
//!
//! Every subcommand produces a [`Report`]: a JSON document with a fixed
//! envelope (`command`, `passed`, `exit_code`, `result`) and a text
//! rendering. Exit codes are 0 when every checked identity holds, 1 when
//! one fails and 2 for usage errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use moonshine_core::faber::{faber_poly, faber_residual, newton_log_identity_check, IdentitySign};
use moonshine_core::hecke::hecke_scaled_to;
use moonshine_core::lambda::{
    replicability_check_faber_form, replicability_check_theorem_form, symmetry_check,
};
use moonshine_core::modular::{moonshine_j, FormName, NamedForm};
use moonshine_core::pairs::{devoto_projections, enumerate_pairs, PermGroup};
use moonshine_core::supersingular::{monster_primes, ogg_scan};
use moonshine_core::trees::{brute_force_rooted_trees, solve_tree_equation};
use moonshine_core::verify::{self, VerifyConfig, DEFAULT_SEED};
use moonshine_core::{Error, LaurentSeries};
use serde_json::{json, Value};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "moonshine",
    version,
    about = "Exact verification of replicability identities for the Moonshine function J"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

impl RunConfig {
    pub fn output_format(&self) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    #[value(name = "J")]
    MoonshineJ,
    #[value(name = "j")]
    SmallJ,
    #[value(name = "E4")]
    E4,
    #[value(name = "E6")]
    E6,
    #[value(name = "Delta")]
    Delta,
}

impl From<FormArg> for FormName {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::MoonshineJ => FormName::MoonshineJ,
            FormArg::SmallJ => FormName::SmallJ,
            FormArg::E4 => FormName::E4,
            FormArg::E6 => FormName::E6,
            FormArg::Delta => FormName::Delta,
        }
    }
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// q-expansion of J (or another named form) through q^N.
    Jseries {
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..))]
        order: i64,
        #[arg(long, value_enum, default_value = "J")]
        form: FormArg,
    },
    /// k T_k J through q^N.
    Hecke {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..))]
        order: i64,
    },
    /// Faber polynomial P_{N,J}, or the Newton-log sign check.
    Faber(FaberArgs),
    /// P_{k,J}(J) = k T_k J for k = 1..K through q^N.
    Replicate {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        k_max: u64,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(i64).range(1..))]
        order: i64,
    },
    /// t(J(t) - J(q)) = Lambda_{-t}(J(q)) on a (t, q) grid.
    #[command(name = "theorem33")]
    ExteriorForm {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        t_order: u64,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..))]
        q_order: i64,
    },
    /// q Lambda_{-t}(J(q)) = -t Lambda_{-q}(J(t)) and integrality on a grid.
    Symmetry {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        t_order: u64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..))]
        q_order: i64,
    },
    /// Commuting-pair classes of a permutation group.
    Pairs {
        /// sym:N, alt:N, cyclic:N, dihedral:N, quaternion8 or perm:<cycles>;<cycles>...
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Primes up to B whose supersingular j-invariants all lie in F_p.
    Ogg {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
        bound: u64,
    },
    /// Rooted tree counts from T = z exp(sum T(z^k)/k).
    Trees {
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        /// Also compare with brute-force enumeration up to min(N, 8).
        #[arg(long)]
        oracle: bool,
    },
    /// All ten acceptance criteria at their default sizes.
    VerifyAll,
}

#[derive(Clone, Debug, Args)]
pub struct FaberArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Check P_N(J) = q^-N + O(q) through q^M.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..))]
    pub order: i64,
    /// Run the Newton-log identity check instead.
    #[arg(long)]
    pub check_newton: bool,
    #[arg(long, default_value_t = 12, requires = "check_newton")]
    pub q_order: u64,
    #[arg(long, default_value_t = 12, requires = "check_newton")]
    pub p_order: i64,
}

/// Outcome of one subcommand.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub exit_code: u8,
    pub result: Value,
    pub text: String,
}

impl Report {
    fn new(command: &str, passed: bool, result: Value, text: String) -> Self {
        Report {
            command: command.to_string(),
            exit_code: if passed { EXIT_PASS } else { EXIT_FAIL },
            result,
            text,
        }
    }

    fn from_error(command: &str, e: &Error) -> Self {
        let exit_code = match e {
            Error::Integrality { .. } | Error::TreeIntegrality(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Report {
            command: command.to_string(),
            exit_code,
            result: json!({ "error": e.to_string() }),
            text: format!("error: {e}\n"),
        }
    }

    pub fn passed(&self) -> bool {
        self.exit_code == EXIT_PASS
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "passed": self.passed(),
            "exit_code": self.exit_code,
            "result": self.result,
        })
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.to_json()).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Jseries { .. } => "jseries",
        Command::Hecke { .. } => "hecke",
        Command::Faber(_) => "faber",
        Command::Replicate { .. } => "replicate",
        Command::ExteriorForm { .. } => "theorem33",
        Command::Symmetry { .. } => "symmetry",
        Command::Pairs { .. } => "pairs",
        Command::Ogg { .. } => "ogg",
        Command::Trees { .. } => "trees",
        Command::VerifyAll => "verify-all",
    }
}

pub fn dispatch(config: &RunConfig) -> Report {
    let name = command_name(&config.command);
    let run = match &config.command {
        Command::Jseries { order, form } => jseries(*order, (*form).into()),
        Command::Hecke { k, order } => hecke(*k, *order),
        Command::Faber(args) => faber(args),
        Command::Replicate { k_max, order } => replicate(*k_max as usize, *order),
        Command::ExteriorForm { t_order, q_order } => exterior_form(*t_order as usize, *q_order),
        Command::Symmetry { t_order, q_order } => symmetry(*t_order as usize, *q_order),
        Command::Pairs { group, tolerance } => pairs(group, *tolerance),
        Command::Ogg { bound } => ogg(*bound),
        Command::Trees { order, oracle } => trees(*order as usize, *oracle),
        Command::VerifyAll => Ok(verify_all(config.seed)),
    };
    run.unwrap_or_else(|e| Report::from_error(name, &e))
}

type Run = moonshine_core::Result<Report>;

fn jseries(order: i64, form: FormName) -> Run {
    let f = NamedForm::compute(form, order)?;
    let text = format!(
        "{} (weight {}):\n{}\n",
        form_label(form),
        f.weight,
        f.expansion
    );
    Ok(Report::new(
        "jseries",
        true,
        json!({ "form": form_label(form), "weight": f.weight, "series": f.expansion.to_json() }),
        text,
    ))
}

fn form_label(f: FormName) -> &'static str {
    match f {
        FormName::E4 => "E4",
        FormName::E6 => "E6",
        FormName::Delta => "Delta",
        FormName::SmallJ => "j",
        FormName::MoonshineJ => "J",
    }
}

fn hecke(k: u64, order: i64) -> Run {
    let j = moonshine_j(k as i64 * order)?;
    let image = hecke_scaled_to(&j, k, order)?;
    let text = format!("{k} T_{k} J:\n{image}\n");
    Ok(Report::new(
        "hecke",
        true,
        json!({ "k": k, "series": image.to_json() }),
        text,
    ))
}

fn faber(args: &FaberArgs) -> Run {
    if args.check_newton {
        let (nq, np) = (args.q_order as usize, args.p_order);
        let forced =
            newton_log_identity_check(&LaurentSeries::from_ints(-1, &[1], np + nq as i64), nq, np)?;
        let j = moonshine_j(np + nq as i64)?;
        let r = newton_log_identity_check(&j, nq, np)?;
        let passed = r.sign != IdentitySign::Neither && r.sign == forced.sign;
        let sign = |s: IdentitySign| match s {
            IdentitySign::Minus => "minus",
            IdentitySign::Plus => "plus",
            IdentitySign::Neither => "neither",
        };
        let mut text = format!(
            "log[q(J(q) - J(p))] = {}sum P_n(J(p)) q^n / n through (q^{nq}, p^{np})\n",
            if r.sign == IdentitySign::Plus {
                "+"
            } else {
                "-"
            }
        );
        let _ = writeln!(text, "sign forced by f = q^-1: {}", sign(forced.sign));
        let _ = writeln!(text, "sign matched for J: {}", sign(r.sign));
        if let (false, Some((m, e))) = (passed, r.first_minus_mismatch) {
            let _ = writeln!(text, "first mismatch at (q^{m}, p^{e})");
        }
        return Ok(Report::new(
            "faber",
            passed,
            json!({
                "mode": "newton",
                "q_order": nq,
                "p_order": np,
                "forced_sign": sign(forced.sign),
                "sign": sign(r.sign),
                "minus_holds": r.minus_holds,
                "plus_holds": r.plus_holds,
            }),
            text,
        ));
    }
    let n = args.n as usize;
    let j = moonshine_j(args.order + n as i64)?;
    let p = faber_poly(&j, n)?;
    let residual = faber_residual(&j, &p).truncate(args.order);
    // the defining property: q^-n - P_n(J) vanishes at the cusp
    let passed = residual.valuation() >= 1;
    let mut text = format!("P_{n},J(X) = {}\n", p.poly);
    let _ = writeln!(
        text,
        "q^-{n} - P_{n}(J) = O(q) through q^{}: {}",
        args.order,
        if passed { "yes" } else { "no" }
    );
    Ok(Report::new(
        "faber",
        passed,
        json!({ "mode": "polynomial", "polynomial": p, "check_order": args.order, "residual_valuation": residual.valuation() }),
        text,
    ))
}

fn replicate(k_max: usize, order: i64) -> Run {
    let r = replicability_check_faber_form(k_max, order)?;
    let mut text = String::new();
    for row in &r.rows {
        match row.first_nonzero {
            None => {
                let _ = writeln!(text, "k = {:>2}: P_k(J) = k T_k J through q^{order}", row.k);
            }
            Some(e) => {
                let _ = writeln!(
                    text,
                    "k = {:>2}: FAIL, first difference at (t^{}, q^{e})",
                    row.k, row.k
                );
            }
        }
    }
    Ok(Report::new(
        "replicate",
        r.holds(),
        serde_json::to_value(&r).expect("serializable"),
        text,
    ))
}

fn exterior_form(t_order: usize, q_order: i64) -> Run {
    let r = replicability_check_theorem_form(t_order, q_order)?;
    let text = match &r.first_mismatch {
        None => format!(
            "t(J(t) - J(q)) = Lambda_-t(J(q)) for t^0..t^{t_order} through q^{q_order}: {} cells agree\n",
            r.cells_checked
        ),
        Some(m) => format!("FAIL at {m}\n"),
    };
    Ok(Report::new(
        "theorem33",
        r.holds,
        serde_json::to_value(&r).expect("serializable"),
        text,
    ))
}

fn symmetry(t_order: usize, q_order: i64) -> Run {
    let r = symmetry_check(t_order, q_order)?;
    let mut text = format!(
        "q Lambda_-t(J(q)) = -t Lambda_-q(J(t)) on {} cells: {}\n",
        r.cells_checked,
        if r.equal { "equal" } else { "DIFFERENT" }
    );
    let _ = writeln!(text, "integral: {}, pole-free: {}", r.integral, r.pole_free);
    if let Some(m) = &r.first_mismatch {
        let _ = writeln!(text, "first mismatch at {m}");
    }
    if let Some((m, n)) = r.first_non_integral {
        let _ = writeln!(text, "first non-integral coefficient at (t^{m}, q^{n})");
    }
    if let Some((m, n)) = r.first_pole {
        let _ = writeln!(text, "first pole at (t^{m}, q^{n})");
    }
    Ok(Report::new(
        "symmetry",
        r.holds(),
        serde_json::to_value(&r).expect("serializable"),
        text,
    ))
}

fn pairs(spec: &str, tolerance: f64) -> Run {
    let g = PermGroup::from_spec(spec)?;
    let p = enumerate_pairs(&g)?;
    let commuting: usize = (0..g.order()).map(|x| g.centralizer(x).len()).sum();
    let counts_ok = p.orbit_total() == commuting;
    let orbits = p.sl2_orbits()?;
    let atlas = p.atlas()?;
    let covers = p.atlas_covers()?;
    let projections = g
        .conjugacy_classes()
        .iter()
        .map(|c| devoto_projections(&g, c[0], tolerance))
        .collect::<moonshine_core::Result<Vec<_>>>()?;
    let projections_ok = projections.iter().all(|r| r.passed);
    let passed = counts_ok && covers && projections_ok;

    let mut text = format!("group {} of order {}\n", g.name(), g.order());
    let _ = writeln!(text, "pair classes: {}", p.len());
    let _ = writeln!(
        text,
        "commuting pairs: {} (orbit sizes sum to {})",
        commuting,
        p.orbit_total()
    );
    for (i, c) in p.classes().iter().enumerate() {
        let (h, x) = c.representative;
        let _ = writeln!(text, "  [{i}] ({h}, {x}) orbit size {}", c.orbit.len());
    }
    let _ = writeln!(text, "SL2(Z) orbits: {orbits:?}");
    let _ = writeln!(text, "chart atlas covers all classes: {covers}");
    for r in &projections {
        let _ = writeln!(
            text,
            "projections for element {} (order {}): {}",
            r.g,
            r.g_order,
            if r.passed { "pass" } else { "FAIL" }
        );
    }
    let elements: Vec<&Vec<usize>> = g.elements().iter().collect();
    Ok(Report::new(
        "pairs",
        passed,
        json!({
            "group": g.name(),
            "order": g.order(),
            "elements": elements,
            "class_count": p.len(),
            "commuting_pairs": commuting,
            "classes": p.classes(),
            "sl2_orbits": orbits,
            "atlas": atlas,
            "atlas_covers": covers,
            "projections": projections,
        }),
        text,
    ))
}

fn ogg(bound: u64) -> Run {
    let scan = ogg_scan(bound)?;
    let fixture: Vec<u64> = monster_primes()
        .into_iter()
        .filter(|&p| p <= bound)
        .collect();
    let passed = scan.passing == fixture;
    let mut text = format!(
        "primes <= {bound} with every supersingular j in F_p: {:?}\n",
        scan.passing
    );
    let _ = writeln!(text, "primes failing: {:?}", scan.failing);
    let _ = writeln!(
        text,
        "prime divisors of the Monster order up to {bound}: {fixture:?} ({})",
        if passed { "match" } else { "MISMATCH" }
    );
    let reports: Vec<Value> = scan
        .reports
        .iter()
        .map(|r| {
            json!({
                "p": r.p,
                "delta": r.delta,
                "j_set": r.j_set.iter().map(|j| [j.a, j.b]).collect::<Vec<_>>(),
                "all_in_prime_field": r.all_in_prime_field,
            })
        })
        .collect();
    Ok(Report::new(
        "ogg",
        passed,
        json!({
            "bound": bound,
            "passing": scan.passing,
            "failing": scan.failing,
            "monster_primes": fixture,
            "reports": reports,
        }),
        text,
    ))
}

fn trees(order: usize, oracle: bool) -> Run {
    let t = solve_tree_equation(order)?;
    let mut text = String::new();
    for (i, c) in t.counts.iter().enumerate() {
        let _ = writeln!(text, "t_{} = {c}", i + 1);
    }
    let mut passed = true;
    let mut oracle_json = Value::Null;
    if oracle {
        let n = order.min(8);
        let counts = brute_force_rooted_trees(n)?;
        let mismatch = counts
            .iter()
            .enumerate()
            .find(|(i, c)| t.counts[*i] != (**c).into())
            .map(|(i, _)| i + 1);
        passed = mismatch.is_none();
        match mismatch {
            None => {
                let _ = writeln!(text, "enumeration agrees for n <= {n}");
            }
            Some(i) => {
                let _ = writeln!(text, "enumeration disagrees at n = {i}");
            }
        }
        oracle_json = json!({ "n_max": n, "counts": counts, "first_mismatch": mismatch });
    }
    let counts: Vec<String> = t.counts.iter().map(ToString::to_string).collect();
    Ok(Report::new(
        "trees",
        passed,
        json!({ "order": order, "counts": counts, "iterations": t.iterations, "oracle": oracle_json }),
        text,
    ))
}

fn verify_all(seed: u64) -> Report {
    let cfg = VerifyConfig {
        seed,
        ..VerifyConfig::default()
    };
    let results = verify::run_all(&cfg);
    let passed = results.iter().all(|r| r.passed);
    let mut text: String = results.iter().map(|r| r.line() + "\n").collect();
    let _ = writeln!(
        text,
        "{}",
        if passed {
            "all criteria pass"
        } else {
            "FAILED"
        }
    );
    Report::new(
        "verify-all",
        passed,
        json!({ "config": cfg, "criteria": results }),
        text,
    )
}
