//! Command line front end. Every checker and computation is reachable as a
//! subcommand with deterministic text or JSON output.
//!
//! Exit codes: 0 when all requested checks pass, 1 when a check fails (the
//! witness is printed as JSON), 2 for usage, parse or input errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::domain::divisors::divisor_count_oracle;
use crate::domain::parse::parse_domain_spec;
use crate::domain::{DomainId, Element};
use crate::quad::{ideal_congruence_check, QuadIdeal};
use crate::semigroup::ideals::separator;
use crate::semigroup::laws::{condition_star_check, law_suite, LawSuiteReport, Verdict};
use crate::semigroup::{generate, CommSemigroup, SemigroupError};
use crate::tau;

#[derive(Parser)]
#[command(
    name = "taucong",
    version,
    about = "Separators, principal congruences and gcd congruences, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on |a| for integer divisor oracles.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_abs: u64,
    /// Cap on polynomial degree for divisor oracles.
    #[arg(long, global = true, default_value_t = 8)]
    max_deg: usize,
    /// Cap on quadratic norms for divisor oracles.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_norm: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check a Cayley table file; report order, identity and zero.
    Validate { table: PathBuf },
    /// Separator of a subset (comma-separated labels or indices).
    Sep { table: PathBuf, subset: String },
    /// Principal congruence of a subset, as classes.
    Pcong { table: PathBuf, subset: String },
    /// Quotient by the principal congruence of a subset.
    Quotient { table: PathBuf, subset: String },
    /// Star-condition verdict for a table.
    Star { table: PathBuf },
    /// Structural law suite over all ideals of a table.
    Laws { table: PathBuf },
    /// Gcd classes of a modulus: divisors and residue classes.
    Tau { domain: String, modulus: String },
    /// Number of non-associated divisors.
    Dcount {
        domain: String,
        element: String,
        /// Cross-check against the brute-force trial-division oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Agreement of the gcd relation with the principal congruence of (m),
    /// plus the separator and associate-level coherence checks.
    Thm3 { domain: String, modulus: String },
    /// Zero-modulus sharpness: the gcd relation of 0 is the associate
    /// relation, strictly finer than the principal congruence of {0}.
    Sharp { domain: String },
    /// Quadratic ideal from generators: HNF, generator, conjugate product.
    Qideal {
        d: i32,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Law suite over generated semigroups.
    Census {
        #[arg(long)]
        order: usize,
        /// Seed for randomized search (orders above 4 require it).
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random semigroups to draw.
        #[arg(long)]
        count: Option<usize>,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Validate { table } => validate_cmd(cli, table),
        Command::Sep { table, subset } => sep_cmd(cli, table, subset),
        Command::Pcong { table, subset } => pcong_cmd(cli, table, subset),
        Command::Quotient { table, subset } => quotient_cmd(cli, table, subset),
        Command::Star { table } => star_cmd(cli, table),
        Command::Laws { table } => laws_cmd(cli, table),
        Command::Tau { domain, modulus } => tau_cmd(cli, domain, modulus),
        Command::Dcount {
            domain,
            element,
            verify,
        } => dcount_cmd(cli, domain, element, *verify),
        Command::Thm3 { domain, modulus } => thm3_cmd(cli, domain, modulus),
        Command::Sharp { domain } => sharp_cmd(cli, domain),
        Command::Qideal { d, gens } => qideal_cmd(cli, *d, gens),
        Command::Census { order, seed, count } => census_cmd(cli, *order, *seed, *count),
    }
}

/// Print a line to stdout; when the read end of a pipe has gone away,
/// leave with the conventional broken-pipe status instead of panicking.
fn outln(args: std::fmt::Arguments) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_fmt(args)
        .and_then(|()| stdout.write_all(b"\n"))
        .is_err()
    {
        std::process::exit(141);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { outln(format_args!($($arg)*)) };
}

fn load_table(path: &PathBuf) -> Result<CommSemigroup, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    CommSemigroup::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_element(domain: &str, text: &str) -> Result<(DomainId, Element), String> {
    let id = parse_domain_spec(domain).map_err(|e| e.to_string())?;
    let elem = Element::parse_in(id, text).map_err(|e| e.to_string())?;
    Ok((id, elem))
}

fn emit(cli: &Cli, json: serde_json::Value, text: String) {
    match cli.format {
        Format::Json => outln!("{json}"),
        Format::Text => outln!("{text}"),
    }
}

fn fail_with_witness<W: Serialize>(cli: &Cli, summary: &str, witness: &W) -> Result<bool, String> {
    let json = json!({ "verdict": "FAIL", "summary": summary, "witness": witness });
    match cli.format {
        Format::Json => outln!("{json}"),
        Format::Text => {
            outln!("FAIL: {summary}");
            outln!("{json}");
        }
    }
    Ok(false)
}

fn validate_cmd(cli: &Cli, path: &PathBuf) -> Result<bool, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    match CommSemigroup::parse(&text) {
        Ok(s) => {
            let identity = s.identity().map(|i| s.label(i));
            let zero = s.zero().map(|i| s.label(i));
            let json = json!({
                "valid": true,
                "order": s.order(),
                "identity": identity,
                "zero": zero,
                "labels": s.labels(),
            });
            let mut text = format!("valid commutative semigroup of order {}", s.order());
            match identity {
                Some(l) => text.push_str(&format!("\nidentity: {l}")),
                None => text.push_str("\nidentity: none"),
            }
            match zero {
                Some(l) => text.push_str(&format!("\nzero: {l}")),
                None => text.push_str("\nzero: none"),
            }
            emit(cli, json, text);
            Ok(true)
        }
        Err(
            err @ (SemigroupError::NotAssociative { .. }
            | SemigroupError::NotCommutative { .. }
            | SemigroupError::IndexOutOfRange { .. }),
        ) => fail_with_witness(cli, "table is not a commutative semigroup", &err),
        Err(other) => Err(format!("{}: {other}", path.display())),
    }
}

fn sep_cmd(cli: &Cli, path: &PathBuf, subset: &str) -> Result<bool, String> {
    let s = load_table(path)?;
    let a = s.parse_subset(subset).map_err(|e| e.to_string())?;
    let sep = separator(&s, &a);
    let members = sep.members();
    let labels: Vec<String> = members.iter().map(|&i| s.label(i)).collect();
    emit(
        cli,
        json!({ "separator": members, "labels": labels }),
        format!("separator: {{{}}}", labels.join(", ")),
    );
    Ok(true)
}

fn pcong_cmd(cli: &Cli, path: &PathBuf, subset: &str) -> Result<bool, String> {
    let s = load_table(path)?;
    let h = s.parse_subset(subset).map_err(|e| e.to_string())?;
    let p = s.principal_congruence(&h);
    let text = p
        .classes()
        .iter()
        .map(|class| {
            let labels: Vec<String> = class.iter().map(|&i| s.label(i)).collect();
            format!("{{{}}}", labels.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" ");
    emit(cli, serde_json::to_value(&p).expect("serializable"), text);
    Ok(true)
}

fn quotient_cmd(cli: &Cli, path: &PathBuf, subset: &str) -> Result<bool, String> {
    let s = load_table(path)?;
    let h = s.parse_subset(subset).map_err(|e| e.to_string())?;
    let p = s.principal_congruence(&h);
    let (q, representatives) = s.quotient(&p).map_err(|e| e.to_string())?;
    let class_of: Vec<usize> = (0..s.order()).map(|i| p.class_of(i)).collect();
    let json = json!({
        "order": q.order(),
        "table": q.rows(),
        "labels": q.labels(),
        "representatives": representatives,
        "class_of": class_of,
    });
    emit(
        cli,
        json,
        format!("{}class_of: {:?}", q.to_table_text(), class_of),
    );
    Ok(true)
}

fn star_cmd(cli: &Cli, path: &PathBuf) -> Result<bool, String> {
    let s = load_table(path)?;
    match condition_star_check(&s) {
        Verdict::Pass => {
            emit(cli, json!({ "verdict": "PASS" }), "PASS".to_string());
            Ok(true)
        }
        Verdict::Fail(f) => fail_with_witness(cli, "star condition fails", &f),
    }
}

fn laws_cmd(cli: &Cli, path: &PathBuf) -> Result<bool, String> {
    let s = load_table(path)?;
    let report = law_suite(&s, false);
    print_law_report(cli, &report, json!({ "table": path.display().to_string() }));
    Ok(report.passed())
}

fn print_law_report(cli: &Cli, report: &LawSuiteReport, context: serde_json::Value) {
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    let json = json!({
        "verdict": verdict,
        "context": context,
        "report": report,
    });
    let text = format!(
        "torsion-ideal checks: {}\nstar-implies-order checks: {}\nseparator-quotient checks: {}\nrecovery checks: {}\nmaximal-ideal checks: {}\n{}",
        report.torsion_ideal,
        report.order_implication,
        report.separator_quotient,
        report.congruence_recovery,
        report.maximal_ideal,
        if report.passed() {
            "PASS".to_string()
        } else {
            format!("FAIL\n{}", report.failures.join("\n"))
        }
    );
    match cli.format {
        Format::Json => outln!("{json}"),
        Format::Text => {
            outln!("{text}");
            if !report.passed() {
                outln!("{json}");
            }
        }
    }
}

fn tau_cmd(cli: &Cli, domain: &str, modulus: &str) -> Result<bool, String> {
    let (_, m) = parse_element(domain, modulus)?;
    let classes = tau::tau_classes(&m).map_err(|e| e.to_string())?;
    let divisors: Vec<String> = classes.divisors().iter().map(|d| d.to_string()).collect();
    let text = format!(
        "modulus: {m}\ndivisors ({}): {}\nclasses: {:?}",
        divisors.len(),
        divisors.join(", "),
        classes.partition().classes(),
    );
    emit(
        cli,
        serde_json::to_value(&classes).expect("serializable"),
        text,
    );
    Ok(true)
}

fn dcount_cmd(cli: &Cli, domain: &str, element: &str, verify: bool) -> Result<bool, String> {
    let (_, a) = parse_element(domain, element)?;
    check_caps(cli, &a)?;
    let count = tau::divisor_count(&a).map_err(|e| e.to_string())?;
    if verify {
        let oracle = divisor_count_oracle(&a).map_err(|e| e.to_string())?;
        if oracle != count {
            return fail_with_witness(
                cli,
                "divisor count disagrees with the trial-division oracle",
                &json!({ "element": a.to_string(), "count": count, "oracle": oracle }),
            );
        }
        emit(
            cli,
            json!({ "element": a.to_string(), "count": count, "oracle": oracle }),
            format!("d({a}) = {count} (oracle agrees)"),
        );
    } else {
        emit(
            cli,
            json!({ "element": a.to_string(), "count": count }),
            format!("d({a}) = {count}"),
        );
    }
    Ok(true)
}

fn check_caps(cli: &Cli, a: &Element) -> Result<(), String> {
    use num_traits::ToPrimitive;
    match a.domain() {
        DomainId::Integers => {
            let v = a.norm().to_u64().unwrap_or(u64::MAX);
            if v > cli.max_abs {
                return Err(format!("|{a}| exceeds --max-abs {}", cli.max_abs));
            }
        }
        DomainId::Poly { .. } => {
            if a.poly_degree().unwrap_or(0) > cli.max_deg {
                return Err(format!("deg {a} exceeds --max-deg {}", cli.max_deg));
            }
        }
        DomainId::Quadratic { .. } => {
            let v = a.norm().to_u64().unwrap_or(u64::MAX);
            if v > cli.max_norm {
                return Err(format!("N({a}) exceeds --max-norm {}", cli.max_norm));
            }
        }
    }
    Ok(())
}

fn thm3_cmd(cli: &Cli, domain: &str, modulus: &str) -> Result<bool, String> {
    let (_, m) = parse_element(domain, modulus)?;
    let agreement = tau::tau_congruence_check(&m).map_err(|e| e.to_string())?;
    let unit = m.is_unit();
    let separator_class = if unit {
        None
    } else {
        Some(tau::separator_class_check(&m).map_err(|e| e.to_string())?)
    };
    let coherence = tau::associate_coherence_check(&m).map_err(|e| e.to_string())?;

    let all_pass = agreement.passed()
        && separator_class.as_ref().is_none_or(Verdict::passed)
        && coherence.passed();
    fn verdict_str<F>(v: &Verdict<F>) -> &'static str {
        if v.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }
    let json = json!({
        "modulus": m.to_string(),
        "tau_congruence": verdict_str(&agreement),
        "separator_class": separator_class.as_ref().map(verdict_str).unwrap_or("SKIP (unit modulus)"),
        "associate_coherence": verdict_str(&coherence),
        "witness": if all_pass { serde_json::Value::Null } else {
            json!({
                "tau_congruence": agreement.failure(),
                "separator_class": separator_class.as_ref().and_then(|v| v.failure()),
                "associate_coherence": coherence.failure(),
            })
        },
    });
    let text = format!(
        "modulus: {m}\ntau = principal congruence of (m): {}\nseparator class = coprime residues: {}\nassociate-level coherence: {}",
        verdict_str(&agreement),
        separator_class
            .as_ref()
            .map(verdict_str)
            .unwrap_or("SKIP (unit modulus)"),
        verdict_str(&coherence),
    );
    match cli.format {
        Format::Json => outln!("{json}"),
        Format::Text => {
            outln!("{text}");
            if !all_pass {
                outln!("{json}");
            }
        }
    }
    Ok(all_pass)
}

fn sharp_cmd(cli: &Cli, domain: &str) -> Result<bool, String> {
    let id = parse_domain_spec(domain).map_err(|e| e.to_string())?;
    match tau::tau_zero_sharpness_check(id) {
        Verdict::Pass => {
            emit(
                cli,
                json!({ "domain": id.to_string(), "verdict": "PASS" }),
                format!("{id}: zero-modulus gcd relation is strictly finer: PASS"),
            );
            Ok(true)
        }
        Verdict::Fail(f) => fail_with_witness(cli, "sharpness check failed", &f),
    }
}

fn qideal_cmd(cli: &Cli, d: i32, gens: &[String]) -> Result<bool, String> {
    let domain = DomainId::quadratic(d).map_err(|e| e.to_string())?;
    let gens: Vec<Element> = gens
        .iter()
        .map(|g| Element::parse_in(domain, g))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let ideal = QuadIdeal::from_generators(d, &gens).map_err(|e| e.to_string())?;
    let (verdict, m, n) = ideal_congruence_check(d, &gens).map_err(|e| e.to_string())?;
    let product = ideal.mul(&ideal.conjugate()).map_err(|e| e.to_string())?;
    if let Verdict::Fail(f) = &verdict {
        return fail_with_witness(cli, "quadratic ideal check failed", f);
    }
    let json = json!({
        "d": d,
        "hnf": hnf_json(&ideal)?,
        "norm": norm_json(&ideal)?,
        "generator": m.to_string(),
        "conj_product": {
            "hnf": hnf_json(&product)?,
            "norm": norm_json(&product)?,
            "generator": n.to_string(),
        },
        "check": "PASS",
    });
    let text = format!(
        "ideal: hnf {:?}, norm {}\ngenerator: {m}\nconjugate product: norm {}, generator {n}\ncheck: PASS",
        ideal.hnf(),
        ideal.norm(),
        product.norm(),
    );
    emit(cli, json, text);
    Ok(true)
}

fn hnf_json(ideal: &QuadIdeal) -> Result<serde_json::Value, String> {
    use num_traits::ToPrimitive;
    let rows: Option<Vec<Vec<i64>>> = ideal
        .hnf()
        .iter()
        .map(|row| row.iter().map(|x| x.to_i64()).collect())
        .collect();
    rows.map(|r| json!(r))
        .ok_or_else(|| "hnf entry exceeds 64 bits".to_string())
}

fn norm_json(ideal: &QuadIdeal) -> Result<serde_json::Value, String> {
    use num_traits::ToPrimitive;
    ideal
        .norm()
        .to_i64()
        .map(|n| json!(n))
        .ok_or_else(|| "norm exceeds 64 bits".to_string())
}

fn census_cmd(
    cli: &Cli,
    order: usize,
    seed: Option<u64>,
    count: Option<usize>,
) -> Result<bool, String> {
    let mut total = LawSuiteReport::default();
    let mut generated = 0usize;
    let mode;
    match (seed, count) {
        (None, None) => {
            mode = "exhaustive";
            let iter = generate::exhaustive(order)
                .map_err(|e| format!("{e}; orders above 4 need --seed and --count"))?;
            for s in iter {
                total.absorb(&law_suite(&s, true));
                generated += 1;
            }
        }
        (Some(seed), Some(count)) => {
            mode = "random";
            for s in generate::random(order, seed, count) {
                total.absorb(&law_suite(&s, true));
                generated += 1;
            }
        }
        _ => return Err("--seed and --count must be given together".to_string()),
    }
    let context = json!({
        "order": order,
        "mode": mode,
        "seed": seed,
        "count": count,
        "semigroups": generated,
    });
    match cli.format {
        Format::Text => outln!("{mode} census at order {order}: {generated} semigroups"),
        Format::Json => {}
    }
    print_law_report(cli, &total, context);
    Ok(total.passed())
}
