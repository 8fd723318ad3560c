use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use charvar::algebra::Polynomial;
use charvar::complex::{
    certify_sphere, homology, intersection_table, boundary_complex, table_consistency, BoundaryCase, TableCase,
};
use charvar::compact::Configuration;
use charvar::invariants::{
    dimension, fit_sl3_relation, fk_coordinates, fk_cubic, is_dim2_case, leading_form_at_infinity, sl3_invariants,
    PartitionTuple, Sl3Boundary,
};
use charvar::sampling::{par_samples, random_unimodular, sample_rng};
use charvar::stability::identities::{identities, negative_controls, Identity};
use charvar::stability::{classify_stability, one_ps_limit, s_orbit, stability_oracle};

/// Exact computations on compactified SL2 character varieties.
///
/// Sample i of a run with seed s uses its own generator seeded with
/// splitmix64(s + i * 0x9E3779B97F4A7C15), so output does not depend on the
/// number of threads.
#[derive(Parser)]
#[command(name = "charvar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Base seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random samples (default depends on the command).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    samples: Option<u64>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Expected dimension of the character variety.
    Dimension {
        #[arg(long, default_value_t = 0)]
        g: u32,
        /// Partitions as "a,b;c,d;...".
        #[arg(long)]
        mu: String,
        /// Rank; must equal the common size of the partitions if given.
        #[arg(long)]
        r: Option<u32>,
    },
    /// Checks the Fricke-Klein relation on random unimodular triples.
    FkVerify {
        /// Negates x1 before evaluating, so the check must fail.
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Recovers the SL3 relation by exact interpolation.
    Sl3Fit {
        /// Number of distinct boundary settings.
        #[arg(long, default_value_t = 3)]
        settings: u64,
    },
    /// Stability verdict from the m1/m2 criterion and the Hilbert-Mumford oracle.
    Stability {
        #[arg(long)]
        input: PathBuf,
    },
    /// Limit under diag(t, 1/t) as t -> 0, and membership in the orbits of s1, s2.
    Limit {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        direction: i32,
    },
    /// Homology and sphere certification of the boundary complexes.
    Complex {
        /// n4, n5-equator or n5-full.
        #[arg(long)]
        case: String,
        /// Certify as a triangulated sphere of this dimension.
        #[arg(long)]
        certify: Option<usize>,
        /// Also check the intersection table against the complex.
        #[arg(long)]
        table: bool,
    },
    /// Runs the registered polynomial identities.
    Identities {
        #[arg(long)]
        list: bool,
        /// Runs perturbed identities that must fail.
        #[arg(long, hide = true)]
        negative_control: bool,
    },
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

type CmdResult = Result<Report, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Dimension { g, mu, r } => cmd_dimension(*g, mu, *r),
        Command::FkVerify { corrupt } => cmd_fk_verify(&cli, *corrupt),
        Command::Sl3Fit { settings } => cmd_sl3_fit(&cli, *settings),
        Command::Stability { input } => cmd_stability(input),
        Command::Limit { input, direction } => cmd_limit(input, *direction),
        Command::Complex { case, certify, table } => cmd_complex(case, *certify, *table),
        Command::Identities { list, negative_control } => cmd_identities(*list, *negative_control),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = if cli.json {
        serde_json::to_string_pretty(&report.json).expect("json values serialize") + "\n"
    } else {
        report.text
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_dimension(g: u32, mu: &str, r: Option<u32>) -> CmdResult {
    let mu: PartitionTuple = mu.parse().map_err(|e: charvar::Error| e.to_string())?;
    if let Some(r) = r {
        if r != mu.rank() {
            return Err(format!("--r {r} does not match partitions of {}", mu.rank()));
        }
    }
    let d = dimension(g, &mu);
    Ok(Report {
        text: format!("{d}\n"),
        json: json!({ "g": g, "r": mu.rank(), "mu": mu.to_string(), "dimension": d, "dim2_case": is_dim2_case(&mu) }),
        ok: true,
    })
}

fn cmd_fk_verify(cli: &Cli, corrupt: bool) -> CmdResult {
    let samples = cli.samples.unwrap_or(1000) as usize;
    let results = par_samples(cli.seed, samples, |_, rng| {
        let ms = [random_unimodular(rng), random_unimodular(rng), random_unimodular(rng)];
        let t = fk_coordinates(&ms[0], &ms[1], &ms[2]).expect("unimodular 2x2");
        let mut x = t.x();
        if corrupt {
            x[0] = -x[0].clone();
        }
        let value = fk_cubic(&x, &t.a());
        (ms, t, value)
    });
    let zeros = results.iter().filter(|(_, _, v)| v.is_zero()).count();
    let first = results.iter().position(|(_, _, v)| !v.is_zero());
    let mut text = format!("{zeros}/{samples} exact zeros\n");
    let failure = first.map(|i| {
        let (ms, t, v) = &results[i];
        let mats: Vec<String> = ms.iter().map(ToString::to_string).collect();
        json!({ "sample": i, "matrices": mats, "coordinates": t, "value": v })
    });
    if let Some(f) = &failure {
        writeln!(text, "first failure: {f}").unwrap();
    }
    Ok(Report {
        text,
        json: json!({ "samples": samples, "seed": cli.seed, "zeros": zeros, "first_failure": failure }),
        ok: zeros == samples,
    })
}

fn cmd_sl3_fit(cli: &Cli, settings: u64) -> CmdResult {
    let samples = cli.samples.unwrap_or(60) as usize;
    let mut text = String::new();
    let mut runs = Vec::new();
    let mut ok = true;
    let expected_lead = &(&Polynomial::var("X").pow(3) + &Polynomial::var("Y").pow(3))
        - &(&(&Polynomial::var("X") * &Polynomial::var("Y")) * &Polynomial::var("Z"));
    for setting in 0..settings {
        let mut rng = sample_rng(cli.seed, setting);
        let boundary = Sl3Boundary::random(&mut rng);
        let data: Vec<_> = (0..samples)
            .map(|_| {
                let (m1, m2) = boundary.sample(&mut rng);
                sl3_invariants(&m1, &m2).expect("3x3")
            })
            .collect();
        let rel = fit_sl3_relation(&data).map_err(|e| e.to_string())?;
        let s = &data[0];
        let lead = leading_form_at_infinity(&rel.polynomial()).map_err(|e| e.to_string())?;
        let checks = [
            ("x1*x2 in f is 1", rel.f.coefficient(&[("x1", 1), ("x2", 1)]).is_one()),
            ("x1 in f is -a2*b1", rel.f.coefficient(&[("x1", 1)]) == -(&s.a2 * &s.b1)),
            ("x1^3 in g is 1", rel.g.coefficient(&[("x1", 3)]).is_one()),
            ("x2^3 in g is 1", rel.g.coefficient(&[("x2", 3)]).is_one()),
            ("leading form is X^3 + Y^3 - XYZ", lead == expected_lead),
        ];
        writeln!(text, "setting {setting}: a = ({}, {}), b = ({}, {}), c = ({}, {})", s.a1, s.a2, s.b1, s.b2, s.c1, s.c2)
            .unwrap();
        writeln!(text, "  f = {}", rel.f).unwrap();
        writeln!(text, "  g = {}", rel.g).unwrap();
        writeln!(text, "  leading form = {lead}").unwrap();
        for (name, pass) in &checks {
            writeln!(text, "  {}: {name}", if *pass { "PASS" } else { "FAIL" }).unwrap();
            ok &= pass;
        }
        runs.push(json!({
            "boundary": s.boundary().map(ToString::to_string),
            "f": rel.f.to_string(),
            "g": rel.g.to_string(),
            "leading_form": lead.to_string(),
            "checks": checks.iter().map(|(n, p)| json!({ "check": n, "pass": p })).collect::<Vec<_>>(),
        }));
    }
    Ok(Report {
        text,
        json: json!({ "samples_per_setting": samples, "seed": cli.seed, "settings": runs, "ok": ok }),
        ok,
    })
}

fn read_configuration(path: &Path) -> Result<Configuration, String> {
    let s = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Configuration::from_json(&s).map_err(|e| e.to_string())
}

fn cmd_stability(input: &Path) -> CmdResult {
    let cfg = read_configuration(input)?;
    let crit = classify_stability(&cfg);
    let oracle = stability_oracle(&cfg);
    let agree = crit.verdict == oracle.verdict;
    let groups: Vec<Vec<usize>> = crit.grouping.groups.iter().map(|g| g.iter().map(|i| i + 1).collect()).collect();
    let mut text = format!("m1 = {}, m2 = {}\n", crit.m1, crit.m2);
    writeln!(text, "criterion: {}", crit.verdict).unwrap();
    writeln!(text, "oracle: {} (min mu = {})", oracle.verdict, oracle.mu_min.unwrap_or_default()).unwrap();
    writeln!(text, "{}", if agree { "agree" } else { "DISAGREE" }).unwrap();
    Ok(Report {
        text,
        json: json!({
            "n": cfg.n(),
            "generic": cfg.eigen().is_generic(),
            "nilpotent_groups": groups,
            "criterion": crit,
            "oracle": oracle,
            "agree": agree,
        }),
        ok: agree,
    })
}

fn cmd_limit(input: &Path, direction: i32) -> CmdResult {
    let cfg = read_configuration(input)?;
    let limit = one_ps_limit(&cfg, direction).map_err(|e| e.to_string())?;
    let orbit = s_orbit(&limit);
    let mut text = String::from("limit:\n");
    for (i, m) in limit.matrices().iter().enumerate() {
        writeln!(text, "  M{} = {m}", i + 1).unwrap();
    }
    match &orbit {
        Some((name, g)) => writeln!(text, "in the orbit of {name}, witness g = {g}").unwrap(),
        None => writeln!(text, "not in the orbit of s1 or s2").unwrap(),
    }
    Ok(Report {
        text,
        json: json!({
            "direction": direction,
            "limit": limit,
            "orbit": orbit.as_ref().map(|(n, _)| *n),
            "witness": orbit.as_ref().map(|(_, g)| g.to_string()),
        }),
        ok: true,
    })
}

fn superscript(d: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    d.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn cmd_complex(case: &str, certify: Option<usize>, table: bool) -> CmdResult {
    let case: BoundaryCase = case.parse().map_err(|e: charvar::Error| e.to_string())?;
    let c = boundary_complex(case);
    let h = homology(&c);
    let mut ok = true;
    let mut text = format!("{case}: {} vertices\n", c.vertices().len());
    writeln!(text, "face counts: {:?}", c.face_counts()).unwrap();
    writeln!(text, "euler characteristic: {}", c.euler_characteristic()).unwrap();
    writeln!(text, "reduced betti: {:?}", h.reduced_betti).unwrap();
    writeln!(text, "torsion: {:?}", h.torsion.iter().map(|t| t.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
        .unwrap();
    let mut out = json!({
        "case": case,
        "complex": c,
        "face_counts": c.face_counts(),
        "euler_characteristic": c.euler_characteristic(),
        "homology": h,
    });
    if let Some(d) = certify {
        let pass = certify_sphere(&c, d);
        ok &= pass;
        writeln!(text, "S{}: {}", superscript(d), if pass { "PASS" } else { "FAIL" }).unwrap();
        out["certify"] = json!({ "dim": d, "pass": pass });
    }
    if table {
        let tcase = if case == BoundaryCase::N4 { TableCase::N4 } else { TableCase::N5 };
        let problems = table_consistency(tcase);
        let entries = intersection_table(tcase);
        let nonempty = entries
            .iter()
            .filter(|e| e.status == charvar::complex::IntersectionStatus::NonemptyIrreducible)
            .count();
        writeln!(
            text,
            "intersection table: {} entries, {nonempty} nonempty, {}",
            entries.len(),
            if problems.is_empty() { "consistent with the full complex".to_string() } else { format!("{} problems", problems.len()) }
        )
        .unwrap();
        for p in &problems {
            writeln!(text, "  {p}").unwrap();
        }
        ok &= problems.is_empty();
        out["table"] = json!({ "entries": entries, "problems": problems });
    }
    Ok(Report { text, json: out, ok })
}

fn cmd_identities(list: bool, negative_control: bool) -> CmdResult {
    let mut registry: Vec<Identity> = identities();
    if negative_control {
        registry.extend(negative_controls());
    }
    if list {
        let mut text = String::new();
        for id in &registry {
            writeln!(text, "{}: {}", id.name, id.statement).unwrap();
        }
        let json = registry.iter().map(|i| json!({ "name": i.name, "statement": i.statement })).collect();
        return Ok(Report { text, json: Value::Array(json), ok: true });
    }
    let results: Vec<(&Identity, bool)> = registry.iter().map(|id| (id, (id.check)())).collect();
    let held = results.iter().filter(|(_, ok)| *ok).count();
    let mut text = String::new();
    for (id, ok) in &results {
        writeln!(text, "{}: {}", id.name, if *ok { "holds" } else { "FAILS" }).unwrap();
    }
    writeln!(text, "{held}/{} identities hold", results.len()).unwrap();
    Ok(Report {
        text,
        json: json!({
            "held": held,
            "total": results.len(),
            "identities": results.iter().map(|(i, ok)| json!({ "name": i.name, "holds": ok })).collect::<Vec<_>>(),
        }),
        ok: held == results.len(),
    })
}
