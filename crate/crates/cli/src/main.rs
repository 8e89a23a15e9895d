//! `kas`: verification reports and small calculators for the deformed
//! velocity/multiplicative group laws.
//!
//! Exit status: 0 when every check passes (flagged notes included), 1 on a
//! failed check or a domain error, 2 on a usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kas_core::arith::{is_prime, CycloNum, FpElem, FpPoly};
use kas_core::cyclotomic::{specialize, specialize_phi, verify_cyclotomic, SpecializationReport};
use kas_core::laws::verify_group_laws;
use kas_core::matrix::verify_matrices;
use kas_core::morphisms::verify_morphisms;
use kas_core::relativity::{add_velocity, boost_matrix, gamma, rapidity, Velocity};
use kas_core::report::Report;

const DEFAULT_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Parser)]
#[command(
    name = "kas",
    version,
    about = "Exact checks for the deformed velocity group laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    Grouplaws,
    Matrices,
    Morphisms,
    Cyclotomic,
    All,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        /// Primes for the cyclotomic suite.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Relativistic sum of two velocities.
    #[command(allow_negative_numbers = true)]
    Addvel {
        u: f64,
        v: f64,
        /// Speed of light (positional form).
        c_pos: Option<f64>,
        #[arg(long = "c", conflicts_with = "c_pos")]
        c: Option<f64>,
    },
    /// Boost matrix acting on (x, t).
    #[command(allow_negative_numbers = true)]
    Boost {
        u: f64,
        #[arg(long = "c", default_value_t = 1.0)]
        c: f64,
    },
    /// Reduction of the Kummer maps over Z[zeta_p] modulo h = zeta - 1.
    Kummer {
        #[arg(long = "p")]
        p: u64,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

type CmdResult = Result<bool, Failure>;

fn domain(e: kas_core::Error) -> Failure {
    Failure::Domain(e.to_string())
}

fn run_scope(scope: Scope, primes: &[u64]) -> kas_core::Result<Report> {
    Ok(match scope {
        Scope::Grouplaws => verify_group_laws()?,
        Scope::Matrices => verify_matrices()?,
        Scope::Morphisms => verify_morphisms()?,
        Scope::Cyclotomic => verify_cyclotomic(primes)?,
        Scope::All => Report::merge(
            "all",
            [
                verify_group_laws()?,
                verify_matrices()?,
                verify_morphisms()?,
                verify_cyclotomic(primes)?,
            ],
        ),
    })
}

fn cmd_verify(scope: Scope, primes: Option<Vec<u64>>, format: Format) -> CmdResult {
    let primes = primes.unwrap_or_else(|| DEFAULT_PRIMES.to_vec());
    if primes.is_empty() {
        return Err(Failure::Usage("--primes needs at least one prime".into()));
    }
    if let Some(bad) = primes.iter().find(|p| !is_prime(**p)) {
        return Err(Failure::Usage(format!("{bad} is not prime")));
    }
    let report = run_scope(scope, &primes).map_err(domain)?;
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).map_err(|e| Failure::Domain(e.to_string()))?
        ),
    }
    Ok(report.all_passed())
}

fn cmd_addvel(u: f64, v: f64, c: f64) -> CmdResult {
    let (uv, vv) = (
        Velocity::new(u, c).map_err(domain)?,
        Velocity::new(v, c).map_err(domain)?,
    );
    let w = add_velocity(&uv, &vv).map_err(domain)?;
    println!("{u} (+) {v} = {} (c = {c})", w.value());
    match (rapidity(&uv), rapidity(&vv), rapidity(&w)) {
        (Ok(ru), Ok(rv), Ok(rw)) => {
            println!("rapidity: {ru} + {rv} = {}", ru + rv);
            println!("rapidity of sum: {rw}");
        }
        _ => println!("rapidity: undefined at light speed"),
    }
    Ok(true)
}

fn cmd_boost(u: f64, c: f64) -> CmdResult {
    let uv = Velocity::new(u, c).map_err(domain)?;
    let b = boost_matrix(&uv).map_err(domain)?;
    let m = &b.matrix.m;
    println!("gamma = {}", gamma(&uv).map_err(domain)?);
    println!("L = [[{}, {}],", m[0][0], m[0][1]);
    println!("     [{}, {}]]", m[1][0], m[1][1]);
    println!("det = {}", b.matrix.det());
    Ok(true)
}

fn verdict_line(name: &str, ok: bool) -> String {
    format!("  [{}] {name}", if ok { "PASS" } else { "FAIL" })
}

fn fiber_text(p: u64, f: &FpPoly) -> String {
    if *f == FpPoly::artin_schreier(p) {
        format!("u^{p} - u")
    } else {
        f.to_string()
    }
}

fn print_kummer(r: &SpecializationReport) -> kas_core::Result<()> {
    let p = r.p;
    let h = CycloNum::uniformizer(p)?;
    println!("p = {p}, h = zeta - 1 = {h}");
    println!("h^{} = {}", p - 1, h.pow((p - 1) as u32));
    println!("w = h^{}/{p} = {} = {}", p - 1, r.w, r.w.display_in_h());
    println!("ramification:");
    for name in ["valuation", "w_integral", "w_unit", "w_residue"] {
        println!("{}", verdict_line(name, r.verdict(name).unwrap_or(false)));
    }
    println!("psi_{p}(u) coefficients (zeta basis) and residues mod h:");
    for (i, c) in r.psi_coeffs.iter().enumerate().rev() {
        let residue = c
            .reduce_mod_h()
            .map(|x| x.symmetric().to_string())
            .unwrap_or_else(|_| "non-integral".into());
        println!("  u^{i}: {c}  ->  {residue}");
    }
    if p == 3 {
        let zeta = CycloNum::zeta(3)?;
        let z2 = zeta.pow(2);
        let c = &r.psi_coeffs;
        let matches = c[3] == CycloNum::one(3)? && c[2] == -(z2.clone() * h.clone()) && c[1] == -z2;
        println!(
            "psi_3(u) = u^3 - ζ^2·h·u^2 - ζ^2·u  [{}]",
            if matches { "matches" } else { "MISMATCH" }
        );
    }
    if let Some(f) = &r.psi_mod_h {
        println!("special fiber: psi_{p} mod h = {}", fiber_text(p, f));
    }
    for name in ["psi_integral", "psi_extreme_coeffs", "psi_fiber"] {
        println!("{}", verdict_line(name, r.verdict(name).unwrap_or(false)));
    }
    if p == 2 {
        println!("phi_2: inapplicable (denominator vanishes mod h for p = 2)");
        return Ok(());
    }
    println!(
        "phi_{p} = N/D with N = ((1+hu)^{p} - (1-hu)^{p})/h^{p}, D = (1+hu)^{p} + (1-hu)^{p}:"
    );
    if let Some(n) = &r.phi_num_mod_h {
        let two = FpElem::new(p, 2)?;
        if *n == FpPoly::artin_schreier(p).scale(two) {
            println!("  N mod h = 2u^{p} - 2u");
        } else {
            println!("  N mod h = {n}");
        }
    }
    if let Some(d) = &r.phi_den_mod_h {
        match d.constant_term() {
            Some(c) => println!("  D mod h = {}", c.value()),
            None => println!("  D mod h = {d}"),
        }
    }
    if let Some(q) = &r.phi_mod_h {
        println!("special fiber: phi_{p} mod h = {}", fiber_text(p, q));
    }
    for name in [
        "phi_num_integral",
        "phi_den_integral",
        "phi_at_zero",
        "phi_num_fiber",
        "phi_den_fiber",
        "phi_fiber",
    ] {
        println!("{}", verdict_line(name, r.verdict(name).unwrap_or(false)));
    }
    Ok(())
}

fn cmd_kummer(p: u64) -> CmdResult {
    if !is_prime(p) {
        return Err(Failure::Usage(format!("{p} is not prime")));
    }
    let r = if p == 2 {
        specialize(p)
    } else {
        specialize_phi(p)
    }
    .map_err(domain)?;
    print_kummer(&r).map_err(domain)?;
    println!(
        "verdict: psi_{p} mod h = u^p - u: {}",
        if r.verdict("psi_fiber") == Some(true) {
            "PASS"
        } else {
            "FAIL"
        }
    );
    Ok(r.all_passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            scope,
            primes,
            format,
        } => cmd_verify(scope, primes, format),
        Command::Addvel { u, v, c_pos, c } => cmd_addvel(u, v, c.or(c_pos).unwrap_or(1.0)),
        Command::Boost { u, c } => cmd_boost(u, c),
        Command::Kummer { p } => cmd_kummer(p),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
