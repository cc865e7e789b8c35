//! Thin command-line front end; all checking lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use twistkit::artin;
use twistkit::braid::{to_permutation, BraidWord};
use twistkit::fp_group::{self, Monodromy};
use twistkit::homology::{evaluate_twistword, TwistWord};
use twistkit::invariants;
use twistkit::verify::{run_claim, Claim, Report};
use twistkit::word::GenWord;

const MAX_GENUS_ENV: &str = "TWISTKIT_MAX_GENUS";

#[derive(Parser)]
#[command(
    name = "twistkit",
    version,
    about = "Exact verification of Dehn twist relations and the invariants of their Lefschetz fibrations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify named claims; exit 0 only if every requested check passes.
    ///
    /// Claims: L1a L1b L1c L1d L2a L2b L3 (word identities, all parameters),
    /// T3 (the product identity beta_0...beta_g beta^2 = Delta_{2g+1}...Delta_1),
    /// MCG-W (the relation word acts trivially on H_1), CHAIN (chain-relation
    /// shadow), JACT (the involution acts as -I != I).
    Verify {
        /// Claim identifiers, run in the order given.
        #[arg(required = true)]
        claims: Vec<String>,
        /// Check a single genus.
        #[arg(long, conflicts_with = "genus_range")]
        genus: Option<u32>,
        /// Check an inclusive genus range, e.g. 0..5.
        #[arg(long, value_name = "A..B")]
        genus_range: Option<String>,
        /// Raise or lower the per-claim genus cap (default: 6 for oracle
        /// claims, 10 for homology claims; TWISTKIT_MAX_GENUS overrides).
        #[arg(long)]
        max_genus: Option<u32>,
        /// Machine-readable output: a single JSON array on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Report the invariants of the fibration with monodromy W at one genus,
    /// or the first homology of the fiber sum W_n when --n is given.
    Invariants {
        #[arg(long)]
        genus: u32,
        /// Twist multiplicity of the fiber-sum word W_n.
        #[arg(long)]
        n: Option<u64>,
        /// Machine-readable output: a single JSON object on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Act on a word given in the text format `s1 s2^-1 ...`.
    Word {
        /// The word itself; the empty string is the identity.
        #[arg(long)]
        expr: Option<String>,
        /// Read the word from a file instead.
        #[arg(long, conflicts_with = "expr")]
        parse: Option<PathBuf>,
        #[arg(long, value_enum)]
        action: WordAction,
        /// Strand count for permutation/artin actions.
        #[arg(long)]
        strands: Option<usize>,
        /// Genus for the symplectic action (letters become chain twists).
        #[arg(long)]
        genus: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WordAction {
    Reduce,
    Permutation,
    Artin,
    Symplectic,
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Verify {
            claims,
            genus,
            genus_range,
            max_genus,
            json,
        } => cmd_verify(&claims, genus, genus_range.as_deref(), max_genus, json),
        Cmd::Invariants { genus, n, json } => cmd_invariants(genus, n, json),
        Cmd::Word {
            expr,
            parse,
            action,
            strands,
            genus,
        } => cmd_word(expr, parse, action, strands, genus),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn env_max_genus() -> Result<Option<u32>, String> {
    match std::env::var(MAX_GENUS_ENV) {
        Ok(v) => v
            .parse::<u32>()
            .map(Some)
            .map_err(|_| format!("{MAX_GENUS_ENV}={v:?} is not a genus")),
        Err(_) => Ok(None),
    }
}

fn parse_range(s: &str) -> Option<(u32, u32)> {
    let (a, b) = s.split_once("..")?;
    let lo = a.trim().parse().ok()?;
    let hi = b.trim().parse().ok()?;
    (lo <= hi).then_some((lo, hi))
}

fn cmd_verify(
    claim_names: &[String],
    genus: Option<u32>,
    genus_range: Option<&str>,
    max_genus: Option<u32>,
    json: bool,
) -> ExitCode {
    let mut claims = Vec::new();
    for name in claim_names {
        match name.parse::<Claim>() {
            Ok(c) => claims.push(c),
            Err(e) => return usage_error(&e),
        }
    }
    let env_cap = match env_max_genus() {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let range = match genus_range {
        Some(s) => match parse_range(s) {
            Some(r) => Some(r),
            None => return usage_error(&format!("bad --genus-range {s:?}; expected A..B")),
        },
        None => genus.map(|g| (g, g)),
    };

    let mut reports: Vec<Report> = Vec::new();
    for &claim in &claims {
        let cap = max_genus
            .or(env_cap)
            .unwrap_or_else(|| claim.default_max_genus());
        let (lo, hi) = match range {
            Some((lo, hi)) => {
                if lo < claim.min_genus() {
                    return usage_error(&format!(
                        "claim {claim} needs genus >= {}, got {lo}",
                        claim.min_genus()
                    ));
                }
                if hi > cap {
                    return usage_error(&format!(
                        "claim {claim} is capped at genus {cap}; raise --max-genus or \
                         {MAX_GENUS_ENV} to go further"
                    ));
                }
                (lo, hi)
            }
            None => (claim.min_genus(), cap.max(claim.min_genus())),
        };
        for g in lo..=hi {
            reports.push(run_claim(claim, g));
        }
    }

    let all_ok = reports.iter().all(Report::verified);
    if json {
        println!("{}", serde_json::to_string(&reports).expect("serializable"));
    } else {
        for r in &reports {
            println!("{r}");
        }
        println!(
            "{}: {} of {} checks verified",
            if all_ok { "ok" } else { "FAILED" },
            reports.iter().filter(|r| r.verified()).count(),
            reports.len()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_invariants(genus: u32, n: Option<u64>, json: bool) -> ExitCode {
    if genus < 2 {
        return usage_error("invariants need --genus at least 2");
    }
    let cap = match env_max_genus() {
        Ok(v) => v.unwrap_or(20),
        Err(e) => return usage_error(&e),
    };
    if genus > cap {
        return usage_error(&format!(
            "invariants are capped at genus {cap}; set {MAX_GENUS_ENV} to go further"
        ));
    }
    match n {
        None => {
            let report = if genus.is_multiple_of(2) {
                invariants::even_genus_report(genus)
            } else {
                invariants::odd_genus_report(genus)
            };
            match report {
                Ok(r) => {
                    if json {
                        println!("{}", serde_json::to_string(&r).expect("serializable"));
                    } else {
                        println!("{r}");
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Some(0) => usage_error("--n must be at least 1"),
        Some(n) => match fp_group::vanishing_cycle_classes(genus, Monodromy::Wn(n)) {
            Ok(classes) => {
                let h1 = match fp_group::abelianization(&classes) {
                    Ok(h1) => h1,
                    Err(e) => return usage_error(&e.to_string()),
                };
                if json {
                    let doc = json!({
                        "genus": genus,
                        "n": n,
                        "cycles": classes.len(),
                        "h1": h1,
                    });
                    println!("{doc}");
                } else {
                    println!(
                        "genus {genus}, n = {n}: {} vanishing cycles, H1 = {h1}",
                        classes.len()
                    );
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&e.to_string()),
        },
    }
}

fn cmd_word(
    expr: Option<String>,
    parse: Option<PathBuf>,
    action: WordAction,
    strands: Option<usize>,
    genus: Option<u32>,
) -> ExitCode {
    let text = match (expr, parse) {
        (Some(s), None) => s,
        (None, Some(path)) => match std::fs::read_to_string(&path) {
            Ok(s) => s.trim_end().to_string(),
            Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
        },
        _ => return usage_error("exactly one of --expr or --parse is required"),
    };
    let word: GenWord = match text.parse() {
        Ok(w) => w,
        Err(e) => return usage_error(&e.to_string()),
    };

    match action {
        WordAction::Reduce => {
            println!("{word}");
            ExitCode::SUCCESS
        }
        WordAction::Permutation | WordAction::Artin => {
            let Some(n) = strands else {
                return usage_error("--strands is required for this action");
            };
            let braid = match BraidWord::new(n, word) {
                Ok(b) => b,
                Err(e) => return usage_error(&e.to_string()),
            };
            match action {
                WordAction::Permutation => {
                    println!("{}", to_permutation(&braid));
                    ExitCode::SUCCESS
                }
                _ => match artin::evaluate(&braid) {
                    Ok(auto) => {
                        println!("{auto}");
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage_error(&e.to_string()),
                },
            }
        }
        WordAction::Symplectic => {
            let Some(g) = genus else {
                return usage_error("--genus is required for the symplectic action");
            };
            if g < 1 {
                return usage_error("--genus must be at least 1");
            }
            let tw = match TwistWord::from_braid_word(g, &word) {
                Ok(t) => t,
                Err(e) => return usage_error(&e.to_string()),
            };
            match evaluate_twistword(&tw) {
                Ok(m) => {
                    println!("{m}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
    }
}
