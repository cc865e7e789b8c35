//! Exhaustive verification of the supporting word identities over every
//! valid parameter choice, genus 1 through 5.
//!
//! Run with: cargo run --example lemma_suite

use twistkit::artin;
use twistkit::braid::{lemma_cases, LemmaId};

fn main() {
    let mut total = 0usize;
    let mut failed = 0usize;
    for id in LemmaId::ALL {
        print!("{id}: ");
        let mut counts = Vec::new();
        for g in 1..=5u32 {
            let cases = lemma_cases(id, g);
            counts.push(format!("g={g}:{}", cases.len()));
            for case in cases {
                total += 1;
                if !artin::braid_equal(&case.lhs, &case.rhs).unwrap() {
                    failed += 1;
                    eprintln!("  FALSIFIED at genus {g}, {}", case.label);
                }
            }
        }
        println!("{}", counts.join("  "));
    }
    println!("\n{total} instances checked, {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
