//! Euler characteristic, signature, and Betti numbers of the total spaces
//! carrying W as global monodromy, for genus 2 through 9.
//!
//! Run with: cargo run --example invariant_reports

use twistkit::invariants::{
    definite_block, even_genus_report, odd_genus_report, positive_definite_certificate,
};

fn main() {
    println!(
        "{:>5} {:>6} {:>6} {:>4} {:>4} {:>5} {:>6}",
        "genus", "chi", "sigma", "b1", "b2", "b2+", "b2-"
    );
    for g in 2..=9u32 {
        let r = if g % 2 == 0 {
            even_genus_report(g).unwrap()
        } else {
            odd_genus_report(g).unwrap()
        };
        println!(
            "{:>5} {:>6} {:>6} {:>4} {:>4} {:>5} {:>6}",
            r.genus, r.chi, r.sigma, r.b1, r.b2, r.b2_plus, r.b2_minus
        );
    }

    let (ok, minors) = positive_definite_certificate(&definite_block()).unwrap();
    println!("\nodd-genus definiteness certificate (leading principal minors):");
    println!(
        "  {:?} -> positive definite: {ok}",
        minors.iter().map(|d| d.to_string()).collect::<Vec<_>>()
    );

    println!("\nfull odd-genus report with premises (genus 7):");
    println!("{}", odd_genus_report(7).unwrap());

    println!("\nJSON form (genus 2):");
    println!(
        "{}",
        serde_json::to_string(&even_genus_report(2).unwrap()).unwrap()
    );
}
