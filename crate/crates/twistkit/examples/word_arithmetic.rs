//! Word arithmetic and the three evaluation maps: permutation, free-group
//! automorphism, symplectic matrix.
//!
//! Run with: cargo run --example word_arithmetic

use twistkit::artin;
use twistkit::braid::{to_permutation, BraidWord};
use twistkit::homology::{evaluate_twistword, TwistWord};
use twistkit::word::GenWord;

fn main() {
    // Reduction and group operations on raw words.
    let u: GenWord = "s1 s2 s2^-1 s1".parse().unwrap();
    println!("reduce(s1 s2 s2^-1 s1)     = {u}");
    let v: GenWord = "s2^-1 s3".parse().unwrap();
    println!("(s1 s2) * (s2^-1 s3)       = {}", "s1 s2".parse::<GenWord>().unwrap().multiply(&v));
    println!("inverse(s1 s2)             = {}", "s1 s2".parse::<GenWord>().unwrap().invert());
    println!(
        "conjugate(s2 by s1)        = {}",
        "s2".parse::<GenWord>().unwrap().conjugate(&"s1".parse().unwrap())
    );

    // Permutation projection, rightmost letter first.
    let braid = BraidWord::new(3, "s1 s2 s1".parse().unwrap()).unwrap();
    println!("\ns1 s2 s1 on 3 strands      -> permutation {}", to_permutation(&braid));

    // The free-group action distinguishes words the permutation cannot.
    let full_twist = BraidWord::new(2, "s1 s1".parse().unwrap()).unwrap();
    println!(
        "s1 s1 on 2 strands         -> permutation {} (trivial), automorphism:",
        to_permutation(&full_twist)
    );
    println!("{}", indent(&artin::evaluate(&full_twist).unwrap().to_string()));

    // The same word as Dehn twists about the chain curves, on homology.
    let tw = TwistWord::from_braid_word(1, &"s1 s1".parse().unwrap()).unwrap();
    println!("as chain twists at genus 1 -> symplectic matrix:");
    println!("{}", indent(&evaluate_twistword(&tw).unwrap().to_string()));
}

fn indent(s: &str) -> String {
    s.lines()
        .map(|l| format!("    {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}
