//! The relation word on first homology: W evaluates to the identity matrix
//! in Sp(2g, Z), while the hyperelliptic involution evaluates to -I. That
//! distinction is what pins the relation to the identity rather than the
//! involution.
//!
//! Run with: cargo run --example homology_shadow

use twistkit::homology::{
    curve_class, evaluate_twistword, hyperelliptic_matrix, relation_word, CurveLabel,
};

fn main() {
    for g in 2..=8u32 {
        let w = relation_word(g).unwrap();
        let m = evaluate_twistword(&w).unwrap();
        let j = hyperelliptic_matrix(g);
        println!(
            "g={g}: W has {:2} twists; W acts trivially: {}   involution = -I != I: {}",
            w.twist_count(),
            m.is_identity(),
            !j.is_identity() && j.mul(&j).unwrap().is_identity(),
        );
        assert!(m.is_identity());
        assert!(!j.is_identity());
    }

    // The twist curves of W at genus 4, with their homology classes.
    let g = 4;
    println!("\ntwist curves of W at genus {g}:");
    for (label, e) in relation_word(g).unwrap().factors().iter().take(g as usize + 2) {
        let c = curve_class(*label, g).unwrap();
        println!("  t[{label}]^{e}: class {c}");
    }
    println!("  (then the same block once more)");

    // Symplectic-form preservation of an assortment of evaluated words.
    let m = evaluate_twistword(&relation_word(5).unwrap()).unwrap();
    assert!(m.is_symplectic());
    let t = twistkit::homology::transvection(&curve_class(CurveLabel::BSeries(3), 5).unwrap(), -2);
    assert!(t.is_symplectic());
    println!("\nall evaluated matrices preserve the intersection form");
}
