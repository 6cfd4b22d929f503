//! The signature step function of a knot over the upper half circle.
//!
//! Run with: cargo run --example signature_profile

use knotsig::cli::profile_tsv;
use knotsig::{signature_profile, SeifertMatrix};

fn main() {
    let trefoil = SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, -1]]).unwrap();
    let profile = signature_profile(&trefoil).unwrap();

    println!("trefoil signature profile (x = cos theta, decreasing):");
    for jump in profile.jumps() {
        match &jump.exact_x {
            Some(x) => println!("  jump at x = {x} (multiplicity {})", jump.interval.multiplicity),
            None => println!(
                "  jump in ({}, {}) (multiplicity {})",
                jump.interval.lo, jump.interval.hi, jump.interval.multiplicity
            ),
        }
    }
    for arc in profile.arcs() {
        println!(
            "  arc sample x = {}: rank {}, signature {}",
            arc.sample_x, arc.rank, arc.signature
        );
    }
    println!("  at omega = -1: signature {}", profile.value_at_minus_one());

    println!("\nTSV export (what `knotsig profile --tsv` writes):");
    print!("{}", profile_tsv(&trefoil, &profile));
}
