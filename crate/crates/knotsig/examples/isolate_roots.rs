//! Exact real root isolation with Sturm sequences.
//!
//! Run with: cargo run --example isolate_roots

use knotsig::{rat, rat_int, sturm_isolate, sturm_isolate_with_width, IntPolynomial};

fn main() {
    // (2x - 1)^2 (x + 2) (8x - 7): a double root next to a simple one
    let factors: [&[i64]; 4] = [&[-1, 2], &[-1, 2], &[2, 1], &[-7, 8]];
    let mut p = IntPolynomial::one();
    for f in factors {
        p = &p * &IntPolynomial::from_i64(f);
    }
    println!("p(x) = {}", p.to_string_in("x"));

    let intervals = sturm_isolate(&p, &rat_int(-3), &rat_int(3)).unwrap();
    println!("roots in (-3, 3), default width 1/64:");
    for iv in &intervals {
        println!(
            "  ({}, {})  width {}  multiplicity {}",
            iv.lo,
            iv.hi,
            iv.width(),
            iv.multiplicity
        );
    }

    // tighter refinement on request
    let fine = sturm_isolate_with_width(&p, &rat_int(-3), &rat_int(3), &rat(1, 4096)).unwrap();
    println!("same roots refined below 1/4096:");
    for iv in &fine {
        println!("  ({}, {})", iv.lo, iv.hi);
    }

    // the square-free part drives the isolation
    println!("square-free part: {}", p.squarefree_part().unwrap().to_string_in("x"));
}
