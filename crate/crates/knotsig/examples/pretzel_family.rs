//! Doubly-slice verdicts across the pretzel family P(3,-3,-m).
//!
//! Even m is decided by the signature of the explicit Seifert matrix
//! A_(m/2); odd m by the parameter classifier for odd pretzel knots.
//! Only m = 3 (the knot m(9_46)) survives both tests.
//!
//! Run with: cargo run --example pretzel_family

use knotsig::{pretzel_3_minus3_m_verdict, Verdict};

fn main() {
    println!("{:<14} {:<10} {:<14} criterion", "knot", "route", "doubly slice");
    for m in 3..=12 {
        let verdict = pretzel_3_minus3_m_verdict(m).unwrap();
        let route = if m % 2 == 0 { "signature" } else { "parameters" };
        let label = match verdict.verdict {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Inconclusive => "inconclusive",
        };
        let knot = format!("P(3,-3,-{m})");
        println!("{knot:<14} {route:<10} {label:<14} {}", verdict.criterion);
        if let Some(w) = &verdict.witness {
            println!(
                "{:<39} witness {}: rank {}, signature {}",
                "", w.point, w.rank, w.signature
            );
        }
    }
}
