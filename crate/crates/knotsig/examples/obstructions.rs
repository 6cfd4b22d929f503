//! Slice and doubly-slice obstruction verdicts.
//!
//! Both tests are one-sided: Obstructed is a proof, Inconclusive is not a
//! certificate of (double) sliceness. The figure-eight knot shows why:
//! its signature vanishes identically although it is not slice.
//!
//! Run with: cargo run --example obstructions

use knotsig::{
    doubly_slice_obstruction, seifert_matrix_a_k, slice_obstruction, SeifertMatrix, Verdict,
};

fn show(verdict: &knotsig::ObstructionVerdict) -> String {
    let mut s = match verdict.verdict {
        Verdict::Obstructed => "OBSTRUCTED".to_string(),
        Verdict::Inconclusive => "inconclusive".to_string(),
    };
    if let Some(w) = &verdict.witness {
        s.push_str(&format!(" [{}: rank {}, signature {}]", w.point, w.rank, w.signature));
    }
    s
}

fn main() {
    let knots = vec![
        ("unknot", SeifertMatrix::unknot()),
        (
            "trefoil",
            SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, -1]]).unwrap(),
        ),
        (
            "figure-eight",
            SeifertMatrix::from_rows(vec![vec![1, 1], vec![0, -1]]).unwrap(),
        ),
        ("P(3,-3,-4)", seifert_matrix_a_k(2).unwrap()),
        ("P(3,-3,-12)", seifert_matrix_a_k(6).unwrap()),
    ];
    for (name, matrix) in &knots {
        println!("{name}:");
        println!("  slice:        {}", show(&slice_obstruction(matrix).unwrap()));
        println!(
            "  doubly slice: {}",
            show(&doubly_slice_obstruction(matrix).unwrap())
        );
    }
}
