//! Alexander polynomials and knot determinants from Seifert matrices.
//!
//! Run with: cargo run --example alexander

use knotsig::{seifert_matrix_a_k, SeifertMatrix};

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
        (
            "torus 5_1",
            SeifertMatrix::from_rows(vec![
                vec![-1, 1, 0, 0],
                vec![0, -1, 1, 0],
                vec![0, 0, -1, 1],
                vec![0, 0, 0, -1],
            ])
            .unwrap(),
        ),
    ];
    for (name, matrix) in &knots {
        let delta = matrix.alexander_polynomial();
        println!("{name:<12} Delta(t) = {delta}");
        println!("{:<12} determinant = {}", "", matrix.knot_determinant());
    }

    // the whole pretzel family P(3,-3,-2k) shares one Alexander polynomial
    println!();
    for k in 2..=6 {
        let a_k = seifert_matrix_a_k(k).unwrap();
        println!(
            "{:<12} Delta(t) = {}",
            a_k.name().unwrap(),
            a_k.alexander_polynomial()
        );
    }
}
