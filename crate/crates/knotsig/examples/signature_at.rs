//! Exact Levine-Tristram signatures at chosen circle points.
//!
//! The point omega = x + i sqrt(1 - x^2) is exact for any rational x;
//! x = 1/2 is the sixth root of unity e^(i pi/3), where the form of
//! P(3,-3,-2k) drops to rank 5 with signature -1.
//!
//! Run with: cargo run --example signature_at

use knotsig::{levine_tristram_at, rat, seifert_matrix_a_k, signature_matrix, CirclePoint};

fn main() {
    let a_2 = seifert_matrix_a_k(2).unwrap();
    println!("knot: {}", a_2.name().unwrap());

    for (num, den) in [(1i64, 1i64), (3, 4), (1, 2), (0, 1), (-1, 2), (-1, 1)] {
        let point = CirclePoint::upper(rat(num, den)).unwrap();
        let (rank, signature) = levine_tristram_at(&a_2, &point);
        println!("  {point}: rank {rank}, signature {signature}");
    }

    // the Hermitian form itself at the sixth root of unity, over u^2 = -3
    let omega = CirclePoint::upper(rat(1, 2)).unwrap();
    let m = signature_matrix(&a_2, &omega);
    println!("\nM(omega) at x = 1/2 over u^2 = -{}:", m.field_tag());
    for i in 0..m.dimension() {
        let row: Vec<String> = (0..m.dimension()).map(|j| m.entry(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
}
