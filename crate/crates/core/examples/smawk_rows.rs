//! Row maxima of a totally monotone matrix with SMAWK, checked against a
//! plain scan.

use sepbox::smawk::{naive_row_maxima, row_maxima_counted, ImplicitMatrix};

fn main() {
    let (rows, cols) = (120, 200);
    // -(i - j/2)^2 plus a row offset is inverse Monge
    let a = ImplicitMatrix::new(rows, cols, |i, j| {
        let d = i as f64 - j as f64 / 2.0;
        -(d * d) + ((i * 31) % 17) as f64
    });
    let (fast, evals) = row_maxima_counted(&a);
    let slow = naive_row_maxima(&a);
    assert_eq!(fast, slow);
    println!("{rows}x{cols}: {evals} evaluations ({:.2} per row+col), naive {}", evals as f64 / (rows + cols) as f64, rows * cols);
    println!("first row maxima: {:?}", &fast[..5]);
}
