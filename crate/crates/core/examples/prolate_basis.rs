//! Build the Fourier and Hankel prolate bases and look at their spectra.
//!
//!     cargo run --release --example prolate_basis

use prolatekit::bessel_bases::Bandwidth;
use prolatekit::prolate_core::{
    basis_to_json, build_basis, build_circular_prolate_basis, build_prolate_basis, evaluate_phi, Construction,
};
use prolatekit::bessel_bases::Family;
use prolatekit::specfun::Order;

fn main() {
    let c = Bandwidth::new(10.0).unwrap();
    let basis = build_prolate_basis(c, 60).unwrap();
    println!("c = 10, K = 60");
    for (n, l) in basis.lambdas.iter().enumerate().take(12) {
        println!("  lambda_{n:<2} = {l:.15e}");
    }
    println!("  lambda_59 = {:.3e}", basis.lambdas[59]);

    let psi = basis.eval_all(0.5);
    println!("psi_0(0.5) = {:.12}, psi_1(0.5) = {:.12}", psi[0], psi[1]);
    println!("orthogonality defect of the first 50 columns: {:.2e}", basis.orthogonality_defect(50));

    let gram = build_basis(Family::Fourier, c, 60, Construction::Gram).unwrap();
    let gap = basis.lambdas.iter().zip(&gram.lambdas).take(20).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("tridiagonal vs Gram construction, first 20 eigenvalues: {gap:.2e}");

    let half = build_circular_prolate_basis(Order::new(0.5).unwrap(), c, 40).unwrap();
    println!("alpha = 1/2: lambda_n against the odd Fourier eigenvalues");
    for n in 0..5 {
        println!("  {:.15e}  {:.15e}", half.lambdas[n], basis.lambdas[2 * n + 1]);
    }
    let x = 0.7;
    let (phi, _) = evaluate_phi(&half, 2, x).unwrap();
    println!("phi_2(0.7) = {phi:.12}, sqrt(2) psi_5(0.7) = {:.12}", std::f64::consts::SQRT_2 * basis.eval_all(x)[5]);

    let json = basis_to_json(&basis);
    println!("JSON form: {} bytes", json.len());
}
