//! Empirical decay of the prolate coefficients in the Bessel basis.
//!
//!     cargo run --release --example decay_certificate

use prolatekit::bessel_bases::Bandwidth;
use prolatekit::prolate_core::{build_circular_prolate_basis, build_prolate_basis, certify_decay};
use prolatekit::specfun::Order;

fn main() {
    let c = Bandwidth::new(10.0).unwrap();
    let fourier = certify_decay(&build_prolate_basis(c, 60).unwrap(), 10);
    println!("fourier: C0 = {:.3e}, C1 = {:.3e}, leading {}, off-diagonal {}",
        fourier.c0, fourier.c1, fourier.leading_pass, fourier.off_diagonal_pass);
    for row in fourier.rows.iter().step_by(8) {
        println!("  n = {:2}: |b_0| n^2 = {:.3e}, worst k = {:2}, product {:.3e}", row.n, row.leading, row.worst_k, row.off_diagonal);
    }
    for a in [0.0, 0.5, 2.0] {
        let cert = certify_decay(&build_circular_prolate_basis(Order::new(a).unwrap(), c, 60).unwrap(), 10);
        println!("hankel alpha = {a}: C0 = {:.3e}, C1 = {:.3e}, passes {}", cert.c0, cert.c1, cert.passes());
    }
}
