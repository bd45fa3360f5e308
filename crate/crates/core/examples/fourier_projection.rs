//! Band-limit a Gaussian with the sinc and Hilbert routes.
//!
//!     cargo run --release --example fourier_projection

use prolatekit::bessel_bases::{default_real_grid, Bandwidth, Domain, SampledFunction};
use prolatekit::tail::TailModel;
use prolatekit::transforms::{fourier_out_of_band, project_fourier, FourierRoute};

fn main() {
    let c = Bandwidth::new(4.0).unwrap();
    let grid = default_real_grid(c);
    let r = grid.upper();
    let f = SampledFunction::from_fn(grid, Domain::RealLineTruncated, |x| (-(x / 0.3).powi(2)).exp(), TailModel::zero(r));
    println!("input: exp(-(x/0.3)^2), out-of-band mass {:.4}", fourier_out_of_band(&f, c).unwrap());

    let sinc = project_fourier(&f, c, FourierRoute::Sinc).unwrap();
    let hilbert = project_fourier(&f, c, FourierRoute::Hilbert).unwrap();
    for x in [0.0, 0.5, 1.0, 2.0, 5.0] {
        println!("P_c f({x}) = {:+.10}  (hilbert route {:+.10})", sinc.eval(x), hilbert.eval(x));
    }
    println!("out-of-band mass after projection: {:.2e}", fourier_out_of_band(&sinc, c).unwrap());
    let again = project_fourier(&sinc, c, FourierRoute::Sinc).unwrap();
    println!("|P P f - P f| at 0.7: {:.2e}", (again.eval(0.7) - sinc.eval(0.7)).abs());
}
