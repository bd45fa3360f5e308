//! Spherical Bessel bases, their band-limited images and L^p norms.
//!
//!     cargo run --release --example bessel_bases

use prolatekit::bessel_bases::{
    default_real_grid, fourier_image_j, gram_time_limited, hankel_image_j, lp_norm_bessel, lp_rate, sample_spherical_j,
    spherical_j, spherical_j_hankel, Bandwidth, Family,
};
use prolatekit::specfun::Order;

fn main() {
    let c = Bandwidth::new(4.0).unwrap();
    let alpha = Order::new(1.0).unwrap();
    for n in 0..4 {
        println!(
            "j_{n}(1.3) = {:+.12}   tilde j_{n}(1.3) = {:+.12}   image at xi = 2: {:.6}",
            spherical_j(n, c, 1.3),
            spherical_j_hankel(n, alpha, c, 1.3).unwrap(),
            fourier_image_j(n, c, 2.0).value(),
        );
    }
    println!("Hankel image of tilde j_2 at 1.5: {:.12}", hankel_image_j(2, alpha, c, 1.5));

    let grid = default_real_grid(c);
    let j1 = sample_spherical_j(1, c, &grid);
    let j3 = sample_spherical_j(3, c, &grid);
    println!("<j_1, j_1> = {:.12}, <j_1, j_3> = {:.1e}", j1.inner(&j1).unwrap(), j1.inner(&j3).unwrap());

    let g = gram_time_limited(Family::Fourier, c, 8);
    println!("time-limited Gram matrix, first row: {:?}", g.row(0).iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>());

    let one = Bandwidth::new(1.0).unwrap();
    for p in [1.5, 2.0, 4.0, 6.0] {
        let norm = lp_norm_bessel(20, p, Family::Fourier, one).unwrap();
        let ns: Vec<usize> = (10..=80).step_by(5).collect();
        let rate = lp_rate(p, Family::Fourier, one, &ns).unwrap();
        let predicted = rate.predicted.map_or("log-corrected".to_string(), |v| format!("{v:.4}"));
        println!("p = {p}: ||j_20||_p = {:.6e}, fitted slope {:.4} (predicted {predicted})", norm.value, rate.slope);
    }
}
