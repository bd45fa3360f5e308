use super::gamma::ln_gamma;

/// Legendre polynomial `P_n(x)` by the three-term recurrence.
pub fn legendre_p(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_0(x), ..., P_{n_max}(x)`.
pub fn legendre_sequence(n_max: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(1.0);
    if n_max == 0 {
        return out;
    }
    out.push(x);
    for k in 1..n_max {
        let kf = k as f64;
        out.push(((2.0 * kf + 1.0) * x * out[k] - kf * out[k - 1]) / (kf + 1.0));
    }
    out
}

/// `P_n(x)` and `P_n'(x)`.
pub fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut prev, mut cur) = (1.0, x);
    let (mut dprev, mut dcur) = (0.0, 1.0);
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        let dnext = dprev + (2.0 * kf + 1.0) * cur;
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    (cur, dcur)
}

/// Jacobi polynomial `P_n^{(alpha, 0)}(x)` with `P_n^{(alpha,0)}(1) = (n+alpha choose n)`.
pub fn jacobi_p(n: usize, alpha: f64, x: f64) -> f64 {
    *jacobi_sequence(n, alpha, x).last().unwrap()
}

/// `P_0^{(alpha,0)}(x), ..., P_{n_max}^{(alpha,0)}(x)`.
pub fn jacobi_sequence(n_max: usize, alpha: f64, x: f64) -> Vec<f64> {
    let a = alpha;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(1.0);
    if n_max == 0 {
        return out;
    }
    out.push(0.5 * (a + 2.0) * x + 0.5 * a);
    for n in 1..n_max {
        // standard recurrence with beta = 0, advancing from degree n to n+1
        let nf = n as f64;
        let s = 2.0 * nf + a; // 2n + alpha + beta
        let c1 = 2.0 * (nf + 1.0) * (nf + a + 1.0) * s;
        let c2 = (s + 1.0) * (a * a);
        let c3 = s * (s + 1.0) * (s + 2.0);
        let c4 = 2.0 * (nf + a) * nf * (s + 2.0);
        let next = ((c2 + c3 * x) * out[n] - c4 * out[n - 1]) / c1;
        out.push(next);
    }
    out
}

/// `P_n^{(alpha,0)}(1) = Gamma(n+alpha+1) / (Gamma(n+1) Gamma(alpha+1))`.
pub fn jacobi_at_one(n: usize, alpha: f64) -> f64 {
    let nf = n as f64;
    (ln_gamma(nf + alpha + 1.0).unwrap() - ln_gamma(nf + 1.0).unwrap() - ln_gamma(alpha + 1.0).unwrap())
        .exp()
}
