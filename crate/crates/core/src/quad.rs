//! Adaptive Simpson quadrature for smooth radial integrands.

/// Integrate `f` over [a, b] to the requested relative tolerance.
///
/// Two-stage: a coarse scan sets the magnitude scale, then classic
/// recursive Simpson with Richardson acceptance. Deterministic.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    // magnitude scale from a fixed 64-panel scan
    let n = 64;
    let h = (b - a) / n as f64;
    let mut scale = 0.0;
    for i in 0..n {
        let x0 = a + i as f64 * h;
        scale += simpson(f, x0, x0 + h).abs();
    }
    let eps = rel_tol * scale.max(1e-300);
    let mut total = 0.0;
    for i in 0..n {
        let x0 = a + i as f64 * h;
        let x1 = x0 + h;
        let whole = simpson(f, x0, x1);
        total += adapt(f, x0, x1, whole, eps / n as f64, 40);
    }
    total
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let m = 0.5 * (a + b);
    (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
}

fn adapt(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, eps: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let left = simpson(f, a, m);
    let right = simpson(f, m, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        left + right + delta / 15.0
    } else {
        adapt(f, a, m, left, eps / 2.0, depth - 1) + adapt(f, m, b, right, eps / 2.0, depth - 1)
    }
}
