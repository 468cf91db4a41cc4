//! Chebyshev primitives: Gauss-Lobatto nodes, interpolation through node
//! samples, stable evaluation, differentiation in coefficient space, and a
//! quadrature oracle for exact series coefficients.
//!
//! Interpolants are stored as coefficients `b_0 .. b_{N-1}` of
//!
//! ```text
//! p(t) = b_0 / 2 + sum_{k >= 1} b_k T_k(t),    t in [-1, 1],
//! ```
//!
//! bound to an interval `[lo, hi]` through the affine map that sends
//! `lo -> -1` and `hi -> +1`. `N` is the number of interpolation nodes, so
//! the polynomial degree is `N - 1`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` together with the number of Gauss-Lobatto
/// samples to place on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub lo: f64,
    pub hi: f64,
    pub node_count: usize,
}

impl Window {
    pub fn new(lo: f64, hi: f64, node_count: usize) -> Result<Self> {
        let w = Window { lo, hi, node_count };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        let err = |reason| Error::InvalidWindow {
            lo: self.lo,
            hi: self.hi,
            node_count: self.node_count,
            reason,
        };
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(err("endpoints must be finite"));
        }
        if !(self.lo < self.hi) {
            return Err(err("lo must be strictly less than hi"));
        }
        if self.node_count < 2 {
            return Err(err("at least 2 nodes are required"));
        }
        Ok(())
    }

    pub fn center(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Affine map from this interval onto `[-1, 1]`.
    pub fn map(&self) -> AffineMap {
        AffineMap {
            a_dom: self.lo,
            b_dom: self.hi,
        }
    }
}

/// The linear change of variables between an interval `[a, b]` and the
/// reference interval `[-1, 1]`. `forward(a) == -1` and `forward(b) == +1`
/// hold exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    a_dom: f64,
    b_dom: f64,
}

impl AffineMap {
    pub fn new(a_dom: f64, b_dom: f64) -> Result<Self> {
        if !a_dom.is_finite() || !b_dom.is_finite() || !(a_dom < b_dom) {
            return Err(Error::InvalidConfig(format!(
                "affine map needs finite a < b, got [{a_dom}, {b_dom}]"
            )));
        }
        Ok(AffineMap { a_dom, b_dom })
    }

    /// Map `x in [a, b]` to `t in [-1, 1]`. The two-distance form keeps the
    /// endpoints exact.
    pub fn forward(&self, x: f64) -> f64 {
        ((x - self.a_dom) - (self.b_dom - x)) / (self.b_dom - self.a_dom)
    }

    /// Map `t in [-1, 1]` back to `[a, b]`.
    pub fn inverse(&self, t: f64) -> f64 {
        let mid = 0.5 * (self.a_dom + self.b_dom);
        let half = 0.5 * (self.b_dom - self.a_dom);
        half.mul_add(t, mid)
    }
}

/// Gauss-Lobatto points of the reference interval `[-1, 1]`, ascending.
///
/// These are `t_k = -cos(k pi / n)` for `k = 0..=n` with `n = node_count - 1`,
/// computed through the sine form `sin(pi (2k - n) / (2n))` and mirrored so
/// the set is exactly symmetric about zero.
pub(crate) fn unit_lobatto_points(node_count: usize) -> Vec<f64> {
    let n = node_count - 1;
    let mut t = vec![0.0; node_count];
    for k in 0..=n / 2 {
        let v = (PI * (2 * k as i64 - n as i64) as f64 / (2.0 * n as f64)).sin();
        t[n - k] = -v;
        t[k] = v;
    }
    t[0] = -1.0;
    t[n] = 1.0;
    t
}

/// Gauss-Lobatto interpolation nodes of a window, ascending from `lo` to `hi`.
pub fn gauss_lobatto_nodes(window: &Window) -> Result<Vec<f64>> {
    window.validate()?;
    let t = unit_lobatto_points(window.node_count);
    let mid = window.center();
    let half = window.half_width();
    let n = window.node_count - 1;
    let mut nodes: Vec<f64> = t.iter().map(|&tk| half.mul_add(tk, mid)).collect();
    nodes[0] = window.lo;
    nodes[n] = window.hi;
    if nodes.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidWindow {
            lo: window.lo,
            hi: window.hi,
            node_count: window.node_count,
            reason: "window too narrow to hold distinct nodes",
        });
    }
    Ok(nodes)
}

/// A polynomial in the Chebyshev basis bound to a window.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebInterpolant {
    window: Window,
    coeffs: Vec<f64>,
}

impl ChebInterpolant {
    /// Assemble from raw coefficients. `coeffs.len()` must match
    /// `window.node_count` and every coefficient must be finite.
    pub fn from_coeffs(window: Window, coeffs: Vec<f64>) -> Result<Self> {
        window.validate()?;
        if coeffs.len() != window.node_count {
            return Err(Error::InvalidConfig(format!(
                "coefficient count {} does not match node count {}",
                coeffs.len(),
                window.node_count
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidConfig(
                "coefficients must be finite".to_string(),
            ));
        }
        Ok(ChebInterpolant { window, coeffs })
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Evaluate at `x` by Clenshaw's backward recurrence. Points outside the
    /// window are extrapolated; callers that care clamp beforehand.
    pub fn evaluate(&self, x: f64) -> f64 {
        let t = self.window.map().forward(x);
        clenshaw(&self.coeffs, t)
    }

    /// Derivative as a new interpolant on the same interval, with one
    /// coefficient less. Exact (to rounding) for polynomial data.
    ///
    /// Uses the standard backward recurrence for the derivative of a
    /// Chebyshev series, then applies the chain-rule factor
    /// `2 / (hi - lo)`.
    pub fn differentiate(&self) -> ChebInterpolant {
        let m = self.coeffs.len();
        let scale = 2.0 / (self.window.hi - self.window.lo);
        let mut d;
        if m <= 1 {
            d = vec![0.0];
        } else {
            let out_len = m - 1;
            d = vec![0.0; out_len];
            d[out_len - 1] = 2.0 * (m - 1) as f64 * self.coeffs[m - 1];
            for j in (0..out_len.saturating_sub(1)).rev() {
                let carry = if j + 2 < out_len { d[j + 2] } else { 0.0 };
                d[j] = carry + 2.0 * (j + 1) as f64 * self.coeffs[j + 1];
            }
            for v in &mut d {
                *v *= scale;
            }
        }
        let len = d.len();
        ChebInterpolant {
            window: Window {
                node_count: len,
                ..self.window
            },
            coeffs: d,
        }
    }
}

fn clenshaw(coeffs: &[f64], t: f64) -> f64 {
    let mut u1 = 0.0;
    let mut u2 = 0.0;
    for &c in coeffs[1..].iter().rev() {
        (u2, u1) = (u1, (2.0 * t).mul_add(u1, c - u2));
    }
    t.mul_add(u1, 0.5 * coeffs[0] - u2)
}

/// Interpolate `f` on the Gauss-Lobatto nodes of `window`.
///
/// The returned polynomial matches `f` at every node and reproduces any
/// polynomial of degree `node_count - 1` or less exactly (to rounding).
///
/// Building a node as `mid + half * t_k` rounds it onto the grid of
/// representable numbers near `mid`; on narrow windows that offset, divided
/// by the half-width, would dominate the derivative of the result. The
/// construction error of each node is captured exactly (Fast2Sum) and the
/// samples are shifted back onto the ideal grid using the interpolant's own
/// derivative, so the coefficients stay consistent with the spectral grid
/// the cosine sum assumes.
pub fn interpolate<F>(mut f: F, window: &Window) -> Result<ChebInterpolant>
where
    F: FnMut(f64) -> f64,
{
    window.validate()?;
    let t = unit_lobatto_points(window.node_count);
    let mid = window.center();
    let half = window.half_width();
    let n = window.node_count - 1;
    let mut nodes = Vec::with_capacity(t.len());
    let mut offsets = Vec::with_capacity(t.len());
    for &tk in &t {
        let o = half * tk;
        let x = mid + o;
        // Fast2Sum recovers the rounding error of mid + o exactly; the
        // larger-magnitude operand must be subtracted first.
        let delta = if mid.abs() >= o.abs() {
            (x - mid) - o
        } else {
            (x - o) - mid
        };
        nodes.push(x);
        offsets.push(delta);
    }
    nodes[0] = window.lo;
    nodes[n] = window.hi;
    // Exact because lo - mid and hi - mid are exact (Sterbenz) and the
    // further additions cancel to the same scale.
    offsets[0] = (window.lo - mid) + half;
    offsets[n] = (window.hi - mid) - half;
    if nodes.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidWindow {
            lo: window.lo,
            hi: window.hi,
            node_count: window.node_count,
            reason: "window too narrow to hold distinct nodes",
        });
    }
    let mut samples = Vec::with_capacity(nodes.len());
    for &x in &nodes {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFiniteSample { at: x, value: v });
        }
        samples.push(v);
    }
    if offsets.iter().all(|d| *d == 0.0) {
        return Ok(ChebInterpolant {
            window: *window,
            coeffs: lobatto_coefficients(&samples),
        });
    }
    let first_pass = ChebInterpolant {
        window: *window,
        coeffs: lobatto_coefficients(&samples),
    };
    let slope = first_pass.differentiate();
    for ((s, &x), &d) in samples.iter_mut().zip(&nodes).zip(&offsets) {
        *s -= slope.evaluate(x) * d;
    }
    Ok(ChebInterpolant {
        window: *window,
        coeffs: lobatto_coefficients(&samples),
    })
}

/// Coefficients of the interpolant through samples taken at the ascending
/// unit Gauss-Lobatto points.
///
/// This is the direct cosine sum `(2/n) * sum'' f(x_j) cos(j k pi / n)` with
/// halved first and last summands; the trailing coefficient carries the
/// extra 1/2 so the stored vector plugs straight into `clenshaw`.
fn lobatto_coefficients(samples: &[f64]) -> Vec<f64> {
    let m = samples.len();
    let n = m - 1;
    // cos(i pi / n) for i = 0..=n, sharing the exactly symmetric node table.
    let cos_table: Vec<f64> = unit_lobatto_points(m).iter().map(|&v| -v).collect();
    let two_n = 2 * n;
    let mut coeffs = vec![0.0; m];
    for (k, out) in coeffs.iter_mut().enumerate() {
        let mut acc = 0.0;
        let mut comp = 0.0;
        for (j, &s) in samples.iter().enumerate() {
            // Ascending nodes put sample j at angle (n - j) pi / n.
            let mut idx = k * (n - j) % two_n;
            if idx > n {
                idx = two_n - idx;
            }
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            // Neumaier-compensated sum; the terms cancel heavily on
            // near-degenerate windows.
            let term = w * s * cos_table[idx];
            let t = acc + term;
            comp += if acc.abs() >= term.abs() {
                (acc - t) + term
            } else {
                (term - t) + acc
            };
            acc = t;
        }
        let norm = if k == n { 1.0 } else { 2.0 };
        *out = norm * (acc + comp) / n as f64;
    }
    coeffs
}

/// Exact Chebyshev series coefficients `a_0 .. a_max_index` of `f` on
/// `[-1, 1]`, in the convention `f = a_0/2 + sum_{n>=1} a_n T_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    pub values: Vec<f64>,
}

impl SeriesCoefficients {
    /// `sum_{n >= from} |a_n|` over the stored range.
    pub fn tail_abs_sum(&self, from: usize) -> f64 {
        self.values.iter().skip(from).map(|a| a.abs()).sum()
    }

    /// `sum_{n >= from} n^2 |a_n|` over the stored range.
    pub fn tail_weighted_sum(&self, from: usize) -> f64 {
        self.values
            .iter()
            .enumerate()
            .skip(from)
            .map(|(n, a)| (n * n) as f64 * a.abs())
            .sum()
    }
}

/// Validation oracle: compute series coefficients by high-resolution
/// quadrature of the weighted inner product
/// `a_n = (2/pi) * integral f(x) T_n(x) (1 - x^2)^{-1/2} dx`.
///
/// The substitution `x = cos(theta)` turns this into a cosine moment on
/// `[0, pi]`, integrated with the composite trapezoid rule over
/// `quadrature_points` panels. For smooth `f` the result converges far
/// faster than any use this crate puts it to; `quadrature_points` must be
/// generous compared to `max_index` (at least 4x is enforced).
pub fn exact_series_coefficients<F>(
    mut f: F,
    max_index: usize,
    quadrature_points: usize,
) -> Result<SeriesCoefficients>
where
    F: FnMut(f64) -> f64,
{
    let q = quadrature_points;
    if q < 4 * (max_index + 1) {
        return Err(Error::InvalidConfig(format!(
            "quadrature_points = {q} is too coarse for max_index = {max_index}"
        )));
    }
    let mut g = Vec::with_capacity(q + 1);
    for j in 0..=q {
        let x = (PI * j as f64 / q as f64).cos();
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFiniteSample { at: x, value: v });
        }
        g.push(v);
    }
    let two_q = 2 * q;
    let mut values = Vec::with_capacity(max_index + 1);
    for n in 0..=max_index {
        let mut acc = 0.0;
        for (j, &gj) in g.iter().enumerate() {
            let w = if j == 0 || j == q { 0.5 } else { 1.0 };
            let idx = n * j % two_q;
            acc += w * gj * (PI * idx as f64 / q as f64).cos();
        }
        values.push(2.0 * acc / q as f64);
    }
    Ok(SeriesCoefficients { values })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2_OVER_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!(
            (got - want).abs() <= tol,
            "got {got:e}, want {want:e} (tol {tol:e})"
        );
    }

    /// Independent oracle: recover the coefficients by solving the dense
    /// collocation system `b_0/2 + sum b_k T_k(t_j) = f(x_j)` with Gaussian
    /// elimination, using the trigonometric T_k definition.
    fn solve_collocation(samples: &[f64]) -> Vec<f64> {
        let m = samples.len();
        let t = unit_lobatto_points(m);
        let mut a = vec![vec![0.0f64; m + 1]; m];
        for (j, row) in a.iter_mut().enumerate() {
            row[0] = 0.5;
            for (k, cell) in row.iter_mut().enumerate().skip(1).take(m - 1) {
                *cell = (k as f64 * t[j].clamp(-1.0, 1.0).acos()).cos();
            }
            row[m] = samples[j];
        }
        for col in 0..m {
            let pivot = (col..m)
                .max_by(|&p, &q| a[p][col].abs().partial_cmp(&a[q][col].abs()).unwrap())
                .unwrap();
            a.swap(col, pivot);
            for row in col + 1..m {
                let factor = a[row][col] / a[col][col];
                for k in col..=m {
                    a[row][k] -= factor * a[col][k];
                }
            }
        }
        let mut x = vec![0.0f64; m];
        for row in (0..m).rev() {
            let mut acc = a[row][m];
            for k in row + 1..m {
                acc -= a[row][k] * x[k];
            }
            x[row] = acc / a[row][row];
        }
        x
    }

    #[test]
    fn coefficients_match_dense_collocation_solve() {
        for (node_count, f) in [
            (5usize, (|x: f64| x.exp()) as fn(f64) -> f64),
            (7, |x: f64| (2.0 * x).sin() + 0.3),
            (9, |x: f64| 1.0 / (1.0 + 4.0 * x * x)),
        ] {
            let w = Window::new(-1.0, 1.0, node_count).unwrap();
            let p = interpolate(f, &w).unwrap();
            let samples: Vec<f64> = gauss_lobatto_nodes(&w)
                .unwrap()
                .into_iter()
                .map(f)
                .collect();
            let want = solve_collocation(&samples);
            for (k, (got, expect)) in p.coeffs().iter().zip(want.iter()).enumerate() {
                assert!(
                    (got - expect).abs() <= 1e-11,
                    "N={node_count}, k={k}: dct {got}, solve {expect}"
                );
            }
        }
    }

    #[test]
    fn lobatto_nodes_three_points() {
        let w = Window::new(-1.0, 1.0, 3).unwrap();
        assert_eq!(gauss_lobatto_nodes(&w).unwrap(), vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn lobatto_nodes_five_points() {
        let w = Window::new(-1.0, 1.0, 5).unwrap();
        let nodes = gauss_lobatto_nodes(&w).unwrap();
        let want = [-1.0, -SQRT2_OVER_2, 0.0, SQRT2_OVER_2, 1.0];
        for (n, w) in nodes.iter().zip(want.iter()) {
            assert_close(*n, *w, 1e-15);
        }
    }

    #[test]
    fn lobatto_nodes_shifted_window() {
        let w = Window::new(0.0, 1.0, 3).unwrap();
        assert_eq!(gauss_lobatto_nodes(&w).unwrap(), vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn lobatto_nodes_hit_endpoints_and_mirror() {
        let w = Window::new(0.3, 2.7, 8).unwrap();
        let nodes = gauss_lobatto_nodes(&w).unwrap();
        assert_eq!(nodes[0], w.lo);
        assert_eq!(nodes[7], w.hi);
        let mid = w.center();
        for k in 0..8 {
            assert_close(nodes[k] - mid, mid - nodes[7 - k], 1e-15 * w.half_width());
        }
        assert!(nodes.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn window_rejects_degenerate_input() {
        assert!(Window::new(1.0, 1.0, 3).is_err());
        assert!(Window::new(0.0, 1.0, 1).is_err());
        assert!(Window::new(f64::NAN, 1.0, 3).is_err());
        assert!(Window::new(2.0, 1.0, 3).is_err());
    }

    #[test]
    fn affine_map_endpoints_exact() {
        let m = AffineMap::new(0.1, 0.7).unwrap();
        assert_eq!(m.forward(0.1), -1.0);
        assert_eq!(m.forward(0.7), 1.0);
        assert_close(m.inverse(m.forward(0.33)), 0.33, 1e-16);
    }

    #[test]
    fn interpolate_constant() {
        let w = Window::new(-2.0, 3.5, 4).unwrap();
        let p = interpolate(|_| 1.0, &w).unwrap();
        let want = [2.0, 0.0, 0.0, 0.0];
        for (c, e) in p.coeffs().iter().zip(want.iter()) {
            assert_close(*c, *e, 1e-15);
        }
        assert_close(p.evaluate(1.234), 1.0, 1e-15);
    }

    #[test]
    fn interpolate_quartic_coefficients() {
        // x^4 = 3/8 T_0 + 1/2 T_2 + 1/8 T_4 on [-1, 1], from the
        // power-reduction identity cos^4 = (3 + 4 cos 2t + cos 4t) / 8.
        let w = Window::new(-1.0, 1.0, 5).unwrap();
        let p = interpolate(|x| x.powi(4), &w).unwrap();
        let want = [0.75, 0.0, 0.5, 0.0, 0.125];
        for (c, e) in p.coeffs().iter().zip(want.iter()) {
            assert_close(*c, *e, 1e-14);
        }
    }

    #[test]
    fn quartic_coefficients_match_quadrature_oracle() {
        let oracle = exact_series_coefficients(|x| x.powi(4), 6, 4096).unwrap();
        let w = Window::new(-1.0, 1.0, 5).unwrap();
        let p = interpolate(|x| x.powi(4), &w).unwrap();
        for k in 0..5 {
            assert_close(p.coeffs()[k], oracle.values[k], 1e-12);
        }
    }

    #[test]
    fn undersampled_t7_aliases_onto_t1() {
        // T_7 sampled on 5 Lobatto points collapses onto T_1.
        let t7 = |x: f64| {
            let c: f64 = x.clamp(-1.0, 1.0);
            (7.0 * c.acos()).cos()
        };
        let w = Window::new(-1.0, 1.0, 5).unwrap();
        let p = interpolate(t7, &w).unwrap();
        let want = [0.0, 1.0, 0.0, 0.0, 0.0];
        for (c, e) in p.coeffs().iter().zip(want.iter()) {
            assert_close(*c, *e, 1e-12);
        }
    }

    #[test]
    fn interpolate_reports_bad_sample() {
        let w = Window::new(-1.0, 1.0, 3).unwrap();
        let err = interpolate(|x| if x == 0.0 { f64::NAN } else { x }, &w).unwrap_err();
        match err {
            Error::NonFiniteSample { at, .. } => assert_eq!(at, 0.0),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn evaluate_t3_at_one() {
        let t3 = |x: f64| 4.0 * x * x * x - 3.0 * x;
        let w = Window::new(-1.0, 1.0, 4).unwrap();
        let p = interpolate(t3, &w).unwrap();
        assert_close(p.evaluate(1.0), 1.0, 1e-14);
    }

    #[test]
    fn evaluate_quartic_interior() {
        let w = Window::new(-1.0, 1.0, 5).unwrap();
        let p = interpolate(|x| x.powi(4), &w).unwrap();
        assert_close(p.evaluate(0.3), 0.0081, 1e-15);
    }

    #[test]
    fn differentiate_linear() {
        let w = Window::new(-1.0, 1.0, 2).unwrap();
        let dp = interpolate(|x| x, &w).unwrap().differentiate();
        assert_eq!(dp.coeffs().len(), 1);
        assert_close(dp.evaluate(-0.7), 1.0, 1e-15);
        assert_close(dp.evaluate(0.4), 1.0, 1e-15);
    }

    #[test]
    fn differentiate_t3_endpoint() {
        // T_3'(1) = 3 U_2(1) = 9.
        let t3 = |x: f64| 4.0 * x * x * x - 3.0 * x;
        let w = Window::new(-1.0, 1.0, 4).unwrap();
        let dp = interpolate(t3, &w).unwrap().differentiate();
        assert_close(dp.evaluate(1.0), 9.0, 1e-12);
    }

    #[test]
    fn differentiate_quartic_tight_window() {
        let w = Window::new(0.4999, 0.5001, 5).unwrap();
        let dp = interpolate(|x| x.powi(4), &w).unwrap().differentiate();
        assert_close(dp.evaluate(0.5), 0.5, 1e-12);
    }

    #[test]
    fn differentiate_scales_with_window() {
        // d/dx of x^2 on [0, 4] at x = 3.
        let w = Window::new(0.0, 4.0, 3).unwrap();
        let dp = interpolate(|x| x * x, &w).unwrap().differentiate();
        assert_close(dp.evaluate(3.0), 6.0, 1e-13);
    }

    #[test]
    fn series_oracle_orthonormality() {
        let t2 = |x: f64| 2.0 * x * x - 1.0;
        let a = exact_series_coefficients(t2, 6, 2048).unwrap();
        assert_close(a.values[2], 1.0, 1e-12);
        for (n, v) in a.values.iter().enumerate() {
            if n != 2 {
                assert_close(*v, 0.0, 1e-12);
            }
        }
    }

    #[test]
    fn series_oracle_constant() {
        let a = exact_series_coefficients(|_| 1.0, 3, 1024).unwrap();
        assert_close(a.values[0], 2.0, 1e-13);
    }

    #[test]
    fn series_oracle_quartic() {
        let a = exact_series_coefficients(|x| x.powi(4), 6, 4096).unwrap();
        assert_close(a.values[0], 0.75, 1e-12);
        assert_close(a.values[2], 0.5, 1e-12);
        assert_close(a.values[4], 0.125, 1e-12);
        assert_close(a.values[1], 0.0, 1e-12);
        assert_close(a.values[3], 0.0, 1e-12);
    }

    #[test]
    fn series_oracle_rejects_coarse_grid() {
        assert!(exact_series_coefficients(|x| x, 100, 128).is_err());
    }
}
