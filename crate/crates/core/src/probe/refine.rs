/// Abscissa of the vertex of the parabola through three points.
///
/// Returns `None` unless the parabola opens upward, or when the abscissas
/// are not strictly increasing. The result is clamped to `[x0, x2]`.
pub fn parabolic_vertex(x0: f64, f0: f64, x1: f64, f1: f64, x2: f64, f2: f64) -> Option<f64> {
    if !(x0 < x1 && x1 < x2) {
        return None;
    }
    let d01 = (f1 - f0) / (x1 - x0);
    let d12 = (f2 - f1) / (x2 - x1);
    let curvature = (d12 - d01) / (x2 - x0);
    if !(curvature > 0.0) || !curvature.is_finite() {
        return None;
    }
    // f = f1 + d01 (x - x1) + curvature (x - x0)(x - x1); set derivative to zero
    let vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
    vertex.is_finite().then(|| vertex.clamp(x0, x2))
}

#[cfg(test)]
mod tests {
    use super::parabolic_vertex;

    #[test]
    fn exact_on_parabola() {
        let f = |x: f64| 3.0 * (x - 0.27).powi(2) + 1.0;
        let v = parabolic_vertex(0.2, f(0.2), 0.25, f(0.25), 0.3, f(0.3)).unwrap();
        assert!((v - 0.27).abs() < 1e-12);
        // non-uniform spacing
        let v = parabolic_vertex(-1.0, f(-1.0), 0.1, f(0.1), 2.0, f(2.0)).unwrap();
        assert!((v - 0.27).abs() < 1e-12);
    }

    #[test]
    fn rejects_concave_and_flat() {
        assert!(parabolic_vertex(0.0, 0.0, 1.0, 1.0, 2.0, 0.0).is_none());
        assert!(parabolic_vertex(0.0, 1.0, 1.0, 1.0, 2.0, 1.0).is_none());
        assert!(parabolic_vertex(0.0, 1.0, 0.0, 1.0, 2.0, 1.0).is_none());
    }

    #[test]
    fn clamps_to_bracket() {
        // vertex at 5, outside [0, 2]
        let f = |x: f64| (x - 5.0).powi(2);
        assert_eq!(parabolic_vertex(0.0, f(0.0), 1.0, f(1.0), 2.0, f(2.0)), Some(2.0));
    }
}
