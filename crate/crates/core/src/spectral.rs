//! Eigenvalues of circulant distance matrices.
//!
//! A symmetric circulant with first row `d` has eigenvalues
//! `lambda_j = sum_k d[k] cos(2 pi j k / n)`. The exact spectral radius of a
//! connected circulant is its transmission; the trigonometric spectrum is kept
//! as an independent floating-point cross-check.

use crate::circulant::CirculantSpec;
use crate::error::Result;
use crate::metrics::{distance_vector, DistanceVector};

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Sorted in descending order.
    pub eigenvalues: Vec<f64>,
    pub radius: f64,
}

impl Spectrum {
    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Eigenvalues by direct summation against a cosine table.
///
/// Uses `d[k] = d[n - k]` to fold the sum over `k` and `lambda_j = lambda_{n-j}`
/// to evaluate only `j <= n/2`.
pub fn circulant_spectrum(dv: &DistanceVector) -> Spectrum {
    let d = dv.entries();
    let n = d.len();
    let cosines: Vec<f64> = (0..n)
        .map(|t| (std::f64::consts::TAU * t as f64 / n as f64).cos())
        .collect();
    let half = n / 2;
    let mut eigenvalues = vec![0.0; n];
    for j in 0..=half {
        let mut acc = f64::from(d[0]);
        let mut idx = 0usize;
        for &dk in &d[1..n.div_ceil(2)] {
            idx += j;
            if idx >= n {
                idx -= n;
            }
            acc += 2.0 * f64::from(dk) * cosines[idx];
        }
        if n.is_multiple_of(2) && n > 0 {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * f64::from(d[half]);
        }
        eigenvalues[j] = acc;
        if j != 0 {
            eigenvalues[n - j] = acc;
        }
    }
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    let radius = eigenvalues.first().copied().unwrap_or(0.0);
    Spectrum {
        eigenvalues,
        radius,
    }
}

/// Distance spectral radius of a connected circulant: the transmission of any vertex.
pub fn spectral_radius_exact(spec: &CirculantSpec) -> Result<u64> {
    Ok(distance_vector(spec)?.transmission())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rel_close;

    fn complement_dv(n: usize, jumps: &[i64]) -> DistanceVector {
        let c = CirculantSpec::new(n, jumps.iter().copied())
            .unwrap()
            .complement()
            .unwrap();
        distance_vector(&c).unwrap()
    }

    /// Plain `O(n^2)` evaluation without folding or a lookup table.
    fn naive(dv: &DistanceVector) -> Vec<f64> {
        let d = dv.entries();
        let n = d.len() as f64;
        let mut ev: Vec<f64> = (0..d.len())
            .map(|j| {
                d.iter()
                    .enumerate()
                    .map(|(k, &x)| {
                        f64::from(x) * (std::f64::consts::TAU * (j * k) as f64 / n).cos()
                    })
                    .sum()
            })
            .collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }

    #[test]
    fn complete_graph_spectrum() {
        let s = circulant_spectrum(&DistanceVector::new(vec![0, 1, 1, 1]).unwrap());
        let expected = [3.0, -1.0, -1.0, -1.0];
        for (a, b) in s.eigenvalues.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn radius_of_complements() {
        let s = circulant_spectrum(&complement_dv(8, &[1, 4]));
        assert!((s.radius - 10.0).abs() < 1e-9);
        let s = circulant_spectrum(&complement_dv(8, &[1, 2, 4]));
        assert!((s.radius - 16.0).abs() < 1e-9);
    }

    #[test]
    fn exact_radius_examples() {
        let c = |n, j: &[i64]| {
            CirculantSpec::new(n, j.iter().copied())
                .unwrap()
                .complement()
                .unwrap()
        };
        assert_eq!(spectral_radius_exact(&c(7, &[1, 2])), Ok(12));
        assert_eq!(spectral_radius_exact(&c(10, &[1, 2])), Ok(13));
        assert_eq!(
            spectral_radius_exact(&CirculantSpec::new(4, [1, 2]).unwrap()),
            Ok(3)
        );
    }

    #[test]
    fn folded_summation_matches_naive() {
        for (n, jumps) in [
            (7, vec![1, 2]),
            (12, vec![1, 6]),
            (27, vec![1, 3, 9]),
            (31, vec![1, 5]),
        ] {
            let dv = complement_dv(n, &jumps);
            let fast = circulant_spectrum(&dv);
            for (a, b) in fast.eigenvalues.iter().zip(naive(&dv)) {
                assert!((a - b).abs() < 1e-9, "n={n}: {a} vs {b}");
            }
            assert!(rel_close(fast.radius, dv.transmission() as f64, 1e-12));
            assert!(fast.trace().abs() < 1e-9 * n as f64);
        }
    }
}
