use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitPoint {
    pub epsilon: f64,
    pub t_star: f64,
}

/// Least-squares power law `t ≈ C·ε^{-slope}` in log-log coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentFit {
    pub slope: f64,
    /// RMS deviation of `log t` from the fitted line.
    pub residual: f64,
    pub points: Vec<FitPoint>,
}

impl ExponentFit {
    /// `[slope − 2·residual, slope + 2·residual]`.
    pub fn band(&self) -> (f64, f64) {
        (self.slope - 2.0 * self.residual, self.slope + 2.0 * self.residual)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fit serializes")
    }
}

/// Fits `log t_star` against `log(1/ε)`. Needs at least four points whose ε
/// span a factor of ten, all with positive `t_star`.
pub fn fit_exponent(points: &[(f64, f64)]) -> Result<ExponentFit> {
    if points.len() < 4 {
        return Err(Error::InvalidArgument(format!(
            "need at least 4 points to fit, got {}",
            points.len()
        )));
    }
    for &(eps, t) in points {
        if !(eps > 0.0 && eps.is_finite()) || !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "point ({eps}, {t}) is not in the positive quadrant"
            )));
        }
    }
    let (lo, hi) = points
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &(e, _)| (lo.min(e), hi.max(e)));
    if hi / lo < 10.0 - 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "epsilon span {lo}..{hi} is less than one decade"
        )));
    }

    let xs: Vec<f64> = points.iter().map(|&(e, _)| (1.0 / e).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, t)| t.ln()).collect();
    let count = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / count;
    let mean_y = ys.iter().sum::<f64>() / count;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual = (xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum::<f64>()
        / count)
        .sqrt();

    Ok(ExponentFit {
        slope,
        residual,
        points: points
            .iter()
            .map(|&(epsilon, t_star)| FitPoint { epsilon, t_star })
            .collect(),
    })
}

/// Reads `(epsilon, t_star)` pairs from a sweep CSV, skipping rows whose
/// `t_star` is empty (target never reached).
pub fn read_sweep_csv<R: Read>(input: R) -> Result<Vec<(f64, f64)>> {
    let mut reader = csv::Reader::from_reader(input);
    let headers = reader.headers()?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Parse(format!("missing column {name:?}")))
    };
    let (eps_col, t_col) = (column("epsilon")?, column("t_star")?);
    let mut points = Vec::new();
    for row in reader.records() {
        let row = row?;
        let t = row.get(t_col).unwrap_or("").trim();
        if t.is_empty() {
            continue;
        }
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("not a number: {s:?}")))
        };
        points.push((parse(row.get(eps_col).unwrap_or(""))?, parse(t)?));
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law() {
        let points: Vec<(f64, f64)> = [0.25, 0.1, 0.05, 0.01, 0.001]
            .iter()
            .map(|&e: &f64| (e, e.powf(-0.5)))
            .collect();
        let fit = fit_exponent(&points).unwrap();
        assert!((fit.slope - 0.5).abs() < 1e-12);
        assert!(fit.residual < 1e-12);

        let linear: Vec<(f64, f64)> = points.iter().map(|&(e, _)| (e, 3.0 / e)).collect();
        assert!((fit_exponent(&linear).unwrap().slope - 1.0).abs() < 1e-12);
    }

    #[test]
    fn residual_is_rms_in_log_space() {
        // alternating ±d around slope 1 through ε = 10^-k
        let d = 0.1f64;
        let points: Vec<(f64, f64)> = (0..4)
            .map(|k| {
                let e = 10f64.powi(-k);
                (e, (1.0 / e) * (if k % 2 == 0 { d } else { -d }).exp())
            })
            .collect();
        let fit = fit_exponent(&points).unwrap();
        let xs: Vec<f64> = (0..4).map(|k| k as f64 * 10f64.ln()).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
        // recompute by normal equations as a cross-check
        let (mx, my) = (xs.iter().sum::<f64>() / 4.0, ys.iter().sum::<f64>() / 4.0);
        let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
            / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
        assert!((fit.slope - slope).abs() < 1e-12);
        assert!(fit.residual > 0.0 && fit.residual <= d);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(fit_exponent(&[(0.1, 1.0), (0.01, 2.0), (0.001, 3.0)]).is_err());
        assert!(fit_exponent(&[(0.1, 1.0), (0.09, 2.0), (0.08, 3.0), (0.05, 4.0)]).is_err());
        assert!(fit_exponent(&[(0.1, 0.0), (0.05, 2.0), (0.02, 3.0), (0.01, 4.0)]).is_err());
    }

    #[test]
    fn reads_sweep_csv() {
        let text = "epsilon,t_star,success_rate,mean_queries,wilson_low,wilson_high\n\
                    0.25,1,0.9,3,0.8,0.95\n0.1,,0.1,3,0.0,0.2\n0.01,10,0.7,21,0.6,0.8\n";
        assert_eq!(read_sweep_csv(text.as_bytes()).unwrap(), vec![(0.25, 1.0), (0.01, 10.0)]);
        assert!(read_sweep_csv("a,b\n1,2\n".as_bytes()).is_err());
    }
}
