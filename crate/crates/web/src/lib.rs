//! Browser bindings for the `ψ̃(p, ε)` explorer in `www/`.

use std::f64::consts::PI;

use wasm_bindgen::prelude::*;

use qmono_core::correlations::{measured_conditional_entropy, MeasuredSide, MeasurementAngles};
use qmono_core::monogamy::{monogamy_report_closed_form, optimized_discord};
use qmono_core::states::{psi_tilde, PsiTildeParams};
use qmono_core::{three_tangle, Error, PureState, Result};

fn state(p: f64, epsilon: f64) -> Result<PureState> {
    psi_tilde(PsiTildeParams { p, epsilon })
}

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

pub fn curve(epsilon: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidParameter("need at least two points".into()));
    }
    let last = (points - 1) as f64;
    (0..points)
        .map(|i| Ok(monogamy_report_closed_form("", &state(i as f64 / last, epsilon)?)?.violation))
        .collect()
}

pub fn analysis(p: f64, epsilon: f64) -> Result<serde_json::Value> {
    let psi = state(p, epsilon)?;
    let report = monogamy_report_closed_form(format!("psi_tilde({p}, {epsilon})"), &psi)?;
    let mut value =
        serde_json::to_value(&report).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    value["three_tangle"] = three_tangle(&psi, 0)?.into();
    value["D_AB_optimized"] = optimized_discord(&psi, 0, 1)?.into();
    Ok(value)
}

pub fn landscape(p: f64, epsilon: f64, resolution: usize) -> Result<Vec<f64>> {
    if resolution < 2 {
        return Err(Error::InvalidParameter(
            "resolution must be at least 2".into(),
        ));
    }
    let rho = state(p, epsilon)?.reduced(&[0, 1])?;
    let n = resolution as f64;
    let mut out = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        let theta = PI * (i as f64 / (n - 1.0));
        for j in 0..resolution {
            let angles = MeasurementAngles::new(theta, 2.0 * PI * j as f64 / n)?;
            out.push(measured_conditional_entropy(&rho, MeasuredSide::B, angles)?);
        }
    }
    Ok(out)
}

/// `E_AB + E_AC − S_A` at `points` evenly spaced `p` in `[0, 1]`.
#[wasm_bindgen]
pub fn fig1_curve(epsilon: f64, points: usize) -> std::result::Result<Vec<f64>, JsError> {
    curve(epsilon, points).map_err(js)
}

/// Monogamy report for one point as a JSON object, with the three-tangle
/// and the optimizer value of `D_AB` next to its closed form.
#[wasm_bindgen]
pub fn analyze_psi_tilde(p: f64, epsilon: f64) -> std::result::Result<String, JsError> {
    analysis(p, epsilon).map(|v| v.to_string()).map_err(js)
}

/// Conditional entropy of `A` after measuring `B` of `Tr_C ψ̃(p, ε)`, on a
/// `resolution × resolution` grid; row `i` is `θ = π i/(n−1)`, column `j`
/// is `φ = 2π j/n`.
#[wasm_bindgen]
pub fn discord_landscape(
    p: f64,
    epsilon: f64,
    resolution: usize,
) -> std::result::Result<Vec<f64>, JsError> {
    landscape(p, epsilon, resolution).map_err(js)
}
