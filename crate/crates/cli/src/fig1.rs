//! Sweep of the `ψ̃(p, ε)` family: EoF and discord monogamy as a function
//! of `p` for a set of `ε` curves.

use rayon::prelude::*;
use serde::Serialize;

use qmono_core::monogamy::monogamy_report_closed_form;
use qmono_core::states::{psi_tilde, PsiTildeParams};

use crate::config::CampaignConfig;
use crate::error::CliError;
use crate::output::{csv_text, fmt_bool, fmt_float};

pub const COLUMNS: [&str; 11] = [
    "p",
    "epsilon",
    "S_A",
    "E_AB",
    "E_AC",
    "D_AB",
    "D_AC",
    "eof_deficit",
    "violation",
    "monogamous",
    "degenerate",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig1Row {
    pub p: f64,
    pub epsilon: f64,
    #[serde(rename = "S_A")]
    pub s_a: f64,
    #[serde(rename = "E_AB")]
    pub e_ab: f64,
    #[serde(rename = "E_AC")]
    pub e_ac: f64,
    #[serde(rename = "D_AB")]
    pub d_ab: f64,
    #[serde(rename = "D_AC")]
    pub d_ac: f64,
    pub eof_deficit: f64,
    /// `E_AB + E_AC − S_A`; positive where monogamy fails.
    pub violation: f64,
    pub monogamous: bool,
    /// Grid endpoint `p ∈ {0, 1}`.
    pub degenerate: bool,
}

impl Fig1Row {
    fn cells(&self) -> Vec<String> {
        vec![
            fmt_float(self.p),
            fmt_float(self.epsilon),
            fmt_float(self.s_a),
            fmt_float(self.e_ab),
            fmt_float(self.e_ac),
            fmt_float(self.d_ab),
            fmt_float(self.d_ac),
            fmt_float(self.eof_deficit),
            fmt_float(self.violation),
            fmt_bool(self.monogamous),
            fmt_bool(self.degenerate),
        ]
    }
}

/// One point of the sweep.
pub fn fig1_point(p: f64, epsilon: f64) -> Result<Fig1Row, CliError> {
    let psi = psi_tilde(PsiTildeParams { p, epsilon })?;
    let r = monogamy_report_closed_form(format!("psi_tilde({p},{epsilon})"), &psi)?;
    Ok(Fig1Row {
        p,
        epsilon,
        s_a: r.s_a,
        e_ab: r.e_ab,
        e_ac: r.e_ac,
        d_ab: r.d_ab,
        d_ac: r.d_ac,
        eof_deficit: r.eof_deficit,
        violation: r.violation,
        monogamous: r.eof_deficit >= -qmono_core::tol::IDENTITY,
        degenerate: p == 0.0 || p == 1.0,
    })
}

/// `p_i = i / (n − 1)`, endpoints included exactly.
pub fn p_grid(points: usize) -> Vec<f64> {
    let last = (points - 1) as f64;
    (0..points).map(|i| i as f64 / last).collect()
}

/// Rows ordered by epsilon (in the given order), then by `p`.
pub fn fig1_rows(config: &CampaignConfig) -> Result<Vec<Fig1Row>, CliError> {
    config.validate()?;
    let grid = p_grid(config.grid_points);
    let jobs: Vec<(f64, f64)> = config
        .epsilons
        .iter()
        .flat_map(|&e| grid.iter().map(move |&p| (p, e)))
        .collect();
    jobs.par_iter().map(|&(p, e)| fig1_point(p, e)).collect()
}

pub fn fig1_csv(rows: &[Fig1Row]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(Fig1Row::cells).collect();
    csv_text(&COLUMNS, &cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Command;

    #[test]
    fn grid_includes_endpoints() {
        let g = p_grid(101);
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[100], 1.0);
        assert!((g[50] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rows_cover_all_curves() {
        let mut c = CampaignConfig::new(Command::Fig1);
        c.grid_points = 5;
        let rows = fig1_rows(&c).unwrap();
        assert_eq!(rows.len(), 20);
        assert_eq!(rows[0].epsilon, 1.0);
        assert!(rows[0].degenerate && rows[4].degenerate && !rows[2].degenerate);
        let text = fig1_csv(&rows);
        assert!(text.starts_with(
            "p,epsilon,S_A,E_AB,E_AC,D_AB,D_AC,eof_deficit,violation,monogamous,degenerate\n"
        ));
        assert_eq!(text.lines().count(), 21);
    }

    #[test]
    fn ghz_point_is_monogamous() {
        let row = fig1_point(1.0, 0.5).unwrap();
        assert!((row.eof_deficit - 1.0).abs() < 1e-9);
        assert!(row.monogamous);
    }
}
