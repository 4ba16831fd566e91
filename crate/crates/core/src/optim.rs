//! Derivative-free minimization with the Nelder–Mead simplex method.

#[derive(Debug, Clone, Copy)]
pub struct NelderMead {
    /// Stop once the largest vertex-to-vertex distance drops below this.
    pub diameter_tol: f64,
    pub max_iter: usize,
}

impl Default for NelderMead {
    fn default() -> Self {
        Self {
            diameter_tol: crate::tol::SIMPLEX_DIAMETER,
            max_iter: 5_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub point: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

impl NelderMead {
    /// Minimizes `f` starting from the axis-aligned simplex
    /// `{x0, x0 + step_i e_i}`.
    pub fn minimize<F>(&self, f: F, x0: &[f64], step: &[f64]) -> Minimum
    where
        F: Fn(&[f64]) -> f64,
    {
        let n = x0.len();
        assert_eq!(step.len(), n, "one step per coordinate");

        let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
        simplex.push(x0.to_vec());
        for i in 0..n {
            let mut v = x0.to_vec();
            v[i] += step[i];
            simplex.push(v);
        }
        let mut values: Vec<f64> = simplex.iter().map(|v| f(v)).collect();

        let mut iterations = 0;
        let mut converged = false;
        while iterations < self.max_iter {
            sort_simplex(&mut simplex, &mut values);
            if diameter(&simplex) < self.diameter_tol {
                converged = true;
                break;
            }
            iterations += 1;

            let centroid: Vec<f64> = (0..n)
                .map(|d| simplex[..n].iter().map(|v| v[d]).sum::<f64>() / n as f64)
                .collect();
            let worst = &simplex[n];
            let along = |t: f64| -> Vec<f64> {
                centroid
                    .iter()
                    .zip(worst)
                    .map(|(c, w)| c + t * (c - w))
                    .collect()
            };

            let reflected = along(REFLECT);
            let f_reflected = f(&reflected);

            if f_reflected < values[0] {
                let expanded = along(EXPAND);
                let f_expanded = f(&expanded);
                if f_expanded < f_reflected {
                    simplex[n] = expanded;
                    values[n] = f_expanded;
                } else {
                    simplex[n] = reflected;
                    values[n] = f_reflected;
                }
                continue;
            }
            if f_reflected < values[n - 1] {
                simplex[n] = reflected;
                values[n] = f_reflected;
                continue;
            }

            let (contracted, f_contracted) = if f_reflected < values[n] {
                let c = along(CONTRACT * REFLECT);
                let fc = f(&c);
                (c, fc)
            } else {
                let c = along(-CONTRACT);
                let fc = f(&c);
                (c, fc)
            };
            if f_contracted < values[n].min(f_reflected) {
                simplex[n] = contracted;
                values[n] = f_contracted;
                continue;
            }

            let best = simplex[0].clone();
            for i in 1..=n {
                for (x, b) in simplex[i].iter_mut().zip(&best) {
                    *x = b + SHRINK * (*x - b);
                }
                values[i] = f(&simplex[i]);
            }
        }
        sort_simplex(&mut simplex, &mut values);
        Minimum {
            point: simplex.swap_remove(0),
            value: values[0],
            iterations,
            converged,
        }
    }
}

fn sort_simplex(simplex: &mut Vec<Vec<f64>>, values: &mut Vec<f64>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    *simplex = order.iter().map(|&i| simplex[i].clone()).collect();
    *values = order.iter().map(|&i| values[i]).collect();
}

fn diameter(simplex: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in simplex.iter().enumerate() {
        for b in &simplex[i + 1..] {
            let d = a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt();
            worst = worst.max(d);
        }
    }
    worst
}
