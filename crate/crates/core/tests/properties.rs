use proptest::prelude::*;

use qmono_core::correlations::{quantum_discord, subsystem_entropy, MeasuredSide};
use qmono_core::monogamy::{discord_via_kw, mutual_info_decomposition_residual};
use qmono_core::states::{haar_random_pure, random_two_state_mixture, sample_rng};
use qmono_core::{concurrence, eof, hermitian_eigen, partial_trace, PureState};

fn haar3(seed: u64) -> PureState {
    haar_random_pure(3, seed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigen_reconstructs(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 0);
        let rho = random_two_state_mixture(&mut rng, 3).unwrap();
        let eig = hermitian_eigen(rho.matrix()).unwrap();
        prop_assert!(eig.reconstruct().max_abs_diff(rho.matrix()) < 1e-10);
        prop_assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn partial_traces_compose(seed in any::<u64>()) {
        let rho = haar3(seed).density_matrix();
        let direct = partial_trace(&rho, &[2]).unwrap();
        let staged = partial_trace(&partial_trace(&rho, &[0, 2]).unwrap(), &[1]).unwrap();
        prop_assert!(direct.matrix().max_abs_diff(staged.matrix()) < 1e-12);
    }

    #[test]
    fn pure_bipartitions_share_entropy(seed in any::<u64>()) {
        let rho = haar3(seed).density_matrix();
        let s_a = subsystem_entropy(&rho, &[0]).unwrap();
        let s_bc = subsystem_entropy(&rho, &[1, 2]).unwrap();
        prop_assert!((s_a - s_bc).abs() < 1e-9);
    }

    #[test]
    fn pair_measures_are_bounded(seed in any::<u64>()) {
        let psi = haar3(seed);
        let rho = psi.reduced(&[0, 1]).unwrap();
        let c = concurrence(&rho).unwrap();
        let e = eof(&rho).unwrap();
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert!((0.0..=1.0).contains(&e));
        let d = discord_via_kw(&psi, 0, 1, 2).unwrap();
        prop_assert!(d >= 0.0 && d <= subsystem_entropy(&rho, &[0]).unwrap() + 1e-9);
    }

    #[test]
    fn decomposition_is_an_identity(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 1);
        let rho = random_two_state_mixture(&mut rng, 3).unwrap();
        prop_assert!(mutual_info_decomposition_residual(&rho).unwrap() < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn optimizer_matches_closed_form(seed in any::<u64>()) {
        let psi = haar3(seed);
        let optimized = quantum_discord(&psi.reduced(&[0, 1]).unwrap(), MeasuredSide::B).unwrap().discord;
        let closed = discord_via_kw(&psi, 0, 1, 2).unwrap();
        prop_assert!((optimized - closed).abs() < 1e-5);
    }
}
