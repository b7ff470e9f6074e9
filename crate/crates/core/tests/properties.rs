mod common;

use common::{coulomb_newton, rel};
use complex_dirac::coulomb::{coulomb_energy, gamma_of, CoulombModel};
use complex_dirac::morse::{morse_energy, morse_energy_oracle, morse_spectrum};
use complex_dirac::{PhysicalParams, TransformParams};
use proptest::prelude::*;

fn angle() -> impl Strategy<Value = f64> {
    // Keeps S = sin 2θ away from zero.
    prop_oneof![0.01f64..1.56, -1.56f64..-0.01]
}

proptest! {
    #[test]
    fn morse_levels_agree_with_oracle(m in 0.1f64..50.0, e in -4.0f64..4.0) {
        let p = PhysicalParams::morse(m, e).unwrap();
        for n in 0u32.. {
            let Ok(level) = morse_energy(n, &p) else { break };
            let oracle = morse_energy_oracle(n, &p).unwrap();
            prop_assert!((level.energy - oracle).abs() <= 1e-12 * level.energy.abs().max(m));
        }
    }

    #[test]
    fn morse_bound_levels_have_positive_nu(m in 0.1f64..50.0, e in -4.0f64..4.0) {
        let s = morse_spectrum(&PhysicalParams::morse(m, e).unwrap());
        prop_assert_eq!(s.empty, s.levels.is_empty());
        for level in s.levels {
            prop_assert!(level.nu > 0.0);
            let d = -e * level.energy;
            prop_assert!((level.energy.powi(2) - m * m + (level.n as f64 - d).powi(2)).abs()
                < 1e-9 * m * m);
        }
    }

    #[test]
    fn labeled_and_special_forms_coincide(
        n in 1u32..6,
        za in 0.0f64..1.5,
        theta in angle(),
        kappa_sign in prop::bool::ANY,
    ) {
        let p = PhysicalParams::new(1.7, -1.0, 1.0, za).unwrap();
        let t = TransformParams::from_angle(theta).unwrap();
        let kappa = if kappa_sign { n as i32 } else { -(n as i32) };
        let model = CoulombModel::new(p, t, kappa).unwrap();
        let labeled = model.energy_labeled(n, 2 * n - 1).unwrap().energy;
        prop_assert!(rel(labeled, model.energy_special(n)) < 1e-12);
    }

    #[test]
    fn coulomb_energy_bounds_and_monotonicity(
        n_eff in 0.5f64..8.0,
        q in -0.45f64..0.45,
        m in 0.1f64..10.0,
    ) {
        let e = coulomb_energy(n_eff, q, m).unwrap();
        prop_assert!(e >= m);
        prop_assert!(rel(e, coulomb_newton(n_eff, q, m)) < 1e-13);
        if q != 0.0 {
            prop_assert!(coulomb_energy(n_eff, 1.05 * q, m).unwrap() > e);
            prop_assert!(coulomb_energy(n_eff * 1.05, q, m).unwrap() < e);
        }
    }

    #[test]
    fn sign_flips_leave_energies_unchanged(
        theta in angle(),
        za in 0.01f64..1.2,
        n in 1u32..4,
    ) {
        let p = PhysicalParams::new(1.0, -1.0, 1.0, za).unwrap();
        let t = TransformParams::from_angle(theta).unwrap();
        let flipped_s = TransformParams::new(t.a(), -t.b()).unwrap();
        let flipped_c = TransformParams::new(t.b(), t.a()).unwrap();
        let base = CoulombModel::new(p, t, -1).unwrap();
        for other in [flipped_s, flipped_c] {
            let model = CoulombModel::new(p, other, -1).unwrap();
            prop_assert!(rel(base.energy_labeled(n, 1).unwrap().energy,
                model.energy_labeled(n, 1).unwrap().energy) < 1e-14);
            prop_assert!(rel(base.energy_radial(n).unwrap().energy,
                model.energy_radial(n).unwrap().energy) < 1e-14);
            prop_assert!(rel(base.energy_special(n), model.energy_special(n)) < 1e-14);
        }
    }

    #[test]
    fn gamma_is_real_for_every_charge(kappa in -5i32..5, z in 0.0f64..500.0) {
        prop_assume!(kappa != 0);
        let g = gamma_of(kappa, 1.0 / 137.036, z);
        prop_assert!(g.is_finite() && g >= kappa.abs() as f64);
    }
}
