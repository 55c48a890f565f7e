//! Deterministic verification suite: every module invariant as a named
//! check with a fixed tolerance. The report is byte-identical across runs
//! (fixed RNG seed, fixed formatting, fixed iteration order).

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bg::{self, ExtensionParam};
use crate::ks::{self, ShellConfig};
use crate::model::{self, PhysicalConfig, Spin};
use crate::oracle::{self, DeficiencySign, RootFindSpec};
use crate::specfun;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn max_rel(name: &'static str, max: f64, tol: f64) -> Check {
        Check {
            name,
            passed: max <= tol,
            detail: format!("max_rel={max:.3e} tol={tol:.1e}"),
        }
    }

    fn max_abs(name: &'static str, max: f64, tol: f64) -> Check {
        Check {
            name,
            passed: max <= tol,
            detail: format!("max_abs={max:.3e} tol={tol:.1e}"),
        }
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

const J_GRID: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

fn gamma_reflection() -> Check {
    // Γ(1+ν)Γ(1-ν) = πν/sin(πν) on a grid over (0.01, 0.99)
    let mut max = 0.0f64;
    let mut nu = 0.01;
    while nu < 0.99 {
        let lhs = specfun::gamma(1.0 + nu).unwrap() * specfun::gamma(1.0 - nu).unwrap();
        let rhs = std::f64::consts::PI * nu / (std::f64::consts::PI * nu).sin();
        max = max.max(rel_err(lhs, rhs));
        nu += 0.007;
    }
    Check::max_rel("specfun_gamma_reflection", max, 1e-11)
}

fn wronskian(fd: bool) -> Check {
    // z (I K' - I' K) = -1; derivatives either by central difference with
    // the step tuned to the tolerance, or by the analytic recurrences
    let mut max = 0.0f64;
    for &nu in &J_GRID {
        for &z in &[0.1f64, 0.5, 1.0, 2.0, 3.5, 5.0, 7.0, 10.0] {
            let (ip, kp) = if fd {
                let h = 1e-6 * z.max(0.5);
                (
                    (specfun::bessel_i(nu, z + h).unwrap()
                        - specfun::bessel_i(nu, z - h).unwrap())
                        / (2.0 * h),
                    (specfun::bessel_k(nu, z + h).unwrap()
                        - specfun::bessel_k(nu, z - h).unwrap())
                        / (2.0 * h),
                )
            } else {
                (
                    specfun::bessel_i_prime(nu, z).unwrap(),
                    specfun::bessel_k_prime(nu, z).unwrap(),
                )
            };
            let w = z
                * (specfun::bessel_i(nu, z).unwrap() * kp
                    - ip * specfun::bessel_k(nu, z).unwrap());
            max = max.max((w + 1.0).abs());
        }
    }
    if fd {
        Check::max_abs("specfun_wronskian_finite_difference", max, 1e-9)
    } else {
        Check::max_abs("specfun_wronskian_recurrence", max, 1e-11)
    }
}

fn bessel_branch_overlap() -> Check {
    // series and asymptotic branches agree across the overlap window
    let policy = specfun::EvalPolicy::<f64>::default();
    let mut max = 0.0f64;
    let mut x = policy.series_cutoff;
    while x <= policy.asymptotic_cutoff {
        for &nu in &[0.05, 0.25, 0.5, 0.75, 0.95] {
            let s = specfun::bessel_j_series(nu, x, policy.max_terms, policy.abs_tol).unwrap();
            let a = specfun::bessel_j_asymptotic(nu, x).unwrap();
            max = max.max(rel_err(s, a));
        }
        x += 0.5;
    }
    Check::max_rel("specfun_bessel_j_branch_overlap", max, 1e-8)
}

fn half_integer_forms() -> Check {
    // J_{1/2}, I_{1/2}, K_{1/2} against their elementary closed forms
    let mut max = 0.0f64;
    let mut x = 0.1f64;
    while x <= 50.0 {
        let amp = (2.0 / (std::f64::consts::PI * x)).sqrt();
        let j_ref = amp * x.sin();
        // grid points sit away from the zeros of sin (step 0.83)
        max = max.max(rel_err(specfun::bessel_j(0.5, x).unwrap(), j_ref));
        let i_ref = amp * x.sinh();
        max = max.max(rel_err(specfun::bessel_i(0.5, x).unwrap(), i_ref));
        let k_ref = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
        max = max.max(rel_err(specfun::bessel_k(0.5, x).unwrap(), k_ref));
        x += 0.83;
    }
    Check::max_rel("specfun_half_integer_forms", max, 1e-10)
}

fn flat_space_reduction() -> Check {
    // α = 1: j = m + φ for both spins
    let mut max = 0.0f64;
    for &phi in &[-2.3, -0.5, 0.0, 0.4, 1.7] {
        for spin in [Spin::Up, Spin::Down] {
            let cfg = PhysicalConfig::new(1.0, phi, spin, 1.0, 2.0).unwrap();
            for m in -6..=6 {
                max = max.max((cfg.effective_j(m) - (m as f64 + phi)).abs());
            }
        }
    }
    Check::max_abs("model_flat_space_reduction", max, 0.0)
}

fn channels_match_planes() -> Check {
    let mut ok = true;
    let mut cases = 0usize;
    for &alpha in &[0.2, 1.0 / 3.0 + 0.01, 0.5, 0.75, 1.0] {
        for &phi in &[-1.7, -0.3, 0.0, 0.25, 0.5, 0.9, 2.6] {
            for spin in [Spin::Up, Spin::Down] {
                let cfg = PhysicalConfig::new(alpha, phi, spin, 1.0, 2.0).unwrap();
                let parts = model::flux_decompose(phi);
                let (lo, hi) =
                    model::planes_ab(alpha, parts.beta, spin, parts.n_integer).unwrap();
                let critical = cfg.critical_channels();
                ok &= critical.len() <= 2;
                if critical.len() == 2 {
                    ok &= critical[1].m == critical[0].m + 1;
                }
                for ch in &critical {
                    ok &= lo < ch.m as f64 && (ch.m as f64) < hi;
                    // channel fields recompute bit-for-bit
                    ok &= ch.j == cfg.effective_j(ch.m);
                    ok &= ch.lambda == cfg.coupling_lambda();
                }
                for m in -8..=8 {
                    let inside = lo < m as f64 && (m as f64) < hi;
                    let listed = critical.iter().any(|c| c.m == m);
                    if cfg.channel(m).j.abs() < 1.0 {
                        ok &= listed && inside;
                    } else {
                        ok &= !listed;
                    }
                }
                cases += 1;
            }
        }
    }
    Check {
        name: "model_channels_match_planes",
        passed: ok,
        detail: format!("cases={cases}"),
    }
}

fn integer_flux_shift() -> Check {
    let mut max = 0.0f64;
    for &alpha in &[0.3, 0.6, 1.0] {
        for &beta in &[0.0, 0.4, 0.9] {
            for spin in [Spin::Up, Spin::Down] {
                for n in [-3i64, 0, 5] {
                    let (lo0, hi0): (f64, f64) =
                        model::planes_ab(alpha, beta, spin, n).unwrap();
                    let (lo1, hi1) = model::planes_ab(alpha, beta, spin, n + 1).unwrap();
                    max = max.max((lo1 - (lo0 - 1.0)).abs());
                    max = max.max((hi1 - (hi0 - 1.0)).abs());
                }
            }
        }
    }
    Check::max_abs("model_integer_flux_shift", max, 1e-12)
}

fn alpha_min_value() -> Check {
    let mut max = 0.0f64;
    for spin in [Spin::Up, Spin::Down] {
        for &beta in &[0.0, 0.3, 0.5, 0.9] {
            let r = model::alpha_min_for_two_channels::<f64>(spin, beta).unwrap();
            max = max.max((r.alpha_min - 1.0 / 3.0).abs());
        }
    }
    Check::max_abs("model_alpha_min_one_third", max, 1e-12)
}

fn unitarity_random() -> Check {
    // 10^4 random (j, ν, k) samples including the Friedrichs extension
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ab1_c05e);
    let mut max = 0.0f64;
    let mut poles = 0usize;
    for i in 0..10_000usize {
        let j: f64 = rng.gen_range(1e-3..0.999);
        let k: f64 = rng.gen_range(1e-3..100.0);
        let m = rng.gen_range(-4i64..=4);
        let ext = if i % 10 == 0 {
            ExtensionParam::Friedrichs
        } else {
            ExtensionParam::Finite(rng.gen_range(-1e3..1e3))
        };
        match bg::s_matrix(m, j, ext, k) {
            Ok(s) => max = max.max((s.norm() - 1.0).abs()),
            Err(_) => poles += 1,
        }
    }
    Check {
        name: "bg_unitarity_random",
        passed: max <= 1e-12 && poles == 0,
        detail: format!("max_dev={max:.3e} tol=1.0e-12 poles={poles}"),
    }
}

fn friedrichs_consistency() -> Check {
    let mut ok = true;
    for &j in &[0.3, -0.7, 1.4, -2.2] {
        for m in -3i64..=3 {
            let d_reg = bg::phase_shift_regular(m, j);
            let d_ext =
                bg::phase_shift_extended(m, j, ExtensionParam::<f64>::Friedrichs, 2.0).unwrap();
            ok &= d_reg == d_ext;
            let s = bg::s_matrix(m, j, ExtensionParam::<f64>::Friedrichs, 2.0).unwrap();
            let expect = Complex::from_polar(1.0, 2.0 * d_reg);
            ok &= s == expect;
        }
    }
    Check {
        name: "bg_friedrichs_consistency",
        passed: ok,
        detail: "exact equality".to_string(),
    }
}

fn pole_energy_duality() -> Check {
    let mut max = 0.0f64;
    for &aj in &J_GRID {
        for &nu in &[-10.0, -1.0, -0.1] {
            let expect = bg::bound_state_bg(nu, aj, 1.0).unwrap().kappa_b;
            let spec = RootFindSpec::around(expect * 1.9).unwrap();
            let kappa = oracle::find_smatrix_pole(aj, nu, &spec).unwrap();
            max = max.max(rel_err(kappa, expect));
        }
    }
    Check::max_rel("bg_pole_energy_duality", max, 1e-8)
}

fn smatrix_bound_identity() -> Check {
    let mut max = 0.0f64;
    for &aj in &[0.15, 0.3, 0.5, 0.7, 0.85] {
        for &nu in &[-0.3, -1.0, -4.0] {
            let kappa = bg::bound_state_bg(nu, aj, 1.0).unwrap().kappa_b;
            for &k in &[0.2, 1.0, 3.3, 20.0] {
                let a = bg::s_matrix(1, aj, ExtensionParam::Finite(nu), k).unwrap();
                let b = bg::s_matrix_from_bound(1, aj, kappa, k).unwrap();
                max = max.max((a - b).norm());
                max = max.max((b.norm() - 1.0).abs());
            }
        }
    }
    Check::max_abs("bg_smatrix_bound_identity", max, 1e-10)
}

fn large_nu_limit() -> Check {
    // |S(ν) - e^{2iδ}| -> 0 as |ν| -> ∞
    let mut max = 0.0f64;
    for &j in &[0.25, 0.6, 0.9] {
        for &nu in &[1e12, -1e12] {
            let s = bg::s_matrix(0, j, ExtensionParam::Finite(nu), 1.0).unwrap();
            let friedrichs = bg::s_matrix(0, j, ExtensionParam::<f64>::Friedrichs, 1.0).unwrap();
            max = max.max((s - friedrichs).norm());
        }
    }
    Check::max_abs("bg_large_nu_limit", max, 1e-6)
}

fn bridge_identity() -> Check {
    let mut max = 0.0f64;
    for &lambda in &[-0.6, -1.5, -5.0, -50.0] {
        for &aj in &J_GRID {
            if lambda >= -aj {
                continue;
            }
            for &r0 in &[1e-3, 1e-2, 1.0] {
                let shell = ShellConfig::new(r0, lambda).unwrap();
                let a = ks::bound_state_ks(shell, aj, 1.0).unwrap().energy;
                let b = ks::bound_state_bg_via_shell(shell, aj, 1.0).unwrap().energy;
                max = max.max(rel_err(a, b));
            }
        }
    }
    Check::max_rel("ks_bridge_identity", max, 1e-13)
}

fn ks_sign_consistency() -> Check {
    let mut ok = true;
    for &lambda in &[-8.0, -1.1, -0.45, -0.1, 0.3, 0.8, 2.5] {
        for &aj in &[0.2, 0.5, 0.8] {
            let shell = ShellConfig::new(0.3, lambda).unwrap();
            let ratio = (lambda + aj) / (lambda - aj);
            let exists = ks::bound_state_ks(shell, aj, 1.0).is_ok();
            ok &= exists == (ratio > 0.0);
            if let Ok(ExtensionParam::Finite(nu)) = ks::nu_from_physical(shell, aj) {
                ok &= (nu < 0.0) == exists;
            }
        }
    }
    Check {
        name: "ks_sign_consistency",
        passed: ok,
        detail: "nu<0 iff ratio>0 iff bound state".to_string(),
    }
}

fn exterior_roundtrip() -> Check {
    // root-finding κ from exterior_log_derivative(κ) = λ recovers the
    // closed-form κ_b
    let mut max = 0.0f64;
    for &aj in &[0.2, 0.5, 0.8] {
        for &lambda in &[-0.9, -2.0, -12.0] {
            if lambda >= -aj {
                continue;
            }
            for &r0 in &[0.05, 1.0] {
                let shell = ShellConfig::new(r0, lambda).unwrap();
                let expect = ks::bound_state_ks(shell, aj, 1.0).unwrap().kappa_b;
                let f = |kappa: f64| {
                    ks::exterior_log_derivative(aj, kappa, r0)
                        .map(|e| e.value - lambda)
                        .unwrap_or(f64::NAN)
                };
                let (lo, hi) =
                    oracle::expand_bracket(&f, expect * 0.4, expect * 1.1, 60).unwrap();
                let spec = RootFindSpec::new(lo, hi).unwrap();
                let kappa = oracle::brent(f, &spec).unwrap();
                max = max.max(rel_err(kappa, expect));
            }
        }
    }
    Check::max_rel("ks_exterior_log_derivative_roundtrip", max, 1e-10)
}

fn ks_homogeneity() -> Check {
    // E depends on r₀ only through the r₀^{-2} prefactor
    let mut max = 0.0f64;
    for &aj in &[0.3, 0.7] {
        for &lambda in &[-1.2, -9.0] {
            let e1 = ks::bound_state_ks(ShellConfig::new(0.02, lambda).unwrap(), aj, 1.0)
                .unwrap()
                .energy;
            for &c in &[3.0, 40.0] {
                let e2 = ks::bound_state_ks(
                    ShellConfig::new(0.02 / c, lambda).unwrap(),
                    aj,
                    1.0,
                )
                .unwrap()
                .energy;
                max = max.max(rel_err(e2, c * c * e1));
            }
        }
    }
    Check::max_rel("ks_homogeneity", max, 1e-12)
}

fn shell_residual() -> Check {
    // the returned κ_b satisfies I·K = -1/λ to tight residual
    let mut max = 0.0f64;
    for &aj in &[0.25, 0.5, 0.75] {
        for &lambda in &[-1.2, -3.0, -30.0] {
            if lambda >= -2.0 * aj {
                continue;
            }
            let shell = ShellConfig::new(0.05, lambda).unwrap();
            let b =
                oracle::delta_shell_bound_state(shell, aj, 1.0, &RootFindSpec::default()).unwrap();
            let z = b.kappa_b * shell.r0;
            let res = specfun::bessel_i(aj, z).unwrap() * specfun::bessel_k(aj, z).unwrap()
                + 1.0 / lambda;
            max = max.max(res.abs());
        }
    }
    Check::max_abs("oracle_shell_residual", max, 1e-12)
}

fn shell_scalar_equation() -> Check {
    // |j| = 1/2 reduces to (1 - e^{-2z})/(2z) = -1/λ; bisect it
    // independently and compare
    let mut max = 0.0f64;
    for &lambda in &[-1.5, -2.5, -10.0] {
        let g = |z: f64| (1.0 - (-2.0 * z).exp()) / (2.0 * z) + 1.0 / lambda;
        let (mut lo, mut hi) = (1e-9, 60.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(lo) * g(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let z_scalar = 0.5 * (lo + hi);
        let shell = ShellConfig::new(0.01, lambda).unwrap();
        let b = oracle::delta_shell_bound_state(shell, 0.5, 1.0, &RootFindSpec::default()).unwrap();
        max = max.max(rel_err(b.kappa_b * shell.r0, z_scalar));
    }
    Check::max_rel("oracle_shell_scalar_equation", max, 1e-9)
}

fn shell_ks_gap() -> Check {
    // The z = κ_b r₀ of both methods is an r₀-invariant function of
    // (λ, |j|) alone, so the premise |λ|/|j| >= 20 ∧ κ_b r₀ <= 0.05 selects
    // the empty set: at |λ|/|j| >= 20 the matched z is already O(1) and the
    // exact shell binds at z ≈ |λ|/2. The gap bound is asserted over the
    // qualifying subset (vacuously) and the premise emptiness is surfaced
    // here rather than hidden.
    let mut qualifying = 0usize;
    let mut max_gap_qualifying = 0.0f64;
    let mut min_z = f64::INFINITY;
    for &aj in &[0.1, 0.3, 0.5, 0.7, 0.9] {
        for &ratio in &[20.0, 40.0, 80.0] {
            let lambda = -ratio * aj;
            let shell = ShellConfig::new(1e-3, lambda).unwrap();
            let ksb = ks::bound_state_ks(shell, aj, 1.0).unwrap();
            let z = ksb.kappa_b * shell.r0;
            min_z = min_z.min(z);
            if z <= 0.05 {
                let sb = oracle::delta_shell_bound_state(shell, aj, 1.0, &RootFindSpec::default())
                    .unwrap();
                qualifying += 1;
                max_gap_qualifying =
                    max_gap_qualifying.max(rel_err(sb.kappa_b, ksb.kappa_b));
            }
        }
    }
    Check {
        name: "oracle_shell_ks_gap",
        passed: max_gap_qualifying <= 1e-2,
        detail: format!(
            "qualifying={qualifying} (premise empty: min kappa*r0={min_z:.3} > 0.05, r0-invariant) max_gap={max_gap_qualifying:.1e}"
        ),
    }
}

fn deficiency_grid() -> Check {
    let mut ok = true;
    for &k0 in &[0.5, 1.0, 2.0] {
        for &aj in &J_GRID {
            ok &= oracle::deficiency_indices(aj, k0).unwrap() == (1, 1);
        }
        for &aj in &[1.1, 1.5] {
            ok &= oracle::deficiency_indices(aj, k0).unwrap() == (0, 0);
        }
    }
    Check {
        name: "oracle_deficiency_indices",
        passed: ok,
        detail: "(1,1) on |j|<1, (0,0) on |j|>1, k0-independent".to_string(),
    }
}

fn rootfind_determinism() -> Check {
    let spec = RootFindSpec::around(2.0f64).unwrap();
    let a = oracle::find_smatrix_pole(0.45, -1.7, &spec).unwrap();
    let b = oracle::find_smatrix_pole(0.45, -1.7, &spec).unwrap();
    Check {
        name: "oracle_rootfind_determinism",
        passed: a.to_bits() == b.to_bits(),
        detail: "bitwise identical reruns".to_string(),
    }
}

/// Run every check in a fixed order.
pub fn run_all() -> Vec<Check> {
    vec![
        gamma_reflection(),
        wronskian(true),
        wronskian(false),
        bessel_branch_overlap(),
        half_integer_forms(),
        flat_space_reduction(),
        channels_match_planes(),
        integer_flux_shift(),
        alpha_min_value(),
        unitarity_random(),
        friedrichs_consistency(),
        pole_energy_duality(),
        smatrix_bound_identity(),
        large_nu_limit(),
        bridge_identity(),
        ks_sign_consistency(),
        exterior_roundtrip(),
        ks_homogeneity(),
        shell_residual(),
        shell_scalar_equation(),
        shell_ks_gap(),
        deficiency_grid(),
        rootfind_determinism(),
    ]
}

/// Fixed-width pass/fail table; byte-identical across runs.
pub fn report(checks: &[Check]) -> String {
    let mut out = String::new();
    out.push_str("# verification report\n");
    out.push_str("# units: hbar=c=1\n");
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0).max(5);
    out.push_str(&format!("{:width$}  {:6}  detail\n", "check", "status"));
    for c in checks {
        let status = if c.passed { "pass" } else { "FAIL" };
        out.push_str(&format!("{:width$}  {:6}  {}\n", c.name, status, c.detail));
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    out.push_str(&format!("total: {} checks, {} passed\n", checks.len(), passed));
    out
}
