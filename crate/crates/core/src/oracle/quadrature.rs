//! Adaptive Gauss-Kronrod quadrature (7-15 embedded pair) with recursive
//! interval bisection, plus a decade-splitting driver for improper
//! integrals with a power-law endpoint at zero.

use crate::real::Real;

// 15-point Kronrod nodes on [-1, 1] (positive half) and weights, with the
// embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// One Gauss-Kronrod 7-15 pass over [a, b]: returns (kronrod value,
/// error estimate).
fn gk15<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T) -> (T, T) {
    let center = (a + b) * T::of(0.5);
    let half = (b - a) * T::of(0.5);
    let f_center = f(center);
    let mut result_g = T::zero();
    let mut result_k = f_center * T::of(WGK[7]);
    let mut resabs = f_center.abs() * T::of(WGK[7]);
    let mut fv = [T::zero(); 15];
    fv[7] = f_center;
    for i in 0..7 {
        let dx = half * T::of(XGK[i]);
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[i] = f1;
        fv[14 - i] = f2;
        let fsum = f1 + f2;
        result_k = result_k + T::of(WGK[i]) * fsum;
        resabs = resabs + T::of(WGK[i]) * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            // Kronrod nodes with odd index are the embedded Gauss nodes
            result_g = result_g + T::of(WG[i / 2]) * fsum;
        }
    }
    result_g = result_g + T::of(WG[3]) * f_center;
    let mean = result_k * T::of(0.5);
    let mut resasc = T::of(WGK[7]) * (f_center - mean).abs();
    for (i, &v) in fv.iter().enumerate() {
        let w = if i <= 7 { WGK[i] } else { WGK[14 - i] };
        if i != 7 {
            resasc = resasc + T::of(w) * (v - mean).abs();
        }
    }
    let value = result_k * half;
    resabs = resabs * half.abs();
    resasc = resasc * half.abs();
    let mut err = ((result_k - result_g) * half).abs();
    if resasc != T::zero() && err != T::zero() {
        let scale = (T::of(200.0) * err / resasc).powf(T::of(1.5));
        err = if scale < T::one() {
            resasc * scale
        } else {
            resasc
        };
    }
    let floor = T::min_positive_value() / (T::of(50.0) * T::eps());
    if resabs > floor {
        err = err.max(T::of(50.0) * T::eps() * resabs);
    }
    (value, err)
}

/// Adaptive bisection to an absolute tolerance. Deterministic: the
/// recursion order is fixed by the interval structure.
pub fn integrate<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, tol_abs: T) -> (T, T) {
    fn recurse<T: Real, F: Fn(T) -> T>(
        f: &F,
        a: T,
        b: T,
        tol: T,
        depth: usize,
    ) -> (T, T) {
        let (v, e) = gk15(f, a, b);
        if e <= tol || depth >= 50 {
            return (v, e);
        }
        let mid = (a + b) * T::of(0.5);
        let half_tol = tol * T::of(0.5);
        let (v1, e1) = recurse(f, a, mid, half_tol, depth + 1);
        let (v2, e2) = recurse(f, mid, b, half_tol, depth + 1);
        (v1 + v2, e1 + e2)
    }
    recurse(f, a, b, tol_abs, 0)
}

/// Outcome of an improper-integral evaluation over (0, R].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureReport<T> {
    /// Integral estimate (tail-extrapolated when convergent).
    pub value: T,
    /// Absolute error estimate; meaningful only when `converged`.
    pub abs_error_estimate: T,
    /// Whether the integral is convergent at the requested tolerance.
    pub converged: bool,
    /// Outer cutoff radius used.
    pub cutoff_radius: T,
}

/// Integrate f over (0, R] where f ~ C·r^p near zero with unknown p
/// (positive or negative). The interval is split into geometric decades;
/// the decade sums form an asymptotically geometric sequence whose measured
/// ratio drives both the tail extrapolation and the divergence verdict.
pub fn integrate_power_endpoint<T: Real, F: Fn(T) -> T>(
    f: &F,
    r_outer: T,
    tol_rel: T,
    max_decades: usize,
) -> QuadratureReport<T> {
    let ten = T::of(10.0);
    let mut partial = T::zero();
    let mut err_quad = T::zero();
    let mut increments: Vec<T> = Vec::new();
    let mut hi = r_outer;
    let mut verdict_divergent = false;
    let mut growth_streak = 0usize;
    let mut tail = T::zero();
    let mut tail_err = T::infinity();
    for n in 0..max_decades {
        let lo = hi / ten;
        let scale = partial.abs().max(T::min_positive_value() * T::of(1e10));
        let (v, e) = integrate(f, lo, hi, tol_rel * scale * T::of(0.05) + T::min_positive_value());
        partial = partial + v;
        err_quad = err_quad + e;
        increments.push(v);
        hi = lo;
        if n < 3 {
            continue;
        }
        // measured decade ratio; the power-law regime gives q -> 10^{-(p+1)}
        let m = increments.len();
        let i2 = increments[m - 1];
        let i1 = increments[m - 2];
        let i0 = increments[m - 3];
        if i1 == T::zero() || i0 == T::zero() {
            // integrand numerically zero near the origin: done
            tail = T::zero();
            tail_err = T::zero();
            break;
        }
        let q = i2 / i1;
        let q_prev = i1 / i0;
        if q >= T::one() || q <= T::zero() {
            // require two consecutive non-decaying decades so that the
            // crossover out of the exponential-decay region cannot be
            // mistaken for endpoint divergence
            growth_streak += 1;
            if growth_streak >= 2 {
                verdict_divergent = true;
                break;
            }
            continue;
        }
        growth_streak = 0;
        tail = i2 * q / (T::one() - q);
        tail_err = (q - q_prev).abs() * i2.abs() / (T::one() - q) / (T::one() - q)
            * T::of(2.0)
            + tail.abs() * T::of(1e-13);
        let total = partial + tail;
        if tail_err + err_quad <= tol_rel * total.abs() {
            break;
        }
    }
    if verdict_divergent {
        QuadratureReport {
            value: partial,
            abs_error_estimate: partial.abs(),
            converged: false,
            cutoff_radius: r_outer,
        }
    } else {
        let value = partial + tail;
        let err = err_quad + tail_err;
        QuadratureReport {
            value,
            abs_error_estimate: err,
            converged: err <= tol_rel * value.abs(),
            cutoff_radius: r_outer,
        }
    }
}
