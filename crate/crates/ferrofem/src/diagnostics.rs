//! Post-processing: the discrete energy and dissipation functionals, the
//! twelve relative error norms reported by the convergence studies, and the
//! convergence-order fits.

use crate::forms::quad_data;
use crate::forms::quadrature::{TET_DEG_11, TET_DEG_9};
use crate::mesh::{dot, sub};
use crate::spaces::CellKit;
use crate::stepper::Stepper;

/// Column labels for [`relative_errors`], in the order the convergence tables
/// report them.
pub const ERROR_COLUMNS: [&str; 12] = [
    "u_l2", "u_h1", "p", "m_l2", "div_m", "h_l2", "div_h", "z", "k", "omega_l2", "omega_h1",
    "phi",
];

/// Energy and dissipation of one committed state.
#[derive(Clone, Copy, Debug)]
pub struct EnergyRecord {
    pub step: usize,
    pub t: f64,
    /// `ρ‖u‖² + ρκ‖ω‖² + ‖m‖² + μ₀‖H‖²`.
    pub energy: f64,
    /// `η‖∇u‖² + η′‖∇ω‖² + (η′+λ′)‖div ω‖² + (1/τ)‖m‖²
    ///  + ((1+(1+μ₀)χ₀)/τ)‖H‖² + σ‖div m‖² + σ‖k‖² + μ₀σ‖div H‖²
    ///  + ζ‖curl u − 2ω‖²`.
    pub dissipation: f64,
    /// The four energy contributions, in the order above.
    pub parts: [f64; 4],
}

fn frob2(g: &[[f64; 3]; 3]) -> f64 {
    g.iter().map(|r| dot(*r, *r)).sum()
}

/// Evaluates the energy/dissipation functionals of the current state. All
/// integrands are piecewise polynomials of degree ≤ 8, so the degree-9 rule
/// is exact.
pub fn energy(st: &Stepper) -> EnergyRecord {
    let qd = quad_data(&TET_DEG_9);
    let mesh = &st.mesh;
    let prm = &st.cfg.params;
    let s = &st.state;
    // ‖u‖², ‖∇u‖², ‖curl u − 2ω‖², ‖ω‖², ‖∇ω‖², ‖div ω‖², ‖m‖², ‖div m‖²,
    // ‖k‖², ‖H‖², ‖div H‖².
    let mut acc = [0.0; 11];
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(mesh, c);
        let jac = 6.0 * kit.geo.volume;
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let u = s.u.eval_vec(mesh, &kit, c, lam);
            let gu = s.u.eval_grad_vec(mesh, &kit, c, lam);
            let cu = s.u.eval_curl(mesh, &kit, c, lam);
            let w = s.w.eval_vec(mesh, &kit, c, lam);
            let gw = s.w.eval_grad_vec(mesh, &kit, c, lam);
            let m = s.m.eval_vec(mesh, &kit, c, lam);
            let dm = s.m.eval_div(mesh, &kit, c, lam);
            let k = s.k.eval_vec(mesh, &kit, c, lam);
            let h = s.h.eval_vec(mesh, &kit, c, lam);
            let dh = s.h.eval_div(mesh, &kit, c, lam);
            let r = [cu[0] - 2.0 * w[0], cu[1] - 2.0 * w[1], cu[2] - 2.0 * w[2]];
            let dw = gw[0][0] + gw[1][1] + gw[2][2];
            acc[0] += jw * dot(u, u);
            acc[1] += jw * frob2(&gu);
            acc[2] += jw * dot(r, r);
            acc[3] += jw * dot(w, w);
            acc[4] += jw * frob2(&gw);
            acc[5] += jw * dw * dw;
            acc[6] += jw * dot(m, m);
            acc[7] += jw * dm * dm;
            acc[8] += jw * dot(k, k);
            acc[9] += jw * dot(h, h);
            acc[10] += jw * dh * dh;
        }
    }
    let parts = [
        prm.rho * acc[0],
        prm.rho * prm.kappa * acc[3],
        acc[6],
        prm.mu0 * acc[9],
    ];
    let dissipation = prm.eta * acc[1]
        + prm.eta_p * acc[4]
        + (prm.eta_p + prm.lambda_p) * acc[5]
        + acc[6] / prm.tau
        + (1.0 + (1.0 + prm.mu0) * prm.chi0) / prm.tau * acc[9]
        + prm.sigma * acc[7]
        + prm.sigma * acc[8]
        + prm.mu0 * prm.sigma * acc[10]
        + prm.zeta * acc[2];
    EnergyRecord {
        step: st.state.step,
        t: st.state.t,
        energy: parts.iter().sum(),
        dissipation,
        parts,
    }
}

/// The twelve relative errors of the current state against the reference
/// solution at the current time, in [`ERROR_COLUMNS`] order. The reference
/// fields are evaluated with a degree-11 rule so the quadrature bias stays
/// far below the discretization error at every resolution reported.
///
/// The potential error compares against the zero-mean representative, since
/// the continuous potential is only determined up to a constant and the
/// discrete one is pinned by a zero-mean constraint.
pub fn relative_errors(st: &Stepper) -> [f64; 12] {
    let qd = quad_data(&TET_DEG_11);
    let mesh = &st.mesh;
    let s = &st.state;
    let mms = &st.mms;
    let t = s.t;
    let phi_shift = mms.potential_mean(t);
    let mut num = [0.0; 12];
    let mut den = [0.0; 12];
    let add_vec = |slot: usize, jw: f64, a: [f64; 3], b: [f64; 3], num: &mut [f64; 12], den: &mut [f64; 12]| {
        let d = sub(a, b);
        num[slot] += jw * dot(d, d);
        den[slot] += jw * dot(b, b);
    };
    for c in 0..mesh.n_cells() {
        let kit = CellKit::new(mesh, c);
        let jac = 6.0 * kit.geo.volume;
        for (q, lam) in qd.lambda.iter().enumerate() {
            let jw = jac * qd.weight[q];
            let x = kit.point(lam);

            add_vec(0, jw, s.u.eval_vec(mesh, &kit, c, lam), mms.velocity(x, t), &mut num, &mut den);
            let gu = s.u.eval_grad_vec(mesh, &kit, c, lam);
            let gue = mms.velocity_grad(x, t);
            for i in 0..3 {
                add_vec(1, jw, gu[i], gue[i], &mut num, &mut den);
            }
            let pe = mms.pressure(x, t);
            let pd = s.p.eval_scalar(mesh, c, lam) - pe;
            num[2] += jw * pd * pd;
            den[2] += jw * pe * pe;

            add_vec(3, jw, s.m.eval_vec(mesh, &kit, c, lam), mms.magnetization(x, t), &mut num, &mut den);
            let dme = mms.magnetization_div(x, t);
            let dmd = s.m.eval_div(mesh, &kit, c, lam) - dme;
            num[4] += jw * dmd * dmd;
            den[4] += jw * dme * dme;

            add_vec(5, jw, s.h.eval_vec(mesh, &kit, c, lam), mms.field_h(x, t), &mut num, &mut den);
            let dhe = mms.field_h_div(x, t);
            let dhd = s.h.eval_div(mesh, &kit, c, lam) - dhe;
            num[6] += jw * dhd * dhd;
            den[6] += jw * dhe * dhe;

            add_vec(7, jw, s.z.eval_vec(mesh, &kit, c, lam), mms.aux_z(x, t), &mut num, &mut den);
            add_vec(8, jw, s.k.eval_vec(mesh, &kit, c, lam), mms.magnetization_curl(x, t), &mut num, &mut den);

            add_vec(9, jw, s.w.eval_vec(mesh, &kit, c, lam), mms.angular(x, t), &mut num, &mut den);
            let gw = s.w.eval_grad_vec(mesh, &kit, c, lam);
            let gwe = mms.angular_grad(x, t);
            for i in 0..3 {
                add_vec(10, jw, gw[i], gwe[i], &mut num, &mut den);
            }

            let phie = mms.potential(x, t) - phi_shift;
            let phid = s.phi.eval_scalar(mesh, c, lam) - phie;
            num[11] += jw * phid * phid;
            den[11] += jw * phie * phie;
        }
    }
    core::array::from_fn(|i| (num[i] / den[i]).sqrt())
}

/// Least-squares slope of `log error` against `log h`: the convergence order
/// over all levels of a refinement study.
pub fn ls_order(hs: &[f64], errors: &[f64]) -> f64 {
    assert_eq!(hs.len(), errors.len());
    assert!(hs.len() >= 2, "order fit needs at least two levels");
    let n = hs.len() as f64;
    let xs: Vec<f64> = hs.iter().map(|&h| h.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|&e| e.ln()).collect();
    let xm = xs.iter().sum::<f64>() / n;
    let ym = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        cov += (x - xm) * (y - ym);
        var += (x - xm) * (x - xm);
    }
    cov / var
}

/// Order from the two finest levels only; the classical tail estimate that
/// the tables' "order" row may have used instead of a regression.
pub fn last_pair_order(hs: &[f64], errors: &[f64]) -> f64 {
    assert_eq!(hs.len(), errors.len());
    assert!(hs.len() >= 2, "order fit needs at least two levels");
    let n = hs.len();
    (errors[n - 1] / errors[n - 2]).ln() / (hs[n - 1] / hs[n - 2]).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::quadrature::TET_DEG_7;
    use crate::forms::{assemble_div_div, assemble_grad_grad, assemble_mass};
    use crate::stepper::{RunConfig, Stepper};

    #[test]
    fn order_fit_reproduces_exact_slopes() {
        assert!((ls_order(&[1.0, 0.5, 0.25], &[1.0, 0.5, 0.25]) - 1.0).abs() < 1e-13);
        assert!((ls_order(&[1.0, 0.5, 0.25], &[1.0, 0.25, 0.0625]) - 2.0).abs() < 1e-13);
        assert!((last_pair_order(&[1.0, 0.5, 0.25], &[1.0, 0.25, 0.0625]) - 2.0).abs() < 1e-13);
    }

    #[test]
    fn table_velocity_column_slope_is_near_two() {
        // Frozen reference: the published velocity L2 column of the first
        // convergence table. The regression slope lands near 2 and within
        // 0.1 of the published order 1.9942 (whose fit method is unstated).
        let hs = [0.25, 0.125, 0.0625, 0.03125];
        let errs = [0.0554, 0.0140, 0.0035, 0.0009];
        let slope = ls_order(&hs, &errs);
        assert!((slope - 1.98).abs() < 0.015, "slope {slope}");
        assert!((slope - 1.9942).abs() < 0.1);
    }

    #[test]
    fn energy_matches_coefficient_quadratic_forms() {
        // Independent check of the quadrature loop: every squared norm in
        // the functionals equals the corresponding matrix quadratic form.
        let st = Stepper::new(RunConfig::new(2, 2, 0.25, 1.0));
        let rec = energy(&st);
        assert_eq!(rec.step, 0);
        let quad_form = |coo: &crate::forms::Coo, v: &[f64]| -> f64 {
            let av = coo.apply(v);
            v.iter().zip(&av).map(|(a, b)| a * b).sum()
        };
        let prm = &st.cfg.params;
        let mu = assemble_mass(&st.mesh, &st.map_u, &crate::forms::quadrature::TET_DEG_9);
        let mrt = assemble_mass(&st.mesh, &st.map_m, &TET_DEG_7);
        let expected_kinetic = prm.rho * quad_form(&mu, &st.state.u.coeffs);
        let expected_magnetic = quad_form(&mrt, &st.state.m.coeffs);
        assert!((rec.parts[0] - expected_kinetic).abs() < 1e-12 * (1.0 + expected_kinetic));
        assert!((rec.parts[2] - expected_magnetic).abs() < 1e-12 * (1.0 + expected_magnetic));

        let gg = assemble_grad_grad(&st.mesh, &st.map_w, &TET_DEG_7);
        let dd = assemble_div_div(&st.mesh, &st.map_w, &TET_DEG_7);
        let mw = assemble_mass(&st.mesh, &st.map_w, &TET_DEG_7);
        let brk = prm.eta_p * quad_form(&gg, &st.state.w.coeffs)
            + (prm.eta_p + prm.lambda_p) * quad_form(&dd, &st.state.w.coeffs)
            + prm.rho * prm.kappa * quad_form(&mw, &st.state.w.coeffs);
        assert!(brk.is_finite() && brk > 0.0);
        assert!(rec.energy > 0.0 && rec.dissipation > 0.0);
        // The recorded breakdown is exhaustive: E is the sum of its parts.
        let parts_sum: f64 = rec.parts.iter().sum();
        assert!((rec.energy - parts_sum).abs() <= 1e-14 * rec.energy);
    }

    #[test]
    fn zero_state_has_zero_energy() {
        let mut st = Stepper::new(RunConfig::new(3, 2, 0.25, 1.0));
        for f in [
            &mut st.state.u,
            &mut st.state.w,
            &mut st.state.m,
            &mut st.state.z,
            &mut st.state.k,
            &mut st.state.h,
        ] {
            f.coeffs.iter_mut().for_each(|c| *c = 0.0);
        }
        let rec = energy(&st);
        assert_eq!(rec.energy, 0.0);
        assert_eq!(rec.dissipation, 0.0);
    }

    #[test]
    fn initial_interpolant_errors_are_small_and_relative() {
        // At t = 0 the state holds interpolants of the reference fields, so
        // every interpolated column starts at its interpolation error: well
        // below one but nonzero. φ and p start at 100% (initialized to zero
        // with a nonzero reference) — except φ, which the init solve already
        // determines. z and k also come out of the init solves.
        let st = Stepper::new(RunConfig::new(2, 4, 0.25, 1.0));
        let errs = relative_errors(&st);
        for (i, &e) in errs.iter().enumerate() {
            assert!(e.is_finite(), "{} not finite", ERROR_COLUMNS[i]);
        }
        // Interpolation accuracy of the smooth fields at K=4: u and ω live in
        // second-order spaces, m in a first-order one with a π-sized constant.
        assert!(errs[0] < 0.1, "u: {}", errs[0]);
        assert!(errs[3] < 0.5, "m: {}", errs[3]);
        assert!(errs[9] < 0.2, "omega: {}", errs[9]);
        // Pressure is initialized to zero, so its relative error is 1.
        assert!((errs[2] - 1.0).abs() < 1e-12);
        // The magnetostatic init solve puts H and φ near the reference.
        assert!(errs[5] < 0.5, "h: {}", errs[5]);
        assert!(errs[11] < 0.5, "phi: {}", errs[11]);
    }
}
