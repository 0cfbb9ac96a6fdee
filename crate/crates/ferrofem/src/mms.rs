//! Manufactured solutions for the convergence and energy-decay studies.
//!
//! One family of spatial shapes serves all experiments; a scalar time factor
//! `a(t)` distinguishes them:
//!
//! * example 1: `a(t) = sin t`, with forcing terms chosen so the exact fields
//!   solve the full system;
//! * example 2: `a(t) = e^{−t}`, same construction;
//! * example 3: `a ≡ 1` and *no* forcing — the shapes only provide initial
//!   data for the free-decay experiment.
//!
//! The shapes on `Ω = (0,1)³`, writing `q(s) = s² − s`, `S(s) = sin πs`,
//! `Q(s) = q(s)²`:
//!
//! ```text
//! u  = a (sin πy, sin πz, sin πx)            (divergence-free, nonzero trace)
//! p̃  = 120x²yz − 40y³z − 40yz³               (zero mean, time-independent)
//! ω  = a (q(x)q(y)q(z), 0, 0)                (zero trace)
//! m  = a (S(x)S(y)S(z), 0, 0)                (vanishes on ∂Ω)
//! φ  = 1000 a Q(x)Q(y)Q(z),   H = ∇φ         (H vanishes on ∂Ω)
//! z  = u × m,                 k = curl m
//! ```
//!
//! Forcings come from substituting the fields into the strong equations; the
//! momentum forcing uses the full pressure `p = p̃ + (μ0/2) m·H`. The external
//! field enters the scheme only through `div H_e = −μ0 (div H + div m)`.

use crate::mesh::cross;
use crate::Params;

/// The scalar time factor `a(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TimeFactor {
    Sin,
    ExpNeg,
    One,
}

impl TimeFactor {
    pub fn a(self, t: f64) -> f64 {
        match self {
            TimeFactor::Sin => t.sin(),
            TimeFactor::ExpNeg => (-t).exp(),
            TimeFactor::One => 1.0,
        }
    }

    pub fn a_dot(self, t: f64) -> f64 {
        match self {
            TimeFactor::Sin => t.cos(),
            TimeFactor::ExpNeg => -(-t).exp(),
            TimeFactor::One => 0.0,
        }
    }
}

#[inline]
fn q(s: f64) -> f64 {
    s * s - s
}
#[inline]
fn dq(s: f64) -> f64 {
    2.0 * s - 1.0
}
const DDQ: f64 = 2.0;

use std::f64::consts::PI;

#[inline]
fn sp(s: f64) -> f64 {
    (PI * s).sin()
}
#[inline]
fn dsp(s: f64) -> f64 {
    PI * (PI * s).cos()
}
#[inline]
fn ddsp(s: f64) -> f64 {
    -PI * PI * (PI * s).sin()
}

#[inline]
fn bigq(s: f64) -> f64 {
    q(s) * q(s)
}
#[inline]
fn dbigq(s: f64) -> f64 {
    2.0 * q(s) * dq(s)
}
#[inline]
fn ddbigq(s: f64) -> f64 {
    2.0 * dq(s) * dq(s) + 2.0 * q(s) * DDQ
}

const PHI_SCALE: f64 = 1000.0;

/// Manufactured solution of one example.
#[derive(Clone, Copy, Debug)]
pub struct Mms {
    pub time: TimeFactor,
    /// Whether forcing terms (and an external field) drive the system.
    /// `false` for the free-decay experiment.
    pub forced: bool,
}

impl Mms {
    pub fn example(n: usize) -> Self {
        match n {
            1 => Mms { time: TimeFactor::Sin, forced: true },
            2 => Mms { time: TimeFactor::ExpNeg, forced: true },
            3 => Mms { time: TimeFactor::One, forced: false },
            _ => panic!("unknown example {n}"),
        }
    }

    // ----- velocity -----

    pub fn velocity(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let a = self.time.a(t);
        [a * sp(x[1]), a * sp(x[2]), a * sp(x[0])]
    }

    pub fn velocity_dt(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let ad = self.time.a_dot(t);
        [ad * sp(x[1]), ad * sp(x[2]), ad * sp(x[0])]
    }

    /// `grad[i][j] = ∂u_i/∂x_j`.
    pub fn velocity_grad(&self, x: [f64; 3], t: f64) -> [[f64; 3]; 3] {
        let a = self.time.a(t);
        [
            [0.0, a * dsp(x[1]), 0.0],
            [0.0, 0.0, a * dsp(x[2])],
            [a * dsp(x[0]), 0.0, 0.0],
        ]
    }

    pub fn velocity_laplace(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let a = self.time.a(t);
        [a * ddsp(x[1]), a * ddsp(x[2]), a * ddsp(x[0])]
    }

    pub fn velocity_curl(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let a = self.time.a(t);
        [-a * dsp(x[2]), -a * dsp(x[0]), -a * dsp(x[1])]
    }

    /// `(u·∇)u`.
    pub fn velocity_conv(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        advect(self.velocity(x, t), self.velocity_grad(x, t))
    }

    // ----- pressure -----

    /// The reduced pressure `p̃`.
    pub fn pressure(&self, x: [f64; 3], _t: f64) -> f64 {
        let [x1, x2, x3] = x;
        120.0 * x1 * x1 * x2 * x3 - 40.0 * x2 * x2 * x2 * x3 - 40.0 * x2 * x3 * x3 * x3
    }

    pub fn pressure_grad(&self, x: [f64; 3], _t: f64) -> [f64; 3] {
        let [x1, x2, x3] = x;
        [
            240.0 * x1 * x2 * x3,
            120.0 * x1 * x1 * x3 - 120.0 * x2 * x2 * x3 - 40.0 * x3 * x3 * x3,
            120.0 * x1 * x1 * x2 - 40.0 * x2 * x2 * x2 - 120.0 * x2 * x3 * x3,
        ]
    }

    // ----- angular velocity -----

    pub fn angular(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        [self.time.a(t) * q(x[0]) * q(x[1]) * q(x[2]), 0.0, 0.0]
    }

    pub fn angular_dt(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        [self.time.a_dot(t) * q(x[0]) * q(x[1]) * q(x[2]), 0.0, 0.0]
    }

    pub fn angular_grad(&self, x: [f64; 3], t: f64) -> [[f64; 3]; 3] {
        let a = self.time.a(t);
        let (qx, qy, qz) = (q(x[0]), q(x[1]), q(x[2]));
        [
            [a * dq(x[0]) * qy * qz, a * qx * dq(x[1]) * qz, a * qx * qy * dq(x[2])],
            [0.0; 3],
            [0.0; 3],
        ]
    }

    pub fn angular_laplace(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let a = self.time.a(t);
        let (qx, qy, qz) = (q(x[0]), q(x[1]), q(x[2]));
        [a * DDQ * (qy * qz + qx * qz + qx * qy), 0.0, 0.0]
    }

    pub fn angular_div(&self, x: [f64; 3], t: f64) -> f64 {
        self.time.a(t) * dq(x[0]) * q(x[1]) * q(x[2])
    }

    pub fn angular_div_grad(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let a = self.time.a(t);
        let (qy, qz) = (q(x[1]), q(x[2]));
        [
            a * DDQ * qy * qz,
            a * dq(x[0]) * dq(x[1]) * qz,
            a * dq(x[0]) * qy * dq(x[2]),
        ]
    }

    pub fn angular_curl(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let a = self.time.a(t);
        let (qx, qy, qz) = (q(x[0]), q(x[1]), q(x[2]));
        [0.0, a * qx * qy * dq(x[2]), -a * qx * dq(x[1]) * qz]
    }

    // ----- magnetization -----

    pub fn magnetization(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        [self.time.a(t) * sp(x[0]) * sp(x[1]) * sp(x[2]), 0.0, 0.0]
    }

    pub fn magnetization_dt(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        [self.time.a_dot(t) * sp(x[0]) * sp(x[1]) * sp(x[2]), 0.0, 0.0]
    }

    pub fn magnetization_grad(&self, x: [f64; 3], t: f64) -> [[f64; 3]; 3] {
        let a = self.time.a(t);
        let (sx, sy, sz) = (sp(x[0]), sp(x[1]), sp(x[2]));
        [
            [a * dsp(x[0]) * sy * sz, a * sx * dsp(x[1]) * sz, a * sx * sy * dsp(x[2])],
            [0.0; 3],
            [0.0; 3],
        ]
    }

    pub fn magnetization_laplace(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let m = self.magnetization(x, t);
        [-3.0 * PI * PI * m[0], 0.0, 0.0]
    }

    pub fn magnetization_div(&self, x: [f64; 3], t: f64) -> f64 {
        self.time.a(t) * dsp(x[0]) * sp(x[1]) * sp(x[2])
    }

    /// `k = curl m`.
    pub fn magnetization_curl(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let a = self.time.a(t);
        let (sx, sy, sz) = (sp(x[0]), sp(x[1]), sp(x[2]));
        [0.0, a * sx * sy * dsp(x[2]), -a * sx * dsp(x[1]) * sz]
    }

    // ----- magnetostatics -----

    pub fn potential(&self, x: [f64; 3], t: f64) -> f64 {
        PHI_SCALE * self.time.a(t) * bigq(x[0]) * bigq(x[1]) * bigq(x[2])
    }

    /// Mean of `φ` over the unit cube. The discrete potential carries a
    /// zero-mean constraint, so error norms compare it against `φ` minus
    /// this constant (`∫₀¹ Q = ∫₀¹ s²(1−s)² ds = 1/30` per factor).
    pub fn potential_mean(&self, t: f64) -> f64 {
        PHI_SCALE * self.time.a(t) / 27_000.0
    }

    /// `H = ∇φ`.
    pub fn field_h(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        let s = PHI_SCALE * self.time.a(t);
        let (qx, qy, qz) = (bigq(x[0]), bigq(x[1]), bigq(x[2]));
        [
            s * dbigq(x[0]) * qy * qz,
            s * qx * dbigq(x[1]) * qz,
            s * qx * qy * dbigq(x[2]),
        ]
    }

    /// `grad[i][j] = ∂H_i/∂x_j`, the Hessian of `φ`.
    pub fn field_h_grad(&self, x: [f64; 3], t: f64) -> [[f64; 3]; 3] {
        let s = PHI_SCALE * self.time.a(t);
        let (qx, qy, qz) = (bigq(x[0]), bigq(x[1]), bigq(x[2]));
        let (dx, dy, dz) = (dbigq(x[0]), dbigq(x[1]), dbigq(x[2]));
        [
            [s * ddbigq(x[0]) * qy * qz, s * dx * dy * qz, s * dx * qy * dz],
            [s * dx * dy * qz, s * qx * ddbigq(x[1]) * qz, s * qx * dy * dz],
            [s * dx * qy * dz, s * qx * dy * dz, s * qx * qy * ddbigq(x[2])],
        ]
    }

    /// `div H = Δφ`.
    pub fn field_h_div(&self, x: [f64; 3], t: f64) -> f64 {
        let s = PHI_SCALE * self.time.a(t);
        let (qx, qy, qz) = (bigq(x[0]), bigq(x[1]), bigq(x[2]));
        s * (ddbigq(x[0]) * qy * qz + qx * ddbigq(x[1]) * qz + qx * qy * ddbigq(x[2]))
    }

    /// `z = u × m`.
    pub fn aux_z(&self, x: [f64; 3], t: f64) -> [f64; 3] {
        cross(self.velocity(x, t), self.magnetization(x, t))
    }

    // ----- data driving the scheme -----

    /// `div H_e = −μ0 (div H + div m)`; identically zero when unforced.
    pub fn div_he(&self, prm: &Params, x: [f64; 3], t: f64) -> f64 {
        if !self.forced {
            return 0.0;
        }
        -prm.mu0 * (self.field_h_div(x, t) + self.magnetization_div(x, t))
    }

    /// Momentum forcing: `ρ(u_t + (u·∇)u) − (η+ζ)Δu + ∇p − μ0(m·∇)H − 2ζ curl ω`
    /// with the full pressure `p = p̃ + (μ0/2) m·H`.
    pub fn forcing_u(&self, prm: &Params, x: [f64; 3], t: f64) -> [f64; 3] {
        if !self.forced {
            return [0.0; 3];
        }
        let ut = self.velocity_dt(x, t);
        let conv = self.velocity_conv(x, t);
        let lap = self.velocity_laplace(x, t);
        let gp = self.pressure_grad(x, t);
        let m = self.magnetization(x, t);
        let gm = self.magnetization_grad(x, t);
        let h = self.field_h(x, t);
        let gh = self.field_h_grad(x, t);
        let mdh = advect(m, gh);
        let gw = self.angular_curl(x, t);
        let mut f = [0.0; 3];
        for i in 0..3 {
            // ∂_i (m·H) = Σ_j (∂_i m_j) H_j + m_j (∂_i H_j)
            let dmh: f64 = (0..3).map(|j| gm[j][i] * h[j] + m[j] * gh[j][i]).sum();
            f[i] = prm.rho * (ut[i] + conv[i]) - (prm.eta + prm.zeta) * lap[i] + gp[i]
                + 0.5 * prm.mu0 * dmh
                - prm.mu0 * mdh[i]
                - 2.0 * prm.zeta * gw[i];
        }
        f
    }

    /// Angular momentum forcing:
    /// `ρκ(ω_t + (u·∇)ω) − η′Δω − (η′+λ′)∇(div ω) − μ0 m×H − 2ζ(curl u − 2ω)`.
    pub fn forcing_omega(&self, prm: &Params, x: [f64; 3], t: f64) -> [f64; 3] {
        if !self.forced {
            return [0.0; 3];
        }
        let wt = self.angular_dt(x, t);
        let conv = advect(self.velocity(x, t), self.angular_grad(x, t));
        let lap = self.angular_laplace(x, t);
        let gdiv = self.angular_div_grad(x, t);
        let mxh = cross(self.magnetization(x, t), self.field_h(x, t));
        let cu = self.velocity_curl(x, t);
        let w = self.angular(x, t);
        let mut f = [0.0; 3];
        for i in 0..3 {
            f[i] = prm.rho * prm.kappa * (wt[i] + conv[i]) - prm.eta_p * lap[i]
                - (prm.eta_p + prm.lambda_p) * gdiv[i]
                - prm.mu0 * mxh[i]
                - 2.0 * prm.zeta * (cu[i] - 2.0 * w[i]);
        }
        f
    }

    /// Magnetization forcing:
    /// `m_t + (u·∇)m − σΔm − ω×m + (m − χ0 H)/τ`.
    pub fn forcing_m(&self, prm: &Params, x: [f64; 3], t: f64) -> [f64; 3] {
        if !self.forced {
            return [0.0; 3];
        }
        let mt = self.magnetization_dt(x, t);
        let conv = advect(self.velocity(x, t), self.magnetization_grad(x, t));
        let lap = self.magnetization_laplace(x, t);
        let wxm = cross(self.angular(x, t), self.magnetization(x, t));
        let m = self.magnetization(x, t);
        let h = self.field_h(x, t);
        let mut f = [0.0; 3];
        for i in 0..3 {
            f[i] = mt[i] + conv[i] - prm.sigma * lap[i] - wxm[i] + (m[i] - prm.chi0 * h[i]) / prm.tau;
        }
        f
    }
}

/// `(v·∇)f` from a value and a gradient in the `grad[i][j] = ∂f_i/∂x_j`
/// convention.
fn advect(v: [f64; 3], grad: [[f64; 3]; 3]) -> [f64; 3] {
    let mut out = [0.0; 3];
    for i in 0..3 {
        out[i] = v[0] * grad[i][0] + v[1] * grad[i][1] + v[2] * grad[i][2];
    }
    out
}
