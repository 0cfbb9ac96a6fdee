//! Energy-stable mixed finite element solver for the Rosensweig model of
//! ferrohydrodynamics on uniform tetrahedral meshes of the unit cube.
//!
//! The model couples incompressible Navier-Stokes flow `(u, p)` with spin
//! (angular momentum) `ω`, magnetization `m`, and a curl-free magnetic field
//! `H = ∇φ`. The discretization follows a structure-preserving mixed layout:
//!
//! | field | space |
//! |-------|-------|
//! | `u`   | vector MINI (P1 + cell bubble), zero trace |
//! | `p`   | continuous P1, zero mean |
//! | `ω`   | vector P1, zero trace |
//! | `z, k`| lowest-order Nédélec edge elements, zero tangential trace |
//! | `m, H`| lowest-order Raviart-Thomas face elements, zero normal trace |
//! | `φ`   | piecewise constants, zero mean |
//!
//! The edge/face/volume spaces form an exact discrete sequence (gradients of
//! P1 land in the edge space, curls of edge functions in the face space,
//! divergences of face functions in the constants), which is what lets the
//! fully discrete scheme inherit the continuous energy law. Time stepping is
//! backward Euler with a decoupled quasi-Newton sweep per step: magnetostatics,
//! then spin, then a coupled magnetization block `(m, z, k)`, then flow.
//!
//! Crate layout mirrors the pipeline: [`mesh`] → [`spaces`] → [`forms`] →
//! [`linsolve`] → [`stepper`], with [`mms`] supplying manufactured solutions
//! and [`diagnostics`] the energy and error reporting.

pub mod diagnostics;
pub mod forms;
pub mod linsolve;
pub mod mesh;
pub mod mms;
pub mod spaces;
pub mod stepper;

/// Physical parameters of the ferrofluid system.
///
/// Names follow the usual Rosensweig notation: `rho` is the fluid density,
/// `kappa` the microinertia density (the spin equation carries `rho * kappa`),
/// `eta`/`zeta` the dynamic and vortex viscosities, `eta_p`/`lambda_p` the
/// spin viscosities (primed in the literature), `sigma` the magnetization
/// diffusion, `tau` the relaxation time, `chi0` the magnetic susceptibility,
/// and `mu0` the magnetic permeability of free space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params {
    pub rho: f64,
    pub kappa: f64,
    pub eta: f64,
    pub zeta: f64,
    pub eta_p: f64,
    pub lambda_p: f64,
    pub sigma: f64,
    pub tau: f64,
    pub chi0: f64,
    pub mu0: f64,
}

impl Default for Params {
    /// Unit parameters, the setting of all reported experiments.
    fn default() -> Self {
        Params {
            rho: 1.0,
            kappa: 1.0,
            eta: 1.0,
            zeta: 1.0,
            eta_p: 1.0,
            lambda_p: 1.0,
            sigma: 1.0,
            tau: 1.0,
            chi0: 1.0,
            mu0: 1.0,
        }
    }
}
