pub mod alexander;
pub mod functions;
pub mod knot;
pub mod power;

pub use alexander::alexander_eval;
pub use functions::{
    f_abr, f_abr_prime, f_abr_second, g_factor, h_theta, phi_factor, saddle_point, tau,
    tau_guarded, POLE_GUARD,
};
pub use knot::{Regime, SpectralParameter, TorusKnot};
pub use power::{t_power, PowerConvention};
