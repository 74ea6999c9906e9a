//! Quantum Toda2 chain: structure matrices of the quadratic exchange
//! algebra, the non-ultralocal and ultralocal Lax matrices, transfer
//! matrices, and the verification suites built from them.

mod aux;
pub mod checks;
mod lax;
mod xi;

pub use aux::{build_aux, build_scalar_aux, q_minus_sigma_z, theta_q, AuxKind, ScalarAux};
pub use lax::{
    build_lax, hamiltonians, monodromy, p_hat, q2_hat, transfer_trace, trq, LaxKind, TransferKind,
};
pub use xi::{build_xi_quantum, w_hat};

use crate::ring::Scalar;
use crate::weyl::Lattice;

pub const LAM: &str = "lam";
pub const LAM1: &str = "lam1";
pub const LAM2: &str = "lam2";
pub const LAM3: &str = "lam3";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    Generic,
    QToda,
    Toda2,
    QOsc,
}

/// Parameters of the ultralocal family and the chain length.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelParams {
    pub d1: Scalar,
    pub d2: Scalar,
    pub d3: Scalar,
    pub sites: u32,
    pub preset: Preset,
}

impl ModelParams {
    /// Formal `d1, d2, d3`.
    pub fn generic(sites: u32) -> Self {
        ModelParams {
            d1: Scalar::var("d1"),
            d2: Scalar::var("d2"),
            d3: Scalar::var("d3"),
            sites,
            preset: Preset::Generic,
        }
    }

    pub fn preset(preset: Preset, sites: u32) -> Self {
        let g = ModelParams::generic(sites);
        match preset {
            Preset::Generic => g,
            Preset::QToda => ModelParams {
                d2: Scalar::zero(),
                d3: Scalar::zero(),
                preset,
                ..g
            },
            Preset::Toda2 => ModelParams {
                d1: Scalar::zero(),
                d3: Scalar::zero(),
                preset,
                ..g
            },
            Preset::QOsc => ModelParams {
                d1: -Scalar::s_pow(-2),
                d2: Scalar::one(),
                d3: Scalar::zero(),
                sites,
                preset,
            },
        }
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::periodic(self.sites)
    }

    pub fn with_sites(&self, sites: u32) -> Self {
        ModelParams {
            sites,
            ..self.clone()
        }
    }
}
