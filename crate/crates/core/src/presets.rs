//! Built-in manifolds.

use std::fmt;
use std::str::FromStr;

use crate::disc::ManifoldModel;
use crate::error::Error;
use crate::group::{Factor, GroupSpec};
use crate::kernel::KernelSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresetId {
    /// S²×D² ⮏ S¹×B³: π₁ = ℤ, trivial Dax kernel.
    BoundaryConnectSum,
    /// S²×D² # S¹×B³: π₁ = ℤ, kernel spanned by `tⁱ - t⁻ⁱ`.
    ConnectSum,
    /// Any simply connected 4-manifold.
    SimplyConnected,
}

impl PresetId {
    pub const ALL: [PresetId; 3] = [
        PresetId::BoundaryConnectSum,
        PresetId::ConnectSum,
        PresetId::SimplyConnected,
    ];

    pub fn id(self) -> &'static str {
        match self {
            PresetId::BoundaryConnectSum => "boundary_connect_sum",
            PresetId::ConnectSum => "connect_sum",
            PresetId::SimplyConnected => "simply_connected",
        }
    }

    pub fn manifold(self) -> &'static str {
        match self {
            PresetId::BoundaryConnectSum => "S2xD2 boundary-sum S1xB3",
            PresetId::ConnectSum => "S2xD2 # S1xB3",
            PresetId::SimplyConnected => "simply connected",
        }
    }

    pub fn instantiate(self) -> ManifoldModel {
        let z = || GroupSpec {
            factors: vec![Factor::infinite("t")],
        };
        let (group, kernel) = match self {
            PresetId::BoundaryConnectSum => (z(), KernelSpec::Trivial),
            PresetId::ConnectSum => (z(), KernelSpec::InversePairs),
            PresetId::SimplyConnected => (GroupSpec::trivial(), KernelSpec::Trivial),
        };
        ManifoldModel {
            group,
            kernel,
            label: self.id().to_string(),
        }
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PresetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PresetId::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::validation("preset", format!("unknown preset {s:?}")))
    }
}
