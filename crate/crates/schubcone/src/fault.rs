//! Deliberate fault injection for validating the cross-check harness.
//!
//! The point of computing rigidity by several independent routes is that a
//! bug in any one of them surfaces as a disagreement.  That guarantee is
//! only worth something if the harness demonstrably *does* catch an
//! injected bug, so this module provides a process-global switch that
//! corrupts exactly one route at a time:
//!
//! * [`FaultMode::RaySign`] flips the sign of every Γ(A) vector before
//!   normal-form reduction, so the graph route's ray set stops matching
//!   the polyhedral oracle's;
//! * [`FaultMode::CorollaryPattern`] widens both gap conditions in the
//!   essential-pattern rule from 1 to 2, so the pattern route misses real
//!   non-rigidity witnesses.
//!
//! The switch defaults to [`FaultMode::None`] and exists for negative
//! tests and the CLI's hidden `--sabotage` flag; nothing in the library
//! sets it on its own.  Toggling it mid-computation corrupts results by
//! design — tests that use it run in their own process.

use std::fmt;
use std::sync::atomic::{AtomicU8, Ordering};

/// Which route, if any, is deliberately corrupted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FaultMode {
    /// Honest computation (the default).
    #[default]
    None = 0,
    /// Negate Γ(A) lifts before reduction to normal form.
    RaySign = 1,
    /// Widen the essential-pattern gaps from 1 to 2.
    CorollaryPattern = 2,
}

static MODE: AtomicU8 = AtomicU8::new(FaultMode::None as u8);

/// Set the process-global fault mode.
pub fn set_fault_mode(mode: FaultMode) {
    MODE.store(mode as u8, Ordering::SeqCst);
}

/// Read the process-global fault mode.
pub fn fault_mode() -> FaultMode {
    match MODE.load(Ordering::SeqCst) {
        1 => FaultMode::RaySign,
        2 => FaultMode::CorollaryPattern,
        _ => FaultMode::None,
    }
}

/// Parse error for [`FaultMode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFaultMode(pub String);

impl fmt::Display for UnknownFaultMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown fault mode {:?} (expected none, ray-sign, or corollary-pattern)",
            self.0
        )
    }
}

impl std::error::Error for UnknownFaultMode {}

impl std::str::FromStr for FaultMode {
    type Err = UnknownFaultMode;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(FaultMode::None),
            "ray-sign" => Ok(FaultMode::RaySign),
            "corollary-pattern" => Ok(FaultMode::CorollaryPattern),
            other => Err(UnknownFaultMode(other.to_string())),
        }
    }
}

impl fmt::Display for FaultMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FaultMode::None => "none",
            FaultMode::RaySign => "ray-sign",
            FaultMode::CorollaryPattern => "corollary-pattern",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Only pure parsing/formatting here: tests that *set* the global mode
    // live in an integration-test binary of their own, so they cannot race
    // unit tests that classify honestly.

    #[test]
    fn parse_roundtrip() {
        for mode in [FaultMode::None, FaultMode::RaySign, FaultMode::CorollaryPattern] {
            assert_eq!(mode.to_string().parse::<FaultMode>().unwrap(), mode);
        }
        assert_eq!(
            "raysign".parse::<FaultMode>(),
            Err(UnknownFaultMode("raysign".into()))
        );
    }

    #[test]
    fn default_is_none() {
        assert_eq!(FaultMode::default(), FaultMode::None);
    }
}
