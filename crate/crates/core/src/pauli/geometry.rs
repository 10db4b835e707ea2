use serde::{Deserialize, Serialize};

use super::{symplectic_product, PhasePoint};
use crate::arith::residue::inverse_mod;

/// An affine line `{offset + t·direction}` in `Z_d²`.
///
/// The direction is scaled so its first nonzero coordinate is 1, and the
/// offset is the lexicographically smallest point on the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhaseLine {
    pub direction: PhasePoint,
    pub offset: PhasePoint,
}

impl PhaseLine {
    pub fn new(through: PhasePoint, direction: PhasePoint, d: u32) -> Option<Self> {
        let lead = if direction.p != 0 { direction.p } else { direction.q };
        let inv = inverse_mod(lead as i64, d as u64)? as i64;
        let direction = direction.scale(inv, d);
        let offset = (0..d as i64).map(|t| through.add(direction.scale(t, d), d)).min()?;
        Some(PhaseLine { direction, offset })
    }

    pub fn points(&self, d: u32) -> Vec<PhasePoint> {
        let mut pts: Vec<_> =
            (0..d as i64).map(|t| self.offset.add(self.direction.scale(t, d), d)).collect();
        pts.sort();
        pts
    }

    pub fn contains(&self, pt: PhasePoint, d: u32) -> bool {
        symplectic_product(pt.sub(self.offset, d), self.direction, d).is_zero()
    }

    /// Parallel to the `Z`-power axis, i.e. a line `q = const`.
    pub fn is_horizontal(&self) -> bool {
        self.direction.q == 0
    }

    pub fn is_parallel(&self, other: &PhaseLine) -> bool {
        self.direction == other.direction
    }
}

/// Result of fitting a line through a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineFit {
    Line(PhaseLine),
    /// A single point lies on `d + 1` lines.
    Underdetermined(PhasePoint),
    NotCollinear,
    Empty,
}

impl LineFit {
    pub fn line(self) -> Option<PhaseLine> {
        match self {
            LineFit::Line(l) => Some(l),
            _ => None,
        }
    }
}

pub fn line_through(points: &[PhasePoint], d: u32) -> LineFit {
    let Some(&first) = points.first() else {
        return LineFit::Empty;
    };
    let Some(&second) = points.iter().find(|&&x| x != first) else {
        return LineFit::Underdetermined(first);
    };
    let line = PhaseLine::new(first, second.sub(first, d), d).expect("distinct points");
    if points.iter().all(|&x| line.contains(x, d)) {
        LineFit::Line(line)
    } else {
        LineFit::NotCollinear
    }
}
