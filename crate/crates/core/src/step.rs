//! Piecewise-constant maps from the rationals into a finite frame.
//!
//! A `StepMap` stores strictly increasing rational breakpoints and one more
//! value than breakpoints. The orientation fixes both the monotonicity and
//! the continuity convention:
//!
//! * `Antitone`: values weakly decrease and the map is right-continuous, the
//!   value at p is the value of the interval [q_i, q_{i+1}) containing p.
//! * `Isotone`: values weakly increase and the map is left-continuous, the
//!   value at q is the value of (q_i, q_{i+1}] containing q.
//!
//! These conventions make the r3/r4 join identities structural: for an
//! antitone map, ⋁_{r>p} σ(r) is just σ(p), and dually for isotone maps.

use crate::frame::{Elem, FiniteFrame};
use crate::rat::Rat;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StepError {
    #[error("breakpoints are not strictly increasing")]
    Unsorted,
    #[error("need exactly one more value than breakpoints")]
    LengthMismatch,
    #[error("values violate the orientation's monotonicity")]
    NotMonotone,
    #[error("value index out of range for the frame")]
    BadValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Antitone,
    Isotone,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepMap {
    breakpoints: Vec<Rat>,
    values: Vec<Elem>,
    orientation: Orientation,
}

impl StepMap {
    pub fn new(
        frame: &FiniteFrame,
        orientation: Orientation,
        breakpoints: Vec<Rat>,
        values: Vec<Elem>,
    ) -> Result<Self, StepError> {
        if values.len() != breakpoints.len() + 1 {
            return Err(StepError::LengthMismatch);
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(StepError::Unsorted);
        }
        if values.iter().any(|&v| v >= frame.size()) {
            return Err(StepError::BadValue);
        }
        let ok = values.windows(2).all(|w| match orientation {
            Orientation::Antitone => frame.leq(w[1], w[0]),
            Orientation::Isotone => frame.leq(w[0], w[1]),
        });
        if !ok {
            return Err(StepError::NotMonotone);
        }
        let mut map = StepMap { breakpoints, values, orientation };
        map.canonicalize();
        Ok(map)
    }

    pub fn constant(orientation: Orientation, value: Elem) -> Self {
        StepMap { breakpoints: Vec::new(), values: vec![value], orientation }
    }

    fn canonicalize(&mut self) {
        let mut bps = Vec::with_capacity(self.breakpoints.len());
        let mut vals = vec![self.values[0]];
        for (i, &bp) in self.breakpoints.iter().enumerate() {
            let v = self.values[i + 1];
            if v != *vals.last().unwrap() {
                bps.push(bp);
                vals.push(v);
            }
        }
        self.breakpoints = bps;
        self.values = vals;
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    /// Value under the map's own continuity convention.
    pub fn at(&self, p: Rat) -> Elem {
        let idx = match self.orientation {
            Orientation::Antitone => self.breakpoints.iter().filter(|&&b| b <= p).count(),
            Orientation::Isotone => self.breakpoints.iter().filter(|&&b| b < p).count(),
        };
        self.values[idx]
    }

    /// Limit from the left: the value taken on (p−ε, p).
    pub fn at_left(&self, p: Rat) -> Elem {
        let idx = self.breakpoints.iter().filter(|&&b| b < p).count();
        self.values[idx]
    }

    /// Limit from the right: the value taken on (p, p+ε).
    pub fn at_right(&self, p: Rat) -> Elem {
        let idx = self.breakpoints.iter().filter(|&&b| b <= p).count();
        self.values[idx]
    }

    /// Leftmost value; the join of the whole range for an antitone map.
    pub fn first_value(&self) -> Elem {
        self.values[0]
    }

    /// Rightmost value; the join of the whole range for an isotone map.
    pub fn last_value(&self) -> Elem {
        *self.values.last().unwrap()
    }

    /// A finite probe set hitting every segment and every breakpoint.
    pub fn probes(&self) -> Vec<Rat> {
        probe_set(&self.breakpoints)
    }

    /// Apply a monotone element map (typically a frame homomorphism) to every
    /// value; re-canonicalizes.
    pub fn map_values(&self, target: &FiniteFrame, f: impl Fn(Elem) -> Elem) -> Result<Self, StepError> {
        StepMap::new(
            target,
            self.orientation,
            self.breakpoints.clone(),
            self.values.iter().map(|&v| f(v)).collect(),
        )
    }

    /// p ↦ f(−p): flips orientation and continuity side.
    pub fn reflect(&self) -> Self {
        StepMap {
            breakpoints: self.breakpoints.iter().rev().map(|b| -b).collect(),
            values: self.values.iter().rev().copied().collect(),
            orientation: match self.orientation {
                Orientation::Antitone => Orientation::Isotone,
                Orientation::Isotone => Orientation::Antitone,
            },
        }
    }

    /// p ↦ f(p/λ) for λ > 0: scales the breakpoints.
    pub fn scale_breakpoints(&self, lambda: Rat) -> Self {
        StepMap {
            breakpoints: self.breakpoints.iter().map(|b| b * lambda).collect(),
            values: self.values.clone(),
            orientation: self.orientation,
        }
    }

    /// Build a map of the given orientation from an evaluation oracle that is
    /// piecewise constant with breakpoints among `candidates`.
    pub fn from_fn(
        frame: &FiniteFrame,
        orientation: Orientation,
        candidates: &[Rat],
        eval: impl Fn(Rat) -> Elem,
    ) -> Result<Self, StepError> {
        let mut bps: Vec<Rat> = candidates.to_vec();
        bps.sort();
        bps.dedup();
        if bps.is_empty() {
            return StepMap::new(frame, orientation, vec![], vec![eval(Rat::one())]);
        }
        let m = bps.len();
        let mut values = Vec::with_capacity(m + 1);
        match orientation {
            Orientation::Antitone => {
                values.push(eval(bps[0] - Rat::one()));
                for &b in &bps {
                    values.push(eval(b));
                }
            }
            Orientation::Isotone => {
                values.push(eval(bps[0]));
                for i in 1..m {
                    values.push(eval(bps[i]));
                }
                values.push(eval(bps[m - 1] + Rat::one()));
            }
        }
        StepMap::new(frame, orientation, bps, values)
    }
}

/// Probe set for a breakpoint collection: every breakpoint, a midpoint inside
/// every finite segment, and one point beyond each end.
pub fn probe_set(breakpoints: &[Rat]) -> Vec<Rat> {
    if breakpoints.is_empty() {
        return vec![Rat::from_integer(0)];
    }
    let mut probes = Vec::with_capacity(2 * breakpoints.len() + 1);
    probes.push(breakpoints[0] - Rat::one());
    for (i, &b) in breakpoints.iter().enumerate() {
        probes.push(b);
        if let Some(&next) = breakpoints.get(i + 1) {
            probes.push((b + next) / Rat::from_integer(2));
        }
    }
    probes.push(*breakpoints.last().unwrap() + Rat::one());
    probes
}

/// Probe set for the union of several maps' breakpoints.
pub fn joint_probes(maps: &[&StepMap]) -> Vec<Rat> {
    let mut bps: Vec<Rat> = maps.iter().flat_map(|m| m.breakpoints().to_vec()).collect();
    bps.sort();
    bps.dedup();
    probe_set(&bps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::chain;
    use crate::rat::rat;
    use proptest::prelude::*;

    #[test]
    fn antitone_continuity_convention() {
        let f = chain(3);
        let s = StepMap::new(&f, Orientation::Antitone, vec![rat(0, 1)], vec![2, 0]).unwrap();
        assert_eq!(s.at(rat(-1, 1)), 2);
        assert_eq!(s.at(rat(0, 1)), 0); // right-continuous
        assert_eq!(s.at_left(rat(0, 1)), 2);
        assert_eq!(s.at(rat(1, 1)), 0);
    }

    #[test]
    fn isotone_continuity_convention() {
        let f = chain(3);
        let s = StepMap::new(&f, Orientation::Isotone, vec![rat(0, 1)], vec![0, 2]).unwrap();
        assert_eq!(s.at(rat(0, 1)), 0); // left-continuous
        assert_eq!(s.at_right(rat(0, 1)), 2);
        assert_eq!(s.at(rat(1, 2)), 2);
    }

    #[test]
    fn canonical_merges_equal_segments() {
        let f = chain(3);
        let s = StepMap::new(
            &f,
            Orientation::Antitone,
            vec![rat(0, 1), rat(1, 1)],
            vec![2, 2, 0],
        )
        .unwrap();
        assert_eq!(s.breakpoints(), &[rat(1, 1)]);
        assert_eq!(s.values(), &[2, 0]);
    }

    #[test]
    fn monotonicity_enforced() {
        let f = chain(3);
        let err = StepMap::new(&f, Orientation::Antitone, vec![rat(0, 1)], vec![0, 2]);
        assert_eq!(err.unwrap_err(), StepError::NotMonotone);
    }

    #[test]
    fn reflect_round_trips() {
        let f = chain(4);
        let s = StepMap::new(
            &f,
            Orientation::Antitone,
            vec![rat(-1, 2), rat(3, 1)],
            vec![3, 2, 0],
        )
        .unwrap();
        let r = s.reflect();
        assert_eq!(r.orientation(), Orientation::Isotone);
        assert_eq!(r.at(rat(1, 2)), s.at(rat(-1, 2)));
        assert_eq!(r.reflect(), s);
    }

    proptest! {
        #[test]
        fn reflect_is_pointwise_negation(
            bp in proptest::collection::vec(-8i64..8, 1..4),
            probe in -10i64..10,
        ) {
            let f = chain(5);
            let mut bps: Vec<Rat> = bp.into_iter().map(|b| rat(b, 2)).collect();
            bps.sort();
            bps.dedup();
            let k = bps.len();
            let values: Vec<usize> = (0..=k).map(|i| 4 - (4 * i / k.max(1))).collect();
            let s = StepMap::new(&f, Orientation::Antitone, bps, values).unwrap();
            let r = s.reflect();
            let p = rat(probe, 2);
            prop_assert_eq!(r.at(p), s.at(-p));
        }
    }
}
