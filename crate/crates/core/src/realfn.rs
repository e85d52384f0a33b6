//! Pointfree continuous (extended) real functions on a finite frame,
//! represented as pairs of rational-breakpoint step maps.
//!
//! A function carries the generator family f(p,—) in `up` (antitone,
//! right-continuous) and f(—,q) in `down` (isotone, left-continuous). The
//! continuity conventions make the r3/r4 relations structural; r1, r2, r5
//! and r6 are checked at construction according to the class:
//!
//! * `C`          — r1, r2, r5, r6 (finite continuous real functions)
//! * `CExtended`  — r1, r2 (extended real functions)
//! * `ICExtended` — r1 only (extended partial real functions)

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::frame::{Booleanization, Elem, FiniteFrame, FrameError, FrameHom, FrameRef};
use crate::rat::Rat;
use crate::step::{joint_probes, Orientation, StepError, StepMap};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FnError {
    #[error("functions live on different frames")]
    FrameMismatch,
    #[error("map is not an extended scale: value {0} is not self-rather-below")]
    NotAnExtendedScale(Elem),
    #[error("characteristic pair must meet to bottom")]
    MeetNotZero,
    #[error("relation {0} fails at probe {1}")]
    RelationViolated(&'static str, Rat),
    #[error("family is not discrete")]
    NotDiscrete,
    #[error("function is not nonnegative")]
    NotNonnegative,
    #[error("function is not Hausdorff continuous")]
    NotHausdorff,
    #[error("function is not nearly finite")]
    NotNearlyFinite,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(transparent)]
    Step(#[from] StepError),
    #[error(transparent)]
    Frame(#[from] FrameError),
}

/// Which defining relations the function satisfies beyond r1/r3/r4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FnClass {
    C,
    CExtended,
    ICExtended,
}

/// An (extended, partial) real function on a finite frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFn {
    frame: FrameRef,
    up: StepMap,
    down: StepMap,
    class: FnClass,
}

impl RealFn {
    /// Validate the class relations and build the function.
    pub fn new(frame: FrameRef, up: StepMap, down: StepMap, class: FnClass) -> Result<Self, FnError> {
        assert_eq!(up.orientation(), Orientation::Antitone);
        assert_eq!(down.orientation(), Orientation::Isotone);
        let probes = joint_probes(&[&up, &down]);
        for &t in &probes {
            if frame.meet(up.at(t), down.at(t)) != frame.bottom() {
                return Err(FnError::RelationViolated("r1", t));
            }
        }
        if matches!(class, FnClass::C | FnClass::CExtended) {
            for &t in &probes {
                if frame.join(up.at(t), down.at_right(t)) != frame.top() {
                    return Err(FnError::RelationViolated("r2", t));
                }
            }
        }
        if class == FnClass::C {
            if up.first_value() != frame.top() {
                return Err(FnError::RelationViolated("r5", probes[0]));
            }
            if down.last_value() != frame.top() {
                return Err(FnError::RelationViolated("r6", probes[probes.len() - 1]));
            }
        }
        Ok(RealFn { frame, up, down, class })
    }

    pub fn frame(&self) -> &FrameRef {
        &self.frame
    }

    pub fn up(&self) -> &StepMap {
        &self.up
    }

    pub fn down(&self) -> &StepMap {
        &self.down
    }

    pub fn class(&self) -> FnClass {
        self.class
    }

    /// f(p,—)
    pub fn up_at(&self, p: Rat) -> Elem {
        self.up.at(p)
    }

    /// f(—,q)
    pub fn down_at(&self, q: Rat) -> Elem {
        self.down.at(q)
    }

    fn check_same_frame(&self, other: &RealFn) -> Result<(), FnError> {
        if Arc::ptr_eq(&self.frame, &other.frame) || *self.frame == *other.frame {
            Ok(())
        } else {
            Err(FnError::FrameMismatch)
        }
    }

    /// The constant function determined by the rational r.
    pub fn constant(frame: &FrameRef, r: Rat) -> RealFn {
        let up = StepMap::new(
            frame,
            Orientation::Antitone,
            vec![r],
            vec![frame.top(), frame.bottom()],
        )
        .unwrap();
        let down = StepMap::new(
            frame,
            Orientation::Isotone,
            vec![r],
            vec![frame.bottom(), frame.top()],
        )
        .unwrap();
        RealFn::new(frame.clone(), up, down, FnClass::C).expect("constants satisfy r1-r6")
    }

    /// χ_{a,b}: value 1 "on a", 0 "on b". Class C iff a∨b = 1; otherwise a
    /// genuine partial function (class ICExtended).
    pub fn characteristic(frame: &FrameRef, a: Elem, b: Elem) -> Result<RealFn, FnError> {
        if frame.meet(a, b) != frame.bottom() {
            return Err(FnError::MeetNotZero);
        }
        let (zero, one) = (Rat::zero(), Rat::one());
        let up = StepMap::new(
            frame,
            Orientation::Antitone,
            vec![zero, one],
            vec![frame.top(), a, frame.bottom()],
        )?;
        let down = StepMap::new(
            frame,
            Orientation::Isotone,
            vec![zero, one],
            vec![frame.bottom(), b, frame.top()],
        )?;
        let class = if frame.join(a, b) == frame.top() {
            FnClass::C
        } else {
            FnClass::ICExtended
        };
        RealFn::new(frame.clone(), up, down, class)
    }

    /// Pointwise order via the up-maps; for class C the down-map comparison
    /// is asserted to agree.
    pub fn leq(&self, other: &RealFn) -> Result<bool, FnError> {
        self.check_same_frame(other)?;
        let probes = joint_probes(&[&self.up, &other.up, &self.down, &other.down]);
        let by_up = probes
            .iter()
            .all(|&t| self.frame.leq(self.up.at(t), other.up.at(t)));
        if self.class == FnClass::C && other.class == FnClass::C {
            let by_down = probes
                .iter()
                .all(|&t| self.frame.leq(other.down.at(t), self.down.at(t)));
            assert_eq!(by_up, by_down, "order via up and down maps disagrees");
        }
        Ok(by_up)
    }

    pub fn is_nonnegative(&self) -> Result<bool, FnError> {
        RealFn::constant(&self.frame, Rat::zero()).leq(self)
    }

    /// (f+g)(p,—) = ⋁_r f(r,—) ∧ g(p−r,—), and dually for the down maps.
    pub fn add(&self, other: &RealFn) -> Result<RealFn, FnError> {
        self.check_same_frame(other)?;
        let frame = &self.frame;
        let up = convolve(frame, &self.up, &other.up);
        let down = convolve(frame, &self.down, &other.down);
        let class = match (self.class, other.class) {
            (FnClass::C, FnClass::C) => FnClass::C,
            _ => FnClass::CExtended,
        };
        RealFn::new(frame.clone(), up, down, class)
    }

    /// (f∨g)(p,—) = f(p,—)∨g(p,—); (f∨g)(—,q) = f(—,q)∧g(—,q).
    pub fn join_op(&self, other: &RealFn) -> Result<RealFn, FnError> {
        self.check_same_frame(other)?;
        self.pointwise(other, |f, a, b| f.join(a, b), |f, a, b| f.meet(a, b))
    }

    /// (f∧g)(p,—) = f(p,—)∧g(p,—); (f∧g)(—,q) = f(—,q)∨g(—,q).
    pub fn meet_op(&self, other: &RealFn) -> Result<RealFn, FnError> {
        self.check_same_frame(other)?;
        self.pointwise(other, |f, a, b| f.meet(a, b), |f, a, b| f.join(a, b))
    }

    fn pointwise(
        &self,
        other: &RealFn,
        up_op: impl Fn(&FiniteFrame, Elem, Elem) -> Elem,
        down_op: impl Fn(&FiniteFrame, Elem, Elem) -> Elem,
    ) -> Result<RealFn, FnError> {
        let frame = &self.frame;
        let mut bps: Vec<Rat> = self.up.breakpoints().to_vec();
        bps.extend_from_slice(other.up.breakpoints());
        bps.extend_from_slice(self.down.breakpoints());
        bps.extend_from_slice(other.down.breakpoints());
        let up = StepMap::from_fn(frame, Orientation::Antitone, &bps, |p| {
            up_op(frame, self.up.at(p), other.up.at(p))
        })?;
        let down = StepMap::from_fn(frame, Orientation::Isotone, &bps, |q| {
            down_op(frame, self.down.at(q), other.down.at(q))
        })?;
        let class = match (self.class, other.class) {
            (FnClass::C, FnClass::C) => FnClass::C,
            (FnClass::ICExtended, _) | (_, FnClass::ICExtended) => FnClass::ICExtended,
            _ => FnClass::CExtended,
        };
        RealFn::new(frame.clone(), up, down, class)
    }

    /// Scalar multiple; λ may be any rational. λ = 0 yields the constant 0,
    /// negative λ goes through negation.
    pub fn scalar(&self, lambda: Rat) -> RealFn {
        if lambda.is_zero() {
            return RealFn::constant(&self.frame, Rat::zero());
        }
        if lambda < Rat::zero() {
            return self.scalar(-lambda).negate();
        }
        let up = self.up.scale_breakpoints(lambda);
        let down = self.down.scale_breakpoints(lambda);
        RealFn::new(self.frame.clone(), up, down, self.class)
            .expect("scaling breakpoints preserves all relations")
    }

    /// (−f)(p,—) = f(—,−p) and (−f)(—,q) = f(−q,—).
    pub fn negate(&self) -> RealFn {
        RealFn::new(
            self.frame.clone(),
            self.down.reflect(),
            self.up.reflect(),
            self.class,
        )
        .expect("negation preserves all relations")
    }

    pub fn sub(&self, other: &RealFn) -> Result<RealFn, FnError> {
        self.add(&other.negate())
    }

    /// coz f = f(0,—) ∨ f(—,0).
    pub fn coz(&self) -> Elem {
        self.frame
            .join(self.up.at(Rat::zero()), self.down.at(Rat::zero()))
    }

    /// Post-compose with a frame homomorphism: apply h to every step value.
    pub fn compose_hom(&self, h: &FrameHom) -> Result<RealFn, FnError> {
        if *h.source() != self.frame && !Arc::ptr_eq(h.source(), &self.frame) {
            return Err(FnError::FrameMismatch);
        }
        let target = h.target().clone();
        let up = self.up.map_values(&target, |v| h.apply(v))?;
        let down = self.down.map_values(&target, |v| h.apply(v))?;
        RealFn::new(target, up, down, self.class)
    }

    /// The embedding Υ: C(L) → C(𝔅(L)), post-composition with β.
    pub fn upsilon(&self, b: &Booleanization) -> Result<RealFn, FnError> {
        self.compose_hom(&b.beta)
    }

    /// Check f(p,—) = ⋁_{r>p} f(r,—)∗∗ at every probe. By right-continuity
    /// and antitonicity the join collapses to f(p,—)∗∗, so the identity holds
    /// iff every up-value is a regular element. Returns the first failing
    /// probe, or None if the identity holds everywhere.
    pub fn reconstruct_double_neg(&self) -> Option<Rat> {
        let frame = &self.frame;
        self.up
            .probes()
            .into_iter()
            .find(|&p| !frame.is_regular_elem(self.up.at(p)))
    }
}

/// ⋁_r a(r) ∧ b(p − r), evaluated exactly over the finitely many candidate
/// positions where either factor can change.
fn convolve(frame: &FiniteFrame, a: &StepMap, b: &StepMap) -> StepMap {
    let mut sums: Vec<Rat> = Vec::new();
    for &x in a.breakpoints() {
        for &y in b.breakpoints() {
            sums.push(x + y);
        }
    }
    if a.breakpoints().is_empty() || b.breakpoints().is_empty() {
        // at least one factor is constant; the convolution is constant too
        sums.clear();
    }
    let orientation = a.orientation();
    StepMap::from_fn(frame, orientation, &sums, |p| {
        let mut cuts: Vec<Rat> = a.breakpoints().to_vec();
        cuts.extend(b.breakpoints().iter().map(|&y| p - y));
        cuts.sort();
        cuts.dedup();
        let probes = crate::step::probe_set(&cuts);
        frame.join_all(probes.into_iter().map(|r| frame.meet(a.at(r), b.at(p - r))))
    })
    .expect("convolution of monotone maps is monotone")
}

// ---------------------------------------------------------------------------
// Scales
// ---------------------------------------------------------------------------

/// An (extended) scale: an antitone map whose interval values are all
/// self-rather-below (equivalently, complemented — every value of a step map
/// is taken on a rational interval).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scale {
    frame: FrameRef,
    sigma: StepMap,
}

impl Scale {
    pub fn new(frame: FrameRef, sigma: StepMap) -> Result<Self, FnError> {
        assert_eq!(sigma.orientation(), Orientation::Antitone);
        for &v in sigma.values() {
            if !frame.is_complemented(v) {
                return Err(FnError::NotAnExtendedScale(v));
            }
        }
        Ok(Scale { frame, sigma })
    }

    /// Accepts degenerate single-point values at breakpoints; they never
    /// affect the determined function and are discarded after a sandwich
    /// check against the neighbouring interval values.
    pub fn with_point_values(
        frame: FrameRef,
        sigma: StepMap,
        points: &[(Rat, Elem)],
    ) -> Result<Self, FnError> {
        for &(p, v) in points {
            let left = sigma.at_left(p);
            let right = sigma.at_right(p);
            if !(frame.leq(right, v) && frame.leq(v, left)) {
                return Err(FnError::PreconditionFailed(format!(
                    "point value at {p} breaks antitonicity"
                )));
            }
        }
        Scale::new(frame, sigma)
    }

    pub fn sigma(&self) -> &StepMap {
        &self.sigma
    }

    /// A scale proper: both join conditions hold.
    pub fn is_scale(&self) -> bool {
        self.sigma.first_value() == self.frame.top()
            && self.sigma.last_value() == self.frame.bottom()
    }

    /// The function determined by the scale: f(p,—) = ⋁_{r>p} σ(r) and
    /// f(—,q) = ⋁_{r<q} σ(r)∗. With our continuity conventions the former is
    /// σ itself and the latter is the pointwise pseudocomplement read
    /// left-continuously.
    pub fn determined_fn(&self) -> RealFn {
        let frame = &self.frame;
        let up = self.sigma.clone();
        let down = StepMap::new(
            frame,
            Orientation::Isotone,
            self.sigma.breakpoints().to_vec(),
            self.sigma
                .values()
                .iter()
                .map(|&v| frame.pseudocomplement(v))
                .collect(),
        )
        .expect("pseudocomplement reverses the order");
        let class = if self.is_scale() {
            FnClass::C
        } else {
            FnClass::CExtended
        };
        RealFn::new(frame.clone(), up, down, class)
            .expect("a scale determines a valid function")
    }
}

/// Build the function determined by an extended scale.
pub fn from_scale(scale: &Scale) -> RealFn {
    scale.determined_fn()
}

// ---------------------------------------------------------------------------
// Discrete families and their suprema
// ---------------------------------------------------------------------------

/// A family {y_i} is discrete iff the admissible elements (those meeting at
/// most one y_i nontrivially) cover the frame.
pub fn is_discrete(frame: &FiniteFrame, elems: &[Elem]) -> bool {
    let admissible = frame.elements().filter(|&c| {
        elems
            .iter()
            .filter(|&&y| frame.meet(c, y) != frame.bottom())
            .count()
            <= 1
    });
    frame.join_all(admissible) == frame.top()
}

/// Supremum of a discrete family of nonnegative functions, via the scale
/// σ(p) = ⋁_i f_i(p,—).
pub fn discrete_sup(fs: &[RealFn]) -> Result<RealFn, FnError> {
    let first = fs.first().ok_or(FnError::NotDiscrete)?;
    let frame = first.frame().clone();
    for f in fs {
        first.check_same_frame(f)?;
        if !f.is_nonnegative()? {
            return Err(FnError::NotNonnegative);
        }
    }
    let supports: Vec<Elem> = fs.iter().map(|f| f.up_at(Rat::zero())).collect();
    if !is_discrete(&frame, &supports) {
        return Err(FnError::NotDiscrete);
    }
    let bps: Vec<Rat> = fs
        .iter()
        .flat_map(|f| f.up().breakpoints().to_vec())
        .collect();
    let sigma = StepMap::from_fn(&frame, Orientation::Antitone, &bps, |p| {
        frame.join_all(fs.iter().map(|f| f.up_at(p)))
    })?;
    Ok(Scale::new(frame, sigma)?.determined_fn())
}

// ---------------------------------------------------------------------------
// Density witnesses (universal completion construction)
// ---------------------------------------------------------------------------

/// The witness function f_{q,a} below h: its scale is 1 below 0, runs down
/// the interpolation chain on [0,q), and is 0 from q on.
pub fn density_witness(
    frame: &FrameRef,
    q: Rat,
    a: Elem,
    chain: &[Elem],
    bound: Elem,
) -> Result<RealFn, FnError> {
    if q < Rat::zero() {
        return Err(FnError::PreconditionFailed("q must be nonnegative".into()));
    }
    if !frame.completely_below(a, bound) {
        return Err(FnError::PreconditionFailed(
            "a is not completely below the bound".into(),
        ));
    }
    if q.is_zero() || chain.is_empty() {
        // degenerate interval: the witness is vacuous
        let sigma = StepMap::new(
            frame,
            Orientation::Antitone,
            vec![Rat::zero()],
            vec![frame.top(), frame.bottom()],
        )?;
        return Ok(Scale::new(frame.clone(), sigma)?.determined_fn());
    }
    let valid_chain = frame.leq(a, chain[0])
        && frame.leq(*chain.last().unwrap(), bound)
        && chain.windows(2).all(|w| frame.rather_below(w[0], w[1]));
    if !valid_chain {
        return Err(FnError::PreconditionFailed("invalid interpolation chain".into()));
    }
    // dual-order relabeling of the chain onto equally spaced levels in [0,q]
    let k = chain.len();
    let mut bps = vec![Rat::zero()];
    for i in 1..k {
        bps.push(q * Rat::new(i as i64, k as i64));
    }
    bps.push(q);
    let mut values = vec![frame.top()];
    values.extend(chain.iter().rev());
    values.push(frame.bottom());
    let sigma = StepMap::new(frame, Orientation::Antitone, bps, values)?;
    Ok(Scale::new(frame.clone(), sigma)?.determined_fn())
}

// ---------------------------------------------------------------------------
// Transfer of function-level isomorphisms to frame isomorphisms
// ---------------------------------------------------------------------------

/// Recover a frame isomorphism from a function-level lattice isomorphism
/// oracle between C(L) and C(M), both Boolean: φ(a) = Φ̄(χ_a)(0,—), where
/// Φ̄(f) = Φ(f) − Φ(0) normalizes away a constant shift.
pub fn boolean_iso_from_fn_iso(
    l: &FrameRef,
    m: &FrameRef,
    phi: impl Fn(&RealFn) -> RealFn,
) -> Result<FrameHom, FrameError> {
    if l.classify().boolean.is_some() || m.classify().boolean.is_some() {
        return Err(FrameError::NotBoolean);
    }
    let zero_image = phi(&RealFn::constant(l, Rat::zero()));
    let normalized = |f: &RealFn| -> Result<RealFn, FrameError> {
        phi(f).sub(&zero_image).map_err(|_| FrameError::OracleNotIso)
    };
    let chi = |a: Elem| -> RealFn {
        RealFn::characteristic(l, a, l.pseudocomplement(a))
            .expect("complemented pair forms a characteristic function")
    };
    let map: Vec<Elem> = l
        .elements()
        .map(|a| Ok(normalized(&chi(a))?.up_at(Rat::zero())))
        .collect::<Result<_, FrameError>>()?;
    // sampled preservation check of the oracle on the characteristic family
    for a in l.elements() {
        for b in l.elements() {
            let lhs = normalized(&chi(a).join_op(&chi(b)).unwrap())?;
            let rhs = normalized(&chi(a))?
                .join_op(&normalized(&chi(b))?)
                .map_err(|_| FrameError::OracleNotIso)?;
            if lhs != rhs {
                return Err(FrameError::OracleNotIso);
            }
            let lhs = normalized(&chi(a).meet_op(&chi(b)).unwrap())?;
            let rhs = normalized(&chi(a))?
                .meet_op(&normalized(&chi(b))?)
                .map_err(|_| FrameError::OracleNotIso)?;
            if lhs != rhs {
                return Err(FrameError::OracleNotIso);
            }
        }
    }
    let hom = FrameHom::new(l.clone(), m.clone(), map).map_err(|_| FrameError::OracleNotIso)?;
    if !hom.is_iso() {
        return Err(FrameError::OracleNotIso);
    }
    Ok(hom)
}
