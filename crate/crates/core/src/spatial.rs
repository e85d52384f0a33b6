//! The classical case: finite topological spaces, the spectrum of a finite
//! frame, interval-valued functions, Baire operators, and the point-level
//! correspondences Ψ and Π.
//!
//! Open sets of a space with ≤ 32 points are bitmasks. Every point of a
//! finite space has a smallest open neighbourhood, which makes the Baire
//! operators plain min/max over that neighbourhood.

use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::frame::{Elem, FiniteFrame, FrameHom, FrameRef};
use crate::intervalfn::PartialRealFn;
use crate::rat::{ExtRat, Rat};
use crate::step::{Orientation, StepMap};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("too many points for the bitmask representation")]
    TooManyPoints,
    #[error("opens must contain the empty and the full set")]
    MissingEmptyOrFull,
    #[error("opens are not closed under union/intersection")]
    NotClosed,
    #[error("lower endpoint exceeds upper endpoint at point {0}")]
    EndpointOrder(usize),
    #[error("semicontinuity fails at point {0}")]
    NotSemicontinuous(usize),
    #[error("function is not normal lower semicontinuous")]
    NotNormalLsc,
    #[error("function is not nearly finite")]
    NotNearlyFinite,
    #[error("interval function is not Hausdorff")]
    NotHausdorff,
    #[error("value count does not match the point count")]
    LengthMismatch,
    #[error("function lives on a different frame or space")]
    FrameMismatch,
    #[error("undefined sum (+inf) + (-inf) at point {0}")]
    UndefinedSum(usize),
}

/// A finite topological space: points 0..n, opens as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<u32>,
    min_nbhd: Vec<u32>,
    names: Vec<String>,
}

impl FiniteSpace {
    pub fn new(n: usize, opens: &[u32], names: Vec<String>) -> Result<Self, SpaceError> {
        if n > 32 {
            return Err(SpaceError::TooManyPoints);
        }
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let mut opens: Vec<u32> = opens.iter().map(|&o| o & full).collect();
        opens.sort_unstable();
        opens.dedup();
        if !opens.contains(&0) || !opens.contains(&full) {
            return Err(SpaceError::MissingEmptyOrFull);
        }
        for &a in &opens {
            for &b in &opens {
                if opens.binary_search(&(a | b)).is_err()
                    || opens.binary_search(&(a & b)).is_err()
                {
                    return Err(SpaceError::NotClosed);
                }
            }
        }
        let min_nbhd = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|&&o| o & (1 << x) != 0)
                    .fold(full, |acc, &o| acc & o)
            })
            .collect();
        let names = if names.is_empty() {
            (0..n).map(|i| format!("x{i}")).collect()
        } else {
            names
        };
        Ok(FiniteSpace { n, opens, min_nbhd, names })
    }

    pub fn discrete(n: usize) -> FiniteSpace {
        let full = (1u32 << n) - 1;
        FiniteSpace::new(n, &(0..=full).collect::<Vec<_>>(), Vec::new()).unwrap()
    }

    pub fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(2, &[0b00, 0b01, 0b11], vec!["x".into(), "y".into()]).unwrap()
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[u32] {
        &self.opens
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn min_nbhd(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |y| self.min_nbhd[x] & (1 << y) != 0)
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|x| self.min_nbhd[x] == 1 << x)
    }

    /// Closure of a point set meets every nonempty open ⟺ the set itself
    /// meets every nonempty open (opens are saturated under the closure).
    pub fn is_dense(&self, set: u32) -> bool {
        self.opens.iter().all(|&o| o == 0 || o & set != 0)
    }

    /// The frame of open sets, with the mask ↔ element index dictionary.
    pub fn open_frame(&self) -> OpenFrame {
        let k = self.opens.len();
        let mut leq = vec![vec![false; k]; k];
        for (i, &a) in self.opens.iter().enumerate() {
            for (j, &b) in self.opens.iter().enumerate() {
                leq[i][j] = a & b == a;
            }
        }
        let names = self
            .opens
            .iter()
            .map(|&o| {
                let pts: Vec<&str> = (0..self.n)
                    .filter(|x| o & (1 << x) != 0)
                    .map(|x| self.names[x].as_str())
                    .collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        let frame = Arc::new(
            FiniteFrame::build_named(leq, names).expect("open-set lattices are frames"),
        );
        OpenFrame { frame, masks: self.opens.clone() }
    }
}

/// The frame of opens of a finite space, with both directions of the
/// open-set ↔ frame-element dictionary.
#[derive(Debug, Clone)]
pub struct OpenFrame {
    pub frame: FrameRef,
    masks: Vec<u32>,
}

impl OpenFrame {
    pub fn mask(&self, e: Elem) -> u32 {
        self.masks[e]
    }

    pub fn elem(&self, mask: u32) -> Elem {
        self.masks
            .binary_search(&mask)
            .expect("mask must be an open set")
    }

    pub fn contains_point(&self, e: Elem, x: usize) -> bool {
        self.masks[e] & (1 << x) != 0
    }
}

/// The spectrum of a finite frame: points are the primes, opens are the
/// images Σ_a, and η: L → O(ΣL) is the spatial reflection. Finite frames
/// are spatial, so η is always an isomorphism — asserted by the tests, not
/// assumed here.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub space: FiniteSpace,
    pub opens: OpenFrame,
    pub eta: FrameHom,
}

pub fn spectrum(frame: &FrameRef) -> Spectrum {
    let primes = frame.primes();
    let sigma = |a: Elem| -> u32 {
        primes
            .iter()
            .enumerate()
            .filter(|&(_, &p)| !frame.leq(a, p))
            .fold(0u32, |acc, (i, _)| acc | (1 << i))
    };
    let masks: Vec<u32> = frame.elements().map(sigma).collect();
    let names = primes.iter().map(|&p| frame.name(p).to_string()).collect();
    let space = FiniteSpace::new(primes.len(), &masks, names)
        .expect("Σ images are closed under union and intersection");
    let opens = space.open_frame();
    let map = frame.elements().map(|a| opens.elem(sigma(a))).collect();
    let eta = FrameHom::new(frame.clone(), opens.frame.clone(), map)
        .expect("η is a frame homomorphism");
    Spectrum { space, opens, eta }
}

// ---------------------------------------------------------------------------
// Pointwise functions
// ---------------------------------------------------------------------------

/// An extended-real-valued function given pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtRealFn(pub Vec<ExtRat>);

impl ExtRealFn {
    pub fn constant(space: &FiniteSpace, r: Rat) -> ExtRealFn {
        ExtRealFn(vec![ExtRat::Fin(r); space.points()])
    }

    pub fn at(&self, x: usize) -> ExtRat {
        self.0[x]
    }
}

/// Upper Baire operator S: sup over the smallest open neighbourhood.
pub fn baire_upper(space: &FiniteSpace, u: &ExtRealFn) -> ExtRealFn {
    ExtRealFn(
        (0..space.points())
            .map(|x| space.min_nbhd(x).map(|y| u.0[y]).max().unwrap())
            .collect(),
    )
}

/// Lower Baire operator I: inf over the smallest open neighbourhood.
pub fn baire_lower(space: &FiniteSpace, u: &ExtRealFn) -> ExtRealFn {
    ExtRealFn(
        (0..space.points())
            .map(|x| space.min_nbhd(x).map(|y| u.0[y]).min().unwrap())
            .collect(),
    )
}

pub fn is_lsc(space: &FiniteSpace, u: &ExtRealFn) -> bool {
    (0..space.points()).all(|x| space.min_nbhd(x).all(|y| u.0[y] >= u.0[x]))
}

pub fn is_usc(space: &FiniteSpace, u: &ExtRealFn) -> bool {
    (0..space.points()).all(|x| space.min_nbhd(x).all(|y| u.0[y] <= u.0[x]))
}

/// Normal lower semicontinuity: fixed by I∘S.
pub fn is_nlsc(space: &FiniteSpace, u: &ExtRealFn) -> bool {
    baire_lower(space, &baire_upper(space, u)) == *u
}

fn require_nlsc(space: &FiniteSpace, u: &ExtRealFn) -> Result<(), SpaceError> {
    if is_nlsc(space, u) {
        Ok(())
    } else {
        Err(SpaceError::NotNormalLsc)
    }
}

/// f ⊕ g = I(S(f + g)) with extended pointwise addition; the clash
/// ∞ + (−∞) is an error rather than a convention.
pub fn nl_add(
    space: &FiniteSpace,
    u: &ExtRealFn,
    v: &ExtRealFn,
) -> Result<ExtRealFn, SpaceError> {
    require_nlsc(space, u)?;
    require_nlsc(space, v)?;
    let sum = ExtRealFn(
        u.0.iter()
            .zip(&v.0)
            .enumerate()
            .map(|(x, (&a, &b))| a.checked_add(b).ok_or(SpaceError::UndefinedSum(x)))
            .collect::<Result<_, _>>()?,
    );
    Ok(baire_lower(space, &baire_upper(space, &sum)))
}

/// λ ⊙ f = I(S(λ·f)); any rational λ, with λ = 0 giving constant 0.
pub fn nl_scalar(
    space: &FiniteSpace,
    lambda: Rat,
    u: &ExtRealFn,
) -> Result<ExtRealFn, SpaceError> {
    require_nlsc(space, u)?;
    let scaled = ExtRealFn(u.0.iter().map(|&a| ext_scale(lambda, a)).collect());
    Ok(baire_lower(space, &baire_upper(space, &scaled)))
}

fn ext_scale(lambda: Rat, a: ExtRat) -> ExtRat {
    use ExtRat::*;
    if lambda.is_zero() {
        return Fin(Rat::zero());
    }
    match (a, lambda > Rat::zero()) {
        (Fin(r), _) => Fin(r * lambda),
        (PosInf, true) | (NegInf, false) => PosInf,
        _ => NegInf,
    }
}

/// An interval-valued function: a lower semicontinuous lower endpoint and an
/// upper semicontinuous upper endpoint, lower ≤ upper pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalValuedFn {
    pub lower: ExtRealFn,
    pub upper: ExtRealFn,
}

impl IntervalValuedFn {
    pub fn new(
        space: &FiniteSpace,
        lower: ExtRealFn,
        upper: ExtRealFn,
    ) -> Result<Self, SpaceError> {
        if lower.0.len() != space.points() || upper.0.len() != space.points() {
            return Err(SpaceError::LengthMismatch);
        }
        if let Some(x) = (0..space.points()).find(|&x| lower.0[x] > upper.0[x]) {
            return Err(SpaceError::EndpointOrder(x));
        }
        if let Some(x) =
            (0..space.points()).find(|&x| space.min_nbhd(x).any(|y| lower.0[y] < lower.0[x]))
        {
            return Err(SpaceError::NotSemicontinuous(x));
        }
        if let Some(x) =
            (0..space.points()).find(|&x| space.min_nbhd(x).any(|y| upper.0[y] > upper.0[x]))
        {
            return Err(SpaceError::NotSemicontinuous(x));
        }
        Ok(IntervalValuedFn { lower, upper })
    }

    /// Pointwise order of Eq.-style comparisons: compare lower endpoints.
    pub fn leq_lower(&self, other: &IntervalValuedFn) -> bool {
        self.lower.0.iter().zip(&other.lower.0).all(|(a, b)| a <= b)
    }

    /// Information order: intervals shrink.
    pub fn info_leq(&self, other: &IntervalValuedFn) -> bool {
        self.lower.0.iter().zip(&other.lower.0).all(|(a, b)| a <= b)
            && self.upper.0.iter().zip(&other.upper.0).all(|(a, b)| b <= a)
    }
}

/// Points where both endpoints are finite form a dense set.
pub fn nearly_finite_spatial(space: &FiniteSpace, f: &IntervalValuedFn) -> bool {
    let finite = (0..space.points())
        .filter(|&x| f.lower.0[x].is_finite() && f.upper.0[x].is_finite())
        .fold(0u32, |acc, x| acc | (1 << x));
    space.is_dense(finite)
}

// ---------------------------------------------------------------------------
// Ψ: frame-side functions ↔ pointwise interval functions
// ---------------------------------------------------------------------------

/// Ψ(h)(x) = [⋁{r : x ∈ h(r,—)}, ⋀{r : x ∈ h(—,r)}].
pub fn psi(h: &PartialRealFn, ox: &OpenFrame) -> Result<IntervalValuedFn, SpaceError> {
    if *h.frame() != ox.frame {
        return Err(SpaceError::FrameMismatch);
    }
    let n = ox.masks.last().map_or(0, |m| m.count_ones() as usize);
    let lower = (0..n).map(|x| sup_membership(h.up(), ox, x)).collect();
    let upper = (0..n).map(|x| inf_membership(h.down(), ox, x)).collect();
    // r1 forces lower ≤ upper; semicontinuity is structural — but validate
    // anyway so corrupted inputs cannot leak through
    let space = space_of(ox);
    IntervalValuedFn::new(&space, ExtRealFn(lower), ExtRealFn(upper))
}

fn space_of(ox: &OpenFrame) -> FiniteSpace {
    let n = ox.masks.last().map_or(0, |m| m.count_ones() as usize);
    FiniteSpace::new(n, &ox.masks, Vec::new()).expect("open frame masks form a topology")
}

/// sup of the down-set {r : x ∈ σ(r)} for an antitone right-continuous σ.
fn sup_membership(sigma: &StepMap, ox: &OpenFrame, x: usize) -> ExtRat {
    debug_assert_eq!(sigma.orientation(), Orientation::Antitone);
    // membership holds on (−∞, cutoff): find the first segment losing x
    let values = sigma.values();
    let bps = sigma.breakpoints();
    if ox.contains_point(*values.last().unwrap(), x) {
        return ExtRat::PosInf;
    }
    for (i, &v) in values.iter().enumerate().rev() {
        if ox.contains_point(v, x) {
            // x present on [.., bps[i]) and absent after
            return ExtRat::Fin(bps[i]);
        }
    }
    ExtRat::NegInf
}

/// inf of the up-set {r : x ∈ δ(r)} for an isotone left-continuous δ.
fn inf_membership(delta: &StepMap, ox: &OpenFrame, x: usize) -> ExtRat {
    debug_assert_eq!(delta.orientation(), Orientation::Isotone);
    let values = delta.values();
    let bps = delta.breakpoints();
    if ox.contains_point(values[0], x) {
        return ExtRat::NegInf;
    }
    for (i, &v) in values.iter().enumerate() {
        if ox.contains_point(v, x) {
            // x present on (bps[i-1], ∞) and absent before
            return ExtRat::Fin(bps[i - 1]);
        }
    }
    ExtRat::PosInf
}

/// Ψ⁻¹: h(p,—) = {x : lower(x) > p}, h(—,q) = {x : upper(x) < q}. Requires
/// all finite endpoints rational, which the representation guarantees.
pub fn psi_inverse(
    f: &IntervalValuedFn,
    ox: &OpenFrame,
) -> Result<PartialRealFn, SpaceError> {
    let n = f.lower.0.len();
    let mut cuts: Vec<Rat> = f
        .lower
        .0
        .iter()
        .chain(&f.upper.0)
        .filter_map(|e| e.finite())
        .collect();
    cuts.sort();
    cuts.dedup();
    let mask_of = |pred: &dyn Fn(usize) -> bool| -> u32 {
        (0..n).filter(|&x| pred(x)).fold(0, |acc, x| acc | (1 << x))
    };
    let up = StepMap::from_fn(&ox.frame, Orientation::Antitone, &cuts, |p| {
        ox.elem(mask_of(&|x| f.lower.0[x] > ExtRat::Fin(p)))
    })
    .expect("lower endpoints give an antitone family");
    let down = StepMap::from_fn(&ox.frame, Orientation::Isotone, &cuts, |q| {
        ox.elem(mask_of(&|x| f.upper.0[x] < ExtRat::Fin(q)))
    })
    .expect("upper endpoints give an isotone family");
    PartialRealFn::new(ox.frame.clone(), up, down).map_err(|_| SpaceError::EndpointOrder(0))
}

// ---------------------------------------------------------------------------
// Π: nearly finite Hausdorff interval functions ↔ normal lsc functions
// ---------------------------------------------------------------------------

/// Π: drop to the lower endpoint. Requires the interval function to be
/// Hausdorff in the pointwise sense (upper = S(lower), lower normal) and
/// nearly finite.
pub fn pi(space: &FiniteSpace, f: &IntervalValuedFn) -> Result<ExtRealFn, SpaceError> {
    if !nearly_finite_spatial(space, f) {
        return Err(SpaceError::NotNearlyFinite);
    }
    if f.upper != baire_upper(space, &f.lower) || !is_nlsc(space, &f.lower) {
        return Err(SpaceError::NotHausdorff);
    }
    Ok(f.lower.clone())
}

/// Π⁻¹: complete a normal lsc function to the interval pair (u, S(u)).
pub fn pi_inverse(space: &FiniteSpace, u: &ExtRealFn) -> Result<IntervalValuedFn, SpaceError> {
    require_nlsc(space, u)?;
    let f = IntervalValuedFn::new(space, u.clone(), baire_upper(space, u))?;
    if !nearly_finite_spatial(space, &f) {
        return Err(SpaceError::NotNearlyFinite);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{boolean, chain};
    use crate::rat::rat;
    use crate::realfn::RealFn;

    fn fin(n: i64, d: i64) -> ExtRat {
        ExtRat::Fin(rat(n, d))
    }

    #[test]
    fn sierpinski_opens_are_three_chain() {
        let s = FiniteSpace::sierpinski();
        let ox = s.open_frame();
        assert_eq!(ox.frame.canonical_key(), chain(3).canonical_key());
    }

    #[test]
    fn discrete_two_point_opens_are_boolean() {
        let s = FiniteSpace::discrete(2);
        let ox = s.open_frame();
        assert_eq!(ox.frame.size(), 4);
        assert!(ox.frame.classify().boolean.is_none());
    }

    #[test]
    fn indiscrete_opens_are_two_chain() {
        let s = FiniteSpace::new(2, &[0b00, 0b11], Vec::new()).unwrap();
        assert_eq!(s.open_frame().frame.canonical_key(), chain(2).canonical_key());
    }

    #[test]
    fn non_topology_rejected() {
        // {∅, {0}, {1}, X missing unions?} — union {0}∪{1} = X present, so
        // remove X to break closure at validation
        assert_eq!(
            FiniteSpace::new(2, &[0b00, 0b01, 0b10], Vec::new()).unwrap_err(),
            SpaceError::MissingEmptyOrFull
        );
    }

    #[test]
    fn spectrum_of_boolean_is_discrete() {
        let fr = Arc::new(boolean(2));
        let sp = spectrum(&fr);
        assert_eq!(sp.space.points(), 2);
        assert!(sp.space.is_discrete());
        assert!(sp.eta.is_iso());
    }

    #[test]
    fn spectrum_of_three_chain_is_sierpinski() {
        let fr = Arc::new(chain(3));
        let sp = spectrum(&fr);
        assert_eq!(sp.space.points(), 2);
        assert!(!sp.space.is_discrete());
        assert!(sp.eta.is_iso());
    }

    #[test]
    fn baire_on_discrete_is_identity() {
        let s = FiniteSpace::discrete(3);
        let u = ExtRealFn(vec![fin(1, 1), fin(-1, 2), ExtRat::PosInf]);
        assert_eq!(baire_upper(&s, &u), u);
        assert_eq!(baire_lower(&s, &u), u);
        assert!(is_nlsc(&s, &u));
    }

    #[test]
    fn sierpinski_lsc_not_normal() {
        // u(x)=1 on the open point, u(y)=0 on the closed point: lsc but
        // S(u) ≡ 1, so I(S(u)) ≡ 1 ≠ u
        let s = FiniteSpace::sierpinski();
        let u = ExtRealFn(vec![fin(1, 1), fin(0, 1)]);
        assert!(is_lsc(&s, &u));
        assert_eq!(baire_upper(&s, &u), ExtRealFn::constant(&s, rat(1, 1)));
        assert!(!is_nlsc(&s, &u));
    }

    #[test]
    fn baire_operator_laws() {
        let s = FiniteSpace::sierpinski();
        for u in [
            ExtRealFn(vec![fin(1, 1), fin(0, 1)]),
            ExtRealFn(vec![fin(0, 1), fin(2, 1)]),
            ExtRealFn(vec![ExtRat::NegInf, fin(0, 1)]),
        ] {
            let su = baire_upper(&s, &u);
            let iu = baire_lower(&s, &u);
            assert_eq!(baire_upper(&s, &su), su, "S idempotent");
            assert_eq!(baire_lower(&s, &iu), iu, "I idempotent");
            assert!(u.0.iter().zip(&su.0).all(|(a, b)| a <= b), "u ≤ S(u)");
            assert!(iu.0.iter().zip(&u.0).all(|(a, b)| a <= b), "I(u) ≤ u");
            let isu = baire_lower(&s, &su);
            assert_eq!(
                baire_lower(&s, &baire_upper(&s, &isu)),
                isu,
                "IS idempotent"
            );
        }
    }

    #[test]
    fn nl_add_constants() {
        let s = FiniteSpace::sierpinski();
        let a = ExtRealFn::constant(&s, rat(1, 2));
        let b = ExtRealFn::constant(&s, rat(1, 3));
        assert_eq!(
            nl_add(&s, &a, &b).unwrap(),
            ExtRealFn::constant(&s, rat(5, 6))
        );
    }

    #[test]
    fn nl_scalar_zero() {
        let s = FiniteSpace::discrete(2);
        let u = ExtRealFn(vec![fin(3, 1), ExtRat::PosInf]);
        assert_eq!(
            nl_scalar(&s, rat(0, 1), &u).unwrap(),
            ExtRealFn::constant(&s, rat(0, 1))
        );
    }

    #[test]
    fn psi_of_constant() {
        let s = FiniteSpace::sierpinski();
        let ox = s.open_frame();
        let h = PartialRealFn::from_realfn(&RealFn::constant(&ox.frame, rat(2, 3)));
        let f = psi(&h, &ox).unwrap();
        assert_eq!(f.lower, ExtRealFn::constant(&s, rat(2, 3)));
        assert_eq!(f.upper, ExtRealFn::constant(&s, rat(2, 3)));
    }

    #[test]
    fn psi_round_trip() {
        let s = FiniteSpace::sierpinski();
        let ox = s.open_frame();
        // χ_{{x}} relative to the open point: up jumps through the middle
        // element of the 3-chain of opens
        let mid = ox.elem(0b01);
        let h = PartialRealFn::from_realfn(
            &RealFn::new(
                ox.frame.clone(),
                StepMap::new(
                    &ox.frame,
                    Orientation::Antitone,
                    vec![rat(0, 1), rat(1, 1)],
                    vec![ox.frame.top(), mid, ox.frame.bottom()],
                )
                .unwrap(),
                StepMap::new(
                    &ox.frame,
                    Orientation::Isotone,
                    vec![rat(0, 1), rat(1, 1)],
                    vec![ox.frame.bottom(), ox.frame.bottom(), ox.frame.top()],
                )
                .unwrap(),
                crate::realfn::FnClass::ICExtended,
            )
            .unwrap(),
        );
        let f = psi(&h, &ox).unwrap();
        assert_eq!(f.lower.at(0), fin(1, 1)); // the open point carries 1
        assert_eq!(f.lower.at(1), fin(0, 1));
        assert_eq!(psi_inverse(&f, &ox).unwrap(), h);
    }

    #[test]
    fn psi_inverse_round_trip() {
        let s = FiniteSpace::sierpinski();
        let ox = s.open_frame();
        let f = IntervalValuedFn::new(
            &s,
            ExtRealFn(vec![fin(1, 1), fin(0, 1)]),
            ExtRealFn(vec![fin(1, 1), fin(1, 1)]),
        )
        .unwrap();
        let h = psi_inverse(&f, &ox).unwrap();
        assert_eq!(psi(&h, &ox).unwrap(), f);
    }

    #[test]
    fn psi_intertwines_info_order() {
        let s = FiniteSpace::sierpinski();
        let ox = s.open_frame();
        let c = |r| PartialRealFn::from_realfn(&RealFn::constant(&ox.frame, r));
        let f = c(rat(0, 1));
        let g = c(rat(1, 1));
        assert_eq!(
            f.info_leq(&g).unwrap(),
            psi(&f, &ox).unwrap().info_leq(&psi(&g, &ox).unwrap())
        );
        assert!(psi(&f, &ox).unwrap().leq_lower(&psi(&g, &ox).unwrap()));
    }

    #[test]
    fn pi_round_trip() {
        let s = FiniteSpace::sierpinski();
        // nlsc: value at the closed point is the min over the space of the
        // upper envelope; constant functions and this step qualify
        let u = ExtRealFn(vec![fin(2, 1), fin(2, 1)]);
        let f = pi_inverse(&s, &u).unwrap();
        assert_eq!(pi(&s, &f).unwrap(), u);
    }

    #[test]
    fn pi_restores_upper_via_baire() {
        let s = FiniteSpace::sierpinski();
        let u = ExtRealFn(vec![fin(1, 1), fin(1, 1)]);
        let f = pi_inverse(&s, &u).unwrap();
        assert_eq!(f.upper, baire_upper(&s, &u));
    }

    #[test]
    fn nearly_finite_dense_open() {
        let s = FiniteSpace::sierpinski();
        // finite exactly on the open dense point {x}
        let f = IntervalValuedFn::new(
            &s,
            ExtRealFn(vec![fin(0, 1), ExtRat::NegInf]),
            ExtRealFn(vec![fin(0, 1), ExtRat::PosInf]),
        )
        .unwrap();
        assert!(nearly_finite_spatial(&s, &f));
        let g = IntervalValuedFn::new(
            &s,
            ExtRealFn(vec![ExtRat::NegInf; 2]),
            ExtRealFn(vec![ExtRat::PosInf; 2]),
        )
        .unwrap();
        assert!(!nearly_finite_spatial(&s, &g));
    }

    #[test]
    fn interval_fn_validation() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(
            IntervalValuedFn::new(
                &s,
                ExtRealFn(vec![fin(1, 1), fin(0, 1)]),
                ExtRealFn(vec![fin(0, 1), fin(0, 1)]),
            )
            .unwrap_err(),
            SpaceError::EndpointOrder(0)
        );
        // lower must be lsc: smaller on the open point than at the closed
        // point is forbidden
        assert_eq!(
            IntervalValuedFn::new(
                &s,
                ExtRealFn(vec![fin(0, 1), fin(1, 1)]),
                ExtRealFn(vec![fin(2, 1), fin(2, 1)]),
            )
            .unwrap_err(),
            SpaceError::NotSemicontinuous(1)
        );
    }
}
