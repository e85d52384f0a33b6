//! Finite-dimensional Archimedean Riesz spaces: ℚ^n with coordinatewise
//! order, bands as coordinate supports, the band scale σ_f, and the
//! embedding m into functions on the Boolean frame 2^n.
//!
//! The frame 2^n is always the bitmask frame produced by
//! [`crate::frame::boolean`], so a frame element *is* the support mask.

use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::frame::{boolean, Elem, FrameRef};
use crate::rat::{ExtRat, Rat};
use crate::realfn::{FnError, RealFn, Scale};
use crate::step::{Orientation, StepMap};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RieszError {
    #[error("vectors have different dimensions")]
    DimensionMismatch,
    #[error("element is not positive")]
    NotPositive,
    #[error("element is not a weak unit")]
    NotWeakUnit,
    #[error("function must be nonnegative and nonzero")]
    GNotPositive,
    #[error(transparent)]
    Fn(#[from] FnError),
}

/// A vector of the Riesz space ℚ^n; all lattice operations coordinatewise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RieszVec(pub Vec<Rat>);

impl RieszVec {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn zero(n: usize) -> RieszVec {
        RieszVec(vec![Rat::zero(); n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &RieszVec) -> RieszVec {
        RieszVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scalar(&self, lambda: Rat) -> RieszVec {
        RieszVec(self.0.iter().map(|a| a * lambda).collect())
    }

    pub fn join(&self, other: &RieszVec) -> RieszVec {
        RieszVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn meet(&self, other: &RieszVec) -> RieszVec {
        RieszVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn abs(&self) -> RieszVec {
        RieszVec(self.0.iter().map(|a| if *a < Rat::zero() { -a } else { *a }).collect())
    }

    pub fn pos_part(&self) -> RieszVec {
        RieszVec(self.0.iter().map(|a| (*a).max(Rat::zero())).collect())
    }

    pub fn leq(&self, other: &RieszVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// A band of ℚ^n: the vectors supported on a coordinate subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandFD {
    pub dim: usize,
    pub support: u32,
}

/// [f]: in finite dimension the band generated by f is exactly the vectors
/// supported where f is.
pub fn band_generated(f: &RieszVec) -> BandFD {
    let support = f
        .0
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(0u32, |acc, (i, _)| acc | (1 << i));
    BandFD { dim: f.dim(), support }
}

/// The band-membership criterion taken literally: g ∈ [f] iff the canonical
/// dominated family f_k = k|f| ∧ |g| has |g| as its supremum. The family
/// stabilizes after finitely many steps in finite dimension; this is the
/// independent oracle for [`band_generated`].
pub fn band_member_oracle(g: &RieszVec, f: &RieszVec) -> bool {
    let (af, ag) = (f.abs(), g.abs());
    let mut k = Rat::from_integer(1);
    let mut prev = af.scalar(k).meet(&ag);
    loop {
        k += Rat::from_integer(1);
        let next = af.scalar(k).meet(&ag);
        if next == prev {
            return prev == ag;
        }
        prev = next;
    }
}

/// e is a weak unit iff e ∧ |f| = 0 forces f = 0; coordinatewise this means
/// every coordinate of e is strictly positive.
pub fn is_weak_unit(e: &RieszVec) -> Result<bool, RieszError> {
    if e.is_zero() || !RieszVec::zero(e.dim()).leq(e) {
        return Err(RieszError::NotPositive);
    }
    Ok(e.0.iter().all(|c| *c > Rat::zero()))
}

fn require_weak_unit(e: &RieszVec) -> Result<(), RieszError> {
    if is_weak_unit(e)? {
        Ok(())
    } else {
        Err(RieszError::NotWeakUnit)
    }
}

/// The band frame 2^n as a bitmask frame.
pub fn band_frame(n: usize) -> FrameRef {
    Arc::new(boolean(n as u32))
}

/// σ_f(p) = [(f − pe)⁺] = {i : f_i > p·e_i}, a scale over 2^n with
/// breakpoints among the ratios f_i/e_i.
pub fn band_scale(f: &RieszVec, e: &RieszVec) -> Result<Scale, RieszError> {
    require_weak_unit(e)?;
    if f.dim() != e.dim() {
        return Err(RieszError::DimensionMismatch);
    }
    let frame = band_frame(f.dim());
    let ratios: Vec<Rat> = f.0.iter().zip(&e.0).map(|(fi, ei)| fi / ei).collect();
    let sigma = StepMap::from_fn(&frame, Orientation::Antitone, &ratios, |p| {
        ratios
            .iter()
            .enumerate()
            .filter(|(_, r)| **r > p)
            .fold(0 as Elem, |acc, (i, _)| acc | (1 << i))
    })
    .expect("band supports shrink as p grows");
    Ok(Scale::new(frame, sigma)?)
}

/// The embedding m: ℚ^n → C(2^n), f ↦ the function determined by σ_f.
pub fn m_embed(f: &RieszVec, e: &RieszVec) -> Result<RealFn, RieszError> {
    Ok(band_scale(f, e)?.determined_fn())
}

/// Evaluate a function on the bitmask frame 2^n at atom i: the supremum of
/// {r : atom ≤ g(r,—)}. For class-C functions this is the point value of the
/// corresponding function on the discrete n-point space.
pub fn atom_value(g: &RealFn, atom: usize) -> ExtRat {
    let bit = 1 << atom;
    let values = g.up().values();
    let bps = g.up().breakpoints();
    if values.last().unwrap() & bit != 0 {
        return ExtRat::PosInf;
    }
    for (i, &v) in values.iter().enumerate().rev() {
        if v & bit != 0 {
            return ExtRat::Fin(bps[i]);
        }
    }
    ExtRat::NegInf
}

/// Recover the vector from a class-C function on 2^n by atom evaluation.
pub fn vector_of(g: &RealFn, e: &RieszVec) -> Result<RieszVec, RieszError> {
    require_weak_unit(e)?;
    let coords = (0..e.dim())
        .map(|i| match atom_value(g, i) {
            ExtRat::Fin(r) => Ok(r * e.0[i]),
            _ => Err(RieszError::GNotPositive),
        })
        .collect::<Result<_, _>>()?;
    Ok(RieszVec(coords))
}

/// For 0 ≤ g ≠ 0 on 2^n, produce nonzero f and h with
/// 0 ≤ m(f) ≤ g ≤ m(h): f is p·e on a support where g exceeds p, h is the
/// atomwise evaluation of g.
pub fn sandwich_check(
    g: &RealFn,
    e: &RieszVec,
) -> Result<(RieszVec, RieszVec), RieszError> {
    require_weak_unit(e)?;
    let frame = g.frame();
    let zero = RealFn::constant(frame, Rat::zero());
    if !zero.leq(g)? || *g == zero {
        return Err(RieszError::GNotPositive);
    }
    // some strictly positive level p still has nonempty support; besides the
    // probe points, half of the first positive breakpoint covers a constancy
    // segment that straddles zero
    let mut levels: Vec<Rat> = g
        .up()
        .probes()
        .into_iter()
        .filter(|p| *p > Rat::zero())
        .collect();
    if let Some(&b) = g.up().breakpoints().iter().find(|b| **b > Rat::zero()) {
        levels.push(b / Rat::from_integer(2));
    }
    levels.sort();
    let (p, a) = levels
        .into_iter()
        .map(|p| (p, g.up_at(p)))
        .find(|&(_, a)| a != frame.bottom())
        .expect("a nonzero nonnegative function exceeds some positive level");
    let f = RieszVec(
        (0..e.dim())
            .map(|i| if a & (1 << i) != 0 { p * e.0[i] } else { Rat::zero() })
            .collect(),
    );
    let h = vector_of(g, e)?;
    let (mf, mh) = (m_embed(&f, e)?, m_embed(&h, e)?);
    assert!(!f.is_zero());
    assert!(zero.leq(&mf)? && mf.leq(g)? && g.leq(&mh)?);
    Ok((f, h))
}

/// Bands of the coordinate model of C(2^n) against the frame 2^n: supports
/// biject with frame elements, and generation/join/meet laws hold on
/// representative vectors.
pub fn band_correspondence_check(n: usize) -> bool {
    assert!(n <= 5);
    let frame = band_frame(n);
    let rep = |mask: u32| -> RieszVec {
        RieszVec(
            (0..n)
                .map(|i| {
                    if mask & (1 << i) != 0 {
                        Rat::from_integer(i as i64 + 1)
                    } else {
                        Rat::zero()
                    }
                })
                .collect(),
        )
    };
    for a in frame.elements() {
        let fa = rep(a as u32);
        if band_generated(&fa).support != a as u32 {
            return false;
        }
        for b in frame.elements() {
            let fb = rep(b as u32);
            // [f]∨[g] = [|f|+|g|], [f]∧[g] = [|f|∧|g|] mirror the frame ops
            let join = band_generated(&fa.abs().add(&fb.abs())).support;
            let meet = band_generated(&fa.abs().meet(&fb.abs())).support;
            if join != frame.join(a, b) as u32 || meet != frame.meet(a, b) as u32 {
                return false;
            }
        }
    }
    true
}
