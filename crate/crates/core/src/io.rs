//! File formats: frames, functions, spaces and vectors as JSON, with exact
//! "num/den" rationals throughout.

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frame::{FiniteFrame, FrameError};
use crate::rat::Rat;
use crate::realfn::{FnClass, FnError, RealFn};
use crate::spatial::{FiniteSpace, SpaceError};
use crate::step::{Orientation, StepError, StepMap};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational literal {0:?}")]
    BadRational(String),
    #[error("unknown function class {0:?}")]
    BadClass(String),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Step(#[from] StepError),
    #[error(transparent)]
    Fn(#[from] FnError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

pub fn rat_to_string(r: Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_str(s: &str) -> Result<Rat, IoError> {
    let bad = || IoError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

// ---------------------------------------------------------------------------
// Frames
// ---------------------------------------------------------------------------

/// `{"elements": [names], "leq": [[i,j], ...]}`; reflexive pairs optional,
/// transitive closure applied on load.
#[derive(Debug, Serialize, Deserialize)]
pub struct FrameFile {
    pub elements: Vec<String>,
    pub leq: Vec<(usize, usize)>,
}

impl FrameFile {
    pub fn from_frame(frame: &FiniteFrame) -> FrameFile {
        let mut leq = Vec::new();
        for a in frame.elements() {
            for b in frame.elements() {
                if a != b && frame.leq(a, b) {
                    leq.push((a, b));
                }
            }
        }
        FrameFile { elements: frame.names().to_vec(), leq }
    }

    pub fn to_frame(&self) -> Result<FiniteFrame, IoError> {
        Ok(FiniteFrame::from_pairs(
            self.elements.len(),
            &self.leq,
            self.elements.clone(),
        )?)
    }
}

// ---------------------------------------------------------------------------
// Functions
// ---------------------------------------------------------------------------

fn step_to_file(s: &StepMap) -> (Vec<String>, Vec<usize>) {
    (
        s.breakpoints().iter().map(|&b| rat_to_string(b)).collect(),
        s.values().to_vec(),
    )
}

fn step_from_file(
    frame: &FiniteFrame,
    orientation: Orientation,
    (bps, vals): &(Vec<String>, Vec<usize>),
) -> Result<StepMap, IoError> {
    let bps = bps.iter().map(|s| rat_from_str(s)).collect::<Result<_, _>>()?;
    Ok(StepMap::new(frame, orientation, bps, vals.clone())?)
}

/// Function with its frame inlined: `{"frame": ..., "up": [[bps],[vals]],
/// "down": [[bps],[vals]], "class": "C" | "C_extended" | "IC_extended"}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct FnFile {
    pub frame: FrameFile,
    pub up: (Vec<String>, Vec<usize>),
    pub down: (Vec<String>, Vec<usize>),
    pub class: String,
}

impl FnFile {
    pub fn from_fn(f: &RealFn) -> FnFile {
        FnFile {
            frame: FrameFile::from_frame(f.frame()),
            up: step_to_file(f.up()),
            down: step_to_file(f.down()),
            class: match f.class() {
                FnClass::C => "C",
                FnClass::CExtended => "C_extended",
                FnClass::ICExtended => "IC_extended",
            }
            .to_string(),
        }
    }

    pub fn to_fn(&self) -> Result<RealFn, IoError> {
        let frame = std::sync::Arc::new(self.frame.to_frame()?);
        let up = step_from_file(&frame, Orientation::Antitone, &self.up)?;
        let down = step_from_file(&frame, Orientation::Isotone, &self.down)?;
        let class = match self.class.as_str() {
            "C" => FnClass::C,
            "C_extended" => FnClass::CExtended,
            "IC_extended" => FnClass::ICExtended,
            other => return Err(IoError::BadClass(other.to_string())),
        };
        Ok(RealFn::new(frame, up, down, class)?)
    }
}

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

/// `{"points": [names], "opens": [[point indices], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct SpaceFile {
    pub points: Vec<String>,
    pub opens: Vec<Vec<usize>>,
}

impl SpaceFile {
    pub fn from_space(space: &FiniteSpace) -> SpaceFile {
        SpaceFile {
            points: space.names().to_vec(),
            opens: space
                .opens()
                .iter()
                .map(|&o| (0..space.points()).filter(|x| o & (1 << x) != 0).collect())
                .collect(),
        }
    }

    pub fn to_space(&self) -> Result<FiniteSpace, IoError> {
        let masks: Vec<u32> = self
            .opens
            .iter()
            .map(|o| o.iter().fold(0u32, |acc, &x| acc | (1 << x)))
            .collect();
        Ok(FiniteSpace::new(
            self.points.len(),
            &masks,
            self.points.clone(),
        )?)
    }
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// `{"dim": n, "coords": ["num/den", ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct VectorFile {
    pub dim: usize,
    pub coords: Vec<String>,
}

impl VectorFile {
    pub fn from_vec(v: &crate::riesz::RieszVec) -> VectorFile {
        VectorFile {
            dim: v.dim(),
            coords: v.0.iter().map(|&c| rat_to_string(c)).collect(),
        }
    }

    pub fn to_vec(&self) -> Result<crate::riesz::RieszVec, IoError> {
        Ok(crate::riesz::RieszVec(
            self.coords
                .iter()
                .map(|s| rat_from_str(s))
                .collect::<Result<_, _>>()?,
        ))
    }
}

/// The per-predicate classification report with failure witnesses.
pub fn classification_json(frame: &FiniteFrame) -> serde_json::Value {
    let records: Vec<serde_json::Value> = frame
        .classify()
        .flags()
        .into_iter()
        .map(|(name, holds, witness)| {
            serde_json::json!({
                "predicate": name,
                "holds": holds,
                "witness": witness.map(|w| frame.name(w).to_string()),
            })
        })
        .collect();
    serde_json::Value::Array(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::chain;
    use crate::rat::rat;
    use std::sync::Arc;

    #[test]
    fn rational_round_trip() {
        for r in [rat(0, 1), rat(-7, 3), rat(5, 1), rat(22, 7)] {
            assert_eq!(rat_from_str(&rat_to_string(r)).unwrap(), r);
        }
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn frame_file_round_trip() {
        let f = chain(4);
        let file = FrameFile::from_frame(&f);
        let back = file.to_frame().unwrap();
        assert_eq!(back, f);
        // through json text too
        let text = serde_json::to_string(&file).unwrap();
        let parsed: FrameFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.to_frame().unwrap(), f);
    }

    #[test]
    fn fn_file_round_trip() {
        let frame = Arc::new(chain(3));
        let f = RealFn::constant(&frame, rat(-3, 2));
        let file = FnFile::from_fn(&f);
        assert_eq!(file.to_fn().unwrap(), f);
        assert_eq!(file.class, "C");
    }

    #[test]
    fn space_file_round_trip() {
        let s = FiniteSpace::sierpinski();
        let file = SpaceFile::from_space(&s);
        assert_eq!(file.to_space().unwrap(), s);
    }

    #[test]
    fn vector_file_round_trip() {
        let v = crate::riesz::RieszVec(vec![rat(1, 2), rat(-3, 1)]);
        let file = VectorFile::from_vec(&v);
        assert_eq!(file.to_vec().unwrap(), v);
    }

    #[test]
    fn classification_report_shape() {
        let j = classification_json(&chain(3));
        let arr = j.as_array().unwrap();
        assert!(arr.iter().any(|r| r["predicate"] == "regular" && r["holds"] == false));
        assert!(arr
            .iter()
            .any(|r| r["predicate"] == "extremally_disconnected" && r["holds"] == true));
    }
}
