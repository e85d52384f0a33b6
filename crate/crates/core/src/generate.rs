//! Deterministic instance generators and exhaustive small-case enumerators.
//!
//! Random frames are built as downset lattices of random posets, so the
//! frame law holds by construction. Enumeration covers all frames up to
//! isomorphism below a size bound (via labeled posets and canonical keys)
//! and all topologies on a few points (by brute force).

use std::collections::HashSet;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::frame::{Elem, FiniteFrame, FrameRef};
use crate::intervalfn::PartialRealFn;
use crate::rat::Rat;
use crate::realfn::{RealFn, Scale};
use crate::spatial::FiniteSpace;
use crate::step::{Orientation, StepMap};

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Posets and their downset frames
// ---------------------------------------------------------------------------

/// A random partial order on `k` labeled points: random arrows from lower to
/// higher labels, reflexive-transitive closure.
fn random_poset(rng: &mut ChaCha8Rng, k: usize) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; k]; k];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for i in 0..k {
        for j in i + 1..k {
            if rng.gen_bool(0.5) {
                leq[i][j] = true;
            }
        }
    }
    transitive_close(&mut leq);
    leq
}

fn transitive_close(leq: &mut [Vec<bool>]) {
    let k = leq.len();
    for m in 0..k {
        for i in 0..k {
            for j in 0..k {
                if leq[i][m] && leq[m][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
}

/// The frame of downsets of a poset, ordered by inclusion.
pub fn downset_frame(poset: &[Vec<bool>]) -> FiniteFrame {
    let k = poset.len();
    let mut downsets: Vec<u32> = (0u32..1 << k)
        .filter(|&s| {
            (0..k).all(|x| {
                s & (1 << x) == 0 || (0..k).all(|y| !poset[y][x] || s & (1 << y) != 0)
            })
        })
        .collect();
    downsets.sort_unstable();
    let m = downsets.len();
    let mut leq = vec![vec![false; m]; m];
    for (i, &a) in downsets.iter().enumerate() {
        for (j, &b) in downsets.iter().enumerate() {
            leq[i][j] = a & b == a;
        }
    }
    FiniteFrame::build(leq).expect("downset lattices are frames")
}

/// Deterministic random frame: the downset lattice of a random poset on
/// `poset_size` points.
pub fn generate_frame(seed: u64, poset_size: usize) -> FiniteFrame {
    downset_frame(&random_poset(&mut rng_for(seed), poset_size))
}

/// A random frame with at most `max_elems` elements, drawn from the given
/// rng stream; retries smaller posets until the bound is met.
pub fn random_frame(rng: &mut ChaCha8Rng, max_elems: usize) -> FrameRef {
    loop {
        let k = rng.gen_range(1..=4);
        let frame = downset_frame(&random_poset(rng, k));
        if frame.size() <= max_elems {
            return Arc::new(frame);
        }
    }
}

/// Every partial order on `k` labeled points (up to relabeling each poset
/// appears at least once, since every finite poset has a linear extension).
fn labeled_posets(k: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> =
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for choice in 0u32..1 << pairs.len() {
        let mut leq = vec![vec![false; k]; k];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if choice & (1 << b) != 0 {
                leq[i][j] = true;
            }
        }
        transitive_close(&mut leq);
        if seen.insert(leq.clone()) {
            out.push(leq);
        }
    }
    out
}

/// All frames with at most `max_size` elements, one per isomorphism class.
/// Complete for `max_size` ≤ 6: such a frame is the downset lattice of its
/// join-irreducibles, of which there are at most 5.
pub fn enumerate_frames(max_size: usize) -> Vec<FrameRef> {
    assert!(max_size <= 6, "enumeration is only complete below 7 elements");
    let mut out: Vec<FrameRef> = Vec::new();
    let mut keys = HashSet::new();
    for k in 0..=5 {
        for poset in labeled_posets(k) {
            let frame = downset_frame(&poset);
            if frame.size() <= max_size && keys.insert(frame.canonical_key()) {
                out.push(Arc::new(frame));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Topologies
// ---------------------------------------------------------------------------

/// Every topology on `n` labeled points, by brute force over set families.
pub fn enumerate_topologies(n: usize) -> Vec<FiniteSpace> {
    assert!(n <= 4, "family enumeration explodes beyond 4 points");
    let full: u32 = (1 << n) - 1;
    let inner: Vec<u32> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << inner.len() {
        let mut opens = vec![0, full];
        for (b, &s) in inner.iter().enumerate() {
            if choice & (1 << b) != 0 {
                opens.push(s);
            }
        }
        if let Ok(space) = FiniteSpace::new(n, &opens, Vec::new()) {
            out.push(space);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Random functions
// ---------------------------------------------------------------------------

fn random_subset(rng: &mut ChaCha8Rng, grid: &[Rat]) -> Vec<Rat> {
    let mut bps: Vec<Rat> = grid.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
    bps.sort();
    bps.dedup();
    bps
}

/// A random finite continuous function: a random scale over a random subset
/// of the grid, with complemented values descending from top to bottom.
pub fn random_realfn(rng: &mut ChaCha8Rng, frame: &FrameRef, grid: &[Rat]) -> RealFn {
    let complemented: Vec<Elem> =
        frame.elements().filter(|&a| frame.is_complemented(a)).collect();
    let bps = random_subset(rng, grid);
    let mut values = vec![frame.top()];
    for i in 0..bps.len() {
        let prev = *values.last().unwrap();
        if i + 1 == bps.len() {
            values.push(frame.bottom());
        } else {
            let below: Vec<Elem> = complemented
                .iter()
                .copied()
                .filter(|&a| frame.leq(a, prev))
                .collect();
            values.push(below[rng.gen_range(0..below.len())]);
        }
    }
    if bps.is_empty() {
        // no breakpoints would mean the constant-top scale; fall back to 0
        return RealFn::constant(frame, Rat::from_integer(0));
    }
    let sigma = StepMap::new(frame, Orientation::Antitone, bps, values)
        .expect("descending complemented values form a scale");
    Scale::new(frame.clone(), sigma)
        .expect("values chosen complemented")
        .determined_fn()
}

/// A random nonnegative finite continuous function.
pub fn random_nonneg_realfn(rng: &mut ChaCha8Rng, frame: &FrameRef, grid: &[Rat]) -> RealFn {
    let f = random_realfn(rng, frame, grid);
    f.join_op(&RealFn::constant(frame, Rat::from_integer(0)))
        .expect("join with a constant stays on the frame")
}

/// A random Hausdorff partial function: a descending chain of regular
/// values paired with its pointwise pseudocomplement.
pub fn random_hausdorff(
    rng: &mut ChaCha8Rng,
    frame: &FrameRef,
    grid: &[Rat],
) -> PartialRealFn {
    let regular: Vec<Elem> =
        frame.elements().filter(|&a| frame.is_regular_elem(a)).collect();
    let bps = random_subset(rng, grid);
    let mut values = Vec::with_capacity(bps.len() + 1);
    let mut prev = frame.top();
    for _ in 0..=bps.len() {
        let below: Vec<Elem> =
            regular.iter().copied().filter(|&a| frame.leq(a, prev)).collect();
        prev = below[rng.gen_range(0..below.len())];
        values.push(prev);
    }
    let up = StepMap::new(frame, Orientation::Antitone, bps.clone(), values.clone())
        .expect("descending regular values");
    let down = StepMap::new(
        frame,
        Orientation::Isotone,
        bps,
        values.iter().map(|&v| frame.pseudocomplement(v)).collect(),
    )
    .expect("pseudocomplement reverses the order");
    PartialRealFn::new(frame.clone(), up, down)
        .expect("a value/pseudocomplement pair satisfies r1")
}

/// A random nearly finite Hausdorff function: like [`random_hausdorff`] but
/// pinned to top on the far left and bottom on the far right.
pub fn random_hnf(rng: &mut ChaCha8Rng, frame: &FrameRef, grid: &[Rat]) -> PartialRealFn {
    let regular: Vec<Elem> =
        frame.elements().filter(|&a| frame.is_regular_elem(a)).collect();
    let mut bps = random_subset(rng, grid);
    if bps.is_empty() {
        bps.push(Rat::from_integer(0));
    }
    let mut values = vec![frame.top()];
    for i in 0..bps.len() {
        let prev = *values.last().unwrap();
        if i + 1 == bps.len() {
            values.push(frame.bottom());
        } else {
            let below: Vec<Elem> =
                regular.iter().copied().filter(|&a| frame.leq(a, prev)).collect();
            values.push(below[rng.gen_range(0..below.len())]);
        }
    }
    let up = StepMap::new(frame, Orientation::Antitone, bps.clone(), values.clone())
        .expect("descending regular values");
    let down = StepMap::new(
        frame,
        Orientation::Isotone,
        bps,
        values.iter().map(|&v| frame.pseudocomplement(v)).collect(),
    )
    .expect("pseudocomplement reverses the order");
    PartialRealFn::new(frame.clone(), up, down)
        .expect("a value/pseudocomplement pair satisfies r1")
}

/// A random partial function with no continuity bias: any descending up
/// chain, paired with a compatible ascending down chain kept under the
/// pointwise pseudocomplement so that disjointness holds.
pub fn random_partialfn(
    rng: &mut ChaCha8Rng,
    frame: &FrameRef,
    grid: &[Rat],
) -> PartialRealFn {
    let all: Vec<Elem> = frame.elements().collect();
    let bps = random_subset(rng, grid);
    let mut up_vals = Vec::with_capacity(bps.len() + 1);
    let mut prev = frame.top();
    for _ in 0..=bps.len() {
        let below: Vec<Elem> = all.iter().copied().filter(|&a| frame.leq(a, prev)).collect();
        prev = below[rng.gen_range(0..below.len())];
        up_vals.push(prev);
    }
    let mut down_vals = Vec::with_capacity(up_vals.len());
    let mut d_prev = frame.bottom();
    for &u in &up_vals {
        let cap = frame.pseudocomplement(u);
        let options: Vec<Elem> = all
            .iter()
            .copied()
            .filter(|&x| frame.leq(d_prev, x) && frame.leq(x, cap))
            .collect();
        d_prev = options[rng.gen_range(0..options.len())];
        down_vals.push(d_prev);
    }
    let up = StepMap::new(frame, Orientation::Antitone, bps.clone(), up_vals)
        .expect("descending by construction");
    let down = StepMap::new(frame, Orientation::Isotone, bps, down_vals)
        .expect("ascending by construction");
    PartialRealFn::new(frame.clone(), up, down).expect("down stays under up's pseudocomplement")
}

/// A random rational vector with entries n/d, |n| ≤ 4, d ∈ {1,2,3}.
pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> crate::riesz::RieszVec {
    crate::riesz::RieszVec(
        (0..dim)
            .map(|_| Rat::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Exhaustive grid function spaces
// ---------------------------------------------------------------------------

/// All weakly descending value sequences of the given length drawn from
/// `allowed`, produced as a DFS.
pub fn descending_sequences(
    frame: &FiniteFrame,
    allowed: &[Elem],
    len: usize,
) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Elem>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == len {
            out.push(prefix);
            continue;
        }
        for &v in allowed {
            if prefix.last().is_none_or(|&p| frame.leq(v, p)) {
                let mut next = prefix.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    out
}

/// Every finite continuous function whose breakpoints lie in the grid: all
/// scales over the full grid (coarser functions appear via value merging).
pub fn enumerate_class_c(frame: &FrameRef, grid: &[Rat]) -> Vec<RealFn> {
    let complemented: Vec<Elem> =
        frame.elements().filter(|&a| frame.is_complemented(a)).collect();
    descending_sequences(frame, &complemented, grid.len() + 1)
        .into_iter()
        .filter(|vals| vals[0] == frame.top() && *vals.last().unwrap() == frame.bottom())
        .map(|vals| {
            let sigma = StepMap::new(frame, Orientation::Antitone, grid.to_vec(), vals)
                .expect("descending complemented values");
            Scale::new(frame.clone(), sigma).unwrap().determined_fn()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn grid() -> Vec<Rat> {
        [(-1, 1), (0, 1), (1, 1)].into_iter().map(|(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn generate_frame_is_deterministic() {
        let a = generate_frame(42, 4);
        let b = generate_frame(42, 4);
        assert_eq!(a, b);
    }

    #[test]
    fn downsets_of_antichain_and_chain() {
        let anti = vec![vec![true, false], vec![false, true]];
        assert_eq!(downset_frame(&anti).size(), 4);
        let chain = vec![vec![true, true], vec![false, true]];
        assert_eq!(downset_frame(&chain).size(), 3);
    }

    #[test]
    fn enumerate_frames_counts() {
        let frames = enumerate_frames(6);
        // one frame per size 1..=3 (chains), plus 2^2 and the two 5-element
        // distributive lattices, plus the 6-element ones
        assert!(frames.len() >= 8, "found {}", frames.len());
        let mut keys = HashSet::new();
        for f in &frames {
            assert!(f.size() <= 6);
            assert!(keys.insert(f.canonical_key()), "duplicate class");
        }
        // chains of every size ≤ 6 must be present
        for n in 1..=6 {
            let key = crate::frame::chain(n).canonical_key();
            assert!(keys.contains(&key), "missing {n}-chain");
        }
    }

    #[test]
    fn enumerate_topologies_counts() {
        // classical counts of labeled topologies on n points
        assert_eq!(enumerate_topologies(1).len(), 1);
        assert_eq!(enumerate_topologies(2).len(), 4);
        assert_eq!(enumerate_topologies(3).len(), 29);
    }

    #[test]
    fn random_functions_are_valid() {
        let mut rng = rng_for(7);
        for seed_frame in [generate_frame(1, 3), generate_frame(2, 4)] {
            let frame = Arc::new(seed_frame);
            for _ in 0..20 {
                let f = random_realfn(&mut rng, &frame, &grid());
                assert_eq!(f.class(), crate::realfn::FnClass::C);
                let h = random_hausdorff(&mut rng, &frame, &grid());
                assert!(h.is_hausdorff());
                let p = random_nonneg_realfn(&mut rng, &frame, &grid());
                assert!(p.is_nonnegative().unwrap());
            }
        }
    }

    #[test]
    fn enumerate_class_c_on_two_chain() {
        let frame = Arc::new(crate::frame::chain(2));
        let fs = enumerate_class_c(&frame, &grid());
        // scales over a 3-point grid on the 2-element frame: the drop from
        // top to bottom happens at one of the three grid points
        assert_eq!(fs.len(), 3);
        for f in &fs {
            assert_eq!(f.class(), crate::realfn::FnClass::C);
        }
    }
}
