//! Finite frames: finite bounded distributive lattices with exact Heyting
//! structure, order relations, classification predicates and Booleanization.
//!
//! A finite lattice is a frame precisely when it is distributive, so frame
//! validity is decided by an exhaustive triple check at construction. All
//! tables (meet, join, Heyting arrow, pseudocomplement, the completely-below
//! relation) are cached once; frames are immutable afterwards.

use std::sync::Arc;

use thiserror::Error;

/// Elements are identified by index into the frame's tables.
pub type Elem = usize;

/// Frames are shared immutably; functions hold a cheap handle to theirs.
pub type FrameRef = Arc<FiniteFrame>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrameError {
    #[error("relation is not a partial order")]
    NotAPartialOrder,
    #[error("order is not a lattice (missing meet/join or bounds)")]
    NotALattice,
    #[error("lattice is not distributive: {0}∧({1}∨{2}) ≠ ({0}∧{1})∨({0}∧{2})")]
    NotDistributive(Elem, Elem, Elem),
    #[error("map does not preserve frame structure")]
    NotAHomomorphism,
    #[error("frame is not Boolean")]
    NotBoolean,
    #[error("function-level map is not a lattice isomorphism")]
    OracleNotIso,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// A finite frame. Immutable after construction; all structure is cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFrame {
    n: usize,
    leq: Vec<bool>,
    names: Vec<String>,
    meet_t: Vec<Elem>,
    join_t: Vec<Elem>,
    arrow_t: Vec<Elem>,
    pseudo_t: Vec<Elem>,
    cbel: Vec<bool>,
    top: Elem,
    bottom: Elem,
}

impl FiniteFrame {
    /// Validate a relation matrix and build the frame with all cached tables.
    pub fn build(leq: Vec<Vec<bool>>) -> Result<Self, FrameError> {
        let names = (0..leq.len()).map(|i| format!("e{i}")).collect();
        Self::build_named(leq, names)
    }

    pub fn build_named(leq: Vec<Vec<bool>>, names: Vec<String>) -> Result<Self, FrameError> {
        let n = leq.len();
        if n == 0 || leq.iter().any(|row| row.len() != n) || names.len() != n {
            return Err(FrameError::NotAPartialOrder);
        }
        let flat: Vec<bool> = leq.iter().flatten().copied().collect();
        let le = |a: Elem, b: Elem| flat[a * n + b];

        // partial order
        for a in 0..n {
            if !le(a, a) {
                return Err(FrameError::NotAPartialOrder);
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(FrameError::NotAPartialOrder);
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(FrameError::NotAPartialOrder);
                    }
                }
            }
        }

        let bottom = (0..n)
            .find(|&z| (0..n).all(|a| le(z, a)))
            .ok_or(FrameError::NotALattice)?;
        let top = (0..n)
            .find(|&t| (0..n).all(|a| le(a, t)))
            .ok_or(FrameError::NotALattice)?;

        let mut meet_t = vec![0; n * n];
        let mut join_t = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<Elem> = (0..n).filter(|&x| le(x, a) && le(x, b)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&x| le(x, m)))
                    .ok_or(FrameError::NotALattice)?;
                let upper: Vec<Elem> = (0..n).filter(|&x| le(a, x) && le(b, x)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&j| upper.iter().all(|&x| le(j, x)))
                    .ok_or(FrameError::NotALattice)?;
                meet_t[a * n + b] = glb;
                join_t[a * n + b] = lub;
            }
        }

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = meet_t[a * n + join_t[b * n + c]];
                    let rhs = join_t[meet_t[a * n + b] * n + meet_t[a * n + c]];
                    if lhs != rhs {
                        return Err(FrameError::NotDistributive(a, b, c));
                    }
                }
            }
        }

        // Heyting arrow: a→b is the join of all x with a∧x ≤ b. In a
        // distributive lattice that join is itself in the set, so it is the
        // maximum.
        let mut arrow_t = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let mut acc = bottom;
                for x in 0..n {
                    if le(meet_t[a * n + x], b) {
                        acc = join_t[acc * n + x];
                    }
                }
                arrow_t[a * n + b] = acc;
            }
        }
        let pseudo_t: Vec<Elem> = (0..n).map(|a| arrow_t[a * n + bottom]).collect();

        let mut frame = FiniteFrame {
            n,
            leq: flat,
            names,
            meet_t,
            join_t,
            arrow_t,
            pseudo_t,
            cbel: Vec::new(),
            top,
            bottom,
        };
        frame.cbel = frame.compute_completely_below();
        Ok(frame)
    }

    /// Build from a list of `i ≤ j` pairs; reflexive and transitive closure
    /// applied. This is the frame file ingestion path.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)], names: Vec<String>) -> Result<Self, FrameError> {
        if pairs.iter().any(|&(i, j)| i >= n || j >= n) {
            return Err(FrameError::NotAPartialOrder);
        }
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(i, j) in pairs {
            leq[i][j] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::build_named(leq, names)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.n
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet_t[a * self.n + b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join_t[a * self.n + b]
    }

    /// Heyting arrow a→b, the maximum x with a∧x ≤ b.
    pub fn heyting(&self, a: Elem, b: Elem) -> Elem {
        self.arrow_t[a * self.n + b]
    }

    pub fn pseudocomplement(&self, a: Elem) -> Elem {
        self.pseudo_t[a]
    }

    pub fn join_all(&self, it: impl IntoIterator<Item = Elem>) -> Elem {
        it.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, it: impl IntoIterator<Item = Elem>) -> Elem {
        it.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn is_complemented(&self, a: Elem) -> bool {
        self.join(a, self.pseudocomplement(a)) == self.top
    }

    pub fn is_dense(&self, a: Elem) -> bool {
        self.pseudocomplement(a) == self.bottom
    }

    /// a is regular if a = a∗∗.
    pub fn is_regular_elem(&self, a: Elem) -> bool {
        self.pseudocomplement(self.pseudocomplement(a)) == a
    }

    /// b ≺ a: b∗ ∨ a = 1.
    pub fn rather_below(&self, b: Elem, a: Elem) -> bool {
        self.join(self.pseudocomplement(b), a) == self.top
    }

    /// b ≺≺ a: the largest interpolative relation inside rather-below,
    /// computed as a greatest fixpoint.
    pub fn completely_below(&self, b: Elem, a: Elem) -> bool {
        self.cbel[b * self.n + a]
    }

    fn compute_completely_below(&self) -> Vec<bool> {
        let n = self.n;
        let mut rel: Vec<bool> = (0..n * n)
            .map(|i| self.rather_below(i / n, i % n))
            .collect();
        loop {
            let mut next = vec![false; n * n];
            let mut changed = false;
            for b in 0..n {
                for a in 0..n {
                    if rel[b * n + a] {
                        let ok = (0..n).any(|c| rel[b * n + c] && rel[c * n + a]);
                        next[b * n + a] = ok;
                        changed |= !ok;
                    }
                }
            }
            if !changed {
                return rel;
            }
            rel = next;
        }
    }

    /// Reconstruct an interpolation chain c_0 ≤ … ≤ c_k witnessing b ≺≺ a.
    /// In a finite frame the rational-indexed chain collapses onto finitely
    /// many values, each of which must repeat and hence be complemented; a
    /// single complemented element between b and a always suffices.
    pub fn completely_below_chain(&self, b: Elem, a: Elem) -> Option<Vec<Elem>> {
        if !self.completely_below(b, a) {
            return None;
        }
        let d = self
            .elements()
            .find(|&d| self.is_complemented(d) && self.leq(b, d) && self.leq(d, a))?;
        Some(vec![d])
    }

    /// Decision rule for cozero elements: a is cozero iff a ≺≺ a. Guarded by
    /// the brute-force step-function oracle in the test suites.
    pub fn is_cozero(&self, a: Elem) -> bool {
        self.completely_below(a, a)
    }

    pub fn classify(&self) -> Classification {
        let fail = |pred: &dyn Fn(Elem) -> bool| self.elements().find(|&a| !pred(a));

        let regular = fail(&|a| {
            let j = self.join_all(self.elements().filter(|&b| self.rather_below(b, a)));
            j == a
        });
        let completely_regular = fail(&|a| {
            let j = self.join_all(self.elements().filter(|&b| self.completely_below(b, a)));
            j == a
        });
        let extremally_disconnected = fail(&|a| {
            let s = self.pseudocomplement(a);
            self.join(s, self.pseudocomplement(s)) == self.top
        });
        let boolean = fail(&|a| self.is_complemented(a));
        let p_frame = fail(&|a| !self.is_cozero(a) || self.is_complemented(a));
        let almost_p_frame = fail(&|a| !(self.is_cozero(a) && self.is_dense(a)) || a == self.top);

        let almost_boolean = match (regular, extremally_disconnected, p_frame) {
            (None, None, None) => None,
            (Some(w), _, _) | (_, Some(w), _) | (_, _, Some(w)) => Some(w),
        };
        Classification {
            regular,
            completely_regular,
            extremally_disconnected,
            boolean,
            p_frame,
            almost_p_frame,
            almost_boolean,
        }
    }

    /// The Booleanization: the frame of regular elements, with meets
    /// inherited and joins double-pseudocomplemented, together with the dense
    /// homomorphism β(a) = a∗∗.
    pub fn booleanize(self: &Arc<Self>) -> Booleanization {
        let embed: Vec<Elem> = self.elements().filter(|&a| self.is_regular_elem(a)).collect();
        let m = embed.len();
        let mut leq = vec![vec![false; m]; m];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                leq[i][j] = self.leq(a, b);
            }
        }
        let names = embed.iter().map(|&a| self.names[a].clone()).collect();
        let frame = Arc::new(
            FiniteFrame::build_named(leq, names).expect("regular elements form a frame"),
        );
        let pos = |a: Elem| embed.iter().position(|&x| x == a).expect("regular element");
        let map: Vec<Elem> = self
            .elements()
            .map(|a| pos(self.pseudocomplement(self.pseudocomplement(a))))
            .collect();
        let beta = FrameHom::new(Arc::clone(self), frame.clone(), map)
            .expect("β is a frame homomorphism");
        Booleanization { frame, beta, embed }
    }

    /// Prime elements p: the spectrum points, via ξ_p(a) = 0 iff a ≤ p.
    pub fn primes(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&p| {
                p != self.top
                    && self.elements().all(|a| {
                        self.elements().all(|b| {
                            !self.leq(self.meet(a, b), p) || self.leq(a, p) || self.leq(b, p)
                        })
                    })
            })
            .collect()
    }

    /// Canonical isomorphism-invariant key: the lexicographically minimal
    /// relation matrix over all element permutations. Only intended for the
    /// small frames (≤ 7 elements) that the enumeration oracles deduplicate.
    pub fn canonical_key(&self) -> Vec<u8> {
        let n = self.n;
        let mut perm: Vec<Elem> = (0..n).collect();
        let mut best: Option<Vec<u8>> = None;
        permute(&mut perm, 0, &mut |p| {
            let mut mat = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    mat.push(self.leq(p[i], p[j]) as u8);
                }
            }
            if best.as_ref().map_or(true, |b| mat < *b) {
                best = Some(mat);
            }
        });
        best.unwrap()
    }
}

fn permute(perm: &mut Vec<Elem>, k: usize, visit: &mut impl FnMut(&[Elem])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Outcome of the classification predicates. `None` means the predicate
/// holds; `Some(a)` carries a witness element for the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub regular: Option<Elem>,
    pub completely_regular: Option<Elem>,
    pub extremally_disconnected: Option<Elem>,
    pub boolean: Option<Elem>,
    pub p_frame: Option<Elem>,
    pub almost_p_frame: Option<Elem>,
    pub almost_boolean: Option<Elem>,
}

impl Classification {
    pub fn flags(&self) -> Vec<(&'static str, bool, Option<Elem>)> {
        vec![
            ("regular", self.regular.is_none(), self.regular),
            ("completely_regular", self.completely_regular.is_none(), self.completely_regular),
            (
                "extremally_disconnected",
                self.extremally_disconnected.is_none(),
                self.extremally_disconnected,
            ),
            ("boolean", self.boolean.is_none(), self.boolean),
            ("p_frame", self.p_frame.is_none(), self.p_frame),
            ("almost_p_frame", self.almost_p_frame.is_none(), self.almost_p_frame),
            ("almost_boolean", self.almost_boolean.is_none(), self.almost_boolean),
        ]
    }
}

/// A verified frame homomorphism between two finite frames.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameHom {
    source: FrameRef,
    target: FrameRef,
    map: Vec<Elem>,
}

impl FrameHom {
    /// Checks preservation of top, bottom, binary meet and binary join;
    /// arbitrary joins reduce to binary ones in a finite lattice.
    pub fn new(source: FrameRef, target: FrameRef, map: Vec<Elem>) -> Result<Self, FrameError> {
        if map.len() != source.size() || map.iter().any(|&x| x >= target.size()) {
            return Err(FrameError::NotAHomomorphism);
        }
        if map[source.top()] != target.top() || map[source.bottom()] != target.bottom() {
            return Err(FrameError::NotAHomomorphism);
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.meet(a, b)] != target.meet(map[a], map[b])
                    || map[source.join(a, b)] != target.join(map[a], map[b])
                {
                    return Err(FrameError::NotAHomomorphism);
                }
            }
        }
        Ok(FrameHom { source, target, map })
    }

    pub fn identity(frame: &FrameRef) -> Self {
        FrameHom {
            source: frame.clone(),
            target: frame.clone(),
            map: frame.elements().collect(),
        }
    }

    pub fn source(&self) -> &FrameRef {
        &self.source
    }

    pub fn target(&self) -> &FrameRef {
        &self.target
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &x in &self.map {
            seen[x] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// h(a) = 0 only for a = 0.
    pub fn is_dense(&self) -> bool {
        self.source
            .elements()
            .all(|a| self.map[a] != self.target.bottom() || a == self.source.bottom())
    }
}

/// A Booleanization 𝔅(L) together with β: L → 𝔅(L) and the index embedding
/// of 𝔅(L)'s elements back into L.
#[derive(Debug, Clone)]
pub struct Booleanization {
    pub frame: FrameRef,
    pub beta: FrameHom,
    /// `embed[i]` is the L-index of the i-th element of 𝔅(L).
    pub embed: Vec<Elem>,
}

impl Booleanization {
    /// Read a 𝔅(L)-element as an element of L.
    pub fn in_source(&self, b: Elem) -> Elem {
        self.embed[b]
    }
}

// ---------------------------------------------------------------------------
// standard small frames, used pervasively in tests and the generators
// ---------------------------------------------------------------------------

/// The n+1 element chain 0 < … < 1.
pub fn chain(len: usize) -> FiniteFrame {
    let leq = (0..len).map(|i| (0..len).map(|j| i <= j).collect()).collect();
    FiniteFrame::build(leq).unwrap()
}

/// The Boolean frame 2^k, elements = bitmasks.
pub fn boolean(k: u32) -> FiniteFrame {
    let n = 1usize << k;
    let leq = (0..n)
        .map(|i| (0..n).map(|j| i & j == i).collect())
        .collect();
    let names = (0..n).map(|i| format!("{i:0width$b}", width = k as usize)).collect();
    FiniteFrame::build_named(leq, names).unwrap()
}
