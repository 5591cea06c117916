//! Generator-cogenerators, minimal `add(M)`-approximations and relative syzygies.
//!
//! A generator-cogenerator `M = Λ ⊕ π(S)` is stored as the set `S` of canonical
//! stable vertices. The projective layer `t = m` and the zero layer `t = 0` are
//! members implicitly. `Ω_M` of an indecomposable is read off the extended quiver
//! by the rectangle selection in [`min_approximation`]; `Ω_M` of a direct sum is
//! the sum of the summands' `Ω_M`, so M-dimensions are longest paths in the
//! successor graph `v -> Ω_M(v)` and infinite exactly when a cycle is reachable.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::euclid_chain;
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::quiver::{canon, omega_unchecked, AlgebraParams, Vertex};

/// `Λ ⊕ π(members)` for a set of canonical stable vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenCogenSet {
    params: AlgebraParams,
    members: Vec<bool>,
}

impl GenCogenSet {
    /// The bare algebra `Λ`.
    pub fn empty(params: AlgebraParams) -> Self {
        GenCogenSet {
            params,
            members: vec![false; params.stable_count()],
        }
    }

    /// Every indecomposable.
    pub fn auslander(params: AlgebraParams) -> Self {
        GenCogenSet {
            params,
            members: vec![true; params.stable_count()],
        }
    }

    /// Builds `Λ ⊕ π(vertices)`; columns are reduced modulo `n`.
    pub fn from_vertices<I>(params: AlgebraParams, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = Self::empty(params);
        for v in vertices {
            if !params.is_stable(v) {
                return Err(Error::Domain(format!(
                    "{v} is not a stable vertex of {params}"
                )));
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Bit `i` of `mask` selects the `i`-th vertex of [`AlgebraParams::stable_vertices`].
    pub fn from_mask(params: AlgebraParams, mask: u64) -> Self {
        let members = (0..params.stable_count())
            .map(|i| mask >> i & 1 == 1)
            .collect();
        GenCogenSet { params, members }
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.members.len() <= 64, "too many vertices for a u64 mask");
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn insert(&mut self, v: Vertex) {
        let i = self.params.index_of(v);
        self.members[i] = true;
    }

    pub fn remove(&mut self, v: Vertex) {
        let i = self.params.index_of(v);
        self.members[i] = false;
    }

    /// Membership of a vertex of the extended cover.
    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        let m = self.params.m() as i64;
        v.t == 0 || v.t == m || (v.t > 0 && v.t < m && self.members[self.params.index_of(v)])
    }

    /// Canonical stable members in lexicographic order.
    pub fn members(&self) -> Vec<Vertex> {
        self.params
            .stable_vertices()
            .filter(|&v| self.members[self.params.index_of(v)])
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Applies `(x, t) -> (x + k, t)` to every member.
    pub fn rotate(&self, k: i64) -> Self {
        let mut out = Self::empty(self.params);
        for v in self.members() {
            out.insert(Vertex::new(v.x + k, v.t));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GenCogenDoc::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GenCogenDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.try_into()
    }
}

impl fmt::Display for GenCogenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Λ")?;
        for v in self.members() {
            write!(f, " ⊕ {v}")?;
        }
        Ok(())
    }
}

/// JSON shape `{"n":…,"m":…,"members":[[x,t],…]}` with members sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenCogenDoc {
    pub n: u32,
    pub m: u32,
    pub members: Vec<[i64; 2]>,
}

impl From<&GenCogenSet> for GenCogenDoc {
    fn from(set: &GenCogenSet) -> Self {
        GenCogenDoc {
            n: set.params.n(),
            m: set.params.m(),
            members: set.members().into_iter().map(|v| [v.x, v.t]).collect(),
        }
    }
}

impl TryFrom<GenCogenDoc> for GenCogenSet {
    type Error = Error;

    fn try_from(doc: GenCogenDoc) -> Result<Self> {
        let params = AlgebraParams::new(doc.n, doc.m)?;
        GenCogenSet::from_vertices(params, doc.members.iter().map(|&[x, t]| Vertex::new(x, t)))
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for GenCogenSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GenCogenDoc::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenCogenSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = GenCogenDoc::deserialize(d)?;
        doc.try_into().map_err(serde::de::Error::custom)
    }
}

/// One selection rectangle: spanned by `(x, t)` and `(x + t, h - t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rectangle {
    pub x: i64,
    pub t: i64,
    pub h: i64,
}

/// The standard sequence `0 -> π(syzygy) -> π(approx) -> π(target) -> 0`.
///
/// Coordinates are on the cover, relative to the canonical target. The last
/// approximation summand may sit on the zero layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxResult {
    pub target: Vertex,
    pub approx_summands: Vec<Vertex>,
    pub syzygy_summands: Vec<Vertex>,
    pub rectangles: Vec<Rectangle>,
}

/// Minimal right `add(M)`-approximation of a non-member stable vertex.
pub fn min_approximation(v: Vertex, set: &GenCogenSet) -> Result<ApproxResult> {
    let a = set.params;
    if !a.is_stable(v) {
        return Err(Error::Contract(format!(
            "{v} is not a stable vertex of {a}"
        )));
    }
    let v = canon(v, a);
    if set.contains(v) {
        return Err(Error::Contract(format!("{v} already lies in add(M)")));
    }
    Ok(approximate(v, set))
}

fn approximate(v: Vertex, set: &GenCogenSet) -> ApproxResult {
    let m = set.params.m() as i64;
    let Vertex { x, t } = v;
    let h = (t + 1..=m)
        .find(|&h| set.contains(Vertex::new(x, h)))
        .expect("projective layer is always a member");

    let mut approx = vec![Vertex::new(x, h)];
    let mut syzygy = Vec::new();
    let mut rects = vec![Rectangle { x, t, h }];
    let (mut cx, mut ct, mut ch) = (x, t, h);
    loop {
        // leftmost column of the rectangle meeting M̂, lowest vertex in it; the
        // upper edge is left out, a hit there would cancel its own syzygy summand
        let (y, w) = (cx + 1..=cx + ct)
            .find_map(|y| {
                (cx + ct - y..cx + ch - y)
                    .find(|&w| set.contains(Vertex::new(y, w)))
                    .map(|w| (y, w))
            })
            .expect("column x + t reaches the zero layer");
        approx.push(Vertex::new(y, w));
        syzygy.push(Vertex::new(y, ch - (y - cx)));
        if w == cx + ct - y {
            break;
        }
        (cx, ct, ch) = (y, cx + ct - y, w);
        rects.push(Rectangle {
            x: cx,
            t: ct,
            h: ch,
        });
    }
    ApproxResult {
        target: v,
        approx_summands: approx,
        syzygy_summands: syzygy,
        rectangles: rects,
    }
}

/// `Ω_M` of an indecomposable, as canonical vertices; empty on `add(M)`.
pub fn omega_m(v: Vertex, set: &GenCogenSet) -> Vec<Vertex> {
    let a = set.params;
    if !a.is_stable(v) || set.contains(v) {
        return Vec::new();
    }
    approximate(canon(v, a), set)
        .syzygy_summands
        .into_iter()
        .map(|w| canon(w, a))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MdimOutcome {
    Finite {
        value: u64,
    },
    /// A cycle `v_0 -> v_1 -> … -> v_0` of the successor graph.
    Infinite {
        cycle: Vec<Vertex>,
    },
}

impl MdimOutcome {
    pub fn as_dim(&self) -> Dim {
        match self {
            MdimOutcome::Finite { value } => Dim::Finite(*value),
            MdimOutcome::Infinite { .. } => Dim::Infinite,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Fresh,
    Open,
    Closed,
}

/// Memoized M-dimensions for one generator-cogenerator.
pub struct MdimTable<'a> {
    set: &'a GenCogenSet,
    memo: Vec<Option<MdimOutcome>>,
    marks: Vec<Mark>,
    path: Vec<usize>,
}

impl<'a> MdimTable<'a> {
    pub fn new(set: &'a GenCogenSet) -> Self {
        let len = set.params.stable_count();
        MdimTable {
            set,
            memo: vec![None; len],
            marks: vec![Mark::Fresh; len],
            path: Vec::new(),
        }
    }

    /// M-dimension of a stable vertex (any column; reduced internally).
    pub fn get(&mut self, v: Vertex) -> Result<MdimOutcome> {
        let a = self.set.params;
        if !a.is_stable(v) {
            return Err(Error::Domain(format!("{v} is not a stable vertex of {a}")));
        }
        Ok(self.visit(a.index_of(v)))
    }

    fn visit(&mut self, i: usize) -> MdimOutcome {
        if let Some(done) = &self.memo[i] {
            return done.clone();
        }
        let a = self.set.params;
        let v = a.vertex_at(i);
        if self.set.members[i] {
            let out = MdimOutcome::Finite { value: 0 };
            self.memo[i] = Some(out.clone());
            self.marks[i] = Mark::Closed;
            return out;
        }
        self.marks[i] = Mark::Open;
        self.path.push(i);
        let mut out = MdimOutcome::Finite { value: 1 };
        for w in omega_m(v, self.set) {
            let j = a.index_of(w);
            if self.set.members[j] {
                continue;
            }
            if self.marks[j] == Mark::Open {
                let start = self
                    .path
                    .iter()
                    .position(|&p| p == j)
                    .expect("open node is on the path");
                let cycle = self.path[start..].iter().map(|&p| a.vertex_at(p)).collect();
                out = MdimOutcome::Infinite { cycle };
                break;
            }
            match self.visit(j) {
                MdimOutcome::Finite { value } => {
                    if let MdimOutcome::Finite { value: best } = &mut out {
                        *best = (*best).max(value + 1);
                    }
                }
                inf @ MdimOutcome::Infinite { .. } => {
                    out = inf;
                    break;
                }
            }
        }
        self.path.pop();
        self.marks[i] = Mark::Closed;
        self.memo[i] = Some(out.clone());
        out
    }
}

/// M-dimension of a single vertex.
pub fn mdim(v: Vertex, set: &GenCogenSet) -> Result<MdimOutcome> {
    MdimTable::new(set).get(v)
}

/// Global dimension of `End(M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GlobalDim {
    /// Every M-dimension vanishes; reported as 2.
    AtMostTwo,
    Finite(u64),
    Infinite,
}

impl GlobalDim {
    pub fn as_dim(self) -> Dim {
        match self {
            GlobalDim::AtMostTwo => Dim::Finite(2),
            GlobalDim::Finite(d) => Dim::Finite(d),
            GlobalDim::Infinite => Dim::Infinite,
        }
    }

    pub fn is_finite(self) -> bool {
        self != GlobalDim::Infinite
    }
}

impl fmt::Display for GlobalDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalDim::AtMostTwo => f.write_str("2 (<=2)"),
            GlobalDim::Finite(d) => write!(f, "{d}"),
            GlobalDim::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for GlobalDim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GlobalDim", 2)?;
        st.serialize_field("value", &self.as_dim())?;
        st.serialize_field("at_most_two", &(*self == GlobalDim::AtMostTwo))?;
        st.end()
    }
}

/// `gldim End(M) = max Mdim + 2` when the maximum is positive.
pub fn gldim_end(set: &GenCogenSet) -> GlobalDim {
    let mut table = MdimTable::new(set);
    let mut max = 0;
    for i in 0..set.params.stable_count() {
        match table.visit(i) {
            MdimOutcome::Finite { value } => max = max.max(value),
            MdimOutcome::Infinite { .. } => return GlobalDim::Infinite,
        }
    }
    if max == 0 {
        GlobalDim::AtMostTwo
    } else {
        GlobalDim::Finite(max + 2)
    }
}

/// The Auslander-Reiten sequence `0 -> τZ -> middle -> Z -> 0` ending at a stable `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArSequence {
    pub start: Vertex,
    /// `(x, t + 1)` and `(x + 1, t - 1)`; either may be projective or zero.
    pub middle: [Vertex; 2],
    pub end: Vertex,
}

pub fn ar_sequence(end: Vertex, a: AlgebraParams) -> Result<ArSequence> {
    if !a.is_stable(end) {
        return Err(Error::Domain(format!(
            "{end} is not a stable vertex of {a}"
        )));
    }
    let Vertex { x, t } = end;
    Ok(ArSequence {
        start: canon(Vertex::new(x + 1, t), a),
        middle: [Vertex::new(x, t + 1), Vertex::new(x + 1, t - 1)],
        end: canon(end, a),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// Adjoin `τ⁻X` once all immediate successors of `X` lie in `add(M)`.
    Forward,
    /// Adjoin `τX` once all immediate predecessors of `X` lie in `add(M)`.
    Backward,
}

/// Saturates `M` under one knitting direction.
pub fn knit_step(set: &GenCogenSet, direction: Direction) -> GenCogenSet {
    let mut out = set.clone();
    loop {
        let mut grew = false;
        for v in out.members() {
            let Vertex { x, t } = v;
            let (neighbours, next) = match direction {
                Direction::Forward => (
                    [Vertex::new(x - 1, t + 1), Vertex::new(x, t - 1)],
                    Vertex::new(x - 1, t),
                ),
                Direction::Backward => (
                    [Vertex::new(x + 1, t - 1), Vertex::new(x, t + 1)],
                    Vertex::new(x + 1, t),
                ),
            };
            if !out.contains(next) && neighbours.iter().all(|&w| out.contains(w)) {
                out.insert(next);
                grew = true;
            }
        }
        if !grew {
            return out;
        }
    }
}

/// Does `add(M)` contain a section `(y_1, 1), (y_2, 2), …, (y_{m-1}, m-1)` with
/// `y_{t+1} ∈ {y_t, y_t - 1}`?
pub fn contains_complete_slice(set: &GenCogenSet) -> bool {
    let a = set.params;
    let (n, m) = (a.n() as i64, a.m() as i64);
    if m < 2 {
        return false;
    }
    let mut reach: Vec<bool> = (0..n).map(|x| set.contains(Vertex::new(x, 1))).collect();
    for t in 2..m {
        reach = (0..n)
            .map(|y| {
                set.contains(Vertex::new(y, t))
                    && (reach[y as usize] || reach[(y + 1).rem_euclid(n) as usize])
            })
            .collect();
    }
    reach.into_iter().any(|r| r)
}

fn check_family(t: u32, delta: u32, a: AlgebraParams) -> Result<()> {
    if t + delta > a.m() {
        return Err(Error::Domain(format!(
            "t + delta = {} exceeds m = {}",
            t + delta,
            a.m()
        )));
    }
    Ok(())
}

fn stable_only(a: AlgebraParams, vs: impl IntoIterator<Item = Vertex>) -> GenCogenSet {
    let mut set = GenCogenSet::empty(a);
    for v in vs.into_iter().filter(|&v| a.is_stable(v)) {
        set.insert(v);
    }
    set
}

/// `S_t^δ = Λ ⊕ L_0^1 ⊕ … ⊕ L_0^t ⊕ L_0^{t+δ} ⊕ … ⊕ L_0^{m-1}`.
pub fn family_s(t: u32, delta: u32, a: AlgebraParams) -> Result<GenCogenSet> {
    check_family(t, delta, a)?;
    let (t, delta) = (t as i64, delta as i64);
    let m = a.m() as i64;
    let column = (1..=t).chain(t + delta..m).map(|i| Vertex::new(0, i));
    Ok(stable_only(a, column))
}

/// `N_t^δ = Λ ⊕ L_0^1 ⊕ … ⊕ L_0^t ⊕ ⊕_{j=0}^{m-1-δ-t} L_{-j}^{δ+t+j}`.
pub fn family_n(t: u32, delta: u32, a: AlgebraParams) -> Result<GenCogenSet> {
    check_family(t, delta, a)?;
    let (t, delta) = (t as i64, delta as i64);
    let m = a.m() as i64;
    let column = (1..=t).map(|i| Vertex::new(0, i));
    let diagonal = (0..=m - 1 - delta - t).map(|j| Vertex::new(-j, delta + t + j));
    Ok(stable_only(a, column.chain(diagonal)))
}

/// `δ = max{n, (k_0 - 1) n}`.
pub fn delta(a: AlgebraParams) -> Result<u32> {
    let k0 = euclid_chain(a)?.k(0) as u32;
    Ok(a.n().max(k0.saturating_sub(1) * a.n()))
}

/// `t_x = min{t >= 0 : (x, δ + t) ∈ M̂}`.
pub fn t_x(x: i64, set: &GenCogenSet) -> Result<u32> {
    let a = set.params;
    let d = delta(a)? as i64;
    let m = a.m() as i64;
    let t = (0..=m - d)
        .find(|&t| set.contains(Vertex::new(x, d + t)))
        .expect("projective layer is always a member");
    Ok(t as u32)
}

/// No column has its stable vertex `(x, t_x)` inside `add(M)`.
pub fn delta_free(set: &GenCogenSet) -> Result<bool> {
    let a = set.params;
    for x in 0..a.n() as i64 {
        let v = Vertex::new(x, t_x(x, set)? as i64);
        if a.is_stable(v) && set.contains(v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Λ ⊕ Ω_Λ(N)`: every stable member moved by `ω`.
pub fn syzygy_shift(set: &GenCogenSet) -> GenCogenSet {
    let a = set.params;
    let m = a.m() as i64;
    let mut out = GenCogenSet::empty(a);
    for v in set.members() {
        out.insert(omega_unchecked(v, 1, m));
    }
    out
}
