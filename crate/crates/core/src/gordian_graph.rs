//! The rooted tree embedding into the gordian graph, and detours around a
//! finite set of knots.
//!
//! Vertices of the rooted `a`-ary tree are paths of child indices. Edges are
//! numbered breadth first, and the edge with number `n` contributes
//! `K_{p_{2n}} # mirror(K_{p_{2n+1}})` to every vertex below it. Certificates
//! sandwich the gordian distance of two images between the tree distance and
//! twice it, using a signature witness for the lower bound.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::circle::{independence_witness, Sign, TurnAngle};
use crate::error::{Error, Result};
use crate::knots::{distance_lower_bound_with_witness, FormalKnot, GeneratorId, PSequence};
use crate::serial;

/// A vertex as the sequence of child indices from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeVertex {
    path: Vec<u32>,
}

impl TreeVertex {
    pub fn root() -> Self {
        TreeVertex::default()
    }

    pub fn new(path: Vec<u32>) -> Self {
        TreeVertex { path }
    }

    pub fn path(&self) -> &[u32] {
        &self.path
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }

    pub fn is_root(&self) -> bool {
        self.path.is_empty()
    }

    pub fn child(&self, i: u32) -> Self {
        let mut path = self.path.clone();
        path.push(i);
        TreeVertex { path }
    }

    pub fn parent(&self) -> Option<Self> {
        let (_, rest) = self.path.split_last()?;
        Some(TreeVertex::new(rest.to_vec()))
    }

    /// The deepest common ancestor.
    pub fn meet(&self, other: &TreeVertex) -> TreeVertex {
        let n = self.path.iter().zip(&other.path).take_while(|(a, b)| a == b).count();
        TreeVertex::new(self.path[..n].to_vec())
    }

    pub fn tree_distance(&self, other: &TreeVertex) -> u64 {
        let m = self.meet(other).depth();
        (self.depth() - m + other.depth() - m) as u64
    }

    /// Vertices strictly below `ancestor` on the way down to `self`,
    /// top-down. Empty unless `ancestor` is a prefix.
    fn below(&self, ancestor: &TreeVertex) -> Vec<TreeVertex> {
        if !self.path.starts_with(&ancestor.path) {
            return Vec::new();
        }
        (ancestor.depth() + 1..=self.depth())
            .map(|d| TreeVertex::new(self.path[..d].to_vec()))
            .collect()
    }

    /// All vertices of depth at most `depth`, in breadth-first order.
    pub fn all_up_to(depth: usize, arity: u32) -> Vec<TreeVertex> {
        let mut out = vec![TreeVertex::root()];
        let mut level = vec![TreeVertex::root()];
        for _ in 0..depth {
            level = level.iter().flat_map(|v| (0..arity).map(move |i| v.child(i))).collect();
            out.extend(level.iter().cloned());
        }
        out
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<String> = self.path.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for TreeVertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "root" {
            return Ok(TreeVertex::root());
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::parse("tree vertex", s, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(TreeVertex::new)
    }
}

impl Serialize for TreeVertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TreeVertex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_arity(v: &TreeVertex, arity: u32) -> Result<()> {
    if arity < 2 {
        return Err(Error::Arity(arity));
    }
    if let Some(&index) = v.path.iter().find(|&&i| i >= arity) {
        return Err(Error::ChildIndex { index, arity });
    }
    Ok(())
}

/// Breadth-first number of the edge above `v` in the binary tree.
pub fn edge_number(v: &TreeVertex) -> Result<u64> {
    edge_number_with_arity(v, 2)
}

/// Breadth-first number of the edge above `v` in the `arity`-ary tree: the
/// root's children get `1..=arity` left to right, then the next level, and
/// so on.
pub fn edge_number_with_arity(v: &TreeVertex, arity: u32) -> Result<u64> {
    check_arity(v, arity)?;
    if v.is_root() {
        return Err(Error::RootHasNoEdge);
    }
    let overflow = || Error::Undecided(format!("edge number of {v} overflows"));
    let a = arity as u64;
    let mut above = 0u64;
    let mut width = 1u64;
    for _ in 1..v.depth() {
        width = width.checked_mul(a).ok_or_else(overflow)?;
        above = above.checked_add(width).ok_or_else(overflow)?;
    }
    let mut offset = 0u64;
    for &i in &v.path {
        offset = offset.checked_mul(a).and_then(|o| o.checked_add(i as u64)).ok_or_else(overflow)?;
    }
    above.checked_add(offset).and_then(|n| n.checked_add(1)).ok_or_else(overflow)
}

/// The two generators attached to the edge above `v`:
/// `(K_{p_{2n}}, mirror(K_{p_{2n+1}}))`.
fn edge_generators(v: &TreeVertex, arity: u32, seq: &mut PSequence) -> Result<(GeneratorId, GeneratorId)> {
    let n = edge_number_with_arity(v, arity)?;
    let even = GeneratorId::new(seq.get(2 * n)?, false)?;
    let odd = GeneratorId::new(seq.get(2 * n + 1)?, true)?;
    Ok((even, odd))
}

/// Image of `v` in the binary tree embedding.
pub fn phi(v: &TreeVertex) -> Result<FormalKnot> {
    phi_with_arity(v, 2, &mut PSequence::new())
}

pub fn phi_with_arity(v: &TreeVertex, arity: u32, seq: &mut PSequence) -> Result<FormalKnot> {
    check_arity(v, arity)?;
    let mut k = FormalKnot::unknot();
    for u in v.below(&TreeVertex::root()) {
        let (a, b) = edge_generators(&u, arity, seq)?;
        k = k.connected_sum(&FormalKnot::generator(a)).connected_sum(&FormalKnot::generator(b));
    }
    Ok(k)
}

/// Evidence that `d_T(x, y) ≤ d_K(φ(x), φ(y)) ≤ 2 d_T(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryCertificate {
    pub x: TreeVertex,
    pub y: TreeVertex,
    pub arity: u32,
    pub meet: TreeVertex,
    pub k: u64,
    pub l: u64,
    pub theta: TurnAngle,
    pub sigma_x: i64,
    pub sigma_y: i64,
    pub lower: u64,
    pub upper: u64,
    /// `|sigma_x - sigma_y|` as evaluated.
    pub evaluated_difference: u64,
    /// The larger difference `4(k + l)` that would make the embedding
    /// isometric after doubling.
    pub claimed_difference: u64,
    /// Whether the evaluated difference equals the claimed one.
    pub claim_reproduced: bool,
    /// Adding or removing one generator is taken to be one crossing change;
    /// the upper bound rests on this.
    pub axiom: String,
}

const GENERATOR_AXIOM: &str = "connected sum with a gordian generator is one crossing change";

/// Certificate for one pair of vertices of the binary tree.
pub fn certify_pair(x: &TreeVertex, y: &TreeVertex) -> Result<IsometryCertificate> {
    certify_pair_with_arity(x, y, 2, &mut PSequence::new())
}

/// Picks `θ` inside `A` for the x-side `K_{p_{2n}}` and y-side
/// `mirror(K_{p_{2m+1}})`, outside for the other two of each edge, so every
/// edge between the vertices adds 2 to `σ_x - σ_y`. Generators above the
/// meet cancel.
pub fn certify_pair_with_arity(
    x: &TreeVertex,
    y: &TreeVertex,
    arity: u32,
    seq: &mut PSequence,
) -> Result<IsometryCertificate> {
    check_arity(x, arity)?;
    check_arity(y, arity)?;
    let meet = x.meet(y);
    let xs = x.below(&meet);
    let ys = y.below(&meet);
    let mut wanted: Vec<(BigUint, Sign)> = Vec::new();
    for v in &xs {
        let (a, b) = edge_generators(v, arity, seq)?;
        wanted.push((a.p().clone(), Sign::Negative));
        wanted.push((b.p().clone(), Sign::Positive));
    }
    for v in &ys {
        let (a, b) = edge_generators(v, arity, seq)?;
        wanted.push((a.p().clone(), Sign::Positive));
        wanted.push((b.p().clone(), Sign::Negative));
    }
    wanted.sort();
    let (ps, signs): (Vec<BigUint>, Vec<Sign>) = wanted.into_iter().unzip();
    let theta = independence_witness(&ps, &signs)?;
    let kx = phi_with_arity(x, arity, seq)?;
    let ky = phi_with_arity(y, arity, seq)?;
    let (k, l) = (xs.len() as u64, ys.len() as u64);
    Ok(assemble(x, y, arity, meet, k, l, theta, &kx, &ky))
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    x: &TreeVertex,
    y: &TreeVertex,
    arity: u32,
    meet: TreeVertex,
    k: u64,
    l: u64,
    theta: TurnAngle,
    kx: &FormalKnot,
    ky: &FormalKnot,
) -> IsometryCertificate {
    let sigma_x = kx.signature_at(&theta);
    let sigma_y = ky.signature_at(&theta);
    let evaluated_difference = (sigma_x - sigma_y).unsigned_abs();
    let claimed_difference = 4 * (k + l);
    IsometryCertificate {
        x: x.clone(),
        y: y.clone(),
        arity,
        meet,
        k,
        l,
        theta,
        sigma_x,
        sigma_y,
        lower: evaluated_difference.div_ceil(2),
        upper: 2 * (k + l),
        evaluated_difference,
        claimed_difference,
        claim_reproduced: evaluated_difference == claimed_difference,
        axiom: GENERATOR_AXIOM.to_string(),
    }
}

impl IsometryCertificate {
    pub fn tree_distance(&self) -> u64 {
        self.k + self.l
    }

    /// Recomputes everything from `x`, `y`, `arity` and `theta` and compares.
    pub fn validate(&self) -> Result<bool> {
        let mut seq = PSequence::new();
        let kx = phi_with_arity(&self.x, self.arity, &mut seq)?;
        let ky = phi_with_arity(&self.y, self.arity, &mut seq)?;
        let meet = self.x.meet(&self.y);
        let k = (self.x.depth() - meet.depth()) as u64;
        let l = (self.y.depth() - meet.depth()) as u64;
        let fresh = assemble(&self.x, &self.y, self.arity, meet, k, l, self.theta.clone(), &kx, &ky);
        Ok(&fresh == self && self.lower <= self.upper)
    }

    /// The lower bound reaches the tree distance.
    pub fn is_tight(&self) -> bool {
        self.lower == self.tree_distance() && self.upper == 2 * self.tree_distance()
    }
}

/// Certificates for every unordered pair of distinct vertices of depth at
/// most `depth`, in breadth-first order of the pair.
pub fn certify_all(depth: usize, arity: u32) -> Result<Vec<IsometryCertificate>> {
    if arity < 2 {
        return Err(Error::Arity(arity));
    }
    let vs = TreeVertex::all_up_to(depth, arity);
    let pairs: Vec<(usize, usize)> = (0..vs.len())
        .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
        .collect();
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(pairs.len().max(1));
    let chunk = pairs.len().div_ceil(workers).max(1);
    let results: Vec<Result<Vec<IsometryCertificate>>> = std::thread::scope(|s| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|part| {
                let vs = &vs;
                s.spawn(move || {
                    let mut seq = PSequence::new();
                    part.iter()
                        .map(|&(i, j)| certify_pair_with_arity(&vs[i], &vs[j], arity, &mut seq))
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("certification worker panicked")).collect()
    });
    let mut out = Vec::with_capacity(pairs.len());
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Smallest odd `p ≥ 3` whose torus polynomial has root gap `1/p` below the
/// smallest root gap among `knots`.
pub fn choose_detour(knots: &[FormalKnot]) -> BigUint {
    let l = knots.iter().map(FormalKnot::root_gap).min().unwrap_or_else(BigRational::one);
    // smallest integer p with p > 1/l
    let mut p = (l.recip().floor().to_integer() + 1u32).to_biguint().expect("gap is positive");
    if p.is_even() {
        p += 1u32;
    }
    p.max(BigUint::from(3u32))
}

/// A path `L_0, …, L_k` rerouted through `L_i # K_p` to avoid `forbidden`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetourPlan {
    pub forbidden: Vec<FormalKnot>,
    pub path: Vec<FormalKnot>,
    #[serde(with = "serial::decimal")]
    pub detour_p: BigUint,
    pub detoured_path: Vec<FormalKnot>,
}

/// `L_0, L_0 # K_p, …, L_k # K_p, L_k` with `p` from [`choose_detour`] over
/// the forbidden knots and the path.
pub fn build_detour(path: &[FormalKnot], forbidden: &[FormalKnot]) -> Result<DetourPlan> {
    let (Some(first), Some(last)) = (path.first(), path.last()) else {
        return Err(Error::EmptyPath);
    };
    for end in [first, last] {
        if forbidden.contains(end) {
            return Err(Error::EndpointForbidden(end.to_string()));
        }
    }
    let all: Vec<FormalKnot> = forbidden.iter().chain(path).cloned().collect();
    let p = choose_detour(&all);
    let kp = FormalKnot::torus(p.clone(), false)?;
    let mut detoured = vec![first.clone()];
    detoured.extend(path.iter().map(|k| k.connected_sum(&kp)));
    detoured.push(last.clone());
    Ok(DetourPlan {
        forbidden: forbidden.to_vec(),
        path: path.to_vec(),
        detour_p: p,
        detoured_path: detoured,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// The signatures differ at `theta`.
    Signature {
        theta: TurnAngle,
        sigma_entry: i64,
        sigma_forbidden: i64,
    },
    /// The Alexander polynomials have different minimal root gaps.
    RootGap {
        #[serde(with = "serial::ratio")]
        entry_gap: BigRational,
        #[serde(with = "serial::ratio")]
        forbidden_gap: BigRational,
    },
    /// The materialized Alexander polynomials differ.
    Alexander,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distinctness {
    /// Index into `detoured_path`.
    pub entry: usize,
    /// Index into `forbidden`.
    pub forbidden: usize,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    AddGenerator,
    RemoveGenerator,
    /// Step `index → index + 1` of the original path, with `K_p` attached.
    PathStep { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetourReport {
    pub valid: bool,
    pub distinctness: Vec<Distinctness>,
    pub moves: Vec<Move>,
    pub failures: Vec<String>,
}

fn distinguish(entry: &FormalKnot, forbidden: &FormalKnot) -> Option<Evidence> {
    if let Ok(b) = distance_lower_bound_with_witness(entry, forbidden) {
        if let Some(theta) = b.theta.filter(|_| b.sup > 0) {
            return Some(Evidence::Signature {
                sigma_entry: entry.signature_at(&theta),
                sigma_forbidden: forbidden.signature_at(&theta),
                theta,
            });
        }
    }
    let (entry_gap, forbidden_gap) = (entry.root_gap(), forbidden.root_gap());
    if entry_gap != forbidden_gap {
        return Some(Evidence::RootGap {
            entry_gap,
            forbidden_gap,
        });
    }
    match (entry.alexander(), forbidden.alexander()) {
        (Ok(a), Ok(b)) if a != b => Some(Evidence::Alexander),
        _ => None,
    }
}

/// Checks that every interior entry of the detour is certifiably distinct
/// from every forbidden knot, and that consecutive entries are one
/// construction move apart.
pub fn verify_detour(plan: &DetourPlan) -> DetourReport {
    let mut failures = Vec::new();
    let mut moves = Vec::new();
    let mut distinctness = Vec::new();
    let n = plan.path.len();
    let d = &plan.detoured_path;
    match FormalKnot::torus(plan.detour_p.clone(), false) {
        Err(e) => failures.push(format!("detour parameter: {e}")),
        Ok(kp) if n > 0 && d.len() == n + 2 => {
            let expected = |j: usize| {
                if j == 0 {
                    plan.path[0].clone()
                } else if j == n + 1 {
                    plan.path[n - 1].clone()
                } else {
                    plan.path[j - 1].connected_sum(&kp)
                }
            };
            for (j, entry) in d.iter().enumerate() {
                if entry != &expected(j) {
                    failures.push(format!("entry {j} is {entry}, expected {}", expected(j)));
                }
            }
            moves.push(Move::AddGenerator);
            moves.extend((0..n - 1).map(|index| Move::PathStep { index }));
            moves.push(Move::RemoveGenerator);
        }
        Ok(_) => failures.push(format!(
            "detoured path has {} entries for a path of {}",
            d.len(),
            n
        )),
    }
    for j in 1..d.len().saturating_sub(1) {
        for (i, f) in plan.forbidden.iter().enumerate() {
            match distinguish(&d[j], f) {
                Some(evidence) => distinctness.push(Distinctness {
                    entry: j,
                    forbidden: i,
                    evidence,
                }),
                None => failures.push(
                    Error::Uncertified {
                        entry: d[j].to_string(),
                        forbidden: f.to_string(),
                    }
                    .to_string(),
                ),
            }
        }
    }
    DetourReport {
        valid: failures.is_empty(),
        distinctness,
        moves,
        failures,
    }
}

impl DetourPlan {
    pub fn verify(&self) -> bool {
        verify_detour(self).valid
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::p_sequence;

    fn v(s: &str) -> TreeVertex {
        s.parse().unwrap()
    }

    fn k(p: u32) -> FormalKnot {
        FormalKnot::torus(p, false).unwrap()
    }

    #[test]
    fn bfs_numbering() {
        assert_eq!(edge_number(&v("0")).unwrap(), 1);
        assert_eq!(edge_number(&v("1")).unwrap(), 2);
        assert_eq!(edge_number(&v("0,0")).unwrap(), 3);
        assert_eq!(edge_number(&v("1,1")).unwrap(), 6);
        assert_eq!(edge_number(&v("0,0,0")).unwrap(), 7);
        assert_eq!(edge_number(&TreeVertex::root()), Err(Error::RootHasNoEdge));
        assert_eq!(edge_number(&v("2")), Err(Error::ChildIndex { index: 2, arity: 2 }));
        assert_eq!(edge_number_with_arity(&v("2"), 3).unwrap(), 3);
        assert_eq!(edge_number_with_arity(&v("0,0"), 3).unwrap(), 4);
    }

    #[test]
    fn bfs_numbering_matches_enumeration() {
        for arity in 2..=4 {
            let vs = TreeVertex::all_up_to(3, arity);
            for (i, u) in vs.iter().enumerate().skip(1) {
                assert_eq!(edge_number_with_arity(u, arity).unwrap(), i as u64);
            }
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&TreeVertex::root()).unwrap(), FormalKnot::unknot());
        let m = |p: u32| FormalKnot::torus(p, true).unwrap();
        assert_eq!(phi(&v("0")).unwrap(), k(15).connected_sum(&m(105)));
        assert_eq!(phi(&v("1")).unwrap(), k(945).connected_sum(&m(10395)));
        let deep = phi(&v("1,1,1")).unwrap();
        let p29 = p_sequence(29).unwrap();
        assert!(deep.generators().any(|(g, _)| g.p() == &p29 && g.is_mirrored()));
    }

    #[test]
    fn vertex_text() {
        assert_eq!(v("root"), TreeVertex::root());
        assert_eq!(v(""), TreeVertex::root());
        assert_eq!(v("0,1").to_string(), "0,1");
        assert!("a".parse::<TreeVertex>().is_err());
        assert_eq!(v("0,1,1").meet(&v("0,1,0")), v("0,1"));
        assert_eq!(v("0,1,1").tree_distance(&v("1")), 4);
    }

    #[test]
    fn certificates() {
        let c = certify_pair(&v("root"), &v("root")).unwrap();
        assert_eq!((c.lower, c.upper), (0, 0));
        let c = certify_pair(&TreeVertex::root(), &v("0")).unwrap();
        assert_eq!((c.evaluated_difference, c.lower, c.upper), (2, 1, 2));
        assert_eq!(c.claimed_difference, 4);
        assert!(!c.claim_reproduced);
        assert!(c.validate().unwrap());
        let c = certify_pair(&v("0"), &v("1")).unwrap();
        assert_eq!((c.evaluated_difference, c.lower, c.upper), (4, 2, 4));
        assert!(c.validate().unwrap());
        let mut bad = c.clone();
        bad.sigma_x += 2;
        assert!(!bad.validate().unwrap());
    }

    #[test]
    fn certify_depth_two() {
        let all = certify_all(2, 2).unwrap();
        assert_eq!(all.len(), 21);
        for c in &all {
            assert!(c.is_tight(), "{} {}", c.x, c.y);
            assert!(c.validate().unwrap());
        }
    }

    #[test]
    fn detour_choice() {
        assert_eq!(choose_detour(&[FormalKnot::unknot()]), BigUint::from(3u32));
        assert_eq!(choose_detour(&[]), BigUint::from(3u32));
        assert_eq!(choose_detour(&[k(3)]), BigUint::from(5u32));
        assert_eq!(choose_detour(&[k(3).connected_sum(&k(5))]), BigUint::from(17u32));
    }

    #[test]
    fn detour_examples() {
        let u = FormalKnot::unknot();
        let plan = build_detour(&[u.clone()], &[]).unwrap();
        assert_eq!(plan.detoured_path, vec![u.clone(), k(3), u.clone()]);
        assert!(plan.verify());

        let plan = build_detour(&[u.clone(), k(3)], &[k(3).connected_sum(&k(5))]).unwrap();
        assert_eq!(plan.detour_p, BigUint::from(17u32));
        let report = verify_detour(&plan);
        assert!(report.valid, "{:?}", report.failures);
        assert_eq!(report.distinctness.len(), 2);

        assert!(matches!(build_detour(&[u.clone(), k(3)], &[k(3)]), Err(Error::EndpointForbidden(_))));
        assert_eq!(build_detour(&[], &[]), Err(Error::EmptyPath));

        let mut broken = plan.clone();
        broken.detoured_path[1] = k(3);
        assert!(!broken.verify());
    }

    #[test]
    fn plan_serde() {
        let plan = build_detour(&[FormalKnot::unknot(), k(3)], &[k(5)]).unwrap();
        let s = serde_json::to_string(&plan).unwrap();
        let back: DetourPlan = serde_json::from_str(&s).unwrap();
        assert_eq!(back, plan);
        let c = certify_pair(&v("0"), &v("1,0")).unwrap();
        let back: IsometryCertificate = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
