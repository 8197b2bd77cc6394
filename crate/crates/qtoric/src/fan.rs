//! Rational simplicial fans: validation, smoothness, completeness, lattice
//! spanning, and positive degree relations.
//!
//! Only simplicial fans are supported: every cone's generators must be
//! linearly independent over Q. This makes the face lattice of a cone the
//! subset lattice of its generators, so fan axioms become finite exact
//! checks (rational LP feasibility for the pairwise intersection axiom).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{self, Constraint};

/// Exact integer lattice point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<BigInt>);

impl LatticeVector {
    pub fn from_ints(v: &[i64]) -> Self {
        LatticeVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Shortest integer vector on the ray through `v`.
pub fn primitive_generator(v: &LatticeVector) -> Result<LatticeVector> {
    if v.is_zero() {
        return Err(Error::InvalidRay("zero vector spans no ray".into()));
    }
    let mut g = BigInt::zero();
    for x in &v.0 {
        g = g.gcd(x);
    }
    Ok(LatticeVector(v.0.iter().map(|x| x / &g).collect()))
}

/// A cone of the fan, as sorted indices into the parent ray list.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct Cone {
    gens: Vec<usize>,
}

impl Cone {
    pub fn new(mut gens: Vec<usize>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        Cone { gens }
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }
}

#[derive(Clone, Debug)]
pub struct Fan {
    dim: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Cone>,
}

/// One axiom violation found by `validate`.
#[derive(Clone, Debug)]
pub enum Violation {
    /// Ray is zero, non-primitive, or has the wrong dimension.
    BadRay { index: usize, reason: String },
    /// Two listed rays coincide.
    DuplicateRay { first: usize, second: usize },
    /// Cone references a missing ray.
    BadIndex { cone: usize, index: usize },
    /// Cone generators are linearly dependent (non-simplicial or not
    /// strongly convex).
    DependentGenerators { cone: usize },
    /// A ray belongs to no maximal cone.
    UnusedRay { index: usize },
    /// Two maximal cones intersect outside their common face; the witness is
    /// a rational point in the overlap.
    Overlap {
        first: usize,
        second: usize,
        witness: Vec<BigRational>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadRay { index, reason } => write!(f, "ray {index}: {reason}"),
            Violation::DuplicateRay { first, second } => {
                write!(f, "rays {first} and {second} coincide")
            }
            Violation::BadIndex { cone, index } => {
                write!(f, "cone {cone} references missing ray {index}")
            }
            Violation::DependentGenerators { cone } => {
                write!(f, "cone {cone} has linearly dependent generators")
            }
            Violation::UnusedRay { index } => {
                write!(f, "ray {index} lies in no maximal cone")
            }
            Violation::Overlap {
                first,
                second,
                witness,
            } => {
                let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
                write!(
                    f,
                    "cones {first} and {second} overlap beyond their common face at ({})",
                    w.join(", ")
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct FanFile {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Build a fan from raw ray data. Rays are primitivized; the boolean in
    /// the result records whether any input ray was scaled.
    pub fn new(dim: usize, rays: Vec<LatticeVector>, max_cones: Vec<Cone>) -> Result<(Fan, bool)> {
        if rays.is_empty() {
            return Err(Error::InvalidRay("a fan needs at least one ray".into()));
        }
        let mut scaled = false;
        let mut prim = Vec::with_capacity(rays.len());
        for r in &rays {
            if r.dim() != dim {
                return Err(Error::ShapeError(format!(
                    "ray {r:?} has dimension {} in a fan of dimension {dim}",
                    r.dim()
                )));
            }
            let p = primitive_generator(r)?;
            if p != *r {
                scaled = true;
            }
            prim.push(p);
        }
        Ok((
            Fan {
                dim,
                rays: prim,
                max_cones,
            },
            scaled,
        ))
    }

    pub fn from_ints(dim: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Result<Fan> {
        let rays = rays.iter().map(|r| LatticeVector::from_ints(r)).collect();
        let cones = max_cones.iter().map(|c| Cone::new(c.to_vec())).collect();
        Ok(Fan::new(dim, rays, cones)?.0)
    }

    pub fn from_json(text: &str) -> Result<(Fan, bool)> {
        let file: FanFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let rays = file
            .rays
            .iter()
            .map(|r| LatticeVector::from_ints(r))
            .collect();
        let cones = file.max_cones.into_iter().map(Cone::new).collect();
        Fan::new(file.dim, rays, cones)
    }

    pub fn to_json(&self) -> String {
        let file = FanFile {
            dim: self.dim,
            rays: self
                .rays
                .iter()
                .map(|r| {
                    r.0.iter()
                        .map(|x| i64::try_from(x).expect("ray entry fits in i64"))
                        .collect()
                })
                .collect(),
            max_cones: self.max_cones.iter().map(|c| c.gens.clone()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("fan serializes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    fn generator_matrix(&self, cone: &Cone) -> Vec<Vec<BigInt>> {
        cone.gens.iter().map(|&k| self.rays[k].0.clone()).collect()
    }

    /// Strong convexity of a simplicial cone: the generators are linearly
    /// independent, hence the cone contains no line. The zero cone (no
    /// generators) is strongly convex.
    pub fn is_strongly_convex(&self, cone: &Cone) -> bool {
        if cone.gens.is_empty() {
            return true;
        }
        if cone.gens.iter().any(|&k| k >= self.rays.len()) {
            return false;
        }
        let m = self.generator_matrix(cone);
        linalg::rank(&m) == cone.dim()
    }

    /// Exact membership of a rational point in a simplicial cone.
    pub fn point_in_cone(&self, x: &[BigRational], cone: &Cone) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::ShapeError(format!(
                "point has dimension {}, fan has {}",
                x.len(),
                self.dim
            )));
        }
        if x.iter().all(|c| c.is_zero()) {
            return Ok(true);
        }
        if cone.gens.is_empty() {
            return Ok(false);
        }
        let gens = self.generator_matrix(cone);
        if linalg::rank(&gens) != cone.dim() {
            return Err(Error::UnsupportedCone(
                "cone generators are linearly dependent".into(),
            ));
        }
        // columns are the generators
        let a: Vec<Vec<BigRational>> = (0..self.dim)
            .map(|row| {
                gens.iter()
                    .map(|g| BigRational::from_integer(g[row].clone()))
                    .collect()
            })
            .collect();
        match linalg::solve_full_column_rank(&a, x) {
            None => Ok(false),
            Some(lambda) => Ok(lambda.iter().all(|l| !l.is_negative())),
        }
    }

    /// Check the fan axioms. Face closure is automatic in the simplicial
    /// face model, so the work is: ray sanity, strong convexity, and the
    /// pairwise common-face axiom via LP feasibility.
    pub fn validate(&self) -> Result<ValidationReport> {
        let mut report = ValidationReport::default();
        for (i, r) in self.rays.iter().enumerate() {
            if r.is_zero() {
                report.violations.push(Violation::BadRay {
                    index: i,
                    reason: "zero vector".into(),
                });
                continue;
            }
            let p = primitive_generator(r)?;
            if p != *r {
                report.violations.push(Violation::BadRay {
                    index: i,
                    reason: "not primitive".into(),
                });
            }
        }
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                if self.rays[i] == self.rays[j] {
                    report.violations.push(Violation::DuplicateRay {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let mut used = vec![false; self.rays.len()];
        for (ci, cone) in self.max_cones.iter().enumerate() {
            for &k in &cone.gens {
                if k >= self.rays.len() {
                    report
                        .violations
                        .push(Violation::BadIndex { cone: ci, index: k });
                } else {
                    used[k] = true;
                }
            }
        }
        for (i, u) in used.iter().enumerate() {
            if !u {
                report.violations.push(Violation::UnusedRay { index: i });
            }
        }
        if !report.is_valid() {
            return Ok(report);
        }
        for (ci, cone) in self.max_cones.iter().enumerate() {
            let m = self.generator_matrix(cone);
            if linalg::rank(&m) != cone.dim() {
                report
                    .violations
                    .push(Violation::DependentGenerators { cone: ci });
            }
        }
        if !report.is_valid() {
            // the LP check below assumes simplicial cones
            return Ok(report);
        }
        for i in 0..self.max_cones.len() {
            for j in i + 1..self.max_cones.len() {
                if let Some(witness) = self.overlap_witness(i, j) {
                    report.violations.push(Violation::Overlap {
                        first: i,
                        second: j,
                        witness,
                    });
                }
            }
        }
        Ok(report)
    }

    /// A point of the set intersection of two maximal cones outside the cone
    /// on their shared generators, or `None` when the common-face axiom
    /// holds for the pair.
    ///
    /// Feasibility system: x = sum lambda_k g_k = sum mu_l h_l with all
    /// coefficients nonnegative and the lambda-mass on non-shared
    /// generators at least 1 (cones are scale invariant, so any violation
    /// can be scaled). Because generators of each cone are independent,
    /// coordinates are unique and a nonzero non-shared coefficient
    /// certifies that x lies outside the common face.
    fn overlap_witness(&self, i: usize, j: usize) -> Option<Vec<BigRational>> {
        let a = &self.max_cones[i];
        let b = &self.max_cones[j];
        let shared: BTreeSet<usize> = a
            .gens
            .iter()
            .filter(|k| b.gens.contains(k))
            .copied()
            .collect();
        let na = a.dim();
        let nb = b.dim();
        let nv = na + nb;
        let mut cs: Vec<Constraint> = Vec::new();
        for row in 0..self.dim {
            let mut coeffs = Vec::with_capacity(nv);
            for &k in &a.gens {
                coeffs.push(BigRational::from_integer(self.rays[k].0[row].clone()));
            }
            for &l in &b.gens {
                coeffs.push(BigRational::from_integer(-self.rays[l].0[row].clone()));
            }
            cs.extend(lp::equality(coeffs, BigRational::zero()));
        }
        for v in 0..nv {
            let mut coeffs = vec![BigRational::zero(); nv];
            coeffs[v] = BigRational::one();
            cs.push(Constraint::new(coeffs, BigRational::zero()));
        }
        // try to push weight onto a generator outside the shared face, on
        // either side
        let mut sides = Vec::new();
        let a_out: Vec<usize> = (0..na).filter(|t| !shared.contains(&a.gens[*t])).collect();
        let b_out: Vec<usize> = (0..nb)
            .filter(|t| !shared.contains(&b.gens[*t]))
            .map(|t| na + t)
            .collect();
        if !a_out.is_empty() {
            sides.push(a_out);
        }
        if !b_out.is_empty() {
            sides.push(b_out);
        }
        for side in sides {
            let mut coeffs = vec![BigRational::zero(); nv];
            for v in &side {
                coeffs[*v] = BigRational::one();
            }
            let mut system = cs.clone();
            system.push(Constraint::new(coeffs, BigRational::one()));
            if let Some(sol) = lp::feasible_point(&system, nv) {
                let mut x = vec![BigRational::zero(); self.dim];
                for (t, &k) in a.gens.iter().enumerate() {
                    for row in 0..self.dim {
                        x[row] += &sol[t] * BigRational::from_integer(self.rays[k].0[row].clone());
                    }
                }
                return Some(x);
            }
        }
        None
    }

    /// Every maximal cone is generated by part of a lattice basis: all
    /// elementary divisors of each generator matrix equal 1. For simplicial
    /// cones this is exactly smoothness of the cone; the same divisor test
    /// also applies verbatim to the block-vector fans of power complexes,
    /// whose maximal cones can carry more generators than the ambient
    /// dimension.
    pub fn is_smooth(&self) -> bool {
        self.max_cones.iter().all(|c| {
            let m = self.generator_matrix(c);
            linalg::smith_normal_form(&m).iter().all(|d| d.is_one())
        })
    }

    /// Wall test for completeness of a simplicial fan: the maximal cones all
    /// have full dimension, every wall (codimension-one face) lies in exactly
    /// two maximal cones, and the wall-adjacency graph is connected.
    pub fn is_complete(&self) -> bool {
        self.completeness().complete
    }

    /// The wall-test verdict plus a secondary diagnostic: when the wall test
    /// passes, a deterministic sample of rational directions is checked for
    /// coverage by the maximal cones.
    pub fn completeness(&self) -> Completeness {
        let mut c = self.wall_test();
        if c.complete {
            c.sampled_directions_covered = self.covers_sampled_directions(0, 64).ok();
        }
        c
    }

    fn wall_test(&self) -> Completeness {
        let m = self.dim;
        if self.max_cones.is_empty() {
            return Completeness {
                complete: false,
                diagnostic: Some("no maximal cones".into()),
                sampled_directions_covered: None,
            };
        }
        if let Some(c) = self.max_cones.iter().find(|c| c.dim() != m) {
            return Completeness {
                complete: false,
                diagnostic: Some(format!(
                    "maximal cone {:?} has dimension {} < {}",
                    c.gens,
                    c.dim(),
                    m
                )),
                sampled_directions_covered: None,
            };
        }
        // walls: drop one generator from a maximal cone
        let mut walls: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (ci, cone) in self.max_cones.iter().enumerate() {
            for drop in 0..cone.gens.len() {
                let mut w = cone.gens.clone();
                w.remove(drop);
                walls.entry(w).or_default().push(ci);
            }
        }
        for (w, owners) in &walls {
            if owners.len() != 2 {
                return Completeness {
                    complete: false,
                    diagnostic: Some(format!(
                        "wall {w:?} lies in {} maximal cone(s), expected 2",
                        owners.len()
                    )),
                    sampled_directions_covered: None,
                };
            }
        }
        // connectivity of the wall-adjacency graph
        let n = self.max_cones.len();
        let mut adj = vec![Vec::new(); n];
        for owners in walls.values() {
            adj[owners[0]].push(owners[1]);
            adj[owners[1]].push(owners[0]);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Completeness {
                complete: false,
                diagnostic: Some("wall-adjacency graph is disconnected".into()),
                sampled_directions_covered: None,
            };
        }
        Completeness {
            complete: true,
            diagnostic: None,
            sampled_directions_covered: None,
        }
    }

    /// Secondary diagnostic for completeness: sample deterministic rational
    /// directions and report whether every one of them lies in some maximal
    /// cone.
    pub fn covers_sampled_directions(&self, seed: u64, count: usize) -> Result<bool> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let x: Vec<BigRational> = (0..self.dim)
                .map(|_| {
                    let num = rng.gen_range(-20i64..=20);
                    let den = rng.gen_range(1i64..=7);
                    BigRational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect();
            if x.iter().all(|c| c.is_zero()) {
                continue;
            }
            let mut covered = false;
            for cone in &self.max_cones {
                if self.point_in_cone(&x, cone)? {
                    covered = true;
                    break;
                }
            }
            if !covered {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug)]
pub struct Completeness {
    pub complete: bool,
    pub diagnostic: Option<String>,
    /// Result of the seeded random-direction pass; run only when the wall
    /// test passes, and a diagnostic only.
    pub sampled_directions_covered: Option<bool>,
}

/// True when the integer row span of the rays is the full lattice.
pub fn spans_lattice(rays: &[LatticeVector]) -> bool {
    if rays.is_empty() {
        return false;
    }
    let m = rays[0].dim();
    let mat: Vec<Vec<BigInt>> = rays.iter().map(|r| r.0.clone()).collect();
    linalg::is_unimodular_span(&mat, m)
}

const RELATION_RAY_LIMIT: usize = 16;

/// A strictly positive integer tuple `d` with `sum d_k rays_k = 0`, scaled to
/// content 1, or `None` when no positive relation exists. Found by a rational
/// kernel basis followed by exact LP feasibility on the kernel coordinates.
pub fn find_positive_relation(rays: &[LatticeVector]) -> Result<Option<Vec<BigInt>>> {
    let r = rays.len();
    if r == 0 {
        return Ok(None);
    }
    if r > RELATION_RAY_LIMIT {
        return Err(Error::RelationTooLarge {
            limit: RELATION_RAY_LIMIT,
            got: r,
        });
    }
    let m = rays[0].dim();
    // rows are coordinates, columns are rays
    let mat: Vec<Vec<BigRational>> = (0..m)
        .map(|row| {
            rays.iter()
                .map(|ray| BigRational::from_integer(ray.0[row].clone()))
                .collect()
        })
        .collect();
    let basis = linalg::kernel_basis(&mat);
    if basis.is_empty() {
        return Ok(None);
    }
    // want c with (B^T c)_k >= 1 for all k
    let nv = basis.len();
    let mut cs = Vec::with_capacity(r);
    for k in 0..r {
        let coeffs: Vec<BigRational> = basis.iter().map(|b| b[k].clone()).collect();
        cs.push(Constraint::new(coeffs, BigRational::one()));
    }
    let Some(c) = lp::feasible_point(&cs, nv) else {
        return Ok(None);
    };
    let mut y = vec![BigRational::zero(); r];
    for (b, ck) in basis.iter().zip(&c) {
        for k in 0..r {
            y[k] += &b[k] * ck;
        }
    }
    // scale to integers with gcd 1
    let mut lcm = BigInt::one();
    for v in &y {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = y.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if !g.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    debug_assert!(verify_relation(rays, &ints));
    Ok(Some(ints))
}

/// Exact check that `sum d_k rays_k = 0` with every `d_k > 0`.
pub fn verify_relation(rays: &[LatticeVector], d: &[BigInt]) -> bool {
    if rays.len() != d.len() || d.iter().any(|x| !x.is_positive()) {
        return false;
    }
    let m = rays[0].dim();
    (0..m).all(|row| {
        let mut acc = BigInt::zero();
        for (ray, dk) in rays.iter().zip(d) {
            acc += &ray.0[row] * dk;
        }
        acc.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn projective_line() -> Fan {
        Fan::from_ints(1, &[&[1], &[-1]], &[&[0], &[1]]).unwrap()
    }

    pub fn projective_plane() -> Fan {
        Fan::from_ints(
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[0, 2]],
        )
        .unwrap()
    }

    fn hirzebruch(a: i64) -> Fan {
        Fan::from_ints(
            2,
            &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        )
        .unwrap()
    }

    #[test]
    fn primitive_generator_divides_by_gcd() {
        let v = LatticeVector::from_ints(&[2, 4]);
        assert_eq!(
            primitive_generator(&v).unwrap(),
            LatticeVector::from_ints(&[1, 2])
        );
        let w = LatticeVector::from_ints(&[1, 0]);
        assert_eq!(primitive_generator(&w).unwrap(), w);
        let u = LatticeVector::from_ints(&[-3, 6, -9]);
        assert_eq!(
            primitive_generator(&u).unwrap(),
            LatticeVector::from_ints(&[-1, 2, -3])
        );
        assert!(primitive_generator(&LatticeVector::from_ints(&[0, 0])).is_err());
    }

    #[test]
    fn primitive_generator_is_idempotent() {
        for v in [
            LatticeVector::from_ints(&[6, -4]),
            LatticeVector::from_ints(&[5, 10, 20]),
            LatticeVector::from_ints(&[7]),
        ] {
            let p = primitive_generator(&v).unwrap();
            assert_eq!(primitive_generator(&p).unwrap(), p);
        }
    }

    #[test]
    fn strong_convexity() {
        let fan = Fan::from_ints(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        assert!(fan.is_strongly_convex(&Cone::new(vec![0, 1])));
        assert!(fan.is_strongly_convex(&Cone::new(vec![])));
        let line = Fan::from_ints(2, &[&[1, 0], &[-1, 0]], &[&[0, 1]]).unwrap();
        assert!(!line.is_strongly_convex(&Cone::new(vec![0, 1])));
    }

    #[test]
    fn point_membership_in_quadrant() {
        let fan = Fan::from_ints(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        let cone = Cone::new(vec![0, 1]);
        let q = |a: i64, b: i64| {
            vec![
                BigRational::from_integer(BigInt::from(a)),
                BigRational::from_integer(BigInt::from(b)),
            ]
        };
        assert!(fan.point_in_cone(&q(1, 1), &cone).unwrap());
        assert!(!fan.point_in_cone(&q(-1, 0), &cone).unwrap());
        assert!(fan.point_in_cone(&q(0, 0), &cone).unwrap());
    }

    #[test]
    fn cp2_fan_is_valid_smooth_complete() {
        let fan = projective_plane();
        assert!(fan.validate().unwrap().is_valid());
        assert!(fan.is_smooth());
        assert!(fan.is_complete());
        assert!(spans_lattice(fan.rays()));
    }

    #[test]
    fn misnested_cones_are_rejected_with_witness() {
        // Cone((1,0),(0,1)) contains the ray (1,2) of the second cone, so
        // the pair intersection strictly exceeds the shared face.
        let fan = Fan::from_ints(2, &[&[1, 0], &[1, 2], &[0, 1]], &[&[0, 2], &[1, 2]]).unwrap();
        let report = fan.validate().unwrap();
        assert!(!report.is_valid());
        let overlap = report.violations.iter().find_map(|v| match v {
            Violation::Overlap { witness, .. } => Some(witness.clone()),
            _ => None,
        });
        let w = overlap.expect("an overlap violation");
        // the witness must lie in both cones
        let c1 = Cone::new(vec![0, 2]);
        let c2 = Cone::new(vec![1, 2]);
        assert!(fan.point_in_cone(&w, &c1).unwrap());
        assert!(fan.point_in_cone(&w, &c2).unwrap());
        assert!(w.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn single_ray_fan_is_valid_but_incomplete() {
        let fan = Fan::from_ints(1, &[&[1]], &[&[0]]).unwrap();
        assert!(fan.validate().unwrap().is_valid());
        assert!(fan.is_smooth());
        assert!(!fan.is_complete());
    }

    #[test]
    fn smoothness_detects_index_two_cone() {
        let fan = Fan::from_ints(2, &[&[1, 0], &[1, 2]], &[&[0, 1]]).unwrap();
        assert!(fan.validate().unwrap().is_valid());
        assert!(!fan.is_smooth());
    }

    #[test]
    fn cp1_is_complete_in_dimension_one() {
        let fan = projective_line();
        assert!(fan.validate().unwrap().is_valid());
        assert!(fan.is_complete());
        assert!(fan.covers_sampled_directions(0, 64).unwrap());
    }

    #[test]
    fn lattice_span_detects_index_two_sublattice() {
        assert!(!spans_lattice(&[
            LatticeVector::from_ints(&[2, 0]),
            LatticeVector::from_ints(&[0, 1]),
        ]));
        assert!(spans_lattice(&[LatticeVector::from_ints(&[1])]));
        assert!(!spans_lattice(&[]));
    }

    #[test]
    fn hirzebruch_fans_pass_all_checks() {
        for a in 0..=3 {
            let fan = hirzebruch(a);
            assert!(fan.validate().unwrap().is_valid(), "a={a}");
            assert!(fan.is_smooth(), "a={a}");
            assert!(fan.is_complete(), "a={a}");
            assert!(spans_lattice(fan.rays()), "a={a}");
            let d = find_positive_relation(fan.rays()).unwrap().unwrap();
            assert!(verify_relation(fan.rays(), &d), "a={a}");
        }
    }

    #[test]
    fn positive_relations_of_projective_spaces() {
        let one = BigInt::one();
        assert_eq!(
            find_positive_relation(projective_line().rays()).unwrap(),
            Some(vec![one.clone(), one.clone()])
        );
        assert_eq!(
            find_positive_relation(projective_plane().rays()).unwrap(),
            Some(vec![one.clone(), one.clone(), one])
        );
        // independent rays admit no positive relation
        let rays = [
            LatticeVector::from_ints(&[1, 0]),
            LatticeVector::from_ints(&[0, 1]),
        ];
        assert_eq!(find_positive_relation(&rays).unwrap(), None);
    }

    #[test]
    fn relation_search_rejects_oversized_input() {
        let rays: Vec<LatticeVector> = (0..17).map(|_| LatticeVector::from_ints(&[1])).collect();
        assert!(matches!(
            find_positive_relation(&rays),
            Err(Error::RelationTooLarge { .. })
        ));
    }

    #[test]
    fn loader_primitivizes_and_reports() {
        let (fan, scaled) = Fan::from_json(
            r#"{"dim":2,"rays":[[2,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]}"#,
        )
        .unwrap();
        assert!(scaled);
        assert_eq!(fan.rays()[0], LatticeVector::from_ints(&[1, 0]));
        let again = Fan::from_json(&fan.to_json()).unwrap();
        assert!(!again.1);
    }

    #[test]
    fn sampled_directions_agree_with_wall_test_on_corpus() {
        let fans = [
            projective_line(),
            projective_plane(),
            hirzebruch(0),
            hirzebruch(1),
            hirzebruch(2),
            hirzebruch(3),
        ];
        for fan in &fans {
            if fan.is_complete() {
                assert!(fan.covers_sampled_directions(0, 128).unwrap());
            }
        }
    }
}
