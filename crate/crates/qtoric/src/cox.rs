//! Homogeneous-coordinate checks: membership in the complement of the
//! coordinate-subspace arrangement, the evaluation map of a polynomial
//! system, the ray-exponent subgroup of the torus, and the degree-relation
//! criterion with its sampled counterpart.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::fan::LatticeVector;
use crate::linalg;
use crate::num::GaussianRational;
use crate::polysys::{derivative_probe, PolySystem};

/// A point of the block space: `r` blocks of length `n` each.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockPoint {
    blocks: Vec<Vec<GaussianRational>>,
}

impl BlockPoint {
    pub fn new(blocks: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = blocks.first().map_or(0, Vec::len);
        if blocks.iter().any(|b| b.len() != n) {
            return Err(Error::ShapeError("ragged blocks".into()));
        }
        Ok(BlockPoint { blocks })
    }

    pub fn blocks(&self) -> &[Vec<GaussianRational>] {
        &self.blocks
    }

    /// Indices of blocks that vanish entirely.
    pub fn zero_pattern(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.iter().all(GaussianRational::is_zero))
            .map(|(i, _)| i)
            .collect()
    }
}

/// True when the point avoids the coordinate-subspace arrangement of the
/// complex: its zero pattern is a face (contains no minimal non-face).
pub fn in_complement(p: &BlockPoint, k: &SimplicialComplex) -> Result<bool> {
    if p.blocks.len() != k.num_vertices() {
        return Err(Error::ShapeError(format!(
            "point has {} blocks, complex has {} vertices",
            p.blocks.len(),
            k.num_vertices()
        )));
    }
    Ok(k.is_face(&p.zero_pattern()))
}

/// Evaluate the derivative probe of every polynomial of the system at a
/// real point: block `i` is `(f_i(x), f_i(x) + f_i'(x), ..)`. For a member
/// system the result lies in the arrangement complement at every real `x`.
pub fn evaluate_system(sys: &PolySystem, x: &GaussianRational) -> Result<BlockPoint> {
    let mut blocks = Vec::with_capacity(sys.polys.len());
    for f in &sys.polys {
        let probe = derivative_probe(f, sys.n)?;
        blocks.push(probe.iter().map(|p| p.eval(x)).collect());
    }
    BlockPoint::new(blocks)
}

/// A torus element: one nonzero scalar per ray.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusElement {
    entries: Vec<GaussianRational>,
}

impl TorusElement {
    pub fn new(entries: Vec<GaussianRational>) -> Result<Self> {
        if entries.iter().any(GaussianRational::is_zero) {
            return Err(Error::InvalidInput("torus entries must be nonzero".into()));
        }
        Ok(TorusElement { entries })
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn componentwise_mul(&self, other: &TorusElement) -> Result<TorusElement> {
        if self.entries.len() != other.entries.len() {
            return Err(Error::ShapeError("torus rank mismatch".into()));
        }
        TorusElement::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    pub fn inverse(&self) -> TorusElement {
        TorusElement {
            entries: self
                .entries
                .iter()
                .map(|a| a.inv().expect("entries are nonzero"))
                .collect(),
        }
    }
}

/// Membership in the ray-exponent subgroup: for every standard basis vector
/// `e_j`, the product of `mu_k` to the power `<ray_k, e_j>` is exactly 1.
pub fn in_group(mu: &TorusElement, rays: &[LatticeVector]) -> Result<bool> {
    if mu.entries.len() != rays.len() {
        return Err(Error::ShapeError(format!(
            "{} torus entries for {} rays",
            mu.entries.len(),
            rays.len()
        )));
    }
    if rays.is_empty() {
        return Ok(true);
    }
    let m = rays[0].dim();
    for j in 0..m {
        let mut prod = GaussianRational::one();
        for (mu_k, ray) in mu.entries.iter().zip(rays) {
            let e = i64::try_from(&ray.0[j])
                .map_err(|_| Error::RangeError("ray exponent exceeds i64".into()))?;
            prod = &prod * mu_k.pow(e)?;
        }
        if prod != GaussianRational::one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both verdicts of the degree-relation criterion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DegreeCriterion {
    /// `sum d_k ray_k = 0` exactly.
    pub symbolic: bool,
    /// The scaling element `(2^(d_1), .., 2^(d_r))` lies in the
    /// ray-exponent subgroup.
    pub sampled: bool,
}

/// Decide whether the degree vector pairs trivially against every ray
/// coordinate, both symbolically and through the sampled one-parameter
/// subgroup at base 2. The two verdicts always agree: the sampled product
/// telescopes to `2^<sum d_k ray_k, e_j>` and a power of 2 is 1 over Q
/// exactly when the exponent vanishes.
pub fn degree_criterion(rays: &[LatticeVector], degrees: &[usize]) -> Result<DegreeCriterion> {
    if rays.len() != degrees.len() {
        return Err(Error::ShapeError(format!(
            "{} degrees for {} rays",
            degrees.len(),
            rays.len()
        )));
    }
    let m = rays.first().map_or(0, LatticeVector::dim);
    let symbolic = (0..m).all(|j| {
        let mut acc = BigInt::zero();
        for (ray, &d) in rays.iter().zip(degrees) {
            acc += &ray.0[j] * BigInt::from(d);
        }
        acc.is_zero()
    });
    let two = GaussianRational::from_int(2);
    let mu = TorusElement::new(
        degrees
            .iter()
            .map(|&d| two.pow(d as i64).expect("positive power"))
            .collect(),
    )?;
    let sampled = in_group(&mu, rays)?;
    Ok(DegreeCriterion { symbolic, sampled })
}

/// Rank of the ray-exponent subgroup: `r - m`, after verifying that the
/// rays span the ambient space over Q.
pub fn group_rank(rays: &[LatticeVector]) -> Result<usize> {
    if rays.is_empty() {
        return Err(Error::NotSpanning);
    }
    let m = rays[0].dim();
    let mat: Vec<Vec<BigInt>> = rays.iter().map(|r| r.0.clone()).collect();
    if linalg::rank(&mat) != m {
        return Err(Error::NotSpanning);
    }
    Ok(rays.len() - m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonicPolynomial;
    use crate::polysys::Field;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn two_point_complex() -> SimplicialComplex {
        SimplicialComplex::from_min_non_faces(2, &[vec![0, 1]]).unwrap()
    }

    fn cp1_rays() -> Vec<LatticeVector> {
        vec![
            LatticeVector::from_ints(&[1]),
            LatticeVector::from_ints(&[-1]),
        ]
    }

    fn cp2_rays() -> Vec<LatticeVector> {
        vec![
            LatticeVector::from_ints(&[1, 0]),
            LatticeVector::from_ints(&[0, 1]),
            LatticeVector::from_ints(&[-1, -1]),
        ]
    }

    #[test]
    fn zero_pattern_picks_vanishing_blocks() {
        let p = BlockPoint::new(vec![
            vec![gr(0), gr(0)],
            vec![gr(1), gr(0)],
            vec![gr(0), gr(0)],
        ])
        .unwrap();
        assert_eq!(p.zero_pattern(), vec![0, 2]);
        let q = BlockPoint::new(vec![vec![gr(1)], vec![gr(2)]]).unwrap();
        assert!(q.zero_pattern().is_empty());
    }

    #[test]
    fn complement_membership_via_zero_pattern() {
        let k = two_point_complex();
        let zero = vec![gr(0)];
        let e = vec![gr(1)];
        let both = BlockPoint::new(vec![zero.clone(), zero.clone()]).unwrap();
        assert!(!in_complement(&both, &k).unwrap());
        let one = BlockPoint::new(vec![zero, e.clone()]).unwrap();
        assert!(in_complement(&one, &k).unwrap());
        let none = BlockPoint::new(vec![e.clone(), e]).unwrap();
        assert!(in_complement(&none, &k).unwrap());
    }

    #[test]
    fn evaluation_blocks_match_hand_computation() {
        // f = z^2, n = 2: block at 0 is (0, 0); at 1 it is (1, 3)
        let sys =
            PolySystem::new(Field::Real, 2, vec![MonicPolynomial::from_ints(&[0, 0])]).unwrap();
        let at0 = evaluate_system(&sys, &gr(0)).unwrap();
        assert_eq!(at0.blocks()[0], vec![gr(0), gr(0)]);
        assert_eq!(at0.zero_pattern(), vec![0]);
        let at1 = evaluate_system(&sys, &gr(1)).unwrap();
        assert_eq!(at1.blocks()[0], vec![gr(1), gr(3)]);
    }

    #[test]
    fn group_membership_on_projective_line() {
        let rays = cp1_rays();
        let mu = TorusElement::new(vec![gr(2), gr(2)]).unwrap();
        assert!(in_group(&mu, &rays).unwrap());
        let nu = TorusElement::new(vec![gr(2), gr(3)]).unwrap();
        assert!(!in_group(&nu, &rays).unwrap());
        let id = TorusElement::new(vec![gr(1), gr(1)]).unwrap();
        assert!(in_group(&id, &rays).unwrap());
        assert!(TorusElement::new(vec![gr(0), gr(1)]).is_err());
    }

    #[test]
    fn group_is_closed_under_product_and_inverse() {
        let rays = cp2_rays();
        // (a, a, a) is in the group for any nonzero a
        let a = TorusElement::new(vec![gr(3), gr(3), gr(3)]).unwrap();
        let b = TorusElement::new(vec![
            GaussianRational::from_parts(1, 2, 0, 1),
            GaussianRational::from_parts(1, 2, 0, 1),
            GaussianRational::from_parts(1, 2, 0, 1),
        ])
        .unwrap();
        assert!(in_group(&a, &rays).unwrap());
        assert!(in_group(&b, &rays).unwrap());
        assert!(in_group(&a.componentwise_mul(&b).unwrap(), &rays).unwrap());
        assert!(in_group(&a.inverse(), &rays).unwrap());
    }

    #[test]
    fn degree_criterion_agrees_on_examples() {
        let c = degree_criterion(&cp1_rays(), &[3, 3]).unwrap();
        assert!(c.symbolic && c.sampled);
        let c = degree_criterion(&cp1_rays(), &[2, 3]).unwrap();
        assert!(!c.symbolic && !c.sampled);
        let c = degree_criterion(&cp2_rays(), &[1, 1, 1]).unwrap();
        assert!(c.symbolic && c.sampled);
    }

    #[test]
    fn group_rank_of_corpus() {
        assert_eq!(group_rank(&cp1_rays()).unwrap(), 1);
        assert_eq!(group_rank(&cp2_rays()).unwrap(), 1);
        let hirzebruch = vec![
            LatticeVector::from_ints(&[1, 0]),
            LatticeVector::from_ints(&[0, 1]),
            LatticeVector::from_ints(&[-1, 2]),
            LatticeVector::from_ints(&[0, -1]),
        ];
        assert_eq!(group_rank(&hirzebruch).unwrap(), 2);
        // rank-deficient rays are rejected
        let flat = vec![
            LatticeVector::from_ints(&[1, 0]),
            LatticeVector::from_ints(&[-1, 0]),
        ];
        assert!(matches!(group_rank(&flat), Err(Error::NotSpanning)));
    }
}
