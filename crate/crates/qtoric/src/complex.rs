//! Abstract simplicial complexes on `{0, .., r-1}`, canonically represented
//! by their minimal non-faces.
//!
//! The minimal non-face list pins the complex: a subset is a face exactly
//! when it contains no minimal non-face. Power complexes, fans of power
//! complexes, integral homology, and the full-subcomplex decomposition of
//! polyhedral-product homology all live here. Vertex subsets are bitmask
//! encoded, so complexes are capped at 63 vertices and face enumeration at
//! desk scale.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fan::{Cone, Fan, LatticeVector};
use crate::linalg;

const MAX_VERTICES: usize = 63;
const MAX_FACES: usize = 1 << 20;

/// Simplicial complex stored by its inclusion-minimal non-faces (an
/// antichain of vertex-set bitmasks). Every singleton is a face.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    num_vertices: usize,
    min_non_faces: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    vertices: usize,
    min_non_faces: Vec<Vec<usize>>,
}

fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

fn set_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

impl SimplicialComplex {
    /// Build from explicit minimal non-faces; the list is reduced to an
    /// antichain and sorted canonically.
    pub fn from_min_non_faces(num_vertices: usize, mnf: &[Vec<usize>]) -> Result<Self> {
        if num_vertices > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{num_vertices} vertices exceeds the {MAX_VERTICES}-vertex cap"
            )));
        }
        for set in mnf {
            if let Some(&v) = set.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::ShapeError(format!(
                    "vertex {v} out of range for {num_vertices} vertices"
                )));
            }
            if set.len() < 2 {
                return Err(Error::InvalidInput(
                    "non-faces have at least two vertices: the empty set and all singletons are faces".into(),
                ));
            }
        }
        let mut masks: Vec<u64> = mnf.iter().map(|s| mask_of(s)).collect();
        masks.sort_unstable();
        masks.dedup();
        // keep only inclusion-minimal members
        let reduced: Vec<u64> = masks
            .iter()
            .filter(|&&m| !masks.iter().any(|&o| o != m && o & m == o))
            .copied()
            .collect();
        let mut c = SimplicialComplex {
            num_vertices,
            min_non_faces: reduced,
        };
        c.sort_canonical();
        Ok(c)
    }

    fn sort_canonical(&mut self) {
        self.min_non_faces
            .sort_by_key(|&m| (m.count_ones(), set_of(m)));
    }

    /// Full simplex: no non-faces at all.
    pub fn full_simplex(num_vertices: usize) -> Self {
        SimplicialComplex {
            num_vertices,
            min_non_faces: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        SimplicialComplex::from_min_non_faces(file.vertices, &file.min_non_faces)
    }

    pub fn to_json(&self) -> String {
        let file = ComplexFile {
            vertices: self.num_vertices,
            min_non_faces: self.min_non_faces(),
        };
        serde_json::to_string_pretty(&file).expect("complex serializes")
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Minimal non-faces as sorted vertex lists, smallest first.
    pub fn min_non_faces(&self) -> Vec<Vec<usize>> {
        self.min_non_faces.iter().map(|&m| set_of(m)).collect()
    }

    pub fn is_face_mask(&self, mask: u64) -> bool {
        self.min_non_faces.iter().all(|&t| t & mask != t)
    }

    pub fn is_face(&self, set: &[usize]) -> bool {
        self.is_face_mask(mask_of(set))
    }

    /// Minimum cardinality of a minimal non-face; undefined for the full
    /// simplex.
    pub fn min_non_face_size(&self) -> Result<usize> {
        self.min_non_faces
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .ok_or_else(|| Error::Undefined("the full simplex has no non-faces".into()))
    }

    /// All face bitmasks grouped by dimension (`faces[k]` holds the faces
    /// with k+1 vertices). The empty face is implicit. Errors out when the
    /// face count exceeds the desk-scale cap.
    pub fn faces_by_dim(&self) -> Result<Vec<Vec<u64>>> {
        let r = self.num_vertices;
        let mut by_dim: Vec<Vec<u64>> = Vec::new();
        let mut frontier: Vec<u64> = (0..r)
            .map(|v| 1u64 << v)
            .filter(|&m| self.is_face_mask(m))
            .collect();
        let mut total = frontier.len();
        while !frontier.is_empty() {
            by_dim.push(frontier.clone());
            let mut next = Vec::new();
            for &f in &frontier {
                let top = 63 - f.leading_zeros() as usize;
                for v in top + 1..r {
                    let cand = f | (1u64 << v);
                    if self.is_face_mask(cand) {
                        next.push(cand);
                    }
                }
            }
            total += next.len();
            if total > MAX_FACES {
                return Err(Error::TooLarge(format!(
                    "face enumeration exceeded {MAX_FACES} faces"
                )));
            }
            frontier = next;
        }
        Ok(by_dim)
    }

    /// Facets: faces that are maximal under inclusion.
    pub fn facets(&self) -> Result<Vec<Vec<usize>>> {
        if self.num_vertices == 0 {
            return Ok(vec![Vec::new()]);
        }
        let by_dim = self.faces_by_dim()?;
        let mut out = Vec::new();
        for faces in &by_dim {
            for &f in faces {
                let extendable = (0..self.num_vertices).any(|v| {
                    let b = 1u64 << v;
                    f & b == 0 && self.is_face_mask(f | b)
                });
                if !extendable {
                    out.push(set_of(f));
                }
            }
        }
        Ok(out)
    }

    /// Recompute the inclusion-minimal sets outside the face lattice by
    /// direct subset enumeration. Independent of the stored representation;
    /// used as a cross-check oracle.
    pub fn minimal_non_faces_by_enumeration(&self) -> Result<Vec<Vec<usize>>> {
        let r = self.num_vertices;
        if r > 24 {
            return Err(Error::TooLarge(format!(
                "enumeration over 2^{r} subsets refused"
            )));
        }
        let mut out: Vec<u64> = Vec::new();
        for mask in 1u64..(1u64 << r) {
            if self.is_face_mask(mask) {
                continue;
            }
            let mut minimal = true;
            for v in 0..r {
                let b = 1u64 << v;
                if mask & b != 0 && !self.is_face_mask(mask & !b) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(mask);
            }
        }
        out.sort_by_key(|&m| (m.count_ones(), set_of(m)));
        Ok(out.iter().map(|&m| set_of(m)).collect())
    }

    /// Full subcomplex on the vertex subset `mask`, relabeled to
    /// `{0, .., |mask|-1}`.
    fn restriction(&self, mask: u64) -> SimplicialComplex {
        let verts = set_of(mask);
        let pos: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut mnf = Vec::new();
        for &t in &self.min_non_faces {
            if t & mask == t {
                mnf.push(set_of(t).iter().map(|v| pos[v]).collect::<Vec<_>>());
            }
        }
        SimplicialComplex::from_min_non_faces(verts.len(), &mnf)
            .expect("restriction stays well-formed")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "complex on {} vertices, minimal non-faces ",
            self.num_vertices
        )?;
        if self.min_non_faces.is_empty() {
            return write!(f, "none (full simplex)");
        }
        let parts: Vec<String> = self
            .min_non_faces()
            .iter()
            .map(|s| {
                let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The complex of ray index sets spanning cones of the fan. Under the
/// simplicial restriction the faces are exactly the subsets of maximal-cone
/// generator sets.
pub fn underlying_complex(fan: &Fan) -> Result<SimplicialComplex> {
    let r = fan.num_rays();
    if r > 24 {
        return Err(Error::TooLarge(format!(
            "enumeration over 2^{r} subsets refused"
        )));
    }
    let cone_masks: Vec<u64> = fan
        .max_cones()
        .iter()
        .map(|c| mask_of(c.generator_indices()))
        .collect();
    let is_face = |mask: u64| cone_masks.iter().any(|&c| mask & c == mask);
    let mut mnf: Vec<Vec<usize>> = Vec::new();
    for mask in 1u64..(1u64 << r) {
        if is_face(mask) {
            continue;
        }
        let mut minimal = true;
        for v in 0..r {
            let b = 1u64 << v;
            if mask & b != 0 && !is_face(mask & !b) {
                minimal = false;
                break;
            }
        }
        if minimal {
            mnf.push(set_of(mask));
        }
    }
    SimplicialComplex::from_min_non_faces(r, &mnf)
}

/// Primitive collections of the fan: ray sets spanning no cone, all of whose
/// proper subsets span cones. These are the minimal non-faces of the
/// underlying complex.
pub fn primitive_collections(fan: &Fan) -> Result<Vec<Vec<usize>>> {
    Ok(underlying_complex(fan)?.min_non_faces())
}

/// The power complex on `[r] x [n]`: vertex `(i, j)` becomes index
/// `i * n + j`, and the minimal non-faces are the blown-up sets
/// `tau x [n]` over the minimal non-faces `tau` of `k`.
pub fn power_complex(k: &SimplicialComplex, n: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::RangeError("power requires n >= 1".into()));
    }
    let r = k.num_vertices();
    if r.saturating_mul(n) > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{r} x {n} vertices")));
    }
    let mnf: Vec<Vec<usize>> = k
        .min_non_faces()
        .iter()
        .map(|tau| {
            tau.iter()
                .flat_map(|&i| (0..n).map(move |j| i * n + j))
                .collect()
        })
        .collect();
    SimplicialComplex::from_min_non_faces(r * n, &mnf)
}

/// The fan whose rays are the block vectors (ray `i` placed in slot `j` of
/// `Z^(m*n)`) and whose maximal cones are spanned by the facets of the power
/// complex of the underlying complex. Ray `(i, j)` gets index `i * n + j`.
pub fn power_fan(fan: &Fan, n: usize) -> Result<Fan> {
    if n == 0 {
        return Err(Error::RangeError("power requires n >= 1".into()));
    }
    let m = fan.dim();
    let r = fan.num_rays();
    let mut rays = Vec::with_capacity(r * n);
    for i in 0..r {
        for j in 0..n {
            let mut v = vec![BigInt::zero(); m * n];
            for (t, x) in fan.rays()[i].0.iter().enumerate() {
                v[j * m + t] = x.clone();
            }
            rays.push(LatticeVector(v));
        }
    }
    let k = underlying_complex(fan)?;
    let kn = power_complex(&k, n)?;
    let cones = kn.facets()?.into_iter().map(Cone::new).collect();
    Ok(Fan::new(m * n, rays, cones)?.0)
}

/// Free rank and torsion divisors of one graded piece.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeRanks {
    pub degree: usize,
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Graded homology output: degrees strictly increasing, only nontrivial
/// degrees listed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedRanks {
    entries: Vec<DegreeRanks>,
}

impl GradedRanks {
    fn add(&mut self, degree: usize, rank: usize, torsion: Vec<BigInt>) {
        if rank == 0 && torsion.is_empty() {
            return;
        }
        match self.entries.iter_mut().find(|e| e.degree == degree) {
            Some(e) => {
                e.rank += rank;
                e.torsion.extend(torsion);
                e.torsion.sort();
            }
            None => {
                self.entries.push(DegreeRanks {
                    degree,
                    rank,
                    torsion,
                });
                self.entries.sort_by_key(|e| e.degree);
            }
        }
    }

    pub fn entries(&self) -> &[DegreeRanks] {
        &self.entries
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rank_at(&self, degree: usize) -> usize {
        self.entries
            .iter()
            .find(|e| e.degree == degree)
            .map_or(0, |e| e.rank)
    }

    pub fn torsion_at(&self, degree: usize) -> Vec<BigInt> {
        self.entries
            .iter()
            .find(|e| e.degree == degree)
            .map_or_else(Vec::new, |e| e.torsion.clone())
    }

    /// Graded ranks of a sphere of the given dimension.
    pub fn sphere(dim: usize) -> GradedRanks {
        let mut g = GradedRanks::default();
        g.add(dim, 1, Vec::new());
        g
    }
}

impl fmt::Display for GradedRanks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let mut s = format!("H_{}: Z^{}", e.degree, e.rank);
                if !e.torsion.is_empty() {
                    let t: Vec<String> = e.torsion.iter().map(|d| format!("Z/{d}")).collect();
                    s.push_str(&format!(" + {}", t.join(" + ")));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Reduced integral homology via integer Smith normal form of the augmented
/// simplicial boundary matrices.
pub fn reduced_homology(k: &SimplicialComplex) -> Result<GradedRanks> {
    let by_dim = k.faces_by_dim()?;
    let mut out = GradedRanks::default();
    if by_dim.is_empty() {
        return Ok(out);
    }
    let index: Vec<BTreeMap<u64, usize>> = by_dim
        .iter()
        .map(|faces| faces.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    // boundary_k maps C_k -> C_{k-1}; boundary_0 is the augmentation onto
    // the empty face, which makes the answer *reduced* homology
    let mut boundary_rank = vec![0usize; by_dim.len() + 1];
    let mut torsion_from = vec![Vec::<BigInt>::new(); by_dim.len() + 1];
    for (kdim, faces) in by_dim.iter().enumerate() {
        let cols = faces.len();
        let rows = if kdim == 0 { 1 } else { by_dim[kdim - 1].len() };
        let mut mat = vec![vec![BigInt::zero(); cols]; rows];
        for (ci, &face) in faces.iter().enumerate() {
            if kdim == 0 {
                mat[0][ci] = BigInt::one();
            } else {
                for (pos, &v) in set_of(face).iter().enumerate() {
                    let sub = face & !(1u64 << v);
                    let ri = index[kdim - 1][&sub];
                    mat[ri][ci] = if pos % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                }
            }
        }
        let divisors = linalg::smith_normal_form(&mat);
        boundary_rank[kdim] = divisors.iter().filter(|d| !d.is_zero()).count();
        torsion_from[kdim] = divisors
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
    }
    for (kdim, faces) in by_dim.iter().enumerate() {
        let cycles = faces.len() - boundary_rank[kdim];
        let boundaries = boundary_rank[kdim + 1];
        out.add(kdim, cycles - boundaries, torsion_from[kdim + 1].clone());
    }
    Ok(out)
}

/// Reduced homology of the polyhedral product of a ball/sphere pair over the
/// complex, via the full-subcomplex decomposition: every nonempty vertex
/// subset `J` contributes the reduced homology of the full subcomplex `K_J`
/// shifted up by `(ball_dim - 1) * |J| + 1`.
///
/// `ball_dim` must be `n` (real model) or `2n` (complex model). The shift
/// convention is pinned by the sphere sanity cases: two points with
/// `ball_dim = 2` give the 3-sphere, with `ball_dim = 4` the 7-sphere, and
/// the triangle boundary with `ball_dim = 2` the 5-sphere.
pub fn moment_angle_homology(
    k: &SimplicialComplex,
    n: usize,
    ball_dim: usize,
) -> Result<GradedRanks> {
    if n == 0 || (ball_dim != n && ball_dim != 2 * n) {
        return Err(Error::InvalidInput(format!(
            "ball dimension {ball_dim} must be n = {n} or 2n = {}",
            2 * n
        )));
    }
    let r = k.num_vertices();
    if r > 24 {
        return Err(Error::TooLarge(format!(
            "full-subcomplex enumeration over 2^{r} subsets refused"
        )));
    }
    let mut out = GradedRanks::default();
    for mask in 1u64..(1u64 << r) {
        let kj = k.restriction(mask);
        let h = reduced_homology(&kj)?;
        let shift = (ball_dim - 1) * (mask.count_ones() as usize) + 1;
        for e in h.entries() {
            out.add(e.degree + shift, e.rank, e.torsion.clone());
        }
    }
    Ok(out)
}
