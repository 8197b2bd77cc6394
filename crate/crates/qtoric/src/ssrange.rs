//! Truncated spectral-grid arithmetic: vanishing lines, auxiliary dimension
//! counts, and brute-force enumerations that independently reproduce the
//! closed-form stability and connectivity dimensions.
//!
//! Cells are never computed as groups; the grid only records which cells
//! the vanishing lines force to zero. That is all the stability argument
//! consumes, and it is enough to cross-check every closed form exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::polysys::{Field, StabilityParams};

/// What the vanishing lines say about one cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cell {
    /// Forced to vanish.
    Zero,
    /// Not constrained by the vanishing lines.
    PossiblyNonzero,
    /// The corner cell, always the integers.
    Integers,
}

impl Cell {
    pub fn marker(self) -> char {
        match self {
            Cell::Zero => '·',
            Cell::PossiblyNonzero => '?',
            Cell::Integers => 'Z',
        }
    }
}

/// Auxiliary dimension counts entering the vanishing-line bookkeeping.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AuxDimensions {
    /// Sum of the degree vector.
    pub total_degree: i64,
    /// Real dimension of the coordinate-subspace arrangement.
    pub arrangement_dim: i64,
    /// Dimension of the k-th configuration cell space.
    pub config_dim: i64,
    /// Rank of the k-th affine bundle over it.
    pub bundle_rank: i64,
}

/// The four auxiliary dimensions at filtration depth `k`, for a system with
/// `r` polynomials. `k` must satisfy `1 <= k <= floor(d_min / n)`.
pub fn aux_dimensions(p: &StabilityParams, r: usize, k: i64) -> Result<AuxDimensions> {
    if k < 1 || k > p.depth() {
        return Err(Error::RangeError(format!(
            "k = {k} outside 1..={}",
            p.depth()
        )));
    }
    let d_k = p.field.real_dim();
    let n = p.n as i64;
    let r = r as i64;
    let r_min = p.r_min as i64;
    let total: i64 = p.degrees.iter().map(|&d| d as i64).sum();
    let arrangement = n * d_k * (r - r_min);
    let config = k + k * n * d_k * (r - r_min);
    let bundle = d_k * (total - n * r * k) + k - 1;
    Ok(AuxDimensions {
        total_degree: total,
        arrangement_dim: arrangement,
        config_dim: config,
        bundle_rank: bundle,
    })
}

/// Vanishing-line verdict for the cell `(k, s)` of the truncated grid.
///
/// Out of the band `0 <= k <= depth + 1` everything vanishes; the corner
/// `(0, 0)` is the integers; inside the band the line with slope
/// `d(K) n r_min - 1` forces zeros, with the top row shifted down by one.
pub fn cell_state(p: &StabilityParams, k: i64, s: i64) -> Cell {
    let depth = p.depth();
    let slope = p.slope();
    if k < 0 || k >= depth + 2 {
        return Cell::Zero;
    }
    if k == 0 {
        return if s == 0 { Cell::Integers } else { Cell::Zero };
    }
    let bound = if k <= depth {
        (slope - 1) * k - 1
    } else {
        (slope - 1) * depth - 1
    };
    if s <= bound {
        Cell::Zero
    } else {
        Cell::PossiblyNonzero
    }
}

/// The truncated grid over `0 <= k <= depth + 1` and `0 <= s <= s_max`.
#[derive(Clone, Debug)]
pub struct E1Grid {
    pub params: StabilityParams,
    pub s_max: i64,
}

impl E1Grid {
    pub fn new(params: StabilityParams) -> Self {
        let s_max = (params.slope() - 1) * (params.depth() + 1) + 1;
        E1Grid { params, s_max }
    }

    pub fn depth(&self) -> i64 {
        self.params.depth()
    }

    pub fn cell(&self, k: i64, s: i64) -> Cell {
        cell_state(&self.params, k, s)
    }

    /// Rows from `s_max` down to 0, one marker per column `k`.
    pub fn rows(&self) -> Vec<(i64, String)> {
        let mut out = Vec::new();
        for s in (0..=self.s_max).rev() {
            let row: String = (0..=self.depth() + 1)
                .map(|k| self.cell(k, s).marker())
                .collect();
            out.push((s, row));
        }
        out
    }
}

impl fmt::Display for E1Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, row) in self.rows() {
            let spaced: String = row.chars().map(|c| format!("{c} ")).collect();
            writeln!(f, "{s:>4} | {}", spaced.trim_end())?;
        }
        writeln!(f, "     +-{}", "--".repeat((self.depth() + 2) as usize))?;
        let header: String = (0..=self.depth() + 1).map(|k| format!("{k} ")).collect();
        write!(f, "       {}", header.trim_end())
    }
}

/// One obstruction family of the frontier enumeration: for `t` strictly
/// increasing positive jumps `l_1 < .. < l_t` with `u + sum l_j = depth + 1`
/// and `u >= 0`, the reachable cells have
/// `v >= (slope - 1) depth - sum (l_j - 1)`.
#[derive(Clone, Debug)]
pub struct FrontierFamily {
    pub t: usize,
    /// Minimum of `v - u` over the family.
    pub min_offset: i64,
}

/// Enumerate the obstruction families and return the frontier minimum,
/// which reproduces the closed-form stability dimension: the minimum over
/// nonempty families of the per-family offset minimum, minus 2.
pub fn stable_range_by_enumeration(p: &StabilityParams) -> Result<i64> {
    Ok(frontier_families(p)?
        .iter()
        .map(|f| f.min_offset)
        .min()
        .expect("t = 1 is always nonempty")
        - 2)
}

/// The nonempty obstruction families, in increasing `t`.
pub fn frontier_families(p: &StabilityParams) -> Result<Vec<FrontierFamily>> {
    let depth = p.depth();
    if depth < 1 {
        return Err(Error::RangeError(
            "the truncated grid needs floor(d_min/n) >= 1".into(),
        ));
    }
    let slope = p.slope();
    let budget = depth + 1;
    let mut families = Vec::new();
    let mut t = 1usize;
    loop {
        let least_sum = (t as i64) * (t as i64 + 1) / 2;
        if least_sum > budget {
            break;
        }
        let mut min_offset: Option<i64> = None;
        let mut tuple = Vec::with_capacity(t);
        enumerate_tuples(budget, t, 1, &mut tuple, &mut |ls: &[i64]| {
            let sum: i64 = ls.iter().sum();
            let u = budget - sum;
            let v = (slope - 1) * depth - (sum - ls.len() as i64);
            let offset = v - u;
            min_offset = Some(min_offset.map_or(offset, |m| m.min(offset)));
        });
        families.push(FrontierFamily {
            t,
            min_offset: min_offset.expect("least_sum fits the budget"),
        });
        t += 1;
    }
    Ok(families)
}

fn enumerate_tuples(
    budget: i64,
    remaining: usize,
    next_min: i64,
    tuple: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    if remaining == 0 {
        emit(tuple);
        return;
    }
    let used: i64 = tuple.iter().sum();
    let mut l = next_min;
    // the l after this one must still fit strictly increasing
    loop {
        let tail_min: i64 = (1..remaining as i64).map(|j| l + j).sum();
        if used + l + tail_min > budget {
            break;
        }
        tuple.push(l);
        enumerate_tuples(budget, remaining - 1, l + 1, tuple, emit);
        tuple.pop();
        l += 1;
    }
}

/// Enumerate the per-column vanishing minima of the truncated grid and
/// return their minimum: the connectivity floor. Columns `1..=depth` give
/// `(slope - 2) k - 1`; the top column gives `(slope - 2) depth - 2`.
pub fn connectivity_by_enumeration(p: &StabilityParams) -> Result<i64> {
    let depth = p.depth();
    if depth < 1 {
        return Err(Error::RangeError(
            "the truncated grid needs floor(d_min/n) >= 1".into(),
        ));
    }
    let slope = p.slope();
    let mut best: Option<i64> = None;
    for k in 1..=depth + 1 {
        let (n0, eps) = if k <= depth { (k, 1) } else { (depth, 2) };
        let a = (slope - 2) * n0 - eps;
        best = Some(best.map_or(a, |b| b.min(a)));
    }
    Ok(best.expect("depth >= 1 gives at least one column"))
}

/// The two-case closed form for the connectivity floor:
/// `slope - 3` at depth >= 2 and `slope - 4` at depth 1.
pub fn connectivity_closed_form(p: &StabilityParams) -> Result<i64> {
    let depth = p.depth();
    if depth < 1 {
        return Err(Error::RangeError(
            "the closed form needs floor(d_min/n) >= 1".into(),
        ));
    }
    Ok(if depth >= 2 {
        p.slope() - 3
    } else {
        p.slope() - 4
    })
}

/// Parameters with a prescribed truncation depth, for grid sweeps.
pub fn params_at_depth(n: usize, r_min: usize, depth: usize, field: Field) -> StabilityParams {
    StabilityParams::new(vec![n * depth], n, r_min, field).expect("valid sweep parameters")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polysys::stability_dimension;

    #[test]
    fn aux_dimension_substitutions() {
        let p = StabilityParams::new(vec![2, 2], 1, 2, Field::Complex).unwrap();
        let a = aux_dimensions(&p, 2, 1).unwrap();
        assert_eq!(a.total_degree, 4);
        assert_eq!(a.arrangement_dim, 0);
        assert_eq!(a.config_dim, 1);
        assert_eq!(a.bundle_rank, 4);

        let p = StabilityParams::new(vec![3, 3, 3], 1, 3, Field::Complex).unwrap();
        let a = aux_dimensions(&p, 3, 2).unwrap();
        assert_eq!(a.total_degree, 9);
        assert_eq!(a.arrangement_dim, 0);
        assert_eq!(a.config_dim, 2);
        assert_eq!(a.bundle_rank, 7);

        let p = StabilityParams::new(vec![2, 2], 1, 2, Field::Real).unwrap();
        let a = aux_dimensions(&p, 2, 1).unwrap();
        assert_eq!(a.bundle_rank, 2);

        assert!(aux_dimensions(&p, 2, 0).is_err());
        assert!(aux_dimensions(&p, 2, 3).is_err());
    }

    #[test]
    fn cell_states_on_the_lines() {
        let p = StabilityParams::new(vec![3], 1, 2, Field::Complex).unwrap();
        assert_eq!(cell_state(&p, -1, 5), Cell::Zero);
        assert_eq!(cell_state(&p, 0, 0), Cell::Integers);
        assert_eq!(cell_state(&p, 0, 3), Cell::Zero);
        // slope 4: column 1 vanishes through s = 2
        assert_eq!(cell_state(&p, 1, 2), Cell::Zero);
        assert_eq!(cell_state(&p, 1, 3), Cell::PossiblyNonzero);
        // truncation row k = depth + 1 = 4 vanishes through s = 3*3 - 1 = 8
        assert_eq!(cell_state(&p, 4, 8), Cell::Zero);
        assert_eq!(cell_state(&p, 4, 9), Cell::PossiblyNonzero);
        assert_eq!(cell_state(&p, 5, 100), Cell::Zero);
    }

    #[test]
    fn frontier_enumeration_matches_hand_example() {
        // slope 4, depth 3: families t = 1 and t = 2, minimum offset 6
        let p = StabilityParams::new(vec![3], 1, 2, Field::Complex).unwrap();
        let fams = frontier_families(&p).unwrap();
        assert_eq!(fams[0].t, 1);
        assert_eq!(fams[0].min_offset, 6);
        assert_eq!(stable_range_by_enumeration(&p).unwrap(), 4);
        assert_eq!(stability_dimension(&p).value, 4);
    }

    #[test]
    fn frontier_examples_from_both_fields() {
        let p = StabilityParams::new(vec![4], 2, 2, Field::Complex).unwrap();
        assert_eq!(stable_range_by_enumeration(&p).unwrap(), 10);
        let p = StabilityParams::new(vec![2], 1, 3, Field::Real).unwrap();
        assert_eq!(stable_range_by_enumeration(&p).unwrap(), 0);
    }

    #[test]
    fn family_offsets_follow_the_affine_law() {
        for field in [Field::Complex, Field::Real] {
            for n in 1..=3 {
                for r_min in 2..=5 {
                    for depth in 1..=6 {
                        let p = params_at_depth(n, r_min, depth, field);
                        let slope = p.slope();
                        for fam in frontier_families(&p).unwrap() {
                            assert_eq!(
                                fam.min_offset,
                                (slope - 2) * depth as i64 + fam.t as i64 - 1,
                                "n={n} r_min={r_min} depth={depth} t={}",
                                fam.t
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn connectivity_enumeration_examples() {
        let p = params_at_depth(2, 2, 2, Field::Complex);
        assert_eq!(connectivity_by_enumeration(&p).unwrap(), 5);
        let p = params_at_depth(2, 2, 1, Field::Complex);
        assert_eq!(connectivity_by_enumeration(&p).unwrap(), 4);
        let p = params_at_depth(1, 4, 2, Field::Real);
        assert_eq!(connectivity_by_enumeration(&p).unwrap(), 1);
    }

    #[test]
    fn oracle_zero_region_is_zero_in_the_grid() {
        for field in [Field::Complex, Field::Real] {
            for n in 1..=2 {
                for r_min in 2..=4 {
                    for depth in 1..=4 {
                        let p = params_at_depth(n, r_min, depth, field);
                        let m0 = connectivity_by_enumeration(&p).unwrap();
                        let grid = E1Grid::new(p.clone());
                        for k in 0..=grid.depth() + 1 {
                            for s in 0..=grid.s_max {
                                if s - k <= m0 && (k, s) != (0, 0) {
                                    assert_eq!(
                                        grid.cell(k, s),
                                        Cell::Zero,
                                        "cell ({k},{s}) inside the floor"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn grid_rendering_is_stable() {
        let p = StabilityParams::new(vec![2], 1, 2, Field::Complex).unwrap();
        let grid = E1Grid::new(p);
        let rows = grid.rows();
        // corner row carries the integer marker
        let (s, last) = rows.last().unwrap();
        assert_eq!(*s, 0);
        assert!(last.starts_with('Z'));
    }
}
