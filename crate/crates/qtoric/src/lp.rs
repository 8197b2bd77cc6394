//! Exact rational linear feasibility via Fourier-Motzkin elimination.
//!
//! Systems are conjunctions of constraints `sum coeffs[j] * x[j] >= rhs`.
//! Elimination keeps everything in Q; a feasible point is reconstructed by
//! back-substitution, always choosing the lowest admissible value (this keeps
//! witnesses small and canonical).

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// `sum coeffs[j] * x[j] >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Constraint { coeffs, rhs }
    }

    /// Scale so the first nonzero coefficient (or the rhs) has absolute
    /// value 1. Keeps the constraint set small under deduplication.
    fn normalized(mut self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .or_else(|| (!self.rhs.is_zero()).then(|| self.rhs.clone()));
        if let Some(l) = lead {
            let s = l.abs();
            for c in &mut self.coeffs {
                *c = &*c / &s;
            }
            self.rhs = &self.rhs / &s;
        }
        self
    }

    fn key(&self) -> String {
        let mut parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.push(self.rhs.to_string());
        parts.join("|")
    }
}

/// Equality `sum coeffs[j] * x[j] = rhs` as a pair of inequalities.
pub fn equality(coeffs: Vec<BigRational>, rhs: BigRational) -> [Constraint; 2] {
    let neg: Vec<BigRational> = coeffs.iter().map(|c| -c.clone()).collect();
    [
        Constraint::new(coeffs, rhs.clone()),
        Constraint::new(neg, -rhs),
    ]
}

/// Find a rational point satisfying every constraint, or `None` when the
/// system is infeasible.
pub fn feasible_point(constraints: &[Constraint], num_vars: usize) -> Option<Vec<BigRational>> {
    let cs: Vec<Constraint> = constraints
        .iter()
        .cloned()
        .map(Constraint::normalized)
        .collect();
    solve(cs, num_vars)
}

fn solve(constraints: Vec<Constraint>, num_vars: usize) -> Option<Vec<BigRational>> {
    if num_vars == 0 {
        return constraints
            .iter()
            .all(|c| !c.rhs.is_positive())
            .then(Vec::new);
    }
    let var = num_vars - 1;

    let mut lower = Vec::new(); // x >= bound-expr
    let mut upper = Vec::new(); // x <= bound-expr
    let mut rest = Vec::new();
    for c in &constraints {
        let a = &c.coeffs[var];
        if a.is_zero() {
            let mut cc = c.clone();
            cc.coeffs.truncate(var);
            rest.push(cc);
        } else {
            // a*x + <tail> >= rhs  =>  x >=/<= (rhs - <tail>) / a
            let inv = BigRational::from_integer(1.into()) / a;
            let tail: Vec<BigRational> = c.coeffs[..var].iter().map(|t| -(t * &inv)).collect();
            let bound = Constraint::new(tail, &c.rhs * &inv);
            // the bound expression is (rhs - tail.t)/a either way; dividing
            // by a negative `a` only flips the inequality direction
            if a.is_positive() {
                lower.push(bound);
            } else {
                upper.push(bound);
            }
        }
    }
    // combine every lower bound with every upper bound: E_up - E_lo >= 0
    let mut reduced = rest;
    let mut seen: BTreeSet<String> = reduced.iter().map(|c| c.key()).collect();
    for lo in &lower {
        for up in &upper {
            // up bound expr >= lo bound expr
            let coeffs: Vec<BigRational> = up
                .coeffs
                .iter()
                .zip(&lo.coeffs)
                .map(|(u, l)| l - u)
                .collect();
            // lo.rhs - up.rhs + sum (lo.c - up.c) t <= 0, rewritten >= form:
            let c = Constraint::new(
                coeffs.iter().map(|x| -x.clone()).collect(),
                &lo.rhs - &up.rhs,
            )
            .normalized();
            if seen.insert(c.key()) {
                reduced.push(c);
            }
        }
    }

    let partial = solve(reduced, var)?;

    // back-substitute: bounds are expressions rhs + sum coeffs * t
    let eval = |b: &Constraint| -> BigRational {
        let mut v = b.rhs.clone();
        for (c, t) in b.coeffs.iter().zip(&partial) {
            v += c * t;
        }
        v
    };
    let max_lower = lower.iter().map(&eval).max();
    let min_upper = upper.iter().map(&eval).min();
    let value = match (max_lower, min_upper) {
        (Some(l), Some(u)) => {
            if l > u {
                return None;
            }
            l
        }
        (Some(l), None) => l,
        (None, Some(u)) => u,
        (None, None) => BigRational::zero(),
    };
    let mut point = partial;
    point.push(value);
    Some(point)
}
