//! Fourier–Motzkin elimination over exact rationals with feasible-point
//! reconstruction by back-substitution. Small systems only: the callers
//! bound variable counts by the monomial-ideal generator count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// One inequality Σ cᵢ·xᵢ ≤ rhs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl Row {
    pub fn new(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Row { coeffs, rhs }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Scale by a positive rational so the first nonzero coefficient (or the
    /// rhs) has absolute value 1; canonical form for deduplication.
    fn normalized(&self) -> Row {
        let pivot = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .or(if self.rhs.is_zero() { None } else { Some(&self.rhs) });
        match pivot {
            None => self.clone(),
            Some(p) => {
                let scale = p.abs().recip();
                Row {
                    coeffs: self.coeffs.iter().map(|c| c * &scale).collect(),
                    rhs: &self.rhs * &scale,
                }
            }
        }
    }
}

fn dedup(rows: Vec<Row>) -> Vec<Row> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        if r.is_constant() && !r.rhs.is_negative() {
            continue; // trivially true
        }
        let key = r.normalized();
        if seen.insert(key.clone()) {
            out.push(key);
        }
    }
    out
}

/// Eliminate variable `k`: all pairs of a lower bound (c_k < 0) with an
/// upper bound (c_k > 0) combine into a k-free inequality.
fn eliminate_var(rows: &[Row], k: usize) -> Vec<Row> {
    let mut lower: Vec<&Row> = Vec::new();
    let mut upper: Vec<&Row> = Vec::new();
    let mut rest: Vec<Row> = Vec::new();
    for r in rows {
        if r.coeffs[k].is_positive() {
            upper.push(r);
        } else if r.coeffs[k].is_negative() {
            lower.push(r);
        } else {
            rest.push(r.clone());
        }
    }
    for lo in &lower {
        for up in &upper {
            // (-c_lo)·up + c_up·lo with both multipliers positive.
            let a = -lo.coeffs[k].clone();
            let b = up.coeffs[k].clone();
            let coeffs: Vec<BigRational> = lo
                .coeffs
                .iter()
                .zip(&up.coeffs)
                .map(|(cl, cu)| cl * &b + cu * &a)
                .collect();
            debug_assert!(coeffs[k].is_zero());
            rest.push(Row {
                coeffs,
                rhs: &lo.rhs * &b + &up.rhs * &a,
            });
        }
    }
    dedup(rest)
}

/// A feasible point of the system, or None when infeasible. The point picks
/// the tightest lower bound per variable during back-substitution, keeping
/// denominators small.
pub fn feasible_point(rows: &[Row], nvars: usize) -> Option<Vec<BigRational>> {
    let mut sys = dedup(rows.to_vec());
    let mut saved: Vec<Vec<Row>> = vec![Vec::new(); nvars];
    for k in (0..nvars).rev() {
        saved[k] = sys.clone();
        sys = eliminate_var(&sys, k);
    }
    for r in &sys {
        debug_assert!(r.is_constant());
        if r.rhs.is_negative() {
            return None;
        }
    }

    let mut point = vec![BigRational::zero(); nvars];
    for k in 0..nvars {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for r in &saved[k] {
            let ck = &r.coeffs[k];
            if ck.is_zero() {
                continue;
            }
            let mut s = r.rhs.clone();
            for (i, pi) in point.iter().enumerate().take(k) {
                s -= &r.coeffs[i] * pi;
            }
            let bound = &s / ck;
            if ck.is_positive() {
                hi = Some(match hi {
                    None => bound,
                    Some(h) => h.min(bound),
                });
            } else {
                lo = Some(match lo {
                    None => bound,
                    Some(l) => l.max(bound),
                });
            }
        }
        point[k] = match (lo, hi) {
            (Some(l), _) => l,
            (None, Some(h)) => h.min(BigRational::zero()),
            (None, None) => BigRational::zero(),
        };
    }
    Some(point)
}
