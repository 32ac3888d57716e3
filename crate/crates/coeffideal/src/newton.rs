//! Integral closure of monomial ideals and their powers via Newton
//! polyhedra: a monomial x^a lies in the closure of I^k exactly when a is a
//! lattice point of k·NP(I), NP(I) = conv{generator exponents} + ℝⁿ₊.
//! Membership is decided by exact rational feasibility (Fourier–Motzkin) and
//! double-checked by the valuative power test x^{ma} ∈ I^m.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec;
use crate::field::Field;
use crate::fm::{feasible_point, Row};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{Monomial, RingContext};

/// Monomial ideal held as the antichain of its minimal generator exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal<F: Field> {
    ring: Arc<RingContext<F>>,
    gens: Vec<Monomial>,
}

/// Exact witness that a ∈ k·NP(I): weights λ over the generators with
/// Σλ = 1 and Σλⱼvⱼ + slack = a/k, every entry nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonCertificate {
    pub lambdas: Vec<BigRational>,
    pub slack: Vec<BigRational>,
    pub dilation: u32,
}

impl NewtonCertificate {
    /// Re-verify the defining identity by exact arithmetic.
    pub fn verify(&self, a: &Monomial, gens: &[Monomial]) -> bool {
        if self.lambdas.len() != gens.len() || self.dilation == 0 {
            return false;
        }
        let sum: BigRational = self.lambdas.iter().fold(BigRational::zero(), |s, l| s + l);
        if !sum.is_one() {
            return false;
        }
        if self.lambdas.iter().any(|l| l.is_negative()) {
            return false;
        }
        if self.slack.iter().any(|s| s.is_negative()) {
            return false;
        }
        let k = BigRational::from_integer(BigInt::from(self.dilation));
        for i in 0..a.len() {
            let mut lhs = self.slack[i].clone();
            for (l, v) in self.lambdas.iter().zip(gens) {
                lhs += l * BigRational::from_integer(BigInt::from(v.exponents()[i]));
            }
            let target = BigRational::from_integer(BigInt::from(a.exponents()[i])) / &k;
            if lhs != target {
                return false;
            }
        }
        true
    }

    /// Least common multiple of the weight denominators: the m for which the
    /// power test x^{ma} ∈ I^m is guaranteed to witness membership.
    pub fn denominator_lcm(&self) -> BigInt {
        self.lambdas
            .iter()
            .fold(BigInt::one(), |acc, l| acc.lcm(l.denom()))
    }
}

impl<F: Field> MonomialIdeal<F> {
    pub fn new(ring: &Arc<RingContext<F>>, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidArgument(
                "monomial ideal needs at least one generator".into(),
            ));
        }
        for g in &gens {
            if g.len() != ring.dimension() {
                return Err(Error::InvalidArgument(
                    "generator exponent length mismatch".into(),
                ));
            }
        }
        Ok(MonomialIdeal {
            ring: ring.clone(),
            gens: antichain(gens),
        })
    }

    /// Accepts exactly the ideals whose generators are single terms.
    pub fn from_ideal(ideal: &Ideal<F>) -> Result<Self> {
        let mut gens = Vec::with_capacity(ideal.gens().len());
        for g in ideal.gens() {
            let terms = g.terms();
            if terms.len() != 1 {
                return Err(Error::InvalidArgument(format!(
                    "not a monomial ideal: generator {}",
                    g.render()
                )));
            }
            gens.push(terms[0].0.clone());
        }
        MonomialIdeal::new(ideal.ring(), gens)
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal::from_monomials(&self.ring, self.gens.clone()).expect("nonempty")
    }

    pub fn ring(&self) -> &Arc<RingContext<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn render(&self) -> String {
        self.to_ideal().render()
    }

    /// Plain membership x^a ∈ I: divisibility by some generator.
    pub fn member(&self, a: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    /// x^a ∈ I^m: some multiset of m generators has exponent sum ≤ a.
    pub fn power_member(&self, a: &Monomial, m: u32) -> bool {
        if m == 0 {
            return true;
        }
        let budget: Vec<u32> = a.exponents().to_vec();
        dfs_counts(&self.gens, 0, m, &mut vec![0u32; a.len()], &budget)
    }

    /// Membership of a in the dilated polyhedron k·NP(I), with certificate.
    pub fn np_member(&self, a: &Monomial, k: u32) -> Result<Option<NewtonCertificate>> {
        if a.len() != self.ring.dimension() {
            return Err(Error::InvalidArgument("exponent length mismatch".into()));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("dilation must be positive".into()));
        }
        let s = self.gens.len();
        let n = a.len();

        // Quick accept: a dominates a single dilated generator.
        for (j, v) in self.gens.iter().enumerate() {
            if v.pow(k).divides(a) {
                let mut lambdas = vec![BigRational::zero(); s];
                lambdas[j] = BigRational::one();
                let slack: Vec<BigRational> = (0..n)
                    .map(|i| {
                        BigRational::new(
                            BigInt::from(a.exponents()[i] - k * v.exponents()[i]),
                            BigInt::from(k),
                        )
                    })
                    .collect();
                return Ok(Some(NewtonCertificate {
                    lambdas,
                    slack,
                    dilation: k,
                }));
            }
        }
        // Quick reject: total degree below the cheapest vertex.
        let min_deg = self.gens.iter().map(|g| g.degree()).min().unwrap_or(0);
        if a.degree() < k * min_deg {
            return Ok(None);
        }

        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        let mut rows: Vec<Row> = Vec::with_capacity(s + n + 2);
        for j in 0..s {
            let mut c = vec![BigRational::zero(); s];
            c[j] = q(-1);
            rows.push(Row::new(c, BigRational::zero()));
        }
        rows.push(Row::new(vec![q(1); s], q(1)));
        rows.push(Row::new(vec![q(-1); s], q(-1)));
        for i in 0..n {
            let c: Vec<BigRational> = self
                .gens
                .iter()
                .map(|v| q(v.exponents()[i] as i64))
                .collect();
            let rhs = BigRational::new(BigInt::from(a.exponents()[i]), BigInt::from(k));
            rows.push(Row::new(c, rhs));
        }

        let Some(lambdas) = feasible_point(&rows, s) else {
            return Ok(None);
        };
        let kq = BigRational::from_integer(BigInt::from(k));
        let slack: Vec<BigRational> = (0..n)
            .map(|i| {
                let mut v = BigRational::from_integer(BigInt::from(a.exponents()[i])) / &kq;
                for (l, g) in lambdas.iter().zip(&self.gens) {
                    v -= l * BigRational::from_integer(BigInt::from(g.exponents()[i]));
                }
                v
            })
            .collect();
        let cert = NewtonCertificate {
            lambdas,
            slack,
            dilation: k,
        };
        assert!(
            cert.verify(a, &self.gens),
            "Newton certificate failed exact re-verification"
        );
        Ok(Some(cert))
    }

    /// Valuative one-sided oracle: x^a ∈ closure(I) is witnessed by
    /// x^{ma} ∈ I^m for some m ≤ m_max. `false` certifies only "not
    /// witnessed up to m_max".
    pub fn power_test_oracle(&self, a: &Monomial, m_max: u32) -> bool {
        (1..=m_max).any(|m| self.power_member(&a.pow(m), m))
    }

    /// The exponent box ∏ᵢ [0, k·maxⱼ vⱼᵢ] that provably contains every
    /// minimal generator of the closure of I^k.
    pub fn closure_box(&self, k: u32) -> Vec<u32> {
        (0..self.ring.dimension())
            .map(|i| k * self.gens.iter().map(|g| g.exponents()[i]).max().unwrap_or(0))
            .collect()
    }

    /// Integral closure of I^k as a monomial ideal: the antichain of minimal
    /// lattice points of k·NP(I), by box enumeration.
    pub fn closure_power(&self, k: u32, box_budget: u64) -> Result<MonomialIdeal<F>> {
        self.closure_power_impl(k, box_budget, true)
    }

    /// Sequential twin of [`closure_power`]; baseline for the bench suite.
    pub fn closure_power_seq(&self, k: u32, box_budget: u64) -> Result<MonomialIdeal<F>> {
        self.closure_power_impl(k, box_budget, false)
    }

    fn closure_power_impl(&self, k: u32, box_budget: u64, parallel: bool) -> Result<MonomialIdeal<F>> {
        if k == 0 {
            return Err(Error::InvalidArgument("closure power must be positive".into()));
        }
        let dims = self.closure_box(k);
        let mut total: u64 = 1;
        for &d in &dims {
            total = total.saturating_mul(d as u64 + 1);
            if total > box_budget {
                return Err(Error::Budget(format!(
                    "closure enumeration box of {total}+ points exceeds budget {box_budget}"
                )));
            }
        }
        let points = enumerate_box(&dims);
        let verdicts: Vec<bool> = if parallel {
            exec::map(&points, |a| {
                self.np_member(a, k).expect("dimensions agree").is_some()
            })
        } else {
            exec::map_seq(&points, |a| {
                self.np_member(a, k).expect("dimensions agree").is_some()
            })
        };
        let mut members: Vec<Monomial> = points
            .into_iter()
            .zip(verdicts)
            .filter(|(_, ok)| *ok)
            .map(|(a, _)| a)
            .collect();
        members.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
        let mut minimal: Vec<Monomial> = Vec::new();
        for a in members {
            if !minimal.iter().any(|m| m.divides(&a)) {
                minimal.push(a);
            }
        }
        MonomialIdeal::new(&self.ring, minimal)
    }

    /// Height of the monomial ideal: the least cardinality of a variable set
    /// meeting the support of every generator (brute force; monomial minimal
    /// primes are generated by variables).
    pub fn height(&self) -> usize {
        let n = self.ring.dimension();
        let mut best = n;
        'mask: for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size >= best {
                continue;
            }
            for g in &self.gens {
                if !g.support().any(|i| mask >> i & 1 == 1) {
                    continue 'mask;
                }
            }
            best = size;
        }
        best
    }
}

/// Generators as polynomials, mapped into `ring`.
pub fn monomial_polys<F: Field>(ideal: &MonomialIdeal<F>) -> Vec<Polynomial<F>> {
    ideal
        .gens()
        .iter()
        .map(|m| Polynomial::monomial(ideal.ring(), m.clone()))
        .collect()
}

fn antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn enumerate_box(dims: &[u32]) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; dims.len()];
    loop {
        out.push(Monomial::new(cur.clone()));
        let mut i = dims.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < dims[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Is there a multiset of exactly `m_left` generators (indices ≥ j) whose
/// exponent sum, added to `acc`, stays within `budget` componentwise?
fn dfs_counts(
    gens: &[Monomial],
    j: usize,
    m_left: u32,
    acc: &mut Vec<u32>,
    budget: &[u32],
) -> bool {
    if m_left == 0 {
        return true;
    }
    if j == gens.len() {
        return false;
    }
    let v = gens[j].exponents();
    // Max copies of generator j that still fit the remaining budget.
    let mut cmax = m_left;
    for i in 0..budget.len() {
        if v[i] > 0 {
            let room = (budget[i] - acc[i]) / v[i];
            cmax = cmax.min(room);
        }
        if budget[i] < acc[i] {
            return false;
        }
    }
    for c in (0..=cmax).rev() {
        for i in 0..acc.len() {
            acc[i] += v[i] * c;
        }
        let fits = acc.iter().zip(budget).all(|(a, b)| a <= b);
        if fits && dfs_counts(gens, j + 1, m_left - c, acc, budget) {
            for i in 0..acc.len() {
                acc[i] -= v[i] * c;
            }
            return true;
        }
        for i in 0..acc.len() {
            acc[i] -= v[i] * c;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn ring2() -> Arc<RingContext<Rationals>> {
        RingContext::new(Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    fn mi(gens: &[&[u32]]) -> MonomialIdeal<Rationals> {
        MonomialIdeal::new(&ring2(), gens.iter().map(|g| mono(g)).collect()).unwrap()
    }

    #[test]
    fn np_member_square_generators() {
        let i = mi(&[&[2, 0], &[0, 2]]);
        // (1,1) = ½(2,0) + ½(0,2), zero slack.
        let cert = i.np_member(&mono(&[1, 1]), 1).unwrap().unwrap();
        assert!(cert.verify(&mono(&[1, 1]), i.gens()));
        assert_eq!(cert.denominator_lcm(), BigInt::from(2));
        // (1,0) is outside.
        assert!(i.np_member(&mono(&[1, 0]), 1).unwrap().is_none());
        // A generator is inside with indicator weights.
        let g = i.np_member(&mono(&[2, 0]), 1).unwrap().unwrap();
        assert_eq!(g.lambdas[0], BigRational::one());
    }

    #[test]
    fn closure_of_squares() {
        let i = mi(&[&[2, 0], &[0, 2]]);
        let c = i.closure_power(1, 10_000).unwrap();
        assert_eq!(c.gens(), &[mono(&[0, 2]), mono(&[1, 1]), mono(&[2, 0])]);
        // Maximal-ideal powers are integrally closed.
        let m = mi(&[&[1, 0], &[0, 1]]);
        assert_eq!(m.closure_power(1, 10_000).unwrap(), m);
        // Cubes: (2,1) = ⅔(3,0) + ⅓(0,3).
        let cu = mi(&[&[3, 0], &[0, 3]]);
        let cc = cu.closure_power(1, 10_000).unwrap();
        assert_eq!(
            cc.gens(),
            &[mono(&[0, 3]), mono(&[1, 2]), mono(&[2, 1]), mono(&[3, 0])]
        );
    }

    #[test]
    fn power_test_examples() {
        let i = mi(&[&[2, 0], &[0, 2]]);
        // m=2: (2,2) ≥ (2,0)+(0,2).
        assert!(i.power_test_oracle(&mono(&[1, 1]), 2));
        // Generators pass at m=1.
        assert!(i.power_test_oracle(&mono(&[2, 0]), 1));
        // Degree count: m·1 < 2m for all m.
        assert!(!i.power_test_oracle(&mono(&[1, 0]), 10));
    }

    #[test]
    fn closure_is_idempotent_and_contains_ideal() {
        for gens in [vec![mono(&[2, 0]), mono(&[0, 2])], vec![mono(&[3, 1]), mono(&[1, 4])]] {
            let i = MonomialIdeal::new(&ring2(), gens).unwrap();
            let c = i.closure_power(1, 10_000).unwrap();
            let cc = c.closure_power(1, 10_000).unwrap();
            assert_eq!(c, cc);
            for g in i.gens() {
                assert!(c.member(g));
            }
        }
    }

    #[test]
    fn closure_monotone() {
        let small = mi(&[&[3, 0], &[0, 3]]);
        let big = mi(&[&[2, 0], &[0, 2]]); // contains `small`
        let cs = small.closure_power(1, 10_000).unwrap();
        let cb = big.closure_power(1, 10_000).unwrap();
        for g in cs.gens() {
            assert!(cb.member(g), "monotonicity violated at {g:?}");
        }
    }

    #[test]
    fn closure_powers_multiply() {
        // closure(I)^k ⊆ closure(I^k) for k ≤ 3.
        let i = mi(&[&[2, 0], &[1, 1], &[0, 3]]);
        let c1 = i.closure_power(1, 10_000).unwrap();
        for k in 2u32..=3 {
            let ck = i.closure_power(k, 100_000).unwrap();
            // generators of closure(I)^k are k-fold sums of c1 generators
            let mut sums = vec![Monomial::unit(2)];
            for _ in 0..k {
                let mut next = Vec::new();
                for s in &sums {
                    for g in c1.gens() {
                        next.push(s.mul(g));
                    }
                }
                sums = next;
            }
            for s in sums {
                assert!(ck.member(&s));
            }
        }
    }

    #[test]
    fn oracle_agreement_on_box() {
        let i = mi(&[&[2, 0], &[0, 2]]);
        let dims = i.closure_box(1);
        for a in enumerate_box(&dims) {
            match i.np_member(&a, 1).unwrap() {
                Some(cert) => {
                    let m = cert.denominator_lcm().to_u32().expect("small");
                    assert!(
                        i.power_test_oracle(&a, m),
                        "positive direction disagreement at {a:?}"
                    );
                }
                None => {
                    assert!(
                        !i.power_test_oracle(&a, 12),
                        "negative direction disagreement at {a:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn minimal_generators_stay_inside_box() {
        // Enumerate a box one larger per side; the minimal generators must
        // coincide with the standard-box computation.
        let i = mi(&[&[2, 1], &[0, 3]]);
        let k = 2;
        let std_closure = i.closure_power(k, 100_000).unwrap();
        let dims: Vec<u32> = i.closure_box(k).iter().map(|d| d + 1).collect();
        let mut members: Vec<Monomial> = enumerate_box(&dims)
            .into_iter()
            .filter(|a| i.np_member(a, k).unwrap().is_some())
            .collect();
        members.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
        let mut minimal: Vec<Monomial> = Vec::new();
        for a in members {
            if !minimal.iter().any(|m| m.divides(&a)) {
                minimal.push(a);
            }
        }
        assert_eq!(minimal, std_closure.gens());
    }

    #[test]
    fn antichain_reduction_and_validation() {
        let i = mi(&[&[1, 0], &[2, 0], &[1, 1]]);
        assert_eq!(i.gens(), &[mono(&[1, 0])]);
        assert!(MonomialIdeal::new(&ring2(), vec![]).is_err());
        let r = ring2();
        let x = Polynomial::<Rationals>::var(&r, 0);
        let y = Polynomial::<Rationals>::var(&r, 1);
        let no = Ideal::new(&r, vec![x.add(&y)]).unwrap();
        assert!(MonomialIdeal::from_ideal(&no).is_err());
    }

    #[test]
    fn budget_error_on_huge_box() {
        let i = mi(&[&[6, 0], &[0, 6]]);
        assert!(matches!(
            i.closure_power(3, 10),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let i = mi(&[&[3, 1], &[1, 4], &[5, 0]]);
        assert_eq!(
            i.closure_power(2, 100_000).unwrap(),
            i.closure_power_seq(2, 100_000).unwrap()
        );
    }

    #[test]
    fn heights() {
        let i = mi(&[&[2, 0], &[0, 2]]); // m-primary: height 2
        assert_eq!(i.height(), 2);
        let p = mi(&[&[1, 1]]); // (xy): height 1
        assert_eq!(p.height(), 1);
    }
}
