//! Sparse multivariate polynomials with exact coefficients.
//!
//! Canonical form: terms sorted descending under grevlex with no zero
//! coefficients, so polynomial equality is structural equality.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ring::{Monomial, MonomialOrder, RingContext};

#[derive(Debug, Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<RingContext<F>>,
    /// Sorted descending under grevlex; no zero coefficients.
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.same_ring(other)
    }
}
impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Hash for Polynomial<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<RingContext<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<RingContext<F>>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<RingContext<F>>, c: F::Elem) -> Self {
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::unit(ring.dimension()), c)],
        }
    }

    pub fn var(ring: &Arc<RingContext<F>>, idx: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.dimension(), idx), ring.field().one())],
        }
    }

    pub fn monomial(ring: &Arc<RingContext<F>>, m: Monomial) -> Self {
        assert_eq!(m.len(), ring.dimension(), "monomial length mismatch");
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, ring.field().one())],
        }
    }

    /// Normalizing constructor: combines duplicate monomials, drops zeros,
    /// sorts canonically.
    pub fn from_terms(ring: &Arc<RingContext<F>>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = ring.field();
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.len(), ring.dimension(), "monomial length mismatch");
        }
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = field.add(lc, &c);
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<RingContext<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_unit())
    }

    pub fn constant_term(&self) -> F::Elem {
        self.terms
            .iter()
            .find(|(m, _)| m.is_unit())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.same_ring(other),
            "polynomial ring contexts differ: {} vs {}",
            self.ring.render(),
            other.ring.render()
        );
    }

    /// Checked variant used at API boundaries where a mismatch is a
    /// reportable error rather than a programming bug.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.same_ring(other) {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.ring.render(),
                other.ring.render()
            )));
        }
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_ring(other) {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.ring.render(),
                other.ring.render()
            )));
        }
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match MonomialOrder::GrevLex.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(ca, cb);
                    if !field.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let field = self.ring.field();
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), field.mul(ca, cb)));
            }
        }
        Self::from_terms(&self.ring, raw)
    }

    pub fn mul_scalar(&self, c: &F::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiply by the term c·x^m (canonical order is preserved because
    /// monomial orders are multiplicative).
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    /// f^k by repeated squaring; f⁰ = 1.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading term under `order` (a scan; canonical storage is grevlex).
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &F::Elem)> {
        match order {
            MonomialOrder::GrevLex => self.terms.first().map(|(m, c)| (m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(&a.0, &b.0))
                .map(|(m, c)| (m, c)),
        }
    }

    /// Exact division: Some(q) with self = q·g, or None when g does not
    /// divide self exactly.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        self.check_ring(g);
        if self.is_zero() {
            return Some(Self::zero(&self.ring));
        }
        if g.is_zero() {
            return None;
        }
        let field = self.ring.field();
        let (glm, glc) = g.leading(MonomialOrder::GrevLex).expect("nonzero");
        let glm = glm.clone();
        let glc = glc.clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, F::Elem)> = Vec::new();
        while let Some((lm, lc)) = rem.leading(MonomialOrder::GrevLex) {
            let q = lm.div(&glm)?;
            let c = field.div(lc, &glc).expect("leading coefficient nonzero");
            rem = rem.sub(&g.mul_term(&q, &c));
            quot.push((q, c));
        }
        Some(Self::from_terms(&self.ring, quot))
    }

    /// Indices of variables appearing in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ring.dimension();
        let mut used = vec![false; n];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    /// Monic rescaling (leading coefficient 1 under grevlex).
    pub fn monic(&self) -> Self {
        match self.leading(MonomialOrder::GrevLex) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.ring.field().inv(lc).expect("nonzero leading coeff");
                self.mul_scalar(&inv)
            }
        }
    }

    /// Canonical parseable rendering, e.g. `x^2*y - 2/3*x + 1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let field = self.ring.field();
        let vars = self.ring.vars();
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = field.sign_split(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !field.is_one(&abs) || m.is_unit() {
                factors.push(field.render(&abs));
            }
            for i in m.support() {
                let e = m.exponents()[i];
                if e == 1 {
                    factors.push(vars[i].clone());
                } else {
                    factors.push(format!("{}^{}", vars[i], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Reinterpret over `target` by sending variable i to `var_map[i]`.
    /// Every unmapped variable (None) must have exponent zero in all terms.
    pub fn remap(
        &self,
        target: &Arc<RingContext<F>>,
        var_map: &[Option<usize>],
    ) -> Result<Polynomial<F>> {
        assert_eq!(var_map.len(), self.ring.dimension());
        let n = target.dimension();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for i in m.support() {
                match var_map[i] {
                    Some(j) => e[j] += m.exponents()[i],
                    None => {
                        return Err(Error::InvalidArgument(format!(
                            "variable {} survives projection",
                            self.ring.vars()[i]
                        )))
                    }
                }
            }
            terms.push((Monomial::new(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    type QPoly = Polynomial<Rationals>;

    fn qring2() -> Arc<RingContext<Rationals>> {
        RingContext::new(Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    fn f2ring() -> Arc<RingContext<PrimeField>> {
        RingContext::new(PrimeField::new(2).unwrap(), vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn add_cancels() {
        let r = qring2();
        let x = QPoly::var(&r, 0);
        let y = QPoly::var(&r, 1);
        let two_x = x.add(&y).add(&x.sub(&y));
        assert_eq!(two_x.render(), "2*x");
        assert_eq!(x.add(&QPoly::zero(&r)), x);
    }

    #[test]
    fn char_two_addition() {
        let r = f2ring();
        let x = Polynomial::var(&r, 0);
        assert!(x.add(&x).is_zero());
        let y = Polynomial::var(&r, 1);
        let sq = x.add(&y).pow(2);
        assert_eq!(sq.render(), "x^2 + y^2");
        let four = x.add(&y).pow(4);
        assert_eq!(four.render(), "x^4 + y^4");
    }

    #[test]
    fn product_of_conjugates() {
        let r = qring2();
        let x = QPoly::var(&r, 0);
        let y = QPoly::var(&r, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p.render(), "x^2 - y^2");
        assert_eq!(x.mul(&QPoly::one(&r)), x);
    }

    #[test]
    fn square_binomial() {
        let r = qring2();
        let x = QPoly::var(&r, 0);
        let y = QPoly::var(&r, 1);
        assert_eq!(x.add(&y).pow(2).render(), "x^2 + 2*x*y + y^2");
        assert_eq!(x.pow(0), QPoly::one(&r));
    }

    #[test]
    fn exact_division() {
        let r = qring2();
        let x = QPoly::var(&r, 0);
        let y = QPoly::var(&r, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p.exact_div(&x.add(&y)).unwrap(), x.sub(&y));
        assert!(p.exact_div(&x).is_none());
    }

    #[test]
    fn render_round_trip_forms() {
        let r = qring2();
        let x = QPoly::var(&r, 0);
        let c = QPoly::constant(&r, Rationals.from_int(-3));
        assert_eq!(c.render(), "-3");
        assert_eq!(x.mul_scalar(&Rationals.from_int(-1)).render(), "-x");
        assert_eq!(QPoly::zero(&r).render(), "0");
    }

    #[test]
    #[should_panic(expected = "ring contexts differ")]
    fn context_mismatch_panics() {
        let r1 = qring2();
        let r2 = RingContext::new(Rationals, vec!["a".into(), "b".into()]).unwrap();
        let _ = QPoly::var(&r1, 0).add(&QPoly::var(&r2, 0));
    }

    #[test]
    fn try_add_reports_mismatch() {
        let r1 = qring2();
        let r2 = RingContext::new(Rationals, vec!["a".into(), "b".into()]).unwrap();
        let e = QPoly::var(&r1, 0).try_add(&QPoly::var(&r2, 0));
        assert!(matches!(e, Err(Error::ContextMismatch(_))));
    }

    fn arb_qpoly(r: Arc<RingContext<Rationals>>) -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u32..4, 2),
                -4i64..=4,
            ),
            0..6,
        )
        .prop_map(move |raw| {
            let terms = raw
                .into_iter()
                .map(|(e, c)| (Monomial::new(e), Rationals.from_int(c)))
                .collect();
            QPoly::from_terms(&r, terms)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(
            f in arb_qpoly(qring2()),
            g in arb_qpoly(qring2()),
            h in arb_qpoly(qring2()),
        ) {
            prop_assert_eq!(f.add(&g), g.add(&f));
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        }

        #[test]
        fn power_matches_iterated_product(f in arb_qpoly(qring2()), k in 0u32..=6) {
            let mut expect = QPoly::one(f.ring());
            for _ in 0..k {
                expect = expect.mul(&f);
            }
            prop_assert_eq!(f.pow(k), expect);
        }

        #[test]
        fn freshman_dream_char_p(
            ea in proptest::collection::vec(0u32..3, 2),
            eb in proptest::collection::vec(0u32..3, 2),
            ca in 0u64..5, cb in 0u64..5,
        ) {
            let r = RingContext::new(PrimeField::new(5).unwrap(), vec!["x".into(), "y".into()]).unwrap();
            let f = Polynomial::from_terms(&r, vec![(Monomial::new(ea), ca)]);
            let g = Polynomial::from_terms(&r, vec![(Monomial::new(eb), cb)]);
            prop_assert_eq!(f.add(&g).pow(5), f.pow(5).add(&g.pow(5)));
        }
    }
}
