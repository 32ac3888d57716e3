//! Buchberger's algorithm with the coprime and chain criteria, a
//! degree-bounded pair queue, and deterministic reduction (largest reducible
//! term first, first matching divisor in basis order).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::ring::{Monomial, MonomialOrder, RingContext};

#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    /// Reduced basis: monic, tail-reduced, sorted ascending by leading
    /// monomial under `order`.
    pub elements: Vec<Polynomial<F>>,
    pub order: MonomialOrder,
    pub reduced: bool,
    /// Leading monomials, aligned with `elements`.
    lms: Vec<Monomial>,
    ring: Arc<RingContext<F>>,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}
impl<F: Field> Eq for GroebnerBasis<F> {}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<RingContext<F>> {
        &self.ring
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Some element has a nonzero constant term, i.e. the ideal is not
    /// contained in 𝔪 = (x₁..x_n).
    pub fn meets_units_locally(&self) -> bool {
        let field = self.ring.field();
        self.elements
            .iter()
            .any(|g| !field.is_zero(&g.constant_term()))
    }
}

/// Working representation: terms sorted descending under the active order.
struct Wp<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Wp<F> {
    fn from_poly(p: &Polynomial<F>, order: MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, F::Elem)> = p.terms().to_vec();
        if order != MonomialOrder::GrevLex {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        Wp { terms }
    }

    fn to_poly(&self, ring: &Arc<RingContext<F>>) -> Polynomial<F> {
        Polynomial::from_terms(ring, self.terms.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &F::Elem {
        &self.terms[0].1
    }
}

/// a − c·x^m·b for working polynomials (sorted merge under `order`).
fn sub_scaled<F: Field>(
    field: &F,
    order: MonomialOrder,
    a: &[(Monomial, F::Elem)],
    b: &[(Monomial, F::Elem)],
    m: &Monomial,
    c: &F::Elem,
) -> Vec<(Monomial, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, field.neg(&field.mul(&b[j].1, c))));
                j += 1;
            }
            Ordering::Equal => {
                let v = field.sub(&a[i].1, &field.mul(&b[j].1, c));
                if !field.is_zero(&v) {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((b[j].0.mul(m), field.neg(&field.mul(&b[j].1, c))));
        j += 1;
    }
    out
}

/// Full normal form of `f` against `basis`: repeatedly reduce the largest
/// reducible term by the first basis element whose leading monomial divides
/// it.
fn nf_wp<F: Field>(
    field: &F,
    order: MonomialOrder,
    mut f: Wp<F>,
    basis: &[Wp<F>],
    lms: &[Monomial],
) -> Wp<F> {
    let mut idx = 0;
    while idx < f.terms.len() {
        let (m, c) = (&f.terms[idx].0, &f.terms[idx].1);
        let hit = lms.iter().position(|lm| lm.divides(m));
        match hit {
            None => idx += 1,
            Some(j) => {
                let g = &basis[j];
                let q = m.div(&lms[j]).expect("divisibility checked");
                let coef = field.div(c, g.lc()).expect("leading coeff nonzero");
                // Terms before idx are untouched by the subtraction.
                let head: Vec<(Monomial, F::Elem)> = f.terms[..idx].to_vec();
                let tail = sub_scaled(field, order, &f.terms[idx..], &g.terms, &q, &coef);
                let mut terms = head;
                terms.extend(tail);
                f = Wp { terms };
            }
        }
    }
    f
}

fn spoly<F: Field>(field: &F, order: MonomialOrder, f: &Wp<F>, g: &Wp<F>) -> Wp<F> {
    let lcm = f.lm().lcm(g.lm());
    let mf = lcm.div(f.lm()).unwrap();
    let mg = lcm.div(g.lm()).unwrap();
    let inv_f = field.inv(f.lc()).expect("nonzero");
    // (1/lc_f)·x^{mf}·f − (1/lc_g)·x^{mg}·g, built as a scaled merge.
    let scaled_f: Vec<(Monomial, F::Elem)> = f
        .terms
        .iter()
        .map(|(m, c)| (m.mul(&mf), field.mul(c, &inv_f)))
        .collect();
    let coef = field.inv(g.lc()).expect("nonzero");
    Wp {
        terms: sub_scaled(field, order, &scaled_f, &g.terms, &mg, &coef),
    }
}

/// Reduced Gröbner basis of the given generators. Errors with a budget
/// message when some pending S-pair lcm exceeds `degree_cap`.
pub fn buchberger<F: Field>(
    ring: &Arc<RingContext<F>>,
    gens: &[Polynomial<F>],
    order: MonomialOrder,
    degree_cap: u32,
) -> Result<GroebnerBasis<F>> {
    let field = ring.field().clone();
    let mut basis: Vec<Wp<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Wp::from_poly(g, order))
        .collect();
    let mut lms: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();

    // Pair queue ordered by (lcm degree, lcm, i, j) — the normal strategy.
    let mut queue: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    let mut retired: HashSet<(usize, usize)> = HashSet::new();
    let enqueue = |queue: &mut BTreeSet<(u32, Monomial, usize, usize)>,
                       lms: &[Monomial],
                       i: usize,
                       j: usize| {
        let lcm = lms[i].lcm(&lms[j]);
        queue.insert((lcm.degree(), lcm, i, j));
    };
    for j in 1..basis.len() {
        for i in 0..j {
            enqueue(&mut queue, &lms, i, j);
        }
    }

    while let Some(entry) = queue.iter().next().cloned() {
        queue.remove(&entry);
        let (deg, lcm, i, j) = entry;
        if deg > degree_cap {
            return Err(Error::Budget(format!(
                "groebner degree cap {degree_cap} exceeded: next S-pair lcm has degree {deg}; \
                 partial basis has {} elements, {} pairs pending",
                basis.len(),
                queue.len() + 1
            )));
        }
        retired.insert((i, j));
        // Buchberger 1: coprime leading terms.
        if lms[i].is_coprime_with(&lms[j]) {
            continue;
        }
        // Chain criterion: some k with lm_k | lcm(i,j) and both companion
        // pairs already retired.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&lcm)
                && retired.contains(&key(i, k))
                && retired.contains(&key(j, k))
        });
        if chained {
            continue;
        }
        let s = spoly(&field, order, &basis[i], &basis[j]);
        let r = nf_wp(&field, order, s, &basis, &lms);
        if !r.is_zero() {
            let t = basis.len();
            lms.push(r.lm().clone());
            basis.push(r);
            for i in 0..t {
                enqueue(&mut queue, &lms, i, t);
            }
        }
    }

    Ok(reduce_basis(ring, basis, order))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalize, tail-reduce, normalize to monic, sort ascending by LM.
fn reduce_basis<F: Field>(
    ring: &Arc<RingContext<F>>,
    basis: Vec<Wp<F>>,
    order: MonomialOrder,
) -> GroebnerBasis<F> {
    let field = ring.field().clone();
    let mut items: Vec<Wp<F>> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    items.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    // Minimal: drop any element whose LM is divisible by a kept LM.
    let mut kept: Vec<Wp<F>> = Vec::new();
    let mut kept_lms: Vec<Monomial> = Vec::new();
    for g in items {
        if !kept_lms.iter().any(|lm| lm.divides(g.lm())) {
            kept_lms.push(g.lm().clone());
            kept.push(g);
        }
    }

    // Tail-reduce each against the others until stable.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..kept.len() {
            let others: Vec<&Wp<F>> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g)
                .collect();
            let other_lms: Vec<Monomial> = others.iter().map(|g| g.lm().clone()).collect();
            let other_wps: Vec<Wp<F>> = others
                .iter()
                .map(|g| Wp {
                    terms: g.terms.clone(),
                })
                .collect();
            let cur = Wp {
                terms: kept[i].terms.clone(),
            };
            let red = nf_wp(&field, order, cur, &other_wps, &other_lms);
            if red.terms != kept[i].terms {
                assert!(!red.is_zero(), "minimal basis element reduced to zero");
                kept[i] = red;
                changed = true;
            }
        }
    }

    // Monic, resorted.
    let mut polys: Vec<Polynomial<F>> = kept
        .iter()
        .map(|g| {
            let inv = field.inv(g.lc()).expect("nonzero");
            let terms: Vec<(Monomial, F::Elem)> = g
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.mul(c, &inv)))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    polys.sort_by(|a, b| {
        let la = a.leading(order).expect("nonzero").0;
        let lb = b.leading(order).expect("nonzero").0;
        order.cmp(la, lb)
    });
    let lms = polys
        .iter()
        .map(|p| p.leading(order).expect("nonzero").0.clone())
        .collect();
    GroebnerBasis {
        elements: polys,
        order,
        reduced: true,
        lms,
        ring: ring.clone(),
    }
}

/// Remainder of `f` on division by the basis: no term of the result is
/// divisible by any basis leading monomial, and f − result lies in the ideal.
pub fn normal_form<F: Field>(f: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Polynomial<F> {
    assert!(
        f.same_ring(&Polynomial::zero(&gb.ring)),
        "normal form ring mismatch"
    );
    let field = gb.ring.field().clone();
    let wps: Vec<Wp<F>> = gb
        .elements
        .iter()
        .map(|g| Wp::from_poly(g, gb.order))
        .collect();
    let out = nf_wp(
        &field,
        gb.order,
        Wp::from_poly(f, gb.order),
        &wps,
        &gb.lms,
    );
    out.to_poly(&gb.ring)
}

/// Every S-polynomial of basis pairs reduces to zero. Exhaustive; used by
/// the test suite to certify computed bases.
pub fn spoly_exhaustion_holds<F: Field>(gb: &GroebnerBasis<F>) -> bool {
    let field = gb.ring.field().clone();
    let wps: Vec<Wp<F>> = gb
        .elements
        .iter()
        .map(|g| Wp::from_poly(g, gb.order))
        .collect();
    for i in 0..wps.len() {
        for j in i + 1..wps.len() {
            let s = spoly(&field, gb.order, &wps[i], &wps[j]);
            if !nf_wp(&field, gb.order, s, &wps, &gb.lms).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    type QPoly = Polynomial<Rationals>;

    fn ring2() -> Arc<RingContext<Rationals>> {
        RingContext::new(Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    fn gb(ring: &Arc<RingContext<Rationals>>, gens: &[QPoly], order: MonomialOrder) -> GroebnerBasis<Rationals> {
        buchberger(ring, gens, order, 30).unwrap()
    }

    #[test]
    fn unit_ideal() {
        let r = ring2();
        let b = gb(&r, &[QPoly::one(&r)], MonomialOrder::GrevLex);
        assert!(b.is_unit_ideal());
        assert_eq!(b.elements[0].render(), "1");
    }

    #[test]
    fn principal_ideal() {
        let r = ring2();
        let x = QPoly::var(&r, 0);
        let b = gb(&r, &[x.clone()], MonomialOrder::Lex);
        assert_eq!(b.elements, vec![x]);
    }

    #[test]
    fn parabola_example_lex() {
        // GB((x²−y, y²), lex x>y) = {x²−y, y²}: the single S-polynomial
        // reduces to zero, verified by exhaustion below.
        let r = ring2();
        let x = QPoly::var(&r, 0);
        let y = QPoly::var(&r, 1);
        let g1 = x.pow(2).sub(&y);
        let g2 = y.pow(2);
        let b = gb(&r, &[g1.clone(), g2.clone()], MonomialOrder::Lex);
        let mut rendered: Vec<String> = b.elements.iter().map(|p| p.render()).collect();
        rendered.sort();
        assert_eq!(rendered, vec!["x^2 - y".to_string(), "y^2".to_string()]);
        assert!(spoly_exhaustion_holds(&b));
        // Idempotent: re-running on the output returns an equal basis.
        let again = gb(&r, &b.elements, MonomialOrder::Lex);
        assert_eq!(again, b);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring2();
        let x = QPoly::var(&r, 0);
        let y = QPoly::var(&r, 1);

        let bx = gb(&r, &[x.clone()], MonomialOrder::GrevLex);
        assert!(normal_form(&x, &bx).is_zero());

        let bx2 = gb(&r, &[x.pow(2)], MonomialOrder::GrevLex);
        let f = x.pow(2).mul(&y).add(&y);
        assert_eq!(normal_form(&f, &bx2), y);

        // lex x>y: NF(x³, GB(x²−y, y²)) = xy  (hand division x³ → xy).
        let b = gb(&r, &[x.pow(2).sub(&y), y.pow(2)], MonomialOrder::Lex);
        let nf = normal_form(&x.pow(3), &b);
        assert_eq!(nf, x.mul(&y));
        // NF is idempotent.
        assert_eq!(normal_form(&nf, &b), nf);
    }

    #[test]
    fn zero_ideal_basis() {
        let r = ring2();
        let b = gb(&r, &[QPoly::zero(&r)], MonomialOrder::GrevLex);
        assert!(b.is_zero_ideal());
        let f = QPoly::var(&r, 0);
        assert_eq!(normal_form(&f, &b), f);
    }

    #[test]
    fn degree_cap_budget_error() {
        let r = ring2();
        let x = QPoly::var(&r, 0);
        let y = QPoly::var(&r, 1);
        // lcm(x^5, y^5·x) forces an S-pair of degree 10 > 3.
        let res = buchberger(
            &r,
            &[x.pow(5).add(&y), y.pow(5).mul(&x).add(&x)],
            MonomialOrder::GrevLex,
            3,
        );
        match res {
            Err(Error::Budget(msg)) => assert!(msg.contains("degree cap")),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
