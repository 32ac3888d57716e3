//! Ambient polynomial rings k[x₁..x_n] with the designated maximal ideal
//! (x₁,…,x_n), exponent vectors, and monomial orders.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

/// Exponent vector of one monomial. The derived `Ord` is structural
/// (lexicographic on the vector) and is used only for canonical tie-breaking
/// in containers; actual monomial orders live in [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn unit(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, idx: usize) -> Self {
        let mut e = vec![0; n];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    /// Componentwise division; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    pub fn supported_in(&self, allowed: &[bool]) -> bool {
        self.support().all(|i| allowed[i])
    }
}

/// Total multiplicative orders on exponent vectors with 1 minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order on the first `head` variables: compares the head
    /// block grevlex-first, so any monomial meeting the head block exceeds
    /// every monomial outside it.
    Block {
        head: usize,
    },
}

fn grevlex_slice(u: &[u32], v: &[u32]) -> Ordering {
    let du: u32 = u.iter().sum();
    let dv: u32 = v.iter().sum();
    match du.cmp(&dv) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (a, b) in u.iter().zip(v.iter()).rev() {
        if a != b {
            // Last differing exponent smaller ⇒ greater in grevlex.
            return b.cmp(a);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.len(), v.len());
        match self {
            MonomialOrder::Lex => {
                for (a, b) in u.0.iter().zip(&v.0) {
                    if a != b {
                        return a.cmp(b);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => grevlex_slice(&u.0, &v.0),
            MonomialOrder::Block { head } => {
                match grevlex_slice(&u.0[..*head], &v.0[..*head]) {
                    Ordering::Equal => grevlex_slice(&u.0[*head..], &v.0[*head..]),
                    ord => ord,
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Block { head } => format!("block({head})"),
        }
    }
}

/// The ambient ring k[x₁..x_n]. Local questions are answered at the maximal
/// ideal 𝔪 = (x₁,…,x_n); the nonzero polynomials play the role of R° since
/// the ring is a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext<F: Field> {
    field: F,
    vars: Vec<String>,
}

impl<F: Field> RingContext<F> {
    pub fn new(field: F, vars: Vec<String>) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidArgument("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate variable name '{v}'"
                )));
            }
        }
        Ok(Arc::new(RingContext { field, vars }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn render(&self) -> String {
        format!("{}[{}]", self.field.name(), self.vars.join(","))
    }

    /// A name not colliding with any variable of this ring, derived from
    /// `base` by appending underscores.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.vars.iter().any(|v| v == &name) {
            name.push('_');
        }
        name
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use proptest::prelude::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn lex_order_examples() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[1, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn grevlex_order_examples() {
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1, 0]), &m(&[2, 0, 0])), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates_head() {
        let ord = MonomialOrder::Block { head: 1 };
        // Any monomial involving the head variable beats any that does not.
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2, 1]), &m(&[1, 0, 0])), Ordering::Less);
    }

    #[test]
    fn ring_context_validation() {
        assert!(RingContext::new(Rationals, vec![]).is_err());
        assert!(RingContext::new(Rationals, vec!["x".into(), "x".into()]).is_err());
        assert!(RingContext::new(Rationals, vec!["x".into(), "".into()]).is_err());
        let r = RingContext::new(Rationals, vec!["x".into(), "y".into()]).unwrap();
        assert_eq!(r.dimension(), 2);
        assert_eq!(r.fresh_name("t"), "t");
        assert_eq!(r.fresh_name("x"), "x_");
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, n).prop_map(Monomial::new)
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            Just(MonomialOrder::Block { head: 1 }),
            Just(MonomialOrder::Block { head: 2 }),
        ]
    }

    proptest! {
        // Total, multiplicative, and 1-minimal on random exponent triples.
        #[test]
        fn order_axioms(u in arb_mono(3), v in arb_mono(3), w in arb_mono(3), ord in orders()) {
            let c = ord.cmp(&u, &v);
            prop_assert_eq!(ord.cmp(&v, &u), c.reverse());
            if c == Ordering::Equal {
                prop_assert_eq!(&u, &v);
            }
            // multiplicative: u < v ⇒ uw < vw
            prop_assert_eq!(ord.cmp(&u.mul(&w), &v.mul(&w)), c);
            // 1 is minimal
            let one = Monomial::unit(3);
            if !u.is_unit() {
                prop_assert_eq!(ord.cmp(&u, &one), Ordering::Greater);
            }
            // transitivity spot-check via sorting consistency
            let mut list = vec![u.clone(), v.clone(), w.clone()];
            list.sort_by(|a, b| ord.cmp(a, b));
            for pair in list.windows(2) {
                prop_assert_ne!(ord.cmp(&pair[0], &pair[1]), Ordering::Greater);
            }
        }
    }
}
