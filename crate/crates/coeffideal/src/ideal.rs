//! Ideals of the ambient ring and the derived calculus: membership (global
//! and local at 𝔪), sum, product, power, intersection, colon, elimination,
//! equality, and combinatorial Krull dimension.

use std::sync::{Arc, OnceLock};

use crate::config::Caps;
use crate::elim;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::poly::Polynomial;
use crate::ring::{Monomial, MonomialOrder, RingContext};

/// Finitely generated ideal. The zero ideal is represented by the single
/// generator 0. Carries a write-once cache of its reduced grevlex basis;
/// clones share the cache.
#[derive(Debug, Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<RingContext<F>>,
    gens: Arc<Vec<Polynomial<F>>>,
    cache: Arc<OnceLock<GroebnerBasis<F>>>,
}

impl<F: Field> PartialEq for Ideal<F> {
    /// Structural equality of generator lists (not ideal equality).
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}
impl<F: Field> Eq for Ideal<F> {}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<RingContext<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidArgument(
                "ideal needs at least one generator (use 0 for the zero ideal)".into(),
            ));
        }
        for g in &gens {
            if !g.same_ring(&Polynomial::zero(ring)) {
                return Err(Error::ContextMismatch(format!(
                    "generator over {} in ideal over {}",
                    g.ring().render(),
                    ring.render()
                )));
            }
        }
        // Drop zero generators unless that would empty the list.
        let mut gens = gens;
        if gens.iter().any(|g| !g.is_zero()) {
            gens.retain(|g| !g.is_zero());
        } else {
            gens.truncate(1);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: Arc::new(gens),
            cache: Arc::new(OnceLock::new()),
        })
    }

    pub fn zero(ring: &Arc<RingContext<F>>) -> Self {
        Ideal::new(ring, vec![Polynomial::zero(ring)]).expect("zero ideal")
    }

    pub fn unit(ring: &Arc<RingContext<F>>) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("unit ideal")
    }

    /// The designated maximal ideal 𝔪 = (x₁,…,x_n).
    pub fn maximal(ring: &Arc<RingContext<F>>) -> Self {
        let gens = (0..ring.dimension())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        Ideal::new(ring, gens).expect("maximal ideal")
    }

    pub fn from_monomials(ring: &Arc<RingContext<F>>, monos: Vec<Monomial>) -> Result<Self> {
        let gens = monos
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<RingContext<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn render(&self) -> String {
        let body: Vec<String> = self.gens.iter().map(|g| g.render()).collect();
        format!("({})", body.join(", "))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.ring.render(),
                other.ring.render()
            )))
        }
    }

    /// Reduced grevlex Gröbner basis, cached (compute-if-absent; the cache
    /// is write-once and shared by clones).
    pub fn gb(&self, caps: &Caps) -> Result<&GroebnerBasis<F>> {
        if let Some(b) = self.cache.get() {
            return Ok(b);
        }
        let b = buchberger(
            &self.ring,
            &self.gens,
            MonomialOrder::GrevLex,
            caps.groebner_degree,
        )?;
        let _ = self.cache.set(b);
        Ok(self.cache.get().expect("just set"))
    }

    /// Reduced basis under an arbitrary order (fresh computation unless the
    /// default grevlex is requested).
    pub fn gb_for(&self, order: MonomialOrder, caps: &Caps) -> Result<GroebnerBasis<F>> {
        if order == MonomialOrder::GrevLex {
            return Ok(self.gb(caps)?.clone());
        }
        buchberger(&self.ring, &self.gens, order, caps.groebner_degree)
    }

    pub fn member(&self, f: &Polynomial<F>, caps: &Caps) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(normal_form(f, self.gb(caps)?).is_zero())
    }

    /// Membership in I·R_𝔪: the colon (I : f) is not contained in 𝔪, i.e.
    /// its reduced basis has an element with nonzero constant term. Global
    /// membership implies local membership and is tried first as a fast
    /// path.
    pub fn local_member(&self, f: &Polynomial<F>, caps: &Caps) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if self.member(f, caps)? {
            return Ok(true);
        }
        let colon = elim::colon_by_poly(self, f, caps)?;
        Ok(colon.gb(caps)?.meets_units_locally())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens: Vec<Polynomial<F>> = Vec::new();
        for g in self.gens.iter().chain(other.gens.iter()) {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens: Vec<Polynomial<F>> = Vec::new();
        for a in self.gens.iter() {
            for b in other.gens.iter() {
                let p = a.mul(b);
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        if gens.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        Ideal::new(&self.ring, gens)
    }

    /// I^k with I⁰ = (1).
    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &Self, caps: &Caps) -> Result<Self> {
        self.check_ring(other)?;
        elim::intersection(self, other, caps)
    }

    /// (I : J) = ∩_{g ∈ gens J} (I : g).
    pub fn colon(&self, other: &Self, caps: &Caps) -> Result<Self> {
        self.check_ring(other)?;
        elim::colon(self, other, caps)
    }

    /// Generators of I ∩ k[vars not in `drop`], inside the same ring.
    pub fn eliminate(&self, drop: &[usize], caps: &Caps) -> Result<Self> {
        elim::eliminate(self, drop, caps)
    }

    /// Global equality: identical reduced grevlex bases.
    pub fn equal(&self, other: &Self, caps: &Caps) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gb(caps)?.elements == other.gb(caps)?.elements)
    }

    /// other ⊆ self (globally).
    pub fn contains(&self, other: &Self, caps: &Caps) -> Result<bool> {
        self.check_ring(other)?;
        for g in other.gens.iter() {
            if !self.member(g, caps)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// other ⊆ self·R_𝔪.
    pub fn local_contains(&self, other: &Self, caps: &Caps) -> Result<bool> {
        self.check_ring(other)?;
        for g in other.gens.iter() {
            if !self.local_member(g, caps)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality in R_𝔪: mutual local containment of generators.
    pub fn local_equal(&self, other: &Self, caps: &Caps) -> Result<bool> {
        Ok(self.local_contains(other, caps)? && other.local_contains(self, caps)?)
    }

    /// Krull dimension of k[x]/I: the largest cardinality of a variable
    /// subset S such that no leading monomial of the reduced basis is
    /// supported entirely inside S (brute force over all 2ⁿ subsets).
    pub fn quotient_dimension(&self, caps: &Caps) -> Result<usize> {
        Ok(self.dimension_with_witness(caps)?.0)
    }

    pub fn dimension_with_witness(&self, caps: &Caps) -> Result<(usize, Vec<usize>)> {
        let gb = self.gb(caps)?;
        if gb.is_unit_ideal() {
            return Err(Error::InvalidArgument(
                "quotient dimension of the unit ideal".into(),
            ));
        }
        let n = self.ring.dimension();
        let lms = gb.leading_monomials();
        let mut best: (usize, Vec<usize>) = (0, Vec::new());
        for mask in 0u64..(1u64 << n) {
            let allowed: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let size = allowed.iter().filter(|b| **b).count();
            if size <= best.0 && mask != 0 {
                continue;
            }
            if lms.iter().any(|m| m.supported_in(&allowed)) {
                continue;
            }
            let vars: Vec<usize> = (0..n).filter(|&i| allowed[i]).collect();
            if size > best.0 || (best.0 == 0 && best.1.is_empty()) {
                best = (size, vars);
            }
        }
        Ok(best)
    }

    /// Radical equals 𝔪, i.e. the quotient is Artinian.
    pub fn is_m_primary(&self, caps: &Caps) -> Result<bool> {
        match self.quotient_dimension(caps) {
            Ok(d) => Ok(d == 0),
            Err(Error::InvalidArgument(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Every generator has zero constant term, i.e. I ⊆ 𝔪.
    pub fn contained_in_maximal(&self) -> bool {
        let field = self.ring.field();
        self.gens
            .iter()
            .all(|g| field.is_zero(&g.constant_term()))
    }
}
