//! Extended-ring machinery: intersection via the auxiliary-variable trick,
//! colon ideals through intersection and exact division, and variable
//! elimination with block orders.



use crate::config::Caps;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, RingContext};

/// I ∩ J by eliminating t from t·I + (1−t)·J in k[t, x₁..x_n].
pub fn intersection<F: Field>(a: &Ideal<F>, b: &Ideal<F>, caps: &Caps) -> Result<Ideal<F>> {
    let ring = a.ring();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let n = ring.dimension();
    let mut vars = vec![ring.fresh_name("t")];
    vars.extend(ring.vars().iter().cloned());
    let ext = RingContext::new(ring.field().clone(), vars)?;

    // x_i ↦ position i+1 in the extended ring.
    let up: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t);

    let mut gens = Vec::with_capacity(a.gens().len() + b.gens().len());
    for g in a.gens() {
        gens.push(t.mul(&g.remap(&ext, &up)?));
    }
    for g in b.gens() {
        gens.push(one_minus_t.mul(&g.remap(&ext, &up)?));
    }

    let ext_ideal = Ideal::new(&ext, gens)?;
    let gb = ext_ideal.gb_for(MonomialOrder::Block { head: 1 }, caps)?;

    // Down-map: drop t (position 0), keep x_i.
    let mut down: Vec<Option<usize>> = vec![None];
    down.extend((0..n).map(Some));
    let kept: Vec<Polynomial<F>> = gb
        .elements
        .iter()
        .filter(|g| g.support_vars().first() != Some(&0))
        .map(|g| g.remap(ring, &down))
        .collect::<Result<_>>()?;
    if kept.is_empty() {
        return Ok(Ideal::zero(ring));
    }
    Ideal::new(ring, kept)
}

/// (I : f) for a single polynomial: divide each generator of I ∩ (f) by f.
/// (I : 0) = R.
pub fn colon_by_poly<F: Field>(i: &Ideal<F>, f: &Polynomial<F>, caps: &Caps) -> Result<Ideal<F>> {
    let ring = i.ring();
    if f.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let inter = intersection(i, &principal, caps)?;
    if inter.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let gens: Vec<Polynomial<F>> = inter
        .gens()
        .iter()
        .map(|g| {
            g.exact_div(f).ok_or_else(|| {
                Error::InvalidArgument("intersection generator not divisible".into())
            })
        })
        .collect::<Result<_>>()?;
    Ideal::new(ring, gens)
}

/// (I : J) = ∩_{g ∈ gens J} (I : g). J must be nonzero.
pub fn colon<F: Field>(i: &Ideal<F>, j: &Ideal<F>, caps: &Caps) -> Result<Ideal<F>> {
    if j.is_zero_ideal() {
        return Err(Error::InvalidArgument("colon by the zero ideal".into()));
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in j.gens() {
        if g.is_zero() {
            continue;
        }
        let part = colon_by_poly(i, g, caps)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersection(&prev, &part, caps)?,
        });
    }
    Ok(acc.expect("nonzero ideal has a nonzero generator"))
}

/// Generators of I ∩ k[remaining variables] via a block-elimination order,
/// returned in the original ring (their dropped-variable exponents are zero).
pub fn eliminate<F: Field>(i: &Ideal<F>, drop: &[usize], caps: &Caps) -> Result<Ideal<F>> {
    let ring = i.ring();
    let n = ring.dimension();
    for &d in drop {
        if d >= n {
            return Err(Error::InvalidArgument(format!(
                "variable index {d} out of range"
            )));
        }
    }
    if drop.is_empty() {
        return Ok(i.clone());
    }
    if i.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let head = drop.len();
    let keep: Vec<usize> = (0..n).filter(|k| !drop.contains(k)).collect();

    // Permuted ring: dropped variables first.
    let mut vars: Vec<String> = drop.iter().map(|&d| ring.vars()[d].clone()).collect();
    vars.extend(keep.iter().map(|&k| ring.vars()[k].clone()));
    let permuted = RingContext::new(ring.field().clone(), vars)?;

    let mut up: Vec<Option<usize>> = vec![None; n];
    for (pos, &d) in drop.iter().enumerate() {
        up[d] = Some(pos);
    }
    for (pos, &k) in keep.iter().enumerate() {
        up[k] = Some(head + pos);
    }

    let gens: Vec<Polynomial<F>> = i
        .gens()
        .iter()
        .map(|g| g.remap(&permuted, &up))
        .collect::<Result<_>>()?;
    let gb = Ideal::new(&permuted, gens)?.gb_for(MonomialOrder::Block { head }, caps)?;

    let mut down: Vec<Option<usize>> = vec![None; n];
    for (pos, &k) in keep.iter().enumerate() {
        down[head + pos] = Some(k);
    }
    let kept: Vec<Polynomial<F>> = gb
        .elements
        .iter()
        .filter(|g| g.support_vars().iter().all(|&v| v >= head))
        .map(|g| g.remap(ring, &down))
        .collect::<Result<_>>()?;
    if kept.is_empty() {
        return Ok(Ideal::zero(ring));
    }
    Ideal::new(ring, kept)
}
