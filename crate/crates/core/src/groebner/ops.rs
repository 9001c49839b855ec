use crate::poly::{Field, Polynomial, Ring, RingContext, TermOrder};

use super::{buchberger, buchberger_truncated, Budget, GroebnerBasis, GroebnerError, PolyIdeal};

/// Whether `j` is contained in `i`: every generator of `j` reduces to zero
/// modulo a Groebner basis of `i`.
///
/// For homogeneous input under a degree-compatible order the basis is only
/// computed up to the largest generator degree of `j`.
pub fn contains<F: Field>(
    i: &PolyIdeal<F>,
    j: &PolyIdeal<F>,
    order: TermOrder,
    budget: &Budget,
) -> Result<bool, GroebnerError> {
    if !i.ring().same_variables(j.ring()) {
        return Err(crate::poly::PolyError::ContextMismatch.into());
    }
    if j.is_zero() {
        return Ok(true);
    }
    let gb = if j.is_homogeneous() {
        buchberger_truncated(i, order, budget, j.max_generator_degree().unwrap_or(0))?
    } else {
        buchberger(i, order, budget)?
    };
    gb.contains_ideal(j)
}

/// Equality of ideals by mutual containment.
pub fn ideals_equal<F: Field>(
    i: &PolyIdeal<F>,
    j: &PolyIdeal<F>,
    order: TermOrder,
    budget: &Budget,
) -> Result<bool, GroebnerError> {
    Ok(contains(i, j, order, budget)? && contains(j, i, order, budget)?)
}

/// `i ∩ k[retained]`: the basis elements free of the dropped variables under
/// a block order with the dropped variables in the leading block.
///
/// The result lives in a new ring on the retained variables (in their
/// original relative order).
pub fn eliminate<F: Field>(
    i: &PolyIdeal<F>,
    drop: &[usize],
    budget: &Budget,
) -> Result<PolyIdeal<F>, GroebnerError> {
    let src = i.ring();
    let n = src.arity();
    if drop.iter().any(|&d| d >= n) {
        return Err(GroebnerError::InvalidArgument(
            "variable index out of range".into(),
        ));
    }
    let retained: Vec<usize> = (0..n).filter(|v| !drop.contains(v)).collect();
    let dropped: Vec<usize> = (0..n).filter(|v| drop.contains(v)).collect();
    let target_names: Vec<&str> = retained.iter().map(|&v| src.names()[v].as_str()).collect();
    let target = RingContext::new(src.field().clone(), &target_names, src.order())?;
    let elim = eliminate_into(i, &dropped, &target, budget)?;
    Ok(elim)
}

/// Elimination with the retained variables mapped onto `target` in order.
fn eliminate_into<F: Field>(
    i: &PolyIdeal<F>,
    dropped: &[usize],
    target: &Ring<F>,
    budget: &Budget,
) -> Result<PolyIdeal<F>, GroebnerError> {
    let src = i.ring();
    let n = src.arity();
    let retained: Vec<usize> = (0..n).filter(|v| !dropped.contains(v)).collect();
    // reorder: dropped first, then retained
    let mut map = vec![0usize; n];
    let mut names: Vec<&str> = Vec::with_capacity(n);
    for (pos, &v) in dropped.iter().chain(retained.iter()).enumerate() {
        map[v] = pos;
        names.push(src.names()[v].as_str());
    }
    let work = RingContext::new(src.field().clone(), &names, TermOrder::Block(dropped.len()))?;
    let gens = i
        .gens()
        .iter()
        .map(|g| g.embed(&work, &map))
        .collect::<Result<Vec<_>, _>>()?;
    let gb = buchberger(&PolyIdeal::new(&work, gens)?, TermOrder::Block(dropped.len()), budget)?;
    let k = dropped.len();
    let back: Vec<usize> = (0..n).map(|pos| pos.saturating_sub(k)).collect();
    let out = gb
        .basis()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| g.embed(target, &back))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyIdeal::new(target, out)?)
}

/// Ring `k[t, x_1, ..., x_n]` used by the auxiliary-variable constructions.
fn with_tag_variable<F: Field>(ring: &Ring<F>) -> Result<(Ring<F>, Vec<usize>), GroebnerError> {
    let mut tag = String::from("t");
    while ring.index_of(&tag).is_some() {
        tag.push('_');
    }
    let mut names = vec![tag];
    names.extend(ring.names().iter().cloned());
    let big = RingContext::new(ring.field().clone(), &names, TermOrder::Block(1))?;
    let map: Vec<usize> = (1..=ring.arity()).collect();
    Ok((big, map))
}

/// `i ∩ j` as the `t`-free part of `t*i + (1-t)*j`.
pub fn intersect<F: Field>(
    i: &PolyIdeal<F>,
    j: &PolyIdeal<F>,
    budget: &Budget,
) -> Result<PolyIdeal<F>, GroebnerError> {
    let ring = i.ring();
    if !ring.same_variables(j.ring()) {
        return Err(crate::poly::PolyError::ContextMismatch.into());
    }
    if i.is_zero() || j.is_zero() {
        return Ok(PolyIdeal::zero(ring));
    }
    let (big, map) = with_tag_variable(ring)?;
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::with_capacity(i.gens().len() + j.gens().len());
    for g in i.gens() {
        gens.push(&t * &g.embed(&big, &map)?);
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.embed(&big, &map)?);
    }
    eliminate_into(&PolyIdeal::new(&big, gens)?, &[0], ring, budget)
}

/// Exact quotient `p / v`; `None` when `v` does not divide `p`.
pub fn divide_exact<F: Field>(p: &Polynomial<F>, v: &Polynomial<F>) -> Option<Polynomial<F>> {
    let lv = v.leading_monomial()?;
    let field = p.field();
    let lc_inv = field.inv(v.leading_coeff()?)?;
    if v.len() == 1 {
        return p
            .exact_div_monomial(lv)
            .map(|q| q.scale(&lc_inv));
    }
    let mut rest = p.clone();
    let mut quotient = Polynomial::zero(p.ring());
    while let Some(lm) = rest.leading_monomial() {
        let q = lv.quotient_of(lm)?;
        let c = field.mul(rest.leading_coeff().unwrap(), &lc_inv);
        rest = &rest - &v.mul_term(&q, &c);
        quotient = &quotient + &Polynomial::term(p.ring(), q, c);
    }
    Some(quotient)
}

/// `(i : v) = (1/v) * (i ∩ (v))`, returned as the reduced grevlex basis.
pub fn colon_poly<F: Field>(
    i: &PolyIdeal<F>,
    v: &Polynomial<F>,
    budget: &Budget,
) -> Result<PolyIdeal<F>, GroebnerError> {
    if v.is_zero() {
        return Err(GroebnerError::InvalidArgument("colon by zero".into()));
    }
    let ring = i.ring();
    let v = v.to_ring(ring)?;
    if v.is_constant() {
        return Ok(i.clone());
    }
    let meet = intersect(i, &PolyIdeal::new(ring, vec![v.clone()])?, budget)?;
    let quotients = meet
        .gens()
        .iter()
        .map(|g| {
            divide_exact(g, &v).ok_or_else(|| {
                GroebnerError::InvalidArgument("intersection element not divisible".into())
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let q = PolyIdeal::new(ring, quotients)?;
    let gb = buchberger(&q, ring.order(), budget)?;
    Ok(PolyIdeal::new(ring, gb.basis().to_vec())?)
}

/// `(i : v^∞)` by iterated colon until the reduced basis stops changing.
pub fn saturate<F: Field>(
    i: &PolyIdeal<F>,
    v: &Polynomial<F>,
    budget: &Budget,
) -> Result<PolyIdeal<F>, GroebnerError> {
    if v.is_zero() {
        return Err(GroebnerError::InvalidArgument("saturation by zero".into()));
    }
    let ring = i.ring();
    let mut current: GroebnerBasis<F> = buchberger(i, ring.order(), budget)?;
    if v.is_constant() {
        return Ok(current.ideal());
    }
    for _ in 0..budget.max_saturation_steps {
        let next_ideal = colon_poly(&current.ideal(), v, budget)?;
        // colon_poly already returns a reduced basis in the same order
        let next = GroebnerBasis {
            ring: current.ring().clone(),
            basis: next_ideal.gens().to_vec(),
            degree_bound: None,
        };
        if next.basis() == current.basis() {
            return Ok(current.ideal());
        }
        current = next;
    }
    Err(GroebnerError::Inconclusive(format!(
        "saturation did not stabilise within {} steps",
        budget.max_saturation_steps
    )))
}
