use std::collections::{BTreeMap, BTreeSet};

use smallvec::SmallVec;

use crate::poly::{Field, Monomial, Polynomial, Ring, TermOrder};

use super::{Budget, GroebnerError};

/// Key whose lexicographic order agrees with the term order.
pub(crate) type OrderKey = SmallVec<[u32; 12]>;

pub(crate) fn order_key(order: TermOrder, m: &Monomial) -> OrderKey {
    let e = m.exponents();
    let mut key = OrderKey::new();
    let grevlex = |part: &[u32], key: &mut OrderKey| {
        key.push(part.iter().sum());
        key.extend(part.iter().rev().map(|x| u32::MAX - x));
    };
    match order {
        TermOrder::Grevlex => grevlex(e, &mut key),
        TermOrder::Lex => key.extend(e.iter().copied()),
        TermOrder::Block(k) => {
            let k = k.min(e.len());
            grevlex(&e[..k], &mut key);
            grevlex(&e[k..], &mut key);
        }
    }
    key
}

/// Full reduction of `p` by the monic `reducers`; returns the remainder.
pub(crate) fn reduce<F: Field>(
    p: &Polynomial<F>,
    reducers: &[&Polynomial<F>],
    steps: &mut u64,
    budget: &Budget,
) -> Result<Polynomial<F>, GroebnerError> {
    let ring = p.ring().clone();
    let order = ring.order();
    let field = ring.field().clone();
    let mut live: BTreeMap<OrderKey, (Monomial, F::Elem)> = p
        .terms()
        .iter()
        .map(|(m, c)| (order_key(order, m), (m.clone(), c.clone())))
        .collect();
    let leads: Vec<&Monomial> = reducers
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero reducer"))
        .collect();
    let mut rem = Vec::new();
    while let Some((_, (m, c))) = live.pop_last() {
        let hit = leads.iter().position(|lm| lm.divides(&m));
        match hit {
            None => rem.push((m, c)),
            Some(idx) => {
                *steps += 1;
                if *steps > budget.max_reduction_steps {
                    return Err(GroebnerError::Inconclusive(format!(
                        "reduction step budget {} exhausted",
                        budget.max_reduction_steps
                    )));
                }
                let g = reducers[idx];
                let q = leads[idx].quotient_of(&m).expect("divisible");
                for (t, d) in &g.terms()[1..] {
                    let mt = t.mul(&q);
                    let delta = field.mul(&c, d);
                    let key = order_key(order, &mt);
                    match live.get_mut(&key) {
                        Some(entry) => {
                            entry.1 = field.sub(&entry.1, &delta);
                            if field.is_zero(&entry.1) {
                                live.remove(&key);
                            }
                        }
                        None => {
                            live.insert(key, (mt, field.neg(&delta)));
                        }
                    }
                }
            }
        }
    }
    Ok(Polynomial::from_sorted_unchecked(&ring, rem))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    sugar: u32,
    lcm: OrderKey,
    i: usize,
    j: usize,
}

struct Element<F: Field> {
    poly: Polynomial<F>,
    sugar: u32,
    active: bool,
}

pub(crate) struct Engine<'b, F: Field> {
    ring: Ring<F>,
    elems: Vec<Element<F>>,
    pairs: BTreeSet<PairKey>,
    budget: &'b Budget,
    max_degree: Option<u32>,
    pairs_done: u64,
    steps: u64,
}

impl<'b, F: Field> Engine<'b, F> {
    pub(crate) fn new(ring: &Ring<F>, budget: &'b Budget, max_degree: Option<u32>) -> Self {
        Engine {
            ring: ring.clone(),
            elems: Vec::new(),
            pairs: BTreeSet::new(),
            budget,
            max_degree,
            pairs_done: 0,
            steps: 0,
        }
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.elems[i].poly.leading_monomial().expect("nonzero")
    }

    fn active_reducers(&self) -> Vec<&Polynomial<F>> {
        self.elems
            .iter()
            .filter(|e| e.active)
            .map(|e| &e.poly)
            .collect()
    }

    fn pair_key(&self, i: usize, j: usize) -> PairKey {
        let (a, b) = (self.lm(i), self.lm(j));
        let lcm = a.lcm(b);
        let sugar = (self.elems[i].sugar + lcm.degree() - a.degree())
            .max(self.elems[j].sugar + lcm.degree() - b.degree());
        PairKey {
            sugar,
            lcm: order_key(self.ring.order(), &lcm),
            i: i.min(j),
            j: i.max(j),
        }
    }

    /// Adds a reduced, nonzero polynomial and updates the pair set
    /// (Gebauer-Moeller installation of the chain and coprime criteria).
    fn insert(&mut self, h: Polynomial<F>, sugar: u32) -> Result<(), GroebnerError> {
        let h = h.monic();
        let hl = h.leading_monomial().expect("nonzero").clone();
        let hidx = self.elems.len();
        self.elems.push(Element {
            poly: h,
            sugar,
            active: false,
        });
        if self.elems.len() > self.budget.max_basis {
            return Err(GroebnerError::Inconclusive(format!(
                "basis size budget {} exhausted",
                self.budget.max_basis
            )));
        }

        let candidates: Vec<usize> = (0..hidx).filter(|&g| self.elems[g].active).collect();
        let lcms: Vec<Monomial> = candidates.iter().map(|&g| hl.lcm(self.lm(g))).collect();
        let coprime: Vec<bool> = candidates.iter().map(|&g| hl.is_coprime(self.lm(g))).collect();

        // chain criterion among the new pairs, then the coprime criterion
        let mut pending: Vec<usize> = (0..candidates.len()).collect();
        let mut kept: Vec<usize> = Vec::new();
        while !pending.is_empty() {
            let a = pending.remove(0);
            let dominated = pending
                .iter()
                .chain(kept.iter())
                .any(|&b| lcms[b].divides(&lcms[a]));
            if coprime[a] || !dominated {
                kept.push(a);
            }
        }
        let new_pairs: Vec<usize> = kept
            .into_iter()
            .filter(|&a| !coprime[a])
            .map(|a| candidates[a])
            .collect();

        // prune old pairs that h makes redundant
        let drop: Vec<PairKey> = self
            .pairs
            .iter()
            .filter(|pk| {
                let l = self.lm(pk.i).lcm(self.lm(pk.j));
                hl.divides(&l) && hl.lcm(self.lm(pk.i)) != l && hl.lcm(self.lm(pk.j)) != l
            })
            .cloned()
            .collect();
        for pk in drop {
            self.pairs.remove(&pk);
        }

        for g in new_pairs {
            let pk = self.pair_key(g, hidx);
            if let Some(d) = self.max_degree {
                if pk.sugar > d {
                    continue;
                }
            }
            self.pairs.insert(pk);
        }
        for g in candidates {
            if hl.divides(self.lm(g)) {
                self.elems[g].active = false;
            }
        }
        self.elems[hidx].active = true;
        Ok(())
    }

    fn s_poly(&self, i: usize, j: usize) -> Polynomial<F> {
        let (a, b) = (&self.elems[i].poly, &self.elems[j].poly);
        let (la, lb) = (self.lm(i), self.lm(j));
        let l = la.lcm(lb);
        let one = self.ring.field().one();
        let ta = a.mul_term(&la.quotient_of(&l).unwrap(), &one);
        let tb = b.mul_term(&lb.quotient_of(&l).unwrap(), &one);
        &ta - &tb
    }

    pub(crate) fn add_generators(&mut self, gens: &[Polynomial<F>]) -> Result<(), GroebnerError> {
        let order = self.ring.order();
        let mut sorted: Vec<&Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
        sorted.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
        });
        for g in sorted {
            if let Some(d) = self.max_degree {
                if g.degree().unwrap_or(0) > d {
                    continue;
                }
            }
            let h = {
                let mut steps = self.steps;
                let reducers = self.active_reducers();
                let h = reduce(g, &reducers, &mut steps, self.budget)?;
                self.steps = steps;
                h
            };
            if !h.is_zero() {
                let sugar = g.degree().unwrap_or(0);
                self.insert(h, sugar)?;
            }
        }
        Ok(())
    }

    pub(crate) fn run(&mut self) -> Result<(), GroebnerError> {
        while let Some(pk) = self.pairs.pop_first() {
            self.pairs_done += 1;
            if self.pairs_done > self.budget.max_pairs {
                return Err(GroebnerError::Inconclusive(format!(
                    "pair budget {} exhausted",
                    self.budget.max_pairs
                )));
            }
            let s = self.s_poly(pk.i, pk.j);
            let h = {
                let mut steps = self.steps;
                let reducers = self.active_reducers();
                let h = reduce(&s, &reducers, &mut steps, self.budget)?;
                self.steps = steps;
                h
            };
            if !h.is_zero() {
                self.insert(h, pk.sugar)?;
            }
        }
        Ok(())
    }

    /// The reduced basis, sorted by ascending leading monomial.
    pub(crate) fn finish(mut self) -> Result<Vec<Polynomial<F>>, GroebnerError> {
        let mut minimal: Vec<Polynomial<F>> = self
            .elems
            .drain(..)
            .filter(|e| e.active)
            .map(|e| e.poly)
            .collect();
        let order = self.ring.order();
        minimal.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let mut out = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<&Polynomial<F>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p)
                .collect();
            let g = &minimal[i];
            let lead = Polynomial::from_sorted_unchecked(&self.ring, vec![g.terms()[0].clone()]);
            let tail = Polynomial::from_sorted_unchecked(&self.ring, g.terms()[1..].to_vec());
            let tail = reduce(&tail, &others, &mut self.steps, self.budget)?;
            out.push((&lead + &tail).monic());
        }
        Ok(out)
    }
}
