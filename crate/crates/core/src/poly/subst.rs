use super::context::Ring;
use super::field::Field;
use super::polynomial::Polynomial;
use super::PolyError;

/// A ring map `source -> target` given by the images of the source variables.
#[derive(Debug, Clone)]
pub struct Substitution<F: Field> {
    source: Ring<F>,
    target: Ring<F>,
    images: Vec<Polynomial<F>>,
}

impl<F: Field> Substitution<F> {
    pub fn new(
        source: &Ring<F>,
        target: &Ring<F>,
        images: Vec<Polynomial<F>>,
    ) -> Result<Self, PolyError> {
        if images.len() != source.arity() {
            return Err(PolyError::InvalidSubstitution(format!(
                "{} images for {} source variables",
                images.len(),
                source.arity()
            )));
        }
        if images.iter().any(|p| !p.ring().same_ring(target)) {
            return Err(PolyError::ContextMismatch);
        }
        if source.field() != target.field() {
            return Err(PolyError::ContextMismatch);
        }
        Ok(Substitution {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn source(&self) -> &Ring<F> {
        &self.source
    }

    pub fn target(&self) -> &Ring<F> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial<F>] {
        &self.images
    }

    /// Image of `a` under the ring homomorphism.
    pub fn apply(&self, a: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
        if !a.ring().same_variables(&self.source) {
            return Err(PolyError::ContextMismatch);
        }
        // powers of each image are cached per exponent as they are needed
        let mut powers: Vec<Vec<Polynomial<F>>> = self
            .images
            .iter()
            .map(|p| vec![Polynomial::one(&self.target), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(&self.target);
        for (m, c) in a.terms() {
            let mut t = Polynomial::constant(&self.target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}
