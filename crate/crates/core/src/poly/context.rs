use std::collections::HashSet;
use std::sync::Arc;

use super::field::Field;
use super::monomial::TermOrder;
use super::PolyError;

/// Default per-variable exponent cap for parsed input.
pub const DEFAULT_EXPONENT_CAP: u32 = 1 << 16;

/// A polynomial ring `k[x_1, ..., x_n]`: variable names, coefficient field,
/// the term order used to store terms, and the parser's exponent cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext<F: Field> {
    names: Vec<String>,
    field: F,
    order: TermOrder,
    exponent_cap: u32,
}

pub type Ring<F> = Arc<RingContext<F>>;

impl<F: Field> RingContext<F> {
    pub fn new<S: AsRef<str>>(
        field: F,
        names: &[S],
        order: TermOrder,
    ) -> Result<Ring<F>, PolyError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for n in &names {
            let valid = n
                .chars()
                .next()
                .map_or(false, |c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PolyError::InvalidContext(format!(
                    "invalid variable name `{n}`"
                )));
            }
            if !seen.insert(n.clone()) {
                return Err(PolyError::InvalidContext(format!(
                    "duplicate variable name `{n}`"
                )));
            }
        }
        if let TermOrder::Block(b) = order {
            if b > names.len() {
                return Err(PolyError::InvalidContext(format!(
                    "block split {b} exceeds arity {}",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(RingContext {
            names,
            field,
            order,
            exponent_cap: DEFAULT_EXPONENT_CAP,
        }))
    }

    /// Same ring with the given storage order.
    pub fn with_order(&self, order: TermOrder) -> Ring<F> {
        Arc::new(RingContext {
            order,
            ..self.clone()
        })
    }

    pub fn with_exponent_cap(&self, cap: u32) -> Ring<F> {
        Arc::new(RingContext {
            exponent_cap: cap,
            ..self.clone()
        })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn exponent_cap(&self) -> u32 {
        self.exponent_cap
    }

    /// Same variables, field and order (the exponent cap is not structural).
    pub fn same_ring(&self, other: &RingContext<F>) -> bool {
        std::ptr::eq(self, other)
            || (self.names == other.names && self.field == other.field && self.order == other.order)
    }

    /// Same variables and field, any order.
    pub fn same_variables(&self, other: &RingContext<F>) -> bool {
        self.names == other.names && self.field == other.field
    }
}
