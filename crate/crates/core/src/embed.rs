//! Embeddings between the concrete finite fields: `F_{p^a} ↪ F_{p^b}` exists
//! exactly when `a | b`, and is realized by sending the small field's
//! generator to a root of its modulus in the big field. The root is found by
//! direct scan (fields are capped at 2^16 elements) and the first root in
//! enumeration order is chosen, so embeddings are deterministic.

use std::sync::Arc;

use crate::factor::roots_in_field;
use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::poly::Poly;

/// A fixed field homomorphism from a small field into a bigger one.
pub struct FieldEmbedding {
    small: Arc<FieldSpec>,
    big: Arc<FieldSpec>,
    /// Powers of the chosen root: `gen_powers[i]` is the image of `w^i`.
    gen_powers: Vec<FieldElement>,
}

impl FieldEmbedding {
    pub fn new(small: &Arc<FieldSpec>, big: &Arc<FieldSpec>) -> Result<Self, FieldError> {
        if small.p() != big.p() || big.ext_degree() % small.ext_degree() != 0 {
            return Err(FieldError::SpecMismatch);
        }
        // The small modulus as a polynomial over the big field.
        let modulus = Poly::new(
            Arc::clone(big),
            small.modulus().iter().map(|&c| big.from_prime(c)).collect(),
        );
        let roots = roots_in_field(&modulus);
        let root = roots
            .first()
            .map(|(r, _)| r.clone())
            .expect("modulus splits in any field of compatible degree");
        let deg = small.ext_degree() as usize;
        let mut gen_powers = Vec::with_capacity(deg);
        let mut cur = big.one();
        for _ in 0..deg {
            gen_powers.push(cur.clone());
            cur = cur.mul(&root);
        }
        Ok(FieldEmbedding { small: Arc::clone(small), big: Arc::clone(big), gen_powers })
    }

    pub fn small(&self) -> &Arc<FieldSpec> {
        &self.small
    }

    pub fn big(&self) -> &Arc<FieldSpec> {
        &self.big
    }

    /// Image of an element of the small field.
    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert!(
            a.spec() == &self.small || Arc::ptr_eq(a.spec(), &self.small),
            "element from a different field"
        );
        let mut acc = self.big.zero();
        for (i, &c) in a.coeffs().iter().enumerate() {
            if c != 0 {
                acc = acc.add(&self.gen_powers[i].mul(&self.big.from_prime(c)));
            }
        }
        acc
    }

    /// Maps a polynomial coefficientwise.
    pub fn apply_poly(&self, p: &Poly<FieldElement>) -> Poly<FieldElement> {
        Poly::new(
            Arc::clone(&self.big),
            p.coeffs().iter().map(|c| self.apply(c)).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_homomorphism() {
        // F_4 = F_{2^2} into F_16 = F_{2^4}.
        let small = FieldSpec::new(2, 1, None).unwrap();
        let big = FieldSpec::new(2, 2, None).unwrap();
        let e = FieldEmbedding::new(&small, &big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(e.apply(&a.add(&b)), e.apply(&a).add(&e.apply(&b)));
                assert_eq!(e.apply(&a.mul(&b)), e.apply(&a).mul(&e.apply(&b)));
            }
        }
        assert!(e.apply(&small.one()).is_one());
        assert!(e.apply(&small.zero()).is_zero());
        // Injective on a small field: distinct images.
        let imgs: Vec<_> = small.elements().map(|a| e.apply(&a)).collect();
        for i in 0..imgs.len() {
            for j in 0..i {
                assert_ne!(imgs[i], imgs[j]);
            }
        }
    }

    #[test]
    fn incompatible_degrees_rejected() {
        let f4 = FieldSpec::new(2, 1, None).unwrap(); // degree 2
        let f8_spec = FieldSpec::new(3, 1, None).unwrap(); // wrong characteristic
        assert!(FieldEmbedding::new(&f4, &f8_spec).is_err());
    }
}
