use crate::error::{Error, Result};

/// Arithmetic tables of the prime field `Z/qZ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    inv: Vec<Option<usize>>,
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

impl PrimeField {
    pub fn new(q: usize) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime { value: q });
        }
        let add = (0..q * q).map(|i| (i / q + i % q) % q).collect();
        let mul: Vec<usize> = (0..q * q).map(|i| (i / q) * (i % q) % q).collect();
        let inv = (0..q)
            .map(|a| (1..q).find(|&b| mul[a * q + b] == 1))
            .collect();
        Ok(Self { q, add, mul, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (self.q - a) % self.q
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        self.inv[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let f2 = PrimeField::new(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(f2.add(a, b), a ^ b);
                assert_eq!(f2.mul(a, b), a & b);
            }
        }
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.mul(2, 2), 1);
        assert_eq!(f3.inv(2), Some(2));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.inv(3), Some(2));
        assert_eq!(f5.inv(0), None);
    }

    #[test]
    fn rejects_composites() {
        for q in [0, 1, 4, 6, 9, 15] {
            assert_eq!(PrimeField::new(q), Err(Error::NotPrime { value: q }));
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 5, 7, 11, 13] {
            let f = PrimeField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
