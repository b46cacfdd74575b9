use std::cmp::Ordering;

/// A monomial `z^e · θ_{i1} θ_{i2} ⋯` with the odd factors in ascending context order.
///
/// Even exponents are stored densely against the owning context; the odd set is a
/// bitmask (bit `i` = odd variable `i`). Any sign produced while bringing odd factors
/// into ascending order belongs to the coefficient, never to the monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    exps: Box<[u32]>,
    odd: u64,
}

/// Sign of sorting the sequence of odd indices into ascending order, or `None`
/// if an index repeats (the product vanishes).
pub(crate) fn sort_odd_sequence(indices: &[usize]) -> Option<(u64, bool)> {
    let mut mask = 0u64;
    let mut negative = false;
    for &i in indices {
        let bit = 1u64 << i;
        if mask & bit != 0 {
            return None;
        }
        // each already-placed index greater than `i` is one inversion
        negative ^= (mask >> i).count_ones() % 2 == 1;
        mask |= bit;
    }
    Some((mask, negative))
}

impl SuperMonomial {
    pub fn one(num_even: usize) -> Self {
        SuperMonomial {
            exps: vec![0; num_even].into_boxed_slice(),
            odd: 0,
        }
    }

    pub fn new(exps: Vec<u32>, odd: u64) -> Self {
        SuperMonomial {
            exps: exps.into_boxed_slice(),
            odd,
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    /// Odd indices in ascending order.
    pub fn odd_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.odd;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }

    pub fn even_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn odd_degree(&self) -> u32 {
        self.odd.count_ones()
    }

    pub fn is_odd(&self) -> bool {
        self.odd_degree() % 2 == 1
    }

    pub fn is_one(&self) -> bool {
        self.odd == 0 && self.exps.iter().all(|&e| e == 0)
    }

    /// Product `self · other`; `None` when an odd generator repeats. The flag is
    /// `true` when reordering the odd factors costs a sign.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut m = other.odd;
        while m != 0 {
            let j = m.trailing_zeros();
            inversions += (self.odd >> j).count_ones();
            m &= m - 1;
        }
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Some((
            SuperMonomial {
                exps,
                odd: self.odd | other.odd,
            },
            inversions % 2 == 1,
        ))
    }
}

/// Graded lexicographic on the even exponents, ties broken by the odd bitmask.
impl Ord for SuperMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.even_degree()
            .cmp(&other.even_degree())
            .then_with(|| self.exps.cmp(&other.exps))
            .then_with(|| self.odd.cmp(&other.odd))
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmann_square_vanishes() {
        let t = SuperMonomial::new(vec![], 0b1);
        assert!(t.mul(&t).is_none());
    }

    #[test]
    fn anticommuting_reorder() {
        let t1 = SuperMonomial::new(vec![], 0b01);
        let t2 = SuperMonomial::new(vec![], 0b10);
        assert_eq!(t1.mul(&t2).unwrap(), (SuperMonomial::new(vec![], 0b11), false));
        assert_eq!(t2.mul(&t1).unwrap(), (SuperMonomial::new(vec![], 0b11), true));
    }

    #[test]
    fn sort_sequence_sign() {
        assert_eq!(sort_odd_sequence(&[2, 0, 1]), Some((0b111, false)));
        assert_eq!(sort_odd_sequence(&[1, 0]), Some((0b11, true)));
        assert_eq!(sort_odd_sequence(&[2, 1, 0]), Some((0b111, true)));
        assert_eq!(sort_odd_sequence(&[1, 1]), None);
    }

    #[test]
    fn order_is_graded_first() {
        let z1 = SuperMonomial::new(vec![1, 0], 0);
        let z2 = SuperMonomial::new(vec![0, 1], 0);
        let z2sq = SuperMonomial::new(vec![0, 2], 0);
        assert!(z1 > z2);
        assert!(z2sq > z1);
        let t = SuperMonomial::new(vec![0, 0], 1);
        assert!(t > SuperMonomial::one(2));
        assert!(z2 > t);
    }
}
