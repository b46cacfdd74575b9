use num_traits::One;

use super::{AmbientRing, Superdivisor};
use crate::error::{Error, Result};
use crate::superalgebra::{Parity, Rational, SuperPolynomial};

/// Coordinates of a class in `B[z, t]/(f)` on the basis
/// `1, z, ..., z^(g-1), t, t*z, ..., t*z^(g-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    /// Coefficients of `1, z, ..., z^(g-1)`.
    pub even: Vec<SuperPolynomial>,
    /// Coefficients of `t, t*z, ..., t*z^(g-1)`.
    pub odd: Vec<SuperPolynomial>,
}

impl NormalForm {
    /// All `2g` coordinates, even half first.
    pub fn coordinates(&self) -> impl Iterator<Item = &SuperPolynomial> {
        self.even.iter().chain(&self.odd)
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates().all(SuperPolynomial::is_zero)
    }
}

/// The quotient `B[z, t]/(f)` of a superdivisor, as a free module over `B`.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    divisor: Superdivisor,
    // a_i + t*b_i, z-free elements of the ambient ring
    coeffs: Vec<SuperPolynomial>,
}

impl QuotientPresentation {
    pub fn new(divisor: Superdivisor) -> Self {
        let coeffs = (1..=divisor.degree())
            .map(|i| divisor.coefficient(i).expect("index in range"))
            .collect();
        QuotientPresentation { divisor, coeffs }
    }

    pub fn divisor(&self) -> &Superdivisor {
        &self.divisor
    }

    fn ring(&self) -> &AmbientRing {
        self.divisor.ring()
    }

    pub fn degree(&self) -> usize {
        self.divisor.degree()
    }

    /// The `2g` basis classes as ambient elements.
    pub fn basis(&self) -> Vec<SuperPolynomial> {
        let z = self.ring().z();
        let theta = self.ring().theta();
        let evens: Vec<_> = (0..self.degree()).map(|k| z.pow(k as u32)).collect();
        let odds: Vec<_> = evens.iter().map(|p| &theta * p).collect();
        evens.into_iter().chain(odds).collect()
    }

    /// Remainder of `p` as `sum_{k<g} z^k * r_k` with `r_k` free of `z`.
    fn remainder(&self, p: &SuperPolynomial) -> Result<Vec<SuperPolynomial>> {
        let ring = self.ring();
        let ctx = ring.context();
        let parts = ring.split(p)?;
        let mut c: Vec<SuperPolynomial> = parts
            .iter()
            .map(|(a, b)| Ok(ring.lift(a)? + ring.theta() * ring.lift(b)?))
            .collect::<Result<_>>()?;
        let g = self.degree();
        // z^g = sum_i (-1)^(i+1) * (a_i + t*b_i) * z^(g-i)
        for k in (g..c.len()).rev() {
            let top = std::mem::replace(&mut c[k], SuperPolynomial::zero(ctx));
            if top.is_zero() {
                continue;
            }
            for (i, f) in self.coeffs.iter().enumerate() {
                let i = i + 1;
                let term = &top * f;
                c[k - i] = if i % 2 == 1 {
                    &c[k - i] + &term
                } else {
                    &c[k - i] - &term
                };
            }
        }
        c.resize(g.max(c.len()), SuperPolynomial::zero(ctx));
        c.truncate(g);
        Ok(c)
    }

    pub fn normal_form(&self, p: &SuperPolynomial) -> Result<NormalForm> {
        let ring = self.ring();
        let zero = SuperPolynomial::zero(ring.base());
        let mut even = Vec::with_capacity(self.degree());
        let mut odd = Vec::with_capacity(self.degree());
        for r in self.remainder(p)? {
            let mut parts = ring.split(&r)?;
            let (a, b) = if parts.is_empty() {
                (zero.clone(), zero.clone())
            } else {
                parts.swap_remove(0)
            };
            even.push(a);
            odd.push(b);
        }
        Ok(NormalForm { even, odd })
    }

    /// The ambient element with the given coordinates.
    pub fn reconstruct(&self, nf: &NormalForm) -> Result<SuperPolynomial> {
        if nf.even.len() != self.degree() || nf.odd.len() != self.degree() {
            return Err(Error::SizeMismatch {
                expected: self.degree(),
                got: nf.even.len().max(nf.odd.len()),
            });
        }
        let parts: Vec<_> = nf.even.iter().cloned().zip(nf.odd.iter().cloned()).collect();
        self.ring().join(&parts)
    }

    /// Ranks of the even and odd halves of the basis over the base.
    ///
    /// The coordinate matrix of the basis classes is reduced using only
    /// nonzero constant pivots, which are units of the base; every pivot found
    /// this way certifies one free basis direction.
    pub fn rank(&self) -> Result<(usize, usize)> {
        let g = self.degree();
        let mut rows: Vec<Vec<SuperPolynomial>> = self
            .basis()
            .iter()
            .map(|b| Ok(self.normal_form(b)?.coordinates().cloned().collect()))
            .collect::<Result<_>>()?;
        let mut pivot_cols = Vec::new();
        let mut used = vec![false; rows.len()];
        for col in 0..2 * g {
            let Some(r) = (0..rows.len())
                .find(|&r| !used[r] && rows[r][col].is_constant() && !rows[r][col].is_zero())
            else {
                continue;
            };
            used[r] = true;
            let inv = Rational::one() / rows[r][col].constant_term();
            let pivot: Vec<SuperPolynomial> = rows[r].iter().map(|x| x.scale(&inv)).collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
            pivot_cols.push(col);
        }
        let even = pivot_cols.iter().filter(|&&c| c < g).count();
        Ok((even, pivot_cols.len() - even))
    }

    /// Matrix of multiplication by an even element on `1, z, ..., z^(g-1)`
    /// over `B[t]`; column `j` holds the coordinates of `m * z^j`.
    pub fn multiplication_matrix(&self, m: &SuperPolynomial) -> Result<Vec<Vec<SuperPolynomial>>> {
        if !m.context().same(self.ring().context()) {
            return Err(Error::ContextMismatch);
        }
        if !m.has_parity(Parity::Even) {
            return Err(Error::OddMultiplier);
        }
        let g = self.degree();
        let z = self.ring().z();
        let cols: Vec<Vec<SuperPolynomial>> = (0..g)
            .map(|j| self.remainder(&(m * &z.pow(j as u32))))
            .collect::<Result<_>>()?;
        Ok((0..g)
            .map(|i| (0..g).map(|j| cols[j][i].clone()).collect())
            .collect())
    }

    /// `det(z - M)` for the multiplication matrix `M` of `m`, as a monic
    /// polynomial in the ambient coordinate.
    ///
    /// The entries commute (they are even), and the Faddeev-LeVerrier recursion
    /// only divides by integers, so it is valid over this ring with nilpotents.
    pub fn char_poly(&self, m: &SuperPolynomial) -> Result<SuperPolynomial> {
        let a = self.multiplication_matrix(m)?;
        let ctx = self.ring().context();
        let n = a.len();
        let zero = SuperPolynomial::zero(ctx);
        let identity = |c: &SuperPolynomial| -> Vec<Vec<SuperPolynomial>> {
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { c.clone() } else { zero.clone() }).collect())
                .collect()
        };
        let matmul = |x: &[Vec<SuperPolynomial>], y: &[Vec<SuperPolynomial>]| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n).fold(zero.clone(), |acc, k| {
                                if x[i][k].is_zero() || y[k][j].is_zero() {
                                    acc
                                } else {
                                    acc + &x[i][k] * &y[k][j]
                                }
                            })
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        };
        // coefficients c[n] = 1, c[n-1], ..., c[0]
        let mut c = vec![zero.clone(); n + 1];
        c[n] = SuperPolynomial::one(ctx);
        let mut mk = identity(&zero);
        for k in 1..=n {
            let mut next = matmul(&a, &mk);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] = &row[i] + &c[n - k + 1];
            }
            mk = next;
            let am = matmul(&a, &mk);
            let trace = (0..n).fold(zero.clone(), |acc, i| acc + &am[i][i]);
            let k_inv = Rational::new((-1).into(), (k as i64).into());
            c[n - k] = trace.scale(&k_inv);
        }
        let z = self.ring().z();
        let mut result = zero.clone();
        for (k, coeff) in c.iter().enumerate() {
            if !coeff.is_zero() {
                result = result + coeff * &z.pow(k as u32);
            }
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::VariableContext;

    fn divisor(h: &str, coeffs: &[(&str, &str)]) -> Superdivisor {
        let base: VariableContext = h.parse().unwrap();
        Superdivisor::parse(AmbientRing::with_defaults(&base).unwrap(), coeffs).unwrap()
    }

    fn b(d: &Superdivisor, s: &str) -> SuperPolynomial {
        SuperPolynomial::parse(d.base(), s).unwrap()
    }

    fn amb(d: &Superdivisor, s: &str) -> SuperPolynomial {
        SuperPolynomial::parse(d.ring().context(), s).unwrap()
    }

    #[test]
    fn one_reduction_step() {
        let d = divisor("even a1 a2; odd b1 b2", &[("a1", "b1"), ("a2", "b2")]);
        let q = d.quotient();
        let nf = q.normal_form(&amb(&d, "z^2")).unwrap();
        assert_eq!(nf.even, vec![b(&d, "-a2"), b(&d, "a1")]);
        assert_eq!(nf.odd, vec![b(&d, "-b2"), b(&d, "b1")]);
        assert_eq!(
            q.reconstruct(&nf).unwrap(),
            amb(&d, "a1*z + t*b1*z - a2 - t*b2")
        );
        let tf = amb(&d, "t") * d.defining_polynomial();
        assert!(q.normal_form(&tf).unwrap().is_zero());
        assert_eq!(q.rank().unwrap(), (2, 2));
    }

    #[test]
    fn char_poly_examples() {
        let d = divisor("even a1 a2; odd b1 b2", &[("a1", "b1"), ("a2", "b2")]);
        let q = d.quotient();
        let m = q.multiplication_matrix(&amb(&d, "z")).unwrap();
        assert_eq!(m[0][0], amb(&d, "0"));
        assert_eq!(m[0][1], amb(&d, "-a2 - t*b2"));
        assert_eq!(m[1][0], amb(&d, "1"));
        assert_eq!(m[1][1], amb(&d, "a1 + t*b1"));
        assert_eq!(q.char_poly(&amb(&d, "z")).unwrap(), d.defining_polynomial());

        let d1 = divisor("even a; odd b", &[("a", "b")]);
        let q1 = d1.quotient();
        assert_eq!(q1.char_poly(&amb(&d1, "z")).unwrap(), d1.defining_polynomial());
        assert_eq!(
            q1.char_poly(&amb(&d1, "z^2")).unwrap(),
            amb(&d1, "z - a^2 - 2*a*t*b")
        );
        assert_eq!(q1.char_poly(&amb(&d1, "t")).unwrap_err(), Error::OddMultiplier);
    }

    #[test]
    fn degree_zero_quotient() {
        let base: VariableContext = "even a".parse().unwrap();
        let d = Superdivisor::trivial(AmbientRing::with_defaults(&base).unwrap());
        let q = d.quotient();
        assert!(q.normal_form(&amb(&d, "z^3 + a")).unwrap().is_zero());
        assert_eq!(q.rank().unwrap(), (0, 0));
        assert_eq!(q.char_poly(&amb(&d, "z")).unwrap(), amb(&d, "1"));
    }
}
