//! Exact linear algebra over Q on coordinate vectors of polynomials.
//!
//! Columns are monomials sorted in *descending* monomial order, so pivoting
//! left to right always picks the largest available monomial (graded-lex
//! pivoting) and reduced echelon forms are reproducible.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::superalgebra::{Rational, SuperMonomial, SuperPolynomial, VariableContext};

/// A subspace of Q^n kept in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Span {
    ncols: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Span {
    pub fn new(ncols: usize) -> Self {
        Span {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &w[pivot];
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let f = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, w));
        true
    }

    /// Reduced basis rows, ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut span = Span::new(first.len());
    for r in rows {
        span.insert(r);
    }
    span.dim()
}

/// Solves `Σ x_j · columns[j] = target`; free unknowns are set to zero.
pub fn solve(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let m = target.len();
    let n = columns.len();
    // augmented system, one row per coordinate
    let mut a: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][col];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = a[i][n].clone();
    }
    Some(x)
}

/// Coordinate system given by a finite list of monomials (descending order).
#[derive(Debug, Clone)]
pub struct MonomialIndex {
    monomials: Vec<SuperMonomial>,
    position: HashMap<SuperMonomial, usize>,
}

impl MonomialIndex {
    pub fn new(monomials: impl IntoIterator<Item = SuperMonomial>) -> Self {
        let mut monomials: Vec<SuperMonomial> = monomials.into_iter().collect();
        monomials.sort_unstable_by(|a, b| b.cmp(a));
        monomials.dedup();
        let position = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialIndex {
            monomials,
            position,
        }
    }

    /// Every monomial occurring in any of the polynomials.
    pub fn covering<'a>(polys: impl IntoIterator<Item = &'a SuperPolynomial>) -> Self {
        Self::new(
            polys
                .into_iter()
                .flat_map(|p| p.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>()),
        )
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[SuperMonomial] {
        &self.monomials
    }

    /// Coordinates of `p`, or `None` if `p` has a monomial outside the index.
    pub fn coordinates(&self, p: &SuperPolynomial) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.len()];
        for (m, c) in p.terms() {
            v[*self.position.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn polynomial(&self, ctx: &VariableContext, v: &[Rational]) -> SuperPolynomial {
        SuperPolynomial::from_terms(
            ctx,
            self.monomials
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}
