use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Maximum number of odd generators in one context; odd sets are stored as a `u64` bitmask.
pub const MAX_ODD_VARS: usize = 64;

/// Z/2 grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// Position of a generator inside its context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Even(usize),
    Odd(usize),
}

impl Var {
    pub fn parity(self) -> Parity {
        match self {
            Var::Even(_) => Parity::Even,
            Var::Odd(_) => Parity::Odd,
        }
    }
}

struct Inner {
    even: Vec<String>,
    odd: Vec<String>,
    index: HashMap<String, Var>,
}

/// An ordered list of even and odd generator names.
///
/// The order is fixed at construction: canonical forms of polynomials depend on it,
/// in particular odd factors are always stored in ascending declared order.
/// Cloning is cheap (shared).
#[derive(Clone)]
pub struct VariableContext(Arc<Inner>);

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableContext {
    pub fn new<S: AsRef<str>>(even: &[S], odd: &[S]) -> Result<Self> {
        let even: Vec<String> = even.iter().map(|s| s.as_ref().to_string()).collect();
        let odd: Vec<String> = odd.iter().map(|s| s.as_ref().to_string()).collect();
        if odd.len() > MAX_ODD_VARS {
            return Err(Error::TooManyOddVariables(odd.len()));
        }
        let mut index = HashMap::with_capacity(even.len() + odd.len());
        let tagged = even
            .iter()
            .enumerate()
            .map(|(i, n)| (n, Var::Even(i)))
            .chain(odd.iter().enumerate().map(|(i, n)| (n, Var::Odd(i))));
        for (name, var) in tagged {
            if !valid_name(name) {
                return Err(Error::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), var).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(VariableContext(Arc::new(Inner { even, odd, index })))
    }

    pub fn empty() -> Self {
        Self::new::<&str>(&[], &[]).expect("empty context is valid")
    }

    pub fn even_vars(&self) -> &[String] {
        &self.0.even
    }

    pub fn odd_vars(&self) -> &[String] {
        &self.0.odd
    }

    pub fn num_even(&self) -> usize {
        self.0.even.len()
    }

    pub fn num_odd(&self) -> usize {
        self.0.odd.len()
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.0.index.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Result<Var> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn name(&self, var: Var) -> &str {
        match var {
            Var::Even(i) => &self.0.even[i],
            Var::Odd(i) => &self.0.odd[i],
        }
    }

    /// All generators, even ones first, in declared order.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.num_even())
            .map(Var::Even)
            .chain((0..self.num_odd()).map(Var::Odd))
    }

    pub fn same(&self, other: &VariableContext) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.even == other.0.even && self.0.odd == other.0.odd)
    }
}

impl PartialEq for VariableContext {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for VariableContext {}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VariableContext({self})")
    }
}

/// Header form `even z1 z2; odd t1 t2`.
impl fmt::Display for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("even")?;
        for n in self.even_vars() {
            write!(f, " {n}")?;
        }
        f.write_str("; odd")?;
        for n in self.odd_vars() {
            write!(f, " {n}")?;
        }
        Ok(())
    }
}

impl FromStr for VariableContext {
    type Err = Error;

    /// Parses `even a b; odd c d`. Either clause may be missing or empty.
    fn from_str(s: &str) -> Result<Self> {
        let mut even: Option<Vec<&str>> = None;
        let mut odd: Option<Vec<&str>> = None;
        let mut pos = 0;
        for clause in s.split(';') {
            let mut words = clause.split_whitespace();
            match words.next() {
                None => {}
                Some("even") if even.is_none() => even = Some(words.collect()),
                Some("odd") if odd.is_none() => odd = Some(words.collect()),
                Some(other) => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("expected `even` or `odd` clause, found `{other}`"),
                    })
                }
            }
            pos += clause.len() + 1;
        }
        Self::new(&even.unwrap_or_default(), &odd.unwrap_or_default())
    }
}
