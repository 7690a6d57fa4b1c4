//! Fibonacci numeration.
//!
//! Indices follow the convention `fib(0) = fib(1) = 1`, `fib(2) = 2`, `fib(3) = 3`,
//! `fib(4) = 5`, ... Zeckendorf representations only use indices `>= 1`, which makes
//! the representation unique and lets the parity of the smallest index decide the
//! Fibonacci word symbol `c_n`.

use std::fmt;

use crate::{Error, Int, Result};

/// Index into the Fibonacci sequence.
pub type FibIndex = usize;

/// `fib(i)` with `fib(0) = fib(1) = 1`.
pub fn fib<T: Int>(i: FibIndex) -> T {
    let (mut a, mut b) = (T::one(), T::one());
    for _ in 0..i {
        let next = a + b.clone();
        a = b;
        b = next;
    }
    a
}

/// All `fib(i)` for `i = 0, 1, ...` up to and including the first value exceeding `bound`.
pub(crate) fn fib_table_past<T: Int>(bound: &T) -> Vec<T> {
    let mut table = vec![T::one(), T::one()];
    while table.last().unwrap() <= bound {
        let n = table.len();
        let next = table[n - 1].clone() + table[n - 2].clone();
        table.push(next);
    }
    table
}

/// Strictly increasing, pairwise non-adjacent Fibonacci indices, all `>= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeckendorfRep {
    indices: Vec<FibIndex>,
}

impl ZeckendorfRep {
    pub fn new(indices: Vec<FibIndex>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidZeckendorf("empty index list".into()));
        }
        if indices[0] == 0 {
            return Err(Error::InvalidZeckendorf("index 0 is not allowed".into()));
        }
        for w in indices.windows(2) {
            if w[1] < w[0] + 2 {
                return Err(Error::InvalidZeckendorf(format!(
                    "indices {} and {} are not increasing and non-adjacent",
                    w[0], w[1]
                )));
            }
        }
        Ok(ZeckendorfRep { indices })
    }

    pub fn indices(&self) -> &[FibIndex] {
        &self.indices
    }

    pub fn smallest(&self) -> FibIndex {
        self.indices[0]
    }

    pub fn largest(&self) -> FibIndex {
        *self.indices.last().unwrap()
    }

    pub fn value<T: Int>(&self) -> T {
        let mut table = vec![T::one(), T::one()];
        while table.len() <= self.largest() {
            let n = table.len();
            table.push(table[n - 1].clone() + table[n - 2].clone());
        }
        self.indices
            .iter()
            .fold(T::zero(), |acc, &i| acc + table[i].clone())
    }
}

impl fmt::Display for ZeckendorfRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Greedy Zeckendorf decomposition of `n >= 1`.
pub fn zeckendorf<T: Int>(n: &T) -> Result<ZeckendorfRep> {
    if !n.is_positive() {
        return Err(Error::not_positive("n", n));
    }
    let table = fib_table_past(n);
    let mut rem = n.clone();
    let mut indices = Vec::new();
    // table[0] == table[1]; index 0 is never used.
    let mut i = table.len() - 1;
    while !rem.is_zero() {
        while table[i] > rem {
            i -= 1;
        }
        rem = rem - table[i].clone();
        indices.push(i);
        // greedy never picks i-1 next: rem < fib(i-1)
        i = i.saturating_sub(2).max(1);
    }
    indices.reverse();
    ZeckendorfRep::new(indices)
}

pub fn unzeckendorf<T: Int>(rep: &ZeckendorfRep) -> T {
    rep.value()
}

/// Validating variant of [`unzeckendorf`] for raw index lists.
pub fn unzeckendorf_indices<T: Int>(indices: &[FibIndex]) -> Result<T> {
    Ok(ZeckendorfRep::new(indices.to_vec())?.value())
}

/// Period of the Fibonacci sequence modulo `n`, found by scanning consecutive
/// residue pairs until the initial pair recurs.
pub fn pisano<T: Int>(n: &T) -> Result<usize> {
    if !n.is_positive() {
        return Err(Error::not_positive("modulus", n));
    }
    let start = (T::one().mod_floor(n), T::one().mod_floor(n));
    let (mut a, mut b) = start.clone();
    let mut period = 0usize;
    loop {
        let next = (a.clone() + b.clone()).mod_floor(n);
        a = b;
        b = next;
        period += 1;
        if a == start.0 && b == start.1 {
            return Ok(period);
        }
    }
}

/// Residues `fib(i) mod n` for `i` in `0..len`.
pub(crate) fn fib_residues<T: Int>(n: &T, len: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(len);
    let (mut a, mut b) = (T::one().mod_floor(n), T::one().mod_floor(n));
    for _ in 0..len {
        out.push(a.clone());
        let next = (a + b.clone()).mod_floor(n);
        a = b;
        b = next;
    }
    out
}

/// A symbol of the Fibonacci word: `One` marks values of `f`, `Zero` values of `f(x) + x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FibWordBit {
    Zero,
    One,
}

impl FibWordBit {
    pub fn as_char(self) -> char {
        match self {
            FibWordBit::Zero => '0',
            FibWordBit::One => '1',
        }
    }
}

impl From<bool> for FibWordBit {
    fn from(b: bool) -> Self {
        if b {
            FibWordBit::One
        } else {
            FibWordBit::Zero
        }
    }
}

impl fmt::Display for FibWordBit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

pub fn word_to_string(word: &[FibWordBit]) -> String {
    word.iter().map(|b| b.as_char()).collect()
}

fn substitute(row: &[FibWordBit]) -> Vec<FibWordBit> {
    let mut next = Vec::with_capacity(row.len() * 2);
    for &b in row {
        match b {
            FibWordBit::One => next.extend([FibWordBit::One, FibWordBit::Zero]),
            FibWordBit::Zero => next.push(FibWordBit::One),
        }
    }
    next
}

/// The first `count` rows `10, 101, 10110, ...` of the substitution `1 -> 10, 0 -> 1`.
pub fn fib_word_rows(count: usize) -> Vec<Vec<FibWordBit>> {
    let mut rows = Vec::with_capacity(count);
    let mut row = vec![FibWordBit::One, FibWordBit::Zero];
    for _ in 0..count {
        let next = substitute(&row);
        rows.push(row);
        row = next;
    }
    rows
}

/// First `len` symbols of the Fibonacci word.
pub fn fib_word_prefix(len: usize) -> Vec<FibWordBit> {
    let mut row = vec![FibWordBit::One];
    while row.len() < len {
        row = substitute(&row);
    }
    row.truncate(len);
    row
}

/// `c_n`: `One` iff the smallest Zeckendorf index of `n` is odd.
pub fn c<T: Int>(n: &T) -> Result<FibWordBit> {
    let rep = zeckendorf(n)?;
    Ok(FibWordBit::from(rep.smallest() % 2 == 1))
}
