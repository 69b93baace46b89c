//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(z_n)` is stored as rational coefficients over powers of
//! `z_n = exp(2 pi i / n)`, restricted to the Zumbroich basis. An exponent
//! `i` belongs to that basis when, for every prime power `p^v` exactly
//! dividing `n`, the top base-`p` digit of `i mod p^v` is nonzero (odd `p`)
//! or zero (`p = 2`). Any power of `z_n` is rewritten into the basis with
//!
//! ```text
//! z^i = -(z^(i + n/p) + ... + z^(i + (p-1) n/p))     (odd p)
//! z^i = -z^(i + n/2)                                   (p = 2)
//! ```
//!
//! which makes the representation unique, so equality is coefficient
//! equality within one field.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::arith;

pub type Rational = Ratio<i128>;

#[derive(Clone, Copy, Debug)]
struct DigitRule {
    p: u32,
    /// `p^v`
    modulus: u32,
    /// `p^(v-1)`
    top: u32,
    /// `n / p`
    step: u32,
}

impl DigitRule {
    #[inline]
    fn allowed(&self, i: u32) -> bool {
        let digit = (i % self.modulus) / self.top;
        if self.p == 2 {
            digit == 0
        } else {
            digit != 0
        }
    }
}

fn digit_rules(n: u32) -> Vec<DigitRule> {
    arith::factorize(n as u64)
        .into_iter()
        .map(|(p, v)| {
            let p = p as u32;
            DigitRule {
                p,
                modulus: p.pow(v),
                top: p.pow(v - 1),
                step: n / p,
            }
        })
        .collect()
}

/// Exponents of the Zumbroich basis of `Q(z_n)`, ascending.
pub fn zumbroich_basis(n: u32) -> Vec<u32> {
    let rules = digit_rules(n);
    (0..n).filter(|&i| rules.iter().all(|r| r.allowed(i))).collect()
}

fn add_into(map: &mut BTreeMap<u32, Rational>, key: u32, value: Rational) {
    let slot = map.entry(key).or_insert_with(Rational::zero);
    *slot += value;
}

fn canonicalize(n: u32, mut map: BTreeMap<u32, Rational>) -> Vec<(u32, Rational)> {
    for rule in digit_rules(n) {
        let bad: Vec<u32> = map.keys().copied().filter(|&i| !rule.allowed(i)).collect();
        for i in bad {
            let c = map.remove(&i).unwrap();
            if c.is_zero() {
                continue;
            }
            if rule.p == 2 {
                add_into(&mut map, (i + n / 2) % n, -c);
            } else {
                for k in 1..rule.p {
                    add_into(&mut map, (i + k * rule.step) % n, -c);
                }
            }
        }
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// An element of the cyclotomic field `Q(z_n)` in canonical form.
#[derive(Clone)]
pub struct Cyclotomic {
    n: u32,
    terms: Vec<(u32, Rational)>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        assert!(n > 0, "conductor must be positive");
        Cyclotomic { n, terms: Vec::new() }
    }

    pub fn from_rational(n: u32, q: Rational) -> Self {
        Self::from_terms(n, [(0, q)])
    }

    pub fn from_integer(n: u32, k: i128) -> Self {
        Self::from_rational(n, Rational::from_integer(k))
    }

    pub fn one(n: u32) -> Self {
        Self::from_integer(n, 1)
    }

    /// `z_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as u32;
        Self::from_terms(n, [(e, Rational::one())])
    }

    /// `sum c * z_n^i` over arbitrary exponents (reduced mod `n`).
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        assert!(n > 0, "conductor must be positive");
        let mut map = BTreeMap::new();
        for (i, c) in terms {
            add_into(&mut map, i % n, c);
        }
        Cyclotomic {
            n,
            terms: canonicalize(n, map),
        }
    }

    /// `sum counts[i] * z_n^i` for integer counts.
    pub fn from_counts(n: u32, counts: &[i128]) -> Self {
        assert_eq!(counts.len(), n as usize, "one count per exponent");
        Self::from_dense_integers(n, counts.to_vec())
    }

    /// Canonical form of an integer combination given densely, without
    /// rational arithmetic.
    pub(crate) fn from_dense_integers(n: u32, mut counts: Vec<i128>) -> Self {
        for rule in digit_rules(n) {
            for i in 0..n {
                let c = counts[i as usize];
                if c == 0 || rule.allowed(i) {
                    continue;
                }
                counts[i as usize] = 0;
                // Targets are allowed by this rule and keep every other digit.
                if rule.p == 2 {
                    counts[((i + n / 2) % n) as usize] -= c;
                } else {
                    for k in 1..rule.p {
                        counts[((i + k * rule.step) % n) as usize] -= c;
                    }
                }
            }
        }
        Cyclotomic {
            n,
            terms: counts
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(i, c)| (i as u32, Rational::from_integer(c)))
                .collect(),
        }
    }

    /// The `n` of the field `Q(z_n)` this value is stored in (not
    /// necessarily minimal; see [`Cyclotomic::reduced`]).
    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Nonzero `(exponent, coefficient)` pairs over the Zumbroich basis.
    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        // A rational q is canonically q * z^0 in every field: the exponent 0
        // is rewritten only when some odd prime divides n.
        let q = Cyclotomic::from_rational(self.n, Rational::one());
        match self.terms.len() {
            0 => Some(Rational::zero()),
            len if len == q.terms.len() => {
                let ratio = self.terms[0].1 / q.terms[0].1;
                let candidate = q.scale(ratio);
                (candidate.terms == self.terms).then_some(ratio)
            }
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn scale(&self, q: Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.n);
        }
        Cyclotomic {
            n: self.n,
            terms: self.terms.iter().map(|&(i, c)| (i, c * q)).collect(),
        }
    }

    /// Re-expresses the value in `Q(z_m)`; `m` must be a multiple of the
    /// current conductor.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "cannot embed Q(z_{}) into Q(z_{m})", self.n);
        if m == self.n {
            return self.clone();
        }
        let f = m / self.n;
        Self::from_terms(m, self.terms.iter().map(|&(i, c)| (i * f, c)))
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.n == other.n {
            (self.clone(), other.clone())
        } else {
            let m = arith::lcm(self.n as u64, other.n as u64) as u32;
            (self.embed(m), other.embed(m))
        }
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The Galois automorphism `z -> z^k`; `k` must be coprime to the
    /// conductor.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n as i64;
        let k = k.rem_euclid(n) as u64;
        Self::from_terms(
            self.n,
            self.terms
                .iter()
                .map(|&(i, c)| (((i as u64 * k) % n as u64) as u32, c)),
        )
    }

    /// Structural order on canonical terms; meaningful only between values
    /// stored with the same conductor.
    pub(crate) fn cmp_terms(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        self.terms.cmp(&other.terms)
    }

    /// Least `d` such that the value lies in `Q(z_d)`.
    pub fn minimal_conductor(&self) -> u32 {
        if self.as_rational().is_some() {
            return 1;
        }
        let n = self.n as u64;
        for d in arith::divisors(n) {
            if d % 4 == 2 {
                continue;
            }
            let fixed = (1..=n)
                .step_by(d as usize)
                .filter(|&k| arith::gcd(k, n) == 1)
                .all(|k| self.galois(k as i64) == *self);
            if fixed {
                return d as u32;
            }
        }
        self.n
    }

    /// The same value stored over its minimal conductor.
    pub fn reduced(&self) -> Self {
        let d = self.minimal_conductor();
        if d == self.n {
            return self.clone();
        }
        if d == 1 {
            return Cyclotomic::from_rational(1, self.as_rational().unwrap());
        }
        // Solve for the coordinates in Q(z_d) against the embedded basis.
        let basis = zumbroich_basis(d);
        let columns: Vec<Cyclotomic> = basis
            .iter()
            .map(|&j| Cyclotomic::root_of_unity(d, j as i64).embed(self.n))
            .collect();
        let rows = zumbroich_basis(self.n);
        let mut matrix: Vec<Vec<Rational>> = rows
            .iter()
            .map(|&i| {
                let mut row: Vec<Rational> = columns.iter().map(|c| c.coefficient(i)).collect();
                row.push(self.coefficient(i));
                row
            })
            .collect();
        let solution = solve_consistent(&mut matrix, basis.len())
            .expect("a value fixed by the subfield Galois group lies in the subfield");
        Cyclotomic::from_terms(d, basis.iter().copied().zip(solution))
    }

    /// Coefficient of `z^i` in the canonical form.
    pub fn coefficient(&self, i: u32) -> Rational {
        self.terms
            .binary_search_by_key(&i, |&(j, _)| j)
            .map(|k| self.terms[k].1)
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Dense coefficient vector over `z^0, .., z^(n-1)`.
    pub fn dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.n as usize];
        for &(i, c) in &self.terms {
            out[i as usize] = c;
        }
        out
    }
}

/// Gaussian elimination on an augmented matrix; returns the unique solution
/// or `None` if the system is inconsistent or underdetermined.
fn solve_consistent(m: &mut [Vec<Rational>], unknowns: usize) -> Option<Vec<Rational>> {
    let rows = m.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..=unknowns {
                    let sub = f * m[pivot_row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if pivots.len() != unknowns || m[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    Some((0..unknowns).map(|k| m[k][unknowns]).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            self.terms == other.terms
        } else {
            let (a, b) = self.common(other);
            a.terms == b.terms
        }
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let mut map: BTreeMap<u32, Rational> = a.terms.into_iter().collect();
        for (i, c) in b.terms {
            add_into(&mut map, i, c);
        }
        Cyclotomic {
            n: a.n,
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            terms: self.terms.iter().map(|&(i, c)| (i, -c)).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let n = a.n;
        let mut map = BTreeMap::new();
        for &(i, c) in &a.terms {
            for &(j, d) in &b.terms {
                add_into(&mut map, (i + j) % n, c * d);
            }
        }
        Cyclotomic {
            n,
            terms: canonicalize(n, map),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(n={}, ", self.n)?;
        fmt_terms(f, self.n, &self.terms)?;
        f.write_str(")")
    }
}

/// GAP-style text over the minimal conductor, e.g. `-E(5)^2-E(5)^3` or `1/2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        fmt_terms(f, r.n, &r.terms)
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, n: u32, terms: &[(u32, Rational)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, &(i, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let a = c.abs();
        if negative {
            f.write_str("-")?;
        } else if k > 0 {
            f.write_str("+")?;
        }
        let unit = i == 0 || n == 1;
        if unit {
            write!(f, "{a}")?;
            continue;
        }
        if !a.is_one() {
            write!(f, "{a}*")?;
        }
        if i == 1 {
            write!(f, "E({n})")?;
        } else {
            write!(f, "E({n})^{i}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(a: i128, b: i128) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn basis_size_is_totient() {
        for n in 1..200u32 {
            assert_eq!(zumbroich_basis(n).len() as u64, arith::totient(n as u64), "n = {n}");
        }
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..40u32 {
            let total = (0..n).fold(Cyclotomic::zero(n), |acc, k| &acc + &Cyclotomic::root_of_unity(n, k as i64));
            assert!(total.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn root_powers_multiply() {
        for n in [5u32, 8, 12, 15, 30] {
            for a in 0..n as i64 {
                for b in 0..n as i64 {
                    let lhs = &Cyclotomic::root_of_unity(n, a) * &Cyclotomic::root_of_unity(n, b);
                    assert_eq!(lhs, Cyclotomic::root_of_unity(n, a + b));
                }
            }
        }
    }

    #[test]
    fn rationals_are_recognized() {
        for n in [1u32, 2, 3, 4, 6, 12, 15, 60] {
            let x = Cyclotomic::from_rational(n, q(-7, 3));
            assert_eq!(x.as_rational(), Some(q(-7, 3)));
            assert_eq!(x.minimal_conductor(), 1);
        }
        assert_eq!(Cyclotomic::root_of_unity(4, 1).as_rational(), None);
        assert_eq!(Cyclotomic::root_of_unity(6, 3).as_integer(), Some(-1));
    }

    #[test]
    fn golden_ratio_reduces_to_conductor_five() {
        // 1 + z5 + z5^4 = (1 + sqrt 5) / 2, stored over conductor 30.
        let x = Cyclotomic::from_terms(30, [(0, q(1, 1)), (6, q(1, 1)), (24, q(1, 1))]);
        let r = x.reduced();
        assert_eq!(r.conductor(), 5);
        assert_eq!(r, x);
        // phi^2 = phi + 1
        assert_eq!(&x * &x, &x + &Cyclotomic::one(30));
        assert_eq!(r.to_string(), "-E(5)^2-E(5)^3");
    }

    #[test]
    fn conductor_two_mod_four_collapses() {
        // z6 = -z3^2
        let z6 = Cyclotomic::root_of_unity(6, 1);
        assert_eq!(z6, -&Cyclotomic::root_of_unity(3, 2));
        assert_eq!(z6.minimal_conductor(), 3);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyclotomic::zero(7).to_string(), "0");
        assert_eq!(Cyclotomic::from_rational(12, q(1, 2)).to_string(), "1/2");
        assert_eq!(Cyclotomic::root_of_unity(4, 1).to_string(), "E(4)");
        assert_eq!(Cyclotomic::root_of_unity(4, 3).to_string(), "-E(4)");
    }

    #[test]
    fn dense_integer_path_matches_rational_path() {
        for n in 1..=72u32 {
            let counts: Vec<i128> = (0..n as i128).map(|i| (i * i * 7 + 3 * i) % 11 - 5).collect();
            let generic = Cyclotomic::from_terms(
                n,
                counts.iter().enumerate().map(|(i, &c)| (i as u32, Rational::from_integer(c))),
            );
            assert_eq!(Cyclotomic::from_counts(n, &counts), generic, "n = {n}");
        }
    }
}
