//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Values of cluster variables live here. Coefficients are arbitrary
//! precision rationals (`num_rational::BigRational`); exponents may be
//! negative. Polynomials are kept in canonical form: no zero coefficients,
//! monomials ordered graded-lexicographically. All values are immutable
//! after construction and safe to share across threads.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::registry::{self, VarId};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("no Laurent-polynomial quotient exists")]
    NotDivisible,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("variable {0} has no assigned value")]
    UnassignedVariable(String),
}

/// Raises a rational to an integer power, requiring a nonzero base for
/// negative exponents.
pub fn rational_pow(r: &Rational, e: i64) -> Result<Rational, LaurentError> {
    if e == 0 {
        return Ok(Rational::one());
    }
    if r.is_zero() {
        if e < 0 {
            return Err(LaurentError::ZeroToNegativePower);
        }
        return Ok(Rational::zero());
    }
    let b = if e < 0 { r.recip() } else { r.clone() };
    let mut acc = Rational::one();
    let mut base = b;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    Ok(acc)
}

/// Parses `"a/b"` or `"a"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// A sparse Laurent monomial: finitely many variables with nonzero integer
/// exponents (negative allowed). Kept sorted by variable id.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(VarId, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i64)>) -> Self {
        let mut m: BTreeMap<VarId, i64> = BTreeMap::new();
        for (v, e) in pairs {
            let entry = m.entry(v).or_insert(0);
            *entry += e;
        }
        Monomial {
            exps: m.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> i64 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, i64)> + '_ {
        self.exps.iter().copied()
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.iter().chain(other.iter()))
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial {
            exps: if k == 0 {
                Vec::new()
            } else {
                self.exps.iter().map(|&(v, e)| (v, e * k)).collect()
            },
        }
    }

    /// self / other as a Laurent monomial (always defined).
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    fn has_negative(&self) -> bool {
        self.exps.iter().any(|&(_, e)| e < 0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then variable-by-variable
    /// in id order (missing variables count as exponent zero).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut i = 0;
        let mut j = 0;
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => {
                    return e.cmp(&0);
                }
                (None, Some(&(_, e))) => {
                    return 0.cmp(&e);
                }
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            ord => return ord,
                        }
                    } else if va < vb {
                        match ea.cmp(&0) {
                            Ordering::Equal => i += 1,
                            ord => return ord,
                        }
                    } else {
                        match 0.cmp(&eb) {
                            Ordering::Equal => j += 1,
                            ord => return ord,
                        }
                    }
                }
            }
        }
    }
}

/// Sparse multivariate Laurent polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LaurentPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: VarId) -> Self {
        LaurentPoly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// If the polynomial is a single term, returns it.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The set of variables occurring with nonzero exponent.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Per-variable minimum exponent over all terms (only entries < 0 are of
    /// interest to callers clearing denominators).
    pub fn min_exponents(&self) -> BTreeMap<VarId, i64> {
        let vars = self.variables();
        let mut mins: BTreeMap<VarId, i64> = BTreeMap::new();
        for m in self.terms.keys() {
            for &v in &vars {
                let e = m.exponent(v);
                mins.entry(v)
                    .and_modify(|cur| *cur = (*cur).min(e))
                    .or_insert(e);
            }
        }
        mins
    }

    /// The monomial of denominators: product of v^(-min_e) over variables
    /// with negative minimum exponent.
    pub fn denominator_monomial(&self) -> Monomial {
        Monomial::from_pairs(
            self.min_exponents()
                .into_iter()
                .filter(|&(_, e)| e < 0)
                .map(|(v, e)| (v, -e)),
        )
    }

    /// The content monomial: per-variable minimum exponent over all terms.
    /// Dividing by it leaves every occurring variable with minimum
    /// exponent exactly zero.
    fn content_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.min_exponents())
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u64) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Leading term in the graded-lex order.
    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns `q` with `q * b == self` if such a Laurent
    /// polynomial exists.
    pub fn div_exact(&self, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if b.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Strip content monomials so both operands have per-variable
        // minimum exponent zero. A Laurent quotient exists iff the
        // remaining ordinary division is exact.
        let ca = self.content_monomial();
        let cb = b.content_monomial();
        let a_poly = self.mul_monomial(&ca.inv());
        let b_poly = b.mul_monomial(&cb.inv());
        let q_poly = poly_div_exact(&a_poly, &b_poly)?;
        Ok(q_poly.mul_monomial(&ca.div(&cb)))
    }

    /// Applies a ring map sending each variable to a Laurent polynomial.
    /// Variables absent from `map` are left unchanged. Negative powers of a
    /// non-monomial image are resolved by exact division where possible.
    pub fn substitute(
        &self,
        map: &BTreeMap<VarId, LaurentPoly>,
    ) -> Result<LaurentPoly, LaurentError> {
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let image_of = |v: VarId| -> LaurentPoly {
            map.get(&v).cloned().unwrap_or_else(|| LaurentPoly::var(v))
        };
        // Clear negative exponents, substitute into numerator and
        // denominator separately, then divide exactly.
        let den = self.denominator_monomial();
        let num = self.mul_monomial(&den);
        let mut num_img = LaurentPoly::zero();
        for (m, c) in num.terms.iter() {
            let mut term = LaurentPoly::constant(c.clone());
            for (v, e) in m.iter() {
                debug_assert!(e > 0);
                term = &term * &image_of(v).pow(e as u64);
            }
            num_img = &num_img + &term;
        }
        let mut den_img = LaurentPoly::one();
        for (v, e) in den.iter() {
            debug_assert!(e > 0);
            den_img = &den_img * &image_of(v).pow(e as u64);
        }
        num_img.div_exact(&den_img)
    }

    /// Exact evaluation at a rational point. Every variable of the
    /// polynomial must be assigned; no variable with negative exponent may
    /// be assigned zero.
    pub fn eval(&self, values: &BTreeMap<VarId, Rational>) -> Result<Rational, LaurentError> {
        let mut acc = Rational::zero();
        for (m, c) in self.terms.iter() {
            let mut term = c.clone();
            for (v, e) in m.iter() {
                let val = values
                    .get(&v)
                    .ok_or_else(|| LaurentError::UnassignedVariable(registry::name(v)))?;
                term *= rational_pow(val, e)?;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// True iff every stored coefficient is strictly positive (vacuously
    /// true for the zero polynomial).
    pub fn is_coefficient_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// True iff all coefficients are integers.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Terms sorted for display: graded lex on (name, exponent) pairs,
    /// highest first. Name-based so output is independent of registration
    /// order.
    fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut ts: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| {
            let key = |m: &Monomial| {
                let mut pairs: Vec<(String, i64)> =
                    m.iter().map(|(v, e)| (registry::name(v), e)).collect();
                pairs.sort();
                (m.total_degree(), pairs)
            };
            key(b).cmp(&key(a))
        });
        ts
    }
}

/// Exact division of ordinary (nonnegative-exponent) polynomials.
fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    let (lt_b_m, lt_b_c) = b.leading().expect("nonzero divisor");
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero();
    while !rem.is_zero() {
        let (lt_r_m, lt_r_c) = rem.leading().unwrap();
        let qm = lt_r_m.div(lt_b_m);
        if qm.has_negative() {
            return Err(LaurentError::NotDivisible);
        }
        let qc = lt_r_c / lt_b_c;
        let qterm = LaurentPoly::monomial(qm, qc);
        rem = &rem - &(&qterm * b);
        quot = &quot + &qterm;
    }
    Ok(quot)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            let mut named: Vec<(String, i64)> =
                m.iter().map(|(v, e)| (registry::name(v), e)).collect();
            named.sort();
            for (nm, e) in named {
                if e == 1 {
                    factors.push(nm);
                } else {
                    factors.push(format!("{}^{}", nm, e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// JSON form: list of `{coeff: "num/den", exps: {varname: int}}`.
pub mod json {
    use super::*;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    pub struct TermJson {
        pub coeff: String,
        pub exps: BTreeMap<String, i64>,
    }

    pub fn to_json(p: &LaurentPoly) -> Vec<TermJson> {
        p.display_order()
            .into_iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                exps: m.iter().map(|(v, e)| (registry::name(v), e)).collect(),
            })
            .collect()
    }

    pub fn from_json(terms: &[TermJson]) -> Option<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for t in terms {
            let c = parse_rational(&t.coeff)?;
            let m = Monomial::from_pairs(
                t.exps
                    .iter()
                    .map(|(name, &e)| (crate::registry::var(name), e)),
            );
            p = &p + &LaurentPoly::monomial(m, c);
        }
        Some(p)
    }
}
