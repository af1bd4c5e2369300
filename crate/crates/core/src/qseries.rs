//! Exact Laurent polynomials in `q` with integer coefficients, and the
//! q-integers, q-factorials, q-binomials and q-multinomials built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Composition;

/// Sparse `Σ c_e q^e` with `c_e ≠ 0`; negative exponents allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntLaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl IntLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff · q^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds `Σ hist[e] q^(e + shift)` from a dense histogram.
    pub fn from_histogram(hist: &[u64], shift: i64) -> Self {
        Self::from_terms(
            hist.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e as i64 + shift, c)),
        )
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        IntLaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntLaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Exact division; fails unless `divisor` divides `self` with zero remainder.
    ///
    /// Long division from the top degree. The divisor must have leading
    /// coefficient ±1 or divide every intermediate leading coefficient.
    pub fn div_exact(&self, divisor: &IntLaurentPoly) -> Result<Self> {
        let (d_hi, d_lead) = match divisor.terms.iter().next_back() {
            Some((&e, c)) => (e, c.clone()),
            None => return Err(Error::InexactDivision),
        };
        let d_lo = divisor.min_exponent().unwrap();
        let mut rem = self.clone();
        let mut quot = IntLaurentPoly::zero();
        while let Some((&r_hi, r_lead)) = rem.terms.iter().next_back() {
            let r_lo = rem.min_exponent().unwrap();
            if r_hi - r_lo < d_hi - d_lo {
                return Err(Error::InexactDivision);
            }
            if !(r_lead % &d_lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let c = r_lead / &d_lead;
            let e = r_hi - d_hi;
            rem = &rem - &divisor.shift(e).scale(&c);
            quot.add_term(e, c);
        }
        Ok(quot)
    }

    /// Text rendering in increasing exponent, e.g. `1+2q-q^3`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl Add for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(mut self, rhs: IntLaurentPoly) -> IntLaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&IntLaurentPoly> for IntLaurentPoly {
    fn add_assign(&mut self, rhs: &IntLaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for IntLaurentPoly {
    fn add_assign(&mut self, rhs: IntLaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Neg for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> IntLaurentPoly {
        IntLaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = IntLaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: IntLaurentPoly) -> IntLaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for IntLaurentPoly {
    fn sum<I: Iterator<Item = IntLaurentPoly>>(iter: I) -> Self {
        iter.fold(IntLaurentPoly::zero(), |acc, p| acc + p)
    }
}

/// JSON form: `{"terms": [[exponent, coefficient], ...]}` sorted by exponent.
/// Coefficients beyond the `i64` range serialize as decimal strings.
impl Serialize for IntLaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<i64, BigInt>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (e, c) in self.0 {
                    match c.to_i64() {
                        Some(v) => seq.serialize_element(&(e, v))?,
                        None => seq.serialize_element(&(e, c.to_string()))?,
                    }
                }
                seq.end()
            }
        }
        let mut st = serializer.serialize_struct("IntLaurentPoly", 1)?;
        st.serialize_field("terms", &Terms(&self.terms))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for IntLaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Raw {
            terms: Vec<(i64, Coeff)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut p = IntLaurentPoly::zero();
        for (e, c) in raw.terms {
            let c = match c {
                Coeff::Int(v) => BigInt::from(v),
                Coeff::Text(s) => s.parse::<BigInt>().map_err(de::Error::custom)?,
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// `[k]_q = 1 + q + ... + q^(k-1)`; `[0]_q = 0`.
pub fn q_int(k: usize) -> IntLaurentPoly {
    IntLaurentPoly::from_terms((0..k as i64).map(|e| (e, 1)))
}

/// `[k]_q! = [k]_q [k-1]_q ... [1]_q`.
pub fn q_factorial(k: usize) -> IntLaurentPoly {
    (1..=k).fold(IntLaurentPoly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial; zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> IntLaurentPoly {
    if n < 0 || k < 0 || k > n {
        return IntLaurentPoly::zero();
    }
    let parts = Composition::new(vec![k as usize, (n - k) as usize]);
    q_multinomial(n as usize, &parts).expect("parts sum to n")
}

/// `[n]_q! / Π [k_i]_q!` by exact polynomial division.
pub fn q_multinomial(n: usize, parts: &Composition) -> Result<IntLaurentPoly> {
    if parts.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: parts.size(),
        });
    }
    let denom = parts
        .parts()
        .iter()
        .fold(IntLaurentPoly::one(), |acc, &k| &acc * &q_factorial(k));
    q_factorial(n).div_exact(&denom)
}

/// Splits `p` by exponent class: component `i` keeps the terms with
/// exponent `≡ i + offset (mod modulus)`.
pub fn residue_split(p: &IntLaurentPoly, modulus: usize, offset: i64) -> Vec<IntLaurentPoly> {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as i64;
    let mut out = vec![IntLaurentPoly::zero(); modulus];
    for (e, c) in p.terms() {
        let i = (e - offset).rem_euclid(m) as usize;
        out[i].add_term(e, c.clone());
    }
    out
}
