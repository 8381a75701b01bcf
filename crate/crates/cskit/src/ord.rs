//! Exact ordinal arithmetic below epsilon-zero.
//!
//! Ordinals are kept in hereditary Cantor normal form: a sorted list of
//! `(exponent, coefficient)` pairs representing `w^e1*c1 + ... + w^ek*ck`
//! with strictly decreasing exponents and positive coefficients. The empty
//! list is `0`. The representation is canonical, so structural equality is
//! ordinal equality.
//!
//! The textual form uses `w` for omega: `"w^(2)*3+w*2+5"`. Parsing and
//! printing round-trip bit-exactly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An ordinal below epsilon-zero, in hereditary Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    /// Terms `(exponent, coefficient)` with strictly decreasing exponents
    /// and coefficients `>= 1`. Empty means zero.
    terms: Vec<(Ordinal, u64)>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from_nat(1)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    pub fn from_nat(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![(Ordinal::zero(), n)],
            }
        }
    }

    /// `w^e`
    pub fn omega_pow(e: Ordinal) -> Self {
        Ordinal { terms: vec![(e, 1)] }
    }

    /// `w^e * c`; `c = 0` yields zero.
    pub fn omega_pow_mul(e: Ordinal, c: u64) -> Self {
        if c == 0 {
            Ordinal::zero()
        } else {
            Ordinal { terms: vec![(e, c)] }
        }
    }

    /// Builds an ordinal from CNF terms; they must be in strictly decreasing
    /// exponent order with positive coefficients (debug-asserted).
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Self {
        let o = Ordinal { terms };
        debug_assert!(o.is_canonical());
        o
    }

    fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(e, c)| *c >= 1 && e.is_canonical())
            && self.terms.windows(2).all(|w| w[0].0 > w[1].0)
    }

    pub fn terms(&self) -> &[(Ordinal, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(e, _)] => e.is_zero(),
            _ => false,
        }
    }

    /// Returns `Some(n)` when the ordinal is the natural number `n`.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.is_zero() => Some(*c),
            _ => None,
        }
    }

    /// Finite part: the coefficient of `w^0` (zero when absent).
    pub fn finite_part(&self) -> u64 {
        match self.terms.last() {
            Some((e, c)) if e.is_zero() => *c,
            _ => 0,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.finite_part() > 0
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && self.finite_part() == 0
    }

    /// Successor ordinal `self + 1`.
    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Predecessor of a successor ordinal; `None` for zero and limits.
    pub fn pred(&self) -> Option<Ordinal> {
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((e, c)) if e.is_zero() => {
                if *c == 1 {
                    terms.pop();
                } else {
                    *c -= 1;
                }
                Some(Ordinal { terms })
            }
            _ => None,
        }
    }

    /// Ordinal addition. Absorbs the left summand's small tail:
    /// `1 + w = w`, while `w + 1 = w+1`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        if other.is_zero() {
            return self.clone();
        }
        let lead = &other.terms[0].0;
        let mut terms: Vec<(Ordinal, u64)> = self
            .terms
            .iter()
            .take_while(|(e, _)| e > lead)
            .cloned()
            .collect();
        let keep = self.terms.len() - terms.len();
        let mut rest = other.terms.clone();
        if keep > 0 && &self.terms[terms.len()].0 == lead {
            rest[0].1 += self.terms[terms.len()].1;
        }
        terms.extend(rest);
        Ordinal { terms }
    }

    /// Ordinal multiplication.
    pub fn mul(&self, other: &Ordinal) -> Ordinal {
        if self.is_zero() || other.is_zero() {
            return Ordinal::zero();
        }
        let (e1, c1) = (&self.terms[0].0, self.terms[0].1);
        let mut out = Ordinal::zero();
        for (f, d) in &other.terms {
            if f.is_zero() {
                // self * d: multiply the leading coefficient, keep the tail.
                let mut terms = self.terms.clone();
                terms[0].1 = c1 * d;
                out = out.add(&Ordinal { terms });
            } else {
                out = out.add(&Ordinal::omega_pow_mul(e1.add(f), *d));
            }
        }
        out
    }

    /// Left subtraction: the unique `x` with `self + x == other`.
    /// Requires `self <= other`.
    pub fn sub_left(&self, other: &Ordinal) -> Option<Ordinal> {
        if self > other {
            return None;
        }
        let mut i = 0;
        while i < self.terms.len() && i < other.terms.len() && self.terms[i] == other.terms[i] {
            i += 1;
        }
        if i == self.terms.len() {
            // self is a prefix of other
            return Some(Ordinal {
                terms: other.terms[i..].to_vec(),
            });
        }
        // First difference at i. Since self <= other, other's term dominates.
        let (ea, ca) = &self.terms[i];
        let (eb, cb) = &other.terms[i];
        if ea == eb {
            // Same exponent, other has the larger coefficient; the remainder
            // starts with the coefficient difference.
            debug_assert!(cb > ca);
            let mut terms = vec![(eb.clone(), cb - ca)];
            terms.extend_from_slice(&other.terms[i + 1..]);
            Some(Ordinal { terms })
        } else {
            // other's exponent is larger: adding other's tail from i on wipes
            // out self's tail entirely.
            debug_assert!(eb > ea);
            Some(Ordinal {
                terms: other.terms[i..].to_vec(),
            })
        }
    }

    /// Euclidean division: returns `(q, r)` with `self == d*q + r` and `r < d`.
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Ordinal) -> (Ordinal, Ordinal) {
        assert!(!d.is_zero(), "ordinal division by zero");
        let mut q = Ordinal::zero();
        let mut r = self.clone();
        let (ed, cd) = (&d.terms[0].0, d.terms[0].1);
        loop {
            if &r < d {
                return (q, r);
            }
            let (er, cr) = (&r.terms[0].0, r.terms[0].1);
            if er > ed {
                // d * (w^delta * cr) has leading term w^er * cr.
                let delta = ed.sub_left(er).expect("er >= ed");
                debug_assert!(!delta.is_zero());
                let qt = Ordinal::omega_pow_mul(delta, cr);
                let prod = d.mul(&qt);
                // prod == w^er * cr, which is exactly r's leading term.
                let rest = prod.sub_left(&r).expect("leading term bounded by r");
                q = q.add(&qt);
                r = rest;
            } else {
                // er == ed (er < ed would mean r < d).
                debug_assert!(er == ed);
                let mut k = cr / cd;
                while k > 0 {
                    let prod = d.mul(&Ordinal::from_nat(k));
                    if prod <= r {
                        q = q.add(&Ordinal::from_nat(k));
                        r = prod.sub_left(&r).expect("prod <= r");
                        break;
                    }
                    k -= 1;
                }
                if k == 0 {
                    return (q, r);
                }
            }
        }
    }

    /// Cofinality at desk scale: every limit below epsilon-zero has
    /// cofinality omega.
    pub fn cofinality(&self) -> Cofinality {
        if self.is_zero() {
            Cofinality::Zero
        } else if self.is_successor() {
            Cofinality::One
        } else {
            Cofinality::Omega
        }
    }

    /// The `n`-th member of the canonical fundamental sequence of a limit
    /// ordinal: `(b + w^(e+1))[n] = b + w^e*n` and `(b + w^l)[n] = b + w^(l[n])`
    /// for limit `l`. Returns `None` for zero and successors.
    pub fn fundamental(&self, n: u64) -> Option<Ordinal> {
        if !self.is_limit() {
            return None;
        }
        let mut terms = self.terms.clone();
        let (e, c) = terms.pop().expect("limit is nonzero");
        debug_assert!(!e.is_zero());
        // Split off one copy of w^e.
        if c > 1 {
            terms.push((e.clone(), c - 1));
        }
        let base = Ordinal { terms };
        let step = if let Some(ep) = e.pred() {
            // w^(ep+1)[n] = w^ep * n
            Ordinal::omega_pow_mul(ep, n)
        } else {
            // e is a limit: w^e[n] = w^(e[n])
            let en = e.fundamental(n).expect("limit exponent");
            Ordinal::omega_pow(en)
        };
        Some(base.add(&step))
    }

    /// Order type of the set of limit ordinals below `self`.
    pub fn count_limits_below(&self) -> Ordinal {
        let omega = Ordinal::omega();
        let (q, r) = self.div_rem(&omega);
        let thresh = if r.is_zero() { q } else { q.succ() };
        // otp of { j : 1 + j < thresh }
        if thresh <= Ordinal::one() {
            Ordinal::zero()
        } else if let Some(t) = thresh.as_nat() {
            Ordinal::from_nat(t - 1)
        } else {
            thresh
        }
    }

    /// The `j`-th limit ordinal (zero-indexed): `w * (1 + j)`.
    pub fn nth_limit(j: &Ordinal) -> Ordinal {
        Ordinal::omega().mul(&Ordinal::one().add(j))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            match a.0.cmp(&b.0) {
                Ordering::Equal => {}
                ord => return ord,
            }
            match a.1.cmp(&b.1) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from_nat(n)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                if e.as_nat() == Some(1) {
                    write!(f, "w")?;
                } else {
                    write!(f, "w^({e})")?;
                }
                if *c > 1 {
                    write!(f, "*{c}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error from parsing an ordinal literal, with the byte position of the
/// offending character.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid ordinal literal at byte {pos}: {msg}")]
pub struct ParseOrdinalError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseOrdinalError> {
        Err(ParseOrdinalError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, ParseOrdinalError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.bump();
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        self.src[start..self.pos]
            .parse::<u64>()
            .map_err(|_| ParseOrdinalError {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    // ordinal := term ('+' term)*
    fn ordinal(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        let mut out = self.term()?;
        while self.eat(b'+') {
            let t = self.term()?;
            // Sums are accepted in any order and normalized by `add`.
            out = out.add(&t);
        }
        Ok(out)
    }

    // term := 'w' ('^' '(' ordinal ')')? ('*' number)? | number
    fn term(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        match self.peek() {
            Some(b'w') => {
                self.bump();
                let e = if self.eat(b'^') {
                    if !self.eat(b'(') {
                        return self.err("expected '(' after '^'");
                    }
                    let e = self.ordinal()?;
                    if !self.eat(b')') {
                        return self.err("expected ')'");
                    }
                    e
                } else {
                    Ordinal::one()
                };
                let c = if self.eat(b'*') { self.number()? } else { 1 };
                if c == 0 {
                    return self.err("coefficient must be positive");
                }
                Ok(Ordinal::omega_pow_mul(e, c))
            }
            Some(b'0'..=b'9') => Ok(Ordinal::from_nat(self.number()?)),
            _ => self.err("expected 'w' or a number"),
        }
    }
}

impl FromStr for Ordinal {
    type Err = ParseOrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let o = p.ordinal()?;
        if p.pos != s.len() {
            return p.err("trailing characters");
        }
        Ok(o)
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(D::Error::custom)
    }
}

impl Ordinal {
    /// Structured JSON term list: `[[exponent, coefficient], ...]` with
    /// exponents rendered recursively. Round-trips via [`Ordinal::from_term_json`].
    pub fn to_term_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| serde_json::json!([e.to_term_json(), c]))
                .collect(),
        )
    }

    pub fn from_term_json(v: &serde_json::Value) -> Result<Ordinal, String> {
        let arr = v.as_array().ok_or("expected array of terms")?;
        let mut terms = Vec::with_capacity(arr.len());
        for t in arr {
            let pair = t.as_array().filter(|p| p.len() == 2).ok_or("expected [exponent, coefficient]")?;
            let e = Ordinal::from_term_json(&pair[0])?;
            let c = pair[1].as_u64().ok_or("coefficient must be a positive integer")?;
            if c == 0 {
                return Err("coefficient must be positive".into());
            }
            terms.push((e, c));
        }
        if !terms.windows(2).all(|w| w[0].0 > w[1].0) {
            return Err("exponents must be strictly decreasing".into());
        }
        Ok(Ordinal { terms })
    }
}

/// Cofinality of an ordinal below epsilon-zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cofinality {
    Zero,
    One,
    Omega,
}

impl Cofinality {
    /// Whether this cofinality, read as a cardinal, is strictly below `chi`.
    pub fn lt_cardinal(&self, chi: &CardinalTag) -> bool {
        match self {
            Cofinality::Zero => *chi >= CardinalTag::Fin(1),
            Cofinality::One => *chi >= CardinalTag::Fin(2),
            Cofinality::Omega => *chi > CardinalTag::Aleph0,
        }
    }
}

/// A cardinal parameter. Finite cardinals, aleph-zero, and symbolic higher
/// alephs; the symbolic ones act only through comparisons, since at desk
/// scale every limit ordinal has cofinality omega.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CardinalTag {
    Fin(u64),
    Aleph0,
    AlephSymbolic(u64),
}

impl CardinalTag {
    /// `otp < self` for an order type below epsilon-zero.
    pub fn gt_ordinal(&self, otp: &Ordinal) -> bool {
        match self {
            CardinalTag::Fin(n) => otp < &Ordinal::from_nat(*n),
            CardinalTag::Aleph0 => otp.is_finite(),
            // Everything below epsilon-zero is countable.
            CardinalTag::AlephSymbolic(_) => true,
        }
    }

    /// `otp <= self` for an order type below epsilon-zero.
    pub fn ge_ordinal(&self, otp: &Ordinal) -> bool {
        match self {
            CardinalTag::Fin(n) => otp <= &Ordinal::from_nat(*n),
            CardinalTag::Aleph0 => otp <= &Ordinal::omega(),
            CardinalTag::AlephSymbolic(_) => true,
        }
    }

    /// Whether a finite count is strictly below this cardinal.
    pub fn gt_count(&self, count: usize) -> bool {
        match self {
            CardinalTag::Fin(n) => (count as u64) < *n,
            _ => true,
        }
    }
}

impl Ord for CardinalTag {
    fn cmp(&self, other: &Self) -> Ordering {
        use CardinalTag::*;
        match (self, other) {
            (Fin(a), Fin(b)) => a.cmp(b),
            (Fin(_), _) => Ordering::Less,
            (_, Fin(_)) => Ordering::Greater,
            (Aleph0, Aleph0) => Ordering::Equal,
            (Aleph0, _) => Ordering::Less,
            (_, Aleph0) => Ordering::Greater,
            (AlephSymbolic(a), AlephSymbolic(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for CardinalTag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for CardinalTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "w" | "aleph0" | "aleph_0" => Ok(CardinalTag::Aleph0),
            _ => {
                if let Ok(n) = s.parse::<u64>() {
                    return Ok(CardinalTag::Fin(n));
                }
                if let Some(k) = s.strip_prefix("aleph").map(|k| k.trim_start_matches('_')) {
                    if let Ok(k) = k.parse::<u64>() {
                        if k >= 1 {
                            return Ok(CardinalTag::AlephSymbolic(k));
                        }
                    }
                }
                Err(format!("invalid cardinal: {s:?} (use a number, `w`, or `alephK`)"))
            }
        }
    }
}

impl fmt::Display for CardinalTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalTag::Fin(n) => write!(f, "{n}"),
            CardinalTag::Aleph0 => write!(f, "aleph0"),
            CardinalTag::AlephSymbolic(k) => write!(f, "aleph{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn add_basics() {
        assert_eq!(o("w").add(&o("1")), o("w+1"));
        assert_eq!(o("1").add(&o("w")), o("w"));
        let w2 = o("w").mul(&o("2"));
        assert_eq!(w2.add(&o("w")), o("w*3"));
    }

    #[test]
    fn mul_basics() {
        assert_eq!(o("w").mul(&o("2")), o("w*2"));
        assert_eq!(o("2").mul(&o("w")), o("w"));
        assert_eq!(o("w+1").mul(&o("2")), o("w*2+1"));
        assert_eq!(o("w+1").mul(&o("w")), o("w^(2)"));
        assert_eq!(o("w*2").mul(&o("w*2")), o("w^(2)*2"));
    }

    #[test]
    fn ordering() {
        assert!(o("w") > o("1000"));
        assert!(o("w^(2)") > o("w*999+5"));
        assert!(o("w+1") > o("w"));
        assert!(o("w^(w)") > o("w^(3)*7"));
        assert!(o("w*2") < o("w*2+1"));
    }

    #[test]
    fn sub_left_inverts_add() {
        let pairs = [("w", "w+5"), ("3", "w"), ("w*2+1", "w^(2)+w"), ("0", "w"), ("w", "w")];
        for (a, b) in pairs {
            let (a, b) = (o(a), o(b));
            let x = a.sub_left(&b).unwrap();
            assert_eq!(a.add(&x), b, "{a} + {x} should be {b}");
        }
        assert_eq!(o("w").sub_left(&o("5")), None);
    }

    #[test]
    fn div_rem_law() {
        let cases = [
            ("w^(2)*3+w*2+5", "w"),
            ("w^(2)", "w*2"),
            ("17", "5"),
            ("w^(3)+w", "w^(2)+1"),
            ("w*7+3", "w"),
        ];
        for (a, d) in cases {
            let (a, d) = (o(a), o(d));
            let (q, r) = a.div_rem(&d);
            assert_eq!(d.mul(&q).add(&r), a, "{d}*{q}+{r} == {a}");
            assert!(r < d);
        }
        // j-th limit inversion: w*(1+j)
        let (q, r) = o("w^(2)").div_rem(&o("w"));
        assert_eq!(q, o("w"));
        assert!(r.is_zero());
    }

    #[test]
    fn cofinality_cases() {
        assert_eq!(o("0").cofinality(), Cofinality::Zero);
        assert_eq!(o("5").cofinality(), Cofinality::One);
        assert_eq!(o("w^(2)").cofinality(), Cofinality::Omega);
        assert_eq!(o("w+3").cofinality(), Cofinality::One);
    }

    #[test]
    fn fundamental_sequences() {
        // w[n] = n
        assert_eq!(o("w").fundamental(3).unwrap(), o("3"));
        // (w*2)[n] = w + n
        assert_eq!(o("w*2").fundamental(4).unwrap(), o("w+4"));
        // w^2[n] = w*n
        assert_eq!(o("w^(2)").fundamental(2).unwrap(), o("w*2"));
        // (w^2*2)[n] = w^2 + w*n
        assert_eq!(o("w^(2)*2").fundamental(1).unwrap(), o("w^(2)+w"));
        // w^w[n] = w^n
        assert_eq!(o("w^(w)").fundamental(3).unwrap(), o("w^(3)"));
        assert_eq!(o("w^(w)").fundamental(0).unwrap(), o("1"));
        assert_eq!(o("w+1").fundamental(0), None);
    }

    #[test]
    fn limits_counting() {
        assert_eq!(o("w").count_limits_below(), o("0"));
        assert_eq!(o("w+1").count_limits_below(), o("1"));
        assert_eq!(o("w*3").count_limits_below(), o("2"));
        assert_eq!(o("w^(2)").count_limits_below(), o("w"));
        assert_eq!(o("w^(2)+5").count_limits_below(), o("w+1"));
        assert_eq!(o("w^(3)").count_limits_below(), o("w^(2)"));
        // nth_limit enumerates them
        assert_eq!(Ordinal::nth_limit(&o("0")), o("w"));
        assert_eq!(Ordinal::nth_limit(&o("w")), o("w^(2)"));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "7", "w", "w*2", "w+1", "w^(2)*3+w*2+5", "w^(w)", "w^(w+1)*2+w^(2)+1"] {
            let x = o(s);
            assert_eq!(x.to_string(), s);
            assert_eq!(o(&x.to_string()), x);
        }
        let err = "w^(2".parse::<Ordinal>().unwrap_err();
        assert_eq!(err.pos, 4);
        assert!("w^2".parse::<Ordinal>().is_err());
        assert!("3+".parse::<Ordinal>().is_err());
    }

    #[test]
    fn term_json_roundtrip() {
        let x = o("w^(w+1)*2+w^(2)+3");
        let j = x.to_term_json();
        assert_eq!(Ordinal::from_term_json(&j).unwrap(), x);
    }

    #[test]
    fn cardinal_order() {
        use CardinalTag::*;
        assert!(Fin(3) < Fin(4));
        assert!(Fin(1000000) < Aleph0);
        assert!(Aleph0 < AlephSymbolic(1));
        assert!(AlephSymbolic(1) < AlephSymbolic(2));
        assert!(Aleph0.gt_ordinal(&o("5")));
        assert!(!Aleph0.gt_ordinal(&o("w")));
        assert!(AlephSymbolic(1).gt_ordinal(&o("w^(w)")));
        assert!(Aleph0.ge_ordinal(&o("w")));
        assert!(!Aleph0.ge_ordinal(&o("w+1")));
    }
}
