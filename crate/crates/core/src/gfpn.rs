//! The coefficient fields `F_{p^n}` and binomial coefficients modulo p.
//!
//! Elements are residue vectors: polynomials of degree < n over `F_p`,
//! reduced modulo a fixed monic irreducible of degree n (for n = 1 the
//! modulus is the bare variable and plays no role). When no defining
//! polynomial is supplied, construction picks the lexicographically
//! smallest monic irreducible — smallest value of `c0 + c1·p + c2·p² + ⋯`
//! — so fields are reproducible across runs.
//!
//! Binomial coefficients mod p are computed digit-wise in base p through
//! Lucas's theorem; they drive the Ore product and every p-th-power
//! expansion in the rest of the crate. The target scale is `p^n ≤ 2^16`,
//! so nothing here tries to be asymptotically clever.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::Error;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

// ---- dense F_p[z] helpers (constant-first coefficient vectors) ----

fn poly_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_trim(out)
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let d = m.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + (p - lead % p) * mi) % p;
            }
        }
        r.pop();
    }
    poly_trim(r)
}

/// Trial-division irreducibility test for a monic polynomial over F_p.
///
/// Fine for the small degrees this crate targets: it divides by every
/// monic polynomial of degree up to deg/2.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    for div_deg in 1..=d / 2 {
        let count = p.pow(div_deg as u32);
        for code in 0..count {
            // monic divisor candidate with low coefficients encoded base p
            let mut g = Vec::with_capacity(div_deg + 1);
            let mut c = code;
            for _ in 0..div_deg {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn find_irreducible(p: u64, n: u32) -> Vec<u64> {
    if n == 1 {
        return vec![0, 1];
    }
    let count = p.pow(n);
    for code in 0..count {
        let mut f = Vec::with_capacity(n as usize + 1);
        let mut c = code;
        for _ in 0..n {
            f.push(c % p);
            c /= p;
        }
        f.push(1);
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible of every degree exists over F_p");
}

/// Deterministic primality test by trial division (p ≤ 2^16 here).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- binomial coefficients mod p ----

fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// C(a, b) mod p for digits a, b < p, by the multiplicative formula.
fn digit_binom(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(a < p && b < p);
    if b > a {
        return 0;
    }
    let mut acc = 1u64;
    for t in 1..=b {
        acc = acc * ((a - b + t) % p) % p;
        acc = acc * modpow(t, p - 2, p) % p;
    }
    acc
}

/// Binomial coefficient C(m, r) reduced mod p, digit-wise in base p.
///
/// Lucas's theorem: with `m = Σ mᵢ pⁱ` and `r = Σ rᵢ pⁱ`,
/// `C(m, r) ≡ Π C(mᵢ, rᵢ) (mod p)`, where `C(mᵢ, rᵢ) := 0` when `mᵢ < rᵢ`.
pub fn lucas_binom(m: u64, r: u64, p: u64) -> u64 {
    assert!(is_prime(p), "modulus {p} must be prime");
    let (mut m, mut r) = (m, r);
    let mut acc = 1u64;
    while m > 0 || r > 0 {
        let (md, rd) = (m % p, r % p);
        if rd > md {
            return 0;
        }
        acc = acc * digit_binom(md, rd, p) % p;
        m /= p;
        r /= p;
    }
    acc
}

/// Multinomial coefficient `total! / (parts[0]!·parts[1]!⋯)` mod p.
///
/// The parts must sum to `total`; the value is the telescoping product of
/// binomials of prefix sums, each reduced via [`lucas_binom`].
pub fn multinomial_mod_p(total: u64, parts: &[u64], p: u64) -> u64 {
    debug_assert_eq!(parts.iter().sum::<u64>(), total, "parts must sum to total");
    let mut acc = 1u64;
    let mut cum = 0u64;
    for &part in parts {
        cum += part;
        acc = acc * lucas_binom(cum, part, p) % p;
        if acc == 0 {
            return 0;
        }
    }
    acc
}

/// Raw vanishing scan: does `C(m, r) ≡ 0 (mod p)` hold for every 0 < r < m?
///
/// Vacuously true at m = 1 (the range is empty). See
/// [`is_prime_power_binom_vanishing`] for the prime-power reading.
pub fn binom_vanishing_scan(m: u64, p: u64) -> bool {
    assert!(m >= 1);
    (1..m).all(|r| lucas_binom(m, r, p) == 0)
}

/// Whether all interior binomials of row m vanish mod p, i.e. whether
/// `m = p^q` for some q ≥ 1.
///
/// The two readings differ only at m = 1: the raw scan over 0 < r < m is
/// vacuously true there, while 1 is not a positive power of p. This
/// function returns the prime-power convention (false at m = 1);
/// [`binom_vanishing_scan`] exposes the raw predicate.
pub fn is_prime_power_binom_vanishing(m: u64, p: u64) -> bool {
    assert!(m >= 1);
    m > 1 && binom_vanishing_scan(m, p)
}

// ---- the field handle ----

#[derive(Debug, PartialEq, Eq)]
struct FieldRepr {
    p: u64,
    n: u32,
    /// Monic defining polynomial, constant first, length n + 1.
    modulus: Vec<u64>,
}

/// A finite field `F_{p^n}`, shared by handle.
///
/// Cloning is cheap; two independently constructed fields compare equal
/// when they have the same characteristic, degree, and defining polynomial.
#[derive(Clone, Debug)]
pub struct Field {
    repr: Arc<FieldRepr>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || self.repr == other.repr
    }
}

impl Eq for Field {}

impl Field {
    /// Build `F_{p^n}`, validating primality and irreducibility.
    ///
    /// With `irreducible = None` the lexicographically smallest monic
    /// irreducible of degree n is used. A supplied polynomial is reduced
    /// mod p and must be monic of degree n and irreducible.
    pub fn new(p: u64, n: u32, irreducible: Option<Vec<u64>>) -> Result<Field, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        match p.checked_pow(n) {
            Some(q) if q <= MAX_FIELD_ORDER => {}
            _ => return Err(Error::FieldTooLarge { p, n }),
        }
        let modulus = match irreducible {
            None => find_irreducible(p, n),
            Some(raw) => {
                let reduced: Vec<u64> = raw.iter().map(|c| c % p).collect();
                if reduced.len() != n as usize + 1 || *reduced.last().unwrap() != 1 {
                    return Err(Error::BadModulus { expected: n });
                }
                if n > 1 && !poly_is_irreducible(&reduced, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                reduced
            }
        };
        Ok(Field {
            repr: Arc::new(FieldRepr { p, n, modulus }),
        })
    }

    /// The prime field `F_p`.
    pub fn prime_field(p: u64) -> Result<Field, Error> {
        Field::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.repr.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.repr.n
    }

    /// Number of elements, `p^n`.
    pub fn order(&self) -> u64 {
        self.repr.p.pow(self.repr.n)
    }

    /// Defining polynomial, constant coefficient first.
    pub fn modulus(&self) -> &[u64] {
        &self.repr.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            field: self.clone(),
            coeffs: vec![0; self.repr.n as usize],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.elem_from_int(1)
    }

    /// Canonical image of an integer under `Z → F_{p^n}`.
    pub fn elem_from_int(&self, v: i64) -> FieldElem {
        let p = self.repr.p as i64;
        let r = ((v % p) + p) % p;
        let mut coeffs = vec![0; self.repr.n as usize];
        coeffs[0] = r as u64;
        FieldElem {
            field: self.clone(),
            coeffs,
        }
    }

    /// Element from its code: base-p digits of `code` are the residue vector.
    ///
    /// Codes run over `0..order()` and give the canonical element order.
    pub fn elem_from_code(&self, code: u64) -> Result<FieldElem, Error> {
        if code >= self.order() {
            return Err(Error::ElementOutOfRange {
                code,
                order: self.order(),
            });
        }
        let mut coeffs = Vec::with_capacity(self.repr.n as usize);
        let mut c = code;
        for _ in 0..self.repr.n {
            coeffs.push(c % self.repr.p);
            c /= self.repr.p;
        }
        Ok(FieldElem {
            field: self.clone(),
            coeffs,
        })
    }

    /// All elements in canonical (code) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(|c| self.elem_from_code(c).unwrap())
    }

    /// All nonzero elements in canonical order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (1..self.order()).map(|c| self.elem_from_code(c).unwrap())
    }

    pub fn random_elem<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        let code = rng.random_range(0..self.order());
        self.elem_from_code(code).unwrap()
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parse the field spec format `p`, `p^n`, or `p^n:c0,c1,…,cn`.
    fn from_str(s: &str) -> Result<Field, Error> {
        let bad = || Error::BadFieldSpec(s.to_string());
        let (head, coeffs) = match s.split_once(':') {
            Some((h, c)) => (h, Some(c)),
            None => (s, None),
        };
        let (p_str, n_str) = match head.split_once('^') {
            Some((p, n)) => (p, Some(n)),
            None => (head, None),
        };
        let p: u64 = p_str.trim().parse().map_err(|_| bad())?;
        let n: u32 = match n_str {
            Some(t) => t.trim().parse().map_err(|_| bad())?,
            None => 1,
        };
        let irreducible = match coeffs {
            None => None,
            Some(list) => {
                let parsed: Result<Vec<u64>, _> =
                    list.split(',').map(|c| c.trim().parse::<u64>()).collect();
                Some(parsed.map_err(|_| bad())?)
            }
        };
        Field::new(p, n, irreducible)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.repr.n == 1 {
            write!(f, "{}", self.repr.p)
        } else {
            write!(f, "{}^{}", self.repr.p, self.repr.n)
        }
    }
}

/// An element of `F_{p^n}`: n residues in `[0, p)`, constant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElem {
    field: Field,
    coeffs: Vec<u64>,
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Code of this element: digits reassembled base p. Inverse of
    /// [`Field::elem_from_code`].
    pub fn code(&self) -> u64 {
        let p = self.field.repr.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The Frobenius image `a^p`.
    pub fn frobenius(&self) -> FieldElem {
        self.pow(self.field.repr.p)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        Some(self.pow(self.field.order() - 2))
    }
}

fn check_same_field(a: &FieldElem, b: &FieldElem) {
    assert!(
        a.field == b.field,
        "field mismatch: {} vs {}",
        a.field,
        b.field
    );
}

impl std::ops::Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        check_same_field(self, rhs);
        let p = self.field.repr.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        FieldElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let p = self.field.repr.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        check_same_field(self, rhs);
        let repr = &self.field.repr;
        if repr.n == 1 {
            return FieldElem {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0] * rhs.coeffs[0] % repr.p],
            };
        }
        let prod = poly_mul(&self.coeffs, &rhs.coeffs, repr.p);
        let mut red = poly_rem(&prod, &repr.modulus, repr.p);
        red.resize(repr.n as usize, 0);
        FieldElem {
            field: self.field.clone(),
            coeffs: red,
        }
    }
}

impl fmt::Display for FieldElem {
    /// Prime-subfield values print as plain residues; proper extension
    /// elements print as `e<code>` so they survive a parse round trip.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let code = self.code();
        if code < self.field.repr.p {
            write!(f, "{code}")
        } else {
            write!(f, "e{code}")
        }
    }
}
