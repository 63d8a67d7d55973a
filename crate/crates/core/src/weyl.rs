//! The first Weyl algebra `A₁ = K[y][x; id, d/dy]` on the basis `{yᵐxⁿ}`.
//!
//! Polynomials are sparse maps `(m, n) → coefficient` in canonical form:
//! no zero coefficients are stored and the zero polynomial is the empty
//! map. The Ore product is the closed binomial form of
//! `r xᵐ · s xⁿ = Σᵢ C(m, i) (r · δ^{m−i}(s)) x^{i+n}` with `δ = d/dy` and
//! binomials reduced mod p; every product is renormalized to `yᵐxⁿ`
//! immediately, so the commutation relation `x·y = y·x + 1` never appears
//! explicitly outside the tests (where it serves as an independent oracle).
//!
//! Term iteration is lexicographic on `(m, n)`, which makes rendering and
//! scan reports deterministic.

use std::collections::BTreeMap;
use std::fmt;

use crate::gfpn::{lucas_binom, Field, FieldElem};

/// Element of `A₁`: finitely many terms `c · yᵐ xⁿ`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylPoly {
    field: Field,
    terms: BTreeMap<(u32, u32), FieldElem>,
}

impl WeylPoly {
    pub fn zero(field: &Field) -> WeylPoly {
        WeylPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Field) -> WeylPoly {
        WeylPoly::monomial(field, 0, 0, field.one())
    }

    pub fn x(field: &Field) -> WeylPoly {
        WeylPoly::monomial(field, 0, 1, field.one())
    }

    pub fn y(field: &Field) -> WeylPoly {
        WeylPoly::monomial(field, 1, 0, field.one())
    }

    pub fn constant(c: FieldElem) -> WeylPoly {
        let field = c.field().clone();
        WeylPoly::monomial(&field, 0, 0, c)
    }

    /// The single term `c · yᵐ xⁿ` (zero c gives the zero polynomial).
    pub fn monomial(field: &Field, m: u32, n: u32, c: FieldElem) -> WeylPoly {
        assert!(c.field() == field, "field mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((m, n), c);
        }
        WeylPoly {
            field: field.clone(),
            terms,
        }
    }

    pub fn from_terms<I>(field: &Field, iter: I) -> WeylPoly
    where
        I: IntoIterator<Item = (u32, u32, FieldElem)>,
    {
        let mut out = WeylPoly::zero(field);
        for (m, n, c) in iter {
            out.add_term(m, n, &c);
        }
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    /// Terms in ascending lexicographic `(m, n)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &FieldElem)> {
        self.terms.iter().map(|(&(m, n), c)| (m, n, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: u32, n: u32) -> FieldElem {
        self.terms
            .get(&(m, n))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, m: u32, n: u32, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((m, n)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Total degree `max(m + n)`, or `None` for the zero polynomial
    /// (the degree of 0 is −∞).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(m, n)| m + n).max()
    }

    /// Largest y-exponent, `None` for 0.
    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(m, _)| m).max()
    }

    /// Largest x-exponent, `None` for 0.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, n)| n).max()
    }

    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|&(_, n)| n == 0)
    }

    pub fn is_y_free(&self) -> bool {
        self.terms.keys().all(|&(m, _)| m == 0)
    }

    /// Whether every exponent pair is divisible by p, i.e. membership in
    /// the commutative subring `K[x^p, y^p]` (the commuter of `A₁`).
    pub fn in_p_power_subring(&self) -> bool {
        let p = self.field.characteristic() as u32;
        self.terms.keys().all(|&(m, n)| m % p == 0 && n % p == 0)
    }

    pub fn scalar_mul(&self, c: &FieldElem) -> WeylPoly {
        assert!(c.field() == &self.field, "field mismatch");
        let mut out = WeylPoly::zero(&self.field);
        for (&(m, n), a) in &self.terms {
            out.add_term(m, n, &(a * c));
        }
        out
    }

    /// Formal partial `∂/∂x` on the basis, with `0·x⁻¹ := 0`.
    pub fn partial_x(&self) -> WeylPoly {
        let mut out = WeylPoly::zero(&self.field);
        for (&(m, n), c) in &self.terms {
            if n == 0 {
                continue;
            }
            let factor = self.field.elem_from_int(n as i64);
            out.add_term(m, n - 1, &(c * &factor));
        }
        out
    }

    /// Formal partial `∂/∂y` on the basis, with `0·y⁻¹ := 0`. In
    /// characteristic p this kills every `y^{kp}`.
    pub fn partial_y(&self) -> WeylPoly {
        let mut out = WeylPoly::zero(&self.field);
        for (&(m, n), c) in &self.terms {
            if m == 0 {
                continue;
            }
            let factor = self.field.elem_from_int(m as i64);
            out.add_term(m - 1, n, &(c * &factor));
        }
        out
    }

    /// Ore product, the multiplication of `A₁`.
    pub fn ore_mul(&self, rhs: &WeylPoly) -> WeylPoly {
        assert!(self.field == rhs.field, "field mismatch");
        let p = self.field.characteristic();
        let mut out = WeylPoly::zero(&self.field);
        for (&(m1, n1), c1) in &self.terms {
            for (&(m2, n2), c2) in &rhs.terms {
                // (c1 y^m1 x^n1)(c2 y^m2 x^n2)
                //   = sum_i C(n1, i) c1 c2 (d/dy)^{n1-i}(y^m2) y^m1 x^{i+n2}
                let c12 = c1 * c2;
                for i in (n1.saturating_sub(m2))..=n1 {
                    let j = n1 - i; // derivative order
                    let binom = lucas_binom(n1 as u64, i as u64, p);
                    if binom == 0 {
                        continue;
                    }
                    // falling factorial m2 (m2-1) ... (m2-j+1) mod p
                    let mut ff = 1u64;
                    for t in 0..j as u64 {
                        ff = ff * ((m2 as u64 + p - t % p) % p) % p;
                        if ff == 0 {
                            break;
                        }
                    }
                    if ff == 0 {
                        continue;
                    }
                    let scale = self.field.elem_from_int((binom * ff % p) as i64);
                    out.add_term(m1 + m2 - j, i + n2, &(&c12 * &scale));
                }
            }
        }
        out
    }

    /// `self^e` under the Ore product (`self^0 = 1`).
    pub fn pow(&self, e: u32) -> WeylPoly {
        let mut acc = WeylPoly::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.ore_mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.ore_mul(&base);
            }
        }
        acc
    }

    /// Substitute an x-free polynomial for y: `Σ c yᵐ xⁿ ↦ Σ c g(y)ᵐ xⁿ`.
    ///
    /// Powers of `g` are taken with the base-p/Frobenius shortcut, which is
    /// what makes the twist and the p-th-power-heavy checkers cheap.
    pub fn substitute_y(&self, g: &WeylPoly) -> WeylPoly {
        assert!(g.is_x_free(), "substitution image must be x-free");
        assert!(self.field == g.field, "field mismatch");
        let mut cache: BTreeMap<u32, WeylPoly> = BTreeMap::new();
        let mut out = WeylPoly::zero(&self.field);
        for (&(m, n), c) in &self.terms {
            let gm = cache
                .entry(m)
                .or_insert_with(|| ypoly_pow(g, m))
                .clone();
            for (&(my, _), a) in &gm.terms {
                out.add_term(my, n, &(a * c));
            }
        }
        out
    }

    /// Commutator `[f, g] = f·g − g·f`.
    pub fn commutator(&self, rhs: &WeylPoly) -> WeylPoly {
        &self.ore_mul(rhs) - &rhs.ore_mul(self)
    }

    /// Associator `(f, g, h) = (f·g)·h − f·(g·h)`; identically zero in `A₁`,
    /// kept as a sanity operation.
    pub fn associator(&self, g: &WeylPoly, h: &WeylPoly) -> WeylPoly {
        &self.ore_mul(g).ore_mul(h) - &self.ore_mul(&g.ore_mul(h))
    }
}

/// Frobenius of an x-free polynomial: `(Σ aᵢ yⁱ)^p = Σ aᵢ^p y^{ip}`.
fn ypoly_frobenius(g: &WeylPoly) -> WeylPoly {
    let p = g.field().characteristic() as u32;
    WeylPoly::from_terms(
        g.field(),
        g.terms().map(|(m, _, c)| (m * p, 0, c.frobenius())),
    )
}

/// `g^e` for x-free `g`, decomposing e in base p so that all large powers
/// go through the Frobenius identity.
pub(crate) fn ypoly_pow(g: &WeylPoly, e: u32) -> WeylPoly {
    debug_assert!(g.is_x_free());
    let p = g.field().characteristic() as u32;
    let mut acc = WeylPoly::one(g.field());
    let mut frob = g.clone();
    let mut e = e;
    loop {
        let digit = e % p;
        for _ in 0..digit {
            acc = acc.ore_mul(&frob);
        }
        e /= p;
        if e == 0 {
            return acc;
        }
        frob = ypoly_frobenius(&frob);
    }
}

impl std::ops::Add for &WeylPoly {
    type Output = WeylPoly;
    fn add(self, rhs: &WeylPoly) -> WeylPoly {
        assert!(self.field == rhs.field, "field mismatch");
        let mut out = self.clone();
        for (&(m, n), c) in &rhs.terms {
            out.add_term(m, n, c);
        }
        out
    }
}

impl std::ops::Neg for &WeylPoly {
    type Output = WeylPoly;
    fn neg(self) -> WeylPoly {
        let mut out = WeylPoly::zero(&self.field);
        for (&(m, n), c) in &self.terms {
            out.add_term(m, n, &-c);
        }
        out
    }
}

impl std::ops::Sub for &WeylPoly {
    type Output = WeylPoly;
    fn sub(self, rhs: &WeylPoly) -> WeylPoly {
        self + &-rhs
    }
}

/// `*` is the Ore product of `A₁`.
impl std::ops::Mul for &WeylPoly {
    type Output = WeylPoly;
    fn mul(self, rhs: &WeylPoly) -> WeylPoly {
        self.ore_mul(rhs)
    }
}

impl fmt::Display for WeylPoly {
    /// Canonical rendering: terms in descending lexicographic `(m, n)`
    /// order, e.g. `2*y^3*x + y + 1`. Accepted back by the expression
    /// parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(m, n), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if !c.is_one() || (m == 0 && n == 0) {
                parts.push(c.to_string());
            }
            if m > 0 {
                parts.push(if m == 1 { "y".into() } else { format!("y^{m}") });
            }
            if n > 0 {
                parts.push(if n == 1 { "x".into() } else { format!("x^{n}") });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

// Debug = Display keeps scan reports and assertion output readable.
impl fmt::Debug for WeylPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
