//! Twisting endomorphisms `α_k` and the hom-associative product on `A₁`.
//!
//! The endomorphisms of `K[y]` that commute with `d/dy` are exactly those
//! with `α(y) = k₀ + y + k_p y^p + k_{2p} y^{2p} + ⋯`; extended to `A₁` by
//! `x ↦ x` they are the admissible twisting maps. [`TwistParams`] is the
//! coefficient vector `k`, and `yau_mul` is the twisted product
//! `f * g := α_k(f·g)`, which makes `(A₁, *, α_k)` a weakly unital
//! hom-associative algebra with weak identity 1.
//!
//! `star_commutator` / `star_associator` are the commutator and associator
//! of the twisted product. `star_commutator_fast` is the closed derivative
//! form `[x, f]_* = (∂f/∂y)|_{y→α_k(y)}` and `[f, y]_* = (∂f/∂x)|_{y→α_k(y)}`;
//! it is kept alongside the definitional route as a standing metamorphic
//! check.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::gfpn::{Field, FieldElem};
use crate::weyl::WeylPoly;

/// The twist vector `k = (k₀, k_p, k_{2p}, …)`, finitely supported.
///
/// Entries are keyed by the exponent they multiply: index 0 holds `k₀` and
/// every other index must be a positive multiple of p. Zero coefficients
/// are not stored; `k = 0` is the empty map (the untwisted, associative
/// case).
#[derive(Clone, PartialEq, Eq)]
pub struct TwistParams {
    field: Field,
    entries: BTreeMap<u32, FieldElem>,
}

impl TwistParams {
    pub fn new<I>(field: &Field, entries: I) -> Result<TwistParams, Error>
    where
        I: IntoIterator<Item = (u32, FieldElem)>,
    {
        let p = field.characteristic() as u32;
        let mut map = BTreeMap::new();
        for (index, coeff) in entries {
            assert!(coeff.field() == field, "field mismatch");
            if index != 0 && index % p != 0 {
                return Err(Error::BadTwistIndex {
                    index,
                    p: p as u64,
                });
            }
            if !coeff.is_zero() {
                map.insert(index, coeff);
            }
        }
        Ok(TwistParams {
            field: field.clone(),
            entries: map,
        })
    }

    /// The zero twist (identity map, associative product).
    pub fn zero(field: &Field) -> TwistParams {
        TwistParams {
            field: field.clone(),
            entries: BTreeMap::new(),
        }
    }

    /// A twist supported on index 0 only.
    pub fn k0_only(field: &Field, k0: FieldElem) -> TwistParams {
        TwistParams::new(field, [(0, k0)]).unwrap()
    }

    /// Parse the CLI twist format: comma-separated `index:coeff` pairs,
    /// e.g. `0:1,2:1`. Coefficients are element codes (base-p digits).
    /// The empty string is the zero twist.
    pub fn parse(field: &Field, text: &str) -> Result<TwistParams, Error> {
        let bad = || Error::BadTwistSpec(text.to_string());
        let mut entries = Vec::new();
        for pair in text.split(',') {
            let pair = pair.trim();
            if pair.is_empty() {
                continue;
            }
            let (idx, coeff) = pair.split_once(':').ok_or_else(bad)?;
            let index: u32 = idx.trim().parse().map_err(|_| bad())?;
            let code: u64 = coeff.trim().parse().map_err(|_| bad())?;
            entries.push((index, field.elem_from_code(code)?));
        }
        TwistParams::new(field, entries)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coefficient at the given index (zero when absent).
    pub fn get(&self, index: u32) -> FieldElem {
        self.entries
            .get(&index)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn k0(&self) -> FieldElem {
        self.get(0)
    }

    /// Support in ascending index order.
    pub fn support(&self) -> impl Iterator<Item = (u32, &FieldElem)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    /// Largest index with a nonzero entry, `None` for the zero twist.
    pub fn max_index(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    /// Whether the support is contained in `{0}` (covers `k = 0`).
    pub fn is_k0_only(&self) -> bool {
        self.max_index().unwrap_or(0) == 0
    }

    /// Whether some entry at index ≥ p is nonzero.
    pub fn reaches_p(&self) -> bool {
        !self.is_k0_only()
    }

    /// The height M: largest index divided by p (0 for support ⊆ {0}).
    pub fn height(&self) -> u32 {
        self.max_index().unwrap_or(0) / self.field.characteristic() as u32
    }

    /// Whether every supported index ≥ p is divisible by p², i.e.
    /// `j·k_{jp} = 0` for all j ≥ 1.
    pub fn p_squared_pattern(&self) -> bool {
        let p = self.field.characteristic() as u32;
        self.entries.keys().all(|&i| i == 0 || i % (p * p) == 0)
    }

    /// `α_k(y) = k₀ + y + k_p y^p + ⋯` as an element of `K[y] ⊂ A₁`.
    pub fn alpha_y(&self) -> WeylPoly {
        let mut out = WeylPoly::y(&self.field);
        for (&i, c) in &self.entries {
            out = &out + &WeylPoly::monomial(&self.field, i, 0, c.clone());
        }
        out
    }

    /// `d/d(y^p)` of `α_k(y) − y`, i.e. `k_p + 2 k_{2p} y^p + 3 k_{3p} y^{2p} + ⋯`.
    ///
    /// Identically zero exactly for the p²-pattern twists.
    pub fn shift_derivative(&self) -> WeylPoly {
        let p = self.field.characteristic() as u32;
        let mut out = WeylPoly::zero(&self.field);
        for (&i, c) in &self.entries {
            if i == 0 {
                continue;
            }
            let j = i / p;
            let factor = self.field.elem_from_int(j as i64);
            out = &out + &WeylPoly::monomial(&self.field, i - p, 0, c * &factor);
        }
        out
    }

    /// Apply the twisting endomorphism: `α_k(Σ qᵢ(y) xⁱ) = Σ qᵢ(α_k(y)) xⁱ`.
    ///
    /// The identity map for `k = 0`.
    pub fn alpha(&self, f: &WeylPoly) -> WeylPoly {
        assert!(f.field() == &self.field, "field mismatch");
        if self.is_zero() {
            return f.clone();
        }
        f.substitute_y(&self.alpha_y())
    }

    /// `α_k` evaluated at an arbitrary element in place of y:
    /// `k₀ + f + k_p f^p + k_{2p} f^{2p} + ⋯` (powers in `A₁`).
    pub fn twist_value_at(&self, f: &WeylPoly) -> WeylPoly {
        let mut out = &WeylPoly::constant(self.k0()) + f;
        for (&i, c) in &self.entries {
            if i == 0 {
                continue;
            }
            out = &out + &f.pow(i).scalar_mul(c);
        }
        out
    }
}

impl fmt::Display for TwistParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(i, c)| format!("{i}:{}", c.code()))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for TwistParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The twisted product `f * g = α_k(f ·_ore g)`; coincides with the Ore
/// product for `k = 0`.
pub fn yau_mul(k: &TwistParams, f: &WeylPoly, g: &WeylPoly) -> WeylPoly {
    k.alpha(&f.ore_mul(g))
}

/// `[f, g]_* = f*g − g*f = α_k([f, g])`.
pub fn star_commutator(k: &TwistParams, f: &WeylPoly, g: &WeylPoly) -> WeylPoly {
    &yau_mul(k, f, g) - &yau_mul(k, g, f)
}

/// `(f, g, h)_* = (f*g)*h − f*(g*h)`.
pub fn star_associator(k: &TwistParams, f: &WeylPoly, g: &WeylPoly, h: &WeylPoly) -> WeylPoly {
    &yau_mul(k, &yau_mul(k, f, g), h) - &yau_mul(k, f, &yau_mul(k, g, h))
}

/// Which one-sided twisted commutator the fast route computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutatorSide {
    /// `[x, f]_*`
    LeftX,
    /// `[f, y]_*`
    RightY,
}

/// Closed derivative form of the twisted commutators with the generators:
/// `[x, f]_* = (∂f/∂y)(x, α_k(y))` and `[f, y]_* = (∂f/∂x)(x, α_k(y))`.
///
/// Agrees with [`star_commutator`] everywhere; both are kept on purpose.
pub fn star_commutator_fast(k: &TwistParams, side: CommutatorSide, f: &WeylPoly) -> WeylPoly {
    let d = match side {
        CommutatorSide::LeftX => f.partial_y(),
        CommutatorSide::RightY => f.partial_x(),
    };
    k.alpha(&d)
}

/// Self-test that `α_k` commutes with `d/dy` on the basis `y^0 … y^cap`.
///
/// True for every well-formed [`TwistParams`] by construction; the
/// interesting use is the generic image check below.
pub fn alpha_commutes_with_ddy(k: &TwistParams, cap: u32) -> bool {
    y_image_commutes_with_ddy(&k.alpha_y(), cap)
}

/// Whether the substitution endomorphism `y ↦ g(y)` of `K[y]` commutes
/// with `d/dy` on the basis `y^0 … y^cap`.
///
/// Lets malformed images (e.g. `y ↦ y²`) be probed without constructing a
/// `TwistParams`, which would reject them.
pub fn y_image_commutes_with_ddy(g: &WeylPoly, cap: u32) -> bool {
    assert!(g.is_x_free(), "image of y must lie in K[y]");
    let field = g.field().clone();
    for m in 0..=cap {
        let ym = WeylPoly::monomial(&field, m, 0, field.one());
        let lhs = ym.partial_y().substitute_y(g); // α(δ(y^m))
        let rhs = ym.substitute_y(g).partial_y(); // δ(α(y^m))
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// `α_k` is surjective exactly when the support of k lies in `{0}`
/// (then it is a triangular automorphism `y ↦ k₀ + y`).
pub fn alpha_is_surjective(k: &TwistParams) -> bool {
    k.is_k0_only()
}

/// Associator-vanishing criterion without computing the associator:
/// `(q, r, s)_* = 0  ⟺  q · α_k(r·s) = α_k(q·r) · s`.
pub fn associator_vanishes_iff(
    k: &TwistParams,
    q: &WeylPoly,
    r: &WeylPoly,
    s: &WeylPoly,
) -> bool {
    q.ore_mul(&k.alpha(&r.ore_mul(s))) == k.alpha(&q.ore_mul(r)).ore_mul(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(spec: &str) -> Field {
        spec.parse().unwrap()
    }

    fn twist(field: &Field, pairs: &[(u32, i64)]) -> TwistParams {
        TwistParams::new(field, pairs.iter().map(|&(i, v)| (i, field.elem_from_int(v)))).unwrap()
    }

    #[test]
    fn rejects_bad_indices() {
        let k = field("3");
        let r = TwistParams::new(&k, [(2, k.one())]);
        assert_eq!(r, Err(Error::BadTwistIndex { index: 2, p: 3 }));
        assert!(TwistParams::new(&k, [(0, k.one()), (3, k.one()), (6, k.one())]).is_ok());
    }

    #[test]
    fn parse_round_trip() {
        let k = field("2");
        let t = TwistParams::parse(&k, "0:1,2:1").unwrap();
        assert_eq!(t.to_string(), "0:1,2:1");
        assert!(TwistParams::parse(&k, "").unwrap().is_zero());
        assert!(TwistParams::parse(&k, "1:1").is_err());
    }

    #[test]
    fn identity_twist_is_identity() {
        let k = field("5");
        let zero = TwistParams::zero(&k);
        let f = WeylPoly::from_terms(&k, [(2, 1, k.elem_from_int(3)), (0, 2, k.one())]);
        assert_eq!(zero.alpha(&f), f);
        assert_eq!(
            yau_mul(&zero, &WeylPoly::x(&k), &f),
            WeylPoly::x(&k).ore_mul(&f)
        );
    }

    #[test]
    fn alpha_k0_on_y_squared_f3() {
        // k0 = 1 over F_3: alpha(y^2) = (1 + y)^2 = 1 + 2y + y^2
        let k = field("3");
        let t = twist(&k, &[(0, 1)]);
        let y2 = WeylPoly::monomial(&k, 2, 0, k.one());
        let expect = WeylPoly::from_terms(
            &k,
            [(0, 0, k.one()), (1, 0, k.elem_from_int(2)), (2, 0, k.one())],
        );
        assert_eq!(t.alpha(&y2), expect);
    }

    #[test]
    fn alpha_frobenius_shape_f2() {
        // p = 2, k_2 = 1: alpha(y^2) = (y + y^2)^2 = y^2 + y^4
        let k = field("2");
        let t = twist(&k, &[(2, 1)]);
        let y2 = WeylPoly::monomial(&k, 2, 0, k.one());
        let expect =
            &WeylPoly::monomial(&k, 2, 0, k.one()) + &WeylPoly::monomial(&k, 4, 0, k.one());
        assert_eq!(t.alpha(&y2), expect);
    }

    #[test]
    fn alpha_commutes_with_derivative() {
        let k = field("2");
        assert!(alpha_commutes_with_ddy(&TwistParams::zero(&k), 8));
        assert!(alpha_commutes_with_ddy(&twist(&k, &[(2, 1)]), 8));
        let k3 = field("3");
        assert!(alpha_commutes_with_ddy(&twist(&k3, &[(0, 2), (3, 1), (9, 2)]), 10));
        // malformed image y -> y^2 does not commute with d/dy
        let y2 = WeylPoly::monomial(&k3, 2, 0, k3.one());
        assert!(!y_image_commutes_with_ddy(&y2, 4));
    }

    #[test]
    fn yau_mul_examples() {
        let k = field("3");
        let t = twist(&k, &[(0, 1), (3, 2)]);
        let x = WeylPoly::x(&k);
        let y = WeylPoly::y(&k);
        // x * y = alpha(yx + 1) = alpha(y)x + 1
        let expect = {
            let ay = t.alpha_y();
            let mut acc = WeylPoly::one(&k);
            for (m, _, c) in ay.terms() {
                acc = &acc + &WeylPoly::monomial(&k, m, 1, c.clone());
            }
            acc
        };
        assert_eq!(yau_mul(&t, &x, &y), expect);
        // weak identity: 1 * f = alpha(f) = f * 1
        let f = WeylPoly::from_terms(&k, [(2, 2, k.elem_from_int(2)), (1, 0, k.one())]);
        let one = WeylPoly::one(&k);
        assert_eq!(yau_mul(&t, &one, &f), t.alpha(&f));
        assert_eq!(yau_mul(&t, &f, &one), t.alpha(&f));
    }

    #[test]
    fn star_commutator_of_generators_is_one() {
        for spec in ["2", "3", "5"] {
            let k = field(spec);
            for t in [
                TwistParams::zero(&k),
                twist(&k, &[(0, 1)]),
                twist(&k, &[(k.characteristic() as u32, 1)]),
            ] {
                let x = WeylPoly::x(&k);
                let y = WeylPoly::y(&k);
                assert_eq!(star_commutator(&t, &x, &y), WeylPoly::one(&k));
            }
        }
    }

    #[test]
    fn star_associator_zero_iff_untwisted_on_yx() {
        let k = field("2");
        let yx = WeylPoly::monomial(&k, 1, 1, k.one());
        assert!(star_associator(&TwistParams::zero(&k), &yx, &yx, &yx).is_zero());
        for t in [twist(&k, &[(0, 1)]), twist(&k, &[(2, 1)]), twist(&k, &[(4, 1)])] {
            let a = star_associator(&t, &yx, &yx, &yx);
            assert!(!a.is_zero(), "twist {t} should break power associativity");
            assert!(!associator_vanishes_iff(&t, &yx, &yx, &yx));
        }
    }

    #[test]
    fn associator_criterion_on_ones() {
        // (1, 1, f) reduces to alpha(f) = f
        let k = field("2");
        let t = twist(&k, &[(2, 1)]);
        let one = WeylPoly::one(&k);
        let c = WeylPoly::constant(k.one());
        assert!(associator_vanishes_iff(&t, &one, &one, &c));
        let y = WeylPoly::y(&k);
        assert!(!associator_vanishes_iff(&t, &one, &one, &y));
        assert_eq!(
            associator_vanishes_iff(&t, &one, &one, &y),
            star_associator(&t, &one, &one, &y).is_zero()
        );
    }

    #[test]
    fn fast_commutator_routes_agree() {
        let k = field("5");
        let t = twist(&k, &[(0, 1)]);
        // [x, y^m x^n]_* = m alpha(y)^{m-1} x^n
        let f = WeylPoly::monomial(&k, 3, 2, k.one());
        let fast = star_commutator_fast(&t, CommutatorSide::LeftX, &f);
        let slow = star_commutator(&t, &WeylPoly::x(&k), &f);
        assert_eq!(fast, slow);
        // [x, c]_* = 0
        let c = WeylPoly::constant(k.elem_from_int(4));
        assert!(star_commutator_fast(&t, CommutatorSide::LeftX, &c).is_zero());
        // [y^3 x, y]_* over F_5 with k0 = 1: both routes give (1+y)^3
        let y3x = WeylPoly::monomial(&k, 3, 1, k.one());
        let fast = star_commutator_fast(&t, CommutatorSide::RightY, &y3x);
        let slow = star_commutator(&t, &y3x, &WeylPoly::y(&k));
        assert_eq!(fast, slow);
        let one_plus_y = &WeylPoly::one(&k) + &WeylPoly::y(&k);
        assert_eq!(fast, one_plus_y.pow(3));
    }

    #[test]
    fn surjectivity_classification() {
        let k = field("5");
        assert!(alpha_is_surjective(&TwistParams::zero(&k)));
        assert!(alpha_is_surjective(&twist(&k, &[(0, 3)])));
        assert!(!alpha_is_surjective(&twist(&k, &[(5, 1)])));
        assert!(!alpha_is_surjective(&twist(&k, &[(0, 3), (10, 2)])));
    }

    #[test]
    fn p_squared_pattern_detection() {
        let k = field("2");
        assert!(twist(&k, &[(0, 1)]).p_squared_pattern());
        assert!(twist(&k, &[(4, 1)]).p_squared_pattern());
        assert!(twist(&k, &[(0, 1), (4, 1), (8, 1)]).p_squared_pattern());
        assert!(!twist(&k, &[(2, 1)]).p_squared_pattern());
        assert!(!twist(&k, &[(4, 1), (6, 1)]).p_squared_pattern());
        // shift derivative vanishes exactly on the pattern
        assert!(twist(&k, &[(4, 1)]).shift_derivative().is_zero());
        assert!(!twist(&k, &[(2, 1)]).shift_derivative().is_zero());
    }

    #[test]
    fn twist_value_at_y_is_alpha_y() {
        let k = field("3");
        let t = twist(&k, &[(0, 2), (3, 1)]);
        assert_eq!(t.twist_value_at(&WeylPoly::y(&k)), t.alpha_y());
    }
}
