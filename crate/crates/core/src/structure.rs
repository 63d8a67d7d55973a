//! Structure-theoretic scans of the twisted Weyl algebras: commuter,
//! nuclei, center, power associativity, and non-simplicity, with witness
//! reporting.
//!
//! Scans run either exhaustively over all polynomials up to a total-degree
//! cap (refused above a hard enumeration ceiling) or over seeded random
//! samples, so every run is reproducible. Candidates that fail a membership
//! probe are recorded together with the witness that killed them, which is
//! what the CLI prints.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::gfpn::Field;
use crate::homtwist::{star_associator, star_commutator, yau_mul, TwistParams};
use crate::weyl::WeylPoly;

/// Hard ceiling on exhaustive enumeration size.
pub const EXHAUSTIVE_CEILING: u64 = 1 << 20;

/// How a scan picks its candidate polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Randomized { samples: u32, seed: u64 },
}

/// Degree cap and sampling mode for a scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_total_degree: u32,
    pub mode: ScanMode,
}

impl ScanConfig {
    pub fn exhaustive(max_total_degree: u32) -> ScanConfig {
        ScanConfig {
            max_total_degree,
            mode: ScanMode::Exhaustive,
        }
    }

    pub fn randomized(max_total_degree: u32, samples: u32, seed: u64) -> ScanConfig {
        ScanConfig {
            max_total_degree,
            mode: ScanMode::Randomized { samples, seed },
        }
    }

    /// Sampling policy: exhaustive when the enumeration fits under the
    /// ceiling, else 1000 seeded samples.
    pub fn auto(field: &Field, max_total_degree: u32, seed: u64) -> ScanConfig {
        match enumeration_size(field, max_total_degree) {
            Some(n) if n <= EXHAUSTIVE_CEILING => ScanConfig::exhaustive(max_total_degree),
            _ => ScanConfig::randomized(max_total_degree, 1000, seed),
        }
    }

    /// Materialize the candidate list. Exhaustive mode errors out when the
    /// enumeration would exceed [`EXHAUSTIVE_CEILING`].
    pub fn candidates(&self, field: &Field) -> Result<Vec<WeylPoly>, Error> {
        match self.mode {
            ScanMode::Exhaustive => {
                match enumeration_size(field, self.max_total_degree) {
                    Some(n) if n <= EXHAUSTIVE_CEILING => {}
                    n => {
                        return Err(Error::ScanTooLarge {
                            size: n.unwrap_or(u64::MAX),
                            ceiling: EXHAUSTIVE_CEILING,
                        })
                    }
                }
                Ok(enumerate_polys(field, self.max_total_degree).collect())
            }
            ScanMode::Randomized { samples, seed } => {
                Ok(sample_polys(field, self.max_total_degree, samples, seed))
            }
        }
    }
}

/// Monomials `(m, n)` with `m + n ≤ d` in ascending lex order.
fn monomials_up_to(d: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 0..=d {
        for n in 0..=(d - m) {
            out.push((m, n));
        }
    }
    out
}

/// Number of polynomials of total degree ≤ d, `q^{#monomials}`; `None` on
/// u64 overflow.
pub fn enumeration_size(field: &Field, d: u32) -> Option<u64> {
    let count = monomials_up_to(d).len() as u32;
    field.order().checked_pow(count)
}

/// Every polynomial of total degree ≤ d, in a fixed order (coefficient
/// codes counted up in base q over the lex-ordered monomial list).
pub fn enumerate_polys(field: &Field, d: u32) -> impl Iterator<Item = WeylPoly> + '_ {
    let monos = monomials_up_to(d);
    let q = field.order();
    let total = enumeration_size(field, d).expect("enumeration size overflow");
    (0..total).map(move |code| {
        let mut c = code;
        let mut poly = WeylPoly::zero(field);
        for &(m, n) in &monos {
            let digit = c % q;
            c /= q;
            if digit != 0 {
                poly =
                    &poly + &WeylPoly::monomial(field, m, n, field.elem_from_code(digit).unwrap());
            }
        }
        poly
    })
}

/// Seeded uniform samples of polynomials of total degree ≤ d.
pub fn sample_polys(field: &Field, d: u32, samples: u32, seed: u64) -> Vec<WeylPoly> {
    let monos = monomials_up_to(d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let mut poly = WeylPoly::zero(field);
            for &(m, n) in &monos {
                let c = field.random_elem(&mut rng);
                if !c.is_zero() {
                    poly = &poly + &WeylPoly::monomial(field, m, n, c);
                }
            }
            poly
        })
        .collect()
}

/// Verdict of a commuter membership test.
#[derive(Clone, Debug)]
pub struct CommuterVerdict {
    /// Structural membership: every exponent pair divisible by p.
    pub member: bool,
    /// For non-members, a g with `[f, g]_* ≠ 0` and the commutator value.
    pub witness: Option<(WeylPoly, WeylPoly)>,
}

/// Membership test for the commuter `C(A₁ᵏ) = K[x^p, y^p]`.
///
/// The structural test (exponents divisible by p) is the verdict; the
/// behavioral test `[f, g]_* = 0` runs against the generators and the
/// scanned candidates and must agree — a disagreement is an internal
/// invariant violation and panics.
pub fn in_commuter(k: &TwistParams, f: &WeylPoly, cfg: &ScanConfig) -> CommuterVerdict {
    let field = f.field().clone();
    let structural = f.in_p_power_subring();
    let mut witness = None;
    let mut probes = vec![WeylPoly::x(&field), WeylPoly::y(&field)];
    if let Ok(cands) = cfg.candidates(&field) {
        probes.extend(cands);
    }
    for g in &probes {
        let c = star_commutator(k, f, g);
        if !c.is_zero() {
            assert!(
                !structural,
                "internal invariant violation: structural member {f} fails to commute with {g}"
            );
            witness = Some((g.clone(), c));
            break;
        }
    }
    if !structural {
        assert!(
            witness.is_some(),
            "internal invariant violation: non-member {f} commuted with every probe"
        );
    }
    CommuterVerdict {
        member: structural,
        witness,
    }
}

/// Which nucleus a scan targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nucleus {
    Left,
    Middle,
    Right,
}

/// A candidate eliminated by a scan, with the probe that killed it.
#[derive(Clone, Debug)]
pub struct NucleusKill {
    pub candidate: WeylPoly,
    pub probe: &'static str,
    /// The nonzero associator (or probe defect) that witnesses the kill.
    pub defect: WeylPoly,
}

/// Result of a nucleus scan.
#[derive(Clone, Debug)]
pub enum NucleusScan {
    /// `k = 0`: the algebra is associative and every element is nuclear.
    AllAssociative,
    /// The nonzero scanned elements that survived all probes, plus one
    /// kill record per eliminated candidate.
    Scan {
        members: Vec<WeylPoly>,
        kills: Vec<NucleusKill>,
    },
}

impl NucleusScan {
    pub fn members_empty(&self) -> bool {
        match self {
            NucleusScan::AllAssociative => false,
            NucleusScan::Scan { members, .. } => members.is_empty(),
        }
    }
}

/// Scan for nucleus members among the configured candidates.
///
/// For `k = 0` the scan short-circuits: the algebra is associative. For
/// `k ≠ 0` each nonzero candidate first runs the two cheap probes from the
/// one-sided associator identities (they eliminate almost everything), and
/// survivors then face full associator tests against the scanned pairs.
pub fn nucleus_scan(
    k: &TwistParams,
    which: Nucleus,
    cfg: &ScanConfig,
) -> Result<NucleusScan, Error> {
    if k.is_zero() {
        return Ok(NucleusScan::AllAssociative);
    }
    let field = k.field().clone();
    let one = WeylPoly::one(&field);
    let y = WeylPoly::y(&field);
    let candidates = cfg.candidates(&field)?;
    let mut members = Vec::new();
    let mut kills = Vec::new();
    'candidates: for r in candidates.iter().filter(|r| !r.is_zero()) {
        // cheap probes first
        let cheap: [(&'static str, WeylPoly); 2] = match which {
            Nucleus::Right => [
                ("(1,1,r)* fixed-point probe", star_associator(k, &one, &one, r)),
                ("(y,1,r)* probe", star_associator(k, &y, &one, r)),
            ],
            Nucleus::Middle => [
                ("(1,s,1)* probe", star_associator(k, &one, r, &one)),
                ("(y,s,1)* probe", star_associator(k, &y, r, &one)),
            ],
            Nucleus::Left => [
                ("(l,1,1)* fixed-point probe", star_associator(k, r, &one, &one)),
                ("(l,1,y)* probe", star_associator(k, r, &one, &y)),
            ],
        };
        for (name, defect) in cheap {
            if !defect.is_zero() {
                kills.push(NucleusKill {
                    candidate: r.clone(),
                    probe: name,
                    defect,
                });
                continue 'candidates;
            }
        }
        // full associator sweep over scanned pairs
        for a in &candidates {
            for b in &candidates {
                let defect = match which {
                    Nucleus::Left => star_associator(k, r, a, b),
                    Nucleus::Middle => star_associator(k, a, r, b),
                    Nucleus::Right => star_associator(k, a, b, r),
                };
                if !defect.is_zero() {
                    kills.push(NucleusKill {
                        candidate: r.clone(),
                        probe: "associator pair sweep",
                        defect,
                    });
                    continue 'candidates;
                }
            }
        }
        members.push(r.clone());
    }
    Ok(NucleusScan::Scan { members, kills })
}

/// Symbolic description of the center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterOf {
    /// `Z(A₁ᵏ) = {0}` (every twisted case).
    Zero,
    /// `Z(A₁) = C(A₁) = K[x^p, y^p]` (associative case).
    PPowerSubring,
}

/// The center, as a symbolic descriptor validated against the scans.
///
/// For `k ≠ 0` the zero-set answer is cross-checked by intersecting the
/// commuter test with a right-nucleus scan on the configured candidates;
/// for `k = 0` the commuter is everything nuclear, so the descriptor is
/// the p-power subring.
pub fn center_of(k: &TwistParams, cfg: &ScanConfig) -> Result<CenterOf, Error> {
    if k.is_zero() {
        return Ok(CenterOf::PPowerSubring);
    }
    match nucleus_scan(k, Nucleus::Right, cfg)? {
        NucleusScan::AllAssociative => unreachable!("k != 0"),
        NucleusScan::Scan { members, .. } => {
            for m in &members {
                let cv = in_commuter(k, m, cfg);
                assert!(
                    !cv.member,
                    "internal invariant violation: {m} is central in a twisted algebra"
                );
            }
        }
    }
    Ok(CenterOf::Zero)
}

/// Power-associativity witness: `None` for `k = 0`, else the element `yx`
/// together with its nonzero twisted associator `(yx, yx, yx)_*`.
pub fn power_assoc_witness(k: &TwistParams) -> Option<(WeylPoly, WeylPoly)> {
    if k.is_zero() {
        return None;
    }
    let field = k.field();
    let yx = WeylPoly::monomial(field, 1, 1, field.one());
    let assoc = star_associator(k, &yx, &yx, &yx);
    assert!(
        !assoc.is_zero(),
        "internal invariant violation: (yx,yx,yx)* vanished for twist {k}"
    );
    Some((yx, assoc))
}

/// Witness that `A₁ᵏ` is not simple: the two-sided ideal generated by the
/// central element `x^p` is proper (every nonzero member has degree ≥ p).
#[derive(Clone, Debug)]
pub struct NonSimpleWitness {
    pub generator: WeylPoly,
    pub min_degree: u32,
}

pub fn nonsimple_witness(k: &TwistParams) -> NonSimpleWitness {
    let field = k.field();
    let p = field.characteristic() as u32;
    NonSimpleWitness {
        generator: WeylPoly::monomial(field, 0, p, field.one()),
        min_degree: p,
    }
}

/// Sample check behind [`nonsimple_witness`]: `q * x^p = α_k(q)·x^p` has
/// total degree ≥ p for every nonzero sampled q.
pub fn validate_nonsimple(k: &TwistParams, cfg: &ScanConfig) -> Result<bool, Error> {
    let field = k.field().clone();
    let w = nonsimple_witness(k);
    for q in cfg.candidates(&field)? {
        if q.is_zero() {
            continue;
        }
        let i = yau_mul(k, &q, &w.generator);
        let alt = k.alpha(&q).ore_mul(&w.generator);
        if i != alt || i.total_degree().unwrap_or(0) < w.min_degree {
            return Ok(false);
        }
    }
    Ok(true)
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
    fn enumeration_counts() {
        let k = field("2");
        assert_eq!(enumeration_size(&k, 1), Some(8)); // 3 monomials
        assert_eq!(enumerate_polys(&k, 1).count(), 8);
        let k3 = field("3");
        assert_eq!(enumeration_size(&k3, 2), Some(3u64.pow(6)));
    }

    #[test]
    fn exhaustive_ceiling_enforced() {
        let k = field("2^4");
        // 15 monomials at degree <= 4 gives 16^15 >> ceiling
        let cfg = ScanConfig::exhaustive(4);
        assert!(matches!(cfg.candidates(&k), Err(Error::ScanTooLarge { .. })));
        let auto = ScanConfig::auto(&k, 4, 7);
        assert!(matches!(
            auto.mode,
            ScanMode::Randomized { samples: 1000, seed: 7 }
        ));
    }

    #[test]
    fn sampling_is_seeded() {
        let k = field("3");
        let a = sample_polys(&k, 3, 10, 42);
        let b = sample_polys(&k, 3, 10, 42);
        let c = sample_polys(&k, 3, 10, 43);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn commuter_examples() {
        let k = field("2");
        let cfg = ScanConfig::exhaustive(2);
        for t in [TwistParams::zero(&k), twist(&k, &[(0, 1)]), twist(&k, &[(2, 1)])] {
            let xp = WeylPoly::monomial(&k, 0, 2, k.one()); // x^p
            assert!(in_commuter(&t, &xp, &cfg).member);
            assert!(in_commuter(&t, &WeylPoly::one(&k), &cfg).member);
            let v = in_commuter(&t, &WeylPoly::y(&k), &cfg);
            assert!(!v.member);
            let (g, c) = v.witness.unwrap();
            assert_eq!(g, WeylPoly::x(&k));
            assert!(!c.is_zero());
        }
    }

    #[test]
    fn commuter_scan_matches_structural_f2() {
        // exhaustive scan at degree <= p over F_2: behavioral commuter
        // membership coincides with the structural K[x^p, y^p] test and the
        // member sets agree across twists
        let k = field("2");
        let cfg = ScanConfig::exhaustive(2);
        let x = WeylPoly::x(&k);
        let y = WeylPoly::y(&k);
        for t in [TwistParams::zero(&k), twist(&k, &[(0, 1)]), twist(&k, &[(2, 1)])] {
            for f in enumerate_polys(&k, 2) {
                let behavioral =
                    star_commutator(&t, &f, &x).is_zero() && star_commutator(&t, &f, &y).is_zero();
                assert_eq!(behavioral, f.in_p_power_subring(), "f = {f}, k = {t}");
                if behavioral {
                    assert!(in_commuter(&t, &f, &cfg).member);
                }
            }
        }
    }

    #[test]
    fn nucleus_sentinel_for_zero_twist() {
        let k = field("2");
        let t = TwistParams::zero(&k);
        let scan = nucleus_scan(&t, Nucleus::Right, &ScanConfig::exhaustive(1)).unwrap();
        assert!(matches!(scan, NucleusScan::AllAssociative));
    }

    #[test]
    fn nuclei_vanish_for_nonzero_twists() {
        let k = field("2");
        let cfg = ScanConfig::exhaustive(2);
        for t in [twist(&k, &[(0, 1)]), twist(&k, &[(2, 1)]), twist(&k, &[(0, 1), (4, 1)])] {
            for which in [Nucleus::Left, Nucleus::Middle, Nucleus::Right] {
                let scan = nucleus_scan(&t, which, &cfg).unwrap();
                match &scan {
                    NucleusScan::Scan { members, kills } => {
                        assert!(members.is_empty(), "{which:?} nucleus nonempty for {t}");
                        assert_eq!(kills.len(), 63); // every nonzero candidate killed
                    }
                    _ => panic!("expected a scan"),
                }
            }
        }
    }

    #[test]
    fn right_nucleus_probe_explains_kills() {
        // the (1,1,r)* probe alone forces alpha(r) = r; the second probe
        // then eliminates the survivors
        let k = field("3");
        let t = twist(&k, &[(0, 1)]);
        let scan = nucleus_scan(&t, Nucleus::Right, &ScanConfig::randomized(2, 50, 5)).unwrap();
        if let NucleusScan::Scan { members, kills } = scan {
            assert!(members.is_empty());
            assert!(kills.iter().all(|kl| kl.probe.contains("probe")));
        } else {
            panic!("expected a scan");
        }
    }

    #[test]
    fn center_descriptions() {
        let k = field("2");
        let cfg = ScanConfig::exhaustive(2);
        assert_eq!(
            center_of(&TwistParams::zero(&k), &cfg).unwrap(),
            CenterOf::PPowerSubring
        );
        assert_eq!(center_of(&twist(&k, &[(2, 1)]), &cfg).unwrap(), CenterOf::Zero);
    }

    #[test]
    fn power_assoc_dichotomy() {
        let k5 = field("5");
        assert!(power_assoc_witness(&TwistParams::zero(&k5)).is_none());
        let (w, a) = power_assoc_witness(&twist(&k5, &[(0, 1)])).unwrap();
        assert_eq!(w, WeylPoly::monomial(&k5, 1, 1, k5.one()));
        assert!(!a.is_zero());
    }

    #[test]
    fn nonsimple_examples() {
        let k = field("3");
        for t in [TwistParams::zero(&k), twist(&k, &[(0, 2)]), twist(&k, &[(3, 1)])] {
            let w = nonsimple_witness(&t);
            assert_eq!(w.generator, WeylPoly::monomial(&k, 0, 3, k.one()));
            assert_eq!(w.min_degree, 3);
            // q = 1: 1 * x^p = alpha(x^p) = x^p of degree p
            let one = WeylPoly::one(&k);
            assert_eq!(yau_mul(&t, &one, &w.generator), w.generator);
            // q = y: deg(alpha(y) x^p) >= p + 1
            let y = WeylPoly::y(&k);
            let i = yau_mul(&t, &y, &w.generator);
            assert!(i.total_degree().unwrap() >= 4);
            assert!(validate_nonsimple(&t, &ScanConfig::randomized(2, 40, 9)).unwrap());
        }
    }
}
