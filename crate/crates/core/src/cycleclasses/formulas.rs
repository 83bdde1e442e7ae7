//! Closed-form classes, masses and degrees.

use super::CycleError;
use crate::arith::{int, proportionality_factor, zeta_neg_odd, PFrac, PPoly, Rational};
use crate::polyengine::{q_beta, ChernSequence, MPoly, Var};
use crate::tautring::{degree_ag_tilde, LambdaMonomial, RingMode, TautClass};

fn check_genus(g: usize) -> Result<(), CycleError> {
    if g == 0 || g > crate::tautring::MAX_GENUS {
        Err(CycleError::BadGenus(g))
    } else {
        Ok(())
    }
}

/// `p^j + (-1)^j`.
pub fn p_pow_signed(j: u32) -> PPoly {
    PPoly::p_pow_plus(j, if j.is_multiple_of(2) { 1 } else { -1 })
}

/// `prod_{j=1}^{g} (p^j + (-1)^j)`.
pub fn signed_product(g: usize) -> PPoly {
    (1..=g as u32).map(p_pow_signed).product()
}

/// Class of the locus of `p`-rank at most `f`:
/// `(p-1)(p^2-1)...(p^{g-f}-1) lambda_{g-f}`.
pub fn vf_class(g: usize, f: usize) -> Result<TautClass, CycleError> {
    check_genus(g)?;
    if f >= g {
        return Err(CycleError::BadPRank { f, g });
    }
    let c: PPoly = (1..=(g - f) as u32)
        .map(|i| PPoly::p_pow_plus(i, -1))
        .product();
    Ok(TautClass::lambda(g, RingMode::Compact, g - f)?.scale(&c))
}

/// `(p-1) l_i`, the class of the locus where `V` kills the `i`-th graded
/// piece of the Hodge filtration.
pub fn zi_class(i: usize) -> Result<MPoly<PPoly>, CycleError> {
    if i == 0 || i > crate::polyengine::ALPHABET {
        return Err(CycleError::BadIndex(i));
    }
    Ok(MPoly::var(Var::L(i)).scale(&PPoly::p_pow_plus(1, -1)))
}

/// Strict partitions whose parts are a subset of `1..=a`, largest first,
/// paired with their complements in `1..=a`.
fn subset_pairs(a: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    (0u32..1 << a)
        .map(|bits| {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                (1..=a).rev().partition(|&i| bits & (1 << (i - 1)) != 0);
            (inside, outside)
        })
        .collect()
}

fn chern(g: usize, c: impl Fn(usize) -> PPoly) -> Result<ChernSequence<TautClass>, CycleError> {
    let mut values = vec![TautClass::one(g, RingMode::Compact)];
    for i in 1..=g {
        values.push(TautClass::lambda(g, RingMode::Compact, i)?.scale(&c(i)));
    }
    Ok(ChernSequence::new(values)?)
}

/// Class of the locus of `a`-number at least `a`:
/// `sum_beta Q_beta(E^(p)) Q_{rho(a) - beta}(E^*)`, where `beta` runs over
/// the strict partitions with parts in `1..=a` and the complement is taken
/// as sets of parts.
pub fn ta_class(g: usize, a: usize) -> Result<TautClass, CycleError> {
    check_genus(g)?;
    if a == 0 || a > g {
        return Err(CycleError::BadANumber { a, g });
    }
    let frob = chern(g, |i| PPoly::monomial(i as u32, int(1)))?;
    let dual = chern(g, |i| PPoly::from_int(if i % 2 == 0 { 1 } else { -1 }))?;
    let mut out = TautClass::zero(g, RingMode::Compact);
    for (beta, rest) in subset_pairs(a) {
        let term = q_beta(&beta, &frob)?.mul(&q_beta(&rest, &dual)?)?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `sum 1/#Aut` over superspecial principally polarized abelian varieties:
/// `p(g) prod_{j=1}^{g} (p^j + (-1)^j)`.
pub fn superspecial_mass(g: usize) -> Result<PPoly, CycleError> {
    check_genus(g)?;
    Ok(signed_product(g).scale(&proportionality_factor(g)))
}

pub fn superspecial_mass_at(g: usize, p: &Rational) -> Result<Rational, CycleError> {
    Ok(superspecial_mass(g)?.eval(p))
}

/// Deuring's mass formula from `deg lambda_1 = 1/24` and the class
/// `(p-1) lambda_1` of the supersingular locus.
pub fn deuring_check() -> Result<PPoly, CycleError> {
    let ss = vf_class(1, 0)?;
    let lhs = degree_ag_tilde(&ss)?;
    let rhs = superspecial_mass(1)?;
    if lhs != rhs {
        return Err(CycleError::Inconsistent(format!(
            "Deuring mass {lhs} differs from {rhs}"
        )));
    }
    Ok(lhs)
}

/// Boundary class `(-1)^g / zeta(1-2g) lambda_g`.
pub fn bg_class(g: usize) -> Result<TautClass, CycleError> {
    check_genus(g)?;
    let mut c = int(1) / zeta_neg_odd(g);
    if g % 2 == 1 {
        c = -c;
    }
    Ok(TautClass::lambda(g, RingMode::Compact, g)?.scale_rational(&c))
}

/// Degree of the flag tower over the ordinary locus: the step from level
/// `i` to `i+1` has degree `1 + p + ... + p^i`.
pub fn flag_degrees(g: usize) -> Result<(PPoly, Vec<PPoly>), CycleError> {
    check_genus(g)?;
    let steps: Vec<PPoly> = (1..g)
        .map(|i| PPoly::from_terms((0..=i as u32).map(|k| (k, int(1)))))
        .collect();
    let total = steps.iter().cloned().product();
    Ok((total, steps))
}

/// `h(1) = 1`, `h(g) = h(g-1) (p^g + (-1)^g) / (p + (-1)^g)`.
pub fn h_factor(g: usize) -> Result<PFrac, CycleError> {
    check_genus(g)?;
    let mut h = PFrac::one();
    for k in 2..=g as u32 {
        let den = PPoly::p_pow_plus(1, if k % 2 == 0 { 1 } else { -1 });
        let step = PFrac::new(p_pow_signed(k), den).expect("nonzero denominator");
        h = &h * &step;
    }
    Ok(h)
}

/// Closed form for the stratum `{g, g-1, ..., 2}`:
/// `(p-1)/(p^2+1) h(g) prod (p^i + (-1)^i)` times `lambda_2 ... lambda_g`.
pub fn penultimate_class(g: usize) -> Result<(PFrac, TautClass), CycleError> {
    check_genus(g)?;
    if g < 2 {
        return Err(CycleError::BadGenus(g));
    }
    let lead =
        PFrac::new(PPoly::p_pow_plus(1, -1), PPoly::p_pow_plus(2, 1)).expect("nonzero denominator");
    let scalar = &(&lead * &h_factor(g)?) * &PFrac::from_poly(signed_product(g));
    let indices: Vec<usize> = (2..=g).collect();
    let mono = TautClass::basis_term(
        g,
        RingMode::Compact,
        LambdaMonomial::from_indices(&indices),
        PPoly::one(),
    );
    Ok((scalar, mono))
}

/// Class of the supersingular locus in genus three:
/// `(p-1)(p^2-1)(p^3-1)(p-1)(p^2+1) lambda_1 lambda_3`.
pub fn supersingular3_class() -> TautClass {
    let c: PPoly = [
        PPoly::p_pow_plus(1, -1),
        PPoly::p_pow_plus(2, -1),
        PPoly::p_pow_plus(3, -1),
        PPoly::p_pow_plus(1, -1),
        PPoly::p_pow_plus(2, 1),
    ]
    .into_iter()
    .product();
    TautClass::basis_term(
        3,
        RingMode::Compact,
        LambdaMonomial::from_indices(&[1, 3]),
        c,
    )
}
