//! Push-forward classes of all strata, and the published genus three values.

use rayon::prelude::*;

use super::fulton::{pushforward_to_ag, Conventions, FultonEngine};
use super::CycleError;
use crate::arith::{int, PFrac, PPoly};
use crate::tautring::{LambdaMonomial, RingMode, TautClass};
use crate::weyl::{enumerate_strata, AdmissiblePartition};

/// Largest genus for which stratum classes are computed by default.
pub const DEFAULT_CLASS_GENUS_LIMIT: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct StratumClassReport {
    pub mu: AdmissiblePartition,
    pub raw_pushforward: TautClass,
    /// Published multiplicity factor, known only in genus three.
    pub bracket_factor: Option<PPoly>,
    /// `raw_pushforward / bracket_factor` when the bracket is known and
    /// divides.
    pub reduced_class: Option<TautClass>,
}

/// Push-forwards of all `2^g` strata in the order of
/// [`enumerate_strata`].
pub fn strata_table(g: usize, conv: Conventions) -> Result<Vec<StratumClassReport>, CycleError> {
    if g > DEFAULT_CLASS_GENUS_LIMIT {
        return Err(CycleError::TooExpensive {
            g,
            limit: DEFAULT_CLASS_GENUS_LIMIT,
        });
    }
    strata_table_unchecked(g, conv)
}

/// As [`strata_table`], without the genus limit.
pub fn strata_table_unchecked(
    g: usize,
    conv: Conventions,
) -> Result<Vec<StratumClassReport>, CycleError> {
    let strata = enumerate_strata(g)?;
    let mut engine = FultonEngine::new(g, conv);
    let classes = strata
        .iter()
        .map(|s| engine.class(&s.mu))
        .collect::<Result<Vec<_>, _>>()?;
    drop(engine);
    let pushed: Vec<TautClass> = classes
        .par_iter()
        .map(|f| pushforward_to_ag(f, g))
        .collect::<Result<_, _>>()?;
    let brackets = if g == 3 { Some(published_g3()) } else { None };
    strata
        .into_iter()
        .zip(pushed)
        .map(|(s, raw)| {
            let bracket = brackets.as_ref().and_then(|rows| {
                rows.iter()
                    .find(|r| r.mu == s.mu)
                    .map(|r| r.bracket.clone().unwrap_or_else(PPoly::one))
            });
            let reduced_class = bracket.as_ref().and_then(|b| raw.exact_div(b).ok());
            Ok(StratumClassReport {
                mu: s.mu,
                raw_pushforward: raw,
                bracket_factor: bracket,
                reduced_class,
            })
        })
        .collect()
}

/// One row of the printed genus three push-forward table.
#[derive(Debug, Clone, PartialEq)]
pub struct PublishedRow {
    pub mu: AdmissiblePartition,
    /// Factor printed in square brackets, if any.
    pub bracket: Option<PPoly>,
    /// The full printed class, bracket included.
    pub class: TautClass,
}

fn poly(ascending: &[i64]) -> PPoly {
    PPoly::from_ints(ascending)
}

fn prod(factors: &[&[i64]]) -> PPoly {
    factors.iter().map(|f| poly(f)).product()
}

fn lam(indices: &[usize], c: PPoly) -> TautClass {
    TautClass::basis_term(
        3,
        RingMode::Compact,
        LambdaMonomial::from_indices(indices),
        c,
    )
}

fn row(parts: &[usize], bracket: Option<PPoly>, body: TautClass) -> PublishedRow {
    let class = match &bracket {
        Some(b) => body.scale(b),
        None => body,
    };
    PublishedRow {
        mu: AdmissiblePartition::new(3, parts.to_vec()).expect("valid genus three partition"),
        bracket,
        class,
    }
}

/// The eight genus three push-forwards exactly as printed, with products
/// expanded.
pub fn published_g3() -> Vec<PublishedRow> {
    vec![
        row(
            &[],
            Some(prod(&[&[1, 1], &[1, 1, 1]])),
            lam(&[], PPoly::one()),
        ),
        row(&[1], Some(poly(&[1, 1])), lam(&[1], poly(&[1, -1]))),
        row(&[2], None, lam(&[2], prod(&[&[-1, 1], &[-1, 0, 1]]))),
        row(
            &[2, 1],
            Some(poly(&[1, 1])),
            lam(&[1, 2], prod(&[&[1, -1], &[1, 0, 1]]))
                .add(&lam(&[3], prod(&[&[-2], &[-1, 0, 0, 1]])))
                .expect("same ring"),
        ),
        row(
            &[3],
            None,
            lam(&[3], prod(&[&[-1, 1], &[-1, 0, 1], &[-1, 0, 0, 1]])),
        ),
        row(
            &[3, 1],
            Some(poly(&[1, 1])),
            lam(&[1, 3], prod(&[&[-1, 1], &[-1, 1], &[1, -1, 1]])),
        ),
        row(
            &[3, 2],
            None,
            lam(
                &[2, 3],
                prod(&[
                    &[-1, 1],
                    &[-1, 1],
                    &[-1, 1],
                    &[1, 1],
                    &[-1, 1, -1],
                    &[1, 1, 1],
                ]),
            ),
        ),
        row(
            &[3, 2, 1],
            Some(poly(&[1, 0, 0, 1])),
            lam(&[1, 2, 3], prod(&[&[-1, 1], &[1, 0, 1], &[-1, 0, 0, 1]])),
        ),
    ]
}

/// Rows of the printed table whose signs disagree with the degeneracy
/// formula and with the closed forms for `T_1` and `T_2`.
pub fn g3_errata() -> Vec<AdmissiblePartition> {
    [vec![1], vec![2, 1], vec![3, 2]]
        .into_iter()
        .map(|p| AdmissiblePartition::new(3, p).expect("valid"))
        .collect()
}

/// The printed table with the sign errata corrected: the `lambda_1` row and
/// the `lambda_2 lambda_3` row change sign, and in the `{2,1}` row only the
/// `lambda_1 lambda_2` term does.
pub fn corrected_g3() -> Vec<PublishedRow> {
    let mut rows = published_g3();
    let minus = PPoly::from_int(-1);
    for r in rows.iter_mut() {
        match r.mu.parts() {
            [1] | [3, 2] => r.class = r.class.scale(&minus),
            [2, 1] => {
                let m = LambdaMonomial::from_indices(&[1, 2]);
                let c = r.class.coeff(m);
                let flip = TautClass::basis_term(3, RingMode::Compact, m, c.scale(&int(-2)));
                r.class = r.class.add(&flip).expect("same ring");
            }
            _ => {}
        }
    }
    rows
}

/// Outcome of comparing computed push-forwards against reference rows.
#[derive(Debug, Clone, PartialEq)]
pub struct RowComparison {
    pub mu: AdmissiblePartition,
    pub expected: TautClass,
    pub computed: TautClass,
}

impl RowComparison {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }

    /// `computed / expected` as a scalar when both are multiples of the same
    /// basis vector.
    pub fn ratio(&self) -> Option<PFrac> {
        class_ratio(&self.computed, &self.expected)
    }
}

pub fn compare_rows(
    reports: &[StratumClassReport],
    reference: &[PublishedRow],
) -> Vec<RowComparison> {
    reference
        .iter()
        .map(|r| {
            let computed = reports
                .iter()
                .find(|rep| rep.mu == r.mu)
                .map(|rep| rep.raw_pushforward.clone())
                .unwrap_or_else(|| TautClass::zero(r.mu.genus(), RingMode::Compact));
            RowComparison {
                mu: r.mu.clone(),
                expected: r.class.clone(),
                computed,
            }
        })
        .collect()
}

/// Scalar `q` with `a = q * b`, if one exists.
pub fn class_ratio(a: &TautClass, b: &TautClass) -> Option<PFrac> {
    let same_support = a.terms().map(|(m, _)| m).eq(b.terms().map(|(m, _)| m));
    if !same_support {
        return None;
    }
    let mut ratios = b
        .terms()
        .map(|(m, cb)| PFrac::new(a.coeff(m), cb.clone()).expect("nonzero coefficient"));
    let q = ratios.next()?;
    ratios.all(|r| r == q).then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrected_rows_differ_only_on_errata() {
        let errata = g3_errata();
        for (a, b) in published_g3().iter().zip(corrected_g3()) {
            assert_eq!(a.class == b.class, !errata.contains(&a.mu), "{}", a.mu);
        }
    }

    #[test]
    fn ratios() {
        let a = lam(&[1], poly(&[-1, 0, 1]));
        let b = lam(&[1], poly(&[1, 1]));
        assert_eq!(
            class_ratio(&a, &b).unwrap(),
            PFrac::from_poly(poly(&[-1, 1]))
        );
        assert!(class_ratio(&a, &lam(&[2], PPoly::one())).is_none());
    }
}
