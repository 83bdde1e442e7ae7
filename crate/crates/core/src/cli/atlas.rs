//! Serialized strata atlas: JSON wire format and markdown tables.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{fmt_rational_wire, parse_rational, PPoly};
use crate::cycleclasses::{
    strata_table_unchecked, Conventions, CycleError, DeltaConstant, ProductSign, WordOrder,
    DEFAULT_CLASS_GENUS_LIMIT,
};
use crate::tautring::{RingError, RingMode, TautClass};
use crate::weyl::enumerate_strata;

/// Largest genus accepted by the atlas builder.
pub const DEFAULT_ATLAS_GENUS_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("genus {g} exceeds the atlas limit {limit}")]
    TooLarge { g: usize, limit: usize },
    #[error("genus must be at least one")]
    ZeroGenus,
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
}

/// A polynomial in `p` as `[exponent, "num/den"]` pairs in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireCoeff {
    pub p_coeffs: Vec<(String, String)>,
}

impl WireCoeff {
    pub fn from_poly(c: &PPoly) -> Self {
        Self {
            p_coeffs: c
                .terms()
                .map(|(e, r)| (e.to_string(), fmt_rational_wire(r)))
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<PPoly, AtlasError> {
        let mut out = PPoly::zero();
        for (e, r) in &self.p_coeffs {
            let exp = e
                .parse()
                .map_err(|_| AtlasError::BadCoefficient(e.clone()))?;
            let c = parse_rational(r).ok_or_else(|| AtlasError::BadCoefficient(r.clone()))?;
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTerm {
    /// Sorted indices of the square-free lambda monomial.
    pub lambda: Vec<usize>,
    pub coeff: WireCoeff,
}

pub fn class_to_terms(c: &TautClass) -> Vec<ClassTerm> {
    c.terms()
        .map(|(m, coeff)| ClassTerm {
            lambda: m.indices(),
            coeff: WireCoeff::from_poly(coeff),
        })
        .collect()
}

pub fn class_from_terms(g: usize, terms: &[ClassTerm]) -> Result<TautClass, AtlasError> {
    let mut out = TautClass::zero(g, RingMode::Compact);
    for t in terms {
        let mono = TautClass::monomial(g, RingMode::Compact, &t.lambda)?;
        out = out.add(&mono.scale(&t.coeff.to_poly()?))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRow {
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub weyl_bracket: String,
    pub word: Vec<usize>,
    pub length: usize,
    pub codim: usize,
    pub flag_codim: usize,
    /// Push-forward of the stratum class; absent above the class genus
    /// limit.
    pub class_terms: Option<Vec<ClassTerm>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionsRecord {
    pub product_sign: String,
    pub word_order: String,
    pub delta_constant: String,
    pub description: String,
}

impl ConventionsRecord {
    pub fn of(conv: Conventions) -> Self {
        Self {
            product_sign: match conv.product_sign {
                ProductSign::Minus => "minus",
                ProductSign::Plus => "plus",
            }
            .into(),
            word_order: match conv.word_order {
                WordOrder::Verbatim => "verbatim",
                WordOrder::Reversed => "reversed",
            }
            .into(),
            delta_constant: match conv.delta_constant {
                DeltaConstant::Literal => "literal",
                DeltaConstant::Unit => "unit",
            }
            .into(),
            description: conv.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool_version: String,
    pub conventions: ConventionsRecord,
    pub class_genus_limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasDocument {
    pub g: usize,
    pub rows: Vec<AtlasRow>,
    pub metadata: Metadata,
}

impl AtlasDocument {
    /// Builds the atlas for genus `g`. Classes are included when
    /// `g <= class_limit`.
    pub fn build(g: usize, class_limit: usize, conv: Conventions) -> Result<Self, AtlasError> {
        if g == 0 {
            return Err(AtlasError::ZeroGenus);
        }
        if g > DEFAULT_ATLAS_GENUS_LIMIT {
            return Err(AtlasError::TooLarge {
                g,
                limit: DEFAULT_ATLAS_GENUS_LIMIT,
            });
        }
        let strata = enumerate_strata(g).map_err(CycleError::from)?;
        let classes = if g <= class_limit {
            Some(strata_table_unchecked(g, conv)?)
        } else {
            None
        };
        let rows = strata
            .iter()
            .enumerate()
            .map(|(k, s)| AtlasRow {
                mu: s.mu.parts().to_vec(),
                nu: s.nu.values().to_vec(),
                weyl_bracket: s.weyl.to_string(),
                word: s.word.clone(),
                length: s.length,
                codim: s.codim,
                flag_codim: s.flag_codim,
                class_terms: classes
                    .as_ref()
                    .map(|c| class_to_terms(&c[k].raw_pushforward)),
            })
            .collect();
        Ok(Self {
            g,
            rows,
            metadata: Metadata {
                tool_version: env!("CARGO_PKG_VERSION").into(),
                conventions: ConventionsRecord::of(conv),
                class_genus_limit: class_limit,
            },
        })
    }

    pub fn default_for(g: usize) -> Result<Self, AtlasError> {
        Self::build(g, DEFAULT_CLASS_GENUS_LIMIT, Conventions::FROZEN)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("atlas serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Classes of all rows, decoded back into the ring.
    pub fn classes(&self) -> Result<Vec<Option<TautClass>>, AtlasError> {
        self.rows
            .iter()
            .map(|r| {
                r.class_terms
                    .as_ref()
                    .map(|t| class_from_terms(self.g, t))
                    .transpose()
            })
            .collect()
    }

    pub fn to_markdown(&self) -> Result<String, AtlasError> {
        let classes = self.classes()?;
        let mut out = format!("## Ekedahl-Oort strata, g = {}\n\n", self.g);
        out.push_str("| μ | ν | w_μ | ℓ | word | codim | class |\n");
        out.push_str("|---|---|---|---|---|---|---|\n");
        for (r, class) in self.rows.iter().zip(classes) {
            let word = if r.word.is_empty() {
                "1".to_string()
            } else {
                r.word.iter().map(|i| format!("s{i}")).collect()
            };
            let class = class.map_or_else(|| "n/a".to_string(), |c| c.to_string());
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                brace_list(&r.mu, ","),
                brace_list(&r.nu, ", "),
                r.weyl_bracket,
                r.length,
                word,
                r.codim,
                class
            ));
        }
        out.push_str(&format!(
            "\nconventions: {}\n",
            self.metadata.conventions.description
        ));
        Ok(out)
    }
}

fn brace_list(v: &[usize], sep: &str) -> String {
    if v.is_empty() {
        return "∅".into();
    }
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(sep))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_coefficients_round_trip() {
        let c = PPoly::from_ints(&[-1, 0, 3]).scale(&crate::arith::rat(1, 24));
        let w = WireCoeff::from_poly(&c);
        assert_eq!(
            w.p_coeffs,
            vec![
                ("0".to_string(), "-1/24".to_string()),
                ("2".into(), "1/8".into())
            ]
        );
        assert_eq!(w.to_poly().unwrap(), c);
        let bad = WireCoeff {
            p_coeffs: vec![("x".into(), "1/1".into())],
        };
        assert!(bad.to_poly().is_err());
    }

    #[test]
    fn genus_one_atlas() {
        let doc = AtlasDocument::default_for(1).unwrap();
        assert_eq!(doc.rows.len(), 2);
        assert_eq!(doc.rows[0].weyl_bracket, "[2,1]");
        let back = AtlasDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(
            back.classes().unwrap()[1].as_ref().unwrap().to_string(),
            "(p-1)*l1"
        );
    }

    #[test]
    fn limits() {
        assert_eq!(
            AtlasDocument::default_for(7),
            Err(AtlasError::TooLarge { g: 7, limit: 6 })
        );
        let doc = AtlasDocument::build(2, 1, Conventions::FROZEN).unwrap();
        assert!(doc.rows.iter().all(|r| r.class_terms.is_none()));
        assert!(doc.to_markdown().unwrap().contains("n/a"));
    }
}
