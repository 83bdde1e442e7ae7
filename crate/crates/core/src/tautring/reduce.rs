//! Normal forms of arbitrary lambda monomials, memoized per genus.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::{check_genus, top_degree, LambdaMonomial, RingError, RingMode, TautClass, MAX_GENUS};
use crate::arith::{int, PPoly, Rational};

/// Rewrite steps allowed for one reduction before giving up.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

type NormalForm = Arc<Vec<(LambdaMonomial, Rational)>>;
type Exponents = [u8; MAX_GENUS];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReductionStats {
    /// Square rewrites performed (memo hits cost nothing).
    pub steps: usize,
    pub cache_hits: usize,
}

pub(crate) struct TautRing {
    g: usize,
    memo: Mutex<HashMap<u64, NormalForm>>,
}

fn pack(e: &Exponents) -> u64 {
    u64::from_le_bytes(*e)
}

pub(crate) fn ring_for(g: usize) -> Result<Arc<TautRing>, RingError> {
    check_genus(g)?;
    static RINGS: OnceLock<Mutex<HashMap<usize, Arc<TautRing>>>> = OnceLock::new();
    let rings = RINGS.get_or_init(Default::default);
    let mut guard = rings.lock().expect("ring cache poisoned");
    Ok(guard
        .entry(g)
        .or_insert_with(|| {
            Arc::new(TautRing {
                g,
                memo: Mutex::new(HashMap::new()),
            })
        })
        .clone())
}

impl TautRing {
    /// Normal form of `a * b` for square-free `a`, `b`.
    pub(crate) fn product(
        &self,
        a: LambdaMonomial,
        b: LambdaMonomial,
    ) -> Result<NormalForm, RingError> {
        if a.bits() & b.bits() == 0 {
            return Ok(Arc::new(vec![(
                LambdaMonomial::from_bits(a.bits() | b.bits()),
                int(1),
            )]));
        }
        if a.degree() + b.degree() > top_degree(self.g) {
            return Ok(Arc::new(Vec::new()));
        }
        let mut e = [0u8; MAX_GENUS];
        for i in a.indices().into_iter().chain(b.indices()) {
            e[i - 1] += 1;
        }
        let mut stats = ReductionStats::default();
        self.normal_form(e, &mut stats, DEFAULT_STEP_BUDGET)
    }

    fn lookup(&self, key: u64) -> Option<NormalForm> {
        self.memo.lock().expect("memo poisoned").get(&key).cloned()
    }

    fn normal_form(
        &self,
        e: Exponents,
        stats: &mut ReductionStats,
        budget: usize,
    ) -> Result<NormalForm, RingError> {
        let key = pack(&e);
        if let Some(hit) = self.lookup(key) {
            stats.cache_hits += 1;
            return Ok(hit);
        }
        let Some(k) = (1..=self.g).rev().find(|&k| e[k - 1] >= 2) else {
            let mut bits = 0u32;
            for (i, &x) in e.iter().enumerate() {
                if x == 1 {
                    bits |= 1 << i;
                }
            }
            return Ok(Arc::new(vec![(LambdaMonomial::from_bits(bits), int(1))]));
        };
        stats.steps += 1;
        if stats.steps > budget {
            return Err(RingError::StepBudgetExceeded(budget));
        }
        let mut acc: BTreeMap<LambdaMonomial, Rational> = BTreeMap::new();
        for j in 1..=k {
            if k + j > self.g {
                break;
            }
            let mut next = e;
            next[k - 1] -= 2;
            next[k + j - 1] += 1;
            if j < k {
                next[k - j - 1] += 1;
            }
            let c = if j % 2 == 1 { int(2) } else { int(-2) };
            for (m, r) in self.normal_form(next, stats, budget)?.iter() {
                let slot = acc.entry(*m).or_insert_with(Rational::zero);
                *slot += &c * r;
            }
        }
        let nf: NormalForm = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        self.memo
            .lock()
            .expect("memo poisoned")
            .insert(key, nf.clone());
        Ok(nf)
    }
}

/// Reduces `prod lambda_i` over `indices` (repeats allowed) to the
/// square-free basis of the compact ring.
pub fn reduce_monomial(g: usize, indices: &[usize]) -> Result<TautClass, RingError> {
    reduce_monomial_with_budget(g, indices, DEFAULT_STEP_BUDGET).map(|(c, _)| c)
}

pub fn reduce_monomial_with_budget(
    g: usize,
    indices: &[usize],
    budget: usize,
) -> Result<(TautClass, ReductionStats), RingError> {
    check_genus(g)?;
    for &i in indices {
        if i == 0 || i > g {
            return Err(RingError::IndexOutOfRange { index: i, g });
        }
    }
    let mut out = TautClass::zero(g, RingMode::Compact);
    let mut stats = ReductionStats::default();
    // Everything above the top degree vanishes.
    if indices.iter().sum::<usize>() > top_degree(g) {
        return Ok((out, stats));
    }
    let mut e = [0u8; MAX_GENUS];
    for &i in indices {
        e[i - 1] += 1;
    }
    let ring = ring_for(g)?;
    let nf = ring.normal_form(e, &mut stats, budget)?;
    for (m, r) in nf.iter() {
        out.add_term(*m, &PPoly::constant(r.clone()));
    }
    Ok((out, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_validation() {
        assert_eq!(
            reduce_monomial(2, &[3]),
            Err(RingError::IndexOutOfRange { index: 3, g: 2 })
        );
        assert_eq!(reduce_monomial(0, &[]), Err(RingError::GenusOutOfRange(0)));
    }

    #[test]
    fn budget_is_enforced() {
        // A fresh genus keeps the memo from short-circuiting the count.
        let r = reduce_monomial_with_budget(7, &[1; 28], 3);
        assert_eq!(r.unwrap_err(), RingError::StepBudgetExceeded(3));
    }

    #[test]
    fn memo_is_reused() {
        let (a, _) = reduce_monomial_with_budget(4, &[1; 10], DEFAULT_STEP_BUDGET).unwrap();
        let (b, stats) = reduce_monomial_with_budget(4, &[1; 10], DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(a, b);
        assert_eq!(stats.steps, 0);
        assert_eq!(stats.cache_hits, 1);
    }

    #[test]
    fn above_top_degree_is_zero() {
        assert!(reduce_monomial(2, &[1; 4]).unwrap().is_zero());
        assert!(reduce_monomial(1, &[1; 500]).unwrap().is_zero());
    }
}
