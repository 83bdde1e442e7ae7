//! Weyl group of type `C_g` and the three encodings of Ekedahl-Oort strata:
//! admissible partitions, final types, and Weyl group elements.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("genus must be positive")]
    ZeroGenus,
    #[error("final type {0:?} is not admissible")]
    BadFinalType(Vec<usize>),
    #[error("partition {0:?} is not strictly decreasing with parts in 1..={1}")]
    BadPartition(Vec<usize>, usize),
    #[error("{0:?} is not a permutation of 1..={1}")]
    NotPermutation(Vec<usize>, usize),
    #[error("permutation {0:?} is not symmetric")]
    NotSymmetric(Vec<usize>),
    #[error("generator s_{0} does not exist in genus {1}")]
    BadGenerator(usize, usize),
    #[error("p-rank {f} must be below the genus {g}")]
    BadPRank { f: usize, g: usize },
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
}

/// Final type `nu: {1..g} -> {0..g}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinalType {
    g: usize,
    nu: Vec<usize>,
}

impl FinalType {
    /// `values[i - 1] = nu(i)`; requires `nu(1) <= 1` and
    /// `nu(i) <= nu(i+1) <= nu(i) + 1`.
    pub fn new(values: Vec<usize>) -> Result<Self, WeylError> {
        if values.is_empty() {
            return Err(WeylError::ZeroGenus);
        }
        let mut prev = 0;
        for &v in &values {
            if v < prev || v > prev + 1 {
                return Err(WeylError::BadFinalType(values));
            }
            prev = v;
        }
        Ok(Self {
            g: values.len(),
            nu: values,
        })
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn values(&self) -> &[usize] {
        &self.nu
    }

    /// `nu(i)` for `0 <= i <= 2g`, using `nu(0) = 0` and
    /// `nu(2g - i) = nu(i) - i + g`.
    pub fn at(&self, i: usize) -> usize {
        assert!(i <= 2 * self.g, "index {i} outside 0..=2g");
        match i {
            0 => 0,
            i if i <= self.g => self.nu[i - 1],
            i => {
                let j = 2 * self.g - i;
                self.at(j) + self.g - j
            }
        }
    }

    /// Length of the initial run on which `nu(i) = i`, which is the
    /// `p`-rank of the stratum.
    pub fn p_rank(&self) -> usize {
        self.nu
            .iter()
            .enumerate()
            .take_while(|(i, &v)| v == i + 1)
            .count()
    }
}

impl fmt::Display for FinalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nu.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Strictly decreasing partition with parts in `1..=g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissiblePartition {
    g: usize,
    parts: Vec<usize>,
}

impl AdmissiblePartition {
    pub fn new(g: usize, parts: Vec<usize>) -> Result<Self, WeylError> {
        if g == 0 {
            return Err(WeylError::ZeroGenus);
        }
        let ok =
            parts.iter().all(|&m| (1..=g).contains(&m)) && parts.windows(2).all(|w| w[0] > w[1]);
        if !ok {
            return Err(WeylError::BadPartition(parts, g));
        }
        Ok(Self { g, parts })
    }

    pub fn empty(g: usize) -> Self {
        Self::new(g, Vec::new()).expect("positive genus")
    }

    /// `{g, g-1, ..., 1}`, the superspecial stratum.
    pub fn full(g: usize) -> Self {
        Self::new(g, (1..=g).rev().collect()).expect("positive genus")
    }

    /// The partition whose parts are the elements of the bitmask.
    pub fn from_bits(g: usize, bits: u32) -> Result<Self, WeylError> {
        let parts = (1..=g)
            .rev()
            .filter(|&i| bits & (1 << (i - 1)) != 0)
            .collect();
        Self::new(g, parts)
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn area(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The complementary diagram `{g, ..., 1} - mu`, as the set of rows not
    /// in `mu`.
    pub fn complement(&self) -> Self {
        let parts = (1..=self.g)
            .rev()
            .filter(|i| !self.parts.contains(i))
            .collect();
        Self { g: self.g, parts }
    }

    /// Componentwise `mu_i >= mu'_i` (missing parts count as zero).
    pub fn dominates(&self, other: &Self) -> bool {
        let n = self.parts.len().max(other.parts.len());
        (0..n).all(|i| {
            self.parts.get(i).copied().unwrap_or(0) >= other.parts.get(i).copied().unwrap_or(0)
        })
    }

    /// Total order used for listings: by area, then lexicographically on the
    /// parts.
    pub fn listing_cmp(&self, other: &Self) -> Ordering {
        self.area()
            .cmp(&other.area())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for AdmissiblePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Element of `W_g`: a permutation of `1..=2g` with `w(i) + w(2g+1-i) = 2g+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    g: usize,
    perm: Vec<usize>,
}

impl WeylElt {
    pub fn new(perm: Vec<usize>) -> Result<Self, WeylError> {
        let n = perm.len();
        if n == 0 || n % 2 == 1 {
            return Err(WeylError::NotPermutation(perm, n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &perm {
            if v == 0 || v > n || seen[v] {
                return Err(WeylError::NotPermutation(perm, n));
            }
            seen[v] = true;
        }
        if (0..n).any(|i| perm[i] + perm[n - 1 - i] != n + 1) {
            return Err(WeylError::NotSymmetric(perm));
        }
        Ok(Self { g: n / 2, perm })
    }

    pub fn identity(g: usize) -> Self {
        Self {
            g,
            perm: (1..=2 * g).collect(),
        }
    }

    /// `s_i = (i, i+1)(2g-i, 2g+1-i)` for `i < g`, and `s_g = (g, g+1)`.
    pub fn generator(g: usize, i: usize) -> Result<Self, WeylError> {
        if i == 0 || i > g {
            return Err(WeylError::BadGenerator(i, g));
        }
        let mut perm: Vec<usize> = (1..=2 * g).collect();
        perm.swap(i - 1, i);
        if i < g {
            perm.swap(2 * g - i - 1, 2 * g - i);
        }
        Ok(Self { g, perm })
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `w(i)` for `1 <= i <= 2g`.
    pub fn at(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, WeylError> {
        if self.g != other.g {
            return Err(WeylError::GenusMismatch(self.g, other.g));
        }
        Ok(Self {
            g: self.g,
            perm: other.perm.iter().map(|&v| self.perm[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; 2 * self.g];
        for (i, &v) in self.perm.iter().enumerate() {
            perm[v - 1] = i + 1;
        }
        Self { g: self.g, perm }
    }

    /// `#{i<j<=g : w(i) > w(j)} + #{i<=j<=g : w(i) + w(j) > 2g+1}`.
    pub fn length(&self) -> usize {
        self.count_pairs(|a, b| a > b, |s, n| s > n)
    }

    /// `#{i<j<=g : w(i) < w(j)} + #{i<=j<=g : w(i) + w(j) < 2g+1}`, the
    /// codimension in the flag space of dimension `g^2`.
    pub fn codim(&self) -> usize {
        self.count_pairs(|a, b| a < b, |s, n| s < n)
    }

    fn count_pairs(
        &self,
        inversion: impl Fn(usize, usize) -> bool,
        reflection: impl Fn(usize, usize) -> bool,
    ) -> usize {
        let g = self.g;
        let w = &self.perm[..g];
        let mut count = 0;
        for i in 0..g {
            for j in i..g {
                if j > i && inversion(w[i], w[j]) {
                    count += 1;
                }
                if reflection(w[i] + w[j], 2 * g + 1) {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `mu_j = #{1 <= i <= g : nu(i) <= i - j}`, zero parts dropped.
pub fn nu_to_mu(f: &FinalType) -> AdmissiblePartition {
    let g = f.g;
    let parts = (1..=g)
        .map(|j| (1..=g).filter(|&i| f.nu[i - 1] + j <= i).count())
        .filter(|&m| m > 0)
        .collect();
    AdmissiblePartition::new(g, parts).expect("final types map to admissible partitions")
}

/// Inverse of [`nu_to_mu`]: column `i` of the diagram has height
/// `#{j : mu_j >= g + 1 - i}` and `nu(i) = i - height`.
pub fn mu_to_nu(m: &AdmissiblePartition) -> FinalType {
    let g = m.g;
    let nu = (1..=g)
        .map(|i| i - m.parts.iter().filter(|&&mj| mj + i > g).count())
        .collect();
    FinalType::new(nu).expect("admissible partitions map to final types")
}

/// `w_mu`: with `S = {i : nu(i) = nu(i-1)}`, the positions outside `S`
/// receive `g+1, g+2, ...` and the positions in `S` receive `1, 2, ...`,
/// both in increasing order; the second half follows by symmetry.
pub fn mu_to_weyl(m: &AdmissiblePartition) -> WeylElt {
    let f = mu_to_nu(m);
    let g = m.g;
    let mut perm = vec![0; 2 * g];
    let (mut low, mut high) = (0, g);
    for i in 1..=g {
        let v = if f.at(i) == f.at(i - 1) {
            low += 1;
            low
        } else {
            high += 1;
            high
        };
        perm[i - 1] = v;
        perm[2 * g - i] = 2 * g + 1 - v;
    }
    WeylElt::new(perm).expect("construction is symmetric")
}

/// Word read off by stripping the complementary diagram layer by layer from
/// the top, each layer left to right. Column `i` of the complement has
/// height `nu(i)`.
pub fn reduced_word(m: &AdmissiblePartition) -> Vec<usize> {
    let f = mu_to_nu(m);
    let top = f.nu.iter().copied().max().unwrap_or(0);
    let mut word = Vec::new();
    for layer in (1..=top).rev() {
        word.extend((1..=m.g).filter(|&i| f.nu[i - 1] >= layer));
    }
    word
}

/// `s_{a_l} ∘ ... ∘ s_{a_1}` for the word `a_1 ... a_l`, which is the
/// convention under which [`reduced_word`] evaluates to [`mu_to_weyl`].
pub fn evaluate_word(g: usize, word: &[usize]) -> Result<WeylElt, WeylError> {
    let mut w = WeylElt::identity(g);
    for &a in word {
        w = WeylElt::generator(g, a)?.compose(&w)?;
    }
    Ok(w)
}

/// Every element of `W_g` (all `2^g g!` signed permutations).
pub fn all_elements(g: usize) -> Vec<WeylElt> {
    fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut base = Vec::new();
    perms(&mut (1..=g).collect(), &mut Vec::new(), &mut base);
    let mut out = Vec::with_capacity(base.len() << g);
    for pi in &base {
        for signs in 0u32..1 << g {
            let mut perm = vec![0; 2 * g];
            for i in 0..g {
                let v = if signs & (1 << i) != 0 {
                    2 * g + 1 - pi[i]
                } else {
                    pi[i]
                };
                perm[i] = v;
                perm[2 * g - 1 - i] = 2 * g + 1 - v;
            }
            out.push(WeylElt::new(perm).expect("signed permutations are symmetric"));
        }
    }
    out
}

/// One stratum in all encodings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub mu: AdmissiblePartition,
    pub nu: FinalType,
    pub weyl: WeylElt,
    pub word: Vec<usize>,
    pub length: usize,
    /// Codimension in the flag space, `g^2 - length`.
    pub flag_codim: usize,
    /// Codimension in the moduli space, `g(g+1)/2 - length`, which equals
    /// the area of `mu`.
    pub codim: usize,
}

impl Stratum {
    pub fn of(mu: AdmissiblePartition) -> Self {
        let g = mu.g;
        let weyl = mu_to_weyl(&mu);
        let length = weyl.length();
        Self {
            nu: mu_to_nu(&mu),
            word: reduced_word(&mu),
            flag_codim: weyl.codim(),
            codim: g * (g + 1) / 2 - length,
            length,
            weyl,
            mu,
        }
    }
}

/// All `2^g` strata, ordered by codimension and then by the parts of `mu`.
pub fn enumerate_strata(g: usize) -> Result<Vec<Stratum>, WeylError> {
    if g == 0 {
        return Err(WeylError::ZeroGenus);
    }
    let mut mus: Vec<AdmissiblePartition> = (0u32..1 << g)
        .map(|b| AdmissiblePartition::from_bits(g, b).expect("subsets are admissible"))
        .collect();
    mus.sort_by(|a, b| a.listing_cmp(b));
    Ok(mus.into_iter().map(Stratum::of).collect())
}

/// Final type of a generic abelian variety with `p`-rank `f` and
/// `a`-number one: `nu(i) = i` for `i <= f` and `nu(i) = i - 1` after.
pub fn final_type_example_prank(g: usize, f: usize) -> Result<FinalType, WeylError> {
    if f >= g {
        return Err(WeylError::BadPRank { f, g });
    }
    FinalType::new((1..=g).map(|i| if i <= f { i } else { i - 1 }).collect())
}

/// `{g, g-2, g-4, ...}`, the stratum containing the generic hyperelliptic
/// curve in characteristic 2.
pub fn hyperelliptic_partition(g: usize) -> Result<AdmissiblePartition, WeylError> {
    AdmissiblePartition::new(g, (1..=g).rev().step_by(2).collect())
}
