use std::cmp::Ordering;
use std::fmt;

/// Square-free product `prod_{i in S} lambda_i`, stored as a bitmask with
/// bit `i - 1` set for `i in S`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LambdaMonomial(u32);

impl LambdaMonomial {
    pub const EMPTY: Self = Self(0);

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    /// Panics on a repeated or zero index.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u32;
        for &i in indices {
            assert!((1..=32).contains(&i), "lambda index {i} out of range");
            let bit = 1 << (i - 1);
            assert!(bits & bit == 0, "repeated lambda index {i}");
            bits |= bit;
        }
        Self(bits)
    }

    /// `lambda_1 ... lambda_g`.
    pub fn full(g: usize) -> Self {
        Self(((1u64 << g) - 1) as u32)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Cohomological degree in units of `lambda_1`: the sum of the indices.
    pub fn degree(self) -> usize {
        self.indices().iter().sum()
    }

    pub fn with(self, i: usize) -> Self {
        Self(self.0 | (1 << (i - 1)))
    }

    pub fn without(self, i: usize) -> Self {
        Self(self.0 & !(1 << (i - 1)))
    }
}

impl Ord for LambdaMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for LambdaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LambdaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("l{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for LambdaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaMonomial({self})")
    }
}
