/// Tallies of the arithmetic performed by a transform stage.
///
/// Scale factors (`1/n` applied to an average) are tracked apart from
/// general multiplications so the multiplierless claim stays checkable:
/// a run is additions-only when `nontrivial_mults == 0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    /// Data-dependent real multiplications that are not scale factors.
    pub nontrivial_mults: u64,
    /// Multiplications by -1, 0 or 1 (sign changes and omissions).
    pub trivial_mults: u64,
    /// Additions and subtractions.
    pub adds: u64,
    /// Multiplications by a `1/n` scale factor.
    pub scale_mults: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, count: u64) {
        self.adds += count;
    }

    pub fn trivial(&mut self, count: u64) {
        self.trivial_mults += count;
    }

    pub fn scale(&mut self, count: u64) {
        self.scale_mults += count;
    }

    pub fn nontrivial(&mut self, count: u64) {
        self.nontrivial_mults += count;
    }

    /// Merge counts accumulated by an independent task.
    pub fn merge(&mut self, other: &OpCounter) {
        self.nontrivial_mults += other.nontrivial_mults;
        self.trivial_mults += other.trivial_mults;
        self.adds += other.adds;
        self.scale_mults += other.scale_mults;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_is_componentwise() {
        let mut a = OpCounter::new();
        a.add(3);
        a.scale(1);
        let mut b = OpCounter::new();
        b.add(2);
        b.trivial(5);
        a.merge(&b);
        assert_eq!(
            a,
            OpCounter {
                nontrivial_mults: 0,
                trivial_mults: 5,
                adds: 5,
                scale_mults: 1
            }
        );
    }
}
