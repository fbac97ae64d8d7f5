use thiserror::Error;

use super::DIRECTION_COUNT;

/// Bit index of the foreground-coverage flag.
pub const COVERAGE_BIT_INDEX: u32 = 62;

const DIR_MASK: u64 = (1u64 << COVERAGE_BIT_INDEX) - 1;
const COVERAGE_MASK: u64 = 1u64 << COVERAGE_BIT_INDEX;
const RESERVED_MASK: u64 = 1u64 << 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordFormatError {
    #[error("occlusion word {0:#018x} has reserved bit 63 set")]
    ReservedBitSet(u64),
}

/// One pixel of an occlusion map: bit i (0..=61) records whether the ray in
/// direction i hits the mesh, bit 62 records foreground coverage, bit 63 is
/// reserved and always clear.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OcclusionWord(u64);

impl OcclusionWord {
    pub const ZERO: OcclusionWord = OcclusionWord(0);

    pub fn pack(bits: &[bool; DIRECTION_COUNT], covered: bool) -> OcclusionWord {
        let mut word = 0u64;
        for (i, &bit) in bits.iter().enumerate() {
            word |= (bit as u64) << i;
        }
        word |= (covered as u64) << COVERAGE_BIT_INDEX;
        OcclusionWord(word)
    }

    pub fn unpack(self) -> ([bool; DIRECTION_COUNT], bool) {
        let mut bits = [false; DIRECTION_COUNT];
        for (i, bit) in bits.iter_mut().enumerate() {
            *bit = self.0 >> i & 1 == 1;
        }
        (bits, self.covered())
    }

    pub fn from_raw(raw: u64) -> Result<OcclusionWord, WordFormatError> {
        if raw & RESERVED_MASK != 0 {
            return Err(WordFormatError::ReservedBitSet(raw));
        }
        Ok(OcclusionWord(raw))
    }

    pub fn raw(self) -> u64 {
        self.0
    }

    pub fn direction_bit(self, index: usize) -> bool {
        debug_assert!(index < DIRECTION_COUNT);
        self.0 >> index & 1 == 1
    }

    pub fn covered(self) -> bool {
        self.0 & COVERAGE_MASK != 0
    }

    /// Number of set direction bits (coverage excluded).
    pub fn direction_popcount(self) -> u32 {
        (self.0 & DIR_MASK).count_ones()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_clear_uncovered_is_zero() {
        let w = OcclusionWord::pack(&[false; 62], false);
        assert_eq!(w.raw(), 0);
        assert!(!w.covered());
        assert_eq!(w.direction_popcount(), 0);
    }

    #[test]
    fn all_clear_covered_is_two_pow_62() {
        let w = OcclusionWord::pack(&[false; 62], true);
        assert_eq!(w.raw(), 1u64 << 62);
        assert!(w.covered());
        assert_eq!(w.direction_popcount(), 0);
    }

    #[test]
    fn bit_layout_is_low_to_high() {
        let mut bits = [false; 62];
        bits[0] = true;
        bits[61] = true;
        let w = OcclusionWord::pack(&bits, true);
        assert_eq!(w.raw(), 1 | (1u64 << 61) | (1u64 << 62));
        assert!(w.direction_bit(0) && w.direction_bit(61) && !w.direction_bit(1));
        assert_eq!(w.direction_popcount(), 2);
    }

    #[test]
    fn unpack_of_pack_is_identity() {
        let mut bits = [false; 62];
        for i in (0..62).step_by(3) {
            bits[i] = true;
        }
        for covered in [false, true] {
            let (b, c) = OcclusionWord::pack(&bits, covered).unpack();
            assert_eq!(b, bits);
            assert_eq!(c, covered);
        }
    }

    #[test]
    fn reserved_bit_is_rejected() {
        assert_eq!(
            OcclusionWord::from_raw(1u64 << 63),
            Err(WordFormatError::ReservedBitSet(1u64 << 63))
        );
        assert!(OcclusionWord::from_raw((1u64 << 63) - 1).is_ok());
    }
}
