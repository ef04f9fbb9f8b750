use alloc::boxed::Box;

use super::Generator;
use crate::modmath::Modulus;

const NN: usize = 312;
const MM: usize = 156;
const MATRIX_A: u64 = 0xB502_6F5A_A966_19E9;
const UPPER_MASK: u64 = 0xFFFF_FFFF_8000_0000;
const LOWER_MASK: u64 = 0x7FFF_FFFF;

/// 64-bit Mersenne twister, MT19937-64.
#[derive(Clone)]
pub struct Mt64 {
    mt: Box<[u64; NN]>,
    index: usize,
}

impl core::fmt::Debug for Mt64 {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Mt64")
            .field("index", &self.index)
            .finish_non_exhaustive()
    }
}

impl Mt64 {
    /// Reference default seed.
    pub const DEFAULT_SEED: u64 = 5489;

    /// `init_genrand64`.
    pub fn new(seed: u64) -> Self {
        let mut mt = Box::new([0u64; NN]);
        mt[0] = seed;
        for i in 1..NN {
            mt[i] = 6_364_136_223_846_793_005u64
                .wrapping_mul(mt[i - 1] ^ (mt[i - 1] >> 62))
                .wrapping_add(i as u64);
        }
        Mt64 { mt, index: NN }
    }

    /// `init_by_array64`.
    pub fn from_key(key: &[u64]) -> Self {
        let mut g = Self::new(19_650_218);
        let mt = &mut g.mt;
        let (mut i, mut j) = (1usize, 0usize);
        let mut k = NN.max(key.len());
        while k > 0 {
            mt[i] = (mt[i]
                ^ (mt[i - 1] ^ (mt[i - 1] >> 62)).wrapping_mul(3_935_559_000_370_003_845))
            .wrapping_add(key.get(j).copied().unwrap_or(0))
            .wrapping_add(j as u64);
            i += 1;
            j += 1;
            if i >= NN {
                mt[0] = mt[NN - 1];
                i = 1;
            }
            if j >= key.len() {
                j = 0;
            }
            k -= 1;
        }
        k = NN - 1;
        while k > 0 {
            mt[i] = (mt[i]
                ^ (mt[i - 1] ^ (mt[i - 1] >> 62)).wrapping_mul(2_862_933_555_777_941_757))
            .wrapping_sub(i as u64);
            i += 1;
            if i >= NN {
                mt[0] = mt[NN - 1];
                i = 1;
            }
            k -= 1;
        }
        mt[0] = 1 << 63;
        g
    }

    fn twist(&mut self) {
        let mt = &mut self.mt;
        let mag = |x: u64| if x & 1 == 0 { 0 } else { MATRIX_A };
        for i in 0..NN {
            let x = (mt[i] & UPPER_MASK) | (mt[(i + 1) % NN] & LOWER_MASK);
            mt[i] = mt[(i + MM) % NN] ^ (x >> 1) ^ mag(x);
        }
        self.index = 0;
    }
}

impl Default for Mt64 {
    fn default() -> Self {
        Self::new(Self::DEFAULT_SEED)
    }
}

impl Generator for Mt64 {
    #[inline]
    fn next_word(&mut self) -> u64 {
        if self.index >= NN {
            self.twist();
        }
        let mut x = self.mt[self.index];
        self.index += 1;
        x ^= (x >> 29) & 0x5555_5555_5555_5555;
        x ^= (x << 17) & 0x71D6_7FFF_EDA6_0000;
        x ^= (x << 37) & 0xFFF7_EEE0_0000_0000;
        x ^= x >> 43;
        x
    }

    fn modulus(&self) -> Modulus {
        Modulus::WORD
    }
}
