use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{check_dim, mask};

/// Truth table of a function F2^n -> {0, 1}, bit-packed.
///
/// Bit `x` of the table (word `x / 64`, bit `x % 64`) is `f(x)` under the
/// integer encoding of points with `x_1` as the least significant bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

impl BooleanFunction {
    pub fn zero(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn ones(n: usize) -> Result<Self> {
        let mut f = Self::zero(n)?;
        if n < 6 {
            f.words[0] = (1u64 << (1 << n)) - 1;
        } else {
            f.words.fill(u64::MAX);
        }
        Ok(f)
    }

    pub fn from_fn(n: usize, mut value: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut f = Self::zero(n)?;
        for x in 0..1u32 << n {
            if value(x) {
                f.set(x);
            }
        }
        Ok(f)
    }

    pub fn from_support(n: usize, support: &[u32]) -> Result<Self> {
        let mut f = Self::zero(n)?;
        for &x in support {
            if x & !mask(n) != 0 {
                return Err(Error::OutOfRange { value: x.into(), n });
            }
            f.set(x);
        }
        Ok(f)
    }

    /// A function of at most 6 variables from its packed table.
    pub fn from_table_word(n: usize, table: u64) -> Result<Self> {
        if n > 6 {
            return Err(Error::InvalidParameter(format!(
                "a single table word holds at most 6 variables, got {n}"
            )));
        }
        if n < 6 && table >> (1 << n) != 0 {
            return Err(Error::OutOfRange { value: table, n: 1 << n });
        }
        Ok(Self {
            n,
            words: vec![table],
        })
    }

    /// Parses a table given as hex bytes, byte 0 holding indices 0..8 with
    /// index 0 in its least significant bit.
    pub fn from_table_hex(n: usize, text: &str) -> Result<Self> {
        let mut f = Self::zero(n)?;
        let bytes = hex::decode(text.trim())
            .map_err(|e| Error::InvalidParameter(format!("bad truth table hex: {e}")))?;
        let expected = ((1usize << n) / 8).max(1);
        if bytes.len() != expected {
            return Err(Error::InvalidParameter(format!(
                "truth table for n = {n} needs {expected} bytes, got {}",
                bytes.len()
            )));
        }
        if n < 3 && bytes[0] >> (1 << n) != 0 {
            return Err(Error::InvalidParameter(
                "truth table has bits beyond 2^n".into(),
            ));
        }
        for (i, &b) in bytes.iter().enumerate() {
            f.words[i / 8] |= u64::from(b) << (8 * (i % 8));
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, x: u32) -> bool {
        self.words[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, x: u32) {
        self.words[(x >> 6) as usize] |= 1 << (x & 63);
    }

    /// `|supp(f)|`.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_one(&self) -> bool {
        self.weight() == self.len() as u64
    }

    /// Support points in ascending order.
    pub fn support(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push((i as u32) << 6 | w.trailing_zeros());
                w &= w - 1;
            }
        }
        out
    }

    pub fn table_hex(&self) -> String {
        let nbytes = (self.len() / 8).max(1);
        let bytes: Vec<u8> = (0..nbytes)
            .map(|i| (self.words[i / 8] >> (8 * (i % 8))) as u8)
            .collect();
        hex::encode(bytes)
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, table={})", self.n, self.table_hex())
    }
}
