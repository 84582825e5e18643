//! Line-oriented truth-table files.
//!
//! ```text
//! n=3
//! 96
//! ```
//!
//! The second line is hexadecimal, little-endian over the table: character
//! `i` carries entries `4i..4i+3`, entry `4i` in the nibble's least
//! significant bit. Tables shorter than a nibble leave the high bits zero.

use std::fmt::Write as _;
use std::path::Path;

use crate::{Error, Result};

use super::TruthTable;

impl TruthTable {
    pub fn to_hex(&self) -> String {
        self.bits()
            .chunks(4)
            .map(|nibble| {
                let v = nibble
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &b)| acc | (b as u32) << j);
                char::from_digit(v, 16).expect("nibble")
            })
            .collect()
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        super::check_variable_count(n)?;
        let len = 1usize << n;
        let chars = len.div_ceil(4);
        let hex = hex.trim();
        if hex.len() != chars {
            return Err(Error::Parse(format!(
                "expected {chars} hex digits for n={n}, got {}",
                hex.len()
            )));
        }
        let mut bits = Vec::with_capacity(chars * 4);
        for c in hex.chars() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?}")))?;
            bits.extend((0..4).map(|j| v >> j & 1 == 1));
        }
        if bits[len..].iter().any(|&b| b) {
            return Err(Error::Parse("padding bits must be zero".into()));
        }
        bits.truncate(len);
        Self::from_bits(n, bits)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n={}", self.n()).unwrap();
        writeln!(out, "{}", self.to_hex()).unwrap();
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty truth-table file".into()))?;
        let n = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}, expected n=<int>")))?;
        let body = lines
            .next()
            .ok_or_else(|| Error::Parse("missing table line".into()))?;
        if lines.next().is_some() {
            return Err(Error::Parse("trailing content after table line".into()));
        }
        Self::from_hex(n, body)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse_text(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::{make_linear, random_function};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hex_layout_is_little_endian() {
        // x1 on three variables: 0,1,0,1,0,1,0,1 -> nibbles 0b1010 twice
        assert_eq!(make_linear(3, 1).unwrap().to_hex(), "aa");
        let f = TruthTable::from_bits(3, vec![true, false, false, false, false, false, false, true]).unwrap();
        assert_eq!(f.to_hex(), "18");
        assert_eq!(make_linear(1, 1).unwrap().to_hex(), "2");
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(TruthTable::parse_text("").is_err());
        assert!(TruthTable::parse_text("m=3\naa\n").is_err());
        assert!(TruthTable::parse_text("n=3\naaa\n").is_err());
        assert!(TruthTable::parse_text("n=3\nzz\n").is_err());
        assert!(TruthTable::parse_text("n=1\n4\n").is_err());
        assert!(TruthTable::parse_text("n=3\naa\nff\n").is_err());
        assert!(TruthTable::parse_text("n=30\naa\n").is_err());
    }

    #[test]
    fn text_round_trip() {
        let text = "n=3\n18\n";
        assert_eq!(TruthTable::parse_text(text).unwrap().to_text(), text);
        assert_eq!(TruthTable::parse_text("n=4\nF0F0").unwrap().to_hex(), "f0f0");
    }

    proptest! {
        #[test]
        fn hex_round_trip(seed in any::<u64>(), n in 1usize..=12) {
            let f = random_function(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            prop_assert_eq!(TruthTable::parse_text(&f.to_text()).unwrap(), f);
        }
    }
}
