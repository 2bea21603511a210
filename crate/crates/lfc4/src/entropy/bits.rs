//! Bit-level I/O. Bits pack MSB-first within bytes.

use crate::{Error, Result};

#[derive(Debug, Default)]
pub struct BitWriter {
    bytes: Vec<u8>,
    cur: u8,
    filled: u8,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_bit(&mut self, bit: bool) {
        self.cur = (self.cur << 1) | bit as u8;
        self.filled += 1;
        if self.filled == 8 {
            self.bytes.push(self.cur);
            self.cur = 0;
            self.filled = 0;
        }
    }

    /// Writes the low `count` bits of `value`, most significant first.
    pub fn push_bits(&mut self, value: u64, count: u8) {
        debug_assert!(count <= 64);
        for i in (0..count).rev() {
            self.push_bit((value >> i) & 1 == 1);
        }
    }

    /// Pads the final partial byte with zeros and returns (bytes, bit count).
    pub fn finish(mut self) -> (Vec<u8>, u64) {
        let bits = self.bytes.len() as u64 * 8 + self.filled as u64;
        if self.filled > 0 {
            self.bytes.push(self.cur << (8 - self.filled));
        }
        (self.bytes, bits)
    }
}

#[derive(Debug)]
pub struct BitReader<'a> {
    bytes: &'a [u8],
    len_bits: u64,
    pos: u64,
}

impl<'a> BitReader<'a> {
    pub fn new(bytes: &'a [u8], len_bits: u64) -> Result<Self> {
        if len_bits.div_ceil(8) > bytes.len() as u64 {
            return Err(Error::Container(format!(
                "payload advertises {len_bits} bits but holds {} bytes",
                bytes.len()
            )));
        }
        Ok(Self {
            bytes,
            len_bits,
            pos: 0,
        })
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        if self.pos >= self.len_bits {
            return Err(Error::Container("truncated payload".into()));
        }
        let byte = self.bytes[(self.pos / 8) as usize];
        let bit = (byte >> (7 - (self.pos % 8))) & 1;
        self.pos += 1;
        Ok(bit == 1)
    }

    pub fn read_bits(&mut self, count: u8) -> Result<u64> {
        debug_assert!(count <= 64);
        let mut out = 0u64;
        for _ in 0..count {
            out = (out << 1) | self.read_bit()? as u64;
        }
        Ok(out)
    }

    /// Bits not yet consumed.
    pub fn remaining(&self) -> u64 {
        self.len_bits - self.pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_mixed_widths() {
        let mut w = BitWriter::new();
        w.push_bits(0b101, 3);
        w.push_bits(0xDEAD, 16);
        w.push_bits(1, 1);
        w.push_bits(0, 5);
        let (bytes, bits) = w.finish();
        assert_eq!(bits, 25);
        let mut r = BitReader::new(&bytes, bits).unwrap();
        assert_eq!(r.read_bits(3).unwrap(), 0b101);
        assert_eq!(r.read_bits(16).unwrap(), 0xDEAD);
        assert_eq!(r.read_bits(1).unwrap(), 1);
        assert_eq!(r.read_bits(5).unwrap(), 0);
        assert!(r.read_bit().is_err());
    }

    #[test]
    fn msb_first_packing() {
        let mut w = BitWriter::new();
        w.push_bits(0b1, 1);
        w.push_bits(0b0000000, 7);
        let (bytes, _) = w.finish();
        assert_eq!(bytes, vec![0b1000_0000]);
    }

    #[test]
    fn rejects_short_buffer() {
        assert!(BitReader::new(&[0u8], 9).is_err());
    }
}
