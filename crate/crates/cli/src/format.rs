//! Sequence file formats.
//!
//! * bits: ASCII `0`/`1`, no separators, optional trailing newline.
//! * packed: a 16-byte header followed by the symbols, 8 per byte, most
//!   significant bit first, the final partial byte zero-padded.
//!
//! Packed header layout:
//!
//! | offset | size | field                          |
//! |--------|------|--------------------------------|
//! | 0      | 4    | magic `FDBS`                   |
//! | 4      | 1    | version (1)                    |
//! | 5      | 1    | order `n`                      |
//! | 6      | 8    | symbol count, little-endian    |
//! | 14     | 2    | reserved, zero                 |

use std::fmt;
use std::io::{self, Write};

pub const MAGIC: [u8; 4] = *b"FDBS";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceFormat {
    Bits,
    Packed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    BadSymbol { offset: usize, byte: u8 },
    Truncated { expected: u64, available: u64 },
    UnsupportedVersion(u8),
    NonzeroPadding,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::BadSymbol { offset, byte } => {
                write!(f, "byte {byte:#04x} at offset {offset} is not '0' or '1'")
            }
            FormatError::Truncated { expected, available } => {
                write!(f, "packed payload holds {available} symbols, header declares {expected}")
            }
            FormatError::UnsupportedVersion(v) => write!(f, "unsupported packed version {v}"),
            FormatError::NonzeroPadding => f.write_str("nonzero padding in packed header or tail"),
        }
    }
}

impl std::error::Error for FormatError {}

/// Writes ASCII symbols followed by a newline; returns the symbol count.
pub fn write_bits<W: Write, I: IntoIterator<Item = u8>>(out: &mut W, symbols: I) -> io::Result<u64> {
    let mut count = 0u64;
    let mut buf = Vec::with_capacity(1 << 16);
    for s in symbols {
        buf.push(b'0' + s);
        count += 1;
        if buf.len() == buf.capacity() {
            out.write_all(&buf)?;
            buf.clear();
        }
    }
    buf.push(b'\n');
    out.write_all(&buf)?;
    Ok(count)
}

pub fn packed_header(order: u8, count: u64) -> [u8; HEADER_LEN] {
    let mut h = [0u8; HEADER_LEN];
    h[..4].copy_from_slice(&MAGIC);
    h[4] = VERSION;
    h[5] = order;
    h[6..14].copy_from_slice(&count.to_le_bytes());
    h
}

/// Writes the header and packed payload; `count` must equal the number of
/// symbols produced by `symbols`.
pub fn write_packed<W: Write, I: IntoIterator<Item = u8>>(
    out: &mut W,
    order: u8,
    count: u64,
    symbols: I,
) -> io::Result<u64> {
    out.write_all(&packed_header(order, count))?;
    let mut buf = Vec::with_capacity(1 << 16);
    let (mut byte, mut filled, mut written) = (0u8, 0u32, 0u64);
    for s in symbols {
        byte = (byte << 1) | (s & 1);
        filled += 1;
        written += 1;
        if filled == 8 {
            buf.push(byte);
            byte = 0;
            filled = 0;
            if buf.len() == buf.capacity() {
                out.write_all(&buf)?;
                buf.clear();
            }
        }
    }
    if filled > 0 {
        buf.push(byte << (8 - filled));
    }
    out.write_all(&buf)?;
    if written != count {
        return Err(io::Error::new(
            io::ErrorKind::InvalidData,
            format!("header declares {count} symbols, stream produced {written}"),
        ));
    }
    Ok(written)
}

/// A decoded sequence file. `order` is only known for packed files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub order: Option<u8>,
    pub symbols: Vec<u8>,
}

/// Decodes either format; packed files are recognized by their magic.
pub fn decode(bytes: &[u8]) -> Result<Decoded, FormatError> {
    if bytes.len() >= HEADER_LEN && bytes[..4] == MAGIC {
        return decode_packed(bytes);
    }
    let body = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let symbols = body
        .iter()
        .enumerate()
        .map(|(offset, &b)| match b {
            b'0' => Ok(0),
            b'1' => Ok(1),
            byte => Err(FormatError::BadSymbol { offset, byte }),
        })
        .collect::<Result<Vec<u8>, _>>()?;
    Ok(Decoded { order: None, symbols })
}

fn decode_packed(bytes: &[u8]) -> Result<Decoded, FormatError> {
    if bytes[4] != VERSION {
        return Err(FormatError::UnsupportedVersion(bytes[4]));
    }
    if bytes[14] != 0 || bytes[15] != 0 {
        return Err(FormatError::NonzeroPadding);
    }
    let order = bytes[5];
    let count = u64::from_le_bytes(bytes[6..14].try_into().expect("8-byte slice"));
    let payload = &bytes[HEADER_LEN..];
    let available = payload.len() as u64 * 8;
    if available < count || payload.len() as u64 != count.div_ceil(8) {
        return Err(FormatError::Truncated { expected: count, available });
    }
    let symbols: Vec<u8> =
        (0..count as usize).map(|i| (payload[i / 8] >> (7 - i % 8)) & 1).collect();
    if count % 8 != 0 {
        let tail = payload[payload.len() - 1] & ((1u8 << (8 - count % 8)) - 1);
        if tail != 0 {
            return Err(FormatError::NonzeroPadding);
        }
    }
    Ok(Decoded { order: Some(order), symbols })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_roundtrip_with_newline() {
        let mut out = Vec::new();
        assert_eq!(write_bits(&mut out, [0, 0, 0, 1, 0, 1, 1, 1]).unwrap(), 8);
        assert_eq!(out, b"00010111\n");
        assert_eq!(decode(&out).unwrap().symbols, [0, 0, 0, 1, 0, 1, 1, 1]);
        assert_eq!(decode(b"0011").unwrap().symbols, [0, 0, 1, 1]);
        assert_eq!(decode(b"0x1"), Err(FormatError::BadSymbol { offset: 1, byte: b'x' }));
    }

    #[test]
    fn packed_layout() {
        let mut out = Vec::new();
        write_packed(&mut out, 2, 4, [0, 0, 1, 1]).unwrap();
        assert_eq!(&out[..4], b"FDBS");
        assert_eq!(out[4], 1);
        assert_eq!(out[5], 2);
        assert_eq!(&out[6..14], &4u64.to_le_bytes());
        assert_eq!(&out[14..16], &[0, 0]);
        assert_eq!(&out[16..], &[0b0011_0000]);
        let d = decode(&out).unwrap();
        assert_eq!(d, Decoded { order: Some(2), symbols: vec![0, 0, 1, 1] });
    }

    #[test]
    fn packed_rejects_corruption() {
        let mut out = Vec::new();
        write_packed(&mut out, 3, 8, [0, 0, 0, 1, 0, 1, 1, 1]).unwrap();
        assert_eq!(out[16], 0b0001_0111);
        let mut bad = out.clone();
        bad[4] = 9;
        assert_eq!(decode(&bad), Err(FormatError::UnsupportedVersion(9)));
        let mut bad = out.clone();
        bad.pop();
        assert!(matches!(decode(&bad), Err(FormatError::Truncated { .. })));
        let mut tail = Vec::new();
        write_packed(&mut tail, 1, 2, [0, 1]).unwrap();
        *tail.last_mut().unwrap() |= 1;
        assert_eq!(decode(&tail), Err(FormatError::NonzeroPadding));
    }

    #[test]
    fn packed_count_mismatch_is_an_error() {
        let mut out = Vec::new();
        assert!(write_packed(&mut out, 2, 5, [0, 0, 1, 1]).is_err());
    }
}
