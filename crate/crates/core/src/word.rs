use std::fmt;
use std::ops::Deref;

/// An immutable byte string.
///
/// Public APIs address letters with 1-based positions in `1..=len()`; the
/// underlying slice (via `Deref`) is 0-based as usual.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bytes: Box<[u8]>,
}

impl Word {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Self {
            bytes: bytes.into().into_boxed_slice(),
        }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Letter at 1-based position `pos`.
    ///
    /// Panics if `pos` is 0 or greater than `len()`.
    #[inline]
    pub fn at(&self, pos: usize) -> u8 {
        self.bytes[pos - 1]
    }

    /// The factor `w[from..=to]` in 1-based inclusive coordinates.
    pub fn factor(&self, from: usize, to: usize) -> &[u8] {
        &self.bytes[from - 1..to]
    }

    /// Number of distinct letters.
    pub fn alphabet_size(&self) -> usize {
        let mut seen = [false; 256];
        for &b in self.bytes.iter() {
            seen[b as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.bytes
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word::new(s.as_bytes())
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word::new(s)
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word::new(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", String::from_utf8_lossy(&self.bytes))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.bytes))
    }
}
