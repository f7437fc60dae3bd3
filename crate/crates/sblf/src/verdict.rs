//! Three-valued certified answers for bounded searches.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::word::Word;

/// Outcome of a bounded decision procedure. `Equal` and `Distinct` are
/// certified; `Unknown` records the search bound that was exhausted, so
/// a caller can distinguish "no" from "not found yet".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Certified positive answer, optionally with a conjugating witness.
    Equal { witness: Option<Word> },
    /// Certified negative answer.
    Distinct,
    /// Search exhausted without a certificate either way.
    Unknown { bound: u64 },
}

impl Verdict {
    pub fn equal() -> Verdict {
        Verdict::Equal { witness: None }
    }

    pub fn equal_with(witness: Word) -> Verdict {
        Verdict::Equal { witness: Some(witness) }
    }

    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, Verdict::Distinct)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Equal { .. } => "equal",
            Verdict::Distinct => "distinct",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    /// Process exit code convention: 0 positive, 1 negative, 2 unknown.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Equal { .. } => 0,
            Verdict::Distinct => 1,
            Verdict::Unknown { .. } => 2,
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Verdict", 3)?;
        s.serialize_field("status", self.status())?;
        match self {
            Verdict::Unknown { bound } => s.serialize_field("bound", &Some(*bound))?,
            _ => s.serialize_field("bound", &None::<u64>)?,
        }
        match self {
            Verdict::Equal { witness: Some(w) } => {
                s.serialize_field("witness", &Some(w.letters()))?
            }
            _ => s.serialize_field("witness", &None::<Vec<i32>>)?,
        }
        s.end()
    }
}
