use std::fmt;

use serde::{Deserialize, Serialize};

use super::RepthyError;
use crate::partitions::{GroupKind, GroupType};

/// Highest weight of an irreducible rational representation of `GL_n` or `Sp_n`.
///
/// `group` is `gl(n)` or `sp(r)` with `n = 2r`; `entries` has `rank` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWeight", into = "RawWeight")]
pub struct DominantWeight {
    group: GroupType,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawWeight {
    group: GroupType,
    entries: Vec<i64>,
}

impl TryFrom<RawWeight> for DominantWeight {
    type Error = RepthyError;
    fn try_from(raw: RawWeight) -> Result<Self, Self::Error> {
        Self::new(raw.group, raw.entries)
    }
}

impl From<DominantWeight> for RawWeight {
    fn from(w: DominantWeight) -> Self {
        RawWeight {
            group: w.group,
            entries: w.entries,
        }
    }
}

impl DominantWeight {
    pub fn new(group: GroupType, entries: Vec<i64>) -> Result<Self, RepthyError> {
        if group.kind == GroupKind::Orthogonal {
            return Err(RepthyError::WrongGroup {
                expected: GroupKind::GeneralLinear,
                got: group.kind,
            });
        }
        if entries.len() != group.rank {
            return Err(RepthyError::WrongLength {
                expected: group.rank,
                got: entries.len(),
            });
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(RepthyError::NotDominant(entries));
        }
        if group.kind == GroupKind::Symplectic && entries.iter().any(|&e| e < 0) {
            return Err(RepthyError::NegativeSymplectic(entries));
        }
        Ok(Self { group, entries })
    }

    pub fn gl(entries: Vec<i64>) -> Result<Self, RepthyError> {
        Self::new(GroupType::gl(entries.len()), entries)
    }

    /// A weight of `Sp_n` with `n = 2 * entries.len()`.
    pub fn sp(entries: Vec<i64>) -> Result<Self, RepthyError> {
        Self::new(GroupType::sp(entries.len()), entries)
    }

    pub fn zero(group: GroupType) -> Self {
        Self {
            group,
            entries: vec![0; group.rank],
        }
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn kind(&self) -> GroupKind {
        self.group.kind
    }

    pub fn rank(&self) -> usize {
        self.group.rank
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `sum |lambda_i|`, the quantity the resource bounds are stated in.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|e| e.unsigned_abs() as usize).sum()
    }

    /// Highest weight of the dual: `(-lambda_n, ..., -lambda_1)` for `GL`; `Sp` is self-dual.
    pub fn dual(&self) -> Self {
        match self.group.kind {
            GroupKind::Symplectic => self.clone(),
            _ => Self {
                group: self.group,
                entries: self.entries.iter().rev().map(|e| -e).collect(),
            },
        }
    }

    /// All dominant `GL_n` weights with `max(lambda_1, 0) + max(-lambda_n, 0) <= bound`.
    pub fn gl_weights_within(n: usize, bound: i64) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        fn rec(n: usize, lo: i64, hi: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if current.len() == n {
                out.push(current.clone());
                return;
            }
            let top = current.last().copied().unwrap_or(hi);
            for v in (lo..=top).rev() {
                current.push(v);
                rec(n, lo, hi, current, out);
                current.pop();
            }
        }
        let mut raw = Vec::new();
        rec(n, -bound, bound, &mut current, &mut raw);
        for entries in raw {
            let first = entries.first().copied().unwrap_or(0).max(0);
            let last = -entries.last().copied().unwrap_or(0).min(0);
            if first + last <= bound {
                out.push(Self::gl(entries).expect("generated dominant"));
            }
        }
        out
    }

    /// All dominant `Sp_2r` weights with `sum lambda_i <= bound`.
    pub fn sp_weights_within(r: usize, bound: i64) -> Vec<Self> {
        Self::gl_weights_within(r, bound)
            .into_iter()
            .filter(|w| w.entries.iter().all(|&e| e >= 0) && w.entries.iter().sum::<i64>() <= bound)
            .map(|w| Self::sp(w.entries).expect("nonnegative dominant"))
            .collect()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.group.kind {
            GroupKind::Symplectic => format!("Sp{}", 2 * self.group.rank),
            _ => format!("GL{}", self.group.rank),
        };
        let body: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{name}({})", body.join(","))
    }
}
