//! Partitions and the nilpotent orbits they index in `gl_m`, `sp_2m` and `so_2m`.
//!
//! Matrix realizations use split forms: `sp_2m` preserves the Gram matrix
//! `[[0, I], [-I, 0]]` and `so_2m` preserves `[[0, I], [I, 0]]`. For partitions
//! with parts at most 2 the representatives are written directly in these
//! coordinates; larger parts fall back to an orthogonal sum of Jordan blocks
//! with their own invariant forms (the orbit dimension does not depend on which
//! nondegenerate form is used).
//!
//! Tag convention for very even `so_2m` orbits: `I` is the orbit of the
//! representative whose image is the coordinate subspace `span(e_1..e_m)`;
//! `II` is its conjugate under the swap `e_m <-> f_m`, a reflection in `O \ SO`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::ExactMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition of {got} does not match ambient size {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("partition {partition} violates the parity rule for {ambient}")]
    Parity { ambient: GroupType, partition: Partition },
    #[error("tag {tag:?} is not allowed on {ambient} label {partition}")]
    BadTag {
        ambient: GroupType,
        partition: Partition,
        tag: Option<OrbitTag>,
    },
    #[error("labels live in different ambient algebras ({0} vs {1})")]
    AmbientMismatch(GroupType, GroupType),
    #[error("closure order is only implemented for parts <= 2, got {0}")]
    UnsupportedRegime(Partition),
}

/// Integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    size: usize,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        let size = parts.iter().map(|&p| p as usize).sum();
        Ok(Self { parts, size })
    }

    /// `[2^twos, 1^(total - 2 twos)]`. Panics if `2 * twos > total`.
    pub fn twos_and_ones(twos: usize, total: usize) -> Self {
        assert!(2 * twos <= total, "[2^{twos}] does not fit in {total}");
        let mut parts = vec![2; twos];
        parts.extend(std::iter::repeat_n(1, total - 2 * twos));
        Self::new(parts).expect("well-formed by construction")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.largest();
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition::new(parts).expect("conjugate of a partition is a partition")
    }

    pub fn is_two_bounded(&self) -> bool {
        self.largest() <= 2
    }

    /// All parts even, each with even multiplicity.
    pub fn is_very_even(&self) -> bool {
        self.multiplicities()
            .iter()
            .all(|(&part, &mult)| part % 2 == 0 && mult % 2 == 0)
    }

    fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    fn square_sum_of_transpose(&self) -> usize {
        self.transpose().parts.iter().map(|&c| (c * c) as usize).sum()
    }

    fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // exponent notation: [2^2, 1]
        let mut chunks = Vec::new();
        for (part, mult) in self.multiplicities().into_iter().rev() {
            if mult == 1 {
                chunks.push(part.to_string());
            } else {
                chunks.push(format!("{part}^{mult}"));
            }
        }
        write!(f, "[{}]", chunks.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    GeneralLinear,
    Orthogonal,
    Symplectic,
}

impl GroupKind {
    pub fn short_name(self) -> &'static str {
        match self {
            GroupKind::GeneralLinear => "gl",
            GroupKind::Orthogonal => "o",
            GroupKind::Symplectic => "sp",
        }
    }
}

/// An ambient classical Lie algebra: `gl_m`, `so_2m` or `sp_2m`.
///
/// `rank` is `m` in every case; the matrix size is `m` for `gl` and `2m` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupType {
    pub kind: GroupKind,
    pub rank: usize,
}

impl GroupType {
    pub fn gl(m: usize) -> Self {
        Self { kind: GroupKind::GeneralLinear, rank: m }
    }

    /// `so_{2m}`.
    pub fn so(m: usize) -> Self {
        Self { kind: GroupKind::Orthogonal, rank: m }
    }

    /// `sp_{2m}`.
    pub fn sp(m: usize) -> Self {
        Self { kind: GroupKind::Symplectic, rank: m }
    }

    pub fn matrix_size(&self) -> usize {
        match self.kind {
            GroupKind::GeneralLinear => self.rank,
            _ => 2 * self.rank,
        }
    }

    pub fn algebra_dim(&self) -> usize {
        let m = self.rank;
        match self.kind {
            GroupKind::GeneralLinear => m * m,
            GroupKind::Orthogonal => m * (2 * m - 1),
            GroupKind::Symplectic => m * (2 * m + 1),
        }
    }

    /// Gram matrix of the invariant split form, `None` for `gl`.
    pub fn gram<T: Scalar>(&self) -> Option<Matrix<T>> {
        let m = self.rank;
        let id = Matrix::<T>::identity(m);
        let zero = Matrix::<T>::zeros(m, m);
        match self.kind {
            GroupKind::GeneralLinear => None,
            GroupKind::Orthogonal => Some(Matrix::from_blocks(&zero, &id, &id, &zero)),
            GroupKind::Symplectic => Some(Matrix::from_blocks(&zero, &id, &(-&id), &zero)),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::GeneralLinear => write!(f, "gl_{}", self.rank),
            GroupKind::Orthogonal => write!(f, "so_{}", 2 * self.rank),
            GroupKind::Symplectic => write!(f, "sp_{}", 2 * self.rank),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrbitTag {
    I,
    II,
}

impl OrbitTag {
    pub fn other(self) -> Self {
        match self {
            OrbitTag::I => OrbitTag::II,
            OrbitTag::II => OrbitTag::I,
        }
    }
}

/// A nilpotent orbit: ambient algebra, partition and the `I`/`II` tag for very even `so`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub ambient: GroupType,
    pub partition: Partition,
    pub tag: Option<OrbitTag>,
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.ambient, self.partition)?;
        if let Some(tag) = self.tag {
            write!(f, "^{tag:?}")?;
        }
        Ok(())
    }
}

fn parity_ok(kind: GroupKind, p: &Partition) -> bool {
    match kind {
        GroupKind::GeneralLinear => true,
        GroupKind::Symplectic => p
            .multiplicities()
            .iter()
            .all(|(&part, &mult)| part % 2 == 0 || mult % 2 == 0),
        GroupKind::Orthogonal => p
            .multiplicities()
            .iter()
            .all(|(&part, &mult)| part % 2 == 1 || mult % 2 == 0),
    }
}

/// All orbit labels for `p` in `ambient`: empty on a parity violation, two for very even `so`.
pub fn validate_orbit(ambient: GroupType, p: &Partition) -> Result<Vec<OrbitLabel>, PartitionError> {
    if p.size() != ambient.matrix_size() {
        return Err(PartitionError::SizeMismatch {
            expected: ambient.matrix_size(),
            got: p.size(),
        });
    }
    if !parity_ok(ambient.kind, p) {
        return Ok(Vec::new());
    }
    let tags: Vec<Option<OrbitTag>> = if ambient.kind == GroupKind::Orthogonal && p.is_very_even() {
        vec![Some(OrbitTag::I), Some(OrbitTag::II)]
    } else {
        vec![None]
    };
    Ok(tags
        .into_iter()
        .map(|tag| OrbitLabel {
            ambient,
            partition: p.clone(),
            tag,
        })
        .collect())
}

impl OrbitLabel {
    pub fn new(ambient: GroupType, partition: Partition, tag: Option<OrbitTag>) -> Result<Self, PartitionError> {
        let labels = validate_orbit(ambient, &partition)?;
        if labels.is_empty() {
            return Err(PartitionError::Parity { ambient, partition });
        }
        labels
            .into_iter()
            .find(|l| l.tag == tag)
            .ok_or(PartitionError::BadTag { ambient, partition, tag })
    }

    /// The orbit of `[2^twos, 1^rest]`; very even `so` labels need a tag.
    pub fn two_nilpotent(ambient: GroupType, twos: usize, tag: Option<OrbitTag>) -> Result<Self, PartitionError> {
        let size = ambient.matrix_size();
        if 2 * twos > size {
            return Err(PartitionError::SizeMismatch { expected: size, got: 2 * twos });
        }
        Self::new(ambient, Partition::twos_and_ones(twos, size), tag)
    }

    /// Number of parts equal to 2, i.e. the rank of a square-zero representative.
    pub fn twos(&self) -> usize {
        self.partition.multiplicity(2)
    }

    /// Dimension of the adjoint orbit. `gl` uses the closed form; `sp`/`so`
    /// compute the centralizer of an explicit representative by exact rank.
    pub fn orbit_dim(&self) -> usize {
        match self.ambient.kind {
            GroupKind::GeneralLinear => gl_orbit_dim_closed_form(&self.partition),
            _ => self.orbit_dim_by_centralizer(),
        }
    }

    /// `dim h - dim z_h(x)` with the centralizer computed as a nullspace.
    pub fn orbit_dim_by_centralizer(&self) -> usize {
        let rep = self.representative();
        let algebra = algebra_dim_from_gram(rep.matrix.rows(), rep.gram.as_ref());
        algebra - centralizer_dim(&rep.matrix, rep.gram.as_ref())
    }

    /// Standard centralizer-dimension formulas in terms of the conjugate partition.
    pub fn orbit_dim_formula(&self) -> usize {
        let p = &self.partition;
        let squares = p.square_sum_of_transpose();
        let odd = p.odd_part_count();
        let centralizer = match self.ambient.kind {
            GroupKind::GeneralLinear => squares,
            GroupKind::Symplectic => (squares + odd) / 2,
            GroupKind::Orthogonal => (squares - odd) / 2,
        };
        self.ambient.algebra_dim() - centralizer
    }

    /// Explicit nilpotent matrix in this orbit together with the form it preserves.
    pub fn representative(&self) -> Representative {
        let kind = self.ambient.kind;
        if kind == GroupKind::GeneralLinear {
            return Representative {
                matrix: gl_representative(&self.partition),
                gram: None,
            };
        }
        if self.partition.is_two_bounded() {
            let matrix = split_two_nilpotent(self.ambient, self.twos(), self.tag.unwrap_or(OrbitTag::I));
            return Representative {
                matrix,
                gram: self.ambient.gram(),
            };
        }
        block_representative(kind, &self.partition)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Representative {
    pub matrix: ExactMatrix,
    /// Form preserved by the ambient algebra in these coordinates.
    pub gram: Option<ExactMatrix>,
}

fn gl_orbit_dim_closed_form(p: &Partition) -> usize {
    p.size() * p.size() - p.square_sum_of_transpose()
}

/// Lower-shift Jordan block: `e_i -> e_{i+1}`.
fn jordan_block(d: usize) -> ExactMatrix {
    Matrix::from_fn(d, d, |i, j| crate::Rational::from_integer(((i == j + 1) as i64).into()))
}

/// `f_l` in `gl_m`: maps the last `l` basis vectors onto the first `l`.
pub fn square_zero_normal_form(m: usize, l: usize) -> ExactMatrix {
    assert!(2 * l <= m);
    let mut f = ExactMatrix::zeros(m, m);
    for j in 0..l {
        f.set(j, m - l + j, crate::Rational::from_integer(1.into()));
    }
    f
}

fn gl_representative(p: &Partition) -> ExactMatrix {
    if p.is_two_bounded() {
        return square_zero_normal_form(p.size(), p.multiplicity(2));
    }
    let blocks: Vec<ExactMatrix> = p.parts().iter().map(|&d| jordan_block(d as usize)).collect();
    Matrix::block_diag(&blocks)
}

/// Square-zero element of rank `twos` in split `sp_2m`/`so_2m` of the shape `[[0, B], [0, 0]]`.
fn split_two_nilpotent(ambient: GroupType, twos: usize, tag: OrbitTag) -> ExactMatrix {
    let m = ambient.rank;
    let one = || crate::Rational::from_integer(1.into());
    let mut b = ExactMatrix::zeros(m, m);
    match ambient.kind {
        GroupKind::Symplectic => {
            for i in 0..twos {
                b.set(i, i, one());
            }
        }
        GroupKind::Orthogonal => {
            assert!(twos.is_multiple_of(2), "so_2m square-zero rank is even");
            for k in 0..twos / 2 {
                b.set(2 * k, 2 * k + 1, one());
                b.set(2 * k + 1, 2 * k, -one());
            }
        }
        GroupKind::GeneralLinear => unreachable!(),
    }
    let zero = ExactMatrix::zeros(m, m);
    let x = ExactMatrix::from_blocks(&zero, &b, &zero, &zero);
    match tag {
        OrbitTag::I => x,
        OrbitTag::II => {
            let s = hyperbolic_swap(m, m - 1);
            &(&s * &x) * &s
        }
    }
}

/// Permutation matrix exchanging `e_k` and `f_k` in the split basis of a `2m` space.
/// It preserves both split forms up to sign and lies in `O \ SO` for the quadratic one.
pub fn hyperbolic_swap(m: usize, k: usize) -> ExactMatrix {
    let n = 2 * m;
    Matrix::from_fn(n, n, |i, j| {
        let target = if j == k {
            m + k
        } else if j == m + k {
            k
        } else {
            j
        };
        crate::Rational::from_integer(((i == target) as i64).into())
    })
}

/// Jordan blocks with their own invariant forms, assembled as an orthogonal sum.
fn block_representative(kind: GroupKind, p: &Partition) -> Representative {
    let eps: i64 = if kind == GroupKind::Symplectic { -1 } else { 1 };
    let mut mats = Vec::new();
    let mut grams = Vec::new();
    for (part, mult) in p.multiplicities().into_iter().rev() {
        let d = part as usize;
        let single = match kind {
            GroupKind::Symplectic => d.is_multiple_of(2),
            _ => d % 2 == 1,
        };
        if single {
            for _ in 0..mult {
                mats.push(jordan_block(d));
                grams.push(ExactMatrix::from_fn(d, d, |i, j| {
                    // (-1)^i on the antidiagonal (1-indexed i)
                    let v = if i + j + 1 == d {
                        if (i + 1) % 2 == 0 { 1 } else { -1 }
                    } else {
                        0
                    };
                    crate::Rational::from_integer(v.into())
                }));
            }
        } else {
            for _ in 0..mult / 2 {
                let j = jordan_block(d);
                mats.push(ExactMatrix::block_diag(&[j.clone(), -&j.transpose()]));
                let id = ExactMatrix::identity(d);
                let zero = ExactMatrix::zeros(d, d);
                grams.push(ExactMatrix::from_blocks(&zero, &id, &id.scale(&crate::Rational::from_integer(eps.into())), &zero));
            }
        }
    }
    Representative {
        matrix: Matrix::block_diag(&mats),
        gram: Some(Matrix::block_diag(&grams)),
    }
}

/// Index of the unknown `Y[i][j]` in the vectorization of an `s x s` matrix.
fn unknown(s: usize, i: usize, j: usize) -> usize {
    i * s + j
}

/// Rows expressing `Y^T G + G Y = 0` for unknown `Y`.
fn form_constraints(s: usize, gram: &ExactMatrix) -> Vec<Vec<crate::Rational>> {
    let mut rows = Vec::with_capacity(s * s);
    for i in 0..s {
        for j in 0..s {
            let mut row = vec![crate::Rational::from_integer(0.into()); s * s];
            for k in 0..s {
                let g = gram.get(k, j);
                if !num_traits::Zero::is_zero(g) {
                    row[unknown(s, k, i)] += g.clone();
                }
                let g = gram.get(i, k);
                if !num_traits::Zero::is_zero(g) {
                    row[unknown(s, k, j)] += g.clone();
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// Rows expressing `X Y - Y X = 0`.
fn commutator_constraints(x: &ExactMatrix) -> Vec<Vec<crate::Rational>> {
    let s = x.rows();
    let mut rows = Vec::with_capacity(s * s);
    for i in 0..s {
        for j in 0..s {
            let mut row = vec![crate::Rational::from_integer(0.into()); s * s];
            for k in 0..s {
                let a = x.get(i, k);
                if !num_traits::Zero::is_zero(a) {
                    row[unknown(s, k, j)] += a.clone();
                }
                let b = x.get(k, j);
                if !num_traits::Zero::is_zero(b) {
                    row[unknown(s, i, k)] -= b.clone();
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// Dimension of `{Y : Y^T G + G Y = 0}` (or `gl_s` when no form is given).
pub fn algebra_dim_from_gram(s: usize, gram: Option<&ExactMatrix>) -> usize {
    match gram {
        None => s * s,
        Some(g) => ExactMatrix::from_rows(form_constraints(s, g)).nullity(),
    }
}

/// Dimension of the centralizer of `x` inside the algebra preserving `gram`.
pub fn centralizer_dim(x: &ExactMatrix, gram: Option<&ExactMatrix>) -> usize {
    let s = x.rows();
    let mut rows = commutator_constraints(x);
    if let Some(g) = gram {
        rows.extend(form_constraints(s, g));
    }
    if rows.is_empty() {
        return s * s;
    }
    ExactMatrix::from_rows(rows).nullity()
}

/// Dimension of the stabilizer of the coordinate subspaces `span(e_i : i in S)`
/// for each `S` in `subspaces`, inside the algebra preserving `gram`.
pub fn coordinate_stabilizer_dim(s: usize, gram: Option<&ExactMatrix>, subspaces: &[Vec<usize>]) -> usize {
    let mut rows = match gram {
        Some(g) => form_constraints(s, g),
        None => Vec::new(),
    };
    for sub in subspaces {
        let mut inside = vec![false; s];
        for &i in sub {
            inside[i] = true;
        }
        for j in sub {
            for i in (0..s).filter(|&i| !inside[i]) {
                let mut row = vec![crate::Rational::from_integer(0.into()); s * s];
                row[unknown(s, i, *j)] = crate::Rational::from_integer(1.into());
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return s * s;
    }
    ExactMatrix::from_rows(rows).nullity()
}

/// Closure order on labels whose partitions have parts at most 2.
pub fn closure_leq(a: &OrbitLabel, b: &OrbitLabel) -> Result<bool, PartitionError> {
    if a.ambient != b.ambient {
        return Err(PartitionError::AmbientMismatch(a.ambient, b.ambient));
    }
    for l in [a, b] {
        if !l.partition.is_two_bounded() {
            return Err(PartitionError::UnsupportedRegime(l.partition.clone()));
        }
    }
    if let (Some(ta), Some(tb)) = (a.tag, b.tag) {
        return Ok(ta == tb);
    }
    if a.tag.is_some() {
        // a tagged orbit is the top of its chain, so it only sits below itself
        return Ok(false);
    }
    Ok(a.twos() <= b.twos())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normality {
    Normal,
    Unknown,
}

/// Known normality criteria: always for `gl`; `d1 + d2 <= 4` for `sp`; `d1 <= 2` for `so`.
pub fn is_normal(o: &OrbitLabel) -> Normality {
    let parts = o.partition.parts();
    let d1 = parts.first().copied().unwrap_or(0);
    let d2 = parts.get(1).copied().unwrap_or(0);
    let known = match o.ambient.kind {
        GroupKind::GeneralLinear => true,
        GroupKind::Symplectic => d1 + d2 <= 4,
        GroupKind::Orthogonal => d1 <= 2,
    };
    if known {
        Normality::Normal
    } else {
        Normality::Unknown
    }
}

/// Every partition of `n`, in reverse lexicographic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            prefix.push(p as u32);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All valid labels of `ambient`.
pub fn all_labels(ambient: GroupType) -> Vec<OrbitLabel> {
    all_partitions(ambient.matrix_size())
        .iter()
        .flat_map(|p| validate_orbit(ambient, p).expect("sizes match"))
        .collect()
}
