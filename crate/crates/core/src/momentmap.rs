//! Points of `W`, the moment maps for `GL(V)` and `Sp(V)`, and the irreducible
//! components of their zero fibers.
//!
//! `GL(V)` acts on `W = Hom(V', V) x Hom(V, V')` with `n = dim V`, `m = dim V'`;
//! the moment map is `(u1, u2) -> u1 u2` and the quotient map is `(u1, u2) -> u2 u1`.
//!
//! `Sp(V)` acts on `W = Hom(E, V)` with `E = V' + V'*` carrying the split
//! quadratic form `q` (Gram `[[0, I], [I, 0]]`) and `V` the split symplectic
//! form `w` (Gram `[[0, I], [-I, 0]]`). The zero fiber is `{w : w w^t = 0}`.

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{fraction_free_rank, LinalgError, Matrix};
use crate::partitions::{hyperbolic_swap, square_zero_normal_form, GroupKind, GroupType, OrbitTag};
use crate::rng::{random_int_matrix, random_invertible, stream};
use crate::{ExactMatrix, Rational};

/// Resample budget when a sample lands on a degenerate locus.
pub const MAX_SAMPLE_ATTEMPTS: u64 = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MomentMapError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("{0:?} zero fibers are not modeled")]
    Unsupported(GroupKind),
    #[error("Sp(V) needs dim V even, got {0}")]
    OddSymplecticDim(usize),
    #[error("point is not in the zero fiber of the moment map")]
    NotInZeroFiber,
    #[error("matrix does not square to zero")]
    NotSquareZero,
    #[error("rank {rank} exceeds the factorization bound {bound}")]
    RankTooLarge { rank: usize, bound: usize },
    #[error("point has rank {rank} < {expected}: non-generic, unclassifiable at this point")]
    NonGeneric { rank: usize, expected: usize },
    #[error("component classification needs m <= n (m = {m}, n = {n})")]
    NotTwoComponent { n: usize, m: usize },
    #[error("no generic sample of {desc} after {attempts} attempts")]
    ResampleExhausted { desc: String, attempts: u64 },
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// A point `(u1, u2)` of `Hom(V', V) x Hom(V, V')`: `u1` is `n x m`, `u2` is `m x n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixPair {
    pub u1: ExactMatrix,
    pub u2: ExactMatrix,
}

impl MatrixPair {
    pub fn new(u1: ExactMatrix, u2: ExactMatrix) -> Result<Self, MomentMapError> {
        if u1.rows() != u2.cols() || u1.cols() != u2.rows() {
            return Err(MomentMapError::Shape(format!(
                "u1 is {:?}, u2 is {:?}; expected n x m and m x n",
                u1.shape(),
                u2.shape()
            )));
        }
        Ok(Self { u1, u2 })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        Self {
            u1: ExactMatrix::zeros(n, m),
            u2: ExactMatrix::zeros(m, n),
        }
    }

    /// `(u1^l, u2^l)`: `u2 u1 = f_l` and `u1 u2 = 0` when `l <= min(n, m/2)`.
    pub fn base_point(n: usize, m: usize, l: usize) -> Self {
        assert!(l <= n && 2 * l <= m);
        let mut u1 = ExactMatrix::zeros(n, m);
        let mut u2 = ExactMatrix::zeros(m, n);
        for j in 0..l {
            u1.set(j, m - l + j, int(1));
            u2.set(j, j, int(1));
        }
        Self { u1, u2 }
    }

    pub fn n(&self) -> usize {
        self.u1.rows()
    }

    pub fn m(&self) -> usize {
        self.u1.cols()
    }

    /// `H = GL(V')` acting by `(u1 h^-1, h u2)`.
    pub fn act_h(&self, h: &ExactMatrix) -> Result<Self, MomentMapError> {
        let hinv = h.inverse()?;
        Self::new(self.u1.try_mul(&hinv)?, h.try_mul(&self.u2)?)
    }

    /// `G = GL(V)` acting by `(g u1, u2 g^-1)`.
    pub fn act_g(&self, g: &ExactMatrix) -> Result<Self, MomentMapError> {
        let ginv = g.inverse()?;
        Self::new(g.try_mul(&self.u1)?, self.u2.try_mul(&ginv)?)
    }
}

/// `u1 u2`, an `n x n` matrix; zero exactly on the zero fiber.
pub fn moment_gl(pair: &MatrixPair) -> ExactMatrix {
    &pair.u1 * &pair.u2
}

/// `u2 u1 in gl_m`, the image under the quotient map.
pub fn quotient_gl(pair: &MatrixPair) -> ExactMatrix {
    &pair.u2 * &pair.u1
}

/// A point `w in Hom(E, V)`, an `n x 2m` matrix with `n` even.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpPoint {
    pub w: ExactMatrix,
}

impl SpPoint {
    pub fn new(w: ExactMatrix) -> Result<Self, MomentMapError> {
        if !w.rows().is_multiple_of(2) {
            return Err(MomentMapError::OddSymplecticDim(w.rows()));
        }
        if !w.cols().is_multiple_of(2) {
            return Err(MomentMapError::Shape(format!("w has {} columns, expected 2m", w.cols())));
        }
        Ok(Self { w })
    }

    pub fn n(&self) -> usize {
        self.w.rows()
    }

    pub fn m(&self) -> usize {
        self.w.cols() / 2
    }

    /// Action of `h in O(E)` by `w -> w h^-1`.
    pub fn act_h(&self, h: &ExactMatrix) -> Result<Self, MomentMapError> {
        Self::new(self.w.try_mul(&h.inverse()?)?)
    }
}

/// Gram matrix of `q` on `E` (`2m x 2m`).
pub fn quadratic_gram(m: usize) -> ExactMatrix {
    GroupType::so(m).gram().expect("so has a form")
}

/// Gram matrix of the symplectic form on `V` (`n x n`, `n` even).
pub fn symplectic_gram(n: usize) -> ExactMatrix {
    GroupType::sp(n / 2).gram().expect("sp has a form")
}

/// Adjoint of `a: X -> Y` with respect to bilinear forms `b_X`, `b_Y`: the map
/// `a^t: Y -> X` with `b_X(a^t y, x) = b_Y(y, a x)`.
pub fn adjoint(a: &ExactMatrix, gram_domain: &ExactMatrix, gram_codomain: &ExactMatrix) -> Result<ExactMatrix, MomentMapError> {
    let inv = gram_domain.transpose().inverse()?;
    Ok(&(&inv * &a.transpose()) * &gram_codomain.transpose())
}

/// `w^t: V -> E`, characterized by `q(w^t v, e) = omega(v, w e)`.
pub fn sp_transpose(x: &SpPoint) -> ExactMatrix {
    adjoint(&x.w, &quadratic_gram(x.m()), &symplectic_gram(x.n())).expect("split forms are nondegenerate")
}

/// `w w^t`, an `n x n` matrix.
pub fn sp_moment(x: &SpPoint) -> ExactMatrix {
    &x.w * &sp_transpose(x)
}

pub fn sp_moment_zero(x: &SpPoint) -> bool {
    sp_moment(x).is_zero()
}

/// `w^t w in so(E)`, the image under the quotient map.
pub fn sp_quotient(x: &SpPoint) -> ExactMatrix {
    &sp_transpose(x) * &x.w
}

/// Which irreducible component of the zero fiber a descriptor names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentIndex {
    /// `X_p` for `GL(V)`: `im u2 in L in ker u1` for some `p`-dimensional `L`.
    Rank(usize),
    /// `X_I` / `X_II` for `Sp(V)` with `m <= n`.
    Tag(OrbitTag),
    /// The irreducible zero fiber of `Sp(V)` with `m > n`.
    Whole,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDescriptor {
    pub group: GroupKind,
    pub n: usize,
    pub m: usize,
    pub index: ComponentIndex,
    pub dim: usize,
}

impl std::fmt::Display for ComponentDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let idx = match self.index {
            ComponentIndex::Rank(p) => format!("X_{p}"),
            ComponentIndex::Tag(t) => format!("X_{t:?}"),
            ComponentIndex::Whole => "X".to_string(),
        };
        write!(f, "{} n={} m={} {} (dim {})", self.group.short_name(), self.n, self.m, idx, self.dim)
    }
}

/// `dim X_p = p (m - p) + m n`, valid for `p <= n` or `p >= m - n`.
pub fn gl_component_dim(n: usize, m: usize, p: usize) -> usize {
    p * (m - p) + m * n
}

/// Closed form for `dim mu^-1(0)` under `GL(V)`.
pub fn gl_zero_fiber_dim(n: usize, m: usize) -> usize {
    if m >= 2 * n {
        2 * n * m - n * n
    } else if m.is_multiple_of(2) {
        n * m + m * m / 4
    } else {
        n * m + (m * m - 1) / 4
    }
}

/// Closed form for the dimension of each component of `mu^-1(0)` under `Sp(V)`.
pub fn sp_zero_fiber_dim(n: usize, m: usize) -> usize {
    if m > n {
        2 * m * n - n * (n + 1) / 2
    } else {
        m * n + m * (m - 1) / 2
    }
}

fn check_sp_dim(n: usize) -> Result<(), MomentMapError> {
    if !n.is_multiple_of(2) {
        Err(MomentMapError::OddSymplecticDim(n))
    } else {
        Ok(())
    }
}

/// Irreducible components of the zero fiber with their dimensions.
pub fn zero_fiber_components(group: GroupKind, n: usize, m: usize) -> Result<Vec<ComponentDescriptor>, MomentMapError> {
    let desc = |index, dim| ComponentDescriptor { group, n, m, index, dim };
    match group {
        GroupKind::GeneralLinear => {
            let range = if m <= n {
                0..=m
            } else if m < 2 * n {
                m - n..=n
            } else {
                n..=n
            };
            Ok(range
                .map(|p| desc(ComponentIndex::Rank(p), gl_component_dim(n, m, p)))
                .collect())
        }
        GroupKind::Symplectic => {
            check_sp_dim(n)?;
            let dim = sp_zero_fiber_dim(n, m);
            if m > n {
                Ok(vec![desc(ComponentIndex::Whole, dim)])
            } else {
                Ok(vec![
                    desc(ComponentIndex::Tag(OrbitTag::I), dim),
                    desc(ComponentIndex::Tag(OrbitTag::II), dim),
                ])
            }
        }
        GroupKind::Orthogonal => Err(MomentMapError::Unsupported(group)),
    }
}

/// Components of maximal dimension.
pub fn top_components(group: GroupKind, n: usize, m: usize) -> Result<Vec<ComponentDescriptor>, MomentMapError> {
    let all = zero_fiber_components(group, n, m)?;
    let top = all.iter().map(|d| d.dim).max().unwrap_or(0);
    Ok(all.into_iter().filter(|d| d.dim == top).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ZeroFiberPoint {
    Gl(MatrixPair),
    Sp(SpPoint),
}

impl ZeroFiberPoint {
    pub fn is_in_zero_fiber(&self) -> bool {
        match self {
            ZeroFiberPoint::Gl(p) => moment_gl(p).is_zero(),
            ZeroFiberPoint::Sp(x) => sp_moment_zero(x),
        }
    }

    pub fn as_gl(&self) -> Option<&MatrixPair> {
        match self {
            ZeroFiberPoint::Gl(p) => Some(p),
            ZeroFiberPoint::Sp(_) => None,
        }
    }

    pub fn as_sp(&self) -> Option<&SpPoint> {
        match self {
            ZeroFiberPoint::Sp(x) => Some(x),
            ZeroFiberPoint::Gl(_) => None,
        }
    }
}

/// Point of `X_p` built over the coordinate subspace `L = span(e_1..e_p)` of `V'`
/// from fiber data `a in Hom(V'/L, V)` (`n x (m-p)`) and `b in Hom(V, L)` (`p x n`).
pub fn gl_component_point(n: usize, m: usize, p: usize, a: &ExactMatrix, b: &ExactMatrix) -> Result<MatrixPair, MomentMapError> {
    if a.shape() != (n, m - p) || b.shape() != (p, n) {
        return Err(MomentMapError::Shape(format!(
            "fiber data {:?}, {:?} for n={n} m={m} p={p}",
            a.shape(),
            b.shape()
        )));
    }
    let mut u1 = ExactMatrix::zeros(n, m);
    u1.set_block(0, p, a);
    let mut u2 = ExactMatrix::zeros(m, n);
    u2.set_block(0, 0, b);
    MatrixPair::new(u1, u2)
}

/// Random element of `SO(E)` for the split quadratic form: a product of a Levi
/// element `diag(A, A^-T)` and two unipotents with skew off-diagonal blocks.
pub fn random_special_orthogonal(rng: &mut impl Rng, m: usize) -> ExactMatrix {
    let a: ExactMatrix = random_invertible(rng, m);
    let a_inv_t = a.inverse().expect("invertible").transpose();
    let zero = ExactMatrix::zeros(m, m);
    let id = ExactMatrix::identity(m);
    let levi = ExactMatrix::from_blocks(&a, &zero, &zero, &a_inv_t);
    let skew = |rng: &mut dyn rand::RngCore| {
        let mut s = ExactMatrix::zeros(m, m);
        for i in 0..m {
            for j in i + 1..m {
                let v = int(rng.gen_range(-3..=3));
                s.set(i, j, v.clone());
                s.set(j, i, -v);
            }
        }
        s
    };
    let upper = ExactMatrix::from_blocks(&id, &skew(rng), &zero, &id);
    let lower = ExactMatrix::from_blocks(&id, &zero, &skew(rng), &id);
    &(&levi * &upper) * &lower
}

/// Basis (as columns) of a random isotropic `k`-subspace of `(E, q)`.
/// For `k = m` it lies in the `OG(m, 2m)` component named by `tag`.
pub fn random_isotropic_subspace(rng: &mut impl Rng, m: usize, k: usize, tag: OrbitTag) -> ExactMatrix {
    assert!(k <= m);
    let mut basis = ExactMatrix::zeros(2 * m, k);
    for j in 0..k {
        basis.set(j, j, int(1));
    }
    if tag == OrbitTag::II {
        basis = &hyperbolic_swap(m, m - 1) * &basis;
    }
    &random_special_orthogonal(rng, m) * &basis
}

/// Point of an `Sp(V)` zero-fiber component with `im w^t` equal to the column span of `target`
/// (isotropic) and coefficient matrix `coeffs` (`n x k`).
pub fn sp_component_point(target: &ExactMatrix, coeffs: &ExactMatrix) -> Result<SpPoint, MomentMapError> {
    let m = target.rows() / 2;
    let rowspace = &quadratic_gram(m) * target;
    SpPoint::new(coeffs.try_mul(&rowspace.transpose())?)
}

/// A point on the component, deterministic in `seed`; not checked for genericity.
pub fn sample_component(desc: &ComponentDescriptor, seed: u64) -> Result<ZeroFiberPoint, MomentMapError> {
    sample_component_stream(desc, seed, 0)
}

fn sample_component_stream(desc: &ComponentDescriptor, seed: u64, attempt: u64) -> Result<ZeroFiberPoint, MomentMapError> {
    let mut rng = stream(seed, attempt);
    let (n, m) = (desc.n, desc.m);
    match (desc.group, desc.index) {
        (GroupKind::GeneralLinear, ComponentIndex::Rank(p)) => {
            let a = random_int_matrix(&mut rng, n, m - p);
            let b = random_int_matrix(&mut rng, p, n);
            Ok(ZeroFiberPoint::Gl(gl_component_point(n, m, p, &a, &b)?))
        }
        (GroupKind::Symplectic, index) => {
            check_sp_dim(n)?;
            let (k, tag) = match index {
                ComponentIndex::Whole => (n, OrbitTag::I),
                ComponentIndex::Tag(t) => (m, t),
                ComponentIndex::Rank(_) => return Err(MomentMapError::Shape("Sp components are tagged".into())),
            };
            let target = random_isotropic_subspace(&mut rng, m, k, tag);
            let coeffs = random_int_matrix(&mut rng, n, k);
            Ok(ZeroFiberPoint::Sp(sp_component_point(&target, &coeffs)?))
        }
        (group, _) => Err(MomentMapError::Unsupported(group)),
    }
}

/// Samples until the tangent-space certificate matches `desc.dim`, at most
/// [`MAX_SAMPLE_ATTEMPTS`] times. Returns the point and the attempt index used.
pub fn sample_generic(desc: &ComponentDescriptor, seed: u64) -> Result<(ZeroFiberPoint, u64), MomentMapError> {
    for attempt in 0..MAX_SAMPLE_ATTEMPTS {
        let point = sample_component_stream(desc, seed, attempt)?;
        if tangent_dim(&point)? == desc.dim {
            return Ok((point, attempt));
        }
    }
    Err(MomentMapError::ResampleExhausted {
        desc: desc.to_string(),
        attempts: MAX_SAMPLE_ATTEMPTS,
    })
}

/// Kernel dimension of the differential of the moment map at a zero-fiber point.
///
/// GL: `(a1, a2) -> a1 u2 + u1 a2` into `gl(V)`. Sp: `a -> a w^t + w a^t` into
/// `{A : A Omega symmetric}`, coordinatized by the upper triangle of `A Omega`.
pub fn tangent_dim(point: &ZeroFiberPoint) -> Result<usize, MomentMapError> {
    if !point.is_in_zero_fiber() {
        return Err(MomentMapError::NotInZeroFiber);
    }
    Ok(match point {
        ZeroFiberPoint::Gl(p) => {
            let differential = gl_differential(p);
            2 * p.n() * p.m() - fraction_free_rank(&differential)
        }
        ZeroFiberPoint::Sp(x) => {
            let differential = sp_differential(x);
            2 * x.n() * x.m() - fraction_free_rank(&differential)
        }
    })
}

fn unit(rows: usize, cols: usize, i: usize, j: usize) -> ExactMatrix {
    let mut e = ExactMatrix::zeros(rows, cols);
    e.set(i, j, int(1));
    e
}

/// Matrix of the GL differential: `n^2` rows, `2mn` columns.
pub fn gl_differential(p: &MatrixPair) -> ExactMatrix {
    let (n, m) = (p.n(), p.m());
    let mut columns = Vec::with_capacity(2 * m * n);
    for i in 0..n {
        for j in 0..m {
            columns.push((&unit(n, m, i, j) * &p.u2).entries().to_vec());
        }
    }
    for i in 0..m {
        for j in 0..n {
            columns.push((&p.u1 * &unit(m, n, i, j)).entries().to_vec());
        }
    }
    ExactMatrix::from_columns(n * n, &columns)
}

/// Matrix of the Sp differential: `n(n+1)/2` rows, `2mn` columns.
pub fn sp_differential(x: &SpPoint) -> ExactMatrix {
    let (n, m) = (x.n(), x.m());
    let omega = symplectic_gram(n);
    let q = quadratic_gram(m);
    let wt = sp_transpose(x);
    let mut columns = Vec::with_capacity(2 * m * n);
    for i in 0..n {
        for j in 0..2 * m {
            let a = unit(n, 2 * m, i, j);
            let at = adjoint(&a, &q, &omega).expect("nondegenerate");
            let image = &(&(&a * &wt) + &(&x.w * &at)) * &omega;
            let mut coords = Vec::with_capacity(n * (n + 1) / 2);
            for r in 0..n {
                for c in r..n {
                    coords.push(image.get(r, c).clone());
                }
            }
            columns.push(coords);
        }
    }
    ExactMatrix::from_columns(n * (n + 1) / 2, &columns)
}

/// `(u1, u2)` with `u2 u1 = f` and `u1 u2 = 0`, for `f^2 = 0` of rank at most `min(m/2, n)`.
pub fn factor_two_nilpotent(f: &ExactMatrix, n: usize) -> Result<MatrixPair, MomentMapError> {
    let m = f.rows();
    if f.cols() != m {
        return Err(LinalgError::NotSquare(f.rows(), f.cols()).into());
    }
    if !(f * f).is_zero() {
        return Err(MomentMapError::NotSquareZero);
    }
    let pivots = f.pivot_columns();
    let l = pivots.len();
    let bound = (m / 2).min(n);
    if l > bound {
        return Err(MomentMapError::RankTooLarge { rank: l, bound });
    }
    // basis: f c_1..f c_l | complement of im f in ker f | c_1..c_l
    let complement: Vec<Vec<Rational>> = pivots
        .iter()
        .map(|&p| (0..m).map(|i| if i == p { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let images: Vec<Vec<Rational>> = pivots.iter().map(|&p| f.column(p)).collect();
    let mut middle = Vec::new();
    let mut span = images.clone();
    for k in f.nullspace() {
        let mut trial = span.clone();
        trial.push(k.clone());
        if ExactMatrix::from_columns(m, &trial).rank() == trial.len() {
            span = trial;
            middle.push(k);
        }
        if span.len() == m - l {
            break;
        }
    }
    let mut columns = images;
    columns.extend(middle);
    columns.extend(complement);
    let s = ExactMatrix::from_columns(m, &columns);
    let s_inv = s.inverse()?;
    debug_assert_eq!(&(&s_inv * f) * &s, square_zero_normal_form(m, l));
    let base = MatrixPair::base_point(n, m, l);
    MatrixPair::new(&base.u1 * &s_inv, &s * &base.u2)
}

/// Component of `OG(m, 2m)` containing the maximal isotropic subspace spanned
/// by the columns of `basis`: `I` iff `dim(L cap L0) = m (mod 2)` with `L0 = span(e_1..e_m)`.
pub fn og_component(basis: &ExactMatrix) -> OrbitTag {
    let m = basis.rows() / 2;
    let dim_l = basis.rank();
    let mut joined = ExactMatrix::zeros(2 * m, basis.cols() + m);
    joined.set_block(0, 0, basis);
    joined.set_block(0, basis.cols(), &ExactMatrix::identity(m));
    let intersection = dim_l + m - joined.rank();
    if intersection % 2 == m % 2 {
        OrbitTag::I
    } else {
        OrbitTag::II
    }
}

/// `X_I` or `X_II` for a generic zero-fiber point with `m <= n`, read off
/// from the maximal isotropic subspace `im w^t`.
pub fn classify_sp_component(x: &SpPoint) -> Result<OrbitTag, MomentMapError> {
    let (n, m) = (x.n(), x.m());
    if m > n {
        return Err(MomentMapError::NotTwoComponent { n, m });
    }
    if !sp_moment_zero(x) {
        return Err(MomentMapError::NotInZeroFiber);
    }
    let wt = sp_transpose(x);
    let rank = wt.rank();
    if rank < m {
        return Err(MomentMapError::NonGeneric { rank, expected: m });
    }
    let cols: Vec<Vec<Rational>> = wt.pivot_columns().into_iter().map(|c| wt.column(c)).collect();
    Ok(og_component(&ExactMatrix::from_columns(2 * m, &cols)))
}

/// Tag of a rank-`m` square-zero element of split `so_2m`, via its image.
pub fn so_orbit_tag(x: &ExactMatrix) -> Option<OrbitTag> {
    let m = x.rows() / 2;
    let pivots = x.pivot_columns();
    if pivots.len() != m {
        return None;
    }
    let cols: Vec<Vec<Rational>> = pivots.into_iter().map(|c| x.column(c)).collect();
    Some(og_component(&Matrix::from_columns(2 * m, &cols)))
}
