//! Exact combinatorics of simple root systems: Cartan data, positive-root
//! enumeration, coroots, and the canonical pairing between weights and roots.
//!
//! Conventions, fixed once and enforced by tests:
//!
//! * Cartan matrix entries are `A[i][j] = ⟨α_j, α_i∨⟩` (the `j`-th simple
//!   root paired against the `i`-th simple coroot), with Bourbaki numbering
//!   of the Dynkin diagrams. Under this convention the columns of `A` are
//!   the simple roots written in the fundamental-weight basis, so
//!   `pairing(root_in_weight_coords(α_j), α_i) = A[i][j]`.
//! * Weights live in the fundamental-weight basis: `λ = Σ nᵢ λᵢ` is stored
//!   as the integer vector `(n₁, …, n_l)`.
//! * Every root carries its coroot coordinates explicitly; they are updated
//!   alongside the root during the reflection closure, so no inner-product
//!   normalization is ever needed. The pairing is then the plain dot product
//!   `⟨λ, α∨⟩ = Σ coroot[i]·coords[i]`, and `⟨λᵢ, α_j⟩ = δᵢⱼ` holds exactly.
//! * All public indices (`λ_i`, `α_j`, matrix entries) are 1-based, matching
//!   the usual `α_1, …, α_l` numbering. Arithmetic is exact `i64`/`i128`;
//!   there is no floating point in this crate.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::Error;

/// The seven families of simple Lie types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    /// All families, in the conventional order.
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Lie type: a family letter plus a rank, e.g. `A2` or `G2`.
///
/// Ranks are restricted to the finite types: `A_n (n≥1)`, `B_n (n≥2)`,
/// `C_n (n≥2)`, `D_n (n≥3`, with `D_3 ≅ A_3` represented as given`)`,
/// `E_6`, `E_7`, `E_8`, `F_4`, `G_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// The Cartan matrix of this type, `A[i][j] = ⟨α_j, α_i∨⟩`.
    pub fn cartan_matrix(self) -> CartanMatrix {
        CartanMatrix::for_type(self)
    }

    /// Every valid type with rank at most `max_rank`, in deterministic order.
    pub fn all_with_rank_at_most(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses names like `"A2"` or `"g2"` (case-insensitive).
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::UnknownType(s.to_string()));
        }
        let rank: usize = digits.parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// Integer Cartan matrix with the convention `A[i][j] = ⟨α_j, α_i∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>, // row-major
}

impl CartanMatrix {
    fn for_type(t: SimpleType) -> CartanMatrix {
        let n = t.rank();
        let mut m = CartanMatrix {
            rank: n,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            m.entries[i * n + i] = 2;
        }
        // Symmetric single bonds along a chain 1-2-…-k (0-based pairs).
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            m.entries[i * n + j] = aij;
            m.entries[j * n + i] = aji;
        };
        match t.family() {
            Family::A => {
                for i in 0..n - 1 {
                    bond(i, i + 1, -1, -1);
                }
            }
            Family::B => {
                // α_n is the short root: ⟨α_{n-1}, α_n∨⟩ = -2.
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(n - 2, n - 1, -1, -2);
            }
            Family::C => {
                // α_n is the long root: ⟨α_n, α_{n-1}∨⟩ = -2.
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                // Chain 1-…-(n-1) with α_n attached to α_{n-2}.
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                // Bourbaki: chain 1-3-4-5-6(-7)(-8), with α_2 attached to α_4.
                bond(0, 2, -1, -1);
                bond(2, 3, -1, -1);
                bond(3, 4, -1, -1);
                bond(4, 5, -1, -1);
                if n >= 7 {
                    bond(5, 6, -1, -1);
                }
                if n >= 8 {
                    bond(6, 7, -1, -1);
                }
                bond(1, 3, -1, -1);
            }
            Family::F => {
                // α_1, α_2 long; α_3, α_4 short; ⟨α_2, α_3∨⟩ = -2.
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            Family::G => {
                // α_1 short, α_2 long: ⟨α_2, α_1∨⟩ = -3.
                bond(0, 1, -3, -1);
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `A[i][j] = ⟨α_j, α_i∨⟩`, with 1-based `i`, `j`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        assert!(
            (1..=self.rank).contains(&i) && (1..=self.rank).contains(&j),
            "Cartan matrix index out of range"
        );
        self.at(i - 1, j - 1)
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    /// Exact integer determinant (fraction-free elimination).
    pub fn determinant(&self) -> i64 {
        let m: Vec<i128> = self.entries.iter().map(|&x| i128::from(x)).collect();
        bareiss_determinant(self.rank, m)
            .and_then(|d| i64::try_from(d).ok())
            .expect("Cartan determinant fits in i64")
    }

    /// Checks the defining invariants: diagonal 2, nonpositive off-diagonal
    /// entries with symmetric zero pattern, positive determinant.
    pub fn validate(&self) -> Result<(), Error> {
        let n = self.rank;
        for i in 0..n {
            if self.at(i, i) != 2 {
                return Err(Error::Internal(format!("A[{}][{}] != 2", i + 1, i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.at(i, j) > 0 {
                    return Err(Error::Internal(format!(
                        "A[{}][{}] positive off the diagonal",
                        i + 1,
                        j + 1
                    )));
                }
                if (self.at(i, j) == 0) != (self.at(j, i) == 0) {
                    return Err(Error::Internal(format!(
                        "zero pattern asymmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if self.determinant() <= 0 {
            return Err(Error::Internal("determinant not positive".to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.rank {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:2}", self.at(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Exact determinant of an `n×n` integer matrix by the Bareiss fraction-free
/// algorithm. Returns `None` on intermediate overflow.
pub(crate) fn bareiss_determinant(n: usize, mut m: Vec<i128>) -> Option<i128> {
    debug_assert_eq!(m.len(), n * n);
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k * n + k] == 0 {
            match (k + 1..n).find(|&r| m[r * n + k] != 0) {
                Some(r) => {
                    for c in 0..n {
                        m.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i * n + j].checked_mul(m[k * n + k])?;
                let u = m[i * n + k].checked_mul(m[k * n + j])?;
                m[i * n + j] = t.checked_sub(u)? / prev;
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    Some(sign * m[(n - 1) * n + (n - 1)])
}

/// A weight `λ = Σ nᵢ λᵢ`, stored as integer coordinates in the
/// fundamental-weight basis.
///
/// Note that equality and hashing are coordinatewise; the dominance order on
/// weights lives in [`crate::weights`] and is deliberately not `Ord`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The fundamental weight `λ_i` (1-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!(
            (1..=rank).contains(&i),
            "fundamental weight index {i} out of range 1..={rank}"
        );
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Weight { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coordinate `n_i` of `λ = Σ nᵢ λᵢ` (1-based `i`).
    pub fn coord(&self, i: usize) -> i64 {
        assert!(
            (1..=self.rank()).contains(&i),
            "weight coordinate index {i} out of range"
        );
        self.coords[i - 1]
    }
}

impl fmt::Display for Weight {
    /// Renders as an integer vector in square brackets, e.g. `[1,-2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

/// A root `α = Σ mᵢ αᵢ` together with its coroot `α∨ = Σ cᵢ αᵢ∨`.
///
/// Both coordinate vectors are in the simple-root (resp. simple-coroot)
/// basis. For a positive root all `mᵢ ≥ 0` and not all are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    simple_coords: Vec<i64>,
    coroot_coords: Vec<i64>,
}

impl Root {
    fn simple(rank: usize, j: usize) -> Root {
        // α_j has both coordinate vectors equal to the j-th unit vector
        // (1-based j).
        let mut v = vec![0; rank];
        v[j - 1] = 1;
        Root {
            simple_coords: v.clone(),
            coroot_coords: v,
        }
    }

    pub fn rank(&self) -> usize {
        self.simple_coords.len()
    }

    pub fn simple_coords(&self) -> &[i64] {
        &self.simple_coords
    }

    pub fn coroot_coords(&self) -> &[i64] {
        &self.coroot_coords
    }

    /// Height: the sum of the simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

/// The canonical pairing `⟨λ, α⟩ = ⟨λ, α∨⟩ = Σ coroot[i]·coords[i]`.
///
/// For a simple root this reads off a single coordinate:
/// `pairing(λ, α_j) = n_j`, so `⟨λᵢ, α_j⟩ = δᵢⱼ`.
pub fn pairing(lambda: &Weight, alpha: &Root) -> Result<i64, Error> {
    if lambda.rank() != alpha.rank() {
        return Err(Error::RankMismatch {
            expected: alpha.rank(),
            found: lambda.rank(),
        });
    }
    let mut acc: i128 = 0;
    for (c, n) in alpha.coroot_coords.iter().zip(lambda.coords()) {
        acc += i128::from(*c) * i128::from(*n);
    }
    i64::try_from(acc).map_err(|_| Error::Overflow)
}

/// A simple root system: type, Cartan matrix, and the enumerated positive
/// roots (negative roots are the negations and are stored implicitly).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: CartanMatrix,
    simple_roots: Vec<Root>,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    /// Enumerates the positive roots of type `t` by saturating the simple
    /// roots under the simple reflections `s_i(α) = α − ⟨α, α_i∨⟩ αᵢ`,
    /// updating coroots in tandem via `s_i(α∨) = α∨ − ⟨αᵢ, α∨⟩ αᵢ∨`.
    pub fn new(t: SimpleType) -> RootSystem {
        let cartan = t.cartan_matrix();
        let n = t.rank();
        let simple_roots: Vec<Root> = (1..=n).map(|j| Root::simple(n, j)).collect();

        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = simple_roots
            .iter()
            .map(|r| (r.simple_coords.clone(), r.coroot_coords.clone()))
            .collect();
        let mut all: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        while let Some((s, c)) = queue.pop_front() {
            if !seen.insert(s.clone()) {
                continue;
            }
            for i in 0..n {
                // ⟨α, α_i∨⟩ and ⟨α_i, α∨⟩ from the Cartan matrix.
                let root_pair: i64 = (0..n).map(|j| cartan.at(i, j) * s[j]).sum();
                let coroot_pair: i64 = (0..n).map(|j| cartan.at(j, i) * c[j]).sum();
                let mut s2 = s.clone();
                s2[i] -= root_pair;
                let mut c2 = c.clone();
                c2[i] -= coroot_pair;
                if !seen.contains(&s2) {
                    queue.push_back((s2, c2));
                }
            }
            all.push((s, c));
        }

        let mut positive_roots: Vec<Root> = all
            .into_iter()
            .filter(|(s, _)| s.iter().all(|&x| x >= 0))
            .map(|(s, c)| Root {
                simple_coords: s,
                coroot_coords: c,
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            (a.height(), &a.simple_coords).cmp(&(b.height(), &b.simple_coords))
        });

        assert_eq!(
            positive_roots.len(),
            t.positive_root_count(),
            "reflection closure of {t} disagrees with the closed-form root count"
        );

        RootSystem {
            simple_type: t,
            cartan,
            simple_roots,
            positive_roots,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Positive roots sorted by height, then lexicographically by
    /// simple-root coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The simple root `α_j` (1-based `j`).
    pub fn simple_root(&self, j: usize) -> &Root {
        assert!(
            (1..=self.rank()).contains(&j),
            "simple root index {j} out of range 1..={}",
            self.rank()
        );
        &self.simple_roots[j - 1]
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty root system")
    }

    /// Expresses a root in the fundamental-weight basis:
    /// `α = Σᵢ ⟨α, αᵢ∨⟩ λᵢ`. For a simple root `α_j` this is the `j`-th
    /// column of the Cartan matrix.
    pub fn root_in_weight_coords(&self, alpha: &Root) -> Weight {
        let n = self.rank();
        assert_eq!(alpha.rank(), n, "root rank mismatch");
        let coords = (0..n)
            .map(|i| (0..n).map(|j| self.cartan.at(i, j) * alpha.simple_coords[j]).sum())
            .collect();
        Weight::new(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name.parse().unwrap())
    }

    /// Independent oracle: close the simple roots under simple reflections
    /// working purely in fundamental-weight coordinates, where
    /// `s_i(w) = w − wᵢ·col_i(A)`. No simple-root or coroot coordinates are
    /// involved, so this exercises a genuinely different code path.
    fn reflection_closure_in_weight_coords(cartan: &CartanMatrix) -> BTreeSet<Vec<i64>> {
        let n = cartan.rank();
        let col = |j: usize| -> Vec<i64> { (0..n).map(|i| cartan.at(i, j)).collect() };
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = (0..n).map(col).collect();
        while let Some(w) = queue.pop() {
            if !seen.insert(w.clone()) {
                continue;
            }
            for i in 0..n {
                let ci = col(i);
                let mut w2 = w.clone();
                for (k, c) in ci.iter().enumerate() {
                    w2[k] -= w[i] * c;
                }
                if !seen.contains(&w2) {
                    queue.push(w2);
                }
            }
        }
        seen
    }

    /// Least positive integer symmetrizer `d` with `dᵢ·A[i][j] = d_j·A[j][i]`.
    fn symmetrizer(cartan: &CartanMatrix) -> Vec<i64> {
        let n = cartan.rank();
        // Propagate rationals over the Dynkin graph, then clear denominators.
        let gcd = |mut a: i64, mut b: i64| -> i64 {
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a.abs()
        };
        let mut d: Vec<Option<(i64, i64)>> = vec![None; n]; // (num, den)
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some((1, 1));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let (ni, di) = d[i].unwrap();
                for j in 0..n {
                    if i == j || cartan.at(i, j) == 0 || d[j].is_some() {
                        continue;
                    }
                    // dᵢ·a_ij = d_j·a_ji  ⇒  d_j = dᵢ·a_ij/a_ji
                    let num = ni * cartan.at(i, j);
                    let den = di * cartan.at(j, i);
                    let g = gcd(num, den);
                    let sign = if den < 0 { -1 } else { 1 };
                    d[j] = Some((sign * num / g, sign * den / g));
                    stack.push(j);
                }
            }
        }
        let lcm_den = d
            .iter()
            .map(|x| x.unwrap().1)
            .fold(1i64, |acc, x| acc / gcd(acc, x) * x);
        d.iter()
            .map(|x| {
                let (num, den) = x.unwrap();
                num * (lcm_den / den)
            })
            .collect()
    }

    /// Independent coroot oracle via root lengths: with `(αᵢ, α_j) = dᵢ·A[i][j]`,
    /// the coroot of `α = Σ mᵢ αᵢ` is `α∨ = Σ (2·m_j·d_j/(α,α))·α_j∨`.
    fn coroot_via_lengths(cartan: &CartanMatrix, simple_coords: &[i64]) -> Vec<i64> {
        let n = cartan.rank();
        let d = symmetrizer(cartan);
        let mut len2: i64 = 0;
        for i in 0..n {
            for j in 0..n {
                len2 += simple_coords[i] * simple_coords[j] * d[i] * cartan.at(i, j);
            }
        }
        assert!(len2 > 0, "root of nonpositive length");
        (0..n)
            .map(|j| {
                let num = 2 * simple_coords[j] * d[j];
                assert_eq!(num % len2, 0, "coroot coordinate not integral");
                num / len2
            })
            .collect()
    }

    #[test]
    fn cartan_matrix_rank_one_is_forced() {
        let a1 = rs("A1");
        assert_eq!(a1.cartan().entry(1, 1), 2);
        assert_eq!(a1.positive_roots().len(), 1);
    }

    #[test]
    fn cartan_matrix_a2() {
        let t: SimpleType = "A2".parse().unwrap();
        let m = t.cartan_matrix();
        assert_eq!(
            [[m.entry(1, 1), m.entry(1, 2)], [m.entry(2, 1), m.entry(2, 2)]],
            [[2, -1], [-1, 2]]
        );
        assert_eq!(rs("A2").positive_roots().len(), 3);
    }

    #[test]
    fn cartan_matrix_g2() {
        // Under A[i][j] = ⟨α_j, α_i∨⟩ with α_1 short, G2 is [[2,-3],[-1,2]];
        // the reflection closure below must reproduce 6 positive roots.
        let t: SimpleType = "G2".parse().unwrap();
        let m = t.cartan_matrix();
        assert_eq!(
            [[m.entry(1, 1), m.entry(1, 2)], [m.entry(2, 1), m.entry(2, 2)]],
            [[2, -3], [-1, 2]]
        );
        assert_eq!(rs("G2").positive_roots().len(), 6);
    }

    #[test]
    fn cartan_matrices_are_valid_finite_type() {
        for t in SimpleType::all_with_rank_at_most(8) {
            t.cartan_matrix().validate().unwrap();
        }
    }

    #[test]
    fn cartan_determinants() {
        let det = |name: &str| name.parse::<SimpleType>().unwrap().cartan_matrix().determinant();
        assert_eq!(det("A1"), 2);
        assert_eq!(det("A7"), 8);
        assert_eq!(det("B5"), 2);
        assert_eq!(det("C5"), 2);
        assert_eq!(det("D6"), 4);
        assert_eq!(det("E6"), 3);
        assert_eq!(det("E7"), 2);
        assert_eq!(det("E8"), 1);
        assert_eq!(det("F4"), 1);
        assert_eq!(det("G2"), 1);
    }

    #[test]
    fn positive_root_counts_match_closed_form() {
        // RootSystem::new asserts the count internally; exercise every type.
        for t in SimpleType::all_with_rank_at_most(8) {
            let rs = RootSystem::new(t);
            assert_eq!(rs.positive_roots().len(), t.positive_root_count());
        }
    }

    #[test]
    fn a2_positive_roots_are_the_expected_three() {
        let a2 = rs("A2");
        let coords: Vec<&[i64]> = a2.positive_roots().iter().map(|r| r.simple_coords()).collect();
        assert_eq!(coords, vec![&[0, 1][..], &[1, 0][..], &[1, 1][..]]);
    }

    #[test]
    fn closure_agrees_with_weight_coordinate_oracle() {
        for name in ["A3", "B3", "C3", "D4", "F4", "G2"] {
            let sys = rs(name);
            let oracle = reflection_closure_in_weight_coords(sys.cartan());
            assert_eq!(oracle.len(), 2 * sys.positive_roots().len());
            for root in sys.positive_roots() {
                let w = sys.root_in_weight_coords(root);
                assert!(oracle.contains(w.coords()), "{name}: {w} missing from oracle");
                let neg: Vec<i64> = w.coords().iter().map(|x| -x).collect();
                assert!(oracle.contains(&neg));
            }
        }
    }

    #[test]
    fn coroots_agree_with_length_oracle() {
        for name in ["A2", "B2", "B4", "C3", "D4", "E6", "F4", "G2"] {
            let sys = rs(name);
            for root in sys.positive_roots() {
                let expect = coroot_via_lengths(sys.cartan(), root.simple_coords());
                assert_eq!(root.coroot_coords(), expect.as_slice(), "{name}: {root:?}");
            }
        }
    }

    #[test]
    fn pairing_is_delta_on_fundamental_weights() {
        for t in SimpleType::all_with_rank_at_most(6) {
            let sys = RootSystem::new(t);
            let n = sys.rank();
            for i in 1..=n {
                let li = Weight::fundamental(n, i);
                for j in 1..=n {
                    let expected = i64::from(i == j);
                    assert_eq!(pairing(&li, sys.simple_root(j)).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn pairing_of_zero_weight_vanishes() {
        let g2 = rs("G2");
        for root in g2.positive_roots() {
            assert_eq!(pairing(&Weight::zero(2), root).unwrap(), 0);
        }
    }

    #[test]
    fn pairing_example_a2_rho_against_highest_root() {
        // ⟨λ_1+λ_2, α_1+α_2⟩ = 2: the coroot of α_1+α_2 is α_1∨+α_2∨.
        let a2 = rs("A2");
        let rho = Weight::new(vec![1, 1]);
        let highest = a2.highest_root();
        assert_eq!(highest.simple_coords(), &[1, 1]);
        assert_eq!(highest.coroot_coords(), &[1, 1]);
        assert_eq!(pairing(&rho, highest).unwrap(), 2);
    }

    #[test]
    fn pairing_rejects_rank_mismatch() {
        let a2 = rs("A2");
        let w = Weight::new(vec![1, 0, 0]);
        assert_eq!(
            pairing(&w, a2.simple_root(1)),
            Err(Error::RankMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn root_in_weight_coords_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.root_in_weight_coords(a1.simple_root(1)).coords(), &[2]);

        let a2 = rs("A2");
        assert_eq!(a2.root_in_weight_coords(a2.simple_root(1)).coords(), &[2, -1]);
        assert_eq!(a2.root_in_weight_coords(a2.highest_root()).coords(), &[1, 1]);
    }

    #[test]
    fn root_in_weight_coords_matches_cartan_columns() {
        for name in ["A4", "B3", "C4", "D4", "E6", "F4", "G2"] {
            let sys = rs(name);
            for j in 1..=sys.rank() {
                let w = sys.root_in_weight_coords(sys.simple_root(j));
                for i in 1..=sys.rank() {
                    assert_eq!(
                        pairing(&w, sys.simple_root(i)).unwrap(),
                        sys.cartan().entry(i, j),
                        "{name}: identity fails at ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn highest_root_is_unique_coordinatewise_maximum() {
        for t in SimpleType::all_with_rank_at_most(6) {
            let sys = RootSystem::new(t);
            let dominates = |a: &Root, b: &Root| {
                a.simple_coords()
                    .iter()
                    .zip(b.simple_coords())
                    .all(|(x, y)| x >= y)
            };
            let maxima: Vec<&Root> = sys
                .positive_roots()
                .iter()
                .filter(|r| sys.positive_roots().iter().all(|s| dominates(r, s)))
                .collect();
            assert_eq!(maxima.len(), 1, "{t}: highest root not unique");
            assert_eq!(maxima[0], sys.highest_root());
        }
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        for name in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G1", "G3"] {
            assert!(matches!(
                name.parse::<SimpleType>(),
                Err(Error::InvalidRank { .. })
            ));
        }
        for name in ["", "H4", "A", "2A", "Ax", "A-1"] {
            assert!(matches!(
                name.parse::<SimpleType>(),
                Err(Error::UnknownType(_))
            ));
        }
    }

    #[test]
    fn type_names_round_trip_case_insensitively() {
        for raw in ["a2", "A2", " g2 ", "e8"] {
            let t: SimpleType = raw.parse().unwrap();
            let canonical = t.to_string();
            assert_eq!(canonical.parse::<SimpleType>().unwrap(), t);
            assert_eq!(canonical, canonical.to_uppercase());
        }
    }

    proptest! {
        #[test]
        fn pairing_is_bilinear_over_the_weight_lattice(
            name in prop::sample::select(vec!["A1", "A3", "B3", "C2", "D4", "F4", "G2"]),
            seed_a in prop::collection::vec(-10i64..=10, 4),
            seed_b in prop::collection::vec(-10i64..=10, 4),
            pick in 0usize..64,
        ) {
            let sys = rs(name);
            let n = sys.rank();
            let lam = Weight::new(seed_a.iter().cycle().take(n).copied().collect());
            let mu = Weight::new(seed_b.iter().cycle().take(n).copied().collect());
            let root = &sys.positive_roots()[pick % sys.positive_roots().len()];
            let lhs = pairing(&(&lam + &mu), root).unwrap();
            let rhs = pairing(&lam, root).unwrap() + pairing(&mu, root).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
