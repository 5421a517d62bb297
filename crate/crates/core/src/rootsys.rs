//! Finite crystallographic root systems.
//!
//! Convention: `cartan[i][j] = ⟨α_j, α_i^v⟩`, so column `j` of the Cartan
//! matrix is the simple root `α_j` written in fundamental-weight coordinates.
//! Simple roots follow Bourbaki numbering.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A simple Cartan type such as `A2` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::UnsupportedType {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::BadCartanType(s.to_string()))?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::BadCartanType(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

/// An integral weight in fundamental-weight coordinates: `λ_i = ⟨λ, α_i^v⟩`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|c| self * c).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

/// A root in simple-root coordinates: `β = Σ_j b_j α_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(simple_coords: Vec<i64>) -> Self {
        Root(simple_coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn simple_coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&b| b >= 0) && self.0.iter().any(|&b| b > 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Weight(self.0.clone()))
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

/// An immutable finite root system with its positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    positive_roots: Vec<Root>,
    // Positive roots in fundamental coordinates, same order as `positive_roots`.
    positive_root_weights: Vec<Weight>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_matrix(cartan_type);
        let symmetrizers = symmetrizers(&cartan);
        let positive_roots = reflection_closure(&cartan, None);
        let positive_root_weights = positive_roots
            .iter()
            .map(|b| root_to_weight(&cartan, b))
            .collect();
        RootSystem {
            cartan_type,
            cartan,
            symmetrizers,
            positive_roots,
            positive_root_weights,
        }
    }

    /// Convenience constructor from a series letter and rank.
    pub fn of(series: Series, rank: usize) -> Result<Self> {
        Ok(Self::new(CartanType::new(series, rank)?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_root_weights
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Validates and wraps raw coordinates.
    pub fn weight(&self, coords: Vec<i64>) -> Result<Weight> {
        let w = Weight(coords);
        self.check_weight(&w)?;
        Ok(w)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: w.rank(),
            });
        }
        Ok(())
    }

    pub fn check_simple_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::SimpleIndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `ρ`, the all-ones vector in fundamental coordinates.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `β` rewritten in fundamental-weight coordinates.
    pub fn root_as_weight(&self, beta: &Root) -> Weight {
        root_to_weight(&self.cartan, beta)
    }

    /// The simple root `α_i` in fundamental coordinates (column `i` of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    pub fn is_root(&self, beta: &Root) -> bool {
        let pos = if beta.is_positive() {
            beta.clone()
        } else {
            -beta
        };
        self.positive_roots
            .binary_search_by(|r| root_order(r, &pos))
            .is_ok()
    }

    /// `(λ, β)` with `(ω_i, α_j) = δ_ij d_j`.
    pub(crate) fn inner_weight_root(&self, lambda: &Weight, beta: &Root) -> i64 {
        beta.0
            .iter()
            .zip(&self.symmetrizers)
            .zip(&lambda.0)
            .map(|((b, d), l)| b * d * l)
            .sum()
    }

    /// `(β, γ)` for two vectors in simple-root coordinates.
    pub(crate) fn inner_roots(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &b) in beta.iter().enumerate().filter(|(_, b)| **b != 0) {
            let row = &self.cartan[i];
            let dot: i64 = gamma.iter().zip(row).map(|(g, a)| g * a).sum();
            acc += b * self.symmetrizers[i] * dot;
        }
        acc
    }

    /// `⟨λ, β^v⟩ = 2(λ, β)/(β, β)` for any root `β`, positive or negative.
    pub fn pairing(&self, lambda: &Weight, beta: &Root) -> Result<i64> {
        self.check_weight(lambda)?;
        if beta.0.len() != self.rank() || !self.is_root(beta) {
            return Err(Error::NotARoot(beta.0.clone()));
        }
        Ok(self.coroot_pairing(lambda, beta))
    }

    /// Unchecked pairing; `beta` must be a root.
    pub(crate) fn coroot_pairing(&self, lambda: &Weight, beta: &Root) -> i64 {
        let num = 2 * self.inner_weight_root(lambda, beta);
        let den = self.inner_roots(&beta.0, &beta.0);
        assert!(den > 0 && num % den == 0, "non-integral coroot pairing");
        num / den
    }
}

fn root_to_weight(cartan: &[Vec<i64>], beta: &Root) -> Weight {
    Weight(
        cartan
            .iter()
            .map(|row| row.iter().zip(&beta.0).map(|(a, b)| a * b).sum())
            .collect(),
    )
}

/// Height first, then lexicographic on simple coordinates.
fn root_order(a: &Root, b: &Root) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0))
}

/// Positive roots generated from `seed` (default: the simple roots) by
/// closing under simple reflections.
pub(crate) fn reflection_closure(cartan: &[Vec<i64>], seed: Option<&[Root]>) -> Vec<Root> {
    let n = cartan.len();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let start: Vec<Root> = match seed {
        Some(s) => s.to_vec(),
        None => (0..n).map(|i| Root::simple(n, i)).collect(),
    };
    for r in start {
        if found.insert(r.0.clone()) {
            queue.push_back(r);
        }
    }
    while let Some(beta) = queue.pop_front() {
        let as_weight = root_to_weight(cartan, &beta);
        for i in 0..n {
            // s_i β = β − ⟨β, α_i^v⟩ α_i
            let mut image = beta.0.clone();
            image[i] -= as_weight.0[i];
            let image = Root(image);
            if image.is_positive() && found.insert(image.0.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Root> = found.into_iter().map(Root).collect();
    roots.sort_by(root_order);
    roots
}

/// Minimal positive integers `d_i` with `d_i A[i][j] = d_j A[j][i]`.
fn symmetrizers(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // Propagate rationals num/den across the (connected) Dynkin diagram.
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    num[0] = 1;
    den[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i == j || cartan[i][j] == 0 || den[j] != 0 {
                continue;
            }
            // d_j = d_i A[i][j] / A[j][i]
            let (mut p, mut q) = (num[i] * cartan[i][j], den[i] * cartan[j][i]);
            if q < 0 {
                p = -p;
                q = -q;
            }
            let g = p.gcd(&q);
            num[j] = p / g;
            den[j] = q / g;
            queue.push_back(j);
        }
    }
    let l = den.iter().fold(1i64, |acc, &d| acc.lcm(&d));
    let ints: Vec<i64> = (0..n).map(|i| num[i] * (l / den[i])).collect();
    let g = ints.iter().fold(0i64, |acc, &d| acc.gcd(&d));
    ints.into_iter().map(|d| d / g).collect()
}

/// Builds `A[i][j] = 2(α_i, α_j)/(α_i, α_i)` from a scaled Gram matrix.
fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    // Squared lengths (scaled so every entry is an integer) and bonds (i, j, (α_i, α_j)).
    let mut len2 = vec![2i64; n];
    let mut bonds: Vec<(usize, usize, i64)> = Vec::new();
    let chain = |bonds: &mut Vec<(usize, usize, i64)>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            bonds.push((i, i + 1, -1));
        }
    };
    match t.series {
        Series::A => chain(&mut bonds, n),
        Series::B => {
            // α_1..α_{n-1} long, α_n short
            len2 = vec![4; n];
            len2[n - 1] = 2;
            for i in 0..n - 1 {
                bonds.push((i, i + 1, -2));
            }
        }
        Series::C => {
            // α_1..α_{n-1} short, α_n long
            len2[n - 1] = 4;
            chain(&mut bonds, n - 1);
            bonds.push((n - 2, n - 1, -2));
        }
        Series::D => {
            chain(&mut bonds, n - 1);
            bonds.push((n - 3, n - 1, -1));
        }
        Series::E => {
            bonds.push((0, 2, -1));
            bonds.push((1, 3, -1));
            for i in 2..n - 1 {
                bonds.push((i, i + 1, -1));
            }
        }
        Series::F => {
            len2 = vec![4, 4, 2, 2];
            bonds = vec![(0, 1, -2), (1, 2, -2), (2, 3, -1)];
        }
        Series::G => {
            len2 = vec![2, 6];
            bonds = vec![(0, 1, -3)];
        }
    }
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        gram[i][i] = len2[i];
    }
    for (i, j, v) in bonds {
        gram[i][j] = v;
        gram[j][i] = v;
    }
    (0..n)
        .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn rank_bounds() {
        assert!(CartanType::new(Series::A, 0).is_err());
        assert!(CartanType::new(Series::B, 1).is_err());
        assert!(CartanType::new(Series::C, 1).is_err());
        assert!(CartanType::new(Series::D, 3).is_err());
        assert!(CartanType::new(Series::E, 5).is_err());
        assert!(CartanType::new(Series::E, 9).is_err());
        assert!(CartanType::new(Series::F, 3).is_err());
        assert!(CartanType::new(Series::G, 3).is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
        assert_eq!("b3".parse::<CartanType>().unwrap().to_string(), "B3");
    }

    #[test]
    fn a1_base_case() {
        let a1 = rs("A1");
        assert_eq!(a1.cartan_matrix(), &[vec![2]]);
        assert_eq!(a1.positive_roots(), &[Root::new(vec![1])]);
    }

    #[test]
    fn a2_positive_roots() {
        let a2 = rs("A2");
        let roots: Vec<Vec<i64>> = a2.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn g2_roots_and_symmetrizers() {
        let g2 = rs("G2");
        assert_eq!(g2.num_positive_roots(), 6);
        assert_eq!(g2.symmetrizers(), &[1, 3]);
        assert_eq!(g2.cartan_matrix(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(g2.simple_root_weight(0).coords(), &[2, -1]);
        assert_eq!(g2.simple_root_weight(1).coords(), &[-3, 2]);
        let highest = g2.positive_roots().last().unwrap();
        assert_eq!(highest.simple_coords(), &[3, 2]);
    }

    #[test]
    fn non_simply_laced_symmetrizers() {
        assert_eq!(rs("B3").symmetrizers(), &[2, 2, 1]);
        assert_eq!(rs("C3").symmetrizers(), &[1, 1, 2]);
        assert_eq!(rs("F4").symmetrizers(), &[2, 2, 1, 1]);
        assert_eq!(rs("E8").symmetrizers(), &[1; 8]);
        // B_n: ⟨α_n, α_{n-1}^v⟩ = -1 and ⟨α_{n-1}, α_n^v⟩ = -2.
        let b3 = rs("B3");
        assert_eq!(b3.cartan_matrix()[1][2], -1);
        assert_eq!(b3.cartan_matrix()[2][1], -2);
    }

    #[test]
    fn cartan_matrix_shape() {
        for t in ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let a = rs(t);
            let c = a.cartan_matrix();
            let d = a.symmetrizers();
            for i in 0..a.rank() {
                assert_eq!(c[i][i], 2);
                for j in 0..a.rank() {
                    if i != j {
                        assert!(c[i][j] <= 0);
                        assert_eq!(c[i][j] == 0, c[j][i] == 0);
                    }
                    assert_eq!(d[i] * c[i][j], d[j] * c[j][i]);
                }
            }
        }
    }

    #[test]
    fn classical_root_counts() {
        let mut types = vec![];
        for n in 1..=8 {
            types.push(CartanType::new(Series::A, n).unwrap());
        }
        for n in 2..=8 {
            types.push(CartanType::new(Series::B, n).unwrap());
            types.push(CartanType::new(Series::C, n).unwrap());
        }
        for n in 4..=8 {
            types.push(CartanType::new(Series::D, n).unwrap());
        }
        for n in 6..=8 {
            types.push(CartanType::new(Series::E, n).unwrap());
        }
        types.push(CartanType::new(Series::F, 4).unwrap());
        types.push(CartanType::new(Series::G, 2).unwrap());
        for t in types {
            let r = RootSystem::new(t);
            assert_eq!(r.num_positive_roots(), t.positive_root_count(), "{t}");
            assert!(r.positive_roots().iter().all(Root::is_positive));
            let simple: Vec<&Root> = r
                .positive_roots()
                .iter()
                .filter(|b| b.height() == 1)
                .collect();
            assert_eq!(simple.len(), r.rank());
        }
    }

    #[test]
    fn closure_is_idempotent() {
        for t in ["A3", "B3", "G2", "F4", "E6"] {
            let r = rs(t);
            let again = reflection_closure(r.cartan_matrix(), Some(r.positive_roots()));
            assert_eq!(again, r.positive_roots());
        }
    }

    #[test]
    fn rho_and_pairings() {
        assert_eq!(rs("A1").rho().coords(), &[1]);
        assert_eq!(rs("A2").rho().coords(), &[1, 1]);
        assert_eq!(rs("B3").rho().coords(), &[1, 1, 1]);

        let a2 = rs("A2");
        let rho = a2.rho();
        assert_eq!(a2.pairing(&rho, &Root::new(vec![1, 1])).unwrap(), 2);
        assert_eq!(a2.pairing(&rho, &Root::new(vec![-1, -1])).unwrap(), -2);
        let lam = Weight::new(vec![3, -7]);
        assert_eq!(a2.pairing(&lam, &Root::simple(2, 0)).unwrap(), 3);
        assert_eq!(a2.pairing(&lam, &Root::simple(2, 1)).unwrap(), -7);

        assert!(matches!(
            a2.pairing(&rho, &Root::new(vec![0, 0])),
            Err(Error::NotARoot(_))
        ));
        assert!(a2.pairing(&rho, &Root::new(vec![2, 1])).is_err());
        assert!(a2
            .pairing(&Weight::new(vec![1]), &Root::simple(2, 0))
            .is_err());
    }

    #[test]
    fn pairing_of_rho_with_every_simple_coroot_is_one() {
        for t in ["B4", "C3", "F4", "G2", "E7"] {
            let r = rs(t);
            for i in 0..r.rank() {
                assert_eq!(r.pairing(&r.rho(), &Root::simple(r.rank(), i)).unwrap(), 1);
            }
        }
    }

    #[test]
    fn pairing_is_integral_on_a_box() {
        for t in ["B2", "G2", "C3", "B3"] {
            let r = rs(t);
            let n = r.rank();
            let mut coords = vec![-3i64; n];
            loop {
                let w = Weight::new(coords.clone());
                for b in r.positive_roots() {
                    r.pairing(&w, b).unwrap();
                }
                let mut k = 0;
                while k < n && coords[k] == 3 {
                    coords[k] = -3;
                    k += 1;
                }
                if k == n {
                    break;
                }
                coords[k] += 1;
            }
        }
    }

    #[test]
    fn root_as_weight_columns() {
        assert_eq!(rs("A1").root_as_weight(&Root::simple(1, 0)).coords(), &[2]);
        assert_eq!(
            rs("A2").root_as_weight(&Root::simple(2, 0)).coords(),
            &[2, -1]
        );
        for t in ["G2", "B3", "D4"] {
            let r = rs(t);
            for i in 0..r.rank() {
                let w = r.root_as_weight(&Root::simple(r.rank(), i));
                for j in 0..r.rank() {
                    assert_eq!(w.coords()[j], r.cartan_matrix()[j][i]);
                }
                assert_eq!(w.coords()[i], 2);
            }
        }
    }
}
