//! Representation-ring bookkeeping: virtual modules in the irreducible basis,
//! the Weyl dimension formula, Freudenthal multiplicities, and the `SL_2`
//! Clebsch–Gordan rule.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem, Weight};

/// A finite signed combination `Σ n_μ [V(μ)]` of irreducibles, indexed by
/// dominant highest weights. Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VirtualModule {
    cartan: CartanType,
    terms: BTreeMap<Weight, i64>,
}

impl VirtualModule {
    pub fn new(cartan: CartanType) -> Self {
        VirtualModule {
            cartan,
            terms: BTreeMap::new(),
        }
    }

    /// `[V(μ)]`.
    pub fn irreducible(rs: &RootSystem, mu: Weight) -> Result<Self> {
        rs.check_weight(&mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu));
        }
        let mut v = VirtualModule::new(rs.cartan_type());
        v.terms.insert(mu, 1);
        Ok(v)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn multiplicity(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    /// Terms in increasing order of highest weight.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &n)| (w, n))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&n| n > 0)
    }

    pub(crate) fn add_term(&mut self, mu: Weight, n: i64) {
        debug_assert!(mu.is_dominant());
        if n == 0 {
            return;
        }
        let entry = self.terms.entry(mu).or_insert(0);
        *entry += n;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub(crate) fn add_assign(&mut self, other: &VirtualModule) {
        debug_assert_eq!(self.cartan, other.cartan);
        for (w, &n) in &other.terms {
            self.add_term(w.clone(), n);
        }
    }

    pub fn add(&self, other: &VirtualModule) -> Result<VirtualModule> {
        if self.cartan != other.cartan {
            return Err(Error::MixedRootSystems(self.cartan, other.cartan));
        }
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn negate(&self) -> VirtualModule {
        self.scale(-1)
    }

    pub fn scale(&self, n: i64) -> VirtualModule {
        let mut out = VirtualModule::new(self.cartan);
        if n != 0 {
            out.terms = self
                .terms
                .iter()
                .map(|(w, &m)| (w.clone(), m * n))
                .collect();
        }
        out
    }

    /// Signed dimension `Σ n_μ dim V(μ)`.
    pub fn dimension(&self, rs: &RootSystem) -> Result<BigInt> {
        if rs.cartan_type() != self.cartan {
            return Err(Error::MixedRootSystems(self.cartan, rs.cartan_type()));
        }
        let mut total = BigInt::zero();
        for (w, &n) in &self.terms {
            total += BigInt::from(n) * BigInt::from(weyl_dimension(rs, w)?);
        }
        Ok(total)
    }
}

impl fmt::Display for VirtualModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, &n)) in self.terms.iter().rev().enumerate() {
            let sign = match (k, n < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let a = n.abs();
            if a == 1 {
                write!(f, "{sign}[V{w}]")?;
            } else {
                write!(f, "{sign}{a}[V{w}]")?;
            }
        }
        Ok(())
    }
}

/// Weight multiplicities of a module.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, u64>,
}

impl FormalCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, u64)>) -> Self {
        let mut c = FormalCharacter::new();
        for (w, n) in terms {
            c.add_weight(w, n);
        }
        c
    }

    pub fn add_weight(&mut self, w: Weight, n: u64) {
        if n > 0 {
            *self.terms.entry(w).or_insert(0) += n;
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.terms.iter().map(|(w, &n)| (w, n))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn sum(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, &n) in &other.terms {
            out.add_weight(w.clone(), n);
        }
        out
    }

    /// Character of the tensor product.
    pub fn tensor(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = FormalCharacter::new();
        for (a, &m) in &self.terms {
            for (b, &n) in &other.terms {
                out.add_weight(a + b, m * n);
            }
        }
        out
    }
}

/// `dim V(μ) = Π_{β>0} (μ+ρ, β) / (ρ, β)`, exactly.
pub fn weyl_dimension(rs: &RootSystem, mu: &Weight) -> Result<BigUint> {
    rs.check_weight(mu)?;
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    let shifted = mu + &rs.rho();
    let rho = rs.rho();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for beta in rs.positive_roots() {
        let a = rs.inner_weight_root(&shifted, beta);
        let b = rs.inner_weight_root(&rho, beta);
        assert!(a > 0 && b > 0);
        num *= BigUint::from(a as u64);
        den *= BigUint::from(b as u64);
    }
    assert!(
        (&num % &den).is_zero(),
        "Weyl dimension is not integral for {mu}"
    );
    Ok(num / den)
}

/// Full weight-multiplicity table of `V(μ)` by Freudenthal's recursion.
pub fn freudenthal_character(rs: &RootSystem, mu: &Weight) -> Result<FormalCharacter> {
    rs.check_weight(mu)?;
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    let n = rs.rank();
    let d = rs.symmetrizers();

    // Saturated weight set generated from μ by simple-root strings. Each weight
    // carries γ with λ = μ − Σ γ_j α_j.
    let mut depth: HashMap<Weight, Vec<i64>> = HashMap::new();
    let mut queue = VecDeque::new();
    depth.insert(mu.clone(), vec![0; n]);
    queue.push_back(mu.clone());
    while let Some(lam) = queue.pop_front() {
        let gamma = depth[&lam].clone();
        for i in 0..n {
            let top = lam.coords()[i];
            let alpha = rs.simple_root_weight(i);
            let mut cur = lam.clone();
            let mut g = gamma.clone();
            for _ in 0..top.max(0) {
                cur = &cur - &alpha;
                g[i] += 1;
                if !depth.contains_key(&cur) {
                    depth.insert(cur.clone(), g.clone());
                    queue.push_back(cur.clone());
                }
            }
        }
    }

    let mut order: Vec<(Weight, Vec<i64>)> = depth.into_iter().collect();
    order.sort_by(|a, b| {
        let la: i64 = a.1.iter().sum();
        let lb: i64 = b.1.iter().sum();
        la.cmp(&lb).then_with(|| b.0.cmp(&a.0))
    });

    // 2(μ+ρ, γ) − (γ, γ) = |μ+ρ|² − |λ+ρ|²
    let mu_rho = mu + &rs.rho();
    let mut mult: HashMap<Weight, i128> = HashMap::with_capacity(order.len());
    for (lam, gamma) in &order {
        if gamma.iter().all(|&g| g == 0) {
            mult.insert(lam.clone(), 1);
            continue;
        }
        let lin: i64 = (0..n).map(|j| gamma[j] * d[j] * mu_rho.coords()[j]).sum();
        let den = 2 * lin - rs.inner_roots(gamma, gamma);
        assert!(den > 0, "Freudenthal denominator vanished at {lam}");
        let mut num: i128 = 0;
        for (beta, beta_w) in rs.positive_roots().iter().zip(rs.positive_root_weights()) {
            let mut cur = lam + beta_w;
            while let Some(&m) = mult.get(&cur) {
                num += m * rs.inner_weight_root(&cur, beta) as i128;
                cur = &cur + beta_w;
            }
        }
        let num = 2 * num;
        assert!(num % den as i128 == 0, "non-integral multiplicity at {lam}");
        mult.insert(lam.clone(), num / den as i128);
    }

    Ok(FormalCharacter::from_terms(
        mult.into_iter().map(|(w, m)| (w, m as u64)),
    ))
}

/// `V_a ⊗ V_b = ⊕ V_c` for `c = a+b, a+b−2, …, |a−b|`.
pub fn sl2_clebsch_gordan(a: i64, b: i64) -> Result<Vec<i64>> {
    if a < 0 {
        return Err(Error::Negative {
            what: "Clebsch-Gordan level",
            value: a,
        });
    }
    if b < 0 {
        return Err(Error::Negative {
            what: "Clebsch-Gordan level",
            value: b,
        });
    }
    Ok((0..=a.min(b)).map(|j| a + b - 2 * j).collect())
}
