//! Simple reflections, the dot action `w·λ = w(λ+ρ) − ρ`, and chamber walks.
//!
//! The Weyl group is never materialized. A walk repeatedly reflects in a wall
//! the current point lies strictly on the wrong side of; the number of steps
//! is the length of the Weyl element that carries the start into the
//! dominant chamber.

use crate::error::Result;
use crate::rootsys::{RootSystem, Weight};

/// Result of walking `λ` into the dominant chamber under the dot action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DotNormalForm {
    /// `λ + ρ` lies on a reflecting hyperplane.
    Singular,
    /// `w·λ = dominant` with `ℓ(w) = length`; `word` lists the simple
    /// reflections applied, first to last.
    Regular {
        length: usize,
        dominant: Weight,
        word: Vec<usize>,
    },
}

impl DotNormalForm {
    pub fn is_singular(&self) -> bool {
        matches!(self, DotNormalForm::Singular)
    }
}

/// Which negative coordinate the walk reflects in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivot {
    #[default]
    SmallestIndex,
    LargestIndex,
}

impl Pivot {
    fn pick(self, mu: &[i64]) -> Option<usize> {
        match self {
            Pivot::SmallestIndex => mu.iter().position(|&c| c < 0),
            Pivot::LargestIndex => mu.iter().rposition(|&c| c < 0),
        }
    }
}

/// `s_i λ = λ − ⟨λ, α_i^v⟩ α_i`.
pub fn reflect_simple(rs: &RootSystem, i: usize, lambda: &Weight) -> Result<Weight> {
    rs.check_simple_index(i)?;
    rs.check_weight(lambda)?;
    Ok(reflect_unchecked(rs, i, lambda, 0))
}

/// `s_i·λ = λ − (⟨λ, α_i^v⟩ + 1) α_i`.
pub fn dot_reflect_simple(rs: &RootSystem, i: usize, lambda: &Weight) -> Result<Weight> {
    rs.check_simple_index(i)?;
    rs.check_weight(lambda)?;
    Ok(reflect_unchecked(rs, i, lambda, 1))
}

// λ − (λ_i + shift) α_i, reading α_i off column i of the Cartan matrix.
fn reflect_unchecked(rs: &RootSystem, i: usize, lambda: &Weight, shift: i64) -> Weight {
    let k = lambda.coords()[i] + shift;
    let cartan = rs.cartan_matrix();
    Weight::new(
        lambda
            .coords()
            .iter()
            .enumerate()
            .map(|(j, &c)| c - k * cartan[j][i])
            .collect(),
    )
}

fn reflect_in_place(rs: &RootSystem, i: usize, mu: &mut [i64]) {
    let k = mu[i];
    for (j, row) in rs.cartan_matrix().iter().enumerate() {
        mu[j] -= k * row[i];
    }
}

pub fn make_dominant_dot(rs: &RootSystem, lambda: &Weight) -> DotNormalForm {
    make_dominant_dot_with(rs, lambda, Pivot::SmallestIndex)
}

/// Chamber walk on `μ = λ + ρ` with plain reflections.
///
/// Panics if `lambda` has the wrong rank.
pub fn make_dominant_dot_with(rs: &RootSystem, lambda: &Weight, pivot: Pivot) -> DotNormalForm {
    assert_eq!(lambda.rank(), rs.rank(), "weight rank mismatch");
    let mut mu: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let mut word = Vec::new();
    loop {
        if mu.contains(&0) {
            return DotNormalForm::Singular;
        }
        match pivot.pick(&mu) {
            None => {
                let dominant = Weight::new(mu.iter().map(|c| c - 1).collect());
                return DotNormalForm::Regular {
                    length: word.len(),
                    dominant,
                    word,
                };
            }
            Some(i) => {
                reflect_in_place(rs, i, &mut mu);
                word.push(i);
            }
        }
    }
}

/// Dominant representative of the plain `W`-orbit of `λ`, with the number of
/// reflections used.
pub fn dominant_representative_plain(rs: &RootSystem, lambda: &Weight) -> (Weight, usize) {
    assert_eq!(lambda.rank(), rs.rank(), "weight rank mismatch");
    let mut mu = lambda.coords().to_vec();
    let mut steps = 0;
    while let Some(i) = Pivot::SmallestIndex.pick(&mu) {
        reflect_in_place(rs, i, &mut mu);
        steps += 1;
    }
    (Weight::new(mu), steps)
}

/// Applies the dot action of `s_{word[k]}` for `k` from last to first.
pub fn apply_word_dot_reversed(rs: &RootSystem, word: &[usize], lambda: &Weight) -> Weight {
    word.iter()
        .rev()
        .fold(lambda.clone(), |acc, &i| reflect_unchecked(rs, i, &acc, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn rank2_box(radius: i64) -> Vec<Weight> {
        let mut out = vec![];
        for a in -radius..=radius {
            for b in -radius..=radius {
                out.push(w(&[a, b]));
            }
        }
        out
    }

    #[test]
    fn simple_reflections() {
        let a2 = rs("A2");
        assert_eq!(reflect_simple(&a2, 0, &w(&[1, 0])).unwrap(), w(&[-1, 1]));
        assert_eq!(reflect_simple(&a2, 1, &w(&[0, 0])).unwrap(), w(&[0, 0]));
        let a1 = rs("A1");
        for m in -5..=5 {
            assert_eq!(reflect_simple(&a1, 0, &w(&[m])).unwrap(), w(&[-m]));
        }
        assert!(reflect_simple(&a2, 2, &w(&[0, 0])).is_err());
        assert!(reflect_simple(&a2, 0, &w(&[0])).is_err());
    }

    #[test]
    fn dot_reflections() {
        let a1 = rs("A1");
        assert_eq!(dot_reflect_simple(&a1, 0, &w(&[-2])).unwrap(), w(&[0]));
        let a2 = rs("A2");
        // s_1(λ+ρ) − ρ: (−1,2) ↦ (1,1) ↦ (0,0)
        assert_eq!(
            dot_reflect_simple(&a2, 0, &w(&[-2, 1])).unwrap(),
            w(&[0, 0])
        );
        for t in ["A3", "G2", "B3"] {
            let r = rs(t);
            let minus_rho = -&r.rho();
            for i in 0..r.rank() {
                assert_eq!(dot_reflect_simple(&r, i, &minus_rho).unwrap(), minus_rho);
            }
        }
        assert!(dot_reflect_simple(&a2, 5, &w(&[0, 0])).is_err());
    }

    #[test]
    fn dot_reflection_is_an_involution() {
        let g2 = rs("G2");
        for lam in rank2_box(4) {
            for i in 0..2 {
                let once = dot_reflect_simple(&g2, i, &lam).unwrap();
                assert_eq!(dot_reflect_simple(&g2, i, &once).unwrap(), lam);
            }
        }
    }

    #[test]
    fn walk_examples() {
        let a2 = rs("A2");
        assert_eq!(
            make_dominant_dot(&a2, &w(&[2, 3])),
            DotNormalForm::Regular {
                length: 0,
                dominant: w(&[2, 3]),
                word: vec![]
            }
        );
        assert!(make_dominant_dot(&a2, &w(&[-1, -1])).is_singular());
        let a1 = rs("A1");
        match make_dominant_dot(&a1, &w(&[-3])) {
            DotNormalForm::Regular {
                length, dominant, ..
            } => {
                assert_eq!(length, 1);
                assert_eq!(dominant, w(&[1]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn plain_representatives() {
        let a2 = rs("A2");
        assert_eq!(
            dominant_representative_plain(&a2, &w(&[1, 2])),
            (w(&[1, 2]), 0)
        );
        assert_eq!(
            dominant_representative_plain(&rs("A1"), &w(&[-4])),
            (w(&[4]), 1)
        );
        // Orbit of (2,1) in A2, closed under s_1, s_2.
        let mut orbit = vec![w(&[2, 1])];
        let mut k = 0;
        while k < orbit.len() {
            for i in 0..2 {
                let img = reflect_simple(&a2, i, &orbit[k]).unwrap();
                if !orbit.contains(&img) {
                    orbit.push(img);
                }
            }
            k += 1;
        }
        assert_eq!(orbit.len(), 6);
        assert!(orbit.contains(&w(&[-1, -2])));
        assert_eq!(
            dominant_representative_plain(&a2, &w(&[-1, -2])).0,
            w(&[2, 1])
        );
    }

    #[test]
    fn pivot_independence() {
        for t in ["A2", "B2", "G2"] {
            let r = rs(t);
            for lam in rank2_box(6) {
                let a = make_dominant_dot_with(&r, &lam, Pivot::SmallestIndex);
                let b = make_dominant_dot_with(&r, &lam, Pivot::LargestIndex);
                match (a, b) {
                    (DotNormalForm::Singular, DotNormalForm::Singular) => {}
                    (
                        DotNormalForm::Regular {
                            length: l1,
                            dominant: d1,
                            ..
                        },
                        DotNormalForm::Regular {
                            length: l2,
                            dominant: d2,
                            ..
                        },
                    ) => {
                        assert_eq!((l1, d1), (l2, d2), "{t} {lam}");
                    }
                    (a, b) => panic!("{t} {lam}: {a:?} vs {b:?}"),
                }
            }
        }
    }

    #[test]
    fn singular_iff_on_a_wall() {
        for t in ["A2", "B2", "G2"] {
            let r = rs(t);
            for lam in rank2_box(5) {
                let shifted = &lam + &r.rho();
                let on_wall = r
                    .positive_roots()
                    .iter()
                    .any(|b: &Root| r.pairing(&shifted, b).unwrap() == 0);
                assert_eq!(
                    make_dominant_dot(&r, &lam).is_singular(),
                    on_wall,
                    "{t} {lam}"
                );
            }
        }
    }

    #[test]
    fn reversed_word_recovers_input() {
        for t in ["A2", "B2", "G2"] {
            let r = rs(t);
            for lam in rank2_box(5) {
                if let DotNormalForm::Regular { dominant, word, .. } = make_dominant_dot(&r, &lam) {
                    assert_eq!(apply_word_dot_reversed(&r, &word, &dominant), lam);
                }
            }
        }
    }

    #[test]
    fn length_is_bounded_by_positive_roots() {
        let e8 = rs("E8");
        let lam = -&(3 * &e8.rho());
        match make_dominant_dot(&e8, &lam) {
            DotNormalForm::Regular {
                length, dominant, ..
            } => {
                // w0 sends -3ρ + ρ = -2ρ to 2ρ.
                assert_eq!(length, 120);
                assert_eq!(dominant, e8.rho());
            }
            DotNormalForm::Singular => panic!("regular weight reported singular"),
        }
    }
}
