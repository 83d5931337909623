use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{invalid, Result};

/// Standard families. All use labels "0".."n-1".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n}`: center "0" and `n` leaves.
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    /// Uniform labelled tree from a seeded Prüfer sequence.
    RandomTree {
        n: usize,
        seed: u64,
    },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path(n) => {
            nonzero(n)?;
            let mut g = Graph::with_order(n);
            for i in 1..n {
                g.add_edge(i - 1, i);
            }
            Ok(g)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
            }
            let mut g = generate(&Family::Path(n))?;
            g.add_edge(n - 1, 0);
            Ok(g)
        }
        Family::Complete(n) => {
            nonzero(n)?;
            let mut g = Graph::with_order(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        Family::Star(n) => {
            nonzero(n)?;
            let mut g = Graph::with_order(n + 1);
            for v in 1..=n {
                g.add_edge(0, v);
            }
            Ok(g)
        }
        Family::CompleteMultipartite(ref sizes) => {
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(invalid("part sizes must be non-empty and positive"));
            }
            let n: usize = sizes.iter().sum();
            let mut part = Vec::with_capacity(n);
            for (i, &s) in sizes.iter().enumerate() {
                part.extend(std::iter::repeat(i).take(s));
            }
            let mut g = Graph::with_order(n);
            for u in 0..n {
                for v in u + 1..n {
                    if part[u] != part[v] {
                        g.add_edge(u, v);
                    }
                }
            }
            Ok(g)
        }
        Family::RandomTree { n, seed } => {
            nonzero(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let seq: Vec<usize> = (0..n.saturating_sub(2))
                .map(|_| rng.gen_range(0..n))
                .collect();
            Ok(prufer_decode(n, &seq))
        }
    }
}

fn nonzero(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("family size must be at least 1"));
    }
    Ok(())
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut g = Graph::with_order(n);
    if n == 2 {
        g.add_edge(0, 1);
    }
    if n <= 2 {
        return g;
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    for &s in seq {
        let Reverse(leaf) = leaves
            .pop()
            .expect("a Prüfer sequence always leaves a leaf");
        g.add_edge(leaf, s);
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    g.add_edge(a, b);
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_edge_counts() {
        for n in 1..12 {
            assert_eq!(generate(&Family::Path(n)).unwrap().edge_count(), n - 1);
            assert_eq!(
                generate(&Family::Complete(n)).unwrap().edge_count(),
                n * (n - 1) / 2
            );
            assert_eq!(generate(&Family::Star(n)).unwrap().edge_count(), n);
            let t = generate(&Family::RandomTree { n, seed: n as u64 }).unwrap();
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_tree());
        }
        for n in 3..12 {
            assert_eq!(generate(&Family::Cycle(n)).unwrap().edge_count(), n);
        }
    }

    #[test]
    fn star_center_is_zero() {
        let g = generate(&Family::Star(6)).unwrap();
        assert_eq!(g.degree(0), 6);
        assert_eq!(g.leaves().len(), 6);
    }

    #[test]
    fn random_tree_is_seeded() {
        let a = generate(&Family::RandomTree { n: 10, seed: 7 }).unwrap();
        let b = generate(&Family::RandomTree { n: 10, seed: 7 }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 9);
        assert!(a.is_connected());
    }

    #[test]
    fn multipartite() {
        let g = generate(&Family::CompleteMultipartite(vec![3, 3])).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!(!g.has_edge(0, 1) && g.has_edge(0, 3));
    }

    #[test]
    fn zero_is_rejected() {
        assert!(generate(&Family::Path(0)).is_err());
        assert!(generate(&Family::Star(0)).is_err());
        assert!(generate(&Family::RandomTree { n: 0, seed: 1 }).is_err());
        assert!(generate(&Family::CompleteMultipartite(vec![2, 0])).is_err());
    }
}
