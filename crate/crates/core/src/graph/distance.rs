use super::Graph;

/// Marker for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Hop distances from `s` to every vertex.
pub fn bfs(g: &Graph, s: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = std::collections::VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs hop distances, with eccentricities and diameter taken over
/// finite entries only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> DistanceMatrix {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(bfs(g, s));
        }
        let ecc: Vec<u32> = (0..n)
            .map(|u| {
                dist[u * n..(u + 1) * n]
                    .iter()
                    .copied()
                    .filter(|&d| d != UNREACHABLE)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        DistanceMatrix {
            n,
            dist,
            ecc,
            diameter,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw entry; [`UNREACHABLE`] across components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn finite(&self, u: usize, v: usize) -> Option<u32> {
        Some(self.get(u, v)).filter(|&d| d != UNREACHABLE)
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.ecc
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }
}
