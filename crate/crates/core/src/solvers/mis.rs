use crate::error::Result;
use crate::reduction::{tangent_pairs, DiskInstance};

use super::SolveResult;

/// Simple undirected graph on `0..n`, edges stored with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl TangencyGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            assert!(b < n, "edge ({a}, {b}) outside 0..{n}");
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        TangencyGraph { n, edges, adjacency }
    }

    pub fn from_instance(d: &DiskInstance) -> Result<Self> {
        let pairs = tangent_pairs(d)?;
        Ok(Self::new(d.len(), pairs.into_iter().map(|p| (p.i, p.j))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &v in set {
            if inside[v] {
                return false;
            }
            inside[v] = true;
        }
        self.edges.iter().all(|&(a, b)| !(inside[a] && inside[b]))
    }
}

struct Bnb<'a> {
    g: &'a TangencyGraph,
    alive: Vec<bool>,
    current: Vec<usize>,
    best: Vec<usize>,
    explored: u64,
}

impl Bnb<'_> {
    fn degree(&self, v: usize) -> usize {
        self.g.adjacency[v].iter().filter(|&&u| self.alive[u]).count()
    }

    fn run(&mut self, remaining: usize) {
        self.explored += 1;
        if self.current.len() + remaining <= self.best.len() {
            return;
        }
        let mut pick = None;
        let mut max_degree = 0;
        for v in (0..self.g.n).filter(|&v| self.alive[v]) {
            let d = self.degree(v);
            if pick.is_none() || d > max_degree {
                pick = Some(v);
                max_degree = d;
            }
        }
        let Some(v) = pick else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        if max_degree == 0 {
            let before = self.current.len();
            self.current.extend((0..self.g.n).filter(|&u| self.alive[u]));
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.current.truncate(before);
            return;
        }

        // Include v: remove its closed neighbourhood.
        let removed: Vec<usize> = std::iter::once(v)
            .chain(self.g.adjacency[v].iter().copied())
            .filter(|&u| self.alive[u])
            .collect();
        for &u in &removed {
            self.alive[u] = false;
        }
        self.current.push(v);
        self.run(remaining - removed.len());
        self.current.pop();
        for &u in &removed {
            self.alive[u] = true;
        }

        // Exclude v.
        self.alive[v] = false;
        self.run(remaining - 1);
        self.alive[v] = true;
    }
}

fn greedy(g: &TangencyGraph) -> Vec<usize> {
    let mut alive = vec![true; g.n];
    let mut chosen = Vec::new();
    loop {
        let pick = (0..g.n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| g.adjacency[v].iter().filter(|&&u| alive[u]).count());
        let Some(v) = pick else { break };
        chosen.push(v);
        alive[v] = false;
        for &u in &g.adjacency[v] {
            alive[u] = false;
        }
    }
    chosen
}

/// Exact maximum independent set by branch and bound: branch on a vertex of
/// maximum remaining degree (take it and drop its neighbours, or drop it),
/// seeded with a min-degree greedy solution. The witness is sorted.
pub fn max_independent_set(g: &TangencyGraph) -> SolveResult {
    let mut bnb = Bnb {
        g,
        alive: vec![true; g.n],
        current: Vec::new(),
        best: greedy(g),
        explored: 0,
    };
    bnb.run(g.n);
    let mut witness = bnb.best;
    witness.sort_unstable();
    SolveResult {
        size: witness.len(),
        witness,
        explored: bnb.explored,
    }
}
