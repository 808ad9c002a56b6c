//! Unit-capacity vertex cuts via max-flow on the split graph.
//!
//! Every vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by an arc of
//! capacity 1 (or "infinite" for undeletable vertices). Graph edges become infinite arcs
//! `out(u) → in(v)` in both directions. Augmenting paths are found by BFS.

use std::collections::VecDeque;

use crate::graph::Graph;

const INF: u32 = u32::MAX / 4;

struct Arc {
    to: usize,
    cap: u32,
}

pub(crate) struct VertexFlow {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
    n: usize,
}

impl VertexFlow {
    /// Split network over `alive` vertices. `sources`/`sinks` are attached to the super
    /// terminals; `undeletable` vertices get infinite split arcs.
    pub(crate) fn new(
        g: &Graph,
        alive: &[bool],
        sources: &[usize],
        sinks: &[usize],
        undeletable: &[bool],
    ) -> VertexFlow {
        let n = g.n();
        let mut f = VertexFlow {
            arcs: Vec::new(),
            out: vec![Vec::new(); 2 * n + 2],
            source: 2 * n,
            sink: 2 * n + 1,
            n,
        };
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            f.add(2 * v, 2 * v + 1, if undeletable[v] { INF } else { 1 });
            for &w in g.neighbors(v) {
                if alive[w] {
                    f.add(2 * v + 1, 2 * w, INF);
                }
            }
        }
        for &s in sources {
            f.add(f.source, 2 * s, INF);
        }
        for &t in sinks {
            f.add(2 * t + 1, f.sink, INF);
        }
        f
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Pushes flow until none is left or the value exceeds `limit`; returns the value
    /// (capped at `limit + 1`).
    pub(crate) fn max_flow(&mut self, limit: usize) -> usize {
        let mut value = 0;
        while value <= limit {
            let mut pred = vec![usize::MAX; self.out.len()];
            let mut queue = VecDeque::from([self.source]);
            let mut seen = vec![false; self.out.len()];
            seen[self.source] = true;
            while let Some(x) = queue.pop_front() {
                if x == self.sink {
                    break;
                }
                for &a in &self.out[x] {
                    let y = self.arcs[a].to;
                    if self.arcs[a].cap > 0 && !seen[y] {
                        seen[y] = true;
                        pred[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[self.sink] {
                break;
            }
            let mut bottleneck = INF;
            let mut y = self.sink;
            while y != self.source {
                let a = pred[y];
                bottleneck = bottleneck.min(self.arcs[a].cap);
                y = self.arcs[a ^ 1].to;
            }
            if bottleneck >= INF {
                // An all-infinite path: no finite cut exists.
                return usize::MAX;
            }
            let mut y = self.sink;
            while y != self.source {
                let a = pred[y];
                self.arcs[a].cap -= bottleneck;
                self.arcs[a ^ 1].cap += bottleneck;
                y = self.arcs[a ^ 1].to;
            }
            value += bottleneck as usize;
        }
        value
    }

    /// Nodes reachable from the source in the residual network.
    fn source_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut queue = VecDeque::from([self.source]);
        seen[self.source] = true;
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Nodes that can reach the sink in the residual network.
    fn sink_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut queue = VecDeque::from([self.sink]);
        seen[self.sink] = true;
        while let Some(y) = queue.pop_front() {
            for &a in &self.out[y] {
                // `a` leaves y; its reverse `a ^ 1` enters y from `to`.
                let x = self.arcs[a].to;
                if self.arcs[a ^ 1].cap > 0 && !seen[x] {
                    seen[x] = true;
                    queue.push_back(x);
                }
            }
        }
        seen
    }

    /// Minimum cut closest to the source (after `max_flow`).
    pub(crate) fn cut_near_source(&self) -> Vec<usize> {
        let s = self.source_side();
        (0..self.n).filter(|&v| s[2 * v] && !s[2 * v + 1]).collect()
    }

    /// Minimum cut closest to the sink, i.e. farthest from the source.
    pub(crate) fn cut_near_sink(&self) -> Vec<usize> {
        let t = self.sink_side();
        (0..self.n).filter(|&v| !t[2 * v] && t[2 * v + 1]).collect()
    }
}
