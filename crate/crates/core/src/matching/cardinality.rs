//! Edmonds' blossom algorithm for maximum-cardinality matching.
//!
//! Blossoms are contracted implicitly: a union-find maps every vertex to the
//! base of the outermost blossom containing it, and the alternating tree is
//! threaded through `parent` links so an augmenting path can be unwound
//! through contracted blossoms without expanding them.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Unlabeled,
    Even,
    Odd,
}

/// Reusable scratch state for cardinality matching on one graph.
#[derive(Debug)]
pub(crate) struct CardinalityMatcher<'g> {
    adj: Vec<Vec<Vertex>>,
    mate: Vec<usize>,
    label: Vec<Label>,
    parent: Vec<usize>,
    dsu: Vec<usize>,
    base: Vec<usize>,
    mark: Vec<u32>,
    stamp: u32,
    queue: VecDeque<Vertex>,
    _graph: std::marker::PhantomData<&'g Graph>,
}

impl<'g> CardinalityMatcher<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        let adj = (0..n)
            .map(|v| graph.incident(v).iter().map(|&(u, _)| u).collect())
            .collect();
        CardinalityMatcher {
            adj,
            mate: vec![NONE; n],
            label: vec![Label::Unlabeled; n],
            parent: vec![NONE; n],
            dsu: (0..n).collect(),
            base: (0..n).collect(),
            mark: vec![0; n],
            stamp: 0,
            queue: VecDeque::new(),
            _graph: std::marker::PhantomData,
        }
    }

    /// Runs to a maximum matching; returns `mate[v]` (`None` if exposed).
    pub(crate) fn solve(mut self) -> Vec<Option<Vertex>> {
        let n = self.adj.len();
        // Greedy start; the blossom search only has to fix the remainder.
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        // A vertex left exposed by a failed search stays exposed for good.
        for root in 0..n {
            if self.mate[root] == NONE {
                self.augment_from(root);
            }
        }
        self.mate
            .into_iter()
            .map(|m| (m != NONE).then_some(m))
            .collect()
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.dsu[x] != x {
            self.dsu[x] = self.dsu[self.dsu[x]];
            x = self.dsu[x];
        }
        x
    }

    fn base_of(&mut self, v: Vertex) -> Vertex {
        let r = self.find(v);
        self.base[r]
    }

    /// Merges the blossom containing `x` into the one based at `b`.
    fn merge_into(&mut self, x: Vertex, b: Vertex) {
        let (rx, rb) = (self.find(x), self.find(b));
        if rx != rb {
            self.dsu[rx] = rb;
        }
    }

    fn augment_from(&mut self, root: Vertex) -> bool {
        let n = self.adj.len();
        for v in 0..n {
            self.label[v] = Label::Unlabeled;
            self.parent[v] = NONE;
            self.dsu[v] = v;
            self.base[v] = v;
        }
        self.queue.clear();
        self.label[root] = Label::Even;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let w = self.adj[v][i];
                match self.label[w] {
                    Label::Unlabeled => {
                        self.parent[w] = v;
                        if self.mate[w] == NONE {
                            self.flip_path(w);
                            return true;
                        }
                        self.label[w] = Label::Odd;
                        let m = self.mate[w];
                        self.label[m] = Label::Even;
                        self.queue.push_back(m);
                    }
                    Label::Even => {
                        if self.base_of(v) != self.base_of(w) {
                            let b = self.lowest_common_base(v, w);
                            self.contract(v, w, b);
                            self.contract(w, v, b);
                        }
                    }
                    Label::Odd => {}
                }
            }
        }
        false
    }

    /// Base of the innermost blossom holding both tree paths' meeting point.
    fn lowest_common_base(&mut self, v: Vertex, w: Vertex) -> Vertex {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        let mut a = Some(self.base_of(v));
        let mut b = Some(self.base_of(w));
        loop {
            if let Some(x) = a {
                if self.mark[x] == self.stamp {
                    return x;
                }
                self.mark[x] = self.stamp;
                a = match self.mate[x] {
                    NONE => None,
                    m => Some(self.base_of(self.parent[m])),
                };
            }
            std::mem::swap(&mut a, &mut b);
        }
    }

    /// Walks from `v` up to blossom base `b`, re-threading `parent` links so
    /// that odd vertices swallowed by the blossom become even.
    fn contract(&mut self, mut v: Vertex, mut w: Vertex, b: Vertex) {
        while self.base_of(v) != b {
            self.parent[v] = w;
            w = self.mate[v];
            if self.label[w] == Label::Odd {
                self.label[w] = Label::Even;
                self.queue.push_back(w);
            }
            self.merge_into(v, b);
            self.merge_into(w, b);
            v = self.parent[w];
        }
    }

    fn flip_path(&mut self, mut x: Vertex) {
        loop {
            let p = self.parent[x];
            let next = self.mate[p];
            self.mate[x] = p;
            self.mate[p] = x;
            if next == NONE {
                break;
            }
            x = next;
        }
    }
}
