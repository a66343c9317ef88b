use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Biconnected components and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: [usize; MAX_VERTICES],
    low: [usize; MAX_VERTICES],
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for v in self.g.neighbors(u) {
            if self.disc[v] == 0 {
                children += 1;
                self.stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Tarjan's biconnected components. A single vertex forms one block.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    if g.n() == 1 {
        return BlockDecomposition {
            blocks: vec![VertexSet::singleton(0)],
            cut_vertices: VertexSet::EMPTY,
        };
    }
    let mut dfs = Dfs {
        g,
        disc: [0; MAX_VERTICES],
        low: [0; MAX_VERTICES],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for s in 0..g.n() {
        if dfs.disc[s] == 0 {
            dfs.visit(s, None);
        }
    }
    let mut blocks = dfs.blocks;
    blocks.sort_by_key(|b| b.bits());
    BlockDecomposition {
        blocks,
        cut_vertices: dfs.cuts,
    }
}
