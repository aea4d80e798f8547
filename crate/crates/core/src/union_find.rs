//! Minimal union-find with path halving and union by size.

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }

    /// All components; each component lists its members in ascending order.
    pub fn components(&mut self) -> Vec<Vec<usize>> {
        let len = self.parent.len();
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); len];
        for x in 0..len {
            let r = self.find(x);
            buckets[r].push(x);
        }
        buckets.into_iter().filter(|b| !b.is_empty()).collect()
    }
}
