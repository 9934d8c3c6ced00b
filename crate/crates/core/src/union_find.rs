/// Disjoint sets over `0..len` with union by size and path halving.
/// Stored as `u32` to halve memory traffic on large graphs.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        assert!(
            len <= u32::MAX as usize,
            "union-find supports at most 2^32 - 1 elements"
        );
        UnionFind {
            parent: (0..len as u32).collect(),
            size: vec![1; len],
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut x = x as u32;
        while self.parent[x as usize] != x {
            let grandparent = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grandparent;
            x = grandparent;
        }
        x as usize
    }

    /// Returns `false` if `a` and `b` were already in the same set.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        true
    }

    /// Labels every element with the index of its set, sets numbered in
    /// order of their smallest element.
    pub(crate) fn labels(mut self) -> (Vec<usize>, usize) {
        let mut label_of_root = vec![usize::MAX; self.parent.len()];
        let mut next = 0;
        let labels = (0..self.parent.len())
            .map(|x| {
                let root = self.find(x);
                if label_of_root[root] == usize::MAX {
                    label_of_root[root] = next;
                    next += 1;
                }
                label_of_root[root]
            })
            .collect();
        (labels, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_follow_smallest_member() {
        let mut uf = UnionFind::new(6);
        assert!(uf.union(4, 1));
        assert!(uf.union(5, 3));
        assert!(!uf.union(1, 4));
        let (labels, count) = uf.labels();
        assert_eq!(count, 4);
        assert_eq!(labels, vec![0, 1, 2, 3, 1, 3]);
    }
}
