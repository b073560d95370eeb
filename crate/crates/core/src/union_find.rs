//! Disjoint-set forest with union by size and path halving.

use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect(), size: alloc::vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already one.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Dense class ids: `ids[x]` numbers the classes in order of their
    /// smallest element. Returns the ids and the class count.
    pub fn class_ids(&mut self) -> (Vec<u32>, usize) {
        let n = self.len();
        let mut root_id = alloc::vec![u32::MAX; n];
        let mut ids = alloc::vec![0u32; n];
        let mut next = 0u32;
        for (x, id) in ids.iter_mut().enumerate() {
            let r = self.find(x);
            if root_id[r] == u32::MAX {
                root_id[r] = next;
                next += 1;
            }
            *id = root_id[r];
        }
        (ids, next as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_and_numbers() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(3, 1));
        assert!(uf.union(4, 3));
        assert!(!uf.union(1, 4));
        assert!(uf.same(1, 4));
        assert!(!uf.same(0, 1));
        let (ids, n) = uf.class_ids();
        assert_eq!(n, 3);
        assert_eq!(ids, alloc::vec![0, 1, 2, 1, 1]);
    }
}
