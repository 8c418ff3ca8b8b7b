const NIL: u32 = u32::MAX;

/// Max-priority queue over elements `0..len` with integer priorities in
/// `0..=max`, supporting decrement by one. Buckets are doubly linked lists.
#[derive(Debug, Clone)]
pub struct BucketQueue {
    head: Vec<u32>,
    prev: Vec<u32>,
    next: Vec<u32>,
    priority: Vec<u32>,
    queued: Vec<bool>,
    top: usize,
    len: usize,
}

impl BucketQueue {
    pub fn new(priorities: &[usize]) -> Self {
        let max = priorities.iter().copied().max().unwrap_or(0);
        let n = priorities.len();
        let mut q = Self {
            head: vec![NIL; max + 1],
            prev: vec![NIL; n],
            next: vec![NIL; n],
            priority: priorities.iter().map(|&p| p as u32).collect(),
            queued: vec![true; n],
            top: max,
            len: n,
        };
        // Insert in reverse so each bucket lists elements in increasing order.
        for x in (0..n).rev() {
            q.link(x);
        }
        q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.queued[x]
    }

    pub fn priority(&self, x: usize) -> usize {
        self.priority[x] as usize
    }

    fn link(&mut self, x: usize) {
        let p = self.priority[x] as usize;
        let h = self.head[p];
        self.prev[x] = NIL;
        self.next[x] = h;
        if h != NIL {
            self.prev[h as usize] = x as u32;
        }
        self.head[p] = x as u32;
    }

    fn unlink(&mut self, x: usize) {
        let p = self.priority[x] as usize;
        let (a, b) = (self.prev[x], self.next[x]);
        if a == NIL {
            self.head[p] = b;
        } else {
            self.next[a as usize] = b;
        }
        if b != NIL {
            self.prev[b as usize] = a;
        }
    }

    fn settle_top(&mut self) {
        while self.top > 0 && self.head[self.top] == NIL {
            self.top -= 1;
        }
    }

    /// Removes and returns an element of maximum priority, the smallest such
    /// element on ties. Finding the smallest scans the top bucket.
    pub fn pop_max(&mut self) -> Option<(usize, usize)> {
        if self.len == 0 {
            return None;
        }
        self.settle_top();
        let mut best = self.head[self.top];
        let mut cur = best;
        while cur != NIL {
            best = best.min(cur);
            cur = self.next[cur as usize];
        }
        let x = best as usize;
        self.remove(x);
        Some((x, self.priority[x] as usize))
    }

    /// Removes and returns some element of maximum priority in O(1)
    /// amortized time.
    pub fn pop_max_any(&mut self) -> Option<(usize, usize)> {
        if self.len == 0 {
            return None;
        }
        self.settle_top();
        let x = self.head[self.top] as usize;
        self.remove(x);
        Some((x, self.priority[x] as usize))
    }

    pub fn remove(&mut self, x: usize) {
        if self.queued[x] {
            self.unlink(x);
            self.queued[x] = false;
            self.len -= 1;
        }
    }

    /// Lowers the priority of a queued element by one. Panics at zero.
    pub fn dec(&mut self, x: usize) {
        assert!(self.queued[x] && self.priority[x] > 0, "dec on absent or zero-priority element");
        self.unlink(x);
        self.priority[x] -= 1;
        self.link(x);
    }
}
