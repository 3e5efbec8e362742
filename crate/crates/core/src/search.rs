//! Depth-first enumeration of integer assignments where the admissible
//! values of each slot form an interval depending on the earlier slots.

/// Range callback: given a position and the values fixed so far, the inclusive
/// range allowed there, or `None` when the prefix is dead.
pub(crate) type RangeFn = Box<dyn FnMut(usize, &[u32]) -> Option<(u32, u32)> + Send>;

pub(crate) struct Odometer<F> {
    len: usize,
    range: F,
    cur: Vec<u32>,
    hi: Vec<u32>,
    depth: usize,
    started: bool,
    finished: bool,
}

impl<F> Odometer<F>
where
    F: FnMut(usize, &[u32]) -> Option<(u32, u32)>,
{
    /// `range(k, prefix)` returns the inclusive interval for slot `k` given
    /// the values of slots `0..k`, or `None` when it is empty.
    pub(crate) fn new(len: usize, range: F) -> Self {
        Odometer {
            len,
            range,
            cur: vec![0; len],
            hi: vec![0; len],
            depth: 0,
            started: false,
            finished: false,
        }
    }

    fn descend(&mut self) -> bool {
        while self.depth < self.len {
            match (self.range)(self.depth, &self.cur[..self.depth]) {
                Some((lo, hi)) if lo <= hi => {
                    self.cur[self.depth] = lo;
                    self.hi[self.depth] = hi;
                    self.depth += 1;
                }
                _ => {
                    if !self.backtrack() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn backtrack(&mut self) -> bool {
        while self.depth > 0 {
            self.depth -= 1;
            if self.cur[self.depth] < self.hi[self.depth] {
                self.cur[self.depth] += 1;
                self.depth += 1;
                return true;
            }
        }
        false
    }

    /// The next complete assignment, in lexicographic order.
    pub(crate) fn next_assignment(&mut self) -> Option<&[u32]> {
        if self.finished {
            return None;
        }
        let found = if self.started {
            self.backtrack() && self.descend()
        } else {
            self.started = true;
            self.descend()
        };
        if found {
            Some(&self.cur)
        } else {
            self.finished = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_weakly_increasing_words() {
        // Slots in 0..=2, weakly increasing: C(3 + 2, 3) = 10 words of length 3.
        let mut od = Odometer::new(3, |k, prefix: &[u32]| {
            let lo = if k == 0 { 0 } else { prefix[k - 1] };
            Some((lo, 2))
        });
        let mut words = Vec::new();
        while let Some(w) = od.next_assignment() {
            words.push(w.to_vec());
        }
        assert_eq!(words.len(), 10);
        assert_eq!(words[0], vec![0, 0, 0]);
        assert_eq!(words[9], vec![2, 2, 2]);
        assert!(od.next_assignment().is_none());
    }

    #[test]
    fn zero_slots_yield_once() {
        let mut od = Odometer::new(0, |_, _: &[u32]| None);
        assert_eq!(od.next_assignment(), Some(&[][..]));
        assert_eq!(od.next_assignment(), None);
    }

    #[test]
    fn dead_ends_are_skipped() {
        // Second slot must be strictly greater than the first, both in 0..=1.
        let mut od = Odometer::new(
            2,
            |k, prefix: &[u32]| {
                if k == 0 {
                    Some((0, 1))
                } else {
                    Some((prefix[0] + 1, 1))
                }
            },
        );
        assert_eq!(od.next_assignment(), Some(&[0, 1][..]));
        assert_eq!(od.next_assignment(), None);
    }
}
