//! Order-maintenance list with O(1) amortized insert-after and O(1)
//! order queries, used to compare contour positions without rewalking
//! contours.
//!
//! Tags are `u64` labels kept strictly increasing along the list; when an
//! insertion finds no room, a window around the insertion point is
//! respread (list-labeling style). A permanent sentinel head anchors the
//! label space.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmHandle(pub u32);

const NIL: u32 = u32::MAX;
const SEED_GAP: u64 = 1 << 32;

#[derive(Clone, Debug)]
pub struct OrderList {
    tag: Vec<u64>,
    next: Vec<u32>,
    prev: Vec<u32>,
}

impl OrderList {
    pub fn new() -> Self {
        // Index 0 is the sentinel head.
        OrderList { tag: vec![0], next: vec![NIL], prev: vec![NIL] }
    }

    pub fn head(&self) -> OmHandle {
        OmHandle(0)
    }

    pub fn len(&self) -> usize {
        self.tag.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Inserts a new element immediately after `at`.
    pub fn insert_after(&mut self, at: OmHandle, _hint: ()) -> OmHandle {
        let x = at.0 as usize;
        let nx = self.next[x];
        let lo = self.tag[x];
        let hi = if nx == NIL { None } else { Some(self.tag[nx as usize]) };
        let new_tag = match hi {
            None => {
                if lo > u64::MAX - SEED_GAP {
                    self.respread_window(x);
                    return self.insert_after(at, ());
                }
                lo + SEED_GAP
            }
            Some(h) if h - lo >= 2 => lo + (h - lo) / 2,
            Some(_) => {
                self.respread_window(x);
                return self.insert_after(at, ());
            }
        };
        let id = self.tag.len() as u32;
        self.tag.push(new_tag);
        self.next.push(nx);
        self.prev.push(x as u32);
        self.next[x] = id;
        if nx != NIL {
            self.prev[nx as usize] = id;
        }
        OmHandle(id)
    }

    /// Respreads a window around `x` so that the gap after `x` becomes
    /// at least 2. The sentinel's tag 0 never moves.
    fn respread_window(&mut self, x: usize) {
        let mut l = x;
        let mut r = x;
        let mut cnt: u64 = 1;
        loop {
            let before = if self.prev[l] == NIL { 0 } else { self.tag[self.prev[l] as usize] };
            let after = if self.next[r] == NIL { u64::MAX } else { self.tag[self.next[r] as usize] };
            let need = (cnt + 2).saturating_mul(cnt + 2).saturating_mul(4);
            if after - before > need {
                let gap = (after - before) / (cnt + 1);
                let mut t = before;
                let mut cur = l;
                loop {
                    t += gap;
                    self.tag[cur] = t;
                    if cur == r {
                        break;
                    }
                    cur = self.next[cur] as usize;
                }
                return;
            }
            let can_left = self.prev[l] != NIL && self.prev[l] != 0;
            let can_right = self.next[r] != NIL;
            if can_left {
                l = self.prev[l] as usize;
                cnt += 1;
            } else if can_right {
                r = self.next[r] as usize;
                cnt += 1;
            } else {
                // Whole list in the window; spread over the full range.
                let gap = u64::MAX / (cnt + 2);
                let mut t = 0;
                let mut cur = l;
                loop {
                    t += gap;
                    self.tag[cur] = t;
                    if cur == r {
                        break;
                    }
                    cur = self.next[cur] as usize;
                }
                return;
            }
        }
    }

    #[inline]
    pub fn before(&self, a: OmHandle, b: OmHandle) -> bool {
        self.tag[a.0 as usize] < self.tag[b.0 as usize]
    }

    /// Strict cyclic orientation: true when walking forward from `a`
    /// meets `b` before `c`. All three handles must be distinct.
    #[inline]
    pub fn ccw3(&self, a: OmHandle, b: OmHandle, c: OmHandle) -> bool {
        let (ta, tb, tc) = (self.tag[a.0 as usize], self.tag[b.0 as usize], self.tag[c.0 as usize]);
        (ta < tb && tb < tc) || (tb < tc && tc < ta) || (tc < ta && ta < tb)
    }
}

impl Default for OrderList {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_insertion_keeps_order() {
        let mut om = OrderList::new();
        let first = om.insert_after(om.head(), ());
        // Repeatedly insert directly after `first`, forcing respreads.
        let mut handles = vec![first];
        for _ in 0..10_000 {
            handles.push(om.insert_after(first, ()));
        }
        // first < every later handle; later handles in reverse insert order.
        for w in handles[1..].windows(2) {
            assert!(om.before(w[1], w[0]));
        }
        for h in &handles[1..] {
            assert!(om.before(first, *h));
        }
    }

    #[test]
    fn cyclic_orientation() {
        let mut om = OrderList::new();
        let a = om.insert_after(om.head(), ());
        let b = om.insert_after(a, ());
        let c = om.insert_after(b, ());
        assert!(om.ccw3(a, b, c));
        assert!(om.ccw3(b, c, a));
        assert!(!om.ccw3(a, c, b));
    }
}
