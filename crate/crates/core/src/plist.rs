//! Persistent singly linked lists with O(1) cons and structural sharing.

use std::fmt;
use std::sync::Arc;

struct Cell<T> {
    head: T,
    tail: List<T>,
    len: usize,
}

pub struct List<T>(Option<Arc<Cell<T>>>);

impl<T> Clone for List<T> {
    fn clone(&self) -> Self {
        List(self.0.clone())
    }
}

impl<T> Default for List<T> {
    fn default() -> Self {
        List(None)
    }
}

impl<T> List<T> {
    pub fn new() -> Self {
        List(None)
    }

    pub fn cons(&self, head: T) -> Self {
        let len = self.len() + 1;
        List(Some(Arc::new(Cell { head, tail: self.clone(), len })))
    }

    pub fn len(&self) -> usize {
        self.0.as_ref().map_or(0, |c| c.len)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn head(&self) -> Option<&T> {
        self.0.as_ref().map(|c| &c.head)
    }

    pub fn tail(&self) -> Option<&List<T>> {
        self.0.as_ref().map(|c| &c.tail)
    }

    pub fn uncons(&self) -> Option<(&T, &List<T>)> {
        self.0.as_ref().map(|c| (&c.head, &c.tail))
    }

    /// The list without its first `n` entries; shares the remaining cells.
    pub fn drop_front(&self, n: usize) -> Option<&List<T>> {
        let mut cur = self;
        for _ in 0..n {
            cur = cur.tail()?;
        }
        Some(cur)
    }

    /// Entry at 0-based distance `i` from the head.
    pub fn get(&self, i: usize) -> Option<&T> {
        self.drop_front(i)?.head()
    }

    pub fn iter(&self) -> Iter<'_, T> {
        Iter(self)
    }

    /// Address of the first cell, identifying the list up to sharing.
    pub fn cell_id(&self) -> Option<usize> {
        self.0.as_ref().map(|c| Arc::as_ptr(c) as *const u8 as usize)
    }

    pub fn ptr_eq(&self, other: &List<T>) -> bool {
        self.cell_id() == other.cell_id()
    }
}

impl<T: Clone> List<T> {
    /// The first `n` entries as a fresh list, or `None` if shorter.
    pub fn take_front(&self, n: usize) -> Option<List<T>> {
        self.split_at(n).map(|(front, _)| front)
    }

    /// `(first n entries, rest)`; the rest shares cells with `self`.
    pub fn split_at(&self, n: usize) -> Option<(List<T>, List<T>)> {
        let mut front = Vec::with_capacity(n);
        let mut cur = self;
        for _ in 0..n {
            let (h, t) = cur.uncons()?;
            front.push(h.clone());
            cur = t;
        }
        Some((List::from_front(front, List::new()), cur.clone()))
    }

    /// `items[0] · items[1] · … · rest`.
    pub fn from_front(items: Vec<T>, rest: List<T>) -> List<T> {
        items.into_iter().rev().fold(rest, |acc, x| acc.cons(x))
    }

    /// `self · rest`, copying the cells of `self`.
    pub fn append(&self, rest: &List<T>) -> List<T> {
        List::from_front(self.iter().cloned().collect(), rest.clone())
    }
}

impl<T> Drop for List<T> {
    fn drop(&mut self) {
        // Unlink iteratively so long lists do not recurse once per cell.
        let mut next = self.0.take();
        while let Some(cell) = next {
            match Arc::try_unwrap(cell) {
                Ok(mut cell) => next = cell.tail.0.take(),
                Err(_) => break,
            }
        }
    }
}

pub struct Iter<'a, T>(&'a List<T>);

impl<'a, T> Iterator for Iter<'a, T> {
    type Item = &'a T;

    fn next(&mut self) -> Option<&'a T> {
        let (h, t) = self.0.uncons()?;
        self.0 = t;
        Some(h)
    }
}

impl<'a, T> IntoIterator for &'a List<T> {
    type Item = &'a T;
    type IntoIter = Iter<'a, T>;

    fn into_iter(self) -> Iter<'a, T> {
        self.iter()
    }
}

impl<T> FromIterator<T> for List<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let items: Vec<T> = iter.into_iter().collect();
        items.into_iter().rev().fold(List::new(), |acc, x| acc.cons(x))
    }
}

impl<T: PartialEq> PartialEq for List<T> {
    fn eq(&self, other: &List<T>) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let (mut a, mut b) = (self, other);
        loop {
            if a.ptr_eq(b) {
                return true;
            }
            match (a.uncons(), b.uncons()) {
                (Some((x, xs)), Some((y, ys))) if x == y => (a, b) = (xs, ys),
                _ => return false,
            }
        }
    }
}

impl<T: Eq> Eq for List<T> {}

impl<T: fmt::Debug> fmt::Debug for List<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}
