//! Conjugacy classes and power maps.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{FiniteGroup, Subgroup};

/// Class partition of a group. Classes are ordered by their least element,
/// so class 0 is `{identity}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    /// `power_map[c][k]` = class of `rep(c)^k`, for `k` in `0..=exponent`.
    power_map: Vec<Vec<u32>>,
    inverse_class: Vec<usize>,
}

impl ConjugacyData {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            class_of[x] = c;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for &s in g.generators() {
                    let z = g.conj(y, s);
                    if class_of[z] == u32::MAX {
                        class_of[z] = c;
                        orbit.push(z);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let e = g.exponent();
        let power_map = classes
            .iter()
            .map(|cls| {
                let rep = cls[0];
                let mut x = 0;
                let mut row = Vec::with_capacity(e + 1);
                for _ in 0..=e {
                    row.push(class_of[x]);
                    x = g.mul(x, rep);
                }
                row
            })
            .collect();
        let inverse_class = classes
            .iter()
            .map(|cls| class_of[g.inv(cls[0])] as usize)
            .collect();
        ConjugacyData {
            classes,
            class_of,
            power_map,
            inverse_class,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// Least element of class `c`.
    pub fn rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    /// Class of `rep(c)^k`; `k` is reduced modulo the group exponent.
    pub fn power(&self, c: usize, k: usize) -> usize {
        let row = &self.power_map[c];
        row[k % (row.len() - 1).max(1)] as usize
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Whether `h` is a union of classes (given that it is a subgroup, this
    /// is normality).
    pub fn is_class_union(&self, h: &Subgroup) -> bool {
        self.classes
            .iter()
            .all(|cls| cls.iter().all(|&x| h.contains(x)) || cls.iter().all(|&x| !h.contains(x)))
    }

    /// Indices of the classes contained in `h`.
    pub fn classes_in(&self, h: &Subgroup) -> Vec<usize> {
        (0..self.len()).filter(|&c| h.contains(self.rep(c))).collect()
    }
}
