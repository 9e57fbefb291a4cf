//! Partitions of a finite carrier in a canonical form.
//!
//! Classes are numbered by their least member, ascending, so two partitions
//! of the same carrier are equal as values iff they are equal as partitions.

use serde::Serialize;

use super::set::ElementSet;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    class_of: Vec<usize>,
    /// Least member of each class; strictly increasing.
    representatives: Vec<usize>,
}

impl Partition {
    /// Canonicalize an arbitrary labelling (equal labels = same class).
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut relabel: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        let mut class_of = vec![0; n];
        let mut representatives = Vec::new();
        for (i, &lab) in labels.iter().enumerate() {
            let next = representatives.len();
            let c = *relabel.entry(lab).or_insert_with(|| {
                representatives.push(i);
                next
            });
            class_of[i] = c;
        }
        Partition {
            class_of,
            representatives,
        }
    }

    /// Each element in its own class.
    pub fn discrete(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
            representatives: (0..n).collect(),
        }
    }

    /// One class holding everything. Empty carrier gives the empty partition.
    pub fn universal(n: usize) -> Self {
        Partition {
            class_of: vec![0; n],
            representatives: if n == 0 { vec![] } else { vec![0] },
        }
    }

    pub fn carrier(&self) -> usize {
        self.class_of.len()
    }

    pub fn num_classes(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Least member of class `c`.
    pub fn representative(&self, c: usize) -> usize {
        self.representatives[c]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// Members of class `c`, ascending.
    pub fn class_members(&self, c: usize) -> Vec<usize> {
        (0..self.class_of.len())
            .filter(|&i| self.class_of[i] == c)
            .collect()
    }

    pub fn class_set(&self, c: usize) -> ElementSet {
        ElementSet::from_members(self.carrier(), self.class_members(c))
    }

    /// All classes, ordered by least member, members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        (0..self.num_classes())
            .map(|c| self.class_members(c))
            .collect()
    }

    /// True iff every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        assert_eq!(self.carrier(), coarser.carrier());
        (0..self.carrier()).all(|i| coarser.same_class(i, self.representatives[self.class_of[i]]))
    }

    /// Restrict to the elements of `keep` (ascending order), reindexed to 0...
    pub fn restrict(&self, keep: &[usize]) -> Partition {
        let labels: Vec<usize> = keep.iter().map(|&i| self.class_of[i]).collect();
        Partition::from_labels(&labels)
    }
}

/// Serializes as a JSON array of arrays of element indices, classes ordered by
/// least member, members ascending.
impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.classes().serialize(serializer)
    }
}
