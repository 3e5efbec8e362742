use std::collections::BTreeSet;

use super::{OrderIdeal, Subposet, Vertex};
use crate::budget::Budget;
use crate::error::Result;
use crate::search::{Odometer, RangeFn};

/// Lazily yields every order ideal of a subposet exactly once.
pub struct IdealIter {
    inner: Odometer<RangeFn>,
    order: Vec<Vertex>,
}

impl Iterator for IdealIter {
    type Item = OrderIdeal;

    fn next(&mut self) -> Option<OrderIdeal> {
        let picks = self.inner.next_assignment()?;
        let members: BTreeSet<Vertex> = picks
            .iter()
            .zip(&self.order)
            .filter(|(&p, _)| p == 1)
            .map(|(_, v)| *v)
            .collect();
        Some(OrderIdeal::from_members_unchecked(members))
    }
}

impl Subposet {
    /// Enumerates ideals by deciding vertices along a linear extension; a
    /// vertex may join only when all its lower covers have.
    pub fn enumerate_ideals(&self, budget: &Budget) -> Result<IdealIter> {
        let total = self.count_ideals_by(super::Method::Dp, budget)?;
        budget.check_items("order ideals", &total)?;
        let order = self.linear_extension();
        let mut pos = vec![0usize; order.len()];
        for (t, &v) in order.iter().enumerate() {
            pos[v] = t;
        }
        let lower: Vec<Vec<usize>> = order
            .iter()
            .map(|&v| self.lower_covers(v).iter().map(|&w| pos[w]).collect())
            .collect();
        let range = move |k: usize, prefix: &[u32]| {
            let open = lower[k].iter().all(|&t| prefix[t] == 1);
            Some((0, u32::from(open)))
        };
        Ok(IdealIter {
            inner: Odometer::new(order.len(), Box::new(range)),
            order: order.iter().map(|&v| self.vertices()[v]).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::ColorSet;

    #[test]
    fn point_has_two_ideals() {
        let p = Subposet::build(2, ColorSet::FULL).unwrap();
        let all: Vec<_> = p.enumerate_ideals(&Budget::default()).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert!(all.iter().any(|i| i.is_empty()));
        assert!(all.iter().any(|i| i.len() == 1));
    }

    #[test]
    fn ideals_are_distinct_and_down_closed() {
        for s in ColorSet::all_admissible() {
            let p = Subposet::build(4, s).unwrap();
            for q in [p.clone(), p.dual()] {
                let all: Vec<_> = q.enumerate_ideals(&Budget::default()).unwrap().collect();
                let distinct: BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len());
                assert!(all.iter().all(|i| q.is_ideal(i.members())), "{s}");
            }
        }
    }

    #[test]
    fn single_green_t3_has_twelve() {
        let p = Subposet::build(3, "g".parse().unwrap()).unwrap();
        assert_eq!(p.enumerate_ideals(&Budget::default()).unwrap().count(), 12);
    }
}
