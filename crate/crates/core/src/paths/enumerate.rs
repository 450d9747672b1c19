//! Streaming enumeration of path families in lexicographic order of their encodings.

use super::path::{LatticePath, PathKind, Step};

/// Iterator over all paths of a kind with half-length `n`, in lexicographic
/// order of the one-letter encoding (`D < H < U < d < u`).
///
/// Only the current path and a choice stack are held in memory.
pub struct Paths {
    kind: PathKind,
    total: usize,
    steps: Vec<Step>,
    choice: Vec<usize>,
    width: usize,
    height: i64,
    state: State,
}

#[derive(PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Paths {
    /// Starts the enumeration.
    pub fn new(kind: PathKind, n: usize) -> Paths {
        Paths {
            kind,
            total: 2 * n,
            steps: Vec::with_capacity(2 * n),
            choice: Vec::with_capacity(2 * n),
            width: 0,
            height: 0,
            state: State::Fresh,
        }
    }

    fn admissible(&self, s: Step) -> bool {
        if !self.kind.allows(s) {
            return false;
        }
        if self.kind == PathKind::MdStar
            && s == Step::MarkedDown
            && self.steps.last() == Some(&Step::MarkedUp)
        {
            return false;
        }
        let w = self.width + s.width();
        if w > self.total {
            return false;
        }
        let h = self.height + s.delta();
        let left = (self.total - w) as i64;
        h >= 0 && h <= left && (left - h) % 2 == 0
    }

    fn push(&mut self, idx: usize) {
        let s = Step::ENCODING_ORDER[idx];
        self.steps.push(s);
        self.choice.push(idx);
        self.width += s.width();
        self.height += s.delta();
    }

    fn pop(&mut self) -> Option<usize> {
        let s = self.steps.pop()?;
        self.width -= s.width();
        self.height -= s.delta();
        self.choice.pop()
    }

    fn first_admissible_from(&self, start: usize) -> Option<usize> {
        (start..Step::ENCODING_ORDER.len()).find(|&i| self.admissible(Step::ENCODING_ORDER[i]))
    }

    /// Extends the current prefix with smallest choices; true if a full path was reached.
    fn descend(&mut self) -> bool {
        while self.width < self.total {
            match self.first_admissible_from(0) {
                Some(i) => self.push(i),
                None => return false,
            }
        }
        true
    }

    /// Moves to the next sibling of the deepest position that has one.
    fn advance(&mut self) -> bool {
        while let Some(idx) = self.pop() {
            if let Some(next) = self.first_admissible_from(idx + 1) {
                self.push(next);
                return true;
            }
        }
        false
    }
}

impl Iterator for Paths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if self.descend() {
                    return Some(LatticePath::new(self.steps.clone()));
                }
            }
            State::Running => {}
        }
        loop {
            if !self.advance() {
                self.state = State::Done;
                return None;
            }
            if self.descend() {
                return Some(LatticePath::new(self.steps.clone()));
            }
        }
    }
}

/// All paths of `kind` with half-length `n`, streamed.
pub fn enumerate(kind: PathKind, n: usize) -> Paths {
    Paths::new(kind, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts() {
        let dyck: Vec<usize> = (0..6)
            .map(|n| enumerate(PathKind::Dyck, n).count())
            .collect();
        assert_eq!(dyck, vec![1, 1, 2, 5, 14, 42]);
        let sch: Vec<usize> = (0..6)
            .map(|n| enumerate(PathKind::Schroder, n).count())
            .collect();
        assert_eq!(sch, vec![1, 2, 6, 22, 90, 394]);
    }

    #[test]
    fn marked_counts_match_direct_formulas() {
        for n in 0..5usize {
            let dyck = enumerate(PathKind::Dyck, n).count();
            assert_eq!(enumerate(PathKind::MarkedDyck, n).count(), dyck << (2 * n));
        }
    }

    #[test]
    fn order_is_lexicographic_and_members_are_valid() {
        for kind in PathKind::ALL {
            let all: Vec<LatticePath> = enumerate(kind, 3).collect();
            let text: Vec<String> = all.iter().map(|p| p.to_string()).collect();
            let mut sorted = text.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(text, sorted);
            assert!(all.iter().all(|p| p.is_of_kind(kind, 3)));
        }
        let first: Vec<String> = enumerate(PathKind::Schroder, 1)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(first, vec!["H", "UD"]);
    }
}
