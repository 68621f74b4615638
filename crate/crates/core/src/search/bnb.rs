//! Feasibility decision for one target `t`: is there a labelling with
//! `|A| >= t`, `|B| >= t` and no Kneser edge between `A` and `B`?

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::kneser::{KneserGraph, VSet};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Problem<'g> {
    pub g: &'g KneserGraph,
    pub t: u32,
    pub star_free: bool,
    pub overlap: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Decision {
    Feasible(VSet, VSet),
    Infeasible,
    Aborted,
}

/// Node budget and deadline shared by all workers.
pub(crate) struct Limits {
    nodes: AtomicU64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    stop: AtomicBool,
}

impl Limits {
    pub fn new(max_nodes: Option<u64>, deadline: Option<Instant>) -> Self {
        Limits {
            nodes: AtomicU64::new(0),
            max_nodes,
            deadline,
            stop: AtomicBool::new(false),
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    fn charge(&self, n: u64) -> bool {
        let total = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        if self.max_nodes.is_some_and(|m| total > m)
            || self.deadline.is_some_and(|d| Instant::now() >= d)
        {
            self.stop.store(true, Ordering::Relaxed);
        }
        !self.stop.load(Ordering::Relaxed)
    }
}

/// Candidate sets and fixed members for both sides. `fix_a ⊆ pos_a` and
/// `fix_b ⊆ pos_b` throughout.
#[derive(Clone, Copy, Debug)]
struct Node {
    pos_a: VSet,
    pos_b: VSet,
    fix_a: VSet,
    fix_b: VSet,
}

enum Expansion {
    Pruned,
    Solution(VSet, VSet),
    Children(Vec<Node>),
}

enum Item {
    Open(Node),
    Leaf(VSet, VSet),
}

enum Run {
    Found(VSet, VSet),
    Exhausted,
    Aborted,
    Skipped,
}

const BATCH: u64 = 256;

impl<'g> Problem<'g> {
    fn root(&self, fixed_in_a: &[usize]) -> Node {
        let all = self.g.all();
        let mut node = Node {
            pos_a: all,
            pos_b: all,
            fix_a: VSet::EMPTY,
            fix_b: VSet::EMPTY,
        };
        for &v in fixed_in_a {
            self.put_a(&mut node, v);
        }
        node
    }

    fn put_a(&self, node: &mut Node, v: usize) {
        node.fix_a.insert(v);
        node.pos_b &= !*self.g.neighbours(v);
        if !self.overlap {
            node.pos_b.remove(v);
        }
    }

    fn put_b(&self, node: &mut Node, v: usize) {
        node.fix_b.insert(v);
        node.pos_a &= !*self.g.neighbours(v);
        if !self.overlap {
            node.pos_a.remove(v);
        }
    }

    fn bounds_ok(&self, node: &Node) -> bool {
        let t = self.t;
        if node.pos_a.len() < t || node.pos_b.len() < t {
            return false;
        }
        if !self.overlap && (node.pos_a | node.pos_b).len() < 2 * t {
            return false;
        }
        if self.star_free {
            // a side whose candidates all contain some element can only be a star
            for av in self.g.avoiding() {
                if !node.pos_a.intersects(av) || !node.pos_b.intersects(av) {
                    return false;
                }
            }
        }
        true
    }

    fn expand(&self, mut node: Node) -> Expansion {
        if !self.bounds_ok(&node) {
            return Expansion::Pruned;
        }
        let g = self.g;
        // vertices that can join a side without excluding anything
        let ua = node.pos_a & !node.fix_a;
        let ub = node.pos_b & !node.fix_b;
        for v in ua.iter() {
            if !g.neighbours(v).intersects(&node.pos_b) && (self.overlap || !ub.contains(v)) {
                node.fix_a.insert(v);
            }
        }
        for v in ub.iter() {
            if !g.neighbours(v).intersects(&node.pos_a) && (self.overlap || !ua.contains(v)) {
                node.fix_b.insert(v);
            }
        }
        let ua = node.pos_a & !node.fix_a;
        let ub = node.pos_b & !node.fix_b;
        let undecided = ua | ub;

        let mut best: Option<(usize, u32)> = None;
        for v in undecided.iter() {
            let hot = (ua.contains(v) && g.neighbours(v).intersects(&node.pos_b))
                || (ub.contains(v) && g.neighbours(v).intersects(&node.pos_a));
            if hot {
                let score = (*g.neighbours(v) & undecided).len();
                if best.is_none_or(|(_, s)| score > s) {
                    best = Some((v, score));
                }
            }
        }

        let v = match best {
            Some((v, _)) => v,
            None => {
                if self.overlap {
                    // every candidate is now fixed
                    return Expansion::Solution(node.pos_a, node.pos_b);
                }
                // the rest are free: conflict-free on both sides
                let need = self.t.saturating_sub(node.fix_a.len()) as usize;
                let mut a = node.fix_a;
                let mut b = node.fix_b;
                for (i, w) in undecided.iter().enumerate() {
                    if i < need {
                        a.insert(w);
                    } else {
                        b.insert(w);
                    }
                }
                if !self.star_free || (!g.is_star(&a) && !g.is_star(&b)) {
                    return Expansion::Solution(a, b);
                }
                // leaving a free vertex out never helps, so branch on A or B only
                let w = undecided.first().expect("star split with no free vertex");
                let mut children = Vec::with_capacity(2);
                for side_a in [true, false] {
                    let mut c = node;
                    if side_a {
                        self.put_a(&mut c, w);
                    } else {
                        self.put_b(&mut c, w);
                    }
                    children.push(c);
                }
                return Expansion::Children(children);
            }
        };

        let opt_a: &[bool] = if node.fix_a.contains(v) {
            &[true]
        } else if node.pos_a.contains(v) {
            &[true, false]
        } else {
            &[false]
        };
        let opt_b: &[bool] = if node.fix_b.contains(v) {
            &[true]
        } else if node.pos_b.contains(v) {
            &[true, false]
        } else {
            &[false]
        };
        let mut children = Vec::with_capacity(4);
        for (xa, xb) in [(true, false), (false, true), (true, true), (false, false)] {
            if !opt_a.contains(&xa) || !opt_b.contains(&xb) || (xa && xb && !self.overlap) {
                continue;
            }
            let mut c = node;
            if xa {
                if !c.fix_a.contains(v) {
                    self.put_a(&mut c, v);
                }
            } else {
                c.pos_a.remove(v);
            }
            if xb {
                if !c.fix_b.contains(v) {
                    self.put_b(&mut c, v);
                }
            } else {
                c.pos_b.remove(v);
            }
            children.push(c);
        }
        Expansion::Children(children)
    }

    fn dfs(
        &self,
        node: Node,
        limits: &Limits,
        pending: &mut u64,
        cancel: &dyn Fn() -> bool,
    ) -> Run {
        *pending += 1;
        if *pending >= BATCH {
            let go = limits.charge(*pending);
            *pending = 0;
            if !go {
                return Run::Aborted;
            }
        }
        if cancel() {
            return Run::Skipped;
        }
        match self.expand(node) {
            Expansion::Pruned => Run::Exhausted,
            Expansion::Solution(a, b) => Run::Found(a, b),
            Expansion::Children(children) => {
                for c in children {
                    match self.dfs(c, limits, pending, cancel) {
                        Run::Exhausted => {}
                        other => return other,
                    }
                }
                Run::Exhausted
            }
        }
    }

    /// Splits the tree into an ordered frontier so that the first solution in
    /// frontier order is the one a sequential depth-first search would find.
    fn frontier(&self, root: Node, target: usize, limits: &Limits) -> Vec<Item> {
        let mut items = vec![Item::Open(root)];
        let mut expanded = 0u64;
        while items.len() < target && items.iter().any(|i| matches!(i, Item::Open(_))) {
            let mut next = Vec::with_capacity(items.len() * 3);
            for item in items {
                match item {
                    Item::Open(node) => {
                        expanded += 1;
                        match self.expand(node) {
                            Expansion::Pruned => {}
                            Expansion::Solution(a, b) => next.push(Item::Leaf(a, b)),
                            Expansion::Children(cs) => next.extend(cs.into_iter().map(Item::Open)),
                        }
                    }
                    leaf => next.push(leaf),
                }
            }
            items = next;
            if matches!(items.first(), Some(Item::Leaf(..))) {
                break;
            }
        }
        limits.charge(expanded);
        items
    }

    pub fn decide(&self, fixed_in_a: &[usize], limits: &Limits, workers: usize) -> Decision {
        let root = self.root(fixed_in_a);
        if workers <= 1 {
            let mut pending = 0;
            let run = self.dfs(root, limits, &mut pending, &|| false);
            limits.charge(pending);
            return match run {
                Run::Found(a, b) => Decision::Feasible(a, b),
                Run::Exhausted => Decision::Infeasible,
                Run::Aborted | Run::Skipped => Decision::Aborted,
            };
        }

        let items = self.frontier(root, workers * 16, limits);
        let first_hit = AtomicUsize::new(usize::MAX);
        let run_item = |(idx, item): (usize, &Item)| -> Run {
            if idx > first_hit.load(Ordering::Relaxed) {
                return Run::Skipped;
            }
            let run = match item {
                Item::Leaf(a, b) => Run::Found(*a, *b),
                Item::Open(node) => {
                    let mut pending = 0;
                    let cancel = || idx > first_hit.load(Ordering::Relaxed);
                    let r = self.dfs(*node, limits, &mut pending, &cancel);
                    limits.charge(pending);
                    r
                }
            };
            if matches!(run, Run::Found(..)) {
                first_hit.fetch_min(idx, Ordering::Relaxed);
            }
            run
        };
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build();
        let runs: Vec<Run> = match pool {
            Ok(pool) => pool.install(|| items.par_iter().enumerate().map(run_item).collect()),
            Err(_) => items.iter().enumerate().map(run_item).collect(),
        };

        for run in runs {
            match run {
                Run::Found(a, b) => return Decision::Feasible(a, b),
                Run::Exhausted => {}
                Run::Aborted | Run::Skipped => return Decision::Aborted,
            }
        }
        Decision::Infeasible
    }
}
