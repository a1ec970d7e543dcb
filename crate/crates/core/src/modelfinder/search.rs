//! The search for one fixed domain size.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::Error;
use crate::terms::{Constant, SeqKind, SeqTerm, Var};

use super::{CellOrder, CounterExample, FiniteAlgebra, Prepared, SearchConfig};

const UNSET: u8 = u8::MAX;
const MAX_VARS: usize = 8;
const CONSTANTS: [Constant; 3] = [Constant::T, Constant::F, Constant::U];

#[derive(Clone, Copy, Debug)]
enum Node {
    Var(usize),
    Cell(usize),
    Neg(usize),
    And(usize, usize),
    Or(usize, usize),
}

#[derive(Default)]
struct Used {
    neg: bool,
    and: bool,
    or: bool,
    consts: [bool; 3],
}

/// Cell layout: `neg[n]`, `and[n*n]`, `or[n*n]`, three constant slots, then
/// one slot per goal variable.
struct Layout {
    n: usize,
}

impl Layout {
    fn neg(&self, x: usize) -> usize {
        x
    }
    fn and(&self, x: usize, y: usize) -> usize {
        self.n + x * self.n + y
    }
    fn or(&self, x: usize, y: usize) -> usize {
        self.n + self.n * self.n + x * self.n + y
    }
    fn constant(&self, k: usize) -> usize {
        self.n + 2 * self.n * self.n + k
    }
    fn witness(&self, i: usize) -> usize {
        self.constant(3) + i
    }
}

fn const_slot(c: Constant) -> usize {
    CONSTANTS.iter().position(|&k| k == c).unwrap()
}

/// Post-order node list, root last.
fn compile(t: &SeqTerm, vars: &[Var], witness_base: Option<usize>, layout: &Layout, used: &mut Used, out: &mut Vec<Node>) -> usize {
    let node = match t.kind() {
        SeqKind::Const(c) => {
            used.consts[const_slot(*c)] = true;
            Node::Cell(layout.constant(const_slot(*c)))
        }
        SeqKind::Var(v) => {
            let i = vars.iter().position(|w| w == v).unwrap();
            match witness_base {
                Some(base) => Node::Cell(base + i),
                None => Node::Var(i),
            }
        }
        SeqKind::Atom(_) => unreachable!("atoms are rejected before compilation"),
        SeqKind::Neg(s) => {
            used.neg = true;
            Node::Neg(compile(s, vars, witness_base, layout, used, out))
        }
        SeqKind::ScAnd(l, r) | SeqKind::FullAnd(l, r) => {
            used.and = true;
            let l = compile(l, vars, witness_base, layout, used, out);
            let r = compile(r, vars, witness_base, layout, used, out);
            Node::And(l, r)
        }
        SeqKind::ScOr(l, r) | SeqKind::FullOr(l, r) => {
            used.or = true;
            let l = compile(l, vars, witness_base, layout, used, out);
            let r = compile(r, vars, witness_base, layout, used, out);
            Node::Or(l, r)
        }
    };
    out.push(node);
    out.len() - 1
}

fn equation_vars(l: &SeqTerm, r: &SeqTerm) -> Vec<Var> {
    let mut vars = l.variables();
    for v in r.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars
}

#[derive(Clone, Copy)]
enum Eval {
    Val(u8),
    Blocked { cell: usize, root: bool },
}

struct Instance {
    eq: usize,
    env: usize,
}

enum TrailEntry {
    Assign(usize),
    Watch(usize),
}

pub(crate) enum Result {
    Found(CounterExample),
    Exhausted,
    OutOfBudget,
    OutOfTime,
}

enum Step {
    Found,
    Fail,
    Stop(Result),
}

pub(crate) struct Search<'a> {
    cfg: &'a SearchConfig,
    start: Instant,
    layout: Layout,
    /// `sides[e]` holds the compiled sides of axiom `e`; the goal comes last.
    sides: Vec<[Vec<Node>; 2]>,
    goal: usize,
    goal_vars: Vec<Var>,
    used_consts: [bool; 3],
    instances: Vec<Instance>,
    envs: Vec<u8>,
    values: Vec<u8>,
    /// Largest argument of each cell, `None` for constants and witnesses.
    max_arg: Vec<Option<u8>>,
    order: Vec<usize>,
    watches: Vec<Vec<(u32, u8)>>,
    trail: Vec<TrailEntry>,
    queue: Vec<(usize, u8)>,
    scratch: Vec<u8>,
    decisions: u64,
}

impl<'a> Search<'a> {
    pub(crate) fn new(p: &Prepared, n: usize, cfg: &'a SearchConfig, start: Instant) -> std::result::Result<Search<'a>, Error> {
        if n >= UNSET as usize {
            return Err(Error::Unsupported(format!("domain size {n} is too large")));
        }
        let layout = Layout { n };
        let mut used = Used::default();
        let goal_vars = equation_vars(&p.goal.0, &p.goal.1);
        let witness_base = layout.witness(0);
        let mut sides = Vec::new();
        let mut instances = Vec::new();
        let mut envs = Vec::new();
        for (e, (l, r)) in p.axioms.iter().enumerate() {
            let vars = equation_vars(l, r);
            if vars.len() > MAX_VARS {
                return Err(Error::Unsupported(format!("more than {MAX_VARS} variables in one equation")));
            }
            let mut ln = Vec::new();
            let mut rn = Vec::new();
            compile(l, &vars, None, &layout, &mut used, &mut ln);
            compile(r, &vars, None, &layout, &mut used, &mut rn);
            sides.push([ln, rn]);
            let k = vars.len();
            let count = n.pow(k as u32);
            for mut code in 0..count {
                let env = envs.len();
                let mut tuple = vec![0u8; k];
                for slot in tuple.iter_mut().rev() {
                    *slot = (code % n) as u8;
                    code /= n;
                }
                envs.extend(tuple);
                instances.push(Instance { eq: e, env });
            }
        }
        let goal = sides.len();
        let mut ln = Vec::new();
        let mut rn = Vec::new();
        compile(&p.goal.0, &goal_vars, Some(witness_base), &layout, &mut used, &mut ln);
        compile(&p.goal.1, &goal_vars, Some(witness_base), &layout, &mut used, &mut rn);
        sides.push([ln, rn]);
        instances.push(Instance { eq: goal, env: envs.len() });

        let cells = layout.witness(goal_vars.len());
        let mut max_arg = vec![None; cells];
        for x in 0..n {
            max_arg[layout.neg(x)] = Some(x as u8);
            for y in 0..n {
                max_arg[layout.and(x, y)] = Some(x.max(y) as u8);
                max_arg[layout.or(x, y)] = Some(x.max(y) as u8);
            }
        }
        let order = cell_order(&layout, &used, goal_vars.len(), cfg.cell_order);

        Ok(Search {
            cfg,
            start,
            layout,
            sides,
            goal,
            goal_vars,
            used_consts: used.consts,
            instances,
            envs,
            values: vec![UNSET; cells],
            max_arg,
            order,
            watches: vec![Vec::new(); cells],
            trail: Vec::new(),
            queue: Vec::new(),
            scratch: Vec::new(),
            decisions: 0,
        })
    }

    pub(crate) fn run(&mut self) -> Result {
        for i in 0..self.instances.len() {
            if !self.process(i, [true, true]) || !self.propagate() {
                return Result::Exhausted;
            }
        }
        match self.dfs() {
            Step::Found => Result::Found(self.extract()),
            Step::Fail => Result::Exhausted,
            Step::Stop(r) => r,
        }
    }

    fn dfs(&mut self) -> Step {
        let Some(cell) = self.order.iter().copied().find(|&c| self.values[c] == UNSET) else {
            return Step::Found;
        };
        let n = self.layout.n;
        let top = if self.cfg.symmetry_breaking {
            let mdn = self.max_designated(cell);
            (mdn + 1).min(n as i32 - 1) as u8
        } else {
            n as u8 - 1
        };
        for v in 0..=top {
            self.decisions += 1;
            if self.decisions > self.cfg.budget {
                return Step::Stop(Result::OutOfBudget);
            }
            if self.decisions.is_multiple_of(1024) && self.start.elapsed() > self.cfg.deadline {
                return Step::Stop(Result::OutOfTime);
            }
            let mark = self.trail.len();
            self.queue.push((cell, v));
            if self.propagate() {
                match self.dfs() {
                    Step::Fail => {}
                    other => return other,
                }
            }
            self.undo(mark);
        }
        Step::Fail
    }

    /// The largest element mentioned by an assigned cell or by `cell`'s
    /// arguments, or -1 if none is.
    fn max_designated(&self, cell: usize) -> i32 {
        let mut m = self.max_arg[cell].map_or(-1, i32::from);
        for &c in &self.order {
            let v = self.values[c];
            if v != UNSET {
                m = m.max(i32::from(v));
                if let Some(a) = self.max_arg[c] {
                    m = m.max(i32::from(a));
                }
            }
        }
        m
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                TrailEntry::Assign(c) => self.values[c] = UNSET,
                TrailEntry::Watch(c) => {
                    self.watches[c].pop();
                }
            }
        }
    }

    /// Drains the queue of pending assignments. False on conflict.
    fn propagate(&mut self) -> bool {
        while let Some((cell, v)) = self.queue.pop() {
            let cur = self.values[cell];
            if cur != UNSET {
                if cur != v {
                    self.queue.clear();
                    return false;
                }
                continue;
            }
            self.values[cell] = v;
            self.trail.push(TrailEntry::Assign(cell));
            let mut i = 0;
            while i < self.watches[cell].len() {
                let (inst, side) = self.watches[cell][i];
                let mut mask = [false; 2];
                mask[side as usize] = true;
                if !self.process(inst as usize, mask) {
                    self.queue.clear();
                    return false;
                }
                i += 1;
            }
        }
        true
    }

    /// Re-evaluates both sides of an instance, watches the blocking cell of
    /// each side selected by `rewatch`, and queues forced assignments.
    fn process(&mut self, inst: usize, rewatch: [bool; 2]) -> bool {
        let Instance { eq, env } = self.instances[inst];
        let mut scratch = std::mem::take(&mut self.scratch);
        let l = self.eval(&self.sides[eq][0], &self.envs[env..], &mut scratch);
        let r = self.eval(&self.sides[eq][1], &self.envs[env..], &mut scratch);
        self.scratch = scratch;
        for (side, e) in [l, r].into_iter().enumerate() {
            if let (true, Eval::Blocked { cell, .. }) = (rewatch[side], e) {
                self.watches[cell].push((inst as u32, side as u8));
                self.trail.push(TrailEntry::Watch(cell));
            }
        }
        if eq == self.goal {
            return !matches!((l, r), (Eval::Val(a), Eval::Val(b)) if a == b);
        }
        match (l, r) {
            (Eval::Val(a), Eval::Val(b)) => a == b,
            (Eval::Val(v), Eval::Blocked { cell, root: true }) | (Eval::Blocked { cell, root: true }, Eval::Val(v)) => {
                self.queue.push((cell, v));
                true
            }
            _ => true,
        }
    }

    fn eval(&self, nodes: &[Node], env: &[u8], scratch: &mut Vec<u8>) -> Eval {
        scratch.clear();
        let last = nodes.len() - 1;
        for (i, node) in nodes.iter().enumerate() {
            let cell = match *node {
                Node::Var(v) => {
                    scratch.push(env[v]);
                    continue;
                }
                Node::Cell(c) => c,
                Node::Neg(a) => self.layout.neg(scratch[a] as usize),
                Node::And(a, b) => self.layout.and(scratch[a] as usize, scratch[b] as usize),
                Node::Or(a, b) => self.layout.or(scratch[a] as usize, scratch[b] as usize),
            };
            let v = self.values[cell];
            if v == UNSET {
                return Eval::Blocked { cell, root: i == last };
            }
            scratch.push(v);
        }
        Eval::Val(scratch[last])
    }

    fn extract(&self) -> CounterExample {
        let n = self.layout.n;
        let get = |c: usize| {
            let v = self.values[c];
            if v == UNSET {
                0
            } else {
                v as usize
            }
        };
        let algebra = FiniteAlgebra {
            size: n,
            neg: (0..n).map(|x| get(self.layout.neg(x))).collect(),
            and: (0..n).map(|x| (0..n).map(|y| get(self.layout.and(x, y))).collect()).collect(),
            or: (0..n).map(|x| (0..n).map(|y| get(self.layout.or(x, y))).collect()).collect(),
            consts: CONSTANTS
                .iter()
                .enumerate()
                .filter(|(k, _)| self.used_consts[*k])
                .map(|(k, &c)| (c, get(self.layout.constant(k))))
                .collect::<BTreeMap<_, _>>(),
        };
        let witness = self
            .goal_vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), get(self.layout.witness(i))))
            .collect();
        CounterExample { algebra, witness }
    }
}

fn cell_order(layout: &Layout, used: &Used, witnesses: usize, order: CellOrder) -> Vec<usize> {
    let n = layout.n;
    let mut front = Vec::new();
    for k in 0..3 {
        if used.consts[k] {
            front.push(layout.constant(k));
        }
    }
    front.extend((0..witnesses).map(|i| layout.witness(i)));
    let mut cells = Vec::new();
    match order {
        CellOrder::RowMajor => {
            if used.neg {
                cells.extend((0..n).map(|x| layout.neg(x)));
            }
            for x in 0..n {
                for y in 0..n {
                    if used.and {
                        cells.push(layout.and(x, y));
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    if used.or {
                        cells.push(layout.or(x, y));
                    }
                }
            }
            cells.extend(front);
        }
        CellOrder::MaxArgument => {
            cells.extend(front);
            for m in 0..n {
                if used.neg {
                    cells.push(layout.neg(m));
                }
                let pairs: Vec<(usize, usize)> = (0..=m)
                    .flat_map(|x| (0..=m).map(move |y| (x, y)))
                    .filter(|&(x, y)| x.max(y) == m)
                    .collect();
                if used.and {
                    cells.extend(pairs.iter().map(|&(x, y)| layout.and(x, y)));
                }
                if used.or {
                    cells.extend(pairs.iter().map(|&(x, y)| layout.or(x, y)));
                }
            }
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_cover_the_same_cells() {
        let layout = Layout { n: 3 };
        let used = Used {
            neg: true,
            and: true,
            or: false,
            consts: [true, false, true],
        };
        let mut a = cell_order(&layout, &used, 2, CellOrder::RowMajor);
        let mut b = cell_order(&layout, &used, 2, CellOrder::MaxArgument);
        assert_eq!(a.len(), 3 + 9 + 2 + 2);
        assert_eq!(b[..4], [layout.constant(0), layout.constant(2), layout.witness(0), layout.witness(1)]);
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}
