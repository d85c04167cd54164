//! Lexicographic breadth-first search by partition refinement.
//!
//! The queue of sets is a doubly linked list of cells; each cell is a doubly
//! linked list of vertices kept in increasing id order. Numbering a vertex
//! `v` moves each unnumbered neighbor `w` from its cell `S` to a fresh cell
//! placed immediately before `S`, so `S ∩ N(v)` precedes `S \ N(v)`. Because
//! neighbors are visited in increasing id order both halves stay sorted and
//! the smallest id of the first cell is always its head. Total work is
//! `O(|V| + |E|)`.

use std::collections::VecDeque;

use super::{EdgeId, Graph, GraphError, Vertex};

const NIL: usize = usize::MAX;

/// One entry of an adjacency row: neighbor and connecting edge.
pub(crate) trait Incidence: Copy {
    fn vertex(self) -> Vertex;
    fn edge(self) -> EdgeId;
}

impl Incidence for (Vertex, EdgeId) {
    fn vertex(self) -> Vertex {
        self.0
    }
    fn edge(self) -> EdgeId {
        self.1
    }
}

impl Incidence for (u32, u32) {
    fn vertex(self) -> Vertex {
        self.0 as Vertex
    }
    fn edge(self) -> EdgeId {
        self.1 as EdgeId
    }
}

/// Earlier-numbered neighbors of a vertex in numbering order, truncated to
/// three entries, together with the connecting edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Label {
    vertices: [Vertex; 3],
    edges: [EdgeId; 3],
    len: u8,
}

impl Label {
    fn push(&mut self, v: Vertex, e: EdgeId) {
        if self.len < 3 {
            self.vertices[self.len as usize] = v;
            self.edges[self.len as usize] = e;
            self.len += 1;
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices[..self.len as usize]
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges[..self.len as usize]
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices().first().copied()
    }

    /// The same label with its vertices renamed.
    pub(crate) fn renamed(
        &self,
        vertex: impl Fn(Vertex) -> Vertex,
        edge: impl Fn(EdgeId) -> EdgeId,
    ) -> Label {
        let mut out = *self;
        for i in 0..self.len as usize {
            out.vertices[i] = vertex(out.vertices[i]);
            out.edges[i] = edge(out.edges[i]);
        }
        out
    }

    /// Edge joining the owner to label entry `v`.
    pub fn edge_to(&self, v: Vertex) -> Option<EdgeId> {
        self.vertices()
            .iter()
            .position(|&x| x == v)
            .map(|i| self.edges[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexBfsOrder {
    /// `order[i]` is the vertex numbered `i`.
    pub order: Vec<Vertex>,
    /// Inverse of `order`.
    pub number: Vec<usize>,
    pub labels: Vec<Label>,
    pub root: Vertex,
}

impl LexBfsOrder {
    pub fn label(&self, v: Vertex) -> &Label {
        &self.labels[v]
    }

    /// Parent in the search tree: the first label entry.
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.labels[v].first()
    }

    fn from_order(g: &Graph, order: Vec<Vertex>) -> Result<Self, GraphError> {
        Self::from_order_with(g.vertex_count(), order, |v| g.neighbors(v))
    }

    /// Labels of a given vertex ordering over an arbitrary adjacency.
    pub(crate) fn from_order_with<'a, I: Incidence + 'a>(
        n: usize,
        order: Vec<Vertex>,
        neighbors: impl Fn(Vertex) -> &'a [I],
    ) -> Result<Self, GraphError> {
        let mut number = vec![NIL; n];
        for (i, &v) in order.iter().enumerate() {
            number[v] = i;
        }
        let mut labels = vec![Label::default(); n];
        for &v in &order {
            for &a in neighbors(v) {
                let (w, e) = (a.vertex(), a.edge());
                if number[w] > number[v] {
                    labels[w].push(v, e);
                }
            }
        }
        if order[1..].iter().any(|&v| labels[v].is_empty()) {
            return Err(GraphError::NotConnected);
        }
        Ok(LexBfsOrder {
            root: order[0],
            order,
            number,
            labels,
        })
    }
}

const NONE: u32 = u32::MAX;

struct Cell {
    head: u32,
    tail: u32,
    prev: u32,
    next: u32,
    split: u32,
    stamp: u32,
}

/// Vertex ids are stored as `u32` and emptied cells are recycled, which keeps
/// the working set small on large inputs.
struct CellQueue {
    cells: Vec<Cell>,
    free: Vec<u32>,
    first: u32,
    next_vertex: Vec<u32>,
    prev_vertex: Vec<u32>,
    cell_of: Vec<u32>,
}

impl CellQueue {
    fn new_cell(&mut self, prev: u32, next: u32) -> u32 {
        let cell = Cell {
            head: NONE,
            tail: NONE,
            prev,
            next,
            split: NONE,
            stamp: NONE,
        };
        let id = match self.free.pop() {
            Some(id) => {
                self.cells[id as usize] = cell;
                id
            }
            None => {
                self.cells.push(cell);
                (self.cells.len() - 1) as u32
            }
        };
        if prev != NONE {
            self.cells[prev as usize].next = id;
        } else {
            self.first = id;
        }
        if next != NONE {
            self.cells[next as usize].prev = id;
        }
        id
    }

    fn release_cell(&mut self, c: u32) {
        let (p, n) = (self.cells[c as usize].prev, self.cells[c as usize].next);
        if p != NONE {
            self.cells[p as usize].next = n;
        } else {
            self.first = n;
        }
        if n != NONE {
            self.cells[n as usize].prev = p;
        }
        self.free.push(c);
    }

    fn append(&mut self, c: u32, v: u32) {
        let tail = self.cells[c as usize].tail;
        self.prev_vertex[v as usize] = tail;
        self.next_vertex[v as usize] = NONE;
        if tail != NONE {
            self.next_vertex[tail as usize] = v;
        } else {
            self.cells[c as usize].head = v;
        }
        self.cells[c as usize].tail = v;
        self.cell_of[v as usize] = c;
    }

    fn remove(&mut self, v: u32) {
        let c = self.cell_of[v as usize] as usize;
        let (p, n) = (self.prev_vertex[v as usize], self.next_vertex[v as usize]);
        if p != NONE {
            self.next_vertex[p as usize] = n;
        } else {
            self.cells[c].head = n;
        }
        if n != NONE {
            self.prev_vertex[n as usize] = p;
        } else {
            self.cells[c].tail = p;
        }
    }

    fn is_empty(&self, c: u32) -> bool {
        self.cells[c as usize].head == NONE
    }
}

/// LexBFS from `root`, removing the smallest vertex id from the first set.
pub fn lexbfs(g: &Graph, root: Vertex) -> Result<LexBfsOrder, GraphError> {
    let n = g.vertex_count();
    if root >= n {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            vertex_count: n,
        });
    }
    lexbfs_with(n, root, 0..n, |v| g.neighbors(v))
}

/// LexBFS over an adjacency given by `neighbors`. Ties are broken by the
/// position in `ranking`, which lists every vertex once; each neighbor list
/// must follow the same ranking.
pub(crate) fn lexbfs_with<'a, I: Incidence + 'a>(
    n: usize,
    root: Vertex,
    ranking: impl Iterator<Item = Vertex>,
    neighbors: impl Fn(Vertex) -> &'a [I],
) -> Result<LexBfsOrder, GraphError> {
    assert!(
        n < NONE as usize,
        "LexBFS supports fewer than 2^32 - 1 vertices"
    );
    let mut q = CellQueue {
        cells: Vec::with_capacity(n.min(1 << 16) + 2),
        free: Vec::new(),
        first: NONE,
        next_vertex: vec![NONE; n],
        prev_vertex: vec![NONE; n],
        cell_of: vec![NONE; n],
    };
    let first = q.new_cell(NONE, NONE);
    q.append(first, root as u32);
    if n > 1 {
        let rest = q.new_cell(first, NONE);
        for v in ranking.filter(|&v| v != root) {
            q.append(rest, v as u32);
        }
    }

    let mut number = vec![NIL; n];
    let mut order = Vec::with_capacity(n);
    let mut labels = vec![Label::default(); n];
    let mut touched = Vec::new();
    for i in 0..n {
        let stamp = i as u32;
        let c = q.first;
        let v = q.cells[c as usize].head;
        q.remove(v);
        q.cell_of[v as usize] = NONE;
        if q.is_empty(c) {
            q.release_cell(c);
        }
        let v = v as usize;
        if i > 0 && labels[v].is_empty() {
            return Err(GraphError::NotConnected);
        }
        number[v] = i;
        order.push(v);

        for &a in neighbors(v) {
            let (w, e) = (a.vertex(), a.edge());
            let c = q.cell_of[w];
            if c == NONE {
                continue;
            }
            labels[w].push(v, e);
            if q.cells[c as usize].stamp != stamp {
                let before = q.cells[c as usize].prev;
                let nc = q.new_cell(before, c);
                q.cells[c as usize].split = nc;
                q.cells[c as usize].stamp = stamp;
                touched.push(c);
            }
            let nc = q.cells[c as usize].split;
            q.remove(w as u32);
            q.append(nc, w as u32);
        }
        for c in touched.drain(..) {
            if q.is_empty(c) {
                q.release_cell(c);
            }
        }
    }
    Ok(LexBfsOrder {
        order,
        number,
        labels,
        root,
    })
}

/// Plain breadth-first order from `root` (neighbors in increasing id order),
/// with labels computed exactly as for LexBFS.
pub fn bfs_order(g: &Graph, root: Vertex) -> Result<LexBfsOrder, GraphError> {
    let n = g.vertex_count();
    if root >= n {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            vertex_count: n,
        });
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &(w, _) in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if order.len() < n {
        return Err(GraphError::NotConnected);
    }
    LexBfsOrder::from_order(g, order)
}
