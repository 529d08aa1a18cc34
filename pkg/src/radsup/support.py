"""Supports of multidegrees and the labelled multigraph attached to them.

A support is an ordered multiset of non-empty subsets of {1..n}.  Two
generator indices v, w are joined by an edge labelled j whenever j lies in
both sets.  A support admits only radical ideals exactly when this graph
has no cycle with pairwise distinct edge labels; this module decides that
condition with a fast union-find test on the label/generator incidence
graph and, independently, by brute-force cycle enumeration.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property

Multidegree = frozenset


def multidegree(labels) -> frozenset:
    """Validated constructor for a multidegree: a non-empty set of 1-based labels."""
    out = frozenset(int(x) for x in labels)
    if not out:
        raise ValueError("multidegree must be non-empty")
    if any(j < 1 for j in out):
        raise ValueError("labels must be positive (1-based)")
    return out


@dataclass(frozen=True)
class Support:
    """An ordered multiset of multidegrees inside {1..n}.

    Sets are kept in order (repetitions allowed) so that certificates can
    refer to generator indices stably.
    """

    n: int
    sets: tuple[frozenset, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        normalized = tuple(multidegree(a) for a in self.sets)
        if not normalized:
            raise ValueError("a support needs at least one set")
        for idx, a in enumerate(normalized, start=1):
            if max(a) > self.n:
                raise ValueError(f"set {idx} uses a label larger than n={self.n}")
        object.__setattr__(self, "sets", normalized)

    @property
    def s(self) -> int:
        return len(self.sets)

    def label_count(self, j: int) -> int:
        """Number of sets containing the label j."""
        return sum(1 for a in self.sets if j in a)

    def to_text(self) -> str:
        return "; ".join(" ".join(str(j) for j in sorted(a)) for a in self.sets)

    def to_json(self) -> dict:
        return {"n": self.n, "sets": [sorted(a) for a in self.sets]}

    def __str__(self) -> str:
        return self.to_text()


def parse_support_text(text: str, n: int | None = None) -> Support:
    """Parse "1 2; 2 3; 1 3" into a Support.

    n defaults to the largest label present.  Empty sets and non-integer
    tokens are rejected with the offending set position.
    """
    parts = text.split(";")
    sets = []
    for pos, part in enumerate(parts, start=1):
        tokens = part.split()
        if not tokens:
            raise ValueError(f"empty set at position {pos}")
        labels = []
        for tok in tokens:
            try:
                labels.append(int(tok))
            except ValueError:
                raise ValueError(f"bad label {tok!r} in set at position {pos}") from None
        if any(j < 1 for j in labels):
            raise ValueError(f"non-positive label in set at position {pos}")
        sets.append(frozenset(labels))
    top = max(max(a) for a in sets)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"label {top} exceeds n={n}")
    return Support(n, tuple(sets))


def parse_support_json(data) -> Support:
    """Parse {"n": 3, "sets": [[1,2],[2,3]]} (dict or JSON string)."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data or "sets" not in data:
        raise ValueError('structured support needs keys "n" and "sets"')
    return Support(int(data["n"]), tuple(frozenset(a) for a in data["sets"]))


def parse_support(text: str, n: int | None = None) -> Support:
    """Parse either support format, sniffing JSON by a leading brace."""
    if text.lstrip().startswith("{"):
        return parse_support_json(text)
    return parse_support_text(text, n=n)


@dataclass(frozen=True)
class LabeledMultigraph:
    """Multigraph on generator indices 1..s with integer edge labels."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]  # (v, w, label) with v < w

    def __post_init__(self):
        for v, w, j in self.edges:
            if not (1 <= v < w <= self.vertex_count):
                raise ValueError(f"bad edge endpoints ({v}, {w})")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate (pair, label) edge")

    @cached_property
    def adjacency(self) -> dict:
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, self.vertex_count + 1)}
        for v, w, j in self.edges:
            adj[v].append((w, j))
            adj[w].append((v, j))
        return adj

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, v: int, w: int, label: int) -> bool:
        return (min(v, w), max(v, w), label) in self.edge_set


def build_graph(support: Support) -> LabeledMultigraph:
    """Graph with an edge labelled j between v and w whenever j is in both sets."""
    edges = []
    for v in range(1, support.s + 1):
        for w in range(v + 1, support.s + 1):
            for j in sorted(support.sets[v - 1] & support.sets[w - 1]):
                edges.append((v, w, j))
    return LabeledMultigraph(support.s, tuple(edges))


@dataclass(frozen=True)
class LabeledCycle:
    """A cycle: distinct vertices v_1..v_k with label j_t on edge (v_t, v_{t+1}).

    The closing label j_k sits on (v_k, v_1).  A 2-cycle uses two parallel
    edges, which forces its two labels to differ.
    """

    vertices: tuple[int, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        k = len(self.vertices)
        if k < 2:
            raise ValueError("a cycle needs at least two vertices")
        if len(self.labels) != k:
            raise ValueError("need exactly one label per edge")
        if len(set(self.vertices)) != k:
            raise ValueError("cycle vertices must be pairwise distinct")
        if k == 2 and self.labels[0] == self.labels[1]:
            raise ValueError("a 2-cycle needs two distinct parallel edges")

    @property
    def k(self) -> int:
        return len(self.vertices)

    def has_distinct_labels(self) -> bool:
        return len(set(self.labels)) == self.k

    def has_constant_labels(self) -> bool:
        return len(set(self.labels)) == 1

    def edges_used(self) -> tuple[tuple[int, int, int], ...]:
        out = []
        k = self.k
        for t in range(k):
            v, w = self.vertices[t], self.vertices[(t + 1) % k]
            out.append((min(v, w), max(v, w), self.labels[t]))
        return tuple(out)

    def validate_in(self, graph: LabeledMultigraph) -> None:
        for v, w, j in self.edges_used():
            if not graph.has_edge(v, w, j):
                raise ValueError(f"cycle edge ({v}, {w}, {j}) is not in the graph")

    def rotated(self, r: int) -> "LabeledCycle":
        return LabeledCycle(self.vertices[r:] + self.vertices[:r], self.labels[r:] + self.labels[:r])

    def reflected(self) -> "LabeledCycle":
        verts = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        return LabeledCycle(verts, tuple(reversed(self.labels)))

    def canonical(self) -> "LabeledCycle":
        """Rotate the smallest vertex to the front, then pick the orientation
        with the lexicographically smaller label sequence."""
        candidates = []
        for cyc in (self, self.reflected()):
            r = cyc.vertices.index(min(cyc.vertices))
            rot = cyc.rotated(r)
            candidates.append((rot.labels, rot.vertices))
        labels, vertices = min(candidates)
        return LabeledCycle(vertices, labels)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "labels": list(self.labels)}


@dataclass(frozen=True)
class SupportVerdict:
    """Outcome of the radical-support check.

    For a positive verdict the evidence is the full set of (label, generator)
    incidence edges, which a verifier can re-check to be acyclic; for a
    negative verdict it is a cycle with pairwise distinct labels.
    """

    is_radical_support: bool
    forest: tuple[tuple[int, int], ...] | None
    cycle: LabeledCycle | None

    def __post_init__(self):
        if self.is_radical_support:
            if self.forest is None or self.cycle is not None:
                raise ValueError("positive verdict carries forest evidence only")
        else:
            if self.cycle is None or self.forest is not None:
                raise ValueError("negative verdict carries cycle evidence only")
            if not self.cycle.has_distinct_labels():
                raise ValueError("counterexample cycle must have distinct labels")

    def to_json(self) -> dict:
        if self.is_radical_support:
            return {
                "is_radical_support": True,
                "evidence": {"kind": "forest", "incidence_edges": [list(e) for e in self.forest]},
            }
        return {
            "is_radical_support": False,
            "evidence": {"kind": "cycle", **self.cycle.to_json()},
        }


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def _bipartite_to_cycle(path_nodes: list[int], closing_label: int, n: int) -> LabeledCycle:
    # path_nodes alternate label, generator, label, ..., generator (node ids:
    # labels are 1..n, generator v is stored as n + v)
    generators = [node - n for node in path_nodes[1::2]]
    labels_path = path_nodes[0::2]
    labels = tuple(labels_path[1:]) + (closing_label,)
    return LabeledCycle(tuple(generators), labels).canonical()


def is_radical_support(support: Support) -> SupportVerdict:
    """Forest test on the label/generator incidence graph.

    The incidence graph has an edge (j, v) whenever j is in the v-th set; it
    is acyclic exactly when the labelled multigraph has no cycle with
    pairwise distinct labels (certified against enumerate_cycles by the
    self-test suite, never assumed silently).
    """
    n = support.n
    uf = _UnionFind(n + support.s + 1)
    adjacency: dict[int, list[int]] = {}
    forest_edges: list[tuple[int, int]] = []
    for v in range(1, support.s + 1):
        vnode = n + v
        for j in sorted(support.sets[v - 1]):
            if uf.union(j, vnode):
                adjacency.setdefault(j, []).append(vnode)
                adjacency.setdefault(vnode, []).append(j)
                forest_edges.append((j, v))
                continue
            # adding (j, v) closes a cycle; recover the path j -> vnode by BFS
            parents = {j: None}
            queue = deque([j])
            while vnode not in parents:
                node = queue.popleft()
                for nxt in adjacency.get(node, ()):
                    if nxt not in parents:
                        parents[nxt] = node
                        queue.append(nxt)
            path = [vnode]
            while parents[path[-1]] is not None:
                path.append(parents[path[-1]])
            path.reverse()
            cycle = _bipartite_to_cycle(path, closing_label=j, n=n)
            return SupportVerdict(False, forest=None, cycle=cycle)
    return SupportVerdict(True, forest=tuple(forest_edges), cycle=None)


def enumerate_cycles(graph: LabeledMultigraph, max_len: int) -> list[LabeledCycle]:
    """All cycles with at most max_len vertices, one representative per
    rotation/reflection class, in canonical form.  Brute-force oracle."""
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    adjacency = graph.adjacency
    found: set[LabeledCycle] = set()

    def extend(start: int, path_v: list[int], path_l: list[int], visited: set[int]) -> None:
        last = path_v[-1]
        for w, lab in adjacency[last]:
            if w == start and len(path_v) >= 2:
                if len(path_v) == 2 and lab == path_l[0]:
                    continue  # same parallel edge reused, not a cycle
                found.add(LabeledCycle(tuple(path_v), tuple(path_l) + (lab,)).canonical())
            if w <= start or w in visited or len(path_v) >= max_len:
                continue
            path_v.append(w)
            path_l.append(lab)
            visited.add(w)
            extend(start, path_v, path_l, visited)
            path_v.pop()
            path_l.pop()
            visited.remove(w)

    for start in range(1, graph.vertex_count + 1):
        extend(start, [start], [], {start})
    return sorted(found, key=lambda c: (c.k, c.vertices, c.labels))


def reduce_to_distinct_labels(graph: LabeledMultigraph, cycle: LabeledCycle) -> LabeledCycle:
    """Shorten a cycle with non-constant labels to one with distinct labels.

    Repeatedly: rotate so edge 0 carries a repeated label followed by a
    different one, locate another edge with the same label, and take the
    shortcut through the chord guaranteed by shared membership.
    """
    cycle.validate_in(graph)
    if cycle.has_distinct_labels():
        return cycle
    if cycle.has_constant_labels():
        raise ValueError("cycle labels are constant; no distinct-label cycle exists here")
    current = cycle
    while not current.has_distinct_labels():
        k = current.k
        labels = current.labels
        counts = Counter(labels)
        pivot = next(
            i for i in range(k) if counts[labels[i]] > 1 and labels[(i + 1) % k] != labels[i]
        )
        current = current.rotated(pivot)
        verts, labels = current.vertices, current.labels
        q = next(i for i in range(2, k) if labels[i] == labels[0])
        chord = (min(verts[q], verts[1]), max(verts[q], verts[1]), labels[0])
        if chord not in graph.edge_set:
            raise AssertionError(f"chord {chord} missing; input cycle was not valid")
        current = LabeledCycle(verts[1 : q + 1], labels[1:q] + (labels[0],))
    return current


def min_ring_dims(support: Support) -> tuple[int, ...]:
    """Smallest block sizes admitting a regular sequence: the incidence counts."""
    return tuple(max(1, support.label_count(j)) for j in range(1, support.n + 1))
