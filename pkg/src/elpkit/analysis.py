"""Epistemic dependence, stratification and tightness.

Both checks build a witness layering: atoms that must share a layer are
merged with a union-find, the merged classes are layered by longest path
over the dependence edges, and the result is re-verified against the raw
conditions before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Program


@dataclass(frozen=True)
class DependenceGraph:
    atoms: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    plus_edges: frozenset[tuple[str, str]]
    coatom_groups: tuple[frozenset[str], ...]


@dataclass(frozen=True)
class LayerAssignment:
    layers: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, atom: str) -> int:
        return self.layers[atom]

    def strata(self) -> list[list[str]]:
        top = max(self.layers.values(), default=-1)
        return [sorted(a for a, v in self.layers.items() if v == k) for k in range(top + 1)]


def _sub_atoms(lits) -> frozenset[str]:
    return frozenset().union(*(l.atoms() for l in lits))


def dep_pairs(program: Program) -> DependenceGraph:
    edges, plus, groups = set(), set(), []
    for r in program.rules:
        upper = set(r.head).union(*(l.atoms() for l in r.body_obj))
        sub = _sub_atoms(r.body_sub)
        sub_pos = _sub_atoms(r.body_part("+", "sub"))
        for a in upper:
            edges.update((a, b) for b in sub)
            plus.update((a, b) for b in sub_pos)
        group = r.atoms() - sub
        if len(group) > 1:
            groups.append(frozenset(group))
    return DependenceGraph(
        tuple(sorted(program.signature.atoms)),
        frozenset(edges),
        frozenset(plus),
        tuple(groups),
    )


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the lexicographically smallest name as representative
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _condense(graph: DependenceGraph, plus_only: bool):
    uf = _UnionFind(graph.atoms)
    for g in graph.coatom_groups:
        first, *rest = sorted(g)
        for x in rest:
            uf.union(first, x)
    edges = graph.plus_edges if plus_only else graph.edges
    succ: dict[str, set[str]] = {uf.find(a): set() for a in graph.atoms}
    for a, b in edges:
        succ[uf.find(a)].add(uf.find(b))
    return uf, succ


def _find_cycle(succ: dict[str, set[str]]) -> list[str] | None:
    state: dict[str, int] = {}
    stack: list[str] = []

    def visit(v):
        state[v] = 1
        stack.append(v)
        for w in sorted(succ[v]):
            if state.get(w) == 1:
                return stack[stack.index(w):] + [w]
            if w not in state:
                found = visit(w)
                if found:
                    return found
        stack.pop()
        state[v] = 2
        return None

    for v in sorted(succ):
        if v not in state:
            found = visit(v)
            if found:
                return found
    return None


def _layer(graph: DependenceGraph, plus_only: bool) -> LayerAssignment | None:
    uf, succ = _condense(graph, plus_only)
    if _find_cycle(succ) is not None:
        return None
    depth: dict[str, int] = {}

    def height(v):
        if v not in depth:
            depth[v] = 1 + max((height(w) for w in succ[v]), default=-1)
        return depth[v]

    la = LayerAssignment({a: height(uf.find(a)) for a in graph.atoms})
    if not verify(graph, la, plus_only):
        raise AssertionError("constructed layering violates its own conditions")
    return la


def verify(graph: DependenceGraph, la: LayerAssignment, plus_only: bool = False) -> bool:
    """Check a layering against the raw conditions."""
    for g in graph.coatom_groups:
        if len({la[a] for a in g}) > 1:
            return False
    edges = graph.plus_edges if plus_only else graph.edges
    return all(la[a] > la[b] for a, b in edges)


def stratify(program: Program) -> LayerAssignment | None:
    return _layer(dep_pairs(program), plus_only=False)


def tight_stratify(program: Program) -> LayerAssignment | None:
    return _layer(dep_pairs(program), plus_only=True)


def is_stratified(program: Program) -> bool:
    return stratify(program) is not None


def is_tight(program: Program) -> bool:
    return tight_stratify(program) is not None


def violation(program: Program, tight: bool = False) -> list[list[str]] | None:
    """A dependence cycle between merged atom classes that rules out any
    layering, each class listed by its members; None when a layering exists."""
    graph = dep_pairs(program)
    uf, succ = _condense(graph, tight)
    cycle = _find_cycle(succ)
    if cycle is None:
        return None
    members = {}
    for a in graph.atoms:
        members.setdefault(uf.find(a), []).append(a)
    return [sorted(members[c]) for c in cycle]
