"""Twin vertices, the typed twin quotient, and the size reduction it allows.

Two distinct vertices are *adjacent twins* when their closed neighborhoods
coincide (N[u] = N[v], which forces the edge uv) and *non-adjacent twins*
when their open neighborhoods coincide (N(u) = N(v), which forbids it).
Being equal-or-twins is an equivalence relation; each class induces either
a clique or an independent set, never a mix, so classes carry one of three
kinds: singleton ("1"), clique ("K"), independent ("N").

The quotient graph joins two classes exactly when every member of one is
adjacent to every member of the other, so adjacency between classes is
representative-independent.  Twins are equidistant from every other
vertex, which is what makes the quotient (and the class-size reduction in
:func:`reduce_twins`) interact cleanly with metric dimension.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph_core import Graph, diameter, is_connected


class TwinRelation(enum.Enum):
    NOT_TWINS = "not-twins"
    ADJACENT_TWINS = "adjacent-twins"
    NON_ADJACENT_TWINS = "non-adjacent-twins"


class TwinKind(enum.Enum):
    SINGLETON = "1"
    CLIQUE = "K"
    INDEPENDENT = "N"


@dataclass(frozen=True)
class TwinClass:
    """Maximal set of pairwise twins with its induced-subgraph kind."""

    members: tuple[int, ...]
    kind: TwinKind

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class TwinGraph:
    """Twin classes (ordered by least member) and the quotient on them.

    ``class_index[v]`` is the quotient vertex of original vertex ``v``.
    """

    classes: tuple[TwinClass, ...]
    quotient: Graph
    class_index: tuple[int, ...]

    def kinds(self) -> tuple[TwinKind, ...]:
        return tuple(c.kind for c in self.classes)


@dataclass(frozen=True)
class DiameterRelation:
    diam_g: int
    diam_quotient: int
    collapsed: bool


@dataclass(frozen=True)
class TwinReduction:
    """Graph with every twin class cut down to at most two members.

    ``beta(original) = beta(reduced) + delta``; ``kept[i]`` is the original
    index of reduced vertex ``i``.
    """

    reduced: Graph
    delta: int
    kept: tuple[int, ...]


def are_twins(g: Graph, u: int, v: int) -> TwinRelation:
    """Classify a vertex pair by closed/open neighborhood equality."""
    if u == v:
        raise ValueError("twin relation needs two distinct vertices")
    ru, rv = g.rows[u], g.rows[v]
    if ru | (1 << u) == rv | (1 << v):
        return TwinRelation.ADJACENT_TWINS
    if ru == rv:
        return TwinRelation.NON_ADJACENT_TWINS
    return TwinRelation.NOT_TWINS


def twin_partition(g: Graph) -> list[TwinClass]:
    """Maximal twin classes, ordered by least member.

    Grouping by equal open neighborhoods catches non-adjacent twins and
    grouping by equal closed neighborhoods catches adjacent ones; a class
    never mixes the two kinds, so the two groupings merge cleanly.
    """
    n = g.n
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for key_of in (lambda v: g.rows[v], lambda v: g.rows[v] | (1 << v)):
        groups: dict[int, int] = {}
        for v in range(n):
            key = key_of(v)
            if key in groups:
                parent[find(v)] = find(groups[key])
            else:
                groups[key] = v

    by_root: dict[int, list[int]] = {}
    for v in range(n):
        by_root.setdefault(find(v), []).append(v)

    classes = []
    for members in sorted(by_root.values()):
        members_t = tuple(members)
        if len(members_t) == 1:
            kind = TwinKind.SINGLETON
        elif g.has_edge(members_t[0], members_t[1]):
            kind = TwinKind.CLIQUE
        else:
            kind = TwinKind.INDEPENDENT
        _assert_uniform(g, members_t, kind)
        classes.append(TwinClass(members_t, kind))
    return classes


def twin_graph(g: Graph) -> TwinGraph:
    """Quotient of g by the twin equivalence, with typed classes."""
    classes = twin_partition(g)
    k = len(classes)
    class_index = [0] * g.n
    for ci, c in enumerate(classes):
        for v in c.members:
            class_index[v] = ci
    reps = [c.members[0] for c in classes]
    edges = [
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if g.has_edge(reps[i], reps[j])
    ]
    return TwinGraph(tuple(classes), Graph.from_edges(k, edges), tuple(class_index))


def quotient_diameter_relation(g: Graph) -> DiameterRelation:
    """Both diameters plus whether quotienting shrank the diameter.

    Shrinking can only happen when the quotient is complete, and never when
    diam(g) >= 3; both facts are asserted.
    """
    if g.n == 1:
        raise ValueError("diameter relation undefined for the one-vertex graph")
    if not is_connected(g):
        raise ValueError("diameter relation undefined: graph is disconnected")
    dg = diameter(g)
    q = twin_graph(g).quotient
    dq = diameter(q)
    collapsed = dq < dg
    if collapsed:
        assert q.edge_count == q.n * (q.n - 1) // 2, "collapse without complete quotient"
    if dg >= 3:
        assert dq == dg, "quotient changed a diameter >= 3"
    return DiameterRelation(dg, dq, collapsed)


def reduce_twins(g: Graph) -> TwinReduction:
    """Shrink every twin class of size r >= 3 to its two least members.

    Each deleted vertex lowers the metric dimension by exactly one (a twin
    of it survives), so beta(g) = beta(reduced) + delta with
    delta = sum of (r - 2).  Classes of size 2 are untouched -- deleting
    down to one member does not preserve the dimension.  With diam >= 3 the
    quotient, and hence the diameter, is unchanged.
    """
    if not is_connected(g):
        raise ValueError("twin reduction undefined: graph is disconnected")
    kept: list[int] = []
    delta = 0
    for c in twin_partition(g):
        if len(c.members) >= 3:
            kept.extend(c.members[:2])
            delta += len(c.members) - 2
        else:
            kept.extend(c.members)
    kept.sort()
    pos = {v: i for i, v in enumerate(kept)}
    edges = [
        (pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos
    ]
    return TwinReduction(Graph.from_edges(len(kept), edges), delta, tuple(kept))


def _assert_uniform(g: Graph, members: tuple[int, ...], kind: TwinKind) -> None:
    """Every pair in a class must realize the class kind."""
    if kind == TwinKind.SINGLETON:
        return
    want = kind == TwinKind.CLIQUE
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            assert g.has_edge(u, v) == want, "mixed twin kinds inside one class"
