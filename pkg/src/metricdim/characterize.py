"""Deciding beta(G) = n - diam(G) from the twin quotient alone.

For diameter 1 only complete graphs qualify.  For diameter 2 the quotient
must be a 2-path with an independent class, or a 3-path whose leaves are
(singleton, singleton-or-clique) with a singleton-or-clique middle.  For
diameter D >= 3 the quotient must be a (D+1)-path, a (D+1)-path with one
pendant class hung off an interior spine class, or a (D+1)-path with one
class forming a triangle with a spine edge -- each with tight restrictions
on which classes may be non-singleton and of which kind.  The decision
never computes the metric dimension itself; the exhaustive sweep in
:mod:`metricdim.enumeration` checks it against the brute-force solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .graph_core import Graph, all_pairs, diameter, is_connected
from .twins import TwinGraph, TwinKind, twin_graph

SHAPE_PATH = "path"
SHAPE_PATH_LEAF = "path-leaf"
SHAPE_PATH_TRIANGLE = "path-triangle"
SHAPE_OTHER = "other"

_1 = TwinKind.SINGLETON
_K = TwinKind.CLIQUE
_N = TwinKind.INDEPENDENT


@dataclass(frozen=True)
class QuotientShape:
    """Shape of a twin quotient relative to a target diameter D.

    ``spine`` lists class indices u_0..u_D in a deterministic orientation;
    ``extra`` is the off-spine class for the leaf/triangle shapes and ``k``
    its attachment parameter (pendant on u_{k-1}, or triangle on the edge
    u_{k-1} u_k), reported for the orientation that minimizes it.
    """

    shape: str
    spine: tuple[int, ...] = ()
    extra: Optional[int] = None
    k: Optional[int] = None


@dataclass(frozen=True)
class CharacterizationVerdict:
    """Outcome of the minimum-order decision for one graph."""

    accepted: bool
    case_label: str
    alpha: int
    n: int
    D: int

    @property
    def beta_expected(self) -> int:
        return self.n - self.D

    def as_json_dict(self) -> dict:
        return {
            "n": self.n,
            "D": self.D,
            "beta_expected": self.beta_expected,
            "accepted": self.accepted,
            "case_label": self.case_label,
            "alpha": self.alpha,
        }


def classify_quotient(tg: TwinGraph, D: int) -> QuotientShape:
    """Match a twin quotient against the three admissible D >= 3 shapes.

    Anything else -- wrong order, cycles, bad attachment position (the
    pendant may not hang next to a spine endpoint, the triangle may not
    contain one) -- comes back as shape "other".
    """
    if D < 3:
        raise ValueError("quotient classification applies to diameter >= 3")
    q = tg.quotient
    if q.n == D + 1:
        spine = _path_order(q)
        if spine is not None:
            return QuotientShape(SHAPE_PATH, spine=_orient_path(spine))
        return QuotientShape(SHAPE_OTHER)
    if q.n == D + 2:
        found = _match_path_leaf(q, D) or _match_path_triangle(q, D)
        if found is not None:
            return found
    return QuotientShape(SHAPE_OTHER)


def decide_min_order(g: Graph) -> CharacterizationVerdict:
    """Accept exactly when the metric dimension equals n - diam(g).

    Decided from the twin quotient without computing the dimension.  Labels
    name the matched case: "D1", "D2-P2", "D2-P3" for small diameters, then
    "1a".."1d" (path quotient), "2" (pendant), "3" (triangle).  Rejections
    carry a ``reject:`` label naming the violated condition.
    """
    if not is_connected(g):
        raise ValueError("characterization undefined: graph is disconnected")
    if g.n < 2:
        raise ValueError("characterization needs n >= 2")
    D = diameter(g)
    tg = twin_graph(g)
    kinds = tg.kinds()
    alpha = sum(1 for kind in kinds if kind != _1)

    def verdict(accepted: bool, label: str) -> CharacterizationVerdict:
        return CharacterizationVerdict(accepted, label, alpha, g.n, D)

    if D == 1:
        return verdict(True, "D1")

    q = tg.quotient
    if D == 2:
        if q.n == 2:
            if _N in kinds:
                return verdict(True, "D2-P2")
            return verdict(False, "reject:D2-P2-no-independent-class")
        if q.n == 3:
            order = _path_order(q)
            if order is not None:
                a, mid, b = order
                leaves_ok = (kinds[a] == _1 and kinds[b] in (_1, _K)) or (
                    kinds[b] == _1 and kinds[a] in (_1, _K)
                )
                if leaves_ok and kinds[mid] in (_1, _K):
                    return verdict(True, "D2-P3")
                return verdict(False, "reject:D2-P3-types")
        return verdict(False, "reject:D2-quotient-shape")

    shape = classify_quotient(tg, D)
    if shape.shape == SHAPE_OTHER:
        return verdict(False, "reject:quotient-shape")

    if shape.shape == SHAPE_PATH:
        if alpha <= 1:
            return verdict(True, "1a")
        heavy = [i for i, kind in enumerate(kinds) if kind != _1]
        if alpha == 2:
            i, j = heavy
            if q.has_edge(i, j):
                for x, y in ((i, j), (j, i)):
                    if q.degree(x) == 1 and kinds[x] == _K and kinds[y] != _K:
                        return verdict(False, "reject:clique-leaf-pair")
                return verdict(True, "1b")
            if _quotient_dist(q, i, j) == 2 and kinds[i] == kinds[j] == _N:
                return verdict(True, "1c")
            return verdict(False, "reject:heavy-pair-placement")
        if alpha == 3:
            for c in heavy:
                row = q.rows[c]
                n_nbrs = sum(
                    1 for x in heavy if x != c and (row >> x) & 1 and kinds[x] == _N
                )
                if n_nbrs >= 2:
                    return verdict(True, "1d")
            return verdict(False, "reject:heavy-triple-placement")
        return verdict(False, "reject:alpha-above-3")

    if shape.shape == SHAPE_PATH_LEAF:
        b = shape.spine[shape.k - 1]
        nbrs = [x for x in range(q.n) if q.has_edge(b, x)]
        if any(kinds[x] not in (_1, _N) for x in nbrs):
            return verdict(False, "reject:pendant-neighbour-types")
        allowed = set(nbrs) | {b}
        if any(kinds[x] != _1 for x in range(q.n) if x not in allowed):
            return verdict(False, "reject:pendant-far-types")
        return verdict(True, "2")

    # triangle shape: the three cycle classes, everything else singleton
    w = shape.extra
    cycle = {w} | {x for x in range(q.n) if q.has_edge(w, x)}
    if any(kinds[x] == _N for x in cycle):
        return verdict(False, "reject:triangle-types")
    if any(kinds[x] != _1 for x in range(q.n) if x not in cycle):
        return verdict(False, "reject:triangle-far-types")
    return verdict(True, "3")


def enumerate_min_order_family(beta: int, D: int) -> Iterator[Graph]:
    """All graphs with n = beta + D, diameter D, and metric dimension beta.

    Enumerates the admissible quotient templates (shape, class kinds, class
    sizes), drops mirror-image duplicates, and expands each template by
    blowing classes up into cliques or independent sets.  Every emitted
    graph is checked against :func:`decide_min_order` before leaving.
    """
    if beta < 1 or D < 3:
        raise ValueError("family enumeration needs beta >= 1 and D >= 3")
    for template in _templates(beta, D):
        g = _expand(*template)
        v = decide_min_order(g)
        assert v.accepted and g.n == beta + D and v.D == D, (
            f"template expansion broke its contract: {template}"
        )
        yield g


# -- quotient shape detection -------------------------------------------------


def _path_order(q: Graph) -> Optional[tuple[int, ...]]:
    """Vertices of q in path order (least endpoint first), or None."""
    if q.n == 1:
        return (0,)
    degs = [q.degree(v) for v in range(q.n)]
    ends = [v for v in range(q.n) if degs[v] == 1]
    if len(ends) != 2 or any(d > 2 for d in degs) or q.edge_count != q.n - 1:
        return None
    order = [min(ends)]
    prev = -1
    while len(order) < q.n:
        cur = order[-1]
        nxt = [x for x in range(q.n) if q.has_edge(cur, x) and x != prev]
        if len(nxt) != 1:
            return None
        prev = cur
        order.append(nxt[0])
    return tuple(order)


def _orient_path(spine: tuple[int, ...]) -> tuple[int, ...]:
    return min(spine, spine[::-1])


def _match_path_leaf(q: Graph, D: int) -> Optional[QuotientShape]:
    """Path of D+1 classes plus one pendant class on an interior class.

    Valid only when both spine segments beside the branch class have length
    at least 2, i.e. attachment parameter k in [3, D-1].
    """
    if q.edge_count != q.n - 1:
        return None
    degs = [q.degree(v) for v in range(q.n)]
    branch = [v for v in range(q.n) if degs[v] == 3]
    if len(branch) != 1 or any(d > 3 for d in degs) or degs.count(1) != 3:
        return None
    b = branch[0]
    legs = []
    for first in (x for x in range(q.n) if q.has_edge(b, x)):
        leg = [first]
        prev = b
        while q.degree(leg[-1]) == 2:
            nxt = [x for x in range(q.n) if q.has_edge(leg[-1], x) and x != prev]
            if len(nxt) != 1 or q.degree(nxt[0]) == 3:
                return None
            prev = leg[-1]
            leg.append(nxt[0])
        legs.append(leg)
    if len(legs) != 3:
        return None
    best = None
    for pi, pend in enumerate(legs):
        if len(pend) != 1:
            continue
        left, right = (legs[(pi + 1) % 3], legs[(pi + 2) % 3])
        if len(left) < 2 or len(right) < 2:
            continue
        for l, r in ((left, right), (right, left)):
            spine = tuple(reversed(l)) + (b,) + tuple(r)
            cand = (len(l) + 1, spine, pend[0])
            if best is None or cand < best:
                best = cand
    if best is None:
        return None
    k, spine, w = best
    return QuotientShape(SHAPE_PATH_LEAF, spine=spine, extra=w, k=k)


def _match_path_triangle(q: Graph, D: int) -> Optional[QuotientShape]:
    """Path of D+1 classes plus one class completing a triangle on a spine
    edge; the triangle must not touch a spine endpoint (k in [2, D-1])."""
    if q.edge_count != q.n:
        return None
    best = None
    for x in range(q.n):
        if q.degree(x) != 2:
            continue
        nbrs = [y for y in range(q.n) if q.has_edge(x, y)]
        if not q.has_edge(nbrs[0], nbrs[1]):
            continue
        keep = [v for v in range(q.n) if v != x]
        idx = {v: i for i, v in enumerate(keep)}
        sub = Graph.from_edges(
            q.n - 1,
            ((idx[u], idx[v]) for u, v in q.edges() if u != x and v != x),
        )
        sub_order = _path_order(sub)
        if sub_order is None or len(sub_order) != D + 1:
            continue
        spine = tuple(keep[i] for i in sub_order)
        p = min(spine.index(nbrs[0]), spine.index(nbrs[1]))
        if abs(spine.index(nbrs[0]) - spine.index(nbrs[1])) != 1:
            continue
        if not 1 <= p <= D - 2:
            continue
        for k, s in ((p + 1, spine), (D - p, spine[::-1])):
            cand = (k, s, x)
            if best is None or cand < best:
                best = cand
    if best is None:
        return None
    k, spine, w = best
    return QuotientShape(SHAPE_PATH_TRIANGLE, spine=spine, extra=w, k=k)


def _quotient_dist(q: Graph, u: int, v: int) -> int:
    return all_pairs(q)[u][v]


# -- family enumeration -------------------------------------------------------


def _templates(beta: int, D: int):
    """Templates (quotient edges, class count, kinds, cards), deduplicated
    against the mirror orientation of the spine."""
    path_edges = tuple((i, i + 1) for i in range(D))
    extra = beta - 1
    seen = set()

    def emit(edges, kinds, cards, signature, mirror_signature):
        key = min(signature, mirror_signature)
        if key in seen:
            return None
        seen.add(key)
        return (edges, kinds, cards)

    # path quotient, alpha = 0 (the bare path, beta = 1)
    if extra == 0:
        t = emit(path_edges, (_1,) * (D + 1), (1,) * (D + 1), ("p",), ("p",))
        if t:
            yield t
    # path quotient, alpha = 1: one heavy class anywhere, any kind
    if extra >= 1:
        for p in range(D + 1):
            for kind in (_K, _N):
                kinds, cards = _path_assign(D, {p: (kind, extra + 1)})
                t = emit(
                    path_edges,
                    kinds,
                    cards,
                    ("p",) + _sig(kinds, cards),
                    ("p",) + _sig(kinds[::-1], cards[::-1]),
                )
                if t:
                    yield t
    # path quotient, alpha = 2 (adjacent pair, or distance-2 independent pair)
    if extra >= 2:
        for c1, c2 in _compositions(extra, 2):
            for p in range(D):
                for k1, k2 in product((_K, _N), repeat=2):
                    if p == 0 and k1 == _K and k2 != _K:
                        continue
                    if p + 1 == D and k2 == _K and k1 != _K:
                        continue
                    assign = {p: (k1, c1 + 1), p + 1: (k2, c2 + 1)}
                    kinds, cards = _path_assign(D, assign)
                    t = emit(
                        path_edges,
                        kinds,
                        cards,
                        ("p",) + _sig(kinds, cards),
                        ("p",) + _sig(kinds[::-1], cards[::-1]),
                    )
                    if t:
                        yield t
            for p in range(D - 1):
                assign = {p: (_N, c1 + 1), p + 2: (_N, c2 + 1)}
                kinds, cards = _path_assign(D, assign)
                t = emit(
                    path_edges,
                    kinds,
                    cards,
                    ("p",) + _sig(kinds, cards),
                    ("p",) + _sig(kinds[::-1], cards[::-1]),
                )
                if t:
                    yield t
    # path quotient, alpha = 3: N (K|N) N on consecutive classes
    if extra >= 3:
        for c1, c2, c3 in _compositions(extra, 3):
            for p in range(D - 1):
                for mid in (_K, _N):
                    assign = {
                        p: (_N, c1 + 1),
                        p + 1: (mid, c2 + 1),
                        p + 2: (_N, c3 + 1),
                    }
                    kinds, cards = _path_assign(D, assign)
                    t = emit(
                        path_edges,
                        kinds,
                        cards,
                        ("p",) + _sig(kinds, cards),
                        ("p",) + _sig(kinds[::-1], cards[::-1]),
                    )
                    if t:
                        yield t

    # pendant quotient P_{D+1,k}: classes 0..D spine, D+1 pendant on k-1
    if beta >= 2:
        budget = beta - 2
        for k in range(3, D):
            edges = path_edges + ((k - 1, D + 1),)
            slots = (k - 1, k - 2, k, D + 1)  # branch first, then its neighbours
            for parts in _weak_compositions(budget, 4):
                branch_kinds = (_K, _N) if parts[0] else (_1,)
                for bk in branch_kinds:
                    assign = {}
                    if parts[0]:
                        assign[slots[0]] = (bk, parts[0] + 1)
                    for s, c in zip(slots[1:], parts[1:]):
                        if c:
                            assign[s] = (_N, c + 1)
                    kinds, cards = _path_assign(D, assign, extra_classes=1)
                    sig = ("l", k) + _sig(kinds, cards)
                    msig = ("l", D - k + 2) + _sig(
                        kinds[D::-1] + kinds[D + 1 :], cards[D::-1] + cards[D + 1 :]
                    )
                    t = emit(edges, kinds, cards, sig, msig)
                    if t:
                        yield t

    # triangle quotient P'_{D+1,k}: class D+1 adjacent to k-1 and k
    if beta >= 2:
        budget = beta - 2
        for k in range(2, D):
            edges = path_edges + ((k - 1, D + 1), (k, D + 1))
            slots = (k - 1, k, D + 1)
            for parts in _weak_compositions(budget, 3):
                assign = {
                    s: (_K, c + 1) for s, c in zip(slots, parts) if c
                }
                kinds, cards = _path_assign(D, assign, extra_classes=1)
                sig = ("t", k) + _sig(kinds, cards)
                msig = ("t", D - k + 1) + _sig(
                    kinds[D::-1] + kinds[D + 1 :], cards[D::-1] + cards[D + 1 :]
                )
                t = emit(edges, kinds, cards, sig, msig)
                if t:
                    yield t


def _path_assign(D, assign, extra_classes=0):
    m = D + 1 + extra_classes
    kinds = [_1] * m
    cards = [1] * m
    for pos, (kind, card) in assign.items():
        kinds[pos] = kind
        cards[pos] = card
    return tuple(kinds), tuple(cards)


def _sig(kinds, cards):
    return tuple((k.value, c) for k, c in zip(kinds, cards))


def _compositions(total: int, parts: int):
    """Ordered compositions of total into `parts` positive integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _weak_compositions(total: int, parts: int):
    """Ordered compositions allowing zeros."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def _expand(quotient_edges, kinds, cards) -> Graph:
    """Blow a typed/sized quotient template up into a concrete graph."""
    offsets = []
    n = 0
    for c in cards:
        offsets.append(n)
        n += c
    edges = []
    for i, kind in enumerate(kinds):
        if kind == _K:
            block = range(offsets[i], offsets[i] + cards[i])
            edges.extend((u, v) for u in block for v in block if u < v)
    for i, j in quotient_edges:
        edges.extend(
            (u, v)
            for u in range(offsets[i], offsets[i] + cards[i])
            for v in range(offsets[j], offsets[j] + cards[j])
        )
    return Graph.from_edges(n, edges)
