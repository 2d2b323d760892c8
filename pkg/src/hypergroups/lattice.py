"""The lattice of closed subsets with normality and subnormality relations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .bitset import bits, subset_key
from .core import Chain, FiniteHypergroup, closure, complex_product, is_closed, star_set
from .errors import (
    InternalConsistencyError,
    PreconditionError,
    ProductNotClosedError,
    RankCapError,
)
from .quotient import build_chain


@dataclass(frozen=True)
class ClosedSubsetLattice:
    """All closed subsets of a hypergroup, with the pairwise relations.

    subsets is canonically ordered (by size, then member list) and always
    contains the identity subset and the full set. normal_in holds index
    pairs (i, j) with subsets[i] contained and normal in subsets[j], where
    normality of E in F means E h is inside h E for every h in F;
    strongly_normal_in is the sub-relation with h* E h inside E instead.
    Both relations include the reflexive pairs, which always hold.
    """

    subsets: tuple[int, ...]
    normal_in: frozenset[tuple[int, int]]
    strongly_normal_in: frozenset[tuple[int, int]]
    index: dict[int, int] = field(repr=False)

    def position(self, mask: int) -> int:
        try:
            return self.index[mask]
        except KeyError:
            raise PreconditionError(f"{mask:#x} is not a closed subset here") from None


def _normal_unchecked(H, E, F) -> bool:
    for h in bits(F):
        hm = 1 << h
        if complex_product(H, E, hm) & ~complex_product(H, hm, E):
            return False
    return True


def _strongly_normal_unchecked(H, E, F) -> bool:
    for h in bits(F):
        conj = complex_product(H, 1 << H.star[h], complex_product(H, E, 1 << h))
        if conj & ~E:
            return False
    return True


def closed_subsets(H: FiniteHypergroup) -> ClosedSubsetLattice:
    """Enumerate every closed subset and the normality relations.

    Breadth-first extension instead of a powerset sweep: starting from the
    identity subset, close F extended by each missing element until nothing
    new appears. Every closed subset is reached this way, one element of it
    at a time. Refuses above the instance's rank cap, where an exhaustive
    enumeration is no longer guaranteed to be affordable.
    """
    if "lattice" in H._cache:
        return H._cache["lattice"]
    if H.rank > H.rank_cap:
        raise RankCapError(
            f"rank {H.rank} exceeds the lattice cap {H.rank_cap}; "
            "raise the cap explicitly to proceed")
    found = {closure(H, 0)}
    frontier = list(found)
    while frontier:
        f = frontier.pop()
        missing = H.full & ~f
        for x in bits(missing):
            g = closure(H, f | (1 << x))
            if g not in found:
                found.add(g)
                frontier.append(g)
    subsets = tuple(sorted(found, key=subset_key))
    index = {m: i for i, m in enumerate(subsets)}

    normal = set()
    strong = set()
    for i, e in enumerate(subsets):
        for j, f in enumerate(subsets):
            if e & ~f:
                continue
            if _normal_unchecked(H, e, f):
                normal.add((i, j))
                if _strongly_normal_unchecked(H, e, f):
                    strong.add((i, j))
            elif _strongly_normal_unchecked(H, e, f):
                raise InternalConsistencyError(
                    "strong normality without normality")
    lat = ClosedSubsetLattice(subsets=subsets,
                              normal_in=frozenset(normal),
                              strongly_normal_in=frozenset(strong),
                              index=index)
    H._cache["lattice"] = lat
    return lat


def _require_closed_pair(H, E, F, op):
    em = H.subset(E)
    fm = H.subset(F)
    if not is_closed(H, em) or not is_closed(H, fm):
        raise PreconditionError(f"{op} requires closed subsets")
    if em & ~fm:
        raise PreconditionError(f"{op} requires the first subset inside the second")
    return em, fm


def is_normal(H: FiniteHypergroup, E, F) -> bool:
    """E h inside h E for every h in F, with E contained in F, both closed."""
    em, fm = _require_closed_pair(H, E, F, "is_normal")
    return _normal_unchecked(H, em, fm)


def is_strongly_normal(H: FiniteHypergroup, E, F) -> bool:
    """h* E h inside E for every h in F, with E contained in F, both closed."""
    em, fm = _require_closed_pair(H, E, F, "is_strongly_normal")
    return _strongly_normal_unchecked(H, em, fm)


def is_subnormal(H: FiniteHypergroup, E, F) -> Chain | None:
    """Witnessing chain E = C0 <= ... <= Ck = F with each step normal.

    Decided by reachability over the lattice's normal_in relation; along an
    ascending path into F every intermediate subset automatically lies in
    F. Returns None when no chain exists.
    """
    em, fm = _require_closed_pair(H, E, F, "is_subnormal")
    if em == fm:
        return Chain(subsets=(em,), step_orders=(), step_quotients=())
    lat = closed_subsets(H)
    start = lat.position(em)
    goal = lat.position(fm)
    up = {i: [] for i in range(len(lat.subsets))}
    for i, j in lat.normal_in:
        if i != j:
            up[i].append(j)
    for nbrs in up.values():
        nbrs.sort()
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node == goal:
            path = []
            while node is not None:
                path.append(lat.subsets[node])
                node = parent[node]
            return build_chain(H, reversed(path))
        for nxt in up[node]:
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    return None


def product_closed(H: FiniteHypergroup, C, D) -> int:
    """The set product C D, verified to be closed.

    Closed whenever one factor normalizes the other, for instance when C is
    normal in the full set; under that precondition it equals the closure
    of the union. When the product escapes closedness the error carries the
    first witnessing pair and escaped element.
    """
    cm = H.subset(C)
    dm = H.subset(D)
    if not is_closed(H, cm) or not is_closed(H, dm):
        raise PreconditionError("product_closed requires closed subsets")
    p = complex_product(H, cm, dm)
    for a in bits(p):
        row = H.table[H.star[a]]
        for b in bits(p):
            out = row[b] & ~p
            if out:
                raise ProductNotClosedError(a, b, next(bits(out)))
    return p


def intersect(C: int, D: int) -> int:
    """Intersection of two closed subsets; closed subsets are meet-closed."""
    return C & D
