"""Thin elements, residually thin chains and valencies."""

from __future__ import annotations

from .bitset import bits, subset_key
from .core import Chain, FiniteHypergroup, is_closed, restrict_subset, sub_hypergroup
from .errors import InternalConsistencyError, PreconditionError, ValencyUndefinedError
from .lattice import closed_subsets
from .quotient import build_chain, double_cosets, section_quotient


def thin_elements(H: FiniteHypergroup) -> int:
    """Mask of elements s with s* s = {identity}."""
    if "thin" not in H._cache:
        out = 0
        for s in range(H.rank):
            if H.table[H.star[s]][s] == 1:
                out |= 1 << s
        H._cache["thin"] = out
    return H._cache["thin"]


def is_thin(H: FiniteHypergroup) -> bool:
    """True iff every element is thin; a thin hypergroup is a group table."""
    if thin_elements(H) != H.full:
        return False
    for row in H.table:
        for entry in row:
            if entry.bit_count() != 1:
                raise InternalConsistencyError(
                    "thin hypergroup with a non-singleton product")
    return True


def _section_order(H, lo, hi) -> int:
    """Number of double cosets of lo inside the sub-hypergroup on hi."""
    sub = sub_hypergroup(H, hi)
    return len(double_cosets(sub, restrict_subset(hi, lo)))


def _section_thin(H, lo, hi) -> bool:
    return is_thin(section_quotient(H, lo, hi).quotient)


def _chain_to_full(H: FiniteHypergroup, step_ok) -> tuple[int, ...] | None:
    """Depth-first search for an ascending chain from {0} to the full set.

    Candidate extensions are tried largest first, so a thin hypergroup
    resolves in a single step. Subsets from which the top is unreachable
    are memoized as dead.
    """
    lat = closed_subsets(H)
    full = H.full
    by_size = sorted(lat.subsets, key=lambda m: (-m.bit_count(),) + subset_key(m)[1:])
    dead: set[int] = set()

    def walk(f: int) -> tuple[int, ...] | None:
        if f == full:
            return (f,)
        if f in dead:
            return None
        for g in by_size:
            if g == f or f & ~g:
                continue
            if step_ok(f, g):
                tail = walk(g)
                if tail is not None:
                    return (f,) + tail
        dead.add(f)
        return None

    return walk(1)


def rt_chain(H: FiniteHypergroup) -> Chain | None:
    """A chain from {0} to the full set with every step quotient thin.

    Present iff the hypergroup is residually thin; None after an exhaustive
    search of the closed-subset lattice fails.
    """
    if "rt_chain" not in H._cache:
        path = _chain_to_full(H, lambda lo, hi: _section_thin(H, lo, hi))
        H._cache["rt_chain"] = build_chain(H, path) if path else None
    return H._cache["rt_chain"]


def is_residually_thin(H: FiniteHypergroup) -> bool:
    return rt_chain(H) is not None


def valency(H: FiniteHypergroup) -> int:
    """Product of the step quotient orders of a residually thin chain.

    Independent of the chain chosen (a property the test suite checks over
    all chains); computed from the first chain found. Undefined, and an
    error, when the hypergroup is not residually thin.
    """
    chain = rt_chain(H)
    if chain is None:
        raise ValencyUndefinedError(
            f"{H.name} is not residually thin, valency undefined")
    return chain.order_product


def valency_of(H: FiniteHypergroup, C) -> int:
    """Valency of a closed subset, as a hypergroup in its own right.

    Defined whenever the ambient hypergroup is residually thin, because
    closed subsets inherit residual thinness; the result always divides the
    ambient valency, and a failure of either guarantee is an internal error.
    """
    cm = H.subset(C)
    if not is_closed(H, cm):
        raise PreconditionError("valency_of requires a closed subset")
    if rt_chain(H) is None:
        raise ValencyUndefinedError(
            f"{H.name} is not residually thin, valency undefined")
    sub = sub_hypergroup(H, cm)
    chain = rt_chain(sub)
    if chain is None:
        raise InternalConsistencyError(
            "closed subset of a residually thin hypergroup must be residually thin")
    v = chain.order_product
    if valency(H) % v:
        raise InternalConsistencyError("subset valency does not divide the ambient one")
    return v


def all_rt_chains(H: FiniteHypergroup, limit: int) -> list[Chain]:
    """Up to limit residually thin chains, in lexicographic subset order.

    Exhaustive backtracking over the lattice; extensions are tried in
    canonical subset order so the output order is reproducible.
    """
    lat = closed_subsets(H)
    full = H.full
    out: list[Chain] = []

    def walk(prefix: list[int]) -> bool:
        if len(out) >= limit:
            return False
        f = prefix[-1]
        if f == full:
            out.append(build_chain(H, prefix))
            return len(out) < limit
        for g in lat.subsets:
            if g == f or f & ~g:
                continue
            if _section_thin(H, f, g):
                if not walk(prefix + [g]):
                    return False
        return True

    walk([1])
    return out
