"""Finite hypergroups as multiplication tables of subsets.

A finite hypergroup here is a set {0..n-1} with a product table whose entry
(p, q) is a nonempty subset of {0..n-1}, a star involution, and element 0 as
the identity. The product of subsets P, Q is the union of the entries over
p in P, q in Q. Three axioms are enforced:

  H1   set associativity: (pq)r = p(qr) for all elements p, q, r
  H2   right identity: s . 1 = {s} for every s (1 is element 0)
  H3   adjoint law: r in pq implies q in p*r and p in rq*

The left identity law 1 . s = {s} is checked separately and reported as a
UNIT violation when it fails while H2 holds; it is not folded into H2.
Subsets are int bitmasks throughout (see bitset), products are supports
only, there are no structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .bitset import bits, full_mask, mask_of, members
from .errors import InvalidHypergroupError, PreconditionError, StructuralError

DEFAULT_RANK_CAP = 24

AXIOM_ORDER = ("H1", "H2", "H3", "STAR", "UNIT")


class Violation(NamedTuple):
    axiom: str
    witness: tuple[int, int, int]


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]

    def axioms(self) -> tuple[str, ...]:
        return tuple(v.axiom for v in self.violations)


def _entry_mask(entry, rank: int, p: int, q: int) -> int:
    if isinstance(entry, int):
        m = entry
    else:
        try:
            m = mask_of(int(x) for x in entry)
        except (TypeError, ValueError) as exc:
            raise StructuralError(f"product entry ({p},{q}) is not a set of indices") from exc
    if m < 0 or m >> rank:
        raise StructuralError(f"product entry ({p},{q}) has an element outside 0..{rank - 1}")
    if m == 0:
        raise StructuralError(f"empty product set at ({p},{q})")
    return m


def _normalize_candidate(table, star, rank):
    if rank is None:
        rank = len(table)
    if rank < 1:
        raise StructuralError("rank must be at least 1")
    star_t = tuple(int(s) for s in star)
    if len(star_t) != rank:
        raise StructuralError(f"star must list {rank} images, got {len(star_t)}")
    if any(s < 0 or s >= rank for s in star_t):
        raise StructuralError("star image out of range")
    if len(table) != rank:
        raise StructuralError(f"table must have {rank} rows, got {len(table)}")
    rows = []
    for p, row in enumerate(table):
        row = list(row)
        if len(row) != rank:
            raise StructuralError(f"table row {p} must have {rank} entries, got {len(row)}")
        rows.append(tuple(_entry_mask(row[q], rank, p, q) for q in range(rank)))
    return tuple(rows), star_t, rank


def validate(table, star, *, rank: int | None = None) -> ValidationReport:
    """Check a raw candidate (table of subsets, star map) against the axioms.

    Returns a report listing, for every violated axiom, the first witness
    triple in scan order. Structural defects (wrong shapes, out-of-range
    indices, empty product sets) raise StructuralError instead of being
    reported as axiom violations.
    """
    t, star_t, n = _normalize_candidate(table, star, rank)
    found: dict[str, tuple[int, int, int]] = {}

    def record(axiom, witness):
        if axiom not in found:
            found[axiom] = witness

    # STAR: involution with star(0) = 0.
    if star_t[0] != 0:
        record("STAR", (0, star_t[0], 0))
    for s in range(n):
        if star_t[star_t[s]] != s:
            record("STAR", (s, star_t[s], star_t[star_t[s]]))
            break

    for s in range(n):
        if t[s][0] != 1 << s:
            record("H2", (s, 0, s))
            break
    for s in range(n):
        if t[0][s] != 1 << s:
            record("UNIT", (0, s, s))
            break

    h1 = _associativity_witness(t, n)
    if h1 is not None:
        record("H1", h1)

    # H3, literal form over all triples with r in pq.
    for p in range(n):
        sp = star_t[p]
        for q in range(n):
            sq = star_t[q]
            prod = t[p][q]
            ok = True
            for r in bits(prod):
                if not (t[sp][r] >> q) & 1 or not (t[r][sq] >> p) & 1:
                    record("H3", (p, q, r))
                    ok = False
                    break
            if not ok:
                break
        else:
            continue
        break
    # H3 consequence checked explicitly: the identity sits in s*s.
    if "H3" not in found:
        for s in range(n):
            if not t[star_t[s]][s] & 1:
                record("H3", (star_t[s], s, 0))
                break

    violations = tuple(
        Violation(ax, found[ax]) for ax in AXIOM_ORDER if ax in found
    )
    return ValidationReport(valid=not violations, violations=violations)


def _associativity_witness(t, n):
    rng = range(n)
    for p in rng:
        rowp = t[p]
        for q in rng:
            pq = rowp[q]
            rowq = t[q]
            for r in rng:
                left = 0
                m = pq
                while m:
                    low = m & -m
                    left |= t[low.bit_length() - 1][r]
                    m ^= low
                right = 0
                m = rowq[r]
                while m:
                    low = m & -m
                    right |= rowp[low.bit_length() - 1]
                    m ^= low
                if left != right:
                    return (p, q, r)
    return None


class FiniteHypergroup:
    """Immutable validated hypergroup on elements 0..rank-1, identity 0.

    All operations on hypergroups in this package are pure functions;
    instances may be shared freely between workers. Derived objects
    (sub-hypergroups, quotients, the closed-subset lattice) are cached on
    the instance after first computation.
    """

    __slots__ = ("rank", "star", "table", "name", "rank_cap", "_cache")

    def __init__(self, table, star, *, name: str = "H",
                 rank_cap: int = DEFAULT_RANK_CAP, check: bool = True):
        t, star_t, n = _normalize_candidate(table, star, None)
        if check:
            report = validate(t, star_t)
            if not report.valid:
                raise InvalidHypergroupError(report)
        self.rank = n
        self.star = star_t
        self.table = t
        self.name = name
        self.rank_cap = rank_cap
        self._cache: dict = {}

    @property
    def full(self) -> int:
        return full_mask(self.rank)

    def product(self, p: int, q: int) -> int:
        return self.table[p][q]

    def with_rank_cap(self, cap: int) -> "FiniteHypergroup":
        """Copy sharing the table, with a different lattice refusal threshold."""
        h = FiniteHypergroup(self.table, self.star, name=self.name,
                             rank_cap=cap, check=False)
        return h

    def subset(self, spec) -> int:
        """Coerce an int bitmask or an iterable of element indices to a mask."""
        if isinstance(spec, int):
            m = spec
        else:
            m = mask_of(int(x) for x in spec)
        if m < 0 or m >> self.rank:
            raise PreconditionError(f"subset out of range for rank {self.rank}")
        return m

    def __eq__(self, other):
        return (isinstance(other, FiniteHypergroup)
                and self.star == other.star and self.table == other.table)

    def __hash__(self):
        return hash((self.star, self.table))

    def __repr__(self):
        return f"FiniteHypergroup({self.name!r}, rank={self.rank})"


def complex_product(H: FiniteHypergroup, P, Q) -> int:
    """Union of the table entries over p in P, q in Q. Empty if either is."""
    pm = H.subset(P)
    qm = H.subset(Q)
    out = 0
    t = H.table
    for p in bits(pm):
        row = t[p]
        m = qm
        while m:
            low = m & -m
            out |= row[low.bit_length() - 1]
            m ^= low
    return out


def star_set(H: FiniteHypergroup, S) -> int:
    """Image of a subset under the star involution."""
    out = 0
    star = H.star
    for s in bits(H.subset(S)):
        out |= 1 << star[s]
    return out


def closure(H: FiniteHypergroup, S) -> int:
    """Smallest closed subset containing S and the identity.

    Fixpoint of T -> T union T*T union T*, computed with a worklist: every
    pair (a, b) with at least one new member contributes star(a) . b. Stops
    early once the full set is reached, which is always closed.
    """
    t = H.table
    star = H.star
    full = H.full
    mask = H.subset(S) | 1
    queue = list(bits(mask))
    while queue:
        u = queue.pop()
        row_su = t[star[u]]
        snapshot = mask
        for v in bits(snapshot):
            new = row_su[v] | t[star[v]][u]
            add = new & ~mask
            if add:
                mask |= add
                if mask == full:
                    return full
                queue.extend(bits(add))
    return mask


def is_closed(H: FiniteHypergroup, S) -> bool:
    """True iff S is nonempty and equals its own closure."""
    m = H.subset(S)
    if m == 0:
        return False
    memo = H._cache.setdefault("is_closed", {})
    hit = memo.get(m)
    if hit is None:
        hit = closure(H, m) == m
        memo[m] = hit
    return hit


def sub_hypergroup(H: FiniteHypergroup, F) -> FiniteHypergroup:
    """Restriction of the table to a closed subset, re-indexed from 0.

    Elements keep their relative order, so element i of the result is the
    i-th smallest member of F. Products of members of F stay inside F, and
    every axiom survives restriction, so the result is built unchecked.
    """
    fm = H.subset(F)
    if not is_closed(H, fm):
        raise PreconditionError("sub_hypergroup requires a closed subset")
    memo = H._cache.setdefault("subs", {})
    if fm in memo:
        return memo[fm]
    elems = members(fm)
    pos = {e: i for i, e in enumerate(elems)}
    star = tuple(pos[H.star[e]] for e in elems)
    table = []
    for a in elems:
        row = []
        for b in elems:
            m = H.table[a][b]
            if m & ~fm:
                raise PreconditionError("sub_hypergroup requires a closed subset")
            row.append(mask_of(pos[x] for x in bits(m)))
        table.append(tuple(row))
    name = f"{H.name}[{','.join(map(str, elems))}]"
    sub = FiniteHypergroup(tuple(table), star, name=name,
                           rank_cap=H.rank_cap, check=False)
    memo[fm] = sub
    return sub


def restrict_subset(F, S) -> int:
    """Re-index a subset S of a closed F into sub_hypergroup coordinates."""
    out = 0
    for i, e in enumerate(bits(F)):
        if (S >> e) & 1:
            out |= 1 << i
    return out


def unrestrict_subset(F, S_sub) -> int:
    """Inverse of restrict_subset: sub coordinates back to ambient ones."""
    out = 0
    for i, e in enumerate(bits(F)):
        if (S_sub >> i) & 1:
            out |= 1 << e
    return out


@dataclass(frozen=True)
class Chain:
    """An ascending chain of closed subsets with its step quotients.

    step_quotients[i] is the quotient of subsets[i+1] (as a sub-hypergroup)
    over subsets[i]; step_orders[i] is its rank, the number of double
    cosets. A chain witnessing residual thinness starts at the identity
    subset and has every step quotient thin; subnormality witnesses may
    start anywhere.
    """

    subsets: tuple[int, ...]
    step_orders: tuple[int, ...]
    step_quotients: tuple[FiniteHypergroup, ...]

    @property
    def bottom(self) -> int:
        return self.subsets[0]

    @property
    def top(self) -> int:
        return self.subsets[-1]

    @property
    def order_product(self) -> int:
        out = 1
        for k in self.step_orders:
            out *= k
        return out

    def __len__(self) -> int:
        return len(self.step_orders)
