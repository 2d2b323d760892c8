"""Independent brute-force oracles used to freeze expected values.

Everything here works on plain python sets and integer Cayley tables, not
on the package's bitmask representation, and recomputes results by direct
enumeration so the main code paths are checked against a second route.
"""

from __future__ import annotations

from itertools import combinations, product


# ---------------------------------------------------------------------------
# axiom checking on tables of python sets

def naive_axioms(table, star) -> set[str]:
    """Violated axiom ids for a candidate (table of sets, star list)."""
    n = len(table)
    bad = set()
    if star[0] != 0 or any(star[star[s]] != s for s in range(n)):
        bad.add("STAR")
    for s in range(n):
        if table[s][0] != {s}:
            bad.add("H2")
        if table[0][s] != {s}:
            bad.add("UNIT")
    for p, q, r in product(range(n), repeat=3):
        left = set().union(*(table[x][r] for x in table[p][q]))
        right = set().union(*(table[p][y] for y in table[q][r]))
        if left != right:
            bad.add("H1")
    for p, q in product(range(n), repeat=2):
        for r in table[p][q]:
            if q not in table[star[p]][r] or p not in table[r][star[q]]:
                bad.add("H3")
    for s in range(n):
        if 0 not in table[star[s]][s]:
            bad.add("H3")
    return bad


def sets_of(H):
    """Package hypergroup -> (table of python sets, star list)."""
    from hypergroups import members
    table = [[set(members(H.table[p][q])) for q in range(H.rank)]
             for p in range(H.rank)]
    return table, list(H.star)


# ---------------------------------------------------------------------------
# closed subsets by powerset sweep

def naive_closure(table, star, seed) -> frozenset[int]:
    t = set(seed) | {0}
    while True:
        grown = set(t)
        for a in t:
            for b in t:
                grown |= table[star[a]][b]
        if grown == t:
            return frozenset(t)
        t = grown


def naive_closed_subsets(table, star) -> set[frozenset[int]]:
    n = len(table)
    out = set()
    elems = range(n)
    for k in range(n + 1):
        for seed in combinations(elems, k):
            out.add(naive_closure(table, star, seed))
    return out


# ---------------------------------------------------------------------------
# double cosets, quotients and section thinness on python sets

def naive_product(table, P, Q) -> set[int]:
    out = set()
    for p in P:
        for q in Q:
            out |= table[p][q]
    return out


def naive_double_cosets(table, F, universe) -> list[frozenset[int]]:
    blocks = []
    covered = set()
    for h in sorted(universe):
        if h in covered:
            continue
        blk = frozenset(naive_product(table, F, naive_product(table, {h}, F)))
        blocks.append(blk)
        covered |= blk
    return blocks


def naive_quotient(table, star, F, universe):
    """(block list, block product table, block star) over the given universe."""
    blocks = naive_double_cosets(table, F, universe)
    where = {}
    for i, blk in enumerate(blocks):
        for e in blk:
            where[e] = i
    reps = [min(blk) for blk in blocks]
    k = len(blocks)
    qtable = [[None] * k for _ in range(k)]
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            afb = naive_product(table, {a}, naive_product(table, F, {b}))
            qtable[i][j] = {where[x] for x in afb}
    qstar = [where[star[r]] for r in reps]
    return blocks, qtable, qstar


def naive_section_thin(table, star, E, G) -> bool:
    """Is the quotient of G over E (inside G) thin?"""
    _, qtable, qstar = naive_quotient(table, star, set(E), set(G))
    return all(qtable[qstar[i]][i] == {0} for i in range(len(qtable)))


def naive_rt_chains(table, star) -> list[tuple[frozenset[int], ...]]:
    """Every ascending chain of closed subsets from {0} to the full set
    whose step quotients are all thin."""
    n = len(table)
    closed = sorted(naive_closed_subsets(table, star),
                    key=lambda s: (len(s), sorted(s)))
    full = frozenset(range(n))
    chains = []

    def extend(chain):
        top = chain[-1]
        if top == full:
            chains.append(tuple(chain))
            return
        for g in closed:
            if top < g and naive_section_thin(table, star, top, g):
                extend(chain + [g])

    extend([frozenset({0})])
    return chains


# ---------------------------------------------------------------------------
# group-theoretic oracle over integer Cayley tables

def trial_prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


class GroupOracle:
    """Subgroup and Hall facts recomputed directly from a Cayley table."""

    def __init__(self, table):
        self.table = table
        self.n = len(table)
        self.inv = [row.index(0) for row in table]

    def generate(self, seed) -> frozenset[int]:
        t = self.table
        got = set(seed) | {0}
        frontier = list(got)
        while frontier:
            a = frontier.pop()
            for b in list(got):
                for c in (t[a][b], t[b][a], self.inv[a]):
                    if c not in got:
                        got.add(c)
                        frontier.append(c)
        return frozenset(got)

    def subgroups(self) -> list[frozenset[int]]:
        found = {self.generate(())}
        grew = True
        while grew:
            grew = False
            for s in list(found):
                for g in range(self.n):
                    if g in s:
                        continue
                    t = self.generate(set(s) | {g})
                    if t not in found:
                        found.add(t)
                        grew = True
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def conjugate(self, S, h) -> frozenset[int]:
        t = self.table
        return frozenset(t[t[h][s]][self.inv[h]] for s in S)

    def conjugacy_witness(self, S, T) -> int | None:
        for h in range(self.n):
            if self.conjugate(S, h) == frozenset(T):
                return h
        return None

    def hall_subgroups(self, selected_primes: set[int]) -> list[frozenset[int]]:
        """Subgroups whose order uses only selected primes and whose index
        uses none of them. With the all-singletons partition this is the
        Hall property for the selection."""
        out = []
        for s in self.subgroups():
            order_primes = trial_prime_factors(len(s))
            index_primes = trial_prime_factors(self.n // len(s))
            if order_primes <= selected_primes and \
                    not (index_primes & selected_primes):
                out.append(s)
        return out

    def pi_subgroups(self, selected_primes: set[int]) -> list[frozenset[int]]:
        return [s for s in self.subgroups()
                if trial_prime_factors(len(s)) <= selected_primes]
