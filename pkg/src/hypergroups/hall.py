"""Sigma-solvability, the Pi-radical, and Hall Pi-subset machinery.

Everything here works over a fixed prime partition sigma and a selection Pi
of its classes. A hypergroup is sigma-solvable when a chain of closed
subsets climbs from the identity to the full set with every step quotient
thin and every step order inside a single class. A closed subset is a
Pi-subset when its valency is a Pi-number, and a Hall Pi-subset when
additionally the ambient valency divided by its own is a complement number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bits, subset_key
from .core import Chain, FiniteHypergroup, complex_product, is_closed
from .errors import (
    HypothesisViolationError,
    InternalConsistencyError,
    SearchExhaustedError,
    ValencyUndefinedError,
)
from .lattice import closed_subsets, is_strongly_normal
from .quotient import build_chain, lift, quotient
from .sigma import (
    PiSelection,
    PrimePartition,
    SMALLEST,
    is_pi_complement_number,
    is_pi_number,
    is_prime,
    spans_single_class,
)
from .valency import (
    _chain_to_full,
    _section_order,
    _section_thin,
    is_thin,
    rt_chain,
    thin_elements,
    valency,
    valency_of,
)


def sigma_solvable_chain(H: FiniteHypergroup,
                         sigma: PrimePartition) -> Chain | None:
    """A chain witnessing sigma-solvability, or None after exhaustive search.

    Each step quotient must be thin and each step order must have all its
    prime divisors in one class; different steps may use different classes.
    """
    memo = H._cache.setdefault("sigma_chains", {})
    if sigma not in memo:
        def ok(lo, hi):
            return (spans_single_class(_section_order(H, lo, hi), sigma)
                    and _section_thin(H, lo, hi))

        path = _chain_to_full(H, ok)
        memo[sigma] = build_chain(H, path) if path else None
    return memo[sigma]


def is_sigma_solvable(H: FiniteHypergroup, sigma: PrimePartition) -> bool:
    return sigma_solvable_chain(H, sigma) is not None


def solvable_chain(H: FiniteHypergroup) -> Chain | None:
    """A chain with thin step quotients of prime order, or None.

    This is the strictest chain notion used here; with the smallest
    partition it characterises the residually thin sigma-solvable case.
    """
    if "solvable_chain" not in H._cache:
        def ok(lo, hi):
            return (is_prime(_section_order(H, lo, hi))
                    and _section_thin(H, lo, hi))

        path = _chain_to_full(H, ok)
        H._cache["solvable_chain"] = build_chain(H, path) if path else None
    return H._cache["solvable_chain"]


def is_solvable(H: FiniteHypergroup) -> bool:
    return solvable_chain(H) is not None


def subnormal_closed_subsets(H: FiniteHypergroup) -> tuple[int, ...]:
    """Closed subsets joined to the full set by a stepwise-normal chain."""
    if "subnormal" not in H._cache:
        lat = closed_subsets(H)
        top = lat.position(H.full)
        down: dict[int, list[int]] = {i: [] for i in range(len(lat.subsets))}
        for i, j in lat.normal_in:
            if i != j:
                down[j].append(i)
        reach = {top}
        stack = [top]
        while stack:
            node = stack.pop()
            for prev in down[node]:
                if prev not in reach:
                    reach.add(prev)
                    stack.append(prev)
        H._cache["subnormal"] = tuple(
            lat.subsets[i] for i in sorted(reach))
    return H._cache["subnormal"]


def _require_rt(H):
    if rt_chain(H) is None:
        raise ValencyUndefinedError(
            f"{H.name} is not residually thin, valencies are undefined")


def pi_valenced_violation(H: FiniteHypergroup, sigma: PrimePartition,
                          pi: PiSelection) -> tuple[int, int] | None:
    """First witness (U, h) breaking the Pi-valenced condition, else None.

    For each subnormal closed U of Pi-number valency and each block of the
    quotient over U, the product of the starred block with the block must
    have Pi-number size whenever it consists of thin elements. When such a
    product set is itself closed, its valency is cross-checked against its
    size and a mismatch is surfaced as an internal error.
    """
    _require_rt(H)
    for u in subnormal_closed_subsets(H):
        if not is_pi_number(valency_of(H, u), sigma, pi):
            continue
        qm = quotient(H, u)
        q = qm.quotient
        thin = thin_elements(q)
        for b in range(q.rank):
            s = q.table[q.star[b]][b]
            if s & ~thin:
                continue
            if not is_pi_number(s.bit_count(), sigma, pi):
                return (u, next(bits(qm.blocks[b])))
            if is_closed(q, s) and valency_of(q, s) != s.bit_count():
                raise InternalConsistencyError(
                    "thin closed product set with valency differing from size")
    return None


def is_pi_valenced(H: FiniteHypergroup, sigma: PrimePartition,
                   pi: PiSelection) -> bool:
    return pi_valenced_violation(H, sigma, pi) is None


def pi_radical(H: FiniteHypergroup, sigma: PrimePartition,
               pi: PiSelection) -> int:
    """The largest subnormal closed subset of Pi-number valency.

    Guaranteed properties, each asserted and surfaced as a hypothesis
    violation when broken (which can only happen outside the residually
    thin Pi-valenced regime): it contains every subnormal closed Pi-subset,
    it is strongly normal in the full set, and the quotient over it is
    thin.
    """
    _require_rt(H)
    candidates = [u for u in subnormal_closed_subsets(H)
                  if is_pi_number(valency_of(H, u), sigma, pi)]
    best = max(candidates, key=lambda m: m.bit_count())
    problems = []
    stragglers = [u for u in candidates if u & ~best]
    if stragglers:
        problems.append(
            "no unique maximum: subnormal Pi-subset "
            f"{list(bits(stragglers[0]))} escapes {list(bits(best))}")
    if not is_strongly_normal(H, best, H.full):
        problems.append("radical is not strongly normal in the full set")
    if not is_thin(quotient(H, best).quotient):
        problems.append("quotient over the radical is not thin")
    if problems:
        raise HypothesisViolationError(
            "Pi-radical guarantees failed", tuple(problems))
    return best


def hall_subsets_enumerated(H: FiniteHypergroup, sigma: PrimePartition,
                            pi: PiSelection) -> tuple[int, ...]:
    """All closed C with Pi-number valency and complement-number covalency."""
    _require_rt(H)
    n_h = valency(H)
    out = []
    for c in closed_subsets(H).subsets:
        n_c = valency_of(H, c)
        if n_h % n_c:
            raise InternalConsistencyError("subset valency must divide")
        if is_pi_number(n_c, sigma, pi) and \
                is_pi_complement_number(n_h // n_c, sigma, pi):
            out.append(c)
    return tuple(sorted(out, key=subset_key))


def hall_subset_constructive(H: FiniteHypergroup, sigma: PrimePartition,
                             pi: PiSelection) -> int:
    """Build a Hall Pi-subset through the radical.

    Route: quotient over the Pi-radical is a thin, sigma-solvable
    hypergroup, hence a group; scan its subgroups exhaustively for a Hall
    Pi-subgroup, then pull the subgroup back through the block bijection.
    Refuses with diagnostics when the hypothesis flags fail, and treats a
    missing Hall subgroup in the quotient group or a bad lifted result as a
    loud error, since neither can occur in the guaranteed regime.
    """
    problems = []
    if rt_chain(H) is None:
        problems.append("not residually thin")
        raise HypothesisViolationError("constructive Hall search refused",
                                       tuple(problems))
    if not is_sigma_solvable(H, sigma):
        problems.append("not sigma-solvable")
    if pi_valenced_violation(H, sigma, pi) is not None:
        problems.append("not Pi-valenced")
    if problems:
        raise HypothesisViolationError("constructive Hall search refused",
                                       tuple(problems))
    radical = pi_radical(H, sigma, pi)
    qm = quotient(H, radical)
    q = qm.quotient
    if not is_thin(q):
        raise InternalConsistencyError("quotient over the radical must be thin")
    n_q = q.rank
    for c in closed_subsets(q).subsets:
        size = c.bit_count()
        if n_q % size:
            raise InternalConsistencyError("subgroup order must divide")
        if is_pi_number(size, sigma, pi) and \
                is_pi_complement_number(n_q // size, sigma, pi):
            lifted = lift(qm, c)
            n_l = valency_of(H, lifted)
            if not is_pi_number(n_l, sigma, pi) or \
                    not is_pi_complement_number(valency(H) // n_l, sigma, pi):
                raise SearchExhaustedError(
                    "lifted subset is not a Hall Pi-subset")
            return lifted
    raise SearchExhaustedError(
        "no Hall Pi-subgroup in the thin quotient; input outside the "
        "guaranteed regime")


def are_conjugate(H: FiniteHypergroup, S, T) -> int | None:
    """An element h with h S h* inside T and h T h* inside S, if any."""
    sm = H.subset(S)
    tm = H.subset(T)
    for h in range(H.rank):
        hm = 1 << h
        hsm = 1 << H.star[h]
        if complex_product(H, hm, complex_product(H, sm, hsm)) & ~tm:
            continue
        if complex_product(H, hm, complex_product(H, tm, hsm)) & ~sm:
            continue
        return h
    return None


@dataclass(frozen=True)
class HallReport:
    """Verification record for the three Hall conclusions.

    The hypothesis flags say whether the input is residually thin,
    sigma-solvable and Pi-valenced. The conclusions are evaluated
    regardless, as far as they are computable, so the report stays useful
    for probing sharpness: existence (the enumerated Hall family is
    nonempty and contains the constructed one), pairwise conjugacy with
    witnesses, and containment of every closed Pi-subset in some Hall
    Pi-subset.
    """

    is_rt: bool
    is_sigma_solvable: bool
    is_pi_valenced: bool
    radical: int | None
    radical_note: str | None
    hall_subsets: tuple[int, ...]
    constructive: int | None
    constructive_note: str | None
    conjugacy_witnesses: tuple[tuple[int, int, int | None], ...]
    containment_witnesses: tuple[tuple[int, int | None], ...]
    conclusion_exists: bool
    conclusion_conjugate: bool
    conclusion_containment: bool

    @property
    def hypotheses_hold(self) -> bool:
        return self.is_rt and self.is_sigma_solvable and self.is_pi_valenced

    @property
    def conclusions_hold(self) -> bool:
        return (self.conclusion_exists and self.conclusion_conjugate
                and self.conclusion_containment)


def verify_hall(H: FiniteHypergroup, sigma: PrimePartition,
                pi: PiSelection) -> HallReport:
    """Evaluate the Hall existence, conjugacy and containment conclusions.

    Never raises on hypothesis failure; whatever still holds is recorded.
    """
    rt = rt_chain(H) is not None
    solv = is_sigma_solvable(H, sigma)
    valenced = bool(rt) and pi_valenced_violation(H, sigma, pi) is None

    radical = None
    radical_note = None
    halls: tuple[int, ...] = ()
    constructive = None
    constructive_note = None
    conj: list[tuple[int, int, int | None]] = []
    contain: list[tuple[int, int | None]] = []

    if rt:
        halls = hall_subsets_enumerated(H, sigma, pi)
        try:
            radical = pi_radical(H, sigma, pi)
        except HypothesisViolationError as exc:
            radical_note = str(exc)
        try:
            constructive = hall_subset_constructive(H, sigma, pi)
        except (HypothesisViolationError, SearchExhaustedError) as exc:
            constructive_note = str(exc)
        for i, s in enumerate(halls):
            for t in halls[i + 1:]:
                conj.append((s, t, are_conjugate(H, s, t)))
        for c in closed_subsets(H).subsets:
            if not is_pi_number(valency_of(H, c), sigma, pi):
                continue
            home = next((hs for hs in halls if not c & ~hs), None)
            contain.append((c, home))

    exists = bool(halls) and (constructive is None or constructive in halls)
    conjugate = all(w is not None for _, _, w in conj)
    containment = all(home is not None for _, home in contain)

    return HallReport(
        is_rt=rt,
        is_sigma_solvable=solv,
        is_pi_valenced=valenced,
        radical=radical,
        radical_note=radical_note,
        hall_subsets=halls,
        constructive=constructive,
        constructive_note=constructive_note,
        conjugacy_witnesses=tuple(conj),
        containment_witnesses=tuple(contain),
        conclusion_exists=exists,
        conclusion_conjugate=conjugate,
        conclusion_containment=containment,
    )


@dataclass(frozen=True)
class SuiteCheck:
    name: str
    applicable: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class SolvabilitySuiteReport:
    checks: tuple[SuiteCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def solvability_suite(H: FiniteHypergroup,
                      sigma: PrimePartition) -> SolvabilitySuiteReport:
    """Instance checks of the closure properties of sigma-solvability.

    Checked on the given hypergroup: closed subsets inherit solvability;
    quotients over normal and over subnormal closed subsets inherit it; a
    closed subset together with a solvable quotient forces the whole to be
    solvable; and under the smallest partition, residually thin
    sigma-solvability coincides with the prime-step chain notion.
    """
    from .core import sub_hypergroup
    from .lattice import is_normal, is_subnormal

    lat = closed_subsets(H)
    h_solv = is_sigma_solvable(H, sigma)
    checks = []

    subs_viol = []
    subs_count = 0
    if h_solv:
        for c in lat.subsets:
            subs_count += 1
            if not is_sigma_solvable(sub_hypergroup(H, c), sigma):
                subs_viol.append(f"closed subset {list(bits(c))}")
    checks.append(SuiteCheck("closed_subsets_inherit_solvability",
                             subs_count, tuple(subs_viol)))

    quo_viol = []
    quo_count = 0
    if h_solv:
        for e in lat.subsets:
            if not is_normal(H, e, H.full):
                continue
            quo_count += 1
            if not is_sigma_solvable(quotient(H, e).quotient, sigma):
                quo_viol.append(f"quotient over normal {list(bits(e))}")
    checks.append(SuiteCheck("quotients_by_normal_inherit_solvability",
                             quo_count, tuple(quo_viol)))

    subq_viol = []
    subq_count = 0
    if h_solv:
        for d in subnormal_closed_subsets(H):
            subq_count += 1
            if not is_sigma_solvable(quotient(H, d).quotient, sigma):
                subq_viol.append(f"quotient over subnormal {list(bits(d))}")
    checks.append(SuiteCheck("quotients_by_subnormal_inherit_solvability",
                             subq_count, tuple(subq_viol)))

    asm_viol = []
    asm_count = 0
    for e in lat.subsets:
        if is_sigma_solvable(sub_hypergroup(H, e), sigma) and \
                is_sigma_solvable(quotient(H, e).quotient, sigma):
            asm_count += 1
            if not h_solv:
                asm_viol.append(f"assembled through {list(bits(e))}")
    checks.append(SuiteCheck("solvable_part_and_quotient_force_solvability",
                             asm_count, tuple(asm_viol)))

    prime_viol = []
    prime_count = 0
    if rt_chain(H) is not None:
        prime_count = 1
        if is_sigma_solvable(H, SMALLEST) != is_solvable(H):
            prime_viol.append(
                "smallest-partition solvability disagrees with prime-step chains")
    checks.append(SuiteCheck("smallest_partition_matches_prime_step_chains",
                             prime_count, tuple(prime_viol)))

    return SolvabilitySuiteReport(tuple(checks))
