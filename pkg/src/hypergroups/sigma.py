"""Partitions of the primes and class selections, with their arithmetic.

A partition splits the set of all primes into disjoint classes; textual
form "2,3|5|7", or "smallest" for the all-singletons partition. Primes not
covered by any explicit class implicitly get fresh singleton classes, so a
finite description always yields a partition of all primes. A selection
picks some of the classes; a positive integer is a selection-number when
every prime dividing it lies in a selected class, and a complement-number
when none does.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PartitionSyntaxError


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError("prime_factors needs a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == (n,)


@dataclass(frozen=True)
class PrimePartition:
    """Disjoint nonempty classes of primes; uncovered primes are implicit
    singleton classes."""

    classes: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        seen: set[int] = set()
        for cls in self.classes:
            if not cls:
                raise PartitionSyntaxError("empty prime class")
            for p in cls:
                if not is_prime(p):
                    raise PartitionSyntaxError(f"{p} is not prime")
                if p in seen:
                    raise PartitionSyntaxError(f"prime {p} appears in two classes")
                seen.add(p)

    def class_of(self, p: int) -> frozenset[int]:
        for cls in self.classes:
            if p in cls:
                return cls
        return frozenset((p,))

    def __str__(self):
        if not self.classes:
            return "smallest"
        return "|".join(",".join(map(str, sorted(c))) for c in self.classes)


SMALLEST = PrimePartition(())


@dataclass(frozen=True)
class PiSelection:
    """A chosen set of classes of a partition.

    selected holds the classes themselves (explicit ones, or implicit
    singletons picked literally); everything selects all classes at once,
    which no finite listing could.
    """

    selected: frozenset[frozenset[int]] = frozenset()
    everything: bool = False

    def __str__(self):
        if self.everything:
            return "all"
        if not self.selected:
            return "(none)"
        return ",".join(
            "{" + ",".join(map(str, sorted(c))) + "}"
            for c in sorted(self.selected, key=lambda c: sorted(c))
        )


def is_pi_number(n: int, sigma: PrimePartition, pi: PiSelection) -> bool:
    """Every prime divisor of n lies in a selected class; true for n = 1."""
    if pi.everything:
        return n >= 1
    return all(sigma.class_of(p) in pi.selected for p in prime_factors(n))


def is_pi_complement_number(n: int, sigma: PrimePartition, pi: PiSelection) -> bool:
    """No prime divisor of n lies in a selected class; true for n = 1."""
    if pi.everything:
        return n == 1
    return all(sigma.class_of(p) not in pi.selected for p in prime_factors(n))


def spans_single_class(n: int, sigma: PrimePartition) -> bool:
    """All prime divisors of n fall in one class of the partition; n = 1 counts."""
    classes = {sigma.class_of(p) for p in prime_factors(n)}
    return len(classes) <= 1


def parse_partition(text: str) -> PrimePartition:
    """Parse "2,3|5|7" style class lists, or the keyword "smallest"."""
    text = text.strip()
    if text == "smallest":
        return SMALLEST
    if not text:
        raise PartitionSyntaxError("empty partition text")
    classes = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if not chunk:
            raise PartitionSyntaxError("empty class in partition text")
        try:
            classes.append(frozenset(int(tok) for tok in chunk.split(",")))
        except ValueError as exc:
            raise PartitionSyntaxError(f"bad prime list {chunk!r}") from exc
    return PrimePartition(tuple(classes))


def parse_selection(text: str, sigma: PrimePartition) -> PiSelection:
    """Parse a class selection against a partition.

    Accepted forms: "all" (or "all-classes"); zero-based explicit class
    indices "0,2"; literal classes "{2},{5}", each of which must be exactly
    a class of the partition (explicit or implicit singleton). The empty
    string selects nothing.
    """
    text = text.strip()
    if text in ("all", "all-classes"):
        return PiSelection(everything=True)
    if not text:
        return PiSelection()
    if text.startswith("{"):
        chunks = [c.strip() for c in text.replace("},", "}|").split("|")]
        picked = set()
        for chunk in chunks:
            if not (chunk.startswith("{") and chunk.endswith("}")):
                raise PartitionSyntaxError(f"bad class literal {chunk!r}")
            try:
                primes = frozenset(int(tok) for tok in chunk[1:-1].split(","))
            except ValueError as exc:
                raise PartitionSyntaxError(f"bad class literal {chunk!r}") from exc
            if not primes:
                raise PartitionSyntaxError("empty class literal")
            for p in primes:
                if not is_prime(p):
                    raise PartitionSyntaxError(f"{p} is not prime")
            cls = sigma.class_of(min(primes))
            if cls != primes:
                raise PartitionSyntaxError(
                    f"{chunk} is not a class of the partition {sigma}")
            picked.add(cls)
        return PiSelection(selected=frozenset(picked))
    try:
        indices = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise PartitionSyntaxError(f"bad class selection {text!r}") from exc
    if not sigma.classes:
        raise PartitionSyntaxError(
            "index selection needs explicit classes; the smallest partition "
            "has none, use literal classes like {2},{5}")
    picked = set()
    for i in indices:
        if i < 0 or i >= len(sigma.classes):
            raise PartitionSyntaxError(f"class index {i} out of range")
        picked.add(sigma.classes[i])
    return PiSelection(selected=frozenset(picked))
