"""Text formats: native hypergroup documents, Cayley tables, scheme matrices.

Native format, line by line, UTF-8 with LF endings and '#' comments:

    hypergroup <name>
    rank <n>
    star <n space-separated indices>
    <p> <q> : <sorted member list>     (one line per table entry, n*n lines)

An optional "identity <i>" line after the rank relabels element i to 0 on
parse; the serializer never emits it, since identity is always element 0.

Cayley format: "group <name>", "order <n>", then n rows of n symbols. The
first row fixes the symbol order, and the first row and column must both
match it, making the first symbol the identity.

Scheme format: "scheme <name>", "points <m>", then an m x m integer matrix
entry (i, j) = index of the relation containing the pair; relation 0 must
be exactly the diagonal. Only the support of relation composition is kept.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bits, mask_of, members
from .core import FiniteHypergroup, validate
from .errors import ParseError


@dataclass(frozen=True)
class HypergroupDocument:
    """Structurally parsed native document, not yet axiom-checked."""

    name: str
    rank: int
    star: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int = 0

    def candidate(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """(table, star) with the declared identity relabeled to index 0."""
        star, table = self.star, self.table
        if self.identity != 0:
            star, table = _relabel(self.rank, star, table, self.identity)
        return table, star

    def build(self, *, rank_cap=None) -> FiniteHypergroup:
        table, star = self.candidate()
        kwargs = {} if rank_cap is None else {"rank_cap": rank_cap}
        return FiniteHypergroup(table, star, name=self.name, **kwargs)


def _relabel(rank, star, table, ident):
    # Swap 0 and the declared identity index.
    perm = list(range(rank))
    perm[0], perm[ident] = ident, 0
    inv = perm
    new_star = tuple(inv[star[perm[i]]] for i in range(rank))
    new_table = tuple(
        tuple(mask_of(inv[x] for x in bits(table[perm[p]][perm[q]]))
              for q in range(rank))
        for p in range(rank))
    return new_star, new_table


def _meaningful_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected {what}, got {tok!r}", lineno) from None


def parse_document(text: str) -> HypergroupDocument:
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ParseError("empty document", 1)
    lineno, head = lines[0]
    head_parts = head.split(None, 1)
    if head_parts[0] != "hypergroup":
        raise ParseError(f"expected 'hypergroup <name>' header, got {head_parts[0]!r}",
                         lineno)
    name = head_parts[1].strip() if len(head_parts) > 1 else "H"
    rank = None
    star = None
    identity = 0
    entries: dict[tuple[int, int], int] = {}
    for lineno, line in lines[1:]:
        toks = line.split()
        key = toks[0]
        if key == "rank":
            if len(toks) != 2:
                raise ParseError("rank line needs one integer", lineno)
            rank = _int(toks[1], lineno, "rank")
            if rank < 1:
                raise ParseError("rank must be positive", lineno)
        elif key == "identity":
            if len(toks) != 2:
                raise ParseError("identity line needs one index", lineno)
            identity = _int(toks[1], lineno, "identity index")
        elif key == "star":
            if rank is None:
                raise ParseError("star line before rank", lineno)
            if len(toks) != rank + 1:
                raise ParseError(f"star line needs {rank} indices", lineno)
            star = tuple(_int(t, lineno, "star index") for t in toks[1:])
        elif key.lstrip("-").isdigit():
            if rank is None:
                raise ParseError("table entry before rank", lineno)
            if ":" not in toks:
                raise ParseError("table entry needs 'p q : members'", lineno)
            sep = toks.index(":")
            if sep != 2:
                raise ParseError("table entry needs exactly two indices before ':'",
                                 lineno)
            p = _int(toks[0], lineno, "row index")
            q = _int(toks[1], lineno, "column index")
            if not (0 <= p < rank and 0 <= q < rank):
                raise ParseError(f"entry indices ({p},{q}) out of range", lineno)
            mem = [_int(t, lineno, "member index") for t in toks[3:]]
            if not mem:
                raise ParseError(f"empty product set at ({p},{q})", lineno)
            if any(x < 0 or x >= rank for x in mem):
                raise ParseError(f"product member out of range at ({p},{q})", lineno)
            if (p, q) in entries:
                raise ParseError(f"duplicate table entry ({p},{q})", lineno)
            entries[(p, q)] = mask_of(mem)
        else:
            raise ParseError(f"unrecognized line {key!r}", lineno)
    if rank is None:
        raise ParseError("missing rank line", lines[-1][0])
    if star is None:
        raise ParseError("missing star line", lines[-1][0])
    if not (0 <= identity < rank):
        raise ParseError("identity index out of range", lines[0][0])
    missing = [(p, q) for p in range(rank) for q in range(rank)
               if (p, q) not in entries]
    if missing:
        raise ParseError(f"missing table entry {missing[0]}", lines[-1][0])
    table = tuple(tuple(entries[(p, q)] for q in range(rank))
                  for p in range(rank))
    return HypergroupDocument(name=name, rank=rank, star=star, table=table,
                              identity=identity)


def parse_hypergroup(text: str) -> FiniteHypergroup:
    """Parse and validate a native document."""
    return parse_document(text).build()


def serialize_hypergroup(H: FiniteHypergroup) -> str:
    """Canonical native document; parse of the output reproduces the table."""
    name = " ".join(H.name.split()) or "H"
    out = [f"hypergroup {name}", f"rank {H.rank}",
           "star " + " ".join(map(str, H.star))]
    for p in range(H.rank):
        for q in range(H.rank):
            mem = " ".join(map(str, members(H.table[p][q])))
            out.append(f"{p} {q} : {mem}")
    return "\n".join(out) + "\n"


def cayley_to_hypergroup(text: str) -> FiniteHypergroup:
    """Read a group's Cayley table as a thin hypergroup.

    Every product becomes the singleton set containing it; the star map is
    the group inverse, derived from the table. Latin-square shape, the
    identity row and column, and associativity are each checked with a
    specific error before validation.
    """
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ParseError("empty document", 1)
    lineno, head = lines[0]
    parts = head.split(None, 1)
    if parts[0] != "group":
        raise ParseError(f"expected 'group <name>' header, got {parts[0]!r}", lineno)
    name = parts[1].strip() if len(parts) > 1 else "G"
    if len(lines) < 2 or lines[1][1].split()[0] != "order":
        raise ParseError("expected 'order <n>' line", lines[0][0] + 1)
    lineno, order_line = lines[1]
    toks = order_line.split()
    if len(toks) != 2:
        raise ParseError("order line needs one integer", lineno)
    n = _int(toks[1], lineno, "order")
    if n < 1:
        raise ParseError("order must be positive", lineno)
    rows = lines[2:]
    if len(rows) != n:
        raise ParseError(f"expected {n} table rows, got {len(rows)}",
                         rows[-1][0] if rows else lineno)
    grid = []
    for lineno, line in rows:
        syms = line.split()
        if len(syms) != n:
            raise ParseError(f"expected {n} symbols in row, got {len(syms)}", lineno)
        grid.append(syms)
    symbols = grid[0]
    if len(set(symbols)) != n:
        raise ParseError("first row must list n distinct symbols", rows[0][0])
    pos = {s: i for i, s in enumerate(symbols)}
    table = []
    for r, (lineno, _) in enumerate(rows):
        row = []
        for c in range(n):
            sym = grid[r][c]
            if sym not in pos:
                raise ParseError(f"unknown symbol {sym!r}", lineno)
            row.append(pos[sym])
        table.append(row)
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise ParseError(
                "first symbol is not an identity: row/column mismatch at "
                f"position {i}", rows[0][0])
    for i in range(n):
        if sorted(table[i]) != list(range(n)):
            raise ParseError(f"not a Latin square: repeated symbol in row {i}",
                             rows[i][0])
        col = sorted(table[r][i] for r in range(n))
        if col != list(range(n)):
            raise ParseError(f"not a Latin square: repeated symbol in column {i}",
                             rows[0][0])
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise ParseError(
                        f"not associative at ({symbols[a]},{symbols[b]},{symbols[c]})",
                        rows[a][0])
    inv = [0] * n
    for a in range(n):
        inv[a] = table[a].index(0)
    masks = tuple(tuple(1 << table[a][b] for b in range(n)) for a in range(n))
    return FiniteHypergroup(masks, tuple(inv), name=name)


def scheme_to_hypergroup(text: str) -> FiniteHypergroup:
    """Support hypergroup of a relation partition matrix.

    Relation r lies in the product p q iff some triple of points realizes p,
    q and r along its sides. Star pairs each relation with its transpose.
    Structure constants are discarded; only supports are kept.
    """
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ParseError("empty document", 1)
    lineno, head = lines[0]
    parts = head.split(None, 1)
    if parts[0] != "scheme":
        raise ParseError(f"expected 'scheme <name>' header, got {parts[0]!r}", lineno)
    name = parts[1].strip() if len(parts) > 1 else "S"
    if len(lines) < 2 or lines[1][1].split()[0] != "points":
        raise ParseError("expected 'points <m>' line", lines[0][0] + 1)
    lineno, pts_line = lines[1]
    toks = pts_line.split()
    if len(toks) != 2:
        raise ParseError("points line needs one integer", lineno)
    m = _int(toks[1], lineno, "point count")
    if m < 1:
        raise ParseError("points must be positive", lineno)
    rows = lines[2:]
    if len(rows) != m:
        raise ParseError(f"expected {m} matrix rows, got {len(rows)}",
                         rows[-1][0] if rows else lineno)
    mat = []
    for lineno, line in rows:
        vals = [_int(t, lineno, "relation index") for t in line.split()]
        if len(vals) != m:
            raise ParseError(f"expected {m} entries in row, got {len(vals)}", lineno)
        mat.append(vals)
    for i in range(m):
        if mat[i][i] != 0:
            raise ParseError(f"diagonal entry ({i},{i}) must be relation 0",
                             rows[i][0])
    used = {v for row in mat for v in row}
    r = max(used) + 1
    if used != set(range(r)):
        raise ParseError(
            f"relation indices must be exactly 0..{r - 1}, got {sorted(used)}",
            rows[0][0])
    for i in range(m):
        for j in range(m):
            if i != j and mat[i][j] == 0:
                raise ParseError(
                    f"relation 0 must be exactly the diagonal, seen at ({i},{j})",
                    rows[i][0])
    star = [None] * r
    for i in range(m):
        for j in range(m):
            p, pt = mat[i][j], mat[j][i]
            if star[p] is None:
                star[p] = pt
            elif star[p] != pt:
                raise ParseError(
                    f"transpose pairing ill-defined for relation {p}", rows[i][0])
    table = [[0] * r for _ in range(r)]
    for x in range(m):
        row_x = mat[x]
        for y in range(m):
            p = row_x[y]
            row_y = mat[y]
            tp = table[p]
            for z in range(m):
                tp[row_y[z]] |= 1 << row_x[z]
    report = validate(tuple(tuple(row) for row in table), tuple(star))
    if not report.valid:
        from .errors import InvalidHypergroupError
        raise InvalidHypergroupError(report)
    return FiniteHypergroup(tuple(tuple(row) for row in table), tuple(star),
                            name=name)


def detect_format(text: str) -> str:
    """First meaningful keyword: hypergroup, group (Cayley) or scheme."""
    for _, line in _meaningful_lines(text):
        key = line.split(None, 1)[0]
        if key in ("hypergroup", "group", "scheme"):
            return {"hypergroup": "hypergroup", "group": "cayley",
                    "scheme": "scheme"}[key]
        raise ParseError(f"unrecognized document header {key!r}", 1)
    raise ParseError("empty document", 1)


def load_any(text: str) -> FiniteHypergroup:
    """Parse any of the three formats, converting to a hypergroup."""
    fmt = detect_format(text)
    if fmt == "hypergroup":
        return parse_hypergroup(text)
    if fmt == "cayley":
        return cayley_to_hypergroup(text)
    return scheme_to_hypergroup(text)
