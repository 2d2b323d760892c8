"""Exhaustive per-fixture instance checks of the quotient and valency facts.

Each function scans every applicable tuple of closed subsets of one
hypergroup and returns a list of violation descriptions (empty = clean).
Used by the acceptance suite over the whole rank-at-most-8 corpus.
"""

from __future__ import annotations

from hypergroups import (
    closed_subsets,
    complex_product,
    intersect,
    is_closed,
    is_normal,
    is_residually_thin,
    is_strongly_normal,
    is_subnormal,
    is_thin,
    isomorphic,
    lift,
    members,
    product_closed,
    quotient,
    section_quotient,
    star_set,
    sub_hypergroup,
    valency,
    valency_of,
)


def _normalizes(h, d, e) -> bool:
    """Every element of d normalizes e: e x inside x e."""
    return all(
        complex_product(h, e, 1 << x) & ~complex_product(h, 1 << x, e) == 0
        for x in members(d))


def strongly_normal_iff_thin_quotient(h):
    out = []
    for f in closed_subsets(h).subsets:
        if is_strongly_normal(h, f, h.full) != is_thin(quotient(h, f).quotient):
            out.append(f"{h.name}: subset {list(members(f))}")
    return out


def strong_normality_descends_to_quotients(h):
    out = []
    lat = closed_subsets(h)
    for d in lat.subsets:
        qm = quotient(h, d)
        for e in lat.subsets:
            if d & ~e:
                continue
            ebar = qm.project_set(e)
            if is_strongly_normal(h, e, h.full) != \
                    is_strongly_normal(qm.quotient, ebar, qm.quotient.full):
                out.append(f"{h.name}: pair {list(members(d))}, {list(members(e))}")
    return out


def subsets_inherit_residual_thinness(h):
    out = []
    if not is_residually_thin(h):
        return out
    v = valency(h)
    for d in closed_subsets(h).subsets:
        sub = sub_hypergroup(h, d)
        if not is_residually_thin(sub):
            out.append(f"{h.name}: subset {list(members(d))} not residually thin")
        elif v % valency(sub):
            out.append(f"{h.name}: valency of {list(members(d))} does not divide")
    return out


def subnormal_quotient_valency_product(h):
    out = []
    if not is_residually_thin(h):
        return out
    for d in closed_subsets(h).subsets:
        if is_subnormal(h, d, h.full) is None:
            continue
        q = quotient(h, d).quotient
        if not is_residually_thin(q):
            out.append(f"{h.name}: quotient over {list(members(d))} not residually thin")
        elif valency(q) * valency_of(h, d) != valency(h):
            out.append(f"{h.name}: valency product fails for {list(members(d))}")
    return out


def normal_product_valency_identity(h):
    out = []
    if not is_residually_thin(h):
        return out
    lat = closed_subsets(h)
    full_i = lat.position(h.full)
    for ci, c in enumerate(lat.subsets):
        if (ci, full_i) not in lat.normal_in:
            continue
        for d in lat.subsets:
            cd = product_closed(h, c, d)
            meet = intersect(c, d)
            if not is_closed(h, cd) or not is_closed(h, meet):
                out.append(f"{h.name}: product or meet not closed")
                continue
            if valency_of(h, cd) * valency_of(h, meet) != \
                    valency_of(h, c) * valency_of(h, d):
                out.append(f"{h.name}: product valency identity fails "
                           f"({list(members(c))}, {list(members(d))})")
    return out


def closed_subset_bijection(h):
    out = []
    lat = closed_subsets(h)
    for f in lat.subsets:
        qm = quotient(h, f)
        over = [e for e in lat.subsets if f & ~e == 0]
        q_closed = list(closed_subsets(qm.quotient).subsets)
        if len(over) != len(q_closed):
            out.append(f"{h.name}: count mismatch over {list(members(f))}")
            continue
        for e in over:
            ebar = qm.project_set(e)
            if ebar not in q_closed or lift(qm, ebar) != e:
                out.append(f"{h.name}: round trip fails at {list(members(e))}")
    return out


def quotient_tower_isomorphism(h):
    out = []
    lat = closed_subsets(h)
    full_i = lat.position(h.full)
    for ei, e in enumerate(lat.subsets):
        if (ei, full_i) not in lat.normal_in:
            continue
        he = quotient(h, e).quotient
        for d in lat.subsets:
            if d & ~e:
                continue
            qd = quotient(h, d)
            tower = quotient(qd.quotient, qd.project_set(e)).quotient
            if isomorphic(tower, he) is None:
                out.append(f"{h.name}: tower fails ({list(members(d))}, "
                           f"{list(members(e))})")
    return out


def product_intersection_isomorphism(h):
    out = []
    lat = closed_subsets(h)
    for e in lat.subsets:
        for d in lat.subsets:
            if not _normalizes(h, d, e):
                continue
            ed = product_closed(h, e, d)
            left = section_quotient(h, e, ed).quotient
            right = section_quotient(h, intersect(e, d), d).quotient
            if isomorphic(left, right) is None:
                out.append(f"{h.name}: section isomorphism fails "
                           f"({list(members(e))}, {list(members(d))})")
    return out


def thin_adjoint_squares(h):
    out = []
    thin_closed = [t for t in closed_subsets(h).subsets
                   if is_thin(sub_hypergroup(h, t))]
    for t in thin_closed:
        for e in range(h.rank):
            star_e = star_set(h, [e])
            hh = complex_product(h, star_e, [e])
            if hh & ~t:
                continue
            if not is_closed(h, hh):
                out.append(f"{h.name}: adjoint square of {e} not closed in "
                           f"{list(members(t))}")
                continue
            normalizes = complex_product(h, t, star_e) & \
                ~complex_product(h, star_e, t) == 0
            if normalizes and not is_strongly_normal(h, hh, t):
                out.append(f"{h.name}: adjoint square of {e} not strongly "
                           f"normal in {list(members(t))}")
    return out


def product_with_normal_is_subnormal(h):
    out = []
    lat = closed_subsets(h)
    full_i = lat.position(h.full)
    normals = [lat.subsets[i] for i, j in lat.normal_in if j == full_i]
    for d in lat.subsets:
        if is_subnormal(h, d, h.full) is None:
            continue
        for e in normals:
            ed = product_closed(h, e, d)
            if is_subnormal(h, ed, h.full) is None:
                out.append(f"{h.name}: product {list(members(ed))} not subnormal")
    return out


def meet_preserves_strong_normality(h):
    out = []
    lat = closed_subsets(h)
    strong = {(lat.subsets[i], lat.subsets[j])
              for i, j in lat.strongly_normal_in}
    for c, d in strong:
        for f in lat.subsets:
            if not is_strongly_normal(h, c & f, d & f):
                out.append(f"{h.name}: meet with {list(members(f))} breaks "
                           f"({list(members(c))}, {list(members(d))})")
    return out


def normal_product_preserves_strong_normality(h):
    out = []
    lat = closed_subsets(h)
    full_i = lat.position(h.full)
    normals = [lat.subsets[i] for i, j in lat.normal_in if j == full_i]
    strong = {(lat.subsets[i], lat.subsets[j])
              for i, j in lat.strongly_normal_in}
    for e in normals:
        for c, d in strong:
            ec = product_closed(h, e, c)
            ed = product_closed(h, e, d)
            if not is_strongly_normal(h, ec, ed):
                out.append(f"{h.name}: product with {list(members(e))} breaks "
                           f"({list(members(c))}, {list(members(d))})")
    return out


ALL_CHECKS = (
    strongly_normal_iff_thin_quotient,
    strong_normality_descends_to_quotients,
    subsets_inherit_residual_thinness,
    subnormal_quotient_valency_product,
    normal_product_valency_identity,
    closed_subset_bijection,
    quotient_tower_isomorphism,
    product_intersection_isomorphism,
    thin_adjoint_squares,
    product_with_normal_is_subnormal,
    meet_preserves_strong_normality,
    normal_product_preserves_strong_normality,
)
