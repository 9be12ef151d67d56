"""Exact cone membership by phase-one simplex over the scalar field."""

from __future__ import annotations

from typing import Sequence

from .roots import Root


def cone_membership(gamma: Root, generators: Sequence[Root]) -> bool:
    """Is gamma a nonnegative combination of ``generators``?

    Solves the feasibility problem A lam = gamma, lam >= 0 with artificial
    variables and Bland's rule, so it terminates and never cycles.
    """
    n = len(gamma.coeffs)
    field = gamma.coeffs[0].field
    zero, one = field.zero, field.one
    if all(not c for c in gamma.coeffs):
        return True
    gens = list(generators)
    if not gens:
        return False
    m = len(gens)
    width = m + n + 1
    rows = []
    for i in range(n):
        row = [g.coeffs[i] for g in gens] + [one if k == i else zero for k in range(n)] + [gamma.coeffs[i]]
        if gamma.coeffs[i].sign() < 0:
            row = [-x for x in row]
            row[m + i] = one
        rows.append(row)
    basis = [m + i for i in range(n)]
    # reduced costs for minimizing the sum of artificials
    cost = [zero] * width
    for row in rows:
        for k in range(m):
            cost[k] = cost[k] - row[k]
        cost[-1] = cost[-1] - row[-1]
    while True:
        enter = next((k for k in range(m + n) if cost[k].sign() < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a.sign() > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break   # cannot happen in phase one: the objective is bounded below
        _, p = best
        piv = rows[p][enter].inverse()
        rows[p] = [x * piv for x in rows[p]]
        for i in range(n):
            if i != p and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[p])]
        if cost[enter]:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, rows[p])]
        basis[p] = enter
    return cost[-1].is_zero()


def extreme_rays(vectors: Sequence[Root]) -> list[int]:
    """Indices of the vectors spanning extreme rays of cone(vectors).

    Vectors are assumed pairwise non-proportional (true for distinct
    positive roots).
    """
    out = []
    for i, v in enumerate(vectors):
        others = [w for j, w in enumerate(vectors) if j != i]
        if not cone_membership(v, others):
            out.append(i)
    return out
