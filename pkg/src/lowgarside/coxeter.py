"""Coxeter presentations: validation, a small catalog, and the bilinear form."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Sequence

from .field import Scalar, ScalarField

INF = math.inf


class InvalidMatrix(ValueError):
    pass


class UnknownType(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterMatrix:
    generators: tuple[str, ...]
    entries: tuple[tuple[int | float, ...], ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.generators)
        if n == 0:
            raise InvalidMatrix("no generators")
        if len(set(self.generators)) != n:
            raise InvalidMatrix("duplicate generator names")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise InvalidMatrix(f"matrix must be {n}x{n}")
        for i in range(n):
            if self.entries[i][i] != 1:
                raise InvalidMatrix(f"diagonal entry ({i}, {i}) must be 1")
            for j in range(n):
                m = self.entries[i][j]
                if m != self.entries[j][i]:
                    raise InvalidMatrix(f"matrix is not symmetric at ({i}, {j})")
                if i != j and not (m == INF or (isinstance(m, int) and m >= 2)):
                    raise InvalidMatrix(f"bond label {m!r} at ({i}, {j}) must be an integer >= 2 or inf")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __getitem__(self, ij) -> int | float:
        i, j = ij
        return self.entries[i][j]

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise KeyError(name) from None

    def bonds(self):
        n = self.rank
        for i in range(n):
            for j in range(i + 1, n):
                yield i, j, self.entries[i][j]

    def is_large(self) -> bool:
        return all(m >= 3 for _, _, m in self.bonds())

    def is_right_angled(self) -> bool:
        return all(m in (2, INF) for _, _, m in self.bonds())

    def has_infinite_bond(self) -> bool:
        return any(m == INF for _, _, m in self.bonds())

    def field_order(self) -> int:
        """lcm of the finite labels m >= 3; label 2 only contributes cos(pi/2) = 0."""
        labels = [int(m) for _, _, m in self.bonds() if m != INF and m >= 3]
        return reduce(lambda a, b: a * b // math.gcd(a, b), labels, 1)

    @cached_property
    def field(self) -> ScalarField:
        return build_scalar_field(self)

    def to_document(self) -> dict:
        return {
            "generators": list(self.generators),
            "matrix": [["inf" if m == INF else m for m in row] for row in self.entries],
        }


def from_bonds(n: int, bonds: dict[tuple[int, int], int | float], name: str = "", generators=None) -> CoxeterMatrix:
    """Matrix on generators 1..n with the given 1-based bonds; unlisted pairs commute."""
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (a, b), m in bonds.items():
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = m
    gens = tuple(generators) if generators else tuple(str(k + 1) for k in range(n))
    return CoxeterMatrix(gens, tuple(tuple(r) for r in rows), name)


def _path(n, labels):
    return {(k + 1, k + 2): m for k, m in enumerate(labels)}


def catalog(type_name: str, rank: int | None = None, bond: int | float | None = None,
            edges: Sequence[Sequence[int]] | None = None) -> CoxeterMatrix:
    """Standard Coxeter matrices.  Affine types of rank n have n + 1 generators."""
    t = type_name.strip()
    key = t.lower().replace("_", "").replace("-", "").replace("~", "")
    n = rank
    if key in ("i2", "i", "dihedral"):
        if bond is None:
            raise InvalidMatrix("I2 needs a bond label")
        return from_bonds(2, {(1, 2): bond}, f"I2({bond})")
    if n is None or n < 1:
        raise InvalidMatrix(f"type {t} needs a positive rank")
    if key == "a":
        return from_bonds(n, _path(n, [3] * (n - 1)), f"A{n}")
    if key == "b":
        if n < 2:
            raise InvalidMatrix("B_n needs n >= 2")
        return from_bonds(n, _path(n, [3] * (n - 2) + [4]), f"B{n}")
    if key == "d":
        if n < 4:
            raise InvalidMatrix("D_n needs n >= 4")
        bonds = _path(n - 1, [3] * (n - 2))
        bonds[(n - 2, n)] = 3
        return from_bonds(n, bonds, f"D{n}")
    if key == "h":
        if n not in (3, 4):
            raise InvalidMatrix("H_n exists for n = 3, 4")
        return from_bonds(n, _path(n, [5] + [3] * (n - 2)), f"H{n}")
    if key in ("affinea", "atilde"):
        if n == 1:
            return from_bonds(2, {(1, 2): INF}, "affineA1")
        bonds = _path(n + 1, [3] * n)
        bonds[(1, n + 1)] = 3
        return from_bonds(n + 1, bonds, f"affineA{n}")
    if key in ("affineb", "btilde"):
        if n < 3:
            raise InvalidMatrix("affine B_n needs n >= 3")
        # fork 1-3, 2-3, then a path 3-4-...-(n+1) ending in a 4
        bonds = {(1, 3): 3, (2, 3): 3}
        for k in range(3, n + 1):
            bonds[(k, k + 1)] = 4 if k == n else 3
        return from_bonds(n + 1, bonds, f"affineB{n}")
    if key in ("affinec", "ctilde"):
        if n < 2:
            raise InvalidMatrix("affine C_n needs n >= 2")
        return from_bonds(n + 1, _path(n + 1, [4] + [3] * (n - 2) + [4]), f"affineC{n}")
    if key in ("large", "complete"):
        m = 3 if bond is None else bond
        return from_bonds(n, {(i, j): m for i in range(1, n + 1) for j in range(i + 1, n + 1)}, f"large{n}({m})")
    if key in ("rightangled", "raag"):
        commuting = {tuple(sorted(e)) for e in (edges or [])}
        bonds = {(i, j): (2 if (i, j) in commuting else INF)
                 for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        return from_bonds(n, bonds, f"rightangled{n}")
    raise UnknownType(f"unknown Coxeter type {type_name!r}")


def _label(x):
    if isinstance(x, str):
        if x.strip().lower() in ("inf", "infinity", "oo", "∞"):
            return INF
        try:
            return int(x)
        except ValueError:
            raise InvalidMatrix(f"bad bond label {x!r}") from None
    if isinstance(x, float):
        if x == INF:
            return INF
        if x.is_integer():
            return int(x)
        raise InvalidMatrix(f"bad bond label {x!r}")
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    raise InvalidMatrix(f"bad bond label {x!r}")


def parse_coxeter_input(text: str | dict) -> CoxeterMatrix:
    """Parse a catalog descriptor or an explicit matrix document (JSON)."""
    doc = json.loads(text) if isinstance(text, str) else text
    if not isinstance(doc, dict):
        raise InvalidMatrix("presentation document must be an object")
    if "type" in doc:
        return catalog(doc["type"], doc.get("rank"), doc.get("bond"), doc.get("edges"))
    if "matrix" not in doc:
        raise InvalidMatrix("document needs either 'type' or 'matrix'")
    rows = [[_label(x) for x in row] for row in doc["matrix"]]
    gens = doc.get("generators") or [str(k + 1) for k in range(len(rows))]
    return CoxeterMatrix(tuple(str(g) for g in gens), tuple(tuple(r) for r in rows), doc.get("name", ""))


def build_scalar_field(matrix: CoxeterMatrix) -> ScalarField:
    return ScalarField(matrix.field_order())


def bond_value(field: ScalarField, m) -> Scalar:
    """B(alpha_s, alpha_t) for a bond labelled m: -cos(pi/m), or -1 when m is infinite."""
    if m == INF:
        return field.from_rational(-1)
    return field.two_cos_pi_over(int(m)) * Fraction(-1, 2)


def gram_matrix(matrix: CoxeterMatrix, field: ScalarField | None = None) -> tuple[tuple[Scalar, ...], ...]:
    field = field or matrix.field
    n = matrix.rank
    return tuple(
        tuple(field.one if i == j else bond_value(field, matrix[i, j]) for j in range(n))
        for i in range(n)
    )


def is_spherical(matrix: CoxeterMatrix) -> bool:
    """W is finite iff the form is positive definite (all leading minors > 0)."""
    if matrix.has_infinite_bond():
        return False
    g = [list(row) for row in gram_matrix(matrix)]
    n = len(g)
    # exact Gaussian elimination; pivots are ratios of leading minors
    for k in range(n):
        if g[k][k].sign() <= 0:
            return False
        inv = g[k][k].inverse()
        for i in range(k + 1, n):
            f = g[i][k] * inv
            if f:
                for j in range(k, n):
                    g[i][j] = g[i][j] - f * g[k][j]
    return True
