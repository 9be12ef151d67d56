"""Roots of a based root system, small roots, and bounded validators.

Positive roots are interned in a registry and referred to by integer ids;
a *ref* is an id for a positive root or its bitwise complement ``~id`` for
the corresponding negative root.  Simple reflections act on refs through a
memoized table, which is what the element engine runs on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .coxeter import CoxeterMatrix, gram_matrix
from .field import Scalar, ScalarField


class MixedSigns(ValueError):
    """A vector with coefficients of both signs is not a root."""


class CapExceeded(RuntimeError):
    pass


class DegeneratePlane(ValueError):
    pass


POSITIVE, NEGATIVE = 1, -1

# transition tags besides a small-root index
NON_SMALL_POSITIVE = -1
NEGATIVE_SIMPLE = -2


@dataclass(frozen=True)
class Root:
    coeffs: tuple[Scalar, ...]

    def __neg__(self):
        return Root(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Root"):
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root"):
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "Root":
        return Root(tuple(a * c for a in self.coeffs))

    def sort_key(self):
        return tuple(float(c) for c in self.coeffs)

    def __repr__(self):
        return "Root(" + ", ".join(repr(c) for c in self.coeffs) + ")"


class RootSystem:
    """The standard geometric representation of a Coxeter system."""

    def __init__(self, matrix: CoxeterMatrix, field: ScalarField | None = None):
        self.matrix = matrix
        self.field = field or matrix.field
        self.rank = matrix.rank
        self.gram = gram_matrix(matrix, self.field)
        self.two_gram = tuple(tuple(b * 2 for b in row) for row in self.gram)
        self.roots: list[Root] = []
        self._ids: dict[Root, int] = {}
        self._reflect: list[list[int | None]] = []
        zero, one = self.field.zero, self.field.one
        self.simple_roots = tuple(
            Root(tuple(one if i == j else zero for j in range(self.rank))) for i in range(self.rank)
        )
        for a in self.simple_roots:
            self.intern(a)

    # -- vector level ------------------------------------------------------

    def simple(self, s: int) -> Root:
        return self.simple_roots[s]

    def bilinear(self, g: Root, h: Root) -> Scalar:
        total = self.field.zero
        for i, a in enumerate(g.coeffs):
            if a:
                row = self.gram[i]
                for j, b in enumerate(h.coeffs):
                    if b and row[j]:
                        total = total + a * b * row[j]
        return total

    def bilinear_simple(self, s: int, g: Root) -> Scalar:
        row = self.gram[s]
        total = self.field.zero
        for j, b in enumerate(g.coeffs):
            if b and row[j]:
                total = total + b * row[j]
        return total

    def reflect_simple(self, s: int, g: Root) -> Root:
        row = self.two_gram[s]
        c = self.field.zero
        for j, b in enumerate(g.coeffs):
            if b and row[j]:
                c = c + b * row[j]
        if not c:
            return g
        coeffs = list(g.coeffs)
        coeffs[s] = coeffs[s] - c
        return Root(tuple(coeffs))

    def reflect(self, beta: Root, g: Root) -> Root:
        """The reflection in an arbitrary root beta, applied to g."""
        c = self.bilinear(beta, g) * 2
        if not c:
            return g
        return g - beta.scale(c)

    @staticmethod
    def classify(g: Root) -> int:
        signs = {c.sign() for c in g.coeffs} - {0}
        if not signs:
            raise ValueError("zero vector")
        if len(signs) > 1:
            raise MixedSigns(f"{g!r} has coefficients of both signs")
        return signs.pop()

    def classify_positive(self, g: Root) -> int:
        return self.classify(g)

    # -- registry ----------------------------------------------------------

    def intern(self, g: Root) -> int:
        """Stable id of a positive root (assigned on first sight)."""
        i = self._ids.get(g)
        if i is None:
            i = len(self.roots)
            self._ids[g] = i
            self.roots.append(g)
            self._reflect.append([None] * self.rank)
        return i

    def lookup(self, g: Root) -> int | None:
        return self._ids.get(g)

    def ref(self, g: Root) -> int:
        if self.classify(g) > 0:
            return self.intern(g)
        return ~self.intern(-g)

    def root_of(self, ref: int) -> Root:
        return self.roots[ref] if ref >= 0 else -self.roots[~ref]

    def reflect_ref(self, s: int, ref: int) -> int:
        if ref < 0:
            return ~self.reflect_ref(s, ~ref)
        row = self._reflect[ref]
        out = row[s]
        if out is None:
            out = self.ref(self.reflect_simple(s, self.roots[ref]))
            row[s] = out
        return out

    def apply_word(self, word: Sequence[int], ref: int) -> int:
        """w(gamma) for w = word[0] word[1] ... (rightmost letter acts first)."""
        for s in reversed(word):
            ref = self.reflect_ref(s, ref)
        return ref

    def positive_roots_by_depth(self, depth_cap: int) -> list[tuple[int, int]]:
        """(id, depth) of every positive root of depth <= depth_cap, in BFS order."""
        seen = {s: 0 for s in range(self.rank)}
        out = [(s, 0) for s in range(self.rank)]
        frontier = list(range(self.rank))
        for depth in range(1, depth_cap + 1):
            nxt = []
            for r in frontier:
                for s in range(self.rank):
                    t = self.reflect_ref(s, r)
                    if t >= 0 and t not in seen:
                        seen[t] = depth
                        nxt.append(t)
                        out.append((t, depth))
            frontier = nxt
        return out


# ---------------------------------------------------------------------------
# small roots


@dataclass
class SmallRootTable:
    system: RootSystem
    ids: list[int]                      # registry id of each small root
    depth: list[int]
    transitions: list[list[int]]        # small index, NON_SMALL_POSITIVE or NEGATIVE_SIMPLE
    index: dict[int, int] = field(default_factory=dict)   # registry id -> small index

    def __len__(self):
        return len(self.ids)

    @property
    def roots(self) -> list[Root]:
        return [self.system.roots[i] for i in self.ids]

    def id_set(self) -> frozenset[int]:
        return frozenset(self.ids)

    def bits(self) -> int:
        b = 0
        for i in self.ids:
            b |= 1 << i
        return b


def enumerate_small_roots(system: RootSystem, cap: int = 10**6) -> SmallRootTable:
    """Breadth-first generation of the small roots from the simple roots.

    A small root sigma with B(alpha_s, sigma) < 0 has a small image under s
    exactly when B(alpha_s, sigma) > -1.
    """
    minus_one = system.field.from_rational(-1)
    ids = list(range(system.rank))
    depth = [0] * system.rank
    known = set(ids)
    frontier = list(ids)
    level = 0
    while frontier:
        level += 1
        new = []
        for r in frontier:
            sigma = system.roots[r]
            for s in range(system.rank):
                b = system.bilinear_simple(s, sigma)
                if b.sign() < 0 and b > minus_one:
                    t = system.reflect_ref(s, r)
                    if t not in known:
                        known.add(t)
                        new.append(t)
        new.sort(key=lambda i: system.roots[i].coeffs)
        ids.extend(new)
        depth.extend([level] * len(new))
        if len(ids) > cap:
            raise CapExceeded(f"more than {cap} small roots")
        frontier = new
    index = {r: k for k, r in enumerate(ids)}
    transitions = []
    for r in ids:
        row = []
        for s in range(system.rank):
            if r == s:
                row.append(NEGATIVE_SIMPLE)
                continue
            t = system.reflect_ref(s, r)
            row.append(index.get(t, NON_SMALL_POSITIVE))
        transitions.append(row)
    return SmallRootTable(system, ids, depth, transitions, index)


def small_transition(table: SmallRootTable, sigma: int, s: int) -> int:
    return table.transitions[sigma][s]


# ---------------------------------------------------------------------------
# bounded validators


def dominance_falsifier(system: RootSystem, alpha: Root, beta: Root, length_cap: int):
    """Look for w with l(w) <= length_cap, w(beta) < 0 and w(alpha) > 0.

    Returns the witness as a tuple of generator indices, or None when no
    witness exists up to the cap.  None is not a proof that beta dominates
    alpha.
    """
    a0, b0 = system.ref(alpha), system.ref(beta)
    simple_refs = tuple(range(system.rank))
    seen = {simple_refs}
    frontier = deque([(simple_refs, (), a0, b0)])
    while frontier:
        state, word, a, b = frontier.popleft()
        if b < 0 and a >= 0:
            return word
        if len(word) >= length_cap:
            continue
        for s in range(system.rank):
            nstate = tuple(system.reflect_ref(s, x) for x in state)
            if nstate in seen:
                continue
            seen.add(nstate)
            frontier.append((nstate, (s,) + word, system.reflect_ref(s, a), system.reflect_ref(s, b)))
    return None


def _plane_coordinates(alpha: Root, beta: Root):
    """Return a solver mapping gamma to (a, b) with gamma = a alpha + b beta, or None."""
    n = len(alpha.coeffs)
    for i in range(n):
        for j in range(i + 1, n):
            det = alpha.coeffs[i] * beta.coeffs[j] - alpha.coeffs[j] * beta.coeffs[i]
            if det:
                inv = det.inverse()

                def solve(g, i=i, j=j, inv=inv):
                    a = (g.coeffs[i] * beta.coeffs[j] - g.coeffs[j] * beta.coeffs[i]) * inv
                    b = (alpha.coeffs[i] * g.coeffs[j] - alpha.coeffs[j] * g.coeffs[i]) * inv
                    for k in range(n):
                        if g.coeffs[k] != a * alpha.coeffs[k] + b * beta.coeffs[k]:
                            return None
                    return a, b

                return solve
    raise DegeneratePlane("alpha and beta are linearly dependent")


def _extreme_pair(points):
    """points: list of (root, (a, b)); most clockwise and most counterclockwise."""
    def cross(p, q):
        return p[0] * q[1] - p[1] * q[0]

    first = last = points[0]
    for p in points[1:]:
        if cross(p[1], first[1]).sign() > 0:
            first = p
        if cross(last[1], p[1]).sign() > 0:
            last = p
    return first[0], last[0]


def maximal_dihedral_simples(system: RootSystem, alpha: Root, beta: Root, depth_cap: int) -> tuple[Root, Root]:
    """The two extreme positive roots of the plane spanned by alpha and beta.

    Only positive roots of depth <= depth_cap (plus alpha and beta) are
    scanned, so the answer is exact only once the cap reaches the simple
    system of that dihedral subsystem.  The first returned root lies on the
    side of alpha.
    """
    solve = _plane_coordinates(alpha, beta)
    one, zero = system.field.one, system.field.zero
    points = [(alpha, (one, zero)), (beta, (zero, one))]
    for r, _ in system.positive_roots_by_depth(depth_cap):
        g = system.roots[r]
        if g == alpha or g == beta:
            continue
        ab = solve(g)
        if ab is not None:
            points.append((g, ab))
    return _extreme_pair(points)


def dihedral_planes(system: RootSystem, sigma: Root, universe: Sequence[Root]):
    """Group the roots of ``universe`` by the plane they span with sigma.

    Yields (extreme pair, members) per plane, using the same extreme-ray rule
    as maximal_dihedral_simples.
    """
    planes: dict[tuple, list[Root]] = {}
    n = len(sigma.coeffs)
    for g in universe:
        if g == sigma:
            continue
        pl = [sigma.coeffs[i] * g.coeffs[j] - sigma.coeffs[j] * g.coeffs[i]
              for i in range(n) for j in range(i + 1, n)]
        lead = next((x for x in pl if x), None)
        if lead is None:
            continue
        inv = lead.inverse()
        key = tuple(x * inv for x in pl)
        planes.setdefault(key, []).append(g)
    for members in planes.values():
        solve = _plane_coordinates(sigma, members[0])
        pts = [(sigma, solve(sigma))] + [(g, solve(g)) for g in members]
        yield _extreme_pair(pts), members
