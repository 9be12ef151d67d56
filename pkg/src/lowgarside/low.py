"""Low elements and the smallest Garside family, seen in the Coxeter group.

An element w is low when every extreme ray of cone(N(w)) is spanned by a
small root.  The projection to W of the smallest Garside family of the
Artin-Tits monoid is the closure of S under join and suffix; it sits inside
the (finite) set of low elements, so the closure is computed there.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable

from .coxeter import INF, is_spherical
from .roots import CapExceeded, SmallRootTable, enumerate_small_roots
from .weak_order import CoxeterGroup, Element, JoinIndex


class EscapedLow(RuntimeError):
    """A closure element is not low."""


class NotApplicable(ValueError):
    pass


def is_low(group: CoxeterGroup, w: Element, table: SmallRootTable) -> bool:
    small = table.id_set()
    return group.n1_set(w) <= small


@dataclass
class LowSet:
    group: CoxeterGroup
    table: SmallRootTable
    elements: list[Element]                 # ordered by (length, word)
    n1: dict[Element, frozenset[int]]
    peel: list[dict[int, int]]              # peel[i][s] = index of s * elements[i]
    index: JoinIndex = field(init=False)

    def __post_init__(self):
        self.index = JoinIndex(self.elements)
        assert self.index.members == self.elements

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w: Element):
        return w in self.index.position

    def __iter__(self):
        return iter(self.elements)

    def position(self, w: Element) -> int:
        return self.index.position[w]

    def join(self, u: Element, v: Element) -> Element | None:
        return self.index.join(u, v)

    def closure_report(self) -> list[str]:
        """Exhaustive suffix / join / generator checks; returns violations."""
        g = self.group
        problems = []
        for w in [g.identity, *g.generators]:
            if w not in self:
                problems.append(f"missing {w}")
        for i, w in enumerate(self.elements):
            for s in g.left_descents(w):
                y = g.left_mul(s, w)
                if y not in self:
                    problems.append(f"suffix {y} of {w} is not low")
                elif self.peel[i].get(s) != self.position(y):
                    problems.append(f"peel table wrong at {w}, s{s + 1}")
        n = len(self.elements)
        for i in range(n):
            for j in range(i + 1, n):
                try:
                    self.index.join_index(i, j)
                except Exception as exc:   # JoinAmbiguity
                    problems.append(str(exc))
        return problems


def enumerate_low(group: CoxeterGroup, table: SmallRootTable | None = None, cap: int = 10**6) -> LowSet:
    """All low elements, breadth-first by length from the identity.

    Candidates of length k + 1 are s * w for low w of length k and s not a
    left descent of w.  This reaches every low element because the low set
    is closed under suffix.
    """
    table = table or enumerate_small_roots(group.roots)
    small = table.id_set()
    rr = group.roots.reflect_ref
    elements = [group.identity]
    n1 = {group.identity: frozenset()}
    edges: list[tuple[Element, int, Element]] = []
    level = [group.identity]
    rejected: set[frozenset[int]] = set()
    while level:
        found: dict[frozenset[int], Element] = {}
        for w in level:
            for s in range(group.rank):
                if s in w.inversions:
                    continue
                inv = frozenset([s, *(rr(s, r) for r in w.inversions)])
                if inv in rejected:
                    continue
                z = found.get(inv)
                if z is None:
                    z = group.from_inversions(inv)
                    z_n1 = group.n1_set(z)
                    if not z_n1 <= small:
                        rejected.add(inv)
                        continue
                    found[inv] = z
                    n1[z] = z_n1
                edges.append((z, s, w))
        level = sorted(found.values())
        elements.extend(level)
        if len(elements) > cap:
            raise CapExceeded(f"more than {cap} low elements")
    pos = {w: i for i, w in enumerate(elements)}
    peel = [dict() for _ in elements]
    for z, s, w in edges:
        peel[pos[z]][s] = pos[w]
    return LowSet(group, table, elements, n1, peel)


@dataclass
class GarsideFamily:
    """pi(F): the closure of S under join and suffix, inside the low set."""

    low: LowSet
    elements: list[Element]
    provenance: dict[Element, tuple]        # ("seed",) | ("suffix", x) | ("join", x, y)
    joins: list[tuple[Element, Element, Element]] = field(default_factory=list)
    _extremals: list[Element] | None = field(default=None, repr=False)

    @property
    def group(self) -> CoxeterGroup:
        return self.low.group

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self._set

    def __iter__(self):
        return iter(self.elements)

    def __post_init__(self):
        self._set = frozenset(self.elements)

    @property
    def extremals(self) -> list[Element]:
        if self._extremals is None:
            self._extremals = extremal_elements(self)
        return self._extremals


def smallest_family(low: LowSet, record_joins: bool = False) -> GarsideFamily:
    """Fixpoint closure of {e} and S under suffix and join, in (length, word) order."""
    g = low.group
    idx = low.index
    provenance: dict[int, tuple] = {}
    heap: list[int] = []

    def push(k, why):
        if k not in provenance:
            provenance[k] = why
            heapq.heappush(heap, k)

    for w in [g.identity, *g.generators]:
        if w not in low:
            raise EscapedLow(f"{w} is not low")
        push(low.position(w), ("seed",))
    done: list[int] = []
    joins = []
    while heap:
        x = heapq.heappop(heap)
        for s, y in low.peel[x].items():
            push(y, ("suffix", x))
        wx = low.elements[x]
        for s in g.left_descents(wx):
            if s not in low.peel[x]:
                raise EscapedLow(f"suffix s{s + 1}*{wx} of a family element is not low")
        ux = idx.upsets[x]
        for y in done:
            common = ux & idx.upsets[y]
            if not common:
                continue
            k = idx.join_index(x, y)
            if record_joins:
                joins.append((y, x, k))
            push(k, ("join", y, x))
        done.append(x)
    members = sorted(provenance)
    els = low.elements
    prov = {}
    for k, why in provenance.items():
        prov[els[k]] = (why[0],) + tuple(els[i] for i in why[1:])
    return GarsideFamily(low, [els[k] for k in members], prov,
                         [(els[a], els[b], els[c]) for a, b, c in joins])


def extremal_elements(fam) -> list[Element]:
    """Suffix-maximal members: x such that no s * x of length l(x) + 1 is in the family."""
    if not isinstance(fam, GarsideFamily):
        raise TypeError("extremal_elements needs a GarsideFamily")
    g = fam.group
    members = set(fam)
    out = []
    for x in sorted(members):
        if not any(g.left_mul(s, x) in members for s in range(g.rank) if s not in x.inversions):
            out.append(x)
    return out


def extremal_elements_bruteforce(group: CoxeterGroup, members: Iterable[Element]) -> list[Element]:
    members = set(members)
    covered = set()
    for y in members:
        covered |= (group.suffixes(y) - {y})
    return sorted(members - covered)


@dataclass
class FamilyReport:
    missing_generators: list[Element] = field(default_factory=list)
    suffix_violations: list[tuple[Element, Element]] = field(default_factory=list)
    join_violations: list[tuple[Element, Element, Element]] = field(default_factory=list)
    provenance_violations: list[Element] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing_generators or self.suffix_violations
                    or self.join_violations or self.provenance_violations)

    def lines(self) -> list[str]:
        out = [f"missing generator {w}" for w in self.missing_generators]
        out += [f"suffix {y} of {w} missing" for w, y in self.suffix_violations]
        out += [f"join {z} of {u}, {v} missing" for u, v, z in self.join_violations]
        out += [f"provenance of {w} does not ground in S" for w in self.provenance_violations]
        return out


def verify_family(fam, low: LowSet) -> FamilyReport:
    """Re-check generators, suffix closure, join closure (in L) and provenance."""
    g = low.group
    members = set(fam)
    rep = FamilyReport()
    for w in [g.identity, *g.generators]:
        if w not in members:
            rep.missing_generators.append(w)
    for w in sorted(members):
        for s in sorted(g.left_descents(w)):
            y = g.left_mul(s, w)
            if y not in members:
                rep.suffix_violations.append((w, y))
    ordered = sorted(members)
    for u, v in combinations(ordered, 2):
        if u in low and v in low:
            z = low.join(u, v)
            if z is not None and z not in members:
                rep.join_violations.append((u, v, z))
    provenance = getattr(fam, "provenance", None)
    if provenance is not None:
        grounded: dict[Element, bool] = {}

        def ground(w, stack=()):
            if w in grounded:
                return grounded[w]
            why = provenance.get(w)
            if why is None or w in stack:
                return False
            if why[0] == "seed":
                ok = w == g.identity or w in g.generators
            else:
                parents = why[1:]
                ok = all(p in members and ground(p, stack + (w,)) for p in parents)
                if ok and why[0] == "suffix":
                    ok = w in g.suffixes(parents[0])
                if ok and why[0] == "join":
                    ok = low.join(*parents) == w
            grounded[w] = ok
            return ok

        for w in ordered:
            if not ground(w):
                rep.provenance_violations.append(w)
    return rep


# ---------------------------------------------------------------------------
# closed forms for spherical, large and right-angled types


def alternating(r: int, s: int, k: int) -> list[int]:
    return [r if i % 2 == 0 else s for i in range(k)]


def type_oracle(group: CoxeterGroup, cap: int = 10**6) -> set[Element]:
    m = group.matrix
    n = group.rank
    if is_spherical(m):
        return set(group.ball(10**9, element_cap=cap))
    out = {group.identity, *group.generators}
    if m.is_large():
        for r, s in combinations(range(n), 2):
            mrs = m[r, s]
            if mrs == INF:
                continue
            for k in range(1, int(mrs) + 1):
                out.add(group.reduce_word(alternating(r, s, k)))
                out.add(group.reduce_word(alternating(s, r, k)))
        for r, s, t in product(range(n), repeat=3):
            if len({r, s, t}) < 3 or r > s:
                continue
            if INF in (m[r, s], m[s, t], m[t, r]):
                continue
            out.add(group.reduce_word([t] + alternating(r, s, int(m[r, s]))))
        return out
    if m.is_right_angled():
        for size in range(2, n + 1):
            for subset in combinations(range(n), size):
                if all(m[a, b] == 2 for a, b in combinations(subset, 2)):
                    out.add(group.reduce_word(subset))
        return out
    raise NotApplicable(f"{m.name or 'system'} is not spherical, large or right-angled")


def large_type_extremal_count(rank: int) -> int:
    from math import comb

    return 3 * comb(rank, 3)
