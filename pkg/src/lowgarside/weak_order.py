"""Coxeter group elements, inversion sets and the right weak order.

Sides are fixed once and for all:

* ``N(w)`` is the LEFT inversion set, the positive roots sent negative by
  w^-1.  For a reduced word s_1 ... s_n it is
  {s_1 ... s_{i-1}(alpha_{s_i})}.
* ``u <= w`` is the RIGHT weak order: u is a prefix of w (a left divisor),
  equivalently N(u) is a subset of N(w).
* a *suffix* of w is a right divisor, reached by peeling left descents.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .coxeter import CoxeterMatrix
from .roots import RootSystem


class UnknownGenerator(KeyError):
    pass


class JoinAmbiguity(RuntimeError):
    """The upper bounds of a pair inside a family have no unique minimum."""


class Element:
    """A group element, stored by its lexicographically smallest reduced word."""

    __slots__ = ("word", "inversions", "bits", "_hash")

    def __init__(self, word: tuple[int, ...], inversions: frozenset[int]):
        self.word = word
        self.inversions = inversions
        b = 0
        for i in inversions:
            b |= 1 << i
        self.bits = b
        self._hash = hash(word)

    def __len__(self):
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, Element) and self.word == other.word

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Element"):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def sort_key(self):
        return (len(self.word), self.word)

    def __repr__(self):
        return "Element(" + " ".join(f"s{s + 1}" for s in self.word) + ")" if self.word else "Element(e)"


class CoxeterGroup:
    """Element arithmetic for a Coxeter system, driven by root reflections."""

    def __init__(self, matrix: CoxeterMatrix, system: RootSystem | None = None):
        self.matrix = matrix
        self.roots = system or RootSystem(matrix)
        self.rank = matrix.rank
        self._by_inversions: dict[frozenset[int], Element] = {}
        self.identity = self._element((), frozenset())
        self.generators = tuple(self._element((s,), frozenset([s])) for s in range(self.rank))
        self._suffixes = lru_cache(maxsize=None)(self._suffixes_uncached)

    # -- names -------------------------------------------------------------

    def letter(self, x) -> int:
        """Generator index from a name, or a 1-based index written as text."""
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < self.rank:
                return x
            raise UnknownGenerator(x)
        x = str(x).strip()
        if x.startswith("σ") or (x.startswith("s") and x not in self.matrix.generators):
            x = x[1:]
        if x in self.matrix.generators:
            return self.matrix.index(x)
        if x.isdigit() and 1 <= int(x) <= self.rank:
            return int(x) - 1
        raise UnknownGenerator(x)

    def letters(self, word: Iterable) -> tuple[int, ...]:
        return tuple(self.letter(x) for x in word)

    def names(self, w: Element | Sequence[int]) -> list[str]:
        word = w.word if isinstance(w, Element) else w
        return [self.matrix.generators[s] for s in word]

    def format(self, w: Element | Sequence[int], prefix: str = "") -> str:
        names = self.names(w)
        if not names:
            return "1"
        return " ".join(prefix + n if n.isdigit() else n for n in names)

    # -- construction ------------------------------------------------------

    def _element(self, word, inversions) -> Element:
        el = Element(tuple(word), frozenset(inversions))
        self._by_inversions[el.inversions] = el
        return el

    def from_inversions(self, inversions: frozenset[int]) -> Element:
        """The element with the given (left) inversion set, by smallest-left-descent peeling."""
        el = self._by_inversions.get(inversions)
        if el is not None:
            return el
        word = []
        cur = set(inversions)
        rr = self.roots.reflect_ref
        while cur:
            s = min(r for r in cur if r < self.rank)
            word.append(s)
            cur.discard(s)
            cur = {rr(s, r) for r in cur}
        return self._element(word, inversions)

    def element(self, word: Iterable) -> Element:
        return self.reduce_word(word)

    def reduce_word(self, word: Iterable) -> Element:
        """Reduce a word letter by letter (exchange condition), then canonicalize."""
        letters = self.letters(word)
        cur: list[int] = []
        prefix_roots: list[int] = []   # s_1...s_{i-1}(alpha_{s_i})
        for s in letters:
            gamma = self.roots.apply_word(cur, s)
            if gamma >= 0:
                cur.append(s)
                prefix_roots.append(gamma)
                continue
            i = prefix_roots.index(~gamma)
            del cur[i]
            prefix_roots = self._prefix_roots(cur)
        return self.from_inversions(frozenset(prefix_roots))

    def _prefix_roots(self, word: Sequence[int]) -> list[int]:
        out = []
        for i, s in enumerate(word):
            out.append(self.roots.apply_word(word[:i], s))
        return out

    def inversion_set(self, w: Element) -> frozenset[int]:
        return w.inversions

    def inversion_roots(self, w: Element):
        return [self.roots.roots[i] for i in sorted(w.inversions)]

    # -- group law ---------------------------------------------------------

    def left_mul(self, s: int, w: Element) -> Element:
        """s * w."""
        rr = self.roots.reflect_ref
        if s in w.inversions:
            inv = frozenset(rr(s, r) for r in w.inversions if r != s)
        else:
            inv = frozenset([s, *(rr(s, r) for r in w.inversions)])
        return self.from_inversions(inv)

    def right_mul(self, w: Element, s: int) -> Element:
        """w * s."""
        gamma = self.roots.apply_word(w.word, s)
        if gamma >= 0:
            return self.from_inversions(w.inversions | {gamma})
        return self.from_inversions(w.inversions - {~gamma})

    def multiply(self, u: Element, v: Element) -> Element:
        w = u
        for s in v.word:
            w = self.right_mul(w, s)
        return w

    def inverse(self, w: Element) -> Element:
        return self.reduce_word(reversed(w.word))

    def act(self, w: Element, ref: int) -> int:
        return self.roots.apply_word(w.word, ref)

    # -- descents, order ---------------------------------------------------

    def left_descents(self, w: Element) -> frozenset[int]:
        return frozenset(s for s in range(self.rank) if s in w.inversions)

    def right_descents(self, w: Element) -> frozenset[int]:
        return frozenset(s for s in range(self.rank) if self.roots.apply_word(w.word, s) < 0)

    def descents(self, w: Element, side: str = "left") -> frozenset[int]:
        if side == "left":
            return self.left_descents(w)
        if side == "right":
            return self.right_descents(w)
        raise ValueError("side must be 'left' or 'right'")

    @staticmethod
    def weak_leq(u: Element, w: Element) -> bool:
        return u.bits & ~w.bits == 0

    def is_suffix(self, v: Element, w: Element) -> bool:
        """v is a right divisor of w: l(w v^-1) = l(w) - l(v)."""
        return len(self.multiply(w, self.inverse(v))) == len(w) - len(v)

    # -- N^1 ---------------------------------------------------------------

    def n1_set(self, w: Element) -> frozenset[int]:
        """Roots beta_i whose deletion from the canonical word leaves a reduced word.

        Deleting letter i splits the word as u * v with u = s_1..s_{i-1} and
        v = s_{i+1}..s_n; u v is reduced exactly when N(u^-1) and N(v) are
        disjoint.
        """
        word = w.word
        n = len(word)
        if n == 0:
            return frozenset()
        rr = self.roots.reflect_ref
        # left inversion sets of u_i^-1 = (s_1...s_{i-1})^-1
        pre = [frozenset()]
        for s in word[:-1]:
            pre.append(frozenset([s, *(rr(s, r) for r in pre[-1])]))
        # N(v_i) for v_i = s_{i+1} ... s_n
        suf = [frozenset()] * n
        for i in range(n - 2, -1, -1):
            s = word[i + 1]
            suf[i] = frozenset([s, *(rr(s, r) for r in suf[i + 1])])
        prefix_roots = self._prefix_roots(word)
        return frozenset(prefix_roots[i] for i in range(n) if pre[i].isdisjoint(suf[i]))

    # -- suffixes ----------------------------------------------------------

    def _suffixes_uncached(self, w: Element) -> frozenset[Element]:
        out = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for x in frontier:
                for s in self.left_descents(x):
                    y = self.left_mul(s, x)
                    if y not in out:
                        out.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(out)

    def suffixes(self, w: Element) -> frozenset[Element]:
        return self._suffixes(w)

    def words_of(self, w: Element) -> set[tuple[int, ...]]:
        """All reduced words of w."""
        if not w.word:
            return {()}
        out = set()
        for s in self.left_descents(w):
            for tail in self.words_of(self.left_mul(s, w)):
                out.add((s,) + tail)
        return out

    # -- bulk enumeration ----------------------------------------------------

    def ball(self, length_cap: int, element_cap: int = 10**6) -> list[Element]:
        """All elements of length <= length_cap, by BFS on left multiplication."""
        from .roots import CapExceeded

        out = [self.identity]
        seen = {self.identity}
        frontier = [self.identity]
        for _ in range(length_cap):
            nxt = []
            for w in frontier:
                for s in range(self.rank):
                    if s not in w.inversions:
                        y = self.left_mul(s, w)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
            if len(seen) > element_cap:
                raise CapExceeded(f"more than {element_cap} elements")
            nxt.sort()
            out.extend(nxt)
            frontier = nxt
            if not nxt:
                break
        return out


class JoinIndex:
    """Upper-bound bitsets over a finite family, for joins inside it.

    Members are ordered by (length, word); bit k of ``upsets[i]`` is set when
    member i <= member k.  The least upper bound of a pair inside the family
    is then the lowest bit of the intersection of their upsets, provided it
    is below every other bit of that intersection.
    """

    def __init__(self, family: Iterable[Element]):
        self.members = sorted(set(family))
        self.position = {w: i for i, w in enumerate(self.members)}
        containing: dict[int, int] = {}
        for k, w in enumerate(self.members):
            for r in w.inversions:
                containing[r] = containing.get(r, 0) | (1 << k)
        everything = (1 << len(self.members)) - 1
        self.upsets = []
        for w in self.members:
            u = everything
            for r in w.inversions:
                u &= containing[r]
            self.upsets.append(u)

    def __len__(self):
        return len(self.members)

    def join_index(self, i: int, j: int) -> int | None:
        common = self.upsets[i] & self.upsets[j]
        if not common:
            return None
        k = (common & -common).bit_length() - 1
        if self.upsets[k] != common:
            raise JoinAmbiguity(f"no least upper bound for {self.members[i]} and {self.members[j]}")
        return k

    def join(self, u: Element, v: Element) -> Element | None:
        k = self.join_index(self.position[u], self.position[v])
        return None if k is None else self.members[k]

    def upper_bounds(self, bits: int) -> int:
        """Bitset of members whose inversion set contains ``bits``."""
        out = 0
        for k, w in enumerate(self.members):
            if bits & ~w.bits == 0:
                out |= 1 << k
        return out


def join_within(family, u: Element, v: Element) -> Element | None:
    """The join of u and v inside a finite join-closed family, or None when unbounded.

    ``family`` is either a prebuilt JoinIndex or any collection of elements
    containing u and v.
    """
    index = family if isinstance(family, JoinIndex) else JoinIndex(family)
    return index.join(u, v)
