"""Greedy normal forms in the Artin-Tits monoid.

Monoid words are tuples of generator indices.  A normal form is a tuple of
group elements whose canonical reduced words, concatenated, give a word
equal in the monoid to the input.  Two families are supported: the copy of
W inside M (simple elements), and a finite Garside family computed by
:func:`lowgarside.low.smallest_family`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .low import GarsideFamily
from .weak_order import CoxeterGroup, Element


class InternalDivisionFailure(RuntimeError):
    pass


class OutsideSupportedFamily(ValueError):
    pass


@dataclass(frozen=True)
class GreedyNF:
    entries: tuple[Element, ...]
    family: GarsideFamily | None = None     # None: the family of all simple elements

    def __len__(self):
        return len(self.entries)

    @property
    def letter_count(self) -> int:
        return sum(len(e) for e in self.entries)

    def word(self) -> tuple[int, ...]:
        return tuple(s for e in self.entries for s in e.word)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(e.word for e in self.entries)


def _normalize_entries(group: CoxeterGroup, entries: list[Element], start: int = 0) -> list[Element]:
    """Domino pass: push letters leftwards until L(b) is inside R(a) for every pair."""
    i = max(start, 0)
    while i < len(entries) - 1:
        a, b = entries[i], entries[i + 1]
        moved = False
        ra = group.right_descents(a)
        while True:
            movable = [s for s in sorted(group.left_descents(b)) if s not in ra]
            if not movable:
                break
            s = movable[0]
            a = group.right_mul(a, s)
            b = group.left_mul(s, b)
            ra = group.right_descents(a)
            moved = True
        if moved:
            entries[i] = a
            if len(b):
                entries[i + 1] = b
            else:
                del entries[i + 1]
            i = max(i - 1, 0)
            continue
        i += 1
    return [e for e in entries if len(e)]


def w_normal_form(group: CoxeterGroup, word: Iterable) -> GreedyNF:
    letters = group.letters(word)
    entries = [group.generators[s] for s in letters]
    return GreedyNF(tuple(_normalize_entries(group, entries)))


def _check_family(group, fam):
    if fam.group is not group:
        raise ValueError("family belongs to another group")


def head_in_family(group: CoxeterGroup, nf: GreedyNF, fam: GarsideFamily) -> Element:
    """Greatest family element left-dividing the element represented by ``nf``.

    Every simple left divisor of the element already divides the first
    entry of its simple-element normal form, so it suffices to look below
    that entry.
    """
    if not nf.entries:
        return group.identity
    first = nf.entries[0]
    below = [f for f in fam.elements if group.weak_leq(f, first)]
    top = max(below, key=len)
    for f in below:
        if not group.weak_leq(f, top):
            raise RuntimeError(f"family divisors of {first} have no maximum")
    return top


def _divide_first_letter(group, entries: list[Element], s: int) -> list[Element]:
    if not entries or s not in entries[0].inversions:
        raise InternalDivisionFailure(f"s{s + 1} does not divide the head")
    entries = list(entries)
    rest = group.left_mul(s, entries[0])
    entries[0] = rest
    if not len(rest):
        del entries[0]
        return entries
    return _normalize_entries(group, entries)


def f_normal_form(group: CoxeterGroup, word: Iterable, fam: GarsideFamily) -> GreedyNF:
    """Normal form with entries in the family, by repeated head peeling."""
    entries = list(w_normal_form(group, word).entries)
    out = []
    while entries:
        h = head_in_family(group, GreedyNF(tuple(entries)), fam)
        if not len(h):
            raise InternalDivisionFailure("empty head for a nontrivial element")
        for s in h.word:
            entries = _divide_first_letter(group, entries, s)
        out.append(h)
    return GreedyNF(tuple(out), fam)


def is_greedy(group: CoxeterGroup, nf: GreedyNF, fam: GarsideFamily) -> bool:
    """Each family element dividing e_i e_{i+1} already divides e_i."""
    for a, b in zip(nf.entries, nf.entries[1:]):
        pair = a.word + b.word
        for f in fam.elements:
            if left_divides(group, f, pair) and not group.weak_leq(f, a):
                return False
    return True


def monoid_eq(group: CoxeterGroup, u: Iterable, v: Iterable, fam: GarsideFamily | None = None) -> bool:
    u, v = group.letters(u), group.letters(v)
    if len(u) != len(v):
        return False
    if fam is None:
        return w_normal_form(group, u).key() == w_normal_form(group, v).key()
    return f_normal_form(group, u, fam).key() == f_normal_form(group, v, fam).key()


def left_divides(group: CoxeterGroup, f: Element, word: Sequence) -> bool:
    """f (a simple element) left-divides the monoid element spelled by ``word``."""
    nf = w_normal_form(group, word)
    if not nf.entries:
        return not len(f)
    return group.weak_leq(f, nf.entries[0])


def right_lcm_simple(group: CoxeterGroup, f: Element, g: Element, fam_or_low) -> Element | None:
    """Right-lcm of two simple elements whose projections are low; None if none exists."""
    low = getattr(fam_or_low, "low", fam_or_low)
    for x in (f, g):
        if x not in low:
            raise OutsideSupportedFamily(f"{x} is not a low element")
    return low.join(f, g)
