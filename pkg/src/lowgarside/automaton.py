"""The canonical automaton recognizing reduced words.

A state is the set of small roots in N(u^-1) for the prefix u read so far.
Reading s is allowed iff alpha_s is not in the state, and the next state is
{alpha_s} together with the small images under s of the current members.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .roots import CapExceeded, SmallRootTable
from .weak_order import UnknownGenerator


@dataclass
class CanonicalAutomaton:
    table: SmallRootTable
    states: list[frozenset[int]]                 # sets of small-root indices
    transitions: dict[tuple[int, int], int]      # (state, generator) -> state

    def __len__(self):
        return len(self.states)

    @property
    def rank(self) -> int:
        return self.table.system.rank

    def run(self, word: Iterable[int]) -> int | None:
        q = 0
        for s in word:
            if not 0 <= s < self.rank:
                raise UnknownGenerator(s)
            q = self.transitions.get((q, s))
            if q is None:
                return None
        return q

    def accepts(self, word: Iterable[int]) -> bool:
        return self.run(word) is not None


def build_canonical_automaton(table: SmallRootTable, cap: int = 10**7) -> CanonicalAutomaton:
    rank = table.system.rank
    trans = table.transitions
    start: frozenset[int] = frozenset()
    states = [start]
    number = {start: 0}
    delta = {}
    k = 0
    while k < len(states):
        X = states[k]
        for s in range(rank):
            if s in X:          # small index s is alpha_s (simple roots come first)
                continue
            Y = {s}
            for x in X:
                t = trans[x][s]
                if t >= 0:
                    Y.add(t)
            Y = frozenset(Y)
            j = number.get(Y)
            if j is None:
                j = len(states)
                number[Y] = j
                states.append(Y)
                if len(states) > cap:
                    raise CapExceeded(f"more than {cap} automaton states")
            delta[(k, s)] = j
        k += 1
    return CanonicalAutomaton(table, states, delta)


def accepts(automaton: CanonicalAutomaton, word: Iterable[int]) -> bool:
    return automaton.accepts(word)


def to_dot(automaton: CanonicalAutomaton, names=None) -> str:
    names = names or [str(s + 1) for s in range(automaton.rank)]
    lines = ["digraph canonical_automaton {", '  node [shape=circle];']
    for i, X in enumerate(automaton.states):
        label = "{" + ",".join(str(x) for x in sorted(X)) + "}"
        lines.append(f'  q{i} [label="{label}"];')
    for (i, s), j in sorted(automaton.transitions.items()):
        lines.append(f'  q{i} -> q{j} [label="{names[s]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
