"""Multi-pattern matcher for relation occurrences (Aho-Corasick over arrow ids).

States are prefixes of relations.  A state is *hit* when some relation is a
suffix of the string read so far, so scanning a path and never landing on a
hit state is the same as the path avoiding every relation.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


class RelationAutomaton:
    def __init__(self, patterns: Iterable[Sequence[str]]):
        self.goto: list[dict[str, int]] = [{}]
        self.fail: list[int] = [0]
        self.hit: list[bool] = [False]
        # length of the longest relation that is a suffix at this state (0 if none)
        self.match_len: list[int] = [0]
        for pat in patterns:
            self._insert(tuple(pat))
        self._link()
        self._delta: dict[tuple[int, str], int] = {}

    def _insert(self, pat: tuple[str, ...]) -> None:
        state = 0
        for a in pat:
            nxt = self.goto[state].get(a)
            if nxt is None:
                nxt = len(self.goto)
                self.goto[state][a] = nxt
                self.goto.append({})
                self.fail.append(0)
                self.hit.append(False)
                self.match_len.append(0)
            state = nxt
        self.hit[state] = True
        self.match_len[state] = max(self.match_len[state], len(pat))

    def _link(self) -> None:
        queue = deque(self.goto[0].values())
        while queue:
            s = queue.popleft()
            for a, nxt in self.goto[s].items():
                queue.append(nxt)
                f = self.fail[s]
                while f and a not in self.goto[f]:
                    f = self.fail[f]
                cand = self.goto[f].get(a, 0)
                self.fail[nxt] = cand if cand != nxt else 0
                if self.hit[self.fail[nxt]]:
                    self.hit[nxt] = True
                    self.match_len[nxt] = max(self.match_len[nxt], self.match_len[self.fail[nxt]])

    @property
    def n_states(self) -> int:
        return len(self.goto)

    def step(self, state: int, a: str) -> int:
        key = (state, a)
        got = self._delta.get(key)
        if got is not None:
            return got
        s = state
        while s and a not in self.goto[s]:
            s = self.fail[s]
        res = self.goto[s].get(a, 0)
        self._delta[key] = res
        return res

    def run(self, word: Sequence[str], state: int = 0) -> tuple[int, bool]:
        """Feed ``word``; return the final state and whether any hit occurred."""
        for a in word:
            state = self.step(state, a)
            if self.hit[state]:
                return state, True
        return state, False

    def contains_match(self, word: Sequence[str]) -> bool:
        return self.run(word)[1]
