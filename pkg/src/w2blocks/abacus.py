"""Partitions, beta-numbers and e-abacus displays.

Positions on an abacus are absolute non-negative integers; position ``p`` sits
on runner ``p % e`` in row ``p // e``.  A display with ``N`` beads of the
partition ``lam`` has a bead at ``lam[i] + N - 1 - i`` for ``0 <= i < N``
(``lam[i] = 0`` past its length).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator

from .errors import InvalidArgument


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  Tuple comparison coincides with the
    lexicographic order on partitions of the same size.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(x <= 0 for x in parts):
            raise InvalidArgument(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidArgument(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"3,1,1"``; the empty string is the empty partition."""
        text = text.strip().strip("[]()")
        if not text:
            return cls(())
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise InvalidArgument(f"not a partition literal: {text!r}") from exc


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


@dataclass(frozen=True)
class AbacusDisplay:
    e: int
    beads: frozenset

    @property
    def N(self) -> int:
        return len(self.beads)

    def __contains__(self, pos: int) -> bool:
        return pos in self.beads

    def occupied_between(self, lo: int, hi: int) -> int:
        """Beads strictly between positions ``lo`` and ``hi``."""
        lo, hi = min(lo, hi), max(lo, hi)
        return sum(1 for p in self.beads if lo < p < hi)

    def vacant_between(self, lo: int, hi: int) -> int:
        lo, hi = min(lo, hi), max(lo, hi)
        return max(hi - lo - 1, 0) - self.occupied_between(lo, hi)

    def runner_counts(self) -> list[int]:
        counts = [0] * self.e
        for p in self.beads:
            counts[p % self.e] += 1
        return counts

    def move(self, src: int, dst: int) -> AbacusDisplay:
        return AbacusDisplay(self.e, (self.beads - {src}) | {dst})

    def swap_runners(self, left: int) -> AbacusDisplay:
        """Interchange runners ``left`` and ``left + 1``."""
        e = self.e
        out = set()
        for p in self.beads:
            row, r = divmod(p, e)
            if r == left:
                r = left + 1
            elif r == left + 1:
                r = left
            out.add(row * e + r)
        return AbacusDisplay(e, frozenset(out))

    def to_json(self) -> dict:
        return {"e": self.e, "beads": sorted(self.beads)}

    def rows(self) -> str:
        """Text picture, one abacus row per line (``o`` bead, ``.`` gap)."""
        top = max(self.beads, default=-1) // self.e + 1
        return "\n".join(
            " ".join("o" if r * self.e + c in self.beads else "." for c in range(self.e))
            for r in range(top)
        )


@dataclass(frozen=True)
class HookMove:
    """A bead moving from ``source`` to ``target`` along its runner."""

    source: int
    target: int
    leg: int
    steps: int


def display(lam, e: int, N: int) -> AbacusDisplay:
    lam = as_partition(lam)
    if e < 2:
        raise InvalidArgument(f"e must be at least 2, got {e}")
    if N < len(lam):
        raise InvalidArgument(f"{N} beads cannot display {lam} with {len(lam)} parts")
    parts = list(lam) + [0] * (N - len(lam))
    return AbacusDisplay(e, frozenset(parts[i] + N - 1 - i for i in range(N)))


def partition_of(d: AbacusDisplay) -> Partition:
    beta = sorted(d.beads, reverse=True)
    N = len(beta)
    return Partition(beta[i] - (N - 1 - i) for i in range(N))


def e_core_and_weight(lam, e: int) -> tuple[Partition, int]:
    if e < 2:
        raise InvalidArgument(f"e must be at least 2, got {e}")
    return _core_and_weight(as_partition(lam), e)


@lru_cache(maxsize=1 << 18)
def _core_and_weight(lam: Partition, e: int) -> tuple[Partition, int]:
    d = display(lam, e, len(lam))
    counts = [0] * e
    weight = 0
    for p in d.beads:
        counts[p % e] += 1
        weight += p // e
    weight -= sum(c * (c - 1) // 2 for c in counts)
    core = {r + e * j for r in range(e) for j in range(counts[r])}
    return partition_of(AbacusDisplay(e, frozenset(core))), weight


def e_core(lam, e: int) -> Partition:
    return e_core_and_weight(lam, e)[0]


def e_weight(lam, e: int) -> int:
    return e_core_and_weight(lam, e)[1]


def is_e_core(lam, e: int) -> bool:
    return e_weight(lam, e) == 0


def relative_sign(lam, e: int) -> int:
    """(-1)^t, t the total leg length of the e-hooks stripped to reach the core."""
    lam = as_partition(lam)
    if e < 2:
        raise InvalidArgument(f"e must be at least 2, got {e}")
    d = display(lam, e, len(lam))
    t = 0
    while True:
        for p in sorted(d.beads):
            if p >= e and p - e not in d.beads:
                t += d.occupied_between(p - e, p)
                d = d.move(p, p - e)
                break
        else:
            return -1 if t % 2 else 1


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def is_e_regular(lam, e: int) -> bool:
    lam = as_partition(lam)
    if e < 2:
        raise InvalidArgument(f"e must be at least 2, got {e}")
    run = 1
    for i in range(1, len(lam)):
        run = run + 1 if lam[i] == lam[i - 1] else 1
        if run >= e:
            return False
    return True


def is_e_restricted(lam, e: int) -> bool:
    return is_e_regular(conjugate(lam), e)


def dominates(lam, mu) -> bool:
    """``lam`` dominates ``mu`` (reflexive)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise InvalidArgument(f"dominance needs equal sizes: {lam} vs {mu}")
    k = max(len(lam), len(mu))
    a = accumulate(list(lam) + [0] * (k - len(lam)))
    b = accumulate(list(mu) + [0] * (k - len(mu)))
    return all(x >= y for x, y in zip(a, b))


def strictly_dominates(lam, mu) -> bool:
    return as_partition(lam) != as_partition(mu) and dominates(lam, mu)


def lex_compare(lam, mu) -> int:
    """-1, 0 or 1 as ``lam`` is lexicographically below, equal to or above ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    return (lam > mu) - (lam < mu)


def up_moves(d: AbacusDisplay) -> list[tuple[HookMove, AbacusDisplay]]:
    out = []
    e = d.e
    for p in sorted(d.beads, reverse=True):
        for i in range(1, p // e + 1):
            q = p - i * e
            if q not in d.beads:
                out.append((HookMove(p, q, d.occupied_between(q, p), i), d.move(p, q)))
    return out


def down_moves(d: AbacusDisplay, max_steps: int = 1) -> list[tuple[HookMove, AbacusDisplay]]:
    """Moves of a bead down its runner by at most ``max_steps`` rows onto a gap."""
    out = []
    e = d.e
    for p in sorted(d.beads, reverse=True):
        for i in range(1, max_steps + 1):
            q = p + i * e
            if q not in d.beads:
                out.append((HookMove(p, q, d.occupied_between(p, q), i), d.move(p, q)))
    return out


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def e_cores(e: int, max_size: int) -> tuple[Partition, ...]:
    """e-cores of size at most ``max_size``: ascending size, then descending lex."""
    return tuple(
        lam for n in range(max_size + 1) for lam in partitions_of(n) if is_e_core(lam, e)
    )
