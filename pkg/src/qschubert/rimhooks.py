"""Rim hooks, n-cores, removal counts and the sign of a rim-hook reduction.

Two independent routes to the n-core are kept: explicit removal of legal rim
hooks (which also yields hook widths) and the beta-number abacus in
``kernels.core_sign``. Each checks the other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from qschubert import kernels
from qschubert.partitions import Cell, GrassmannianContext, Partition, cells, partition


@dataclass(frozen=True)
class RimHook:
    cells: tuple[Cell, ...]

    @property
    def head(self) -> Cell:
        """Topmost, then leftmost, cell."""
        return self.cells[0]

    @property
    def width(self) -> int:
        return len({j for _, j in self.cells})

    @property
    def height(self) -> int:
        return len({i for i, _ in self.cells})

    def __len__(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class RimHookTrace:
    source: Partition
    n: int
    removed: tuple[RimHook, ...]
    core: Partition

    @property
    def r(self) -> int:
        return len(self.removed)

    @property
    def widths(self) -> list[int]:
        return [h.width for h in self.removed]


def _shape_from_cells(remaining: set[Cell]) -> Partition | None:
    """The partition whose diagram is ``remaining``, or None if it is not one."""
    rows: dict[int, int] = {}
    for i, _ in remaining:
        rows[i] = rows.get(i, 0) + 1
    p = tuple(rows.get(i, 0) for i in range(1, len(rows) + 1))
    if any(x == 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        return None
    if cells(p) != remaining:
        return None
    return p


@lru_cache(maxsize=1 << 16)
def _legal_hooks(p: Partition, n: int) -> tuple[tuple[RimHook, Partition], ...]:
    diagram = cells(p)
    # rim cells have pairwise distinct contents j - i forming an interval,
    # so a connected strip of rim cells is a run of consecutive contents
    rim = sorted(
        ((j - i, (i, j)) for i, j in diagram if (i + 1, j + 1) not in diagram), reverse=True
    )
    found = []
    for start in range(len(rim) - n + 1):
        segment = [c for _, c in rim[start : start + n]]
        if rim[start][0] - rim[start + n - 1][0] != n - 1:
            continue
        rest = _shape_from_cells(diagram - set(segment))
        if rest is None:
            continue
        found.append((RimHook(tuple(sorted(segment))), rest))
    found.sort(key=lambda item: item[0].head)
    return tuple(found)


def legal_rim_hooks(p: Sequence[int], n: int) -> list[RimHook]:
    """All n-rim hooks of ``p`` whose removal leaves a partition, ordered by head."""
    if n < 1:
        raise ValueError(f"rim hook size must be positive, got {n}")
    return [hook for hook, _ in _legal_hooks(partition(p), n)]


def n_core(p: Sequence[int], n: int, rng: random.Random | None = None) -> RimHookTrace:
    """Remove legal n-rim hooks until none is left.

    With ``rng`` the hook removed at each step is chosen at random instead of
    the canonical smallest head.
    """
    if n < 2:
        raise ValueError(f"n-core needs n >= 2, got {n}")
    source = current = partition(p)
    removed = []
    while True:
        options = _legal_hooks(current, n)
        if not options:
            break
        hook, current = options[0] if rng is None else rng.choice(options)
        removed.append(hook)
    return RimHookTrace(source, n, tuple(removed), current)


def r_n(p: Sequence[int], n: int) -> int:
    return n_core(p, n).r


def sign_from_widths(widths: Sequence[int], k: int) -> int:
    return -1 if sum(k - w for w in widths) % 2 else 1


def epsilon(p: Sequence[int], n: int, ctx: GrassmannianContext) -> int:
    """(-1)^(sum of k - width over the removed hooks)."""
    if n != ctx.n:
        raise ValueError(f"n={n} does not match l+k={ctx.n}")
    return sign_from_widths(n_core(p, n).widths, ctx.k)


def core_via_abacus(p: Sequence[int], n: int) -> tuple[Partition, int, int]:
    """``(core, r, leg parity)`` from the beta-number kernel."""
    return kernels.core_sign(partition(p), n)


def epsilon_via_abacus(p: Sequence[int], ctx: GrassmannianContext) -> int:
    """Same sign as ``epsilon``, from leg lengths: ``k - width = leg - l``."""
    _, r, parity = kernels.core_sign(partition(p), ctx.n)
    return -1 if (parity + r * ctx.l) % 2 else 1


def first_column_hooks(p: Sequence[int]) -> list[int]:
    """Hook lengths down the first column (beta-numbers of length ``len(p)``)."""
    m = len(p)
    return [p[i] + m - 1 - i for i in range(m)]


def beta_residue_profile(p: Sequence[int], n: int, length: int) -> list[int]:
    """Count of beta-numbers in each residue class mod ``n``, padded to ``length`` beads."""
    p = tuple(p) + (0,) * (length - len(p))
    counts = [0] * n
    for h in first_column_hooks(p):
        counts[h % n] += 1
    return counts
