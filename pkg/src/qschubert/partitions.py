"""Partitions, Young-diagram geometry inside an ``l x k`` box, Frobenius notation.

Partitions are plain tuples of positive integers in weakly decreasing order
(``()`` is the empty partition). Cells are 1-based ``(row, column)`` pairs in
English convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
Cell = tuple[int, int]

EMPTY_TEXT = "-"


class PartitionError(ValueError):
    """Malformed partition input."""


class BoxError(ValueError):
    """A partition does not fit in the ambient ``l x k`` rectangle."""


@dataclass(frozen=True)
class GrassmannianContext:
    """The Grassmannian ``Gr(l, C^(l+k))``, encoded by its ``l x k`` box."""

    l: int
    k: int

    def __post_init__(self) -> None:
        if self.l < 1 or self.k < 1:
            raise ValueError(f"box dimensions must be positive, got l={self.l}, k={self.k}")

    @property
    def n(self) -> int:
        return self.l + self.k

    @property
    def full(self) -> Partition:
        return (self.k,) * self.l

    def __str__(self) -> str:
        return f"l={self.l},k={self.k}"


class FrobeniusCoordinates(NamedTuple):
    alpha: tuple[int, ...]
    beta: tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a canonical partition, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise PartitionError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise PartitionError(f"parts not weakly decreasing: {p}")
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return p[:end]


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"`` or ``"-"``. Whitespace is rejected."""
    if text == EMPTY_TEXT:
        return ()
    if not text or any(ch.isspace() for ch in text):
        raise PartitionError(f"malformed partition {text!r}")
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise PartitionError(f"malformed partition {text!r}") from None
    if any(x <= 0 for x in parts) or any(tok.strip("0123456789") for tok in text.split(",")):
        raise PartitionError(f"parts must be positive integers: {text!r}")
    try:
        return partition(parts)
    except PartitionError:
        raise PartitionError(f"parts not weakly decreasing: {text!r}") from None


def format_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p)) if p else EMPTY_TEXT


def size(p: Sequence[int]) -> int:
    return sum(p)


def part(p: Sequence[int], i: int) -> int:
    """1-based part access with zero padding."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff the diagram of ``inner`` is a subset of that of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def cells(p: Sequence[int]) -> set[Cell]:
    return {(i + 1, j + 1) for i, row in enumerate(p) for j in range(row)}


def rectangle(rows: int, cols: int) -> Partition:
    """The ``rows x cols`` rectangle; empty when either dimension is nonpositive."""
    if rows <= 0 or cols <= 0:
        return ()
    return (cols,) * rows


def union(*ps: Sequence[int]) -> Partition:
    length = max((len(p) for p in ps), default=0)
    return partition(max(part(p, i) for p in ps) for i in range(1, length + 1))


def intersection(*ps: Sequence[int]) -> Partition:
    if not ps:
        raise ValueError("intersection of no partitions")
    length = min(len(p) for p in ps)
    return partition(min(p[i] for p in ps) for i in range(length))


def fits_in_box(p: Sequence[int], ctx: GrassmannianContext) -> bool:
    return len(p) <= ctx.l and (not p or p[0] <= ctx.k)


def require_in_box(ctx: GrassmannianContext, **named: Sequence[int]) -> None:
    for name, p in named.items():
        if not fits_in_box(p, ctx):
            raise BoxError(f"{name}={format_partition(p)} does not fit in the {ctx.l}x{ctx.k} box")


def complement(p: Sequence[int], ctx: GrassmannianContext) -> Partition:
    """``(k - p_l, ..., k - p_1)``."""
    require_in_box(ctx, p=p)
    return partition(ctx.k - part(p, ctx.l + 1 - i) for i in range(1, ctx.l + 1))


def rotate(mu: Sequence[int], ctx: GrassmannianContext) -> set[Cell]:
    """Cells of ``mu`` turned 180 degrees into the lower right corner of the box."""
    require_in_box(ctx, mu=mu)
    return {(ctx.l + 1 - i, ctx.k + 1 - j) for i, j in cells(mu)}


def overlap_with_rotation(
    lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext
) -> set[Cell]:
    require_in_box(ctx, lam=lam, mu=mu)
    return {
        (i, j)
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
        if j > ctx.k - part(mu, ctx.l + 1 - i)
    }


def largest_square_in_overlap(
    lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext
) -> int:
    """Side of the largest square of cells inside ``lam`` intersected with ``rotate(mu)``."""
    region = overlap_with_rotation(lam, mu, ctx)
    # side[(i, j)]: largest square with lower-right corner at (i, j)
    side: dict[Cell, int] = {}
    best = 0
    for i, j in sorted(region):
        s = 1 + min(side.get((i - 1, j), 0), side.get((i, j - 1), 0), side.get((i - 1, j - 1), 0))
        side[(i, j)] = s
        best = max(best, s)
    return best


def durfee(p: Sequence[int]) -> int:
    d = 0
    while d < len(p) and p[d] >= d + 1:
        d += 1
    return d


def to_frobenius(p: Sequence[int]) -> FrobeniusCoordinates:
    t = durfee(p)
    pc = conjugate(p)
    return FrobeniusCoordinates(
        tuple(p[i] - i - 1 for i in range(t)), tuple(pc[i] - i - 1 for i in range(t))
    )


def from_frobenius(f: FrobeniusCoordinates | tuple[Sequence[int], Sequence[int]]) -> Partition:
    alpha, beta = (tuple(x) for x in f)
    if len(alpha) != len(beta):
        raise PartitionError(f"arm and leg sequences differ in length: {alpha} | {beta}")
    for seq in (alpha, beta):
        if any(x < 0 for x in seq) or any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
            raise PartitionError(f"Frobenius coordinates must strictly decrease: {alpha} | {beta}")
    t = len(alpha)
    if t == 0:
        return ()
    # rows 1..t from arms; rows below the diagonal from the legs
    rows = [alpha[i] + i + 1 for i in range(t)]
    below = [0] * (beta[0] + 1)
    for j in range(t):
        for r in range(j + 1, j + beta[j] + 1):
            below[r] += 1
    rows.extend(below[r] for r in range(t, beta[0] + 1))
    return partition(rows)


def hook_class(a: int, b: int) -> Partition:
    """The hook ``(a | b)``, i.e. ``(a + 1, 1^b)``."""
    if a < 0 or b < 0:
        raise PartitionError(f"hook arm and leg must be nonnegative, got ({a}|{b})")
    return (a + 1,) + (1,) * b


def partitions_of(
    total: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """Partitions of exactly ``total`` in lexicographically descending order."""
    if total < 0:
        return
    if max_part is None:
        max_part = total
    if max_length is None:
        max_length = total

    def rec(rest: int, cap: int, slots: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        if slots == 0 or rest > cap * slots:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(total, max_part, max_length)


def enumerate_partitions(
    max_size: int, max_part: int, max_length: int, exact: bool = False
) -> Iterator[Partition]:
    """Partitions with size at most ``max_size`` (or exactly, with ``exact``).

    Ordered by size ascending, then lexicographically descending within a size.
    """
    if exact:
        yield from partitions_of(max_size, max_part, max_length)
        return
    for s in range(0, max_size + 1):
        yield from partitions_of(s, max_part, max_length)


def box_partitions(ctx: GrassmannianContext) -> list[Partition]:
    """All partitions inside the ``l x k`` box, in canonical order."""
    return list(enumerate_partitions(ctx.l * ctx.k, ctx.k, ctx.l))
