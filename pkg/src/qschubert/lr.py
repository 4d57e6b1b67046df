"""Littlewood-Richardson coefficients, classical Schubert products and kappa."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from qschubert import kernels
from qschubert.partitions import (
    GrassmannianContext,
    Partition,
    box_partitions,
    contains,
    fits_in_box,
    intersection,
    overlap_with_rotation,
    partition,
    partitions_of,
    rectangle,
    require_in_box,
    union,
)


@lru_cache(maxsize=1 << 20)
def _lr_cached(rho: Partition, lam: Partition, mu: Partition) -> int:
    return kernels.lr_coef(rho, lam, mu)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], rho: Sequence[int]) -> int:
    """c^rho_{lam, mu}: the number of semistandard fillings of ``rho / lam``
    with content ``mu`` whose reverse reading word is a lattice word."""
    return _lr_cached(partition(rho), partition(lam), partition(mu))


@lru_cache(maxsize=1 << 16)
def _product_cached(lam: Partition, mu: Partition, col_cap: int, row_cap: int) -> dict:
    return kernels.lr_mult(lam, mu, col_cap, row_cap)


def lr_product(lam: Sequence[int], mu: Sequence[int], max_part: int, max_length: int) -> dict[Partition, int]:
    """Every nonzero ``c^rho_{lam,mu}`` with ``rho_1 <= max_part`` and
    ``len(rho) <= max_length``. The returned dict must not be mutated."""
    return _product_cached(partition(lam), partition(mu), max_part, max_length)


@dataclass
class ClassicalExpansion:
    context: GrassmannianContext
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {nu: c for nu, c in self.terms.items() if c}
        for nu in self.terms:
            if not fits_in_box(nu, self.context):
                raise ValueError(f"term {nu} outside the {self.context.l}x{self.context.k} box")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, nu: Sequence[int]) -> int:
        return self.terms.get(partition(nu), 0)


def classical_product(lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext) -> ClassicalExpansion:
    """sigma_lam . sigma_mu in the cohomology of the Grassmannian."""
    lam, mu = partition(lam), partition(mu)
    require_in_box(ctx, lam=lam, mu=mu)
    return ClassicalExpansion(ctx, dict(lr_product(lam, mu, ctx.k, ctx.l)))


def product_nonzero(lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext) -> bool:
    """True iff ``lam`` and ``rotate(mu)`` share no cell."""
    return not overlap_with_rotation(lam, mu, ctx)


def kappa(alpha: Sequence[int], beta: Sequence[int], ctx: GrassmannianContext) -> Partition:
    """Intersection of all ``gamma`` in the box with ``c^gamma_{alpha,beta} != 0``.

    The full box when there is no such ``gamma``.
    """
    alpha, beta = partition(alpha), partition(beta)
    require_in_box(ctx, alpha=alpha, beta=beta)
    support = [
        gamma
        for gamma in partitions_of(sum(alpha) + sum(beta), ctx.k, ctx.l)
        if lr_coefficient(alpha, beta, gamma)
    ]
    if not support:
        return ctx.full
    return intersection(*support)


def kappa_rectangles_closed_form(m: int, M: int, n: int, N: int, ctx: GrassmannianContext) -> Partition:
    """kappa of two rectangles ``m x M`` and ``n x N`` as a union of four rectangles."""
    first, second = rectangle(m, M), rectangle(n, N)
    require_in_box(ctx, first=first, second=second)
    if not product_nonzero(first, second, ctx):
        return ctx.full
    pieces = [first, second]
    for rows, cols in ((m + n, M + N - ctx.k), (m + n - ctx.l, M + N)):
        if rows > 0 and cols > 0 and rows <= ctx.l and cols <= ctx.k:
            pieces.append(rectangle(rows, cols))
    return union(*pieces)


def triple_product_nonzero_bruteforce(
    lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], ctx: GrassmannianContext
) -> bool:
    """sigma_lam . sigma_mu . sigma_nu != 0, by searching for a witness ``rho``.

    Relies on nonnegativity of LR coefficients: the triple product is nonzero
    iff some ``rho`` in ``sigma_lam . sigma_mu`` pairs nontrivially with ``nu``.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    require_in_box(ctx, lam=lam, mu=mu, nu=nu)
    return any(product_nonzero(rho, nu, ctx) for rho in lr_product(lam, mu, ctx.k, ctx.l))


def classical_support_masks(ctx: GrassmannianContext) -> tuple[list[Partition], dict[tuple[Partition, Partition], int]]:
    """Box partitions and, per ordered pair, a bitmask of the classical product's support."""
    parts = box_partitions(ctx)
    index = {p: i for i, p in enumerate(parts)}
    masks = {}
    for lam in parts:
        for mu in parts:
            mask = 0
            for rho in lr_product(lam, mu, ctx.k, ctx.l):
                mask |= 1 << index[rho]
            masks[lam, mu] = mask
    return parts, masks


def down_set_mask(top: Sequence[int], parts: list[Partition]) -> int:
    """Bitmask of the partitions in ``parts`` contained in ``top``."""
    mask = 0
    for i, p in enumerate(parts):
        if contains(top, p):
            mask |= 1 << i
    return mask


def clear_caches() -> None:
    _lr_cached.cache_clear()
    _product_cached.cache_clear()
