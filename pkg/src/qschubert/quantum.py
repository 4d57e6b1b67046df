"""Small quantum cohomology of the Grassmannian via the rim-hook rule.

``sigma_lam * sigma_mu`` is obtained from the ordinary LR expansion of
``s_lam s_mu`` restricted to shapes with at most ``k`` columns: each such
``rho`` contributes ``eps(rho) * c * q^r`` to ``sigma_core`` when its n-core
fits in the ``l x k`` box.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from qschubert import kernels
from qschubert.lr import classical_product, lr_product
from qschubert.partitions import (
    GrassmannianContext,
    Partition,
    complement,
    fits_in_box,
    format_partition,
    hook_class,
    partition,
    require_in_box,
    to_frobenius,
)

log = logging.getLogger(__name__)

Term = tuple[int, Partition]


class PositivityError(ArithmeticError):
    """A Gromov-Witten invariant came out negative."""


class QuantumExpansion:
    """A ``Z[q]``-linear combination of Schubert classes, ``{(d, nu): coeff}``."""

    __slots__ = ("context", "terms")

    def __init__(self, context: GrassmannianContext, terms: Mapping[Term, int] | Iterable[tuple[Term, int]] = ()):
        self.context = context
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Term, int] = {}
        for (d, nu), c in items:
            nu = partition(nu)
            if d < 0:
                raise ValueError(f"negative q-degree {d}")
            if not fits_in_box(nu, context):
                raise ValueError(f"sigma[{format_partition(nu)}] outside the {context.l}x{context.k} box")
            collected[d, nu] = collected.get((d, nu), 0) + c
        self.terms = {key: c for key, c in sorted(collected.items()) if c}

    @classmethod
    def schubert(cls, nu: Sequence[int], context: GrassmannianContext, d: int = 0) -> "QuantumExpansion":
        return cls(context, {(d, partition(nu)): 1})

    @classmethod
    def one(cls, context: GrassmannianContext) -> "QuantumExpansion":
        return cls.schubert((), context)

    def _check(self, other: "QuantumExpansion") -> None:
        if self.context != other.context:
            raise ValueError(f"context mismatch: {self.context} vs {other.context}")

    def __add__(self, other: "QuantumExpansion") -> "QuantumExpansion":
        self._check(other)
        return QuantumExpansion(self.context, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> "QuantumExpansion":
        return QuantumExpansion(self.context, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "QuantumExpansion") -> "QuantumExpansion":
        return self + (-other)

    def scale(self, factor: int) -> "QuantumExpansion":
        return QuantumExpansion(self.context, {key: factor * c for key, c in self.terms.items()})

    def __mul__(self, other: "QuantumExpansion") -> "QuantumExpansion":
        self._check(other)
        out: dict[Term, int] = {}
        for (d1, a), c1 in self.terms.items():
            for (d2, b), c2 in other.terms.items():
                for (d, nu), c in _basis_product(a, b, self.context).items():
                    key = (d + d1 + d2, nu)
                    out[key] = out.get(key, 0) + c * c1 * c2
        return QuantumExpansion(self.context, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuantumExpansion):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.context, tuple(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Term, int]]:
        return iter(self.terms.items())

    def coefficient(self, d: int, nu: Sequence[int]) -> int:
        return self.terms.get((d, partition(nu)), 0)

    def degrees(self) -> list[int]:
        return sorted({d for d, _ in self.terms})

    def at_q_zero(self) -> dict[Partition, int]:
        return {nu: c for (d, nu), c in self.terms.items() if d == 0}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*q^{d}*s[{format_partition(nu)}]" for (d, nu), c in self.terms.items())


@lru_cache(maxsize=1 << 16)
def _basis_product(lam: Partition, mu: Partition, ctx: GrassmannianContext) -> dict[Term, int]:
    n, k, l = ctx.n, ctx.k, ctx.l
    out: dict[Term, int] = {}
    for rho, c in lr_product(lam, mu, k, len(lam) + len(mu)).items():
        core, r, leg_parity = kernels.core_sign(rho, n)
        if len(core) > l:
            continue
        # k - width(R) = leg(R) - l for an n-rim hook
        sign = -1 if (leg_parity + r * l) % 2 else 1
        out[r, core] = out.get((r, core), 0) + sign * c
    return {key: c for key, c in sorted(out.items()) if c}


def rim_hook_terms(lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext) -> list[tuple[Partition, int, int, Partition, int]]:
    """The uncancelled right-hand side: ``(rho, c, r, core, sign)`` for every
    ``rho`` with ``rho_1 <= k`` and nonzero LR coefficient, in canonical order."""
    lam, mu = partition(lam), partition(mu)
    require_in_box(ctx, lam=lam, mu=mu)
    rows = []
    for rho, c in sorted(lr_product(lam, mu, ctx.k, len(lam) + len(mu)).items(), reverse=True):
        core, r, leg_parity = kernels.core_sign(rho, ctx.n)
        sign = -1 if (leg_parity + r * ctx.l) % 2 else 1
        rows.append((rho, c, r, core, sign))
    return rows


def quantum_product_basis(lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext) -> QuantumExpansion:
    """sigma_lam * sigma_mu in QH*(Gr(l, l+k))."""
    lam, mu = partition(lam), partition(mu)
    require_in_box(ctx, lam=lam, mu=mu)
    return QuantumExpansion(ctx, _basis_product(lam, mu, ctx))


def ring_add(x: QuantumExpansion, y: QuantumExpansion) -> QuantumExpansion:
    return x + y


def ring_multiply(x: QuantumExpansion, y: QuantumExpansion) -> QuantumExpansion:
    return x * y


def gw_invariant(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], d: int, ctx: GrassmannianContext) -> int:
    """Three-point genus-zero invariant ``<lam, mu, nu>_d``: the coefficient of
    ``q^d sigma_{nu^vee}`` in ``sigma_lam * sigma_mu``."""
    nu = partition(nu)
    require_in_box(ctx, nu=nu)
    value = quantum_product_basis(lam, mu, ctx).coefficient(d, complement(nu, ctx))
    if value < 0:
        raise PositivityError(
            f"<{format_partition(lam)},{format_partition(mu)},{format_partition(nu)}>_{d} = {value} in {ctx}"
        )
    return value


def occurring_degrees(lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext) -> list[int]:
    return quantum_product_basis(lam, mu, ctx).degrees()


def d_min(lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext) -> int | None:
    """Smallest q-degree in the product; None if the product vanishes."""
    degrees = occurring_degrees(lam, mu, ctx)
    if not degrees:
        log.warning("vanishing quantum product %s * %s in %s", lam, mu, ctx)
        return None
    return degrees[0]


def d_max(lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext) -> int | None:
    degrees = occurring_degrees(lam, mu, ctx)
    if not degrees:
        log.warning("vanishing quantum product %s * %s in %s", lam, mu, ctx)
        return None
    return degrees[-1]


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def giambelli_determinant(lam: Sequence[int], ctx: GrassmannianContext) -> QuantumExpansion:
    """``det(sigma_{(alpha_i | beta_j)})`` expanded over permutations in the quantum ring."""
    lam = partition(lam)
    require_in_box(ctx, lam=lam)
    alpha, beta = to_frobenius(lam)
    t = len(alpha)
    total = QuantumExpansion(ctx)
    for perm in itertools.permutations(range(t)):
        term = QuantumExpansion.one(ctx)
        for i in range(t):
            term = term * QuantumExpansion.schubert(hook_class(alpha[i], beta[perm[i]]), ctx)
        total = total + term.scale(_permutation_sign(perm))
    return total


def quantum_giambelli_check(lam: Sequence[int], ctx: GrassmannianContext) -> bool:
    return giambelli_determinant(lam, ctx) == QuantumExpansion.schubert(lam, ctx)


def classical_terms(lam: Sequence[int], mu: Sequence[int], ctx: GrassmannianContext) -> dict[Partition, int]:
    """The classical product as a plain dict, for comparison with ``at_q_zero``."""
    return dict(classical_product(lam, mu, ctx).terms)


def clear_caches() -> None:
    _basis_product.cache_clear()
