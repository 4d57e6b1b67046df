"""Exhaustive verification sweeps over small Grassmannians.

Every suite is a list of canonically ordered cases plus a per-case check.
Checks run serially or in a process pool; results are merged back in case
order, so reports do not depend on the worker count.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache, partial
from typing import Any, Callable, Iterable, Sequence

from qschubert.lr import (
    classical_support_masks,
    down_set_mask,
    kappa,
    kappa_rectangles_closed_form,
    lr_product,
    triple_product_nonzero_bruteforce,
)
from qschubert.partitions import (
    GrassmannianContext,
    Partition,
    box_partitions,
    complement,
    contains,
    durfee,
    format_partition,
    largest_square_in_overlap,
    partitions_of,
    rectangle,
    rotate,
    cells,
)
from qschubert.quantum import (
    QuantumExpansion,
    classical_terms,
    quantum_giambelli_check,
    quantum_product_basis,
    rim_hook_terms,
)
from qschubert.rimhooks import (
    beta_residue_profile,
    core_via_abacus,
    epsilon_via_abacus,
    n_core,
    sign_from_widths,
)

SCHEMA = "qschubert/1"

Case = tuple
Outcome = tuple[dict | None, dict[str, int] | None]


@dataclass
class VerificationReport:
    suite: str
    l: int | None
    k: int | None
    cases: int
    counterexamples: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    expected_cases: int | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self, timing: bool = True) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        if not timing:
            out.pop("elapsed_ms")
        return out

    def summary(self) -> str:
        box = "-" if self.l is None else f"{self.l}x{self.k}"
        verdict = "PASS" if self.passed else f"FAIL ({len(self.counterexamples)} counterexamples)"
        return f"{self.suite:<14} {box:<5} cases={self.cases:<8} {verdict:<28} {self.elapsed_ms:9.1f} ms"


def pair_id(ctx: GrassmannianContext, *named: tuple[str, Sequence[int]]) -> str:
    return ";".join([f"l={ctx.l},k={ctx.k}"] + [f"{name}={format_partition(p)}" for name, p in named])


def _pairs(ctx: GrassmannianContext) -> list[Case]:
    parts = box_partitions(ctx)
    return [(lam, mu) for lam in parts for mu in parts]


def _pair_count(ctx: GrassmannianContext) -> int:
    return math.comb(ctx.n, ctx.l) ** 2


# -- product-level suites ---------------------------------------------------


def _check_no_cancel(ctx: GrassmannianContext, case: Case) -> Outcome:
    """Smallest r over rho feeding the rim-hook sum (core inside the box) is d_min."""
    lam, mu = case
    terms = rim_hook_terms(lam, mu, ctx)
    contributing = [r for _, _, r, core, _ in terms if len(core) <= ctx.l]
    if not contributing:
        return None, {"vacuous": 1}
    smallest = min(contributing)
    degrees = quantum_product_basis(lam, mu, ctx).degrees()
    # rho whose core leaves the box never enter the sum, but can have smaller r
    tally = {"outside_core_has_smaller_r": int(min(r for _, _, r, _, _ in terms) < smallest)}
    if not degrees or degrees[0] != smallest:
        return {
            "case": pair_id(ctx, ("lam", lam), ("mu", mu)),
            "min_r": smallest,
            "d_min": degrees[0] if degrees else None,
        }, tally
    return None, tally


def _check_dmin(ctx: GrassmannianContext, case: Case) -> Outcome:
    lam, mu = case
    degrees = quantum_product_basis(lam, mu, ctx).degrees()
    square = largest_square_in_overlap(lam, mu, ctx)
    if not degrees:
        return {"case": pair_id(ctx, ("lam", lam), ("mu", mu)), "d_min": None, "square": square}, {"vanishing": 1}
    if degrees[0] != square:
        return {"case": pair_id(ctx, ("lam", lam), ("mu", mu)), "d_min": degrees[0], "square": square}, None
    return None, None


def _check_cor_rect(ctx: GrassmannianContext, case: Case) -> Outcome:
    lam, mu = case
    square = largest_square_in_overlap(lam, mu, ctx)
    required = rectangle(ctx.l + square, square)
    bad = [
        format_partition(rho)
        for rho in sorted(lr_product(lam, mu, ctx.k, len(lam) + len(mu)), reverse=True)
        if not contains(rho, required)
    ]
    if bad:
        return {"case": pair_id(ctx, ("lam", lam), ("mu", mu)), "square": square, "rho": bad}, None
    return None, None


def _check_dmax(ctx: GrassmannianContext, case: Case) -> Outcome:
    lam, mu = case
    degrees = quantum_product_basis(lam, mu, ctx).degrees()
    if not degrees:
        return None, {"vanishing": 1}
    bound = min(durfee(lam), durfee(mu))
    obvious = (sum(lam) + sum(mu)) // ctx.n
    tally = {"sharper_than_size_bound": int(bound < obvious), "tight": int(degrees[-1] == bound)}
    if degrees[-1] > bound:
        return {"case": pair_id(ctx, ("lam", lam), ("mu", mu)), "d_max": degrees[-1], "bound": bound}, tally
    return None, tally


def _check_interval(ctx: GrassmannianContext, case: Case) -> Outcome:
    lam, mu = case
    degrees = quantum_product_basis(lam, mu, ctx).degrees()
    if not degrees:
        return None, {"vanishing": 1}
    if degrees != list(range(degrees[0], degrees[-1] + 1)):
        return {"case": pair_id(ctx, ("lam", lam), ("mu", mu)), "degrees": degrees}, None
    return None, {"multi_degree": int(len(degrees) > 1)}


def _check_descent(ctx: GrassmannianContext, case: Case) -> Outcome:
    """If q^d sigma_nu (d >= 1) occurs, then some q^(d-1) sigma_alpha with
    alpha >= nu occurs, or no term of degree below d occurs at all.

    Shapes index the Schubert classes of the product, i.e. ``nu`` here is the
    complement of the third point of the invariant. Indexing by the third
    point itself with ``alpha >= nu`` is ruled out by the grading
    (``|alpha| = |nu| - n``); ``literal_reading_failures`` counts how often
    that reading fails.
    """
    lam, mu = case
    terms = quantum_product_basis(lam, mu, ctx).terms
    lowest = min((d for d, _ in terms), default=0)
    failures = []
    tally = {"terms_checked": 0, "literal_reading_failures": 0}
    for (d, nu), c in terms.items():
        if d < 1:
            continue
        tally["terms_checked"] += 1
        lower_exists = lowest < d
        third = complement(nu, ctx)
        if lower_exists and not any(j == d - 1 and contains(complement(a, ctx), third) for j, a in terms):
            tally["literal_reading_failures"] += 1
        if any(j == d - 1 and contains(alpha, nu) for j, alpha in terms):
            continue
        if not lower_exists:
            continue
        failures.append({"d": d, "nu": format_partition(nu), "coefficient": c})
    if failures:
        return {"case": pair_id(ctx, ("lam", lam), ("mu", mu)), "failures": failures}, tally
    return None, tally


def _check_ring_axioms(ctx: GrassmannianContext, case: Case) -> Outcome:
    kind = case[0]
    if kind == "pair":
        _, lam, mu = case
        product = quantum_product_basis(lam, mu, ctx)
        problems = []
        if product != quantum_product_basis(mu, lam, ctx):
            problems.append("commutativity")
        if product.at_q_zero() != classical_terms(lam, mu, ctx):
            problems.append("q=0 specialization")
        if any(c < 0 for _, c in product):
            problems.append("positivity")
        if any(sum(nu) + d * ctx.n != sum(lam) + sum(mu) for (d, nu), _ in product):
            problems.append("grading")
        if problems:
            return {"case": pair_id(ctx, ("lam", lam), ("mu", mu)), "violated": problems}, None
        return None, {"pairs": 1}
    _, lam, mu, nu = case
    s = lambda p: QuantumExpansion.schubert(p, ctx)  # noqa: E731
    left = (s(lam) * s(mu)) * s(nu)
    right = s(lam) * (s(mu) * s(nu))
    if left != right:
        return {"case": pair_id(ctx, ("lam", lam), ("mu", mu), ("nu", nu)), "violated": ["associativity"]}, None
    if any(c < 0 for _, c in left):
        return {"case": pair_id(ctx, ("lam", lam), ("mu", mu), ("nu", nu)), "violated": ["positivity"]}, None
    return None, {"triples": 1}


def _ring_cases(ctx: GrassmannianContext, exhaustive_max_n: int = 5, random_triples: int = 1000, seed: int = 0) -> list[Case]:
    parts = box_partitions(ctx)
    cases: list[Case] = [("pair", lam, mu) for lam in parts for mu in parts]
    if ctx.n <= exhaustive_max_n:
        cases += [("triple",) + t for t in itertools.product(parts, repeat=3)]
    else:
        rng = random.Random(f"{seed}:{ctx.l}:{ctx.k}")
        cases += [("triple", rng.choice(parts), rng.choice(parts), rng.choice(parts)) for _ in range(random_triples)]
    return cases


# -- rectangle suites --------------------------------------------------------


def _conditions(ctx: GrassmannianContext, a, A, b, B, c, C) -> dict[str, bool]:
    l, k = ctx.l, ctx.k
    return {
        "i": a + b <= l or A + B <= k,
        "ii": a + c <= l or A + C <= k,
        "iii": b + c <= l or B + C <= k,
        "iv": a + b + c <= l or A + B + C <= 2 * k,
        "v": a + b + c <= 2 * l or A + B + C <= k,
    }


@lru_cache(maxsize=64)
def _support_tables(ctx: GrassmannianContext):
    parts, masks = classical_support_masks(ctx)
    downs = {nu: down_set_mask(complement(nu, ctx), parts) for nu in parts}
    return parts, masks, downs


@lru_cache(maxsize=4096)
def _reachable(ctx: GrassmannianContext, first: Partition, second: Partition) -> int:
    """Union of supports of sigma_lam . sigma_mu over lam >= first, mu >= second."""
    parts, masks, _ = _support_tables(ctx)
    mask = 0
    for lam in parts:
        if contains(lam, first):
            for mu in parts:
                if contains(mu, second):
                    mask |= masks[lam, mu]
    return mask


def condition_one(ctx: GrassmannianContext, first: Partition, second: Partition, third: Partition) -> bool:
    """Some lam, mu, nu containing the three shapes have sigma_lam sigma_mu sigma_nu != 0."""
    parts, _, downs = _support_tables(ctx)
    reach = _reachable(ctx, first, second)
    return any(reach & downs[nu] for nu in parts if contains(nu, third))


def _check_triple(ctx: GrassmannianContext, case: Case) -> Outcome:
    a, A, b, B, c, C = case
    r1, r2, r3 = rectangle(a, A), rectangle(b, B), rectangle(c, C)
    conds = _conditions(ctx, a, A, b, B, c, C)
    three = all(conds.values())
    two = triple_product_nonzero_bruteforce(r1, r2, r3, ctx)
    one = condition_one(ctx, r1, r2, r3)
    tally = {"nonzero": int(two)}
    if not (one == two == three):
        return {
            "case": f"l={ctx.l},k={ctx.k};rects={a}x{A},{b}x{B},{c}x{C}",
            "I": one,
            "II": two,
            "III": three,
            "conditions": conds,
        }, tally
    return None, tally


def _triple_cases(ctx: GrassmannianContext) -> list[Case]:
    dims = [(r, c) for r in range(ctx.l + 1) for c in range(ctx.k + 1)]
    return [x + y + z for x in dims for y in dims for z in dims]


@lru_cache(maxsize=1 << 14)
def _kappa(ctx: GrassmannianContext, alpha: Partition, beta: Partition) -> Partition:
    return kappa(alpha, beta, ctx)


def _check_kappa(ctx: GrassmannianContext, case: Case) -> Outcome:
    kind = case[0]
    if kind == "rotation":
        _, alpha, beta, m, M = case
        rect = rectangle(m, M)
        lhs = triple_product_nonzero_bruteforce(alpha, beta, rect, ctx)
        rhs = not (cells(_kappa(ctx, alpha, beta)) & rotate(rect, ctx))
        if lhs != rhs:
            return {
                "case": pair_id(ctx, ("alpha", alpha), ("beta", beta)) + f";rect={m}x{M}",
                "check": "rotation",
                "product_nonzero": lhs,
                "kappa_disjoint": rhs,
            }, None
        return None, {"rotation": 1}
    if kind == "monotone":
        _, alpha, beta, lam, mu = case
        small, big = _kappa(ctx, alpha, beta), _kappa(ctx, lam, mu)
        if not contains(big, small):
            return {
                "case": pair_id(ctx, ("alpha", alpha), ("beta", beta), ("lam", lam), ("mu", mu)),
                "check": "monotone",
                "kappa_small": format_partition(small),
                "kappa_big": format_partition(big),
            }, None
        return None, {"monotone": 1}
    _, m, M, n, N = case
    closed = kappa_rectangles_closed_form(m, M, n, N, ctx)
    brute = _kappa(ctx, rectangle(m, M), rectangle(n, N))
    if closed != brute:
        return {
            "case": f"l={ctx.l},k={ctx.k};rects={m}x{M},{n}x{N}",
            "check": "closed-form",
            "closed_form": format_partition(closed),
            "brute_force": format_partition(brute),
        }, None
    return None, {"closed-form": 1}


def _kappa_cases(ctx: GrassmannianContext, general_max_side: int = 3) -> list[Case]:
    dims = [(r, c) for r in range(ctx.l + 1) for c in range(ctx.k + 1)]
    cases: list[Case] = []
    if max(ctx.l, ctx.k) <= general_max_side:
        parts = box_partitions(ctx)
        cases += [
            ("rotation", alpha, beta, m, M)
            for alpha in parts
            for beta in parts
            for m in range(1, ctx.l + 1)
            for M in range(1, ctx.k + 1)
        ]
        below = [(small, big) for big in parts for small in parts if contains(big, small)]
        cases += [("monotone", alpha, beta, lam, mu) for alpha, lam in below for beta, mu in below]
    cases += [("closed-form",) + x + y for x in dims for y in dims]
    return cases


def _check_giambelli(ctx: GrassmannianContext, case: Case) -> Outcome:
    (lam,) = case
    if not quantum_giambelli_check(lam, ctx):
        return {"case": pair_id(ctx, ("lam", lam))}, None
    return None, None


# -- rim-hook suite (context free) ------------------------------------------


def _check_core_orders(orders: int, seed: int, case: Case) -> Outcome:
    p, n = case
    canonical = n_core(p, n)
    splits = [(l, n - l) for l in range(1, n)]
    signs = {lk: sign_from_widths(canonical.widths, lk[1]) for lk in splits}
    problems = []
    rng = random.Random(f"{seed}:{format_partition(p)}:{n}")
    for _ in range(orders):
        trace = n_core(p, n, rng=rng)
        if trace.core != canonical.core or trace.r != canonical.r:
            problems.append(f"core/r differ: {format_partition(trace.core)}/{trace.r}")
            break
        if any(sign_from_widths(trace.widths, k) != signs[(l, k)] for l, k in splits):
            problems.append(f"sign differs for widths {trace.widths}")
            break
    core, r, _ = core_via_abacus(p, n)
    if (core, r) != (canonical.core, canonical.r):
        problems.append(f"abacus core {format_partition(core)}/{r}")
    if beta_residue_profile(p, n, len(p)) != beta_residue_profile(canonical.core, n, len(p)):
        problems.append("beta-number residues differ")
    for l, k in splits:
        if epsilon_via_abacus(p, GrassmannianContext(l, k)) != signs[(l, k)]:
            problems.append(f"abacus sign differs for l={l},k={k}")
    if sum(p) != sum(canonical.core) + n * canonical.r:
        problems.append("size bookkeeping")
    if problems:
        return {"case": f"n={n};rho={format_partition(p)}", "problems": problems}, None
    return None, {"removals": canonical.r}


def core_order_cases(max_size: int = 14, ns: Iterable[int] = range(2, 7)) -> list[Case]:
    return [(p, n) for n in ns for s in range(max_size + 1) for p in partitions_of(s)]


# -- registry and driver ----------------------------------------------------


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable[[GrassmannianContext, Case], Outcome]
    cases: Callable[..., list[Case]]
    kind: str  # "product", "rectangle", "giambelli", "core"
    expected: Callable[[GrassmannianContext], int] | None = None


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("thm-no-cancel", _check_no_cancel, _pairs, "product", _pair_count),
        Suite("thm-dmin", _check_dmin, _pairs, "product", _pair_count),
        Suite("cor-rect", _check_cor_rect, _pairs, "product", _pair_count),
        Suite("thm-triples", _check_triple, _triple_cases, "rectangle", lambda c: ((c.l + 1) * (c.k + 1)) ** 3),
        Suite("kappa-lemmas", _check_kappa, _kappa_cases, "rectangle"),
        Suite("dmax-bound", _check_dmax, _pairs, "product", _pair_count),
        Suite("conj-interval", _check_interval, _pairs, "product", _pair_count),
        Suite("conj-descent", _check_descent, _pairs, "product", _pair_count),
        Suite("giambelli", _check_giambelli, lambda c: [(p,) for p in box_partitions(c)], "giambelli",
              lambda c: math.comb(c.n, c.l)),
        Suite("ring-axioms", _check_ring_axioms, _ring_cases, "product"),
        Suite("core-orders", None, None, "core"),  # type: ignore[arg-type]
    ]
}

DEFAULT_BOUNDS = {"product": {"max_n": 7}, "rectangle": {"max_side": 4}, "giambelli": {"max_side": 3}}


def contexts_for(
    suite: str, max_n: int | None = None, max_side: int | None = None, all_splits: bool = False
) -> list[GrassmannianContext]:
    """Boxes a suite sweeps, in canonical order (by n, then l)."""
    kind = SUITES[suite].kind
    if kind == "core":
        return []
    if kind == "product":
        max_n = max_n if max_n is not None else DEFAULT_BOUNDS["product"]["max_n"]
    else:
        max_side = max_side if max_side is not None else DEFAULT_BOUNDS[kind]["max_side"]
        all_splits = True
    out = []
    for n in range(2, (max_n if max_n is not None else 2 * max_side) + 1):
        for l in range(1, n):
            k = n - l
            if max_side is not None and max(l, k) > max_side:
                continue
            if not all_splits and l > k:
                continue
            out.append(GrassmannianContext(l, k))
    return out


def _run(fn: Callable[[Case], Outcome], cases: list[Case], workers: int, pool: Executor | None = None) -> list[Outcome]:
    if workers <= 1 or len(cases) < 2:
        return [fn(c) for c in cases]
    chunk = max(1, len(cases) // (workers * 8))
    if pool is not None:
        return list(pool.map(fn, cases, chunksize=chunk))
    with ProcessPoolExecutor(max_workers=workers) as own:
        return list(own.map(fn, cases, chunksize=chunk))


def _select(cases: list[Case], sample: int | None, seed: int) -> list[Case]:
    if sample is None or sample >= len(cases):
        return cases
    rng = random.Random(seed)
    keep = sorted(rng.sample(range(len(cases)), sample))
    return [cases[i] for i in keep]


def _assemble(name, ctx, cases, outcomes, started, expected) -> VerificationReport:
    failures = [fail for fail, _ in outcomes if fail is not None]
    tallies: dict[str, int] = {}
    for _, tally in outcomes:
        for key, value in (tally or {}).items():
            tallies[key] = tallies.get(key, 0) + value
    return VerificationReport(
        suite=name,
        l=ctx.l if ctx else None,
        k=ctx.k if ctx else None,
        cases=len(cases),
        counterexamples=failures,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 1),
        expected_cases=expected,
        details=dict(sorted(tallies.items())),
    )


def run_suite(
    name: str,
    ctx: GrassmannianContext | None = None,
    workers: int = 1,
    sample: int | None = None,
    seed: int = 0,
    pool: Executor | None = None,
    **options: Any,
) -> VerificationReport:
    """Run one suite on one box (``ctx`` is ignored by ``core-orders``).

    ``options`` go to the case generator (e.g. ``random_triples`` for
    ``ring-axioms``, ``max_size``/``ns`` for ``core-orders``). With ``sample``
    only a seeded subset of the cases is checked.
    """
    if name not in SUITES:
        raise KeyError(name)
    started = time.perf_counter()
    suite = SUITES[name]
    if suite.kind == "core":
        orders = options.pop("orders", 50)
        cases = _select(core_order_cases(**options), sample, seed)
        outcomes = _run(partial(_check_core_orders, orders, seed), cases, workers, pool)
        return _assemble(name, None, cases, outcomes, started, None)
    if ctx is None:
        raise ValueError(f"suite {name} needs a box")
    if name == "ring-axioms":
        options.setdefault("seed", seed)
    all_cases = suite.cases(ctx, **options)
    cases = _select(all_cases, sample, seed)
    outcomes = _run(partial(suite.check, ctx), cases, workers, pool)
    expected = suite.expected(ctx) if suite.expected and sample is None else None
    report = _assemble(name, ctx, cases, outcomes, started, expected)
    if expected is not None and expected != report.cases:
        report.counterexamples.append({"case": f"l={ctx.l},k={ctx.k}", "problem": f"case count {report.cases} != {expected}"})
    return report


def run_sweep(
    name: str,
    max_n: int | None = None,
    max_side: int | None = None,
    all_splits: bool = False,
    workers: int = 1,
    sample: int | None = None,
    seed: int = 0,
    **options: Any,
) -> list[VerificationReport]:
    """Run a suite over every box in its range; one report per box."""
    if name not in SUITES:
        raise KeyError(name)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        if SUITES[name].kind == "core":
            return [run_suite(name, None, workers, sample, seed, pool, **options)]
        return [
            run_suite(name, ctx, workers, sample, seed, pool, **options)
            for ctx in contexts_for(name, max_n, max_side, all_splits)
        ]
    finally:
        if pool is not None:
            pool.shutdown()


SUITE_NAMES = list(SUITES)

__all__ = [
    "SCHEMA",
    "SUITES",
    "SUITE_NAMES",
    "VerificationReport",
    "condition_one",
    "contexts_for",
    "core_order_cases",
    "run_suite",
    "run_sweep",
]
