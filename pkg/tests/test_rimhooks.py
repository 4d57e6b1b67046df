import random

import pytest
from hypothesis import given, settings, strategies as st

from qschubert.partitions import GrassmannianContext, cells, partitions_of
from qschubert.rimhooks import (
    RimHook,
    beta_residue_profile,
    core_via_abacus,
    epsilon,
    epsilon_via_abacus,
    legal_rim_hooks,
    n_core,
    r_n,
)

G = GrassmannianContext


def is_rim_hook(hook: RimHook, p) -> bool:
    cs = set(hook.cells)
    connected = {hook.cells[0]}
    frontier = [hook.cells[0]]
    while frontier:
        i, j = frontier.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cs and nb not in connected:
                connected.add(nb)
                frontier.append(nb)
    square = any({(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cs for i, j in cs)
    return connected == cs and not square and cs <= cells(p)


def brute_legal_hooks(p, n):
    """Every n-subset of cells that is connected, 2x2-free and leaves a partition."""
    import itertools

    from qschubert.rimhooks import _shape_from_cells

    diagram = cells(p)
    found = []
    for subset in itertools.combinations(sorted(diagram), n):
        hook = RimHook(subset)
        if is_rim_hook(hook, p) and _shape_from_cells(diagram - set(subset)) is not None:
            found.append(hook)
    return sorted(found, key=lambda h: h.head)


def test_legal_hook_examples():
    assert legal_rim_hooks((), 3) == []
    hooks = legal_rim_hooks((1, 1), 2)
    assert [h.cells for h in hooks] == [((1, 1), (2, 1))]
    assert hooks[0].width == 1
    assert legal_rim_hooks((2, 1), 2) == []


def test_legal_hooks_match_brute_force():
    for s in range(1, 9):
        for p in partitions_of(s):
            for n in range(1, 6):
                assert legal_rim_hooks(p, n) == brute_legal_hooks(p, n), (p, n)


def test_core_examples():
    t = n_core((), 3)
    assert (t.core, t.r) == ((), 0)
    t = n_core((1, 1), 2)
    assert (t.core, t.r, t.widths) == ((), 1, [1])
    t = n_core((3, 1), 3)
    assert (t.core, t.r) == ((3, 1), 0)
    assert r_n((2, 2, 2), 4) == 1
    assert n_core((2, 2, 2), 4).core == (1, 1)
    assert r_n((), 5) == 0
    with pytest.raises(ValueError):
        n_core((1,), 1)


def test_epsilon_examples():
    assert epsilon((), 4, G(2, 2)) == 1
    assert epsilon((1, 1), 2, G(1, 1)) == 1
    assert epsilon((2, 2, 2), 4, G(2, 2)) == 1
    with pytest.raises(ValueError):
        epsilon((1,), 3, G(2, 2))


def test_trace_replays():
    for p in partitions_of(10):
        for n in (2, 3, 4):
            t = n_core(p, n)
            remaining = cells(p)
            for hook in t.removed:
                assert len(hook) == n
                assert is_rim_hook(hook, p)
                assert set(hook.cells) <= remaining
                remaining -= set(hook.cells)
            assert remaining == cells(t.core)
            assert sum(p) == sum(t.core) + n * t.r
            assert n_core(t.core, n).r == 0


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(1, 5), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.integers(2, 6),
    st.randoms(use_true_random=False),
)
def test_random_orders_agree(p, n, rnd):
    canonical = n_core(p, n)
    other = n_core(p, n, rng=random.Random(rnd.random()))
    assert (other.core, other.r) == (canonical.core, canonical.r)
    for l in range(1, n):
        ctx = G(l, n - l)
        signs = {(-1) ** sum(ctx.k - w for w in t.widths) for t in (canonical, other)}
        assert len(signs) == 1
        assert epsilon_via_abacus(p, ctx) == epsilon(p, n, ctx)


def test_abacus_oracle():
    for s in range(13):
        for p in partitions_of(s):
            for n in range(2, 6):
                core, r, _ = core_via_abacus(p, n)
                t = n_core(p, n)
                assert (core, r) == (t.core, t.r)
                assert beta_residue_profile(p, n, len(p)) == beta_residue_profile(core, n, len(p))
                assert (s - sum(core)) % n == 0
