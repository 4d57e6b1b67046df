import itertools

import pytest

from qschubert.lr import (
    classical_product,
    kappa,
    kappa_rectangles_closed_form,
    lr_coefficient,
    product_nonzero,
    triple_product_nonzero_bruteforce,
)
from qschubert.partitions import BoxError, GrassmannianContext, box_partitions, contains, partitions_of

from oracles import brute_lr

G = GrassmannianContext


def test_lr_examples():
    assert lr_coefficient((), (2, 1), (2, 1)) == 1
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2, 1), (2, 1), (3, 2)) == 0  # wrong size
    assert lr_coefficient((3,), (1,), (2, 2)) == 0  # lam not inside rho


def test_lr_symmetry_exhaustive():
    parts = [p for s in range(7) for p in partitions_of(s)]
    for lam in parts:
        for mu in parts:
            if sum(lam) + sum(mu) > 12:
                continue
            for rho in partitions_of(sum(lam) + sum(mu)):
                assert lr_coefficient(lam, mu, rho) == lr_coefficient(mu, lam, rho)


def test_pieri_single_box():
    for s in range(9):
        for lam in partitions_of(s):
            for rho in partitions_of(s + 1):
                one_box = contains(rho, lam)
                assert lr_coefficient(lam, (1,), rho) == int(one_box)


def test_brute_force_agreement_medium():
    for lam, mu in itertools.product([(2, 1), (2, 2), (3, 1), (2, 1, 1)], repeat=2):
        for rho in partitions_of(sum(lam) + sum(mu)):
            assert lr_coefficient(lam, mu, rho) == brute_lr(lam, mu, rho)


def test_classical_product_examples(box22):
    assert classical_product((), (2, 1), box22).terms == {(2, 1): 1}
    assert classical_product((1,), (1,), box22).terms == {(2,): 1, (1, 1): 1}
    assert classical_product((2, 2), (1,), box22).terms == {}
    with pytest.raises(BoxError):
        classical_product((3,), (1,), box22)


def test_product_nonzero_examples(box22):
    assert product_nonzero((), box22.full, box22)
    assert not product_nonzero((2, 1), (2, 1), box22)
    assert product_nonzero((1,), (1,), box22)


def test_product_nonzero_agrees_with_expansion():
    for l in range(1, 4):
        for k in range(1, 4):
            ctx = G(l, k)
            for lam in box_partitions(ctx):
                for mu in box_partitions(ctx):
                    assert product_nonzero(lam, mu, ctx) == bool(classical_product(lam, mu, ctx))


def test_kappa_examples(box22):
    assert kappa((), (2, 1), box22) == (2, 1)
    assert kappa((1,), (1,), box22) == (1,)
    assert kappa((2, 2), (2, 2), box22) == (2, 2)


def test_kappa_closed_form_examples(box22):
    assert kappa_rectangles_closed_form(1, 1, 1, 1, box22) == (1,)
    assert kappa_rectangles_closed_form(0, 2, 2, 1, box22) == (1, 1)
    assert kappa_rectangles_closed_form(2, 0, 1, 2, box22) == (2,)
    assert kappa_rectangles_closed_form(2, 2, 1, 1, box22) == (2, 2)
    with pytest.raises(BoxError):
        kappa_rectangles_closed_form(3, 1, 1, 1, box22)


def test_kappa_monotone_small():
    for l, k in [(2, 2), (2, 3)]:
        ctx = G(l, k)
        parts = box_partitions(ctx)
        below = [(a, b) for b in parts for a in parts if contains(b, a)]
        for (alpha, lam), (beta, mu) in itertools.product(below, repeat=2):
            assert contains(kappa(lam, mu, ctx), kappa(alpha, beta, ctx))


def test_triple_examples():
    assert triple_product_nonzero_bruteforce((), (), (), G(1, 1))
    assert not triple_product_nonzero_bruteforce((1,), (1,), (1,), G(1, 1))
    assert triple_product_nonzero_bruteforce((1,), (1,), (1,), G(2, 2))
    assert classical_product((2,), (1,), G(2, 2)).terms == {(2, 1): 1}
