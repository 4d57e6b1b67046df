import dataclasses
import math

import pytest

from qschubert import verify
from qschubert.partitions import GrassmannianContext, box_partitions, rectangle
from qschubert.verify import condition_one, contexts_for, run_suite, run_sweep

G = GrassmannianContext


def test_no_cancel_case_counts():
    assert run_suite("thm-no-cancel", G(1, 1)).cases == 4
    report = run_suite("thm-no-cancel", G(2, 2))
    assert report.cases == 36 and report.passed


@pytest.mark.parametrize("name", ["thm-no-cancel", "thm-dmin", "cor-rect", "dmax-bound", "conj-interval", "conj-descent"])
def test_pair_suites_pass_small(name):
    for ctx in contexts_for(name, max_n=5, all_splits=True):
        report = run_suite(name, ctx)
        assert report.passed, report.counterexamples
        assert report.cases == report.expected_cases == math.comb(ctx.n, ctx.l) ** 2


def test_triples_examples():
    assert verify._check_triple(G(2, 2), (0, 0, 0, 0, 0, 0)) == (None, {"nonzero": 1})
    fail, tally = verify._check_triple(G(1, 1), (1, 1, 1, 1, 1, 1))
    assert fail is None and tally == {"nonzero": 0}
    assert not verify._conditions(G(1, 1), 1, 1, 1, 1, 1, 1)["i"]
    assert all(verify._conditions(G(2, 2), 1, 1, 1, 1, 1, 1).values())
    assert condition_one(G(2, 2), (1,), (1,), (1,))
    assert not condition_one(G(1, 1), (1,), (1,), (1,))


def test_triples_and_kappa_pass():
    for ctx in [G(1, 1), G(2, 2), G(2, 3), G(3, 2)]:
        for name in ["thm-triples", "kappa-lemmas"]:
            report = run_suite(name, ctx)
            assert report.passed, report.counterexamples
    assert run_suite("thm-triples", G(2, 2)).cases == 9**3


def test_kappa_general_shapes_only_in_small_boxes():
    kinds = {case[0] for case in verify._kappa_cases(G(2, 4))}
    assert kinds == {"closed-form"}
    kinds = {case[0] for case in verify._kappa_cases(G(3, 3))}
    assert kinds == {"rotation", "monotone", "closed-form"}


def test_rotation_criterion_needs_nonempty_rectangle():
    # with an empty rectangle the rotation test is vacuous while sigma_1 . sigma_1 = 0 in P^1
    ctx = G(1, 1)
    assert verify._check_kappa(ctx, ("rotation", (1,), (1,), 1, 1))[0] is None
    from qschubert.lr import kappa, triple_product_nonzero_bruteforce

    assert kappa((1,), (1,), ctx) == (1,)
    assert not triple_product_nonzero_bruteforce((1,), (1,), rectangle(0, 0), ctx)


def test_cor_rect_example():
    # rho = (1,1) contains the 2x1 rectangle
    fail, _ = verify._check_cor_rect(G(1, 1), ((1,), (1,)))
    assert fail is None


def test_dmax_records_sharper_cases():
    report = run_suite("dmax-bound", G(2, 2))
    assert report.passed
    assert report.details["sharper_than_size_bound"] >= 1


def test_descent_second_branch():
    # sigma_1 * sigma_1 = q in P^1: nothing below degree 1
    fail, tally = verify._check_descent(G(1, 1), ((1,), (1,)))
    assert fail is None and tally["terms_checked"] == 1


def test_giambelli_and_ring_axioms():
    assert run_suite("giambelli", G(3, 3)).passed
    report = run_suite("ring-axioms", G(2, 2))
    assert report.passed and report.details == {"pairs": 36, "triples": 216}
    report = run_suite("ring-axioms", G(2, 4), random_triples=50)
    assert report.passed and report.details["triples"] == 50


def test_core_orders_small():
    report = run_suite("core-orders", max_size=8, ns=range(2, 5), orders=10)
    assert report.passed and report.l is None


def test_contexts():
    assert contexts_for("thm-dmin", max_n=4) == [G(1, 1), G(1, 2), G(1, 3), G(2, 2)]
    assert len(contexts_for("thm-dmin", max_n=7, all_splits=True)) == 21
    assert len(contexts_for("thm-triples")) == 16
    assert max(max(c.l, c.k) for c in contexts_for("giambelli")) == 3
    assert contexts_for("core-orders") == []


def test_reports_deterministic_across_workers():
    serial = [r.to_dict(timing=False) for r in run_sweep("conj-descent", max_n=5)]
    parallel = [r.to_dict(timing=False) for r in run_sweep("conj-descent", max_n=5, workers=2)]
    assert serial == parallel
    again = [r.to_dict(timing=False) for r in run_sweep("conj-descent", max_n=5)]
    assert serial == again


def test_sample_is_subset_of_exhaustive(monkeypatch):
    # a check that flags every case exposes exactly which cases were visited
    flag_all = lambda ctx, case: ({"case": verify.pair_id(ctx, ("lam", case[0]), ("mu", case[1]))}, None)  # noqa: E731
    monkeypatch.setitem(verify.SUITES, "thm-dmin", dataclasses.replace(verify.SUITES["thm-dmin"], check=flag_all))
    ctx = G(2, 3)
    full = {c["case"] for c in run_suite("thm-dmin", ctx).counterexamples}
    sampled = run_suite("thm-dmin", ctx, sample=17, seed=4)
    picked = [c["case"] for c in sampled.counterexamples]
    assert sampled.cases == 17 and len(picked) == 17
    assert set(picked) <= full
    assert picked == [c["case"] for c in run_suite("thm-dmin", ctx, sample=17, seed=4).counterexamples]


def test_case_count_mismatch_is_reported(monkeypatch):
    monkeypatch.setitem(
        verify.SUITES, "thm-dmin", dataclasses.replace(verify.SUITES["thm-dmin"], cases=lambda ctx: verify._pairs(ctx)[:-1])
    )
    report = run_suite("thm-dmin", G(2, 2))
    assert not report.passed


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_sweep("nope")


def test_report_serialization():
    report = run_suite("thm-dmin", G(1, 2))
    d = report.to_dict()
    assert {"suite", "l", "k", "cases", "counterexamples", "elapsed_ms"} <= set(d)
    assert d["passed"] is True
    assert "elapsed_ms" not in report.to_dict(timing=False)
    assert len(box_partitions(G(1, 2))) ** 2 == d["cases"]
