"""Smoke tests for the evenwalks extension module."""

from fractions import Fraction

import evenwalks as ew


def frac(text: str) -> Fraction:
    return Fraction(text)


def test_catalan_and_paths():
    assert ew.catalan(0) == 1
    assert ew.catalan(12) == 208012
    paths = ew.enumerate_dyck(4)
    assert len(paths) == 14
    assert paths[0] == "11110000"
    assert ew.max_height("11110000") == (4, 4)
    assert ew.has_branching("1010", 2)
    assert not ew.has_branching("1100", 2)
    assert ew.count_branching(3, 3) == 1
    assert frac(ew.branching_bound(2, 2)) == Fraction(9, 2)


def test_sampling_is_deterministic_and_valid():
    a = ew.sample_dyck_uniform(8, 123)
    b = ew.sample_dyck_uniform(8, 123)
    assert a == b
    assert a.count("1") == 8
    value, err = ew.estimate_height_mean(2, 1.0)
    assert err == 0.0
    assert value > 0


def test_walk_basics():
    assert ew.minimal_walk_of([5, 2, 1, 5, 7, 3, 1, 5]) == [1, 2, 3, 1, 4, 5, 3, 1]
    assert ew.is_even([1, 2, 1])
    assert not ew.is_double_even([1, 2, 3, 4, 2, 3, 4, 2, 1])
    walks = ew.enumerate_even_walks(2)
    assert len(walks) == 8
    assert walks[0] == [1, 1, 1, 1, 1]
    times, theta = ew.marked_instants([1, 2, 3, 4, 2, 3, 4, 2, 1])
    assert times == [1, 2, 3, 4]
    assert theta == "11110000"
    assert ew.multiplicity([1, 2, 1], 1, 2, 2) == 2


def test_classification_and_reduction():
    breve = ew.example_walk("irreducible_w8")
    profile = ew.classify_walk(breve)
    assert profile["kappa"][2] == 2
    assert profile["nu1_norm"] == 1
    assert ew.classify_simple([1, 2, 1, 2, 1], 2) == "same_direction"

    trace = ew.reduce_full(ew.example_walk("tree_like_w8"))
    assert trace["reduced"] == [1]
    times, k = ew.bts_instants(breve)
    assert times == [4] and k == 1
    report = ew.cells(breve)
    assert report["cells"][2]["primary"] == [1, 4]
    assert report["cells"][2]["imported"] == [7]
    assert ew.check_bts_arrivals_open(breve)
    assert ew.check_imported_cell_bounds(breve)

    hub = ew.example_walk("imported_cell_walk", q=5)
    assert ew.kappa(hub, 2) == 1
    assert ew.classify_walk(hub)["exit_degree"][2] == 21


def test_moments_agree():
    for law in ("rademacher", "gaussian", "uniform"):
        for s in (1, 2, 3):
            for n in (1, 2, 3):
                assert frac(ew.exact_moment(s, n, law)) == frac(
                    ew.brute_force_moment(s, n, law)
                )
    coeffs = [frac(c) for c in ew.moment_polynomial(3, "gaussian")]
    assert coeffs[4] == 5  # leading coefficient equals the tree count
    z = ew.z_decomposition(2, 3, "gaussian")
    assert frac(z["total"]) == frac(ew.exact_moment(2, 3, "gaussian"))

    est1, _ = ew.mc_moment(2, 10, "rademacher", trials=500, seed=11)
    est2, _ = ew.mc_moment(2, 10, "rademacher", trials=500, seed=11)
    assert est1 == est2

    clipped = ew.truncated_uniform_moments("4", "1")
    assert frac(clipped[0]) == Fraction(1, 6)


def test_bound_checks():
    assert ew.constant_C1() > 5.59
    assert ew.check_product_exp_bound(5, 100, 1)
    walks, checks, violations = ew.run_walk_checks(3)
    assert walks == 50 and violations == 0
    _, _, cell_violations = ew.run_cell_census(3)
    assert cell_violations == 0
    rows = ew.trend_report(1.0, [4], trials=200, seed=5)
    assert rows[0]["within"]
