import json
from fractions import Fraction

import ehrtensor as et

SQUARE = [[0, 0], [1, 0], [0, 1], [1, 1]]
T2 = [[0, 0], [1, 0], [0, 1]]


def test_scalars():
    assert et.bernoulli(1) == Fraction(-1, 2)
    assert et.bernoulli(12) == Fraction(-691, 2730)
    assert et.faulhaber_sum(10, 2) == 385


def test_counts():
    assert et.count(SQUARE) == 4
    assert et.count([[0, 0], [2, 0], [0, 2]], relint=True) == 0
    assert et.count([], dim=2) == 0
    assert len(et.lattice_points(T2)) == 3


def test_discrete_moment_of_square():
    t = et.discrete_moment(SQUARE, 2)
    assert t == {(2, 0): Fraction(1), (1, 1): Fraction(1, 2), (0, 2): Fraction(1)}


def test_ehrhart_expansion_matches_dilates():
    coeffs = et.ehrhart_tensors(T2, 1)
    assert len(coeffs) == 4
    k = 3
    dilate = [[k * x for x in v] for v in T2]
    direct = et.discrete_moment(dilate, 1)
    for key, value in direct.items():
        assert sum(c.get(key, 0) * k**i for i, c in enumerate(coeffs)) == value


def test_leading_coefficient_is_moment():
    assert et.ehrhart_tensors(SQUARE, 2)[-1] == et.moment_tensor(SQUARE, 2)


def test_checks_pass():
    assert et.check_reciprocity(T2, 3)["passed"]
    assert et.check_translation_covariance(SQUARE, 2, [2, -1])["passed"]
    report = et.check_equivariance(T2, 2, [[2, 1], [1, 1]])
    assert report["passed"] and report["failure"] is None


def test_valuation_n():
    n = et.valuation_n(T2)
    assert len(n) > 0 and all(len(k) == 2 and sum(k) == 9 for k in n)
    assert et.valuation_n([[0, 0], [3, 0]]) == {}


def test_ranks():
    assert et.planar_rank(9, 1) == 8
    assert len(et.planar_kernel(9, 1)) == 2
    assert et.prism_rank(3, 2, filter="odd") == 6
    assert et.prism_rank(3, 2) == 6


def test_cli_roundtrip():
    code, out, _ = et.run_cli(["count"], json.dumps({"vertices": SQUARE}))
    assert code == 0
    assert json.loads(out)["closed"] == 4
    code, _, _ = et.run_cli(["tensor", "--r", "2"], "not json")
    assert code == 2
