from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tuttekit.errors import CapacityError
from tuttekit.lattice import LatticeBasis, VectorConfig
from tuttekit.poly import MultiPoly
from tuttekit.root_systems import RootSystemSpec, build_config
from tuttekit.tables import parse_poly_terms
from tuttekit.tutte import (
    COBOUNDARY_VARS,
    TUTTE_VARS,
    arithmetic_tutte_bruteforce,
    classical_tutte_bruteforce,
    coboundary_from_tutte,
    tutte_from_coboundary,
)


def tutte(family, n, kind):
    return arithmetic_tutte_bruteforce(build_config(RootSystemSpec(family, n, kind)))


class TestWorkedExample:
    def test_c2_integer_lattice(self):
        t = tutte("C", 2, "integer")
        assert t.poly == parse_poly_terms("x^2+2y^2+4x+4y+3", TUTTE_VARS)
        assert t.rank == 2

    def test_c2_root_lattice(self):
        t = tutte("C", 2, "root")
        assert t.poly == parse_poly_terms("x^2+y^2+2x+2y+1", TUTTE_VARS)

    def test_b2_weight_lattice(self):
        t = tutte("B", 2, "weight")
        assert t.poly == parse_poly_terms("3+4x+x^2+4y+2y^2", TUTTE_VARS)


class TestClassicalVersusArithmetic:
    def test_unimodular_configuration_agrees(self):
        # Type A in the integer lattice has all multiplicities 1.
        cfg = build_config(RootSystemSpec("A", 4, "integer"))
        assert (
            arithmetic_tutte_bruteforce(cfg).poly
            == classical_tutte_bruteforce(cfg).poly
        )

    def test_multiplicities_change_the_polynomial(self):
        cfg = build_config(RootSystemSpec("C", 2, "integer"))
        assert (
            arithmetic_tutte_bruteforce(cfg).poly
            != classical_tutte_bruteforce(cfg).poly
        )

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_classical_cannot_distinguish_b_and_c(self, n):
        b = classical_tutte_bruteforce(build_config(RootSystemSpec("B", n, "integer")))
        c = classical_tutte_bruteforce(build_config(RootSystemSpec("C", n, "integer")))
        assert b.poly == c.poly

    def test_classical_evaluation_counts_bases(self):
        # T(1,1) counts bases: every pair among the 4 vectors of C2 is
        # linearly independent, so there are C(4, 2) = 6 bases.
        cfg = build_config(RootSystemSpec("C", 2, "integer"))
        assert classical_tutte_bruteforce(cfg).evaluate(1, 1) == 6


class TestCapacityGuard:
    def test_too_many_vectors(self):
        vecs = tuple((Q(1), Q(0)) for _ in range(26))
        cfg = VectorConfig(vectors=vecs, lattice=LatticeBasis.standard(2))
        with pytest.raises(CapacityError):
            arithmetic_tutte_bruteforce(cfg)


class TestCoboundaryTransforms:
    @pytest.mark.parametrize(
        "family,n,kind",
        [("A", 3, "weight"), ("B", 2, "integer"), ("C", 3, "root"), ("D", 3, "weight")],
    )
    def test_round_trip(self, family, n, kind):
        t = tutte(family, n, kind)
        psi = coboundary_from_tutte(t)
        back = tutte_from_coboundary(psi, ambient_rank=t.ambient_rank)
        assert back.poly == t.poly
        assert back.rank == t.rank

    @pytest.mark.parametrize(
        "family,n,kind",
        [("A", 4, "root"), ("B", 3, "weight"), ("C", 2, "integer"), ("D", 2, "root")],
    )
    def test_psi_at_y_equals_one_is_x_to_rank(self, family, n, kind):
        t = tutte(family, n, kind)
        psi = coboundary_from_tutte(t)
        collapsed = {}
        for (i, j), c in psi.poly.terms.items():
            collapsed[i] = collapsed.get(i, 0) + c
        collapsed = {i: c for i, c in collapsed.items() if c}
        assert collapsed == {t.rank: 1}

    def test_coboundary_of_c2(self):
        # psi(q, Y) at q=4 equals the finite-torus histogram generating sum.
        t = tutte("C", 2, "root")
        psi = coboundary_from_tutte(t)
        assert psi.poly.evaluate({"X": 1, "Y": 1}) == 1  # psi(1,1) = 1^r


class TestEvaluations:
    @pytest.mark.parametrize(
        "family,n,kind",
        [("A", 3, "weight"), ("B", 2, "root"), ("C", 2, "weight"), ("D", 3, "integer")],
    )
    def test_corner_evaluations_are_nonnegative_integers(self, family, n, kind):
        t = tutte(family, n, kind)
        for x, y in [(1, 0), (0, 1), (1, 1), (2, 1)]:
            v = t.evaluate(x, y)
            assert v.denominator == 1 and v >= 0
