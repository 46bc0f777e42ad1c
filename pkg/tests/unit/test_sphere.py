"""Testes de 1-esfericidade e semiafinidade para pontos racionais na reta."""

from fractions import Fraction

import numpy as np
import pytest

from src.sphere import (
    LinePointSet,
    equivalence_sweep_integers,
    equivalence_sweep_random,
    format_point,
    is_1_spherical,
    max_spherical_size,
    parse_points,
    semiaffine_on_line,
    to_integer_lattice,
)
from src.utils.errors import ParseError


class TestLinePointSet:
    def test_sorted_and_deduplicated(self) -> None:
        P = LinePointSet.of(2, "1/2", Fraction(4, 2), 0)
        assert P.points == (Fraction(0), Fraction(1, 2), Fraction(2))
        assert len(P) == 3

    def test_parse_points(self) -> None:
        assert parse_points("0, 1/2, 3").points == (
            Fraction(0), Fraction(1, 2), Fraction(3))

    @pytest.mark.parametrize("text,token", [("0,a", "a"), ("1/0", "1/0")])
    def test_parse_rejects(self, text, token) -> None:
        with pytest.raises(ParseError) as excinfo:
            parse_points(text)
        assert excinfo.value.token == token

    def test_format_point(self) -> None:
        assert format_point(Fraction(3)) == 3
        assert format_point(Fraction(-1, 2)) == "-1/2"


class TestSpherical:
    def test_two_points(self) -> None:
        assert is_1_spherical(LinePointSet.of(0, 1))

    def test_three_points_witness(self) -> None:
        result = is_1_spherical(LinePointSet.of(0, 1, 2))
        assert not result
        assert result.witness is not None
        assert result.witness.elements == (0, 2, 1)

    def test_singleton(self) -> None:
        assert is_1_spherical(LinePointSet.of("7/3"))

    def test_empty(self) -> None:
        assert is_1_spherical(LinePointSet())


class TestSemiaffineOnLine:
    def test_two_points(self) -> None:
        assert semiaffine_on_line(LinePointSet.of(0, 1))

    def test_three_points_witness(self) -> None:
        result = semiaffine_on_line(LinePointSet.of(0, 1, 2))
        assert not result.holds
        assert result.witness is not None
        assert result.witness.elements == (1, 2, 0)

    def test_half_integer(self) -> None:
        assert semiaffine_on_line(LinePointSet.of(0, "1/2"))


class TestIntegerLattice:
    def test_scaled(self) -> None:
        L = to_integer_lattice(LinePointSet.of("1/2", "3/2"))
        assert L.points == (0, 2)
        assert L.scale == 2
        assert L.offset == Fraction(1, 2)
        assert L.invert(2) == Fraction(3, 2)

    def test_integers(self) -> None:
        L = to_integer_lattice(LinePointSet.of(0, 1))
        assert (L.points, L.scale, L.offset) == ((0, 1), 1, 0)

    def test_singleton(self) -> None:
        assert to_integer_lattice(LinePointSet.of("5/7")).points == (0,)

    def test_empty(self) -> None:
        with pytest.raises(ValueError):
            to_integer_lattice(LinePointSet())

    def test_predicates_invariant_under_normalization(self) -> None:
        P = LinePointSet.of("-1/3", "1/6", "2/3")
        L = to_integer_lattice(P)
        S = LinePointSet.of(*L.points)
        assert bool(is_1_spherical(P)) == bool(is_1_spherical(S))
        assert bool(semiaffine_on_line(P)) == bool(semiaffine_on_line(S))

    def test_predicates_invariant_under_affine_maps(self) -> None:
        rng = np.random.default_rng(2024)
        for _ in range(2000):
            size = int(rng.integers(1, 7))
            P = LinePointSet(points=[
                Fraction(int(n), int(d))
                for n, d in zip(rng.integers(-20, 21, size=size),
                                rng.integers(1, 9, size=size))])
            r = Fraction(int(rng.choice([-1, 1])) * int(rng.integers(1, 10)),
                         int(rng.integers(1, 10)))
            s = Fraction(int(rng.integers(-30, 31)), int(rng.integers(1, 10)))
            image = LinePointSet(points=[r * p + s for p in P.points])
            assert bool(is_1_spherical(P)) == bool(is_1_spherical(image))
            assert bool(semiaffine_on_line(P)) == bool(semiaffine_on_line(image))


class TestSweeps:
    def test_integer_window(self) -> None:
        report = equivalence_sweep_integers(0, 10, 5)
        assert report.passed
        assert report.checked == 1024
        assert report.largest_spherical == 2

    def test_random_is_reproducible(self) -> None:
        first = equivalence_sweep_random(200, seed=7)
        second = equivalence_sweep_random(200, seed=7)
        assert first == second
        assert first.passed
        assert first.checked == 200

    def test_random_sweep_uses_rational_points(self, monkeypatch) -> None:
        def refuse(P: LinePointSet) -> None:
            raise AssertionError(f"normalização inesperada de {P.points}")

        monkeypatch.setattr("src.sphere.line.to_integer_lattice", refuse)
        report = equivalence_sweep_random(300, seed=11)
        assert report.passed
        assert report.checked == 300
        assert report.largest_spherical == 2

    def test_largest_spherical_set_has_two_points(self) -> None:
        assert max_spherical_size(0, 8) == 2
        assert max_spherical_size(3, 3) == 1
