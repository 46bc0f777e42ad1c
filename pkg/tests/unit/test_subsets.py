"""Testes de bitsets, literais de conjunto e dos predicados definidores."""

import pytest
from pydantic import ValidationError

from src.group_core import GroupSpec, element_at, group_table
from src.structure import Subgroup
from src.subsets import (
    SubsetBits,
    WitnessKind,
    difference_set,
    doubling_closed,
    format_subset,
    half_set,
    is_affine,
    is_midconvex,
    is_semiaffine,
    parse_subset,
    shift,
    witness_reproduces,
)
from src.utils.errors import AmbientMismatchError, DimensionMismatchError, ParseError


class TestSubsetBits:
    def test_bits_beyond_order_rejected(self) -> None:
        with pytest.raises(ValidationError):
            SubsetBits(group=GroupSpec.of(3), bits=0b1000)

    def test_members_and_size(self, subset) -> None:
        X = subset("Z8", "{5,0,4,1}")
        assert X.members() == [0, 1, 4, 5]
        assert X.size == 4
        assert len(X) == 4
        assert X.min_index() == 0

    def test_hex_is_little_endian_over_indices(self, group) -> None:
        X = SubsetBits.from_hex(group("Z6"), "0x36")
        assert X.members() == [1, 2, 4, 5]
        assert X.to_hex() == "36"

    @pytest.mark.parametrize("text", ["zz", "40"])
    def test_hex_rejects(self, group, text) -> None:
        with pytest.raises(ParseError):
            SubsetBits.from_hex(group("Z6"), text)

    def test_set_operations(self, subset) -> None:
        A = subset("Z6", "{0,1,2}")
        B = subset("Z6", "{2,3}")
        assert (A | B).members() == [0, 1, 2, 3]
        assert (A & B).members() == [2]
        assert (A - B).members() == [0, 1]
        assert (A & B).issubset(A)

    def test_mixing_groups_rejected(self, subset) -> None:
        with pytest.raises(DimensionMismatchError):
            subset("Z6", "{0}") | subset("Z2xZ3", "{(0,0)}")

    def test_empty_min_index(self, group) -> None:
        with pytest.raises(ValueError):
            SubsetBits.empty(group("Z4")).min_index()


class TestLiterals:
    def test_tuple_elements(self, group) -> None:
        X = parse_subset(group("Z2xZ2"), "{(0,1), (1,0)}")
        assert X.members() == [1, 2]
        assert format_subset(X) == "{(0,1),(1,0)}"

    def test_canonical_order_and_duplicates(self, group) -> None:
        X = parse_subset(group("Z6"), "{5,1,1,4,2}")
        assert format_subset(X) == "{1,2,4,5}"

    def test_empty_literal(self, group) -> None:
        assert parse_subset(group("Z4"), "{}").is_empty()
        assert format_subset(SubsetBits.empty(group("Z4"))) == "{}"

    @pytest.mark.parametrize(
        "literal,token", [("{1,7}", "7"), ("1,2", "1,2"), ("{(0,1}", "(0,1")]
    )
    def test_errors_name_token(self, group, literal, token) -> None:
        with pytest.raises(ParseError) as excinfo:
            parse_subset(group("Z6"), literal)
        assert excinfo.value.token == token


class TestShiftAndDifferences:
    def test_shift(self, subset, group) -> None:
        G = group("Z6")
        assert shift(subset("Z6", "{0,3}"), G.element(2)).members() == [2, 5]
        X = subset("Z6", "{1,4,5}")
        assert shift(X, G.zero) == X
        assert shift(subset("Z5", "{0,1}"), group("Z5").element(4)).members() == [0, 4]

    @pytest.mark.parametrize(
        "spec,literal,expected",
        [
            ("Z5", "{0,1}", [0, 1, 4]),
            ("Z8", "{0,1,4,5}", [0, 1, 3, 4, 5, 7]),
            ("Z4", "{}", []),
        ],
    )
    def test_difference_set(self, subset, spec, literal, expected) -> None:
        assert difference_set(subset(spec, literal)).members() == expected

    @pytest.mark.parametrize(
        "spec,s,expected", [("Z6", 0, [0, 3]), ("Z5", 1, [3]), ("Z4", 1, [])]
    )
    def test_half_set(self, group, spec, s, expected) -> None:
        G = group(spec)
        assert half_set(G, G.element(s)).members() == expected

    @pytest.mark.parametrize("spec", ["Z6", "Z8", "Z2xZ4", "Z12", "Z2xZ2xZ2"])
    def test_half_set_sizes(self, group, spec) -> None:
        G = group(spec)
        torsion = half_set(G, G.zero).size
        for s in range(G.total_order):
            assert half_set(G, element_at(G, s)).size in (0, torsion)

    @pytest.mark.parametrize("spec", ["Z6", "Z8", "Z2xZ4", "Z9"])
    def test_difference_set_shift_invariant_and_symmetric(self, group, spec) -> None:
        G = group(spec)
        neg = group_table(G).neg
        for bits in range(1 << G.total_order):
            X = SubsetBits(group=G, bits=bits)
            D = difference_set(X)
            assert all(D.contains_index(neg[d]) for d in D.members())
            for g in range(G.total_order):
                assert difference_set(shift(X, element_at(G, g))) == D


class TestAffine:
    def test_coset_is_affine(self, subset) -> None:
        assert is_affine(subset("Z6", "{1,3,5}")).holds

    def test_witness(self, subset) -> None:
        result = is_affine(subset("Z5", "{0,1}"))
        assert not result
        assert result.witness is not None
        assert result.witness.kind == WitnessKind.AFFINE
        assert result.witness.elements == (1, 1, 0)
        assert result.witness.missing == (2,)

    def test_empty_is_affine(self, group) -> None:
        assert is_affine(SubsetBits.empty(group("Z7")))


class TestSemiaffine:
    def test_witness(self, subset) -> None:
        result = is_semiaffine(subset("Z7", "{0,1,2}"))
        assert not result.holds
        assert result.witness is not None
        assert result.witness.elements == (1, 2, 0)
        assert result.witness.missing == (3, 6)

    def test_two_cosets_of_trivial_group(self, subset) -> None:
        assert is_semiaffine(subset("Z5", "{0,2}"))

    @pytest.mark.parametrize("spec", ["Z1", "Z5", "Z4xZ2"])
    def test_singletons(self, group, spec) -> None:
        G = group(spec)
        for i in range(G.total_order):
            assert is_semiaffine(SubsetBits.from_indices(G, [i]))

    def test_affine_implies_semiaffine(self, group) -> None:
        G = group("Z2xZ4")
        for bits in range(1 << G.total_order):
            X = SubsetBits(group=G, bits=bits)
            if is_affine(X):
                assert is_semiaffine(X)

    def test_shift_invariance(self, group) -> None:
        G = group("Z6")
        for bits in range(1 << G.total_order):
            X = SubsetBits(group=G, bits=bits)
            verdict = bool(is_semiaffine(X))
            for g in range(G.total_order):
                assert bool(is_semiaffine(shift(X, G.element(g)))) == verdict


class TestMidconvex:
    def test_holds(self, subset) -> None:
        assert is_midconvex(subset("Z6", "{2,5}"))

    def test_witness(self, subset) -> None:
        result = is_midconvex(subset("Z4", "{0,2}"))
        assert not result
        assert result.witness is not None
        assert result.witness.elements == (0, 2)
        assert result.witness.missing == (1,)

    def test_empty(self, group) -> None:
        assert is_midconvex(SubsetBits.empty(group("Z4")))

    def test_ambient_changes_half_sets(self, subset) -> None:
        H = Subgroup(bits=subset("Z4", "{0,2}"))
        X = subset("Z4", "{0,2}")
        assert not is_midconvex(X)
        assert is_midconvex(X, H)

    def test_ambient_as_bits(self, subset) -> None:
        assert is_midconvex(subset("Z6", "{0,3}"), subset("Z6", "{0,3}"))

    def test_wrong_ambient_rejected(self, subset) -> None:
        with pytest.raises(AmbientMismatchError):
            is_midconvex(subset("Z6", "{1}"), Subgroup(bits=subset("Z6", "{0,3}")))

    def test_shift_invariance(self, group) -> None:
        G = group("Z2xZ3")
        for bits in range(1 << G.total_order):
            X = SubsetBits(group=G, bits=bits)
            verdict = bool(is_midconvex(X))
            for g in range(G.total_order):
                shifted = shift(X, G.element(divmod(g, 3)))
                assert bool(is_midconvex(shifted)) == verdict


class TestDoublingClosed:
    def test_violator(self, subset) -> None:
        result = doubling_closed(subset("Z5", "{0,1}"))
        assert not result
        assert result.witness is not None
        assert result.witness.kind == WitnessKind.DOUBLING
        assert result.witness.elements == (1,)

    def test_whole_difference_set(self, subset) -> None:
        assert doubling_closed(subset("Z6", "{1,2,4,5}"))

    def test_empty(self, group) -> None:
        assert doubling_closed(SubsetBits.empty(group("Z3")))


class TestWitnessReproduces:
    @pytest.mark.parametrize(
        "predicate,spec,literal",
        [
            (is_affine, "Z5", "{0,1}"),
            (is_semiaffine, "Z7", "{0,1,2}"),
            (is_midconvex, "Z4", "{0,2}"),
            (doubling_closed, "Z5", "{0,1}"),
        ],
    )
    def test_witnesses_reproduce(self, subset, predicate, spec, literal) -> None:
        X = subset(spec, literal)
        result = predicate(X)
        assert result.witness is not None
        assert witness_reproduces(X, result.witness)

    def test_witness_for_other_set_does_not_reproduce(self, subset) -> None:
        witness = is_semiaffine(subset("Z7", "{0,1,2}")).witness
        assert witness is not None
        assert not witness_reproduces(subset("Z7", "{0,1,2,3}"), witness)

    def test_all_witnesses_in_small_group(self, group) -> None:
        G = group("Z8")
        for bits in range(1 << G.total_order):
            X = SubsetBits(group=G, bits=bits)
            for predicate in (is_affine, is_semiaffine, is_midconvex, doubling_closed):
                result = predicate(X)
                if not result:
                    assert result.witness is not None
                    assert witness_reproduces(X, result.witness)
