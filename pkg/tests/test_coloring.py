import warnings
from math import comb

import pytest

from kneser_chroma.coloring import (
    EXPLICIT,
    FIELD_MINUS_SUBFIELD,
    FIELD_MINUS_SUBFIELD_PLUS_ZERO,
    FIELD_MINUS_ZERO,
    FULL_FIELD,
    PRIME_PREFIX,
    ColorVector,
    GroundSet,
    build_ground_set,
    check_ground_set,
    clique_witness,
    color_all,
    color_vertex,
    ground_set_from_json,
)
from kneser_chroma.errors import ArithmeticMismatch, SubfieldTooSmall
from kneser_chroma.gf import make_binary_field, subfield_elements
from kneser_chroma.kneser import KNESER_SQUARE, GraphSpec, adjacent

pytestmark = pytest.mark.filterwarnings("ignore:.*outside 2 <= r <= k-2.*")


def test_build_full_field():
    X = build_ground_set(3, 2, FULL_FIELD)
    assert X.field.order == 8 and X.elements == tuple(range(8))


def test_build_field_minus_zero():
    X = build_ground_set(3, 1, FIELD_MINUS_ZERO)
    assert X.n == 7 and 0 not in X.elements and X.field.order == 8


def test_build_field_minus_subfield():
    X = build_ground_set(5, 2, FIELD_MINUS_SUBFIELD, t_prime=2)
    assert X.n == 12 and X.field.order == 16
    assert set(X.elements) == set(range(16)) - subfield_elements(X.field, 2)


def test_build_field_minus_subfield_plus_zero():
    X = build_ground_set(6, 1, FIELD_MINUS_SUBFIELD_PLUS_ZERO, t_prime=2)
    assert X.n == 13 and X.elements[0] == 0
    assert set(X.elements) == (set(range(16)) - subfield_elements(X.field, 2)) | {0}


def test_build_prime_prefix():
    X = build_ground_set(4, 2, PRIME_PREFIX)
    assert X.field.p == 11  # smallest prime in [10, 14.625]
    assert X.elements == tuple(range(10))


def test_build_errors():
    with pytest.raises(ArithmeticMismatch):
        build_ground_set(3, 1, FULL_FIELD)  # 7 not a power of 2
    with pytest.raises(ArithmeticMismatch):
        build_ground_set(3, 2, FIELD_MINUS_ZERO)  # 8 != 2^t - 1
    with pytest.raises(ArithmeticMismatch):
        build_ground_set(5, 2, FIELD_MINUS_SUBFIELD, t_prime=3)  # 12+8 = 20 not 2^t
    with pytest.raises(SubfieldTooSmall):
        build_ground_set(28, 4, FIELD_MINUS_SUBFIELD, t_prime=2)  # 60 = 2^6-2^2 but 2^2-2 < 4
    with pytest.raises(ValueError):
        build_ground_set(3, 3, FULL_FIELD)  # r > k-1


def test_range_warning():
    with pytest.warns(UserWarning, match="outside 2 <= r <= k-2"):
        warnings.simplefilter("always")
        build_ground_set(3, 2, FULL_FIELD)  # r = k-1


def test_check_ground_set():
    assert check_ground_set(build_ground_set(3, 2, FULL_FIELD), 2)
    assert check_ground_set(build_ground_set(3, 1, FIELD_MINUS_ZERO), 1)
    assert check_ground_set(build_ground_set(5, 2, FIELD_MINUS_SUBFIELD, t_prime=2), 2)
    assert check_ground_set(build_ground_set(6, 1, FIELD_MINUS_SUBFIELD_PLUS_ZERO, t_prime=2), 1)
    # two distinct elements sum nonzero in characteristic 2
    F8 = make_binary_field(3)
    bad = GroundSet(field=F8, elements=(1, 2))
    assert not check_ground_set(bad, 1)


def test_color_vertex_example():
    X = build_ground_set(3, 2, FULL_FIELD)
    # A = {1, x, x^2} sits at positions 1, 2, 4 -> mask 0b10110
    cv = color_vertex(X, 0b10110, 2)
    assert cv.entries == (0b111, 0b101)


def test_color_depends_on_element_set_not_order():
    F8 = make_binary_field(3)
    X1 = GroundSet(field=F8, elements=tuple(range(8)))
    X2 = GroundSet(field=F8, elements=tuple(reversed(range(8))))
    targets = {1, 2, 4}
    mask1 = sum(1 << i for i, e in enumerate(X1.elements) if e in targets)
    mask2 = sum(1 << i for i, e in enumerate(X2.elements) if e in targets)
    assert color_vertex(X1, mask1, 2) == color_vertex(X2, mask2, 2)


def test_color_vector_index_bijection():
    F = make_binary_field(3)
    seen = set()
    for a in range(8):
        for b in range(8):
            cv = ColorVector(field=F, entries=(a, b))
            assert ColorVector.from_index(F, cv.index, 2) == cv
            seen.add(cv.index)
    assert seen == set(range(64))


def test_color_all_counts():
    X = build_ground_set(3, 2, FULL_FIELD)
    rows, distinct = color_all(X, 3, 2)
    assert len(rows) == 56 and distinct <= 64

    X = build_ground_set(3, 1, FIELD_MINUS_ZERO)
    rows, distinct = color_all(X, 3, 1)
    assert len(rows) == 35 and distinct <= 8

    X = build_ground_set(5, 2, FIELD_MINUS_SUBFIELD, t_prime=2)
    rows, distinct = color_all(X, 5, 2)
    assert len(rows) == 792 and distinct <= 256


def test_clique_witness():
    for k, r in [(3, 2), (3, 1), (4, 2)]:
        members = clique_witness(k, r)
        assert len(members) == comb(k + 2 * r, r)
        base = (1 << (k - r)) - 1
        assert all(m & base == base for m in members)
        spec = GraphSpec(n=2 * k + r, k=k, variant=KNESER_SQUARE)
        assert all(
            adjacent(spec, a, b) for i, a in enumerate(members) for b in members[i + 1 :]
        )


def test_ground_set_json_round_trip():
    for X in (
        build_ground_set(3, 2, FULL_FIELD),
        build_ground_set(5, 2, FIELD_MINUS_SUBFIELD, t_prime=2),
        build_ground_set(4, 2, PRIME_PREFIX),
    ):
        Y = ground_set_from_json(X.to_json())
        assert Y == X
    assert ground_set_from_json(
        {"field": {"kind": "prime", "p": 5}, "elements": [0, 1, 2]}
    ).construction == EXPLICIT
