import random

import pytest

from abelian_cs.cyclotomic import root_of_unity
from abelian_cs.links import (
    AmbientLinkPresentation,
    ColouredLinkingData,
    PreconditionError,
    ValidationError,
    disjoint_union,
    equivalent_knot,
    reduce_colours,
    satellite_presentation,
    simplicial_satellite,
    sum_components,
)
from abelian_cs.observables import observable_s3

from gen import float_observable_s3, random_link

L = ColouredLinkingData.from_lists


def test_asymmetric_matrix_names_indices():
    with pytest.raises(ValidationError, match=r"\(1,2\).*\(2,1\)"):
        L([[0, 2], [1, 0]])


def test_colour_length_mismatch():
    with pytest.raises(ValidationError):
        ColouredLinkingData(((0,),), (1, 2))


def test_assembled_matrix_is_symmetric():
    p = AmbientLinkPresentation([[2, 1], [1, 3]], L([[0]], [2]), [[1], [4]])
    A = p.assembled()
    assert A == ((2, 1, 1), (1, 3, 4), (1, 4, 0))
    assert all(A[i][j] == A[j][i] for i in range(3) for j in range(3))
    assert p.cross_charge() == (2, 8)


def test_bad_cross_shape():
    with pytest.raises(ValidationError):
        AmbientLinkPresentation([[1]], L([[0]], [1]), [[1, 2]])


class TestSatellite:
    def test_zero_colour_deleted(self):
        assert simplicial_satellite(L([[0]], [0])).size == 0

    def test_band_copies(self):
        sat = simplicial_satellite(L([[0, 1], [1, 0]], [2, 1]))
        assert sat.matrix == ((0, 0, 1), (0, 0, 1), (1, 1, 0))
        assert sat.colours == (1, 1, 1)
        for k in range(1, 6):
            assert observable_s3(sat, k) == observable_s3(L([[0, 1], [1, 0]], [2, 1]), k)

    def test_framed_copies(self):
        link = L([[3]], [2])
        sat = simplicial_satellite(link)
        assert sat.matrix == ((3, 3), (3, 3))
        assert link.quadratic_form() == sat.quadratic_form() == 12

    def test_negative_colour_reverses(self):
        sat = simplicial_satellite(L([[1, 2], [2, 0]], [-2, 1]))
        assert sat.colours == (1, 1, 1)
        assert sat.matrix == ((1, 1, -2), (1, 1, -2), (-2, -2, 0))

    def test_presentation_satellite_copies_cross(self):
        p = AmbientLinkPresentation([[1]], L([[0]], [-2]), [[3]])
        sat = satellite_presentation(p)
        assert sat.cross == ((-3, -3),)
        assert sat.cross_charge() == p.cross_charge()


class TestSumComponents:
    def test_hopf(self):
        out = sum_components(L([[0, 1], [1, 0]], [1, 1]), 0, 1)
        assert out.matrix == ((2,),) and out.colours == (1,)

    def test_split(self):
        assert sum_components(L([[1, 0], [0, 1]]), 0, 1).matrix == ((2,),)

    def test_three_components(self):
        out = sum_components(L([[0, 1, 2], [1, 0, 0], [2, 0, 5]]), 0, 1)
        assert out.matrix == ((2, 2), (2, 5))

    @pytest.mark.parametrize(
        "link, i, j",
        [(L([[0, 1], [1, 0]], [1, 2]), 0, 1), (L([[0]]), 0, 0), (L([[0, 0], [0, 0]]), 0, 2)],
    )
    def test_preconditions(self, link, i, j):
        with pytest.raises(PreconditionError):
            sum_components(link, i, j)


class TestEquivalentKnot:
    def test_empty(self):
        assert equivalent_knot(ColouredLinkingData.empty()) == 0

    def test_hopf(self):
        assert equivalent_knot(L([[0, 1], [1, 0]], [1, 1])) == 2

    def test_coloured_unknot(self):
        assert simplicial_satellite(L([[1]], [3])).matrix == ((1, 1, 1),) * 3
        assert equivalent_knot(L([[1]], [3])) == 9


class TestDisjointUnion:
    def test_empty(self):
        a = L([[1, 2], [2, 0]], [1, 3])
        assert disjoint_union(a, ColouredLinkingData.empty()) == a

    def test_blocks(self):
        assert disjoint_union(L([[1]]), L([[-1]])).matrix == ((1, 0), (0, -1))

    def test_observable_factorizes(self):
        rng = random.Random(3)
        for _ in range(50):
            a, b = random_link(rng, 3), random_link(rng, 3)
            k = rng.randint(1, 5)
            u = disjoint_union(a, b)
            assert observable_s3(u, k).value == observable_s3(a, k).value * observable_s3(b, k).value


class TestReduceColours:
    def test_basic(self):
        for k in range(1, 5):
            assert reduce_colours(L([[0]], [2 * k + 1]), k).colours == (1,)
        assert reduce_colours(L([[0]], [-1]), 2).colours == (3,)

    def test_observable_unchanged(self):
        rng = random.Random(11)
        for _ in range(100):
            link, k = random_link(rng), rng.randint(1, 5)
            assert observable_s3(reduce_colours(link, k), k) == observable_s3(link, k)


def test_properties_on_random_links():
    rng = random.Random(2024)
    for _ in range(300):
        link = random_link(rng)
        Q = link.quadratic_form()
        assert simplicial_satellite(link).quadratic_form() == Q
        assert equivalent_knot(link) == Q
        for j in range(link.size):
            assert link.reverse_orientation(j).quadratic_form() == Q
        for i in range(link.size):
            for j in range(i + 1, link.size):
                if link.colours[i] == link.colours[j]:
                    assert sum_components(link, i, j).quadratic_form() == Q


def test_observable_s3_matches_float_oracle():
    rng = random.Random(5)
    for _ in range(100):
        link, k = random_link(rng), rng.randint(1, 5)
        exact = observable_s3(link, k).value
        assert abs(exact.embed() - float_observable_s3(link.matrix, link.colours, k)) < 1e-9
        assert exact == root_of_unity(4 * k, -equivalent_knot(link))
