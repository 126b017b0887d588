import itertools
import math
import random

import pytest

from abelian_cs.homology import (
    HomologyGroup,
    determinant,
    first_homology,
    is_homologically_trivial,
    is_homology_sphere,
    link_homology_class,
    matmul,
    smith_normal_form,
    solve_integer_system,
)
from abelian_cs.links import AmbientLinkPresentation, ColouredLinkingData, ValidationError

from gen import random_symmetric


def P(B, C, q):
    n = len(q)
    return AmbientLinkPresentation(B, ColouredLinkingData.from_lists([[0] * n for _ in range(n)], q), C)


def diag(snf):
    return snf.diagonal


class TestSmith:
    def test_scalar(self):
        assert smith_normal_form([[5]]).D == ((5,),)

    def test_det5(self):
        assert diag(smith_normal_form([[2, 1], [1, 3]])) == (1, 5)

    def test_zero(self):
        assert smith_normal_form([[0]]).D == ((0,),)

    def test_rectangular(self):
        snf = smith_normal_form([[2, 4, 4], [-6, 6, 12]])
        assert diag(snf) == (2, 6)
        assert matmul(matmul(snf.U, [[2, 4, 4], [-6, 6, 12]]), snf.V) == snf.D

    def test_random_reconstruction(self):
        rng = random.Random(1)
        for _ in range(200):
            n = rng.randint(1, 5)
            B = random_symmetric(rng, n, 4)
            snf = smith_normal_form(B)
            assert matmul(matmul(snf.U, B), snf.V) == snf.D
            assert matmul(matmul(snf.U_inv, snf.D), snf.V_inv) == tuple(map(tuple, B))
            assert abs(determinant(snf.U)) == abs(determinant(snf.V)) == 1
            d = snf.diagonal
            assert all(x >= 0 for x in d)
            assert all(b % a == 0 for a, b in zip(d, d[1:]) if a)
            # zeros only at the tail
            assert list(d) == sorted(d, key=lambda x: (x == 0,))
            det = determinant(B)
            if det:
                assert abs(det) == math.prod(d)


class TestFirstHomology:
    def test_sphere(self):
        assert first_homology([]).is_trivial()
        assert str(first_homology([])) == "0"

    def test_lens(self):
        assert first_homology([[5]]) == HomologyGroup(0, (5,))

    def test_three_torus(self):
        h = first_homology([[0] * 3] * 3)
        assert h == HomologyGroup(3, ())
        assert str(h) == "Z^3"

    def test_asymmetric(self):
        with pytest.raises(ValidationError):
            first_homology([[1, 2], [3, 4]])

    def test_bad_chain(self):
        with pytest.raises(ValueError):
            HomologyGroup(0, (4, 6))


class TestHomologySphere:
    def test_split(self):
        assert is_homology_sphere([[1, 0, 0], [0, -1, 0], [0, 0, 1]])

    def test_lens(self):
        assert not is_homology_sphere([[5]])

    def test_det5(self):
        assert not is_homology_sphere([[2, 1], [1, 3]])

    def test_random_agreement(self):
        rng = random.Random(8)
        hits = 0
        for _ in range(300):
            B = random_symmetric(rng, rng.randint(1, 5), 4)
            sphere = is_homology_sphere(B)
            assert sphere == first_homology(B).is_trivial() == (abs(determinant(B)) == 1)
            hits += sphere
        assert hits > 0


class TestLinkClass:
    def test_zero_cross(self):
        assert link_homology_class(P([[1]], [[0]], [3])) == (0,)

    def test_product(self):
        assert link_homology_class(P([[1]], [[3]], [2])) == (6,)

    def test_two_surgery(self):
        assert link_homology_class(P([[1, 0], [0, 1]], [[1, 0], [2, 1]], [1, 1])) == (1, 3)


class TestTriviality:
    def test_zero_class(self):
        assert is_homologically_trivial(P([[3]], [[0]], [1])) == (True, (0,))

    def test_s2xs1(self):
        p = P([[0]], [[1]], [1])
        assert is_homologically_trivial(p) == (False, None)
        for k in range(1, 5):
            assert is_homologically_trivial(p, 2 * k)[0] is False

    def test_lens_witness(self):
        assert is_homologically_trivial(P([[5]], [[10]], [1])) == (True, (2,))

    def test_random_witnesses(self):
        rng = random.Random(4)
        found = 0
        for _ in range(400):
            n = rng.randint(1, 4)
            B = random_symmetric(rng, n, 4)
            t = [rng.randint(-6, 6) for _ in range(n)]
            for modulus in (None, 2, 4, 6):
                sol = solve_integer_system(B, t, modulus)
                Bn = [sum(B[i][j] * sol[j] for j in range(n)) for i in range(n)] if sol else None
                if sol is None:
                    # brute force over a box confirms there is no solution mod m
                    if modulus:
                        assert not any(
                            all((sum(B[i][j] * x[j] for j in range(n)) - t[i]) % modulus == 0 for i in range(n))
                            for x in itertools.product(range(modulus), repeat=n)
                        )
                    continue
                found += 1
                if modulus is None:
                    assert Bn == t
                else:
                    assert all((a - b) % modulus == 0 for a, b in zip(Bn, t))
                    assert all(-modulus // 2 < x <= modulus // 2 for x in sol)
        assert found > 100
