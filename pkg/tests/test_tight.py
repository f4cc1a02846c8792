import random
from itertools import product

import pytest

from bordersub import (
    DimensionMismatchError,
    Permutation,
    Support,
    TightWitness,
    apply_permutation,
    binary_cocharacter,
    build_tight_U,
    build_W,
    check_degeneration_certificate,
    check_tight_witness,
    diagonal_support,
    exhaustive_tight_search,
    find_tight_witness,
    sample_coefficients,
    tensor_from_support,
    unit_tensor,
)


def plane_support(n):
    return Support.of(n, [t for t in product(range(1, n + 1), repeat=3) if 2 * t[0] == t[1] + t[2]])


def affine_witness(n):
    """tau_A(i) = 3 - 2i, tau_B(j) = j, tau_C(k) = k - 3."""
    return TightWitness(
        n,
        tuple(3 - 2 * i for i in range(1, n + 1)),
        tuple(range(1, n + 1)),
        tuple(k - 3 for k in range(1, n + 1)),
    )


def test_affine_witness_on_plane():
    assert check_tight_witness(plane_support(3), affine_witness(3)) is True
    assert affine_witness(3).tau_a == (1, -1, -3)


def test_injectivity_required():
    w = TightWitness(3, (0, 0, 0), (1, 2, 3), (-1, -2, -3))
    assert not check_tight_witness(plane_support(3), w)


def test_empty_support_vacuous():
    assert check_tight_witness(Support.of(2, []), TightWitness(2, (0, 1), (5, 7), (2, 3)))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        check_tight_witness(plane_support(2), affine_witness(3))


def test_find_witness_on_plane_all_n():
    for n in range(1, 7):
        w = find_tight_witness(plane_support(n))
        assert w is not None
        assert check_tight_witness(plane_support(n), w)
        # canonical normalization
        assert w.tau_c[n - 1] == 0


def test_find_witness_deterministic():
    a = find_tight_witness(plane_support(4))
    b = find_tight_witness(plane_support(4))
    assert a == b


def test_forced_collision_not_tight():
    assert find_tight_witness(Support.of(3, [(1, 1, 1), (1, 1, 2)])) is None


def test_W3_plus_diagonal_not_tight():
    S = build_W(3, "W").union(diagonal_support(3))
    assert find_tight_witness(S) is None
    assert exhaustive_tight_search(S) is False


def test_oracle_agreement_all_n2_supports():
    cube = list(product((1, 2), repeat=3))
    for mask in range(256):
        S = Support.of(2, [t for b, t in enumerate(cube) if mask >> b & 1])
        assert (find_tight_witness(S) is not None) == exhaustive_tight_search(S)


def test_permutation_equivariance():
    rng = random.Random(19)
    cube = list(product((1, 2, 3), repeat=3))
    for _ in range(30):
        S = Support.of(3, rng.sample(cube, rng.randint(1, 9)))
        tight = find_tight_witness(S) is not None
        for sigma in Permutation.all(3):
            assert (find_tight_witness(apply_permutation(sigma, S)) is not None) == tight


def test_plane_tensor_doubly_certified():
    # tight witness and degeneration certificate coexist for n <= 5
    for n in range(1, 6):
        plane = plane_support(n)
        w = find_tight_witness(plane)
        assert w is not None
        off = build_tight_U(n)
        assert off.triples == plane.difference(diagonal_support(n)).triples
        T = unit_tensor(n) + tensor_from_support(off, sample_coefficients(off, seed=n))
        assert T.support().triples <= plane.triples
        assert check_degeneration_certificate(T, binary_cocharacter(n)).valid


def test_witness_json_round_trip():
    w = affine_witness(4)
    assert TightWitness.from_json(w.to_json()) == w
