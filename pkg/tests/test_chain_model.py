import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from krawtchouk_revival import ChainSpec, build_hamiltonian, build_j_operator, coupling_profile, nn_coupling
from krawtchouk_revival.chain_model import as_fraction

from strategies import specs


def test_nn_coupling_examples():
    assert nn_coupling(4, 2) == pytest.approx(0.5 * math.sqrt(6), rel=1e-15)
    assert nn_coupling(4, 0) == 0.0
    assert nn_coupling(4, 5) == 0.0
    assert nn_coupling(5, 2) == nn_coupling(5, 4) == pytest.approx(0.5 * math.sqrt(8))
    with pytest.raises(ValueError):
        nn_coupling(4, 6)
    with pytest.raises(ValueError):
        nn_coupling(4, -1)


@pytest.mark.parametrize(
    "text, expected",
    [("3", Fraction(3)), ("-6/4", Fraction(-3, 2)), (" 2/7 ", Fraction(2, 7)), (5, Fraction(5))],
)
def test_as_fraction(text, expected):
    assert as_fraction(text) == expected


@pytest.mark.parametrize("bad", ["", "1/0", "a", "1.5", "1/2/3"])
def test_as_fraction_rejects(bad):
    with pytest.raises(ValueError):
        as_fraction(bad)


def test_as_fraction_rejects_float():
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_spec_validation():
    with pytest.raises(ValueError):
        ChainSpec(0, 1, 1)
    spec = ChainSpec(3, "1/2", 2)
    assert spec.alpha == Fraction(1, 2) and spec.beta == 2
    assert spec.to_dict() == {"N": 3, "alpha": "1/2", "beta": "2"}


def test_profile_n1():
    prof = coupling_profile(ChainSpec(1, 1, 1))
    np.testing.assert_allclose(prof.j1, [0.5])
    assert prof.j2.shape == (0,)
    np.testing.assert_allclose(prof.b, [0.25, 0.25])


def test_profile_nn_limit():
    prof = coupling_profile(ChainSpec(2, 0, 1))
    np.testing.assert_allclose(prof.j1, [math.sqrt(2) / 2] * 2)
    np.testing.assert_array_equal(prof.j2, [0.0])
    np.testing.assert_array_equal(prof.b, [0.0, 0.0, 0.0])


def test_profile_fields_n3():
    prof = coupling_profile(ChainSpec(3, 1, 0))
    np.testing.assert_allclose(prof.b, [0.75, 1.75, 1.75, 0.75], atol=1e-15)
    np.testing.assert_array_equal(prof.j1, 0.0)
    # J^(2)_2 = J_1 J_2 = sqrt(3)/2, J^(2)_3 = J_2 J_3 = sqrt(3)/2
    np.testing.assert_allclose(prof.j2, [math.sqrt(3) / 2] * 2)


def test_profile_rows_fill_boundaries():
    rows = coupling_profile(ChainSpec(3, 1, 1)).rows()
    assert [r[0] for r in rows] == [0, 1, 2, 3]
    assert rows[0][1] == 0.0 and rows[0][2] == 0.0 and rows[1][2] == 0.0


@given(specs())
def test_profile_mirror_symmetry(spec):
    prof = coupling_profile(spec)
    np.testing.assert_allclose(prof.j1, prof.j1[::-1], atol=1e-12)
    np.testing.assert_allclose(prof.j2, prof.j2[::-1], atol=1e-12)
    np.testing.assert_allclose(prof.b, prof.b[::-1], atol=1e-12)


def test_hamiltonian_examples():
    np.testing.assert_allclose(build_hamiltonian(ChainSpec(1, 1, 1)), [[0.25, 0.5], [0.5, 0.25]])
    H = build_hamiltonian(ChainSpec(2, 0, 1))
    r = math.sqrt(2) / 2
    np.testing.assert_allclose(H, [[0, r, 0], [r, 0, r], [0, r, 0]], atol=1e-15)


def test_j_operator_examples():
    np.testing.assert_allclose(build_j_operator(1), [[0, 0.5], [0.5, 0]])
    np.testing.assert_allclose(np.diag(build_j_operator(2), 1), [math.sqrt(2) / 2] * 2)


@pytest.mark.parametrize("N", [1, 2, 5, 12, 25, 40])
def test_j_spectrum_is_shifted_integer_grid(N):
    vals = np.linalg.eigvalsh(build_j_operator(N))
    np.testing.assert_allclose(vals, np.arange(N + 1) - N / 2, atol=1e-10)


@settings(max_examples=200)
@given(specs())
def test_hamiltonian_structure_and_operator_identity(spec):
    H = build_hamiltonian(spec)
    J = build_j_operator(spec.N)
    assert np.abs(H - H.T).max() <= 1e-15
    rows, cols = np.indices(H.shape)
    assert np.all(H[np.abs(rows - cols) > 2] == 0)
    target = float(spec.alpha) * (J @ J) + float(spec.beta) * J
    assert np.abs(H - target).max() < 1e-12
