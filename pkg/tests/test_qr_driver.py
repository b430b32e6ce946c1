import numpy as np
import pytest
from hypothesis import given, strategies as st

from colleague_qr.chebyshev import ChebSeries, colleague_generators, monic_normalize
from colleague_qr.experiments import (
    MULT_GRID,
    RAND_NORMS,
    SIN_GRID,
    WILK_GRID,
    f_sin,
    multiple_root,
    random_coefficients,
    sample_series,
    wilkinson,
    yuji,
)
from colleague_qr.generators import HessGenerators, colleague_plus_rank1, reconstruct_hermitian
from colleague_qr.oracle import dense_eig
from colleague_qr.qr_driver import (
    ConvergenceError,
    EigOptions,
    default_epsilon,
    eig,
    eig_shifted,
    eig_unshifted,
    wilkinson_pair,
)

from _helpers import U, match_error, random_generators, seeded_rng


def chebyshev_roots(n):
    k = np.arange(1, n + 1)
    return np.sort(np.cos((2 * k - 1) * np.pi / (2 * n)))


def test_one_by_one():
    g = HessGenerators([7.0], [], [2.0], [3.0])
    for f in (eig_shifted, eig_unshifted):
        assert f(g).eigenvalues[0] == 13


@pytest.mark.parametrize("a, b", [(0.3, 1.7), (0.0, 1.0), (1.0, 0.5)])
def test_symmetric_two_by_two(a, b):
    g = HessGenerators([a, a], [b], [0, 0], [0, 0])
    lam = np.sort(eig_shifted(g).eigenvalues.real)
    np.testing.assert_allclose(lam, [a - b, a + b], atol=1e-14)


def test_symmetric_two_by_two_unshifted():
    # the unshifted iteration contracts by |a-b|/|a+b| per sweep, so keep it small
    g = HessGenerators([1.0, 1.0], [0.5], [0, 0], [0, 0])
    np.testing.assert_allclose(np.sort(eig_unshifted(g).eigenvalues.real), [0.5, 1.5], atol=1e-14)


@given(seeded_rng())
def test_shifted_two_by_two_needs_one_sweep(rng):
    # ||p q^*|| <= ||A||: the deflation tolerance is relative to ||A|| only, so a
    # dominant rank-1 part can leave a residual above it after one exact sweep
    g = random_generators(rng, 2, float(rng.uniform(0.1, 1.0)))
    res = eig_shifted(g)
    assert res.total_sweeps <= 1
    m = colleague_plus_rank1(g)
    tr, det = np.trace(m), np.linalg.det(m)
    disc = np.sqrt(tr * tr - 4 * det)
    assert match_error(res.eigenvalues, [(tr + disc) / 2, (tr - disc) / 2]) <= 1e-13


def test_small_colleague_shifted():
    res = eig_shifted(colleague_generators([0.0, 2.0, 0.0]))
    np.testing.assert_allclose(np.sort(res.eigenvalues.real), [-0.5, 0, 0.5], atol=1e-13)
    assert np.abs(res.eigenvalues.imag).max() <= 1e-13


def test_unshifted_cannot_split_equal_moduli():
    # +-1/2 have equal modulus, so the unshifted iteration stalls there
    with pytest.raises(ConvergenceError) as info:
        eig_unshifted(colleague_generators([0.0, 2.0, 0.0]))
    assert info.value.index == 1


def test_unshifted_on_distinct_moduli():
    roots = np.array([-0.7, 0.2, 0.45])
    a = np.polynomial.chebyshev.chebfromroots(roots)
    c, _ = monic_normalize(ChebSeries(a))
    res = eig_unshifted(colleague_generators(c))
    np.testing.assert_allclose(np.sort(res.eigenvalues.real), roots, atol=1e-12)


def test_chebyshev_points_exact():
    res = eig(colleague_generators(np.zeros(50)))
    lam = res.eigenvalues
    assert np.abs(lam.imag).max() <= 1e-13
    assert np.abs(np.sort(lam.real) - chebyshev_roots(50)).max() <= 1e-13


def test_yuji_has_seven_real_eigenvalues_and_one_huge():
    c, _ = monic_normalize(yuji())
    lam = eig(colleague_generators(c)).eigenvalues
    small = lam[np.abs(lam) < 2]
    assert small.size == 7 and np.abs(small.imag).max() < 1e-10
    big = lam[np.abs(lam) >= 2]
    assert big.size == 1 and 1e14 < abs(big[0]) < 1e16


def test_default_epsilon():
    g = colleague_generators(np.ones(30))
    a_norm = np.linalg.norm(reconstruct_hermitian(g))
    assert default_epsilon(g) == pytest.approx(4 * 30 * U * a_norm)
    assert 1e-13 <= default_epsilon(g) <= 1e-12
    g10 = HessGenerators(10 * g.d, 10 * g.beta, np.sqrt(10) * g.p, np.sqrt(10) * g.q)
    assert default_epsilon(g10) == pytest.approx(10 * default_epsilon(g))


def test_options_validation():
    with pytest.raises(ValueError):
        EigOptions(epsilon=0.0)
    with pytest.raises(ValueError):
        EigOptions(mode="implicit")
    with pytest.raises(ValueError):
        EigOptions(max_iters_per_eigenvalue=0)


def test_budget_exhaustion_is_reported():
    g = colleague_generators(np.random.default_rng(0).standard_normal(20))
    with pytest.raises(ConvergenceError):
        eig(g, EigOptions(max_iters_per_eigenvalue=1, warmup_unshifted_sweeps=0))


def test_zero_matrix():
    g = HessGenerators(np.zeros(4), np.zeros(3), np.zeros(4), np.zeros(4))
    np.testing.assert_array_equal(eig(g).eigenvalues, 0)


def test_wilkinson_pair_picks_closest_to_corner():
    near, far = wilkinson_pair(1.0 + 0j, 1.0 + 0j, 1.0 + 0j, 3.0 + 0j)
    # eigenvalues 2 -+ sqrt 2
    assert near == pytest.approx(2 - np.sqrt(2)) and far == pytest.approx(2 + np.sqrt(2))


@given(seeded_rng(), st.integers(2, 12), st.sampled_from([1.0, 1e3, 1e6]))
def test_matches_dense_oracle(rng, n, scale):
    g = random_generators(rng, n, scale)
    lam = eig(g).eigenvalues
    ref = dense_eig(colleague_plus_rank1(g))
    assert match_error(lam, ref) <= 1e-8 * max(1.0, np.abs(ref).max())


@given(seeded_rng(), st.integers(2, 12), st.sampled_from([1.0, 1e3, 1e6]))
def test_eigenvalue_sum_is_trace(rng, n, scale):
    g = random_generators(rng, n, scale)
    tr = np.trace(colleague_plus_rank1(g))
    assert abs(eig(g).eigenvalues.sum() - tr) <= 1e-10 * max(1.0, scale * scale)


def _family_sweeps(series):
    total = size = 0
    for s in series:
        c, _ = monic_normalize(s)
        total += eig(colleague_generators(c)).total_sweeps
        size += c.size
    return total / size


@pytest.mark.parametrize("family", ["wilk", "mult", "sin", "yuji", "rand"])
def test_average_sweeps_per_eigenvalue(family):
    series = {
        "wilk": lambda: [sample_series(wilkinson(d), n) for d, n in WILK_GRID],
        "mult": lambda: [sample_series(multiple_root(d), n) for d, n in MULT_GRID],
        "sin": lambda: [sample_series(f_sin, n) for n in SIN_GRID],
        "yuji": lambda: [yuji()],
        "rand": lambda: [random_coefficients(30, cn, 0, j) for cn in RAND_NORMS for j in range(20)],
    }[family]()
    assert _family_sweeps(series) <= 4
