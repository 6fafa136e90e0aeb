"""The count kernel against brute force, and the published f-identities.

The enumerator here is written from scratch on itertools.combinations so
that neither the closed form nor the package's mask-walking kernels can
agree with it by construction.
"""

import itertools
import math

import pytest

from blockcheb import _subsetcount_py
from blockcheb.blockcount import (BACKEND, ENUMERATION_BOUND, IDENTITY_IDS,
                                  check_identity, f_closed, f_oracle,
                                  sweep_oracle_vs_closed)
from blockcheb.errors import GroundSetTooLargeError, InvalidConfigError


def _independent_count(n: int, k: int, m: int, p: int) -> int:
    """Third route: label every element, enumerate combinations."""
    elements = [("block", b, i) for b in range(n) for i in range(p)]
    elements += [("extra", 0, i) for i in range(m)]
    size = n + k
    if size < 0 or size > len(elements):
        return 0
    count = 0
    for subset in itertools.combinations(elements, size):
        hit = {e[1] for e in subset if e[0] == "block"}
        if len(hit) == n:
            count += 1
    return count


def test_closed_form_against_independent_enumerator():
    for p in range(1, 4):
        for n in range(0, 8 // p + 1):
            for m in range(0, 8 - n * p + 1):
                for size in range(0, n * p + m + 1):
                    k = size - n
                    want = _independent_count(n, k, m, p)
                    assert f_closed(n, k, m, p) == want
                    assert f_oracle(n, k, m, p) == want


def test_frozen_example_counts():
    assert f_closed(1, 0, 0, 2) == 2
    assert f_closed(1, 1, 1, 2) == 3
    assert f_closed(2, 1, 0, 2) == 4
    assert f_closed(2, 0, 0, 2) == 4
    assert f_closed(0, 0, 5, 3) == 1
    assert f_closed(3, 0, 0, 2) == 8


def test_degenerate_configurations():
    # With no size-p blocks nothing is constrained: plain C(m, k).
    for k in range(-1, 7):
        want = math.comb(4, k) if 0 <= k <= 4 else 0
        assert f_closed(0, k, 4, 3) == want
    assert f_closed(0, 0, 0, 1) == 1


def test_singleton_blocks_reduce_to_binomial():
    # p = 1 forces every block element in, leaving C(m, k) free choices.
    for n in range(0, 5):
        for m in range(0, 5):
            for k in range(-1, m + 2):
                want = math.comb(m, k) if 0 <= k <= m else 0
                assert f_closed(n, k, m, 1) == want


def test_transversal_count_is_p_to_the_n():
    for p in range(1, 5):
        for n in range(0, 5):
            assert f_closed(n, 0, 0, p) == p ** n


def test_zero_outside_achievable_sizes():
    assert f_closed(2, -3, 0, 2) == 0
    assert f_closed(2, 5, 0, 2) == 0
    assert f_oracle(2, -3, 0, 2) == 0
    assert f_oracle(2, 5, 0, 2) == 0


def test_default_sweep_is_clean():
    checked, failures = sweep_oracle_vs_closed(max_ground=10, p_max=4)
    assert checked == 1419
    assert failures == []


def test_oracle_respects_enumeration_bound():
    assert ENUMERATION_BOUND == 24
    assert f_oracle(10, 0, 0, 2) == f_closed(10, 0, 0, 2)
    with pytest.raises(GroundSetTooLargeError):
        f_oracle(12, 0, 1, 2)


def test_invalid_configurations_rejected():
    with pytest.raises(InvalidConfigError):
        f_closed(-1, 0, 0, 2)
    with pytest.raises(InvalidConfigError):
        f_closed(0, 0, -1, 2)
    with pytest.raises(InvalidConfigError):
        f_closed(0, 0, 0, 0)
    with pytest.raises(InvalidConfigError):
        f_oracle(1, 0, 0, -3)


# ------------------------------------------------------------ identities

def test_identity_sweep_counts_and_outcomes():
    expectations = {"E1": (2204, True), "E2": (8816, True),
                    "E4": (1203, True), "E3-corrected": (852, True)}
    for identity_id, (checked, passed) in expectations.items():
        report = check_identity(identity_id, max_ground=12)
        assert report.checked == checked
        assert report.passed is passed


def test_identity_e3_printed_fails_with_canonical_witness():
    report = check_identity("E3-printed", max_ground=10)
    assert not report.passed
    assert {"n": 2, "k": 0, "m": 0, "p": 2,
            "lhs": 4, "rhs": 2} in report.failures


def test_identity_report_ranges():
    assert check_identity("E2", max_ground=6, t_max=2).ranges == \
        {"max_ground": 6, "p_max": 4, "t_max": 2}
    assert "t_max" not in check_identity("E1", max_ground=6).ranges


def test_unknown_identity_rejected():
    assert set(IDENTITY_IDS) == \
        {"E1", "E2", "E3-printed", "E3-corrected", "E4"}
    with pytest.raises(ValueError):
        check_identity("E9")


# --------------------------------------------------------------- kernels

def test_backend_is_declared():
    assert BACKEND in ("c-extension", "pure-python")


def test_compiled_and_fallback_kernels_agree():
    compiled = pytest.importorskip("blockcheb._subsetcount")
    for p in (1, 2, 3):
        for n in range(0, 4):
            for m in range(0, 12 - n * p + 1):
                assert list(compiled.count_intersecting_by_size(n, p, m)) == \
                    list(_subsetcount_py.count_intersecting_by_size(n, p, m))


def test_fallback_kernel_shape():
    counts = _subsetcount_py.count_intersecting_by_size(2, 2, 1)
    assert len(counts) == 6
    assert sum(counts) == sum(f_closed(2, s - 2, 1, 2) for s in range(6))
