"""Curve systems, action validation, and the two ell solvers."""

import random

import pytest

from dpforms import (
    PLANE,
    GaloisAction,
    InvalidActionError,
    ParameterError,
    SystemSizeError,
    anticanonical_class,
    brute_force_ell,
    build_curve_system,
    build_model,
    compute_ell,
    curves_meeting_q,
    distinguished_e0,
    orbit_partition,
    q_point_forced,
    standard_curve_system,
    validate_action,
)
from dpforms.verification import _random_plane_action


def _plane_system(m=2):
    return standard_curve_system(build_model(m, m + 4, PLANE))


def test_standard_plane_system():
    system = _plane_system()
    assert len(system) == 12
    assert system.q_incidence == (1,) * 12
    named = system.model.distinguished
    assert system.curves[0].coeffs == named["E_1"].coeffs
    assert system.curves[6].coeffs == named["E_1'"].coeffs
    assert system.pair_gram[0][6] == 1
    assert system.pair_gram[0][7] == 0
    assert system.pair_gram[0][0] == -1


def test_standard_hirzebruch_system():
    system = standard_curve_system(build_model(3, 4))
    assert len(system) == 4
    assert all(v == 1 for v in system.q_incidence)


def test_build_curve_system_rejects_bad_members():
    model = build_model(2, 6, PLANE)
    with pytest.raises(ParameterError):
        build_curve_system(model, [anticanonical_class(model)])
    e1 = model.distinguished["E_1"]
    with pytest.raises(ParameterError):
        build_curve_system(model, [e1, e1])
    with pytest.raises(ParameterError):
        build_curve_system(model, [])


def test_action_validation():
    with pytest.raises(ParameterError):
        GaloisAction(3, ((1, 1, 2),))
    with pytest.raises(ParameterError):
        GaloisAction(3, ((1, 2),))
    action = GaloisAction.from_one_based(3, [[2, 3, 1]])
    assert action.generators == ((2, 3, 1),)
    assert GaloisAction.trivial(2).generators == ()
    assert GaloisAction.trivial(2).degree == 2


def test_orbit_partition():
    action = GaloisAction(6, ((2, 1, 4, 3, 5, 6), (1, 2, 3, 4, 6, 5)))
    assert orbit_partition(action) == ((0, 1), (2, 3), (4, 5))
    assert orbit_partition(GaloisAction.trivial(3)) == ((0,), (1,), (2,))


def test_validate_action_reports():
    system = _plane_system()
    ok = validate_action(system, GaloisAction.trivial(12))
    assert ok.ok and ok.violations == ()
    swap_all = GaloisAction(12, ((7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6),))
    assert validate_action(system, swap_all).ok
    transpose = GaloisAction(12, ((2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12),))
    report = validate_action(system, transpose)
    assert not report.ok
    assert len(report.violations) == 4
    with pytest.raises(ParameterError):
        validate_action(system, GaloisAction.trivial(5))


def test_compute_rejects_invalid_action():
    system = _plane_system()
    bad = GaloisAction(12, ((2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12),))
    with pytest.raises(InvalidActionError) as info:
        compute_ell(system, bad)
    assert info.value.report is not None
    assert not info.value.report.ok


def test_structured_ell_values():
    system = _plane_system()
    trivial = compute_ell(system, GaloisAction.trivial(12))
    assert trivial.ell == 6
    assert trivial.witness == (0, 1, 2, 3, 4, 5)
    assert trivial.witness_orbits == ((0,), (1,), (2,), (3,), (4,), (5,))

    swap = GaloisAction(12, ((7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6),))
    swapped = compute_ell(system, swap)
    assert swapped.ell == 0 and swapped.witness == ()

    cycle = GaloisAction(12, ((2, 3, 4, 5, 6, 1, 8, 9, 10, 11, 12, 7),))
    cycled = compute_ell(system, cycle)
    assert cycled.ell == 6
    assert cycled.witness_orbits == ((0, 1, 2, 3, 4, 5),)

    half = GaloisAction(12, ((7, 2, 3, 4, 5, 6, 1, 8, 9, 10, 11, 12),))
    assert compute_ell(system, half).ell == 5


def test_structured_hirzebruch_m_plus_5():
    model = build_model(2, 7)
    named = model.distinguished
    curves = [distinguished_e0(model)]
    curves += [named["F"] - named[f"E_{i}"] for i in range(1, 8)]
    curves += [named[f"E_{i}"] for i in range(1, 8)]
    system = build_curve_system(model, curves)
    result = compute_ell(system, GaloisAction.trivial(15))
    assert result.ell == 8
    assert result.witness == (0, 1, 2, 3, 4, 5, 6, 7)
    assert brute_force_ell(system, GaloisAction.trivial(15)).ell == 8


def test_window_system_reaches_theoretical_maximum():
    system = standard_curve_system(build_model(2, 7))
    assert len(system) == 50
    assert compute_ell(system, GaloisAction.trivial(50)).ell == 8


def test_brute_force_limit():
    system = standard_curve_system(build_model(2, 7))
    with pytest.raises(SystemSizeError):
        brute_force_ell(system, GaloisAction.trivial(50))


def test_solvers_agree_randomized():
    rng = random.Random(1729)
    for m in (2, 3):
        system = _plane_system(m)
        for _ in range(15):
            action = _random_plane_action(rng, m + 4, rng.randint(1, 3))
            assert validate_action(system, action).ok
            fast = compute_ell(system, action)
            slow = brute_force_ell(system, action)
            assert fast.ell == slow.ell


def test_ell_monotone_under_coarsening():
    rng = random.Random(42)
    system = _plane_system()
    trivial_ell = compute_ell(system, GaloisAction.trivial(12)).ell
    for _ in range(10):
        one = _random_plane_action(rng, 6, 1)
        two = GaloisAction(12, one.generators + _random_plane_action(rng, 6, 1).generators)
        assert compute_ell(system, two).ell <= compute_ell(system, one).ell <= trivial_ell


def test_q_point_forced():
    assert q_point_forced(3)
    assert q_point_forced(5)
    assert not q_point_forced(2)
    assert not q_point_forced(6)
