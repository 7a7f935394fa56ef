"""Acceptance battery: one test per published criterion.

Each criterion is verified by the corresponding self-check from
dpforms.verification, which re-derives the claimed values through an
independent route (search oracle, binomial identity, monomial count,
clause-by-clause verdict recoding, exhaustive ell enumeration).  One
pass/fail line is printed per criterion; stated runtime budgets are
enforced where the criterion gives one.
"""

import time

from dpforms.verification import (
    check_anti_plurigenus,
    check_census_equivalence,
    check_ell_engine,
    check_embedding,
    check_incidence_law,
    check_lattice,
    check_plane_census,
    check_sections,
    check_verdict_table,
)


def _run(check, budget=None):
    start = time.perf_counter()
    result = check()
    elapsed = time.perf_counter() - start
    status = "PASS" if result.passed else "FAIL"
    line = f"criterion {result.number} {status}: {result.title} ({result.detail}"
    if budget is not None:
        line += f"; {elapsed:.2f}s of {budget:.0f}s budget"
    line += ")"
    print(line)
    assert result.passed, f"criterion {result.number} failed: {result.detail}"
    if budget is not None:
        assert elapsed < budget, f"criterion {result.number} took {elapsed:.2f}s (budget {budget}s)"


def test_criterion_1_census_equivalence():
    # 26 (m, n) pairs, each budgeted at 10 s
    _run(check_census_equivalence, budget=260.0)


def test_criterion_2_plane_census():
    _run(check_plane_census, budget=10.0)


def test_criterion_3_incidence_law():
    _run(check_incidence_law)


def test_criterion_4_anti_plurigenus_tables():
    _run(check_anti_plurigenus, budget=1.0)


def test_criterion_5_embedding_descriptors():
    _run(check_embedding)


def test_criterion_6_verdict_table():
    _run(check_verdict_table, budget=1.0)


def test_criterion_7_ell_engine():
    _run(check_ell_engine, budget=30.0)


def test_criterion_8_sections():
    _run(check_sections, budget=1.0)


def test_criterion_9_lattice_hygiene():
    _run(check_lattice)
