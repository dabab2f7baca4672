"""Acceptance gate: every release criterion, one test each, at its stated
tolerance.  Run with `pytest tests/test_acceptance.py -v -s` to see one
PASS line per criterion."""

import random
import time

import pytest

from fuzzrel import (
    ApproximationStatus,
    Attainability,
    FuzzySystem,
    ImplicationKind,
    MaxTSystem,
    bisect_infimum,
    build_approximation,
    check_consistency,
    closure,
    distance_report,
    generate_random_system,
    godel_distance,
    godel_threshold,
    goguen_distance,
    goguen_threshold,
    luka_distance,
    luka_threshold,
    max_t_compose,
    maxt_closure,
    maxt_distance,
    shifted_bounds,
    sup_distance,
    tolerance_membership,
    transpose,
    verify_lowest,
)
from fuzzrel.algebra import leq
from fuzzrel.oracle import exact_maxt_distance, exact_maxt_membership, exact_membership

SHARED = ((0.6, 0.49), (0.26, 0.9))

# Membership re-tested exactly at a distance compares quantities equal in
# exact arithmetic; this slack absorbs their float drift (see README).
SLACK = 1e-9


def _pass(number: int, label: str, detail: str = ""):
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {number:02d} {label}: PASS{suffix}")


def _sized_instances(master_seed: int, count: int, kind: ImplicationKind):
    master = random.Random(master_seed)
    for _ in range(count):
        m, n = master.randint(1, 5), master.randint(1, 5)
        yield generate_random_system(m, n, kind, master.randrange(2**32), decimals=2)


def test_criterion_01_consistency_regression():
    system = FuzzySystem(SHARED, (0.58, 0.88), ImplicationKind.GODEL)
    result = check_consistency(system)
    assert result.consistent
    assert result.residual == 0.0

    best = min(
        _timed(lambda: check_consistency(system)) for _ in range(10)
    )
    assert best < 1e-3, f"consistency check took {best * 1e3:.3f} ms"
    _pass(1, "consistency-regression", f"residual 0, {best * 1e6:.0f} us")


def _timed(thunk) -> float:
    start = time.perf_counter()
    thunk()
    return time.perf_counter() - start


def test_criterion_02_godel_distance():
    system = FuzzySystem(SHARED, (0.1, 0.4), ImplicationKind.GODEL)
    report = godel_distance(system)
    row = report.rows[0]
    assert row.cells[0].theta == pytest.approx(-0.5, abs=1e-12)
    assert row.cells[1].theta == pytest.approx(-0.09, abs=1e-12)
    assert row.cells[0].zeta == pytest.approx(0.15, abs=1e-12)
    assert row.cells[1].zeta == pytest.approx(0.15, abs=1e-12)
    assert row.tau_j == pytest.approx(0.15, abs=1e-12)
    assert row.nabla_j == pytest.approx(0.15, abs=1e-12)
    _pass(2, "godel-distance", "row 1 distance 0.15")


def test_criterion_03_godel_infimum_pathology():
    system = FuzzySystem(((0.41, 0.07), (0.29, 0.31)), (0.88, 0.46), ImplicationKind.GODEL)
    report = godel_distance(system)
    assert report.rows[0].nabla_j == pytest.approx(0.12, abs=1e-12)
    assert report.rows[1].nabla_j == pytest.approx(0.15, abs=1e-12)
    assert report.nabla == pytest.approx(0.15, abs=1e-12)
    assert report.verdict is Attainability.INFIMUM
    result = build_approximation(system, report)
    assert result.status is ApproximationStatus.APPROXIMATION_SET_EMPTY
    _pass(3, "godel-infimum-pathology", "distance 0.15 unattained, empty set")


def test_criterion_04_goguen_distance():
    system = FuzzySystem(SHARED, (0.1, 0.4), ImplicationKind.GOGUEN)
    report = goguen_distance(system)
    row = report.rows[0]
    assert row.cells[0].theta == pytest.approx(-0.9, abs=1e-12)
    # displayed as -0.14 in two-decimal write-ups; exact value recomputed
    assert row.cells[1].theta == pytest.approx(0.4 - 0.49 / 0.9, abs=1e-12)
    assert row.cells[1].theta == pytest.approx(-0.14, abs=5e-3)
    assert row.cells[0].zeta == pytest.approx(0.05, abs=5e-3)
    assert row.cells[0].zeta == pytest.approx(0.044 / 0.86, abs=1e-12)
    assert row.cells[1].zeta == pytest.approx(0.22, abs=5e-3)
    assert row.cells[1].zeta == pytest.approx(0.311 / 1.39, abs=1e-12)
    assert row.nabla_j == row.tau_j
    assert report.verdict is Attainability.MINIMUM
    _pass(4, "goguen-distance", "row 1 distance 0.044/0.86")


def test_criterion_05_lukasiewicz_distance():
    system = FuzzySystem(SHARED, (0.1, 0.4), ImplicationKind.LUKASIEWICZ)
    report = luka_distance(system)
    row = report.rows[0]
    assert row.cells[0].zeta == pytest.approx(0.3, abs=1e-12)
    assert row.cells[1].zeta == pytest.approx(0.41, abs=1e-12)
    assert row.tau_j == pytest.approx(0.3, abs=1e-12)
    assert row.nabla_j == pytest.approx(0.3, abs=1e-12)
    assert report.verdict is Attainability.MINIMUM
    _pass(5, "lukasiewicz-distance", "row 1 distance 0.3")


def test_criterion_06_scalar_helpers():
    assert godel_threshold(0.6, 0.4, 0.2) == pytest.approx(0.2, abs=1e-12)
    assert goguen_threshold(0.3, 0.6, 0.4, 0.2) == pytest.approx(0.18 / 0.7, abs=1e-12)
    assert luka_threshold(0.3, 0.4, 0.5, 0.2) == pytest.approx(0.1, abs=1e-12)
    _pass(6, "scalar-helpers")


def test_criterion_07_oracle_equivalence():
    start = time.perf_counter()
    worst = 0.0
    for offset, kind in enumerate(ImplicationKind):
        for system in _sized_instances(1000 + offset, 1000, kind):
            report = distance_report(system)
            estimate = bisect_infimum(
                lambda d: tolerance_membership(system, d, slack=SLACK)
            )
            difference = abs(report.nabla - estimate.inf_value)
            worst = max(worst, difference)
            assert difference <= 1e-6
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"oracle equivalence took {elapsed:.1f} s"
    _pass(7, "oracle-equivalence", f"3000 systems, worst gap {worst:.2e}, {elapsed:.1f} s")


def test_criterion_08_operator_laws():
    master = random.Random(88)
    kinds = list(ImplicationKind)
    worst_idem = worst_kernel = 0.0
    for index in range(10_000):
        kind = kinds[index % 3]
        m, n = master.randint(1, 5), master.randint(1, 5)
        system = generate_random_system(m, n, kind, master.randrange(2**32), decimals=2)
        xi = tuple(master.random() for _ in range(m))

        image = closure(system, xi)
        # inflation; 1e-12 absorbs double rounding in product quotients
        assert all(x <= g + 1e-12 for x, g in zip(xi, image))

        higher = tuple(min(1.0, x + master.random() * (1.0 - x)) for x in xi)
        assert all(a <= b for a, b in zip(image, closure(system, higher)))

        worst_idem = max(worst_idem, sup_distance(closure(system, image), image))
        assert worst_idem <= 1e-9

        gamma_t = transpose(system.gamma)
        worst_kernel = max(
            worst_kernel,
            sup_distance(
                max_t_compose(gamma_t, kind, image), max_t_compose(gamma_t, kind, xi)
            ),
        )
        assert worst_kernel <= 1e-9
    _pass(8, "operator-laws",
          f"10000 pairs, idempotence gap {worst_idem:.1e}, kernel gap {worst_kernel:.1e}")


def test_criterion_09_attainment_guarantees():
    for kind, solver in (
        (ImplicationKind.GOGUEN, goguen_distance),
        (ImplicationKind.LUKASIEWICZ, luka_distance),
    ):
        for system in _sized_instances(909, 1000, kind):
            report = solver(system)
            assert report.verdict is Attainability.MINIMUM
            assert tolerance_membership(system, report.nabla, slack=SLACK)

    flagged = 0
    mismatched_off_flag = 0
    trials = 1000
    for system in _sized_instances(919, trials, ImplicationKind.GODEL):
        report = godel_distance(system)
        member = exact_membership(system, report.nabla)
        if report.borderline:
            flagged += 1
            continue
        if member != (report.verdict is Attainability.MINIMUM):
            mismatched_off_flag += 1
    assert mismatched_off_flag == 0
    assert flagged < 0.02 * trials
    _pass(9, "attainment-guarantees",
          f"2000 attained systems, {flagged} borderline godel instances "
          f"({100 * flagged / trials:.2f}%)")


def test_criterion_10_approximation_optimality():
    checked = 0
    master = random.Random(1010)
    kinds = list(ImplicationKind)
    while checked < 200:
        kind = kinds[checked % 3]
        m, n = master.randint(1, 5), master.randint(1, 5)
        system = generate_random_system(m, n, kind, master.randrange(2**32), decimals=2)
        report = distance_report(system)
        if report.verdict is not Attainability.MINIMUM:
            continue
        result = build_approximation(system, report)
        lowest = result.lowest_approximation
        assert abs(sup_distance(system.beta, lowest) - report.nabla) <= 1e-9
        assert sup_distance(closure(system, lowest), lowest) <= 1e-9
        assert verify_lowest(system, result, trials=500, seed=checked)
        checked += 1
    _pass(10, "approximation-optimality", "200 systems, 500 samples each")


def test_criterion_11_maxt_background():
    start = time.perf_counter()
    worst = 0.0
    for kind in ImplicationKind:
        count = 0
        for base in _sized_instances(1111, 1000, kind):
            system = MaxTSystem(base.gamma, base.beta, kind)
            delta = maxt_distance(system)

            def membership(d: float) -> bool:
                lower, upper = shifted_bounds(system.b, d)
                return leq(lower, maxt_closure(system.a, system.kind, upper), SLACK)

            estimate = bisect_infimum(membership)
            worst = max(worst, abs(delta - estimate.inf_value))
            assert abs(delta - estimate.inf_value) <= 1e-6
            # the attainment boundary sits on residuum branch points, so it
            # is decided in exact arithmetic at the exact distance
            delta_exact = exact_maxt_distance(system)
            assert abs(delta - float(delta_exact)) <= 1e-12
            assert exact_maxt_membership(system, delta_exact)
            count += 1
        assert count == 1000
    elapsed = time.perf_counter() - start
    _pass(11, "maxt-background", f"3000 systems, worst gap {worst:.2e}, {elapsed:.1f} s")
