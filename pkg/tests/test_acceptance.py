"""Acceptance gate: end-to-end checks of every certified claim of the tool.

Each test prints one PASS/FAIL line.  The checks are ordered from the
exhaustive sweeps that anchor the certificates, through the independent
oracle agreements, to the reporting and determinism contracts.
"""

import itertools
import math
import random
from fractions import Fraction

from lagstab import (
    TrigMonomial,
    analyze,
    gradient_comparison_max_error,
    killing_null_basis,
    laplacian_comparison_check,
    metric_hyperbolic,
    mode_bound,
    orbit_from_radii,
    orbit_from_tanh_sq,
    q_form,
    second_variation_quadrature,
    second_variation_spectral,
    volume_euclidean,
    volume_hyperbolic,
    volume_minimizing_predicate,
)
from lagstab.cli import main
from lagstab.stability import (
    CERTIFIED_STABLE,
    CERTIFIED_UNSTABLE,
    NO_RADIUS_MULTIPLICITY,
    NO_UNSTABLE_WITNESS,
    UNKNOWN,
    _ExactScan,
    canonical_mode,
)

SEED = 20260823


def _verdict(num, desc, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {desc}"
    if detail and not ok:
        line += f" -- {detail}"
    print(line)
    assert ok, line


def random_exact_orbit(rng, n, max_weight=9, max_t_den=12, max_t=None):
    weights = [rng.randint(1, max_weight) for _ in range(n)]
    total = sum(weights)
    while True:
        den = rng.randint(2, max_t_den)
        num = rng.randint(1, den - 1)
        t = Fraction(num, den)
        if max_t is None or t <= max_t:
            break
    return orbit_from_tanh_sq(n, t, [Fraction(w, total) for w in weights])


def canonical_reps(n, max_entry):
    """One representative per {m, -m} pair with entries in [-max_entry, max_entry]."""
    for m in itertools.product(range(-max_entry, max_entry + 1), repeat=n):
        if any(m) and m == canonical_mode(m):
            yield m


def test_criterion_01_dimension_two_grid_all_stable():
    bad = []
    for i in range(1, 51):
        for j in range(1, 51):
            orbit = orbit_from_tanh_sq(
                2, Fraction(j, 51), [Fraction(i, 51), Fraction(51 - i, 51)]
            )
            rep = analyze(orbit)
            if rep.verdict != CERTIFIED_STABLE or rep.min_q < 0:
                bad.append((i, j))
    _verdict(
        1,
        "50x50 exact grid in dimension 2 has no negative mode",
        not bad,
        f"negatives at grid points {bad[:5]}",
    )


def test_criterion_02_certified_instability_witness():
    orbit = orbit_from_tanh_sq(
        3, Fraction(1, 2), [Fraction(1, 100), Fraction(99, 200), Fraction(99, 200)]
    )
    rep = analyze(orbit)
    ok = (
        rep.verdict == CERTIFIED_UNSTABLE
        and rep.witness == (-1, 1, 1)
        and rep.witness_q == Fraction(-1800200, 9801)
    )
    _verdict(
        2,
        "witness (-1,1,1) with Q = -1800200/9801 exactly",
        ok,
        f"got {rep.verdict}, {rep.witness}, {rep.witness_q}",
    )


def test_criterion_03_clifford_orbits_stable_and_rigid():
    failures = []
    for n in range(1, 7):
        expected = {
            tuple(1 if k == i else 0 for k in range(n)) for i in range(n)
        } | {
            tuple(1 if k == i else (-1 if k == j else 0) for k in range(n))
            for i in range(n)
            for j in range(i + 1, n)
        }
        for t in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            rep = analyze(orbit_from_tanh_sq(n, t, [Fraction(1, n)] * n))
            if not (
                rep.verdict == CERTIFIED_STABLE
                and set(rep.null_modes) == expected
                and rep.rigid
            ):
                failures.append((n, t, rep.verdict, rep.null_modes))
    _verdict(
        3,
        "Clifford orbits n=1..6, t in {1/4,1/2,3/4} certified stable and rigid "
        "with exactly the Killing null modes",
        not failures,
        str(failures[:2]),
    )


def test_criterion_04_oracle_three_way_agreement():
    rng = random.Random(SEED + 4)
    dims = [1] * 60 + [2] * 60 + [3] * 70 + [4] * 10
    spectral_fail = quad_fail = 0
    worst_rel = 0.0
    for n in dims:
        orbit = random_exact_orbit(rng, n)
        sh4 = orbit.sinh_sq * orbit.sinh_sq
        for mode in canonical_reps(n, 3):
            phase = "sin" if rng.random() < 0.02 else "cos"
            u = TrigMonomial(mode, phase=phase)
            qv = q_form(orbit, mode)
            if sh4 * second_variation_spectral(orbit, u) != qv:
                spectral_fail += 1
            quad = float(sh4) * second_variation_quadrature(orbit, u)
            rel = abs(quad - float(qv)) / max(1.0, abs(float(qv)))
            worst_rel = max(worst_rel, rel)
            if rel > 1e-10:
                quad_fail += 1
    _verdict(
        4,
        "200 random orbits, all |m_i| <= 3: spectral oracle agrees exactly, "
        f"quadrature within 1e-10 relative (worst {worst_rel:.2e})",
        spectral_fail == 0 and quad_fail == 0,
        f"{spectral_fail} spectral and {quad_fail} quadrature disagreements",
    )


def test_criterion_05_truncation_bound_stress():
    rng = random.Random(SEED + 5)
    escapes = []
    beyond_seen = 0
    for _ in range(100):
        n = rng.randint(1, 4)
        orbit = random_exact_orbit(
            rng, n, max_weight=6, max_t_den=8, max_t=Fraction(3, 4)
        )
        bound = mode_bound(orbit)
        scan = _ExactScan(orbit)
        checked, _, _, negatives = scan.scan(4 * bound)
        beyond_seen += checked
        for m in negatives:
            if sum(x * x / s for x, s in zip(m, orbit.simplex)) > bound:
                escapes.append((orbit.simplex, orbit.tanh_sq, m))
    _verdict(
        5,
        "100 random orbits, brute force to 4*B_max: no negative mode beyond B_max",
        not escapes,
        str(escapes[:2]),
    )


def test_criterion_06_flat_limit_nonnegativity():
    rng = random.Random(SEED + 6)
    samples = 0
    violations = []
    while samples < 100_000:
        n = rng.randint(1, 5)
        p = [rng.randint(1, 9) for _ in range(n)]
        P = math.prod(p)
        w = [P // pi for pi in p]
        for _ in range(100):
            mode = [rng.randint(-4, 4) for _ in range(n)]
            if not any(mode):
                continue
            samples += 1
            Bt = Ct = At = 0
            for m, wi in zip(mode, w):
                mw = m * wi
                Bt += m * mw
                Ct += mw
                At += mw * mw
            a1_sign = Bt * Bt + Ct * Ct - 2 * At  # a1 scaled by (P/q)^2
            entries = sorted(mode)
            is_unit = sum(abs(m) for m in mode) == 1
            is_pair = entries.count(0) == n - 2 and entries[0] == -1 and entries[-1] == 1
            if a1_sign < 0:
                violations.append(("negative", p, mode))
            elif (a1_sign == 0) != (is_unit or is_pair):
                violations.append(("equality set", p, mode))
            if samples >= 100_000:
                break
    # force the equality patterns themselves into the sample
    for _ in range(200):
        n = rng.randint(2, 5)
        orbit = random_exact_orbit(rng, n)
        units = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        pairs = [
            tuple(1 if k == i else (-1 if k == j else 0) for k in range(n))
            for i in range(n)
            for j in range(n)
            if i != j
        ]
        for m in units + pairs:
            c_a1 = sum(x * x / s for x, s in zip(m, orbit.simplex)) ** 2
            c = [sum(x * x / s for x, s in zip(m, orbit.simplex)),
                 sum(x / s for x, s in zip(m, orbit.simplex)),
                 sum(x * x / (s * s) for x, s in zip(m, orbit.simplex))]
            if c[0] ** 2 + c[1] ** 2 - 2 * c[2] != 0:
                violations.append(("pattern not null", orbit.simplex, m))
    _verdict(
        6,
        "flat-limit coefficient a1 >= 0 on 1e5 exact samples, "
        "zero exactly on unit modes and signed pairs",
        not violations,
        str(violations[:3]),
    )


def test_criterion_07_metric_comparison_identities():
    rng = random.Random(SEED + 7)
    lap_fail = []
    worst_grad = 0.0
    for _ in range(500):
        n = rng.randint(1, 4)
        orbit = random_exact_orbit(
            rng, n, max_weight=6, max_t_den=8, max_t=Fraction(3, 4)
        )
        mode = []
        while not any(mode):
            mode = [rng.randint(-3, 3) for _ in range(n)]
        u = TrigMonomial(tuple(mode))
        lhs, rhs = laplacian_comparison_check(orbit, u)
        if lhs != rhs:
            lap_fail.append((orbit.simplex, mode, lhs, rhs))
        worst_grad = max(worst_grad, gradient_comparison_max_error(orbit, u))
    _verdict(
        7,
        "500 random pairs: Laplacian comparison exact, gradient comparison "
        f"pointwise within 1e-12 (worst {worst_grad:.2e})",
        not lap_fail and worst_grad < 1e-12,
        f"{len(lap_fail)} Laplacian mismatches, worst gradient defect {worst_grad:.2e}",
    )


def test_criterion_08_volume_consistency():
    rng = random.Random(SEED + 8)
    worst = 0.0
    for _ in range(100):
        n = rng.randint(1, 4)
        radii = [Fraction(rng.randint(1, 40), rng.randint(1, 10)) for _ in range(n)]
        orbit = orbit_from_radii(n, radii)
        vol = volume_hyperbolic(orbit)
        det_route = (2 * math.pi) ** n * math.sqrt(float(metric_hyperbolic(orbit).det()))
        cosh_route = math.sqrt(float(orbit.cosh_sq)) * volume_euclidean(orbit)
        worst = max(
            worst,
            abs(vol - det_route) / vol,
            abs(vol - cosh_route) / vol,
        )
    unit = volume_hyperbolic(orbit_from_radii(2, (1, 1)))
    closed_form = 4 * math.pi**2 * math.sqrt(3)
    ok = worst < 1e-12 and abs(unit - closed_form) / closed_form < 1e-12
    _verdict(
        8,
        "volume = (2pi)^n sqrt(det G) = cosh(r) * flat volume within 1e-12; "
        "unit-radii value 4 pi^2 sqrt(3)",
        ok,
        f"worst relative deviation {worst:.2e}",
    )


def test_criterion_09_volume_minimizing_predicate():
    got = (
        volume_minimizing_predicate(orbit_from_radii(3, (1, 2, 3))),
        volume_minimizing_predicate(
            orbit_from_tanh_sq(
                3,
                Fraction(1, 2),
                [Fraction(1, 100), Fraction(99, 200), Fraction(99, 200)],
            )
        ),
        volume_minimizing_predicate(
            orbit_from_tanh_sq(3, Fraction(1, 2), [Fraction(1, 3)] * 3)
        ),
    )
    expected = (NO_RADIUS_MULTIPLICITY, NO_UNSTABLE_WITNESS, UNKNOWN)
    _verdict(
        9,
        "predicate tags: three distinct radii / unstable witness / Clifford",
        got == expected,
        f"got {got}",
    )


def test_criterion_10_sweep_determinism(capsys):
    outputs = []
    for workers in (1, 4, 16):
        code = main(
            [
                "sweep",
                "--n",
                "3",
                "--resolution",
                "5",
                "--t-resolution",
                "2",
                "--workers",
                str(workers),
            ]
        )
        assert code == 0
        outputs.append(capsys.readouterr().out.encode())
    ok = outputs[0] == outputs[1] == outputs[2] and len(outputs[0].splitlines()) > 1
    _verdict(
        10,
        "sweep output byte-identical for 1, 4 and 16 workers",
        ok,
        f"lengths {[len(o) for o in outputs]}",
    )
