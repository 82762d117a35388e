import random

import mpmath as mp
import numpy as np
import pytest

from omega_point.cubic import (
    Region,
    cauchy_bound,
    classify,
    critical_floor,
    monotone_branches,
    root_floors,
    scaled_cubic,
)
from omega_point.errors import MalformedInput

EXPECTED_ROOTS = {
    Region.R1: 1,
    Region.R2_touch_below: 2,
    Region.R4_three_roots: 3,
    Region.R5_touch_above: 2,
    Region.R6_one_root_pos_b: 1,
}


def bracketed_root_count(a, b, scale=1000):
    """Distinct real roots of f found by sign changes of f_scale at every integer in the Cauchy range."""
    C = scale * cauchy_bound(a, b, 1)
    x = np.arange(-C, C + 1, dtype=np.int64)
    v = x**3 + a * scale * scale * x + b * scale**3
    crossings = int(np.count_nonzero(np.diff(np.sign(v[v != 0])) != 0))
    # a zero sample whose neighbours share a sign is a touching (double) root
    z = np.flatnonzero(v == 0)
    touches = int(np.count_nonzero(np.sign(v[z - 1]) == np.sign(v[z + 1])))
    return crossings + touches


def expected_count(region, a):
    if region is Region.R7_b_zero:
        return 1 if a > 0 else 3
    return EXPECTED_ROOTS[region]


@pytest.mark.parametrize("a, b, region", [
    (0, 1, Region.R1),
    (-3, -2, Region.R2_touch_below),
    (-4, 1, Region.R4_three_roots),
    (0, 0, Region.R0_degenerate),
    (-3, 2, Region.R5_touch_above),
    (-3, 3, Region.R6_one_root_pos_b),
    (-3, -3, Region.R1),
    (5, 0, Region.R7_b_zero),
])
def test_classify_examples(a, b, region):
    assert classify(a, b) is region


def test_classify_matches_bracketing_on_small_grid():
    for a in range(-6, 7):
        for b in range(-6, 7):
            if a == b == 0:
                continue
            region = classify(a, b)
            assert bracketed_root_count(a, b) == expected_count(region, a), (a, b, region)
            boundary = region in (Region.R2_touch_below, Region.R5_touch_above)
            assert boundary == (4 * a**3 + 27 * b**2 == 0 and b != 0)


@pytest.mark.parametrize("a, n, sign, expected", [
    (-3, 2, "+", 2),
    (-3, 2, "-", -2),
    (-5, 1, "+", 1),
    (-5, 1, "-", -2),
])
def test_critical_floor_examples(a, n, sign, expected):
    assert critical_floor(a, n, sign) == expected


def test_critical_floor_properties():
    for a in range(-40, 0):
        for n in range(1, 8):
            plus, minus = critical_floor(a, n, "+"), critical_floor(a, n, "-")
            assert plus >= 0 >= minus
            assert 3 * plus**2 <= -a * n * n < 3 * (plus + 1) ** 2
            exact = 3 * plus**2 == -a * n * n
            assert (plus == -minus) == exact
            # floor(-r) from the same bracket, by exact comparison of squares
            assert 3 * minus * abs(minus) <= a * n * n if minus < 0 else True
    with pytest.raises(MalformedInput):
        critical_floor(0, 1, "+")


@pytest.mark.parametrize("a, b, n, floors, lattice", [
    (0, -2, 1, [1], None),
    (-3, -2, 1, [-1, 2], -1),
    (0, 1, 3, [-3], -3),
])
def test_root_floor_examples(a, b, n, floors, lattice):
    an = root_floors(a, b, n)
    assert an.root_floors == floors
    assert an.lattice_root == lattice


def test_root_floors_rejects_degenerate():
    with pytest.raises(MalformedInput):
        root_floors(0, 0, 1)


def mp_root_floors(a, b, n):
    """Floors of n * (real roots of f) from 60-digit numerical roots, each confirmed exactly."""
    with mp.workdps(60):
        roots = sorted({r.real for r in mp.polyroots([1, 0, a, b], maxsteps=200, extraprec=200)
                        if abs(r.imag) < mp.mpf(10) ** -30})
        out = []
        for r in roots:
            F = int(mp.floor(n * r + mp.mpf(10) ** -40))
            out.append(F)
    return out


def test_floors_match_high_precision_roots():
    for a in range(-10, 11):
        for b in range(-10, 11):
            if a == b == 0:
                continue
            for n in range(1, 6):
                an = root_floors(a, b, n)
                expected = mp_root_floors(a, b, n)
                distinct = sorted(set(an.root_floors))
                assert sorted(set(expected)) == distinct or (
                    an.region is Region.R4_three_roots and an.root_floors == sorted(expected)
                ), (a, b, n, an.root_floors, expected)
                if an.region is Region.R4_three_roots:
                    J0, J1, J2 = an.root_floors
                    assert J0 <= an.crit_floor_minus <= J1 <= an.crit_floor_plus <= J2
                if an.region is Region.R5_touch_above:
                    assert an.root_floors[0] <= an.crit_floor_minus <= an.root_floors[1] == an.crit_floor_plus
                for F in an.root_floors:
                    assert (scaled_cubic(a, b, n, F) == 0) == (F in an.lattice_roots)


def test_floors_bracket_roots():
    """f_n(F) and f_n(F + 1) straddle zero in the branch direction (touching zero allowed)."""
    for a in range(-10, 11):
        for b in range(-10, 11):
            if a == b == 0 or classify(a, b) in (Region.R2_touch_below, Region.R5_touch_above):
                continue
            for n in range(1, 6):
                an = root_floors(a, b, n)
                f = lambda x: scaled_cubic(a, b, n, x)
                floors = an.root_floors
                for idx, F in enumerate(floors):
                    if sum(1 for G in floors if abs(G - F) <= 1) > 1:
                        continue  # neighbouring roots share the unit interval; covered by the mpmath check
                    decreasing = an.region is Region.R4_three_roots and idx == 1
                    if an.region is Region.R7_b_zero and a < 0 and idx == 1:
                        decreasing = True
                    if decreasing:
                        assert f(F) >= 0 >= f(F + 1) and f(F + 1) < f(F), (a, b, n, F)
                    else:
                        assert f(F) <= 0 <= f(F + 1) and f(F) < f(F + 1), (a, b, n, F)


def test_scaling_identity():
    rng = random.Random(3)
    for _ in range(500):
        a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        n, x = rng.randint(1, 10**4), rng.randint(-10**6, 10**6)
        assert scaled_cubic(a, b, n, n * x) == n**3 * scaled_cubic(a, b, 1, x)


def test_large_coefficients_stay_exact():
    a, b = -(10**40) * 3, 7
    an = root_floors(a, b, 1)
    assert an.region is Region.R4_three_roots
    f = lambda x: scaled_cubic(a, b, 1, x)
    J0, J1, J2 = an.root_floors
    assert f(J0) < 0 < f(J0 + 1)
    assert f(J1) > 0 > f(J1 + 1)
    assert f(J2) < 0 < f(J2 + 1)


@pytest.mark.parametrize("a, b, shape", [
    (0, 1, [(0, "increasing", False)]),
    (-4, 1, [(2, "increasing", False), (4, "increasing", True), (5, "decreasing", True)]),
    (-3, 3, [(3, "increasing", False), (4, "increasing", True), (6, "decreasing", True)]),
    (-3, 2, [(1, "increasing", False), (4, "increasing", True), (5, "decreasing", True)]),
    (-3, -2, [(1, "increasing", False)]),
    (-1, 0, []),
])
def test_monotone_branches(a, b, shape):
    branches = monotone_branches(root_floors(a, b, 1))
    assert [(br.k, br.direction, br.stop is not None) for br in branches] == shape


def test_branch_endpoints_r4():
    an = root_floors(-4, 1, 1)
    br = {b.k: b for b in monotone_branches(an)}
    assert (br[4].start, br[4].stop) == (an.floor(0), an.floor(4))
    assert (br[5].start, br[5].stop) == (an.floor(4), an.floor(1))
    assert br[2].start == an.floor(2)
