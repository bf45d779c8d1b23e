"""Tests for knot types, peaks, cones, and the isotopy oracles."""

import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legtorus import (
    Ambient,
    ContactMap,
    LegendrianClass,
    TorusKnotType,
    UnknotOutOfScope,
    act,
    act_type,
    change_ambient,
    destabilizations,
    is_realizable,
    legendrian_isotopic,
    mountain_range,
    normalize_type,
    peaks,
    stabilize_class,
    topologically_isotopic,
)

JET, TOR, S2 = Ambient.JET, Ambient.SOLID_TORUS, Ambient.S1XS2


def T(amb, p, q):
    return TorusKnotType(amb, p, q)


def C(amb, p, q, tw, rot):
    return LegendrianClass(T(amb, p, q), tw, rot)


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def orbit_of_residue(p: int, q: int) -> frozenset:
    """Brute-force orbit of p mod 2q under r -> r + 2q and r -> -r."""
    m = 2 * q
    seen = {p % m}
    frontier = [p % m]
    while frontier:
        r = frontier.pop()
        for r2 in ((r + m) % m, (-r) % m):
            if r2 not in seen:
                seen.add(r2)
                frontier.append(r2)
    return frozenset(seen)


def cone_rows(peak_rots, depth):
    """Stabilization closure of a rot set, one row per level step."""
    rows = [set(peak_rots)]
    for _ in range(depth):
        rows.append({r + s for r in rows[-1] for s in (1, -1)})
    return rows


# ---------------------------------------------------------------------------
# types and normalization
# ---------------------------------------------------------------------------

def test_unknot_types_rejected():
    with pytest.raises(UnknotOutOfScope):
        T(S2, 1, 0)
    with pytest.raises(UnknotOutOfScope):
        T(JET, -1, 0)


def test_invalid_types_rejected():
    with pytest.raises(ValueError):
        T(S2, 2, 0)  # gcd 2 and q = 0
    with pytest.raises(ValueError):
        T(S2, 2, 4)
    with pytest.raises(ValueError):
        T(JET, 3, -2)


def test_normalize_examples():
    assert normalize_type(T(S2, 8, 3)) == T(S2, 2, 3)
    assert normalize_type(T(S2, 5, 3)) == T(S2, 1, 3)
    assert normalize_type(T(JET, 7, 2)) == T(JET, 7, 2)
    assert normalize_type(T(S2, 4, 1)) == T(S2, 0, 1)
    assert normalize_type(T(TOR, -3, 1)) == T(TOR, 0, 1)


def test_normalized_s1s2_p_lands_in_window():
    for q in range(2, 7):
        for p in range(-25, 26):
            if gcd(p, q) != 1:
                continue
            n = normalize_type(T(S2, p, q))
            assert 1 <= n.p <= q - 1


def test_topologically_isotopic_examples():
    assert topologically_isotopic(T(S2, 2, 3), T(S2, 4, 3))
    assert not topologically_isotopic(T(S2, 1, 4), T(S2, 3, 4))
    assert topologically_isotopic(T(S2, 1, 2), T(S2, -1, 2))
    assert not topologically_isotopic(T(JET, 2, 3), T(JET, 5, 3))
    assert topologically_isotopic(T(S2, 3, 1), T(S2, -8, 1))
    assert not topologically_isotopic(T(S2, 1, 2), T(S2, 1, 3))
    with pytest.raises(ValueError):
        topologically_isotopic(T(S2, 1, 2), T(JET, 1, 2))


def test_congruence_oracle_matches_orbit_enumeration():
    for q in range(2, 7):
        ps = [p for p in range(-12, 13) if gcd(p, q) == 1]
        for p1, p2 in itertools.product(ps, repeat=2):
            expected = p2 % (2 * q) in orbit_of_residue(p1, q)
            assert topologically_isotopic(T(S2, p1, q), T(S2, p2, q)) == expected


# ---------------------------------------------------------------------------
# peaks
# ---------------------------------------------------------------------------

def test_peak_examples():
    pk = peaks(T(JET, 2, 3))
    assert (pk.level, pk.rots) == (4, (0,))
    pk = peaks(T(JET, -5, 2))
    assert (pk.level, pk.rots) == (-10, (-5, -3, -1, 1, 3, 5))
    pk = peaks(T(S2, 1, 2))
    assert pk.level == 0
    assert pk.rots_in_window(9) == tuple(range(-9, 10, 2))
    pk = peaks(T(TOR, -1, 2))
    assert (pk.level, pk.rots) == (0, (-1, 1))
    pk = peaks(T(JET, 0, 1))
    assert (pk.level, pk.rots) == (0, (0,))
    pk = peaks(T(S2, 0, 1))
    assert pk.level is None
    assert pk.rots_in_window(3) == (-3, -2, -1, 0, 1, 2, 3)


def test_negative_peak_count_and_parity():
    for q in range(2, 6):
        for p in range(-11, 0):
            if gcd(p, q) != 1:
                continue
            pk = peaks(T(JET, p, q))
            assert pk.level == p * q
            n_l = (-p + q - 1) // q
            assert len(pk.rots) == 2 * n_l
            assert all(r % 2 == p % 2 for r in pk.rots)


def test_solid_torus_peaks_are_jet_peaks_shifted():
    for q in range(2, 6):
        for p in [x for x in range(-7, 8) if x != 0 and gcd(x, q) == 1]:
            j, s = peaks(T(JET, p, q)), peaks(T(TOR, p, q))
            assert s.level == j.level - p * q
            assert s.rots == j.rots


# ---------------------------------------------------------------------------
# stabilization and the cone
# ---------------------------------------------------------------------------

def test_stabilize_examples():
    c = stabilize_class(C(JET, -1, 2, -2, 1), +1)
    assert (c.twist, c.rot) == (-3, 2)
    c = stabilize_class(C(S2, -1, 2, 0, -1), +1)
    assert (c.twist, c.rot) == (-1, 0)
    c = stabilize_class(LegendrianClass(T(S2, 0, 1), None, 5), -1)
    assert (c.twist, c.rot) == (None, 4)


def test_stabilizations_commute():
    c = C(JET, 2, 3, 4, 0)
    assert stabilize_class(stabilize_class(c, 1), -1) == stabilize_class(
        stabilize_class(c, -1), 1
    )


def test_is_realizable_examples():
    assert is_realizable(C(JET, -5, 2, -10, 3))
    assert not is_realizable(C(JET, -5, 2, -10, 0))
    assert is_realizable(C(S2, 1, 2, -1, 0))
    assert not is_realizable(C(JET, 2, 3, 5, 0))
    assert is_realizable(LegendrianClass(T(S2, 7, 1), None, 123))


def test_twist_field_shape_enforced():
    with pytest.raises(ValueError):
        LegendrianClass(T(S2, 0, 1), 0, 0)  # no twist allowed for q = 1
    with pytest.raises(ValueError):
        LegendrianClass(T(JET, 2, 3), None, 0)  # jet classes need tb


# ---------------------------------------------------------------------------
# hypothesis strategies
# ---------------------------------------------------------------------------

@st.composite
def torus_types(draw, ambients=(JET, TOR, S2)):
    amb = draw(st.sampled_from(ambients))
    q = draw(st.integers(1, 5))
    p = draw(st.integers(-9, 9).filter(lambda p: gcd(p, q) == 1))
    return T(amb, p, q)


@st.composite
def realizable_classes(draw, ambients=(JET, TOR, S2)):
    t = draw(torus_types(ambients))
    pk = peaks(t)
    if pk.level is None:
        return LegendrianClass(t, None, draw(st.integers(-8, 8)))
    rots = pk.rots if pk.is_finite else pk.rots_in_window(3 * t.q + 1)
    c = LegendrianClass(normalize_type(t), pk.level, draw(st.sampled_from(sorted(rots))))
    for s in draw(st.lists(st.sampled_from((1, -1)), max_size=6)):
        c = stabilize_class(c, s)
    return c


@settings(max_examples=80, deadline=None)
@given(realizable_classes())
def test_cone_closed_under_stabilization(c):
    assert is_realizable(c)
    assert is_realizable(stabilize_class(c, 1))
    assert is_realizable(stabilize_class(c, -1))


@settings(max_examples=80, deadline=None)
@given(realizable_classes())
def test_non_peak_classes_destabilize(c):
    pk = peaks(c.knot_type)
    if pk.level is None or c.twist == pk.level:
        return
    assert destabilizations(c), f"no realizable parent for {c}"


@settings(max_examples=60, deadline=None)
@given(torus_types())
def test_normalize_idempotent_and_isotopic(t):
    n = normalize_type(t)
    assert normalize_type(n) == n
    assert topologically_isotopic(t, n)


@settings(max_examples=40, deadline=None)
@given(st.lists(torus_types(ambients=(S2,)), min_size=3, max_size=3))
def test_topiso_is_an_equivalence_relation(ts):
    t1, t2, t3 = ts
    assert topologically_isotopic(t1, t1)
    assert topologically_isotopic(t1, t2) == topologically_isotopic(t2, t1)
    if topologically_isotopic(t1, t2) and topologically_isotopic(t2, t3):
        assert topologically_isotopic(t1, t3)


@settings(max_examples=40, deadline=None)
@given(st.lists(realizable_classes(), min_size=3, max_size=3))
def test_legiso_is_an_equivalence_relation(cs):
    c1, c2, c3 = cs
    if len({c.knot_type.ambient for c in cs}) != 1:
        return
    assert legendrian_isotopic(c1, c1)
    assert legendrian_isotopic(c1, c2) == legendrian_isotopic(c2, c1)
    if legendrian_isotopic(c1, c2) and legendrian_isotopic(c2, c3):
        assert legendrian_isotopic(c1, c3)


@settings(max_examples=60, deadline=None)
@given(st.lists(realizable_classes(ambients=(S2,)), min_size=2, max_size=2))
def test_legiso_implies_topiso(cs):
    c1, c2 = cs
    if c1.knot_type.q >= 2 and c2.knot_type.q >= 2 and legendrian_isotopic(c1, c2):
        assert topologically_isotopic(c1.knot_type, c2.knot_type)


# ---------------------------------------------------------------------------
# isotopy oracle examples
# ---------------------------------------------------------------------------

def test_legendrian_isotopic_examples():
    assert legendrian_isotopic(
        C(S2, 1, 2, -1, 0), stabilize_class(C(S2, -1, 2, 0, -1), +1)
    )
    a = LegendrianClass(T(S2, 0, 1), None, 3)
    assert legendrian_isotopic(a, LegendrianClass(T(S2, 0, 1), None, 3))
    assert not legendrian_isotopic(a, LegendrianClass(T(S2, 0, 1), None, 2))
    assert not legendrian_isotopic(C(JET, -1, 2, -2, 1), C(JET, -1, 2, -2, -1))


def test_legendrian_isotopic_errors():
    with pytest.raises(ValueError):
        legendrian_isotopic(C(JET, 2, 3, 4, 0), C(S2, 2, 3, 0, 0))
    with pytest.raises(ValueError):
        legendrian_isotopic(C(JET, 2, 3, 5, 0), C(JET, 2, 3, 4, 0))  # unrealizable


# ---------------------------------------------------------------------------
# mountain ranges
# ---------------------------------------------------------------------------

def test_mountain_range_examples():
    assert mountain_range(T(JET, -1, 2), 2) == [
        (-2, (-1, 1)),
        (-3, (-2, 0, 2)),
        (-4, (-3, -1, 1, 3)),
    ]
    assert mountain_range(T(JET, 2, 3), 1) == [(4, (0,)), (3, (-1, 1))]
    assert mountain_range(T(S2, 1, 2), 0, 5) == [(0, (-5, -3, -1, 1, 3, 5))]
    assert mountain_range(T(S2, 0, 1), 3, 2) == [(None, (-2, -1, 0, 1, 2))]


def test_mountain_range_matches_cone_closure():
    cases = [T(JET, -5, 2), T(JET, 2, 3), T(TOR, -2, 3), T(JET, 3, 4)]
    for t in cases:
        pk = peaks(t)
        rows = mountain_range(t, 5)
        expected = cone_rows(pk.rots, 5)
        for (level, rots), exp in zip(rows, expected):
            assert set(rots) == exp
    t = T(S2, 2, 3)
    rows = mountain_range(t, 4, 8)
    expected = cone_rows(peaks(t).rots_in_window(8 + 4), 4)
    for (level, rots), exp in zip(rows, expected):
        assert set(rots) == {r for r in exp if abs(r) <= 8}


def test_mountain_range_bounds():
    with pytest.raises(ValueError):
        mountain_range(T(JET, 2, 3), 20_000)
    with pytest.raises(ValueError):
        mountain_range(T(S2, 1, 2), 1)  # window required


def test_peak_rot_parities():
    # negative-p and s1s2 peak rots carry the parity of p; positive-p peaks
    # sit at rot 0 whatever the parity of p
    for q in range(2, 6):
        for p in [x for x in range(-9, 10) if x != 0 and gcd(x, q) == 1]:
            for amb in (JET, TOR):
                rots = peaks(T(amb, p, q)).rots
                if p < 0:
                    assert all(r % 2 == p % 2 for r in rots)
                else:
                    assert rots == (0,)
            for r in peaks(T(S2, p, q)).rots_in_window(12):
                assert r % 2 == p % 2


def test_windowed_peak_union_cross_check():
    # tw=0 rots of an s1s2 type match the union of solid-torus peak rots over
    # the negative representatives of its congruence class
    for (p, q) in [(1, 2), (1, 3), (2, 3), (3, 4)]:
        window = 15
        s1s2_rots = set(peaks(T(S2, p, q)).rots_in_window(window))
        union = set()
        for p2 in range(-40, 0):
            if gcd(p2, q) != 1:
                continue
            if (p2 - p) % (2 * q) != 0 and (p2 + p) % (2 * q) != 0:
                continue
            union.update(r for r in peaks(T(TOR, p2, q)).rots if abs(r) <= window)
        assert union == s1s2_rots


# ---------------------------------------------------------------------------
# contactomorphism actions
# ---------------------------------------------------------------------------

def test_act_examples():
    out = act(ContactMap.g(), C(S2, 5, 2, 0, 1))
    assert out == C(S2, 1, 2, 0, 1)
    assert legendrian_isotopic(C(S2, 5, 2, 0, 1), out)
    out = act(ContactMap.rc(), LegendrianClass(T(S2, 0, 1), None, 0))
    assert out == LegendrianClass(T(S2, 0, 1), None, 1)
    out = act(ContactMap.h(0), C(S2, 1, 2, 0, 1))
    assert out == C(S2, 1, 2, 0, 1)


def test_act_type_b_top():
    assert act_type(ContactMap.b_top(), T(S2, 5, 3)) == normalize_type(T(S2, -5, 3))
    with pytest.raises(TypeError):
        act(ContactMap.b_top(), C(S2, 1, 2, 0, 1))


def test_act_requires_s1s2():
    with pytest.raises(ValueError):
        act(ContactMap.g(), C(JET, 2, 3, 4, 0))
    with pytest.raises(ValueError):
        act_type(ContactMap.rc(), T(JET, 2, 3))


@settings(max_examples=80, deadline=None)
@given(realizable_classes(ambients=(S2,)))
def test_g_and_h_fix_classes(c):
    for m in (ContactMap.g(), ContactMap.g_inv(), ContactMap.h(0),
              ContactMap.h(1), ContactMap.h(2), ContactMap.h(3)):
        assert legendrian_isotopic(c, act(m, c)), f"{m} moved {c}"


@settings(max_examples=60, deadline=None)
@given(st.lists(realizable_classes(ambients=(S2,)), min_size=2, max_size=2))
def test_rc_is_an_isotopy_bijection(cs):
    c1, c2 = cs
    rc, rci = ContactMap.rc(), ContactMap.rc_inv()
    assert act(rci, act(rc, c1)) == LegendrianClass(
        normalize_type(c1.knot_type), c1.twist, c1.rot
    )
    assert act(rc, c1).rot == c1.rot + c1.knot_type.q
    assert legendrian_isotopic(c1, c2) == legendrian_isotopic(act(rc, c1), act(rc, c2))


# ---------------------------------------------------------------------------
# ambient changes
# ---------------------------------------------------------------------------

def test_change_ambient_examples():
    c = change_ambient(C(JET, -1, 2, -2, 1), Ambient.SOLID_TORUS)
    assert c == C(TOR, -1, 2, 0, 1)
    c2 = change_ambient(c, Ambient.S1XS2)
    assert c2 == C(S2, 1, 2, 0, 1)
    assert change_ambient(c, Ambient.JET) == C(JET, -1, 2, -2, 1)


def test_change_ambient_round_trip():
    for p, q, tb, rot in [(2, 3, 4, 0), (-5, 2, -10, 5), (1, 4, 3, 0)]:
        c = C(JET, p, q, tb, rot)
        assert change_ambient(change_ambient(c, Ambient.SOLID_TORUS), Ambient.JET) == c


def test_change_ambient_errors():
    with pytest.raises(ValueError):
        change_ambient(C(JET, 3, 1, 0, 0), Ambient.SOLID_TORUS)  # q = 1
    with pytest.raises(ValueError):
        change_ambient(C(S2, 1, 2, 0, 1), Ambient.SOLID_TORUS)  # one-way embedding
