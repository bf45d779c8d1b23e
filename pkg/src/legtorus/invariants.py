"""Knot types, classical invariants, and isotopy oracles for Legendrian torus knots.

Three ambient contact manifolds are supported:

* ``jet``   -- the 1-jet space J1(S1) with its standard contact structure;
  the twist invariant of a class is its Thurston-Bennequin number tb.
* ``torus`` -- a tight solid torus with convex boundary (two longitudinal
  dividing curves); the twist invariant is the twisting number tw relative
  to the framing induced by a torus parallel to the boundary.
* ``s1s2``  -- S1 x S2 with its standard tight contact structure; tw is
  well defined only for longitudinal winding q >= 2, so classes with q = 1
  carry no twist field at all.

A (p, q)-torus knot winds p times around the meridian and q times around
the longitude of the reference torus.  Everything here is exact integer
arithmetic on these data: canonical forms of knot types, the peak (maximal
twist) classes, the stabilization cone below them, and the resulting
decision procedures for topological and Legendrian isotopy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd


class UnknotOutOfScope(ValueError):
    """Raised for (+-1, 0) torus types, which bound disks and are not handled here."""

    def __init__(self, detail: str = ""):
        msg = "unknot torus type: out of scope (Eliashberg-Fraser)"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


class Ambient(Enum):
    JET = "jet"
    SOLID_TORUS = "torus"
    S1XS2 = "s1s2"

    def __str__(self) -> str:
        return self.value


def _check_pq(p: int, q: int) -> None:
    if q == 0:
        if abs(p) == 1:
            raise UnknotOutOfScope(f"({p}, 0)")
        raise ValueError(f"({p}, {q}) is not a knot type: gcd({p}, {q}) != 1")
    if q < 0:
        raise ValueError(
            f"q = {q} < 0: orientation-reversed longitudinal winding is not supported"
        )
    if gcd(p, q) != 1:
        raise ValueError(f"({p}, {q}) is not a knot type: gcd({p}, {q}) != 1")


@dataclass(frozen=True, order=True)
class TorusKnotType:
    """An oriented smooth torus-knot type: an ambient plus a coprime pair (p, q)."""

    ambient: Ambient
    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.ambient, Ambient):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        _check_pq(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.ambient}:({self.p},{self.q})"


def twist_defined(t: TorusKnotType) -> bool:
    """Whether Legendrian classes of this type carry a twist invariant."""
    return t.ambient is not Ambient.S1XS2 or t.q >= 2


def normalize_type(t: TorusKnotType) -> TorusKnotType:
    """Canonical representative of the smooth isotopy class of ``t``.

    In the jet space and the solid torus, (p, q) with q >= 2 is rigid; every
    (p, 1) type is the zero-section / core type (0, 1).  In S1 x S2 the pair
    (p, q) is isotopic to (p', q) exactly when p' is congruent to p or to -p
    mod 2q, so the canonical p is min(p mod 2q, -p mod 2q), which lies in
    [1, q-1]; all (p, 1) types collapse to (0, 1).
    """
    if t.q == 1:
        return TorusKnotType(t.ambient, 0, 1)
    if t.ambient is Ambient.S1XS2:
        m = 2 * t.q
        r = t.p % m
        return TorusKnotType(t.ambient, min(r, m - r), t.q)
    return t


def topologically_isotopic(t1: TorusKnotType, t2: TorusKnotType) -> bool:
    """Decide smooth isotopy of two torus-knot types in the same ambient."""
    if t1.ambient is not t2.ambient:
        raise ValueError(f"mixed ambients: {t1.ambient} vs {t2.ambient}")
    return normalize_type(t1) == normalize_type(t2)


@dataclass(frozen=True)
class LegendrianClass:
    """A candidate Legendrian isotopy class: knot type, twist invariant, rotation number.

    ``twist`` is tb in the jet space, tw in the solid torus and in S1 x S2
    with q >= 2, and must be ``None`` for S1 x S2 types with q = 1.
    """

    knot_type: TorusKnotType
    twist: int | None
    rot: int

    def __post_init__(self):
        if twist_defined(self.knot_type):
            if self.twist is None:
                raise ValueError(f"{self.knot_type} requires a twist invariant")
        elif self.twist is not None:
            raise ValueError(
                f"{self.knot_type} has no twist invariant (winding q = 1 in s1s2)"
            )

    def __str__(self) -> str:
        t = self.knot_type
        if self.twist is None:
            return f"{t.ambient}:{t.p},{t.q},{self.rot}"
        return f"{t.ambient}:{t.p},{t.q},{self.twist},{self.rot}"


@dataclass(frozen=True)
class PeakSet:
    """Classes of maximal twist invariant for one knot type.

    Either a finite explicit set of rotation numbers (``rots``), or the
    infinite arithmetic set {r : r = a mod modulus for some residue a},
    stored symbolically so no window is baked in.  ``level is None`` means
    the type carries no twist invariant (s1s2, q = 1); its rot values are
    then all integers, encoded as residues (0,) mod 1.
    """

    level: int | None
    rots: tuple[int, ...] | None = None
    residues: tuple[int, ...] | None = None
    modulus: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.rots is not None

    def rots_in_window(self, window: int) -> tuple[int, ...]:
        """Sorted peak rotation numbers r with abs(r) <= window."""
        if window < 0:
            raise ValueError("window must be non-negative")
        if self.is_finite:
            return tuple(r for r in self.rots if abs(r) <= window)
        return tuple(
            r
            for r in range(-window, window + 1)
            if r % self.modulus in self.residues
        )

    def min_distance(self, rot: int) -> int:
        """Distance from ``rot`` to the nearest peak rotation number."""
        if self.is_finite:
            return min(abs(rot - r) for r in self.rots)
        best = None
        for a in self.residues:
            d = min((rot - a) % self.modulus, (a - rot) % self.modulus)
            best = d if best is None else min(best, d)
        return best

    def rot_parity(self) -> int | None:
        """Common parity of all peak rots, or None when both parities occur."""
        if self.is_finite:
            return self.rots[0] % 2
        if self.modulus % 2 == 1:
            return None
        return self.residues[0] % 2


def peaks(t: TorusKnotType) -> PeakSet:
    """Maximal-twist classes of the (normalized) type ``t``.

    Jet space: for q = 1 the zero section has tb at most 0 and a unique
    class there; for p >= 1 the maximum tb is p(q-1) with rot 0; for p < 0
    the maximum is pq with rot in {+-(p + 2lq) : 0 <= l < -p/q}.  Solid
    torus: the same sets shifted in level by -pq (tw = tb - pq).  S1 x S2
    with q >= 2: maximal tw is 0 and rot ranges over {+-p + 2dq : d in Z};
    with q = 1 there is no twist level and rot takes every integer value.
    """
    t = normalize_type(t)
    if t.ambient is Ambient.S1XS2:
        if t.q == 1:
            return PeakSet(level=None, residues=(0,), modulus=1)
        m = 2 * t.q
        return PeakSet(level=0, residues=tuple(sorted({t.p % m, -t.p % m})), modulus=m)
    if t.q == 1:
        return PeakSet(level=0, rots=(0,))
    if t.p >= 1:
        level, rots = t.p * (t.q - 1), (0,)
    else:
        n_l = -(-(-t.p) // t.q)  # ceil(-p/q); never an integer ratio since gcd(p,q)=1
        vals = sorted({s * (t.p + 2 * l * t.q) for l in range(n_l) for s in (1, -1)})
        level, rots = t.p * t.q, tuple(vals)
    if t.ambient is Ambient.SOLID_TORUS:
        level -= t.p * t.q
    return PeakSet(level=level, rots=rots)


def stabilize_class(c: LegendrianClass, sign: int) -> LegendrianClass:
    """Stabilization S+ (sign=+1) or S- (sign=-1): twist drops by 1, rot moves by sign."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    tw = None if c.twist is None else c.twist - 1
    return LegendrianClass(c.knot_type, tw, c.rot + sign)


def is_realizable(c: LegendrianClass) -> bool:
    """Whether ``c`` lies in the stabilization cone below some peak class.

    A class at n steps below the peak level is realizable iff some peak
    rotation number is within distance n of its rot, with matching parity
    (each stabilization moves rot by exactly +-1).
    """
    pk = peaks(c.knot_type)
    if pk.level is None:
        return True
    n = pk.level - c.twist
    if n < 0:
        return False
    parity = pk.rot_parity()
    if parity is not None and (c.rot - parity - n) % 2 != 0:
        return False
    return pk.min_distance(c.rot) <= n


def destabilizations(c: LegendrianClass) -> tuple[LegendrianClass, ...]:
    """Realizable classes whose single stabilization gives ``c``."""
    out = []
    for sign in (1, -1):
        tw = None if c.twist is None else c.twist + 1
        try:
            parent = LegendrianClass(c.knot_type, tw, c.rot - sign)
        except ValueError:
            continue
        if is_realizable(parent):
            out.append(parent)
    return tuple(out)


def legendrian_isotopic(c1: LegendrianClass, c2: LegendrianClass) -> bool:
    """Decide Legendrian isotopy from the classical invariants.

    Classes are Legendrian isotopic iff their oriented knot types agree and
    their classical invariants (twist where defined, rot always) coincide.
    Both inputs must be realizable; unrealizable data is an error rather
    than a negative verdict.
    """
    if c1.knot_type.ambient is not c2.knot_type.ambient:
        raise ValueError(
            f"mixed ambients: {c1.knot_type.ambient} vs {c2.knot_type.ambient}"
        )
    for c in (c1, c2):
        if not is_realizable(c):
            raise ValueError(f"class {c} is not realizable")
    t1 = normalize_type(c1.knot_type)
    t2 = normalize_type(c2.knot_type)
    if t1 != t2:
        return False
    if not twist_defined(t1):
        return c1.rot == c2.rot
    return c1.twist == c2.twist and c1.rot == c2.rot


_RANGE_LIMIT = 10_000


def mountain_range(
    t: TorusKnotType, depth: int, rot_window: int | None = None
) -> list[tuple[int | None, tuple[int, ...]]]:
    """Rows of the mountain range of ``t``: (twist level, realizable rots).

    Row k lists, at level peak - k, exactly the rotation numbers r with
    ``is_realizable`` true and abs(r) <= rot_window.  Types with a finite
    peak set need no window (rows stay finite); s1s2 types require one.
    For s1s2 with q = 1 there is no twist axis and the single row carries
    level None.
    """
    if not 0 <= depth <= _RANGE_LIMIT:
        raise ValueError(f"depth must be in [0, {_RANGE_LIMIT}]")
    if rot_window is not None and not 0 <= rot_window <= _RANGE_LIMIT:
        raise ValueError(f"rot window must be in [0, {_RANGE_LIMIT}]")
    t = normalize_type(t)
    pk = peaks(t)
    if pk.level is None:
        if rot_window is None:
            raise ValueError(f"{t} has infinitely many rots per row; pass a rot window")
        return [(None, tuple(range(-rot_window, rot_window + 1)))]
    if not pk.is_finite and rot_window is None:
        raise ValueError(f"{t} has infinitely many rots per row; pass a rot window")
    rows = []
    for k in range(depth + 1):
        level = pk.level - k
        if pk.is_finite:
            lo, hi = min(pk.rots) - k, max(pk.rots) + k
            if rot_window is not None:
                lo, hi = max(lo, -rot_window), min(hi, rot_window)
        else:
            lo, hi = -rot_window, rot_window
        row = tuple(
            r
            for r in range(lo, hi + 1)
            if is_realizable(LegendrianClass(t, level, r))
        )
        rows.append((level, row))
    return rows


@dataclass(frozen=True)
class ContactMap:
    """A contactomorphism (or topological reflection) of S1 x S2 acting on classes.

    ``rc`` rotates the S2 factor once around the vertical axis as theta runs
    around S1; it shifts p by q and rot by q.  ``g`` and ``h(k)`` are contact
    isotopic to the identity: g sends (p, q) to (p - 2q, q) and h(k) sends
    (p, q) to (-p - 2kq, q), both fixing tw and rot.  ``b_top`` is the
    reflection (p, q) -> (-p, q); it acts on knot types only.
    """

    tag: str
    k: int = 0

    _TAGS = ("rc", "rc_inv", "g", "g_inv", "h", "b_top")

    def __post_init__(self):
        if self.tag not in self._TAGS:
            raise ValueError(f"unknown contact map tag {self.tag!r}")
        if self.tag == "h":
            if self.k < 0:
                raise ValueError("h(k) requires k >= 0")
        elif self.k != 0:
            raise ValueError(f"{self.tag} takes no parameter")

    @classmethod
    def rc(cls) -> "ContactMap":
        return cls("rc")

    @classmethod
    def rc_inv(cls) -> "ContactMap":
        return cls("rc_inv")

    @classmethod
    def g(cls) -> "ContactMap":
        return cls("g")

    @classmethod
    def g_inv(cls) -> "ContactMap":
        return cls("g_inv")

    @classmethod
    def h(cls, k: int) -> "ContactMap":
        return cls("h", k)

    @classmethod
    def b_top(cls) -> "ContactMap":
        return cls("b_top")

    def __str__(self) -> str:
        return f"h({self.k})" if self.tag == "h" else self.tag


def _map_p(m: ContactMap, p: int, q: int) -> int:
    if m.tag == "rc":
        return p + q
    if m.tag == "rc_inv":
        return p - q
    if m.tag == "g":
        return p - 2 * q
    if m.tag == "g_inv":
        return p + 2 * q
    if m.tag == "h":
        return -p - 2 * m.k * q
    return -p  # b_top


def act_type(m: ContactMap, t: TorusKnotType) -> TorusKnotType:
    """Image knot type under ``m``, normalized."""
    if t.ambient is not Ambient.S1XS2:
        raise ValueError(f"contact maps act on s1s2 types, got {t.ambient}")
    return normalize_type(TorusKnotType(t.ambient, _map_p(m, t.p, t.q), t.q))


def act(m: ContactMap, c: LegendrianClass) -> LegendrianClass:
    """Image of a Legendrian class under ``m``; the result type is normalized."""
    if m.tag == "b_top":
        raise TypeError("b_top acts on knot types only, not on Legendrian classes")
    t = c.knot_type
    if t.ambient is not Ambient.S1XS2:
        raise ValueError(f"contact maps act on s1s2 classes, got {t.ambient}")
    rot = c.rot
    if m.tag == "rc":
        rot += t.q
    elif m.tag == "rc_inv":
        rot -= t.q
    return LegendrianClass(act_type(m, t), c.twist, rot)


def change_ambient(c: LegendrianClass, target: Ambient) -> LegendrianClass:
    """Transport a class along the embedding chain jet -> solid torus -> s1s2.

    Jet and solid-torus invariants translate by tw = tb - pq (and back),
    which needs q >= 2; the embedding of the solid torus into S1 x S2 keeps
    both invariants and normalizes the knot type.  The last leg is one-way:
    an s1s2 class determines p only mod 2q, so no inverse is provided.
    """
    t = c.knot_type
    src = t.ambient
    if src is target:
        return c
    if src is Ambient.S1XS2:
        raise ValueError("s1s2 classes have no canonical solid-torus representative")
    if target is Ambient.S1XS2:
        base = c if src is Ambient.SOLID_TORUS else change_ambient(c, Ambient.SOLID_TORUS)
        t2 = normalize_type(TorusKnotType(Ambient.S1XS2, base.knot_type.p, base.knot_type.q))
        twist = base.twist if twist_defined(t2) else None
        return LegendrianClass(t2, twist, base.rot)
    if t.q == 1:
        raise ValueError("twist translation undefined for q = 1 (framing not canonical)")
    shift = t.p * t.q
    if src is Ambient.JET and target is Ambient.SOLID_TORUS:
        return LegendrianClass(TorusKnotType(target, t.p, t.q), c.twist - shift, c.rot)
    if src is Ambient.SOLID_TORUS and target is Ambient.JET:
        return LegendrianClass(TorusKnotType(target, t.p, t.q), c.twist + shift, c.rot)
    raise ValueError(f"unsupported ambient change {src} -> {target}")
