"""Annular front diagrams as cyclic event words.

A front in the annulus [0, 2pi) x R is cut at the seam theta = 0 and encoded
as a ``base`` number of strands crossing the seam plus an ordered word of
events read left to right:

* ``("x", i)`` -- a transverse crossing of the strands at heights i, i+1;
* ``("l", i)`` -- a left cusp opening two new strands at heights i, i+1
  (everything at height >= i shifts up by two);
* ``("r", i)`` -- a right cusp closing the strands at heights i, i+1.

Heights are 1-based from the bottom and always refer to the slice just
before the event.  The strand count after the last event must equal
``base`` so the word closes up around the annulus.

Orientations are declared per component by the direction (+1 rightward,
-1 leftward) of one of its seam strands; tracing propagates the choice.
Sign conventions, fixed here and validated by the generator self-checks:

* a crossing is positive exactly when its two arcs run in the same
  horizontal direction (with front slopes +-1 this equals the usual
  determinant sign, the lower-slope arc being in front);
* a left cusp is "up" iff its upper branch runs rightward, and a right
  cusp is "down" iff its upper branch runs rightward (the sign of the
  z-motion at the vertical tangency).

With these, tb = writhe - (number of cusps) / 2 and
rot = (down cusps - up cusps) / 2 for any single-component oriented front.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

from .invariants import Ambient, LegendrianClass, TorusKnotType, is_realizable

Event = tuple[str, int]

_KINDS = ("x", "l", "r")


class FrontError(ValueError):
    """Structural problem in a front word; ``event_index`` locates it when known."""

    def __init__(self, msg: str, event_index: int | None = None):
        super().__init__(msg)
        self.event_index = event_index


def cross(i: int) -> Event:
    return ("x", _height(i))

def left_cusp(i: int) -> Event:
    return ("l", _height(i))

def right_cusp(i: int) -> Event:
    return ("r", _height(i))


def _height(i) -> int:
    if not isinstance(i, int) or i < 1:
        raise FrontError(f"event height must be a positive integer, got {i!r}")
    return i


def _scan_counts(base: int, events: tuple[Event, ...]) -> list[int]:
    counts = [base]
    c = base
    for j, (kind, i) in enumerate(events):
        if kind == "x":
            if i + 1 > c:
                raise FrontError(
                    f"crossing at height {i} needs {i + 1} strands, slice has {c}", j
                )
        elif kind == "l":
            if i > c + 1:
                raise FrontError(
                    f"left cusp at height {i} exceeds insertion range 1..{c + 1}", j
                )
            c += 2
        elif kind == "r":
            if i + 1 > c:
                raise FrontError(
                    f"right cusp at height {i} needs {i + 1} strands, slice has {c}", j
                )
            c -= 2
        else:
            raise FrontError(f"unknown event kind {kind!r}", j)
        counts.append(c)
    if c != base:
        raise FrontError(f"strand count {c} after last event does not close to base {base}")
    return counts


def _pairings(counts: list[int], events: tuple[Event, ...]) -> dict:
    """Match segment ends across events.  An end is (slice, height, side), side 0=left 1=right."""
    n = len(events)
    link = {}

    def tie(a, b):
        link[a] = b
        link[b] = a

    if n == 0:
        for h in range(1, counts[0] + 1):
            tie((0, h, 1), (0, h, 0))
        return link
    for j, (kind, i) in enumerate(events):
        c = counts[j]
        nxt = (j + 1) % n
        if kind == "x":
            for h in range(1, c + 1):
                if h == i:
                    tie((j, h, 1), (nxt, i + 1, 0))
                elif h == i + 1:
                    tie((j, h, 1), (nxt, i, 0))
                else:
                    tie((j, h, 1), (nxt, h, 0))
        elif kind == "l":
            tie((nxt, i, 0), (nxt, i + 1, 0))
            for h in range(1, c + 1):
                tie((j, h, 1), (nxt, h if h < i else h + 2, 0))
        else:
            tie((j, i, 1), (j, i + 1, 1))
            for h in range(1, c + 1):
                if h not in (i, i + 1):
                    tie((j, h, 1), (nxt, h if h < i else h - 2, 0))
    return link


class FrontWord:
    """An immutable validated annular front.

    Components are traced eagerly; every component must cross the seam
    (re-cut the annulus elsewhere for diagrams where one does not), and the
    declared orientation must cover each component exactly once.
    """

    __slots__ = (
        "base", "events", "meta", "counts",
        "_dirs", "_comp", "n_components", "seam_dirs", "winding",
    )

    def __init__(
        self,
        base: int,
        events: Iterable[Event] = (),
        orient: Mapping[int, int] | None = None,
        meta: tuple[int, int] | None = None,
    ):
        if not isinstance(base, int) or base < 1:
            raise FrontError(f"base strand count must be >= 1, got {base!r}")
        evs = tuple((kind, _height(i)) for kind, i in events)
        for j, (kind, _) in enumerate(evs):
            if kind not in _KINDS:
                raise FrontError(f"unknown event kind {kind!r}", j)
        if meta is not None:
            p, q = meta
            if q < 1 or gcd(p, q) != 1:
                raise FrontError(f"declared knot type ({p}, {q}) is not a valid torus pair")
            meta = (int(p), int(q))
        self.base = base
        self.events = evs
        self.meta = meta
        self.counts = _scan_counts(base, evs)
        self._trace(orient if orient is not None else {1: 1})
        if meta is not None and self.winding != meta[1]:
            raise FrontError(
                f"declared winding q = {meta[1]} but traced winding is {self.winding}"
            )

    def _trace(self, orient: Mapping[int, int]) -> None:
        n = len(self.events)
        nslices = max(n, 1)
        link = _pairings(self.counts, self.events)
        dirs: dict[tuple[int, int], int] = {}
        comp: dict[tuple[int, int], int] = {}
        ncomp = 0
        for h0 in range(1, self.base + 1):
            if (0, h0) in comp:
                continue
            cid = ncomp
            ncomp += 1
            start = (0, h0, 0)
            entry = start
            while True:
                j, h, side = entry
                comp[(j, h)] = cid
                dirs[(j, h)] = 1 if side == 0 else -1
                entry = link[(j, h, 1 - side)]
                if entry == start:
                    break
        for j in range(nslices):
            for h in range(1, self.counts[j] + 1):
                if (j, h) not in comp:
                    raise FrontError(
                        f"component at slice {j}, height {h} never crosses the seam; "
                        "re-cut the annulus so every component meets theta = 0"
                    )
        flips: list[bool | None] = [None] * ncomp
        for h, d in sorted(orient.items()):
            if not isinstance(h, int) or not 1 <= h <= self.base:
                raise FrontError(f"orientation names seam height {h}, base is {self.base}")
            if d not in (1, -1):
                raise FrontError(f"orientation direction must be +1 or -1, got {d!r}")
            cid = comp[(0, h)]
            want_flip = dirs[(0, h)] != d
            if flips[cid] is None:
                flips[cid] = want_flip
            elif flips[cid] != want_flip:
                raise FrontError(f"inconsistent orientation for the component at seam height {h}")
        for cid, fl in enumerate(flips):
            if fl is None:
                h = min(hh for (j, hh), c in comp.items() if j == 0 and c == cid)
                raise FrontError(f"missing orientation for the component at seam height {h}")
        if any(flips):
            dirs = {seg: (-d if flips[comp[seg]] else d) for seg, d in dirs.items()}
        self._dirs = dirs
        self._comp = comp
        self.n_components = ncomp
        self.seam_dirs = tuple(dirs[(0, h)] for h in range(1, self.base + 1))
        self.winding = sum(self.seam_dirs)

    def direction(self, slot: int, height: int) -> int:
        """Direction (+1 right, -1 left) of the strand at ``height`` in the slice at ``slot``."""
        n = len(self.events)
        if not 0 <= slot <= n:
            raise FrontError(f"slot {slot} out of range 0..{n}")
        if not 1 <= height <= self.counts[slot]:
            raise FrontError(f"no strand at height {height} in slot {slot}")
        return self._dirs[(slot if slot < max(n, 1) else 0, height)]

    def component_of(self, slot: int, height: int) -> int:
        n = len(self.events)
        return self._comp[(slot if slot < max(n, 1) else 0, height)]

    def orient_map(self) -> dict[int, int]:
        """Canonical orientation witnesses: lowest seam strand of each component."""
        seen: set[int] = set()
        out = {}
        for h in range(1, self.base + 1):
            cid = self._comp[(0, h)]
            if cid not in seen:
                seen.add(cid)
                out[h] = self.seam_dirs[h - 1]
        return out

    def _key(self):
        return (self.base, self.events, self.seam_dirs, self.meta)

    def __eq__(self, other):
        return isinstance(other, FrontWord) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        word = " ".join(f"{k}{i}" for k, i in self.events) or "(empty)"
        return f"FrontWord(base={self.base}, {word})"

    # slots classes have no __dict__; forbid accidental mutation after init
    def __setattr__(self, name, value):
        if hasattr(self, "winding") and name in self.__slots__:
            raise AttributeError("FrontWord is immutable")
        object.__setattr__(self, name, value)


@dataclass(frozen=True)
class Analysis:
    components: int
    winding: int
    seam_dirs: tuple[int, ...]
    counts: tuple[int, ...]


def analyze(f: FrontWord) -> Analysis:
    """Component count, seam directions, and longitudinal winding of a front."""
    return Analysis(f.n_components, f.winding, f.seam_dirs, tuple(f.counts))


@dataclass(frozen=True)
class FrontInvariants:
    writhe: int
    c_up: int
    c_down: int
    tb: int
    rot: int
    winding: int
    components: int


def front_invariants(f: FrontWord) -> FrontInvariants:
    """Writhe, cusp counts, tb and rot of a single-component oriented front."""
    if f.n_components != 1:
        raise FrontError(f"front has {f.n_components} components; invariants need exactly 1")
    n = len(f.events)
    writhe = c_up = c_down = 0
    for j, (kind, i) in enumerate(f.events):
        if kind == "x":
            asc, desc = f._dirs[(j, i)], f._dirs[(j, i + 1)]
            writhe += 1 if asc == desc else -1
        elif kind == "l":
            upper = f._dirs[((j + 1) % n, i + 1)]
            if upper == 1:
                c_up += 1
            else:
                c_down += 1
        else:
            upper = f._dirs[(j, i + 1)]
            if upper == 1:
                c_down += 1
            else:
                c_up += 1
    tb = writhe - (c_up + c_down) // 2
    rot = (c_down - c_up) // 2
    return FrontInvariants(writhe, c_up, c_down, tb, rot, f.winding, 1)


# ---------------------------------------------------------------------------
# canonical generators
# ---------------------------------------------------------------------------

def _self_check(f: FrontWord, tb: int, rot: int, what: str) -> FrontWord:
    inv = front_invariants(f)
    ok = inv.tb == tb and inv.rot == rot and (f.meta is None or f.winding == f.meta[1])
    if not ok:
        raise RuntimeError(
            f"{what} generator self-check failed: built (tb={inv.tb}, rot={inv.rot}, "
            f"winding={f.winding}), wanted (tb={tb}, rot={rot})"
        )
    return f


def zero_section() -> FrontWord:
    """The single seam strand: tb 0, rot 0, winding 1."""
    return _self_check(FrontWord(1, (), {1: 1}, meta=(0, 1)), 0, 0, "zero_section")


def positive_braid(p: int, q: int) -> FrontWord:
    """Closed positive braid front of the (p, q) knot, p >= 1, q >= 2: tb = p(q-1), rot = 0."""
    if p < 1 or q < 2:
        raise ValueError(f"positive braid needs p >= 1 and q >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"({p}, {q}) is not coprime")
    events = [cross(i) for _ in range(p) for i in range(1, q)]
    f = FrontWord(q, events, {1: 1}, meta=(p, q))
    return _self_check(f, p * (q - 1), 0, "positive_braid")


def negative_peak(p: int, q: int, variant: str = "down") -> FrontWord:
    """Detour-block front of the (p, q) knot for p < 0, q >= 2: tb = pq.

    Each of the |p| blocks sends the top strand back across the other q - 1
    strands and rejoins at the bottom, contributing q - 1 negative crossings
    and two cusps.  The ``down`` variant has all cusps down and rot = -p;
    ``up`` is its z-mirror with rot = p.
    """
    if p >= 0 or q < 2:
        raise ValueError(f"negative peak needs p < 0 and q >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"({p}, {q}) is not coprime")
    if variant not in ("down", "up"):
        raise ValueError(f"variant must be 'down' or 'up', got {variant!r}")
    block = [left_cusp(1)] + [cross(i) for i in range(2, q + 1)] + [right_cusp(q + 1)]
    f = FrontWord(q, block * (-p), {1: 1}, meta=(p, q))
    if variant == "up":
        f = mirror_z(f)
    rot = -p if variant == "down" else p
    return _self_check(f, p * q, rot, f"negative_peak[{variant}]")


def unknot_front() -> FrontWord:
    """A contractible two-cusp loop around the seam: tb -1, rot 0, winding 0.

    Carries no knot-type declaration, so torus-knot operations reject it;
    it exists to exercise the move calculus on winding-zero input.
    """
    f = FrontWord(2, (right_cusp(1), left_cusp(1)), {1: 1}, meta=None)
    return _self_check(f, -1, 0, "unknot_front")


_GENERATOR_KINDS = ("zero", "braid", "negpeak", "unknot")


def generate(kind: str, p: int | None = None, q: int | None = None, variant: str = "down") -> FrontWord:
    """Dispatch on a generator name; see the individual constructors."""
    if kind == "zero":
        return zero_section()
    if kind == "braid":
        return positive_braid(p, q)
    if kind == "negpeak":
        return negative_peak(p, q, variant)
    if kind == "unknot":
        return unknot_front()
    raise ValueError(f"unknown generator kind {kind!r}; expected one of {_GENERATOR_KINDS}")


# ---------------------------------------------------------------------------
# front surgery
# ---------------------------------------------------------------------------

def stabilize_front(f: FrontWord, sign: int, height: int = 1, slot: int = 0) -> FrontWord:
    """Insert the two-cusp zigzag gadget at ``slot`` on the strand at ``height``.

    tb drops by 1 and rot moves by ``sign``; winding and components are
    untouched.  The gadget adapts to the strand direction, so both
    rightward and leftward strands can be stabilized.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    d = f.direction(slot, height)
    h = height
    if sign * d == 1:
        gadget = (left_cusp(h), right_cusp(h + 1))
    else:
        gadget = (left_cusp(h + 1), right_cusp(h))
    events = f.events[:slot] + gadget + f.events[slot:]
    out = FrontWord(f.base, events, f.orient_map(), meta=f.meta)
    if out.winding != f.winding or out.n_components != f.n_components:
        raise RuntimeError("stabilization gadget changed winding or components")
    if f.n_components == 1:
        old, new = front_invariants(f), front_invariants(out)
        if (new.tb, new.rot) != (old.tb - 1, old.rot + sign):
            raise RuntimeError(
                f"stabilization gadget broke the invariant deltas: "
                f"tb {old.tb}->{new.tb}, rot {old.rot}->{new.rot} (sign {sign:+d})"
            )
    return out


def mirror_z(f: FrontWord) -> FrontWord:
    """Flip the front upside down: tb and winding kept, rot negated."""
    events = []
    for j, (kind, i) in enumerate(f.events):
        c = f.counts[j]
        if kind == "x":
            events.append(cross(c - i))
        elif kind == "l":
            events.append(left_cusp(c + 2 - i))
        else:
            events.append(right_cusp(c - i))
    orient = {f.base + 1 - h: f.seam_dirs[h - 1] for h in range(1, f.base + 1)}
    return FrontWord(f.base, events, orient, meta=f.meta)


def reverse_orientation(f: FrontWord) -> FrontWord:
    """Reverse the traversal of every component: rot and winding negated, tb kept.

    The reversed knot is a torus knot of the opposite classes, so any
    declared (p, q) is dropped.
    """
    orient = {h: -f.seam_dirs[h - 1] for h in range(1, f.base + 1)}
    return FrontWord(f.base, f.events, orient, meta=None)


def to_class(f: FrontWord) -> LegendrianClass:
    """Read off the jet-space Legendrian class of a front with a declared type."""
    if f.meta is None:
        raise FrontError("front carries no declared (p, q); cannot build a class")
    if f.n_components != 1:
        raise FrontError(f"front has {f.n_components} components; a knot class needs 1")
    inv = front_invariants(f)
    c = LegendrianClass(TorusKnotType(Ambient.JET, *f.meta), inv.tb, inv.rot)
    if not is_realizable(c):
        warnings.warn(
            f"front invariants (tb={inv.tb}, rot={inv.rot}) are not realizable for "
            f"declared type {f.meta}; the declaration is probably wrong",
            stacklevel=2,
        )
    return c
