"""Front moves and bounded-search isotopy certification.

The catalogue contains exactly the rewrites of annular front words that
realize Legendrian isotopies:

====================  =====================================================
rot@k                 re-cut the annulus k events later (seam rotation)
swap@s                commute the adjacent events s, s+1 when their height
                      supports are disjoint (planar isotopy)
braid@s               triple-point move  x(i) x(i+1) x(i) <-> x(i+1) x(i) x(i+1)
passl_dn  / passl_up  a left cusp point passes the strand just below/above:
                      l(j) <-> l(j-1) x(j) x(j-1)   /   l(j) <-> l(j+1) x(j) x(j+1)
passr_dn  / passr_up  the right-cusp mirrors:
                      r(j) <-> x(j-1) x(j) r(j-1)   /   r(j) <-> x(j+1) x(j) r(j+1)
sw_lo / sw_hi         swallowtail on the strand at height h, loop below/above:
                      (nothing) <-> l(h) x(h+1) r(h)  /  l(h+1) x(h) r(h+1)
====================  =====================================================

Rules with a ``+``/``-`` suffix grow/shrink the word; each catalogue entry
has its inverse in the catalogue.  Every application re-checks that
(winding, components, tb, rot) are unchanged and fails hard otherwise, so a
mistranscribed rewrite cannot survive the test suite.

Certification hashes words by their lexicographically minimal rotation
(decorated with strand directions, so orientation classes stay separate)
and runs a bidirectional breadth-first search over the catalogue.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .front import FrontError, FrontWord, front_invariants


class IllegalMove(ValueError):
    """The requested move does not apply at that position."""


@dataclass(frozen=True)
class MoveInstance:
    rule: str
    pos: int
    height: int | None = None

    def __str__(self) -> str:
        if self.height is not None:
            return f"{self.rule}:{self.height}@{self.pos}"
        return f"{self.rule}@{self.pos}"


RULE_IDS = (
    "rot", "swap", "braid",
    "passl_dn-", "passl_dn+", "passl_up-", "passl_up+",
    "passr_dn-", "passr_dn+", "passr_up-", "passr_up+",
    "sw_lo-", "sw_lo+", "sw_hi-", "sw_hi+",
)


def parse_move(text: str) -> MoveInstance:
    """Parse ``rule[:height]@pos``, e.g. ``swap@3`` or ``sw_lo+:2@0``."""
    head, sep, pos = text.partition("@")
    if not sep:
        raise ValueError(f"move {text!r} lacks '@pos'")
    rule, _, height = head.partition(":")
    if rule not in RULE_IDS:
        raise ValueError(f"unknown move rule {rule!r}; known rules: {', '.join(RULE_IDS)}")
    try:
        return MoveInstance(rule, int(pos), int(height) if height else None)
    except ValueError as e:
        raise ValueError(f"bad move literal {text!r}: {e}") from None


# -- commutation of height-disjoint adjacent events -------------------------

_DELTA = {"x": 0, "l": 2, "r": -2}


def _hi_after(ev) -> int:
    kind, i = ev
    return i + 1 if kind in ("x", "l") else i - 1


def _swap_pair(a, b):
    """Swapped pair for two commuting adjacent events, or None."""
    ka, ia = a
    kb, ib = b
    if ib >= _hi_after(a) + 1:  # b sits entirely above a
        return ((kb, ib - _DELTA[ka]), a)
    below = ib <= ia if kb == "l" else ib + 1 <= ia - 1
    if below:  # b sits entirely below a
        return (b, (ka, ia + _DELTA[kb]))
    return None


# -- three-event window rewrites --------------------------------------------

def _match_braid(w):
    (k1, a), (k2, b), (k3, c) = w
    if k1 == k2 == k3 == "x" and abs(a - b) == 1 and c == a:
        return (("x", b), ("x", a), ("x", b))
    return None


def _match_passl_dn(w):
    (k1, a), (k2, b), (k3, c) = w
    if (k1, k2, k3) == ("l", "x", "x") and b == a + 1 and c == a:
        return (("l", a + 1),)
    return None


def _match_passl_up(w):
    (k1, a), (k2, b), (k3, c) = w
    if (k1, k2, k3) == ("l", "x", "x") and b == a - 1 and c == a:
        return (("l", a - 1),)
    return None


def _match_passr_dn(w):
    (k1, a), (k2, b), (k3, c) = w
    if (k1, k2, k3) == ("x", "x", "r") and b == a + 1 and c == a:
        return (("r", a + 1),)
    return None


def _match_passr_up(w):
    (k1, a), (k2, b), (k3, c) = w
    if (k1, k2, k3) == ("x", "x", "r") and b == a - 1 and c == a:
        return (("r", a - 1),)
    return None


def _match_sw_lo(w):
    (k1, a), (k2, b), (k3, c) = w
    if (k1, k2, k3) == ("l", "x", "r") and b == a + 1 and c == a:
        return ()
    return None


def _match_sw_hi(w):
    (k1, a), (k2, b), (k3, c) = w
    if (k1, k2, k3) == ("l", "x", "r") and b == a - 1 and c == a:
        return ()
    return None


_CONTRACTIONS = (
    ("passl_dn-", _match_passl_dn),
    ("passl_up-", _match_passl_up),
    ("passr_dn-", _match_passr_dn),
    ("passr_up-", _match_passr_up),
    ("sw_lo-", _match_sw_lo),
    ("sw_hi-", _match_sw_hi),
)


def _expand_pass(rule: str, ev, count_before: int):
    """Replacement word for a one-event pass expansion, or None."""
    kind, j = ev
    if rule == "passl_dn+" and kind == "l" and j >= 2:
        return (("l", j - 1), ("x", j), ("x", j - 1))
    if rule == "passl_up+" and kind == "l" and count_before >= j:
        return (("l", j + 1), ("x", j), ("x", j + 1))
    if rule == "passr_dn+" and kind == "r" and j >= 2:
        return (("x", j - 1), ("x", j), ("r", j - 1))
    if rule == "passr_up+" and kind == "r" and count_before >= j + 2:
        return (("x", j + 1), ("x", j), ("r", j + 1))
    return None

_PASS_EXPANSIONS = ("passl_dn+", "passl_up+", "passr_dn+", "passr_up+")


def _sw_gadget(rule: str, h: int):
    if rule == "sw_lo+":
        return (("l", h), ("x", h + 1), ("r", h))
    return (("l", h + 1), ("x", h), ("r", h + 1))


# -- application -------------------------------------------------------------

def rotate_front(f: FrontWord, k: int) -> FrontWord:
    """Move the seam k events forward; the base becomes the count at the new cut."""
    n = len(f.events)
    if n == 0:
        raise IllegalMove("cannot rotate a front with no events")
    k %= n
    if k == 0:
        return f
    c = f.counts[k]
    if c < 1:
        raise IllegalMove(f"rotation by {k} lands on an empty slice")
    orient = {h: f._dirs[(k, h)] for h in range(1, c + 1)}
    return FrontWord(c, f.events[k:] + f.events[:k], orient, meta=f.meta)


def _rebuild(f: FrontWord, events) -> FrontWord:
    return FrontWord(f.base, events, f.orient_map(), meta=f.meta)


def _apply(f: FrontWord, m: MoveInstance) -> FrontWord:
    n = len(f.events)
    rule, s = m.rule, m.pos
    if rule == "rot":
        if n == 0 or not 1 <= s <= n - 1:
            raise IllegalMove(f"rot position must be in 1..{max(n - 1, 0)}")
        try:
            return rotate_front(f, s)
        except FrontError as e:
            raise IllegalMove(str(e)) from None
    if rule == "swap":
        if not 0 <= s <= n - 2:
            raise IllegalMove(f"swap position {s} out of range")
        res = _swap_pair(f.events[s], f.events[s + 1])
        if res is None:
            raise IllegalMove(f"events at {s}, {s + 1} do not commute")
        return _rebuild(f, f.events[:s] + res + f.events[s + 2:])
    if rule == "braid" or rule.endswith("-"):
        matcher = _match_braid if rule == "braid" else dict(_CONTRACTIONS)[rule]
        if not 0 <= s <= n - 3:
            raise IllegalMove(f"window position {s} out of range")
        rep = matcher(f.events[s:s + 3])
        if rep is None:
            raise IllegalMove(f"{rule} pattern does not match at {s}")
        return _rebuild(f, f.events[:s] + rep + f.events[s + 3:])
    if rule in _PASS_EXPANSIONS:
        if not 0 <= s <= n - 1:
            raise IllegalMove(f"event position {s} out of range")
        rep = _expand_pass(rule, f.events[s], f.counts[s])
        if rep is None:
            raise IllegalMove(f"{rule} does not apply to event {s}")
        return _rebuild(f, f.events[:s] + rep + f.events[s + 1:])
    if rule in ("sw_lo+", "sw_hi+"):
        if m.height is None:
            raise IllegalMove(f"{rule} needs an explicit strand height")
        if not 0 <= s <= n:
            raise IllegalMove(f"insertion slot {s} out of range 0..{n}")
        if not 1 <= m.height <= f.counts[s]:
            raise IllegalMove(f"no strand at height {m.height} in slot {s}")
        return _rebuild(f, f.events[:s] + _sw_gadget(rule, m.height) + f.events[s:])
    raise IllegalMove(f"unknown move rule {rule!r}")


def apply_move(f: FrontWord, m: MoveInstance) -> FrontWord:
    """Apply a catalogue move; raises if illegal, fails hard if it broke an invariant."""
    try:
        out = _apply(f, m)
    except FrontError as e:
        raise IllegalMove(str(e)) from None
    if out.winding != f.winding or out.n_components != f.n_components:
        raise RuntimeError(f"move {m} changed winding or components (catalogue bug)")
    if f.n_components == 1:
        a, b = front_invariants(f), front_invariants(out)
        if (a.tb, a.rot) != (b.tb, b.rot):
            raise RuntimeError(
                f"move {m} changed invariants tb {a.tb}->{b.tb}, rot {a.rot}->{b.rot} "
                "(catalogue bug)"
            )
    return out


def inverse_move(m: MoveInstance, before: FrontWord) -> MoveInstance:
    """The catalogue move undoing ``m``, given the word ``m`` was applied to."""
    if m.rule == "rot":
        return MoveInstance("rot", len(before.events) - m.pos)
    if m.rule in ("swap", "braid"):
        return m
    if m.rule.endswith("+"):
        return MoveInstance(m.rule[:-1] + "-", m.pos)
    base = m.rule[:-1]
    if base == "sw_lo":
        return MoveInstance("sw_lo+", m.pos, before.events[m.pos][1])
    if base == "sw_hi":
        return MoveInstance("sw_hi+", m.pos, before.events[m.pos][1] - 1)
    return MoveInstance(base + "+", m.pos)


def _local_moves(f: FrontWord) -> list[MoveInstance]:
    """Catalogue moves legal on ``f`` in registry order, seam rotations excluded."""
    n = len(f.events)
    out = []
    for s in range(n - 1):
        if _swap_pair(f.events[s], f.events[s + 1]) is not None:
            out.append(MoveInstance("swap", s))
    for s in range(n - 2):
        if _match_braid(f.events[s:s + 3]) is not None:
            out.append(MoveInstance("braid", s))
    for rule, matcher in _CONTRACTIONS:
        for s in range(n - 2):
            if matcher(f.events[s:s + 3]) is not None:
                out.append(MoveInstance(rule, s))
    for rule in _PASS_EXPANSIONS:
        for s in range(n):
            if _expand_pass(rule, f.events[s], f.counts[s]) is not None:
                out.append(MoveInstance(rule, s))
    for rule in ("sw_lo+", "sw_hi+"):
        for s in range(n + 1):
            for h in range(1, f.counts[s] + 1):
                out.append(MoveInstance(rule, s, h))
    return out


def legal_moves(f: FrontWord) -> list[MoveInstance]:
    """Every catalogue move applicable to ``f``, in a fixed deterministic order."""
    n = len(f.events)
    out = []
    for k in range(1, n):
        try:
            rotate_front(f, k)
        except (IllegalMove, FrontError):
            continue
        out.append(MoveInstance("rot", k))
    out.extend(_local_moves(f))
    return out


# -- canonical cyclic hashing and certification ------------------------------

def canonical_key(f: FrontWord):
    """Rotation-invariant identity of an oriented front (declared type ignored).

    The word is decorated with the directions of each event's active strands
    before minimizing over rotations, so fronts differing only in component
    orientation never collide.
    """
    n = len(f.events)
    if n == 0:
        return ((), f.base, f.seam_dirs)
    deco = []
    for j, (kind, i) in enumerate(f.events):
        if kind == "l":
            jj = (j + 1) % n
            deco.append((kind, i, f._dirs[(jj, i)], f._dirs[(jj, i + 1)]))
        else:
            deco.append((kind, i, f._dirs[(j, i)], f._dirs[(j, i + 1)]))
    best = None
    for k in range(n):
        cand = (
            tuple(deco[k:] + deco[:k]),
            f.counts[k],
            tuple(f._dirs[(k, h)] for h in range(1, f.counts[k] + 1)),
        )
        if best is None or cand < best:
            best = cand
    return best


EQUIVALENT = "equivalent"
DISTINCT = "distinct_invariants"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CertifyResult:
    status: str
    path: tuple[MoveInstance, ...] | None = None
    witness: dict = field(default_factory=dict)
    explored: int = 0

    def __bool__(self) -> bool:
        return self.status == EQUIVALENT


def replay_path(f: FrontWord, path) -> FrontWord:
    for m in path:
        f = apply_move(f, m)
    return f


def _same_word(a: FrontWord, b: FrontWord) -> bool:
    return (a.base, a.events, a.seam_dirs) == (b.base, b.events, b.seam_dirs)


def _alignment(w: FrontWord, target: FrontWord) -> tuple[MoveInstance, ...]:
    """Seam rotation carrying ``w`` onto ``target`` exactly (equal canonical keys)."""
    if _same_word(w, target):
        return ()
    for k in range(1, len(w.events)):
        try:
            r = rotate_front(w, k)
        except (IllegalMove, FrontError):
            continue
        if _same_word(r, target):
            return (MoveInstance("rot", k),)
    raise RuntimeError("rotation alignment failed despite equal canonical keys")


def _invert_path(root: FrontWord, path) -> tuple[MoveInstance, ...]:
    words = [root]
    for m in path:
        words.append(apply_move(words[-1], m))
    return tuple(
        inverse_move(m, wb) for m, wb in zip(reversed(path), reversed(words[:-1]))
    )


def _successors(w: FrontWord):
    n = len(w.events)
    variants = [((), w)]
    for k in range(1, n):
        try:
            variants.append(((MoveInstance("rot", k),), rotate_front(w, k)))
        except (IllegalMove, FrontError):
            continue
    for pre, wr in variants:
        for m in _local_moves(wr):
            try:
                w2 = apply_move(wr, m)
            except (IllegalMove, FrontError):
                continue
            yield pre + (m,), w2


def certify_isotopic(f1: FrontWord, f2: FrontWord, budget: int) -> CertifyResult:
    """Decide Legendrian isotopy of two single-component fronts by move search.

    Returns ``distinct_invariants`` immediately when winding, tb or rot
    disagree (these are move-invariant, so the fronts cannot be isotopic).
    Otherwise runs a bidirectional BFS over canonically hashed words,
    exploring at most ``budget`` states; an ``equivalent`` verdict carries a
    concrete move path from ``f1`` to ``f2`` that replays successfully.
    """
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    for f in (f1, f2):
        if f.n_components != 1:
            raise FrontError("certification requires single-component fronts")
    a, b = front_invariants(f1), front_invariants(f2)
    witness = {
        name: (getattr(a, name), getattr(b, name))
        for name in ("winding", "tb", "rot")
        if getattr(a, name) != getattr(b, name)
    }
    if witness:
        return CertifyResult(DISTINCT, witness=witness)
    k1, k2 = canonical_key(f1), canonical_key(f2)
    if k1 == k2:
        return CertifyResult(EQUIVALENT, path=_alignment(f1, f2))
    visited = ({k1: (f1, ())}, {k2: (f2, ())})
    queues = (deque([k1]), deque([k2]))
    explored = 2
    while queues[0] and queues[1]:
        side = 0 if len(queues[0]) <= len(queues[1]) else 1
        key = queues[side].popleft()
        word, path = visited[side][key]
        for step, w2 in _successors(word):
            nk = canonical_key(w2)
            if nk in visited[side]:
                continue
            if nk in visited[1 - side]:
                ow, opath = visited[1 - side][nk]
                if side == 0:
                    full = path + step + _alignment(w2, ow) + _invert_path(f2, opath)
                else:
                    full = opath + _alignment(ow, w2) + _invert_path(f2, path + step)
                return CertifyResult(EQUIVALENT, path=full, explored=explored)
            if explored >= budget:
                return CertifyResult(INCONCLUSIVE, explored=explored)
            visited[side][nk] = (w2, path + step)
            queues[side].append(nk)
            explored += 1
    return CertifyResult(INCONCLUSIVE, explored=explored)
