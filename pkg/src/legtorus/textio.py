"""Text and graphics I/O: the .lfront format, JSON emission, SVG rendering.

The .lfront grammar is line oriented; every byte of a document belongs to
one of these line forms:

    LFRONT 1              header, required first
    knot <p> <q>          optional declared torus type
    base <n>              seam strand count, n >= 1
    x <i> | l <i> | r <i> event lines in left-to-right order
    orient <height> <+|-> seam-strand orientation, one or more
    # ...                 comment (blank lines are ignored too)

Parse errors carry 1-based line numbers.  ``print_lfront`` emits the
canonical form (single spaces, events one per line, orientation witnesses
sorted); printing then parsing is the identity on front words, and all
renderers are deterministic byte for byte.
"""

from __future__ import annotations

import json
from typing import NamedTuple

from .front import FrontError, FrontInvariants, FrontWord, _scan_counts, front_invariants
from .invariants import TorusKnotType

LFRONT_HEADER = "LFRONT 1"


class LfrontError(ValueError):
    """Malformed .lfront text; ``line`` is the offending 1-based line number."""

    def __init__(self, msg: str, line: int):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class Atlas(NamedTuple):
    """A mountain range together with the type it belongs to, ready to render."""

    knot_type: TorusKnotType
    rows: list


def parse_lfront(text: str) -> FrontWord:
    """Parse .lfront text into a validated front word."""
    header_seen = False
    meta = None
    base = None
    events = []
    event_lines = []
    orient = {}
    stage = "header"  # header -> knot -> base -> events/orient
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        word = parts[0]
        if not header_seen:
            if line != LFRONT_HEADER:
                raise LfrontError(f"expected header {LFRONT_HEADER!r}", lineno)
            header_seen = True
            stage = "knot"
            continue
        if word == "knot":
            if stage != "knot":
                raise LfrontError("'knot' must come right after the header", lineno)
            meta = (_int(parts, 1, lineno), _int(parts, 2, lineno))
            _arity(parts, 3, lineno)
            stage = "base"
            continue
        if word == "base":
            if stage not in ("knot", "base"):
                raise LfrontError("duplicate or misplaced 'base'", lineno)
            base = _int(parts, 1, lineno)
            _arity(parts, 2, lineno)
            if base < 1:
                raise LfrontError(f"base must be >= 1, got {base}", lineno)
            stage = "events"
            continue
        if word in ("x", "l", "r"):
            if stage not in ("events",):
                raise LfrontError(
                    "event line before 'base'" if base is None else "event line after 'orient'",
                    lineno,
                )
            i = _int(parts, 1, lineno)
            _arity(parts, 2, lineno)
            if i < 1:
                raise LfrontError(f"event height must be >= 1, got {i}", lineno)
            events.append((word, i))
            event_lines.append(lineno)
            continue
        if word == "orient":
            if base is None:
                raise LfrontError("'orient' before 'base'", lineno)
            stage = "orient"
            h = _int(parts, 1, lineno)
            if len(parts) != 3 or parts[2] not in ("+", "-"):
                raise LfrontError("expected 'orient <height> <+|->'", lineno)
            d = 1 if parts[2] == "+" else -1
            if h in orient and orient[h] != d:
                raise LfrontError(f"conflicting orientation for seam height {h}", lineno)
            orient[h] = d
            continue
        raise LfrontError(f"unknown directive {word!r}", lineno)
    if not header_seen:
        raise LfrontError(f"empty document; expected header {LFRONT_HEADER!r}", max(last_line, 1))
    if base is None:
        raise LfrontError("missing 'base' line", last_line + 1)

    def _structural(exc: ValueError) -> LfrontError:
        idx = getattr(exc, "event_index", None)
        line = event_lines[idx] if idx is not None and idx < len(event_lines) else last_line + 1
        return LfrontError(str(exc), line)

    try:
        _scan_counts(base, tuple(events))
    except FrontError as e:
        raise _structural(e) from None
    if not orient:
        raise LfrontError("missing 'orient' line", last_line + 1)
    try:
        return FrontWord(base, events, orient, meta=meta)
    except ValueError as e:
        raise _structural(e) from None


def _int(parts, idx, lineno) -> int:
    if idx >= len(parts):
        raise LfrontError(f"'{parts[0]}' is missing argument {idx}", lineno)
    try:
        return int(parts[idx])
    except ValueError:
        raise LfrontError(f"expected an integer, got {parts[idx]!r}", lineno) from None


def _arity(parts, n, lineno) -> None:
    if len(parts) != n:
        raise LfrontError(f"'{parts[0]}' takes {n - 1} argument(s), got {len(parts) - 1}", lineno)


def print_lfront(f: FrontWord) -> str:
    """Canonical .lfront text for a front word; ``parse_lfront`` inverts it."""
    lines = [LFRONT_HEADER]
    if f.meta is not None:
        lines.append(f"knot {f.meta[0]} {f.meta[1]}")
    lines.append(f"base {f.base}")
    for kind, i in f.events:
        lines.append(f"{kind} {i}")
    for h, d in sorted(f.orient_map().items()):
        lines.append(f"orient {h} {'+' if d == 1 else '-'}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def _dump(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode()


def invariants_json(f: FrontWord) -> bytes:
    inv = front_invariants(f)
    obj = invariants_dict(inv)
    if f.meta is not None:
        obj["p"], obj["q"] = f.meta
    return _dump(obj)


def invariants_dict(inv: FrontInvariants) -> dict:
    return {
        "writhe": inv.writhe,
        "c_up": inv.c_up,
        "c_down": inv.c_down,
        "tb": inv.tb,
        "rot": inv.rot,
        "winding": inv.winding,
        "components": inv.components,
    }


def front_json(f: FrontWord) -> bytes:
    obj = {
        "base": f.base,
        "events": [[k, i] for k, i in f.events],
        "orient": {str(h): d for h, d in f.orient_map().items()},
    }
    if f.meta is not None:
        obj["p"], obj["q"] = f.meta
    if f.n_components == 1:
        obj["invariants"] = invariants_dict(front_invariants(f))
    return _dump(obj)


def atlas_json(atlas: Atlas) -> bytes:
    t = atlas.knot_type
    return _dump(
        {
            "ambient": t.ambient.value,
            "p": t.p,
            "q": t.q,
            "levels": [
                {"twist": level, "rots": list(rots)} for level, rots in atlas.rows
            ],
        }
    )


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

_RUN = 26        # horizontal extent of a slice segment
_COL = 34        # horizontal extent of an event column
_DY = 24         # vertical distance between strand heights
_MARGIN = 18


def _svg(width: float, height: float, body: list[str]) -> bytes:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">'
    )
    style = (
        "<style>path,line{stroke:#000;stroke-width:1.5;fill:none}"
        ".cusp{fill:#000;stroke:none}"
        "text{font:10px monospace;fill:#444}</style>"
    )
    return ("\n".join([head, style, *body, "</svg>"]) + "\n").encode()


def front_svg(f: FrontWord) -> bytes:
    """Draw a front: unbroken over-strands (the descending, lesser-slope arc),
    gapped under-strands, dot-marked semicubical cusps."""
    n = len(f.events)
    maxc = max(f.counts)
    height = _MARGIN * 2 + (maxc + 1) * _DY

    def y(h: int) -> float:
        return height - _MARGIN - h * _DY

    body = []
    x = float(_MARGIN)
    for j in range(n + 1):
        c = f.counts[j]
        for h in range(1, c + 1):
            body.append(f'<line x1="{x:.1f}" y1="{y(h):.1f}" x2="{x + _RUN:.1f}" y2="{y(h):.1f}"/>')
        x += _RUN
        if j == n:
            break
        kind, i = f.events[j]
        x1 = x + _COL
        if kind == "x":
            ya, yb = y(i), y(i + 1)
            body.append('<g class="crossing">')
            body.append(f'<line x1="{x:.1f}" y1="{yb:.1f}" x2="{x1:.1f}" y2="{ya:.1f}"/>')
            mx, my = (x + x1) / 2, (ya + yb) / 2
            gx, gy = (x1 - x) * 0.18, (ya - yb) * 0.18
            body.append(f'<line x1="{x:.1f}" y1="{ya:.1f}" x2="{mx - gx:.1f}" y2="{my + gy:.1f}"/>')
            body.append(f'<line x1="{mx + gx:.1f}" y1="{my - gy:.1f}" x2="{x1:.1f}" y2="{yb:.1f}"/>')
            body.append("</g>")
            for h in range(1, f.counts[j] + 1):
                if h not in (i, i + 1):
                    body.append(f'<line x1="{x:.1f}" y1="{y(h):.1f}" x2="{x1:.1f}" y2="{y(h):.1f}"/>')
        elif kind == "l":
            px, py = x + _COL * 0.25, (y(i) + y(i + 1)) / 2
            body.append(f'<path d="M {px:.1f} {py:.1f} Q {px + 4:.1f} {py + 7:.1f} {x1:.1f} {y(i):.1f}"/>')
            body.append(f'<path d="M {px:.1f} {py:.1f} Q {px + 4:.1f} {py - 7:.1f} {x1:.1f} {y(i + 1):.1f}"/>')
            body.append(f'<circle class="cusp" cx="{px:.1f}" cy="{py:.1f}" r="2"/>')
            for h in range(1, f.counts[j] + 1):
                h2 = h if h < i else h + 2
                body.append(f'<line x1="{x:.1f}" y1="{y(h):.1f}" x2="{x1:.1f}" y2="{y(h2):.1f}"/>')
        else:
            px, py = x + _COL * 0.75, (y(i) + y(i + 1)) / 2
            body.append(f'<path d="M {x:.1f} {y(i):.1f} Q {px - 4:.1f} {py + 7:.1f} {px:.1f} {py:.1f}"/>')
            body.append(f'<path d="M {x:.1f} {y(i + 1):.1f} Q {px - 4:.1f} {py - 7:.1f} {px:.1f} {py:.1f}"/>')
            body.append(f'<circle class="cusp" cx="{px:.1f}" cy="{py:.1f}" r="2"/>')
            for h in range(1, f.counts[j] + 1):
                if h not in (i, i + 1):
                    h2 = h if h < i else h - 2
                    body.append(f'<line x1="{x:.1f}" y1="{y(h):.1f}" x2="{x1:.1f}" y2="{y(h2):.1f}"/>')
        x = x1
    width = x + _MARGIN
    return _svg(width, height, body)


def atlas_svg(atlas: Atlas) -> bytes:
    """Mountain range as a (rot, twist)-lattice of dots, one row per level."""
    t = atlas.knot_type
    rows = atlas.rows
    all_rots = [r for _, rr in rows for r in rr]
    lo = min(all_rots, default=0)
    hi = max(all_rots, default=0)
    dx, dy = 22, 26
    x0 = 70 - lo * dx
    width = x0 + hi * dx + 40
    height = _MARGIN * 2 + (len(rows) + 1) * dy
    body = [f'<text x="{_MARGIN}" y="{_MARGIN + 4}">{t.ambient.value} ({t.p},{t.q})</text>']
    for k, (level, rots) in enumerate(rows):
        yy = _MARGIN + (k + 1) * dy
        label = "-" if level is None else str(level)
        body.append(f'<text x="{_MARGIN}" y="{yy + 3}">{label}</text>')
        for r in rots:
            body.append(f'<circle class="cusp" cx="{x0 + r * dx:.0f}" cy="{yy}" r="3"/>')
    for r in range(lo, hi + 1):
        body.append(f'<text x="{x0 + r * dx - 3:.0f}" y="{height - 4}">{r}</text>')
    return _svg(width, height, body)


def render(target, fmt: str) -> bytes:
    """Render a ``FrontWord`` or an ``Atlas`` to deterministic svg or json bytes."""
    if fmt not in ("svg", "json"):
        raise ValueError(f"format must be 'svg' or 'json', got {fmt!r}")
    if isinstance(target, FrontWord):
        return front_svg(target) if fmt == "svg" else front_json(target)
    if isinstance(target, Atlas):
        return atlas_svg(target) if fmt == "svg" else atlas_json(target)
    raise TypeError(f"cannot render {type(target).__name__}")
