"""Command-line interface.

Exit codes: 0 = affirmative decision or plain success, 1 = negative
decision (not isotopic, distinct invariants, inconclusive search),
2 = usage or data error (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import invariants as inv
from . import moves, textio
from .front import FrontWord, front_invariants, generate, stabilize_front
from .invariants import Ambient, LegendrianClass, TorusKnotType


def parse_type(ambient: Ambient, text: str) -> TorusKnotType:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"type literal must be 'p,q', got {text!r}")
    return TorusKnotType(ambient, int(parts[0]), int(parts[1]))


def parse_class(ambient: Ambient, text: str) -> LegendrianClass:
    """Class literal 'p,q,tw,rot', or 'p,q,rot' where no twist exists (s1s2, q=1)."""
    parts = [int(x) for x in text.split(",")]
    if len(parts) == 4:
        p, q, tw, rot = parts
        return LegendrianClass(TorusKnotType(ambient, p, q), tw, rot)
    if len(parts) == 3:
        p, q, rot = parts
        return LegendrianClass(TorusKnotType(ambient, p, q), None, rot)
    raise ValueError(f"class literal must be 'p,q[,tw],rot', got {text!r}")


def _read_front(path: str) -> FrontWord:
    return textio.parse_lfront(Path(path).read_text(encoding="utf-8"))


def _write(path: str, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode()
    Path(path).write_bytes(data)


def _emit(args, data: bytes) -> None:
    sys.stdout.write(data.decode())


def cmd_invariants(args) -> int:
    f = _read_front(args.file)
    if args.json:
        _emit(args, textio.invariants_json(f))
        return 0
    iv = front_invariants(f)
    for name, val in textio.invariants_dict(iv).items():
        print(f"{name} {val}")
    return 0


def cmd_generate(args) -> int:
    f = generate(args.kind, args.p, args.q, args.variant)
    _write(args.output, textio.print_lfront(f))
    if args.json:
        _emit(args, textio.invariants_json(f))
    else:
        iv = front_invariants(f)
        print(f"wrote {args.output} (tb {iv.tb}, rot {iv.rot}, winding {iv.winding})")
    return 0


def cmd_isotopic(args) -> int:
    if len(args.classes) != 2:
        raise ValueError("isotopic needs exactly two --class literals")
    amb = Ambient(args.ambient)
    c1, c2 = (parse_class(amb, s) for s in args.classes)
    verdict = inv.legendrian_isotopic(c1, c2)
    if args.json:
        _emit(args, textio._dump({"isotopic": verdict}))
    else:
        print("legendrian isotopic: " + ("yes" if verdict else "no"))
    return 0 if verdict else 1


def cmd_topiso(args) -> int:
    if len(args.types) != 2:
        raise ValueError("topiso needs exactly two --type literals")
    amb = Ambient(args.ambient)
    t1, t2 = (parse_type(amb, s) for s in args.types)
    verdict = inv.topologically_isotopic(t1, t2)
    if args.json:
        _emit(args, textio._dump({"isotopic": verdict}))
    else:
        print("topologically isotopic: " + ("yes" if verdict else "no"))
    return 0 if verdict else 1


def _atlas(args, depth: int) -> textio.Atlas:
    amb = Ambient(args.ambient)
    t = inv.normalize_type(parse_type(amb, args.type))
    rows = inv.mountain_range(t, depth, args.window)
    return textio.Atlas(t, rows)


def cmd_peaks(args) -> int:
    amb = Ambient(args.ambient)
    t = inv.normalize_type(parse_type(amb, args.type))
    pk = inv.peaks(t)
    if args.svg:
        _write(args.svg, textio.atlas_svg(_atlas(args, 0)))
        return 0
    if args.json:
        obj = {"ambient": t.ambient.value, "p": t.p, "q": t.q, "level": pk.level}
        if pk.is_finite:
            obj["rots"] = list(pk.rots)
        else:
            obj["residues"] = list(pk.residues)
            obj["modulus"] = pk.modulus
            if args.window is not None:
                obj["rots_in_window"] = list(pk.rots_in_window(args.window))
        _emit(args, textio._dump(obj))
        return 0
    print(f"type {t}")
    print(f"level {'none' if pk.level is None else pk.level}")
    if pk.is_finite:
        print("rots " + " ".join(str(r) for r in pk.rots))
    else:
        print(f"rots {{r : r = {' or '.join(str(a) for a in pk.residues)} (mod {pk.modulus})}}")
        if args.window is not None:
            print("rots_in_window " + " ".join(str(r) for r in pk.rots_in_window(args.window)))
    return 0


def cmd_atlas(args) -> int:
    atlas = _atlas(args, args.depth)
    if args.svg:
        _write(args.svg, textio.atlas_svg(atlas))
        return 0
    if args.json:
        _emit(args, textio.atlas_json(atlas))
        return 0
    for level, rots in atlas.rows:
        label = "-" if level is None else str(level)
        print(f"{label}: " + " ".join(str(r) for r in rots))
    return 0


def cmd_stabilize(args) -> int:
    f = _read_front(args.file)
    sign = 1 if args.sign == "+" else -1
    out = stabilize_front(f, sign, height=args.height, slot=args.slot)
    _write(args.output, textio.print_lfront(out))
    iv = front_invariants(out) if out.n_components == 1 else None
    if args.json:
        _emit(args, textio.invariants_json(out))
    elif iv is not None:
        print(f"wrote {args.output} (tb {iv.tb}, rot {iv.rot})")
    else:
        print(f"wrote {args.output}")
    return 0


def cmd_move(args) -> int:
    f = _read_front(args.file)
    m = moves.parse_move(args.apply)
    out = moves.apply_move(f, m)
    _write(args.output, textio.print_lfront(out))
    if args.json:
        _emit(args, textio.front_json(out))
    else:
        print(f"wrote {args.output} (applied {m})")
    return 0


def cmd_certify(args) -> int:
    f1, f2 = _read_front(args.front1), _read_front(args.front2)
    res = moves.certify_isotopic(f1, f2, args.budget)
    if args.json:
        obj = {"status": res.status, "explored": res.explored}
        if res.path is not None:
            obj["path"] = [str(m) for m in res.path]
        if res.witness:
            obj["witness"] = {k: list(v) for k, v in res.witness.items()}
        _emit(args, textio._dump(obj))
    elif res.status == moves.EQUIVALENT:
        print(f"equivalent (path length {len(res.path)}, explored {res.explored})")
    elif res.status == moves.DISTINCT:
        diffs = ", ".join(f"{k} {a} vs {b}" for k, (a, b) in sorted(res.witness.items()))
        print(f"distinct invariants: {diffs}")
    else:
        print(f"inconclusive (explored {res.explored})")
    return 0 if res.status == moves.EQUIVALENT else 1


_AMBIENTS = [a.value for a in Ambient]


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that accepts '-1,2,0' style literals as option values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d[\d,+-]*$")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(
        prog="legtorus",
        description="Legendrian torus knot invariants, atlases, and isotopy oracles",
    )
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="tb/rot/winding of an .lfront diagram")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("generate", help="write a canonical front to a file")
    p.add_argument("--kind", required=True, choices=["braid", "negpeak", "zero"])
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--variant", choices=["up", "down"], default="down")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("isotopic", help="decide Legendrian isotopy of two classes")
    p.add_argument("--ambient", required=True, choices=_AMBIENTS)
    p.add_argument("--class", dest="classes", action="append", required=True,
                   metavar="p,q[,tw],rot")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_isotopic)

    p = sub.add_parser("topiso", help="decide smooth isotopy of two torus knot types")
    p.add_argument("--ambient", required=True, choices=_AMBIENTS)
    p.add_argument("--type", dest="types", action="append", required=True, metavar="p,q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_topiso)

    p = sub.add_parser("peaks", help="maximal-twist classes of a knot type")
    p.add_argument("--ambient", required=True, choices=_AMBIENTS)
    p.add_argument("--type", required=True, metavar="p,q")
    p.add_argument("--window", type=int)
    p.add_argument("--svg", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_peaks)

    p = sub.add_parser("atlas", help="mountain range below the peaks")
    p.add_argument("--ambient", required=True, choices=_AMBIENTS)
    p.add_argument("--type", required=True, metavar="p,q")
    p.add_argument("--depth", type=int, default=0)
    p.add_argument("--window", type=int)
    p.add_argument("--svg", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("stabilize", help="insert a stabilization zigzag")
    p.add_argument("file")
    p.add_argument("--sign", required=True, choices=["+", "-"])
    p.add_argument("--height", type=int, default=1)
    p.add_argument("--slot", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("move", help="apply one catalogue move to a front")
    p.add_argument("file")
    p.add_argument("--apply", required=True, metavar="RULE[:H]@POS")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("certify", help="search for a move path between two fronts")
    p.add_argument("front1")
    p.add_argument("front2")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
