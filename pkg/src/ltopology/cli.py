"""Command-line front end.

Exit codes: 0 success or check passed, 1 check failed (witness printed),
2 input error, 3 an enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .documents import (
    DocumentError,
    WorkbenchDocument,
    document_from_dict,
    label_text,
    load_document,
    serialize_document,
    space_candidate,
)
from .errors import CapExceeded, Check, FrameError, PreconditionError, TopologyError
from .fixtures import stock_catalog
from .frames import generate_subframe, named_frame, validate_frame
from .sober import eta, is_sober, point_space
from .spaces import (
    DEFAULT_POINT_CAP,
    DEFAULT_SEARCH_CAP,
    initial_topology,
    is_ltopology,
    is_t0,
    map_predicate,
    product_space,
    quotient_space,
    sierpinski_space,
    subspace,
    t0_reflection,
)
from .verify import Member, SUITES, TestFamily, bracket_closure, fixture_family, is_epimorphism, run_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


class Context:
    def __init__(self, args):
        self.args = args
        self._doc = None
        self._stock = None

    @property
    def doc(self) -> WorkbenchDocument:
        # parsed on first use so that checks on raw objects can report invalid ones
        if self._doc is None:
            self._doc = load_document(self.args.doc) if self.args.doc else WorkbenchDocument()
        return self._doc

    def frames_only(self) -> WorkbenchDocument:
        if not self.args.doc:
            return WorkbenchDocument()
        with open(self.args.doc, encoding="utf-8") as fh:
            data = json.load(fh)
        return document_from_dict({"frames": data.get("frames", {})})

    @property
    def stock(self):
        if self._stock is None:
            self._stock = stock_catalog(self.args.max_points)
        return self._stock

    def space(self, name):
        if name in self.doc.spaces:
            return self.doc.spaces[name]
        if name in self.stock:
            return self.stock[name]
        raise InputError(f"unknown space {name!r}")

    def map(self, name):
        if name in self.doc.maps:
            return self.doc.maps[name]
        raise InputError(f"unknown map {name!r}")

    def frame(self, name):
        try:
            return self.doc.resolve_frame(name)
        except KeyError:
            raise InputError(f"unknown frame {name!r}") from None


def _points(space, text):
    labels = [t for t in text.split(",") if t] if text else []
    by_text = {label_text(p): i for i, p in enumerate(space.points)}
    try:
        return [by_text[t] for t in labels]
    except KeyError as exc:
        raise InputError(f"unknown point {exc.args[0]!r}") from None


def _report_check(name: str, verdict: Check, out) -> int:
    if verdict:
        print(f"PASS {name}", file=out)
        return EXIT_OK
    print(f"FAIL {name}: {verdict.reason}", file=out)
    print(f"witness: {json.dumps(_jsonable(verdict.witness))}", file=out)
    return EXIT_FAILED


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


def _raw_section(ctx, section, name):
    if not ctx.args.doc:
        return None
    with open(ctx.args.doc, encoding="utf-8") as fh:
        data = json.load(fh)
    return data.get(section, {}).get(name)


# -- commands -------------------------------------------------------------------

def cmd_check(ctx: Context, out) -> int:
    a = ctx.args
    kind = a.kind
    if kind == "frame":
        _need(a.frame, "--frame")
        raw = _raw_section(ctx, "frames", a.frame)
        try:
            if raw is not None:
                validate_frame(raw["elements"], raw["leq"])
            else:
                named_frame(a.frame)
        except FrameError as exc:
            return _report_check(f"frame {a.frame}", Check(False, exc.axiom, exc.witness), out)
        except KeyError:
            raise InputError(f"unknown frame {a.frame!r}") from None
        return _report_check(f"frame {a.frame}", Check(True), out)
    if kind == "topology":
        _need(a.space, "--space")
        raw = _raw_section(ctx, "spaces", a.space)
        if raw is not None:
            L, pts, opens = space_candidate(raw, f"spaces.{a.space}", ctx.frames_only())
            return _report_check(f"topology {a.space}", is_ltopology(L, len(pts), opens), out)
        S = ctx.space(a.space)
        return _report_check(f"topology {a.space}", is_ltopology(S.frame, S.n_points, S.opens), out)
    if kind in ("t0", "sober"):
        _need(a.space, "--space")
        S = ctx.space(a.space)
        test = is_t0 if kind == "t0" else is_sober
        return _report_check(f"{kind} {a.space}", test(S), out)
    _need(a.map, "--map")
    f = ctx.map(a.map)
    if kind == "epi":
        return _report_check(f"epi[{a.category}] {a.map}", is_epimorphism(f, a.category), out)
    return _report_check(f"{kind} {a.map}", map_predicate(f, kind), out)


def _need(value, flag):
    if not value:
        raise InputError(f"{flag} is required here")


def _emit(doc: WorkbenchDocument, out):
    out.write(serialize_document(doc))


def cmd_generate(ctx: Context, out) -> int:
    a = ctx.args
    kind = a.kind
    if kind == "subframe":
        _need(a.frame, "--frame")
        L = ctx.frame(a.frame)
        by_text = {label_text(l): i for i, l in enumerate(L.labels)}
        try:
            zeta = [by_text[t] for t in (a.subset or "").split(",") if t]
        except KeyError as exc:
            raise InputError(f"unknown element {exc.args[0]!r}") from None
        sub = generate_subframe(L, zeta)
        print(json.dumps([label_text(l) for l in sub.labels()]), file=out)
        return EXIT_OK
    if kind == "sierpinski":
        _need(a.frame, "--frame")
        result = sierpinski_space(ctx.frame(a.frame))
    elif kind == "subspace":
        _need(a.space, "--space")
        S = ctx.space(a.space[0])
        result = subspace(S, _points(S, a.points))
    elif kind == "product":
        _need(a.space, "--space")
        result, _ = product_space([ctx.space(n) for n in a.space], cap=a.max_points_product)
    elif kind == "quotient":
        _need(a.map, "--map")
        f = ctx.map(a.map[0])
        try:
            result = quotient_space(f.source, f.mapping, f.target.points)
        except PreconditionError as exc:
            raise InputError(str(exc)) from None
    elif kind == "initial":
        _need(a.map, "--map")
        maps = [ctx.map(n) for n in a.map]
        source = maps[0].source
        if any(m.source.points != source.points for m in maps):
            raise InputError("all maps must share a source point set")
        result = initial_topology(source.points, source.frame, [(m.mapping, m.target) for m in maps])
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(kind)
    _emit(WorkbenchDocument(spaces={"result": result}), out)
    return EXIT_OK


def cmd_reflect(ctx: Context, out) -> int:
    a = ctx.args
    S = ctx.space(a.space)
    doc = WorkbenchDocument(spaces={"input": S})
    if a.kind == "t0":
        R, unit = t0_reflection(S)
    else:
        ps = point_space(S, cap=a.max_maps)
        R = ps.space
        unit = eta(S, ps)
        doc.point_tables["reflection"] = {label_text(k): v for k, v in ps.tables_by_label().items()}
    doc.spaces["reflection"] = R
    doc.maps["unit"] = unit
    _emit(doc, out)
    return EXIT_OK


def cmd_points(ctx: Context, out) -> int:
    S = ctx.space(ctx.args.space)
    ps = point_space(S, cap=ctx.args.max_maps)
    doc = WorkbenchDocument(spaces={"points": ps.space})
    doc.point_tables["points"] = ps.tables_by_label()
    _emit(doc, out)
    return EXIT_OK


def cmd_closure(ctx: Context, out) -> int:
    S = ctx.space(ctx.args.space)
    M = _points(S, ctx.args.subset)
    closed = bracket_closure(S, M)
    labels = [label_text(S.points[i]) for i in sorted(closed)]
    print(json.dumps({"subset": [label_text(S.points[i]) for i in sorted(set(M))], "closure": labels,
                      "closed": closed == frozenset(M)}), file=out)
    return EXIT_OK


def _family(ctx: Context) -> TestFamily:
    a = ctx.args
    if a.doc:
        L = ctx.frame(a.frame)
        members = []
        for name, S in sorted(ctx.doc.spaces.items()):
            if S.frame != L:
                continue
            flags = ctx.doc.flags.get(name, {})
            members.append(Member(name, S, flags.get("t0"), flags.get("sober")))
        if not members:
            raise InputError(f"the document has no spaces over frame {a.frame!r}")
        return TestFamily(L, tuple(members), a.max_maps)
    return fixture_family(ctx.frame(a.frame), a.max_points, a.max_maps)


def cmd_verify(ctx: Context, out) -> int:
    family = _family(ctx)
    reports = run_suite(ctx.args.suite, family)
    if ctx.args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True), file=out)
    else:
        for r in reports:
            for line in r.lines():
                print(line, file=out)
        for r in reports:
            bad = r.first_failure()
            if bad is not None and bad.counterexample is not None:
                print(f"counterexample for {bad.claim}:", file=out)
                print(json.dumps(bad.counterexample, indent=2, sort_keys=True), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--doc", help="workbench document (JSON); stock fixtures are used otherwise")
    common.add_argument("--max-points", type=int, default=3,
                        help="largest stock fixture carrier (default 3)")
    common.add_argument("--max-maps", type=int, default=DEFAULT_SEARCH_CAP,
                        help=f"enumeration budget (default {DEFAULT_SEARCH_CAP})")
    common.add_argument("--max-points-product", type=int, default=DEFAULT_POINT_CAP,
                        help=f"largest product carrier (default {DEFAULT_POINT_CAP})")
    common.add_argument("--json", action="store_true", help="machine-readable report")

    p = argparse.ArgumentParser(prog="ltopology", description="Finite L-topological space workbench")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="run a predicate")
    c.add_argument("kind", choices=["frame", "topology", "t0", "sober", "continuous", "embedding", "epi"])
    c.add_argument("--frame")
    c.add_argument("--space")
    c.add_argument("--map")
    c.add_argument("--category", choices=["LTop", "LTop0"], default="LTop")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("generate", parents=[common], help="build a frame or space")
    g.add_argument("kind", choices=["subframe", "initial", "product", "quotient", "subspace", "sierpinski"])
    g.add_argument("--frame")
    g.add_argument("--space", action="append")
    g.add_argument("--map", action="append")
    g.add_argument("--subset", help="comma-separated frame elements")
    g.add_argument("--points", help="comma-separated point labels")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("reflect", parents=[common], help="T0 reflection or sobrification")
    r.add_argument("kind", choices=["t0", "sober"])
    r.add_argument("--space", required=True)
    r.set_defaults(func=cmd_reflect)

    pt = sub.add_parser("points", parents=[common], help="frame maps from the opens into L")
    pt.add_argument("--space", required=True)
    pt.set_defaults(func=cmd_points)

    cl = sub.add_parser("closure", parents=[common], help="[ ]-closure of a point subset")
    cl.add_argument("--space", required=True)
    cl.add_argument("--subset", default="")
    cl.set_defaults(func=cmd_closure)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("--frame", default="F2")
    v.set_defaults(func=cmd_verify)
    return p


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        ctx = Context(args)
        return args.func(ctx, out)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=err)
        return EXIT_CAP
    except (InputError, DocumentError, TopologyError, PreconditionError, KeyError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=err)
        return EXIT_INPUT


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
