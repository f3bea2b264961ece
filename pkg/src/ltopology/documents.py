"""JSON documents holding named frames, spaces and maps.

Layout::

    {"frames": {name: {"elements": [labels], "leq": [[bool]]}},
     "spaces": {name: {"frame": name-or-frame-doc, "points": [labels],
                       "opens": [[element label per point]],
                       "flags": {"t0": bool, "sober": bool},      # optional
                       "point_tables": {point: [element labels]}}},  # optional
     "maps":   {name: {"source": space, "target": space, "mapping": {point: point}}}}

Frame names not defined in the document resolve to the built-in frames
(F1, F2, F3, D4, Cn).  Serialization is canonical: keys sorted, opens in
index order, fixed indentation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import FrameError
from .frames import Frame, builtin_name, named_frame, validate_frame
from .spaces import LTopSpace, SierpinskiPower, StructuredMap, is_ltopology


class DocumentError(ValueError):
    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


def label_text(label) -> str:
    if isinstance(label, str):
        return label
    if isinstance(label, tuple):
        return "(" + ",".join(label_text(l) for l in label) + ")"
    return str(label)


@dataclass
class WorkbenchDocument:
    frames: dict[str, Frame] = field(default_factory=dict)
    spaces: dict[str, LTopSpace] = field(default_factory=dict)
    maps: dict[str, StructuredMap] = field(default_factory=dict)
    flags: dict[str, dict] = field(default_factory=dict)
    point_tables: dict[str, dict] = field(default_factory=dict)

    def resolve_frame(self, name: str) -> Frame:
        if name in self.frames:
            return self.frames[name]
        return named_frame(name)


# -- parsing ------------------------------------------------------------------

def _frame_from_doc(doc, location: str) -> Frame:
    if not isinstance(doc, dict) or "elements" not in doc or "leq" not in doc:
        raise DocumentError(location, "a frame needs 'elements' and 'leq'")
    elements = doc["elements"]
    leq = doc["leq"]
    if not isinstance(elements, list) or not isinstance(leq, list):
        raise DocumentError(location, "'elements' and 'leq' must be lists")
    try:
        return validate_frame([_hashable(e, location) for e in elements], leq)
    except FrameError as exc:
        raise DocumentError(location, f"invalid frame: {exc}") from exc
    except TypeError as exc:
        raise DocumentError(location, f"malformed order matrix: {exc}") from exc


def _hashable(value, location):
    if isinstance(value, (str, int, float, bool)):
        return value
    raise DocumentError(location, f"labels must be scalars, got {value!r}")


def _space_from_doc(doc, location: str, wb: WorkbenchDocument) -> LTopSpace:
    L, points, opens = space_candidate(doc, location, wb)
    verdict = is_ltopology(L, len(points), opens)
    if not verdict:
        raise DocumentError(location, f"not an L-topology: {verdict.reason} "
                                      f"(witness {verdict.witness!r})")
    return LTopSpace(L, points, opens, check=False)


def space_candidate(doc, location: str, wb: WorkbenchDocument):
    """Frame, points and candidate opens of a space entry, without the topology check."""
    if not isinstance(doc, dict):
        raise DocumentError(location, "a space must be an object")
    for key in ("frame", "points", "opens"):
        if key not in doc:
            raise DocumentError(location, f"missing {key!r}")
    ref = doc["frame"]
    if isinstance(ref, str):
        try:
            L = wb.resolve_frame(ref)
        except KeyError:
            raise DocumentError(location, f"dangling frame reference {ref!r}") from None
    else:
        L = _frame_from_doc(ref, location + ".frame")
    points = [_hashable(p, location) for p in doc["points"]]
    if len(set(points)) != len(points):
        raise DocumentError(location, "duplicate point labels")
    by_text = {label_text(l): i for i, l in enumerate(L.labels)}
    opens = []
    for k, row in enumerate(doc["opens"]):
        if not isinstance(row, list) or len(row) != len(points):
            raise DocumentError(f"{location}.opens[{k}]", "needs one frame element per point")
        try:
            opens.append(tuple(by_text[label_text(v)] for v in row))
        except KeyError as exc:
            raise DocumentError(f"{location}.opens[{k}]", f"unknown frame element {exc.args[0]!r}") from None
    return L, points, opens


def _map_from_doc(doc, location: str, wb: WorkbenchDocument) -> StructuredMap:
    if not isinstance(doc, dict):
        raise DocumentError(location, "a map must be an object")
    ends = []
    for key in ("source", "target"):
        name = doc.get(key)
        if name not in wb.spaces:
            raise DocumentError(location, f"dangling {key} reference {name!r}")
        ends.append(wb.spaces[name])
    src, tgt = ends
    if src.frame != tgt.frame:
        raise DocumentError(location, "source and target are over different frames")
    mapping = doc.get("mapping")
    if not isinstance(mapping, dict):
        raise DocumentError(location, "'mapping' must be an object from source to target points")
    tgt_index = {label_text(p): i for i, p in enumerate(tgt.points)}
    table = []
    for p in src.points:
        key = label_text(p)
        if key not in mapping:
            raise DocumentError(location, f"mapping is not total: {key!r} unmapped")
        value = label_text(mapping[key])
        if value not in tgt_index:
            raise DocumentError(location, f"{value!r} is not a point of the target")
        table.append(tgt_index[value])
    extra = set(mapping) - {label_text(p) for p in src.points}
    if extra:
        raise DocumentError(location, f"mapping mentions unknown points {sorted(extra)!r}")
    return StructuredMap(src, tgt, tuple(table))


def document_from_dict(data) -> WorkbenchDocument:
    if not isinstance(data, dict):
        raise DocumentError("document", "top level must be an object")
    unknown = set(data) - {"frames", "spaces", "maps"}
    if unknown:
        raise DocumentError("document", f"unknown sections {sorted(unknown)!r}")
    wb = WorkbenchDocument()
    for name, fdoc in sorted(data.get("frames", {}).items()):
        wb.frames[name] = _frame_from_doc(fdoc, f"frames.{name}")
    for name, sdoc in sorted(data.get("spaces", {}).items()):
        loc = f"spaces.{name}"
        wb.spaces[name] = _space_from_doc(sdoc, loc, wb)
        if "flags" in sdoc:
            flags = sdoc["flags"]
            if not isinstance(flags, dict) or set(flags) - {"t0", "sober"} or \
                    not all(isinstance(v, bool) for v in flags.values()):
                raise DocumentError(loc + ".flags", "flags are booleans 't0' and 'sober'")
            wb.flags[name] = dict(flags)
        if "point_tables" in sdoc:
            tables = sdoc["point_tables"]
            points = {label_text(p) for p in wb.spaces[name].points}
            if not isinstance(tables, dict) or set(tables) != points:
                raise DocumentError(loc + ".point_tables", "needs one table per point")
            wb.point_tables[name] = {k: [label_text(v) for v in tables[k]] for k in tables}
    for name, mdoc in sorted(data.get("maps", {}).items()):
        wb.maps[name] = _map_from_doc(mdoc, f"maps.{name}", wb)
    return wb


def parse_document(text: str) -> WorkbenchDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", f"syntax error: {exc.msg}") from None
    return document_from_dict(data)


# -- serialization --------------------------------------------------------------

def frame_to_dict(L: Frame) -> dict:
    return {"elements": [label_text(l) for l in L.labels],
            "leq": [list(row) for row in L.leq]}


def space_to_dict(space: LTopSpace, frame_ref) -> dict:
    L = space.frame
    return {
        "frame": frame_ref,
        "points": [label_text(p) if not isinstance(p, (int, float, bool)) else p for p in space.points],
        "opens": [[label_text(L.label(v)) for v in mu] for mu in space.opens],
    }


def document_to_dict(wb: WorkbenchDocument) -> dict:
    out: dict = {}
    if wb.frames:
        out["frames"] = {name: frame_to_dict(L) for name, L in sorted(wb.frames.items())}

    def frame_ref(L: Frame):
        for name, F in sorted(wb.frames.items()):
            if F == L:
                return name
        return builtin_name(L) or frame_to_dict(L)

    if wb.spaces:
        spaces = {}
        for name, space in sorted(wb.spaces.items()):
            d = space_to_dict(space, frame_ref(space.frame))
            if name in wb.flags:
                d["flags"] = dict(sorted(wb.flags[name].items()))
            if name in wb.point_tables:
                d["point_tables"] = dict(sorted(wb.point_tables[name].items()))
            spaces[name] = d
        out["spaces"] = spaces
    if wb.maps:
        maps = {}
        for name, f in sorted(wb.maps.items()):
            if isinstance(f.target, SierpinskiPower):
                raise ValueError(f"map {name!r} has an implicit power as target; materialize it first")
            maps[name] = {
                "source": _space_name(wb, f.source, name),
                "target": _space_name(wb, f.target, name),
                "mapping": {label_text(k): label_text(v) for k, v in f.as_labels().items()},
            }
        out["maps"] = maps
    return out


def _space_name(wb: WorkbenchDocument, space: LTopSpace, map_name: str) -> str:
    for name, s in sorted(wb.spaces.items()):
        if s is space:
            return name
    for name, s in sorted(wb.spaces.items()):
        if s == space:
            return name
    raise ValueError(f"map {map_name!r} refers to a space that is not in the document")


def serialize_document(wb: WorkbenchDocument) -> str:
    return json.dumps(document_to_dict(wb), indent=2, sort_keys=True) + "\n"


def load_document(path) -> WorkbenchDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())
