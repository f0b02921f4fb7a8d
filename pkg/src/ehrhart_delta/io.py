"""JSON documents: polytopes, triangulations and reports."""

import json

from .errors import PolytopeFormatError
from .geometry import LatticePolytope


def _strict_int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise PolytopeFormatError(f"{where}: expected an integer, got {x!r}")
    return x


def polytope_from_dict(doc):
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise PolytopeFormatError('polytope document needs a "vertices" list')
    verts = doc["vertices"]
    if not isinstance(verts, list) or not verts:
        raise PolytopeFormatError('"vertices" must be a non-empty list')
    rank = doc.get("rank", None)
    if rank is None:
        rank = len(verts[0]) if isinstance(verts[0], list) else -1
    rank = _strict_int(rank, "rank")
    points = []
    for i, v in enumerate(verts):
        if not isinstance(v, list) or len(v) != rank:
            raise PolytopeFormatError(f"vertex {i} must be a list of {rank} integers")
        points.append(tuple(_strict_int(x, f"vertex {i}") for x in v))
    return LatticePolytope.from_points(points, rank)


def parse_json(text, what="document"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolytopeFormatError(f"malformed JSON {what}: {exc}") from exc


def load_json(path, what="document"):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise PolytopeFormatError(f"cannot read {path}: {exc}") from exc
    return parse_json(text, what)


def load_polytope(path):
    return polytope_from_dict(load_json(path, "polytope"))


def dumps(doc):
    """Canonical serialisation: stable key order from construction, two-space indent."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save_polytope(P, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(P.to_dict()))
