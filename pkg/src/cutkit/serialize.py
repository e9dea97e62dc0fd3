"""Wire formats: the exact ASCII coordinate grammar and the JSON encodings of
every public type.  Parsers are strict; unknown JSON fields are rejected.

Coordinate grammar:
    RAT   := ['-'] DIGITS ['/' DIGITS]
    COORD := RAT | RAT ('+'|'-') RAT '*' 'r2' | RAT '*' 'r2'
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Optional

from .coords import Coordinate, coord
from .cuts import (
    BallCut,
    ClassificationReport,
    CutDescriptor,
    MINUS,
    NonBallCut,
    PLUS,
    ball,
    cut_from_vector,
)
from .errors import ParseError, ValidationError
from .extension import ExtensionElement
from .oracle import OracleReport, SampleConfig
from .orders import (
    Atom,
    AtomKind,
    Card,
    Index,
    IndexSet,
    InitialSegment,
    empty_segment,
    full_segment,
    make_segment,
    fin,
    OMEGA,
    OMEGA_OPP,
)
from .quasicuts import CutPoint, Interior, QuasiCutPoint
from .vectors import RealVector, Tail, build_vector

_RAT = r"-?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^({_RAT})$")
_COORD_RE = re.compile(rf"^({_RAT})(?:([+-])({_RAT})\*r2)?$")
_COORD_R2_RE = re.compile(rf"^({_RAT})\*r2$")


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text.strip())
    if not m:
        raise ParseError("malformed rational", token=text)
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_coordinate(text: str) -> Coordinate:
    s = text.strip()
    m = _COORD_R2_RE.match(s)
    if m:
        return Coordinate(Fraction(0), Fraction(m.group(1)))
    m = _COORD_RE.match(s)
    if not m:
        raise ParseError("malformed coordinate", token=text)
    a = Fraction(m.group(1))
    if m.group(2) is None:
        return Coordinate(a)
    b = Fraction(m.group(3))
    if m.group(2) == "-":
        b = -b
    return Coordinate(a, b)


def format_coordinate(c: Coordinate) -> str:
    return str(c)


def _expect_keys(obj: dict, allowed: set[str], what: str) -> None:
    extra = set(obj) - allowed
    if extra:
        raise ParseError(f"unknown fields in {what}: {sorted(extra)}")


# ---- index sets, indices, segments ----------------------------------------


def index_set_to_json(space: IndexSet) -> list:
    out: list = []
    for a in space.atoms:
        if a.kind is AtomKind.FIN:
            out.append({"fin": a.size})
        else:
            out.append(a.kind.value)
    return out


def index_set_from_json(data: Any) -> IndexSet:
    if not isinstance(data, list):
        raise ParseError("index set must be a JSON array")
    atoms = []
    for item in data:
        if item == "omega":
            atoms.append(OMEGA)
        elif item == "omega_opp":
            atoms.append(OMEGA_OPP)
        elif isinstance(item, dict):
            _expect_keys(item, {"fin"}, "atom")
            if not isinstance(item.get("fin"), int):
                raise ParseError("fin atom needs an integer size")
            atoms.append(fin(item["fin"]))
        else:
            raise ParseError("unknown atom", token=repr(item))
    return IndexSet(tuple(atoms))


def index_to_json(i: Index) -> list:
    return [i.atom, i.inner]


def index_from_json(data: Any, space: IndexSet) -> Index:
    if not (isinstance(data, list) and len(data) == 2 and all(isinstance(v, int) for v in data)):
        raise ParseError("index must be [atom, inner]", token=repr(data))
    idx = Index(data[0], data[1])
    from .orders import validate_index

    validate_index(idx, space)
    return idx


def segment_to_json(seg: InitialSegment, space: IndexSet):
    if seg.cut_atom == 1 and seg.upto is None:
        return "empty"
    if seg.cut_atom == space.natoms + 1 and seg.upto is None:
        return "full"
    if seg.upto is None:
        return {"atom": seg.cut_atom - 1, "all": True}
    return {"atom": seg.cut_atom, "upto": seg.upto}


def segment_from_json(data: Any, space: IndexSet) -> InitialSegment:
    if data == "empty":
        return empty_segment()
    if data == "full":
        return full_segment(space)
    if not isinstance(data, dict):
        raise ParseError("malformed segment", token=repr(data))
    if "all" in data:
        _expect_keys(data, {"atom", "all"}, "segment")
        if data["all"] is not True or not isinstance(data.get("atom"), int):
            raise ParseError("malformed segment", token=repr(data))
        return make_segment(space, data["atom"] + 1, None)
    _expect_keys(data, {"atom", "upto"}, "segment")
    if not isinstance(data.get("atom"), int) or not isinstance(data.get("upto"), int):
        raise ParseError("malformed segment", token=repr(data))
    return make_segment(space, data["atom"], data["upto"])


# ---- vectors ----------------------------------------------------------------


def vector_to_json(x: RealVector) -> dict:
    out: dict = {
        "finite": [[index_to_json(i), format_coordinate(c)] for i, c in x.entries],
        "tail": None,
        "added": None,
    }
    if x.tail is not None:
        out["tail"] = {"value": format_rational(x.tail.value), "from": index_to_json(x.tail.start)}
    if x.added is not None:
        seg, c = x.added
        out["added"] = {"segment": segment_to_json(seg, x.space), "coord": format_coordinate(c)}
    return out


def vector_from_json(data: Any, space: IndexSet) -> RealVector:
    if not isinstance(data, dict):
        raise ParseError("vector must be a JSON object")
    _expect_keys(data, {"finite", "tail", "added"}, "vector")
    entries = []
    for item in data.get("finite", []):
        if not (isinstance(item, list) and len(item) == 2):
            raise ParseError("vector entry must be [index, coord]", token=repr(item))
        entries.append((index_from_json(item[0], space), parse_coordinate(item[1])))
    tail = None
    t = data.get("tail")
    if t is not None:
        if not isinstance(t, dict):
            raise ParseError("malformed tail", token=repr(t))
        _expect_keys(t, {"value", "from"}, "tail")
        tail = Tail(parse_rational(t["value"]), index_from_json(t["from"], space))
    added = None
    a = data.get("added")
    if a is not None:
        if not isinstance(a, dict):
            raise ParseError("malformed added coordinate", token=repr(a))
        _expect_keys(a, {"segment", "coord"}, "added")
        added = (segment_from_json(a["segment"], space), parse_coordinate(a["coord"]))
    return build_vector(space, entries, tail=tail, added=added)


# ---- cuts and points ---------------------------------------------------------


def cut_to_json(cut: CutDescriptor) -> dict:
    if isinstance(cut, BallCut):
        space = cut.center.space
        return {
            "ball": {
                "center": vector_to_json(cut.center),
                "segment": segment_to_json(cut.segment, space),
                "side": "+" if cut.side == PLUS else "-",
            }
        }
    return {"nonball": {"vector": vector_to_json(cut.realization)}}


def cut_from_json(data: Any, space: IndexSet) -> CutDescriptor:
    if not isinstance(data, dict) or len(data) != 1:
        raise ParseError("cut must be a one-key object", token=repr(data))
    if "ball" in data:
        body = data["ball"]
        _expect_keys(body, {"center", "segment", "side"}, "ball cut")
        if body.get("side") not in ("+", "-"):
            raise ParseError("ball side must be '+' or '-'", token=repr(body.get("side")))
        return ball(
            vector_from_json(body["center"], space),
            segment_from_json(body["segment"], space),
            PLUS if body["side"] == "+" else MINUS,
        )
    if "nonball" in data:
        body = data["nonball"]
        _expect_keys(body, {"vector"}, "nonball cut")
        return cut_from_vector(vector_from_json(body["vector"], space))
    raise ParseError("cut must be 'ball' or 'nonball'", token=repr(sorted(data)))


def point_to_json(p: QuasiCutPoint) -> dict:
    if isinstance(p, Interior):
        return {"interior": vector_to_json(p.vector)}
    return {"cut": cut_to_json(p.cut)}


def point_from_json(data: Any, space: IndexSet) -> QuasiCutPoint:
    if not isinstance(data, dict) or len(data) != 1:
        raise ParseError("point must be a one-key object", token=repr(data))
    if "interior" in data:
        return Interior(vector_from_json(data["interior"], space))
    if "cut" in data:
        return CutPoint(cut_from_json(data["cut"], space))
    raise ParseError("point must be 'interior' or 'cut'", token=repr(sorted(data)))


# ---- reports -----------------------------------------------------------------


def card_to_json(c: Card):
    return c.value


def card_from_json(v) -> Card:
    for c in Card:
        if c.value == v:
            return c
    raise ParseError("malformed cardinal value", token=repr(v))


def report_to_json(rep: ClassificationReport, space: IndexSet) -> dict:
    return {
        "type6": rep.type6,
        "subtype": list(rep.subtype) if rep.subtype else None,
        "invariance": segment_to_json(rep.invariance, space),
        "h_prime": segment_to_json(rep.h_prime, space),
        "vf": segment_to_json(rep.vf, space),
        "vf_stable": rep.vf_stable,
        "vi": segment_to_json(rep.vi, space),
        "vi_stable": rep.vi_stable,
        "kappa": {"symbolic": rep.kappa[0], "value": card_to_json(rep.kappa[1])},
        "lambda": {"symbolic": rep.lambda_[0], "value": card_to_json(rep.lambda_[1])},
        "rank_increases": rep.rank_increases,
    }


_REPORT_KEYS = {
    "type6", "subtype", "invariance", "h_prime", "vf", "vf_stable",
    "vi", "vi_stable", "kappa", "lambda", "rank_increases",
}


def _cardpair_from_json(data: Any) -> tuple[str, Card]:
    if not isinstance(data, dict):
        raise ParseError("malformed cardinal pair", token=repr(data))
    _expect_keys(data, {"symbolic", "value"}, "cardinal pair")
    return (data["symbolic"], card_from_json(data["value"]))


def report_from_json(data: Any, space: IndexSet) -> ClassificationReport:
    if not isinstance(data, dict):
        raise ParseError("report must be a JSON object")
    _expect_keys(data, _REPORT_KEYS, "classification report")
    subtype = data.get("subtype")
    return ClassificationReport(
        type6=data["type6"],
        subtype=tuple(subtype) if subtype else None,
        invariance=segment_from_json(data["invariance"], space),
        h_prime=segment_from_json(data["h_prime"], space),
        vf=segment_from_json(data["vf"], space),
        vf_stable=bool(data["vf_stable"]),
        vi=segment_from_json(data["vi"], space),
        vi_stable=bool(data["vi_stable"]),
        kappa=_cardpair_from_json(data["kappa"]),
        lambda_=_cardpair_from_json(data["lambda"]),
        rank_increases=bool(data["rank_increases"]),
    )


def element_to_json(u: ExtensionElement, space: IndexSet) -> dict:
    return {"cut": cut_to_json(u.cut), "m": u.m, "b": vector_to_json(u.b)}


def element_from_json(data: Any, space: IndexSet) -> ExtensionElement:
    if not isinstance(data, dict):
        raise ParseError("element must be a JSON object")
    _expect_keys(data, {"cut", "m", "b"}, "extension element")
    if not isinstance(data.get("m"), int):
        raise ParseError("m must be an integer", token=repr(data.get("m")))
    return ExtensionElement(
        cut=cut_from_json(data["cut"], space),
        m=data["m"],
        b=vector_from_json(data["b"], space),
    )


def oracle_report_to_json(rep: OracleReport) -> dict:
    return {"violations": list(rep.violations), "checked": rep.checked, "seed": rep.seed}


def oracle_report_from_json(data: Any) -> OracleReport:
    if not isinstance(data, dict):
        raise ParseError("oracle report must be a JSON object")
    _expect_keys(data, {"violations", "checked", "seed"}, "oracle report")
    return OracleReport(list(data["violations"]), int(data["checked"]), int(data["seed"]))


# ---- job files ---------------------------------------------------------------


class JobItem:
    """One work item: a quasi-cut point, optionally with classification claims."""

    def __init__(self, point: QuasiCutPoint, claims: Optional[ClassificationReport] = None,
                 claimed_invariance: Optional[InitialSegment] = None):
        self.point = point
        self.claims = claims
        self.claimed_invariance = claimed_invariance

    @property
    def cut(self) -> CutDescriptor:
        if isinstance(self.point, CutPoint):
            return self.point.cut
        raise ValidationError("item is an interior point, not a cut")


class Job:
    def __init__(self, space: IndexSet, items: list[JobItem], params: dict):
        self.space = space
        self.items = items
        self.params = params


_CLAIM_KEYS = {"invariance", "vf", "vf_stable", "vi", "vi_stable"}


def _item_from_json(data: Any, space: IndexSet) -> JobItem:
    if not isinstance(data, dict):
        raise ParseError("item must be a JSON object", token=repr(data))
    if "ball" in data or "nonball" in data:
        _expect_keys(data, {"ball", "nonball"}, "item")
        return JobItem(CutPoint(cut_from_json(data, space)))
    if "interior" in data:
        _expect_keys(data, {"interior"}, "item")
        return JobItem(Interior(vector_from_json(data["interior"], space)))
    if "cut" in data:
        _expect_keys(data, {"cut", "claims"}, "item")
        cut = cut_from_json(data["cut"], space)
        claims = None
        claimed_inv = None
        raw = data.get("claims")
        if raw is not None:
            if not isinstance(raw, dict):
                raise ParseError("claims must be a JSON object", token=repr(raw))
            _expect_keys(raw, _CLAIM_KEYS, "claims")
            from .cuts import classify

            base = classify(cut)
            claims = ClassificationReport(
                type6=base.type6,
                subtype=base.subtype,
                invariance=segment_from_json(raw["invariance"], space)
                if "invariance" in raw else base.invariance,
                h_prime=base.h_prime,
                vf=segment_from_json(raw["vf"], space) if "vf" in raw else base.vf,
                vf_stable=bool(raw["vf_stable"]) if "vf_stable" in raw else base.vf_stable,
                vi=segment_from_json(raw["vi"], space) if "vi" in raw else base.vi,
                vi_stable=bool(raw["vi_stable"]) if "vi_stable" in raw else base.vi_stable,
                kappa=base.kappa,
                lambda_=base.lambda_,
                rank_increases=base.rank_increases,
            )
            if "invariance" in raw:
                claimed_inv = claims.invariance
        return JobItem(CutPoint(cut), claims, claimed_inv)
    raise ParseError("unknown item form", token=repr(sorted(data)))


_PARAM_KEYS = {"seed", "count", "max_denominator", "max_support", "max_label"}


def job_from_json(data: Any) -> Job:
    if not isinstance(data, dict):
        raise ParseError("job file must be a JSON object")
    _expect_keys(data, {"group", "items", "params"}, "job file")
    if "group" not in data or "items" not in data:
        raise ParseError("job file needs 'group' and 'items'")
    space = index_set_from_json(data["group"])
    if not isinstance(data["items"], list):
        raise ParseError("'items' must be a JSON array")
    items = [_item_from_json(item, space) for item in data["items"]]
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise ParseError("'params' must be a JSON object")
    _expect_keys(params, _PARAM_KEYS, "params")
    return Job(space, items, params)


def sample_config_from(params: dict, seed: Optional[int] = None, count: Optional[int] = None) -> SampleConfig:
    merged = dict(params)
    if seed is not None:
        merged["seed"] = seed
    if count is not None:
        merged["count"] = count
    return SampleConfig(
        max_denominator=merged.get("max_denominator", 8),
        max_support=merged.get("max_support", 4),
        max_label=merged.get("max_label", 6),
        count=merged.get("count", 200),
        seed=merged.get("seed", 0),
    )
