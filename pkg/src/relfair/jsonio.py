"""JSON formats for problems, weight sets, rules, instances and verdicts.

Rationals are written as strings ``"p/q"`` (or ``"p"``) so that no value
ever passes through a float. Dumps use sorted keys and a fixed layout,
so equal objects always serialize to identical bytes.
"""
from __future__ import annotations

import json

from . import reals
from ._rat import Rat, as_rat, fmt_rat
from .axioms import AxiomId, Instance, SequenceSpec, Verdict
from .errors import BadParameter
from .geometry import Problem, as_point, make_problem, scmp_hull
from .rules import Rule
from .weights import WeightSet, make_weight_set


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dumps_line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _rat(text) -> Rat:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise BadParameter(f"expected a rational string, got {text!r}")
    try:
        return as_rat(text if isinstance(text, str) else int(text))
    except ValueError as exc:
        raise BadParameter(str(exc)) from None


def _field(d: dict, key: str, kind=None):
    if not isinstance(d, dict):
        raise BadParameter(f"expected a JSON object, got {type(d).__name__}")
    if key not in d:
        raise BadParameter(f"missing field {key!r}")
    v = d[key]
    if kind is not None and (not isinstance(v, kind) or isinstance(v, bool) and kind is not bool):
        raise BadParameter(f"field {key!r} must be {kind.__name__}")
    return v


def point_to_json(x) -> list:
    return [fmt_rat(c) for c in x]


def point_from_json(data) -> tuple:
    if not isinstance(data, list):
        raise BadParameter("a point must be a list of rationals")
    return as_point(_rat(c) for c in data)


# -- problems ---------------------------------------------------------------


def problem_to_json(X: Problem) -> dict:
    return {"n": X.n, "kind": "cmp", "generators": [point_to_json(g) for g in X.generators]}


def problem_from_json(data: dict) -> Problem:
    n = _field(data, "n", int)
    kind = _field(data, "kind", str)
    gens = _field(data, "generators", list)
    if kind not in ("cmp", "scmp"):
        raise BadParameter(f"problem kind must be 'cmp' or 'scmp', got {kind!r}")
    pts = [point_from_json(g) for g in gens]
    if any(len(p) != n for p in pts):
        raise BadParameter(f"every generator needs n={n} coordinates")
    return scmp_hull(pts) if kind == "scmp" else make_problem(pts)


# -- weight sets and rules --------------------------------------------------


def weights_to_json(W: WeightSet) -> dict:
    return {"n": W.n, "vertices": [point_to_json(v) for v in W.vertices], "symmetrize": False}


def weights_from_json(data: dict) -> WeightSet:
    n = _field(data, "n", int)
    verts = [point_from_json(v) for v in _field(data, "vertices", list)]
    if any(len(v) != n for v in verts):
        raise BadParameter(f"every weight vector needs n={n} coordinates")
    return make_weight_set(verts, symmetrize=bool(data.get("symmetrize", False)))


_RAT_FIELDS = ("theta", "alpha1", "alpha2")


def rule_to_json(rule: Rule) -> dict:
    out = {"kind": rule.kind, "p": fmt_rat(rule.p)}
    if rule.weights is not None:
        out["weights"] = weights_to_json(rule.weights)
    for name in _RAT_FIELDS:
        v = getattr(rule, name)
        if v is not None:
            out[name] = fmt_rat(v)
    if rule.norm is not None:
        out["norm"] = rule.norm
    if rule.kind == "dictator":
        out["individual"] = rule.individual + 1
    return out


def rule_from_json(data: dict) -> Rule:
    kind = _field(data, "kind", str)
    kwargs = {"kind": kind, "p": _rat(data.get("p", "1"))}
    if "weights" in data:
        kwargs["weights"] = weights_from_json(data["weights"])
    for name in _RAT_FIELDS:
        if name in data:
            kwargs[name] = _rat(data[name])
    if "norm" in data:
        kwargs["norm"] = str(data["norm"])
    if kind == "dictator":
        i = data.get("individual", 1)
        if isinstance(i, bool) or not isinstance(i, int) or i < 1:
            raise BadParameter("dictator individual must be an integer >= 1")
        kwargs["individual"] = i - 1
    return Rule(**kwargs)


# -- generic values, instances, verdicts ------------------------------------


def value_to_json(v):
    """Encode evidence and solution values: rationals, reals, points, problems, ints, text."""
    if isinstance(v, Problem):
        return problem_to_json(v)
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v
    if reals.is_real(v):
        return {"real": reals.fmt_real(v)}
    if isinstance(v, (tuple, list)):
        return [value_to_json(c) for c in v]
    if hasattr(v, "numerator"):
        return fmt_rat(v)
    raise BadParameter(f"cannot serialize {type(v).__name__}")


def sequence_to_json(seq: SequenceSpec) -> dict:
    return {
        "ks": list(seq.ks),
        "problems": [problem_to_json(P) for P in seq.problems],
        "points": [point_to_json(p) for p in seq.points],
        "limit": problem_to_json(seq.limit),
        "point": point_to_json(seq.point),
    }


def sequence_from_json(data: dict) -> SequenceSpec:
    return SequenceSpec(
        tuple(int(k) for k in _field(data, "ks", list)),
        tuple(problem_from_json(P) for P in _field(data, "problems", list)),
        tuple(point_from_json(p) for p in _field(data, "points", list)),
        problem_from_json(_field(data, "limit")),
        point_from_json(_field(data, "point", list)),
    )


def instance_to_json(inst: Instance) -> dict:
    out = {}
    for name in ("X", "X2"):
        v = getattr(inst, name)
        if v is not None:
            out[name] = problem_to_json(v)
    for name in ("x", "y", "a"):
        v = getattr(inst, name)
        if v is not None:
            out[name] = point_to_json(v)
    if inst.alpha is not None:
        out["alpha"] = fmt_rat(inst.alpha)
    for name in ("perm", "M"):
        v = getattr(inst, name)
        if v is not None:
            out[name] = list(v)
    for name in ("i", "j"):
        v = getattr(inst, name)
        if v is not None:
            out[name] = v
    if inst.sequence is not None:
        out["sequence"] = sequence_to_json(inst.sequence)
    return out


def instance_from_json(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise BadParameter("an instance must be a JSON object")
    kw = {}
    for name in ("X", "X2"):
        if name in data:
            kw[name] = problem_from_json(data[name])
    for name in ("x", "y", "a"):
        if name in data:
            kw[name] = point_from_json(data[name])
    if "alpha" in data:
        kw["alpha"] = _rat(data["alpha"])
    for name in ("perm", "M"):
        if name in data:
            kw[name] = tuple(int(k) for k in data[name])
    for name in ("i", "j"):
        if name in data:
            kw[name] = int(data[name])
    if "sequence" in data:
        kw["sequence"] = sequence_from_json(data["sequence"])
    return Instance(**kw)


def verdict_to_json(rule: Rule, v: Verdict) -> dict:
    return {
        "rule": rule_to_json(rule),
        "axiom": v.axiom,
        "status": v.status,
        "note": v.note,
        "witness": instance_to_json(v.instance),
        "evidence": {k: value_to_json(val) for k, val in v.evidence},
    }


def verdict_from_json(data: dict):
    """(rule, axiom, instance, status) from a verdict report."""
    rule = rule_from_json(_field(data, "rule"))
    axiom = AxiomId(_field(data, "axiom", str))
    inst = instance_from_json(data.get("witness", {}))
    return rule, axiom, inst, _field(data, "status", str)


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise BadParameter(f"{path}: invalid JSON ({exc})") from None
