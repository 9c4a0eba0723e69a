"""JSON-ready documents for the command-line front end, and their validator.

Every rational is written as the string ``"num/den"`` (``"num"`` when the
denominator is 1).  Nothing in a document is a float; the only non-rational
numeric marker is the string ``"-inf"`` for an unbounded infimum.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .analysis import BoundReport, Witness, verify_bound
from .candidates import (
    CandidateFamily,
    EdgepathSystem,
    SystemType,
    TypeISolutions,
    basic_system,
    chi_ratio,
    enumerate_type_ii,
    enumerate_type_iii,
    solve_type_i,
    stats,
)
from .core import PiecewiseLinear, format_fraction, pl_inf_over_open_ray
from .edgepath import DiagramEdge, EdgePoint, Edgepath, big_x, parse_vertex
from .knot import PretzelKnot, crosscap_number, parse_pretzel, reference_stats

SCHEMA_VERSION = "1"
COMMANDS = ("crosscap", "candidates", "xfun", "verify")


def frac(x) -> Optional[str]:
    if x is None:
        return None
    if x == -math.inf:
        return "-inf"
    return format_fraction(x)


def unfrac(s) -> Optional[Fraction]:
    if s is None:
        return None
    if not isinstance(s, str):
        raise ValueError(f"rational values are serialized as strings, got {s!r}")
    return Fraction(s)


def document(command: str, knot: PretzelKnot, results: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "knot": list(knot.params),
        "results": results,
    }


# encoders


def pl_to_dict(f: PiecewiseLinear) -> Dict[str, Any]:
    return {
        "domain_start": frac(f.domain_start),
        "breakpoints": [[frac(w), frac(v)] for w, v in f.breakpoints],
        "final_slope": frac(f.final_slope),
    }


def pieces_to_list(f: PiecewiseLinear) -> List[Dict[str, Any]]:
    return [
        {"lo": frac(lo), "hi": frac(hi), "slope": frac(m), "intercept": frac(c)}
        for lo, hi, m, c in f.pieces()
    ]


def path_to_dict(path: Edgepath) -> Dict[str, Any]:
    return {
        "notation": str(path),
        "vertices": [str(v) for v in path.vertices()],
        "partial_coeff": frac(path.partial.coeff) if path.partial is not None else None,
        "cap_w": frac(path.cap.at_w) if path.cap is not None else None,
    }


def stats_to_dict(s) -> Dict[str, Any]:
    return {
        "chi_ratio": frac(s.chi_ratio),
        "sheets_lb": s.sheets_lb,
        "has_caps": s.has_caps,
        "spanning_candidate": s.spanning_candidate,
        "orientability": s.orientability.value,
    }


def system_to_dict(system: EdgepathSystem) -> Dict[str, Any]:
    row = {
        "type": system.type_tag.value,
        "source": "".join(system.source),
        "w0": frac(system.w0),
        "u0": frac(system.u0),
        "vertical_count": system.vertical_count,
        "paths": [path_to_dict(p) for p in system.paths],
    }
    row.update(stats_to_dict(stats(system)))
    return row


def family_to_dict(family: CandidateFamily) -> Dict[str, Any]:
    u_lo, u_hi = family.u_interval()
    return {
        "source": "".join(family.source),
        "w_interval": {
            "lo": frac(family.lo),
            "hi": frac(family.hi),
            "lo_closed": family.lo_closed,
            "hi_closed": family.hi_closed,
        },
        "u_interval": {"lo": frac(u_lo), "hi": frac(u_hi)},
        "ratio_fn": pl_to_dict(family.ratio_fn),
        "ratio_pieces": pieces_to_list(family.ratio_fn),
        "sample": system_to_dict(family.base),
        "boundary": [system_to_dict(s) for s in family.boundary_systems()],
    }


def witness_to_dict(w: Witness) -> Dict[str, Any]:
    rng = None
    if w.w_range is not None:
        rng = {"lo": frac(w.w_range[0]), "hi": frac(w.w_range[1])}
    return {
        "kind": w.kind,
        "system": system_to_dict(w.system) if w.system is not None else None,
        "family_source": "".join(w.family.source) if w.family is not None else None,
        "w_range": rng,
        "samples": [{"w": frac(x), **stats_to_dict(s)} for x, s in w.samples],
        "excludes_nonorientable_spanning": w.ok,
    }


def bound_report_to_dict(r: BoundReport) -> Dict[str, Any]:
    failure = None
    if not r.verdict:
        if r.min_candidate_ratio < r.bound:
            failure = "candidate ratio below the bound"
        else:
            failure = "a candidate meeting the bound may be non-orientable and spanning"
    return {
        "bound": frac(r.bound),
        "min_candidate_ratio": frac(r.min_candidate_ratio),
        "verdict": r.verdict,
        "failure": failure,
        "max_vertical": r.truncation,
        "counts": dict(r.counts),
        "equality_witnesses": [witness_to_dict(w) for w in r.equality_witnesses],
        "notes": list(r.notes),
    }


def reference_to_dict(K: PretzelKnot) -> Optional[Dict[str, Any]]:
    if K.N < 3:
        return None
    ref = reference_stats(K)
    return {
        "betti_FB": ref.betti_FB,
        "chi_ratio_FB": frac(ref.chi_ratio_FB),
        "FA_orientable": ref.FA_orientable,
    }


def crosscap_results(K: PretzelKnot) -> Dict[str, Any]:
    return {
        "crosscap": crosscap_number(K),
        "class": K.knot_class.value,
        "N": K.N,
        "reference": reference_to_dict(K),
    }


def candidates_results(K, type_i: TypeISolutions, type_ii, type_iii, max_vertical) -> Dict[str, Any]:
    return {
        "max_vertical": max_vertical,
        "counts": {
            "type_I_systems": len(type_i.systems),
            "type_I_families": len(type_i.families),
            "type_II_systems": len(type_ii),
            "type_III_systems": len(type_iii),
        },
        "type_I": [system_to_dict(s) for s in type_i.systems],
        "families": [family_to_dict(f) for f in type_i.families],
        "type_II": [system_to_dict(s) for s in type_ii],
        "type_III": [system_to_dict(s) for s in type_iii],
    }


def xfun_results(source: str, f: PiecewiseLinear) -> Dict[str, Any]:
    inf, attained = pl_inf_over_open_ray(f)
    return {
        "system": source,
        "function": pl_to_dict(f),
        "pieces": pieces_to_list(f),
        "inf_over_w_gt_1": {"value": frac(inf), "attained": attained},
    }


def verify_results(r: BoundReport) -> Dict[str, Any]:
    out = bound_report_to_dict(r)
    out["crosscap"] = crosscap_number(r.knot)
    out["betti_FB"] = reference_stats(r.knot).betti_FB
    return out


# decoders and validation


def pl_from_dict(d: Dict[str, Any]) -> PiecewiseLinear:
    return PiecewiseLinear(
        tuple((unfrac(w), unfrac(v)) for w, v in d["breakpoints"]),
        unfrac(d["final_slope"]),
        unfrac(d["domain_start"]),
    )


def path_from_dict(d: Dict[str, Any]) -> Edgepath:
    verts = [parse_vertex(v) for v in d["vertices"]]
    if d.get("cap_w") is not None:
        if len(verts) != 2:
            raise ValueError("a cap is described by the two ends of its horizontal edge")
        return Edgepath(cap=EdgePoint(DiagramEdge(verts[0], verts[1]), at_w=unfrac(d["cap_w"])))
    edges = tuple(DiagramEdge(a, b) for a, b in zip(verts, verts[1:]))
    if d.get("partial_coeff") is not None:
        return Edgepath(edges[1:], EdgePoint(edges[0], coeff=unfrac(d["partial_coeff"])))
    if not edges:
        return Edgepath(terminal=verts[0])
    return Edgepath(edges)


def system_from_dict(K: PretzelKnot, d: Dict[str, Any]) -> EdgepathSystem:
    return EdgepathSystem(
        K,
        tuple(path_from_dict(p) for p in d["paths"]),
        SystemType(d["type"]),
        tuple(d["source"]),
        w0=unfrac(d["w0"]),
        vertical_count=d["vertical_count"],
    )


def _no_floats(obj, where="document"):
    if isinstance(obj, float):
        raise ValueError(f"floating-point value in {where}")
    if isinstance(obj, dict):
        for k, v in obj.items():
            _no_floats(v, f"{where}.{k}")
    elif isinstance(obj, list):
        for k, v in enumerate(obj):
            _no_floats(v, f"{where}[{k}]")


def _check_system_row(K, row):
    system = system_from_dict(K, row)
    if system_to_dict(system) != row:
        raise ValueError(f"row for {system} does not match its recomputed statistics")
    return system


def _check_verify(K, res):
    ref = reference_stats(K)
    if unfrac(res["bound"]) != ref.chi_ratio_FB - 1:
        raise ValueError("bound does not match the reference surface")
    if res["crosscap"] != crosscap_number(K) or res["betti_FB"] != ref.betti_FB:
        raise ValueError("crosscap value does not match the formula")
    lowest = unfrac(res["min_candidate_ratio"])
    bound = unfrac(res["bound"])
    all_ok = True
    for w in res["equality_witnesses"]:
        if w["system"] is not None:
            system = _check_system_row(K, w["system"])
            if chi_ratio(system) != bound:
                raise ValueError(f"witness {system} does not meet the bound")
        ok = all(
            not s["spanning_candidate"] or s["orientability"] == "orientable" for s in w["samples"]
        )
        if ok != w["excludes_nonorientable_spanning"]:
            raise ValueError("witness flag disagrees with its samples")
        all_ok = all_ok and ok
    if res["verdict"] != (lowest >= bound and all_ok):
        raise ValueError("verdict disagrees with the minimum ratio and the witnesses")
    if (res["failure"] is None) != res["verdict"]:
        raise ValueError("failure reason must be present exactly when the verdict is false")


def validate_document(doc: Dict[str, Any], recompute: bool = False) -> None:
    """Re-parse a document and re-check every invariant it claims.

    Every serialized edgepath system is rebuilt, which re-runs its gluing
    checks, and its statistics are recomputed.  With ``recompute=True`` the
    whole payload is also compared against a fresh run of the command.
    Raises ValueError on the first problem found.
    """
    _no_floats(doc)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {doc.get('schema_version')!r}")
    command = doc.get("command")
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    K = parse_pretzel(doc["knot"])
    res = doc["results"]

    if command == "crosscap":
        if res != crosscap_results(K):
            raise ValueError("crosscap results do not match a recomputation")
    elif command == "candidates":
        for key in ("type_I", "type_II", "type_III"):
            for row in res[key]:
                system = _check_system_row(K, row)
                if system.type_tag.value != key.split("_")[1]:
                    raise ValueError(f"{key} row holds a type {system.type_tag.value} system")
        for row in res["families"]:
            f = pl_from_dict(row["ratio_fn"])
            for b in [row["sample"]] + row["boundary"]:
                system = _check_system_row(K, b)
                if f(system.w0) != chi_ratio(system):
                    raise ValueError("family ratio function disagrees with a member")
        if recompute:
            mv = res["max_vertical"]
            fresh = candidates_results(K, solve_type_i(K), enumerate_type_ii(K, mv), enumerate_type_iii(K), mv)
            if res != fresh:
                raise ValueError("candidate table does not match a recomputation")
    elif command == "xfun":
        f = pl_from_dict(res["function"])
        if pieces_to_list(f) != res["pieces"]:
            raise ValueError("piece list does not match the breakpoints")
        if recompute and f != big_x(basic_system(K, res["system"])):
            raise ValueError("function does not match a recomputation")
    else:
        _check_verify(K, res)
        if recompute and res != verify_results(verify_bound(K, res["max_vertical"])):
            raise ValueError("verification results do not match a recomputation")


__all__ = [
    "SCHEMA_VERSION",
    "document",
    "validate_document",
    "system_from_dict",
    "path_from_dict",
    "pl_from_dict",
]
