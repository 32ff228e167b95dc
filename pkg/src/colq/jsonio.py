"""Shared JSON shapes for the CLI and the HTTP service.

Both front ends serialize through these helpers so that stateless service
responses are byte-identical to the corresponding CLI output.
"""

from __future__ import annotations

import json

from .classify import DClassification
from .gabriel import GabrielReport, ZeroPart
from .quiver import ColouredQuiver, to_json_dict


def dumps(obj: object) -> str:
    """Compact, key-order-preserving JSON used everywhere."""
    return json.dumps(obj, separators=(",", ":"))


def classification_dict(result: DClassification) -> dict:
    if result.verdict == "TypeI":
        w = result.type_i
        return {
            "verdict": "TypeI",
            "a": w.a,
            "b": w.b,
            "x": list(w.xs),
            "y": list(w.ys),
            "components": [list(c) for c in w.components],
            "both_types": result.both_types,
        }
    if result.verdict == "TypeII":
        w = result.type_ii
        return {
            "verdict": "TypeII",
            "cycle": list(w.cycle),
            "cliques": [list(c) for c in w.cliques],
            "components": [list(c) for c in w.components],
        }
    return {"verdict": "NotMember", "reason": result.reason}


def zero_part_dict(zp: ZeroPart) -> dict:
    return {
        "n": zp.n,
        "m": zp.m,
        "arrows": sorted([i, j] for i, j in zp.arrows),
        "components": [list(c) for c in zp.components()],
    }


def gabriel_report_dict(report: GabrielReport) -> dict:
    comps = []
    for comp in report.components:
        entry: dict = {"vertices": list(comp.vertices), "verdict": comp.verdict}
        detail = comp.detail
        if comp.verdict == "SubtypeI":
            entry["cycle"] = list(detail.cycle)
            entry["a"] = detail.a
            entry["b"] = detail.b
            entry["completed"] = detail.completed
        elif comp.verdict == "SubtypeII":
            entry["cycle"] = list(detail.cycle)
            entry["block_lengths"] = list(detail.block_lengths)
            entry["removed_blocks"] = detail.removed_blocks
            entry["completed"] = detail.completed
        elif comp.verdict == "Unverified":
            entry["reasons"] = list(detail)
        comps.append(entry)
    return {
        "components": comps,
        "degree_ok": report.degree_ok,
        "violations": [[kind, repr(where)] for kind, where in report.violations],
    }


def quiver_json(q: ColouredQuiver) -> str:
    return dumps(to_json_dict(q))
