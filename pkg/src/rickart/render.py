"""Deterministic text and JSON rendering of classification reports and theorem ledgers."""

from __future__ import annotations

import json

import numpy as np

from .classify import El

WITNESS_PREVIEW = 6


def plain(value, R):
    """JSON-ready copy of a certificate with element codes replaced by labels."""
    if isinstance(value, El):
        return R.label(int(value))
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {_key(k, R): plain(v, R) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v, R) for v in value]
    if hasattr(value, "__dataclass_fields__"):
        return {k: plain(getattr(value, k), R) for k in value.__dataclass_fields__}
    return str(value)


def _key(k, R):
    if isinstance(k, tuple):
        return ", ".join(str(plain(v, R)) for v in k)
    return str(plain(k, R))


def _compact(value):
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def _preview(witness):
    if isinstance(witness, dict) and len(witness) > WITNESS_PREVIEW:
        head = dict(list(witness.items())[:WITNESS_PREVIEW])
        return f"{_compact(head)} ... ({len(witness)} entries)"
    return _compact(witness)


def _verdict_word(holds):
    return {True: "true", False: "false", None: "n/a"}[holds]


def report_dict(report):
    R = report.ring
    out = {
        "construction": report.construction,
        "size": report.size,
        "mode": report.mode,
        "unity": None if report.unity is None else R.label(report.unity),
    }
    if report.projections is not None:
        out["projections"] = [R.label(e) for e in report.projections]
        out["central_projections"] = [R.label(e) for e in report.central_projections]
    out["verdicts"] = {
        name: {
            "holds": v.holds,
            "witness": plain(v.witness, R),
            "counterexample": plain(v.counterexample, R),
            "note": v.note,
        }
        for name, v in report.verdicts.items()
    }
    out["notes"] = list(report.notes)
    out["extras"] = plain(report.extras, R)
    return out


def report_json(report):
    return json.dumps(report_dict(report), indent=2, ensure_ascii=False) + "\n"


def report_table(report):
    d = report_dict(report)
    lines = [
        f"ring: {d['construction']}",
        f"size: {d['size']}",
        f"mode: {d['mode']}",
        f"unity: {d['unity'] if d['unity'] is not None else 'none'}",
    ]
    if "projections" in d:
        lines.append(f"projections ({len(d['projections'])}): {', '.join(d['projections'])}")
        lines.append(f"central projections: {', '.join(d['central_projections'])}")
    lines.append("")
    width = max(len(n) for n in d["verdicts"])
    lines.append(f"{'property'.ljust(width)}  verdict  certificate")
    for name, v in d["verdicts"].items():
        if v["counterexample"] is not None:
            cert = f"counterexample {_compact(v['counterexample'])}"
        elif v["witness"] is not None:
            cert = f"witness {_preview(v['witness'])}"
        else:
            cert = ""
        if v["note"]:
            cert = f"{cert} ({v['note']})" if cert else v["note"]
        lines.append(f"{name.ljust(width)}  {_verdict_word(v['holds']).ljust(7)}  {cert}".rstrip())
    for key, value in d["extras"].items():
        lines.append("")
        lines.append(f"{key}: {_preview(value)}")
    if d["notes"]:
        lines.append("")
        lines.extend(f"note: {n}" for n in d["notes"])
    return "\n".join(lines) + "\n"


def ledger_dict(R, ledger):
    return {
        "construction": R.name,
        "size": R.size,
        "checks": [
            {
                "id": c.id,
                "status": c.status,
                "hypothesis": c.hypothesis,
                "conclusion": c.conclusion,
                "counterexample": plain(c.counterexample, R),
                "details": plain(c.details, R),
            }
            for c in ledger
        ],
    }


def ledger_json(R, ledger):
    return json.dumps(ledger_dict(R, ledger), indent=2, ensure_ascii=False) + "\n"


def ledger_table(R, ledger):
    d = ledger_dict(R, ledger)
    lines = [f"ring: {d['construction']}", f"size: {d['size']}", ""]
    for c in d["checks"]:
        lines.append(f"[{c['status']}] {c['id']}")
        lines.append(f"  hypothesis: {c['hypothesis']}")
        lines.append(f"  conclusion: {c['conclusion']}")
        if c["counterexample"] is not None:
            lines.append(f"  counterexample: {_compact(c['counterexample'])}")
        for key, value in c["details"].items():
            lines.append(f"  {key}: {_preview(value)}")
    counts = {}
    for c in d["checks"]:
        counts[c["status"]] = counts.get(c["status"], 0) + 1
    lines.append("")
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return "\n".join(lines) + "\n"
