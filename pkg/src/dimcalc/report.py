"""Analysis reports: structured dict, canonical JSON and plain text."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .analysis import FORMS, analyze, render_pi_group, render_relation
from .dsl import CheckResult, ProblemFile, format_dimension


def _absent_variables(model, relation) -> list[str]:
    """Independents with exponent 0 in the relation and in every Pi group."""
    out = []
    for j, name in enumerate(relation.independents):
        if relation.k_j[j] == 0 and all(row.c_j[j] == 0 for row in relation.rows):
            out.append(name)
    return out


def build_report(problem: ProblemFile) -> dict[str, Any]:
    m = problem.matrix()
    solved = analyze(m, problem.dependent)
    models = []
    diagnostics = []
    for i, (model, rel) in enumerate(solved, 1):
        models.append(
            {
                "independents": list(model.independents),
                "dependents": list(model.dependents),
                "k": rel.k,
                "k_j": list(rel.k_j),
                "rows": [{"name": r.name, "c": r.c, "c_j": list(r.c_j)} for r in rel.rows],
                "pi_groups": [render_pi_group(g, ascii=True) for g in rel.pi_groups],
                "relation_power": render_relation(rel, "power", ascii=True),
                "relation_root": render_relation(rel, "root", ascii=True),
                "relation_scalar": render_relation(rel, "scalar", ascii=True),
            }
        )
        for name in _absent_variables(model, rel):
            diagnostics.append(f"model {i}: {problem.dependent} does not depend on {name}")
    if not solved:
        diagnostics.append(
            f"no covariant representation: {problem.dependent} is not dependent on any maximal "
            "set of independent dimensions of the other variables; add a governing variable"
        )
    return {
        "bases": list(problem.bases),
        "variables": [{"name": n, "dimension": list(v)} for n, v in problem.variables],
        "dependent": problem.dependent,
        "rank": m.rank,
        "models": models,
        "diagnostics": diagnostics,
    }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def emit_json(report: dict[str, Any]) -> bytes:
    """Canonical, byte-stable JSON; rationals become ``"p/q"`` strings."""
    return (json.dumps(_jsonable(report), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def format_matrix(problem: ProblemFile) -> str:
    names = [n for n, _ in problem.variables]
    width = max([len(b) for b in problem.bases] + [1])
    cells = [[str(v[i]) for _, v in problem.variables] for i in range(len(problem.bases))]
    colw = [max([len(n)] + [len(row[j]) for row in cells]) for j, n in enumerate(names)]
    lines = [" " * width + " | " + "  ".join(n.rjust(w) for n, w in zip(names, colw))]
    for b, row in zip(problem.bases, cells):
        lines.append(b.ljust(width) + " | " + "  ".join(c.rjust(w) for c, w in zip(row, colw)))
    return "\n".join(lines)


def format_text(problem: ProblemFile) -> str:
    m = problem.matrix()
    solved = analyze(m, problem.dependent)
    report = build_report(problem)
    out = ["Dimensional matrix:", format_matrix(problem), "", f"rank: {report['rank']}",
           f"dependent: {problem.dependent}", f"models: {len(solved)}"]
    for i, (model, rel) in enumerate(solved, 1):
        out.append("")
        out.append(f"Model {i}")
        out.append(f"  independent: {', '.join(model.independents) or '(none)'}")
        out.append(f"  dependent:   {', '.join(model.dependents) or '(none)'}")
        out.append(f"  {_witness(rel.dependent, rel.k, rel.independents, rel.k_j)}")
        for row in rel.rows:
            out.append(f"  {_witness(row.name, row.c, rel.independents, row.c_j)}")
        for form in FORMS:
            out.append(f"  {form + ':':7} {render_relation(rel, form)}")
    if report["diagnostics"]:
        out.append("")
        out += [f"note: {d}" for d in report["diagnostics"]]
    return "\n".join(out) + "\n"


def _witness(name, k, independents, coeffs) -> str:
    rhs = " ".join(f"[{n}]^{e}" for n, e in zip(independents, coeffs)) or "[1]"
    return f"[{name}]^{k} = {rhs}"


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def check_report(problem: ProblemFile, result: CheckResult) -> dict[str, Any]:
    return {
        "homogeneous": result.homogeneous,
        "terms": [
            {"term": t, "dimension": list(v), "units": format_dimension(v, problem.bases)}
            for t, v in result.terms
        ],
        "violations": [
            {"junction": v.kind, "column": v.column, "left": list(v.left), "right": list(v.right)}
            for v in result.violations
        ],
    }


def format_check(problem: ProblemFile, result: CheckResult) -> str:
    out = [f"  {t}: {format_dimension(v, problem.bases)} {_fmt_vec(v)}" for t, v in result.terms]
    for v in result.violations:
        out.append(
            f"violation at column {v.column} ('{v.kind}'): "
            f"{format_dimension(v.left, problem.bases)} {_fmt_vec(v.left)} vs "
            f"{format_dimension(v.right, problem.bases)} {_fmt_vec(v.right)}"
        )
    out.append("homogeneous" if result.homogeneous else f"not homogeneous ({len(result.violations)} violations)")
    return "\n".join(out) + "\n"
