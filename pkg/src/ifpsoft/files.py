"""JSON problem files, paired-set files and decision reports.

A problem file describes one Ω-set::

    {
      "universe": ["u1", "u2"],
      "parameters": ["x1", "x2"],
      "x_degrees": {"x1": [0.5, 0.2]},
      "omega": {"x1": {"u1": [0.7, 0.2]}},
      "relaxed": false
    }

Every omitted degree pair means ``[0, 1]``.  The structure is checked against
``problem.schema.json`` (malformed documents raise :class:`ParseError`); the
values are then checked by :func:`diagnose` (breaches raise
:class:`ValidationError`).
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, List, Union

import jsonschema

from .core import TOL, ParameterSpace, Universe
from .decision import DecisionReport, display
from .errors import ParseError, ValidationError
from .omega import OmegaSet, omega_new
from .soft import IFSoftSet, PairedIFSoftSet

PathLike = Union[str, Path]


@lru_cache(maxsize=None)
def problem_schema() -> dict:
    text = resources.files("ifpsoft").joinpath("problem.schema.json").read_text()
    return json.loads(text)


def read_json(path: PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None


def check_schema(doc: Any) -> None:
    try:
        jsonschema.validate(doc, problem_schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ParseError(f"{where}: {exc.message}") from None


def _pair_problem(where: str, pair) -> str | None:
    mu, nu = pair
    if not (0.0 <= mu <= 1.0 and 0.0 <= nu <= 1.0):
        return f"{where}: degrees {[mu, nu]} outside [0, 1]"
    if mu + nu > 1.0 + TOL:
        return f"{where}: mu + nu = {mu + nu:g} exceeds 1"
    return None


def _duplicates(labels) -> list:
    seen, dups = set(), []
    for lab in labels:
        if lab in seen and lab not in dups:
            dups.append(lab)
        seen.add(lab)
    return dups


def diagnose(doc: dict, relaxed: bool = False) -> List[str]:
    """List every invariant violation in a schema-valid problem document.

    The structural rule (parameters with degrees ``(0, 1)`` must have an empty
    evaluation set) is skipped when ``relaxed`` is true or the document
    declares ``"relaxed": true``.
    """
    out = []
    universe, parameters = doc["universe"], doc["parameters"]
    for name, labels in (("universe", universe), ("parameters", parameters)):
        for lab in _duplicates(labels):
            out.append(f"{name}: duplicate label {lab!r}")
    U, E = set(universe), set(parameters)

    x_degrees = doc.get("x_degrees", {})
    for x, pair in x_degrees.items():
        if x not in E:
            out.append(f"x_degrees: unknown parameter {x!r}")
        msg = _pair_problem(f"x_degrees[{x}]", pair)
        if msg:
            out.append(msg)

    omega = doc.get("omega", {})
    for x, row in omega.items():
        if x not in E:
            out.append(f"omega: unknown parameter {x!r}")
        for u, pair in row.items():
            if u not in U:
                out.append(f"omega[{x}]: unknown alternative {u!r}")
            msg = _pair_problem(f"omega[{x}][{u}]", pair)
            if msg:
                out.append(msg)

    if not (relaxed or doc.get("relaxed", False)):
        for x, row in omega.items():
            if list(x_degrees.get(x, [0.0, 1.0])) != [0.0, 1.0]:
                continue
            if any(list(p) != [0.0, 1.0] for p in row.values()):
                out.append(
                    f"omega[{x}]: parameter {x!r} has degrees (0, 1) "
                    "but a non-empty evaluation set"
                )
    return out


def omega_from_dict(doc: Any, relaxed: bool = False) -> OmegaSet:
    check_schema(doc)
    problems = diagnose(doc, relaxed=relaxed)
    if problems:
        raise ValidationError("; ".join(problems))
    E = ParameterSpace(doc["parameters"])
    U = Universe(doc["universe"])
    x_degrees = {x: tuple(p) for x, p in doc.get("x_degrees", {}).items()}
    omega = {
        x: {u: tuple(p) for u, p in row.items()} for x, row in doc.get("omega", {}).items()
    }
    return omega_new(
        E, U, x_degrees, omega, relaxed=relaxed or doc.get("relaxed", False)
    )


def load_omega(path: PathLike, relaxed: bool = False) -> OmegaSet:
    """Read and validate an Ω-set problem file."""
    return omega_from_dict(read_json(path), relaxed=relaxed)


def load_soft(path: PathLike) -> IFSoftSet:
    """Read the evaluation part of a problem file as an IFS-set.

    Parameter degrees, if present, are ignored and the structural rule does
    not apply.
    """
    return omega_from_dict(read_json(path), relaxed=True).omega


def _pair(m: float, n: float) -> list:
    return [float(m), float(n)]


def omega_to_dict(o: OmegaSet) -> dict:
    """Sparse, deterministic document for ``o``; inverse of :func:`omega_from_dict`."""
    x_degrees, omega = {}, {}
    for x, (m, n), row in o.items():
        if (m, n) != (0.0, 1.0):
            x_degrees[x] = _pair(m, n)
        d = row.to_dict(sparse=True)
        if d:
            omega[x] = {u: _pair(*p) for u, p in d.items()}
    doc = {
        "universe": list(o.universe),
        "parameters": list(o.parameters),
        "x_degrees": x_degrees,
        "omega": omega,
    }
    if o.relaxed:
        doc["relaxed"] = True
    return doc


def soft_to_dict(s: IFSoftSet) -> dict:
    return {
        "universe": list(s.universe),
        "parameters": list(s.parameters),
        "omega": {
            x: {u: _pair(*p) for u, p in row.items()}
            for x, row in s.to_dict(sparse=True).items()
        },
    }


def paired_to_dict(p: PairedIFSoftSet) -> dict:
    """Paired sets are written as ``gamma[x][y][u] = [mu, nu]``, sparse."""
    gamma = {}
    for x, inner in p.to_dict(sparse=True).items():
        gamma[x] = {
            y: {u: _pair(*d) for u, d in row.items()} for y, row in inner.items()
        }
    return {"universe": list(p.universe), "parameters": list(p.parameters), "gamma": gamma}


def report_to_dict(report: DecisionReport, precision: int = 3) -> dict:
    """Machine-readable report: full-precision numbers plus rounded display strings."""
    agg = report.aggregate
    rows = []
    for u, v in agg.items():
        rows.append(
            {
                "label": u,
                "mu_star": v.mu,
                "nu_star": v.nu,
                "mu_star_display": display(v.mu, precision),
                "nu_star_display": display(v.nu, precision),
            }
        )
    scalars = {
        "max_mu": report.max_mu,
        "min_nu": report.min_nu,
        "alpha": report.alpha,
        "beta": report.beta,
        "alpha_prime": report.alpha_prime,
        "beta_prime": report.beta_prime,
    }
    return {
        "aggregate": rows,
        "max_u": report.max_u,
        "min_v": report.min_v,
        **scalars,
        "opportune": report.opportune,
        "ties": {step: list(labels) for step, labels in report.ties.items()},
        "display": {k: display(v, precision) for k, v in scalars.items()},
    }


def render_table(report: DecisionReport, precision: int = 3) -> str:
    """Plain-text report for terminals."""
    d = report_to_dict(report, precision)
    width = max([5] + [len(r["label"]) for r in d["aggregate"]])
    lines = [f"{'label':<{width}}  {'mu*':>{precision + 3}}  {'nu*':>{precision + 3}}"]
    for r in d["aggregate"]:
        lines.append(
            f"{r['label']:<{width}}  {r['mu_star_display']:>{precision + 3}}  "
            f"{r['nu_star_display']:>{precision + 3}}"
        )
    show = d["display"]
    lines += [
        "",
        f"max(u)  = {show['max_mu']} at {d['max_u']}  (alpha = {show['alpha']})",
        f"min(v)  = {show['min_nu']} at {d['min_v']}  (beta = {show['beta']})",
        f"alpha'  = {show['alpha_prime']}",
        f"beta'   = {show['beta_prime']}",
        f"Opp(u)  = {d['opportune']}",
    ]
    for step, labels in d["ties"].items():
        lines.append(f"tie at {step}: {', '.join(labels)}")
    return "\n".join(lines) + "\n"


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
