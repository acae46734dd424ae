"""IF-parameterized intuitionistic fuzzy soft sets (Ω-sets) and their algebra.

An Ω-set pairs an IF set ``X`` over the parameter space ``E`` (how strongly
each criterion applies) with an IF soft set ``omega: E -> IF(U)`` (how each
alternative scores on each criterion).  A parameter with degrees ``(0, 1)``
lies outside ``X`` and must carry the IF-empty evaluation set.

Complements generally break that rule, so results that violate it are marked
``relaxed``.  Every operation here accepts relaxed operands.
"""

from __future__ import annotations

from typing import Iterator, Mapping, Tuple

import numpy as np

from .core import TOL, Degrees, IFSet, ParameterSpace, Universe, if_empty
from .errors import ConstraintViolationError, UniverseMismatchError
from .soft import (
    IFSoftSet,
    ifss_complement,
    ifss_empty,
    ifss_intersection,
    ifss_subset,
    ifss_union,
    ifss_universal,
)


class OmegaSet:
    """An Ω-set: parameter degrees ``x_degrees`` plus evaluations ``omega``.

    Unless ``relaxed`` is true, construction enforces that every parameter
    outside the support of ``x_degrees`` maps to the IF-empty set.  The
    stored ``relaxed`` attribute is true only if the set actually breaks
    that rule.
    """

    __slots__ = ("x_degrees", "omega", "relaxed")

    def __init__(self, x_degrees: IFSet, omega: IFSoftSet, relaxed: bool = False):
        if x_degrees.universe != omega.parameters:
            raise UniverseMismatchError(
                "parameter degrees and evaluations use different parameter spaces"
            )
        bad = constraint_violations(x_degrees, omega)
        if bad and not relaxed:
            raise ConstraintViolationError(bad[0])
        object.__setattr__(self, "x_degrees", x_degrees)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "relaxed", bool(bad))

    def __setattr__(self, name, value):
        raise AttributeError("OmegaSet is immutable")

    @property
    def parameters(self) -> ParameterSpace:
        return self.omega.parameters

    @property
    def universe(self) -> Universe:
        return self.omega.universe

    def degrees(self, x: str):
        return self.x_degrees[x]

    def __getitem__(self, x: str) -> IFSet:
        return self.omega.gamma(x)

    def items(self) -> Iterator[Tuple[str, Tuple[float, float], IFSet]]:
        """Yield ``(x, (mu_X(x), nu_X(x)), omega(x))`` in parameter order."""
        for i, (x, row) in enumerate(self.omega.items()):
            yield x, (float(self.x_degrees.mu[i]), float(self.x_degrees.nu[i])), row

    def outside_mask(self) -> np.ndarray:
        """Parameters whose degrees are exactly ``(0, 1)``."""
        return (self.x_degrees.mu == 0.0) & (self.x_degrees.nu == 1.0)

    def support_mask(self) -> np.ndarray:
        """Parameters that are in ``X`` or carry a non-empty evaluation set."""
        return ~self.outside_mask() | ~self.omega.empty_rows()

    @property
    def support(self) -> Tuple[str, ...]:
        return tuple(x for x, s in zip(self.parameters, self.support_mask()) if s)

    def satisfies_constraint(self) -> bool:
        return not constraint_violations(self.x_degrees, self.omega)

    def __eq__(self, other):
        if not isinstance(other, OmegaSet):
            return NotImplemented
        return self.x_degrees == other.x_degrees and self.omega == other.omega

    def __hash__(self):
        return hash((self.x_degrees, self.omega))

    def __repr__(self):
        parts = []
        for x, (m, n), row in self.items():
            if m == 0.0 and n == 1.0 and row.is_empty():
                continue
            parts.append(f"(({m:g},{n:g})/{x}, {row.to_dict(sparse=True)})")
        flag = ", relaxed" if self.relaxed else ""
        return f"OmegaSet({{{', '.join(parts)}}}{flag})"


def constraint_violations(x_degrees: IFSet, omega: IFSoftSet) -> list:
    """Labels ``x`` with degrees ``(0, 1)`` whose evaluation set is not IF-empty."""
    outside = (x_degrees.mu == 0.0) & (x_degrees.nu == 1.0)
    bad = outside & ~omega.empty_rows()
    return [x for x, b in zip(omega.parameters, bad) if b]


def _result(x_degrees: IFSet, omega: IFSoftSet) -> OmegaSet:
    return OmegaSet(x_degrees, omega, relaxed=True)


def omega_new(
    parameters: ParameterSpace,
    universe: Universe,
    x_degrees: Mapping[str, Degrees] | IFSet,
    omega: Mapping[str, Mapping[str, Degrees] | IFSet] | None = None,
    relaxed: bool = False,
) -> OmegaSet:
    """Build an Ω-set from sparse mappings.

    Parameters absent from ``x_degrees`` get ``(0, 1)``; parameters absent
    from ``omega`` get the IF-empty set, as do alternatives left out of an
    evaluation set.

    >>> E, U = ParameterSpace(["x1", "x2"]), Universe(["u1"])
    >>> o = omega_new(E, U, {"x1": (0.5, 0.2)}, {"x1": {"u1": (0.7, 0.2)}})
    >>> o["x2"].is_empty()
    True
    """
    if not isinstance(x_degrees, IFSet):
        x_degrees = IFSet.from_mapping(parameters, x_degrees)
    soft = IFSoftSet.from_mapping(parameters, universe, omega or {})
    return OmegaSet(x_degrees, soft, relaxed=relaxed)


def omega_empty(parameters: ParameterSpace, universe: Universe) -> OmegaSet:
    return OmegaSet(if_empty(parameters), ifss_empty(parameters, universe))


def omega_universal(parameters: ParameterSpace, universe: Universe) -> OmegaSet:
    n = len(parameters)
    return OmegaSet(
        IFSet(parameters, np.ones(n), np.zeros(n)), ifss_universal(parameters, universe)
    )


def omega_x_empty(x_degrees: IFSet, universe: Universe) -> OmegaSet:
    """The X-empty Ω-set: degrees from ``x_degrees``, every evaluation IF-empty."""
    return OmegaSet(x_degrees, ifss_empty(x_degrees.universe, universe))


def omega_is_x_empty(o: OmegaSet) -> bool:
    return bool(np.all(o.omega.empty_rows()))


def omega_is_x_universal(o: OmegaSet) -> bool:
    """True when every parameter in ``X`` has degrees ``(1, 0)`` and evaluation ``U``.

    Vacuously true when ``X`` is empty.
    """
    inside = ~o.outside_mask()
    deg_ok = (o.x_degrees.mu[inside] == 1.0) & (o.x_degrees.nu[inside] == 0.0)
    rows_ok = np.all(o.omega.mu[inside] == 1.0, axis=1) & np.all(
        o.omega.nu[inside] == 0.0, axis=1
    )
    return bool(np.all(deg_ok) and np.all(rows_ok))


def _same_spaces(a: OmegaSet, b: OmegaSet) -> None:
    if a.parameters != b.parameters or a.universe != b.universe:
        raise UniverseMismatchError("Ω-sets are defined over different spaces")


def omega_subset(a: OmegaSet, b: OmegaSet) -> bool:
    _same_spaces(a, b)
    return bool(
        np.all(a.x_degrees.mu <= b.x_degrees.mu)
        and np.all(a.x_degrees.nu >= b.x_degrees.nu)
        and ifss_subset(a.omega, b.omega)
    )


def omega_equal(a: OmegaSet, b: OmegaSet, atol: float = TOL) -> bool:
    """Equality of degrees and evaluations up to ``atol``; the relaxed flag is ignored."""
    _same_spaces(a, b)
    arrays = [
        (a.x_degrees.mu, b.x_degrees.mu),
        (a.x_degrees.nu, b.x_degrees.nu),
        (a.omega.mu, b.omega.mu),
        (a.omega.nu, b.omega.nu),
    ]
    return all(bool(np.all(np.abs(p - q) <= atol)) for p, q in arrays)


def omega_complement(a: OmegaSet) -> OmegaSet:
    x = IFSet(a.parameters, a.x_degrees.nu, a.x_degrees.mu)
    return _result(x, ifss_complement(a.omega))


def omega_union(a: OmegaSet, b: OmegaSet) -> OmegaSet:
    _same_spaces(a, b)
    x = IFSet(
        a.parameters,
        np.maximum(a.x_degrees.mu, b.x_degrees.mu),
        np.minimum(a.x_degrees.nu, b.x_degrees.nu),
    )
    return _result(x, ifss_union(a.omega, b.omega))


def omega_intersection(a: OmegaSet, b: OmegaSet) -> OmegaSet:
    _same_spaces(a, b)
    x = IFSet(
        a.parameters,
        np.minimum(a.x_degrees.mu, b.x_degrees.mu),
        np.maximum(a.x_degrees.nu, b.x_degrees.nu),
    )
    return _result(x, ifss_intersection(a.omega, b.omega))
