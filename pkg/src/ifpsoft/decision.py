"""Aggregation of an Ω-set and selection of the opportune alternative.

The aggregate IF set averages, over all ``|E|`` parameters, the products of
the parameter degrees with the evaluation degrees::

    mu*(u) = (1/|E|) * sum_{x in supp} mu_X(x) * mu_{omega(x)}(u)
    nu*(u) = (1/|E|) * sum_{x in supp} nu_X(x) * nu_{omega(x)}(u)

Parameters outside the support contribute nothing.  Selection then compares
the alternative with the largest aggregate membership against the one with
the smallest aggregate non-membership through the ratio scores
``alpha' = max_mu / (max_mu + alpha)`` and ``beta' = beta / (min_nu + beta)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Dict, Tuple

import numpy as np

from .core import IFSet
from .errors import ConstraintViolationError, DomainError
from .omega import OmegaSet, constraint_violations

#: Absolute gap under which two scores count as tied.
TIE_TOL = 1e-12


@dataclass(frozen=True)
class DecisionReport:
    aggregate: IFSet
    max_u: str
    max_mu: float
    min_v: str
    min_nu: float
    alpha: float
    beta: float
    alpha_prime: float
    beta_prime: float
    opportune: str
    # step name -> every label tied at that step, only for steps that tied
    ties: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def tied(self) -> bool:
        return bool(self.ties)


def aggregate(o: OmegaSet) -> IFSet:
    """Aggregate IF set of an Ω-set, one ``(mu*, nu*)`` per alternative."""
    if len(o.parameters) == 0:
        raise DomainError("cannot aggregate over an empty parameter space")
    bad = constraint_violations(o.x_degrees, o.omega)
    if bad:
        raise ConstraintViolationError(
            bad[0], f"cannot aggregate a relaxed Ω-set (parameter {bad[0]!r})"
        )
    s = o.support_mask()
    n = len(o.parameters)
    mu = (o.x_degrees.mu[s, None] * o.omega.mu[s]).sum(axis=0) / n
    nu = (o.x_degrees.nu[s, None] * o.omega.nu[s]).sum(axis=0) / n
    return IFSet(o.universe, mu, nu)


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0.0 else 0.0


def select(agg: IFSet) -> DecisionReport:
    """Pick the opportune alternative from an aggregate IF set.

    Ties at the argmax, argmin or ratio comparison go to the first label in
    universe order; the tied labels are recorded in ``ties``.
    """
    labels = agg.universe.labels
    if not labels:
        raise DomainError("cannot select from an empty universe")
    mu, nu = agg.mu, agg.nu
    ties = {}

    top = np.flatnonzero(mu >= mu.max() - TIE_TOL)
    i = int(top[0])
    if len(top) > 1:
        ties["max_u"] = tuple(labels[k] for k in top)
    low = np.flatnonzero(nu <= nu.min() + TIE_TOL)
    j = int(low[0])
    if len(low) > 1:
        ties["min_v"] = tuple(labels[k] for k in low)

    max_mu, alpha = float(mu[i]), float(nu[i])
    min_nu, beta = float(nu[j]), float(mu[j])
    alpha_p = _ratio(max_mu, max_mu + alpha)
    beta_p = _ratio(beta, min_nu + beta)

    if abs(alpha_p - beta_p) <= TIE_TOL:
        winner = labels[min(i, j)]
        if i != j:
            ties["opportune"] = (labels[min(i, j)], labels[max(i, j)])
    else:
        winner = labels[i] if alpha_p > beta_p else labels[j]

    return DecisionReport(
        aggregate=agg,
        max_u=labels[i],
        max_mu=max_mu,
        min_v=labels[j],
        min_nu=min_nu,
        alpha=alpha,
        beta=beta,
        alpha_prime=alpha_p,
        beta_prime=beta_p,
        opportune=winner,
        ties=ties,
    )


def decide(o: OmegaSet) -> DecisionReport:
    return select(aggregate(o))


def display(value: float, precision: int = 3) -> str:
    """Round half-up on the exact binary value of ``value``.

    >>> display(0.0325), display(0.057499999999999996)
    ('0.033', '0.057')
    """
    q = Decimal(1).scaleb(-precision)
    return str(Decimal(value).quantize(q, rounding=ROUND_HALF_UP))
