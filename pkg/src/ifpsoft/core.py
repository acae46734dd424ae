"""Intuitionistic fuzzy values and finite intuitionistic fuzzy sets.

An intuitionistic fuzzy (IF) set over a finite universe assigns every label a
membership degree ``mu`` and a non-membership degree ``nu`` with
``0 <= mu + nu <= 1``.  Sets are stored as two read-only float arrays aligned
with the universe's label order, so every operation below is a vectorised
elementwise ``min``/``max``/swap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

import numpy as np

from .errors import UniverseMismatchError, ValidationError

#: Slack allowed on ``mu + nu <= 1`` and used for tolerant equality.
TOL = 1e-9

Degrees = Tuple[float, float]


@dataclass(frozen=True)
class Universe:
    """An ordered, duplicate-free collection of labels.

    The order fixed here is the iteration and reporting order of every set
    built on the universe.
    """

    labels: Tuple[str, ...]

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        seen = set()
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValidationError(f"labels must be non-empty strings, got {label!r}")
            if label in seen:
                raise ValidationError(f"duplicate label {label!r}")
            seen.add(label)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown label {label!r}") from None

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"


# A parameter space is structurally a universe of parameter labels.
ParameterSpace = Universe


@dataclass(frozen=True)
class IFValue:
    """A (membership, non-membership) degree pair."""

    mu: float
    nu: float

    def __post_init__(self):
        check_degrees(self.mu, self.nu)

    @property
    def hesitation(self) -> float:
        return 1.0 - self.mu - self.nu

    def __iter__(self):
        yield self.mu
        yield self.nu


def check_degrees(mu, nu, labels: Sequence[str] | None = None) -> None:
    """Raise :class:`ValidationError` unless every pair is a valid IF degree.

    ``mu`` and ``nu`` may be scalars or aligned arrays; when ``labels`` is
    given the message names the first offending label.
    """
    mu = np.atleast_1d(np.asarray(mu, dtype=float))
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    bad = ~(
        (mu >= 0.0) & (mu <= 1.0) & (nu >= 0.0) & (nu <= 1.0) & (mu + nu <= 1.0 + TOL)
    )
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        where = f" at {labels[i]!r}" if labels is not None else ""
        raise ValidationError(
            f"invalid degrees{where}: mu={float(mu[i])!r}, nu={float(nu[i])!r} "
            "(need 0 <= mu, nu <= 1 and mu + nu <= 1)"
        )


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a


class IFSet:
    """A total map from a :class:`Universe` to IF degrees.

    Construct from aligned arrays, or sparsely with :meth:`from_mapping`
    where omitted labels default to the empty value ``(0, 1)``.
    """

    __slots__ = ("universe", "mu", "nu")

    def __init__(self, universe: Universe, mu, nu):
        mu = _frozen(mu)
        nu = _frozen(nu)
        if mu.shape != (len(universe),) or nu.shape != (len(universe),):
            raise ValidationError(
                f"degree arrays of shape {mu.shape}/{nu.shape} do not match "
                f"a universe of {len(universe)} labels"
            )
        check_degrees(mu, nu, universe.labels)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    def __setattr__(self, name, value):
        raise AttributeError("IFSet is immutable")

    @classmethod
    def from_mapping(cls, universe: Universe, values: Mapping[str, Degrees]) -> "IFSet":
        mu = np.zeros(len(universe))
        nu = np.ones(len(universe))
        for label, (m, n) in values.items():
            i = universe.index(label)
            mu[i], nu[i] = m, n
        return cls(universe, mu, nu)

    def __getitem__(self, label: str) -> IFValue:
        i = self.universe.index(label)
        return IFValue(float(self.mu[i]), float(self.nu[i]))

    def __len__(self) -> int:
        return len(self.universe)

    def items(self) -> Iterator[Tuple[str, IFValue]]:
        for i, label in enumerate(self.universe):
            yield label, IFValue(float(self.mu[i]), float(self.nu[i]))

    def to_dict(self, sparse: bool = False) -> dict:
        """Return ``{label: (mu, nu)}``; with ``sparse`` drop ``(0, 1)`` entries."""
        out = {}
        for i, label in enumerate(self.universe):
            m, n = float(self.mu[i]), float(self.nu[i])
            if sparse and m == 0.0 and n == 1.0:
                continue
            out[label] = (m, n)
        return out

    def is_empty(self) -> bool:
        return bool(np.all(self.mu == 0.0) and np.all(self.nu == 1.0))

    def is_universal(self) -> bool:
        return bool(np.all(self.mu == 1.0) and np.all(self.nu == 0.0))

    def __eq__(self, other):
        if not isinstance(other, IFSet):
            return NotImplemented
        return (
            self.universe == other.universe
            and np.array_equal(self.mu, other.mu)
            and np.array_equal(self.nu, other.nu)
        )

    def __hash__(self):
        return hash((self.universe, tuple(self.mu.tolist()), tuple(self.nu.tolist())))

    def __repr__(self):
        body = ", ".join(f"({lab}, {v.mu:g}, {v.nu:g})" for lab, v in self.items())
        return f"IFSet({{{body}}})"


def _same_universe(x: IFSet, y: IFSet) -> None:
    if x.universe != y.universe:
        raise UniverseMismatchError(
            f"universes differ: {list(x.universe)} vs {list(y.universe)}"
        )


def if_empty(universe: Universe) -> IFSet:
    """The IF-empty set: every label gets ``(0, 1)``."""
    n = len(universe)
    return IFSet(universe, np.zeros(n), np.ones(n))


def if_universal(universe: Universe) -> IFSet:
    n = len(universe)
    return IFSet(universe, np.ones(n), np.zeros(n))


def if_subset(x: IFSet, y: IFSet) -> bool:
    """True iff ``mu_x <= mu_y`` and ``nu_x >= nu_y`` everywhere."""
    _same_universe(x, y)
    return bool(np.all(x.mu <= y.mu) and np.all(x.nu >= y.nu))


def if_equal(x: IFSet, y: IFSet, atol: float = TOL) -> bool:
    """Elementwise equality up to an absolute tolerance."""
    _same_universe(x, y)
    return bool(
        np.all(np.abs(x.mu - y.mu) <= atol) and np.all(np.abs(x.nu - y.nu) <= atol)
    )


def if_union(x: IFSet, y: IFSet) -> IFSet:
    _same_universe(x, y)
    return IFSet(x.universe, np.maximum(x.mu, y.mu), np.minimum(x.nu, y.nu))


def if_intersection(x: IFSet, y: IFSet) -> IFSet:
    _same_universe(x, y)
    return IFSet(x.universe, np.minimum(x.mu, y.mu), np.maximum(x.nu, y.nu))


def if_complement(x: IFSet) -> IFSet:
    return IFSet(x.universe, x.nu, x.mu)
