"""Intuitionistic fuzzy soft sets: parameter-indexed families of IF sets."""

from __future__ import annotations

from typing import Iterator, Mapping, Tuple

import numpy as np

from .core import (
    TOL,
    Degrees,
    IFSet,
    ParameterSpace,
    Universe,
    _frozen,
    check_degrees,
)
from .errors import UniverseMismatchError, ValidationError


class IFSoftSet:
    """A map ``gamma: E -> IF(U)`` stored as two ``|E| x |U|`` arrays.

    Row ``i`` holds the IF set assigned to ``parameters.labels[i]``.  The
    carrier ``A`` is implicit: the parameters whose row is not IF-empty.
    """

    __slots__ = ("parameters", "universe", "mu", "nu")

    def __init__(self, parameters: ParameterSpace, universe: Universe, mu, nu):
        mu = _frozen(mu)
        nu = _frozen(nu)
        shape = (len(parameters), len(universe))
        if mu.shape != shape or nu.shape != shape:
            raise ValidationError(
                f"evaluation arrays of shape {mu.shape}/{nu.shape}, expected {shape}"
            )
        for i, x in enumerate(parameters):
            try:
                check_degrees(mu[i], nu[i], universe.labels)
            except ValidationError as exc:
                raise ValidationError(f"parameter {x!r}: {exc}") from None
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    def __setattr__(self, name, value):
        raise AttributeError("IFSoftSet is immutable")

    @classmethod
    def from_mapping(
        cls,
        parameters: ParameterSpace,
        universe: Universe,
        gamma: Mapping[str, Mapping[str, Degrees] | IFSet],
    ) -> "IFSoftSet":
        """Build from a sparse ``{x: {u: (mu, nu)}}`` mapping.

        Parameters and alternatives that are left out default to ``(0, 1)``.
        """
        mu = np.zeros((len(parameters), len(universe)))
        nu = np.ones((len(parameters), len(universe)))
        for x, row in gamma.items():
            i = parameters.index(x)
            if isinstance(row, IFSet):
                if row.universe != universe:
                    raise UniverseMismatchError(f"gamma({x!r}) lives on another universe")
                mu[i], nu[i] = row.mu, row.nu
                continue
            for u, (m, n) in row.items():
                j = universe.index(u)
                mu[i, j], nu[i, j] = m, n
        return cls(parameters, universe, mu, nu)

    def gamma(self, x: str) -> IFSet:
        i = self.parameters.index(x)
        return IFSet(self.universe, self.mu[i], self.nu[i])

    def __getitem__(self, x: str) -> IFSet:
        return self.gamma(x)

    def items(self) -> Iterator[Tuple[str, IFSet]]:
        for i, x in enumerate(self.parameters):
            yield x, IFSet(self.universe, self.mu[i], self.nu[i])

    def empty_rows(self) -> np.ndarray:
        """Boolean mask of parameters whose IF set is IF-empty."""
        return np.all(self.mu == 0.0, axis=1) & np.all(self.nu == 1.0, axis=1)

    @property
    def carrier(self) -> Tuple[str, ...]:
        empty = self.empty_rows()
        return tuple(x for x, e in zip(self.parameters, empty) if not e)

    def to_dict(self, sparse: bool = True) -> dict:
        out = {}
        for x, row in self.items():
            d = row.to_dict(sparse=sparse)
            if sparse and not d:
                continue
            out[x] = d
        return out

    def __eq__(self, other):
        if not isinstance(other, IFSoftSet):
            return NotImplemented
        return (
            self.parameters == other.parameters
            and self.universe == other.universe
            and np.array_equal(self.mu, other.mu)
            and np.array_equal(self.nu, other.nu)
        )

    def __hash__(self):
        return hash((self.parameters, self.universe, self.mu.tobytes(), self.nu.tobytes()))

    def __repr__(self):
        return f"IFSoftSet({self.to_dict()!r})"


class PairedIFSoftSet:
    """Result of a product: an IF set for every ordered pair ``(x, y)`` in ``E x E``.

    ``mu[i, j]`` and ``nu[i, j]`` are the degrees of the IF set at
    ``(parameters[i], parameters[j])``.
    """

    __slots__ = ("parameters", "universe", "mu", "nu")

    def __init__(self, parameters: ParameterSpace, universe: Universe, mu, nu):
        mu = _frozen(mu)
        nu = _frozen(nu)
        shape = (len(parameters), len(parameters), len(universe))
        if mu.shape != shape or nu.shape != shape:
            raise ValidationError(f"paired arrays must have shape {shape}")
        check_degrees(mu.ravel(), nu.ravel())
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    def __setattr__(self, name, value):
        raise AttributeError("PairedIFSoftSet is immutable")

    def gamma(self, x: str, y: str) -> IFSet:
        i, j = self.parameters.index(x), self.parameters.index(y)
        return IFSet(self.universe, self.mu[i, j], self.nu[i, j])

    def pairs(self) -> Iterator[Tuple[str, str]]:
        for x in self.parameters:
            for y in self.parameters:
                yield x, y

    def to_dict(self, sparse: bool = True) -> dict:
        out = {}
        for x, y in self.pairs():
            d = self.gamma(x, y).to_dict(sparse=sparse)
            if sparse and not d:
                continue
            out.setdefault(x, {})[y] = d
        return out

    def __eq__(self, other):
        if not isinstance(other, PairedIFSoftSet):
            return NotImplemented
        return (
            self.parameters == other.parameters
            and self.universe == other.universe
            and np.array_equal(self.mu, other.mu)
            and np.array_equal(self.nu, other.nu)
        )

    __hash__ = None


def _same_spaces(a, b) -> None:
    if a.parameters != b.parameters:
        raise UniverseMismatchError(
            f"parameter spaces differ: {list(a.parameters)} vs {list(b.parameters)}"
        )
    if a.universe != b.universe:
        raise UniverseMismatchError(
            f"universes differ: {list(a.universe)} vs {list(b.universe)}"
        )


def ifss_empty(parameters: ParameterSpace, universe: Universe) -> IFSoftSet:
    shape = (len(parameters), len(universe))
    return IFSoftSet(parameters, universe, np.zeros(shape), np.ones(shape))


def ifss_universal(
    parameters: ParameterSpace, universe: Universe, carrier=None
) -> IFSoftSet:
    """The ``A``-universal IFS-set: IF-universal on ``carrier``, IF-empty elsewhere.

    With ``carrier=None`` this is the universal IFS-set over all of ``E``.
    """
    shape = (len(parameters), len(universe))
    mu, nu = np.zeros(shape), np.ones(shape)
    rows = range(len(parameters)) if carrier is None else [parameters.index(x) for x in carrier]
    for i in rows:
        mu[i], nu[i] = 1.0, 0.0
    return IFSoftSet(parameters, universe, mu, nu)


def ifss_subset(a: IFSoftSet, b: IFSoftSet) -> bool:
    _same_spaces(a, b)
    return bool(np.all(a.mu <= b.mu) and np.all(a.nu >= b.nu))


def ifss_equal(a: IFSoftSet, b: IFSoftSet, atol: float = TOL) -> bool:
    _same_spaces(a, b)
    return bool(np.all(np.abs(a.mu - b.mu) <= atol) and np.all(np.abs(a.nu - b.nu) <= atol))


def ifss_union(a: IFSoftSet, b: IFSoftSet) -> IFSoftSet:
    _same_spaces(a, b)
    return IFSoftSet(a.parameters, a.universe, np.maximum(a.mu, b.mu), np.minimum(a.nu, b.nu))


def ifss_intersection(a: IFSoftSet, b: IFSoftSet) -> IFSoftSet:
    _same_spaces(a, b)
    return IFSoftSet(a.parameters, a.universe, np.minimum(a.mu, b.mu), np.maximum(a.nu, b.nu))


def ifss_complement(a: IFSoftSet) -> IFSoftSet:
    return IFSoftSet(a.parameters, a.universe, a.nu, a.mu)


def ifss_and_product(a: IFSoftSet, b: IFSoftSet) -> PairedIFSoftSet:
    """``(a AND b)(x, y) = a(x) ∩ b(y)`` for every ordered pair of parameters."""
    _same_spaces(a, b)
    mu = np.minimum(a.mu[:, None, :], b.mu[None, :, :])
    nu = np.maximum(a.nu[:, None, :], b.nu[None, :, :])
    return PairedIFSoftSet(a.parameters, a.universe, mu, nu)


def ifss_or_product(a: IFSoftSet, b: IFSoftSet) -> PairedIFSoftSet:
    """``(a OR b)(x, y) = a(x) ∪ b(y)`` for every ordered pair of parameters."""
    _same_spaces(a, b)
    mu = np.maximum(a.mu[:, None, :], b.mu[None, :, :])
    nu = np.minimum(a.nu[:, None, :], b.nu[None, :, :])
    return PairedIFSoftSet(a.parameters, a.universe, mu, nu)


def paired_complement(p: PairedIFSoftSet) -> PairedIFSoftSet:
    return PairedIFSoftSet(p.parameters, p.universe, p.nu, p.mu)
