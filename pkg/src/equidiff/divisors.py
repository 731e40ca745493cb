"""Divisors on curves as sparse coefficient maps over opaque place labels."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class Divisor:
    """A finite formal sum of places with integer coefficients.

    Zero coefficients are never stored.  All places have residue degree 1,
    so the degree is the plain sum of coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[str, int] = {}
        for label, c in items:
            acc[label] = acc.get(label, 0) + int(c)
        self._coeffs = {k: acc[k] for k in sorted(acc) if acc[k] != 0}

    def __getitem__(self, label: str) -> int:
        return self._coeffs.get(label, 0)

    def __iter__(self) -> Iterator[str]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def degree(self) -> int:
        return sum(self._coeffs.values())

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_effective(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor([*self.items(), *other.items()])

    def __neg__(self) -> "Divisor":
        return Divisor({k: -c for k, c in self.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor({label: k * c for label, c in self.items()})

    __rmul__ = __mul__

    def floor_divide(self, n: int) -> "Divisor":
        """Replace every coefficient c by floor(c / n)."""
        if n <= 0:
            raise ValueError(f"divisor must be positive, got {n}")
        return Divisor({label: c // n for label, c in self.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def to_dict(self) -> dict[str, int]:
        return dict(self._coeffs)

    def to_json(self) -> str:
        return json.dumps(self._coeffs, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Divisor":
        return cls(json.loads(text))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "Divisor(0)"
        return "Divisor(" + " + ".join(f"{c}[{k}]" for k, c in self.items()) + ")"


@dataclass(frozen=True)
class FiberDatum:
    """Orbit data above a place Q of the quotient curve.

    ``e`` is the common ramification index of the points above Q and ``coeff``
    the common coefficient of a G-invariant divisor at each of them.
    """

    label: str
    e: int
    coeff: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"ramification index must be positive, got {self.e}")


def _check_fibers(fibers: Iterable[FiberDatum], n: int) -> list[FiberDatum]:
    fibers = list(fibers)
    for fib in fibers:
        if n % fib.e:
            raise ValueError(
                f"ramification index {fib.e} at {fib.label} does not divide the group order {n}"
            )
    return fibers


def pushforward(fibers: Iterable[FiberDatum], n: int) -> Divisor:
    """Push a G-invariant divisor down: each of the n/e points above Q contributes."""
    return Divisor([(f.label, (n // f.e) * f.coeff) for f in _check_fibers(fibers, n)])


def equivariant_floor_pushforward(fibers: Iterable[FiberDatum], n: int) -> Divisor:
    """The divisor floor(pi_*(D) / n) on the quotient, for G of order n.

    Computed fiberwise as floor(coeff / e), which agrees with dividing the
    pushed-forward coefficient (n/e) * coeff by n.
    """
    return Divisor([(f.label, f.coeff // f.e) for f in _check_fibers(fibers, n)])


def degree(d: Divisor) -> int:
    return d.degree()


def rr_dim_genus0(d: int) -> int:
    """h^0 of a degree-d line bundle on the projective line."""
    return d + 1 if d >= 0 else 0
