"""Ramification bookkeeping for Galois covers X -> Y = X/G.

Genus via Hurwitz, ramification divisors in the tame and cyclic order-p
cases, the dimension of the G-invariant holomorphic differentials, and the
two faithfulness classifications built on it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Iterable, Sequence, Union

from .divisors import Divisor, FiberDatum, equivariant_floor_pushforward
from .errors import DefectError, InconsistentProfileError
from .gfpoly import is_prime


class Verdict(enum.Enum):
    FAITHFUL_GUARANTEED = "FaithfulGuaranteed"
    POSSIBLY_UNFAITHFUL = "PossiblyUnfaithful"


class Prop2Verdict(enum.Enum):
    TRIVIAL_ACTION = "TrivialAction"
    NONTRIVIAL_ACTION = "NontrivialAction"


@dataclass(frozen=True)
class BranchPoint:
    e: int  # ramification index above the branch point
    d: int  # different exponent at each point above it


@dataclass(frozen=True)
class RamificationProfile:
    """Branch data of a Galois cover of degree n over a base of genus g_Y.

    ``p = 0`` means characteristic zero; every point is then tame.
    """

    n: int
    p: int
    g_Y: int
    branch: tuple[BranchPoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branch", tuple(self.branch))
        if self.n < 1:
            raise InconsistentProfileError(f"group order must be positive, got {self.n}")
        if self.p < 0 or (self.p > 0 and not is_prime(self.p)):
            raise InconsistentProfileError(f"characteristic must be 0 or prime, got {self.p}")
        if self.g_Y < 0:
            raise InconsistentProfileError(f"base genus must be nonnegative, got {self.g_Y}")
        for i, b in enumerate(self.branch):
            if b.e < 2 or self.n % b.e:
                raise InconsistentProfileError(
                    f"branch point {i}: index {b.e} must be >= 2 and divide n = {self.n}"
                )
            if self.is_wild(b):
                if b.d < b.e:
                    raise InconsistentProfileError(
                        f"branch point {i}: wild index {b.e} needs different exponent >= {b.e}, got {b.d}"
                    )
            elif b.d != b.e - 1:
                raise InconsistentProfileError(
                    f"branch point {i}: tame index {b.e} forces different exponent {b.e - 1}, got {b.d}"
                )

    def is_wild(self, b: BranchPoint) -> bool:
        return self.p > 0 and b.e % self.p == 0

    @property
    def wild(self) -> bool:
        return any(self.is_wild(b) for b in self.branch)

    @property
    def tame(self) -> bool:
        return not self.wild

    @property
    def deg_R(self) -> int:
        return sum((self.n // b.e) * b.d for b in self.branch)

    def ramification_fibers(self) -> list[FiberDatum]:
        return [FiberDatum(f"Q{i}", b.e, b.d) for i, b in enumerate(self.branch)]

    def floor_divisor(self) -> Divisor:
        """floor(pi_*(R) / n) on Y."""
        return equivariant_floor_pushforward(self.ramification_fibers(), self.n)

    @property
    def deg_floor(self) -> int:
        return self.floor_divisor().degree()

    @property
    def g_X(self) -> int:
        return hurwitz_genus(self.n, self.g_Y, self.deg_R)

    @property
    def invariant_dimension(self) -> int:
        return invariant_dimension(self.g_Y, self.deg_floor)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RamificationProfile":
        try:
            branch = [BranchPoint(int(b["e"]), int(b["d"])) for b in data.get("branch", [])]
            return cls(int(data["n"]), int(data.get("p", 0)), int(data["gY"]), tuple(branch))
        except (KeyError, TypeError) as exc:
            raise InconsistentProfileError(f"malformed ramification profile: {exc!r}") from exc

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "gY": self.g_Y,
            "branch": [{"e": b.e, "d": b.d} for b in self.branch],
        }


@dataclass(frozen=True)
class CyclicPData:
    """Ramification jumps N_1..N_r of a cyclic degree-p cover of the line."""

    p: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(self.jumps))
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not self.jumps:
            # Hurwitz would give g_X = 1 - p < 0
            raise InconsistentProfileError("a cyclic p-cover of the line must ramify somewhere")
        for N in self.jumps:
            if N < 1:
                raise InconsistentProfileError(f"jumps must be positive, got {N}")
            if N % self.p == 0:
                raise InconsistentProfileError(f"jump {N} is divisible by p = {self.p}")

    @property
    def r(self) -> int:
        return len(self.jumps)

    @property
    def N(self) -> int:
        return sum(self.jumps)

    def profile(self) -> RamificationProfile:
        branch = [BranchPoint(self.p, different_exponent_cyclic_p(N, self.p)) for N in self.jumps]
        return RamificationProfile(self.p, self.p, 0, tuple(branch))

    def decomposition(self) -> "Prop2Decomposition":
        return Prop2Decomposition.from_jumps(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CyclicPData":
        try:
            return cls(int(data["p"]), tuple(int(N) for N in data["jumps"]))
        except (KeyError, TypeError) as exc:
            raise InconsistentProfileError(f"malformed jump data: {exc!r}") from exc

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.p, "jumps": list(self.jumps)}


@dataclass(frozen=True)
class Prop2Decomposition:
    """N_i = s_i p + t_i with t_i in 1..p-1, for each jump."""

    p: int
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_jumps(cls, data: CyclicPData) -> "Prop2Decomposition":
        return cls(data.p, tuple(divmod(N, data.p) for N in data.jumps))

    def __post_init__(self):
        for s, t in self.pairs:
            if s < 0 or not 1 <= t <= self.p - 1:
                raise ValueError(f"({s}, {t}) is not a valid decomposition modulo {self.p}")

    @property
    def r(self) -> int:
        return len(self.pairs)

    @property
    def N(self) -> int:
        return sum(s * self.p + t for s, t in self.pairs)

    @property
    def S(self) -> int:
        return sum(s for s, _ in self.pairs)

    @property
    def T(self) -> int:
        return sum(t for _, t in self.pairs)

    def fixed_dimension(self) -> int:
        # each floor(-(N_i + 1)/p) equals -s_i - 1
        return self.N - self.S - 1


def _as_cyclic(p: int, jumps: Union[CyclicPData, Sequence[int]]) -> CyclicPData:
    data = jumps if isinstance(jumps, CyclicPData) else CyclicPData(p, tuple(jumps))
    if data.p != p:
        raise ValueError(f"jump data is for p = {data.p}, not {p}")
    return data


def ramification_divisor_tame(e_list: Iterable[int], n: int) -> Divisor:
    """R = sum (e_P - 1)[P] for a tame cover, with all n/e points of each fiber.

    Points are labelled ``Q<k>.P<j>`` for the j-th point above branch point k.
    """
    terms = []
    for k, e in enumerate(e_list):
        if e < 1 or n % e:
            raise InconsistentProfileError(f"ramification index {e} does not divide n = {n}")
        terms.extend((f"Q{k}.P{j}", e - 1) for j in range(n // e))
    return Divisor(terms)


def different_exponent_cyclic_p(N: int, p: int) -> int:
    """Hilbert's different exponent (N + 1)(p - 1) for a cyclic order-p jump N."""
    if N < 1 or N % p == 0:
        raise InconsistentProfileError(f"jump {N} must be positive and prime to p = {p}")
    return (N + 1) * (p - 1)


def hurwitz_genus(n: int, g_Y: int, deg_R: int) -> int:
    """Solve 2(g_X - 1) = 2n(g_Y - 1) + deg R for g_X."""
    rhs = 2 * n * (g_Y - 1) + deg_R
    if rhs % 2:
        raise InconsistentProfileError(f"odd ramification degree {deg_R}: Hurwitz parity fails")
    if rhs < -2:
        raise InconsistentProfileError(
            f"Hurwitz gives negative genus for n={n}, g_Y={g_Y}, deg R={deg_R}"
        )
    return rhs // 2 + 1


def as_genus(p: int, jumps: Union[CyclicPData, Sequence[int]]) -> int:
    """Genus (N + r - 2)(p - 1)/2 of a cyclic p-cover of the line."""
    data = _as_cyclic(p, jumps)
    return (data.N + data.r - 2) * (p - 1) // 2


def invariant_dimension(g_Y: int, deg_floor: int) -> int:
    """dim H^0(X, Omega)^G from the base genus and deg floor(pi_*(R)/n)."""
    if deg_floor < 0:
        raise ValueError(f"deg_floor must be nonnegative, got {deg_floor}")
    if deg_floor == 0:
        return g_Y
    return g_Y - 1 + deg_floor


def invariant_dimension_cyclic_p(p: int, jumps: Union[CyclicPData, Sequence[int]]) -> int:
    """-1 + N + r + sum floor(-(N_i + 1)/p), cross-checked against the general formula."""
    data = _as_cyclic(p, jumps)
    closed = -1 + data.N + data.r + sum(-(N + 1) // p for N in data.jumps)
    deg_floor = sum(different_exponent_cyclic_p(N, p) // p for N in data.jumps)
    general = invariant_dimension(0, deg_floor)
    if closed != general or closed < 0:
        raise DefectError(f"fixed-dimension routes disagree for {data}: {closed} vs {general}")
    return closed


def faithfulness_classifier(profile: RamificationProfile, g_X: int | None = None) -> Verdict:
    """Faithfulness on differentials is guaranteed for g_X >= 2 unless the
    cover is wild with g_Y = 0 in characteristic 2.  Never claims unfaithfulness."""
    genus = profile.g_X
    if g_X is not None and g_X != genus:
        raise InconsistentProfileError(f"supplied g_X = {g_X} but Hurwitz gives {genus}")
    exceptional = profile.wild and profile.g_Y == 0 and profile.p == 2
    if genus >= 2 and not exceptional:
        return Verdict.FAITHFUL_GUARANTEED
    return Verdict.POSSIBLY_UNFAITHFUL


def prop2_classifier(p: int, jumps: Union[CyclicPData, Sequence[int]]) -> Prop2Verdict:
    """Z/p acting on a cyclic p-cover of the line acts trivially on
    differentials iff p = 2, g_X = 0, or p = 3 and g_X = 1."""
    g = as_genus(p, jumps)
    if p == 2 or g == 0 or (p == 3 and g == 1):
        return Prop2Verdict.TRIVIAL_ACTION
    return Prop2Verdict.NONTRIVIAL_ACTION
