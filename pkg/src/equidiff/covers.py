"""Explicit cyclic covers of the projective line and their differentials.

Two families are modelled:

* Artin-Schreier covers ``y^p - y = f(x)`` in characteristic p, reduced so
  that the only branch point is x = infinity with jump N = deg f prime to p.
  The generator acts by ``y -> y + 1``.
* Kummer covers ``y^n = f(x)`` with n prime to p, f squarefree of degree m
  prime to n.  Branch points are the roots of f and infinity; the generator
  acts by ``y -> zeta * y``.

Bases of holomorphic differentials are found by testing monomials
``x^i y^j dx`` (Artin-Schreier) or ``x^i y^-j dx`` (Kummer) against the
valuations at every modelled place, and the Galois action is written out as
an explicit matrix so kernels and fixed spaces are computed by elimination.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .errors import DefectError, DegenerateCoverError, FieldMismatchError
from .gfpoly import GF, FieldElement, Matrix, Polynomial, smallest_extension_for_roots
from .ramcalc import (
    BranchPoint,
    CyclicPData,
    RamificationProfile,
    as_genus,
    different_exponent_cyclic_p,
    hurwitz_genus,
)


class CoverKind(enum.Enum):
    ARTIN_SCHREIER = "as"
    KUMMER = "kummer"


# -- Artin-Schreier reduction ---------------------------------------------------


def as_reduce(f: Polynomial, p: int | None = None, q: int | None = None) -> tuple[Polynomial, Polynomial]:
    """Replace f by f - (h^p - h) with no nonconstant monomial of exponent
    divisible by p.  Returns ``(f_reduced, h)``.

    Each x^(kp) term c x^(kp) is traded for c' x^k with c'^p = c, working
    from the top degree down, so the resulting degree is prime to p.
    """
    F = f.field
    if p is not None and p != F.p:
        raise FieldMismatchError(f"polynomial over {F} used with p = {p}")
    if q is not None and q != F.q:
        raise FieldMismatchError(f"polynomial over {F} used with q = {q}")
    p = F.p
    if f.degree < 1:
        raise DegenerateCoverError(f"f = {f} is constant: the cover splits or is a constant extension")
    h = Polynomial(F)
    cur = f
    for e in range(int(cur.degree), 0, -1):
        c = cur[e]
        if e % p or not c:
            continue
        term = Polynomial.monomial(F, F.frobenius_root(c), e // p)
        h = h + term
        cur = cur - (term**p - term)
    if cur.degree < 1:
        raise DegenerateCoverError(
            f"f = {f} is equivalent to a constant modulo h^p - h; the cover is not a branched p-cover"
        )
    if (f - cur) != h**p - h:
        raise DefectError(f"reduction witness failed for {f}")
    return cur, h


def as_jump(f_reduced: Polynomial) -> CyclicPData:
    """The single jump at infinity of y^p - y = f_reduced is deg f_reduced."""
    return CyclicPData(f_reduced.field.p, (int(f_reduced.degree),))


# -- cover descriptions -----------------------------------------------------------


@dataclass(frozen=True)
class CoverSpec:
    kind: CoverKind
    field: GF
    f: Polynomial
    n: int
    source_f: Polynomial | None = None  # Artin-Schreier input before reduction
    witness: Polynomial | None = None  # h with source_f - f = h^p - h

    def __post_init__(self):
        F, f = self.field, self.f
        if f.field != F:
            raise FieldMismatchError(f"f is over {f.field}, cover is over {F}")
        if self.kind is CoverKind.ARTIN_SCHREIER:
            if self.n != F.p:
                raise ValueError(f"an Artin-Schreier cover has degree p = {F.p}, got n = {self.n}")
            if f.degree < 1 or int(f.degree) % F.p == 0:
                raise DegenerateCoverError(f"f = {f} is not reduced: degree must be prime to p")
            if any(c and e % F.p == 0 for e, c in enumerate(f.coeffs) if e > 0):
                raise DegenerateCoverError(f"f = {f} is not reduced")
        else:
            n, m = self.n, f.degree
            if n < 1 or math.gcd(n, F.p) != 1:
                raise ValueError(f"Kummer degree n = {n} must be prime to p = {F.p}")
            if (F.q - 1) % n:
                raise ValueError(f"GF({F.q}) lacks primitive {n}-th roots of unity")
            if not f.is_squarefree():
                raise DegenerateCoverError(f"f = {f} is not squarefree over GF({F.q})")
            if math.gcd(n, int(m)) != 1:
                raise DegenerateCoverError(
                    f"gcd(n, deg f) = gcd({n}, {m}) != 1: infinity would not be totally ramified"
                )

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def deg_f(self) -> int:
        return int(self.f.degree)

    @classmethod
    def artin_schreier(cls, p: int, f: Sequence[int] | Polynomial, m: int = 1) -> "CoverSpec":
        F = f.field if isinstance(f, Polynomial) else GF(p, m)
        source = f if isinstance(f, Polynomial) else Polynomial(F, f)
        reduced, h = as_reduce(source, p)
        return cls(CoverKind.ARTIN_SCHREIER, F, reduced, p, source, h)

    @classmethod
    def kummer(cls, n: int, p: int, f: Sequence[int] | Polynomial, m: int | None = None) -> "CoverSpec":
        """A Kummer cover over GF(p^m); by default m is the smallest extension
        degree containing the n-th roots of unity.  Integer coefficients are
        element codes of that field."""
        if isinstance(f, Polynomial):
            return cls(CoverKind.KUMMER, f.field, f, n)
        F = GF(p, m if m is not None else smallest_extension_for_roots(p, n))
        return cls(CoverKind.KUMMER, F, Polynomial(F, f), n)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CoverSpec":
        try:
            kind = CoverKind(data["kind"])
            p = int(data["p"])
            coeffs = [int(c) for c in data["f"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed cover spec: {exc!r}") from exc
        m = data.get("m")
        if kind is CoverKind.ARTIN_SCHREIER:
            spec = cls.artin_schreier(p, coeffs, int(m) if m is not None else 1)
            if "n" in data and int(data["n"]) != p:
                raise ValueError(f"an Artin-Schreier cover has degree p = {p}, got n = {data['n']}")
            return spec
        if "n" not in data:
            raise ValueError("malformed cover spec: Kummer cover needs n")
        return cls.kummer(int(data["n"]), p, coeffs, int(m) if m is not None else None)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "kind": self.kind.value,
            "p": self.p,
            "m": self.field.m,
            "n": self.n,
            "f": self.f.to_codes(),
        }
        if self.source_f is not None and self.source_f != self.f:
            out["f_input"] = self.source_f.to_codes()
            out["witness_h"] = self.witness.to_codes()
        return out

    def cyclic_data(self) -> CyclicPData:
        if self.kind is not CoverKind.ARTIN_SCHREIER:
            raise ValueError("jump data is defined for Artin-Schreier covers only")
        return as_jump(self.f)

    def profile(self) -> RamificationProfile:
        """Branch data of the cover over the whole algebraic closure."""
        if self.kind is CoverKind.ARTIN_SCHREIER:
            return self.cyclic_data().profile()
        n = self.n
        branch = () if n == 1 else (BranchPoint(n, n - 1),) * (self.deg_f + 1)
        return RamificationProfile(n, self.p, 0, branch)

    def closed_form_genus(self) -> int:
        if self.kind is CoverKind.ARTIN_SCHREIER:
            return as_genus(self.p, self.cyclic_data())
        return (self.n - 1) * (self.deg_f - 1) // 2

    def __str__(self) -> str:
        if self.kind is CoverKind.ARTIN_SCHREIER:
            return f"y^{self.p} - y = {self.f} over GF({self.q})"
        return f"y^{self.n} = {self.f} over GF({self.q})"


def default_kummer_f(F: GF, m: int) -> Polynomial:
    """First squarefree monic polynomial of degree m, by coefficient code."""
    for code in range(F.q**m):
        low = [(code // F.q**i) % F.q for i in range(m)]
        f = Polynomial(F, low + [1])
        if f.is_squarefree():
            return f
    raise ValueError(f"no squarefree polynomial of degree {m} over {F}")


# -- places and valuations --------------------------------------------------------


@dataclass(frozen=True)
class Place:
    """A rational place of the cover.

    ``kind`` is ``"infinity"`` (the unique place above x = infinity),
    ``"root"`` (the place above a root ``a`` of f on a Kummer cover) or
    ``"finite"`` (an unramified place above x = a with y-coordinate ``y``).
    """

    kind: str
    a: FieldElement | None = None
    y: FieldElement | None = None

    def __str__(self) -> str:
        if self.kind == "infinity":
            return "inf"
        if self.kind == "root":
            return f"(x={self.a!r}, y=0)"
        return f"(x={self.a!r}, y={self.y!r})"


INFINITY = Place("infinity")


def place_orders(spec: CoverSpec, place: Place) -> tuple[int, int, int]:
    """Orders of (x, y, dx) at a place."""
    F = spec.field
    if spec.kind is CoverKind.ARTIN_SCHREIER:
        p, N = spec.p, spec.deg_f
        if place.kind == "infinity":
            return -p, -N, -2 * p + different_exponent_cyclic_p(N, p)
        if place.kind == "finite":
            a, c = place.a, place.y
            if c**p - c != spec.f(a):
                raise ValueError(f"{place} is not on {spec}")
            # y (y^(p-1) - 1) = f(x) and the second factor is a unit at y = 0
            ord_y = 0 if c else spec.f.valuation_at(a)
            return (1 if not a else 0), ord_y, 0
        raise ValueError(f"unknown place kind {place.kind!r} for an Artin-Schreier cover")
    n, m = spec.n, spec.deg_f
    if place.kind == "infinity":
        return -n, -m, -n - 1
    if place.kind == "root":
        if spec.f(place.a):
            raise ValueError(f"{place.a!r} is not a root of {spec.f}")
        return (n if not place.a else 0), 1, n - 1
    if place.kind == "finite":
        if not spec.f(place.a):
            raise ValueError(f"x = {place.a!r} is a branch point of {spec}")
        if place.y is not None and place.y**n != spec.f(place.a):
            raise ValueError(f"{place} is not on {spec}")
        return (1 if not place.a else 0), 0, 0
    raise ValueError(f"unknown place kind {place.kind!r} for a Kummer cover")


def y_exponent(spec: CoverSpec, j: int) -> int:
    return j if spec.kind is CoverKind.ARTIN_SCHREIER else -j


def monomial_valuation(spec: CoverSpec, i: int, j: int, place: Place | str) -> int:
    """Order at a place of x^i y^j dx (Artin-Schreier) or x^i y^-j dx (Kummer)."""
    if isinstance(place, str):
        if place != "infinity":
            raise ValueError(f"unknown place {place!r}")
        place = INFINITY
    ox, oy, odx = place_orders(spec, place)
    return i * ox + y_exponent(spec, j) * oy + odx


def rational_places(spec: CoverSpec) -> list[Place]:
    """Infinity and every rational finite place, found by exhaustive search."""
    F = spec.field
    places = [INFINITY]
    if spec.kind is CoverKind.ARTIN_SCHREIER:
        p = spec.p
        for a in F:
            fa = spec.f(a)
            places.extend(Place("finite", a, c) for c in F if c**p - c == fa)
    else:
        for a in F:
            fa = spec.f(a)
            if not fa:
                places.append(Place("root", a))
            else:
                places.extend(Place("finite", a, c) for c in F if c**spec.n == fa)
    return places


# -- bases of holomorphic differentials -----------------------------------------


@dataclass(frozen=True)
class DifferentialBasis:
    """Monomial differentials, ordered lexicographically by (j, i)."""

    spec: CoverSpec
    monomials: tuple[tuple[int, int], ...]

    @property
    def genus(self) -> int:
        return len(self.monomials)

    def index(self, i: int, j: int) -> int:
        return self.monomials.index((i, j))

    def labels(self) -> list[str]:
        return [monomial_label(self.spec, i, j) for i, j in self.monomials]


def monomial_label(spec: CoverSpec, i: int, j: int) -> str:
    xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
    e = y_exponent(spec, j)
    ys = "" if e == 0 else ("y" if e == 1 else f"y^{e}")
    return " ".join(s for s in (xs, ys) if s) + (" dx" if xs or ys else "dx")


def _holomorphic(spec: CoverSpec, i: int, j: int, places: Iterable[Place]) -> bool:
    return all(monomial_valuation(spec, i, j, P) >= 0 for P in places)


def _search_basis(spec: CoverSpec, i_max: int, j_range: range) -> DifferentialBasis:
    places = rational_places(spec)
    found = sorted(
        ((i, j) for j in j_range for i in range(i_max + 1) if _holomorphic(spec, i, j, places)),
        key=lambda ij: (ij[1], ij[0]),
    )
    if any(i == i_max for i, _ in found) and i_max > 0:
        raise DefectError(f"search box i <= {i_max} too small for {spec}")
    basis = DifferentialBasis(spec, tuple(found))
    genus = spec.closed_form_genus()
    if basis.genus != genus:
        raise DefectError(f"{spec}: found {basis.genus} holomorphic monomials, genus is {genus}")
    return basis


def as_basis(spec: CoverSpec) -> DifferentialBasis:
    if spec.kind is not CoverKind.ARTIN_SCHREIER:
        raise ValueError("as_basis needs an Artin-Schreier cover")
    p, N = spec.p, spec.deg_f
    return _search_basis(spec, (p - 1) * (N - 1), range(p - 1))


def kummer_basis(spec: CoverSpec) -> DifferentialBasis:
    if spec.kind is not CoverKind.KUMMER:
        raise ValueError("kummer_basis needs a Kummer cover")
    return _search_basis(spec, spec.deg_f, range(spec.n))


def differential_basis(spec: CoverSpec) -> DifferentialBasis:
    return as_basis(spec) if spec.kind is CoverKind.ARTIN_SCHREIER else kummer_basis(spec)


# -- the Galois action --------------------------------------------------------------


@dataclass(frozen=True)
class ActionMatrix:
    """Matrix of the generator on a basis; column k is the image of basis
    element k."""

    matrix: Matrix
    order: int  # order of the generator in G

    @property
    def size(self) -> int:
        return self.matrix.nrows

    def is_unipotent(self) -> bool:
        g = self.size
        return (self.matrix - Matrix.identity(self.matrix.field, g)) ** g == Matrix(
            self.matrix.field, [[0] * g for _ in range(g)], ncols=g
        )


def as_action_matrix(basis: DifferentialBasis) -> ActionMatrix:
    """Matrix of y -> y + 1 on x^i y^j dx; the image is sum_b C(j, b) x^i y^b dx."""
    spec = basis.spec
    if spec.kind is not CoverKind.ARTIN_SCHREIER:
        raise ValueError("as_action_matrix needs an Artin-Schreier basis")
    F, p, g = spec.field, spec.p, basis.genus
    pos = {ij: k for k, ij in enumerate(basis.monomials)}
    cols = [[0] * g for _ in range(g)]
    for k, (i, j) in enumerate(basis.monomials):
        for b in range(j + 1):
            if (i, b) not in pos:
                raise DefectError(f"image monomial x^{i} y^{b} dx is not in the basis")
            cols[k][pos[(i, b)]] = math.comb(j, b) % p
    rows = [[cols[c][r] for c in range(g)] for r in range(g)]
    return ActionMatrix(Matrix(F, rows, ncols=g), p)


def kummer_action_matrix(basis: DifferentialBasis, zeta: FieldElement | None = None) -> ActionMatrix:
    """Diagonal matrix of y -> zeta y on x^i y^-j dx, with entries zeta^-j."""
    spec = basis.spec
    if spec.kind is not CoverKind.KUMMER:
        raise ValueError("kummer_action_matrix needs a Kummer basis")
    F, n, g = spec.field, spec.n, basis.genus
    if zeta is None:
        zeta = F.primitive_root_of_unity(n)
    F._check(zeta)
    if zeta.multiplicative_order() != n:
        raise ValueError(f"zeta = {zeta!r} has order {zeta.multiplicative_order()}, expected {n}")
    rows = [[zeta ** (-j) if r == c else F.zero for c in range(g)] for r, (_, j) in enumerate(basis.monomials)]
    return ActionMatrix(Matrix(F, rows, ncols=g), n)


def action_matrix(basis: DifferentialBasis) -> ActionMatrix:
    if basis.spec.kind is CoverKind.ARTIN_SCHREIER:
        return as_action_matrix(basis)
    return kummer_action_matrix(basis)


def fixed_subspace(M: ActionMatrix | Matrix) -> list[tuple[FieldElement, ...]]:
    """Basis of the vectors fixed by M, i.e. the kernel of M - I."""
    A = M.matrix if isinstance(M, ActionMatrix) else M
    return (A - Matrix.identity(A.field, A.nrows)).nullspace()


def fixed_subspace_dim(M: ActionMatrix | Matrix) -> int:
    A = M.matrix if isinstance(M, ActionMatrix) else M
    return A.ncols - (A - Matrix.identity(A.field, A.nrows)).rank()


def action_kernel_order(M: ActionMatrix | Matrix, ord_sigma: int | None = None) -> int:
    """Size of the kernel of <sigma> -> GL(V): the number of t in
    0..ord-1 with M^t = I.  The action is faithful iff this is 1."""
    A = M.matrix if isinstance(M, ActionMatrix) else M
    if ord_sigma is None:
        if not isinstance(M, ActionMatrix):
            raise ValueError("ord_sigma is required for a bare matrix")
        ord_sigma = M.order
    power = Matrix.identity(A.field, A.nrows)
    count = 0
    for _ in range(ord_sigma):
        if power.is_identity():
            count += 1
        power = power @ A
    if not power.is_identity():
        raise DefectError(f"M^{ord_sigma} != I: not a representation of Z/{ord_sigma}")
    return count


# -- full analysis ------------------------------------------------------------------


@dataclass
class CoverAnalysis:
    spec: CoverSpec
    basis: DifferentialBasis
    action: ActionMatrix
    fixed_dim: int
    kernel_order: int
    profile: RamificationProfile = field(init=False)
    hurwitz_genus: int = field(init=False)

    def __post_init__(self):
        self.profile = self.spec.profile()
        self.hurwitz_genus = hurwitz_genus(self.profile.n, self.profile.g_Y, self.profile.deg_R)


def analyze(spec: CoverSpec) -> CoverAnalysis:
    basis = differential_basis(spec)
    action = action_matrix(basis)
    return CoverAnalysis(spec, basis, action, fixed_subspace_dim(action), action_kernel_order(action))
