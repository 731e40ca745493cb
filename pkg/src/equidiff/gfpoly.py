"""Exact arithmetic over finite fields GF(p^m), univariate polynomials and
dense matrices over them.

Elements of GF(p^m) are residues of polynomials over GF(p) modulo a fixed
monic irreducible polynomial of degree m.  An element is encoded by the
integer ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}`` of its digit vector, so
the encoding is canonical.  The modulus is the first irreducible monic
polynomial of degree m in the order of these integer codes, which makes
representations reproducible.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Iterator, Sequence, Union

from .errors import FieldMismatchError

NEG_INF = -math.inf  # degree of the zero polynomial


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- integer coefficient lists over GF(p), little-endian ----------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return a


def _gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _mod(a, b, p)
    return a


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test for a monic f over GF(p)."""
    m = len(f) - 1
    x = [0, 1]
    h = x
    for _ in range(m // 2):
        # h <- h^p mod f
        acc = [1]
        for _ in range(p):
            acc = _mod(_mul(acc, h, p), f, p)
        h = acc
        if len(_gcd(f, _sub(h, x, p), p)) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def find_modulus(p: int, m: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of degree m over GF(p).

    Candidates are scanned by the integer code of their lower coefficients.
    """
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        f = low + [1]
        if low[0] != 0 and _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("an irreducible polynomial exists in every degree")


# -- fields ---------------------------------------------------------------------


class GF:
    """The finite field with p^m elements.

    Calling the field on an integer code returns the element with that digit
    vector; ``GF(3, 2)(3)`` is the class of ``u``.
    """

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be positive, got {m}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = find_modulus(p, m)
        self._exp: list[int] = []
        self._log: list[int] = []
        if m > 1:
            self._build_tables()

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _mod(_mul(self._digits(a), self._digits(b), self.p), self.modulus, self.p)
        return self._encode(prod)

    def _digits(self, v: int) -> list[int]:
        p = self.p
        return [(v // p**i) % p for i in range(self.m)]

    def _encode(self, digits: Sequence[int]) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def _build_tables(self) -> None:
        q = self.q
        factors = prime_factors(q - 1)

        def power(g: int, e: int) -> int:
            acc, base = 1, g
            while e:
                if e & 1:
                    acc = self._slow_mul(acc, base)
                base = self._slow_mul(base, base)
                e >>= 1
            return acc

        gen = next(
            g for g in range(2, q) if all(power(g, (q - 1) // ell) != 1 for ell in factors)
        )
        self._exp = [1] * (q - 1)
        self._log = [0] * q
        for k in range(1, q - 1):
            self._exp[k] = self._slow_mul(self._exp[k - 1], gen)
        for k, v in enumerate(self._exp):
            self._log[v] = k

    # raw integer-code arithmetic, used by FieldElement

    def _add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p, out, scale = self.p, 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a, b, scale = a // p, b // p, scale * p
        return out

    def _neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        p, out, scale = self.p, 0, 1
        while a:
            out += (-(a % p) % p) * scale
            a, scale = a // p, scale * p
        return out

    def _mul_codes(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.q})")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    # public surface

    def __call__(self, value: Union[int, "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if self.m == 1:
            return FieldElement(self, value % self.p)
        if not 0 <= value < self.q:
            raise ValueError(f"element code {value} out of range for GF({self.q})")
        return FieldElement(self, value)

    def _check(self, a: "FieldElement") -> None:
        if a.field is not self and a.field != self:
            raise FieldMismatchError(f"element of {a.field} used in {self}")

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __iter__(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.q))

    def __len__(self) -> int:
        return self.q

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def frobenius_root(self, c: "FieldElement") -> "FieldElement":
        """The unique d with d^p = c, namely c^(p^(m-1))."""
        self._check(c)
        return c ** (self.p ** (self.m - 1))

    def primitive_root_of_unity(self, n: int) -> "FieldElement":
        """An element of exact multiplicative order n.

        Deterministic: the first generator of the unit group (by code) raised
        to the power (q-1)/n.
        """
        if n < 1 or (self.q - 1) % n:
            raise ValueError(
                f"GF({self.q}) has no primitive {n}-th root of unity; "
                f"enlarge m until {n} divides p^m - 1"
            )
        return self.generator ** ((self.q - 1) // n)

    @functools.cached_property
    def generator(self) -> "FieldElement":
        if self.q == 2:
            return self.one
        factors = prime_factors(self.q - 1)
        for v in range(2, self.q):
            g = FieldElement(self, v)
            if all(g ** ((self.q - 1) // ell) != self.one for ell in factors):
                return g
        raise AssertionError("the unit group of a finite field is cyclic")


def smallest_extension_for_roots(p: int, n: int) -> int:
    """Smallest m with n | p^m - 1."""
    if n % p == 0:
        raise ValueError(f"no {n}-th roots of unity of order {n} in characteristic {p}")
    m = 1
    while (p**m - 1) % n:
        m += 1
    return m


class FieldElement:
    """An element of a GF instance.  Immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other: Union["FieldElement", int]) -> int:
        if isinstance(other, FieldElement):
            self.field._check(other)
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, self.field._neg(b)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul_codes(self.value, b))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul_codes(self.value, self.field._inv(b)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> "FieldElement":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        acc = self.field.one
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.value == other % self.field.p
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.value == other.value and (self.field is other.field or self.field == other.field)

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.value))

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("zero has no multiplicative order")
        n = self.field.q - 1
        order = n
        for ell in prime_factors(n):
            while order % ell == 0 and self ** (order // ell) == self.field.one:
                order //= ell
        return order

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        if self.field.m == 1:
            return str(self.value)
        terms = []
        for i, d in enumerate(self.digits):
            if d:
                mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
                terms.append(str(d) if not mono else (mono if d == 1 else f"{d}{mono}"))
        return " + ".join(reversed(terms)) if terms else "0"


# -- polynomials ---------------------------------------------------------------


class Polynomial:
    """Univariate polynomial over a GF instance, immutable.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are stripped.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[Union[int, FieldElement]] = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs: tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def x(cls, field: GF) -> "Polynomial":
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: GF, c: Union[int, FieldElement], k: int) -> "Polynomial":
        return cls(field, [field.zero] * k + [field(c)])

    @property
    def degree(self) -> Union[int, float]:
        """Degree; the zero polynomial has degree NEG_INF."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatchError(f"polynomial over {other.field} used with {self.field}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial(self.field, [self.field.one * other])
        return NotImplemented

    def __add__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(g.coeffs))
        return Polynomial(self.field, [self[i] + g[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return NotImplemented
        if self.is_zero() or g.is_zero():
            return Polynomial(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(g.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(g.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        acc = Polynomial(self.field, [1])
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        g = self._other(other)
        if g is NotImplemented:
            return NotImplemented
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = len(g.coeffs) - 1
        inv = g.leading.inverse()
        quot = [self.field.zero] * max(len(rem) - dg, 0)
        while len(rem) - 1 >= dg and rem:
            c = rem[-1] * inv
            shift = len(rem) - 1 - dg
            quot[shift] = c
            for i, b in enumerate(g.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
            while rem and not rem[-1]:
                rem.pop()
        return Polynomial(self.field, quot), Polynomial(self.field, rem)

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, a: Union[int, FieldElement]) -> FieldElement:
        a = self.field.one * a
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.leading.inverse()
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    def is_squarefree(self) -> bool:
        """No repeated factor over the algebraic closure (nonconstant f)."""
        if self.degree < 1:
            return False
        return poly_gcd(self, self.derivative()).degree == 0

    def roots(self) -> list[FieldElement]:
        """Roots in the base field, by exhaustive evaluation."""
        return [a for a in self.field if not self(a)]

    def valuation_at(self, a: FieldElement) -> int:
        """Multiplicity of a as a root; raises for the zero polynomial."""
        if self.is_zero():
            raise ValueError("the zero polynomial has infinite order everywhere")
        lin = Polynomial(self.field, [-a, 1])
        f, k = self, 0
        while True:
            q, r = divmod(f, lin)
            if not r.is_zero():
                return k
            f, k = q, k + 1

    def to_codes(self) -> list[int]:
        return [c.value for c in self.coeffs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            cs = repr(c)
            if self.field.m > 1 and " + " in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(cs)
            elif c == self.field.one:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms) if terms else "0"


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd (the zero polynomial if both are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


# -- matrices ---------------------------------------------------------------------


class Matrix:
    """Dense matrix over a GF instance, immutable."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: GF, rows: Iterable[Iterable[Union[int, FieldElement]]], ncols: int | None = None):
        self.field = field
        self.rows: tuple[tuple[FieldElement, ...], ...] = tuple(
            tuple(field(c) for c in row) for row in rows
        )
        self.ncols = ncols if ncols is not None else (len(self.rows[0]) if self.rows else 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, field: GF, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.rows[i][j]

    def _same(self, other: "Matrix") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"matrix over {other.field} used with {self.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            self.field,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-a for a in r] for r in self.rows], ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(other.rows[k]):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(self.field, out, ncols=other.ncols)

    def __pow__(self, e: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative matrix power")
        acc = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                acc = acc @ base
            base = base @ base
            e >>= 1
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.rows))

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            a == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, a in enumerate(r)
        )

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_diagonal(self) -> bool:
        return all(not a for i, r in enumerate(self.rows) for j, a in enumerate(r) if i != j)

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and pivot columns, by Gauss-Jordan."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        top = 0
        for col in range(self.ncols):
            piv = next((i for i in range(top, len(rows)) if rows[i][col]), None)
            if piv is None:
                continue
            rows[top], rows[piv] = rows[piv], rows[top]
            inv = rows[top][col].inverse()
            rows[top] = [a * inv for a in rows[top]]
            for i in range(len(rows)):
                if i != top and rows[i][col]:
                    c = rows[i][col]
                    rows[i] = [a - c * b for a, b in zip(rows[i], rows[top])]
            pivots.append(col)
            top += 1
            if top == len(rows):
                break
        return Matrix(self.field, rows, ncols=self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[tuple[FieldElement, ...]]:
        """Basis of {v : M v = 0}, one vector per free column."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [self.field.zero] * self.ncols
            v[fc] = self.field.one
            for r, pc in enumerate(pivots):
                v[pc] = -reduced.rows[r][fc]
            basis.append(tuple(v))
        return basis

    def apply(self, v: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def to_codes(self) -> list[list[int]]:
        return [[a.value for a in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.to_codes()})"
