"""Exact linear algebra over arbitrary-precision rationals.

All values are `fractions.Fraction`; no floating point appears anywhere.
Rank and kernel computations run fraction-free (Bareiss) on integer-scaled
rows to control coefficient growth. Every function is pure and
deterministic: rerunning on equal inputs gives bit-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class NotNilpotentError(ValueError):
    """A matrix required to be nilpotent is not."""


def parse_rational(text: str) -> Fraction:
    """Parse the canonical form "p/q" (or "p") into a Fraction."""
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {type(text).__name__}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {text!r}") from exc


def rational_str(value: Fraction) -> str:
    """Canonical serialization: "p/q", or just "p" when the denominator is 1."""
    return str(Fraction(value))


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatMatrix:
    """Immutable dense matrix of rationals, row-major entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        ents = tuple(Fraction(x) for x in self.entries)
        if len(ents) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(ents)}"
            )
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows_data: Sequence[Sequence]) -> "RatMatrix":
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if nrows else 0
        flat = []
        for row in rows_data:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            flat.extend(Fraction(x) for x in row)
        return cls(nrows, ncols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            return g_to_matrix(g_mul(self.row_lists(), other.row_lists()))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix(self.rows, self.cols, tuple(a * c for a in self.entries))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.at(i, i) for i in range(self.rows)), ZERO)

    def power(self, k: int) -> "RatMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = RatMatrix.identity(self.rows)
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return all(not a for a in self.entries)

    def is_nilpotent(self) -> bool:
        """True iff some power (at most the size) vanishes."""
        if self.rows != self.cols:
            return False
        p = self
        for _ in range(self.rows):
            if p.is_zero():
                return True
            p = p * self
        return p.is_zero()

    def flatten(self) -> tuple:
        return self.entries

    def _check_same_shape(self, other: "RatMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return a * b - b * a


def matrix_to_json(m: RatMatrix) -> list:
    return [[rational_str(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def matrix_from_json(data) -> RatMatrix:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix JSON must be a nonempty array of arrays")
    rows = [[parse_rational(x) for x in row] for row in data]
    return RatMatrix.from_rows(rows)


# ---------------------------------------------------------------------------
# Generic row-list arithmetic
#
# These helpers operate on plain lists of lists and only assume ring
# arithmetic of the entries, so the same code path evaluates matrices of
# Fractions and of DualNumbers. Zero entries are skipped in products, which
# matters for the sparse basis matrices used throughout.
# ---------------------------------------------------------------------------


def g_zero(rows: int, cols: int) -> list:
    return [[ZERO] * cols for _ in range(rows)]


def g_identity(n: int) -> list:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def g_add(a: list, b: list) -> list:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def g_sub(a: list, b: list) -> list:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def g_neg(a: list) -> list:
    return [[-x for x in row] for row in a]


def g_scale(a: list, s) -> list:
    return [[s * x for x in row] for row in a]


def g_div_int(a: list, k: int) -> list:
    return [[x / k for x in row] for row in a]


def g_mul(a: list, b: list) -> list:
    n = len(a)
    cols = len(b[0])
    out = [[ZERO] * cols for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for k, aik in enumerate(arow):
            if not aik:
                continue
            brow = b[k]
            for j, bkj in enumerate(brow):
                if bkj:
                    orow[j] = orow[j] + aik * bkj
    return out


def g_lincomb(coeffs: Sequence, mats: Sequence[list], rows: int, cols: int) -> list:
    out = [[ZERO] * cols for _ in range(rows)]
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i in range(rows):
            orow = out[i]
            mrow = m[i]
            for j in range(cols):
                v = mrow[j]
                if v:
                    orow[j] = orow[j] + c * v
    return out


def g_is_zero(a: list) -> bool:
    return all(not x for row in a for x in row)


def g_to_matrix(a: list) -> RatMatrix:
    return RatMatrix.from_rows(a)


# ---------------------------------------------------------------------------
# Fraction-free elimination (Bareiss)
# ---------------------------------------------------------------------------


def _int_rows(rows: Sequence[Sequence[Fraction]]) -> tuple:
    """Scale each row by the lcm of its denominators; return rows and factors."""
    out = []
    factors = []
    for row in rows:
        scale = 1
        for x in row:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
        out.append([int(x * scale) for x in row])
        factors.append(scale)
    return out, factors


def _bareiss(rows: list) -> tuple:
    """In-place fraction-free echelon form.

    Returns (rows, pivot_columns, swap_count). Entries stay integral; each
    elimination step divides exactly by the previous pivot.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    piv_cols = []
    r = 0
    prev = 1
    swaps = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
            swaps += 1
        piv = rows[r][c]
        for i in range(r + 1, m):
            ric = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c, n):
                row_i[j] = (row_i[j] * piv - ric * row_r[j]) // prev
        prev = piv
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    return rows, piv_cols, swaps


def rank(m: RatMatrix) -> int:
    """Rank over the rationals by fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows, _ = _int_rows(m.row_lists())
    _, piv, _ = _bareiss(rows)
    return len(piv)


def primitive_integer_vector(vec: Sequence[Fraction]) -> tuple:
    """Scale a nonzero rational vector to coprime integers, leading entry positive."""
    scale = 1
    for x in vec:
        scale = scale * x.denominator // math.gcd(scale, x.denominator)
    ints = [int(x * scale) for x in vec]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(Fraction(v) for v in ints)


def kernel_basis(m: RatMatrix) -> list:
    """Basis of the right kernel of ``m``.

    One vector per free column, normalized to primitive integer form with
    positive leading entry. Deterministic; count equals cols - rank.
    """
    ncols = m.cols
    if m.rows == 0:
        return [tuple(ONE if j == f else ZERO for j in range(ncols)) for f in range(ncols)]
    rows, _ = _int_rows(m.row_lists())
    ech, piv, _ = _bareiss(rows)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [ZERO] * ncols
        x[f] = ONE
        for idx in range(len(piv) - 1, -1, -1):
            c = piv[idx]
            row = ech[idx]
            s = ZERO
            for j in range(c + 1, ncols):
                if x[j]:
                    s += row[j] * x[j]
            x[c] = Fraction(-s, row[c])
        basis.append(primitive_integer_vector(x))
    return basis


def det(m: RatMatrix) -> Fraction:
    """Exact determinant (Bareiss). det of the empty 0x0 matrix is 1."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    rows, factors = _int_rows(m.row_lists())
    ech, piv, swaps = _bareiss(rows)
    if len(piv) < n:
        return ZERO
    value = Fraction(ech[n - 1][n - 1])
    if swaps % 2:
        value = -value
    for f in factors:
        value /= f
    return value


def solve_linear(m: RatMatrix, rhs: Sequence[Fraction]):
    """One solution of m x = rhs, or None if inconsistent.

    Free variables are set to zero, so the result is the deterministic
    minimal-support solution of the row-reduced system.
    """
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length mismatch")
    ncols = m.cols
    aug = [list(row) + [Fraction(b)] for row, b in zip(m.row_lists(), rhs)]
    rows, _ = _int_rows(aug)
    ech, piv, _ = _bareiss(rows)
    if piv and piv[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for idx in range(len(piv) - 1, -1, -1):
        c = piv[idx]
        row = ech[idx]
        s = Fraction(row[ncols])
        for j in range(c + 1, ncols):
            if x[j]:
                s -= row[j] * x[j]
        x[c] = s / row[c]
    return tuple(x)


def mat_vec(m: RatMatrix, v: Sequence[Fraction]) -> tuple:
    if len(v) != m.cols:
        raise ValueError("vector length mismatch")
    out = []
    for i in range(m.rows):
        s = ZERO
        for j, x in enumerate(v):
            if x:
                s += m.at(i, j) * x
        out.append(s)
    return tuple(out)


def vstack(mats: Sequence[RatMatrix]) -> RatMatrix:
    if not mats:
        raise ValueError("nothing to stack")
    cols = mats[0].cols
    rows = []
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch in stack")
        rows.extend(m.row_lists())
    return RatMatrix.from_rows(rows)


class VectorSpan:
    """Span of independent row vectors, with exact coordinate solving."""

    def __init__(self, vectors: Sequence[Sequence[Fraction]], length: int | None = None):
        vectors = [list(v) for v in vectors]
        if vectors:
            length = len(vectors[0])
        elif length is None:
            raise ValueError("empty span needs an explicit ambient length")
        self.length = length
        m = len(vectors)
        rref = [list(v) for v in vectors]
        transform = [[ONE if i == j else ZERO for j in range(m)] for i in range(m)]
        pivots = []
        r = 0
        for c in range(length):
            pr = None
            for i in range(r, m):
                if rref[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            rref[r], rref[pr] = rref[pr], rref[r]
            transform[r], transform[pr] = transform[pr], transform[r]
            inv = ONE / rref[r][c]
            rref[r] = [x * inv for x in rref[r]]
            transform[r] = [x * inv for x in transform[r]]
            for i in range(m):
                if i != r and rref[i][c]:
                    f = rref[i][c]
                    rref[i] = [x - f * y for x, y in zip(rref[i], rref[r])]
                    transform[i] = [x - f * y for x, y in zip(transform[i], transform[r])]
            pivots.append(c)
            r += 1
            if r == m:
                break
        if r < m:
            raise ValueError("vectors are linearly dependent")
        self._rref = rref
        self._transform = transform
        self._pivots = pivots

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def coords_of(self, vector: Sequence[Fraction]):
        """Coordinates in the original vectors, or None if outside the span."""
        if len(vector) != self.length:
            raise ValueError("vector length mismatch")
        alphas = [vector[p] for p in self._pivots]
        residual = list(vector)
        for a, row in zip(alphas, self._rref):
            if a:
                residual = [x - a * y for x, y in zip(residual, row)]
        if any(residual):
            return None
        m = len(self._rref)
        coords = [ZERO] * m
        for i, a in enumerate(alphas):
            if a:
                trow = self._transform[i]
                for j in range(m):
                    if trow[j]:
                        coords[j] += a * trow[j]
        return tuple(coords)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return self.coords_of(vector) is not None


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial over the rationals, lowest-degree coefficient first.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    coefficients: tuple

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((Fraction(c),))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(tuple(a * c for a in self.coefficients))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(ONE / self.leading)

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def __call__(self, x):
        """Horner evaluation; works for any ring scalar (Fraction, DualNumber)."""
        result = ZERO
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def evaluate_matrix(self, m: RatMatrix) -> RatMatrix:
        if m.rows != m.cols:
            raise ValueError("polynomial of a non-square matrix")
        n = m.rows
        result = RatMatrix.zeros(n, n)
        ident = RatMatrix.identity(n)
        for c in reversed(self.coefficients):
            result = result * m + ident.scale(c)
        return result


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coefficients)
    blead = b.leading
    db = b.degree
    quot = [ZERO] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and any(rem):
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) - 1 < db:
            break
        shift = len(rem) - 1 - db
        factor = rem[-1] / blead
        quot[shift] = factor
        for i, c in enumerate(b.coefficients):
            rem[shift + i] -= factor * c
        rem.pop()
    return Polynomial(tuple(quot)), Polynomial(tuple(rem))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.monic()


def poly_extended_gcd(a: Polynomial, b: Polynomial) -> tuple:
    """(g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = a, b
    u0, u1 = Polynomial.constant(1), Polynomial.zero()
    v0, v1 = Polynomial.zero(), Polynomial.constant(1)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    lead = r0.leading
    inv = ONE / lead
    return r0.scale(inv), u0.scale(inv), v0.scale(inv)


def squarefree_part(p: Polynomial) -> Polynomial:
    """p / gcd(p, p'), monic: same roots as p, each simple."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.is_zero() or g.degree == 0:
        return p.monic()
    q, r = poly_divmod(p, g)
    if not r.is_zero():
        raise ArithmeticError("gcd does not divide its polynomial")
    return q.monic()


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    # Deterministic Miller-Rabin for n < 3.3e24 with this base set.
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _factorize(n: int) -> dict:
    factors: dict = {}
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors


def _divisors(n: int) -> list:
    n = abs(n)
    if n == 0:
        raise ValueError("zero has no divisor list")
    if n < 10 ** 6:
        small = []
        large = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                small.append(d)
                if d != n // d:
                    large.append(n // d)
            d += 1
        return small + large[::-1]
    divs = [1]
    for p, e in _factorize(n).items():
        pk = 1
        block = list(divs)
        for _ in range(e):
            pk *= p
            divs.extend(d * pk for d in block)
    return sorted(divs)


def integer_roots(p: Polynomial) -> list:
    """All integer roots of ``p``, in increasing order."""
    if p.is_zero():
        raise ValueError("every integer is a root of the zero polynomial")
    coeffs = list(p.coefficients)
    roots = set()
    shift = 0
    while not coeffs[0]:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.add(0)
    stripped = Polynomial(tuple(coeffs))
    if stripped.degree >= 1:
        scale = 1
        for c in stripped.coefficients:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        const = int(stripped.coefficients[0] * scale)
        for d in _divisors(const):
            for r in (d, -d):
                if stripped(Fraction(r)) == 0:
                    roots.add(r)
    return sorted(roots)


def char_poly(m: RatMatrix) -> Polynomial:
    """Characteristic polynomial, monic, via the Faddeev-LeVerrier recursion."""
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return Polynomial.constant(1)
    ident = RatMatrix.identity(n)
    cs = []
    ak = m
    c = -ak.trace()
    cs.append(c)
    for k in range(2, n + 1):
        ak = m * (ak + ident.scale(c))
        c = Fraction(-ak.trace(), k)
        cs.append(c)
    coeffs = [cs[n - 1 - i] for i in range(n)] + [ONE]
    return Polynomial(tuple(coeffs))


def is_semisimple_matrix(m: RatMatrix) -> bool:
    """True iff the minimal polynomial is squarefree (diagonalizable over the closure)."""
    q = squarefree_part(char_poly(m))
    return q.evaluate_matrix(m).is_zero()


# ---------------------------------------------------------------------------
# Dual numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualNumber:
    """a + b*eps with eps^2 = 0; exact forward derivatives of polynomial maps."""

    value: Fraction
    epsilon: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))

    @staticmethod
    def _coerce(other):
        if isinstance(other, DualNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return DualNumber(Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.value + o.value, self.epsilon + o.epsilon)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.value - o.value, self.epsilon - o.epsilon)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(o.value - self.value, o.epsilon - self.epsilon)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.value * o.value,
                          self.value * o.epsilon + self.epsilon * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.value:
            raise ZeroDivisionError("dual division by a pure-epsilon number")
        inv = ONE / o.value
        return DualNumber(self.value * inv,
                          (self.epsilon * o.value - self.value * o.epsilon) * inv * inv)

    def __neg__(self):
        return DualNumber(-self.value, -self.epsilon)

    def __bool__(self):
        return bool(self.value) or bool(self.epsilon)
