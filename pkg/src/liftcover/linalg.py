"""Exact linear algebra over Z and Z_k on unbounded Python integers.

Everything here is exact: integer matrices never overflow, residue matrices
keep entries canonically reduced to {0, ..., k-1}, and characteristic
polynomials are computed fraction-free over Z[x].  Floating point appears only
in spectral-radius estimation, where every float result is cross-validated
against bisection on the exact characteristic polynomial.
"""

from __future__ import annotations

import math
import random as _random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    ConvergenceError,
    InternalCheckError,
    NotSymplecticError,
    ShapeError,
)


def _freeze_rows(entries, cast=int):
    rows = tuple(tuple(cast(x) for x in row) for row in entries)
    n = len(rows)
    if n == 0:
        raise ShapeError("matrix must have at least one row")
    if any(len(row) != n for row in rows):
        raise ShapeError("matrix must be square")
    return rows


@dataclass(frozen=True)
class SquareMatrix:
    """Immutable square matrix with unbounded integer entries."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _freeze_rows(self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @staticmethod
    def identity(n: int) -> "SquareMatrix":
        return SquareMatrix(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(tuple(zip(*self.entries)))

    def mod(self, k: int) -> "ResidueMatrix":
        return ResidueMatrix(self.entries, k)

    def __neg__(self) -> "SquareMatrix":
        return SquareMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        return mat_mul(self, other)

    def __pow__(self, m: int) -> "SquareMatrix":
        if m < 0:
            raise ValueError("negative power: invert explicitly first")
        result = SquareMatrix.identity(self.n)
        base = self
        while m:
            if m & 1:
                result = result @ base
            base = base @ base if m > 1 else base
            m >>= 1
        return result

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(
            " ".join(str(x).rjust(width) for x in row) for row in self.entries
        )


@dataclass(frozen=True)
class ResidueMatrix:
    """Immutable square matrix over Z_k, entries reduced to {0, ..., k-1}."""

    entries: tuple[tuple[int, ...], ...]
    modulus: int

    def __post_init__(self):
        k = self.modulus
        if not isinstance(k, int) or k < 1:
            raise ShapeError("modulus must be a positive integer")
        object.__setattr__(
            self, "entries", _freeze_rows(self.entries, cast=lambda x: int(x) % k)
        )

    @property
    def n(self) -> int:
        return len(self.entries)

    @staticmethod
    def identity(n: int, k: int) -> "ResidueMatrix":
        return ResidueMatrix(SquareMatrix.identity(n).entries, k)

    def transpose(self) -> "ResidueMatrix":
        return ResidueMatrix(tuple(zip(*self.entries)), self.modulus)

    def lift(self) -> SquareMatrix:
        """Entrywise lift to the integer matrix with entries in {0, ..., k-1}."""
        return SquareMatrix(self.entries)

    def __neg__(self) -> "ResidueMatrix":
        return ResidueMatrix(
            tuple(tuple(-x for x in row) for row in self.entries), self.modulus
        )

    def __matmul__(self, other: "ResidueMatrix") -> "ResidueMatrix":
        return mat_mul(self, other)

    def __pow__(self, m: int) -> "ResidueMatrix":
        if m < 0:
            raise ValueError("negative power: invert explicitly first")
        result = ResidueMatrix.identity(self.n, self.modulus)
        base = self
        while m:
            if m & 1:
                result = result @ base
            base = base @ base if m > 1 else base
            m >>= 1
        return result

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(
            " ".join(str(x).rjust(width) for x in row) for row in self.entries
        )


Matrix = Union[SquareMatrix, ResidueMatrix]


def _mul_rows(a, b, n):
    out = []
    for i in range(n):
        ai = a[i]
        row = [0] * n
        for l in range(n):
            x = ai[l]
            if x:
                bl = b[l]
                for j in range(n):
                    row[j] += x * bl[j]
        out.append(tuple(row))
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product of two integer or two residue matrices."""
    if isinstance(a, SquareMatrix) and isinstance(b, SquareMatrix):
        if a.n != b.n:
            raise ShapeError(f"dimension mismatch: {a.n} vs {b.n}")
        return SquareMatrix(_mul_rows(a.entries, b.entries, a.n))
    if isinstance(a, ResidueMatrix) and isinstance(b, ResidueMatrix):
        if a.n != b.n:
            raise ShapeError(f"dimension mismatch: {a.n} vs {b.n}")
        if a.modulus != b.modulus:
            raise ShapeError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
        return ResidueMatrix(_mul_rows(a.entries, b.entries, a.n), a.modulus)
    raise ShapeError("operands must be two SquareMatrix or two ResidueMatrix")


def mat_vec(a: Matrix, v):
    """Matrix times column vector, exact, reduced when a is a ResidueMatrix."""
    if len(v) != a.n:
        raise ShapeError(f"vector length {len(v)} does not match {a.n}")
    out = [sum(x * y for x, y in zip(row, v)) for row in a.entries]
    if isinstance(a, ResidueMatrix):
        return tuple(x % a.modulus for x in out)
    return tuple(out)


@dataclass(frozen=True)
class SymplecticForm:
    """The standard form on Z^{2g}: block diagonal copies of [[0,1],[-1,0]]."""

    g: int

    def __post_init__(self):
        if self.g < 1:
            raise ShapeError("genus must be at least 1")

    @property
    def n(self) -> int:
        return 2 * self.g

    @property
    def matrix(self) -> SquareMatrix:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i in range(self.g):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = -1
        return SquareMatrix(rows)


def _standard_j(n: int) -> SquareMatrix:
    if n % 2:
        raise ShapeError("symplectic form needs even dimension")
    return SymplecticForm(n // 2).matrix


def is_symplectic(a: Matrix) -> bool:
    """Whether a^T J a = J for the standard form (mod k for residue input)."""
    j = _standard_j(a.n)
    if isinstance(a, ResidueMatrix):
        j = j.mod(a.modulus)
    return mat_mul(mat_mul(a.transpose(), j), a) == j


def symplectic_inverse(a: Matrix) -> Matrix:
    """Inverse of a symplectic matrix via -J a^T J; verified exactly."""
    if not is_symplectic(a):
        raise NotSymplecticError("matrix does not preserve the standard form")
    j = _standard_j(a.n)
    if isinstance(a, ResidueMatrix):
        j = j.mod(a.modulus)
        ident = ResidueMatrix.identity(a.n, a.modulus)
    else:
        ident = SquareMatrix.identity(a.n)
    inv = mat_mul(mat_mul(-j, a.transpose()), j)
    if mat_mul(a, inv) != ident or mat_mul(inv, a) != ident:
        raise InternalCheckError("symplectic inverse failed verification")
    return inv


@dataclass(frozen=True)
class ExactPolynomial:
    """Polynomial with exact coefficients, lowest degree first.

    The zero polynomial is stored as an empty coefficient tuple.  Coefficients
    may be ints or Fractions; construction strips trailing zeros.
    """

    coefficients: tuple

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial(
            tuple(i * c for i, c in enumerate(self.coefficients) if i)
        )

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            term = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            if i > 0 and mag == 1:
                body = term
            elif i == 0:
                body = str(mag)
            else:
                body = f"{mag}*{term}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def _poly_sub(p, q):
    n = max(len(p), len(q))
    out = [0] * n
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_div_exact(p, d):
    """Exact division in Z[x]; the remainder must vanish."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    lead = d[-1]
    quot = [0] * max(len(p) - len(d) + 1, 0)
    for i in range(len(quot) - 1, -1, -1):
        top = rem[i + len(d) - 1]
        if top % lead:
            raise InternalCheckError("inexact polynomial division")
        c = top // lead
        quot[i] = c
        if c:
            for j, dj in enumerate(d):
                rem[i + j] -= c * dj
    if any(rem):
        raise InternalCheckError("nonzero remainder in exact polynomial division")
    while quot and quot[-1] == 0:
        quot.pop()
    return tuple(quot)


def char_poly(a: SquareMatrix) -> ExactPolynomial:
    """Characteristic polynomial det(xI - a), monic, by fraction-free elimination.

    Entries of xI - a live in Z[x]; Bareiss pivots are characteristic
    polynomials of leading principal submatrices, hence monic and nonzero, so
    no pivot search is needed and every division is exact.
    """
    if not isinstance(a, SquareMatrix):
        raise ShapeError("char_poly needs an integer SquareMatrix")
    n = a.n
    m = []
    for i in range(n):
        row = []
        for j in range(n):
            const = -a.entries[i][j]
            row.append((const, 1) if i == j else ((const,) if const else ()))
        m.append(row)
    prev = (1,)
    for r in range(n - 1):
        pivot = m[r][r]
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                num = _poly_sub(_poly_mul(m[i][j], pivot), _poly_mul(m[i][r], m[r][j]))
                m[i][j] = _poly_div_exact(num, prev)
            m[i][r] = ()
        prev = pivot
    result = ExactPolynomial(m[n - 1][n - 1])
    if not result.is_monic() or result.degree != n:
        raise InternalCheckError("characteristic polynomial is not monic")
    return result


def _poly_gcd_frac(p, q):
    """GCD of polynomials with Fraction coefficients, monic result."""
    p = [Fraction(c) for c in p]
    q = [Fraction(c) for c in q]
    while any(q):
        p, q = q, _poly_rem_frac(p, q)
    while p and p[-1] == 0:
        p.pop()
    if p:
        lead = p[-1]
        p = [c / lead for c in p]
    return p


def _poly_rem_frac(p, d):
    rem = [Fraction(c) for c in p]
    while rem and rem[-1] == 0:
        rem.pop()
    dd = [Fraction(c) for c in d]
    while dd and dd[-1] == 0:
        dd.pop()
    lead = dd[-1]
    while len(rem) >= len(dd):
        c = rem[-1] / lead
        off = len(rem) - len(dd)
        for j, dj in enumerate(dd):
            rem[off + j] -= c * dj
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
    return rem


def _eval_frac(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sturm_chain(coeffs):
    chain = [list(coeffs)]
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    if any(deriv):
        chain.append(deriv)
    while len(chain[-1]) > 1:
        rem = _poly_rem_frac(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _variations(chain, x):
    signs = []
    for poly in chain:
        v = _eval_frac(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _deflate_frac(coeffs, root):
    """Divide by (x - root) exactly; root must be an exact root."""
    out = []
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * root + c
        out.append(acc)
    if out[-1] != 0:
        raise InternalCheckError("deflation at a non-root")
    out.pop()
    return [Fraction(c) for c in reversed(out)]


def _largest_real_root_frac(coeffs, tol):
    """Largest real root of a squarefree Fraction polynomial, or None."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return None
    if len(coeffs) == 2:
        return -coeffs[0] / coeffs[1]
    lead = coeffs[-1]
    bound = Fraction(2) + max(abs(c / lead) for c in coeffs[:-1])
    chain = _sturm_chain(coeffs)
    lo, hi = -bound, bound
    if _variations(chain, lo) - _variations(chain, hi) == 0:
        return None
    tol = Fraction(tol)
    while hi - lo > tol * max(Fraction(1), abs(hi)):
        mid = (lo + hi) / 2
        if _eval_frac(coeffs, mid) == 0:
            rest = _deflate_frac(coeffs, mid)
            above = _largest_real_root_frac(rest, tol)
            if above is not None and above > mid:
                return above
            return mid
        if _variations(chain, mid) - _variations(chain, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def largest_real_root(p: ExactPolynomial, tol: float = 1e-12) -> float:
    """Largest real root of p by Sturm bisection with exact sign evaluation."""
    coeffs = list(p.coefficients)
    if len(coeffs) <= 1:
        raise ValueError("polynomial is constant; no roots")
    gcd = _poly_gcd_frac(coeffs, [i * c for i, c in enumerate(coeffs)][1:] or [0])
    if len(gcd) > 1:
        squarefree = _poly_quot_frac(coeffs, gcd)
    else:
        squarefree = [Fraction(c) for c in coeffs]
    root = _largest_real_root_frac(squarefree, Fraction(tol))
    if root is None:
        raise ValueError("polynomial has no real roots")
    return float(root)


def _poly_quot_frac(p, d):
    """Quotient of Fraction polynomials when the division is exact."""
    rem = [Fraction(c) for c in p]
    dd = [Fraction(c) for c in d]
    while dd and dd[-1] == 0:
        dd.pop()
    lead = dd[-1]
    quot = [Fraction(0)] * (len(rem) - len(dd) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(dd) - 1] / lead
        quot[i] = c
        if c:
            for j, dj in enumerate(dd):
                rem[i + j] -= c * dj
    if any(rem):
        raise InternalCheckError("inexact polynomial quotient")
    return quot


def spectral_radius(
    a: SquareMatrix, tol: float = 1e-9, max_iter: int = 10**6
) -> float:
    """Spectral radius by power iteration, cross-validated against bisection.

    The power-iteration estimate is checked against the largest-magnitude real
    root of the exact characteristic polynomial; disagreement beyond tolerance
    raises.  Callers are expected to pass matrices whose dominant eigenvalue is
    real and simple (Perron matrices and symplectic images of such).
    """
    estimate = _power_iteration(a, tol, max_iter)
    reference = _extreme_real_root_magnitude(char_poly(a))
    if abs(estimate - reference) > max(1e-8, 10.0 * tol) * max(1.0, reference):
        raise InternalCheckError(
            f"power iteration {estimate!r} disagrees with bisection {reference!r}"
        )
    return estimate


def _extreme_real_root_magnitude(p: ExactPolynomial) -> float:
    """Largest magnitude among the real roots of p."""
    best = None
    coeffs = list(p.coefficients)
    try:
        hi = largest_real_root(p)
        best = abs(hi)
    except ValueError:
        pass
    reflected = ExactPolynomial(
        tuple(c if i % 2 == 0 else -c for i, c in enumerate(coeffs))
    )
    try:
        lo = -largest_real_root(reflected)
        if best is None or abs(lo) > best:
            best = abs(lo)
    except ValueError:
        pass
    if best is None:
        raise ValueError("matrix has no real eigenvalues")
    return best


def _power_iteration(a: SquareMatrix, tol: float, max_iter: int) -> float:
    n = a.n
    try:
        rows = [[float(x) for x in row] for row in a.entries]
    except OverflowError as exc:
        raise ConvergenceError("entries too large for float iteration") from exc
    # seeded pseudorandom start: a structured start like all-ones can be
    # exactly orthogonal to the dominant eigenvector of an integer matrix
    rng = _random.Random(0x5EED)
    x = [rng.uniform(0.5, 1.5) for _ in range(n)]
    restarted = False
    for it in range(max_iter):
        y = [sum(r[j] * x[j] for j in range(n)) for r in rows]
        norm = max(abs(v) for v in y)
        if norm == 0.0:
            return 0.0
        if not math.isfinite(norm):
            raise ConvergenceError("power iteration overflowed")
        xx = sum(v * v for v in x)
        lam = sum(u * v for u, v in zip(x, y)) / xx
        residual = max(abs(v - lam * u) for u, v in zip(x, y))
        if residual <= tol * max(1.0, abs(lam)):
            return abs(lam)
        x = [v / norm for v in y]
        if not restarted and it == max_iter // 2:
            x = [rng.uniform(0.5, 1.5) for _ in range(n)]
            restarted = True
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def totient(k: int) -> int:
    """Euler's totient of k >= 1, by trial-division factorization."""
    if k < 1:
        raise ValueError("totient needs a positive integer")
    result = k
    for p in _prime_factors(k):
        result = result // p * (p - 1)
    return result


def _prime_factors(k: int):
    factors = []
    m = k
    p = 2
    while p * p <= m:
        if m % p == 0:
            factors.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append(m)
    return factors


def count_primitive(k: int, d: int) -> int:
    """Number of primitive vectors in (Z_k)^d: k^d * prod_{p | k} (1 - p^-d)."""
    if k < 1 or d < 1:
        raise ValueError("count_primitive needs positive modulus and dimension")
    result = k**d
    for p in _prime_factors(k):
        result = result // p**d * (p**d - 1)
    return result


def is_primitive_vector(v, k: int) -> bool:
    """Whether gcd of the entries together with k is 1."""
    if k < 1:
        raise ValueError("modulus must be positive")
    return math.gcd(k, *(int(x) for x in v)) == 1
