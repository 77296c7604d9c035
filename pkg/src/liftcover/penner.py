"""Penner-style pseudo-Anosov words, their Perron matrices, and stretch factors.

The construction uses the 3g-1 chain curves, rows ordered
(c_1..c_{g-1}, a_1..a_g, b_1..b_g): each c_i crosses b_i and b_{i+1} once,
each a_j crosses b_j once, and no other pair meets.  A tuple of positive
exponents T = ((p_i), ((k_j, l_j))) yields the word

    h_T = c_1^-p_1 ... c_{g-1}^-p_{g-1}  a_1^-k_1 b_1^l_1 ... a_g^-k_g b_g^l_g,

which is pseudo-Anosov because every curve appears and the signs split into
one negative and one positive family.  Each letter contributes |exponent|
copies of B_curve = I + A_curve Sigma to the Perron matrix, whose dominant
eigenvalue is the stretch factor.

Liftability under the degree-k cyclic cover depends only on l_1: the second
row of the homology image is (-l_1, 1, 0, ..., 0), so h_T lifts exactly when
k divides l_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InternalCheckError, ShapeError
from .linalg import (
    ExactPolynomial,
    SquareMatrix,
    char_poly,
    mat_mul,
    spectral_radius,
    symplectic_inverse,
)
from .words import Generator, MCGWord, psi, twist_power


@dataclass(frozen=True)
class PennerSystem:
    """The chain curves at one genus with their geometric intersection counts."""

    g: int
    labels: tuple
    sigma: tuple

    @property
    def size(self) -> int:
        return 3 * self.g - 1

    def row(self, curve: int) -> tuple:
        return self.sigma[curve]


def curve_order(g: int) -> tuple:
    """Row order (c_1..c_{g-1}, a_1..a_g, b_1..b_g) as (kind, index) pairs."""
    names = [("c", i) for i in range(1, g)]
    names += [("a", j) for j in range(1, g + 1)]
    names += [("b", j) for j in range(1, g + 1)]
    return tuple(names)


def incidence_matrix(g: int) -> PennerSystem:
    """Symmetric intersection-count matrix of the chain arrangement."""
    if g < 2:
        raise ShapeError("the construction needs genus at least 2")
    order = curve_order(g)
    pos = {name: i for i, name in enumerate(order)}
    n = len(order)
    rows = [[0] * n for _ in range(n)]

    def meet(x, y):
        rows[pos[x]][pos[y]] = 1
        rows[pos[y]][pos[x]] = 1

    for i in range(1, g):
        meet(("c", i), ("b", i))
        meet(("c", i), ("b", i + 1))
    for j in range(1, g + 1):
        meet(("a", j), ("b", j))
    labels = tuple(f"{kind}{index}" for kind, index in order)
    return PennerSystem(g, labels, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class AdmissibleTuple:
    """Positive exponents ((p_1..p_{g-1}), ((k_1, l_1)..(k_g, l_g)))."""

    g: int
    p: tuple
    kl: tuple

    def __post_init__(self):
        if self.g < 2:
            raise ShapeError("the construction needs genus at least 2")
        p = tuple(int(x) for x in self.p)
        kl = tuple((int(a), int(b)) for a, b in self.kl)
        if len(p) != self.g - 1:
            raise ShapeError(f"need {self.g - 1} c-exponents, got {len(p)}")
        if len(kl) != self.g:
            raise ShapeError(f"need {self.g} handle pairs, got {len(kl)}")
        if any(x < 1 for x in p) or any(a < 1 or b < 1 for a, b in kl):
            raise ShapeError("all exponents must be positive")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "kl", kl)

    def exponent(self, kind: str, index: int) -> int:
        """Word exponent magnitude attached to one curve."""
        if kind == "c":
            return self.p[index - 1]
        if kind == "a":
            return self.kl[index - 1][0]
        if kind == "b":
            return self.kl[index - 1][1]
        raise ShapeError(f"unknown curve kind {kind!r}")


def base_tuple(g: int) -> AdmissibleTuple:
    """All exponents one."""
    return AdmissibleTuple(g, (1,) * (g - 1), ((1, 1),) * g)


def bump_tuple(t: AdmissibleTuple, q: int) -> AdmissibleTuple:
    """Increment the exponent slot of the q-th curve in row order (1-based)."""
    order = curve_order(t.g)
    if not 1 <= q <= len(order):
        raise ShapeError(f"curve index {q} out of range")
    kind, index = order[q - 1]
    p = list(t.p)
    kl = [list(pair) for pair in t.kl]
    if kind == "c":
        p[index - 1] += 1
    elif kind == "a":
        kl[index - 1][0] += 1
    else:
        kl[index - 1][1] += 1
    return AdmissibleTuple(t.g, tuple(p), tuple(tuple(pair) for pair in kl))


def _word_letters(t: AdmissibleTuple):
    letters = []
    for i in range(1, t.g):
        letters.append((Generator("c", i), -t.p[i - 1]))
    for j in range(1, t.g + 1):
        k_j, l_j = t.kl[j - 1]
        letters.append((Generator("a", j), -k_j))
        letters.append((Generator("b", j), l_j))
    return tuple(letters)


def build_word(t: AdmissibleTuple) -> MCGWord:
    """The twist word h_T: negative c and a twists, positive b twists."""
    return MCGWord(t.g, _word_letters(t))


def _single_factor(system: PennerSystem, curve: int) -> SquareMatrix:
    n = system.size
    rows = [
        [int(i == j) + (system.sigma[curve][j] if i == curve else 0) for j in range(n)]
        for i in range(n)
    ]
    return SquareMatrix(rows)


def _letter_factor(system: PennerSystem, curve: int, magnitude: int) -> SquareMatrix:
    """B_curve^magnitude, via the closed form when the update row is nilpotent."""
    n = system.size
    single = _single_factor(system, curve)
    update = SquareMatrix(
        [
            [system.sigma[curve][j] if i == curve else 0 for j in range(n)]
            for i in range(n)
        ]
    )
    zero = SquareMatrix([[0] * n for _ in range(n)])
    if mat_mul(update, update) == zero:
        rows = [
            [
                int(i == j) + (magnitude * system.sigma[curve][j] if i == curve else 0)
                for j in range(n)
            ]
            for i in range(n)
        ]
        return SquareMatrix(rows)
    result = SquareMatrix.identity(n)
    for _ in range(magnitude):
        result = mat_mul(result, single)
    return result


def perron_matrix(t: AdmissibleTuple) -> SquareMatrix:
    """Product of the B factors, one block per letter, in word order."""
    system = incidence_matrix(t.g)
    pos = {name: i for i, name in enumerate(curve_order(t.g))}
    result = SquareMatrix.identity(system.size)
    for gen, exp in _word_letters(t):
        curve = pos[(gen.kind, gen.index)]
        result = mat_mul(result, _letter_factor(system, curve, abs(exp)))
    return result


def stretch_factor(
    t: AdmissibleTuple, tol: float = 1e-9, max_iter: int = 10**6
) -> float:
    """Dominant eigenvalue of the Perron matrix; always greater than 1."""
    return spectral_radius(perron_matrix(t), tol, max_iter)


def homological_dilatation(
    t: AdmissibleTuple, tol: float = 1e-9, max_iter: int = 10**6
) -> float:
    """Spectral radius of the homology image of h_T."""
    return spectral_radius(psi(build_word(t)), tol, max_iter)


def penner_liftable(t: AdmissibleTuple, k: int) -> bool:
    """Liftability under the degree-k cover: k divides l_1."""
    if k < 1:
        raise ValueError("modulus must be positive")
    return t.kl[0][1] % k == 0


@dataclass(frozen=True)
class PolyReport:
    """Exact characteristic polynomials of both matrices attached to a tuple.

    ``quotient`` is perron_poly / psi_poly when that division is exact (the
    observed relation at genus 2 is an extra factor of x - 1), else None.
    The relation is reported for inspection, never asserted.
    """

    psi_poly: ExactPolynomial
    perron_poly: ExactPolynomial
    quotient: Optional[ExactPolynomial]


def char_poly_report(t: AdmissibleTuple) -> PolyReport:
    """Compute and compare both exact characteristic polynomials."""
    p_psi = char_poly(psi(build_word(t)))
    p_per = char_poly(perron_matrix(t))
    quotient = _exact_quotient(p_per, p_psi)
    return PolyReport(p_psi, p_per, quotient)


def _exact_quotient(num: ExactPolynomial, den: ExactPolynomial):
    rem = [Fraction(c) for c in num.coefficients]
    dd = [Fraction(c) for c in den.coefficients]
    if not dd or len(rem) < len(dd):
        return None
    lead = dd[-1]
    quot = [Fraction(0)] * (len(rem) - len(dd) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(dd) - 1] / lead
        quot[i] = c
        if c:
            for j, dj in enumerate(dd):
                rem[i + j] -= c * dj
    if any(rem) or any(c.denominator != 1 for c in quot):
        return None
    return ExactPolynomial(tuple(int(c) for c in quot))


@dataclass(frozen=True)
class RecoveryResult:
    """Outcome of the single-twist recovery identity at one genus.

    ``orders`` records, per curve, which conjugation order verified:
    "alpha-first" conjugates h_{T_q} h_{T_1}^{-1}, "refs-first" the reverse
    product.
    """

    genus: int
    ok: bool
    orders: tuple

    def __bool__(self) -> bool:
        return self.ok


def generator_recovery_check(g: int) -> RecoveryResult:
    """Verify each twist letter is recovered from a bumped tuple pair.

    For the q-th curve, compare psi of the single twist (with the word's sign)
    against the prefix-conjugated product of psi(h_{T_q}) and psi(h_{T_1})^{-1}
    in both orders; failing both is a defect.
    """
    base = base_tuple(g)
    base_letters = _word_letters(base)
    h1 = psi(build_word(base))
    h1_inv = symplectic_inverse(h1)
    order = curve_order(g)
    positions = {}
    for idx, (gen, _) in enumerate(base_letters):
        positions[(gen.kind, gen.index)] = idx
    orders = []
    for q, (kind, index) in enumerate(order, start=1):
        delta = 1 if kind == "b" else -1
        target = twist_power(Generator(kind, index), delta, g)
        hq = psi(build_word(bump_tuple(base, q)))
        pos = positions[(kind, index)]
        prefix = psi(MCGWord(g, base_letters[:pos]))
        prefix_inv = symplectic_inverse(prefix)
        alpha_first = mat_mul(
            mat_mul(prefix_inv, mat_mul(hq, h1_inv)), prefix
        )
        if alpha_first == target:
            orders.append("alpha-first")
            continue
        refs_first = mat_mul(mat_mul(prefix, mat_mul(h1_inv, hq)), prefix_inv)
        if refs_first == target:
            orders.append("refs-first")
            continue
        raise InternalCheckError(
            f"single-twist recovery failed for curve {kind}{index} at genus {g}"
        )
    return RecoveryResult(g, True, tuple(orders))
