"""Symplectic lifting criteria for the k-sheeted regular cyclic cover.

A mapping class lifts exactly when its mod-k homology action fixes the first
basis vector's residue class up to units: concretely, the second row of the
matrix must vanish away from the diagonal and carry a unit at position (2,2).
The stabilizer-shaped and level-k subgroups refine this, giving the chain

    level-k  <=  stab(e1)  <=  liftable  <=  everything,

with each predicate strictly stronger than the next.  All predicates take a
ResidueMatrix (the modulus rides on the type) and insist it be symplectic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import NotSymplecticError, ShapeError
from .linalg import (
    ResidueMatrix,
    SquareMatrix,
    count_primitive,
    is_symplectic,
    totient,
)
from .words import MCGWord, psi, psi_k


def _checked(m: ResidueMatrix) -> ResidueMatrix:
    if not isinstance(m, ResidueMatrix):
        raise ShapeError("criteria operate on ResidueMatrix inputs")
    if m.n % 2:
        raise ShapeError("matrix dimension must be even")
    if not is_symplectic(m):
        raise NotSymplecticError("matrix is not symplectic mod k")
    return m


def _is_unit(x: int, k: int) -> bool:
    return math.gcd(x, k) == 1


def is_liftable(m: ResidueMatrix) -> bool:
    """Row-two criterion: entries (2,j) vanish for j != 2 and (2,2) is a unit."""
    return liftable_witness(m) is None


def liftable_witness(m: ResidueMatrix) -> Optional[tuple]:
    """First violated row-two condition in row-major order, or None.

    The witness is 1-indexed (row, col, value).
    """
    _checked(m)
    k = m.modulus
    row = m.entries[1]
    for j, value in enumerate(row):
        if j == 1:
            if not _is_unit(value, k):
                return (2, 2, value)
        elif value != 0:
            return (2, j + 1, value)
    return None


def stabilizes_e1_class(m: ResidueMatrix) -> bool:
    """First-column criterion: column one is a unit multiple of e1."""
    _checked(m)
    k = m.modulus
    if not _is_unit(m.entries[0][0], k):
        return False
    return all(m.entries[i][0] == 0 for i in range(1, m.n))


def in_stab_e1(m: ResidueMatrix) -> bool:
    """Exact stabilizer of e1: column one is e1 and row two is e2."""
    return stab_e1_witness(m) is None


def stab_e1_witness(m: ResidueMatrix) -> Optional[tuple]:
    """First violated stabilizer condition in row-major order, or None."""
    _checked(m)
    e = m.entries
    if e[0][0] != 1:
        return (1, 1, e[0][0])
    if e[1][0] != 0:
        return (2, 1, e[1][0])
    if e[1][1] != 1:
        return (2, 2, e[1][1])
    for j in range(2, m.n):
        if e[1][j] != 0:
            return (2, j + 1, e[1][j])
    for i in range(2, m.n):
        if e[i][0] != 0:
            return (i + 1, 1, e[i][0])
    return None


def in_level_k(m: ResidueMatrix) -> bool:
    """Level subgroup: the matrix reduces to the identity mod k."""
    return level_k_witness(m) is None


def level_k_witness(m: ResidueMatrix) -> Optional[tuple]:
    _checked(m)
    for i, row in enumerate(m.entries):
        for j, value in enumerate(row):
            expected = 1 if i == j else 0
            if value != expected:
                return (i + 1, j + 1, value)
    return None


def in_umod(a: SquareMatrix) -> bool:
    """Integer-level row-two criterion: (2,j) = 0 for j != 2 and (2,2) = +-1."""
    if not isinstance(a, SquareMatrix):
        raise ShapeError("in_umod operates on an integer SquareMatrix")
    if a.n % 2:
        raise ShapeError("matrix dimension must be even")
    if not is_symplectic(a):
        raise NotSymplecticError("matrix is not symplectic")
    row = a.entries[1]
    if row[1] not in (1, -1):
        return False
    return all(v == 0 for j, v in enumerate(row) if j != 1)


@dataclass(frozen=True)
class LiftReport:
    """Membership flags for one word at one modulus.

    The flags satisfy in_level_k => in_stab_e1 => in_lmod; quotient_class is
    the (2,2) entry when liftable and None otherwise; witness names the first
    violated condition (1-indexed row, col, value) of the strongest failed
    predicate, scanned in row-major order.
    """

    k: int
    in_level_k: bool
    in_stab_e1: bool
    in_lmod: bool
    in_umod: bool
    quotient_class: Optional[int]
    witness: Optional[tuple]

    def __post_init__(self):
        if self.in_level_k and not self.in_stab_e1:
            raise ValueError("level-k membership must imply stabilizer membership")
        if self.in_stab_e1 and not self.in_lmod:
            raise ValueError("stabilizer membership must imply liftability")
        if (self.quotient_class is None) == self.in_lmod:
            raise ValueError("quotient_class must be present exactly when liftable")


def lift_report(w: MCGWord, k: int) -> LiftReport:
    """Build the full membership report for a word at modulus k."""
    mk = psi_k(w, k)
    lw = liftable_witness(mk)
    if lw is not None:
        return LiftReport(k, False, False, False, in_umod(psi(w)), None, lw)
    sw = stab_e1_witness(mk)
    if sw is not None:
        return LiftReport(
            k, False, False, True, in_umod(psi(w)), mk.entries[1][1], sw
        )
    kw = level_k_witness(mk)
    return LiftReport(
        k,
        kw is None,
        True,
        True,
        in_umod(psi(w)),
        mk.entries[1][1],
        kw,
    )


def lcm_intersection_check(w: MCGWord, k: int, l: int) -> bool:
    """Whether liftability at both k and l coincides with liftability at lcm(k, l)."""
    if k < 1 or l < 1:
        raise ValueError("moduli must be positive")
    both = is_liftable(psi_k(w, k)) and is_liftable(psi_k(w, l))
    joint = is_liftable(psi_k(w, math.lcm(k, l)))
    return both == joint


def index_lmod(g: int, k: int) -> int:
    """Index of the liftable subgroup: primitive vectors over unit classes."""
    if g < 1 or k < 1:
        raise ValueError("genus and modulus must be positive")
    return count_primitive(k, 2 * g) // totient(k)


def index_stab_e1(g: int, k: int) -> int:
    """Index of the e1 stabilizer: one coset per primitive vector."""
    if g < 1 or k < 1:
        raise ValueError("genus and modulus must be positive")
    return count_primitive(k, 2 * g)


@dataclass(frozen=True)
class CongruenceFlags:
    """Genus-one congruence membership: principal, upper-unipotent, upper-triangular."""

    gamma: bool
    gamma1: bool
    gamma0: bool

    def __post_init__(self):
        if self.gamma and not self.gamma1:
            raise ValueError("principal membership must imply the middle level")
        if self.gamma1 and not self.gamma0:
            raise ValueError("middle membership must imply the triangular level")


def congruence_class_g1(m: SquareMatrix, k: int) -> CongruenceFlags:
    """Classify an integer SL(2, Z) matrix against the three mod-k levels."""
    if not isinstance(m, SquareMatrix) or m.n != 2:
        raise ShapeError("expected a 2x2 integer matrix")
    (a, b), (c, d) = m.entries
    if a * d - b * c != 1:
        raise NotSymplecticError("matrix does not have determinant 1")
    if k < 1:
        raise ValueError("modulus must be positive")
    gamma0 = c % k == 0
    gamma1 = gamma0 and a % k == 1 and d % k == 1
    gamma = gamma1 and b % k == 0
    return CongruenceFlags(gamma, gamma1, gamma0)
