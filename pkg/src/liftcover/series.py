"""Normal series and unit-group quotient attached to the lifting criterion.

The liftable subgroup surjects onto the units of Z_k by reading off the (2,2)
entry of the mod-k action; the kernel of that map is the e1 stabilizer, and
the level-k subgroup sits inside the stabilizer.  Explicit coset
representatives phi_ell realize every unit class using only the first handle's
twists, and the involution's class -1 measures how far the liftable subgroup
is from the stabilizer's closure under the involution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalCheckError, MembershipError
from .linalg import ResidueMatrix, totient
from .criteria import is_liftable
from .words import Generator, MCGWord, psi_k


def units(k: int) -> tuple:
    """The units of Z_k in increasing order."""
    if k < 1:
        raise ValueError("modulus must be positive")
    if k == 1:
        return (0,)
    return tuple(u for u in range(1, k) if math.gcd(u, k) == 1)


def quotient_class(m: ResidueMatrix) -> int:
    """Unit class of a liftable matrix: its (2,2) entry."""
    if not is_liftable(m):
        raise MembershipError("matrix is not liftable; no quotient class")
    return m.entries[1][1]


@dataclass(frozen=True)
class CosetRep:
    """Coset representative phi_ell for one unit ell.

    ``word`` is b1^(ellbar-1) a1^-1 b1^(ell-1) with ellbar the inverse unit;
    ``matrix`` is the diagonal model diag(ell, ellbar) + I on the remaining
    coordinates.  Both map to the unit class ellbar.
    """

    ell: int
    ell_inverse: int
    k: int
    word: MCGWord
    matrix: ResidueMatrix


def coset_rep(ell: int, k: int, genus: int = 1) -> CosetRep:
    """Build and verify the representative phi_ell at the given genus."""
    if k < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(ell, k) != 1:
        raise MembershipError(f"{ell} is not a unit mod {k}")
    ell %= k
    ellbar = pow(ell, -1, k)
    b1 = Generator("b", 1)
    a1 = Generator("a", 1)
    w = MCGWord(genus, ((b1, ellbar - 1), (a1, -1), (b1, ell - 1)))
    n = 2 * genus
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[0][0] = ell
    rows[1][1] = ellbar
    model = ResidueMatrix(rows, k)
    rep = CosetRep(ell, ellbar, k, w, model)
    mk = psi_k(w, k)
    if quotient_class(mk) != ellbar or quotient_class(model) != ellbar:
        raise InternalCheckError("coset representative has the wrong unit class")
    return rep


def verify_coset_system(k: int, genus: int = 1) -> bool:
    """Whether {phi_ell} hits every unit class exactly once, all liftable."""
    classes = []
    for ell in units(k):
        rep = coset_rep(ell, k, genus)
        mk = psi_k(rep.word, k)
        if not is_liftable(mk):
            return False
        classes.append(quotient_class(mk))
    expected = set(units(k))
    return len(classes) == len(expected) and set(classes) == expected


@dataclass(frozen=True)
class IotaExtension:
    """How the involution's class -1 extends the stabilizer inside liftables.

    ``index`` is (number of unit classes) / 2, the index of the subgroup
    generated by the stabilizer together with the involution; ``lmod_equals_closure``
    says that subgroup is everything, which happens exactly when -1 and +1 are
    the only units.
    """

    k: int
    index: int
    lmod_equals_closure: bool


def iota_extension_data(k: int) -> IotaExtension:
    """Index data for the involution extension; needs k >= 3."""
    if k < 3:
        raise ValueError("involution extension needs k >= 3 (otherwise -1 = 1)")
    phi = totient(k)
    iota_word = MCGWord(1, ((Generator("iota"), 1),))
    cls = quotient_class(psi_k(iota_word, k))
    if cls != k - 1:
        raise InternalCheckError("involution class is not -1 mod k")
    if (cls * cls) % k != 1:
        raise InternalCheckError("involution class is not an involution in the units")
    return IotaExtension(k, phi // 2, phi == 2)
