"""Seeded samplers for words and subgroup members, shared by tests and the CLI.

Densities matter here: plain rejection onto the stabilizer thins out like one
in count_primitive(k, 2g), so constructive samplers are provided alongside the
filtered one.  Words over every twist letter except b1 land in the stabilizer
(those letters fix e1 and the second row); prefixing a coset representative
reaches every unit class; conjugated k-th twist powers land in the level-k
subgroup by the transvection power law.
"""

from __future__ import annotations

import random
from typing import Callable

from .errors import CapExceededError, InternalCheckError
from .linalg import ResidueMatrix
from .criteria import in_stab_e1
from .series import coset_rep, units
from .words import Generator, MCGWord, psi_k


def twist_alphabet(genus: int, exclude: tuple = ()) -> list:
    """All twist letters at this genus, minus any excluded labels."""
    letters = []
    for i in range(1, genus + 1):
        letters.append(Generator("a", i))
        letters.append(Generator("b", i))
    for i in range(1, genus):
        letters.append(Generator("c", i))
    return [gen for gen in letters if gen.label() not in exclude]


def random_word(
    rng: random.Random,
    genus: int,
    max_len: int = 20,
    alphabet: list | None = None,
    max_exp: int = 3,
) -> MCGWord:
    """Uniform-ish word: random letters, nonzero exponents up to max_exp."""
    letters = alphabet if alphabet is not None else twist_alphabet(genus)
    length = rng.randint(1, max_len)
    chosen = []
    for _ in range(length):
        gen = rng.choice(letters)
        exp = 0
        while exp == 0:
            exp = rng.randint(-max_exp, max_exp)
        chosen.append((gen, exp))
    return MCGWord(genus, tuple(chosen))


def random_stab_word(
    rng: random.Random, genus: int, max_len: int = 12, max_exp: int = 3
) -> MCGWord:
    """Word over every letter except b1; lands in the e1 stabilizer."""
    return random_word(
        rng, genus, max_len, twist_alphabet(genus, exclude=("b1",)), max_exp
    )


def random_liftable_word(
    rng: random.Random, genus: int, k: int, max_len: int = 12
) -> MCGWord:
    """Coset-representative prefix times a stabilizer word; covers all classes."""
    ell = rng.choice(units(k))
    return coset_rep(ell, k, genus).word * random_stab_word(rng, genus, max_len)


def random_level_word(
    rng: random.Random, genus: int, k: int, max_conj_len: int = 6
) -> MCGWord:
    """Product of conjugated k-th twist powers; mod-k image is the identity."""
    alphabet = twist_alphabet(genus)
    result = MCGWord(genus, ())
    for _ in range(rng.randint(1, 3)):
        u = random_word(rng, genus, rng.randint(1, max_conj_len))
        core = MCGWord(genus, ((rng.choice(alphabet), rng.choice((-1, 1)) * k),))
        result = result * (u * core * u.inverse())
    return result


def random_sl2_block(rng: random.Random, k: int) -> tuple:
    """Uniform 2x2 block with determinant 1 mod k, by rejection."""
    while True:
        a, b, c, d = (rng.randrange(k) for _ in range(4))
        if (a * d - b * c) % k == 1:
            return ((a, b), (c, d))


def synthetic_stab_member(rng: random.Random, k: int) -> ResidueMatrix:
    """Random genus-2 stabilizer matrix built directly from its free entries.

    The lower-right block is a random determinant-one block; e12, e13, e14 are
    free; the remaining second-column entries are forced by symplecticity.
    """
    (e33, e34), (e43, e44) = random_sl2_block(rng, k)
    e12, e13, e14 = (rng.randrange(k) for _ in range(3))
    e32 = (e14 * e33 - e13 * e34) % k
    e42 = (-(e13 * e44 - e14 * e43)) % k
    m = ResidueMatrix(
        [
            [1, e12, e13, e14],
            [0, 1, 0, 0],
            [0, e32, e33, e34],
            [0, e42, e43, e44],
        ],
        k,
    )
    if not in_stab_e1(m):
        raise InternalCheckError("synthetic member failed the stabilizer post-check")
    return m


def filtered_words(
    rng: random.Random,
    genus: int,
    k: int,
    predicate: Callable[[ResidueMatrix], bool],
    count: int,
    max_len: int = 25,
    max_tries: int = 10**6,
) -> list:
    """Plain rejection sampling: random words whose mod-k image satisfies predicate."""
    found = []
    tries = 0
    while len(found) < count:
        tries += 1
        if tries > max_tries:
            raise CapExceededError(
                f"filtered sampling exhausted {max_tries} tries", visited=len(found)
            )
        w = random_word(rng, genus, max_len)
        if predicate(psi_k(w, k)):
            found.append(w)
    return found
