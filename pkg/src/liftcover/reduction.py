"""Constructive membership for genus-2 stabilizer matrices mod k.

Any 4x4 symplectic matrix mod k whose first column is e1 and second row is e2
has the shape

    [[1, e12, e13, e14],
     [0,   1,   0,   0],
     [0, e32, e33, e34],
     [0, e42, e43, e44]]      with  e33*e44 - e34*e43 = 1,

and symplecticity forces e32 = e14*e33 - e13*e34 and e42 = -(e13*e44 - e14*e43).
Right-multiplying by four explicit stabilizer matrices clears everything
outside the top-left 2x2 block:

    M1 clears the lower-right block (its inverse is the block itself),
    M2 clears the (1,2) entry,
    M3 = psi_k(c1^beta a2^-beta) clears the (1,4) entry,
    M4 = psi_k(a2^-1 b2^-1 a2^-1 c1^-alpha a2^alpha a2 b2 a2) clears (1,3),

with alpha = e13*e44 - e14*e43 and beta = e14*e33 - e13*e34.  The residual is
the embedded unipotent [[1, beta - alpha - alpha*beta], [0, 1]] on the first
handle.  Every step is verified; a failed check is a defect, not an input
error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    CapExceededError,
    InternalCheckError,
    MembershipError,
    NotSymplecticError,
    ShapeError,
)
from .linalg import ResidueMatrix, mat_mul, symplectic_inverse
from .criteria import in_stab_e1
from .words import Generator, MCGWord, format_word, psi_k


def eta_embed(block: ResidueMatrix, genus: int) -> ResidueMatrix:
    """Embed a determinant-one 2x2 block as the first handle's action."""
    if block.n != 2:
        raise ShapeError("eta_embed expects a 2x2 block")
    if genus < 1:
        raise ShapeError("genus must be at least 1")
    (a, b), (c, d) = block.entries
    k = block.modulus
    if (a * d - b * c) % k != 1:
        raise NotSymplecticError("block determinant is not 1 mod k")
    n = 2 * genus
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[0][0], rows[0][1] = a, b
    rows[1][0], rows[1][1] = c, d
    return ResidueMatrix(rows, k)


@dataclass(frozen=True)
class ReductionWitness:
    """The verified clearing chain for one stabilizer matrix.

    input @ m1 @ m2 @ m3 @ m4 equals residual, the embedded unipotent with
    parameter t = beta - alpha - alpha*beta; every factor is itself in the
    stabilizer.
    """

    k: int
    input: ResidueMatrix
    m1: ResidueMatrix
    m2: ResidueMatrix
    m3: ResidueMatrix
    m4: ResidueMatrix
    alpha: int
    beta: int
    residual: ResidueMatrix

    @property
    def residual_parameter(self) -> int:
        return self.residual.entries[0][1]


def _m3_word(beta: int) -> MCGWord:
    return MCGWord(2, ((Generator("c", 1), beta), (Generator("a", 2), -beta)))


def _m4_word(alpha: int) -> MCGWord:
    a2 = Generator("a", 2)
    b2 = Generator("b", 2)
    c1 = Generator("c", 1)
    return MCGWord(
        2,
        (
            (a2, -1),
            (b2, -1),
            (a2, -1),
            (c1, -alpha),
            (a2, alpha),
            (a2, 1),
            (b2, 1),
            (a2, 1),
        ),
    )


def reduce_to_eta(a: ResidueMatrix) -> ReductionWitness:
    """Clear a genus-2 stabilizer matrix down to its first-handle unipotent."""
    if a.n != 4:
        raise ShapeError("reduction is defined for 4x4 matrices (genus 2)")
    if not in_stab_e1(a):
        raise MembershipError("matrix is not in the e1 stabilizer shape")
    k = a.modulus
    e = a.entries
    e12, e13, e14 = e[0][1], e[0][2], e[0][3]
    e33, e34 = e[2][2], e[2][3]
    e43, e44 = e[3][2], e[3][3]
    alpha = (e13 * e44 - e14 * e43) % k
    beta = (e14 * e33 - e13 * e34) % k
    m1 = ResidueMatrix(
        [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, e44, -e34],
            [0, 0, -e43, e33],
        ],
        k,
    )
    m2 = ResidueMatrix(
        [
            [1, -e12, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ],
        k,
    )
    m3 = psi_k(_m3_word(beta), k)
    m4 = psi_k(_m4_word(alpha), k)
    product = mat_mul(mat_mul(mat_mul(mat_mul(a, m1), m2), m3), m4)
    t = (beta - alpha - alpha * beta) % k
    residual = eta_embed(ResidueMatrix([[1, t], [0, 1]], k), 2)
    if product != residual:
        raise InternalCheckError("clearing chain did not reach the unipotent residual")
    for name, m in (("m1", m1), ("m2", m2), ("m3", m3), ("m4", m4)):
        if not in_stab_e1(m):
            raise InternalCheckError(f"factor {name} left the stabilizer")
    return ReductionWitness(k, a, m1, m2, m3, m4, alpha, beta, residual)


@dataclass(frozen=True)
class Factor:
    """One factor of a stabilizer factorization.

    ``tag`` is "twist-word" (word attached), "unipotent-block" (embedded
    first-handle unipotent), or "lower-sl2-block" (second-handle block);
    ``word`` is a twist word whose mod-k image equals ``matrix`` when known.
    """

    tag: str
    matrix: ResidueMatrix
    word: Optional[MCGWord]


@dataclass(frozen=True)
class Factorization:
    """Ordered factors whose product reproduces the input mod k."""

    k: int
    factors: tuple

    def product(self) -> ResidueMatrix:
        result = ResidueMatrix.identity(4, self.k)
        for factor in self.factors:
            result = mat_mul(result, factor.matrix)
        return result


def express_via_generators(
    a: ResidueMatrix, generators: Optional[Sequence[MCGWord]] = None
) -> Factorization:
    """Factor a stabilizer matrix as residual * m4^-1 * m3^-1 * m2^-1 * m1^-1.

    The two twist factors come with explicit words.  The unipotent and
    lower-block factors are tagged; when ``generators`` supplies words (for
    example a generating set for the first-handle congruence block), each
    tagged factor is resolved to a word in those generators by breadth-first
    search over their finite mod-k image, and left unresolved if the search
    exhausts the generated subgroup without reaching it.
    """
    witness = reduce_to_eta(a)
    k = witness.k
    m3_inv = symplectic_inverse(witness.m3)
    m4_inv = symplectic_inverse(witness.m4)
    factors = [
        Factor("unipotent-block", witness.residual, None),
        Factor("twist-word", m4_inv, _m4_word(witness.alpha).inverse()),
        Factor("twist-word", m3_inv, _m3_word(witness.beta).inverse()),
        Factor("unipotent-block", symplectic_inverse(witness.m2), None),
        Factor("lower-sl2-block", symplectic_inverse(witness.m1), None),
    ]
    if generators:
        factors = _resolve_factors(factors, generators, k)
    result = Factorization(k, tuple(factors))
    if result.product() != a:
        raise InternalCheckError("factorization product does not reproduce the input")
    return result


def _resolve_factors(factors, generators, k, cap: int = 100_000):
    """BFS over the generators' mod-k images to attach words to tagged factors."""
    gen_steps = []
    for w in generators:
        if w.genus != 2:
            raise ShapeError("generator words must have genus 2")
        img = psi_k(w, k)
        gen_steps.append((w, img))
        gen_steps.append((w.inverse(), symplectic_inverse(img)))
    targets = {
        f.matrix.entries: None
        for f in factors
        if f.word is None
    }
    if targets:
        identity = ResidueMatrix.identity(4, k)
        empty = MCGWord(2, ())
        seen = {identity.entries: empty}
        if identity.entries in targets:
            targets[identity.entries] = empty
        frontier = [identity]
        remaining = sum(1 for v in targets.values() if v is None)
        while frontier and remaining:
            if len(seen) > cap:
                raise CapExceededError(
                    f"generator search exceeded {cap} states", visited=len(seen)
                )
            next_frontier = []
            for current in frontier:
                current_word = seen[current.entries]
                for w, img in gen_steps:
                    nxt = mat_mul(current, img)
                    if nxt.entries in seen:
                        continue
                    nxt_word = current_word * w
                    seen[nxt.entries] = nxt_word
                    next_frontier.append(nxt)
                    if nxt.entries in targets and targets[nxt.entries] is None:
                        targets[nxt.entries] = nxt_word
                        remaining -= 1
            frontier = next_frontier
    resolved = []
    for f in factors:
        if f.word is None and targets.get(f.matrix.entries) is not None:
            resolved.append(Factor(f.tag, f.matrix, targets[f.matrix.entries]))
        else:
            resolved.append(f)
    return resolved


def describe_factors(factorization: Factorization) -> list:
    """Human-readable factor summaries for reports."""
    out = []
    for f in factorization.factors:
        word_text = format_word(f.word) if f.word is not None else None
        out.append({"tag": f.tag, "word": word_text, "matrix": [list(r) for r in f.matrix.entries]})
    return out
