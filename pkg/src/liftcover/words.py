"""Mapping-class words over the standard twist generators and their homology action.

A genus-g surface carries the 3g-1 twist curves a_1..a_g, b_1..b_g,
c_1..c_{g-1} of the usual chain arrangement.  Words in the twists map to
Sp(2g, Z) acting on column vectors in the basis
(a_1, b_1, ..., a_g, b_g); the hyperelliptic involution is the pseudo-letter
"iota", sent to -I; it is never expanded into twists.

The sign convention is fixed by the g = 2 matrices

    psi(a2 twist) = I + E_{3,4}
    psi(b2 twist) = I - E_{4,3}
    psi(c1 twist) = [[1,1,0,-1],[0,1,0,0],[0,-1,1,1],[0,0,0,1]]

and every generator image is a transvection I + N with N^2 = 0, so integer
powers (negative ones included) are exactly I + m N.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import GeneratorRangeError, WordSyntaxError
from .linalg import ResidueMatrix, SquareMatrix, mat_mul

_KINDS = ("a", "b", "c", "iota")

_TOKEN_RE = re.compile(
    r"(?P<name>iota|[abc](?P<index>[1-9][0-9]*))(?:\^(?P<exp>[+-]?[0-9]+))?\Z"
)


@dataclass(frozen=True)
class Generator:
    """A twist letter (kinds a, b, c) or the involution pseudo-letter iota."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise GeneratorRangeError(f"unknown generator kind {self.kind!r}")
        if self.kind == "iota":
            if self.index != 0:
                raise GeneratorRangeError("iota carries no index")
        elif self.index < 1:
            raise GeneratorRangeError("twist index must be a positive integer")

    def max_index(self, genus: int) -> int:
        return genus - 1 if self.kind == "c" else genus

    def check_genus(self, genus: int) -> None:
        if self.kind == "iota":
            return
        if self.index > self.max_index(genus):
            raise GeneratorRangeError(
                f"generator {self.kind}{self.index} out of range at genus {genus}"
            )

    def label(self) -> str:
        return "iota" if self.kind == "iota" else f"{self.kind}{self.index}"


@dataclass(frozen=True)
class MCGWord:
    """A word in the twist letters and iota, with nonzero integer exponents.

    Letters are (Generator, exponent) pairs applied left to right; zero-power
    letters are normalized away at construction.
    """

    genus: int
    letters: tuple

    def __post_init__(self):
        if self.genus < 1:
            raise GeneratorRangeError("genus must be at least 1")
        cleaned = []
        for gen, exp in self.letters:
            if not isinstance(gen, Generator):
                raise TypeError("letters must be (Generator, exponent) pairs")
            gen.check_genus(self.genus)
            exp = int(exp)
            if exp:
                cleaned.append((gen, exp))
        object.__setattr__(self, "letters", tuple(cleaned))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "MCGWord":
        return MCGWord(
            self.genus, tuple((gen, -exp) for gen, exp in reversed(self.letters))
        )

    def __mul__(self, other: "MCGWord") -> "MCGWord":
        if self.genus != other.genus:
            raise GeneratorRangeError("cannot concatenate words of different genus")
        return MCGWord(self.genus, self.letters + other.letters)


def word(genus: int, *letters) -> MCGWord:
    """Convenience constructor: word(2, ("a", 1, -1), ("b", 2, 3), ("iota", 1))."""
    built = []
    for item in letters:
        if item[0] == "iota":
            built.append((Generator("iota"), item[1] if len(item) > 1 else 1))
        else:
            kind, index, *rest = item
            built.append((Generator(kind, index), rest[0] if rest else 1))
    return MCGWord(genus, tuple(built))


def _twist_nilpotent(gen: Generator, genus: int):
    """Nonzero positions of N where psi(twist) = I + N, 0-based (i, j, value)."""
    gen.check_genus(genus)
    i = gen.index
    if gen.kind == "a":
        return ((2 * i - 2, 2 * i - 1, 1),)
    if gen.kind == "b":
        return ((2 * i - 1, 2 * i - 2, -1),)
    if gen.kind == "c":
        return (
            (2 * i - 2, 2 * i - 1, 1),
            (2 * i - 2, 2 * i + 1, -1),
            (2 * i, 2 * i - 1, -1),
            (2 * i, 2 * i + 1, 1),
        )
    raise GeneratorRangeError("iota is not a twist")


def twist_matrix(gen: Generator, genus: int) -> SquareMatrix:
    """Integer symplectic image of a single positive twist letter."""
    return twist_power(gen, 1, genus)


def twist_power(gen: Generator, exponent: int, genus: int) -> SquareMatrix:
    """psi(twist^exponent) = I + exponent * N, valid for any integer exponent."""
    n = 2 * genus
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, v in _twist_nilpotent(gen, genus):
        rows[i][j] += exponent * v
    return SquareMatrix(rows)


def iota_matrix(genus: int) -> SquareMatrix:
    """The hyperelliptic involution acts on homology as -I."""
    n = 2 * genus
    return SquareMatrix(
        [[-1 if i == j else 0 for j in range(n)] for i in range(n)]
    )


def psi(w: MCGWord) -> SquareMatrix:
    """Integer symplectic image of a word, letters multiplied left to right."""
    result = SquareMatrix.identity(2 * w.genus)
    for gen, exp in w.letters:
        if gen.kind == "iota":
            if exp % 2:
                result = mat_mul(result, iota_matrix(w.genus))
        else:
            result = mat_mul(result, twist_power(gen, exp, w.genus))
    return result


def psi_k(w: MCGWord, k: int) -> ResidueMatrix:
    """Mod-k symplectic image; reduces after every letter."""
    if k < 1:
        raise ValueError("modulus must be a positive integer")
    result = ResidueMatrix.identity(2 * w.genus, k)
    for gen, exp in w.letters:
        if gen.kind == "iota":
            step = iota_matrix(w.genus).mod(k) ** (exp % 2)
        else:
            step = twist_power(gen, exp % k if k > 1 else 0, w.genus).mod(k)
        result = mat_mul(result, step)
    return result


def parse_word(text: str, genus: int) -> MCGWord:
    """Parse whitespace-separated tokens like "a1^-2 c1 iota b2^3"."""
    letters = []
    seen = False
    for match in re.finditer(r"\S+", text):
        seen = True
        token = match.group(0)
        m = _TOKEN_RE.match(token)
        if m is None:
            raise WordSyntaxError(f"bad token {token!r}", match.start())
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        if m.group("name") == "iota":
            gen = Generator("iota")
        else:
            gen = Generator(m.group("name")[0], int(m.group("index")))
        try:
            gen.check_genus(genus)
        except GeneratorRangeError as exc:
            raise GeneratorRangeError(f"{exc} (at position {match.start()})") from None
        letters.append((gen, exp))
    if not seen:
        raise WordSyntaxError("empty word", 0)
    return MCGWord(genus, tuple(letters))


def format_word(w: MCGWord) -> str:
    """Canonical text form; exponent 1 is left implicit."""
    parts = []
    for gen, exp in w.letters:
        parts.append(gen.label() if exp == 1 else f"{gen.label()}^{exp}")
    return " ".join(parts)


@dataclass(frozen=True)
class BasisConvention:
    """Homology basis bookkeeping: columns ordered (a_1, b_1, ..., a_g, b_g)."""

    genus: int

    @property
    def dimension(self) -> int:
        return 2 * self.genus

    def a_column(self, i: int) -> int:
        """0-based column of the class of a_i."""
        if not 1 <= i <= self.genus:
            raise GeneratorRangeError(f"a{i} out of range at genus {self.genus}")
        return 2 * i - 2

    def b_column(self, i: int) -> int:
        """0-based column of the class of b_i."""
        if not 1 <= i <= self.genus:
            raise GeneratorRangeError(f"b{i} out of range at genus {self.genus}")
        return 2 * i - 1

    def labels(self) -> tuple:
        out = []
        for i in range(1, self.genus + 1):
            out.append(f"a{i}")
            out.append(f"b{i}")
        return tuple(out)
