"""Orbit enumeration for the mod-k action on primitive vectors and their classes.

The twist images act on (Z_k)^{2g}; transitivity on primitive vectors (and on
their unit-scaling classes) is what makes the coset counts meaningful, and the
BFS here verifies it by brute force.  States are encoded as big-endian
mixed-radix integers (first coordinate most significant), so the lexicographic
least representative of a class is also the numerically least code.

This is the package's one hot loop.  It runs on int64 numpy state arrays,
which is safe because moduli and state counts are capped well inside int64
range, with two interchangeable backends:

* a numba kernel (queue BFS, used when numba imports cleanly), and
* a vectorized pure-numpy level BFS.

Set ``LIFTCOVER_BACKEND=numpy`` or ``=numba`` to force one; the default picks
numba when available.  Both are single-threaded and deterministic, and
``benchmarks/bench_orbit.py`` compares them.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, InternalCheckError
from .linalg import count_primitive, totient
from .words import Generator, twist_power

try:  # pragma: no cover - exercised via the backend flag
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


_STATE_SPACE_CAP = 200_000_000
_GENERATOR_SET_ID = "lickorish-twists-and-inverses"

ORBIT_MODES = ("classes", "vectors")


@dataclass(frozen=True)
class OrbitResult:
    """Completed orbit enumeration: size, states visited, and provenance."""

    k: int
    g: int
    mode: str
    orbit_size: int
    visited: int
    generator_set_id: str


def available_backends() -> tuple:
    return ("numba", "numpy") if _HAVE_NUMBA else ("numpy",)


def select_backend(override: str | None = None) -> str:
    """Resolve the backend from an explicit override or LIFTCOVER_BACKEND."""
    choice = override if override is not None else os.environ.get(
        "LIFTCOVER_BACKEND", ""
    )
    choice = choice.strip().lower()
    if choice in ("", "auto"):
        return "numba" if _HAVE_NUMBA else "numpy"
    if choice == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return "numba"
    if choice == "numpy":
        return "numpy"
    raise ValueError(f"unknown backend {choice!r}; use 'numba' or 'numpy'")


def twist_generators_mod_k(g: int, k: int):
    """All 3g-1 twist images and their inverses, reduced mod k, as int64 arrays."""
    gens = []
    names = [("a", i) for i in range(1, g + 1)]
    names += [("b", i) for i in range(1, g + 1)]
    names += [("c", i) for i in range(1, g)]
    for kind, index in names:
        for sign in (1, -1):
            m = twist_power(Generator(kind, index), sign, g).mod(k)
            gens.append(np.array(m.entries, dtype=np.int64))
    return gens


def expected_orbit_size(k: int, g: int, mode: str) -> int:
    """Primitive-vector count, divided by the unit-group order in class mode."""
    if mode not in ORBIT_MODES:
        raise ValueError(f"mode must be one of {ORBIT_MODES}")
    total = count_primitive(k, 2 * g)
    return total // totient(k) if mode == "classes" else total


def orbit_primitive_classes(
    k: int, g: int, cap: int = 10**7, backend: str | None = None
) -> OrbitResult:
    """BFS orbit of the class of e1 under the twist generators mod k."""
    return _orbit(k, g, "classes", cap, backend)


def orbit_primitive_vectors(
    k: int, g: int, cap: int = 10**7, backend: str | None = None
) -> OrbitResult:
    """BFS orbit of e1 itself under the twist generators mod k."""
    return _orbit(k, g, "vectors", cap, backend)


def _orbit(k, g, mode, cap, backend):
    if k < 2:
        raise ValueError("modulus must be at least 2")
    if g < 1:
        raise ValueError("genus must be at least 1")
    if cap < 1:
        raise ValueError("cap must be positive")
    n = 2 * g
    expected = expected_orbit_size(k, g, mode)
    if expected > cap:
        raise CapExceededError(
            f"expected orbit size {expected} exceeds cap {cap}", visited=0
        )
    size = k**n
    if size > _STATE_SPACE_CAP:
        raise CapExceededError(
            f"state space {k}^{n} = {size} exceeds the bitmap bound "
            f"{_STATE_SPACE_CAP}",
            visited=0,
        )
    which = select_backend(backend)
    gens = np.stack(twist_generators_mod_k(g, k))
    unit_list = [u for u in range(1, k) if math.gcd(u, k) == 1]
    units = np.array(unit_list if mode == "classes" else [], dtype=np.int64)
    start = k ** (n - 1)  # code of e1 = (1, 0, ..., 0); also its class minimum
    if which == "numba":
        count = int(
            _bfs_numba(
                gens,
                np.int64(k),
                units,
                np.int64(start),
                np.int64(expected),
                np.int64(size),
                np.int64(1 if mode == "classes" else 0),
            )
        )
    else:
        count = _bfs_numpy(gens, k, n, start, units, size, expected, mode == "classes")
    if count < 0 or count > expected:
        raise InternalCheckError(
            "orbit enumeration exceeded the closed-form count; defect in the action"
        )
    return OrbitResult(k, g, mode, count, count, _GENERATOR_SET_ID)


def _bfs_numpy(gens, k, n, start, units, size, expected, class_mode):
    visited = np.zeros(size, dtype=bool)
    visited[start] = True
    frontier = np.array([start], dtype=np.int64)
    count = 1
    pow_vec = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    while frontier.size:
        coords = (frontier[None, :] // pow_vec[:, None]) % k
        chunks = []
        for gi in range(gens.shape[0]):
            img = (gens[gi] @ coords) % k
            if class_mode:
                best = None
                for u in units:
                    codes_u = pow_vec @ ((u * img) % k)
                    best = codes_u if best is None else np.minimum(best, codes_u)
                codes = best
            else:
                codes = pow_vec @ img
            chunks.append(codes)
        merged = np.unique(np.concatenate(chunks))
        fresh = merged[~visited[merged]]
        visited[fresh] = True
        count += int(fresh.size)
        if count > expected:
            return -1
        frontier = fresh
    return count


@njit(cache=True)
def _bfs_numba(gens, k, units, start, expected, size, class_mode):
    visited = np.zeros(size, dtype=np.uint8)
    queue = np.empty(expected, dtype=np.int64)
    m = gens.shape[0]
    n = gens.shape[1]
    t = units.shape[0]
    coords = np.empty(n, dtype=np.int64)
    img = np.empty(n, dtype=np.int64)
    visited[start] = 1
    queue[0] = start
    head = 0
    tail = 1
    while head < tail:
        code = queue[head]
        head += 1
        c = code
        for i in range(n - 1, -1, -1):
            coords[i] = c % k
            c //= k
        for gi in range(m):
            for i in range(n):
                acc = np.int64(0)
                for j in range(n):
                    acc += gens[gi, i, j] * coords[j]
                img[i] = acc % k
            if class_mode == 1:
                best = size
                for ui in range(t):
                    u = units[ui]
                    code_u = np.int64(0)
                    for i in range(n):
                        code_u = code_u * k + (u * img[i]) % k
                    if code_u < best:
                        best = code_u
                new_code = best
            else:
                new_code = np.int64(0)
                for i in range(n):
                    new_code = new_code * k + img[i]
            if visited[new_code] == 0:
                visited[new_code] = 1
                if tail >= expected:
                    return np.int64(-1)
                queue[tail] = new_code
                tail += 1
    return tail
