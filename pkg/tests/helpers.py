"""Independent brute-force oracles used to compute and freeze expected values.

Everything here is deliberately naive: Laplace cofactor expansion instead of
fraction-free elimination, itertools enumeration instead of closed forms, and
dict-based breadth-first search instead of the bitmap engine.  Slow is fine;
these only run on small instances.
"""

import math
from itertools import product


def poly_add(p, q):
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_neg(p):
    return [-a for a in p]


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return out


def _det_poly_cells(cells):
    n = len(cells)
    if n == 1:
        return list(cells[0][0])
    total = []
    for i in range(n):
        if not cells[i][0]:
            continue
        minor = [row[1:] for j, row in enumerate(cells) if j != i]
        term = poly_mul(cells[i][0], _det_poly_cells(minor))
        total = poly_add(total, term if i % 2 == 0 else poly_neg(term))
    return total


def laplace_char_poly(entries):
    """Coefficients of det(xI - A), lowest first, by cofactor expansion."""
    n = len(entries)
    cells = []
    for i in range(n):
        row = []
        for j in range(n):
            c = -entries[i][j]
            row.append([c, 1] if i == j else ([c] if c else []))
        cells.append(row)
    return tuple(_det_poly_cells(cells))


def laplace_det(entries):
    """Integer determinant by first-column cofactor expansion."""
    n = len(entries)
    if n == 1:
        return entries[0][0]
    total = 0
    for i in range(n):
        if entries[i][0] == 0:
            continue
        minor = [row[1:] for j, row in enumerate(entries) if j != i]
        term = entries[i][0] * laplace_det(minor)
        total += term if i % 2 == 0 else -term
    return total


def adjugate(entries):
    """Adjugate matrix: transposed cofactors; inverse when det = 1."""
    n = len(entries)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [entries[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = laplace_det(minor) if n > 1 else 1
            out[j][i] = cof if (i + j) % 2 == 0 else -cof
    return [list(r) for r in out]


def naive_mat_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][l] * b[l][j] for l in range(n)) for j in range(n)]
        for i in range(n)
    ]


def brute_count_primitive(k, d):
    """Count vectors in (Z_k)^d whose entries are coprime to k jointly."""
    return sum(
        1 for v in product(range(k), repeat=d) if math.gcd(k, *v) == 1
    )


def brute_totient(k):
    return sum(1 for u in range(1, k + 1) if math.gcd(u, k) == 1)


def brute_orbit_size(gen_matrices, k, n, mode, start=None):
    """Set-based BFS over tuples; generator matrices given as row tuples."""
    units = [u for u in range(1, k) if math.gcd(u, k) == 1]

    def canon(v):
        best = None
        for u in units:
            cand = tuple((u * x) % k for x in v)
            if best is None or cand < best:
                best = cand
        return best

    if start is None:
        start = (1,) + (0,) * (n - 1)
    if mode == "classes":
        start = canon(start)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for m in gen_matrices:
                w = tuple(
                    sum(row[j] * v[j] for j in range(n)) % k for row in m
                )
                if mode == "classes":
                    w = canon(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen)
