"""Command-line interface: inspect matrices, criteria, series, orbits, reductions.

Output is JSON by default (``--plain`` for aligned text).  Exit codes: 0 on
success, 1 when a verified property fails (non-transitive orbit, coset system
failure, normality violation, internal check), 2 on usage errors (bad words,
bad tuples, out-of-range indices, malformed flags).

For a fixed seed and flags the JSON output is byte-identical across runs, with
one documented exception: the ``millis`` timing field of ``orbit``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    GeneratorRangeError,
    InternalCheckError,
    LiftCoverError,
    MembershipError,
    NotSymplecticError,
    ShapeError,
    WordSyntaxError,
)
from .linalg import ResidueMatrix, mat_mul, symplectic_inverse
from .words import MCGWord, format_word, parse_word, psi, psi_k
from .criteria import (
    in_level_k,
    in_stab_e1,
    index_lmod,
    index_stab_e1,
    lift_report,
)
from .series import iota_extension_data, verify_coset_system
from .orbits import (
    ORBIT_MODES,
    expected_orbit_size,
    orbit_primitive_classes,
    orbit_primitive_vectors,
)
from .reduction import describe_factors, express_via_generators, reduce_to_eta
from .sampling import (
    random_level_word,
    random_liftable_word,
    random_stab_word,
    synthetic_stab_member,
)
from .penner import (
    AdmissibleTuple,
    build_word,
    homological_dilatation,
    penner_liftable,
    perron_matrix,
    stretch_factor,
)


@dataclass(frozen=True)
class RunConfig:
    """Resolved run parameters shared by the subcommands."""

    genus: int
    mod_k: int | None
    seed: int
    samples: int
    tolerance: float
    state_cap: int
    generator_files: tuple
    plain: bool


def _config(args) -> RunConfig:
    return RunConfig(
        genus=getattr(args, "genus", 1),
        mod_k=getattr(args, "mod_k", None),
        seed=getattr(args, "seed", 0),
        samples=getattr(args, "samples", 100),
        tolerance=getattr(args, "tol", 1e-9),
        state_cap=getattr(args, "cap", 10**7),
        generator_files=tuple(getattr(args, "gen_file", None) or ()),
        plain=getattr(args, "plain", False),
    )


def _matrix_payload(m) -> list:
    return [list(row) for row in m.entries]


def _load_generator_words(paths, genus: int) -> list:
    words = []
    for path in paths:
        with open(path, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                words.append(parse_word(line, genus))
    return words


def cmd_matrix(args):
    cfg = _config(args)
    w = parse_word(args.word, cfg.genus)
    if cfg.mod_k is None:
        m = psi(w)
    else:
        m = psi_k(w, cfg.mod_k)
    payload = {
        "g": cfg.genus,
        "word": format_word(w),
        "mod_k": cfg.mod_k,
        "matrix": _matrix_payload(m),
    }
    return payload, False


def cmd_lift(args):
    cfg = _config(args)
    if cfg.mod_k is None:
        raise ValueError("lift needs --mod-k")
    w = parse_word(args.word, cfg.genus)
    report = lift_report(w, cfg.mod_k)
    payload = {
        "g": cfg.genus,
        "k": report.k,
        "word": format_word(w),
        "in_level_k": report.in_level_k,
        "in_stab_e1": report.in_stab_e1,
        "in_lmod": report.in_lmod,
        "in_umod": report.in_umod,
        "quotient_class": report.quotient_class,
        "witness": list(report.witness) if report.witness else None,
    }
    return payload, False


def cmd_series(args):
    cfg = _config(args)
    if cfg.mod_k is None:
        raise ValueError("series needs --mod-k")
    g, k = cfg.genus, cfg.mod_k
    cosets_ok = verify_coset_system(k, g)
    rng = random.Random(cfg.seed)
    level_violations = 0
    stab_violations = 0
    for _ in range(cfg.samples):
        w = random_liftable_word(rng, g, k)
        v = random_level_word(rng, g, k)
        conjugated = w * v * w.inverse()
        if not in_level_k(psi_k(conjugated, k)):
            level_violations += 1
        mw = psi_k(random_liftable_word(rng, g, k), k)
        if g == 2:
            mv = synthetic_stab_member(rng, k)
        else:
            mv = psi_k(random_stab_word(rng, g), k)
        conj = mat_mul(mat_mul(mw, mv), symplectic_inverse(mw))
        if not in_stab_e1(conj):
            stab_violations += 1
    payload = {
        "g": g,
        "k": k,
        "indices": {"lmod": index_lmod(g, k), "stab_e1": index_stab_e1(g, k)},
        "cosets_ok": cosets_ok,
        "iota_index": None,
        "iota_equals_lmod": None,
        "normality": {
            "samples": cfg.samples,
            "level_violations": level_violations,
            "stab_violations": stab_violations,
        },
        "seed": cfg.seed,
    }
    if k >= 3:
        data = iota_extension_data(k)
        payload["iota_index"] = data.index
        payload["iota_equals_lmod"] = data.lmod_equals_closure
    violation = (not cosets_ok) or level_violations or stab_violations
    return payload, bool(violation)


def cmd_orbit(args):
    cfg = _config(args)
    if cfg.mod_k is None:
        raise ValueError("orbit needs --mod-k")
    g, k = cfg.genus, cfg.mod_k
    mode = args.mode
    runner = orbit_primitive_classes if mode == "classes" else orbit_primitive_vectors
    start = time.perf_counter()
    result = runner(k, g, cap=cfg.state_cap)
    millis = int(round((time.perf_counter() - start) * 1000))
    expected = expected_orbit_size(k, g, mode)
    payload = {
        "k": k,
        "g": g,
        "mode": mode,
        "orbit_size": result.orbit_size,
        "expected": expected,
        "transitive": result.orbit_size == expected,
        "millis": millis,
    }
    return payload, not payload["transitive"]


def cmd_reduce(args):
    cfg = _config(args)
    if cfg.mod_k is None:
        raise ValueError("reduce needs --mod-k")
    k = cfg.mod_k
    parts = [p.strip() for p in args.entries.split(",")]
    if len(parts) != 16:
        raise ValueError(f"need 16 comma-separated residues, got {len(parts)}")
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"entries must be integers: {exc}") from None
    rows = [values[i * 4 : (i + 1) * 4] for i in range(4)]
    m = ResidueMatrix(rows, k)
    witness = reduce_to_eta(m)
    payload = {
        "k": k,
        "input": _matrix_payload(witness.input),
        "m1": _matrix_payload(witness.m1),
        "m2": _matrix_payload(witness.m2),
        "m3": _matrix_payload(witness.m3),
        "m4": _matrix_payload(witness.m4),
        "alpha": witness.alpha,
        "beta": witness.beta,
        "residual": _matrix_payload(witness.residual),
        "verified": True,
    }
    if cfg.generator_files:
        generators = _load_generator_words(cfg.generator_files, 2)
        factorization = express_via_generators(m, generators)
        payload["factors"] = describe_factors(factorization)
    return payload, False


def _parse_tuple(text: str) -> AdmissibleTuple:
    try:
        p_text, kl_text = text.split(";")
    except ValueError:
        raise ValueError(
            'tuple must look like "p1,p2;k1:l1,k2:l2" (c exponents; handle pairs)'
        ) from None
    p = tuple(int(x) for x in p_text.split(",") if x.strip() != "")
    pairs = []
    for chunk in kl_text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            k_val, l_val = chunk.split(":")
        except ValueError:
            raise ValueError(f"handle pair {chunk!r} must look like k:l") from None
        pairs.append((int(k_val), int(l_val)))
    g = len(pairs)
    return AdmissibleTuple(g, p, tuple(pairs))


def cmd_penner(args):
    cfg = _config(args)
    t = _parse_tuple(args.tuple)
    if getattr(args, "genus", None) is not None and args.genus != t.g:
        raise ValueError(
            f"--genus {args.genus} does not match tuple genus {t.g}"
        )
    w = build_word(t)
    payload = {
        "g": t.g,
        "tuple": args.tuple,
        "mod_k": cfg.mod_k,
        "word": format_word(w),
        "stretch": stretch_factor(t, cfg.tolerance),
        "hom_dilatation": homological_dilatation(t, cfg.tolerance),
        "liftable": penner_liftable(t, cfg.mod_k) if cfg.mod_k else None,
        "perron_size": perron_matrix(t).n,
    }
    return payload, False


def _render_plain(payload, indent=""):
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_render_plain(value, indent + "  "))
        elif (
            isinstance(value, list)
            and value
            and all(isinstance(row, (list, tuple)) for row in value)
        ):
            lines.append(f"{indent}{key}:")
            width = max(
                (len(str(x)) for row in value for x in row), default=1
            )
            for row in value:
                lines.append(
                    indent + "  " + " ".join(str(x).rjust(width) for x in row)
                )
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def _emit(payload, plain: bool) -> None:
    if plain:
        print("\n".join(_render_plain(payload)))
    else:
        print(json.dumps(payload, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liftcover",
        description="Lifting criteria, quotient series, orbits, reductions, and "
        "stretch factors for twist words under cyclic covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, genus=True, mod_k=True, mod_k_required=False):
        if genus:
            p.add_argument("--genus", type=int, default=2, help="ambient genus")
        if mod_k:
            p.add_argument(
                "--mod-k",
                dest="mod_k",
                type=int,
                default=None,
                required=mod_k_required,
                help="cover degree / reduction modulus",
            )
        style = p.add_mutually_exclusive_group()
        style.add_argument(
            "--json", action="store_true", default=True, help="JSON output (default)"
        )
        style.add_argument(
            "--plain", action="store_true", default=False, help="aligned text output"
        )

    p_matrix = sub.add_parser("matrix", help="homology image of a word")
    p_matrix.add_argument("--word", required=True, help="twist word")
    add_common(p_matrix)
    p_matrix.set_defaults(func=cmd_matrix)

    p_lift = sub.add_parser("lift", help="membership report for a word")
    p_lift.add_argument("--word", required=True, help="twist word")
    add_common(p_lift, mod_k_required=True)
    p_lift.set_defaults(func=cmd_lift)

    p_series = sub.add_parser("series", help="indices, cosets, involution data")
    add_common(p_series, mod_k_required=True)
    p_series.add_argument("--seed", type=int, default=0, help="sampling seed")
    p_series.add_argument(
        "--samples", type=int, default=100, help="conjugation trials"
    )
    p_series.set_defaults(func=cmd_series)

    p_orbit = sub.add_parser("orbit", help="orbit of e1 (vectors or classes)")
    add_common(p_orbit, mod_k_required=True)
    p_orbit.add_argument(
        "--mode", choices=ORBIT_MODES, default="classes", help="orbit flavor"
    )
    p_orbit.add_argument(
        "--cap", type=int, default=10**7, help="maximum states to visit"
    )
    p_orbit.set_defaults(func=cmd_orbit)

    p_reduce = sub.add_parser("reduce", help="clearing witness for a stab member")
    p_reduce.add_argument(
        "entries", help="16 comma-separated residues, row-major 4x4"
    )
    add_common(p_reduce, genus=False, mod_k_required=True)
    p_reduce.add_argument(
        "--gen-file",
        action="append",
        default=None,
        help="file of generator words (one per line) used to resolve factors",
    )
    p_reduce.set_defaults(func=cmd_reduce)

    p_penner = sub.add_parser("penner", help="stretch factor of a tuple word")
    p_penner.add_argument(
        "--tuple",
        required=True,
        help='exponents "p1,..;k1:l1,.." (c exponents; handle pairs)',
    )
    p_penner.add_argument("--genus", type=int, default=None, help="cross-check genus")
    p_penner.add_argument(
        "--mod-k", dest="mod_k", type=int, default=None, help="cover degree"
    )
    p_penner.add_argument("--tol", type=float, default=1e-9, help="spectral tolerance")
    style = p_penner.add_mutually_exclusive_group()
    style.add_argument("--json", action="store_true", default=True)
    style.add_argument("--plain", action="store_true", default=False)
    p_penner.set_defaults(func=cmd_penner)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, violation = args.func(args)
    except InternalCheckError as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 1
    except (
        WordSyntaxError,
        GeneratorRangeError,
        ShapeError,
        MembershipError,
        NotSymplecticError,
        CapExceededError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, getattr(args, "plain", False))
    return 1 if violation else 0


if __name__ == "__main__":
    sys.exit(main())
