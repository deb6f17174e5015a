"""Command-line interface.

Subcommands: weights, fusion, bgg, ind, tensor, taft, verify.  All
outputs are deterministic: canonical JSON bytes and canonically
ordered text, so identical inputs give identical files.

Exit codes: 0 success, 2 invalid input, 3 mathematical inconsistency,
4 oracle verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bgg import (
    BGGReport,
    NON_SIMPLE,
    SIMPLE_PROJECTIVE,
    bgg_matrices,
    classify_vermas,
    decompose_into_simples,
    ind_into_projectives,
    summand_sort_key,
    tensor_projectives,
    ungraded_bgg,
)
from .errors import (
    DoubleCharError,
    InconsistencyError,
    InputError,
    OracleError,
    SpanError,
)
from .graded import GradedChar, KElement
from .groups import DEFAULT_MAX_ORDER
from .jsonio import (
    ML_KIND,
    aliases_to_json,
    canonical_dumps,
    load_aliases_file,
    load_group_file,
    load_profile_file,
    load_simples_file,
    profile_to_json,
    simples_to_json,
    write_json,
    write_text,
)
from .laurent import LaurentInt
from .nichols import coverma_char, ind_char, verify_duality_identities, verma_char
from .taft import (
    TaftParams,
    build_profile_and_table,
    explicit_matrices,
)
from .weights import WeightSystem

CACHE_ENV = "DOUBLECHAR_CACHE_DIR"


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
        return 0
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OracleError as exc:
        print(f"oracle verification failed: {exc}", file=sys.stderr)
        return 4
    except SpanError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        if exc.residual is not None:
            print("residual character:", file=sys.stderr)
            print(canonical_dumps(exc.residual.to_json()), file=sys.stderr, end="")
        return 3
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 3
    except DoubleCharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="doublechar",
        description="Exact graded characters and reciprocity data for "
        "doubles of bosonized Nichols algebras over finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="list all weights with dimensions and duals")
    _common(p, out=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("fusion", help="decompose the product of two weights")
    _common(p, out=True)
    p.add_argument("left", help="weight label or alias")
    p.add_argument("right", help="weight label or alias")
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("bgg", help="full reciprocity report")
    _common(p, profile=True, simples=True, out=True, ungraded=True)
    p.set_defaults(func=cmd_bgg)

    p = sub.add_parser("ind", help="decompose an induced module into projectives")
    _common(p, profile=True, simples=True, out=True)
    p.add_argument("weight", help="weight label or alias")
    p.set_defaults(func=cmd_ind)

    p = sub.add_parser("tensor", help="tensor two projectives into induced modules")
    _common(p, profile=True, simples=True, out=True)
    p.add_argument("left", help="weight label or alias")
    p.add_argument("right", help="weight label or alias")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("taft", help="generate and verify the cyclic rank-one case")
    p.add_argument("n", type=int, help="order of the cyclic group (2..12)")
    p.add_argument("--out", help="directory for the generated files")
    p.add_argument("--cache-dir", help="character table cache directory")
    p.set_defaults(func=cmd_taft)

    p = sub.add_parser("verify", help="run every exact identity on the given data")
    _common(p, profile=True, simples=True)
    p.set_defaults(func=cmd_verify)

    return parser


def _common(p, profile=False, simples=False, out=False, ungraded=False):
    p.add_argument("--group", required=True, help="group JSON file")
    if profile:
        p.add_argument("--profile", required=True, help="profile or ml_matrix JSON file")
    if simples:
        p.add_argument("--simples", help="simple-table JSON file")
    p.add_argument("--aliases", help="alias JSON file for display names")
    if out:
        p.add_argument("--out", help="output path (directory for bgg)")
    if ungraded:
        p.add_argument(
            "--ungraded", action="store_true", help="collapse all gradings at t=1"
        )
    p.add_argument("--cache-dir", help="character table cache directory")
    p.add_argument(
        "--max-group-order",
        type=int,
        default=DEFAULT_MAX_ORDER,
        help=f"refuse groups larger than this (default {DEFAULT_MAX_ORDER})",
    )


def _cache_dir(args):
    return getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV) or None


def _load_system(args):
    group = load_group_file(args.group, getattr(args, "max_group_order", DEFAULT_MAX_ORDER))
    return WeightSystem(group, cache_dir=_cache_dir(args))


def _names(args, system):
    if getattr(args, "aliases", None):
        aliases = load_aliases_file(args.aliases, system)
    else:
        aliases = {}
    return {w.label: aliases.get(w.label, w.label) for w in system.weights}


def _resolve_weight(arg, system, names):
    try:
        return system.parse_label(arg)
    except InputError:
        pass
    for label, name in names.items():
        if name == arg:
            return system.by_label[label]
    raise InputError(f"unknown weight {arg!r}; use a label like g0r0 or an alias")


def _coeff_prefix(c):
    """How a Laurent coefficient reads in front of a module symbol."""
    if c == LaurentInt.one():
        return ""
    if len(c.terms) == 1:
        ((d, k),) = c.terms.items()
        parts = []
        if k != 1:
            parts.append(str(k))
        if d != 0:
            parts.append("t" if d == 1 else f"t^{d}")
        return " ".join(parts) + " "
    return f"({c}) "


def _sorted_summands(system, row):
    return sorted(row.items(), key=lambda it: summand_sort_key(system, it[0], it[1]))


def _filtration_line(system, names, mu, row, left="P", right="M"):
    rhs = " + ".join(
        f"{_coeff_prefix(c)}ch {right}({names[lam.label]})"
        for lam, c in _sorted_summands(system, row)
    )
    return f"ch {left}({names[mu.label]}) = {rhs}"


# ---- weights ----


def cmd_weights(args):
    system = _load_system(args)
    names = _names(args, system)
    rows = []
    for w in system.weights:
        rows.append(
            {
                "label": w.label,
                "alias": names[w.label],
                "class_size": len(system.conj.classes[w.class_index]),
                "irrep_degree": system.tables[w.class_index].degrees[w.irrep_index],
                "dim": system.dim(w),
                "dual": system.dual(w).label,
            }
        )
    for r in rows:
        print(
            f"{r['label']}  {r['alias']}  class_size={r['class_size']}  "
            f"degree={r['irrep_degree']}  dim={r['dim']}  dual={r['dual']}"
        )
    total = sum(r["dim"] ** 2 for r in rows)
    print(f"{len(rows)} weights; sum of squared dimensions = {total}")
    if args.out:
        write_json(
            args.out,
            {
                "format": 1,
                "kind": "weight_census",
                "group_order": system.group.order,
                "weights": rows,
                "sum_dim_sq": total,
            },
        )


# ---- fusion ----


def cmd_fusion(args):
    system = _load_system(args)
    names = _names(args, system)
    a = _resolve_weight(args.left, system, names)
    b = _resolve_weight(args.right, system, names)
    result = system.fusion(a, b)
    rhs = " + ".join(
        (f"{m} {names[w.label]}" if m != 1 else names[w.label])
        for w, m in sorted(result.items())
    )
    print(f"{names[a.label]} (x) {names[b.label]} = {rhs}")
    if args.out:
        write_json(
            args.out,
            {
                "format": 1,
                "kind": "fusion",
                "left": a.label,
                "right": b.label,
                "result": [{"w": w.label, "m": m} for w, m in sorted(result.items())],
            },
        )


# ---- bgg ----


def _collapse_laurent(c):
    return LaurentInt.monomial(c.eval_one())


def _collapse_report(report):
    def cmap(m):
        return {
            row: {col: _collapse_laurent(c) for col, c in m[row].items()}
            for row in m
        }

    chars = None
    if report.projective_chars is not None:
        chars = {
            w: GradedChar({0: ch.eval_one()}) for w, ch in report.projective_chars.items()
        }
    coverma = None
    if report.projective_coverma is not None:
        coverma = cmap(report.projective_coverma)
    return BGGReport(
        report.system,
        report.weights,
        report.n_top,
        cmap(report.verma_simple),
        cmap(report.projective_verma),
        coverma,
        chars,
        cmap(report.cartan),
        report.flags,
    )


def _render_report(report, names):
    system = report.system
    lines = []
    lines.append(f"weights: {len(report.weights)}")
    lines.append(f"top degree: {report.n_top}")
    lines.append("")
    for mu in report.weights:
        lines.append(
            _filtration_line(system, names, mu, report.projective_verma[mu])
        )
    lines.append("")
    simple = [names[w.label] for w in report.weights if report.flags[w] == SIMPLE_PROJECTIVE]
    lines.append(
        f"simple projective Vermas ({len(simple)}): " + ", ".join(simple)
    )
    return "\n".join(lines) + "\n"


def _load_report(args, system):
    kind, data = load_profile_file(args.profile, system)
    if kind == ML_KIND:
        return ungraded_bgg(data, system), None, None
    if not getattr(args, "simples", None):
        raise InputError("a graded profile needs --simples with the simple table")
    table = load_simples_file(args.simples, system)
    return bgg_matrices(data, table), data, table


def cmd_bgg(args):
    system = _load_system(args)
    names = _names(args, system)
    report, profile, table = _load_report(args, system)
    if args.ungraded:
        report = _collapse_report(report)
    text = _render_report(report, names)
    print(text, end="")
    if args.out:
        write_json(os.path.join(args.out, "report.json"), report.to_json())
        write_text(os.path.join(args.out, "report.txt"), text)


# ---- ind ----


def cmd_ind(args):
    system = _load_system(args)
    names = _names(args, system)
    report, profile, table = _load_report(args, system)
    if profile is None:
        raise InputError("induced-module decomposition needs a graded profile")
    mu = _resolve_weight(args.weight, system, names)
    out = ind_into_projectives(profile, table, mu, report=report)
    rhs = " + ".join(
        f"{_coeff_prefix(c)}ch P({names[lam.label]})"
        for lam, c in _sorted_summands(system, out)
    )
    dim = profile.dim_b ** 2 * system.dim(mu)
    print(f"ch Ind({names[mu.label]}) = {rhs}")
    print(f"dimension check: {dim} = {dim}")
    if args.out:
        write_json(
            args.out,
            {
                "format": 1,
                "kind": "ind_decomposition",
                "weight": mu.label,
                "projectives": {
                    lam.label: c.to_json() for lam, c in sorted(out.items())
                },
                "dim": dim,
            },
        )


# ---- tensor ----


def cmd_tensor(args):
    system = _load_system(args)
    names = _names(args, system)
    report, profile, table = _load_report(args, system)
    if profile is None:
        raise InputError("tensor expansion needs a graded profile")
    mu = _resolve_weight(args.left, system, names)
    nu = _resolve_weight(args.right, system, names)
    out = tensor_projectives(report, profile, mu, nu)
    rhs = " + ".join(
        f"{_coeff_prefix(c)}Ind({names[w.label]})"
        for w, c in _sorted_summands(system, out)
    )
    dim = report.dim_projective(mu, profile.dim_b) * report.dim_projective(
        nu, profile.dim_b
    )
    print(f"P({names[mu.label]}) (x) P({names[nu.label]}) = {rhs}")
    print(f"dimension check: {dim} = {dim}")
    if args.out:
        write_json(
            args.out,
            {
                "format": 1,
                "kind": "tensor_expansion",
                "left": mu.label,
                "right": nu.label,
                "induced": {w.label: c.to_json() for w, c in sorted(out.items())},
                "dim": dim,
            },
        )


# ---- taft ----


def cmd_taft(args):
    n = args.n
    if not 2 <= n <= 12:
        raise InputError("the rank-one generator supports 2 <= n <= 12")
    cache = args.cache_dir or os.environ.get(CACHE_ENV) or None
    params = TaftParams(n, cache_dir=cache)
    system = params.system
    profile, table = build_profile_and_table(params)
    aliases = params.aliases()
    names = {w.label: aliases[w.label] for w in system.weights}

    # matrix oracle for every weight, and agreement with the engine
    report = bgg_matrices(profile, table)
    for r, s in params.all_rs():
        vm = explicit_matrices(params, r, s)
        lam = params.weight_of(r, s)
        expected = {
            params.weight_of(fr, fs): LaurentInt({shift: 1})
            for (fr, fs), shift in vm.series
        }
        if report.verma_simple[lam] != expected:
            raise OracleError(
                f"engine decomposition of the Verma of ({r},{s}) disagrees "
                f"with the matrix composition series"
            )
    for lam in system.weights:
        res = verify_duality_identities(profile, lam)
        if not all(res.values()):
            failed = ", ".join(k for k, v in res.items() if not v)
            raise OracleError(f"duality identities failed for {lam}: {failed}")
    expected_simple = {params.weight_of(r, (1 - r) % n) for r in range(n)}
    flagged = {w for w, f in report.flags.items() if f == SIMPLE_PROJECTIVE}
    if flagged != expected_simple:
        raise OracleError(
            "simple projective classification does not match the rank-one rule"
        )

    print(f"all {n * n} weights verified; {len(flagged)} simple projective Vermas")
    if args.out:
        group_ref = "group.json"
        write_json(os.path.join(args.out, "group.json"), system.group.to_json())
        write_json(
            os.path.join(args.out, "profile.json"),
            profile_to_json(profile, group_ref),
        )
        write_json(os.path.join(args.out, "simples.json"), simples_to_json(table))
        write_json(os.path.join(args.out, "aliases.json"), aliases_to_json(aliases))
        write_json(os.path.join(args.out, "report.json"), report.to_json())
        write_text(
            os.path.join(args.out, "report.txt"), _render_report(report, names)
        )


# ---- verify ----


def cmd_verify(args):
    system = _load_system(args)
    kind, data = load_profile_file(args.profile, system)
    if kind == ML_KIND:
        report = ungraded_bgg(data, system)
        print("ok: composition matrix admits consistent dimensions")
        for mu in report.weights:
            for lam in report.weights:
                left = report.projective_verma[mu].get(lam, LaurentInt.zero())
                right = report.verma_simple[lam].get(mu, LaurentInt.zero())
                if left != right:
                    raise InconsistencyError(
                        f"ungraded reciprocity fails at ({mu}, {lam})"
                    )
        print("ok: ungraded reciprocity transpose")
        _check_cartan(report)
        print("ok: Cartan matrix symmetric and equal to the squared "
              "decomposition matrix")
        return
    profile = data
    for lam in system.weights:
        res = verify_duality_identities(profile, lam)
        if not all(res.values()):
            failed = ", ".join(k for k, v in res.items() if not v)
            raise InconsistencyError(f"duality identities failed for {lam}: {failed}")
    print(f"ok: duality identities ({len(system.weights)} weights)")
    if not getattr(args, "simples", None):
        return
    table = load_simples_file(args.simples, system)
    report = bgg_matrices(profile, table)
    print("ok: costandard filtration consistency and maximal-shift law")
    for lam in system.weights:
        rebuilt = GradedChar.zero()
        for mu, coeff in report.verma_simple[lam].items():
            rebuilt = rebuilt + table[mu].scale(coeff)
        if rebuilt != verma_char(profile, lam):
            raise InconsistencyError(
                f"simple-basis reassembly of the Verma of {lam} failed"
            )
    print("ok: simple-basis reassembly")
    for mu in system.weights:
        for lam in system.weights:
            left = report.projective_verma[mu].get(lam, LaurentInt.zero())
            right = report.verma_simple[lam].get(mu, LaurentInt.zero()).bar()
            if left != right:
                raise InconsistencyError(
                    f"graded reciprocity fails at ({mu}, {lam})"
                )
            if left and left.min_degree() < 0:
                raise InconsistencyError(
                    f"projective filtration coefficient at ({mu}, {lam}) "
                    f"has a negative degree"
                )
        diag = report.projective_verma[mu].get(mu, LaurentInt.zero())
        if diag.terms.get(0) != 1:
            raise InconsistencyError(
                f"projective filtration of {mu} does not start with its own Verma"
            )
    print("ok: graded reciprocity transpose and leading entries")
    _check_cartan(report)
    print("ok: Cartan matrix symmetric and equal to the squared decomposition matrix")
    for mu in system.weights:
        ind_into_projectives(profile, table, mu, report=report)
    print("ok: induced modules decompose into projectives")


def _check_cartan(report):
    weights = report.weights
    ev = {
        lam: {mu: c.eval_one() for mu, c in report.verma_simple[lam].items()}
        for lam in weights
    }
    for mu in weights:
        for nu in weights:
            c1 = report.cartan[mu].get(nu, LaurentInt.zero()).eval_one()
            c2 = report.cartan[nu].get(mu, LaurentInt.zero()).eval_one()
            if c1 != c2:
                raise InconsistencyError(
                    f"Cartan matrix is not symmetric at ({mu}, {nu})"
                )
            dtd = sum(
                ev[lam].get(mu, 0) * ev[lam].get(nu, 0) for lam in weights
            )
            if c1 != dtd:
                raise InconsistencyError(
                    f"Cartan entry ({mu}, {nu}) differs from the squared "
                    f"decomposition matrix"
                )


if __name__ == "__main__":
    sys.exit(main())
