"""Command-line front end: ``pamona <command> ...``.

Exit codes: 0 success or affirmative verdict, 1 negative verdict,
2 usage or format error, 3 size cap exceeded.
"""
import argparse
import json
import os
import sys

from . import construct as C
from . import core, pam, props
from .census import census, default_jobs, pa_classes
from .errors import OrderTooLarge, PamonaError, SizeCapExceeded
from .formats import emit_dot, emit_semigroup, parse_semigroup
from .isotest import anti_isomorphisms, isomorphisms, pa_isomorphic
from .sublat import sub_lattice, subi_lattice

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int(args, i, what):
    try:
        return int(args[i])
    except (IndexError, ValueError):
        raise UsageError(f"expected an integer {what}") from None


def build(spec):
    """Construct a semigroup from a 'gen' argument list; returns (semigroup, rest)."""
    if not spec:
        raise UsageError("missing construction name")
    kind, rest = spec[0], spec[1:]
    simple = {
        "cyclic": C.cyclic_group, "null": C.null_semigroup, "chain": C.chain,
        "leftzero": C.left_zero, "rightzero": C.right_zero, "symmetric": C.symmetric_group,
        "dihedral": C.dihedral_group, "antichain": C.antichain_with_zero,
    }
    if kind in simple:
        return simple[kind](_int(rest, 0, "size")), rest[1:]
    if kind == "mn":
        return C.monogenic_mn(_int(rest, 0, "index"), _int(rest, 1, "period")), rest[2:]
    if kind == "brandt5":
        return C.brandt5(), rest
    if kind == "quaternion":
        return C.quaternion_group(), rest
    if kind == "fig1":
        return C.figure1_truncation(_int(rest, 0, "level")), rest[1:]
    if kind == "inflate":
        G, rest = build(rest)
        return C.inflate_at_identity(G), rest
    if kind in ("zero", "identity"):
        S, rest = build(rest)
        return (C.adjoin_zero(S) if kind == "zero" else C.adjoin_identity(S)), rest
    if kind == "munn":
        if not rest:
            raise UsageError("munn needs a semilattice file")
        return C.munn(parse_semigroup(rest[0])).semigroup, rest[1:]
    if kind == "product":
        if len(rest) < 2:
            raise UsageError("product needs two files")
        return C.direct_product(parse_semigroup(rest[0]), parse_semigroup(rest[1])), rest[2:]
    if kind == "file":
        return parse_semigroup(rest[0]), rest[1:]
    raise UsageError(f"unknown construction {kind!r}")


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_gen(a):
    S, rest = build(a.spec)
    if rest:
        raise UsageError(f"unexpected arguments: {' '.join(rest)}")
    _write(emit_semigroup(S), a.output)
    return EXIT_OK


def cmd_analyze(a):
    S = parse_semigroup(a.file)
    info = props.summary(S)
    if a.json:
        print(json.dumps(info, sort_keys=True, default=str))
        return EXIT_OK
    g = core.green(S)
    print(f"order {S.order}, {info['idempotents']} idempotents, {len(g.d_classes)} D-classes")
    for key in sorted(info):
        if key in ("order", "idempotents"):
            continue
        print(f"  {key}: {info[key]}")
    for i, d in enumerate(g.d_classes):
        print(f"  D{i}: {props.members_text(S, d)}")
    if info["inverse"]:
        arch = props.archimedean_family(S)
        print(f"  archimedean (finite, vacuous): pseudo={arch.pseudo} faintly={arch.faintly} "
              f"quasi={arch.quasi}; nongroup [[x]] combinatorial: {arch.nongroup_monogenic_combinatorial}")
    return EXIT_OK


def cmd_lattice(a):
    S = parse_semigroup(a.file)
    L = subi_lattice(S) if a.inverse else sub_lattice(S)
    if a.dot:
        sys.stdout.write(emit_dot(L))
    else:
        print(f"{len(L)} members")
        for m in L.sets():
            print("  " + props.members_text(S, m))
    return EXIT_OK


def cmd_pa(a):
    S = parse_semigroup(a.file)
    M = pam.pai_monoid(S, a.cap) if a.inverse_only else pam.pa_monoid(S, a.cap)
    print(f"|{'PAi' if a.inverse_only else 'PA'}(S)| = {len(M)}")
    print(f"idempotents = {len(M.idempotents())}")
    if a.table:
        _write(emit_semigroup(M.as_semigroup()), a.table)
    return EXIT_OK


def cmd_iso(a):
    S, T = parse_semigroup(a.file1), parse_semigroup(a.file2)
    gen = anti_isomorphisms if a.anti else isomorphisms
    w = next(gen(S, T, limit=1), None)
    if w is None:
        print("not " + ("anti-isomorphic" if a.anti else "isomorphic"))
        return EXIT_NO
    print(("anti-isomorphic" if a.anti else "isomorphic") + ": " +
          " ".join(f"{S.label(i)}>{T.label(j)}" for i, j in enumerate(w.mapping)))
    return EXIT_OK


def cmd_paiso(a):
    S, T = parse_semigroup(a.file1), parse_semigroup(a.file2)
    v = pa_isomorphic(S, T, a.cap)
    if not v:
        print(f"not PA-isomorphic ({v.reason})")
        return EXIT_NO
    print(f"PA-isomorphic; |PA| = {len(v.witness.mapping)}")
    print("phi: " + " ".join(f"{S.label(x)}>{T.label(y)}" for x, y in v.phi.map.pairs()))
    if a.witness:
        _write(" ".join(map(str, v.witness.mapping)) + "\n", a.witness)
    return EXIT_OK


def cmd_census(a):
    c = census(a.n, anti=a.anti, inverse_only=a.inverse)
    print(f"{len(c)} semigroups of order {a.n}")
    if a.out:
        os.makedirs(a.out, exist_ok=True)
        with open(os.path.join(a.out, "index.txt"), "w") as idx:
            for i, (S, ann) in enumerate(zip(c.members, c.annotations)):
                name = f"s{a.n}_{i:04d}.sg"
                emit_semigroup(S, os.path.join(a.out, name))
                flags = " ".join(k for k, v in sorted(ann.items()) if v)
                idx.write(f"{name}\t{flags}\n")
    if a.pa_classes:
        part = pa_classes(c, jobs=a.jobs)
        for cls in part.classes:
            print(" ".join(str(i) for i in cls))
    return EXIT_OK


def cmd_verify(a):
    from .verify import run_verify
    rep = run_verify("full" if a.full else "quick")
    sys.stdout.write(rep.machine(a.timings) if a.machine else rep.text())
    return EXIT_OK if rep.passed else EXIT_NO


def make_parser():
    p = argparse.ArgumentParser(prog="pamona", description="Finite semigroups and their partial automorphism monoids.")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $PAMONA_JOBS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="emit a named construction")
    s.add_argument("spec", nargs="+", help="e.g. 'cyclic 6', 'mn 3 6', 'inflate cyclic 3', 'munn E.sg'")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("analyze", help="structural report")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("lattice", help="subsemigroup lattice")
    s.add_argument("file")
    s.add_argument("--inverse", action="store_true")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("pa", help="partial automorphism monoid")
    s.add_argument("file")
    s.add_argument("--inverse-only", action="store_true")
    s.add_argument("--table")
    s.add_argument("--cap", type=int, default=pam.DEFAULT_CAP)
    s.set_defaults(func=cmd_pa)

    s = sub.add_parser("iso", help="isomorphism test")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--anti", action="store_true")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("paiso", help="PA-isomorphism test")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--witness")
    s.add_argument("--cap", type=int, default=pam.DEFAULT_CAP)
    s.set_defaults(func=cmd_paiso)

    s = sub.add_parser("census", help="all semigroups of a small order")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--inverse", action="store_true")
    s.add_argument("--anti", action="store_true")
    s.add_argument("--out")
    s.add_argument("--pa-classes", action="store_true")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", help="run the built-in verification suite")
    s.add_argument("--full", action="store_true")
    s.add_argument("--machine", action="store_true")
    s.add_argument("--timings", action="store_true", help="add wall times to --machine output")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    p = make_parser()
    try:
        a = p.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    a.jobs = a.jobs or default_jobs()
    try:
        return a.func(a)
    except (SizeCapExceeded, OrderTooLarge) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, PamonaError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
