"""Command-line front end.

Subcommands: solve, exact, verify, gen, suite, search-extremal.  Exit codes
are part of the contract:

    0  success
    1  suite found a violation (offending instance dumped to stderr)
    2  parse error in an input file
    3  precondition violation (e.g. fvs-linear on a non-linear instance)
    4  internal certification failure (a bug in this package)
    5  oracle limit exceeded
    6  certificate does not match the instance (hash mismatch)

Every certificate embeds a digest of the instance's normalized text, so a
certificate can never silently verify against the wrong file.  All report
output is deterministic for a fixed --seed; wall-clock timings only appear
when --timings is given, precisely so that two identical runs emit
identical bytes.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import gen
from .core import CertificationError, Hypergraph, ParseError, parse_file
from .fes import FesCertificate, greedy_hyperforest, verify_fes
from .fvs import FvsCertificate, NotLinearError, Rule, RuleApplication, general_fvs, linear_fvs, verify_fvs
from .oracle import OracleLimitError, check_half_equality, exact_fes, exact_fvs, search_extremal

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CERTIFICATION = 4
EXIT_ORACLE_LIMIT = 5
EXIT_HASH_MISMATCH = 6

ORACLE_LIMIT_ENV = "HYPERFVS_ORACLE_LIMIT"


@dataclass
class RunReport:
    """One result row: tab-separated, stable column order."""

    instance: str
    n: int
    m: int
    p: int
    algorithm: str
    bound: int
    size: int
    exact: int | None
    verified: bool
    elapsed: float | None

    HEADER = "# instance\tn\tm\tp\talgorithm\tbound\tsize\texact\tverified\telapsed"

    def row(self) -> str:
        exact = "-" if self.exact is None else str(self.exact)
        elapsed = "-" if self.elapsed is None else f"{self.elapsed:.3f}"
        return (
            f"{self.instance}\t{self.n}\t{self.m}\t{self.p}\t{self.algorithm}"
            f"\t{self.bound}\t{self.size}\t{exact}\t{self.verified}\t{elapsed}"
        )


def _oracle_limit(args) -> int | None:
    if getattr(args, "limit", None) is not None:
        return args.limit
    env = os.environ.get(ORACLE_LIMIT_ENV)
    return int(env) if env else None


# -- certificate text ---------------------------------------------------


def format_fvs_certificate(H: Hypergraph, cert: FvsCertificate, kind: str) -> str:
    lines = [
        "# feedback vertex set certificate",
        f"kind {kind}",
        f"instance {H.instance_hash()}",
        f"m0 {cert.m0}",
        f"bound {cert.bound.numerator}/{cert.bound.denominator}",
        f"size {cert.size}",
        "S " + " ".join(str(v) for v in sorted(cert.S)),
        "TRACE",
    ]
    for app in cert.trace:
        removed = ",".join(str(e) for e in sorted(app.removed_edges))
        added = ",".join(str(v) for v in sorted(app.added_vertices)) or "-"
        lines.append(f"{app.rule.value} removed {removed} added {added}")
    lines.append("END")
    return "\n".join(lines) + "\n"


def format_fes_certificate(H: Hypergraph, cert: FesCertificate) -> str:
    lines = [
        "# feedback edge set certificate",
        "kind fes",
        f"instance {H.instance_hash()}",
        f"m {H.m} n {H.n} p {cert.p}",
        f"bound {cert.bound}",
        f"size {cert.size}",
        "A " + " ".join(str(e) for e in sorted(cert.A)),
        "KEPT " + " ".join(str(e) for e in sorted(cert.kept)),
        "COMPONENTS",
    ]
    lines.extend(f"{n_i} {m_i}" for n_i, m_i in cert.per_component)
    lines.append("END")
    return "\n".join(lines) + "\n"


class CertificateSyntaxError(Exception):
    pass


def _cert_fields(text: str) -> dict:
    """Split certificate text into simple fields plus section bodies."""
    fields: dict = {"sections": {}}
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "END":
            section = None
            continue
        if line in ("TRACE", "COMPONENTS"):
            section = line
            fields["sections"][section] = []
            continue
        if section is not None:
            fields["sections"][section].append(line)
            continue
        key, _, rest = line.partition(" ")
        fields[key] = rest.strip()
    return fields


def _ids(text: str) -> frozenset[int]:
    text = text.strip()
    return frozenset(int(t) for t in text.split()) if text else frozenset()


def parse_certificate(text: str):
    """Return (kind, certificate, instance_digest); raises CertificateSyntaxError."""
    try:
        f = _cert_fields(text)
        kind = f["kind"]
        digest = f["instance"]
        if kind in ("fvs-linear", "fvs-general"):
            num, _, den = f["bound"].partition("/")
            trace = []
            for line in f["sections"].get("TRACE", []):
                tokens = line.split()
                # "<Rule> removed a,b,c added x,y" with "-" for an empty list
                rule = Rule(tokens[0])
                removed = frozenset(int(t) for t in tokens[2].split(",") if t != "-")
                added = frozenset(int(t) for t in tokens[4].split(",") if t != "-")
                trace.append(RuleApplication(rule, removed, added))
            cert = FvsCertificate(
                S=_ids(f["S"]),
                trace=trace,
                m0=int(f["m0"]),
                bound=Fraction(int(num), int(den or "1")),
            )
            if cert.size != int(f["size"]):
                raise CertificateSyntaxError("size field disagrees with S")
            return kind, cert, digest
        if kind == "fes":
            stats = [tuple(int(t) for t in line.split()) for line in f["sections"].get("COMPONENTS", [])]
            m_field = f["m"].split()
            cert = FesCertificate(
                A=_ids(f["A"]),
                kept=_ids(f["KEPT"]),
                k=len(stats),
                per_component=stats,
                p=int(m_field[-1]),
                bound=int(f["bound"]),
            )
            if cert.size != int(f["size"]):
                raise CertificateSyntaxError("size field disagrees with A")
            return kind, cert, digest
        raise CertificateSyntaxError(f"unknown certificate kind {kind!r}")
    except CertificateSyntaxError:
        raise
    except (KeyError, ValueError, IndexError, CertificationError) as exc:
        raise CertificateSyntaxError(f"malformed certificate: {exc}") from exc


# -- subcommands --------------------------------------------------------


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    try:
        H = parse_file(args.instance)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    t0 = time.perf_counter()
    try:
        if args.algorithm == "fvs-linear":
            cert = linear_fvs(H)
            text = format_fvs_certificate(H, cert, "fvs-linear")
            bound = cert.m0 // 3
            ok = cert.verify(H)
        elif args.algorithm == "fvs-general":
            cert = general_fvs(H)
            text = format_fvs_certificate(H, cert, "fvs-general")
            bound = cert.m0 // 2
            ok = cert.verify(H)
        else:
            cert = greedy_hyperforest(H)
            text = format_fes_certificate(H, cert)
            bound = cert.bound
            ok = cert.verify(H)
    except NotLinearError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CertificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    elapsed = time.perf_counter() - t0
    _emit(text, args.out)
    report = RunReport(
        instance=H.instance_hash(),
        n=H.n,
        m=H.m,
        p=H.components().p,
        algorithm=args.algorithm,
        bound=bound,
        size=cert.size,
        exact=None,
        verified=ok,
        elapsed=elapsed if args.timings else None,
    )
    stream = sys.stdout if args.out else sys.stderr
    print(report.row(), file=stream)
    return EXIT_OK if ok else EXIT_CERTIFICATION


def cmd_exact(args) -> int:
    try:
        H = parse_file(args.instance)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.kind == "fvs":
            res = exact_fvs(H, limit=_oracle_limit(args))
        else:
            res = exact_fes(H, limit=_oracle_limit(args))
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_LIMIT
    witness = " ".join(str(x) for x in sorted(res.witness))
    print(f"{args.kind} size {res.size} witness [{witness}] explored {res.explored}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        H = parse_file(args.instance)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            kind, cert, digest = parse_certificate(fh.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CertificateSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if digest != H.instance_hash():
        print(
            f"error: certificate digest {digest} does not match instance {H.instance_hash()}",
            file=sys.stderr,
        )
        return EXIT_HASH_MISMATCH
    if kind == "fvs-linear" and not H.is_linear():
        print("error: fvs-linear certificate for a non-linear instance", file=sys.stderr)
        return EXIT_PRECONDITION
    ok = cert.verify(H)
    print(f"certificate {'VALID' if ok else 'INVALID'} kind={kind} size={cert.size}")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_gen(args) -> int:
    try:
        if args.family == "loose-cycle":
            H = gen.loose_cycle(args.k)
        elif args.family == "two-cycle-union":
            H = gen.two_cycle_union(args.c)
        elif args.family == "hypertree":
            H = gen.random_hypertree(args.m, args.seed)
        elif args.family == "linear":
            H = gen.random_linear(args.n, args.m, args.seed)
        elif args.family == "uniform":
            H = gen.random_3uniform(args.n, args.m, args.seed)
        else:
            H = gen.fano()
    except (ValueError, gen.GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(H.to_text(), args.out)
    return EXIT_OK


def cmd_search_extremal(args) -> int:
    try:
        report = search_extremal(args.m, args.n_max)
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(report.to_text(), args.out)
    if args.out:
        print(
            f"extremal m={report.m}: found {len(report.found)} of {report.examined} "
            f"connected classes, maxdeg {report.max_degree_seen}"
        )
    return EXIT_OK


def _suite_instances(count: int, seed: int):
    """Deterministic battery: structured families plus seeded random draws."""
    rng = gen.SplitMix64(seed)
    for k in range(3, 8):
        yield f"loose-cycle-{k}", gen.loose_cycle(k), True
    for c in range(1, 4):
        yield f"two-cycle-union-{c}", gen.two_cycle_union(c), False
    yield "fano", gen.fano(), True
    for i in range(count):
        m = i % 13
        yield f"hypertree-{i}", gen.random_hypertree(m, rng.next_u64()), True
    made = 0
    while made < count:
        n = 8 + made % 11
        m = min(2 + made % 9, n * (n - 1) // 6 - 2)
        try:
            H = gen.random_linear(n, m, rng.next_u64())
        except gen.GenerationError:
            continue
        yield f"linear-{made}", H, True
        made += 1
    for i in range(count):
        n = 5 + i % 6
        m = min(2 + i % 7, 8)
        yield f"uniform-{i}", gen.random_3uniform(n, m, rng.next_u64()), False


def cmd_suite(args) -> int:
    limit = _oracle_limit(args)
    rows: list[str] = []
    violations: list[tuple[str, Hypergraph, str]] = []

    def run_one(name: str, H: Hypergraph, is_linear: bool) -> None:
        p = H.components().p
        t0 = time.perf_counter()
        small = H.n <= 12 and H.m <= 8
        exact = exact_fvs(H).size if small else None
        if is_linear:
            cert = linear_fvs(H)
            bound = cert.m0 // 3
            algorithm = "fvs-linear"
        else:
            cert = general_fvs(H)
            bound = cert.m0 // 2
            algorithm = "fvs-general"
        ok = cert.verify(H) and cert.size <= bound
        if exact is not None:
            ok = ok and exact <= cert.size
            if not check_half_equality(H, limit=limit):
                violations.append((name, H, "half-equality biconditional failed"))
        if not ok:
            violations.append((name, H, f"{algorithm} certificate rejected"))
        elapsed = time.perf_counter() - t0
        rows.append(
            RunReport(
                instance=name, n=H.n, m=H.m, p=p, algorithm=algorithm,
                bound=bound, size=cert.size, exact=exact, verified=ok,
                elapsed=elapsed if args.timings else None,
            ).row()
        )
        fes_cert = greedy_hyperforest(H)
        fes_ok = (
            fes_cert.verify(H)
            and verify_fes(H, fes_cert.A)
            and 2 * fes_cert.size == 2 * H.m - H.n + fes_cert.k
            and fes_cert.size <= fes_cert.bound
        )
        if not fes_ok:
            violations.append((name, H, "fes certificate rejected"))
        exact_e = exact_fes(H).size if small and H.m <= 10 else None
        rows.append(
            RunReport(
                instance=name, n=H.n, m=H.m, p=p, algorithm="fes",
                bound=fes_cert.bound, size=fes_cert.size, exact=exact_e,
                verified=fes_ok, elapsed=None,
            ).row()
        )

    try:
        for path in args.instances or []:
            H = parse_file(path)
            run_one(os.path.basename(path), H, H.is_linear())
        for name, H, is_linear in _suite_instances(args.count, args.seed):
            run_one(name, H, is_linear)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_LIMIT
    except CertificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION

    out_lines = [RunReport.HEADER]
    out_lines.extend(rows)
    out_lines.append(
        f"# suite seed={args.seed} count={args.count} rows={len(rows)} violations={len(violations)}"
    )
    _emit("\n".join(out_lines) + "\n", args.out)
    for name, H, why in violations:
        print(f"violation [{name}]: {why}", file=sys.stderr)
        sys.stderr.write(H.to_text())
    return EXIT_VIOLATION if violations else EXIT_OK


# -- argument parsing ---------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hyperfvs",
        description="Certified feedback vertex/edge sets for 3-uniform hypergraphs.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, limit=False):
        p.add_argument("--out", help="write primary output to this file")
        p.add_argument("--timings", action="store_true", help="include wall-clock timings")
        if limit:
            p.add_argument("--limit", type=int, help="oracle guard override")

    p = sub.add_parser("solve", help="run a constructive solver, emit a certificate")
    p.add_argument("algorithm", choices=["fvs-linear", "fvs-general", "fes"])
    p.add_argument("instance")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="exhaustive minimum (guarded)")
    p.add_argument("kind", choices=["fvs", "fes"])
    p.add_argument("instance")
    common(p, limit=True)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a certificate against an instance")
    p.add_argument("instance")
    p.add_argument("certificate")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate an instance")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("loose-cycle")
    q.add_argument("k", type=int)
    common(q)
    q = fam.add_parser("two-cycle-union")
    q.add_argument("c", type=int)
    common(q)
    q = fam.add_parser("hypertree")
    q.add_argument("m", type=int)
    q.add_argument("--seed", type=int, default=0)
    common(q)
    q = fam.add_parser("linear")
    q.add_argument("n", type=int)
    q.add_argument("m", type=int)
    q.add_argument("--seed", type=int, default=0)
    common(q)
    q = fam.add_parser("uniform")
    q.add_argument("n", type=int)
    q.add_argument("m", type=int)
    q.add_argument("--seed", type=int, default=0)
    common(q)
    q = fam.add_parser("fano")
    common(q)
    for q in fam.choices.values():
        q.set_defaults(func=cmd_gen)

    p = sub.add_parser("suite", help="run the deterministic property battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=40, help="instances per random family")
    p.add_argument("--instances", nargs="*", help="extra instance files to include")
    common(p, limit=True)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("search-extremal", help="enumerate tight instances for the m/3 bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-max", type=int, default=12)
    common(p)
    p.set_defaults(func=cmd_search_extremal)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
