"""Command line interface: ``generate``, ``colour``, ``verify`` and ``stats``.

Results go to stdout as ``key=value`` tokens; diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 algorithm precondition violated.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .chordal import clique_number_chordal, recognize_chordal
from .colouring import (
    balanced_bound,
    balanced_c4free_dicolouring,
    exact_dichromatic,
    greedy_bound,
    greedy_peo_dicolouring,
    mad_bound_report,
)
from .constructions import (
    c4free_family,
    chordal_kl_family,
    cograph_family,
    interval_family,
    random_chordal_certificate,
    random_chordal_superorientation,
)
from .density import max_average_degree
from .exceptions import BudgetExceeded, C4FoundError, NotChordalError, ParseError
from .graphs import (
    bidirected_graph,
    clique_number,
    digon_count,
    find_c4,
    is_acyclic,
    is_cograph,
    max_bidegree,
    proper_colouring,
    underlying_graph,
    validate_dicolouring,
)
from .io import (
    format_certificate,
    format_colouring,
    format_digraph,
    parse_certificate,
    parse_colouring,
    parse_digraph,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

FAMILY_PARAMS = {
    "interval": ("k",),
    "cograph": ("k",),
    "chordal-kl": ("k", "l"),
    "c4free": ("k", "n"),
    "random-chordal": ("n", "k"),
}


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii", newline="\n")


def _omega(G):
    peo = recognize_chordal(G)
    return (clique_number_chordal(G, peo) if peo is not None else clique_number(G)), peo is not None


def cmd_generate(args) -> int:
    missing = [p for p in FAMILY_PARAMS[args.family] if getattr(args, p) is None]
    if missing:
        raise UsageError(
            f"family {args.family} requires " + ", ".join(f"--{p}" for p in missing)
        )
    if args.family == "interval":
        D, _, cert = interval_family(args.k)
    elif args.family == "cograph":
        D, cert = cograph_family(args.k)
    elif args.family == "chordal-kl":
        D, cert = chordal_kl_family(args.k, args.l)
    elif args.family == "c4free":
        D, cert = c4free_family(args.k, args.n)
    else:
        D = random_chordal_superorientation(args.n, args.k, args.digon_prob, args.seed)
        cert = random_chordal_certificate(D, args.n, args.k, args.digon_prob, args.seed)
    cert_text = format_certificate(cert)
    if args.out is None:
        _emit(format_digraph(D, cert_text.splitlines()), None)
        if args.cert is not None:
            _emit(cert_text, args.cert)
    else:
        _emit(format_digraph(D), args.out)
        _emit(cert_text, args.cert or args.out + ".cert")
    return EXIT_OK


def cmd_colour(args) -> int:
    D = parse_digraph(_read_text(args.input))
    bound = None
    try:
        if args.algorithm == "greedy-peo":
            colouring = greedy_peo_dicolouring(D)
            bound = greedy_bound(D)
        elif args.algorithm == "balanced-c4free":
            colouring = balanced_c4free_dicolouring(D)
            bound = balanced_bound(D)
        else:
            _, colouring = exact_dichromatic(D, args.budget, n_jobs=args.threads)
    except NotChordalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except C4FoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("witness=" + ",".join(map(str, exc.witness)))
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    valid = bool(validate_dicolouring(D, colouring))
    _emit(format_colouring(colouring), args.out)
    summary = f"colours={colouring.num_colours} valid={'true' if valid else 'false'}"
    if bound is not None:
        summary += f" bound={bound}"
    print(summary)
    return EXIT_OK if valid else EXIT_VERIFY


def _chi_bounds(D, oracle_limit: int, threads: int):
    """Return ``(lower, upper)`` on the dichromatic number; equal when exact."""
    if D.n <= oracle_limit:
        chi, _ = exact_dichromatic(D, n_jobs=threads)
        return chi, chi
    G = underlying_graph(D)
    lower = max(1 if D.n else 0, clique_number(bidirected_graph(D)))
    if lower < 2 and not is_acyclic(D):
        lower = 2
    upper = proper_colouring(G).num_colours
    if recognize_chordal(G) is not None:
        upper = min(upper, greedy_peo_dicolouring(D).num_colours)
        if find_c4(bidirected_graph(D)) is None:
            upper = min(upper, balanced_c4free_dicolouring(D).num_colours)
    return lower, upper


def _claim_line(name, expected, actual, status):
    return f"claim={name} expected={expected} actual={actual} status={status}"


def _verify_certificate(D, cert, args) -> list[tuple[str, str]]:
    G = underlying_graph(D)
    B = bidirected_graph(D)
    omega, chordal = _omega(G)
    results = []

    def simple(name, expected, actual):
        results.append((_claim_line(name, expected, actual, "pass" if expected == actual else "fail"),
                        "pass" if expected == actual else "fail"))

    simple("vertices", cert.vertices, D.n)
    simple("omega", cert.omega, omega)
    simple("delta_b", cert.delta_b, max_bidegree(D))
    for tag in cert.structure:
        if tag == "chordal":
            ok = chordal
        elif tag == "cograph":
            ok = is_cograph(G)
        elif tag == "oriented":
            ok = D.is_oriented()
        elif tag == "b-paths":
            ok = B.max_degree() <= 2 and all(
                B.induced_subgraph(c)[0].num_edges == len(c) - 1 for c in B.connected_components()
            )
        else:
            results.append((_claim_line(f"structure:{tag}", "yes", "unknown", "fail"), "fail"))
            continue
        simple(f"structure:{tag}", "yes", "yes" if ok else "no")

    claims = [(k, getattr(cert, k)) for k in ("chi", "chi_lower", "chi_upper") if getattr(cert, k) is not None]
    if claims:
        lower, upper = _chi_bounds(D, args.oracle_limit, args.threads)
        actual = str(lower) if lower == upper else f"{lower}..{upper}"
        for name, value in claims:
            if name == "chi":
                ok, bad = lower == upper == value, value < lower or value > upper
            elif name == "chi_lower":
                ok, bad = lower >= value, upper < value
            else:
                ok, bad = upper <= value, lower > value
            status = "pass" if ok else "fail" if bad else "skipped"
            results.append((_claim_line(name, value, actual, status), status))
    return results


def cmd_verify(args) -> int:
    D = parse_digraph(_read_text(args.input))
    if args.colouring is not None:
        colouring = parse_colouring(_read_text(args.colouring))
        if len(colouring) != D.n:
            raise UsageError(f"colouring has {len(colouring)} vertices, digraph has {D.n}")
        check = validate_dicolouring(D, colouring)
        if check:
            print(_claim_line("dicolouring", "valid", "valid", "pass"))
            return EXIT_OK
        print(_claim_line("dicolouring", "valid", "invalid", "fail")
              + " witness=" + ",".join(map(str, check.witness)))
        return EXIT_VERIFY
    cert = parse_certificate(_read_text(args.certificate))
    results = _verify_certificate(D, cert, args)
    for line, _ in results:
        print(line)
    return EXIT_VERIFY if any(status == "fail" for _, status in results) else EXIT_OK


def cmd_stats(args) -> int:
    D = parse_digraph(_read_text(args.input))
    G = underlying_graph(D)
    B = bidirected_graph(D)
    omega, chordal = _omega(G)
    tokens = [
        f"n={D.n}",
        f"arcs={D.num_arcs}",
        f"digons={digon_count(D)}",
        f"omega={omega}",
        f"delta_b={max_bidegree(D)}",
        f"mad_b={max_average_degree(B)}",
        f"chordal={'yes' if chordal else 'no'}",
        f"b_c4_free={'yes' if find_c4(B) is None else 'no'}",
    ]
    if args.epsilon is not None:
        if not chordal:
            print("error: the Mad bound needs a chordal underlying graph", file=sys.stderr)
            return EXIT_PRECONDITION
        eps = None if args.epsilon == "auto" else _fraction(args.epsilon)
        if eps is not None and eps <= 0:
            raise UsageError("epsilon must be positive")
        report = mad_bound_report(D, eps, exact_limit=args.oracle_limit)
        tokens += [
            f"epsilon={report.epsilon}",
            f"bound={report.bound_value}",
            f"chi={report.chi}",
            f"chi_exact={'yes' if report.chi_is_exact else 'no'}",
            f"satisfied={'yes' if report.satisfied else 'no'}",
        ]
    print(" ".join(tokens))
    return EXIT_OK


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dichromatic", description="Dicolouring tools for super-orientations of chordal graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a family member and its certificate")
    gen.add_argument("--family", required=True, choices=sorted(FAMILY_PARAMS))
    gen.add_argument("--k", type=int, help="clique number (target clique number for random-chordal)")
    gen.add_argument("--l", type=int, help="max degree of the bidirected graph (chordal-kl)")
    gen.add_argument("--n", type=int, help="vertex count (c4free: minimum; random-chordal: exact)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--digon-prob", type=_fraction, default=Fraction(0))
    gen.add_argument("--out", help="digraph file (default stdout, certificate as comments)")
    gen.add_argument("--cert", help="certificate file (default <out>.cert)")
    gen.set_defaults(func=cmd_generate)

    col = sub.add_parser("colour", help="dicolour a digraph")
    col.add_argument("input", help="digraph file, or - for stdin")
    col.add_argument("--algorithm", required=True, choices=["greedy-peo", "balanced-c4free", "exact"])
    col.add_argument("--out", help="colouring file (default stdout)")
    col.add_argument("--budget", type=int, help="colour budget for the exact solver")
    col.add_argument("--threads", type=int, default=1)
    col.set_defaults(func=cmd_colour)

    ver = sub.add_parser("verify", help="check a colouring or a certificate")
    ver.add_argument("input", help="digraph file")
    what = ver.add_mutually_exclusive_group(required=True)
    what.add_argument("--colouring")
    what.add_argument("--certificate")
    ver.add_argument("--oracle-limit", type=int, default=24,
                     help="largest vertex count handed to the exact solver")
    ver.add_argument("--threads", type=int, default=1)
    ver.set_defaults(func=cmd_verify)

    st = sub.add_parser("stats", help="print invariants of a digraph")
    st.add_argument("input", help="digraph file, or - for stdin")
    st.add_argument("--epsilon", help="also compare chi with the Mad bound at this epsilon (or 'auto')")
    st.add_argument("--oracle-limit", type=int, default=20,
                    help="largest vertex count handed to the exact solver for --epsilon")
    st.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
