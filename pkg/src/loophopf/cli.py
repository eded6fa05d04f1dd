"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or a classification /
inversion that does not exist), 2 invalid input.  Results go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import endo
from .errors import (
    ClassificationError,
    InvalidInputError,
    NotInvertibleError,
    VerificationError,
)
from .families import (
    CONSTRUCTIONS,
    FamilyParams,
    build_dual_cyclic,
    build_graded,
    build_Lnd,
    build_nc2,
)
from .hopf import antipode, classify, integral, is_semisimple, verify
from .scalars import carry_count, check_prime, field, legendre_sum, lucas_binom
from .tablefile import read_table, write_table

OK, FAILED, INVALID = 0, 1, 2


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_binom(args) -> int:
    check_prime(args.p)
    if args.m < 1 or args.n < 1:
        raise InvalidInputError("m and n must be positive")
    m, n, p = args.m, args.n, args.p
    print(f"binom={lucas_binom(m + n, n, p)} carries={carry_count(m, n, p)}")
    lhs = legendre_sum(m + n, p)
    rhs = legendre_sum(m, p) + legendre_sum(n, p)
    print(f"legendre: v(({m}+{n})!)={lhs} v({m}!)+v({n}!)={rhs}")
    return OK


def cmd_build(args) -> int:
    fam = args.family
    if fam == "nc2":
        if args.p not in (None, 2) or args.ext not in (None, 1):
            raise InvalidInputError("nc2 is defined over GF(2) only")
        T = build_nc2()
    else:
        if args.p is None or args.n is None:
            raise InvalidInputError(f"--p and --n are required for family {fam}")
        k = args.ext or 1
        if fam == "ld":
            if args.d is None:
                raise InvalidInputError("--d is required for family ld")
            params = FamilyParams(args.p, args.n, args.d, k)
            T = build_Lnd(params, field(args.p, k), construction=args.construction)
        else:
            if args.n < 0:
                raise InvalidInputError("n must be non-negative")
            check_prime(args.p)
            builder = build_graded if fam == "graded" else build_dual_cyclic
            T = builder(args.p, args.n, field(args.p, k))
    write_table(T, args.out)
    return OK


def cmd_verify(args) -> int:
    T = read_table(args.file)
    report = verify(T)
    if args.report:
        print(report.render())
    else:
        failure = report.first_failure()
        if failure is None:
            print("hopf: PASS")
        else:
            print(f"hopf: FAIL ({failure[0]} {failure[1].render()})")
    return OK if report.is_hopf else FAILED


def cmd_classify(args) -> int:
    T = read_table(args.file)
    print(classify(T))
    return OK


def _require_hopf(T) -> None:
    report = verify(T)
    failure = report.first_failure()
    if failure is not None:
        raise VerificationError(f"{failure[0]} {failure[1].render()}", report)


def cmd_antipode(args) -> int:
    T = read_table(args.file)
    _require_hopf(T)
    for row in antipode(T):
        print(" ".join(str(c) for c in row))
    return OK


def cmd_integral(args) -> int:
    T = read_table(args.file)
    _require_hopf(T)
    data = integral(T)
    t = "n/a" if data.t is None else str(data.t)
    eps = "n/a" if data.eps_t is None else str(data.eps_t)
    print(f"t = {t}, eps(t) = {eps}, dim ∫ = {data.dimension}")
    if data.t_is_integral is not None:
        print(f"t is an integral: {'yes' if data.t_is_integral else 'no'}")
    print(f"semisimple: {'yes' if is_semisimple(T) else 'no'}")
    return OK


def _lambdas(fld, text: str) -> endo.LambdaSeq:
    parts = [s for s in text.split(",")]
    if any(not s.strip() for s in parts):
        raise InvalidInputError(f"bad λ list {text!r}")
    return endo.LambdaSeq.of(fld, parts)


def cmd_endo(args) -> int:
    check_prime(args.p)
    if args.N < 1:
        raise InvalidInputError("N must be positive")
    fld = field(args.p, args.ext or 1)
    f = _lambdas(fld, args.lambdas)
    if args.apply is not None:
        print(endo.evaluate(f, args.apply, args.N))
    elif args.compose is not None:
        print(endo.compose(f, _lambdas(fld, args.compose), args.N))
    elif args.invert:
        print(endo.invert(f, args.N))
    else:
        for row in endo.matrix(f, args.N):
            print(" ".join(str(c) for c in row))
    return OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loophopf",
        description="Hopf structures on truncated loop path coalgebras in characteristic p.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binom", help="C(m+n, n) mod p with Legendre sums and carries")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_binom)

    p = sub.add_parser("build", help="write the table of a named family")
    p.add_argument("--family", required=True, choices=["ld", "graded", "dual-cyclic", "nc2"])
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--ext", type=int, help="extension degree k of GF(p^k)")
    p.add_argument("--construction", choices=CONSTRUCTIONS, default="formal-group",
                   help="how L(n,d) is realized (family ld only)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check the Hopf axioms of a table file")
    p.add_argument("file")
    p.add_argument("--report", action="store_true", help="print the full report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="identify L(n,d) from the Frobenius rank")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("antipode", help="print the antipode matrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("integral", help="print the product integral and the integral space")
    p.add_argument("file")
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("endo", help="evaluate, compose or invert a coalgebra endomorphism")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--ext", type=int)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--lambda", dest="lambdas", required=True, help="comma-separated λ_1,λ_2,...")
    action = p.add_mutually_exclusive_group()
    action.add_argument("--apply", type=int, metavar="M")
    action.add_argument("--compose", metavar="L1,L2,...")
    action.add_argument("--invert", action="store_true")
    p.set_defaults(func=cmd_endo)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        _err(f"error: {exc}")
        return INVALID
    except VerificationError as exc:
        if exc.report is not None:
            print(exc.report.render())
        _err(f"verification failed: {exc}")
        return FAILED
    except ClassificationError as exc:
        _err(str(exc))
        return FAILED
    except NotInvertibleError as exc:
        _err(f"not invertible: {exc}")
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
