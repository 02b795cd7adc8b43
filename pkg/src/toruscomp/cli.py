"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 mathematical error, 3 malformed input.
"""

import argparse
import sys

from .birational import DEFAULT_RETRIES, CompressedCoset, compress_coset_retrying, decompress_coset
from .dh import derive, keygen
from .errors import MalformedPayload, TorusError
from .paramfile import ParamFile, decode_vector, dump_payload, encode_vector, generate, load_payload
from .quotient import coset_eq
from . import selftest

EXIT_USAGE, EXIT_MATH, EXIT_MALFORMED = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedPayload(f"cannot read {path}: {exc}") from None


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_params(path):
    if not path:
        raise UsageError("--params is required")
    return ParamFile.loads(_read(path)).torus_params()


def _element(p, line):
    z = decode_vector(line, p.ctx.dim)
    if any(not 0 <= c < p.q for c in z):
        raise MalformedPayload("element coordinate out of range")
    return z


def cmd_params(args):
    fact = None
    if args.factorization:
        try:
            fact = [int(s) for s in args.factorization.split(",")]
        except ValueError:
            raise UsageError("--factorization takes comma-separated integers") from None
    for name in ("q", "a", "b"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    pf = generate(args.q, args.a, args.b, args.seed, fact)
    _write(args.out, pf.dumps())


def cmd_compress(args):
    p = _load_params(args.params)
    (line,) = load_payload(_read(args.inp))
    t = _element(p, line)
    c = compress_coset_retrying(p, t, args.retries, bytes.fromhex(args.seed))
    _write(args.out, dump_payload(c.encode()))


def cmd_decompress(args):
    p = _load_params(args.params)
    (line,) = load_payload(_read(args.inp))
    c = CompressedCoset.decode(p, line)
    _write(args.out, dump_payload(encode_vector(decompress_coset(p, c))))


def cmd_coset_eq(args):
    p = _load_params(args.params)
    l1, l2 = load_payload(_read(args.inp), 2)
    t1, t2 = _element(p, l1), _element(p, l2)
    if not any(t1) or not any(t2):
        raise MalformedPayload("coset representatives must be nonzero")
    _write(args.out, "true\n" if coset_eq(p, t1, t2) else "false\n")


def _secret(text):
    try:
        return int(text)
    except ValueError:
        raise UsageError("--secret must be an integer") from None


def cmd_dh_keygen(args):
    if not args.params:
        raise UsageError("--params is required")
    pf = ParamFile.loads(_read(args.params))
    p = pf.torus_params()
    secret = _secret(args.secret) if args.secret is not None else None
    try:
        kp = keygen(p, pf.generator, secret=secret, seed=bytes.fromhex(args.seed), retries=args.retries)
    except ValueError as exc:
        if isinstance(exc, TorusError):
            raise
        raise UsageError(str(exc)) from None
    _write(args.out, dump_payload(kp.public.encode()))
    if args.secret_out:
        _write(args.secret_out, f"secret={kp.secret}\n")
    elif secret is None:
        sys.stderr.write(f"secret={kp.secret}\n")


def cmd_dh_derive(args):
    p = _load_params(args.params)
    if args.secret is None:
        raise UsageError("--secret is required")
    (line,) = load_payload(_read(args.inp))
    peer = CompressedCoset.decode(p, line)
    try:
        shared = derive(p, _secret(args.secret), peer, args.retries)
    except ValueError as exc:
        if isinstance(exc, TorusError):
            raise
        raise UsageError(str(exc)) from None
    _write(args.out, dump_payload(shared.encode()))


def cmd_selftest(args):
    lines, failures = selftest.run(args.level)
    _write(args.out, "".join(line + "\n" for line in lines))
    return EXIT_MATH if failures else 0


def build_parser():
    parser = _Parser(prog="toruscomp", description="Compressed representatives of the torus quotient Q(A,B).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, inp=True):
        sp.add_argument("--params", help="parameter file")
        if inp:
            sp.add_argument("--in", dest="inp", default="-", help="input file or - for stdin")
        sp.add_argument("--out", default="-", help="output file or - for stdout")
        sp.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
        sp.add_argument("--seed", default="", help="hex seed")

    sp = sub.add_parser("params", help="generate a parameter file")
    sp.add_argument("--q", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--seed", default="00", help="hex seed")
    sp.add_argument("--factorization", help="comma-separated prime divisors of |Q|")
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("compress", help="compress an element to its coset payload")
    common(sp)
    sp.set_defaults(func=cmd_compress)

    sp = sub.add_parser("decompress", help="canonical representative of a coset payload")
    common(sp)
    sp.set_defaults(func=cmd_decompress)

    sp = sub.add_parser("coset-eq", help="test whether two elements share an H-coset")
    common(sp)
    sp.set_defaults(func=cmd_coset_eq)

    dh = sub.add_parser("dh", help="Diffie-Hellman demo over compressed cosets")
    dsub = dh.add_subparsers(dest="dh_command", parser_class=_Parser)
    dsub.required = True
    sp = dsub.add_parser("keygen")
    common(sp, inp=False)
    sp.add_argument("--secret")
    sp.add_argument("--secret-out")
    sp.set_defaults(func=cmd_dh_keygen)
    sp = dsub.add_parser("derive")
    common(sp)
    sp.add_argument("--secret")
    sp.set_defaults(func=cmd_dh_derive)

    sp = sub.add_parser("selftest", help="run exhaustive and randomized checks")
    sp.add_argument("--level", choices=("small", "full"), default="small")
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = getattr(args, "seed", "")
    try:
        bytes.fromhex(seed)
    except ValueError:
        print("toruscomp: error: --seed must be hex", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args) or 0
    except UsageError as exc:
        print(f"toruscomp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MalformedPayload as exc:
        print(f"toruscomp: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except TorusError as exc:
        print(f"toruscomp: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
