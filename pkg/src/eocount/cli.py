"""Command-line front end: solve/verify instances, classify signatures,
generate the standard families, build gadgets, run the kernel census."""

from __future__ import annotations

import argparse
import sys

from . import engine
from .classes import classify, direct_d1_kernel, is_d1_kernel
from .errors import EOError
from .hadamard import (
    Polarity,
    balanced_code,
    basic_kernel,
    basic_kernel_zero,
    butterfly,
    hadamard_code,
    wings,
)
from .instance_io import instance_from_text
from .signatures import (
    Signature,
    bits_str,
    delta_factors,
    enumerate_eo_supports,
    m_multiple,
    signature_from_text,
    signature_to_text,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(pairs, fmt: str) -> None:
    if fmt == "kv":
        for key, value in pairs:
            print(f"{key}={value}")
    else:
        width = max(len(k) for k, _ in pairs)
        for key, value in pairs:
            print(f"{key:<{width}}  {value}")


def _cmd_solve(args) -> int:
    inst = instance_from_text(_read(args.file))
    res = engine.solve(inst, method=args.method, trace=args.trace)
    pairs = [("count", res.count), ("method", res.method.value)]
    if res.note:
        pairs.append(("note", res.note))
    _emit(pairs, args.format)
    if args.trace and res.steps:
        for step in res.steps:
            print(f"trace: {step}")
    return 0


def _cmd_verify(args) -> int:
    inst = instance_from_text(_read(args.file))
    res = engine.solve(inst, method="auto")
    pairs = [(res.method.value, res.count)]
    if res.method is engine.Method.BRUTE:
        pairs.append(("agreement", "n/a(method brute)"))
    else:
        brute = engine.brute_force(inst)
        pairs.append(("brute", brute.count))
        pairs.append(("agreement", "yes" if brute.count == res.count else "NO"))
        if brute.count != res.count:
            _emit(pairs, args.format)
            return 1
    _emit(pairs, args.format)
    return 0


def _cmd_classify(args) -> int:
    sig = signature_from_text(_read(args.file))
    rep = classify(sig)
    pairs = [
        ("arity", sig.arity),
        ("support", len(sig.support)),
        ("eo", str(rep.is_eo).lower()),
        ("affine", str(rep.is_affine).lower()),
        ("d1", str(rep.in_d1).lower()),
        ("d0", str(rep.in_d0).lower()),
        ("d1_kernel", str(rep.is_d1_kernel).lower()),
        ("d0_kernel", str(rep.is_d0_kernel).lower()),
    ]
    if rep.kernel_info is not None:
        info = rep.kernel_info
        pairs.append(("kind", info.kind.value))
        pairs.append(("polarity", info.polarity.value))
        if info.k is not None:
            pairs.append(("k", info.k))
        pairs.append(("m", info.m))
    _emit(pairs, args.format)
    return 0


_VARIANTS = {"1": Polarity.ONE, "0": Polarity.ZERO, "1b": Polarity.ONE, "0b": Polarity.ZERO}


def _cmd_gen(args) -> int:
    kind, k = args.kind, args.k
    pol = _VARIANTS[args.variant]
    if kind == "hadamard":
        sig = (
            balanced_code(k, pol) if args.variant.endswith("b")
            else hadamard_code(k, pol)
        )
    elif kind == "balanced":
        sig = balanced_code(k, pol)
    elif kind == "butterfly":
        sig = butterfly(k)
    elif kind == "wing":
        left, right = wings(k)
        sig = right if pol is Polarity.ONE else left
    else:  # kernel
        sig = basic_kernel(k) if pol is Polarity.ONE else basic_kernel_zero(k)
        if args.m > 1:
            sig = m_multiple(sig, args.m)
    sys.stdout.write(signature_to_text(sig))
    return 0


def _cmd_gadget(args) -> int:
    left = signature_from_text(_read(args.left))
    right = signature_from_text(_read(args.right))
    pairs = []
    if args.pairs:
        for chunk in args.pairs.split(","):
            i, sep, j = chunk.partition(":")
            if not sep:
                raise EOError(f"bad pair {chunk!r}; expected i:j")
            pairs.append((int(i), int(j)))
    result = engine.gadget_demo_hardness(left, right, pairs)
    print(f"# arity {result.arity}")
    for row in sorted(result.values):
        print(f"{bits_str(row)} {result.values[row]}")
    return 0


def _cmd_census(args) -> int:
    total = agree = kernels = 0
    trivial_expected = 0
    for f in enumerate_eo_supports(args.arity, args.max_support):
        total += 1
        direct = direct_d1_kernel(f) if f.support else False
        fast = is_d1_kernel(f)
        if direct == fast:
            agree += 1
        if fast:
            kernels += 1
        if len(f.support) == 3 and f.support:
            ones, zeros = delta_factors(f)
            if ones and not zeros:
                trivial_expected += 1
    pairs = [
        ("supports", total),
        ("agree", agree),
        ("disagree", total - agree),
        ("kernels", kernels),
        ("trivial_clause_matches", trivial_expected),
    ]
    _emit(pairs, args.format)
    return 0 if total == agree and kernels == trivial_expected else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eocount",
        description="Count restricted Eulerian orientations and classify "
        "the tractable signature families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("human", "kv"), default="human")

    p = sub.add_parser("solve", help="count an instance file")
    p.add_argument("file")
    p.add_argument("--method", choices=("auto", "brute", "affine", "chain"), default="auto")
    p.add_argument("--trace", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="cross-check the chosen solver against brute force")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="class membership report for a signature file")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("gen", help="emit one of the standard signature families")
    p.add_argument("kind", choices=("hadamard", "balanced", "butterfly", "wing", "kernel"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=tuple(_VARIANTS), default="1")
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("gadget", help="connect two signatures through disequalities")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--pairs", default="")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("census", help="exhaustive kernel census over EO supports")
    p.add_argument("--arity", type=int, default=4)
    p.add_argument("--max-support", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
