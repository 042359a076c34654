"""Command-line front end.

Exit status 2 means invalid input (an error object goes to stderr as
JSON), 1 means a numerical degeneracy.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .boolean import boolean_convolve, boolean_power, clt_normalize
from .errors import BoolCLTError
from .experiments import lemma_integral_checks, paper_constants, powers_of_two, theorem1_experiment
from .inversion import levy_cauchy_bound, theorem2_bracket
from .measure import AtomicMeasure, levy_distance
from .report import report_csv, report_svg, summary_json
from .transform import extract_representation


def _load(path: str) -> AtomicMeasure:
    return AtomicMeasure.from_json(Path(path).read_text())


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _real(text: str) -> float:
    v = float(text)
    if math.isnan(v):
        raise argparse.ArgumentTypeError("NaN is not allowed")
    return v


def _endpoint(v: float):
    return v if math.isfinite(v) else ("inf" if v > 0 else "-inf")


def cmd_convolve(args):
    _emit(boolean_convolve(_load(args.first), _load(args.second)).to_json() + "\n", args.output)


def cmd_power(args):
    mu = _load(args.measure)
    out = clt_normalize(mu, args.n) if args.normalize else boolean_power(mu, args.n)
    _emit(out.to_json() + "\n", args.output)


def cmd_clt(args):
    mu = _load(args.measure)
    if args.geometric < 2:
        raise ValueError("--geometric must be at least 2")
    ns = powers_of_two(args.n_start, args.n_end, args.geometric)
    report = theorem1_experiment(mu, ns, c_override=args.c_override)
    _emit(report_csv(report), args.output)
    if args.svg:
        Path(args.svg).write_text(report_svg(report))
    if args.output:
        print(summary_json(report))


def cmd_invert(args):
    br = theorem2_bracket(_load(args.measure), args.a, args.b, args.y, args.delta)
    d = br.to_dict()
    d["a"], d["b"] = _endpoint(d["a"]), _endpoint(d["b"])
    _emit(json.dumps(d) + "\n", args.output)


def cmd_levy(args):
    mu, nu = _load(args.first), _load(args.second)
    d = levy_distance(mu, nu)
    if args.via_cauchy:
        if args.y is None:
            raise ValueError("--via-cauchy needs -y")
        print(json.dumps({"levy": d, "cauchy_bound": levy_cauchy_bound(mu, nu, args.y), "y": args.y}))
    else:
        print(repr(d))


def cmd_constants(args):
    ledger = paper_constants(extract_representation(_load(args.measure)), args.c_override)
    print(json.dumps(ledger.to_dict()))


def cmd_lemmas(args):
    mu = _load(args.measure)
    ledger = paper_constants(extract_representation(mu), args.c_override)
    res = lemma_integral_checks(mu, args.n, ledger)
    print(json.dumps({
        "n": args.n, "I_A1": res.I_A1, "I_A2": res.I_A2, "I_mid": res.I_mid,
        "bound_tail": res.bound_tail, "bound_mid": res.bound_mid,
        "pass": res.passed,
    }))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boolclt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("convolve", help="Boolean convolution of two measures")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_convolve)

    s = sub.add_parser("power", help="Boolean convolution power")
    s.add_argument("measure")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--normalize", action="store_true", help="apply the 1/sqrt(n) CLT dilation")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_power)

    s = sub.add_parser("clt", help="Berry-Esseen rate experiment")
    s.add_argument("measure")
    s.add_argument("--n-start", type=int, default=16)
    s.add_argument("--n-end", type=int, default=1 << 20)
    s.add_argument("--geometric", type=int, default=2)
    s.add_argument("--c-override", type=_real)
    s.add_argument("--svg")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_clt)

    s = sub.add_parser("invert", help="interval-mass bracket certificate")
    s.add_argument("measure")
    s.add_argument("-a", type=_real, required=True, help="left end; use -a=-inf for -infinity")
    s.add_argument("-b", type=_real, required=True)
    s.add_argument("-y", type=_real, required=True)
    s.add_argument("-d", "--delta", type=_real, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_invert)

    s = sub.add_parser("levy", help="Lévy distance between two measures")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--via-cauchy", action="store_true")
    s.add_argument("-y", type=_real)
    s.set_defaults(func=cmd_levy)

    s = sub.add_parser("constants", help="alpha, K, C and n_min for a measure")
    s.add_argument("measure")
    s.add_argument("--c-override", type=_real)
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("lemmas", help="tail and middle integral checks")
    s.add_argument("measure")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--c-override", type=_real)
    s.set_defaults(func=cmd_lemmas)
    return p


def _fail(exc: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ArithmeticError as exc:
        return _fail(exc, 1)
    except (BoolCLTError, ValueError, OSError) as exc:
        return _fail(exc, 2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
