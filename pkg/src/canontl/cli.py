"""``canontl``: compute canonical bases from the command line.

Exit status is 0 on success, 1 when a computation or cross-check fails and
2 for usage errors (bad arguments, labels, or a size above ``--max-n``).
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import cache
from . import hecke as hk
from . import parabolic as pb
from . import render
from . import spin as sp
from . import symgroup as sg
from . import tldiagram as tl
from .verify import SUITES, run_suite

log = logging.getLogger("canontl")


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


# -- argument parsing helpers -------------------------------------------------

def _rational(text):
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")
    if x == 0:
        raise argparse.ArgumentTypeError("q must be nonzero")
    return x


def _n_range(text):
    """``"4"`` or ``"2-5"``."""
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def _ints(text):
    text = text.strip()
    if not text:
        return []
    if "," in text or " " in text:
        return [int(x) for x in text.replace(",", " ").split()]
    return [int(c) for c in text]


def _check_n(args, n):
    if n < 0:
        raise UsageError("n must be nonnegative")
    if n > args.max_n:
        raise UsageError(f"n={n} exceeds the cap --max-n={args.max_n}")


def _label(args, text):
    try:
        lbl = sg.normalize_signs(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.n is not None and len(lbl) != args.n:
        raise UsageError(f"label {text!r} does not have length {args.n}")
    _check_n(args, len(lbl))
    return lbl


def _permutation(args, n):
    if args.word is not None and args.perm is not None:
        raise UsageError("give either --word or --perm, not both")
    try:
        if args.perm is not None:
            w = sg.Permutation(_ints(args.perm))
            if len(w) != n:
                raise UsageError(f"permutation has length {len(w)}, expected {n}")
            return w
        if args.word is not None:
            return sg.from_word(_ints(args.word), n)
    except ValueError as exc:
        raise UsageError(str(exc))
    raise UsageError("an element is required (--word or --perm)")


# -- output -------------------------------------------------------------------

def _values(poly, x):
    return None if x is None else str(poly.eval_at(x))


def _emit_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _emit_spin(args, v):
    if args.output == "json":
        obj = v.to_json()
        if args.q_eval is not None:
            obj["values"] = {s: _values(c, args.q_eval) for s, c in v.items()}
        _emit_json(obj)
        return
    print(v)
    if args.q_eval is not None:
        for s, c in v.items():
            print(f"  [{s}] at q={args.q_eval}: {_values(c, args.q_eval)}")


def _word_text(w):
    return "H[" + ",".join(map(str, sg.reduced_word(w))) + "]"


def _emit_hecke(args, h, head):
    terms = sorted(h.coords.items(), key=lambda kv: (-sg.length(kv[0]), sg.reduced_word(kv[0])))
    if args.output == "json":
        obj = dict(head)
        obj["terms"] = [{"w": list(w), "word": list(sg.reduced_word(w)), "coeff": c.to_json()}
                        for w, c in terms]
        if args.q_eval is not None:
            for t, (_, c) in zip(obj["terms"], terms):
                t["value"] = _values(c, args.q_eval)
        _emit_json(obj)
        return
    print("; ".join(f"{_word_text(w)} coeff {c}" for w, c in terms) or "0")
    if args.q_eval is not None:
        for w, c in terms:
            print(f"  {_word_text(w)} at q={args.q_eval}: {_values(c, args.q_eval)}")


# -- commands -----------------------------------------------------------------

def cmd_dcb(args):
    lbl = _label(args, args.label)
    if args.method == "all":
        vecs = {m: sp.dcb(lbl, m) for m in ("inductive", "explicit", "diagram")}
        if len(set(vecs.values())) != 1:
            for m, v in vecs.items():
                print(f"{m}: {v}", file=sys.stderr)
            raise CheckFailed(f"dual canonical basis algorithms disagree on {lbl}")
        v = vecs["inductive"]
    else:
        v = sp.dcb(lbl, args.method)
    _emit_spin(args, v)


def cmd_cb(args):
    _emit_spin(args, sp.canonical_basis(_label(args, args.label)))


def cmd_kl(args):
    _check_n(args, args.n)
    w = _permutation(args, args.n)
    _emit_hecke(args, hk.kl_basis(w), {"n": args.n, "w": list(w)})


def cmd_parabolic(args):
    _check_n(args, args.n)
    if not 0 <= args.k <= args.n:
        raise UsageError(f"need 0 <= k <= n, got k={args.k}")
    ctx = sg.ParabolicContext(args.n, args.k)
    if args.label is not None:
        lbl = _label(args, args.label)
        if lbl.count("-") != args.k:
            raise UsageError(f"label {lbl!r} does not have {args.k} minus signs")
        w = ctx.seq_tilde_inverse(lbl)
    else:
        w = _permutation(args, args.n)
    if not ctx.is_min_rep(w):
        raise UsageError(f"{list(w)} is not a minimal coset representative for k={args.k}")
    func = {"M": pb.canonical_M, "N": pb.canonical_N,
            "Q": pb.canonical_Nstar, "R": pb.canonical_Mstar}[args.which]
    x = func(w, ctx)
    if args.output == "json":
        obj = x.to_json()
        if args.q_eval is not None:
            for t, (_, c) in zip(obj["terms"], x.items()):
                t["value"] = _values(c, args.q_eval)
        _emit_json(obj)
        return
    sym = {"M": "M", "N": "N", "Nstar": "Q", "Mstar": "R"}[x.kind]
    for v, c in x.items():
        line = f"{sym}{list(v)} [{ctx.seq_tilde(v)}] coeff {c}"
        if args.q_eval is not None:
            line += f" (q={args.q_eval}: {_values(c, args.q_eval)})"
        print(line)


def cmd_enumerate(args):
    _check_n(args, args.n)
    if args.k is None:
        diagrams = [(d, None) for d in tl.enumerate_diagrams(args.n)]
    else:
        if not 0 <= args.k <= args.n:
            raise UsageError(f"need 0 <= k <= n, got k={args.k}")
        diagrams = [(d, sp.diagram_to_label(d, args.k))
                    for d in tl.enumerate_induced_basis(args.n, args.k)]
    if args.output == "json":
        _emit_json([dict(d.to_json(), **({"label": lbl} if lbl else {})) for d, lbl in diagrams])
        return
    for d, lbl in diagrams:
        pairs = " ".join(f"{a}-{b}" for a, b in d.pairs())
        print(f"{lbl}  {pairs}" if lbl else pairs)
    print(f"# {len(diagrams)} diagrams")


def _load_diagram(args):
    if args.label is not None:
        return sp.label_to_diagram(_label(args, args.label))
    if args.generator is not None:
        if args.n is None:
            raise UsageError("--generator needs --n")
        _check_n(args, args.n)
        try:
            return tl.generator_e(args.generator, args.n)
        except ValueError as exc:
            raise UsageError(str(exc))
    if args.diagram is None:
        raise UsageError("give --diagram, --label or --generator")
    text = args.diagram
    try:
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text()
        d = tl.TLDiagram.from_json(json.loads(text))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read diagram: {exc}")
    _check_n(args, max(d.m, d.n))
    return d


def cmd_render(args):
    d = _load_diagram(args)
    out = render.svg(d) if args.format == "svg" else render.ascii(d) + "\n"
    sys.stdout.write(out)


def cmd_verify(args):
    lo, hi = args.n
    _check_n(args, hi)
    suites = sorted(SUITES) if args.suite == "all" else [args.suite]
    cases = []
    for name in suites:
        for n in range(max(lo, 1), hi + 1):
            for case in run_suite(name, n):
                cases.append((name, case))
                if args.output != "json":
                    print(case.line(), flush=True)
    failed = [c for _, c in cases if not c.ok]
    if args.output == "json":
        _emit_json({"cases": [{"suite": s, "name": c.name, "ok": c.ok, "detail": c.detail}
                              for s, c in cases],
                    "passed": len(cases) - len(failed), "failed": len(failed)})
    else:
        print(f"{len(cases) - len(failed)} passed, {len(failed)} failed")
    if failed:
        raise CheckFailed(f"{len(failed)} case(s) failed")


# -- parser -------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="canontl",
        description="Canonical and dual canonical bases via Temperley-Lieb diagrams.")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--max-n", type=int, default=10, help="refuse sizes above this (default 10)")
    p.add_argument("--cache", metavar="PATH",
                   help=f"KL cache file (default ${cache.ENV_VAR} or ~/.cache/canontl/kl.json)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the KL cache")
    p.add_argument("--q-eval", type=_rational, metavar="X",
                   help="also print coefficients evaluated at q = X (exact rational)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dcb", help="dual canonical basis vector of a sign string")
    s.add_argument("--n", type=int)
    s.add_argument("--label", required=True, help='sign string such as "++--"')
    s.add_argument("--method", choices=("inductive", "explicit", "diagram", "all"), default="all")
    s.set_defaults(func=cmd_dcb)

    s = sub.add_parser("cb", help="canonical basis vector of a sign string")
    s.add_argument("--n", type=int)
    s.add_argument("--label", required=True)
    s.set_defaults(func=cmd_cb)

    s = sub.add_parser("kl", help="Kazhdan-Lusztig element B_w in the standard basis")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--word", help='generator word, e.g. "12" or "1,2"')
    s.add_argument("--perm", help='one-line notation, e.g. "2,3,1"')
    s.set_defaults(func=cmd_kl)

    s = sub.add_parser("parabolic", help="canonical basis of M, N or their duals")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--which", choices=("M", "N", "Q", "R"), default="M",
                   help="M, N, or the dual bases Q (of N*) and R (of M*)")
    s.add_argument("--word")
    s.add_argument("--perm")
    s.add_argument("--label", help="sign string standing for its coset representative")
    s.set_defaults(func=cmd_parabolic)

    s = sub.add_parser("enumerate", help="list TL_n diagrams or the induced basis for k")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("render", help="draw a diagram")
    s.add_argument("--diagram", help="JSON text or a path to a JSON file")
    s.add_argument("--label", help="draw the diagram attached to this sign string")
    s.add_argument("--generator", type=int, metavar="I", help="draw e_I")
    s.add_argument("--n", type=int)
    s.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("verify", help="run a theorem suite and report PASS/FAIL per case")
    s.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    s.add_argument("--n", type=_n_range, required=True, metavar="N|LO-HI")
    s.set_defaults(func=cmd_verify)
    return p


_USES_KL = {"kl", "cb", "parabolic", "verify"}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="canontl: %(levelname)s: %(message)s")
    if args.max_n < 1:
        parser.error("--max-n must be at least 1")
    use_cache = args.command in _USES_KL and not args.no_cache
    path = Path(args.cache) if args.cache else cache.default_path()
    before = None
    if use_cache:
        log.debug("loaded %d cached KL elements", cache.load(path))
        before = len(hk.kl_memo)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"canontl: error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"canontl: FAIL: {exc}", file=sys.stderr)
        return 1
    finally:
        if use_cache and len(hk.kl_memo) != before:
            cache.save(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
