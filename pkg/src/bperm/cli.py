"""Command line interface: ``bperm {stats,enumerate,bijection,verify,table}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .identities import (
    IDENTITY_IDS,
    CapExceeded,
    Params,
    UnknownIdentity,
    desarmenien_f,
    enum_polynomial,
    phi,
    phi_inverse,
    verify,
)
from .perm import (
    PermutationError,
    SignedPermutation,
    SubsetClass,
    enumerate_class,
    fix_sets,
    neg,
    pix_sets,
    pixed_factorization,
    stat_profile,
)
from .weighted import (
    WeightedSignedPermutation,
    WspDecomposition,
    decomposition_equalities,
    fdes_pairing,
    macmahon_from_word,
    macmahon_to_word,
    parse_record,
    validate_wsp,
    wsp_decompose,
    wsp_recompose,
)
from .words import IntWord

TABLE_FAMILIES = {"DnB": "DnB", "Dn": "D", "Kn": "K", "An": "A", "Bn": "FLAG"}
BIJECTIONS = ("phi", "phi-inv", "desarmenien", "macmahon", "macmahon-inv",
              "wsp-decompose", "wsp-recompose", "fdes-pair")


class UsageError(ValueError):
    pass


def _sorted(s) -> list[int]:
    return sorted(s)


# -- stats ---------------------------------------------------------------------------

def cmd_stats(args) -> int:
    w = SignedPermutation.parse(args.word)
    profile = stat_profile(w).as_dict()
    fact = pixed_factorization(w)
    if args.json:
        out = {"word": str(w), **profile, "pixed_factorization": str(fact)}
        print(json.dumps(out))
    else:
        print(f"word: {w if w.n else 'e'}")
        for key, value in profile.items():
            print(f"{key}: {value}")
        print(f"pixed_factorization: {fact}")
    return 0


# -- enumerate -----------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    stream = enumerate_class(args.n, args.cls)
    if args.count:
        print(sum(1 for _ in stream))
    else:
        for w in stream:
            print(w)
    return 0


# -- bijection -----------------------------------------------------------------------

def _parse_tau(text: str):
    # "a:b,c:d" is an explicit map; a bare word x1..xn means i -> x_i
    if ":" in text:
        mapping = {}
        for item in text.split(","):
            a, _, b = item.partition(":")
            mapping[int(a)] = int(b)
        return mapping
    return [int(v) for v in text.split(",")] if text.strip() else []


def _parse_decomposition(text: str) -> WspDecomposition:
    fields = parse_record(text)
    for key in ("c", "w", "ve", "vo"):
        fields.setdefault(key, "")
    core = validate_wsp(IntWord.parse(fields["c"]), SignedPermutation.parse(fields["w"]))
    return WspDecomposition(core, IntWord.parse(fields["ve"]), IntWord.parse(fields["vo"]))


def _bijection(name: str, text: str) -> dict:
    if name in ("phi", "phi-inv"):
        w = SignedPermutation.parse(text)
        image = phi(w) if name == "phi" else phi_inverse(w)
        src, dst = (w, image) if name == "phi" else (image, w)
        fp, fm = fix_sets(src)
        pp, pm = pix_sets(dst)
        return {
            "image": str(image),
            "fix_minus": _sorted(fm), "fix_plus": _sorted(fp), "neg": neg(src),
            "pix_minus": _sorted(pm), "pix_plus": _sorted(pp), "neg_image": neg(dst),
        }
    if name == "desarmenien":
        image = desarmenien_f(_parse_tau(text))
        return {"image": ",".join(map(str, image))}
    if name == "macmahon":
        pair = WeightedSignedPermutation.parse(text)
        d = macmahon_to_word(pair)
        return {"image": str(d), "tot": d.tot, "odd": d.odd, "neg": neg(pair.w)}
    if name == "macmahon-inv":
        fields = parse_record(text) if "=" in text else {"d": text}
        s = int(fields["s"]) if "s" in fields else None
        d = IntWord.parse(fields["d"])
        pair = macmahon_from_word(d, s)
        return {"image": str(pair), "tot": pair.c.tot, "neg": neg(pair.w)}
    if name == "wsp-decompose":
        pair = WeightedSignedPermutation.parse(text)
        d = wsp_decompose(pair)
        return {"image": str(d), **decomposition_equalities(pair, d)}
    if name == "wsp-recompose":
        d = _parse_decomposition(text)
        pair = wsp_recompose(d)
        return {"image": str(pair), **decomposition_equalities(pair, d)}
    if name == "fdes-pair":
        fields = parse_record(text)
        pair = WeightedSignedPermutation.parse(text)
        s = int(fields["s"]) if "s" in fields else None
        b, w = fdes_pairing(pair, s)
        return {"image": f"b={b};w={w}", "tot_b": b.tot, "tot_c": pair.c.tot}
    raise UsageError(f"unknown bijection {name!r}")


def cmd_bijection(args) -> int:
    result = _bijection(args.name, args.input)
    if args.json:
        print(json.dumps(result))
    else:
        print(result.pop("image"))
        for key, value in result.items():
            print(f"{key}: {value}")
    return 0


# -- verify --------------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.all == bool(args.identity):
        raise UsageError("give exactly one of --identity or --all")
    params = Params(
        n_max=args.n_max if args.n_max is not None else 5,
        u_order=args.u_order, t_order=args.t_order, q_order=args.q_order, s_max=args.s_max,
    )
    ids = IDENTITY_IDS if args.all else [args.identity]
    ok = True
    for identity in ids:
        report = verify(identity, params)
        ok = ok and report.passed
        print(json.dumps(report.as_dict()), flush=True)
    return 0 if ok else 1


# -- table ---------------------------------------------------------------------------

def cmd_table(args) -> int:
    family = TABLE_FAMILIES[args.family]
    rows = [(n, enum_polynomial(n, family)) for n in range(args.n_max + 1)]
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "polynomial"])
        for n, poly in rows:
            writer.writerow([n, str(poly)])
    else:
        for n, poly in rows:
            print(json.dumps({"family": args.family, "n": n, "terms": poly.to_json_terms()}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bperm", description="Signed permutation statistics and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="statistics and pixed factorization of one word")
    p.add_argument("--word", required=True, help='comma separated letters, e.g. "3,-2,1"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("enumerate", help="list B_n or one of its subsets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=[c.value for c in SubsetClass], default="B")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bijection", help="apply one of the bijections")
    p.add_argument("--name", required=True, choices=BIJECTIONS)
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="check identities; exit status 0 iff all pass")
    p.add_argument("--identity", choices=IDENTITY_IDS)
    p.add_argument("--all", action="store_true")
    p.add_argument("--n-max", type=int)
    p.add_argument("--u-order", type=int, default=5)
    p.add_argument("--t-order", type=int, default=8)
    p.add_argument("--q-order", type=int, default=12)
    p.add_argument("--s-max", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="generating polynomials, one row per n")
    p.add_argument("--family", required=True, choices=list(TABLE_FAMILIES))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PermutationError, ValueError, CapExceeded, UnknownIdentity, RuntimeError) as exc:
        print(f"bperm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
