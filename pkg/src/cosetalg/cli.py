"""Command-line front end.

Every subcommand builds an operation dict and hands it to ``execute``, the
same entry point used by ``cosetalg run --manifest``.  Output is JSON with
sorted keys.  Exit status: 0 when everything passes, 1 when an audit fails
(or a refinement exceeds the budget), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

import jsonschema

from .core import CosetAlgError, RefinementBlowup
from .manifest import RunManifest, build_system


class InputError(Exception):
    pass


# ---- element literals ----------------------------------------------------------

def read_literal(text):
    """A JSON literal, '@path' for a file, '-' for stdin; bare strings pass through."""
    if not isinstance(text, str):
        return text
    if text == "-":
        text = _sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def parse_g(sys, v):
    v = read_literal(v)
    if isinstance(v, dict):
        return sys.g_from_json(v)
    if isinstance(v, str) and "," in v:
        n, h = v.split(",", 1)
        return sys.g_from_json({"n": read_literal(n.strip()), "h": read_literal(h.strip())})
    if isinstance(v, list) and len(v) == 2:
        return sys.g_from_json({"n": v[0], "h": v[1]})
    raise InputError(f"cannot read a group element from {v!r}")


def parse_coset(sys, v):
    v = read_literal(v)
    if isinstance(v, dict):
        return sys.coset_from_json(v)
    if isinstance(v, str) and "," in v:
        rep, sub = v.split(",", 1)
        return sys.coset_from_json({"rep": read_literal(rep.strip()), "sub": read_literal(sub.strip())})
    raise InputError(f"cannot read a coset from {v!r}")


def parse_d0(sys, v):
    from .d0 import D0Elem

    v = read_literal(v)
    if isinstance(v, list):
        return D0Elem.from_json(sys, v)
    return D0Elem.indicator(sys, parse_coset(sys, v))


def parse_a0(sys, v):
    from .crossed import A0Elem

    v = read_literal(v)
    if isinstance(v, list) and (not v or "g" in v[0]):
        return A0Elem.from_json(sys, v)
    return A0Elem.from_d0(parse_d0(sys, v))


def parse_hecke(sys, v):
    from .hecke import HeckeElem

    v = read_literal(v)
    if isinstance(v, list) and v and isinstance(v[0], dict) and "g" in v[0]:
        return HeckeElem.from_json(sys, v)
    return HeckeElem.basis(sys, parse_g(sys, v))


def _h(sys, v):
    return sys.h_from_json(read_literal(v))


def _n(sys, v):
    return sys.n_from_json(read_literal(v))


def _sub(sys, v):
    return sys.sub_from_json(read_literal(v))


# ---- the executor ------------------------------------------------------------------

def execute(sys, op: dict):
    """Run one operation; returns (result, ok)."""
    kind = op["op"]
    try:
        return _DISPATCH[kind](sys, op)
    except RefinementBlowup as exc:
        return {"error": {"type": "RefinementBlowup", "index_u": exc.index_u,
                          "index_v": exc.index_v, "budget": exc.budget}}, False


def _audit(sys, op):
    from .audit import AuditConfig, instance_audit
    from .relations import audit_relations, audit_standing

    fam = op.get("family", "all")
    corrupt = bool(op.get("corrupt", False))
    if fam == "full":
        rep = instance_audit(sys, AuditConfig(seed=op.get("seed", AuditConfig.seed)))
        return rep, rep["pass"]
    if fam == "standing":
        rep = audit_standing(sys)
        return rep.to_json(), rep.passed
    fams = ["SP", "SU", "PN", "PNH"] if fam == "all" else [fam]
    reps = [audit_relations(sys, f, corrupt=corrupt) for f in fams]
    if fam == "all":
        reps.insert(0, audit_standing(sys))
    ok = all(r.passed for r in reps)
    if len(reps) == 1:
        return reps[0].to_json(), ok
    return {"pass": ok, "reports": [r.to_json() for r in reps]}, ok


def _mul(sys, op):
    if op.get("kind", "d0") == "a0":
        z = parse_a0(sys, op["lhs"]) * parse_a0(sys, op["rhs"])
    else:
        z = parse_d0(sys, op["lhs"]) * parse_d0(sys, op["rhs"])
    return {"product": z.to_json()}, True


def _act(sys, op):
    g, c = parse_g(sys, op["g"]), parse_coset(sys, op["coset"])
    return {"coset": sys.coset_to_json(sys.act(g, c))}, True


def _refine(sys, op):
    c, w = parse_coset(sys, op["coset"]), _sub(sys, op["sub"])
    return {"cosets": [sys.coset_to_json(d) for d in sys.refine(c, w)]}, True


def _index(sys, op):
    u, w = _sub(sys, op["u"]), _sub(sys, op["w"])
    reps = sys.quotient_reps(u, w)
    return {"index": sys.index(u, w), "reps": [sys.coset_to_json(c) for c in reps]}, True


def _corner(sys, op):
    from .crossed import corner_cut, corner_unit, gen_p, gen_s, gen_u

    gen = op.get("gen")
    if gen == "s":
        z = gen_s(sys, _h(sys, op["a"]))
    elif gen == "u":
        z = gen_u(sys, _n(sys, op["m"]))
    elif gen == "p":
        if "a" in op:
            z = gen_p(sys, _h(sys, op["a"]), _n(sys, op.get("m", sys.n_to_json(sys.n_zero))))
        else:
            z = corner_unit(sys)
    elif "z" in op:
        z = corner_cut(parse_a0(sys, op["z"]))
    else:
        raise InputError("corner needs gen (s, u, p) or z")
    return {"corner": z.to_json()}, True


def _extend(sys, op):
    from .crossed import chi, extend_pn, extend_pnh

    n = _n(sys, op["n"])
    if op.get("kind", "pnh") == "pn":
        a = _h(sys, op.get("a", op.get("h")))
        f, target = extend_pn(sys, a, n), chi(sys, n, a)
    else:
        h = _h(sys, op.get("h", op.get("a")))
        f, target = extend_pnh(sys, h, n), chi(sys, n, h)
    ok = f == target
    return {"extension": f.to_json(), "matches_indicator": ok}, ok


def _hecke_mul(sys, op):
    z = parse_hecke(sys, op["lhs"]) * parse_hecke(sys, op["rhs"])
    return {"product": z.to_json()}, True


def _hecke_decompose(sys, op):
    from .hecke import double_coset, left_coset_decomposition

    g = parse_g(sys, op["g"])
    reps = left_coset_decomposition(sys, g)
    return {"double_coset": sys.g_to_json(double_coset(sys, g)), "count": len(reps),
            "left_cosets": [sys.g_to_json(r) for r in reps]}, True


def _hecke_index(sys, op):
    from .hecke import hecke_index, hecke_pair_check

    g = parse_g(sys, op["g"])
    lg, formula = hecke_pair_check(sys, g), hecke_index(sys, g)
    return {"index": lg, "formula": formula}, lg == formula


def _duality(sys, op):
    from .duality import duality_check

    kw = {"samples": op.get("samples", 200), "seed": op.get("seed", 0)}
    if sys.name == "lamplighter" and "offset" in op:
        kw["offset"] = op["offset"]
    rep = duality_check(sys, **kw)
    return rep.to_json(), rep.passed


def _repr_apply(sys, op):
    from .repr_oracle import FinVec, apply, ops_from_json

    ops = ops_from_json(sys, read_literal(op["ops"]))
    v = FinVec.from_json(sys, read_literal(op["vec"]))
    return {"vector": apply(sys, ops, v).to_json()}, True


def _repr_check(sys, op):
    import random

    from .repr_oracle import intertwining_check, oracle_check, random_corner_word

    rng = random.Random(op.get("seed", 0))
    words = [random_corner_word(sys, rng, op.get("max_len", 5)) for _ in range(op.get("words", 100))]
    reps = [oracle_check(sys, words), intertwining_check(sys, corrupt=bool(op.get("corrupt", False)))]
    ok = all(r.passed for r in reps)
    return {"pass": ok, "reports": [r.to_json() for r in reps]}, ok


_DISPATCH = {
    "audit": _audit, "mul": _mul, "act": _act, "refine": _refine, "index": _index,
    "corner": _corner, "extend": _extend, "hecke-mul": _hecke_mul,
    "hecke-decompose": _hecke_decompose, "hecke-index": _hecke_index,
    "duality": _duality, "repr-apply": _repr_apply, "repr-check": _repr_check,
}


# ---- argparse ----------------------------------------------------------------------

def _instance_args(p):
    p.add_argument("--instance", default="rational", choices=["rational", "numberfield", "lamplighter"])
    p.add_argument("--minpoly", help="monic integer coefficients, constant term first, e.g. --minpoly=-2,0,1")
    p.add_argument("--modulus", type=int, help="order of the lamp group Z/m (lamplighter)")
    p.add_argument("--out", help="write the JSON report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cosetalg", description="Exact coset-indicator, crossed-product and Hecke computations.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def cmd(parent, name, help_, op, *args):
        p = parent.add_parser(name, help=help_)
        _instance_args(p)
        for flags, kw in args:
            p.add_argument(*flags, **kw)
        p.set_defaults(op=op)
        return p

    cmd(sub, "audit", "relation and standing-condition audits", "audit",
        (("--family",), {"default": "all", "choices": ["SP", "SU", "PN", "PNH", "standing", "all", "full"]}),
        (("--corrupt",), {"action": "store_true", "help": "audit the deliberately corrupted family"}))
    cmd(sub, "mul", "product of two D0 (or A0) elements", "mul",
        (("--lhs",), {"required": True}), (("--rhs",), {"required": True}),
        (("--kind",), {"default": "d0", "choices": ["d0", "a0"]}))
    cmd(sub, "act", "the ax+b action on a coset", "act",
        (("--g",), {"required": True}), (("--coset",), {"required": True}))
    cmd(sub, "refine", "split a coset into cosets of a smaller subgroup", "refine",
        (("--coset",), {"required": True}), (("--sub",), {"required": True}))
    cmd(sub, "index", "[u : w] with the quotient representatives", "index",
        (("--u",), {"required": True}), (("--w",), {"required": True}))
    cmd(sub, "corner", "corner generators s_a, u(m), p(a, m), or p z p", "corner",
        (("--gen",), {"choices": ["s", "u", "p"]}), (("--a",), {}), (("--m",), {}), (("--z",), {}))
    cmd(sub, "extend", "extend P to a in H^+, n in N (pn) or h in H (pnh)", "extend",
        (("--kind",), {"default": "pnh", "choices": ["pn", "pnh"]}), (("--h",), {"required": True}),
        (("--n",), {"required": True}))

    hk = sub.add_parser("hecke", help="Hecke algebra of (G, M)").add_subparsers(dest="hcmd", required=True)
    cmd(hk, "mul", "convolution product", "hecke-mul", (("--lhs",), {"required": True}), (("--rhs",), {"required": True}))
    cmd(hk, "decompose", "left-coset decomposition of MgM", "hecke-decompose", (("--g",), {"required": True}))
    cmd(hk, "index", "[M : M n gMg^-1]", "hecke-index", (("--g",), {"required": True}))

    du = sub.add_parser("duality", help="bicharacter checks").add_subparsers(dest="dcmd", required=True)
    cmd(du, "check", "symmetry and self-duality on random samples", "duality",
        (("--samples",), {"type": int, "default": 200}), (("--seed",), {"type": int, "default": 0}),
        (("--offset",), {"type": int, "help": "lamplighter pairing offset (default 1)"}))

    rp = sub.add_parser("repr", help="operator model on finitely supported vectors").add_subparsers(dest="rcmd", required=True)
    cmd(rp, "apply", "apply an operator word to a vector", "repr-apply",
        (("--ops",), {"required": True}), (("--vec",), {"required": True}))
    cmd(rp, "check", "symbolic vs operator words, and intertwining identities", "repr-check",
        (("--words",), {"type": int, "default": 100}), (("--seed",), {"type": int, "default": 0}),
        (("--corrupt",), {"action": "store_true"}))

    run = sub.add_parser("run", help="execute a run manifest")
    run.add_argument("--manifest", required=True)
    run.add_argument("--out")
    run.set_defaults(op=None)
    return ap


_ARG_KEYS = ("family", "corrupt", "lhs", "rhs", "kind", "g", "coset", "sub", "u", "w", "gen", "a", "m", "z",
             "h", "n", "samples", "seed", "offset", "ops", "vec", "words")


def _emit(payload, out):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        _sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "run":
            man = RunManifest.load(args.manifest)
            system = man.build_system()
            op = man.operation
            out = args.out or man.output
        else:
            inst = {"name": args.instance}
            if args.minpoly:
                inst["minpoly"] = [int(t) for t in read_literal_list(args.minpoly)]
            if args.modulus is not None:
                inst["modulus"] = args.modulus
            system = build_system(inst)
            op = {"op": args.op}
            for k in _ARG_KEYS:
                v = getattr(args, k, None)
                if v is not None and v is not False:
                    op[k] = v
            out = args.out
        result, ok = execute(system, op)
    except (jsonschema.ValidationError, InputError, KeyError, TypeError, ValueError, OSError) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc).splitlines()[0]}}, None)
        return 2
    except CosetAlgError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, None)
        return 2
    payload = {"instance": system.describe(), "op": op["op"], "pass": ok, "result": result}
    _emit(payload, out)
    return 0 if ok else 1


def read_literal_list(text: str) -> list:
    v = read_literal(text)
    if isinstance(v, list):
        return v
    if isinstance(v, int):
        return [v]
    return [t for t in str(v).replace(" ", "").split(",") if t]


if __name__ == "__main__":
    raise SystemExit(main())
