"""Print structure constants [MgM][MhM] for small double cosets of an instance.

    python scripts/hecke_table.py --instance rational --max-index 4
"""

import argparse

from cosetalg.audit import hecke_samples
from cosetalg.hecke import basis_product, hecke_index
from cosetalg.instances import make_instance


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--instance", default="rational")
    ap.add_argument("--max-index", type=int, default=4)
    ap.add_argument("--classes", type=int, default=8)
    args = ap.parse_args(argv)
    sys = make_instance(args.instance)
    classes = hecke_samples(sys, args.classes, args.max_index)
    fmt = lambda g: f"({sys.g_to_json(g)['n']}, {sys.g_to_json(g)['h']})"  # noqa: E731
    for g in classes:
        print(f"{fmt(g)}  L={hecke_index(sys, g)}")
    print()
    for g in classes:
        for h in classes:
            prod = basis_product(sys, g, h)
            terms = " + ".join(f"{c}[{fmt(d)}]" for d, c in sorted(prod.items(), key=lambda kv: sys.g_key(kv[0])))
            print(f"{fmt(g)} * {fmt(h)} = {terms}")


if __name__ == "__main__":
    main()
