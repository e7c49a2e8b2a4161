"""Run the combined audit over the three shipped instances and print the JSON report.

    python scripts/run_full_audit.py [--out report.json] [--seed N]
"""

import argparse
import sys
import time

from cosetalg.audit import AuditConfig, dump_report, full_audit
from cosetalg.instances import make_instance


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--out")
    ap.add_argument("--seed", type=int, default=AuditConfig.seed)
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    systems = [make_instance(n) for n in ("rational", "numberfield", "lamplighter")]
    report = full_audit(systems, AuditConfig(seed=args.seed))
    text = dump_report(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"pass={report['pass']} elapsed={time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
