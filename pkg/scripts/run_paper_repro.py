"""Print the reference-value reproduction table and exit non-zero on any failure.

    python3 scripts/run_paper_repro.py [--strict-ln] [--no-device]
"""

import argparse
import sys

from nanofet.repro import ReproOptions, format_report, reproduce


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--strict-ln", action="store_true", help="use the exact ln(b/a) for the capacitance")
    ap.add_argument("--no-device", action="store_true", help="skip the full device build")
    args = ap.parse_args()
    rows = reproduce(ReproOptions(strict_ln=args.strict_ln, build_device=not args.no_device))
    print(format_report(rows))
    return 0 if all(r.passed for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
