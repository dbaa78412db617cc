"""Zone-folded gap against diameter for every (n, m) with 0 <= m <= n <= N.

Writes CSV to stdout: n, m, diameter_nm, zone_folded_eV, tb_rule_eV, rule_0p8_eV.
"""

import argparse
import csv
import sys

from nanofet.electronic import gap_estimate, tight_binding_gap_rule, zone_folded_gap
from nanofet.geometry import ChiralIndices, cnt_diameter


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=30)
    args = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "m", "diameter_nm", "zone_folded_eV", "tb_rule_eV", "rule_0p8_eV"])
    for n in range(1, args.max_n + 1):
        for m in range(n + 1):
            c = ChiralIndices(n, m)
            d = cnt_diameter(c)
            w.writerow([n, m, f"{d:.6f}", f"{zone_folded_gap(c):.6f}",
                        f"{tight_binding_gap_rule(d):.6f}", f"{gap_estimate(d):.6f}"])


if __name__ == "__main__":
    main()
