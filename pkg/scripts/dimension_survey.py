#!/usr/bin/env python3
"""Survey the three solved space dimensions across the fixture catalog.

Whether the weighted Jordan space can exceed the weighted space on a
non-commutative algebra with a right identity is not settled by the checks
(only the inclusion chain is asserted), so this table reports all three
dimensions side by side for inspection.

    python3 scripts/dimension_survey.py [--p P] [--q Q]
"""

import argparse

from pqcent.algebras import is_commutative, is_unital, right_identities
from pqcent.centralizers import (
    Weights,
    pq_centralizers,
    pq_jordan_centralizers,
    two_sided_centralizers,
)
from pqcent.fixtures import fixtures


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=1)
    parser.add_argument("--q", type=int, default=2)
    args = parser.parse_args()
    w = Weights(args.p, args.q)

    header = (f"{'fixture':<18} {'dim':>3} {'two-sided':>9} "
              f"{'weighted':>8} {'jordan':>6}  flags")
    print(f"weights ({w.p},{w.q})")
    print(header)
    print("-" * len(header))
    for name, a in fixtures().items():
        dims = (
            two_sided_centralizers(a).dim,
            pq_centralizers(a, w).dim,
            pq_jordan_centralizers(a, w).dim,
        )
        flags = []
        if is_unital(a):
            flags.append("unital")
        elif right_identities(a) is not None:
            flags.append("right-identity")
        if is_commutative(a):
            flags.append("commutative")
        gap = " strict-jordan-gap" if dims[2] > dims[1] else ""
        print(f"{name:<18} {a.dim:>3} {dims[0]:>9} {dims[1]:>8} "
              f"{dims[2]:>6}  {','.join(flags) or '-'}{gap}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
