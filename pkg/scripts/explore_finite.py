#!/usr/bin/env python3
"""Walk the finite-topology landscape up to 5 points and print the census.

For each n: topology count, homeomorphism class count with class sizes,
the strongly reversible survivors, and (through n=4) whether the
condensational equivalence classes coincide with the homeomorphism
classes.  Slow parts are the n=5 enumeration (~1s) and the n=4
condensation matrix.
"""

import argparse
import pathlib
import sys
from collections import Counter

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from linetop.finite_explorer import (  # noqa: E402
    MAX_MATRIX_POINTS,
    condensation_preorder,
    enumerate_topologies,
    homeo_classes,
    maximal_chains_in_class,
    reversibility_census,
)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=5, help="max point count")
    parser.add_argument("--chains", action="store_true",
                        help="also print maximal chain lengths per class (n <= 3)")
    args = parser.parse_args()

    for n in range(1, args.n + 1):
        tops = enumerate_topologies(n)
        classes = homeo_classes(n, tops)
        census = reversibility_census(n, tops)
        sizes = Counter(len(c) for c in classes)
        print(f"n={n}: {len(tops)} topologies, {len(classes)} homeo classes "
              f"(orbit sizes {dict(sorted(sizes.items()))})")
        strong = census["stronglyReversible"]
        print(f"  strongly reversible: {len(strong)} "
              f"(open-set counts {[len(tops[i].opens) for i in strong]})")
        print(f"  reversible: {len(census['reversible'])} of {len(tops)}")
        if n <= MAX_MATRIX_POINTS:
            rel = condensation_preorder(n, tops)
            print(f"  condensation classes match homeo classes: {rel.classes_match}")
        if args.chains and n <= 3:
            for cls in classes:
                lengths = maximal_chains_in_class(n, cls[0], tops)
                print(f"  class of #{cls[0]} (size {len(cls)}): "
                      f"maximal chain lengths {lengths}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
