"""Walk through a census and a two-phase search on small degree-1 families.

Run with ``python3 demos/census_walkthrough.py``.
"""
from dpcount import (DP1_CHAR2, DP1_CHAR3, GF, LocusFilter, SearchSpace, phase1_survivors,
                     reduced_family, run_census, two_phase_census)


def main():
    f2 = GF(2)
    fam = reduced_family(DP1_CHAR2, f2)
    print("reduced family over F_2:", fam.describe())
    report = run_census(SearchSpace(fam, f2), "affine")
    print("affine histogram:", dict(sorted(report.histogram.items())))
    print("minimum", report.min_count, "attained by", report.extremals[:3])

    f3 = GF(3)
    space = SearchSpace(reduced_family(DP1_CHAR3, f3), f3)
    locus = LocusFilter({"x": 0, "y": 1})
    survivors = phase1_survivors(space, locus)
    print(f"phase 1 over F_3 on x=0, y=1: {len(survivors)} survivor(s)")
    for a in survivors:
        print("  ", {space.family.free[s]: v for s, v in a.items()})
    two = two_phase_census(space, locus, "affine")
    print("two-phase minimum over F_3:", two.min_count, "after", two.scanned, "surfaces")


if __name__ == "__main__":
    main()
