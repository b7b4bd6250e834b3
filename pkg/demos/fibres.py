"""Fibres of the anticanonical pencil of a degree-1 surface over F_5.

Run with ``python3 demos/fibres.py``.
"""
from dpcount import DP1_CLASSIC, GF, Surface, count_points
from dpcount.picard import base_locus_count, fibers, min_fiber_points


def main():
    f = GF(5)
    s = Surface.from_terms(DP1_CLASSIC, f, {(0, 4, 1, 0): 1, (0, 6, 0, 0): 1})
    print("surface:", s)
    total = 0
    for rep in fibers(s):
        total += rep.count
        print(f"  fibre over {rep.base}: {rep.count} affine points, smooth={rep.smooth},"
              f" Hasse={rep.hasse}")
    print("base locus x=y=0:", base_locus_count(s))
    print("fibres + base locus =", total + base_locus_count(s), "= #X(F_5) =", count_points(s))
    print("a smooth fibre over F_5 has at least", min_fiber_points(5), "points")


if __name__ == "__main__":
    main()
