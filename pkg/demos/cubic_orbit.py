"""The one-point smooth cubic over F_2 and its orbit under GL_4(F_2).

Run with ``python3 demos/cubic_orbit.py``.
"""
from pathlib import Path

from dpcount import count_points, is_smooth_up_to
from dpcount.cubics import gl4_f2, orbit, surface_to_mask
from dpcount.io import load_surface


def main():
    s = load_surface(Path(__file__).with_name("cubic_f2.json"))
    print("cubic:", s)
    print("points over F_2:", count_points(s))
    print("smoothness:", is_smooth_up_to(s, 3).to_json())
    print("|GL_4(F_2)| =", len(gl4_f2()))
    orb = orbit(surface_to_mask(s))
    print("orbit size:", len(orb), "stabiliser order:", len(gl4_f2()) // len(orb))


if __name__ == "__main__":
    main()
