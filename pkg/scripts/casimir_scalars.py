"""Tabulate how C1 and C2 act on V_M, symbolically and at sample points.

Also prints the round-trip factors of the inverse map nu -> 2 C1, zeta -> C2
next to the images that do invert the module action.
"""

from fractions import Fraction

from redalg.coeff import substitute
from redalg.drsl2 import build
from redalg.weylmod import ModuleVector, act, casimir_scalars, verify_iso2_on_module


def main() -> None:
    s1, s2 = casimir_scalars()
    print(f"C1 acts by {s1}")
    print(f"C2 acts by {s2}")

    d = build()
    v = ModuleVector.basis()
    point = {"M": Fraction(1, 3), "nu": Fraction(5), "zeta": Fraction(-2, 7)}
    print(f"\nat {', '.join(f'{k}={x}' for k, x in point.items())}:")
    print(f"{'j':>4} {'C1 v_j':>10} {'C2 v_j':>10}")
    for j in range(-4, 5):
        pt = {**point, "j": Fraction(j)}
        c1 = substitute(act(d.c1, v, point=pt).entries[0], pt)
        c2 = substitute(act(d.c2, v, point=pt).entries[0], pt)
        print(f"{j:>4} {str(c1.as_fraction()):>10} {str(c2.as_fraction()):>10}")

    iso = verify_iso2_on_module()
    print("\ninverse-map round trip:")
    for key in ("nu_roundtrip_factor", "zeta_roundtrip_factor", "images_2C1_C2_roundtrip"):
        print(f"  {key} = {iso.meta[key]}")


if __name__ == "__main__":
    main()
