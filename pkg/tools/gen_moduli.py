"""Regenerate src/liftmrd/_moduli.py.

Base fields: smallest monic primitive polynomial per prime power q <= 2**16.
Extensions: smallest monic irreducible of degree m over GF(q) for
q in {2,3,4,5,7,8,9} and 1 <= m <= 16.
"""

import pathlib

from liftmrd.fields import GF, first_irreducible, first_primitive_poly, prime_power

EXT_Q = (2, 3, 4, 5, 7, 8, 9)


def main():
    base = {}
    for q in range(4, 1 << 16 + 1):
        try:
            p, e = prime_power(q)
        except ValueError:
            continue
        if e > 1:
            base[q] = first_primitive_poly(p, e)
    ext = {}
    for q in EXT_Q:
        F = GF(q, modulus=base.get(q))
        for m in range(1, 17):
            ext[(q, m)] = first_irreducible(F, m)
    lines = ['"""Frozen moduli tables.  Generated by tools/gen_moduli.py; do not edit."""', "",
             "# q -> primitive polynomial over GF(p), constant term first",
             "BASE_PRIMITIVE = {"]
    lines += [f"    {q}: {f}," for q, f in sorted(base.items())]
    lines += ["}", "", "# (q, m) -> irreducible of degree m over GF(q), constant term first",
              "EXTENSION_MODULI = {"]
    lines += [f"    {key}: {f}," for key, f in sorted(ext.items())]
    lines += ["}", ""]
    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "liftmrd" / "_moduli.py"
    out.write_text("\n".join(lines))


if __name__ == "__main__":
    main()
