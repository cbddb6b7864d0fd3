"""Regenerate src/relhull/_conway.py.

Searches, for every prime power p^l <= 2^16 with l >= 2, the least monic
polynomial in Conway order that is primitive and compatible with the
Conway polynomials of every proper subfield.

    python tools/gen_conway.py > src/relhull/_conway.py
"""

from __future__ import annotations

import itertools
import sys

from relhull.polynomials import is_prime, order_is_full, poly_eval_mod, polypowmod

LIMIT = 1 << 16


def smallest_primitive_root(p: int) -> int:
    for g in range(1, p):
        if order_is_full([g], [0, 1], p):
            return g
    raise ValueError(p)


def conway_search(p: int, l: int, table: dict) -> tuple[int, ...]:
    q = p**l
    subs = [d for d in range(1, l) if l % d == 0]
    for alphas in itertools.product(range(p), repeat=l):
        # alphas = (a_{l-1}, ..., a_0); coefficient c_i = (-1)^(l-i) a_i
        coeffs = [0] * (l + 1)
        coeffs[l] = 1
        for pos, a in enumerate(alphas):
            i = l - 1 - pos
            coeffs[i] = (a if (l - i) % 2 == 0 else -a) % p
        if coeffs[0] == 0:
            continue
        if not order_is_full([0, 1], coeffs, p):
            continue
        ok = True
        for d in subs:
            y = polypowmod([0, 1], (q - 1) // (p**d - 1), coeffs, p)
            if poly_eval_mod(list(table[(p, d)]), y, coeffs, p):
                ok = False
                break
        if ok:
            return tuple(coeffs)
    raise RuntimeError((p, l))


def main() -> None:
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    out: dict[tuple[int, int], tuple[int, ...]] = {}
    for p in range(2, 257):
        if not is_prime(p):
            continue
        g = smallest_primitive_root(p)
        table[(p, 1)] = ((-g) % p, 1)
        l = 2
        while p**l <= LIMIT:
            table[(p, l)] = conway_search(p, l, table)
            out[(p, l)] = table[(p, l)]
            l += 1
    w = sys.stdout.write
    w('"""Conway polynomials for GF(p^l), l >= 2, p^l <= 2^16.\n\n')
    w("Coefficients constant term first. Generated by tools/gen_conway.py.\n")
    w('Degree-1 entries are x - g for the least primitive root g, computed on demand.\n"""\n\n')
    w("CONWAY: dict[tuple[int, int], tuple[int, ...]] = {\n")
    for key, val in sorted(out.items()):
        w(f"    {key}: {val},\n")
    w("}\n")


if __name__ == "__main__":
    main()
