"""Dense polynomials over GF(p), coefficient lists with the constant term first.

Only what the field constructor needs: products and remainders modulo a
monic polynomial, powers, irreducibility by trial division, and the
primitivity test for ``x``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of ``n``, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def polymod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = [x % p for x in a]
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            shift = i - df
            for j in range(df + 1):
                a[shift + j] = (a[shift + j] - c * f[j]) % p
    return trim(a[:df]) if len(a) > df else trim(a)


def polyrem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo any nonzero ``b``."""
    b = trim(b)
    lead_inv = pow(b[-1], -1, p)
    monic = [(x * lead_inv) % p for x in b]
    return polymod(a, monic, p)


def polymulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return polymod(out, f, p)


def polypowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = polymod(a, f, p)
    while e:
        if e & 1:
            result = polymulmod(result, base, f, p)
        base = polymulmod(base, base, f, p)
        e >>= 1
    return result


def poly_eval_mod(g: list[int], y: list[int], f: list[int], p: int) -> list[int]:
    """Evaluate ``g`` at the residue ``y`` in GF(p)[x]/(f) by Horner's rule."""
    acc: list[int] = []
    for c in reversed(g):
        acc = polymulmod(acc, y, f, p) or [0]
        acc[0] = (acc[0] + c) % p
        acc = trim(acc)
    return acc


def is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            if not polymod(f, g, p):
                return False
    return True


def order_is_full(a: list[int], f: list[int], p: int) -> bool:
    """True when the residue ``a`` has multiplicative order p^deg(f) - 1."""
    q1 = p ** (len(f) - 1) - 1
    if polypowmod(a, q1, f, p) != [1]:
        return False
    return all(polypowmod(a, q1 // r, f, p) != [1] for r in prime_factors(q1))
