"""Character labeling helpers for prime moduli.

The primitive-root ("paper") index of a character is its discrete log with respect to the
least primitive root g: the character with Conrey index n (for prime q,
chi_n(g^k) = e^{2 pi i a k/(q-1)} where n = g^a) carries paper index
a = dlog_g(n).  The mapping is verified by evaluating chi at g.
"""

from __future__ import annotations

import cmath
import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def least_primitive_root(q: int) -> int:
    for g in range(2, q):
        if len({pow(g, k, q) for k in range(q - 1)}) == q - 1:
            return g
    raise ValueError(f"no primitive root mod {q}")


def dlog_table(q: int) -> dict[int, int]:
    g = least_primitive_root(q)
    table = {}
    x = 1
    for k in range(q - 1):
        table[x] = k
        x = (x * g) % q
    return table


def conrey_to_paper(q: int) -> dict[int, int]:
    if not is_prime(q) or q < 3:
        raise ValueError(f"modulus {q} must be an odd prime")
    dlog = dlog_table(q)
    g = least_primitive_root(q)
    mapping = {n: dlog[n] for n in dlog}
    # verification: the primitive-root character j evaluated at g must match the
    # Conrey character's value chi_n(g) = e^{2 pi i dlog(n)/(q-1)}
    for n, j in mapping.items():
        paper = cmath.exp(2j * math.pi * j * dlog[g] / (q - 1))
        conrey = cmath.exp(2j * math.pi * dlog[n] / (q - 1))
        if abs(paper - conrey) > 1e-12:
            raise ValueError("conrey->paper mapping failed chi(g) check")
    return mapping


def parity(q: int, j: int) -> int:
    """chi_j(-1) as +-1."""
    dlog = dlog_table(q)
    return 1 if (j * dlog[q - 1]) % (q - 1) == 0 else -1
