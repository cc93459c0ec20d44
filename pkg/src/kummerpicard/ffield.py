"""Arithmetic over F_p and F_p^2 for small odd primes.

Elements of F_p are plain ints in [0, p); an element of F_p^2 is an
``Fq2`` pair (u, v) meaning u + v*alpha with alpha^2 = d, where d is the
smallest quadratic non-residue mod p.  Polynomials over F_p are lists of
ints, ascending by degree.

The counting-critical loops live in :mod:`kummerpicard._kernels`; this
module is the exact, scalar reference layer.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .errors import DegenerateFormError


class Fq2(NamedTuple):
    """u + v*alpha in F_{p^2}, with alpha^2 the canonical non-residue."""

    u: int
    v: int


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}; p an odd prime."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    for d in range(2, p):
        if legendre(d, p) == -1:
            return d
    raise ValueError(f"no non-residue mod {p}")


def quad_char(u: int | Fq2, p: int) -> int:
    """Quadratic character of u in F_p or F_{p^2}: 0, 1 or -1.

    For F_{p^2} the character factors through the norm u^2 - d*v^2.
    """
    if p == 2:
        raise ValueError("characteristic 2 is unsupported")
    if isinstance(u, Fq2):
        d = smallest_nonresidue(p)
        return legendre(u.u * u.u - d * u.v * u.v, p)
    return legendre(u, p)


def fq2_mul(x: Fq2, y: Fq2, p: int) -> Fq2:
    d = smallest_nonresidue(p)
    return Fq2((x.u * y.u + d * x.v * y.v) % p, (x.u * y.v + x.v * y.u) % p)


def fq2_add(x: Fq2, y: Fq2, p: int) -> Fq2:
    return Fq2((x.u + y.u) % p, (x.v + y.v) % p)


def fp_sqrt(u: int, p: int) -> int | None:
    """Deterministic square root mod an odd prime: the smaller of the two
    representatives, or None when u is a non-residue."""
    u %= p
    if u == 0:
        return 0
    if legendre(u, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(u, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = smallest_nonresidue(p)
    m, c, t, r = s, pow(z, q, p), pow(u, q, p), pow(u, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return min(r, p - r)


# ---------------------------------------------------------------------------
# polynomials over F_p (ascending coefficient lists)
# ---------------------------------------------------------------------------

def pnormalize(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def pdeg(f: list[int]) -> int:
    """Degree; the zero polynomial has degree -1."""
    return -1 if f == [0] else len(f) - 1


def pmul(f: list[int], g: list[int], p: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return pnormalize(out, p)


def pmod(f: list[int], g: list[int], p: int) -> list[int]:
    g = pnormalize(list(g), p)
    if g == [0]:
        raise ZeroDivisionError
    r = [c % p for c in f]
    inv = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    for i in range(len(r) - 1 - dg, -1, -1):
        c = r[i + dg]
        if c:
            q = c * inv % p
            for j, b in enumerate(g):
                r[i + j] = (r[i + j] - q * b) % p
    return pnormalize(r[:dg] if dg else [0], p)


def pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd."""
    f, g = pnormalize(list(f), p), pnormalize(list(g), p)
    while g != [0]:
        f, g = g, pmod(f, g, p)
    if f != [0]:
        inv = pow(f[-1], p - 2, p)
        f = [c * inv % p for c in f]
    return f


def pderiv(f: list[int], p: int) -> list[int]:
    return pnormalize([i * f[i] for i in range(1, len(f))] or [0], p)


def peval(f: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def ppowmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = pmod(base, mod, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = pmod(pmul(base, base, p), mod, p)
    return result


def squarefree_layers(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Yun-style squarefree decomposition over F_p (handles p-th powers)."""
    out: list[tuple[list[int], int]] = []
    f = pnormalize(list(f), p)
    if pdeg(f) <= 0:
        return out
    fp = pderiv(f, p)
    if fp == [0]:
        inner = [f[i] for i in range(0, len(f), p)]
        for piece, m in squarefree_layers(inner, p):
            out.append((piece, m * p))
        return out
    c = pgcd(f, fp, p)
    w = exact_pdiv(f, c, p)
    i = 1
    while pdeg(w) > 0:
        y = pgcd(w, c, p)
        z = exact_pdiv(w, y, p)
        if pdeg(z) > 0:
            out.append((z, i))
        c = exact_pdiv(c, y, p)
        w = y
        i += 1
    if pdeg(c) > 0:
        for piece, m in squarefree_layers(c, p):
            out.append((piece, m * p))
    return out


def exact_pdiv(f: list[int], g: list[int], p: int) -> list[int]:
    g = pnormalize(list(g), p)
    r = [c % p for c in f]
    inv = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    out = [0] * max(1, len(r) - dg)
    for i in range(len(r) - 1 - dg, -1, -1):
        c = r[i + dg]
        q = c * inv % p
        out[i] = q
        if q:
            for j, b in enumerate(g):
                r[i + j] = (r[i + j] - q * b) % p
    if any(r[:dg] if dg else []):
        raise ArithmeticError("inexact division over F_p")
    return pnormalize(out, p)


def factor_pattern(f: list[int], p: int) -> tuple[tuple[int, int], ...]:
    """Degrees and multiplicities of the irreducible factors of f over F_p.

    One (degree, multiplicity) entry per irreducible factor.  Only
    distinct-degree factorization is needed since the factors themselves
    never leave this function.
    """
    f = pnormalize(list(f), p)
    if f == [0]:
        raise ValueError("zero polynomial")
    pattern: list[tuple[int, int]] = []
    for piece, mult in squarefree_layers(f, p):
        inv = pow(piece[-1], p - 2, p)
        g = [c * inv % p for c in piece]
        xp = [0, 1]  # x^{p^d} mod g, starting at d = 0
        d = 0
        while pdeg(g) >= 2 * (d + 1):
            d += 1
            xp = ppowmod(xp, p, g, p)
            diff = list(xp) + [0] * max(0, 2 - len(xp))
            diff[1] = (diff[1] - 1) % p
            h = pgcd(g, diff, p)
            if pdeg(h) > 0:
                pattern.extend([(d, mult)] * (pdeg(h) // d))
                g = exact_pdiv(g, h, p)
                xp = pmod(xp, g, p)
        if pdeg(g) > 0:
            pattern.append((pdeg(g), mult))
    return tuple(sorted(pattern))


def conic_points_iter(gram, p: int):
    """Projective points of a ternary quadratic form, in a fixed scan order.

    Yields points (x, y, 1) with y then x ascending, then (x, 1, 0) with x
    ascending, then (1, 0, 0).  The form is given by its symmetric Gram
    matrix over F_p (p odd).
    """
    G = [[gram[i][j] % p for j in range(3)] for i in range(3)]
    for y in range(p):
        # A x^2 + B x + C = 0 with the affine chart z = 1
        A = G[0][0]
        B = (2 * (G[0][1] * y + G[0][2])) % p
        C = (G[1][1] * y * y + 2 * G[1][2] * y + G[2][2]) % p
        for x in _quadratic_roots(A, B, C, p):
            yield (x, y, 1)
    A = G[0][0]
    B = (2 * G[0][1]) % p
    C = G[1][1]
    for x in _quadratic_roots(A, B, C, p):
        yield (x, 1, 0)
    if G[0][0] % p == 0:
        yield (1, 0, 0)


def _quadratic_roots(A: int, B: int, C: int, p: int) -> list[int]:
    A, B, C = A % p, B % p, C % p
    if A == 0:
        if B == 0:
            return []  # C == 0 would be the whole line; cannot happen for rank-3 forms
        return [(-C) * pow(B, p - 2, p) % p]
    disc = (B * B - 4 * A * C) % p
    r = fp_sqrt(disc, p)
    if r is None:
        return []
    inv2a = pow(2 * A % p, p - 2, p)
    roots = sorted({(-B + r) * inv2a % p, (-B - r) * inv2a % p})
    return roots


def gram_det(gram, p: int) -> int:
    G = gram
    det = (
        G[0][0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1])
        - G[0][1] * (G[1][0] * G[2][2] - G[1][2] * G[2][0])
        + G[0][2] * (G[1][0] * G[2][1] - G[1][1] * G[2][0])
    )
    return det % p


def conic_point(gram, p: int) -> tuple[int, int, int]:
    """First rational point of a nondegenerate conic in the canonical scan
    order.  Raises DegenerateFormError when the Gram matrix has rank < 3."""
    if p == 2:
        raise ValueError("characteristic 2 is unsupported")
    if gram_det(gram, p) == 0:
        raise DegenerateFormError("conic has rank < 3")
    for pt in conic_points_iter(gram, p):
        return pt
    raise AssertionError("nondegenerate conic over a finite field always has a point")
