"""Dense univariate polynomial arithmetic over Q and over prime fields F_p.

A polynomial is a tuple of coefficients, lowest degree first, with a nonzero
last entry; the empty tuple is the zero polynomial.  Coefficients are
``fractions.Fraction`` when the characteristic is 0 (pass ``p=None``) and
plain ints in ``range(p)`` when the characteristic is a prime ``p``.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = ()


def cnorm(c, p):
    """Coerce a raw coefficient into the field's canonical form."""
    if p is None:
        return c if isinstance(c, Fraction) else Fraction(c)
    return c % p


def trim(coeffs):
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def poly(coeffs, p):
    return trim(cnorm(c, p) for c in coeffs)


def const(c, p):
    return trim((cnorm(c, p),))


def degree(f):
    """Degree of f; -1 for the zero polynomial."""
    return len(f) - 1


def lead(f):
    return f[-1]


def padd(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    cs = list(f)
    for i, c in enumerate(g):
        cs[i] = cs[i] + c if p is None else (cs[i] + c) % p
    return trim(cs)


def pneg(f, p):
    if p is None:
        return tuple(-c for c in f)
    return tuple((-c) % p for c in f)


def psub(f, g, p):
    return padd(f, pneg(g, p), p)


def pmul(f, g, p):
    if not f or not g:
        return ZERO
    cs = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            cs[i + j] += a * b
    if p is not None:
        cs = [c % p for c in cs]
    return trim(cs)


def pscale(f, c, p):
    c = cnorm(c, p)
    if not c:
        return ZERO
    if p is None:
        return tuple(a * c for a in f)
    return trim((a * c) % p for a in f)


def cinv(c, p):
    if p is None:
        return Fraction(1) / c
    return pow(c, -1, p)


def pdivmod(f, g, p):
    """Quotient and remainder of f by g over a field; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if degree(f) < degree(g):
        return ZERO, f
    inv_lead = cinv(lead(g), p)
    rem = list(f)
    q = [cnorm(0, p)] * (len(f) - len(g) + 1)
    for shift in range(len(f) - len(g), -1, -1):
        c = rem[shift + len(g) - 1]
        if p is not None:
            c %= p
        if not c:
            continue
        factor = c * inv_lead if p is None else (c * inv_lead) % p
        q[shift] = factor
        for i, b in enumerate(g):
            rem[shift + i] -= factor * b
    if p is not None:
        rem = [c % p for c in rem]
    return trim(q), trim(rem)


def pmod(f, g, p):
    return pdivmod(f, g, p)[1]


def monic(f, p):
    """Return (monic associate of f, leading unit u) with f = u * associate."""
    if not f:
        return ZERO, cnorm(1, p)
    u = lead(f)
    if u == 1:
        return f, cnorm(1, p)
    return pscale(f, cinv(u, p), p), u


def pgcd(f, g, p):
    while g:
        f, g = g, pmod(f, g, p)
    return monic(f, p)[0]


def pxgcd(f, g, p):
    """Extended gcd: returns (d, u, v) with u*f + v*g = d and d monic (or zero)."""
    r0, r1 = f, g
    s0, s1 = const(1, p), ZERO
    t0, t1 = ZERO, const(1, p)
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if r0:
        w = cinv(lead(r0), p)
        r0, s0, t0 = pscale(r0, w, p), pscale(s0, w, p), pscale(t0, w, p)
    return r0, s0, t0


def pderiv(f, p):
    if len(f) <= 1:
        return ZERO
    cs = [i * c for i, c in enumerate(f)][1:]
    if p is not None:
        cs = [c % p for c in cs]
    return trim(cs)


def peval(f, x):
    """Evaluate a rational-coefficient polynomial at x (Horner)."""
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def pth_root(f, p):
    """Inverse of Frobenius for f with zero derivative: g with g**p == f.

    Over F_p, a polynomial with zero derivative is h(x**p) and the root has
    the same coefficients (a**p == a in F_p).
    """
    return trim(f[i] for i in range(0, len(f), p))


def sort_key(f):
    """Total order on coefficient tuples: by degree, then coefficient values."""
    return (len(f),) + tuple(f)


def to_string(f, var="x"):
    """Human-readable rendering, highest degree first."""
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            xp = var if i == 1 else f"{var}^{i}"
            if c == 1:
                parts.append(xp)
            elif c == -1:
                parts.append(f"-{xp}")
            else:
                parts.append(f"{c}*{xp}")
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out
