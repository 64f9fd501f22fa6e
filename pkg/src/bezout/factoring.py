"""Budgeted exact factorization for the shipped domains.

Integers: trial division up to a prime budget, then a deterministic
Miller-Rabin test on the cofactor; an unresolved composite cofactor raises
FactorizationBudgetExceeded rather than returning a partial answer.

F_p[x]: trial division by monic polynomials in degree order (exact at desk
scale).  Q[x]: Kronecker interpolation on a primitive integer model.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from . import polyarith as pa
from .errors import FactorizationBudgetExceeded, ZeroInput

TRIAL_BOUND = 10**6

# deterministic Miller-Rabin witness set, exact below 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n):
    """Miller-Rabin primality; deterministic for n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def factor_int(n, trial_bound=TRIAL_BOUND):
    """Factor |n| into {prime: exponent}; n must be nonzero."""
    if n == 0:
        raise ZeroInput("cannot factor zero")
    n = abs(n)
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # 6k+-1 wheel up to the budget (and never past sqrt)
    f = 5
    while f <= trial_bound and f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        # no factor <= trial_bound remains; below bound^2 the cofactor is prime
        if n <= trial_bound * trial_bound or is_probable_prime(n):
            out[n] = out.get(n, 0) + 1
        else:
            raise FactorizationBudgetExceeded(
                f"composite cofactor {n} exceeds the trial budget {trial_bound}"
            )
    return out


def squarefree_int(n):
    """Direct squarefree test by divisor scan; independent of factor_int."""
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


# -- polynomials over F_p ------------------------------------------------------


def _monic_polys_of_degree(p, d):
    """All monic degree-d polynomials over F_p, in canonical order."""
    for i in range(p**d):
        digits = []
        k = i
        for _ in range(d):
            digits.append(k % p)
            k //= p
        yield tuple(digits) + (1,)


def factor_poly_gf(f, p):
    """Factor a nonzero f in F_p[x] into {monic irreducible: exponent} and a unit."""
    if not f:
        raise ZeroInput("cannot factor zero")
    f, unit = pa.monic(f, p)
    out = {}
    d = 1
    while pa.degree(f) >= 2 * d:
        for g in _monic_polys_of_degree(p, d):
            while True:
                q, r = pa.pdivmod(f, g, p)
                if r:
                    break
                out[g] = out.get(g, 0) + 1
                f = q
            if pa.degree(f) < 2 * d:
                break
        d += 1
    if pa.degree(f) >= 1:
        out[f] = out.get(f, 0) + 1
    return out, unit


def irreducible_gf(f, p):
    if pa.degree(f) < 1:
        return False
    f, _ = pa.monic(f, p)
    d = 1
    while 2 * d <= pa.degree(f):
        for g in _monic_polys_of_degree(p, d):
            if not pa.pdivmod(f, g, p)[1]:
                return False
        d += 1
    return True


def squarefree_poly(f, p):
    """gcd with the formal derivative; a zero derivative in characteristic p
    means f is a p-th power (of its Frobenius root), hence not squarefree."""
    if pa.degree(f) < 1:
        return pa.degree(f) == 0
    df = pa.pderiv(f, p)
    if not df:
        return False
    return pa.degree(pa.pgcd(f, df, p)) == 0


# -- polynomials over Q (Kronecker) -------------------------------------------


def _primitive_int_model(f):
    """Scale a rational-coefficient poly to a primitive integer-coefficient one."""
    denom = 1
    for c in f:
        denom = denom * c.denominator // int_gcd(denom, c.denominator)
    ints = [int(c * denom) for c in f]
    content = 0
    for c in ints:
        content = int_gcd(content, c)
    if content:
        ints = [c // content for c in ints]
    return ints


def _int_divisors(n, budget):
    fs = factor_int(n, budget)
    divs = [1]
    for p, e in fs.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _interpolate(points):
    """Lagrange interpolation through (x, y) pairs, exact over Q."""
    n = len(points)
    coeffs = (Fraction(0),)
    for i, (xi, yi) in enumerate(points):
        term = (Fraction(yi),)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            scale = Fraction(1, xi - xj)
            term = pa.pmul(term, (Fraction(-xj) * scale, scale), None)
        coeffs = pa.padd(coeffs, term, None)
    return pa.trim(coeffs)


def factor_poly_q(f, budget=TRIAL_BOUND, combo_cap=200000):
    """Factor a nonzero f in Q[x] into {monic irreducible: exponent} and a unit.

    Kronecker's method: factors of the primitive integer model evaluated at
    k+1 points must divide the values there, so candidate factors come from
    interpolating divisor tuples.  Exponential, but exact; guarded by caps.
    """
    if not f:
        raise ZeroInput("cannot factor zero")
    out = {}
    unit = Fraction(1)
    work = f
    while pa.degree(work) >= 1:
        g = _kronecker_one_factor(work, budget, combo_cap)
        if g is None:
            # work is irreducible
            m, w = pa.monic(work, None)
            out[m] = out.get(m, 0) + 1
            unit *= w
            break
        m, _ = pa.monic(g, None)
        q, r = pa.pdivmod(work, m, None)
        assert not r
        out[m] = out.get(m, 0) + 1
        work = q
    if pa.degree(work) == 0:
        unit *= work[0]
    return out, unit


def _kronecker_one_factor(f, budget, combo_cap):
    """A monic proper factor of f over Q, or None when f is irreducible."""
    n = pa.degree(f)
    if n == 1:
        return None
    ints = _primitive_int_model(f)
    fz = tuple(Fraction(c) for c in ints)
    for target_deg in range(1, n // 2 + 1):
        xs = []
        x = 0
        while len(xs) < target_deg + 1:
            val = pa.peval(fz, x)
            if val != 0:
                xs.append((x, int(val)))
            else:
                # x is a rational root: x - root divides
                return pa.poly((-x, 1), None)
            x = -x if x > 0 else -x + 1
        divisor_lists = []
        for _, val in xs:
            divs = _int_divisors(abs(val), budget)
            divisor_lists.append([d for base in divs for d in (base, -base)])
        total = 1
        for lst in divisor_lists:
            total *= len(lst)
            if total > combo_cap:
                raise FactorizationBudgetExceeded(
                    "Kronecker combination space exceeds the configured cap"
                )
        for combo in _product(divisor_lists):
            cand = _interpolate([(x, y) for (x, _), y in zip(xs, combo)])
            if pa.degree(cand) != target_deg:
                continue
            if any(c.denominator != 1 for c in cand):
                continue
            if not pa.pdivmod(fz, cand, None)[1]:
                return cand
    return None


def _product(lists):
    if not lists:
        yield ()
        return
    for rest in _product(lists[:-1]):
        for v in lists[-1]:
            yield rest + (v,)
