"""Shipped ring instances: Z, Q[x], F_p[x] and their finite quotients.

All three base instances are principal ideal domains, so every finitely
generated ideal is principal and the extended-gcd contract is exact; the
quotient construction keeps gcd arithmetic available through lifts.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from . import polyarith as pa
from .errors import (
    MalformedInput,
    NotDivisible,
    PreconditionFailed,
    SearchExhausted,
    TooLarge,
    UnitModulus,
    UnsupportedRing,
    ZeroModulus,
)
from .rings import ExtendedGcd, Ring, RingElement, generic_normalize_cofactors

DEFAULT_ENUM_CAP = 10**6
SEARCH_CAP = 10**6


def _int_xgcd(a, b):
    """Extended Euclid with the gcd normalized nonnegative."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _domain_normalize_cofactors(ring, a, b, d, a1, b1):
    """normalize_cofactors for domain instances.

    Cofactors of a true gcd are already coprime in a domain, so the search
    branch of the quotient version degenerates: there is nothing to repair.
    """
    if a1 * d != a or b1 * d != b:
        raise PreconditionFailed("inputs do not satisfy a = a1*d, b = b1*d")
    if ring.is_zero(d):
        return ring.one, ring.zero, ring.one, ring.zero
    g = ring.gcdex(a1, b1)
    if not ring.is_unit(g.d):
        raise SearchExhausted(
            "cofactors are not comaximal; in a domain this means d does not generate (a, b)"
        )
    w = ring.divide_exact(ring.one, g.d)
    return a1, b1, g.u * w, g.v * w


class IntegerRing(Ring):
    """The ring of rational integers with exact arbitrary-precision arithmetic."""

    is_domain = True

    def _key(self):
        return ("Z",)

    def describe(self):
        return "Z"

    # payload protocol -----------------------------------------------------
    def p_canon(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise MalformedInput(f"not an integer payload: {x!r}")
        return x

    def p_add(self, x, y):
        return x + y

    def p_neg(self, x):
        return -x

    def p_mul(self, x, y):
        return x * y

    def p_mod(self, x, m):
        return x % m

    def p_xgcd(self, x, y):
        return _int_xgcd(x, y)

    def p_is_unit(self, x):
        return x in (1, -1)

    def p_divexact(self, x, y):
        q, r = divmod(x, y)
        if r:
            raise NotDivisible(f"{y} does not divide {x}")
        return q

    def p_canon_assoc(self, x):
        return (-x, -1) if x < 0 else (x, 1)

    def p_sort_key(self, x):
        return x

    def p_to_json(self, x):
        return x

    def p_from_json(self, data):
        if isinstance(data, bool) or not isinstance(data, int):
            raise MalformedInput(f"expected an integer, got {data!r}")
        return data

    def p_format(self, x):
        return str(x)

    # ring interface ---------------------------------------------------------
    def _canon(self, payload):
        return self.p_canon(payload)

    def _add(self, x, y):
        return x + y

    def _neg(self, x):
        return -x

    def _mul(self, x, y):
        return x * y

    def is_unit(self, a):
        self._check(a)
        return a.payload in (1, -1)

    def divide_exact(self, a, b):
        self._check(a, b)
        if b.payload == 0:
            if a.payload == 0:
                return self.zero
            raise NotDivisible("division by zero with a nonzero dividend")
        return RingElement(self, self.p_divexact(a.payload, b.payload))

    def gcdex(self, a, b):
        self._check(a, b)
        if a.payload == 0 and b.payload == 0:
            return ExtendedGcd(self.zero, self.zero, self.zero, self.one, self.zero, all_zero=True)
        d, u, v = _int_xgcd(a.payload, b.payload)
        el = lambda x: RingElement(self, x)
        return ExtendedGcd(el(d), el(u), el(v), el(a.payload // d), el(b.payload // d))

    def normalize_cofactors(self, a, b, d, a1, b1):
        self._check(a, b, d, a1, b1)
        return _domain_normalize_cofactors(self, a, b, d, a1, b1)

    def canonical_associate(self, a):
        self._check(a)
        c, w = self.p_canon_assoc(a.payload)
        return RingElement(self, c), RingElement(self, w)

    def sort_key(self, a):
        return a.payload

    def element_to_json(self, a):
        return a.payload

    def element_from_json(self, data):
        return self.el(self.p_from_json(data))

    def format_element(self, a):
        return str(a.payload)


class PolynomialRing(Ring):
    """Univariate polynomials over Q (characteristic None) or F_p.

    Payloads are coefficient tuples, lowest degree first; see polyarith.
    """

    is_domain = True

    def __init__(self, characteristic=None):
        super().__init__()
        if characteristic is not None:
            if characteristic < 2 or any(
                characteristic % q == 0 for q in range(2, int(characteristic**0.5) + 1)
            ):
                raise MalformedInput(f"characteristic must be prime, got {characteristic}")
        self.characteristic = characteristic

    def _key(self):
        return ("poly", self.characteristic)

    def describe(self):
        if self.characteristic is None:
            return "Q[x]"
        return f"F{self.characteristic}[x]"

    # payload protocol --------------------------------------------------------
    def p_canon(self, x):
        p = self.characteristic
        if isinstance(x, (int, Fraction)):
            return pa.const(x, p)
        return pa.poly(x, p)

    def p_add(self, x, y):
        return pa.padd(x, y, self.characteristic)

    def p_neg(self, x):
        return pa.pneg(x, self.characteristic)

    def p_mul(self, x, y):
        return pa.pmul(x, y, self.characteristic)

    def p_mod(self, x, m):
        return pa.pmod(x, m, self.characteristic)

    def p_xgcd(self, x, y):
        return pa.pxgcd(x, y, self.characteristic)

    def p_is_unit(self, x):
        return pa.degree(x) == 0

    def p_divexact(self, x, y):
        q, r = pa.pdivmod(x, y, self.characteristic)
        if r:
            raise NotDivisible("inexact polynomial division")
        return q

    def p_canon_assoc(self, x):
        c, w = pa.monic(x, self.characteristic)
        return c, pa.const(w, self.characteristic)

    def p_sort_key(self, x):
        return (len(x),) + tuple(reversed(x))

    def p_to_json(self, x):
        out = []
        for c in x:
            if isinstance(c, Fraction) and c.denominator != 1:
                out.append(str(c))
            else:
                out.append(int(c))
        return out

    def p_from_json(self, data):
        if isinstance(data, bool):
            raise MalformedInput("expected a polynomial, got a boolean")
        if isinstance(data, int):
            return pa.const(data, self.characteristic)
        if not isinstance(data, list):
            raise MalformedInput(f"expected a coefficient list, got {data!r}")
        coeffs = []
        for c in data:
            if isinstance(c, str):
                coeffs.append(Fraction(c))
            elif isinstance(c, int) and not isinstance(c, bool):
                coeffs.append(c)
            else:
                raise MalformedInput(f"bad coefficient {c!r}")
        if self.characteristic is None:
            return pa.poly(coeffs, None)
        if any(isinstance(c, Fraction) for c in coeffs):
            raise MalformedInput("fractional coefficients in positive characteristic")
        return pa.poly(coeffs, self.characteristic)

    def p_format(self, x):
        return pa.to_string(x)

    # ring interface --------------------------------------------------------
    def _canon(self, payload):
        return self.p_canon(payload)

    def _add(self, x, y):
        return pa.padd(x, y, self.characteristic)

    def _neg(self, x):
        return pa.pneg(x, self.characteristic)

    def _mul(self, x, y):
        return pa.pmul(x, y, self.characteristic)

    def is_unit(self, a):
        self._check(a)
        return pa.degree(a.payload) == 0

    def divide_exact(self, a, b):
        self._check(a, b)
        if not b.payload:
            if not a.payload:
                return self.zero
            raise NotDivisible("division by zero with a nonzero dividend")
        return RingElement(self, self.p_divexact(a.payload, b.payload))

    def gcdex(self, a, b):
        self._check(a, b)
        if not a.payload and not b.payload:
            return ExtendedGcd(self.zero, self.zero, self.zero, self.one, self.zero, all_zero=True)
        d, u, v = self.p_xgcd(a.payload, b.payload)
        el = lambda x: RingElement(self, x)
        return ExtendedGcd(
            el(d), el(u), el(v), el(self.p_divexact(a.payload, d)), el(self.p_divexact(b.payload, d))
        )

    def normalize_cofactors(self, a, b, d, a1, b1):
        self._check(a, b, d, a1, b1)
        return _domain_normalize_cofactors(self, a, b, d, a1, b1)

    def canonical_associate(self, a):
        self._check(a)
        c, w = self.p_canon_assoc(a.payload)
        return RingElement(self, c), RingElement(self, w)

    def sort_key(self, a):
        return self.p_sort_key(a.payload)

    def element_to_json(self, a):
        return self.p_to_json(a.payload)

    def element_from_json(self, data):
        return RingElement(self, self.p_from_json(data))

    def format_element(self, a):
        return pa.to_string(a.payload)

    def variable(self):
        p = self.characteristic
        return RingElement(self, pa.poly((0, 1), p))


class QuotientRing(Ring):
    """R/mR for R one of the shipped principal ideal domains.

    Elements are canonical residues (smallest nonnegative lift over Z,
    least-degree remainder over F_p[x] and Q[x]).  Quotients of quotients
    are not supported; collapse the modulus in the base ring instead.
    """

    is_domain = False

    def __init__(self, base, modulus_payload):
        super().__init__()
        if not isinstance(base, (IntegerRing, PolynomialRing)):
            raise UnsupportedRing("quotient base must be Z or a polynomial ring")
        self.base = base
        m, _ = base.p_canon_assoc(base.p_canon(modulus_payload))
        if m == 0 or m == ():
            raise ZeroModulus("modulus must be nonzero")
        if base.p_is_unit(m):
            raise UnitModulus("modulus must not be a unit")
        self.modulus = m

    def _key(self):
        return ("quot", self.base._key(), self.modulus)

    def describe(self):
        if isinstance(self.base, IntegerRing):
            return f"Z/{self.modulus}"
        coeffs = json.dumps(self.base.p_to_json(self.modulus), separators=(",", ":"))
        return f"{self.base.describe()}/{coeffs}"

    # payload helpers -------------------------------------------------------
    def _canon(self, payload):
        return self.base.p_mod(self.base.p_canon(payload), self.modulus)

    def _add(self, x, y):
        return self.base.p_mod(self.base.p_add(x, y), self.modulus)

    def _neg(self, x):
        return self.base.p_mod(self.base.p_neg(x), self.modulus)

    def _mul(self, x, y):
        return self.base.p_mod(self.base.p_mul(x, y), self.modulus)

    def lift(self, a):
        """The canonical representative of a in the base ring."""
        self._check(a)
        return RingElement(self.base, a.payload)

    def reduce(self, x):
        """Image of a base-ring element in the quotient."""
        if isinstance(x, RingElement):
            if x.ring != self.base:
                raise UnsupportedRing("reduce expects an element of the base ring")
            x = x.payload
        return RingElement(self, self._canon(x))

    def modulus_key(self, a):
        """gcd of the lift with the modulus; the generator key of a's ideal."""
        self._check(a)
        g, _, _ = self.base.p_xgcd(a.payload, self.modulus)
        return g

    # combination witnesses ------------------------------------------------------
    def _combined_gcd(self, x, y):
        """(g, u, v) with x*u + y*v == g (mod modulus) and g = gcd(x, y, m)."""
        base = self.base
        g1, x1, y1 = base.p_xgcd(x, y)
        g, x2, _ = base.p_xgcd(g1, self.modulus)
        u = self._canon(base.p_mul(x1, x2))
        v = self._canon(base.p_mul(y1, x2))
        return g, u, v

    def _combination_witness(self, a, b):
        g, u, v = self._combined_gcd(a.payload, b.payload)
        if not self.base.p_is_unit(g):
            return False, None, None
        return True, RingElement(self, u), RingElement(self, v)

    def _combination_witness_for(self, a, b, d):
        g, u, v = self._combined_gcd(a.payload, b.payload)
        try:
            t = self.base.p_divexact(d.payload, g)
        except NotDivisible:
            return False, None, None
        el = lambda x: RingElement(self, self._canon(x))
        return True, el(self.base.p_mul(u, t)), el(self.base.p_mul(v, t))

    # ring interface --------------------------------------------------------------
    def is_unit(self, a):
        self._check(a)
        g, _, _ = self.base.p_xgcd(a.payload, self.modulus)
        return self.base.p_is_unit(g)

    def divide_exact(self, a, b):
        """Smallest canonical x with b*x = a, via the lifted linear congruence."""
        self._check(a, b)
        base = self.base
        g, u, _ = base.p_xgcd(b.payload, self.modulus)
        try:
            t = base.p_divexact(a.payload, g)
        except NotDivisible:
            raise NotDivisible(
                f"{self.format_element(b)} does not divide {self.format_element(a)} in {self.describe()}"
            ) from None
        step = base.p_divexact(self.modulus, g)
        x = base.p_mul(u, t)
        if base.p_is_unit(step):
            x = self._canon(x)
        else:
            x = base.p_mod(x, step)
        return RingElement(self, x)

    def gcdex(self, a, b):
        self._check(a, b)
        zero = self.zero
        if a == zero and b == zero:
            return ExtendedGcd(zero, zero, zero, self.one, zero, all_zero=True)
        base = self.base
        g, _, _ = self._combined_gcd(a.payload, b.payload)
        d = RingElement(self, self._canon(g))
        a1 = RingElement(self, self._canon(base.p_divexact(a.payload, g)))
        b1 = RingElement(self, self._canon(base.p_divexact(b.payload, g)))
        a0, b0, u, v = self.normalize_cofactors(a, b, d, a1, b1)
        return ExtendedGcd(d, u, v, a0, b0)

    def normalize_cofactors(self, a, b, d, a1, b1):
        self._check(a, b, d, a1, b1)
        if a1 * d != a or b1 * d != b:
            raise PreconditionFailed("inputs do not satisfy a = a1*d, b = b1*d")
        candidates = self._search_candidates()
        return generic_normalize_cofactors(self, a, b, d, a1, b1, candidates, SEARCH_CAP)

    def _search_candidates(self):
        n = self.cardinality()
        if n is not None and n <= DEFAULT_ENUM_CAP:
            return list(self._iter_elements())
        if n is not None:
            raise TooLarge(f"{self.describe()}: search space above the enumeration cap")
        # Q[x]/f: integer-coefficient residues in height order; the search is
        # heuristic here but exact when it succeeds.
        deg = pa.degree(self.modulus)
        out = []
        for height in range(8):
            vals = list(range(-height, height + 1))
            for payload in _coeff_vectors(vals, deg):
                el = RingElement(self, self._canon(payload))
                if el not in out:
                    out.append(el)
        return out

    def canonical_associate(self, a):
        # residues are not re-normalized across associates; identity is canonical
        self._check(a)
        return a, self.one

    def cardinality(self):
        if isinstance(self.base, IntegerRing):
            return self.modulus
        if self.base.characteristic is None:
            return None
        return self.base.characteristic ** pa.degree(self.modulus)

    def _iter_elements(self):
        if isinstance(self.base, IntegerRing):
            for i in range(self.modulus):
                yield RingElement(self, i)
            return
        p = self.base.characteristic
        deg = pa.degree(self.modulus)
        for i in range(p**deg):
            digits = []
            k = i
            while k:
                digits.append(k % p)
                k //= p
            yield RingElement(self, pa.trim(digits))

    def sort_key(self, a):
        return self.base.p_sort_key(a.payload)

    def element_to_json(self, a):
        return self.base.p_to_json(a.payload)

    def element_from_json(self, data):
        return RingElement(self, self._canon(self.base.p_from_json(data)))

    def format_element(self, a):
        return self.base.p_format(a.payload)


def _coeff_vectors(values, length):
    if length == 0:
        yield ()
        return
    for rest in _coeff_vectors(values, length - 1):
        for v in values:
            yield rest + (v,)


def make_quotient(base, modulus):
    """Construct R/mR, canonicalizing the modulus to its associate."""
    if isinstance(modulus, RingElement):
        if modulus.ring != base:
            raise UnsupportedRing("modulus must live in the base ring")
        payload = modulus.payload
    else:
        payload = base.p_canon(modulus)
    return QuotientRing(base, payload)


def annihilator_generator(q, b):
    """Generator of Ann(b) in the finite quotient q: a0 = m / gcd(m, lift b)."""
    q._check(b)
    if not isinstance(q, QuotientRing):
        raise UnsupportedRing("annihilators are computed in quotient rings")
    g, _, _ = q.base.p_xgcd(b.payload, q.modulus)
    return RingElement(q, q._canon(q.base.p_divexact(q.modulus, g)))


@dataclass(frozen=True)
class PrincipalIdeal:
    """The ideal generated by one element; membership via exact division."""

    ring: Ring
    generator: RingElement

    def __contains__(self, x):
        try:
            self.ring.divide_exact(x, self.generator)
        except NotDivisible:
            return False
        return True

    def members(self, cap=None):
        """All members, canonically ordered (finite rings only)."""
        seen = {}
        for t in self.ring.enumerate_elements(cap):
            m = self.generator * t
            seen[m.payload] = m
        return sorted(seen.values(), key=self.ring.sort_key)


_RING_RE = re.compile(r"^F(\d+)\[x\](/(.+))?$")


def parse_ring(text):
    """Parse the ring grammar: Z | Q[x] | F<p>[x] | Z/<n> | F<p>[x]/<coeffs>."""
    text = text.strip()
    if text == "Z":
        return IntegerRing()
    if text == "Q[x]":
        return PolynomialRing(None)
    if text.startswith("Z/"):
        try:
            n = int(text[2:])
        except ValueError:
            raise MalformedInput(f"bad modulus in {text!r}") from None
        return make_quotient(IntegerRing(), n)
    m = _RING_RE.match(text)
    if m:
        try:
            p = int(m.group(1))
            base = PolynomialRing(p)
        except MalformedInput:
            raise
        if m.group(3) is None:
            return base
        try:
            coeffs = json.loads(m.group(3))
        except json.JSONDecodeError:
            raise MalformedInput(f"bad modulus polynomial in {text!r}") from None
        return make_quotient(base, base.p_from_json(coeffs))
    raise MalformedInput(f"unrecognized ring description {text!r}")


def parse_element(ring, text):
    """Parse an element literal: an integer, or a JSON coefficient list."""
    text = text.strip()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        try:
            data = str(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"unparseable element {text!r}") from None
    if isinstance(data, str):
        frac = Fraction(data)
        if isinstance(ring, PolynomialRing) and ring.characteristic is None:
            return ring.el(frac)
        raise MalformedInput(f"fractional literal {text!r} needs Q[x]")
    return ring.element_from_json(data)
