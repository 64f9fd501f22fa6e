"""Core ring abstraction: exact commutative rings with gcd witnesses.

Every ring here is commutative with 1.  The extended gcd contract is the
load-bearing piece: ``gcdex(a, b)`` must return a generator ``d`` of the
ideal (a, b) together with combination witnesses *and* coprime cofactors,
so that 1x2 rows can always be completed to invertible 2x2 matrices.
Shipped instances satisfy this; user-supplied subclasses are expected to
have stable range 2 so that ``normalize_cofactors`` can always succeed
(documented requirement, not verified at runtime).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDivisible, RingMismatch, SearchExhausted, TooLarge


class RingElement:
    """An element owned by exactly one ring handle.

    Thin wrapper over a canonical payload; arithmetic delegates to the
    owner ring and always returns canonical elements.
    """

    __slots__ = ("ring", "payload")

    def __init__(self, ring, payload):
        self.ring = ring
        self.payload = payload

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.payload == other.payload
        )

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __bool__(self):
        return not self.ring.is_zero(self)

    def __repr__(self):
        return f"{self.ring.describe()}({self.ring.format_element(self)})"


@dataclass(frozen=True)
class ExtendedGcd:
    """Witnessed gcd: d = a*u + b*v, a = a0*d, b = b0*d, a0*u + b0*v = 1.

    ``all_zero`` flags the degenerate gcdex(0, 0) case where the cofactor
    identity is waived (a0, b0 are fixed to 1, 0 there).
    """

    d: RingElement
    u: RingElement
    v: RingElement
    a0: RingElement
    b0: RingElement
    all_zero: bool = False

    def verify(self, a, b):
        """Check the three defining identities against the inputs."""
        ring = a.ring
        if a * self.u + b * self.v != self.d:
            return False
        if self.a0 * self.d != a or self.b0 * self.d != b:
            return False
        if self.all_zero:
            return ring.is_zero(a) and ring.is_zero(b)
        return self.a0 * self.u + self.b0 * self.v == ring.one


class Ring:
    """Base class for ring handles.

    Handles compare equal iff they denote the same ring (same kind and
    parameters), so elements of two equal handles interoperate.
    """

    is_domain = False

    def __init__(self):
        self._zero = None
        self._one = None

    # -- identity ----------------------------------------------------------
    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.describe()

    def describe(self):
        """Canonical description string (also the CLI ring grammar form)."""
        raise NotImplementedError

    # -- payload protocol (implemented by subclasses) ------------------------
    def _canon(self, payload):
        raise NotImplementedError

    def _add(self, x, y):
        raise NotImplementedError

    def _neg(self, x):
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    # -- element construction ------------------------------------------------
    def el(self, value):
        """Wrap a raw value as a canonical element of this ring."""
        return RingElement(self, self._canon(value))

    @property
    def zero(self):
        if self._zero is None:
            self._zero = self.el(0)
        return self._zero

    @property
    def one(self):
        if self._one is None:
            self._one = self.el(1)
        return self._one

    def _check(self, *els):
        for a in els:
            if not isinstance(a, RingElement) or a.ring != self:
                raise RingMismatch(f"element {a!r} does not belong to {self.describe()}")

    # -- arithmetic ----------------------------------------------------------
    def add(self, a, b):
        self._check(a, b)
        return RingElement(self, self._add(a.payload, b.payload))

    def sub(self, a, b):
        self._check(a, b)
        return RingElement(self, self._add(a.payload, self._neg(b.payload)))

    def neg(self, a):
        self._check(a)
        return RingElement(self, self._neg(a.payload))

    def mul(self, a, b):
        self._check(a, b)
        return RingElement(self, self._mul(a.payload, b.payload))

    def is_zero(self, a):
        self._check(a)
        return a.payload == self.zero.payload

    def is_unit(self, a):
        raise NotImplementedError

    def divide_exact(self, a, b):
        """The canonical q with b*q = a, else NotDivisible.

        In domains the solution is unique; in quotient rings the smallest
        canonical solution is returned (smallest lift / least degree).
        """
        raise NotImplementedError

    def gcdex(self, a, b):
        raise NotImplementedError

    def normalize_cofactors(self, a, b, d, a1, b1):
        """Repair cofactors a1, b1 of d (a = a1*d, b = b1*d) into a coprime
        pair (a0, b0) with the same products, returning (a0, b0, u, v) where
        a0*u + b0*v = 1.

        Realizes the stable-range-2 existence argument literally: build
        c = 1 - a1*u - b1*v (which kills d) and search lifts x, y such that
        a1 + c*x and b1 + c*y are comaximal.
        """
        raise NotImplementedError

    def canonical_associate(self, a):
        """Return (c, w) with a = w*c, w a unit, c the canonical associate
        (nonnegative for integers, monic for polynomials)."""
        raise NotImplementedError

    # -- enumeration -----------------------------------------------------------
    def cardinality(self):
        """Number of elements, or None when infinite."""
        return None

    def enumerate_elements(self, cap=None):
        """Yield every element exactly once, in canonical order."""
        from .instances import DEFAULT_ENUM_CAP

        n = self.cardinality()
        limit = DEFAULT_ENUM_CAP if cap is None else cap
        if n is None:
            raise TooLarge(f"{self.describe()} is infinite; enumeration refused")
        if n > limit:
            raise TooLarge(f"{self.describe()} has {n} elements, cap is {limit}")
        return self._iter_elements()

    def _iter_elements(self):
        raise NotImplementedError

    def sort_key(self, a):
        """Deterministic total order on elements (canonical order)."""
        raise NotImplementedError

    # -- serialization -----------------------------------------------------------
    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, data):
        raise NotImplementedError

    def format_element(self, a):
        """Human-readable rendering used by pretty output."""
        return str(self.element_to_json(a))


def generic_normalize_cofactors(ring, a, b, d, a1, b1, candidates, cap):
    """Shared search core for normalize_cofactors on quotient instances.

    ``candidates`` is a finite, deterministically ordered list of elements
    used as lifts for the diagonal (x, y) search.
    """
    one = ring.one
    ok, u, v = ring._combination_witness(a1, b1)
    if ok:
        return a1, b1, u, v
    # need some u, v with a*u + b*v = d to build the corrector c
    ok, u, v = ring._combination_witness_for(a, b, d)
    if not ok:
        raise SearchExhausted("d is not a combination of a and b; cannot normalize")
    c = one - a1 * u - b1 * v
    if d * c != ring.zero:
        raise SearchExhausted("corrector does not annihilate d")
    tried = 0
    m = len(candidates)
    for s in range(2 * m - 1):
        for i in range(max(0, s - m + 1), min(s, m - 1) + 1):
            x, y = candidates[i], candidates[s - i]
            a0 = a1 + c * x
            b0 = b1 + c * y
            ok, u2, v2 = ring._combination_witness(a0, b0)
            if ok:
                return a0, b0, u2, v2
            tried += 1
            if tried >= cap:
                raise SearchExhausted(f"no coprime lift found within {cap} candidate pairs")
    raise SearchExhausted("no coprime lift found in the candidate space")
