"""Element classifiers and constructive decompositions.

Classification (atom, squarefree-type, prime-power-type) bottoms out in exact
factorization of the base instance; decompositions (adequate / avoidable /
Gelfand splits, semipotent witnesses) are gcd-iteration algorithms that never
factor anything.  Every returned witness re-verifies its own defining
identities and raises InternalCheckFailed rather than emitting a bad result.

Element classes have finite-ring counterparts: for a in Z or F[x], the flags
computed here must agree with brute-force analysis of the quotient ring mod a
(field / reduced / von Neumann regular / indecomposable / semiregular / clean
/ semipotent / Gelfand).  The test suite round-trips the two routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import analysis, factoring
from . import polyarith as pa
from .errors import (
    InternalCheckFailed,
    NoNontrivialIdempotent,
    NotDivisible,
    NotRegular,
    PreconditionFailed,
    SearchExhausted,
    TooLarge,
    UnitOrZeroInput,
    UnsupportedRing,
    ZeroInput,
)
from .instances import (
    DEFAULT_ENUM_CAP,
    IntegerRing,
    PolynomialRing,
    QuotientRing,
    make_quotient,
)

# pair-search bound for decompositions of zero divisors in finite quotients
PAIR_SEARCH_CAP = 2000


def _comaximal(ring, x, y):
    return ring.is_unit(ring.gcdex(x, y).d)


def _reject_unit_or_zero(ring, a, what):
    if ring.is_zero(a):
        raise UnitOrZeroInput(f"{what} is undefined for zero")
    if ring.is_unit(a):
        raise UnitOrZeroInput(f"{what} is undefined for units")


# ---------------------------------------------------------------------------
# witness containers
# ---------------------------------------------------------------------------


@dataclass
class SplitWitness:
    """A factorization a = r*s with kind-specific comaximality side conditions.

    kind 'adequate':   r coprime to b; s has no non-unit divisor coprime to b.
    kind 'avoidable':  r coprime to b, s coprime to c, r coprime to s.
    kind 'gelfand':    r coprime to b, s coprime to c.
    kind 'semipotent': r, s non-units; r coprime to b and to s.
    """

    kind: str
    a: object
    r: object
    s: object
    b: object
    c: object = None
    rs_comaximal: bool = None

    def violations(self):
        ring = self.a.ring
        out = []
        if self.r * self.s != self.a:
            out.append("product: r*s != a")
        if self.kind in ("adequate", "avoidable", "gelfand", "semipotent"):
            if not _comaximal(ring, self.r, self.b):
                out.append("r not comaximal with b")
        if self.kind == "adequate":
            # the whole of s must be inseparable from b: repeatedly strip the
            # common part; a unit must remain
            t = self.s
            for _ in range(100000):
                g = ring.gcdex(t, self.b).d
                if ring.is_unit(g):
                    break
                t = ring.divide_exact(t, g)
            if not ring.is_unit(t):
                out.append("s has a non-unit divisor comaximal with b")
        if self.kind in ("avoidable", "gelfand"):
            if not _comaximal(ring, self.s, self.c):
                out.append("s not comaximal with c")
        if self.kind == "avoidable":
            if not _comaximal(ring, self.r, self.s):
                out.append("r not comaximal with s")
        if self.kind == "semipotent":
            if ring.is_unit(self.r):
                out.append("r is a unit")
            if ring.is_unit(self.s):
                out.append("s is a unit")
            if not _comaximal(ring, self.r, self.s):
                out.append("r not comaximal with s")
        return out

    def verify(self):
        bad = self.violations()
        if bad:
            raise InternalCheckFailed(f"{self.kind} split invalid: {'; '.join(bad)}")
        return True

    def to_json(self):
        ring = self.a.ring
        out = {
            "kind": self.kind,
            "a": ring.element_to_json(self.a),
            "r": ring.element_to_json(self.r),
            "s": ring.element_to_json(self.s),
            "b": ring.element_to_json(self.b),
        }
        if self.c is not None:
            out["c"] = ring.element_to_json(self.c)
        if self.rs_comaximal is not None:
            out["rs_comaximal"] = self.rs_comaximal
        return out


@dataclass
class InRadical:
    """Outcome marker: b maps into the radical of the quotient mod a, so no
    split is expected to exist."""

    a: object
    b: object

    def to_json(self):
        ring = self.a.ring
        return {
            "kind": "in_radical",
            "a": ring.element_to_json(self.a),
            "b": ring.element_to_json(self.b),
        }


@dataclass
class ComaximalFactorization:
    """a = unit * product(factors) with pairwise comaximal prime-power factors."""

    element: object
    unit: object
    factors: list

    def violations(self):
        ring = self.element.ring
        out = []
        prod = self.unit
        for f in self.factors:
            prod = prod * f
        if prod != self.element:
            out.append("unit * product != element")
        if not ring.is_unit(self.unit):
            out.append("unit slot is not a unit")
        if not self.factors:
            out.append("empty factor list")
        for i in range(len(self.factors)):
            for j in range(i + 1, len(self.factors)):
                if not _comaximal(ring, self.factors[i], self.factors[j]):
                    out.append(f"factors {i},{j} not comaximal")
        for i, f in enumerate(self.factors):
            if not is_pseudo_irreducible(f):
                out.append(f"factor {i} splits comaximally")
        return out

    def verify(self):
        bad = self.violations()
        if bad:
            raise InternalCheckFailed(f"comaximal factorization invalid: {'; '.join(bad)}")
        return True

    def to_json(self):
        ring = self.element.ring
        return {
            "element": ring.element_to_json(self.element),
            "unit": ring.element_to_json(self.unit),
            "factors": [ring.element_to_json(f) for f in self.factors],
        }


# ---------------------------------------------------------------------------
# classifiers
# ---------------------------------------------------------------------------


def is_regular(a, cap=None):
    """True when a is not a zero divisor.

    Domains: any nonzero element.  Finite quotients: checked by a literal
    scan for a nonzero annihilating partner.  Infinite quotients of Q[x] are
    finite-dimensional algebras where regular elements are exactly the units,
    so the unit test decides without enumeration.
    """
    ring = a.ring
    if ring.is_domain:
        return not ring.is_zero(a)
    n = ring.cardinality()
    if n is None:
        return ring.is_unit(a)
    cap = DEFAULT_ENUM_CAP if cap is None else cap
    if n > cap:
        raise TooLarge(f"{ring.describe()} has {n} elements, cap is {cap}")
    zero = ring.zero
    for x in ring.enumerate_elements(cap):
        if x != zero and a * x == zero:
            return False
    return True


def _collapse(a):
    """For a in a quotient ring, the base-ring generator of the ideal of a.

    The inner quotient mod a is isomorphic to the base ring mod this
    generator, so classification of a reduces to classification of it.
    """
    q = a.ring
    return q.base.el(q.modulus_key(a))


def is_atom(a):
    """True when the quotient mod a is a field: irreducibility in the base
    instances, ideal-collapse reduction in quotient rings."""
    ring = a.ring
    _reject_unit_or_zero(ring, a, "is_atom")
    if isinstance(ring, QuotientRing):
        return is_atom(_collapse(a))
    if isinstance(ring, IntegerRing):
        return factoring.is_probable_prime(abs(a.payload))
    if isinstance(ring, PolynomialRing):
        p = ring.characteristic
        f = a.payload
        if p is not None:
            return factoring.irreducible_gf(f, p)
        factors, _ = factoring.factor_poly_q(f)
        return len(factors) == 1 and set(factors.values()) == {1}
    raise UnsupportedRing(f"is_atom: no classifier for {ring.describe()}")


def is_inpseudo_irreducible(a):
    """True when every factorization a = b*c has b, c comaximal; equivalently
    a is squarefree.  Requires a regular: in our finite quotients regular
    elements are units, so only domain instances get past the guards."""
    ring = a.ring
    _reject_unit_or_zero(ring, a, "is_inpseudo_irreducible")
    if not is_regular(a):
        raise NotRegular("is_inpseudo_irreducible needs a regular element")
    if isinstance(ring, IntegerRing):
        factors = factoring.factor_int(abs(a.payload))
        return all(e == 1 for e in factors.values())
    if isinstance(ring, PolynomialRing):
        return factoring.squarefree_poly(a.payload, ring.characteristic)
    raise NotRegular(
        f"{ring.describe()}: regular elements are units, which are not classified"
    )


def is_pseudo_irreducible(a):
    """True when a has no factorization into two comaximal non-units: a is a
    unit times a power of a single atom."""
    ring = a.ring
    _reject_unit_or_zero(ring, a, "is_pseudo_irreducible")
    if isinstance(ring, QuotientRing):
        return is_pseudo_irreducible(_collapse(a))
    if isinstance(ring, IntegerRing):
        return len(factoring.factor_int(abs(a.payload))) == 1
    if isinstance(ring, PolynomialRing):
        p = ring.characteristic
        if p is not None:
            factors, _ = factoring.factor_poly_gf(a.payload, p)
        else:
            factors, _ = factoring.factor_poly_q(a.payload)
        return len(factors) == 1
    raise UnsupportedRing(f"is_pseudo_irreducible: no classifier for {ring.describe()}")


def pseudo_irreducible_witness(a, cap=None):
    """Literal-definition counterpart of is_pseudo_irreducible for finite
    quotients: search for b*c = a with b, c non-units and comaximal.  Used as
    an oracle; returns (b, c) or None."""
    q = a.ring
    if not isinstance(q, QuotientRing):
        raise UnsupportedRing("witness search needs a finite quotient ring")
    els = list(q.enumerate_elements(PAIR_SEARCH_CAP if cap is None else cap))
    for x in els:
        if q.is_unit(x):
            continue
        for y in els:
            if q.is_unit(y):
                continue
            if x * y == a and _comaximal(q, x, y):
                return x, y
    return None


# ---------------------------------------------------------------------------
# comaximal refinement
# ---------------------------------------------------------------------------


def _associate_unit(q, a, g):
    """A unit w of the quotient q with w*g == a, given that a and g generate
    the same ideal.  Solutions of g*x = a differ by multiples of m/key(g);
    scan that coset in canonical candidate order for a unit."""
    base = q.base
    x0 = q.divide_exact(a, g)
    key = q.modulus_key(g)
    step = q.el(base.p_divexact(q.modulus, key))
    seen = 0
    for k in q._search_candidates():
        w = x0 + k * step
        if q.is_unit(w) and w * g == a:
            return w
        seen += 1
        if seen > 10 * PAIR_SEARCH_CAP:
            break
    raise SearchExhausted("no unit multiplier found between associates")


def comaximal_refinement(a):
    """Factor a as unit * product of pairwise comaximal prime-power parts,
    merging factors that share a radical."""
    ring = a.ring
    _reject_unit_or_zero(ring, a, "comaximal_refinement")
    if isinstance(ring, IntegerRing):
        factors = factoring.factor_int(abs(a.payload))
        parts = [ring.el(p**e) for p, e in sorted(factors.items())]
        unit = ring.el(1 if a.payload > 0 else -1)
    elif isinstance(ring, PolynomialRing):
        p = ring.characteristic
        if p is not None:
            factors, u = factoring.factor_poly_gf(a.payload, p)
        else:
            factors, u = factoring.factor_poly_q(a.payload)
        parts = [
            ring.el(_poly_power(ring, f, e))
            for f, e in sorted(factors.items(), key=lambda kv: pa.sort_key(kv[0]))
        ]
        unit = ring.el(u)
    elif isinstance(ring, QuotientRing):
        inner = comaximal_refinement(_collapse(a))
        parts = [ring.el(f.payload) for f in inner.factors]
        prod = ring.one
        for f in parts:
            prod = prod * f
        unit = _associate_unit(ring, a, prod)
    else:
        raise UnsupportedRing(f"comaximal_refinement: no route for {ring.describe()}")
    result = ComaximalFactorization(a, unit, parts)
    result.verify()
    return result


def _poly_power(ring, f, e):
    out = pa.poly([1], ring.characteristic)
    for _ in range(e):
        out = pa.pmul(out, f, ring.characteristic)
    return out


# ---------------------------------------------------------------------------
# splits
# ---------------------------------------------------------------------------


def adequate_split(a, b):
    """a = r*s with r coprime to b and s fully inseparable from b.

    gcd iteration: peel the common part of a and b into s until nothing
    coprime-violating remains.  Factorization-free; s comes out canonical
    (nonnegative / monic) with the compensating unit absorbed into r.
    """
    ring = a.ring
    if ring.is_zero(a):
        raise ZeroInput("adequate_split needs a nonzero element")
    if not is_regular(a):
        raise NotRegular("adequate_split needs a regular element")
    r, s = a, ring.one
    while True:
        g = ring.gcdex(r, b).d
        if ring.is_unit(g):
            break
        s = s * g
        r = ring.divide_exact(r, g)
    s, _ = ring.canonical_associate(s)
    r = ring.divide_exact(a, s)
    witness = SplitWitness("adequate", a, r, s, b)
    witness.verify()
    return witness


def _pair_search(q, a, b, c, cap=None):
    """Exhaustive split search in a finite quotient: first (r, s) in canonical
    order with r*s = a, r comaximal with b, s comaximal with c."""
    els = list(q.enumerate_elements(PAIR_SEARCH_CAP if cap is None else cap))
    for r in els:
        if not _comaximal(q, r, b):
            continue
        for s in els:
            if r * s == a and _comaximal(q, s, c):
                return r, s
    raise SearchExhausted("no comaximal split exists in the quotient")


def _triple_precondition(ring, a, b, c):
    d = ring.gcdex(ring.gcdex(a, b).d, c).d
    if not ring.is_unit(d):
        raise PreconditionFailed(
            f"precondition aR+bR+cR=R fails (gcd {ring.format_element(d)})"
        )


def avoidable_decompose(a, b, c):
    """a = r*s with r coprime to b, s coprime to c, and r coprime to s,
    assuming a, b, c jointly generate the whole ring."""
    ring = a.ring
    _triple_precondition(ring, a, b, c)
    if ring.is_zero(a):
        raise ZeroInput("avoidable_decompose needs a nonzero element")
    if isinstance(ring, QuotientRing) and not is_regular(a):
        r, s = _pair_search(ring, a, b, c)
        witness = SplitWitness("avoidable", a, r, s, b, c)
    else:
        inner = adequate_split(a, b)
        witness = SplitWitness("avoidable", a, inner.r, inner.s, b, c)
    witness.verify()
    return witness


def gelfand_decompose(a, b, c):
    """a = r*s with r coprime to b and s coprime to c (r coprime to s not
    required; recorded when it holds anyway)."""
    ring = a.ring
    _triple_precondition(ring, a, b, c)
    if ring.is_zero(a):
        raise ZeroInput("gelfand_decompose needs a nonzero element")
    if ring.is_unit(c) and _comaximal(ring, a, b):
        r, s = a, ring.one
    elif ring.is_unit(b) and _comaximal(ring, a, c):
        r, s = ring.one, a
    elif isinstance(ring, QuotientRing) and not is_regular(a):
        r, s = _pair_search(ring, a, b, c)
    else:
        inner = adequate_split(a, b)
        r, s = inner.r, inner.s
    witness = SplitWitness(
        "gelfand", a, r, s, b, c, rs_comaximal=_comaximal(ring, r, s)
    )
    witness.verify()
    return witness


def semipotent_witness(a, b, cap=None):
    """Split a = r*s with non-unit r, s, r coprime to b and to s, or report
    that b falls into the radical of the quotient mod a.

    Follows the idempotent route: a nontrivial idempotent in the image ideal
    of b determines s = gcd(idempotent, a).  When the quotient has no
    nontrivial idempotent (prime-power a) and b stays out of the radical,
    no non-unit split exists at all and NoNontrivialIdempotent is raised.
    """
    ring = a.ring
    if not ring.is_domain:
        raise UnsupportedRing("semipotent_witness expects a domain instance")
    if ring.is_zero(a):
        raise ZeroInput("semipotent_witness needs a nonzero element")
    q = make_quotient(ring, a.payload)
    bq = q.el(b.payload)
    radical = analysis.jacobson_radical(q, cap)
    if bq in radical:
        return InRadical(a, b)
    chosen = None
    for e in q.enumerate_elements(DEFAULT_ENUM_CAP if cap is None else cap):
        if e == q.zero or e == q.one or e * e != e:
            continue
        try:
            q.divide_exact(e, bq)
        except NotDivisible:
            continue
        chosen = e
        break
    if chosen is None:
        raise NoNontrivialIdempotent(
            f"{q.describe()} is indecomposable and {ring.format_element(b)} "
            "maps to a unit; no non-unit split exists"
        )
    d = ring.gcdex(ring.el(chosen.payload), a).d
    s, _ = ring.canonical_associate(d)
    r = ring.divide_exact(a, s)
    witness = SplitWitness("semipotent", a, r, s, b)
    witness.verify()
    return witness
