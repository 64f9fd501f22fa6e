"""Brute-force structure analysis of finite quotient rings.

Every predicate here works by direct inspection of the element table of a
finite quotient ring, so it is usable as an independent oracle against the
element-level classifiers and split constructions.  Negative answers always
carry a concrete counterexample.

Comaximality inside a quotient R/mR is decided through lifts: two residues
generate the whole ring iff gcd(lift a, lift b, m) is a unit, and a residue
generates the same ideal as its gcd with the modulus (its "key").  The
quadratic predicates are organized around those keys; small-ring tests pin
them against literal double-loop definitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalCheckFailed, NotDivisible, TooLarge, UnsupportedRing
from .instances import DEFAULT_ENUM_CAP, QuotientRing

DEFAULT_QUAD_CAP = 5000


@dataclass
class Verdict:
    """Boolean answer plus named element evidence (counterexample or witness)."""

    holds: bool
    evidence: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


def _require_quotient(q):
    if not isinstance(q, QuotientRing):
        raise UnsupportedRing("finite-ring analysis needs a quotient ring handle")


def _elements(q, cap=None):
    _require_quotient(q)
    return list(q.enumerate_elements(DEFAULT_ENUM_CAP if cap is None else cap))


def _key(q, a):
    return q.modulus_key(a)


def _keys_coprime(q, k1, k2):
    g, _, _ = q.base.p_xgcd(k1, k2)
    return q.base.p_is_unit(g)


def idempotents(q, cap=None):
    """All e with e*e == e, in canonical order."""
    return [e for e in _elements(q, cap) if e * e == e]


def unit_count(q, cap=None):
    return sum(1 for x in _elements(q, cap) if q.is_unit(x))


def is_field(q, cap=None):
    """Every nonzero element must be invertible."""
    for x in _elements(q, cap):
        if x != q.zero and not q.is_unit(x):
            return Verdict(False, [("non_invertible", (x,))])
    return Verdict(True)


def is_reduced(q, cap=None):
    """No nonzero nilpotents; x is nilpotent iff x**|R| == 0 (pigeonhole)."""
    els = _elements(q, cap)
    n = len(els)
    for x in els:
        if x != q.zero and x**n == q.zero:
            return Verdict(False, [("nilpotent", (x,))])
    return Verdict(True)


def is_von_neumann_regular(q, cap=None):
    """Each a needs x with a*x*a == a; equivalently a is divisible by a*a.

    The witness is the canonical solution of (a*a)*x = a; its existence is
    exactly the membership a in (a*a), and the returned x is re-verified.
    """
    for a in _elements(q, cap):
        try:
            x = q.divide_exact(a, a * a)
        except NotDivisible:
            return Verdict(False, [("no_inner_inverse", (a,))])
        if a * x * a != a:
            raise InternalCheckFailed("divide_exact returned a bad inner inverse")
    return Verdict(True)


def is_indecomposable(q, cap=None):
    """Only trivial idempotents."""
    for e in idempotents(q, cap):
        if e != q.zero and e != q.one:
            return Verdict(False, [("nontrivial_idempotent", (e,))])
    return Verdict(True)


def is_clean(q, cap=None):
    """Every element must be a unit plus an idempotent."""
    els = _elements(q, cap)
    idem = [e for e in els if e * e == e]
    for a in els:
        if not any(q.is_unit(a - e) for e in idem):
            return Verdict(False, [("not_clean", (a,))])
    return Verdict(True)


def jacobson_radical(q, cap=None):
    """Elements x such that 1 + x*y is a unit for every y, canonical order."""
    els = _elements(q, cap)
    one = q.one
    out = []
    for x in els:
        if all(q.is_unit(one + x * y) for y in els):
            out.append(x)
    return out


def is_semiregular(q, cap=None):
    """R/J must be von Neumann regular and idempotents must lift along R -> R/J."""
    els = _elements(q, cap)
    jac = {x.payload for x in jacobson_radical(q, cap)}
    # canonical representatives of the cosets mod J
    rep_of = {}
    reps = []
    for x in els:
        if x.payload in rep_of:
            continue
        reps.append(x)
        for j in els:
            if j.payload in jac:
                rep_of[(x + j).payload] = x
    for a in reps:
        if not any(((a * x * a) - a).payload in jac for x in reps):
            return Verdict(False, [("not_regular_mod_radical", (a,))])
    idem = [e for e in els if e * e == e]
    for e in reps:
        if (e * e - e).payload in jac:
            if not any((f - e).payload in jac for f in idem):
                return Verdict(False, [("idempotent_does_not_lift", (e,))])
    return Verdict(True)


def is_semipotent(q, cap=None):
    """Each principal ideal outside J must contain a nonzero idempotent."""
    els = _elements(q, cap)
    jac = {x.payload for x in jacobson_radical(q, cap)}
    idem = [e for e in els if e * e == e and e != q.zero]
    for b in els:
        if b.payload in jac:
            continue
        for e in idem:
            try:
                q.divide_exact(e, b)
                break
            except NotDivisible:
                continue
        else:
            return Verdict(False, [("no_idempotent_in_ideal", (b,))])
    return Verdict(True)


def is_gelfand(q, cap=None):
    """For comaximal a, b there must exist c, d with a,c and b,d comaximal
    and c*d == 0.

    Comaximality depends only on the modulus keys of the pair, so the
    witness search is cached by key pair; witnesses are concrete elements.
    """
    cap = DEFAULT_QUAD_CAP if cap is None else cap
    els = _elements(q, cap)
    keys = [_key(q, x) for x in els]
    first_with = {}
    for x, k in zip(els, keys):
        first_with.setdefault(k, x)
    distinct = sorted(first_with, key=q.base.p_sort_key)
    zero = q.zero
    for ka in distinct:
        for kb in distinct:
            if not _keys_coprime(q, ka, kb):
                continue
            found = False
            for c, kc in zip(els, keys):
                if not _keys_coprime(q, kc, ka):
                    continue
                for d, kd in zip(els, keys):
                    if c * d == zero and _keys_coprime(q, kd, kb):
                        found = True
                        break
                if found:
                    break
            if not found:
                return Verdict(
                    False, [("no_orthogonal_pair", (first_with[ka], first_with[kb]))]
                )
    return Verdict(True)


def is_stable_range_1(q, cap=None):
    """For comaximal a, b some a + b*t must be a unit.

    The reachable set a + bR equals a + (key b)R, so the search runs per
    (element, key) pair rather than per element pair.
    """
    cap = DEFAULT_QUAD_CAP if cap is None else cap
    els = _elements(q, cap)
    keys = [_key(q, x) for x in els]
    first_with = {}
    for x, k in zip(els, keys):
        first_with.setdefault(k, x)
    distinct = sorted(first_with, key=q.base.p_sort_key)
    for a, ka in zip(els, keys):
        for kb in distinct:
            if not _keys_coprime(q, ka, kb):
                continue
            g = q.el(kb)
            if not any(q.is_unit(a + g * t) for t in els):
                return Verdict(False, [("no_unit_in_coset", (a, first_with[kb]))])
    return Verdict(True)


_CHAIN = (
    ("is_field", "is_von_neumann_regular"),
    ("is_von_neumann_regular", "is_reduced"),
    ("is_von_neumann_regular", "is_semiregular"),
    ("is_clean", "is_gelfand"),
    ("is_clean", "is_semipotent"),
    ("is_field", "is_indecomposable"),
)


@dataclass
class StructureReport:
    """Full brute-force profile of one finite quotient ring."""

    ring: str
    cardinality: int
    idempotents: list
    unit_count: int
    jacobson_radical: list
    flags: dict
    evidence: dict
    skipped: list

    def check_implications(self):
        """Raise if a computed flag pair contradicts the implication chain."""
        for src, dst in _CHAIN:
            a, b = self.flags.get(src), self.flags.get(dst)
            if a is True and b is False:
                raise InternalCheckFailed(
                    f"{self.ring}: {src} holds but {dst} fails; analysis is inconsistent"
                )

    def to_json(self):
        return {
            "ring": self.ring,
            "cardinality": self.cardinality,
            "idempotents": self.idempotents,
            "unit_count": self.unit_count,
            "jacobson_radical": self.jacobson_radical,
            "flags": dict(sorted(self.flags.items())),
            "evidence": {k: v for k, v in sorted(self.evidence.items())},
            "skipped": sorted(self.skipped),
        }


_PREDICATES = (
    ("is_field", is_field, False),
    ("is_reduced", is_reduced, False),
    ("is_von_neumann_regular", is_von_neumann_regular, False),
    ("is_indecomposable", is_indecomposable, False),
    ("is_clean", is_clean, False),
    ("is_semiregular", is_semiregular, False),
    ("is_semipotent", is_semipotent, False),
    ("is_gelfand", is_gelfand, True),
    ("is_stable_range_1", is_stable_range_1, True),
)


def analyze_ring(q, cap=None, quad_cap=None):
    """Run every predicate within its cap and assemble a StructureReport."""
    _require_quotient(q)
    cap = DEFAULT_ENUM_CAP if cap is None else cap
    quad_cap = DEFAULT_QUAD_CAP if quad_cap is None else quad_cap
    n = q.cardinality()
    if n is None:
        raise TooLarge(f"{q.describe()} is infinite; analysis refused")
    if n > cap:
        raise TooLarge(f"{q.describe()} has {n} elements, cap is {cap}")
    flags = {}
    evidence = {}
    skipped = []
    for name, pred, quadratic in _PREDICATES:
        if quadratic and n > quad_cap:
            flags[name] = None
            skipped.append(name)
            continue
        verdict = pred(q, quad_cap if quadratic else cap)
        flags[name] = verdict.holds
        if verdict.evidence:
            evidence[name] = [
                [tag, [q.element_to_json(x) for x in els]] for tag, els in verdict.evidence
            ]
    report = StructureReport(
        ring=q.describe(),
        cardinality=n,
        idempotents=[q.element_to_json(e) for e in idempotents(q, cap)],
        unit_count=unit_count(q, cap),
        jacobson_radical=[q.element_to_json(x) for x in jacobson_radical(q, cap)],
        flags=flags,
        evidence=evidence,
        skipped=skipped,
    )
    report.check_implications()
    return report
