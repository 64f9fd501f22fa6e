"""Verification sweeps: run each element<->quotient equivalence over a range
of integer moduli and report violations with concrete witnesses.

Every selector pits the element-level classifier or constructor against the
brute-force quotient analysis, plus a third independent oracle where one
exists (trial-division primality, d^2-scan squarefreeness, prime-power
stripping).  Results are deterministic for a fixed seed: randomized inputs
come from a per-selector stream keyed by the seed and the selector name, so
adding or removing selectors never shifts another selector's draws.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import analysis, factoring, structure
from .errors import BezoutError, NoNontrivialIdempotent
from .instances import IntegerRing, annihilator_generator, make_quotient

DEFAULT_RANGE = (2, 100)
DEFAULT_SAMPLES = 5
SAMPLE_MAGNITUDE = 10**6


# independent small oracles, deliberately dumber than the library routes


def trial_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def trial_prime_power(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            return n == 1
        d += 1
    return True


@dataclass
class SweepResult:
    selector: str
    description: str
    checked: int = 0
    violations: list = field(default_factory=list)
    per_ring: list = field(default_factory=list)

    def record(self, label, ok, detail=None):
        self.per_ring.append((label, ok))
        if not ok:
            self.violations.append(detail or {"ring": label})

    def to_json(self):
        return {
            "description": self.description,
            "checked": self.checked,
            "violations": self.violations,
        }


def _moduli(lo, hi):
    return range(lo, hi + 1)


def _sample_nonzero(rng, k):
    out = []
    while len(out) < k:
        x = rng.randint(-SAMPLE_MAGNITUDE, SAMPLE_MAGNITUDE)
        if x != 0:
            out.append(x)
    return out


def sweep_prop2(lo, hi, rng, quad_cap):
    """atom(a) == field(Z/a) == trial-division primality."""
    res = SweepResult("prop2", "atom iff the quotient is a field iff a is prime")
    Z = IntegerRing()
    for a in _moduli(lo, hi):
        atom = structure.is_atom(Z.el(a))
        quotient = analysis.is_field(make_quotient(Z, a)).holds
        oracle = trial_prime(a)
        ok = atom == quotient == oracle
        res.checked += 1
        res.record(
            f"Z/{a}", ok,
            {"a": a, "atom": atom, "field": quotient, "prime": oracle},
        )
    return res


def sweep_thm9(lo, hi, rng, quad_cap):
    """inpseudo-irreducible(a) == reduced == von Neumann regular == squarefree."""
    res = SweepResult(
        "thm9",
        "inpseudo-irreducible iff the quotient is reduced iff it is von Neumann "
        "regular iff a is squarefree",
    )
    Z = IntegerRing()
    for a in _moduli(lo, hi):
        inps = structure.is_inpseudo_irreducible(Z.el(a))
        q = make_quotient(Z, a)
        reduced = analysis.is_reduced(q).holds
        vnr = analysis.is_von_neumann_regular(q).holds
        oracle = factoring.squarefree_int(a)
        ok = inps == reduced == vnr == oracle
        res.checked += 1
        res.record(
            f"Z/{a}", ok,
            {"a": a, "inpseudo": inps, "reduced": reduced, "vnr": vnr, "squarefree": oracle},
        )
    return res


def sweep_thm11(lo, hi, rng, quad_cap):
    """pseudo-irreducible(a) == indecomposable quotient == prime power."""
    res = SweepResult(
        "thm11", "pseudo-irreducible iff the quotient is indecomposable iff a is a prime power"
    )
    Z = IntegerRing()
    for a in _moduli(lo, hi):
        pseudo = structure.is_pseudo_irreducible(Z.el(a))
        indec = analysis.is_indecomposable(make_quotient(Z, a)).holds
        oracle = trial_prime_power(a)
        ok = pseudo == indec == oracle
        res.checked += 1
        res.record(
            f"Z/{a}", ok,
            {"a": a, "pseudo": pseudo, "indecomposable": indec, "prime_power": oracle},
        )
    return res


def sweep_prop7(lo, hi, rng, quad_cap):
    """Annihilators are principal with the predicted generator; the double
    annihilator returns the original ideal."""
    res = SweepResult(
        "prop7", "annihilator of each residue is principal; double annihilator closes"
    )
    Z = IntegerRing()
    for a in _moduli(lo, hi):
        q = make_quotient(Z, a)
        els = list(q.enumerate_elements())
        ideal_of = lambda g: {(g * t).payload for t in els}
        ok = True
        detail = None
        for b in els:
            g = annihilator_generator(q, b)
            brute = {x.payload for x in els if (x * b) == q.zero}
            if ideal_of(g) != brute:
                ok, detail = False, {"a": a, "b": b.payload, "kind": "generator mismatch"}
                break
            gg = annihilator_generator(q, g)
            if ideal_of(gg) != ideal_of(b):
                ok, detail = False, {"a": a, "b": b.payload, "kind": "double annihilator open"}
                break
        res.checked += 1
        res.record(f"Z/{a}", ok, detail)
    return res


def sweep_thm12(lo, hi, rng, quad_cap):
    """Adequate splits verify for sampled b; the quotient is semiregular."""
    res = SweepResult(
        "thm12", "adequate splits hold for sampled b and the quotient is semiregular"
    )
    Z = IntegerRing()
    for a in _moduli(lo, hi):
        bad = []
        for b in _sample_nonzero(rng, DEFAULT_SAMPLES):
            w = structure.adequate_split(Z.el(a), Z.el(b))
            bad.extend(f"b={b}: {v}" for v in w.violations())
        semi = analysis.is_semiregular(make_quotient(Z, a)).holds
        if not semi:
            bad.append("quotient not semiregular")
        res.checked += 1
        res.record(f"Z/{a}", not bad, {"a": a, "problems": bad})
    return res


def sweep_thm14(lo, hi, rng, quad_cap):
    """Avoidable splits verify for sampled coprime triples; the quotient is clean."""
    res = SweepResult(
        "thm14", "avoidable splits hold for sampled coprime b, c and the quotient is clean"
    )
    Z = IntegerRing()
    from math import gcd

    for a in _moduli(lo, hi):
        bad = []
        done = 0
        while done < DEFAULT_SAMPLES:
            b, c = _sample_nonzero(rng, 2)
            if gcd(gcd(a, b), c) != 1:
                continue
            done += 1
            w = structure.avoidable_decompose(Z.el(a), Z.el(b), Z.el(c))
            bad.extend(f"b={b},c={c}: {v}" for v in w.violations())
        if not analysis.is_clean(make_quotient(Z, a)).holds:
            bad.append("quotient not clean")
        res.checked += 1
        res.record(f"Z/{a}", not bad, {"a": a, "problems": bad})
    return res


def sweep_thm16(lo, hi, rng, quad_cap):
    """Semipotent witnesses against the brute-force idempotent oracle.

    For each residue: in the radical -> InRadical; nontrivial idempotent
    exists in its ideal -> a verified non-unit split; no nontrivial
    idempotent anywhere (indecomposable quotient) -> the documented
    no-witness outcome.  The quotient itself must be semipotent.
    """
    res = SweepResult(
        "thm16", "semipotent witnesses match the brute-force idempotent oracle"
    )
    Z = IntegerRing()
    for a in _moduli(lo, hi):
        q = make_quotient(Z, a)
        els = list(q.enumerate_elements())
        radical = set(analysis.jacobson_radical(q))
        nontrivial_idem = [e for e in els if e * e == e and e != q.zero and e != q.one]
        bad = []
        for b in els:
            in_rad = b in radical
            has_idem = any(_in_ideal(q, e, b) for e in nontrivial_idem)
            try:
                out = structure.semipotent_witness(Z.el(a), Z.el(b.payload))
            except NoNontrivialIdempotent:
                if in_rad or has_idem:
                    bad.append(f"b={b.payload}: witness missing though oracle finds one")
                continue
            if isinstance(out, structure.InRadical):
                if not in_rad:
                    bad.append(f"b={b.payload}: InRadical but b is outside the radical")
            else:
                if not has_idem:
                    bad.append(f"b={b.payload}: split returned but oracle finds no idempotent")
                bad.extend(f"b={b.payload}: {v}" for v in out.violations())
        if not analysis.is_semipotent(q).holds:
            bad.append("quotient not semipotent")
        res.checked += 1
        res.record(f"Z/{a}", not bad, {"a": a, "problems": bad})
    return res


def _in_ideal(q, e, b):
    from .errors import NotDivisible

    try:
        q.divide_exact(e, b)
        return True
    except NotDivisible:
        return False


def sweep_thm18(lo, hi, rng, quad_cap):
    """Gelfand splits verify for sampled coprime triples; the quotient
    satisfies the orthogonal-companion criterion."""
    res = SweepResult(
        "thm18", "Gelfand splits hold for sampled coprime b, c and the quotient is Gelfand"
    )
    Z = IntegerRing()
    from math import gcd

    for a in _moduli(lo, hi):
        bad = []
        done = 0
        while done < DEFAULT_SAMPLES:
            b, c = _sample_nonzero(rng, 2)
            if gcd(gcd(a, b), c) != 1:
                continue
            done += 1
            w = structure.gelfand_decompose(Z.el(a), Z.el(b), Z.el(c))
            bad.extend(f"b={b},c={c}: {v}" for v in w.violations())
        if not analysis.is_gelfand(make_quotient(Z, a), quad_cap).holds:
            bad.append("quotient not Gelfand")
        res.checked += 1
        res.record(f"Z/{a}", not bad, {"a": a, "problems": bad})
    return res


def sweep_cor10(lo, hi, rng, quad_cap):
    """Squarefree a gives a quotient of stable range 1."""
    res = SweepResult(
        "cor10", "inpseudo-irreducible elements have stable-range-1 quotients"
    )
    Z = IntegerRing()
    for a in _moduli(lo, hi):
        if not factoring.squarefree_int(a):
            continue
        sr1 = analysis.is_stable_range_1(make_quotient(Z, a), quad_cap).holds
        res.checked += 1
        res.record(f"Z/{a}", sr1, {"a": a, "stable_range_1": sr1})
    return res


SELECTORS = (
    ("prop2", sweep_prop2),
    ("prop7", sweep_prop7),
    ("thm9", sweep_thm9),
    ("cor10", sweep_cor10),
    ("thm11", sweep_thm11),
    ("thm12", sweep_thm12),
    ("thm14", sweep_thm14),
    ("thm16", sweep_thm16),
    ("thm18", sweep_thm18),
)

SELECTOR_NAMES = tuple(name for name, _ in SELECTORS)


def run_verification(selectors, lo, hi, seed, quad_cap=None):
    """Run the requested sweeps and assemble the deterministic report.

    Returns (report_dict, results_list); the dict carries no timing or
    environment data, so identical configs serialize byte-identically.
    """
    if hi < lo:
        raise BezoutError(f"empty range {lo}..{hi}")
    table = dict(SELECTORS)
    unknown = [s for s in selectors if s not in table]
    if unknown:
        raise BezoutError(f"unknown selectors: {', '.join(unknown)}")
    ordered = [name for name in SELECTOR_NAMES if name in set(selectors)]
    results = []
    for name in ordered:
        rng = random.Random(f"{seed}:{name}")
        results.append(table[name](lo, hi, rng, quad_cap))
    report = {
        "schema": 1,
        "family": "Z",
        "range": [lo, hi],
        "seed": seed,
        "selectors": ordered,
        "results": {r.selector: r.to_json() for r in results},
        "total_checked": sum(r.checked for r in results),
        "total_violations": sum(len(r.violations) for r in results),
    }
    return report, results
