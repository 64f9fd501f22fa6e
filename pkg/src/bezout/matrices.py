"""Matrices over the ring instances and their diagonal reduction.

The reducer is gcd-driven: 2x2 unimodular blocks built from gcdex clear the
first row and column, a divisibility pass folds offending entries back in,
and the procedure recurses on the minor.  Transform matrices and their
inverses are accumulated per elementary step, so invertibility is certified
by explicit inverses rather than determinants.  An independent
determinantal-divisor oracle cross-checks the integer case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    InternalCheckFailed,
    MalformedInput,
    NotComaximal,
    NotDivisible,
    PreconditionFailed,
    SearchExhausted,
    TooLarge,
    TraceInvariantViolation,
    UnsupportedRing,
)
from .instances import IntegerRing, PolynomialRing, QuotientRing, parse_ring
from .structure import gelfand_decompose

ENGINE_PASS_CAP = 10000
WITNESS_SEARCH_CAP = 64


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatrixOverRing:
    """Immutable row-major matrix whose entries all live in one ring."""

    ring: object
    entries: tuple

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise MalformedInput("matrix needs at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise MalformedInput("ragged matrix rows")
            for e in row:
                if e.ring != self.ring:
                    raise MalformedInput("matrix entry from a different ring")

    @classmethod
    def from_rows(cls, ring, rows):
        """Build from payload values (or ready elements)."""
        conv = lambda x: x if hasattr(x, "ring") else ring.el(x)
        return cls(ring, tuple(tuple(conv(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, ring, n):
        one, zero = ring.one, ring.zero
        return cls(ring, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    def entry(self, i, j):
        return self.entries[i][j]

    def mul(self, other):
        if self.ring != other.ring or self.cols != other.rows:
            raise MalformedInput("incompatible matrix product")
        zero = self.ring.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(tuple(row))
        return MatrixOverRing(self.ring, tuple(out))

    def is_diagonal(self):
        zero = self.ring.zero
        return all(
            self.entries[i][j] == zero
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def to_json(self):
        return {
            "ring": self.ring.describe(),
            "matrix": [[self.ring.element_to_json(e) for e in row] for row in self.entries],
        }


def matrix_from_json(data):
    if not isinstance(data, dict) or "ring" not in data or "matrix" not in data:
        raise MalformedInput('matrix JSON needs "ring" and "matrix" keys')
    ring = parse_ring(data["ring"])
    grid = data["matrix"]
    if not isinstance(grid, list) or not grid:
        raise MalformedInput('"matrix" must be a nonempty list of rows')
    rows = []
    for row in grid:
        if not isinstance(row, list):
            raise MalformedInput("matrix rows must be lists")
        rows.append(tuple(ring.element_from_json(cell) for cell in row))
    return MatrixOverRing(ring, tuple(rows))


def determinant(M):
    """Laplace expansion; intended for the small transform matrices."""
    n = M.rows
    if n != M.cols:
        raise MalformedInput("determinant of a non-square matrix")
    ring = M.ring
    if n == 1:
        return M.entries[0][0]
    out = ring.zero
    for j in range(n):
        minor = MatrixOverRing(
            ring,
            tuple(
                tuple(M.entries[i][c] for c in range(n) if c != j) for i in range(1, n)
            ),
        )
        term = M.entries[0][j] * determinant(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


# ---------------------------------------------------------------------------
# reduction containers
# ---------------------------------------------------------------------------


@dataclass
class DiagonalReduction:
    """P*A*Q = D with explicit inverses for P and Q and a transform log."""

    P: MatrixOverRing
    D: MatrixOverRing
    Q: MatrixOverRing
    P_inv: MatrixOverRing
    Q_inv: MatrixOverRing
    certificate: list = field(default_factory=list)

    def to_json(self):
        return {
            "P": self.P.to_json()["matrix"],
            "D": self.D.to_json()["matrix"],
            "Q": self.Q.to_json()["matrix"],
            "P_inv": self.P_inv.to_json()["matrix"],
            "Q_inv": self.Q_inv.to_json()["matrix"],
            "certificate": self.certificate,
        }


@dataclass
class Theorem21Trace:
    """Witness chain of the lower-triangular 2x2 reduction procedure.

    For inputs a, b, c (matrix [[a,0],[b,c]] with a, b, c jointly generating
    the ring): d, u, v is the gcd step on (a, b); t shifts b to a nonzero
    combination k = b + d*t; (r, s) splits k with r comaximal to a and s
    comaximal to c; s*p + c*l = 1; q = r*l; delta-normalization yields the
    coprime pair (p1, q1); the final witness certifies that p1*a and
    p1*k + q1*c are comaximal, which is what drives the diagonal form.
    """

    a: object
    b: object
    c: object
    d: object
    u: object
    v: object
    t: object
    k: object
    r: object
    s: object
    p: object
    l: object
    q: object
    delta: object
    p1: object
    q1: object
    kaplansky: object

    def violations(self):
        ring = self.a.ring
        one = ring.one
        out = []
        if self.a * self.u + self.b * self.v != self.d:
            out.append("a*u + b*v != d")
        if self.b + self.d * self.t != self.k:
            out.append("k != b + d*t")
        if ring.is_zero(self.k):
            out.append("k is zero")
        if self.r * self.s != self.k:
            out.append("k != r*s")
        if not ring.is_unit(ring.gcdex(self.r, self.a).d):
            out.append("r not comaximal with a")
        if not ring.is_unit(ring.gcdex(self.s, self.c).d):
            out.append("s not comaximal with c")
        if self.s * self.p + self.c * self.l != one:
            out.append("s*p + c*l != 1")
        if self.q != self.r * self.l:
            out.append("q != r*l")
        if self.p != self.p1 * self.delta:
            out.append("p != p1*delta")
        if self.q != self.q1 * self.delta:
            out.append("q != q1*delta")
        if not ring.is_unit(ring.gcdex(self.p1, self.q1).d):
            out.append("p1 not comaximal with q1")
        witness = self.p1 * self.a
        partner = self.p1 * self.k + self.q1 * self.c
        if not ring.is_unit(ring.gcdex(witness, partner).d):
            out.append("p1*a not comaximal with p1*k + q1*c")
        if self.kaplansky is not None and not self.kaplansky.verify(witness, partner):
            out.append("final gcd certificate inconsistent")
        return out

    def validate(self):
        bad = self.violations()
        if bad:
            raise TraceInvariantViolation("; ".join(bad))
        return True

    def to_json(self):
        ring = self.a.ring
        enc = ring.element_to_json
        return {
            name: enc(getattr(self, name))
            for name in (
                "a", "b", "c", "d", "u", "v", "t", "k",
                "r", "s", "p", "l", "q", "delta", "p1", "q1",
            )
        }


# ---------------------------------------------------------------------------
# pair reduction and witnesses
# ---------------------------------------------------------------------------


def hermite_reduce_pair(a, b):
    """(d, Q) with (a b) * Q = (d 0) and det Q = 1."""
    ring = a.ring
    if b.ring != ring:
        raise MalformedInput("pair from different rings")
    if ring.is_zero(a) and ring.is_zero(b):
        return ring.zero, MatrixOverRing.identity(ring, 2)
    g = ring.gcdex(a, b)
    Q = MatrixOverRing(ring, ((g.u, -g.b0), (g.v, g.a0)))
    return g.d, Q


def _small_combinations(ring):
    """0, 1, -1, 2, -2, ... as ring elements."""
    yield ring.zero
    cur = ring.zero
    for _ in range(WITNESS_SEARCH_CAP):
        cur = cur + ring.one
        yield cur
        yield -cur


def gelfand_range_1_witness(a, b):
    """First t in the order 0, 1, -1, 2, -2, ... making a + b*t nonzero.

    Over the shipped instances every nonzero element has a Gelfand (indeed
    clean) finite quotient, so avoiding zero is the entire search.  The pair
    (0, 0) generates no nonzero combination at all and is rejected.
    """
    ring = a.ring
    if ring.is_zero(a) and ring.is_zero(b):
        raise NotComaximal("a and b generate the zero ideal; every shift is zero")
    for t in _small_combinations(ring):
        if not ring.is_zero(a + b * t):
            return t
    raise SearchExhausted("no shift made the combination nonzero")


# ---------------------------------------------------------------------------
# elimination engine
# ---------------------------------------------------------------------------


class _Accumulator:
    """Mutable grid plus running P, P_inv, Q, Q_inv and a transform log."""

    def __init__(self, A):
        ring = A.ring
        self.ring = ring
        self.m, self.n = A.rows, A.cols
        self.work = [[A.entries[i][j] for j in range(A.cols)] for i in range(A.rows)]
        self.P = self._eye(self.m)
        self.Pi = self._eye(self.m)
        self.Q = self._eye(self.n)
        self.Qi = self._eye(self.n)
        self.log = []

    def _eye(self, n):
        one, zero = self.ring.one, self.ring.zero
        return [[one if i == j else zero for j in range(n)] for i in range(n)]

    def _note(self, op, **kw):
        enc = self.ring.element_to_json
        entry = {"op": op}
        for key, val in kw.items():
            entry[key] = enc(val) if hasattr(val, "ring") else val
        self.log.append(entry)

    # row ops: work and P get T (block at rows k, i); Pi gets T^-1 on columns
    def row_block(self, k, i, t, ti, op="row_gcd"):
        for grid in (self.work, self.P):
            for j in range(len(grid[0])):
                x, y = grid[k][j], grid[i][j]
                grid[k][j] = t[0][0] * x + t[0][1] * y
                grid[i][j] = t[1][0] * x + t[1][1] * y
        for r in range(self.m):
            x, y = self.Pi[r][k], self.Pi[r][i]
            self.Pi[r][k] = x * ti[0][0] + y * ti[1][0]
            self.Pi[r][i] = x * ti[0][1] + y * ti[1][1]
        self._note(op, rows=[k, i], t=[[self.ring.element_to_json(e) for e in row] for row in t])

    # column ops: work and Q get S (block at cols k, j); Qi gets S^-1 on rows
    def col_block(self, k, j, s, si, op="col_gcd"):
        for grid in (self.work, self.Q):
            for r in range(len(grid)):
                x, y = grid[r][k], grid[r][j]
                grid[r][k] = x * s[0][0] + y * s[1][0]
                grid[r][j] = x * s[0][1] + y * s[1][1]
        for c in range(self.n):
            x, y = self.Qi[k][c], self.Qi[j][c]
            self.Qi[k][c] = si[0][0] * x + si[0][1] * y
            self.Qi[j][c] = si[1][0] * x + si[1][1] * y
        self._note(op, cols=[k, j], s=[[self.ring.element_to_json(e) for e in row] for row in s])

    def row_gcd(self, k, i):
        g = self.ring.gcdex(self.work[k][k], self.work[i][k])
        t = ((g.u, g.v), (-g.b0, g.a0))
        ti = ((g.a0, -g.v), (g.b0, g.u))
        self.row_block(k, i, t, ti)

    def col_gcd(self, k, j):
        g = self.ring.gcdex(self.work[k][k], self.work[k][j])
        s = ((g.u, -g.b0), (g.v, g.a0))
        si = ((g.a0, g.b0), (-g.v, g.u))
        self.col_block(k, j, s, si)

    def swap_rows(self, k, i):
        one, zero = self.ring.one, self.ring.zero
        t = ((zero, one), (one, zero))
        self.row_block(k, i, t, t, op="swap_rows")

    def swap_cols(self, k, j):
        one, zero = self.ring.one, self.ring.zero
        s = ((zero, one), (one, zero))
        self.col_block(k, j, s, s, op="swap_cols")

    def row_add(self, k, i):
        one, zero = self.ring.one, self.ring.zero
        t = ((one, one), (zero, one))
        ti = ((one, -one), (zero, one))
        self.row_block(k, i, t, ti, op="row_add")

    def scale_row(self, k, w):
        """Multiply row k by the unit w."""
        winv = self.ring.divide_exact(self.ring.one, w)
        for grid in (self.work, self.P):
            grid[k] = [w * x for x in grid[k]]
        for r in range(self.m):
            self.Pi[r][k] = self.Pi[r][k] * winv
        self._note("scale_row", row=k, unit=w)


def _divides(ring, d, x):
    if ring.is_zero(d):
        return ring.is_zero(x)
    try:
        ring.divide_exact(x, d)
        return True
    except NotDivisible:
        return False


def _place_pivot(acc, k):
    """Ensure a nonzero entry sits at (k, k); False when the minor is zero."""
    zero = acc.ring.zero
    if acc.work[k][k] != zero:
        return True
    for i in range(k, acc.m):
        for j in range(k, acc.n):
            if acc.work[i][j] != zero:
                if i != k:
                    acc.swap_rows(k, i)
                if j != k:
                    acc.swap_cols(k, j)
                return True
    return False


def _clear_position(acc, k):
    """Zero out row k and column k past the pivot, then force the pivot to
    divide the remaining minor (folding offenders into row k)."""
    ring = acc.ring
    zero = ring.zero
    for _ in range(ENGINE_PASS_CAP):
        changed = True
        while changed:
            changed = False
            for i in range(k + 1, acc.m):
                if acc.work[i][k] != zero:
                    acc.row_gcd(k, i)
                    changed = True
            for j in range(k + 1, acc.n):
                if acc.work[k][j] != zero:
                    acc.col_gcd(k, j)
                    changed = True
        piv = acc.work[k][k]
        offender = None
        for i in range(k + 1, acc.m):
            if any(not _divides(ring, piv, acc.work[i][j]) for j in range(k + 1, acc.n)):
                offender = i
                break
        if offender is None:
            return
        acc.row_add(k, offender)
    raise InternalCheckFailed("elimination did not converge")


def diagonal_reduce(A):
    """Diagonalize A over Z, Q[x] or F_p[x] with P*A*Q = D, unit-determinant
    P and Q carried with explicit inverses, and d_i | d_{i+1} on the
    canonicalized diagonal."""
    ring = A.ring
    if isinstance(ring, QuotientRing):
        raise UnsupportedRing(
            "diagonal reduction over quotient rings is not shipped; "
            "use the element-level theory there"
        )
    if not isinstance(ring, (IntegerRing, PolynomialRing)):
        raise UnsupportedRing(f"no elimination route for {ring.describe()}")
    acc = _Accumulator(A)
    for k in range(min(acc.m, acc.n)):
        if not _place_pivot(acc, k):
            break
        _clear_position(acc, k)
    for k in range(min(acc.m, acc.n)):
        x = acc.work[k][k]
        c, w = ring.canonical_associate(x)
        if x != c:
            # x = w*c, so scaling the row by w^-1 lands on the canonical form
            acc.scale_row(k, ring.divide_exact(ring.one, w))
    red = DiagonalReduction(
        P=MatrixOverRing(ring, tuple(tuple(r) for r in acc.P)),
        D=MatrixOverRing(ring, tuple(tuple(r) for r in acc.work)),
        Q=MatrixOverRing(ring, tuple(tuple(r) for r in acc.Q)),
        P_inv=MatrixOverRing(ring, tuple(tuple(r) for r in acc.Pi)),
        Q_inv=MatrixOverRing(ring, tuple(tuple(r) for r in acc.Qi)),
        certificate=acc.log,
    )
    ok, bad = verify_reduction(A, red)
    if not ok:
        raise InternalCheckFailed(f"reduction failed self-check: {'; '.join(bad)}")
    return red


def verify_reduction(A, red):
    """Re-check every reduction invariant; returns (ok, violations)."""
    ring = A.ring
    violations = []
    m, n = A.rows, A.cols
    if red.P.rows != m or red.P.cols != m or red.Q.rows != n or red.Q.cols != n:
        return False, ["transform shapes do not match the input"]
    if red.D.rows != m or red.D.cols != n:
        return False, ["diagonal shape does not match the input"]
    if red.P.mul(A).mul(red.Q) != red.D:
        violations.append("P*A*Q != D")
    if not red.D.is_diagonal():
        violations.append("D is not diagonal")
    diag = red.D.diagonal()
    for i in range(len(diag) - 1):
        if not _divides(ring, diag[i], diag[i + 1]):
            violations.append(f"chain break: entry {i} does not divide entry {i+1}")
    eye_m = MatrixOverRing.identity(ring, m)
    eye_n = MatrixOverRing.identity(ring, n)
    if red.P.mul(red.P_inv) != eye_m:
        violations.append("P*P_inv != I")
    if red.Q.mul(red.Q_inv) != eye_n:
        violations.append("Q*Q_inv != I")
    if m <= 4 and not ring.is_unit(determinant(red.P)):
        violations.append("det P is not a unit")
    if n <= 4 and not ring.is_unit(determinant(red.Q)):
        violations.append("det Q is not a unit")
    return not violations, violations


# ---------------------------------------------------------------------------
# the 2x2 lower-triangular procedure
# ---------------------------------------------------------------------------


def reduce_2x2_theorem21(a, b, c):
    """Reduce [[a, 0], [b, c]] by the witness-chain procedure.

    Steps 1-7 compute and assert the full chain of comaximality witnesses;
    the explicit P, Q come from the elimination engine, whose output is
    checked against the predicted diagonal diag(1, a*c) up to units.  The
    degenerate corner a = b = 0 (forcing c to be a unit) has no witness
    chain: the trace slot is None.
    """
    ring = a.ring
    if b.ring != ring or c.ring != ring:
        raise MalformedInput("a, b, c from different rings")
    if not isinstance(ring, (IntegerRing, PolynomialRing)):
        raise UnsupportedRing("the 2x2 procedure runs over the domain instances")
    triple = ring.gcdex(ring.gcdex(a, b).d, c).d
    if not ring.is_unit(triple):
        raise PreconditionFailed(
            f"precondition aR+bR+cR=R fails (gcd {ring.format_element(triple)})"
        )
    A = MatrixOverRing(ring, ((a, ring.zero), (b, c)))
    red = diagonal_reduce(A)
    expected_tail, _ = ring.canonical_associate(a * c)
    if red.D.diagonal() != [ring.one, expected_tail]:
        raise InternalCheckFailed(
            "engine diagonal disagrees with the predicted diag(1, a*c)"
        )
    if ring.is_zero(a) and ring.is_zero(b):
        return red, None

    g1 = ring.gcdex(a, b)
    t = gelfand_range_1_witness(b, g1.d)
    k = b + g1.d * t
    split = gelfand_decompose(k, a, c)
    r, s = split.r, split.s
    g2 = ring.gcdex(s, c)
    w = ring.divide_exact(ring.one, g2.d)
    p, l = g2.u * w, g2.v * w
    q = r * l
    g3 = ring.gcdex(p, q)
    delta, p1, q1 = g3.d, g3.a0, g3.b0
    kap = ring.gcdex(p1 * a, p1 * k + q1 * c)
    if not ring.is_unit(kap.d):
        raise TraceInvariantViolation("p1*a and p1*k + q1*c are not comaximal")
    trace = Theorem21Trace(
        a=a, b=b, c=c, d=g1.d, u=g1.u, v=g1.v, t=t, k=k, r=r, s=s,
        p=p, l=l, q=q, delta=delta, p1=p1, q1=q1, kaplansky=kap,
    )
    trace.validate()
    return red, trace


# ---------------------------------------------------------------------------
# independent integer oracle
# ---------------------------------------------------------------------------


def _int_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    first = rows[0]
    rest = rows[1:]
    for j in range(n):
        if first[j] == 0:
            continue
        minor = [[r[cc] for cc in range(n) if cc != j] for r in rest]
        term = first[j] * _int_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def snf_oracle_integers(A, size_cap=6):
    """Diagonal entries via determinantal-divisor ratios: the gcd of all
    k-by-k minors, divided by the gcd of the (k-1)-level.  Entirely
    independent of the elimination path."""
    from math import gcd as _gcd

    if isinstance(A, MatrixOverRing):
        if not isinstance(A.ring, IntegerRing):
            raise UnsupportedRing("the determinantal oracle is integer-only")
        grid = [[e.payload for e in row] for row in A.entries]
    else:
        grid = [list(map(int, row)) for row in A]
    m, n = len(grid), len(grid[0])
    if min(m, n) > size_cap:
        raise TooLarge(f"oracle accepts min(m, n) <= {size_cap}")
    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        div = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                sub = [[grid[i][j] for j in cols] for i in rows]
                div = _gcd(div, _int_det(sub))
        if div == 0:
            out.append(0)
            prev = 0
        else:
            out.append(div // prev)
            prev = div
    return tuple(out)
