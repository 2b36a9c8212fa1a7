"""λₑ-parts, neighborhoods ``P(x)``, λₑ-strong hyperrings and completeness.

Bounded checks use the generator relations at explicit :class:`Bounds`.  When
no bounds are given, :func:`default_bounds` picks bounds at which the closed
λₑ relation already equals the exact λ*ₑ (taken from the closure engine) and
which are large enough for the e·e / e·e·e·e witnesses used with λₑ-strong
structures.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .closure import Partition, starred
from .core import Hyperring, PreconditionError, elements
from .expr import Bounds
from .relations import Relation, generate, generator_pairs, saturated_generate

__all__ = [
    "Neighborhood",
    "default_bounds",
    "neighborhood",
    "part_escape",
    "is_lambda_e_part",
    "part_conditions",
    "TransitivityReport",
    "transitivity_report",
    "StrongWitness",
    "lambda_e_strong_counterexample",
    "is_lambda_e_strong",
    "StrongTransitivity",
    "strong_implies_transitive",
    "scalar_identity",
    "CompletenessReport",
    "completeness",
]

# x ∈ z·e·e and z ∈ z·e·e·e·e relate x and z in one term of five factors
_STRONG_FLOOR = Bounds(1, 5, 2)


@lru_cache(maxsize=256)
def default_bounds(r: Hyperring, e: int) -> Bounds:
    sat = saturated_generate(r, "lambdaE", e)
    return sat.bounds.join(_STRONG_FLOOR)


def _lambda(r, e, b):
    return generate(r, "lambdaE", b, e)


@dataclass(frozen=True)
class Neighborhood:
    x: int
    px: int
    alpha_plus: int
    lambda_times: int


def neighborhood(r: Hyperring, x: int, e: int, b: Bounds | None = None) -> Neighborhood:
    """``P(x)``: everything λₑ-related to ``x`` at the given bounds."""
    b = b or default_bounds(r, e)
    ap = generate(r, "alphaPlus", b).row(x)
    lt = generate(r, "lambdaTimesE", b, e).row(x)
    return Neighborhood(x, ap | lt, ap, lt)


def part_escape(r: Hyperring, m: int, e: int, b: Bounds | None = None) -> tuple[int, int] | None:
    """First ``(x, y)`` with ``x`` in M, ``y`` outside, and ``x`` related to ``y``.

    Without bounds the exact λ*ₑ classes are used (M is a part iff it is a
    union of classes); with bounds, the bounded λₑ rows.
    """
    if m == 0 or m >> r.q:
        raise PreconditionError("M must be a non-empty subset of the carrier")
    if b is None:
        rows = starred(r, "lambdaStarE", e).to_relation().rows
    else:
        rows = _lambda(r, e, b).rows
    for x in elements(m):
        out = rows[x] & ~m
        if out:
            return x, (out & -out).bit_length() - 1
    return None


def is_lambda_e_part(r: Hyperring, m: int, e: int, b: Bounds | None = None) -> bool:
    return part_escape(r, m, e, b) is None


def part_conditions(r: Hyperring, m: int, e: int, b: Bounds | None = None) -> tuple[bool, bool, bool]:
    """The three equivalent characterizations of a λₑ-part.

    1. every generator pair ``(A, B)`` (term permutations and e-insertions,
       both orders) with ``A`` meeting M has ``B ⊆ M``;
    2. M is closed under the bounded λₑ relation;
    3. M is a union of λ*ₑ classes.
    """
    b = b or default_bounds(r, e)
    pairs = generator_pairs(r, "lambdaE", b, e)
    c1 = all(not (a & m) or not (bb & ~m) for a, bb in pairs)
    c2 = part_escape(r, m, e, b) is None
    c3 = part_escape(r, m, e) is None
    return c1, c2, c3


@dataclass(frozen=True)
class TransitivityReport:
    e: int
    bounds: Bounds
    transitive: bool
    classes_are_neighborhoods: bool
    neighborhoods_are_parts: bool
    witness: tuple | None = None

    @property
    def agree(self) -> bool:
        return self.transitive == self.classes_are_neighborhoods == self.neighborhoods_are_parts


def transitivity_report(r: Hyperring, e: int, b: Bounds | None = None) -> TransitivityReport:
    """Evaluate: λₑ transitive; λ*ₑ(x) = P(x) for all x; each P(x) is a λₑ-part."""
    b = b or default_bounds(r, e)
    lam = _lambda(r, e, b)
    rows = lam.rows
    transitive = lam.is_transitive()
    exact = starred(r, "lambdaStarE", e).to_relation().rows
    witness = None
    mismatch = [x for x in range(r.q) if exact[x] != rows[x]]
    if mismatch:
        witness = ("class-vs-neighborhood", mismatch[0])
    parts_ok = True
    for x in range(r.q):
        esc = part_escape(r, rows[x], e, b)
        if esc is not None:
            parts_ok = False
            witness = witness or ("neighborhood-not-part", x, esc)
            break
    return TransitivityReport(e, b, transitive, not mismatch, parts_ok, witness)


@dataclass(frozen=True)
class StrongWitness:
    clause: str
    data: tuple


def lambda_e_strong_counterexample(r: Hyperring, e: int) -> StrongWitness | None:
    """Check both clauses of λₑ-strongness.

    (i) related elements have overlapping right and left e-translates;
    (ii) ``{e}`` is invertible in the sense ``z ∈ x·e ⇒ x ∈ z·e`` and
    ``z ∈ e·x ⇒ x ∈ e·z``.
    """
    if not 0 <= e < r.q:
        raise PreconditionError(f"e={e} out of range for q={r.q}")
    rows = starred(r, "lambdaStarE", e).to_relation().rows
    t = r.times
    for x in range(r.q):
        for y in elements(rows[x]):
            if not t(x, e) & t(y, e):
                return StrongWitness("overlap-right", (x, y))
            if not t(e, x) & t(e, y):
                return StrongWitness("overlap-left", (x, y))
    for x in range(r.q):
        for z in elements(t(x, e)):
            if not t(z, e) >> x & 1:
                return StrongWitness("invertible-right", (z, x))
        for z in elements(t(e, x)):
            if not t(e, z) >> x & 1:
                return StrongWitness("invertible-left", (z, x))
    return None


def is_lambda_e_strong(r: Hyperring, e: int) -> bool:
    return lambda_e_strong_counterexample(r, e) is None


@dataclass(frozen=True)
class StrongTransitivity:
    strong: bool
    report: TransitivityReport

    @property
    def holds(self) -> bool:
        return not self.strong or (self.report.transitive and self.report.agree)


def strong_implies_transitive(r: Hyperring, e: int, b: Bounds | None = None) -> StrongTransitivity:
    b = (b or default_bounds(r, e)).join(_STRONG_FLOOR)
    return StrongTransitivity(is_lambda_e_strong(r, e), transitivity_report(r, e, b))


def scalar_identity(r: Hyperring) -> int | None:
    """An element ``u`` with ``u·x = x·u = {x}`` for all ``x``, if any."""
    for u in range(r.q):
        if all(r.times(u, x) == r.times(x, u) == 1 << x for x in range(r.q)):
            return u
    return None


@dataclass(frozen=True)
class CompletenessReport:
    n: int
    bounds: Bounds
    n_complete: bool
    n_witness: tuple | None
    unit: int | None
    e: int | None
    lambda_complete: bool | None
    lambda_witness: tuple | None
    corollary: bool | None          # unitary: n-complete <=> (Λe)n-complete
    gamma_equals_lambda: bool | None
    collapse: bool | None           # (Λe)n-complete: level-n relation = whole relation

    @property
    def ok(self) -> bool:
        return self.corollary is not False and self.collapse is not False


def _word_triples(r: Hyperring, e: int, b: Bounds):
    """Per product word: (value, value ∪ expansions, value ∪ contractions)."""
    K, run = b.max_factors, b.max_insert_run
    out = {}
    for k in range(1, K + 1):
        for w in product(range(r.q), repeat=k):
            v = _word_value(r, w)
            exp = v
            for L in range(1, run + 1):
                if k + L > K:
                    break
                for p in range(k + 1):
                    exp |= _word_value(r, w[:p] + (e,) * L + w[p:])
            con = v
            for L in range(1, min(run, k - 1) + 1):
                for p in range(k - L + 1):
                    if all(c == e for c in w[p:p + L]):
                        con |= _word_value(r, w[:p] + w[p + L:])
            out.setdefault((v, exp, con), w)
    return out


def _word_value(r, w):
    v = 1 << w[0]
    for x in w[1:]:
        v = r.mul(v, 1 << x)
    return v


def completeness(r: Hyperring, n: int, e: int | None = None,
                 b: Bounds | None = None) -> CompletenessReport:
    """n-completeness and (Λₑ)ₙ-completeness over the n-term expressions in ``b``.

    n-complete: ``Γ(u) = u`` for every n-term value ``u``.  (Λₑ)ₙ-complete:
    ``Λₑ(u)`` equals the union of the values of all e-insertion partners of
    ``u``.  Both relations are taken at the same bounds.
    """
    b = b or Bounds(max(n, 3), 3, 2)
    if not 1 <= n <= b.max_terms:
        raise PreconditionError(f"n={n} must lie in 1..{b.max_terms}")
    unit = scalar_identity(r)
    e = unit if e is None else e
    gamma = generate(r, "gamma", b)
    K = b.max_factors
    words = {}
    for k in range(1, K + 1):
        for w in product(range(r.q), repeat=k):
            words.setdefault(_word_value(r, w), w)
    sums = {v: (w,) for v, w in words.items()}
    for _ in range(n - 1):
        sums = {r.add(s, v): ex + (w,) for s, ex in sums.items() for v, w in words.items()}
    n_witness = None
    for s, ex in sorted(sums.items()):
        if gamma.image(s) != s:
            n_witness = (ex, elements(s), elements(gamma.image(s)))
            break

    lam_ok = lam_w = corollary = g_eq = collapse = None
    if e is not None:
        big = generate(r, "LambdaE", b, e)
        triples = _word_triples(r, e, b)
        states = {t: (w,) for t, w in triples.items()}
        for _ in range(n - 1):
            states = {(r.add(s, v), r.add(se, ve), r.add(sc, vc)): ex + (w,)
                      for (s, se, sc), ex in states.items()
                      for (v, ve, vc), w in triples.items()}
        lam_ok = True
        for (s, se, sc), ex in sorted(states.items()):
            if big.image(s) != se | sc:
                lam_ok = False
                lam_w = (ex, elements(big.image(s)), elements(se | sc))
                break
        if unit is not None and e == unit:
            corollary = (n_witness is None) == lam_ok
            g_eq = gamma == big
        if lam_ok:
            collapse = generate(r, "LambdaE", b, e, terms=n) == big
    return CompletenessReport(n, b, n_witness is None, n_witness, unit, e, lam_ok, lam_w,
                              corollary, g_eq, collapse)
