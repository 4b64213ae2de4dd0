"""Irreducible characters, multiplicity tables, and the affinization order.

Everything here runs in doubled orthogonal coordinates: integer vectors
whose halves are the usual orthogonal coordinates of the weight lattice.
Dominant-chamber multiplicities come from the Freudenthal recursion; full
characters are Weyl-orbit expansions of those.  The Weyl dimension formula
is kept as an independent cross-check of the recursion.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .cartan import (
    AffineWeight,
    check_dominant,
    dominates,
    eps2,
    finite_edges,
    fw_from_eps2,
    is_dominant_fw,
)
from .errors import CharacterError, InputError
from .polyring import CharElem
from . import weyl


@lru_cache(maxsize=None)
def _pos_roots_eps2(n):
    """Doubled root vectors: coordinate differences and sums of pairs."""
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            a = [0] * n
            a[i], a[j] = 2, -2
            roots.append(tuple(a))
            b = [0] * n
            b[i], b[j] = 2, 2
            roots.append(tuple(b))
    return tuple(roots)


def _is_dominant_eps(d):
    n = len(d)
    return all(d[i] >= d[i + 1] for i in range(n - 2)) and d[n - 2] >= abs(d[n - 1])


def _dominantize(d):
    neg = sum(1 for v in d if v < 0)
    mags = sorted((abs(v) for v in d), reverse=True)
    if neg % 2 and mags[-1]:
        mags[-1] = -mags[-1]
    return tuple(mags)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _rho2(n):
    return eps2(n, (1,) * n)


def dominant_weights_below(n, lam):
    """All dominant weights under ``lam`` in dominance order, as doubled
    coordinate tuples.  Walks down by positive-root steps; in dominance
    order every covering step is a positive root, so this is exhaustive."""
    check_dominant(n, lam)
    top = eps2(n, lam)
    roots = _pos_roots_eps2(n)
    seen = {top}
    frontier = [top]
    while frontier:
        fresh = []
        for d in frontier:
            for a in roots:
                e = tuple(x - y for x, y in zip(d, a))
                if e not in seen and _is_dominant_eps(e):
                    seen.add(e)
                    fresh.append(e)
        frontier = fresh
    return seen


@lru_cache(maxsize=None)
def dominant_mults(n, lam):
    """Freudenthal recursion over the dominant chamber.

    Returns a map from doubled coordinates to weight multiplicities for
    every dominant weight of the irreducible with highest weight ``lam``.
    """
    check_dominant(n, lam)
    roots = _pos_roots_eps2(n)
    rho = _rho2(n)
    top = eps2(n, lam)
    doms = dominant_weights_below(n, lam)
    top_rho = tuple(a + b for a, b in zip(top, rho))
    top_norm = _dot(top_rho, top_rho)
    order = sorted(doms, key=lambda d: (-_dot(d, rho), d))
    mults = {}
    for d in order:
        if d == top:
            mults[d] = 1
            continue
        num = 0
        for a in roots:
            nu = tuple(x + y for x, y in zip(d, a))
            while True:
                m = mults.get(_dominantize(nu))
                if m is None:
                    break
                num += m * _dot(nu, a)
                nu = tuple(x + y for x, y in zip(nu, a))
        d_rho = tuple(a + b for a, b in zip(d, rho))
        den = top_norm - _dot(d_rho, d_rho)
        q, r = divmod(2 * num, den)
        assert r == 0 and q > 0, f"Freudenthal failed at {d}"
        mults[d] = q
    return mults


def _orbit(n, d0):
    """Weyl orbit of a doubled coordinate vector: sorted-coordinate swaps
    and paired sign flips, closed under the simple reflections."""
    seen = {d0}
    stack = [d0]
    while stack:
        d = stack.pop()
        for i in range(n - 2):
            if d[i] != d[i + 1]:
                e = d[:i] + (d[i + 1], d[i]) + d[i + 2 :]
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        if d[n - 2] != d[n - 1]:
            e = d[: n - 2] + (d[n - 1], d[n - 2])
            if e not in seen:
                seen.add(e)
                stack.append(e)
        if d[n - 2] != -d[n - 1]:
            e = d[: n - 2] + (-d[n - 1], -d[n - 2])
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return seen


def weyl_group_order(n):
    return 2 ** (n - 1) * factorial(n)


def orbit_size(n, mu):
    """Orbit size through the stabilizer: the product of parabolic orders
    over connected components of the vanishing nodes."""
    check_dominant(n, mu)
    zero = {i for i in range(1, n + 1) if mu[i - 1] == 0}
    adj = {i: set() for i in zero}
    for a, b in finite_edges(n):
        if a in zero and b in zero:
            adj[a].add(b)
            adj[b].add(a)
    seen = set()
    stab = 1
    for start in zero:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        k = len(comp)
        if {n - 2, n - 1, n} <= comp:
            stab *= 2 ** (k - 1) * factorial(k)
        else:
            stab *= factorial(k + 1)
    return weyl_group_order(n) // stab


@lru_cache(maxsize=None)
def irr_character(n, mu):
    """Full weight-multiplicity character of the irreducible V(mu)."""
    mu = tuple(mu)
    check_dominant(n, mu)
    terms = {}
    for d, m in dominant_mults(n, mu).items():
        for e in _orbit(n, d):
            terms[AffineWeight(fw_from_eps2(n, e))] = m
    return CharElem(n, terms, affine=False)


def character_mass(n, mu):
    """Total multiplicity mass via stabilizer orders; no orbit expansion."""
    mu = tuple(mu)
    return sum(
        m * orbit_size(n, fw_from_eps2(n, d)) for d, m in dominant_mults(n, mu).items()
    )


def dim_irr(n, mu):
    """Weyl dimension formula, exact integer arithmetic."""
    mu = tuple(mu)
    check_dominant(n, mu)
    rho = _rho2(n)
    top = tuple(a + b for a, b in zip(eps2(n, mu), rho))
    num = 1
    den = 1
    for a in _pos_roots_eps2(n):
        num *= _dot(top, a)
        den *= _dot(rho, a)
    q, r = divmod(num, den)
    assert r == 0
    return q


@dataclass(frozen=True)
class DecompositionTable:
    """Multiplicities of irreducibles in a finite character, with the total
    dimension they account for."""

    n: int
    mults: dict
    dimension: int

    def top_weight(self):
        tops = _maximal_keys(self.n, list(self.mults))
        if len(tops) != 1:
            raise InputError(f"table has no unique top weight: {tops}")
        return tops[0]


def _maximal_keys(n, keys):
    return [
        a for a in keys if not any(b != a and dominates(n, b, a) for b in keys)
    ]


def decompose(f, n=None):
    """Greedy peel-off of irreducible characters from the top.

    Repeatedly locates a dominance-maximal dominant key, records its
    coefficient, and subtracts that many copies of the irreducible.  Any
    negative coefficient, missing dominant key, or nonzero residual means
    the input was not a genuine character.
    """
    if n is None:
        n = f.n
    if f.affine:
        raise InputError("decompose expects a finite-tagged element")
    for i in range(1, n + 1):
        if f.relabel_weyl(weyl.simple(n, i)) != f:
            raise CharacterError(f"input is not Weyl-invariant at node {i}")
    work = dict(f.terms)
    mults = {}
    dimension = 0
    while work:
        dom = [k.finite for k in work if is_dominant_fw(k.finite)]
        if not dom:
            raise CharacterError(f"nonzero residual with no dominant term: {len(work)} terms")
        mu = max(_maximal_keys(n, dom))
        m = work[AffineWeight(mu)]
        if m < 0:
            raise CharacterError(f"negative multiplicity {m} at {mu}")
        for k, v in irr_character(n, mu).terms.items():
            w = work.get(k, 0) - m * v
            if w:
                work[k] = w
            else:
                work.pop(k, None)
        mults[mu] = m
        dimension += m * dim_irr(n, mu)
    return DecompositionTable(n, mults, dimension)


def compare_affinization(a, b):
    """Partial order on multiplicity tables sharing a top weight.

    One table precedes another when, at every dominant weight, either its
    multiplicity is no larger or some strictly higher weight has strictly
    smaller multiplicity.  Returns 'equal', 'leq', 'geq', or 'incomparable'.
    """
    if a.n != b.n:
        raise InputError("rank mismatch")
    if a.top_weight() != b.top_weight():
        raise InputError("tables do not share a top weight")
    if a.mults == b.mults:
        return "equal"
    n = a.n
    keys = set(a.mults) | set(b.mults)

    def leq(x, y):
        for mu in keys:
            if x.get(mu, 0) <= y.get(mu, 0):
                continue
            if any(
                dominates(n, nu, mu) and nu != mu and x.get(nu, 0) < y.get(nu, 0)
                for nu in keys
            ):
                continue
            return False
        return True

    ab = leq(a.mults, b.mults)
    ba = leq(b.mults, a.mults)
    if ab and ba:
        return "equal"
    if ab:
        return "leq"
    if ba:
        return "geq"
    return "incomparable"
