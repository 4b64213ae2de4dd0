"""Independent multiplicity pipeline through the rank n-1 symplectic algebra.

The map ``iota`` folds the two spin coordinates into the last symplectic
node; a Schur functor of the standard symplectic module, evaluated by
semistandard tableaux, decomposes into symplectic irreducibles; lifting
back along ``iota`` gives the multiplicity table of the s = 1 family.

This path deliberately shares no computation with the Demazure pipeline:
it has its own root data, its own dominant recursion, and its own greedy
decomposition, all in plain orthogonal coordinates (integral for the
symplectic lattice, so nothing is doubled here).
"""

from functools import lru_cache

from .cartan import AffineWeight, check_dominant, check_rank
from .errors import CharacterError, InputError
from .polyring import CharElem
from .affinization import is_regular


def iota(n, mu):
    """Fold a dominant weight onto the symplectic dominant cone: chain
    coordinates pass through, the spin pair contributes its minimum."""
    mu = tuple(mu)
    check_dominant(n, mu)
    return mu[: n - 2] + (min(mu[n - 2], mu[n - 1]),)


def partition_of(nu):
    """Tail sums of the coordinates; for a dominant symplectic weight these
    are its orthogonal coordinates read as a partition."""
    if any(v < 0 for v in nu):
        raise InputError(f"{nu} is not dominant")
    r = len(nu)
    return tuple(sum(nu[i:]) for i in range(r))


def _strip(p):
    return tuple(v for v in p if v)


def _sp_eps(nu):
    r = len(nu)
    return tuple(sum(nu[i:]) for i in range(r))


def _sp_fund_from_eps(x):
    r = len(x)
    return tuple(x[i] - x[i + 1] for i in range(r - 1)) + (x[r - 1],)


# ---------------------------------------------------------------------------
# Schur functor characters via semistandard tableaux


def schur_char(p, rank):
    """Character of the Schur functor of the standard symplectic module.

    Enumerates semistandard tableaux of shape ``p`` in 2*rank letters; each
    letter carries one of the orthogonal weights of the standard module.
    Generally reducible as a symplectic character.
    """
    check_rank(rank + 1)
    p = _strip(tuple(p))
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or any(v < 0 for v in p):
        raise InputError(f"{p} is not a partition")
    nletters = 2 * rank
    if len(p) > nletters:
        raise InputError(f"partition {p} too tall for {nletters} letters")
    if not p:
        return CharElem.monomial(AffineWeight((0,) * rank), 1, affine=False)
    # letter 2i-1 adds +1, letter 2i adds -1 at coordinate i (1-based i)
    rows = len(p)
    eps_weights = {}
    col_of = p
    tableau = [[0] * p[r] for r in range(rows)]
    acc = [0] * rank

    def fill(r, c):
        if r == rows:
            key = tuple(acc)
            eps_weights[key] = eps_weights.get(key, 0) + 1
            return
        nr, nc = (r, c + 1) if c + 1 < col_of[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = tableau[r][c - 1]
        if r > 0 and c < col_of[r - 1]:
            lo = max(lo, tableau[r - 1][c] + 1)
        for letter in range(lo, nletters + 1):
            tableau[r][c] = letter
            i, odd = divmod(letter - 1, 2)
            step = 1 if odd == 0 else -1
            acc[i] += step
            fill(nr, nc)
            acc[i] -= step
        tableau[r][c] = 0

    fill(0, 0)
    terms = {}
    for x, m in eps_weights.items():
        terms[AffineWeight(_sp_fund_from_eps(x))] = m
    return CharElem(rank, terms, affine=False)


# ---------------------------------------------------------------------------
# Symplectic root data, Freudenthal recursion, greedy decomposition


@lru_cache(maxsize=None)
def _sp_pos_roots(r):
    roots = []
    for i in range(r):
        for j in range(i + 1, r):
            a = [0] * r
            a[i], a[j] = 1, -1
            roots.append(tuple(a))
            b = [0] * r
            b[i], b[j] = 1, 1
            roots.append(tuple(b))
    for i in range(r):
        c = [0] * r
        c[i] = 2
        roots.append(tuple(c))
    return tuple(roots)


def _sp_rho(r):
    return tuple(range(r, 0, -1))


def _sp_dominant(x):
    r = len(x)
    return all(x[i] >= x[i + 1] for i in range(r - 1)) and x[r - 1] >= 0


def _sp_dominantize(x):
    return tuple(sorted((abs(v) for v in x), reverse=True))


def _sp_in_root_cone(x):
    acc = 0
    for v in x[:-1]:
        acc += v
        if acc < 0:
            return False
    acc += x[-1]
    return acc >= 0 and acc % 2 == 0


def _dot(a, b):
    return sum(u * v for u, v in zip(a, b))


@lru_cache(maxsize=None)
def _sp_dominant_mults(r, top):
    """Freudenthal recursion for the symplectic algebra of rank r; ``top``
    is the highest weight in orthogonal coordinates."""
    roots = _sp_pos_roots(r)
    rho = _sp_rho(r)
    doms = {top}
    frontier = [top]
    while frontier:
        fresh = []
        for d in frontier:
            for a in roots:
                e = tuple(x - y for x, y in zip(d, a))
                if e not in doms and _sp_dominant(e):
                    doms.add(e)
                    fresh.append(e)
        frontier = fresh
    top_rho = tuple(a + b for a, b in zip(top, rho))
    top_norm = _dot(top_rho, top_rho)
    mults = {}
    for d in sorted(doms, key=lambda d: (-_dot(d, rho), d)):
        if d == top:
            mults[d] = 1
            continue
        num = 0
        for a in roots:
            nu = tuple(x + y for x, y in zip(d, a))
            while True:
                m = mults.get(_sp_dominantize(nu))
                if m is None:
                    break
                num += m * _dot(nu, a)
                nu = tuple(x + y for x, y in zip(nu, a))
        d_rho = tuple(a + b for a, b in zip(d, rho))
        den = top_norm - _dot(d_rho, d_rho)
        q, rem = divmod(2 * num, den)
        assert rem == 0 and q > 0, f"symplectic recursion failed at {d}"
        mults[d] = q
    return mults


def _sp_orbit(x):
    r = len(x)
    seen = {x}
    stack = [x]
    while stack:
        d = stack.pop()
        for i in range(r - 1):
            if d[i] != d[i + 1]:
                e = d[:i] + (d[i + 1], d[i]) + d[i + 2 :]
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        if d[r - 1]:
            e = d[: r - 1] + (-d[r - 1],)
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return seen


@lru_cache(maxsize=None)
def sp_irr_character(rank, nu):
    """Irreducible symplectic character with highest weight ``nu``."""
    nu = tuple(nu)
    if not all(v >= 0 for v in nu) or len(nu) != rank:
        raise InputError(f"{nu} is not a dominant rank-{rank} weight")
    terms = {}
    for d, m in _sp_dominant_mults(rank, _sp_eps(nu)).items():
        for e in _sp_orbit(d):
            terms[AffineWeight(_sp_fund_from_eps(e))] = m
    return CharElem(rank, terms, affine=False)


def sp_dim_irr(rank, nu):
    rho = _sp_rho(rank)
    top = tuple(a + b for a, b in zip(_sp_eps(tuple(nu)), rho))
    num = 1
    den = 1
    for a in _sp_pos_roots(rank):
        num *= _dot(top, a)
        den *= _dot(rho, a)
    q, r = divmod(num, den)
    assert r == 0
    return q


def decompose_sp(f, rank):
    """Greedy peel-off over the symplectic dominance order; the residual
    must reach exactly zero or the input was not a character."""
    if f.affine:
        raise InputError("decompose_sp expects a finite-tagged element")
    work = {k.finite: v for k, v in f.terms.items()}
    mults = {}
    while work:
        dom = [k for k in work if all(v >= 0 for v in k)]
        if not dom:
            raise CharacterError("nonzero residual with no dominant term")
        maximal = [
            a
            for a in dom
            if not any(
                b != a
                and _sp_in_root_cone(
                    tuple(x - y for x, y in zip(_sp_eps(b), _sp_eps(a)))
                )
                for b in dom
            )
        ]
        nu = max(maximal)
        m = work[nu]
        if m < 0:
            raise CharacterError(f"negative multiplicity {m} at {nu}")
        for k, v in sp_irr_character(rank, nu).terms.items():
            w = work.get(k.finite, 0) - m * v
            if w:
                work[k.finite] = w
            else:
                work.pop(k.finite, None)
        mults[nu] = m
    return mults


# ---------------------------------------------------------------------------
# The multiplicity formula


@lru_cache(maxsize=None)
def sam_table(n, lam):
    """Multiplicity table of the s = 1 family from the symplectic side.

    Decomposes the Schur-functor character of the folded highest weight and
    lifts each symplectic constituent back to the unique dominant weight
    with the same spin difference as ``lam``.
    """
    lam = tuple(lam)
    check_dominant(n, lam)
    if not is_regular(n, lam):
        raise InputError(f"weight {lam} is outside the regular classification")
    rank = n - 1
    table = decompose_sp(schur_char(partition_of(iota(n, lam)), rank), rank)
    diff = lam[n - 1] - lam[n - 2]
    out = {}
    for nu, m in table.items():
        spin_min = nu[rank - 1]
        if diff >= 0:
            mu = nu[: rank - 1] + (spin_min, spin_min + diff)
        else:
            mu = nu[: rank - 1] + (spin_min - diff, spin_min)
        out[mu] = m
    return out


def sam_mult(n, lam, mu):
    """Multiplicity of V(mu) in the s = 1 minimal affinization of ``lam``,
    computed without Demazure operators."""
    lam, mu = tuple(lam), tuple(mu)
    check_dominant(n, mu)
    table = sam_table(n, lam)
    if mu[n - 1] - mu[n - 2] != lam[n - 1] - lam[n - 2]:
        return 0
    return table.get(mu, 0)
