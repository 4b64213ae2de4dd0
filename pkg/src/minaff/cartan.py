"""Static root and weight data for D_n, its untwisted affine diagram, and C_{n-1}.

Conventions used throughout the library:

* finite weights are integer tuples of length n holding coefficients on the
  fundamental weights (node order 1..n, the two fork nodes last);
* finite roots are integer tuples of length n holding coefficients on the
  simple roots;
* affine weights carry a finite part, an integer level (coefficient of the
  level-one fundamental weight at node 0) and an exact rational coefficient
  of the null root delta.

The fork of the finite diagram sits at node n-2, with spin nodes n-1 and n
attached to it; the affine node 0 is attached to node 2.  Ranks below 4 are
rejected everywhere.
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import InputError

MIN_RANK = 4


def check_rank(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < MIN_RANK:
        raise InputError(f"rank must be an integer >= {MIN_RANK}, got {n!r}")


class AffineWeight(namedtuple("AffineWeight", ("finite", "level", "delta"))):
    """Element of the affine weight lattice extended by rational delta.

    ``finite`` is the fundamental-coordinate tuple, ``level`` the integer
    coefficient of the node-0 fundamental weight, ``delta`` the exact
    rational coefficient of the null root.  Coroot pairings never see
    ``delta``.  Tuple-backed, so hashing and equality are cheap enough for
    large character supports.
    """

    __slots__ = ()

    def __new__(cls, finite, level=0, delta=0):
        return super().__new__(cls, tuple(finite), int(level), Fraction(delta))

    @property
    def n(self):
        return len(self.finite)

    def __add__(self, other):
        return AffineWeight(
            tuple(a + b for a, b in zip(self.finite, other.finite)),
            self.level + other.level,
            self.delta + other.delta,
        )

    def __sub__(self, other):
        return AffineWeight(
            tuple(a - b for a, b in zip(self.finite, other.finite)),
            self.level - other.level,
            self.delta - other.delta,
        )

    def __neg__(self):
        return AffineWeight(tuple(-a for a in self.finite), -self.level, -self.delta)

    def __mul__(self, k):
        return AffineWeight(
            tuple(k * a for a in self.finite), k * self.level, k * self.delta
        )

    __rmul__ = __mul__

    def is_finite(self):
        return self.level == 0 and self.delta == 0

    def __repr__(self):
        return f"AffineWeight({self.finite}, level={self.level}, delta={self.delta})"


def affine(finite, level=0, delta=0):
    """Shorthand constructor for :class:`AffineWeight`."""
    return AffineWeight(finite, level, delta)


def zero_weight(n):
    check_rank(n)
    return AffineWeight((0,) * n, 0, 0)


def varpi(n, i):
    """The i-th fundamental weight as a finite coordinate tuple."""
    check_rank(n)
    if not 1 <= i <= n:
        raise InputError(f"node {i} outside 1..{n}")
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def lambda0(n):
    check_rank(n)
    return AffineWeight((0,) * n, 1, 0)


def delta_weight(n):
    check_rank(n)
    return AffineWeight((0,) * n, 0, 1)


# ---------------------------------------------------------------------------
# Dynkin diagrams and Cartan matrices


def finite_edges(n):
    """Edges of the finite diagram: a chain 1..n-1 plus the fork edge (n-2, n)."""
    return tuple((i, i + 1) for i in range(1, n - 1)) + ((n - 2, n),)


def affine_edges(n):
    """Finite edges plus the affine attachment (0, 2)."""
    return ((0, 2),) + finite_edges(n)


class RankData(NamedTuple):
    """Cartan matrix of one of the three diagrams used by the library."""

    n: int
    kind: str  # "finiteD" | "affineD" | "finiteC"
    nodes: tuple
    entries: tuple  # tuple of rows, aligned with ``nodes``

    def entry(self, i, j):
        return self.entries[self.nodes.index(i)][self.nodes.index(j)]


@lru_cache(maxsize=None)
def rank_data(n, kind="finiteD"):
    check_rank(n)
    if kind == "finiteD" or kind == "affineD":
        nodes = tuple(range(1, n + 1)) if kind == "finiteD" else tuple(range(n + 1))
        edges = finite_edges(n) if kind == "finiteD" else affine_edges(n)
        adj = {i: set() for i in nodes}
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        rows = tuple(
            tuple(2 if i == j else (-1 if j in adj[i] else 0) for j in nodes)
            for i in nodes
        )
        return RankData(n, kind, nodes, rows)
    if kind == "finiteC":
        # standard C_{n-1} matrix: node n-1 carries the long root
        r = n - 1
        nodes = tuple(range(1, r + 1))
        rows = []
        for i in nodes:
            row = []
            for j in nodes:
                if i == j:
                    v = 2
                elif abs(i - j) == 1:
                    v = -2 if (i == r - 1 and j == r) else -1
                else:
                    v = 0
                row.append(v)
            rows.append(tuple(row))
        return RankData(n, kind, nodes, tuple(rows))
    raise InputError(f"unknown diagram kind {kind!r}")


def theta_coeffs(n):
    """Simple-root coefficients of the highest root."""
    check_rank(n)
    return (1,) + (2,) * (n - 3) + (1, 1)


def marks(n):
    """Affine marks (a_0, a_1, ..., a_n); node 0 carries mark 1."""
    return (1,) + theta_coeffs(n)


# ---------------------------------------------------------------------------
# Pairings and the invariant bilinear form


def pairing(i, x):
    """Integer pairing of the i-th simple coroot (i in 0..n) with ``x``.

    The node-0 coroot is the canonical central element minus the highest-root
    coroot, so its pairing is ``level`` minus the highest-root pairing of
    the finite part.  The delta component never contributes.
    """
    n = x.n
    if 1 <= i <= n:
        return x.finite[i - 1]
    if i == 0:
        f = x.finite
        return x.level - (f[0] + 2 * sum(f[1 : n - 2]) + f[n - 2] + f[n - 1])
    raise InputError(f"node {i} outside 0..{n}")


def eps2(n, fw):
    """Doubled orthogonal coordinates of a finite weight tuple.

    True orthogonal coordinates are half these integers; doubling keeps all
    arithmetic integral, including for spin weights.
    """
    s = fw[n - 2] + fw[n - 1]
    out = [0] * n
    out[n - 1] = fw[n - 1] - fw[n - 2]
    out[n - 2] = s
    acc = s
    for j in range(n - 3, -1, -1):
        acc += 2 * fw[j]
        out[j] = acc
    return tuple(out)


def fw_from_eps2(n, d):
    """Inverse of :func:`eps2`; raises if ``d`` is not on the weight lattice."""
    fw = []
    for j in range(n - 2):
        q, r = divmod(d[j] - d[j + 1], 2)
        if r:
            raise InputError(f"{d} is not a doubled weight-lattice point")
        fw.append(q)
    a, ra = divmod(d[n - 2] - d[n - 1], 2)
    b, rb = divmod(d[n - 2] + d[n - 1], 2)
    if ra or rb:
        raise InputError(f"{d} is not a doubled weight-lattice point")
    fw.extend([a, b])
    return tuple(fw)


def bilinear(x, y):
    """The invariant symmetric form, exact.

    Finite parts pair through the orthogonal coordinates, delta pairs with
    the level, and both delta and the level-one generator are isotropic.
    """
    n = x.n
    if y.n != n:
        raise InputError("rank mismatch in bilinear form")
    dot = sum(a * b for a, b in zip(eps2(n, x.finite), eps2(n, y.finite)))
    return Fraction(dot, 4) + x.level * y.delta + y.level * x.delta


# ---------------------------------------------------------------------------
# Roots


def root_unit(n, i):
    if not 1 <= i <= n:
        raise InputError(f"node {i} outside 1..{n}")
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def alpha_interval(n, p, q):
    """Connected-support root running from node p to node q.

    For q = n the chain detours through the fork: the summand at node n-1
    is replaced by node n.  The pair (p, q) = (n-1, n) is not a root.
    """
    check_rank(n)
    if not (1 <= p <= q <= n) or (p, q) == (n - 1, n):
        raise InputError(f"invalid interval ({p}, {q}) for rank {n}")
    if q <= n - 1:
        support = range(p, q + 1)
    else:
        support = list(range(p, n - 1)) + [n]
    c = [0] * n
    for i in support:
        c[i - 1] = 1
    return tuple(c)


@lru_cache(maxsize=None)
def positive_roots(n):
    """All positive roots: interval roots plus the doubled-middle family."""
    check_rank(n)
    roots = set()
    for p in range(1, n + 1):
        for q in range(p, n + 1):
            if (p, q) != (n - 1, n):
                roots.add(alpha_interval(n, p, q))
    for p in range(1, n):
        for q in range(p + 1, n):
            a = alpha_interval(n, p, n)
            b = alpha_interval(n, q, n - 1)
            roots.add(tuple(x + y for x, y in zip(a, b)))
    assert len(roots) == n * (n - 1)
    return frozenset(roots)


def root_to_fw(n, c):
    """Fundamental coordinates of a root-coordinate vector (Cartan matrix action)."""
    fw = [2 * v for v in c]
    for a, b in finite_edges(n):
        fw[a - 1] -= c[b - 1]
        fw[b - 1] -= c[a - 1]
    return tuple(fw)


def fw_to_root(n, fw):
    """Root coordinates of a root-lattice element given in fundamental coordinates."""
    d = eps2(n, fw)
    c = []
    acc = 0
    for k in range(n - 2):
        acc += d[k]
        q, r = divmod(acc, 2)
        if r:
            raise InputError(f"{fw} is not on the root lattice")
        c.append(q)
    acc += d[n - 2]
    qa, ra = divmod(acc - d[n - 1], 4)
    qb, rb = divmod(acc + d[n - 1], 4)
    if ra or rb:
        raise InputError(f"{fw} is not on the root lattice")
    c.extend([qa, qb])
    return tuple(c)


def support(coords):
    """Indices (1-based nodes) of strictly positive coordinates.

    Serves both dominant weights and positive roots; a negative coordinate
    means the input is neither and is rejected.
    """
    if any(v < 0 for v in coords):
        raise InputError(f"support undefined for {coords}: negative coordinate")
    return frozenset(i + 1 for i, v in enumerate(coords) if v > 0)


def family_nodes(n):
    """The three extreme nodes indexing affinization families."""
    check_rank(n)
    return (1, n - 1, n)


def branch_set(n, s):
    """Nodes cut off by removing the fork from the branch at s."""
    if s == 1:
        return frozenset(range(1, n - 2))
    if s == n - 1:
        return frozenset((n - 1,))
    if s == n:
        return frozenset((n,))
    raise InputError(f"family label must be one of {family_nodes(n)}, got {s}")


@lru_cache(maxsize=None)
def delta_plus_s(n, s):
    """Positive roots supported away from at least one branch other than s."""
    check_rank(n)
    others = [r for r in family_nodes(n) if r != s]
    if len(others) != 2:
        raise InputError(f"family label must be one of {family_nodes(n)}, got {s}")
    out = set()
    for root in positive_roots(n):
        supp = support(root)
        if any(not (supp & branch_set(n, r)) for r in others):
            out.add(root)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Dominance


def is_dominant_fw(fw):
    return all(v >= 0 for v in fw)


def check_dominant(n, fw):
    check_rank(n)
    if len(fw) != n:
        raise InputError(f"weight {fw} has length {len(fw)}, expected {n}")
    if not all(isinstance(v, int) for v in fw):
        raise InputError(f"weight {fw} has non-integer coordinates")
    if not is_dominant_fw(fw):
        raise InputError(f"weight {fw} is not dominant")


def in_root_cone(n, fw):
    """True when ``fw`` is a nonnegative integer combination of simple roots."""
    d = eps2(n, fw)
    acc = 0
    for k in range(n - 2):
        acc += d[k]
        if acc < 0 or acc % 2:
            return False
    acc += d[n - 2]
    return (
        acc >= abs(d[n - 1])
        and (acc - d[n - 1]) % 4 == 0
        and (acc + d[n - 1]) % 4 == 0
    )


def dominates(n, lam, mu):
    """Dominance order: lam - mu lies in the positive root cone."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    return in_root_cone(n, diff)
