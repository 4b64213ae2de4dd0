"""Extended affine Weyl group of the doubled-fork diagram.

Group elements are carried as words: an automorphism prefix (a permutation
of the affine nodes generated by the two diagram swaps) followed by a tuple
of reflection indices.  The represented element is the prefix composed with
the reflections read left to right, rightmost applied first.  Reduction uses
the descent algorithm on real roots; equality of group elements is decided
by comparing actions on a basis.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import (
    AffineWeight,
    check_rank,
    fw_to_root,
    marks,
    pairing,
    positive_roots,
    root_to_fw,
    root_unit,
    theta_coeffs,
    varpi,
)
from .errors import InputError


@dataclass(frozen=True)
class ExtendedWeylWord:
    """Automorphism prefix plus reflection word over the affine node set."""

    n: int
    tau: tuple  # permutation of 0..n, tau[i] = image of node i
    word: tuple

    def __post_init__(self):
        check_rank(self.n)
        if sorted(self.tau) != list(range(self.n + 1)):
            raise InputError(f"tau {self.tau} is not a permutation of 0..{self.n}")
        if any(not 0 <= i <= self.n for i in self.word):
            raise InputError(f"word {self.word} contains nodes outside 0..{self.n}")


def _identity_tau(n):
    return tuple(range(n + 1))


def identity(n):
    check_rank(n)
    return ExtendedWeylWord(n, _identity_tau(n), ())


def simple(n, i):
    check_rank(n)
    if not 0 <= i <= n:
        raise InputError(f"node {i} outside 0..{n}")
    return ExtendedWeylWord(n, _identity_tau(n), (i,))


def from_word(n, word, tau=None):
    return ExtendedWeylWord(n, tuple(tau) if tau else _identity_tau(n), tuple(word))


def _swap_tau(n, a, b):
    t = list(range(n + 1))
    t[a], t[b] = t[b], t[a]
    return tuple(t)


def tau_01(n):
    """Diagram swap of nodes 0 and 1."""
    check_rank(n)
    return ExtendedWeylWord(n, _swap_tau(n, 0, 1), ())


def tau_fork(n):
    """Diagram swap of the two fork nodes n-1 and n."""
    check_rank(n)
    return ExtendedWeylWord(n, _swap_tau(n, n - 1, n), ())


ALLOWED_TAUS = {}


def _allowed_taus(n):
    """The four automorphism prefixes generated by the two swaps."""
    if n not in ALLOWED_TAUS:
        e = _identity_tau(n)
        a = _swap_tau(n, 0, 1)
        b = _swap_tau(n, n - 1, n)
        ab = tuple(a[b[i]] for i in range(n + 1))
        ALLOWED_TAUS[n] = {e, a, b, ab}
    return ALLOWED_TAUS[n]


def compose(u, v):
    """Product u*v, rightmost factor applied first."""
    if u.n != v.n:
        raise InputError("rank mismatch in composition")
    n = u.n
    vinv = [0] * (n + 1)
    for i, j in enumerate(v.tau):
        vinv[j] = i
    word = tuple(vinv[i] for i in u.word) + v.word
    tau = tuple(u.tau[v.tau[i]] for i in range(n + 1))
    return ExtendedWeylWord(n, tau, word)


def inverse(u):
    n = u.n
    tinv = [0] * (n + 1)
    for i, j in enumerate(u.tau):
        tinv[j] = i
    word = tuple(u.tau[i] for i in reversed(u.word))
    return ExtendedWeylWord(n, tuple(tinv), word)


def power(u, k):
    if k < 0:
        return power(inverse(u), -k)
    out = identity(u.n)
    for _ in range(k):
        out = compose(out, u)
    return out


# ---------------------------------------------------------------------------
# Action on affine weights


@lru_cache(maxsize=None)
def _alpha_wt(n, i):
    """Simple root i as an element of the affine weight space."""
    if i == 0:
        theta = root_to_fw(n, theta_coeffs(n))
        return AffineWeight(tuple(-v for v in theta), 0, 1)
    return AffineWeight(root_to_fw(n, root_unit(n, i)), 0, 0)


@lru_cache(maxsize=None)
def _affine_fundamental(n, i):
    """Level-a_i weight attached to node i, delta-free."""
    if i == 0:
        return AffineWeight((0,) * n, 1, 0)
    return AffineWeight(varpi(n, i), marks(n)[i], 0)


def reflect(i, x):
    """Simple reflection at node i applied to an affine weight."""
    return x - pairing(i, x) * _alpha_wt(x.n, i)


@lru_cache(maxsize=None)
def _tau_fundamental_images(n, tau):
    """Exact images of the delta-free fundamental representatives.

    A diagram automorphism sends the node-i representative to the node
    tau(i) representative plus a rational delta correction; the correction
    is forced by norm preservation, since delta pairs with the level.
    """
    from .cartan import bilinear

    mk = marks(n)
    out = []
    for i in range(n + 1):
        li = _affine_fundamental(n, i)
        lt = _affine_fundamental(n, tau[i])
        d = (bilinear(li, li) - bilinear(lt, lt)) / (2 * mk[tau[i]])
        out.append(AffineWeight(lt.finite, lt.level, d))
    return tuple(out)


def tau_on_weight(tau, x):
    """Relabel an affine weight by a diagram automorphism.

    Expands the weight over the delta-free fundamental representatives and
    delta, then maps each representative to its exact image; delta itself
    is fixed.
    """
    n = x.n
    if tau == _identity_tau(n):
        return x
    images = _tau_fundamental_images(n, tuple(tau))
    fin = [0] * n
    lvl = 0
    dlt = x.delta
    for i in range(n + 1):
        c = pairing(i, x)
        if c:
            img = images[i]
            lvl += c * img.level
            dlt += c * img.delta
            for j, v in enumerate(img.finite):
                if v:
                    fin[j] += c * v
    return AffineWeight(tuple(fin), lvl, dlt)


def act(w, x):
    """Apply an extended word to an affine weight, word first, prefix last."""
    if w.n != x.n:
        raise InputError("rank mismatch in action")
    for i in reversed(w.word):
        x = reflect(i, x)
    return tau_on_weight(w.tau, x)


# ---------------------------------------------------------------------------
# Action on real roots

# A real root is a pair (beta, k): finite root coordinates plus a delta shift.


def root_weight(n, beta, k=0):
    """Embed a real root into the affine weight space."""
    return AffineWeight(root_to_fw(n, beta), 0, Fraction(k))


def _root_from_weight(x):
    n = x.n
    if x.level != 0 or x.delta.denominator != 1:
        raise InputError(f"{x} is not a real root")
    return fw_to_root(n, x.finite), int(x.delta)


def affine_simple_root(n, i):
    if i == 0:
        return tuple(-v for v in theta_coeffs(n)), 1
    return root_unit(n, i), 0


def act_root(w, root):
    """Image of a real root under an extended word."""
    beta, k = root
    if all(v == 0 for v in beta):
        raise InputError("imaginary roots have no well-defined coordinates here")
    return _root_from_weight(act(w, root_weight(w.n, beta, k)))


def is_positive_root(n, root):
    """Positivity of a real root: positive delta shift, or none and beta positive."""
    beta, k = root
    if k != 0:
        return k > 0
    return beta in positive_roots(n)


# ---------------------------------------------------------------------------
# Reduction, length, distinguished elements


def reduce_word(w):
    """Canonical reduced word for the same group element.

    Descent algorithm: while some simple root is sent to a negative real
    root, strip the corresponding reflection on the right.  Ties break to
    the smallest node, making the output deterministic.
    """
    n = w.n
    g = w
    collected = []
    while True:
        found = None
        for i in range(n + 1):
            if not is_positive_root(n, act_root(g, affine_simple_root(n, i))):
                found = i
                break
        if found is None:
            break
        g = compose(g, simple(n, found))
        collected.append(found)
    if g.tau not in _allowed_taus(n):
        raise InputError(f"automorphism prefix {g.tau} outside the two-swap subgroup")
    return ExtendedWeylWord(n, g.tau, tuple(reversed(collected)))


@lru_cache(maxsize=None)
def _reduce_cached(w):
    return reduce_word(w)


def length(w):
    """Length of the underlying affine Weyl group element; prefixes are free."""
    return len(_reduce_cached(w).word)


def is_reduced(w):
    return length(w) == len(w.word)


@lru_cache(maxsize=None)
def longest_word(n):
    """A reduced word for the longest finite Weyl group element.

    Built by walking the strictly dominant weight rho into the antidominant
    chamber, always reflecting at the smallest ascending node.
    """
    check_rank(n)
    x = AffineWeight((1,) * n, 0, 0)
    rev = []
    while True:
        i = next((i for i in range(1, n + 1) if x.finite[i - 1] > 0), None)
        if i is None:
            break
        x = reflect(i, x)
        rev.append(i)
    w = ExtendedWeylWord(n, _identity_tau(n), tuple(reversed(rev)))
    assert len(w.word) == n * (n - 1)
    return w


@lru_cache(maxsize=None)
def sigma_word(n):
    """The rotation element: both diagram swaps, then the chain of
    reflections from node 1 out to node n-1.  Already reduced."""
    check_rank(n)
    tau = compose(tau_01(n), tau_fork(n)).tau
    return ExtendedWeylWord(n, tau, tuple(range(1, n)))


def is_dominant(x, affine=True):
    """Nonnegative coroot pairings over the affine (or finite) node set."""
    lo = 0 if affine else 1
    return all(pairing(i, x) >= 0 for i in range(lo, x.n + 1))


@lru_cache(maxsize=None)
def _basis(n):
    basis = [AffineWeight(varpi(n, i), 0, 0) for i in range(1, n + 1)]
    basis.append(AffineWeight((0,) * n, 1, 0))
    basis.append(AffineWeight((0,) * n, 0, 1))
    return tuple(basis)


def element_images(w):
    """Action on a basis of the affine weight space; canonical fingerprint."""
    return tuple(act(w, b) for b in _basis(w.n))


def same_element(u, v):
    return u.n == v.n and element_images(u) == element_images(v)
