"""Highest-weight data and characters of regular minimal affinizations.

For a dominant weight and a family label s (one of the three extreme nodes)
this module builds the tensor-factor weights xi_j, their rotated dominant
forms Lambda_j, the nested Demazure character of the associated module, and
the classifying polynomial data.  The s = n-1 family is obtained from s = n
by the fork swap throughout.
"""

from dataclasses import dataclass
from functools import lru_cache

from .cartan import (
    AffineWeight,
    branch_set,
    check_dominant,
    check_rank,
    family_nodes,
    lambda0,
    support,
    varpi,
)
from .errors import InputError
from .polyring import CharElem
from . import weyl


def resolve_family(n, s):
    """Normalize a family label: 1, n-1, n, or the strings '1', 'n-1', 'n'."""
    check_rank(n)
    if isinstance(s, str):
        key = s.strip().lower()
        named = {"1": 1, "n-1": n - 1, "n": n}
        if key in named:
            return named[key]
        try:
            s = int(key)
        except ValueError:
            raise InputError(f"unknown family label {s!r}")
    if s in family_nodes(n):
        return s
    raise InputError(f"family label must be one of 1, {n - 1}, {n} (or 1, n-1, n), got {s}")


def is_regular(n, lam):
    """Whether the classification covers this dominant weight.

    True when some branch misses the support entirely, or when the fork
    coordinate is positive.  The remaining case (full spread support with a
    zero fork coordinate) is rejected by the character pipeline.
    """
    check_dominant(n, lam)
    supp = support(lam)
    if any(not (supp & branch_set(n, s)) for s in family_nodes(n)):
        return True
    return lam[n - 3] > 0


@dataclass(frozen=True)
class XiSequence:
    """Tensor-factor weights for one family, plus the bookkeeping that
    produced them: the spin split (m, m_prime) for s = 1, the cut index and
    leftover bar coordinate for s = n and its fork twin."""

    n: int
    s: int
    lam: tuple
    entries: tuple
    m: int = None
    m_prime: int = None
    cut: int = None
    lambda_bar: int = None


def _xi_family_one(n, lam):
    lm, lmp = max(lam[n - 2], lam[n - 1]), min(lam[n - 2], lam[n - 1])
    m = n - 1 if lam[n - 2] >= lam[n - 1] else n
    mp = n + (n - 1) - m
    entries = []
    for j in range(1, n - 1):
        entries.append(lam[j - 1] * AffineWeight(varpi(n, j), 1, 0))
    entries.append(
        lmp * AffineWeight(tuple(a + b for a, b in zip(varpi(n, n - 1), varpi(n, n))), 1, 0)
    )
    entries.append((lm - lmp) * AffineWeight(varpi(n, m), 1, 0))
    return tuple(entries), m, mp


def _cut_index(n, lam):
    """Largest start of a tail of chain coordinates still covering the
    n-1 coordinate; 0 when even the full chain falls short."""
    if sum(lam[: n - 3]) < lam[n - 2]:
        return 0
    return max(j for j in range(1, n - 2) if sum(lam[j - 1 : n - 3]) >= lam[n - 2])


def _xi_family_n(n, lam):
    cut = _cut_index(n, lam)
    lbar = lam[n - 2] - sum(lam[cut : n - 3])
    spin = AffineWeight(varpi(n, n - 1), 0, 0)
    entries = []
    for j in range(1, n + 1):
        if j == n - 1:
            xi = AffineWeight((0,) * n)
        elif j < cut or j in (n - 2, n):
            xi = lam[j - 1] * AffineWeight(varpi(n, j), 1, 0)
        elif j == cut:
            xi = lam[j - 1] * AffineWeight(varpi(n, j), 1, 0) + lbar * spin
        else:  # cut < j < n-2
            xi = lam[j - 1] * (AffineWeight(varpi(n, j), 1, 0) + spin)
            if cut == 0 and j == 1:
                xi = xi + lbar * (spin + lambda0(n))
        entries.append(xi)
    return tuple(entries), cut, lbar


def _swap_fork(n, lam):
    return lam[: n - 2] + (lam[n - 1], lam[n - 2])


def xi_sequence(n, lam, s):
    """The n tensor-factor weights for the given dominant weight and family."""
    lam = tuple(lam)
    check_dominant(n, lam)
    s = resolve_family(n, s)
    if s == 1:
        entries, m, mp = _xi_family_one(n, lam)
        return XiSequence(n, s, lam, entries, m=m, m_prime=mp)
    if s == n:
        entries, cut, lbar = _xi_family_n(n, lam)
        return XiSequence(n, s, lam, entries, cut=cut, lambda_bar=lbar)
    # fork twin: swap, build the s = n data, swap back
    inner = xi_sequence(n, _swap_fork(n, lam), n)
    tau = weyl.tau_fork(n).tau
    entries = tuple(weyl.tau_on_weight(tau, xi) for xi in inner.entries)
    return XiSequence(n, s, lam, entries, cut=inner.cut, lambda_bar=inner.lambda_bar)


@dataclass(frozen=True)
class LambdaSequence:
    n: int
    s: int
    lam: tuple
    entries: tuple


def lambda_sequence(n, lam, s):
    """Dominant affine weights feeding the nested character formula.

    Entry j < n is the j-th rotation preimage of xi_j; the last entry is
    xi_n itself.  Only the families s = 1 and s = n are rotated directly;
    the fork twin goes through the character-level twist instead.
    """
    lam = tuple(lam)
    check_dominant(n, lam)
    s = resolve_family(n, s)
    if s == n - 1:
        raise InputError("the fork twin family is handled by the character twist")
    xi = xi_sequence(n, lam, s)
    sigma_inv = weyl.inverse(weyl.sigma_word(n))
    entries = []
    rot = weyl.identity(n)
    for j in range(1, n):
        rot = weyl.compose(rot, sigma_inv)
        entries.append(weyl.act(rot, xi.entries[j - 1]))
    entries.append(xi.entries[n - 1])
    for e in entries:
        assert weyl.is_dominant(e, affine=True), f"non-dominant factor weight {e}"
    return LambdaSequence(n, s, lam, tuple(entries))


@lru_cache(maxsize=None)
def _assert_nesting_legal(n):
    """Length additivity of the composite word behind the nested formula."""
    w = weyl.longest_word(n)
    comp = w
    sig = weyl.sigma_word(n)
    for _ in range(n - 1):
        comp = weyl.compose(comp, sig)
    expected = n * (n - 1) + (n - 1) * (n - 1)
    got = weyl.length(comp)
    if got != expected:
        raise AssertionError(f"length additivity failed at rank {n}: {got} != {expected}")
    return True


def character(n, lam, s):
    """Finite character of the minimal affinization, exact.

    Nested evaluation, innermost factor first: rotate-and-expand each
    tensor-factor weight with the rotation operator, multiply in the next
    factor, finish with the longest-element operator, then kill level and
    delta.  The fork twin is the fork swap of the s = n character of the
    swapped weight.
    """
    lam = tuple(lam)
    check_dominant(n, lam)
    s = resolve_family(n, s)
    if not is_regular(n, lam):
        raise InputError(
            f"weight {lam} is outside the regular classification "
            "(full spread support with zero fork coordinate)"
        )
    if s == n - 1:
        ch = character(n, _swap_fork(n, lam), n)
        return ch.twist(weyl.tau_fork(n).tau)
    _assert_nesting_legal(n)
    lams = lambda_sequence(n, lam, s).entries
    sig = weyl.sigma_word(n)
    g = CharElem.monomial(lams[n - 2])
    g = g.demazure_word(sig)
    for j in range(n - 2, 0, -1):
        g = CharElem.monomial(lams[j - 1]) * g
        g = g.demazure_word(sig)
    g = CharElem.monomial(lams[n - 1]) * g
    g = g.demazure_word(weyl.longest_word(n))
    ch = g.specialize()
    assert ch.coeff(AffineWeight(lam)) == 1, "leading coefficient must be 1"
    return ch


@dataclass(frozen=True)
class DrinfeldSpec:
    """Classifying polynomial data: one factor per supported node, each a
    (node, degree, power-offset) triple relative to a symbolic base point."""

    n: int
    s: int
    lam: tuple
    epsilon: int
    factors: tuple

    @property
    def wt(self):
        out = [0] * self.n
        for i, m, _ in self.factors:
            out[i - 1] += m
        return tuple(out)


def drinfeld(n, lam, s, epsilon=1):
    """Offsets of the spectral parameters, instantiated exactly."""
    lam = tuple(lam)
    check_dominant(n, lam)
    s = resolve_family(n, s)
    if epsilon not in (1, -1):
        raise InputError(f"epsilon must be +1 or -1, got {epsilon}")
    chain = lam[0] + 2 * sum(lam[1 : n - 2])

    def offset(i):
        if i == 1:
            return 0
        if 2 <= i <= n - 2:
            e = lam[0] + 2 * sum(lam[1 : i - 1]) + lam[i - 1] + i - 1
        elif s == 1 or i == s:
            e = chain + lam[i - 1] + n - 2
        else:
            e = lam[0] + 2 * sum(lam[1 : n - 3]) - lam[i - 1] + n - 4
        return epsilon * e

    factors = tuple((i, lam[i - 1], offset(i)) for i in range(1, n + 1) if lam[i - 1] > 0)
    return DrinfeldSpec(n, s, lam, epsilon, factors)
