"""Matching energy by two independent routes, plus the quasi-order on counts.

Route 1 isolates the roots of the matching polynomial exactly: the zero root
is split off, y = x**2 halves the degree, and the positive roots of the
y-polynomial are isolated with Sturm sequences over exact integer
coefficients and refined by bisection on dyadic rationals.

Route 2 evaluates the Coulson-type integral

    ME(G) = (2/pi) * int_0^inf x**-2 ln( sum_k m(G,k) x**(2k) ) dx

numerically, after folding [1, inf) onto [0, 1] with x = 1/t.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import NamedTuple, Sequence

from scipy import integrate

from .matchpoly import MatchingPolynomial, MatchingVector, matching_polynomial

DEFAULT_ROOT_TOL = 1e-12
HIGH_PRECISION_TOL = 1e-18
_SQRT_BITS = 96


class QuadratureError(RuntimeError):
    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved error estimate {achieved:.3g})")
        self.achieved = achieved


@dataclass(frozen=True)
class EnergyValue:
    value: float
    error_bound: float

    def __post_init__(self) -> None:
        if not self.value >= -self.error_bound:
            raise ValueError(f"energy must be nonnegative, got {self.value}")
        if not (0 <= self.error_bound < math.inf):
            raise ValueError(f"error bound must be finite and nonnegative, got {self.error_bound}")


class Root(NamedTuple):
    value: float
    error_bound: float


class Relation(str, Enum):
    STRICTLY_GREATER = "StrictlyGreater"
    STRICTLY_LESS = "StrictlyLess"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class QuasiOrderResult:
    """Relation of a to b; witnesses are indices exhibiting the relation.

    StrictlyGreater/StrictlyLess carry the first index of strict difference,
    Incomparable carries (index with a > b, index with a < b), Equal carries none.
    """

    relation: Relation
    witnesses: tuple[int, ...] = ()

    def check(self, a: MatchingVector, b: MatchingVector) -> bool:
        """Re-verify the claimed relation from the two vectors."""
        return quasi_compare(a, b) == self


def quasi_compare(a: MatchingVector, b: MatchingVector) -> QuasiOrderResult:
    if a.n != b.n:
        raise ValueError(f"quasi-order compares graphs of equal order, got n={a.n} and n={b.n}")
    up = next((k for k, (x, y) in enumerate(zip(a.counts, b.counts)) if x > y), None)
    down = next((k for k, (x, y) in enumerate(zip(a.counts, b.counts)) if x < y), None)
    if up is None and down is None:
        return QuasiOrderResult(Relation.EQUAL)
    if down is None:
        return QuasiOrderResult(Relation.STRICTLY_GREATER, (up,))
    if up is None:
        return QuasiOrderResult(Relation.STRICTLY_LESS, (down,))
    return QuasiOrderResult(Relation.INCOMPARABLE, (up, down))


# -- exact polynomial helpers (ascending coefficient lists) -------------------

Poly = list[Fraction]


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p: Poly) -> Poly:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        _trim(a)
    return _trim(q), a


def _monic(p: Poly) -> Poly:
    lead = p[-1]
    return [c / lead for c in p]


def _gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _sub(a: Poly, b: Poly) -> Poly:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def squarefree_factors(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's decomposition f = lc * prod g_i**i with squarefree, coprime g_i."""
    f = _monic(f)
    df = _deriv(f)
    a = _gcd(f, df) if df else [Fraction(1)]
    if len(a) == 1:
        return [(f, 1)]
    b = _divmod(f, a)[0]
    c = _divmod(df, a)[0]
    d = _sub(c, _deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        a = _gcd(b, d) if d else _monic(b)
        if len(a) > 1:
            out.append((a, i))
        b = _divmod(b, a)[0]
        c = _divmod(d, a)[0]
        d = _sub(c, _deriv(b))
        i += 1
    return out


def _to_integer(p: Poly) -> tuple[int, ...]:
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return tuple(int(c * den) for c in p)


def sturm_chain(g: Poly) -> list[tuple[int, ...]]:
    chain = [g, _deriv(g)]
    while len(chain[-1]) > 1:
        rem = _divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return [_to_integer(p) for p in chain]


def _sign_at(p: Sequence[int], x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    d = len(p) - 1
    acc = 0
    for j in range(d, -1, -1):
        acc = acc * num + p[j] * den ** (d - j)
    return (acc > 0) - (acc < 0)


def _variations(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _sqrt_floor(y: Fraction) -> Fraction:
    scale = y.denominator << _SQRT_BITS
    return Fraction(isqrt(y.numerator * y.denominator << (2 * _SQRT_BITS)), scale)


def _sqrt_ceil(y: Fraction) -> Fraction:
    scale = y.denominator << _SQRT_BITS
    radicand = y.numerator * y.denominator << (2 * _SQRT_BITS)
    r = isqrt(radicand)
    return Fraction(r if r * r == radicand else r + 1, scale)


class _RootBracket(NamedTuple):
    x_lo: Fraction  # rigorous lower bound on sqrt(y-root)
    x_hi: Fraction
    multiplicity: int


def _isolate_positive(g: Poly, tol: float) -> list[tuple[Fraction, Fraction]]:
    """Brackets [lo, hi] around each positive root of squarefree g, tight in sqrt-space."""
    chain = sturm_chain(g)
    p = chain[0]
    bound = 1 + max(abs(c / g[-1]) for c in g[:-1]) if len(g) > 1 else Fraction(1)
    hi = Fraction(1)
    while hi < bound:
        hi *= 2
    lo = Fraction(0)
    pending = [(lo, hi, _variations(chain, lo), _variations(chain, hi))]
    isolated = []
    while pending:
        a, b, va, vb = pending.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            isolated.append((a, b))
            continue
        mid = (a + b) / 2
        vm = _variations(chain, mid)
        pending.append((a, mid, va, vm))
        pending.append((mid, b, vm, vb))

    brackets = []
    for a, b in isolated:
        s_hi = _sign_at(p, b)
        if s_hi == 0:
            brackets.append((b, b))
            continue
        while True:
            width = float(b - a) / (math.sqrt(float(a)) + math.sqrt(float(b)))
            if width <= tol:
                break
            mid = (a + b) / 2
            s_mid = _sign_at(p, mid)
            if s_mid == 0:
                a = b = mid
                break
            if s_mid == s_hi:
                b = mid
            else:
                a = mid
        brackets.append((a, b))
    return sorted(brackets)


def _check_structure(poly: MatchingPolynomial) -> None:
    c = poly.coeffs
    n = poly.n
    if len(c) != n + 1 or c[n] != 1:
        raise ValueError("matching polynomial must be monic of degree n")
    for j in range(n + 1):
        offset = n - j
        if offset % 2 and c[j] != 0:
            raise ValueError(f"coefficient of x^{j} must vanish (odd offset from degree {n})")
        if offset % 2 == 0 and (-1) ** (offset // 2) * c[j] < 0:
            raise ValueError(f"coefficient of x^{j} breaks the alternating sign pattern")


@lru_cache(maxsize=65536)
def _positive_brackets(n: int, coeffs: tuple[int, ...], tol: float) -> tuple[int, tuple[_RootBracket, ...]]:
    # m_k = |coefficient of x^(n-2k)|
    counts = [abs(coeffs[n - 2 * k]) for k in range(n // 2 + 1)]
    top = max(k for k, m in enumerate(counts) if m)
    zero_mult = n - 2 * top
    if top == 0:
        return zero_mult, ()
    # q(y) = sum_k (-1)^k m_k y^(top-k), ascending in y
    q = [Fraction((-1) ** k * counts[k]) for k in range(top, -1, -1)]
    out = []
    for factor, mult in squarefree_factors(q):
        for a, b in _isolate_positive(factor, tol):
            out.append(_RootBracket(_sqrt_floor(a), _sqrt_ceil(b), mult))
    if sum(r.multiplicity for r in out) != top:
        raise ArithmeticError("root isolation did not account for every root of the y-polynomial")
    return zero_mult, tuple(sorted(out))


def matching_roots(poly: MatchingPolynomial, tol: float = DEFAULT_ROOT_TOL) -> list[Root]:
    """All n roots with multiplicity, ascending, each with an absolute error bound."""
    _check_structure(poly)
    zero_mult, brackets = _positive_brackets(poly.n, poly.coeffs, tol)
    roots = [Root(0.0, 0.0)] * zero_mult
    for br in brackets:
        mid = (br.x_lo + br.x_hi) / 2
        val = float(mid)
        err = float((br.x_hi - br.x_lo) / 2) + abs(val) * 2**-52
        roots.extend([Root(val, err), Root(-val, err)] * br.multiplicity)
    return sorted(roots)


def energy_interval(v: MatchingVector, tol: float = DEFAULT_ROOT_TOL) -> tuple[Fraction, Fraction]:
    """Exact rational bounds lo <= ME(G) <= hi."""
    poly = matching_polynomial(v)
    _, brackets = _positive_brackets(poly.n, poly.coeffs, tol)
    lo = sum((2 * br.multiplicity * br.x_lo for br in brackets), Fraction(0))
    hi = sum((2 * br.multiplicity * br.x_hi for br in brackets), Fraction(0))
    return lo, hi


def matching_energy(v: MatchingVector, tol: float = DEFAULT_ROOT_TOL) -> EnergyValue:
    """Sum of |roots| of mu(G, x); the bound covers bisection width and float rounding."""
    lo, hi = energy_interval(v, tol)
    value = float((lo + hi) / 2)
    return EnergyValue(value, float((hi - lo) / 2) + value * 2**-52)


def matching_energy_integral(v: MatchingVector, tol: float = 1e-6) -> EnergyValue:
    top = v.max_k
    if top == 0:
        return EnergyValue(0.0, 0.0)
    m = [float(c) for c in v.counts[: top + 1]]

    def inner(x: float) -> float:
        # x**-2 ln(1 + sum_{k>=1} m_k x^(2k)) on [0, 1]
        if x == 0.0:
            return m[1]
        x2 = x * x
        tail = 0.0
        for c in reversed(m[1:]):
            tail = (tail + c) * x2
        return math.log1p(tail) / x2

    def outer(t: float) -> float:
        # ln(sum_k m_k t^(2(top-k))) on [0, 1]; the -2*top*ln(t) part integrates to 2*top
        t2 = t * t
        acc = 0.0
        for c in m:
            acc = acc * t2 + c
        return math.log(acc)

    total = 2.0 * top
    err = 0.0
    for fn in (inner, outer):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            res = integrate.quad(fn, 0.0, 1.0, epsabs=1e-11, epsrel=1e-12, limit=200, full_output=1)
        val, abserr = res[0], res[1]
        if len(res) > 3 or abserr > tol * math.pi / 4:
            raise QuadratureError("quadrature for the energy integral did not converge", abserr)
        total += val
        err += abserr
    return EnergyValue(2.0 / math.pi * total, 2.0 / math.pi * err)
