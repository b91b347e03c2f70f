"""Closed-form Turán numbers and bounds for paths, path packings and forests.

Each function returns a :class:`FormulaResult` carrying the integer value and
whether ``n`` lies in the range where the value is proved.  Nothing refuses
to evaluate outside that range; callers decide what to do with the flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Union

from .graph import Graph, GraphError

__all__ = [
    "FormulaResult",
    "DomainError",
    "ex_p3_single",
    "erdos_gallai_bound",
    "ex_k_p3",
    "gorgol_lower_p3",
    "ex_k_pl",
    "longpath_threshold",
    "forest_threshold",
    "ex_equibipartite_forest",
    "badlemma_bound",
    "gorgol_generic_lower",
]


class DomainError(GraphError):
    """Parameters outside the hypotheses of a formula."""


@dataclass(frozen=True)
class FormulaResult:
    value: int
    exact_rational: Fraction
    in_proved_range: bool
    conditional_on_erdos_sos: bool = False
    citation: str = ""
    is_upper_bound: bool = False
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "exact_rational": str(self.exact_rational),
            "in_proved_range": self.in_proved_range,
            "conditional_on_erdos_sos": self.conditional_on_erdos_sos,
            "citation": self.citation,
            "is_upper_bound": self.is_upper_bound,
            "note": self.note,
        }


def _exact(value: int, **kw) -> FormulaResult:
    return FormulaResult(value, Fraction(value), **kw)


def _nonneg(**kw) -> None:
    for name, v in kw.items():
        if v < 0:
            raise DomainError(f"{name} must be nonnegative, got {v}")


def ex_p3_single(n: int) -> FormulaResult:
    """ex(n, P3) = floor(n/2); a P3-free graph is a matching."""
    _nonneg(n=n)
    return _exact(n // 2, in_proved_range=True, citation="ex(n,P3) lemma")


def erdos_gallai_bound(n: int, l: int) -> FormulaResult:
    """Upper bound (l-2)n/2 on ex(n, P_l); attained when (l-1) divides n."""
    _nonneg(n=n)
    if l < 2:
        raise DomainError(f"need l >= 2, got {l}")
    r = Fraction((l - 2) * n, 2)
    return FormulaResult(
        value=r.numerator // r.denominator,
        exact_rational=r,
        in_proved_range=True,
        citation="Erdos-Gallai",
        is_upper_bound=True,
        note="upper bound; tight when (l-1) divides n",
    )


def _kp3_value(n: int, k: int) -> int:
    return comb(k - 1, 2) + (n - k + 1) * (k - 1) + (n - k + 1) // 2


def ex_k_p3(n: int, k: int) -> FormulaResult:
    """ex(n, k*P3), proved for n >= 7k (and for every n when k = 1)."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    if n < 3 * k:
        raise DomainError(f"k*P3 needs n >= 3k = {3 * k}, got n={n}")
    proved = k == 1 or n >= 7 * k
    note = ""
    if not proved:
        note = "conjectured optimal for n >= 5k-1" if n >= 5 * k - 1 else "below 5k-1: Gorgol's first piece is larger"
    return _exact(_kp3_value(n, k), in_proved_range=proved, citation="k*P3 theorem", note=note)


def gorgol_lower_p3(n: int, k: int) -> FormulaResult:
    """Gorgol's piecewise lower bound on ex(n, k*P3)."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    if n < 3 * k:
        raise DomainError(f"k*P3 needs n >= 3k = {3 * k}, got n={n}")
    if n < 5 * k - 1:
        value = comb(3 * k - 1, 2) + (n - 3 * k + 1) // 2
        piece = "K_{3k-1} u M_{n-3k+1}"
    else:
        value = _kp3_value(n, k)
        piece = "K_{k-1} + M_{n-k+1}"
    # lower bound; exact for k in {2, 3} per Gorgol
    return _exact(value, in_proved_range=k in (2, 3), citation="Gorgol lower bound", note=piece)


def longpath_threshold(k: int, l: int) -> int:
    return 2 * l + 2 * k * l * ((l + 1) // 2 + 1) * comb(l, l // 2)


def ex_k_pl(n: int, k: int, l: int) -> FormulaResult:
    """ex(n, k*P_l) for k >= 2, l >= 4; proved above :func:`longpath_threshold`."""
    if k <= 1:
        raise DomainError("k*P_l formula needs k >= 2; use erdos_gallai_bound for a single path")
    if l <= 3:
        raise DomainError("k*P_l formula needs l >= 4; use ex_k_p3 for l = 3")
    _nonneg(n=n)
    t = k * (l // 2)
    c = l % 2
    value = comb(t - 1, 2) + (t - 1) * (n - t + 1) + c
    return _exact(value, in_proved_range=n >= longpath_threshold(k, l), citation="k*P_l theorem")


def forest_threshold(l: int) -> int:
    return 3 * l * l + 32 * l**5 * comb(2 * l, l)


def ex_equibipartite_forest(n: int, h: Graph) -> FormulaResult:
    """ex(n, H) for an equibipartite forest ``h`` with at least two trees.

    Conditional on the Erdős–Sós conjecture for the trees of ``h``.  The
    threshold is the displayed ``3l^2 + 32 l^5 C(2l, l)``, with lower-order
    terms unspecified, so ``in_proved_range`` is approximate.
    """
    from .treelab import validate_forest

    _nonneg(n=n)
    info = validate_forest(h)
    l, has_pm = info.l, info.has_pm
    if has_pm:
        value = comb(l - 1, 2) + (l - 1) * (n - l + 1)
    else:
        value = (l - 1) * (n - l + 1)
    return _exact(
        value,
        in_proved_range=n >= forest_threshold(l),
        conditional_on_erdos_sos=True,
        citation="equibipartite forest theorem",
        note="approximate threshold as displayed (lower-order terms omitted)",
    )


def badlemma_bound(n: int, m: int, r: int, t: int, ex_f2: int) -> Fraction:
    """Guaranteed codegree of some ``t``-subset of any F1 copy in an F1∪F2-free graph.

    ``r = |V(F1)|`` and ``ex_f2 = ex(n - r, F2)``.  May be nonpositive, in
    which case the guarantee is vacuous.
    """
    if not 1 <= t <= r <= n:
        raise DomainError(f"need 1 <= t <= r <= n, got t={t}, r={r}, n={n}")
    m_prime = m - ex_f2 - comb(r, 2)
    return Fraction(m_prime - (n - r) * (t - 1), r - t + 1) / comb(r, t)


ExFunction = Callable[[int], Union[int, FormulaResult]]


def gorgol_generic_lower(n: int, k: int, v: int, ex_g: ExFunction) -> tuple[int, int]:
    """Edge counts of the two k-copy-free constructions built from a single-copy extremal graph.

    Returns ``(ex_g(n-kv+1) + C(kv-1, 2), ex_g(n-k+1) + C(k-1, 2) + (k-1)(n-k+1))``
    for the union with ``K_{kv-1}`` and the join with ``K_{k-1}``.
    """
    if k < 1 or v < 1:
        raise DomainError(f"need k, v >= 1, got k={k}, v={v}")
    if n < k * v:
        raise DomainError(f"need n >= kv = {k * v}, got n={n}")

    def ev(x: int) -> int:
        r = ex_g(x)
        return r.value if isinstance(r, FormulaResult) else int(r)

    first = ev(n - k * v + 1) + comb(k * v - 1, 2)
    second = ev(n - k + 1) + comb(k - 1, 2) + (k - 1) * (n - k + 1)
    return first, second
