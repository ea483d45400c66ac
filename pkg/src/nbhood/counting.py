"""Exact counting formulas and upper bounds for condensed neighborhoods.

Unary-word counts admit closed forms built from an extended binomial
coefficient. Two upper bounds on the condensed-neighborhood size of an
arbitrary word are computed exactly: a sum over alignment profiles
(number of substitution and deletion columns) and a closed-form bound
(2s-1)^d * w^d / d!. A lemma checker replays, in exact rational
arithmetic, the chain of identities and inequalities that squeezes the
profile bound under the closed form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .core import RangeError

PANEL_PROFILE = "a"
PANEL_CLOSED_FORM = "b"

TABLE_LENGTHS = (4, 6, 8, 10)


def binom_ext(n: int, k: int) -> int:
    """Binomial coefficient extended so choosing 0 items always counts 1.

    Needed because the unary formulas produce terms like C(-1, 0) at the
    boundary, whose value is forced to 1 by the enumeration they count.
    """
    if k == 0:
        return 1
    if k < 0 or n < k:
        return 0
    return comb(n, k)


def _require_unary_range(w: int, d: int, s: int) -> None:
    if s < 1:
        raise RangeError(f"alphabet size must be at least 1, got {s}")
    if d < 0:
        raise RangeError(f"distance must be nonnegative, got {d}")
    if d > w:
        raise RangeError(f"distance {d} exceeds word length {w}")


def unary_condensed_count(w: int, d: int, s: int) -> int:
    """Size of the condensed d-neighborhood of a length-w unary word.

    Over an alphabet of size s; equals C(w, d) when s = 2.
    """
    _require_unary_range(w, d, s)
    return sum(
        binom_ext(m - 1, d + m - w) * (s - 1) ** (d + m - w)
        for m in range(w - d, w + 1)
    )


def unary_super_condensed_count(w: int, d: int, s: int) -> int:
    """Size of the super-condensed d-neighborhood of a length-w unary word.

    Over an alphabet of size s; equals C(w-1, d) when s = 2.
    """
    _require_unary_range(w, d, s)
    return sum(
        binom_ext(m - 2, d + m - w) * (s - 1) ** (d + m - w)
        for m in range(w - d, w + 1)
    )


def alignment_profile_bound(w: int, d: int, s: int) -> int:
    """Upper bound on any condensed d-neighborhood size over words of length w.

    Sums, over the number i of substitution columns and j of deletion
    columns in an optimal alignment, the count of words compatible with
    that profile. Defined for 0 <= d < w.
    """
    if s < 1:
        raise RangeError(f"alphabet size must be at least 1, got {s}")
    if not 0 <= d < w:
        raise RangeError(f"need 0 <= distance < length, got d={d}, w={w}")
    total = 0
    for i in range(d + 1):
        inner = sum(
            binom_ext(w - i - 1, j) * binom_ext(w + d - 2 * i - 2 * j - 1, d - i - j)
            for j in range(d - i + 1)
        )
        total += binom_ext(w, i) * (s - 1) ** (d - i) * inner
    return total


def closed_form_bound_exact(w: int, d: int, s: int) -> Fraction:
    """The bound (2s-1)^d * w^d / d! as an exact rational."""
    if s < 1:
        raise RangeError(f"alphabet size must be at least 1, got {s}")
    if not 0 <= d <= w:
        raise RangeError(f"need 0 <= distance <= length, got d={d}, w={w}")
    return Fraction((2 * s - 1) ** d * w**d, factorial(d))


@dataclass(frozen=True)
class BoundReport:
    """Both upper bounds at one parameter point.

    ``profile_bound`` is None at d = w, where the profile bound is not
    defined (its derivation needs at least one match column).
    """

    word_length: int
    distance: int
    alphabet_size: int
    profile_bound: int | None
    closed_form_exact: Fraction
    closed_form_floor: int

    def __post_init__(self) -> None:
        if self.closed_form_floor != self.closed_form_exact.__floor__():
            raise ValueError("floor field disagrees with exact value")


def bound_report(w: int, d: int, s: int) -> BoundReport:
    """Evaluate both bounds exactly; valid for 0 <= d <= w."""
    exact = closed_form_bound_exact(w, d, s)
    profile = alignment_profile_bound(w, d, s) if d < w else None
    return BoundReport(
        word_length=w,
        distance=d,
        alphabet_size=s,
        profile_bound=profile,
        closed_form_exact=exact,
        closed_form_floor=exact.__floor__(),
    )


def bound_table_rows() -> tuple[tuple[str, int, int, int], ...]:
    """Reference table of both bounds: panels "a" (profile) and "b" (closed form).

    Word lengths 4, 6, 8, 10 with 1 <= d <= w-1 at alphabet size 2;
    rows are (panel, w, d, value).
    """
    rows: list[tuple[str, int, int, int]] = []
    for w in TABLE_LENGTHS:
        for d in range(1, w):
            rows.append((PANEL_PROFILE, w, d, alignment_profile_bound(w, d, 2)))
    for w in TABLE_LENGTHS:
        for d in range(1, w):
            rows.append(
                (PANEL_CLOSED_FORM, w, d, closed_form_bound_exact(w, d, 2).__floor__())
            )
    return tuple(rows)


@dataclass(frozen=True)
class LemmaCheck:
    """Outcome of one lemma over its auxiliary-index range."""

    name: str
    tested: tuple
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class LemmaCheckReport:
    """Exact-arithmetic verdicts for the bound-proof lemma chain at (w, d, s)."""

    word_length: int
    distance: int
    alphabet_size: int
    checks: tuple[LemmaCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> tuple[LemmaCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _expansion_identity(w: int, d: int, s: int) -> LemmaCheck:
    # (2s-1)^d w^d / d! split by binomial expansion of (1 + 2(s-1))^d
    lhs = sum(
        Fraction((s - 1) ** (d - x) * 2 ** (d - x) * w**d, factorial(x) * factorial(d - x))
        for x in range(d + 1)
    )
    rhs = closed_form_bound_exact(w, d, s)
    ok = lhs == rhs
    return LemmaCheck("expansion_identity", ((w, d, s),), () if ok else ((w, d, s),))


def _shifted_square_bound(w: int, d: int) -> LemmaCheck:
    """(w - t + 1)^2 <= (w + d/2 + 1/2)(w - d/2 + 3/2) for d/4 <= t <= d-1.

    Checked at every integer t in range and at the quarter point t = d/4
    itself, which the downstream argument also uses.
    """
    rhs = (Fraction(w) + Fraction(d, 2) + Fraction(1, 2)) * (
        Fraction(w) - Fraction(d, 2) + Fraction(3, 2)
    )
    ts: list[Fraction] = [Fraction(d, 4)]
    ts.extend(
        Fraction(t) for t in range((d + 3) // 4, d) if Fraction(t) != Fraction(d, 4)
    )
    failures = tuple(t for t in ts if (w - t + 1) ** 2 > rhs)
    return LemmaCheck("shifted_square_bound", tuple(ts), failures)


def _shifted_quartic_bound(w: int, d: int) -> LemmaCheck:
    """(w+2t)(w+2t-1)(w-t+1)^2 <= (w + d/2 + 1/2)^3 (w - d/2 + 3/2) for 0 <= t <= d/4."""
    rhs = (Fraction(w) + Fraction(d, 2) + Fraction(1, 2)) ** 3 * (
        Fraction(w) - Fraction(d, 2) + Fraction(3, 2)
    )
    ts = tuple(range(d // 4 + 1))
    failures = tuple(
        t for t in ts if Fraction((w + 2 * t) * (w + 2 * t - 1)) * (w - t + 1) ** 2 > rhs
    )
    return LemmaCheck("shifted_quartic_bound", ts, failures)


def _binomial_pair_bound(w: int, d: int) -> LemmaCheck:
    """C(w,j) C(w+d-2j, d-j) <= (w+d/2+1/2)^(d-j) (w-d/2+3/2)^j / (j!(d-j)!)."""
    a = Fraction(w) + Fraction(d, 2) + Fraction(1, 2)
    b = Fraction(w) - Fraction(d, 2) + Fraction(3, 2)
    js = tuple(range(d + 1))
    failures = tuple(
        j
        for j in js
        if binom_ext(w, j) * binom_ext(w + d - 2 * j, d - j)
        > a ** (d - j) * b**j / (factorial(j) * factorial(d - j))
    )
    return LemmaCheck("binomial_pair_bound", js, failures)


def _gap_layout_bound(w: int, d: int) -> LemmaCheck:
    """Per-profile layout count against 2^(d-x) w^d / (x!(d-x)!), needs d < w."""
    if d >= w:
        return LemmaCheck("gap_layout_bound", (), ())
    xs = tuple(range(d + 1))
    failures = []
    for x in xs:
        lhs = binom_ext(w, x) * sum(
            binom_ext(w - x - 1, j) * binom_ext(w + d - x - 2 * j - 1, d - x - j)
            for j in range(d - x + 1)
        )
        rhs = Fraction(2 ** (d - x) * w**d, factorial(x) * factorial(d - x))
        if lhs > rhs:
            failures.append(x)
    return LemmaCheck("gap_layout_bound", xs, tuple(failures))


def _central_sum_bound(w: int, d: int) -> LemmaCheck:
    """Sum_j C(w,j) C(w+d-2j, d-j) <= 2^d (w+1)^d / d!."""
    lhs = sum(binom_ext(w, j) * binom_ext(w + d - 2 * j, d - j) for j in range(d + 1))
    rhs = Fraction(2**d * (w + 1) ** d, factorial(d))
    ok = lhs <= rhs
    return LemmaCheck("central_sum_bound", ((w, d),), () if ok else ((w, d),))


def _chain_dominance(w: int, d: int, s: int) -> LemmaCheck:
    """profile bound <= relaxed profile sum <= closed form, needs d < w.

    The relaxed sum widens the second inner binomial of the profile bound
    exactly as the proof chain does before the per-profile layout bound
    takes over.
    """
    if d >= w:
        return LemmaCheck("chain_dominance", (), ())
    relaxed = sum(
        binom_ext(w, x)
        * (s - 1) ** (d - x)
        * sum(
            binom_ext(w - x - 1, j) * binom_ext(w + d - x - 2 * j - 1, d - x - j)
            for j in range(d - x + 1)
        )
        for x in range(d + 1)
    )
    profile = alignment_profile_bound(w, d, s)
    closed = closed_form_bound_exact(w, d, s)
    ok = profile <= relaxed <= closed
    return LemmaCheck("chain_dominance", ((w, d, s),), () if ok else ((w, d, s),))


def check_bound_lemmas(w: int, d: int, s: int) -> LemmaCheckReport:
    """Replay the bound-proof lemma chain exactly at one parameter point.

    Requires 1 <= d <= w and s >= 2. Inequalities over auxiliary indices
    are checked at every in-range index; checks whose hypotheses exclude
    the point (those needing d < w) report an empty tested range.
    """
    if s < 2:
        raise RangeError(f"alphabet size must be at least 2, got {s}")
    if not 1 <= d <= w:
        raise RangeError(f"need 1 <= distance <= length, got d={d}, w={w}")
    checks = (
        _expansion_identity(w, d, s),
        _shifted_square_bound(w, d),
        _shifted_quartic_bound(w, d),
        _binomial_pair_bound(w, d),
        _gap_layout_bound(w, d),
        _central_sum_bound(w, d),
        _chain_dominance(w, d, s),
    )
    return LemmaCheckReport(word_length=w, distance=d, alphabet_size=s, checks=checks)
