"""Neighborhood enumeration: pruned trie traversal plus a literal oracle.

Three nested variants of the distance-d neighborhood of a word W:

* full: every word within Levenshtein distance d of W
* condensed: members with no proper prefix in the full neighborhood
  (its prefix-minimal elements)
* super-condensed: members with no proper contiguous subword in the full
  neighborhood

The production enumerators walk the word trie depth first, carrying a
saturated DP row per node; the brute-force oracle applies the defining
set differences over all candidate words and exists so the two routes
can be compared in tests.
"""
from __future__ import annotations

import itertools
import os
from collections.abc import Iterator

from .core import (
    Alphabet,
    BudgetError,
    KIND_CONDENSED,
    KIND_FULL,
    KIND_SUPER_CONDENSED,
    NEIGHBORHOOD_KINDS,
    NeighborhoodResult,
    RangeError,
    ValidationError,
    Word,
    make_word,
    require_same_alphabet,
    require_word,
)
from .distance import _dist

DEFAULT_CANDIDATE_BUDGET = 10_000_000
BUDGET_ENV_VAR = "NBHOOD_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Candidate-word budget: explicit argument, else env override, else default."""
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_CANDIDATE_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise BudgetError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise BudgetError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


def _require_distance(d: int) -> None:
    if d < 0:
        raise RangeError(f"distance must be nonnegative, got {d}")


def in_neighborhood(u: Word, w: Word, d: int) -> bool:
    """True iff u lies within Levenshtein distance d of w."""
    _require_distance(d)
    require_same_alphabet(u, w)
    return _dist(u.text, w.text, limit=d) <= d


def _child_row(row: list[int], symbol: str, w: str, cap: int) -> list[int]:
    # saturated at cap = d + 1; values above d never influence a <= d test
    out = [min(row[0] + 1, cap)]
    for j in range(1, len(w) + 1):
        out.append(
            min(
                row[j] + 1,
                out[j - 1] + 1,
                row[j - 1] + (symbol != w[j - 1]),
                cap,
            )
        )
    return out


def _iter_members(w: Word, d: int, alphabet: Alphabet, condensed: bool) -> Iterator[str]:
    """Trie DFS in symbol-rank order, so yields appear in canonical word order.

    With ``condensed`` set, a subtree is pruned as soon as its root word is
    a member: every extension then has a member as proper prefix, which is
    exactly the condensed set difference.
    """
    wtext = w.text
    n = len(wtext)
    cap = d + 1
    max_depth = n + d

    def visit(prefix: str, row: list[int]) -> Iterator[str]:
        if row[n] <= d:
            yield prefix
            if condensed:
                return
        # extensions of prefix can only reach W if some row cell is still <= d
        if len(prefix) < max_depth and min(row) <= d:
            for symbol in alphabet.symbols:
                yield from visit(prefix + symbol, _child_row(row, symbol, wtext, cap))

    yield from visit("", [min(j, cap) for j in range(n + 1)])


def _has_proper_subword_in_neighborhood(u: str, w: str, d: int) -> bool:
    """Does any proper contiguous subword of u lie within distance d of w?

    One thresholded DP per start position, extended a character at a time;
    a start is abandoned once every row cell exceeds d, since longer
    subwords from that start can only be farther from w.
    """
    n = len(w)
    cap = d + 1
    for i in range(len(u) + 1):
        row = [min(j, cap) for j in range(n + 1)]
        for j in range(i, len(u) + 1):
            if (i, j) != (0, len(u)) and row[n] <= d:
                return True
            if j == len(u) or min(row) > d:
                break
            row = _child_row(row, u[j], w, cap)
    return False


def _result(
    w: Word, d: int, kind: str, texts: list[str], alphabet: Alphabet
) -> NeighborhoodResult:
    words = tuple(make_word(t, alphabet) for t in texts)
    return NeighborhoodResult(
        query=w, distance=d, kind=kind, count=len(words), words=words
    )


def enumerate_full(w: Word, d: int, alphabet: Alphabet) -> NeighborhoodResult:
    """All words within distance d of w, canonically sorted."""
    _require_distance(d)
    w = make_word(require_word(w).text, alphabet)
    return _result(w, d, KIND_FULL, list(_iter_members(w, d, alphabet, False)), alphabet)


def enumerate_condensed(w: Word, d: int, alphabet: Alphabet) -> NeighborhoodResult:
    """The prefix-minimal members of the full neighborhood (a prefix-free set)."""
    _require_distance(d)
    w = make_word(require_word(w).text, alphabet)
    return _result(w, d, KIND_CONDENSED, list(_iter_members(w, d, alphabet, True)), alphabet)


def enumerate_super_condensed(w: Word, d: int, alphabet: Alphabet) -> NeighborhoodResult:
    """Members of the full neighborhood with no proper contiguous subword in it.

    Filters the condensed set: a proper prefix is a proper subword, so the
    super-condensed set is contained in the condensed one.
    """
    _require_distance(d)
    w = make_word(require_word(w).text, alphabet)
    texts = [
        t
        for t in _iter_members(w, d, alphabet, True)
        if not _has_proper_subword_in_neighborhood(t, w.text, d)
    ]
    return _result(w, d, KIND_SUPER_CONDENSED, texts, alphabet)


def count(w: Word, d: int, alphabet: Alphabet, kind: str) -> int:
    """Cardinality of the requested neighborhood without keeping the word list."""
    _require_distance(d)
    if kind not in NEIGHBORHOOD_KINDS:
        raise ValidationError(f"unknown neighborhood kind {kind!r}")
    w = make_word(require_word(w).text, alphabet)
    if kind == KIND_FULL:
        return sum(1 for _ in _iter_members(w, d, alphabet, False))
    if kind == KIND_CONDENSED:
        return sum(1 for _ in _iter_members(w, d, alphabet, True))
    return sum(
        1
        for t in _iter_members(w, d, alphabet, True)
        if not _has_proper_subword_in_neighborhood(t, w.text, d)
    )


def brute_force_enumerate(
    w: Word, d: int, alphabet: Alphabet, kind: str, budget: int | None = None
) -> NeighborhoodResult:
    """Ground-truth oracle: test every candidate word, apply the definitions literally.

    Candidates are all words over the alphabet of length 0..|w|+d (longer
    words are trivially outside the neighborhood). Refuses instances whose
    candidate count s^(|w|+d+1) exceeds the budget.
    """
    _require_distance(d)
    if kind not in NEIGHBORHOOD_KINDS:
        raise ValidationError(f"unknown neighborhood kind {kind!r}")
    w = make_word(require_word(w).text, alphabet)
    limit = resolve_budget(budget)
    s = alphabet.size
    max_len = len(w) + d
    if s ** (max_len + 1) > limit:
        raise BudgetError(
            f"oracle would scan about {s ** (max_len + 1)} candidates, over the "
            f"budget of {limit}; raise it explicitly to force the run"
        )

    full = set()
    for length in range(max_len + 1):
        for chars in itertools.product(alphabet.symbols, repeat=length):
            cand = "".join(chars)
            if _dist(cand, w.text, limit=d) <= d:
                full.add(cand)

    if kind == KIND_FULL:
        selected = full
    elif kind == KIND_CONDENSED:
        selected = {
            u for u in full if not any(u[:k] in full for k in range(len(u)))
        }
    else:
        selected = {
            u
            for u in full
            if not any(
                u[i:j] in full
                for i in range(len(u) + 1)
                for j in range(i, len(u) + 1)
                if (i, j) != (0, len(u))
            )
        }

    texts = sorted(selected, key=lambda t: tuple(alphabet.rank(c) for c in t))
    return _result(w, d, kind, texts, alphabet)
