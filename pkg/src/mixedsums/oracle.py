"""Brute-force oracle for arbitrary three-term square/triangular forms.

Everything here is deliberately naive.  Representations are found by direct
enumeration over integer indices, using no number theory beyond recognizing
a perfect square (exact isqrt) and a triangular number (8v+1 a perfect
square).  The constructive decomposers are judged against these routines,
never the other way around, so this module must stay independent of the
construction machinery: it imports only the named forms (to translate them
into term lists) and the width checks.

Counting convention: every coordinate ranges over all of Z within its
evaluation bound.  Sign pairs x, -x of a square index and the index pair
i, -i-1 of a triangular value are distinct witnesses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .arith import _check_natural, isqrt
from .forms import MixedForm


class Term(NamedTuple):
    """One summand c*x^2 (kind "sq") or c*t_x (kind "tri")."""

    coeff: int
    kind: str

    def __str__(self) -> str:
        return f"{self.coeff}*{self.kind}"


@dataclass(frozen=True)
class FormSpec:
    """A three-term form, e.g. 1*sq+2*sq+4*tri for x^2 + 2y^2 + 4t_z."""

    terms: tuple[Term, Term, Term]

    def __post_init__(self) -> None:
        if len(self.terms) != 3:
            raise ValueError("a form has exactly three terms")
        for t in self.terms:
            if not isinstance(t, Term):
                raise TypeError(f"not a Term: {t!r}")
            if t.kind not in ("sq", "tri"):
                raise ValueError(f"term kind must be 'sq' or 'tri', got {t.kind!r}")
            if t.coeff < 1:
                raise ValueError(f"term coefficient must be positive, got {t.coeff}")

    def __str__(self) -> str:
        return "+".join(str(t) for t in self.terms)


class FormSpecSyntaxError(ValueError):
    """Raised on malformed form strings; message carries the offset."""


_TERM_RE = re.compile(r"([0-9]+)\*(sq|tri)\Z")


def parse_form_spec(text: str) -> FormSpec:
    """Parse "<coeff>*sq|tri + ..." (exactly three terms, no spaces)."""
    parts = text.split("+")
    if len(parts) != 3:
        raise FormSpecSyntaxError(
            f"expected three '+'-separated terms in {text!r}, got {len(parts)}"
        )
    terms = []
    offset = 0
    for part in parts:
        m = _TERM_RE.match(part)
        if m is None:
            raise FormSpecSyntaxError(
                f"bad term {part!r} at offset {offset} in {text!r}:"
                " want '<coeff>*sq' or '<coeff>*tri'"
            )
        coeff = int(m.group(1))
        if coeff < 1:
            raise FormSpecSyntaxError(f"zero coefficient at offset {offset} in {text!r}")
        terms.append(Term(coeff, m.group(2)))
        offset += len(part) + 1
    return FormSpec((terms[0], terms[1], terms[2]))


_FORM_TERMS = {
    MixedForm.X2_3Y2_T: ((1, "sq"), (3, "sq"), (1, "tri")),
    MixedForm.X2_3T_T: ((1, "sq"), (3, "tri"), (1, "tri")),
    MixedForm.X2_6T_T: ((1, "sq"), (6, "tri"), (1, "tri")),
    MixedForm.THREE_X2_2T_T: ((3, "sq"), (2, "tri"), (1, "tri")),
    MixedForm.FOUR_X2_2T_T: ((4, "sq"), (2, "tri"), (1, "tri")),
}


def form_spec_of(form: MixedForm) -> FormSpec:
    """Term list of a named mixed form, slots in evaluation order."""
    a, b, c = _FORM_TERMS[form]
    return FormSpec((Term(*a), Term(*b), Term(*c)))


# ── value/index enumeration ────────────────────────────────────────────────


def _term_values(term: Term, budget: int) -> Iterator[tuple[int, int]]:
    """Yield (value, index multiplicity), values ascending, value <= budget."""
    c, kind = term
    if kind == "sq":
        s, v = 0, 0
        while v <= budget:
            yield v, (1 if s == 0 else 2)
            s += 1
            v = c * s * s
    else:
        i, v = 0, 0
        while v <= budget:
            yield v, 2
            i += 1
            v = c * (i * (i + 1) // 2)


def _index_count(term: Term, value: int) -> int:
    """Number of integer indices whose term value equals `value`."""
    if value < 0:
        return 0
    q, r = divmod(value, term.coeff)
    if r:
        return 0
    if term.kind == "sq":
        s = isqrt(q)
        if s * s != q:
            return 0
        return 1 if q == 0 else 2
    d = 8 * q + 1
    s = isqrt(d)
    return 2 if s * s == d else 0


def _slot_indices(term: Term, budget: int) -> Iterator[tuple[int, int]]:
    """Yield (index, value) with value <= budget, indices ascending.

    Square indices run -s..s; triangular indices run -i-1..i, covering both
    preimages of every triangular value.
    """
    c, kind = term
    if budget < 0:
        return
    if kind == "sq":
        s = isqrt(budget // c)
        for i in range(-s, s + 1):
            yield i, c * i * i
    else:
        m = (isqrt(8 * (budget // c) + 1) - 1) // 2
        for i in range(-m - 1, m + 1):
            yield i, c * (i * (i + 1) // 2)


def _third_indices(term: Term, value: int) -> tuple[int, ...]:
    """All indices solving the final slot exactly, ascending."""
    q, r = divmod(value, term.coeff)
    if r:
        return ()
    if term.kind == "sq":
        s = isqrt(q)
        if s * s != q:
            return ()
        return (0,) if s == 0 else (-s, s)
    d = 8 * q + 1
    s = isqrt(d)
    if s * s != d:
        return ()
    i = (s - 1) // 2
    return (-i - 1, i)


# ── the oracle proper ──────────────────────────────────────────────────────


def exists(spec: FormSpec, n: int) -> bool:
    """True iff some integer triple evaluates to n under spec."""
    _check_natural(n, "n")
    # largest coefficient outermost (fewest candidate values), last term
    # solved directly: v is c*square iff c | v and v/c is square, similarly
    # v is c*triangular iff c | v and 8(v/c)+1 is a perfect square
    a, b, c = sorted(spec.terms, key=lambda t: -t.coeff)
    cc = c.coeff
    tri = c.kind == "tri"
    for va, _ in _term_values(a, n):
        rb = n - va
        for vb, _ in _term_values(b, rb):
            q, r = divmod(rb - vb, cc)
            if r:
                continue
            if tri:
                d = 8 * q + 1
                s = isqrt(d)
                if s * s == d:
                    return True
            else:
                s = isqrt(q)
                if s * s == q:
                    return True
    return False


def count(spec: FormSpec, n: int) -> int:
    """Number of integer triples evaluating to n (full signed domain)."""
    _check_natural(n, "n")
    a, b, c = sorted(spec.terms, key=lambda t: -t.coeff)
    total = 0
    for va, ma in _term_values(a, n):
        rb = n - va
        for vb, mb in _term_values(b, rb):
            mc = _index_count(c, rb - vb)
            if mc:
                total += ma * mb * mc
    return total


@dataclass(frozen=True)
class WitnessList:
    """Witness triples of n under spec, lexicographic, capped at limit."""

    spec: FormSpec
    n: int
    limit: int
    items: tuple[tuple[int, int, int], ...]
    truncated: bool


def witnesses(spec: FormSpec, n: int, limit: int) -> WitnessList:
    """Up to limit witnesses of n, in lexicographic index order.

    Slots are enumerated in the form's declared term order (never
    coefficient-sorted), first two by ascending index, the third solved
    exactly; that makes the output order lexicographic without a sort.
    """
    _check_natural(n, "n")
    if limit < 1:
        raise ValueError(f"limit must be at least 1, got {limit}")
    t0, t1, t2 = spec.terms
    found: list[tuple[int, int, int]] = []
    truncated = False
    for i0, v0 in _slot_indices(t0, n):
        for i1, v1 in _slot_indices(t1, n - v0):
            for i2 in _third_indices(t2, n - v0 - v1):
                if len(found) == limit:
                    truncated = True
                    break
                found.append((i0, i1, i2))
            if truncated:
                break
        if truncated:
            break
    return WitnessList(spec, n, limit, tuple(found), truncated)


def first_counterexample(
    spec: FormSpec, lo: int, hi: int, *, odd_only: bool = False
) -> int | None:
    """Smallest n in [lo, hi] (odd only, if asked) not represented by spec."""
    for n in range(lo, hi + 1):
        if odd_only and n % 2 == 0:
            continue
        if not exists(spec, n):
            return n
    return None


def exists_constrained_two_squares_triangular(n: int) -> bool:
    """True iff n = t_i + x^2 + y^2 with x, y of opposite parity or x = y > 0.

    Plain two-squares-plus-triangular with the witness constrained; only the
    pairs 0 <= x <= y need scanning since the constraint is symmetric.
    Fails exactly at n = 0 among the naturals checked in the catalogs.
    """
    _check_natural(n, "n")
    i = 0
    t = 0
    while t <= n:
        rem = n - t
        x = 0
        while 2 * x * x <= rem:
            yy = rem - x * x
            y = isqrt(yy)
            if y * y == yy and ((x ^ y) & 1 == 1 or (x == y and x > 0)):
                return True
            x += 1
        i += 1
        t = i * (i + 1) // 2
    return False
