"""Closed forms and the recurrence for descent counts, in exact arithmetic.

Every function here evaluates a polynomial or an alternating sum with plain
integer operations; the oracle module provides the enumerative ground truth
these must match.
"""

from __future__ import annotations

from math import factorial, prod

from .core import DescentSet, DomainError, block_sums, compositions
from .oracle import count_content


def binom_poly(n: int, r: int) -> int:
    """Binomial coefficient read as a degree-r polynomial in ``n``.

    Computes n(n-1)...(n-r+1)/r!, which is exact for every integer ``n``,
    negative included; the product of r consecutive integers is always
    divisible by r!.
    """
    if r < 0:
        raise DomainError(f"binomial order must be >= 0, got {r}")
    return prod(range(n, n - r, -1)) // factorial(r)


def stabilization_point(descents: DescentSet) -> int:
    """Smallest multiplicity beyond which the count stops growing.

    Equals largest - size + 1 and never depends on the alphabet.
    """
    if not descents:
        raise DomainError("stabilization point needs a non-empty descent set")
    return descents.largest - len(descents) + 1


def bounded_sequence_count(descents: DescentSet, n: int, m: int) -> int:
    """Count length-``largest`` words over 1..n, each value used at most m
    times, with strict drops exactly at the descent set minus its largest
    element.

    Split on content: a word using r distinct values with multiplicity
    vector A contributes count_content(A) for each of the binom(n, r) ways
    to choose which values appear.  Valid for every n, m >= 1.
    """
    if not descents:
        raise DomainError("bounded counting needs a non-empty descent set")
    _require_positive(n=n, m=m)
    return _bounded_total(descents, n, m, {})


def _bounded_total(
    descents: DescentSet,
    n: int,
    m: int,
    cache: dict[tuple[tuple[int, ...], tuple[int, ...]], int],
) -> int:
    total = 0
    for parts in compositions(descents.largest, m):
        key = (parts, descents.elements)
        if key not in cache:
            cache[key] = count_content(parts, descents)
        total += cache[key] * binom_poly(n, len(parts))
    return total


def descent_count(descents: DescentSet, n: int, m: int) -> int:
    """Number of words holding each of 1..n exactly m times whose descent
    set is exactly ``descents``.

    Evaluated along the chain I, I-minus-largest, ... down to the empty set:
    at each level the bounded sequence count splits into the words where the
    final compared position does or does not drop.  A level whose largest
    element has no successor position contributes zero outright.
    """
    _require_positive(n=n, m=m)
    chain = []
    cur = descents
    while cur:
        chain.append(cur)
        cur = cur.without_largest
    value = 1  # empty descent set: only the fully sorted word
    cells = n * m
    cache: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for level in reversed(chain):
        if level.largest >= cells:
            value = 0
        else:
            value = _bounded_total(level, n, m, cache) - value
    return value


def last_fixed_formula(descents: DescentSet, n: int, j: int) -> int:
    """Alternating composition sum for the words whose last value is ``j``.

    Counts length-``largest`` words over 1..n with drops exactly at the
    descent set minus its largest element and final value j.  Agrees with
    the brute-force count once n >= largest.
    """
    if not descents:
        raise DomainError("the formula needs a non-empty descent set")
    _require_positive(n=n)
    if not 1 <= j <= n:
        raise DomainError(f"last value {j} outside 1..{n}")
    t = len(descents)
    steps = descents.first_differences
    total = 0
    for parts in compositions(t):
        sums = block_sums(steps, parts)
        term = -1 if (t - len(sums)) % 2 else 1
        for q in sums[:-1]:
            term *= binom_poly(n - 1 + q, q)
        last = sums[-1]
        term *= binom_poly(j - 2 + last, last - 1)
        total += term
    return total


def stable_descent_count(descents: DescentSet, n: int) -> int:
    """The stabilized count, evaluated as a polynomial at any integer ``n``.

    Once the multiplicity reaches the stabilization point the word count
    stops depending on it; this closed form gives that limit value.  For
    n >= largest it equals the number of length-``largest`` words over 1..n
    with drops exactly at the descent set minus its largest element and last
    value above 1.  Negative and small n evaluate the same polynomial, which
    is what the coefficient extraction relies on.
    """
    if not descents:
        raise DomainError("the stabilized count needs a non-empty descent set")
    t = len(descents)
    steps = descents.first_differences
    total = 0
    for parts in compositions(t):
        sums = block_sums(steps, parts)
        term = -1 if (t - len(sums)) % 2 else 1
        for q in sums[:-1]:
            term *= binom_poly(n - 1 + q, q)
        last = sums[-1]
        term *= binom_poly(n - 1 + last, last) - 1
        total += term
    return total


def _require_positive(**named: int) -> None:
    for name, value in named.items():
        if value < 1:
            raise DomainError(f"{name} must be >= 1, got {value}")
