"""Digital sums, additive persistence, and digital roots in any base,
including the extension to terminating fractionals via the minimum
exponent: the root of q is the root of k^rho0 * q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Rational, _require_natural
from .errors import DomainError
from .radix import _nonterminating_reason, _require_base, classify


def digit_sum(n: int, k: int) -> int:
    """Sum of the base-k digits of n."""
    _require_base(k)
    _require_natural(n, "n")
    s = 0
    while n:
        n, d = divmod(n, k)
        s += d
    return s


def digit_sum_iter(n: int, k: int, times: int) -> int:
    _require_natural(times, "times")
    for _ in range(times):
        n = digit_sum(n, k)
    return n


def additive_persistence(n: int, k: int) -> int:
    """Number of digit-sum iterations needed to reach a single digit."""
    _require_base(k)
    _require_natural(n, "n")
    count = 0
    while n >= k:
        n = digit_sum(n, k)
        count += 1
    return count


@dataclass(frozen=True, slots=True)
class DigitRootResult:
    """Digital root plus the reduction chain that produced it.

    ``trajectory`` lists the successive digit sums (empty when the input
    was already a single digit); its last entry equals ``root`` and its
    length equals ``persistence``.
    """

    root: int
    persistence: int
    trajectory: tuple[int, ...]


def digital_root(n: int, k: int) -> DigitRootResult:
    """Iterate the digit sum until a single base-k digit remains."""
    _require_base(k)
    _require_natural(n, "n")
    trajectory = []
    while n >= k:
        n = digit_sum(n, k)
        trajectory.append(n)
    return DigitRootResult(n, len(trajectory), tuple(trajectory))


def _scaled_integer(q: Rational, k: int) -> int:
    c = classify(q, k)
    if not c.is_terminating:
        raise DomainError(_nonterminating_reason(q, k))
    return q.num * k**c.rho0 // q.den


def tf_digit_sum(q: Rational, k: int) -> int:
    """Digit sum of a terminating fractional: digit_sum of k^rho0 * q."""
    return digit_sum(_scaled_integer(q, k), k)


def tf_digital_root(q: Rational, k: int) -> DigitRootResult:
    """Digital root of a terminating fractional: root of k^rho0 * q."""
    return digital_root(_scaled_integer(q, k), k)


def digit_sum_of_digits(digits, k: int) -> int:
    """Plain sum of an explicit digit list, validating each digit < k."""
    _require_base(k)
    total = 0
    for d in digits:
        if not isinstance(d, int) or not 0 <= d < k:
            raise DomainError(f"digit {d!r} out of range for base {k}")
        total += d
    return total
