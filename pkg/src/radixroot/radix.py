"""Base-k representations of nonnegative rationals, finite and repeating.

A reduced fraction terminates in base k exactly when every prime of its
denominator divides k.  Otherwise its expansion is eventually periodic:
write den = S * P with S the k-smooth part and gcd(P, k) = 1; then the
non-repeating fractional prefix has length rho0 = min {r : S | k^r} and the
repetend has length T = ord_P(k), the multiplicative order of k mod P.

Digit strings use the bracket notation ``[int.frac(repetend)]_base`` with
the repetend parenthesized, e.g. ``[4.24(5)]_6``.  Bases up to 36 use the
0-9A-Z alphabet; larger bases spell each digit as a decimal number with
commas between digits, e.g. ``[1,30.0,39(7)]_40``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import Rational, divisors, factorize, totient
from .errors import DomainError, ParseError

ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _require_base(k: int) -> int:
    if not isinstance(k, int) or k < 2:
        raise DomainError(f"base must be an integer >= 2, got {k!r}")
    return k


class Kind(str, enum.Enum):
    TERMINATING = "terminating"
    REPEATING = "repeating"


@dataclass(frozen=True, slots=True)
class RadixClassification:
    """Terminating/repeating verdict for a rational in one base.

    ``rho0`` is the minimum exponent (terminating) or the length of the
    non-repeating fractional prefix (repeating); ``period`` is the repetend
    length, 0 for terminating values.
    """

    kind: Kind
    rho0: int
    period: int

    @property
    def is_terminating(self) -> bool:
        return self.kind is Kind.TERMINATING


def _smooth_split(den: int, k: int) -> tuple[int, int, int]:
    """Split den into (smooth, p, rho0): the largest divisor made of primes
    of k, the coprime remainder, and min {r : smooth | k^r}."""
    k_exponents = dict(factorize(k).factors)
    smooth = 1
    p = den
    rho0 = 0
    for prime, e_k in k_exponents.items():
        e = 0
        while p % prime == 0:
            p //= prime
            e += 1
        if e:
            smooth *= prime**e
            rho0 = max(rho0, -(-e // e_k))
    return smooth, p, rho0


@lru_cache(maxsize=None)
def multiplicative_order(k: int, p: int) -> int:
    """Smallest T >= 1 with k^T = 1 mod p; requires gcd(k, p) = 1, p >= 2.

    Starts from totient(p) and strips prime factors while the power still
    fixes 1, which visits only divisors of the totient.
    """
    _require_base(k)
    if p < 2:
        raise DomainError(f"modulus must be >= 2, got {p}")
    if math.gcd(k, p) != 1:
        raise DomainError(f"{k} and {p} are not coprime")
    t = totient(p)
    for prime, _ in factorize(t).factors:
        while t % prime == 0 and pow(k, t // prime, p) == 1:
            t //= prime
    return t


def classify(q: Rational, k: int) -> RadixClassification:
    """Classify q as terminating or repeating in base k."""
    _require_base(k)
    smooth, p, rho0 = _smooth_split(q.den, k)
    if p == 1:
        return RadixClassification(Kind.TERMINATING, rho0, 0)
    return RadixClassification(Kind.REPEATING, rho0, multiplicative_order(k, p))


def _nonterminating_reason(q: Rational, k: int) -> str:
    _, p, _ = _smooth_split(q.den, k)
    bad = ", ".join(str(prime) for prime in factorize(p).primes())
    return (
        f"{q} has no finite base-{k} expansion: denominator prime(s) "
        f"{bad} do not divide {k}"
    )


def min_exponent(q: Rational, k: int) -> int:
    """Smallest rho with k^rho * q an integer; q must terminate in base k."""
    c = classify(q, k)
    if not c.is_terminating:
        raise DomainError(_nonterminating_reason(q, k))
    return c.rho0


@dataclass(frozen=True, slots=True)
class PositionalRepr:
    """Digits of a nonnegative rational in one base, most significant first.

    ``frac_digits`` holds the non-repeating fractional prefix and
    ``repetend`` the repeating block (empty for finite representations).
    Finite representations never end in a zero fractional digit, and a
    repetend is never all-zero and never longer than its minimal period.
    """

    base: int
    int_digits: tuple[int, ...]
    frac_digits: tuple[int, ...] = ()
    repetend: tuple[int, ...] = ()

    def __post_init__(self):
        _require_base(self.base)
        object.__setattr__(self, "int_digits", tuple(self.int_digits))
        object.__setattr__(self, "frac_digits", tuple(self.frac_digits))
        object.__setattr__(self, "repetend", tuple(self.repetend))
        for d in self.int_digits + self.frac_digits + self.repetend:
            if not isinstance(d, int) or not 0 <= d < self.base:
                raise DomainError(f"digit {d!r} out of range for base {self.base}")
        if not self.int_digits:
            raise DomainError("integer part must have at least one digit")
        if len(self.int_digits) > 1 and self.int_digits[0] == 0:
            raise DomainError("leading zero in integer part")
        if not self.repetend and self.frac_digits and self.frac_digits[-1] == 0:
            raise DomainError("finite fractional part must not end in zero")
        if self.repetend:
            if not any(self.repetend):
                raise DomainError("repetend must contain a nonzero digit")
            if _string_period(self.repetend) != len(self.repetend):
                raise DomainError("repetend longer than its minimal period")

    @property
    def period(self) -> int:
        return len(self.repetend)


def _string_period(digits: tuple[int, ...]) -> int:
    """Minimal t such that digits is a repetition of its first t entries."""
    n = len(digits)
    for t in divisors(n):
        if digits == digits[:t] * (n // t):
            return t
    return n


def _digits_of(n: int, k: int) -> list[int]:
    """Base-k digits of n >= 0, most significant first; [0] for n = 0."""
    if n == 0:
        return [0]
    out = []
    while n:
        n, d = divmod(n, k)
        out.append(d)
    out.reverse()
    return out


def _split_at_point(scaled: int, k: int, rho0: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Digits of scaled/k^rho0: pad to rho0+1 digits and split at the point."""
    digits = _digits_of(scaled, k)
    if len(digits) < rho0 + 1:
        digits = [0] * (rho0 + 1 - len(digits)) + digits
    if rho0 == 0:
        return tuple(digits), ()
    return tuple(digits[:-rho0]), tuple(digits[-rho0:])


def to_finite(q: Rational, k: int) -> PositionalRepr:
    """The unique finite base-k representation of a terminating rational."""
    c = classify(q, k)
    if not c.is_terminating:
        raise DomainError(_nonterminating_reason(q, k))
    scaled = q.num * k**c.rho0 // q.den
    int_part, frac_part = _split_at_point(scaled, k, c.rho0)
    return PositionalRepr(k, int_part, frac_part)


def to_repeating(q: Rational, k: int) -> PositionalRepr:
    """The infinite base-k representation of q > 0, with explicit repetend.

    For a repeating rational this is the canonical form: regular part of
    length rho0 followed by the minimal repetend, built from the closed
    form rem * (k^T - 1) / P.  For a terminating rational it is the
    alternate form that trades the last digit down and repeats k-1
    forever, e.g. [4.25]_6 -> [4.24(5)]_6.
    """
    _require_base(k)
    if q.is_zero:
        raise DomainError("0 has no representation with infinitely many nonzero digits")
    c = classify(q, k)
    if c.is_terminating:
        scaled = q.num * k**c.rho0 // q.den
        int_part, frac_part = _split_at_point(scaled - 1, k, c.rho0)
        return PositionalRepr(k, int_part, frac_part, (k - 1,))
    smooth, p, rho0 = _smooth_split(q.den, k)
    t = c.period
    m = q.num * (k**rho0 // smooth)
    whole, rem = divmod(m, p)
    block = rem * (k**t - 1) // p
    rep = _digits_of(block, k)
    rep = [0] * (t - len(rep)) + rep
    int_part, frac_part = _split_at_point(whole, k, rho0)
    return PositionalRepr(k, int_part, frac_part, tuple(rep))


def period(q: Rational, k: int) -> int:
    """Repetend length of q in base k; q must be repeating in that base."""
    c = classify(q, k)
    if c.is_terminating:
        raise DomainError(f"{q} terminates in base {k}; it has no repetend")
    return c.period


def value_of(r: PositionalRepr) -> Rational:
    """Exact value of a representation, via the k^T - 1 closed form."""
    k = r.base
    whole = 0
    for d in r.int_digits:
        whole = whole * k + d
    frac = 0
    for d in r.frac_digits:
        frac = frac * k + d
    shift = k ** len(r.frac_digits)
    if not r.repetend:
        return Rational(whole * shift + frac, shift)
    block = 0
    for d in r.repetend:
        block = block * k + d
    cycle = k ** len(r.repetend) - 1
    return Rational((whole * shift + frac) * cycle + block, shift * cycle)


def convert(r: PositionalRepr, k2: int, infinite: bool = False) -> PositionalRepr:
    """Re-encode a representation canonically in base k2.

    ``infinite`` forces the repeating form even for terminating values.
    """
    q = value_of(r)
    if infinite:
        return to_repeating(q, k2)
    if classify(q, k2).is_terminating:
        return to_finite(q, k2)
    return to_repeating(q, k2)


def format_repr(r: PositionalRepr) -> str:
    """Render a representation in bracket notation."""
    if r.base <= 36:
        def join(digits):
            return "".join(ALPHABET[d] for d in digits)
    else:
        def join(digits):
            return ",".join(str(d) for d in digits)

    body = join(r.int_digits)
    if r.frac_digits or r.repetend:
        body += "." + join(r.frac_digits)
    if r.repetend:
        body += f"({join(r.repetend)})"
    return f"[{body}]_{r.base}"


def _tokenize_chars(section: str, start: int, base: int) -> list[int]:
    out = []
    for i, ch in enumerate(section):
        value = ALPHABET.find(ch.upper())
        if value < 0:
            raise ParseError(f"invalid digit character {ch!r}", start + i)
        if value >= base:
            raise ParseError(f"digit {ch!r} is >= base {base}", start + i)
        out.append(value)
    return out


def _tokenize_commas(section: str, start: int, base: int) -> list[int]:
    out = []
    offset = 0
    for token in section.split(","):
        if not token.isdigit():
            raise ParseError(f"invalid digit token {token!r}", start + offset)
        value = int(token)
        if value >= base:
            raise ParseError(f"digit {value} is >= base {base}", start + offset)
        out.append(value)
        offset += len(token) + 1
    return out


def parse(text: str) -> PositionalRepr:
    """Parse bracket notation back into a PositionalRepr.

    The accepted grammar is ``'[' digits ['.' digits] ['(' digits ')'] ']'
    '_' base`` where the fractional digits may be empty only when a
    repetend group follows.  Spellings that violate canonical digit
    structure (leading zeros, a finite fraction ending in zero, an
    all-zero or non-minimal repetend) are rejected with the offending
    position rather than silently rewritten.
    """
    if not text:
        raise ParseError("empty input", 0)
    if text[0] != "[":
        raise ParseError("expected '['", 0)
    close = text.find("]")
    if close < 0:
        raise ParseError("missing ']'", len(text))
    body = text[1:close]
    suffix = text[close + 1:]
    if not suffix.startswith("_"):
        raise ParseError("expected '_' after ']'", close + 1)
    base_text = suffix[1:]
    if not base_text.isdigit():
        raise ParseError("expected a decimal base after '_'", close + 2)
    base = int(base_text)
    if base < 2:
        raise ParseError(f"base must be >= 2, got {base}", close + 2)

    tokenize = _tokenize_chars if base <= 36 else _tokenize_commas

    rep_section = ""
    rep_start = None
    open_paren = body.find("(")
    if open_paren >= 0:
        if not body.endswith(")"):
            raise ParseError("repetend group must close with ')' at the end", 1 + open_paren)
        rep_section = body[open_paren + 1:-1]
        rep_start = 1 + open_paren + 1
        if not rep_section:
            raise ParseError("empty repetend group", 1 + open_paren)
        for bad in "()":
            if bad in rep_section:
                raise ParseError("nested repetend group", rep_start + rep_section.find(bad))
        body = body[:open_paren]
    elif ")" in body:
        raise ParseError("')' without matching '('", 1 + body.find(")"))

    dot = body.find(".")
    if dot >= 0:
        int_section, frac_section = body[:dot], body[dot + 1:]
        frac_start = 1 + dot + 1
        if "." in frac_section:
            raise ParseError("multiple '.' separators", 1 + dot + 1 + frac_section.find("."))
        if not frac_section and rep_start is None:
            raise ParseError("expected fractional digits after '.'", 1 + dot + 1)
    else:
        int_section, frac_section, frac_start = body, "", None

    if not int_section:
        raise ParseError("integer part must have at least one digit", 1)

    int_digits = tokenize(int_section, 1, base)
    frac_digits = tokenize(frac_section, frac_start, base) if frac_section else []
    repetend = tokenize(rep_section, rep_start, base) if rep_section else []

    if len(int_digits) > 1 and int_digits[0] == 0:
        raise ParseError("leading zero in integer part", 1)
    if not repetend and frac_digits and frac_digits[-1] == 0:
        raise ParseError(
            "finite fractional part must not end in zero",
            frac_start + len(frac_section) - 1,
        )
    if repetend:
        if not any(repetend):
            raise ParseError("repetend must contain a nonzero digit", rep_start)
        if _string_period(tuple(repetend)) != len(repetend):
            raise ParseError("repetend longer than its minimal period", rep_start)

    return PositionalRepr(base, tuple(int_digits), tuple(frac_digits), tuple(repetend))
