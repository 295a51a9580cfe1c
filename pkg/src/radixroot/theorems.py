"""Executable verifiers for the digital-root invariance laws.

main1: dividing a terminating fractional by powers of a proper divisor r
of the base k never moves its digital root out of its gcd-class orbit in
the residues mod k-1, and r^j * R_j stays congruent to R_0 mod k-1.

main2: an irreducible fraction whose denominator has a part p >= 2 coprime
to both k and k-1 is repeating in base k, and the digit sum of its
repetend is divisible by k-1 (so the repetend's digital root is k-1).

For k = 2 the modulus k-1 collapses to 1: every congruence holds and all
residues share the single orbit labelled 1.  Such cases still run but are
counted as degenerate in fuzz summaries.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .arith import Rational, divisors, factorize
from .digroot import digit_sum_of_digits, digital_root, tf_digit_sum, tf_digital_root
from .errors import DomainError, ParseError, PreconditionError
from .modring import orbit_of
from .radix import ALPHABET, _nonterminating_reason, _require_base, _smooth_split, classify, to_repeating


def _orbit_label(modulus: int, value: int) -> int:
    if modulus == 1:
        return 1
    return orbit_of(modulus, value % modulus)


def verify_lemma_dr(q: Rational, k: int) -> bool:
    """Digit sum and digital root of a terminating fractional agree mod k-1."""
    _require_base(k)
    return (tf_digit_sum(q, k) - tf_digital_root(q, k).root) % (k - 1) == 0


def _require_proper_divisor(r: int, k: int) -> None:
    if not isinstance(r, int) or r < 2 or r >= k or k % r != 0:
        raise PreconditionError(f"r must be a divisor of {k} with 2 <= r < {k}, got {r!r}")


@dataclass(frozen=True, slots=True)
class Main1Term:
    j: int
    value: Rational
    root: int
    orbit_label: int


@dataclass(frozen=True, slots=True)
class Main1Report:
    base: int
    q: Rational
    r: int
    terms: tuple[Main1Term, ...]
    orbit_delta: int
    congruence_ok: bool
    passed: bool
    witness: int | None


def verify_main1(q: Rational, r: int, k: int, terms_max: int) -> Main1Report:
    """Check orbit invariance of the roots of q, q/r, ..., q/r^terms_max.

    Every root R_j (reduced mod k-1) must lie in the orbit of R_0, and
    r^j * R_j must stay congruent to R_0 mod k-1.
    """
    _require_base(k)
    _require_proper_divisor(r, k)
    if q.is_zero:
        raise PreconditionError("q must be positive")
    if terms_max < 1:
        raise PreconditionError(f"terms must be >= 1, got {terms_max}")
    if not classify(q, k).is_terminating:
        raise DomainError(_nonterminating_reason(q, k))

    modulus = k - 1
    terms = []
    for j in range(terms_max + 1):
        value = q / r**j
        root = tf_digital_root(value, k).root
        terms.append(Main1Term(j, value, root, _orbit_label(modulus, root)))

    orbit_delta = terms[0].orbit_label
    r0 = terms[0].root
    witness = None
    congruence_ok = True
    for term in terms:
        in_orbit = term.orbit_label == orbit_delta
        congruent = (r**term.j * term.root - r0) % modulus == 0
        if not congruent:
            congruence_ok = False
        if witness is None and not (in_orbit and congruent):
            witness = term.j
    return Main1Report(
        base=k,
        q=q,
        r=r,
        terms=tuple(terms),
        orbit_delta=orbit_delta,
        congruence_ok=congruence_ok,
        passed=witness is None,
        witness=witness,
    )


def verify_cor1(q: Rational, r: int, k: int) -> bool:
    """If the root of q is divisible by k-1, so is the root of q/r."""
    _require_base(k)
    _require_proper_divisor(r, k)
    if q.is_zero:
        raise PreconditionError("q must be positive")
    if not classify(q, k).is_terminating:
        raise DomainError(_nonterminating_reason(q, k))
    if tf_digital_root(q, k).root % (k - 1) != 0:
        raise PreconditionError(f"digital root of {q} is not divisible by {k - 1}")
    return tf_digital_root(q / r, k).root % (k - 1) == 0


@dataclass(frozen=True, slots=True)
class Main2Report:
    base: int
    n: int
    s: int
    smooth_part: int
    p_part: int
    preconditions_ok: bool
    repetend: tuple[int, ...]
    repetend_root: int | None
    t_doubleprime_divisible: bool
    passed: bool
    reason: str | None = None


def verify_main2(n: int, s: int, k: int) -> Main2Report:
    """Check the repetend digit-sum divisibility for n/s in base k.

    s splits as smooth_part * p with smooth_part built from primes of k.
    The claim applies when p >= 2 and gcd(p, k-1) = 1; tuples outside
    those preconditions yield a non-passing report with a reason rather
    than an error.  Also checks that (k^T - 1) * k^rho0 * n / s is a
    natural number divisible by k-1.
    """
    _require_base(k)
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"n must be an integer >= 1, got {n!r}")
    if not isinstance(s, int) or s < 2:
        raise PreconditionError(f"s must be an integer >= 2, got {s!r}")
    if math.gcd(n, s) != 1:
        raise DomainError(f"{n}/{s} is not an irreducible fraction")

    smooth, p, rho0 = _smooth_split(s, k)
    if p == 1:
        reason = f"{n}/{s} terminates in base {k}: no repetend"
    elif math.gcd(p, k - 1) != 1:
        reason = f"gcd({p}, {k - 1}) = {math.gcd(p, k - 1)} != 1"
    else:
        reason = None
    if reason is not None:
        return Main2Report(
            base=k, n=n, s=s, smooth_part=smooth, p_part=p,
            preconditions_ok=False, repetend=(), repetend_root=None,
            t_doubleprime_divisible=False, passed=False, reason=reason,
        )

    repetend = to_repeating(Rational(n, s), k).repetend
    root = digital_root(digit_sum_of_digits(repetend, k), k).root
    scaled = n * k**rho0 * (k ** len(repetend) - 1)
    divisible = scaled % s == 0 and (scaled // s) % (k - 1) == 0
    passed = root % (k - 1) == 0 and divisible
    return Main2Report(
        base=k, n=n, s=s, smooth_part=smooth, p_part=p,
        preconditions_ok=True, repetend=repetend, repetend_root=root,
        t_doubleprime_divisible=divisible, passed=passed,
    )


@dataclass(frozen=True)
class FuzzSummary:
    tested: int
    passed: int
    failed: int
    skipped: int
    degenerate: int
    failures: tuple[dict, ...]


def _smooth_values(k: int, bound: int) -> list[int]:
    """All products of primes of k that are <= bound, ascending."""
    primes = factorize(k).primes()
    values = {1}
    frontier = [1]
    while frontier:
        v = frontier.pop()
        for p in primes:
            w = v * p
            if w <= bound and w not in values:
                values.add(w)
                frontier.append(w)
    return sorted(values)


def _main1_tuples(bases, bound: int) -> list[tuple[int, int, int, int]]:
    tuples = []
    for k in bases:
        _require_base(k)
        proper = [d for d in divisors(k) if 2 <= d < k]
        if not proper:
            continue
        smooth = _smooth_values(k, bound)
        for r in proper:
            for a in range(1, bound + 1):
                for b in smooth:
                    if math.gcd(a, b) == 1:
                        tuples.append((k, r, a, b))
    return tuples


def _run_main1_chunk(chunk, terms_max: int):
    tested = failed = degenerate = 0
    failures = []
    for k, r, a, b in chunk:
        report = verify_main1(Rational(a, b), r, k, terms_max)
        tested += 1
        if k == 2:
            degenerate += 1
        if not report.passed:
            failed += 1
            failures.append(
                {"base": k, "r": r, "num": a, "den": b, "witness": report.witness}
            )
    return tested, failed, 0, degenerate, failures


def _run_main2_chunk(chunk):
    tested = failed = skipped = degenerate = 0
    failures = []
    for k, n, s in chunk:
        _, p, _ = _smooth_split(s, k)
        if p == 1 or math.gcd(p, k - 1) != 1:
            skipped += 1
            continue
        report = verify_main2(n, s, k)
        tested += 1
        if k == 2:
            degenerate += 1
        if not report.passed:
            failed += 1
            failures.append({"base": k, "n": n, "s": s})
    return tested, failed, skipped, degenerate, failures


def _run_chunked(runner, tuples, workers: int) -> FuzzSummary:
    if workers < 1:
        raise PreconditionError(f"workers must be >= 1, got {workers}")
    if workers == 1 or len(tuples) < 2 * workers:
        results = [runner(tuples)]
    else:
        size = -(-len(tuples) // workers)
        chunks = [tuples[i:i + size] for i in range(0, len(tuples), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(runner, chunks))
    tested = sum(r[0] for r in results)
    failed = sum(r[1] for r in results)
    skipped = sum(r[2] for r in results)
    degenerate = sum(r[3] for r in results)
    failures = tuple(f for r in results for f in r[4])
    return FuzzSummary(tested, tested - failed, failed, skipped, degenerate, failures)


def fuzz_main1(bases, bound: int, terms_max: int = 5, workers: int = 1) -> FuzzSummary:
    """Run verify_main1 over every (k, r, a/b) tuple in range.

    Enumerates k in ``bases``, every divisor r of k with 2 <= r < k, and
    every reduced a/b with a <= bound and k-smooth b <= bound, in
    lexicographic order.
    """
    tuples = _main1_tuples(bases, bound)
    return _run_chunked(partial(_run_main1_chunk, terms_max=terms_max), tuples, workers)


def fuzz_main2(bases, n_bound: int, s_bound: int, workers: int = 1) -> FuzzSummary:
    """Run verify_main2 over every reduced n/s in range, for each base.

    Tuples whose denominator has no part coprime to the base, or whose
    coprime part shares a factor with k-1, are counted as skipped.
    """
    for k in bases:
        _require_base(k)
    tuples = [
        (k, n, s)
        for k in bases
        for n in range(1, n_bound + 1)
        for s in range(2, s_bound + 1)
        if math.gcd(n, s) == 1
    ]
    return _run_chunked(_run_main2_chunk, tuples, workers)


@dataclass(frozen=True, slots=True)
class MagicDigitResult:
    candidates: tuple[int, ...]

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) > 1

    @property
    def digit(self) -> int:
        return self.candidates[0]


def _pattern_digits(pattern: str, k: int) -> tuple[list[int], int]:
    """Known digit values of a pattern plus the count of '?' placeholders."""
    known = []
    placeholders = 0
    if k <= 36:
        for i, ch in enumerate(pattern):
            if ch == "?":
                placeholders += 1
                continue
            value = ALPHABET.find(ch.upper())
            if value < 0:
                raise ParseError(f"invalid digit character {ch!r}", i)
            if value >= k:
                raise ParseError(f"digit {ch!r} is >= base {k}", i)
            known.append(value)
    else:
        offset = 0
        for token in pattern.split(","):
            if token == "?":
                placeholders += 1
            elif token.isdigit() and int(token) < k:
                known.append(int(token))
            else:
                raise ParseError(f"invalid digit token {token!r}", offset)
            offset += len(token) + 1
    return known, placeholders


def solve_missing_digit(pattern: str, k: int) -> MagicDigitResult:
    """Recover the single unknown digit of a number divisible by k-1.

    The digit sum of such a number is divisible by k-1, which pins the
    placeholder down to one digit, except that 0 and k-1 are
    indistinguishable; that case is reported as ambiguous.
    """
    _require_base(k)
    known, placeholders = _pattern_digits(pattern, k)
    if placeholders != 1:
        raise PreconditionError(
            f"pattern must contain exactly one '?' placeholder, found {placeholders}"
        )
    residue = (-sum(known)) % (k - 1)
    if residue == 0:
        return MagicDigitResult((0, k - 1))
    return MagicDigitResult((residue,))
