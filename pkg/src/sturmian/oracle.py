"""Exhaustive verification of the extremal laws of closure images.

Each verifier enumerates every directive word of a given length (or every
admissible exponent list of a given weight), measures the target statistic
along two fully independent routes, and compares maximum and argmax against
the closed-form prediction: the alternating directive and its images under
the letter exchange and the first/last-pair swaps, with Fibonacci-number
maxima.

Routes never mix: "materialized" builds each image and reads statistics off
the string; "arithmetic" walks the same tree updating continuant pairs and
never builds a word.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .arithmetic import IntRep, to_integral
from .config import ARITHMETIC_ORDER_BOUND, MATERIALIZED_ORDER_BOUND
from .errors import BoundExceededError
from .palindromization import (
    DirectiveSpec,
    exchange_E,
    fibonacci_directive_prefix,
    op_c,
    op_d,
    psi_stream,
    psi_stream_advance,
)
from .words import Word, fibonacci, minimal_period

MODES = ("materialized", "arithmetic")


@dataclass(frozen=True)
class ExtremalReport:
    """Outcome of one exhaustive scan at one order."""

    order: int
    maximum: int
    argmax: tuple
    expected_max: int
    expected_argmax: tuple
    passed: bool


def directive_images(n: int, a_start: bool = False) -> Iterator[tuple[Word, Word]]:
    """Yield (v, psi(v)) for every directive word v of length n.

    Images grow by prepending the morphism image of the new letter, so the
    whole tree costs one string concatenation per node.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    stack = [("", "", "a", "b")]
    while stack:
        v, w, ma, mb = stack.pop()
        if len(v) == n:
            yield v, w
            continue
        if v or not a_start:
            stack.append((v + "b", mb + w, mb + ma, mb))
        stack.append((v + "a", ma + w, ma, ma + mb))


def _materialized_scan(n: int, stat: int, a_start: bool) -> tuple[int, list[Word]]:
    """Maximum and argmax of a statistic over psi images, by direct string scans."""
    best = -1
    arg: list[Word] = []
    for v, w in directive_images(n, a_start):
        if stat == 0:
            val = len(w)
        elif stat == 1:
            val = _kernels.min_period(w)
        else:
            val = w.count("b")
        if val > best:
            best, arg = val, [v]
        elif val == best:
            arg.append(v)
    return best, sorted(arg)


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _check_bound(n: int, mode: str, bound: int | None) -> None:
    if bound is None:
        bound = MATERIALIZED_ORDER_BOUND if mode == "materialized" else ARITHMETIC_ORDER_BOUND
    if n > bound:
        raise BoundExceededError(f"order {n} exceeds the {mode} enumeration bound {bound}")


def _scan(n: int, stat: int, a_start: bool, mode: str) -> tuple[int, list[Word]]:
    if mode == "materialized":
        return _materialized_scan(n, stat, a_start)
    return _kernels.arith_scan(n, stat, a_start)


def _make_report(order, got_max, got_arg, exp_max, exp_arg) -> ExtremalReport:
    got_t, exp_t = tuple(got_arg), tuple(exp_arg)
    passed = got_max == exp_max and set(got_t) == set(exp_t)
    return ExtremalReport(order, got_max, got_t, exp_max, exp_t, passed)


def expected_max_length(n: int) -> tuple[int, list[Word]]:
    """F(n+1) - 2, attained exactly by the alternating directive and its exchange."""
    v = fibonacci_directive_prefix(n)
    return fibonacci(n + 1) - 2, sorted({v, exchange_E(v)})


def expected_max_period(n: int) -> tuple[int, list[Word]]:
    """F(n-1), attained exactly by the alternating directive, its last-pair swap,
    and their exchanges."""
    v = fibonacci_directive_prefix(n)
    cv = op_c(v)
    return fibonacci(n - 1), sorted({v, exchange_E(v), cv, exchange_E(cv)})


def expected_max_bcount(n: int) -> tuple[int, list[Word]]:
    """F(n-1) - 1 over 'a'-leading directives, attained by the alternating directive
    and the exchange of its first-pair swap."""
    v = fibonacci_directive_prefix(n)
    cand = {v, exchange_E(op_d(v))}
    return fibonacci(n - 1) - 1, sorted(u for u in cand if u.startswith("a"))


def verify_max_length(n: int, mode: str = "arithmetic", bound: int | None = None) -> ExtremalReport:
    """Scan every directive word of length n for the longest closure image."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_mode(mode)
    _check_bound(n, mode, bound)
    got_max, got_arg = _scan(n, 0, False, mode)
    exp_max, exp_arg = expected_max_length(n)
    return _make_report(n, got_max, got_arg, exp_max, exp_arg)


def verify_max_period(n: int, mode: str = "arithmetic", bound: int | None = None) -> ExtremalReport:
    """Scan every directive word of length n for the largest minimal period."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_mode(mode)
    _check_bound(n, mode, bound)
    got_max, got_arg = _scan(n, 1, False, mode)
    exp_max, exp_arg = expected_max_period(n)
    return _make_report(n, got_max, got_arg, exp_max, exp_arg)


def verify_max_bcount(n: int, mode: str = "arithmetic", bound: int | None = None) -> ExtremalReport:
    """Scan every 'a'-leading directive word of length n for the most 'b' letters."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_mode(mode)
    _check_bound(n, mode, bound)
    got_max, got_arg = _scan(n, 2, True, mode)
    exp_max, exp_arg = expected_max_bcount(n)
    return _make_report(n, got_max, got_arg, exp_max, exp_arg)


def expected_continuant_max(n: int) -> tuple[int, list[IntRep]]:
    """F(n+1), attained only by the all-ones lists with and without a leading zero."""
    fams = [(0,) + (1,) * n]
    if n >= 1:
        fams.append((1,) * n)
    return fibonacci(n + 1), sorted(fams)


def verify_continuant_max(n: int, bound: int | None = None) -> ExtremalReport:
    """Maximize the head-and-tail-shifted continuant over exponent lists of weight n.

    The admissible lists are exactly the block encodings of directive words
    of length n (the empty word contributing (0,)), so the scan walks the
    directive tree.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    limit = ARITHMETIC_ORDER_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceededError(f"weight {n} exceeds the enumeration bound {limit}")
    raw_max, raw_arg = _kernels.arith_scan(n, 0, False)
    argmax = sorted(to_integral(v) if v else (0,) for v in raw_arg)
    exp_max, exp_arg = expected_continuant_max(n)
    return _make_report(n, raw_max + 2, argmax, exp_max, exp_arg)


def expected_period_continuant_max(n: int) -> tuple[int, list[IntRep]]:
    """F(n-1), attained by the block encodings of the four extremal directives."""
    v = fibonacci_directive_prefix(n)
    cv = op_c(v)
    reps = {to_integral(u) for u in (v, exchange_E(v), cv, exchange_E(cv))}
    return fibonacci(n - 1), sorted(reps)


def period_continuant_equality_lists(n: int) -> list[IntRep]:
    """The four equality families of the period continuant, in closed form (n >= 4)."""
    if n < 4:
        raise ValueError("closed-form equality lists need n >= 4")
    return sorted(
        {
            (0,) + (1,) * n,
            (0,) + (1,) * (n - 3) + (2, 1),
            (1,) * n,
            (1,) + (1,) * (n - 4) + (2, 1),
        }
    )


def verify_period_continuant_max(n: int, bound: int | None = None) -> ExtremalReport:
    """Maximize the drop-last-then-shift-head continuant over exponent lists of weight n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    limit = ARITHMETIC_ORDER_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceededError(f"weight {n} exceeds the enumeration bound {limit}")
    raw_max, raw_arg = _kernels.arith_scan(n, 1, False)
    argmax = sorted(to_integral(v) for v in raw_arg)
    exp_max, exp_arg = expected_period_continuant_max(n)
    return _make_report(n, raw_max, argmax, exp_max, exp_arg)


def fib_lemma_holds_at(n: int) -> bool:
    """x*F(n-x) + F(n-x+1) <= F(n+1) for 1 <= x <= n, with equality only at x = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rhs = fibonacci(n + 1)
    for x in range(1, n + 1):
        lhs = x * fibonacci(n - x) + fibonacci(n - x + 1)
        if lhs > rhs or (lhs == rhs) != (x == 1):
            return False
    return True


def verify_fib_lemma(n_max: int) -> bool:
    """The weighted Fibonacci bound at every order up to n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return all(fib_lemma_holds_at(n) for n in range(1, n_max + 1))


def harmonic_at(n: int) -> tuple[int, int, int, bool]:
    """(period, modulus, residue, ok): the squared period of the alternating image
    is +-1 modulo its length + 2.  Evaluated by continuants only."""
    from .arithmetic import christoffel_length_from_directive, minimal_period_from_directive

    if n < 1:
        raise ValueError("n must be >= 1")
    v = fibonacci_directive_prefix(n)
    period = minimal_period_from_directive(v)
    modulus = christoffel_length_from_directive(v)
    residue = pow(period, 2, modulus)
    return period, modulus, residue, residue in (1 % modulus, modulus - 1)


def verify_harmonic_fibonacci(order_max: int) -> bool:
    """The +-1 square law at every order up to order_max."""
    if order_max < 1:
        raise ValueError("order_max must be >= 1")
    return all(harmonic_at(n)[3] for n in range(1, order_max + 1))


def central_length_census(n_max: int, bound: int = 16) -> dict[int, int]:
    """How many distinct closure images have each length 0..n_max.

    Walks the directive tree, pruning once an image outgrows n_max (images
    only grow along a directive), and counts each image once: distinct
    directives give distinct images.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > bound:
        raise BoundExceededError(f"census beyond length {bound} is unreasonably large")
    counts = [0] * (n_max + 1)
    stack = [("", "a", "b")]
    while stack:
        w, ma, mb = stack.pop()
        counts[len(w)] += 1
        for img, nma, nmb in ((ma + w, ma, ma + mb), (mb + w, mb + ma, mb)):
            if len(img) <= n_max:
                stack.append((img, nma, nmb))
    return dict(enumerate(counts))


def verify_central_count(n_max: int, bound: int = 16) -> bool:
    """Census counts match Euler's totient of length + 2 at every length up to n_max."""
    from .families import count_central

    census = central_length_census(n_max, bound)
    return all(census[k] == count_central(k) for k in range(n_max + 1))


def stream_rows(
    order_max: int, mode: str = "both", bound: int | None = None
) -> list[dict[str, object]]:
    """Per-order scoreboard for the three extremal streams.

    The alternating stream must attain the length and period maxima, its
    exchange the period maximum, and the heavy stream (preperiod 'abb') the
    b-count maximum from order 3 on; each must also sit in the enumerated
    argmax, and the enumeration itself must match the closed form.
    """
    if order_max < 1:
        raise ValueError("order_max must be >= 1")
    if mode not in MODES + ("both",):
        raise ValueError(f"mode must be one of {MODES + ('both',)}, got {mode!r}")
    sf = psi_stream(DirectiveSpec("", "ab"))
    sef = psi_stream(DirectiveSpec("", "ba"))
    sg = psi_stream(DirectiveSpec("abb", "ab"))
    rows: list[dict[str, object]] = []
    for n in range(1, order_max + 1):
        if mode == "both":
            eff = "materialized" if n <= MATERIALIZED_ORDER_BOUND else "arithmetic"
        else:
            eff = mode
        sf = psi_stream_advance(sf, 1)
        sef = psi_stream_advance(sef, 1)
        sg = psi_stream_advance(sg, 1)
        vn = fibonacci_directive_prefix(n)
        evn = exchange_E(vn)
        rep_len = verify_max_length(n, eff, bound)
        rep_per = verify_max_period(n, eff, bound)
        length_ok = (
            rep_len.passed
            and len(sf.current) == rep_len.maximum
            and vn in rep_len.argmax
            and evn in rep_len.argmax
        )
        period_ok = (
            rep_per.passed
            and minimal_period(sef.current) == rep_per.maximum
            and vn in rep_per.argmax
            and evn in rep_per.argmax
        )
        if n >= 3:
            rep_b = verify_max_bcount(n, eff, bound)
            gdir = sg.spec.prefix(n)
            bcount = sg.current.count("b")
            bcount_ok = (
                rep_b.passed
                and gdir == exchange_E(op_d(vn))
                and bcount == rep_b.maximum
                and gdir in rep_b.argmax
                and vn in rep_b.argmax
            )
        else:
            bcount, bcount_ok = None, True
        rows.append(
            {
                "order": n,
                "length": len(sf.current),
                "length_ok": length_ok,
                "period": minimal_period(sef.current),
                "period_ok": period_ok,
                "bcount": bcount,
                "bcount_ok": bcount_ok,
                "passed": length_ok and period_ok and bcount_ok,
            }
        )
    return rows


def verify_characteristic_extremal_streams(
    order_max: int, mode: str = "both", bound: int | None = None
) -> bool:
    """True iff every stream row up to order_max passes."""
    return all(bool(row["passed"]) for row in stream_rows(order_max, mode, bound))
