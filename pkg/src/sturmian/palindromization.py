"""Iterated palindromic closure and its companions.

The map psi sends a finite directive word to the palindrome obtained by
closing after each letter; its images are exactly the central words.  The
morphism route (mu) produces the same words by substitution and is kept
strictly separate so the two can cross-check each other.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .config import ensure_materializable
from .errors import MaterializationLimitError, NotCentralError
from .words import Word, check_letter, check_word

_EXCHANGE = str.maketrans("ab", "ba")

# Above this directive length p_x stops materializing morphism images and
# switches to the continuant evaluation.
_P_X_MATERIALIZE_MAX = 64


def palindromic_closure(w: Word) -> Word:
    """Shortest palindrome having w as a prefix.

    >>> palindromic_closure("abaa")
    'abaaba'
    """
    check_word(w)
    q = _kernels.lps_length(w)
    ensure_materializable(2 * len(w) - q)
    head = w[: len(w) - q]
    return w + head[::-1]


def psi(v: Word) -> Word:
    """Iterated palindromic closure directed by v.

    >>> psi("abba")
    'ababaababa'
    """
    check_word(v)
    w = ""
    for x in v:
        w = palindromic_closure(w + x)
    return w


def directive_word_of(w: Word) -> Word:
    """Inverse of psi: the letters following each proper palindromic prefix.

    Raises NotCentralError when w is not an image of psi (the extracted
    candidate is validated by a full round trip).
    """
    check_word(w)
    letters = []
    for i in range(len(w)):
        head = w[:i]
        if head == head[::-1]:
            letters.append(w[i])
    v = "".join(letters)
    if psi(v) != w:
        raise NotCentralError(f"not an iterated-closure image: {w[:40]!r}...")
    return v


def mu(v: Word, target: Word) -> Word:
    """Composed substitution: letter 'a' contributes a -> a, b -> ab; 'b' contributes a -> ba, b -> b.

    Letters of v compose left-to-right with the rightmost applied first.

    >>> mu("a", "ba")
    'aba'
    """
    check_word(v)
    check_word(target)
    w = target
    for x in reversed(v):
        if x == "a":
            w = w.replace("b", "ab")
        else:
            w = w.replace("a", "ba")
        ensure_materializable(len(w))
    return w


def p_x(v: Word, x: str) -> int:
    """|mu_v(x)|, the x-indexed period of the closure image of v.

    Materializes the morphism image for short directives; beyond that (or
    when the image would exceed the cap) it evaluates the equivalent
    continuant, since |mu_v(x)| is the minimal period of psi(v + x).
    """
    check_word(v)
    check_letter(x)
    if len(v) <= _P_X_MATERIALIZE_MAX:
        try:
            return len(mu(v, x))
        except MaterializationLimitError:
            pass
    from .arithmetic import minimal_period_from_directive

    return minimal_period_from_directive(v + x)


def justin_check(v: Word, u: Word) -> bool:
    """Evaluate psi(v + u) and mu(v, psi(u)) + psi(v) independently; True iff equal."""
    return psi(v + u) == mu(v, psi(u)) + psi(v)


def exchange_E(w: Word) -> Word:
    """Swap the two letters everywhere."""
    check_word(w)
    return w.translate(_EXCHANGE)


def op_c(v: Word) -> Word:
    """Swap the last two letters; identity on words shorter than 2."""
    check_word(v)
    if len(v) < 2:
        return v
    return v[:-2] + v[-1] + v[-2]


def op_d(v: Word) -> Word:
    """Swap the first two letters; identity on words shorter than 2."""
    check_word(v)
    if len(v) < 2:
        return v
    return v[1] + v[0] + v[2:]


def fibonacci_directive_prefix(n: int) -> Word:
    """First n letters of the alternating directive a b a b ...

    >>> fibonacci_directive_prefix(5)
    'ababa'
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return "ab" * (n // 2) + "a" * (n % 2)


@dataclass(frozen=True)
class DirectiveSpec:
    """Eventually periodic infinite directive word: preperiod then period forever."""

    preperiod: Word
    period: Word

    def __post_init__(self) -> None:
        check_word(self.preperiod)
        check_word(self.period)
        if not self.period:
            raise ValueError("period must be non-empty")

    @classmethod
    def parse(cls, text: str) -> "DirectiveSpec":
        """Parse 'preperiod|period', e.g. 'abb|ab' or '|ab'."""
        pre, sep, per = text.partition("|")
        if not sep:
            raise ValueError("directive spec must look like 'preperiod|period'")
        return cls(pre, per)

    def __str__(self) -> str:
        return f"{self.preperiod}|{self.period}"

    def letter(self, i: int) -> str:
        """The i-th directive letter, 0-based."""
        if i < 0:
            raise ValueError("index must be >= 0")
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> Word:
        """The first n directive letters."""
        if n < 0:
            raise ValueError("n must be >= 0")
        reps = (max(n - len(self.preperiod), 0) // len(self.period)) + 1
        return (self.preperiod + self.period * reps)[:n]

    def is_characteristic(self) -> bool:
        """True iff each letter recurs forever, i.e. both letters occur in the period."""
        return "a" in self.period and "b" in self.period


@dataclass(frozen=True)
class PsiStream:
    """Checkpoint of the infinite closure image: directive letters consumed so far
    and the palindrome they produce."""

    spec: DirectiveSpec
    emitted: int = 0
    current: Word = ""


def psi_stream(spec: DirectiveSpec) -> PsiStream:
    """Fresh stream positioned before the first directive letter."""
    return PsiStream(spec, 0, "")


def psi_stream_advance(s: PsiStream, steps: int) -> PsiStream:
    """Consume `steps` further directive letters, one closure per letter."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    w = s.current
    for i in range(s.emitted, s.emitted + steps):
        w = palindromic_closure(w + s.spec.letter(i))
    return PsiStream(s.spec, s.emitted + steps, w)


def stream_prefix(spec: DirectiveSpec, prefix_len: int) -> Word:
    """First prefix_len letters of the infinite closure image of spec."""
    if prefix_len < 0:
        raise ValueError("prefix_len must be >= 0")
    ensure_materializable(prefix_len)
    s = psi_stream(spec)
    while len(s.current) < prefix_len:
        s = psi_stream_advance(s, 1)
    return s.current[:prefix_len]
