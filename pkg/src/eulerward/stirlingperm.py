"""Generalized Stirling permutations: validation, statistics, enumeration.

A (nu, t, X)-Stirling permutation is a word over the multiset containing the
symbol 0 exactly t times and each label of the ordered set X exactly nu
times, subject to the betweenness condition: every letter lying strictly
between two occurrences of x is >= x.  (For 0 the condition is vacuous.)

A (nu, tvec, n)-Stirling permutation is an s-tuple of such words: the labels
1..n are split into an ordered partition (X_1, ..., X_s), possibly with empty
parts, and entry i is a (nu, t_i, X_i)-Stirling permutation, where tvec is a
composition of t into s nonnegative parts.

An ascent is a 1-based position i inside a single word with
letter(i) < letter(i+1); positions are never compared across entries.  The
number of such tuples with k ascents is the nu-order (s,t)-Eulerian number
E(n, k), which is what makes this module the brute-force oracle for the
recurrence engine.

Enumeration follows the insertion construction: the unique object of order 0
is (0^t_1, ..., 0^t_s), and every object of order m arises exactly once by
inserting the block m^nu into one of the sum(len_i + 1) = nu(m-1) + t + s
gaps of an object of order m-1 (a gap being any position of any entry,
including its two ends).  Gaps are visited entry-major, left to right, giving
a reproducible ordering.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .eulerian import Params, row_sum_product

__all__ = [
    "GenStirlingWord",
    "GenStirlingSeq",
    "validate_word",
    "validate_sequence",
    "ascent_positions",
    "seq_ascent_count",
    "count_sequences",
    "enumerate_sequences",
    "ascent_histogram",
    "ascent_histograms_up_to",
    "word_text",
    "word_from_text",
]


@dataclass(frozen=True)
class GenStirlingWord:
    """One word over {0} and an ordered label set.

    ``labels`` is the alphabet the word is supposed to cover (each label nu
    times); it defaults to the nonzero letters actually present, but can be
    given explicitly to express "this word should have used 1..n" when
    checking standalone words.
    """

    letters: tuple[int, ...]
    nu: int
    t: int
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.labels is None:
            inferred = tuple(sorted({x for x in self.letters if x != 0}))
            object.__setattr__(self, "labels", inferred)
        else:
            object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))

    @classmethod
    def over_range(cls, letters, nu: int, t: int, n: int) -> "GenStirlingWord":
        """A word that must use exactly the labels 1..n."""
        return cls(tuple(letters), nu, t, tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class GenStirlingSeq:
    """An s-tuple of words forming one generalized Stirling permutation."""

    entries: tuple[GenStirlingWord, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("a sequence needs s >= 1 entries")

    @property
    def s(self) -> int:
        return len(self.entries)

    @property
    def nu(self) -> int:
        return self.entries[0].nu

    @property
    def tvec(self) -> tuple[int, ...]:
        return tuple(e.t for e in self.entries)

    @property
    def n(self) -> int:
        return sum(len(e.labels) for e in self.entries)

    @property
    def label_partition(self) -> tuple[tuple[int, ...], ...]:
        return tuple(e.labels for e in self.entries)


def validate_word(w: GenStirlingWord) -> bool:
    """True iff the multiset and betweenness invariants hold.

    Multiset: 0 occurs exactly w.t times, every label of w.labels exactly
    w.nu times, nothing else occurs.  Betweenness: letters strictly between
    two consecutive occurrences of x are all >= x (checking consecutive
    occurrences suffices, since the intermediate copies of x pass for
    themselves).
    """
    if w.nu < 1 or w.t < 0:
        return False
    counts = Counter(w.letters)
    if counts.pop(0, 0) != w.t:
        return False
    if set(counts) != set(w.labels):
        return False
    if any(c != w.nu for c in counts.values()):
        return False
    positions: dict[int, list[int]] = {}
    for i, x in enumerate(w.letters):
        positions.setdefault(x, []).append(i)
    for x, pos in positions.items():
        for a, b in zip(pos, pos[1:]):
            if any(y < x for y in w.letters[a + 1 : b]):
                return False
    return True


def validate_sequence(seq: GenStirlingSeq) -> bool:
    """True iff every entry is valid and the label sets partition 1..n."""
    if any(not validate_word(e) for e in seq.entries):
        return False
    if any(e.nu != seq.nu for e in seq.entries):
        return False
    seen: list[int] = []
    for part in seq.label_partition:
        seen.extend(part)
    return sorted(seen) == list(range(1, seq.n + 1)) and len(seen) == len(set(seen))


def _letters_of(w) -> tuple[int, ...]:
    if isinstance(w, GenStirlingWord):
        return w.letters
    return tuple(w)


def ascent_positions(w) -> frozenset[int]:
    """1-based positions i with letter(i) < letter(i+1), inside one word.

    Accepts a GenStirlingWord or any plain sequence of letters.
    """
    letters = _letters_of(w)
    return frozenset(
        i for i in range(1, len(letters)) if letters[i - 1] < letters[i]
    )


def seq_ascent_count(seq: GenStirlingSeq) -> int:
    """Total ascents over all entries; positions never straddle entries."""
    return sum(len(ascent_positions(e)) for e in seq.entries)


def _seed(tvec: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple((0,) * ti for ti in tvec)


def _children(obj, block):
    """All insertions of a block into one object, entry-major, gaps left to right."""
    for i, entry in enumerate(obj):
        for g in range(len(entry) + 1):
            yield obj[:i] + (entry[:g] + block + entry[g:],) + obj[i + 1 :]


def _raw_sequences(nu: int, tvec: tuple[int, ...], n: int):
    """Depth-first stream of raw letter tuples for all order-n objects."""

    def rec(obj, m):
        if m > n:
            yield obj
            return
        block = (m,) * nu
        for child in _children(obj, block):
            yield from rec(child, m + 1)

    yield from rec(_seed(tvec), 1)


def _raw_ascents(obj) -> int:
    total = 0
    for entry in obj:
        for a, b in zip(entry, entry[1:]):
            if a < b:
                total += 1
    return total


def _enumeration_params(p: Params) -> tuple[int, tuple[int, ...]]:
    if p.s < 1:
        raise ValueError("enumeration needs s >= 1 entries")
    return p.nu, p.composition


def count_sequences(p: Params, n: int) -> int:
    """How many (nu, tvec, n)-Stirling permutations there are, in product form."""
    _enumeration_params(p)
    return row_sum_product(p, n)


def _wrap(obj, nu: int, tvec: tuple[int, ...]) -> GenStirlingSeq:
    return GenStirlingSeq(
        tuple(GenStirlingWord(entry, nu, ti) for entry, ti in zip(obj, tvec))
    )


def enumerate_sequences(p: Params, n: int) -> Iterator[GenStirlingSeq]:
    """Yield every (nu, tvec, n)-Stirling permutation exactly once.

    The composition comes from p.tvec, defaulting to (t, 0, ..., 0).  The
    stream is deterministic: each order-m prefix is extended by inserting
    m^nu into gaps entry-major, left to right.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    nu, tvec = _enumeration_params(p)
    for obj in _raw_sequences(nu, tvec, n):
        yield _wrap(obj, nu, tvec)


def ascent_histogram(p: Params, n: int) -> list[int]:
    """histogram[k] = number of order-n objects with exactly k ascents."""
    if n < 0:
        raise ValueError("n must be >= 0")
    nu, tvec = _enumeration_params(p)
    hist = [0] * (n + 1)
    for obj in _raw_sequences(nu, tvec, n):
        hist[_raw_ascents(obj)] += 1
    return hist


def ascent_histograms_up_to(p: Params, nmax: int) -> list[list[int]]:
    """Ascent histograms for every order 0..nmax in a single breadth-first pass.

    Cheaper than nmax separate calls when a whole triangle is being checked,
    since each level is built once and reused for the next.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    nu, tvec = _enumeration_params(p)
    cur = [_seed(tvec)]
    hists = []
    for m in range(nmax + 1):
        if m > 0:
            block = (m,) * nu
            cur = [child for obj in cur for child in _children(obj, block)]
        hist = [0] * (m + 1)
        for obj in cur:
            hist[_raw_ascents(obj)] += 1
        hists.append(hist)
    return hists


def word_text(w) -> str:
    """Serialize a word as space-separated decimal letters ('' when empty)."""
    return " ".join(str(x) for x in _letters_of(w))


def word_from_text(text: str) -> tuple[int, ...]:
    """Parse a word: space-separated decimals, or a bare digit string.

    '3 3 3 2 2 2 1 1 1' and '333222111' both parse; labels above 9 need the
    spaced form.  The empty string is the empty word.
    """
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text):
        return tuple(int(tok) for tok in text.split())
    if not text.isdigit():
        raise ValueError("cannot parse word %r" % (text,))
    return tuple(int(ch) for ch in text)
