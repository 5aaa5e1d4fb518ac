"""Letters, words and the combinatorial accessors on them.

Text format: whitespace-separated tokens ``name[index]['']``, e.g. ``x``,
``z1'``, ``t12''``.  ``x^3`` expands to ``x x x`` and ``1`` is the empty word.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Mapping

_TOKEN = re.compile(r"^([a-z]+)(\d+)?('{0,2})(?:\^(\d+))?$")


@total_ordering
@dataclass(frozen=True, slots=True)
class Letter:
    name: str
    index: int | None = None
    primes: int = 0

    def __post_init__(self):
        if not self.name or not self.name.isalpha() or not self.name.islower():
            raise ValueError(f"bad letter name {self.name!r}")
        if self.index is not None and self.index < 0:
            raise ValueError("letter index must be a natural number")
        if not 0 <= self.primes <= 2:
            raise ValueError("at most two primes per letter")

    def sort_key(self):
        return (self.name, -1 if self.index is None else self.index, self.primes)

    def __lt__(self, other):
        if not isinstance(other, Letter):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        idx = "" if self.index is None else str(self.index)
        return f"{self.name}{idx}{chr(39) * self.primes}"

    def __repr__(self):
        return f"Letter({str(self)!r})"

    @classmethod
    def parse(cls, token: str) -> "Letter":
        m = _TOKEN.match(token)
        if not m or m.group(4) is not None:
            raise ValueError(f"bad letter token {token!r}")
        name, idx, primes, _ = m.groups()
        return cls(name, None if idx is None else int(idx), len(primes))


def letter(name: str, index: int | None = None, primes: int = 0) -> Letter:
    return Letter(name, index, primes)


class Word:
    """An immutable finite sequence of letters; the empty word is 1."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, Letter):
                raise TypeError(f"not a Letter: {a!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash(letters))

    def __setattr__(self, key, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str) -> "Word":
        out = []
        for tok in text.split():
            if tok == "1":
                continue
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad word token {tok!r}")
            name, idx, primes, power = m.groups()
            a = Letter(name, None if idx is None else int(idx), len(primes))
            out.extend([a] * (1 if power is None else int(power)))
        return cls(out)

    @classmethod
    def of(cls, *letters: Letter | str) -> "Word":
        return cls(a if isinstance(a, Letter) else Letter.parse(a) for a in letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i])
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        if isinstance(other, Letter):
            return Word(self.letters + (other,))
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __mul__(self, k: int) -> "Word":
        return Word(self.letters * k)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Word"):
        # shortlex; used for canonical witness order
        return self.key() < other.key()

    def key(self):
        return (len(self.letters), tuple(a.sort_key() for a in self.letters))

    def __bool__(self):
        return bool(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "1"

    def __repr__(self):
        return f"Word({str(self)!r})"

    def content(self) -> frozenset[Letter]:
        return frozenset(self.letters)

    def occ(self, x: Letter) -> int:
        return self.letters.count(x)


EMPTY = Word()


def word(text: str) -> Word:
    return Word.parse(text)


@dataclass(frozen=True)
class WordStats:
    content: frozenset
    occ: dict
    simple: frozenset
    multiple: frozenset
    is_linear: bool


def analyze(w: Word) -> WordStats:
    occ = dict(Counter(w.letters))
    simple = frozenset(a for a, c in occ.items() if c == 1)
    multiple = frozenset(a for a, c in occ.items() if c > 1)
    return WordStats(frozenset(occ), occ, simple, multiple, bool(w) and not multiple)


def simple_letters(w: Word) -> frozenset[Letter]:
    return analyze(w).simple


@dataclass(frozen=True)
class Decomposition:
    simple_seq: tuple
    blocks: tuple

    def assemble(self) -> Word:
        out = list(self.blocks[0].letters)
        for t, b in zip(self.simple_seq, self.blocks[1:]):
            out.append(t)
            out.extend(b.letters)
        return Word(out)


def decompose(w: Word) -> Decomposition:
    counts = Counter(w.letters)
    seq, blocks, cur = [], [], []
    for a in w.letters:
        if counts[a] == 1:
            seq.append(a)
            blocks.append(Word(cur))
            cur = []
        else:
            cur.append(a)
    blocks.append(Word(cur))
    return Decomposition(tuple(seq), tuple(blocks))


def restrict(w: Word, keep: Iterable[Letter]) -> Word:
    keep = set(keep)
    return Word(a for a in w.letters if a in keep)


def delete(w: Word, drop: Iterable[Letter] | Letter) -> Word:
    drop = {drop} if isinstance(drop, Letter) else set(drop)
    return Word(a for a in w.letters if a not in drop)


def reverse(w: Word) -> Word:
    return Word(reversed(w.letters))


def factors(w: Word) -> set[Word]:
    """All distinct nonempty contiguous factors."""
    s = w.letters
    n = len(s)
    return {Word(s[i:j]) for i in range(n) for j in range(i + 1, n + 1)}


def factor_at(w: Word, k: int, m: int) -> Word:
    """The factor of length m right after the prefix of length k."""
    if k < 0 or m < 0 or k + m > len(w):
        raise IndexError(f"factor [{k};{m}] out of range for length {len(w)}")
    return Word(w.letters[k:k + m])


def occurrence_position(w: Word, x: Letter, i: int) -> int:
    """0-based position of the i-th occurrence of x (i counts from 1)."""
    if i < 1:
        raise LookupError("occurrence numbers start at 1")
    seen = 0
    for pos, a in enumerate(w.letters):
        if a == x:
            seen += 1
            if seen == i:
                return pos
    raise LookupError(f"{x} occurs {seen} times in {w}, not {i}")


def precedes(w: Word, x: Letter, i: int, y: Letter, j: int) -> bool:
    return occurrence_position(w, x, i) < occurrence_position(w, y, j)


class Substitution:
    """Letters to words; unmapped letters are fixed."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: Mapping[Letter, Word] | None = None):
        self.mapping = dict(mapping or {})

    def __call__(self, w: Word) -> Word:
        return apply_substitution(self, w)

    def __eq__(self, other):
        return isinstance(other, Substitution) and self.mapping == other.mapping

    def __repr__(self):
        body = ", ".join(f"{a}->{self.mapping[a]}" for a in sorted(self.mapping))
        return f"Substitution({body})"


def apply_substitution(phi: Substitution, w: Word) -> Word:
    out = []
    m = phi.mapping
    for a in w.letters:
        img = m.get(a)
        if img is None:
            out.append(a)
        else:
            out.extend(img.letters)
    return Word(out)
