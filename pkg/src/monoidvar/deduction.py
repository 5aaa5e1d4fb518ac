"""Equational deduction: single rewriting steps, bounded orbits, isoterm
verdicts and membership of factor monoids in varieties."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .families import VarietyBasis
from .identities import Identity
from .monoids import (FiniteMonoid, has_nonunit_powers, satisfies,
                      unique_power_exponents)
from .verdict import Verdict, conjoin
from .words import Letter, Word


@dataclass(frozen=True)
class Caps:
    """Search limits; ``None`` means derive from the seed word."""

    max_word_length: int | None = None
    max_orbit_size: int = 1_000_000
    max_candidate_length: int | None = None

    def __post_init__(self):
        for v in (self.max_word_length, self.max_orbit_size, self.max_candidate_length):
            if v is not None and v <= 0:
                raise ValueError("caps must be positive")

    def word_length(self, seed: Word) -> int:
        if self.max_word_length is not None:
            return self.max_word_length
        return 2 * len(seed) + 3

    def candidate_length(self, seed: Word) -> int:
        if self.max_candidate_length is not None:
            return self.max_candidate_length
        return len(seed) + 3


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class OrbitResult:
    words: frozenset
    closed: bool

    def __contains__(self, w):
        return w in self.words

    def __len__(self):
        return len(self.words)

    def sorted(self) -> list[Word]:
        return sorted(self.words, key=Word.key)


# -- one step ---------------------------------------------------------------

def _matches(s: tuple, u: tuple, start: int) -> Iterator[tuple[int, dict]]:
    """Every (end, phi) with phi(s) == u[start:end]; images may be empty."""
    bind: dict = {}

    def go(i, pos):
        if i == len(s):
            yield pos, dict(bind)
            return
        a = s[i]
        if a in bind:
            im = bind[a]
            if u[pos:pos + len(im)] == im:
                yield from go(i + 1, pos + len(im))
            return
        for j in range(pos, len(u) + 1):
            bind[a] = u[pos:j]
            yield from go(i + 1, j)
        del bind[a]

    yield from go(0, start)


def _words_upto(alphabet: list, n: int) -> Iterator[tuple]:
    for k in range(n + 1):
        yield from product(alphabet, repeat=k)


def _one_way(u: tuple, s: tuple, t: tuple, max_len: int):
    """Results of rewriting one occurrence of an instance of s into t.

    Returns (words, truncated); letters of t absent from s take every image
    over content(u) plus themselves that keeps the result within max_len.
    """
    free = sorted(set(t) - set(s))
    alphabet = sorted(set(u) | set(free))
    out = set()
    truncated = False
    seen_frames = set()
    for start in range(len(u) + 1):
        for end, phi in _matches(s, u, start):
            frame = (start, end, tuple(sorted(phi.items())))
            if frame in seen_frames:
                continue
            seen_frames.add(frame)
            base = len(u) - (end - start) + sum(len(phi[a]) for a in t if a in phi)
            if not free:
                if base > max_len:
                    truncated = True
                    continue
                img = tuple(x for a in t for x in phi[a])
                out.add(u[:start] + img + u[end:])
                continue
            truncated = True  # free letters have unboundedly many images
            counts = Counter(a for a in t if a in free)
            room = max_len - base
            if room < 0:
                continue
            options = [list(_words_upto(alphabet, room // counts[a])) for a in free]
            for images in product(*options):
                if sum(len(im) * counts[a] for a, im in zip(free, images)) > room:
                    continue
                full = dict(phi)
                full.update(zip(free, images))
                img = tuple(x for a in t for x in full[a])
                out.add(u[:start] + img + u[end:])
    return out, truncated


def _step(u: Word, sigma: Identity, max_len: int):
    a, ta = _one_way(u.letters, sigma.lhs.letters, sigma.rhs.letters, max_len)
    b, tb = _one_way(u.letters, sigma.rhs.letters, sigma.lhs.letters, max_len)
    return {Word(w) for w in a | b}, ta or tb


def direct_deductions(u: Word, sigma: Identity, max_len: int | None = None) -> set[Word]:
    """Words obtained from u by one application of sigma in either direction.

    When sigma has a letter on one side only, the inserted images are
    limited so that results have length at most max_len (default
    2*len(u)+3).
    """
    if max_len is None:
        max_len = DEFAULT_CAPS.word_length(u)
    return _step(u, sigma, max_len)[0]


def _identities(S) -> list[Identity]:
    if isinstance(S, VarietyBasis):
        return S.instantiate()
    return list(S)


def orbit(u: Word, S, caps: Caps = DEFAULT_CAPS) -> OrbitResult:
    """Breadth-first closure of u under one-step deductions."""
    sigmas = [s for s in _identities(S) if not s.trivial]
    max_len = caps.word_length(u)
    seen = {u}
    frontier = [u]
    closed = True
    while frontier:
        nxt = []
        for w in frontier:
            for sigma in sigmas:
                res, truncated = _step(w, sigma, max_len)
                closed = closed and not truncated
                for v in sorted(res, key=Word.key):
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
                        if len(seen) >= caps.max_orbit_size:
                            return OrbitResult(frozenset(seen), False)
        frontier = nxt
    return OrbitResult(frozenset(seen), closed)


def fic_class(w: Word, S, caps: Caps = DEFAULT_CAPS) -> OrbitResult:
    return orbit(w, S, caps)


# -- isoterms ---------------------------------------------------------------

def isoterm_basis(w: Word, B, caps: Caps = DEFAULT_CAPS) -> Verdict:
    """w is an isoterm iff no single step changes it, so one round of
    deductions decides the instantiated part of the basis."""
    for sigma in _identities(B):
        if sigma.trivial:
            continue
        for s, t in ((sigma.lhs, sigma.rhs), (sigma.rhs, sigma.lhs)):
            free = t.content() - s.content()
            if free:
                # s under the empty substitution matches in front of w;
                # keeping the free letters of t makes the step nontrivial
                v = Word([a for a in t if a in free]) + w
                return Verdict.fails(Identity(w, v), f"one step with {sigma}")
        res, _ = _step(w, sigma, caps.word_length(w))
        res.discard(w)
        if res:
            v = min(res, key=Word.key)
            return Verdict.fails(Identity(w, v), f"one step with {sigma}")
    if isinstance(B, VarietyBasis) and B.truncated:
        return Verdict.unknown(f"no step changes {w} under {B.name} instantiated "
                               f"to weight {B.bound}")
    return Verdict.holds()


def rearrangements(w: Word) -> Iterator[Word]:
    """Distinct rearrangements of w in lexicographic order."""
    items = sorted(w.letters)
    n = len(items)
    yield Word(items)
    while True:
        i = n - 2
        while i >= 0 and not items[i] < items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while not items[i] < items[j]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])
        yield Word(items)


def isoterm_monoid(w: Word, M: FiniteMonoid, caps: Caps = DEFAULT_CAPS,
                   strategy: str = "auto") -> Verdict:
    """Is w an isoterm for the variety generated by M?

    If every letter count of w is a power exponent that M can pin down and
    M has an element with no positive power equal to 1, any w' with
    M |= w = w' is a rearrangement of w, so checking those decides.
    Otherwise words over content(w) are swept up to the candidate length.
    """
    counts = Counter(w.letters)
    D = unique_power_exponents(M)
    if all(c in D for c in counts.values()) and has_nonunit_powers(M):
        n = 0
        for v in rearrangements(w):
            if v == w:
                continue
            n += 1
            if n > caps.max_orbit_size:
                return Verdict.unknown("too many rearrangements")
            if satisfies(M, Identity(w, v), strategy).is_holds:
                return Verdict.fails(Identity(w, v))
        return Verdict.holds()
    alphabet = sorted(w.content()) or [Letter("x")]
    bound = caps.candidate_length(w)
    for k in range(bound + 1):
        for letters in product(alphabet, repeat=k):
            v = Word(letters)
            if v != w and satisfies(M, Identity(w, v), strategy).is_holds:
                return Verdict.fails(Identity(w, v))
    return Verdict.unknown(f"no witness up to length {bound}")


def member(W: Iterable[Word], V, caps: Caps = DEFAULT_CAPS) -> Verdict:
    """M(W) in V, word by word (a factor monoid lies in V exactly when each
    of its words is an isoterm for V)."""
    W = list(W)
    if isinstance(V, FiniteMonoid):
        return conjoin(isoterm_monoid(w, V, caps) for w in W)
    return conjoin(isoterm_basis(w, V, caps) for w in W)


def free_rees_quotient(W: Iterable[Word], B, caps: Caps = DEFAULT_CAPS) -> FiniteMonoid | None:
    """The relatively free monoid of var B modulo the ideal of elements not
    dividing any word of W.

    Elements are 0 and the B-classes of factors of words equivalent to a
    word of W.  Every class is an orbit, so the result is exact only when
    all of them close; otherwise None.
    """
    classes: dict = {}
    todo = list(W)
    reps = []
    while todo:
        w = todo.pop()
        if w in classes:
            continue
        o = orbit(w, B, caps)
        if not o.closed:
            return None
        cid = len(reps)
        reps.append(min(o.words, key=Word.key))
        for v in o.words:
            classes[v] = cid
            s = v.letters
            for i in range(len(s)):
                for j in range(i, len(s) + 1):
                    f = Word(s[i:j])
                    if f not in classes:
                        todo.append(f)
    order = sorted(range(len(reps)), key=lambda c: reps[c].key())
    new = {c: k + 1 for k, c in enumerate(order)}  # 0 is the zero
    n = len(reps) + 1
    rep_of = [None] + [reps[c] for c in order]
    table = [[0] * n for _ in range(n)]
    for a in range(1, n):
        for b in range(1, n):
            c = classes.get(rep_of[a] + rep_of[b])
            table[a][b] = 0 if c is None else new[c]
    one = new[classes[Word()]]
    labels = ["0"] + [str(r) for r in rep_of[1:]]
    return FiniteMonoid(table, one, 0, labels)
