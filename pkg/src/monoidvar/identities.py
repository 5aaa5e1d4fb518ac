"""Identities u = v and the structural predicates used on them."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .words import Letter, Word, decompose, reverse


@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word

    @classmethod
    def parse(cls, text: str) -> "Identity":
        if text.count("=") != 1:
            raise ValueError(f"identity needs exactly one '=': {text!r}")
        left, right = text.split("=")
        return cls(Word.parse(left), Word.parse(right))

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def swap(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def letters(self) -> frozenset[Letter]:
        return self.lhs.content() | self.rhs.content()

    def same_as(self, other: "Identity", ordered: bool = False) -> bool:
        """Equality of identities; unordered by default since u = v and v = u
        are interchangeable in deduction."""
        if self == other:
            return True
        return not ordered and self == other.swap()


def identity(text: str) -> Identity:
    return Identity.parse(text)


def canonical_form(sigma: Identity) -> Identity:
    """Rename letters to x1, x2, ... in order of first appearance in lhs.rhs."""
    ren: dict[Letter, Letter] = {}
    for a in sigma.lhs.letters + sigma.rhs.letters:
        if a not in ren:
            ren[a] = Letter("x", len(ren) + 1)
    return Identity(Word(ren[a] for a in sigma.lhs), Word(ren[a] for a in sigma.rhs))


def dual_identity(sigma: Identity) -> Identity:
    return Identity(reverse(sigma.lhs), reverse(sigma.rhs))


def is_linear_balanced(sigma: Identity) -> bool:
    du, dv = decompose(sigma.lhs), decompose(sigma.rhs)
    if du.simple_seq != dv.simple_seq:
        return False
    mul_u = {a for a, c in Counter(sigma.lhs.letters).items() if c > 1}
    mul_v = {a for a, c in Counter(sigma.rhs.letters).items() if c > 1}
    for x in mul_u | mul_v:
        if x not in mul_u:
            return False
        for bu, bv in zip(du.blocks, dv.blocks):
            cu, cv = bu.occ(x), bv.occ(x)
            if cu != cv or cu > 1:
                return False
    return True


def _one_invertible_neighbours(w: tuple) -> list[tuple]:
    out = []
    n = len(w)
    for i in range(n - 1):
        x, y = w[i], w[i + 1]
        if x == y:
            continue
        rest = w[:i] + w[i + 2:]
        if x in rest and y in rest:
            out.append(w[:i] + (y, x) + w[i + 2:])
    return out


class SearchCapExceeded(RuntimeError):
    pass


def inversion_distance(u: Word, v: Word, node_cap: int = 1_000_000) -> int | None:
    """Fewest 1-invertible swaps turning u into v, or None if impossible.

    A swap exchanges adjacent distinct letters x y when both x and y also
    occur elsewhere in the word.
    """
    if u == v:
        return 0
    if Counter(u.letters) != Counter(v.letters):
        return None
    start, goal = u.letters, v.letters
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        d = dist[w]
        for nb in _one_invertible_neighbours(w):
            if nb in dist:
                continue
            if nb == goal:
                return d + 1
            dist[nb] = d + 1
            if len(dist) > node_cap:
                raise SearchCapExceeded(f"more than {node_cap} words explored")
            queue.append(nb)
    return None
