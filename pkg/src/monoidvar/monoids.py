"""Finite monoids given by multiplication tables, factor monoids M(W) and
identity checking against them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .identities import Identity
from .verdict import Verdict, conjoin
from .words import Letter, Word, reverse

ZERO, ONE = 0, 1  # element ids in every factor monoid


class FiniteMonoid:
    """Immutable multiplication table with a two-sided identity.

    ``words`` is set for factor monoids M(W); ``element_of`` then maps each
    factor (and the empty word) to its element id.
    """

    __slots__ = ("table", "one", "zero", "labels", "words", "element_of", "_fm")

    def __init__(self, table, one: int, zero: int | None = None, labels=None,
                 words: Iterable[Word] | None = None, element_of=None, check: bool = True):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if check:
            if any(len(row) != n for row in table):
                raise ValueError("table must be square")
            if not 0 <= one < n or any(table[one][a] != a or table[a][one] != a for a in range(n)):
                raise ValueError(f"{one} is not a two-sided identity")
            if zero is not None and any(table[zero][a] != zero or table[a][zero] != zero
                                        for a in range(n)):
                raise ValueError(f"{zero} is not a zero")
        set_ = object.__setattr__
        set_(self, "table", table)
        set_(self, "one", one)
        set_(self, "zero", zero)
        set_(self, "labels", tuple(labels) if labels is not None else tuple(map(str, range(n))))
        set_(self, "words", None if words is None else tuple(sorted(set(words), key=Word.key)))
        set_(self, "element_of", element_of)
        set_(self, "_fm", None)

    def __setattr__(self, key, value):
        raise AttributeError("FiniteMonoid is immutable")

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def __eq__(self, other):
        if not isinstance(other, FiniteMonoid):
            return NotImplemented
        return (self.table, self.one, self.zero, self.labels, self.words) == \
            (other.table, other.one, other.zero, other.labels, other.words)

    def __hash__(self):
        return hash((self.table, self.one, self.zero))

    def __repr__(self):
        if self.words is not None:
            return "M(" + "; ".join(map(str, self.words)) + ")"
        return f"<FiniteMonoid size={self.size}>"

    def id_of(self, w: Word | str) -> int:
        """Element id of a factor (factor monoids) or of a label."""
        if isinstance(w, str):
            if w in self.labels:
                return self.labels.index(w)
            w = Word.parse(w)
        if self.element_of is not None and w in self.element_of:
            return self.element_of[w]
        if str(w) in self.labels:
            return self.labels.index(str(w))
        raise KeyError(f"{w} is not an element")

    def evaluate(self, w: Word, assignment: dict) -> int:
        t = self.table
        v = self.one
        for a in w:
            v = t[v][assignment[a]]
        return v

    def is_associative(self) -> bool:
        t = self.table
        r = range(len(t))
        for a in r:
            ta = t[a]
            for b in r:
                ab = ta[b]
                tab, tb = t[ab], t[b]
                for c in r:
                    if tab[c] != ta[tb[c]]:
                        return False
        return True

    def find_zero(self) -> int | None:
        t = self.table
        n = len(t)
        for z in range(n):
            if all(t[z][a] == z and t[a][z] == z for a in range(n)):
                return z
        return None

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        zero = "none" if self.zero is None else str(self.zero)
        lines = [f"monoid {self.size} one={self.one} zero={zero}"]
        lines += [" ".join(map(str, row)) for row in self.table]
        lines += [f"{i} {lab}" for i, lab in enumerate(self.labels)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FiniteMonoid":
        lines = text.strip("\n").split("\n")
        head = lines[0].split()
        if head[0] != "monoid":
            raise ValueError("missing 'monoid' header")
        n = int(head[1])
        one = int(head[2].split("=")[1])
        z = head[3].split("=")[1]
        table = [list(map(int, ln.split())) for ln in lines[1:1 + n]]
        labels = [ln.split(" ", 1)[1] if " " in ln else "" for ln in lines[1 + n:1 + 2 * n]]
        return cls(table, one, None if z == "none" else int(z), labels)


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid([[0]], 0, 0, ["1"])


def factor_monoid(W: Iterable[Word]) -> FiniteMonoid:
    """M(W): 0, 1 and every factor of a word of W; products that are not
    factors collapse to 0.  Ids: 0 zero, 1 identity, then factors in
    shortlex order."""
    W = [w if isinstance(w, Word) else Word.parse(w) for w in W]
    facs = set()
    for w in W:
        s = w.letters
        for i in range(len(s)):
            for j in range(i + 1, len(s) + 1):
                facs.add(s[i:j])
    order = sorted(facs, key=lambda f: (len(f), tuple(a.sort_key() for a in f)))
    ids = {(): ONE}
    for k, f in enumerate(order):
        ids[f] = k + 2
    n = len(order) + 2
    elems = [None, ()] + order
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            if a == ZERO or b == ZERO:
                row.append(ZERO)
            else:
                row.append(ids.get(elems[a] + elems[b], ZERO))
        table.append(row)
    labels = ["0", "1"] + [str(Word(f)) for f in order]
    element_of = {Word(f): i for f, i in ids.items()}
    return FiniteMonoid(table, ONE, ZERO, labels, W, element_of, check=False)


def reverse_monoid(M: FiniteMonoid) -> FiniteMonoid:
    table = [[M.table[b][a] for b in range(M.size)] for a in range(M.size)]
    if M.words is None:
        return FiniteMonoid(table, M.one, M.zero, M.labels, check=False)
    element_of = {reverse(w): i for w, i in M.element_of.items()}
    labels = list(M.labels)
    for w, i in M.element_of.items():
        if w:
            labels[i] = str(reverse(w))
    return FiniteMonoid(table, M.one, M.zero, labels, [reverse(w) for w in M.words],
                        element_of, check=False)


@dataclass(frozen=True)
class Assignment:
    """Letters to monoid elements; printed through element labels."""

    values: tuple  # ((Letter, id), ...)
    labels: tuple = ()

    def as_dict(self) -> dict:
        return dict(self.values)

    def __str__(self):
        lab = lambda i: self.labels[i] if self.labels else str(i)
        return "{" + ", ".join(f"{a} -> {lab(i)}" for a, i in self.values) + "}"


def _assignment(M, mapping: dict) -> Assignment:
    return Assignment(tuple(sorted(mapping.items())), M.labels)


# -- satisfaction -----------------------------------------------------------

def _letter_order(sigma: Identity) -> list[Letter]:
    seen = {}
    for a in sigma.lhs.letters + sigma.rhs.letters:
        seen.setdefault(a, None)
    return list(seen)


def satisfies_exhaustive(M: FiniteMonoid, sigma: Identity) -> Verdict:
    """Try every assignment of elements to letters, in canonical order.

    Subtrees where the fully assigned prefixes of both sides are already
    zero are skipped.
    """
    letters = _letter_order(sigma)
    k = len(letters)
    pos = {a: i for i, a in enumerate(letters)}
    u = [pos[a] for a in sigma.lhs]
    v = [pos[a] for a in sigma.rhs]

    def prefix_lengths(side):
        out, j = [], 0
        for d in range(k + 1):
            while j < len(side) and side[j] < d:
                j += 1
            out.append(j)
        return out

    pu, pv = prefix_lengths(u), prefix_lengths(v)
    t = M.table
    zero = M.zero
    n = M.size
    assign = [0] * k

    def dfs(d, vu, vv):
        if d == k:
            return vu != vv
        du0, du1 = pu[d], pu[d + 1]
        dv0, dv1 = pv[d], pv[d + 1]
        for e in range(n):
            assign[d] = e
            a = vu
            for j in range(du0, du1):
                a = t[a][assign[u[j]]]
            b = vv
            for j in range(dv0, dv1):
                b = t[b][assign[v[j]]]
            if zero is not None and a == zero and b == zero:
                continue
            if dfs(d + 1, a, b):
                return True
        return False

    if dfs(0, M.one, M.one):
        return Verdict.fails(_assignment(M, {letters[i]: assign[i] for i in range(k)}))
    return Verdict.holds()


class _FactorIndex:
    """Letter-interned view of W used by the matching strategy."""

    def __init__(self, M: FiniteMonoid):
        self.words = [w.letters for w in M.words]
        self.all_ends = frozenset((wi, e) for wi, w in enumerate(self.words)
                                  for e in range(len(w) + 1))
        # most disjoint occurrences of each factor inside a single word
        self.max_occ = {}
        for w in self.words:
            for i in range(len(w)):
                for j in range(i + 1, len(w) + 1):
                    f = w[i:j]
                    if self.max_occ.get(f, 0) < len(w):
                        c = _disjoint_count(w, f)
                        if c > self.max_occ.get(f, 0):
                            self.max_occ[f] = c

    def extensions(self, ends):
        """Distinct nonempty s such that (current factor) + s is a factor."""
        seen = set()
        for wi, e in ends:
            w = self.words[wi]
            for j in range(e + 1, len(w) + 1):
                s = w[e:j]
                if s not in seen:
                    seen.add(s)
                    yield s

    def advance(self, ends, s):
        L = len(s)
        words = self.words
        return frozenset((wi, e + L) for wi, e in ends if words[wi][e:e + L] == s)


def _disjoint_count(w: tuple, f: tuple) -> int:
    c, i, L = 0, 0, len(f)
    while i + L <= len(w):
        if w[i:i + L] == f:
            c += 1
            i += L
        else:
            i += 1
    return c


def _common_affixes(u: tuple, v: tuple) -> tuple[int, int]:
    p = 0
    while p < len(u) and p < len(v) and u[p] == v[p]:
        p += 1
    s = 0
    while s < len(u) - p and s < len(v) - p and u[-1 - s] == v[-1 - s]:
        s += 1
    return p, s


def _one_side_violation(idx: _FactorIndex, pat: tuple, other: tuple):
    """Search phi with phi(pat) a factor-or-1 and phi(pat) != phi(other).

    Both words share their first ``p`` and last ``s`` letters, so the
    comparison reduces to the differing middles; it is made as soon as all
    middle letters are bound, and agreeing branches are cut there.
    """
    p, s = _common_affixes(pat, other)
    mid_a, mid_b = pat[p:len(pat) - s], other[p:len(other) - s]
    mid_letters = set(mid_a) | set(mid_b)
    first = {}
    for i, a in enumerate(pat):
        first.setdefault(a, i)
    check_at = max([len(pat) - s] + [first[a] + 1 for a in mid_letters])
    last = {}
    for i, a in enumerate(pat):
        last[a] = i
    # letters whose binding is still needed when standing at position i
    needed = []
    for i in range(len(pat) + 1):
        keep = {a for a, j in last.items() if j >= i}
        if i <= check_at:
            keep |= mid_letters
        needed.append(keep)

    occ = {}
    for a in pat:
        occ[a] = occ.get(a, 0) + 1
    words = idx.words
    max_occ = idx.max_occ

    bind: dict = {}
    failed = set()

    def room_ok(i, ends):
        # later occurrences of bound letters must still fit
        need = 0
        for j in range(i, len(pat)):
            im = bind.get(pat[j])
            if im:
                need += len(im)
        if need == 0:
            return True
        return any(len(words[wi]) - e >= need for wi, e in ends)

    def img(seq):
        out = ()
        for a in seq:
            out += bind[a]
        return out

    def dfs(i, ends, checked):
        if i == check_at and not checked:
            if img(mid_a) == img(mid_b):
                return False
            checked = True
        if i == len(pat):
            return True
        key = (i, ends, checked, tuple(sorted((a, bind[a]) for a in needed[i] if a in bind)))
        if key in failed:
            return False
        if not room_ok(i, ends):
            failed.add(key)
            return False
        a = pat[i]
        if a in bind:
            im = bind[a]
            nxt = idx.advance(ends, im) if im else ends
            if nxt and dfs(i + 1, nxt, checked):
                return True
        else:
            bind[a] = ()
            if dfs(i + 1, ends, checked):
                return True
            k = occ[a]
            for s_ in idx.extensions(ends):
                if k > 1 and max_occ[s_] < k:
                    continue
                bind[a] = s_
                if dfs(i + 1, idx.advance(ends, s_), checked):
                    return True
            del bind[a]
        failed.add(key)
        return False

    if dfs(0, idx.all_ends, False):
        return dict(bind)
    return None


def satisfies_factor_matching(M: FiniteMonoid, sigma: Identity) -> Verdict:
    """Decide M(W) |= u = v by enumerating embeddings of u (and of v) into
    the words of W; assignments that send a letter to 0 only matter when
    the two sides have different contents."""
    if M.words is None:
        raise ValueError("factor matching needs a factor monoid")
    u, v = sigma.lhs.letters, sigma.rhs.letters
    if u == v:
        return Verdict.holds()
    cu, cv = set(u), set(v)
    letters = _letter_order(sigma)
    if cu != cv:
        c = min(cu ^ cv)
        phi = {a: (M.zero if a == c else M.one) for a in letters}
        return Verdict.fails(_assignment(M, phi))
    idx = M._fm
    if idx is None:
        idx = _FactorIndex(M)
        object.__setattr__(M, "_fm", idx)
    for pat, other in ((u, v), (v, u)):
        found = _one_side_violation(idx, pat, other)
        if found is not None:
            phi = {a: M.element_of[Word(found.get(a, ()))] for a in letters}
            if M.evaluate(sigma.lhs, phi) == M.evaluate(sigma.rhs, phi):
                raise AssertionError("factor matching produced a non-witness")
            return Verdict.fails(_assignment(M, phi))
    return Verdict.holds()


STRATEGIES = ("auto", "exhaustive", "factor_matching")


def satisfies(M: FiniteMonoid, sigma: Identity, strategy: str = "auto") -> Verdict:
    if strategy == "auto":
        strategy = "factor_matching" if M.words is not None else "exhaustive"
    if strategy == "exhaustive":
        return satisfies_exhaustive(M, sigma)
    if strategy == "factor_matching":
        return satisfies_factor_matching(M, sigma)
    raise ValueError(f"unknown strategy {strategy!r}")


def satisfies_basis(M: FiniteMonoid, basis, strategy: str = "auto") -> Verdict:
    """Holds/Fails over the instantiated identities; Unknown when all hold
    but the basis has schema families cut at its bound."""
    for sigma in basis.instantiate():
        v = satisfies(M, sigma, strategy)
        if v.is_fails:
            return Verdict.fails(sigma, f"violated under {v.witness}")
    if basis.truncated:
        return Verdict.unknown(f"schemas of {basis.name} instantiated only up to weight {basis.bound}")
    return Verdict.holds()


def satisfies_all(M: FiniteMonoid, sigmas, strategy: str = "auto") -> Verdict:
    return conjoin(satisfies(M, s, strategy) for s in sigmas)


# -- structure --------------------------------------------------------------

def power_sequence(M: FiniteMonoid, a: int) -> tuple[list[int], int]:
    """Powers a^0, a^1, ... up to the first repeat, and the index where the
    cycle starts."""
    seen = {}
    seq = []
    cur = M.one
    while cur not in seen:
        seen[cur] = len(seq)
        seq.append(cur)
        cur = M.table[cur][a]
    return seq, seen[cur]


@dataclass(frozen=True)
class Classification:
    aperiodic: bool
    index: int | None
    central_idempotents: bool


def classify(M: FiniteMonoid) -> Classification:
    aperiodic = True
    index = 1
    t = M.table
    for a in range(M.size):
        seq, start = power_sequence(M, a)
        if len(seq) - start != 1:
            aperiodic = False
            break
        # a^start = a^(start+1); least positive such exponent
        index = max(index, max(start, 1))
    idem = [e for e in range(M.size) if t[e][e] == e]
    central = all(t[e][b] == t[b][e] for e in idem for b in range(M.size))
    return Classification(aperiodic, index if aperiodic else None, central)


def unique_power_exponents(M: FiniteMonoid) -> set[int]:
    """Exponents p >= 1 for which some a has a^p different from every other
    power a^q (q >= 0, q != p)."""
    out = set()
    for a in range(M.size):
        seq, start = power_sequence(M, a)
        out.update(range(1, start))
    return out


def has_nonunit_powers(M: FiniteMonoid) -> bool:
    """Some element none of whose positive powers is the identity."""
    for a in range(M.size):
        seq, start = power_sequence(M, a)
        if start > 0:
            return True
    return False


def submonoid(M: FiniteMonoid, gens: Iterable[int]) -> FiniteMonoid:
    gens = sorted(set(gens))
    elems = {M.one}
    frontier = [M.one]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = M.table[a][g]
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    order = sorted(elems)
    ix = {a: i for i, a in enumerate(order)}
    table = [[ix[M.table[a][b]] for b in order] for a in order]
    zero = ix[M.zero] if M.zero in ix else None
    N = FiniteMonoid(table, ix[M.one], zero, [M.labels[a] for a in order], check=False)
    if zero is None:
        z = N.find_zero()
        if z is not None:
            N = FiniteMonoid(table, ix[M.one], z, N.labels, check=False)
    return N


def _invariants(M: FiniteMonoid) -> list[tuple]:
    t = M.table
    n = M.size
    zero = M.find_zero()
    out = []
    for a in range(n):
        seq, start = power_sequence(M, a)
        out.append((
            a == M.one,
            a == zero,
            t[a][a] == a,
            start, len(seq) - start,
            sum(1 for b in range(n) if t[a][b] == a),
            sum(1 for b in range(n) if t[b][a] == a),
            sum(1 for b in range(n) if t[b][b] == a),
            sum(1 for b in range(n) if zero is not None and t[a][b] == zero),
            sum(1 for b in range(n) if zero is not None and t[b][a] == zero),
        ))
    return out


def _generators(M: FiniteMonoid, inv) -> list[int]:
    # rare invariants first: fewer candidates to branch over
    freq = {}
    for x in inv:
        freq[x] = freq.get(x, 0) + 1
    order = sorted(range(M.size), key=lambda a: (freq[inv[a]], a))
    gens, reach = [], {M.one}
    for a in order:
        if a in reach:
            continue
        gens.append(a)
        reach = set(submonoid_elements(M, gens))
        if len(reach) == M.size:
            break
    return gens


def submonoid_elements(M: FiniteMonoid, gens) -> set[int]:
    elems = {M.one}
    frontier = [M.one]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = M.table[a][g]
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return elems


def find_isomorphism(M: FiniteMonoid, N: FiniteMonoid) -> dict | None:
    """A table isomorphism M -> N, by backtracking over generator images
    filtered by element invariants."""
    if M.size != N.size:
        return None
    im, inn = _invariants(M), _invariants(N)
    if sorted(im) != sorted(inn):
        return None
    gens = _generators(M, im)
    tm, tn = M.table, N.table

    def extend(f, used, gi):
        # propagate f along right multiplication by the generators fixed so far
        f = dict(f)
        used = set(used)
        queue = list(f)
        fixed = gens[:gi]
        while queue:
            a = queue.pop()
            for g in fixed:
                b = tm[a][g]
                fb = tn[f[a]][f[g]]
                if b in f:
                    if f[b] != fb:
                        return None
                elif fb in used or im[b] != inn[fb]:
                    return None
                else:
                    f[b] = fb
                    used.add(fb)
                    queue.append(b)
        return f, used

    def search(f, used, gi):
        if gi == len(gens):
            return f
        g = gens[gi]
        if g in f:
            res = extend(f, used, gi + 1)
            return None if res is None else search(res[0], res[1], gi + 1)
        for c in range(N.size):
            if c in used or inn[c] != im[g]:
                continue
            f2 = dict(f)
            f2[g] = c
            res = extend(f2, used | {c}, gi + 1)
            if res is not None:
                out = search(res[0], res[1], gi + 1)
                if out is not None:
                    return out
        return None

    f = search({M.one: N.one}, {N.one}, 0)
    if f is None or len(f) != M.size:
        return None
    for a, b in product(range(M.size), repeat=2):
        if f[tm[a][b]] != tn[f[a]][f[b]]:
            return None
    return f


def isomorphic(M: FiniteMonoid, N: FiniteMonoid) -> bool:
    return find_isomorphism(M, N) is not None
