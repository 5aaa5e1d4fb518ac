"""Parametric permutations, words, identities and variety bases.

Permutations act on the right: ``rho(i)`` is the image of ``i`` (1-based).
The permutation group on the empty set is identified with the one on a
singleton, so ``Perm(())`` and ``Perm((1,))`` are both accepted wherever
zero letters are permuted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator

from .identities import Identity, dual_identity
from .words import Letter, Word, delete, reverse


class ParameterError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParameterError(f"not a permutation: {images}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    def __str__(self):
        return ",".join(map(str, self.images)) if self.images else "e"

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Perm":
        text = text.strip()
        if text in ("", "e"):
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))


def _fit(rho: Perm | None, n: int, what: str = "permutation") -> Perm:
    """Check rho is in S_n, honouring S_0 = S_1."""
    if rho is None:
        return Perm.identity(n)
    if n <= 1 and len(rho) <= 1:
        return Perm.identity(n)
    if len(rho) != n:
        raise ParameterError(f"{what} must lie in S_{n}, got {rho}")
    return rho


def all_perms(n: int) -> list[Perm]:
    return [Perm(p) for p in permutations(range(1, n + 1))]


def is_nm_perm(rho: Perm, n: int, m: int) -> bool:
    if len(rho) != n + m and not (n + m == 0 and len(rho) <= 1):
        return False
    low = lambda v: 1 <= v <= n
    high = lambda v: n < v <= n + m
    for i in range(1, n + m):
        a, b = rho(i), rho(i + 1)
        if not ((low(a) and high(b)) or (low(b) and high(a))):
            return False
    return True


def enum_nm_perms(n: int, m: int) -> list[Perm]:
    """All (n,m)-permutations: images alternate between {1..n} and {n+1..n+m}."""
    if abs(n - m) > 1:
        return []
    if n + m == 0:
        return [Perm(())]
    out = []
    starts = []
    if n >= m:
        starts.append(True)   # first image low
    if m >= n:
        starts.append(False)
    lows = list(permutations(range(1, n + 1)))
    highs = list(permutations(range(n + 1, n + m + 1)))
    for low_first in starts:
        for lo, hi in product(lows, highs):
            seq, li, hj = [], iter(lo), iter(hi)
            for pos in range(n + m):
                take_low = (pos % 2 == 0) == low_first
                seq.append(next(li) if take_low else next(hj))
            out.append(Perm(tuple(seq)))
    return sorted(out)


def lift_theta_prime(theta: Perm, k: int) -> Perm:
    """Lift theta in S_{k,k} (odd positions low) to a (k+2,k+2)-permutation."""
    if k < 2:
        raise ParameterError("lift_theta_prime needs k >= 2")
    if len(theta) != 2 * k:
        raise ParameterError(f"theta must lie in S_{2 * k}")
    for i in range(1, 2 * k + 1):
        v = theta(i)
        if (i % 2 == 1 and not 1 <= v <= k) or (i % 2 == 0 and not k < v <= 2 * k):
            raise ParameterError(f"theta {theta} does not send odd positions low")
    img = {1: theta(1) + 1, 2: theta(2) + 3, 3: k + 2, 4: 2 * k + 4}
    for i in range(5, 2 * k, 2):
        img[i] = theta(i - 2) + 1
    for i in range(6, 2 * k + 1, 2):
        img[i] = theta(i - 2) + 3
    img[2 * k + 1] = 1
    img[2 * k + 2] = k + 3
    img[2 * k + 3] = theta(2 * k - 1) + 1
    img[2 * k + 4] = theta(2 * k) + 3
    return Perm(tuple(img[i] for i in range(1, 2 * k + 5)))


def insert_theta_qr(theta: Perm, q: int, r: int) -> Perm:
    """Send q to r and shift the remaining images of theta around it."""
    p = len(theta)
    if not (1 <= q <= p + 1 and 1 <= r <= p + 1):
        raise ParameterError(f"q, r must lie in 1..{p + 1}")
    shift = lambda v: v if v < r else v + 1
    out = [shift(theta(i)) for i in range(1, q)]
    out.append(r)
    out.extend(shift(theta(i - 1)) for i in range(q + 1, p + 2))
    return Perm(tuple(out))


# -- words ---------------------------------------------------------------

def z(i, primes=0):
    return Letter("z", i, primes)


def t_(i, primes=0):
    return Letter("t", i, primes)


X, Y, T = Letter("x"), Letter("y"), Letter("t")


def _zt(rng, primes=0):
    out = []
    for i in rng:
        out += [z(i, primes), t_(i, primes)]
    return out


def _tz(rng, primes=0):
    out = []
    for i in rng:
        out += [t_(i, primes), z(i, primes)]
    return out


def a_word(n: int, m: int, rho: Perm | None = None, variant: str = "plain") -> Word:
    rho = _fit(rho, n + m)
    head = _zt(range(1, n + 1))
    mid = [z(rho(i)) for i in range(1, n + m + 1)]
    tail = _tz(range(n + 1, n + m + 1))
    if variant == "plain":
        return Word(head + [X] + mid + [X] + tail)
    if variant == "prime":
        return Word(head + [X, X] + mid + tail)
    if variant == "hat":
        return delete(a_word(n, m, rho), X)
    raise ParameterError(f"unknown a-variant {variant!r}")


def a_pq_word(n: int, m: int, rho: Perm | None, p: int, q: int) -> Word:
    rho = _fit(rho, n + m)
    if not 0 <= p <= q <= n + m:
        raise ParameterError("need 0 <= p <= q <= n+m")
    zs = [z(rho(i)) for i in range(1, n + m + 1)]
    return Word(_zt(range(1, n + 1)) + zs[:p] + [X] + zs[p:q] + [X] + zs[q:]
                + _tz(range(n + 1, n + m + 1)))


def c_word(n: int, m: int, k: int, tau: Perm | None = None, variant: str = "plain") -> Word:
    tau = _fit(tau, n + m + k)
    if variant == "plain":
        lead = [X, Y, T]
    elif variant == "prime":
        lead = [Y, X, T]
    else:
        raise ParameterError(f"unknown c-variant {variant!r}")
    return Word(_zt(range(1, n + 1)) + lead + _zt(range(n + 1, n + m + 1)) + [X]
                + [z(tau(i)) for i in range(1, n + m + k + 1)] + [Y]
                + _tz(range(n + m + 1, n + m + k + 1)))


def d_word(n: int, m: int, k: int, tau: Perm | None = None, variant: str = "plain") -> Word:
    return reverse(c_word(n, m, k, tau, variant))


def check_vst_perm(n: int, rho: Perm) -> None:
    if n < 3 or len(rho) != 2 * n:
        raise ParameterError("v_st needs n >= 3 and rho in S_2n")
    if not all(2 <= rho(i) <= n - 1 for i in (1, 2 * n - 1)):
        raise ParameterError("need 2 <= 1rho, (2n-1)rho <= n-1")
    if not all(n + 2 <= rho(i) <= 2 * n - 1 for i in (2, 2 * n)):
        raise ParameterError("need n+2 <= 2rho, (2n)rho <= 2n-1")


def v_st_parts(n: int, rho: Perm) -> tuple[list, list, list]:
    check_vst_perm(n, rho)
    r1, r2, rl1, rl = rho(1), rho(2), rho(2 * n - 1), rho(2 * n)
    p = (_zt(range(1, r1 + 1), 2) + _zt(range(1, rl1 + 1), 1) + _zt(range(1, n + 1))
         + _zt(range(rl1 + 1, n + 1), 1) + _zt(range(r1 + 1, n + 1), 2))
    q = ([z(r1), z(r2)] + [z(rho(i), 1) for i in range(1, 2 * n + 1)]
         + [z(rho(i)) for i in range(3, 2 * n - 1)]
         + [z(rho(i), 2) for i in range(1, 2 * n + 1)] + [z(rl1), z(rl)])
    # the suffix keeps the t-before-z order of a_{3n,3n}
    r = (_tz(range(n + 1, r2 + 1), 2) + _tz(range(n + 1, rl + 1), 1)
         + _tz(range(n + 1, 2 * n + 1)) + _tz(range(rl + 1, 2 * n + 1), 1)
         + _tz(range(r2 + 1, 2 * n + 1), 2))
    return p, q, r


def v_st_word(n: int, rho: Perm, s: int, t: int) -> Word:
    p, q, r = v_st_parts(n, rho)
    if not 0 <= s <= t <= 6 * n:
        raise ParameterError("need 0 <= s <= t <= 6n")
    return Word(p + q[:s] + [X] + q[s:t] + [X] + q[t:] + r)


def pi_tau_perms(n: int, m: int, rho: Perm | None = None) -> tuple[Perm, Perm]:
    """(pi, tau) in S_{2k+1}, k = n+m+1, built from rho in S_{n+m,n+m+1}."""
    choices = enum_nm_perms(n + m, n + m + 1)
    if rho is None:
        rho = choices[0]
    elif rho not in choices:
        raise ParameterError(f"rho must be an ({n + m},{n + m + 1})-permutation")
    k = n + m + 1
    pi = insert_theta_qr(insert_theta_qr(rho, 1, k), 2 * k + 1, 2 * k + 1)
    tau = insert_theta_qr(insert_theta_qr(rho, 1, 2 * k), 2 * k + 1, k)
    return pi, tau


def v_xieta_word(n: int, m: int, xi: Perm, eta: Perm, rho: Perm | None = None) -> Word:
    for s in (xi, eta):
        if len(s) != 2:
            raise ParameterError("xi, eta must lie in S_2")
    pi, tau = pi_tau_perms(n, m, rho)
    k = n + m + 1
    a = lambda i: Letter("a", i)
    b = lambda i: Letter("b", i)
    xs = lambda i: Letter("x", i)
    ys = lambda i: Letter("y", i)
    p = _zt(range(1, n + 1)) + _zt(range(1, n + 1), 1) + _zt(range(1, n + 1), 2)
    mid = [a(1), b(1), xs(xi(1)), xs(xi(2)), ys(eta(1)), ys(eta(2)), b(2), a(2)]
    q = [T] + _zt(range(n + 1, k)) + _zt(range(n + 1, k), 1) + _zt(range(n + 1, k), 2)
    r = ([xs(1), z(pi(1), 1), a(1)] + [z(pi(i), 1) for i in range(2, 2 * k + 1)]
         + [b(2), z(pi(2 * k + 1), 1), xs(2)]
         + [z(tau(i)) for i in range(1, 2 * k + 2)]
         + [ys(1), z(pi(1), 2), b(1)] + [z(pi(i), 2) for i in range(2, 2 * k + 1)]
         + [a(2), z(pi(2 * k + 1), 2), ys(2)])
    s = _tz(range(k, 2 * k + 2)) + _tz(range(k, 2 * k + 2), 1) + _tz(range(k, 2 * k + 2), 2)
    return Word(p + mid + q + r + s)


# -- identities ----------------------------------------------------------

ALPHA = Identity.parse("x z y t x y = x z y t y x")
BETA = Identity.parse("x z x y t y = x z y x t y")

NAMED = {
    "alpha": ALPHA,
    "beta": BETA,
    "xyzxy=yxzxy": Identity.parse("x y z x y = y x z x y"),
    "xyzxy=xyzyx": Identity.parse("x y z x y = x y z y x"),
    "ztxzx=xzxtz": Identity.parse("z t x z x = x z x t z"),
    "x2y=yx2": Identity.parse("x^2 y = y x^2"),
    "x2y=xyx": Identity.parse("x^2 y = x y x"),
    "xyxzx=x2yz": Identity.parse("x y x z x = x^2 y z"),
    "xy=yx": Identity.parse("x y = y x"),
}


def delta(n: int, m: int) -> Identity:
    """x^m t1 x t2 x ... tn x = x^(m+n) t1 ... tn."""
    lhs = [X] * m
    for i in range(1, n + 1):
        lhs += [t_(i), X]
    rhs = [X] * (m + n) + [t_(i) for i in range(1, n + 1)]
    return Identity(Word(lhs), Word(rhs))


def power_id(n: int, m: int) -> Identity:
    return Identity(Word([X] * n), Word([X] * m))


def make_identity(schema: str, *args, **kw) -> Identity:
    if schema == "alpha":
        return ALPHA
    if schema == "beta":
        return BETA
    if schema == "delta":
        return delta(*args)
    if schema == "a_pair":
        n, m, rho = args
        return Identity(a_word(n, m, rho), a_word(n, m, rho, "prime"))
    if schema == "c_pair":
        n, m, k, tau = args
        return Identity(c_word(n, m, k, tau), c_word(n, m, k, tau, "prime"))
    if schema == "d_pair":
        n, m, k, tau = args
        return Identity(d_word(n, m, k, tau), d_word(n, m, k, tau, "prime"))
    if schema == "named":
        (tag,) = args
        try:
            return NAMED[tag]
        except KeyError:
            raise ParameterError(f"unknown identity tag {tag!r}") from None
    raise ParameterError(f"unknown identity schema {schema!r}")


def make_word(family: str, *args) -> Word:
    builders = {
        "a": lambda n, m, rho=None: a_word(n, m, rho),
        "aprime": lambda n, m, rho=None: a_word(n, m, rho, "prime"),
        "ahat": lambda n, m, rho=None: a_word(n, m, rho, "hat"),
        "apq": a_pq_word,
        "c": lambda n, m, k, tau=None: c_word(n, m, k, tau),
        "cprime": lambda n, m, k, tau=None: c_word(n, m, k, tau, "prime"),
        "d": lambda n, m, k, tau=None: d_word(n, m, k, tau),
        "dprime": lambda n, m, k, tau=None: d_word(n, m, k, tau, "prime"),
        "vst": v_st_word,
        "vxe": v_xieta_word,
    }
    if family not in builders:
        raise ParameterError(f"unknown word family {family!r}")
    return builders[family](*args)


# -- bases ---------------------------------------------------------------

@dataclass(frozen=True)
class Schema:
    family: str            # "a_pair" | "c_pair" | "d_pair" | "a_pair_nm"
    dual: bool = False

    def instances(self, bound: int) -> Iterator[tuple[int, Identity]]:
        """(weight, identity) for every instance of weight <= bound."""
        if self.family in ("a_pair", "a_pair_nm"):
            for w in range(bound + 1):
                for k in range(w + 1):
                    l = w - k
                    rhos = enum_nm_perms(k, l) if self.family == "a_pair_nm" else all_perms(k + l)
                    for rho in rhos:
                        yield w, self._d(make_identity("a_pair", k, l, rho))
        else:
            for w in range(bound + 1):
                for k in range(w + 1):
                    for l in range(w - k + 1):
                        m = w - k - l
                        for tau in all_perms(k + l + m):
                            yield w, self._d(make_identity(self.family, k, l, m, tau))

    def _d(self, sigma):
        return dual_identity(sigma) if self.dual else sigma


@dataclass(frozen=True)
class VarietyBasis:
    name: str
    finite_ids: tuple = ()
    schemas: tuple = ()
    bound: int = 3

    @property
    def truncated(self) -> bool:
        return bool(self.schemas)

    def instantiate(self) -> list[Identity]:
        out, seen = [], set()
        for sigma in list(self.finite_ids) + [s for sc in self.schemas
                                              for _, s in sc.instances(self.bound)]:
            if sigma.trivial or sigma in seen or sigma.swap() in seen:
                continue
            seen.add(sigma)
            out.append(sigma)
        return out

    def dual(self) -> "VarietyBasis":
        name = self.name[5:] if self.name.startswith("dual:") else f"dual:{self.name}"
        return VarietyBasis(name, tuple(dual_identity(s) for s in self.finite_ids),
                            tuple(Schema(s.family, not s.dual) for s in self.schemas),
                            self.bound)

    def __str__(self):
        return self.name


def variety_basis(name: str, n: int = 1, bound: int = 3) -> VarietyBasis:
    if name.startswith("dual:"):
        return variety_basis(name[5:], n, bound).dual()
    x2y = NAMED["x2y=yx2"]
    if name in ("P", "Q", "R") and n < 1:
        raise ParameterError(f"{name}_n needs n >= 1")
    if name == "P":
        return VarietyBasis(f"P{n}", (power_id(n, n + 1), x2y),
                            (Schema("a_pair"), Schema("c_pair"), Schema("d_pair")), bound)
    if name == "Q":
        xny = Identity(Word([X] * n + [Y]), Word([Y] + [X] * n))
        return VarietyBasis(f"Q{n}", (power_id(n, n + 1), xny, NAMED["x2y=xyx"]), (), bound)
    if name == "R":
        return VarietyBasis(f"R{n}", (power_id(n, n + 1), x2y, ALPHA, BETA), (), bound)
    if name == "A":
        return VarietyBasis("A", (x2y,), (), bound)
    if name == "Aprime":
        return VarietyBasis("Aprime", (x2y,), (Schema("a_pair_nm"),), bound)
    if name == "N":
        return VarietyBasis("N", (power_id(2, 3), x2y, NAMED["xyxzx=x2yz"], ALPHA, BETA), (), bound)
    if name == "SL":
        return VarietyBasis("SL", (power_id(2, 1), NAMED["xy=yx"]), (), bound)
    if name == "T":
        return VarietyBasis("T", (Identity(Word([X]), Word()),), (), bound)
    raise ParameterError(f"unknown basis {name!r}")


def finite_basis(name: str, ids) -> VarietyBasis:
    return VarietyBasis(name, tuple(ids))
