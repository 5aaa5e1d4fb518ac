"""Text forms for words, identities, bases and monoids used by the CLI and
the claims manifest.

  word      x y x | x^2 y | a(1,0;perm=1) | c(0,0,3;perm=3,2,1) | vxe(0,0;xi=2,1;eta=1,2)
  identity  <word> = <word> | alpha | beta | delta(2,1) | a_pair(1,1;perm=2,1) | named(x2y=yx2)
  basis     A | N | P2 | Q2@3 | Aprime@2 | dual:R2 | basis A | {x y = y x; x^2 = x}
  monoid    M(x y; x^2) | M(1) | trivial | rev:M(x y) | M(x y s x z y t z)[x, z, y s, y t]
            | file:<path> | free(N; x y z x y)
"""

from __future__ import annotations

import re

from .families import (ParameterError, Perm, VarietyBasis, a_pq_word, a_word,
                       c_word, d_word, finite_basis, make_identity, v_st_word,
                       v_xieta_word, variety_basis)
from .identities import Identity
from .monoids import FiniteMonoid, factor_monoid, reverse_monoid, submonoid, trivial_monoid
from .words import Word


class ParseError(ValueError):
    pass


_CALL = re.compile(r"^\s*([a-z_]+)\s*\((.*)\)\s*$", re.S)


def split_top(text: str, sep: str = ";") -> list[str]:
    """Split on sep outside any brackets."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out]


def _call_args(body: str):
    parts = split_top(body)
    head = [int(t) for t in parts[0].split(",") if t.strip()] if parts[0] else []
    kw = {}
    for p in parts[1:]:
        if "=" in p:
            k, v = p.split("=", 1)
            kw[k.strip()] = v.strip()
        else:
            kw["perm"] = p
    return head, kw


def _perm(kw, key="perm"):
    return Perm.parse(kw[key]) if key in kw else None


_WORD_FAMILIES = {
    "a": lambda h, kw: a_word(*h, _perm(kw)),
    "aprime": lambda h, kw: a_word(*h, _perm(kw), "prime"),
    "ahat": lambda h, kw: a_word(*h, _perm(kw), "hat"),
    "apq": lambda h, kw: a_pq_word(*h, _perm(kw), int(kw["p"]), int(kw["q"])),
    "c": lambda h, kw: c_word(*h, _perm(kw)),
    "cprime": lambda h, kw: c_word(*h, _perm(kw), "prime"),
    "d": lambda h, kw: d_word(*h, _perm(kw)),
    "dprime": lambda h, kw: d_word(*h, _perm(kw), "prime"),
    "vst": lambda h, kw: v_st_word(h[0], _perm(kw), int(kw["s"]), int(kw["t"])),
    "vxe": lambda h, kw: v_xieta_word(*h, _perm(kw, "xi"), _perm(kw, "eta"), _perm(kw)),
}


def parse_word(text: str) -> Word:
    m = _CALL.match(text)
    if m and m.group(1) in _WORD_FAMILIES:
        head, kw = _call_args(m.group(2))
        try:
            return _WORD_FAMILIES[m.group(1)](head, kw)
        except (TypeError, KeyError) as exc:
            raise ParseError(f"bad arguments in {text!r}") from exc
    try:
        return Word.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_identity(text: str) -> Identity:
    text = text.strip()
    m = _CALL.match(text)
    if text in ("alpha", "beta"):
        return make_identity(text)
    if m and m.group(1) in ("delta", "a_pair", "c_pair", "d_pair", "named", "power"):
        name, body = m.groups()
        if name == "named":
            return make_identity("named", body.strip())
        head, kw = _call_args(body)
        if name == "power":
            return Identity(Word.parse(f"x^{head[0]}"), Word.parse(f"x^{head[1]}"))
        if name == "delta":
            return make_identity("delta", *head)
        return make_identity(name, *head, _perm(kw))
    sides = split_top(text, "=")
    if len(sides) != 2:
        raise ParseError(f"identity needs exactly one '=': {text!r}")
    return Identity(parse_word(sides[0]), parse_word(sides[1]))


_BASIS = re.compile(r"^(dual:)?(P|Q|R|Aprime|A|N|SL|T)(\d+)?(?:@(\d+))?$")


def parse_basis(text: str, bound: int | None = None) -> VarietyBasis:
    text = text.strip()
    if text.startswith("basis"):
        text = text[5:].strip()
    if text.startswith("{") and text.endswith("}"):
        ids = [parse_identity(s) for s in split_top(text[1:-1]) if s]
        return finite_basis(text, ids)
    m = _BASIS.match(text.replace(" ", ""))
    if not m:
        raise ParseError(f"unknown basis {text!r}")
    dual, name, n, b = m.groups()
    b = int(b) if b else (bound if bound is not None else 3)
    try:
        B = variety_basis(name, int(n) if n else 1, b)
    except ParameterError as exc:
        raise ParseError(str(exc)) from exc
    return B.dual() if dual else B


def parse_monoid(text: str) -> FiniteMonoid:
    text = text.strip()
    if text == "trivial":
        return trivial_monoid()
    if text.startswith("rev:"):
        return reverse_monoid(parse_monoid(text[4:]))
    if text.startswith("file:"):
        with open(text[5:]) as fh:
            return FiniteMonoid.from_text(fh.read())
    if text.startswith("free("):
        from .deduction import free_rees_quotient
        body = text[5:text.rindex(")")]
        parts = split_top(body)
        M = free_rees_quotient([parse_word(w) for w in parts[1:]], parse_basis(parts[0]))
        if M is None:
            raise ParseError(f"{text}: an orbit did not close within the caps")
        return M
    if not text.startswith("M("):
        raise ParseError(f"not a monoid literal: {text!r}")
    depth, close = 0, None
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and ch == ")":
            close = i
            break
    if close is None:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    words = [parse_word(w) for w in split_top(text[2:close])]
    M = factor_monoid(words)
    rest = text[close + 1:].strip()
    if rest:
        if not (rest.startswith("[") and rest.endswith("]")):
            raise ParseError(f"trailing text after monoid literal: {rest!r}")
        gens = [M.id_of(Word.parse(g)) for g in split_top(rest[1:-1], ",") if g]
        M = submonoid(M, gens)
    return M


def parse_variety(text: str):
    """A monoid literal or a basis."""
    t = text.strip()
    if t.startswith(("M(", "trivial", "rev:", "file:", "free(")):
        return parse_monoid(t)
    return parse_basis(t)
