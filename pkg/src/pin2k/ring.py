"""Exact arithmetic in the representation ring of Pin(2).

The ring is Z[w, z] / (w^2 - 2w, z*w - 2w).  Its additive group is free
abelian on {1, z, z^2, ...} and w, so every element has a unique normal
form  lam*w + P(z)  with integer lam and integer polynomial P.  Both
relations act as rewrite rules (w^2 -> 2w, z*w -> 2w), which makes
normalization a single substitution pass; all coefficients are exact
Python integers, so powers like 2^k never overflow.

The two generator sets {w, z} and {c~, h} are related by w = 1 - c~ and
z = 2 - h.  The parser accepts both; storage is always in {w, z}.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def _strip(poly):
    """Drop trailing zero coefficients; () is the zero polynomial."""
    poly = tuple(int(c) for c in poly)
    n = len(poly)
    while n and poly[n - 1] == 0:
        n -= 1
    return poly[:n]


def _poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _strip(out)


def _poly_neg(p):
    return tuple(-c for c in p)


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _strip(out)


def _poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class RingElem:
    """Normal form lam*w + P(z); poly holds P's coefficients, low degree first."""

    wcoef: int = 0
    poly: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "wcoef", int(self.wcoef))
        object.__setattr__(self, "poly", _strip(self.poly))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self):
        """Degree of the polynomial part; -1 stands in for the zero polynomial."""
        return len(self.poly) - 1

    def is_zero(self):
        return self.wcoef == 0 and not self.poly

    def constant_value(self):
        """The integer n if this element is the constant n, else None."""
        if self.wcoef == 0 and len(self.poly) <= 1:
            return self.poly[0] if self.poly else 0
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElem(self.wcoef + other.wcoef, _poly_add(self.poly, other.poly))

    __radd__ = __add__

    def __neg__(self):
        return RingElem(-self.wcoef, _poly_neg(self.poly))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        # (lam*w + P)(mu*w + Q) = (2*lam*mu + lam*Q(2) + mu*P(2))*w + P*Q,
        # using w^2 = 2w and w*z^k = 2^k*w.
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        lam, mu = self.wcoef, other.wcoef
        wpart = 2 * lam * mu + lam * _poly_eval(other.poly, 2) + mu * _poly_eval(self.poly, 2)
        return RingElem(wpart, _poly_mul(self.poly, other.poly))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        acc = ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- homomorphisms and the w-line ---------------------------------------

    def augment(self):
        """Rank homomorphism to Z: both generators w and z map to 0."""
        return self.poly[0] if self.poly else 0

    def w_multiplier(self):
        """The unique integer c with w * self == c * w, namely 2*lam + P(2)."""
        return 2 * self.wcoef + _poly_eval(self.poly, 2)

    def restrict_s1(self):
        """Restriction to the circle subgroup: w -> 0, z -> 2 - theta - 1/theta."""
        zim = LaurentElem.make({0: 2, 1: -1, -1: -1})
        acc = LaurentElem.make({0: 1})
        result = LaurentElem.make({})
        for c in self.poly:
            if c:
                result = result + acc.scale(c)
            acc = acc * zim
        return result

    # -- formatting ----------------------------------------------------------

    def __str__(self):
        terms = []
        for i, a in enumerate(self.poly):
            if a:
                terms.append((a, _z_monomial(i)))
        if self.wcoef:
            terms.append((self.wcoef, "w"))
        if not terms:
            return "0"
        pieces = []
        for idx, (a, mono) in enumerate(terms):
            mag = abs(a)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                pieces.append(body if a > 0 else "-" + body)
            else:
                pieces.append(("+ " if a > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"RingElem({self})"


def _z_monomial(i):
    if i == 0:
        return ""
    if i == 1:
        return "z"
    return f"z^{i}"


def _coerce(value):
    if isinstance(value, RingElem):
        return value
    if isinstance(value, int):
        return RingElem(0, (value,))
    return NotImplemented


ZERO = RingElem()
ONE = RingElem(0, (1,))
W = RingElem(1, ())
Z = RingElem(0, (0, 1))


def const(n):
    return RingElem(0, (n,))


def z_pow(k):
    if k < 0:
        raise ValueError("z exponent must be nonnegative")
    return RingElem(0, (0,) * k + (1,))


def w_pow(k):
    """w^k in normal form: 1 for k = 0, else 2^(k-1) * w."""
    if k < 0:
        raise ValueError("w exponent must be nonnegative")
    return ONE if k == 0 else RingElem(2 ** (k - 1), ())


# -- the alternate generator set {c~, h} -------------------------------------

CTILDE = ONE - W
H = const(2) - Z


def from_ch(ctilde_coef, h_poly):
    """Element given as ctilde_coef * c~ + Q(h), via c~ = 1 - w, h = 2 - z."""
    acc = ZERO
    for c in reversed(tuple(h_poly)):
        acc = acc * H + const(c)
    return acc + ctilde_coef * CTILDE


def to_ch(x):
    """Inverse basis change: the unique (mu, Q) with x = mu*c~ + Q(h).

    From x = lam*w + P(z): mu = -lam and Q(u) = P(2 - u) + lam.
    """
    comp = ()  # Horner evaluation of P at the polynomial 2 - u
    for c in reversed(x.poly):
        comp = _poly_add(_poly_mul(comp, (2, -1)), (c,))
    q = _poly_add(comp, (x.wcoef,))
    return -x.wcoef, q


@dataclass(frozen=True)
class LaurentElem:
    """Finitely supported integer Laurent polynomial in theta."""

    terms: tuple = field(default=())  # sorted ((exponent, coeff), ...), coeff != 0

    @staticmethod
    def make(mapping):
        items = tuple(sorted((e, c) for e, c in mapping.items() if c))
        return LaurentElem(items)

    def as_dict(self):
        return dict(self.terms)

    def scale(self, n):
        if n == 0:
            return LaurentElem()
        return LaurentElem(tuple((e, n * c) for e, c in self.terms))

    def __add__(self, other):
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentElem.make(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = e1 + e2
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentElem.make(out)

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.terms):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "theta"
            else:
                mono = f"theta^{e}"
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            if idx == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)


# -- parsing ------------------------------------------------------------------


class ParseError(ValueError):
    """Syntax error in the element grammar; offset is a byte offset."""

    def __init__(self, message, text, pos):
        self.offset = len(text[:pos].encode("utf-8"))
        super().__init__(f"{message} at byte {self.offset}")


_IDENTS = {"w": W, "z": Z, "c~": CTILDE, "h": H}


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.items = []  # (kind, value, position)
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.items.append(("int", int(text[i:j]), i))
                i = j
            elif ch == "c" and i + 1 < n and text[i + 1] == "~":
                self.items.append(("ident", "c~", i))
                i += 2
            elif ch in ("w", "z", "h"):
                self.items.append(("ident", ch, i))
                i += 1
            elif ch in "+-*^()":
                self.items.append((ch, ch, i))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", text, i)
        self.items.append(("end", None, n))
        self.pos = 0

    def peek(self):
        return self.items[self.pos]

    def next(self):
        tok = self.items[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", self.text, tok[2])
        return tok


def parse(text):
    """Parse an expression over integers, w, z, c~, h with + - * ^ and parens."""
    toks = _Tokens(text)
    value = _parse_sum(toks)
    tok = toks.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", text, tok[2])
    return value


def _parse_sum(toks):
    value = _parse_product(toks)
    while toks.peek()[0] in ("+", "-"):
        op = toks.next()[0]
        rhs = _parse_product(toks)
        value = value + rhs if op == "+" else value - rhs
    return value


def _parse_product(toks):
    value = _parse_unary(toks)
    while toks.peek()[0] == "*":
        toks.next()
        value = value * _parse_unary(toks)
    return value


def _parse_unary(toks):
    if toks.peek()[0] == "-":
        toks.next()
        return -_parse_unary(toks)
    return _parse_power(toks)


def _parse_power(toks):
    value = _parse_atom(toks)
    while toks.peek()[0] == "^":
        toks.next()
        tok = toks.expect("int")
        value = value ** tok[1]
    return value


def _parse_atom(toks):
    kind, val, pos = toks.next()
    if kind == "int":
        return const(val)
    if kind == "ident":
        return _IDENTS[val]
    if kind == "(":
        value = _parse_sum(toks)
        toks.expect(")")
        return value
    raise ParseError(f"unexpected token {val!r}", toks.text, pos)
