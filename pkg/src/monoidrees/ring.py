"""Exact coefficient fields and sparse bigraded polynomials in K[t, X].

A polynomial lives in K[t1..tn, X1..X_{n+1}].  Monomials are exponent tuples
of length 2n+1, t-block first.  The canonical term order is graded lex with
t1 > ... > tn > X1 > ... > X_{n+1}.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold

from .errors import ArityMismatch, FieldMismatch, ParseError, PreconditionError


# ---------------------------------------------------------------------------
# Coefficient fields
# ---------------------------------------------------------------------------


class RationalField:
    """The rationals.  Integral values are kept as ``int`` for speed."""

    characteristic = 0

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "qq"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def reduce(self, x):
        if type(x) is int:
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, int):
            return int(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def convert(self, x):
        if isinstance(x, str):
            return self.reduce(Fraction(x))
        return self.reduce(x)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return self.reduce(Fraction(a) / b)

    def inv(self, a):
        return self.div(1, a)

    def random_element(self, rng, bound=9):
        return rng.randint(-bound, bound)

    def to_str(self, a):
        return str(a)


class PrimeField:
    """Residues modulo a prime p < 2**31, stored in [0, p)."""

    def __init__(self, p):
        p = int(p)
        if not 2 <= p < 2**31 or not _is_prime(p):
            raise ValueError(f"{p} is not a prime below 2^31")
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"GF({self.p})"

    def __str__(self):
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def reduce(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def convert(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction) and x.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {self.p}")
        return self.reduce(x)

    def div(self, a, b):
        b %= self.p
        if b == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return self.div(1, a)

    def random_element(self, rng, bound=None):
        return rng.randrange(self.p)

    def to_str(self, a):
        # symmetric representative keeps small negatives readable
        return str(a - self.p if a > self.p // 2 else a)


def _is_prime(p):
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if p % q == 0:
            return p == q
    return all(p % q for q in range(17, math.isqrt(p) + 1, 2))


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def parse_field(text):
    """``"qq"`` or ``"fp:<prime>"``."""
    text = text.strip().lower()
    if text in ("qq", "q"):
        return QQ
    if text.startswith("fp:"):
        try:
            return PrimeField(int(text[3:]))
        except ValueError as exc:
            raise ValueError(f"bad field {text!r}: {exc}") from None
    raise ValueError(f"unknown field {text!r}; expected 'qq' or 'fp:<prime>'")


# ---------------------------------------------------------------------------
# Monomials and bidegrees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bidegree:
    t_deg: int
    X_deg: int

    def __iter__(self):
        return iter((self.t_deg, self.X_deg))

    def __le__(self, other):
        return self.t_deg <= other.t_deg and self.X_deg <= other.X_deg

    def __ge__(self, other):
        return other <= self

    def __add__(self, other):
        return Bidegree(self.t_deg + other.t_deg, self.X_deg + other.X_deg)

    def __sub__(self, other):
        return Bidegree(self.t_deg - other.t_deg, self.X_deg - other.X_deg)

    def __str__(self):
        return f"({self.t_deg},{self.X_deg})"


def term_key(mono):
    """Sort key realising graded lex; larger key = larger monomial."""
    return (sum(mono), mono)


def monomials_of_degree(nvars, deg):
    """All exponent vectors of length ``nvars`` and total degree ``deg``, lex descending."""
    if nvars == 0:
        return [()] if deg == 0 else []
    if nvars == 1:
        return [(deg,)]
    out = []
    for first in range(deg, -1, -1):
        for rest in monomials_of_degree(nvars - 1, deg - first):
            out.append((first,) + rest)
    return out


def monomials_of_bidegree(n, i, j):
    """Full exponent tuples of bidegree (i, j), in descending canonical order."""
    xs = monomials_of_degree(n + 1, j)
    return [a + b for a in monomials_of_degree(n, i) for b in xs]


def count_monomials(nvars, deg):
    return math.comb(deg + nvars - 1, nvars - 1) if deg >= 0 else 0


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class MultiPoly:
    """Immutable sparse polynomial in t1..tn, X1..X_{n+1} over an exact field."""

    __slots__ = ("n", "field", "_terms", "_hash")

    def __init__(self, n, field, terms=None):
        self.n = n
        self.field = field
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            nv = 2 * n + 1
            for mono, c in items:
                mono = tuple(mono)
                if len(mono) != nv:
                    raise ArityMismatch(f"monomial {mono} has {len(mono)} exponents, expected {nv}")
                c = field.reduce(clean.get(mono, 0) + field.convert(c))
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, field, terms):
        # trusted constructor: terms already reduced and free of zeros
        obj = cls.__new__(cls)
        obj.n = n
        obj.field = field
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n, field=QQ):
        return cls._raw(n, field, {})

    @classmethod
    def constant(cls, c, n, field=QQ):
        return cls(n, field, {(0,) * (2 * n + 1): c})

    @classmethod
    def one(cls, n, field=QQ):
        return cls.constant(1, n, field)

    @classmethod
    def t(cls, k, n, field=QQ):
        """The variable t_k (1-based)."""
        if not 1 <= k <= n:
            raise ArityMismatch(f"t{k} out of range for n={n}")
        e = [0] * (2 * n + 1)
        e[k - 1] = 1
        return cls._raw(n, field, {tuple(e): 1})

    @classmethod
    def X(cls, k, n, field=QQ):
        """The variable X_k (1-based)."""
        if not 1 <= k <= n + 1:
            raise ArityMismatch(f"X{k} out of range for n={n}")
        e = [0] * (2 * n + 1)
        e[n + k - 1] = 1
        return cls._raw(n, field, {tuple(e): 1})

    @classmethod
    def monomial(cls, mono, n, field=QQ, coeff=1):
        return cls(n, field, {tuple(mono): coeff})

    @classmethod
    def parse(cls, text, n, field=QQ):
        return parse_poly(text, n, field)

    # -- basic queries ------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), 0)

    def sorted_terms(self):
        """Terms in canonical (descending graded lex) order."""
        return sorted(self._terms.items(), key=lambda kv: term_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=term_key)
        return mono, self._terms[mono]

    def bidegrees(self):
        n = self.n
        return {Bidegree(sum(m[:n]), sum(m[n:])) for m in self._terms}

    def is_bihomogeneous(self):
        return len(self.bidegrees()) <= 1

    @property
    def bidegree(self):
        """Bidegree of a nonzero bihomogeneous polynomial."""
        bds = self.bidegrees()
        if len(bds) != 1:
            raise PreconditionError(f"{self} is not a nonzero bihomogeneous polynomial")
        return next(iter(bds))

    def total_degree(self):
        return max((sum(m) for m in self._terms), default=-1)

    def t_degree(self):
        return max((sum(m[: self.n]) for m in self._terms), default=-1)

    def x_degree(self):
        return max((sum(m[self.n :]) for m in self._terms), default=-1)

    def is_t_only(self):
        n = self.n
        return all(not any(m[n:]) for m in self._terms)

    def is_x_only(self):
        n = self.n
        return all(not any(m[:n]) for m in self._terms)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            return self.constant(other, self.n, self.field)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if other.n != self.n:
            raise ArityMismatch(f"n={self.n} vs n={other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        red = self.field.reduce
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = red(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.n, self.field, out)

    __radd__ = __add__

    def __neg__(self):
        red = self.field.reduce
        return MultiPoly._raw(self.n, self.field, {m: red(-c) for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        field = self.field
        c = field.convert(c)
        if not c:
            return MultiPoly.zero(self.n, field)
        red = field.reduce
        return MultiPoly._raw(self.n, field, {m: red(v * c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        other = self._check(other)
        red = self.field.reduce
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        clean = {}
        for m, c in out.items():
            c = red(c)
            if c:
                clean[m] = c
        return MultiPoly._raw(self.n, self.field, clean)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.one(self.n, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, mono, coeff=1):
        """Multiply by the monomial ``coeff * mono``."""
        red = self.field.reduce
        coeff = self.field.convert(coeff)
        out = {}
        for m, c in self._terms.items():
            v = red(c * coeff)
            if v:
                out[tuple(a + b for a, b in zip(m, mono))] = v
        return MultiPoly._raw(self.n, self.field, out)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self.field == other.field and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.constant(other, self.n, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.field, frozenset(self._terms.items())))
        return self._hash

    # -- structural operations ----------------------------------------------

    def substitute(self, t_images=None, X_images=None):
        """Simultaneously replace t_k by t_images[k-1] and X_k by X_images[k-1].

        ``None`` keeps that block unchanged.  Images must share one ring; the
        result lives in that ring.
        """
        n = self.n
        if t_images is not None and len(t_images) != n:
            raise ArityMismatch(f"need {n} t-images, got {len(t_images)}")
        if X_images is not None and len(X_images) != n + 1:
            raise ArityMismatch(f"need {n + 1} X-images, got {len(X_images)}")
        imgs = list(t_images) if t_images is not None else [None] * n
        imgs += list(X_images) if X_images is not None else [None] * (n + 1)
        given = [g for g in imgs if g is not None]
        target_n = given[0].n if given else n
        field = self.field
        for g in given:
            if g.field != field:
                raise FieldMismatch("substitution images live over a different field")
            if g.n != target_n:
                raise ArityMismatch("substitution images live in different rings")
        if target_n != n and None in imgs:
            raise ArityMismatch("partial substitution requires images in the same ring")
        for v, g in enumerate(imgs):
            if g is None:
                imgs[v] = MultiPoly.t(v + 1, n, field) if v < n else MultiPoly.X(v - n + 1, n, field)

        cache = {}

        def power(v, e):
            key = (v, e)
            if key not in cache:
                cache[key] = imgs[v] if e == 1 else power(v, e - 1) * imgs[v]
            return cache[key]

        acc = {}
        red = field.reduce
        one = MultiPoly.one(target_n, field)
        for mono, c in self._terms.items():
            term = one
            for v, e in enumerate(mono):
                if e:
                    term = term * power(v, e)
                    if not term:
                        break
            for m, tc in term._terms.items():
                acc[m] = acc.get(m, 0) + tc * c
        clean = {}
        for m, c in acc.items():
            c = red(c)
            if c:
                clean[m] = c
        return MultiPoly._raw(target_n, field, clean)

    def evaluate(self, t_values, X_values=None):
        """Evaluate at a point; returns a field element."""
        vals = list(t_values) + list(X_values if X_values is not None else [0] * (self.n + 1))
        if len(vals) != 2 * self.n + 1:
            raise ArityMismatch("wrong number of coordinates")
        field = self.field
        vals = [field.convert(v) for v in vals]
        total = 0
        for mono, c in self._terms.items():
            term = c
            for v, e in zip(vals, mono):
                if e:
                    term = term * v**e
            total += term
        return field.reduce(total)

    def split_on_t(self):
        """Write self = sum_k A_k t_k, each monomial going to its lowest dividing t_k."""
        n = self.n
        parts = [{} for _ in range(n)]
        for mono, c in self._terms.items():
            for k in range(n):
                if mono[k]:
                    break
            else:
                raise PreconditionError(f"term with t-degree 0 in {self}; cannot split on t")
            reduced = mono[:k] + (mono[k] - 1,) + mono[k + 1 :]
            parts[k][reduced] = c
        return [MultiPoly._raw(n, self.field, p) for p in parts]

    def change_field(self, field):
        """Reduce coefficients into ``field`` (QQ -> GF(p), or identity)."""
        if field == self.field:
            return self
        if self.field != QQ:
            raise FieldMismatch(f"cannot map {self.field!r} into {field!r}")
        out = {}
        for m, c in self._terms.items():
            v = field.convert(c)
            if v:
                out[m] = v
        return MultiPoly._raw(self.n, field, out)

    def embed(self, n):
        """Re-home a polynomial in t/X-free form into a ring with ``n`` t-variables.

        Only valid when the polynomial uses one block: t-only polynomials keep
        their t exponents (padded) and X-only ones their X exponents.
        """
        if n == self.n:
            return self
        out = {}
        for m, c in self._terms.items():
            t, x = m[: self.n], m[self.n :]
            if len(t) > n and any(t[n:]) or len(x) > n + 1 and any(x[n + 1 :]):
                raise ArityMismatch(f"cannot embed {self} into n={n}")
            t = (t + (0,) * n)[:n]
            x = (x + (0,) * (n + 1))[: n + 1]
            out[t + x] = c
        return MultiPoly._raw(n, self.field, out)

    def normalize(self):
        """Return ``(q, s)`` with ``q = s * self`` in canonical scale.

        Over QQ: integer coefficients with content 1 and positive leading
        coefficient.  Over GF(p): monic.
        """
        field = self.field
        if not self._terms:
            return self, field.convert(1)
        _, lc = self.leading_term()
        if field == QQ:
            coeffs = [Fraction(c) for c in self._terms.values()]
            den = _fold(math.lcm, (c.denominator for c in coeffs), 1)
            content = _fold(math.gcd, (int(c * den) for c in coeffs), 0)
            s = Fraction(den, content)
            if lc < 0:
                s = -s
            s = field.reduce(s)
        else:
            s = field.inv(lc)
        return self.scale(s), s

    def normalized(self):
        return self.normalize()[0]

    def ratio_to(self, other):
        """Scalar c with self == c * other, or None if not proportional."""
        if not self._terms or not other._terms:
            return None
        if self._terms.keys() != other._terms.keys():
            return None
        field = self.field
        m, c = next(iter(self._terms.items()))
        r = field.div(c, other._terms[m])
        return r if self == other.scale(r) else None

    def exact_div(self, g):
        """Quotient q with self == q * g; raises ValueError if g does not divide self."""
        g = self._check(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.field
        gm, gc = g.leading_term()
        ginv = field.inv(gc)
        rem = self
        quot = {}
        while rem:
            rm, rc = rem.leading_term()
            diff = tuple(a - b for a, b in zip(rm, gm))
            if min(diff) < 0:
                raise ValueError("not divisible")
            c = field.reduce(rc * ginv)
            quot[diff] = c
            rem = rem - g.shift(diff, c)
        return MultiPoly._raw(self.n, field, quot)

    def divides(self, f):
        try:
            f.exact_div(self)
        except ValueError:
            return False
        return True

    # -- text -----------------------------------------------------------------

    def var_names(self):
        n = self.n
        return [f"t{k}" for k in range(1, n + 1)] + [f"X{k}" for k in range(1, n + 2)]

    def __str__(self):
        if not self._terms:
            return "0"
        names = self.var_names()
        field = self.field
        pieces = []
        for mono, c in self.sorted_terms():
            s = field.to_str(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if factors:
                body = "*".join(factors) if s == "1" else s + "*" + "*".join(factors)
            else:
                body = s
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, n={self.n}, field={self.field!r})"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[tX])(?P<idx>\d+)|(?P<op>[-+*^/]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        col = m.start(m.lastgroup if m.lastgroup != "idx" else "var") + 1
        if m.group("int") is not None:
            out.append(("int", int(m.group("int")), col))
        elif m.group("var") is not None:
            out.append(("var", (m.group("var"), int(m.group("idx"))), col))
        else:
            out.append((m.group("op"), None, col))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


def parse_poly(text, n, field=QQ):
    """Parse the interchange grammar, e.g. ``3*t1^2*X2 - 5*t2*X3^2``.

    Columns in ParseError are 1-based offsets into ``text``.
    """
    toks = _tokenize(text)
    pos = 0
    nv = 2 * n + 1

    def peek():
        return toks[pos]

    def take(kind):
        nonlocal pos
        tok = toks[pos]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else tok[1])
            raise ParseError(f"expected {kind}, found {what}", column=tok[2])
        pos += 1
        return tok

    def factor():
        tok = peek()
        if tok[0] == "int":
            take("int")
            value = Fraction(tok[1])
            if peek()[0] == "/":
                take("/")
                den = take("int")
                if den[1] == 0:
                    raise ParseError("zero denominator", column=den[2])
                value /= den[1]
            return value, None
        if tok[0] == "var":
            take("var")
            letter, idx = tok[1]
            limit = n if letter == "t" else n + 1
            if not 1 <= idx <= limit:
                raise ParseError(f"variable {letter}{idx} out of range (n={n})", column=tok[2])
            v = idx - 1 if letter == "t" else n + idx - 1
            e = 1
            if peek()[0] == "^":
                take("^")
                e = take("int")[1]
            return None, (v, e)
        what = "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else tok[1])
        raise ParseError(f"expected coefficient or variable, found {what}", column=tok[2])

    def term(sign):
        coeff = Fraction(sign)
        mono = [0] * nv
        while True:
            c, ve = factor()
            if c is not None:
                coeff *= c
            else:
                mono[ve[0]] += ve[1]
            if peek()[0] != "*":
                break
            take("*")
        return tuple(mono), coeff

    terms = []
    sign = 1
    if peek()[0] in "+-":
        sign = -1 if take(peek()[0])[0] == "-" else 1
    terms.append(term(sign))
    while peek()[0] in ("+", "-"):
        sign = -1 if take(peek()[0])[0] == "-" else 1
        terms.append(term(sign))
    take("end")
    try:
        return MultiPoly(n, field, terms)
    except ZeroDivisionError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# Binary forms and coprimality
# ---------------------------------------------------------------------------


def _uni_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _uni_rem(a, b, field):
    # polynomials as coefficient lists, lowest degree first
    a = list(a)
    inv = field.inv(b[-1])
    red = field.reduce
    while len(a) >= len(b):
        q = red(a[-1] * inv)
        off = len(a) - len(b)
        for k, bk in enumerate(b):
            a[off + k] = red(a[off + k] - q * bk)
        _uni_trim(a)
    return a


def uni_gcd(a, b, field):
    """Monic gcd of univariate coefficient lists (lowest degree first)."""
    a = _uni_trim([field.reduce(x) for x in a])
    b = _uni_trim([field.reduce(x) for x in b])
    while b:
        a, b = b, _uni_rem(a, b, field)
    if not a:
        return []
    inv = field.inv(a[-1])
    return [field.reduce(x * inv) for x in a]


def _binary_gcd_dense(f, g, field):
    """gcd of binary forms given as dense lists c[k] = coeff of s1^(D-k) s2^k."""
    if not any(f):
        return list(g)
    if not any(g):
        return list(f)
    sf = next(k for k, c in enumerate(f) if c)
    sg = next(k for k, c in enumerate(g) if c)
    # dehomogenise s2 = 1: coefficient of s1^(D-k) is c[k]
    uf = list(reversed(f))[: len(f) - sf]
    ug = list(reversed(g))[: len(g) - sg]
    h = uni_gcd(uf, ug, field)
    return [0] * min(sf, sg) + list(reversed(h))


def _binary_dense(f):
    """Dense coefficients of a t-only binary form in a ring with n = 2."""
    deg = f.total_degree()
    c = [0] * (deg + 1)
    for m, v in f.items():
        c[m[1]] = v
    return c


def gcd_binary_forms(f, g):
    """Monic gcd of two nonzero binary forms in t1, t2."""
    if f.n != 2 or g.n != 2:
        raise ArityMismatch("gcd_binary_forms needs n = 2")
    if f.field != g.field:
        raise FieldMismatch("gcd over different fields")
    if not f or not g:
        raise PreconditionError("gcd of a zero form")
    for h in (f, g):
        if not h.is_t_only() or len({sum(m) for m, _ in h.items()}) != 1:
            raise PreconditionError(f"{h} is not a binary form in t")
    h = _binary_gcd_dense(_binary_dense(f), _binary_dense(g), f.field)
    deg = len(h) - 1
    return MultiPoly(2, f.field, {(deg - k, k, 0, 0, 0): c for k, c in enumerate(h) if c})


def _restrict_dense(f, idx, a, b):
    """Dense binary coefficients of f(a*s1 + b*s2) for the variables ``idx``."""
    field = f.field
    red = field.reduce
    deg = max(sum(m[v] for v in idx) for m, _ in f.items())
    out = [0] * (deg + 1)
    lin_pow = {}

    def lin(pos, e):
        key = (pos, e)
        if key not in lin_pow:
            lin_pow[key] = [red(math.comb(e, k) * a[pos] ** (e - k) * b[pos] ** k) for k in range(e + 1)]
        return lin_pow[key]

    for m, c in f.items():
        poly = [c]
        for pos, v in enumerate(idx):
            e = m[v]
            if e:
                q = lin(pos, e)
                nxt = [0] * (len(poly) + e)
                for i, x in enumerate(poly):
                    if x:
                        for k, y in enumerate(q):
                            nxt[i + k] += x * y
                poly = [red(x) for x in nxt]
        for k, x in enumerate(poly):
            out[k] += x
    return [red(x) for x in out]


@dataclass(frozen=True)
class CoprimalityVerdict:
    coprime: bool
    note: str

    def __bool__(self):
        return self.coprime


def forms_coprime_probabilistic(fs, block="t", trials=8, rng=None):
    """Probabilistic coprimality of forms in one variable block.

    Each trial restricts the forms to a random 2-plane through the origin and
    takes an exact binary gcd.  One coprime restriction proves coprimality.
    """
    fs = [f for f in fs]
    if not fs:
        raise PreconditionError("no forms given")
    rng = rng if rng is not None else random.Random(0)
    n = fs[0].n
    field = fs[0].field
    idx = list(range(n)) if block == "t" else list(range(n, 2 * n + 1))
    for f in fs:
        if f.field != field or f.n != n:
            raise FieldMismatch("forms must share a ring")
        if not f.is_t_only() if block == "t" else not f.is_x_only():
            raise PreconditionError(f"{f} is not a form in the {block}-block")
    nonzero = [f for f in fs if f]
    if any(f.total_degree() == 0 for f in nonzero):
        return CoprimalityVerdict(True, "a nonzero constant is among the forms")
    if len(nonzero) < 2:
        return CoprimalityVerdict(False, "fewer than two nonzero forms")
    for trial in range(trials):
        a = [field.random_element(rng, 50) for _ in idx]
        b = [field.random_element(rng, 50) for _ in idx]
        g = [0]
        for f in nonzero:
            g = _binary_gcd_dense(g, _restrict_dense(f, idx, a, b), field)
        # dense lists are exact-length: a single entry is a nonzero constant
        if len(g) == 1 and g[0]:
            return CoprimalityVerdict(True, f"coprime restriction found at trial {trial + 1}")
    return CoprimalityVerdict(False, f"common factor suspected: no coprime restriction in {trials} trials")


def is_coprime_probabilistic(fs, trials=8, rng=None):
    """Coprimality of t-forms: exact for n = 2, restriction-based for n >= 3."""
    fs = list(fs)
    if fs and fs[0].n == 2:
        nonzero = [f for f in fs if f]
        if len(nonzero) < 2:
            return CoprimalityVerdict(bool(nonzero) and nonzero[0].total_degree() == 0, "exact binary gcd")
        g = _fold(gcd_binary_forms, nonzero)
        return CoprimalityVerdict(g.total_degree() == 0, f"exact binary gcd = {g}")
    return forms_coprime_probabilistic(fs, "t", trials, rng)

