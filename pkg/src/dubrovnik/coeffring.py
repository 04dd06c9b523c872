"""Exact arithmetic in Z[a^{\\pm1}, s^{\\pm1}] and its fraction field.

Every coefficient in the skein engine is a :class:`RatFunc`: a quotient of
two Laurent polynomials in the framing variable ``a`` and the quantum
variable ``s``, with integer coefficients, kept in a canonical form so that
equality of values is equality of representations.

Canonical form of ``num/den``:

* monomial factors are shifted out of ``den`` into ``num``, so ``den`` is an
  ordinary polynomial divisible by neither ``a`` nor ``s``;
* ``gcd(num, den)`` is a unit (the gcd includes integer content);
* the lexicographically greatest monomial of ``den`` (ordered by a-exponent,
  then s-exponent) has a positive coefficient.

The gcd is computed exactly over Z: Laurent polynomials are shifted to
ordinary polynomials, viewed recursively as polynomials in ``s`` with
coefficients in Z[a], and reduced with content/primitive-part pseudo-
remainder sequences.  No floating point anywhere.

The distinguished value ``delta = (a - a^-1)/(s - s^-1) + 1`` is the scalar
of a disjoint trivial loop.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd as int_gcd

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "ZERO",
    "ONE",
    "delta",
    "alpha",
    "svar",
    "parse_ratfunc",
]

Monomial = tuple[int, int]  # (a_exponent, s_exponent)


# ---------------------------------------------------------------------------
# raw dict-level Laurent arithmetic ({(a_exp, s_exp): int}, no zero values)


def _add(p, q):
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _neg(p):
    return {m: -c for m, c in p.items()}

def _scale(p, k):
    if k == 0:
        return {}
    return {m: c * k for m, c in p.items()}


def _mul(p, q):
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            m = (i1 + i2, j1 + j2)
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def _shift(p, da, ds):
    if not (da or ds):
        return dict(p)
    return {(i + da, j + ds): c for (i, j), c in p.items()}


def _min_exps(p):
    return min(i for i, _ in p), min(j for _, j in p)


# ---------------------------------------------------------------------------
# exact bivariate gcd over Z, operating on ordinary (min-exponent >= 0) polys
# in recursive dense form: a poly in s whose coefficients are int lists in a.


def _to_recursive(p):
    """dict {(i, j): c} with i, j >= 0  ->  list over s-degree of a-coeff lists."""
    ds = max(j for _, j in p)
    da = max(i for i, _ in p)
    out = [[0] * (da + 1) for _ in range(ds + 1)]
    for (i, j), c in p.items():
        out[j][i] = c
    return [_utrim(row) for row in out]


def _to_dict(rec):
    out = {}
    for j, row in enumerate(rec):
        for i, c in enumerate(row):
            if c:
                out[(i, j)] = c
    return out


def _utrim(u):
    n = len(u)
    while n and u[n - 1] == 0:
        n -= 1
    return u[:n]


def _uadd(u, v):
    if len(u) < len(v):
        u, v = v, u
    out = list(u)
    for i, c in enumerate(v):
        out[i] += c
    return _utrim(out)


def _uscale(u, k):
    return [] if k == 0 else [c * k for c in u]


def _umul(u, v):
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, c in enumerate(u):
        if c:
            for j, d in enumerate(v):
                out[i + j] += c * d
    return _utrim(out)


def _ucontent(u):
    g = 0
    for c in u:
        g = int_gcd(g, c)
    return g


def _uprim(u):
    g = _ucontent(u)
    if g in (0, 1):
        return list(u)
    return [c // g for c in u]


def _ugcd(u, v):
    """gcd in Z[a] by a primitive remainder sequence; result primitive * content."""
    u, v = _utrim(list(u)), _utrim(list(v))
    if not u:
        return _upositive(v)
    if not v:
        return _upositive(u)
    cont = int_gcd(_ucontent(u), _ucontent(v))
    u, v = _uprim(u), _uprim(v)
    while v:
        u = _uprem(u, v)
        u, v = v, _uprim(u)
    return _upositive(_uscale(u, cont))


def _upositive(u):
    return _uscale(u, -1) if u and u[-1] < 0 else u


def _uprem(u, v):
    """pseudo-remainder of u by v in Z[a]."""
    u = list(u)
    dv = len(v) - 1
    lv = v[-1]
    while len(u) - 1 >= dv and u:
        du = len(u) - 1
        lead = u[-1]
        u = _uscale(u, lv)
        shift = du - dv
        for i, c in enumerate(v):
            u[i + shift] -= lead * c
        u = _utrim(u)
    return u


def _udivexact(u, v):
    """exact division in Z[a]; raises if not exact (internal invariant guard)."""
    u = list(u)
    if not u:
        return []
    dv = len(v) - 1
    lv = v[-1]
    q = [0] * (len(u) - dv)
    for k in range(len(u) - 1 - dv, -1, -1):
        c = u[k + dv]
        if c % lv:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c // lv
        for i, d in enumerate(v):
            u[k + i] -= q[k] * d
    if _utrim(u):
        raise ArithmeticError("inexact polynomial division")
    return _utrim(q)


def _rcontent(r):
    g = []
    for row in r:
        g = _ugcd(g, row)
        if g == [1]:
            return g
    return g


def _rprem(u, v):
    """pseudo-remainder in (Z[a])[s]."""
    u = [list(row) for row in u]
    dv = len(v) - 1
    lv = v[-1]
    while u and len(u) - 1 >= dv:
        du = len(u) - 1
        lead = u[-1]
        u = [_umul(row, lv) for row in u]
        shift = du - dv
        for i, row in enumerate(v):
            u[i + shift] = _uadd(u[i + shift], _uscale(_umul(lead, row), -1))
        while u and not u[-1]:
            u.pop()
    return u


def _rprim(u):
    cont = _rcontent(u)
    if not u or cont == [1]:
        return u, cont
    return [_udivexact(row, cont) for row in u], cont


def _rgcd(u, v):
    if not u:
        return v
    if not v:
        return u
    if len(u) < len(v):
        u, v = v, u
    cu = _rcontent(u)
    cv = _rcontent(v)
    cont = _ugcd(cu, cv)
    u = [_udivexact(row, cu) for row in u]
    v = [_udivexact(row, cv) for row in v]
    while v:
        r = _rprem(u, v)
        u, v = v, _rprim(r)[0]
    return [_umul(row, cont) for row in u]


def _rdivexact(u, v):
    u = [list(row) for row in u]
    dv = len(v) - 1
    lv = v[-1]
    q = [[] for _ in range(len(u) - dv)]
    for k in range(len(u) - 1 - dv, -1, -1):
        qk = _udivexact(u[k + dv], lv)
        q[k] = qk
        for i, row in enumerate(v):
            u[k + i] = _uadd(u[k + i], _uscale(_umul(qk, row), -1))
    for row in u:
        if row:
            raise ArithmeticError("inexact polynomial division")
    return q


# heuristic gcd (GCDHEU): evaluate a variable at a large integer, gcd the
# images, reconstruct candidate coefficients from balanced base-xi digits,
# and verify by exact trial division.  Exact because of the verification
# step; the PRS above remains as a fallback for failed attempts.


def _ueval(u, xi):
    out = 0
    for c in reversed(u):
        out = out * xi + c
    return out


def _balanced_digits(n, xi):
    digits = []
    while n:
        d = n % xi
        if d > xi // 2:
            d -= xi
        digits.append(d)
        n = (n - d) // xi
    return digits


def _umaxnorm(u):
    return max((abs(c) for c in u), default=0)


def _heu_uni_prim(u, v):
    """Heuristic gcd of two primitive polys in Z[a]; None if attempts fail."""
    xi = 2 * min(_umaxnorm(u), _umaxnorm(v)) + 29
    for _ in range(6):
        h = _upositive(_uprim(_balanced_digits(int_gcd(_ueval(u, xi), _ueval(v, xi)), xi)))
        if h:
            try:
                _udivexact(u, h)
                _udivexact(v, h)
                return h
            except ArithmeticError:
                pass
        xi = xi * 3 + 17
    return None


def _ugcd_fast(u, v):
    """Full gcd in Z[a] (content included), heuristic first, PRS fallback."""
    u, v = _utrim(list(u)), _utrim(list(v))
    if not u:
        return _upositive(v)
    if not v:
        return _upositive(u)
    cu, cv = _ucontent(u), _ucontent(v)
    c = int_gcd(cu, cv)
    up = [x // cu for x in u]
    vp = [x // cv for x in v]
    g = _heu_uni_prim(up, vp)
    if g is None:
        g = _ugcd(up, vp)
    return _uscale(g, c)


def _heu_biv_prim(u, v):
    """Heuristic gcd of Z[a]-content-free polys in (Z[a])[s]; None on failure."""
    norm = min(max(_umaxnorm(row) for row in u), max(_umaxnorm(row) for row in v))
    xi = 2 * norm + 29
    for _ in range(6):
        images = []
        for poly in (u, v):
            acc = []
            for row in reversed(poly):
                acc = _uadd(_uscale(acc, xi), row)
            images.append(acc)
        h = _ugcd_fast(images[0], images[1])
        # peel balanced base-xi digits coefficient-wise: g(a, s) = sum digit_i(a) s^i
        g = []
        while h:
            digit, rest = [], []
            for ccoef in h:
                d = ccoef % xi
                if d > xi // 2:
                    d -= xi
                digit.append(d)
                rest.append((ccoef - d) // xi)
            g.append(_utrim(digit))
            h = _utrim(rest)
        while g and not g[-1]:
            g.pop()
        if g:
            cont = _rcontent(g)
            if cont and cont != [1]:
                g = [_udivexact(row, cont) for row in g]
            if g[-1][-1] < 0:
                g = [_uscale(row, -1) for row in g]
            try:
                _rdivexact(u, g)
                _rdivexact(v, g)
                return g
            except ArithmeticError:
                pass
        xi = xi * 3 + 17
    return None


def _gcd_poly(p, q):
    """gcd of two ordinary bivariate int polys given as dicts; {} if both zero."""
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    if p == q:
        return dict(p)
    one = {(0, 0): 1}
    if len(p) == 1 or len(q) == 1:
        # gcd with a monomial: common monomial part and integer content
        ip = min(i for i, _ in p)
        jp = min(j for _, j in p)
        iq = min(i for i, _ in q)
        jq = min(j for _, j in q)
        cp = cq = 0
        for c in p.values():
            cp = int_gcd(cp, c)
        for c in q.values():
            cq = int_gcd(cq, c)
        m = (min(ip, iq), min(jp, jq))
        c = int_gcd(cp, cq)
        return {m: c} if (m != (0, 0) or c != 1) else one
    u, v = _to_recursive(p), _to_recursive(q)
    cu, cv = _rcontent(u), _rcontent(v)
    cg = _ugcd_fast(cu, cv)
    if cu != [1]:
        u = [_udivexact(row, cu) for row in u]
    if cv != [1]:
        v = [_udivexact(row, cv) for row in v]
    g = _heu_biv_prim(u, v)
    if g is None:
        g = _rgcd(u, v)
        gc = _rcontent(g)
        if gc != [1]:
            g = [_udivexact(row, gc) for row in g]
    if cg != [1]:
        g = [_umul(row, cg) for row in g]
    return _to_dict(g)


def _divexact_poly(p, g):
    if g == {(0, 0): 1}:
        return dict(p)
    if not p:
        return {}
    return _to_dict(_rdivexact(_to_recursive(p), _to_recursive(g)))


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Immutable Laurent polynomial in a, s over Z.

    Stored as a map from (a_exp, s_exp) to a nonzero integer; the zero
    polynomial is the empty map.
    """

    __slots__ = ("terms", "_key")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, c in dict(terms).items():
                if c:
                    t[(int(m[0]), int(m[1]))] = int(c)
        self.terms = t
        self._key = tuple(sorted(t.items()))

    # construction helpers

    @staticmethod
    def monomial(a_exp=0, s_exp=0, coeff=1):
        return LaurentPoly({(a_exp, s_exp): coeff})

    @staticmethod
    def const(c):
        return LaurentPoly({(0, 0): c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other):
        return LaurentPoly(_add(self.terms, other.terms))

    def __sub__(self, other):
        return LaurentPoly(_add(self.terms, _neg(other.terms)))

    def __neg__(self):
        return LaurentPoly(_neg(self.terms))

    def __mul__(self, other):
        return LaurentPoly(_mul(self.terms, other.terms))

    def substitute_s_inverse(self):
        """The image under s -> s^-1 (a fixed); used for transpose identities."""
        return LaurentPoly({(i, -j): c for (i, j), c in self.terms.items()})

    def __repr__(self):
        return f"LaurentPoly({_render_poly(self.terms)!r})"

    def __str__(self):
        return _render_poly(self.terms)


def _render_monomial(m, c):
    i, j = m
    factors = []
    if i:
        factors.append("a" if i == 1 else f"a^{i}")
    if j:
        factors.append("s" if j == 1 else f"s^{j}")
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def _render_poly(terms):
    if not terms:
        return "0"
    parts = []
    for m in sorted(terms, reverse=True):
        c = terms[m]
        if not parts:
            parts.append(_render_monomial(m, c))
        elif c < 0:
            parts.append("- " + _render_monomial(m, -c).lstrip())
        else:
            parts.append("+ " + _render_monomial(m, c))
    return " ".join(parts)


class RatFunc:
    """A rational function num/den over Z[a^{\\pm1}, s^{\\pm1}] in canonical form.

    Two RatFuncs are equal iff their canonical forms are identical, so `==`
    decides equality of values.  Instances are immutable and hashable.
    """

    __slots__ = ("num", "den", "_key")

    def __init__(self, num, den=None, _canonical=False):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if den is None:
            den = _POLY_ONE
        elif isinstance(den, int):
            den = LaurentPoly.const(den)
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canonicalize(num.terms, den.terms)
        self._key = (self.num._key, self.den._key)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        return isinstance(other, RatFunc) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return RatFunc(self.num * LaurentPoly.const(other), self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; raises ZeroDivisionError at 0."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute_s_inverse(self):
        return RatFunc(self.num.substitute_s_inverse(), self.den.substitute_s_inverse())

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        if self.den == _POLY_ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _canonicalize(num, den):
    """Return (num, den) LaurentPolys in the canonical form described above."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return _POLY_ZERO, _POLY_ONE
    # shift den to an ordinary poly not divisible by a or s; mirror shift on num
    da, ds = _min_exps(den)
    if da or ds:
        den = _shift(den, -da, -ds)
        num = _shift(num, -da, -ds)
    # pull num's monomial factor aside so gcd runs on ordinary polys
    ua, us = _min_exps(num)
    num0 = _shift(num, -ua, -us)
    if den != {(0, 0): 1}:
        g = _gcd_poly(num0, den)
        if g != {(0, 0): 1}:
            num0 = _divexact_poly(num0, g)
            den = _divexact_poly(den, g)
    if den[max(den)] < 0:
        num0 = _neg(num0)
        den = _neg(den)
    return LaurentPoly(_shift(num0, ua, us)), LaurentPoly(den)


_POLY_ZERO = LaurentPoly()
_POLY_ONE = LaurentPoly.const(1)

ZERO = RatFunc(0)
ONE = RatFunc(1)


def alpha(k=1):
    """The unit a^k."""
    return RatFunc(LaurentPoly.monomial(a_exp=k))


def svar(k=1):
    """The unit s^k."""
    return RatFunc(LaurentPoly.monomial(s_exp=k))


@lru_cache(maxsize=None)
def delta():
    """Value of a disjoint trivial loop: (a - a^-1)/(s - s^-1) + 1."""
    return (alpha() - alpha(-1)) / (svar() - svar(-1)) + ONE


# ---------------------------------------------------------------------------
# parsing of the rendered syntax (used by the CLI file formats)


class RatFuncParseError(ValueError):
    pass


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/()^":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif ch in "as":
            tokens.append(ch)
            i += 1
        else:
            raise RatFuncParseError(f"unexpected character {ch!r} in coefficient")
    return tokens


class _P:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, t):
        got = self.next()
        if got != t:
            raise RatFuncParseError(f"expected {t!r}, got {got!r}")

    def parse_expr(self):
        out = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.parse_term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def parse_term(self):
        out = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.next()
            rhs = self.parse_factor()
            out = out * rhs if op == "*" else out / rhs
        return out

    def parse_factor(self):
        t = self.next()
        if t == "-":
            return -self.parse_factor()
        if t == "+":
            return self.parse_factor()
        if t == "(":
            inner = self.parse_expr()
            self.expect(")")
            return self._maybe_pow(inner)
        if isinstance(t, int):
            return self._maybe_pow(RatFunc(t))
        if t in ("a", "s"):
            base = alpha() if t == "a" else svar()
            return self._maybe_pow(base)
        raise RatFuncParseError(f"unexpected token {t!r}")

    def _maybe_pow(self, base):
        if self.peek() == "^":
            self.next()
            neg = False
            t = self.next()
            if t == "-":
                neg = True
                t = self.next()
            if not isinstance(t, int):
                raise RatFuncParseError("exponent must be an integer")
            return base ** (-t if neg else t)
        return base


def parse_ratfunc(text):
    """Parse the rendered coefficient syntax back into a RatFunc.

    Accepts anything the renderer emits, e.g. ``(a*s + s^2 - 1 - a^-1*s)/(s^2 - 1)``,
    plus ordinary arithmetic expressions in ``a`` and ``s``.
    """
    p = _P(_tokenize(text))
    out = p.parse_expr()
    if p.peek() is not None:
        raise RatFuncParseError(f"trailing input at token {p.peek()!r}")
    return out
