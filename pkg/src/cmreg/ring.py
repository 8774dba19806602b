"""Coefficient fields, standard graded polynomial rings and their quotients.

Polynomials are sparse dictionaries mapping exponent tuples to coefficients.
Coefficients are Python ints (reduced mod p) over GF(p) and ints or
``Fraction`` over QQ; there is no floating point anywhere.
"""
from __future__ import annotations

import math
from fractions import Fraction

NEG_INF = float("-inf")
POS_INF = float("inf")


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, math.isqrt(n) + 1, 2))


class CoefficientField:
    """QQ when ``p == 0``, otherwise the prime field GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        p = int(p)
        if p != 0 and not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    def __call__(self, x):
        """Coerce an int, Fraction or ``"a/b"`` string into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        return int(x)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        if a == 1 or a == -1:
            return a
        return Fraction(1) / a

    def normalize(self, a):
        """Bring an arithmetic result back to canonical form."""
        if self.p:
            return a % self.p
        if isinstance(a, Fraction) and a.denominator == 1:
            return a.numerator
        return a

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and other.p == self.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"


QQ = CoefficientField(0)


def GF(p):
    return CoefficientField(p)


# -- monomials ---------------------------------------------------------------

def grevlex_key(exps):
    """Sort key: larger key means larger monomial in graded reverse lex."""
    return (sum(exps),) + tuple(-e for e in reversed(exps))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(n, d):
    """All exponent tuples in n variables of total degree d, largest first."""
    if d < 0:
        return []
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    out.sort(key=grevlex_key, reverse=True)
    return out


# -- rings -------------------------------------------------------------------

class PolyRing:
    """Standard graded polynomial ring field[x0..x{n-1}] with grevlex order."""

    def __init__(self, field, nvars, names=None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.field = field if isinstance(field, CoefficientField) else CoefficientField(field)
        self.nvars = nvars
        self.names = tuple(names) if names else tuple(f"x{i}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("wrong number of variable names")

    # interface shared with QuotientRing
    @property
    def ambient(self):
        return self

    @property
    def defining_ideal(self):
        return ()

    @property
    def characteristic(self):
        return self.field.p

    def reduce(self, f):
        return f

    def is_quotient(self):
        return False

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.nvars == other.nvars and self.names == other.names)

    def __hash__(self):
        return hash((self.field, self.nvars, self.names))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}]"

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Polynomial(self, {(0,) * self.nvars: c})

    def gens(self):
        n = self.nvars
        return [Polynomial(self, {tuple(int(i == j) for j in range(n)): 1}) for i in range(n)]

    def monomial(self, exps, c=1):
        return Polynomial(self, {tuple(exps): c})

    def parse(self, text):
        return parse_polynomial(text, self)

    def __call__(self, x):
        if isinstance(x, Polynomial):
            return self.reduce(x)
        if isinstance(x, str):
            return self.reduce(self.parse(x))
        return self.constant(x)


class QuotientRing:
    """S = R/J for a homogeneous ideal J of a PolyRing R.

    Elements are represented by ambient polynomials; ``reduce`` returns the
    normal form modulo a reduced Groebner basis of J, computed once.
    """

    def __init__(self, ambient, gens):
        if isinstance(ambient, QuotientRing):
            gens = list(ambient.defining_ideal) + list(gens)
            ambient = ambient.ambient
        self._ambient = ambient
        gens = [ambient(g) if not isinstance(g, Polynomial) else g for g in gens]
        for g in gens:
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
        self._gens = tuple(g for g in gens if not g.is_zero())
        self._gb = None

    @property
    def ambient(self):
        return self._ambient

    @property
    def defining_ideal(self):
        return self._gens

    @property
    def field(self):
        return self._ambient.field

    @property
    def nvars(self):
        return self._ambient.nvars

    @property
    def names(self):
        return self._ambient.names

    @property
    def characteristic(self):
        return self._ambient.field.p

    def is_quotient(self):
        return bool(self._gens)

    def groebner(self):
        """Reduced Groebner basis of J (cached)."""
        if self._gb is None:
            from .groebner import ideal_groebner
            self._gb = ideal_groebner(self._gens, self._ambient)
        return self._gb

    def reduce(self, f):
        if not self._gens:
            return f
        from .groebner import reduce_polynomial
        return reduce_polynomial(f, self.groebner())

    def __eq__(self, other):
        if isinstance(other, PolyRing):
            return not self._gens and self._ambient == other
        return (isinstance(other, QuotientRing) and self._ambient == other._ambient
                and self.groebner() == other.groebner())

    def __hash__(self):
        return hash((self._ambient, tuple(self.groebner())))

    def __repr__(self):
        if not self._gens:
            return repr(self._ambient)
        return f"{self._ambient}/({', '.join(map(str, self._gens))})"

    def zero(self):
        return self._ambient.zero()

    def one(self):
        return self.reduce(self._ambient.one())

    def constant(self, c):
        return self.reduce(self._ambient.constant(c))

    def gens(self):
        return [self.reduce(x) for x in self._ambient.gens()]

    def monomial(self, exps, c=1):
        return self.reduce(self._ambient.monomial(exps, c))

    def parse(self, text):
        return parse_polynomial(text, self._ambient)

    def __call__(self, x):
        return self.reduce(self._ambient(x))


# -- polynomials -------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial over a PolyRing."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring, terms, clean=True):
        self.ring = ring
        if clean:
            norm = ring.field.normalize
            terms = {tuple(m): norm(c) for m, c in terms.items()}
            terms = {m: c for m, c in terms.items() if c}
        self.terms = terms
        self._lead = None

    # structure
    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        """Terms, leading term first."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_monomial(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=grevlex_key)
        return self._lead

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def homogeneous_part(self, d):
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d}, clean=False)

    def monic(self):
        inv = self.ring.field.inv(self.leading_coefficient())
        return self * inv

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.constant(self.ring.field(other))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            return Polynomial(self.ring, {m: a * c for m, a in self.terms.items()})
        other = self._coerce(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self, i):
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                terms[tuple(mm)] = c * m[i]
        return Polynomial(self.ring, terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(self.ring.field(other))
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        out = []
        for m, c in self.sorted_terms():
            mono = "*".join(names[i] if e == 1 else f"{names[i]}^{e}"
                            for i, e in enumerate(m) if e)
            neg = c < 0 if not self.ring.field.p else False
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


# -- parsing -----------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        where = f" at column {position + 1}" if position is not None else ""
        super().__init__(message + where)


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _PolyParser:
    def __init__(self, text, ring):
        self.tokens = _tokenize(text)
        self.k = 0
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.names)}

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.k += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        tok = self.peek()
        if tok[0] in "+-":
            self.take()
            inner = self.factor()
            return -inner if tok[0] == "-" else inner
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            exp = self.take("num")
            base = base ** int(exp[1])
        return base

    def atom(self):
        tok = self.take()
        kind, text, pos = tok
        if kind == "num":
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")
                if int(den[1]) == 0:
                    raise ParseError("division by zero", den[2])
                return self.ring.constant(self.ring.field(Fraction(int(text), int(den[1]))))
            return self.ring.constant(self.ring.field(int(text)))
        if kind == "name":
            if text not in self.index:
                raise ParseError(f"unknown variable {text!r}", pos)
            e = [0] * self.ring.nvars
            e[self.index[text]] = 1
            return Polynomial(self.ring, {tuple(e): 1})
        if kind == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


def parse_polynomial(text, ring):
    """Parse ``3*x0^2*x1 - 1/2*x2^3`` style text over ``ring``."""
    return _PolyParser(text, ring.ambient).parse()
