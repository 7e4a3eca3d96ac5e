"""Exact arithmetic in GF(p), GF(p^m) and the rational function field GF(p)(t).

Elements are immutable and always stored in canonical form, so equality is a
plain comparison of representations.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Union

MAX_DEGREE = 512


class FieldError(ValueError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class DegreeOverflow(FieldError):
    pass


# --------------------------------------------------------------------------
# dense polynomials over GF(p): tuples of ints, low degree first, no trailing 0

Poly = tuple


def _trim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    if len(c) - 1 > MAX_DEGREE:
        raise DegreeOverflow(f"polynomial degree {len(c) - 1} exceeds {MAX_DEGREE}")
    return tuple(c)


def poly_add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return _trim(((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n))


def poly_neg(f: Poly, p: int) -> Poly:
    return tuple((-x) % p for x in f)


def poly_sub(f: Poly, g: Poly, p: int) -> Poly:
    return poly_add(f, poly_neg(g, p), p)


def poly_scale(f: Poly, c: int, p: int) -> Poly:
    return _trim((x * c) % p for x in f)


def poly_mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(x % p for x in out)


def poly_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise DivisionByZero("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    q = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = (r[i + dg] * inv_lead) % p
        if c:
            q[i] = c
            for j, b in enumerate(g):
                r[i + j] = (r[i + j] - c * b) % p
    return _trim(q), _trim(r[:dg] if dg else [])


def poly_monic(f: Poly, p: int) -> tuple[Poly, int]:
    """Return (monic f, leading coefficient)."""
    lead = f[-1]
    return poly_scale(f, pow(lead, p - 2, p), p), lead


def poly_gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, poly_divmod(f, g, p)[1]
    return poly_monic(f, p)[0] if f else ()


def poly_powmod(f: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = poly_divmod(f, m, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, base, p), m, p)[1]
        base = poly_divmod(poly_mul(base, base, p), m, p)[1]
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def is_irreducible(f: Poly, p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    x = (0, 1)
    if poly_powmod(x, p ** m, f, p) != poly_divmod(x, f, p)[1]:
        return False
    for q in _prime_factors(m):
        h = poly_sub(poly_powmod(x, p ** (m // q), f, p), x, p)
        if poly_gcd(h, f, p) != (1,):
            return False
    return True


def poly_str(f: Poly, var: str) -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return "+".join(terms)


# --------------------------------------------------------------------------

# Irreducible moduli used when a user asks for gf:<q> without giving one.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}


@dataclass(frozen=True)
class FieldSpec:
    """Description of a field of characteristic p.

    ``kind`` is ``"prime"``, ``"extension"`` (GF(p)[var]/(modulus)) or
    ``"rational"`` (GF(p)(var)).
    """

    p: int
    kind: str = "prime"
    modulus: Optional[Poly] = None
    var: str = ""

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.kind == "extension":
            mod = tuple(x % self.p for x in self.modulus or ())
            if len(mod) < 3 or mod[-1] != 1:
                raise FieldError("extension modulus must be monic of degree >= 2")
            if not is_irreducible(mod, self.p):
                raise FieldError(f"modulus {poly_str(mod, 'x')} is reducible over GF({self.p})")
            object.__setattr__(self, "modulus", mod)
            object.__setattr__(self, "var", self.var or "g")
        elif self.kind == "rational":
            object.__setattr__(self, "var", self.var or "t")
        elif self.kind != "prime":
            raise FieldError(f"unknown field kind {self.kind!r}")

    # constructors
    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def extension(cls, p: int, m: int, modulus=None, var: str = "g") -> "FieldSpec":
        if m == 1:
            return cls(p)
        if modulus is None:
            try:
                modulus = DEFAULT_MODULI[(p, m)]
            except KeyError:
                raise FieldError(f"no default modulus for GF({p}^{m}); supply one") from None
        if len(modulus) - 1 != m:
            raise FieldError("modulus degree does not match m")
        return cls(p, "extension", tuple(modulus), var)

    @classmethod
    def gf(cls, q: int, modulus=None, var: str = "g") -> "FieldSpec":
        for p in range(2, q + 1):
            if q % p == 0:
                break
        m, r = 0, q
        while r % p == 0:
            r //= p
            m += 1
        if r != 1 or not is_prime(p):
            raise FieldError(f"{q} is not a prime power")
        return cls.extension(p, m, modulus, var)

    @classmethod
    def rational(cls, p: int, var: str = "t") -> "FieldSpec":
        return cls(p, "rational", None, var)

    @classmethod
    def from_text(cls, text: str) -> "FieldSpec":
        """Parse ``gf:<q>`` or ``rat:<p>``."""
        kind, _, arg = text.partition(":")
        try:
            n = int(arg)
        except ValueError:
            raise FieldError(f"bad field description {text!r}") from None
        if kind == "gf":
            return cls.gf(n)
        if kind == "rat":
            return cls.rational(n)
        raise FieldError(f"bad field description {text!r}")

    # properties
    @property
    def degree(self) -> int:
        return len(self.modulus) - 1 if self.kind == "extension" else 1

    @property
    def is_perfect(self) -> bool:
        return self.kind != "rational"

    @property
    def order(self) -> Optional[int]:
        return None if self.kind == "rational" else self.p ** self.degree

    def describe(self) -> str:
        if self.kind == "prime":
            return f"GF({self.p})"
        if self.kind == "extension":
            return f"GF({self.p}^{self.degree}) = GF({self.p})[{self.var}]/({poly_str(self.modulus, self.var)})"
        return f"GF({self.p})({self.var})"

    def short(self) -> str:
        return f"rat:{self.p}" if self.kind == "rational" else f"gf:{self.order}"

    # elements
    @cached_property
    def zero(self) -> "FieldElement":
        return self(0)

    @cached_property
    def one(self) -> "FieldElement":
        return self(1)

    def gen(self) -> "FieldElement":
        if self.kind == "prime":
            raise FieldError("prime fields have no generator variable")
        return self.parse(self.var)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec is self:
                return value
            if value.spec != self:
                raise FieldMismatch(f"{value.spec.describe()} vs {self.describe()}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int):
            v = value % self.p
            if self.kind == "prime":
                return FieldElement(self, v)
            if self.kind == "extension":
                return FieldElement(self, _trim((v,)))
            return FieldElement(self, (_trim((v,)), (1,)))
        raise TypeError(f"cannot coerce {value!r} into {self.describe()}")

    def from_poly(self, f: Poly) -> "FieldElement":
        f = _trim(x % self.p for x in f)
        if self.kind == "prime":
            if len(f) > 1:
                raise FieldError("non-constant polynomial in a prime field")
            return FieldElement(self, f[0] if f else 0)
        if self.kind == "extension":
            return FieldElement(self, poly_divmod(f, self.modulus, self.p)[1])
        return FieldElement(self, (f, (1,)))

    def elements(self) -> Iterator["FieldElement"]:
        if self.kind == "rational":
            raise FieldError("GF(p)(t) is infinite")
        if self.kind == "prime":
            for v in range(self.p):
                yield FieldElement(self, v)
            return
        for coeffs in itertools.product(range(self.p), repeat=self.degree):
            yield FieldElement(self, _trim(coeffs))

    def parse(self, text: str) -> "FieldElement":
        return _Parser(self, text).run()


class FieldElement:
    """Immutable element of a :class:`FieldSpec`.

    ``value`` is an int (prime field), a polynomial tuple reduced modulo the
    modulus (extension), or a pair ``(num, den)`` with ``den`` monic and
    coprime to ``num`` (rational functions).
    """

    __slots__ = ("spec", "value", "_hash", "_nz")

    def __init__(self, spec: FieldSpec, value):
        self.spec = spec
        self.value = value
        self._hash = None
        self._nz = bool(value[0]) if spec.kind == "rational" else bool(value)

    # helpers
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch(f"{self.spec.describe()} vs {other.spec.describe()}")
            return other
        if isinstance(other, int):
            return self.spec(other)
        return NotImplemented

    @staticmethod
    def _frac(spec: FieldSpec, num: Poly, den: Poly) -> "FieldElement":
        p = spec.p
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return FieldElement(spec, ((), (1,)))
        if den == (1,):
            return FieldElement(spec, (num, den))
        g = poly_gcd(num, den, p)
        if g != (1,):
            num = poly_divmod(num, g, p)[0]
            den = poly_divmod(den, g, p)[0]
        den, lead = poly_monic(den, p)
        if lead != 1:
            num = poly_scale(num, pow(lead, p - 2, p), p)
        return FieldElement(spec, (num, den))

    def is_zero(self) -> bool:
        return not self._nz

    def __bool__(self) -> bool:
        return self._nz

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        s, p = self.spec, self.spec.p
        if s.kind == "prime":
            return FieldElement(s, (self.value + other.value) % p)
        if s.kind == "extension":
            return FieldElement(s, poly_add(self.value, other.value, p))
        (a, b), (c, d) = self.value, other.value
        if b == d:
            return self._frac(s, poly_add(a, c, p), b)
        return self._frac(s, poly_add(poly_mul(a, d, p), poly_mul(c, b, p), p), poly_mul(b, d, p))

    __radd__ = __add__

    def __neg__(self):
        s, p = self.spec, self.spec.p
        if s.kind == "prime":
            return FieldElement(s, (-self.value) % p)
        if s.kind == "extension":
            return FieldElement(s, poly_neg(self.value, p))
        return FieldElement(s, (poly_neg(self.value[0], p), self.value[1]))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        s, p = self.spec, self.spec.p
        if s.kind == "prime":
            return FieldElement(s, (self.value * other.value) % p)
        if s.kind == "extension":
            return FieldElement(s, poly_divmod(poly_mul(self.value, other.value, p), s.modulus, p)[1])
        (a, b), (c, d) = self.value, other.value
        if not a or not c:
            return s.zero
        return self._frac(s, poly_mul(a, c, p), poly_mul(b, d, p))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        s, p = self.spec, self.spec.p
        if s.kind == "prime":
            return FieldElement(s, pow(self.value, p - 2, p))
        if s.kind == "extension":
            return self ** (s.order - 2)
        a, b = self.value
        return self._frac(s, b, a)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        s = self.spec
        if s.kind == "prime":
            return FieldElement(s, pow(self.value, e, s.p))
        result, base = s.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # Frobenius
    def frobenius(self, n: int = 1) -> "FieldElement":
        """Return ``self ** (p ** n)``."""
        s, p = self.spec, self.spec.p
        if s.kind == "rational":
            q = p ** n
            num, den = self.value
            return FieldElement(s, (_expand_power(num, q), _expand_power(den, q)))
        if s.kind == "extension":
            n %= s.degree
        return self ** (p ** n)

    def p_power_decompose(self, n: int = 1) -> list["FieldElement"]:
        """Write ``self = sum_j w_j ** (p**n) * t**j`` over the p-basis 1, t, ..., t**(p**n - 1).

        On perfect fields the p-basis is {1} and the result is
        ``[root, 0, ..., 0]``.
        """
        s, p = self.spec, self.spec.p
        q = p ** n
        if s.is_perfect:
            return [self.frobenius_root(n)] + [s.zero] * (q - 1)
        num, den = self.value
        # self = num * den**(q-1) / den**q; split numerator by exponent class mod q
        m = poly_mul(num, _poly_pow(den, q - 1, p), p)
        out = []
        for j in range(q):
            # coefficients of GF(p) are fixed by Frobenius, so the q-th root of
            # sum c_i t^(q*i) is sum c_i t^i
            part = _trim(m[j::q])
            out.append(self._frac(s, part, den))
        return out

    def frobenius_root(self, n: int = 1) -> Optional["FieldElement"]:
        """Return the unique y with ``y ** (p**n) == self``, or None if there is none."""
        s = self.spec
        if s.kind == "prime":
            return self
        if s.kind == "extension":
            m = s.degree
            return self.frobenius((-n) % m)
        parts = self.p_power_decompose(n)
        if any(not w.is_zero() for w in parts[1:]):
            return None
        return parts[0]

    def is_p_power(self, n: int = 1) -> bool:
        return self.frobenius_root(n) is not None

    def nth_root(self, k: int) -> Optional["FieldElement"]:
        """Some y with y**k == self, or None. Exhaustive for finite fields."""
        if self.is_zero():
            return self
        s = self.spec
        p = s.p
        e = 0
        while k % p == 0:
            k //= p
            e += 1
        x = self.frobenius_root(e) if e else self
        if x is None:
            return None
        if k == 1:
            return x
        if s.kind == "rational":
            # only the easy case: constants in GF(p)
            num, den = x.value
            if len(num) <= 1 and den == (1,):
                for y in range(1, p):
                    if pow(y, k, p) == num[0]:
                        return s(y)
            return None
        for y in s.elements():
            if y ** k == x:
                return y
        return None

    # comparison / hashing / printing
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, self.value))
        return self._hash

    def __str__(self):
        s = self.spec
        if s.kind == "prime":
            return str(self.value)
        if s.kind == "extension":
            return poly_str(self.value, s.var)
        num, den = self.value
        ns = poly_str(num, s.var)
        if den == (1,):
            return ns
        if sum(1 for c in num if c) > 1:
            ns = f"({ns})"
        ds = poly_str(den, s.var)
        if sum(1 for c in den if c) > 1 or (len(den) > 2 and den[-1] != 1):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"FieldElement({self.spec.short()}, {self})"


def _poly_pow(f: Poly, e: int, p: int) -> Poly:
    result: Poly = (1,)
    while e:
        if e & 1:
            result = poly_mul(result, f, p)
        f = poly_mul(f, f, p) if e > 1 else f
        e >>= 1
    return result


def _expand_power(f: Poly, q: int) -> Poly:
    # over GF(p), f(t)**q = f(t**q) for q a power of p
    if not f:
        return f
    out = [0] * ((len(f) - 1) * q + 1)
    for i, c in enumerate(f):
        out[i * q] = c
    return _trim(out)


# --------------------------------------------------------------------------
# element syntax: integers, the field variable, + - * / ^ and parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ParseError(FieldError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(f"{message} at column {pos + 1} in {text!r}" if text else message)
        self.pos = pos


class _Parser:
    def __init__(self, spec: FieldSpec, text: str):
        self.spec = spec
        self.text = text
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            kind = "int" if m.group(1) else "name" if m.group(2) else "op"
            self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def run(self) -> FieldElement:
        if not self.tokens:
            self.fail("empty field element")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.power()
        while True:
            kind, tok, _ = self.peek()
            if kind == "op" and tok in "*/":
                self.take()
                rhs = self.power()
                if tok == "*":
                    value = value * rhs
                else:
                    if rhs.is_zero():
                        self.fail("division by zero")
                    value = value / rhs
            elif kind in ("name", "int") or (kind == "op" and tok == "("):
                value = value * self.power()  # implicit multiplication, e.g. 2t
            else:
                return value

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            kind, tok, _ = self.peek()
            if kind == "op" and tok == "{":
                self.take()
                kind, tok, _ = self.take()
                if self.take()[1] != "}":
                    self.fail("expected '}'")
            else:
                self.take()
            if kind != "int":
                self.fail("exponent must be an integer")
            e = int(tok)
            base = base ** (-e if neg else e)
        return base

    def atom(self):
        kind, tok, _ = self.peek()
        if kind == "int":
            self.take()
            return self.spec(int(tok))
        if kind == "name":
            if self.spec.kind == "prime" or tok != self.spec.var:
                self.fail(f"unknown symbol {tok!r}")
            self.take()
            return self.spec.from_poly((0, 1))
        if kind == "op" and tok == "(":
            self.take()
            value = self.expr()
            if self.take()[1] != ")":
                self.i -= 1
                self.fail("expected ')'")
            return value
        self.fail(f"unexpected {tok!r}" if tok else "unexpected end of input")


Scalar = Union[FieldElement, int]
