"""Exact scalars: rationals and cyclotomic fields Q(zeta_N).

Rationals are stdlib Fractions.  An element of Q(zeta_N) is stored as the
unique reduced remainder mod Phi_N, i.e. a coefficient vector of length
deg Phi_N = phi(N) in the power basis 1, z, z^2, ...  The ground field is
fixed per document: mixing scalars of different cyclotomic orders raises
FieldMismatch instead of auto-promoting.
"""

import cmath
import re
from fractions import Fraction


class FieldMismatch(TypeError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# polynomial helpers (dense lists of Fractions, index = power)

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    """Exact division with remainder, b monic-or-not, over Q."""
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return q, _poly_trim(a)


_CYCLO_CACHE = {}


def cyclotomic_polynomial(N):
    """Coefficient list of Phi_N, computed by dividing x^N - 1 by the
    product of Phi_d over proper divisors d of N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if N in _CYCLO_CACHE:
        return list(_CYCLO_CACHE[N])
    num = [Fraction(-1)] + [Fraction(0)] * (N - 1) + [Fraction(1)]  # x^N - 1
    den = [Fraction(1)]
    for d in range(1, N):
        if N % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    q, r = _poly_divmod(num, den)
    assert not r, "cyclotomic division must be exact"
    _CYCLO_CACHE[N] = q
    return list(q)


def _poly_ext_gcd(a, b):
    """Extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = list(a), list(b)
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        v0, v1 = v1, _poly_sub(v0, _poly_mul(q, v1))
    return r0, u0, v0


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _poly_trim(out)


# ---------------------------------------------------------------------------
# field descriptors


class RationalField:
    """The field Q.  Elements are Fractions."""

    order = None

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        return Fraction(text.strip())

    def format(self, x):
        return str(x)

    def to_complex(self, x):
        return complex(x)

    def random(self, rng, span=9):
        num = rng.randint(-span, span)
        den = rng.randint(1, span)
        return Fraction(num, den)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


_FIELD_CACHE = {}

_TERM_RE = re.compile(
    r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*(?:\*?\s*z(?:\^(\d+))?)?\s*")


class CyclotomicField:
    """Q(zeta_N): the quotient Q[z]/Phi_N(z)."""

    def __new__(cls, N):
        if N in _FIELD_CACHE:
            return _FIELD_CACHE[N]
        self = super().__new__(cls)
        self.order = N
        self.poly = cyclotomic_polynomial(N)
        self.degree = len(self.poly) - 1
        _FIELD_CACHE[N] = self
        return self

    @property
    def zero(self):
        return Cyc(self, (Fraction(0),) * self.degree)

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        c = [Fraction(0)] * self.degree
        if self.degree:
            c[0] = Fraction(n)
        return Cyc(self, tuple(c))

    def from_rational(self, q):
        c = [Fraction(0)] * self.degree
        if self.degree:
            c[0] = Fraction(q)
        return Cyc(self, tuple(c))

    def zeta(self, k=1):
        """zeta_N^k reduced mod Phi_N."""
        k %= self.order
        p = [Fraction(0)] * k + [Fraction(1)]
        _, r = _poly_divmod(p, self.poly)
        return self._from_poly(r)

    def _from_poly(self, p):
        c = list(p) + [Fraction(0)] * (self.degree - len(p))
        return Cyc(self, tuple(c[: self.degree]))

    def parse(self, text):
        """Parse 'c0 + c1*z + c2*z^2' with rational coefficients."""
        coeffs = [Fraction(0)] * self.degree
        pos = 0
        text = text.strip()
        if not text:
            raise ValueError("empty scalar literal")
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError("bad scalar literal: %r" % text)
            sign, coef, power = m.groups()
            if coef is None and "z" not in text[pos:m.end()]:
                raise ValueError("bad scalar literal: %r" % text)
            c = Fraction(coef) if coef is not None else Fraction(1)
            if sign == "-":
                c = -c
            if "z" in text[pos:m.end()]:
                k = int(power) if power is not None else 1
            else:
                k = 0
            if k >= self.degree:
                # reduce z^k mod Phi_N
                term = self.zeta(k) * Cyc(self, tuple(
                    [c] + [Fraction(0)] * (self.degree - 1)))
                for i in range(self.degree):
                    coeffs[i] += term.coeffs[i]
            else:
                coeffs[k] += c
            pos = m.end()
        return Cyc(self, tuple(coeffs))

    def format(self, x):
        parts = []
        for k, c in enumerate(x.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("%s*z" % c)
            else:
                parts.append("%s*z^%d" % (c, k))
        return " + ".join(parts) if parts else "0"

    def to_complex(self, x):
        z = cmath.exp(2j * cmath.pi / self.order)
        total = 0j
        for k, c in enumerate(x.coeffs):
            total += complex(c) * z ** k
        return total

    def random(self, rng, span=4):
        return Cyc(self, tuple(
            Fraction(rng.randint(-span, span), rng.randint(1, 3))
            for _ in range(self.degree)))

    def __repr__(self):
        return "Q(zeta_%d)" % self.order


QQ = RationalField()


class Cyc:
    """An element of a fixed cyclotomic field, in reduced power-basis form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.field.order != self.field.order:
                raise FieldMismatch(
                    "mixed cyclotomic orders %s vs %s"
                    % (self.field.order, other.field.order))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = _poly_mul(list(self.coeffs), list(o.coeffs))
        _, r = _poly_divmod(p, self.field.poly)
        return self.field._from_poly(r)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("cyclotomic division by zero")
        g, u, _ = _poly_ext_gcd(list(self.coeffs), self.field.poly)
        # g is a nonzero constant since Phi_N is irreducible over Q
        assert len(g) == 1
        inv = [c / g[0] for c in u]
        _, r = _poly_divmod(inv, self.field.poly)
        return self.field._from_poly(r)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return self.field.format(self)


def embed_root(N, k):
    """zeta_N^k as an element of Q(zeta_N)."""
    return CyclotomicField(N).zeta(k)


def to_complex(x):
    """Numeric value of an exact scalar (Fraction or Cyc)."""
    if isinstance(x, Cyc):
        return x.field.to_complex(x)
    return complex(x)


def parse_field(desc):
    """Field descriptor from JSON form: 'Q' or {'cyclotomic': N}."""
    if desc == "Q":
        return QQ
    if isinstance(desc, dict) and "cyclotomic" in desc:
        return CyclotomicField(int(desc["cyclotomic"]))
    raise ValueError("unknown field descriptor: %r" % (desc,))


def field_to_json(field):
    if field == QQ:
        return "Q"
    return {"cyclotomic": field.order}
