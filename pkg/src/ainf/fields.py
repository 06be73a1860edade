"""Exact coefficient fields: the rationals and prime fields F_p.

Field elements are plain values with arithmetic operators (Fraction for Q,
ModP for F_p), so generic code can compute with them directly.  A Field
object supplies constants, parsing and serialization.
"""

from fractions import Fraction


class ModP:
    """Residue in F_p.  Immutable; normalized to [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.value * pow(o.value, self.p - 2, self.p), self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "ModP(%d, %d)" % (self.value, self.p)


def _is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


class Field:
    """A coefficient field: either Q or F_p."""

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else ModP(0, self.p)

    @property
    def one(self):
        return Fraction(1) if self.p is None else ModP(1, self.p)

    def of(self, n):
        """Embed an integer (or pass through a field element)."""
        if self.p is None:
            if isinstance(n, (int, Fraction)):
                return Fraction(n)
        else:
            if isinstance(n, int):
                return ModP(n, self.p)
            if isinstance(n, ModP) and n.p == self.p:
                return n
            if isinstance(n, Fraction) and n.denominator == 1:
                return ModP(n.numerator, self.p)
        raise TypeError("cannot coerce %r into %s" % (n, self))

    def parse(self, text):
        """Parse an exact scalar: an int, or a "num/den" string."""
        if isinstance(text, int):
            return self.of(text)
        if isinstance(text, str):
            q = Fraction(text.strip())
            if self.p is None:
                return q
            den = q.denominator % self.p
            if den == 0:
                raise ValueError("denominator of %s vanishes mod %d" % (text, self.p))
            return ModP(q.numerator, self.p) / ModP(den, self.p)
        raise TypeError("cannot parse scalar from %r" % (text,))

    def serialize(self, x):
        if self.p is None:
            if x.denominator == 1:
                return str(x.numerator)
            return "%d/%d" % (x.numerator, x.denominator)
        return str(x.value)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else "GF(%d)" % self.p


QQ = Field()
