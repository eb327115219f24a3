"""Exact fields of characteristic different from two.

Three kinds of field are supported: the rationals (elements are
``fractions.Fraction``), prime fields F_p for odd p (elements are
``FpElement``) and quadratic extensions F(sqrt d) of either
(elements are ``QuadElement``, meaning a + b*sqrt(d)).

All element types interoperate with Python ints, so generic code can
write ``x + 1`` or ``2 * x`` regardless of the field.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from typing import Iterator


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface. Subclasses provide the element arithmetic."""

    characteristic: int
    descriptor: str

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def sqrt(self, x):
        """Canonical square root of x, or None when x is not a square."""
        raise NotImplementedError

    def has_sqrt_minus_one(self) -> bool:
        return self.sqrt(self(-1)) is not None

    def is_finite(self) -> bool:
        return self.characteristic > 0

    def random(self, rng: random.Random):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def key(self, x):
        """A sort key giving a deterministic order on elements."""
        raise NotImplementedError

    def elements(self) -> Iterator:
        raise FieldError(f"{self.descriptor} is not finite")

    def roots_of_unity(self, m: int) -> list:
        """All mu in the field with mu**m == 1, sorted by ``key``."""
        if m <= 0:
            raise FieldError("m must be positive")
        if self.is_finite():
            cands = [x for x in self.elements() if x != 0]
        else:
            cands = self._char0_unity_candidates()
        roots = {self.key(c): c for c in cands if c ** m == 1}
        return [roots[k] for k in sorted(roots)]

    def _char0_unity_candidates(self) -> list:
        # roots of unity in Q or a quadratic extension of Q have order
        # 1, 2, 3, 4 or 6
        out = [self(1), self(-1)]
        i = self.sqrt(self(-1))
        if i is not None:
            out += [i, -i]
        s3 = self.sqrt(self(-3))
        if s3 is not None:
            for a in (1, -1):
                for b in (s3, -s3):
                    out.append((self(a) + b) / 2)
        return out

    def __repr__(self) -> str:
        return f"Field({self.descriptor!r})"

    def __str__(self) -> str:
        return self.descriptor

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.descriptor == self.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)


class Rationals(Field):
    characteristic = 0
    descriptor = "Q"

    def __call__(self, x):
        if isinstance(x, (FpElement, QuadElement)):
            raise FieldError(f"cannot coerce {x!r} into Q")
        if isinstance(x, str):
            return Fraction(x.strip())
        return Fraction(x)

    def sqrt(self, x):
        x = Fraction(x)
        if x < 0:
            return None
        a, b = x.numerator, x.denominator
        ra, rb = math.isqrt(a), math.isqrt(b)
        if ra * ra == a and rb * rb == b:
            return Fraction(ra, rb)
        return None

    def random(self, rng: random.Random):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

    def format(self, x) -> str:
        return str(Fraction(x))

    def parse(self, s: str):
        return Fraction(s.strip())

    def key(self, x):
        return Fraction(x)

    def is_positive(self, x) -> bool:
        return x > 0


QQ = Rationals()


class FpElement:
    """Residue modulo an odd prime p, stored as its least nonnegative value."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, FpElement):
            if o.p != self.p:
                raise FieldError("mixing different prime fields")
            return o.v
        if isinstance(o, int):
            return o
        return None

    def __add__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return FpElement(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return FpElement(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return FpElement(w - self.v, self.p)

    def __mul__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return FpElement(self.v * w, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return FpElement(w, self.p) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FpElement(pow(self.v, k, self.p), self.p)

    def __eq__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return (self.v - w) % self.p == 0

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def __str__(self):
        return str(self.v)


class PrimeField(Field):
    def __init__(self, p: int):
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not _is_prime(p):
            raise FieldError(f"{p} is not an odd prime")
        self.p = p
        self.characteristic = p
        self.descriptor = f"Fp:{p}"

    def __call__(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldError("mixing different prime fields")
            return x
        if isinstance(x, Fraction):
            return FpElement(x.numerator, self.p) / x.denominator
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, QuadElement):
            raise FieldError(f"cannot coerce {x!r} into {self.descriptor}")
        return FpElement(int(x), self.p)

    def sqrt(self, x):
        x = self(x)
        if x.v == 0:
            return FpElement(0, self.p)
        p = self.p
        if pow(x.v, (p - 1) // 2, p) != 1:
            return None
        s = _tonelli_shanks(x.v, p)
        return FpElement(min(s, p - s), p)

    def random(self, rng: random.Random):
        return FpElement(rng.randrange(self.p), self.p)

    def format(self, x) -> str:
        return str(self(x).v)

    def parse(self, s: str):
        s = s.strip()
        if "/" in s:
            return self(Fraction(s))
        return FpElement(int(s), self.p)

    def key(self, x):
        return self(x).v

    def elements(self):
        for v in range(self.p):
            yield FpElement(v, self.p)

    def is_positive(self, x) -> bool:
        # "positive" residues are the least representatives of {x, -x}
        v = self(x).v
        return 0 < v <= (self.p - 1) // 2


def _tonelli_shanks(a: int, p: int) -> int:
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class QuadElement:
    """a + b*sqrt(d) in a fixed quadratic extension."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b, field: "QuadraticExtension"):
        self.a = a
        self.b = b
        self.field = field

    def _other(self, o):
        if isinstance(o, QuadElement):
            if o.field is not self.field and o.field != self.field:
                raise FieldError("mixing different quadratic extensions")
            return o.a, o.b
        if isinstance(o, (int, Fraction, FpElement)):
            return self.field.base(o), 0
        return None

    def __add__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return QuadElement(self.a + w[0], self.b + w[1], self.field)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return QuadElement(self.a - w[0], self.b - w[1], self.field)

    def __rsub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return QuadElement(w[0] - self.a, w[1] - self.b, self.field)

    def __mul__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        c, e = w
        d = self.field.d
        return QuadElement(self.a * c + d * self.b * e, self.a * e + self.b * c, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadElement(-self.a, -self.b, self.field)

    def __pos__(self):
        return self

    def norm(self):
        return self.a * self.a - self.field.d * self.b * self.b

    def inverse(self):
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        return QuadElement(self.a / nm, -self.b / nm, self.field)

    def __truediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self * QuadElement(w[0], w[1], self.field).inverse()

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return QuadElement(w[0], w[1], self.field) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self.a == w[0] and self.b == w[1]

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return not (self.a == 0 and self.b == 0)

    def __repr__(self):
        return f"QuadElement({self.field.format(self)})"

    def __str__(self):
        return self.field.format(self)


class QuadraticExtension(Field):
    def __init__(self, base: Field, d):
        if isinstance(base, QuadraticExtension):
            raise FieldError("towers of quadratic extensions are not supported")
        d = base(d)
        if d == 0 or base.sqrt(d) is not None:
            raise FieldError(f"{base.format(d)} is a square in {base.descriptor}")
        self.base = base
        self.d = d
        self.characteristic = base.characteristic
        tag = "i" if d == -1 else f"sqrt:{_signed_repr(base, d)}"
        self.descriptor = f"{base.descriptor}({tag})"

    def __call__(self, x):
        if isinstance(x, QuadElement):
            if x.field != self:
                raise FieldError("mixing different quadratic extensions")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, tuple):
            return QuadElement(self.base(x[0]), self.base(x[1]), self)
        return QuadElement(self.base(x), self.base.zero, self)

    @property
    def root(self):
        """The adjoined square root of d."""
        return QuadElement(self.base.zero, self.base.one, self)

    def sqrt(self, x):
        x = self(x)
        base = self.base
        if x.a == 0 and x.b == 0:
            return self.zero
        cands = []
        if x.b == 0:
            s = base.sqrt(x.a)
            if s is not None:
                cands.append(self((s, 0)))
            t = base.sqrt(x.a / self.d)
            if t is not None:
                cands.append(self((0, t)))
        else:
            s = base.sqrt(x.norm())
            if s is not None:
                for sg in (s, -s):
                    c = base.sqrt((x.a + sg) / 2)
                    if c is not None and c != 0:
                        cands.append(self((c, x.b / (2 * c))))
        for c in cands:
            if c * c == x:
                return self._canonical_sign(c)
        return None

    def _canonical_sign(self, c: QuadElement) -> QuadElement:
        lead = c.a if c.a != 0 else c.b
        return c if self.base.is_positive(lead) else -c

    def random(self, rng: random.Random):
        return QuadElement(self.base.random(rng), self.base.random(rng), self)

    def format(self, x) -> str:
        x = self(x)
        if x.b == 0:
            return self.base.format(x.a)
        return f"({self.base.format(x.a)},{self.base.format(x.b)})"

    def parse(self, s: str):
        s = s.strip()
        if s.startswith("("):
            if not s.endswith(")"):
                raise FieldError(f"bad scalar literal {s!r}")
            a, b = s[1:-1].split(",")
            return self((self.base.parse(a), self.base.parse(b)))
        return self(self.base.parse(s))

    def key(self, x):
        x = self(x)
        return (self.base.key(x.a), self.base.key(x.b))

    def elements(self):
        if not self.base.is_finite():
            raise FieldError(f"{self.descriptor} is not finite")
        for a in self.base.elements():
            for b in self.base.elements():
                yield QuadElement(a, b, self)


def _signed_repr(base: Field, d) -> str:
    if isinstance(base, PrimeField):
        v = base(d).v
        return str(v - base.p if v > base.p // 2 else v)
    return base.format(d)


_DESC = re.compile(r"^(Q|Fp:(\d+))(?:\((i|sqrt:(-?\d+))\))?$")


def parse_field(desc: str) -> Field:
    """Build a field from its descriptor string, e.g. "Q", "Fp:5", "Q(i)"."""
    m = _DESC.match(desc.strip())
    if not m:
        raise FieldError(f"unrecognised field descriptor {desc!r}")
    base: Field = QQ if m.group(1) == "Q" else PrimeField(int(m.group(2)))
    if m.group(3) is None:
        return base
    d = -1 if m.group(3) == "i" else int(m.group(4))
    return QuadraticExtension(base, d)


def sqrt_opt(field: Field, x):
    return field.sqrt(x)


def has_sqrt_minus_one(field: Field) -> bool:
    return field.has_sqrt_minus_one()
