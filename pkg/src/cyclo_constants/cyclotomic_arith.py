"""Number-theoretic helpers and exact arithmetic in the cyclotomic field Q(zeta_n).

Elements of Q(zeta_n) are stored in the power basis 1, t, ..., t^(phi-1) of
Q[t]/(Phi_n(t)) as a tuple of integer numerators over one positive common
denominator.  The representation is canonical, so equality is structural.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ((p, e), ...) with p increasing."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def xi(n: int) -> int:
    """Sum of n/p over the distinct primes p dividing n."""
    return sum(n // p for p, _ in factorize(n))


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class NTheoryContext:
    n: int
    prime_factorization: tuple[tuple[int, int], ...]
    n0: int
    n_prime: int
    phi_n: int
    xi_n: int
    mu_n: int

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.prime_factorization)

    @property
    def m(self) -> int:
        """Transcendence degree n - phi(n) of the field of constants of d."""
        return self.n - self.phi_n

    @property
    def is_prime_power(self) -> bool:
        return len(self.prime_factorization) == 1

    @property
    def is_prime(self) -> bool:
        return self.prime_factorization == ((self.n, 1),)


def _context(n: int) -> NTheoryContext:
    fac = factorize(n)
    n0 = 1
    for p, _ in fac:
        n0 *= p
    return NTheoryContext(
        n=n,
        prime_factorization=fac,
        n0=n0,
        n_prime=n // n0,
        phi_n=euler_phi(n),
        xi_n=xi(n),
        mu_n=mobius(n),
    )


def make_context(n: int) -> NTheoryContext:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")
    return _context(n)


# ---------------------------------------------------------------------------
# integer polynomials (ascending coefficient lists)

def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _int_poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _int_poly_divmod_monic(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a by a monic integer polynomial b."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [0], _trim(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            quot[k - db] = c
            for i, bi in enumerate(b):
                rem[k - db + i] -= c * bi
    return _trim(quot), _trim(rem[:db] or [0])


@dataclass(frozen=True)
class CycloPoly:
    """Phi_n(t) as ascending integer coefficients c_0..c_phi."""

    n: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_json(self) -> str:
        return json.dumps(list(self.coefficients))


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in divisors(n)[:-1]:
        den = _int_poly_mul(den, _cyclotomic_coeffs(d))
    quot, rem = _int_poly_divmod_monic(num, den)
    if rem != [0]:
        raise ArithmeticError(f"inexact division computing Phi_{n}")
    return tuple(quot)


def cyclotomic_poly(n: int) -> CycloPoly:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return CycloPoly(n, _cyclotomic_coeffs(n))


def phi_at_one(n: int) -> int:
    """Phi_n(1): the prime p when n is a power of p, otherwise 1."""
    fac = factorize(n)
    return fac[0][0] if len(fac) == 1 else 1


@dataclass(frozen=True)
class LamLeung:
    """Coefficient classifier for Phi_pq with phi(pq) = r*p + s*q."""

    p: int
    q: int
    r: int
    s: int
    signs: tuple[int, ...]

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.signs):
            return self.signs[k]
        return 0


def lam_leung_coefficients(p: int, q: int) -> LamLeung:
    if p == q or not (is_prime(p) and is_prime(q)):
        raise ValueError(f"need two distinct primes, got ({p}, {q})")
    if p < q:
        raise ValueError(f"need p > q, got ({p}, {q})")
    r = pow(p, -1, q) - 1
    s = pow(q, -1, p) - 1
    deg = (p - 1) * (q - 1)
    if r * p + s * q != deg:
        raise ArithmeticError("phi(pq) = rp + sq failed")
    signs = [0] * (deg + 1)
    for i in range(r + 1):
        for j in range(s + 1):
            signs[i * p + j * q] = 1
    for i in range(q - 1 - r):
        for j in range(p - 1 - s):
            signs[i * p + j * q + 1] = -1
    return LamLeung(p, q, r, s, tuple(signs))


# ---------------------------------------------------------------------------
# the field Q(zeta_n)

class CycloField:
    """Q[t]/(Phi_n) with precomputed reductions of t^k."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        self.n = n
        self.modulus = _cyclotomic_coeffs(n)
        self.phi = len(self.modulus) - 1
        top = max(2 * self.phi - 1, n)
        red = []
        cur = [0] * self.phi
        cur[0] = 1
        for _ in range(top):
            red.append(tuple(cur))
            # multiply by t and reduce with the monic modulus
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for i in range(self.phi):
                    cur[i] -= carry * self.modulus[i]
        self._red = red
        self._zero_num = (0,) * self.phi
        self.zero = CycloElem(self, self._zero_num, 1, _raw=True)
        self.one = self.from_int(1)
        self._zeta = [CycloElem(self, red[k], 1, _raw=True) for k in range(n)]

    def __repr__(self):
        return f"CycloField({self.n})"

    def __reduce__(self):
        return (cyclo_field, (self.n,))

    def from_int(self, k: int) -> CycloElem:
        num = [0] * self.phi
        num[0] = int(k)
        return CycloElem(self, tuple(num), 1, _raw=True)

    def from_rational(self, x) -> CycloElem:
        x = Fraction(x)
        num = [0] * self.phi
        num[0] = x.numerator
        return CycloElem(self, tuple(num), x.denominator, _raw=True)

    def coerce(self, x) -> CycloElem:
        if isinstance(x, CycloElem):
            if x.field.n != self.n:
                raise ValueError(f"element of Q(zeta_{x.field.n}) used in Q(zeta_{self.n})")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        return self.from_rational(x)

    def zeta(self, k: int = 1) -> CycloElem:
        """The primitive root zeta_n raised to k (any integer k)."""
        return self._zeta[k % self.n]

    def from_int_poly(self, coeffs: Sequence[int], den: int = 1) -> CycloElem:
        """Image of sum c_k t^k (over den) in the field."""
        phi, red = self.phi, self._red
        out = [0] * phi
        for k, c in enumerate(coeffs):
            if c:
                if k >= len(red):
                    r = self._red_power(k)
                else:
                    r = red[k]
                for i in range(phi):
                    if r[i]:
                        out[i] += c * r[i]
        return CycloElem(self, tuple(out), den)

    def _red_power(self, k: int) -> tuple[int, ...]:
        if k < len(self._red):
            return self._red[k]
        if self.n > 1:
            return self._red[k % self.n]
        return self._red[0]

    def from_coords(self, coords: Iterable) -> CycloElem:
        fr = [Fraction(c) for c in coords]
        if len(fr) != self.phi:
            raise ValueError(f"expected {self.phi} coordinates, got {len(fr)}")
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return CycloElem(self, tuple(int(c * den) for c in fr), den)

    def evaluate_int_vector(self, alpha: Sequence[int]) -> CycloElem:
        """H_alpha(zeta) = sum alpha_j zeta^j."""
        return self.from_int_poly(alpha)


@lru_cache(maxsize=None)
def cyclo_field(n: int) -> CycloField:
    return CycloField(n)


class CycloElem:
    """Element of Q(zeta_n) in canonical power-basis form."""

    __slots__ = ("field", "num", "den")

    def __init__(self, fld: CycloField, num: tuple[int, ...], den: int = 1, _raw: bool = False):
        self.field = fld
        if not _raw:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                num = tuple(-c for c in num)
                den = -den
            if den != 1:
                g = den
                for c in num:
                    if c:
                        g = gcd(g, c)
                        if g == 1:
                            break
                if not any(num):
                    g = den
                if g != 1:
                    num = tuple(c // g for c in num)
                    den //= g
        self.num = num
        self.den = den

    # -- predicates
    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    # -- arithmetic
    def _coerce(self, other) -> CycloElem | None:
        if isinstance(other, CycloElem):
            if other.field is not self.field and other.field.n != self.field.n:
                raise ValueError("mixing elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycloElem(self.field, tuple(a + b for a, b in zip(self.num, o.num)), self.den)
        return CycloElem(
            self.field,
            tuple(a * o.den + b * self.den for a, b in zip(self.num, o.num)),
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.field, tuple(-a for a in self.num), self.den, _raw=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.field.zero
            return CycloElem(self.field, tuple(a * other for a in self.num), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        if not any(b[1:]):
            c = b[0]
            return CycloElem(self.field, tuple(x * c for x in a), self.den * o.den)
        if not any(a[1:]):
            c = a[0]
            return CycloElem(self.field, tuple(x * c for x in b), self.den * o.den)
        fld = self.field
        phi = fld.phi
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:phi]
        red = fld._red
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                rk = red[k]
                for i in range(phi):
                    if rk[i]:
                        out[i] += c * rk[i]
        return CycloElem(fld, tuple(out), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> CycloElem:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_n)")
        if self.is_rational():
            return self.field.from_rational(Fraction(self.den, self.num[0]))
        # extended Euclid in Q[t]: s*a + t*Phi = 1
        a = [Fraction(c) for c in self.num]
        m = [Fraction(c) for c in self.field.modulus]
        s = _poly_inverse_mod(a, m)
        return self.field.from_coords(s + [Fraction(0)] * (self.field.phi - len(s))) * self.den

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.field.n == other.field.n and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.field.n, self.num, self.den))

    def to_json(self) -> list:
        return [_rat_json(Fraction(c, self.den)) for c in self.num]

    def __repr__(self):
        return f"CycloElem({self.field.n}, {self})"

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            fr = Fraction(c, self.den)
            mon = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                parts.append(str(fr))
            elif fr == 1:
                parts.append(mon)
            elif fr == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{fr}*{mon}")
        s = " + ".join(parts).replace("+ -", "- ")
        return f"({s})"


def _rat_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(x) -> Fraction:
    return Fraction(x) if not isinstance(x, str) else Fraction(x)


def _poly_strip(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(_poly_strip(a)) >= len(b):
        c = a[-1] / lb
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
    return q, a


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    r0, r1 = list(m), _poly_strip(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, _poly_strip(r)
        s0, s1 = s1, _poly_strip(_poly_sub(s0, _poly_mul(q, s1)))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]
