"""Sparse polynomials and rational functions over Q(zeta_n) in n cyclic variables.

A ``MultiPoly`` maps exponent tuples to nonzero ``CycloElem`` coefficients.
Exponents may be negative, which turns the same type into a Laurent
polynomial; ``RatFunc`` always stores two ordinary polynomials with no common
monomial factor.  Terms are ordered graded-lexicographically with variable 0
most significant.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .cyclotomic_arith import CycloElem, CycloField, cyclo_field


def glex_key(e: tuple[int, ...]):
    return (sum(e), e)


class MultiPoly:
    """Sparse (Laurent) polynomial in variables var_0 .. var_{n-1}."""

    __slots__ = ("n", "field", "terms", "var")

    def __init__(self, n: int, terms: dict | None = None, field: CycloField | None = None, var: str = "x"):
        self.n = n
        self.field = field if field is not None else cyclo_field(n)
        self.var = var
        self.terms = terms if terms is not None else {}

    # -- constructors
    @classmethod
    def zero(cls, n: int, var: str = "x") -> MultiPoly:
        return cls(n, {}, var=var)

    @classmethod
    def constant(cls, n: int, c, var: str = "x") -> MultiPoly:
        fld = cyclo_field(n)
        c = fld.coerce(c)
        return cls(n, {(0,) * n: c} if c else {}, fld, var)

    @classmethod
    def variable(cls, n: int, j: int, var: str = "x") -> MultiPoly:
        e = [0] * n
        e[j % n] = 1
        fld = cyclo_field(n)
        return cls(n, {tuple(e): fld.one}, fld, var)

    @classmethod
    def monomial(cls, n: int, exp: Sequence[int], coeff=1, var: str = "x") -> MultiPoly:
        fld = cyclo_field(n)
        c = fld.coerce(coeff)
        return cls(n, {tuple(int(a) for a in exp): c} if c else {}, fld, var)

    @classmethod
    def from_terms(cls, n: int, items: Iterable, var: str = "x") -> MultiPoly:
        fld = cyclo_field(n)
        acc: dict = {}
        for e, c in items:
            e = tuple(int(a) for a in e)
            c = fld.coerce(c)
            acc[e] = acc[e] + c if e in acc else c
        return cls(n, {e: c for e, c in acc.items() if c}, fld, var)

    def _new(self, terms: dict) -> MultiPoly:
        return MultiPoly(self.n, terms, self.field, self.var)

    def with_var(self, var: str) -> MultiPoly:
        return MultiPoly(self.n, self.terms, self.field, var)

    # -- predicates and measures
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> CycloElem:
        if not self.terms:
            return self.field.zero
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def is_polynomial(self) -> bool:
        return all(a >= 0 for e in self.terms for a in e)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self) -> int | None:
        """Common total degree of all terms, or None."""
        if not self.terms:
            raise ValueError("the zero polynomial is homogeneous of every degree")
        degs = {sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def tau_degree(self) -> int | None:
        """s with tau(P) = eps^s P, or None."""
        if not self.terms:
            raise ValueError("tau-degree of the zero polynomial")
        n = self.n
        degs = {sum(j * a for j, a in enumerate(e)) % n for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def leading(self) -> tuple[tuple[int, ...], CycloElem]:
        e = max(self.terms, key=glex_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]), reverse=True)

    def content_exponent(self) -> tuple[int, ...]:
        """Componentwise minimum of the exponents (the largest monomial factor)."""
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for i, a in enumerate(e):
                if a < m[i]:
                    m[i] = a
        return tuple(m)

    # -- arithmetic
    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            if other.n != self.n:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, (int, Fraction, CycloElem)):
            return MultiPoly.constant(self.n, other, self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o.terms) > len(self.terms):
            a, b = o.terms, self.terms
        else:
            a, b = self.terms, o.terms
        out = dict(a)
        for e, c in b.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> MultiPoly:
        c = self.field.coerce(c)
        if not c:
            return self._new({})
        if c == 1:
            return self
        return self._new({e: v * c for e, v in self.terms.items()})

    def shift(self, exp: Sequence[int], c=None) -> MultiPoly:
        """Multiply by c * var^exp."""
        out = {tuple(a + b for a, b in zip(e, exp)): v for e, v in self.terms.items()}
        p = self._new(out)
        return p.scale(c) if c is not None else p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o.terms) == 1:
            (e2, c2), = o.terms.items()
            return self._new({tuple(a + b for a, b in zip(e, e2)): c * c2 for e, c in self.terms.items()})
        if len(self.terms) == 1:
            return o.__mul__(self)
        out: dict = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prev = get(e)
                out[e] = c1 * c2 if prev is None else prev + c1 * c2
        return self._new({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            return self._new({tuple(-k * a for a in e): c ** k})
        result = MultiPoly.constant(self.n, 1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, CycloElem)):
            return self == MultiPoly.constant(self.n, other, self.var)
        return NotImplemented

    __hash__ = None

    def divide_exact(self, other: MultiPoly, laurent: bool = False) -> MultiPoly | None:
        """self / other when the division leaves no remainder, else None."""
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self._new({})
        if len(other.terms) == 1:
            (ge, gc), = other.terms.items()
            inv = gc.inverse()
            out = {}
            for e, c in self.terms.items():
                qe = tuple(a - b for a, b in zip(e, ge))
                if not laurent and min(qe) < 0:
                    return None
                out[qe] = c * inv
            return self._new(out)
        ge, gc = other.leading()
        ginv = gc.inverse()
        gterms = list(other.terms.items())
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem, key=glex_key)
            qe = tuple(a - b for a, b in zip(e, ge))
            if not laurent and min(qe) < 0:
                return None
            qc = rem[e] * ginv
            quot[qe] = qc
            for te, tc in gterms:
                k = tuple(a + b for a, b in zip(qe, te))
                v = rem.get(k)
                v = -(qc * tc) if v is None else v - qc * tc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
            if laurent and len(quot) > 4 * len(self.terms) + 16:
                return None
        return self._new(quot)

    # -- calculus and substitutions
    def diff(self, i: int) -> MultiPoly:
        out = {}
        for e, c in self.terms.items():
            a = e[i]
            if a:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * a
        return self._new(out)

    def evaluate(self, point: Sequence) -> CycloElem:
        fld = self.field
        pts = [fld.coerce(p) for p in point]
        cache: dict = {}

        def power(i, a):
            key = (i, a)
            if key not in cache:
                cache[key] = pts[i] ** a
            return cache[key]

        total = fld.zero
        for e, c in self.terms.items():
            t = c
            for i, a in enumerate(e):
                if a:
                    t = t * power(i, a)
            total = total + t
        return total

    def substitute(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Replace variable i by images[i] (nonnegative exponents only)."""
        if not self.is_polynomial():
            raise ValueError("substitution into a Laurent polynomial")
        cache: dict = {}

        def power(i, a):
            key = (i, a)
            if key not in cache:
                cache[key] = images[i] ** a
            return cache[key]

        target = images[0] if images else self
        total = MultiPoly(target.n, {}, target.field, target.var)
        for e, c in self.sorted_terms():
            t = MultiPoly.constant(target.n, c, target.var)
            for i, a in enumerate(e):
                if a:
                    t = t * power(i, a)
            total = total + t
        return total

    def map_exponents(self, f: Callable[[tuple], tuple], var: str | None = None) -> MultiPoly:
        out: dict = {}
        for e, c in self.terms.items():
            k = f(e)
            if k in out:
                s = out[k] + c
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = c
        return MultiPoly(self.n, out, self.field, var or self.var)

    def map_coefficients(self, f: Callable) -> MultiPoly:
        out = {}
        for e, c in self.terms.items():
            v = f(e, c)
            if v:
                out[e] = v
        return self._new(out)

    # -- output
    def to_json(self) -> list:
        return [{"exp": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()]

    def __repr__(self):
        return f"MultiPoly({self.n}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                f"{self.var}{i}" if a == 1 else f"{self.var}{i}^{a}" for i, a in enumerate(e) if a
            )
            cs = str(c)
            if not mon:
                parts.append(cs)
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{cs}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_poly(n: int, x, var: str) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    return MultiPoly.constant(n, x, var)


class RatFunc:
    """Quotient num/den of polynomials; normalized to share no monomial factor, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized: bool = False):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("RatFunc(RatFunc, den) is not supported")
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, MultiPoly):
            if not isinstance(den, MultiPoly):
                raise TypeError("cannot infer the number of variables")
            num = MultiPoly.constant(den.n, num, den.var)
        if den is None:
            den = MultiPoly.constant(num.n, 1, num.var)
        elif not isinstance(den, MultiPoly):
            den = MultiPoly.constant(num.n, den, num.var)
        if not den.terms:
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def n(self) -> int:
        return self.num.n

    @property
    def field(self) -> CycloField:
        return self.num.field

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def _coerce(self, other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, CycloElem)):
            return RatFunc(MultiPoly.constant(self.n, other, self.var))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

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
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num == o.num and self.den == o.den:
            return True
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def scalar_ratio(self, other: RatFunc) -> CycloElem | None:
        """c with self = c * other, if such a constant exists."""
        a = self.num * other.den
        b = other.num * self.den
        if not a.terms or not b.terms:
            return None if bool(a.terms) != bool(b.terms) else self.field.one
        e, c = b.leading()
        if e not in a.terms:
            return None
        ratio = a.terms[e] / c
        return ratio if a == b.scale(ratio) else None

    def reduced(self) -> RatFunc:
        """Cancel when one side divides the other exactly."""
        if self.den.is_constant() or not self.num.terms:
            return self
        q = self.num.divide_exact(self.den)
        if q is not None:
            return RatFunc(q)
        q = self.den.divide_exact(self.num)
        if q is not None:
            return RatFunc(MultiPoly.constant(self.n, 1, self.var), q)
        return self

    def diff(self, i: int) -> RatFunc:
        return RatFunc(self.num.diff(i) * self.den - self.num * self.den.diff(i), self.den * self.den)

    def evaluate(self, point: Sequence) -> CycloElem:
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(point) / d

    def with_var(self, var: str) -> RatFunc:
        return RatFunc(self.num.with_var(var), self.den.with_var(var), _normalized=True)

    def homogeneous_degree(self) -> int | None:
        """Degree s with f(t*x) = t^s f(x), or None."""
        return is_homogeneous(self)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _normalize(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    if not num.terms:
        return num._new({}), MultiPoly.constant(num.n, 1, num.var)
    a = num.content_exponent()
    b = den.content_exponent()
    shift = tuple(-min(x, y) for x, y in zip(a, b))
    if any(shift):
        num = num.shift(shift)
        den = den.shift(shift)
    _, lc = den.leading()
    if lc != 1:
        inv = lc.inverse()
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def as_ratfunc(f, n: int | None = None, var: str = "x") -> RatFunc:
    if isinstance(f, RatFunc):
        return f
    if isinstance(f, MultiPoly):
        return RatFunc(f)
    if n is None:
        raise TypeError("need n to coerce a scalar")
    return RatFunc(MultiPoly.constant(n, f, var))


# ---------------------------------------------------------------------------
# derivations

class Derivation:
    """A derivation determined by the images of the variables."""

    def __init__(self, images: Sequence[MultiPoly], name: str = "D"):
        self.images = list(images)
        self.n = len(self.images)
        self.name = name
        # flattened images for the per-term loop
        self._img = [list(p.terms.items()) for p in self.images]

    def apply_poly(self, f: MultiPoly) -> MultiPoly:
        out: dict = {}
        get = out.get
        img = self._img
        for e, c in f.terms.items():
            for i, a in enumerate(e):
                if not a:
                    continue
                ca = c * a
                for de, dc in img[i]:
                    k = tuple(x + y - (1 if j == i else 0) for j, (x, y) in enumerate(zip(e, de)))
                    prev = get(k)
                    out[k] = ca * dc if prev is None else prev + ca * dc
        return f._new({k: v for k, v in out.items() if v})

    def apply(self, f):
        if isinstance(f, MultiPoly):
            return self.apply_poly(f)
        f = as_ratfunc(f)
        if f.den.is_constant():
            return RatFunc(self.apply_poly(f.num), f.den)
        dn = self.apply_poly(f.num)
        dd = self.apply_poly(f.den)
        return RatFunc(dn * f.den - f.num * dd, f.den * f.den)

    __call__ = apply

    def kills(self, f) -> bool:
        """D(f) == 0, using D(P) Q == P D(Q) for quotients."""
        if isinstance(f, MultiPoly):
            return not self.apply_poly(f).terms
        f = as_ratfunc(f)
        dn = self.apply_poly(f.num)
        if f.den.is_constant():
            return not dn.terms
        return dn * f.den == f.num * self.apply_poly(f.den)

    def __repr__(self):
        return f"Derivation({self.name}, n={self.n})"


# ---------------------------------------------------------------------------
# automorphisms and gradings

def automorphism_rho(f, k: int = 1):
    """rho^k: var_j -> var_{j+k}."""
    if isinstance(f, RatFunc):
        return RatFunc(automorphism_rho(f.num, k), automorphism_rho(f.den, k))
    n = f.n
    k %= n
    if not k:
        return f
    return f.map_exponents(lambda e: e[-k:] + e[:-k])


def automorphism_tau(f, ctx=None, k: int = 1):
    """tau^k: x_j -> eps^(jk) x_j."""
    if isinstance(f, RatFunc):
        return RatFunc(automorphism_tau(f.num, ctx, k), automorphism_tau(f.den, ctx, k))
    fld = f.field
    n = f.n
    return f.map_coefficients(lambda e, c: c * fld.zeta(k * sum(j * a for j, a in enumerate(e)) % n))


def _euler_degree_check(f: RatFunc, s: int) -> bool:
    # E(P)Q - P E(Q) = s P Q, with E acting on a term of degree k as k
    def euler(p: MultiPoly) -> MultiPoly:
        return p.map_coefficients(lambda e, c: c * sum(e))

    return euler(f.num) * f.den - f.num * euler(f.den) == (f.num * f.den).scale(s)


def is_homogeneous(f) -> int | None:
    f = as_ratfunc(f)
    if not f.num.terms:
        raise ValueError("the zero function is homogeneous of every degree")
    p = f.num.homogeneous_degree()
    q = f.den.homogeneous_degree()
    if p is not None and q is not None:
        return p - q
    s = sum(f.num.leading()[0]) - sum(f.den.leading()[0])
    return s if _euler_degree_check(f, s) else None


def tau_degree(f, ctx=None) -> int | None:
    """s in Z_n with tau(f) = eps^s f, or None; input must be homogeneous."""
    f = as_ratfunc(f)
    if is_homogeneous(f) is None:
        raise ValueError("tau-degree is defined only for homogeneous input")
    n = f.n
    a = f.num.tau_degree()
    b = f.den.tau_degree()
    if a is not None and b is not None:
        return (a - b) % n
    e_num = f.num.leading()[0]
    e_den = f.den.leading()[0]
    s = (sum(j * x for j, x in enumerate(e_num)) - sum(j * x for j, x in enumerate(e_den))) % n
    tf = automorphism_tau(f)
    ok = tf.num * f.den == (f.num * tf.den).scale(f.field.zeta(s))
    return s if ok else None


def tau_decompose(P: MultiPoly, ctx=None) -> list[tuple[int, MultiPoly]]:
    """Split P into tau-homogeneous components, ordered by tau-degree."""
    if not P.terms:
        raise ValueError("tau decomposition of the zero polynomial")
    n = P.n
    groups: dict[int, dict] = {}
    for e, c in P.terms.items():
        s = sum(j * a for j, a in enumerate(e)) % n
        groups.setdefault(s, {})[e] = c
    return [(s, P._new(groups[s])) for s in sorted(groups)]


# ---------------------------------------------------------------------------
# u-forms

def u_form(n: int, j: int, var: str = "x") -> MultiPoly:
    """u_j = sum_i eps^(ij) x_i as a linear form in x."""
    fld = cyclo_field(n)
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = 1
        terms[tuple(e)] = fld.zeta(i * j)
    return MultiPoly(n, terms, fld, var)


def x_in_u(n: int, i: int, var: str = "u") -> MultiPoly:
    """x_i = (1/n) sum_j eps^(-ij) u_j as a linear form in u."""
    fld = cyclo_field(n)
    inv_n = Fraction(1, n)
    terms = {}
    for j in range(n):
        e = [0] * n
        e[j] = 1
        terms[tuple(e)] = fld.zeta(-i * j) * inv_n
    return MultiPoly(n, terms, fld, var)


def u_to_x(f):
    """Rewrite a function of u_0..u_{n-1} in the x variables."""
    if isinstance(f, RatFunc):
        return RatFunc(u_to_x(f.num), u_to_x(f.den))
    n = f.n
    if not f.is_polynomial():
        return u_to_x(laurent_to_ratfunc(f))
    return f.substitute([u_form(n, j, "x") for j in range(n)])


def x_to_u(f):
    """Rewrite a function of x_0..x_{n-1} in the u variables."""
    if isinstance(f, RatFunc):
        return RatFunc(x_to_u(f.num), x_to_u(f.den))
    n = f.n
    return f.substitute([x_in_u(n, i, "u") for i in range(n)])


def laurent_to_ratfunc(f: MultiPoly) -> RatFunc:
    """A Laurent polynomial as num / monomial."""
    if not f.terms:
        return RatFunc(f)
    m = f.content_exponent()
    shift = tuple(-min(a, 0) for a in m)
    num = f.shift(shift)
    den = MultiPoly.monomial(f.n, shift, 1, f.var)
    return RatFunc(num, den)


def monomial_ratfunc(n: int, exp: Sequence[int], coeff=1, var: str = "x") -> RatFunc:
    """coeff * var^exp for an exponent vector of any sign."""
    pos = tuple(max(a, 0) for a in exp)
    neg = tuple(max(-a, 0) for a in exp)
    return RatFunc(MultiPoly.monomial(n, pos, coeff, var), MultiPoly.monomial(n, neg, 1, var))
