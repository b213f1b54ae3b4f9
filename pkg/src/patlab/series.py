"""Exact sparse polynomials and t-truncated power series.

The coefficient ring is the integers (Python ints, so arbitrary precision),
and the variable set is fixed: t, y, x, x1, x2, x3, x4.  The variable t
grades everything: a TruncatedSeries of order N carries no information above
t^N and every arithmetic operation truncates there.  Polynomials are plain
and exact.

Monomials are packed into a single int, one byte per variable with t in the
lowest byte, so that multiplying monomials is integer addition.  Exponents
stay far below 256 in this library (t is hard-capped at 16).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

VARS = ("t", "y", "x", "x1", "x2", "x3", "x4")

T_CAP_HARD = 16
T_DEFAULT_ORDER = 10

_SHIFT = {v: 8 * i for i, v in enumerate(VARS)}
_TMASK = 0xFF


class NonInvertibleError(ValueError):
    """Division by a series whose constant term is not a unit (+1 or -1)."""


class NonContractiveError(RuntimeError):
    """A fixed-point equation failed to stabilise within order+1 iterations."""


def pack(exps: dict[str, int]) -> int:
    key = 0
    for v, e in exps.items():
        if e < 0 or e > 255:
            raise ValueError(f"exponent out of range for {v}: {e}")
        key |= e << _SHIFT[v]
    return key


def unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> _SHIFT[v]) & 0xFF for v in VARS)


def _sort_key(key: int) -> tuple[int, ...]:
    # Canonical monomial order: by (deg_t, deg_y), then by the x-block with
    # x1 varying fastest, so x2*y sorts before x3*y.
    t, y, x, x1, x2, x3, x4 = unpack(key)
    return (t, y, x4, x3, x2, x1, x)


class Poly:
    """Sparse multivariate polynomial with exact integer coefficients.

    Zero coefficients are never stored.  Instances are treated as immutable;
    no method mutates self.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.c = coeffs if coeffs is not None else {}

    @staticmethod
    def const(value: int) -> "Poly":
        return Poly({0: value}) if value else Poly()

    @staticmethod
    def variable(name: str, power: int = 1) -> "Poly":
        if name not in _SHIFT:
            raise ValueError(f"unknown variable {name!r}")
        return Poly({power << _SHIFT[name]: 1}) if power else Poly.const(1)

    @staticmethod
    def monomial(exps: dict[str, int], coeff: int = 1) -> "Poly":
        return Poly({pack(exps): coeff}) if coeff else Poly()

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (int, Poly)):
            return NotImplemented
        other = _as_poly(other)
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        if not isinstance(other, (int, Poly)):
            return NotImplemented
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Poly)):
            return NotImplemented
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (int, Poly)):
            return NotImplemented
        return self.mul(_as_poly(other))

    __rmul__ = __mul__

    def mul(self, other: "Poly", tcap: int | None = None) -> "Poly":
        """Product, optionally dropping monomials with deg_t > tcap."""
        a, b = self.c, other.c
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        if tcap is None:
            for ka, ca in a.items():
                for kb, cb in b.items():
                    k = ka + kb
                    s = out.get(k, 0) + ca * cb
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
            return Poly(out)
        bgroups = _by_tdeg(b)
        for ka, ca in a.items():
            room = tcap - (ka & _TMASK)
            for tb, group in bgroups:
                if tb > room:
                    break
                for kb, cb in group:
                    k = ka + kb
                    s = out.get(k, 0) + ca * cb
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return Poly(out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.c == other.c

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"Poly({poly_str(self)})"

    # -- structure ---------------------------------------------------------

    def truncate_t(self, cap: int) -> "Poly":
        return Poly({k: v for k, v in self.c.items() if (k & _TMASK) <= cap})

    def t_degree(self) -> int:
        return max((k & _TMASK for k in self.c), default=0)

    def degree(self, var: str) -> int:
        sh = _SHIFT[var]
        return max(((k >> sh) & 0xFF for k in self.c), default=0)

    def t_slice(self, n: int) -> "Poly":
        """Coefficient of t^n, as a polynomial in the remaining variables."""
        return Poly({k - (n or 0): v for k, v in self.c.items()
                     if (k & _TMASK) == n})

    def coefficient(self, exps: dict[str, int]) -> int:
        return self.c.get(pack(exps), 0)

    def constant_term(self) -> int:
        return self.c.get(0, 0)

    def terms(self):
        """Yield (exponent tuple over VARS, coefficient) in canonical order."""
        for k in sorted(self.c, key=_sort_key):
            yield unpack(k), self.c[k]

    def substitute(self, assignments: dict[str, "Poly | int"]) -> "Poly":
        """Substitute variables by integers or polynomials, exactly."""
        values = {v: _as_poly(p) for v, p in assignments.items()}
        out = Poly()
        for k, coeff in self.c.items():
            rest = k
            factor = Poly.const(coeff)
            for v, p in values.items():
                e = (k >> _SHIFT[v]) & 0xFF
                if e:
                    rest -= e << _SHIFT[v]
                    factor = factor * p ** e
            out = out + Poly({rest: 1}) * factor
        return out

    def div_exact(self, divisor: int) -> "Poly":
        """Divide every coefficient by an integer; error if not exact."""
        out = {}
        for k, v in self.c.items():
            q, r = divmod(v, divisor)
            if r:
                raise ValueError(f"coefficient {v} not divisible by {divisor}")
            out[k] = q
        return Poly(out)

    def div_monomial(self, exps: dict[str, int]) -> "Poly":
        """Divide by a monomial; every term must be divisible."""
        d = pack(exps)
        out = {}
        for k, v in self.c.items():
            for var, e in exps.items():
                if ((k >> _SHIFT[var]) & 0xFF) < e:
                    raise NonInvertibleError(
                        f"term not divisible by {monomial_str(unpack(d))}")
            out[k - d] = v
        return Poly(out)


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to Poly")


def _by_tdeg(coeffs: dict[int, int]):
    groups: dict[int, list] = {}
    for k, v in coeffs.items():
        groups.setdefault(k & _TMASK, []).append((k, v))
    return sorted(groups.items())


@dataclass(frozen=True)
class TruncatedSeries:
    """A polynomial known to be correct for all t-degrees <= order.

    Mixing two series uses the smaller order; multiplication drops monomials
    above it.  Coefficients beyond the order are never reported.
    """

    poly: Poly
    order: int

    def __post_init__(self):
        if self.order < 0 or self.order > T_CAP_HARD:
            raise ValueError(f"series order {self.order} outside [0, {T_CAP_HARD}]")
        if self.poly.t_degree() > self.order:
            object.__setattr__(self, "poly", self.poly.truncate_t(self.order))

    @staticmethod
    def const(value: int, order: int) -> "TruncatedSeries":
        return TruncatedSeries(Poly.const(value), order)

    @staticmethod
    def of(poly: Poly, order: int) -> "TruncatedSeries":
        return TruncatedSeries(poly.truncate_t(order), order)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.poly.truncate_t(order), min(order, self.order))

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Poly)):
            return TruncatedSeries.of(_as_poly(other), self.order)
        raise TypeError(f"cannot mix TruncatedSeries with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries((self.poly + other.poly).truncate_t(order), order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries(self.poly.mul(other.poly, tcap=order), order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("negative power of a series")
        result = TruncatedSeries.const(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def inverse_unit(self) -> "TruncatedSeries":
        """Multiplicative inverse when the t^0 slice is +1 or -1."""
        c0 = self.poly.t_slice(0)
        if c0 != Poly.const(1) and c0 != Poly.const(-1):
            raise NonInvertibleError(
                "series is not invertible: constant term must be +1 or -1, "
                f"got {poly_str(c0)}")
        unit = c0.constant_term()
        den = {n: self.poly.t_slice(n) for n in range(1, self.order + 1)}
        inv = {0: Poly.const(unit)}
        for n in range(1, self.order + 1):
            acc = Poly()
            for j, dj in den.items():
                if j > n:
                    break
                if dj:
                    acc = acc + dj * inv[n - j]
            inv[n] = acc.div_exact(-unit) if acc else Poly()
        out = Poly()
        for n, slice_ in inv.items():
            if slice_:
                out = out + Poly({n: 1}) * slice_
        return TruncatedSeries(out, self.order)

    def div_unit(self, den: "TruncatedSeries") -> "TruncatedSeries":
        den = self._coerce(den)
        return self * den.inverse_unit()

    def substitute(self, assignments: dict[str, "Poly | int"]) -> "TruncatedSeries":
        if "t" in assignments:
            raise ValueError("cannot substitute t: it is the truncation grading")
        return TruncatedSeries(self.poly.substitute(assignments).truncate_t(self.order),
                               self.order)

    def t_slice(self, n: int) -> Poly:
        if n > self.order:
            raise ValueError(f"slice t^{n} beyond series order {self.order}")
        return self.poly.t_slice(n)

    def t_coefficients(self) -> list[Poly]:
        return [self.poly.t_slice(n) for n in range(self.order + 1)]

    def __repr__(self):
        return f"TruncatedSeries({series_str(self)}, order={self.order})"


def geometric(first: TruncatedSeries, ratio: TruncatedSeries) -> TruncatedSeries:
    """first + first*ratio + first*ratio^2 + ... = first / (1 - ratio).

    The ratio must vanish at t = 0 so the denominator is a unit.
    """
    one = TruncatedSeries.const(1, min(first.order, ratio.order))
    return first.div_unit(one - ratio)


def fixed_point_solve(equations, order: int, seeds=None) -> list[TruncatedSeries]:
    """Solve a triangular system S_i = F_i(S_1..S_i) by t-adic iteration.

    Each equation is a callable f(vals, ctx) -> TruncatedSeries, where vals
    is the list of current values for every unknown and ctx provides ring
    constants at the working order.  Equations are solved in listed order;
    each one is iterated with the truncation cap growing 1..order, then
    re-evaluated once at full order to verify stabilisation, i.e. order+1
    evaluations in total.  Seeds give the constant terms (default all 1).
    """
    if order < 0 or order > T_CAP_HARD:
        raise ValueError(f"order {order} outside [0, {T_CAP_HARD}]")
    k = len(equations)
    seeds = [1] * k if seeds is None else list(seeds)
    vals = [TruncatedSeries.const(s, order) for s in seeds]
    for i, eq in enumerate(equations):
        for cap in range(1, order + 1):
            capped = [TruncatedSeries(v.poly.truncate_t(cap), cap) for v in vals]
            step = eq(capped, EqContext(cap))
            vals[i] = TruncatedSeries(step.poly.truncate_t(cap), order)
        final = eq(vals, EqContext(order))
        if final.poly.truncate_t(order) != vals[i].poly:
            raise NonContractiveError(
                f"equation {i} did not stabilise at order {order}")
        vals[i] = TruncatedSeries(final.poly.truncate_t(order), order)
    return vals


class EqContext:
    """Ring constants at a fixed truncation order, for writing equations."""

    def __init__(self, order: int):
        self.order = order
        self.one = TruncatedSeries.const(1, order)
        for v in VARS:
            setattr(self, v, TruncatedSeries(Poly.variable(v), order))

    def const(self, value: int) -> TruncatedSeries:
        return TruncatedSeries.const(value, self.order)

    def geo(self, first: TruncatedSeries, ratio: TruncatedSeries) -> TruncatedSeries:
        return geometric(first, ratio)


# -- slice symmetry ---------------------------------------------------------

def y_reverse(slice_poly: Poly, n: int) -> Poly:
    """Map the coefficient of y^d to y^(n-1-d) within a fixed t^n slice.

    The argument must be t-free with y-degree at most n-1; the map is an
    involution on such slices.
    """
    if n < 1:
        raise ValueError("y_reverse needs a slice of degree n >= 1")
    if slice_poly.t_degree() > 0:
        raise ValueError("y_reverse expects a t-free slice polynomial")
    if slice_poly.degree("y") > n - 1:
        raise ValueError(
            f"y-degree {slice_poly.degree('y')} exceeds n-1 = {n - 1}")
    sh = _SHIFT["y"]
    out = {}
    for k, v in slice_poly.c.items():
        d = (k >> sh) & 0xFF
        out[k - (d << sh) + ((n - 1 - d) << sh)] = v
    return Poly(out)


# -- integer combinatorics ----------------------------------------------------

def gen_binom(alpha: int, j: int) -> int:
    """Generalized binomial coefficient: alpha(alpha-1)...(alpha-j+1)/j!.

    Defined for integer alpha of any sign; 0 for j < 0, 1 for j = 0.
    """
    if j < 0:
        return 0
    if j == 0:
        return 1
    num = 1
    for i in range(j):
        num *= alpha - i
    return num // factorial(j)


def multinom(n: int, parts) -> int:
    """n! / prod(part!), or 0 if any part is negative or they don't sum to n."""
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the multinomial convention: 0 unless 0<=k<=n."""
    return multinom(n, [k, n - k]) if 0 <= k <= n else 0


def catalan(n: int) -> int:
    """The n-th Catalan number, (1/(n+1)) * C(2n, n)."""
    return binom(2 * n, n) // (n + 1)


# -- rendering ----------------------------------------------------------------

# Within a monomial, variables print in the order t, x, x1..x4, y; monomials
# are sorted by (deg_t, deg_y, deg_x, deg_x1..deg_x4).
_PRINT_ORDER = ("t", "x", "x1", "x2", "x3", "x4", "y")


def monomial_str(exps: tuple[int, ...], coeff: int = 1, star_coeff: bool = True) -> str:
    by_var = dict(zip(VARS, exps))
    parts = []
    for v in _PRINT_ORDER:
        e = by_var[v]
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    mag = abs(coeff)
    if not parts:
        body = str(mag)
    elif mag == 1:
        body = "*".join(parts)
    elif star_coeff:
        body = "*".join([str(mag)] + parts)
    else:
        body = str(mag) + "*".join(parts)
    return ("-" if coeff < 0 else "") + body


def poly_str(p: Poly) -> str:
    """Canonical flat rendering, e.g. '9 + 5*x1' or 'x1 + x2*y + y'."""
    terms = list(p.terms())
    if not terms:
        return "0"
    out = monomial_str(*terms[0])
    for exps, coeff in terms[1:]:
        sign = " - " if coeff < 0 else " + "
        out += sign + monomial_str(exps, abs(coeff))
    return out


def _compact_slice_str(p: Poly) -> str:
    terms = list(p.terms())
    out = monomial_str(*terms[0], star_coeff=False)
    for exps, coeff in terms[1:]:
        sign = "-" if coeff < 0 else "+"
        out += sign + monomial_str(exps, abs(coeff), star_coeff=False)
    return out


def series_str(s: TruncatedSeries) -> str:
    """Rendering grouped by t-degree, e.g. '1 + t + 2*t^2 + (4+x)*t^3'."""
    chunks = []
    for n in range(s.order + 1):
        sl = s.t_slice(n)
        if not sl:
            continue
        tpart = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
        if len(sl.c) == 1:
            ((key, coeff),) = sl.c.items()
            full = unpack(key + (n << _SHIFT["t"]))
            chunks.append(monomial_str(full, coeff))
        else:
            chunks.append(f"({_compact_slice_str(sl)})*{tpart}")
    return " + ".join(chunks) if chunks else "0"
