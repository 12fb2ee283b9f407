"""Truncated formal power series in x with exact polynomial coefficients.

All functional equations are solved by x-adic fixed-point iteration: each
application of the defining equation fixes one more coefficient, because the
unknown series only ever enters multiplied by x.  This keeps every step in
exact integer arithmetic; no radicals are ever expanded.
"""

from __future__ import annotations

from .errors import CompositionError, DivisibilityError
from .polynomials import Polynomial

PQR = ("p", "q", "r")
PZ = ("p", "z")
PQRV = ("p", "q", "r", "v")


class TruncatedSeries:
    """Series sum_{k<=N} c_k x**k with Polynomial coefficients, exact mod x^(N+1)."""

    __slots__ = ("vars", "order", "coeffs")

    def __init__(self, vars, coeffs, order=None):
        vars = tuple(vars)
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        zero = Polynomial.zero(vars)
        fixed = []
        for k in range(order + 1):
            c = coeffs[k] if k < len(coeffs) else zero
            if isinstance(c, int):
                c = Polynomial.constant(c, vars)
            if c.vars != vars:
                raise ValueError("coefficient variable mismatch")
            fixed.append(c)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(fixed))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zeros(cls, vars, order):
        return cls(vars, [], order)

    @classmethod
    def constant(cls, value, vars, order):
        return cls(vars, [value], order)

    @classmethod
    def x(cls, vars, order):
        return cls(vars, [0, 1], order)

    def coefficient(self, k):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def _check(self, other):
        if self.vars != other.vars or self.order != other.order:
            raise ValueError("series mismatch (variables or truncation order)")

    def __add__(self, other):
        if isinstance(other, (int, Polynomial)):
            other = TruncatedSeries.constant(other, self.vars, self.order)
        self._check(other)
        return TruncatedSeries(
            self.vars, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.vars, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Polynomial)):
            other = TruncatedSeries.constant(other, self.vars, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        self._check(other)
        zero = Polynomial.zero(self.vars)
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.vars, out, self.order)

    def scale(self, poly):
        """Multiply every coefficient by a polynomial (or int) scalar."""
        if isinstance(poly, int):
            poly = Polynomial.constant(poly, self.vars)
        return TruncatedSeries(self.vars, [c * poly for c in self.coeffs], self.order)

    def shift(self, k=1):
        """Multiply by x**k, dropping what overflows the truncation order."""
        return TruncatedSeries(
            self.vars, [Polynomial.zero(self.vars)] * k + list(self.coeffs), self.order
        )

    def inverse(self):
        """Reciprocal series; the constant coefficient must be exactly 1."""
        if self.coeffs[0] != Polynomial.one(self.vars):
            raise DivisibilityError("series inverse needs constant coefficient 1")
        inv = [Polynomial.one(self.vars)]
        for n in range(1, self.order + 1):
            acc = Polynomial.zero(self.vars)
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * inv[n - k]
            inv.append(-acc)
        return TruncatedSeries(self.vars, inv, self.order)

    def __truediv__(self, other):
        return self * other.inverse()

    def compose(self, inner):
        """Substitute the inner series for x; it must vanish at x = 0."""
        self._check(inner)
        if not inner.coeffs[0].is_zero():
            raise CompositionError("inner series must have zero constant term")
        result = TruncatedSeries.constant(self.coeffs[self.order], self.vars, self.order)
        for k in range(self.order - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def specialize(self, values):
        return self.map_coefficients(lambda c: c.specialize(values))

    def map_coefficients(self, fn):
        return TruncatedSeries(self.vars, [fn(c) for c in self.coeffs], self.order)

    def project_vars(self, new_vars):
        return TruncatedSeries(
            tuple(new_vars), [c.project(new_vars) for c in self.coeffs], self.order
        )

    def truncated(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.vars, self.coeffs[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.vars, self.order, self.coeffs))

    def __str__(self):
        return "; ".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries[{self}]"

    def to_json_obj(self):
        return [c.to_json_obj() for c in self.coeffs]


def _iterate(step, start, order, iterations=None):
    f = start
    for _ in range(order + 1 if iterations is None else iterations):
        f = step(f)
    return f


def rational_series(numer, denom, vars, order):
    """Series expansion of a rational function given by coefficient lists."""
    num = TruncatedSeries(vars, list(numer), order)
    den = TruncatedSeries(vars, list(denom), order)
    return num / den


def catalan_series(order, vars=()):
    """Catalan generating series from the recurrence C = 1 + x C**2."""
    one = TruncatedSeries.constant(1, vars, order)
    return _iterate(lambda c: one + (c * c).shift(1), one, order)


def compose(outer, inner):
    return outer.compose(inner)


# -- the three single-pattern equations ------------------------------------


def solve_213(order, iterations=None):
    """Series f = C_213 - 1 from its cubic equation, by fixed point.

    The equation is f = xp + x(pr+qr+pq) f + xqr(r+p+q) f^2 + x q^2 r^2 f^3.
    """
    P, Q, R = Polynomial.gens(PQR)
    lin = P * R + Q * R + P * Q
    quad = Q * R * (R + P + Q)
    cub = Q * Q * R * R
    cP = TruncatedSeries.constant(P, PQR, order)

    def step(f):
        f2 = f * f
        return (cP + f.scale(lin) + f2.scale(quad) + (f2 * f).scale(cub)).shift(1)

    return _iterate(step, TruncatedSeries.zeros(PQR, order), order, iterations)


def series_213(order):
    """Full distribution series C_213(x,p,q,r)."""
    return solve_213(order) + 1


def solve_123(order, iterations=None):
    """Auxiliary series f = q C_123 - q + 1 from its functional equation.

    f = 1 + pqx(-1 + (2 + x(pr+qr-pq)) f - pqx(1 - x(p-r)(q-r)) f^2) f.
    """
    P, Q, R = Polynomial.gens(PQR)
    c2 = P * R + Q * R - P * Q
    c4 = P * Q * (P - R) * (Q - R)
    one = TruncatedSeries.constant(1, PQR, order)

    def step(f):
        f2 = f * f
        bracket = (
            (-one)
            + f.scale(2)
            + f.shift(1).scale(c2)
            - f2.shift(1).scale(P * Q)
            + f2.shift(2).scale(c4)
        )
        return one + (bracket * f).shift(1).scale(P * Q)

    return _iterate(step, one, order, iterations)


def _recover_from_q_form(f):
    """C = (f - 1 + q)/q, checking exact divisibility of f - 1 by q."""
    shifted = (f - 1).map_coefficients(lambda c: c.div_var_exact("q"))
    return shifted + 1


def series_123(order):
    """Full distribution series C_123(x,p,q,r)."""
    return _recover_from_q_form(solve_123(order))


def solve_132(order, iterations=None):
    """Auxiliary series f = q C_132 - q + 1 from its functional equation.

    f = 1 + px(q - 2r + r(2 + (pr-pq+q^2)x) f - p r^2 x f^2) f.
    """
    P, Q, R = Polynomial.gens(PQR)
    d2 = R * (P * R - P * Q + Q * Q)
    one = TruncatedSeries.constant(1, PQR, order)

    def step(f):
        f2 = f * f
        bracket = (
            TruncatedSeries.constant(Q - 2 * R, PQR, order)
            + f.scale(2 * R)
            + f.shift(1).scale(d2)
            - f2.shift(1).scale(P * R * R)
        )
        return one + (bracket * f).shift(1).scale(P)

    return _iterate(step, one, order, iterations)


def series_132(order):
    """Full distribution series C_132(x,p,q,r)."""
    return _recover_from_q_form(solve_132(order))


# -- recurrence route for the 123 and 132 coefficients ----------------------
#
# These recompute the same coefficient polynomials through the catalytic
# L_n(v) recurrences, giving a computation path independent of the series
# solvers above.  The brackets L_m(v) - v^s L_m(1) are divisible by (1 - v)
# by construction, and the division is performed exactly.


def recurrence_123(order):
    """Coefficients of C_123 computed via the L_n(v) recurrence system."""
    P, Q, R, V = Polynomial.gens(PQRV)
    one = Polynomial.one(PQRV)
    L = {
        1: P,
        2: P * P * (R + Q * V),
        3: P ** 3 * Q * R
        + P * P * Q * R * (2 * P + Q) * V
        + P * P * Q * (P * R + Q * R + P * Q) * V * V,
    }
    f = {0: one, 1: P, 2: P * (P * Q + P * R + Q * R)}

    def at_one(poly):
        return poly.specialize({"v": 1})

    for n in range(3, order + 1):
        if n >= 4:
            head = (
                P * Q * f[n - 1] * V ** (n - 2) * (one + V)
                + P * P * (R * Q - 3 * Q * Q) * f[n - 2] * V ** (n - 2)
                + P * P * Q * Q * f[n - 2] * V ** (n - 2)
            )
            b1 = (L[n - 1] - V ** (n - 3) * at_one(L[n - 1])).div_one_minus_exact("v")
            b2 = (L[n - 2] - V ** (n - 3) * at_one(L[n - 2])).div_one_minus_exact("v")
            b3 = (L[n - 3] - V ** (n - 3) * at_one(L[n - 3])).div_one_minus_exact("v")
            L[n] = (
                2 * P * Q * L[n - 1]
                - P * P * Q * Q * L[n - 2]
                + head
                + b1 * (P * Q * V)
                + b2 * (P * Q * (Q * R + P * R - 2 * P * Q) * V)
                + b3 * (P * P * Q * Q * (R - P) * (R - Q) * V)
            )
        f[n] = P * Q * f[n - 1] + at_one(L[n]) + Q * (R - P) * at_one(L[n - 1])

    return [f[k].project(PQR) for k in range(order + 1)]


def recurrence_132(order):
    """Coefficients of C_132 computed via the L_n(v) recurrence system."""
    P, Q, R, V = Polynomial.gens(PQRV)
    one = Polynomial.one(PQRV)
    L = {1: P, 2: P * P * (R + Q * V)}
    g = {0: one, 1: P, 2: P * (P * R + Q * R + P * Q)}

    def at_one(poly):
        return poly.specialize({"v": 1})

    for n in range(3, order + 1):
        b1 = (L[n - 1] - V ** (n - 2) * at_one(L[n - 1])).div_one_minus_exact("v")
        b2 = (L[n - 2] - V ** (n - 2) * at_one(L[n - 2])).div_one_minus_exact("v")
        L[n] = (
            P * Q * V ** (n - 1) * g[n - 1]
            + 2 * P * R * L[n - 1]
            + b1 * (P * Q * V)
            + b2 * (P * Q * R * (Q - P) * V)
            - P * P * R * R * L[n - 2]
        )
        g[n] = P * R * g[n - 1] + at_one(L[n]) + R * (Q - P) * at_one(L[n - 1])

    return [g[k].project(PQR) for k in range(order + 1)]


# -- two-pattern families ---------------------------------------------------


def initial_pair_series(order):
    """F for a base pattern with a repeated letter: no avoider beyond order 0."""
    return TruncatedSeries.constant(1, PQR, order)


def prepend1(sub, order):
    """F for the pattern 1 (+) t', given the series for t'.

    Rational expression: F = 1 + (xp + xr(p+q) G + x q r^2 G^2)
    / (1 - xpq - xqr(1+p) G - x q^2 r^2 G^2)  with G = F_{t'} - 1.
    """
    P, Q, R = Polynomial.gens(PQR)
    G = sub.truncated(order) - 1
    G2 = G * G
    cP = TruncatedSeries.constant(P, PQR, order)
    one = TruncatedSeries.constant(1, PQR, order)
    num = (cP + G.scale(R * (P + Q)) + G2.scale(Q * R * R)).shift(1)
    den = (
        one
        - TruncatedSeries.constant(P * Q, PQR, order).shift(1)
        - G.shift(1).scale(Q * R * (1 + P))
        - G2.shift(1).scale(Q * Q * R * R)
    )
    return one + num / den


def prepend11(sub, order, iterations=None):
    """F for the pattern 11 (+) t', given the series for t'.

    Solves the quadratic functional equation
    F = 1 + xp + x(p+r)q (F-1) + xpr G + xqr (F-1)^2
      + xqr(p+r) (F-1) G + x q^2 r^2 G (F-1)^2,  G = F_{t'} - 1,
    by fixed point; this picks the unique series branch with constant term 1.
    """
    P, Q, R = Polynomial.gens(PQR)
    G = sub.truncated(order) - 1
    one = TruncatedSeries.constant(1, PQR, order)
    base = one + TruncatedSeries.constant(P, PQR, order).shift(1) + G.shift(1).scale(P * R)

    def step(F):
        u = F - 1
        u2 = u * u
        return (
            base
            + u.shift(1).scale((P + R) * Q)
            + u2.shift(1).scale(Q * R)
            + (u * G).shift(1).scale(Q * R * (P + R))
            + (G * u2).shift(1).scale(Q * Q * R * R)
        )

    return _iterate(step, one, order, iterations)


def pair_series(blocks, order):
    """Chain of prepend steps; blocks are "1" or "11", rightmost is the base.

    The base block must itself contain a repeated letter (its avoider series
    is the constant 1); each remaining block, right to left, wraps the
    current pattern by disjoint concatenation from the left.
    """
    if not blocks:
        raise ValueError("empty chain")
    if blocks[-1] not in ("1", "11"):
        raise ValueError(f"unsupported base pattern {blocks[-1]!r}")
    F = initial_pair_series(order)
    for block in reversed(blocks[:-1]):
        if block == "1":
            F = prepend1(F, order)
        elif block == "11":
            F = prepend11(F, order)
        else:
            raise ValueError(f"unsupported chain block {block!r}")
    return F


def chain_pattern(blocks):
    """The pattern word a prepend chain denotes, e.g. ("11","11") -> 1122.

    Disjoint concatenation shifts the right part above the left part's
    largest letter, which is 1 for both supported blocks.
    """
    pattern = []
    for block in reversed(blocks):
        pattern = [1] * len(block) + [v + 1 for v in pattern]
    return tuple(pattern)


# -- joint plateau / 122-occurrence series ----------------------------------


def solve_R(order, iterations=None):
    """Series R(x,p,z) over the 213-avoiders marking plateaus and 122 hits.

    R = 1 / (1 - x (R(x,pz,z) - 1 + p) R(x,pz^2,z)); the substitutions act
    on coefficients by transferring p-degree into z-degree.
    """
    P = Polynomial.variable("p", PZ)
    one = TruncatedSeries.constant(1, PZ, order)

    def step(R):
        r1 = R.map_coefficients(lambda c: c.shift_var("p", "z", 1))
        r2 = R.map_coefficients(lambda c: c.shift_var("p", "z", 2))
        den = one - ((r1 - 1 + P) * r2).shift(1)
        return den.inverse()

    return _iterate(step, one, order, iterations)
