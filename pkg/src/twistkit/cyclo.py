"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n)
with Fraction coefficients, reduced modulo the n-th cyclotomic polynomial.
Everything is exact; there is no floating point in this module apart from
the optional ``approx`` debug embedding.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "Cyclotomic",
    "CyclotomicError",
    "OrderBoundError",
    "FieldOfValues",
    "euler_phi",
    "cyclotomic_polynomial",
    "field_of_values",
    "zeta",
    "rational",
]

# Orders above this bound are refused during harmonization; keeps lcm blowups
# from silently eating memory.  Reassignable by configuration code.
ORDER_BOUND = 10_000

_ZERO = Fraction(0)
_ONE = Fraction(1)


class CyclotomicError(Exception):
    """Arithmetic errors in Q(zeta_n): division by zero, bad orders."""


class OrderBoundError(CyclotomicError):
    """Requested root-of-unity order exceeds the configured bound."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise CyclotomicError(f"order must be positive, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


# -- dense polynomial helpers over Fraction (coefficients low -> high) --------

def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod(num: Sequence[Fraction], den: Sequence[Fraction]):
    """Division with remainder in Q[x]; den need not be monic."""
    num = list(num)
    dd = len(den) - 1
    while dd >= 0 and den[dd] == 0:
        dd -= 1
    if dd < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[dd]
    quot = [_ZERO] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q = c / lead
        quot[i - dd] = q
        for j in range(dd + 1):
            num[i - dd + j] -= q * den[j]
    rem = num[:dd]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients (low -> high) of the n-th cyclotomic polynomial.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
    divisors of n.  Coefficients are integers, returned as Fractions.
    """
    if n < 1:
        raise CyclotomicError(f"order must be positive, got {n}")
    num: list[Fraction] = [_ZERO] * (n + 1)
    num[0] = Fraction(-1)
    num[n] = _ONE
    for d in range(1, n):
        if n % d == 0:
            quot, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not any(rem), f"cyclotomic division left a remainder at n={n}"
            num = quot
    return tuple(num)


class Cyclotomic:
    """An exact element of Q(zeta_n).

    ``order`` is n and ``coeffs`` has length phi(n); the element is
    sum(coeffs[j] * zeta_n^j).  The declared order is kept as constructed
    (no automatic descent to subfields); equality harmonizes both operands
    to the lcm of their orders first.  Instances are immutable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Fraction | int]):
        phi = euler_phi(order)
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != phi:
            raise CyclotomicError(
                f"need {phi} coefficients for order {order}, got {len(cs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *args):
        raise AttributeError("Cyclotomic values are immutable")

    # -- construction ---------------------------------------------------------

    @staticmethod
    def _reduce(order: int, dense: Sequence[Fraction]) -> "Cyclotomic":
        """Reduce a dense polynomial in zeta_order modulo the cyclotomic poly."""
        phi = euler_phi(order)
        if len(dense) >= phi + 1:
            _, rem = _poly_divmod(dense, cyclotomic_polynomial(order))
        else:
            rem = list(dense)
        rem = list(rem) + [_ZERO] * (phi - len(rem))
        return Cyclotomic(order, rem[:phi])

    # -- basic queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def as_integer(self) -> int:
        q = self.as_rational()
        if q.denominator != 1:
            raise CyclotomicError(f"{self} is not an integer")
        return q.numerator

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- order changes ---------------------------------------------------------

    def raise_order(self, m: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_m) for a multiple m of the current order."""
        n = self.order
        if m == n:
            return self
        if m % n != 0:
            raise CyclotomicError(f"{m} is not a multiple of order {n}")
        if m > ORDER_BOUND:
            raise OrderBoundError(f"order {m} exceeds bound {ORDER_BOUND}")
        step = m // n
        dense = [_ZERO] * ((len(self.coeffs) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            dense[j * step] = c
        return Cyclotomic._reduce(m, dense)

    def try_lower_order(self, m: int) -> "Cyclotomic | None":
        """Rewrite with order m (a divisor of the current order) if possible.

        Returns None when the element does not lie in Q(zeta_m).  Solved as an
        exact linear system in the power basis.
        """
        n = self.order
        if n % m != 0:
            raise CyclotomicError(f"{m} does not divide order {n}")
        if m == n:
            return self
        phi_m = euler_phi(m)
        phi_n = euler_phi(n)
        cols = [Cyclotomic.zeta(m, j).raise_order(n).coeffs for j in range(phi_m)]
        # Gaussian elimination on the phi_n x (phi_m + 1) augmented system.
        aug = [[cols[j][i] for j in range(phi_m)] + [self.coeffs[i]] for i in range(phi_n)]
        pivots: list[tuple[int, int]] = []
        row = 0
        for col in range(phi_m):
            sel = next((r for r in range(row, phi_n) if aug[r][col] != 0), None)
            if sel is None:
                continue
            aug[row], aug[sel] = aug[sel], aug[row]
            pv = aug[row][col]
            aug[row] = [x / pv for x in aug[row]]
            for r in range(phi_n):
                if r != row and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
            pivots.append((row, col))
            row += 1
        sol = [_ZERO] * phi_m
        for r, c in pivots:
            sol[c] = aug[r][phi_m]
        for r in range(phi_n):
            if all(aug[r][c] == 0 for c in range(phi_m)) and aug[r][phi_m] != 0:
                return None
        candidate = Cyclotomic(m, sol)
        if candidate.raise_order(n) != self:
            return None
        return candidate

    def _harmonize(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        m = _lcm(self.order, other.order)
        return self.raise_order(m), other.raise_order(m)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._harmonize(other)
        return Cyclotomic(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._harmonize(other)
        return Cyclotomic._reduce(a.order, _poly_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise CyclotomicError("division by zero in Q(zeta_n)")
        if self.is_rational():
            return Cyclotomic(self.order, [1 / self.coeffs[0]] + [_ZERO] * (len(self.coeffs) - 1))
        mod = list(cyclotomic_polynomial(self.order))
        # extended gcd of self.coeffs and the cyclotomic polynomial
        r0, r1 = mod, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        t0, t1 = [_ONE], [_ZERO]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        deg = max((i for i, c in enumerate(r0) if c), default=-1)
        if deg != 0:
            raise CyclotomicError("element is a zero divisor; inconsistent state")
        g = r0[0]
        inv = [c / g for c in s0]
        return Cyclotomic._reduce(self.order, inv)

    def __truediv__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- Galois action -----------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n^k; needs gcd(k, n) = 1."""
        n = self.order
        k %= n
        if gcd(k, n) != 1:
            raise CyclotomicError(f"galois exponent {k} not coprime to order {n}")
        dense = [_ZERO] * n
        for j, c in enumerate(self.coeffs):
            dense[(j * k) % n] += c
        return Cyclotomic._reduce(n, dense)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta_n -> zeta_n^(n-1)."""
        if self.order == 1:
            return self
        return self.galois(self.order - 1)

    def is_real(self) -> bool:
        return self.conjugate() == self

    # -- comparison / encoding -----------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._harmonize(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses declared orders; use key() for dict keys

    def key(self, order: int) -> tuple:
        """Hashable canonical form at a fixed common order."""
        return self.raise_order(order).coeffs

    def to_terms(self) -> list[list[int]]:
        """Serialization triples [num, den, exp] for nonzero coefficients."""
        return [
            [c.numerator, c.denominator, j]
            for j, c in enumerate(self.coeffs)
            if c
        ]

    def to_dict(self) -> dict:
        return {"n": self.order, "terms": self.to_terms()}

    @staticmethod
    def from_dict(data: dict) -> "Cyclotomic":
        n = int(data["n"])
        phi = euler_phi(n)
        coeffs = [_ZERO] * phi
        for num, den, exp in data["terms"]:
            if not 0 <= exp < phi:
                raise CyclotomicError(f"exponent {exp} outside [0, {phi})")
            coeffs[exp] += Fraction(int(num), int(den))
        return Cyclotomic(n, coeffs)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        if n > ORDER_BOUND:
            raise OrderBoundError(f"order {n} exceeds bound {ORDER_BOUND}")
        k %= n
        dense = [_ZERO] * (k + 1)
        dense[k] = _ONE
        return Cyclotomic._reduce(n, dense)

    @staticmethod
    def from_rational(q) -> "Cyclotomic":
        return Cyclotomic(1, [Fraction(q)])

    # -- display -------------------------------------------------------------------

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"z{self.order}" if j == 1 else f"z{self.order}^{j}"
                sign = "-" if c < 0 else ("+" if parts else "")
                parts.append(f"{sign}{mag}{term}" if sign != "+" else f"+ {mag}{term}")
        return " ".join(parts).replace("+ -", "- ")

    def approx(self) -> complex:
        """Floating-point embedding, debugging only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**j for j, c in enumerate(self.coeffs))


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [_ZERO] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _coerce(value) -> "Cyclotomic":
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclotomic.from_rational(value)
    return NotImplemented


def zeta(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(n, k)


def rational(q) -> Cyclotomic:
    return Cyclotomic.from_rational(q)


class FieldOfValues:
    """Smallest cyclotomic data for a finite set of values.

    Records the common order the values were harmonized to, the Galois
    stabilizer (the exponents k coprime to that order fixing every value),
    and whether every value lies in the Gaussian field Q(i).
    """

    __slots__ = ("order", "stabilizer", "in_gaussian_field")

    def __init__(self, order: int, stabilizer: tuple[int, ...], in_gaussian_field: bool):
        self.order = order
        self.stabilizer = stabilizer
        self.in_gaussian_field = in_gaussian_field

    def __repr__(self) -> str:
        return (
            f"FieldOfValues(order={self.order}, stabilizer={self.stabilizer}, "
            f"in_gaussian_field={self.in_gaussian_field})"
        )


def field_of_values(values: Iterable[Cyclotomic]) -> FieldOfValues:
    """Galois stabilizer of a value set, plus a Q(i)-membership flag.

    The Q(i) test is concrete: each value, pushed into an order divisible by
    4, must admit a rewrite with order dividing 4.
    """
    vals = list(values)
    if not vals:
        return FieldOfValues(1, (1,), True)
    n = 1
    for v in vals:
        n = _lcm(n, v.order)
    if n > ORDER_BOUND:
        raise OrderBoundError(f"common order {n} exceeds bound {ORDER_BOUND}")
    harmonized = [v.raise_order(n) for v in vals]
    stabilizer = tuple(
        k
        for k in range(1, n + 1)
        if gcd(k, n) == 1 and all(v.galois(k) == v for v in harmonized)
    )
    m = _lcm(n, 4)
    gaussian = all(v.raise_order(m).try_lower_order(4) is not None for v in harmonized)
    return FieldOfValues(n, stabilizer, gaussian)
