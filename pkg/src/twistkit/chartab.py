"""Exact character tables and the class-function algebra.

Tables are computed by the modular (Dixon) method: the class-sum matrices are
simultaneously diagonalized over a prime field F_p with p = 1 mod exponent and
p > 2*sqrt(|G|), degrees and mod-p character values are read off the common
eigenvectors, and exact cyclotomic values are recovered through a discrete
Fourier lift.  The lift is then certified by verifying the row and column
orthogonality relations exactly over Q(zeta); a table is never returned
unverified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from twistkit.cyclo import Cyclotomic, rational, zeta
from twistkit.groups import GroupData, SubgroupData

__all__ = [
    "ClassFunction",
    "CharacterTable",
    "CharPoly",
    "CharTabError",
    "TableConsistencyError",
    "character_table",
    "inner_product",
    "decompose",
    "Decomposition",
    "cf_tensor",
    "cf_sym2",
    "cf_alt2",
    "cf_adams2",
    "cf_conj",
    "cf_adjoint0",
    "cf_algebra",
    "charpoly_at_class",
    "induce",
    "restrict",
    "quadratic_characters",
    "det_character",
    "frobenius_schur_indicator",
    "trivial_character",
    "regular_character",
]


class CharTabError(Exception):
    """User-level errors: group mismatches, virtual input where a character is required."""


class TableConsistencyError(CharTabError):
    """Internal verification failure; never silent."""


def _same_domain(a, b) -> bool:
    if a is b:
        return True
    if isinstance(a, GroupData) and isinstance(b, GroupData):
        return a.elements == b.elements
    if isinstance(a, SubgroupData) and isinstance(b, SubgroupData):
        return a.group.elements == b.group.elements and a.members == b.members
    return False


class ClassFunction:
    """Exact class function: one cyclotomic value per conjugacy class.

    ``domain`` is a GroupData or a SubgroupData; values are indexed
    consistently with its ``classes``.  General virtual class functions are
    allowed; nothing here assumes the values come from a genuine character.
    """

    __slots__ = ("domain", "values")

    def __init__(self, domain, values: Sequence[Cyclotomic]):
        values = tuple(_as_cyc(v) for v in values)
        if len(values) != len(domain.classes):
            raise CharTabError(
                f"need {len(domain.classes)} values, got {len(values)}"
            )
        self.domain = domain
        self.values = values

    def _check_domain(self, other: "ClassFunction") -> None:
        if not _same_domain(self.domain, other.domain):
            raise CharTabError("class functions live on different groups")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return _same_domain(self.domain, other.domain) and all(
            a == b for a, b in zip(self.values, other.values)
        )

    __hash__ = None

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_domain(other)
        return ClassFunction(self.domain, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_domain(other)
        return ClassFunction(self.domain, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check_domain(other)
            return ClassFunction(self.domain, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.domain, [v * other for v in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.domain, [v.conjugate() for v in self.values])

    def value_at_identity(self) -> Cyclotomic:
        return self.values[0]

    def degree(self) -> int:
        """Degree of a genuine or virtual character; must be a rational integer."""
        v = self.values[0]
        if not v.is_integer():
            raise CharTabError(f"value at identity is not an integer: {v}")
        return v.as_integer()

    def is_rational_valued(self) -> bool:
        return all(v.is_rational() for v in self.values)

    def key(self, order: int) -> tuple:
        return tuple(v.key(order) for v in self.values)

    def __repr__(self) -> str:
        return "ClassFunction([" + ", ".join(repr(v) for v in self.values) + "])"


def _as_cyc(v) -> Cyclotomic:
    if isinstance(v, Cyclotomic):
        return v
    return rational(v)


def trivial_character(group: GroupData) -> ClassFunction:
    return ClassFunction(group, [rational(1)] * group.num_classes)


def regular_character(group: GroupData) -> ClassFunction:
    values = [rational(0)] * group.num_classes
    values[0] = rational(group.order)
    return ClassFunction(group, values)


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """(1/|G|) sum over classes of |c| f(c) conj(g(c)); asserted rational."""
    f._check_domain(g)
    sizes = [c.size for c in f.domain.classes]
    total = rational(0)
    for size, a, b in zip(sizes, f.values, g.values):
        total = total + a * b.conjugate() * size
    order = sum(sizes)
    result = total * Fraction(1, order)
    if not result.is_rational():
        raise CharTabError(f"inner product is not rational: {result}")
    return result.as_rational()


def inner_product_cyclotomic(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """Same pairing without the rationality assertion."""
    f._check_domain(g)
    sizes = [c.size for c in f.domain.classes]
    total = rational(0)
    for size, a, b in zip(sizes, f.values, g.values):
        total = total + a * b.conjugate() * size
    return total * Fraction(1, sum(sizes))


# -- class-function algebra ------------------------------------------------------


def cf_tensor(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    return f * g


def cf_adams2(f: ClassFunction) -> ClassFunction:
    """s -> f(s^2), the second Adams operation at character level."""
    group = _require_group(f)
    sq = group.power_class_map(2)
    return ClassFunction(group, [f.values[sq[c]] for c in range(group.num_classes)])


def cf_sym2(f: ClassFunction) -> ClassFunction:
    """Symmetric square: (f(s)^2 + f(s^2)) / 2."""
    group = _require_group(f)
    sq = group.power_class_map(2)
    half = Fraction(1, 2)
    return ClassFunction(
        group,
        [(f.values[c] * f.values[c] + f.values[sq[c]]) * half for c in range(group.num_classes)],
    )


def cf_alt2(f: ClassFunction) -> ClassFunction:
    """Alternating square: (f(s)^2 - f(s^2)) / 2."""
    group = _require_group(f)
    sq = group.power_class_map(2)
    half = Fraction(1, 2)
    return ClassFunction(
        group,
        [(f.values[c] * f.values[c] - f.values[sq[c]]) * half for c in range(group.num_classes)],
    )


def cf_conj(f: ClassFunction) -> ClassFunction:
    return f.conjugate()


def cf_adjoint0(f: ClassFunction) -> ClassFunction:
    """Trace-zero adjoint at character level: f * conj(f) - 1."""
    one = trivial_character(_require_group(f))
    return f * f.conjugate() - one


_CF_OPS = {
    "tensor": lambda f, g: cf_tensor(f, g),
    "sym2": lambda f, g: cf_sym2(f),
    "alt2": lambda f, g: cf_alt2(f),
    "adams2": lambda f, g: cf_adams2(f),
    "conj": lambda f, g: cf_conj(f),
    "adjoint0": lambda f, g: cf_adjoint0(f),
}


def cf_algebra(f: ClassFunction, g: ClassFunction | None, op: str) -> ClassFunction:
    if op not in _CF_OPS:
        raise CharTabError(f"unknown class-function operation {op!r}")
    if op == "tensor" and g is None:
        raise CharTabError("tensor needs a second argument")
    return _CF_OPS[op](f, g)


def _require_group(f: ClassFunction) -> GroupData:
    if not isinstance(f.domain, GroupData):
        raise CharTabError("operation needs a class function on a full group")
    return f.domain


# -- characteristic polynomials ----------------------------------------------------


@dataclass(frozen=True)
class CharPoly:
    """Coefficients a_0..a_r of det(1 - rho(s) T), a_0 = 1, as cyclotomics."""

    degree: int
    coeffs: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise CharTabError("coefficient vector length must be degree + 1")
        if self.coeffs[0] != rational(1):
            raise CharTabError("constant coefficient must be 1")

    def sign_twisted(self, sign: int) -> "CharPoly":
        """Coefficients of det(1 - sign * rho(s) T), i.e. a_k -> sign^k a_k."""
        if sign == 1:
            return self
        return CharPoly(
            self.degree,
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )


def charpoly_at_class(f: ClassFunction, class_index: int, degree: int | None = None) -> CharPoly:
    """Recover det(1 - rho(s) T) from the power sums f(s^k) by Newton's identities.

    Requires a genuine character (the degree is read from the identity value
    when not supplied); Newton's recurrence only ever divides by integers up
    to the degree.
    """
    group = _require_group(f)
    r = f.degree() if degree is None else degree
    if r < 0:
        raise CharTabError("characteristic polynomial needs a non-negative degree")
    power_sums = [None]  # p_0 unused
    for k in range(1, r + 1):
        pm = group.power_class_map(k)
        power_sums.append(f.values[pm[class_index]])
    elem = [rational(1)]
    for k in range(1, r + 1):
        total = rational(0)
        sign = 1
        for i in range(1, k + 1):
            term = elem[k - i] * power_sums[i]
            total = total + (term if sign > 0 else -term)
            sign = -sign
        elem.append(total * Fraction(1, k))
    coeffs = tuple(e if k % 2 == 0 else -e for k, e in enumerate(elem))
    return CharPoly(r, coeffs)


def det_character(f: ClassFunction) -> ClassFunction:
    """Determinant of a genuine character: product of eigenvalues per class."""
    group = _require_group(f)
    r = f.degree()
    values = []
    for ci in range(group.num_classes):
        cp = charpoly_at_class(f, ci, r)
        top = cp.coeffs[r]
        det = top if r % 2 == 0 else -top
        values.append(det)
    out = ClassFunction(group, values)
    if out.values[0] != rational(1):
        raise TableConsistencyError("determinant character is not 1 at the identity")
    for v in out.values:
        if v * v.conjugate() != rational(1):
            raise TableConsistencyError("determinant value is not a root of unity")
    return out


def frobenius_schur_indicator(f: ClassFunction) -> Fraction:
    return inner_product(cf_adams2(f), trivial_character(_require_group(f)))


# -- induction and restriction -------------------------------------------------------


def restrict(f: ClassFunction, subgroup: SubgroupData) -> ClassFunction:
    """Restriction along the class fusion: value = f at the containing class."""
    group = _require_group(f)
    if not _same_domain(subgroup.group, group):
        raise CharTabError("subgroup belongs to a different group")
    return ClassFunction(subgroup, [f.values[g] for g in subgroup.fusion])


def induce(f: ClassFunction, subgroup: SubgroupData, group: GroupData) -> ClassFunction:
    """Induced class function: (1/|H|) sum over x in G of f(x^-1 g x), summing
    only where the conjugate lands in H.  Classes disjoint from H get 0."""
    if not _same_domain(f.domain, subgroup):
        raise CharTabError("class function does not live on the given subgroup")
    if not _same_domain(subgroup.group, group):
        raise CharTabError("subgroup belongs to a different group")
    h_class_of = {}
    for hi, cls in enumerate(subgroup.classes):
        for m in cls.members:
            h_class_of[m] = hi
    inv_order = Fraction(1, subgroup.order)
    values = []
    for cls in group.classes:
        g_elem = group.elements[cls.rep]
        total = rational(0)
        for x in group.elements:
            conj = x.inverse() * g_elem * x
            hi = h_class_of.get(group.index[conj])
            if hi is not None:
                total = total + f.values[hi]
        values.append(total * inv_order)
    return ClassFunction(group, values)


# -- mod-p linear algebra (internal) ----------------------------------------------------


def _rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        sel = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _nullspace_mod(matrix: list[list[int]], p: int) -> list[list[int]]:
    """Basis rows v with matrix . v = 0 (v as column vector)."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rref, pivots = _rref_mod(matrix, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rref[r][fc]) % p
        basis.append(v)
    return basis


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 mod exponent with p > 2 sqrt(order)."""
    p = exponent + 1
    while p * p <= 4 * order or not _is_prime(p):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise TableConsistencyError(f"no primitive root found mod {p}")


def _sqrt_mod(a: int, p: int) -> int:
    a %= p
    for r in range(p):
        if (r * r) % p == a:
            return r
    raise TableConsistencyError(f"{a} is not a square mod {p}")


# -- the table ----------------------------------------------------------------------------


class CharacterTable:
    """Verified complete list of irreducible characters of a finite group."""

    def __init__(self, group: GroupData, irreducibles: Sequence[ClassFunction]):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        self.degrees = tuple(chi.degree() for chi in self.irreducibles)
        self._lookup = {
            chi.key(group.exponent): i for i, chi in enumerate(self.irreducibles)
        }
        verify_table(self)

    def irreducible_index(self, f: ClassFunction) -> int:
        key = f.key(self.group.exponent)
        if key not in self._lookup:
            raise CharTabError("class function is not an irreducible of this table")
        return self._lookup[key]

    def trivial_index(self) -> int:
        return self.irreducible_index(trivial_character(self.group))

    def to_dict(self, name: str = "") -> dict:
        return {
            "group": name,
            "classes": [
                {"size": c.size, "rep": list(self.group.elements[c.rep].images)}
                for c in self.group.classes
            ],
            "irreducibles": [
                [v.to_dict() for v in chi.values] for chi in self.irreducibles
            ],
        }

    @staticmethod
    def from_dict(data: dict, group: GroupData) -> "CharacterTable":
        """Import an externally computed table and verify it against the group.

        The import path re-runs the full orthogonality verification, so an
        external table can serve as an independent cross-check oracle.
        """
        classes = data["classes"]
        if len(classes) != group.num_classes:
            raise CharTabError(
                f"table has {len(classes)} classes, group has {group.num_classes}"
            )
        for idx, (got, cls) in enumerate(zip(classes, group.classes)):
            if got["size"] != cls.size:
                raise CharTabError("class sizes do not match the group")
            perm = _perm_from(tuple(got["rep"]))
            if perm not in group.index:
                raise CharTabError("class representative is not a group element")
            if group.class_of[group.index[perm]] != idx:
                raise CharTabError("class representative lands in the wrong class")
        rows = [
            ClassFunction(group, [Cyclotomic.from_dict(v) for v in row])
            for row in data["irreducibles"]
        ]
        return CharacterTable(group, rows)


def _perm_from(images: tuple[int, ...]):
    from twistkit.groups import Permutation

    return Permutation.from_images(list(images))


def verify_table(table: CharacterTable) -> None:
    """Exact orthogonality and degree checks; raises on any failure."""
    group = table.group
    k = group.num_classes
    if len(table.irreducibles) != k:
        raise TableConsistencyError(
            f"{len(table.irreducibles)} irreducibles for {k} classes"
        )
    if sum(d * d for d in table.degrees) != group.order:
        raise TableConsistencyError("degree squares do not sum to the group order")
    for i, chi in enumerate(table.irreducibles):
        for j, psi in enumerate(table.irreducibles):
            expected = Fraction(1 if i == j else 0)
            if inner_product(chi, psi) != expected:
                raise TableConsistencyError(f"row orthogonality fails at ({i}, {j})")
    for c1 in range(k):
        for c2 in range(k):
            total = rational(0)
            for chi in table.irreducibles:
                total = total + chi.values[c1] * chi.values[c2].conjugate()
            expected = (
                rational(Fraction(group.order, group.classes[c1].size))
                if c1 == c2
                else rational(0)
            )
            if total != expected:
                raise TableConsistencyError(f"column orthogonality fails at ({c1}, {c2})")


def character_table(group: GroupData) -> CharacterTable:
    """Compute the table by the modular method and certify it exactly."""
    k = group.num_classes
    if k == 1:
        return CharacterTable(group, [trivial_character(group)])
    p = _dixon_prime(group.order, group.exponent)

    class_matrices = _class_sum_matrices(group)
    rows = _common_eigenrows(class_matrices, k, p)
    mod_table, degrees = _normalize_eigenrows(group, rows, p)
    chars = [
        _lift_character(group, mod_row, d, p)
        for mod_row, d in zip(mod_table, degrees)
    ]
    chars = _sorted_rows(group, chars)
    return CharacterTable(group, chars)


def _class_sum_matrices(group: GroupData) -> list[list[list[int]]]:
    """Transposed structure-constant matrices N_i with rows acting by right mult.

    With w the vector of central character values, w . N_i = omega(i) w, so the
    common left eigenrows of the N_i are exactly the central characters mod p.
    """
    k = group.num_classes
    reps = [c.rep for c in group.classes]
    mats = []
    for i in range(k):
        m = [[0] * k for _ in range(k)]
        for l, rep in enumerate(reps):
            g = group.elements[rep]
            for x_idx in group.classes[i].members:
                x = group.elements[x_idx]
                j = group.class_of[group.index[x.inverse() * g]]
                m[j][l] += 1
        # transpose so spaces are row spaces under right multiplication
        mats.append([[m[j][l] for j in range(k)] for l in range(k)])
    return mats


def _mat_vec_rows(rows: list[list[int]], mat: list[list[int]], p: int) -> list[list[int]]:
    """Right-multiply each row by mat (shapes: rows s x a, mat a x b)."""
    width = len(mat[0]) if mat else 0
    out = []
    for row in rows:
        acc = [0] * width
        for a, val in enumerate(row):
            if val:
                mrow = mat[a]
                for b in range(width):
                    acc[b] = (acc[b] + val * mrow[b]) % p
        out.append(acc)
    return out


def _common_eigenrows(mats: list[list[list[int]]], k: int, p: int) -> list[list[int]]:
    spaces: list[tuple[list[list[int]], list[int]]] = []
    ident = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    spaces.append(_rref_mod(ident, p))
    for i in range(1, k):
        if all(len(rows) == 1 for rows, _ in spaces):
            break
        mat = mats[i]
        new_spaces = []
        for rows, pivots in spaces:
            s = len(rows)
            if s == 1:
                new_spaces.append((rows, pivots))
                continue
            mapped = _mat_vec_rows(rows, mat, p)
            # restriction matrix in the rref basis: coords are pivot entries
            restr = [[mapped[r][c] % p for c in pivots] for r in range(s)]
            found = 0
            for lam in range(p):
                shifted = [
                    [(restr[r][c] - (lam if r == c else 0)) % p for c in range(s)]
                    for r in range(s)
                ]
                transposed = [[shifted[r][c] for r in range(s)] for c in range(s)]
                null = _nullspace_mod(transposed, p)
                if not null:
                    continue
                found += len(null)
                sub_rows = _mat_vec_rows(null, rows, p)
                new_spaces.append(_rref_mod(sub_rows, p))
                if found == s:
                    break
            if found != s:
                raise TableConsistencyError(
                    "class-sum matrix is not diagonalizable mod p; bad prime choice"
                )
        spaces = new_spaces
    if any(len(rows) != 1 for rows, _ in spaces):
        raise TableConsistencyError("eigenspace splitting did not reach dimension one")
    if len(spaces) != k:
        raise TableConsistencyError(f"found {len(spaces)} eigenrows, expected {k}")
    return [rows[0] for rows, _ in spaces]


def _normalize_eigenrows(group: GroupData, rows: list[list[int]], p: int):
    """Scale eigenrows to central characters, recover degrees and mod-p values."""
    k = group.num_classes
    sizes = [c.size for c in group.classes]
    inv_sizes = [pow(s, -1, p) for s in sizes]
    inv_classes = [group.inverse_class(c) for c in range(k)]
    mod_table = []
    degrees = []
    for row in rows:
        if row[0] % p == 0:
            raise TableConsistencyError("eigenrow vanishes at the identity class")
        scale = pow(row[0], -1, p)
        omega = [(x * scale) % p for x in row]
        dot = sum(omega[c] * omega[inv_classes[c]] * inv_sizes[c] for c in range(k)) % p
        if dot == 0:
            raise TableConsistencyError("degree normalization hit a zero divisor")
        d_sq = (group.order * pow(dot, -1, p)) % p
        root = _sqrt_mod(d_sq, p)
        d = min(root, p - root)
        if d == 0 or d * d > group.order:
            raise TableConsistencyError(f"implausible degree lift {d}")
        values = [(d * omega[c] * inv_sizes[c]) % p for c in range(k)]
        mod_table.append(values)
        degrees.append(d)
    return mod_table, degrees


def _lift_character(group: GroupData, mod_values: list[int], degree: int, p: int) -> ClassFunction:
    """Discrete Fourier lift of one mod-p character row to exact cyclotomics.

    For an element of order m the value is sum of eigenvalue multiplicities
    times zeta_m^t; each multiplicity is below p/2, so its mod-p residue
    determines it.
    """
    w = _primitive_root(p)
    half = p // 2
    values: list[Cyclotomic] = []
    for ci in range(group.num_classes):
        m = group.element_orders[ci]
        if m == 1:
            values.append(rational(degree))
            continue
        z = pow(w, (p - 1) // m, p)
        z_pows = [pow(z, t, p) for t in range(m)]
        chain = [mod_values[group.power_class_map(a)[ci]] for a in range(m)]
        inv_m = pow(m, -1, p)
        total = rational(0)
        check = 0
        for t in range(m):
            acc = 0
            for a in range(m):
                acc += chain[a] * z_pows[(-a * t) % m]
            mult = (acc * inv_m) % p
            if mult > half:
                raise TableConsistencyError(
                    f"eigenvalue multiplicity lift out of range: {mult} mod {p}"
                )
            check += mult
            if mult:
                total = total + mult * zeta(m, t)
        if check != degree:
            raise TableConsistencyError(
                f"eigenvalue multiplicities sum to {check}, expected {degree}"
            )
        values.append(total)
    return ClassFunction(group, values)


def _sorted_rows(group: GroupData, chars: list[ClassFunction]) -> list[ClassFunction]:
    exponent = group.exponent
    triv = trivial_character(group)
    rest = [c for c in chars if c != triv]
    if len(rest) != len(chars) - 1:
        raise TableConsistencyError("trivial character missing from the lift")
    rest.sort(key=lambda c: (c.degree(), c.key(exponent)))
    return [triv] + rest


# -- decomposition -------------------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of a class function over the irreducibles."""

    coefficients: tuple[Cyclotomic, ...]

    @property
    def is_integral(self) -> bool:
        return all(c.is_integer() for c in self.coefficients)

    @property
    def is_character(self) -> bool:
        return self.is_integral and all(c.as_integer() >= 0 for c in self.coefficients)

    @property
    def is_virtual(self) -> bool:
        """Integral but not a genuine character (some multiplicity negative)."""
        return self.is_integral and not self.is_character

    def integer_multiplicities(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise CharTabError("multiplicities are not integers")
        return tuple(c.as_integer() for c in self.coefficients)


def decompose(f: ClassFunction, table: CharacterTable) -> Decomposition:
    """Exact multiplicities <f, chi_i>; reconstruction is verified."""
    if not _same_domain(f.domain, table.group):
        raise CharTabError("class function and table live on different groups")
    coeffs = tuple(inner_product_cyclotomic(f, chi) for chi in table.irreducibles)
    recon = ClassFunction(table.group, [rational(0)] * table.group.num_classes)
    for c, chi in zip(coeffs, table.irreducibles):
        recon = recon + chi * c
    if recon != f:
        raise TableConsistencyError("decomposition does not reconstruct the input")
    return Decomposition(coeffs)


def quadratic_characters(table: CharacterTable) -> list[ClassFunction]:
    """All degree-1 irreducibles with values in {1, -1}; count is a power of 2."""
    one = rational(1)
    minus = rational(-1)
    out = [
        chi
        for chi, d in zip(table.irreducibles, table.degrees)
        if d == 1 and all(v == one or v == minus for v in chi.values)
    ]
    n = len(out)
    if n & (n - 1):
        raise TableConsistencyError(f"quadratic character count {n} is not a power of 2")
    return out
