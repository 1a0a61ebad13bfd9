"""Braiding matrices for unitary minimal models, built exactly.

The matrix (B_{a4,a1}^{a3,a2})_{mu,gamma} factorizes, up to an explicit
prefactor, into two chiral pieces r'(...) and r(...), each defined by
base cases on indices 1 and 2 together with a two-index recursion.  The
chiral pieces live on the q = p + 1 and p sides respectively and are
computed here in Q(zeta_{4pq}), so every nonvanishing claim is a
decidable coefficient comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .exact import CyclotomicNumber, DivisionByZero, zeta
from .minimal import (
    MinimalModel,
    ModuleLabel,
    NonUnitaryModel,
    ffk_pair,
    is_admissible,
    _side_admissible,
)


class IndexOutOfRange(ValueError):
    """A chiral r-matrix index left the open range of its side."""


class NonIntegerExponent(ArithmeticError):
    """The half-integer sign exponent of the prefactor failed to be integral."""


# The modules the write-up enumerates: P1..P4 for (7,8) and U1, U2 for
# the (11,12) factor.  Hard data, also the index scheme of the CLI.
_NAMED_KAC = {
    (7, 8): {1: (1, 1), 2: (1, 7), 3: (1, 3), 4: (1, 5)},
    (11, 12): {1: (1, 1), 2: (1, 7)},
}


def named_label(model: MinimalModel, index: int) -> ModuleLabel:
    """The module a bare integer index refers to for this model."""
    try:
        m, n = _NAMED_KAC[(model.p, model.q)][index]
    except KeyError:
        raise KeyError(f"no named module {index} for {model!r}") from None
    return model.label(m, n)


class BracketTable:
    """Quantum brackets of one chirality, cached.

    primed:   [l]' = y^{l/2} - y^{-l/2}, y for exp(2*pi*i*p/q), bound q
    unprimed: [l]  = x^{l/2} - x^{-l/2}, x for exp(2*pi*i*q/p), bound p

    power(k) is the quarter power (x or y)^{k/4} as an exact root of
    unity in Q(zeta_{4pq}).  Bracket values satisfy [0] = 0 and
    [-l] = -[l]; inverses are cached alongside.
    """

    __slots__ = ("model", "variant", "bound", "values", "_quarter", "_inverses")

    def __init__(self, model: MinimalModel, variant: str) -> None:
        if not model.is_unitary:
            raise NonUnitaryModel(f"{model!r} has no chiral bracket data")
        if variant not in ("primed", "unprimed"):
            raise ValueError(f"unknown variant {variant!r}")
        self.model = model
        self.variant = variant
        if variant == "primed":
            self.bound = model.q
            self._quarter = model.p * model.p
        else:
            self.bound = model.p
            self._quarter = model.q * model.q
        self.values: dict[int, CyclotomicNumber] = {}
        self._inverses: dict[int, CyclotomicNumber] = {}

    def power(self, k: int) -> CyclotomicNumber:
        return zeta(self.model.field_order, k * self._quarter)

    def __getitem__(self, l: int) -> CyclotomicNumber:
        val = self.values.get(l)
        if val is None:
            val = self.power(2 * l) - self.power(-2 * l)
            self.values[l] = val
        return val

    def inv(self, l: int) -> CyclotomicNumber:
        val = self._inverses.get(l)
        if val is None:
            b = self[l]
            if b.is_zero():
                raise DivisionByZero(f"bracket [{l}] vanishes on the {self.variant} side")
            val = b.inv()
            self._inverses[l] = val
        return val


@lru_cache(maxsize=None)
def brackets(model: MinimalModel, variant: str) -> BracketTable:
    return BracketTable(model, variant)


def bracket(model: MinimalModel, variant: str, l: int) -> CyclotomicNumber:
    """The bracket [l] (unprimed) or [l]' (primed) of a unitary model."""
    return brackets(model, variant)[l]


@dataclass(frozen=True)
class RQuery:
    """One chiral r-matrix evaluation r(a, m, n, c)_{b, d}."""

    model: MinimalModel
    variant: str
    a: int
    m: int
    n: int
    c: int
    b: int
    d: int

    def indices(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.m, self.n, self.c, self.b, self.d)


_R_MEMO: dict[RQuery, CyclotomicNumber] = {}

_ZERO = CyclotomicNumber.from_rational(0)
_ONE = CyclotomicNumber.from_rational(1)


def memoized_queries() -> tuple[RQuery, ...]:
    """Snapshot of every query evaluated so far (diagnostics, property tests)."""
    return tuple(_R_MEMO)


def _supported(q: RQuery, bound: int) -> bool:
    a, m, n, c, b, d = q.indices()
    return (
        _side_admissible(m, b, a, bound)
        and _side_admissible(n, c, b, bound)
        and _side_admissible(n, d, a, bound)
        and _side_admissible(m, c, d, bound)
    )


def _splittings(bound: int, a: int, m: int, b: int) -> list[int]:
    # candidates a1 adjacent to a with (m-1, b, a1) admissible
    return [
        a1
        for a1 in (a - 1, a + 1)
        if 0 < a1 < bound and _side_admissible(m - 1, b, a1, bound)
    ]


def r_matrix(query: RQuery) -> CyclotomicNumber:
    """Evaluate one chiral r-matrix entry exactly.

    Entries whose indices are compatible in range but not linked by the
    fusion constraints are exactly zero.  Indices outside the open
    range of the side raise IndexOutOfRange.  The recursion picks the
    smallest admissible splitting index; r_matrix_variants exists to
    check that the choice does not matter.
    """
    cached = _R_MEMO.get(query)
    if cached is not None:
        return cached
    table = brackets(query.model, query.variant)
    bound = table.bound
    if not all(0 < x < bound for x in query.indices()):
        raise IndexOutOfRange(f"{query} outside 1..{bound - 1}")
    value = _r_value(query, table)
    _R_MEMO[query] = value
    return value


def _sub(query: RQuery, a, m, n, c, b, d) -> CyclotomicNumber:
    return r_matrix(RQuery(query.model, query.variant, a, m, n, c, b, d))


def _r_value(query: RQuery, table: BracketTable, split: int | None = None) -> CyclotomicNumber:
    bound = table.bound
    if not _supported(query, bound):
        return _ZERO
    a, m, n, c, b, d = query.indices()
    if m == 1:
        return _ONE if (b, d) == (a, c) else _ZERO
    if n == 1:
        return _ONE if (b, d) == (c, a) else _ZERO
    if m == 2 and n == 2:
        if c in (a - 2, a + 2):
            l = (a + c) // 2
            return table.power(1) if (b, d) == (l, l) else _ZERO
        if c == a:
            l = a
            if (b, d) == (l + 1, l + 1):
                return -table.power(-1 - 2 * l) * table[1] * table.inv(l)
            if (b, d) == (l - 1, l - 1):
                return table.power(-1 + 2 * l) * table[1] * table.inv(l)
            if (b, d) == (l + 1, l - 1):
                return table.power(-1) * table[l + 1] * table.inv(l)
            if (b, d) == (l - 1, l + 1):
                return table.power(-1) * table[l - 1] * table.inv(l)
        return _ZERO
    if m > 2:
        # peel one unit off m; the splitting index a1 is a matter of choice
        a1 = split if split is not None else _splittings(bound, a, m, b)[0]
        total = _ZERO
        for d1 in (d - 1, d + 1):
            if 0 < d1 < bound:
                total = total + _sub(query, a, 2, n, d1, a1, d) * _sub(
                    query, a1, m - 1, n, c, b, d1
                )
        return total
    # m <= 2 < n: peel one unit off n through the splitting index c1
    c1 = split if split is not None else _splittings(bound, b, n, c)[0]
    total = _ZERO
    for d1 in (a - 1, a + 1):
        if 0 < d1 < bound:
            total = total + _sub(query, a, m, 2, c1, b, d1) * _sub(
                query, d1, m, n - 1, c, c1, d
            )
    return total


def r_matrix_variants(query: RQuery) -> tuple[CyclotomicNumber, ...]:
    """The value recomputed once per admissible top-level splitting choice.

    All entries must coincide; returning them lets tests assert that
    instead of trusting the default.
    """
    table = brackets(query.model, query.variant)
    bound = table.bound
    if not all(0 < x < bound for x in query.indices()):
        raise IndexOutOfRange(f"{query} outside 1..{bound - 1}")
    if not _supported(query, bound):
        return (_ZERO,)
    a, m, n, c, b, d = query.indices()
    if m > 2:
        options = _splittings(bound, a, m, b)
    elif n > 2:
        options = _splittings(bound, b, n, c)
    else:
        return (r_matrix(query),)
    return tuple(_r_value(query, table, split=s) for s in options)


@dataclass(frozen=True, eq=False)
class BraidMatrix:
    """A braiding matrix over its fusion-allowed intermediate channels.

    external holds (a4, a1, a3, a2): subscripts first, superscripts
    second.  rows are the channels mu with a3 x mu -> a4 and
    a2 x a1 -> mu; cols the channels gamma with a2 x gamma -> a4 and
    a3 x a1 -> gamma.  Entries off those sets are exactly zero.
    """

    external: tuple[ModuleLabel, ModuleLabel, ModuleLabel, ModuleLabel]
    rows: tuple[ModuleLabel, ...]
    cols: tuple[ModuleLabel, ...]
    entries: dict

    def entry(self, mu: ModuleLabel, gamma: ModuleLabel) -> CyclotomicNumber:
        return self.entries.get((mu, gamma), _ZERO)

    def det(self) -> CyclotomicNumber:
        if len(self.rows) != len(self.cols):
            raise ValueError("determinant of a non-square braiding matrix")
        k = len(self.rows)
        total = _ZERO
        for perm in permutations(range(k)):
            inversions = sum(
                1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j]
            )
            term = _ONE if inversions % 2 == 0 else -_ONE
            for i in range(k):
                term = term * self.entry(self.rows[i], self.cols[perm[i]])
            total = total + term
        return total


def braid_entry(
    model: MinimalModel,
    externals: tuple[ModuleLabel, ModuleLabel, ModuleLabel, ModuleLabel],
    mu: ModuleLabel,
    gamma: ModuleLabel,
) -> CyclotomicNumber:
    """One entry (B_{a4,a1}^{a3,a2})_{mu,gamma} of the factorized form.

    The two-index names are read off ffk_pair; the prefactor is a power
    of i = zeta_4 times a sign whose exponent must come out integral.
    """
    a4, a1, a3, a2 = externals
    n_p, n = ffk_pair(a1)
    m_p, m = ffk_pair(a4)
    c_p, c = ffk_pair(a3)
    a_p, a = ffk_pair(a2)
    b_p, b = ffk_pair(mu)
    d_p, d = ffk_pair(gamma)
    ipow = (-(m_p - 1) * (n - 1) - (n_p - 1) * (m - 1)) % 4
    doubled = (a - b + c - d) * (n_p + m) + (a_p - b_p + c_p - d_p) * (n + m)
    if doubled % 2:
        raise NonIntegerExponent(f"sign exponent {doubled}/2 for {externals}")
    sign = -1 if (doubled // 2) % 2 else 1
    primed = r_matrix(RQuery(model, "primed", a_p, m_p, n_p, c_p, b_p, d_p))
    unprimed = r_matrix(RQuery(model, "unprimed", a, m, n, c, b, d))
    return zeta(4, ipow) * sign * primed * unprimed


def braid_matrix(model: MinimalModel, externals) -> BraidMatrix:
    """Assemble the full braiding matrix over fusion-allowed channels."""
    if not model.is_unitary:
        raise NonUnitaryModel(f"{model!r} has no braiding data here")
    a4, a1, a3, a2 = externals
    rows = tuple(
        x
        for x in model.labels()
        if is_admissible(a3, x, a4, model) and is_admissible(a2, a1, x, model)
    )
    cols = tuple(
        x
        for x in model.labels()
        if is_admissible(a2, x, a4, model) and is_admissible(a3, a1, x, model)
    )
    entries = {
        (mu, ga): braid_entry(model, tuple(externals), mu, ga)
        for mu in rows
        for ga in cols
    }
    return BraidMatrix(
        external=tuple(externals), rows=rows, cols=cols, entries=entries
    )


@lru_cache(maxsize=None)
def _lemma_5a_matrix() -> BraidMatrix:
    model = MinimalModel(7, 8)
    p3, p4 = named_label(model, 3), named_label(model, 4)
    return braid_matrix(model, (p3, p3, p4, p4))


def lemma_5a_combos() -> tuple[CyclotomicNumber, CyclotomicNumber]:
    """The two 2x2 minors of B_{3,3}^{4,4} at (7,8) that the nonvanishing
    argument rests on.

    Returns (B44*B23 - B43*B24, B32*B44 - B42*B34) with numeric
    subscripts referring to the named modules P2, P3, P4.
    """
    matrix = _lemma_5a_matrix()
    model = MinimalModel(7, 8)
    lab = {i: named_label(model, i) for i in (2, 3, 4)}

    def e(i: int, j: int) -> CyclotomicNumber:
        return matrix.entry(lab[i], lab[j])

    first = e(4, 4) * e(2, 3) - e(4, 3) * e(2, 4)
    second = e(3, 2) * e(4, 4) - e(4, 2) * e(3, 4)
    return first, second


@lru_cache(maxsize=None)
def _lemma_3c_matrix() -> BraidMatrix:
    model = MinimalModel(11, 12)
    u2 = named_label(model, 2)
    return braid_matrix(model, (u2, u2, u2, u2))


def lemma_3c_entry() -> CyclotomicNumber:
    """The entry (B_{2,2}^{2,2})_{2,1} at (11,12), exactly."""
    model = MinimalModel(11, 12)
    return _lemma_3c_matrix().entry(named_label(model, 2), named_label(model, 1))
