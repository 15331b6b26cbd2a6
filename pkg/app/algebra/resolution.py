"""
Minimal graded free resolutions of presentation rings R/I.

The general construction resolves I with Schreyer's theorem: the
S-vector syzygies of a Groebner basis form a Groebner basis of the
syzygy module for the induced order, level after level, and the
resulting (usually non-minimal) complex is then pruned of unit entries.

Two closed forms are provided as well. When (p-b)(p-b_inv) = p+1 the
kernel has three binomial generators resolved by a 3 x 2 Hilbert-Burch
matrix; when it equals 2p+1 the kernel is the ideal of 2 x 2 minors of a
2 x 4 matrix and the Eagon-Northcott complex of that matrix is minimal.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from app.algebra.groebner import Ideal, reduced_groebner_basis
from app.algebra.modarith import mod_inverse
from app.algebra.polyalg import (
    GradedRing,
    Monomial,
    MonomialOrder,
    Polynomial,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
    presentation_ring,
)
from app.algebra.semigroup import validate_weight
from app.core.errors import (
    ClassificationError,
    DomainError,
    InhomogeneousIdealError,
    ParameterError,
)
from app.core.logging import get_logger

logger = get_logger(__name__)

# (position, monomial) -> coefficient
ModuleVector = Dict[Tuple[int, Monomial], Fraction]


@dataclass(frozen=True)
class GradedFreeModule:
    """Free module sum of R(-t) over its twists t."""

    twists: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.twists)


@dataclass
class PolyMatrix:
    """
    Matrix of polynomials describing a graded map between free modules.

    Entry (i, j) is zero or homogeneous of degree col_twists[j] - row_twists[i].
    """

    ring: GradedRing
    entries: List[List[Polynomial]]
    row_twists: List[int]
    col_twists: List[int]

    @property
    def nrows(self) -> int:
        return len(self.row_twists)

    @property
    def ncols(self) -> int:
        return len(self.col_twists)

    def column(self, j: int) -> List[Polynomial]:
        return [row[j] for row in self.entries]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ParameterError(f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}")
        product = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                total = self.ring.zero()
                for k in range(self.ncols):
                    left, right = self.entries[i][k], other.entries[k][j]
                    if left and right:
                        total = total + left * right
                row.append(total)
            product.append(row)
        return PolyMatrix(self.ring, product, list(self.row_twists), list(other.col_twists))

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self.entries for entry in row)

    def unit_entries(self) -> List[Tuple[int, int]]:
        """Positions of nonzero constant entries."""
        return [
            (i, j)
            for i, row in enumerate(self.entries)
            for j, entry in enumerate(row)
            if entry and entry.is_constant()
        ]

    def inhomogeneous_entries(self) -> List[Tuple[int, int]]:
        bad = []
        for i, row in enumerate(self.entries):
            for j, entry in enumerate(row):
                if entry and entry.homogeneous_degree() != self.col_twists[j] - self.row_twists[i]:
                    bad.append((i, j))
        return bad

    def to_strings(self) -> List[List[str]]:
        return [[str(entry) for entry in row] for row in self.entries]


@dataclass
class Resolution:
    """
    Graded free resolution F_0 <- F_1 <- ... of R/I.

    Attributes:
        ring: Presentation ring R
        modules: F_0, F_1, ... with F_0 = R
        differentials: d_1: F_1 -> F_0, d_2: F_2 -> F_1, ...
    """

    ring: GradedRing
    modules: List[GradedFreeModule]
    differentials: List[PolyMatrix] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.differentials)

    @property
    def ranks(self) -> List[int]:
        return [module.rank for module in self.modules]

    def twist_multisets(self) -> List[List[int]]:
        return [sorted(module.twists) for module in self.modules]


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} keyed by (homological index, internal degree)."""

    entries: Tuple[Tuple[Tuple[int, int], int], ...]

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(self.entries)

    def column(self, i: int) -> Dict[int, int]:
        return {j: count for (index, j), count in self.entries if index == i}

    @property
    def length(self) -> int:
        return max((i for (i, _), _ in self.entries), default=0)


def betti(res: Resolution) -> BettiTable:
    """Multiplicity of each twist j in each module F_i."""
    counts: Counter = Counter()
    for i, module in enumerate(res.modules):
        for twist in module.twists:
            counts[(i, twist)] += 1
    return BettiTable(entries=tuple(sorted(counts.items())))


# Schreyer frames


class _Frame:
    """
    Free module whose basis element a maps to a vector with leading term
    lead_mono[a] at lead_pos[a] in the parent frame.

    The key of a term m e_a is the parent key of m * lead term, refined by
    preferring smaller a.
    """

    def __init__(
        self,
        order: MonomialOrder,
        parent: Optional["_Frame"] = None,
        lead_pos: Sequence[int] = (),
        lead_mono: Sequence[Monomial] = (),
    ):
        self.order = order
        self.parent = parent
        self.lead_pos = list(lead_pos)
        self.lead_mono = list(lead_mono)
        self._cache: Dict[Tuple[int, Monomial], tuple] = {}

    def key(self, pos: int, mono: Monomial) -> tuple:
        cached = self._cache.get((pos, mono))
        if cached is not None:
            return cached
        if self.parent is None:
            value = (self.order.key(mono), -pos)
        else:
            value = (self.parent.key(self.lead_pos[pos], mono_mul(mono, self.lead_mono[pos])), -pos)
        self._cache[(pos, mono)] = value
        return value


def _leading(vector: ModuleVector, key: Callable[[int, Monomial], tuple]) -> Tuple[int, Monomial, Fraction]:
    pos, mono = max(vector, key=lambda term: key(*term))
    return pos, mono, vector[(pos, mono)]


def _add_scaled(target: ModuleVector, vector: ModuleVector, mono: Monomial, coeff: Fraction) -> None:
    for (pos, m), c in vector.items():
        slot = (pos, mono_mul(m, mono))
        value = target.get(slot, 0) + coeff * c
        if value:
            target[slot] = value
        else:
            target.pop(slot, None)


def _sort_level(
    vectors: List[ModuleVector], key: Callable[[int, Monomial], tuple]
) -> Tuple[List[ModuleVector], List[Tuple[int, Monomial, Fraction]]]:
    """Order a level by lead position, then lead monomial lex-descending."""
    leads = [_leading(v, key) for v in vectors]
    order = sorted(range(len(vectors)), key=lambda a: (leads[a][0], tuple(-e for e in leads[a][1])))
    return [vectors[a] for a in order], [leads[a] for a in order]


def _syzygies(
    vectors: List[ModuleVector],
    leads: List[Tuple[int, Monomial, Fraction]],
    parent_key: Callable[[int, Monomial], tuple],
) -> List[ModuleVector]:
    """
    Schreyer syzygies of a Groebner basis, one per minimal leading monomial.

    For a < b with equal lead position the syzygy is
    (L/lm_a)/lc_a e_a - (L/lm_b)/lc_b e_b minus the quotients of the
    S-vector's division by the basis.
    """
    by_pos: Dict[int, List[int]] = {}
    for k, (pos, _, _) in enumerate(leads):
        by_pos.setdefault(pos, []).append(k)

    result: List[ModuleVector] = []
    for a, (pos_a, lm_a, lc_a) in enumerate(leads):
        candidates = []
        for b in by_pos[pos_a]:
            if b <= a:
                continue
            lcm = mono_lcm(lm_a, leads[b][1])
            candidates.append((b, mono_div(lcm, lm_a), lcm))
        for b, shift_a, lcm in candidates:
            dominated = any(
                divides(other, shift_a) and (other != shift_a or other_b < b)
                for other_b, other, _ in candidates
                if other_b != b
            )
            if dominated:
                continue
            _, lm_b, lc_b = leads[b]
            shift_b = mono_div(lcm, lm_b)
            remainder: ModuleVector = {}
            _add_scaled(remainder, vectors[a], shift_a, 1 / lc_a)
            _add_scaled(remainder, vectors[b], shift_b, -1 / lc_b)
            syzygy: ModuleVector = {(a, shift_a): 1 / lc_a}
            syzygy[(b, shift_b)] = syzygy.get((b, shift_b), 0) - 1 / lc_b

            while remainder:
                pos, mono, coeff = _leading(remainder, parent_key)
                for k in by_pos.get(pos, ()):
                    _, lm_k, lc_k = leads[k]
                    if divides(lm_k, mono):
                        quotient = mono_div(mono, lm_k)
                        factor = coeff / lc_k
                        _add_scaled(remainder, vectors[k], quotient, -factor)
                        value = syzygy.get((k, quotient), 0) - factor
                        if value:
                            syzygy[(k, quotient)] = value
                        else:
                            syzygy.pop((k, quotient), None)
                        break
                else:
                    raise DomainError("S-vector did not reduce to zero; input is not a Groebner basis")
            if syzygy:
                result.append(syzygy)
    return result


def _to_matrix(
    ring: GradedRing, vectors: List[ModuleVector], nrows: int, row_twists: List[int], col_twists: List[int]
) -> PolyMatrix:
    columns: List[List[Dict[Monomial, Fraction]]] = [[{} for _ in range(nrows)] for _ in vectors]
    for j, vector in enumerate(vectors):
        for (pos, mono), coeff in vector.items():
            columns[j][pos][mono] = coeff
    entries = [[Polynomial(ring, columns[j][i]) for j in range(len(vectors))] for i in range(nrows)]
    return PolyMatrix(ring, entries, list(row_twists), list(col_twists))


def schreyer_resolution(ideal: Ideal, order: Optional[MonomialOrder] = None) -> Resolution:
    """
    Possibly non-minimal free resolution of R/I built from Schreyer syzygies.

    Each level is sorted by lead position and then lex-descending lead
    monomial, which makes the leading monomials lose a variable per level
    and bounds the length by the number of variables.
    """
    ring = ideal.ring
    order = order or ring.default_order()
    gb = reduced_groebner_basis(ideal, order)
    modules = [GradedFreeModule((0,))]
    differentials: List[PolyMatrix] = []
    if not gb:
        return Resolution(ring, modules, differentials)

    frame = _Frame(order)
    vectors: List[ModuleVector] = [{(0, mono): coeff for mono, coeff in g.items()} for g in gb]
    cap = ring.nvars + 2
    level = 1
    while vectors:
        if level > cap:
            raise DomainError(f"resolution exceeded {cap} levels")
        vectors, leads = _sort_level(vectors, frame.key)
        row_twists = list(modules[-1].twists)
        col_twists = [ring.degree(mono) + row_twists[pos] for pos, mono, _ in leads]
        differentials.append(_to_matrix(ring, vectors, len(row_twists), row_twists, col_twists))
        modules.append(GradedFreeModule(tuple(col_twists)))
        logger.debug(f"schreyer level {level}: rank {len(vectors)}")

        child = _Frame(order, frame, [pos for pos, _, _ in leads], [mono for _, mono, _ in leads])
        vectors = _syzygies(vectors, leads, frame.key)
        frame = child
        level += 1

    return Resolution(ring, modules, differentials)


def _find_unit(
    mats: List[List[List[Polynomial]]], twists: List[List[int]], start: int
) -> Optional[Tuple[int, int, int]]:
    """First constant entry at or after matrix `start`; only equal twists can hold one."""
    for i in range(start, len(mats)):
        rows_by_twist: Dict[int, List[int]] = {}
        for r, twist in enumerate(twists[i]):
            rows_by_twist.setdefault(twist, []).append(r)
        for c, twist in enumerate(twists[i + 1]):
            for r in rows_by_twist.get(twist, ()):
                entry = mats[i][r][c]
                if entry and entry.is_constant():
                    return i, r, c
    return None


def minimize(res: Resolution) -> Resolution:
    """
    Remove unit entries until none remain, then sort twists ascending.

    A unit u at (r, c) of d_i splits off a trivial summand: d_i becomes
    d_i - col_c * row_r / u without row r and column c, column r of d_(i-1)
    and row c of d_(i+1) are deleted. Deleting rows and columns creates no
    units, so the search resumes at the matrix just reduced.
    """
    ring = res.ring
    twists = [list(module.twists) for module in res.modules]
    mats = [[list(row) for row in d.entries] for d in res.differentials]

    removed = 0
    start = 0
    while True:
        hit = _find_unit(mats, twists, start)
        if hit is None:
            break

        i, r, c = hit
        start = i
        mat = mats[i]
        unit = mat[r][c].coefficient(ring.one_monomial)
        pivot_col = [mat[k][c] for k in range(len(mat))]
        pivot_row = list(mat[r])
        for k in range(len(mat)):
            if k == r or not pivot_col[k]:
                continue
            scale = pivot_col[k] * (1 / unit)
            for j in range(len(pivot_row)):
                if j != c and pivot_row[j]:
                    mat[k][j] = mat[k][j] - scale * pivot_row[j]
        mats[i] = [
            [entry for j, entry in enumerate(row) if j != c]
            for k, row in enumerate(mat)
            if k != r
        ]
        if i > 0:
            mats[i - 1] = [[entry for j, entry in enumerate(row) if j != r] for row in mats[i - 1]]
        if i + 1 < len(mats):
            mats[i + 1] = [row for k, row in enumerate(mats[i + 1]) if k != c]
        # d_(i+1) in position i maps F_(i+1) -> F_i
        del twists[i + 1][c]
        del twists[i][r]
        removed += 1

    while len(twists) > 1 and not twists[-1]:
        twists.pop()
        mats.pop()

    logger.debug(f"minimization removed {removed} trivial summands")
    modules = [GradedFreeModule(tuple(t)) for t in twists]
    differentials = [
        PolyMatrix(ring, mats[i], list(twists[i]), list(twists[i + 1])) for i in range(len(mats))
    ]
    return sort_twists(Resolution(ring, modules, differentials))


def minimal_free_resolution(ideal: Ideal) -> Resolution:
    """
    Minimal graded free resolution of R/I.

    Raises:
        InhomogeneousIdealError: If a generator of I is not homogeneous
    """
    ideal.require_homogeneous()
    res = minimize(schreyer_resolution(ideal))
    logger.info(f"minimal resolution ranks {res.ranks}")
    return res


def hilbert_series_coefficients(res: Resolution, bound: int) -> List[int]:
    """
    Coefficients up to t^bound of sum_i (-1)^i sum_t t^twist / prod_k (1 - t^deg y_k).
    """
    if bound < 0:
        raise ParameterError(f"bound must be non-negative, got {bound}")
    series = [0] * (bound + 1)
    for i, module in enumerate(res.modules):
        sign = -1 if i % 2 else 1
        for twist in module.twists:
            if twist <= bound:
                series[twist] += sign
    for deg in res.ring.degrees:
        for n in range(deg, bound + 1):
            series[n] += series[n - deg]
    return series


# Closed forms


def _product(p: int, b: int) -> Tuple[int, int]:
    validate_weight(p, b)
    b_inv = mod_inverse(b, p)
    return (p - b) * (p - b_inv), b_inv


def _binomial(ring: GradedRing, left: Dict[int, int], right: Dict[int, int]) -> Polynomial:
    def mono(exponents: Dict[int, int]) -> Monomial:
        return tuple(exponents.get(i, 0) for i in range(ring.nvars))

    return Polynomial.binomial(ring, mono(left), mono(right))


def explicit_kernel_codim2(p: int, b: int) -> Ideal:
    """
    Three-binomial kernel for (p-b)(p-b_inv) = p+1.

    Generators y1^e - y0 y2, y2^f - y1 y3 and y1^(e-1) y2^(f-1) - y0 y3 with
    e = p - b_inv and f = p - b.

    Raises:
        ClassificationError: If the product is not p+1
    """
    product, b_inv = _product(p, b)
    if product != p + 1:
        raise ClassificationError(f"({p}-{b})({p}-{b_inv}) = {product} is not p+1")
    e, f = p - b_inv, p - b
    ring = presentation_ring([p, p - b + 1, p - b_inv + 1, p])
    generators = (
        _binomial(ring, {1: e}, {0: 1, 2: 1}),
        _binomial(ring, {2: f}, {1: 1, 3: 1}),
        _binomial(ring, {1: e - 1, 2: f - 1}, {0: 1, 3: 1}),
    )
    return Ideal(ring=ring, generators=generators)


def hilbert_burch(p: int, b: int) -> Tuple[PolyMatrix, Resolution]:
    """
    Hilbert-Burch matrix and the two-step resolution it induces.

    Returns:
        The 3 x 2 matrix [[-y3, -y2^(f-1)], [-y1^(e-1), -y0], [y2, y1]] and the
        resolution R <- R^3 <- R^2 with F_1 twists (2p-b_inv+1, 2p-b+1, 2p)

    Raises:
        ClassificationError: If (p-b)(p-b_inv) is not p+1
    """
    ideal = explicit_kernel_codim2(p, b)
    ring = ideal.ring
    b_inv = mod_inverse(b, p)
    e, f = p - b_inv, p - b
    y = [ring.variable(i) for i in range(4)]

    f1 = [2 * p - b_inv + 1, 2 * p - b + 1, 2 * p]
    f2 = [3 * p - b_inv + 1, 3 * p - b + 1]
    matrix = PolyMatrix(
        ring,
        [
            [-y[3], -(y[2] ** (f - 1))],
            [-(y[1] ** (e - 1)), -y[0]],
            [y[2], y[1]],
        ],
        f1,
        f2,
    )
    d1 = PolyMatrix(ring, [list(ideal.generators)], [0], f1)
    res = Resolution(
        ring,
        [GradedFreeModule((0,)), GradedFreeModule(tuple(f1)), GradedFreeModule(tuple(f2))],
        [d1, matrix],
    )
    return matrix, res


def is_lower_2p1_weight(p: int, b: int) -> bool:
    """True when 2b < p - 1, the branch where b must equal (p-1)/3."""
    return 2 * b < p - 1


def explicit_kernel_2p1(p: int, b: int) -> Tuple[Ideal, PolyMatrix]:
    """
    Six-binomial kernel and its 2 x 4 determinantal matrix for product 2p+1.

    Lower branch (2b < p-1): points (p,0), (p-b,1), (p-2b,2), (1,p-b_inv), (0,p)
    and matrix [[y0, y1, y2, y3^b], [y1, y2, y3, y4]].
    Upper branch: the middle point is (beta, alpha) with
    alpha = (p-b_inv+1)/2, beta = (p-b+1)/2, and the matrix is
    [[y0, y1, y2, y3^(beta-1)], [y1^(alpha-1), y2, y3, y4]].

    Raises:
        ClassificationError: If (p-b)(p-b_inv) is not 2p+1
    """
    product, b_inv = _product(p, b)
    if product != 2 * p + 1:
        raise ClassificationError(f"({p}-{b})({p}-{b_inv}) = {product} is not 2p+1")

    if is_lower_2p1_weight(p, b):
        ring = presentation_ring([p, p - b + 1, p - 2 * b + 2, p - b_inv + 1, p])
        generators = (
            _binomial(ring, {2: 2}, {1: 1, 3: 1}),
            _binomial(ring, {1: 1, 2: 1}, {0: 1, 3: 1}),
            _binomial(ring, {3: b + 1}, {2: 1, 4: 1}),
            _binomial(ring, {1: 2}, {0: 1, 2: 1}),
            _binomial(ring, {2: 1, 3: b}, {1: 1, 4: 1}),
            _binomial(ring, {1: 1, 3: b}, {0: 1, 4: 1}),
        )
        top = [(0, 1), (1, 1), (2, 1), (3, b)]
        bottom = [(1, 1), (2, 1), (3, 1), (4, 1)]
    else:
        alpha = (p - b_inv + 1) // 2
        beta = (p - b + 1) // 2
        ring = presentation_ring([p, p - b + 1, alpha + beta, p - b_inv + 1, p])
        generators = (
            _binomial(ring, {2: 2}, {1: 1, 3: 1}),
            _binomial(ring, {1: alpha - 1, 2: 1}, {0: 1, 3: 1}),
            _binomial(ring, {3: beta}, {2: 1, 4: 1}),
            _binomial(ring, {1: alpha}, {0: 1, 2: 1}),
            _binomial(ring, {2: 1, 3: beta - 1}, {1: 1, 4: 1}),
            _binomial(ring, {1: alpha - 1, 3: beta - 1}, {0: 1, 4: 1}),
        )
        top = [(0, 1), (1, 1), (2, 1), (3, beta - 1)]
        bottom = [(1, alpha - 1), (2, 1), (3, 1), (4, 1)]

    def power(var: int, exp: int) -> Polynomial:
        return ring.variable(var) ** exp

    rows = [[power(v, e) for v, e in top], [power(v, e) for v, e in bottom]]
    col_twists = [entry.homogeneous_degree() for entry in rows[0]]
    row_shift = col_twists[0] - rows[1][0].homogeneous_degree()
    matrix = PolyMatrix(ring, rows, [0, row_shift], col_twists)
    return Ideal(ring=ring, generators=generators), matrix


def determinantal_ideal(matrix: PolyMatrix) -> Ideal:
    """Ideal of 2 x 2 minors of a 2-row matrix."""
    if matrix.nrows != 2:
        raise ParameterError(f"expected 2 rows, got {matrix.nrows}")
    top, bottom = matrix.entries
    minors = [top[j] * bottom[k] - top[k] * bottom[j] for j, k in combinations(range(matrix.ncols), 2)]
    return Ideal(ring=matrix.ring, generators=tuple(minors))


def maximal_minors_3x2(matrix: PolyMatrix) -> List[Polynomial]:
    """Signed 2 x 2 minors of a 3 x 2 matrix, minor i omitting row i."""
    if matrix.nrows != 3 or matrix.ncols != 2:
        raise ParameterError(f"expected a 3x2 matrix, got {matrix.nrows}x{matrix.ncols}")
    minors = []
    for skip in range(3):
        (a, b), (c, d) = [matrix.entries[i] for i in range(3) if i != skip]
        sign = -1 if skip % 2 else 1
        minors.append((a * d - b * c) * sign)
    return minors


def eagon_northcott(matrix: PolyMatrix) -> Resolution:
    """
    Eagon-Northcott complex of a 2 x m matrix, m >= 3.

    F_1 has basis the column pairs (j, k), mapped to the minors. For i >= 2
    F_i has basis pairs (S, alpha) with |S| = i+1 and alpha = (a0, a1),
    a0 + a1 = i-1, so rank F_i = i * C(m, i+1). The differential sends
    (S, alpha) to sum_l sum_{k: alpha_k > 0} (-1)^l M[k][s_l] (S - s_l, alpha - e_k).

    Raises:
        ParameterError: If the shape is not 2 x m with m >= 3
        InhomogeneousIdealError: If the entries do not admit row and column degrees
    """
    ring = matrix.ring
    m = matrix.ncols
    if matrix.nrows != 2 or m < 3:
        raise ParameterError(f"Eagon-Northcott needs a 2 x m matrix with m >= 3, got {matrix.nrows}x{m}")

    degs = []
    for row in matrix.entries:
        row_degs = []
        for entry in row:
            d = entry.homogeneous_degree()
            if d is None:
                raise InhomogeneousIdealError(f"matrix entry {entry} is zero or inhomogeneous")
            row_degs.append(d)
        degs.append(row_degs)
    col_degs = degs[0]
    shifts = {col_degs[j] - degs[1][j] for j in range(m)}
    if len(shifts) != 1:
        raise InhomogeneousIdealError(f"rows admit no common degree shift: {sorted(shifts)}")
    g = (0, shifts.pop())
    M = matrix.entries

    pairs = list(combinations(range(m), 2))
    f1 = [col_degs[j] + col_degs[k] - g[0] - g[1] for j, k in pairs]
    minors = [M[0][j] * M[1][k] - M[0][k] * M[1][j] for j, k in pairs]
    modules = [GradedFreeModule((0,)), GradedFreeModule(tuple(f1))]
    differentials = [PolyMatrix(ring, [minors], [0], f1)]

    prev_basis: List[Tuple[Tuple[int, ...], Tuple[int, int]]] = [(pair, (0, 0)) for pair in pairs]
    prev_twists = f1
    for i in range(2, m):
        basis = [
            (S, (i - 1 - a1, a1))
            for S in combinations(range(m), i + 1)
            for a1 in range(i)
        ]
        twists = [
            sum(col_degs[s] for s in S) - g[0] - g[1] - alpha[0] * g[0] - alpha[1] * g[1]
            for S, alpha in basis
        ]
        index = {element: row for row, element in enumerate(prev_basis)}
        entries = [[ring.zero() for _ in basis] for _ in prev_basis]
        for col, (S, alpha) in enumerate(basis):
            for place, s in enumerate(S):
                rest = S[:place] + S[place + 1:]
                for k in (0, 1):
                    if alpha[k] == 0:
                        continue
                    lowered = (alpha[0] - (k == 0), alpha[1] - (k == 1))
                    row = index[(rest, lowered)]
                    term = M[k][s] if place % 2 == 0 else -M[k][s]
                    entries[row][col] = entries[row][col] + term
        differentials.append(PolyMatrix(ring, entries, list(prev_twists), twists))
        modules.append(GradedFreeModule(tuple(twists)))
        prev_basis, prev_twists = basis, twists

    logger.debug(f"eagon-northcott ranks {[mod.rank for mod in modules]}")
    return sort_twists(Resolution(ring, modules, differentials))


def sort_twists(res: Resolution) -> Resolution:
    """Reorder each module's basis by ascending twist, permuting differentials to match."""
    twists = [list(module.twists) for module in res.modules]
    mats = [[list(row) for row in d.entries] for d in res.differentials]
    for i in range(1, len(twists)):
        perm = sorted(range(len(twists[i])), key=lambda a: twists[i][a])
        twists[i] = [twists[i][a] for a in perm]
        mats[i - 1] = [[row[a] for a in perm] for row in mats[i - 1]]
        if i < len(mats):
            mats[i] = [mats[i][a] for a in perm]
    return Resolution(
        res.ring,
        [GradedFreeModule(tuple(t)) for t in twists],
        [PolyMatrix(res.ring, mats[i], twists[i], twists[i + 1]) for i in range(len(mats))],
    )
