"""Seminormal representations of the Iwahori-Hecke algebra H_n on standard
skew tableaux.

H_n is generated over Q(a) by g_1 .. g_{n-1} subject to

    g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}
    g_i g_j = g_j g_i              for |i - j| >= 2
    g_i^2 = (a - a^-1) g_i + 1

The representation attached to a skew shape acts on the standard tableaux of
that shape (in enumeration order, see shapes.enumerate_skew_tableaux).  The
action of g_i on a tableau T looks at the boxes holding entries i and i+1:

  * same row     ->  g_i T = a T
  * same column  ->  g_i T = -a^-1 T
  * otherwise T pairs with T' = (swap entries i, i+1).  Writing T+ for the
    member of the pair whose box of i+1 has the larger content and d for the
    axial distance between the two boxes,

        g_i T+ = (a^d / [d]) T+ + T-
        g_i T- = ([d-1][d+1] / [d]^2) T+  -  (a^-d / [d]) T-

The orientation by content is not a free choice: with the opposite
convention the braid relations fail (seminormal_matrix exposes flip=True so
the test suite can demonstrate exactly that), and at a = 1 the chosen
convention degenerates to the classical Young seminormal form, with diagonal
entry 1/d on T+.

Everything here is exact; there is no tolerance anywhere.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from math import factorial
from typing import Sequence

from .linalg import QMatrix, hstack, nullspace, rref, solve_linear, NoSolution, fraction_rank
from .ratfun import LaurentPoly, RationalFunction, quantum_int
from .shapes import (
    Partition,
    SkewShape,
    SkewTableau,
    all_skew_shapes,
    axial_distance,
    check_partition,
    content,
    enumerate_skew_tableaux,
    is_horizontal_strip,
    partitions_of,
    swap_entries,
)


class RelationViolation(Exception):
    """A generator matrix failed a defining relation -- an implementation bug,
    never a legal outcome."""


_A = RationalFunction.gen()
_A_INV = _A.inverse()
_QUAD = _A - _A_INV  # a - a^-1, the coefficient in the quadratic relation
_ONE = RationalFunction.one()
_SCREEN_POINT = Fraction(7, 3)  # fixed rational specialization for rank pre-screening


@lru_cache(maxsize=None)
def _mixing_block(d: int):
    """Entries (plus_diag, minus_to_plus, minus_diag) of the 2x2 block at
    axial distance d; the plus-to-minus entry is always 1."""
    qd = RationalFunction(quantum_int(d))
    plus_diag = RationalFunction(LaurentPoly.monomial(d)) / qd
    minus_diag = -(RationalFunction(LaurentPoly.monomial(-d)) / qd)
    off = RationalFunction(quantum_int(d - 1) * quantum_int(d + 1)) / (qd * qd)
    return plus_diag, off, minus_diag


def seminormal_matrix(shape: SkewShape, i: int, *, flip: bool = False) -> QMatrix:
    """Matrix of g_i on the standard tableaux of the shape, columns being the
    images of basis vectors in enumeration order.

    flip=True deliberately reverses the content orientation of every mixing
    pair.  It exists solely so tests can show the convention is forced by the
    braid relations; never use it for real computations.
    """
    basis = enumerate_skew_tableaux(shape)
    n = shape.size
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} outside 1..{n - 1}")
    index = {t: k for k, t in enumerate(basis)}
    dim = len(basis)
    data = [[RationalFunction.zero()] * dim for _ in range(dim)]
    for k, t in enumerate(basis):
        b1, b2 = t.box_of(i), t.box_of(i + 1)
        if b1.row == b2.row:
            data[k][k] = _A
        elif b1.col == b2.col:
            data[k][k] = -_A_INV
        else:
            k2 = index[swap_entries(t, i)]
            if k2 < k:
                continue  # pair already filled from the smaller index
            plus_is_first = content(b2) > content(b1)
            if flip:
                plus_is_first = not plus_is_first
            p, m = (k, k2) if plus_is_first else (k2, k)
            plus_diag, off, minus_diag = _mixing_block(axial_distance(b1, b2))
            data[p][p] = plus_diag
            data[m][p] = _ONE
            data[p][m] = off
            data[m][m] = minus_diag
    return QMatrix._wrap(dim, dim, data)


@dataclass(frozen=True)
class SkewRepresentation:
    """All generator matrices of H_n on the tableaux of one skew shape."""

    shape: SkewShape
    size: int  # number of skew boxes, i.e. the n of H_n
    basis: tuple[SkewTableau, ...]
    generators: tuple[QMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "dimension": self.dimension,
            "generators": [m.to_json() for m in self.generators],
        }


def relation_failures(shape: SkewShape, *, flip: bool = False) -> list[dict]:
    """Check the defining relations and the 2x2 block identities for one shape.

    Returns one record per violated identity; an empty list means the shape
    passes.  Matrix identities are checked exactly in Q(a).
    """
    n = shape.size
    mats = [seminormal_matrix(shape, i, flip=flip) for i in range(1, n)]
    dim = mats[0].rows if mats else len(enumerate_skew_tableaux(shape))
    shape_json = shape.to_json()
    failures = []

    def record(kind: str, detail: str) -> None:
        failures.append({"shape": shape_json, "kind": kind, "detail": detail})

    ident = QMatrix.identity(dim)
    for idx, m in enumerate(mats, start=1):
        if m * m != m.scale(_QUAD) + ident:
            record("quadratic", f"g{idx}^2 != (a - a^-1) g{idx} + 1")
    for idx in range(1, len(mats)):
        m1, m2 = mats[idx - 1], mats[idx]
        if m1 * m2 * m1 != m2 * m1 * m2:
            record("braid", f"g{idx} g{idx + 1} g{idx} != g{idx + 1} g{idx} g{idx + 1}")
    for ia, ib in itertools.combinations(range(len(mats)), 2):
        if ib - ia >= 2 and mats[ia] * mats[ib] != mats[ib] * mats[ia]:
            record("commutation", f"g{ia + 1} g{ib + 1} != g{ib + 1} g{ia + 1}")

    basis = enumerate_skew_tableaux(shape)
    index = {t: k for k, t in enumerate(basis)}
    for gi, m in enumerate(mats, start=1):
        for k, t in enumerate(basis):
            b1, b2 = t.box_of(gi), t.box_of(gi + 1)
            if b1.row == b2.row or b1.col == b2.col:
                continue
            k2 = index[swap_entries(t, gi)]
            if k2 < k:
                continue
            trace = m[k, k] + m[k2, k2]
            det = m[k, k] * m[k2, k2] - m[k, k2] * m[k2, k]
            if trace != _QUAD:
                record("block-trace", f"g{gi} block at tableau {k}: trace != a - a^-1")
            if det != -_ONE:
                record("block-det", f"g{gi} block at tableau {k}: det != -1")
    return failures


@lru_cache(maxsize=None)
def build_representation(shape: SkewShape) -> SkewRepresentation:
    """Assemble all generator matrices and verify the relations eagerly."""
    basis = tuple(enumerate_skew_tableaux(shape))
    n = shape.size
    mats = tuple(seminormal_matrix(shape, i) for i in range(1, n))
    problems = relation_failures(shape)
    if problems:
        raise RelationViolation(
            f"relations fail on {shape.inner}/{shape.outer}: "
            + "; ".join(p["detail"] for p in problems)
        )
    return SkewRepresentation(shape=shape, size=n, basis=basis, generators=mats)


def act_word(rep: SkewRepresentation, word: Sequence[int]) -> QMatrix:
    """Ordered product of generator matrices; the empty word is the identity."""
    result = QMatrix.identity(rep.dimension)
    for letter in word:
        if not 1 <= letter <= rep.size - 1:
            raise IndexError(f"generator index {letter} outside 1..{rep.size - 1}")
        result = result * rep.generators[letter - 1]
    return result


def joint_a_eigenspace(mats: Sequence[QMatrix], dim: int) -> list[QMatrix]:
    """Basis of {v : M v = a v for every M}, as column vectors.

    With no matrices at all the condition is vacuous and the whole space
    qualifies.  Computed as the joint kernel of the shifted matrices M - a I,
    restricting one matrix at a time.
    """
    if not mats:
        return [QMatrix.identity(dim).column_vector(j) for j in range(dim)]
    span = QMatrix.identity(dim)
    for m in mats:
        shifted = m - QMatrix.identity(dim).scale(_A)
        restricted = shifted * span
        kernel = nullspace(restricted)
        if not kernel:
            return []
        span = span * hstack(kernel)
    return [span.column_vector(j) for j in range(span.cols)]


def invariant_subspace(rep: SkewRepresentation) -> list[QMatrix]:
    """Basis of the joint eigenvalue-a eigenspace of all generators.

    Its dimension is 1 exactly when the shape is a horizontal strip and 0
    otherwise; for shapes with at most one box there are no generators and
    the whole (1-dimensional) space is invariant.
    """
    return joint_a_eigenspace(rep.generators, rep.dimension)


# ---------------------------------------------------------------------------
# Artin-Wedderburn bookkeeping: H_n maps onto the product of matrix algebras
# indexed by partitions of n, with block sizes the tableau counts.
# ---------------------------------------------------------------------------


def reduced_word(perm: Sequence[int]) -> tuple[int, ...]:
    """Deterministic reduced word for a permutation in one-line notation.

    Bubble construction: repeatedly fix the leftmost descent.  The word
    length equals the inversion count, and the Hecke element T_w built from
    it does not depend on which reduced word was chosen.
    """
    w = list(perm)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(w)}")
    word: list[int] = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


@dataclass(frozen=True)
class WedderburnReport:
    n: int
    dims: tuple[int, ...]
    sum_of_squares: int
    faithful: bool | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dims": list(self.dims),
            "sum_of_squares": self.sum_of_squares,
            "factorial": factorial(self.n),
            "faithful": self.faithful,
        }


def _word_image_rows(n: int):
    """For every permutation w of n: its reduced word and the block-diagonal
    image of T_w over all partitions of n, flattened row-major to a vector."""
    parts = list(partitions_of(n))
    reps = [build_representation(SkewShape((), lam)) for lam in parts]
    perms = list(itertools.permutations(range(1, n + 1)))
    words = [reduced_word(p) for p in perms]
    rows = []
    for word in words:
        row: list[RationalFunction] = []
        for rep in reps:
            image = act_word(rep, word)
            for i in range(image.rows):
                for j in range(image.cols):
                    row.append(image[i, j])
        rows.append(row)
    return perms, words, rows


def wedderburn_check(
    n: int, *, exact: bool = False, check_faithful: bool = True
) -> WedderburnReport:
    """Block dimensions f^lam, their sum of squares, and faithfulness of the
    joint action of the n! basis words T_w.

    Faithfulness means the word images are linearly independent.  By default
    the rank is pre-screened at the fixed rational point a = 7/3: full rank
    at any specialization already certifies full generic rank (rank can only
    drop under specialization).  If the screen is inconclusive, or if
    exact=True, the rank is computed symbolically over Q(a).
    """
    if n < 1:
        raise ValueError("wedderburn_check requires n >= 1")
    parts = list(partitions_of(n))
    dims = tuple(
        len(enumerate_skew_tableaux(SkewShape((), lam))) for lam in parts
    )
    sum_of_squares = sum(d * d for d in dims)
    faithful: bool | None = None
    if check_faithful:
        _, _, rows = _word_image_rows(n)
        target = factorial(n)
        if not exact:
            screen = [[entry.evaluate(_SCREEN_POINT) for entry in row] for row in rows]
            if fraction_rank(screen) == target:
                faithful = True
        if faithful is None:
            matrix = QMatrix(len(rows), sum_of_squares, rows)
            faithful = len(rref(matrix)[1]) == target
    return WedderburnReport(n, dims, sum_of_squares, faithful)


def matrix_unit_lift(
    n: int, lam: Partition, row: int, col: int
) -> list[tuple[tuple[int, ...], RationalFunction]]:
    """Coefficients c_w over the word basis with sum_w c_w T_w acting as the
    elementary matrix E[row,col] in the lam block and as zero elsewhere.

    Returns (reduced word, coefficient) pairs for every permutation of n, in
    lexicographic one-line order.  Indices are 0-based within the block.  The
    result is verified by re-multiplication before returning.
    """
    if not 1 <= n <= 4:
        raise ValueError("matrix unit lifting is desk-scale only: need 1 <= n <= 4")
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    parts = list(partitions_of(n))
    dims = [len(enumerate_skew_tableaux(SkewShape((), p))) for p in parts]
    block = parts.index(lam)
    f = dims[block]
    if not (0 <= row < f and 0 <= col < f):
        raise ValueError(f"unit indices ({row},{col}) outside a {f}x{f} block")
    _, words, rows = _word_image_rows(n)
    total = sum(d * d for d in dims)
    system = QMatrix(len(rows), total, rows).transpose()
    offset = sum(d * d for d in dims[:block]) + row * f + col
    target_entries = [RationalFunction.zero()] * total
    target_entries[offset] = RationalFunction.one()
    target = QMatrix.column(target_entries)
    try:
        solution = solve_linear(system, target)
    except NoSolution as exc:  # cannot happen while the action is faithful
        raise RuntimeError(
            f"internal error: no matrix-unit lift for n={n}, {lam}"
        ) from exc
    coeffs = [solution[k, 0] for k in range(len(words))]
    recombined = [RationalFunction.zero()] * total
    for c, word_row in zip(coeffs, rows):
        if not c:
            continue
        for j, entry in enumerate(word_row):
            if entry:
                recombined[j] = recombined[j] + c * entry
    if recombined != target_entries:
        raise RuntimeError("internal error: matrix-unit lift failed re-multiplication")
    return list(zip(words, coeffs))


def classical_limit(rep: SkewRepresentation) -> list[list[list[Fraction]]]:
    """Generator matrices evaluated at a = 1.

    The denominators are products of quantum integers [d] with d >= 2, which
    do not vanish at 1, so the evaluation is always defined; the resulting
    rational matrices satisfy the symmetric-group relations s_i^2 = 1, braid
    and far commutation.
    """
    return [m.evaluate(Fraction(1)) for m in rep.generators]


# ---------------------------------------------------------------------------
# Verification sweeps
# ---------------------------------------------------------------------------


def _effective_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("HECKE_STRIP_THREADS", "").strip()
        threads = int(env) if env else 1
    return max(1, threads)


def _map_shapes(fn, shapes, threads: int | None):
    workers = _effective_threads(threads)
    if workers > 1 and len(shapes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, shapes, chunksize=8))
    return [fn(s) for s in shapes]


def _relations_worker(shape: SkewShape, flip: bool) -> list[dict]:
    return relation_failures(shape, flip=flip)


def verify_relations(
    max_outer_size: int = 6,
    min_boxes: int = 2,
    max_boxes: int = 5,
    *,
    flip: bool = False,
    threads: int | None = None,
) -> dict:
    """Sweep every skew shape in bounds; check quadratic, braid and far
    commutation relations plus the 2x2 block trace/det identities, exactly."""
    shapes = list(all_skew_shapes(max_outer_size, min_boxes, max_boxes))
    results = _map_shapes(partial(_relations_worker, flip=flip), shapes, threads)
    failures = [f for per_shape in results for f in per_shape]
    return {
        "bounds": {
            "max_outer_size": max_outer_size,
            "min_boxes": min_boxes,
            "max_boxes": max_boxes,
        },
        "shapes_checked": len(shapes),
        "failures": failures,
        "pass": not failures,
    }


def _invariants_worker(shape: SkewShape) -> list[dict]:
    n = shape.size
    mats = [seminormal_matrix(shape, i) for i in range(1, n)]
    dim = len(enumerate_skew_tableaux(shape))
    got = len(joint_a_eigenspace(mats, dim))
    expected = 1 if is_horizontal_strip(shape) else 0
    if got == expected:
        return []
    return [
        {
            "shape": shape.to_json(),
            "kind": "invariant-dimension",
            "expected": expected,
            "got": got,
        }
    ]


def verify_invariants(
    max_outer_size: int = 8,
    max_boxes: int = 5,
    *,
    threads: int | None = None,
) -> dict:
    """Sweep every skew shape in bounds; the invariant dimension must be 1
    exactly on horizontal strips and 0 otherwise."""
    shapes = list(all_skew_shapes(max_outer_size, 0, max_boxes))
    results = _map_shapes(_invariants_worker, shapes, threads)
    failures = [f for per_shape in results for f in per_shape]
    return {
        "bounds": {"max_outer_size": max_outer_size, "max_boxes": max_boxes},
        "shapes_checked": len(shapes),
        "failures": failures,
        "pass": not failures,
    }
