"""The path category on Young's lattice, the horizontal-strip category, and
the projection connecting them.

Morphisms lam -> mu in the path category are formal Q(a)-linear combinations
of standard skew tableaux of shape mu/lam (paths in Young's lattice), and
composition is bilinear concatenation of paths.  The horizontal-strip
category HS has at most one morphism lam -> mu: the skew shape itself when
it is a horizontal strip, and zero otherwise; composition keeps the
composite shape when it is again a horizontal strip and collapses to zero
when it is not.

The bridge is the projection Q onto Hecke invariants.  Each hom space
mu/lam carries the seminormal H_n action; its invariant subspace (joint
eigenvalue-a eigenspace) is 1-dimensional exactly on horizontal strips.  We
store the invariant vector normalized to have coordinate 1 on the first
tableau in enumeration order, decompose any path element as

    element = scalar * invariant + (complement part)

against a fixed complement basis (columns of the shifted generators
M_i - a), and call that scalar the Q image.  Composing the normalized
invariants of mu/lam and nu/mu and projecting gives a structure scalar
c(lam, mu, nu); nonvanishing of these scalars must reproduce HS composition
exactly, and they must satisfy the associativity cocycle

    c(lam,mu,nu) c(lam,nu,rho) = c(mu,nu,rho) c(lam,mu,rho).

verify_morita sweeps both statements over all chains at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .linalg import QMatrix, hstack, rref, solve_linear
from .ratfun import RationalFunction
from .seminormal import joint_a_eigenspace, seminormal_matrix, _A
from .shapes import (
    Partition,
    SkewShape,
    SkewTableau,
    all_partitions,
    contains,
    enumerate_skew_tableaux,
    is_horizontal_strip,
    sub_partitions,
)


class SourceTargetMismatch(ValueError):
    """Composition of morphisms whose endpoints do not match."""


class PathMorphism:
    """Formal linear combination of standard skew tableaux lam -> mu."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: Partition, target: Partition, terms=None):
        self.source = tuple(source)
        self.target = tuple(target)
        shape = SkewShape(self.source, self.target)
        clean: dict[SkewTableau, RationalFunction] = {}
        for tableau, coeff in (terms or {}).items():
            if tableau.shape != shape:
                raise ValueError(
                    f"tableau of shape {tableau.shape} in a morphism {shape}"
                )
            if not isinstance(coeff, RationalFunction):
                coeff = RationalFunction(coeff)
            if coeff:
                clean[tableau] = coeff
        self.terms = clean

    @classmethod
    def identity(cls, p: Partition) -> PathMorphism:
        """The empty path at p."""
        return cls(p, p, {SkewTableau((tuple(p),)): RationalFunction.one()})

    @classmethod
    def from_tableau(cls, t: SkewTableau, coeff=1) -> PathMorphism:
        shape = t.shape
        return cls(shape.inner, shape.outer, {t: RationalFunction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, t: SkewTableau) -> RationalFunction:
        return self.terms.get(t, RationalFunction.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"PathMorphism({self.source} -> {self.target}, {len(self.terms)} terms)"


def path_compose(g: PathMorphism, f: PathMorphism) -> PathMorphism:
    """Bilinear concatenation g o f of paths; f runs first."""
    if f.target != g.source:
        raise SourceTargetMismatch(
            f"cannot compose: f ends at {f.target}, g starts at {g.source}"
        )
    acc: dict[SkewTableau, RationalFunction] = {}
    for tf, cf in f.terms.items():
        for tg, cg in g.terms.items():
            t = SkewTableau(tf.chain + tg.chain[1:])
            c = cf * cg
            prev = acc.get(t)
            total = c if prev is None else prev + c
            if total:
                acc[t] = total
            elif prev is not None:
                del acc[t]
    return PathMorphism(f.source, g.target, acc)


@dataclass(frozen=True)
class HSMorphism:
    """A morphism of the horizontal-strip category: a strip or zero."""

    source: Partition
    target: Partition
    strip: SkewShape | None

    def __post_init__(self):
        if self.strip is not None:
            if (self.strip.inner, self.strip.outer) != (self.source, self.target):
                raise ValueError("strip does not match the stated endpoints")
            if not is_horizontal_strip(self.strip):
                raise ValueError(f"{self.strip} is not a horizontal strip")

    @classmethod
    def zero(cls, source: Partition, target: Partition) -> HSMorphism:
        return cls(tuple(source), tuple(target), None)

    @classmethod
    def basis(cls, source: Partition, target: Partition) -> HSMorphism:
        """The unique basis morphism source -> target, or zero if there is none."""
        source, target = tuple(source), tuple(target)
        if not contains(source, target):
            return cls.zero(source, target)
        shape = SkewShape(source, target)
        if not is_horizontal_strip(shape):
            return cls.zero(source, target)
        return cls(source, target, shape)

    @property
    def is_zero(self) -> bool:
        return self.strip is None


def hs_compose(g: HSMorphism, f: HSMorphism) -> HSMorphism:
    """Strip composition: the composite shape if it is a horizontal strip,
    zero otherwise; zero absorbs."""
    if f.target != g.source:
        raise SourceTargetMismatch(
            f"cannot compose: f ends at {f.target}, g starts at {g.source}"
        )
    if f.is_zero or g.is_zero:
        return HSMorphism.zero(f.source, g.target)
    composite = SkewShape(f.source, g.target)
    if not is_horizontal_strip(composite):
        return HSMorphism.zero(f.source, g.target)
    return HSMorphism(f.source, g.target, composite)


@dataclass(frozen=True)
class QImage:
    """Result of projecting a path element onto the invariant line."""

    source: Partition
    target: Partition
    scalar: RationalFunction
    reference_vector: QMatrix  # normalized invariant vector; zero column if none


class _InvariantData(NamedTuple):
    dimension: int
    vector: QMatrix | None  # normalized: coordinate 1 on the first tableau
    functional: QMatrix | None  # 1 x dim row extracting the invariant coordinate


@lru_cache(maxsize=None)
def _invariant_data(shape: SkewShape, flip: bool = False) -> _InvariantData:
    basis = enumerate_skew_tableaux(shape)
    dim = len(basis)
    n = shape.size
    mats = [seminormal_matrix(shape, i, flip=flip) for i in range(1, n)]
    kernel = joint_a_eigenspace(mats, dim)
    if len(kernel) != 1:
        return _InvariantData(len(kernel), None, None)
    vector = kernel[0]
    head = vector[0, 0]
    if not head:
        raise RuntimeError(
            f"invariant vector of {shape} vanishes on the first tableau; "
            "cannot normalize"
        )
    vector = vector.scale(head.inverse())
    if mats:
        shifted = [m - QMatrix.identity(dim).scale(_A) for m in mats]
        stacked = hstack(shifted)
        _, pivots = rref(stacked)
        complement = [stacked.column_vector(j) for j in pivots]
    else:
        complement = []
    basis_change = hstack([vector] + complement) if complement else vector
    inverse = solve_linear(basis_change, QMatrix.identity(dim))
    functional = QMatrix(1, dim, [inverse.row_list(0)])
    return _InvariantData(1, vector, functional)


def invariant_dimension(lam: Partition, mu: Partition, *, flip: bool = False) -> int:
    """Dimension of the Hecke invariants of the mu/lam hom space."""
    return _invariant_data(SkewShape(tuple(lam), tuple(mu)), flip).dimension


def invariant_path(shape: SkewShape, *, flip: bool = False) -> PathMorphism | None:
    """The stored normalized invariant vector as a path morphism, or None
    when the shape has no invariants."""
    data = _invariant_data(shape, flip)
    if data.dimension != 1:
        return None
    basis = enumerate_skew_tableaux(shape)
    terms = {t: data.vector[k, 0] for k, t in enumerate(basis)}
    return PathMorphism(shape.inner, shape.outer, terms)


def project_Q(p: PathMorphism, *, flip: bool = False) -> QImage:
    """Coordinate of a path element along the normalized invariant vector.

    The element decomposes uniquely as scalar * invariant + complement, where
    the complement is spanned by the columns of the shifted generators
    M_i - a; the scalar is read off by an exact linear solve (precomputed as
    the first row of the inverse basis-change matrix).  Shapes without
    invariants always project to scalar zero.
    """
    shape = SkewShape(p.source, p.target)
    basis = enumerate_skew_tableaux(shape)
    dim = len(basis)
    data = _invariant_data(shape, flip)
    if data.dimension != 1:
        return QImage(p.source, p.target, RationalFunction.zero(), QMatrix.zeros(dim, 1))
    column = QMatrix.column([p.coefficient(t) for t in basis])
    scalar = (data.functional * column)[0, 0]
    return QImage(p.source, p.target, scalar, data.vector)


@lru_cache(maxsize=None)
def morita_composition_scalar(
    lam: Partition, mu: Partition, nu: Partition, *, flip: bool = False
) -> RationalFunction:
    """The structure scalar c with Q(v_{nu/mu} o v_{mu/lam}) = c * v_{nu/lam},
    where v denotes the normalized invariant vectors.

    Preconditions: lam <= mu <= nu and both factor shapes are horizontal
    strips.  The scalar is nonzero exactly when nu/lam is again a horizontal
    strip; verify_morita sweeps that contract.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if not (contains(lam, mu) and contains(mu, nu)):
        raise ValueError("need a chain lam <= mu <= nu")
    lower, upper = SkewShape(lam, mu), SkewShape(mu, nu)
    if not is_horizontal_strip(lower) or not is_horizontal_strip(upper):
        raise ValueError("both factors must be horizontal strips")
    first = invariant_path(lower, flip=flip)
    second = invariant_path(upper, flip=flip)
    if first is None or second is None:
        raise ArithmeticError(
            f"missing invariant vector for a horizontal strip in {lam}<={mu}<={nu}"
        )
    return project_Q(path_compose(second, first), flip=flip).scalar


def verify_morita(
    max_outer_size: int = 6, max_strip_len: int = 4, *, flip: bool = False
) -> dict:
    """Desk-scale sweep of the equivalence between the invariant-projection
    category and the horizontal-strip category.

    Checks, over all chains within the bounds:
      * invariant dimensions match the horizontal-strip predicate,
      * nonvanishing of the composition scalar matches HS composition,
      * the scalars satisfy the associativity cocycle on chains of length 3.
    """
    parts = list(all_partitions(max_outer_size))
    failures: list[dict] = []

    def strip_steps(outer: Partition) -> list[Partition]:
        steps = []
        for inner in sub_partitions(outer):
            k = sum(outer) - sum(inner)
            if k <= max_strip_len and is_horizontal_strip(SkewShape(inner, outer)):
                steps.append(inner)
        return steps

    pairs_checked = 0
    for nu in parts:
        for lam in sub_partitions(nu):
            if sum(nu) - sum(lam) > 2 * max_strip_len:
                continue
            pairs_checked += 1
            shape = SkewShape(lam, nu)
            got = _invariant_data(shape, flip).dimension
            expected = 1 if is_horizontal_strip(shape) else 0
            if got != expected:
                failures.append(
                    {
                        "lambda": list(lam),
                        "mu": None,
                        "nu": list(nu),
                        "kind": "invariant-dimension",
                        "expected": expected,
                        "got": got,
                    }
                )

    def scalar_or_failure(lam, mu, nu):
        try:
            return morita_composition_scalar(lam, mu, nu, flip=flip)
        except ArithmeticError:
            failures.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "nu": list(nu),
                    "kind": "missing-invariant",
                    "expected": "1-dimensional invariants on both factors",
                    "got": "none",
                }
            )
            return None

    chains_checked = 0
    for nu in parts:
        for mu in strip_steps(nu):
            for lam in strip_steps(mu):
                chains_checked += 1
                scalar = scalar_or_failure(lam, mu, nu)
                if scalar is None:
                    continue
                expected_nonzero = not hs_compose(
                    HSMorphism.basis(mu, nu), HSMorphism.basis(lam, mu)
                ).is_zero
                if bool(scalar) != expected_nonzero:
                    failures.append(
                        {
                            "lambda": list(lam),
                            "mu": list(mu),
                            "nu": list(nu),
                            "kind": "composition-scalar",
                            "expected": "nonzero" if expected_nonzero else "zero",
                            "got": str(scalar),
                        }
                    )

    cocycles_checked = 0
    for rho in parts:
        for nu in strip_steps(rho):
            for mu in strip_steps(nu):
                for lam in strip_steps(mu):
                    # all four scalars must be defined, i.e. the inner
                    # composites nu/lam and rho/mu must also be strips
                    if not is_horizontal_strip(SkewShape(lam, nu)):
                        continue
                    if not is_horizontal_strip(SkewShape(mu, rho)):
                        continue
                    cocycles_checked += 1
                    values = [
                        scalar_or_failure(lam, mu, nu),
                        scalar_or_failure(lam, nu, rho),
                        scalar_or_failure(mu, nu, rho),
                        scalar_or_failure(lam, mu, rho),
                    ]
                    if any(v is None for v in values):
                        continue
                    left = values[0] * values[1]
                    right = values[2] * values[3]
                    if left != right:
                        failures.append(
                            {
                                "lambda": list(lam),
                                "mu": list(mu),
                                "nu": list(nu),
                                "rho": list(rho),
                                "kind": "cocycle",
                                "expected": str(right),
                                "got": str(left),
                            }
                        )

    return {
        "bounds": {
            "max_outer_size": max_outer_size,
            "max_strip_len": max_strip_len,
        },
        "chains_checked": chains_checked,
        "cocycles_checked": cocycles_checked,
        "dimension_pairs_checked": pairs_checked,
        "failures": failures,
        "pass": not failures,
    }
