"""Section spaces, the tangent map of the degeneracy construction, and a
Jacobian smoothness certificate.

The space of global sections of each bundle is realized concretely: an
ambient direct sum of form spaces modulo the image of the defining relation.
Reduction to canonical coset representatives is by echelon elimination, so
every class has one distinguished ambient tuple and ``reduce`` is idempotent
with kernel exactly the relation span.

For a pair of sections (v1, v2) spanning V, the derivative of the map
"pair of sections -> degeneracy curve" sends a homomorphism phi in
Hom(V, H0/V) to the curve-restriction of

    v1 ^ phi(v2)  -  v2 ^ phi(v1)

where a ^ b is the determinant of the two ambient rows over the relation
rows.  Columns of the tangent matrix are these values on the basis
phi_{i,j}: v_i -> q_j; surjectivity onto sections of the curve is decided by
ranking the matrix augmented with the curve's own coefficient vector, since
the curve spans the kernel of restriction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .bundles import (
    BundleSpec,
    ambient_degrees,
    det_degree,
    h0_bundle,
    relation_rows,
    relation_source_degrees,
)
from .detmatrix import GpliError, Section, wedge_curve
from .linalg import ExactMatrix, Vector, rank, rref
from .polynomials import HomPoly, h0_p2, mono_basis


class SectionSpace:
    """Global sections of a bundle as an explicit ambient quotient."""

    def __init__(self, bundle: BundleSpec):
        self.bundle = bundle
        degs = ambient_degrees(bundle)
        self.ambient_degrees = degs
        self.block_offsets: List[int] = []
        off = 0
        for d in degs:
            self.block_offsets.append(off)
            off += h0_p2(d)
        self.ambient_dim = off

        columns: List[List[Fraction]] = []
        rows = relation_rows(bundle)
        sources = relation_source_degrees(bundle)
        for row, src in zip(rows, sources):
            for mono in mono_basis(src):
                f = HomPoly.monomial(mono)
                vec: List[Fraction] = []
                for entry in row:
                    vec.extend((f * entry).coeff_vector())
                columns.append(vec)
        self.relation_matrix = ExactMatrix.from_columns(columns, rows=self.ambient_dim)
        rel_rows, rel_pivots = rref(self.relation_matrix.transpose())
        assert len(rel_rows) == len(columns), "defining relations must be independent"
        self._rel_echelon = rel_rows
        self._rel_pivots = rel_pivots
        self.free_positions = [
            i for i in range(self.ambient_dim) if i not in set(rel_pivots)
        ]
        self.dim = len(self.free_positions)
        assert self.dim == h0_bundle(bundle), "rank-computed dimension must match"

    # -- ambient packing ------------------------------------------------

    def ambient_vector(self, components: Sequence[HomPoly]) -> Vector:
        vec: List[Fraction] = []
        for comp, d in zip(components, self.ambient_degrees):
            if comp.degree != d:
                raise ValueError("component degree mismatch")
            vec.extend(comp.coeff_vector())
        return tuple(vec)

    def components(self, vec: Sequence[Fraction]) -> Tuple[HomPoly, ...]:
        out = []
        for off, d in zip(self.block_offsets, self.ambient_degrees):
            out.append(HomPoly.from_coeff_vector(d, vec[off : off + h0_p2(d)]))
        return tuple(out)

    # -- quotient structure ----------------------------------------------

    def reduce(self, vec: Sequence[Fraction]) -> Vector:
        """Coordinates of the class of an ambient vector, canonical and
        idempotent; the relation span reduces to zero."""
        work = [Fraction(e) for e in vec]
        if len(work) != self.ambient_dim:
            raise ValueError("ambient vector has wrong length")
        for row, piv in zip(self._rel_echelon, self._rel_pivots):
            f = work[piv]
            if f != 0:
                for j in range(piv, self.ambient_dim):
                    work[j] -= f * row[j]
        return tuple(work[i] for i in self.free_positions)

    def embed(self, coords: Sequence[Fraction]) -> Vector:
        """Canonical ambient representative with the given coordinates."""
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has wrong length")
        vec = [Fraction(0)] * self.ambient_dim
        for pos, c in zip(self.free_positions, coords):
            vec[pos] = Fraction(c)
        return tuple(vec)

    def reduce_section(self, sec: Section) -> Vector:
        return self.reduce(self.ambient_vector(sec.components))


@lru_cache(maxsize=None)
def section_space(bundle: BundleSpec) -> SectionSpace:
    return SectionSpace(bundle)


@dataclass(frozen=True)
class SectionQuotient:
    """H0(bundle) / <v1, v2> with canonical lifts of a quotient basis."""

    space: SectionSpace
    v_coords: Tuple[Vector, Vector]
    lifts: Tuple[Section, ...]

    @property
    def dim(self) -> int:
        return len(self.lifts)


def quotient_by_pair(space: SectionSpace, v1: Section, v2: Section) -> SectionQuotient:
    w1 = space.reduce_section(v1)
    w2 = space.reduce_section(v2)
    rows, pivots = rref(ExactMatrix([w1, w2]))
    if len(rows) != 2:
        raise GpliError("the two sections do not span a two-dimensional subspace")
    pivot_set = set(pivots)
    lifts = []
    for q in range(space.dim):
        if q in pivot_set:
            continue
        coords = [Fraction(0)] * space.dim
        coords[q] = Fraction(1)
        ambient = space.embed(coords)
        lifts.append(Section(space.bundle, space.components(ambient)))
    return SectionQuotient(space=space, v_coords=(w1, w2), lifts=tuple(lifts))


def tangent_column(v1: Section, v2: Section, lift: Section, slot: int) -> HomPoly:
    """Value of the derivative on phi: v_slot -> lift (zero on the other)."""
    if slot == 1:
        return -wedge_curve(v2, lift)
    if slot == 2:
        return wedge_curve(v1, lift)
    raise ValueError("slot must be 1 or 2")


@dataclass(frozen=True)
class TangentReport:
    bundle: BundleSpec
    matrix: ExactMatrix
    hom_dim: int
    curve: HomPoly
    target_dim: int
    augmented_rank: int
    surjective: bool


def tangent_map(bundle: BundleSpec, v1: Section, v2: Section) -> TangentReport:
    """Derivative of the degeneracy-curve map at (v1, v2), with verdict.

    Works for the two rank-2 families (degeneracy curves of section pairs).
    Raises GpliError when the pair has identically dependent values, i.e.
    when its wedge curve vanishes.
    """
    if bundle.family not in ("N", "T"):
        raise ValueError("tangent map is defined for the rank-2 families N and T")
    if v1.bundle != bundle or v2.bundle != bundle:
        raise ValueError("sections do not live on the stated bundle")
    curve = wedge_curve(v1, v2)
    if curve.is_zero():
        raise GpliError("sections are generically dependent; no curve is cut")
    space = section_space(bundle)
    quot = quotient_by_pair(space, v1, v2)
    degree = det_degree(bundle)
    columns: List[Vector] = []
    for slot in (1, 2):
        for lift in quot.lifts:
            value = tangent_column(v1, v2, lift, slot)
            columns.append(value.coeff_vector())
    matrix = ExactMatrix.from_columns(columns, rows=h0_p2(degree))
    augmented = matrix.augment_column(curve.coeff_vector())
    aug_rank = rank(augmented)
    return TangentReport(
        bundle=bundle,
        matrix=matrix,
        hom_dim=len(columns),
        curve=curve,
        target_dim=h0_p2(degree) - 1,
        augmented_rank=aug_rank,
        surjective=aug_rank == h0_p2(degree),
    )


def smoothness_check(F: HomPoly, k_max: int | None = None) -> bool:
    """Certify smoothness of the curve F = 0 via its partial derivatives.

    True means the three partials have no common projective zero: some
    degree-d graded piece of the ideal they generate is the full space of
    degree-d forms, for d up to k_max.  False only means the search did not
    certify within k_max, never that the curve is singular.
    """
    if F.is_zero() or F.degree < 1:
        return False
    partials = [F.derivative(v) for v in range(3)]
    if all(p.is_zero() for p in partials):
        return False
    if k_max is None:
        k_max = max(1, 3 * F.degree - 5)
    e = F.degree - 1
    for d in range(1, k_max + 1):
        columns = []
        for g in partials:
            if g.is_zero() or d < e:
                continue
            for mono in mono_basis(d - e):
                columns.append((HomPoly.monomial(mono) * g).coeff_vector())
        if not columns:
            continue
        matrix = ExactMatrix.from_columns(columns, rows=h0_p2(d))
        if rank(matrix) == h0_p2(d):
            return True
    return False
