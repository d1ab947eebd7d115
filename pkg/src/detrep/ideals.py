"""The multiplication-map side of the surjectivity story.

A pair of ambient triples (f, g) of degree n+1 determines six forms of
degree n+2 (the 2x2 minors of each triple against the coordinate row):

    f1*y - f2*x,  f1*z - f3*x,  f2*z - f3*y,  and the same for g.

These six forms span the space U.  Multiplying U by all forms of degree n+1
lands in degree 2n+3, and the image of that multiplication map coincides with
the image of the tangent map of the degeneracy construction at (f, g), after
restriction to the curve.  Both verdicts are computed independently here and
compared (``diagram_crosscheck``).

The same graded machinery decides ideal containment: the power of the
irrelevant maximal ideal sits inside the ideal generated by given forms as
soon as one graded piece fills up, and filling is monotone upward (checked,
not assumed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .bundles import T
from .detmatrix import Section, is_gpli
from .linalg import ExactMatrix, LinearMapReport, rank, report
from .polynomials import HomPoly, X, Y, Z, h0_p2, mono_basis
from .tangent import tangent_map

Triple = Tuple[HomPoly, HomPoly, HomPoly]


def _triple(obj: Union[Section, Sequence[HomPoly]]) -> Triple:
    comps = obj.components if isinstance(obj, Section) else tuple(obj)
    if len(comps) != 3:
        raise ValueError("need exactly three components")
    d = comps[0].degree
    for c in comps:
        if c.degree != d:
            raise ValueError("components must share one degree")
    return comps  # type: ignore[return-value]


@dataclass(frozen=True)
class USpace:
    """The six minor forms of a pair, with their provenance."""

    n: int
    generators: Tuple[HomPoly, ...]
    f: Triple
    g: Triple


def u_generators(
    f: Union[Section, Sequence[HomPoly]],
    g: Union[Section, Sequence[HomPoly]],
    n: Optional[int] = None,
) -> USpace:
    """The six degree-(n+2) minors of two degree-(n+1) triples."""
    ft = _triple(f)
    gt = _triple(g)
    inferred = ft[0].degree - 1
    if gt[0].degree != inferred + 1:
        raise ValueError("the two triples must share one degree")
    if n is not None and n != inferred:
        raise ValueError(f"declared n={n} but triples have degree {inferred + 1}")
    if inferred < -1:
        raise ValueError("triple degree must be at least 0")
    gens = []
    for t1, t2, t3 in (ft, gt):
        gens.append(t1 * Y - t2 * X)
        gens.append(t1 * Z - t3 * X)
        gens.append(t2 * Z - t3 * Y)
    return USpace(n=inferred, generators=tuple(gens), f=ft, g=gt)


def mult_map_matrix(u: USpace) -> ExactMatrix:
    """Matrix of multiplication H0(O(n+1)) (x) U -> H0(O(2n+3)).

    Columns run over (generator, monomial) pairs in that nesting order;
    rows over the degree-(2n+3) monomial basis.
    """
    n = u.n
    columns = []
    for gen in u.generators:
        for mono in mono_basis(n + 1):
            columns.append((HomPoly.monomial(mono) * gen).coeff_vector())
    return ExactMatrix.from_columns(columns, rows=h0_p2(2 * n + 3))


def mult_map_report(u: USpace) -> LinearMapReport:
    return report(mult_map_matrix(u))


# ---------------------------------------------------------------------------
# Graded ideal ladders
# ---------------------------------------------------------------------------


def component_matrix(generators: Sequence[HomPoly], k: int) -> ExactMatrix:
    """Matrix whose column space is the degree-k piece of the ideal."""
    columns = []
    for gen in generators:
        if gen.is_zero() or gen.degree > k:
            continue
        for mono in mono_basis(k - gen.degree):
            columns.append((HomPoly.monomial(mono) * gen).coeff_vector())
    return ExactMatrix.from_columns(columns, rows=h0_p2(k))


def component_dim(generators: Sequence[HomPoly], k: int) -> int:
    return rank(component_matrix(generators, k))


@dataclass(frozen=True)
class LadderRow:
    k: int
    dim: int
    full: bool


@dataclass(frozen=True)
class ContainmentReport:
    """Smallest degree whose graded piece fills up, with the whole ladder.

    ``reached`` of k certifies that every form of degree >= k lies in the
    ideal (each degree-k monomial does, and higher degrees follow by
    multiplying); it is always double-checked at k+1.  None means the ladder
    stayed deficient through k_max, which certifies nothing beyond that.
    """

    reached: Optional[int]
    k_max: int
    ladder: Tuple[LadderRow, ...]


def containment_degree(generators: Sequence[HomPoly], k_max: int) -> ContainmentReport:
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    ladder: List[LadderRow] = []
    reached: Optional[int] = None
    for k in range(0, k_max + 1):
        dim = component_dim(generators, k)
        full = dim == h0_p2(k)
        ladder.append(LadderRow(k=k, dim=dim, full=full))
        if full:
            reached = k
            break
    if reached is not None:
        # Filling is monotone upward; verify rather than assume.
        nxt = reached + 1
        dim = component_dim(generators, nxt)
        full = dim == h0_p2(nxt)
        ladder.append(LadderRow(k=nxt, dim=dim, full=full))
        assert full, "a full graded piece must stay full one degree up"
    return ContainmentReport(reached=reached, k_max=k_max, ladder=tuple(ladder))


# ---------------------------------------------------------------------------
# Cross-checks between the two surjectivity computations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrosscheckReport:
    gpli: bool
    mult_surjective: bool
    tangent_surjective: bool
    agree: bool


def diagram_crosscheck(
    f: Union[Section, Sequence[HomPoly]],
    g: Union[Section, Sequence[HomPoly]],
    n: Optional[int] = None,
) -> CrosscheckReport:
    """Compare the multiplication-map verdict with the tangent-map verdict.

    The two must agree whenever the pair is generically independent; a
    degenerate pair cuts no curve, and both sides then count as
    non-surjective.
    """
    u = u_generators(f, g, n)
    bundle = T(u.n)
    s1 = Section(bundle, u.f)
    s2 = Section(bundle, u.g)
    mult_surj = mult_map_report(u).surjective
    if is_gpli(s1, s2):
        gpli = True
        tangent_surj = tangent_map(bundle, s1, s2).surjective
    else:
        gpli = False
        tangent_surj = False
    agree = mult_surj == tangent_surj if gpli else True
    return CrosscheckReport(
        gpli=gpli,
        mult_surjective=mult_surj,
        tangent_surjective=tangent_surj,
        agree=agree,
    )


@dataclass(frozen=True)
class DisjointnessReport:
    disjoint_certified: bool
    containment: ContainmentReport


def disjointness_check(
    f: Union[Section, Sequence[HomPoly]],
    g: Union[Section, Sequence[HomPoly]],
    k_max: Optional[int] = None,
) -> DisjointnessReport:
    """Certify that the two triples' degeneracy schemes share no point.

    The six minors cut the union of the two schemes' intersection loci; they
    have no common projective zero exactly when some power of the irrelevant
    ideal lies in the ideal they generate, which the containment ladder
    decides.  A ladder that never fills within k_max certifies nothing.
    """
    u = u_generators(f, g)
    if k_max is None:
        k_max = 4 * u.n + 8
    containment = containment_degree(u.generators, k_max)
    return DisjointnessReport(
        disjoint_certified=containment.reached is not None,
        containment=containment,
    )
