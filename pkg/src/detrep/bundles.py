"""Bundle families on the projective plane: bookkeeping and dimension audits.

Four families of vector bundles are tracked, each presented by a short exact
sequence of the shape

    0 -> O(source)^s -> O(ambient_1) + ... + O(ambient_m) -> E -> 0

* ``T(n)``   rank 2, ambient O(n+1)^3, one relation row (x, y, z)
* ``N(n)``   rank 2, ambient O(n)^2 + O(n+1), one relation row (x, y, z^2)
* ``M_k(n)`` rank binom(k+2,2) - 1, ambient O(n)^m with m = binom(k+2,2),
             one relation row listing every degree-k monomial
* ``E_r(n)`` rank r, ambient O(n)^(r+2), two linear relation rows

Twisting by O(1) is heavily used, so every n-dependent quantity takes the
twist as part of the spec.  ``T`` admits n >= -1 (its degree-1 determinant
lives there); the other families require n >= 0.

Global-section dimensions follow from the sequences because the relevant
first cohomology vanishes on the plane; they are closed forms here and are
cross-checked against explicit relation-matrix ranks elsewhere in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .polynomials import HomPoly, X, Y, Z, h0_p2, mono_basis

FAMILIES = ("N", "T", "M", "E")


@dataclass(frozen=True)
class BundleSpec:
    """One member of one family: family letter, twist n, extra parameter.

    ``param`` is k for the M family, r for the E family, and None otherwise.
    """

    family: str
    n: int
    param: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "T":
            if self.n < -1:
                raise ValueError("T(n) needs n >= -1")
            if self.param is not None:
                raise ValueError("T takes no extra parameter")
        elif self.family == "N":
            if self.n < 0:
                raise ValueError("N(n) needs n >= 0")
            if self.param is not None:
                raise ValueError("N takes no extra parameter")
        elif self.family == "M":
            if self.param is None or self.param < 1:
                raise ValueError("M_k needs k >= 1")
            if self.n < 0:
                raise ValueError("M_k(n) needs n >= 0")
        else:
            if self.param is None or not 2 <= self.param <= 4:
                raise ValueError("E_r needs 2 <= r <= 4")
            if self.n < 0:
                raise ValueError("E_r(n) needs n >= 0")

    def twist(self, t: int) -> BundleSpec:
        return BundleSpec(self.family, self.n + t, self.param)

    def label(self) -> str:
        if self.family == "M":
            return f"M_{self.param}({self.n})"
        if self.family == "E":
            return f"E_{self.param}({self.n})"
        return f"{self.family}({self.n})"


def N(n: int) -> BundleSpec:
    return BundleSpec("N", n)


def T(n: int) -> BundleSpec:
    return BundleSpec("T", n)


def M(k: int, n: int) -> BundleSpec:
    return BundleSpec("M", n, k)


def E(r: int, n: int) -> BundleSpec:
    return BundleSpec("E", n, r)


def bundle_rank(spec: BundleSpec) -> int:
    if spec.family in ("N", "T"):
        return 2
    if spec.family == "M":
        return h0_p2(spec.param) - 1
    return spec.param


def det_degree(spec: BundleSpec) -> int:
    """Degree of the determinant line bundle, i.e. of the degeneracy curve."""
    n = spec.n
    if spec.family == "N":
        return 2 * n + 2
    if spec.family == "T":
        return 2 * n + 3
    if spec.family == "M":
        return (h0_p2(spec.param) - 1) * n + spec.param
    return spec.param * n + 2


def h0_bundle(spec: BundleSpec, t: int = 0) -> int:
    """Global-section dimension of the bundle twisted by O(t)."""
    n = spec.n + t
    if spec.family == "N":
        return 2 * h0_p2(n) + h0_p2(n + 1) - h0_p2(n - 1)
    if spec.family == "T":
        return 3 * h0_p2(n + 1) - h0_p2(n)
    if spec.family == "M":
        return h0_p2(spec.param) * h0_p2(n) - h0_p2(n - spec.param)
    return (spec.param + 2) * h0_p2(n) - 2 * h0_p2(n - 1)


def ambient_degrees(spec: BundleSpec) -> Tuple[int, ...]:
    """Degrees of the ambient line-bundle summands, in component order."""
    n = spec.n
    if spec.family == "N":
        return (n, n, n + 1)
    if spec.family == "T":
        return (n + 1, n + 1, n + 1)
    if spec.family == "M":
        return (n,) * h0_p2(spec.param)
    return (n,) * (spec.param + 2)


def relation_rows(spec: BundleSpec) -> Tuple[Tuple[HomPoly, ...], ...]:
    """Polynomial rows presenting the relations of the defining sequence.

    Row i, scaled by a form of degree ``relation_source_degrees()[i]``, lands
    in the ambient space; these rows also sit at the bottom of every
    degeneracy-locus determinant.
    """
    if spec.family == "N":
        return ((X, Y, Z * Z),)
    if spec.family == "T":
        return ((X, Y, Z),)
    if spec.family == "M":
        return (tuple(HomPoly.monomial(m) for m in mono_basis(spec.param)),)
    r = spec.param
    zero = HomPoly.zero(1)
    row1 = tuple([X, Y, Z] + [zero] * (r - 1))
    row2 = tuple([zero] * (r - 1) + [X, Y, Z])
    return (row1, row2)


def relation_source_degrees(spec: BundleSpec) -> Tuple[int, ...]:
    """Degree of the multiplier form feeding each relation row."""
    n = spec.n
    if spec.family == "N":
        return (n - 1,)
    if spec.family == "T":
        return (n,)
    if spec.family == "M":
        return (n - spec.param,)
    return (n - 1, n - 1)


@dataclass(frozen=True)
class AuditRow:
    m: int
    lhs: int
    rhs: int
    holds: bool


def inequality_audit(spec: BundleSpec, m_range: Sequence[int], g: int) -> List[AuditRow]:
    """Dimension-count rows lhs <= rhs at each extra twist m.

    lhs = h0(det E(m)) - 1 counts the curves cut by pairs of sections up to
    scale; rhs = d*(h0(E(m)) - d) + g counts section pairs modulo the
    automorphisms absorbed by g.  Both sides are exact integers.
    """
    d = bundle_rank(spec)
    rows = []
    for m in m_range:
        lhs = h0_p2(det_degree(spec.twist(m))) - 1
        rhs = d * (h0_bundle(spec, m) - d) + g
        rows.append(AuditRow(m=m, lhs=lhs, rhs=rhs, holds=lhs <= rhs))
    return rows


def linearity_onset(values: Sequence[int]) -> Optional[int]:
    """First index from which the sequence is exactly linear (by finite
    differences); None when no tail of length >= 3 is linear."""
    n = len(values)
    if n < 3:
        return None
    second = [values[i + 2] - 2 * values[i + 1] + values[i] for i in range(n - 2)]
    onset = len(second)
    while onset > 0 and second[onset - 1] == 0:
        onset -= 1
    return onset if onset <= len(second) - 1 else None


def select_E_d(d: int) -> BundleSpec:
    """The bundle whose pairs of sections cut degree-d curves.

    Even d comes from the N family, odd d from the T family; the defining
    property, asserted here, is det_degree == d.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if d % 2 == 0:
        spec = N(d // 2 - 1)
    else:
        spec = T((d - 3) // 2)
    assert det_degree(spec) == d
    return spec
