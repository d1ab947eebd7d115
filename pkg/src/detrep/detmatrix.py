"""Determinantal representations: polynomial matrices and degeneracy curves.

A plane curve of degree d is represented by a square matrix of homogeneous
forms whose determinant is the curve's equation.  The matrices built here
stack section rows of a rank-d bundle on top of the relation rows of the
bundle's defining sequence; the determinant is then the degeneracy locus of
those sections (the locus where they fail to stay pointwise independent).

Entry degrees must form a consistent pattern: every generalized diagonal has
to carry the same total degree, equivalently deg[i][j] decomposes as
row_i + col_j.  That is exactly the condition making fraction-free
elimination degree-safe, and it is checked at construction time.

Determinants are computed twice over: cofactor expansion up to 4x4 and
fraction-free (Bareiss) elimination over the polynomial ring beyond, with the
two engines agreeing wherever both run (a tested invariant).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .bundles import (
    BundleSpec,
    ambient_degrees,
    bundle_rank,
    det_degree,
    relation_rows,
)
from .linalg import ExactMatrix, rank
from .polynomials import HomPoly, ParseError, divide_exact, parse_hompoly


class GpliError(ValueError):
    """Sections that fail generic pointwise linear independence."""


class PolyMatrix:
    """Square matrix of HomPoly entries with a consistent degree pattern."""

    __slots__ = ("size", "entries")

    def __init__(self, entries: Sequence[Sequence[HomPoly]]):
        rows = tuple(tuple(row) for row in entries)
        size = len(rows)
        if size == 0:
            raise ValueError("empty matrix")
        for row in rows:
            if len(row) != size:
                raise ValueError("matrix must be square")
            for e in row:
                if not isinstance(e, HomPoly):
                    raise TypeError("entries must be HomPoly")
        deg = [[e.degree for e in row] for row in rows]
        # Constant generalized-diagonal degree == rank-1 additive pattern.
        for i in range(size):
            for j in range(size):
                if deg[i][j] + deg[0][0] != deg[i][0] + deg[0][j]:
                    raise ValueError(
                        "inconsistent degree pattern: "
                        f"entry ({i},{j}) of degree {deg[i][j]} breaks the "
                        f"row/column decomposition"
                    )
        self.size = size
        self.entries = rows

    @property
    def degree_pattern(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(e.degree for e in row) for row in self.entries)

    @property
    def det_deg(self) -> int:
        return sum(self.entries[i][i].degree for i in range(self.size))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"PolyMatrix({self.size}x{self.size}, det degree {self.det_deg})"


def _det_cofactor(entries, expected_degree: int) -> HomPoly:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    acc = HomPoly.zero(expected_degree)
    for j, top in enumerate(entries[0]):
        if top.is_zero():
            continue
        minor = [
            [entries[i][jj] for jj in range(n) if jj != j] for i in range(1, n)
        ]
        sub = _det_cofactor(minor, expected_degree - top.degree)
        term = top * sub
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def _det_eliminate(entries, expected_degree: int) -> HomPoly:
    """Fraction-free elimination over the polynomial ring.

    Every division is exact by the Bareiss identity (entries stay minors of
    the original matrix), which the degree pattern guarantees is degree-safe.
    """
    n = len(entries)
    work = [list(row) for row in entries]
    sign = 1
    prev = HomPoly.monomial((0, 0, 0), 1)
    for k in range(n - 1):
        piv_row = None
        for i in range(k, n):
            if not work[i][k].is_zero():
                piv_row = i
                break
        if piv_row is None:
            return HomPoly.zero(expected_degree)
        if piv_row != k:
            work[k], work[piv_row] = work[piv_row], work[k]
            sign = -sign
        piv = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = divide_exact(num, prev)
        prev = piv
    result = work[n - 1][n - 1]
    return result if sign == 1 else -result


def det_poly(M: PolyMatrix) -> HomPoly:
    """Determinant; cofactor expansion up to 4x4, elimination beyond."""
    if M.size <= 4:
        return _det_cofactor(M.entries, M.det_deg)
    return _det_eliminate(M.entries, M.det_deg)


# ---------------------------------------------------------------------------
# Sections and degeneracy curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Section:
    """A global section presented by its tuple of ambient components."""

    bundle: BundleSpec
    components: Tuple[HomPoly, ...]

    def __post_init__(self):
        expected = ambient_degrees(self.bundle)
        if len(self.components) != len(expected):
            raise ValueError(
                f"{self.bundle.label()} sections have {len(expected)} components, "
                f"got {len(self.components)}"
            )
        for comp, deg in zip(self.components, expected):
            if comp.degree != deg:
                raise ValueError(
                    f"component of degree {comp.degree} where {deg} is required"
                )


def section(bundle: BundleSpec, components: Sequence[HomPoly]) -> Section:
    return Section(bundle, tuple(components))


def degeneracy_matrix(sections: Sequence[Section]) -> PolyMatrix:
    """Section rows stacked over the bundle's relation rows."""
    if not sections:
        raise ValueError("no sections given")
    bundle = sections[0].bundle
    for s in sections:
        if s.bundle != bundle:
            raise ValueError("sections live on different bundles")
    need = bundle_rank(bundle)
    if len(sections) != need:
        raise ValueError(
            f"{bundle.label()} needs exactly {need} section rows, got {len(sections)}"
        )
    rows = [list(s.components) for s in sections]
    rows.extend(list(r) for r in relation_rows(bundle))
    return PolyMatrix(rows)


def wedge_curve(*sections: Section) -> HomPoly:
    """Equation of the degeneracy locus of the given sections.

    The result is homogeneous of the determinant degree of the bundle;
    it is identically zero exactly when the sections fail to be generically
    pointwise independent.
    """
    M = degeneracy_matrix(sections)
    curve = det_poly(M)
    bundle = sections[0].bundle
    assert curve.degree == det_degree(bundle)
    return curve


def is_gpli(*sections: Section) -> bool:
    """Generic pointwise linear independence of the sections."""
    return not wedge_curve(*sections).is_zero()


def relation_shift(bundle: BundleSpec, f: HomPoly, row_index: int = 0) -> Tuple[HomPoly, ...]:
    """The ambient tuple obtained by feeding f through one defining relation.

    These tuples span exactly the ambient representatives of zero, so adding
    one to any section never moves its class (or any wedge against it).
    """
    from .bundles import relation_source_degrees

    rows = relation_rows(bundle)
    src = relation_source_degrees(bundle)[row_index]
    if f.degree != src:
        raise ValueError(f"shift multiplier must have degree {src}, got {f.degree}")
    return tuple(f * e for e in rows[row_index])


def shifted(sec: Section, f: HomPoly, row_index: int = 0) -> Section:
    """The same section class presented by a relation-shifted ambient tuple."""
    shift = relation_shift(sec.bundle, f, row_index)
    return Section(sec.bundle, tuple(c + s for c, s in zip(sec.components, shift)))


def gpli_sample_check(
    sections: Sequence[Section], rng: random.Random, trials: int = 40
) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """Search for a point witnessing pointwise independence of the sections.

    Evaluates the degeneracy matrix at random integer points and tests it for
    full rank.  A returned point is a proof of independence there (hence of
    the generic verdict); None proves nothing and is only used to cross-check
    the polynomial test on known-degenerate inputs.
    """
    M = degeneracy_matrix(sections)
    for _ in range(trials):
        point = tuple(Fraction(rng.randint(-20, 20)) for _ in range(3))
        if all(c == 0 for c in point):
            continue
        numeric = ExactMatrix(
            [[e.evaluate(point) for e in row] for row in M.entries]
        )
        if rank(numeric) == M.size:
            return point
    return None


# ---------------------------------------------------------------------------
# Column reduction to the normalized last row (x, y, z^2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of normalizing a last row (l, m, Q) to (x, y, z^2).

    The new determinant equals (1/scale) times the substitution pullback of
    the old one: coordinates were changed by ``substitution`` (the matrix S
    with l o S = x, m o S = y), polynomial multiples of the first two columns
    were folded into the third (``col_op_a``, ``col_op_b``), and the third
    column was divided by ``scale``.
    """

    matrix: "PolyMatrix"
    substitution: Tuple[Tuple[Fraction, ...], ...]
    col_op_a: HomPoly
    col_op_b: HomPoly
    scale: Fraction


def _inverse3(rows: List[List[Fraction]]) -> List[List[Fraction]]:
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise ValueError("singular matrix")
    adj = [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]
    return [[x / det for x in row] for row in adj]


def column_reduce_normalize(M: PolyMatrix) -> ReductionResult:
    """Bring a 3x3 matrix with last row (l, m, Q) to last row (x, y, z^2).

    l and m must be independent linear forms and the quadric Q must lie
    outside the ideal (l, m); both conditions are tested exactly and
    violations raise ValueError.
    """
    if M.size != 3:
        raise ValueError("normalization applies to 3x3 matrices")
    last = M.entries[2]
    if [e.degree for e in last] != [1, 1, 2]:
        raise ValueError("last row must have degrees (1, 1, 2)")
    l, m, q = last
    lc = l.coeff_vector()
    mc = m.coeff_vector()
    if rank(ExactMatrix([lc, mc])) != 2:
        raise ValueError("the two linear forms are dependent")
    # Deterministic completion of (l, m) to a coordinate frame.
    frame = None
    for t in range(3):
        unit = [Fraction(1 if j == t else 0) for j in range(3)]
        candidate = [list(lc), list(mc), unit]
        try:
            frame = _inverse3(candidate)
            break
        except ValueError:
            continue
    assert frame is not None
    images = [
        HomPoly(1, {(1, 0, 0): frame[i][0], (0, 1, 0): frame[i][1], (0, 0, 1): frame[i][2]})
        for i in range(3)
    ]
    moved = [[e.compose_linear(images) for e in row] for row in M.entries]
    q2 = moved[2][2]
    # Split Q = x*A + y*B + scale*z^2 monomial by monomial.
    a_terms, b_terms = {}, {}
    scale = Fraction(0)
    for (ea, eb, ec), coeff in q2.terms.items():
        if ea >= 1:
            a_terms[(ea - 1, eb, ec)] = coeff
        elif eb >= 1:
            b_terms[(ea, eb - 1, ec)] = coeff
        else:
            scale = coeff
    if scale == 0:
        raise ValueError("quadric lies in the ideal of the two linear forms")
    col_a = HomPoly(1, a_terms)
    col_b = HomPoly(1, b_terms)
    reduced = []
    for row in moved:
        e1, e2, e3 = row
        reduced.append([e1, e2, (e3 - col_a * e1 - col_b * e2).scale(1 / scale)])
    out = PolyMatrix(reduced)
    want = [e.degree for e in out.entries[2]]
    assert want == [1, 1, 2]
    assert out.entries[2][0] == HomPoly.monomial((1, 0, 0))
    assert out.entries[2][1] == HomPoly.monomial((0, 1, 0))
    assert out.entries[2][2] == HomPoly.monomial((0, 0, 2))
    return ReductionResult(
        matrix=out,
        substitution=tuple(tuple(r) for r in frame),
        col_op_a=col_a,
        col_op_b=col_b,
        scale=scale,
    )


# ---------------------------------------------------------------------------
# Matrix text format: a degree-pattern header, then one row per line with
# ';'-separated entries in the polynomial grammar.
# ---------------------------------------------------------------------------


def write_poly_matrix(M: PolyMatrix) -> str:
    header = "degrees: " + "; ".join(
        ",".join(str(d) for d in row) for row in M.degree_pattern
    )
    lines = [header]
    for row in M.entries:
        lines.append("; ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


def read_poly_matrix(text: str) -> PolyMatrix:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty matrix text")
    header = lines[0]
    if not header.startswith("degrees:"):
        raise ParseError("matrix text must start with a 'degrees:' header")
    pattern = []
    for chunk in header[len("degrees:") :].split(";"):
        row = [int(p) for p in chunk.strip().split(",") if p.strip()]
        if row:
            pattern.append(row)
    size = len(pattern)
    if size == 0 or any(len(r) != size for r in pattern):
        raise ParseError("degree pattern must be square")
    if len(lines) - 1 != size:
        raise ParseError(f"expected {size} matrix rows, found {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:]):
        parts = line.split(";")
        if len(parts) != size:
            raise ParseError(f"row {i} has {len(parts)} entries, expected {size}")
        rows.append(
            [parse_hompoly(p.strip(), degree=pattern[i][j]) for j, p in enumerate(parts)]
        )
    return PolyMatrix(rows)
