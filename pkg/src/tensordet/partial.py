"""Assembly of the natural map whose determinant is the hyperdeterminant.

For a boundary-format A the map sends

    e_{i_0}* (x) x^{a_1} (x) ... (x) x^{a_p}
        |-> sum over (i_1..i_p) of a_{i_0,i_1..i_p} (x_{i_1}x^{a_1}) (x) ... (x) (x_{i_p}x^{a_p})

where the j-th slot carries monomials of degree m_j = k_1 + ... + k_{j-1} on
the source side and m_j + 1 on the target side.  In the monomial bases every
matrix entry is therefore a single entry of A (or zero): entry[row, col] is
a_{i_0, i_1..i_p} exactly when each row monomial is the matching column
monomial times one extra variable x_{i_j}.

Bases are ordered with i_0 slowest, then each slot in lex-descending monomial
order; rows likewise.  With this convention the p = 1 case produces the
transpose of A, so the determinant reduces to the classical one with sign +1.
"""

from __future__ import annotations

import itertools

from .symalg import degree_N, enumerate_monomials
from .tensor import Format, MultiMatrix, NonBoundaryError, Scalar, ShapeError, scalar_str


class PartialMap:
    """Square matrix of the natural map with its labeled bases.

    row_basis[r] is the p-tuple of target monomials (degrees m_j + 1) and
    col_basis[c] the pair (i_0, p-tuple of source monomials of degrees m_j).
    """

    __slots__ = ("matrix", "row_basis", "col_basis", "source_format")

    def __init__(self, matrix, row_basis, col_basis, source_format: Format):
        self.matrix = tuple(tuple(row) for row in matrix)
        self.row_basis = tuple(row_basis)
        self.col_basis = tuple(col_basis)
        self.source_format = source_format
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ShapeError("natural-map matrix must be square")
        if len(self.row_basis) != n or len(self.col_basis) != n:
            raise ShapeError("basis labels must match the matrix size")

    @property
    def size(self) -> int:
        return len(self.matrix)


def _assemble(A: MultiMatrix, ms: tuple[int, ...]) -> PartialMap:
    """Fill the matrix for source monomial degrees ms = (m_1, ..., m_p)."""
    dims = A.dims
    p = A.format.p
    col_monos = [enumerate_monomials(dims[j + 1], ms[j]) for j in range(p)]
    row_monos = [enumerate_monomials(dims[j + 1], ms[j] + 1) for j in range(p)]
    row_pos = [{m: i for i, m in enumerate(monos)} for monos in row_monos]

    cols = [
        (i0, alphas)
        for i0 in range(dims[0])
        for alphas in itertools.product(*col_monos)
    ]
    n_rows = 1
    row_strides = [0] * p
    for j in range(p - 1, -1, -1):
        row_strides[j] = n_rows
        n_rows *= len(row_monos[j])
    if n_rows != len(cols):
        raise ShapeError(
            f"natural map is not square for dims {dims}: "
            f"{n_rows} rows vs {len(cols)} columns"
        )

    matrix = [[0] * len(cols) for _ in range(n_rows)]
    inner_ranges = [range(d) for d in dims[1:]]
    for ci, (i0, alphas) in enumerate(cols):
        base = i0 * A._strides[0]
        for idx in itertools.product(*inner_ranges):
            value = A.entries[base + sum(i * s for i, s in zip(idx, A._strides[1:]))]
            row = 0
            for j in range(p):
                bumped = list(alphas[j])
                bumped[idx[j]] += 1
                row += row_pos[j][tuple(bumped)] * row_strides[j]
            matrix[row][ci] = value

    rows = list(itertools.product(*row_monos))
    return PartialMap(matrix, rows, cols, A.format)


def build_partial(A: MultiMatrix) -> PartialMap:
    """Natural-map matrix of a boundary-format A; square of size degree_N."""
    n = degree_N(A.format)  # raises NonBoundaryError otherwise
    pm = _assemble(A, A.format.m_sequence())
    assert pm.size == n
    return pm


def build_generalized_partial(A: MultiMatrix, q: int, ks: list[int] | tuple[int, ...]) -> PartialMap:
    """Same construction for dims (q(k_0+1), q(k_1+1), k_2+1, ..., k_p+1).

    ks = (k_0, ..., k_p) must satisfy k_0 = k_1 + ... + k_p with every
    inner k_i >= 1; the degrees m_j are computed from ks, not from the axis
    sizes.  The map is still square, which this builder verifies, but for
    q > 1 its determinant is not claimed to detect degeneracy (the degenerate
    matrices then sit in codimension above one).
    """
    ks = tuple(ks)
    if q < 1:
        raise ShapeError(f"q must be a positive integer, got {q}")
    if len(ks) != len(A.dims):
        raise ShapeError(f"ks has {len(ks)} entries, dims {A.dims} need {len(A.dims)}")
    if any(k < 1 for k in ks[1:]):
        raise ShapeError(f"inner k_i must be >= 1, got ks={ks}")
    if ks[0] != sum(ks[1:]):
        raise ShapeError(f"ks={ks} violate k_0 = sum(k_1..k_p)")
    expected = (q * (ks[0] + 1), q * (ks[1] + 1)) + tuple(k + 1 for k in ks[2:])
    if A.dims != expected:
        raise ShapeError(f"dims {A.dims} do not match pattern {expected} for q={q}, ks={ks}")

    ms = []
    acc = 0
    for j in range(1, len(ks)):
        ms.append(acc)
        acc += ks[j]
    return _assemble(A, tuple(ms))


def _label(monos: tuple[tuple[int, ...], ...]) -> str:
    return " ".join("(" + ",".join(str(e) for e in m) + ")" for m in monos)


def dump_partial(P: PartialMap) -> str:
    """Deterministic text listing: size, basis labels, then one line per
    nonzero entry as "row_label | col_label | value"."""
    lines = [f"size {P.size}"]
    for i, monos in enumerate(P.row_basis):
        lines.append(f"row {i}: {_label(monos)}")
    for i, (i0, alphas) in enumerate(P.col_basis):
        lines.append(f"col {i}: {i0} {_label(alphas)}")
    for r, row in enumerate(P.matrix):
        rlab = _label(P.row_basis[r])
        for c, value in enumerate(row):
            if value:
                i0, alphas = P.col_basis[c]
                lines.append(f"{rlab} | {i0} {_label(alphas)} | {scalar_str(value)}")
    return "\n".join(lines) + "\n"
