"""Dense multidimensional matrices over exact rational scalars.

A multidimensional matrix is an element of V_0 x ... x V_p stored as a flat
row-major array indexed by (i_0, ..., i_p).  Axis 0 plays the distinguished
role throughout the package: a matrix is *degenerate* when some nonzero
vectors v_1, ..., v_p attached to the inner axes contract it to the zero
vector of V_0.

Scalars are plain Python ints or ``fractions.Fraction`` (reduced, positive
denominator), so every identity in this package is decided exactly.  Floats
are rejected everywhere.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import prod
from typing import Sequence, Union

Scalar = Union[int, Fraction]

_SCALAR_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")


class ShapeError(ValueError):
    """Axis sizes or index shapes do not match."""


class NonBoundaryError(ValueError):
    """Operation requires a boundary-format matrix (k_0 = k_1 + ... + k_p)."""


def as_scalar(x) -> Scalar:
    """Coerce to a canonical exact scalar (int, or Fraction in lowest terms).

    Floats are refused: exactness is the whole point of this library.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"expected an exact scalar (int or Fraction), got {type(x).__name__}")


def parse_scalar(s: str) -> Scalar:
    """Parse an exact decimal integer or "p/q" fraction string."""
    if not isinstance(s, str) or not _SCALAR_RE.match(s.strip()):
        raise ValueError(f"not an exact number: {s!r}")
    return as_scalar(Fraction(s.strip()))


def scalar_str(x: Scalar) -> str:
    """Canonical string form: "n" for integers, "p/q" otherwise."""
    x = as_scalar(x)
    return str(x)


class Format:
    """Dimension vector (k_0+1, ..., k_p+1) of a multidimensional matrix.

    Requires p >= 1 and every axis size >= 1.  ``m_sequence`` returns the
    partial sums m_j = k_1 + ... + k_{j-1} (m_1 = 0) that grade the symmetric
    powers in the natural map attached to a boundary-format matrix.
    """

    __slots__ = ("dims",)

    def __init__(self, dims: Sequence[int]):
        dims = tuple(dims)
        if len(dims) < 2:
            raise ShapeError(f"need at least two axes, got dims={dims}")
        if any(not isinstance(d, int) or isinstance(d, bool) or d < 1 for d in dims):
            raise ShapeError(f"axis sizes must be positive integers, got dims={dims}")
        object.__setattr__(self, "dims", dims)

    def __setattr__(self, name, value):
        raise AttributeError("Format is immutable")

    @property
    def p(self) -> int:
        return len(self.dims) - 1

    @property
    def ks(self) -> tuple[int, ...]:
        """(k_0, ..., k_p) with k_i = dims[i] - 1."""
        return tuple(d - 1 for d in self.dims)

    @property
    def size(self) -> int:
        return prod(self.dims)

    def is_boundary_format(self) -> bool:
        ks = self.ks
        return ks[0] == sum(ks[1:])

    def m_sequence(self) -> tuple[int, ...]:
        """(m_1, ..., m_p) with m_j = k_1 + ... + k_{j-1}."""
        ks = self.ks
        out = []
        acc = 0
        for j in range(1, self.p + 1):
            out.append(acc)
            acc += ks[j]
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, Format) and self.dims == other.dims

    def __hash__(self):
        return hash(self.dims)

    def __repr__(self):
        return f"Format({self.dims})"


def _strides(dims: tuple[int, ...]) -> tuple[int, ...]:
    out = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        out[i] = out[i + 1] * dims[i + 1]
    return tuple(out)


class MultiMatrix:
    """Immutable dense array of exact scalars with a Format.

    Entries are stored row-major: index (i_0, ..., i_p) maps to flat position
    sum_j i_j * stride_j with the last axis fastest.
    """

    __slots__ = ("format", "entries", "_strides")

    def __init__(self, format: Format, entries: Sequence[Scalar]):
        entries = tuple(as_scalar(e) for e in entries)
        if len(entries) != format.size:
            raise ShapeError(
                f"entry count mismatch for dims {format.dims}: "
                f"expected {format.size}, got {len(entries)}"
            )
        object.__setattr__(self, "format", format)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_strides", _strides(format.dims))

    def __setattr__(self, name, value):
        raise AttributeError("MultiMatrix is immutable")

    @classmethod
    def zeros(cls, format: Format) -> "MultiMatrix":
        return cls(format, (0,) * format.size)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.format.dims

    @property
    def size(self) -> int:
        return len(self.entries)

    def flat_index(self, idx: Sequence[int]) -> int:
        dims = self.dims
        if len(idx) != len(dims):
            raise ShapeError(f"index {tuple(idx)} has {len(idx)} axes, format has {len(dims)}")
        f = 0
        for axis, (i, d, s) in enumerate(zip(idx, dims, self._strides)):
            if not 0 <= i < d:
                raise ShapeError(f"index {i} out of range on axis {axis} (size {d})")
            f += i * s
        return f

    def get(self, idx: Sequence[int]) -> Scalar:
        return self.entries[self.flat_index(idx)]

    def __add__(self, other: "MultiMatrix") -> "MultiMatrix":
        if not isinstance(other, MultiMatrix):
            return NotImplemented
        if self.format != other.format:
            raise ShapeError(f"cannot add formats {self.dims} and {other.dims}")
        return MultiMatrix(self.format, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __eq__(self, other):
        return (
            isinstance(other, MultiMatrix)
            and self.format == other.format
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.format, self.entries))

    def __repr__(self):
        return f"MultiMatrix(dims={self.dims}, entries={self.entries!r})"


def from_entries(format: Format, entries: Sequence[Scalar]) -> MultiMatrix:
    """Build a MultiMatrix from a flat row-major entry list."""
    return MultiMatrix(format, entries)


def identity_matrix(n: int) -> tuple[tuple[Scalar, ...], ...]:
    """n x n identity as nested tuples (usable as an axis map)."""
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def convolve(A: MultiMatrix, B: MultiMatrix, r: int | None = None, s: int = 0) -> MultiMatrix:
    """Convolution product contracting axis r of A against axis s of B.

    The default (r, s) = (p, 0) realizes

        c_{i_0..i_{p-1}, j_1..j_q} = sum_h a_{i_0..i_{p-1}, h} * b_{h, j_1..j_q},

    the multidimensional generalization of the matrix product.  General (r, s)
    is reduced to the default by moving axis r of A last and axis s of B
    first; the result keeps the surviving A axes (in order) followed by the
    surviving B axes (in order).
    """
    pa, pb = A.format.p, B.format.p
    if r is None:
        r = pa
    if not 0 <= r <= pa:
        raise ShapeError(f"axis r={r} out of range for dims {A.dims}")
    if not 0 <= s <= pb:
        raise ShapeError(f"axis s={s} out of range for dims {B.dims}")
    if A.dims[r] != B.dims[s]:
        raise ShapeError(
            f"contracted axes differ: A axis {r} has size {A.dims[r]}, "
            f"B axis {s} has size {B.dims[s]}"
        )
    if r != pa:
        A = permute_axes(A, tuple(i for i in range(pa + 1) if i != r) + (r,))
    if s != 0:
        B = permute_axes(B, (s,) + tuple(i for i in range(pb + 1) if i != s))

    d = A.dims[-1]
    outer = A.size // d
    inner = B.size // d
    ae, be = A.entries, B.entries
    out = []
    for u in range(outer):
        base = u * d
        for v in range(inner):
            out.append(sum(ae[base + h] * be[h * inner + v] for h in range(d)))
    fmt = Format(A.dims[:-1] + B.dims[1:])
    return MultiMatrix(fmt, out)


def _inner_weights(A: MultiMatrix, vectors: Sequence[Sequence[Scalar]]) -> list[Scalar]:
    # Row-major outer product v_1 (x) ... (x) v_p over the inner axes.
    dims = A.dims
    if len(vectors) != A.format.p:
        raise ShapeError(f"need {A.format.p} vectors for dims {dims}, got {len(vectors)}")
    weights = [1]
    for j, v in enumerate(vectors, start=1):
        if len(v) != dims[j]:
            raise ShapeError(f"vector for axis {j} has length {len(v)}, axis size {dims[j]}")
        weights = [w * as_scalar(c) for w in weights for c in v]
    return weights


def contract_with_vectors(A: MultiMatrix, vectors: Sequence[Sequence[Scalar]]) -> tuple[Scalar, ...]:
    """Image A(v_1 (x) ... (x) v_p) in V_0.

    Component i_0 of the result is sum over the inner indices of
    a_{i_0, i_1..i_p} * v_1[i_1] * ... * v_p[i_p].
    """
    weights = _inner_weights(A, vectors)
    inner = len(weights)
    e = A.entries
    return tuple(
        sum(e[i0 * inner + t] * weights[t] for t in range(inner))
        for i0 in range(A.dims[0])
    )


def is_degeneracy_witness(A: MultiMatrix, vectors: Sequence[Sequence[Scalar]]) -> bool:
    """True iff every v_j is nonzero and A(v_1 (x) ... (x) v_p) = 0.

    Such a tuple certifies that A is degenerate.
    """
    image = contract_with_vectors(A, vectors)
    if any(not any(as_scalar(c) for c in v) for v in vectors):
        return False
    return not any(image)


def apply_axis_map(A: MultiMatrix, axis: int, g: Sequence[Sequence[Scalar]]) -> MultiMatrix:
    """Act with the square matrix g on one tensor slot.

    New entry at i_axis = i is sum_t g[i][t] * (old entry at i_axis = t);
    all other indices are untouched.  Realizes the GL(V_axis) action.
    """
    dims = A.dims
    if not 0 <= axis < len(dims):
        raise ShapeError(f"axis {axis} out of range for dims {dims}")
    d = dims[axis]
    rows = [tuple(as_scalar(x) for x in row) for row in g]
    if len(rows) != d or any(len(row) != d for row in rows):
        raise ShapeError(f"axis map must be {d}x{d} for axis {axis} of dims {dims}")
    stride = A._strides[axis]
    e = A.entries
    out = list(e)
    for base in range(0, A.size, d * stride):
        for off in range(stride):
            old = [e[base + t * stride + off] for t in range(d)]
            for i in range(d):
                out[base + i * stride + off] = sum(rows[i][t] * old[t] for t in range(d))
    return MultiMatrix(A.format, out)


def permute_axes(A: MultiMatrix, sigma: Sequence[int]) -> MultiMatrix:
    """Transport entries along an axis permutation.

    sigma lists, for each new axis position j, the old axis sigma[j]; the
    result has dims[j] = A.dims[sigma[j]] and entry (idx) equal to the old
    entry at the correspondingly shuffled index.
    """
    sigma = tuple(sigma)
    n = len(A.dims)
    if sorted(sigma) != list(range(n)):
        raise ShapeError(f"{sigma} is not a permutation of axes 0..{n - 1}")
    new_dims = tuple(A.dims[a] for a in sigma)
    old_strides = A._strides
    e = A.entries
    out = []
    for idx in itertools.product(*[range(d) for d in new_dims]):
        out.append(e[sum(idx[j] * old_strides[sigma[j]] for j in range(n))])
    return MultiMatrix(Format(new_dims), out)


def scale(A: MultiMatrix, t: Scalar) -> MultiMatrix:
    """Multiply every entry by t."""
    t = as_scalar(t)
    return MultiMatrix(A.format, tuple(t * e for e in A.entries))
