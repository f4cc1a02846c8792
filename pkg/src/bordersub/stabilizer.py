"""Lie algebra computations for gl(A) + gl(B) + gl(C) acting on tensors.

The derivative action is the Leibniz rule

    (x, y, z) . T = x.T + y.T + z.T     (each factor acting on its slot),

a linear map from the 3n^2-dimensional algebra to the n^3-dimensional
tensor space once T is fixed.  Everything below is exact linear algebra on
that map:

* the stabilizer of T is its kernel; for the unit tensor the kernel is the
  diagonal zero-sum algebra of dimension 2n (2n - 2 after dividing out the
  two-dimensional scalar kernel of the action);
* the stabilizer of the cone spanned by the unit tensor and the staircase
  space W is the kernel of "act lands inside <unit, W>", a condition made
  linear by quantifying over the generators {unit} + basis of W;
* tangent-space ranks at a sampled point unit + w, w generic in W, recover
  the dimension count (dim G) - (dim G_cone) + (dim cone) of the orbit of
  the cone, whose closed form is (2n^3 + 3n^2 - 2n - 3)/3.

Dimensions come in two conventions: the raw gl^3 level and the faithful
quotient (subtract 2 for the scalar pairs (a, b, -a-b) acting trivially).
Every function documents which one it returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionMismatchError, InternalError, InvalidValueError
from .linalg import LinearSubspace, kernel_int, rank_int
from .tensors import Support, Tensor3, build_W, sample_coefficients, unit_tensor

#: dimension of the scalar pairs acting trivially on every tensor
ACTION_KERNEL_DIM = 2


@dataclass(frozen=True)
class LieTriple:
    """An element (x, y, z) of gl_n^3, matrices over Q."""

    n: int
    x: tuple[tuple[Fraction, ...], ...]
    y: tuple[tuple[Fraction, ...], ...]
    z: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for name in ("x", "y", "z"):
            mat = tuple(tuple(Fraction(v) for v in row) for row in getattr(self, name))
            if len(mat) != self.n or any(len(row) != self.n for row in mat):
                raise InvalidValueError(f"{name} must be {self.n} x {self.n}")
            object.__setattr__(self, name, mat)

    @classmethod
    def zero(cls, n):
        z = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
        return cls(n, z, z, z)

    @classmethod
    def from_flat(cls, n, vec):
        """Inverse of flat(): vec lists x, y, z row-major."""
        if len(vec) != 3 * n * n:
            raise InvalidValueError("flat vector must have length 3n^2")
        mats = []
        for s in range(3):
            block = vec[s * n * n : (s + 1) * n * n]
            mats.append(tuple(tuple(Fraction(block[r * n + c]) for c in range(n)) for r in range(n)))
        return cls(n, *mats)

    def flat(self):
        out = []
        for mat in (self.x, self.y, self.z):
            for row in mat:
                out.extend(row)
        return out

    def __add__(self, other):
        if self.n != other.n:
            raise DimensionMismatchError(f"n={self.n} vs n={other.n}")
        add = lambda a, b: tuple(tuple(p + q for p, q in zip(ra, rb)) for ra, rb in zip(a, b))
        return LieTriple(self.n, add(self.x, other.x), add(self.y, other.y), add(self.z, other.z))

    def scale(self, c):
        c = Fraction(c)
        mul = lambda a: tuple(tuple(c * v for v in row) for row in a)
        return LieTriple(self.n, mul(self.x), mul(self.y), mul(self.z))


def act(lt: LieTriple, T: Tensor3) -> Tensor3:
    """Leibniz action of (x, y, z) on T, exact and linear in both slots."""
    if lt.n != T.n:
        raise DimensionMismatchError(f"algebra n={lt.n} vs tensor n={T.n}")
    n = lt.n
    out = {}

    def bump(key, val):
        if val:
            cur = out.get(key, Fraction(0)) + val
            if cur:
                out[key] = cur
            else:
                out.pop(key, None)

    for (i, j, k), c in T.entries.items():
        for p in range(1, n + 1):
            bump((p, j, k), lt.x[p - 1][i - 1] * c)
            bump((i, p, k), lt.y[p - 1][j - 1] * c)
            bump((i, j, p), lt.z[p - 1][k - 1] * c)
    return Tensor3(n, out)


def _unknown_index(n, slot, p, q):
    return slot * n * n + (p - 1) * n + (q - 1)


def _coord_index(n, t):
    i, j, k = t
    return (i - 1) * n * n + (j - 1) * n + (k - 1)


def _action_rows(T: Tensor3):
    """Rows of the linear map (x,y,z) -> act(x,y,z,T), one per coordinate
    that the action can reach, scaled to integers."""
    n = T.n
    rows = {}

    def row_at(coord):
        r = rows.get(coord)
        if r is None:
            r = [Fraction(0)] * (3 * n * n)
            rows[coord] = r
        return r

    for (i, j, k), c in T.entries.items():
        for p in range(1, n + 1):
            row_at((p, j, k))[_unknown_index(n, 0, p, i)] += c
            row_at((i, p, k))[_unknown_index(n, 1, p, j)] += c
            row_at((i, j, p))[_unknown_index(n, 2, p, k)] += c
    out = []
    for coord in sorted(rows):
        row = rows[coord]
        den = 1
        for v in row:
            den = lcm(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def stabilizer_dim(T: Tensor3) -> int:
    """dim of the full gl^3-level stabilizer algebra of T (kernel of the
    action map).  The faithful symmetry algebra has dimension
    stabilizer_dim - 2 whenever T != 0."""
    return 3 * T.n * T.n - rank_int(_action_rows(T))


def stabilizer_basis(T: Tensor3) -> list[LieTriple]:
    """Canonical primitive-integer basis of the stabilizer algebra."""
    vecs = kernel_int(_action_rows(T), 3 * T.n * T.n)
    return [LieTriple.from_flat(T.n, v) for v in vecs]


def orbit_dim_unit(n) -> int:
    """Dimension 3n^2 - 2n of the (affine) orbit of the unit tensor, i.e.
    of the set of all maximal subrank tensors."""
    return rank_int(_action_rows(unit_tensor(n)))


def _cone_generators(n):
    M = unit_tensor(n)
    W = build_W(n, "W")
    gens = [M] + [Tensor3(n, {t: Fraction(1)}) for t in W.sorted_triples()]
    span = LinearSubspace.from_vectors(
        [_flatten(g) for g in gens],
        n * n * n,
    )
    return M, W, gens, span


def _flatten(T: Tensor3):
    n = T.n
    vec = [Fraction(0)] * (n * n * n)
    for t, c in T.entries.items():
        vec[_coord_index(n, t)] = c
    return vec


def _symbolic_action(n, T: Tensor3):
    """coordinate -> {unknown: coefficient} for lt -> act(lt, T)."""
    cols = {}
    for (i, j, k), c in T.entries.items():
        for p in range(1, n + 1):
            for coord, unk in (
                ((p, j, k), _unknown_index(n, 0, p, i)),
                ((i, p, k), _unknown_index(n, 1, p, j)),
                ((i, j, p), _unknown_index(n, 2, p, k)),
            ):
                d = cols.setdefault(coord, {})
                d[unk] = d.get(unk, Fraction(0)) + c
    return cols


def _cone_condition_rows(n):
    """Integer rows over the 3n^2 unknowns expressing: act(lt, g) lies in
    the span of {unit tensor} + W-basis, for every generator g.

    Membership is encoded by reducing the symbolic image against the
    span's reduced echelon basis and equating every non-pivot residue
    coordinate to zero."""
    M, W, gens, span = _cone_generators(n)
    pivot_cols = span.pivot_cols
    pivot_pos = {c: r for r, c in enumerate(pivot_cols)}
    nn = n * n * n
    rows = []
    for g in gens:
        sym = _symbolic_action(n, g)
        sym_by_index = {_coord_index(n, t): d for t, d in sym.items()}
        for c in range(nn):
            if c in pivot_pos:
                continue
            # residue[c] = v[c] - sum_r basis_r[c] * v[pivot_r]
            form = dict(sym_by_index.get(c, {}))
            for r, pc in enumerate(pivot_cols):
                b = span.basis[r][c]
                if b:
                    for unk, coeff in sym_by_index.get(pc, {}).items():
                        form[unk] = form.get(unk, Fraction(0)) - b * coeff
            if not form:
                continue
            den = 1
            for v in form.values():
                den = lcm(den, v.denominator)
            row = [0] * (3 * n * n)
            nonzero = False
            for unk, coeff in form.items():
                val = int(coeff * den)
                row[unk] = val
                nonzero = nonzero or val != 0
            if nonzero:
                rows.append(row)
    return rows


def cone_stabilizer_dim(n) -> int:
    """Faithful-quotient dimension (3n^2 + n - 2)/2 of the algebra
    preserving the cone over the unit tensor and W; the gl^3-level kernel
    is two bigger."""
    return _cone_stabilizer_full_dim(n) - ACTION_KERNEL_DIM


def _cone_stabilizer_full_dim(n):
    return 3 * n * n - rank_int(_cone_condition_rows(n))


@dataclass(frozen=True)
class StructureReport:
    n: int
    dim_full: int
    dim_quotient: int
    basis: tuple[LieTriple, ...]
    triangular_ok: bool
    trace_ok: bool
    violations: tuple[str, ...]

    @property
    def passes(self):
        return self.triangular_ok and self.trace_ok

    def to_json(self):
        return {
            "n": self.n,
            "dim_full": self.dim_full,
            "dim_quotient": self.dim_quotient,
            "basis_size": len(self.basis),
            "triangular_ok": self.triangular_ok,
            "trace_ok": self.trace_ok,
            "violations": list(self.violations),
        }


def cone_stabilizer_structure(n) -> StructureReport:
    """Canonical basis of the cone stabilizer plus the structural checks:
    x lower-triangular, y and z upper-triangular, and the diagonal sums
    x_ss + y_ss + z_ss constant across s for every basis element."""
    rows = _cone_condition_rows(n)
    vecs = kernel_int(rows, 3 * n * n)
    basis = tuple(LieTriple.from_flat(n, v) for v in vecs)
    violations = []
    for b_idx, lt in enumerate(basis):
        for p in range(n):
            for q in range(n):
                if q > p and lt.x[p][q]:
                    violations.append(f"basis[{b_idx}]: x[{p+1}][{q+1}] nonzero above diagonal")
                if q < p and (lt.y[p][q] or lt.z[p][q]):
                    violations.append(f"basis[{b_idx}]: y/z[{p+1}][{q+1}] nonzero below diagonal")
        sums = {lt.x[s][s] + lt.y[s][s] + lt.z[s][s] for s in range(n)}
        if len(sums) > 1:
            violations.append(f"basis[{b_idx}]: diagonal sums not constant")
    triangular_ok = not any("above" in v or "below" in v for v in violations)
    trace_ok = not any("sums" in v for v in violations)
    return StructureReport(
        n=n,
        dim_full=len(basis),
        dim_quotient=len(basis) - ACTION_KERNEL_DIM,
        basis=basis,
        triangular_ok=triangular_ok,
        trace_ok=trace_ok,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class TangentReport:
    n: int
    value: int
    expected: int
    attempts: tuple[tuple[int, int], ...]  # (seed, projective dimension)

    @property
    def ok(self):
        return self.value == self.expected

    def to_json(self):
        return {
            "n": self.n,
            "value": self.value,
            "expected": self.expected,
            "attempts": [{"seed": s, "value": v} for s, v in self.attempts],
        }


def orbit_cone_tangent_dim(n, seed) -> TangentReport:
    """Projective dimension of the tangent space, at a sampled generic
    point unit + w (w on the staircase support W), of the orbit of the
    cone: rank of act(gl^3, unit + w) + <unit, W> minus one.

    Degenerate samples (rank below the closed form) trigger up to two
    reseeds (seed+1, seed+2); all attempts are reported and the maximum is
    returned."""
    expected = qmax_dimension_bound(n)
    M = unit_tensor(n)
    W = build_W(n, "W")
    attempts = []
    best = -1
    for s in (seed, seed + 1, seed + 2):
        T = M + Tensor3(n, sample_coefficients(W, s))
        rows = _tangent_rows(n, T, W)
        value = rank_int(rows) - 1
        attempts.append((s, value))
        best = max(best, value)
        if best == expected:
            break
    return TangentReport(n=n, value=best, expected=expected, attempts=tuple(attempts))


def _tangent_rows(n, T, W: Support):
    nn = n * n * n
    rows = []
    sym = _symbolic_action(n, T)
    by_unknown = {}
    for coord, d in sym.items():
        ci = _coord_index(n, coord)
        for unk, coeff in d.items():
            by_unknown.setdefault(unk, []).append((ci, coeff))
    for unk in range(3 * n * n):
        entries = by_unknown.get(unk)
        if not entries:
            continue
        den = 1
        for _, v in entries:
            den = lcm(den, v.denominator)
        row = [0] * nn
        for ci, v in entries:
            row[ci] = int(v * den)
        rows.append(row)
    unit_row = [0] * nn
    for i in range(1, n + 1):
        unit_row[_coord_index(n, (i, i, i))] = 1
    rows.append(unit_row)
    for t in W.sorted_triples():
        row = [0] * nn
        row[_coord_index(n, t)] = 1
        rows.append(row)
    return rows


def qmax_dimension_bound(n) -> int:
    """Closed form (2n^3 + 3n^2 - 2n - 3)/3: the lower bound on the
    projective dimension of the closure of the maximal border subrank
    locus.  The numerator is divisible by 3 for every n >= 1."""
    if n < 1:
        raise InvalidValueError("n must be positive")
    num = 2 * n**3 + 3 * n**2 - 2 * n - 3
    if num % 3:
        raise InternalError(f"bound numerator {num} not divisible by 3")
    return num // 3
