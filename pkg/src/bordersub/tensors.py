"""Core value types: exact rational sparse tensors of format n x n x n,
coordinate supports, permutations, and the named support families.

Conventions used everywhere in the package:

* indices are 1-based, triples (i, j, k) live in [n]^3;
* scalars are exact rationals (fractions.Fraction) -- no floats, ever;
* tensors are sparse with absent-means-zero, so the support is exactly the
  set of stored triples.

The three staircase supports come from the "some other index is smaller
than the distinguished one" conditions:

    W   : at least one of j, k less than i
    W'  : at least one of i, k less than j
    W'' : at least one of i, j less than k

and the arithmetic-progression support U collects the off-diagonal triples
with 2i = j + k, which sits inside W.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import DimensionMismatchError, InvalidValueError

Triple = tuple[int, int, int]

W_VARIANTS = ("W", "W'", "W''")


def _check_triple(n, t):
    if len(t) != 3 or not all(isinstance(v, int) and 1 <= v <= n for v in t):
        raise InvalidValueError(f"triple {t!r} outside [1, {n}]^3")
    return (t[0], t[1], t[2])


@dataclass(frozen=True)
class Support:
    """A finite set of index triples: a coordinate subspace of A (x) B (x) C."""

    n: int
    triples: frozenset[Triple]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidValueError("format n must be positive")
        object.__setattr__(self, "triples", frozenset(_check_triple(self.n, t) for t in self.triples))

    @classmethod
    def of(cls, n, triples):
        return cls(n, frozenset(tuple(t) for t in triples))

    def sorted_triples(self):
        return sorted(self.triples)

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(self.sorted_triples())

    def __contains__(self, t):
        return tuple(t) in self.triples

    def union(self, other):
        if isinstance(other, Support):
            if other.n != self.n:
                raise DimensionMismatchError(f"n={self.n} vs n={other.n}")
            other = other.triples
        return Support.of(self.n, self.triples | {tuple(t) for t in other})

    def difference(self, other):
        other = other.triples if isinstance(other, Support) else {tuple(t) for t in other}
        return Support.of(self.n, self.triples - other)

    def to_json(self):
        return {"n": self.n, "triples": [list(t) for t in self.sorted_triples()]}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls.of(int(obj["n"]), [tuple(int(v) for v in t) for t in obj["triples"]])
        except (KeyError, TypeError) as exc:
            raise InvalidValueError(f"malformed support JSON: {exc}") from exc


def _parse_fraction(s):
    """Exact fraction string "p" or "p/q"; decimal or float syntax rejected."""
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or "." in s or "e" in s.lower():
        raise InvalidValueError(f"coefficient {s!r} is not a decimal-free fraction string")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidValueError(f"bad coefficient {s!r}: {exc}") from exc


@dataclass(frozen=True)
class Tensor3:
    """Sparse order-3 tensor over Q; stored coefficients are never zero."""

    n: int
    entries: dict[Triple, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidValueError("format n must be positive")
        clean = {}
        for t, c in self.entries.items():
            t = _check_triple(self.n, t)
            c = Fraction(c)
            if c == 0:
                raise InvalidValueError(f"explicit zero coefficient at {t}")
            clean[t] = c
        object.__setattr__(self, "entries", clean)

    def coeff(self, t) -> Fraction:
        return self.entries.get(tuple(t), Fraction(0))

    def support(self) -> Support:
        return Support.of(self.n, self.entries)

    def is_zero(self):
        return not self.entries

    def __add__(self, other):
        if self.n != other.n:
            raise DimensionMismatchError(f"n={self.n} vs n={other.n}")
        entries = dict(self.entries)
        for t, c in other.entries.items():
            s = entries.get(t, Fraction(0)) + c
            if s == 0:
                entries.pop(t, None)
            else:
                entries[t] = s
        return Tensor3(self.n, entries)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return Tensor3(self.n, {})
        return Tensor3(self.n, {t: c * v for t, v in self.entries.items()})

    def to_json(self):
        return {
            "n": self.n,
            "entries": [[i, j, k, str(c)] for (i, j, k), c in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            entries = {}
            for row in obj["entries"]:
                i, j, k, c = row
                entries[(int(i), int(j), int(k))] = _parse_fraction(c)
            return cls(int(obj["n"]), entries)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidValueError):
                raise
            raise InvalidValueError(f"malformed tensor JSON: {exc}") from exc


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n], acting diagonally on index triples."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise InvalidValueError(f"{self.images!r} is not a permutation of 1..{self.n}")

    @classmethod
    def identity(cls, n):
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n):
        from itertools import permutations

        return [cls(n, imgs) for imgs in permutations(range(1, n + 1))]

    def __call__(self, i):
        return self.images[i - 1]

    def compose(self, other):
        """self after other: (self.compose(other))(i) = self(other(i))."""
        if self.n != other.n:
            raise DimensionMismatchError(f"n={self.n} vs n={other.n}")
        return Permutation(self.n, tuple(self(other(i)) for i in range(1, self.n + 1)))


def unit_tensor(n) -> Tensor3:
    """The diagonal tensor sum_i a_i (x) b_i (x) c_i."""
    if n < 1:
        raise InvalidValueError("n must be positive")
    return Tensor3(n, {(i, i, i): Fraction(1) for i in range(1, n + 1)})


def diagonal_support(n) -> Support:
    return Support.of(n, [(i, i, i) for i in range(1, n + 1)])


def build_W(n, variant="W") -> Support:
    """One of the three staircase supports W, W', W''.

    |W(n)| = n^3 - n(n+1)(2n+1)/6 = (4n^3 - 3n^2 - n)/6, and the same for
    the other two variants by symmetry.
    """
    if n < 1:
        raise InvalidValueError("n must be positive")
    if variant not in W_VARIANTS:
        raise InvalidValueError(f"variant must be one of {W_VARIANTS}")
    triples = []
    for i, j, k in product(range(1, n + 1), repeat=3):
        if variant == "W":
            keep = j < i or k < i
        elif variant == "W'":
            keep = i < j or k < j
        else:
            keep = i < k or j < k
        if keep:
            triples.append((i, j, k))
    return Support.of(n, triples)


def build_tight_U(n) -> Support:
    """Off-diagonal triples on the arithmetic-progression plane 2i = j + k.

    Together with the diagonal this is exactly {(i,j,k) : 2i = j + k}; on
    its own it is a subset of W (either j or k must drop below i)."""
    if n < 1:
        raise InvalidValueError("n must be positive")
    triples = [
        (i, j, k)
        for i, j, k in product(range(1, n + 1), repeat=3)
        if 2 * i == j + k and j != i
    ]
    return Support.of(n, triples)


def apply_permutation(s: Permutation, sup: Support) -> Support:
    """Diagonal action: (i,j,k) -> (s(i), s(j), s(k))."""
    if s.n != sup.n:
        raise DimensionMismatchError(f"permutation n={s.n} vs support n={sup.n}")
    return Support.of(sup.n, [(s(i), s(j), s(k)) for (i, j, k) in sup])


def tensor_from_support(sup: Support, coeffs) -> Tensor3:
    """Tensor with the prescribed support; coeffs must cover it exactly."""
    coeffs = {tuple(t): Fraction(c) for t, c in coeffs.items()}
    if set(coeffs) != set(sup.triples):
        missing = set(sup.triples) - set(coeffs)
        extra = set(coeffs) - set(sup.triples)
        raise InvalidValueError(f"coefficients do not match support (missing {sorted(missing)}, extra {sorted(extra)})")
    return Tensor3(sup.n, coeffs)


NONZERO_SMALL = (1, 2, 3, -1, -2, -3)


def sample_coefficients(sup: Support, seed) -> dict[Triple, Fraction]:
    """Seeded nonzero small-integer coefficients, one per support triple.

    Uniform over {+-1, +-2, +-3}: small enough to keep exact elimination
    cheap, generic enough to dodge the degeneracy loci with overwhelming
    probability."""
    rng = random.Random(f"bordersub:coeffs:{seed}")
    return {t: Fraction(rng.choice(NONZERO_SMALL)) for t in sup.sorted_triples()}


def sample_support(n, seed, max_size) -> Support:
    """Seeded random support: uniform size in [1, max_size], triples drawn
    without replacement from the whole cube (diagonal included)."""
    rng = random.Random(f"bordersub:support:{n}:{max_size}:{seed}")
    cube = [t for t in product(range(1, n + 1), repeat=3)]
    size = rng.randint(1, min(max_size, len(cube)))
    return Support.of(n, rng.sample(cube, size))


def dumps_json(obj) -> str:
    """Stable serialization used by every CLI output and golden file."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
