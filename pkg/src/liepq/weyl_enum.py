"""Root systems of types B_r and D_r, the Weyl dimension formula, and
bounded enumeration of dominant weights.

Everything is a statement about complex simple Lie algebras; real-form
questions (which modules carry invariant forms) are handled on explicitly
constructed modules elsewhere, never inferred from weight data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError
from .exact_linalg import ONE, Rational, ZERO, rat


@dataclass(frozen=True)
class WeightVector:
    """Rational coordinates of a weight in the epsilon-basis."""

    coords: tuple

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(rat(c) for c in coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector([a + b for a, b in zip(self.coords, other.coords)])

    def scale(self, k) -> "WeightVector":
        k = rat(k)
        return WeightVector([k * c for c in self.coords])

    def dot(self, other: "WeightVector") -> Rational:
        return sum((a * b for a, b in zip(self.coords, other.coords)), ZERO)

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootSystem:
    kind: str  # "B" or "D"
    rank: int
    positive_roots: tuple
    rho: WeightVector
    flag: str | None  # set on the degenerate/coincident small-rank cases

    @classmethod
    def create(cls, kind: str, rank: int) -> "RootSystem":
        if kind not in ("B", "D"):
            raise ContractError("only types B and D are supported")
        if rank < 2:
            raise ContractError("rank must be at least 2")
        roots = []
        for i in range(rank):
            for j in range(i + 1, rank):
                for sign in (ONE, -ONE):
                    coords = [ZERO] * rank
                    coords[i] = ONE
                    coords[j] = sign
                    roots.append(WeightVector(coords))
        if kind == "B":
            for i in range(rank):
                coords = [ZERO] * rank
                coords[i] = ONE
                roots.append(WeightVector(coords))
        expected = rank * rank if kind == "B" else rank * (rank - 1)
        assert len(roots) == expected
        rho = WeightVector([ZERO] * rank)
        for r in roots:
            rho = rho + r
        rho = rho.scale(Rational(1, 2))
        flag = None
        if kind == "D" and rank == 2:
            flag = "D2 is not simple: so(4,C) = sl(2,C) x sl(2,C)"
        elif kind == "D" and rank == 3:
            flag = "D3 coincides with A3: so(6,C) = sl(4,C)"
        return cls(kind, rank, tuple(roots), rho, flag)

    def fundamental_weights(self):
        r = self.rank
        half = Rational(1, 2)
        weights = []
        if self.kind == "B":
            for k in range(1, r):
                weights.append(WeightVector([ONE] * k + [ZERO] * (r - k)))
            weights.append(WeightVector([half] * r))
        else:
            for k in range(1, r - 1):
                weights.append(WeightVector([ONE] * k + [ZERO] * (r - k)))
            weights.append(WeightVector([half] * (r - 1) + [-half]))
            weights.append(WeightVector([half] * r))
        return weights

    def is_dominant(self, lam: WeightVector) -> bool:
        c = lam.coords
        if len(c) != self.rank:
            return False
        for i in range(self.rank - 1):
            if c[i] < c[i + 1]:
                return False
        if self.kind == "B":
            return c[-1] >= 0
        return c[-2] >= abs(c[-1]) if self.rank >= 2 else True

    def is_weight_integral(self, lam: WeightVector) -> bool:
        kinds = set()
        for c in lam.coords:
            twice = 2 * c
            if twice.denominator != 1:
                return False
            kinds.add(int(twice) % 2)
        return len(kinds) <= 1


def root_system(kind: str, rank: int) -> RootSystem:
    return RootSystem.create(kind, rank)


def weyl_dim(rs: RootSystem, lam: WeightVector) -> int:
    """dim V_lambda = prod <lambda+rho, alpha> / <rho, alpha> over positive roots."""
    if not rs.is_dominant(lam):
        raise ContractError("weight is not dominant")
    if not rs.is_weight_integral(lam):
        raise ContractError("weight coordinates must be uniformly (half-)integral")
    shifted = lam + rs.rho
    num = ONE
    den = ONE
    for alpha in rs.positive_roots:
        num *= shifted.dot(alpha)
        den *= rs.rho.dot(alpha)
    value = num / den
    if value.denominator != 1:
        raise AssertionError("Weyl dimension did not come out integral")
    return int(value)


def enumerate_up_to_dim(rs: RootSystem, bound: int):
    """All dominant nonzero (half-)integral weights with dimension <= bound.

    Search over fundamental-weight coefficients, pruned by the strict
    monotonicity of the dimension in every coefficient; output sorted by
    (dimension, coordinates).
    """
    if bound < 1:
        raise ContractError("bound must be at least 1")
    fundamentals = rs.fundamental_weights()
    r = rs.rank
    found = []

    def descend(idx, lam, any_nonzero):
        if idx == r:
            if any_nonzero:
                found.append((lam, weyl_dim(rs, lam)))
            return
        m = 0
        current = lam
        # dimension is strictly increasing in every fundamental coefficient,
        # so the first coefficient that overshoots ends the scan
        while weyl_dim(rs, current) <= bound:
            descend(idx + 1, current, any_nonzero or m > 0)
            m += 1
            current = lam + fundamentals[idx].scale(m)

    zero = WeightVector([ZERO] * r)
    descend(0, zero, False)
    found.sort(key=lambda t: (t[1], t[0].coords))
    return found


_EXCEPTIONAL_DIMS = {14: "G2", 52: "F4", 78: "E6", 133: "E7", 248: "E8"}


def no_simple_complex_algebra_of_dim(d: int, max_rank: int = 16):
    """Scan the classical and exceptional tables for simple complex Lie
    algebras of a given dimension.

    Returns (absent, candidates): absent is True when no simple complex Lie
    algebra of dimension d exists; candidates lists (type, rank, note).
    """
    if d < 1:
        raise ContractError("dimension must be positive")
    candidates = []
    for r in range(1, max_rank + 1):
        if r * (r + 2) == d:
            candidates.append(("A", r, None))
        if r >= 2 and r * (2 * r + 1) == d:
            candidates.append(("B", r, None))
        if r >= 2 and r * (2 * r + 1) == d:
            note = "C2 = B2 (so(5,C) = sp(4,C))" if r == 2 else None
            candidates.append(("C", r, note))
        if r >= 3 and r * (2 * r - 1) == d:
            note = "D3 = A3 (so(6,C) = sl(4,C))" if r == 3 else None
            candidates.append(("D", r, note))
    if d in _EXCEPTIONAL_DIMS:
        candidates.append((_EXCEPTIONAL_DIMS[d], None, None))
    return (len(candidates) == 0), candidates
