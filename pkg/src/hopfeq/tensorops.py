"""Endomorphisms of V (x) V and the Hopf / pentagon / QYBE decision procedures.

Basis conventions, pinned once for the whole package:

* V (x) V is ordered lexicographically: m_1(x)m_1, m_1(x)m_2, ..., so the
  column a*n+b (0-based) of a TensorOp holds the image of m_{a+1}(x)m_{b+1}.
* Structure constants are indexed R(m_v (x) m_u) = sum_{i,j} x[u][v][j][i]
  m_i (x) m_j (all indices 0-based here), i.e. entries[i*n+j][v*n+u] =
  x[u][v][j][i].  Reproducing the printed coefficient list of the R_q family
  is the regression test that pins this down.

All comparisons are exact, entrywise; no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels, linalg
from .fields import Field, FieldError, PrimeField, parse_field


class CapExceededError(RuntimeError):
    """Brute-force candidate space larger than the configured cap."""


@dataclass
class TensorOp:
    n: int
    field: Field
    entries: list  # n^2 x n^2, row-major

    def __post_init__(self):
        d2 = self.n * self.n
        if len(self.entries) != d2 or any(len(row) != d2 for row in self.entries):
            raise ValueError(f"entries must be {d2}x{d2}")

    def __eq__(self, other):
        return (
            isinstance(other, TensorOp)
            and self.n == other.n
            and self.field == other.field
            and self.entries == other.entries
        )

    def copy(self):
        return TensorOp(self.n, self.field, [row[:] for row in self.entries])

    def flat(self):
        return [x for row in self.entries for x in row]

    def to_json(self):
        f = self.field
        return {
            "field": f.descriptor,
            "n": self.n,
            "matrix": [[f.scalar_to_json(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, doc):
        field = parse_field(doc["field"])
        n = doc["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"bad dimension {n!r}")
        entries = [[field.parse_scalar(x) for x in row] for row in doc["matrix"]]
        return cls(n, field, entries)


@dataclass
class EndoV:
    n: int
    field: Field
    entries: list  # n x n

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"entries must be {self.n}x{self.n}")


def identity_op(n, field):
    return TensorOp(n, field, linalg.identity(field, n * n))


def switch(n, field):
    """The flip map tau(v (x) w) = w (x) v as a TensorOp."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = linalg.zeros(field, n * n, n * n)
    for a in range(n):
        for b in range(n):
            m[b * n + a][a * n + b] = field.one
    return TensorOp(n, field, m)


def pair_tensor(f: EndoV, g: EndoV) -> TensorOp:
    """f (x) g acting on V (x) V, i.e. the Kronecker product of the matrices."""
    if f.n != g.n or f.field != g.field:
        raise ValueError("mismatched endomorphisms")
    return TensorOp(f.n, f.field, linalg.kron(f.field, f.entries, g.entries))


def leg(R: TensorOp, which: int):
    """R^12, R^13 or R^23 on V(x)V(x)V (lexicographic basis), as a plain matrix.

    R^12 = R(x)I, R^23 = I(x)R, R^13 = (I(x)tau)(R(x)I)(I(x)tau).
    """
    n = R.n
    field = R.field
    d2, d3 = n * n, n * n * n
    zero = field.zero
    out = linalg.zeros(field, d3, d3)
    ent = R.entries
    for i in range(d2):
        for j in range(d2):
            v = ent[i][j]
            if v == zero:
                continue
            if which == 12:
                for k in range(n):
                    out[i * n + k][j * n + k] = v
            elif which == 23:
                for k in range(n):
                    out[k * d2 + i][k * d2 + j] = v
            elif which == 13:
                a, b = divmod(i, n)
                u, w = divmod(j, n)
                for k in range(n):
                    out[(a * n + k) * n + b][(u * n + k) * n + w] = v
            else:
                raise ValueError("which must be one of 12, 13, 23")
    return out


def _legs(R):
    return leg(R, 12), leg(R, 13), leg(R, 23)


def _equation_holds(R: TensorOp, name: str) -> bool:
    field = R.field
    if isinstance(field, PrimeField):
        return kernels.equation_holds_mod(
            R.flat(), R.n, field.p, kernels.EQUATION_CODES[name]
        )
    r12, r13, r23 = _legs(R)
    mm = lambda a, b: linalg.mat_mul(field, a, b)
    if name == "hopf":
        return mm(mm(r23, r13), r12) == mm(r12, r23)
    if name == "pentagon":
        return mm(mm(r12, r13), r23) == mm(r23, r12)
    if name == "qybe":
        return mm(mm(r12, r13), r23) == mm(mm(r23, r13), r12)
    if name == "commutative":
        return mm(r12, r13) == mm(r13, r12)
    if name == "cocommutative":
        return mm(r13, r23) == mm(r23, r13)
    raise ValueError(f"unknown equation {name!r}")


def check_hopf(R):
    """R^23 R^13 R^12 == R^12 R^23."""
    return _equation_holds(R, "hopf")


def check_pentagon(R):
    """R^12 R^13 R^23 == R^23 R^12."""
    return _equation_holds(R, "pentagon")


def check_qybe(R):
    """R^12 R^13 R^23 == R^23 R^13 R^12."""
    return _equation_holds(R, "qybe")


def check_commutative(R):
    """R^12 R^13 == R^13 R^12."""
    return _equation_holds(R, "commutative")


def check_cocommutative(R):
    """R^13 R^23 == R^23 R^13."""
    return _equation_holds(R, "cocommutative")


def is_bijective(R):
    return linalg.is_invertible(R.field, R.entries)


def solution_report(R):
    return {
        "hopf": check_hopf(R),
        "pentagon": check_pentagon(R),
        "qybe": check_qybe(R),
        "commutative": check_commutative(R),
        "cocommutative": check_cocommutative(R),
        "bijective": is_bijective(R),
    }


def to_structure_constants(R: TensorOp):
    """Four-index array x[u][v][j][i] with entries[i*n+j][v*n+u] = x[u][v][j][i]."""
    n = R.n
    ent = R.entries
    return [
        [[[ent[i * n + j][v * n + u] for i in range(n)] for j in range(n)]
         for v in range(n)]
        for u in range(n)
    ]


def from_structure_constants(x, field) -> TensorOp:
    n = len(x)
    if any(
        len(x[u]) != n or any(len(x[u][v]) != n or any(len(x[u][v][j]) != n for j in range(n))
                             for v in range(n))
        for u in range(n)
    ):
        raise ValueError("structure constant array must be n x n x n x n")
    ent = linalg.zeros(field, n * n, n * n)
    for u in range(n):
        for v in range(n):
            for j in range(n):
                for i in range(n):
                    ent[i * n + j][v * n + u] = x[u][v][j][i]
    return TensorOp(n, field, ent)


def conjugate(R: TensorOp, u: EndoV) -> TensorOp:
    """(u (x) u) R (u (x) u)^{-1}; u must be invertible."""
    if u.n != R.n or u.field != R.field:
        raise ValueError("mismatched operator and automorphism")
    field = R.field
    uu = linalg.kron(field, u.entries, u.entries)
    uu_inv = linalg.inverse(field, uu)
    m = linalg.mat_mul(field, uu, linalg.mat_mul(field, R.entries, uu_inv))
    return TensorOp(R.n, field, m)


def invert(R: TensorOp) -> TensorOp:
    return TensorOp(R.n, R.field, linalg.inverse(R.field, R.entries))


def transform(R: TensorOp, left: TensorOp, right: TensorOp) -> TensorOp:
    """Matrix product left * R * right as a TensorOp (e.g. tau R tau)."""
    field = R.field
    m = linalg.mat_mul(field, left.entries, linalg.mat_mul(field, R.entries, right.entries))
    return TensorOp(R.n, field, m)


def random_tensorop(n, field, rng) -> TensorOp:
    d2 = n * n
    return TensorOp(n, field, [[field.random(rng) for _ in range(d2)] for _ in range(d2)])


def random_endo(n, field, rng) -> EndoV:
    return EndoV(n, field, [[field.random(rng) for _ in range(n)] for _ in range(n)])


def _op_from_index(idx, n, p, field):
    d2 = n * n
    entries = [[0] * d2 for _ in range(d2)]
    rem = idx
    for k in range(d2 * d2 - 1, -1, -1):
        entries[k // d2][k % d2] = rem % p
        rem //= p
    return TensorOp(n, field, entries)


def enumerate_solutions(n, field, which="hopf", cap=2**24, jobs=1):
    """All n^2 x n^2 operators over F_p solving the chosen equation.

    Exhaustive over all p^(n^4) candidates; output in lexicographic order of
    the flattened entry vector. Raises CapExceededError when the candidate
    count exceeds the cap.
    """
    if not isinstance(field, PrimeField):
        raise FieldError("enumeration needs a prime field")
    if which not in kernels.EQUATION_CODES:
        raise ValueError(f"unknown equation {which!r}")
    p = field.p
    total = p ** (n ** 4)
    if total > cap:
        raise CapExceededError(
            f"{total} candidates exceed the cap {cap}; raise it explicitly to proceed"
        )
    code = kernels.EQUATION_CODES[which]
    if jobs > 1:
        from multiprocessing import Pool

        step = -(-total // jobs)
        ranges = [(n, p, code, lo, min(lo + step, total)) for lo in range(0, total, step)]
        with Pool(jobs) as pool:
            chunks = pool.starmap(kernels.solutions_in_range_mod, ranges)
        indices = [i for chunk in chunks for i in chunk]
        indices.sort()
    else:
        indices = kernels.solutions_in_range_mod(n, p, code, 0, total)
    return [_op_from_index(i, n, p, field) for i in indices]
