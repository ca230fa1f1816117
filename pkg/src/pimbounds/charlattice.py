"""Weyl-group action on characters of a split maximal torus, and mod-l
reductions of the natural reflection representation.

For a split group over F_q the character group of a maximally split torus is
the weight lattice modulo q-1, a free (Z/(q-1))-module of rank n on which the
Weyl group acts through the simple reflections.  Orbit sizes of this action
are lower bounds for p'-parts of projective-module dimensions, so this module
provides orbit computation, full orbit scans, and the fixed-space and
irreducibility questions for the reduction of the reflection representation
modulo a small prime l.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rootdata import (
    GroupSpec,
    RootDatum,
    UnsupportedGroupError,
    apply_reflection,
    reflection_matrices,
)


class BudgetExceededError(RuntimeError):
    """A scan or search was larger than the configured budget."""


@dataclass(frozen=True)
class TorusCharacter:
    """A character of the split torus: weight coordinates modulo ``modulus``."""

    coords: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(
            self, "coords", tuple(c % self.modulus for c in self.coords))

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.coords)


def _require_split(spec: GroupSpec) -> None:
    if spec.is_suzuki_ree or spec.datum.twist_order != 1:
        raise UnsupportedGroupError(
            f"torus-character orbits are computed for split groups only, "
            f"not {spec.describe()}")


def character_from_weight(spec: GroupSpec, weight) -> TorusCharacter:
    """Restrict a weight to the split torus: reduce coordinates mod q-1."""
    _require_split(spec)
    m = max(spec.q - 1, 1)
    coords = tuple(weight)
    if len(coords) != spec.datum.rank:
        raise ValueError("weight length does not match the rank")
    return TorusCharacter(coords, m)


def orbit(spec: GroupSpec, beta) -> frozenset[tuple[int, ...]]:
    """Weyl-group orbit of a torus character, as a set of coordinate tuples."""
    char = beta if isinstance(beta, TorusCharacter) else character_from_weight(spec, beta)
    datum = spec.datum
    m = char.modulus
    start = char.coords
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, datum.rank + 1):
                w = tuple(c % m for c in apply_reflection(datum, i, v))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def orbit_size(spec: GroupSpec, beta) -> int:
    return len(orbit(spec, beta))


@dataclass(frozen=True)
class OrbitScanReport:
    """Summary of the Weyl action on all q-1 torus characters."""

    group: str
    modulus: int
    total_points: int
    vacuous: bool
    fixed_points: tuple[tuple[int, ...], ...]
    min_nontrivial_orbit: int | None
    orbit_size_histogram: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "modulus": self.modulus,
            "total_points": self.total_points,
            "vacuous": self.vacuous,
            "fixed_points": [list(v) for v in self.fixed_points],
            "min_nontrivial_orbit": self.min_nontrivial_orbit,
            "orbit_size_histogram": {str(k): v for k, v in self.orbit_size_histogram},
        }


def orbit_scan(spec: GroupSpec, budget: int = 10 ** 7) -> OrbitScanReport:
    """Partition all torus characters into Weyl orbits.

    Reports the fixed characters, the smallest orbit of size larger than one,
    and a histogram of orbit sizes.  For q = 2 the torus is trivial and the
    scan is flagged vacuous.  Raises :class:`BudgetExceededError` if the
    character group has more than ``budget`` elements.
    """
    _require_split(spec)
    datum = spec.datum
    m = spec.q - 1
    if m <= 1:
        return OrbitScanReport(
            group=spec.describe(), modulus=max(m, 1), total_points=1,
            vacuous=True, fixed_points=((0,) * datum.rank,),
            min_nontrivial_orbit=None, orbit_size_histogram=((1, 1),))
    total = m ** datum.rank
    if total > budget:
        raise BudgetExceededError(
            f"{total} torus characters exceed the budget of {budget}")
    unseen = set(itertools.product(range(m), repeat=datum.rank))
    fixed = []
    histogram: dict[int, int] = {}
    min_nontrivial = None
    while unseen:
        start = unseen.pop()
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(1, datum.rank + 1):
                    w = tuple(c % m for c in apply_reflection(datum, i, v))
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        unseen.difference_update(seen)
        size = len(seen)
        histogram[size] = histogram.get(size, 0) + 1
        if size == 1:
            fixed.append(start)
        elif min_nontrivial is None or size < min_nontrivial:
            min_nontrivial = size
    return OrbitScanReport(
        group=spec.describe(), modulus=m, total_points=total, vacuous=False,
        fixed_points=tuple(sorted(fixed)),
        min_nontrivial_orbit=min_nontrivial,
        orbit_size_histogram=tuple(sorted(histogram.items())))


# ---------------------------------------------------------------------------
# Linear algebra over F_l
# ---------------------------------------------------------------------------


def _kernel_mod(rows: list[list[int]], n: int, ell: int) -> list[tuple[int, ...]]:
    """Basis of the right kernel of a matrix over F_ell (rows of length n)."""
    mat = [[c % ell for c in row] for row in rows]
    pivots = []  # (row index, column index)
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] % ell:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], -1, ell)
        mat[r] = [(x * inv) % ell for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % ell for a, b in zip(mat[i], mat[r])]
        pivots.append((r, c))
        r += 1
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [0] * n
        v[fc] = 1
        for r_i, c_i in pivots:
            v[c_i] = (-mat[r_i][fc]) % ell
        basis.append(tuple(v))
    return basis


def fixed_subspace_mod_ell(datum: RootDatum, ell: int) -> list[tuple[int, ...]]:
    """Basis of the common fixed space of all simple reflections over F_ell.

    Computed as the kernel of the stacked matrices M_i - I.
    """
    if ell < 2:
        raise ValueError("the modulus must be a prime >= 2")
    n = datum.rank
    rows: list[list[int]] = []
    for mat in reflection_matrices(datum):
        for j in range(n):
            row = [mat[j][k] - (1 if j == k else 0) for k in range(n)]
            if any(c % ell for c in row):
                rows.append(row)
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return _kernel_mod(rows, n, ell)


def _mat_vec(mat, v, ell):
    return tuple(sum(r * c for r, c in zip(row, v)) % ell for row in mat)


def _spin_dimension(vectors, gens, ell, n) -> int:
    """Dimension of the submodule generated by ``vectors`` under ``gens``.

    Maintains a reduced echelon basis; returns as soon as the span is full.
    """
    echelon: dict[int, tuple[int, ...]] = {}  # pivot column -> reduced vector

    def insert(v):
        v = list(v)
        for c in range(n):
            if v[c]:
                if c in echelon:
                    f = v[c]
                    v = [(a - f * b) % ell for a, b in zip(v, echelon[c])]
                else:
                    inv = pow(v[c], -1, ell)
                    vv = tuple((x * inv) % ell for x in v)
                    echelon[c] = vv
                    return vv
        return None

    work = []
    for v in vectors:
        nv = insert(v)
        if nv is not None:
            work.append(nv)
    while work and len(echelon) < n:
        v = work.pop()
        for g in gens:
            nv = insert(_mat_vec(g, v, ell))
            if nv is not None:
                work.append(nv)
                if len(echelon) == n:
                    return n
    return len(echelon)


def _projective_points(n, ell):
    """One representative per projective point of F_ell^n (first nonzero = 1)."""
    for lead in range(n):
        for tail in itertools.product(range(ell), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def _transpose(mat):
    n = len(mat)
    return tuple(tuple(mat[j][i] for j in range(n)) for i in range(n))


# Exhaustive spinning is used when the projective space is at most this big.
_EXHAUSTIVE_POINT_LIMIT = 30_000


def is_irreducible_mod_ell(datum: RootDatum, ell: int,
                           point_limit: int = _EXHAUSTIVE_POINT_LIMIT) -> bool:
    """Is the natural reflection representation irreducible over F_ell?

    For small projective spaces every point is spun and the module is
    irreducible exactly when every spin fills the space.  For larger spaces a
    deterministic Norton-style test is used: find an algebra element with a
    small nonzero nullity, spin every kernel point, and spin one cokernel
    point under the transposed action; the module is irreducible exactly when
    all of those spins fill the space.  Both paths are exact, not heuristic.
    """
    n = datum.rank
    if n == 1:
        return True
    gens = [tuple(tuple(c % ell for c in row) for row in mat)
            for mat in reflection_matrices(datum)]
    points = (ell ** n - 1) // (ell - 1)
    if points <= point_limit:
        for v in _projective_points(n, ell):
            if _spin_dimension([v], gens, ell, n) < n:
                return False
        return True
    return _norton_irreducible(gens, ell, n)


def _norton_irreducible(gens, ell, n) -> bool:
    # Quick reducibility witnesses: a nonzero fixed vector, or a proper spin
    # from any kernel vector of some algebra element.
    fixed_rows = []
    for g in gens:
        for j in range(n):
            fixed_rows.append([g[j][k] - (1 if j == k else 0) for k in range(n)])
    for v in _kernel_mod(fixed_rows, n, ell):
        if _spin_dimension([v], gens, ell, n) < n:
            return False

    # Deterministic search for an algebra element with small positive nullity.
    rng_state = 0x5EED
    def next_int(bound):
        nonlocal rng_state
        rng_state = (rng_state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
        return (rng_state >> 20) % bound

    def random_algebra_element():
        # Short product-sum of generators with small random coefficients.
        acc = [[0] * n for _ in range(n)]
        for _ in range(3):
            word = gens[next_int(len(gens))]
            for _ in range(next_int(3)):
                word = _mat_mul(word, gens[next_int(len(gens))], ell)
            coeff = 1 + next_int(ell - 1) if ell > 2 else 1
            for i in range(n):
                for j in range(n):
                    acc[i][j] = (acc[i][j] + coeff * word[i][j]) % ell
        return tuple(tuple(row) for row in acc)

    best = None  # (nullity, element, kernel basis)
    for _ in range(400):
        z = random_algebra_element()
        rows = [list(row) for row in z]
        ker = _kernel_mod(rows, n, ell)
        if 0 < len(ker) < n:
            if best is None or len(ker) < best[0]:
                best = (len(ker), z, ker)
            if best[0] == 1:
                break
    if best is None:  # pragma: no cover - the search space is tiny; never seen
        raise BudgetExceededError(
            "no singular algebra element found; cannot certify irreducibility")
    nullity, z, ker = best
    # Every kernel point of z must generate the full module ...
    for coeffs in _projective_points(nullity, ell):
        v = [0] * n
        for c, b in zip(coeffs, ker):
            if c:
                for j in range(n):
                    v[j] = (v[j] + c * b[j]) % ell
        if _spin_dimension([tuple(v)], gens, ell, n) < n:
            return False
    # ... and one cokernel point must generate the full dual module.
    zt_rows = [list(row) for row in _transpose(z)]
    ker_t = _kernel_mod(zt_rows, n, ell)
    gens_t = [_transpose(g) for g in gens]
    if _spin_dimension([ker_t[0]], gens_t, ell, n) < n:
        return False
    return True


def _mat_mul(a, b, ell):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % ell for j in range(n))
        for i in range(n)
    )


def natural_rep_irreducibility_table(datum: RootDatum, ell: int) -> bool:
    """Embedded expectation for the mod-l natural reflection representation.

    Type A (rank n-1): irreducible exactly when l does not divide n; types
    B, C, D: when l is odd; E6: when l is not 3; E7: when l is not 2; E8:
    always; F4: when l is not 2; G2: when l is not 3.
    """
    fam = datum.family
    if fam == "A":
        # Rank 1 gives a one-dimensional module, irreducible for every l
        # (the generic divisibility pattern starts at rank 2).
        return datum.rank == 1 or (datum.rank + 1) % ell != 0
    if fam in ("B", "C", "D"):
        return ell != 2
    return {"E6": ell != 3, "E7": ell != 2, "E8": True,
            "F4": ell != 2, "G2": ell != 3}[fam]
