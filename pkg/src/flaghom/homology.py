"""Cellular chain complexes of partial flag manifolds and their homology.

Cells in degree k are the minimal coset representatives of length k; the
boundary entries come from the coefficient engine.  Integral complexes are
only assembled where every even-kappa entry has a sign fixed by the low-degree table,
which in type A reaches degree 3 and hence H_1 and H_2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .coeffs import SIGN_POLICY_EQUAL_WORDS, coefficient
from .rootsys import RootSystem
from .weyl import WeylElement, WeylGroup

RING_Z = "Z"
RING_Z2 = "Z2"


class SignIndeterminateError(ValueError):
    """An integral boundary entry is +-2 but its sign is not determined."""


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass
class ChainComplex:
    system: RootSystem
    theta: frozenset[int]
    ring: str
    cells: dict[int, list[WeylElement]]
    boundaries: dict[int, list[list[int]]]  # rows: k-cells, cols: (k-1)-cells
    max_degree: int
    indeterminate_rows: dict[int, list[int]]  # zeroed rows per degree


def build_complex(
    group: WeylGroup,
    theta: frozenset[int] | set[int],
    max_degree: int,
    ring: str = RING_Z,
    sign_policy: str = SIGN_POLICY_EQUAL_WORDS,
    allow_indeterminate_rows: bool = False,
) -> ChainComplex:
    """Assemble boundary matrices on W^Theta through the given degree.

    Verifies d o d = 0 on construction.  Over Z2 every coefficient is even,
    so the matrices are identically zero; over Z an undetermined sign on a
    magnitude-2 entry raises SignIndeterminateError, unless
    ``allow_indeterminate_rows`` is set, in which case the whole row is
    zeroed and recorded.  Every boundary row has even entries and lies in
    the kernel of the next boundary map, so a zeroed row can only remove
    redundant image; `homology_groups` re-verifies that before trusting a
    degree that depends on such a matrix.
    """
    if ring not in (RING_Z, RING_Z2):
        raise ValueError(f"unknown ring {ring!r}")
    theta = frozenset(theta)
    reps = group.minimal_representatives(theta)
    cells: dict[int, list[WeylElement]] = {k: [] for k in range(max_degree + 1)}
    cell_set = {w.matrix for w in reps}
    for w in reps:
        if w.length <= max_degree:
            cells[w.length].append(w)

    index: dict[int, dict] = {
        k: {w.matrix: i for i, w in enumerate(cells[k])} for k in cells
    }
    boundaries: dict[int, list[list[int]]] = {}
    indeterminate: dict[int, list[int]] = {}
    for k in range(1, max_degree + 1):
        rows = []
        zeroed: list[int] = []
        for row_i, w in enumerate(cells[k]):
            row = [0] * len(cells[k - 1])
            undetermined = False
            for pair in group.bruhat_covers(w):
                if pair.w_prime.matrix not in cell_set:
                    continue
                magnitude, sign = coefficient(group, pair, sign_policy)
                if ring == RING_Z2 or magnitude == 0:
                    entry = 0
                elif sign is None:
                    if not allow_indeterminate_rows:
                        raise SignIndeterminateError(
                            "sign-indeterminate pair "
                            f"({pair.w.word}, {pair.w_prime.word})"
                        )
                    undetermined = True
                    break
                else:
                    entry = sign * magnitude
                row[index[k - 1][pair.w_prime.matrix]] = entry
            if undetermined:
                row = [0] * len(cells[k - 1])
                zeroed.append(row_i)
            rows.append(row)
        boundaries[k] = rows
        if zeroed:
            indeterminate[k] = zeroed

    complex_ = ChainComplex(
        group.system, theta, ring, cells, boundaries, max_degree, indeterminate
    )
    _assert_d_squared_zero(complex_)
    return complex_


def _assert_d_squared_zero(complex_: ChainComplex) -> None:
    for k in range(2, complex_.max_degree + 1):
        a, b = complex_.boundaries[k], complex_.boundaries[k - 1]
        for row in a:
            n_out = len(b[0]) if b else 0
            for j in range(n_out):
                if sum(row[i] * b[i][j] for i in range(len(row))):
                    raise AssertionError("boundary of boundary is nonzero")


def smith_normal_form(matrix: list[list[int]]) -> tuple[list[int], int]:
    """Invariant factors (d_1 | d_2 | ...) and rank of an integer matrix.

    Row/column reduction with smallest-absolute-value pivoting; Python ints
    make entry growth harmless.
    """
    a = [row[:] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    factors: list[int] = []
    top = 0
    while True:
        pivot = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = a[top][top]
            done = True
            for i in range(top + 1, nrows):
                q = a[i][top] // p
                if q:
                    for j in range(top, ncols):
                        a[i][j] -= q * a[top][j]
                if a[i][top]:
                    a[top], a[i] = a[i], a[top]
                    done = False
                    break
            if not done:
                continue
            for j in range(top + 1, ncols):
                q = a[top][j] // p
                if q:
                    for i in range(top, nrows):
                        a[i][j] -= q * a[i][top]
                if a[top][j]:
                    for i in range(top, nrows):
                        a[i][top], a[i][j] = a[i][j], a[i][top]
                    done = False
                    break
            if done:
                break
        # make the pivot divide every remaining entry
        p = abs(a[top][top])
        offender = None
        for i in range(top + 1, nrows):
            for j in range(top + 1, ncols):
                if a[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, ncols):
                a[top][j] += a[offender][j]
            continue
        factors.append(p)
        top += 1
    # enforce divisibility chain ordering (already divides by construction)
    return factors, len(factors)


def homology_groups(complex_: ChainComplex, up_to_degree: int) -> list[HomologyGroup]:
    """H_k for k = 0..up_to_degree from ranks and invariant factors.

    Needs boundaries through degree up_to_degree + 1.  A boundary matrix
    with zeroed sign-indeterminate rows is acceptable one degree above the
    last homology requested, provided its image provably equals twice the
    kernel below it; every zeroed row lies in that sublattice, so the
    omission is then harmless.  The proof obligation is that the invariant
    factors of the remaining rows are exactly (2, ..., 2) with multiplicity
    equal to the kernel rank.
    """
    if complex_.max_degree < up_to_degree + 1:
        raise ValueError("complex not built deep enough")
    if complex_.ring != RING_Z:
        raise ValueError("integral homology needs a Z complex")
    out = []
    for k in range(up_to_degree + 1):
        if k in complex_.indeterminate_rows:
            raise SignIndeterminateError(
                f"boundary in degree {k} has sign-indeterminate rows"
            )
        n_k = len(complex_.cells[k])
        rank_k = smith_normal_form(complex_.boundaries[k])[1] if k >= 1 else 0
        factors_k1, rank_k1 = smith_normal_form(complex_.boundaries[k + 1])
        if k + 1 in complex_.indeterminate_rows:
            kernel_rank = n_k - rank_k
            if factors_k1 != [2] * kernel_rank:
                raise SignIndeterminateError(
                    f"cannot certify homology in degree {k}: image of the "
                    "determined boundary rows is not twice the kernel"
                )
        free = n_k - rank_k - rank_k1
        torsion = tuple(f for f in factors_k1 if f > 1)
        out.append(HomologyGroup(free, torsion))
    return out


def mod2_betti(group: WeylGroup, theta: frozenset[int] | set[int]) -> list[int]:
    """dim H_k(F_Theta, Z/2) = number of length-k minimal representatives."""
    return poincare_mod2(group, theta)


def poincare_mod2(group: WeylGroup, theta: frozenset[int] | set[int]) -> list[int]:
    """Coefficients of the mod-2 Poincare polynomial (length generating
    function of W^Theta); all boundary maps vanish mod 2."""
    reps = group.minimal_representatives(frozenset(theta))
    top = max(w.length for w in reps)
    coeffs = [0] * (top + 1)
    for w in reps:
        coeffs[w.length] += 1
    return coeffs


# -- type A closed forms --------------------------------------------------


def theta_components(system: RootSystem, theta: frozenset[int] | set[int]) -> int:
    """Connected components of the sub-diagram spanned by theta, from the
    Cartan matrix adjacency (works for every family; in type A this is the
    number of maximal runs of consecutive indices)."""
    theta = set(theta)
    C = system.cartan.cartan_matrix
    seen: set[int] = set()
    components = 0
    for start in theta:
        if start in seen:
            continue
        components += 1
        stack = [start]
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            stack.extend(j for j in theta if j not in seen and C[i][j] != 0)
    return components


def h1_h2_closed_form(
    n: int, theta: frozenset[int] | set[int]
) -> tuple[HomologyGroup, HomologyGroup | None]:
    """Closed-form H_1 and H_2 of the type A_{n-1} partial flag manifold.

    theta is a set of 0-based simple-root indices in range(n-1).  H_1 needs
    n >= 3; H_2 needs n >= 4 and is returned as None for n == 3.
    """
    theta = frozenset(theta)
    if not theta <= set(range(n - 1)):
        raise ValueError("theta indices out of range")
    if n < 3:
        raise ValueError("formula out of stated range")
    h1 = HomologyGroup(0, (2,) * (n - len(theta) - 1))
    if n < 4:
        return h1, None
    system = _type_a_system(n)
    r = theta_components(system, theta)
    exponent = comb(n - len(theta) - 1, 2) + r - 1
    return h1, HomologyGroup(0, (2,) * exponent)


_type_a_cache: dict[int, RootSystem] = {}


def _type_a_system(n: int) -> RootSystem:
    from .rootsys import root_system

    if n not in _type_a_cache:
        _type_a_cache[n] = root_system("A", n - 1)
    return _type_a_cache[n]


def orientable_typeA(n: int, theta: frozenset[int] | set[int]) -> bool:
    """Parity criterion on the gaps of the complement positions.

    With complement positions d_1 < ... < d_k (1-based) and sentinels
    d_0 = 0, d_{k+1} = n, the manifold is orientable iff all consecutive
    differences share one parity.
    """
    theta = frozenset(theta)
    if not theta <= set(range(n - 1)):
        raise ValueError("theta indices out of range")
    complement = sorted(i + 1 for i in range(n - 1) if i not in theta)
    ds = [0, *complement, n]
    gaps = [b - a for a, b in zip(ds, ds[1:])]
    return len({g % 2 for g in gaps}) <= 1


def orientable_via_topcell(group: WeylGroup, theta: frozenset[int] | set[int]) -> bool:
    """Sign-independent orientability: the top cell of W^Theta has vanishing
    boundary iff kappa is odd for every cover staying inside W^Theta."""
    from .coeffs import kappa_via_height

    theta = frozenset(theta)
    reps = group.minimal_representatives(theta)
    top = max(reps, key=lambda w: w.length)
    rep_set = {w.matrix for w in reps}
    return all(
        kappa_via_height(group, pair) % 2 == 1
        for pair in group.bruhat_covers(top)
        if pair.w_prime.matrix in rep_set
    )
