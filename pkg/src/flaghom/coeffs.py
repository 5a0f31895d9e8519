"""Boundary-coefficient engine: the exponent kappa by independent routes,
coefficient magnitudes, and table-backed signs.

For a covering pair w = w'*s_gamma the coefficient is +-(1 + (-1)^kappa), so
kappa's parity decides magnitude 0 vs 2.  Three routes compute kappa from
different data (coroot height, the sigma sum over the suffix inversion set,
and the difference of inversion-set sums); they must always agree, and any
disagreement is treated as a bug, never voted away.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import Coeffs, RootSystem, height, root_system
from .weyl import CoveringPair, WeylGroup

SIGN_POLICY_EQUAL_WORDS = "equal-words"
SIGN_POLICY_NONE = "none"


class RouteDisagreementError(AssertionError):
    """Two mathematically equal kappa routes produced different values."""


def _require_split(system: RootSystem) -> None:
    if any(m != 1 for m in system.root_multiplicity.values()):
        raise ValueError("height formula requires split form")


def kappa_via_height(group: WeylGroup, pair: CoveringPair) -> int:
    """kappa = height of gamma's coroot in the dual root system."""
    _require_split(group.system)
    return group.system.coroot_height(pair.gamma)


def kappa_via_sigma(group: WeylGroup, pair: CoveringPair) -> int:
    """kappa = 1 - sigma, with sigma summed over the inversion set of the
    suffix u = s_{I+1} ... s_l of w's canonical word."""
    system = group.system
    word = pair.w.word
    i_deleted = word[pair.deleted_index - 1]
    suffix = word[pair.deleted_index :]
    sigma = sum(
        system.killing_number(i_deleted, delta) * system.multiplicity(delta)
        for delta in group.inversion_set_of_word(suffix)
    )
    return 1 - sigma


def kappa_via_phi(group: WeylGroup, pair: CoveringPair) -> int:
    """kappa from phi(w) - phi(w') = kappa * beta, phi summing the inversion set."""
    system = group.system
    n = system.rank

    def phi(word: tuple[int, ...]) -> list[int]:
        total = [0] * n
        for delta in group.inversion_set_of_word(word):
            m = system.multiplicity(delta)
            for k in range(n):
                total[k] += m * delta[k]
        return total

    diff = [a - b for a, b in zip(phi(pair.w.word), phi(pair.w_prime.word))]
    beta = pair.beta
    kappa = None
    for d, b in zip(diff, beta):
        if b == 0:
            if d != 0:
                raise AssertionError("phi-difference inconsistency")
            continue
        q, r = divmod(d, b)
        if r != 0 or (kappa is not None and q != kappa):
            raise AssertionError("phi-difference inconsistency")
        kappa = q
    if kappa is None:
        raise AssertionError("phi-difference inconsistency")
    return kappa


_DUAL_FAMILY = {"B": "C", "C": "B", "F": "F", "G": "G"}
_dual_system_cache: dict[tuple[str, int], RootSystem] = {}


def kappa_via_dual_height_remarks(group: WeylGroup, pair: CoveringPair) -> int:
    """kappa as a plain height after transporting gamma to the dual system
    realized concretely: diagram reversal for F4/G2, relabeling B <-> C.

    The transported coefficient vector must itself be a root of the target
    system, which is the content of the self-duality / B-C duality remarks.
    """
    system = group.system
    family = system.family
    if family not in _DUAL_FAMILY:
        raise ValueError("remark route not applicable")
    dual_coeffs = system.coroot(pair.gamma)
    if family in ("F", "G"):
        # dual simple roots are the same diagram read backwards
        image: Coeffs = tuple(reversed(dual_coeffs))
        target = system
    else:
        key = (_DUAL_FAMILY[family], system.rank)
        if key not in _dual_system_cache:
            _dual_system_cache[key] = root_system(*key)
        target = _dual_system_cache[key]
        image = dual_coeffs
    if not target.is_root(image):
        raise AssertionError("transported root is not a root of the dual system")
    return height(image)


@dataclass(frozen=True)
class KappaReport:
    """All kappa routes for one covering pair, plus magnitude and sign."""

    pair: CoveringPair
    kappa_height: int
    kappa_sigma: int
    kappa_phi: int
    kappa_typeA: int | None
    magnitude: int
    sign: int | None

    @property
    def kappa(self) -> int:
        return self.kappa_height

    @property
    def value(self) -> int | None:
        """Signed coefficient, when determined (0 needs no sign)."""
        if self.magnitude == 0:
            return 0
        return None if self.sign is None else self.sign * self.magnitude


def coefficient(
    group: WeylGroup,
    pair: CoveringPair,
    sign_policy: str = SIGN_POLICY_EQUAL_WORDS,
) -> tuple[int, int | None]:
    """(magnitude, sign) of c(w, w').

    Magnitude is 0 or 2 from kappa's parity (height and sigma routes are both
    evaluated and must agree).  A sign is emitted only when the deletion of
    position I from w's canonical word reproduces w's cover letter-by-letter,
    in which case the characteristic-map degree is 1 and the sign is (-1)^I;
    otherwise the sign is None (unknown).
    """
    kh = kappa_via_height(group, pair)
    ks = kappa_via_sigma(group, pair)
    if kh != ks:
        raise RouteDisagreementError(
            f"kappa routes disagree on {pair}: height={kh} sigma={ks}"
        )
    magnitude = 0 if kh % 2 else 2
    sign: int | None = None
    if magnitude and sign_policy == SIGN_POLICY_EQUAL_WORDS:
        word = pair.w.word
        deleted = word[: pair.deleted_index - 1] + word[pair.deleted_index :]
        if deleted == pair.w_prime.word:
            sign = (-1) ** pair.deleted_index
    return magnitude, sign


def kappa_report(
    group: WeylGroup,
    pair: CoveringPair,
    sign_policy: str = SIGN_POLICY_EQUAL_WORDS,
) -> KappaReport:
    """Evaluate every applicable route; hard-fail on any disagreement."""
    kh = kappa_via_height(group, pair)
    ks = kappa_via_sigma(group, pair)
    kp = kappa_via_phi(group, pair)
    values = {kh, ks, kp}
    ka: int | None = None
    if group.system.family == "A":
        from .weyl import covers_oracle_typeA

        positions = covers_oracle_typeA(pair.w.one_line, pair.w_prime.one_line)
        if positions is None:
            raise AssertionError("covering pair rejected by the one-line oracle")
        ka = positions[1] - positions[0]
        values.add(ka)
    if group.system.family in _DUAL_FAMILY:
        values.add(kappa_via_dual_height_remarks(group, pair))
    if len(values) != 1:
        raise RouteDisagreementError(f"kappa routes disagree on {pair}: {values}")
    magnitude, sign = coefficient(group, pair, sign_policy)
    return KappaReport(pair, kh, ks, kp, ka, magnitude, sign)
