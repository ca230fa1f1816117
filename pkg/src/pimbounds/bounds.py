"""Lower bounds for dimensions of projective indecomposable modules.

Throughout, bounds are expressed through the multiplier c = dim(PIM) / |G|_p:
the dimension of a projective indecomposable module in defining
characteristic is c times the order of a Sylow p-subgroup, and every rule
implemented here produces a certified integer lower bound for c.

Rules available:

* exact rank-1 values (type A over any prime power);
* torus-character orbit sizes (split groups);
* the minimal-character-degree bound through Harish-Chandra restriction
  (large linear, even orthogonal and exceptional E groups);
* parabolic descent with the factor-2 strengthening for classical groups;
* the 2^|J| bound from an independent set of Levi factors of type A1;
* embedded known minima for a handful of small groups.

Every bound comes wrapped in a :class:`BoundCertificate` recording the chain
of rules that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .charlattice import orbit_size
from .rootdata import (
    GroupSpec,
    SuzukiReeField,
    UnsupportedGroupError,
    factor_prime_power,
)
from .weights import (
    Weight,
    descend_weight,
    doubling_applicable,
    independent_violating_set,
    is_steinberg,
    socle_trivial_on_borel,
    steinberg_weight,
    twist_stable_subsets,
    twisted_bn_rank,
)


@dataclass(frozen=True)
class ChainStep:
    rule: str
    value: int
    detail: str

    def to_json(self) -> dict:
        return {"rule": self.rule, "value": self.value, "detail": self.detail}


@dataclass(frozen=True)
class BoundCertificate:
    """A certified lower bound for the PIM multiplier of one weight."""

    group: str
    weight: tuple[int, ...]
    bound: int
    exact: bool
    steps: tuple[ChainStep, ...]

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "weight": list(self.weight),
            "bound": self.bound,
            "exact": self.exact,
            "steps": [s.to_json() for s in self.steps],
        }


# ---------------------------------------------------------------------------
# Exact rank-1 values
# ---------------------------------------------------------------------------


def rank_one_multiplier(q: int, m: int) -> int:
    """Exact PIM multiplier for SL(2, q) at the restricted weight (m).

    With q = p^k and 0 <= m <= q-1: the Steinberg weight gives 1, the zero
    weight gives 2^k - 1, and otherwise the value is 2^r where r counts the
    base-p digits of m (k digits, leading zeros included) different from p-1.
    """
    p, k = factor_prime_power(q)
    if not 0 <= m <= q - 1:
        raise ValueError(f"weight {m} is not restricted for q={q}")
    if m == q - 1:
        return 1
    if m == 0:
        return 2 ** k - 1
    digits = []
    mm = m
    for _ in range(k):
        digits.append(mm % p)
        mm //= p
    r = sum(1 for d in digits if d != p - 1)
    return 2 ** r


# ---------------------------------------------------------------------------
# Embedded known minima for small groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KnownMinimum:
    """A certified lower bound for every non-Steinberg PIM of one group."""

    value: int
    rule: str
    attained: bool  # some PIM is known to reach the value
    zero_weight_value: int | None = None  # exact multiplier of the 1-PIM, if known


def known_minimum(spec: GroupSpec) -> KnownMinimum | None:
    """Embedded lower bound for non-Steinberg multipliers, if one exists."""
    d = spec.datum
    fam, rank, twist = d.family, d.rank, d.twist_order
    if isinstance(spec.field, SuzukiReeField):
        if fam == "B":
            if spec.field.q_squared > 2:
                return KnownMinimum(4, "suzuki-minimum", attained=False)
            return None
        if fam == "F4" and spec.field.e == 0:
            return KnownMinimum(14, "small-group-table", attained=False)
        return None
    q = spec.q
    p, k = factor_prime_power(q)
    # Canonicalise the rank-2 symplectic/orthogonal coincidence.
    if fam == "B" and rank == 2:
        fam = "C"
    if fam == "C" and rank == 2 and twist == 1:
        if q == 2:
            return KnownMinimum(3, "small-group-table", attained=False)
        if q == 3:
            return KnownMinimum(3, "small-group-table", attained=False,
                                zero_weight_value=2)
        if k == 1 and p > 3:
            return KnownMinimum(3, "rank2-prime-field", attained=False)
    if fam == "A" and rank == 2 and twist == 1 and k == 1 and p > 2:
        return KnownMinimum(2, "rank2-prime-field", attained=False)
    if fam == "G2" and twist == 1:
        if q == 2:
            return KnownMinimum(5, "small-group-table", attained=True)
        if k == 1 and p > 2:
            return KnownMinimum(6, "rank2-prime-field", attained=False)
    if fam == "A" and rank == 2 and twist == 2 and k == 1 and p > 2:
        return KnownMinimum(3, "unitary3-prime-field", attained=False)
    if fam == "A" and rank == 3 and twist == 2 and q == 2:
        return KnownMinimum(4, "small-group-table", attained=True)
    if fam == "A" and rank == 4 and twist == 2 and q == 2:
        return KnownMinimum(5, "small-group-table", attained=True)
    if fam == "D" and rank == 4 and twist == 3 and q == 2:
        return KnownMinimum(15, "small-group-table", attained=False)
    return None


# ---------------------------------------------------------------------------
# Individual bound rules
# ---------------------------------------------------------------------------


def ballard_bound(spec: GroupSpec, weight: Weight) -> int:
    """Orbit-size bound: c is at least the Weyl orbit length of the torus
    character obtained by reducing the weight modulo q-1.  Split groups only.
    """
    return orbit_size(spec, weight.coeffs)


_HC_LARGE = {"A": lambda rank: rank + 1, "D": lambda rank: 2 * rank,
             "E6": lambda rank: 27, "E7": lambda rank: 28,
             "E8": lambda rank: 120}


def hc_bound(spec: GroupSpec, weight: Weight) -> tuple[int, str]:
    """Minimal-degree bound through Harish-Chandra restriction.

    Scope: split groups of type A with rank >= 4, split type D with rank >= 4
    and q even, and E6/E7/E8.  When the Borel socle of the simple module is
    nontrivial the bound is the smallest faithful-permutation-like degree m
    (rank+1, 2*rank, 27, 28, 120); when it is trivial the bound is the
    minimum dimension of a nonlinear Weyl-group character.
    """
    d = spec.datum
    if isinstance(spec.field, SuzukiReeField) or d.twist_order != 1:
        raise UnsupportedGroupError("the restriction bound needs a split group")
    in_scope = (
        (d.family == "A" and d.rank >= 4)
        or (d.family == "D" and d.rank >= 4 and spec.q % 2 == 0)
        or d.family in ("E6", "E7", "E8")
    )
    if not in_scope:
        raise UnsupportedGroupError(
            f"the restriction bound is not stated for {spec.describe()}")
    if is_steinberg(spec, weight):
        return 1, "Steinberg module: multiplier exactly 1"
    if socle_trivial_on_borel(spec, weight):
        return (d.min_nonlinear_degree,
                "trivial Borel socle: minimal nonlinear Weyl character degree")
    return (_HC_LARGE[d.family](d.rank),
            "nontrivial Borel socle: minimal nontrivial permutation degree")


def independent_set_bound(spec: GroupSpec, weight: Weight) -> tuple[int, int]:
    """The 2^|J| bound from an independent set of A1 Levi factors.

    Returns ``(bound, set_size)``.  Split groups of rank >= 2 only; nodes
    must carry a coefficient outside {0, q-1}.
    """
    if spec.datum.rank < 2:
        raise UnsupportedGroupError("the independent-set bound needs rank >= 2")
    parabolic = independent_violating_set(spec, weight)
    size = len(parabolic.nodes)
    return (2 ** size if size else 1), size


# ---------------------------------------------------------------------------
# Recursive descent bound
# ---------------------------------------------------------------------------

_DESCENT_MEMO: dict = {}


def _group_key(spec: GroupSpec):
    d = spec.datum
    if isinstance(spec.field, SuzukiReeField):
        return (d.family, d.rank, d.twist_order, "SR", spec.field.p, spec.field.e)
    return (d.family, d.rank, d.twist_order, spec.q)


def descent_bound(spec: GroupSpec, weight: Weight) -> int:
    """Best multiplier bound obtainable by recursion through parabolics.

    Combines: exact rank-1 values, embedded known minima, the independent-set
    bound, plain descent (the multiplier of a group bounds below the
    multiplier of any ambient group restricting to it), and the factor-2
    strengthening along the designated type-A parabolic of the classical
    groups.
    """
    key = (_group_key(spec), weight.coeffs)
    if key in _DESCENT_MEMO:
        return _DESCENT_MEMO[key]
    _DESCENT_MEMO[key] = 1  # guard against accidental cycles
    if is_steinberg(spec, weight):
        _DESCENT_MEMO[key] = 1
        return 1
    d = spec.datum
    if d.family == "A" and d.rank == 1 and d.twist_order == 1:
        value = rank_one_multiplier(spec.q, weight[1])
        _DESCENT_MEMO[key] = value
        return value
    best = 1
    table = known_minimum(spec)
    if table is not None:
        if weight.is_zero() and table.zero_weight_value is not None:
            best = max(best, table.zero_weight_value)
        else:
            best = max(best, table.value)
    if d.twist_order == 1 and not isinstance(spec.field, SuzukiReeField) and d.rank >= 2:
        value, _size = independent_set_bound(spec, weight)
        best = max(best, value)
    if twisted_bn_rank(d) >= 2 and not (
            isinstance(spec.field, SuzukiReeField) and d.family == "F4"):
        for parabolic in twist_stable_subsets(d):
            try:
                descendants = descend_weight(spec, parabolic, weight)
            except UnsupportedGroupError:
                continue
            for desc in descendants:
                best = max(best, descent_bound(desc.spec, desc.weight))
        try:
            rule = doubling_applicable(spec, weight)
        except UnsupportedGroupError:
            rule = None
        if rule is not None and rule.applicable:
            descendants = descend_weight(spec, rule.parabolic, weight)
            inner = max(descent_bound(desc.spec, desc.weight)
                        for desc in descendants)
            best = max(best, 2 * inner)
    _DESCENT_MEMO[key] = best
    return best


# ---------------------------------------------------------------------------
# Combined certificate
# ---------------------------------------------------------------------------


def best_bound(spec: GroupSpec, weight: Weight) -> BoundCertificate:
    """Best certified lower bound for the multiplier of one restricted weight.

    Runs every applicable rule and returns a certificate whose chain records
    each rule's contribution.  The bound is exact for the Steinberg weight and
    for rank-1 groups of type A.
    """
    steps: list[ChainStep] = []
    d = spec.datum
    if is_steinberg(spec, weight):
        steps.append(ChainStep("steinberg", 1,
                               "defect-zero module: multiplier exactly 1"))
        return BoundCertificate(spec.describe(), weight.coeffs, 1, True,
                                tuple(steps))
    exact = False
    if d.family == "A" and d.rank == 1 and d.twist_order == 1:
        value = rank_one_multiplier(spec.q, weight[1])
        steps.append(ChainStep("rank1-exact", value,
                               "exact rank-1 multiplier from base-p digits"))
        exact = True
    table = known_minimum(spec)
    if table is not None:
        if weight.is_zero() and table.zero_weight_value is not None:
            steps.append(ChainStep(table.rule, table.zero_weight_value,
                                   "embedded exact value for the 1-PIM"))
            exact = True
        else:
            steps.append(ChainStep(table.rule, table.value,
                                   "embedded minimum over non-Steinberg modules"))
    if d.twist_order == 1 and not isinstance(spec.field, SuzukiReeField):
        steps.append(ChainStep(
            "torus-orbit", ballard_bound(spec, weight),
            "Weyl orbit length of the weight reduced modulo q-1"))
        if d.rank >= 2:
            value, size = independent_set_bound(spec, weight)
            if size:
                steps.append(ChainStep(
                    "independent-set", value,
                    f"2^{size} from an independent set of A1 Levi factors"))
    try:
        value, reason = hc_bound(spec, weight)
        steps.append(ChainStep("hc-restriction", value, reason))
    except UnsupportedGroupError:
        pass
    if twisted_bn_rank(d) >= 2 and not (
            isinstance(spec.field, SuzukiReeField) and d.family == "F4"):
        steps.append(ChainStep("parabolic-descent", descent_bound(spec, weight),
                               "recursion through twist-stable parabolics"))
    bound = max((s.value for s in steps), default=1)
    return BoundCertificate(spec.describe(), weight.coeffs, max(bound, 1),
                            exact, tuple(steps))


# ---------------------------------------------------------------------------
# Classification: can a PIM be as small as a Sylow p-subgroup?
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SylowDimensionVerdict:
    """Answer to: does some PIM have dimension exactly |G|_p (besides the
    Steinberg module, which always does)?"""

    group: str
    answer: str  # "yes" | "no" | "undecided"
    reasons: tuple[str, ...]
    witnesses: tuple[tuple[int, ...], ...] = field(default=())

    def to_json(self) -> dict:
        return {"group": self.group, "answer": self.answer,
                "reasons": list(self.reasons),
                "witnesses": [list(w) for w in self.witnesses]}


def classify_dim_equal_sylow(spec: GroupSpec) -> SylowDimensionVerdict:
    """Decide whether a non-Steinberg PIM of dimension |G|_p can exist.

    "yes" is returned exactly for the three known families of exceptions:
    SL(2, p) (the projective cover of the trivial module; for p = 7 note the
    exceptional isomorphism with the simple group of order 168, which also
    appears below as the linear group of degree 3 over F_2), SL(3, 2), and
    the smallest Ree group of type G2 (the automorphism group of SL(2, 8)).
    "no" is returned only when embedded evidence or a verified exhaustive
    analysis applies; otherwise "undecided".
    """
    d = spec.datum
    group_name = spec.describe()

    def verdict(answer, reasons, witnesses=()):
        return SylowDimensionVerdict(group_name, answer, tuple(reasons),
                                     tuple(witnesses))

    if isinstance(spec.field, SuzukiReeField):
        if d.family == "G2":
            if spec.field.e == 0:
                return verdict("yes", [
                    "the smallest Ree group of type G2 is the automorphism "
                    "group of SL(2, 8); its 1-PIM has dimension |G|_p",
                ], witnesses=[(0, 0)])
            from .caseanalysis import ree_verify
            outcome = ree_verify(spec.field.e)
            return verdict("no", [
                f"exhaustive decomposition analysis: {outcome.outcome} "
                f"({outcome.candidates_considered} candidates eliminated)",
            ])
        if d.family == "B":
            if spec.field.q_squared > 2:
                return verdict("no", ["every non-Steinberg multiplier is >= 4"])
            return verdict("undecided",
                           ["the smallest Suzuki group is solvable; "
                            "no evidence embedded"])
        if d.family == "F4":
            if spec.field.e == 0:
                return verdict("no", ["every non-Steinberg multiplier is >= 14"])
            return verdict("undecided", ["no evidence embedded"])

    q = spec.q
    p, k = factor_prime_power(q)
    fam, rank, twist = d.family, d.rank, d.twist_order

    if fam == "A" and rank == 1 and twist == 1:
        if k == 1:
            return verdict("yes", [
                "for SL(2, p) the projective cover of the trivial module has "
                "multiplier 2^1 - 1 = 1",
            ], witnesses=[(0,)])
        return verdict("no", [
            "exact rank-1 values: every non-Steinberg multiplier is >= 2 "
            "once the field is a proper extension",
        ])
    if fam == "A" and rank == 2 and twist == 1:
        if q == 2:
            return verdict("yes", [
                "for SL(3, 2) the projective cover of the trivial module has "
                "dimension 8 = |G|_p (this group is also the projective "
                "special linear group of degree 2 over F_7)",
            ], witnesses=[(0, 0)])
        if k == 1:
            return verdict("no", ["every non-Steinberg multiplier is >= 2"])
        return verdict("undecided", ["no evidence embedded"])
    if fam == "A" and rank == 2 and twist == 2:
        if k == 1 and p > 2:
            return verdict("no", ["every non-Steinberg multiplier is >= 3"])
        return verdict("undecided", ["no evidence embedded"])
    if fam == "A" and rank == 3 and twist == 2:
        if q == 2:
            return verdict("no", ["every non-Steinberg multiplier is >= 4"])
        if k == 1 and p > 2:
            from .caseanalysis import u4_verify
            outcome = u4_verify(p)
            return verdict("no", [
                f"exhaustive decomposition analysis: {outcome.outcome} "
                f"({outcome.candidates_considered} candidates eliminated)",
            ])
        return verdict("undecided", ["no evidence embedded"])
    if fam == "A" and rank == 4 and twist == 2 and q == 2:
        return verdict("no", ["every non-Steinberg multiplier is >= 5"])
    if fam == "D" and rank == 4 and twist == 3:
        if q == 2:
            return verdict("no", ["every non-Steinberg multiplier is >= 15"])
        if k == 1 and p > 2:
            from .caseanalysis import d4_verify
            outcome = d4_verify(p)
            return verdict("no", [
                f"cyclotomic divisibility analysis: {outcome.outcome}",
            ])
        return verdict("undecided", ["no evidence embedded"])
    if (fam == "C" or (fam == "B" and rank == 2)) and rank == 2 and twist == 1:
        if q in (2, 3) or (k == 1 and p > 3):
            return verdict("no", ["every non-Steinberg multiplier is >= 2"])
        return verdict("undecided", ["no evidence embedded"])
    if fam == "G2" and twist == 1:
        if q == 2 or (k == 1 and p > 2):
            return verdict("no", ["every non-Steinberg multiplier is >= 5"
                                  if q == 2 else
                                  "every non-Steinberg multiplier is >= 6"])
        return verdict("undecided", ["no evidence embedded"])
    hc_scope = (
        (fam == "A" and rank >= 4 and twist == 1)
        or (fam == "D" and rank >= 4 and twist == 1 and q % 2 == 0)
        or (fam in ("E6", "E7", "E8") and twist == 1)
    )
    if hc_scope:
        return verdict("no", [
            "the restriction bound gives multiplier >= 2 for every "
            "non-Steinberg restricted weight",
        ])
    return verdict("undecided", ["no evidence embedded"])
