"""Restricted weights, parabolic descent, and the minimal-candidate sieve.

A simple module for a finite group of Lie type in defining characteristic is
labelled by a restricted highest weight.  Restricting its projective cover to
a parabolic subgroup relates it to modules for a smaller group of Lie type
over the same or an extension field; this module implements that descent on
the level of weights, together with the structural predicates (Steinberg /
one-dimensional restrictions, trivial Borel socle) and the sieve that lists
the weights whose projective cover could still have dimension equal to the
order of a Sylow p-subgroup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rootdata import (
    GroupSpec,
    IntegerField,
    RootDatum,
    SuzukiReeField,
    UnsupportedGroupError,
    build_root_datum,
)


class UnsupportedSubdiagramError(UnsupportedGroupError):
    """A parabolic descent produced a configuration outside the toolkit."""


@dataclass(frozen=True)
class Weight:
    """A dominant weight in fundamental-weight coordinates."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if any(c < 0 for c in self.coeffs):
            raise ValueError("weights handled here are dominant")

    def __getitem__(self, node: int) -> int:
        """Coefficient at a 1-based node."""
        return self.coeffs[node - 1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def coefficient_ranges(spec: GroupSpec) -> tuple[int, ...]:
    """Per-node coefficient range sizes for the restricted weights.

    Integer-q groups restrict every coefficient to 0..q-1.  For the Suzuki
    and Ree groups the restricted range is 0..p^e-1 at long nodes and
    0..p^(e+1)-1 at short nodes, so the total count is again the order q^2n of
    the relevant torus power.
    """
    d = spec.datum
    if isinstance(spec.field, SuzukiReeField):
        q1 = spec.field.q1
        return tuple(q1 if is_long else spec.field.p * q1 for is_long in d.long_nodes)
    return (spec.q,) * d.rank


def enumerate_restricted_weights(spec: GroupSpec):
    """All restricted weights, in lexicographic order of their coordinates."""
    for coeffs in itertools.product(*(range(r) for r in coefficient_ranges(spec))):
        yield Weight(coeffs)


def restricted_weight_count(spec: GroupSpec) -> int:
    count = 1
    for r in coefficient_ranges(spec):
        count *= r
    return count


def steinberg_weight(spec: GroupSpec) -> Weight:
    """The weight of the Steinberg module: maximal in every coordinate."""
    return Weight(tuple(r - 1 for r in coefficient_ranges(spec)))


def is_steinberg(spec: GroupSpec, weight: Weight) -> bool:
    return weight == steinberg_weight(spec)


def steinberg_dimension(spec: GroupSpec) -> int:
    """Dimension of the Steinberg module = order of a Sylow p-subgroup.

    For an integer field size this is q^N with N the number of positive
    roots; for the Suzuki and Ree groups it is p^(N(2e+1)/2), e.g.
    3^(3(2e+1)) in type G2 (where N = 6).
    """
    n_pos = spec.datum.positive_root_count
    if isinstance(spec.field, SuzukiReeField):
        exponent2 = n_pos * (2 * spec.field.e + 1)
        if exponent2 % 2:
            raise UnsupportedGroupError("odd p-exponent; inconsistent datum")
        return spec.field.p ** (exponent2 // 2)
    return spec.q ** n_pos


# ---------------------------------------------------------------------------
# Parabolic subsets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParabolicSubset:
    """A set of simple-root nodes defining a standard parabolic subgroup."""

    datum: RootDatum
    nodes: frozenset[int]

    def __post_init__(self):
        bad = [i for i in self.nodes if not 1 <= i <= self.datum.rank]
        if bad:
            raise ValueError(f"node(s) {bad} out of range")

    def is_twist_stable(self) -> bool:
        return {self.datum.apply_perm(i) for i in self.nodes} == set(self.nodes)

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the induced subdiagram, sorted."""
        adjacency = self.datum.adjacency()
        remaining = set(self.nodes)
        comps = []
        while remaining:
            seed = min(remaining)
            comp = {seed}
            frontier = [seed]
            while frontier:
                cur = frontier.pop()
                for nb in adjacency[cur] & remaining:
                    if nb not in comp:
                        comp.add(nb)
                        frontier.append(nb)
            remaining -= comp
            comps.append(tuple(sorted(comp)))
        return tuple(sorted(comps))


def twist_stable_subsets(datum: RootDatum, *, proper: bool = True,
                         nonempty: bool = True):
    """All twist-stable node subsets (unions of diagram-symmetry orbits)."""
    orbits = []
    seen = set()
    for i in range(1, datum.rank + 1):
        if i in seen:
            continue
        orb = datum.perm_orbit(i)
        seen.update(orb)
        orbits.append(orb)
    for mask in range(1 << len(orbits)):
        nodes = frozenset(
            n for k, orb in enumerate(orbits) if mask >> k & 1 for n in orb)
        if nonempty and not nodes:
            continue
        if proper and len(nodes) == datum.rank:
            continue
        yield ParabolicSubset(datum, nodes)


def twisted_bn_rank(datum: RootDatum) -> int:
    """Number of diagram-symmetry orbits on the nodes (the relative rank)."""
    seen = set()
    count = 0
    for i in range(1, datum.rank + 1):
        if i not in seen:
            seen.update(datum.perm_orbit(i))
            count += 1
    return count


# ---------------------------------------------------------------------------
# Subdiagram classification
# ---------------------------------------------------------------------------


def _classify_subdiagram(datum: RootDatum, comp: tuple[int, ...]):
    """Classify a connected subdiagram and order its nodes Bourbaki-style.

    Returns ``(family, order)`` where ``order`` lists the original node labels
    in the Bourbaki numbering of the classified family.  Rank-2 subdiagrams
    with a double bond are canonicalised to family C (short node first).
    """
    m = len(comp)
    adjacency = datum.adjacency()
    nb = {i: sorted(adjacency[i] & set(comp)) for i in comp}

    def bond(i, j):
        return datum.cartan[i - 1][j - 1] * datum.cartan[j - 1][i - 1]

    bonds = {frozenset((i, j)): bond(i, j)
             for i in comp for j in nb[i] if i < j}
    if m == 1:
        return "A", (comp[0],)
    if any(v == 3 for v in bonds.values()):
        if m != 2:
            raise UnsupportedSubdiagramError("triple bond in a larger subdiagram")
        short = next(i for i in comp if not datum.long_nodes[i - 1])
        other = next(i for i in comp if i != short)
        return "G2", (short, other)

    degrees = {i: len(nb[i]) for i in comp}
    branch_nodes = [i for i in comp if degrees[i] >= 3]

    if any(v == 2 for v in bonds.values()):
        if branch_nodes:
            raise UnsupportedSubdiagramError("double bond with a branch node")
        if sum(1 for v in bonds.values() if v == 2) > 1:
            raise UnsupportedSubdiagramError("two double bonds in one chain")
        chain = _order_chain(comp, nb)
        longs = [i for i in chain if datum.long_nodes[i - 1]]
        shorts = [i for i in chain if not datum.long_nodes[i - 1]]
        if m == 2 or len(longs) == 1:
            # Family C: short nodes first, the unique long node last.
            if datum.long_nodes[chain[0] - 1]:
                chain = chain[::-1]
            return "C", tuple(chain)
        if len(shorts) == 1:
            # Family B: long nodes first, the unique short node last.
            if not datum.long_nodes[chain[0] - 1]:
                chain = chain[::-1]
            return "B", tuple(chain)
        if len(longs) == 2 and len(shorts) == 2 and m == 4:
            # The full F4 diagram (only possible inside F4 itself).
            if not datum.long_nodes[chain[0] - 1]:
                chain = chain[::-1]
            return "F4", tuple(chain)
        raise UnsupportedSubdiagramError("unrecognised non-simply-laced chain")

    # Simply laced.
    if not branch_nodes:
        chain = _order_chain(comp, nb)
        return "A", tuple(chain)
    if len(branch_nodes) > 1 or degrees[branch_nodes[0]] > 3:
        raise UnsupportedSubdiagramError("subdiagram is not of finite type")
    center = branch_nodes[0]
    arms = []
    for start in nb[center]:
        arm = [start]
        prev = center
        while True:
            ext = [x for x in nb[arm[-1]] if x != prev]
            if not ext:
                break
            prev = arm[-1]
            arm.append(ext[0])
        arms.append(arm)
    arms.sort(key=len)
    lengths = tuple(len(a) for a in arms)
    if lengths[0] != 1:
        raise UnsupportedSubdiagramError("subdiagram is not of finite type")
    if lengths[1] == 1:
        # Type D: long arm 1..k, then center, then the two short arms.
        long_arm = arms[2][::-1]
        order = tuple(long_arm) + (center, arms[0][0], arms[1][0])
        return "D", order
    if lengths[1] == 2 and lengths[2] in (2, 3, 4):
        # Types E6/E7/E8 in Bourbaki numbering: node 2 is the length-1 arm,
        # nodes 1,3 the length-2 arm, node 4 the center, 5.. the long arm.
        family = {2: "E6", 3: "E7", 4: "E8"}[lengths[2]]
        short2 = arms[1]
        order = (short2[1], arms[0][0], short2[0], center) + tuple(arms[2])
        return family, order
    raise UnsupportedSubdiagramError("subdiagram is not of finite type")


def _order_chain(comp, nb):
    ends = [i for i in comp if len(nb[i]) <= 1]
    if len(comp) == 1:
        return list(comp)
    start = min(ends)
    chain = [start]
    prev = None
    while len(chain) < len(comp):
        nxt = [x for x in nb[chain[-1]] if x != prev]
        prev = chain[-1]
        chain.append(nxt[0])
    return chain


def _induced_twist(datum: RootDatum, order: tuple[int, ...], family: str):
    """Twist order and sanity check for the symmetry induced on a component.

    ``order`` lists original nodes in the Bourbaki numbering of the component;
    the component must be stable under the diagram symmetry.  Returns the
    order of the induced permutation.
    """
    perm = {node: datum.apply_perm(node) for node in order}
    if set(perm.values()) != set(order):
        raise ValueError("component is not stable under the symmetry")
    if all(perm[n] == n for n in order):
        return 1
    # Order of the induced permutation.
    k = 1
    current = dict(perm)
    while any(current[n] != n for n in order):
        current = {n: perm[current[n]] for n in order}
        k += 1
    if family == "A" and k == 2:
        positions = {node: idx for idx, node in enumerate(order)}
        rank = len(order)
        if all(positions[perm[n]] == rank - 1 - positions[n] for n in order):
            return 2
    raise UnsupportedSubdiagramError(
        f"induced symmetry of order {k} on a component of type {family} "
        f"is outside the toolkit")


# ---------------------------------------------------------------------------
# Descent of weights to parabolic Levi factors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Descendant:
    """One Levi component after descent: a smaller group and a weight."""

    spec: GroupSpec
    weight: Weight
    original_nodes: tuple[int, ...]


def _validate_descent_input(spec: GroupSpec, parabolic: ParabolicSubset,
                            weight: Weight) -> None:
    if parabolic.datum is not spec.datum:
        raise ValueError("parabolic subset belongs to a different root datum")
    if not parabolic.nodes:
        raise ValueError("descent needs a nonempty node set")
    if len(parabolic.nodes) == spec.datum.rank:
        raise ValueError("descent needs a proper node set")
    if not parabolic.is_twist_stable():
        raise ValueError("descent needs a twist-stable node set")
    if len(weight.coeffs) != spec.datum.rank:
        raise ValueError("weight length does not match the rank")
    ranges = coefficient_ranges(spec)
    if any(weight.coeffs[i] >= ranges[i] for i in range(spec.datum.rank)):
        raise ValueError("weight is not restricted for this group")


def descend_weight(spec: GroupSpec, parabolic: ParabolicSubset,
                   weight: Weight) -> tuple[Descendant, ...]:
    """Restrict a weight to the Levi factor of a twist-stable parabolic.

    The Frobenius permutes the connected components of the subdiagram.  A
    component fixed by the symmetry gives a group of the same kind (twisted if
    the induced symmetry is nontrivial) over the same field, keeping its
    coefficients.  An orbit of a >= 2 components merges into one split group
    over the extension field q^a with coefficients
    ``a_j + q * a_{f(j)} (+ q^2 * a_{f(f(j))})`` read along the orbit; for the
    Suzuki and Ree groups the multiplier q is replaced by p^e and the
    descendant lives over p^(2e+1).
    """
    _validate_descent_input(spec, parabolic, weight)
    datum = spec.datum
    comps = parabolic.components()
    comp_of_node = {}
    for comp in comps:
        for n in comp:
            comp_of_node[n] = comp
    unprocessed = set(comps)
    out = []
    suzuki_ree = isinstance(spec.field, SuzukiReeField)
    for comp in comps:
        if comp not in unprocessed:
            continue
        image = comp_of_node[datum.apply_perm(comp[0])]
        if image == comp:
            # Component fixed by the symmetry.
            unprocessed.discard(comp)
            family, order = _classify_subdiagram(datum, comp)
            twist = _induced_twist(datum, order, family)
            if suzuki_ree:
                if twist == 1:
                    sub = build_root_datum(family, len(order), 1)
                    field = IntegerField(spec.field.p ** (2 * spec.field.e + 1))
                else:
                    # A symmetry-fixed pair inside the F4 diagram descends to
                    # a Suzuki group of type B2 with the same parameter.
                    if family != "C" or len(order) != 2:
                        raise UnsupportedSubdiagramError(
                            "unexpected twisted component for a Suzuki-Ree group")
                    sub = build_root_datum("B", 2, 2)
                    long_first = sorted(
                        order, key=lambda n: not datum.long_nodes[n - 1])
                    order = tuple(long_first)
                    field = spec.field
                dspec = GroupSpec(sub, field)
            else:
                sub = build_root_datum(family, len(order), twist)
                dspec = GroupSpec(sub, IntegerField(spec.q))
            dweight = Weight(tuple(weight[n] for n in order))
            out.append(Descendant(dspec, dweight, order))
            continue
        # Orbit of length a >= 2: collect the component orbit.
        orbit = [comp]
        cur = image
        while cur != comp:
            orbit.append(cur)
            cur = comp_of_node[datum.apply_perm(cur[0])]
        for c in orbit:
            unprocessed.discard(c)
        a = len(orbit)
        family, order = _classify_subdiagram(datum, comp)
        if suzuki_ree:
            if a != 2:
                raise UnsupportedSubdiagramError(
                    "Suzuki-Ree symmetries have order 2 on components")
            multipliers = (1, spec.field.p ** spec.field.e)
            field = IntegerField(spec.field.p ** (2 * spec.field.e + 1))
            # Read the orbit starting from the long representative.
            if not datum.long_nodes[order[0] - 1]:
                order = tuple(datum.apply_perm(n) for n in order)
        else:
            multipliers = tuple(spec.q ** k for k in range(a))
            field = IntegerField(spec.q ** a)
        coeffs = []
        for n in order:
            total = 0
            node = n
            for mult in multipliers:
                total += mult * weight[node]
                node = datum.apply_perm(node)
            coeffs.append(total)
        sub = build_root_datum(family, len(order), 1)
        out.append(Descendant(GroupSpec(sub, field), Weight(tuple(coeffs)), order))
    return tuple(out)


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DescentFlags:
    """Structure of the restriction of a simple module to a parabolic."""

    levi_restriction_is_linear: bool
    levi_restriction_is_steinberg: bool


def descent_flags(spec: GroupSpec, parabolic: ParabolicSubset,
                  weight: Weight) -> DescentFlags:
    """Linearity / Steinberg detection for the restriction to a Levi factor.

    The restriction is one-dimensional exactly when every coefficient on the
    parabolic nodes vanishes, and has full defect zero (Steinberg) exactly
    when every coefficient on those nodes is maximal.  Not available for the
    large Ree groups of type F4, whose parabolic structure is outside the
    scope of these criteria.
    """
    if isinstance(spec.field, SuzukiReeField) and spec.datum.family == "F4":
        raise UnsupportedGroupError(
            "restriction flags are not defined for the large Ree groups here")
    _validate_descent_input(spec, parabolic, weight)
    ranges = coefficient_ranges(spec)
    nodes = sorted(parabolic.nodes)
    linear = all(weight[n] == 0 for n in nodes)
    steinberg = all(weight[n] == ranges[n - 1] - 1 for n in nodes)
    return DescentFlags(linear, steinberg)


def socle_trivial_on_borel(spec: GroupSpec, weight: Weight) -> bool:
    """Does the simple module restrict to a Borel subgroup with trivial socle?

    For an integer field size the criterion is purely combinatorial: every
    coefficient lies in {0, q-1} and the coefficient pattern is stable under
    the diagram symmetry.
    """
    if isinstance(spec.field, SuzukiReeField):
        raise UnsupportedGroupError(
            "the Borel-socle criterion is stated for integer field sizes")
    q = spec.q
    coeffs = weight.coeffs
    if any(c not in (0, q - 1) for c in coeffs):
        return False
    return all(coeffs[spec.datum.apply_perm(i) - 1] == coeffs[i - 1]
               for i in range(1, spec.datum.rank + 1))


# ---------------------------------------------------------------------------
# Minimal-candidate sieve
# ---------------------------------------------------------------------------

# Levi factors on which a trivial restriction is still compatible with
# projectivity of the Borel socle: rank-1 groups over the prime field, and
# the two linear/unitary rank-2 groups over F_2.
def _trivial_restriction_allowed(dspec: GroupSpec) -> bool:
    d = dspec.datum
    if d.family == "A" and d.rank == 1 and not dspec.is_suzuki_ree:
        p, k = (dspec.field.p, dspec.field.exponent)
        return k == 1
    if d.family == "A" and d.rank == 2 and not dspec.is_suzuki_ree:
        return dspec.q == 2  # both the split and the twisted form
    return False


def minimal_pim_candidates(spec: GroupSpec) -> list[Weight]:
    """Weights surviving the parabolic projectivity sieve.

    A non-Steinberg weight survives when, for every twist-stable nonempty
    proper node set J, either the restriction to the Levi of J is Steinberg,
    or every Levi component after descent is one of the small groups on which
    the trivial module is projective-compatible and carries the zero weight
    there.  The zero weight and the Steinberg weight are excluded from the
    output.  Requires relative rank >= 2 (otherwise there is no proper
    parabolic above the Borel) and a concrete field parameter.
    """
    if twisted_bn_rank(spec.datum) < 2:
        raise UnsupportedGroupError(
            f"{spec.describe()} has no proper parabolic above a Borel subgroup")
    st = steinberg_weight(spec)
    parabolics = list(twist_stable_subsets(spec.datum))
    survivors = []
    for weight in enumerate_restricted_weights(spec):
        if weight.is_zero() or weight == st:
            continue
        ok = True
        for parabolic in parabolics:
            ranges = coefficient_ranges(spec)
            if all(weight[n] == ranges[n - 1] - 1 for n in parabolic.nodes):
                continue  # Steinberg restriction on this Levi
            descendants = descend_weight(spec, parabolic, weight)
            if not all(d.weight.is_zero() and _trivial_restriction_allowed(d.spec)
                       for d in descendants):
                ok = False
                break
        if ok:
            survivors.append(weight)
    return survivors


# ---------------------------------------------------------------------------
# Doubling and independence criteria
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DoublingRule:
    """Outcome of the dimension-doubling criterion for one standard parabolic.

    ``applicable`` is True when the doubling factor 2 applies to the descent
    through ``parabolic``; otherwise the weight satisfies the self-duality
    escape pattern recorded in ``escape_reason``.
    """

    parabolic: ParabolicSubset
    applicable: bool
    escape_reason: str | None


def _doubling_parabolic(spec: GroupSpec) -> tuple[ParabolicSubset, str]:
    """The designated type-A parabolic of the doubling criterion."""
    d = spec.datum
    if d.family == "A" and d.twist_order == 2:
        rank = d.rank
        n_plus_k = rank + 1  # ambient matrix size 2n+k
        if rank % 2:
            n, k = (rank + 1) // 2, 0
        else:
            n, k = rank // 2, 1
        if n < 2:
            raise UnsupportedGroupError("doubling needs an SL(n) Levi with n >= 2")
        nodes = frozenset(range(1, n)) | frozenset(range(n + k + 1, rank + 1))
        return ParabolicSubset(d, nodes), "unitary"
    if d.twist_order == 1 and (
        (d.family == "B" and d.rank > 2)
        or (d.family == "C" and d.rank > 1)
        or (d.family == "D" and d.rank > 3)
    ):
        return ParabolicSubset(d, frozenset(range(1, d.rank))), "bcd"
    if d.family == "D" and d.twist_order == 2 and d.rank > 3:
        return ParabolicSubset(d, frozenset(range(1, d.rank - 1))), "bcd"
    raise UnsupportedGroupError(
        f"no doubling criterion embedded for {spec.describe()}")


def doubling_applicable(spec: GroupSpec, weight: Weight) -> DoublingRule:
    """Does the factor-2 strengthening apply to the designated type-A descent?

    For the unitary groups (twisted type A, ambient size 2n+k with k in
    {0,1}) the weight escapes exactly when ``a_i = a_{n+k+i}`` for all
    i < n.  For types B/C/D (and twisted D) the weight escapes exactly when
    the restriction to the type-A Levi of the first n-1 nodes is palindromic,
    i.e. the Levi module is self-dual.
    """
    parabolic, kind = _doubling_parabolic(spec)
    d = spec.datum
    if kind == "unitary":
        rank = d.rank
        n = (rank + 1) // 2 if rank % 2 else rank // 2
        k = 0 if rank % 2 else 1
        if all(weight[i] == weight[n + k + i] for i in range(1, n)):
            return DoublingRule(parabolic, False,
                                "paired coefficients agree: a_i = a_{n+k+i}")
        return DoublingRule(parabolic, True, None)
    size = d.rank - 1 if d.twist_order == 1 else d.rank - 2
    restricted = tuple(weight[i] for i in range(1, size + 1))
    if restricted == restricted[::-1]:
        return DoublingRule(parabolic, False,
                            "restricted type-A weight is palindromic (self-dual)")
    return DoublingRule(parabolic, True, None)


def independent_violating_set(spec: GroupSpec, weight: Weight) -> ParabolicSubset:
    """Largest independent node set where the weight avoids {0, q-1}.

    Only defined for split groups.  Nodes with coefficient in {0, q-1} are
    discarded; among the remaining nodes a maximum independent subset of the
    Dynkin diagram is found exhaustively (rank <= 8).  Ties are broken by the
    lexicographically smallest node tuple.
    """
    if spec.datum.twist_order != 1 or spec.is_suzuki_ree:
        raise UnsupportedGroupError(
            "the independent-set criterion is stated for split groups")
    q = spec.q
    candidates = [i for i in range(1, spec.datum.rank + 1)
                  if weight[i] not in (0, q - 1)]
    adjacency = spec.datum.adjacency()
    best: tuple[int, ...] = ()
    for r in range(len(candidates), 0, -1):
        found = None
        for combo in itertools.combinations(candidates, r):
            if all(b not in adjacency[a]
                   for a, b in itertools.combinations(combo, 2)):
                found = combo
                break
        if found is not None:
            best = found
            break
    return ParabolicSubset(spec.datum, frozenset(best))
