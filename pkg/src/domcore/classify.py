"""Vertex classification relative to minimum dominating sets.

Every vertex lands in exactly one membership class: CORE (in every
minimum dominating set), ANTICORE (in none), or CORONA_ONLY (in some
but not all).  Orthogonally, removing a vertex moves the domination
number up (PLUS), not at all (ZERO), or down (MINUS).

Two routes compute the same classification.  The definitional route
enumerates every minimum dominating set and reads membership off the
intersection and union; it is the reference.  The structural route
never enumerates: anticore membership is a single feasibility probe on
the graph with a pendant attached (the number grows iff the vertex is
in no minimum set), and core membership reduces to removal behavior
plus anticore probes on the neighbors in the deleted graph.  Removal
classes come from two feasibility probes on the deleted graph, since
deleting one vertex changes the number by at most one in either
direction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    add_pendant,
    bits,
    delete_vertex,
    index_after_delete,
)
from .solve import (
    ALL_SETS_MAX,
    all_minimum_dominating_sets,
    core_and_corona,
    exists_dominating_within,
    gamma_value,
)


class RemovalClass(enum.Enum):
    PLUS = "PLUS"
    ZERO = "ZERO"
    MINUS = "MINUS"


class MembershipClass(enum.Enum):
    CORE = "CORE"
    CORONA_ONLY = "CORONA_ONLY"
    ANTICORE = "ANTICORE"


@dataclass(frozen=True)
class VertexClassification:
    vertex: int
    removal: RemovalClass
    membership: MembershipClass


@dataclass(frozen=True)
class ClassificationReport:
    gamma: int
    vertices: tuple[VertexClassification, ...]

    def mask_of_removal(self, cls: RemovalClass) -> int:
        m = 0
        for vc in self.vertices:
            if vc.removal is cls:
                m |= 1 << vc.vertex
        return m

    def mask_of_membership(self, cls: MembershipClass) -> int:
        m = 0
        for vc in self.vertices:
            if vc.membership is cls:
                m |= 1 << vc.vertex
        return m

    @property
    def core_mask(self) -> int:
        return self.mask_of_membership(MembershipClass.CORE)

    @property
    def anticore_mask(self) -> int:
        return self.mask_of_membership(MembershipClass.ANTICORE)

    @property
    def corona_mask(self) -> int:
        return self.core_mask | self.mask_of_membership(MembershipClass.CORONA_ONLY)

    def summary(self) -> dict[str, int]:
        return {
            "plus": self.mask_of_removal(RemovalClass.PLUS).bit_count(),
            "zero": self.mask_of_removal(RemovalClass.ZERO).bit_count(),
            "minus": self.mask_of_removal(RemovalClass.MINUS).bit_count(),
            "core": self.core_mask.bit_count(),
            "corona_only": self.mask_of_membership(MembershipClass.CORONA_ONLY).bit_count(),
            "anticore": self.anticore_mask.bit_count(),
        }


def removal_class(g: Graph, v: int, gamma: int | None = None) -> RemovalClass:
    """How gamma changes when v is deleted: PLUS up, MINUS down, ZERO same.

    Deleting a vertex never moves the number by more than one, so two
    budget probes on the deleted graph decide the class.
    """
    g._check_vertex(v)
    if gamma is None:
        gamma = gamma_value(g)
    h = delete_vertex(g, v)
    if not exists_dominating_within(h, gamma):
        return RemovalClass.PLUS
    if exists_dominating_within(h, gamma - 1):
        return RemovalClass.MINUS
    return RemovalClass.ZERO


def in_anticore(g: Graph, v: int, gamma: int | None = None) -> bool:
    """True if no minimum dominating set contains v.

    Attaching a pendant to v raises gamma by either zero or one, and it
    stays flat exactly when some minimum set already contains v (that
    set still dominates) -- so one probe at the old budget decides.
    """
    g._check_vertex(v)
    if gamma is None:
        gamma = gamma_value(g)
    return not exists_dominating_within(add_pendant(g, v), gamma)


def in_core(g: Graph, v: int, gamma: int | None = None) -> bool:
    """True if every minimum dominating set contains v.

    Holds exactly when v is isolated, or deleting v raises gamma, or
    deleting v keeps gamma while every neighbor of v is in the anticore
    of the deleted graph (no surviving minimum set could dominate v).
    """
    g._check_vertex(v)
    if g.adj[v] == 0:
        return True
    if gamma is None:
        gamma = gamma_value(g)
    h = delete_vertex(g, v)
    if not exists_dominating_within(h, gamma):
        return True
    if exists_dominating_within(h, gamma - 1):
        return False
    for u in bits(g.adj[v]):
        if not in_anticore(h, index_after_delete(u, v), gamma):
            return False
    return True


def membership_class(g: Graph, v: int, gamma: int | None = None) -> MembershipClass:
    if gamma is None:
        gamma = gamma_value(g)
    if in_core(g, v, gamma):
        return MembershipClass.CORE
    if in_anticore(g, v, gamma):
        return MembershipClass.ANTICORE
    return MembershipClass.CORONA_ONLY


def classify_all(g: Graph) -> ClassificationReport:
    """Classify every vertex by the structural route (no set enumeration)."""
    gamma = gamma_value(g)
    rows = []
    for v in range(g.n):
        h = delete_vertex(g, v)
        stays = exists_dominating_within(h, gamma)
        if not stays:
            removal = RemovalClass.PLUS
        elif exists_dominating_within(h, gamma - 1):
            removal = RemovalClass.MINUS
        else:
            removal = RemovalClass.ZERO

        if g.adj[v] == 0:
            membership = MembershipClass.CORE
        elif removal is RemovalClass.PLUS:
            membership = MembershipClass.CORE
        else:
            core = removal is RemovalClass.ZERO and all(
                in_anticore(h, index_after_delete(u, v), gamma) for u in bits(g.adj[v])
            )
            if core:
                membership = MembershipClass.CORE
            elif in_anticore(g, v, gamma):
                membership = MembershipClass.ANTICORE
            else:
                membership = MembershipClass.CORONA_ONLY
        rows.append(VertexClassification(v, removal, membership))
    return ClassificationReport(gamma, tuple(rows))


def classify_by_enumeration(g: Graph) -> ClassificationReport:
    """Classify every vertex straight from the set of all minimum sets.

    The reference implementation: membership is literal intersection
    and union over the enumerated minimum dominating sets, and removal
    classes recompute gamma on each deleted graph.
    """
    if g.n > ALL_SETS_MAX:
        raise GraphError(f"enumeration route is limited to {ALL_SETS_MAX} vertices")
    report = all_minimum_dominating_sets(g)
    core = g.full_mask
    corona = 0
    for s in report.all_sets or ():
        core &= s
        corona |= s
    rows = []
    for v in range(g.n):
        delta = gamma_value(delete_vertex(g, v)) - report.gamma
        removal = (
            RemovalClass.PLUS
            if delta > 0
            else RemovalClass.MINUS if delta < 0 else RemovalClass.ZERO
        )
        if (core >> v) & 1:
            membership = MembershipClass.CORE
        elif not (corona >> v) & 1:
            membership = MembershipClass.ANTICORE
        else:
            membership = MembershipClass.CORONA_ONLY
        rows.append(VertexClassification(v, removal, membership))
    return ClassificationReport(report.gamma, tuple(rows))


def classification_masks(
    g: Graph, gamma: int | None = None, core_corona: tuple[int, int] | None = None
) -> dict[str, int]:
    """Class bitmasks for signature evaluation, by the definitional route.

    Keys: plus, zero, minus, core, corona_only, anticore.  Membership
    masks come from folding the minimum-set stream (or the precomputed
    core_corona pair); removal masks from budget probes per vertex.
    """
    if gamma is None:
        gamma = gamma_value(g)
    core, corona = core_corona if core_corona is not None else core_and_corona(g)
    plus = zero = minus = 0
    for v in range(g.n):
        h = delete_vertex(g, v)
        if not exists_dominating_within(h, gamma):
            plus |= 1 << v
        elif exists_dominating_within(h, gamma - 1):
            minus |= 1 << v
        else:
            zero |= 1 << v
    return {
        "plus": plus,
        "zero": zero,
        "minus": minus,
        "core": core,
        "corona_only": corona & ~core,
        "anticore": g.full_mask & ~corona,
    }


def report_to_dict(report: ClassificationReport) -> dict:
    """JSON-ready dict with a fixed key order."""
    return {
        "gamma": report.gamma,
        "vertices": [
            {
                "id": vc.vertex,
                "removal": vc.removal.value,
                "membership": vc.membership.value,
            }
            for vc in report.vertices
        ],
        "summary": report.summary(),
    }
