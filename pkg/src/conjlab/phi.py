"""The singleton/adjacency transfer bijection and the conjugation involution.

phi repeatedly strips initiators and singletons until neither remains,
then rebuilds in reverse, re-inserting each stripped pair (I_j, S_j) with
the I elements as singletons and the S elements as terminators.  It is a
support-preserving bijection that swaps the singleton count with the
adjacency count; conjugate composes it with complementation and is an
involution on partitions of {1..n}.

phi and phi_inverse run on raw block tuples with one union-find for the
whole rebuild phase (the exhaustive checks sweep millions of partitions,
so the per-step partition objects of the record-based path are too dear).
phi_trace keeps the readable record-based computation; the two paths are
compared exhaustively in the tests.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import NamedTuple

from .partition import SetPartition, complement, require_full_support
from .separate import ROLE_ST, SeparationRecord, combine_st, separate_is


def _strip(blocks, keep_initiators: bool):
    """Iterate one of the two strip maps on raw block tuples.

    keep_initiators True: kill initiators and singletons per step (the
    phi forward phase), recording (initiators, singletons).
    False: kill singletons and terminators (the phi_inverse forward
    phase), recording (singletons, terminators).
    Returns (steps, core_blocks); block order is irrelevant and not
    maintained.  Block ids stay fixed across iterations, so only the
    live support list and the per-block survivor counts move.
    """
    bid = {}
    for i, blk in enumerate(blocks):
        for x in blk:
            bid[x] = i
    sizes = [len(blk) for blk in blocks]
    support = sorted(bid)
    steps = []
    while support:
        ends = []  # initiators or terminators, per mode
        singles = []
        prev = support[-1]
        pb = bid[prev]
        for x in support:
            xb = bid[x]
            if xb == pb:
                ends.append(prev if keep_initiators else x)
            if sizes[xb] == 1:
                singles.append(x)
            prev = x
            pb = xb
        if not ends and not singles:
            break
        kill = set(ends)
        kill.update(singles)
        for x in kill:
            sizes[bid[x]] -= 1
        if keep_initiators:
            steps.append((ends, singles))
        else:
            steps.append((singles, ends))
        support = [x for x in support if x not in kill]
    core: dict[int, list[int]] = {}
    for x in support:
        core.setdefault(bid[x], []).append(x)
    return steps, [tuple(g) for g in core.values()]


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _rebuild(core_blocks, steps, merge_b_with_pred: bool):
    """Reverse phase: one union-find over the growing universe.

    Each reversed step enlarges the universe by its two element sets;
    with merge_b_with_pred the second set joins the blocks of the cyclic
    predecessors (combine_st), otherwise the first set joins the cyclic
    successors (combine_is).  The other set stays singleton unless merged
    into.
    """
    parent = {}
    for blk in core_blocks:
        first = blk[0]
        for x in blk:
            parent[x] = first
    uni = sorted(parent)
    for a_new, b_new in reversed(steps):
        # a_new and b_new are disjoint except in the one-element form,
        # where both name the same lone element.
        fresh = sorted(set(a_new).union(b_new))
        for x in fresh:
            parent[x] = x
        uni = sorted(uni + fresh)
        if merge_b_with_pred:
            for b in b_new:
                pred = uni[bisect_left(uni, b) - 1]
                parent[_find(parent, b)] = _find(parent, pred)
        else:
            for a in a_new:
                i = bisect_left(uni, a) + 1
                succ = uni[i if i < len(uni) else 0]
                parent[_find(parent, a)] = _find(parent, succ)
    # uni now holds the whole original support (every stripped element
    # was re-inserted), so group over it rather than re-sorting p.support.
    groups: dict[int, list[int]] = {}
    for x in uni:
        groups.setdefault(_find(parent, x), []).append(x)
    return SetPartition(tuple(sorted(tuple(g) for g in groups.values())))


def phi(p: SetPartition) -> SetPartition:
    """Bijection interchanging singletons with adjacencies.

    The singletons of phi(p) are the initiators of p; the terminators of
    phi(p) are the singletons of p.  Works on any finite support and
    preserves it.
    """
    steps, core = _strip(p.blocks, keep_initiators=True)
    return _rebuild(core, steps, merge_b_with_pred=True)


def phi_inverse(p: SetPartition) -> SetPartition:
    """Two-sided inverse of phi: strip singletons/terminators, rebuild
    joining each stripped singleton to its cyclic successor."""
    steps, core = _strip(p.blocks, keep_initiators=False)
    return _rebuild(core, steps, merge_b_with_pred=False)


def reduce_core(p: SetPartition) -> SetPartition:
    """The fixed point of iterated separate_is: no initiators, no singletons.

    Empty exactly when p is noncrossing.
    """
    _, core = _strip(p.blocks, keep_initiators=True)
    return SetPartition(tuple(sorted(core)))


class ForwardRow(NamedTuple):
    j: int
    rho: SetPartition
    initiators: frozenset
    singletons: frozenset


class ReverseRow(NamedTuple):
    j: int
    tau: SetPartition


@dataclass(frozen=True)
class PhiTrace:
    """Full record of one phi computation.

    forward_rows[j-1] holds (j, rho_j, I_j, S_j) for j = 1..k, where
    separate_is(rho_{j-1}) = (rho_j, I_j, S_j) and rho_0 is the input.
    reverse_rows runs j = k down to 0 with tau_k = rho_k and
    tau_{j-1} = combine_st(tau_j, I_j, S_j); tau_0 = phi(input).
    """

    forward_rows: tuple[ForwardRow, ...]
    reverse_rows: tuple[ReverseRow, ...]
    k: int

    @property
    def core(self) -> SetPartition:
        return self.reverse_rows[0].tau

    @property
    def result(self) -> SetPartition:
        return self.reverse_rows[-1].tau


def phi_trace(p: SetPartition) -> PhiTrace:
    """Run phi through the record-based operations, keeping every row."""
    records = []
    rho = p
    while True:
        rec = separate_is(rho)
        if not rec.a_set and not rec.b_set:
            break
        assert len(rec.rho.support) < len(rho.support)
        records.append(rec)
        rho = rec.rho
    k = len(records)
    forward = tuple(
        ForwardRow(j, rec.rho, rec.a_set, rec.b_set)
        for j, rec in enumerate(records, start=1)
    )
    reverse = [ReverseRow(k, rho)]
    tau = rho
    for j in range(k - 1, -1, -1):
        rec = records[j]
        tau = combine_st(SeparationRecord(tau, rec.a_set, rec.b_set, ROLE_ST))
        reverse.append(ReverseRow(j, tau))
    return PhiTrace(forward, tuple(reverse), k)


def conjugate(p: SetPartition, n: int) -> SetPartition:
    """complement(phi(p), n): an involution on partitions of {1..n}.

    Like phi it interchanges the singleton count with the adjacency count.
    """
    require_full_support(p, n)
    return complement(phi(p), n)
