"""Set partitions over finite supports of positive integers.

Canonical form everywhere: elements increase within a block, blocks are
ordered by their smallest element.  Adjacency is cyclic *within the
support of the partition itself*: the successor of the largest element
wraps around to the smallest, so a one-element support has succ(a) = a
and the lone element counts as one adjacency.

Text form: blocks joined by " - ", elements by single spaces; the empty
partition is the empty string.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError, InvalidPartitionError, ParseError


@dataclass(frozen=True)
class Support:
    """A finite set of positive integers with cyclic successor/predecessor."""

    elements: tuple[int, ...]

    @cached_property
    def _succ(self) -> dict[int, int]:
        e = self.elements
        n = len(e)
        return {x: e[(i + 1) % n] for i, x in enumerate(e)} if n else {}

    @cached_property
    def _pred(self) -> dict[int, int]:
        e = self.elements
        return {x: e[i - 1] for i, x in enumerate(e)}

    def succ(self, x: int) -> int:
        return self._succ[x]

    def pred(self, x: int) -> int:
        return self._pred[x]

    def __contains__(self, x: int) -> bool:
        return x in self._succ

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SetPartition:
    """A canonical set partition.

    Construct through canonicalize() or parse_partition() unless the block
    data is already canonical (sorted within blocks, blocks sorted by
    minimum, pairwise disjoint).
    """

    blocks: tuple[tuple[int, ...], ...]

    @cached_property
    def support(self) -> tuple[int, ...]:
        """All elements of the partition, increasing."""
        return tuple(sorted(x for blk in self.blocks for x in blk))

    @cached_property
    def block_index(self) -> dict[int, int]:
        """Element -> index of its block within self.blocks."""
        return {x: i for i, blk in enumerate(self.blocks) for x in blk}

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = SetPartition(())


@dataclass(frozen=True)
class AdjacencyProfile:
    """Initiators, terminators and singletons of one partition.

    An adjacency is an ordered pair (a, succ(a)) lying in one block; a is
    its initiator, succ(a) its terminator.  adjacency_count == number of
    initiators == number of terminators.
    """

    initiators: frozenset[int]
    terminators: frozenset[int]
    singletons: frozenset[int]
    adjacency_count: int


_EMPTY_PROFILE = AdjacencyProfile(frozenset(), frozenset(), frozenset(), 0)


def adjacency_profile(p: SetPartition) -> AdjacencyProfile:
    """Scan the support once, pairing each element with its cyclic successor."""
    blocks = p.blocks
    if not blocks:
        return _EMPTY_PROFILE
    # Local index and support: profiles are usually taken on fresh
    # partitions where the cached properties would be cold anyway.
    bid = {x: i for i, blk in enumerate(blocks) for x in blk}
    supp = sorted(bid)
    initiators = []
    terminators = []
    prev = supp[-1]
    prev_bid = bid[prev]
    for x in supp:
        xb = bid[x]
        if xb == prev_bid:
            initiators.append(prev)
            terminators.append(x)
        prev = x
        prev_bid = xb
    singletons = [blk[0] for blk in blocks if len(blk) == 1]
    return AdjacencyProfile(
        frozenset(initiators),
        frozenset(terminators),
        frozenset(singletons),
        len(initiators),
    )


def canonicalize(raw_blocks: Iterable[Iterable[int]]) -> SetPartition:
    """Validate raw blocks and sort them into canonical form."""
    blocks = []
    seen: set[int] = set()
    for raw in raw_blocks:
        blk = sorted(set(raw))
        if not blk:
            raise InvalidPartitionError("empty block")
        for x in blk:
            if not isinstance(x, int) or x < 1:
                raise InvalidPartitionError(f"element {x!r} is not a positive integer")
            if x in seen:
                raise InvalidPartitionError(f"element {x} appears in more than one block")
            seen.add(x)
        blocks.append(tuple(blk))
    blocks.sort()
    return SetPartition(tuple(blocks))


def require_full_support(p: SetPartition, n: int) -> None:
    """Raise DomainError unless the support of p is exactly {1, ..., n}."""
    supp = p.support
    if n < 1 or len(supp) != n or supp[-1] != n:
        got = format_partition(p) or "(empty)"
        raise DomainError(f"support of {got!r} is not 1..{n}")


def inferred_n(p: SetPartition) -> int:
    """The n with supp(p) = {1..n}; DomainError if the support has gaps."""
    n = len(p.support)
    require_full_support(p, n)
    return n


def complement(p: SetPartition, n: int) -> SetPartition:
    """Relabel every element x of a partition of {1..n} as n + 1 - x.

    An involution; it reverses the cyclic order, so initiators and
    terminators trade places while singleton status is preserved.
    """
    require_full_support(p, n)
    m = n + 1
    blocks = sorted(tuple(m - x for x in reversed(blk)) for blk in p.blocks)
    return SetPartition(tuple(blocks))


def format_partition(p: SetPartition) -> str:
    """Dash notation: "3 5 12 - 4 8 10 - 7"; empty partition -> ""."""
    return " - ".join(" ".join(str(x) for x in blk) for blk in p.blocks)


def parse_partition(text: str) -> SetPartition:
    """Parse dash notation; elements may be space- or comma-separated."""
    if not text.strip():
        return EMPTY
    blocks = []
    seen: set[int] = set()
    for chunk in text.split("-"):
        tokens = chunk.replace(",", " ").split()
        if not tokens:
            raise ParseError(f"empty block in {text!r}")
        blk = []
        for tok in tokens:
            if not tok.isdigit() or int(tok) < 1:
                raise ParseError(f"bad element {tok!r}")
            x = int(tok)
            if x in seen:
                raise ParseError(f"duplicate element {x}")
            seen.add(x)
            blk.append(x)
        blk.sort()
        blocks.append(tuple(blk))
    blocks.sort()
    return SetPartition(tuple(blocks))


def partition_to_blocks(p: SetPartition) -> list[list[int]]:
    """Structured form used by the JSON output mode."""
    return [list(blk) for blk in p.blocks]


def partition_from_blocks(data: Iterable[Iterable[int]]) -> SetPartition:
    """Inverse of partition_to_blocks (validates)."""
    return canonicalize(data)
