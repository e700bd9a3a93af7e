"""Connectivity states for a single grid column.

A state records the colors of the last column added to a partially built
board, which of its same-colored chunks are already joined through earlier
columns, and (for monochromatic columns) whether the other color is already
sealed off.  Colors are 0 (white) and 1 (black); cell 0 is the top cell.

Partitions are stored over chunk indices as a tuple of block leaders: entry
``j`` is the smallest chunk index in the block containing chunk ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

Coloring = tuple[int, ...]
Leaders = tuple[int, ...]
Chunk = tuple[int, int, int]  # (first cell, last cell, color), inclusive

DUMP_MAGIC = "gerrystates v1"


def chunks(c: Coloring) -> list[Chunk]:
    """Maximal runs of equal color in ``c``, top to bottom."""
    out = []
    start = 0
    for i in range(1, len(c) + 1):
        if i == len(c) or c[i] != c[start]:
            out.append((start, i - 1, c[start]))
            start = i
    return out


def coloring_from_int(value: int, r: int) -> Coloring:
    """Column whose top cell is the most significant of ``r`` bits."""
    return tuple((value >> (r - 1 - i)) & 1 for i in range(r))


def coloring_to_int(c: Coloring) -> int:
    value = 0
    for bit in c:
        value = (value << 1) | bit
    return value


def blocks_of(leaders: Leaders) -> list[list[int]]:
    """Blocks as sorted lists of chunk indices, ordered by leader."""
    groups: dict[int, list[int]] = {}
    for j, lead in enumerate(leaders):
        groups.setdefault(lead, []).append(j)
    return [groups[k] for k in sorted(groups)]


def leaders_from_blocks(blocks: Iterable[Iterable[int]], nchunks: int) -> Leaders:
    lead = [-1] * nchunks
    for block in blocks:
        block = sorted(block)
        for j in block:
            lead[j] = block[0]
    if -1 in lead:
        raise ValueError("blocks do not cover every chunk")
    return tuple(lead)


def _noncrossing_partitions(colors: list[int]) -> Iterator[Leaders]:
    # A new element may join any open block of its color.  Joining block B
    # closes every block whose last element lies after B's last element:
    # those blocks now sit under the new arc and can never grow again.
    n = len(colors)
    lead = [0] * n
    # per block: [leader, last element, color, open]
    blocks: list[list] = []

    def rec(i: int) -> Iterator[Leaders]:
        if i == n:
            yield tuple(lead)
            return
        lead[i] = i
        blocks.append([i, i, colors[i], True])
        yield from rec(i + 1)
        blocks.pop()
        for b in range(len(blocks)):
            blk = blocks[b]
            if not blk[3] or blk[2] != colors[i]:
                continue
            prev_last = blk[1]
            closed = [o for o in blocks if o is not blk and o[3] and o[1] > prev_last]
            for o in closed:
                o[3] = False
            blk[1] = i
            lead[i] = blk[0]
            yield from rec(i + 1)
            blk[1] = prev_last
            for o in closed:
                o[3] = True

    yield from rec(0)


def enumerate_arc_configs(c: Coloring) -> list[Leaders]:
    """Every monochromatic non-crossing partition of the chunks of ``c``.

    These are exactly the connectivity patterns that left-side arcs between
    same-colored chunks can realize.  The discrete partition comes first.
    """
    return list(_noncrossing_partitions([ch[2] for ch in chunks(c)]))


def block_extents(c: Coloring, leaders: Leaders) -> dict[int, tuple[int, int, int]]:
    """Map block leader to (color, first cell, last cell)."""
    ch = chunks(c)
    ext: dict[int, tuple[int, int, int]] = {}
    for j, lead in enumerate(leaders):
        start, end, color = ch[j]
        if lead in ext:
            ext[lead] = (color, ext[lead][1], end)
        else:
            ext[lead] = (color, start, end)
    return ext


def is_uninteresting(c: Coloring, leaders: Leaders) -> bool:
    """True if the state can never be completed to a valid two-region board.

    Looks for same-colored blocks A1, A2 and opposite-colored blocks B1, B2
    where B1 fills the gap from the end of A1 to the start of A2 and B2
    reaches beyond A1 or A2.
    """
    ext = block_extents(c, leaders)
    by_start = {lo: (lead, color, hi) for lead, (color, lo, hi) in ext.items()}
    for a1, (color, a1_lo, a1_hi) in ext.items():
        nxt = by_start.get(a1_hi + 1)
        if nxt is None:
            continue
        b1, b_color, b1_hi = nxt
        if b_color == color:
            continue
        after = by_start.get(b1_hi + 1)
        if after is None or after[1] != color:
            continue
        a2_hi = after[2]
        for b2, (col2, b2_lo, b2_hi) in ext.items():
            if b2 == b1 or col2 != b_color:
                continue
            if a2_hi < b2_hi or b2_lo < a1_lo:
                return True
    return False


@dataclass(frozen=True, order=True)
class State:
    coloring: Coloring
    leaders: Leaders
    primed: bool = False

    @property
    def blocks(self) -> list[list[int]]:
        return blocks_of(self.leaders)

    @property
    def nblocks(self) -> int:
        return sum(1 for j, lead in enumerate(self.leaders) if j == lead)

    @property
    def white_count(self) -> int:
        return self.coloring.count(0)

    @property
    def has_arcs(self) -> bool:
        return any(j != lead for j, lead in enumerate(self.leaders))

    def sort_key(self) -> tuple:
        return (self.primed, coloring_to_int(self.coloring), self.leaders)


@dataclass
class StateSpace:
    """Ordered, indexed set of interesting states for ``row_count`` rows."""

    row_count: int
    states: list[State]
    index: dict[State, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {s: i for i, s in enumerate(self.states)}
        if len(self.index) != len(self.states):
            raise ValueError("duplicate states")

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[State]:
        return iter(self.states)

    def __getitem__(self, i: int) -> State:
        return self.states[i]

    def __contains__(self, s: State) -> bool:
        return s in self.index

    def lookup(self, s: State) -> int:
        return self.index[s]

    def primed_state(self, color: int) -> State:
        return State((color,) * self.row_count, (0,), True)

    def dump(self, fp: TextIO) -> None:
        fp.write(f"{DUMP_MAGIC} r={self.row_count} count={len(self)}\n")
        for i, s in enumerate(self.states):
            colors = "".join(map(str, s.coloring))
            leads = ",".join(map(str, s.leaders))
            fp.write(f"{i} {colors} {leads} {int(s.primed)}\n")


def load_state_space(fp: TextIO) -> StateSpace:
    header = fp.readline().split()
    if " ".join(header[:2]) != DUMP_MAGIC:
        raise ValueError(f"not a state dump: {' '.join(header)!r}")
    fields = dict(item.split("=") for item in header[2:])
    r, count = int(fields["r"]), int(fields["count"])
    states = []
    for i, line in enumerate(fp):
        ordinal, colors, leads, primed = line.split()
        if int(ordinal) != i:
            raise ValueError(f"ordinal {ordinal} out of sequence")
        states.append(State(tuple(map(int, colors)),
                            tuple(map(int, leads.split(","))),
                            primed == "1"))
    if len(states) != count or any(len(s.coloring) != r for s in states):
        raise ValueError("state dump does not match its header")
    return StateSpace(r, states)


def build_state_space(r: int) -> StateSpace:
    """All interesting states for a column of ``r`` cells, canonically ordered.

    Order: unprimed states by coloring (read as a binary number, top cell
    most significant), then by leader tuple; the two primed states last.
    """
    if r < 1:
        raise ValueError("row count must be positive")
    states = []
    for value in range(2 ** r):
        c = coloring_from_int(value, r)
        for leaders in sorted(enumerate_arc_configs(c)):
            if not is_uninteresting(c, leaders):
                states.append(State(c, leaders))
    states.append(State((0,) * r, (0,), True))
    states.append(State((1,) * r, (0,), True))
    return StateSpace(r, states)
