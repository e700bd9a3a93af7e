"""
Column states of the transfer matrix
====================================

A state is one column coloring plus the connectivity its cells inherited
from the columns to the left.  Here we look at the four-row space.
"""

from collections import Counter

from gerrymander.states import build_state_space, chunks, enumerate_arc_configs
from gerrymander.transfer import max_col_nnz, max_row_nnz
from gerrymander.engine import transfer_system

space = build_state_space(4)
print(len(space), "states for 4 rows")

# a few of them; leaders name the first chunk of each block
for s in list(space)[:6]:
    print(s.coloring, s.leaders, "primed" if s.primed else "")

# how many blocks do states carry?
print(Counter(s.nblocks for s in space))

# a five-chunk column, white-black-white-black-white
c = (0, 0, 1, 1, 1, 0, 1, 0)
print(chunks(c))
print(len(enumerate_arc_configs(c)), "arc configurations")

# sparsity as the row count grows
for r in (2, 4, 6, 8):
    ts = transfer_system(r)
    print(r, ts.stats(), "row max", max_row_nnz(ts), "col max", max_col_nnz(ts))
