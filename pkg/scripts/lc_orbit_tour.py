"""Local complementation on the cube: orbit size, ranks, and the matching local unitary."""

from collections import Counter

import numpy as np

from graphcode import gf2
from graphcode.graphs import Graph, lc_orbit, local_complement, verify_q_transform
from graphcode.oracle import apply_local, graph_state, lc_unitary, overlap

cube = Graph.from_edges(8, [(0, 3), (0, 5), (0, 6), (1, 3), (1, 5), (1, 7),
                            (2, 3), (2, 6), (2, 7), (4, 5), (4, 6), (4, 7)])
orbit = lc_orbit(cube)
print("labelled graphs in the LC orbit:", len(orbit))
print("rank histogram:", sorted(Counter(gf2.rank(g.adjacency) for g in orbit.graphs).items()))

# every single LC of the cube is still full rank
print("ranks after one LC:", [gf2.rank(local_complement(cube, v).adjacency) for v in range(8)])

# the symplectic map and the local unitary agree with the combinatorial rule
print("symplectic rule holds:", all(verify_q_transform(cube, v) for v in range(8)))
psi = graph_state(cube)
fidelity = [overlap(apply_local(psi, lc_unitary(cube, v)), graph_state(local_complement(cube, v)))
            for v in range(8)]
print("overlaps after the local unitary:", np.round(fidelity, 12))
