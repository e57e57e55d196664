"""The five-qubit code lands on a 5-cycle with one input attached to every vertex."""

import numpy as np

from graphcode.codes import five_qubit_code
from graphcode.detection import configurations, detect_strong, detect_weak
from graphcode.oracle import detects
from graphcode.pipeline import oracle_codespace, run_pipeline

record = run_pipeline(five_qubit_code(), e=1, oracle=True)
cm = record.coincidence
print("LC sequence:", [v + 1 for v in record.lc_sequence])
print("input block:", cm.input_block)
edges = [(i + 1, j + 1) for i, j in cm.gamma.edges()]
print("edges:", edges)
print("every vertex has degree 2:", bool((cm.gamma.adjacency.sum(axis=1) == 2).all()))

# strong and weak verdicts against the oracle for every configuration
cs = oracle_codespace(five_qubit_code())
print("\nE            strong weak oracle")
for e in configurations(5, 3):
    label = "{" + ",".join(str(v + 1) for v in e) + "}"
    print(f"{label:<12} {detect_strong(cm, e):>6} {detect_weak(cm, e):>4} {detects(cs, e):>6}")

sizes = np.array([len(e) for e in configurations(5, 5)])
print("\nconfigurations per size:", np.bincount(sizes))
