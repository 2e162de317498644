"""Round trip through the JSON formats and render each state as Graphviz DOT."""

# %%
import tempfile
from pathlib import Path

from arborswap import InstanceFile, PackingInstance, SequenceFile, length_bound, reconfigure
from arborswap.fileio import write_dot_states
from arborswap.generate import generate_instance

g = generate_instance(4, 2, seed=8, extra_arcs=1)
D = g.digraph
inst_file = InstanceFile(D.n, D.root, 2, tuple((a.tail, a.head) for a in D.arcs), g.S, g.T)
print(inst_file.dumps())

# %%
seq = reconfigure(PackingInstance(D, 2, 0), g.S, g.T)
seq_file = SequenceFile.from_sequence(inst_file, seq, length_bound(len(g.S - g.T), 2))
assert SequenceFile.loads(seq_file.dumps()) == seq_file
print(seq_file.dumps())

# %%
out = Path(tempfile.mkdtemp())
for path in write_dot_states(D, seq, g.T, out):
    print(path.name)
print((out / "state_0.dot").read_text())
