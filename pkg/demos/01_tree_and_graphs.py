"""A pushed tree seen at different resolutions.

Builds the default desk tree, takes a recorded push of the capsule
end-effector that moves part of the tree, and encodes the pushed state as
graphs of increasing resolution. Run from the repository root: python demos/01_tree_and_graphs.py
"""
import numpy as np

from adaptres.graph import EncoderParams, build_graph
from adaptres.optimize import generate_queries
from adaptres.planning import movement_mask
from adaptres.sim import WorldConfig, build_world

world, rest = build_world(WorldConfig())
enc = EncoderParams.for_world(world)
print(f"tree: {rest.n_particles} particles in {world.n_segments} segments")

# %% a push that moves the tree (query generation keeps only such windows)
(q,) = generate_queries(world, rest, 1, seed=0)
s1, final = q.s1, q.sG
moved = np.linalg.norm(final.pos - s1.pos, axis=1)
print(f"{q.window} pushing steps: largest particle displacement {moved.max():.3f} m")

# %% encode the final state: 0^K keeps one vertex per segment, 1^K samples each segment
for bits in ("00000000", "10000001", "11110000", "11111111"):
    omega = np.array([int(b) for b in bits], dtype=float)
    z = build_graph(final, omega, enc)
    print(f"omega {bits}: {z.n_vertices:2d} vertices, {len(z.edges):3d} edges")

# %% which segments did the push move?
mask = movement_mask(s1, final, 0.01).mask
per_seg = np.bincount(final.segment_of[mask], minlength=world.n_segments)
print("particles moved over 1 cm, per segment:", per_seg.tolist())
