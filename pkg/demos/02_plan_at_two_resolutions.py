"""Closed-loop MPC toward a goal state with a coarse and a fine graph model.

Uses the dynamics model cached by the desk pipeline (runs/desk/dynamics.npz)
when present, otherwise trains a small one on a few hundred interactions
(about a minute). Prints plan time and final task cost for 0^K and 1^K.
"""
from pathlib import Path

import numpy as np

from adaptres import dynamics as D
from adaptres.graph import EncoderParams
from adaptres.optimize import generate_queries
from adaptres.planning import desk_profile, run_mpc
from adaptres.sim import WorldConfig, build_world

world, rest = build_world(WorldConfig())
enc = EncoderParams.for_world(world)

cached = Path("runs/desk/dynamics.npz")
if cached.exists():
    model = D.DynamicsModel.load(cached)
    print(f"loaded {cached}")
else:
    recs = D.collect_interactions(world, rest, 600, seed=0, enc=enc, traj_len=40)
    model = D.train_dynamics(recs, epochs=3, seed=0, hidden_dim=16, n_layers=2, capsule=D.Capsule.of(world)).model
    print("trained a small model on 600 interactions")

# %% one query: reach the state a recorded push produced
(q,) = generate_queries(world, rest, 1, seed=2)
print(f"query {q.query_id}: window of {q.window} steps")

cfg = desk_profile()
for name, omega in (("minimal", np.zeros(8)), ("full", np.ones(8))):
    r = run_mpc(world, model, q.s1, q.sG, omega, cfg, enc, seed=0, query_id=q.query_id)
    print(f"{name:8s} vertices {r.vertex_count:4.1f}  plan {r.plan_time:5.2f}s  "
          f"cost {r.initial_cost:.4f} -> {r.final_cost:.4f} m")
