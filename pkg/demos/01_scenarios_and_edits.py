# # Scenarios as graphs
#
# A scenario is a graph over lane nodes of one intersection layout. Actors sit
# on nodes, goals are edges. Here we draw one, check it, and edit it.

# In[1]:

import numpy as np

from scenario_curriculum.layouts import default_library
from scenario_curriculum.scenario_graph import to_text, validate
from scenario_curriculum.teacher import edit, generate_scenario, mutate_once, semantic_diff

lib = default_library()
print("train layouts:", [ly.id for ly in lib.train])
print("hold-out layouts:", [ly.id for ly in lib.holdout])


# A random scenario from the generator. The actor count is uniform in [0, 8].

# In[2]:

rng = np.random.default_rng(0)
g = generate_scenario(lib.train, rng=rng)
print(g.layout_id, "nodes:", len(g.nodes), "actors:", g.n_actors)
for a in g.actors:
    goal = g.npc_goal(a.id)
    print(f"  actor {a.id}: {a.cls.value:16s} node {a.node:3d}", "" if goal is None else
          f"-> node {goal.dst}, v={goal.npc_attrs.desired_velocity:.2f} m/s")
print("valid:", validate(g).ok)


# One mutation touches exactly one semantic element. An edit chains two.

# In[3]:

m = mutate_once(g, rng)
print("one mutation changed:", semantic_diff(g, m))
e = edit(g, 2, rng)
print("edit changed:", semantic_diff(g, e), "valid:", validate(e).ok)


# Scenarios serialize to canonical JSON, so equal graphs give equal bytes.

# In[4]:

text = to_text(g)
print(len(text), "bytes;", text[:120].decode(), "...")
