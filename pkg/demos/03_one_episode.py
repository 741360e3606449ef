# # Driving one episode
#
# The student picks a Frenet action every 0.1 s: a target speed and a lateral
# offset from the route centerline. NPCs follow their goal paths on their own.

# In[1]:

import numpy as np

from scenario_curriculum.driving_sim import DrivingEnv, route_progress
from scenario_curriculum.frenet import FrenetAction
from scenario_curriculum.layouts import default_library
from scenario_curriculum.teacher import generate_scenario

lib = default_library()
g = generate_scenario(lib.train, rng=np.random.default_rng(3), n_actors=4)
env = DrivingEnv(lib.all, record_trace=True)
state, obs = env.reset(g)
print("observation size:", obs.shape, "route length: %.1f m" % state.ego.route.length)


# Keep the lane at 4 m/s and see what happens.

# In[2]:

total = 0.0
while not state.done:
    res = env.step(FrenetAction(4.0, 0.0))
    total += res.reward
print(f"{res.cause.value} after {state.time:.1f} s, return {total:.1f}, progress {route_progress(state):.2f}")


# The trace has one row per step with ego and NPC poses.

# In[3]:

env.write_trace("episode_trace.csv")
print(len(env.trace), "rows written to episode_trace.csv")
