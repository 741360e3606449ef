# # Scoring scenarios and choosing what to replay
#
# The score of a scenario is the mean of the positive GAE advantages of one
# episode on it. The buffer keeps high scorers and replays them by rank and
# staleness.

# In[1]:

import numpy as np

from scenario_curriculum.curriculum import ReplayConfig, ScenarioBuffer, replay_distribution, sample_batch
from scenario_curriculum.learning_potential import gae, positive_value_loss

deltas = np.array([1.0, -2.0, 0.5])
print("GAE:", gae(deltas, 0.99, 0.9))
print("positive value loss:", positive_value_loss(deltas, 0.99, 0.9))


# A short episode whose value estimate is far too pessimistic scores high.
# One whose estimate is too optimistic scores zero.

# In[2]:

print(positive_value_loss(np.full(20, 0.5)), positive_value_loss(np.full(20, -0.5)))


# Three buffered scenarios. Scores set the rank term, last-sampled times set
# the staleness term, and omega mixes them.

# In[3]:

buf = ScenarioBuffer(3)
for sid, score, last in (("a", 0.9, 100), ("b", 0.5, 90), ("c", 0.1, 60)):
    buf.maybe_insert(sid, None, score, last)
buf.episode_clock = 100
for w in (1.0, 0.7, 0.0):
    print(f"omega={w}:", np.round(replay_distribution(buf, ReplayConfig(mix_weight=w)), 4))


# Sampling draws without replacement and resets staleness of what it picked.

# In[4]:

batch = sample_batch(buf, ReplayConfig(batch_size=2), np.random.default_rng(1))
print([e.id for e in batch], [(e.id, e.last_sampled) for e in buf])


# A full buffer only admits a newcomer that beats its weakest entry.

# In[5]:

print(buf.maybe_insert("d", None, 0.05), buf.maybe_insert("e", None, 0.3), [e.id for e in buf])
