# # A short curriculum run
#
# Train with the curriculum on a tiny budget and look at what it trained on.
# The full desk-scale comparison lives in results/run_comparison.py.

# In[1]:

from pathlib import Path

import numpy as np

from scenario_curriculum.eval_harness import complexity_trace, evaluate, generate_holdout
from scenario_curriculum.orchestrator import Trainer, load_config

cfg = load_config(Path(__file__).resolve().parents[1] / "configs" / "smoke.toml").with_run(
    framework="acl", total_env_steps=6000)
trainer = Trainer(cfg, "demo_run")
policy, log = trainer.train()
modes = [u["mode"] for u in log.updates]
print({m: modes.count(m) for m in set(modes)}, "env steps:", trainer.env_steps)


# The buffer after training, best scenarios first.

# In[2]:

for e in sorted(trainer.buffer, key=lambda e: -e.score)[:5]:
    print(f"{e.id}: score {e.score:.3f}, actors {e.scenario.n_actors}")


# Mean actor count of the scenarios each policy update trained on.

# In[3]:

trace = complexity_trace(log)
print(np.round(trace.mean_actors, 1))


# Evaluate on unseen layouts at full density.

# In[4]:

holdout = generate_holdout(list(trainer.library.holdout), 1.0, 10, 12345)
print(evaluate(policy, holdout, trainer.library.all, cfg.sim, workers=4).row())
