# coding: utf-8

# # Sweeping the closed forms against the oracle
#
# run_sweep pairs each formula with an exact solver call and records the
# outcome. Mismatches keep their certificate so a reader can replay them.

# In[1]:

import json

from ktbondage.harness import Ranges, run_sweep, replay


# In[2]:

report = run_sweep("complete", Ranges(n=[5, 6], k=[1, 2, 3]))
print(report.table())


# The saved JSON separates the certified payload from wall-clock timings, so two
# runs can be compared byte for byte.

# In[3]:

saved = json.loads(report.to_json())
print(sorted(saved))
print(replay(saved).reproduced)
