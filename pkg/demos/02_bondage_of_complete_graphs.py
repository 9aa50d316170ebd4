# coding: utf-8

# # How many edges must go before gamma_t rises?
#
# B_t^k counts the fewest edge deletions, never isolating a vertex, that raise
# gamma_t by at least k. The search returns a certificate that anyone can
# re-check without searching again.

# In[1]:

import json

from ktbondage import bondage_k, verify_certificate
from ktbondage.formulas import bondage_k_complete
from ktbondage.generators import complete


# Cutting a pair away from K_5 takes six edges and doubles gamma_t.

# In[2]:

out = bondage_k(complete(5), 2)
print(json.dumps(out.to_dict(), sort_keys=True))
print(verify_certificate(complete(5), out.certificate))


# Compare the oracle with the closed form over a small grid. The odd branch
# at k = n - 3 comes out one short of the searched value.

# In[3]:

for n in range(5, 8):
    kmax = n - 2 if n % 2 == 0 else n - 3
    row = []
    for k in range(1, kmax + 1):
        got = bondage_k(complete(n), k).bondage
        row.append(f"k={k}: {got} vs {bondage_k_complete(n, k)}")
    print(f"K_{n}", "; ".join(row))


# The plain numpy enumerator gives the same colex-least deletion set.

# In[4]:

a = bondage_k(complete(6), 3)
b = bondage_k(complete(6), 3, prune=False)
print(a.certificate.deleted.to_list() == b.certificate.deleted.to_list())
