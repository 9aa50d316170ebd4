# coding: utf-8

# # Total domination on small graphs
#
# A total dominating set needs every vertex, its own members included, to have a
# neighbour inside the set. This walk-through computes gamma_t for a few families
# and checks the closed forms against the solver.

# In[1]:

from ktbondage import gamma_t, is_td_set, is_minimal_td_set
from ktbondage.formulas import gamma_t_path, gamma_t_cycle
from ktbondage.generators import path, cycle, wheel
from ktbondage.graph import Graph


# The solver returns a certificate: the size and the lexicographically first
# minimum set.

# In[2]:

cert = gamma_t(path(8))
print(cert.gamma_t, cert.witness)


# Paths and cycles follow the same residue pattern in n.

# In[3]:

for n in range(3, 15):
    print(n, gamma_t(path(n)).gamma_t, gamma_t_path(n), gamma_t(cycle(n)).gamma_t, gamma_t_cycle(n))


# A minimal set need not be minimum. On this six-vertex graph the four outer
# vertices form a minimal set while the two centres already suffice.

# In[4]:

g = Graph.from_edges(6, [(2, 0), (2, 3), (2, 4), (3, 1), (3, 5), (0, 1), (4, 5)])
outer = [0, 1, 4, 5]
print(is_td_set(g, outer), is_minimal_td_set(g, outer), gamma_t(g).gamma_t)


# Any hub covers a wheel, so gamma_t is 2 however large the rim is.

# In[5]:

print([gamma_t(wheel(n)).gamma_t for n in range(3, 12)])
