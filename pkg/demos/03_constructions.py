# coding: utf-8

# # Graphs with a prescribed k-total bondage number
#
# construct_G_b_k(k, b) glues copies of a small gadget to a near-complete core so
# that B_t^k comes out at exactly b.

# In[1]:

from ktbondage import bondage_k
from ktbondage.generators import construct_G_b_k, gadget_TmN
from ktbondage.graph import serialize_edge_list


# In[2]:

for k, b in [(2, 1), (2, 2), (3, 2), (3, 3), (4, 2), (7, 4)]:
    g = construct_G_b_k(k, b)
    print((k, b), g.n, g.m, bondage_k(g, k).bondage)


# The gadget itself, written out as an edge list.

# In[3]:

print(serialize_edge_list(gadget_TmN(1, 5)))


# Each copy of the gadget buys two units of gamma_t for one deleted edge.

# In[4]:

g = gadget_TmN(2, 5)
print([bondage_k(g, k).bondage for k in (2, 4)])
