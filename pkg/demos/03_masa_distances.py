# coding: utf-8

# # Distances between maximal abelian subalgebras
#
# Two bases define two dephasing projections.  The norm of their difference
# can be computed from the overlap matrix, from the superoperators
# themselves, or from commutators of the projectors.

# In[1]:

import numpy as np

from cgplab import (
    computational_mori,
    dfs_distance,
    fourier_unitary,
    haar_unitary,
    masa_distance,
    masa_distance_commutator,
    masa_distance_superop,
    mori_from_frame,
    overlap_matrix,
)


# In[2]:

rng = np.random.default_rng(3)
b1 = mori_from_frame(haar_unitary(3, rng))
b2 = mori_from_frame(haar_unitary(3, rng))
o = overlap_matrix(b1, b2)
print(o)
print("row sums", o.sum(axis=1), "column sums", o.sum(axis=0))


# In[3]:

print(masa_distance(b1, b2), masa_distance_superop(b1, b2), masa_distance_commutator(b1, b2))


# Mutually unbiased bases sit at the largest possible distance sqrt(2(d-1)),
# and at Fubini-Study distance pi/2 (the overlap matrix is singular).

# In[4]:

for d in (2, 3, 5, 8):
    f = mori_from_frame(fourier_unitary(d))
    comp = computational_mori(d)
    print(d, masa_distance(comp, f), np.sqrt(2 * (d - 1)), dfs_distance(comp, f))
