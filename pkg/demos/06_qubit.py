# coding: utf-8

# # One qubit
#
# Bases are Bloch axes (n and -n give the same one).  Everything has a
# closed form in the angle between the axes.

# In[1]:

import numpy as np

from cgplab import computational_mori, cgp_unitary, dfs_distance, masa_distance, overlap_matrix
from cgplab.qubit import (
    bloch_angle,
    mori_from_bloch,
    qubit_cgp,
    qubit_dfs,
    qubit_distance,
    qubit_overlap,
    qubit_unitary,
)


# In[2]:

n = np.array([0.0, 0.0, 1.0])
m = np.array([np.sin(1.0), 0.0, np.cos(1.0)])
b, b2 = mori_from_bloch(n), mori_from_bloch(m)
psi = bloch_angle(n, m)
print(qubit_distance(n, m), masa_distance(b, b2))
print(qubit_dfs(psi), dfs_distance(b, b2))
print(qubit_overlap(n, m))
print(overlap_matrix(b, b2))


# The CGP depends on the polar angle of the rotation only.

# In[3]:

for theta in np.linspace(0, np.pi, 5):
    vals = [cgp_unitary(qubit_unitary(theta, phi), computational_mori(2)) for phi in (0.0, 1.0, 2.5)]
    print(round(theta, 3), qubit_cgp(theta), vals)
