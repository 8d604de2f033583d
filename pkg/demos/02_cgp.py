# coding: utf-8

# # Coherence generating power
#
# Feed a map uniformly random incoherent states and average the coherence of
# the output.  For unitaries there is a closed form in terms of the squared
# moduli of the matrix elements, and a Monte Carlo estimate to check it.

# In[1]:

import numpy as np

from cgplab import (
    cgp_from_distance,
    cgp_unitary,
    computational_mori,
    estimate_cgp,
    fourier_unitary,
    haar_unitary,
    max_cgp,
)


# The Hadamard gate is as coherent as a qubit unitary gets: 1/6.

# In[2]:

comp2 = computational_mori(2)
hadamard = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
print(cgp_unitary(hadamard, comp2), max_cgp(2))


# Closed form, distance form and a sampled estimate for a random unitary.

# In[3]:

d = 4
u = haar_unitary(d, seed=1)
b = computational_mori(d)
est = estimate_cgp(u, b, 200_000, seed=2, workers=2)
print("closed form  ", cgp_unitary(u, b))
print("distance form", cgp_from_distance(u, b))
print(f"Monte Carlo   {est.mean} +/- {est.stderr}")


# Haar unitaries never beat the discrete Fourier transform, whose columns are
# unbiased to the computational basis.

# In[4]:

for d in range(2, 7):
    rng = np.random.default_rng(d)
    best = max(cgp_unitary(haar_unitary(d, rng), computational_mori(d)) for _ in range(2000))
    print(d, round(best, 5), round(cgp_unitary(fourier_unitary(d), computational_mori(d)), 5))
