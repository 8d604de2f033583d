# coding: utf-8

# # The metric along a Hamiltonian path
#
# Differentiate the eigenbasis of H(t) and sum the per-level fidelity
# susceptibilities.  The Fubini-Study speed computed from nearby bases comes
# out as half the metric speed.

# In[1]:

import numpy as np

from cgplab.diffgeo import HamiltonianPath, metric_speed, samples_to_csv, sweep
from cgplab.qubit import SIGMA_X, SIGMA_Z


# A unit-speed rotation of the Bloch vector: speed 2, Fubini-Study speed 1.

# In[2]:

rot = HamiltonianPath.from_function(lambda t: np.cos(t) * SIGMA_Z + np.sin(t) * SIGMA_X, 0.0, 3.0, 2)
for h in (1e-2, 1e-3, 1e-4):
    s = metric_speed(rot, 1.0, h)
    print(h, s.chi, s.speed, s.fs_speed)


# Two spins with a transverse field.  The spectrum touches at zero field, so
# that point shows up as a gap in the sweep.

# In[3]:

I2 = np.eye(2)


def tfim(lam):
    return -np.kron(SIGMA_Z, SIGMA_Z) - lam * (np.kron(SIGMA_X, I2) + np.kron(I2, SIGMA_X))


h = 1e-4
path = HamiltonianPath.from_function(tfim, -0.5 - h, 1.0 + h, 4)
samples = sweep(path, h=h, step=0.1, workers=2)
print(samples_to_csv(samples, 4))
