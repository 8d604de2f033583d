# coding: utf-8

# # Coherence relative to a basis
#
# A MORI is an orthonormal basis up to phases and ordering.  The coherence of
# a state relative to it is the squared Hilbert-Schmidt norm of everything
# the dephasing map throws away.

# In[1]:

import numpy as np

from cgplab import coherence, coherence_commutator, computational_mori, dephase, mori_from_frame
from cgplab.coherence import uniform_superposition


# Diagonal states carry no coherence; the |+> state carries 1/2.

# In[2]:

comp = computational_mori(2)
plus = np.array([[0.5, 0.5], [0.5, 0.5]])
print(coherence(np.diag([0.3, 0.7]), comp), coherence(plus, comp))


# The same number comes out of the commutator form, half the summed squared
# commutators with the basis projectors.

# In[3]:

rng = np.random.default_rng(0)
g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
rho = g @ g.conj().T
rho /= np.trace(rho).real
b = computational_mori(4)
print(coherence(rho, b), coherence_commutator(rho, b))
print("after dephasing:", coherence(dephase(b, rho), b))


# The uniform superposition of the basis vectors reaches the maximum 1 - 1/d,
# in any basis.

# In[4]:

q, _ = np.linalg.qr(rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
b5 = mori_from_frame(q)
print(coherence(uniform_superposition(b5), b5), 1 - 1 / 5)
