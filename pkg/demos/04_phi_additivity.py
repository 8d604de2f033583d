# coding: utf-8

# # The log-determinant measure on composite systems
#
# phi = -(1/d) ln |det X| with X the overlap matrix between a basis and its
# image.  On a product basis it adds up over the factors.

# In[1]:

import numpy as np

from cgplab import cgp_tilde, haar_unitary, mori_from_frame, phi_measure, product_mori


# In[2]:

rng = np.random.default_rng(4)
b1, b2 = (mori_from_frame(haar_unitary(3, rng)) for _ in range(2))
u1, u2 = haar_unitary(3, rng), haar_unitary(3, rng)
print(phi_measure(u1, b1) + phi_measure(u2, b2))
print(phi_measure(np.kron(u1, u2), product_mori(b1, b2)))


# Permutations with phases leave the basis in place, so both measures vanish.

# In[3]:

w = np.eye(3)[[2, 0, 1]] @ np.diag(np.exp(1j * rng.random(3)))
b = mori_from_frame(np.eye(3))
print(phi_measure(w, b), cgp_tilde(w, b))
