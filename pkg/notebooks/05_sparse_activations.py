"""How the three activation families spread mass over a score vector."""

# %%
import numpy as np

from gate.activations import ActivationFamily, scalar_gate, vector_transform

z = np.array([1.2, 0.9, 0.3, 0.0, -0.5, -1.4])
for fam in ActivationFamily:
    p = vector_transform(fam, z)
    print(f"{fam.value:10s}", np.round(p, 4), " nonzero:", int(np.count_nonzero(p)))

# %% scaling the scores up makes the sparse families drop entries
for scale in (0.25, 1, 4, 16):
    counts = {f.value: int(np.count_nonzero(vector_transform(f, scale * z))) for f in ActivationFamily}
    print(f"scale {scale:5}", counts)

# %% the scalar gates: sparse ones reach exactly 0 and 1
x = np.linspace(-3, 3, 13)
for fam in ActivationFamily:
    print(f"{fam.value:10s}", np.round(scalar_gate(fam, x), 3))
