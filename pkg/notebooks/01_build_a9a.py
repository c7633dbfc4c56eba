"""Rebuild the binarised Adult data ("a9a") from the raw census files.

Expects data/adult/adult.data and data/adult/adult.test; writes data/a9a/.
Run from the repository root: python notebooks/01_build_a9a.py
"""

# %%
from pathlib import Path

import numpy as np

from gate.data import load_csv, load_schema, read_indices
from gate.datasets import build_a9a

paths = build_a9a(Path("data/adult"), Path("data/a9a"))
for name, p in paths.items():
    print(f"{name:10s} {p}")

# %% 123 indicator columns; one active bin per source column unless the value is missing
schema = load_schema(paths["schema"])
train = load_csv(paths["train"], schema)
X = np.column_stack([train.columns[c.name] for c in schema.features])
print("features:", X.shape[1], " rows:", train.n_rows)
print("active indicators per row:", np.unique(X.sum(axis=1)))

# %% stratified split of the training file
tr, va = read_indices(paths["train_idx"]), read_indices(paths["val_idx"])
y = train.columns["label"]
for name, idx in (("train", tr), ("val", va)):
    print(f"{name:5s} {len(idx):6d} rows, positive rate {np.mean(y[idx] == '+1'):.4f}")
