"""Short a9a runs that each flip one modelling choice of the Lite run.

Checked choices: leaving the 0/1 indicators unscaled, starting eta at zero,
computing the two split gates independently instead of as a normalised pair,
and batch 512 instead of the default 1024.
Each run trains at most 15 epochs with patience 5; results go to
runs/a9a_diagnostics.json. Run from the repository root after 01_build_a9a.py.
"""

# %%
import dataclasses
import json
import sys
import time
from pathlib import Path

import numpy as np

import gate.model as M
from gate import tensor as T
from gate.activations import gate
from gate.config import preset
from gate.data import Dataset, load_csv, load_schema, prepare, read_indices
from gate.model import init_model
from gate.training import evaluate, train
from gate.tree import _stump_from_gates

A9A = Path("data/a9a")
schema = load_schema(A9A / "a9a.schema.json")
table = load_csv(A9A / "a9a_train.csv", schema)
train_ds = prepare(table.take(read_indices(A9A / "a9a_train.idx")), schema)
val_ds = prepare(table.take(read_indices(A9A / "a9a_val.idx")), schema, train_ds.stats)
test_ds = prepare(load_csv(A9A / "a9a_test.csv", schema), schema, train_ds.stats)
cfg = preset("lite", task="binary", precision="float32", batch_size=512, max_epochs=15, patience=5)


def fully_standardized(ds):
    """Scale the indicator columns too, with training-split moments."""
    mu, sd = train_ds.X.mean(axis=0), train_ds.X.std(axis=0)
    sd = np.where(sd < 1e-12, 1.0, sd)
    return Dataset((ds.X - mu) / sd, ds.y, ds.task, None, ds.n_classes)


def paired_tree_forward(H, t, family):
    """Split gates as a two-way normalised pair over the scores (h, 2h - cut)."""
    x, out = H, None
    for stumps in t.levels:
        outs = []
        for p in stumps:
            g_left = gate(T.sub(T.broadcast_row(p.cutpoints, x.rows), x), family)
            g_right = T.sub(T.Tensor(np.ones(x.shape, dtype=T.get_dtype())), g_left)
            outs.append(_stump_from_gates(g_left, g_right, p, family))
        out = T.concat_cols(outs)
        x = T.concat_cols([H, out])
    return out


def run(name, data=(train_ds, val_ds, test_ds), setup=None, config=cfg):
    tr, va, te = data
    model = init_model(tr.d, config)
    if setup is not None:
        setup(model)
    start = time.process_time()
    model, hist = train(model, tr, va, config)
    best = hist.records[hist.best_epoch - 1]
    row = {"variant": name, "best_epoch": hist.best_epoch, "best_val_loss": best.val_loss,
           "best_val_accuracy": best.val_metric,
           "max_val_accuracy": max(hist.column("val_metric")),
           "test_accuracy": evaluate(model, te).accuracy,
           "cpu_minutes": (time.process_time() - start) / 60}
    print(json.dumps(row), flush=True)
    return row


# %%
variants = {
    "baseline": lambda: run("baseline"),
    "standardized_indicators": lambda: run("standardized_indicators",
                                           tuple(map(fully_standardized, (train_ds, val_ds, test_ds)))),
    "eta_uniform": lambda: run("eta_uniform", setup=lambda m: m.eta.data.fill(1.0 / m.eta.cols)),
    "paired_gates": lambda: run("paired_gates"),
    "batch_1024": lambda: run("batch_1024", config=dataclasses.replace(cfg, batch_size=1024)),
}
chosen = sys.argv[1:] or list(variants)
rows = []
for name in chosen:
    if name == "paired_gates":
        original, M.tree_forward = M.tree_forward, paired_tree_forward
        try:
            rows.append(variants[name]())
        finally:
            M.tree_forward = original
    else:
        rows.append(variants[name]())

out = Path("runs/a9a_diagnostics.json")
old = json.loads(out.read_text()) if out.exists() else []
out.write_text(json.dumps([r for r in old if r["variant"] not in chosen] + rows, indent=2))
