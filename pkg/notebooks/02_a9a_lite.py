"""Train the Lite preset on a9a and look at the run.

This is the run the acceptance suite reuses. It takes a couple of CPU hours.
Run from the repository root after 01_build_a9a.py.
"""

# %%
import json
from pathlib import Path

from gate.cli import main
from gate.training import TrainHistory

out = Path("runs/acceptance/a9a_lite")
if not (out / "report.json").exists():
    main(["train", "--data", "data/a9a/a9a_train.csv", "--schema", "data/a9a/a9a.schema.json",
          "--train-idx", "data/a9a/a9a_train.idx", "--val-idx", "data/a9a/a9a_val.idx",
          "--test-data", "data/a9a/a9a_test.csv", "--preset", "lite", "--precision", "float32",
          "--batch-size", "512", "--max-epochs", "110", "--patience", "20",
          "--out-dir", str(out)])

# %% headline numbers
report = json.loads((out / "report.json").read_text())
for split, m in report["metrics"].items():
    print(f"{split:5s} accuracy {m['accuracy']:.4f}  loss {m['loss']:.4f}  n={m['n']}")
print(f"epochs {report['epochs_run']}, best {report['best_epoch']}, "
      f"{report['train_cpu_seconds'] / 3600:.2f} CPU hours")

# %% learning curve, as text
hist = TrainHistory.from_csv(out / "history.csv")
for r in hist.records[:: max(1, len(hist) // 20)]:
    bar = "#" * int(60 * (r.val_metric - 0.7) / 0.2) if r.val_metric > 0.7 else ""
    print(f"{r.epoch:4d} val loss {r.val_loss:.4f} acc {r.val_metric:.4f} {bar}")
