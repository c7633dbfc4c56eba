"""Where the Lite preset's parameters and FLOPs go at d=123."""

# %%
from gate.cli import count_report
from gate.config import preset

rep = count_report(preset("lite", task="binary"), d=123, batch=1,
                   reference_params=636_860, reference_flops=30_170_000)
print(f"parameters {rep['parameters']:,}  reference 636,860  ratio {rep['parameter_ratio']:.3f}")
for group, n in rep["parameter_breakdown"].items():
    print(f"  {group:26s} {n:9,d}  {100 * n / rep['parameters']:5.1f}%")

# %% FLOPs per sample, informational only
print(f"flops {rep['flops']:,}  reference 30,170,000  ratio {rep['flop_ratio']:.3f}")
for group, n in rep["flop_breakdown"].items():
    print(f"  {group:26s} {n:12,d}")

# %% how the count moves with the structural knobs
for depth in (3, 4, 5, 6):
    for stages in (2, 4, 6):
        r = count_report(preset("lite", task="binary", tree_depth=depth, n_gflu_stages=stages), 123)
        print(f"depth {depth} stages {stages}: {r['parameters']:>10,d}")
