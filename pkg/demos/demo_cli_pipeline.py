"""
The command-line pipeline end to end
====================================

Generates fixtures on disk, then drives every subcommand the way a shell
user would: validate, stats, evaluate, ensemble, report. Run it from the
repository root; it works in a temporary directory and prints each
command before its output.
"""

import subprocess
import sys
import tempfile
from pathlib import Path


def run(*args):
    cmd = [sys.executable, "-m", "polarvote.cli", *args]
    print("$ polarvote", " ".join(args))
    subprocess.run(cmd, check=True)
    print()


with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp)

    # three simulated models of unequal quality over 500 samples
    run(
        "simgen", "--out-dir", str(out), "--seed", "42", "--n", "500",
        "--priors", "0.4,0.25,0.35",
        "--model", "0.85", "--model", "0.70", "--model", "0.55,4.0",
    )
    dataset = str(out / "dataset.tsv")
    preds = [str(out / f"model{j:02d}.jsonl") for j in (1, 2, 3)]
    pred_args = []
    for p in preds:
        pred_args += ["--pred", p]

    # strict checks: schema, header, row sums, id alignment
    run("validate", "--dataset", dataset, *pred_args)

    # gold label distribution
    run("stats", "--dataset", dataset)

    # per-model quality
    run("evaluate", "--dataset", dataset, "--pred", preds[0], "--confusion")

    # one ensemble, scores written next to the inputs
    run(
        "ensemble", "--dataset", dataset, *pred_args,
        "--method", "weighted", "--top-k", "2", "--out", str(out / "ens.jsonl"),
    )

    # the full comparison grid
    run("report", "--dataset", dataset, *pred_args, "--top-k", "2,all")
