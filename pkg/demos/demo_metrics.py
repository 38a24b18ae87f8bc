"""
Evaluation metrics on a toy run
===============================

"""

import numpy as np

from polarvote import DEFAULT_SCHEMA, evaluate, label_distribution
from polarvote.report import render_confusion, render_eval_table

# a hand-made gold/prediction pair, 8 samples over 3 classes
gold = np.array([0, 0, 0, 1, 1, 2, 2, 2])
pred = np.array([0, 0, 1, 1, 2, 2, 2, 0])

report = evaluate(gold, pred, DEFAULT_SCHEMA)
print(render_eval_table([("toy", report)]))
print()
print(render_confusion(report.confusion, DEFAULT_SCHEMA))

# micro averaging pools all decisions into one count, so for single-label
# classification it always equals plain accuracy, exactly, not just close
assert report.micro.precision == report.accuracy
assert report.micro.recall == report.accuracy
assert report.micro.f1 == report.accuracy

# macro averages the per-class scores without support weighting;
# weighted averaging scales each class by its share of the gold labels
print()
print("accuracy:", report.accuracy)
print("macro f1:", report.macro.f1)
print("weighted f1:", report.weighted.f1)

# the gold label distribution, useful for spotting class imbalance
dist = label_distribution(gold, DEFAULT_SCHEMA)
for label, count, fraction in zip(DEFAULT_SCHEMA.labels, dist.counts, dist.fractions):
    print(f"{label}: {count} ({fraction:.3f})")
