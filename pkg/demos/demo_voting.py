"""
Combining model predictions with majority and weighted votes
============================================================

Builds three small prediction runs in memory and aggregates them with
both voting methods, printing the scores so the arithmetic is visible.
"""

import numpy as np

from polarvote import TIE_BREAK, ModelRun, PredictionMatrix, majority_vote, weighted_vote

# Three models scoring the same four samples over three classes.
# Rows are probability vectors; each row sums to 1.
strong = ModelRun(
    "strong",
    PredictionMatrix(np.array([
        [0.7, 0.2, 0.1],
        [0.1, 0.8, 0.1],
        [0.2, 0.2, 0.6],
        [0.4, 0.4, 0.2],
    ])),
    weight=0.9,
)
middling = ModelRun(
    "middling",
    PredictionMatrix(np.array([
        [0.5, 0.3, 0.2],
        [0.3, 0.4, 0.3],
        [0.4, 0.3, 0.3],
        [0.2, 0.5, 0.3],
    ])),
    weight=0.6,
)
contrarian = ModelRun(
    "contrarian",
    PredictionMatrix(np.array([
        [0.1, 0.3, 0.6],
        [0.6, 0.2, 0.2],
        [0.3, 0.4, 0.3],
        [0.3, 0.3, 0.4],
    ])),
    weight=0.3,
)
runs = [strong, middling, contrarian]

# Majority voting: each model casts one vote per sample (its row argmax),
# the most voted class wins. Scores are the vote counts.
hard = majority_vote(runs)
print("majority labels:", hard.labels)
print("vote counts per sample:")
print(hard.scores)

# Weighted voting: rows are summed with the declared weights, so a
# confident strong model can overrule two hesitant ones.
soft = weighted_vote(runs)
print("weighted labels:", soft.labels)
print("weighted scores per sample:")
print(soft.scores)

# Ties resolve by total probability mass over the tied classes, and only
# then by the lower class index. Sample 3 above exercises this: strong
# splits 0.4/0.4 and votes class 0 (lower index on its own row tie).
print("tie policy:", TIE_BREAK)
