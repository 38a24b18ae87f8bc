"""Brute-force reference implementations used as oracles.

Everything here is deliberately plain: Python lists, explicit loops, Counter.
No code is shared with the package under test; the only coupling is to its
documented contracts (scores accumulate in model-id order; score ties break
by total unweighted probability mass, then by lowest label index).
"""

from __future__ import annotations

from collections import Counter


def ref_argmax(row):
    best = 0
    for j in range(1, len(row)):
        if row[j] > row[best]:
            best = j
    return best


def _by_model_id(models):
    return sorted(models, key=lambda entry: entry[0])


def _masses(ordered_rows, c):
    # Unweighted probability mass per class, summed in the given model order.
    mass = [0.0] * c
    for row in ordered_rows:
        for j in range(c):
            mass[j] = mass[j] + row[j]
    return mass


def _break_tie(scores, mass):
    top = max(scores)
    tied = [j for j, s in enumerate(scores) if s == top]
    if len(tied) == 1:
        return tied[0]
    best_mass = max(mass[j] for j in tied)
    return min(j for j in tied if mass[j] == best_mass)


def ref_majority(models):
    """models: list of (model_id, rows) where rows is a list of probability lists."""
    ordered = _by_model_id(models)
    n = len(ordered[0][1])
    c = len(ordered[0][1][0])
    labels = []
    for i in range(n):
        votes = Counter(ref_argmax(rows[i]) for _, rows in ordered)
        counts = [float(votes.get(j, 0)) for j in range(c)]
        mass = _masses([rows[i] for _, rows in ordered], c)
        labels.append(_break_tie(counts, mass))
    return labels


def ref_weighted(models, weights=None):
    """models: list of (model_id, rows, weight); weights overrides the declared ones."""
    if weights is None:
        entries = [(mid, rows, w) for mid, rows, w in models]
    else:
        entries = [(mid, rows, w) for (mid, rows, _), w in zip(models, weights)]
    ordered = sorted(entries, key=lambda entry: entry[0])
    n = len(ordered[0][1])
    c = len(ordered[0][1][0])
    labels = []
    all_scores = []
    for i in range(n):
        scores = [0.0] * c
        for _, rows, w in ordered:
            for j in range(c):
                scores[j] = scores[j] + w * rows[i][j]
        mass = _masses([rows[i] for _, rows, _ in ordered], c)
        labels.append(_break_tie(scores, mass))
        all_scores.append(scores)
    return labels, all_scores


def ref_rank(models, k):
    """models: list of (model_id, weight); returns the selected ids in rank order."""
    ranked = sorted(models, key=lambda entry: (-entry[1], entry[0]))
    if k is not None:
        ranked = ranked[:k]
    return [mid for mid, _ in ranked]


def ref_confusion(gold, pred, c):
    counts = [[0] * c for _ in range(c)]
    for g, p in zip(gold, pred):
        counts[g][p] += 1
    return counts


def ref_evaluate(gold, pred, c):
    """Returns a dict mirroring the evaluation report, computed by direct tallies."""
    n = len(gold)
    counts = ref_confusion(gold, pred, c)
    trace = sum(counts[j][j] for j in range(c))
    per_class = []
    for j in range(c):
        tp = counts[j][j]
        fp = sum(counts[g][j] for g in range(c)) - tp
        fn = sum(counts[j][p] for p in range(c)) - tp
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * tp / (2 * tp + fp + fn) if 2 * tp + fp + fn else 0.0
        per_class.append((precision, recall, f1))
    support = [sum(counts[j]) for j in range(c)]
    macro = tuple(sum(scores[i] for scores in per_class) / c for i in range(3))
    weighted = tuple(
        sum(support[j] * per_class[j][i] for j in range(c)) / n for i in range(3)
    )
    pooled_fp = n - trace
    micro_p = trace / (trace + pooled_fp) if trace + pooled_fp else 0.0
    micro_f1 = 2 * trace / (2 * trace + 2 * pooled_fp) if trace + pooled_fp else 0.0
    return {
        "accuracy": trace / n,
        "confusion": counts,
        "support": support,
        "per_class": per_class,
        "micro": (micro_p, micro_p, micro_f1),
        "macro": macro,
        "weighted": weighted,
    }


def ref_distribution(gold, c):
    votes = Counter(gold)
    counts = [votes.get(j, 0) for j in range(c)]
    n = len(gold)
    fractions = [count / n if n else 0.0 for count in counts]
    return counts, fractions
