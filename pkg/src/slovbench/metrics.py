"""Evaluation measures: accuracy, confusion counts, macro-F1, Spearman.

All functions are pure. Zero-denominator precision/recall/F1 follow the
convention "defined as 0 and flagged"; the flags travel in the F1Report so
degenerate classes are visible in downstream reports.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

from ._validation import check_equal_lengths
from .errors import DataError, MetricError

__all__ = [
    "ConfusionCounts",
    "F1Report",
    "accuracy",
    "confusion",
    "macro_f1",
    "two_class_macro_f1",
    "spearman",
    "pos_word_accuracy",
    "read_predictions",
    "read_pos_prediction_groups",
]


@dataclass
class ConfusionCounts:
    """Rows are gold labels, columns are predicted labels."""

    classes: list[str]
    counts: list[list[int]]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def index(self, label: str) -> int:
        return self.classes.index(label)


@dataclass
class F1Report:
    classes: list[str]
    precision: dict[str, float]
    recall: dict[str, float]
    f1: dict[str, float]
    macro_f1: float
    class_subset: list[str]
    # (class, quantity) pairs where a 0/0 was defined as 0
    zero_division_flags: list[tuple[str, str]] = field(default_factory=list)


def accuracy(gold: Sequence, pred: Sequence) -> float:
    """Fraction of positions where gold and pred agree."""
    if len(gold) == 0:
        raise MetricError("accuracy undefined on empty input")
    check_equal_lengths(gold, pred, "gold/pred")
    matches = sum(1 for g, p in zip(gold, pred) if g == p)
    return matches / len(gold)


def confusion(gold: Sequence[str], pred: Sequence[str], classes: Sequence[str]) -> ConfusionCounts:
    """Tally counts[i][j] = #(gold == classes[i], pred == classes[j])."""
    check_equal_lengths(gold, pred, "gold/pred")
    classes = list(classes)
    idx = {c: i for i, c in enumerate(classes)}
    if len(idx) != len(classes):
        raise MetricError("duplicate labels in class list")
    counts = [[0] * len(classes) for _ in classes]
    for g, p in zip(gold, pred):
        if g not in idx:
            raise MetricError(f"unknown gold label {g!r}")
        if p not in idx:
            raise MetricError(f"unknown predicted label {p!r}")
        counts[idx[g]][idx[p]] += 1
    return ConfusionCounts(classes=classes, counts=counts)


def macro_f1(counts: ConfusionCounts, class_subset: Sequence[str] | None = None) -> F1Report:
    """Per-class precision/recall/F1 plus their unweighted mean over a subset.

    The macro average runs over `class_subset` (default: all classes) while
    per-class statistics are always computed from the full confusion matrix,
    so predictions falling into excluded classes still count as errors.
    """
    classes = counts.classes
    subset = list(class_subset) if class_subset is not None else list(classes)
    if not subset:
        raise MetricError("class subset must not be empty")
    unknown = [c for c in subset if c not in classes]
    if unknown:
        raise MetricError(f"subset labels not in class list: {unknown}")

    precision: dict[str, float] = {}
    recall: dict[str, float] = {}
    f1: dict[str, float] = {}
    flags: list[tuple[str, str]] = []
    for i, c in enumerate(classes):
        tp = counts.counts[i][i]
        fp = sum(counts.counts[r][i] for r in range(len(classes))) - tp
        fn = sum(counts.counts[i]) - tp
        if tp + fp == 0:
            precision[c] = 0.0
            flags.append((c, "precision"))
        else:
            precision[c] = tp / (tp + fp)
        if tp + fn == 0:
            recall[c] = 0.0
            flags.append((c, "recall"))
        else:
            recall[c] = tp / (tp + fn)
        if precision[c] + recall[c] == 0.0:
            f1[c] = 0.0
            flags.append((c, "f1"))
        else:
            f1[c] = 2 * precision[c] * recall[c] / (precision[c] + recall[c])

    macro = sum(f1[c] for c in subset) / len(subset)
    return F1Report(
        classes=list(classes),
        precision=precision,
        recall=recall,
        f1=f1,
        macro_f1=macro,
        class_subset=subset,
        zero_division_flags=flags,
    )


def two_class_macro_f1(
    gold: Sequence[str],
    pred: Sequence[str],
    classes: Sequence[str],
    subset: Sequence[str],
    drop_other_gold: bool = False,
) -> F1Report:
    """Macro-F1 restricted to `subset` (e.g. positive/negative only).

    Default mode keeps every sample in the confusion matrix and narrows only
    the averaging scope. With drop_other_gold=True, samples whose gold label
    is outside the subset are removed before counting.
    """
    if drop_other_gold:
        keep = [(g, p) for g, p in zip(gold, pred) if g in set(subset)]
        if not keep:
            raise MetricError("no samples left after dropping out-of-subset gold labels")
        gold = [g for g, _ in keep]
        pred = [p for _, p in keep]
    counts = confusion(gold, pred, classes)
    return macro_f1(counts, class_subset=subset)


def _average_ranks(values: Sequence[float]) -> list[float]:
    """1-based ranks; tied values share the mean of their rank positions."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        mean_rank = (i + j) / 2 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = mean_rank
        i = j + 1
    return ranks


def spearman(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Pearson correlation of average-ranked values."""
    check_equal_lengths(xs, ys, "xs/ys")
    if len(xs) < 2:
        raise MetricError("spearman needs at least 2 observations")
    if len(set(xs)) < 2 or len(set(ys)) < 2:
        raise MetricError("spearman undefined for a constant sequence")
    rx = _average_ranks(xs)
    ry = _average_ranks(ys)
    n = len(rx)
    mx = sum(rx) / n
    my = sum(ry) / n
    cov = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    vx = sum((a - mx) ** 2 for a in rx)
    vy = sum((b - my) ** 2 for b in ry)
    return cov / math.sqrt(vx * vy)


def pos_word_accuracy(
    gold_word_tags: Sequence[str],
    token_predictions: Sequence[str],
    word_first_token: Sequence[int],
) -> float:
    """Word-level accuracy where each word inherits its first token's prediction.

    Predictions on continuation tokens of a multi-token word are ignored.
    """
    check_equal_lengths(gold_word_tags, word_first_token, "gold tags/first-token map")
    if len(gold_word_tags) == 0:
        raise MetricError("no words to evaluate")
    pred_word_tags = []
    for w, tok_idx in enumerate(word_first_token):
        if tok_idx is None:
            raise MetricError(f"word {w} has no first-token index")
        if not 0 <= tok_idx < len(token_predictions):
            raise MetricError(
                f"word {w} first-token index {tok_idx} outside prediction range "
                f"[0, {len(token_predictions)})"
            )
        pred_word_tags.append(token_predictions[tok_idx])
    return accuracy(gold_word_tags, pred_word_tags)


def read_predictions(path: str) -> list[tuple[str, str]]:
    """Read (id, label) predictions from JSON-lines or TSV."""
    out: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.lstrip().startswith("{"):
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise DataError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
                if "id" not in obj or "label" not in obj:
                    raise DataError(f"{path}:{lineno}: prediction object needs 'id' and 'label'")
                out.append((str(obj["id"]), str(obj["label"])))
            else:
                parts = line.split("\t")
                if len(parts) != 2:
                    raise DataError(f"{path}:{lineno}: expected 'id<TAB>label'")
                out.append((parts[0], parts[1]))
    return out


def read_pos_prediction_groups(path: str) -> list[list[str]]:
    """Read per-token tag lines grouped into sentences by blank lines."""
    groups: list[list[str]] = []
    current: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip():
                if current:
                    groups.append(current)
                    current = []
                continue
            current.append(line.strip())
    if current:
        groups.append(current)
    return groups
