"""Gaussian Naive Bayes over the 16 feature dimensions.

The joint log score of a class y and a feature vector x is
ln P(y) + sum_i ln N(x_i; mean_{y,i}, var_{y,i}).  All arithmetic stays in
log space so the 16-term product cannot underflow; variances are clamped
to a floor so every score is finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CorruptModel, EmptyTrainingSet, VersionMismatch
from .features import N_FEATURES, FeatureVector
from .fileio import atomic_write_text
from .grading import Grade

# The effective variance floor is the larger of these two terms:
# RELATIVE_VARIANCE_FLOOR times the largest pooled per-feature variance,
# and the absolute floor passed to train_nb.
RELATIVE_VARIANCE_FLOOR = 1e-9
ABSOLUTE_VARIANCE_FLOOR = 1e-12

_MAGIC = "mtqe-nb-model"
_FORMAT_VERSION = 1
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


@dataclass(frozen=True)
class Posterior:
    """Per-class joint log scores and the tie-broken argmax."""

    log_joint: dict[Grade, float]
    predicted: Grade


def _as_values(x) -> tuple[float, ...]:
    if isinstance(x, FeatureVector):
        return x.values()
    values = tuple(float(v) for v in x)
    if len(values) != N_FEATURES:
        raise ValueError(f"expected {N_FEATURES} feature values, got {len(values)}")
    return values


class NaiveBayesModel:
    """Class priors plus per-class, per-feature Gaussian parameters.

    Immutable after training; predictions are pure functions of the input.
    """

    def __init__(self, classes, priors, means, variances, variance_floor):
        self.classes = tuple(classes)  # ascending grade order, ties go to the first
        self.priors = priors  # {Grade: P(y)}
        self.means = means  # {Grade: 16 floats}
        self.variances = variances  # {Grade: 16 floats, all >= variance_floor}
        self.variance_floor = variance_floor

    def log_joint(self, x) -> dict[Grade, float]:
        """ln P(y) + sum of Gaussian log densities, for every class."""
        values = _as_values(x)
        scores: dict[Grade, float] = {}
        for y in self.classes:
            mean = self.means[y]
            var = self.variances[y]
            total = math.log(self.priors[y])
            for i in range(N_FEATURES):
                diff = values[i] - mean[i]
                total -= _HALF_LOG_TWO_PI + 0.5 * math.log(var[i])
                total -= (diff * diff) / (2.0 * var[i])
            scores[y] = total
        return scores

    def predict(self, x) -> Posterior:
        """Argmax of log_joint; exact ties resolve to the lowest grade."""
        scores = self.log_joint(x)
        best = self.classes[0]
        for y in self.classes[1:]:
            if scores[y] > scores[best]:
                best = y
        return Posterior(scores, best)

    def save(self, path) -> None:
        """Write the model as versioned UTF-8 text with hex floats."""
        lines = [
            f"{_MAGIC}\t{_FORMAT_VERSION}",
            f"variance_floor\t{self.variance_floor.hex()}",
            f"classes\t{len(self.classes)}",
        ]
        for y in self.classes:
            lines.append(f"class\t{y.label}")
            lines.append(f"prior\t{self.priors[y].hex()}")
            lines.append("means\t" + " ".join(v.hex() for v in self.means[y]))
            lines.append("variances\t" + " ".join(v.hex() for v in self.variances[y]))
        lines.append("end")
        atomic_write_text(path, "\n".join(lines) + "\n")


def _population_moments(vectors, index):
    mean = math.fsum(v[index] for v in vectors) / len(vectors)
    var = math.fsum((v[index] - mean) ** 2 for v in vectors) / len(vectors)
    return mean, var


def train_nb(rows, variance_floor: float = ABSOLUTE_VARIANCE_FLOOR) -> NaiveBayesModel:
    """Fit priors and per-class Gaussians from (features, grade) rows.

    Priors are class relative frequencies; means are sample means and
    variances population variances, clamped to the effective floor
    (RELATIVE_VARIANCE_FLOOR times the largest pooled feature variance, but
    never below ``variance_floor``).  Classes absent from the rows are
    omitted.  Sums use fsum, so row order cannot change the model.

    Raises:
        EmptyTrainingSet: when no rows are given.
    """
    if variance_floor <= 0.0:
        raise ValueError(f"variance_floor must be > 0, got {variance_floor}")
    data = [(_as_values(x), y) for x, y in rows]
    if not data:
        raise EmptyTrainingSet()
    all_vectors = [values for values, _ in data]
    pooled_max = max(
        _population_moments(all_vectors, i)[1] for i in range(N_FEATURES)
    )
    floor = max(RELATIVE_VARIANCE_FLOOR * pooled_max, variance_floor)
    by_class: dict[Grade, list[tuple[float, ...]]] = {}
    for values, y in data:
        by_class.setdefault(y, []).append(values)
    classes = tuple(sorted(by_class))
    priors = {y: len(by_class[y]) / len(data) for y in classes}
    means = {}
    variances = {}
    for y in classes:
        vectors = by_class[y]
        moments = [_population_moments(vectors, i) for i in range(N_FEATURES)]
        means[y] = tuple(m for m, _ in moments)
        variances[y] = tuple(max(v, floor) for _, v in moments)
    return NaiveBayesModel(classes, priors, means, variances, floor)


def _take(lines, index, key, n_values):
    if index >= len(lines):
        raise CorruptModel(f"missing '{key}' line")
    cells = lines[index].split("\t")
    if len(cells) != 2 or cells[0] != key:
        raise CorruptModel(f"expected '{key}' line, got {lines[index]!r}")
    parts = cells[1].split(" ")
    if len(parts) != n_values:
        raise CorruptModel(f"'{key}' line carries {len(parts)} values, expected {n_values}")
    return parts


def _hex_floats(parts, key):
    try:
        return tuple(float.fromhex(p) for p in parts)
    except ValueError:
        raise CorruptModel(f"bad float in '{key}' line") from None


def load_model(path) -> NaiveBayesModel:
    """Load a model written by :meth:`NaiveBayesModel.save`.

    The round trip preserves every parameter bit-for-bit, so predictions
    match the saved model exactly.
    """
    with open(path, encoding="utf-8") as handle:
        lines = handle.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CorruptModel("empty file")
    first = lines[0].split("\t")
    if len(first) != 2 or first[0] != _MAGIC:
        raise CorruptModel("missing model signature")
    try:
        version = int(first[1])
    except ValueError:
        raise CorruptModel("non-integer format version") from None
    if version > _FORMAT_VERSION:
        raise VersionMismatch(version, _FORMAT_VERSION)
    (floor_text,) = _take(lines, 1, "variance_floor", 1)
    variance_floor = _hex_floats([floor_text], "variance_floor")[0]
    (count_text,) = _take(lines, 2, "classes", 1)
    try:
        n_classes = int(count_text)
    except ValueError:
        raise CorruptModel("non-integer class count") from None
    if not 1 <= n_classes <= len(Grade):
        raise CorruptModel(f"class count {n_classes} outside 1..{len(Grade)}")
    classes = []
    priors = {}
    means = {}
    variances = {}
    index = 3
    for _ in range(n_classes):
        (label,) = _take(lines, index, "class", 1)
        try:
            grade = Grade.from_label(label)
        except ValueError:
            raise CorruptModel(f"unknown class label {label!r}") from None
        (prior_text,) = _take(lines, index + 1, "prior", 1)
        priors[grade] = _hex_floats([prior_text], "prior")[0]
        means[grade] = _hex_floats(_take(lines, index + 2, "means", N_FEATURES), "means")
        variances[grade] = _hex_floats(
            _take(lines, index + 3, "variances", N_FEATURES), "variances"
        )
        classes.append(grade)
        index += 4
    if index >= len(lines) or lines[index] != "end":
        raise CorruptModel("missing end marker")
    if classes != sorted(classes):
        raise CorruptModel("classes are not in ascending grade order")
    if len(set(classes)) != len(classes):
        raise CorruptModel("duplicate class")
    return NaiveBayesModel(tuple(classes), priors, means, variances, variance_floor)
