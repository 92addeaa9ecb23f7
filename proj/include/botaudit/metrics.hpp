#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace botaudit {

// Row = true class, column = predicted class. For binary tasks class 1 (bot)
// is the positive class, so TP = counts[1][1], TN = counts[0][0].
class ConfusionMatrix {
public:
    explicit ConfusionMatrix(std::size_t n_classes);

    void add(std::size_t truth, std::size_t predicted, int64_t count = 1);

    std::size_t n_classes() const { return n_; }
    int64_t at(std::size_t truth, std::size_t predicted) const;
    int64_t total() const;
    int64_t row_sum(std::size_t truth) const;

    bool binary() const { return n_ == 2; }
    int64_t tp() const;
    int64_t tn() const;
    int64_t fp() const;
    int64_t fn() const;

private:
    std::size_t n_;
    std::vector<int64_t> counts_;
};

ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> predictions, std::size_t n_classes);

// Fraction of examples labeled correctly.
double accuracy(const ConfusionMatrix& cm);

// Harmonic mean of precision and recall for the positive class; 0 when
// TP = 0 with errors present. Binary matrices only.
double f1(const ConfusionMatrix& cm);

// Mean per-class recall over classes that actually occur; the binary case is
// (TPR + TNR) / 2.
double balanced_accuracy(const ConfusionMatrix& cm);

struct MetricSet {
    double accuracy = 0.0;
    std::optional<double> f1; // binary tasks only
    double balanced_accuracy = 0.0;

    bool operator==(const MetricSet&) const = default;
};

MetricSet compute_metrics(const ConfusionMatrix& cm);

// Unweighted mean (cross-validation aggregation). F1 is present in the
// result only if present in every part.
MetricSet mean_metrics(std::span<const MetricSet> parts);

} // namespace botaudit
