#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

// Binary-classification evaluation: confusion matrix, accuracy / precision /
// recall / F1, ROC curve, AUC, KS.

namespace fedclus::metrics {

class LengthMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class EmptyInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class SingleClassInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConfusionMatrix {
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    std::size_t total() const { return tp + fp + fn + tn; }
};

struct ClassificationMetrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

// Ordered (fpr, tpr) points including (0,0) and (1,1); both coordinates
// non-decreasing along the list.
using RocCurve = std::vector<RocPoint>;

// Predict positive iff score >= threshold.
inline ConfusionMatrix confusion_matrix(std::span<const double> scores,
                                        std::span<const int> labels, double threshold) {
    if (scores.size() != labels.size())
        throw LengthMismatch("confusion_matrix: scores and labels differ in length");
    if (scores.empty()) throw EmptyInput("confusion_matrix: empty input");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const bool predicted = scores[i] >= threshold;
        if (labels[i] == 1) {
            predicted ? ++cm.tp : ++cm.fn;
        } else {
            predicted ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

// Zero-denominator convention: precision/recall/F1 are 0 when undefined.
inline ClassificationMetrics classification_metrics(const ConfusionMatrix& cm) {
    ClassificationMetrics m;
    const double n = static_cast<double>(cm.total());
    m.accuracy = static_cast<double>(cm.tp + cm.tn) / n;
    m.precision = (cm.tp + cm.fp) ? static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp) : 0.0;
    m.recall = (cm.tp + cm.fn) ? static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn) : 0.0;
    const std::size_t f1_den = 2 * cm.tp + cm.fp + cm.fn;
    m.f1 = f1_den ? 2.0 * static_cast<double>(cm.tp) / static_cast<double>(f1_den) : 0.0;
    return m;
}

// Threshold sweep over the distinct score values in descending order. Tied
// scores move together (one point per distinct score); (0,0) and (1,1) cap
// the curve.
inline RocCurve roc_curve(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size())
        throw LengthMismatch("roc_curve: scores and labels differ in length");
    if (scores.empty()) throw EmptyInput("roc_curve: empty input");

    std::size_t positives = 0;
    for (int y : labels) positives += (y == 1);
    const std::size_t negatives = labels.size() - positives;
    if (positives == 0 || negatives == 0)
        throw SingleClassInput("roc_curve: both classes must be present");

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });

    RocCurve curve;
    curve.push_back({0.0, 0.0});
    std::size_t tp = 0, fp = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        const double s = scores[order[i]];
        while (i < order.size() && scores[order[i]] == s) {
            (labels[order[i]] == 1) ? ++tp : ++fp;
            ++i;
        }
        curve.push_back({static_cast<double>(fp) / static_cast<double>(negatives),
                         static_cast<double>(tp) / static_cast<double>(positives)});
    }
    if (curve.back().fpr != 1.0 || curve.back().tpr != 1.0) curve.push_back({1.0, 1.0});
    return curve;
}

// Trapezoidal area under the curve.
inline double auc(const RocCurve& curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        area += (curve[i].fpr - curve[i - 1].fpr) * (curve[i].tpr + curve[i - 1].tpr) * 0.5;
    return area;
}

// KS = max over curve points of (TPR - FPR).
inline double ks_statistic(const RocCurve& curve) {
    double ks = 0.0;
    for (const auto& p : curve) ks = std::max(ks, p.tpr - p.fpr);
    return ks;
}

}  // namespace fedclus::metrics
