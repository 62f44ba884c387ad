#include "holmc/metrics.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "holmc/errors.hpp"

namespace holmc {

namespace {

double pairs2(double m) { return 0.5 * m * (m - 1.0); }

} // namespace

Scores score_partition(const NodePartition& predicted, const std::vector<std::uint32_t>& truth) {
    const std::size_t n = predicted.class_of.size();
    if (truth.size() != n)
        throw Error("label count does not match partition size");
    if (n == 0)
        return {1.0, 1.0, 1.0, 1.0};

    std::unordered_map<std::uint32_t, std::size_t> pred_size, truth_size;
    std::unordered_map<std::uint64_t, std::size_t> cell;
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint32_t p = predicted.class_of[v];
        const std::uint32_t t = truth[v];
        ++pred_size[p];
        ++truth_size[t];
        ++cell[(static_cast<std::uint64_t>(p) << 32) | t];
    }

    double same_pred = 0, same_truth = 0, same_both = 0;
    for (const auto& [id, size] : pred_size)
        same_pred += pairs2(static_cast<double>(size));
    for (const auto& [id, size] : truth_size)
        same_truth += pairs2(static_cast<double>(size));
    for (const auto& [key, size] : cell)
        same_both += pairs2(static_cast<double>(size));

    const double total = pairs2(static_cast<double>(n));
    Scores scores;
    scores.rand_index =
        total > 0 ? (total - same_pred - same_truth + 2.0 * same_both) / total : 1.0;

    /* overlaps sorted by size, ties by class ids, matched greedily */
    std::vector<std::tuple<std::size_t, std::uint32_t, std::uint32_t>> overlaps;
    overlaps.reserve(cell.size());
    for (const auto& [key, size] : cell)
        overlaps.emplace_back(size, static_cast<std::uint32_t>(key >> 32),
                              static_cast<std::uint32_t>(key & 0xffffffffu));
    std::sort(overlaps.begin(), overlaps.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b))
            return std::get<0>(a) > std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b))
            return std::get<1>(a) < std::get<1>(b);
        return std::get<2>(a) < std::get<2>(b);
    });

    std::unordered_set<std::uint32_t> pred_used, truth_used;
    double precision_sum = 0, recall_sum = 0;
    for (const auto& [size, p, t] : overlaps) {
        if (pred_used.count(p) || truth_used.count(t))
            continue;
        pred_used.insert(p);
        truth_used.insert(t);
        precision_sum += static_cast<double>(size) / static_cast<double>(pred_size[p]);
        recall_sum += static_cast<double>(size) / static_cast<double>(truth_size[t]);
    }

    scores.precision = precision_sum / static_cast<double>(pred_size.size());
    scores.recall = recall_sum / static_cast<double>(truth_size.size());
    scores.f_measure = scores.precision + scores.recall > 0
                           ? 2.0 * scores.precision * scores.recall /
                                 (scores.precision + scores.recall)
                           : 0.0;
    return scores;
}

} // namespace holmc
