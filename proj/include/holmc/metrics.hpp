#pragma once

#include <cstdint>
#include <vector>

#include "holmc/multicut.hpp"

namespace holmc {

struct Scores {
    double rand_index = 0;
    double precision = 0;
    double recall = 0;
    double f_measure = 0;
};

/* Compares a predicted partition against ground truth labels. The Rand index
 * counts node pairs on which both agree. Precision, recall and F measure are
 * macro averages over a greedy one-to-one matching of predicted to truth
 * classes by overlap; unmatched classes score zero. */
Scores score_partition(const NodePartition& predicted, const std::vector<std::uint32_t>& truth);

} // namespace holmc
