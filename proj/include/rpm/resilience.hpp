#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "rpm/text.hpp"
#include "rpm/text_index.hpp"

namespace rpm {

// Decision procedures for a single substring P with a known occurrence set.
// A "token" is one substitution by a letter outside the alphabet; it destroys
// every occurrence of P that covers the substituted position.

/// Occurrences destroyable with `tokens` tokens, for a pattern of length
/// `length` whose occurrences `occ` (ascending) never cover a position three
/// times. Overlapping neighbour pairs are taken greedily left to right; each
/// remaining token accounts for one occurrence. The result may exceed
/// occ.size() when tokens outnumber occurrences.
std::int64_t greedy_destroyable(std::span<const index_t> occ, std::int64_t tokens, index_t length);

/// Sorted occurrence list, materialized only when a check needs it.
using OccurrenceProvider = std::function<std::span<const index_t>()>;

/// Resilience of an aperiodic pattern with `frequency` >= tau + k occurrences.
bool aperiodic_resilient(index_t frequency, index_t length, index_t tau, index_t k,
                         const OccurrenceProvider& occurrences);

/// A run's share of the occurrences of a periodic pattern:
/// first, first + p, ..., first + (count - 1) p.
struct Cluster {
    index_t first = 0;
    index_t count = 0;
    friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct ClusterSet {
    std::vector<Cluster> clusters;  // ascending `first`
    bool saturated = false;         // at least tau + 2k clusters exist
};

/// Groups the occurrences of a periodic pattern (length `length`, smallest
/// period `period`) into per-run clusters, jumping over each cluster with one
/// lcp query. Stops as soon as tau + 2k clusters are found.
ClusterSet create_clusters(std::span<const index_t> occ, index_t length, index_t period, index_t tau,
                           index_t k, const EnhancedIndex& idx);

/// Intermediate state of the periodic check, exposed for inspection.
struct PeriodicCheckState {
    std::int64_t alpha = 0;      // occurrences one token can destroy inside a cluster
    std::int64_t tokens = 0;     // t: tokens left
    std::int64_t destroyed = 0;  // d
    std::int64_t pairs = 0;      // kappa
    std::map<std::int64_t, std::int64_t, std::greater<>> remainders;  // residue >= 3 -> multiplicity
    std::vector<Cluster> small_residue;                               // residue 1 or 2
};

/// First stage only: full alpha-batches per cluster, residues routed to the
/// remainder heap or the small-residue list.
PeriodicCheckState periodic_first_stage(index_t frequency, index_t length, index_t period, index_t tau,
                                        index_t k, std::span<const Cluster> clusters);

/// Resilience of a periodic pattern given its clusters.
bool periodic_resilient(index_t frequency, index_t length, index_t period, index_t tau, index_t k,
                        const ClusterSet& clusters);

}  // namespace rpm
