#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cspoly {

/// A subset of [m] = {1..m} as a bitmask: element i is bit (i - 1).
using Subset = std::uint64_t;

inline constexpr unsigned kMaxGroundSet = 63;

inline Subset full_set(unsigned m) { return m >= 64 ? ~Subset{0} : ((Subset{1} << m) - 1); }
inline Subset complement(Subset s, unsigned m) { return full_set(m) & ~s; }
inline bool contains(Subset s, unsigned element) { return (s >> (element - 1)) & 1U; }

Subset subset_of(std::initializer_list<unsigned> elements);
std::vector<unsigned> elements_of(Subset s);
std::string subset_to_string(Subset s);

/// A family of distinct subsets of [m].
struct SetFamily {
    unsigned m = 0;
    std::vector<Subset> members;
    std::optional<unsigned> verified_k;

    std::size_t size() const { return members.size(); }
};

/// Outcome of a k-independence check. `witness` holds the indices of the
/// first k members (in lexicographic order of index tuples) that fail to
/// generate all 2^k atoms.
struct IndependenceReport {
    bool independent = true;
    bool vacuous = false;  // fewer than k members
    std::vector<std::size_t> witness;
};

/// True iff the given sets generate all 2^|sets| nonempty atoms inside [m].
bool shatters(const std::vector<Subset>& sets, unsigned m);

IndependenceReport check_k_independence(const SetFamily& family, unsigned k, unsigned workers = 1);

bool is_k_independent(const SetFamily& family, unsigned k, unsigned workers = 1);

enum class SearchStrategy { Exhaustive, Greedy, RandomRestart };

SearchStrategy parse_strategy(const std::string& name);
std::string to_string(SearchStrategy s);

class SearchFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    std::uint64_t seed = 1;
    std::uint64_t node_budget = 50'000'000;  // exhaustive search nodes
    unsigned restarts = 64;                  // random_restart rounds
};

/// Returns a verified k-independent family of size >= target_size.
/// Exhaustive search returns a maximum-size family (it fails if the node
/// budget runs out before the search completes).
SetFamily generate_family(unsigned m, unsigned k, std::size_t target_size, SearchStrategy strategy,
                          const SearchOptions& options = {});

/// 2^(m / (5 (k-1) 2^k)): the size guaranteed by the known deterministic
/// constructions, used for comparison in reports.
double family_size_bound(unsigned m, unsigned k);

}  // namespace cspoly
