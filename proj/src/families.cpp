#include "cspoly/families.hpp"

#include "cspoly/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace cspoly {

Subset subset_of(std::initializer_list<unsigned> elements) {
    Subset s = 0;
    for (unsigned e : elements) s |= Subset{1} << (e - 1);
    return s;
}

std::vector<unsigned> elements_of(Subset s) {
    std::vector<unsigned> out;
    for (unsigned i = 1; s != 0; ++i, s >>= 1)
        if (s & 1U) out.push_back(i);
    return out;
}

std::string subset_to_string(Subset s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (unsigned e : elements_of(s)) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

bool shatters(const std::vector<Subset>& sets, unsigned m) {
    const Subset all = full_set(m);
    const std::size_t j = sets.size();
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << j); ++pattern) {
        Subset atom = all;
        for (std::size_t i = 0; i < j && atom != 0; ++i)
            atom &= ((pattern >> i) & 1U) ? sets[i] : complement(sets[i], m);
        if (atom == 0) return false;
    }
    return true;
}

namespace {

// First failing k-tuple (lexicographic) whose leading index is `first`.
std::optional<std::vector<std::size_t>> first_failure_from(const SetFamily& f, unsigned k,
                                                           std::size_t first) {
    const std::size_t n = f.members.size();
    std::vector<std::size_t> idx(k);
    idx[0] = first;
    for (unsigned i = 1; i < k; ++i) idx[i] = first + i;
    if (k > 0 && idx[k - 1] >= n) return std::nullopt;
    std::vector<Subset> sets(k);
    while (true) {
        for (unsigned i = 0; i < k; ++i) sets[i] = f.members[idx[i]];
        if (!shatters(sets, f.m)) return idx;
        // advance positions 1..k-1 keeping idx[0] fixed
        int pos = static_cast<int>(k) - 1;
        while (pos >= 1 && idx[pos] == n - k + pos) --pos;
        if (pos < 1) return std::nullopt;
        ++idx[pos];
        for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

std::vector<Subset> candidate_sets(unsigned m, unsigned k) {
    if (m > 24) throw std::domain_error("generate_family: m > 24 is beyond the enumeration budget");
    const unsigned min_size = k >= 1 ? (1U << (k - 1)) : 1U;
    std::vector<Subset> out;
    const Subset limit = Subset{1} << m;
    for (Subset s = 1; s + 1 < limit; ++s) {
        const unsigned size = static_cast<unsigned>(std::popcount(s));
        if (size < min_size || m - size < min_size) continue;
        // For k >= 2 a family never holds both I and its complement; keep the
        // representative that omits element m.
        if (k >= 2 && contains(s, m)) continue;
        out.push_back(s);
    }
    return out;
}

// Adding x to `family` keeps every subfamily of size <= k able to extend to
// k sets: the atoms of any j chosen sets must each hold at least 2^(k-j)
// elements.
class Extender {
public:
    Extender(unsigned m, unsigned k) : m_(m), k_(k) {}

    bool compatible(const std::vector<Subset>& family, Subset x) const {
        std::vector<Subset> chosen;
        return check(family, 0, chosen, x);
    }

private:
    bool check(const std::vector<Subset>& family, std::size_t start, std::vector<Subset>& chosen,
               Subset x) const {
        chosen.push_back(x);
        const bool ok = atoms_large_enough(chosen);
        chosen.pop_back();
        if (!ok) return false;
        if (chosen.size() + 1 >= k_) return true;
        for (std::size_t i = start; i < family.size(); ++i) {
            chosen.push_back(family[i]);
            const bool sub = check(family, i + 1, chosen, x);
            chosen.pop_back();
            if (!sub) return false;
        }
        return true;
    }

    bool atoms_large_enough(const std::vector<Subset>& sets) const {
        const std::size_t j = sets.size();
        const unsigned need = j >= k_ ? 1U : (1U << (k_ - j));
        const Subset all = full_set(m_);
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << j); ++pattern) {
            Subset atom = all;
            for (std::size_t i = 0; i < j; ++i)
                atom &= ((pattern >> i) & 1U) ? sets[i] : complement(sets[i], m_);
            if (static_cast<unsigned>(std::popcount(atom)) < need) return false;
        }
        return true;
    }

    unsigned m_;
    unsigned k_;
};

std::vector<Subset> greedy(const std::vector<Subset>& order, const Extender& ext) {
    std::vector<Subset> family;
    for (Subset x : order)
        if (ext.compatible(family, x)) family.push_back(x);
    return family;
}

class ExhaustiveSearch {
public:
    ExhaustiveSearch(std::vector<Subset> candidates, const Extender& ext, std::uint64_t budget)
        : candidates_(std::move(candidates)), ext_(ext), budget_(budget) {}

    std::vector<Subset> run() {
        std::vector<Subset> current;
        dfs(0, current);
        if (nodes_ > budget_)
            throw SearchFailure("exhaustive search exceeded its node budget of " +
                                std::to_string(budget_));
        return best_;
    }

private:
    void dfs(std::size_t start, std::vector<Subset>& current) {
        if (++nodes_ > budget_) return;
        if (current.size() > best_.size()) best_ = current;
        for (std::size_t i = start; i < candidates_.size(); ++i) {
            if (current.size() + (candidates_.size() - i) <= best_.size()) return;
            if (!ext_.compatible(current, candidates_[i])) continue;
            current.push_back(candidates_[i]);
            dfs(i + 1, current);
            current.pop_back();
            if (nodes_ > budget_) return;
        }
    }

    std::vector<Subset> candidates_;
    const Extender& ext_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Subset> best_;
};

}  // namespace

IndependenceReport check_k_independence(const SetFamily& family, unsigned k, unsigned workers) {
    if (k == 0) throw std::domain_error("k-independence: k must be positive");
    IndependenceReport report;
    const std::size_t n = family.members.size();
    if (n < k) {
        report.vacuous = true;
        return report;
    }
    const std::size_t leading = n - k + 1;
    std::vector<std::optional<std::vector<std::size_t>>> failures(leading);
    parallel_for(leading, workers,
                 [&](std::size_t i) { failures[i] = first_failure_from(family, k, i); });
    for (auto& f : failures) {
        if (f) {
            report.independent = false;
            report.witness = *f;
            break;
        }
    }
    return report;
}

bool is_k_independent(const SetFamily& family, unsigned k, unsigned workers) {
    return check_k_independence(family, k, workers).independent;
}

SearchStrategy parse_strategy(const std::string& name) {
    if (name == "exhaustive") return SearchStrategy::Exhaustive;
    if (name == "greedy") return SearchStrategy::Greedy;
    if (name == "random_restart" || name == "random-restart") return SearchStrategy::RandomRestart;
    throw std::invalid_argument("unknown search strategy: " + name);
}

std::string to_string(SearchStrategy s) {
    switch (s) {
        case SearchStrategy::Exhaustive: return "exhaustive";
        case SearchStrategy::Greedy: return "greedy";
        case SearchStrategy::RandomRestart: return "random_restart";
    }
    return {};
}

SetFamily generate_family(unsigned m, unsigned k, std::size_t target_size, SearchStrategy strategy,
                          const SearchOptions& options) {
    if (k == 0) throw std::domain_error("generate_family: k must be positive");
    if (m == 0 || m > kMaxGroundSet) throw std::domain_error("generate_family: m out of range");
    if (k >= 2 && m < (1U << k))
        throw SearchFailure("generate_family: [" + std::to_string(m) + "] is too small for " +
                            std::to_string(1U << k) + " nonempty atoms");

    const std::vector<Subset> candidates = candidate_sets(m, k);
    const Extender ext(m, k);

    std::vector<Subset> best;
    switch (strategy) {
        case SearchStrategy::Exhaustive:
            best = ExhaustiveSearch(candidates, ext, options.node_budget).run();
            break;
        case SearchStrategy::Greedy:
            best = greedy(candidates, ext);
            break;
        case SearchStrategy::RandomRestart: {
            best = greedy(candidates, ext);
            std::vector<Subset> order = candidates;
            for (unsigned r = 0; r < options.restarts && best.size() < target_size; ++r) {
                std::mt19937_64 rng(options.seed + r);
                std::shuffle(order.begin(), order.end(), rng);
                auto found = greedy(order, ext);
                if (found.size() > best.size()) best = std::move(found);
            }
            break;
        }
    }

    SetFamily family{m, best, std::nullopt};
    if (family.size() < target_size)
        throw SearchFailure(to_string(strategy) + " search found " + std::to_string(family.size()) +
                            " sets, below the target of " + std::to_string(target_size));
    if (!is_k_independent(family, k))
        throw SearchFailure("generated family failed k-independence verification");
    family.verified_k = k;
    return family;
}

double family_size_bound(unsigned m, unsigned k) {
    if (k < 2) throw std::domain_error("family_size_bound: k must be at least 2");
    const double exponent = static_cast<double>(m) / (5.0 * (k - 1) * std::ldexp(1.0, static_cast<int>(k)));
    return std::exp2(exponent);
}

}  // namespace cspoly
