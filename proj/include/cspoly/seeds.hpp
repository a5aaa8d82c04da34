#pragma once

#include "cspoly/circle.hpp"
#include "cspoly/families.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <vector>

namespace cspoly {

/// Where a seed point came from.
struct Provenance {
    enum class Origin { Grid, Subset } origin = Origin::Grid;
    unsigned grid_index = 0;  // j in 1..2(3^m - 1) for grid points
    Subset subset = 0;        // I (or I^c) for subset-derived points
    unsigned bit = 0;         // a in {0, 1}
    int member = -1;          // position inside a cluster, -1 if unclustered

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SeedPoint {
    CirclePoint point;
    int cluster_id = 0;
    Provenance provenance;
};

/// A finite set of circle points grouped into clusters. When `symmetric`,
/// the antipode map permutes the points and sends cluster c onto
/// opposite_cluster[c].
struct SeedSet {
    std::vector<SeedPoint> points;
    unsigned m = 0;
    unsigned s = 1;
    bool symmetric = false;
    std::vector<CirclePoint> cluster_centers;
    std::vector<int> opposite_cluster;  // -1 where no opposite cluster exists

    std::size_t size() const { return points.size(); }
    std::size_t cluster_count() const { return cluster_centers.size(); }
    const CirclePoint& angle(std::size_t i) const { return points[i].point; }
    std::vector<CirclePoint> angles() const;

    /// Exact test: point j is the antipode of point i.
    bool antipodal(std::size_t i, std::size_t j) const;
    bool same_cluster(std::size_t i, std::size_t j) const {
        return points[i].cluster_id == points[j].cluster_id;
    }
    bool opposite_clusters(std::size_t i, std::size_t j) const;

    /// Index of the exact antipode of point i, if present.
    std::optional<std::size_t> antipode_index(std::size_t i) const;
};

/// Width (in units of pi) of the arc holding each cluster of build_A_clustered.
Rational grid_cluster_width(unsigned m);
/// Width (in units of pi) of the arc holding each cluster of build_V_clustered.
Rational subset_cluster_width(unsigned m);

SeedSet build_A(unsigned m);
SeedSet build_A_clustered(unsigned m, unsigned s);

/// Points (or whole clusters) whose center lies in [0, pi).
SeedSet half_set(const SeedSet& set);

/// x(I, a): x_0 = a and x_n = a_0 + ... + x_{n-1} (+1 iff n in I) mod 2.
std::vector<unsigned> binary_seq(Subset I, unsigned a, unsigned m);

/// t(I, a) = pi * sum_j x_j / 3^j.
CirclePoint seed_angle(Subset I, unsigned a, unsigned m);

/// eps_I = sum_{i in I} 10^(-i-m).
Rational epsilon_of(Subset I, unsigned m);

SeedSet build_V(const SetFamily& family, unsigned m);
SeedSet build_V_clustered(const SetFamily& family, unsigned m, unsigned s);

/// True iff 3^n t1 != 3^n t2 for all distinct points and all 1 <= n <= max_power.
bool check_injectivity(const SeedSet& set, unsigned max_power);

/// Least n in [1, m] with all 3^n t_i in [pi, 3pi/2), if any. Throws
/// DomainError if the points are not distinct members of `set` or contain an
/// antipodal pair.
std::optional<unsigned> small_arc_witness(const SeedSet& set, std::span<const CirclePoint> points,
                                          unsigned m);

/// Raised when a construction's postcondition fails.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const SeedSet& set);
SeedSet seed_set_from_json(const nlohmann::json& j);

}  // namespace cspoly
