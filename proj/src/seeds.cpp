#include "cspoly/seeds.hpp"

#include <algorithm>
#include <set>

namespace cspoly {

namespace {

Rational pow10_neg(unsigned e) { return Rational(Integer(1), boost::multiprecision::pow(Integer(10), e)); }

// Offsets (in units of pi) of s points spread over an open arc of the given
// width centered at zero: width * (j/(s+1) - 1/2), j = 1..s.
std::vector<Rational> cluster_offsets(const Rational& width, unsigned s) {
    std::vector<Rational> out;
    for (unsigned j = 1; j <= s; ++j) out.push_back(width * (Rational(j, s + 1) - Rational(1, 2)));
    return out;
}

// Replaces every point of `base` by s points around it. Cluster ids and the
// opposite map carry over; antipodal centers get antipodal clusters because
// the offsets are shared.
SeedSet clusterize(const SeedSet& base, unsigned s, const Rational& width) {
    SeedSet out;
    out.m = base.m;
    out.s = s;
    out.symmetric = base.symmetric;
    out.cluster_centers = base.cluster_centers;
    out.opposite_cluster = base.opposite_cluster;
    const auto offsets = cluster_offsets(width, s);
    for (const SeedPoint& p : base.points) {
        for (unsigned j = 0; j < s; ++j) {
            SeedPoint q = p;
            q.point = rotate(p.point, offsets[j]);
            q.provenance.member = static_cast<int>(j);
            out.points.push_back(q);
        }
    }
    return out;
}

void require_distinct(const SeedSet& set) {
    std::vector<Rational> qs;
    qs.reserve(set.size());
    for (const auto& p : set.points) qs.push_back(p.point.pi_fraction());
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
        throw DomainError("seed set contains duplicate angles");
}

}  // namespace

std::vector<CirclePoint> SeedSet::angles() const {
    std::vector<CirclePoint> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.point);
    return out;
}

bool SeedSet::antipodal(std::size_t i, std::size_t j) const {
    return antipode(points[i].point) == points[j].point;
}

bool SeedSet::opposite_clusters(std::size_t i, std::size_t j) const {
    const int ci = points[i].cluster_id;
    if (ci < 0 || static_cast<std::size_t>(ci) >= opposite_cluster.size()) return false;
    return opposite_cluster[static_cast<std::size_t>(ci)] == points[j].cluster_id;
}

std::optional<std::size_t> SeedSet::antipode_index(std::size_t i) const {
    const CirclePoint target = antipode(points[i].point);
    for (std::size_t j = 0; j < points.size(); ++j)
        if (points[j].point == target) return j;
    return std::nullopt;
}

Rational grid_cluster_width(unsigned m) { return pow10_neg(m) / 4; }

Rational subset_cluster_width(unsigned m) { return pow10_neg(2 * m + 2); }

SeedSet build_A(unsigned m) {
    if (m < 1) throw DomainError("build_A: m must be at least 1");
    const Integer half = pow3(m) - 1;
    const std::size_t count = 2 * static_cast<std::size_t>(half);
    SeedSet set;
    set.m = m;
    set.s = 1;
    set.symmetric = true;
    for (std::size_t j = 1; j <= count; ++j) {
        SeedPoint p;
        p.point = CirclePoint::from_pi_fraction(Rational(Integer(j - 1), half));
        p.cluster_id = static_cast<int>(j - 1);
        p.provenance.origin = Provenance::Origin::Grid;
        p.provenance.grid_index = static_cast<unsigned>(j);
        set.points.push_back(p);
        set.cluster_centers.push_back(p.point);
        set.opposite_cluster.push_back(static_cast<int>((j - 1 + count / 2) % count));
    }
    return set;
}

SeedSet build_A_clustered(unsigned m, unsigned s) {
    if (m < 2) throw DomainError("build_A_clustered: m must be at least 2");
    if (s < 2) throw DomainError("build_A_clustered: s must be at least 2");
    return clusterize(build_A(m), s, grid_cluster_width(m));
}

SeedSet half_set(const SeedSet& set) {
    if (!set.symmetric) throw DomainError("half_set: seed set is not centrally symmetric");
    SeedSet out;
    out.m = set.m;
    out.s = set.s;
    out.symmetric = false;
    std::vector<int> remap(set.cluster_count(), -1);
    for (std::size_t c = 0; c < set.cluster_count(); ++c) {
        if (set.cluster_centers[c].pi_fraction() < 1) {
            remap[c] = static_cast<int>(out.cluster_centers.size());
            out.cluster_centers.push_back(set.cluster_centers[c]);
            out.opposite_cluster.push_back(-1);
        }
    }
    for (const SeedPoint& p : set.points) {
        const int c = remap[static_cast<std::size_t>(p.cluster_id)];
        if (c < 0) continue;
        SeedPoint q = p;
        q.cluster_id = c;
        out.points.push_back(q);
    }
    return out;
}

std::vector<unsigned> binary_seq(Subset I, unsigned a, unsigned m) {
    if (m > kMaxGroundSet || (I & ~full_set(m)) != 0)
        throw DomainError("binary_seq: I is not a subset of [m]");
    std::vector<unsigned> x(m + 1);
    x[0] = a & 1U;
    unsigned sum = x[0];
    for (unsigned n = 1; n <= m; ++n) {
        x[n] = (sum + (contains(I, n) ? 1U : 0U)) & 1U;
        sum += x[n];
    }
    return x;
}

CirclePoint seed_angle(Subset I, unsigned a, unsigned m) {
    const auto x = binary_seq(I, a, m);
    Rational q(0);
    for (unsigned j = 0; j <= m; ++j)
        if (x[j]) q += Rational(Integer(1), pow3(j));
    return CirclePoint::from_pi_fraction(q);
}

Rational epsilon_of(Subset I, unsigned m) {
    if (m > kMaxGroundSet || (I & ~full_set(m)) != 0)
        throw DomainError("epsilon_of: I is not a subset of [m]");
    Rational e(0);
    for (unsigned i : elements_of(I)) e += pow10_neg(i + m);
    return e;
}

SeedSet build_V(const SetFamily& family, unsigned m) {
    const Subset all = full_set(m);
    std::set<Subset> seen;
    for (Subset I : family.members) {
        if ((I & ~all) != 0) throw DomainError("build_V: member " + subset_to_string(I) + " is not a subset of [m]");
        if (seen.count(complement(I, m)) || seen.count(I))
            throw DomainError("build_V: family holds a duplicate or complementary pair at " +
                              subset_to_string(I));
        seen.insert(I);
    }

    SeedSet set;
    set.m = m;
    set.s = 1;
    set.symmetric = true;
    for (std::size_t f = 0; f < family.members.size(); ++f) {
        const Subset I = family.members[f];
        const Rational eps = epsilon_of(I, m);
        SeedPoint p0;
        p0.point = rotate(seed_angle(I, 0, m), eps);
        p0.cluster_id = static_cast<int>(2 * f);
        p0.provenance = {Provenance::Origin::Subset, 0, I, 0, -1};
        SeedPoint p1;
        p1.point = rotate(seed_angle(complement(I, m), 1, m), eps);
        p1.cluster_id = static_cast<int>(2 * f + 1);
        p1.provenance = {Provenance::Origin::Subset, 0, complement(I, m), 1, -1};
        set.points.push_back(p0);
        set.points.push_back(p1);
        set.cluster_centers.push_back(p0.point);
        set.cluster_centers.push_back(p1.point);
        set.opposite_cluster.push_back(static_cast<int>(2 * f + 1));
        set.opposite_cluster.push_back(static_cast<int>(2 * f));
    }
    require_distinct(set);
    return set;
}

SeedSet build_V_clustered(const SetFamily& family, unsigned m, unsigned s) {
    if (s < 2) throw DomainError("build_V_clustered: s must be at least 2");
    SeedSet set = clusterize(build_V(family, m), s, subset_cluster_width(m));
    require_distinct(set);
    if (!check_injectivity(set, m))
        throw ConstructionError("build_V_clustered: clusters break injectivity of the tripling maps");
    return set;
}

bool check_injectivity(const SeedSet& set, unsigned max_power) {
    std::vector<Rational> images(set.size());
    for (unsigned n = 1; n <= max_power; ++n) {
        const Rational scale(pow3(n));
        for (std::size_t i = 0; i < set.size(); ++i)
            images[i] = reduce_mod2(set.points[i].point.pi_fraction() * scale);
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    }
    return true;
}

std::optional<unsigned> small_arc_witness(const SeedSet& set, std::span<const CirclePoint> points,
                                          unsigned m) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        const bool member = std::any_of(set.points.begin(), set.points.end(),
                                        [&](const SeedPoint& p) { return p.point == points[i]; });
        if (!member) throw DomainError("small_arc_witness: point is not in the seed set");
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) throw DomainError("small_arc_witness: repeated point");
            if (antipode(points[i]) == points[j])
                throw DomainError("small_arc_witness: antipodal pair in input");
        }
    }
    const Arc target = third_quadrant_arc();
    for (unsigned n = 1; n <= m; ++n) {
        const bool all_in = std::all_of(points.begin(), points.end(),
                                        [&](const CirclePoint& t) { return in_arc(triple_pow(t, n), target); });
        if (all_in) return n;
    }
    return std::nullopt;
}

nlohmann::json to_json(const SeedSet& set) {
    using nlohmann::json;
    json pts = json::array();
    for (const auto& p : set.points) {
        json prov;
        if (p.provenance.origin == Provenance::Origin::Grid) {
            prov = {{"kind", "grid"}, {"j", p.provenance.grid_index}};
        } else {
            prov = {{"kind", "subset"}, {"subset", p.provenance.subset}, {"a", p.provenance.bit}};
        }
        if (p.provenance.member >= 0) prov["member"] = p.provenance.member;
        pts.push_back({{"num", numerator(p.point.pi_fraction()).str()},
                       {"den", denominator(p.point.pi_fraction()).str()},
                       {"cluster_id", p.cluster_id},
                       {"provenance", prov}});
    }
    json centers = json::array();
    for (const auto& c : set.cluster_centers)
        centers.push_back({{"num", numerator(c.pi_fraction()).str()}, {"den", denominator(c.pi_fraction()).str()}});
    return {{"m", set.m},
            {"s", set.s},
            {"symmetric", set.symmetric},
            {"points", pts},
            {"cluster_centers", centers},
            {"opposite_cluster", set.opposite_cluster}};
}

SeedSet seed_set_from_json(const nlohmann::json& j) {
    auto rational = [](const nlohmann::json& e) {
        return Rational(Integer(e.at("num").get<std::string>()), Integer(e.at("den").get<std::string>()));
    };
    SeedSet set;
    set.m = j.at("m").get<unsigned>();
    set.s = j.at("s").get<unsigned>();
    set.symmetric = j.value("symmetric", false);
    for (const auto& e : j.at("points")) {
        SeedPoint p;
        p.point = CirclePoint::from_pi_fraction(rational(e));
        p.cluster_id = e.at("cluster_id").get<int>();
        const auto& prov = e.at("provenance");
        if (prov.at("kind") == "grid") {
            p.provenance.origin = Provenance::Origin::Grid;
            p.provenance.grid_index = prov.at("j").get<unsigned>();
        } else {
            p.provenance.origin = Provenance::Origin::Subset;
            p.provenance.subset = prov.at("subset").get<Subset>();
            p.provenance.bit = prov.at("a").get<unsigned>();
        }
        p.provenance.member = prov.value("member", -1);
        set.points.push_back(p);
    }
    if (j.contains("cluster_centers"))
        for (const auto& c : j.at("cluster_centers")) set.cluster_centers.push_back(CirclePoint::from_pi_fraction(rational(c)));
    if (j.contains("opposite_cluster")) set.opposite_cluster = j.at("opposite_cluster").get<std::vector<int>>();
    return set;
}

}  // namespace cspoly
