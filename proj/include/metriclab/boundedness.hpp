#pragma once

// Total boundedness at scale eps: greedy farthest-point nets, maximal
// separated packings, and size profiles across scales.

#include <map>

#include "metric_space.hpp"

namespace metriclab {

struct NetCertificate {
    double eps = 0.0;
    PointSet centers;
    std::map<int, int> assignment;  // target point -> covering center, d <= eps
};

struct SeparationWitness {
    double eps = 0.0;
    PointSet indices;  // pairwise d > eps (strict)
};

// Farthest-point greedy net over the target. Seeds at the lowest target
// index; each round adds the target point with maximal distance to the chosen
// centers (ties to the lowest index) until everything is within eps. The
// centers are pairwise > eps apart, so the result is also a separation
// witness at eps. Points are assigned to their nearest center (ties to the
// lower center index).
inline NetCertificate greedy_eps_net(const FiniteMetricSpace& s, const PointSet& target_raw, double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    PointSet target = detail::normalized(s, target_raw);
    if (target.empty()) throw std::invalid_argument("target must be nonempty");

    NetCertificate net;
    net.eps = eps;
    std::vector<double> min_dist(target.size(), kInf);
    int pick = 0;  // position of the lowest index in the sorted target
    while (true) {
        int c = target[static_cast<std::size_t>(pick)];
        net.centers.push_back(c);
        double far = 0.0;
        int far_pos = -1;
        for (std::size_t t = 0; t < target.size(); ++t) {
            double v = std::min(min_dist[t], s.d(target[t], c));
            min_dist[t] = v;
            if (v > far) {
                far = v;
                far_pos = static_cast<int>(t);
            }
        }
        if (far <= eps) break;
        pick = far_pos;
    }
    std::sort(net.centers.begin(), net.centers.end());
    for (int t : target) {
        int best = -1;
        for (int c : net.centers)
            if (best < 0 || s.d(t, c) < s.d(t, best)) best = c;  // centers ascending: ties keep the lower
        net.assignment[t] = best;
    }
    return net;
}

// Maximal (not maximum) strictly eps-separated subset, grown greedily in
// index order. Every excluded target point is within eps of some included
// point, so the result is simultaneously an eps-net of the target.
inline SeparationWitness max_separated_subset(const FiniteMetricSpace& s, const PointSet& target_raw, double eps) {
    if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
    PointSet target = detail::normalized(s, target_raw);
    SeparationWitness w;
    w.eps = eps;
    for (int t : target) {
        bool far = true;
        for (int c : w.indices)
            if (s.d(t, c) <= eps) {
                far = false;
                break;
            }
        if (far) w.indices.push_back(t);
    }
    return w;
}

struct CoveringProfileEntry {
    std::size_t net_size = 0;
    std::size_t packing_size = 0;
};

inline std::map<double, CoveringProfileEntry> covering_profile(const FiniteMetricSpace& s, const PointSet& target,
                                                               const std::vector<double>& eps_list) {
    std::map<double, CoveringProfileEntry> out;
    for (double e : eps_list) {
        if (e <= 0) throw std::invalid_argument("eps must be positive");
        out[e] = {greedy_eps_net(s, target, e).centers.size(), max_separated_subset(s, target, e).indices.size()};
    }
    return out;
}

}  // namespace metriclab
