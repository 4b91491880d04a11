#pragma once

// Finite metric spaces: validated distance matrices plus the point-set,
// distance, diameter, isolation and ball primitives everything else builds on.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace metriclab {

// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<int>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct MetricViolation {
    enum class Kind { asymmetry, negative, nonzero_self, triangle };
    Kind kind;
    std::array<int, 3> witness{-1, -1, -1};  // triangle stores (i, j, k) of d(i,k) > d(i,j)+d(j,k)
    int witness_count = 0;
    double magnitude = 0.0;
};

inline const char* to_string(MetricViolation::Kind k) {
    switch (k) {
        case MetricViolation::Kind::asymmetry: return "asymmetry";
        case MetricViolation::Kind::negative: return "negative";
        case MetricViolation::Kind::nonzero_self: return "nonzero-self";
        case MetricViolation::Kind::triangle: return "triangle";
    }
    return "?";
}

class MetricError : public std::runtime_error {
  public:
    MetricError(std::string msg, std::vector<MetricViolation> v)
        : std::runtime_error(std::move(msg)), violations(std::move(v)) {}
    std::vector<MetricViolation> violations;
};

class FiniteMetricSpace {
  public:
    FiniteMetricSpace() = default;
    FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> flat, double axiom_tol)
        : labels_(std::move(labels)), dist_(std::move(flat)), tol_(axiom_tol) {
        n_ = static_cast<int>(labels_.size());
    }

    int n() const { return n_; }
    double axiom_tol() const { return tol_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

    double d(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
    const double* row(int i) const { return dist_.data() + static_cast<std::size_t>(i) * n_; }
    const std::vector<double>& flat() const { return dist_; }

    double max_entry() const {
        double m = 0.0;
        for (double v : dist_) m = std::max(m, v);
        return m;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<double> dist_;  // row-major n×n
    double tol_ = 0.0;
    int n_ = 0;
};

// Default tolerance absorbing float rounding in generated matrices.
inline double default_axiom_tol(double max_entry) { return 1e-9 * max_entry; }

namespace detail {

inline void check_index(const FiniteMetricSpace& s, int i) {
    if (i < 0 || i >= s.n()) throw std::invalid_argument("point index out of range: " + std::to_string(i));
}

// Returns a sorted duplicate-free copy, bounds-checked against the space.
inline PointSet normalized(const FiniteMetricSpace& s, PointSet a) {
    for (int i : a) check_index(s, i);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

inline PointSet all_points(const FiniteMetricSpace& s) {
    PointSet a(static_cast<std::size_t>(s.n()));
    for (int i = 0; i < s.n(); ++i) a[static_cast<std::size_t>(i)] = i;
    return a;
}

// Validates axioms over a full pair scan and a triple scan that is exhaustive
// for n <= 64 and deterministically sampled above (matrices that large come
// from generators whose metrics hold by construction).
inline std::vector<MetricViolation> scan_axioms(const std::vector<double>& m, int n, double tol) {
    std::vector<MetricViolation> out;
    auto at = [&](int i, int j) { return m[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        if (std::abs(at(i, i)) > tol)
            out.push_back({MetricViolation::Kind::nonzero_self, {i, -1, -1}, 1, std::abs(at(i, i))});
        for (int j = 0; j < n; ++j) {
            if (at(i, j) < -tol && i <= j)
                out.push_back({MetricViolation::Kind::negative, {i, j, -1}, 2, -at(i, j)});
            if (i < j && std::abs(at(i, j) - at(j, i)) > tol)
                out.push_back({MetricViolation::Kind::asymmetry, {i, j, -1}, 2, std::abs(at(i, j) - at(j, i))});
        }
    }
    auto triangle = [&](int i, int j, int k) {
        double excess = at(i, k) - at(i, j) - at(j, k);
        if (excess > tol)
            out.push_back({MetricViolation::Kind::triangle, {i, j, k}, 3, excess});
    };
    if (n <= 64) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (i != j && j != k && i != k) triangle(i, j, k);
    } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed-seed LCG keeps the sample deterministic
        auto next = [&](int bound) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
        };
        for (int t = 0; t < 200000; ++t) {
            int i = next(n), j = next(n), k = next(n);
            if (i != j && j != k && i != k) triangle(i, j, k);
        }
    }
    return out;
}

}  // namespace detail

inline FiniteMetricSpace build_space_from_matrix(std::vector<std::string> labels,
                                                 const std::vector<std::vector<double>>& matrix,
                                                 double axiom_tol) {
    const int n = static_cast<int>(labels.size());
    if (n < 1) throw std::invalid_argument("space needs at least one point");
    if (axiom_tol < 0) throw std::invalid_argument("axiom_tol must be nonnegative");
    if (static_cast<int>(matrix.size()) != n) throw std::invalid_argument("matrix row count != label count");
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate point labels");
    }
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& r : matrix) {
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("matrix is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    auto violations = detail::scan_axioms(flat, n, axiom_tol);
    if (!violations.empty())
        throw MetricError("metric axioms violated (" + std::to_string(violations.size()) + " findings)",
                          std::move(violations));
    return FiniteMetricSpace(std::move(labels), std::move(flat), axiom_tol);
}

enum class MetricName { euclidean, l1, chebyshev };

inline MetricName metric_name_from(const std::string& s) {
    if (s == "euclidean") return MetricName::euclidean;
    if (s == "l1") return MetricName::l1;
    if (s == "chebyshev") return MetricName::chebyshev;
    throw std::invalid_argument("unknown metric name: " + s);
}

inline const char* to_string(MetricName m) {
    switch (m) {
        case MetricName::euclidean: return "euclidean";
        case MetricName::l1: return "l1";
        case MetricName::chebyshev: return "chebyshev";
    }
    return "?";
}

inline double point_distance(const std::vector<double>& a, const std::vector<double>& b, MetricName m) {
    double acc = 0.0;
    switch (m) {
        case MetricName::euclidean:
            for (std::size_t k = 0; k < a.size(); ++k) {
                double dd = a[k] - b[k];
                acc += dd * dd;
            }
            return std::sqrt(acc);
        case MetricName::l1:
            for (std::size_t k = 0; k < a.size(); ++k) acc += std::abs(a[k] - b[k]);
            return acc;
        case MetricName::chebyshev:
            for (std::size_t k = 0; k < a.size(); ++k) acc = std::max(acc, std::abs(a[k] - b[k]));
            return acc;
    }
    return acc;
}

namespace detail {

// Shortest decimal that round-trips the double exactly.
inline std::string shortest_decimal(double v) {
    if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

inline FiniteMetricSpace build_space_from_points(const std::vector<std::vector<double>>& coords,
                                                 MetricName metric, double axiom_tol) {
    const int n = static_cast<int>(coords.size());
    if (n < 1) throw std::invalid_argument("space needs at least one point");
    if (axiom_tol < 0) throw std::invalid_argument("axiom_tol must be nonnegative");
    const std::size_t dim = coords.front().size();
    if (dim < 1) throw std::invalid_argument("coordinates need dimension >= 1");
    for (const auto& c : coords)
        if (c.size() != dim) throw std::invalid_argument("ragged coordinate list");

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string l = "p" + std::to_string(i) + ":(";
        for (std::size_t k = 0; k < dim; ++k) {
            if (k) l += ",";
            l += detail::shortest_decimal(coords[static_cast<std::size_t>(i)][k]);
        }
        l += ")";
        labels.push_back(std::move(l));
    }
    std::vector<double> flat(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = point_distance(coords[static_cast<std::size_t>(i)], coords[static_cast<std::size_t>(j)], metric);
            flat[static_cast<std::size_t>(i) * n + j] = v;
            flat[static_cast<std::size_t>(j) * n + i] = v;
        }
    auto violations = detail::scan_axioms(flat, n, axiom_tol);
    if (!violations.empty())
        throw MetricError("metric axioms violated beyond tolerance", std::move(violations));
    return FiniteMetricSpace(std::move(labels), std::move(flat), axiom_tol);
}

inline double diameter(const FiniteMetricSpace& s, const PointSet& a_raw) {
    PointSet a = detail::normalized(s, a_raw);
    if (a.empty()) throw std::invalid_argument("diameter of empty set");
    double m = 0.0;
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = 0; q < a.size(); ++q)
            m = std::max(m, s.d(a[p], a[q]));
    return m;
}

inline double isolation(const FiniteMetricSpace& s, int i) {
    detail::check_index(s, i);
    if (s.n() < 2) throw std::invalid_argument("isolation needs at least two points");
    double m = kInf;
    for (int j = 0; j < s.n(); ++j)
        if (j != i) m = std::min(m, s.d(i, j));
    return m;
}

inline PointSet ball(const FiniteMetricSpace& s, int center, double radius, bool closed) {
    detail::check_index(s, center);
    if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
    PointSet out;
    for (int j = 0; j < s.n(); ++j) {
        double v = s.d(center, j);
        if (closed ? (v <= radius) : (v < radius)) out.push_back(j);
    }
    return out;
}

// d(x, A) with the convention d(x, empty) = +infinity.
inline double set_distance(const FiniteMetricSpace& s, int x, const PointSet& a) {
    detail::check_index(s, x);
    double m = kInf;
    for (int j : a) m = std::min(m, s.d(x, j));
    return m;
}

}  // namespace metriclab
