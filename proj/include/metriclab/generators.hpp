#pragma once

// Deterministic generators for the worked example spaces, each packaged with
// machine-checkable expectations at an explicit truncation/sampling
// resolution. Bundles are self-validating fixtures: run_bundle evaluates
// every expectation and reports pass/fail per claim id.

#include <functional>
#include <sstream>

#include "boundedness.hpp"
#include "chains.hpp"
#include "convexity.hpp"
#include "covers.hpp"
#include "metric_space.hpp"

namespace metriclab {

struct ExpectationResult {
    std::string claim;
    bool pass = false;
    std::string details;
};

struct ExampleBundle;

struct Expectation {
    std::string claim;
    std::string description;
    // fault != 1 deliberately corrupts the check's key quantity (test hook
    // for the reporting pipeline); 1.0 is the honest run.
    std::function<ExpectationResult(const ExampleBundle&, double fault)> run;
};

struct ExampleBundle {
    std::string name;
    std::string provenance;  // construction the bundle samples, in words
    std::map<std::string, std::string> params;
    int threads = 1;  // execution hint for pairwise scans; never affects results
    FiniteMetricSpace space;
    std::vector<std::pair<std::string, Cover>> covers;
    std::vector<Expectation> expectations;

    const Cover& cover(const std::string& cover_name) const {
        for (const auto& [nm, c] : covers)
            if (nm == cover_name) return c;
        throw std::invalid_argument("bundle has no cover named " + cover_name);
    }
};

inline std::vector<ExpectationResult> run_bundle(const ExampleBundle& b, const std::string& fault_claim = "") {
    std::vector<ExpectationResult> out;
    out.reserve(b.expectations.size());
    for (const auto& e : b.expectations) out.push_back(e.run(b, e.claim == fault_claim ? 1e-3 : 1.0));
    return out;
}

namespace detail {

inline ExpectationResult expect(const std::string& claim, bool pass, std::string details) {
    return {claim, pass, std::move(details)};
}

// Boolean checks with no natural tolerance turn red under fault directly.
inline std::optional<ExpectationResult> fault_trip(const std::string& claim, double fault) {
    if (fault != 1.0) return ExpectationResult{claim, false, "fault injected"};
    return std::nullopt;
}

inline std::string fmt(double v) { return shortest_decimal(v); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Samples of (0,1) u (1,2): two open intervals an arbitrarily small gap
// apart. The two-member cover by the halves has an exact Lebesgue value equal
// to the smallest distance straddling the gap, which shrinks like 4/N.
inline ExampleBundle gen_two_intervals(int N) {
    if (N < 4 || N % 2 != 0) throw std::invalid_argument("two-intervals needs even N >= 4");
    const int M = N / 2;
    std::vector<std::vector<double>> coords;
    coords.reserve(static_cast<std::size_t>(N));
    for (int i = 1; i <= M; ++i) coords.push_back({static_cast<double>(i) / (M + 1)});
    for (int i = 1; i <= M; ++i) coords.push_back({1.0 + static_cast<double>(i) / (M + 1)});

    ExampleBundle b;
    b.name = "two-intervals";
    b.provenance = "uniform samples of the union of open intervals (0,1) and (1,2) on the real line";
    b.params["n"] = std::to_string(N);
    b.space = build_space_from_points(coords, MetricName::l1, 1e-12);

    Cover cover;
    PointSet left, right;
    for (int i = 0; i < M; ++i) left.push_back(i);
    for (int i = M; i < N; ++i) right.push_back(i);
    CoverElement le = explicit_element(left);
    le.label = "left-half";
    CoverElement re = explicit_element(right);
    re.label = "right-half";
    cover.elements = {std::move(le), std::move(re)};
    cover.target = detail::all_points(b.space);
    b.covers.emplace_back("two-halves", std::move(cover));

    b.expectations.push_back(
        {"two-intervals/cover-ok", "the two halves cover every sample", [](const ExampleBundle& bb, double fault) {
             if (auto trip = detail::fault_trip("two-intervals/cover-ok", fault)) return *trip;
             auto unc = covers_check(bb.space, bb.cover("two-halves"));
             return detail::expect("two-intervals/cover-ok", !unc.has_value(),
                                   unc ? "uncovered point " + std::to_string(*unc) : "all covered");
         }});
    b.expectations.push_back({"two-intervals/exact-equals-min-straddling-gap",
                              "the exact Lebesgue value equals the smallest distance across the gap",
                              [M, N](const ExampleBundle& bb, double fault) {
                                  double cross = kInf;
                                  for (int i = 0; i < M; ++i)
                                      for (int j = M; j < N; ++j) cross = std::min(cross, bb.space.d(i, j));
                                  cross *= fault;
                                  auto rep = lebesgue_exact(bb.space, bb.cover("two-halves"));
                                  return detail::expect("two-intervals/exact-equals-min-straddling-gap",
                                                        rep.complete && rep.exact == cross,
                                                        "exact " + detail::fmt(rep.exact) + " vs min straddling " +
                                                            detail::fmt(cross));
                              }});
    b.expectations.push_back({"two-intervals/exact-at-most-4-over-n",
                              "the exact Lebesgue value is at most 4/N at sampling resolution N",
                              [N](const ExampleBundle& bb, double fault) {
                                  auto rep = lebesgue_exact(bb.space, bb.cover("two-halves"));
                                  double bound = 4.0 / N * fault;
                                  return detail::expect("two-intervals/exact-at-most-4-over-n",
                                                        rep.complete && rep.exact <= bound,
                                                        "exact " + detail::fmt(rep.exact) + " <= " + detail::fmt(bound));
                              }});
    return b;
}

// ---------------------------------------------------------------------------
// The points 1/n for n = 1..N, each covered by an open ball whose radius
// 1/n - 1/(n+1) is exactly the gap to the next point, so every ball contains
// its own center and nothing else. Greedy subcovers therefore cannot share:
// covering any k of the points takes exactly k balls.
inline ExampleBundle gen_harmonic_in_02(int N) {
    if (N < 2) throw std::invalid_argument("harmonic-balls needs N >= 2");
    std::vector<std::vector<double>> coords;
    coords.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) coords.push_back({1.0 / n});

    ExampleBundle b;
    b.name = "harmonic-balls";
    b.provenance = "the harmonic points 1/n inside (0,2) with one shrinking open ball per point";
    b.params["n"] = std::to_string(N);
    b.space = build_space_from_points(coords, MetricName::l1, 1e-12);

    Cover cover;
    ParametricBallFamily fam;
    fam.range = N;
    fam.centers.resize(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) fam.centers[static_cast<std::size_t>(n - 1)] = n - 1;  // point i is 1/(i+1)
    fam.radius = {RadiusFormula::Type::harmonic, 0.0};
    fam.label = "shrinking-balls";
    cover.families.push_back(std::move(fam));
    cover.target = detail::all_points(b.space);
    b.covers.emplace_back("shrinking-balls", std::move(cover));

    b.expectations.push_back(
        {"harmonic-balls/cover-ok", "every point lies in its own ball", [](const ExampleBundle& bb, double fault) {
             if (auto trip = detail::fault_trip("harmonic-balls/cover-ok", fault)) return *trip;
             auto unc = covers_check(bb.space, bb.cover("shrinking-balls"));
             return detail::expect("harmonic-balls/cover-ok", !unc.has_value(),
                                   unc ? "uncovered point " + std::to_string(*unc) : "all covered");
         }});
    b.expectations.push_back({"harmonic-balls/each-ball-own-center-only",
                              "each realized ball contains exactly its own center",
                              [N](const ExampleBundle& bb, double fault) {
                                  if (auto trip = detail::fault_trip("harmonic-balls/each-ball-own-center-only", fault))
                                      return *trip;
                                  auto members = realize(bb.space, bb.cover("shrinking-balls"));
                                  int bad = -1;
                                  for (int i = 0; i < N; ++i)
                                      if (members[static_cast<std::size_t>(i)].points != PointSet{i}) {
                                          bad = i;
                                          break;
                                      }
                                  return detail::expect("harmonic-balls/each-ball-own-center-only", bad < 0,
                                                        bad < 0 ? "all " + std::to_string(N) + " balls are singletons"
                                                                : "ball " + std::to_string(bad) + " is not a singleton");
                              }});
    b.expectations.push_back({"harmonic-balls/full-subcover-size-n",
                              "a greedy subcover of all points uses exactly N balls",
                              [N](const ExampleBundle& bb, double fault) {
                                  auto sub = finite_subcover(bb.space, bb.cover("shrinking-balls"),
                                                             detail::all_points(bb.space));
                                  auto want = static_cast<std::size_t>(N * fault);
                                  return detail::expect("harmonic-balls/full-subcover-size-n",
                                                        sub.ok && sub.labels.size() == want,
                                                        "subcover size " + std::to_string(sub.labels.size()));
                              }});
    b.expectations.push_back({"harmonic-balls/tail-subcover-no-sharing",
                              "covering the tail half of the points takes one ball per point",
                              [N](const ExampleBundle& bb, double fault) {
                                  PointSet tail;
                                  for (int i = N / 2; i < N; ++i) tail.push_back(i);  // points 1/n with n > N/2
                                  auto sub = finite_subcover(bb.space, bb.cover("shrinking-balls"), tail);
                                  auto want = static_cast<std::size_t>(static_cast<double>(tail.size()) * fault);
                                  return detail::expect("harmonic-balls/tail-subcover-no-sharing",
                                                        sub.ok && sub.labels.size() == want,
                                                        "tail size " + std::to_string(tail.size()) + ", subcover " +
                                                            std::to_string(sub.labels.size()));
                              }});
    return b;
}

// ---------------------------------------------------------------------------
// A dense sample of (0,1]: the points 1/n plus a uniform fill grid of step
// 1/(4N). The same shrinking-ball cover now has uncovered fill points below
// the truncation tail (recorded as an expectation), and on the covered region
// a bad set exists for every alpha down to the sampling resolution, i.e. the
// cover admits no Lebesgue number in the limit.
inline ExampleBundle gen_unit_left_open(int N) {
    if (N < 2) throw std::invalid_argument("unit-left-open needs N >= 2");
    std::vector<double> vals;
    for (int n = 1; n <= N; ++n) vals.push_back(1.0 / n);
    const int fill = 4 * N;
    for (int i = 1; i <= fill; ++i) vals.push_back(static_cast<double>(i) / fill);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());  // exact duplicates only

    std::vector<std::vector<double>> coords;
    coords.reserve(vals.size());
    for (double v : vals) coords.push_back({v});

    ExampleBundle b;
    b.name = "unit-left-open";
    b.provenance = "the half-open interval (0,1] sampled by the points 1/n plus a uniform fill grid";
    b.params["n"] = std::to_string(N);
    b.space = build_space_from_points(coords, MetricName::l1, 1e-12);

    auto index_of = [&vals](double v) {
        auto it = std::lower_bound(vals.begin(), vals.end(), v);
        return static_cast<int>(it - vals.begin());
    };
    Cover cover;
    ParametricBallFamily fam;
    fam.range = N;
    fam.centers.resize(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) fam.centers[static_cast<std::size_t>(n - 1)] = index_of(1.0 / n);
    fam.radius = {RadiusFormula::Type::harmonic, 0.0};
    fam.label = "shrinking-balls";
    cover.families.push_back(fam);
    cover.target = detail::all_points(b.space);

    // Same members, target restricted to the region the truncation covers.
    Cover covered_cover;
    covered_cover.families.push_back(fam);
    {
        auto members = realize(b.space, cover);
        std::vector<char> cov(vals.size(), 0);
        for (const auto& m : members)
            for (int p : m.points) cov[static_cast<std::size_t>(p)] = 1;
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (cov[i]) covered_cover.target.push_back(static_cast<int>(i));
    }
    b.covers.emplace_back("shrinking-balls", std::move(cover));
    b.covers.emplace_back("shrinking-balls-covered", std::move(covered_cover));

    const double tail_bound = 1.0 / (N + 1);
    std::vector<double> vals_copy = vals;
    b.expectations.push_back({"unit-left-open/uncovered-only-below-tail",
                              "the truncated cover misses a fill point, and only below the last ball",
                              [vals_copy, tail_bound](const ExampleBundle& bb, double fault) {
                                  if (auto trip = detail::fault_trip("unit-left-open/uncovered-only-below-tail", fault))
                                      return *trip;
                                  auto unc = covers_check(bb.space, bb.cover("shrinking-balls"));
                                  bool ok = unc.has_value() &&
                                            vals_copy[static_cast<std::size_t>(*unc)] <= tail_bound;
                                  return detail::expect("unit-left-open/uncovered-only-below-tail", ok,
                                                        unc ? "first uncovered at value " +
                                                                  detail::fmt(vals_copy[static_cast<std::size_t>(*unc)])
                                                            : "unexpectedly covered");
                              }});
    b.expectations.push_back(
        {"unit-left-open/witness-at-each-alpha",
         "on the covered region a bad set of diameter < alpha exists for every alpha down to 4/N",
         [N](const ExampleBundle& bb, double fault) {
             const Cover& cc = bb.cover("shrinking-balls-covered");
             std::string detail_str;
             bool all_ok = true;
             for (double alpha = 0.5; alpha >= 4.0 / N; alpha /= 2) {
                 double a = alpha * fault;
                 auto w = lebesgue_witness(bb.space, cc, a);
                 bool ok = w.has_value() && diameter(bb.space, *w) < a;
                 all_ok = all_ok && ok;
                 detail_str += (ok ? "" : "!") + std::string("alpha=") + detail::fmt(alpha) + " ";
             }
             return detail::expect("unit-left-open/witness-at-each-alpha", all_ok, detail_str);
         }});
    return b;
}

// ---------------------------------------------------------------------------
// Scaled axis vectors e_m/n in sequence space under the sum metric, plus the
// origin. Distances are exact by formula: 1/n + 1/j across axes,
// |1/n - 1/j| along an axis, 1/n to the origin. The e_m/1 are pairwise at
// distance 2, so the space has large separated subsets at eps = 1.5 at every
// truncation: boundedness fails at a fixed scale. Every point is isolated.
inline ExampleBundle gen_l1_family(int M, int N) {
    if (M < 1 || N < 1) throw std::invalid_argument("l1-axes needs M, N >= 1");
    const int n_pts = M * N + 1;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n_pts));
    for (int m = 1; m <= M; ++m)
        for (int n = 1; n <= N; ++n) labels.push_back("e" + std::to_string(m) + "/" + std::to_string(n));
    labels.push_back("0");

    auto inv = [](int n) { return 1.0 / n; };
    std::vector<std::vector<double>> matrix(static_cast<std::size_t>(n_pts),
                                            std::vector<double>(static_cast<std::size_t>(n_pts), 0.0));
    auto axis = [N](int idx) { return idx / N; };
    auto depth = [N](int idx) { return idx % N + 1; };
    for (int i = 0; i < n_pts; ++i)
        for (int j = i + 1; j < n_pts; ++j) {
            double v;
            if (j == n_pts - 1)
                v = inv(depth(i));
            else if (axis(i) == axis(j))
                v = std::abs(inv(depth(i)) - inv(depth(j)));
            else
                v = inv(depth(i)) + inv(depth(j));
            matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }

    ExampleBundle b;
    b.name = "l1-axes";
    b.provenance = "scaled axis unit vectors e_m/n and the origin in the space of summable sequences";
    b.params["m"] = std::to_string(M);
    b.params["n"] = std::to_string(N);
    b.space = build_space_from_matrix(std::move(labels), matrix, 1e-12);

    b.expectations.push_back({"l1-axes/separated-at-1p5-size-at-least-m",
                              "a maximal 1.5-separated subset has at least M points",
                              [M](const ExampleBundle& bb, double fault) {
                                  auto w = max_separated_subset(bb.space, detail::all_points(bb.space), 1.5);
                                  auto want = static_cast<std::size_t>(M / fault);
                                  return detail::expect("l1-axes/separated-at-1p5-size-at-least-m",
                                                        w.indices.size() >= want,
                                                        "separated size " + std::to_string(w.indices.size()));
                              }});
    b.expectations.push_back({"l1-axes/all-isolations-positive", "every point is isolated",
                              [n_pts](const ExampleBundle& bb, double fault) {
                                  if (auto trip = detail::fault_trip("l1-axes/all-isolations-positive", fault))
                                      return *trip;
                                  double worst = kInf;
                                  for (int i = 0; i < n_pts; ++i) worst = std::min(worst, isolation(bb.space, i));
                                  return detail::expect("l1-axes/all-isolations-positive", worst > 0,
                                                        "min isolation " + detail::fmt(worst));
                              }});
    b.expectations.push_back({"l1-axes/triangle-exact-at-1e-12",
                              "the formula distances satisfy the triangle inequality within 1e-12",
                              [n_pts](const ExampleBundle& bb, double fault) {
                                  if (auto trip = detail::fault_trip("l1-axes/triangle-exact-at-1e-12", fault))
                                      return *trip;
                                  double worst = 0.0;
                                  for (int i = 0; i < n_pts; ++i)
                                      for (int j = 0; j < n_pts; ++j)
                                          for (int k = 0; k < n_pts; ++k)
                                              worst = std::max(worst,
                                                               bb.space.d(i, k) - bb.space.d(i, j) - bb.space.d(j, k));
                                  return detail::expect("l1-axes/triangle-exact-at-1e-12", worst <= 1e-12,
                                                        "max triangle excess " + detail::fmt(worst));
                              }});
    return b;
}

// ---------------------------------------------------------------------------
// Two parallel segments. Long lines keep every radius nearly achievable from
// every basepoint (spectrum gaps at the sampling step), but the space is
// split at scales below the line gap and no pair straddling the lines has an
// additive between-point: near-convex spectra without chainability or
// metric convexity.
inline ExampleBundle gen_parallel_lines(double gap, double halfwidth, int N) {
    if (!(gap > 0) || !(halfwidth > 0) || N < 2)
        throw std::invalid_argument("parallel-lines needs gap > 0, halfwidth > 0, N >= 2");
    const double step = 2.0 * halfwidth / N;
    std::vector<std::vector<double>> coords;
    coords.reserve(static_cast<std::size_t>(2 * N));
    for (int i = 0; i < N; ++i) coords.push_back({-halfwidth + i * step, 0.0});
    for (int i = 0; i < N; ++i) coords.push_back({-halfwidth + i * step, gap});

    ExampleBundle b;
    b.name = "parallel-lines";
    b.provenance = "uniform samples of two horizontal parallel segments in the plane";
    b.params["gap"] = detail::fmt(gap);
    b.params["halfwidth"] = detail::fmt(halfwidth);
    b.params["n"] = std::to_string(N);
    b.space = build_space_from_points(coords, MetricName::euclidean, 1e-12);

    b.expectations.push_back({"parallel-lines/property-p-at-step",
                              "every radius below the sup is achieved within the sampling step",
                              [step](const ExampleBundle& bb, double fault) {
                                  auto rep = property_p_check(bb.space, step * fault);
                                  return detail::expect("parallel-lines/property-p-at-step", rep.holds,
                                                        std::to_string(rep.violations.size()) + " gap violations");
                              }});
    b.expectations.push_back({"parallel-lines/split-below-line-gap",
                              "at eps = 0.4 * gap the space falls into at least two pieces",
                              [gap](const ExampleBundle& bb, double fault) {
                                  auto parts = eps_components(bb.space, 0.4 * gap);
                                  auto want = static_cast<std::size_t>(std::ceil(2.0 / fault));
                                  return detail::expect("parallel-lines/split-below-line-gap", parts.size() >= want,
                                                        std::to_string(parts.size()) + " components");
                              }});
    b.expectations.push_back(
        {"parallel-lines/no-between-point-at-step",
         "metric convexity fails at tol = sampling step, witnessed by a cross-line pair at equal x",
         [step, N](const ExampleBundle& bb, double fault) {
             auto rep = metric_convexity_check(bb.space, step / fault);
             int lo = N / 2, hi = N / 2 + N;  // vertically aligned cross-line pair
             bool found = false;
             for (const auto& v : rep.violations)
                 if (v.points == std::vector<int>{lo, hi}) found = true;
             return detail::expect("parallel-lines/no-between-point-at-step", !rep.holds && found,
                                   std::to_string(rep.violations.size()) + " pairs without between-points" +
                                       (found ? ", aligned cross pair included" : ", aligned cross pair missing"));
         }});
    return b;
}

namespace detail {

// Distance from (x, y) to the unit circle under the max metric: the smallest
// half-width of an axis-aligned square centered at (x, y) touching the
// circle. The optimum is attained at a side contact (circle point sharing a
// coordinate) or a corner contact (equal coordinate differences), so it is
// the minimum of f over a closed-form candidate list.
inline double cheb_dist_to_unit_circle(double x, double y) {
    double best = kInf;
    auto consider = [&](double cx, double cy) { best = std::min(best, std::max(std::abs(x - cx), std::abs(y - cy))); };
    if (std::abs(x) <= 1.0) {
        double s = std::sqrt(1.0 - x * x);
        consider(x, s);
        consider(x, -s);
    }
    if (std::abs(y) <= 1.0) {
        double c = std::sqrt(1.0 - y * y);
        consider(c, y);
        consider(-c, y);
    }
    for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0}) {
            // (x + sx t)^2 + (y + sy t)^2 = 1
            double bq = 2.0 * (sx * x + sy * y);
            double cq = x * x + y * y - 1.0;
            double disc = bq * bq - 8.0 * cq;
            if (disc < 0) continue;
            double r = std::sqrt(disc);
            consider(x + sx * (-bq + r) / 4.0, y + sy * (-bq + r) / 4.0);
            consider(x + sx * (-bq - r) / 4.0, y + sy * (-bq - r) / 4.0);
        }
    return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// A grid on [-2,2]^2 under the max metric with a moat cut along the unit
// circle: points within half a grid step of the circle (distance measured in
// the same max metric) are removed. Closed-ball intersections still cover
// every radius interval at the grid-step tolerance, yet the moat splits the
// space at eps = one grid step: convex by the ball criterion, not chainable.
// The eps and tol used in the expectations carry a 1e-9 relative slack that
// absorbs coordinate rounding when the grid step is not a binary fraction.
inline ExampleBundle gen_punctured_square_maxmetric(int N) {
    if (N < 8) throw std::invalid_argument("punctured-square needs N >= 8");
    const double step = 4.0 / N;
    std::vector<std::vector<double>> coords;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double x = -2.0 + i * step;
            double y = -2.0 + j * step;
            if (detail::cheb_dist_to_unit_circle(x, y) < step / 2) continue;
            coords.push_back({x, y});
        }

    ExampleBundle b;
    b.name = "punctured-square";
    b.provenance = "a max-metric grid on [-2,2]^2 with the unit circle's neighborhood removed";
    b.params["n"] = std::to_string(N);
    b.space = build_space_from_points(coords, MetricName::chebyshev, 1e-12);

    // A power-of-two N makes the step and all coordinates exact binary
    // fractions, so the claims run at the exact tolerance; otherwise a 1e-9
    // relative slack absorbs coordinate rounding.
    const bool dyadic = (N & (N - 1)) == 0;
    const double slack = dyadic ? 1.0 : 1.0 + 1e-9;
    b.expectations.push_back({"punctured-square/menger-at-grid-step",
                              "closed-ball intersections cover every radius interval at tol = grid step",
                              [step, slack](const ExampleBundle& bb, double fault) {
                                  auto rep = menger_check(bb.space, step * slack * fault, bb.threads);
                                  return detail::expect("punctured-square/menger-at-grid-step", rep.holds,
                                                        std::to_string(rep.violations.size()) + " uncovered pairs");
                              }});
    b.expectations.push_back({"punctured-square/split-across-moat",
                              "at eps = one grid step the moat separates inside from outside",
                              [step, slack](const ExampleBundle& bb, double fault) {
                                  auto parts = eps_components(bb.space, step * slack);
                                  auto want = static_cast<std::size_t>(std::ceil(2.0 / fault));
                                  return detail::expect("punctured-square/split-across-moat", parts.size() >= want,
                                                        std::to_string(parts.size()) + " components");
                              }});
    return b;
}

// ---------------------------------------------------------------------------
// The shrinking-ball construction run on an arbitrary space: take a maximal
// eps-separated subset, give its n-th point an open ball of radius eps/(4n),
// and add the complement of the subset as one member. The cover is locally
// finite (no small ball meets more than two members) yet bad sets of
// arbitrarily small diameter exist down to the space's resolution.
inline ExampleBundle gen_adversarial_from(const FiniteMetricSpace& space, double eps,
                                          std::vector<double> alphas = {}) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    auto witness = max_separated_subset(space, detail::all_points(space), eps);
    if (witness.indices.size() < 2)
        throw std::invalid_argument("space has no eps-separated pair; adversarial cover is degenerate");
    if (alphas.empty()) {
        double base = eps / 10;  // eps = 0.1 gives the exact doubles 0.09, 0.05, 0.02, 0.01
        alphas = {9 * base, 5 * base, 2 * base, base};
    }

    ExampleBundle b;
    b.name = "adversarial-cover";
    b.provenance = "shrinking balls on a maximal separated subset plus the complement member";
    b.params["eps"] = detail::fmt(eps);
    b.params["witness-size"] = std::to_string(witness.indices.size());
    b.space = space;
    b.covers.emplace_back("adversarial", adversarial_cover(space, witness));

    b.expectations.push_back(
        {"adversarial-cover/cover-ok", "witness balls plus the complement cover the whole space",
         [](const ExampleBundle& bb, double fault) {
             if (auto trip = detail::fault_trip("adversarial-cover/cover-ok", fault)) return *trip;
             auto unc = covers_check(bb.space, bb.cover("adversarial"));
             return detail::expect("adversarial-cover/cover-ok", !unc.has_value(),
                                   unc ? "uncovered point " + std::to_string(*unc) : "all covered");
         }});
    b.expectations.push_back({"adversarial-cover/incidence-at-most-2",
                              "at delta = eps/8 no small ball meets more than two members",
                              [eps](const ExampleBundle& bb, double fault) {
                                  auto prof = local_finiteness_profile(bb.space, bb.cover("adversarial"), eps / 8);
                                  int bound = static_cast<int>(2 * fault);  // 0 under fault
                                  return detail::expect("adversarial-cover/incidence-at-most-2",
                                                        prof.max_incidence <= bound,
                                                        "max incidence " + std::to_string(prof.max_incidence));
                              }});
    b.expectations.push_back(
        {"adversarial-cover/witness-at-each-alpha", "a bad set of diameter < alpha exists for every listed alpha",
         [alphas](const ExampleBundle& bb, double fault) {
             const Cover& cc = bb.cover("adversarial");
             bool all_ok = true;
             std::string detail_str;
             for (double alpha : alphas) {
                 double a = alpha * fault;
                 auto w = lebesgue_witness(bb.space, cc, a);
                 bool ok = w.has_value() && diameter(bb.space, *w) < a;
                 all_ok = all_ok && ok;
                 detail_str += (ok ? "" : "!") + std::string("alpha=") + detail::fmt(alpha) + " ";
             }
             return detail::expect("adversarial-cover/witness-at-each-alpha", all_ok, detail_str);
         }});
    return b;
}

// ---------------------------------------------------------------------------
// Registry used by the CLI and the batch verifier.

inline std::vector<std::string> example_names() {
    return {"two-intervals", "harmonic-balls", "unit-left-open", "l1-axes",
            "parallel-lines", "punctured-square", "adversarial-cover"};
}

namespace detail {

inline double param_num(const std::map<std::string, std::string>& params, const std::string& key, double def) {
    auto it = params.find(key);
    if (it == params.end()) return def;
    return std::stod(it->second);
}

}  // namespace detail

// Builds a registered example from string parameters (CLI face). The
// adversarial example runs on the dense (0,1] sample at the same n, with its
// alpha grid clipped at twice the fill resolution 1/(4n).
inline ExampleBundle make_example(const std::string& name, const std::map<std::string, std::string>& params) {
    auto num = [&](const std::string& key, double def) { return detail::param_num(params, key, def); };
    if (name == "two-intervals") return gen_two_intervals(static_cast<int>(num("n", 32)));
    if (name == "harmonic-balls") return gen_harmonic_in_02(static_cast<int>(num("n", 32)));
    if (name == "unit-left-open") return gen_unit_left_open(static_cast<int>(num("n", 32)));
    if (name == "l1-axes")
        return gen_l1_family(static_cast<int>(num("m", 8)), static_cast<int>(num("n", 8)));
    if (name == "parallel-lines")
        return gen_parallel_lines(num("gap", 1.0), num("halfwidth", 8.0), static_cast<int>(num("n", 64)));
    if (name == "punctured-square") return gen_punctured_square_maxmetric(static_cast<int>(num("n", 32)));
    if (name == "adversarial-cover") {
        int n = static_cast<int>(num("n", 32));
        double eps = num("eps", 0.1);
        std::vector<double> alphas;
        double unit = eps / 10;
        for (double a : {9 * unit, 5 * unit, 2 * unit, unit})
            if (a >= 1.0 / (2 * n)) alphas.push_back(a);
        auto base = gen_unit_left_open(n);
        auto bundle = gen_adversarial_from(base.space, eps, alphas);
        bundle.params["n"] = std::to_string(n);
        return bundle;
    }
    throw std::invalid_argument("unknown example: " + name);
}

struct VerifyPreset {
    std::string example;
    std::map<std::string, std::string> params;
};

inline std::vector<VerifyPreset> verify_presets(const std::string& scale) {
    auto pick = [&](const char* s, const char* m, const char* l) -> std::string {
        if (scale == "small") return s;
        if (scale == "medium") return m;
        if (scale == "large") return l;
        throw std::invalid_argument("unknown scale: " + scale);
    };
    std::vector<VerifyPreset> out;
    out.push_back({"two-intervals", {{"n", pick("32", "128", "512")}}});
    out.push_back({"harmonic-balls", {{"n", pick("32", "128", "512")}}});
    out.push_back({"unit-left-open", {{"n", pick("32", "128", "512")}}});
    out.push_back({"l1-axes", {{"m", pick("8", "10", "12")}, {"n", pick("8", "10", "12")}}});
    out.push_back({"parallel-lines", {{"gap", "1"}, {"halfwidth", "8"}, {"n", pick("64", "128", "256")}}});
    out.push_back({"punctured-square", {{"n", pick("32", "48", "64")}}});
    out.push_back({"adversarial-cover", {{"n", pick("32", "128", "512")}, {"eps", "0.1"}}});
    return out;
}

}  // namespace metriclab
