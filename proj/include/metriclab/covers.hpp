#pragma once

// Cover representation (explicit members, balls, complements, truncated ball
// families), Lebesgue-number bounds and exact values via minimal bad-set
// search, bad-set witnesses, local-finiteness profiling, greedy finite
// subcovers, and the adversarial shrinking-ball cover construction.

#include <bit>
#include <cstdio>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "boundedness.hpp"
#include "metric_space.hpp"

namespace metriclab {

struct RadiusFormula {
    enum class Type { constant, harmonic, scaled };
    Type type = Type::constant;
    double c = 0.0;

    // n is 1-based. harmonic: 1/n - 1/(n+1); scaled: c/n; constant: c.
    double radius(int n) const {
        switch (type) {
            case Type::constant: return c;
            case Type::harmonic: return 1.0 / n - 1.0 / (n + 1);
            case Type::scaled: return c / n;
        }
        return c;
    }
};

inline const char* to_string(RadiusFormula::Type t) {
    switch (t) {
        case RadiusFormula::Type::constant: return "constant";
        case RadiusFormula::Type::harmonic: return "harmonic";
        case RadiusFormula::Type::scaled: return "scaled";
    }
    return "?";
}

struct CoverElement {
    enum class Kind { open_ball, explicit_set, complement_of };
    Kind kind = Kind::explicit_set;
    int center = -1;      // open_ball
    double radius = 0.0;  // open_ball
    bool open = true;     // open_ball
    PointSet points;      // explicit_set / complement_of
    std::string label;    // auto-assigned at realization when empty
};

inline CoverElement ball_element(int center, double radius, bool open = true) {
    CoverElement e;
    e.kind = CoverElement::Kind::open_ball;
    e.center = center;
    e.radius = radius;
    e.open = open;
    return e;
}

inline CoverElement explicit_element(PointSet pts) {
    CoverElement e;
    e.kind = CoverElement::Kind::explicit_set;
    e.points = std::move(pts);
    return e;
}

inline CoverElement complement_element(PointSet pts) {
    CoverElement e;
    e.kind = CoverElement::Kind::complement_of;
    e.points = std::move(pts);
    return e;
}

struct ParametricBallFamily {
    int range = 0;             // members n = 1..range
    std::vector<int> centers;  // centers[n-1], one per member
    RadiusFormula radius;
    bool open = true;
    std::string label;
};

struct Cover {
    std::vector<CoverElement> elements;
    std::vector<ParametricBallFamily> families;
    PointSet target;
};

struct RealizedMember {
    std::string label;
    PointSet points;
};

namespace detail {

inline std::string padded(const char* prefix, int v, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, v);
    return buf;
}

}  // namespace detail

// Evaluates every member to a concrete point set, in element order followed
// by family order with n ascending. Labels default to elem-### and
// fam-###-n#### so that lexicographic label order equals realization order.
inline std::vector<RealizedMember> realize(const FiniteMetricSpace& s, const Cover& cover) {
    PointSet target = detail::normalized(s, cover.target);
    if (target.empty()) throw std::invalid_argument("cover target is empty");
    std::vector<RealizedMember> out;
    for (std::size_t e = 0; e < cover.elements.size(); ++e) {
        const CoverElement& el = cover.elements[e];
        std::string label = el.label.empty() ? detail::padded("elem-", static_cast<int>(e), 3) : el.label;
        PointSet pts;
        switch (el.kind) {
            case CoverElement::Kind::open_ball:
                if (el.radius <= 0) throw std::invalid_argument("cover ball radius must be positive: " + label);
                pts = ball(s, el.center, el.radius, !el.open);
                break;
            case CoverElement::Kind::explicit_set:
                pts = detail::normalized(s, el.points);
                break;
            case CoverElement::Kind::complement_of: {
                PointSet excl = detail::normalized(s, el.points);
                std::size_t w = 0;
                for (int i = 0; i < s.n(); ++i) {
                    while (w < excl.size() && excl[w] < i) ++w;
                    if (w < excl.size() && excl[w] == i) continue;
                    pts.push_back(i);
                }
                break;
            }
        }
        out.push_back({std::move(label), std::move(pts)});
    }
    for (std::size_t f = 0; f < cover.families.size(); ++f) {
        const ParametricBallFamily& fam = cover.families[f];
        if (fam.range < 1) throw std::invalid_argument("family range must be >= 1");
        if (static_cast<int>(fam.centers.size()) != fam.range)
            throw std::invalid_argument("family needs one center per index in 1..range");
        std::string base = fam.label.empty() ? detail::padded("fam-", static_cast<int>(f), 3) : fam.label;
        for (int n = 1; n <= fam.range; ++n) {
            double r = fam.radius.radius(n);
            std::string label = base + detail::padded("-n", n, 4);
            if (r <= 0) throw std::invalid_argument("family radius must be positive: " + label);
            out.push_back({std::move(label), ball(s, fam.centers[static_cast<std::size_t>(n - 1)], r, !fam.open)});
        }
    }
    return out;
}

namespace detail {

inline std::optional<int> first_uncovered(const FiniteMetricSpace& s, const PointSet& target,
                                          const std::vector<RealizedMember>& members) {
    std::vector<char> covered(static_cast<std::size_t>(s.n()), 0);
    for (const auto& m : members)
        for (int p : m.points) covered[static_cast<std::size_t>(p)] = 1;
    for (int p : target)
        if (!covered[static_cast<std::size_t>(p)]) return p;
    return std::nullopt;
}

}  // namespace detail

// nullopt when every target point lies in some member; otherwise the smallest
// uncovered target index.
inline std::optional<int> covers_check(const FiniteMetricSpace& s, const Cover& cover) {
    return detail::first_uncovered(s, detail::normalized(s, cover.target), realize(s, cover));
}

// min over target x of max over members O of d(x, space minus O), with
// d(x, empty) = +infinity. Any positive alpha <= this value is a valid
// Lebesgue number for the cover.
inline double lebesgue_ball_bound(const FiniteMetricSpace& s, const Cover& cover) {
    PointSet target = detail::normalized(s, cover.target);
    auto members = realize(s, cover);
    if (auto unc = detail::first_uncovered(s, target, members))
        throw std::invalid_argument("cover does not cover target point " + std::to_string(*unc));
    std::vector<PointSet> comps;
    comps.reserve(members.size());
    for (const auto& m : members) {
        PointSet comp;
        std::size_t w = 0;
        for (int i = 0; i < s.n(); ++i) {
            while (w < m.points.size() && m.points[w] < i) ++w;
            if (w < m.points.size() && m.points[w] == i) continue;
            comp.push_back(i);
        }
        comps.push_back(std::move(comp));
    }
    double bound = kInf;
    for (int x : target) {
        double best = 0.0;
        for (const auto& comp : comps) {
            best = std::max(best, set_distance(s, x, comp));
            if (best == kInf) break;
        }
        bound = std::min(bound, best);
    }
    return bound;
}

struct LebesgueReport {
    double ball_bound = 0.0;
    double exact = kInf;              // meaningful when complete
    std::optional<PointSet> witness;  // bad set with diameter == exact
    double lower = 0.0;               // bracket when the node budget ran out
    double upper = kInf;
    bool complete = true;
    std::string method;
};

namespace detail {

// Shared machinery for the minimal bad-set search. A set A inside the target
// is "bad" when it is contained in no single member; encoding membership of
// each target point as a bitmask over subset-maximal members makes A bad
// exactly when the AND of its masks is empty. Minimal bad sets are
// transversals of member complements, so children extend A by one point drawn
// from the complement of a member still containing all of A.
class BadSetEngine {
  public:
    BadSetEngine(const FiniteMetricSpace& s, const Cover& cover) : s_(&s) {
        target_ = normalized(s, cover.target);
        auto members = realize(s, cover);
        if (auto unc = first_uncovered(s, target_, members))
            throw std::invalid_argument("cover does not cover target point " + std::to_string(*unc));

        // Restrict members to the target and keep only subset-maximal ones;
        // badness only depends on those.
        std::vector<PointSet> sets;
        for (const auto& m : members) {
            PointSet inter;
            std::set_intersection(m.points.begin(), m.points.end(), target_.begin(), target_.end(),
                                  std::back_inserter(inter));
            if (static_cast<int>(inter.size()) == static_cast<int>(target_.size())) {
                whole_target_member_ = true;
                return;
            }
            sets.push_back(std::move(inter));
        }
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::vector<PointSet> maximal;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
                if (i != j && sets[j].size() >= sets[i].size() &&
                    std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
                    dominated = sets[j].size() > sets[i].size() || j < i;  // keep one copy among equals
            if (!dominated) maximal.push_back(sets[i]);
        }
        msets_ = std::move(maximal);
        m_ = static_cast<int>(msets_.size());
        words_ = (m_ + 63) / 64;

        memb_.assign(target_.size() * static_cast<std::size_t>(words_), 0);
        comp_.assign(static_cast<std::size_t>(m_), {});
        for (int mi = 0; mi < m_; ++mi) {
            const PointSet& mem = msets_[static_cast<std::size_t>(mi)];
            std::size_t w = 0;
            for (std::size_t t = 0; t < target_.size(); ++t) {
                int p = target_[t];
                while (w < mem.size() && mem[w] < p) ++w;
                if (w < mem.size() && mem[w] == p)
                    memb_[t * static_cast<std::size_t>(words_) + static_cast<std::size_t>(mi / 64)] |=
                        (1ull << (mi % 64));
                else
                    comp_[static_cast<std::size_t>(mi)].push_back(static_cast<int>(t));
            }
        }
    }

    bool whole_target_member() const { return whole_target_member_; }
    const PointSet& target() const { return target_; }

    // Smallest-distance bad pair (as target positions), lexicographic on ties.
    struct PairScan {
        double d = kInf;
        int a = -1, b = -1;
    };
    PairScan best_bad_pair() const {
        PairScan best;
        const std::size_t nt = target_.size();
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = i + 1; j < nt; ++j) {
                if (!masks_disjoint(i, j)) continue;
                double d = s_->d(target_[i], target_[j]);
                if (d < best.d) best = {d, static_cast<int>(i), static_cast<int>(j)};
            }
        return best;
    }

    struct SearchOutcome {
        bool complete = true;
        bool found = false;
        double diam = kInf;
        std::vector<int> pts;  // target positions
        double lower = 0.0;    // valid when !complete
    };

    // Best-first search for the minimum-diameter bad set, pruning at `bound`
    // (sets with diam >= bound are never reported; pass +inf for the true
    // minimum). Diameter ties go to the smaller set, then lexicographic
    // order, so the reported set is unique. Pops are capped by search_limit.
    SearchOutcome search(double bound, std::uint64_t search_limit) const {
        SearchOutcome out;
        if (whole_target_member_) return out;  // no bad set exists
        struct Node {
            double diam;
            std::vector<int> pts;
        };
        auto node_after = [](const Node& a, const Node& b) {
            if (a.diam != b.diam) return a.diam > b.diam;
            if (a.pts.size() != b.pts.size()) return a.pts.size() > b.pts.size();
            return a.pts > b.pts;
        };
        std::priority_queue<Node, std::vector<Node>, decltype(node_after)> heap(node_after);
        std::set<std::vector<int>> seen;
        for (std::size_t t = 0; t < target_.size(); ++t)
            heap.push({0.0, {static_cast<int>(t)}});

        std::vector<std::uint64_t> mask(static_cast<std::size_t>(words_));
        std::uint64_t pops = 0;
        while (!heap.empty()) {
            Node node = heap.top();
            heap.pop();
            if (node.diam >= bound) break;  // heap is ordered: nothing better remains
            if (++pops > search_limit) {
                out.complete = false;
                out.lower = node.diam;
                return out;
            }
            // mask = AND of member masks over the node's points
            for (int w = 0; w < words_; ++w) mask[static_cast<std::size_t>(w)] = ~0ull;
            for (int t : node.pts)
                for (int w = 0; w < words_; ++w)
                    mask[static_cast<std::size_t>(w)] &=
                        memb_[static_cast<std::size_t>(t) * words_ + static_cast<std::size_t>(w)];
            int branch = -1;  // member still containing the node, smallest complement
            for (int w = 0; w < words_; ++w) {
                std::uint64_t bits = mask[static_cast<std::size_t>(w)];
                while (bits) {
                    int mi = w * 64 + std::countr_zero(bits);
                    if (mi < m_ && (branch < 0 || comp_[static_cast<std::size_t>(mi)].size() <
                                                      comp_[static_cast<std::size_t>(branch)].size()))
                        branch = mi;
                    bits &= bits - 1;
                }
            }
            if (branch < 0) {
                out.found = true;
                out.diam = node.diam;
                out.pts = node.pts;
                return out;
            }
            for (int q : comp_[static_cast<std::size_t>(branch)]) {
                if (std::binary_search(node.pts.begin(), node.pts.end(), q)) continue;
                double d = node.diam;
                for (int t : node.pts) {
                    d = std::max(d, s_->d(target_[static_cast<std::size_t>(t)], target_[static_cast<std::size_t>(q)]));
                    d = std::max(d, s_->d(target_[static_cast<std::size_t>(q)], target_[static_cast<std::size_t>(t)]));
                }
                if (d >= bound) continue;
                std::vector<int> pts = node.pts;
                pts.insert(std::lower_bound(pts.begin(), pts.end(), q), q);
                if (seen.insert(pts).second) heap.push({d, std::move(pts)});
            }
        }
        return out;
    }

    PointSet to_space(const std::vector<int>& positions) const {
        PointSet out;
        out.reserve(positions.size());
        for (int t : positions) out.push_back(target_[static_cast<std::size_t>(t)]);
        return out;
    }

  private:
    bool masks_disjoint(std::size_t i, std::size_t j) const {
        for (int w = 0; w < words_; ++w)
            if (memb_[i * words_ + static_cast<std::size_t>(w)] & memb_[j * words_ + static_cast<std::size_t>(w)])
                return false;
        return true;
    }

    const FiniteMetricSpace* s_;
    PointSet target_;
    std::vector<PointSet> msets_;
    std::vector<std::uint64_t> memb_;  // per target position, words_ each
    std::vector<std::vector<int>> comp_;
    int m_ = 0;
    int words_ = 0;
    bool whole_target_member_ = false;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultSearchLimit = 1'000'000;

// Exact supremal valid Lebesgue number: the minimum diameter of a bad set
// (+infinity when some member contains the whole target). Because the
// Lebesgue condition uses a strict diameter inequality, the returned value is
// itself a valid Lebesgue number. If the node budget runs out the report
// carries a lower/upper bracket instead and `complete` is false.
inline LebesgueReport lebesgue_exact(const FiniteMetricSpace& s, const Cover& cover,
                                     std::uint64_t search_limit = kDefaultSearchLimit) {
    detail::BadSetEngine engine(s, cover);
    LebesgueReport rep;
    rep.ball_bound = lebesgue_ball_bound(s, cover);
    rep.method = "minimal-bad-set-search";
    if (engine.whole_target_member()) {
        rep.exact = kInf;
        rep.lower = kInf;
        rep.upper = kInf;
        return rep;
    }
    auto pair = engine.best_bad_pair();
    double bound = pair.d == kInf ? kInf : std::nextafter(pair.d, kInf);  // keep diam == pair.d candidates
    auto out = engine.search(bound, search_limit);
    if (!out.complete) {
        rep.complete = false;
        rep.method += ":bracketed";
        rep.lower = out.lower;
        rep.upper = pair.d;
        rep.exact = kInf;
        return rep;
    }
    if (out.found) {
        rep.exact = out.diam;
        rep.witness = engine.to_space(out.pts);
    } else if (pair.d < kInf) {
        rep.exact = pair.d;  // the best bad pair was the only candidate at the bound
        rep.witness = engine.to_space({pair.a, pair.b});
    } else {
        rep.exact = kInf;
    }
    rep.lower = rep.exact;
    rep.upper = rep.exact;
    return rep;
}

// Power-set oracle for small targets; same report shape with method "brute".
inline LebesgueReport lebesgue_exact_brute(const FiniteMetricSpace& s, const Cover& cover) {
    PointSet target = detail::normalized(s, cover.target);
    if (target.size() > 20) throw std::invalid_argument("brute-force oracle is limited to 20 target points");
    auto members = realize(s, cover);
    if (auto unc = detail::first_uncovered(s, target, members))
        throw std::invalid_argument("cover does not cover target point " + std::to_string(*unc));

    LebesgueReport rep;
    rep.ball_bound = lebesgue_ball_bound(s, cover);
    rep.method = "brute";
    const std::size_t t = target.size();
    std::vector<std::vector<char>> in_member(members.size(), std::vector<char>(t, 0));
    for (std::size_t mi = 0; mi < members.size(); ++mi) {
        std::size_t w = 0;
        const PointSet& mem = members[mi].points;
        for (std::size_t i = 0; i < t; ++i) {
            while (w < mem.size() && mem[w] < target[i]) ++w;
            if (w < mem.size() && mem[w] == target[i]) in_member[mi][i] = 1;
        }
    }
    double best = kInf;
    std::vector<int> best_pts;
    for (std::uint64_t mask = 1; mask < (1ull << t); ++mask) {
        bool bad = true;
        for (std::size_t mi = 0; mi < members.size() && bad; ++mi) {
            bool inside = true;
            for (std::size_t i = 0; i < t && inside; ++i)
                if ((mask >> i) & 1ull) inside = in_member[mi][i] != 0;
            if (inside) bad = false;
        }
        if (!bad) continue;
        std::vector<int> pts;
        for (std::size_t i = 0; i < t; ++i)
            if ((mask >> i) & 1ull) pts.push_back(target[i]);
        double diam = 0.0;
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = 0; b < pts.size(); ++b) diam = std::max(diam, s.d(pts[a], pts[b]));
        if (diam < best || (diam == best && (pts.size() < best_pts.size() ||
                                             (pts.size() == best_pts.size() && pts < best_pts)))) {
            best = diam;
            best_pts = pts;
        }
    }
    rep.exact = best;
    if (best < kInf) rep.witness = best_pts;
    rep.lower = best;
    rep.upper = best;
    return rep;
}

// A set of diameter < alpha lying in no single member, or nullopt when alpha
// is a valid Lebesgue number for the cover. A witness exists exactly when
// alpha exceeds the exact supremal value.
inline std::optional<PointSet> lebesgue_witness(const FiniteMetricSpace& s, const Cover& cover, double alpha,
                                                std::uint64_t search_limit = kDefaultSearchLimit) {
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    detail::BadSetEngine engine(s, cover);
    if (engine.whole_target_member()) return std::nullopt;
    auto pair = engine.best_bad_pair();
    if (pair.d < alpha) return engine.to_space({pair.a, pair.b});
    auto out = engine.search(alpha, search_limit);
    if (!out.complete) throw std::runtime_error("lebesgue_witness: search limit exceeded");
    if (!out.found) return std::nullopt;
    return engine.to_space(out.pts);
}

struct LocalFinitenessProfile {
    std::map<int, int> incidence;  // target point -> number of members meeting B(point, delta)
    int max_incidence = 0;
};

inline LocalFinitenessProfile local_finiteness_profile(const FiniteMetricSpace& s, const Cover& cover, double delta) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    PointSet target = detail::normalized(s, cover.target);
    auto members = realize(s, cover);
    const int mcount = static_cast<int>(members.size());
    const int words = (mcount + 63) / 64;
    std::vector<std::uint64_t> memb(static_cast<std::size_t>(s.n()) * static_cast<std::size_t>(words), 0);
    for (int mi = 0; mi < mcount; ++mi)
        for (int p : members[static_cast<std::size_t>(mi)].points)
            memb[static_cast<std::size_t>(p) * words + static_cast<std::size_t>(mi / 64)] |= (1ull << (mi % 64));

    LocalFinitenessProfile prof;
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(words));
    for (int x : target) {
        std::fill(acc.begin(), acc.end(), 0ull);
        for (int j = 0; j < s.n(); ++j)
            if (s.d(x, j) < delta)
                for (int w = 0; w < words; ++w)
                    acc[static_cast<std::size_t>(w)] |= memb[static_cast<std::size_t>(j) * words + static_cast<std::size_t>(w)];
        int count = 0;
        for (int w = 0; w < words; ++w) count += std::popcount(acc[static_cast<std::size_t>(w)]);
        prof.incidence[x] = count;
        prof.max_incidence = std::max(prof.max_incidence, count);
    }
    return prof;
}

struct SubcoverResult {
    bool ok = false;
    std::vector<std::string> labels;  // chosen members in pick order
    std::optional<int> uncovered;     // smallest point left uncovered on failure
};

// Greedy set cover of B: largest residual intersection first, ties by label
// order. Not minimum; the choice sequence is deterministic.
inline SubcoverResult finite_subcover(const FiniteMetricSpace& s, const Cover& cover, const PointSet& b_raw) {
    PointSet b = detail::normalized(s, b_raw);
    auto members = realize(s, cover);
    SubcoverResult res;
    std::vector<char> residual(static_cast<std::size_t>(s.n()), 0);
    std::size_t remaining = b.size();
    for (int p : b) residual[static_cast<std::size_t>(p)] = 1;
    while (remaining > 0) {
        int best = -1;
        std::size_t best_gain = 0;
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
            std::size_t gain = 0;
            for (int p : members[mi].points) gain += residual[static_cast<std::size_t>(p)];
            if (gain > best_gain ||
                (gain > 0 && gain == best_gain && members[mi].label < members[static_cast<std::size_t>(best)].label)) {
                best = static_cast<int>(mi);
                best_gain = gain;
            }
        }
        if (best < 0) {
            for (int p : b)
                if (residual[static_cast<std::size_t>(p)]) {
                    res.uncovered = p;
                    break;
                }
            return res;
        }
        res.labels.push_back(members[static_cast<std::size_t>(best)].label);
        for (int p : members[static_cast<std::size_t>(best)].points) {
            remaining -= residual[static_cast<std::size_t>(p)];
            residual[static_cast<std::size_t>(p)] = 0;
        }
    }
    res.ok = true;
    return res;
}

// The shrinking-ball cover attached to a separation witness: the n-th witness
// point carries an open ball of radius eps/(4n), and one complement member
// holds everything outside the witness set. Target is the whole space.
inline Cover adversarial_cover(const FiniteMetricSpace& s, const SeparationWitness& witness) {
    if (witness.eps <= 0) throw std::invalid_argument("witness eps must be positive");
    if (witness.indices.empty()) throw std::invalid_argument("witness must be nonempty");
    for (std::size_t i = 0; i < witness.indices.size(); ++i) {
        detail::check_index(s, witness.indices[i]);
        for (std::size_t j = i + 1; j < witness.indices.size(); ++j)
            if (s.d(witness.indices[i], witness.indices[j]) <= witness.eps)
                throw std::invalid_argument("witness points are not strictly separated at eps");
    }
    Cover cover;
    ParametricBallFamily fam;
    fam.range = static_cast<int>(witness.indices.size());
    fam.centers = witness.indices;
    fam.radius = {RadiusFormula::Type::scaled, witness.eps / 4.0};
    fam.label = "witness-balls";
    cover.families.push_back(std::move(fam));
    CoverElement comp = complement_element(witness.indices);
    comp.label = "outside-witness";
    cover.elements.push_back(std::move(comp));
    cover.target = detail::all_points(s);
    return cover;
}

}  // namespace metriclab
