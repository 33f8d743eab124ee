#include "invprob/geometry.hpp"

#include <utility>

namespace invprob {

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw GeometryError("zero denominator in rational '" + s + "'");
    return Rat(num, den);
}

// ---------------------------------------------------------------------------
// Group I
// ---------------------------------------------------------------------------

Rat triangle_area(const Point& p, const Point& q, const Point& r) {
    Rat twice = p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y);
    if (twice < 0) twice = -twice;
    return twice / 2;
}

bool group1_invariants_hold(const GroupIConfig& c) {
    if (c.dx == 0 && c.dy == 0) return false;
    if (c.s == 0) return false;
    return triangle_area(c.A, c.B, c.C) != 0;
}

bool p1_median(const GroupIConfig& c) {
    Rat mx = (c.A.x + c.B.x) / 2;
    Rat my = (c.A.y + c.B.y) / 2;
    return cross(c.dx, c.dy, mx - c.C.x, my - c.C.y) == 0;
}

bool p2_parallel(const GroupIConfig& c) {
    return cross(c.dx, c.dy, c.B.x - c.A.x, c.B.y - c.A.y) == 0;
}

bool r_equal_areas(const GroupIConfig& c) {
    Point m = c.M();
    Rat sa = triangle_area(c.A, m, c.C);
    Rat sb = triangle_area(c.B, m, c.C);
    return sa != 0 && sa == sb;
}

// ---------------------------------------------------------------------------
// Group II
// ---------------------------------------------------------------------------

namespace {

// Solve A + alpha*(C-A) = B + beta*(D-B); returns nothing when the diagonal
// lines are parallel.
std::optional<std::pair<Rat, Rat>> diagonal_params(const GroupIIConfig& c) {
    Rat e1x = c.C.x - c.A.x, e1y = c.C.y - c.A.y;
    Rat e2x = c.D.x - c.B.x, e2y = c.D.y - c.B.y;
    Rat wx = c.B.x - c.A.x, wy = c.B.y - c.A.y;
    Rat det = cross(e2x, e2y, e1x, e1y);
    if (det == 0) return std::nullopt;
    Rat alpha = cross(e2x, e2y, wx, wy) / det;
    Rat beta = cross(e1x, e1y, wx, wy) / det;
    return std::make_pair(alpha, beta);
}

bool no_three_collinear(const GroupIIConfig& c) {
    return triangle_area(c.A, c.B, c.C) != 0 && triangle_area(c.A, c.B, c.D) != 0 &&
           triangle_area(c.A, c.C, c.D) != 0 && triangle_area(c.B, c.C, c.D) != 0;
}

}  // namespace

bool group2_invariants_hold(const GroupIIConfig& c) {
    if (!no_three_collinear(c)) return false;
    auto params = diagonal_params(c);
    if (!params) return false;
    auto [alpha, beta] = *params;
    return alpha > 0 && alpha < 1 && beta > 0 && beta < 1;
}

std::pair<Point, RatioReport> diagonal_intersection(const GroupIIConfig& c) {
    if (!no_three_collinear(c))
        throw GeometryError("three of the four vertices are collinear");
    auto params = diagonal_params(c);
    if (!params) throw GeometryError("diagonals are parallel");
    auto [alpha, beta] = *params;
    if (!(alpha > 0 && alpha < 1 && beta > 0 && beta < 1))
        throw GeometryError("diagonal segments do not cross at an interior point");
    Point o{c.A.x + alpha * (c.C.x - c.A.x), c.A.y + alpha * (c.C.y - c.A.y)};
    RatioReport rr{alpha, beta, std::nullopt};
    if (alpha == beta) rr.lambda = alpha / (1 - alpha);
    return {o, rr};
}

bool p1_parallel_sides(const GroupIIConfig& c) {
    return cross(c.B.x - c.A.x, c.B.y - c.A.y, c.D.x - c.C.x, c.D.y - c.C.y) == 0;
}

bool p2_equal_sides(const GroupIIConfig& c) {
    Rat abx = c.B.x - c.A.x, aby = c.B.y - c.A.y;
    Rat cdx = c.D.x - c.C.x, cdy = c.D.y - c.C.y;
    return abx * abx + aby * aby == cdx * cdx + cdy * cdy;
}

std::optional<RatioReport> r_equal_ratios(const GroupIIConfig& c) {
    auto [o, rr] = diagonal_intersection(c);
    (void)o;
    if (!rr.lambda) return std::nullopt;
    return rr;
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

namespace {

// Explicit modular draws rather than std::uniform_int_distribution: the
// distribution's output is implementation-defined and the reports must be
// reproducible from (seed, index) alone.
std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::int64_t rand_nonzero_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    for (;;) {
        std::int64_t v = rand_int(rng, lo, hi);
        if (v != 0) return v;
    }
}

// Positive rational with numerator and denominator in [1, 20].
Rat rand_pos_rat(Rng& rng) {
    return Rat(rand_int(rng, 1, 20), rand_int(rng, 1, 20));
}

Rat rand_signed_rat(Rng& rng) {
    Rat r = rand_pos_rat(rng);
    return (rng() & 1) ? r : -r;
}

Point rand_point(Rng& rng) {
    return {Rat(rand_int(rng, -10, 10)), Rat(rand_int(rng, -10, 10))};
}

[[noreturn]] void retries_exhausted(const char* sampler) {
    throw GeometryError(std::string("resampling retries exhausted in ") + sampler);
}

}  // namespace

Rng rng_for_sample(std::uint64_t seed, std::uint64_t sample_index) {
    // splitmix64 over the combined key
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (sample_index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return Rng(z);
}

GroupIConfig sample_group1_forward(Group1ForwardBranch branch, Rng& rng) {
    for (int attempt = 0; attempt < kMaxResampleRetries; ++attempt) {
        Point a = rand_point(rng), b = rand_point(rng), c = rand_point(rng);
        if (triangle_area(a, b, c) == 0) continue;
        Rat dx, dy;
        if (branch == Group1ForwardBranch::Median) {
            dx = (a.x + b.x) / 2 - c.x;
            dy = (a.y + b.y) / 2 - c.y;
        } else {
            dx = b.x - a.x;
            dy = b.y - a.y;
        }
        GroupIConfig cfg{a, b, c, dx, dy, rand_signed_rat(rng)};
        if (group1_invariants_hold(cfg)) return cfg;
    }
    retries_exhausted("sample_group1_forward");
}

GroupIConfig sample_group1_inverse(Group1InverseSide side, Rng& rng) {
    for (int attempt = 0; attempt < kMaxResampleRetries; ++attempt) {
        Point c = rand_point(rng);
        Rat dx(rand_int(rng, -10, 10)), dy(rand_int(rng, -10, 10));
        if (dx == 0 && dy == 0) continue;
        Point a = rand_point(rng);
        if (cross(dx, dy, a.x - c.x, a.y - c.y) == 0) continue;  // A on g
        Point b{0, 0};
        if (side == Group1InverseSide::Same) {
            Rat u = rand_signed_rat(rng);
            b = {a.x + u * dx, a.y + u * dy};
        } else {
            // Reflect A across g, then slide along g; division by |d|^2 keeps
            // all coordinates rational.
            Rat d2 = dx * dx + dy * dy;
            Rat proj = ((a.x - c.x) * dx + (a.y - c.y) * dy) / d2;
            Point foot{c.x + proj * dx, c.y + proj * dy};
            Point refl{2 * foot.x - a.x, 2 * foot.y - a.y};
            Rat u = (rng() & 1) ? Rat(0) : rand_signed_rat(rng);
            b = {refl.x + u * dx, refl.y + u * dy};
        }
        GroupIConfig cfg{a, b, c, dx, dy, rand_signed_rat(rng)};
        if (group1_invariants_hold(cfg)) return cfg;
    }
    retries_exhausted("sample_group1_inverse");
}

GroupIConfig sample_group1_uniform(Rng& rng) {
    for (int attempt = 0; attempt < kMaxResampleRetries; ++attempt) {
        Point a = rand_point(rng), b = rand_point(rng), c = rand_point(rng);
        Rat dx(rand_int(rng, -10, 10)), dy(rand_int(rng, -10, 10));
        GroupIConfig cfg{a, b, c, dx, dy, rand_signed_rat(rng)};
        if (group1_invariants_hold(cfg)) return cfg;
    }
    retries_exhausted("sample_group1_uniform");
}

namespace {

// Rational rotation from parameter m: cos = (1-m^2)/(1+m^2), sin = 2m/(1+m^2).
GroupIIConfig apply_similarity(const GroupIIConfig& c, const Rat& m, const Point& shift) {
    Rat m2 = m * m;
    Rat cosv = (1 - m2) / (1 + m2);
    Rat sinv = 2 * m / (1 + m2);
    auto map = [&](const Point& p) {
        return Point{cosv * p.x - sinv * p.y + shift.x, sinv * p.x + cosv * p.y + shift.y};
    };
    return {map(c.A), map(c.B), map(c.C), map(c.D)};
}

}  // namespace

GroupIIConfig sample_group2_forward(Group2ForwardBranch branch, Rng& rng) {
    for (int attempt = 0; attempt < kMaxResampleRetries; ++attempt) {
        Rat b(rand_int(rng, 1, 10));
        Rat dxv(rand_int(rng, -10, 10));
        Rat dyv(rand_int(rng, 1, 10));
        Rat mu(1);
        if (branch == Group2ForwardBranch::Trapezium) {
            mu = rand_pos_rat(rng);
            if (mu == 1) continue;
        }
        // Canonical trapezoid: A,B on the x-axis, D and C = D + mu*(B-A) above.
        GroupIIConfig cfg{{Rat(0), Rat(0)}, {b, Rat(0)}, {dxv + mu * b, dyv}, {dxv, dyv}};
        Rat m = rand_signed_rat(rng);
        Point shift = rand_point(rng);
        cfg = apply_similarity(cfg, m, shift);
        if (group2_invariants_hold(cfg)) return cfg;
    }
    retries_exhausted("sample_group2_forward");
}

GroupIIConfig sample_group2_inverse(Rng& rng) {
    for (int attempt = 0; attempt < kMaxResampleRetries; ++attempt) {
        Rat ux(rand_int(rng, -10, 10)), uy(rand_int(rng, -10, 10));
        Rat vx(rand_int(rng, -10, 10)), vy(rand_int(rng, -10, 10));
        if (cross(ux, uy, vx, vy) == 0) continue;
        Rat c = rand_pos_rat(rng);
        Rat tp = rand_pos_rat(rng);
        // Half the draws take the parallelogram branch (lambda = 1).
        Rat lambda(1);
        if (rng() & 1) {
            lambda = rand_pos_rat(rng);
            if (lambda == 1) continue;
        }
        // O at the origin; AO/OC = BO/OD = lambda by construction. Whether
        // AB || CD is the claim under test, not an input.
        GroupIIConfig cfg{{-lambda * c * ux, -lambda * c * uy},
                          {-lambda * tp * vx, -lambda * tp * vy},
                          {c * ux, c * uy},
                          {tp * vx, tp * vy}};
        if (group2_invariants_hold(cfg)) return cfg;
    }
    retries_exhausted("sample_group2_inverse");
}

GroupIIConfig sample_group2_uniform(Rng& rng) {
    for (int attempt = 0; attempt < kMaxResampleRetries * 10; ++attempt) {
        GroupIIConfig cfg{rand_point(rng), rand_point(rng), rand_point(rng),
                          rand_point(rng)};
        if (group2_invariants_hold(cfg)) return cfg;
    }
    retries_exhausted("sample_group2_uniform");
}

}  // namespace invprob
