#ifndef INVPROB_GEOMETRY_HPP
#define INVPROB_GEOMETRY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace invprob {

/// Exact rational. All geometric decisions in this module are equality tests
/// over Rat; no floating point is involved anywhere.
using Rat = boost::multiprecision::cpp_rational;

std::string rat_to_string(const Rat& r);  // "num/den", lowest terms, or "num"
Rat rat_from_string(const std::string& s);

struct Point {
    Rat x;
    Rat y;
};

inline Rat cross(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
    return ax * by - ay * bx;
}

/// Triangle ABC, line g = {C + s*d}, point M = C + s*d on it.
/// Invariants: A,B,C not collinear; d nonzero; s != 0 (M != C).
struct GroupIConfig {
    Point A, B, C;
    Rat dx, dy;
    Rat s;
    Point M() const { return {C.x + s * dx, C.y + s * dy}; }
};

/// Quadrilateral ABCD whose diagonal segments AC and BD cross at an interior
/// point; no three vertices collinear.
struct GroupIIConfig {
    Point A, B, C, D;
};

struct RatioReport {
    Rat alpha;                  // O = A + alpha*(C-A)
    Rat beta;                   // O = B + beta*(D-B)
    std::optional<Rat> lambda;  // alpha/(1-alpha) when alpha == beta
};

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- Group I predicates ---
Rat triangle_area(const Point& p, const Point& q, const Point& r);
bool group1_invariants_hold(const GroupIConfig& c);
bool p1_median(const GroupIConfig& c);
bool p2_parallel(const GroupIConfig& c);
bool r_equal_areas(const GroupIConfig& c);

// --- Group II predicates ---
bool group2_invariants_hold(const GroupIIConfig& c);
std::pair<Point, RatioReport> diagonal_intersection(const GroupIIConfig& c);
bool p1_parallel_sides(const GroupIIConfig& c);
bool p2_equal_sides(const GroupIIConfig& c);
std::optional<RatioReport> r_equal_ratios(const GroupIIConfig& c);

// --- Samplers ---
// Pure given the rng state; resample on degeneracy with bounded retries.
using Rng = std::mt19937_64;

inline constexpr int kMaxResampleRetries = 100;

enum class Group1ForwardBranch { Median, Parallel };
enum class Group1InverseSide { Opposite, Same };
enum class Group2ForwardBranch { Trapezium, Parallelogram };

GroupIConfig sample_group1_forward(Group1ForwardBranch branch, Rng& rng);
GroupIConfig sample_group1_inverse(Group1InverseSide side, Rng& rng);
GroupIConfig sample_group1_uniform(Rng& rng);
GroupIIConfig sample_group2_forward(Group2ForwardBranch branch, Rng& rng);
GroupIIConfig sample_group2_inverse(Rng& rng);
GroupIIConfig sample_group2_uniform(Rng& rng);

/// Deterministic per-sample rng stream: identical results regardless of how
/// samples are scheduled across threads.
Rng rng_for_sample(std::uint64_t seed, std::uint64_t sample_index);

}  // namespace invprob

#endif
