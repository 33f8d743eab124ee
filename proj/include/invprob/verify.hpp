#ifndef INVPROB_VERIFY_HPP
#define INVPROB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "invprob/geometry.hpp"
#include "invprob/schema.hpp"

namespace invprob {

/// Binds atom names to built-in geometric predicate identifiers
/// (group1.median, group2.equal_ratios, ...).
using Interpretation = std::map<std::string, std::string>;

using Config = std::variant<GroupIConfig, GroupIIConfig>;

bool is_group1_predicate(const std::string& id);
bool is_group2_predicate(const std::string& id);
bool eval_predicate(const std::string& id, const Config& config);

struct Counterexample {
    std::uint64_t sample_index;
    std::string reason;
    // exact coordinates, replayable: ("A.x", "3/2"), ...
    std::vector<std::pair<std::string, std::string>> coordinates;
};

struct VerificationReport {
    std::string schema;
    std::uint64_t samples = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;                // includes precondition failures
    std::uint64_t precondition_failures = 0;
    std::vector<std::pair<std::string, std::uint64_t>> branches;  // disjunct order
    std::vector<Counterexample> counterexamples;
    std::uint64_t seed = 0;
};

class VerifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultCounterexampleCap = 10;

std::vector<std::string> known_sampler_ids();

/// Runs the sampler n times and checks the schema's claim on every sample:
/// forward kinds check the conclusion, inverse checks that exactly one
/// disjunct holds. Parallelized over samples; per-sample rng streams are
/// derived from (seed, index), so the report is schedule-independent.
VerificationReport check_implication(const ProblemSchema& schema,
                                     const Interpretation& interp,
                                     const std::string& sampler_id, std::uint64_t n,
                                     std::uint64_t seed,
                                     std::uint64_t counterexample_cap = kDefaultCounterexampleCap);

/// Serial reference for the parallel kernel above; must produce an identical
/// report.
VerificationReport check_implication_serial(
    const ProblemSchema& schema, const Interpretation& interp,
    const std::string& sampler_id, std::uint64_t n, std::uint64_t seed,
    std::uint64_t counterexample_cap = kDefaultCounterexampleCap);

enum class Group { I, II };

/// Searches for a configuration satisfying t and both predicates, drawing
/// from the two branch samplers and a uniform sampler in rotation. Absence
/// over n samples backs empirical exclusivity evidence.
std::optional<Config> search_joint_model(const std::string& p_id, const std::string& q_id,
                                         Group group, std::uint64_t n, std::uint64_t seed);

std::vector<std::pair<std::string, std::string>> config_coordinates(const Config& c);

std::string emit_report_text(const VerificationReport& r);
std::string emit_report_json(const VerificationReport& r);

}  // namespace invprob

#endif
