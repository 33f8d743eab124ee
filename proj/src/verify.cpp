#include "invprob/verify.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invprob {

namespace {

const char* kGroup1Predicates[] = {"group1.triangle_line_point", "group1.median",
                                   "group1.parallel", "group1.equal_areas"};
const char* kGroup2Predicates[] = {"group2.quadrilateral_diagonals",
                                   "group2.parallel_sides", "group2.equal_sides",
                                   "group2.equal_ratios"};

}  // namespace

bool is_group1_predicate(const std::string& id) {
    return std::find(std::begin(kGroup1Predicates), std::end(kGroup1Predicates), id) !=
           std::end(kGroup1Predicates);
}

bool is_group2_predicate(const std::string& id) {
    return std::find(std::begin(kGroup2Predicates), std::end(kGroup2Predicates), id) !=
           std::end(kGroup2Predicates);
}

bool eval_predicate(const std::string& id, const Config& config) {
    if (const auto* c1 = std::get_if<GroupIConfig>(&config)) {
        if (id == "group1.triangle_line_point") return group1_invariants_hold(*c1);
        if (id == "group1.median") return p1_median(*c1);
        if (id == "group1.parallel") return p2_parallel(*c1);
        if (id == "group1.equal_areas") return r_equal_areas(*c1);
        throw VerifyError("predicate '" + id + "' cannot evaluate a group I config");
    }
    const auto& c2 = std::get<GroupIIConfig>(config);
    if (id == "group2.quadrilateral_diagonals") return group2_invariants_hold(c2);
    if (id == "group2.parallel_sides") return p1_parallel_sides(c2);
    if (id == "group2.equal_sides") return p2_equal_sides(c2);
    if (id == "group2.equal_ratios") return r_equal_ratios(c2).has_value();
    throw VerifyError("predicate '" + id + "' cannot evaluate a group II config");
}

std::vector<std::pair<std::string, std::string>> config_coordinates(const Config& c) {
    std::vector<std::pair<std::string, std::string>> out;
    if (const auto* c1 = std::get_if<GroupIConfig>(&c)) {
        out = {{"A.x", rat_to_string(c1->A.x)}, {"A.y", rat_to_string(c1->A.y)},
               {"B.x", rat_to_string(c1->B.x)}, {"B.y", rat_to_string(c1->B.y)},
               {"C.x", rat_to_string(c1->C.x)}, {"C.y", rat_to_string(c1->C.y)},
               {"d.x", rat_to_string(c1->dx)},  {"d.y", rat_to_string(c1->dy)},
               {"s", rat_to_string(c1->s)}};
    } else {
        const auto& c2 = std::get<GroupIIConfig>(c);
        out = {{"A.x", rat_to_string(c2.A.x)}, {"A.y", rat_to_string(c2.A.y)},
               {"B.x", rat_to_string(c2.B.x)}, {"B.y", rat_to_string(c2.B.y)},
               {"C.x", rat_to_string(c2.C.x)}, {"C.y", rat_to_string(c2.C.y)},
               {"D.x", rat_to_string(c2.D.x)}, {"D.y", rat_to_string(c2.D.y)}};
    }
    return out;
}

namespace {

using SamplerFn = std::function<Config(Rng&)>;

SamplerFn resolve_sampler(const std::string& id) {
    if (id == "group1.forward.median")
        return [](Rng& r) { return Config(sample_group1_forward(Group1ForwardBranch::Median, r)); };
    if (id == "group1.forward.parallel")
        return [](Rng& r) { return Config(sample_group1_forward(Group1ForwardBranch::Parallel, r)); };
    if (id == "group1.inverse")
        return [](Rng& r) {
            auto side = (r() & 1) ? Group1InverseSide::Opposite : Group1InverseSide::Same;
            return Config(sample_group1_inverse(side, r));
        };
    if (id == "group2.forward.trapezium")
        return [](Rng& r) { return Config(sample_group2_forward(Group2ForwardBranch::Trapezium, r)); };
    if (id == "group2.forward.parallelogram")
        return [](Rng& r) {
            return Config(sample_group2_forward(Group2ForwardBranch::Parallelogram, r));
        };
    if (id == "group2.inverse")
        return [](Rng& r) { return Config(sample_group2_inverse(r)); };
    throw VerifyError("unknown sampler '" + id + "'");
}

// Branch display name for a disjunct. Single atoms are named after their
// bound predicate; the two compound quadrilateral disjuncts get their
// geometric names; anything else falls back to the formula text.
std::string branch_label(const Formula& d, const Interpretation& interp) {
    if (d.op() == Connective::Atom) {
        auto it = interp.find(d.atom_name());
        if (it != interp.end()) {
            auto dot = it->second.rfind('.');
            return dot == std::string::npos ? it->second : it->second.substr(dot + 1);
        }
        return d.atom_name();
    }
    auto bound_to = [&](const Formula& f, const std::string& id) {
        if (f.op() != Connective::Atom) return false;
        auto it = interp.find(f.atom_name());
        return it != interp.end() && it->second == id;
    };
    if (d.op() == Connective::And && bound_to(d.left(), "group2.parallel_sides")) {
        Formula rhs = d.right();
        if (rhs.op() == Connective::Not && bound_to(rhs.left(), "group2.equal_sides"))
            return "trapezium";
        if (bound_to(rhs, "group2.equal_sides")) return "parallelogram";
    }
    return format(d);
}

struct SampleOutcome {
    enum class Kind { Pass, PreconditionFailed, Failed };
    Kind kind;
    int branch = -1;  // index of the disjunct that held (exactly-one checks)
    std::string reason;
};

Valuation valuation_for(const ProblemSchema& schema, const Interpretation& interp,
                        const Config& config) {
    Valuation v;
    auto bind = [&](const Formula& f) {
        for (const auto& name : atoms(f)) {
            if (v.count(name)) continue;
            auto it = interp.find(name);
            if (it == interp.end())
                throw VerifyError("atom '" + name + "' is not bound by the interpretation");
            v[name] = eval_predicate(it->second, config);
        }
    };
    bind(schema.context);
    for (const auto& d : schema.disjuncts) bind(d);
    bind(schema.conclusion);
    return v;
}

SampleOutcome judge_sample(const ProblemSchema& schema, const Interpretation& interp,
                           const Config& config) {
    Valuation v = valuation_for(schema, interp, config);
    if (!evaluate(schema.context, v))
        return {SampleOutcome::Kind::PreconditionFailed, -1, "context does not hold"};

    if (schema.kind == SchemaKind::Inverse) {
        if (!evaluate(schema.conclusion, v))
            return {SampleOutcome::Kind::PreconditionFailed, -1,
                    "hypothesis (conclusion side) does not hold"};
        int held = -1, count = 0;
        for (std::size_t i = 0; i < schema.disjuncts.size(); ++i) {
            if (evaluate(schema.disjuncts[i], v)) {
                held = static_cast<int>(i);
                ++count;
            }
        }
        if (count == 0) return {SampleOutcome::Kind::Failed, -1, "no disjunct holds"};
        if (count > 1)
            return {SampleOutcome::Kind::Failed, -1,
                    std::to_string(count) + " disjuncts hold simultaneously"};
        return {SampleOutcome::Kind::Pass, held, ""};
    }

    // Forward: the sampler establishes the hypothesis; record which disjunct.
    int held = -1;
    for (std::size_t i = 0; i < schema.disjuncts.size(); ++i) {
        if (evaluate(schema.disjuncts[i], v)) {
            held = static_cast<int>(i);
            break;
        }
    }
    if (held < 0)
        return {SampleOutcome::Kind::PreconditionFailed, -1, "no hypothesis disjunct holds"};
    if (!evaluate(schema.conclusion, v))
        return {SampleOutcome::Kind::Failed, held, "conclusion does not hold"};
    return {SampleOutcome::Kind::Pass, held, ""};
}

VerificationReport run_check(const ProblemSchema& schema, const Interpretation& interp,
                             const std::string& sampler_id, std::uint64_t n,
                             std::uint64_t seed, std::uint64_t counterexample_cap,
                             bool parallel) {
    if (n == 0) throw VerifyError("sample count must be at least 1");
    SamplerFn sampler = resolve_sampler(sampler_id);
    {
        // Fail on unbound atoms before the sampling loop starts.
        Rng probe = rng_for_sample(seed, 0);
        valuation_for(schema, interp, sampler(probe));
    }

    std::vector<std::uint64_t> branch_tally(schema.disjuncts.size(), 0);
    std::uint64_t passes = 0, failures = 0, precond = 0;
    std::vector<Counterexample> counterexamples;

#ifdef _OPENMP
#pragma omp parallel if (parallel)
    {
        std::vector<std::uint64_t> local_tally(schema.disjuncts.size(), 0);
        std::uint64_t local_passes = 0, local_failures = 0, local_precond = 0;
        std::vector<Counterexample> local_ce;
// Static schedule gives each thread a contiguous index block, so keeping the
// first `cap` failures per thread and merging by index reproduces the serial
// counterexample list exactly.
#pragma omp for schedule(static)
        for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
            auto i = static_cast<std::uint64_t>(ii);
            Rng rng = rng_for_sample(seed, i);
            Config config = sampler(rng);
            SampleOutcome out = judge_sample(schema, interp, config);
            switch (out.kind) {
                case SampleOutcome::Kind::Pass:
                    ++local_passes;
                    if (out.branch >= 0) ++local_tally[out.branch];
                    break;
                case SampleOutcome::Kind::PreconditionFailed:
                    ++local_failures;
                    ++local_precond;
                    break;
                case SampleOutcome::Kind::Failed:
                    ++local_failures;
                    if (local_ce.size() < counterexample_cap)
                        local_ce.push_back({i, out.reason, config_coordinates(config)});
                    break;
            }
        }
#pragma omp critical
        {
            passes += local_passes;
            failures += local_failures;
            precond += local_precond;
            for (std::size_t b = 0; b < branch_tally.size(); ++b)
                branch_tally[b] += local_tally[b];
            counterexamples.insert(counterexamples.end(), local_ce.begin(), local_ce.end());
        }
    }
    std::sort(counterexamples.begin(), counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return a.sample_index < b.sample_index;
              });
    if (counterexamples.size() > counterexample_cap)
        counterexamples.resize(counterexample_cap);
#else
    (void)parallel;
    for (std::uint64_t i = 0; i < n; ++i) {
        Rng rng = rng_for_sample(seed, i);
        Config config = sampler(rng);
        SampleOutcome out = judge_sample(schema, interp, config);
        switch (out.kind) {
            case SampleOutcome::Kind::Pass:
                ++passes;
                if (out.branch >= 0) ++branch_tally[out.branch];
                break;
            case SampleOutcome::Kind::PreconditionFailed:
                ++failures;
                ++precond;
                break;
            case SampleOutcome::Kind::Failed:
                ++failures;
                if (counterexamples.size() < counterexample_cap)
                    counterexamples.push_back({i, out.reason, config_coordinates(config)});
                break;
        }
    }
#endif

    VerificationReport report;
    report.schema = schema.name;
    report.samples = n;
    report.passes = passes;
    report.failures = failures;
    report.precondition_failures = precond;
    for (std::size_t b = 0; b < schema.disjuncts.size(); ++b)
        report.branches.emplace_back(branch_label(schema.disjuncts[b], interp),
                                     branch_tally[b]);
    report.counterexamples = std::move(counterexamples);
    report.seed = seed;
    return report;
}

}  // namespace

std::vector<std::string> known_sampler_ids() {
    return {"group1.forward.median",    "group1.forward.parallel",
            "group1.inverse",           "group2.forward.trapezium",
            "group2.forward.parallelogram", "group2.inverse"};
}

VerificationReport check_implication(const ProblemSchema& schema,
                                     const Interpretation& interp,
                                     const std::string& sampler_id, std::uint64_t n,
                                     std::uint64_t seed, std::uint64_t counterexample_cap) {
    return run_check(schema, interp, sampler_id, n, seed, counterexample_cap, true);
}

VerificationReport check_implication_serial(const ProblemSchema& schema,
                                            const Interpretation& interp,
                                            const std::string& sampler_id, std::uint64_t n,
                                            std::uint64_t seed,
                                            std::uint64_t counterexample_cap) {
    return run_check(schema, interp, sampler_id, n, seed, counterexample_cap, false);
}

std::optional<Config> search_joint_model(const std::string& p_id, const std::string& q_id,
                                         Group group, std::uint64_t n, std::uint64_t seed) {
    if (group == Group::I && (!is_group1_predicate(p_id) || !is_group1_predicate(q_id)))
        throw VerifyError("predicates must both belong to group I");
    if (group == Group::II && (!is_group2_predicate(p_id) || !is_group2_predicate(q_id)))
        throw VerifyError("predicates must both belong to group II");

    for (std::uint64_t i = 0; i < n; ++i) {
        Rng rng = rng_for_sample(seed, i);
        Config config =
            group == Group::I
                ? (i % 3 == 0   ? Config(sample_group1_forward(Group1ForwardBranch::Median, rng))
                   : i % 3 == 1 ? Config(sample_group1_forward(Group1ForwardBranch::Parallel, rng))
                                : Config(sample_group1_uniform(rng)))
                : (i % 3 == 0   ? Config(sample_group2_forward(Group2ForwardBranch::Trapezium, rng))
                   : i % 3 == 1 ? Config(sample_group2_forward(Group2ForwardBranch::Parallelogram, rng))
                                : Config(sample_group2_uniform(rng)));
        bool t_holds = group == Group::I
                           ? group1_invariants_hold(std::get<GroupIConfig>(config))
                           : group2_invariants_hold(std::get<GroupIIConfig>(config));
        if (t_holds && eval_predicate(p_id, config) && eval_predicate(q_id, config))
            return config;
    }
    return std::nullopt;
}

}  // namespace invprob
