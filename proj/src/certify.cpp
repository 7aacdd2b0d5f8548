#include "qolimits/certify.hpp"

#include <algorithm>

namespace qolimits {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

// Outcome of one random arc, or of one sample drawn for a component.
struct TrialOutcome {
    std::vector<std::size_t> members;
    ProjectivePoint point;
};

TrialOutcome run_curve_trial(const QOStructure& q, const LimitsDecomposition& d, std::uint64_t seed,
                             std::size_t trial) {
    TrialOutcome out;
    out.point = curve_limit(q, random_curve(q, seed, trial));
    out.members = membership(out.point, q, d);
    return out;
}

TrialOutcome run_sample_trial(const QOStructure& q, const LimitsDecomposition& d,
                              const std::map<Slot, Rational>& weights, std::uint64_t seed, std::size_t trial) {
    TrialOutcome out;
    out.point = curve_limit(q, random_scaled_curve(q, weights, seed, trial));
    out.members = membership(out.point, q, d);
    return out;
}

std::string describe(const QOStructure& q, const std::string& what, const ProjectivePoint& p) {
    return what + ": limit " + p.str(q.variables());
}

// Folds per-trial outcomes in trial order so both drivers agree bit for bit.
CertificationReport aggregate(const QOStructure& q, const LimitsDecomposition& d, const CertifyOptions& options,
                              const std::vector<TrialOutcome>& curves,
                              const std::vector<std::vector<TrialOutcome>>& samples) {
    CertificationReport r;
    r.seed = options.seed;
    r.trials = options.trials;
    r.samples = options.samples;
    r.curve_hits.assign(d.components.size(), 0);
    r.coverage.assign(d.components.size(), false);

    auto fail = [&](std::string msg) {
        ++r.membership_failures;
        if (r.failures.size() < kMaxRecordedFailures) r.failures.push_back(std::move(msg));
    };

    for (std::size_t t = 0; t < curves.size(); ++t) {
        if (curves[t].members.empty()) fail(describe(q, "arc " + std::to_string(t), curves[t].point));
        for (auto i : curves[t].members) ++r.curve_hits[i];
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t t = 0; t < samples[i].size(); ++t) {
            const auto& m = samples[i][t].members;
            if (!std::binary_search(m.begin(), m.end(), i))
                fail(describe(q, "component " + std::to_string(i) + " sample " + std::to_string(t),
                              samples[i][t].point));
            if (m.size() == 1 && m.front() == i) r.coverage[i] = true;
        }
    }
    return r;
}

std::vector<std::map<Slot, Rational>> component_weights(const QOStructure& q, const LimitsDecomposition& d) {
    std::vector<std::map<Slot, Rational>> out;
    for (const auto& comp : d.components) out.push_back(weight_construction(q, comp.j, d.case_tag).alpha);
    return out;
}

}  // namespace

bool CertificationReport::passed() const {
    return membership_failures == 0 && std::all_of(coverage.begin(), coverage.end(), [](bool c) { return c; });
}

CertificationReport certify_serial(const QOStructure& q, const LimitsDecomposition& d,
                                   const CertifyOptions& options) {
    std::vector<TrialOutcome> curves;
    for (std::size_t t = 0; t < options.trials; ++t) curves.push_back(run_curve_trial(q, d, options.seed, t));

    const auto weights = component_weights(q, d);
    std::vector<std::vector<TrialOutcome>> samples(d.components.size());
    for (std::size_t i = 0; i < d.components.size(); ++i)
        for (std::size_t t = 0; t < options.samples; ++t)
            samples[i].push_back(run_sample_trial(q, d, weights[i], options.seed, t));
    return aggregate(q, d, options, curves, samples);
}

CertificationReport certify(const QOStructure& q, const LimitsDecomposition& d, const CertifyOptions& options) {
    const long n_trials = static_cast<long>(options.trials);
    std::vector<TrialOutcome> curves(options.trials);
#pragma omp parallel for schedule(dynamic, 16)
    for (long t = 0; t < n_trials; ++t)
        curves[t] = run_curve_trial(q, d, options.seed, static_cast<std::size_t>(t));

    const auto weights = component_weights(q, d);
    const long n_comp = static_cast<long>(d.components.size());
    const long n_samples = static_cast<long>(options.samples);
    std::vector<std::vector<TrialOutcome>> samples(d.components.size(), std::vector<TrialOutcome>(options.samples));
#pragma omp parallel for collapse(2) schedule(dynamic, 8)
    for (long i = 0; i < n_comp; ++i)
        for (long t = 0; t < n_samples; ++t)
            samples[i][t] = run_sample_trial(q, d, weights[i], options.seed, static_cast<std::size_t>(t));
    return aggregate(q, d, options, curves, samples);
}

}  // namespace qolimits
