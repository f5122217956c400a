#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace picard {

struct SuiteCheck {
    std::string id;     // stable identifier
    std::string anchor; // the mathematical statement being checked
    bool pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long trials = 0;
    std::vector<SuiteCheck> checks;

    bool overall() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void sort_canonical() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const SuiteCheck& a, const SuiteCheck& b) { return a.id < b.id; });
    }
};

struct SuiteParams {
    long p = 3;
    long d = -1;
    long N = 4;
    std::uint64_t seed = 0;
    long trials = 0; // 0: per-check defaults
    long trunc = 64;

    long count(long dflt) const { return trials > 0 ? trials : dflt; }
};

SuiteReport run_qfield_suite(const SuiteParams& params);
SuiteReport run_unitary_suite(const SuiteParams& params);
SuiteReport run_frame_suite(const SuiteParams& params);
SuiteReport run_dieudonne_suite(const SuiteParams& params);
SuiteReport run_deform_suite(const SuiteParams& params);
SuiteReport run_fj_suite(const SuiteParams& params);
std::vector<SuiteReport> run_all_suites(const SuiteParams& params);

/// Deterministic helpers shared by the randomized sweeps.
class SweepRng {
public:
    explicit SweepRng(std::uint64_t seed) : eng_(seed) {}
    /// Uniform-ish integer in [lo, hi] (exact determinism across platforms).
    long next(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace picard
