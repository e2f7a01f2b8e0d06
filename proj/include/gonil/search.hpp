#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gonil/families.hpp"
#include "gonil/geodesic.hpp"
#include "gonil/io.hpp"

namespace gonil {

struct ScanParams {
    std::size_t n_samples = 200;
    std::uint64_t seed = 0;
    /// Run go_certify on every class, not only class 4.
    bool all_classes = false;
    std::size_t jobs = 1;
};

enum class ScanOutcome { Evaluated, Rejected, ScanError };
const char* to_string(ScanOutcome o);

struct ScanResult {
    CandidateSpec spec;
    ScanOutcome outcome = ScanOutcome::Evaluated;
    std::optional<Rejection> rejection;
    std::optional<std::size_t> nilpotency_class;
    bool derived_nondegenerate = false;
    std::size_t h_dim = 0;
    std::optional<GoVerdict> verdict;
    /// "HIT", "THEOREM_CONTRADICTION" or empty.
    std::string flag;
    /// verify_thm41 / verify_thm42 verdict on evaluated GO passes.
    std::optional<std::string> recheck;
    std::vector<std::string> notes;
};

/// One spec, start to finish. Exceptions are caught and become ScanError.
ScanResult evaluate_spec(const CandidateSpec& spec, const ScanParams& params);

/// Evaluates specs in order; output order is the input order for any `jobs`.
std::vector<ScanResult> scan(const std::vector<CandidateSpec>& specs, const ScanParams& params);
/// Same over the index range [begin, end) of a grid.
std::vector<ScanResult> scan(const CandidateGrid& grid, std::uint64_t begin, std::uint64_t end,
                             const ScanParams& params);

Json to_json(const ScanResult& r);

/// Counts folded from serialized results, so a resumed run summarizes the
/// same way as an uninterrupted one.
class ScanSummary {
   public:
    void add(const Json& result);
    [[nodiscard]] Json to_json() const;
    [[nodiscard]] std::uint64_t contradictions() const noexcept { return contradictions_.size(); }
    [[nodiscard]] std::uint64_t hits() const noexcept { return hits_.size(); }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }

   private:
    std::uint64_t total_ = 0;
    std::map<std::string, std::uint64_t> rejected_;
    std::map<std::string, std::uint64_t> by_class_verdict_;
    std::vector<std::uint64_t> hits_, contradictions_, errors_;
};

struct ScanJob {
    Family family = Family::Filiform;
    std::size_t dim_lo = 4, dim_hi = 5;
    std::vector<Rational> grid{-2, -1, 0, 1, 2};
    HStrategy h_strategy = HStrategy::SkewDerivations;
    ScanParams params;
    std::string out_path;
    bool resume = false;
    std::size_t chunk = 512;
};

/// Streams results to out_path (JSONL), keeps out_path.checkpoint.json up to date
/// after every chunk and writes out_path.summary.json at the end. With resume,
/// continues after the last checkpointed index; the job configuration must match.
ScanSummary run_scan(const ScanJob& job);

}  // namespace gonil
