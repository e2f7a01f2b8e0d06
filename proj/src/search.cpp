#include "gonil/search.hpp"

#include <filesystem>
#include <fstream>
#include <thread>

#include "gonil/theorems.hpp"

namespace gonil {

const char* to_string(ScanOutcome o) {
    switch (o) {
        case ScanOutcome::Evaluated: return "EVALUATED";
        case ScanOutcome::Rejected: return "REJECTED";
        case ScanOutcome::ScanError: return "SCAN_ERROR";
    }
    return "?";
}

namespace {

bool go_passed(const GoVerdict& v) { return v.status != GoStatus::Counterexample; }

void evaluate_instance(ScanResult& res, const ReductiveSpace& space, const ScanParams& params) {
    const LieAlgebra n = subalgebra(space.algebra(), space.m_span());
    const SeriesReport series = lower_central_series(n);
    res.nilpotency_class = series.step;
    const Basis derived = derived_subalgebra(n);
    res.derived_nondegenerate = derived.empty() || is_nondegenerate(restrict(space.metric(), derived));

    const bool run_go = params.all_classes || (series.step == 4 && res.derived_nondegenerate);
    if (!run_go) return;
    GoParams gp;
    gp.n_samples = params.n_samples;
    gp.seed = params.seed;
    gp.stream = res.spec.index;
    res.verdict = go_certify(space, gp);
    if (!go_passed(*res.verdict)) return;

    bool fail = false;
    try {
        if (res.derived_nondegenerate) {
            const Thm41Report rep = verify_thm41(space);
            res.recheck = to_string(rep.verdict());
            fail = rep.verdict() == TheoremVerdict::Fail;
            for (const auto& v : rep.violations) res.notes.push_back("thm41 " + v.check + ": " + v.detail);
        } else {
            const Thm42Report rep = verify_thm42(space);
            res.recheck = to_string(rep.verdict());
            fail = rep.verdict() == TheoremVerdict::Fail;
            for (const auto& v : rep.violations) res.notes.push_back("thm42 " + v.check + ": " + v.detail);
        }
    } catch (const HypothesisError& e) {
        res.recheck = "HYPOTHESIS_FAILED";
        res.notes.push_back(e.what());
    }
    if (fail) {
        res.flag = "THEOREM_CONTRADICTION";
        if (res.verdict->status == GoStatus::SampledPass && res.verdict->n_samples < 1000)
            res.notes.push_back("sampled with " + std::to_string(res.verdict->n_samples) +
                                " directions; rerun with at least 1000 to rule out a sampling artifact");
    } else if (series.step == 4) {
        res.flag = "HIT";
    }
}

}  // namespace

ScanResult evaluate_spec(const CandidateSpec& spec, const ScanParams& params) {
    ScanResult res;
    res.spec = spec;
    try {
        Instantiation inst = instantiate(spec);
        if (auto* rej = std::get_if<Rejection>(&inst)) {
            res.outcome = ScanOutcome::Rejected;
            res.rejection = std::move(*rej);
            return res;
        }
        const Instance& in = std::get<Instance>(inst);
        res.h_dim = in.h_dim;
        evaluate_instance(res, in.space, params);
    } catch (const std::exception& e) {
        ScanResult err;
        err.spec = spec;
        err.outcome = ScanOutcome::ScanError;
        err.notes.push_back(e.what());
        return err;
    }
    return res;
}

namespace {

template <class Get>
std::vector<ScanResult> parallel_map(std::uint64_t count, const ScanParams& params, Get get) {
    std::vector<ScanResult> out(count);
    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(params.jobs, count));
    if (jobs == 1) {
        for (std::uint64_t i = 0; i < count; ++i) out[i] = evaluate_spec(get(i), params);
        return out;
    }
    std::vector<std::thread> workers;
    const std::uint64_t block = (count + jobs - 1) / jobs;
    for (std::size_t w = 0; w < jobs; ++w) {
        const std::uint64_t lo = w * block, hi = std::min(count, lo + block);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) {
                CandidateSpec s;
                try {
                    s = get(i);
                } catch (const std::exception& e) {
                    out[i].outcome = ScanOutcome::ScanError;
                    out[i].notes.push_back(e.what());
                    continue;
                }
                out[i] = evaluate_spec(s, params);
            }
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

}  // namespace

std::vector<ScanResult> scan(const std::vector<CandidateSpec>& specs, const ScanParams& params) {
    return parallel_map(specs.size(), params, [&](std::uint64_t i) { return specs[i]; });
}

std::vector<ScanResult> scan(const CandidateGrid& grid, std::uint64_t begin, std::uint64_t end,
                             const ScanParams& params) {
    if (end < begin) end = begin;
    return parallel_map(end - begin, params, [&](std::uint64_t i) { return grid.at(begin + i); });
}

Json to_json(const ScanResult& r) {
    Json j{{"index", r.spec.index}, {"spec", to_json(r.spec)}, {"outcome", to_string(r.outcome)}};
    if (r.rejection) j["rejection"] = to_json(*r.rejection);
    if (r.outcome == ScanOutcome::Evaluated) {
        j["class"] = r.nilpotency_class ? Json(*r.nilpotency_class) : Json(nullptr);
        j["derived_nondegenerate"] = r.derived_nondegenerate;
        j["h_dim"] = r.h_dim;
        j["verdict"] = r.verdict ? to_json(*r.verdict) : Json(nullptr);
        if (r.recheck) j["recheck"] = *r.recheck;
        if (!r.flag.empty()) j["flag"] = r.flag;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

void ScanSummary::add(const Json& r) {
    ++total_;
    const std::uint64_t idx = r.at("index").get<std::uint64_t>();
    const std::string outcome = r.at("outcome").get<std::string>();
    if (outcome == "REJECTED") {
        ++rejected_[r.at("rejection").at("reason").get<std::string>()];
        return;
    }
    if (outcome == "SCAN_ERROR") {
        errors_.push_back(idx);
        return;
    }
    const std::string cls = r.at("class").is_null() ? "none" : std::to_string(r.at("class").get<std::size_t>());
    const std::string verdict = r.at("verdict").is_null() ? "NOT_RUN" : r.at("verdict").at("status").get<std::string>();
    ++by_class_verdict_["class " + cls + " / " + verdict];
    if (r.contains("flag")) {
        if (r.at("flag") == "HIT") hits_.push_back(idx);
        if (r.at("flag") == "THEOREM_CONTRADICTION") contradictions_.push_back(idx);
    }
}

Json ScanSummary::to_json() const {
    Json rej = Json::object();
    for (const auto& [k, v] : rejected_) rej[k] = v;
    Json cv = Json::object();
    for (const auto& [k, v] : by_class_verdict_) cv[k] = v;
    return {{"total", total_},      {"rejected", rej},
            {"by_class_verdict", cv}, {"hits", hits_},
            {"theorem_contradictions", contradictions_}, {"scan_errors", errors_}};
}

namespace {

Json job_config(const ScanJob& job, std::uint64_t total) {
    Json grid = Json::array();
    for (const auto& g : job.grid) grid.push_back(g.str());
    return {{"family", to_string(job.family)},
            {"dims", {job.dim_lo, job.dim_hi}},
            {"grid", grid},
            {"h_strategy", to_string(job.h_strategy)},
            {"samples", job.params.n_samples},
            {"seed", job.params.seed},
            {"all_classes", job.params.all_classes},
            {"total", total}};
}

void write_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write '" + tmp + "'");
        f << text;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

ScanSummary run_scan(const ScanJob& job) {
    if (job.out_path.empty()) throw InputError("search: --out is required");
    const CandidateGrid grid(job.family, job.dim_lo, job.dim_hi, job.grid, job.h_strategy);
    const Json config = job_config(job, grid.size());
    const std::string ckpt_path = job.out_path + ".checkpoint.json";
    const std::string summary_path = job.out_path + ".summary.json";

    ScanSummary summary;
    std::uint64_t next = 0;
    if (job.resume && std::filesystem::exists(ckpt_path)) {
        const Json ck = Json::parse(read_file(ckpt_path));
        if (ck.at("config") != config)
            throw InputError("search --resume: checkpoint was written by a different configuration");
        next = ck.at("next_index").get<std::uint64_t>();
        // Keep exactly the checkpointed lines; anything after was not committed.
        std::string kept;
        std::ifstream in(job.out_path, std::ios::binary);
        std::string line;
        for (std::uint64_t i = 0; i < next; ++i) {
            if (!std::getline(in, line)) throw InputError("search --resume: results file shorter than checkpoint");
            summary.add(Json::parse(line));
            kept += line + "\n";
        }
        in.close();
        write_atomic(job.out_path, kept);
    } else {
        write_atomic(job.out_path, "");
    }

    std::ofstream out(job.out_path, std::ios::binary | std::ios::app);
    if (!out) throw InputError("cannot write '" + job.out_path + "'");
    const std::size_t chunk = std::max<std::size_t>(1, job.chunk);
    while (next < grid.size()) {
        const std::uint64_t end = std::min<std::uint64_t>(grid.size(), next + chunk);
        for (const auto& r : scan(grid, next, end, job.params)) {
            const Json j = to_json(r);
            summary.add(j);
            out << j.dump() << '\n';
        }
        out.flush();
        next = end;
        write_atomic(ckpt_path, Json{{"config", config}, {"next_index", next}}.dump(2) + "\n");
    }
    write_atomic(ckpt_path, Json{{"config", config}, {"next_index", next}}.dump(2) + "\n");
    write_atomic(summary_path, Json{{"config", config}, {"summary", summary.to_json()}}.dump(2) + "\n");
    return summary;
}

}  // namespace gonil
