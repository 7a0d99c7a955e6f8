#include "report.hpp"

#include "goalclust/stats.hpp"

namespace gcl {

using goalclust::Index;

namespace {

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

} // namespace

SolveReport make_report(const goalclust::Dataset& ds, const goalclust::GcConfig& cfg,
                        const goalclust::SolveResult& result, std::string input) {
    const auto summary = goalclust::evaluate(ds, result.partition);
    SolveReport r;
    r.algorithm = goalclust::to_string(cfg.algorithm);
    r.input = std::move(input);
    r.n = ds.n();
    r.m = ds.m();
    r.r2t = cfg.r2t;
    r.k = result.partition.num_groups();
    r.r2 = summary.r2;
    r.r2_per_attribute = to_vector(summary.r2_per_attribute);
    r.elapsed_seconds = result.elapsed_seconds;
    r.converged = result.converged;
    if (result.trace) r.termination = goalclust::to_string(result.trace->termination);
    r.assignment = result.partition.assignment();
    r.seed = cfg.seed;
    r.standardization.applied = ds.standardized();
    if (ds.standardized()) {
        r.standardization.means = to_vector(ds.column_means());
        r.standardization.sds = to_vector(ds.column_sds());
        r.standardization.degenerate_columns = ds.degenerate_columns();
    }
    r.trace = result.trace;
    return r;
}

nlohmann::json to_json(const SolveReport& r) {
    nlohmann::json j;
    j["algorithm"] = r.algorithm;
    j["input"] = r.input;
    j["n"] = r.n;
    j["m"] = r.m;
    j["r2t"] = r.r2t;
    j["k"] = r.k;
    j["r2"] = r.r2;
    j["r2_per_attribute"] = r.r2_per_attribute;
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["converged"] = r.converged;
    j["termination"] = r.termination ? nlohmann::json(*r.termination) : nlohmann::json(nullptr);
    j["assignment"] = r.assignment;
    j["seed"] = r.seed;
    j["standardization"] = {
        {"applied", r.standardization.applied},
        {"denominator", r.standardization.denominator},
        {"means", r.standardization.means},
        {"sds", r.standardization.sds},
        {"degenerate_columns", r.standardization.degenerate_columns},
    };
    if (r.trace) {
        nlohmann::json history = nlohmann::json::array();
        for (const auto& h : r.trace->best_history) {
            history.push_back({{"elapsed_seconds", h.elapsed_seconds}, {"k", h.k}, {"r2", h.r2}});
        }
        j["trace"] = {
            {"iterations", r.trace->iterations},
            {"improvements", r.trace->improvements},
            {"effective_r_max", r.trace->effective_r_max},
            {"starter_k", r.trace->starter_k},
            {"starter_r2", r.trace->starter_r2},
            {"best_history", history},
        };
    } else {
        j["trace"] = nullptr;
    }
    return j;
}

SolveReport report_from_json(const nlohmann::json& j) {
    SolveReport r;
    j.at("algorithm").get_to(r.algorithm);
    j.at("input").get_to(r.input);
    j.at("n").get_to(r.n);
    j.at("m").get_to(r.m);
    j.at("r2t").get_to(r.r2t);
    j.at("k").get_to(r.k);
    j.at("r2").get_to(r.r2);
    j.at("r2_per_attribute").get_to(r.r2_per_attribute);
    j.at("elapsed_seconds").get_to(r.elapsed_seconds);
    j.at("converged").get_to(r.converged);
    if (!j.at("termination").is_null()) r.termination = j.at("termination").get<std::string>();
    j.at("assignment").get_to(r.assignment);
    j.at("seed").get_to(r.seed);
    const auto& s = j.at("standardization");
    s.at("applied").get_to(r.standardization.applied);
    s.at("denominator").get_to(r.standardization.denominator);
    s.at("means").get_to(r.standardization.means);
    s.at("sds").get_to(r.standardization.sds);
    s.at("degenerate_columns").get_to(r.standardization.degenerate_columns);
    if (const auto& t = j.at("trace"); !t.is_null()) {
        goalclust::VnsTrace trace;
        t.at("iterations").get_to(trace.iterations);
        t.at("improvements").get_to(trace.improvements);
        t.at("effective_r_max").get_to(trace.effective_r_max);
        t.at("starter_k").get_to(trace.starter_k);
        t.at("starter_r2").get_to(trace.starter_r2);
        for (const auto& h : t.at("best_history")) {
            trace.best_history.push_back({h.at("elapsed_seconds").get<double>(), h.at("k").get<Index>(), h.at("r2").get<double>()});
        }
        r.trace = std::move(trace);
    }
    return r;
}

} // namespace gcl
