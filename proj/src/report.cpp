#include "qdf/report.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace qdf {

namespace {

std::string field_label(const RunConfig& cfg) {
    switch (cfg.field_sel) {
        case RunConfig::FieldSel::QQ: return "QQ";
        case RunConfig::FieldSel::Fp: return "F_" + std::to_string(cfg.prime);
        case RunConfig::FieldSel::QQi: return "QQ(i)";
        case RunConfig::FieldSel::Auto: break;
    }
    return "auto";
}

const char* status_label(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "FAIL";
        case Status::Limited: return "limited";
    }
    return "?";
}

}  // namespace

Report run_claims(const std::vector<std::string>& patterns, const RunConfig& cfg) {
    const auto& reg = claim_registry();
    std::vector<const Claim*> selected;
    for (const auto& c : reg) {
        bool hit = patterns.empty();
        for (const auto& p : patterns)
            if (glob_match(p, c.id)) {
                hit = true;
                break;
            }
        if (hit) selected.push_back(&c);
    }
    if (selected.empty()) throw Error("no claim matches the given pattern");

    Report rep;
    rep.field = field_label(cfg);
    rep.order = cfg.use_lex ? "lex" : "grevlex";
    rep.budget_pairs = cfg.budgets.max_pairs;
    rep.seed = cfg.seed;
    rep.results.resize(selected.size());

    std::size_t workers = cfg.workers ? cfg.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min(workers, selected.size());

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= selected.size()) return;
            const Claim& c = *selected[k];
            ClaimResult& r = rep.results[k];
            r.id = c.id;
            r.paper_location = c.paper_location;
            r.description = c.description;
            ClaimContext ctx;
            ctx.cfg = &cfg;
            ctx.rng.seed(claim_stream_seed(cfg.seed, c.id));
            auto t0 = std::chrono::steady_clock::now();
            try {
                ClaimOutcome oc = c.body(ctx);
                r.status = oc.pass ? Status::Pass : Status::Fail;
                r.witness = oc.witness;
                r.field_used = oc.field_used;
            } catch (const ResourceLimitError& e) {
                r.status = Status::Limited;
                r.witness = e.what();
            } catch (const std::exception& e) {
                r.status = Status::Fail;
                r.witness = e.what();
            }
            auto t1 = std::chrono::steady_clock::now();
            r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i + 1 < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    // The registry is id-sorted, so the selection already is; keep the
    // invariant explicit anyway.
    std::sort(rep.results.begin(), rep.results.end(),
              [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
    for (const auto& r : rep.results) {
        if (r.status == Status::Pass) ++rep.passed;
        else if (r.status == Status::Fail) ++rep.failed;
        else ++rep.limited;
    }
    return rep;
}

std::string emit_text(const Report& r) {
    std::ostringstream os;
    os << "claim verification: field=" << r.field << " order=" << r.order
       << " budget-pairs=" << r.budget_pairs << " seed=" << r.seed << "\n";
    for (const auto& c : r.results) {
        os << "  [" << status_label(c.status) << "] " << c.id << " (" << c.paper_location
           << ", " << c.ms << " ms)";
        if (!c.field_used.empty()) os << " over " << c.field_used;
        os << "\n      " << c.description << "\n";
        if (!c.witness.empty()) os << "      -> " << c.witness << "\n";
    }
    os << r.passed << " passed, " << r.failed << " failed, " << r.limited
       << " resource-limited\n";
    return os.str();
}

std::string emit_structured(const Report& r, bool real_timings) {
    nlohmann::ordered_json j;
    j["field"] = r.field;
    j["order"] = r.order;
    j["budget_pairs"] = r.budget_pairs;
    j["seed"] = r.seed;
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : r.results) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["paper_location"] = c.paper_location;
        e["description"] = c.description;
        e["status"] = status_label(c.status);
        e["witness"] = c.witness;
        e["field_used"] = c.field_used;
        e["ms"] = real_timings ? c.ms : 0;
        j["claims"].push_back(std::move(e));
    }
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["limited"] = r.limited;
    return j.dump(2) + "\n";
}

int report_exit_code(const Report& r) {
    if (r.failed > 0) return 1;
    if (r.limited > 0) return 2;
    return 0;
}

}  // namespace qdf
