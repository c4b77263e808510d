#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gk/classify.hpp"
#include "gk/graph.hpp"
#include "gk/realize.hpp"

namespace gk {

struct CheckResult {
    bool ok = true;
    std::string detail;

    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
    static CheckResult pass() { return {}; }
};

// True iff `cycle` (complement-graph vertex indices) is an odd cycle of the
// complement graph avoiding the red vertices.
bool valid_odd_cycle(const Graph& complement_graph, const std::vector<int>& red,
                     const std::vector<int>& cycle);

// Compares a rejection report against a recorded case table
// {"cases': [{"red": [...], "endpoints": [c, d] | "cycle": [...]}]}.
// Cycles match exactly up to rotation/reflection or, failing that, both
// must be valid odd cycles of the case's graph.  Endpoint cases compare the
// multiset of per-coloring forced ends.  The report may carry exactly one
// extra case: the empty red set, with a valid odd cycle.
CheckResult compare_replay_table(const Graph& complement_graph, const NpfReject& report,
                                 const nlohmann::json& expected);

enum class RoundtripStatus { Ok, Rejected, Oversize, Mismatch };

struct RoundtripOutcome {
    RoundtripStatus status = RoundtripStatus::Ok;
    std::string detail;
    std::uint64_t order = 0;
};

// realize_squarefree + element-order oracle + prime graph comparison.
RoundtripOutcome verify_squarefree_roundtrip(const Graph& f, const RealizeOptions& opts = {});

// The recorded checks for the second worked example: recovery must reject
// with MissingSubset witness 10, values {2,3,5,6,30}, one merged pair.
CheckResult check_figure2(const Graph& gamma);

struct SelftestItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<SelftestItem> run_selftest(const std::string& fixtures_dir);

}  // namespace gk
