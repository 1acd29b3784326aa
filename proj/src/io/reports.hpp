#ifndef ORIFOLD_IO_REPORTS_HPP
#define ORIFOLD_IO_REPORTS_HPP

#include "io/docio.hpp"

namespace orifold {

// Run configuration shared by all commands; echoed verbatim into every report
// so a run is reproducible from its output.
struct RunConfig {
    int order = 8;       // t-truncation for generated inputs
    int u_order = 2;     // frame order
    int z_order = 6;
    std::string mode = "exact";
    long bits = 128;
    double tol = 1e-12;
    std::vector<int> perm;  // 1-based ordering of canonical branches
    ExactAngle tau{Rat(0), Rat(0)};
    int workers = 1;
    int orbit = 0;  // braid orbit enumeration depth (0 = off)

    json to_json() const;
};

json run_verify(const RunConfig& cfg, const json& structure_doc);
json run_analyze(const RunConfig& cfg, const json& structure_doc);
json run_validate(const RunConfig& cfg, const json& datum_doc);
json run_braid(const RunConfig& cfg, const json& datum_doc, const std::string& word);
json run_cohft(const RunConfig& cfg, const json& structure_doc, int tails, int max_edges);

// 0 pass, 1 fail-with-report; parse/usage errors surface as exceptions (2).
int report_exit_code(const json& report);

}  // namespace orifold

#endif
