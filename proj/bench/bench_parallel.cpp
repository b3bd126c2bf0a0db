// Compares the serial reference (jobs = 1) against the work-pool (jobs = 0,
// all cores) on a compute-heavy campaign and insists the two reports are
// byte-identical. Exit 1 on any mismatch or case error.

#include "epslab/verify.hpp"

#include <chrono>
#include <cstdio>

using namespace epslab;

namespace {

double run_ms(const CampaignConfig& config, unsigned jobs, std::string* dump) {
    auto t0 = std::chrono::steady_clock::now();
    CampaignResult res = run_campaign(config, jobs, "fnv1a64:bench", false);
    auto t1 = std::chrono::steady_clock::now();
    if (res.exit_code() != 0) {
        std::fprintf(stderr, "bench: campaign did not pass (exit %d)\n", res.exit_code());
        std::exit(1);
    }
    *dump = res.report.dump();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    Json cfg = Json{
        {"case",
         Json::array({
             Json{{"kind", "nr-diagram"}, {"e", 6}, {"f", 1}, {"trials", 120}},
             Json{{"kind", "nr-diagram"},
                  {"e", 4},
                  {"f", 2},
                  {"q", 3},
                  {"trials", 60}},
             Json{{"kind", "lfun-fe"},
                  {"max_modulus", 12},
                  {"s_grid", Json::array({"0.3", "0.5", "0.5+0.5i", "1.2"})}},
             Json{{"kind", "taylor-unit"}, {"p", 13}, {"e", 4}},
             Json{{"kind", "lemma80"},
                  {"p", 5},
                  {"e", 3},
                  {"f", 2},
                  {"units", Json::array({2, 6, 4})}},
         })}};
    CampaignConfig campaign = parse_campaign(cfg);

    std::string serial_dump, pool_dump;
    double serial_ms = run_ms(campaign, 1, &serial_dump);
    double pool_ms = run_ms(campaign, 0, &pool_dump);

    std::printf("serial reference: %8.1f ms\n", serial_ms);
    std::printf("work pool:        %8.1f ms\n", pool_ms);
    std::printf("speedup:          %8.2fx\n", serial_ms / pool_ms);

    if (serial_dump != pool_dump) {
        std::fprintf(stderr, "bench: serial and pooled reports differ\n");
        return 1;
    }
    std::printf("reports byte-identical across schedules\n");
    return 0;
}
