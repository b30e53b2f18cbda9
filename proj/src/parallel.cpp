#include "plateau/parallel.hpp"

namespace plateau {

namespace {
std::atomic<int> g_jobs{0};
}

int default_jobs() { return g_jobs.load(); }
void set_default_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }

int resolve_jobs(int jobs) {
    if (jobs <= 0) jobs = g_jobs.load();
    if (jobs <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        jobs = hc == 0 ? 1 : static_cast<int>(hc);
    }
    return jobs;
}

}  // namespace plateau
