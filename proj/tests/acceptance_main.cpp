// Acceptance suite: every closed-form result is checked against independent
// enumeration. One PASS/FAIL line per criterion; exit status 0 only when all
// criteria hold.

#include <cstdio>
#include <cstring>

#include <grcodes/verify.hpp>

using namespace grcodes;

int main(int argc, char** argv) {
    unsigned threads = 1;
    for (int i = 1; i < argc; ++i)
        if (std::strncmp(argv[i], "--threads=", 10) == 0)
            threads = static_cast<unsigned>(std::atoi(argv[i] + 10));

    EnumerationBudget budget;
    budget.max_codewords = u64(1) << 24;
    const u64 seed = 20240915;

    std::vector<verify::CheckResult> results = verify::run_all(budget, seed, threads);
    bool all_pass = true;
    int idx = 0;
    for (const verify::CheckResult& r : results) {
        ++idx;
        std::printf("%s  criterion %2d: %-55s  %6llu checks, %llu mismatches, %8.1f ms%s%s\n",
                    r.pass ? "PASS" : "FAIL", idx, r.name.c_str(),
                    static_cast<unsigned long long>(r.checked),
                    static_cast<unsigned long long>(r.mismatches), r.millis,
                    r.note.empty() ? "" : "  | ", r.note.c_str());
        if (!r.pass) all_pass = false;
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
