// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Usage: acceptance [--only K] [--quick]

#include <chrono>
#include <cstring>
#include <iostream>

#include "paramod/suites.hpp"

using namespace paramod;

namespace {

struct Criterion {
    int id;
    const char* description;
    const char* suite;
    // keep a case when its name starts with one of these prefixes (empty = all)
    std::vector<std::string> include;
};

const std::vector<Criterion> CRITERIA = {
    {1, "character-sum lemma: closed form vs brute force, N <= 24", "achisum", {}},
    {2, "Gauss-sum identities and twist kernel, primitive chi, N <= 50", "chars", {}},
    {3, "group algebra: similitudes, H_p(N), row types, extended character", "group",
     {"generator_similitude", "p_dt_jt_erratum", "Hp_", "words_", "extended_char_"}},
    {4, "coset representative systems: membership, inequivalence, index report", "group", {"coset_"}},
    {5, "Epstein engine: four-squares oracle, continued vs direct, residue", "epstein", {}},
    {6, "representation coherence of the completed Eisenstein series", "eisenstein",
     {"lattice_vs_", "second_vs_third"}},
    {7, "residue 2 kappa phi(N)/N and holomorphy for nontrivial chi", "eisenstein",
     {"residue_", "vanishing_sum"}},
    {8, "Eisenstein functional equation (proposition and corollary)", "fe", {}},
    {9, "smart-sum identity and exact Moebius telescoping", "smartsum", {}},
    {10, "difference series: lattice vs defining, q | N, translation, modularity", "diff", {}},
    {11, "functional-equation prefactor algebra and coefficient interface", "series", {}},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    SuiteConfig cfg;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--quick"))
            cfg.quick = true;
    }
    bool all_ok = true;
    for (const auto& crit : CRITERIA) {
        if (only && crit.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep;
        try {
            rep = run_suite(crit.suite, cfg);
        } catch (const std::exception& e) {
            std::cout << "[FAIL] criterion " << crit.id << ": " << crit.description << " -- exception: "
                      << e.what() << "\n";
            all_ok = false;
            continue;
        }
        int total = 0, passed = 0;
        for (const auto& c : rep.cases) {
            bool keep = crit.include.empty();
            for (const auto& pre : crit.include)
                if (c.name.rfind(pre, 0) == 0) keep = true;
            if (!keep) continue;
            ++total;
            if (c.pass) ++passed;
            if (!c.pass)
                std::cout << "       failing case: " << c.name << " (" << c.params
                          << ") rel_err=" << c.rel_err << " tol=" << c.tolerance << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = (passed == total) && total > 0;
        all_ok = all_ok && ok;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": " << crit.description
                  << " (" << passed << "/" << total << " cases, " << secs << " s)\n";
        for (const auto& [k, v] : rep.notes) std::cout << "       note " << k << ": " << v << "\n";
        std::cout.flush();
    }
    return all_ok ? 0 : 1;
}
