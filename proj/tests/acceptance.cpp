// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "foldatlas/families.hpp"
#include "foldatlas/harness.hpp"
#include "foldatlas/invariants.hpp"
#include "foldatlas/rewrites.hpp"
#include "foldatlas/witness.hpp"

using namespace foldatlas;

namespace {

struct Criterion {
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

bool table_rows_match(const CurveWord& word, std::string& detail) {
    const PlanarCurve curve = realize(word);
    const InvariantRecord rec = invariants(curve);
    const ComponentTally& t = rec.per_component.at(0);
    const int ip = t.inner_outer == PointClass::Outer ? 1 : 0;
    const TableRow got{t.w, ip, 1 - ip, t.n_minus, t.n_plus};
    const TableRow want = predicted_invariants(word);
    if (got == want) return true;
    detail += " " + to_string(word) + ": got (w=" + std::to_string(got.w) +
              ",i+=" + std::to_string(got.i_plus) + ",i-=" + std::to_string(got.i_minus) +
              ",n-=" + std::to_string(got.n_minus) + ",n+=" + std::to_string(got.n_plus) + ")";
    return false;
}

bool criterion_table1(std::string& detail) {
    bool ok = true;
    for (const Family fam : {Family::A, Family::B, Family::C}) {
        for (const bool positive : {false, true}) {
            const int kmin = fam == Family::C ? 0 : 1;
            for (int k = kmin; k <= 8; ++k) ok = table_rows_match({fam, k, positive}, detail) && ok;
        }
    }
    return ok;
}

bool criterion_single_boundary(std::string& detail) {
    bool ok = true;
    for (int g = 1; g <= 8; ++g) {
        if (crossing_total(sharp_boundary(g, 1)) != 2 * g + 2) {
            detail += " crossing_total(g=" + std::to_string(g) + ") != 2g+2";
            ok = false;
        }
        const auto rec = invariants(realize(word_b(2 * g + 1, true)));
        if (rec.per_component[0].n_plus != 2 * g + 1 || rec.per_component[0].n_minus != 1) {
            detail += " B+" + std::to_string(2 * g + 1) + ",1 has (" +
                      std::to_string(rec.per_component[0].n_plus) + "+," +
                      std::to_string(rec.per_component[0].n_minus) + "-)";
            ok = false;
        }
    }
    return ok;
}

bool criterion_extended_bound(std::string& detail) {
    bool ok = true;
    for (int g = 1; g <= 8; ++g) {
        for (int k = 1; k <= 8; ++k) {
            const int chi = 2 - 2 * g - k;
            const int bound = boundary_bound(g, k);
            if (bound != 4 - k - chi || bound != 2 * g + 2) {
                detail += " bound(" + std::to_string(g) + "," + std::to_string(k) + ") wrong";
                ok = false;
            }
            if (crossing_total(sharp_boundary(g, k)) != bound) {
                detail += " sharp(" + std::to_string(g) + "," + std::to_string(k) + ") misses bound";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion_worked_example(std::string& detail) {
    const auto cert = build_witness({14, 9, 5, 3});
    bool ok = true;
    if (cert.delta_sigma != 24) {
        detail += " delta=" + std::to_string(cert.delta_sigma);
        ok = false;
    }
    std::map<CurveWord, int> counts;
    for (const auto& w : cert.assignment) counts[w]++;
    if (counts[word_b(7, true)] != 1 || counts[word_b(3, true)] != 4 ||
        counts[word_c(0, true)] != 4 || cert.assignment.size() != 9) {
        detail += " word multiset mismatch";
        ok = false;
    }
    const auto sum = summarize(cert.splitting);
    if (sum.rho != 7 || sum.chi_plus != -13 || sum.chi_minus != -13) {
        detail += " rho/chi mismatch";
        ok = false;
    }
    if (cert.bound.tree_form != 2 * (7 + 1 + 2) - (-13 + 9)) {
        detail += " tree form != 24";
        ok = false;
    }
    if (!verify_certificate(cert).all()) {
        detail += " verification failed";
        ok = false;
    }
    return ok;
}

bool criterion_sweep(std::string& detail) {
    const auto rep = run_sweep(12);
    if (!rep.failures.empty()) {
        detail += " " + std::to_string(rep.failures.size()) + " failures, first: (g=" +
                  std::to_string(rep.failures[0].combo.g) + ") " + rep.failures[0].what;
        return false;
    }
    detail += " " + std::to_string(rep.combos.size()) + " combos";
    return true;
}

bool criterion_fuzz(std::string& detail) {
    const char* env = std::getenv("FOLDATLAS_SEED");
    const std::uint64_t seed = env ? std::strtoull(env, nullptr, 10) : 20240901ull;
    const auto rep = run_whitney_fuzz(1000, seed);
    detail += " seed=" + std::to_string(seed) + " performed=" + std::to_string(rep.performed) +
              " skipped=" + std::to_string(rep.skipped);
    if (!rep.clean()) {
        detail += " whitney=" + std::to_string(rep.whitney_mismatches) +
                  " oracle=" + std::to_string(rep.oracle_mismatches) +
                  " lemma=" + std::to_string(rep.lemma_violations);
        return false;
    }
    return true;
}

bool criterion_parity(std::string& detail) {
    bool ok = true;
    for (int g = 1; g <= 8; ++g) {
        for (int k = 1; k <= 8; ++k) {
            const auto curve = realize_all(sharp_boundary(g, k));
            const auto rec = invariants(curve);
            const bool parity_ok = rec.N_plus >= rec.N_minus &&
                                   (rec.N_plus - rec.N_minus) % 2 == 0 &&
                                   rec.N_plus - rec.N_minus == 2 * g + 2 * rec.I_plus - 2;
            if (!parity_ok) {
                detail += " (g=" + std::to_string(g) + ",k=" + std::to_string(k) + ") N+=" +
                          std::to_string(rec.N_plus) + " N-=" + std::to_string(rec.N_minus) +
                          " I+=" + std::to_string(rec.I_plus);
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion_rewrites(std::string& detail) {
    bool ok = true;
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 20);
        std::vector<int> parts;
        int left = k;
        while (left > 0) {
            const int part = 1 + static_cast<int>(rng() % left);
            parts.push_back(part);
            left -= part;
        }
        const auto step =
            apply_rewrite(make_multiset({word_b(k, true)}), RewriteRule::R5, word_b(k, true), parts);
        const int drop = winding_total(step.before) - winding_total(step.after);
        const int growth = static_cast<int>(step.after.words.size()) -
                           static_cast<int>(step.before.words.size());
        if (drop != growth || crossing_total(step.after) != crossing_total(step.before)) {
            detail += " R5 ledger broke at k=" + std::to_string(k);
            ok = false;
        }
    }
    for (int k = 2; k <= 20; ++k) {
        const auto s = apply_rewrite(make_multiset({word_a(k, false)}), RewriteRule::R1, word_a(k, false));
        if (winding_total(s.before) != winding_total(s.after)) {
            detail += " R1 winding broke";
            ok = false;
        }
    }
    for (int k = 0; k <= 18; ++k) {
        const auto s = apply_rewrite(make_multiset({word_c(k, true)}), RewriteRule::R2, word_c(k, true));
        if (winding_total(s.before) != winding_total(s.after)) {
            detail += " R2 winding broke";
            ok = false;
        }
    }
    for (int k = 1; k <= 19; ++k) {
        const auto s = apply_rewrite(make_multiset({word_a(k, true)}), RewriteRule::R3, word_a(k, true));
        if (winding_total(s.before) != winding_total(s.after)) {
            detail += " R3 winding broke";
            ok = false;
        }
    }
    const auto s4 = apply_rewrite(make_multiset({word_c(0, true)}), RewriteRule::R4, word_c(0, true));
    if (winding_total(s4.before) != winding_total(s4.after)) {
        detail += " R4 winding broke";
        ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"family invariant table reproduced by every realization, k <= 8", 5.0, criterion_table1},
        {"single-boundary sharpness: 2g+2 crossings with signs (2g+1, 1)", 5.0, criterion_single_boundary},
        {"extended bound 4-k-chi = 2g+2 met by sharp boundaries", 5.0, criterion_extended_bound},
        {"worked example (g=14,|S|=9,5,3): delta = 24", 1.0, criterion_worked_example},
        {"exhaustive sharpness sweep to genus 12", 30.0, criterion_sweep},
        {"whitney fuzz, 1000 randomized curves", 60.0, criterion_fuzz},
        {"parity proposition on sharp boundary realizations", 30.0, criterion_parity},
        {"rewrite bookkeeping, 100 random compositions", 5.0, criterion_rewrites},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail += std::string(" exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.time_limit_s) {
            ok = false;
            detail += " exceeded " + std::to_string(c.time_limit_s) + "s limit";
        }
        std::printf("%s criterion %zu: %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                    secs, detail.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
