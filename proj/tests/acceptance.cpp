// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "horn/domino.hpp"
#include "horn/duplication.hpp"
#include "horn/lr_rule.hpp"
#include "horn/spectral.hpp"
#include "horn/sweep.hpp"

using namespace horn;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int n, const char* title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s: %s (%s; %.2fs)\n", n, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

SweepConfig bounds(int p, int max_part) {
    SweepConfig c;
    c.p = p;
    c.max_part = max_part;
    return c;
}

Outcome from_report(const Report& r) {
    return {r.passed(), std::to_string(r.records.size()) + " records, " + std::to_string(r.failures()) +
                            " counterexamples" + (r.complete ? "" : ", incomplete")};
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

}  // namespace

int main() {
    criterion(1, "domino count equals LR coefficient, length <= 3, parts <= 4",
              [] { return from_report(sweep_cl_vs_lr(bounds(3, 4))); });

    criterion(2, "Yamanouchi tableaux of shape (10,6,4,0) with two-part weights", [] {
        std::map<std::vector<int>, std::set<std::string>> found;
        for (const auto& nu : partitions_of(10, 2, 10))
            for (const auto& t : enumerate_domino_tableaux(Partition{10, 6, 4, 0}, nu, {.yamanouchi_only = true}))
                found[t.weight()].insert(to_string(reading_word(t)));
        const std::map<std::vector<int>, std::set<std::string>> want{
            {{5, 5}, {"1112212212"}}, {{6, 4}, {"1112212112"}}, {{7, 3}, {"1112112112"}}, {{8, 2}, {"1111112112"}}};
        std::string words;
        for (const auto& [w, ws] : found)
            for (const auto& s : ws) words += (words.empty() ? "" : " ") + s;
        return Outcome{found == want, std::to_string(found.size()) + " weights, words " + words};
    });

    criterion(3, "c^nu_{sigma- sigma+} <= c^{nu(2)}_{sigma sigma} through checked duplication, 2p = 4, sigma_1 <= 6",
              [] { return from_report(sweep_prop2(bounds(2, 6))); });

    criterion(4, "strict inequality at sigma = (7,6,4,3), nu = (10,8,2)", [] {
        const Partition sigma{7, 6, 4, 3}, nu{10, 8, 2};
        const auto [minus, plus] = sigma_split(sigma);
        const auto lhs =
            enumerate_domino_tableaux(tau_partitions(plus, minus), nu, {.yamanouchi_only = true}).size();
        const auto rhs =
            enumerate_domino_tableaux(tau_partitions(sigma, sigma), doubled(nu), {.yamanouchi_only = true}).size();
        const auto check = check_prop2(sigma, nu);
        return Outcome{lhs < rhs && check.passed() && lhs == lr_coefficient(minus, plus, nu) &&
                           rhs == lr_coefficient(sigma, sigma, doubled(nu)),
                       std::to_string(lhs) + " < " + std::to_string(rhs)};
    });

    criterion(5, "P1 = P2 for 2p = 4, sigma_1 <= 5, and sigma = (7,6,4,3)", [] {
        Report r = sweep_p1_equals_p2(bounds(2, 5));
        r.append(verify_p1_equals_p2(Partition{7, 6, 4, 3}));
        return from_report(r);
    });

    criterion(6, "nonvanishing implication, 2p = 4, sigma_1 <= 5",
              [] { return from_report(sweep_implication(bounds(2, 5))); });

    criterion(7, "FFLP inequality, length <= 2, parts <= 3", [] { return from_report(sweep_fflp(bounds(2, 3))); });

    criterion(8, "LPP inequality over all splits, 2p = 4, sigma_1 <= 5",
              [] { return from_report(sweep_lpp(bounds(2, 5))); });

    criterion(9, "projections of P lie in hull(P1), exact, 2p = 4, sigma_1 <= 5",
              [] { return from_report(sweep_projection(bounds(2, 5))); });

    criterion(10, "spectral pairing, trace, hull(P1) and block identity for sigma = (5,3,2,0)", [] {
        const std::vector<double> sigma{5, 3, 2, 0};
        const double scale = spectral_scale(sigma);
        const std::size_t n = 10000;
        const std::uint64_t seed = 20240611;
        const auto random = summarize(sigma, monte_carlo_q(sigma, n, seed, SamplingMode::random), SamplingMode::random);
        const auto block = summarize(sigma, monte_carlo_q(sigma, n, seed, SamplingMode::block), SamplingMode::block);
        const bool pass = random.max_pairing_defect < 1e-8 * scale && random.max_trace_error < 1e-9 * scale &&
                          random.hull_checked && random.inside_hull == n && block.max_block_discrepancy < 1e-9 &&
                          block.max_pairing_defect < 1e-8 * scale && block.inside_hull == n;
        return Outcome{pass, "pairing " + fmt(random.max_pairing_defect) + ", trace " +
                                 fmt(random.max_trace_error) + ", hull " + std::to_string(random.inside_hull) + "/" +
                                 std::to_string(n) + ", block " + fmt(block.max_block_discrepancy)};
    });

    criterion(11, "Jacobi eigensolver recovers 1000 planted spectra, n <= 8", [] {
        Rng rng(99);
        double worst = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 1 + trial % 8;
            std::vector<double> d(n);
            for (auto& x : d) x = 20.0 * rng.uniform() - 10.0;
            const auto q = random_rotation(n, rng).matrix();
            const auto e = jacobi_eigenvalues(q.transposed() * Matrix::diagonal(d) * q);
            std::sort(d.begin(), d.end(), std::greater<>());
            double scale = 1;
            for (double x : d) scale = std::max(scale, std::abs(x));
            for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(e.values[i] - d[i]) / scale);
        }
        return Outcome{worst < 1e-10, "max relative error " + fmt(worst)};
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
