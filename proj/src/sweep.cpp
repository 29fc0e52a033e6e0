#include "horn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>

#include <omp.h>

#include "horn/domino.hpp"
#include "horn/duplication.hpp"
#include "horn/lr_rule.hpp"

namespace horn {

Report run_indexed(std::size_t count, const std::function<Report(std::size_t)>& item, const SweepConfig& config) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const bool budgeted = config.time_budget_seconds > 0;
    auto over_budget = [&] {
        return budgeted &&
               std::chrono::duration<double>(clock::now() - start).count() > config.time_budget_seconds;
    };

    std::vector<Report> parts(count);
    std::vector<char> done(count, 0);
    // Exceptions must not cross the OpenMP region; they become failed records.
    auto guarded = [&](std::size_t i) {
        try {
            return item(i);
        } catch (const std::exception& e) {
            ReportRecord rec;
            rec.ok = false;
            rec.note = std::string("exception: ") + e.what();
            return Report{"", {std::move(rec)}, true};
        }
    };
    if (config.execution == Execution::parallel) {
        const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            if (over_budget()) continue;
            parts[i] = guarded(static_cast<std::size_t>(i));
            done[i] = 1;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            if (over_budget()) break;
            parts[i] = guarded(i);
            done[i] = 1;
        }
    }

    Report out;
    for (std::size_t i = 0; i < count; ++i) {
        if (!done[i]) {
            out.complete = false;
            continue;
        }
        out.append(std::move(parts[i]));
    }
    return out;
}

std::vector<Partition> sweep_sigmas(int p, int max_part) {
    auto sigmas = partitions_in_box(2 * p, max_part);
    std::sort(sigmas.begin(), sigmas.end());
    return sigmas;
}

namespace {

Report per_sigma(const SweepConfig& config, const std::string& suite, Report (*check)(const Partition&)) {
    const auto sigmas = sweep_sigmas(config.p, config.max_part);
    Report r = run_indexed(sigmas.size(), [&](std::size_t i) { return check(sigmas[i]); }, config);
    r.suite = suite;
    return r;
}

}  // namespace

Report check_prop2(const Partition& sigma, const Partition& nu) {
    const auto [minus, plus] = sigma_split(sigma);
    const Partition small_shape = tau_partitions(plus, minus);
    const Partition big_shape = tau_partitions(sigma, sigma);
    const Partition big_weight = doubled(nu);

    ReportRecord rec;
    rec.sigma = sigma;
    rec.nu = nu;
    rec.lhs = lr_coefficient(minus, plus, nu);
    rec.rhs = lr_coefficient(sigma, sigma, big_weight);

    auto fail = [&](std::string why) {
        rec.ok = false;
        if (rec.note.empty()) rec.note = std::move(why);
    };

    const auto tableaux = enumerate_domino_tableaux(small_shape, nu, {.yamanouchi_only = true});
    if (tableaux.size() != rec.lhs) fail("Yamanouchi count differs from c^nu_{sigma- sigma+}");

    const auto target_weight = big_weight.trimmed().parts();
    std::set<std::vector<int>> images;
    for (const auto& t : tableaux) {
        const DominoTableau u = duplicate_from_sigma(t, sigma);
        if (u.shape() != big_shape) fail("image has the wrong shape");
        if (u.weight() != target_weight) fail("image has the wrong weight");
        if (!is_yamanouchi(reading_word(u))) fail("image is not Yamanouchi");
        const auto back = undo_duplicate(u);
        if (!back || *back != t) fail("undo_duplicate does not round-trip");
        images.insert(u.canonical_key());
    }
    if (images.size() != tableaux.size()) fail("duplicate is not injective");
    if (rec.lhs > rec.rhs) fail("c^nu_{sigma- sigma+} > c^{nu(2)}_{sigma sigma}");
    return Report{"prop2", {std::move(rec)}, true};
}

Report sweep_prop2(const SweepConfig& config) {
    struct Item {
        Partition sigma, nu;
    };
    std::vector<Item> items;
    for (const auto& sigma : sweep_sigmas(config.p, config.max_part))
        for (auto& nu : partitions_of(static_cast<int>(sigma.weight()), 2 * config.p, sigma[0] + sigma[1]))
            items.push_back({sigma, std::move(nu)});
    Report r = run_indexed(items.size(), [&](std::size_t i) { return check_prop2(items[i].sigma, items[i].nu); },
                           config);
    r.suite = "prop2";
    return r;
}

Report sweep_p1_equals_p2(const SweepConfig& config) { return per_sigma(config, "p1p2", &verify_p1_equals_p2); }

Report sweep_implication(const SweepConfig& config) {
    return per_sigma(config, "implication", &verify_nonvanishing_implication);
}

Report sweep_projection(const SweepConfig& config) {
    return per_sigma(config, "projection", &verify_projection_inclusion);
}

Report sweep_lpp(const SweepConfig& config) {
    struct Item {
        Partition sigma, lambda, mu;
    };
    std::vector<Item> items;
    for (const auto& sigma : sweep_sigmas(config.p, config.max_part))
        for (auto& [l, m] : sigma_splits(sigma)) items.push_back({sigma, l, m});
    Report r = run_indexed(
        items.size(),
        [&](std::size_t i) {
            const auto& it = items[i];
            Report out{"lpp", {}, true};
            for (const auto& nu : partitions_of(static_cast<int>(it.sigma.weight()), 2 * config.p,
                                                it.sigma[0] + it.sigma[1]))
                out.append(verify_lpp_inequality(it.sigma, it.lambda, it.mu, nu));
            return out;
        },
        config);
    r.suite = "lpp";
    return r;
}

Report sweep_fflp(const SweepConfig& config) {
    const auto box = partitions_in_box(config.p, config.max_part);
    struct Item {
        Partition lambda, mu;
    };
    std::vector<Item> items;
    for (const auto& l : box)
        for (const auto& m : box) items.push_back({l, m});
    Report r = run_indexed(
        items.size(),
        [&](std::size_t i) {
            const auto& it = items[i];
            Report out{"fflp", {}, true};
            const int n = static_cast<int>(it.lambda.weight() + it.mu.weight());
            for (const auto& nu : partitions_of(n, 2 * config.p, n))
                out.append(verify_fflp_inequality(it.lambda, it.mu, nu));
            return out;
        },
        config);
    r.suite = "fflp";
    return r;
}

Report sweep_cl_vs_lr(const SweepConfig& config) {
    struct Item {
        Partition lambda, mu;
    };
    std::vector<Item> items;
    for (int r = 0; r <= config.p; ++r) {
        const auto box = partitions_in_box(r, config.max_part);
        for (const auto& l : box)
            for (const auto& m : box) items.push_back({l, m});
    }
    Report r = run_indexed(
        items.size(),
        [&](std::size_t i) {
            const auto& it = items[i];
            Report out{"cl", {}, true};
            const int n = static_cast<int>(it.lambda.weight() + it.mu.weight());
            for (auto& nu : partitions_of(n, n, n)) {
                ReportRecord rec;
                rec.split = std::make_pair(it.lambda, it.mu);
                rec.lhs = cl_coefficient(it.lambda, it.mu, nu);
                rec.rhs = lr_coefficient(it.lambda, it.mu, nu);
                rec.ok = rec.lhs == rec.rhs;
                // Both-zero cases are checked but not recorded; they dominate the sweep.
                if (rec.ok && rec.lhs == 0) continue;
                rec.nu = std::move(nu);
                out.records.push_back(std::move(rec));
            }
            return out;
        },
        config);
    r.suite = "cl";
    return r;
}

}  // namespace horn
