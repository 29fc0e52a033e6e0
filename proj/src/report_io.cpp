#include "horn/report_io.hpp"

#include <iomanip>
#include <ostream>

namespace horn {

void write_report_text(std::ostream& os, const Report& report) {
    for (const auto& r : report.records) {
        os << (r.ok ? "OK  " : "FAIL") << " sigma=" << r.sigma;
        if (r.split) os << " split=" << r.split->first << "/" << r.split->second;
        os << " nu=" << r.nu << " lhs=" << r.lhs << " rhs=" << r.rhs;
        if (!r.note.empty()) os << " " << r.note;
        os << '\n';
    }
    os << "suite=" << report.suite << " records=" << report.records.size() << " failures=" << report.failures()
       << " complete=" << (report.complete ? "yes" : "no") << '\n';
}

namespace {

nlohmann::json parts(const Partition& p) { return p.parts(); }

}  // namespace

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json rec{{"sigma", parts(r.sigma)}, {"nu", parts(r.nu)}, {"lhs", r.lhs}, {"rhs", r.rhs},
                           {"ok", r.ok}};
        if (r.split) rec["split"] = {parts(r.split->first), parts(r.split->second)};
        if (!r.note.empty()) rec["note"] = r.note;
        records.push_back(std::move(rec));
    }
    return {{"suite", report.suite},
            {"complete", report.complete},
            {"failures", report.failures()},
            {"records", std::move(records)}};
}

Report report_from_json(const nlohmann::json& j) {
    Report out;
    out.suite = j.at("suite").get<std::string>();
    out.complete = j.at("complete").get<bool>();
    for (const auto& rec : j.at("records")) {
        ReportRecord r;
        r.sigma = Partition(rec.at("sigma").get<std::vector<int>>());
        r.nu = Partition(rec.at("nu").get<std::vector<int>>());
        r.lhs = rec.at("lhs").get<std::uint64_t>();
        r.rhs = rec.at("rhs").get<std::uint64_t>();
        r.ok = rec.at("ok").get<bool>();
        if (rec.contains("split"))
            r.split = std::make_pair(Partition(rec["split"][0].get<std::vector<int>>()),
                                     Partition(rec["split"][1].get<std::vector<int>>()));
        if (rec.contains("note")) r.note = rec["note"].get<std::string>();
        out.records.push_back(std::move(r));
    }
    return out;
}

void write_samples_text(std::ostream& os, std::uint64_t seed, std::span<const SampleRecord> records) {
    const std::size_t n = records.empty() ? 0 : records.front().spectrum.raw.size();
    os << "seed index";
    for (std::size_t i = 1; i <= n; ++i) os << " raw_" << i;
    for (std::size_t i = 1; i <= n / 2; ++i) os << " collapsed_" << i;
    os << " pairing_defect\n";
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::setprecision(17);
    for (const auto& r : records) {
        os << seed << ' ' << r.index;
        for (double x : r.spectrum.raw) os << ' ' << x;
        for (double x : r.spectrum.collapsed) os << ' ' << x;
        os << ' ' << r.spectrum.pairing_defect << '\n';
    }
    os.flags(flags);
    os.precision(prec);
}

nlohmann::json samples_to_json(std::uint64_t seed, SamplingMode mode, std::span<const double> sigma,
                               std::span<const SampleRecord> records) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json s{{"seed", seed},
                         {"index", r.index},
                         {"raw", r.spectrum.raw},
                         {"collapsed", r.spectrum.collapsed},
                         {"pairing_defect", r.spectrum.pairing_defect}};
        if (mode == SamplingMode::block) s["block_discrepancy"] = r.block_discrepancy;
        samples.push_back(std::move(s));
    }
    return {{"sigma", std::vector<double>(sigma.begin(), sigma.end())},
            {"mode", to_string(mode)},
            {"seed", seed},
            {"samples", std::move(samples)}};
}

void write_summary_text(std::ostream& os, const SampleSummary& s) {
    os << "samples " << s.samples << '\n';
    if (s.samples > 0) {
        for (std::size_t i = 0; i < s.collapsed_min.size(); ++i)
            os << "collapsed_" << i + 1 << " min " << s.collapsed_min[i] << " max " << s.collapsed_max[i] << '\n';
    }
    os << "max pairing defect " << s.max_pairing_defect << '\n';
    os << "max trace error " << s.max_trace_error << '\n';
    os << "max block discrepancy " << s.max_block_discrepancy << '\n';
    if (s.hull_checked)
        os << "hull pass rate " << s.inside_hull << "/" << s.samples << '\n';
    else
        os << "hull pass rate n/a\n";
}

}  // namespace horn
