// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "tindep/align.hpp"
#include "tindep/campaign.hpp"
#include "tindep/error.hpp"
#include "tindep/rng.hpp"

using namespace tindep;

namespace {

constexpr int kSepTrials = 200;
constexpr int kStripTrials = 200;
constexpr int kMinMutants = 100;
constexpr int kExtractInstances = 100;
constexpr int kIntervalTrials = 500;
constexpr int kMaxIntervals = 12;
constexpr int kPerTag = 10;
constexpr int kStarTrials = 100;
constexpr int kDecompTrials = 100;
constexpr int kMwisTrials = 200;
constexpr double kMaxSeconds = 300.0;

struct Line {
    bool ok;
    std::string text;
};

std::vector<Line> lines;

void report(int id, bool ok, const std::string& name, const std::string& detail) {
    lines.push_back({ok, std::string(ok ? "PASS" : "FAIL") + "  " + std::to_string(id) + "  " + name + "  " + detail});
    std::printf("%s\n", lines.back().text.c_str());
    std::fflush(stdout);
}

std::string counts(const CampaignReport& r) {
    std::string out;
    for (const char* s : {kVerified, kVacuous, kSkipped, kViolated, kInvalid, kResource})
        if (int c = r.count(s)) out += std::string(out.empty() ? "" : " ") + s + "=" + std::to_string(c);
    return out;
}

struct Timed {
    CampaignReport report;
    double seconds;
};

Timed run(const std::string& name, int trials, std::uint64_t seed, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    CampaignReport r = run_campaign(CampaignOptions{name, trials, seed, threads, ""});
    return {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

long metric_sum(const CampaignReport& r, const std::string& key) {
    long s = 0;
    for (const auto& t : r.results)
        if (t.metrics.contains(key) && t.metrics[key].is_number_integer()) s += t.metrics[key].get<long>();
    return s;
}

void separation(int id, const std::string& name, const std::string& campaign, std::uint64_t seed, int threads) {
    Timed t = run(campaign, kSepTrials, seed, threads);
    const auto& r = t.report;
    bool ok = static_cast<int>(r.results.size()) >= kSepTrials && r.count(kViolated) == 0 && r.count(kInvalid) == 0 &&
              r.count(kResource) == 0 && r.count(kSkipped) == 0 && r.count(kVerified) > 0 && t.seconds <= kMaxSeconds;
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.1fs", t.seconds);
    report(id, ok, name, counts(r) + " pairs=" + std::to_string(metric_sum(r, "pairs")) + buf);
}

/// Path 0..len-1 and one vertex per attachment list, all joined to a hub outside N[P].
std::optional<std::pair<Graph, VertexSet>> extraction_instance(int s, int d, SplitMix64& rng) {
    int target = 3 * s * (d + 1);
    int len = 4 * target;
    std::vector<std::vector<int>> att;
    std::vector<int> depth(static_cast<std::size_t>(len), 0), nbs(static_cast<std::size_t>(len), 0);
    for (int attempt = 0; attempt < 4000 && static_cast<int>(att.size()) < target; ++attempt) {
        int lo = rng.range(0, len - 1), hi = std::min(len - 1, lo + rng.range(0, 3));
        std::vector<int> a{lo};
        for (int p = lo + 1; p < hi; ++p)
            if (rng.chance(1, 2)) a.push_back(p);
        if (hi > lo) a.push_back(hi);
        bool ok = true;
        for (int p = lo; p <= hi; ++p) ok = ok && depth[static_cast<std::size_t>(p)] + 1 <= d;
        for (int p : a) ok = ok && nbs[static_cast<std::size_t>(p)] + 1 < d;
        if (!ok) continue;
        for (int p = lo; p <= hi; ++p) ++depth[static_cast<std::size_t>(p)];
        for (int p : a) ++nbs[static_cast<std::size_t>(p)];
        att.push_back(a);
    }
    if (static_cast<int>(att.size()) < target) return std::nullopt;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
    VertexSet Y;
    for (int k = 0; k < target; ++k) {
        for (int p : att[static_cast<std::size_t>(k)]) edges.emplace_back(p, len + k);
        edges.emplace_back(len + k, len + target);
        Y.push_back(len + k);
    }
    return std::pair{Graph(len + target + 1, edges), Y};
}

void extraction(int id, std::uint64_t seed) {
    SplitMix64 rng(SplitMix64::derive(seed, 5));
    int built = 0, good = 0;
    std::string first_bad;
    for (int trial = 0; built < kExtractInstances && trial < 20 * kExtractInstances; ++trial) {
        // d = 1 admits no instance: every y has a neighbor in P.
        int d = rng.range(2, 3), s = rng.range(1, 3);
        auto inst = extraction_instance(s, d, rng);
        if (!inst) continue;
        ++built;
        const auto& [g, Y] = *inst;
        PathWitness P;
        for (int i = 0; i < g.size() - static_cast<int>(Y.size()) - 1; ++i) P.vertices.push_back(i);
        try {
            Extraction ex = extract_consistent_alignment(g, P, Y, s, d);
            auto a = classify_alignment(g, P, ex.S);
            if (static_cast<int>(ex.S.size()) == s && is_subset(ex.S, Y) && a && a->consistent()) ++good;
            else if (first_bad.empty()) first_bad = " first bad trial " + std::to_string(trial);
        } catch (const std::exception& e) {
            if (first_bad.empty()) first_bad = std::string(" trial ") + std::to_string(trial) + ": " + e.what();
        }
    }

    SplitMix64 irng(SplitMix64::derive(seed, 55));
    int matched = 0;
    for (int trial = 0; trial < kIntervalTrials; ++trial) {
        int k = irng.range(1, kMaxIntervals);
        std::vector<std::pair<int, int>> w;
        for (int i = 0; i < k; ++i) {
            int lo = irng.range(0, 20);
            w.emplace_back(lo, lo + irng.range(0, 6));
        }
        auto got = interval_stable_set(w);
        bool disjoint = true;
        for (std::size_t i = 0; i < got.size(); ++i)
            for (std::size_t j = i + 1; j < got.size(); ++j)
                disjoint = disjoint && (w[got[i]].second < w[got[j]].first || w[got[j]].second < w[got[i]].first);
        int best = 0;
        for (std::uint32_t m = 0; m < (1U << k); ++m) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j)
                    if ((m >> i & 1U) && (m >> j & 1U) && !(w[i].second < w[j].first || w[j].second < w[i].first))
                        ok = false;
            if (ok) best = std::max(best, __builtin_popcount(m));
        }
        if (disjoint && static_cast<int>(got.size()) == best) ++matched;
    }
    bool ok = built >= kExtractInstances && good == built && matched == kIntervalTrials;
    report(id, ok, "extraction",
           "instances=" + std::to_string(built) + " consistent=" + std::to_string(good) +
               " interval_exact=" + std::to_string(matched) + "/" + std::to_string(kIntervalTrials) + first_bad);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::uint64_t seed = 42;
    int threads = 0;
    app.add_option("--seed", seed, "campaign seed");
    app.add_option("--threads", threads, "worker threads, 0 = all cores");
    CLI11_PARSE(app, argc, argv);

    separation(1, "wheel-separation", "wheel-sep", seed, threads);
    separation(2, "special-wheel-separation", "special-wheel-sep", seed, threads);
    separation(3, "pyramid-separation", "pyramid-sep", seed, threads);

    {
        CampaignReport r = run("strip", kStripTrials, seed, threads).report;
        int trapped = 0;
        for (const auto& t : r.results)
            if (t.metrics.value("pyramid", "") == "verified") ++trapped;
        long mutants = metric_sum(r, "valid_mutants");
        bool ok = r.count(kViolated) == 0 && r.count(kInvalid) == 0 && r.count(kResource) == 0 && trapped > 0 &&
                  mutants >= kMinMutants;
        report(4, ok, "strip-axioms",
               counts(r) + " trapped_pyramids=" + std::to_string(trapped) + " valid_mutants=" + std::to_string(mutants));
    }

    extraction(5, seed);

    {
        int tags = 9;
        CampaignReport r = run("amicable", tags * (kPerTag + 1), seed, threads).report;
        std::map<std::string, int> per;
        for (const auto& t : r.results)
            if (t.status == kVerified) ++per[t.metrics.value("case", "")];
        bool ok = r.count(kVerified) == static_cast<int>(r.results.size()) && static_cast<int>(per.size()) == tags;
        int least = 1 << 30;
        for (const auto& [tag, c] : per) least = std::min(least, c);
        ok = ok && least >= kPerTag;
        report(6, ok, "amicability", counts(r) + " tags=" + std::to_string(per.size()) + " min_per_tag=" + std::to_string(least));
    }

    {
        CampaignReport r = run("star-bound", kStarTrials, seed, threads).report;
        bool ok = r.count(kVerified) == kStarTrials;
        report(7, ok, "star-cover-bound", counts(r));
    }

    {
        CampaignReport r = run("decomp-pipeline", kDecompTrials, seed, threads).report;
        int exact = 0, trees = 0;
        for (const auto& t : r.results) exact += t.metrics.contains("exact");
        for (int i = 0; i < kDecompTrials; i += 4) ++trees;
        bool ok = r.count(kVerified) == kDecompTrials && exact > 0;
        report(8, ok, "decomposition-pipeline",
               counts(r) + " exact_checked=" + std::to_string(exact) + " trees=" + std::to_string(trees));
    }

    {
        CampaignReport r = run("mwis", kMwisTrials, seed, threads).report;
        bool ok = r.count(kVerified) == kMwisTrials;
        report(9, ok, "mwis", counts(r));
    }

    {
        // Second run uses a different thread count; the JSON must not change.
        int other = threads == 1 ? 0 : 1;
        int same = 0;
        std::string diff;
        for (const std::string& name : campaign_names()) {
            int trials = name.find("sep") != std::string::npos ? kSepTrials / 2 : 50;
            std::string a = run(name, trials, seed, threads).report.to_json().dump();
            std::string b = run(name, trials, seed, other).report.to_json().dump();
            if (a == b) ++same;
            else diff += " " + name;
        }
        report(10, same == static_cast<int>(campaign_names().size()), "determinism",
               std::to_string(same) + "/" + std::to_string(campaign_names().size()) + " campaigns identical" + diff);
    }

    int failed = static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const Line& l) { return !l.ok; }));
    std::printf("%d/%zu criteria passed\n", static_cast<int>(lines.size()) - failed, lines.size());
    return failed == 0 ? 0 : 1;
}
