#include "vcp/generator.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace vcp {

namespace {

// 53-bit uniform in [0, 1); fully specified, unlike std distributions.
double next_double(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Walker alias table for O(1) weighted sampling.
class AliasTable {
  public:
    explicit AliasTable(const std::vector<double>& weights)
        : prob_(weights.size()), alias_(weights.size())
    {
        const std::size_t n = weights.size();
        double total = 0.0;
        for (double w : weights)
            total += w;
        std::vector<double> scaled(n);
        for (std::size_t i = 0; i < n; ++i)
            scaled[i] = weights[i] * static_cast<double>(n) / total;

        std::vector<std::uint32_t> small, large;
        for (std::size_t i = 0; i < n; ++i)
            (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));

        while (!small.empty() && !large.empty()) {
            std::uint32_t s = small.back();
            std::uint32_t l = large.back();
            small.pop_back();
            large.pop_back();
            prob_[s] = scaled[s];
            alias_[s] = l;
            scaled[l] = (scaled[l] + scaled[s]) - 1.0;
            (scaled[l] < 1.0 ? small : large).push_back(l);
        }
        for (std::uint32_t i : large)
            prob_[i] = 1.0;
        for (std::uint32_t i : small)
            prob_[i] = 1.0;
    }

    std::uint32_t sample(std::mt19937_64& rng) const
    {
        auto i = static_cast<std::size_t>(next_double(rng) * static_cast<double>(prob_.size()));
        if (i >= prob_.size())
            i = prob_.size() - 1;
        return next_double(rng) < prob_[i] ? static_cast<std::uint32_t>(i) : alias_[i];
    }

  private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

} // namespace

Graph generate_power_law(const PowerLawSpec& spec)
{
    if (spec.num_vertices < 2)
        throw validation_error("power-law spec: need at least 2 vertices");
    if (!(spec.eta > 1.0))
        throw validation_error("power-law spec: eta must be > 1");
    if (!(spec.target_avg_degree > 0.0))
        throw validation_error("power-law spec: average degree must be positive");
    if (spec.target_avg_degree >= static_cast<double>(spec.num_vertices))
        throw validation_error("power-law spec: average degree must be < |V|");

    const vid_t n = spec.num_vertices;
    std::mt19937_64 rng(spec.seed);

    // Pareto(1, eta-1) draws: density ~ w^-eta for w >= 1.
    std::vector<double> weights(n);
    double total = 0.0;
    for (vid_t v = 0; v < n; ++v) {
        double u = next_double(rng);
        weights[v] = std::pow(1.0 - u, -1.0 / (spec.eta - 1.0));
        total += weights[v];
    }

    // Rescale so mean weight = target average degree (expected degree ==
    // weight under 2|E| = n*avg endpoint draws), then cap hubs at
    // sqrt(n*avg) to keep a single vertex from soaking up the edge budget.
    const double scale = spec.target_avg_degree * static_cast<double>(n) / total;
    const double cap = std::sqrt(static_cast<double>(n) * spec.target_avg_degree);
    for (double& w : weights)
        w = std::min(w * scale, cap);

    AliasTable table(weights);
    const auto num_edges =
        static_cast<eid_t>(std::llround(static_cast<double>(n) * spec.target_avg_degree / 2.0));

    std::vector<Edge> edges;
    edges.reserve(num_edges);
    for (eid_t i = 0; i < num_edges; ++i) {
        vid_t u = table.sample(rng);
        vid_t v = table.sample(rng);
        int tries = 0;
        while (v == u && ++tries <= 64)
            v = table.sample(rng);
        if (v == u)
            v = (u + 1) % n; // degenerate weights; keep determinism
        edges.push_back({u, v});
    }

    return Graph(n, std::move(edges), /*directed=*/false);
}

} // namespace vcp
