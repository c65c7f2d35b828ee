#include "vcp/bsp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numeric>

namespace vcp {

// ---------------------------------------------------------------------------
// trace

eid_t SimulationTrace::total_messages() const
{
    eid_t total = 0;
    for (const auto& w : messages_sent)
        for (eid_t m : w)
            total += m;
    return total;
}

eid_t SimulationTrace::total_compute() const
{
    eid_t total = 0;
    for (const auto& w : compute_units)
        for (eid_t c : w)
            total += c;
    return total;
}

double SimulationTrace::max_mean_ratio() const
{
    if (p == 0)
        return 1.0;
    eid_t max_w = 0, sum = 0;
    for (const auto& w : messages_sent) {
        const eid_t t = std::accumulate(w.begin(), w.end(), eid_t{0});
        max_w = std::max(max_w, t);
        sum += t;
    }
    if (sum == 0)
        return 1.0;
    return static_cast<double>(max_w) / (static_cast<double>(sum) / p);
}

eid_t SimulationTrace::sync_imbalance() const
{
    eid_t total = 0;
    for (std::size_t k = 0; k < supersteps(); ++k) {
        eid_t lo = std::numeric_limits<eid_t>::max();
        eid_t hi = 0;
        for (bid_t i = 0; i < p; ++i) {
            const eid_t load = compute_units[i][k] + messages_sent[i][k];
            lo = std::min(lo, load);
            hi = std::max(hi, load);
        }
        total += hi - lo;
    }
    return total;
}

TraceSummary trace_stats(const SimulationTrace& t)
{
    return {t.supersteps(), t.total_messages(), t.total_compute(), t.max_mean_ratio(),
            t.sync_imbalance()};
}

// ---------------------------------------------------------------------------
// subgraph construction

SubgraphSet build_subgraphs(const Graph& g, const PartitionAssignment& a)
{
    a.validate(g);
    SubgraphSet set;
    set.holders = a.vertex_holders(g);
    set.subgraphs.resize(a.p);

    for (bid_t i = 0; i < a.p; ++i) {
        set.subgraphs[i].id = i;
        set.subgraphs[i].local_index.assign(g.num_vertices(), -1);
    }
    for (vid_t v = 0; v < g.num_vertices(); ++v) {
        if (!set.holders[v].empty())
            set.covered_vertices++;
        for (bid_t b : set.holders[v]) {
            Subgraph& sg = set.subgraphs[b];
            sg.local_index[v] = static_cast<std::int32_t>(sg.vertices.size());
            sg.vertices.push_back(v); // ascending: v loop is ascending
        }
    }

    set.out_degree.assign(g.num_vertices(), 0);
    for (eid_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        Subgraph& sg = set.subgraphs[a.part[i]];
        sg.edge_ids.push_back(i);
        const auto ls = static_cast<vid_t>(sg.local_index[e.src]);
        const auto ld = static_cast<vid_t>(sg.local_index[e.dst]);
        const std::int64_t w = g.weight(i);
        sg.arcs.push_back({ls, ld, w});
        set.out_degree[e.src]++;
        if (!g.directed()) {
            sg.arcs.push_back({ld, ls, w});
            set.out_degree[e.dst]++;
        }
        set.arc_count += g.directed() ? 1 : 2;
    }

    for (bid_t i = 0; i < a.p; ++i) {
        Subgraph& sg = set.subgraphs[i];
        sg.is_master.resize(sg.vertices.size());
        for (vid_t lv = 0; lv < sg.vertices.size(); ++lv) {
            const vid_t v = sg.vertices[lv];
            sg.is_master[lv] = set.holders[v].front() == i;
            if (set.holders[v].size() > 1)
                sg.replicated.push_back(lv);
        }
    }
    return set;
}

// ---------------------------------------------------------------------------
// engine

namespace {

struct Message {
    vid_t vertex; // global id
    std::int64_t ival;
    double dval;
};

// Buffered mailboxes: everything sent in a superstep is delivered at its
// end, in (sender, send order). Apply order never affects results (min for
// cc/sssp; pr combines in holder order), it only keeps the trace stable.
class Engine {
  public:
    Engine(const Graph& g, const SubgraphSet& set, const VertexProgram& prog,
           Schedule schedule)
        : g_(g), set_(set), prog_(prog), schedule_(schedule), p_(static_cast<bid_t>(set.subgraphs.size()))
    {
        trace_.p = p_;
        trace_.messages_sent.resize(p_);
        trace_.messages_received.resize(p_);
        trace_.compute_units.resize(p_);
        inbox_.resize(p_);
        outbox_.assign(p_, std::vector<std::vector<Message>>(p_));
        ival_.resize(p_);
        dval_.resize(p_);
        partial_.resize(p_);
        snapshot_.resize(p_);
        sent_.assign(p_, 0);
        units_.assign(p_, 0);
        changes_.assign(p_, 0);
    }

    SimOutput run()
    {
        init_values();
        if (prog_.algo == Algo::pr) {
            for (int it = 0; it < prog_.pr_iterations; ++it)
                pr_superstep();
        } else {
            const std::size_t limit = 2 * static_cast<std::size_t>(g_.num_vertices()) + 16;
            for (std::size_t step = 0;; ++step) {
                if (step > limit)
                    throw std::runtime_error("bsp: superstep limit exceeded");
                if (min_superstep())
                    break;
            }
        }
        return {collect(), std::move(trace_)};
    }

  private:
    void for_each_worker(const std::function<void(bid_t)>& body)
    {
        if (schedule_ == Schedule::sequential || p_ == 1) {
            for (bid_t i = 0; i < p_; ++i)
                body(i);
            return;
        }
        std::vector<std::future<void>> tasks;
        tasks.reserve(p_);
        for (bid_t i = 0; i < p_; ++i)
            tasks.push_back(std::async(std::launch::async, [&body, i] { body(i); }));
        for (auto& t : tasks)
            t.get();
    }

    void init_values()
    {
        for (bid_t i = 0; i < p_; ++i) {
            const Subgraph& sg = set_.subgraphs[i];
            switch (prog_.algo) {
            case Algo::cc:
                ival_[i].resize(sg.vertices.size());
                for (vid_t lv = 0; lv < sg.vertices.size(); ++lv)
                    ival_[i][lv] = sg.vertices[lv];
                break;
            case Algo::sssp:
                ival_[i].assign(sg.vertices.size(), kUnreachable);
                if (sg.local_index[prog_.sssp_source] >= 0)
                    ival_[i][sg.local_index[prog_.sssp_source]] = 0;
                break;
            case Algo::pr: {
                const double init = 1.0 / set_.covered_vertices;
                dval_[i].assign(sg.vertices.size(), init);
                partial_[i].assign(sg.vertices.size(), 0.0);
                break;
            }
            }
        }
        if (prog_.algo == Algo::sssp && !set_.covered(prog_.sssp_source))
            throw validation_error("sssp: source vertex has no incident edges");
    }

    // One message per remote replica of vertex `v` (global).
    void broadcast(bid_t from, vid_t v, std::int64_t ival, double dval)
    {
        for (bid_t to : set_.holders[v]) {
            if (to == from)
                continue;
            outbox_[from][to].push_back({v, ival, dval});
            sent_[from]++;
        }
    }

    void deliver()
    {
        for (bid_t to = 0; to < p_; ++to) {
            for (bid_t from = 0; from < p_; ++from) {
                auto& box = outbox_[from][to];
                received_this_step_[to] += box.size();
                inbox_[to].insert(inbox_[to].end(), box.begin(), box.end());
                box.clear();
            }
        }
    }

    void start_superstep()
    {
        std::fill(sent_.begin(), sent_.end(), 0);
        std::fill(units_.begin(), units_.end(), 0);
        std::fill(changes_.begin(), changes_.end(), 0);
        received_this_step_.assign(p_, 0);
    }

    void record_superstep()
    {
        for (bid_t i = 0; i < p_; ++i) {
            trace_.messages_sent[i].push_back(sent_[i]);
            trace_.messages_received[i].push_back(received_this_step_[i]);
            trace_.compute_units[i].push_back(units_[i]);
        }
    }

    // cc / sssp: local min-propagation to fixpoint, then broadcast what the
    // local computation changed.
    bool min_superstep()
    {
        start_superstep();
        for_each_worker([this](bid_t i) {
            const Subgraph& sg = set_.subgraphs[i];
            auto& val = ival_[i];

            for (const Message& m : inbox_[i]) {
                const auto lv = static_cast<vid_t>(sg.local_index[m.vertex]);
                val[lv] = std::min(val[lv], m.ival);
            }
            inbox_[i].clear();

            // Snapshot replicated values after message application; only a
            // locally caused change needs broadcasting (an incoming value
            // already reached every replica from its sender).
            snapshot_[i].clear();
            for (vid_t lv : sg.replicated)
                snapshot_[i].push_back(val[lv]);

            const bool undirected_arcs = !g_.directed();
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& arc : sg.arcs) {
                    units_[i]++;
                    if (prog_.algo == Algo::cc) {
                        if (val[arc.src] < val[arc.dst]) {
                            val[arc.dst] = val[arc.src];
                            changes_[i]++;
                            changed = true;
                        }
                        // directed input: weak connectivity, relax both ways
                        if (!undirected_arcs && val[arc.dst] < val[arc.src]) {
                            val[arc.src] = val[arc.dst];
                            changes_[i]++;
                            changed = true;
                        }
                    } else {
                        if (val[arc.src] != kUnreachable &&
                            val[arc.src] + arc.weight < val[arc.dst]) {
                            val[arc.dst] = val[arc.src] + arc.weight;
                            changes_[i]++;
                            changed = true;
                        }
                    }
                }
            }

            for (std::size_t r = 0; r < sg.replicated.size(); ++r) {
                const vid_t lv = sg.replicated[r];
                if (val[lv] != snapshot_[i][r])
                    broadcast(i, sg.vertices[lv], val[lv], 0.0);
            }
        });
        deliver();
        record_superstep();

        const eid_t sent = std::accumulate(sent_.begin(), sent_.end(), eid_t{0});
        const eid_t changes = std::accumulate(changes_.begin(), changes_.end(), eid_t{0});
        return sent == 0 && changes == 0;
    }

    // pr: one synchronous iteration per superstep. Mirrors push partial
    // sums to the master, the master combines in holder order and pushes
    // the new value back; both legs are counted.
    void pr_superstep()
    {
        start_superstep();
        for_each_worker([this](bid_t i) {
            const Subgraph& sg = set_.subgraphs[i];
            auto& acc = partial_[i];
            std::fill(acc.begin(), acc.end(), 0.0);
            for (const auto& arc : sg.arcs) {
                units_[i]++;
                const vid_t global_src = sg.vertices[arc.src];
                acc[arc.dst] += dval_[i][arc.src] /
                                static_cast<double>(set_.out_degree[global_src]);
            }
            for (vid_t lv : sg.replicated) {
                if (!sg.is_master[lv])
                    broadcast_to_master(i, sg.vertices[lv], acc[lv]);
            }
        });
        deliver();

        for_each_worker([this](bid_t i) {
            const Subgraph& sg = set_.subgraphs[i];
            // Mirror partials arrive ordered by sender id == holder order,
            // so accumulation order is fixed: master first, then mirrors.
            for (const Message& m : inbox_[i]) {
                const auto lv = static_cast<vid_t>(sg.local_index[m.vertex]);
                partial_[i][lv] += m.dval;
            }
            inbox_[i].clear();

            const double base = (1.0 - prog_.pr_damping) / set_.covered_vertices;
            for (vid_t lv = 0; lv < sg.vertices.size(); ++lv) {
                if (!sg.is_master[lv])
                    continue;
                dval_[i][lv] = base + prog_.pr_damping * partial_[i][lv];
                if (set_.holders[sg.vertices[lv]].size() > 1)
                    broadcast(i, sg.vertices[lv], 0, dval_[i][lv]);
            }
        });
        deliver();

        for_each_worker([this](bid_t i) {
            const Subgraph& sg = set_.subgraphs[i];
            for (const Message& m : inbox_[i])
                dval_[i][static_cast<vid_t>(sg.local_index[m.vertex])] = m.dval;
            inbox_[i].clear();
        });
        record_superstep();
    }

    void broadcast_to_master(bid_t from, vid_t v, double partial)
    {
        const bid_t to = set_.master(v);
        outbox_[from][to].push_back({v, 0, partial});
        sent_[from]++;
    }

    SimResult collect()
    {
        SimResult res;
        res.algo = prog_.algo;
        res.covered.assign(g_.num_vertices(), false);
        if (prog_.algo == Algo::pr)
            res.dvals.assign(g_.num_vertices(), 0.0);
        else
            res.ivals.assign(g_.num_vertices(), 0);

        for (vid_t v = 0; v < g_.num_vertices(); ++v) {
            if (!set_.covered(v))
                continue;
            res.covered[v] = true;
            const bid_t m = set_.master(v);
            const auto lv = static_cast<vid_t>(set_.subgraphs[m].local_index[v]);
            if (prog_.algo == Algo::pr)
                res.dvals[v] = dval_[m][lv];
            else
                res.ivals[v] = ival_[m][lv];
        }

        // Replicas must agree once the run terminates.
        for (bid_t i = 0; i < p_; ++i) {
            const Subgraph& sg = set_.subgraphs[i];
            for (vid_t lv : sg.replicated) {
                const vid_t v = sg.vertices[lv];
                const bool same = prog_.algo == Algo::pr
                                      ? dval_[i][lv] == res.dvals[v]
                                      : ival_[i][lv] == res.ivals[v];
                if (!same)
                    throw std::runtime_error("bsp: replica divergence after termination");
            }
        }
        return res;
    }

    const Graph& g_;
    const SubgraphSet& set_;
    const VertexProgram& prog_;
    Schedule schedule_;
    bid_t p_;

    SimulationTrace trace_;
    std::vector<std::vector<Message>> inbox_;
    std::vector<std::vector<std::vector<Message>>> outbox_; // [from][to]
    std::vector<std::vector<std::int64_t>> ival_;
    std::vector<std::vector<double>> dval_;
    std::vector<std::vector<double>> partial_;
    std::vector<std::vector<std::int64_t>> snapshot_;
    std::vector<eid_t> sent_, units_, changes_, received_this_step_;
};

} // namespace

SimOutput run(const Graph& g, const SubgraphSet& subs, const VertexProgram& prog,
              Schedule schedule)
{
    if (g.num_edges() == 0)
        throw validation_error("bsp: graph has no edges");
    if (prog.algo == Algo::sssp && prog.sssp_source >= g.num_vertices())
        throw validation_error("sssp: source vertex does not exist");
    if (prog.algo == Algo::sssp && g.has_weights())
        for (eid_t i = 0; i < g.num_edges(); ++i)
            if (g.weight(i) < 0)
                throw validation_error("sssp: negative edge weight");
    if (prog.algo == Algo::pr && prog.pr_iterations < 1)
        throw validation_error("pr: iteration count must be >= 1");
    Engine engine(g, subs, prog, schedule);
    return engine.run();
}

SimOutput run(const Graph& g, const PartitionAssignment& a, const VertexProgram& prog,
              Schedule schedule)
{
    const SubgraphSet subs = build_subgraphs(g, a);
    return run(g, subs, prog, schedule);
}

} // namespace vcp
