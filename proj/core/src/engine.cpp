#include "mlapd/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mlapd {

AlgoState::AlgoState(const RootedTree& tree)
    : ell(), next(tree.size()), invested(tree.size()) {
    ell.reserve(tree.size());
    for (std::uint32_t v = 0; v < tree.size(); ++v) ell.push_back(tree.cost(v));
}

std::vector<std::size_t> pending_below(const Instance& instance, const Rat& now,
                                       std::uint32_t v, const std::vector<char>& request_done,
                                       const std::vector<char>& vertex_covered) {
    const auto& tree = instance.tree;
    std::vector<std::size_t> result;
    for (std::size_t k = 0; k < instance.requests.size(); ++k) {
        if (request_done[k]) continue;
        const auto& req = instance.requests[k];
        if (req.arrival > now) continue;
        std::uint32_t rv = *tree.index_of(req.vertex);
        if (vertex_covered[rv]) continue;
        if (!tree.is_ancestor_or_self(v, rv)) continue;
        result.push_back(k);
    }
    std::sort(result.begin(), result.end(), [&](std::size_t a, std::size_t b) {
        const auto& ra = instance.requests[a];
        const auto& rb = instance.requests[b];
        if (ra.deadline != rb.deadline) return ra.deadline < rb.deadline;
        return ra.id < rb.id;
    });
    return result;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> classify(
    const std::vector<std::uint32_t>& expansion, const std::vector<ExtRat>& next_before,
    const Rat& time) {
    std::vector<std::uint32_t> anticipated, unanticipated;
    for (std::uint32_t v : expansion) {
        if (next_before[v].less_equal(time))
            anticipated.push_back(v);
        else
            unanticipated.push_back(v);
    }
    return {std::move(anticipated), std::move(unanticipated)};
}

namespace {

void insert_sorted(std::vector<std::uint32_t>& xs, std::uint32_t x) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end() || *it != x) xs.insert(it, x);
}

class Simulation {
public:
    Simulation(const Instance& instance, Policy& policy)
        : inst_(instance),
          tree_(instance.tree),
          policy_(policy),
          state_(instance.tree),
          served_(instance.requests.size(), 0),
          in_expansion_(instance.tree.size(), 0),
          covered_(instance.tree.size(), 0) {
        req_vertex_.reserve(inst_.requests.size());
        for (const auto& req : inst_.requests) {
            auto idx = tree_.index_of(req.vertex);
            if (!idx) throw std::logic_error("request on vertex missing from tree");
            req_vertex_.push_back(*idx);
        }
    }

    SimulationResult run() {
        SimulationResult result;
        while (auto critical = earliest_unserved()) on_deadline(*critical, result);
        return result;
    }

private:
    // strict (deadline, id) order makes the pick unique
    std::optional<std::size_t> earliest_unserved() const {
        std::optional<std::size_t> best;
        for (std::size_t k = 0; k < inst_.requests.size(); ++k) {
            if (served_[k]) continue;
            if (!best) {
                best = k;
                continue;
            }
            const auto& a = inst_.requests[k];
            const auto& b = inst_.requests[*best];
            if (a.deadline < b.deadline || (a.deadline == b.deadline && a.id < b.id)) best = k;
        }
        return best;
    }

    void on_deadline(std::size_t critical, SimulationResult& result) {
        const Request& rho = inst_.requests[critical];
        now_ = rho.deadline;

        TraceRecord rec;
        rec.index = result.trace.size() + 1;
        rec.time = now_;
        rec.critical_request = rho.id;
        rec.next_before = state_.next;
        rec.invested_before = state_.invested;

        std::fill(in_expansion_.begin(), in_expansion_.end(), 0);
        std::fill(covered_.begin(), covered_.end(), 0);
        expansion_.clear();
        investment_.clear();

        for (std::uint32_t v : tree_.root_path(req_vertex_[critical])) add_expansion(v);
        expand(tree_.root());
        std::sort(expansion_.begin(), expansion_.end());
        policy_.begin_transmission(in_expansion_);

        invest_stage(tree_.root());
        std::sort(investment_.begin(), investment_.end());

        if (!covered_[req_vertex_[critical]])
            throw std::logic_error("transmission does not contain the critical vertex");

        rec.expansion = expansion_;
        rec.investment = investment_;
        std::tie(rec.anticipated, rec.unanticipated) = classify(expansion_, rec.next_before, now_);
        rec.disproportional = policy_.disproportional_vertices();
        rec.cost_tree = tree_.cost_of(expansion_) + tree_.cost_of(investment_);
        rec.cost_unanticipated = tree_.cost_of(rec.unanticipated);
        rec.ell_after = state_.ell;
        rec.next_after = state_.next;
        rec.invested_after = state_.invested;

        Transmission tr;
        tr.time = now_;
        for (std::uint32_t v = 0; v < tree_.size(); ++v)
            if (covered_[v]) tr.vertices.push_back(tree_.id_at(v));

        for (std::size_t k = 0; k < inst_.requests.size(); ++k) {
            if (served_[k]) continue;
            const auto& req = inst_.requests[k];
            if (req.arrival <= now_ && now_ <= req.deadline && covered_[req_vertex_[k]]) {
                served_[k] = 1;
                result.solution.served[req.id] = result.trace.size();
            }
        }
        if (!served_[critical])
            throw std::logic_error("critical request left unserved by its own transmission");

        result.solution.total_cost += rec.cost_tree;
        result.solution.transmissions.push_back(std::move(tr));
        result.trace.push_back(std::move(rec));
    }

    void add_expansion(std::uint32_t v) {
        if (in_expansion_[v]) return;
        in_expansion_[v] = 1;
        covered_[v] = 1;
        expansion_.push_back(v);
    }

    void expand(std::uint32_t v) {
        if (state_.next[v].less_equal(now_)) {
            for (std::uint32_t target : state_.invested[v]) {
                // all vertices on the v-target path lie under v
                for (std::uint32_t w = target; w != v; w = *tree_.parent(w)) add_expansion(w);
            }
        }
        for (std::uint32_t c : tree_.children(v))
            if (in_expansion_[c]) expand(c);
    }

    // deeper vertices invest first
    void invest_stage(std::uint32_t v) {
        for (std::uint32_t c : tree_.children(v))
            if (in_expansion_[c]) invest_stage(c);

        state_.invested[v].clear();
        Rat budget = policy_.budget(v);
        while (budget > 0) {
            auto pend = pending_below(inst_, now_, v, served_, covered_);
            if (pend.empty()) break;
            std::uint32_t target = first_uncovered(v, req_vertex_[pend.front()]);
            if (auto source = policy_.delegation_source(v, target)) {
                state_.invested[v] = state_.invested[*source];
                break;
            }
            invest(v, target, budget);
        }
        auto pend = pending_below(inst_, now_, v, served_, covered_);
        state_.next[v] =
            pend.empty() ? ExtRat::infinity() : ExtRat(inst_.requests[pend.front()].deadline);
    }

    // first vertex on the path from v towards rv that is outside V^E u V^I
    std::uint32_t first_uncovered(std::uint32_t v, std::uint32_t rv) const {
        std::vector<std::uint32_t> down;
        for (std::uint32_t w = rv; w != v; w = *tree_.parent(w)) down.push_back(w);
        for (auto it = down.rbegin(); it != down.rend(); ++it)
            if (!covered_[*it]) return *it;
        throw std::logic_error("no uncovered vertex on investment path");
    }

    void invest(std::uint32_t v, std::uint32_t target, Rat& budget) {
        for (auto p = tree_.parent(target); p; p = tree_.parent(*p))
            if (!covered_[*p]) throw std::logic_error("investment target has uncovered ancestor");

        Rat delta = std::min(budget, state_.ell[target]);
        budget -= delta;
        state_.ell[target] -= delta;
        insert_sorted(state_.invested[v], target);
        if (state_.ell[target] == 0) {
            covered_[target] = 1;
            investment_.push_back(target);
            state_.ell[target] = tree_.cost(target);
        }
    }

    const Instance& inst_;
    const RootedTree& tree_;
    Policy& policy_;
    AlgoState state_;
    std::vector<char> served_;
    std::vector<char> in_expansion_;  // V^E
    std::vector<char> covered_;       // V^E u V^I
    std::vector<std::uint32_t> req_vertex_;
    std::vector<std::uint32_t> expansion_;
    std::vector<std::uint32_t> investment_;
    Rat now_;
};

}  // namespace

SimulationResult simulate(const Instance& instance, Policy& policy) {
    return Simulation(instance, policy).run();
}

}  // namespace mlapd
