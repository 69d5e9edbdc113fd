#include "ffalab/memetic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ffalab {

namespace {

struct Individual {
    OpSeq seq;
    std::uint64_t makespan;
};

} // namespace

JsspRunResult run_jssp_ma(const JsspInstance& inst, const MemeticConfig& config,
                          MemeticObserver* observer) {
    if (config.mu < 2 || config.lambda < 1)
        throw std::invalid_argument("memetic algorithm needs mu >= 2 and lambda >= 1");
    Rng rng(config.seed);
    EvalContext ctx(inst, config.budget, config.target);
    FrequencyTable freq(inst.upper_bound());

    std::vector<Individual> pop;
    pop.reserve(config.mu + config.lambda);
    for (std::size_t i = 0; i < config.mu && !ctx.stopped(); ++i) {
        OpSeq seq = random_opseq(rng, inst);
        std::uint64_t m = ctx.evaluate(seq);
        if (!ctx.stopped())
            m = swap_local_search(rng, inst, seq, config.local_search_steps, m, ctx);
        pop.push_back({std::move(seq), m});
    }

    std::size_t generation = 0;
    while (!ctx.stopped()) {
        const std::size_t parents = pop.size();
        for (std::size_t o = 0; o < config.lambda && !ctx.stopped(); ++o) {
            const std::size_t i = static_cast<std::size_t>(rng.next_below(parents));
            std::size_t j = static_cast<std::size_t>(rng.next_below(parents - 1));
            if (j >= i)
                ++j;
            OpSeq child = gox_recombine(rng, inst, pop[i].seq, pop[j].seq);
            std::uint64_t m = ctx.evaluate(child);
            if (!ctx.stopped())
                m = swap_local_search(rng, inst, child, config.local_search_steps, m, ctx);
            pop.push_back({std::move(child), m});
        }
        if (ctx.stopped())
            break;

        std::vector<std::size_t> order(pop.size());
        std::iota(order.begin(), order.end(), 0);
        if (config.ffa) {
            for (const Individual& ind : pop)
                freq.tick(ind.makespan);
            // frequencies are compared after all pool members ticked
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                const std::uint64_t ha = freq.count(pop[a].makespan);
                const std::uint64_t hb = freq.count(pop[b].makespan);
                if (ha != hb)
                    return ha < hb;
                if (pop[a].makespan != pop[b].makespan)
                    return pop[a].makespan < pop[b].makespan;
                return a < b; // oldest first
            });
        } else {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (pop[a].makespan != pop[b].makespan)
                    return pop[a].makespan < pop[b].makespan;
                return a < b;
            });
        }

        std::vector<Individual> next;
        next.reserve(config.mu + config.lambda);
        for (std::size_t r = 0; r < config.mu && r < order.size(); ++r)
            next.push_back(std::move(pop[order[r]]));
        pop = std::move(next);
        ++generation;

        if (observer) {
            std::vector<std::uint64_t> makespans;
            makespans.reserve(pop.size());
            for (const Individual& ind : pop)
                makespans.push_back(ind.makespan);
            observer->on_generation(generation, makespans, freq.total());
        }
    }

    return {ctx.take_trace(), ctx.best_seq()};
}

} // namespace ffalab
