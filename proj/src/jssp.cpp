#include "ffalab/jssp.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ffalab {

JsspInstance::JsspInstance(std::size_t jobs, std::size_t machines,
                           std::vector<std::vector<JsspOperation>> operations)
    : jobs_(jobs), machines_(machines), ops_(std::move(operations)) {
    if (jobs_ == 0 || machines_ == 0)
        throw std::invalid_argument("jssp instance needs at least one job and one machine");
    if (ops_.size() != jobs_)
        throw std::invalid_argument("operation table does not match the job count");

    std::vector<std::uint64_t> machine_load(machines_, 0);
    for (std::size_t j = 0; j < jobs_; ++j) {
        if (ops_[j].size() != machines_)
            throw std::invalid_argument("job " + std::to_string(j) +
                                        " does not visit every machine exactly once");
        std::vector<bool> seen(machines_, false);
        std::uint64_t duration = 0;
        for (const JsspOperation& op : ops_[j]) {
            if (op.machine >= machines_)
                throw std::invalid_argument("machine index out of range in job " +
                                            std::to_string(j));
            if (seen[op.machine])
                throw std::invalid_argument("job " + std::to_string(j) +
                                            " visits machine " +
                                            std::to_string(op.machine) + " twice");
            if (op.time == 0)
                throw std::invalid_argument("processing times must be positive");
            seen[op.machine] = true;
            duration += op.time;
            machine_load[op.machine] += op.time;
            upper_bound_ += op.time;
        }
        lower_bound_ = std::max(lower_bound_, duration);
    }
    for (std::uint64_t load : machine_load)
        lower_bound_ = std::max(lower_bound_, load);
}

JsspInstance JsspInstance::parse_orlib(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos)
                return true;
        }
        return false;
    };

    if (!next_content_line())
        throw std::runtime_error("or-library: empty input");
    std::istringstream hs(line);
    long long jobs = 0, machines = 0;
    std::string extra;
    if (!(hs >> jobs >> machines) || jobs <= 0 || machines <= 0 || (hs >> extra))
        throw std::runtime_error("or-library line " + std::to_string(line_no) +
                                 ": malformed header, expected '<jobs> <machines>'");

    std::vector<std::vector<JsspOperation>> ops;
    ops.reserve(static_cast<std::size_t>(jobs));
    for (long long j = 0; j < jobs; ++j) {
        if (!next_content_line())
            throw std::runtime_error("or-library: unexpected end of input at job " +
                                     std::to_string(j));
        std::istringstream ls(line);
        std::vector<JsspOperation> row;
        long long machine, time;
        while (ls >> machine >> time) {
            if (machine < 0 || machine >= machines)
                throw std::runtime_error("or-library line " + std::to_string(line_no) +
                                         ": machine index " + std::to_string(machine) +
                                         " out of range");
            if (time <= 0)
                throw std::runtime_error("or-library line " + std::to_string(line_no) +
                                         ": processing time must be positive");
            row.push_back({static_cast<std::size_t>(machine),
                           static_cast<std::uint64_t>(time)});
        }
        if (row.size() != static_cast<std::size_t>(machines))
            throw std::runtime_error("or-library line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(machines) + " machine/time pairs, got " +
                                     std::to_string(row.size()));
        ops.push_back(std::move(row));
    }
    return JsspInstance(static_cast<std::size_t>(jobs), static_cast<std::size_t>(machines),
                        std::move(ops));
}

JsspInstance JsspInstance::parse_orlib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_orlib(in);
}

bool opseq_valid(const JsspInstance& inst, const OpSeq& seq) {
    if (seq.size() != inst.jobs() * inst.machines())
        return false;
    std::vector<std::size_t> count(inst.jobs(), 0);
    for (std::uint32_t g : seq) {
        if (g >= inst.jobs())
            return false;
        if (++count[g] > inst.machines())
            return false;
    }
    return true;
}

OpSeq random_opseq(Rng& rng, const JsspInstance& inst) {
    OpSeq seq;
    seq.reserve(inst.jobs() * inst.machines());
    for (std::size_t j = 0; j < inst.jobs(); ++j)
        for (std::size_t k = 0; k < inst.machines(); ++k)
            seq.push_back(static_cast<std::uint32_t>(j));
    shuffle(rng, seq);
    return seq;
}

std::uint64_t decode_makespan(const JsspInstance& inst, const OpSeq& seq) {
    const std::size_t jobs = inst.jobs();
    if (seq.size() != jobs * inst.machines())
        throw std::invalid_argument("sequence length does not match jobs*machines");

    thread_local std::vector<std::size_t> next_op;
    thread_local std::vector<std::uint64_t> job_free, machine_free;
    next_op.assign(jobs, 0);
    job_free.assign(jobs, 0);
    machine_free.assign(inst.machines(), 0);

    std::uint64_t makespan = 0;
    for (std::uint32_t gene : seq) {
        if (gene >= jobs)
            throw std::invalid_argument("gene is not a valid job id");
        const std::size_t step = next_op[gene]++;
        if (step >= inst.machines())
            throw std::invalid_argument("job id occurs more often than the machine count");
        const JsspOperation& op = inst.operation(gene, step);
        const std::uint64_t start = std::max(job_free[gene], machine_free[op.machine]);
        const std::uint64_t end = start + op.time;
        job_free[gene] = end;
        machine_free[op.machine] = end;
        makespan = std::max(makespan, end);
    }
    if (makespan < inst.lower_bound() || makespan > inst.upper_bound())
        throw std::logic_error("decoded makespan violates the instance bounds");
    return makespan;
}

EvalContext::EvalContext(const JsspInstance& inst, std::uint64_t budget, std::uint64_t target)
    : inst_(inst), budget_(budget), target_(target),
      best_(inst.upper_bound() + 1) {}

std::uint64_t EvalContext::evaluate(const OpSeq& seq) {
    const std::uint64_t m = decode_makespan(inst_, seq);
    ++fes_;
    if (m < best_) {
        best_ = m;
        best_seq_ = seq;
        events_.push_back({fes_, m});
    }
    if (best_ <= target_ || fes_ >= budget_)
        stopped_ = true;
    return m;
}

RunTrace EvalContext::take_trace() {
    RunTrace t;
    t.events = std::move(events_);
    t.total_fes = fes_;
    t.status = best_ <= target_ ? RunStatus::optimum_found : RunStatus::budget_exhausted;
    return t;
}

OpSeq gox_recombine_with(const std::function<bool()>& take_from_a, const JsspInstance& inst,
                         const OpSeq& a, const OpSeq& b) {
    const std::size_t len = inst.jobs() * inst.machines();
    if (a.size() != len || b.size() != len)
        throw std::invalid_argument("parents do not match the instance");

    // position of the k-th occurrence of each job, per parent
    std::vector<std::vector<std::uint32_t>> occ_a(inst.jobs()), occ_b(inst.jobs());
    for (std::size_t i = 0; i < len; ++i) {
        occ_a[a[i]].push_back(static_cast<std::uint32_t>(i));
        occ_b[b[i]].push_back(static_cast<std::uint32_t>(i));
    }

    std::vector<bool> marked_a(len, false), marked_b(len, false);
    std::vector<std::size_t> taken(inst.jobs(), 0);
    std::size_t cursor_a = 0, cursor_b = 0;

    OpSeq child;
    child.reserve(len);
    for (std::size_t t = 0; t < len; ++t) {
        std::uint32_t job;
        if (take_from_a()) {
            while (marked_a[cursor_a])
                ++cursor_a;
            job = a[cursor_a];
        } else {
            while (marked_b[cursor_b])
                ++cursor_b;
            job = b[cursor_b];
        }
        child.push_back(job);
        const std::size_t k = taken[job]++;
        marked_a[occ_a[job][k]] = true;
        marked_b[occ_b[job][k]] = true;
    }
    return child;
}

OpSeq gox_recombine(Rng& rng, const JsspInstance& inst, const OpSeq& a, const OpSeq& b) {
    return gox_recombine_with([&rng]() { return rng.next_bool(); }, inst, a, b);
}

std::uint64_t swap_local_search(Rng& rng, const JsspInstance& inst, OpSeq& seq, int steps,
                                std::uint64_t current_makespan, EvalContext& ctx) {
    if (seq.size() != inst.jobs() * inst.machines())
        throw std::invalid_argument("sequence length does not match jobs*machines");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (int step = 0; step < steps && !ctx.stopped(); ++step) {
        pairs.clear();
        for (std::uint32_t i = 0; i < seq.size(); ++i)
            for (std::uint32_t j = i + 1; j < seq.size(); ++j)
                if (seq[i] != seq[j])
                    pairs.emplace_back(i, j);
        shuffle(rng, pairs);

        bool improved = false;
        for (const auto& [i, j] : pairs) {
            std::swap(seq[i], seq[j]);
            const std::uint64_t m = ctx.evaluate(seq);
            if (m < current_makespan) {
                current_makespan = m;
                improved = true;
                break;
            }
            std::swap(seq[i], seq[j]); // not improving, undo
            if (ctx.stopped())
                return current_makespan;
        }
        if (!improved)
            break; // local optimum under the single-swap neighborhood
    }
    return current_makespan;
}

} // namespace ffalab
