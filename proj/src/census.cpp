#include <ringline/census.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace ringline
{
    namespace
    {
        using Word = std::uint64_t;

        auto popcount(std::span<const Word> s) -> std::uint64_t
        {
            std::uint64_t total = 0;
            for (auto w : s)
                total += static_cast<std::uint64_t>(std::popcount(w));
            return total;
        }

        /// Bits set for all vertices strictly greater than v.
        auto fill_above(std::span<Word> out, Vertex v, std::size_t n) -> void
        {
            std::fill(out.begin(), out.end(), 0);
            for (auto u = v + 1; u < n; ++u)
                out[u / 64] |= Word{1} << (u % 64);
        }

        auto budget_message(const Limits & limits) -> std::string
        {
            return "clique search exceeded the node budget of " + std::to_string(limits.census_node_budget);
        }

        /// Shared node counter; workers flush in batches and stop once the total passes the budget.
        class NodeBudget
        {
        public:
            explicit NodeBudget(std::uint64_t budget) : budget_(budget) {}

            auto spend(std::uint64_t & pending) -> bool
            {
                auto total = used_.fetch_add(pending) + pending;
                pending = 0;
                if (total > budget_)
                    exceeded_.store(true);
                return ! exceeded_.load();
            }
            auto exceeded() const -> bool { return exceeded_.load(); }

        private:
            std::uint64_t budget_;
            std::atomic<std::uint64_t> used_{0};
            std::atomic<bool> exceeded_{false};
        };

        class CountingWorker
        {
        public:
            CountingWorker(const Graph & g, std::size_t kmax, NodeBudget & budget) :
                g_(g), kmax_(kmax), budget_(budget), stack_((kmax + 1) * g.words()), counts_(kmax + 1, 0)
            {
            }

            /// Counts cliques whose smallest vertex is v.
            auto run_from(Vertex v) -> bool
            {
                auto w = g_.words();
                std::span<Word> cand(stack_.data() + w, w);
                fill_above(cand, v, g_.size());
                auto r = g_.row(v);
                for (std::size_t i = 0; i < w; ++i)
                    cand[i] &= r[i];
                return expand(1);
            }

            auto finish() -> bool { return budget_.spend(pending_); }
            auto counts() const -> const std::vector<std::uint64_t> & { return counts_; }

        private:
            /// Candidates for the current clique of size depth sit at stack level depth.
            auto expand(std::size_t depth) -> bool
            {
                if (++pending_ >= 4096 && ! budget_.spend(pending_))
                    return false;
                auto w = g_.words();
                std::span<const Word> cand(stack_.data() + depth * w, w);
                counts_[depth + 1] += popcount(cand);
                if (depth + 1 >= kmax_)
                    return true;

                std::span<Word> next(stack_.data() + (depth + 1) * w, w);
                for (std::size_t i = 0; i < w; ++i) {
                    for (auto bits = cand[i]; bits != 0; bits &= bits - 1) {
                        auto u = i * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                        auto r = g_.row(u);
                        for (std::size_t j = 0; j < i; ++j)
                            next[j] = 0;
                        // Only vertices above u remain candidates.
                        auto above = (u % 64 == 63) ? Word{0} : (~Word{0} << (u % 64 + 1));
                        next[i] = cand[i] & r[i] & above;
                        for (std::size_t j = i + 1; j < w; ++j)
                            next[j] = cand[j] & r[j];
                        if (! expand(depth + 1))
                            return false;
                    }
                }
                return true;
            }

            const Graph & g_;
            std::size_t kmax_;
            NodeBudget & budget_;
            std::vector<Word> stack_;
            std::vector<std::uint64_t> counts_;
            std::uint64_t pending_ = 0;
        };

        auto worker_count(const Limits & limits) -> unsigned
        {
            auto n = limits.workers == 0 ? std::thread::hardware_concurrency() : limits.workers;
            return std::max(1u, n);
        }
    }

    auto count_cliques(const Graph & g, std::size_t kmax, const Limits & limits) -> CliqueCensus
    {
        CliqueCensus census;
        if (g.is_loop_graph()) {
            census.counts.assign(kmax + 1, 1);
            return census;
        }

        census.counts.assign(kmax + 1, 0);
        census.counts[0] = 1;
        if (kmax == 0)
            return census;
        census.counts[1] = g.size();
        if (kmax == 1 || g.size() == 0)
            return census;

        NodeBudget budget(limits.census_node_budget);
        std::uint64_t root = 1;
        if (! budget.spend(root))
            throw BudgetExceeded(budget_message(limits));

        std::atomic<Vertex> next_vertex{0};
        std::mutex merge_mutex;
        std::vector<std::uint64_t> totals(kmax + 1, 0);

        auto work = [&] {
            CountingWorker worker(g, kmax, budget);
            bool ok = true;
            for (auto v = next_vertex.fetch_add(1); v < g.size() && ok && ! budget.exceeded();
                 v = next_vertex.fetch_add(1))
                ok = worker.run_from(v);
            worker.finish();
            std::lock_guard lock(merge_mutex);
            for (std::size_t k = 0; k <= kmax; ++k)
                totals[k] += worker.counts()[k];
        };

        auto n_workers = std::min<std::size_t>(worker_count(limits), g.size());
        if (n_workers <= 1)
            work();
        else {
            std::vector<std::jthread> threads;
            for (std::size_t i = 0; i < n_workers; ++i)
                threads.emplace_back(work);
        }

        if (budget.exceeded())
            throw BudgetExceeded(budget_message(limits));
        for (std::size_t k = 2; k <= kmax; ++k)
            census.counts[k] = totals[k];
        return census;
    }

    namespace
    {
        class ProfileSearch
        {
        public:
            ProfileSearch(const Graph & g, std::size_t target, const Limits & limits) :
                g_(g), target_(target), limits_(limits)
            {
            }

            auto run(std::vector<Word> common, std::size_t size) -> void
            {
                auto cand = common;
                search(common, cand, size);
            }

            auto profile() const -> const ExtensionProfile & { return profile_; }
            auto cliques() -> std::vector<std::vector<Vertex>> & { return cliques_; }
            bool keep_cliques = false;
            std::vector<Vertex> current;

        private:
            /// common: vertices adjacent to the whole clique; cand: those also above the last added vertex.
            auto search(const std::vector<Word> & common, const std::vector<Word> & cand, std::size_t size) -> void
            {
                if (++nodes_ > limits_.census_node_budget)
                    throw BudgetExceeded(budget_message(limits_));
                if (size == target_) {
                    ++profile_[popcount(common)];
                    if (keep_cliques)
                        cliques_.push_back(current);
                    return;
                }
                auto w = g_.words();
                std::vector<Word> next_common(w), next_cand(w);
                for (std::size_t i = 0; i < w; ++i)
                    for (auto bits = cand[i]; bits != 0; bits &= bits - 1) {
                        auto u = i * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                        auto r = g_.row(u);
                        for (std::size_t j = 0; j < w; ++j)
                            next_common[j] = common[j] & r[j];
                        fill_above(next_cand, u, g_.size());
                        for (std::size_t j = 0; j < w; ++j)
                            next_cand[j] &= next_common[j];
                        current.push_back(u);
                        search(next_common, next_cand, size + 1);
                        current.pop_back();
                    }
            }

            const Graph & g_;
            std::size_t target_;
            const Limits & limits_;
            std::uint64_t nodes_ = 0;
            ExtensionProfile profile_;
            std::vector<std::vector<Vertex>> cliques_;
        };

        auto all_vertices(const Graph & g) -> std::vector<Word>
        {
            std::vector<Word> s(g.words(), ~Word{0});
            if (g.size() % 64 != 0 && ! s.empty())
                s.back() = (Word{1} << (g.size() % 64)) - 1;
            return s;
        }
    }

    auto extension_profile(const Graph & g, std::size_t k, std::span<const Vertex> base, const Limits & limits)
        -> ExtensionProfile
    {
        if (g.is_loop_graph())
            throw InvalidInput("extension profiles are not defined for the loop graph T");
        if (! is_clique(g, base))
            throw InvalidInput("base vertex set is not a clique");
        if (base.size() > k)
            return {};
        auto common = all_vertices(g);
        for (auto v : base) {
            auto r = g.row(v);
            for (std::size_t i = 0; i < common.size(); ++i)
                common[i] &= r[i];
        }
        ProfileSearch search(g, k, limits);
        search.run(std::move(common), base.size());
        return search.profile();
    }

    auto enumerate_cliques(const Graph & g, std::size_t k, const Limits & limits) -> std::vector<std::vector<Vertex>>
    {
        if (g.is_loop_graph())
            throw InvalidInput("clique enumeration is not defined for the loop graph T");
        ProfileSearch search(g, k, limits);
        search.keep_cliques = true;
        search.run(all_vertices(g), 0);
        return std::move(search.cliques());
    }

    namespace
    {
        class MaxCliqueSearch
        {
        public:
            MaxCliqueSearch(const Graph & g, const Limits & limits) : g_(g), limits_(limits) {}

            auto run() -> std::size_t
            {
                expand(all_vertices(g_), 0);
                return best_;
            }

        private:
            /// Greedy sequential colouring of p; order/bounds list vertices by
            /// non-decreasing colour so the last entry carries the largest bound.
            auto colour(const std::vector<Word> & p, std::vector<Vertex> & order, std::vector<std::size_t> & bounds)
                -> void
            {
                auto w = g_.words();
                std::vector<Word> uncoloured = p, available(w);
                std::size_t colour = 0;
                while (popcount(uncoloured) > 0) {
                    ++colour;
                    available = uncoloured;
                    for (std::size_t i = 0; i < w; ++i)
                        while (available[i] != 0) {
                            auto u = i * 64 + static_cast<std::size_t>(std::countr_zero(available[i]));
                            available[i] &= available[i] - 1;
                            uncoloured[i] &= ~(Word{1} << (u % 64));
                            auto r = g_.row(u);
                            for (std::size_t j = i; j < w; ++j)
                                available[j] &= ~r[j];
                            order.push_back(u);
                            bounds.push_back(colour);
                        }
                }
            }

            auto expand(std::vector<Word> p, std::size_t size) -> void
            {
                if (++nodes_ > limits_.census_node_budget)
                    throw BudgetExceeded(budget_message(limits_));
                std::vector<Vertex> order;
                std::vector<std::size_t> bounds;
                colour(p, order, bounds);
                if (order.empty()) {
                    best_ = std::max(best_, size);
                    return;
                }
                std::vector<Word> next(g_.words());
                for (auto i = order.size(); i-- > 0;) {
                    if (size + bounds[i] <= best_)
                        return;
                    auto v = order[i];
                    auto r = g_.row(v);
                    for (std::size_t j = 0; j < next.size(); ++j)
                        next[j] = p[j] & r[j];
                    expand(next, size + 1);
                    p[v / 64] &= ~(Word{1} << (v % 64));
                }
            }

            const Graph & g_;
            const Limits & limits_;
            std::uint64_t nodes_ = 0;
            std::size_t best_ = 0;
        };
    }

    auto max_clique_order(const Graph & g, const Limits & limits) -> std::size_t
    {
        if (g.is_loop_graph())
            throw InvalidInput("the loop graph T has cliques of every order");
        return MaxCliqueSearch(g, limits).run();
    }
}
