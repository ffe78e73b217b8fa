#include "mvl/selftest.hpp"

#include "mvl/elim_count.hpp"
#include "mvl/sign_vector.hpp"

#include <random>

namespace mvl {

namespace {

class Checker {
public:
    explicit Checker(SelftestResult& result) : result_(result) {}

    void family(const std::vector<SignVector>& xs) {
        const std::size_t n = xs.front().size();
        SignSet set(xs.begin(), xs.end());
        for (const auto& x : xs) {
            std::vector<TotalSignVector> single{x};
            expect(count_ze_single(x) == count_ze_oracle(single, n), "single", xs);
        }
        SignMatrix m(xs);
        expect(count_ze_intersection(m) == intersect_ze_oracle(m), "intersection", xs);
        expect(count_ze_set(set) == count_ze_oracle(set, n), "inclusion-exclusion", xs);
        if (xs.size() == 2) {
            const PairCounts pc = count_pair(profile_pair(m));
            expect(pc.intersection == intersect_ze_oracle(m), "pair intersection", xs);
            expect(pc.union_size == count_ze_oracle(set, n), "pair union", xs);
        }
    }

private:
    void expect(bool ok, const char* what, const std::vector<SignVector>& xs) {
        ++result_.checks;
        if (ok) return;
        std::string msg = std::string(what) + " count disagrees with the oracle for {";
        for (std::size_t i = 0; i < xs.size(); ++i) msg += (i ? "," : "") + xs[i].str();
        result_.failures.push_back(msg + "}");
    }

    SelftestResult& result_;
};

void subsets(const std::vector<SignVector>& universe, std::size_t max_size, std::size_t start,
             std::vector<SignVector>& chosen, Checker& check) {
    if (!chosen.empty()) check.family(chosen);
    if (chosen.size() == max_size) return;
    for (std::size_t i = start; i < universe.size(); ++i) {
        chosen.push_back(universe[i]);
        subsets(universe, max_size, i + 1, chosen, check);
        chosen.pop_back();
    }
}

}  // namespace

SelftestResult run_oracle_selftest(const SelftestOptions& options) {
    SelftestResult result;
    Checker check(result);
    for (std::size_t n = 1; n <= options.exhaustive_max_n; ++n) {
        const auto universe = enumerate_zs(n);
        std::vector<SignVector> chosen;
        subsets(universe, options.exhaustive_max_size, 0, chosen, check);
    }

    std::mt19937_64 rng(options.seed);
    std::vector<std::vector<SignVector>> universes;
    for (std::size_t n = 1; n <= options.random_max_n; ++n) universes.push_back(enumerate_zs(n));
    for (std::size_t t = 0; t < options.random_instances; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, options.random_max_n)(rng);
        const auto& universe = universes[n - 1];
        const std::size_t want =
            std::uniform_int_distribution<std::size_t>(1, std::min(options.random_max_size, universe.size()))(rng);
        SignSet picked;
        while (picked.size() < want) {
            picked.insert(universe[std::uniform_int_distribution<std::size_t>(0, universe.size() - 1)(rng)]);
        }
        check.family(std::vector<SignVector>(picked.begin(), picked.end()));
    }
    return result;
}

}  // namespace mvl
