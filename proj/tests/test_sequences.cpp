#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "mahler/sequences.hpp"

using namespace mahler;

namespace {

// Independent oracles, written straight from the defining recursions.

int tm_oracle(std::uint64_t n) {
    if (n == 0) return 0;
    if (n % 2 == 0) return tm_oracle(n / 2);
    return 1 - tm_oracle(n / 2);
}

int pf_oracle(std::uint64_t n) {
    if (n % 4 == 0) return 1;
    if (n % 4 == 2) return 0;
    return pf_oracle(n / 2);  // n odd: u_{2k+1} = u_k
}

// Sums of distinct 2*3^k below 3^10, as a set.
std::set<std::uint64_t> cantor_subset_sums() {
    std::vector<std::uint64_t> gens;
    std::uint64_t p = 1;
    for (int k = 0; k < 10; ++k) {
        gens.push_back(2 * p);
        p *= 3;
    }
    std::set<std::uint64_t> sums;
    for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (mask & (1u << k)) s += gens[k];
        sums.insert(s);
    }
    return sums;
}

}  // namespace

TEST_CASE("known prefixes") {
    std::vector<int> tm{0, 1, 1, 0, 1, 0, 0, 1};
    std::vector<int> pf{1, 1, 0, 1, 1, 0, 0, 1};
    std::vector<int> ca{1, 0, 1, 0, 0, 0, 1, 0, 1};
    CHECK(sequence_prefix(SequenceKind::ThueMorse, 8) == tm);
    CHECK(sequence_prefix(SequenceKind::Paperfolding, 8) == pf);
    CHECK(sequence_prefix(SequenceKind::Cantor, 9) == ca);
    CHECK(sequence_bit(SequenceKind::ThueMorse, 0) == 0);
    CHECK(sequence_prefix(SequenceKind::Cantor, 1) == std::vector<int>{1});
    CHECK(sequence_prefix(SequenceKind::ThueMorse, 4) == std::vector<int>{0, 1, 1, 0});
    CHECK(sequence_prefix(SequenceKind::Paperfolding, 3) == std::vector<int>{1, 1, 0});
    CHECK(sequence_prefix(SequenceKind::Paperfolding, 1) == std::vector<int>{1});
}

TEST_CASE("thue-morse matches the recursion for n < 2^16") {
    for (std::uint64_t n = 0; n < (1u << 16); ++n)
        REQUIRE(sequence_bit(SequenceKind::ThueMorse, n) == tm_oracle(n));
}

TEST_CASE("paperfolding clauses are consistent and cover every index") {
    // Every n < 2^16 is matched by exactly one clause and the computed
    // table satisfies all three clauses simultaneously.
    std::vector<int> u(1 << 16);
    for (std::uint64_t n = 0; n < u.size(); ++n)
        u[n] = sequence_bit(SequenceKind::Paperfolding, n);
    for (std::uint64_t n = 0; 4 * n < u.size(); ++n) REQUIRE(u[4 * n] == 1);
    for (std::uint64_t n = 0; 4 * n + 2 < u.size(); ++n) REQUIRE(u[4 * n + 2] == 0);
    for (std::uint64_t n = 0; 2 * n + 1 < u.size(); ++n) REQUIRE(u[2 * n + 1] == u[n]);
    for (std::uint64_t n = 0; n < u.size(); ++n)
        REQUIRE(u[n] == pf_oracle(n));
}

TEST_CASE("cantor bit agrees with the subset-sum oracle below 3^10") {
    auto sums = cantor_subset_sums();
    std::uint64_t limit = 59049;  // 3^10
    for (std::uint64_t n = 0; n < limit; ++n)
        REQUIRE(sequence_bit(SequenceKind::Cantor, n) == (sums.count(n) ? 1 : 0));
}

TEST_CASE("prefix rejects zero length") {
    CHECK_THROWS_AS(sequence_prefix(SequenceKind::Cantor, 0), std::invalid_argument);
}

TEST_CASE("kind names round-trip") {
    for (auto k : {SequenceKind::ThueMorse, SequenceKind::Paperfolding, SequenceKind::Cantor})
        CHECK(parse_sequence_kind(sequence_name(k)) == k);
    CHECK(!parse_sequence_kind("fibonacci"));
}
