#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qmr/characters.hpp"
#include "qmr/partition.hpp"
#include "qmr/permutation.hpp"
#include "qmr/tableau.hpp"
#include "qmr/young.hpp"

using namespace qmr;

namespace {

// Brute-force count of standard fillings, independent of syt_enumerate:
// place 1..k cell by cell in row-major order over all permutations.
int brute_force_syt_count(const Partition& shape) {
    const int k = shape.weight();
    std::vector<int> fill(static_cast<std::size_t>(k));
    std::iota(fill.begin(), fill.end(), 1);
    int count = 0;
    do {
        StandardTableau t;
        t.shape = shape;
        std::size_t pos = 0;
        for (int i = 0; i < shape.height(); ++i) {
            std::vector<int> row;
            for (int j = 0; j < shape.row(i); ++j) row.push_back(fill[pos++]);
            t.rows.push_back(std::move(row));
        }
        if (t.is_standard()) ++count;
    } while (std::next_permutation(fill.begin(), fill.end()));
    return count;
}

Permutation random_permutation(int k, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation::from_images(v);
}

// Weyl dimension formula for the U(d) irrep of highest weight lambda
// (padded with zeros to d rows). Oracle-only quantity.
std::int64_t weyl_dimension(int d, const Partition& lambda) {
    std::vector<int> l(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < lambda.height(); ++i) l[static_cast<std::size_t>(i)] = lambda.row(i);
    double num = 1.0, den = 1.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            num *= l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    return static_cast<std::int64_t>(std::llround(num / den));
}

std::int64_t factorial(int k) {
    std::int64_t f = 1;
    for (int t = 2; t <= k; ++t) f *= t;
    return f;
}

// Size of the conjugacy class with the given cycle type: k!/z, with
// z = prod_i i^{m_i} m_i!.
std::int64_t class_size(const Partition& type) {
    std::map<int, int> mult;
    for (int p : type.parts) mult[p]++;
    std::int64_t z = 1;
    for (auto [len, m] : mult) {
        for (int t = 0; t < m; ++t) z *= len;
        z *= factorial(m);
    }
    return factorial(type.weight()) / z;
}

}  // namespace

TEST_CASE("enumerate_partitions: listed examples and ordering") {
    auto p42 = enumerate_partitions(4, 2);
    REQUIRE(p42.size() == 3);
    CHECK(p42[0].parts == std::vector<int>{4});
    CHECK(p42[1].parts == std::vector<int>{3, 1});
    CHECK(p42[2].parts == std::vector<int>{2, 2});

    auto p33 = enumerate_partitions(3, 3);
    REQUIRE(p33.size() == 3);
    CHECK(p33[0].parts == std::vector<int>{3});
    CHECK(p33[1].parts == std::vector<int>{2, 1});
    CHECK(p33[2].parts == std::vector<int>{1, 1, 1});

    auto p21 = enumerate_partitions(2, 1);
    REQUIRE(p21.size() == 1);
    CHECK(p21[0].parts == std::vector<int>{2});

    CHECK_THROWS_AS(enumerate_partitions(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(3, 0), std::invalid_argument);

    for (int k = 1; k <= 7; ++k) {
        auto all = enumerate_partitions(k, k);
        std::set<std::vector<int>> uniq;
        for (const auto& p : all) {
            CHECK(p.weight() == k);
            uniq.insert(p.parts);
        }
        CHECK(uniq.size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end(),
                             [](const Partition& a, const Partition& b) { return b < a; }));
    }
}

TEST_CASE("partition invariants") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    Partition p({3, 1});
    CHECK(p.weight() == 4);
    CHECK(p.height() == 2);
    CHECK(p.conjugate().parts == std::vector<int>{2, 1, 1});
}

TEST_CASE("hook_dimension against brute-force standard fillings") {
    CHECK(hook_dimension(Partition({2, 1})) == 2);
    CHECK(hook_dimension(Partition({3})) == 1);
    CHECK(hook_dimension(Partition({2, 2})) == 2);  // brute force: 2 fillings
    CHECK(brute_force_syt_count(Partition({2, 2})) == 2);
    for (int k = 1; k <= 6; ++k)
        for (const auto& lam : enumerate_partitions(k, k))
            CHECK(hook_dimension(lam) == brute_force_syt_count(lam));
}

TEST_CASE("syt_enumerate: counts, standardness, determinism") {
    CHECK(syt_enumerate(Partition({3})).size() == 1);
    CHECK(syt_enumerate(Partition({1, 1, 1})).size() == 1);
    CHECK(syt_enumerate(Partition({2, 1})).size() == 2);

    for (int k = 1; k <= 6; ++k)
        for (const auto& lam : enumerate_partitions(k, k)) {
            auto tabs = syt_enumerate(lam);
            CHECK(static_cast<std::int64_t>(tabs.size()) == hook_dimension(lam));
            std::set<std::vector<std::vector<int>>> uniq;
            for (const auto& t : tabs) {
                CHECK(t.is_standard());
                uniq.insert(t.rows);
            }
            CHECK(uniq.size() == tabs.size());
            CHECK(syt_enumerate(lam) == tabs);  // deterministic
        }
}

TEST_CASE("yor_generator: 1x1 representations and (2,1)") {
    auto triv = yor_generator(Partition({2}), 1);
    REQUIRE(triv.rows() == 1);
    CHECK(triv(0, 0) == doctest::Approx(1.0));

    auto sign = yor_generator(Partition({1, 1}), 1);
    REQUIRE(sign.rows() == 1);
    CHECK(sign(0, 0) == doctest::Approx(-1.0));

    auto m = yor_generator(Partition({2, 1}), 1);
    REQUIRE(m.rows() == 2);
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK((m * m - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
    // trace equals the character of a transposition in (2,1), which is 0
    CHECK(character_mn(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(m.trace() == doctest::Approx(0.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0));
    CHECK(es.eigenvalues()(1) == doctest::Approx(1.0));

    CHECK_THROWS_AS(yor_generator(Partition({2, 1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(yor_generator(Partition({2, 1}), 3), std::invalid_argument);
}

TEST_CASE("rep_matrix: trivial, sign, and 3-cycle trace") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        auto sigma = random_permutation(3, rng);
        auto t = rep_matrix(Partition({3}), sigma);
        CHECK(t(0, 0) == doctest::Approx(1.0));
    }
    auto s = rep_matrix(Partition({1, 1, 1}), Permutation::from_cycle(3, {0, 1}));
    CHECK(s(0, 0) == doctest::Approx(-1.0));

    auto r = rep_matrix(Partition({2, 1}), Permutation::from_cycle(3, {0, 1, 2}));
    CHECK(character_mn(Partition({2, 1}), Partition({3})) == -1);
    CHECK(r.trace() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK((r.transpose() * r - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);

    CHECK_THROWS_AS(rep_matrix(Partition({2, 1}), Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("homomorphism and orthogonality, all shapes k <= 5") {
    std::mt19937_64 rng(42);
    for (int k = 2; k <= 5; ++k) {
        for (const auto& lam : enumerate_partitions(k, k)) {
            YorRep rep(lam);
            for (int trial = 0; trial < 200; ++trial) {
                auto sigma = random_permutation(k, rng);
                auto tau = random_permutation(k, rng);
                auto rs = rep.matrix(sigma);
                auto rt = rep.matrix(tau);
                auto rst = rep.matrix(sigma * tau);
                CHECK((rs * rt - rst).cwiseAbs().maxCoeff() <= 1e-12);
                CHECK((rs.transpose() * rs
                       - Eigen::MatrixXd::Identity(rep.dim(), rep.dim()))
                          .cwiseAbs()
                          .maxCoeff() <= 1e-12);
                CHECK((rep.matrix(sigma.inverse()) - rs.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
            }
        }
    }
}

TEST_CASE("character consistency: rep traces match Murnaghan-Nakayama") {
    for (int k = 1; k <= 5; ++k) {
        for (const auto& lam : enumerate_partitions(k, k)) {
            YorRep rep(lam);
            for (const auto& type : enumerate_partitions(k, k)) {
                // one representative per cycle type: consecutive cycles
                Permutation sigma = Permutation::identity(k);
                int off = 0;
                for (int len : type.parts) {
                    std::vector<int> cyc;
                    for (int t = 0; t < len; ++t) cyc.push_back(off + t);
                    sigma = sigma * Permutation::from_cycle(k, cyc);
                    off += len;
                }
                const double tr = rep.matrix(sigma).trace();
                CHECK(std::abs(tr - static_cast<double>(character_mn(lam, type))) <= 1e-10);
            }
        }
    }
}

TEST_CASE("character examples and orthogonality of the character table") {
    CHECK(character_mn(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character_mn(Partition({3}), Partition({3})) == 1);
    CHECK(character_mn(Partition({3}), Partition({2, 1})) == 1);
    CHECK(character_mn(Partition({2, 1}), Partition({3})) == -1);
    CHECK_THROWS_AS(character_mn(Partition({2, 1}), Partition({2})), std::invalid_argument);

    // column orthogonality: sum_lambda chi(mu) chi(nu) = delta * k!/|class mu|
    for (int k = 1; k <= 6; ++k) {
        auto types = enumerate_partitions(k, k);
        auto shapes = enumerate_partitions(k, k);
        for (const auto& mu : types)
            for (const auto& nu : types) {
                std::int64_t dot = 0;
                for (const auto& lam : shapes) dot += character_mn(lam, mu) * character_mn(lam, nu);
                if (mu == nu)
                    CHECK(dot == factorial(k) / class_size(mu));
                else
                    CHECK(dot == 0);
            }
    }
}

TEST_CASE("dimension identity: sum of squared dims is k! for k <= 7") {
    for (int k = 1; k <= 7; ++k) {
        std::int64_t sum = 0;
        for (const auto& lam : enumerate_partitions(k, k)) {
            auto d = hook_dimension(lam);
            sum += d * d;
        }
        CHECK(sum == factorial(k));
    }
}

TEST_CASE("Schur-Weyl trace identity for k <= 3, d <= 3") {
    for (int k = 1; k <= 3; ++k)
        for (int d = 1; d <= 3; ++d)
            for (const auto& sigma : all_permutations(k)) {
                double lhs = 0;
                for (const auto& lam : enumerate_partitions(k, d))
                    lhs += static_cast<double>(weyl_dimension(d, lam))
                           * static_cast<double>(character_mn(lam, sigma.cycle_type()));
                const double rhs = std::pow(static_cast<double>(d), sigma.cycle_count());
                CHECK(lhs == doctest::Approx(rhs));
            }
}

TEST_CASE("permutation basics") {
    auto id3 = Permutation::identity(3);
    CHECK(id3.is_identity());
    auto c = Permutation::from_cycle(4, {0, 2, 3});
    CHECK((c * c.inverse()).is_identity());
    CHECK(c.cycle_type().parts == std::vector<int>{3, 1});
    CHECK(c.cycle_count() == 2);
    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycle(3, {0, 0}), std::invalid_argument);

    // conjugation: pi sigma pi^-1 relabels points through pi
    auto sigma = Permutation::from_cycle(4, {0, 1});
    auto pi = Permutation::from_cycle(4, {1, 2});
    CHECK(sigma.conjugate_by(pi) == Permutation::from_cycle(4, {0, 2}));
}

TEST_CASE("conjugation_orbit: sizes and invariances") {
    auto id_tuple = std::vector<Permutation>{Permutation::identity(3), Permutation::identity(3)};
    CHECK(conjugation_orbit(id_tuple).size() == 1);

    auto s2 = std::vector<Permutation>{Permutation::from_cycle(2, {0, 1})};
    CHECK(conjugation_orbit(s2).size() == 1);

    auto s3 = std::vector<Permutation>{Permutation::from_cycle(3, {0, 1})};
    auto orb = conjugation_orbit(s3);
    CHECK(orb.size() == 3);
    std::set<std::vector<int>> images;
    for (const auto& t : orb) images.insert(t[0].images());
    CHECK(images.count(Permutation::from_cycle(3, {0, 1}).images()) == 1);
    CHECK(images.count(Permutation::from_cycle(3, {0, 2}).images()) == 1);
    CHECK(images.count(Permutation::from_cycle(3, {1, 2}).images()) == 1);

    // orbit size divides k!
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Permutation> tup{random_permutation(4, rng), random_permutation(4, rng)};
        auto o = conjugation_orbit(tup);
        CHECK(factorial(4) % static_cast<std::int64_t>(o.size()) == 0);
    }
}
