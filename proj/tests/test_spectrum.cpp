#include <catch2/catch_amalgamated.hpp>

#include "schemebounds/families.hpp"
#include "schemebounds/spectrum.hpp"

using namespace schemebounds;

TEST_CASE("RelationSet sorts, deduplicates, and rejects the identity") {
    const RelationSet r({3, 1, 3, 2});
    CHECK(r.members() == std::vector<unsigned>{1, 2, 3});
    CHECK(r.max_index() == 3);
    CHECK(r.contains(2));
    CHECK_FALSE(r.contains(4));
    CHECK(r.to_string() == "{1,2,3}");
    CHECK_THROWS_AS(RelationSet({}), std::domain_error);
    CHECK_THROWS_AS(RelationSet({0, 1}), std::domain_error);
}

TEST_CASE("union_spectrum aggregates equal eigenvalues") {
    const UnionSpectrum sp = union_spectrum(hamming(3), RelationSet({1, 3}));
    REQUIRE(sp.pairs.size() == 3);
    CHECK(sp.pairs[0] == std::pair<Rational, Integer>{4, 1});
    CHECK(sp.pairs[1] == std::pair<Rational, Integer>{0, 6});
    CHECK(sp.pairs[2] == std::pair<Rational, Integer>{-4, 1});
    CHECK(sp.n == 8);
    CHECK(sp.valency == 4);
}

TEST_CASE("union_spectrum is sorted descending and sums multiplicities to n") {
    const SchemeParameters s = cameron_seidel(2);
    const UnionSpectrum sp = union_spectrum(s, RelationSet({1, 2, 3}));
    Integer total = 0;
    for (std::size_t i = 0; i + 1 < sp.pairs.size(); ++i) {
        CHECK(sp.pairs[i].first > sp.pairs[i + 1].first);
    }
    for (const auto& [value, mult] : sp.pairs) {
        CHECK(mult > 0);
        total += mult;
    }
    CHECK(total == s.order);
    CHECK(sp.valency == sp.pairs.front().first);

    // the union of all relations is the complete graph on 128 vertices
    REQUIRE(sp.pairs.size() == 2);
    CHECK(sp.pairs[0] == std::pair<Rational, Integer>{127, 1});
    CHECK(sp.pairs[1] == std::pair<Rational, Integer>{-1, 127});
}

TEST_CASE("single-relation spectra read off an eigenmatrix column") {
    const UnionSpectrum cube = union_spectrum(hamming(3), RelationSet({1}));
    REQUIRE(cube.pairs.size() == 4);
    CHECK(cube.pairs[0] == std::pair<Rational, Integer>{3, 1});
    CHECK(cube.pairs[1] == std::pair<Rational, Integer>{1, 3});
    CHECK(cube.pairs[2] == std::pair<Rational, Integer>{-1, 3});
    CHECK(cube.pairs[3] == std::pair<Rational, Integer>{-3, 1});

    const UnionSpectrum cs = union_spectrum(cameron_seidel(2), RelationSet({3}));
    REQUIRE(cs.pairs.size() == 4);
    CHECK(cs.pairs[0] == std::pair<Rational, Integer>{42, 1});
    CHECK(cs.pairs[1] == std::pair<Rational, Integer>{2, 105});
    CHECK(cs.pairs[2] == std::pair<Rational, Integer>{-6, 7});
    CHECK(cs.pairs[3] == std::pair<Rational, Integer>{-14, 15});
}

TEST_CASE("union_spectrum rejects out-of-range relations") {
    CHECK_THROWS_AS(union_spectrum(gq_point_graph(2), RelationSet({3})), std::domain_error);
}

TEST_CASE("inertia bound counts zeros on both sides") {
    // spectrum 4, 0 x6, -4: six zeros join whichever side, giving 7 / 7
    CHECK(inertia_bound(union_spectrum(hamming(3), RelationSet({1, 3}))) == 7);
    // cube graph: 3, 1 x3, -1 x3, -3
    CHECK(inertia_bound(union_spectrum(hamming(3), RelationSet({1}))) == 4);
    // complete graph: 4, -1 x4
    CHECK(inertia_bound(union_spectrum(complete_graph(5), RelationSet({1}))) == 1);
}

TEST_CASE("ratio bound on regular graphs") {
    CHECK(ratio_bound(union_spectrum(complete_graph(5), RelationSet({1}))) == 1);
    CHECK(ratio_bound(union_spectrum(hamming(3), RelationSet({1}))) == 4);
    // 5-cube: 32 * 5 / (5 + 5)
    CHECK(ratio_bound(union_spectrum(hamming(5), RelationSet({1}))) == 16);
    // 16 * 2 / (10 + 2): non-integral value stays exact
    CHECK(ratio_bound(union_spectrum(hamming(4), RelationSet({1, 2}))) == Rational(8, 3));
}

TEST_CASE("ratio bound requires a negative eigenvalue") {
    UnionSpectrum fake;
    fake.n = 4;
    fake.valency = 2;
    fake.pairs = {{Rational(2), Integer(2)}, {Rational(0), Integer(2)}};
    CHECK_THROWS_AS(ratio_bound(fake), std::domain_error);
}
