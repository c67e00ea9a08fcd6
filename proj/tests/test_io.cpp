#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "qpmut/io.hpp"
#include "qpmut/verify.hpp"

using namespace qpmut;

namespace {

const char* kQuiverJson =
    R"({"schema_version":1,"n":2,"r":2,"arrows":[{"id":"a","src":1,"tgt":2}]})";

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("quiver JSON round trip") {
    IceQuiver q = quiver_from_json(kQuiverJson);
    CHECK(q.n() == 2);
    CHECK(q.r() == 2);
    CHECK(q.arrows().size() == 1);
    CHECK(quiver_from_json(quiver_to_json(q)) == q);

    // Mutated arrow names (stars, composites) survive serialization.
    IceQuiver m = mutate_quiver(IceQuiver(3, 3, {{"a", 1, 2}, {"b", 2, 3}}), 2);
    CHECK(quiver_from_json(quiver_to_json(m)) == m);
}

TEST_CASE("quiver JSON rejections name the offending path") {
    std::string unknown =
        R"({"schema_version":1,"n":2,"r":2,"arrows":[],"bogus":3})";
    CHECK(message_of([&] { quiver_from_json(unknown); }).find("bogus") != std::string::npos);

    std::string badver = R"({"schema_version":2,"n":2,"r":2,"arrows":[]})";
    CHECK(message_of([&] { quiver_from_json(badver); }).find("schema_version") !=
          std::string::npos);

    std::string badarrow =
        R"({"schema_version":1,"n":2,"r":2,"arrows":[{"id":"a","src":1,"tgt":2,"x":0}]})";
    CHECK(message_of([&] { quiver_from_json(badarrow); }).find("arrows[0]") !=
          std::string::npos);

    CHECK_THROWS_AS(quiver_from_json("not json"), parse_error);
    // Structural validation still applies after parsing.
    std::string loop = R"({"schema_version":1,"n":2,"r":2,"arrows":[{"id":"a","src":1,"tgt":1}]})";
    CHECK_THROWS_AS(quiver_from_json(loop), input_error);
}

TEST_CASE("seed JSON round trip through mutations") {
    IceQuiver q = principal_extension(IceQuiver(2, 2, {{"a", 1, 2}}));
    Seed s = mutate_seed(mutate_seed(Seed::initial(q), 1), 2);
    Seed t = seed_from_json(seed_to_json(s));
    CHECK(t == s);

    std::string short_cluster = std::string(R"({"schema_version":1,"quiver":)") + kQuiverJson +
                                R"(,"cluster":["x1"]})";
    CHECK_THROWS_AS(seed_from_json(short_cluster), parse_error);
}

TEST_CASE("QP JSON round trip") {
    QP qp = QP::make(IceQuiver(3, 3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}}), 9);
    qp.w.add_cycle({"a", "b", "c"}, Rational(-2, 3));
    QP t = qp_from_json(qp_to_json(qp));
    CHECK(t.quiver == qp.quiver);
    CHECK(t.w == qp.w);
    CHECK(t.truncation_degree == 9);

    std::string lowtrunc = std::string(R"({"schema_version":1,"quiver":)") + kQuiverJson +
                           R"(,"truncation_degree":2,"potential":[]})";
    CHECK_THROWS_AS(qp_from_json(lowtrunc), parse_error);
}

TEST_CASE("rep JSON round trip keeps exact rationals") {
    QP qp = QP::make(IceQuiver(2, 2, {{"a", 1, 2}}), 12);
    DecoratedRep m{qp, {2, 1}, {1, 0}, {}};
    QMatrix ma(2, 1);
    ma.at(0, 0) = Rational(1, 3);
    ma.at(1, 0) = Rational(-7, 2);
    m.maps.emplace("a", ma);
    m.validate();

    DecoratedRep t = rep_from_json(rep_to_json(m));
    CHECK(t.dims == m.dims);
    CHECK(t.vdims == m.vdims);
    CHECK(t.maps.at("a") == ma);

    // Loading validates shapes: drop a row.
    std::string bad = rep_to_json(m);
    std::size_t pos = bad.find("\"-7/2\"");
    REQUIRE(pos != std::string::npos);
    // Changing dims without changing the matrix must be rejected.
    std::size_t dpos = bad.find("\"dims\": [\n    2,");
    REQUIRE(dpos != std::string::npos);
    bad.replace(dpos, 16, "\"dims\": [\n    3,");
    CHECK_THROWS_AS(rep_from_json(bad), parse_error);
}

TEST_CASE("reachable reps survive a JSON round trip") {
    QP qp = QP::make(IceQuiver(3, 3, {{"a", 1, 2}, {"b", 2, 3}}), 12);
    DecoratedRep m = reachable_rep(qp, {1, 2}, 1);
    DecoratedRep t = rep_from_json(rep_to_json(m));
    CHECK(are_isomorphic(t, m));
    CHECK(g_vector_rep(t) == g_vector_rep(m));
}

TEST_CASE("config parsing") {
    Config c = config_from_json(
        R"({"schema_version":1,"truncation_degree":8,"primes":[5,7],"max_seeds":50,)"
        R"("max_terms":600,"iso_draws":3,"iso_seed":99})");
    CHECK(c.truncation_degree == 8);
    CHECK(c.primes == std::vector<long>{5, 7});
    CHECK(c.max_seeds == 50);
    CHECK(c.max_terms == 600);
    CHECK(c.iso_draws == 3);
    CHECK(c.iso_seed == 99);

    // Missing fields fall back to defaults.
    Config d = config_from_json(R"({"schema_version":1})");
    CHECK(d.truncation_degree == 12);
    CHECK(d.max_seeds == 10000);
    CHECK(d.primes.empty());

    CHECK_THROWS_AS(config_from_json(R"({"schema_version":1,"truncation_degree":2})"),
                    input_error);
    CHECK_THROWS_AS(config_from_json(R"({"schema_version":1,"huh":1})"), parse_error);
}

TEST_CASE("config from environment") {
    std::string path = "/tmp/qpmut_test_config.json";
    write_file(path, R"({"schema_version":1,"iso_draws":7})");
    setenv("QPMUT_CONFIG", path.c_str(), 1);
    Config c = load_config_from_env();
    CHECK(c.iso_draws == 7);
    unsetenv("QPMUT_CONFIG");
    Config d = load_config_from_env();
    CHECK(d.iso_draws == 5);
    std::remove(path.c_str());
}

TEST_CASE("file helpers") {
    std::string path = "/tmp/qpmut_test_file.txt";
    write_file(path, "hello\n");
    CHECK(read_file(path) == "hello\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file(path), input_error);
}
