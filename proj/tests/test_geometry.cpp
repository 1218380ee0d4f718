#include "rydwire/catalog.hpp"
#include "rydwire/error.hpp"
#include "rydwire/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

using namespace rydwire;

namespace {

AtomArray load(const std::string& file) {
    std::ifstream in(std::string(RYDWIRE_DATA_DIR) + "/arrays/" + file);
    REQUIRE(in);
    return read_array(in);
}

struct Row {
    const char* file;
    const char* graph;
    std::size_t atoms;
};

const Row kRows[] = {
    {"fig2a-P4.txt", "P4", 4},          {"fig2b-C4.txt", "C4", 4},
    {"fig2c-C6.txt", "C6", 6},          {"fig2g-S4.txt", "S4", 4},
    {"fig2h-3-pan.txt", "3-pan-fig2", 4}, {"fig2i-5-pan.txt", "5-pan", 6},
    {"fig3b-K33.txt", "K3,3exp", 20},   {"fig4c-S6.txt", "S6exp", 13},
};

AtomArray transformed(const AtomArray& a, double angle, const Vec3& shift) {
    std::vector<Vec3> p;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (const auto& x : a.positions()) {
        // About z, then about x.
        const Vec3 r1{c * x[0] - s * x[1], s * x[0] + c * x[1], x[2]};
        const Vec3 r2{r1[0], c * r1[1] - s * r1[2], s * r1[1] + c * r1[2]};
        p.push_back({r2[0] + shift[0], r2[1] + shift[1], r2[2] + shift[2]});
    }
    return AtomArray(p, a.roles());
}

} // namespace

TEST_CASE("blockade radius") {
    const double c6 = kTableRabi * std::pow(9.8, 6);
    CHECK(blockade_radius(c6, kTableRabi) == doctest::Approx(9.8).epsilon(1e-12));
    CHECK(c6 / (2 * M_PI) == doctest::Approx(7.795e5).epsilon(1e-3));
    CHECK(blockade_radius(1, 1) == 1.0);
    CHECK(blockade_radius(64, 1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(blockade_radius(0, 1), DomainError);
    CHECK_THROWS_AS(blockade_radius(1, -1), DomainError);
    const auto bp = BlockadeParams::from_radius(9.8, kTableRabi);
    CHECK(blockade_radius(bp.c6_over_hbar, bp.rabi_0) == doctest::Approx(bp.r_b).epsilon(1e-12));
}

TEST_CASE("induced graphs of table rows") {
    CHECK(induced_graph(load("fig2a-P4.txt"), 9.8) == catalog_get("P4"));
    CHECK(induced_graph(load("fig2c-C6.txt"), 9.8) == catalog_get("C6"));
    const AtomArray p4 = load("fig2a-P4.txt");
    CHECK(p4.distance(0, 1) == doctest::Approx(std::sqrt(3.5 * 3.5 + 36)).epsilon(1e-12));
    CHECK(p4.distance(0, 2) == doctest::Approx(12.09).epsilon(1e-3));
    const AtomArray one({{0, 0, 0}}, {AtomRole::qubit});
    CHECK(induced_graph(one, 5.0) == Graph(1));
}

TEST_CASE("table rows realize the wired graphs") {
    for (const auto& row : kRows) {
        CAPTURE(row.file);
        const AtomArray a = load(row.file);
        CHECK(a.size() == row.atoms);
        const auto rep = validate_embedding(a, catalog_wired(row.graph).combined(), 9.8);
        CHECK(rep.missing.empty());
        CHECK(rep.spurious.empty());
        CHECK(rep.marginal.empty());
        CHECK(rep.ok());
    }
}

TEST_CASE("K5 row: wire joins file atoms 2 and 3 and has one short non-edge") {
    const AtomArray raw = load("fig3a-K5.txt");
    CHECK(raw.size() == 11);
    const AtomArray a = raw.reordered({1, 2, 5, 4, 3, 6, 7, 8, 9, 10, 11});
    const auto rep = validate_embedding(a, catalog_wired("K5exp").combined(), 9.8);
    CHECK(rep.missing.empty());
    REQUIRE(rep.spurious.size() == 1);
    CHECK(rep.spurious[0].pair == Edge(6, 8));
    CHECK(rep.spurious[0].distance == doctest::Approx(9.68).epsilon(1e-3));
}

TEST_CASE("validate_embedding by construction and on mismatch") {
    const AtomArray a = load("fig3b-K33.txt");
    const auto rep = validate_embedding(a, induced_graph(a, 7.5), 7.5);
    CHECK(rep.ok());
    CHECK_THROWS_AS(validate_embedding(a, catalog_get("K5"), 9.8), InvalidInputError);
    const AtomArray pair({{0, 0, 0}, {9.8, 0, 0}}, {AtomRole::qubit, AtomRole::qubit});
    const auto m = validate_embedding(pair, Graph(2), 9.8);
    CHECK(m.marginal.size() == 1);
    CHECK(m.spurious.empty());
    CHECK(induced_graph(pair, 9.8).n_edges() == 0);
}

TEST_CASE("coincident atoms are rejected") {
    CHECK_THROWS_AS(AtomArray({{1, 2, 3}, {1, 2, 3}}, {AtomRole::qubit, AtomRole::qubit}),
                    InvalidInputError);
}

TEST_CASE("induced graph is invariant under rotation and translation") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uni(-50.0, 50.0);
    for (const auto& row : kRows) {
        const AtomArray a = load(row.file);
        const Graph g = induced_graph(a, 9.8);
        for (int k = 0; k < 5; ++k) {
            const AtomArray b = transformed(a, uni(rng), {uni(rng), uni(rng), uni(rng)});
            CHECK(induced_graph(b, 9.8) == g);
        }
    }
}

TEST_CASE("edge set grows with the blockade radius") {
    const AtomArray a = load("fig3b-K33.txt");
    std::size_t prev = 0;
    for (double r = 1.0; r < 40.0; r += 0.25) {
        const Graph g = induced_graph(a, r);
        CHECK(g.n_edges() >= prev);
        prev = g.n_edges();
    }
    CHECK(prev == 190);
}

TEST_CASE("array file round trip") {
    const AtomArray a = load("fig4c-S6.txt");
    std::stringstream ss;
    write_array(ss, a);
    const AtomArray b = read_array(ss);
    CHECK(b.positions() == a.positions());
    CHECK(b.roles() == a.roles());
    std::istringstream bad("qubit 1 2\n");
    CHECK_THROWS_AS(read_array(bad), InvalidInputError);
}
