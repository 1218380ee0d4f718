#include "rydwire/catalog.hpp"
#include "rydwire/error.hpp"
#include "rydwire/evolve.hpp"
#include "rydwire/ground_state.hpp"
#include "rydwire/histogram.hpp"
#include "rydwire/mis.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <sstream>

using namespace rydwire;

namespace {

const double kU = kDefaultInteractionU;
const AnnealSchedule kTable = AnnealSchedule::from_mhz(4.0, -3.0, 3.0, 0.88);

RydbergHamiltonian graph_h(const Graph& g) {
    return RydbergHamiltonian(HamiltonianSpec::graph_mode(g, kU));
}

Eigen::MatrixXcd dense(const RydbergHamiltonian& h, double omega, double delta) {
    const auto d = static_cast<Eigen::Index>(h.dim());
    Eigen::MatrixXcd m(d, d);
    std::vector<cplx> e(h.dim()), out(h.dim());
    for (Eigen::Index j = 0; j < d; ++j) {
        std::fill(e.begin(), e.end(), cplx{});
        e[static_cast<std::size_t>(j)] = 1.0;
        h.apply(e, out, omega, delta);
        for (Eigen::Index i = 0; i < d; ++i) m(i, j) = out[static_cast<std::size_t>(i)];
    }
    return m;
}

std::vector<std::uint64_t> diagonal_argmin(const RydbergHamiltonian& h, double delta) {
    double emin = 1e300;
    for (std::size_t i = 0; i < h.dim(); ++i) emin = std::min(emin, h.diagonal(i, delta));
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (h.diagonal(i, delta) - emin < 1e-9) out.push_back(i);
    }
    return out;
}

} // namespace

TEST_CASE("schedule examples") {
    auto d = schedule_eval(kTable, 0.0);
    CHECK(d.omega == 0.0);
    CHECK(d.delta == doctest::Approx(-kTwoPi * 3));
    d = schedule_eval(kTable, 2.0);
    CHECK(d.omega == doctest::Approx(kTwoPi * 0.88));
    CHECK(d.delta == doctest::Approx(0.0).epsilon(1e-12));
    d = schedule_eval(kTable, 4.0);
    CHECK(d.omega == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.delta == doctest::Approx(kTwoPi * 3));
    CHECK_THROWS_AS(schedule_eval(kTable, -1e-9), DomainError);
    CHECK_THROWS_AS(schedule_eval(kTable, 4.0 + 1e-9), DomainError);
    CHECK_THROWS_AS(AnnealSchedule(4, 1, 3, 1), DomainError);
    CHECK_THROWS_AS(AnnealSchedule(4, -1, -3, 1), DomainError);
    CHECK_THROWS_AS(AnnealSchedule(0, -1, 3, 1), DomainError);
    const auto plain = AnnealSchedule::from_mhz(4.0, -3.0, 3.0, 0.88, false);
    CHECK(plain.delta_f() == 3.0);
}

TEST_CASE("schedule is continuous and piecewise linear") {
    CHECK(kTable.at(0.4).omega == doctest::Approx(kTable.omega_0()));
    CHECK(kTable.at(3.6).omega == doctest::Approx(kTable.omega_0()));
    CHECK(kTable.at(0.2).omega == doctest::Approx(0.5 * kTable.omega_0()));
    CHECK(kTable.at(0.2).delta == doctest::Approx(kTable.delta_i()));
    double prev_delta = kTable.at(0.0).delta;
    for (double t = 0.0; t <= 4.0; t += 1e-3) {
        const auto d = kTable.at(t);
        CHECK(d.delta >= prev_delta - 1e-12);
        CHECK(std::abs(d.delta - prev_delta) < 0.02);
        prev_delta = d.delta;
    }
}

TEST_CASE("Hamiltonian diagonal examples") {
    const double delta = 1.7;
    const auto h1 = graph_h(Graph(1));
    CHECK(h1.diagonal(1, delta) == doctest::Approx(-delta / 2));
    CHECK(h1.diagonal(0, delta) == doctest::Approx(delta / 2));
    const auto h2 = graph_h(Graph(2, {{1, 2}}));
    CHECK(h2.diagonal(3, delta) - h2.diagonal(0, delta) == doctest::Approx(kU - 2 * delta));
    CHECK(h2.diagonal(3, delta) == doctest::Approx(kU - delta));
    const auto pan = graph_h(catalog_get("3-pan"));
    CHECK(diagonal_argmin(pan, kTwoPi * 3) ==
          std::vector<std::uint64_t>{parse_bitstring("1001"), parse_bitstring("1010")});
    CHECK_THROWS_AS(graph_h(Graph(25)), CapacityError);
}

TEST_CASE("physical couplings") {
    const AtomArray arr({{0, 0, 0}, {7, 0, 0}, {14, 0, 0}},
                        {AtomRole::qubit, AtomRole::qubit, AtomRole::qubit});
    const double c6 = kTableRabi * std::pow(9.8, 6);
    const auto spec = HamiltonianSpec::physical_mode(arr, c6);
    const auto v = spec.pair_couplings();
    CHECK(v[0 * 3 + 1] == doctest::Approx(c6 / std::pow(7.0, 6)));
    CHECK(v[1 * 3 + 0] == v[0 * 3 + 1]);
    CHECK(v[0 * 3 + 2] == doctest::Approx(c6 / std::pow(14.0, 6)));
    CHECK(v[0 * 3 + 2] < v[0 * 3 + 1]);
    CHECK(v[0] == 0.0);
    const RydbergHamiltonian h(spec);
    CHECK(h.interaction_energies()[0b101] == doctest::Approx(c6 / std::pow(14.0, 6)));
    CHECK(h.interaction_energies()[0b111] ==
          doctest::Approx(2 * c6 / std::pow(7.0, 6) + c6 / std::pow(14.0, 6)));
}

TEST_CASE("Hamiltonian is Hermitian") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0.0, 1.0);
    for (const char* name : {"3-pan", "K5", "moser"}) {
        const auto h = graph_h(catalog_get(name));
        std::vector<cplx> phi(h.dim()), psi(h.dim()), hphi(h.dim()), hpsi(h.dim());
        for (auto& x : phi) x = {g(rng), g(rng)};
        for (auto& x : psi) x = {g(rng), g(rng)};
        h.apply(psi, hpsi, 3.1, -1.2);
        h.apply(phi, hphi, 3.1, -1.2);
        cplx a = 0, b = 0;
        for (std::size_t i = 0; i < h.dim(); ++i) {
            a += std::conj(phi[i]) * hpsi[i];
            b += std::conj(psi[i]) * hphi[i];
        }
        CHECK(std::abs(a - std::conj(b)) < 1e-10 * std::abs(a));
    }
}

TEST_CASE("diagonal limit reproduces the oracle for every catalog graph") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const Graph g = catalog_wired(name).combined();
        const auto h = graph_h(g);
        VertexSetFamily ground;
        for (auto i : diagonal_argmin(h, kTwoPi * 3)) ground.insert(excited_atoms(i, g.n_vertices()));
        CHECK(ground == mis_brute_force(g));
    }
}

TEST_CASE("Rabi pi pulse") {
    const auto h = graph_h(Graph(1));
    const double omega = kTwoPi;
    const ConstantDrive pulse(M_PI / omega, omega, 0.0);
    const auto psi = evolve(StateVector(1), h, pulse, 1e-4);
    CHECK(psi.probability(1) == doctest::Approx(1.0).epsilon(1e-12));
    const ConstantDrive half(M_PI / omega / 2, omega, 0.0);
    CHECK(evolve(StateVector(1), h, half, 1e-4).probability(1) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("independent atoms rotate independently across register blocks") {
    // 14 edgeless atoms exercise both the in-block and the high-bit paths.
    const auto h = graph_h(Graph(14));
    const double omega = 2.0;
    const double t = 0.6;
    const auto psi = evolve(StateVector(14), h, ConstantDrive(t, omega, 0.0), 1e-3);
    const double p1 = std::pow(std::sin(omega * t / 2), 2);
    CHECK(psi.probability(0) == doctest::Approx(std::pow(1 - p1, 14)).epsilon(1e-9));
    CHECK(psi.probability(psi.dim() - 1) == doctest::Approx(std::pow(p1, 14)).epsilon(1e-9));
    CHECK(psi.probability(atom_bit(14, 13)) ==
          doctest::Approx(p1 * std::pow(1 - p1, 13)).epsilon(1e-9));
}

TEST_CASE("split step matches the dense propagator") {
    const auto h = graph_h(catalog_get("3-pan"));
    const double omega = 5.0, delta = 2.0, t = 0.5;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(dense(h, omega, delta));
    const Eigen::MatrixXcd u = es.eigenvectors() *
                               (es.eigenvalues() * cplx(0, -t)).array().exp().matrix().asDiagonal() *
                               es.eigenvectors().inverse();
    const auto psi = evolve(StateVector(4), h, ConstantDrive(t, omega, delta), 1e-4);
    for (Eigen::Index i = 0; i < 16; ++i) {
        CHECK(std::abs(psi[static_cast<std::size_t>(i)] - u(i, 0)) < 1e-5);
    }
}

TEST_CASE("zero drive leaves the ground configuration in place") {
    const auto h = graph_h(catalog_get("C6"));
    const auto psi = evolve(StateVector(6), h, ConstantDrive(2.0, 0.0, 5.0), 1e-3);
    CHECK(psi.probability(0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm is conserved through a table sweep") {
    const auto h = graph_h(catalog_wired("K5exp").combined());
    double worst = 0.0;
    EvolveOptions o;
    o.observe_every = 100;
    o.observer = [&](double, const StateVector& s) { worst = std::max(worst, std::abs(s.norm() - 1)); };
    evolve(StateVector(11), h, AnnealSchedule::from_mhz(4, -3, 1.5, 0.88), o);
    CHECK(worst < 1e-9);
}

TEST_CASE("wired C6 sweep ends on the two MIS configurations") {
    const auto h = graph_h(catalog_wired("C6").combined());
    const auto psi = evolve(StateVector(6), h, kTable, kDefaultTimeStep);
    const auto top = measure(psi, 0, 0).ranked();
    const std::set<std::string> best{bitstring(top[0].first, 6), bitstring(top[1].first, 6)};
    CHECK(best == std::set<std::string>{"101001", "010110"});
    CHECK(step_halving_deviation(StateVector(6), h, kTable, kDefaultTimeStep) < 1e-4);
}

TEST_CASE("coarse steps are rejected") {
    const auto h = graph_h(catalog_get("P4"));
    CHECK_THROWS_AS(evolve(StateVector(4), h, kTable, 0.05), AccuracyError);
    CHECK_THROWS_AS(evolve(StateVector(4), h, kTable, 0.0), DomainError);
    StateVector bad(4);
    bad[0] = 2.0;
    CHECK_THROWS_AS(evolve(bad, h, kTable, 1e-3), InvalidInputError);
}

TEST_CASE("sigma z kick") {
    StateVector s(2, {0.5, 0.5, 0.5, 0.5});
    apply_sigma_z(s.amplitudes(), 2, 1);
    CHECK(s[0] == cplx(-0.5));
    CHECK(s[1] == cplx(-0.5));
    CHECK(s[2] == cplx(0.5));
}

TEST_CASE("ground states at zero drive") {
    const double delta = kTwoPi * 3;
    const auto pan = exact_ground_state(graph_h(catalog_get("3-pan")), 0.0, delta);
    CHECK(pan.manifold == std::vector<std::uint64_t>{parse_bitstring("1001"), parse_bitstring("1010")});
    CHECK(pan.state.probability(parse_bitstring("1010")) == doctest::Approx(0.5));
    const auto one = exact_ground_state(graph_h(Graph(1)), 0.0, 2.0);
    CHECK(one.energy == doctest::Approx(-1.0));
    CHECK(one.manifold == std::vector<std::uint64_t>{1});
    const auto s4 = exact_ground_state(graph_h(catalog_get("S4")), 0.0, delta);
    CHECK(s4.manifold == std::vector<std::uint64_t>{parse_bitstring("1101")});
    CHECK_THROWS_AS(exact_ground_state(graph_h(Graph(15)), 0.0, 1.0), CapacityError);
}

TEST_CASE("Lanczos agrees with dense diagonalization") {
    for (const char* name : {"3-pan", "C6", "K5", "moser", "S6"}) {
        CAPTURE(name);
        const auto h = graph_h(catalog_get(name));
        for (double delta : {-4.0, 0.0, 6.0}) {
            const double omega = 3.3;
            const auto gs = exact_ground_state(h, omega, delta);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense(h, omega, delta));
            CHECK(gs.energy == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-9));
            cplx overlap = 0;
            for (std::size_t i = 0; i < h.dim(); ++i) {
                overlap += std::conj(es.eigenvectors()(static_cast<Eigen::Index>(i), 0)) * gs.state[i];
            }
            CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("measure examples") {
    const auto h10 = measure(StateVector::basis(2, 0b10), 0, 1);
    CHECK(h10.entries().size() == 1);
    CHECK(h10.probability("10") == 1.0);
    const double r = 1 / std::sqrt(2.0);
    const auto bell = measure(StateVector(2, {r, 0, 0, r}), 0, 1);
    CHECK(bell.probability("00") == doctest::Approx(0.5));
    CHECK(bell.probability("11") == doctest::Approx(0.5));
    CHECK(bell.entries().size() == 2);
    CHECK(bell.exact());
}

TEST_CASE("sampling is reproducible and converges") {
    const auto h = graph_h(catalog_wired("C6").combined());
    const auto psi = evolve(StateVector(6), h, kTable, kDefaultTimeStep);
    const auto exact = measure(psi, 0, 0);
    CHECK(exact.total() == doctest::Approx(1.0).epsilon(1e-9));
    const auto a = measure(psi, 734, 42);
    const auto b = measure(psi, 734, 42);
    CHECK(a.entries() == b.entries());
    CHECK(a.shots() == 734);
    CHECK(a.total() == doctest::Approx(1.0));
    for (const auto& [k, p] : a.entries()) CHECK(std::abs(p * 734 - std::round(p * 734)) < 1e-9);
    CHECK(measure(psi, 734, 43).entries() != a.entries());
    CHECK(total_variation(measure(psi, 100000, 5), exact) < 0.01);
}

TEST_CASE("histogram CSV round trip and header") {
    Histogram h = Histogram::from_counts(3, {{0b101, 3}, {0b010, 1}});
    std::stringstream ss;
    write_histogram_csv(ss, h, {{"graph", "test"}});
    const std::string text = ss.str();
    CHECK(text.find("# bit_order: atom 1 = leftmost") != std::string::npos);
    CHECK(text.find("# graph: test") != std::string::npos);
    CHECK(text.find("101,0.75") != std::string::npos);
    const Histogram back = read_histogram_csv(ss);
    CHECK(back.entries() == h.entries());
    CHECK(back.shots() == 4);
    std::stringstream js;
    write_histogram_json(js, h, {});
    CHECK(js.str().find("\"101\": 0.75") != std::string::npos);
}
