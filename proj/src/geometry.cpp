#include "rydwire/geometry.hpp"

#include "rydwire/error.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace rydwire {

AtomArray::AtomArray(std::vector<Vec3> positions, std::vector<AtomRole> roles)
    : positions_(std::move(positions)), roles_(std::move(roles)) {
    if (roles_.size() != positions_.size()) {
        throw InvalidInputError("atom roles and positions differ in length");
    }
    const std::size_t n = positions_.size();
    dist_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& p = positions_[i];
            const auto& q = positions_[j];
            const double d = std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
            if (!(d > 0.0)) {
                throw InvalidInputError("atoms " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " coincide");
            }
            dist_[i * n + j] = d;
            dist_[j * n + i] = d;
        }
    }
}

AtomArray AtomArray::reordered(const std::vector<Vertex>& atom_map) const {
    if (atom_map.size() != size()) throw InvalidInputError("atom map size mismatch");
    std::vector<Vec3> pos(size());
    std::vector<AtomRole> roles(size());
    std::vector<bool> seen(size(), false);
    for (std::size_t k = 0; k < size(); ++k) {
        const Vertex v = atom_map[k];
        if (v < 1 || static_cast<std::size_t>(v) > size() || seen[v - 1]) {
            throw InvalidInputError("atom map is not a permutation of 1.." +
                                    std::to_string(size()));
        }
        seen[v - 1] = true;
        pos[v - 1] = positions_[k];
        roles[v - 1] = roles_[k];
    }
    return AtomArray(std::move(pos), std::move(roles));
}

AtomArray AtomArray::displaced(const std::vector<Vec3>& offsets) const {
    if (offsets.size() != size()) throw InvalidInputError("offset count mismatch");
    auto pos = positions_;
    for (std::size_t k = 0; k < size(); ++k) {
        for (int c = 0; c < 3; ++c) pos[k][c] += offsets[k][c];
    }
    return AtomArray(std::move(pos), roles_);
}

double blockade_radius(double c6_over_hbar, double rabi_0) {
    if (!(c6_over_hbar > 0.0) || !(rabi_0 > 0.0)) {
        throw DomainError("blockade radius needs positive C6 and Rabi frequency");
    }
    return std::pow(c6_over_hbar / rabi_0, 1.0 / 6.0);
}

BlockadeParams BlockadeParams::from_c6(double c6_over_hbar, double rabi_0) {
    return {c6_over_hbar, rabi_0, blockade_radius(c6_over_hbar, rabi_0)};
}

BlockadeParams BlockadeParams::from_radius(double r_b, double rabi_0) {
    if (!(r_b > 0.0) || !(rabi_0 > 0.0)) {
        throw DomainError("blockade radius and Rabi frequency must be positive");
    }
    return {rabi_0 * std::pow(r_b, 6), rabi_0, r_b};
}

Graph induced_graph(const AtomArray& arr, double r_b) {
    if (!(r_b > 0.0)) throw DomainError("blockade radius must be positive");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        for (std::size_t j = i + 1; j < arr.size(); ++j) {
            if (arr.distance(i, j) < r_b) {
                edges.emplace_back(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
            }
        }
    }
    return Graph(static_cast<int>(arr.size()), edges);
}

ValidationReport validate_embedding(const AtomArray& arr, const Graph& expected, double r_b) {
    if (static_cast<int>(arr.size()) != expected.n_vertices()) {
        throw InvalidInputError("array has " + std::to_string(arr.size()) +
                                " atoms, graph has " + std::to_string(expected.n_vertices()) +
                                " vertices");
    }
    if (!(r_b > 0.0)) throw DomainError("blockade radius must be positive");
    ValidationReport rep;
    rep.min_edge_margin = std::numeric_limits<double>::infinity();
    rep.min_nonedge_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < arr.size(); ++i) {
        for (std::size_t j = i + 1; j < arr.size(); ++j) {
            const Edge e(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
            const double d = arr.distance(i, j);
            const PairDistance pd{e, d};
            const bool intended = expected.has_edge(e.u, e.v);
            if (intended) {
                rep.min_edge_margin = std::min(rep.min_edge_margin, (r_b - d) / r_b);
            } else {
                rep.min_nonedge_margin = std::min(rep.min_nonedge_margin, (d - r_b) / r_b);
            }
            if (std::abs(d - r_b) <= kMarginalRelTol * r_b) {
                rep.marginal.push_back(pd);
            } else if (intended && d < r_b) {
                rep.matched.push_back(pd);
            } else if (intended) {
                rep.missing.push_back(pd);
            } else if (d < r_b) {
                rep.spurious.push_back(pd);
            }
        }
    }
    return rep;
}

std::string to_string(AtomRole role) { return role == AtomRole::qubit ? "qubit" : "wire"; }

AtomArray read_array(std::istream& in) {
    std::vector<Vec3> pos;
    std::vector<AtomRole> roles;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string role;
        if (!(ls >> role)) continue;
        Vec3 p{};
        std::string rest;
        if (!(ls >> p[0] >> p[1] >> p[2]) || (ls >> rest)) {
            throw InvalidInputError("line " + std::to_string(lineno) + ": expected `role x y z`");
        }
        if (role == "qubit") {
            roles.push_back(AtomRole::qubit);
        } else if (role == "wire") {
            roles.push_back(AtomRole::wire);
        } else {
            throw InvalidInputError("line " + std::to_string(lineno) + ": unknown role '" + role +
                                    "'");
        }
        pos.push_back(p);
    }
    return AtomArray(std::move(pos), std::move(roles));
}

void write_array(std::ostream& out, const AtomArray& arr) {
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const auto& p = arr.positions()[k];
        out << to_string(arr.roles()[k]) << ' ' << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    }
}

} // namespace rydwire
