#include "rydwire/mis.hpp"

#include "rydwire/error.hpp"

#include <bit>
#include <vector>

namespace rydwire {
namespace {

class MisEnumerator {
  public:
    explicit MisEnumerator(const Graph& g) {
        closed_.reserve(static_cast<std::size_t>(g.n_vertices()));
        for (Vertex v = 1; v <= g.n_vertices(); ++v) {
            closed_.push_back(g.neighbor_mask(v) | (std::uint64_t{1} << (v - 1)));
        }
    }

    VertexSetFamily run(std::uint64_t all) {
        recurse(0, 0, all);
        VertexSetFamily out;
        for (std::uint64_t m : found_) out.insert(VertexSet::from_mask(m));
        return out;
    }

  private:
    void recurse(std::uint64_t chosen, int size, std::uint64_t candidates) {
        if (size + std::popcount(candidates) < best_) return;
        if (candidates == 0) {
            if (size > best_) {
                best_ = size;
                found_.clear();
            }
            found_.push_back(chosen);
            return;
        }
        // Branch on the candidate with most candidate neighbours; its
        // exclusion branch shrinks the bound fastest.
        int pick = -1;
        int pick_deg = -1;
        for (std::uint64_t c = candidates; c != 0; c &= c - 1) {
            const int i = std::countr_zero(c);
            const int deg = std::popcount(closed_[i] & candidates);
            if (deg > pick_deg) {
                pick = i;
                pick_deg = deg;
            }
        }
        const std::uint64_t bit = std::uint64_t{1} << pick;
        recurse(chosen | bit, size + 1, candidates & ~closed_[pick]);
        recurse(chosen, size, candidates & ~bit);
    }

    std::vector<std::uint64_t> closed_;
    std::vector<std::uint64_t> found_;
    int best_ = 0;
};

} // namespace

VertexSetFamily mis_brute_force(const Graph& g) {
    if (g.n_vertices() > kMisOracleMaxVertices) {
        throw CapacityError("MIS oracle limited to " + std::to_string(kMisOracleMaxVertices) +
                            " vertices, graph has " + std::to_string(g.n_vertices()));
    }
    const std::uint64_t all =
        g.n_vertices() == 0 ? 0 : (~std::uint64_t{0} >> (64 - g.n_vertices()));
    return MisEnumerator(g).run(all);
}

int independence_number(const Graph& g) {
    const auto family = mis_brute_force(g);
    return static_cast<int>(family.begin()->size());
}

} // namespace rydwire
