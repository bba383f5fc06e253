#ifndef COMAX_RINGGRAPH_HPP
#define COMAX_RINGGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "comax/numtheory.hpp"

namespace comax {

/// Simple undirected graph with bitset adjacency rows. Immutable by
/// convention once built.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t order)
        : order_(order), rows_(order, std::vector<std::uint64_t>((order + 63) / 64, 0)) {}

    std::size_t order() const { return order_; }

    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const;

    std::vector<std::uint64_t> labels;  // optional ring-element or divisor labels

private:
    std::size_t order_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// Coprimality graph on the proper divisors of n, ascending label order.
struct DivisorGraph {
    std::vector<std::uint64_t> divisors;
    SimpleGraph graph;
};

/// The generalized-join description of Gamma(Z_n): divisor graph plus the
/// class sizes phi(n/d_i), the unit clique size, and the zero vertex.
struct BlowupSpec {
    DivisorGraph base;
    std::vector<std::uint64_t> class_sizes;
    std::uint64_t unit_count = 0;
    bool zero_present = true;
};

/// Ground-truth construction on ring elements {0..n-1}: a ~ b iff
/// gcd(gcd(a,b), n) = 1. Independent of the structural lemmas.
SimpleGraph build_comaximal(std::uint64_t n);

DivisorGraph build_divisor_graph(std::uint64_t n);

BlowupSpec build_blowup_spec(std::uint64_t n);

/// Materializes the full graph from a spec. Canonical vertex order: units,
/// then the zero vertex, then classes in ascending divisor order.
SimpleGraph expand_blowup(const BlowupSpec& spec);

/// Only the divisor-class blow-up (the G_2 subgraph), no units or zero.
SimpleGraph expand_g2(const BlowupSpec& spec);

struct StructureCheck {
    bool ok = false;
    std::string diagnostic;
};

/// Compares expand_blowup(build_blowup_spec(n)) against build_comaximal(n)
/// under the canonical gcd-class relabeling.
StructureCheck verify_structure(std::uint64_t n);

/// Edge-list dump, one "u v" per line after a header line.
std::string edge_list_dump(const SimpleGraph& g, std::uint64_t n);

}  // namespace comax

#endif
