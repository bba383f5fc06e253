#include "comax/ringgraph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace comax {

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    rows_[u][v / 64] |= std::uint64_t(1) << (v % 64);
    rows_[v][u / 64] |= std::uint64_t(1) << (u % 64);
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u][v / 64] >> (v % 64)) & 1;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (auto w : rows_[v]) d += std::popcount(w);
    return d;
}

SimpleGraph build_comaximal(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("build_comaximal: n must be >= 2");
    SimpleGraph g(static_cast<std::size_t>(n));
    for (std::uint64_t a = 0; a < n; ++a) {
        g.labels.push_back(a);
        for (std::uint64_t b = a + 1; b < n; ++b)
            if (gcd_u64(gcd_u64(a, b), n) == 1) g.add_edge(a, b);
    }
    return g;
}

DivisorGraph build_divisor_graph(std::uint64_t n) {
    auto f = factorize(n);
    DivisorGraph dg;
    dg.divisors = proper_divisors(f);
    dg.graph = SimpleGraph(dg.divisors.size());
    dg.graph.labels = dg.divisors;
    for (std::size_t i = 0; i < dg.divisors.size(); ++i)
        for (std::size_t j = i + 1; j < dg.divisors.size(); ++j)
            if (gcd_u64(dg.divisors[i], dg.divisors[j]) == 1) dg.graph.add_edge(i, j);
    return dg;
}

BlowupSpec build_blowup_spec(std::uint64_t n) {
    auto f = factorize(n);
    BlowupSpec spec;
    spec.base = build_divisor_graph(n);
    for (auto d : spec.base.divisors) spec.class_sizes.push_back(class_size(f, d));
    spec.unit_count = euler_phi(f);
    spec.zero_present = true;
    return spec;
}

namespace {

std::uint64_t spec_order(const BlowupSpec& spec) {
    std::uint64_t total = spec.unit_count + (spec.zero_present ? 1 : 0);
    for (auto m : spec.class_sizes) total += m;
    return total;
}

}  // namespace

SimpleGraph expand_g2(const BlowupSpec& spec) {
    std::uint64_t order = 0;
    for (auto m : spec.class_sizes) order += m;
    SimpleGraph g(static_cast<std::size_t>(order));
    std::vector<std::size_t> start(spec.class_sizes.size());
    std::size_t off = 0;
    for (std::size_t i = 0; i < spec.class_sizes.size(); ++i) {
        start[i] = off;
        off += static_cast<std::size_t>(spec.class_sizes[i]);
    }
    for (std::size_t i = 0; i < spec.class_sizes.size(); ++i)
        for (std::size_t j = i + 1; j < spec.class_sizes.size(); ++j) {
            if (!spec.base.graph.adjacent(i, j)) continue;
            for (std::size_t u = 0; u < spec.class_sizes[i]; ++u)
                for (std::size_t v = 0; v < spec.class_sizes[j]; ++v)
                    g.add_edge(start[i] + u, start[j] + v);
        }
    return g;
}

SimpleGraph expand_blowup(const BlowupSpec& spec) {
    const std::size_t total = static_cast<std::size_t>(spec_order(spec));
    const std::size_t units = static_cast<std::size_t>(spec.unit_count);
    const std::size_t zero = units;  // index of the zero vertex
    SimpleGraph g(total);
    // unit clique, joined to everything
    for (std::size_t u = 0; u < units; ++u)
        for (std::size_t v = u + 1; v < total; ++v) g.add_edge(u, v);
    // classes, offset past units and zero
    const std::size_t base = zero + (spec.zero_present ? 1 : 0);
    std::vector<std::size_t> start(spec.class_sizes.size());
    std::size_t off = base;
    for (std::size_t i = 0; i < spec.class_sizes.size(); ++i) {
        start[i] = off;
        off += static_cast<std::size_t>(spec.class_sizes[i]);
    }
    for (std::size_t i = 0; i < spec.class_sizes.size(); ++i)
        for (std::size_t j = i + 1; j < spec.class_sizes.size(); ++j) {
            if (!spec.base.graph.adjacent(i, j)) continue;
            for (std::size_t u = 0; u < spec.class_sizes[i]; ++u)
                for (std::size_t v = 0; v < spec.class_sizes[j]; ++v)
                    g.add_edge(start[i] + u, start[j] + v);
        }
    return g;
}

StructureCheck verify_structure(std::uint64_t n) {
    auto ring = build_comaximal(n);
    auto spec = build_blowup_spec(n);
    auto expanded = expand_blowup(spec);
    if (ring.order() != expanded.order())
        return {false, "order mismatch"};

    // canonical relabeling: ring element x -> slot via gcd(x, n)
    const std::size_t units = static_cast<std::size_t>(spec.unit_count);
    std::vector<std::size_t> start(spec.base.divisors.size());
    {
        std::size_t off = units + 1;
        for (std::size_t i = 0; i < spec.base.divisors.size(); ++i) {
            start[i] = off;
            off += static_cast<std::size_t>(spec.class_sizes[i]);
        }
    }
    std::vector<std::size_t> perm(ring.order());
    std::size_t unit_rank = 0;
    std::vector<std::size_t> class_rank(spec.base.divisors.size(), 0);
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t g = gcd_u64(x, n);
        if (x == 0) {
            perm[x] = units;
        } else if (g == 1) {
            perm[x] = unit_rank++;
        } else {
            std::size_t ci = 0;
            while (spec.base.divisors[ci] != g) ++ci;
            perm[x] = start[ci] + class_rank[ci]++;
        }
    }
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = a + 1; b < n; ++b)
            if (ring.adjacent(a, b) != expanded.adjacent(perm[a], perm[b])) {
                std::ostringstream os;
                os << "adjacency mismatch at ring pair (" << a << "," << b << ")";
                return {false, os.str()};
            }
    return {true, ""};
}

std::string edge_list_dump(const SimpleGraph& g, std::uint64_t n) {
    std::ostringstream os;
    os << "# comaximal n=" << n << " order=" << g.order() << "\n";
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) os << u << " " << v << "\n";
    return os.str();
}

}  // namespace comax
