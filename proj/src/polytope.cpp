#include "smallcover/polytope.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace smallcover {

void SimplePolytope::check() const {
    if (dim < 1) throw InvalidDimensionError("polytope dimension must be positive");
    if (facet_labels.empty()) throw InvalidDimensionError("polytope needs at least one facet");
    std::set<std::string> labels(facet_labels.begin(), facet_labels.end());
    if (labels.size() != facet_labels.size())
        throw InvalidDimensionError("facet labels must be distinct");
    std::vector<bool> used(facet_labels.size() + 1, false);
    std::set<std::vector<int>> seen;
    for (const auto& v : vertices) {
        if (static_cast<int>(v.size()) != dim)
            throw InvalidDimensionError("vertex on " + std::to_string(v.size()) +
                                        " facets in a " + std::to_string(dim) +
                                        "-dimensional simple polytope");
        for (int f : v) {
            if (f < 1 || f > num_facets())
                throw IndexError("facet index " + std::to_string(f) + " out of range");
            used[static_cast<std::size_t>(f)] = true;
        }
        if (!seen.insert(v).second)
            throw InvalidDimensionError("duplicate vertex facet set");
    }
    for (int f = 1; f <= num_facets(); ++f)
        if (!used[static_cast<std::size_t>(f)])
            throw InvalidDimensionError("facet " + std::to_string(f) +
                                        " appears in no vertex");
}

SimplePolytope cube(int n) {
    if (n < 1) throw InvalidDimensionError("cube dimension must be at least 1");
    SimplePolytope p;
    p.dim = n;
    for (int i = 1; i <= 2 * n; ++i) p.facet_labels.push_back("F" + std::to_string(i));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            v.push_back(((mask >> i) & 1) ? n + i + 1 : i + 1);
        std::sort(v.begin(), v.end());
        p.vertices.push_back(std::move(v));
    }
    p.check();
    return p;
}

SimplePolytope polygon_prism(int m, int n) {
    if (m < 3) throw InvalidDimensionError("polygon must have at least 3 edges");
    if (n < 2) throw InvalidDimensionError("polygon prism needs dimension at least 2");
    const int total = m + 2 * (n - 2);

    // facet index of each polygon edge (1-based edge number -> facet index):
    // E1, E2 right after the cube-minus block, then E3..E_{m-3}, then the
    // cube-plus block, and the last (up to three) edges at the tail
    std::vector<int> edge_facet(static_cast<std::size_t>(m) + 1, 0);
    edge_facet[1] = n - 1;
    edge_facet[2] = n;
    const int middle = std::max(0, m - 5);
    for (int j = 0; j < middle; ++j) edge_facet[static_cast<std::size_t>(3 + j)] = n + 1 + j;
    const int tail = m - 2 - middle;
    for (int j = 0; j < tail; ++j)
        edge_facet[static_cast<std::size_t>(m - tail + 1 + j)] = total - tail + 1 + j;

    std::vector<int> cube_minus, cube_plus;
    for (int i = 1; i <= n - 2; ++i) cube_minus.push_back(i);
    for (int i = 1; i <= n - 2; ++i) cube_plus.push_back(n + middle + i);

    SimplePolytope p;
    p.dim = n;
    std::vector<std::string> labels(static_cast<std::size_t>(total));
    for (int e = 1; e <= m; ++e)
        labels[static_cast<std::size_t>(edge_facet[static_cast<std::size_t>(e)] - 1)] =
            "E" + std::to_string(e);
    for (int i = 0; i < n - 2; ++i) {
        labels[static_cast<std::size_t>(cube_minus[static_cast<std::size_t>(i)] - 1)] =
            "I" + std::to_string(i + 1) + "-";
        labels[static_cast<std::size_t>(cube_plus[static_cast<std::size_t>(i)] - 1)] =
            "I" + std::to_string(i + 1) + "+";
    }
    p.facet_labels = std::move(labels);

    for (int v = 0; v < m; ++v) {
        const int e1 = v + 1;
        const int e2 = (v + 1) % m + 1;  // cyclically adjacent edge pair
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 2)); ++mask) {
            std::vector<int> vert{edge_facet[static_cast<std::size_t>(e1)],
                                  edge_facet[static_cast<std::size_t>(e2)]};
            for (int i = 0; i < n - 2; ++i)
                vert.push_back(((mask >> i) & 1) ? cube_plus[static_cast<std::size_t>(i)]
                                                 : cube_minus[static_cast<std::size_t>(i)]);
            std::sort(vert.begin(), vert.end());
            p.vertices.push_back(std::move(vert));
        }
    }
    p.check();
    return p;
}

DualComplexView dual_complex(const SimplePolytope& p) {
    p.check();
    DualComplexView view;
    view.polytope_dim = p.dim;
    view.complex = SimplicialComplex::from_faces(p.vertices);
    return view;
}

std::vector<std::int64_t> f_vector(const DualComplexView& k) {
    if (!k.complex.is_pure())
        throw NotPureError("f-vector requires a pure complex");
    const int n = k.polytope_dim;
    if (k.complex.dimension() != n - 1)
        throw NotPureError("dual complex dimension does not match the polytope");
    std::vector<std::int64_t> f;
    f.push_back(1);  // the empty face
    for (int d = 0; d <= n - 1; ++d)
        f.push_back(static_cast<std::int64_t>(k.complex.faces_of_degree(d).size()));
    return f;
}

std::vector<std::int64_t> h_vector(const DualComplexView& k) {
    const auto f = f_vector(k);
    const int n = k.polytope_dim;
    // h(t) = sum_i f_{i-1} (t-1)^{n-i}
    auto binom = [](int a, int b) -> std::int64_t {
        if (b < 0 || b > a) return 0;
        std::int64_t r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::vector<std::int64_t> h(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) {
        std::int64_t acc = 0;
        for (int i = 0; i <= j; ++i) {
            const std::int64_t term = binom(n - i, j - i) * f[static_cast<std::size_t>(i)];
            acc += (j - i) % 2 == 0 ? term : -term;
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return h;
}

}  // namespace smallcover
