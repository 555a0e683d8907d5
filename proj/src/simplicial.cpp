#include "smallcover/simplicial.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace smallcover {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct FaceHash {
    std::size_t operator()(const std::vector<int>& f) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : f) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

bool subset_of(const std::vector<int>& small, const std::vector<int>& big) {
    std::size_t i = 0;
    for (int v : big) {
        if (i == small.size()) return true;
        if (small[i] == v) ++i;
        if (i < small.size() && small[i] < v) return false;
    }
    return i == small.size();
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::vector<int>> faces) {
    std::unordered_set<std::vector<int>, FaceHash> distinct;
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (!f.empty()) distinct.insert(std::move(f));
    }
    std::vector<std::vector<int>> list(distinct.begin(), distinct.end());
    // larger faces first so each face only needs checks against accepted
    // faces of strictly larger size
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    SimplicialComplex k;
    for (auto& f : list) {
        bool contained = false;
        for (const auto& m : k.maximal_) {
            if (m.size() == f.size()) break;
            if (subset_of(f, m)) {
                contained = true;
                break;
            }
        }
        if (!contained) k.maximal_.push_back(std::move(f));
    }
    std::sort(k.maximal_.begin(), k.maximal_.end());
    return k;
}

std::vector<int> SimplicialComplex::vertices() const {
    std::vector<int> out;
    for (const auto& f : maximal_) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t SimplicialComplex::num_vertices() const { return vertices().size(); }

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : maximal_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : maximal_)
        if (f.size() != maximal_.front().size()) return false;
    return true;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_degree(int k) const {
    if (k < -1) return {};
    if (k == -1) return {{}};
    const std::size_t sz = static_cast<std::size_t>(k) + 1;
    std::unordered_set<std::vector<int>, FaceHash> seen;
    std::vector<int> pick(sz);
    for (const auto& m : maximal_) {
        if (m.size() < sz) continue;
        // all sz-subsets of m, lexicographic
        std::vector<std::size_t> idx(sz);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            for (std::size_t i = 0; i < sz; ++i) pick[i] = m[idx[i]];
            seen.insert(pick);
            int i = static_cast<int>(sz) - 1;
            while (i >= 0 && idx[i] == m.size() - sz + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<int>& w) {
    const std::vector<int> verts = k.vertices();
    std::unordered_set<int> vset(verts.begin(), verts.end());
    std::unordered_set<int> wset;
    for (int v : w) {
        if (!vset.count(v))
            throw UnknownVertexError("vertex " + std::to_string(v) +
                                     " is not a vertex of the complex");
        wset.insert(v);
    }
    std::vector<std::vector<int>> cut;
    cut.reserve(k.maximal_faces().size());
    for (const auto& m : k.maximal_faces()) {
        std::vector<int> f;
        for (int v : m)
            if (wset.count(v)) f.push_back(v);
        cut.push_back(std::move(f));
    }
    return SimplicialComplex::from_faces(std::move(cut));
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int degree) {
    IntMatrix m;
    if (degree < 0) return m;
    const auto cols = k.faces_of_degree(degree);
    if (degree == 0) {
        // augmentation onto the empty simplex
        m.rows = 1;
        m.cols = static_cast<int>(cols.size());
        for (int c = 0; c < m.cols; ++c) m.entries.push_back({0, c, 1});
        return m;
    }
    const auto rows = k.faces_of_degree(degree - 1);
    std::unordered_map<std::vector<int>, int, FaceHash> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    m.rows = static_cast<int>(rows.size());
    m.cols = static_cast<int>(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& f = cols[c];
        std::vector<int> sub(f.size() - 1);
        for (std::size_t j = 0; j < f.size(); ++j) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != j) sub[t++] = f[i];
            m.entries.push_back(
                {row_index.at(sub), static_cast<int>(c), (j % 2 == 0) ? 1 : -1});
        }
    }
    return m;
}

namespace {

struct EliminationOverflow {};

inline std::int64_t mul_sub(std::int64_t alpha, std::int64_t a, std::int64_t beta,
                            std::int64_t b) {
    const __int128 r = static_cast<__int128>(alpha) * a - static_cast<__int128>(beta) * b;
    // symmetric range so that abs() never overflows downstream
    if (r > std::numeric_limits<std::int64_t>::max() ||
        r < -std::numeric_limits<std::int64_t>::max())
        throw EliminationOverflow{};
    return static_cast<std::int64_t>(r);
}

inline BigInt mul_sub(const BigInt& alpha, const BigInt& a, const BigInt& beta,
                      const BigInt& b) {
    return alpha * a - beta * b;
}

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline std::int64_t abs_of(std::int64_t a) { return a < 0 ? -a : a; }
inline BigInt abs_of(const BigInt& a) { return boost::multiprecision::abs(a); }

template <class T>
int eliminate(std::vector<std::vector<std::pair<int, T>>> rows, int ncols) {
    std::vector<bool> alive(rows.size(), true);
    std::vector<int> col_count(static_cast<std::size_t>(ncols), 0);
    std::size_t alive_count = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) {
            alive[r] = false;
            continue;
        }
        ++alive_count;
        for (const auto& [c, v] : rows[r]) ++col_count[static_cast<std::size_t>(c)];
    }

    int rank = 0;
    std::vector<std::pair<int, T>> merged;
    while (alive_count > 0) {
        // Markowitz-style pivot: prefer unit entries, then least fill
        std::size_t best_row = rows.size();
        int best_col = -1;
        long long best_fill = 0;
        int best_unit = 2;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r]) continue;
            for (const auto& [c, v] : rows[r]) {
                const int unit = (v == 1 || v == -1) ? 0 : 1;
                const long long fill = static_cast<long long>(rows[r].size() - 1) *
                                       (col_count[static_cast<std::size_t>(c)] - 1);
                if (unit < best_unit || (unit == best_unit && fill < best_fill)) {
                    best_unit = unit;
                    best_fill = fill;
                    best_row = r;
                    best_col = c;
                }
            }
            if (best_unit == 0 && best_fill == 0) break;
        }

        const std::size_t p = best_row;
        const int pc = best_col;
        T pv{};
        for (const auto& [c, v] : rows[p])
            if (c == pc) pv = v;

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r] || r == p) continue;
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), pc,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == rows[r].end() || it->first != pc) continue;
            const T av = it->second;
            const T g = gcd_of(abs_of(pv), abs_of(av));
            const T alpha = pv / g;
            const T beta = av / g;

            merged.clear();
            auto ia = rows[r].begin();
            auto ib = rows[p].begin();
            T content{0};
            while (ia != rows[r].end() || ib != rows[p].end()) {
                int col;
                T val;
                if (ib == rows[p].end() || (ia != rows[r].end() && ia->first < ib->first)) {
                    col = ia->first;
                    val = mul_sub(alpha, ia->second, T{0}, T{0});
                    ++ia;
                } else if (ia == rows[r].end() || ib->first < ia->first) {
                    col = ib->first;
                    val = mul_sub(T{0}, T{0}, beta, ib->second);
                    ++ib;
                } else {
                    col = ia->first;
                    val = mul_sub(alpha, ia->second, beta, ib->second);
                    ++ia;
                    ++ib;
                }
                if (val != 0) {
                    merged.emplace_back(col, val);
                    content = gcd_of(content, abs_of(val));
                }
            }
            if (content > 1)
                for (auto& e : merged) e.second = e.second / content;

            for (const auto& e : rows[r]) --col_count[static_cast<std::size_t>(e.first)];
            for (const auto& e : merged) ++col_count[static_cast<std::size_t>(e.first)];
            rows[r].swap(merged);
            if (rows[r].empty()) {
                alive[r] = false;
                --alive_count;
            }
        }

        for (const auto& e : rows[p]) --col_count[static_cast<std::size_t>(e.first)];
        rows[p].clear();
        rows[p].shrink_to_fit();
        alive[p] = false;
        --alive_count;
        ++rank;
    }
    return rank;
}

template <class T>
std::vector<std::vector<std::pair<int, T>>> rows_from(const IntMatrix& m) {
    std::vector<std::vector<std::pair<int, T>>> rows(static_cast<std::size_t>(m.rows));
    for (const auto& e : m.entries)
        rows[static_cast<std::size_t>(e.row)].emplace_back(e.col, T(e.value));
    for (auto& r : rows)
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return rows;
}

}  // namespace

int rank_exact(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    try {
        return eliminate<std::int64_t>(rows_from<std::int64_t>(m), m.cols);
    } catch (const EliminationOverflow&) {
        return eliminate<BigInt>(rows_from<BigInt>(m), m.cols);
    }
}

BettiVector reduced_betti(const SimplicialComplex& k, int max_degree) {
    if (max_degree < -1)
        throw InvalidDimensionError("max_degree must be at least -1");
    const int dim = k.dimension();
    const int top = std::min(max_degree + 1, dim);  // highest degree whose faces we need

    // faces per degree, generated once
    std::vector<std::vector<std::vector<int>>> faces;
    for (int d = 0; d <= top; ++d) faces.push_back(k.faces_of_degree(d));

    std::vector<int> ranks(static_cast<std::size_t>(max_degree) + 3, 0);
    // the augmentation row has rank 1 as soon as there is a vertex
    ranks[0] = k.maximal_faces().empty() ? 0 : 1;
    for (int d = 1; d <= top; ++d) {
        std::unordered_map<std::vector<int>, int, FaceHash> row_index;
        const auto& rows = faces[static_cast<std::size_t>(d - 1)];
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
        IntMatrix m;
        m.rows = static_cast<int>(rows.size());
        m.cols = static_cast<int>(faces[static_cast<std::size_t>(d)].size());
        std::vector<int> sub(static_cast<std::size_t>(d));
        for (std::size_t c = 0; c < faces[static_cast<std::size_t>(d)].size(); ++c) {
            const auto& f = faces[static_cast<std::size_t>(d)][c];
            for (std::size_t j = 0; j < f.size(); ++j) {
                std::size_t t = 0;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != j) sub[t++] = f[i];
                m.entries.push_back(
                    {row_index.at(sub), static_cast<int>(c), (j % 2 == 0) ? 1 : -1});
            }
        }
        ranks[static_cast<std::size_t>(d)] = rank_exact(m);
    }

    auto f_count = [&](int d) -> std::int64_t {
        if (d == -1) return 1;  // the empty simplex
        if (d < 0 || d > top) return 0;
        return static_cast<std::int64_t>(faces[static_cast<std::size_t>(d)].size());
    };

    // reduced Betti in degree d: #d-faces - rank(boundary_d) - rank(boundary_{d+1}),
    // where boundary_0 is the augmentation and boundary_{-1} = 0
    std::vector<std::int64_t> betti;
    for (int d = -1; d <= max_degree; ++d)
        betti.push_back(f_count(d) - (d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0) -
                        ranks[static_cast<std::size_t>(d + 1)]);
    return BettiVector(-1, std::move(betti));
}

}  // namespace smallcover
