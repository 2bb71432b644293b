#include "gerbecalc/simplicial.hpp"

#include "gerbecalc/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gerbecalc {

const std::vector<Simplex> SimplicialComplex::empty_;

Simplex face_of(const Simplex& s, int j)
{
    Simplex f;
    f.reserve(s.size() - 1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (i != j)
            f.push_back(s[i]);
    return f;
}

SimplicialComplex::SimplicialComplex(std::vector<int> vertices,
                                     const std::vector<Simplex>& facets)
    : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::set<int> vset(vertices_.begin(), vertices_.end());

    std::set<Simplex> all;
    for (int v : vertices_)
        all.insert({v});
    // downward closure
    std::vector<Simplex> stack(facets.begin(), facets.end());
    for (auto& s : stack)
        std::sort(s.begin(), s.end());
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (s.empty() || all.count(s))
            continue;
        for (int v : s)
            if (!vset.count(v))
                throw SimplicialError("facet vertex not in vertex set");
        all.insert(s);
        if (s.size() > 1)
            for (int j = 0; j < static_cast<int>(s.size()); ++j)
                stack.push_back(face_of(s, j));
    }

    int maxdim = 0;
    for (const auto& s : all)
        maxdim = std::max(maxdim, static_cast<int>(s.size()) - 1);
    by_dim_.resize(maxdim + 1);
    for (const auto& s : all)
        by_dim_[s.size() - 1].push_back(s);
    for (auto& v : by_dim_)
        std::sort(v.begin(), v.end());
    for (const auto& level : by_dim_)
        for (int i = 0; i < static_cast<int>(level.size()); ++i)
            index_[level[i]] = i;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const
{
    if (p < 0 || p > dim())
        return empty_;
    return by_dim_[p];
}

int SimplicialComplex::total_count() const
{
    int n = 0;
    for (const auto& level : by_dim_)
        n += static_cast<int>(level.size());
    return n;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_.count(s) > 0; }

int SimplicialComplex::index_of(const Simplex& s) const
{
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const
{
    for (int p = 0; p <= dim(); ++p)
        for (const auto& s : simplices(p))
            if (!other.contains(s))
                return false;
    return true;
}

bool SimplicialComplex::connected() const
{
    if (vertices_.empty())
        return true;
    std::map<int, int> comp;
    for (int v : vertices_)
        comp[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (comp[v] != v)
            v = comp[v] = comp[comp[v]];
        return v;
    };
    for (const auto& e : simplices(1))
        comp[find(e[0])] = find(e[1]);
    int root = find(vertices_[0]);
    for (int v : vertices_)
        if (find(v) != root)
            return false;
    return true;
}

ComplexPtr build_complex(std::vector<int> vertices, const std::vector<std::vector<int>>& facets)
{
    for (const auto& f : facets) {
        std::set<int> seen(f.begin(), f.end());
        if (seen.size() != f.size())
            throw SimplicialError("MalformedFacet: duplicate vertex inside a facet");
    }
    std::vector<Simplex> fs;
    fs.reserve(facets.size());
    for (const auto& f : facets) {
        Simplex s(f.begin(), f.end());
        std::sort(s.begin(), s.end());
        fs.push_back(std::move(s));
    }
    return std::make_shared<SimplicialComplex>(std::move(vertices), fs);
}

Subdivision barycentric_subdivision(const SimplicialComplex& K)
{
    Subdivision sd;
    // Sd vertices: simplices of K ordered by (dim, lex) = the by-dim order.
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p))
            sd.vertex_simplex.push_back(s);
    for (int i = 0; i < static_cast<int>(sd.vertex_simplex.size()); ++i)
        sd.simplex_vertex[sd.vertex_simplex[i]] = i;

    // facets of Sd = maximal chains; generate all chains ending at facets of K
    // by descending through proper faces.
    std::vector<Simplex> facets;
    std::function<void(const Simplex&, std::vector<int>&)> descend =
        [&](const Simplex& s, std::vector<int>& chain) {
            chain.push_back(sd.simplex_vertex.at(s));
            if (s.size() == 1) {
                Simplex c(chain.rbegin(), chain.rend());
                facets.push_back(std::move(c));
            } else {
                for (int j = 0; j < static_cast<int>(s.size()); ++j) {
                    Simplex f = face_of(s, j);
                    descend(f, chain);
                }
            }
            chain.pop_back();
        };
    // Only maximal chains are needed; subchains arise by downward closure.
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p)) {
            bool maximal = true;
            if (p < K.dim()) {
                // s is maximal iff no (p+1)-simplex contains it
                for (const auto& t : K.simplices(p + 1)) {
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        maximal = false;
                        break;
                    }
                }
            }
            if (maximal) {
                std::vector<int> chain;
                descend(s, chain);
            }
        }

    std::vector<int> verts(sd.vertex_simplex.size());
    std::iota(verts.begin(), verts.end(), 0);
    sd.complex = std::make_shared<SimplicialComplex>(std::move(verts), facets);
    return sd;
}

FundamentalCycle::FundamentalCycle(ComplexPtr complex, int degree, std::map<Simplex, Int> weights)
    : complex_(std::move(complex)), degree_(degree), weights_(std::move(weights))
{
    for (const auto& [s, w] : weights_)
        if (static_cast<int>(s.size()) != degree_ + 1 || !complex_->contains(s))
            throw SimplicialError("cycle weight on a non-simplex");
    validate();
}

void FundamentalCycle::validate() const
{
    std::map<Simplex, Int> bd;
    for (const auto& [s, w] : weights_) {
        if (w == 0)
            continue;
        for (int j = 0; j < static_cast<int>(s.size()); ++j) {
            Int sign = (j % 2 == 0) ? 1 : -1;
            bd[face_of(s, j)] += sign * w;
        }
    }
    for (const auto& [f, v] : bd)
        if (v != 0)
            throw SimplicialError("fundamental cycle has nonzero boundary");
}

FundamentalCycle subdivide_cycle(const FundamentalCycle& z, const Subdivision& sd)
{
    std::map<Simplex, Int> weights;
    int n = z.degree();
    for (const auto& flag : sd.complex->simplices(n)) {
        // flag = chain sigma_0 < ... < sigma_n with |sigma_k| = k+1
        const Simplex& top = sd.vertex_simplex[flag[n]];
        if (static_cast<int>(top.size()) != n + 1)
            continue;
        auto it = z.weights().find(top);
        if (it == z.weights().end() || it->second == 0)
            continue;
        bool full_flag = true;
        std::vector<int> order; // order[k] = the vertex added at step k
        std::set<int> prev;
        for (int k = 0; k <= n && full_flag; ++k) {
            const Simplex& sk = sd.vertex_simplex[flag[k]];
            if (static_cast<int>(sk.size()) != k + 1) {
                full_flag = false;
                break;
            }
            int added = -1;
            for (int v : sk)
                if (!prev.count(v))
                    added = v;
            order.push_back(added);
            prev.insert(sk.begin(), sk.end());
        }
        if (!full_flag)
            continue;
        // parity of the permutation taking the sorted vertex order to `order`
        int parity = 0;
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j)
                if (order[i] > order[j])
                    ++parity;
        Int sign = (parity % 2 == 0) ? 1 : -1;
        weights[flag] = sign * it->second;
    }
    return FundamentalCycle(sd.complex, n, std::move(weights));
}

ComplexPtr single_point() { return build_complex({0}, {}); }

ComplexPtr full_simplex(int n)
{
    std::vector<int> verts(n + 1);
    std::iota(verts.begin(), verts.end(), 0);
    return build_complex(verts, {verts});
}

ComplexPtr boundary_simplex(int n)
{
    std::vector<int> verts(n + 1);
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<std::vector<int>> facets;
    for (int j = 0; j <= n; ++j)
        facets.push_back(face_of(verts, j));
    return build_complex(verts, facets);
}

ComplexPtr hexagon_circle()
{
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 6; ++i)
        edges.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
    return build_complex({0, 1, 2, 3, 4, 5}, edges);
}

ComplexPtr projective_plane_6()
{
    // The antipodal quotient of the icosahedron; 2-neighborly, every edge in
    // exactly two triangles.
    std::vector<std::vector<int>> facets = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6},
                                            {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6},
                                            {3, 4, 6}, {3, 5, 6}};
    return build_complex({1, 2, 3, 4, 5, 6}, facets);
}

ComplexPtr projective_space_3()
{
    // Boundary of the 4-dimensional cross-polytope: vertices 0..7, with i and
    // i+4 antipodal; facets pick one vertex of each antipodal pair.
    std::vector<int> verts(8);
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<std::vector<int>> facets;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> f;
        for (int i = 0; i < 4; ++i)
            f.push_back((mask >> i & 1) ? i + 4 : i);
        std::sort(f.begin(), f.end());
        facets.push_back(f);
    }
    auto cross = build_complex(verts, facets);
    auto sd = barycentric_subdivision(*cross);

    // Antipodal action on Sd vertices (faces of the cross-polytope).
    auto opposite = [&](const Simplex& s) {
        Simplex o;
        for (int v : s)
            o.push_back((v + 4) % 8);
        std::sort(o.begin(), o.end());
        return o;
    };
    int n = static_cast<int>(sd.vertex_simplex.size());
    std::vector<int> rep(n);
    for (int i = 0; i < n; ++i) {
        int j = sd.simplex_vertex.at(opposite(sd.vertex_simplex[i]));
        rep[i] = std::min(i, j);
    }
    // Relabel orbit representatives 0..(n/2 - 1).
    std::map<int, int> relabel;
    for (int i = 0; i < n; ++i)
        if (rep[i] == i) {
            int id = static_cast<int>(relabel.size());
            relabel[i] = id;
        }
    std::set<std::vector<int>> qfacets;
    int top = sd.complex->dim();
    for (const auto& f : sd.complex->simplices(top)) {
        std::vector<int> q;
        for (int v : f)
            q.push_back(relabel.at(rep[v]));
        std::sort(q.begin(), q.end());
        if (std::adjacent_find(q.begin(), q.end()) != q.end())
            throw SimplicialError("antipodal quotient degenerated a facet");
        qfacets.insert(q);
    }
    std::vector<int> qverts(relabel.size());
    std::iota(qverts.begin(), qverts.end(), 0);
    return build_complex(qverts,
                         std::vector<std::vector<int>>(qfacets.begin(), qfacets.end()));
}

FundamentalCycle sphere_orientation_cycle(const ComplexPtr& boundary, int n)
{
    std::map<Simplex, Int> weights;
    std::vector<int> verts(n + 1);
    std::iota(verts.begin(), verts.end(), 0);
    for (int j = 0; j <= n; ++j)
        weights[face_of(verts, j)] = (j % 2 == 0) ? 1 : -1;
    return FundamentalCycle(boundary, n - 1, std::move(weights));
}

FundamentalCycle top_cycle_by_kernel(const ComplexPtr& K)
{
    int n = K->dim();
    const auto& tops = K->simplices(n);
    const auto& faces = K->simplices(n - 1);
    IntMat bd(static_cast<int>(faces.size()), static_cast<int>(tops.size()));
    for (int j = 0; j < static_cast<int>(tops.size()); ++j)
        for (int k = 0; k <= n; ++k) {
            int i = K->index_of(face_of(tops[j], k));
            bd.a[i][j] += (k % 2 == 0) ? 1 : -1;
        }
    auto basis = kernel_integer(bd);
    if (basis.size() != 1)
        throw SimplicialError("top homology is not rank one");
    Int content = 0;
    for (const auto& v : basis[0])
        content = gcd(content, v);
    std::map<Simplex, Int> weights;
    for (int j = 0; j < static_cast<int>(tops.size()); ++j)
        if (basis[0][j] != 0)
            weights[tops[j]] = basis[0][j] / content;
    return FundamentalCycle(K, n, std::move(weights));
}

} // namespace gerbecalc
