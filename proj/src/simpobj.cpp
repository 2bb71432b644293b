#include "gerbecalc/simpobj.hpp"

#include <stdexcept>

namespace gerbecalc {

TruncatedSimplicialObject::TruncatedSimplicialObject(
    std::vector<int> level_sizes, std::vector<std::vector<std::vector<int>>> face,
    std::vector<std::vector<std::vector<int>>> degeneracy,
    std::vector<std::vector<std::string>> labels)
    : sizes_(std::move(level_sizes)),
      face_(std::move(face)),
      degeneracy_(std::move(degeneracy)),
      labels_(std::move(labels))
{
}

void TruncatedSimplicialObject::swap_faces(int p, int i, int j)
{
    std::swap(face_[p][i], face_[p][j]);
}

void TruncatedSimplicialObject::override_face(int p, int i, std::vector<int> table)
{
    face_[p][i] = std::move(table);
}

SimplicialIdentityReport verify_simplicial_identities(const TruncatedSimplicialObject& X)
{
    SimplicialIdentityReport report;
    int n = X.top_level();
    auto record = [&](const std::string& id, const std::string& witness) {
        report.pass = false;
        for (const auto& v : report.violations)
            if (v.identity == id)
                return; // first witness only
        report.violations.push_back({id, witness});
    };

    // d_i d_j = d_{j-1} d_i for i < j (needs level p >= 2)
    for (int p = 2; p <= n; ++p)
        for (int j = 1; j <= p; ++j)
            for (int i = 0; i < j; ++i)
                for (int x = 0; x < X.size(p); ++x) {
                    int lhs = X.face(p - 1, i, X.face(p, j, x));
                    int rhs = X.face(p - 1, j - 1, X.face(p, i, x));
                    if (lhs != rhs)
                        record("d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                   " = d_" + std::to_string(j - 1) + " d_" +
                                   std::to_string(i) + " at level " + std::to_string(p),
                               X.label(p, x));
                }

    // s_i s_j = s_{j+1} s_i for i <= j (s_j at level p, then s_i at level p+1)
    for (int p = 0; p + 2 <= n; ++p)
        for (int j = 0; j <= p; ++j)
            for (int i = 0; i <= j; ++i)
                for (int x = 0; x < X.size(p); ++x) {
                    int lhs = X.degeneracy(p + 1, i, X.degeneracy(p, j, x));
                    int rhs = X.degeneracy(p + 1, j + 1, X.degeneracy(p, i, x));
                    if (lhs != rhs)
                        record("s_" + std::to_string(i) + " s_" + std::to_string(j) +
                                   " = s_" + std::to_string(j + 1) + " s_" +
                                   std::to_string(i) + " at level " + std::to_string(p),
                               X.label(p, x));
                }

    // d_i s_j: three cases (s_j at level p, d_i at level p+1)
    for (int p = 0; p + 1 <= n; ++p)
        for (int j = 0; j <= p; ++j)
            for (int i = 0; i <= p + 1; ++i)
                for (int x = 0; x < X.size(p); ++x) {
                    int lhs = X.face(p + 1, i, X.degeneracy(p, j, x));
                    int rhs;
                    std::string rhs_name;
                    if (i == j || i == j + 1) {
                        rhs = x;
                        rhs_name = "id";
                    } else if (i < j) {
                        if (p < 1)
                            continue;
                        rhs = X.degeneracy(p - 1, j - 1, X.face(p, i, x));
                        rhs_name = "s_" + std::to_string(j - 1) + " d_" + std::to_string(i);
                    } else { // i > j + 1
                        rhs = X.degeneracy(p - 1, j, X.face(p, i - 1, x));
                        rhs_name = "s_" + std::to_string(j) + " d_" + std::to_string(i - 1);
                    }
                    if (lhs != rhs)
                        record("d_" + std::to_string(i) + " s_" + std::to_string(j) + " = " +
                                   rhs_name + " at level " + std::to_string(p),
                               X.label(p, x));
                }

    return report;
}

namespace {

// Tuples of group elements <-> indices, little-endian in the group order.
int tuple_to_index(const std::vector<int>& t, int m)
{
    int idx = 0;
    for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k)
        idx = idx * m + t[k];
    return idx;
}

std::vector<int> index_to_tuple(int idx, int len, int m)
{
    std::vector<int> t(len);
    for (int k = 0; k < len; ++k) {
        t[k] = idx % m;
        idx /= m;
    }
    return t;
}

int int_pow(int b, int e)
{
    int r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

std::string tuple_label(const FiniteGroup& G, const std::vector<int>& t)
{
    std::string s = "(";
    for (size_t k = 0; k < t.size(); ++k) {
        if (k)
            s += ",";
        s += G.element_name(t[k]);
    }
    return s + ")";
}

} // namespace

TruncatedSimplicialObject nerve_of_group(const GroupPtr& G, int n)
{
    if (n < 1)
        throw GroupError("nerve truncation level must be >= 1");
    int m = G->order();
    std::vector<int> sizes(n + 1);
    std::vector<std::vector<std::string>> labels(n + 1);
    for (int p = 0; p <= n; ++p) {
        sizes[p] = int_pow(m, p);
        labels[p].resize(sizes[p]);
        for (int x = 0; x < sizes[p]; ++x)
            labels[p][x] = tuple_label(*G, index_to_tuple(x, p, m));
    }
    std::vector<std::vector<std::vector<int>>> face(n + 1), degen(n + 1);
    for (int p = 1; p <= n; ++p) {
        face[p].assign(p + 1, std::vector<int>(sizes[p]));
        for (int x = 0; x < sizes[p]; ++x) {
            auto t = index_to_tuple(x, p, m); // (g_1,...,g_p)
            for (int i = 0; i <= p; ++i) {
                std::vector<int> out;
                if (i == 0)
                    out.assign(t.begin() + 1, t.end());
                else if (i == p)
                    out.assign(t.begin(), t.end() - 1);
                else {
                    out = t;
                    out[i - 1] = G->mul(t[i - 1], t[i]);
                    out.erase(out.begin() + i);
                }
                face[p][i][x] = tuple_to_index(out, m);
            }
        }
    }
    for (int p = 0; p < n; ++p) {
        degen[p].assign(p + 1, std::vector<int>(sizes[p]));
        for (int x = 0; x < sizes[p]; ++x) {
            auto t = index_to_tuple(x, p, m);
            for (int i = 0; i <= p; ++i) {
                auto out = t;
                out.insert(out.begin() + i, G->identity());
                degen[p][i][x] = tuple_to_index(out, m);
            }
        }
    }
    return TruncatedSimplicialObject(std::move(sizes), std::move(face), std::move(degen),
                                     std::move(labels));
}

BarNerveWithProjection nerve_bar_and_projection(const GroupPtr& G, int n)
{
    if (n < 1)
        throw GroupError("nerve truncation level must be >= 1");
    int m = G->order();
    std::vector<int> sizes(n + 1);
    std::vector<std::vector<std::string>> labels(n + 1);
    for (int p = 0; p <= n; ++p) {
        sizes[p] = int_pow(m, p + 1);
        labels[p].resize(sizes[p]);
        for (int x = 0; x < sizes[p]; ++x)
            labels[p][x] = tuple_label(*G, index_to_tuple(x, p + 1, m));
    }
    std::vector<std::vector<std::vector<int>>> face(n + 1), degen(n + 1);
    for (int p = 1; p <= n; ++p) {
        face[p].assign(p + 1, std::vector<int>(sizes[p]));
        for (int x = 0; x < sizes[p]; ++x) {
            auto t = index_to_tuple(x, p + 1, m); // (g_0,...,g_p)
            for (int i = 0; i <= p; ++i) {
                auto out = t;
                out.erase(out.begin() + i);
                face[p][i][x] = tuple_to_index(out, m);
            }
        }
    }
    for (int p = 0; p < n; ++p) {
        degen[p].assign(p + 1, std::vector<int>(sizes[p]));
        for (int x = 0; x < sizes[p]; ++x) {
            auto t = index_to_tuple(x, p + 1, m);
            for (int i = 0; i <= p; ++i) {
                auto out = t;
                out.insert(out.begin() + i, t[i]);
                degen[p][i][x] = tuple_to_index(out, m);
            }
        }
    }

    BarNerveWithProjection result{
        TruncatedSimplicialObject(sizes, std::move(face), std::move(degen), std::move(labels)),
        nerve_of_group(G, n),
        {}};
    result.projection.resize(n + 1);
    for (int p = 0; p <= n; ++p) {
        result.projection[p].resize(sizes[p]);
        for (int x = 0; x < sizes[p]; ++x) {
            auto t = index_to_tuple(x, p + 1, m);
            std::vector<int> q(p);
            for (int k = 0; k < p; ++k)
                q[k] = G->mul(G->inv(t[k]), t[k + 1]);
            result.projection[p][x] = tuple_to_index(q, m);
        }
    }
    return result;
}

std::vector<std::string> projection_commutation_failures(const BarNerveWithProjection& b)
{
    std::vector<std::string> failures;
    int n = b.bar.top_level();
    for (int p = 1; p <= n; ++p)
        for (int i = 0; i <= p; ++i)
            for (int x = 0; x < b.bar.size(p); ++x) {
                int lhs = b.projection[p - 1][b.bar.face(p, i, x)];
                int rhs = b.nerve.face(p, i, b.projection[p][x]);
                if (lhs != rhs) {
                    failures.push_back("p d_" + std::to_string(i) + " != d_" +
                                       std::to_string(i) + " p at level " + std::to_string(p) +
                                       " on " + b.bar.label(p, x));
                    break;
                }
            }
    for (int p = 0; p < n; ++p)
        for (int i = 0; i <= p; ++i)
            for (int x = 0; x < b.bar.size(p); ++x) {
                int lhs = b.projection[p + 1][b.bar.degeneracy(p, i, x)];
                int rhs = b.nerve.degeneracy(p, i, b.projection[p][x]);
                if (lhs != rhs) {
                    failures.push_back("p s_" + std::to_string(i) + " != s_" +
                                       std::to_string(i) + " p at level " + std::to_string(p) +
                                       " on " + b.bar.label(p, x));
                    break;
                }
            }
    return failures;
}

} // namespace gerbecalc
