#include "gerbecalc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gerbecalc {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> element_names,
                         std::vector<std::vector<int>> table)
    : name_(std::move(name)), names_(std::move(element_names)), table_(std::move(table))
{
    int n = static_cast<int>(table_.size());
    if (n == 0 || static_cast<int>(names_.size()) != n)
        throw GroupError("group table/name size mismatch");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw GroupError("group table not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw GroupError("group table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw GroupError("element 0 is not an identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw GroupError("multiplication not associative");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == 0 && table_[b][a] == 0) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0)
            throw GroupError("element without inverse");
    }
    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] != table_[b][a]) {
                abelian_ = false;
                break;
            }
}

int FiniteGroup::element_by_name(const std::string& s) const
{
    for (int i = 0; i < order(); ++i)
        if (names_[i] == s)
            return i;
    return -1;
}

GroupPtr FiniteGroup::cyclic(int n)
{
    if (n < 1)
        throw GroupError("cyclic group needs n >= 1");
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        names[a] = std::to_string(a);
        for (int b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    }
    return std::make_shared<FiniteGroup>("Z" + std::to_string(n), std::move(names),
                                         std::move(table));
}

GroupPtr FiniteGroup::symmetric(int n)
{
    if (n < 1 || n > 5)
        throw GroupError("symmetric group supported for n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // identity must be index 0; std::next_permutation starts there already
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = static_cast<int>(i);
    int m = static_cast<int>(perms.size());
    std::vector<std::string> names(m);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        std::string s;
        for (int v : perms[a])
            s += std::to_string(v);
        names[a] = s;
        for (int b = 0; b < m; ++b) {
            std::vector<int> comp(n); // (a*b)(x) = a(b(x))
            for (int x = 0; x < n; ++x)
                comp[x] = perms[a][perms[b][x]];
            table[a][b] = index.at(comp);
        }
    }
    return std::make_shared<FiniteGroup>("S" + std::to_string(n), std::move(names),
                                         std::move(table));
}

GroupPtr FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    int n = a.order() * b.order();
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1) {
            names[idx(x1, y1)] = "(" + a.element_name(x1) + "," + b.element_name(y1) + ")";
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    table[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
    return std::make_shared<FiniteGroup>(a.name() + "x" + b.name(), std::move(names),
                                         std::move(table));
}

} // namespace gerbecalc
