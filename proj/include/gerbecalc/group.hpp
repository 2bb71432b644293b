#ifndef GERBECALC_GROUP_HPP
#define GERBECALC_GROUP_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gerbecalc {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite group given by its multiplication table.  Elements are indices
// 0..order-1 with printable names; index 0 is always the identity.
// The group axioms are checked on construction.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::string> element_names,
                std::vector<std::vector<int>> table);

    static std::shared_ptr<const FiniteGroup> cyclic(int n);
    static std::shared_ptr<const FiniteGroup> symmetric(int n); // n <= 5
    static std::shared_ptr<const FiniteGroup> direct_product(const FiniteGroup& a,
                                                             const FiniteGroup& b);

    const std::string& name() const { return name_; }
    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return 0; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    bool abelian() const { return abelian_; }

    const std::string& element_name(int a) const { return names_[a]; }
    // -1 if no element has this name
    int element_by_name(const std::string& s) const;

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    bool abelian_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

} // namespace gerbecalc

#endif
