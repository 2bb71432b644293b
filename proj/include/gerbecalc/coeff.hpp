#ifndef GERBECALC_COEFF_HPP
#define GERBECALC_COEFF_HPP

#include "gerbecalc/rational.hpp"

#include <stdexcept>
#include <string>

namespace gerbecalc {

struct CoeffError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CoeffTag { Integers, Rationals, RationalsModOne, Cyclic };

// Abelian coefficient group.  Elements are stored as Rat in a canonical form:
// Integers / Cyclic(n) have integer values (Cyclic reduced to [0,n)),
// RationalsModOne values lie in [0,1).
class CoeffGroup {
public:
    static CoeffGroup integers() { return CoeffGroup(CoeffTag::Integers, 0); }
    static CoeffGroup rationals() { return CoeffGroup(CoeffTag::Rationals, 0); }
    static CoeffGroup rationals_mod_one() { return CoeffGroup(CoeffTag::RationalsModOne, 0); }
    static CoeffGroup cyclic(const Int& n)
    {
        if (n < 1)
            throw CoeffError("Cyclic(n) needs n >= 1");
        return CoeffGroup(CoeffTag::Cyclic, n);
    }

    CoeffTag tag() const { return tag_; }
    const Int& modulus() const { return n_; } // Cyclic only

    bool has_ring_structure() const
    {
        return tag_ == CoeffTag::Integers || tag_ == CoeffTag::Rationals;
    }

    Rat reduce(const Rat& v) const; // canonical form; throws if v is not an element
    Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
    Rat negate(const Rat& a) const { return reduce(-a); }
    Rat zero() const { return 0; }

    std::string name() const;
    bool operator==(const CoeffGroup& o) const { return tag_ == o.tag_ && n_ == o.n_; }
    bool operator!=(const CoeffGroup& o) const { return !(*this == o); }

private:
    CoeffGroup(CoeffTag t, Int n) : tag_(t), n_(std::move(n)) {}
    CoeffTag tag_;
    Int n_;
};

// Short exact sequence sub -> mid -> quot with a set-level section of the
// projection.  Instances: Z -> Q -> Q/Z and Cyclic(n) -> Cyclic(n*m) ->
// Cyclic(m).
struct CoeffSequence {
    CoeffGroup sub;
    CoeffGroup mid;
    CoeffGroup quot;

    Rat include(const Rat& sub_elem) const;  // sub -> mid
    Rat project(const Rat& mid_elem) const;  // mid -> quot
    Rat section(const Rat& quot_elem) const; // quot -> mid, canonical lift
    // preimage under `include` of a mid element known to lie in the kernel of
    // the projection; throws if it does not.
    Rat divide(const Rat& mid_elem) const;

    static CoeffSequence exponential(); // Z -> Q -> Q/Z
    static CoeffSequence cyclic(const Int& n, const Int& m);
};

} // namespace gerbecalc

#endif
