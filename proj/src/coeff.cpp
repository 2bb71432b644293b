#include "gerbecalc/coeff.hpp"

namespace gerbecalc {

Rat CoeffGroup::reduce(const Rat& v) const
{
    switch (tag_) {
    case CoeffTag::Integers:
        if (!is_integer(v))
            throw CoeffError("value is not an integer");
        return v;
    case CoeffTag::Rationals:
        return v;
    case CoeffTag::RationalsModOne:
        return mod_one(v);
    case CoeffTag::Cyclic:
        if (!is_integer(v))
            throw CoeffError("value is not an integer residue");
        return Rat(mod_int(rat_num(v), n_));
    }
    throw CoeffError("bad coefficient tag");
}

std::string CoeffGroup::name() const
{
    switch (tag_) {
    case CoeffTag::Integers:
        return "Z";
    case CoeffTag::Rationals:
        return "Q";
    case CoeffTag::RationalsModOne:
        return "Q/Z";
    case CoeffTag::Cyclic:
        return "Z" + n_.str();
    }
    return "?";
}

Rat CoeffSequence::include(const Rat& v) const
{
    if (mid.tag() == CoeffTag::Rationals)
        return v;
    // Cyclic(n) -> Cyclic(n*m): k -> k*m
    Int m = quot.modulus();
    return mid.reduce(v * Rat(m));
}

Rat CoeffSequence::project(const Rat& v) const
{
    if (quot.tag() == CoeffTag::RationalsModOne)
        return mod_one(v);
    return quot.reduce(v); // Cyclic(n*m) -> Cyclic(m): reduce mod m
}

Rat CoeffSequence::section(const Rat& v) const
{
    // Canonical representative: [0,1) into Q, or [0,m) into Z_{n*m}.
    return quot.reduce(v);
}

Rat CoeffSequence::divide(const Rat& v) const
{
    if (project(v) != quot.zero())
        throw CoeffError("element is not in the kernel of the projection");
    if (mid.tag() == CoeffTag::Rationals)
        return sub.reduce(v);
    Int m = quot.modulus();
    return sub.reduce(v / Rat(m));
}

CoeffSequence CoeffSequence::exponential()
{
    return CoeffSequence{CoeffGroup::integers(), CoeffGroup::rationals(),
                         CoeffGroup::rationals_mod_one()};
}

CoeffSequence CoeffSequence::cyclic(const Int& n, const Int& m)
{
    return CoeffSequence{CoeffGroup::cyclic(n), CoeffGroup::cyclic(n * m),
                         CoeffGroup::cyclic(m)};
}

} // namespace gerbecalc
