#include "gerbecalc/cochain.hpp"

namespace gerbecalc {

Cochain::Cochain(ComplexPtr complex, int degree, CoeffGroup coeff)
    : complex_(std::move(complex)), degree_(degree), coeff_(std::move(coeff))
{
    if (degree_ < 0)
        throw CochainError("negative cochain degree");
}

Rat Cochain::value(const Simplex& s) const
{
    auto it = values_.find(s);
    return it == values_.end() ? Rat(0) : it->second;
}

void Cochain::set(const Simplex& s, const Rat& v)
{
    if (static_cast<int>(s.size()) != degree_ + 1 || !complex_->contains(s))
        throw CochainError("cochain key is not a simplex of the right degree");
    Rat r = coeff_.reduce(v);
    if (r == 0)
        values_.erase(s);
    else
        values_[s] = r;
}

void Cochain::add_to(const Simplex& s, const Rat& v) { set(s, value(s) + v); }

Cochain Cochain::operator+(const Cochain& o) const
{
    if (degree_ != o.degree_ || coeff_ != o.coeff_ || complex_ != o.complex_)
        throw CochainError("Mismatch: cochain addition needs same complex/degree/coeff");
    Cochain out(*this);
    for (const auto& [s, v] : o.values_)
        out.add_to(s, v);
    return out;
}

Cochain Cochain::operator-() const
{
    Cochain out(complex_, degree_, coeff_);
    for (const auto& [s, v] : values_)
        out.set(s, -v);
    return out;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

bool Cochain::operator==(const Cochain& o) const
{
    return degree_ == o.degree_ && coeff_ == o.coeff_ && complex_ == o.complex_ &&
           values_ == o.values_;
}

Cochain Cochain::scaled(const Rat& r) const
{
    if (!is_integer(r) && !coeff_.has_ring_structure())
        throw CochainError("NoRingStructure: non-integer scaling needs ring coefficients");
    Cochain out(complex_, degree_, coeff_);
    for (const auto& [s, v] : values_)
        out.set(s, v * r);
    return out;
}

Cochain Cochain::restricted_to(ComplexPtr sub) const
{
    Cochain out(std::move(sub), degree_, coeff_);
    for (const auto& [s, v] : values_)
        if (out.complex()->contains(s))
            out.set(s, v);
    return out;
}

Cochain Cochain::extended_to(ComplexPtr super) const
{
    Cochain out(std::move(super), degree_, coeff_);
    for (const auto& [s, v] : values_)
        out.set(s, v);
    return out;
}

Cochain coboundary_d(const Cochain& c)
{
    Cochain out(c.complex(), c.degree() + 1, c.coeff());
    if (c.degree() + 1 > c.complex()->dim())
        return out; // zero cochain one degree up
    for (const auto& t : c.complex()->simplices(c.degree() + 1)) {
        Rat acc = 0;
        for (int j = 0; j < static_cast<int>(t.size()); ++j) {
            Rat v = c.value(face_of(t, j));
            acc += (j % 2 == 0) ? v : -v;
        }
        out.set(t, acc);
    }
    return out;
}

Cochain cup(const Cochain& a, const Cochain& b)
{
    if (a.complex() != b.complex())
        throw CochainError("Mismatch: cup product needs one complex");
    if (a.coeff() != b.coeff() || !a.coeff().has_ring_structure())
        throw CochainError("NoRingStructure: cup needs Integers or Rationals");
    int p = a.degree(), q = b.degree();
    Cochain out(a.complex(), p + q, a.coeff());
    if (p + q > a.complex()->dim())
        return out;
    for (const auto& s : a.complex()->simplices(p + q)) {
        Simplex front(s.begin(), s.begin() + p + 1);
        Simplex back(s.begin() + p, s.end());
        Rat v = a.value(front) * b.value(back);
        out.set(s, v);
    }
    return out;
}

Rat pair_cycle(const Cochain& c, const FundamentalCycle& z)
{
    if (c.degree() != z.degree())
        throw CochainError("DegreeMismatch: pairing needs matching degrees");
    if (c.complex() != z.complex())
        throw CochainError("Mismatch: pairing needs one complex");
    Rat acc = 0;
    for (const auto& [s, w] : z.weights())
        acc += Rat(w) * c.value(s);
    return acc;
}

IntMat coboundary_matrix(const SimplicialComplex& K, int p)
{
    int rows = K.count(p + 1);
    int cols = K.count(p);
    IntMat m(rows, cols);
    const auto& tops = K.simplices(p + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p + 2; ++j) {
            int col = K.index_of(face_of(tops[i], j));
            m.a[i][col] += (j % 2 == 0) ? 1 : -1;
        }
    return m;
}

RatVec cochain_to_vec(const Cochain& c)
{
    const auto& simps = c.complex()->simplices(c.degree());
    RatVec v(simps.size(), 0);
    for (size_t i = 0; i < simps.size(); ++i)
        v[i] = c.value(simps[i]);
    return v;
}

Cochain vec_to_cochain(const ComplexPtr& K, int degree, const CoeffGroup& g, const RatVec& v)
{
    Cochain c(K, degree, g);
    const auto& simps = K->simplices(degree);
    for (size_t i = 0; i < simps.size(); ++i)
        if (v[i] != 0)
            c.set(simps[i], v[i]);
    return c;
}

CoeffSolveResult solve_over_coeff(const IntMat& A, const RatVec& b, const CoeffGroup& g)
{
    CoeffSolveResult res;
    switch (g.tag()) {
    case CoeffTag::Integers:
    case CoeffTag::Cyclic: {
        IntVec bi(b.size());
        for (size_t i = 0; i < b.size(); ++i)
            bi[i] = rat_num(b[i]);
        auto r = (g.tag() == CoeffTag::Integers) ? solve_integer(A, bi)
                                                 : solve_mod(A, bi, g.modulus());
        if (!r.ok()) {
            res.obstruction = r.obstruction;
            return res;
        }
        RatVec sol(r.solution->size());
        for (size_t i = 0; i < sol.size(); ++i)
            sol[i] = Rat((*r.solution)[i]);
        res.solution = std::move(sol);
        return res;
    }
    case CoeffTag::RationalsModOne: {
        auto r = solve_mod_one(A, b);
        if (!r.ok())
            res.obstruction = r.obstruction;
        else
            res.solution = *r.solution;
        return res;
    }
    case CoeffTag::Rationals: {
        RatMat aq(A.rows, A.cols);
        for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < A.cols; ++j)
                aq.a[i][j] = Rat(A.a[i][j]);
        auto r = solve_rational(aq, b);
        if (r) {
            res.solution = *r;
            return res;
        }
        // derive an integer functional from the rational left kernel
        for (const auto& u : left_kernel_rational(aq)) {
            Rat val = 0;
            for (size_t i = 0; i < b.size(); ++i)
                val += u[i] * b[i];
            if (val != 0) {
                Int den = 1;
                for (const auto& e : u)
                    den = lcm(den, rat_den(e));
                LinearObstruction ob;
                ob.functional.resize(u.size());
                for (size_t i = 0; i < u.size(); ++i)
                    ob.functional[i] = rat_num(u[i] * Rat(den));
                ob.modulus = 0;
                ob.value = val * Rat(den);
                res.obstruction = std::move(ob);
                return res;
            }
        }
        throw CochainError("rational solve failed without certificate");
    }
    }
    throw CochainError("bad coefficient tag");
}

CochainSolveResult solve_coboundary(const Cochain& x)
{
    CochainSolveResult res;
    const auto& K = *x.complex();
    int p = x.degree();
    if (p == 0) {
        // the image of d from degree -1 is zero
        if (x.is_zero())
            throw CochainError("no degree -1 cochains; solve at degree >= 1");
        LinearObstruction ob;
        ob.functional.assign(K.count(0), 0);
        int i = K.index_of(x.values().begin()->first);
        ob.functional[i] = 1;
        ob.modulus = (x.coeff().tag() == CoeffTag::RationalsModOne) ? Int(1) : Int(0);
        ob.value = x.values().begin()->second;
        res.obstruction = std::move(ob);
        return res;
    }
    IntMat d = coboundary_matrix(K, p - 1);
    auto r = solve_over_coeff(d, cochain_to_vec(x), x.coeff());
    if (!r.ok()) {
        res.obstruction = r.obstruction;
        return res;
    }
    res.solution = vec_to_cochain(x.complex(), p - 1, x.coeff(), *r.solution);
    return res;
}

bool pairs_integrally(const Cochain& c)
{
    if (c.coeff().tag() != CoeffTag::Rationals && c.coeff().tag() != CoeffTag::Integers)
        throw CochainError("integrality check needs Z or Q coefficients");
    const auto& K = *c.complex();
    int q = c.degree();
    if (q == 0) {
        for (const auto& [s, v] : c.values())
            if (!is_integer(v))
                return false;
        return true;
    }
    // cycles in degree q = kernel of the boundary C_q -> C_{q-1}; that matrix
    // is the transpose of the degree-(q-1) coboundary.
    IntMat d = coboundary_matrix(K, q - 1);
    IntMat bd(d.cols, d.rows);
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j)
            bd.a[j][i] = d.a[i][j];
    RatVec v = cochain_to_vec(c);
    for (const auto& z : kernel_integer(bd)) {
        Rat acc = 0;
        for (size_t i = 0; i < z.size(); ++i)
            if (z[i] != 0)
                acc += Rat(z[i]) * v[i];
        if (!is_integer(acc))
            return false;
    }
    return true;
}

} // namespace gerbecalc
