#include "gerbecalc/cech.hpp"

#include <algorithm>
#include <cassert>

namespace gerbecalc {

namespace {

// sign of the permutation sorting idx, or 0 on repeats
int sort_sign(std::vector<int>& idx)
{
    int sign = 1;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j])
                return 0;
            if (idx[i] > idx[j])
                sign = -sign;
        }
    std::sort(idx.begin(), idx.end());
    return sign;
}

std::string tuple_name(const Simplex& t)
{
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

} // namespace

CechCochain::CechCochain(CoverPtr cover, int degree, CechInner inner)
    : cover_(std::move(cover)), degree_(degree), inner_(std::move(inner))
{
    if (degree_ < 0)
        throw CechError("negative Čech degree");
}

CechCochain CechCochain::elements(CoverPtr cover, int degree, CoeffGroup coeff)
{
    return CechCochain(std::move(cover), degree, CechInner{false, 0, std::move(coeff)});
}

CechCochain CechCochain::forms(CoverPtr cover, int degree, int form_degree, CoeffGroup coeff)
{
    if (form_degree < 0)
        throw CechError("negative form degree");
    return CechCochain(std::move(cover), degree, CechInner{true, form_degree, std::move(coeff)});
}

void CechCochain::check_tuple(const Simplex& tuple) const
{
    if (static_cast<int>(tuple.size()) != degree_ + 1)
        throw CechError("tuple length does not match the Čech degree");
    if (!cover_->nerve()->contains(tuple))
        throw CechError("tuple " + tuple_name(tuple) + " has empty intersection");
}

Rat CechCochain::element_at(const Simplex& tuple) const
{
    auto it = elem_.find(tuple);
    return it == elem_.end() ? Rat(0) : it->second;
}

Cochain CechCochain::form_at(const Simplex& tuple) const
{
    auto it = form_.find(tuple);
    if (it != form_.end())
        return it->second;
    return Cochain(cover_->base(), inner_.form_degree, inner_.coeff);
}

void CechCochain::set_element(const Simplex& tuple, const Rat& v)
{
    if (inner_.is_form)
        throw CechError("element value on a form-valued cochain");
    check_tuple(tuple);
    Rat r = inner_.coeff.reduce(v);
    if (r == 0)
        elem_.erase(tuple);
    else
        elem_[tuple] = r;
}

void CechCochain::set_form(const Simplex& tuple, const Cochain& c)
{
    if (!inner_.is_form)
        throw CechError("form value on an element-valued cochain");
    check_tuple(tuple);
    if (c.degree() != inner_.form_degree || c.coeff() != inner_.coeff ||
        c.complex() != cover_->base())
        throw CechError("form value has the wrong degree, coefficients or complex");
    for (const auto& [s, v] : c.values())
        if (!cover_->simplex_in_tuple(s, tuple))
            throw CechError("form value supported outside the intersection of " +
                            tuple_name(tuple));
    if (c.is_zero())
        form_.erase(tuple);
    else
        form_.insert_or_assign(tuple, c);
}

void CechCochain::add_element(const Simplex& tuple, const Rat& v)
{
    set_element(tuple, element_at(tuple) + v);
}

void CechCochain::add_form(const Simplex& tuple, const Cochain& c)
{
    set_form(tuple, form_at(tuple) + c);
}

Rat CechCochain::element_alternating(const std::vector<int>& idx) const
{
    std::vector<int> t = idx;
    int sign = sort_sign(t);
    if (sign == 0)
        return 0;
    Rat v = element_at(t);
    return inner_.coeff.reduce(sign > 0 ? v : -v);
}

Rat CechCochain::form_entry_alternating(const std::vector<int>& idx, const Simplex& s) const
{
    std::vector<int> t = idx;
    int sign = sort_sign(t);
    if (sign == 0)
        return 0;
    auto it = form_.find(t);
    if (it == form_.end())
        return 0;
    Rat v = it->second.value(s);
    return inner_.coeff.reduce(sign > 0 ? v : -v);
}

CechCochain CechCochain::operator+(const CechCochain& o) const
{
    if (cover_ != o.cover_ || degree_ != o.degree_ || !(inner_ == o.inner_))
        throw CechError("Mismatch: Čech addition needs matching cover/degree/inner type");
    CechCochain out(*this);
    for (const auto& [t, v] : o.elem_)
        out.add_element(t, v);
    for (const auto& [t, c] : o.form_)
        out.add_form(t, c);
    return out;
}

CechCochain CechCochain::operator-() const
{
    CechCochain out(cover_, degree_, inner_);
    for (const auto& [t, v] : elem_)
        out.set_element(t, -v);
    for (const auto& [t, c] : form_)
        out.set_form(t, -c);
    return out;
}

CechCochain CechCochain::operator-(const CechCochain& o) const { return *this + (-o); }

bool CechCochain::operator==(const CechCochain& o) const
{
    return cover_ == o.cover_ && degree_ == o.degree_ && inner_ == o.inner_ &&
           elem_ == o.elem_ && form_ == o.form_;
}

CechCochain CechCochain::scaled(const Rat& r) const
{
    CechCochain out(cover_, degree_, inner_);
    for (const auto& [t, v] : elem_)
        out.set_element(t, v * r);
    for (const auto& [t, c] : form_)
        out.set_form(t, c.scaled(r));
    return out;
}

CechCochain cech_delta(const CechCochain& c)
{
    const auto& nerve = *c.cover()->nerve();
    int p = c.degree();
    CechCochain out = c.inner().is_form
                          ? CechCochain::forms(c.cover(), p + 1, c.inner().form_degree,
                                               c.inner().coeff)
                          : CechCochain::elements(c.cover(), p + 1, c.inner().coeff);
    if (p + 1 > nerve.dim())
        return out;
    for (const auto& t : nerve.simplices(p + 1)) {
        if (!c.inner().is_form) {
            Rat acc = 0;
            for (int j = 0; j < static_cast<int>(t.size()); ++j) {
                Rat v = c.element_at(face_of(t, j));
                acc += (j % 2 == 0) ? v : -v;
            }
            out.set_element(t, acc);
        } else {
            Cochain acc(c.cover()->base(), c.inner().form_degree, c.inner().coeff);
            for (int j = 0; j < static_cast<int>(t.size()); ++j) {
                Cochain v = c.form_at(face_of(t, j));
                acc = (j % 2 == 0) ? acc + v : acc - v;
            }
            // restrict to the deeper intersection
            Cochain res(c.cover()->base(), c.inner().form_degree, c.inner().coeff);
            for (const auto& [s, v] : acc.values())
                if (c.cover()->simplex_in_tuple(s, t))
                    res.set(s, v);
            out.set_form(t, res);
        }
    }
    return out;
}

CechCochain form_coboundary(const CechCochain& c)
{
    if (!c.inner().is_form)
        throw CechError("form coboundary of an element-valued cochain");
    CechCochain out = CechCochain::forms(c.cover(), c.degree(), c.inner().form_degree + 1,
                                         c.inner().coeff);
    for (const auto& [t, v] : c.form_values()) {
        Cochain dv = coboundary_d(v);
        Cochain res(c.cover()->base(), dv.degree(), c.inner().coeff);
        for (const auto& [s, val] : dv.values())
            if (c.cover()->simplex_in_tuple(s, t))
                res.set(s, val);
        out.set_form(t, res);
    }
    return out;
}

Cochain cech_as_nerve_cochain(const CechCochain& c)
{
    if (c.inner().is_form)
        throw CechError("only element-valued cochains live on the nerve");
    Cochain out(c.cover()->nerve(), c.degree(), c.inner().coeff);
    for (const auto& [t, v] : c.element_values())
        out.set(t, v);
    return out;
}

CechCochain nerve_cochain_as_cech(const CoverPtr& cover, const Cochain& c)
{
    if (c.complex() != cover->nerve())
        throw CechError("cochain does not live on this cover's nerve");
    CechCochain out = CechCochain::elements(cover, c.degree(), c.coeff());
    for (const auto& [t, v] : c.values())
        out.set_element(t, v);
    return out;
}

CechCochain embed_constants(const CechCochain& c)
{
    if (c.inner().is_form)
        throw CechError("embed_constants expects an element-valued cochain");
    CoeffGroup g = c.inner().coeff;
    // constants become 0-forms; Q/Z and cyclic values keep their coefficient
    // group so that d still annihilates them
    CechCochain out = CechCochain::forms(c.cover(), c.degree(), 0, g);
    const auto& base = *c.cover()->base();
    for (const auto& [t, v] : c.element_values()) {
        Cochain f(c.cover()->base(), 0, g);
        for (const auto& vs : base.simplices(0))
            if (c.cover()->simplex_in_tuple(vs, t))
                f.set(vs, v);
        out.set_form(t, f);
    }
    return out;
}

// --- total complex -----------------------------------------------------------

TotalCochain::TotalCochain(CoverPtr cover, int total_degree, CoeffGroup coeff)
    : cover_(std::move(cover)), degree_(total_degree), coeff_(std::move(coeff))
{
    if (degree_ < 0)
        throw CechError("negative total degree");
}

void TotalCochain::set_piece(const CechCochain& piece)
{
    if (!piece.inner().is_form)
        throw CechError("total cochains are form-valued; embed constants first");
    if (piece.cover() != cover_ || !(piece.inner().coeff == coeff_))
        throw CechError("piece cover/coefficients mismatch");
    if (piece.degree() + piece.inner().form_degree != degree_)
        throw CechError("piece bidegree does not sum to the total degree");
    if (piece.is_zero())
        pieces_.erase(piece.degree());
    else
        pieces_.insert_or_assign(piece.degree(), piece);
}

CechCochain TotalCochain::piece_or_zero(int p) const
{
    auto it = pieces_.find(p);
    if (it != pieces_.end())
        return it->second;
    return CechCochain::forms(cover_, p, degree_ - p, coeff_);
}

bool TotalCochain::is_zero() const { return pieces_.empty(); }

TotalCochain TotalCochain::operator+(const TotalCochain& o) const
{
    if (cover_ != o.cover_ || degree_ != o.degree_ || !(coeff_ == o.coeff_))
        throw CechError("Mismatch: total cochain addition");
    TotalCochain out(*this);
    for (const auto& [p, piece] : o.pieces_)
        out.set_piece(out.piece_or_zero(p) + piece);
    return out;
}

TotalCochain TotalCochain::operator-(const TotalCochain& o) const
{
    TotalCochain neg(o.cover_, o.degree_, o.coeff_);
    for (const auto& [p, piece] : o.pieces_)
        neg.set_piece(-piece);
    return *this + neg;
}

TotalCochain total_differential(const TotalCochain& c)
{
    TotalCochain out(c.cover(), c.total_degree() + 1, c.coeff());
    for (const auto& [p, piece] : c.pieces()) {
        CechCochain dp = cech_delta(piece);
        if (!dp.is_zero())
            out.set_piece(out.piece_or_zero(p + 1) + dp);
        CechCochain dd = form_coboundary(piece);
        if (p % 2 == 1)
            dd = -dd;
        if (!dd.is_zero())
            out.set_piece(out.piece_or_zero(p) + dd);
    }
    return out;
}

// --- solving -----------------------------------------------------------------

namespace {

// flat basis of (tuple, simplex) pairs for form-valued Čech degree p, inner
// degree q
struct FormBasis {
    std::vector<std::pair<Simplex, Simplex>> entries;
    std::map<std::pair<Simplex, Simplex>, int> index;

    FormBasis(const Cover& cover, int p, int q)
    {
        const auto& nerve = *cover.nerve();
        const auto& base = *cover.base();
        for (const auto& t : nerve.simplices(p))
            for (const auto& s : base.simplices(q))
                if (cover.simplex_in_tuple(s, t)) {
                    index[{t, s}] = static_cast<int>(entries.size());
                    entries.emplace_back(t, s);
                }
    }
    int size() const { return static_cast<int>(entries.size()); }
};

RatVec form_to_vec(const CechCochain& c, const FormBasis& basis)
{
    RatVec v(basis.size(), 0);
    for (const auto& [t, f] : c.form_values())
        for (const auto& [s, val] : f.values())
            v[basis.index.at({t, s})] = val;
    return v;
}

CechCochain vec_to_form(const CoverPtr& cover, int p, int q, const CoeffGroup& g,
                        const FormBasis& basis, const RatVec& v)
{
    CechCochain out = CechCochain::forms(cover, p, q, g);
    std::map<Simplex, Cochain> per_tuple;
    for (int i = 0; i < basis.size(); ++i) {
        if (v[i] == 0)
            continue;
        const auto& [t, s] = basis.entries[i];
        auto it = per_tuple.find(t);
        if (it == per_tuple.end())
            it = per_tuple.emplace(t, Cochain(cover->base(), q, g)).first;
        it->second.set(s, v[i]);
    }
    for (const auto& [t, f] : per_tuple)
        out.set_form(t, f);
    return out;
}

std::string first_nonzero_tuple(const CechCochain& c)
{
    if (!c.element_values().empty())
        return tuple_name(c.element_values().begin()->first);
    if (!c.form_values().empty())
        return tuple_name(c.form_values().begin()->first);
    return "()";
}

DeltaSolveResult solve_delta_cech_elements(const CechCochain& x)
{
    DeltaSolveResult res;
    Cochain nx = cech_as_nerve_cochain(x);
    auto r = solve_coboundary(nx);
    if (r.ok()) {
        res.cech_solution = nerve_cochain_as_cech(x.cover(), *r.solution);
        return res;
    }
    CechObstruction ob;
    ob.description = "NotExact: obstruction functional on nerve " +
                     std::to_string(x.degree()) + "-simplices";
    ob.functional = r.obstruction->functional;
    ob.modulus = r.obstruction->modulus;
    ob.value = r.obstruction->value;
    res.obstruction = std::move(ob);
    return res;
}

DeltaSolveResult solve_delta_cech_forms(const CechCochain& x)
{
    DeltaSolveResult res;
    const auto& cover = *x.cover();
    int p = x.degree(), q = x.inner().form_degree;
    FormBasis rows(cover, p, q);
    FormBasis cols(cover, p - 1, q);
    IntMat A(rows.size(), cols.size());
    for (int r = 0; r < rows.size(); ++r) {
        const auto& [t, s] = rows.entries[r];
        for (int j = 0; j < static_cast<int>(t.size()); ++j) {
            Simplex sub = face_of(t, j);
            // s lies in U_t which is contained in U_sub
            A.a[r][cols.index.at({sub, s})] += (j % 2 == 0) ? 1 : -1;
        }
    }
    auto r = solve_over_coeff(A, form_to_vec(x, rows), x.inner().coeff);
    if (r.ok()) {
        res.cech_solution =
            vec_to_form(x.cover(), p - 1, q, x.inner().coeff, cols, *r.solution);
        return res;
    }
    CechObstruction ob;
    ob.description = "NotExact: obstruction functional on (tuple, simplex) pairs";
    ob.functional = r.obstruction->functional;
    ob.modulus = r.obstruction->modulus;
    ob.value = r.obstruction->value;
    res.obstruction = std::move(ob);
    return res;
}

DeltaSolveResult solve_delta_simplicial(const CechCochain& x)
{
    DeltaSolveResult res;
    if (!x.inner().is_form)
        throw CechError("simplicial mode needs form values");
    CechCochain dx = form_coboundary(x);
    if (!dx.is_zero())
        throw CechError("NotClosed: d x != 0 at tuple " + first_nonzero_tuple(dx));
    CechCochain out = CechCochain::forms(x.cover(), x.degree(), x.inner().form_degree - 1,
                                         x.inner().coeff);
    if (x.inner().form_degree == 0)
        throw CechError("cannot solve d y = x for x of form degree 0");
    for (const auto& [t, f] : x.form_values()) {
        auto inter = x.cover()->intersection(t);
        Cochain local(inter, f.degree(), f.coeff());
        for (const auto& [s, v] : f.values())
            local.set(s, v);
        auto r = solve_coboundary(local);
        if (!r.ok()) {
            CechObstruction ob;
            ob.description = "NotExact: d-solve failed on intersection " + tuple_name(t);
            ob.functional = r.obstruction->functional;
            ob.modulus = r.obstruction->modulus;
            ob.value = r.obstruction->value;
            res.obstruction = std::move(ob);
            return res;
        }
        Cochain back(x.cover()->base(), r.solution->degree(), f.coeff());
        for (const auto& [s, v] : r.solution->values())
            back.set(s, v);
        out.set_form(t, back);
    }
    res.cech_solution = std::move(out);
    return res;
}

} // namespace

DeltaSolveResult solve_delta(const CechCochain& x, DeltaMode mode)
{
    switch (mode) {
    case DeltaMode::Cech: {
        CechCochain dx = cech_delta(x);
        if (!dx.is_zero())
            throw CechError("NotClosed: delta x != 0 at tuple " + first_nonzero_tuple(dx));
        if (x.degree() == 0) {
            // the image of delta from degree -1 is zero
            DeltaSolveResult res;
            if (x.is_zero())
                throw CechError("solve at Čech degree >= 1 (no degree -1 cochains)");
            CechObstruction ob;
            ob.description = "NotExact: nonzero Čech 0-cocycle";
            res.obstruction = std::move(ob);
            return res;
        }
        return x.inner().is_form ? solve_delta_cech_forms(x) : solve_delta_cech_elements(x);
    }
    case DeltaMode::Simplicial:
        return solve_delta_simplicial(x);
    case DeltaMode::Total: {
        TotalCochain tx(x.cover(), x.degree() + x.inner().form_degree, x.inner().coeff);
        tx.set_piece(x.inner().is_form ? x : embed_constants(x));
        return solve_delta_total(tx);
    }
    }
    throw CechError("bad mode");
}

DeltaSolveResult solve_delta_total(const TotalCochain& x)
{
    DeltaSolveResult res;
    if (x.coeff().tag() != CoeffTag::Rationals)
        throw CechError("total mode solves over Rationals");
    TotalCochain dx = total_differential(x);
    if (!dx.is_zero())
        throw CechError("NotClosed: D x != 0");

    const auto& cover = *x.cover();
    int n = x.total_degree();
    if (n == 0) {
        if (x.is_zero())
            throw CechError("solve at total degree >= 1");
        res.obstruction = CechObstruction{"NotExact: nonzero total 0-cocycle", {}, 0, 0};
        return res;
    }

    std::vector<FormBasis> row_bases, col_bases;
    std::vector<int> row_offset, col_offset;
    int rows = 0, cols = 0;
    for (int p = 0; p <= n; ++p) {
        row_bases.emplace_back(cover, p, n - p);
        row_offset.push_back(rows);
        rows += row_bases.back().size();
    }
    for (int p = 0; p <= n - 1; ++p) {
        col_bases.emplace_back(cover, p, n - 1 - p);
        col_offset.push_back(cols);
        cols += col_bases.back().size();
    }

    RatMat A(rows, cols);
    RatVec b(rows, 0);
    for (int p = 0; p <= n; ++p) {
        const auto& rb = row_bases[p];
        CechCochain xp = x.piece_or_zero(p);
        for (int r = 0; r < rb.size(); ++r) {
            const auto& [t, s] = rb.entries[r];
            int row = row_offset[p] + r;
            b[row] = xp.form_at(t).value(s);
            // delta part: from (p-1, n-p)
            if (p >= 1) {
                const auto& cb = col_bases[p - 1];
                for (int j = 0; j < static_cast<int>(t.size()); ++j) {
                    auto key = std::make_pair(face_of(t, j), s);
                    auto it = cb.index.find(key);
                    if (it != cb.index.end())
                        A.a[row][col_offset[p - 1] + it->second] +=
                            (j % 2 == 0) ? 1 : -1;
                }
            }
            // (-1)^p d part: from (p, n-p-1)
            if (p <= n - 1 && n - p - 1 >= 0) {
                const auto& cb = col_bases[p];
                int sgn_p = (p % 2 == 0) ? 1 : -1;
                for (int j = 0; j < static_cast<int>(s.size()); ++j) {
                    auto key = std::make_pair(t, face_of(s, j));
                    auto it = cb.index.find(key);
                    if (it != cb.index.end())
                        A.a[row][col_offset[p] + it->second] +=
                            Rat(sgn_p * ((j % 2 == 0) ? 1 : -1));
                }
            }
        }
    }

    auto sol = solve_rational(A, b);
    if (!sol) {
        for (const auto& u : left_kernel_rational(A)) {
            Rat val = 0;
            for (int i = 0; i < rows; ++i)
                val += u[i] * b[i];
            if (val != 0) {
                Int den = 1;
                for (const auto& e : u)
                    den = lcm(den, rat_den(e));
                CechObstruction ob;
                ob.description = "NotExact: functional on the total-degree-" +
                                 std::to_string(n) + " basis";
                ob.functional.resize(rows);
                for (int i = 0; i < rows; ++i)
                    ob.functional[i] = rat_num(u[i] * Rat(den));
                ob.modulus = 0;
                ob.value = val * Rat(den);
                res.obstruction = std::move(ob);
                return res;
            }
        }
        throw CechError("total solve failed without certificate");
    }
    TotalCochain y(x.cover(), n - 1, x.coeff());
    for (int p = 0; p <= n - 1; ++p) {
        RatVec part(col_bases[p].size());
        for (int i = 0; i < col_bases[p].size(); ++i)
            part[i] = (*sol)[col_offset[p] + i];
        CechCochain piece =
            vec_to_form(x.cover(), p, n - 1 - p, x.coeff(), col_bases[p], part);
        if (!piece.is_zero())
            y.set_piece(piece);
    }
    res.total_solution = std::move(y);
    return res;
}

CechCochain homotopy_solve_delta(const CechCochain& x)
{
    if (!x.inner().is_form)
        throw CechError("the contracting homotopy needs form values");
    if (x.degree() < 1)
        throw CechError("the contracting homotopy needs Čech degree >= 1");
    CechCochain dx = cech_delta(x);
    if (!dx.is_zero())
        throw CechError("NotClosed: delta x != 0 at tuple " + first_nonzero_tuple(dx));

    const auto& cover = *x.cover();
    const auto& nerve = *cover.nerve();
    int p = x.degree(), q = x.inner().form_degree;
    CechCochain out = CechCochain::forms(x.cover(), p - 1, q, x.inner().coeff);
    for (const auto& t : nerve.simplices(p - 1)) {
        Cochain f(cover.base(), q, x.inner().coeff);
        for (const auto& s : cover.base()->simplices(q)) {
            if (!cover.simplex_in_tuple(s, t))
                continue;
            std::vector<int> idx;
            idx.push_back(cover.choice(s));
            idx.insert(idx.end(), t.begin(), t.end());
            Rat v = x.form_entry_alternating(idx, s);
            if (v != 0)
                f.set(s, v);
        }
        out.set_form(t, f);
    }
    return out;
}

Cochain glue_global(const CechCochain& x)
{
    if (!x.inner().is_form || x.degree() != 0)
        throw CechError("glue_global expects a (0, q) form piece");
    const auto& cover = *x.cover();
    int q = x.inner().form_degree;
    Cochain out(cover.base(), q, x.inner().coeff);
    for (const auto& s : cover.base()->simplices(q)) {
        bool have = false;
        Rat val = 0;
        for (int m : cover.membership(s)) {
            Rat v = x.form_at({m}).value(s);
            if (!have) {
                val = v;
                have = true;
            } else if (v != val) {
                throw CechError("glue_global: member values disagree on an overlap");
            }
        }
        if (have && val != 0)
            out.set(s, val);
    }
    return out;
}

CechCochain spread_global(const CoverPtr& cover, const Cochain& c)
{
    if (c.complex() != cover->base())
        throw CechError("spread_global: cochain does not live on the base");
    CechCochain out = CechCochain::forms(cover, 0, c.degree(), c.coeff());
    for (int m = 0; m < cover->size(); ++m) {
        Cochain f(cover->base(), c.degree(), c.coeff());
        for (const auto& [s, v] : c.values())
            if (cover->simplex_in_tuple(s, {m}))
                f.set(s, v);
        out.set_form({m}, f);
    }
    return out;
}

CechCochain weighted_average(const std::vector<Cochain>& psi, const CechCochain& x)
{
    if (!x.inner().is_form)
        throw CechError("weighted_average needs form values");
    if (x.degree() < 1)
        throw CechError("weighted_average lowers the Čech degree");
    const auto& cover = *x.cover();
    if (static_cast<int>(psi.size()) != cover.size())
        throw CechError("one weight cochain per member required");
    int p = x.degree(), q = x.inner().form_degree;
    CechCochain out = CechCochain::forms(x.cover(), p - 1, q, x.inner().coeff);
    for (const auto& t : cover.nerve()->simplices(p - 1)) {
        Cochain f(cover.base(), q, x.inner().coeff);
        for (const auto& s : cover.base()->simplices(q)) {
            if (!cover.simplex_in_tuple(s, t))
                continue;
            Simplex front = {s.front()};
            Rat acc = 0;
            for (int g = 0; g < cover.size(); ++g) {
                Rat w = psi[g].value(front);
                if (w == 0)
                    continue;
                std::vector<int> idx;
                idx.push_back(g);
                idx.insert(idx.end(), t.begin(), t.end());
                acc += w * x.form_entry_alternating(idx, s);
            }
            if (acc != 0)
                f.set(s, acc);
        }
        out.set_form(t, f);
    }
    return out;
}

BranchResult solve_integer_branches(const CechCochain& x)
{
    BranchResult out;
    if (!x.inner().is_form || x.inner().form_degree != 1)
        throw CechError("branch solving expects inner degree 1");
    CechCochain branches =
        CechCochain::forms(x.cover(), x.degree(), 0, CoeffGroup::integers());
    for (const auto& t : x.cover()->nerve()->simplices(x.degree())) {
        Cochain f = x.form_at(t);
        auto inter = x.cover()->intersection(t);
        Cochain local(inter, 1, CoeffGroup::integers());
        for (const auto& [s, v] : f.values()) {
            if (!is_integer(v)) {
                out.failure = "branch value not integral on tuple " +
                              std::to_string(t.front());
                return out;
            }
            local.set(s, v);
        }
        auto r = solve_coboundary(local);
        if (!r.ok()) {
            out.failure = "no integer 0-cochain with the required coboundary";
            return out;
        }
        // normalize at the lowest vertex of the intersection
        Cochain n = *r.solution;
        Rat base = n.value({inter->vertices().front()});
        Cochain back(x.cover()->base(), 0, CoeffGroup::integers());
        for (const auto& vs : inter->simplices(0)) {
            Rat v = n.value(vs) - base;
            if (v != 0)
                back.set(vs, v);
        }
        branches.set_form(t, back);
    }
    out.branches = std::move(branches);
    return out;
}

CechCochain convert_coeff(const CechCochain& c, const CoeffGroup& target)
{
    const CoeffGroup& from = c.inner().coeff;
    auto map_value = [&](const Rat& v) -> Rat {
        if (from == target)
            return v;
        if (from.tag() == CoeffTag::Integers &&
            (target.tag() == CoeffTag::Rationals || target.tag() == CoeffTag::RationalsModOne))
            return v;
        if (from.tag() == CoeffTag::Cyclic && target.tag() == CoeffTag::RationalsModOne)
            return v / Rat(from.modulus());
        if (from.tag() == CoeffTag::Rationals && target.tag() == CoeffTag::RationalsModOne)
            return v;
        // canonical lift: stored representatives already lie in [0,1)
        if (from.tag() == CoeffTag::RationalsModOne && target.tag() == CoeffTag::Rationals)
            return v;
        throw CechError("unsupported coefficient conversion");
    };
    if (!c.inner().is_form) {
        CechCochain out = CechCochain::elements(c.cover(), c.degree(), target);
        for (const auto& [t, v] : c.element_values())
            out.set_element(t, map_value(v));
        return out;
    }
    CechCochain out =
        CechCochain::forms(c.cover(), c.degree(), c.inner().form_degree, target);
    for (const auto& [t, f] : c.form_values()) {
        Cochain g(c.cover()->base(), f.degree(), target);
        for (const auto& [s, v] : f.values())
            g.set(s, map_value(v));
        out.set_form(t, g);
    }
    return out;
}

ConnectingResult connecting_hom(const CechCochain& c, const CoeffSequence& seq)
{
    if (c.inner().is_form)
        throw CechError("connecting homomorphism acts on element-valued cochains");
    if (!(c.inner().coeff == seq.quot))
        throw CechError("Mismatch: cochain is not valued in the quotient group");
    CechCochain dc = cech_delta(c);
    if (!dc.is_zero())
        throw CechError("NotClosed: delta c != 0 at tuple " + first_nonzero_tuple(dc));

    CechCochain lift = CechCochain::elements(c.cover(), c.degree(), seq.mid);
    for (const auto& [t, v] : c.element_values())
        lift.set_element(t, seq.section(v));
    CechCochain dlift = cech_delta(lift);

    ConnectingResult out{CechCochain::elements(c.cover(), c.degree() + 1, seq.sub), false, {}};
    for (const auto& [t, v] : dlift.element_values())
        out.cocycle.set_element(t, seq.divide(v));
    assert(cech_delta(out.cocycle).is_zero());

    if (out.cocycle.degree() <= c.cover()->nerve()->dim()) {
        auto r = solve_delta(out.cocycle, DeltaMode::Cech);
        out.class_is_zero = r.ok();
        if (!r.ok())
            out.nonzero_evidence = r.obstruction;
    } else {
        out.class_is_zero = out.cocycle.is_zero();
    }
    return out;
}

bool classes_equal(const CechCochain& a, const CechCochain& b)
{
    if (a.cover() != b.cover() || a.degree() != b.degree() || !(a.inner() == b.inner()))
        throw CechError("Mismatch: class comparison needs matching bidegree/coefficients");
    CechCochain da = cech_delta(a), db = cech_delta(b);
    if (!da.is_zero() || !db.is_zero())
        throw CechError("NotClosed: class comparison needs cocycles");
    CechCochain diff = a - b;
    if (diff.is_zero())
        return true;
    if (a.degree() == 0)
        return false; // the image of delta in degree 0 is zero
    return solve_delta(diff, DeltaMode::Cech).ok();
}

} // namespace gerbecalc
