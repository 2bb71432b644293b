#include "gerbecalc/gerbe.hpp"

#include <algorithm>

namespace gerbecalc {

namespace {

std::string witness_tuple(const CechCochain& c)
{
    const auto* t = c.element_values().empty()
                        ? (c.form_values().empty() ? nullptr : &c.form_values().begin()->first)
                        : &c.element_values().begin()->first;
    if (!t)
        return "()";
    std::string s = "(";
    for (size_t i = 0; i < t->size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string((*t)[i]);
    }
    return s + ")";
}

} // namespace

CechCochain dd_cocycle(const GerbePresentation& P)
{
    CechCochain dp = cech_delta(P.product);
    if (!dp.is_zero())
        throw GerbeError("NonAssociativeProduct: delta p != 0 at " + witness_tuple(dp));
    return P.product + cech_delta(P.sections);
}

CentralExtensionData::CentralExtensionData(GroupPtr ghat, GroupPtr g,
                                           std::vector<int> projection,
                                           std::vector<int> kernel_elements,
                                           std::vector<int> section)
    : ghat_(std::move(ghat)),
      g_(std::move(g)),
      projection_(std::move(projection)),
      kernel_(std::move(kernel_elements)),
      section_(std::move(section))
{
    int nh = ghat_->order(), ng = g_->order();
    if (static_cast<int>(projection_.size()) != nh ||
        static_cast<int>(section_.size()) != ng)
        throw GerbeError("extension table sizes mismatch");
    for (int x = 0; x < nh; ++x)
        for (int y = 0; y < nh; ++y)
            if (projection_[ghat_->mul(x, y)] != g_->mul(projection_[x], projection_[y]))
                throw GerbeError("projection is not a homomorphism");
    std::vector<bool> hit(ng, false);
    for (int x = 0; x < nh; ++x)
        hit[projection_[x]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw GerbeError("projection is not surjective");

    int n = static_cast<int>(kernel_.size());
    std::vector<bool> in_kernel(nh, false);
    for (int a = 0; a < n; ++a) {
        if (projection_[kernel_[a]] != g_->identity())
            throw GerbeError("declared kernel element projects nontrivially");
        in_kernel[kernel_[a]] = true;
    }
    for (int x = 0; x < nh; ++x)
        if (projection_[x] == g_->identity() && !in_kernel[x])
            throw GerbeError("kernel list misses an element");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (ghat_->mul(kernel_[a], kernel_[b]) != kernel_[(a + b) % n])
                throw GerbeError("kernel list is not a cyclic parametrization");
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < nh; ++x)
            if (ghat_->mul(kernel_[a], x) != ghat_->mul(x, kernel_[a]))
                throw GerbeError("kernel is not central");
    for (int y = 0; y < ng; ++y)
        if (projection_[section_[y]] != y)
            throw GerbeError("section does not split the projection");
}

int CentralExtensionData::kernel_index(int x) const
{
    for (int a = 0; a < kernel_order(); ++a)
        if (kernel_[a] == x)
            return a;
    throw GerbeError("element is not in the kernel");
}

CentralExtensionData CentralExtensionData::with_section(std::vector<int> section) const
{
    return CentralExtensionData(ghat_, g_, projection_, kernel_, std::move(section));
}

CentralExtensionData CentralExtensionData::split(int n, const GroupPtr& g)
{
    auto zn = FiniteGroup::cyclic(n);
    auto ghat = FiniteGroup::direct_product(*zn, *g);
    int m = g->order();
    std::vector<int> proj(ghat->order());
    for (int a = 0; a < n; ++a)
        for (int y = 0; y < m; ++y)
            proj[a * m + y] = y;
    std::vector<int> kernel(n);
    for (int a = 0; a < n; ++a)
        kernel[a] = a * m;
    std::vector<int> section(m);
    for (int y = 0; y < m; ++y)
        section[y] = y;
    return CentralExtensionData(ghat, g, std::move(proj), std::move(kernel),
                                std::move(section));
}

CentralExtensionData CentralExtensionData::cyclic(int n, int m)
{
    auto ghat = FiniteGroup::cyclic(n * m);
    auto g = FiniteGroup::cyclic(m);
    std::vector<int> proj(n * m);
    for (int x = 0; x < n * m; ++x)
        proj[x] = x % m;
    std::vector<int> kernel(n);
    for (int a = 0; a < n; ++a)
        kernel[a] = a * m;
    std::vector<int> section(m);
    for (int y = 0; y < m; ++y)
        section[y] = y;
    return CentralExtensionData(ghat, g, std::move(proj), std::move(kernel),
                                std::move(section));
}

LiftingResult lifting_gerbe_cocycle(const CoverPtr& cover, const CentralExtensionData& ext,
                                    const std::map<Simplex, int>& tau)
{
    const auto& nerve = *cover->nerve();
    const FiniteGroup& G = *ext.quotient();
    const FiniteGroup& Ghat = *ext.ghat();

    for (const auto& [e, v] : tau) {
        if (e.size() != 2 || !nerve.contains(e))
            throw GerbeError("tau value on a non-edge of the nerve");
        if (v < 0 || v >= G.order())
            throw GerbeError("tau value out of range");
    }
    auto tau_at = [&](int i, int j) {
        int v = G.identity();
        Simplex e = {std::min(i, j), std::max(i, j)};
        auto it = tau.find(e);
        if (it != tau.end())
            v = it->second;
        return i < j ? v : G.inv(v);
    };
    for (const auto& t : nerve.simplices(2)) {
        int i = t[0], j = t[1], k = t[2];
        if (G.mul(tau_at(j, k), tau_at(i, j)) != tau_at(i, k))
            throw GerbeError("NotClosed: tau_jk tau_ij != tau_ik on a nerve triple");
    }

    LiftingResult out{
        CechCochain::elements(cover, 2, CoeffGroup::cyclic(ext.kernel_order())), false, {}};
    for (const auto& t : nerve.simplices(2)) {
        int i = t[0], j = t[1], k = t[2];
        int z = Ghat.mul(Ghat.mul(ext.section(tau_at(j, k)), ext.section(tau_at(i, j))),
                         Ghat.inv(ext.section(tau_at(i, k))));
        out.cocycle.set_element(t, Rat(ext.kernel_index(z)));
    }
    if (!cech_delta(out.cocycle).is_zero())
        throw GerbeError("lifting cocycle failed to close; extension data inconsistent");

    if (out.cocycle.degree() <= nerve.dim()) {
        auto r = solve_delta(out.cocycle, DeltaMode::Cech);
        out.class_is_zero = r.ok();
        if (!r.ok())
            out.evidence = r.obstruction;
    } else {
        out.class_is_zero = out.cocycle.is_zero();
    }
    return out;
}

// --- Deligne triples ----------------------------------------------------------

DeligneReport deligne_validate(const DeligneTriple& T)
{
    DeligneReport rep;
    if (T.g.inner().is_form || (T.g.inner().coeff.tag() != CoeffTag::RationalsModOne &&
                                T.g.inner().coeff.tag() != CoeffTag::Cyclic))
        throw GerbeError("g must be element-valued in Q/Z or Cyclic(n)");
    if (T.g.degree() != 2 || T.A.degree() != 1 || T.f.degree() != 0)
        throw GerbeError("triple degrees must be (2, 1, 0)");

    CechCochain dg = cech_delta(T.g);
    if (!dg.is_zero()) {
        rep.valid = false;
        rep.failures.push_back("cocycle condition: delta g != 0 at " + witness_tuple(dg));
    }

    auto branches = solve_integer_branches(cech_delta(T.A));
    if (!branches.branches) {
        rep.valid = false;
        rep.failures.push_back("dlog condition: " + branches.failure);
    } else {
        rep.branches = std::move(branches.branches);
    }

    CechCochain lhs = cech_delta(T.f);
    CechCochain rhs = form_coboundary(T.A);
    if (!(lhs == rhs)) {
        rep.valid = false;
        rep.failures.push_back("curvature condition: delta f != d A at " +
                               witness_tuple(lhs - rhs));
    }
    return rep;
}

CurvatureResult three_curvature(const DeligneTriple& T)
{
    auto rep = deligne_validate(T);
    if (!rep.valid)
        throw GerbeError("InvalidTriple: " + rep.failures.front());
    CurvatureResult out{glue_global(form_coboundary(T.f)), false, false};
    out.closed = coboundary_d(out.omega).is_zero();
    out.integral = pairs_integrally(out.omega);
    return out;
}

namespace {

// lift g + branches as rational 0-form functions per tuple
CechCochain log_branch_data(const DeligneTriple& T, const CechCochain& branches)
{
    CechCochain gq = convert_coeff(T.g, CoeffGroup::rationals_mod_one());
    CechCochain lift = convert_coeff(embed_constants(gq), CoeffGroup::rationals());
    return lift + convert_coeff(branches, CoeffGroup::rationals());
}

// constants of a (p, 0) piece: each tuple's function must be constant; the
// result is element-valued over the given group
CechCochain constants_of(const CechCochain& x, const CoeffGroup& target)
{
    CechCochain out = CechCochain::elements(x.cover(), x.degree(), target);
    for (const auto& t : x.cover()->nerve()->simplices(x.degree())) {
        auto inter = x.cover()->intersection(t);
        if (!inter->connected())
            throw GerbeError("intersection not connected; class extraction needs goodness");
        Cochain f = x.form_at(t);
        bool have = false;
        Rat val = 0;
        for (const auto& vs : inter->simplices(0)) {
            Rat v = f.value(vs);
            if (!have) {
                val = v;
                have = true;
            } else if (v != val) {
                throw GerbeError("branch data not constant on a connected intersection");
            }
        }
        if (have && val != 0)
            out.set_element(t, val);
    }
    return out;
}

} // namespace

DeligneClassData deligne_class_cocycle(const DeligneTriple& T)
{
    auto rep = deligne_validate(T);
    if (!rep.valid)
        throw GerbeError("InvalidTriple: " + rep.failures.front());
    DeligneClassData out{*rep.branches,
                         CechCochain::elements(T.cover(), 3, CoeffGroup::integers())};
    CechCochain ell = log_branch_data(T, out.branches);
    out.nu = constants_of(cech_delta(ell), CoeffGroup::integers());
    if (!cech_delta(out.nu).is_zero())
        throw GerbeError("class cocycle failed to close");
    return out;
}

// --- pipeline -------------------------------------------------------------------

PipelineResult curving_pipeline(const PipelineInput& in)
{
    const CoverPtr& cover = in.A.cover();
    if (in.A.degree() != 2 || in.A.inner().form_degree != 1 || in.F.degree() != 1 ||
        in.F.inner().form_degree != 2 || in.F.cover() != cover)
        throw GerbeError("pipeline expects A at (2,1) and F at (1,2) over one cover");
    std::string bad = check_partition(*cover, in.psi);
    if (!bad.empty())
        throw GerbeError(bad);

    PipelineResult out{CechCochain::forms(cover, 1, 1, CoeffGroup::rationals()),
                       CechCochain::forms(cover, 1, 2, CoeffGroup::rationals()),
                       CechCochain::forms(cover, 0, 2, CoeffGroup::rationals()),
                       Cochain(cover->base(), 3, CoeffGroup::rationals()),
                       {},
                       true};
    auto record = [&](bool ok, const std::string& what) {
        out.verified.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        out.all_ok = out.all_ok && ok;
    };

    record(cech_delta(in.A).is_zero(), "(1) delta A = 0");
    record(cech_delta(in.F) == form_coboundary(in.A), "(3) delta F = d A");
    record(form_coboundary(in.F).is_zero(), "(3') curvatures are closed: d F = 0");

    out.B = weighted_average(in.psi, in.A);
    record(cech_delta(out.B) == in.A, "(2) delta B = A");

    out.Fhat = in.F - form_coboundary(out.B);
    record(cech_delta(out.Fhat).is_zero(), "(4) delta Fhat = 0");

    out.mu = weighted_average(in.psi, out.Fhat);
    record(cech_delta(out.mu) == out.Fhat, "(5) delta mu = Fhat");

    CechCochain dmu = form_coboundary(out.mu);
    bool glued = true;
    try {
        out.omega = glue_global(dmu);
    } catch (const CechError&) {
        glued = false;
    }
    record(glued, "(5') d mu glues to a global three-form");
    if (glued)
        record(coboundary_d(out.omega).is_zero(), "(5'') d omega = 0");
    return out;
}

// --- trivialization ---------------------------------------------------------------

namespace {

struct AttemptResult {
    CechCochain E;  // forms (1, 0) rational: lift(h) + m
    CechCochain kp; // forms (0, 1) rational
    Cochain phi;    // global 2-cochain
};

// The affine solve for a given integer correction c: reproduces h-branches,
// the k-primitive and the residual global 2-cochain.
AttemptResult run_attempt(const DeligneTriple& T, const CechCochain& ell,
                          const CechCochain& h, const CechCochain& c_elems)
{
    CechCochain ellp = ell - convert_coeff(embed_constants(c_elems), CoeffGroup::rationals());
    CechCochain lift_h = convert_coeff(
        embed_constants(convert_coeff(h, CoeffGroup::rationals_mod_one())),
        CoeffGroup::rationals());
    CechCochain r = ellp - cech_delta(lift_h);
    // r is integer-valued: the mod-1 parts of ellp and of delta(lift h) both
    // equal g and cancel
    for (const auto& [t, f] : r.form_values())
        for (const auto& [s, v] : f.values())
            if (!is_integer(v))
                throw GerbeError("internal: branch correction is not integral");
    CechCochain m = homotopy_solve_delta(r);
    CechCochain E = lift_h + m;
    CechCochain Atilde = T.A - form_coboundary(E);
    CechCochain kp = homotopy_solve_delta(Atilde);
    CechCochain ftilde = T.f - form_coboundary(kp);
    return AttemptResult{E, kp, glue_global(ftilde)};
}

} // namespace

TrivializeResult trivialize_deligne(const DeligneTriple& T)
{
    TrivializeResult out;
    auto rep = deligne_validate(T);
    if (!rep.valid)
        throw GerbeError("InvalidTriple: " + rep.failures.front());

    // f = dk forces the three-curvature to vanish identically
    Cochain omega = glue_global(form_coboundary(T.f));
    if (!omega.is_zero()) {
        out.obstruction = TrivializeObstruction{
            "curvature", "three-curvature is nonzero; f = dk is impossible", {}, {}, omega};
        return out;
    }

    // integer class nu must be exact over Z
    DeligneClassData cls{*rep.branches, CechCochain::elements(T.cover(), 3, CoeffGroup::integers())};
    CechCochain ell = log_branch_data(T, cls.branches);
    cls.nu = constants_of(cech_delta(ell), CoeffGroup::integers());
    DeltaSolveResult csolve;
    if (cls.nu.degree() > T.cover()->nerve()->dim()) {
        csolve.cech_solution = CechCochain::elements(T.cover(), 2, CoeffGroup::integers());
    } else {
        csolve = solve_delta(cls.nu, DeltaMode::Cech);
    }
    if (!csolve.ok()) {
        out.obstruction = TrivializeObstruction{
            "integer-class", "the integer class of the triple is nonzero", cls.nu,
            csolve.obstruction, {}};
        return out;
    }

    // torsion part: solve delta h = g over Q/Z
    CechCochain gq = convert_coeff(T.g, CoeffGroup::rationals_mod_one());
    auto hsolve = solve_delta(gq, DeltaMode::Cech);
    if (!hsolve.ok()) {
        out.obstruction = TrivializeObstruction{
            "torsion-class", "delta h = g has no solution over Q/Z", gq,
            hsolve.obstruction, {}};
        return out;
    }
    CechCochain h = *hsolve.cech_solution;

    const auto& nerve = *T.cover()->nerve();
    AttemptResult first = run_attempt(T, ell, h, *csolve.cech_solution);

    CechCochain c_final = *csolve.cech_solution;
    Cochain z_final(T.cover()->base(), 1, CoeffGroup::rationals());
    if (!first.phi.is_zero()) {
        // absorb the residual: phi = d z + transgression(zeta) with zeta an
        // integer cocycle shift of c
        IntMat d2 = coboundary_matrix(nerve, 2);
        auto zbasis = kernel_integer(d2);

        auto transgress = [&](const CechCochain& zeta) {
            CechCochain mz = homotopy_solve_delta(
                convert_coeff(embed_constants(zeta), CoeffGroup::rationals()));
            CechCochain t1 = form_coboundary(mz);
            CechCochain t0 = homotopy_solve_delta(t1);
            return glue_global(form_coboundary(t0));
        };

        const auto& base = *T.cover()->base();
        int rows = base.count(2), cols1 = base.count(1);
        RatMat Ad(rows, cols1);
        {
            IntMat d1 = coboundary_matrix(base, 1);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols1; ++j)
                    Ad.a[i][j] = Rat(d1.a[i][j]);
        }
        RatMat Bt(rows, static_cast<int>(zbasis.size()));
        std::vector<CechCochain> zeta_basis;
        for (size_t b = 0; b < zbasis.size(); ++b) {
            CechCochain zeta = CechCochain::elements(T.cover(), 2, CoeffGroup::integers());
            const auto& simps = nerve.simplices(2);
            for (size_t i = 0; i < simps.size(); ++i)
                if (zbasis[b][i] != 0)
                    zeta.set_element(simps[i], Rat(zbasis[b][i]));
            zeta_basis.push_back(zeta);
            Cochain tz = transgress(zeta);
            for (int i = 0; i < rows; ++i)
                Bt.a[i][b] = tz.value(base.simplices(2)[i]);
        }
        RatVec phi_vec = cochain_to_vec(first.phi);
        auto mixed = solve_mixed(Ad, Bt, phi_vec);
        if (!mixed.ok()) {
            CechObstruction ev;
            ev.description = "flat class functional on base 2-simplices";
            ev.functional = mixed.obstruction->functional;
            ev.modulus = mixed.obstruction->modulus;
            ev.value = mixed.obstruction->value;
            out.obstruction = TrivializeObstruction{
                "flat-class", "residual flat class is not integral", {}, ev, {}};
            return out;
        }
        for (size_t b = 0; b < zbasis.size(); ++b)
            if (mixed.solution->second[b] != 0)
                c_final = c_final +
                          zeta_basis[b].scaled(Rat(mixed.solution->second[b]));
        z_final = vec_to_cochain(T.cover()->base(), 1, CoeffGroup::rationals(),
                                 mixed.solution->first);
    }

    AttemptResult fin = run_attempt(T, ell, h, c_final);
    CechCochain k = fin.kp + spread_global(T.cover(), z_final);

    // verify the three equations exactly
    if (!(cech_delta(h) == gq))
        throw GerbeError("internal: delta h != g after solving");
    if (!(T.A == cech_delta(k) + form_coboundary(fin.E)))
        throw GerbeError("internal: A != delta k + d(lift h + m)");
    if (!(T.f == form_coboundary(k)))
        throw GerbeError("internal: f != d k");

    out.trivialization = DeligneTrivialization{h, k, fin.E};
    return out;
}

// --- exact constructions ----------------------------------------------------------

DeligneTriple deligne_from_integer_class(const CoverPtr& cover, const CechCochain& nu)
{
    if (nu.inner().is_form || nu.degree() != 3 ||
        nu.inner().coeff.tag() != CoeffTag::Integers)
        throw GerbeError("expected an integer Čech 3-cocycle");
    if (!cech_delta(nu).is_zero())
        throw GerbeError("NotClosed: nu is not a cocycle");

    DeligneTriple T(cover, CoeffGroup::rationals_mod_one());
    CechCochain iota = convert_coeff(embed_constants(nu), CoeffGroup::rationals());
    CechCochain n = homotopy_solve_delta(iota); // forms (2,0), integer values
    T.A = homotopy_solve_delta(form_coboundary(n));
    T.f = homotopy_solve_delta(form_coboundary(T.A));
    return T;
}

DeligneTriple deligne_coboundary(const CechCochain& h, const CechCochain& k,
                                 const CechCochain& m)
{
    if (h.inner().is_form || h.degree() != 1 ||
        h.inner().coeff.tag() != CoeffTag::RationalsModOne)
        throw GerbeError("h must be a Q/Z-valued Čech 1-cochain");
    if (!k.inner().is_form || k.degree() != 0 || k.inner().form_degree != 1)
        throw GerbeError("k must be a (0,1) form cochain");
    if (!m.inner().is_form || m.degree() != 1 || m.inner().form_degree != 0 ||
        m.inner().coeff.tag() != CoeffTag::Integers)
        throw GerbeError("m must be integer (1,0) branch data");

    DeligneTriple T(h.cover(), CoeffGroup::rationals_mod_one());
    T.g = cech_delta(h);
    CechCochain E = convert_coeff(embed_constants(h), CoeffGroup::rationals()) +
                    convert_coeff(m, CoeffGroup::rationals());
    T.A = cech_delta(k) + form_coboundary(E);
    T.f = form_coboundary(k);
    return T;
}

} // namespace gerbecalc
